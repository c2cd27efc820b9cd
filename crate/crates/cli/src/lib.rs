//! File formats and the `qq` command line for quantum quivers.
//!
//! [`run`] is the whole command surface; the binary only forwards
//! `std::env::args` and the standard streams to it, so tests drive it
//! in-process. Exit codes: 0 for success or an affirmative verdict, 1 for a
//! negative or undecided verdict, 2 for usage, IO and parse errors.
#![forbid(unsafe_code)]

mod expr;
mod graphfile;
mod json;
mod lines;
mod qqfile;

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use qquiver::lpa::{classical_lpa, compare_classical, emit_matrix_form, generate_presentation};
use qquiver::quiver::Completeness;
use qquiver::relcheck::verify_identities;
use qquiver::vmonoid::{monoid_eq, monoid_presentation, EqOptions, Verdict};
use qquiver::{DirectedGraph, QuantumQuiver};

pub use expr::{parse_element, ExprError};
pub use graphfile::{emit_graph, parse_graph};
pub use json::{lpa as lpa_json, monoid as monoid_json, relcheck as relcheck_json};
pub use lines::{Location, ParseError};
pub use qqfile::{emit_qq, parse_qq};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qq", version, about = "Exact computations on quantum quivers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DiagramArg {
    Dot,
    Tikz,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LpaFormat {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse a .qq file and report its shape.
    Validate { file: PathBuf },
    /// Block sizes, order tables and derived properties.
    Info { file: PathBuf },
    /// Decide completeness: r*s(1_v) = 1 for every vertex block.
    Complete { file: PathBuf },
    /// Check that every vertex size divides the total vertex size.
    Divcheck { file: PathBuf },
    /// Search for a weak isomorphism between two quivers.
    WeakIso {
        a: PathBuf,
        b: PathBuf,
    },
    /// Render the quiver diagram.
    Diagram {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "dot")]
        format: DiagramArg,
    },
    /// Generators and relations of the Leavitt path algebra.
    Lpa {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: LpaFormat,
    },
    /// The relations in block-matrix form.
    LpaMatrix { file: PathBuf },
    /// Compare with the classical presentation of the underlying graph.
    LpaCompare { file: PathBuf },
    /// Presentation of the V-monoid.
    Monoid {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide equality of two V-monoid elements, e.g. `--lhs "8I"`.
    MonoidEq {
        file: PathBuf,
        #[arg(long)]
        lhs: String,
        #[arg(long)]
        rhs: String,
        #[arg(long, default_value_t = EqOptions::default().depth)]
        depth: usize,
    },
    /// Check the identities AB, BA, ABA = A, BAB = B for the witness matrices.
    VerifyThm4 {
        file: PathBuf,
        /// A vertex block id; defaults to the first vertex of a non-sink class.
        #[arg(long)]
        class: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Convert a graph file to a commutative .qq file.
    FromGraph { file: PathBuf },
    /// Convert a commutative .qq file to a graph file.
    ToGraph { file: PathBuf },
}

/// An error that ends the command with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<QuantumQuiver, Failure> {
    parse_qq(&read(path)?).map_err(|e| Failure(format!("{}:{e}", path.display())))
}

fn load_graph(path: &Path) -> Result<DirectedGraph, Failure> {
    parse_graph(&read(path)?).map_err(|e| Failure(format!("{}:{e}", path.display())))
}

/// Runs one command line (including the program name) and returns the exit
/// code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Validate { file } => {
            let q = load(&file)?;
            writeln!(
                out,
                "valid: {} vertex blocks, {} edge blocks",
                q.vertex_shape().len(),
                q.edge_shape().len()
            )?;
            Ok(EXIT_OK)
        }
        Command::Info { file } => info(&load(&file)?, out),
        Command::Complete { file } => {
            let q = load(&file)?;
            if !q.edge_shape().is_commutative() {
                writeln!(err, "note: decided for the given placement; other placements of the same orders may differ")?;
            }
            match q.completeness() {
                Completeness::Complete => {
                    writeln!(out, "complete")?;
                    Ok(EXIT_OK)
                }
                Completeness::NotComplete { vertex } => {
                    writeln!(out, "not complete: r*s(1) differs from 1 at vertex {}", q.vertex_shape().id(vertex))?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Divcheck { file } => {
            let q = load(&file)?;
            let b0 = q.vertex_shape();
            match q.divisibility_check() {
                Ok(()) => {
                    writeln!(out, "divisible: every size divides {}", b0.total_size())?;
                    Ok(EXIT_OK)
                }
                Err(v) => {
                    writeln!(
                        out,
                        "not divisible: block {} of size {} does not divide {}",
                        b0.id(v),
                        b0.size(v),
                        b0.total_size()
                    )?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::WeakIso { a, b } => {
            let (qa, qb) = (load(&a)?, load(&b)?);
            match qa.weak_iso(&qb) {
                Some(w) => {
                    writeln!(out, "weakly isomorphic")?;
                    for (x, y) in &w.vertex_bijection {
                        writeln!(out, "  vertex {x} -> {y}")?;
                    }
                    for (x, y) in &w.edge_bijection {
                        writeln!(out, "  edge {x} -> {y}")?;
                    }
                    if w.full_isomorphism {
                        writeln!(out, "isomorphic (commutative edge algebra)")?;
                    }
                    Ok(EXIT_OK)
                }
                None => {
                    writeln!(out, "not weakly isomorphic")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::Diagram { file, format } => {
            let q = load(&file)?;
            let f = match format {
                DiagramArg::Dot => qquiver::quiver::DiagramFormat::Dot,
                DiagramArg::Tikz => qquiver::quiver::DiagramFormat::Tikz,
            };
            out.write_all(q.diagram(f).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::Lpa { file, format } => {
            let p = generate_presentation(&load(&file)?);
            match format {
                LpaFormat::Json => writeln!(out, "{}", serde_json::to_string_pretty(&lpa_json(&p))?)?,
                LpaFormat::Text => {
                    let gens: Vec<String> = p.generators().iter().map(|g| p.symbol_text(g)).collect();
                    writeln!(out, "generators ({}): {}", gens.len(), gens.join(", "))?;
                    writeln!(out, "relations ({}):", p.relations().len())?;
                    for r in p.relations() {
                        writeln!(out, "{}", p.relation_text(r))?;
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::LpaMatrix { file } => {
            out.write_all(emit_matrix_form(&load(&file)?).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::LpaCompare { file } => {
            let c = compare_classical(&load(&file)?)?;
            writeln!(
                out,
                "classical relations: {}, produced verbatim: {}, missing: {}",
                c.classical.relations().len(),
                c.matched.len(),
                c.missing.len()
            )?;
            for r in &c.missing {
                writeln!(out, "  missing {}", c.classical.relation_text(r))?;
            }
            if c.only_cross_edge_missing() {
                writeln!(out, "only cross-edge e* f relations are missing")?;
                Ok(EXIT_OK)
            } else {
                Ok(EXIT_NEGATIVE)
            }
        }
        Command::Monoid { file, json } => {
            let p = monoid_presentation(&load(&file)?);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&monoid_json(&p))?)?;
            } else {
                writeln!(out, "generators: {}", p.generators().join(", "))?;
                for r in p.relations() {
                    writeln!(out, "[{}] {}", json::tag_text(&p, r), p.relation_text(r))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::MonoidEq { file, lhs, rhs, depth } => {
            let p = monoid_presentation(&load(&file)?);
            let a = parse_element(&p, &lhs).map_err(|e| Failure(format!("--lhs: {e}")))?;
            let b = parse_element(&p, &rhs).map_err(|e| Failure(format!("--rhs: {e}")))?;
            let opts = EqOptions {
                depth,
                ..EqOptions::default()
            };
            match monoid_eq(&p, &a, &b, &opts)? {
                Verdict::Equal { path } => {
                    writeln!(out, "Equal")?;
                    for step in &path {
                        writeln!(out, "  {}", p.element_text(&step.0))?;
                    }
                    Ok(EXIT_OK)
                }
                Verdict::NotEqual(cert) => {
                    writeln!(out, "NotEqual")?;
                    writeln!(out, "  certificate {}", cert.describe(p.generators()))?;
                    Ok(EXIT_NEGATIVE)
                }
                Verdict::Inconclusive(why) => {
                    writeln!(out, "Inconclusive: {why}")?;
                    Ok(EXIT_NEGATIVE)
                }
            }
        }
        Command::VerifyThm4 { file, class, json } => verify(&load(&file)?, class.as_deref(), json, out),
        Command::FromGraph { file } => {
            let g = load_graph(&file)?;
            out.write_all(emit_qq(&QuantumQuiver::from_graph(&g)).as_bytes())?;
            Ok(EXIT_OK)
        }
        Command::ToGraph { file } => {
            let g = load(&file)?.to_graph()?;
            out.write_all(emit_graph(&g).as_bytes())?;
            Ok(EXIT_OK)
        }
    }
}

fn info(q: &QuantumQuiver, out: &mut dyn Write) -> Outcome {
    let (b0, b1) = (q.vertex_shape(), q.edge_shape());
    let sizes = |s: &qquiver::AlgebraShape| -> String {
        let parts: Vec<String> = s.blocks().iter().map(|b| format!("{}:{}", b.id, b.size)).collect();
        parts.join(" ")
    };
    writeln!(out, "vertices ({}): {}  dim {}", b0.len(), sizes(b0), b0.dimension())?;
    writeln!(out, "edges ({}): {}  dim {}", b1.len(), sizes(b1), b1.dimension())?;
    for (name, t) in [("source", q.source()), ("range", q.range())] {
        writeln!(out, "{name} orders:")?;
        for (v, a, n) in t.table().nonzero() {
            let placement = if t.is_canonical() {
                String::new()
            } else {
                format!("  offsets {:?}", t.offsets(v, a))
            };
            writeln!(out, "  {} -> {}: {n}{placement}", b0.id(v), b1.id(a))?;
        }
    }
    writeln!(out, "commutative: {}", q.is_commutative())?;
    writeln!(out, "disconnected: {}", q.is_disconnected())?;
    writeln!(out, "complete: {}", q.is_complete())?;
    writeln!(out, "divisible: {}", q.divisibility_check().is_ok())?;
    if let Ok(g) = q.to_graph() {
        let l = classical_lpa(&g);
        writeln!(out, "classical relations: {}", l.relations().len())?;
    }
    Ok(EXIT_OK)
}

fn verify(q: &QuantumQuiver, class: Option<&str>, as_json: bool, out: &mut dyn Write) -> Outcome {
    let b0 = q.vertex_shape();
    let vertex = match class {
        Some(id) => b0
            .index_of(id)
            .ok_or_else(|| Failure(format!("--class: unknown vertex `{id}`")))?,
        None => (0..b0.len())
            .find(|&v| (0..q.edge_shape().len()).any(|a| q.source().order(v, a) > 0))
            .ok_or_else(|| Failure("no vertex feeds an edge block; nothing to verify".into()))?,
    };
    let report = verify_identities(q, vertex)?;
    if as_json {
        writeln!(out, "{}", serde_json::to_string_pretty(&relcheck_json(q, &report))?)?;
    } else {
        let w = &report.witnesses;
        let class: Vec<&str> = w.class.iter().map(|&v| b0.id(v)).collect();
        writeln!(out, "class {{{}}}, {} copies, rules {:?}", class.join(", "), w.q, report.rules)?;
        writeln!(out, "A is {}x{}, B is {}x{}", w.a.rows(), w.a.cols(), w.b.rows(), w.b.cols())?;
        for r in &report.reports {
            writeln!(
                out,
                "{}: {} confirmed, {} inconclusive",
                r.identity,
                r.confirmed(),
                r.inconclusive()
            )?;
        }
    }
    Ok(if report.all_confirmed() { EXIT_OK } else { EXIT_NEGATIVE })
}
