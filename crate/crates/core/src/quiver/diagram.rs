//! DOT and TikZ renderings. Vertex blocks are circled nodes labelled by
//! size, edge blocks are borderless nodes labelled by size; each copy of
//! `v` in `s(α)` is an undirected line and each copy in `r(α)` an arrow
//! `α -> v`.

use alloc::format;
use alloc::string::String;
use core::fmt::Write;
use core::str::FromStr;

use super::{QuantumQuiver, QuiverError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagramFormat {
    Dot,
    Tikz,
}

impl FromStr for DiagramFormat {
    type Err = QuiverError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(DiagramFormat::Dot),
            "tikz" => Ok(DiagramFormat::Tikz),
            other => Err(QuiverError::UnsupportedFormat(other.into())),
        }
    }
}

pub(super) fn emit(q: &QuantumQuiver, format: DiagramFormat) -> String {
    match format {
        DiagramFormat::Dot => dot(q),
        DiagramFormat::Tikz => tikz(q),
    }
}

fn dot_id(prefix: &str, id: &str) -> String {
    let plain = id.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
    if plain {
        format!("{prefix}_{id}")
    } else {
        let escaped: String = id
            .chars()
            .flat_map(|c| match c {
                '"' | '\\' => ['\\', c].into_iter().take(2),
                c => [c, c].into_iter().take(1),
            })
            .collect();
        format!("\"{prefix}_{escaped}\"")
    }
}

fn dot(q: &QuantumQuiver) -> String {
    let (b0, b1) = (q.vertex_shape(), q.edge_shape());
    let mut out = String::from("digraph qq {\n");
    for b in b0.blocks() {
        let _ = writeln!(out, "  {} [shape=circle, label=\"{}\"];", dot_id("v", &b.id), b.size);
    }
    for b in b1.blocks() {
        let _ = writeln!(
            out,
            "  {} [shape=box, penwidth=0, label=\"{}\"];",
            dot_id("e", &b.id),
            b.size
        );
    }
    for a in 0..b1.len() {
        let e = dot_id("e", b1.id(a));
        for v in 0..b0.len() {
            let n = dot_id("v", b0.id(v));
            for _ in 0..q.source().order(v, a) {
                let _ = writeln!(out, "  {e} -> {n} [dir=none];");
            }
            for _ in 0..q.range().order(v, a) {
                let _ = writeln!(out, "  {e} -> {n};");
            }
        }
    }
    out.push_str("}\n");
    out
}

fn tex_escape(s: &str) -> String {
    let mut out = String::new();
    for c in s.chars() {
        match c {
            '_' | '#' | '$' | '%' | '&' | '{' | '}' => {
                out.push('\\');
                out.push(c);
            }
            c => out.push(c),
        }
    }
    out
}

fn tikz_name(prefix: &str, id: &str) -> String {
    // node names may not contain punctuation that TikZ parses
    let safe: String = id
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '-' })
        .collect();
    format!("{prefix}-{safe}")
}

/// Bend angles for `k` parallel curves, symmetric about a straight line.
fn bend(i: usize, k: usize) -> String {
    let twice = 2 * i as i64 - (k as i64 - 1);
    match twice {
        0 => String::new(),
        t if t > 0 => format!(", bend left={}", 10 * t),
        t => format!(", bend right={}", -10 * t),
    }
}

fn tikz(q: &QuantumQuiver) -> String {
    let (b0, b1) = (q.vertex_shape(), q.edge_shape());
    let mut out = String::new();
    out.push_str("\\begin{tikzpicture}[\n");
    out.push_str("  vertex/.style={circle, draw, thick, minimum size=7mm},\n");
    out.push_str("  edge/.style={rectangle, minimum size=7mm},\n");
    out.push_str("]\n");
    for (k, b) in b0.blocks().iter().enumerate() {
        let _ = writeln!(
            out,
            "  \\node[vertex, label=above:{{{}}}] ({}) at ({}, 2) {{{}}};",
            tex_escape(&b.id),
            tikz_name("v", &b.id),
            2 * k,
            b.size
        );
    }
    for (k, b) in b1.blocks().iter().enumerate() {
        let _ = writeln!(
            out,
            "  \\node[edge, label=below:{{{}}}] ({}) at ({}, 0) {{{}}};",
            tex_escape(&b.id),
            tikz_name("e", &b.id),
            2 * k + 1,
            b.size
        );
    }
    for a in 0..b1.len() {
        let e = tikz_name("e", b1.id(a));
        for v in 0..b0.len() {
            let n = tikz_name("v", b0.id(v));
            let s = q.source().order(v, a);
            for i in 0..s {
                let _ = writeln!(out, "  \\draw[-] ({e}) to[{}] ({n});", bend(i, s).trim_start_matches(", "));
            }
            let r = q.range().order(v, a);
            for i in 0..r {
                let _ = writeln!(out, "  \\draw[->] ({e}) to[{}] ({n});", bend(i, r).trim_start_matches(", "));
            }
        }
    }
    out.push_str("\\end{tikzpicture}\n");
    out
}
