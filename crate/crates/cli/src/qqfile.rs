//! The `.qq` format: block sizes, order tables and optional explicit
//! diagonal offsets.
//!
//! ```text
//! [vertices]
//! v 1
//! [edges]
//! e 1
//! [source]
//! v e 1
//! [range]
//! v e 1
//! ```
//!
//! Missing `[embedding.*]` sections mean the canonical embedding.

use std::collections::BTreeMap;
use std::fmt::Write;

use qquiver::{AlgebraShape, HomError, OrderTable, QuantumQuiver, RegularEmbedding};

use crate::lines::{self, arity, Line, Location, ParseError, Token};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Vertices,
    Edges,
    Source,
    Range,
    EmbeddingSource,
    EmbeddingRange,
}

impl Section {
    fn parse(name: &str) -> Option<Self> {
        Some(match name {
            "vertices" => Section::Vertices,
            "edges" => Section::Edges,
            "source" => Section::Source,
            "range" => Section::Range,
            "embedding.source" => Section::EmbeddingSource,
            "embedding.range" => Section::EmbeddingRange,
            _ => return None,
        })
    }

    fn map_name(self) -> &'static str {
        match self {
            Section::Source | Section::EmbeddingSource => "source",
            _ => "range",
        }
    }
}

struct Entry<'a> {
    vertex: Token<'a>,
    edge: Token<'a>,
    values: Vec<usize>,
}

#[derive(Default)]
struct Raw<'a> {
    headers: BTreeMap<Section, Location>,
    vertices: Vec<(Token<'a>, usize)>,
    edges: Vec<(Token<'a>, usize)>,
    entries: BTreeMap<Section, Vec<Entry<'a>>>,
}

fn block_shape(blocks: &[(Token<'_>, usize)], kind: &str) -> Result<AlgebraShape, ParseError> {
    let mut seen = BTreeMap::new();
    for (t, _) in blocks {
        if let Some(first) = seen.insert(t.text, t.at) {
            return Err(ParseError::new(
                t.at,
                format!("duplicate {kind} `{}` (first declared on line {})", t.text, first.line),
            ));
        }
    }
    AlgebraShape::new(blocks.iter().map(|(t, n)| (t.text, *n)))
        .map_err(|e| ParseError::new(blocks.first().map_or(Location { line: 1, col: 1 }, |b| b.0.at), e.to_string()))
}

fn collect(text: &str) -> Result<Raw<'_>, ParseError> {
    let mut raw = Raw::default();
    let mut current = None;
    for line in lines::lines(text)? {
        match line {
            Line::Header { name, at } => {
                let Some(section) = Section::parse(name) else {
                    return Err(ParseError::new(at, format!("unknown section `[{name}]`")));
                };
                if let Some(first) = raw.headers.insert(section, at) {
                    return Err(ParseError::new(
                        at,
                        format!("section `[{name}]` repeated (first on line {})", first.line),
                    ));
                }
                current = Some(section);
            }
            Line::Data(tokens) => {
                let Some(section) = current else {
                    return Err(ParseError::new(tokens[0].at, "data before any section header"));
                };
                match section {
                    Section::Vertices | Section::Edges => {
                        arity(&tokens, 2, "ID INT")?;
                        lines::id(&tokens[0])?;
                        let size = lines::positive(&tokens[1])?;
                        let list = if section == Section::Vertices {
                            &mut raw.vertices
                        } else {
                            &mut raw.edges
                        };
                        list.push((tokens[0], size));
                    }
                    Section::Source | Section::Range => {
                        arity(&tokens, 3, "VID EID INT")?;
                        lines::id(&tokens[0])?;
                        lines::id(&tokens[1])?;
                        let order = lines::positive(&tokens[2])?;
                        raw.entries.entry(section).or_default().push(Entry {
                            vertex: tokens[0],
                            edge: tokens[1],
                            values: vec![order],
                        });
                    }
                    Section::EmbeddingSource | Section::EmbeddingRange => {
                        if tokens.len() < 2 {
                            return Err(ParseError::new(lines::after(&tokens), "expected `VID EID INT...`"));
                        }
                        lines::id(&tokens[0])?;
                        lines::id(&tokens[1])?;
                        let values = tokens[2..].iter().map(lines::bounded).collect::<Result<_, _>>()?;
                        raw.entries.entry(section).or_default().push(Entry {
                            vertex: tokens[0],
                            edge: tokens[1],
                            values,
                        });
                    }
                }
            }
        }
    }
    Ok(raw)
}

/// Resolves the entries of one section to `(vertex, edge, entry)` triples,
/// rejecting unknown ids and repeated pairs.
fn resolve<'r, 'a>(
    entries: &'r [Entry<'a>],
    b0: &AlgebraShape,
    b1: &AlgebraShape,
) -> Result<Vec<(usize, usize, &'r Entry<'a>)>, ParseError> {
    let mut seen = BTreeMap::new();
    let mut out = Vec::new();
    for e in entries {
        let v = b0
            .index_of(e.vertex.text)
            .ok_or_else(|| ParseError::new(e.vertex.at, format!("unknown vertex `{}`", e.vertex.text)))?;
        let a = b1
            .index_of(e.edge.text)
            .ok_or_else(|| ParseError::new(e.edge.at, format!("unknown edge `{}`", e.edge.text)))?;
        if let Some(first) = seen.insert((v, a), e.vertex.at) {
            return Err(ParseError::new(
                e.vertex.at,
                format!(
                    "duplicate entry ({}, {}) (first on line {})",
                    e.vertex.text, e.edge.text, first.line
                ),
            ));
        }
        out.push((v, a, e));
    }
    Ok(out)
}

fn edge_location(raw: &Raw<'_>, id: &str) -> Location {
    raw.edges
        .iter()
        .find(|(t, _)| t.text == id)
        .map_or(Location { line: 1, col: 1 }, |(t, _)| t.at)
}

fn header(raw: &Raw<'_>, s: Section) -> Location {
    raw.headers.get(&s).copied().unwrap_or(Location { line: 1, col: 1 })
}

fn embedding(
    raw: &Raw<'_>,
    section: Section,
    table: OrderTable,
) -> Result<RegularEmbedding, ParseError> {
    let (b0, b1) = (table.domain().clone(), table.codomain().clone());
    let map = section.map_name();
    if !raw.headers.contains_key(&section) {
        return RegularEmbedding::canonical(table)
            .map_err(|e| ParseError::new(header(raw, section), format!("{map} map: {e}")));
    }
    let entries = raw.entries.get(&section).map_or(&[][..], Vec::as_slice);
    let resolved = resolve(entries, &b0, &b1)?;
    let mut offsets = vec![Vec::new(); b0.len() * b1.len()];
    for (v, a, e) in &resolved {
        offsets[v * b1.len() + a] = e.values.clone();
    }
    let locate = |vertex: Option<&str>, edge: &str| -> Location {
        resolved
            .iter()
            .find(|(_, _, e)| vertex.is_none_or(|v| e.vertex.text == v) && e.edge.text == edge)
            .map_or(header(raw, section), |(_, _, e)| e.vertex.at)
    };
    RegularEmbedding::from_offsets(table, offsets).map_err(|err| {
        let at = match &err {
            HomError::OffsetCount { vertex, edge, .. } | HomError::OutOfBounds { vertex, edge, .. } => {
                locate(Some(vertex), edge)
            }
            HomError::Overlap { edge, .. } | HomError::Uncovered { edge, .. } => locate(None, edge),
            _ => header(raw, section),
        };
        ParseError::new(at, format!("{map} embedding: {err}"))
    })
}

fn order_table(
    raw: &Raw<'_>,
    section: Section,
    b0: &AlgebraShape,
    b1: &AlgebraShape,
) -> Result<OrderTable, ParseError> {
    let mut table = OrderTable::zeros(b0.clone(), b1.clone());
    let entries = raw.entries.get(&section).map_or(&[][..], Vec::as_slice);
    for (v, a, e) in resolve(entries, b0, b1)? {
        table.set(v, a, e.values[0]);
    }
    if let Err(report) = table.validate() {
        let first = &report.failures[0];
        return Err(ParseError::new(
            edge_location(raw, &first.edge_id),
            format!("{} map is not unital: {report}", section.map_name()),
        ));
    }
    Ok(table)
}

pub fn parse_qq(text: &str) -> Result<QuantumQuiver, ParseError> {
    let raw = collect(text)?;
    for required in [Section::Vertices, Section::Edges] {
        if !raw.headers.contains_key(&required) {
            let name = if required == Section::Vertices { "vertices" } else { "edges" };
            return Err(ParseError::new(
                Location { line: 1, col: 1 },
                format!("missing section `[{name}]`"),
            ));
        }
    }
    let b0 = block_shape(&raw.vertices, "vertex")?;
    let b1 = block_shape(&raw.edges, "edge")?;
    let s = order_table(&raw, Section::Source, &b0, &b1)?;
    let r = order_table(&raw, Section::Range, &b0, &b1)?;
    let s = embedding(&raw, Section::EmbeddingSource, s)?;
    let r = embedding(&raw, Section::EmbeddingRange, r)?;
    QuantumQuiver::new(s, r).map_err(|e| ParseError::new(Location { line: 1, col: 1 }, e.to_string()))
}

/// Inverse of [`parse_qq`]; embedding sections appear only when the
/// placement is not canonical.
pub fn emit_qq(q: &QuantumQuiver) -> String {
    let mut out = String::new();
    for (name, shape) in [("vertices", q.vertex_shape()), ("edges", q.edge_shape())] {
        let _ = writeln!(out, "[{name}]");
        for b in shape.blocks() {
            let _ = writeln!(out, "{} {}", b.id, b.size);
        }
    }
    let (b0, b1) = (q.vertex_shape(), q.edge_shape());
    for (name, t) in [("source", q.source()), ("range", q.range())] {
        let _ = writeln!(out, "[{name}]");
        for (v, a, n) in t.table().nonzero() {
            let _ = writeln!(out, "{} {} {n}", b0.id(v), b1.id(a));
        }
    }
    for (name, t) in [("source", q.source()), ("range", q.range())] {
        if t.is_canonical() {
            continue;
        }
        let _ = writeln!(out, "[embedding.{name}]");
        for (v, a, _) in t.table().nonzero() {
            let offs: Vec<String> = t.offsets(v, a).iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{} {} {}", b0.id(v), b1.id(a), offs.join(" "));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const WORKED: &str = "\
[vertices]
v1 1
v2 3
v3 2
v4 2
v5 4
[edges]
a4 4
a6 6
[source]
v1 a4 1
v2 a4 1
v2 a6 2
[range]
v3 a4 1
v4 a4 1
v4 a6 1
v5 a6 1
";

    fn err(text: &str) -> ParseError {
        parse_qq(text).expect_err("input should be rejected")
    }

    #[test]
    fn worked_example_parses() {
        let q = parse_qq(WORKED).unwrap();
        assert_eq!(q.vertex_shape().len(), 5);
        assert_eq!(q.source().order(1, 1), 2);
        assert!(q.source().is_canonical());
    }

    #[test]
    fn unitality_message_names_the_sums() {
        let e = err("[vertices]\nv 2\n[edges]\na 3\n[source]\nv a 1\n[range]\nv a 1\n");
        assert!(e.message.contains("edge a: 2 \u{2260} 3"), "{e}");
        assert_eq!(e.at.line, 4);
    }

    #[test]
    fn empty_edges_is_disconnected() {
        let q = parse_qq("[vertices]\nv 2\n[edges]\n").unwrap();
        assert!(q.is_disconnected());
    }

    #[test]
    fn unknown_ids_are_located() {
        let e = err("[vertices]\nv 1\n[edges]\na 1\n[source]\nv b 1\n");
        assert_eq!((e.at.line, e.at.col), (6, 3));
    }

    #[test]
    fn duplicate_entries_and_sections() {
        let e = err("[vertices]\nv 1\n[edges]\na 1\n[source]\nv a 1\nv a 1\n[range]\nv a 1\n");
        assert_eq!(e.at.line, 7);
        let e = err("[vertices]\nv 1\n[vertices]\n");
        assert_eq!(e.at.line, 3);
    }

    #[test]
    fn zero_order_rejected() {
        let e = err("[vertices]\nv 1\n[edges]\na 1\n[source]\nv a 0\n");
        assert_eq!((e.at.line, e.at.col), (6, 5));
    }

    #[test]
    fn explicit_offsets_round_trip() {
        let text = "[vertices]\nx 1\ny 1\n[edges]\nm 4\n[source]\nx m 2\ny m 2\n[range]\nx m 2\ny m 2\n\
                    [embedding.range]\nx m 0 2\ny m 1 3\n";
        let q = parse_qq(text).unwrap();
        assert!(!q.range().is_canonical());
        assert!(q.source().is_canonical());
        let emitted = emit_qq(&q);
        assert!(emitted.contains("[embedding.range]\nx m 0 2\ny m 1 3\n"));
        assert!(!emitted.contains("[embedding.source]"));
        assert_eq!(parse_qq(&emitted).unwrap(), q);
    }

    #[test]
    fn overlapping_offsets_rejected() {
        let text = "[vertices]\nx 1\ny 1\n[edges]\nm 2\n[source]\nx m 1\ny m 1\n[range]\nx m 1\ny m 1\n\
                    [embedding.source]\nx m 0\ny m 0\n";
        let e = err(text);
        assert!(e.message.contains("covered twice"), "{e}");
        assert_eq!(e.at.line, 13);
    }

    #[test]
    fn missing_offsets_rejected() {
        let text = "[vertices]\nx 1\n[edges]\nm 2\n[source]\nx m 2\n[range]\nx m 2\n[embedding.source]\nx m 0\n";
        let e = err(text);
        assert!(e.message.contains("needs 2 offsets"), "{e}");
        assert_eq!(e.at.line, 10);
    }

    #[test]
    fn oversized_blocks_rejected() {
        let e = err("[vertices]\nv 99999999999999999999\n");
        assert_eq!((e.at.line, e.at.col), (2, 3));
        let e = err("[vertices]\nv 65537\n");
        assert!(e.message.contains("exceeds the limit"), "{e}");
    }

    #[test]
    fn data_before_header() {
        assert_eq!(err("v 1\n").at.line, 1);
    }

    #[test]
    fn worked_round_trip() {
        let q = parse_qq(WORKED).unwrap();
        assert_eq!(emit_qq(&q), WORKED);
    }
}
