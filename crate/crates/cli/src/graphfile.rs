//! The directed graph format: `[vertices]` with one id per line and
//! `[edges]` with `ID SRC RNG` lines.

use std::collections::BTreeMap;
use std::fmt::Write;

use qquiver::{DirectedGraph, GraphEdge};

use crate::lines::{self, arity, Line, Location, ParseError};

pub fn parse_graph(text: &str) -> Result<DirectedGraph, ParseError> {
    let mut vertices: Vec<String> = Vec::new();
    let mut declared = BTreeMap::new();
    let mut edges = Vec::new();
    let mut edge_ids = BTreeMap::new();
    let mut pending = Vec::new();
    let mut headers = BTreeMap::new();
    let mut current = None;
    for line in lines::lines(text)? {
        match line {
            Line::Header { name, at } => {
                if name != "vertices" && name != "edges" {
                    return Err(ParseError::new(at, format!("unknown section `[{name}]`")));
                }
                if let Some(first) = headers.insert(name, at) {
                    return Err(ParseError::new(
                        at,
                        format!("section `[{name}]` repeated (first on line {})", first.line),
                    ));
                }
                current = Some(name);
            }
            Line::Data(tokens) => match current {
                None => return Err(ParseError::new(tokens[0].at, "data before any section header")),
                Some("vertices") => {
                    arity(&tokens, 1, "ID")?;
                    let id = lines::id(&tokens[0])?;
                    if declared.insert(id, tokens[0].at).is_some() {
                        return Err(ParseError::new(tokens[0].at, format!("duplicate vertex `{id}`")));
                    }
                    vertices.push(id.to_string());
                }
                Some(_) => {
                    arity(&tokens, 3, "ID SRC RNG")?;
                    let id = lines::id(&tokens[0])?;
                    lines::id(&tokens[1])?;
                    lines::id(&tokens[2])?;
                    if edge_ids.insert(id, tokens[0].at).is_some() {
                        return Err(ParseError::new(tokens[0].at, format!("duplicate edge `{id}`")));
                    }
                    pending.push((tokens[1], tokens[2]));
                    edges.push(GraphEdge {
                        id: id.to_string(),
                        source: tokens[1].text.to_string(),
                        range: tokens[2].text.to_string(),
                    });
                }
            },
        }
    }
    // endpoints may be declared after the edges that use them
    for (s, r) in pending {
        for t in [s, r] {
            if !declared.contains_key(t.text) {
                return Err(ParseError::new(t.at, format!("unknown vertex `{}`", t.text)));
            }
        }
    }
    DirectedGraph::new(vertices, edges).map_err(|e| ParseError::new(Location { line: 1, col: 1 }, e.to_string()))
}

pub fn emit_graph(g: &DirectedGraph) -> String {
    let mut out = String::from("[vertices]\n");
    for v in g.vertices() {
        let _ = writeln!(out, "{v}");
    }
    out.push_str("[edges]\n");
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.id, e.source, e.range);
    }
    out
}
