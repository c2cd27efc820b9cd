//! JSON renderings of presentations and verification reports.

use serde_json::{json, Map, Value};

use qquiver::lpa::{LpaPresentation, Relation};
use qquiver::relcheck::{EntryVerdict, VerificationReport};
use qquiver::vmonoid::{MonoidRelation, MonoidTag};
use qquiver::{MonoidPresentation, QuantumQuiver};

pub fn lpa(p: &LpaPresentation) -> Value {
    let generators: Vec<Value> = p
        .generators()
        .iter()
        .map(|g| {
            let shape = if g.kind == qquiver::GenKind::Rho {
                p.vertex_shape()
            } else {
                p.edge_shape()
            };
            json!({"kind": g.kind.key(), "block": shape.id(g.block), "row": g.row, "col": g.col})
        })
        .collect();
    let relations: Vec<Value> = p.relations().iter().map(|r| relation(p, r)).collect();
    json!({"generators": generators, "relations": relations})
}

fn relation(p: &LpaPresentation, r: &Relation) -> Value {
    let terms: Vec<Value> = r
        .poly
        .terms()
        .rev()
        .map(|(w, c)| {
            let word: Vec<String> = if w.is_unit() {
                vec!["1".into()]
            } else {
                w.symbols().iter().map(|s| p.symbol_key(s)).collect()
            };
            json!({"coeff": c, "word": word})
        })
        .collect();
    json!({"tag": r.tag.name(), "terms": terms})
}

fn monoid_tag(p: &MonoidPresentation, t: &MonoidTag) -> String {
    match t {
        MonoidTag::SizeClass(n) => format!("size:{n}"),
        MonoidTag::Nontrivial(c) => {
            let members: Vec<&str> = p.classes()[*c]
                .iter()
                .map(|&v| p.generators()[v + 1].trim_start_matches("P:"))
                .collect();
            format!("class:{}", members.join(","))
        }
        MonoidTag::GraphVertex(v) => format!("vertex:{v}"),
        MonoidTag::FreeDefinition => "free".into(),
        MonoidTag::Custom => "custom".into(),
    }
}

pub(crate) fn tag_text(p: &MonoidPresentation, r: &MonoidRelation) -> String {
    monoid_tag(p, &r.tag)
}

fn side(p: &MonoidPresentation, v: &[u64]) -> Value {
    let mut m = Map::new();
    for (g, &c) in p.generators().iter().zip(v) {
        if c != 0 {
            m.insert(g.clone(), json!(c));
        }
    }
    Value::Object(m)
}

pub fn monoid(p: &MonoidPresentation) -> Value {
    let relations: Vec<Value> = p
        .relations()
        .iter()
        .map(|r| json!({"tag": monoid_tag(p, &r.tag), "lhs": side(p, &r.lhs), "rhs": side(p, &r.rhs)}))
        .collect();
    json!({"generators": p.generators(), "relations": relations})
}

/// Rows and columns are 1-based.
pub fn relcheck(q: &QuantumQuiver, r: &VerificationReport) -> Value {
    let w = &r.witnesses;
    let mut identities = Map::new();
    for rep in &r.reports {
        let entries: Vec<Value> = rep
            .entries
            .iter()
            .enumerate()
            .map(|(k, e)| {
                let (row, col) = (k / rep.cols + 1, k % rep.cols + 1);
                match e {
                    EntryVerdict::Confirmed(tags) => {
                        let tags: Vec<&str> = tags.iter().map(|t| t.name()).collect();
                        json!({"row": row, "col": col, "verdict": "confirmed",
                               "residual_terms": 0, "relations": tags})
                    }
                    EntryVerdict::Inconclusive(p) => json!({"row": row, "col": col,
                        "verdict": "inconclusive", "residual_terms": p.len(),
                        "residual": r.presentation.poly_text(p)}),
                }
            })
            .collect();
        identities.insert(
            rep.identity.name().into(),
            json!({"confirmed": rep.confirmed(), "inconclusive": rep.inconclusive(), "entries": entries}),
        );
    }
    let ids = |shape: &qquiver::AlgebraShape, list: &[usize]| -> Vec<String> {
        list.iter().map(|&k| shape.id(k).to_string()).collect()
    };
    json!({
        "class": ids(q.vertex_shape(), &w.class),
        "edges": ids(q.edge_shape(), &w.edges),
        "copies": w.q,
        "rules": format!("{:?}", r.rules).to_lowercase(),
        "a_shape": [w.a.rows(), w.a.cols()],
        "b_shape": [w.b.rows(), w.b.cols()],
        "identities": identities,
    })
}
