//! Literal comparison of the quantum-quiver presentation of a commutative
//! quiver with the classical presentation of its graph.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{classical_lpa, generate_presentation, LpaPresentation, Relation, RelationTag};
use crate::quiver::{QuantumQuiver, QuiverError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalComparison {
    pub classical: LpaPresentation,
    pub generated: LpaPresentation,
    /// Classical relations produced verbatim, up to sign.
    pub matched: Vec<Relation>,
    /// Classical relations absent from the generated list.
    pub missing: Vec<Relation>,
}

impl ClassicalComparison {
    /// Every missing relation is an `e* f` with `e != f`.
    pub fn only_cross_edge_missing(&self) -> bool {
        self.missing.iter().all(is_cross_edge)
    }

    pub fn cross_edge_count(&self) -> usize {
        self.missing.iter().filter(|r| is_cross_edge(r)).count()
    }
}

fn is_cross_edge(r: &Relation) -> bool {
    r.tag == RelationTag::L4
        && r.poly.len() == 1
        && r.poly.leading().is_some_and(|(w, _)| {
            let s = w.symbols();
            s.len() == 2 && s[0].block != s[1].block
        })
}

/// Maps `ρ^v -> p_v`, `σ^α -> α`, `σ̄^α -> α*` (the same symbols) and sorts
/// each classical relation into matched or missing.
pub fn compare_classical(q: &QuantumQuiver) -> Result<ClassicalComparison, QuiverError> {
    let graph = q.to_graph()?;
    let classical = classical_lpa(&graph);
    let generated = generate_presentation(q);
    let produced: BTreeSet<_> = generated
        .relations()
        .iter()
        .map(|r| r.poly.sign_normalized())
        .collect();
    let (matched, missing) = classical
        .relations()
        .iter()
        .cloned()
        .partition(|r| produced.contains(&r.poly.sign_normalized()));
    Ok(ClassicalComparison {
        classical,
        generated,
        matched,
        missing,
    })
}
