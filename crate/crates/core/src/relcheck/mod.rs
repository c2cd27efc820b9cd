//! Witness matrices for the nontrivial monoid relation of a source class,
//! and entrywise verification of the four identities they must satisfy.
//!
//! For a class `c` with `q = N_c`, `B` has one row per `(copy k, vertex w,
//! row i)` and one column per `(edge α, group g, column j)`; copy `k` of
//! `w` sends its `t`-th diagonal slot in `α` to group `(k + t) mod q`, so
//! every column holds each row index of `α` exactly once. `A` is the
//! star-transpose of `B`. The targets are
//! `AB = ⊕_{α,g} r(E_α)` and `BA = ⊕_{k,w} V_w`, with `ABA = A`, `BAB = B`.

mod matrix;
mod rewrite;

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_integer::lcm;

use crate::lpa::{classical_lpa, generate_presentation, GeneratorSymbol, LpaPresentation, Poly, RelationTag};
use crate::quiver::{QuantumQuiver, QuiverError};
use crate::vmonoid::source_classes;

pub use matrix::{ExpansionLimit, SymbolicMatrix, EXPANSION_LIMIT};
use rewrite::RewriteSystem;

const STEP_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelcheckError {
    /// The class of this vertex has no outgoing edge block.
    SinkClass(usize),
    Expansion(Identity, ExpansionLimit),
    Quiver(QuiverError),
}

impl fmt::Display for RelcheckError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelcheckError::SinkClass(v) => {
                write!(f, "vertex block {v} lies in a sink class; there is no relation to witness")
            }
            RelcheckError::Expansion(id, e) => write!(f, "{id}: {e}"),
            RelcheckError::Quiver(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for RelcheckError {}

/// `(copy, vertex block, row)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VertexIndex {
    pub copy: usize,
    pub vertex: usize,
    pub row: usize,
}

/// `(edge block, group, column)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeIndex {
    pub edge: usize,
    pub group: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnesses {
    pub class: Vec<usize>,
    pub edges: Vec<usize>,
    pub q: usize,
    /// Tall matrix of σ̄ entries, `A = B*`.
    pub a: SymbolicMatrix,
    /// Wide matrix of σ entries.
    pub b: SymbolicMatrix,
    pub vertex_index: Vec<VertexIndex>,
    pub edge_index: Vec<EdgeIndex>,
}

impl Witnesses {
    pub fn vertex_label(&self, q: &QuantumQuiver, k: usize) -> String {
        let x = self.vertex_index[k];
        format!("{}[{}]:{}", q.vertex_shape().id(x.vertex), x.copy, x.row)
    }

    pub fn edge_label(&self, q: &QuantumQuiver, k: usize) -> String {
        let x = self.edge_index[k];
        format!("{}[{}]:{}", q.edge_shape().id(x.edge), x.group, x.col)
    }
}

/// Builds `A` and `B` for the source class containing `vertex`.
pub fn build_witnesses(q: &QuantumQuiver, vertex: usize) -> Result<Witnesses, RelcheckError> {
    let (b0, b1) = (q.vertex_shape(), q.edge_shape());
    let class = source_classes(q)
        .into_iter()
        .find(|c| c.contains(&vertex))
        .expect("every vertex has a class");
    let mut n_c = 1;
    let mut edges = Vec::new();
    for a in 0..b1.len() {
        let orders: Vec<usize> = class.iter().map(|&v| q.source().order(v, a)).collect();
        if orders.iter().any(|&o| o > 0) {
            edges.push(a);
            for o in orders.into_iter().filter(|&o| o > 0) {
                n_c = lcm(n_c, o);
            }
        }
    }
    if edges.is_empty() {
        return Err(RelcheckError::SinkClass(vertex));
    }

    let mut vertex_index = Vec::new();
    for copy in 0..n_c {
        for &v in &class {
            for row in 1..=b0.size(v) {
                vertex_index.push(VertexIndex { copy, vertex: v, row });
            }
        }
    }
    let mut edge_index = Vec::new();
    for &edge in &edges {
        for group in 0..n_c {
            for col in 1..=b1.size(edge) {
                edge_index.push(EdgeIndex { edge, group, col });
            }
        }
    }

    let mut b = SymbolicMatrix::zeros(vertex_index.len(), edge_index.len());
    for (r, x) in vertex_index.iter().enumerate() {
        for (c, y) in edge_index.iter().enumerate() {
            let offsets = q.source().offsets(x.vertex, y.edge);
            for (t, &o) in offsets.iter().enumerate() {
                if (x.copy + t) % n_c == y.group {
                    b.set(r, c, Poly::symbol(GeneratorSymbol::sigma(y.edge, o + x.row, y.col)));
                }
            }
        }
    }
    let a = b.star_transpose();
    Ok(Witnesses {
        class,
        edges,
        q: n_c,
        a,
        b,
        vertex_index,
        edge_index,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    AB,
    BA,
    ABA,
    BAB,
}

impl Identity {
    pub const ALL: [Identity; 4] = [Identity::AB, Identity::BA, Identity::ABA, Identity::BAB];

    pub fn name(self) -> &'static str {
        match self {
            Identity::AB => "AB",
            Identity::BA => "BA",
            Identity::ABA => "ABA",
            Identity::BAB => "BAB",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryVerdict {
    /// `entry - target` contracts to zero using relations with these tags;
    /// empty when the two are literally equal.
    Confirmed(BTreeSet<RelationTag>),
    /// The nonzero remainder after all available contractions.
    Inconclusive(Poly),
}

impl EntryVerdict {
    pub fn is_confirmed(&self) -> bool {
        matches!(self, EntryVerdict::Confirmed(_))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: Identity,
    pub rows: usize,
    pub cols: usize,
    /// Row-major.
    pub entries: Vec<EntryVerdict>,
}

impl IdentityReport {
    pub fn confirmed(&self) -> usize {
        self.entries.iter().filter(|e| e.is_confirmed()).count()
    }

    pub fn inconclusive(&self) -> usize {
        self.entries.len() - self.confirmed()
    }

    pub fn verdict(&self, row: usize, col: usize) -> &EntryVerdict {
        &self.entries[row * self.cols + col]
    }
}

/// Which relations the contraction may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleSet {
    /// The generated presentation of `L_K(B)`.
    Presentation,
    /// The classical graph presentation; commutative quivers only.
    Classical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub witnesses: Witnesses,
    pub rules: RuleSet,
    pub presentation: LpaPresentation,
    pub reports: Vec<IdentityReport>,
}

impl VerificationReport {
    pub fn report(&self, id: Identity) -> &IdentityReport {
        self.reports
            .iter()
            .find(|r| r.identity == id)
            .expect("all identities are reported")
    }

    pub fn all_confirmed(&self) -> bool {
        self.reports.iter().all(|r| r.inconclusive() == 0)
    }
}

/// Verifies with the classical rules for commutative quivers and the
/// generated presentation otherwise.
pub fn verify_identities(q: &QuantumQuiver, vertex: usize) -> Result<VerificationReport, RelcheckError> {
    let rules = if q.is_commutative() {
        RuleSet::Classical
    } else {
        RuleSet::Presentation
    };
    verify_identities_with(q, vertex, rules)
}

pub fn verify_identities_with(
    q: &QuantumQuiver,
    vertex: usize,
    rules: RuleSet,
) -> Result<VerificationReport, RelcheckError> {
    let w = build_witnesses(q, vertex)?;
    let presentation = match rules {
        RuleSet::Presentation => generate_presentation(q),
        RuleSet::Classical => classical_lpa(&q.to_graph().map_err(RelcheckError::Quiver)?),
    };
    let system = RewriteSystem::new(presentation.relations());
    // ranges are read from the quiver itself, not from the rule set
    let range = generate_presentation(q);

    let ab = w.a.mul(&w.b).map_err(|e| RelcheckError::Expansion(Identity::AB, e))?;
    let ba = w.b.mul(&w.a).map_err(|e| RelcheckError::Expansion(Identity::BA, e))?;
    let aba = ab.mul(&w.a).map_err(|e| RelcheckError::Expansion(Identity::ABA, e))?;
    let bab = ba.mul(&w.b).map_err(|e| RelcheckError::Expansion(Identity::BAB, e))?;

    let mut ab_target = SymbolicMatrix::zeros(ab.rows(), ab.cols());
    for (r, x) in w.edge_index.iter().enumerate() {
        for (c, y) in w.edge_index.iter().enumerate() {
            if x.edge == y.edge && x.group == y.group {
                let s = GeneratorSymbol::sigma(x.edge, x.col, y.col);
                if let Some(rho) = range.range_of(&s) {
                    ab_target.set(r, c, Poly::symbol(rho));
                }
            }
        }
    }
    let mut ba_target = SymbolicMatrix::zeros(ba.rows(), ba.cols());
    for (r, x) in w.vertex_index.iter().enumerate() {
        for (c, y) in w.vertex_index.iter().enumerate() {
            if x.copy == y.copy && x.vertex == y.vertex {
                ba_target.set(r, c, Poly::symbol(GeneratorSymbol::rho(x.vertex, x.row, y.row)));
            }
        }
    }

    let check = |id: Identity, got: &SymbolicMatrix, want: &SymbolicMatrix| {
        let entries = got
            .iter()
            .map(|(r, c, p)| {
                let diff = p.clone() - want.get(r, c).clone();
                let red = system.reduce(&diff, STEP_CAP);
                if red.residual.is_zero() {
                    EntryVerdict::Confirmed(red.tags)
                } else {
                    EntryVerdict::Inconclusive(red.residual)
                }
            })
            .collect();
        IdentityReport {
            identity: id,
            rows: got.rows(),
            cols: got.cols(),
            entries,
        }
    };
    let reports = alloc::vec![
        check(Identity::AB, &ab, &ab_target),
        check(Identity::BA, &ba, &ba_target),
        check(Identity::ABA, &aba, &w.a),
        check(Identity::BAB, &bab, &w.b),
    ];
    Ok(VerificationReport {
        witnesses: w,
        rules,
        presentation,
        reports,
    })
}
