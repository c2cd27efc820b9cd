//! The monoid `V(L_K(B))` of finitely generated projective modules, as a
//! finitely presented commutative monoid.
//!
//! Generators are `FREE` (the rank-one free module) followed by one `P_v`
//! per vertex block. Relations are one size-class relation
//! `Σ_{n_v = n} P_v = n FREE` per occupied size, and one nontrivial relation
//! per non-sink source-equivalence class `c`:
//! `N_c Σ_{v∈c} P_v = N_c Σ_{α∈E_c} Σ_u order(r,u,α) P_u`,
//! where `N_c` is the lcm of the nonzero source orders in `c`.

mod snf;
mod solver;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_integer::lcm;

use crate::algebra::AlgebraShape;
use crate::quiver::{DirectedGraph, QuantumQuiver};

pub use solver::{monoid_eq, Certificate, EqOptions, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MonoidTag {
    /// `Σ_{n_v = n} P_v = n FREE`.
    SizeClass(usize),
    /// Indexes [`MonoidPresentation::classes`].
    Nontrivial(usize),
    /// `P_v = Σ_{s(e)=v} P_{r(e)}` in a graph monoid.
    GraphVertex(usize),
    /// `FREE = Σ_v P_v` in a graph monoid.
    FreeDefinition,
    /// A relation supplied from outside.
    Custom,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonoidRelation {
    pub lhs: Vec<u64>,
    pub rhs: Vec<u64>,
    pub tag: MonoidTag,
}

/// A nonnegative integer combination of the generators.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonoidElement(pub Vec<u64>);

impl MonoidElement {
    pub fn zero(len: usize) -> Self {
        MonoidElement(vec![0; len])
    }

    pub fn basis(len: usize, k: usize, coeff: u64) -> Self {
        let mut e = Self::zero(len);
        e.0[k] = coeff;
        e
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidPresentation {
    generators: Vec<String>,
    relations: Vec<MonoidRelation>,
    classes: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidError {
    DimensionMismatch { expected: usize, found: usize },
}

impl fmt::Display for MonoidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidError::DimensionMismatch { expected, found } => {
                write!(f, "element has {found} coordinates, presentation has {expected}")
            }
        }
    }
}

impl core::error::Error for MonoidError {}

/// Generator names `FREE`, `P:<id>` for a vertex shape.
fn generator_names(b0: &AlgebraShape) -> Vec<String> {
    let mut g = vec![String::from("FREE")];
    g.extend(b0.blocks().iter().map(|b| format!("P:{}", b.id)));
    g
}

impl MonoidPresentation {
    pub fn new(generators: Vec<String>, relations: Vec<MonoidRelation>) -> Result<Self, MonoidError> {
        for r in &relations {
            for side in [&r.lhs, &r.rhs] {
                if side.len() != generators.len() {
                    return Err(MonoidError::DimensionMismatch {
                        expected: generators.len(),
                        found: side.len(),
                    });
                }
            }
        }
        Ok(MonoidPresentation {
            generators,
            relations,
            classes: Vec::new(),
        })
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relations(&self) -> &[MonoidRelation] {
        &self.relations
    }

    /// Source-equivalence classes referenced by `Nontrivial` tags.
    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g == name)
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &MonoidRelation> + '_ {
        self.relations
            .iter()
            .filter(|r| matches!(r.tag, MonoidTag::Nontrivial(_)))
    }

    /// Renders `v` as `2 FREE + P:v4`, or `0`.
    pub fn element_text(&self, v: &[u64]) -> String {
        let parts: Vec<String> = v
            .iter()
            .zip(&self.generators)
            .filter(|(c, _)| **c != 0)
            .map(|(&c, g)| if c == 1 { g.clone() } else { format!("{c} {g}") })
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }

    pub fn relation_text(&self, r: &MonoidRelation) -> String {
        format!("{} = {}", self.element_text(&r.lhs), self.element_text(&r.rhs))
    }

    /// Relation pairs over the non-FREE generators, after substituting the
    /// relation that defines `FREE` into all others and dropping it. Returns
    /// `None` when `FREE` occurs but no defining relation `FREE = x` exists.
    /// Identity relations are dropped and each pair is ordered, so the
    /// result is a normal form for comparison.
    pub fn free_eliminated(&self) -> Option<Vec<(Vec<u64>, Vec<u64>)>> {
        let free = self.generator_index("FREE")?;
        let is_free_only = |v: &[u64]| v.iter().enumerate().all(|(k, &c)| c == u64::from(k == free));
        let def = self.relations.iter().position(|r| {
            (is_free_only(&r.lhs) && r.rhs[free] == 0) || (is_free_only(&r.rhs) && r.lhs[free] == 0)
        });
        let uses_free = self.relations.iter().any(|r| r.lhs[free] != 0 || r.rhs[free] != 0);
        let value: Vec<u64> = match def {
            Some(k) => {
                let r = &self.relations[k];
                if is_free_only(&r.lhs) { r.rhs.clone() } else { r.lhs.clone() }
            }
            None if uses_free => return None,
            None => vec![0; self.len()],
        };
        let subst = |v: &[u64]| -> Vec<u64> {
            let f = v[free];
            let mut out: Vec<u64> = v.to_vec();
            out[free] = 0;
            for (o, x) in out.iter_mut().zip(&value) {
                *o += f * x;
            }
            out.remove(free);
            out
        };
        let mut pairs: Vec<(Vec<u64>, Vec<u64>)> = self
            .relations
            .iter()
            .enumerate()
            .filter(|(k, _)| Some(*k) != def)
            .map(|(_, r)| (subst(&r.lhs), subst(&r.rhs)))
            .filter(|(l, r)| l != r)
            .map(|(l, r)| if l <= r { (l, r) } else { (r, l) })
            .collect();
        pairs.sort();
        Some(pairs)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        let mut root = x;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut x = x;
        while self.parent[x] != root {
            let next = self.parent[x];
            self.parent[x] = root;
            x = next;
        }
        root
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller index as root so class order is stable
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

/// Vertices joined when they both feed a common edge block through `s`.
/// Classes are ordered by smallest member, members ascending.
pub fn source_classes(q: &QuantumQuiver) -> Vec<Vec<usize>> {
    let (b0, b1) = (q.vertex_shape(), q.edge_shape());
    let mut uf = UnionFind::new(b0.len());
    for a in 0..b1.len() {
        let feeders: Vec<usize> = (0..b0.len()).filter(|&v| q.source().order(v, a) > 0).collect();
        for w in feeders.windows(2) {
            uf.union(w[0], w[1]);
        }
    }
    let mut by_root: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..b0.len() {
        by_root.entry(uf.find(v)).or_default().push(v);
    }
    by_root.into_values().collect()
}



pub fn monoid_presentation(q: &QuantumQuiver) -> MonoidPresentation {
    let (b0, b1) = (q.vertex_shape(), q.edge_shape());
    let generators = generator_names(b0);
    let dim = generators.len();
    let p = |v: usize| v + 1;
    let mut relations = Vec::new();

    for n in b0.distinct_sizes() {
        let mut lhs = vec![0; dim];
        for v in (0..b0.len()).filter(|&v| b0.size(v) == n) {
            lhs[p(v)] = 1;
        }
        let mut rhs = vec![0; dim];
        rhs[0] = n as u64;
        relations.push(MonoidRelation {
            lhs,
            rhs,
            tag: MonoidTag::SizeClass(n),
        });
    }

    let classes = source_classes(q);
    for (c, members) in classes.iter().enumerate() {
        let mut n_c = 1;
        let mut edges = Vec::new();
        for a in 0..b1.len() {
            let mut feeds = false;
            for &v in members {
                let o = q.source().order(v, a) as u64;
                if o > 0 {
                    n_c = lcm(n_c, o);
                    feeds = true;
                }
            }
            if feeds {
                edges.push(a);
            }
        }
        if edges.is_empty() {
            continue;
        }
        let mut lhs = vec![0; dim];
        for &v in members {
            lhs[p(v)] = n_c;
        }
        let mut rhs = vec![0; dim];
        for &a in &edges {
            for u in 0..b0.len() {
                rhs[p(u)] += n_c * q.range().order(u, a) as u64;
            }
        }
        relations.push(MonoidRelation {
            lhs,
            rhs,
            tag: MonoidTag::Nontrivial(c),
        });
    }

    MonoidPresentation {
        generators,
        relations,
        classes,
    }
}

/// The classical graph monoid, built directly from the graph: `P_v = Σ_{s(e)=v}
/// P_{r(e)}` for each non-sink `v`, and `FREE = Σ_v P_v`.
pub fn graph_monoid(g: &DirectedGraph) -> MonoidPresentation {
    let nv = g.vertices().len();
    let mut generators = vec![String::from("FREE")];
    generators.extend(g.vertices().iter().map(|v| format!("P:{v}")));
    let dim = nv + 1;
    let mut relations = Vec::new();
    for (k, v) in g.vertices().iter().enumerate() {
        if g.is_sink(v) {
            continue;
        }
        let mut lhs = vec![0; dim];
        lhs[k + 1] = 1;
        let mut rhs = vec![0; dim];
        for (_, e) in g.out_edges(v) {
            rhs[g.vertex_index(&e.range).expect("validated") + 1] += 1;
        }
        relations.push(MonoidRelation {
            lhs,
            rhs,
            tag: MonoidTag::GraphVertex(k),
        });
    }
    let mut lhs = vec![0; dim];
    lhs[0] = 1;
    let mut rhs = vec![1; dim];
    rhs[0] = 0;
    relations.push(MonoidRelation {
        lhs,
        rhs,
        tag: MonoidTag::FreeDefinition,
    });
    MonoidPresentation {
        generators,
        relations,
        classes: Vec::new(),
    }
}
