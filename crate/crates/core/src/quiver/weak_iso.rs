//! Weak isomorphism: size-preserving bijections of vertex and edge blocks
//! that carry both order tables onto each other.
//!
//! Vertices are assigned by backtracking in sorted-id order, pruned by
//! row profiles and by matching partial edge signatures. Once all vertices
//! are fixed, each edge is determined up to edges with identical columns, so
//! edges are matched greedily.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::QuantumQuiver;

/// Block bijections `f0: I0(a) -> I0(b)`, `f1: I1(a) -> I1(b)` keyed by id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeakIsoWitness {
    pub vertex_bijection: BTreeMap<String, String>,
    pub edge_bijection: BTreeMap<String, String>,
    /// Set when the edge algebra is commutative, in which case a weak
    /// isomorphism is an isomorphism.
    pub full_isomorphism: bool,
}

impl WeakIsoWitness {
    pub fn inverse(&self) -> WeakIsoWitness {
        let flip = |m: &BTreeMap<String, String>| m.iter().map(|(k, v)| (v.clone(), k.clone())).collect();
        WeakIsoWitness {
            vertex_bijection: flip(&self.vertex_bijection),
            edge_bijection: flip(&self.edge_bijection),
            full_isomorphism: self.full_isomorphism,
        }
    }

    /// Checks the witness against both quivers: sizes and both order
    /// tables preserved entrywise.
    pub fn verify(&self, a: &QuantumQuiver, b: &QuantumQuiver) -> bool {
        let (a0, a1, b0, b1) = (a.vertex_shape(), a.edge_shape(), b.vertex_shape(), b.edge_shape());
        if self.vertex_bijection.len() != a0.len()
            || self.edge_bijection.len() != a1.len()
            || a0.len() != b0.len()
            || a1.len() != b1.len()
        {
            return false;
        }
        let map = |m: &BTreeMap<String, String>, from: &crate::AlgebraShape, to: &crate::AlgebraShape| {
            let mut out = vec![usize::MAX; from.len()];
            for (k, v) in m {
                let (Some(i), Some(j)) = (from.index_of(k), to.index_of(v)) else {
                    return None;
                };
                out[i] = j;
            }
            let mut seen = out.clone();
            seen.sort_unstable();
            seen.dedup();
            (seen.len() == out.len() && !out.contains(&usize::MAX)).then_some(out)
        };
        let (Some(f0), Some(f1)) = (map(&self.vertex_bijection, a0, b0), map(&self.edge_bijection, a1, b1))
        else {
            return false;
        };
        (0..a0.len()).all(|v| a0.size(v) == b0.size(f0[v]))
            && (0..a1.len()).all(|e| a1.size(e) == b1.size(f1[e]))
            && (0..a0.len()).all(|v| {
                (0..a1.len()).all(|e| {
                    a.range().order(v, e) == b.range().order(f0[v], f1[e])
                        && a.source().order(v, e) == b.source().order(f0[v], f1[e])
                })
            })
    }
}

struct View<'q> {
    q: &'q QuantumQuiver,
    // block indices sorted by id
    vorder: Vec<usize>,
    eorder: Vec<usize>,
}

impl<'q> View<'q> {
    fn new(q: &'q QuantumQuiver) -> Self {
        let mut vorder: Vec<usize> = (0..q.vertex_shape().len()).collect();
        vorder.sort_by(|&x, &y| q.vertex_shape().id(x).cmp(q.vertex_shape().id(y)));
        let mut eorder: Vec<usize> = (0..q.edge_shape().len()).collect();
        eorder.sort_by(|&x, &y| q.edge_shape().id(x).cmp(q.edge_shape().id(y)));
        View { q, vorder, eorder }
    }

    fn entry(&self, v: usize, e: usize) -> (usize, usize) {
        (self.q.range().order(v, e), self.q.source().order(v, e))
    }

    fn vertex_profile(&self, v: usize) -> (usize, Vec<(usize, usize, usize)>) {
        let b1 = self.q.edge_shape();
        let mut p: Vec<_> = (0..b1.len())
            .map(|e| {
                let (r, s) = self.entry(v, e);
                (b1.size(e), r, s)
            })
            .collect();
        p.sort_unstable();
        (self.q.vertex_shape().size(v), p)
    }

    fn edge_profile(&self, e: usize) -> (usize, Vec<(usize, usize, usize)>) {
        let b0 = self.q.vertex_shape();
        let mut p: Vec<_> = (0..b0.len())
            .map(|v| {
                let (r, s) = self.entry(v, e);
                (b0.size(v), r, s)
            })
            .collect();
        p.sort_unstable();
        (self.q.edge_shape().size(e), p)
    }

    /// Column of edge `e` restricted to `vertices`, in that order.
    fn signature(&self, e: usize, vertices: &[usize]) -> (usize, Vec<(usize, usize)>) {
        (
            self.q.edge_shape().size(e),
            vertices.iter().map(|&v| self.entry(v, e)).collect(),
        )
    }
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort();
    v
}

pub(super) fn search(a: &QuantumQuiver, b: &QuantumQuiver) -> Option<WeakIsoWitness> {
    let (va, vb) = (View::new(a), View::new(b));
    let nv = a.vertex_shape().len();
    let ne = a.edge_shape().len();
    if nv != b.vertex_shape().len() || ne != b.edge_shape().len() {
        return None;
    }
    let pa: Vec<_> = (0..nv).map(|v| va.vertex_profile(v)).collect();
    let pb: Vec<_> = (0..nv).map(|v| vb.vertex_profile(v)).collect();
    if sorted(pa.clone()) != sorted(pb.clone()) {
        return None;
    }
    let ea: Vec<_> = (0..ne).map(|e| va.edge_profile(e)).collect();
    let eb: Vec<_> = (0..ne).map(|e| vb.edge_profile(e)).collect();
    if sorted(ea) != sorted(eb) {
        return None;
    }

    let mut f0 = vec![usize::MAX; nv];
    let mut used = vec![false; nv];
    if !assign(&va, &vb, &pa, &pb, 0, &mut f0, &mut used) {
        return None;
    }

    let a_vertices: Vec<usize> = va.vorder.clone();
    let b_vertices: Vec<usize> = a_vertices.iter().map(|&v| f0[v]).collect();
    let mut f1 = vec![usize::MAX; ne];
    let mut taken = vec![false; ne];
    for &e in &va.eorder {
        let sig = va.signature(e, &a_vertices);
        let target = vb
            .eorder
            .iter()
            .copied()
            .find(|&t| !taken[t] && vb.signature(t, &b_vertices) == sig)?;
        taken[target] = true;
        f1[e] = target;
    }

    let (a0, a1, b0, b1) = (a.vertex_shape(), a.edge_shape(), b.vertex_shape(), b.edge_shape());
    Some(WeakIsoWitness {
        vertex_bijection: (0..nv).map(|v| (a0.id(v).into(), b0.id(f0[v]).into())).collect(),
        edge_bijection: (0..ne).map(|e| (a1.id(e).into(), b1.id(f1[e]).into())).collect(),
        full_isomorphism: b1.is_commutative(),
    })
}

fn assign(
    va: &View<'_>,
    vb: &View<'_>,
    pa: &[(usize, Vec<(usize, usize, usize)>)],
    pb: &[(usize, Vec<(usize, usize, usize)>)],
    depth: usize,
    f0: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == va.vorder.len() {
        return true;
    }
    let v = va.vorder[depth];
    for &w in &vb.vorder {
        if used[w] || pa[v] != pb[w] {
            continue;
        }
        f0[v] = w;
        used[w] = true;
        if partial_consistent(va, vb, depth + 1, f0) && assign(va, vb, pa, pb, depth + 1, f0, used) {
            return true;
        }
        used[w] = false;
        f0[v] = usize::MAX;
    }
    false
}

/// The multisets of edge columns restricted to the assigned vertices must
/// agree on both sides.
fn partial_consistent(va: &View<'_>, vb: &View<'_>, assigned: usize, f0: &[usize]) -> bool {
    let av: Vec<usize> = va.vorder[..assigned].to_vec();
    let bv: Vec<usize> = av.iter().map(|&v| f0[v]).collect();
    let ne = va.q.edge_shape().len();
    let sa = sorted((0..ne).map(|e| va.signature(e, &av)).collect());
    let sb = sorted((0..ne).map(|e| vb.signature(e, &bv)).collect());
    sa == sb
}
