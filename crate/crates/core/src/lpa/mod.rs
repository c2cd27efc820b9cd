//! Presentations of the Leavitt path algebra `L_K(B)` of a quantum quiver.
//!
//! The algebra is unital: `δ_{ij}` on the right of the size-class sums is
//! the unit word. A classical graph presentation (`p_v`, `e`, `e*`) is
//! produced with the same symbol type, with `p_v = ρ^v_{11}`,
//! `e = σ^e_{11}` and `e* = σ̄^e_{11}`, so both can be compared literally.

mod compare;
mod matrix_form;
mod poly;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{AlgebraShape, MatrixUnit};
use crate::hom::{RegularEmbedding, UnitImage};
use crate::quiver::{DirectedGraph, QuantumQuiver};

pub use compare::{compare_classical, ClassicalComparison};
pub use matrix_form::emit_matrix_form;
pub use poly::{GenKind, GeneratorSymbol, Poly, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationTag {
    R1,
    R2,
    R3,
    R4,
    R5Sigma,
    R5SigmaBar,
    L1,
    L2,
    L3,
    L4,
    L5,
    /// `Σ p_v = 1` in a classical presentation.
    Unit,
}

impl RelationTag {
    pub fn name(self) -> &'static str {
        match self {
            RelationTag::R1 => "R1",
            RelationTag::R2 => "R2",
            RelationTag::R3 => "R3",
            RelationTag::R4 => "R4",
            RelationTag::R5Sigma => "R5σ",
            RelationTag::R5SigmaBar => "R5σ̄",
            RelationTag::L1 => "L1",
            RelationTag::L2 => "L2",
            RelationTag::L3 => "L3",
            RelationTag::L4 => "L4",
            RelationTag::L5 => "L5",
            RelationTag::Unit => "Unit",
        }
    }
}

impl fmt::Display for RelationTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `poly = 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub tag: RelationTag,
    pub poly: Poly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpaPresentation {
    vertices: AlgebraShape,
    edges: AlgebraShape,
    generators: Vec<GeneratorSymbol>,
    relations: Vec<Relation>,
    // σ and σ̄ symbols only; `None` is the zero image
    source_map: BTreeMap<GeneratorSymbol, Option<GeneratorSymbol>>,
    range_map: BTreeMap<GeneratorSymbol, Option<GeneratorSymbol>>,
}

impl LpaPresentation {
    pub fn vertex_shape(&self) -> &AlgebraShape {
        &self.vertices
    }

    pub fn edge_shape(&self) -> &AlgebraShape {
        &self.edges
    }

    pub fn generators(&self) -> &[GeneratorSymbol] {
        &self.generators
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn count(&self, tag: RelationTag) -> usize {
        self.relations.iter().filter(|r| r.tag == tag).count()
    }

    /// `s(x)` for a σ or σ̄ symbol; `None` for zero or for ρ symbols.
    pub fn source_of(&self, sym: &GeneratorSymbol) -> Option<GeneratorSymbol> {
        self.source_map.get(sym).copied().flatten()
    }

    pub fn range_of(&self, sym: &GeneratorSymbol) -> Option<GeneratorSymbol> {
        self.range_map.get(sym).copied().flatten()
    }

    pub fn source_map(&self) -> &BTreeMap<GeneratorSymbol, Option<GeneratorSymbol>> {
        &self.source_map
    }

    pub fn range_map(&self) -> &BTreeMap<GeneratorSymbol, Option<GeneratorSymbol>> {
        &self.range_map
    }

    fn shape_of(&self, kind: GenKind) -> &AlgebraShape {
        match kind {
            GenKind::Rho => &self.vertices,
            GenKind::Sigma | GenKind::SigmaBar => &self.edges,
        }
    }

    pub fn is_valid_symbol(&self, s: &GeneratorSymbol) -> bool {
        self.shape_of(s.kind)
            .contains(&MatrixUnit::new(s.block, s.row, s.col))
    }

    /// Machine key such as `rho:v:1:2`.
    pub fn symbol_key(&self, s: &GeneratorSymbol) -> String {
        format!(
            "{}:{}:{}:{}",
            s.kind.key(),
            self.shape_of(s.kind).id(s.block),
            s.row,
            s.col
        )
    }

    pub fn parse_symbol_key(&self, key: &str) -> Option<GeneratorSymbol> {
        // ids may contain ':', so split indices off the right
        let mut parts = key.rsplitn(3, ':');
        let col = parts.next()?.parse().ok()?;
        let row = parts.next()?.parse().ok()?;
        let (kind, id) = parts.next()?.split_once(':')?;
        let kind = GenKind::from_key(kind)?;
        let block = self.shape_of(kind).index_of(id)?;
        let s = GeneratorSymbol::new(kind, block, row, col);
        self.is_valid_symbol(&s).then_some(s)
    }

    /// Text form such as `rho^v_{1,2}`.
    pub fn symbol_text(&self, s: &GeneratorSymbol) -> String {
        format!(
            "{}^{}_{{{},{}}}",
            s.kind.key(),
            self.shape_of(s.kind).id(s.block),
            s.row,
            s.col
        )
    }

    pub fn word_text(&self, w: &Word) -> String {
        if w.is_unit() {
            return "1".into();
        }
        let parts: Vec<String> = w.symbols().iter().map(|s| self.symbol_text(s)).collect();
        parts.join(" ")
    }

    /// Longest terms first, `0` for the zero polynomial.
    pub fn poly_text(&self, p: &Poly) -> String {
        let mut out = String::new();
        for (k, (w, c)) in p.terms().rev().enumerate() {
            let sign = match (k, c < 0) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            };
            out.push_str(sign);
            let a = c.unsigned_abs();
            if a != 1 {
                out.push_str(&format!("{a} "));
            }
            out.push_str(&self.word_text(w));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn relation_text(&self, r: &Relation) -> String {
        format!("{}: {} = 0", r.tag, self.poly_text(&r.poly))
    }
}

fn image(t: &RegularEmbedding, u: MatrixUnit) -> Option<GeneratorSymbol> {
    match t.adjoint_unit(&u).expect("unit of edge shape") {
        UnitImage::Unit(w) => Some(GeneratorSymbol::rho(w.block, w.row, w.col)),
        UnitImage::Zero => None,
    }
}

fn size_classes(b0: &AlgebraShape) -> Vec<(usize, Vec<usize>)> {
    b0.distinct_sizes()
        .into_iter()
        .map(|n| (n, (0..b0.len()).filter(|&v| b0.size(v) == n).collect()))
        .collect()
}

fn delta(a: usize, b: usize) -> i64 {
    i64::from(a == b)
}

/// Generators and relations of `L_K(B)`, in a fixed order: all ρ, σ, σ̄
/// symbols in matrix-unit order, then relation families R1..R5 in turn.
pub fn generate_presentation(q: &QuantumQuiver) -> LpaPresentation {
    let b0 = q.vertex_shape().clone();
    let b1 = q.edge_shape().clone();
    let (src, rng) = (q.source(), q.range());

    let mut generators = Vec::new();
    for kind in [GenKind::Rho, GenKind::Sigma, GenKind::SigmaBar] {
        let shape = if kind == GenKind::Rho { &b0 } else { &b1 };
        generators.extend(
            shape
                .matrix_units()
                .into_iter()
                .map(|u| GeneratorSymbol::new(kind, u.block, u.row, u.col)),
        );
    }

    let mut source_map = BTreeMap::new();
    let mut range_map = BTreeMap::new();
    for u in b1.matrix_units() {
        let sig = GeneratorSymbol::sigma(u.block, u.row, u.col);
        let bar = GeneratorSymbol::sigma_bar(u.block, u.row, u.col);
        let (s, r) = (image(src, u), image(rng, u));
        source_map.insert(sig, s);
        range_map.insert(sig, r);
        // r(σ̄) = s(σ) and s(σ̄) = r(σ)
        range_map.insert(bar, s);
        source_map.insert(bar, r);
    }

    let mut relations = Vec::new();
    let mut push = |tag, poly: Poly| relations.push(Relation { tag, poly });
    let rho = GeneratorSymbol::rho;
    let sig = GeneratorSymbol::sigma;
    let bar = GeneratorSymbol::sigma_bar;

    let classes = size_classes(&b0);
    for (n, vs) in &classes {
        for &v in vs {
            for &w in vs {
                for i in 1..=*n {
                    for k in 1..=*n {
                        let mut p: Poly = (1..=*n)
                            .map(|j| (1, Word::pair(rho(v, i, j), rho(w, j, k))))
                            .collect();
                        p.add_term(-delta(v, w), Word::single(rho(v, i, k)));
                        push(RelationTag::R1, p);
                    }
                }
            }
        }
    }
    for (n, vs) in &classes {
        for i in 1..=*n {
            for j in 1..=*n {
                let mut p: Poly = vs.iter().map(|&v| (1, Word::single(rho(v, i, j)))).collect();
                p.add_term(-delta(i, j), Word::unit());
                push(RelationTag::R2, p);
            }
        }
    }
    for a in 0..b1.len() {
        let m = b1.size(a);
        for i in 1..=m {
            for k in 1..=m {
                let mut p: Poly = (1..=m)
                    .map(|j| (1, Word::pair(bar(a, i, j), sig(a, j, k))))
                    .collect();
                if let Some(r) = image(rng, MatrixUnit::new(a, i, k)) {
                    p.add_term(-1, Word::single(r));
                }
                push(RelationTag::R3, p);
            }
        }
    }
    for v in 0..b0.len() {
        let n = b0.size(v);
        for i in 1..=n {
            for k in 1..=n {
                let images = src
                    .coordinate_map(&MatrixUnit::new(v, i, k))
                    .expect("unit of vertex shape");
                if images.is_empty() {
                    continue;
                }
                let mut p = Poly::symbol(rho(v, i, k));
                for e in images {
                    for j in 1..=b1.size(e.block) {
                        p.add_term(-1, Word::pair(sig(e.block, e.row, j), bar(e.block, j, e.col)));
                    }
                }
                push(RelationTag::R4, p);
            }
        }
    }
    for (tag, make) in [
        (RelationTag::R5Sigma, sig as fn(usize, usize, usize) -> GeneratorSymbol),
        (RelationTag::R5SigmaBar, bar),
    ] {
        for a in 0..b1.len() {
            let m = b1.size(a);
            let map_of = |x: GeneratorSymbol, m: &BTreeMap<GeneratorSymbol, Option<GeneratorSymbol>>| {
                m.get(&x).copied().flatten()
            };
            // x_ik = Σ_j x_ij r(x_jk)
            for i in 1..=m {
                for k in 1..=m {
                    let mut p = Poly::symbol(make(a, i, k));
                    for j in 1..=m {
                        if let Some(r) = map_of(make(a, j, k), &range_map) {
                            p.add_term(-1, Word::pair(make(a, i, j), r));
                        }
                    }
                    push(tag, p);
                }
            }
            // x_ik = Σ_j s(x_ij) x_jk
            for i in 1..=m {
                for k in 1..=m {
                    let mut p = Poly::symbol(make(a, i, k));
                    for j in 1..=m {
                        if let Some(s) = map_of(make(a, i, j), &source_map) {
                            p.add_term(-1, Word::pair(s, make(a, j, k)));
                        }
                    }
                    push(tag, p);
                }
            }
        }
    }

    LpaPresentation {
        vertices: b0,
        edges: b1,
        generators,
        relations,
        source_map,
        range_map,
    }
}

/// The classical presentation of `L_K(E)`: `p_v`, `e`, `e*` subject to
/// L1 (orthogonal idempotents), `Σ p_v = 1`, L2/L3 (endpoint absorption),
/// L4 (`e* f = δ_{ef} p_{r(f)}`) and L5 at every non-sink vertex.
pub fn classical_lpa(g: &DirectedGraph) -> LpaPresentation {
    let q = QuantumQuiver::from_graph(g);
    let b0 = q.vertex_shape().clone();
    let b1 = q.edge_shape().clone();
    let p = |v: usize| GeneratorSymbol::rho(v, 1, 1);
    let e = |a: usize| GeneratorSymbol::sigma(a, 1, 1);
    let es = |a: usize| GeneratorSymbol::sigma_bar(a, 1, 1);
    let src = |a: usize| g.vertex_index(&g.edges()[a].source).expect("validated");
    let rng = |a: usize| g.vertex_index(&g.edges()[a].range).expect("validated");

    let mut generators: Vec<GeneratorSymbol> = (0..b0.len()).map(p).collect();
    generators.extend((0..b1.len()).map(e));
    generators.extend((0..b1.len()).map(es));

    let mut source_map = BTreeMap::new();
    let mut range_map = BTreeMap::new();
    for a in 0..b1.len() {
        source_map.insert(e(a), Some(p(src(a))));
        range_map.insert(e(a), Some(p(rng(a))));
        source_map.insert(es(a), Some(p(rng(a))));
        range_map.insert(es(a), Some(p(src(a))));
    }

    let mut relations = Vec::new();
    let mut push = |tag, poly: Poly| relations.push(Relation { tag, poly });
    for v in 0..b0.len() {
        for w in 0..b0.len() {
            let mut poly = Poly::term(1, Word::pair(p(v), p(w)));
            poly.add_term(-delta(v, w), Word::single(p(v)));
            push(RelationTag::L1, poly);
        }
    }
    if !b0.is_empty() {
        let mut poly: Poly = (0..b0.len()).map(|v| (1, Word::single(p(v)))).collect();
        poly.add_term(-1, Word::unit());
        push(RelationTag::Unit, poly);
    }
    for a in 0..b1.len() {
        push(RelationTag::L2, Poly::symbol(e(a)) - Poly::term(1, Word::pair(e(a), p(rng(a)))));
        push(RelationTag::L2, Poly::symbol(e(a)) - Poly::term(1, Word::pair(p(src(a)), e(a))));
    }
    for a in 0..b1.len() {
        push(RelationTag::L3, Poly::symbol(es(a)) - Poly::term(1, Word::pair(es(a), p(src(a)))));
        push(RelationTag::L3, Poly::symbol(es(a)) - Poly::term(1, Word::pair(p(rng(a)), es(a))));
    }
    for a in 0..b1.len() {
        for f in 0..b1.len() {
            let mut poly = Poly::term(1, Word::pair(es(a), e(f)));
            poly.add_term(-delta(a, f), Word::single(p(rng(f))));
            push(RelationTag::L4, poly);
        }
    }
    for v in 0..b0.len() {
        let out: Vec<usize> = (0..b1.len()).filter(|&a| src(a) == v).collect();
        if out.is_empty() {
            continue;
        }
        let mut poly = Poly::symbol(p(v));
        for a in out {
            poly.add_term(-1, Word::pair(e(a), es(a)));
        }
        push(RelationTag::L5, poly);
    }

    LpaPresentation {
        vertices: b0,
        edges: b1,
        generators,
        relations,
        source_map,
        range_map,
    }
}
