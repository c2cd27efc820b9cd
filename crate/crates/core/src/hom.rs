//! Regular unital *-homomorphisms between block algebras.
//!
//! A regular map `t: B0 -> B1` is determined, up to the placement of copies,
//! by its order table: `order(t, v, a)` copies of block `v` sit on the
//! diagonal of block `a`. A [`RegularEmbedding`] fixes the placement with
//! explicit 0-based diagonal offsets, which makes the coordinate function
//! `T(v,i,j) = {(a, o+i, o+j) : o in offsets(v,a)}` and the adjoint `t*`
//! computable exactly.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::algebra::{AlgebraShape, IntLinearMap, MatrixUnit};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomError {
    UnknownVertex(String),
    UnknownEdge(String),
    DuplicateEntry { vertex: String, edge: String },
    NotUnital(UnitalityReport),
    OffsetCount { vertex: String, edge: String, expected: usize, found: usize },
    OutOfBounds { vertex: String, edge: String, offset: usize },
    Overlap { edge: String, position: usize },
    Uncovered { edge: String, position: usize },
    ForeignUnit,
}

impl fmt::Display for HomError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HomError::UnknownVertex(id) => write!(f, "unknown vertex block `{id}`"),
            HomError::UnknownEdge(id) => write!(f, "unknown edge block `{id}`"),
            HomError::DuplicateEntry { vertex, edge } => {
                write!(f, "duplicate entry for ({vertex}, {edge})")
            }
            HomError::NotUnital(report) => write!(f, "{report}"),
            HomError::OffsetCount { vertex, edge, expected, found } => write!(
                f,
                "({vertex}, {edge}) needs {expected} offsets, found {found}"
            ),
            HomError::OutOfBounds { vertex, edge, offset } => write!(
                f,
                "copy of {vertex} at offset {offset} does not fit in edge block {edge}"
            ),
            HomError::Overlap { edge, position } => write!(
                f,
                "edge block {edge}: diagonal position {position} is covered twice"
            ),
            HomError::Uncovered { edge, position } => write!(
                f,
                "edge block {edge}: diagonal position {position} is not covered"
            ),
            HomError::ForeignUnit => f.write_str("matrix unit does not belong to the shape"),
        }
    }
}

impl core::error::Error for HomError {}

/// One edge block whose unitality sum fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitalityFailure {
    pub edge: usize,
    pub edge_id: String,
    /// `sum_v n_v * order(v, a)`
    pub weighted_sum: usize,
    /// `m_a`
    pub size: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UnitalityReport {
    pub failures: Vec<UnitalityFailure>,
}

impl fmt::Display for UnitalityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, fail) in self.failures.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "edge {}: {} \u{2260} {}", fail.edge_id, fail.weighted_sum, fail.size)?;
        }
        Ok(())
    }
}

/// Multiplicities `order(t, v, a)` of a homomorphism from the vertex shape
/// into the edge shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderTable {
    domain: AlgebraShape,
    codomain: AlgebraShape,
    entries: Vec<usize>,
}

impl OrderTable {
    pub fn zeros(domain: AlgebraShape, codomain: AlgebraShape) -> Self {
        let entries = vec![0; domain.len() * codomain.len()];
        OrderTable {
            domain,
            codomain,
            entries,
        }
    }

    /// Builds a table from `(vertex id, edge id, order)` triples. Absent
    /// pairs are 0; listing a pair twice is an error.
    pub fn from_entries<'a, I>(
        domain: AlgebraShape,
        codomain: AlgebraShape,
        entries: I,
    ) -> Result<Self, HomError>
    where
        I: IntoIterator<Item = (&'a str, &'a str, usize)>,
    {
        let mut table = OrderTable::zeros(domain, codomain);
        let mut seen = BTreeMap::new();
        for (v, a, n) in entries {
            let vi = table
                .domain
                .index_of(v)
                .ok_or_else(|| HomError::UnknownVertex(v.into()))?;
            let ai = table
                .codomain
                .index_of(a)
                .ok_or_else(|| HomError::UnknownEdge(a.into()))?;
            if seen.insert((vi, ai), ()).is_some() {
                return Err(HomError::DuplicateEntry {
                    vertex: v.into(),
                    edge: a.into(),
                });
            }
            table.set(vi, ai, n);
        }
        Ok(table)
    }

    /// Builds a table from a dense `[vertex][edge]` matrix.
    pub fn from_matrix(domain: AlgebraShape, codomain: AlgebraShape, rows: &[Vec<usize>]) -> Self {
        let mut table = OrderTable::zeros(domain, codomain);
        for (v, row) in rows.iter().enumerate() {
            for (a, &n) in row.iter().enumerate() {
                table.set(v, a, n);
            }
        }
        table
    }

    pub fn domain(&self) -> &AlgebraShape {
        &self.domain
    }

    pub fn codomain(&self) -> &AlgebraShape {
        &self.codomain
    }

    pub fn get(&self, vertex: usize, edge: usize) -> usize {
        self.entries[vertex * self.codomain.len() + edge]
    }

    pub fn set(&mut self, vertex: usize, edge: usize, order: usize) {
        let w = self.codomain.len();
        self.entries[vertex * w + edge] = order;
    }

    /// `sum_v n_v * order(v, a)` for edge block `a`, saturating so that an
    /// overflow still reads as a unitality failure.
    pub fn weighted_sum(&self, edge: usize) -> usize {
        (0..self.domain.len())
            .map(|v| self.domain.size(v).saturating_mul(self.get(v, edge)))
            .fold(0, usize::saturating_add)
    }

    /// Checks unitality, `sum_v n_v * order(v, a) = m_a`, for every edge block.
    pub fn validate(&self) -> Result<(), UnitalityReport> {
        let failures: Vec<_> = (0..self.codomain.len())
            .filter_map(|a| {
                let lhs = self.weighted_sum(a);
                let m = self.codomain.size(a);
                (lhs != m).then(|| UnitalityFailure {
                    edge: a,
                    edge_id: self.codomain.id(a).into(),
                    weighted_sum: lhs,
                    size: m,
                })
            })
            .collect();
        if failures.is_empty() {
            Ok(())
        } else {
            Err(UnitalityReport { failures })
        }
    }

    /// Nonzero entries as `(vertex, edge, order)`, vertex-major.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let w = self.codomain.len();
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(move |(k, &n)| (k / w, k % w, n))
    }
}

/// Either a matrix unit or zero; the value of an adjoint on a basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnitImage {
    Unit(MatrixUnit),
    Zero,
}

impl UnitImage {
    pub fn unit(self) -> Option<MatrixUnit> {
        match self {
            UnitImage::Unit(u) => Some(u),
            UnitImage::Zero => None,
        }
    }
}

/// A diagonal copy of vertex block `vertex` starting at `offset` inside an
/// edge block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Slot {
    pub vertex: usize,
    pub offset: usize,
}

/// A regular unital embedding: an order table plus explicit diagonal offsets
/// for every copy.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RegularEmbedding {
    table: OrderTable,
    offsets: Vec<Vec<usize>>,
    // owner[a][p]: the slot covering diagonal position p of edge block a
    owner: Vec<Vec<Slot>>,
}

impl RegularEmbedding {
    /// The canonical placement: inside each edge block, vertex blocks in
    /// shape order, each contributing its copies consecutively.
    pub fn canonical(table: OrderTable) -> Result<Self, HomError> {
        table.validate().map_err(HomError::NotUnital)?;
        let nv = table.domain.len();
        let na = table.codomain.len();
        let mut offsets = vec![Vec::new(); nv * na];
        for a in 0..na {
            let mut at = 0;
            for v in 0..nv {
                let n = table.domain.size(v);
                for _ in 0..table.get(v, a) {
                    offsets[v * na + a].push(at);
                    at += n;
                }
            }
        }
        Self::from_offsets(table, offsets)
    }

    /// Validates explicit offsets, given as a dense `[vertex * |edges| + edge]`
    /// list, against the table.
    pub fn from_offsets(table: OrderTable, offsets: Vec<Vec<usize>>) -> Result<Self, HomError> {
        table.validate().map_err(HomError::NotUnital)?;
        let nv = table.domain.len();
        let na = table.codomain.len();
        assert_eq!(offsets.len(), nv * na, "offset list must be dense");
        let mut owner: Vec<Vec<Option<Slot>>> =
            (0..na).map(|a| vec![None; table.codomain.size(a)]).collect();
        for v in 0..nv {
            let n = table.domain.size(v);
            for a in 0..na {
                let list = &offsets[v * na + a];
                let vid = || String::from(table.domain.id(v));
                let aid = || String::from(table.codomain.id(a));
                if list.len() != table.get(v, a) {
                    return Err(HomError::OffsetCount {
                        vertex: vid(),
                        edge: aid(),
                        expected: table.get(v, a),
                        found: list.len(),
                    });
                }
                let m = table.codomain.size(a);
                for &o in list {
                    if o + n > m {
                        return Err(HomError::OutOfBounds {
                            vertex: vid(),
                            edge: aid(),
                            offset: o,
                        });
                    }
                    for p in o..o + n {
                        if owner[a][p].is_some() {
                            return Err(HomError::Overlap {
                                edge: aid(),
                                position: p,
                            });
                        }
                        owner[a][p] = Some(Slot { vertex: v, offset: o });
                    }
                }
            }
        }
        let owner = owner
            .into_iter()
            .enumerate()
            .map(|(a, col)| {
                col.into_iter()
                    .enumerate()
                    .map(|(p, s)| {
                        s.ok_or_else(|| HomError::Uncovered {
                            edge: table.codomain.id(a).into(),
                            position: p,
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RegularEmbedding {
            table,
            offsets,
            owner,
        })
    }

    pub fn table(&self) -> &OrderTable {
        &self.table
    }

    pub fn domain(&self) -> &AlgebraShape {
        &self.table.domain
    }

    pub fn codomain(&self) -> &AlgebraShape {
        &self.table.codomain
    }

    pub fn order(&self, vertex: usize, edge: usize) -> usize {
        self.table.get(vertex, edge)
    }

    /// Diagonal offsets of the copies of `vertex` inside `edge`, in
    /// placement order.
    pub fn offsets(&self, vertex: usize, edge: usize) -> &[usize] {
        &self.offsets[vertex * self.table.codomain.len() + edge]
    }

    /// The copy covering diagonal position `position` (0-based) of `edge`.
    pub fn slot_at(&self, edge: usize, position: usize) -> Slot {
        self.owner[edge][position]
    }

    /// Slots of `edge` in diagonal order, one per copy.
    pub fn slots(&self, edge: usize) -> Vec<Slot> {
        let mut out: Vec<Slot> = Vec::new();
        for &s in &self.owner[edge] {
            if out.last() != Some(&s) {
                out.push(s);
            }
        }
        out
    }

    /// Whether the placement is the canonical one for its table.
    pub fn is_canonical(&self) -> bool {
        RegularEmbedding::canonical(self.table.clone())
            .map(|c| c.offsets == self.offsets)
            .unwrap_or(false)
    }

    /// Reads the order table back from the offset lists.
    pub fn reconstructed_orders(&self) -> OrderTable {
        let na = self.table.codomain.len();
        let mut t = OrderTable::zeros(self.table.domain.clone(), self.table.codomain.clone());
        for (k, list) in self.offsets.iter().enumerate() {
            t.set(k / na, k % na, list.len());
        }
        t
    }

    /// `T(v,i,j)`: the edge matrix units in the image of `e^v_{ij}`.
    pub fn coordinate_map(&self, unit: &MatrixUnit) -> Result<Vec<MatrixUnit>, HomError> {
        if !self.domain().contains(unit) {
            return Err(HomError::ForeignUnit);
        }
        let mut out = Vec::new();
        for a in 0..self.codomain().len() {
            for &o in self.offsets(unit.block, a) {
                out.push(MatrixUnit::new(a, o + unit.row, o + unit.col));
            }
        }
        Ok(out)
    }

    /// The adjoint `t*` on an edge matrix unit: the unique vertex unit whose
    /// image contains it, or zero when row and column fall in different
    /// copies.
    pub fn adjoint_unit(&self, unit: &MatrixUnit) -> Result<UnitImage, HomError> {
        if !self.codomain().contains(unit) {
            return Err(HomError::ForeignUnit);
        }
        let a = &self.owner[unit.block];
        let r = a[unit.row - 1];
        let c = a[unit.col - 1];
        Ok(if r == c {
            UnitImage::Unit(MatrixUnit::new(
                r.vertex,
                unit.row - r.offset,
                unit.col - r.offset,
            ))
        } else {
            UnitImage::Zero
        })
    }

    /// The 0/1 matrix of the embedding in the matrix-unit bases.
    pub fn to_linear_map(&self) -> IntLinearMap {
        let dom = self.domain().clone();
        let cod = self.codomain().clone();
        let mut m = IntLinearMap::zero(dom.clone(), cod.clone());
        for (col, u) in dom.matrix_units().iter().enumerate() {
            for img in self.coordinate_map(u).expect("unit of own domain") {
                let row = cod.unit_index(&img).expect("image inside codomain");
                m.add(row, col, 1);
            }
        }
        m
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(blocks: &[(&str, usize)]) -> AlgebraShape {
        AlgebraShape::new(blocks.iter().map(|&(id, n)| (id, n))).unwrap()
    }

    fn worked_shapes() -> (AlgebraShape, AlgebraShape) {
        (
            shape(&[("v1", 1), ("v2", 3), ("v3", 2), ("v4", 2), ("v5", 4)]),
            shape(&[("a4", 4), ("a6", 6)]),
        )
    }

    fn worked_source() -> OrderTable {
        let (b0, b1) = worked_shapes();
        OrderTable::from_entries(b0, b1, [("v1", "a4", 1), ("v2", "a4", 1), ("v2", "a6", 2)])
            .unwrap()
    }

    fn worked_range() -> OrderTable {
        let (b0, b1) = worked_shapes();
        OrderTable::from_entries(
            b0,
            b1,
            [("v3", "a4", 1), ("v4", "a4", 1), ("v4", "a6", 1), ("v5", "a6", 1)],
        )
        .unwrap()
    }

    #[test]
    fn identity_table_validates() {
        let t = OrderTable::from_entries(shape(&[("v", 1)]), shape(&[("a", 1)]), [("v", "a", 1)])
            .unwrap();
        assert!(t.validate().is_ok());
    }

    #[test]
    fn worked_tables_validate() {
        assert!(worked_source().validate().is_ok());
        assert!(worked_range().validate().is_ok());
    }

    #[test]
    fn unitality_violation_reports_both_sides() {
        let t = OrderTable::from_entries(shape(&[("v", 2)]), shape(&[("a", 3)]), [("v", "a", 1)])
            .unwrap();
        let report = t.validate().unwrap_err();
        assert_eq!(report.failures.len(), 1);
        assert_eq!(report.failures[0].weighted_sum, 2);
        assert_eq!(report.failures[0].size, 3);
        assert_eq!(alloc::format!("{report}"), "edge a: 2 \u{2260} 3");
    }

    #[test]
    fn unknown_and_duplicate_ids() {
        let (b0, b1) = worked_shapes();
        assert_eq!(
            OrderTable::from_entries(b0.clone(), b1.clone(), [("vx", "a4", 1)]),
            Err(HomError::UnknownVertex("vx".into()))
        );
        assert_eq!(
            OrderTable::from_entries(b0.clone(), b1.clone(), [("v1", "ax", 1)]),
            Err(HomError::UnknownEdge("ax".into()))
        );
        assert!(matches!(
            OrderTable::from_entries(b0, b1, [("v1", "a4", 1), ("v1", "a4", 1)]),
            Err(HomError::DuplicateEntry { .. })
        ));
    }

    #[test]
    fn canonical_offsets_worked_example() {
        let s = RegularEmbedding::canonical(worked_source()).unwrap();
        assert_eq!(s.offsets(0, 0), &[0]);
        assert_eq!(s.offsets(1, 0), &[1]);
        assert_eq!(s.offsets(1, 1), &[0, 3]);
        let r = RegularEmbedding::canonical(worked_range()).unwrap();
        assert_eq!(r.offsets(2, 0), &[0]);
        assert_eq!(r.offsets(3, 0), &[2]);
        assert_eq!(r.offsets(3, 1), &[0]);
        assert_eq!(r.offsets(4, 1), &[2]);
    }

    #[test]
    fn canonical_consecutive_copies() {
        let t = OrderTable::from_entries(shape(&[("v", 2)]), shape(&[("a", 6)]), [("v", "a", 3)])
            .unwrap();
        let e = RegularEmbedding::canonical(t).unwrap();
        assert_eq!(e.offsets(0, 0), &[0, 2, 4]);
        let t1 = OrderTable::from_entries(shape(&[("v", 1)]), shape(&[("a", 1)]), [("v", "a", 1)])
            .unwrap();
        assert_eq!(RegularEmbedding::canonical(t1).unwrap().offsets(0, 0), &[0]);
    }

    #[test]
    fn canonical_rejects_non_unital() {
        let t = OrderTable::from_entries(shape(&[("v", 2)]), shape(&[("a", 3)]), [("v", "a", 1)])
            .unwrap();
        assert!(matches!(
            RegularEmbedding::canonical(t),
            Err(HomError::NotUnital(_))
        ));
    }

    #[test]
    fn coordinate_map_worked_example() {
        let (b0, b1) = worked_shapes();
        let s = RegularEmbedding::canonical(worked_source()).unwrap();
        let got = s.coordinate_map(&b0.unit("v2", 1, 2).unwrap()).unwrap();
        let want = vec![
            b1.unit("a4", 2, 3).unwrap(),
            b1.unit("a6", 1, 2).unwrap(),
            b1.unit("a6", 4, 5).unwrap(),
        ];
        assert_eq!(got, want);
        let v1 = s.coordinate_map(&b0.unit("v1", 1, 1).unwrap()).unwrap();
        assert_eq!(v1, vec![b1.unit("a4", 1, 1).unwrap()]);
        for i in 1..=2 {
            for j in 1..=2 {
                let u = b0.unit("v3", i, j).unwrap();
                assert!(s.coordinate_map(&u).unwrap().is_empty());
            }
        }
    }

    #[test]
    fn adjoint_worked_example() {
        let (b0, b1) = worked_shapes();
        let r = RegularEmbedding::canonical(worked_range()).unwrap();
        assert_eq!(
            r.adjoint_unit(&b1.unit("a4", 3, 3).unwrap()).unwrap(),
            UnitImage::Unit(b0.unit("v4", 1, 1).unwrap())
        );
        assert_eq!(
            r.adjoint_unit(&b1.unit("a6", 1, 5).unwrap()).unwrap(),
            UnitImage::Zero
        );
    }

    #[test]
    fn adjoint_identity_case() {
        let t = OrderTable::from_entries(shape(&[("v", 1)]), shape(&[("a", 1)]), [("v", "a", 1)])
            .unwrap();
        let e = RegularEmbedding::canonical(t).unwrap();
        assert_eq!(
            e.adjoint_unit(&MatrixUnit::new(0, 1, 1)).unwrap(),
            UnitImage::Unit(MatrixUnit::new(0, 1, 1))
        );
    }

    #[test]
    fn foreign_units_rejected() {
        let s = RegularEmbedding::canonical(worked_source()).unwrap();
        assert_eq!(
            s.coordinate_map(&MatrixUnit::new(0, 2, 1)),
            Err(HomError::ForeignUnit)
        );
        assert_eq!(
            s.adjoint_unit(&MatrixUnit::new(2, 1, 1)),
            Err(HomError::ForeignUnit)
        );
    }

    #[test]
    fn explicit_offsets_validated() {
        let (b0, b1) = (shape(&[("v1", 1), ("v2", 1)]), shape(&[("a", 4)]));
        let t = OrderTable::from_entries(b0, b1, [("v1", "a", 2), ("v2", "a", 2)]).unwrap();
        let ok = RegularEmbedding::from_offsets(t.clone(), vec![vec![0, 2], vec![1, 3]]).unwrap();
        assert!(!ok.is_canonical());
        assert!(matches!(
            RegularEmbedding::from_offsets(t.clone(), vec![vec![0, 1], vec![1, 3]]),
            Err(HomError::Overlap { position: 1, .. })
        ));
        assert!(matches!(
            RegularEmbedding::from_offsets(t.clone(), vec![vec![0, 4], vec![1, 3]]),
            Err(HomError::OutOfBounds { offset: 4, .. })
        ));
        assert!(matches!(
            RegularEmbedding::from_offsets(t, vec![vec![0], vec![1, 3]]),
            Err(HomError::OffsetCount { expected: 2, found: 1, .. })
        ));
    }

    #[test]
    fn slots_in_diagonal_order() {
        let r = RegularEmbedding::canonical(worked_range()).unwrap();
        let slots = r.slots(1);
        assert_eq!(
            slots,
            vec![Slot { vertex: 3, offset: 0 }, Slot { vertex: 4, offset: 2 }]
        );
    }
}
