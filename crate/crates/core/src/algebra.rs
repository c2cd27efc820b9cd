//! Finite-dimensional C*-algebras as ordered lists of matrix blocks.
//!
//! `AlgebraShape` stands for `M_{n_1}(C) x ... x M_{n_k}(C)`. Its matrix
//! units `e^k_{ij}` are enumerated block by block, row-major inside a block,
//! and that order is the basis order used by [`IntLinearMap`].

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// One matrix block `M_size(C)` with a user-facing identifier.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Block {
    pub id: String,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ShapeError {
    DuplicateId(String),
    ZeroSize(String),
    EmptyId,
    /// The dimension `sum n^2` does not fit in `usize`.
    TooLarge,
}

impl fmt::Display for ShapeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeError::DuplicateId(id) => write!(f, "duplicate block id `{id}`"),
            ShapeError::ZeroSize(id) => write!(f, "block `{id}` has size 0"),
            ShapeError::EmptyId => f.write_str("empty block id"),
            ShapeError::TooLarge => f.write_str("total dimension overflows"),
        }
    }
}

impl core::error::Error for ShapeError {}

/// A finite-dimensional C*-algebra given by its block decomposition.
///
/// The empty list is the zero algebra. List order matters: it fixes the
/// matrix-unit order and the fill order of canonical embeddings.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraShape {
    blocks: Vec<Block>,
    // prefix sums of size^2, one entry per block plus the total
    unit_starts: Vec<usize>,
}

impl AlgebraShape {
    pub fn new<I, S>(blocks: I) -> Result<Self, ShapeError>
    where
        I: IntoIterator<Item = (S, usize)>,
        S: Into<String>,
    {
        let mut seen = BTreeMap::new();
        let mut out = Vec::new();
        for (id, size) in blocks {
            let id = id.into();
            if id.is_empty() {
                return Err(ShapeError::EmptyId);
            }
            if size == 0 {
                return Err(ShapeError::ZeroSize(id));
            }
            if seen.insert(id.clone(), ()).is_some() {
                return Err(ShapeError::DuplicateId(id));
            }
            out.push(Block { id, size });
        }
        let mut unit_starts = Vec::with_capacity(out.len() + 1);
        let mut acc = 0;
        for b in &out {
            unit_starts.push(acc);
            acc = b
                .size
                .checked_mul(b.size)
                .and_then(|sq| sq.checked_add(acc))
                .ok_or(ShapeError::TooLarge)?;
        }
        unit_starts.push(acc);
        Ok(AlgebraShape {
            blocks: out,
            unit_starts,
        })
    }

    /// The zero algebra.
    pub fn zero() -> Self {
        AlgebraShape {
            blocks: Vec::new(),
            unit_starts: alloc::vec![0],
        }
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn size(&self, block: usize) -> usize {
        self.blocks[block].size
    }

    pub fn id(&self, block: usize) -> &str {
        &self.blocks[block].id
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.blocks.iter().position(|b| b.id == id)
    }

    /// Complex dimension, `sum size^2`.
    pub fn dimension(&self) -> usize {
        *self.unit_starts.last().unwrap_or(&0)
    }

    /// `sum size`, the trace of the unit.
    pub fn total_size(&self) -> usize {
        self.blocks.iter().map(|b| b.size).sum()
    }

    pub fn is_commutative(&self) -> bool {
        self.blocks.iter().all(|b| b.size == 1)
    }

    /// Distinct block sizes in increasing order.
    pub fn distinct_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks.iter().map(|b| b.size).collect();
        sizes.sort_unstable();
        sizes.dedup();
        sizes
    }

    /// All matrix units: blocks in list order, row-major within a block.
    pub fn matrix_units(&self) -> Vec<MatrixUnit> {
        let mut out = Vec::with_capacity(self.dimension());
        for (k, b) in self.blocks.iter().enumerate() {
            for row in 1..=b.size {
                for col in 1..=b.size {
                    out.push(MatrixUnit::new(k, row, col));
                }
            }
        }
        out
    }

    /// Looks up a matrix unit by block id and 1-based indices.
    pub fn unit(&self, id: &str, row: usize, col: usize) -> Option<MatrixUnit> {
        let k = self.index_of(id)?;
        let u = MatrixUnit::new(k, row, col);
        self.contains(&u).then_some(u)
    }

    pub fn contains(&self, u: &MatrixUnit) -> bool {
        u.block < self.blocks.len()
            && (1..=self.blocks[u.block].size).contains(&u.row)
            && (1..=self.blocks[u.block].size).contains(&u.col)
    }

    /// Position of `u` in [`matrix_units`](Self::matrix_units) order.
    pub fn unit_index(&self, u: &MatrixUnit) -> Option<usize> {
        if !self.contains(u) {
            return None;
        }
        let n = self.blocks[u.block].size;
        Some(self.unit_starts[u.block] + (u.row - 1) * n + (u.col - 1))
    }

    /// Inverse of [`unit_index`](Self::unit_index).
    pub fn unit_at(&self, index: usize) -> Option<MatrixUnit> {
        if index >= self.dimension() {
            return None;
        }
        let k = self.unit_starts.partition_point(|&s| s <= index) - 1;
        let n = self.blocks[k].size;
        let local = index - self.unit_starts[k];
        Some(MatrixUnit::new(k, local / n + 1, local % n + 1))
    }

    /// Renders `u` as `(id,row,col)`.
    pub fn describe(&self, u: &MatrixUnit) -> String {
        alloc::format!("({},{},{})", self.id(u.block), u.row, u.col)
    }
}

/// A matrix unit `e^block_{row,col}`; `block` indexes the owning shape and
/// `row`, `col` are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatrixUnit {
    pub block: usize,
    pub row: usize,
    pub col: usize,
}

impl MatrixUnit {
    pub const fn new(block: usize, row: usize, col: usize) -> Self {
        MatrixUnit { block, row, col }
    }

    pub fn is_diagonal(&self) -> bool {
        self.row == self.col
    }
}

/// An integer matrix of a linear map between two algebras, written in the
/// matrix-unit bases. Entries are keyed `(codomain unit index, domain unit
/// index)`; absent entries are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntLinearMap {
    domain: AlgebraShape,
    codomain: AlgebraShape,
    entries: BTreeMap<(usize, usize), i64>,
}

impl IntLinearMap {
    pub fn zero(domain: AlgebraShape, codomain: AlgebraShape) -> Self {
        IntLinearMap {
            domain,
            codomain,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(shape: AlgebraShape) -> Self {
        let entries = (0..shape.dimension()).map(|i| ((i, i), 1)).collect();
        IntLinearMap {
            domain: shape.clone(),
            codomain: shape,
            entries,
        }
    }

    pub fn domain(&self) -> &AlgebraShape {
        &self.domain
    }

    pub fn codomain(&self) -> &AlgebraShape {
        &self.codomain
    }

    /// Adds `value` to the entry at (`row`, `col`). Panics when the indices
    /// fall outside the shapes' dimensions.
    pub fn add(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.codomain.dimension() && col < self.domain.dimension());
        let e = self.entries.entry((row, col)).or_insert(0);
        *e += value;
        if *e == 0 {
            self.entries.remove(&(row, col));
        }
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries.get(&(row, col)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `((row, col), value)` in row-major order.
    pub fn nonzero(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    /// The image of basis vector `col` as a sparse column.
    pub fn column(&self, col: usize) -> Vec<(usize, i64)> {
        self.entries
            .iter()
            .filter(|((_, c), _)| *c == col)
            .map(|(&(r, _), &v)| (r, v))
            .collect()
    }

    /// The matrix transpose, with domain and codomain swapped. Over the
    /// orthonormal matrix-unit basis and with integer entries this is the
    /// Hilbert-space adjoint for the trace inner product.
    pub fn transpose(&self) -> IntLinearMap {
        IntLinearMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            entries: self.entries.iter().map(|(&(r, c), &v)| ((c, r), v)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn shape(sizes: &[usize]) -> AlgebraShape {
        AlgebraShape::new(
            sizes
                .iter()
                .enumerate()
                .map(|(i, &n)| (alloc::format!("v{}", i + 1), n)),
        )
        .unwrap()
    }

    #[test]
    fn single_unit() {
        let s = AlgebraShape::new([("v", 1)]).unwrap();
        assert_eq!(s.matrix_units(), vec![MatrixUnit::new(0, 1, 1)]);
    }

    #[test]
    fn row_major_inside_block() {
        let s = AlgebraShape::new([("v", 2)]).unwrap();
        let units: Vec<_> = s.matrix_units().iter().map(|u| (u.row, u.col)).collect();
        assert_eq!(units, vec![(1, 1), (1, 2), (2, 1), (2, 2)]);
    }

    #[test]
    fn worked_vertex_shape_has_34_units() {
        let s = shape(&[1, 3, 2, 2, 4]);
        assert_eq!(s.matrix_units().len(), 34);
        assert_eq!(s.dimension(), 34);
        assert_eq!(s.total_size(), 12);
    }

    #[test]
    fn unit_index_round_trips() {
        let s = shape(&[1, 3, 2]);
        for (i, u) in s.matrix_units().iter().enumerate() {
            assert_eq!(s.unit_index(u), Some(i));
            assert_eq!(s.unit_at(i), Some(*u));
        }
        assert_eq!(s.unit_at(s.dimension()), None);
        assert_eq!(s.unit_index(&MatrixUnit::new(1, 4, 1)), None);
    }

    #[test]
    fn rejects_bad_blocks() {
        assert_eq!(
            AlgebraShape::new([("a", 1), ("a", 2)]),
            Err(ShapeError::DuplicateId("a".into()))
        );
        assert_eq!(
            AlgebraShape::new([("a", 0)]),
            Err(ShapeError::ZeroSize("a".into()))
        );
        assert_eq!(
            AlgebraShape::new([("a", usize::MAX)]),
            Err(ShapeError::TooLarge)
        );
    }

    #[test]
    fn zero_algebra() {
        let z = AlgebraShape::zero();
        assert!(z.is_empty());
        assert_eq!(z.dimension(), 0);
        assert!(z.matrix_units().is_empty());
        assert_eq!(z, AlgebraShape::new(Vec::<(String, usize)>::new()).unwrap());
    }

    #[test]
    fn transpose_of_zero_and_identity() {
        let s = shape(&[2, 1]);
        let z = IntLinearMap::zero(s.clone(), shape(&[3]));
        let zt = z.transpose();
        assert_eq!(zt.domain(), &shape(&[3]));
        assert_eq!(zt.nonzero().count(), 0);
        let id = IntLinearMap::identity(s);
        assert_eq!(id.transpose(), id);
    }

    #[test]
    fn add_cancels_to_sparse_zero() {
        let s = shape(&[1]);
        let mut m = IntLinearMap::zero(s.clone(), s);
        m.add(0, 0, 3);
        m.add(0, 0, -3);
        assert_eq!(m.nonzero().count(), 0);
    }
}
