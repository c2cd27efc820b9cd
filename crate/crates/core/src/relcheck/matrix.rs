//! Rectangular matrices of noncommutative polynomials.

use alloc::vec::Vec;
use core::fmt;

use crate::lpa::Poly;

/// Expanded entries larger than this abort the product.
pub const EXPANSION_LIMIT: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionLimit {
    pub row: usize,
    pub col: usize,
    pub terms: usize,
}

impl fmt::Display for ExpansionLimit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "entry ({}, {}) expands to {} terms, over the limit of {}",
            self.row, self.col, self.terms, EXPANSION_LIMIT
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    // row-major
    entries: Vec<Poly>,
}

impl SymbolicMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        SymbolicMatrix {
            rows,
            cols,
            entries: alloc::vec![Poly::zero(); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, row: usize, col: usize) -> &Poly {
        &self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, p: Poly) {
        self.entries[row * self.cols + col] = p;
    }

    /// Entries with positions, row-major.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, &Poly)> + '_ {
        self.entries
            .iter()
            .enumerate()
            .map(move |(k, p)| (k / self.cols.max(1), k % self.cols.max(1), p))
    }

    /// The transpose with every entry replaced by its formal adjoint.
    pub fn star_transpose(&self) -> SymbolicMatrix {
        let mut out = SymbolicMatrix::zeros(self.cols, self.rows);
        for (r, c, p) in self.iter() {
            out.set(c, r, p.star());
        }
        out
    }

    pub fn mul(&self, rhs: &SymbolicMatrix) -> Result<SymbolicMatrix, ExpansionLimit> {
        assert_eq!(self.cols, rhs.rows, "inner dimensions differ");
        let mut out = SymbolicMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Poly::zero();
                for k in 0..self.cols {
                    let (x, y) = (self.get(r, k), rhs.get(k, c));
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    acc = acc + x * y;
                    if acc.len() > EXPANSION_LIMIT {
                        return Err(ExpansionLimit { row: r, col: c, terms: acc.len() });
                    }
                }
                out.set(r, c, acc);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lpa::{GeneratorSymbol, Word};

    #[test]
    fn product_and_star() {
        let s = GeneratorSymbol::sigma(0, 1, 2);
        let mut b = SymbolicMatrix::zeros(1, 2);
        b.set(0, 0, Poly::symbol(s));
        b.set(0, 1, Poly::symbol(s));
        let a = b.star_transpose();
        assert_eq!(a.shape(), (2, 1));
        assert_eq!(a.get(1, 0), &Poly::symbol(s.star()));
        let ba = b.mul(&a).unwrap();
        assert_eq!(ba.get(0, 0), &Poly::term(2, Word::pair(s, s.star())));
    }
}
