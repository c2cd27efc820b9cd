//! Noncommutative integer polynomials over generator symbols.

use alloc::collections::btree_map::Entry;
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenKind {
    Rho,
    Sigma,
    SigmaBar,
}

impl GenKind {
    /// Short tag used in machine-readable symbol keys.
    pub fn key(self) -> &'static str {
        match self {
            GenKind::Rho => "rho",
            GenKind::Sigma => "sig",
            GenKind::SigmaBar => "sigbar",
        }
    }

    pub fn from_key(s: &str) -> Option<Self> {
        match s {
            "rho" => Some(GenKind::Rho),
            "sig" => Some(GenKind::Sigma),
            "sigbar" => Some(GenKind::SigmaBar),
            _ => None,
        }
    }
}

/// `ρ^v_{ij}`, `σ^α_{ij}` or `σ̄^α_{ij}`. `block` indexes the vertex shape
/// for `Rho` and the edge shape otherwise; indices are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorSymbol {
    pub kind: GenKind,
    pub block: usize,
    pub row: usize,
    pub col: usize,
}

impl GeneratorSymbol {
    pub const fn new(kind: GenKind, block: usize, row: usize, col: usize) -> Self {
        GeneratorSymbol {
            kind,
            block,
            row,
            col,
        }
    }

    pub const fn rho(block: usize, row: usize, col: usize) -> Self {
        Self::new(GenKind::Rho, block, row, col)
    }

    pub const fn sigma(block: usize, row: usize, col: usize) -> Self {
        Self::new(GenKind::Sigma, block, row, col)
    }

    pub const fn sigma_bar(block: usize, row: usize, col: usize) -> Self {
        Self::new(GenKind::SigmaBar, block, row, col)
    }

    /// The formal adjoint: swaps σ and σ̄ and transposes indices.
    pub fn star(self) -> Self {
        let kind = match self.kind {
            GenKind::Rho => GenKind::Rho,
            GenKind::Sigma => GenKind::SigmaBar,
            GenKind::SigmaBar => GenKind::Sigma,
        };
        Self::new(kind, self.block, self.col, self.row)
    }
}

/// A monomial. The empty word is the unit `1`. Words are ordered by length
/// first, then lexicographically.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(pub Vec<GeneratorSymbol>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn single(s: GeneratorSymbol) -> Self {
        Word(alloc::vec![s])
    }

    pub fn pair(a: GeneratorSymbol, b: GeneratorSymbol) -> Self {
        Word(alloc::vec![a, b])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[GeneratorSymbol] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Reversed word of starred symbols.
    pub fn star(&self) -> Word {
        Word(self.0.iter().rev().map(|s| s.star()).collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite integer combination of words; absent words have coefficient 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    terms: BTreeMap<Word, i64>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::term(1, Word::unit())
    }

    pub fn term(coeff: i64, word: Word) -> Self {
        let mut p = Poly::zero();
        p.add_term(coeff, word);
        p
    }

    pub fn symbol(s: GeneratorSymbol) -> Self {
        Poly::term(1, Word::single(s))
    }

    pub fn add_term(&mut self, coeff: i64, word: Word) {
        if coeff == 0 {
            return;
        }
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn coeff(&self, word: &Word) -> i64 {
        self.terms.get(word).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, i64)> + '_ {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    /// The largest word and its coefficient.
    pub fn leading(&self) -> Option<(&Word, i64)> {
        self.terms.iter().next_back().map(|(w, &c)| (w, c))
    }

    pub fn max_len(&self) -> usize {
        self.leading().map_or(0, |(w, _)| w.len())
    }

    pub fn scale(&self, k: i64) -> Poly {
        if k == 0 {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(w, &c)| (w.clone(), c * k)).collect(),
        }
    }

    /// `self` or `-self`, whichever has a positive leading coefficient.
    pub fn sign_normalized(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if c < 0 => self.scale(-1),
            _ => self.clone(),
        }
    }

    /// `u * self * w`.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(t, &c)| (left.concat(t).concat(right), c))
                .collect(),
        }
    }

    /// Replaces every occurrence of `sym` by `value` and expands.
    pub fn substitute(&self, sym: GeneratorSymbol, value: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (w, c) in self.terms() {
            let mut acc = Poly::one();
            for &s in w.symbols() {
                let factor = if s == sym { value.clone() } else { Poly::symbol(s) };
                acc = &acc * &factor;
            }
            out = out + acc.scale(c);
        }
        out
    }

    /// The formal adjoint, term by term.
    pub fn star(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(w, &c)| (w.star(), c)).collect(),
        }
    }

    /// All symbols that occur in some word.
    pub fn symbols(&self) -> impl Iterator<Item = GeneratorSymbol> + '_ {
        self.terms.keys().flat_map(|w| w.0.iter().copied())
    }
}

impl FromIterator<(i64, Word)> for Poly {
    fn from_iter<I: IntoIterator<Item = (i64, Word)>>(iter: I) -> Self {
        let mut p = Poly::zero();
        for (c, w) in iter {
            p.add_term(c, w);
        }
        p
    }
}

impl Add for Poly {
    type Output = Poly;

    fn add(mut self, rhs: Poly) -> Poly {
        for (w, c) in rhs.terms {
            self.add_term(c, w);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;

    fn sub(self, rhs: Poly) -> Poly {
        self + rhs.scale(-1)
    }
}

impl Neg for Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        self.scale(-1)
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(ca * cb, a.concat(b));
            }
        }
        out
    }
}
