//! Bounded three-valued equality in a finitely presented commutative
//! monoid.
//!
//! `NotEqual` always carries a homomorphism that is constant on every
//! relation and separates the two elements; `Equal` always carries an
//! explicit chain of relation applications. Everything else is
//! `Inconclusive`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::gcd;

use super::snf::{diagonalize, Diagonal};
use super::{MonoidElement, MonoidError, MonoidPresentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqOptions {
    /// Search radius, in relation applications, from each side.
    pub depth: usize,
    pub max_modulus: u64,
    pub max_truncation: u64,
    /// Visited-state cap for the search, both sides together.
    pub state_limit: usize,
    /// Node cap for each truncation-monoid backtracking run.
    pub truncation_budget: usize,
}

impl Default for EqOptions {
    fn default() -> Self {
        EqOptions {
            depth: 6,
            max_modulus: 12,
            max_truncation: 12,
            state_limit: 200_000,
            truncation_budget: 200_000,
        }
    }
}

/// A monoid homomorphism out of the presented monoid.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// `x -> Σ weights_k x_k mod modulus`.
    Cyclic { modulus: u64, weights: Vec<u64> },
    /// `x -> Σ weights_k x_k` in the integers.
    Integer { weights: Vec<i64> },
    /// `x -> min(cap, Σ weights_k x_k)`, the saturating monoid `{0..cap}`.
    Truncation { cap: u64, weights: Vec<u64> },
}

impl Certificate {
    pub fn eval(&self, x: &[u64]) -> i128 {
        match self {
            Certificate::Cyclic { modulus, weights } => {
                let m = i128::from(*modulus);
                weights
                    .iter()
                    .zip(x)
                    .fold(0, |acc, (&w, &c)| (acc + i128::from(w) * i128::from(c)) % m)
            }
            Certificate::Integer { weights } => weights
                .iter()
                .zip(x)
                .map(|(&w, &c)| i128::from(w) * i128::from(c))
                .sum(),
            Certificate::Truncation { cap, weights } => {
                let s: i128 = weights
                    .iter()
                    .zip(x)
                    .map(|(&w, &c)| i128::from(w) * i128::from(c))
                    .sum();
                s.min(i128::from(*cap))
            }
        }
    }

    /// Constant on every relation of `p`.
    pub fn respects(&self, p: &MonoidPresentation) -> bool {
        p.relations()
            .iter()
            .all(|r| self.eval(&r.lhs) == self.eval(&r.rhs))
    }

    pub fn separates(&self, a: &[u64], b: &[u64]) -> bool {
        self.eval(a) != self.eval(b)
    }

    pub fn describe(&self, generators: &[String]) -> String {
        let list = |w: &mut dyn Iterator<Item = String>| {
            let parts: Vec<String> = generators.iter().zip(w).map(|(g, v)| format!("{g}->{v}")).collect();
            parts.join(", ")
        };
        match self {
            Certificate::Cyclic { modulus, weights } => {
                format!("Z/{modulus}: {}", list(&mut weights.iter().map(|w| format!("{w}"))))
            }
            Certificate::Integer { weights } => {
                format!("Z: {}", list(&mut weights.iter().map(|w| format!("{w}"))))
            }
            Certificate::Truncation { cap, weights } => format!(
                "{{0..{cap}}} saturating: {}",
                list(&mut weights.iter().map(|w| format!("{w}")))
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `path[0] = a`, `path.last() = b`, consecutive entries differ by one
    /// relation applied `k >= 1` times in one direction.
    Equal { path: Vec<MonoidElement> },
    NotEqual(Certificate),
    Inconclusive(String),
}

impl Verdict {
    pub fn is_equal(&self) -> bool {
        matches!(self, Verdict::Equal { .. })
    }

    pub fn is_not_equal(&self) -> bool {
        matches!(self, Verdict::NotEqual(_))
    }
}

pub fn monoid_eq(
    p: &MonoidPresentation,
    a: &MonoidElement,
    b: &MonoidElement,
    opts: &EqOptions,
) -> Result<Verdict, MonoidError> {
    for x in [a, b] {
        if x.0.len() != p.len() {
            return Err(MonoidError::DimensionMismatch {
                expected: p.len(),
                found: x.0.len(),
            });
        }
    }
    if a == b {
        return Ok(Verdict::Equal {
            path: vec![a.clone()],
        });
    }

    if let Some(cert) = linear_certificate(p, a, b, opts) {
        return Ok(Verdict::NotEqual(cert));
    }

    let reason = match search(p, a, b, opts) {
        Search::Found(path) => return Ok(Verdict::Equal { path }),
        Search::Exhausted => format!("no connecting chain within depth {}", opts.depth),
        Search::Limit => format!("search stopped at {} states", opts.state_limit),
    };

    for cap in 1..=opts.max_truncation {
        if let Some(cert) = truncation(p, a, b, cap, opts.truncation_budget) {
            return Ok(Verdict::NotEqual(cert));
        }
    }
    Ok(Verdict::Inconclusive(reason))
}

fn difference_matrix(p: &MonoidPresentation) -> Vec<Vec<i128>> {
    p.relations()
        .iter()
        .map(|r| {
            r.lhs
                .iter()
                .zip(&r.rhs)
                .map(|(&l, &r)| i128::from(l) - i128::from(r))
                .collect()
        })
        .collect()
}

fn reduce(x: i128, m: u64) -> u64 {
    x.rem_euclid(i128::from(m)) as u64
}

/// Cyclic certificates for `k = 2..=max_modulus`, then a lattice test.
fn linear_certificate(
    p: &MonoidPresentation,
    a: &MonoidElement,
    b: &MonoidElement,
    opts: &EqOptions,
) -> Option<Certificate> {
    let n = p.len();
    let s: Diagonal = diagonalize(difference_matrix(p), n)?;
    let diff: Vec<i128> = a.0.iter().zip(&b.0).map(|(&x, &y)| i128::from(x) - i128::from(y)).collect();
    let w = s.transform(&diff)?;
    let check = |c: Certificate| (c.respects(p) && c.separates(&a.0, &b.0)).then_some(c);

    for k in 2..=opts.max_modulus {
        for (i, &wi) in w.iter().enumerate() {
            let d = s.entry(i).unsigned_abs();
            let step = u128::from(k) / gcd(d, u128::from(k));
            if (wi.rem_euclid(i128::from(k)) as u128 * step).is_multiple_of(u128::from(k)) {
                continue;
            }
            let weights = s
                .column(i)
                .iter()
                .map(|&x| reduce(x * step as i128, k))
                .collect();
            if let Some(c) = check(Certificate::Cyclic { modulus: k, weights }) {
                return Some(c);
            }
        }
    }

    for (i, &wi) in w.iter().enumerate() {
        let d = s.entry(i).unsigned_abs();
        let cert = if d == 0 && wi != 0 {
            let weights: Option<Vec<i64>> = s.column(i).iter().map(|&x| i64::try_from(x).ok()).collect();
            Certificate::Integer { weights: weights? }
        } else if d > 1 && wi.unsigned_abs() % d != 0 {
            let modulus = u64::try_from(d).ok()?;
            Certificate::Cyclic {
                modulus,
                weights: s.column(i).iter().map(|&x| reduce(x, modulus)).collect(),
            }
        } else {
            continue;
        };
        if let Some(c) = check(cert) {
            return Some(c);
        }
    }
    None
}

enum Search {
    Found(Vec<MonoidElement>),
    Exhausted,
    Limit,
}

struct Side {
    nodes: Vec<(Vec<u64>, Option<usize>)>,
    index: BTreeMap<Vec<u64>, usize>,
    frontier: Vec<usize>,
}

impl Side {
    fn new(start: &[u64]) -> Self {
        let mut index = BTreeMap::new();
        index.insert(start.to_vec(), 0);
        Side {
            nodes: vec![(start.to_vec(), None)],
            index,
            frontier: vec![0],
        }
    }

    fn chain(&self, mut k: usize) -> Vec<MonoidElement> {
        let mut out = vec![MonoidElement(self.nodes[k].0.clone())];
        while let Some(parent) = self.nodes[k].1 {
            out.push(MonoidElement(self.nodes[parent].0.clone()));
            k = parent;
        }
        out
    }
}

/// All states one move away from `s`, in a fixed order.
fn moves(p: &MonoidPresentation, s: &[u64], bound: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for r in p.relations() {
        if r.lhs == r.rhs {
            continue;
        }
        for (from, to) in [(&r.lhs, &r.rhs), (&r.rhs, &r.lhs)] {
            let mut k: u64 = 1;
            loop {
                let mut next = Vec::with_capacity(s.len());
                let mut ok = true;
                for ((&x, &f), &t) in s.iter().zip(from.iter()).zip(to.iter()) {
                    let Some(removed) = f.checked_mul(k).and_then(|fk| x.checked_sub(fk)) else {
                        ok = false;
                        break;
                    };
                    let Some(v) = t.checked_mul(k).and_then(|tk| removed.checked_add(tk)) else {
                        ok = false;
                        break;
                    };
                    if v > bound {
                        ok = false;
                        break;
                    }
                    next.push(v);
                }
                // coordinates only move monotonically in k, so the first
                // failure ends this direction
                if !ok {
                    break;
                }
                out.push(next);
                k += 1;
            }
        }
    }
    out
}

fn search(p: &MonoidPresentation, a: &MonoidElement, b: &MonoidElement, opts: &EqOptions) -> Search {
    let max = a.0.iter().chain(&b.0).copied().max().unwrap_or(0).max(1);
    let bound = max.saturating_mul(opts.depth as u64);
    let mut sides = [Side::new(&a.0), Side::new(&b.0)];

    for _ in 0..opts.depth {
        for this in 0..2 {
            let other = 1 - this;
            let frontier = core::mem::take(&mut sides[this].frontier);
            let mut next_frontier = Vec::new();
            for k in frontier {
                let state = sides[this].nodes[k].0.clone();
                for next in moves(p, &state, bound) {
                    if sides[this].index.contains_key(&next) {
                        continue;
                    }
                    let id = sides[this].nodes.len();
                    sides[this].nodes.push((next.clone(), Some(k)));
                    sides[this].index.insert(next.clone(), id);
                    next_frontier.push(id);
                    if let Some(&j) = sides[other].index.get(&next) {
                        let (ka, kb) = if this == 0 { (id, j) } else { (j, id) };
                        let mut path = sides[0].chain(ka);
                        path.reverse();
                        path.extend(sides[1].chain(kb).into_iter().skip(1));
                        return Search::Found(path);
                    }
                    if sides[0].nodes.len() + sides[1].nodes.len() > opts.state_limit {
                        return Search::Limit;
                    }
                }
            }
            sides[this].frontier = next_frontier;
        }
    }
    Search::Exhausted
}

/// Backtracking search for weights into `{0..cap}`.
fn truncation(
    p: &MonoidPresentation,
    a: &MonoidElement,
    b: &MonoidElement,
    cap: u64,
    budget: usize,
) -> Option<Certificate> {
    let n = p.len();
    // relations become checkable once their last nonzero coordinate is set
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, r) in p.relations().iter().enumerate() {
        let last = (0..n).rev().find(|&i| r.lhs[i] != 0 || r.rhs[i] != 0);
        match last {
            Some(i) => due[i].push(k),
            None => continue,
        }
    }
    let mut weights = vec![0u64; n];
    let mut nodes = 0usize;
    fn value(weights: &[u64], x: &[u64], cap: u64) -> u64 {
        let s = weights
            .iter()
            .zip(x)
            .fold(0u64, |acc, (&w, &c)| acc.saturating_add(w.saturating_mul(c)));
        s.min(cap)
    }
    fn go(
        t: usize,
        weights: &mut Vec<u64>,
        nodes: &mut usize,
        ctx: (&MonoidPresentation, &[Vec<usize>], &[u64], &[u64], u64, usize),
    ) -> bool {
        let (p, due, a, b, cap, budget) = ctx;
        if t == weights.len() {
            return value(weights, a, cap) != value(weights, b, cap);
        }
        for w in 0..=cap {
            *nodes += 1;
            if *nodes > budget {
                return false;
            }
            weights[t] = w;
            let ok = due[t].iter().all(|&k| {
                let r = &p.relations()[k];
                value(weights, &r.lhs, cap) == value(weights, &r.rhs, cap)
            });
            if ok && go(t + 1, weights, nodes, ctx) {
                return true;
            }
        }
        weights[t] = 0;
        false
    }
    let ctx = (p, due.as_slice(), a.0.as_slice(), b.0.as_slice(), cap, budget);
    go(0, &mut weights, &mut nodes, ctx).then_some(Certificate::Truncation { cap, weights })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::vmonoid::{monoid_presentation, MonoidRelation, MonoidTag};

    fn pres(n: usize, rels: &[(&[u64], &[u64])]) -> MonoidPresentation {
        MonoidPresentation::new(
            (0..n).map(|k| format!("x{k}")).collect(),
            rels.iter()
                .map(|(l, r)| MonoidRelation {
                    lhs: l.to_vec(),
                    rhs: r.to_vec(),
                    tag: MonoidTag::Custom,
                })
                .collect(),
        )
        .unwrap()
    }

    fn el(v: &[u64]) -> MonoidElement {
        MonoidElement(v.to_vec())
    }

    #[test]
    fn reflexive_at_depth_zero() {
        let p = pres(1, &[(&[2], &[4])]);
        let opts = EqOptions { depth: 0, ..EqOptions::default() };
        assert!(monoid_eq(&p, &el(&[3]), &el(&[3]), &opts).unwrap().is_equal());
    }

    #[test]
    fn l24_separates_two_and_three() {
        let p = pres(1, &[(&[2], &[4])]);
        let v = monoid_eq(&p, &el(&[2]), &el(&[3]), &EqOptions::default()).unwrap();
        assert_eq!(
            v,
            Verdict::NotEqual(Certificate::Cyclic { modulus: 2, weights: vec![1] })
        );
        assert!(monoid_eq(&p, &el(&[2]), &el(&[6]), &EqOptions::default()).unwrap().is_equal());
    }

    #[test]
    fn worked_example_equal_within_depth_four() {
        let m = monoid_presentation(&crate::fixtures::worked_example());
        let mut a = MonoidElement::zero(m.len());
        a.0[0] = 8;
        let mut b = MonoidElement::zero(m.len());
        b.0[0] = 12;
        b.0[4] = 2;
        let opts = EqOptions { depth: 4, ..EqOptions::default() };
        let Verdict::Equal { path } = monoid_eq(&m, &a, &b, &opts).unwrap() else {
            panic!("expected Equal");
        };
        assert_eq!(path.first(), Some(&a));
        assert_eq!(path.last(), Some(&b));
        assert!(path.len() - 1 <= 8);
    }

    #[test]
    fn integer_certificate_when_rank_deficient() {
        // x0 = x1 says nothing about x2
        let p = pres(3, &[(&[1, 0, 0], &[0, 1, 0])]);
        let v = monoid_eq(&p, &el(&[0, 0, 13]), &el(&[0, 0, 0]), &EqOptions {
            max_modulus: 0,
            ..EqOptions::default()
        })
        .unwrap();
        let Verdict::NotEqual(c) = v else { panic!("expected NotEqual") };
        assert!(matches!(c, Certificate::Integer { .. }));
        assert!(c.respects(&p));
    }

    #[test]
    fn truncation_certificate_for_idempotent_collapse() {
        // x = 2x: in Z every functional kills x; {0,1} separates x from 0
        let p = pres(1, &[(&[1], &[2])]);
        let v = monoid_eq(&p, &el(&[1]), &el(&[0]), &EqOptions::default()).unwrap();
        assert_eq!(
            v,
            Verdict::NotEqual(Certificate::Truncation { cap: 1, weights: vec![1] })
        );
    }

    #[test]
    fn equal_path_respects_relations() {
        let p = pres(2, &[(&[1, 0], &[0, 2])]);
        let Verdict::Equal { path } =
            monoid_eq(&p, &el(&[2, 0]), &el(&[0, 4]), &EqOptions::default()).unwrap()
        else {
            panic!()
        };
        assert_eq!(path.len(), 2);
    }

    #[test]
    fn dimension_mismatch() {
        let p = pres(2, &[]);
        assert!(monoid_eq(&p, &el(&[1]), &el(&[1, 0]), &EqOptions::default()).is_err());
    }

    #[test]
    fn free_monoid_distinguishes() {
        let p = pres(1, &[(&[1], &[1])]);
        let v = monoid_eq(&p, &el(&[1]), &el(&[2]), &EqOptions::default()).unwrap();
        assert!(v.is_not_equal());
    }
}
