//! Contraction by whole relation instances.
//!
//! A relation `P = 0` is oriented with its longest words as the pattern.
//! An instance at context `(u, w)` with scale `c` is present in a
//! polynomial when every pattern word `t` occurs as `u t w` with coefficient
//! exactly `c p_t`; contraction subtracts `c u P w`, which removes all of
//! those words and adds only shorter ones, so reduction terminates.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use crate::lpa::{Poly, Relation, RelationTag, Word};

struct Rule {
    tag: RelationTag,
    poly: Poly,
    pattern: Vec<(Word, i64)>,
}

pub(super) struct RewriteSystem {
    rules: Vec<Rule>,
    // pattern word -> (rule, coefficient of that word)
    index: BTreeMap<Word, Vec<(usize, i64)>>,
    max_pattern: usize,
}

/// Outcome of reducing one polynomial.
pub(super) struct Reduction {
    pub residual: Poly,
    pub tags: BTreeSet<RelationTag>,
}

impl RewriteSystem {
    pub fn new(relations: &[Relation]) -> Self {
        let mut rules = Vec::new();
        let mut index: BTreeMap<Word, Vec<(usize, i64)>> = BTreeMap::new();
        let mut max_pattern = 0;
        for r in relations {
            let len = r.poly.max_len();
            if len == 0 {
                continue;
            }
            let pattern: Vec<(Word, i64)> = r
                .poly
                .terms()
                .filter(|(w, _)| w.len() == len)
                .map(|(w, c)| (w.clone(), c))
                .collect();
            let k = rules.len();
            for (w, c) in &pattern {
                index.entry(w.clone()).or_default().push((k, *c));
            }
            max_pattern = max_pattern.max(len);
            rules.push(Rule {
                tag: r.tag,
                poly: r.poly.clone(),
                pattern,
            });
        }
        RewriteSystem {
            rules,
            index,
            max_pattern,
        }
    }

    /// First instance in scan order: words longest first, longer pattern
    /// lengths before shorter, positions left to right.
    fn find(&self, p: &Poly) -> Option<(usize, Word, Word, i64)> {
        for (word, coeff) in p.terms().rev() {
            let syms = word.symbols();
            for len in (1..=self.max_pattern.min(syms.len())).rev() {
                for pos in 0..=syms.len() - len {
                    let sub = Word(syms[pos..pos + len].to_vec());
                    let Some(cands) = self.index.get(&sub) else {
                        continue;
                    };
                    let u = Word(syms[..pos].to_vec());
                    let w = Word(syms[pos + len..].to_vec());
                    for &(k, pc) in cands {
                        if coeff % pc != 0 {
                            continue;
                        }
                        let c = coeff / pc;
                        let whole = self.rules[k]
                            .pattern
                            .iter()
                            .all(|(t, tc)| p.coeff(&u.concat(t).concat(&w)) == c * tc);
                        if whole {
                            return Some((k, u, w, c));
                        }
                    }
                }
            }
        }
        None
    }

    pub fn reduce(&self, p: &Poly, step_cap: usize) -> Reduction {
        let mut cur = p.clone();
        let mut tags = BTreeSet::new();
        let mut steps = 0;
        while steps < step_cap {
            let Some((k, u, w, c)) = self.find(&cur) else { break };
            let rule = &self.rules[k];
            let instance = rule.poly.sandwich(&u, &w).scale(c);
            let next = cur.clone() - instance.clone();
            // the instance must leave exactly by re-expansion
            debug_assert_eq!(cur.clone() - next.clone(), instance);
            debug_assert!(rule
                .pattern
                .iter()
                .all(|(t, _)| next.coeff(&u.concat(t).concat(&w)) == 0));
            cur = next;
            tags.insert(rule.tag);
            steps += 1;
        }
        Reduction {
            residual: cur,
            tags,
        }
    }
}
