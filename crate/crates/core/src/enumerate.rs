//! Brute-force counts of plane t-ary trees and ordered forests.
//!
//! Everything here is plain big-integer dynamic programming over the
//! recursive shape of the trees; nothing goes through [`crate::series`].
//! A tree is a lone root, or a root with exactly `t` ordered subtrees, and
//! its size counts every vertex.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::exactnum::Rational;

/// Plane trees in which every internal vertex has exactly `t` children.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct TreeFamily {
    t: usize,
}

impl TreeFamily {
    /// Returns `None` for `t = 0`.
    pub fn new(t: usize) -> Option<Self> {
        (t >= 1).then_some(TreeFamily { t })
    }

    pub fn arity(&self) -> usize {
        self.t
    }
}

/// Counts indexed by vertex number `0..=max_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub family: TreeFamily,
    pub counts: Vec<BigUint>,
}

impl CountTable {
    pub fn get(&self, n: usize) -> Option<&BigUint> {
        self.counts.get(n)
    }

    pub fn max_n(&self) -> usize {
        self.counts.len() - 1
    }

    /// Plain-text form `[c0, c1, ...]`.
    pub fn render(&self) -> String {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Serialized as an array of decimal strings; counts outgrow 64 bits quickly.
impl Serialize for CountTable {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.counts.len()))?;
        for c in &self.counts {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// Number of `t`-ary trees on `n` vertices for every `n <= max_n`.
pub fn count_trees(family: TreeFamily, max_n: usize) -> CountTable {
    let t = family.t;
    let mut trees = vec![BigUint::zero(); max_n + 1];
    // seqs[j][m]: ordered sequences of j + 1 trees with m vertices in total
    let mut seqs = vec![vec![BigUint::zero(); max_n + 1]; t];
    for m in 1..=max_n {
        trees[m] = if m == 1 {
            BigUint::one()
        } else {
            seqs[t - 1][m - 1].clone()
        };
        seqs[0][m] = trees[m].clone();
        for j in 1..t {
            let mut acc = BigUint::zero();
            for first in 1..m {
                if trees[first].is_zero() || seqs[j - 1][m - first].is_zero() {
                    continue;
                }
                acc += &trees[first] * &seqs[j - 1][m - first];
            }
            seqs[j][m] = acc;
        }
    }
    CountTable {
        family,
        counts: trees,
    }
}

/// Number of ordered `k`-sequences of `t`-ary trees with `n` vertices in
/// total, for every `n <= max_n`.
pub fn count_forests(family: TreeFamily, k: usize, max_n: usize) -> CountTable {
    let trees = count_trees(family, max_n).counts;
    let mut forests = vec![BigUint::zero(); max_n + 1];
    forests[0] = BigUint::one();
    for _ in 0..k {
        let mut next = vec![BigUint::zero(); max_n + 1];
        for (total, slot) in next.iter_mut().enumerate() {
            for last in 1..=total {
                if trees[last].is_zero() || forests[total - last].is_zero() {
                    continue;
                }
                *slot += &trees[last] * &forests[total - last];
            }
        }
        forests = next;
    }
    CountTable {
        family,
        counts: forests,
    }
}

/// `C(n, k)` by the multiplicative formula; every intermediate quotient is
/// exact.
pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// `(1/n) C(n, (n-1)/t)` when `t` divides `n - 1`, and `0` otherwise.
///
/// # Panics
/// If `n == 0`.
pub fn closed_form(family: TreeFamily, n: usize) -> Rational {
    assert!(n >= 1, "closed form is stated for n >= 1");
    if !(n - 1).is_multiple_of(family.t) {
        return Rational::zero();
    }
    let b = binomial(n, (n - 1) / family.t);
    Rational::new(b, n).expect("n >= 1")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(t: usize) -> TreeFamily {
        TreeFamily::new(t).unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn family_rejects_zero_arity() {
        assert!(TreeFamily::new(0).is_none());
        assert_eq!(fam(3).arity(), 3);
    }

    #[test]
    fn tree_counts() {
        let binary = count_trees(fam(2), 11);
        assert_eq!(binary.counts[1], big(1));
        assert_eq!(binary.counts[7], big(5));
        let want: Vec<u64> = vec![0, 1, 0, 1, 0, 2, 0, 5, 0, 14, 0, 42];
        assert_eq!(binary.counts, want.into_iter().map(big).collect::<Vec<_>>());
        assert_eq!(count_trees(fam(3), 4).counts[4], big(1));
        assert_eq!(
            count_trees(fam(1), 6).counts,
            [0u64, 1, 1, 1, 1, 1, 1].map(big).to_vec()
        );
    }

    #[test]
    fn table_invariants() {
        for t in 1..=5 {
            let table = count_trees(fam(t), 30);
            assert!(table.counts[0].is_zero());
            assert!(table.counts[1].is_one());
            for n in 1..=30 {
                if (n - 1) % t != 0 {
                    assert!(table.counts[n].is_zero(), "t={t} n={n}");
                }
            }
        }
    }

    #[test]
    fn forest_counts() {
        assert_eq!(count_forests(fam(2), 2, 6).counts[6], big(5));
        assert_eq!(
            count_forests(fam(3), 1, 15).counts,
            count_trees(fam(3), 15).counts
        );
        let f = count_forests(fam(2), 4, 10);
        assert!(f.counts[..4].iter().all(|c| c.is_zero()));
        let empty = count_forests(fam(2), 0, 5);
        assert_eq!(empty.counts, [1u64, 0, 0, 0, 0, 0].map(big).to_vec());
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form(fam(2), 5), Rational::from(2));
        assert!(closed_form(fam(2), 2).is_zero());
        assert_eq!(closed_form(fam(3), 4), Rational::from(1));
    }

    #[test]
    fn closed_form_is_integral() {
        for t in 1..=5 {
            for n in 1..=40 {
                let c = closed_form(fam(t), n);
                assert!(c.is_integer());
                if (n - 1) % t == 0 {
                    let scaled = c.to_biguint().unwrap() * BigUint::from(n);
                    assert_eq!(scaled, binomial(n, (n - 1) / t));
                }
            }
        }
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), big(15));
        assert_eq!(binomial(5, 7), big(0));
        assert_eq!(binomial(0, 0), big(1));
        assert_eq!(binomial(60, 30), big(118264581564861424));
    }

    #[test]
    fn large_counts_exceed_u64() {
        let table = count_trees(fam(2), 81);
        assert!(table.counts[81].bits() > 64);
        let json = serde_json::to_string(&count_trees(fam(2), 3)).unwrap();
        assert_eq!(json, r#"["0","1","0","1"]"#);
    }
}
