//! Integer partitions, Young-diagram combinatorics, and the index set of
//! shapes that carry the thagomizer closed form.
//!
//! Partitions compare lexicographically on their parts, so the *decreasing*
//! lexicographic order used for every public listing is the reverse of
//! `Ord`. All listing functions already return that order.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("partition parts must be positive, got {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("partition parts must be weakly decreasing, got {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("{what} is undefined for {partition} (needs at least {min_len} parts)")]
    TooShort {
        what: &'static str,
        partition: Partition,
        min_len: usize,
    },
}

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

/// Builds a [`Partition`] from literal parts, panicking on invalid input.
#[macro_export]
macro_rules! partition {
    () => { $crate::partition::Partition::empty() };
    ($($p:expr),+ $(,)?) => {
        $crate::partition::Partition::new(vec![$($p),+]).expect("invalid partition literal")
    };
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart(parts));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Partition { parts })
    }

    /// Like [`Partition::new`] but drops trailing zero parts first, so shapes
    /// such as `(n, 0)` written out of a summation collapse to `(n)`.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row shape `(n)`, or the empty partition when `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts, written ℓ(λ) in the literature.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn last_part(&self) -> Option<usize> {
        self.parts.last().copied()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0usize, 0usize);
        for i in 0..len {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Multiset union of parts, i.e. the index of the product `h_λ h_μ`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() && j < other.len() {
            if self.parts[i] >= other.parts[j] {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.parts[i..]);
        parts.extend_from_slice(&other.parts[j..]);
        Partition { parts }
    }

    /// Hook lengths of every cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push(row - j + conj.part(j) - i - 1);
            }
        }
        hooks
    }

    /// Number of standard Young tableaux of this shape, by the hook-length
    /// formula. This is the dimension of the irreducible `S_n`-module `V_λ`.
    pub fn syt_count(&self) -> BigUint {
        let mut numerator = BigUint::one();
        for k in 2..=self.size() {
            numerator *= k;
        }
        let mut denominator = BigUint::one();
        for h in self.hook_lengths() {
            denominator *= h;
        }
        let (count, rem) = (&numerator / &denominator, &numerator % &denominator);
        assert!(rem.is_zero(), "hook product must divide n! for {self}");
        count
    }

    pub fn is_valid(&self) -> bool {
        self.parts.iter().all(|&p| p > 0) && self.parts.windows(2).all(|w| w[0] >= w[1])
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All partitions of `n` in decreasing lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn fill(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=remaining.min(max_part)).rev() {
            prefix.push(first);
            fill(remaining - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    fill(n, n, &mut Vec::new(), &mut out);
    out
}

/// Shapes `μ ⊇ λ` such that `μ/λ` is a horizontal strip of `k` cells, in
/// decreasing lexicographic order. When `max_len` is set, shapes with more
/// rows are dropped (the Pieri rule in finitely many variables).
pub fn horizontal_strips(lambda: &Partition, k: usize, max_len: Option<usize>) -> Vec<Partition> {
    fn extend(lambda: &Partition, row: usize, remaining: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let rows = lambda.len() + 1;
        if row == rows {
            if remaining == 0 {
                let mut parts = current.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition { parts });
            }
            return;
        }
        let base = lambda.part(row);
        let room = if row == 0 {
            remaining
        } else {
            (lambda.part(row - 1) - base).min(remaining)
        };
        for added in (0..=room).rev() {
            current.push(base + added);
            extend(lambda, row + 1, remaining - added, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    extend(lambda, 0, k, &mut Vec::with_capacity(lambda.len() + 1), &mut out);
    if let Some(cap) = max_len {
        out.retain(|mu| mu.len() <= cap);
    }
    out
}

/// Partitions of `n` that index the non-trivial terms of the thagomizer
/// closed form: shapes `(a, b, 2^i, η)` with `1 < a < n`, `η ∈ {0, 1}`.
///
/// Only a single part equal to 1 is admitted; `(a, 1, 1)` is excluded.
pub fn upsilon_set(n: usize) -> Vec<Partition> {
    partitions_of(n).into_iter().filter(|p| in_upsilon(p, n)).collect()
}

pub fn in_upsilon(p: &Partition, n: usize) -> bool {
    p.size() == n
        && p.part(0) >= 2
        && p.part(0) < n
        && p.parts().iter().skip(2).all(|&x| x <= 2)
        && p.parts().iter().filter(|&&x| x == 1).count() <= 1
}

/// Multiplicity weight of `s_λ` in the closed form: `λ₁ − 1` for the hook
/// `(n−1, 1)`, `λ₁ − λ₂ + 1` otherwise.
pub fn kappa(lambda: &Partition) -> Result<usize, PartitionError> {
    if lambda.len() < 2 {
        return Err(PartitionError::TooShort {
            what: "kappa",
            partition: lambda.clone(),
            min_len: 2,
        });
    }
    if lambda.len() == 2 && lambda.part(1) == 1 {
        Ok(lambda.part(0) - 1)
    } else {
        Ok(lambda.part(0) - lambda.part(1) + 1)
    }
}

/// 0 when the last part is 1, otherwise 1.
pub fn omega(lambda: &Partition) -> Result<usize, PartitionError> {
    match lambda.last_part() {
        None => Err(PartitionError::TooShort {
            what: "omega",
            partition: lambda.clone(),
            min_len: 1,
        }),
        Some(1) => Ok(0),
        Some(_) => Ok(1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // Euler's pentagonal recurrence, independent of the enumerator.
    fn pentagonal_count(n: usize) -> i64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for m in 1..=n {
            let mut total = 0i64;
            for k in 1.. {
                let k = k as i64;
                let sign = if k % 2 == 1 { 1 } else { -1 };
                let g1 = (k * (3 * k - 1) / 2) as usize;
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g1 > m {
                    break;
                }
                total += sign * table[m - g1];
                if g2 <= m {
                    total += sign * table[m - g2];
                }
            }
            table[m] = total;
        }
        table[n]
    }

    // Brute-force count of standard Young tableaux by placing n, n-1, ... in
    // removable corners.
    fn syt_brute(shape: &[usize]) -> u64 {
        if shape.iter().all(|&r| r == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..shape.len() {
            let removable = shape[i] > 0 && (i + 1 == shape.len() || shape[i + 1] < shape[i]);
            if removable {
                let mut smaller = shape.to_vec();
                smaller[i] -= 1;
                total += syt_brute(&smaller);
            }
        }
        total
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn partition_counts_match_pentagonal_recurrence() {
        assert_eq!(pentagonal_count(10), 42);
        for n in 0..=16 {
            let all = partitions_of(n);
            assert_eq!(all.len() as i64, pentagonal_count(n), "n = {n}");
            assert!(
                all.windows(2).all(|w| w[0] > w[1]),
                "not strictly decreasing at n = {n}"
            );
            assert!(all.iter().all(|q| q.is_valid() && q.size() == n));
        }
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(matches!(Partition::new(vec![2, 0]), Err(PartitionError::ZeroPart(_))));
        assert!(matches!(
            Partition::new(vec![1, 2]),
            Err(PartitionError::NotDecreasing(_))
        ));
        assert_eq!(Partition::from_padded(vec![3, 0, 0]).unwrap(), p(&[3]));
        let err = serde_json::from_str::<Partition>("[1,3]");
        assert!(err.is_err());
    }

    #[test]
    fn conjugates() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        for n in 0..=12 {
            for q in partitions_of(n) {
                assert_eq!(q.conjugate().conjugate(), q);
            }
        }
    }

    #[test]
    fn syt_counts() {
        assert_eq!(p(&[5]).syt_count(), BigUint::from(1u32));
        assert_eq!(syt_brute(&[2, 2]), 2);
        assert_eq!(syt_brute(&[3, 1]), 3);
        assert_eq!(p(&[2, 2]).syt_count(), BigUint::from(2u32));
        assert_eq!(p(&[3, 1]).syt_count(), BigUint::from(3u32));
        for n in 0..=8 {
            for q in partitions_of(n) {
                assert_eq!(q.syt_count(), BigUint::from(syt_brute(q.parts())), "{q}");
            }
        }
    }

    #[test]
    fn sum_of_squared_syt_counts_is_factorial() {
        let mut factorial = BigUint::one();
        for n in 0..=10usize {
            if n > 0 {
                factorial *= n;
            }
            let total: BigUint = partitions_of(n)
                .iter()
                .map(|q| {
                    let f = q.syt_count();
                    &f * &f
                })
                .sum();
            assert_eq!(total, factorial, "n = {n}");
        }
    }

    #[test]
    fn strips() {
        assert_eq!(horizontal_strips(&p(&[2]), 1, None), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(horizontal_strips(&p(&[2, 2]), 1, None), vec![p(&[3, 2]), p(&[2, 2, 1])]);
        assert_eq!(horizontal_strips(&p(&[3, 1]), 0, None), vec![p(&[3, 1])]);
        assert_eq!(
            horizontal_strips(&p(&[2]), 2, None),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2])]
        );
        assert_eq!(horizontal_strips(&p(&[2, 2]), 1, Some(2)), vec![p(&[3, 2])]);
    }

    #[test]
    fn one_cell_strip_count_is_distinct_parts_plus_one() {
        for n in 0..=10 {
            for q in partitions_of(n) {
                let mut distinct = q.parts().to_vec();
                distinct.dedup();
                assert_eq!(horizontal_strips(&q, 1, None).len(), distinct.len() + 1, "{q}");
            }
        }
    }

    #[test]
    fn strips_satisfy_interlacing() {
        for n in 0..=7 {
            for q in partitions_of(n) {
                for k in 0..=4 {
                    for mu in horizontal_strips(&q, k, None) {
                        assert_eq!(mu.size(), n + k);
                        for i in 0..mu.len() {
                            assert!(q.part(i) <= mu.part(i));
                            assert!(mu.part(i + 1) <= q.part(i));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn upsilon_small_cases() {
        assert!(upsilon_set(1).is_empty());
        assert!(upsilon_set(2).is_empty());
        assert_eq!(upsilon_set(3), vec![p(&[2, 1])]);
        assert_eq!(upsilon_set(4), vec![p(&[3, 1]), p(&[2, 2])]);
        assert_eq!(upsilon_set(5), vec![p(&[4, 1]), p(&[3, 2]), p(&[2, 2, 1])]);
    }

    #[test]
    fn upsilon_members_have_the_expected_shape() {
        for n in 1..=14 {
            for q in upsilon_set(n) {
                assert_eq!(q.size(), n);
                assert!(q.part(0) >= 2 && q.part(0) < n);
                assert!(q.parts().iter().skip(2).all(|&x| x <= 2));
                assert!(q.parts().iter().filter(|&&x| x == 1).count() <= 1);
            }
        }
    }

    #[test]
    fn kappa_and_omega() {
        assert_eq!(kappa(&p(&[4, 1])).unwrap(), 3);
        assert_eq!(kappa(&p(&[3, 2])).unwrap(), 2);
        assert_eq!(kappa(&p(&[2, 2])).unwrap(), 1);
        assert_eq!(kappa(&p(&[2, 1])).unwrap(), 1);
        assert_eq!(kappa(&p(&[3, 2, 2, 1])).unwrap(), 2);
        assert!(kappa(&p(&[5])).is_err());
        assert!(kappa(&Partition::empty()).is_err());

        assert_eq!(omega(&p(&[4, 1])).unwrap(), 0);
        assert_eq!(omega(&p(&[2, 2])).unwrap(), 1);
        assert_eq!(omega(&p(&[3, 2, 2, 1])).unwrap(), 0);
        assert!(omega(&Partition::empty()).is_err());
    }

    #[test]
    fn dominance_and_union() {
        assert!(p(&[3, 1]).dominates(&p(&[2, 2])));
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])));
        assert!(!p(&[3, 1, 1, 1]).dominates(&p(&[2, 2, 2])));
        assert_eq!(p(&[3, 1]).union(&p(&[2, 1])), p(&[3, 2, 1, 1]));
        assert_eq!(Partition::empty().union(&p(&[2])), p(&[2]));
    }

    #[test]
    fn json_shape() {
        assert_eq!(serde_json::to_string(&p(&[3, 2, 2, 1])).unwrap(), "[3,2,2,1]");
        let back: Partition = serde_json::from_str("[3,2,2,1]").unwrap();
        assert_eq!(back, p(&[3, 2, 2, 1]));
    }
}
