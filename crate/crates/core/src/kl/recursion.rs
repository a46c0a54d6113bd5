//! Solver for the defining recursion of `P_n(x;t)`:
//!
//! ```text
//! t^{n+1} P_n(x; 1/t) = (t−1) Σ_ℓ h_ℓ[(t−2)X] h_{n−ℓ}
//!                     + Σ_{i+j+m=n} P_i h_j[(t−1)X] h_m[(t−1)X]
//! ```
//!
//! with `P_0 = 1` and `deg_t P_n ≤ ⌊n/2⌋`. The `i = n` term is `P_n` itself,
//! so moving it left gives `t^{n+1}P_n(1/t) − P_n = K_n`, where `K_n` only
//! involves earlier `P_i`. The two sides occupy disjoint exponent blocks,
//! and every coefficient of `P_n` is read twice.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::KlError;
use crate::partition::Partition;
use crate::poly::IntPoly;
use crate::symfunc::plethysm::{t_minus_1_series, t_minus_2_series};
use crate::symfunc::series::USeries;
use crate::symfunc::{HPoly, SchurPoly};

/// Bookkeeping for one solved degree.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub n: usize,
    pub components: usize,
    /// Coefficients confirmed by both the low and the mirrored read.
    pub double_reads: usize,
    /// Exponents outside both blocks that were confirmed to vanish.
    pub gap_checks: usize,
}

pub struct RecursionSolver {
    order: usize,
    h: USeries,
    minus_two: USeries,
    minus_one_sq: USeries,
    solved: Vec<SchurPoly>,
    solved_h: Vec<HPoly>,
    stats: Vec<SolveStats>,
}

impl RecursionSolver {
    /// Prepares the plethysm series needed to solve up to degree `order`.
    pub fn new(order: usize) -> Self {
        RecursionSolver {
            order,
            h: USeries::complete(order),
            minus_two: t_minus_2_series(order),
            minus_one_sq: t_minus_1_series(order).square(),
            solved: vec![SchurPoly::unit()],
            solved_h: vec![HPoly::unit()],
            stats: vec![SolveStats::default()],
        }
    }

    pub fn solved(&self) -> &[SchurPoly] {
        &self.solved
    }

    pub fn stats(&self) -> &[SolveStats] {
        &self.stats
    }

    /// `K_n`: the right-hand side without the `i = n` term, in the h-basis.
    pub fn known_side(&self, n: usize) -> HPoly {
        let t_minus_one = IntPoly::from_i64s(&[-1, 1]);
        let mut first = HPoly::zero(n);
        for l in 0..=n {
            first += &self.minus_two.coeff(l).mul(self.h.coeff(n - l));
        }
        let mut k = first.scale(&t_minus_one);
        for i in 0..n {
            k += &self.solved_h[i].mul(self.minus_one_sq.coeff(n - i));
        }
        k
    }

    /// Solves every degree up to `n` (at most the prepared order).
    pub fn solve_through(&mut self, n: usize) -> Result<&[SchurPoly], KlError> {
        assert!(n <= self.order, "solver prepared only up to degree {}", self.order);
        while self.solved.len() <= n {
            let next = self.solved.len();
            let known = self.known_side(next).to_schur();
            let (p, stats) = solve_degree(next, &known)?;
            self.solved_h.push(p.to_h());
            self.solved.push(p);
            self.stats.push(stats);
        }
        Ok(&self.solved[..=n])
    }
}

/// Reads `P_n` from `K_n = t^{n+1} P_n(1/t) − P_n`, one Schur component at a
/// time.
pub fn solve_degree(n: usize, known: &SchurPoly) -> Result<(SchurPoly, SolveStats), KlError> {
    let low_top = n / 2;
    let bound = n + 1;
    let high_start = bound - low_top;
    assert!(low_top < high_start, "exponent blocks overlap at n = {n}");

    let mut stats = SolveStats {
        n,
        components: known.len(),
        ..SolveStats::default()
    };
    let mut p = SchurPoly::zero(n);
    for (lambda, k) in known.terms() {
        let mut coeffs = Vec::with_capacity(low_top + 1);
        for d in 0..=low_top {
            let from_low = -k.coeff(d);
            let from_high = k.coeff(bound - d);
            if from_low != from_high {
                return Err(inconsistent(n, lambda, d, bound - d, &from_low, &from_high));
            }
            stats.double_reads += 1;
            coeffs.push(from_low);
        }
        let top = k.degree().unwrap_or(0).max(bound);
        for e in (low_top + 1)..high_start {
            check_gap(n, lambda, k, e)?;
            stats.gap_checks += 1;
        }
        for e in (bound + 1)..=top {
            check_gap(n, lambda, k, e)?;
            stats.gap_checks += 1;
        }
        p.add_term(lambda.clone(), &IntPoly::from_coeffs(coeffs));
    }
    Ok((p, stats))
}

fn inconsistent(n: usize, lambda: &Partition, low: usize, high: usize, a: &BigInt, b: &BigInt) -> KlError {
    KlError::InconsistentRead {
        n,
        partition: lambda.clone(),
        low,
        high,
        from_low: a.to_string(),
        from_high: b.to_string(),
    }
}

fn check_gap(n: usize, lambda: &Partition, k: &IntPoly, e: usize) -> Result<(), KlError> {
    let c = k.coeff(e);
    if c.is_zero() {
        Ok(())
    } else {
        Err(KlError::GapCoefficient {
            n,
            partition: lambda.clone(),
            exponent: e,
            value: c.to_string(),
        })
    }
}

/// `P_n(x;t)` from the defining recursion.
pub fn p_recursion(n: usize) -> Result<SchurPoly, KlError> {
    let mut solver = RecursionSolver::new(n);
    Ok(solver.solve_through(n)?[n].clone())
}

/// `P_0, …, P_max` from the defining recursion.
pub fn p_recursion_all(max_n: usize) -> Result<Vec<SchurPoly>, KlError> {
    let mut solver = RecursionSolver::new(max_n);
    Ok(solver.solve_through(max_n)?.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kl::r_poly;
    use crate::partition;

    #[test]
    fn base_cases() {
        assert_eq!(p_recursion(0).unwrap(), SchurPoly::unit());
        assert_eq!(p_recursion(1).unwrap(), SchurPoly::basis_element(partition![1]));
    }

    #[test]
    fn known_side_at_one() {
        let solver = RecursionSolver::new(1);
        let k1 = solver.known_side(1).to_schur();
        assert_eq!(k1, SchurPoly::term(partition![1], IntPoly::from_i64s(&[-1, 0, 1])));
    }

    #[test]
    fn agrees_with_convolution_for_small_n() {
        let all = p_recursion_all(7).unwrap();
        for (n, p) in all.iter().enumerate() {
            assert_eq!(*p, r_poly(n), "n={n}");
        }
    }

    #[test]
    fn every_coefficient_is_read_twice() {
        let mut solver = RecursionSolver::new(6);
        solver.solve_through(6).unwrap();
        for s in &solver.stats()[1..] {
            assert_eq!(s.double_reads, s.components * (s.n / 2 + 1));
            if s.n % 2 == 1 {
                assert!(s.gap_checks >= s.components);
            }
        }
    }

    #[test]
    fn corrupted_known_side_is_rejected() {
        let bad = SchurPoly::term(partition![2], IntPoly::from_i64s(&[-1, 0, 0, 2]));
        assert!(matches!(solve_degree(2, &bad), Err(KlError::InconsistentRead { .. })));
        let gap = SchurPoly::term(partition![1], IntPoly::from_i64s(&[-1, 5, 1]));
        assert!(matches!(
            solve_degree(1, &gap),
            Err(KlError::GapCoefficient { exponent: 1, .. })
        ));
    }
}
