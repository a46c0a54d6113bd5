//! Equivariant Kazhdan–Lusztig polynomials of thagomizer and uniform
//! matroids, carried as Frobenius images in `Λ_n ⊗ Z[t]`.
//!
//! Three routes to `P_n(x;t)` live here: [`recursion::p_recursion`] solves
//! the defining functional equation, [`r_poly`] is the convolution
//! `h_n + t Σ_k h_{n−k} Q_k`, and [`p_closed_form`] sums over
//! [`upsilon_set`]. The B-series split of the convolution is in
//! [`b_components`].

pub mod lemmas;
pub mod recursion;
pub mod report;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::partition::{kappa, omega, upsilon_set, Partition};
use crate::poly::{IntPoly, PolyError};
use crate::symfunc::series::SeriesError;
use crate::symfunc::{SchurPoly, SymError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KlError {
    #[error("n = {n}, {partition}: t^{low} gives c = {from_low} but t^{high} gives {from_high}")]
    InconsistentRead {
        n: usize,
        partition: Partition,
        low: usize,
        high: usize,
        from_low: String,
        from_high: String,
    },
    #[error("n = {n}, {partition}: coefficient {value} at t^{exponent} lies outside both solved blocks")]
    GapCoefficient {
        n: usize,
        partition: Partition,
        exponent: usize,
        value: String,
    },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Sym(#[from] SymError),
}

/// `Q_n = Σ_{i=0}^{⌊n/2⌋−1} s_{(n−2i, 2^i)} t^i`, the Frobenius image of the
/// equivariant KL polynomial of the rank `n−1` uniform matroid on `n`
/// elements; zero for `n < 2`.
pub fn q_poly(n: usize) -> SchurPoly {
    let mut q = SchurPoly::zero(n);
    if n < 2 {
        return q;
    }
    for i in 0..n / 2 {
        let mut parts = vec![n - 2 * i];
        parts.extend(std::iter::repeat_n(2, i));
        let shape = Partition::new(parts).expect("(n-2i, 2^i) is a partition");
        q.add_term(shape, &IntPoly::monomial(1, i));
    }
    q
}

/// `R_n = h_n + t Σ_{k=2}^n h_{n−k} Q_k`, with `R_0 = 1`.
pub fn r_poly(n: usize) -> SchurPoly {
    if n == 0 {
        return SchurPoly::unit();
    }
    let mut sum = SchurPoly::zero(n);
    for k in 2..=n {
        sum += &q_poly(k).pieri_mul(n - k);
    }
    let mut r = sum.scale(&IntPoly::t());
    r += &SchurPoly::basis_element(Partition::row(n));
    r
}

/// How the closed form weights `s_λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum KappaRule {
    #[default]
    Standard,
    /// Drops the special value on the hook `(n−1, 1)`; a negative control.
    Mutated,
}

impl KappaRule {
    pub fn weight(self, lambda: &Partition) -> usize {
        match self {
            KappaRule::Standard => kappa(lambda).expect("upsilon members have two or more parts"),
            KappaRule::Mutated => lambda.part(0) - lambda.part(1) + 1,
        }
    }
}

/// `Σ_{λ ∈ Υ_n} κ(λ) s_λ t^{ℓ(λ)−1} (t+1)^{ω(λ)} + h_n((n−1)t + 1)`.
pub fn p_closed_form(n: usize) -> SchurPoly {
    p_closed_form_with(n, KappaRule::Standard)
}

pub fn p_closed_form_with(n: usize, rule: KappaRule) -> SchurPoly {
    assert!(n >= 1, "the closed form is stated for n ≥ 1");
    let mut out = SchurPoly::zero(n);
    for lambda in upsilon_set(n) {
        out.add_term(lambda.clone(), &closed_form_coefficient(&lambda, rule));
    }
    out.add_term(Partition::row(n), &IntPoly::from_i64s(&[1, n as i64 - 1]));
    out
}

/// `κ(λ) t^{ℓ(λ)−1} (t+1)^{ω(λ)}` for a member of `Υ_n`.
pub fn closed_form_coefficient(lambda: &Partition, rule: KappaRule) -> IntPoly {
    let weight = rule.weight(lambda);
    let omega = omega(lambda).expect("upsilon members are nonempty");
    IntPoly::monomial(weight as i64, lambda.len() - 1) * IntPoly::from_i64s(&[1, 1]).pow(omega)
}

/// The four pieces of `t Σ_{k=2}^n h_{n−k} Q_k` read off the Pieri expansion
/// of `h_{n−k} s_{(k−2i, 2^i)}`: `b1` carries the `i = 0` terms and `b2`,
/// `b3`, `b4` the shapes whose last new row has 0, 1 or 2 cells.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BSeries {
    pub n: usize,
    pub b1: SchurPoly,
    pub b2: SchurPoly,
    pub b3: SchurPoly,
    pub b4: SchurPoly,
}

impl BSeries {
    pub fn total(&self) -> SchurPoly {
        let mut out = self.b1.clone();
        out += &self.b2;
        out += &self.b3;
        out += &self.b4;
        out
    }

    pub fn components(&self) -> [&SchurPoly; 4] {
        [&self.b1, &self.b2, &self.b3, &self.b4]
    }
}

fn range(lo: isize, hi: isize) -> impl Iterator<Item = isize> {
    lo.max(0)..=hi
}

fn push_shape(f: &mut SchurPoly, parts: Vec<isize>, twos: isize, tail: Option<usize>, t_exp: usize) {
    let mut shape: Vec<usize> = parts.into_iter().map(|x| x as usize).collect();
    shape.extend(std::iter::repeat_n(2, twos as usize));
    shape.extend(tail);
    let lambda = Partition::from_padded(shape).expect("summation bounds produce partitions");
    f.add_term(lambda, &IntPoly::monomial(1, t_exp));
}

/// The four B-series, summed directly from their index ranges.
pub fn b_components(n: usize) -> BSeries {
    let ni = n as isize;
    let mut b1 = SchurPoly::zero(n);
    let mut b2 = SchurPoly::zero(n);
    let mut b3 = SchurPoly::zero(n);
    let mut b4 = SchurPoly::zero(n);

    for k in 2..=ni {
        for p in range(ni - 2 * k, ni - k) {
            push_shape(&mut b1, vec![k + p, ni - k - p], 0, None, 1);
        }
    }
    for k in 2..=ni {
        for i in 1..k / 2 {
            for p in range(ni - 2 * k + 2 * i + 2, ni - k) {
                push_shape(
                    &mut b2,
                    vec![k + p - 2 * i, ni - k - p + 2],
                    i - 1,
                    None,
                    (i + 1) as usize,
                );
            }
        }
    }
    for k in 2..ni {
        for i in 1..k / 2 {
            for p in range(ni - 2 * k + 2 * i + 1, ni - k - 1) {
                push_shape(
                    &mut b3,
                    vec![k + p - 2 * i, ni - k - p + 1],
                    i - 1,
                    Some(1),
                    (i + 1) as usize,
                );
            }
        }
    }
    for k in 2..ni - 1 {
        for i in 1..k / 2 {
            for p in range(ni - 2 * k + 2 * i, ni - k - 2) {
                push_shape(&mut b4, vec![k + p - 2 * i, ni - k - p], i, None, (i + 1) as usize);
            }
        }
    }
    BSeries { n, b1, b2, b3, b4 }
}

/// `t Σ_{k=2}^n h_{n−k} Q_k` through the general Pieri rule.
pub fn b_total_via_pieri(n: usize) -> SchurPoly {
    let mut sum = SchurPoly::zero(n);
    for k in 2..=n {
        sum += &q_poly(k).pieri_mul(n - k);
    }
    sum.scale(&IntPoly::t())
}

/// Which B-series may contain a given shape, following the shape of `λ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShapeCase {
    /// `λ = (n)`
    Row,
    /// `λ = (n−1, 1)`
    Hook,
    /// last part 1, at least three parts
    EndsInOne,
    /// last part ≥ 2 and `ℓ(λ) = 2`
    TwoRows,
    /// last part 2 and `ℓ(λ) ≥ 3`
    TrailingTwos,
}

impl ShapeCase {
    pub fn classify(lambda: &Partition, n: usize) -> ShapeCase {
        if lambda.len() == 1 && lambda.part(0) == n {
            ShapeCase::Row
        } else if lambda.len() == 2 && lambda.part(1) == 1 {
            ShapeCase::Hook
        } else if lambda.last_part() == Some(1) {
            ShapeCase::EndsInOne
        } else if lambda.len() == 2 {
            ShapeCase::TwoRows
        } else {
            ShapeCase::TrailingTwos
        }
    }

    /// Expected `(component, coefficient)` pairs, components numbered 1..=4.
    pub fn expected_sources(self, lambda: &Partition, n: usize) -> Vec<(usize, IntPoly)> {
        let span = || (lambda.part(0) - lambda.part(1) + 1) as i64;
        let len = lambda.len();
        match self {
            ShapeCase::Row => vec![(1, IntPoly::monomial(n as i64 - 1, 1))],
            ShapeCase::Hook => vec![(1, IntPoly::monomial(n as i64 - 2, 1))],
            ShapeCase::EndsInOne => vec![(3, IntPoly::monomial(span(), len - 1))],
            ShapeCase::TwoRows => vec![(1, IntPoly::monomial(span(), 1)), (2, IntPoly::monomial(span(), 2))],
            ShapeCase::TrailingTwos => vec![
                (2, IntPoly::monomial(span(), len)),
                (4, IntPoly::monomial(span(), len - 1)),
            ],
        }
    }
}

/// Per-shape comparison of the B-series against the closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseRecord {
    pub partition: Partition,
    pub case: ShapeCase,
    pub observed: Vec<(usize, IntPoly)>,
    pub expected: Vec<(usize, IntPoly)>,
    /// Coefficient of `s_λ` in the closed form minus the `t⁰` part of `h_n`.
    pub closed_form: IntPoly,
    pub matches: bool,
}

/// Splits the coefficient of every shape of `B_n` by component and checks
/// it against the case analysis and the closed-form weight.
pub fn case_analysis(n: usize, rule: KappaRule) -> Vec<CaseRecord> {
    let b = b_components(n);
    let closed = p_closed_form_with(n, rule);
    let mut shapes: Vec<Partition> = upsilon_set(n);
    shapes.insert(0, Partition::row(n));
    for comp in b.components() {
        for lambda in comp.support() {
            if !shapes.contains(&lambda) {
                shapes.push(lambda);
            }
        }
    }

    shapes
        .into_iter()
        .map(|lambda| {
            let case = ShapeCase::classify(&lambda, n);
            let observed: Vec<(usize, IntPoly)> = b
                .components()
                .iter()
                .enumerate()
                .map(|(i, c)| (i + 1, c.coeff(&lambda)))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            let expected = if lambda == Partition::row(n) || crate::partition::in_upsilon(&lambda, n) {
                let mut sources = case.expected_sources(&lambda, n);
                sources.retain(|(_, c)| !c.is_zero());
                sources
            } else {
                Vec::new()
            };
            let mut closed_form = closed.coeff(&lambda);
            if case == ShapeCase::Row {
                closed_form -= &IntPoly::one();
            }
            let total = observed.iter().fold(IntPoly::zero(), |acc, (_, c)| &acc + c);
            let matches = observed == expected && total == closed_form;
            CaseRecord {
                partition: lambda,
                case,
                observed,
                expected,
                closed_form,
                matches,
            }
        })
        .collect()
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Non-equivariant KL polynomial of the rank `k−1` uniform matroid on `k`
/// elements (the cycle graph on `k` vertices).
pub fn uniform_nonequiv(k: usize) -> IntPoly {
    q_poly(k).dimension()
}

/// `P_{M_n}(t) = 1 + t Σ_{k=2}^n C(n,k) P_{U_{1,k−1}}(t)`.
pub fn thagomizer_nonequiv(n: usize) -> IntPoly {
    let mut sum = IntPoly::zero();
    for k in 2..=n {
        sum += &uniform_nonequiv(k).scale(&binomial(n, k));
    }
    &IntPoly::one() + &sum.shift(1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn r4() -> SchurPoly {
        SchurPoly::from_terms(
            4,
            [
                (partition![4], poly(&[1, 3])),
                (partition![3, 1], poly(&[0, 2])),
                (partition![2, 2], poly(&[0, 1, 1])),
            ],
        )
    }

    #[test]
    fn q_values() {
        assert!(q_poly(0).is_zero());
        assert!(q_poly(1).is_zero());
        assert_eq!(q_poly(2), SchurPoly::basis_element(partition![2]));
        assert_eq!(
            q_poly(4),
            SchurPoly::from_terms(4, [(partition![4], poly(&[1])), (partition![2, 2], poly(&[0, 1]))])
        );
        assert_eq!(q_poly(7).t_degree(), Some(2));
    }

    #[test]
    fn r_values() {
        assert_eq!(r_poly(0), SchurPoly::unit());
        assert_eq!(r_poly(1), SchurPoly::basis_element(partition![1]));
        assert_eq!(
            r_poly(3),
            SchurPoly::from_terms(3, [(partition![3], poly(&[1, 2])), (partition![2, 1], poly(&[0, 1]))])
        );
        assert_eq!(r_poly(4), r4());
        assert_eq!(r_poly(4).dimension(), poly(&[1, 11, 2]));
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(p_closed_form(1), SchurPoly::basis_element(partition![1]));
        assert_eq!(p_closed_form(3), r_poly(3));
        assert_eq!(p_closed_form(4), r4());
        assert_ne!(p_closed_form_with(3, KappaRule::Mutated), r_poly(3));
        // the mutation leaves every shape but the hook alone
        assert_eq!(
            p_closed_form_with(5, KappaRule::Mutated).coeff(&partition![3, 2]),
            p_closed_form(5).coeff(&partition![3, 2])
        );
    }

    #[test]
    fn closed_form_support_is_upsilon_plus_row() {
        for n in 1..=12 {
            let mut expect = upsilon_set(n);
            expect.insert(0, Partition::row(n));
            assert_eq!(p_closed_form(n).support(), expect, "closed form support n={n}");
            assert_eq!(r_poly(n).support(), expect, "convolution support n={n}");
        }
    }

    #[test]
    fn b_series_for_four() {
        let b = b_components(4);
        assert_eq!(
            b.b1,
            SchurPoly::from_terms(
                4,
                [
                    (partition![4], poly(&[0, 3])),
                    (partition![3, 1], poly(&[0, 2])),
                    (partition![2, 2], poly(&[0, 1])),
                ]
            )
        );
        assert_eq!(b.b2, SchurPoly::term(partition![2, 2], poly(&[0, 0, 1])));
        assert!(b.b3.is_zero() && b.b4.is_zero());
    }

    #[test]
    fn b_series_sum_matches_pieri() {
        for n in 1..=12 {
            assert_eq!(b_components(n).total(), b_total_via_pieri(n), "n={n}");
        }
    }

    #[test]
    fn trailing_one_shapes_come_from_b3_only() {
        for n in 1..=10 {
            let b = b_components(n);
            for lambda in upsilon_set(n) {
                if lambda.last_part() == Some(1) && lambda.len() >= 3 {
                    let span = (lambda.part(0) - lambda.part(1) + 1) as i64;
                    assert_eq!(
                        b.b3.coeff(&lambda),
                        IntPoly::monomial(span, lambda.len() - 1),
                        "{lambda}"
                    );
                    assert!(b.b1.coeff(&lambda).is_zero());
                    assert!(b.b2.coeff(&lambda).is_zero());
                    assert!(b.b4.coeff(&lambda).is_zero());
                }
            }
        }
    }

    #[test]
    fn case_analysis_agrees() {
        for n in 1..=12 {
            for record in case_analysis(n, KappaRule::Standard) {
                assert!(record.matches, "n={n}: {record:?}");
            }
        }
        let mutated = case_analysis(3, KappaRule::Mutated);
        assert!(mutated.iter().any(|r| !r.matches));
    }

    #[test]
    fn nonequivariant_values() {
        assert_eq!(uniform_nonequiv(2), poly(&[1]));
        assert_eq!(uniform_nonequiv(3), poly(&[1]));
        assert_eq!(uniform_nonequiv(4), poly(&[1, 2]));
        assert_eq!(thagomizer_nonequiv(1), poly(&[1]));
        assert_eq!(thagomizer_nonequiv(2), poly(&[1, 1]));
        assert_eq!(thagomizer_nonequiv(4), poly(&[1, 11, 2]));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(3, 5), BigInt::zero());
    }
}
