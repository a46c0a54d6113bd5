//! Truncated power series in `u` whose coefficients are symmetric functions.
//!
//! The series are graded: the coefficient of x-degree `n` sits at `u^{n + shift}`,
//! so `H(u)` has shift 0 while `φ(t,u) = Σ P_n u^{n+1}` has shift 1. Truncation
//! is by x-degree: entries `0..=order` are kept.

use thiserror::Error;

use super::{HPoly, SchurPoly};
use crate::partition::Partition;
use crate::poly::{IntPoly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series inverse needs constant term 1 at u^0")]
    NotInvertible,
    #[error("cannot combine series with u-shifts {0} and {1}")]
    ShiftMismatch(i64, i64),
    #[error("u ↦ tu would produce t^{0} on a nonzero coefficient")]
    NegativeScale(i64),
    #[error("mirror at u^{exponent}: {source}")]
    Mirror {
        exponent: i64,
        #[source]
        source: PolyError,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct USeries {
    shift: i64,
    coeffs: Vec<HPoly>,
}

/// First disagreement between two series, located by u-exponent and Schur
/// component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesMismatch {
    pub u_exponent: i64,
    pub partition: Partition,
    pub t_exponent: usize,
    pub left: String,
    pub right: String,
}

impl USeries {
    /// Builds `Σ_{n ≤ order} f(n) u^{n+shift}`; `f(n)` must have degree `n`.
    pub fn from_fn(order: usize, shift: i64, mut f: impl FnMut(usize) -> HPoly) -> Self {
        let coeffs = (0..=order)
            .map(|n| {
                let c = f(n);
                assert_eq!(c.degree(), n, "series entry {n} has the wrong degree");
                c
            })
            .collect();
        USeries { shift, coeffs }
    }

    pub fn zero(order: usize, shift: i64) -> Self {
        USeries::from_fn(order, shift, HPoly::zero)
    }

    pub fn one(order: usize) -> Self {
        USeries::from_fn(order, 0, |n| if n == 0 { HPoly::unit() } else { HPoly::zero(n) })
    }

    /// `H(u) = Σ h_n u^n`.
    pub fn complete(order: usize) -> Self {
        USeries::from_fn(order, 0, HPoly::complete)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Entry of x-degree `n`.
    pub fn coeff(&self, n: usize) -> &HPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[HPoly] {
        &self.coeffs
    }

    /// Coefficient of `u^k`, if within the truncation.
    pub fn u_coeff(&self, k: i64) -> Option<&HPoly> {
        let n = k - self.shift;
        if n < 0 {
            return None;
        }
        self.coeffs.get(n as usize)
    }

    /// Multiply by `u^k`.
    pub fn shift_u(&self, k: i64) -> Self {
        USeries {
            shift: self.shift + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        USeries {
            shift: self.shift,
            coeffs: self.coeffs[..=order.min(self.order())].to_vec(),
        }
    }

    fn check_shift(&self, other: &USeries) -> Result<(), SeriesError> {
        if self.shift != other.shift {
            return Err(SeriesError::ShiftMismatch(self.shift, other.shift));
        }
        Ok(())
    }

    pub fn add(&self, other: &USeries) -> Result<Self, SeriesError> {
        self.check_shift(other)?;
        let order = self.order().min(other.order());
        Ok(USeries::from_fn(order, self.shift, |n| {
            &self.coeffs[n] + &other.coeffs[n]
        }))
    }

    pub fn sub(&self, other: &USeries) -> Result<Self, SeriesError> {
        self.check_shift(other)?;
        let order = self.order().min(other.order());
        Ok(USeries::from_fn(order, self.shift, |n| {
            &self.coeffs[n] - &other.coeffs[n]
        }))
    }

    /// Multiply every coefficient by a scalar polynomial in `t`.
    pub fn scale(&self, factor: &IntPoly) -> Self {
        USeries::from_fn(self.order(), self.shift, |n| self.coeffs[n].scale(factor))
    }

    /// Cauchy product, truncated to the smaller order.
    pub fn mul(&self, other: &USeries) -> Self {
        let order = self.order().min(other.order());
        USeries::from_fn(order, self.shift + other.shift, |n| {
            let mut acc = HPoly::zero(n);
            for i in 0..=n {
                let (a, b) = (&self.coeffs[i], &other.coeffs[n - i]);
                if !a.is_zero() && !b.is_zero() {
                    acc += &a.mul(b);
                }
            }
            acc
        })
    }

    pub fn square(&self) -> Self {
        self.mul(self)
    }

    /// Multiplicative inverse; the constant term must be exactly `1`.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if self.shift != 0 || self.coeffs[0] != HPoly::unit() {
            return Err(SeriesError::NotInvertible);
        }
        let mut inv: Vec<HPoly> = vec![HPoly::unit()];
        for n in 1..=self.order() {
            let mut acc = HPoly::zero(n);
            for k in 1..=n {
                let a = &self.coeffs[k];
                if !a.is_zero() {
                    acc -= &a.mul(&inv[n - k]);
                }
            }
            inv.push(acc);
        }
        Ok(USeries { shift: 0, coeffs: inv })
    }

    /// Substitute `u ↦ tu`: the `u^k` coefficient is multiplied by `t^k`.
    pub fn scale_tu(&self) -> Result<Self, SeriesError> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (n, c) in self.coeffs.iter().enumerate() {
            let k = n as i64 + self.shift;
            if k < 0 {
                if !c.is_zero() {
                    return Err(SeriesError::NegativeScale(k));
                }
                coeffs.push(c.clone());
            } else {
                coeffs.push(c.scale(&IntPoly::monomial(1, k as usize)));
            }
        }
        Ok(USeries {
            shift: self.shift,
            coeffs,
        })
    }

    /// Substitute `(t, u) ↦ (t⁻¹, tu)`. The `u^k` coefficient `c(t)` becomes
    /// `t^k c(1/t)`, which is polynomial as long as `deg_t c ≤ k`.
    pub fn reflect(&self) -> Result<Self, SeriesError> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (n, c) in self.coeffs.iter().enumerate() {
            let k = n as i64 + self.shift;
            if c.is_zero() {
                coeffs.push(c.clone());
                continue;
            }
            let bound = usize::try_from(k).map_err(|_| SeriesError::NegativeScale(k))?;
            let mirrored = c
                .mirror(bound)
                .map_err(|source| SeriesError::Mirror { exponent: k, source })?;
            coeffs.push(mirrored);
        }
        Ok(USeries {
            shift: self.shift,
            coeffs,
        })
    }

    pub fn to_schur(&self) -> Vec<SchurPoly> {
        self.coeffs.iter().map(HPoly::to_schur).collect()
    }

    /// Compare to `other` in the Schur basis up to the common truncation
    /// order. Both series must carry the same shift.
    pub fn first_mismatch(&self, other: &USeries) -> Option<SeriesMismatch> {
        assert_eq!(self.shift, other.shift, "comparing series with different u-shifts");
        let order = self.order().min(other.order());
        for n in 0..=order {
            let (a, b) = (&self.coeffs[n], &other.coeffs[n]);
            if a == b {
                continue;
            }
            if let Some(d) = a.to_schur().first_difference(&b.to_schur()) {
                return Some(SeriesMismatch {
                    u_exponent: n as i64 + self.shift,
                    partition: d.partition,
                    t_exponent: d.exponent,
                    left: d.left,
                    right: d.right,
                });
            }
        }
        None
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(HPoly::is_zero)
    }
}

impl USeries {
    /// `1 / H(u)`, the signed elementary series `Σ (−1)^n e_n u^n`.
    pub fn complete_inverse(order: usize) -> Self {
        USeries::complete(order).inverse().expect("H(u) has constant term 1")
    }
}

impl Default for USeries {
    fn default() -> Self {
        USeries::one(0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::symfunc::HPoly;

    #[test]
    fn inverse_of_h_is_two_sided() {
        let h = USeries::complete(8);
        let inv = h.inverse().unwrap();
        assert_eq!(h.mul(&inv), USeries::one(8));
        assert_eq!(inv.mul(&h), USeries::one(8));
        // u^1 coefficient of 1/H(u) is -h_1
        assert_eq!(*inv.coeff(1), -&HPoly::complete(1));
        // u^2: h_1^2 - h_2 = e_2
        let mut e2 = HPoly::basis_element(partition![1, 1]);
        e2 -= &HPoly::complete(2);
        assert_eq!(*inv.coeff(2), e2);
    }

    #[test]
    fn scale_tu_multiplies_by_powers_of_t() {
        let h = USeries::complete(4).scale_tu().unwrap();
        assert_eq!(*h.coeff(1), HPoly::complete(1).scale(&IntPoly::t()));
        assert_eq!(*h.coeff(3), HPoly::complete(3).scale(&IntPoly::monomial(1, 3)));
    }

    #[test]
    fn inverse_rejects_bad_constant_term() {
        let two = USeries::one(3).scale(&IntPoly::constant(2));
        assert_eq!(two.inverse(), Err(SeriesError::NotInvertible));
        let shifted = USeries::complete(3).shift_u(1);
        assert_eq!(shifted.inverse(), Err(SeriesError::NotInvertible));
    }

    #[test]
    fn shifts_add_under_multiplication() {
        let a = USeries::complete(4).shift_u(1);
        let b = USeries::complete(4).shift_u(-1);
        let product = a.mul(&b);
        assert_eq!(product.shift(), 0);
        assert_eq!(product, USeries::complete(4).square());
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn reflect_mirrors_against_u_exponent() {
        // coefficient t at u^2 becomes t^2 * t^{-1} = t
        let s = USeries::from_fn(3, 1, |n| match n {
            1 => HPoly::complete(1).scale(&IntPoly::t()),
            _ => HPoly::zero(n),
        });
        let r = s.reflect().unwrap();
        assert_eq!(*r.coeff(1), HPoly::complete(1).scale(&IntPoly::t()));
        let bad = USeries::from_fn(2, 0, |n| match n {
            1 => HPoly::complete(1).scale(&IntPoly::monomial(1, 3)),
            _ => HPoly::zero(n),
        });
        assert!(matches!(bad.reflect(), Err(SeriesError::Mirror { exponent: 1, .. })));
    }

    #[test]
    fn mismatch_is_located() {
        let a = USeries::complete(3);
        let b = USeries::complete(3).square();
        let m = a.first_mismatch(&b).unwrap();
        assert_eq!(m.u_exponent, 1);
        assert_eq!(m.partition, partition![1]);
        assert!(a.first_mismatch(&a).is_none());
    }
}
