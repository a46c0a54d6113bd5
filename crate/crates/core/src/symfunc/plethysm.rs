//! Plethysms `h_n[a(t) X]` for scalar polynomials `a`.
//!
//! The production route reads them off generating functions:
//! `Σ h_n[(t−1)X] u^n = H(tu)/H(u)` and `Σ h_n[(t−2)X] u^n = H(tu)/H(u)²`.
//! The oracle route goes through power sums, where `p_k[a(t)X] = a(t^k) p_k`,
//! and rewrites `p_λ` in the h-basis with Newton's identities.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::series::USeries;
use super::{HPoly, SchurPoly, SymError};
use crate::partition::{partitions_of, Partition};
use crate::poly::IntPoly;

/// `H(tu)·H(u)⁻¹` to the given order.
pub fn t_minus_1_series(order: usize) -> USeries {
    let h = USeries::complete(order);
    h.scale_tu()
        .expect("H(u) has no negative powers")
        .mul(&USeries::complete_inverse(order))
}

/// `H(tu)·H(u)⁻²` to the given order.
pub fn t_minus_2_series(order: usize) -> USeries {
    let inv = USeries::complete_inverse(order);
    let h = USeries::complete(order);
    h.scale_tu().expect("H(u) has no negative powers").mul(&inv.square())
}

/// `h_n[(t−1)X]` in the h-basis.
pub fn pleth_h_t_minus_1(n: usize) -> HPoly {
    t_minus_1_series(n).coeff(n).clone()
}

/// `h_n[(t−2)X]` in the h-basis.
pub fn pleth_h_t_minus_2(n: usize) -> HPoly {
    t_minus_2_series(n).coeff(n).clone()
}

/// Power sums `p_1..p_n` in the h-basis from `k h_k = Σ_{i=1}^k p_i h_{k−i}`.
pub fn power_sums_in_h(n: usize) -> Vec<HPoly> {
    let mut p: Vec<HPoly> = vec![HPoly::unit()];
    for k in 1..=n {
        let mut pk = HPoly::complete(k).scale_int(&BigInt::from(k));
        for (i, pi) in p.iter().enumerate().take(k).skip(1) {
            pk -= &HPoly::complete(k - i).mul(pi);
        }
        p.push(pk);
    }
    p
}

/// `z_λ = Π_i i^{m_i} m_i!`
pub fn z_lambda(lambda: &Partition) -> BigInt {
    let mut z = BigInt::one();
    let mut i = 0;
    let parts = lambda.parts();
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        for m in 1..=(j - i) {
            z *= BigInt::from(parts[i]) * BigInt::from(m);
        }
        i = j;
    }
    z
}

/// `h_n[a(t)X] = Σ_{λ ⊢ n} z_λ⁻¹ Π_i a(t^{λ_i}) p_λ`, accumulated with
/// rational coefficients and required to land in `Z[t]`.
pub fn pleth_powersum_oracle(n: usize, a: &IntPoly) -> Result<SchurPoly, SymError> {
    let p = power_sums_in_h(n);
    let mut acc: BTreeMap<Partition, Vec<BigRational>> = BTreeMap::new();
    for lambda in partitions_of(n) {
        let scalar = lambda
            .parts()
            .iter()
            .fold(IntPoly::one(), |s, &k| &s * &a.compose_power(k));
        let p_lambda = lambda.parts().iter().fold(HPoly::unit(), |prod, &k| prod.mul(&p[k]));
        let z = z_lambda(&lambda);
        for (mu, c) in p_lambda.terms() {
            let coeff = c * &scalar;
            let slot = acc.entry(mu.clone()).or_default();
            if slot.len() < coeff.coeffs().len() {
                slot.resize(coeff.coeffs().len(), BigRational::zero());
            }
            for (e, x) in coeff.coeffs().iter().enumerate() {
                slot[e] += BigRational::new(x.clone(), z.clone());
            }
        }
    }
    let mut out = HPoly::zero(n);
    for (mu, coeffs) in acc {
        let mut ints = Vec::with_capacity(coeffs.len());
        for (e, c) in coeffs.into_iter().enumerate() {
            if !c.is_integer() {
                return Err(SymError::NonIntegral {
                    partition: mu,
                    exponent: e,
                    value: c.to_string(),
                });
            }
            ints.push(c.to_integer());
        }
        out.add_term(mu, &IntPoly::from_coeffs(ints));
    }
    Ok(out.to_schur())
}
