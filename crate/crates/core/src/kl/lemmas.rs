//! Generating-function identities behind the convolution formula, checked
//! to a finite order in `u`.
//!
//! `φ(t,u) = Σ P_n u^{n+1}`, `ρ(t,u) = Σ R_n u^{n+1}` and
//! `ψ(t,u) = Σ_{n≥2} Q_n u^{n−1}`; substitutions `(t,u) ↦ (t⁻¹,tu)` are done
//! with [`USeries::reflect`].

use serde::Serialize;

use super::recursion::p_recursion_all;
use super::{q_poly, r_poly, KlError};
use crate::poly::IntPoly;
use crate::symfunc::plethysm::{pleth_powersum_oracle, t_minus_2_series};
use crate::symfunc::series::{SeriesMismatch, USeries};
use crate::symfunc::HPoly;

#[derive(Debug, Clone, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub mismatch: Option<String>,
    /// u-exponent of the first disagreement.
    pub first_bad_u: Option<i64>,
}

impl IdentityCheck {
    fn compare(name: &'static str, statement: &'static str, lhs: &USeries, rhs: &USeries) -> Self {
        let mismatch: Option<SeriesMismatch> = lhs.first_mismatch(rhs);
        IdentityCheck {
            name,
            statement,
            passed: mismatch.is_none(),
            first_bad_u: mismatch.as_ref().map(|m| m.u_exponent),
            mismatch: mismatch.map(|m| {
                format!(
                    "u^{} coefficient of s{} t^{}: {} vs {}",
                    m.u_exponent, m.partition, m.t_exponent, m.left, m.right
                )
            }),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IdentityReport {
    pub order: usize,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn t_minus(c: i64) -> IntPoly {
    IntPoly::from_i64s(&[-c, 1])
}

/// Checks `v(t,u)·H(u)² = H(tu)` for both plethysm routes, and the
/// functional equation of `φ` in its original and simplified forms. With
/// `mutate_square`, `H(u)²` is replaced by `H(u)` in the first two checks.
pub fn verify_lemma_phi(order: usize, mutate_square: bool) -> Result<IdentityReport, KlError> {
    assert!(order >= 2, "identity checks need order ≥ 2");
    let h = USeries::complete(order);
    let h_tu = h.scale_tu()?;
    let h_inv = h.inverse()?;
    let denominator = if mutate_square { h.clone() } else { h.square() };

    let v = t_minus_2_series(order);
    let mut checks = vec![IdentityCheck::compare(
        "v-times-h-squared",
        "Σ h_n[(t−2)X] u^n · H(u)² = H(tu)",
        &v.mul(&denominator),
        &h_tu,
    )];

    let mut oracle_terms = Vec::with_capacity(order + 1);
    for n in 0..=order {
        oracle_terms.push(pleth_powersum_oracle(n, &t_minus(2))?.to_h());
    }
    let v_oracle = USeries::from_fn(order, 0, |n| oracle_terms[n].clone());
    checks.push(IdentityCheck::compare(
        "power-sum-v-times-h-squared",
        "Σ h_n[(t−2)X] u^n · H(u)² = H(tu), plethysm by power sums",
        &v_oracle.mul(&denominator),
        &h_tu,
    ));

    let p = p_recursion_all(order)?;
    let phi_terms: Vec<HPoly> = p.iter().map(|f| f.to_h()).collect();
    let phi = USeries::from_fn(order, 1, |n| phi_terms[n].clone());
    let phi_reflected = phi.reflect()?;
    let ratio = h_tu.mul(&h_inv);
    let ratio_sq = ratio.square();

    let original = h.mul(&v).scale(&t_minus(1)).shift_u(1).add(&ratio_sq.mul(&phi))?;
    checks.push(IdentityCheck::compare(
        "phi-functional-equation",
        "φ(t⁻¹,tu) = (t−1)u H(u) v(t,u) + H(tu)²/H(u)² φ(t,u)",
        &phi_reflected,
        &original,
    ));

    let simplified = ratio.scale(&t_minus(1)).shift_u(1).add(&ratio_sq.mul(&phi))?;
    checks.push(IdentityCheck::compare(
        "phi-simplified-equation",
        "φ(t⁻¹,tu) = (t−1)u H(tu)/H(u) + H(tu)²/H(u)² φ(t,u)",
        &phi_reflected,
        &simplified,
    ));
    Ok(IdentityReport { order, checks })
}

/// Checks how `ρ` factors through `ψ` and the functional equation `ρ`
/// shares with `φ`.
pub fn verify_lemma_rho(order: usize) -> Result<IdentityReport, KlError> {
    assert!(order >= 2, "identity checks need order ≥ 2");
    let t = IntPoly::t();
    let h = USeries::complete(order);
    let h_tu = h.scale_tu()?;
    let h_inv = h.inverse()?;
    let ratio = h_tu.mul(&h_inv);

    let rho_terms: Vec<HPoly> = (0..=order).map(|n| r_poly(n).to_h()).collect();
    let rho = USeries::from_fn(order, 1, |n| rho_terms[n].clone());
    let psi_terms: Vec<HPoly> = (0..=order).map(|n| q_poly(n).to_h()).collect();
    let psi = USeries::from_fn(order, -1, |n| psi_terms[n].clone());

    let mut checks = Vec::new();

    let unit_at_u = USeries::from_fn(order, 1, |n| if n == 0 { HPoly::unit() } else { HPoly::zero(n) });
    checks.push(IdentityCheck::compare(
        "rho-leading-term",
        "the u¹ coefficient of ρ is R_0 = 1",
        &rho.truncate(0),
        &unit_at_u.truncate(0),
    ));

    let one_plus = USeries::one(order).add(&psi.scale(&t).shift_u(1))?;
    checks.push(IdentityCheck::compare(
        "rho-through-psi",
        "ρ(t,u) = u H(u) (1 + t u ψ(t,u))",
        &rho,
        &h.shift_u(1).mul(&one_plus),
    ));

    let rho_reflected = rho.reflect()?;
    let rhs = ratio.scale(&t_minus(1)).shift_u(1).add(&ratio.square().mul(&rho))?;
    checks.push(IdentityCheck::compare(
        "rho-functional-equation",
        "ρ(t⁻¹,tu) = (t−1)u H(tu)/H(u) + H(tu)²/H(u)² ρ(t,u)",
        &rho_reflected,
        &rhs,
    ));

    let psi_reflected = psi.reflect()?;
    let one_plus_reflected = USeries::one(order).add(&psi_reflected.shift_u(1))?;
    checks.push(IdentityCheck::compare(
        "rho-reflected-through-psi",
        "ρ(t⁻¹,tu) = t u H(tu) (1 + u ψ(t⁻¹,tu))",
        &rho_reflected,
        &h_tu.scale(&t).shift_u(1).mul(&one_plus_reflected),
    ));

    // ψ(t⁻¹,tu) = −1/u + (t−1)/(tuH(u)) + H(tu)ρ/(tu²H(u)²), multiplied by tu.
    let minus_t = USeries::one(order).scale(&-&t);
    let psi_rhs = minus_t
        .add(&h_inv.scale(&t_minus(1)))?
        .add(&ratio.mul(&h_inv).mul(&rho.shift_u(-1)))?;
    checks.push(IdentityCheck::compare(
        "psi-reflected",
        "t u ψ(t⁻¹,tu) = −t + (t−1)/H(u) + H(tu) ρ(t,u) / (u H(u)²)",
        &psi_reflected.scale(&t).shift_u(1),
        &psi_rhs,
    ));

    Ok(IdentityReport { order, checks })
}
