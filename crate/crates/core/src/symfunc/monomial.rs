//! Independent product oracle working with explicit polynomials in finitely
//! many variables.
//!
//! Each Schur function is expanded into monomials by enumerating semistandard
//! tableaux. A symmetric polynomial is determined by its coefficients on
//! the dominant monomials `x^μ` (exponent vector weakly decreasing), so the
//! product is only evaluated there before the Schur expansion is peeled off
//! leading term first.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::{SchurPoly, SymError};
use crate::partition::{partitions_of, Partition};
use crate::poly::IntPoly;

pub type Exponent = Vec<u8>;

/// Monomial expansion `s_λ(x_1..x_m) = Σ_T x^{content(T)}` over semistandard
/// tableaux with entries in `1..=m`.
pub fn schur_monomials(lambda: &Partition, num_vars: usize) -> HashMap<Exponent, u64> {
    let mut out = HashMap::new();
    if lambda.len() > num_vars {
        return out;
    }
    let cells: Vec<(usize, usize)> = lambda
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &row)| (0..row).map(move |j| (i, j)))
        .collect();
    let mut grid: Vec<Vec<u8>> = lambda.parts().iter().map(|&r| vec![0; r]).collect();
    let mut content = vec![0u8; num_vars];
    fill(&cells, 0, &mut grid, &mut content, num_vars as u8, &mut out);
    out
}

fn fill(
    cells: &[(usize, usize)],
    idx: usize,
    grid: &mut [Vec<u8>],
    content: &mut [u8],
    max: u8,
    out: &mut HashMap<Exponent, u64>,
) {
    let Some(&(i, j)) = cells.get(idx) else {
        *out.entry(content.to_vec()).or_default() += 1;
        return;
    };
    let left = if j > 0 { grid[i][j - 1] } else { 1 };
    let above = if i > 0 { grid[i - 1][j] + 1 } else { 1 };
    for v in left.max(above)..=max {
        grid[i][j] = v;
        content[(v - 1) as usize] += 1;
        fill(cells, idx + 1, grid, content, max, out);
        content[(v - 1) as usize] -= 1;
    }
    grid[i][j] = 0;
}

/// Monomial expansion of a Schur-basis polynomial.
pub fn to_monomials(f: &SchurPoly, num_vars: usize) -> HashMap<Exponent, IntPoly> {
    let mut out: HashMap<Exponent, IntPoly> = HashMap::new();
    for (lambda, c) in f.terms() {
        for (exp, k) in schur_monomials(lambda, num_vars) {
            *out.entry(exp).or_default() += &c.scale(&BigInt::from(k));
        }
    }
    out.retain(|_, c| !num_traits::Zero::is_zero(c));
    out
}

fn padded(mu: &Partition, num_vars: usize) -> Exponent {
    let mut e: Exponent = mu.parts().iter().map(|&p| p as u8).collect();
    e.resize(num_vars, 0);
    e
}

/// `f · g` computed through explicit monomial expansions in `num_vars`
/// variables. Needs `num_vars ≥ deg f + deg g` so that no Schur function of
/// the product vanishes.
pub fn monomial_oracle_mul(f: &SchurPoly, g: &SchurPoly, num_vars: usize) -> Result<SchurPoly, SymError> {
    let degree = f.degree() + g.degree();
    if num_vars < degree {
        return Err(SymError::TooFewVariables { num_vars, degree });
    }
    assert!(degree < u8::MAX as usize, "degree too large for the monomial oracle");
    let fm = to_monomials(f, num_vars);
    let gm = to_monomials(g, num_vars);

    let targets = partitions_of(degree);
    let mut residual: HashMap<Partition, IntPoly> = HashMap::new();
    for mu in &targets {
        let target = padded(mu, num_vars);
        let mut acc = IntPoly::default();
        for (alpha, a) in &fm {
            if alpha.iter().zip(&target).any(|(x, y)| x > y) {
                continue;
            }
            let beta: Exponent = target.iter().zip(alpha).map(|(y, x)| y - x).collect();
            if let Some(b) = gm.get(&beta) {
                acc += &(a * b);
            }
        }
        residual.insert(mu.clone(), acc);
    }

    // Lexicographic order refines dominance, so the lex-largest surviving
    // monomial is always the leading term of some s_μ.
    let mut out = SchurPoly::zero(degree);
    for mu in &targets {
        let c = residual[mu].clone();
        if num_traits::Zero::is_zero(&c) {
            continue;
        }
        out.add_term(mu.clone(), &c);
        for (exp, k) in schur_monomials(mu, num_vars) {
            if exp.windows(2).any(|w| w[0] < w[1]) {
                continue;
            }
            let nu = Partition::from_padded(exp.iter().map(|&x| x as usize).collect())
                .expect("dominant exponent is a partition");
            if let Some(slot) = residual.get_mut(&nu) {
                *slot -= &c.scale(&BigInt::from(k));
            }
        }
    }
    if let Some((mu, _)) = residual.iter().find(|(_, c)| !num_traits::Zero::is_zero(*c)) {
        return Err(SymError::NotSymmetric(mu.clone()));
    }
    Ok(out)
}
