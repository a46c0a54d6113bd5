//! The verification suite behind `eqkl verify`.
//!
//! Each check compares independent computations and reports the first
//! located counterexample. Output contains no timings, so a run is
//! byte-reproducible.

use std::cell::OnceCell;
use std::fmt;

use clap::ValueEnum;
use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::Serialize;
use thiserror::Error;

use crate::kl::lemmas::{verify_lemma_phi, verify_lemma_rho, IdentityReport};
use crate::kl::recursion::RecursionSolver;
use crate::kl::{
    b_components, b_total_via_pieri, binomial, case_analysis, p_closed_form_with, q_poly, r_poly, thagomizer_nonequiv,
    KappaRule,
};
use crate::matroid::{cycle_graph, kl_poly, thagomizer_graph};
use crate::partition::{partitions_of, Partition};
use crate::poly::IntPoly;
use crate::symfunc::monomial::monomial_oracle_mul;
use crate::symfunc::plethysm::{pleth_h_t_minus_1, pleth_h_t_minus_2, pleth_powersum_oracle};
use crate::symfunc::{schur_to_h, HPoly, SchurPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Check {
    Recursion,
    Convolution,
    ClosedForm,
    Corollary,
    LemmaPhi,
    LemmaRho,
    BSeries,
    MatroidOracle,
    PropertySuite,
}

impl Check {
    pub const ALL: [Check; 9] = [
        Check::Recursion,
        Check::Convolution,
        Check::ClosedForm,
        Check::Corollary,
        Check::LemmaPhi,
        Check::LemmaRho,
        Check::BSeries,
        Check::MatroidOracle,
        Check::PropertySuite,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Recursion => "recursion",
            Check::Convolution => "convolution",
            Check::ClosedForm => "closed_form",
            Check::Corollary => "corollary",
            Check::LemmaPhi => "lemma_phi",
            Check::LemmaRho => "lemma_rho",
            Check::BSeries => "b_series",
            Check::MatroidOracle => "matroid_oracle",
            Check::PropertySuite => "property_suite",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Check::Recursion => {
                "the unique solution of t^{n+1}P_n(1/t) = (t−1)Σ h_ℓ[(t−2)X]h_{n−ℓ} + Σ P_i h_j[(t−1)X]h_m[(t−1)X] \
                 with P_0 = 1 and deg P_n ≤ ⌊n/2⌋ equals h_n + tΣ_{k≥2} h_{n−k}Q_k"
            }
            Check::Convolution => {
                "h_n + tΣ_{k≥2} h_{n−k}Q_k agrees between the Pieri route and the h-basis product route, \
                 and its Schur support is Υ_n ∪ {(n)}"
            }
            Check::ClosedForm => {
                "h_n + tΣ_{k≥2} h_{n−k}Q_k = Σ_{λ∈Υ_n} κ(λ)s_λ t^{ℓ(λ)−1}(t+1)^{ω(λ)} + s_(n)((n−1)t+1)"
            }
            Check::Corollary => "P_{M_n}(t) = 1 + tΣ_{k=2}^n C(n,k) P_{U_{1,k−1}}(t), as the dimension of P_n(x;t)",
            Check::LemmaPhi => "Σ h_n[(t−2)X]u^n = H(tu)/H(u)², and φ(t⁻¹,tu) = (t−1)uH(tu)/H(u) + H(tu)²/H(u)² φ(t,u)",
            Check::LemmaRho => "ρ = uH(u)(1 + tuψ), and ρ(t⁻¹,tu) = (t−1)uH(tu)/H(u) + H(tu)²/H(u)² ρ(t,u)",
            Check::BSeries => {
                "B⁽¹⁾+B⁽²⁾+B⁽³⁾+B⁽⁴⁾ = tΣ h_{n−k}Q_k, with per-shape coefficients matching κ(λ)t^{ℓ−1}(t+1)^ω"
            }
            Check::MatroidOracle => {
                "KL polynomials of K_{1,1,n} and of cycle graphs from their lattices of flats match the dimension of \
                 P_n(x;t) and of Q_m(x;t)"
            }
            Check::PropertySuite => {
                "Pieri vs monomial products, Jacobi–Trudi round trip, plethysm by power sums, Σ(f^λ)² = n!, the \
                 binomial dimension rule, solver double reads, and Schur positivity of P_n(x;t)"
            }
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Negative controls that must make the suite fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum Mutation {
    /// Use `λ₁ − λ₂ + 1` on the hook `(n−1,1)` as well.
    Kappa,
    /// Replace `H(u)²` by `H(u)` in the plethysm identity.
    LemmaPhi,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ConfigError {
    #[error("max_n must be at least 1")]
    MaxN,
    #[error("series order must be at least 2, got {0}")]
    SeriesOrder(usize),
    #[error("oracle_max_n must be between 1 and 6, got {0}")]
    OracleMaxN(usize),
    #[error("no checks selected")]
    NoChecks,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    pub max_n: usize,
    pub series_order: usize,
    pub oracle_max_n: usize,
    pub checks: Vec<Check>,
    pub mutate: Option<Mutation>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 12,
            series_order: 10,
            oracle_max_n: 5,
            checks: Check::ALL.to_vec(),
            mutate: None,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.max_n < 1 {
            return Err(ConfigError::MaxN);
        }
        if self.series_order < 2 {
            return Err(ConfigError::SeriesOrder(self.series_order));
        }
        if !(1..=6).contains(&self.oracle_max_n) {
            return Err(ConfigError::OracleMaxN(self.oracle_max_n));
        }
        if self.checks.is_empty() {
            return Err(ConfigError::NoChecks);
        }
        Ok(())
    }

    fn kappa_rule(&self) -> KappaRule {
        if self.mutate == Some(Mutation::Kappa) {
            KappaRule::Mutated
        } else {
            KappaRule::Standard
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub statement: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub config: SuiteConfig,
    pub passed: bool,
    pub results: Vec<CheckResult>,
}

impl SuiteReport {
    pub fn result(&self, check: Check) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.name == check.name())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let status = if r.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}: {}\n", r.name, r.detail));
            if let Some(c) = &r.counterexample {
                out.push_str(&format!("  counterexample: {c}\n"));
            }
        }
        let verdict = if self.passed {
            "all checks passed"
        } else {
            "some checks failed"
        };
        out.push_str(verdict);
        out
    }
}

type Outcome = Result<String, String>;

struct Suite<'a> {
    config: &'a SuiteConfig,
    recursion: OnceCell<Result<RecursionSolver, String>>,
}

impl<'a> Suite<'a> {
    fn solver(&self) -> Result<&RecursionSolver, String> {
        let top = self.config.max_n.max(self.config.oracle_max_n);
        self.recursion
            .get_or_init(|| {
                let mut solver = RecursionSolver::new(top);
                solver.solve_through(top).map_err(|e| e.to_string())?;
                Ok(solver)
            })
            .as_ref()
            .map_err(|e| format!("recursion solver failed: {e}"))
    }

    fn p(&self, n: usize) -> Result<&SchurPoly, String> {
        Ok(&self.solver()?.solved()[n])
    }

    fn run(&self, check: Check) -> CheckResult {
        let outcome = match check {
            Check::Recursion => self.recursion(),
            Check::Convolution => self.convolution(),
            Check::ClosedForm => self.closed_form(),
            Check::Corollary => self.corollary(),
            Check::LemmaPhi => self.lemma_phi(),
            Check::LemmaRho => self.lemma_rho(),
            Check::BSeries => self.b_series(),
            Check::MatroidOracle => self.matroid_oracle(),
            Check::PropertySuite => self.property_suite(),
        };
        let (passed, detail, counterexample) = match outcome {
            Ok(detail) => (true, detail, None),
            Err(c) => (false, format!("failed ({})", check.name()), Some(c)),
        };
        CheckResult {
            name: check.name(),
            statement: check.statement(),
            passed,
            detail,
            counterexample,
        }
    }

    fn recursion(&self) -> Outcome {
        let max_n = self.config.max_n;
        for n in 0..=max_n {
            let p = self.p(n)?;
            let r = r_poly(n);
            if let Some(d) = p.first_difference(&r) {
                return Err(format!("n = {n}: recursion vs convolution, {d}"));
            }
            if p.t_degree().unwrap_or(0) > n / 2 {
                return Err(format!("n = {n}: t-degree {:?} exceeds {}", p.t_degree(), n / 2));
            }
            let constant = p.t_coefficient(0);
            let expect = SchurPoly::basis_element(Partition::row(n)).t_coefficient(0);
            if constant != expect {
                return Err(format!("n = {n}: constant term is not s_({n})"));
            }
        }
        Ok(format!(
            "P_n = R_n exactly for n = 0..={max_n}, with deg_t ≤ ⌊n/2⌋ and constant term s_(n)"
        ))
    }

    fn convolution(&self) -> Outcome {
        let max_n = self.config.max_n;
        for n in 0..=max_n {
            let pieri = r_poly(n);
            let mut acc = HPoly::complete(n);
            for k in 2..=n {
                acc += &HPoly::complete(n - k).mul(&q_poly(k).to_h()).scale(&IntPoly::t());
            }
            if let Some(d) = pieri.first_difference(&acc.to_schur()) {
                return Err(format!("n = {n}: Pieri vs h-basis product, {d}"));
            }
            if n >= 1 {
                let mut expect = crate::partition::upsilon_set(n);
                expect.insert(0, Partition::row(n));
                if pieri.support() != expect {
                    return Err(format!("n = {n}: support differs from Υ_n ∪ {{(n)}}"));
                }
            }
        }
        Ok(format!(
            "R_n agrees between Pieri and h-basis products for n = 0..={max_n}"
        ))
    }

    fn closed_form(&self) -> Outcome {
        let max_n = self.config.max_n;
        let rule = self.config.kappa_rule();
        for n in 1..=max_n {
            let closed = p_closed_form_with(n, rule);
            if let Some(d) = r_poly(n).first_difference(&closed) {
                return Err(format!("n = {n}: convolution vs closed form, {d}"));
            }
        }
        Ok(format!("R_n = A_n exactly for n = 1..={max_n}"))
    }

    fn corollary(&self) -> Outcome {
        let max_n = self.config.max_n;
        for n in 1..=max_n {
            let dim = self.p(n)?.dimension();
            let expect = thagomizer_nonequiv(n);
            if dim != expect {
                return Err(format!("n = {n}: dim P_n = {dim} but the binomial sum gives {expect}"));
            }
        }
        let spot = thagomizer_nonequiv(4);
        if spot != IntPoly::from_i64s(&[1, 11, 2]) {
            return Err(format!("P_(M_4)(t) = {spot}, expected 1 + 11t + 2t^2"));
        }
        Ok(format!(
            "dim P_n(x;t) = P_(M_n)(t) for n = 1..={max_n}; P_(M_4)(t) = {spot}"
        ))
    }

    fn lemma_phi(&self) -> Outcome {
        let mutate = self.config.mutate == Some(Mutation::LemmaPhi);
        let report = verify_lemma_phi(self.config.series_order, mutate).map_err(|e| e.to_string())?;
        identity_outcome(&report)
    }

    fn lemma_rho(&self) -> Outcome {
        let report = verify_lemma_rho(self.config.series_order).map_err(|e| e.to_string())?;
        identity_outcome(&report)
    }

    fn b_series(&self) -> Outcome {
        let max_n = self.config.max_n;
        let rule = self.config.kappa_rule();
        let mut shapes = 0;
        for n in 1..=max_n {
            if let Some(d) = b_components(n).total().first_difference(&b_total_via_pieri(n)) {
                return Err(format!("n = {n}: B-series sum vs Pieri, {d}"));
            }
            for record in case_analysis(n, rule) {
                if !record.matches {
                    return Err(format!(
                        "n = {n}, {} ({:?}): components [{}], expected [{}], closed form {}",
                        record.partition,
                        record.case,
                        sources(&record.observed),
                        sources(&record.expected),
                        record.closed_form
                    ));
                }
                shapes += 1;
            }
        }
        Ok(format!(
            "B-series sums and {shapes} per-shape coefficients agree for n = 1..={max_n}"
        ))
    }

    fn matroid_oracle(&self) -> Outcome {
        let top = self.config.oracle_max_n;
        for n in 1..=top {
            let oracle = kl_poly(&thagomizer_graph(n)).map_err(|e| format!("K_(1,1,{n}): {e}"))?;
            let dim = self.p(n)?.dimension();
            if oracle != dim {
                return Err(format!(
                    "K_(1,1,{n}): lattice of flats gives {oracle}, dim P_n gives {dim}"
                ));
            }
        }
        let cycles = top + 2;
        for m in 3..=cycles {
            let oracle = kl_poly(&cycle_graph(m)).map_err(|e| format!("C_{m}: {e}"))?;
            let dim = q_poly(m).dimension();
            if oracle != dim {
                return Err(format!("C_{m}: lattice of flats gives {oracle}, dim Q_{m} gives {dim}"));
            }
        }
        Ok(format!(
            "thagomizers n = 1..={top} and cycles m = 3..={cycles} agree with the flat-lattice oracle"
        ))
    }

    fn property_suite(&self) -> Outcome {
        pieri_vs_monomials(8)?;
        jacobi_trudi_round_trip(10)?;
        plethysm_routes(8)?;
        syt_square_sum(10)?;
        dimension_rule(10)?;
        self.double_reads()?;
        self.positivity()?;
        Ok(format!(
            "Pieri vs monomials to degree 8, Jacobi–Trudi to |λ| = 10, plethysm to n = 8, Σ(f^λ)² and the binomial \
             rule to n = 10, double reads and positivity to n = {}",
            self.config.max_n
        ))
    }

    fn double_reads(&self) -> Outcome {
        let solver = self.solver()?;
        for s in &solver.stats()[1..=self.config.max_n] {
            let expect = s.components * (s.n / 2 + 1);
            if s.double_reads != expect {
                return Err(format!(
                    "n = {}: {} double reads, expected {expect}",
                    s.n, s.double_reads
                ));
            }
            if s.n % 2 == 1 && s.gap_checks < s.components {
                return Err(format!("n = {}: the middle exponent was not checked", s.n));
            }
        }
        Ok(String::new())
    }

    fn positivity(&self) -> Outcome {
        for n in 0..=self.config.max_n {
            let p = self.p(n)?;
            if let Some((lambda, c)) = p.terms().find(|(_, c)| !c.has_nonnegative_coeffs()) {
                return Err(format!("n = {n}: coefficient of {lambda} is {c}"));
            }
        }
        Ok(String::new())
    }
}

fn sources(list: &[(usize, IntPoly)]) -> String {
    list.iter()
        .map(|(i, c)| format!("B{i}: {c}"))
        .collect::<Vec<_>>()
        .join(", ")
}

fn identity_outcome(report: &IdentityReport) -> Outcome {
    match report.first_failure() {
        None => Ok(format!(
            "{} identities hold to order u^{}",
            report.checks.len(),
            report.order
        )),
        Some(c) => Err(format!(
            "{} [{}]: {}",
            c.name,
            c.statement,
            c.mismatch.as_deref().unwrap_or("mismatch")
        )),
    }
}

fn pieri_vs_monomials(max_degree: usize) -> Outcome {
    for d in 1..=max_degree {
        for k in 1..=d {
            for lambda in partitions_of(d - k) {
                let s = SchurPoly::basis_element(lambda.clone());
                let h = SchurPoly::basis_element(Partition::row(k));
                let oracle = monomial_oracle_mul(&s, &h, d).map_err(|e| e.to_string())?;
                if let Some(diff) = s.pieri_mul(k).first_difference(&oracle) {
                    return Err(format!("s{lambda} · h_{k}: Pieri vs monomials, {diff}"));
                }
            }
        }
    }
    Ok(String::new())
}

fn jacobi_trudi_round_trip(max_size: usize) -> Outcome {
    for n in 0..=max_size {
        for lambda in partitions_of(n) {
            let back = schur_to_h(&lambda).to_schur();
            if back != SchurPoly::basis_element(lambda.clone()) {
                return Err(format!("s{lambda} does not survive the Jacobi–Trudi round trip"));
            }
        }
    }
    Ok(String::new())
}

fn plethysm_routes(max_n: usize) -> Outcome {
    let minus = |c: i64| IntPoly::from_i64s(&[-c, 1]);
    for n in 0..=max_n {
        for (c, series) in [(1, pleth_h_t_minus_1(n)), (2, pleth_h_t_minus_2(n))] {
            let oracle = pleth_powersum_oracle(n, &minus(c)).map_err(|e| e.to_string())?;
            if let Some(d) = series.to_schur().first_difference(&oracle) {
                return Err(format!("h_{n}[(t−{c})X]: generating function vs power sums, {d}"));
            }
        }
    }
    Ok(String::new())
}

fn syt_square_sum(max_n: usize) -> Outcome {
    let mut factorial = BigUint::one();
    for n in 0..=max_n {
        if n > 0 {
            factorial *= BigUint::from(n);
        }
        let sum: BigUint = partitions_of(n).iter().map(|l| l.syt_count().pow(2)).sum();
        if sum != factorial {
            return Err(format!("n = {n}: Σ(f^λ)² = {sum}, n! = {factorial}"));
        }
    }
    Ok(String::new())
}

fn dimension_rule(max_n: usize) -> Outcome {
    let weight = IntPoly::from_i64s(&[2, -1, 3]);
    for n in 0..=max_n {
        for k in 0..=n {
            for lambda in partitions_of(n - k) {
                let f = SchurPoly::term(lambda.clone(), weight.clone());
                let g = sample_of_degree(k);
                let lhs = f.mul(&g).dimension();
                let rhs = (&f.dimension() * &g.dimension()).scale(&binomial(n, k));
                if lhs != rhs {
                    return Err(format!("dim(s{lambda} · g_{k}) = {lhs}, binomial rule gives {rhs}"));
                }
            }
        }
    }
    Ok(String::new())
}

/// A fixed degree-`k` test function with several Schur terms.
fn sample_of_degree(k: usize) -> SchurPoly {
    let mut g = SchurPoly::zero(k);
    for (i, mu) in partitions_of(k).into_iter().enumerate().step_by(2) {
        g.add_term(mu, &IntPoly::monomial(BigInt::from(i as i64 + 1), i % 3));
    }
    g
}

/// Runs the selected checks in the order given by [`Check::ALL`].
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, ConfigError> {
    config.validate()?;
    let mut checks = config.checks.clone();
    checks.sort();
    checks.dedup();
    let suite = Suite {
        config,
        recursion: OnceCell::new(),
    };
    let results: Vec<CheckResult> = checks.into_iter().map(|c| suite.run(c)).collect();
    Ok(SuiteReport {
        config: config.clone(),
        passed: results.iter().all(|r| r.passed),
        results,
    })
}
