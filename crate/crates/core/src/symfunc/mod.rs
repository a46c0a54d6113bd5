//! Homogeneous symmetric functions with coefficients in `Z[t]`.
//!
//! Two bases are carried: the Schur basis, used for every result that is
//! printed or compared, and the complete-homogeneous basis, where
//! multiplication is just concatenation of indices. Conversions go through
//! iterated Pieri (h → s, Kostka numbers) and the Jacobi–Trudi determinant
//! (s → h).

pub mod monomial;
pub mod plethysm;
pub mod series;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::marker::PhantomData;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::partition::{horizontal_strips, Partition};
use crate::poly::{IntPoly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SymError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("{num_vars} variables cannot represent a degree-{degree} symmetric function faithfully")]
    TooFewVariables { num_vars: usize, degree: usize },
    #[error("non-integral coefficient {value} survived at {partition} t^{exponent}")]
    NonIntegral {
        partition: Partition,
        exponent: usize,
        value: String,
    },
    #[error("monomial expansion is not symmetric: leftover at {0}")]
    NotSymmetric(Partition),
}

pub trait Basis: Copy + Clone + Default + PartialEq + Eq + fmt::Debug {
    /// Name used in JSON output.
    const NAME: &'static str;
    /// Letter used in text output, e.g. `s[3,1]`.
    const SYMBOL: &'static str;
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Schur;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Homogeneous;

impl Basis for Schur {
    const NAME: &'static str = "schur";
    const SYMBOL: &'static str = "s";
}

impl Basis for Homogeneous {
    const NAME: &'static str = "h";
    const SYMBOL: &'static str = "h";
}

/// A degree-`n` symmetric function `Σ_λ c_λ(t) b_λ` in basis `B`. Every key
/// is a partition of `n` and no stored coefficient is zero.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFn<B: Basis> {
    degree: usize,
    terms: BTreeMap<Partition, IntPoly>,
    basis: PhantomData<B>,
}

pub type SchurPoly = SymFn<Schur>;
pub type HPoly = SymFn<Homogeneous>;

impl<B: Basis> SymFn<B> {
    pub fn zero(degree: usize) -> Self {
        SymFn {
            degree,
            terms: BTreeMap::new(),
            basis: PhantomData,
        }
    }

    /// The degree-0 identity `b_∅ = 1`.
    pub fn unit() -> Self {
        SymFn::basis_element(Partition::empty())
    }

    pub fn basis_element(lambda: Partition) -> Self {
        SymFn::term(lambda, IntPoly::one())
    }

    pub fn term(lambda: Partition, coeff: IntPoly) -> Self {
        let mut f = SymFn::zero(lambda.size());
        f.add_term(lambda, &coeff);
        f
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Partition, IntPoly)>,
    {
        let mut f = SymFn::zero(degree);
        for (lambda, c) in terms {
            f.add_term(lambda, &c);
        }
        f
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing lexicographic order of the index partition.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &IntPoly)> {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> Vec<Partition> {
        self.terms().map(|(p, _)| p.clone()).collect()
    }

    pub fn coeff(&self, lambda: &Partition) -> IntPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, lambda: Partition, coeff: &IntPoly) {
        assert_eq!(
            lambda.size(),
            self.degree,
            "term {lambda} does not belong in degree {}",
            self.degree
        );
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &SymFn<B>, factor: &IntPoly) {
        assert_eq!(self.degree, other.degree, "degree mismatch in addition");
        for (lambda, c) in &other.terms {
            self.add_term(lambda.clone(), &(c * factor));
        }
    }

    /// Multiply every coefficient by the scalar polynomial `factor`.
    pub fn scale(&self, factor: &IntPoly) -> Self {
        SymFn::from_terms(self.degree, self.terms.iter().map(|(p, c)| (p.clone(), c * factor)))
    }

    pub fn scale_int(&self, factor: &BigInt) -> Self {
        SymFn::from_terms(
            self.degree,
            self.terms.iter().map(|(p, c)| (p.clone(), c.scale(factor))),
        )
    }

    /// Apply `t^bound · c(1/t)` to every coefficient.
    pub fn mirror(&self, bound: usize) -> Result<Self, PolyError> {
        let mut out = SymFn::zero(self.degree);
        for (p, c) in &self.terms {
            out.add_term(p.clone(), &c.mirror(bound)?);
        }
        Ok(out)
    }

    /// Largest `t`-degree over all coefficients.
    pub fn t_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(IntPoly::degree).max()
    }

    /// Coefficient of `t^exp` in every component.
    pub fn t_coefficient(&self, exp: usize) -> BTreeMap<Partition, BigInt> {
        self.terms
            .iter()
            .map(|(p, c)| (p.clone(), c.coeff(exp)))
            .filter(|(_, c)| !c.is_zero())
            .collect()
    }

    /// First point where `self` and `other` differ, scanning partitions in
    /// decreasing lexicographic order and exponents upward.
    pub fn first_difference(&self, other: &SymFn<B>) -> Option<Difference> {
        if self.degree != other.degree {
            return Some(Difference {
                partition: Partition::empty(),
                exponent: 0,
                left: format!("degree {}", self.degree),
                right: format!("degree {}", other.degree),
            });
        }
        let mut keys: Vec<&Partition> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for lambda in keys.into_iter().rev() {
            let a = self.coeff(lambda);
            let b = other.coeff(lambda);
            if a == b {
                continue;
            }
            let top = a.coeffs().len().max(b.coeffs().len());
            let exponent = (0..top).find(|&e| a.coeff(e) != b.coeff(e)).unwrap_or(0);
            return Some(Difference {
                partition: lambda.clone(),
                exponent,
                left: a.coeff(exponent).to_string(),
                right: b.coeff(exponent).to_string(),
            });
        }
        None
    }
}

/// A located disagreement between two symmetric functions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Difference {
    pub partition: Partition,
    pub exponent: usize,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient of {} t^{}: {} vs {}",
            self.partition, self.exponent, self.left, self.right
        )
    }
}

impl<B: Basis> AddAssign<&SymFn<B>> for SymFn<B> {
    fn add_assign(&mut self, rhs: &SymFn<B>) {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in addition");
        for (lambda, c) in &rhs.terms {
            self.add_term(lambda.clone(), c);
        }
    }
}

impl<B: Basis> SubAssign<&SymFn<B>> for SymFn<B> {
    fn sub_assign(&mut self, rhs: &SymFn<B>) {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in subtraction");
        for (lambda, c) in &rhs.terms {
            self.add_term(lambda.clone(), &-c);
        }
    }
}

impl<B: Basis> Add<&SymFn<B>> for &SymFn<B> {
    type Output = SymFn<B>;

    fn add(self, rhs: &SymFn<B>) -> SymFn<B> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<B: Basis> Sub<&SymFn<B>> for &SymFn<B> {
    type Output = SymFn<B>;

    fn sub(self, rhs: &SymFn<B>) -> SymFn<B> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<B: Basis> Neg for &SymFn<B> {
    type Output = SymFn<B>;

    fn neg(self) -> SymFn<B> {
        SymFn::from_terms(self.degree, self.terms.iter().map(|(p, c)| (p.clone(), -c)))
    }
}

impl<B: Basis> fmt::Display for SymFn<B> {
    /// One `b[λ]: c(t)` line per term; `0` for the zero function.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
            write!(f, "{}[{}]: {}", B::SYMBOL, parts.join(","), c)?;
        }
        Ok(())
    }
}

impl<B: Basis> fmt::Debug for SymFn<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_map();
        for (p, c) in self.terms() {
            list.entry(&format_args!("{}{}", B::SYMBOL, p), &format_args!("{}", c));
        }
        list.finish()
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeffs: IntPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFnRepr {
    degree: usize,
    basis: String,
    terms: Vec<TermRepr>,
}

impl<B: Basis> Serialize for SymFn<B> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SymFnRepr {
            degree: self.degree,
            basis: B::NAME.to_string(),
            terms: self
                .terms()
                .map(|(p, c)| TermRepr {
                    partition: p.clone(),
                    coeffs: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, B: Basis> Deserialize<'de> for SymFn<B> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SymFnRepr::deserialize(deserializer)?;
        if repr.basis != B::NAME {
            return Err(D::Error::custom(format!(
                "expected basis {:?}, found {:?}",
                B::NAME,
                repr.basis
            )));
        }
        let mut f = SymFn::zero(repr.degree);
        for t in repr.terms {
            if t.partition.size() != repr.degree {
                return Err(D::Error::custom(format!(
                    "partition {} has the wrong size for degree {}",
                    t.partition, repr.degree
                )));
            }
            f.add_term(t.partition, &t.coeffs);
        }
        Ok(f)
    }
}

// ---------------------------------------------------------------------------
// complete-homogeneous basis

impl HPoly {
    /// `h_n`, with `h_0 = 1`.
    pub fn complete(n: usize) -> HPoly {
        HPoly::basis_element(Partition::row(n))
    }

    /// Product in the h-basis: `h_λ h_μ = h_{λ ∪ μ}`.
    pub fn mul(&self, other: &HPoly) -> HPoly {
        let mut out = HPoly::zero(self.degree + other.degree);
        for (lambda, a) in &self.terms {
            for (mu, b) in &other.terms {
                out.add_term(lambda.union(mu), &(a * b));
            }
        }
        out
    }

    pub fn to_schur(&self) -> SchurPoly {
        h_to_schur(self)
    }
}

/// Schur expansion of a single `h_μ` with integer (Kostka) coefficients,
/// built by one Pieri step per part and memoised on prefixes of `μ` for the
/// duration of one conversion.
struct KostkaTable {
    rows: HashMap<Partition, BTreeMap<Partition, BigInt>>,
}

impl KostkaTable {
    fn new() -> Self {
        KostkaTable { rows: HashMap::new() }
    }

    fn expansion(&mut self, mu: &Partition) -> &BTreeMap<Partition, BigInt> {
        if !self.rows.contains_key(mu) {
            let row = match mu.parts().split_last() {
                None => BTreeMap::from([(Partition::empty(), BigInt::one())]),
                Some((&last, rest)) => {
                    let prefix = Partition::new(rest.to_vec()).expect("prefix of a partition");
                    let base = self.expansion(&prefix).clone();
                    pieri_int(&base, last)
                }
            };
            self.rows.insert(mu.clone(), row);
        }
        &self.rows[mu]
    }
}

fn pieri_int(f: &BTreeMap<Partition, BigInt>, k: usize) -> BTreeMap<Partition, BigInt> {
    let mut out: BTreeMap<Partition, BigInt> = BTreeMap::new();
    for (lambda, c) in f {
        for mu in horizontal_strips(lambda, k, None) {
            *out.entry(mu).or_default() += c;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Kostka numbers `K_{λμ}`: the Schur expansion `h_μ = Σ_λ K_{λμ} s_λ`.
pub fn kostka_row(mu: &Partition) -> BTreeMap<Partition, BigInt> {
    KostkaTable::new().expansion(mu).clone()
}

pub fn h_to_schur(f: &HPoly) -> SchurPoly {
    let mut table = KostkaTable::new();
    let mut out = SchurPoly::zero(f.degree);
    for (mu, c) in &f.terms {
        for (lambda, k) in table.expansion(mu).clone() {
            out.add_term(lambda, &c.scale(&k));
        }
    }
    out
}

/// Jacobi–Trudi: `s_λ = det(h_{λ_i − i + j})`, expanded along rows with the
/// set of used columns as memo key.
pub fn schur_to_h(lambda: &Partition) -> HPoly {
    let len = lambda.len();
    assert!(len <= 64, "Jacobi–Trudi expansion supports at most 64 rows");
    let mut memo: HashMap<u64, HPoly> = HashMap::new();
    jt_minor(lambda, 0, &mut memo)
}

fn jt_minor(lambda: &Partition, used: u64, memo: &mut HashMap<u64, HPoly>) -> HPoly {
    let len = lambda.len();
    let row = used.count_ones() as usize;
    if row == len {
        return HPoly::unit();
    }
    if let Some(hit) = memo.get(&used) {
        return hit.clone();
    }
    let free_cols: usize = (0..len).filter(|c| used & (1 << c) == 0).sum();
    let degree =
        (lambda.parts()[row..].iter().sum::<usize>() + free_cols) as isize - (row..len).sum::<usize>() as isize;
    if degree < 0 {
        return HPoly::zero(0);
    }
    let mut out = HPoly::zero(degree as usize);
    let mut position = 0usize;
    for col in 0..len {
        if used & (1 << col) != 0 {
            continue;
        }
        let index = lambda.part(row) as isize - row as isize + col as isize;
        if index >= 0 {
            let minor = jt_minor(lambda, used | (1 << col), memo);
            if !minor.is_zero() {
                let entry = HPoly::complete(index as usize);
                let mut product = entry.mul(&minor);
                if position % 2 == 1 {
                    product = -&product;
                }
                out += &product;
            }
        }
        position += 1;
    }
    memo.insert(used, out.clone());
    out
}

impl SchurPoly {
    /// Rewrite in the h-basis via Jacobi–Trudi, one component at a time.
    pub fn to_h(&self) -> HPoly {
        let mut out = HPoly::zero(self.degree);
        for (lambda, c) in &self.terms {
            out.add_scaled(&schur_to_h(lambda), c);
        }
        out
    }

    /// `f · h_k` by the Pieri rule.
    pub fn pieri_mul(&self, k: usize) -> SchurPoly {
        let mut out = SchurPoly::zero(self.degree + k);
        for (lambda, c) in &self.terms {
            for mu in horizontal_strips(lambda, k, None) {
                out.add_term(mu, c);
            }
        }
        out
    }

    /// `f · h_μ` as a chain of Pieri steps.
    pub fn pieri_chain(&self, mu: &Partition) -> SchurPoly {
        mu.parts().iter().fold(self.clone(), |acc, &k| acc.pieri_mul(k))
    }

    /// Product in the Schur basis: `other` goes to the h-basis and each
    /// `h_μ` acts on `self` by iterated Pieri.
    pub fn mul(&self, other: &SchurPoly) -> SchurPoly {
        let mut out = SchurPoly::zero(self.degree + other.degree);
        for (mu, c) in &other.to_h().terms {
            out.add_scaled(&self.pieri_chain(mu), c);
        }
        out
    }

    /// Send `V_λ ↦ dim V_λ`: `Σ_λ f^λ · c_λ(t)`.
    pub fn dimension(&self) -> IntPoly {
        let mut out = IntPoly::zero();
        for (lambda, c) in &self.terms {
            out += &c.scale(&BigInt::from(lambda.syt_count()));
        }
        out
    }

    /// True when every coefficient of every component is a nonnegative integer.
    pub fn is_schur_positive(&self) -> bool {
        self.terms.values().all(IntPoly::has_nonnegative_coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition;
    use crate::partition::partitions_of;

    fn s(lambda: Partition) -> SchurPoly {
        SchurPoly::basis_element(lambda)
    }

    fn h(mu: Partition) -> HPoly {
        HPoly::basis_element(mu)
    }

    fn sum(terms: &[(Partition, i64)]) -> SchurPoly {
        let degree = terms[0].0.size();
        SchurPoly::from_terms(degree, terms.iter().map(|(p, c)| (p.clone(), IntPoly::constant(*c))))
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(
            s(partition![2]).pieri_mul(1),
            sum(&[(partition![3], 1), (partition![2, 1], 1)])
        );
        assert_eq!(
            s(partition![2, 2]).pieri_mul(1),
            sum(&[(partition![3, 2], 1), (partition![2, 2, 1], 1)])
        );
        assert_eq!(
            s(partition![2]).pieri_mul(2),
            sum(&[(partition![4], 1), (partition![3, 1], 1), (partition![2, 2], 1)])
        );
    }

    #[test]
    fn h_to_schur_examples() {
        assert_eq!(h(partition![4]).to_schur(), s(partition![4]));
        assert_eq!(
            h(partition![2, 1]).to_schur(),
            sum(&[(partition![3], 1), (partition![2, 1], 1)])
        );
        assert_eq!(
            h(partition![1, 1, 1]).to_schur(),
            sum(&[(partition![3], 1), (partition![2, 1], 2), (partition![1, 1, 1], 1)])
        );
        assert_eq!(HPoly::unit().to_schur(), SchurPoly::unit());
    }

    #[test]
    fn jacobi_trudi_examples() {
        assert_eq!(schur_to_h(&partition![5]), h(partition![5]));
        let mut expect = h(partition![2, 1]);
        expect -= &h(partition![3]);
        assert_eq!(schur_to_h(&partition![2, 1]), expect);
        let mut expect = h(partition![2, 2]);
        expect -= &h(partition![3, 1]);
        assert_eq!(schur_to_h(&partition![2, 2]), expect);
        assert_eq!(schur_to_h(&Partition::empty()), HPoly::unit());
    }

    #[test]
    fn jacobi_trudi_round_trip() {
        for n in 0..=10 {
            for lambda in partitions_of(n) {
                assert_eq!(schur_to_h(&lambda).to_schur(), s(lambda.clone()), "{lambda}");
            }
        }
    }

    #[test]
    fn schur_products() {
        let f = sum(&[(partition![2, 1], 3)]);
        assert_eq!(f.mul(&SchurPoly::unit()), f);
        assert_eq!(
            s(partition![1]).mul(&s(partition![1])),
            sum(&[(partition![2], 1), (partition![1, 1], 1)])
        );
        assert_eq!(
            s(partition![2, 1]).mul(&s(partition![1])),
            sum(&[(partition![3, 1], 1), (partition![2, 2], 1), (partition![2, 1, 1], 1)])
        );
        // s21 * s21 has the classical coefficient 2 on s(3,2,1).
        let sq = s(partition![2, 1]).mul(&s(partition![2, 1]));
        assert_eq!(sq.coeff(&partition![3, 2, 1]), IntPoly::constant(2));
        assert_eq!(sq.dimension(), IntPoly::constant(20 * 2 * 2));
    }

    #[test]
    fn pieri_matches_schur_mul_by_row() {
        for n in 0..=5 {
            for lambda in partitions_of(n) {
                for k in 0..=(8 - n).min(3) {
                    let f = s(lambda.clone());
                    assert_eq!(f.pieri_mul(k), f.mul(&s(Partition::row(k))), "{lambda} k={k}");
                }
            }
        }
    }

    #[test]
    fn dimension_specialisation() {
        assert_eq!(s(partition![6]).dimension(), IntPoly::one());
        let q4 = SchurPoly::from_terms(4, [(partition![4], IntPoly::one()), (partition![2, 2], IntPoly::t())]);
        assert_eq!(q4.dimension(), IntPoly::from_i64s(&[1, 2]));
    }

    #[test]
    fn first_difference_is_located() {
        let a = sum(&[(partition![3], 1), (partition![2, 1], 1)]);
        let b = sum(&[(partition![3], 1), (partition![2, 1], 2)]);
        let d = a.first_difference(&b).unwrap();
        assert_eq!(d.partition, partition![2, 1]);
        assert_eq!((d.left.as_str(), d.right.as_str()), ("1", "2"));
        assert!(a.first_difference(&a).is_none());
    }

    #[test]
    fn json_layout() {
        let f = SchurPoly::from_terms(
            4,
            [
                (partition![2, 2], IntPoly::from_i64s(&[0, 1, 1])),
                (partition![4], IntPoly::from_i64s(&[1, 3])),
            ],
        );
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(
            json,
            r#"{"degree":4,"basis":"schur","terms":[{"partition":[4],"coeffs":["1","3"]},{"partition":[2,2],"coeffs":["0","1","1"]}]}"#
        );
        let back: SchurPoly = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<HPoly>(&json).is_err());
        let bad = r#"{"degree":3,"basis":"schur","terms":[{"partition":[4],"coeffs":["1"]}]}"#;
        assert!(serde_json::from_str::<SchurPoly>(bad).is_err());
    }

    #[test]
    fn text_layout() {
        let f = SchurPoly::from_terms(
            4,
            [
                (partition![4], IntPoly::from_i64s(&[1, 3])),
                (partition![3, 1], IntPoly::from_i64s(&[0, 2])),
                (partition![2, 2], IntPoly::from_i64s(&[0, 1, 1])),
            ],
        );
        assert_eq!(f.to_string(), "s[4]: 1 + 3t\ns[3,1]: 2t\ns[2,2]: t + t^2");
    }
}
