use std::time::Instant;

use serde::Serialize;

use super::recursion::p_recursion;
use super::{p_closed_form, r_poly, thagomizer_nonequiv, KlError};
use crate::poly::IntPoly;
use crate::symfunc::{Difference, SchurPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Equalities {
    pub recursion_convolution: bool,
    pub convolution_closed_form: bool,
    pub recursion_closed_form: bool,
}

impl Equalities {
    pub fn all(&self) -> bool {
        self.recursion_convolution && self.convolution_closed_form && self.recursion_closed_form
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Timings {
    pub recursion_ms: f64,
    pub convolution_ms: f64,
    pub closed_form_ms: f64,
}

/// The three computations of `P_n(x;t)` side by side.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KlReport {
    pub n: usize,
    pub p_recursion: SchurPoly,
    pub r_poly: SchurPoly,
    pub p_closed_form: SchurPoly,
    pub equal: Equalities,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_difference: Option<PairDifference>,
    pub nonequiv: IntPoly,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairDifference {
    pub pair: &'static str,
    #[serde(flatten)]
    pub difference: Difference,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_secs_f64() * 1e3)
}

impl KlReport {
    /// Builds the report for `n ≥ 1`. Timings are attached only on request
    /// so that the default serialization is reproducible.
    pub fn build(n: usize, with_timings: bool) -> Result<Self, KlError> {
        assert!(n >= 1, "the closed form is stated for n ≥ 1");
        let (rec, rec_ms) = timed(|| p_recursion(n));
        let rec = rec?;
        let (conv, conv_ms) = timed(|| r_poly(n));
        let (closed, closed_ms) = timed(|| p_closed_form(n));

        let pairs = [
            ("recursion/convolution", &rec, &conv),
            ("convolution/closed-form", &conv, &closed),
            ("recursion/closed-form", &rec, &closed),
        ];
        let first_difference = pairs.iter().find_map(|(pair, a, b)| {
            a.first_difference(b)
                .map(|difference| PairDifference { pair, difference })
        });
        let equal = Equalities {
            recursion_convolution: rec == conv,
            convolution_closed_form: conv == closed,
            recursion_closed_form: rec == closed,
        };
        Ok(KlReport {
            n,
            nonequiv: thagomizer_nonequiv(n),
            equal,
            first_difference,
            timings: with_timings.then_some(Timings {
                recursion_ms: rec_ms,
                convolution_ms: conv_ms,
                closed_form_ms: closed_ms,
            }),
            p_recursion: rec,
            r_poly: conv,
            p_closed_form: closed,
        })
    }
}
