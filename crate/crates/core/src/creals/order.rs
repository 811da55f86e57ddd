//! Certificate-producing order relations on [`RealGen`].
//!
//! `β <∘ γ` ("measurably smaller") holds when some `m, n` give
//! `γ(v) - β(v) > 2^(-n)` for all `v >= m`. Under the regularity modulus it is
//! enough to see
//!
//! ```text
//! γ(m) - β(m) > 2^(-n) + 2^(-m+2)
//! ```
//!
//! at the single index `m`: each side moves by at most `2^(-m) + 2^(-v)` from
//! index `m` to any `v >= m`. The search scans `m = 0..=fuel` and, for each `m`,
//! the least adequate `n <= fuel`; the first hit is returned. Running out of
//! fuel yields [`TriVerdict::Unknown`], which asserts nothing.
//!
//! Negative verdicts never come from search. They come only from structural
//! [`Facts`](super::Facts) or from recognising that two generators are the same
//! construction.

use std::fmt;

use num_traits::Signed;

use super::RealGen;
use crate::rational::{least_exponent_below, pow2_neg, Rational};

/// Witness for `β <∘ γ`: `γ(v) - β(v) > 2^(-n)` for every `v >= m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MeasurablyCert {
    pub m: u32,
    pub n: u32,
}

impl MeasurablyCert {
    /// Re-runs the single-sample margin check that extends the certificate to
    /// every index past `m`.
    pub fn margin_holds(&self, lesser: &RealGen, greater: &RealGen) -> bool {
        let gap = greater.approx(self.m) - lesser.approx(self.m);
        gap > pow2_neg(self.n as i64) + pow2_neg(self.m as i64 - 2)
    }

    /// Direct check of `greater(v) - lesser(v) > 2^(-n)` for `v` in `[m, m + width]`.
    pub fn window_holds(&self, lesser: &RealGen, greater: &RealGen, width: u32) -> bool {
        let eps = pow2_neg(self.n as i64);
        (self.m..=self.m + width).all(|v| greater.approx(v) - lesser.approx(v) > eps)
    }
}

impl fmt::Display for MeasurablyCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "m={} n={}", self.m, self.n)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    LeftSmaller,
    RightSmaller,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::LeftSmaller => "left_smaller",
            Side::RightSmaller => "right_smaller",
        })
    }
}

/// Witness for `β # γ`: `|β - γ| > 2^(-k)`, obtained from one directed
/// certificate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ApartCert {
    pub k: u32,
    pub side: Side,
    pub inner: MeasurablyCert,
}

impl fmt::Display for ApartCert {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} side={} {}", self.k, self.side, self.inner)
    }
}

/// Structural evidence that `β <∘ γ` cannot hold, i.e. `β >= γ` in the
/// negative sense.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Refutation {
    /// Both generators are the same construction.
    Coincident,
    /// Every approximant of `β` is `>= lower`, every approximant of `γ` is
    /// `<= upper`, and `lower >= upper`.
    Bounds { lower: Rational, upper: Rational },
}

impl Refutation {
    /// Independent re-check against the generators' declared facts.
    pub fn refutes_smaller(&self, beta: &RealGen, gamma: &RealGen) -> bool {
        match self {
            Refutation::Coincident => beta.same_construction(gamma),
            Refutation::Bounds { lower, upper } => {
                lower >= upper
                    && beta.facts().lower.as_ref().is_some_and(|b| b >= lower)
                    && gamma.facts().upper.as_ref().is_some_and(|g| g <= upper)
            }
        }
    }
}

/// Outcome of a fuel-bounded semi-decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TriVerdict<P, D = Refutation> {
    Proved(P),
    Disproved(D),
    Unknown(u32),
}

impl<P, D> TriVerdict<P, D> {
    pub fn is_proved(&self) -> bool {
        matches!(self, TriVerdict::Proved(_))
    }

    pub fn is_disproved(&self) -> bool {
        matches!(self, TriVerdict::Disproved(_))
    }

    pub fn is_unknown(&self) -> bool {
        matches!(self, TriVerdict::Unknown(_))
    }

    pub fn proof(&self) -> Option<&P> {
        match self {
            TriVerdict::Proved(p) => Some(p),
            _ => None,
        }
    }
}

impl<P: fmt::Display, D> fmt::Display for TriVerdict<P, D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TriVerdict::Proved(p) => write!(f, "PROVED {p}"),
            TriVerdict::Disproved(_) => f.write_str("DISPROVED"),
            TriVerdict::Unknown(fuel) => write!(f, "UNKNOWN fuel={fuel}"),
        }
    }
}

/// Structural proof of `¬(β <∘ γ)`, if the facts support one.
pub fn not_measurably_smaller(beta: &RealGen, gamma: &RealGen) -> Option<Refutation> {
    if beta.same_construction(gamma) {
        return Some(Refutation::Coincident);
    }
    match (&beta.facts().lower, &gamma.facts().upper) {
        (Some(lower), Some(upper)) if lower >= upper => Some(Refutation::Bounds {
            lower: lower.clone(),
            upper: upper.clone(),
        }),
        _ => None,
    }
}

/// Searches for a certificate of `β <∘ γ`.
pub fn measurably_smaller(
    beta: &RealGen,
    gamma: &RealGen,
    fuel: u32,
) -> TriVerdict<MeasurablyCert> {
    if let Some(r) = not_measurably_smaller(beta, gamma) {
        return TriVerdict::Disproved(r);
    }
    if fuel == 0 {
        return TriVerdict::Unknown(0);
    }
    for m in 0..=fuel {
        let gap = gamma.approx(m) - beta.approx(m);
        if !gap.is_positive() {
            continue;
        }
        let room = gap - pow2_neg(m as i64 - 2);
        if let Some(n) = least_exponent_below(&room) {
            if n <= fuel {
                return TriVerdict::Proved(MeasurablyCert { m, n });
            }
        }
    }
    TriVerdict::Unknown(fuel)
}

/// `β ∘> γ`, i.e. `γ <∘ β`.
pub fn measurably_greater(
    beta: &RealGen,
    gamma: &RealGen,
    fuel: u32,
) -> TriVerdict<MeasurablyCert> {
    measurably_smaller(gamma, beta, fuel)
}

/// `β # γ` as the disjunction `β <∘ γ ∨ β ∘> γ`.
///
/// Disproved only when the two generators coincide structurally, or when the
/// facts pin both to the same single value.
pub fn apart(beta: &RealGen, gamma: &RealGen, fuel: u32) -> TriVerdict<ApartCert> {
    let left = not_measurably_smaller(beta, gamma);
    let right = not_measurably_smaller(gamma, beta);
    match (left, right) {
        (Some(Refutation::Coincident), _) => return TriVerdict::Disproved(Refutation::Coincident),
        (Some(r), Some(_)) => return TriVerdict::Disproved(r),
        _ => {}
    }
    if fuel == 0 {
        return TriVerdict::Unknown(0);
    }
    if let TriVerdict::Proved(inner) = measurably_smaller(beta, gamma, fuel) {
        return TriVerdict::Proved(ApartCert {
            k: inner.n,
            side: Side::LeftSmaller,
            inner,
        });
    }
    if let TriVerdict::Proved(inner) = measurably_greater(beta, gamma, fuel) {
        return TriVerdict::Proved(ApartCert {
            k: inner.n,
            side: Side::RightSmaller,
            inner,
        });
    }
    TriVerdict::Unknown(fuel)
}
