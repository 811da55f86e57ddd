//! A finitely supported model of the 1907 pseudo-continuum.
//!
//! Points have rational coordinates indexed by integer tuples
//! `⟨a_1, …, a_n⟩`, read as the ordinal `a_1·ω^(n-1) + … + a_n`. Only finitely
//! many coordinates are nonzero. Two points are compared at the
//! lexicographically smallest index where they differ, so a *smaller* index is
//! a *more significant* digit: `e[-1,0]` is infinitely large, `e[0,1]` is
//! infinitesimal, and the real line sits at the zero index.
//!
//! Multiplication adds indices componentwise and multiplies coefficients by a
//! twist `p^B(a,b)`, with `B(a,b) = Σ_{i<j} a_i·b_j`. `B` is bilinear, so the
//! twist is a bicharacter and the product is associative; it is not symmetric,
//! so the product is not commutative once `p ≠ 1`:
//!
//! ```text
//! e[0,1] · e[1,0] = e[1,1]        e[1,0] · e[0,1] = p·e[1,1]
//! ```

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::rational::{int, Rational};

mod archimedes;

pub use archimedes::NonArchimedeanWitness;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PseudoError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("twist parameter must be a positive rational, got {0}")]
    InvalidTwist(Rational),
    #[error("twist exponent {0} is out of range")]
    ExponentOverflow(BigInt),
    #[error("zero has no order of magnitude")]
    ZeroMagnitude,
}

/// Coordinate number `⟨a_1, …, a_n⟩`, ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoordIndex(Vec<BigInt>);

impl CoordIndex {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        CoordIndex(coeffs)
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        CoordIndex(coeffs.iter().map(|&a| BigInt::from(a)).collect())
    }

    pub fn zero(dim: usize) -> Self {
        CoordIndex(vec![BigInt::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Componentwise sum: the coordinate shift performed by multiplication.
    pub fn shifted(&self, other: &CoordIndex) -> CoordIndex {
        CoordIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for CoordIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("e[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

/// A point with finitely many nonzero rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoPoint {
    dim: usize,
    terms: BTreeMap<CoordIndex, Rational>,
}

impl PseudoPoint {
    pub fn zero(dim: usize) -> Self {
        PseudoPoint {
            dim,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a point from `(index, coefficient)` pairs, summing repeats and
    /// dropping zeros.
    pub fn from_terms<I>(dim: usize, terms: I) -> Result<Self, PseudoError>
    where
        I: IntoIterator<Item = (CoordIndex, Rational)>,
    {
        let mut p = PseudoPoint::zero(dim);
        for (idx, c) in terms {
            if idx.dim() != dim {
                return Err(PseudoError::DimensionMismatch {
                    expected: dim,
                    found: idx.dim(),
                });
            }
            p.accumulate(idx, c);
        }
        Ok(p)
    }

    fn accumulate(&mut self, idx: CoordIndex, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(idx) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CoordIndex, &Rational)> {
        self.terms.iter()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, idx: &CoordIndex) -> Rational {
        self.terms.get(idx).cloned().unwrap_or_else(Rational::zero)
    }

    /// The most significant (lexicographically smallest) nonzero coordinate.
    pub fn leading(&self) -> Option<(&CoordIndex, &Rational)> {
        self.terms.iter().next()
    }

    pub fn neg(&self) -> PseudoPoint {
        PseudoPoint {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> PseudoPoint {
        if q.is_zero() {
            return PseudoPoint::zero(self.dim);
        }
        PseudoPoint {
            dim: self.dim,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), v * q)).collect(),
        }
    }
}

impl fmt::Display for PseudoPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (idx, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "{idx}")?;
            } else {
                write!(f, "{c}*{idx}")?;
            }
        }
        Ok(())
    }
}

/// The twist `f(a,b) = p^B(a,b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistConfig {
    p: Rational,
}

impl TwistConfig {
    pub fn new(p: Rational) -> Result<Self, PseudoError> {
        if !p.is_positive() {
            return Err(PseudoError::InvalidTwist(p));
        }
        Ok(TwistConfig { p })
    }

    pub fn p(&self) -> &Rational {
        &self.p
    }

    /// `B(a,b) = Σ_{i<j} a_i·b_j`.
    pub fn bilinear(a: &CoordIndex, b: &CoordIndex) -> BigInt {
        let mut total = BigInt::zero();
        // running prefix sum of a_i for i < j
        let mut prefix = BigInt::zero();
        for (ai, bj) in a.coeffs().iter().zip(b.coeffs()) {
            total += &prefix * bj;
            prefix += ai;
        }
        total
    }

    pub fn factor(&self, a: &CoordIndex, b: &CoordIndex) -> Result<Rational, PseudoError> {
        let e = Self::bilinear(a, b);
        if e.is_zero() || self.p.is_one() {
            return Ok(Rational::one());
        }
        let e32 = e.to_i32().ok_or(PseudoError::ExponentOverflow(e))?;
        Ok(self.p.pow(e32))
    }
}

impl Default for TwistConfig {
    fn default() -> Self {
        TwistConfig { p: int(2) }
    }
}

/// The ring of finitely supported points in a fixed dimension with a fixed
/// twist.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoContinuum {
    dim: usize,
    twist: TwistConfig,
}

impl PseudoContinuum {
    pub fn new(dim: usize, twist: TwistConfig) -> Result<Self, PseudoError> {
        if dim == 0 {
            return Err(PseudoError::ZeroDimension);
        }
        Ok(PseudoContinuum { dim, twist })
    }

    /// Dimension `dim` with the default twist `p = 2`.
    pub fn with_dim(dim: usize) -> Result<Self, PseudoError> {
        Self::new(dim, TwistConfig::default())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &TwistConfig {
        &self.twist
    }

    fn check(&self, found: usize) -> Result<(), PseudoError> {
        if found == self.dim {
            Ok(())
        } else {
            Err(PseudoError::DimensionMismatch {
                expected: self.dim,
                found,
            })
        }
    }

    pub fn zero(&self) -> PseudoPoint {
        PseudoPoint::zero(self.dim)
    }

    pub fn unit(&self, idx: &CoordIndex) -> Result<PseudoPoint, PseudoError> {
        self.check(idx.dim())?;
        PseudoPoint::from_terms(self.dim, [(idx.clone(), Rational::one())])
    }

    pub fn one(&self) -> PseudoPoint {
        self.embed(Rational::one())
    }

    /// The real `q` placed at the zero coordinate.
    pub fn embed(&self, q: Rational) -> PseudoPoint {
        PseudoPoint::from_terms(self.dim, [(CoordIndex::zero(self.dim), q)])
            .expect("zero index has ring dimension")
    }

    pub fn add(&self, x: &PseudoPoint, y: &PseudoPoint) -> Result<PseudoPoint, PseudoError> {
        self.check(x.dim)?;
        self.check(y.dim)?;
        let mut out = x.clone();
        for (k, v) in &y.terms {
            out.accumulate(k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, x: &PseudoPoint, y: &PseudoPoint) -> Result<PseudoPoint, PseudoError> {
        self.add(x, &y.neg())
    }

    pub fn mul(&self, x: &PseudoPoint, y: &PseudoPoint) -> Result<PseudoPoint, PseudoError> {
        self.check(x.dim)?;
        self.check(y.dim)?;
        let mut out = self.zero();
        for (a, xa) in &x.terms {
            for (b, yb) in &y.terms {
                let c = self.twist.factor(a, b)? * xa * yb;
                out.accumulate(a.shifted(b), c);
            }
        }
        Ok(out)
    }

    /// `n·x` for a natural `n`.
    pub fn scale_nat(&self, n: u64, x: &PseudoPoint) -> PseudoPoint {
        x.scale(&int(n as i64))
    }

    /// Decided at the smallest index where the coefficients differ.
    pub fn compare(&self, x: &PseudoPoint, y: &PseudoPoint) -> Result<Ordering, PseudoError> {
        let d = self.sub(x, y)?;
        Ok(match d.leading() {
            None => Ordering::Equal,
            Some((_, c)) if c.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        })
    }

    /// `x·y − y·x`.
    pub fn commutator(&self, x: &PseudoPoint, y: &PseudoPoint) -> Result<PseudoPoint, PseudoError> {
        self.sub(&self.mul(x, y)?, &self.mul(y, x)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn e(ring: &PseudoContinuum, idx: &[i64]) -> PseudoPoint {
        ring.unit(&CoordIndex::from_i64s(idx)).unwrap()
    }

    #[test]
    fn units_and_embedding() {
        let r = PseudoContinuum::with_dim(2).unwrap();
        assert_eq!(e(&r, &[0, 0]), r.one());
        assert_eq!(e(&r, &[0, 1]).to_string(), "e[0,1]");
        assert_eq!(e(&r, &[1, 0]).to_string(), "e[1,0]");
        assert!(r.embed(int(0)).is_zero());
        assert_eq!(r.embed(int(0)).to_string(), "0");
        assert_eq!(r.embed(ratio(3, 2)).to_string(), "3/2*e[0,0]");
        assert_eq!(
            r.unit(&CoordIndex::from_i64s(&[1, 2, 3])),
            Err(PseudoError::DimensionMismatch { expected: 2, found: 3 })
        );
    }

    #[test]
    fn addition() {
        let r = PseudoContinuum::with_dim(2).unwrap();
        let s = r.add(&e(&r, &[0, 1]), &e(&r, &[1, 0])).unwrap();
        assert_eq!(s.to_string(), "e[0,1] + e[1,0]");
        assert!(r.add(&s, &s.neg()).unwrap().is_zero());
        assert_eq!(r.add(&r.embed(int(1)), &r.embed(int(2))).unwrap(), r.embed(int(3)));
        let other = PseudoContinuum::with_dim(3).unwrap().one();
        assert!(r.add(&s, &other).is_err());
    }

    #[test]
    fn twisted_products() {
        let r = PseudoContinuum::with_dim(2).unwrap();
        let (one_1, one_w) = (e(&r, &[0, 1]), e(&r, &[1, 0]));
        assert_eq!(r.mul(&one_1, &one_w).unwrap(), e(&r, &[1, 1]));
        assert_eq!(r.mul(&one_w, &one_1).unwrap(), e(&r, &[1, 1]).scale(&int(2)));
        assert_eq!(r.mul(&r.embed(int(3)), &r.embed(int(4))).unwrap(), r.embed(int(12)));
        assert_eq!(
            r.commutator(&one_1, &one_w).unwrap().to_string(),
            "-1*e[1,1]"
        );
        assert!(r.commutator(&r.embed(int(5)), &r.embed(ratio(2, 7))).unwrap().is_zero());
        assert!(r.commutator(&one_w, &one_w).unwrap().is_zero());
    }

    #[test]
    fn negative_exponents_invert_p() {
        let r = PseudoContinuum::new(2, TwistConfig::new(int(3)).unwrap()).unwrap();
        let p = r.mul(&e(&r, &[-1, 0]), &e(&r, &[0, 1])).unwrap();
        assert_eq!(p.to_string(), "1/3*e[-1,1]");
    }

    #[test]
    fn degenerate_twist_commutes() {
        let r = PseudoContinuum::new(2, TwistConfig::new(int(1)).unwrap()).unwrap();
        assert!(r.commutator(&e(&r, &[0, 1]), &e(&r, &[1, 0])).unwrap().is_zero());
        assert!(TwistConfig::new(int(0)).is_err());
        assert!(TwistConfig::new(int(-2)).is_err());
        assert_eq!(PseudoContinuum::with_dim(0), Err(PseudoError::ZeroDimension));
    }

    #[test]
    fn comparisons() {
        let r = PseudoContinuum::with_dim(2).unwrap();
        let eps = e(&r, &[0, 1]);
        assert_eq!(r.compare(&eps, &r.zero()).unwrap(), Ordering::Greater);
        for n in [1, 7, 1000] {
            let scaled = eps.scale(&int(n));
            assert_eq!(r.compare(&scaled, &r.one()).unwrap(), Ordering::Less);
        }
        assert_eq!(r.compare(&eps, &eps).unwrap(), Ordering::Equal);
        assert_eq!(
            r.compare(&r.embed(ratio(1, 3)), &r.embed(ratio(1, 2))).unwrap(),
            Ordering::Less
        );
    }

    #[test]
    fn bilinear_form() {
        let a = CoordIndex::from_i64s(&[1, 2, 3]);
        let b = CoordIndex::from_i64s(&[4, 5, 6]);
        // a1*b2 + a1*b3 + a2*b3
        assert_eq!(TwistConfig::bilinear(&a, &b), BigInt::from(5 + 6 + 12));
    }
}
