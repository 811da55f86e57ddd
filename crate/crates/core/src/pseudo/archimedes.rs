//! Failure of the Archimedean property, and infinitely large / infinitesimal
//! points.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::{CoordIndex, PseudoContinuum, PseudoError, PseudoPoint};

/// Proof that `n·x < y` for every natural `n`.
///
/// Both points are positive and the leading index of `y` is lexicographically
/// smaller than that of `x`. Scaling by `n` never moves the leading index of
/// `x`, so at `y`'s leading index `n·x` has coefficient 0 while `y` is
/// positive, and every more significant coordinate is zero in both.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonArchimedeanWitness {
    pub small_lead: CoordIndex,
    pub large_lead: CoordIndex,
}

impl NonArchimedeanWitness {
    /// Re-checks the witness against the two points it talks about.
    pub fn verify(&self, ring: &PseudoContinuum, x: &PseudoPoint, y: &PseudoPoint) -> bool {
        let zero = ring.zero();
        ring.compare(x, &zero) == Ok(Ordering::Greater)
            && ring.compare(y, &zero) == Ok(Ordering::Greater)
            && x.leading().map(|(i, _)| i) == Some(&self.small_lead)
            && y.leading().map(|(i, _)| i) == Some(&self.large_lead)
            && self.large_lead < self.small_lead
    }

    /// Samples the claim at one `n` by direct comparison.
    pub fn holds_at(
        &self,
        ring: &PseudoContinuum,
        x: &PseudoPoint,
        y: &PseudoPoint,
        n: &BigInt,
    ) -> Result<bool, PseudoError> {
        let nx = x.scale(&num_rational::BigRational::from_integer(n.clone()));
        Ok(ring.compare(&nx, y)? == Ordering::Less)
    }
}

impl PseudoContinuum {
    /// A certificate that no multiple of `x` exceeds `y`, when one exists.
    pub fn non_archimedean_witness(
        &self,
        x: &PseudoPoint,
        y: &PseudoPoint,
    ) -> Result<Option<NonArchimedeanWitness>, PseudoError> {
        let zero = self.zero();
        if self.compare(x, &zero)? != Ordering::Greater
            || self.compare(y, &zero)? != Ordering::Greater
        {
            return Ok(None);
        }
        let (small, _) = x.leading().expect("positive point has support");
        let (large, _) = y.leading().expect("positive point has support");
        Ok((large < small).then(|| NonArchimedeanWitness {
            small_lead: small.clone(),
            large_lead: large.clone(),
        }))
    }

    /// Exceeds every embedded real: positive leading coefficient at an index
    /// below the zero index.
    pub fn is_infinitely_large(&self, x: &PseudoPoint) -> Result<bool, PseudoError> {
        self.check(x.dim())?;
        let (idx, c) = x.leading().ok_or(PseudoError::ZeroMagnitude)?;
        Ok(*idx < CoordIndex::zero(self.dim()) && c.is_positive())
    }

    /// Smaller in magnitude than every positive embedded real: leading index
    /// above the zero index.
    pub fn is_infinitesimal(&self, x: &PseudoPoint) -> Result<bool, PseudoError> {
        self.check(x.dim())?;
        let (idx, _) = x.leading().ok_or(PseudoError::ZeroMagnitude)?;
        Ok(*idx > CoordIndex::zero(self.dim()))
    }

    /// `Ω = e[-1,0,…,0]`, an infinitely large point.
    pub fn omega(&self) -> PseudoPoint {
        let mut coeffs = vec![BigInt::from(0); self.dim()];
        coeffs[0] = -BigInt::one();
        self.unit(&CoordIndex::new(coeffs))
            .expect("omega index has ring dimension")
    }
}
