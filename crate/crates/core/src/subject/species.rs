//! Stage-relative membership in the species of α-infinitesimals and the
//! Archimedean probe.
//!
//! Membership `x ∈ M(α)` asks for some `y ∈ L(α)` with `¬(|x| ∘> |y|)`. That is
//! not decidable for arbitrary reals, so the checks here work against a fixed,
//! finite witness family built from the canonical `y = vesley_x(oracle)`:
//! `y`, `2·y` and `4·y`. Each multiple is apart from zero exactly when `y` is,
//! so all of them sit in `L(α)`.

use std::fmt;

use super::choice::vesley_x;
use super::oracle::ProblemOracle;
use crate::creals::{
    abs, const_rational, measurably_greater, mul, neg, not_measurably_smaller, scale_nat, sub,
    MeasurablyCert, RealGen, Refutation, TriVerdict,
};
use crate::rational::{int, ratio};

/// Why `x` was accepted into `M(α)`: for the witness `scale·y`, either a
/// structural proof of `¬(|x| ∘> |scale·y|)` or a certificate of
/// `|scale·y| ∘> |x|`, which excludes the former.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Structural { scale: u64, refutation: Refutation },
    Dominated { scale: u64, cert: MeasurablyCert },
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Membership::Structural { scale, .. } => write!(f, "witness={scale}*y structural"),
            Membership::Dominated { scale, cert } => write!(f, "witness={scale}*y {cert}"),
        }
    }
}

/// `|x| ∘> |K·y|` certified for every witness, with the oracle already
/// decided at `decided_at`, so the witness family is settled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exclusion {
    pub decided_at: u32,
    pub certs: Vec<(u64, MeasurablyCert)>,
}

pub type MembershipVerdict = TriVerdict<Membership, Exclusion>;

// Scales of the canonical witness. Members built from `q·y` with `|q| <= 1`
// by one ring operation stay below `4·|y|`; keeping the family independent of
// fuel means more fuel can settle an open verdict but never flip a settled one.
const WITNESS_SCALES: [u64; 3] = [1, 2, 4];

fn witness_family(oracle: &ProblemOracle) -> Vec<(u64, RealGen)> {
    let y = vesley_x(oracle);
    WITNESS_SCALES
        .iter()
        .map(|&k| (k, if k == 1 { y.clone() } else { scale_nat(k, &y) }))
        .collect()
}

pub fn m_alpha_contains(x: &RealGen, oracle: &ProblemOracle, fuel: u32) -> MembershipVerdict {
    let ax = abs(x);
    let family: Vec<(u64, RealGen)> = witness_family(oracle)
        .into_iter()
        .map(|(k, w)| (k, abs(&w)))
        .collect();
    for (scale, aw) in &family {
        if let Some(refutation) = not_measurably_smaller(aw, &ax) {
            return TriVerdict::Proved(Membership::Structural {
                scale: *scale,
                refutation,
            });
        }
    }
    if fuel == 0 {
        return TriVerdict::Unknown(0);
    }
    for (scale, aw) in &family {
        if let TriVerdict::Proved(cert) = measurably_greater(aw, &ax, fuel) {
            return TriVerdict::Proved(Membership::Dominated {
                scale: *scale,
                cert,
            });
        }
    }
    // While undecided the canonical witness may still move, so nothing is
    // excluded.
    if let Some((decided_at, _)) = oracle.first_decision(fuel) {
        let certs: Option<Vec<_>> = family
            .iter()
            .map(|(scale, aw)| measurably_greater(&ax, aw, fuel).proof().map(|c| (*scale, *c)))
            .collect();
        if let Some(certs) = certs {
            return TriVerdict::Disproved(Exclusion { decided_at, certs });
        }
    }
    TriVerdict::Unknown(fuel)
}

/// Least `n` in `1..=fuel` with `n·x ∘> 1` certified at the same fuel.
pub fn archimedean_probe(x: &RealGen, fuel: u32) -> Option<(u64, MeasurablyCert)> {
    let one = const_rational(int(1));
    (1..=fuel as u64).find_map(|n| {
        measurably_greater(&scale_nat(n, x), &one, fuel)
            .proof()
            .map(|c| (n, *c))
    })
}

#[derive(Clone, Debug)]
pub struct SubringEntry {
    pub label: String,
    pub member: RealGen,
    pub verdict: MembershipVerdict,
}

#[derive(Clone, Debug, Default)]
pub struct SubringReport {
    pub entries: Vec<SubringEntry>,
}

impl SubringReport {
    pub fn disproved(&self) -> usize {
        self.entries.iter().filter(|e| e.verdict.is_disproved()).count()
    }

    pub fn proved(&self) -> usize {
        self.entries.iter().filter(|e| e.verdict.is_proved()).count()
    }
}

impl fmt::Display for SubringReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{} {}", e.label, e.verdict)?;
        }
        Ok(())
    }
}

fn base_members(oracle: &ProblemOracle, count: usize) -> Vec<(String, RealGen)> {
    let y = vesley_x(oracle);
    let mut members = vec![
        ("y".to_string(), y.clone()),
        ("-y".to_string(), neg(&y)),
        ("0".to_string(), const_rational(int(0))),
    ];
    let mut d = 2;
    while members.len() < count {
        for q in [ratio(1, d), ratio(-1, d)] {
            let label = format!("{q}*y");
            members.push((label, mul(&const_rational(q), &y)));
        }
        d += 1;
    }
    members.truncate(count);
    members
}

/// Closes a small family of `M(α)` members under `+`, `-` and `·` pairwise
/// and re-checks membership of everything. No entry should ever come back
/// disproved.
pub fn subring_probe(oracle: &ProblemOracle, sample_count: usize, fuel: u32) -> SubringReport {
    let base = base_members(oracle, sample_count);
    let mut elements: Vec<(String, RealGen)> = base.clone();
    for (i, (la, a)) in base.iter().enumerate() {
        for (lb, b) in base.iter().skip(i) {
            elements.push((format!("({la})+({lb})"), a + b));
            elements.push((format!("({la})-({lb})"), sub(a, b)));
            elements.push((format!("({la})*({lb})"), mul(a, b)));
        }
    }
    let entries = elements
        .into_iter()
        .map(|(label, x)| SubringEntry {
            verdict: m_alpha_contains(&x, oracle, fuel),
            label,
            member: x,
        })
        .collect();
    SubringReport { entries }
}
