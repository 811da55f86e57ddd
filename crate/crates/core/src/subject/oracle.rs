//! Staged decision oracles standing in for the Creating Subject.
//!
//! An oracle answers, for each stage `s`, whether the problem it tracks has
//! been decided by then. Answers are monotone: once decided, always decided,
//! with the same verdict.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use thiserror::Error;

/// What the subject has established once a problem is decided.
///
/// P-oracles use `ProvedP` / `ProvedNotP`; all-zero oracles, which track
/// `∀n α(n) = 0`, use `ProvedAllZero` / `FoundNonzero(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    ProvedP,
    ProvedNotP,
    ProvedAllZero,
    FoundNonzero(u64),
}

impl Verdict {
    /// `true` for the affirmative verdicts (`P`, or `∀n α(n) = 0`).
    pub fn is_affirmative(&self) -> bool {
        matches!(self, Verdict::ProvedP | Verdict::ProvedAllZero)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::ProvedP => f.write_str("provedP"),
            Verdict::ProvedNotP => f.write_str("provedNotP"),
            Verdict::ProvedAllZero => f.write_str("allzero"),
            Verdict::FoundNonzero(k) => write!(f, "nonzero@{k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Undecided,
    Decided(Verdict),
}

/// Deterministic test double: decided from `decide_at` onwards, never if
/// `decide_at` is `None`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SyntheticOracle {
    pub decide_at: Option<u32>,
    pub verdict: Verdict,
}

impl SyntheticOracle {
    pub fn deciding(stage: u32, verdict: Verdict) -> Self {
        SyntheticOracle {
            decide_at: Some(stage),
            verdict,
        }
    }

    pub fn undecided() -> Self {
        SyntheticOracle {
            decide_at: None,
            verdict: Verdict::ProvedAllZero,
        }
    }
}

#[derive(Debug)]
struct GoldbachMemo {
    is_prime: Vec<bool>,
    // every even 4..=verified_through is a sum of two primes
    verified_through: u64,
    counterexample: Option<u64>,
}

impl GoldbachMemo {
    fn grow_sieve(&mut self, limit: u64) {
        if (self.is_prime.len() as u64) > limit {
            return;
        }
        let size = ((limit + 1) as usize).max(2 * self.is_prime.len());
        let mut sieve = vec![true; size];
        sieve[0] = false;
        if size > 1 {
            sieve[1] = false;
        }
        let mut p = 2;
        while p * p < size {
            if sieve[p] {
                for q in (p * p..size).step_by(p) {
                    sieve[q] = false;
                }
            }
            p += 1;
        }
        self.is_prime = sieve;
    }

    fn is_goldbach(&self, even: u64) -> bool {
        (2..=even / 2).any(|p| self.is_prime[p as usize] && self.is_prime[(even - p) as usize])
    }

    fn ensure(&mut self, limit: u64) {
        if self.counterexample.is_some() || self.verified_through >= limit {
            return;
        }
        self.grow_sieve(limit);
        let mut e = self.verified_through + 2;
        while e <= limit {
            if !self.is_goldbach(e) {
                self.counterexample = Some(e);
                return;
            }
            self.verified_through = e;
            e += 2;
        }
    }
}

/// Searches for a counterexample to Goldbach's conjecture, checking every even
/// number up to `2s + 4` by stage `s`.
///
/// Clones share one append-only memo of the verified range.
#[derive(Clone, Debug)]
pub struct GoldbachOracle {
    memo: Arc<Mutex<GoldbachMemo>>,
}

impl GoldbachOracle {
    pub fn new() -> Self {
        GoldbachOracle {
            memo: Arc::new(Mutex::new(GoldbachMemo {
                is_prime: Vec::new(),
                verified_through: 2,
                counterexample: None,
            })),
        }
    }

    pub fn bound_at(stage: u32) -> u64 {
        2 * stage as u64 + 4
    }

    pub fn status(&self, stage: u32) -> Status {
        let limit = Self::bound_at(stage);
        let mut memo = self.memo.lock().expect("goldbach memo poisoned");
        memo.ensure(limit);
        match memo.counterexample {
            Some(e) if e <= limit => Status::Decided(Verdict::FoundNonzero((e - 4) / 2)),
            _ => Status::Undecided,
        }
    }
}

impl Default for GoldbachOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl PartialEq for GoldbachOracle {
    fn eq(&self, _other: &Self) -> bool {
        true
    }
}

impl Eq for GoldbachOracle {}

/// A staged, monotone, at-most-once-deciding process.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ProblemOracle {
    Synthetic(SyntheticOracle),
    Goldbach(GoldbachOracle),
}

impl ProblemOracle {
    pub fn synthetic(stage: u32, verdict: Verdict) -> Self {
        ProblemOracle::Synthetic(SyntheticOracle::deciding(stage, verdict))
    }

    pub fn undecided() -> Self {
        ProblemOracle::Synthetic(SyntheticOracle::undecided())
    }

    pub fn goldbach() -> Self {
        ProblemOracle::Goldbach(GoldbachOracle::new())
    }

    pub fn status(&self, stage: u32) -> Status {
        match self {
            ProblemOracle::Synthetic(o) => match o.decide_at {
                Some(d) if stage >= d => Status::Decided(o.verdict),
                _ => Status::Undecided,
            },
            ProblemOracle::Goldbach(g) => g.status(stage),
        }
    }

    /// The stage at which the oracle first decided, if that happened by
    /// `horizon`, together with the verdict.
    pub fn first_decision(&self, horizon: u32) -> Option<(u32, Verdict)> {
        match self {
            ProblemOracle::Synthetic(o) => match o.decide_at {
                Some(d) if d <= horizon => Some((d, o.verdict)),
                _ => None,
            },
            ProblemOracle::Goldbach(g) => match g.status(horizon) {
                // the counterexample 2k+4 is first in range at stage k
                Status::Decided(v @ Verdict::FoundNonzero(k)) => Some((k as u32, v)),
                _ => None,
            },
        }
    }

    /// Stable textual identity: two oracles with equal keys answer identically.
    pub fn key(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ProblemOracle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProblemOracle::Synthetic(SyntheticOracle { decide_at: None, .. }) => {
                f.write_str("undecided")
            }
            ProblemOracle::Synthetic(SyntheticOracle {
                decide_at: Some(s),
                verdict,
            }) => write!(f, "synthetic:decide={s}:verdict={verdict}"),
            ProblemOracle::Goldbach(_) => f.write_str("goldbach"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleSpecError {
    #[error("unknown oracle kind `{0}` (expected synthetic, goldbach or undecided)")]
    UnknownKind(String),
    #[error("malformed synthetic oracle `{0}` (expected synthetic:decide=<s>:verdict=<v>)")]
    MalformedSynthetic(String),
    #[error("bad decision stage `{0}`")]
    BadStage(String),
    #[error("unknown verdict `{0}` (expected provedP, provedNotP, allzero or nonzero@k)")]
    BadVerdict(String),
}

impl FromStr for Verdict {
    type Err = OracleSpecError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "provedP" => Ok(Verdict::ProvedP),
            "provedNotP" => Ok(Verdict::ProvedNotP),
            "allzero" => Ok(Verdict::ProvedAllZero),
            _ => s
                .strip_prefix("nonzero@")
                .and_then(|k| k.parse().ok())
                .map(Verdict::FoundNonzero)
                .ok_or_else(|| OracleSpecError::BadVerdict(s.to_string())),
        }
    }
}

impl FromStr for ProblemOracle {
    type Err = OracleSpecError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        match spec {
            "goldbach" => return Ok(ProblemOracle::goldbach()),
            "undecided" => return Ok(ProblemOracle::undecided()),
            _ => {}
        }
        let mut parts = spec.split(':');
        if parts.next() != Some("synthetic") {
            return Err(OracleSpecError::UnknownKind(spec.to_string()));
        }
        let malformed = || OracleSpecError::MalformedSynthetic(spec.to_string());
        let stage = parts
            .next()
            .and_then(|p| p.strip_prefix("decide="))
            .ok_or_else(malformed)?;
        let verdict = parts
            .next()
            .and_then(|p| p.strip_prefix("verdict="))
            .ok_or_else(malformed)?;
        if parts.next().is_some() {
            return Err(malformed());
        }
        let stage: u32 = stage
            .parse()
            .map_err(|_| OracleSpecError::BadStage(stage.to_string()))?;
        Ok(ProblemOracle::synthetic(stage, verdict.parse()?))
    }
}
