//! Choice sequences whose values track an oracle's knowledge.

use std::sync::Arc;

use num_traits::Zero;

use super::oracle::{ProblemOracle, Status};
use crate::creals::{Facts, RealGen, RegularSequence};
use crate::rational::{pow2_neg, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Rule {
    // 2^(-s) from the first decision stage s on, whatever the verdict
    Brouwer,
    // +2^(-s) on an affirmative verdict, -2^(-s) otherwise
    Vesley,
}

struct StagedReal {
    oracle: ProblemOracle,
    rule: Rule,
}

impl RegularSequence for StagedReal {
    fn approx(&self, v: u32) -> Rational {
        match self.oracle.first_decision(v) {
            None => Rational::zero(),
            Some((s, verdict)) => {
                let magnitude = pow2_neg(s as i64);
                match self.rule {
                    Rule::Vesley if !verdict.is_affirmative() => -magnitude,
                    _ => magnitude,
                }
            }
        }
    }

    fn identity_key(&self) -> Option<String> {
        let tag = match self.rule {
            Rule::Brouwer => "alpha",
            Rule::Vesley => "vesley",
        };
        Some(format!("{tag}:{}", self.oracle.key()))
    }
}

/// The real `α`: `α(v) = 0` while the oracle is undecided at stage `v`, and
/// `2^(-s)` from the first decision stage `s` onwards. Carries the fact
/// `α(v) >= 0`.
pub fn brouwer_alpha(oracle: &ProblemOracle) -> RealGen {
    let seq = StagedReal {
        oracle: oracle.clone(),
        rule: Rule::Brouwer,
    };
    RealGen::from_sequence(Arc::new(seq), Facts::nonnegative())
}

/// The real `x` tracking `∀n α(n) = 0`: zero while undecided, then
/// `+2^(-s)` after an affirmative verdict or `-2^(-s)` after a refuting one.
/// No sign fact is attached.
pub fn vesley_x(oracle: &ProblemOracle) -> RealGen {
    let seq = StagedReal {
        oracle: oracle.clone(),
        rule: Rule::Vesley,
    };
    RealGen::from_sequence(Arc::new(seq), Facts::none())
}

/// A 0/1 sequence with a 1 at `n` exactly when the oracle has decided by
/// stage `n`, so `∃n entries(n) = 1` mirrors the tracked decision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinarySeq {
    oracle: ProblemOracle,
}

impl BinarySeq {
    pub fn entry(&self, n: u32) -> u8 {
        match self.oracle.status(n) {
            Status::Undecided => 0,
            Status::Decided(_) => 1,
        }
    }

    pub fn entries(&self, len: u32) -> Vec<u8> {
        (0..len).map(|n| self.entry(n)).collect()
    }
}

pub fn kripke_witness(oracle: &ProblemOracle) -> BinarySeq {
    BinarySeq {
        oracle: oracle.clone(),
    }
}
