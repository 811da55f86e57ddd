use std::collections::HashMap;

use thiserror::Error;

use super::proof::{Justification, Proof};
use super::schemes::{self, SchemeError};
use super::syntax::{Formula, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckErrorKind {
    #[error("empty proof")]
    EmptyProof,
    #[error("line numbers must strictly increase (previous was {0})")]
    BadNumbering(usize),
    #[error("forward reference to line {0}")]
    ForwardReference(usize),
    #[error("reference to missing line {0}")]
    MissingLine(usize),
    #[error("unknown scheme {0}")]
    UnknownScheme(String),
    #[error("arity-mismatched substitution: {0}")]
    ArityMismatch(String),
    #[error("side condition violated: {0}")]
    SideCondition(String),
    #[error("formula is not the scheme instance {0}")]
    NotAnInstance(Formula),
    #[error("schema instance mismatch: OMEGA {0} must carry (< (num {0}) w)")]
    OmegaMismatch(u64),
    #[error("numeral fact must compare two closed omega-free terms")]
    NotANumeralFact,
    #[error("numeral fact is false")]
    FalseNumeralFact,
    #[error("modus ponens mismatch: line {1} is not (imp <line {0}> <this line>)")]
    MpMismatch(usize, usize),
    #[error("generalization mismatch: expected (forall {1} <line {0}>)")]
    GenMismatch(usize, String),
    #[error("numeral {0} is too large")]
    NumeralOverflow(u64),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct CheckError {
    pub line: usize,
    pub kind: CheckErrorKind,
}

fn err(line: usize, kind: CheckErrorKind) -> CheckError {
    CheckError { line, kind }
}

/// Evaluates a closed, `ω`-free `=` or `<` comparison.
pub fn numeral_fact_value(f: &Formula) -> Option<bool> {
    match f {
        Formula::Eq(a, b) => Some(a.eval()? == b.eval()?),
        Formula::Lt(a, b) => Some(a.eval()? < b.eval()?),
        _ => None,
    }
}

/// `(< (num n) w)`.
pub fn omega_instance(n: u64) -> Formula {
    Formula::Lt(Term::Num(n), Term::Omega)
}

/// Validates every line; reports the first failure.
pub fn check(proof: &Proof) -> Result<(), CheckError> {
    if proof.lines.is_empty() {
        return Err(err(0, CheckErrorKind::EmptyProof));
    }
    let mut seen: HashMap<usize, &Formula> = HashMap::new();
    let mut previous: Option<usize> = None;
    for line in &proof.lines {
        let here = line.index;
        if previous.is_some_and(|p| p >= here) {
            return Err(err(here, CheckErrorKind::BadNumbering(previous.unwrap_or(0))));
        }
        previous = Some(here);
        let cite = |i: usize| -> Result<&Formula, CheckError> {
            if i >= here {
                return Err(err(here, CheckErrorKind::ForwardReference(i)));
            }
            seen.get(&i)
                .copied()
                .ok_or_else(|| err(here, CheckErrorKind::MissingLine(i)))
        };
        match &line.justification {
            Justification::Axiom {
                family,
                scheme,
                bindings,
            } => {
                let s = schemes::lookup(*family, scheme)
                    .ok_or_else(|| err(here, CheckErrorKind::UnknownScheme(scheme.clone())))?;
                let inst = s.instantiate(bindings).map_err(|e| {
                    err(
                        here,
                        match e {
                            SchemeError::Arity(m) => CheckErrorKind::ArityMismatch(m),
                            SchemeError::SideCondition(m) => CheckErrorKind::SideCondition(m),
                        },
                    )
                })?;
                if !inst.same_as(&line.formula) {
                    return Err(err(here, CheckErrorKind::NotAnInstance(inst)));
                }
            }
            Justification::OmegaGt(n) => {
                if !line.formula.same_as(&omega_instance(*n)) {
                    return Err(err(here, CheckErrorKind::OmegaMismatch(*n)));
                }
            }
            Justification::NumeralFact => match numeral_fact_value(&line.formula) {
                None => return Err(err(here, CheckErrorKind::NotANumeralFact)),
                Some(false) => return Err(err(here, CheckErrorKind::FalseNumeralFact)),
                Some(true) => {}
            },
            Justification::Mp(i, j) => {
                let minor = cite(*i)?;
                let major = cite(*j)?;
                let expected = Formula::imp(minor.clone(), line.formula.clone());
                if !major.same_as(&expected) {
                    return Err(err(here, CheckErrorKind::MpMismatch(*i, *j)));
                }
            }
            Justification::Gen(i, x) => {
                let premise = cite(*i)?;
                if !line.formula.same_as(&Formula::forall(x, premise.clone())) {
                    return Err(err(here, CheckErrorKind::GenMismatch(*i, x.clone())));
                }
            }
        }
        seen.insert(here, &line.formula);
    }
    Ok(())
}
