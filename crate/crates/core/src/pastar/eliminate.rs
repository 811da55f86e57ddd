//! Removing `ω` from a finished proof.
//!
//! A checked proof uses finitely many instances `ω > n_1, …, ω > n_k`. With
//! `m = max(n_i) + 1` (or `1` when there are none), substituting the numeral
//! `m` for `ω` everywhere keeps every axiom instance an axiom instance and every
//! rule application valid, while each former `ω > n_i` becomes the true numeral
//! comparison `m > n_i`.

use std::collections::BTreeSet;
use std::fmt;

use super::check::{check, CheckError, CheckErrorKind};
use super::proof::{Justification, Proof};
use super::syntax::Term;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaReport {
    pub instances: BTreeSet<u64>,
    pub m: u64,
}

impl fmt::Display for OmegaReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.instances.iter().map(u64::to_string).collect();
        write!(f, "instances={{{}}} m={}", list.join(","), self.m)
    }
}

/// The exact set of `n` used by `OMEGA n` lines of a valid proof.
pub fn collect_omega_instances(proof: &Proof) -> Result<BTreeSet<u64>, CheckError> {
    check(proof)?;
    Ok(proof
        .lines
        .iter()
        .filter_map(|l| match l.justification {
            Justification::OmegaGt(n) => Some(n),
            _ => None,
        })
        .collect())
}

pub fn omega_report(proof: &Proof) -> Result<OmegaReport, CheckError> {
    let instances = collect_omega_instances(proof)?;
    let m = match instances.last() {
        None => 1,
        Some(&max) => max.checked_add(1).ok_or(CheckError {
            line: 0,
            kind: CheckErrorKind::NumeralOverflow(max),
        })?,
    };
    Ok(OmegaReport { instances, m })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Elimination {
    pub proof: Proof,
    pub report: OmegaReport,
}

/// Rewrites a valid proof of `A(ω)` into an `ω`-free proof of `A(m)`.
pub fn eliminate_omega(proof: &Proof) -> Result<Elimination, CheckError> {
    let report = omega_report(proof)?;
    let rewritten = proof.map_omega(&Term::Num(report.m));
    Ok(Elimination {
        proof: rewritten,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pastar::check::omega_instance;
    use crate::pastar::proof::Binding;
    use crate::pastar::syntax::Formula;

    #[test]
    fn lone_instance_at_zero() {
        let mut p = Proof::new();
        p.push(omega_instance(0), Justification::OmegaGt(0));
        let out = eliminate_omega(&p).unwrap();
        assert_eq!(out.report.m, 1);
        assert_eq!(out.proof.lines[0].justification, Justification::NumeralFact);
        assert_eq!(
            out.proof.conclusion().unwrap(),
            &Formula::Lt(Term::Num(0), Term::Num(1))
        );
        assert_eq!(check(&out.proof), Ok(()));
    }

    #[test]
    fn duplicate_instances_collapse() {
        let mut p = Proof::new();
        p.push(omega_instance(5), Justification::OmegaGt(5));
        p.push(omega_instance(5), Justification::OmegaGt(5));
        assert_eq!(collect_omega_instances(&p).unwrap(), BTreeSet::from([5]));
    }

    #[test]
    fn omega_free_proof_is_untouched() {
        let mut p = Proof::new();
        p.push(
            Formula::Eq(Term::Zero, Term::Zero),
            Justification::logic("REFL", vec![("t", Binding::Term(Term::Zero))]),
        );
        let out = eliminate_omega(&p).unwrap();
        assert_eq!(out.report.m, 1);
        assert!(out.report.instances.is_empty());
        assert_eq!(out.proof, p);
    }

    #[test]
    fn bindings_are_rewritten_too() {
        let mut p = Proof::new();
        let a = omega_instance(2);
        p.push(a.clone(), Justification::OmegaGt(2));
        p.push(
            Formula::imp(a.clone(), a.clone()),
            Justification::logic("ID", vec![("A", Binding::Formula(a.clone()))]),
        );
        p.push(a, Justification::Mp(1, 2));
        assert!(p.mentions_omega());
        let out = eliminate_omega(&p).unwrap();
        assert!(!out.proof.mentions_omega());
        assert_eq!(check(&out.proof), Ok(()));
        assert_eq!(out.report.to_string(), "instances={2} m=3");
    }

    #[test]
    fn invalid_input_is_refused() {
        let mut p = Proof::new();
        p.push(omega_instance(1), Justification::OmegaGt(2));
        assert!(eliminate_omega(&p).is_err());
        assert!(collect_omega_instances(&p).is_err());
    }
}
