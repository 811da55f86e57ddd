mod common;

use std::collections::BTreeSet;

use brouwer::pastar::{
    check, collect_omega_instances, eliminate_omega, parse_formula, parse_proof, CheckErrorKind,
    Formula, Justification, Term,
};
use brouwer::pastar::check::numeral_fact_value;
use common::read_fixture;
use proptest::prelude::*;

const VALID: &[&str] = &[
    "omega_5_9.proof",
    "exists_above_five.proof",
    "omega_zero.proof",
    "omega_free.proof",
];

type IsClass = fn(&CheckErrorKind) -> bool;

fn load(name: &str) -> brouwer::pastar::Proof {
    parse_proof(&read_fixture(name)).unwrap()
}

#[test]
fn valid_fixtures_check_and_eliminate() {
    for name in VALID {
        let p = load(name);
        assert_eq!(check(&p), Ok(()), "{name}");
        let out = eliminate_omega(&p).unwrap();
        assert_eq!(check(&out.proof), Ok(()), "{name}");
        assert!(!out.proof.mentions_omega(), "{name}");
        let expected = p.conclusion().unwrap().replace_omega(&Term::Num(out.report.m));
        assert_eq!(out.proof.conclusion().unwrap(), &expected, "{name}");
        // every former schema line became a true numeral fact
        for (old, new) in p.lines.iter().zip(&out.proof.lines) {
            if let Justification::OmegaGt(n) = old.justification {
                assert_eq!(new.justification, Justification::NumeralFact);
                assert!(n < out.report.m);
                assert_eq!(numeral_fact_value(&new.formula), Some(true));
            }
        }
    }
}

#[test]
fn five_and_nine() {
    let p = load("omega_5_9.proof");
    assert_eq!(collect_omega_instances(&p).unwrap(), BTreeSet::from([5, 9]));
    let out = eliminate_omega(&p).unwrap();
    assert_eq!(out.report.m, 10);
    assert_eq!(out.report.to_string(), "instances={5,9} m=10");
}

#[test]
fn omega_free_conclusions_survive_unchanged() {
    for name in ["exists_above_five.proof", "omega_free.proof"] {
        let p = load(name);
        assert!(!p.conclusion().unwrap().has_omega());
        let out = eliminate_omega(&p).unwrap();
        assert_eq!(out.proof.conclusion(), p.conclusion(), "{name}");
    }
    let p = load("omega_free.proof");
    assert_eq!(eliminate_omega(&p).unwrap().proof, p);
}

#[test]
fn lone_zero_instance() {
    let out = eliminate_omega(&load("omega_zero.proof")).unwrap();
    assert_eq!(out.report.m, 1);
    assert_eq!(
        out.proof.to_string(),
        "1 | (< (num 0) (num 1)) | NUMFACT\n"
    );
}

#[test]
fn negative_fixtures_fail_with_their_class() {
    let cases: [(&str, IsClass); 4] = [
        ("bad_forward_reference.proof", |k| matches!(k, CheckErrorKind::ForwardReference(3))),
        ("bad_arity.proof", |k| matches!(k, CheckErrorKind::ArityMismatch(_))),
        ("bad_omega_instance.proof", |k| matches!(k, CheckErrorKind::OmegaMismatch(5))),
        ("bad_numeral_fact.proof", |k| matches!(k, CheckErrorKind::FalseNumeralFact)),
    ];
    for (name, is_expected) in cases {
        let e = check(&load(name)).unwrap_err();
        assert!(is_expected(&e.kind), "{name}: {e}");
        assert!(eliminate_omega(&load(name)).is_err());
    }
}

#[test]
fn broken_syntax_is_a_parse_error() {
    let e = parse_proof(&read_fixture("broken_syntax.proof")).unwrap_err();
    assert_eq!(e.line, 1);
}

#[test]
fn fixtures_print_back_to_themselves() {
    for name in VALID {
        let p = load(name);
        assert_eq!(parse_proof(&p.to_string()).unwrap(), p, "{name}");
    }
}

fn term() -> impl Strategy<Value = Term> {
    let leaf = prop_oneof![
        Just(Term::Zero),
        Just(Term::Omega),
        (0u64..20).prop_map(Term::Num),
        prop::sample::select(vec!["x", "y", "z1"]).prop_map(Term::var),
    ];
    leaf.prop_recursive(3, 16, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Term::succ),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Term::plus(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Term::times(a, b)),
        ]
    })
}

fn formula() -> impl Strategy<Value = Formula> {
    let atom = prop_oneof![
        (term(), term()).prop_map(|(a, b)| Formula::Eq(a, b)),
        (term(), term()).prop_map(|(a, b)| Formula::Lt(a, b)),
    ];
    atom.prop_recursive(3, 12, 2, |inner| {
        prop_oneof![
            inner.clone().prop_map(Formula::not),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::imp(a, b)),
            (prop::sample::select(vec!["x", "y"]), inner).prop_map(|(x, f)| Formula::forall(x, f)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn formulas_round_trip(f in formula()) {
        prop_assert_eq!(parse_formula(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn substituting_omega_removes_it(f in formula(), m in 0u64..100) {
        let g = f.replace_omega(&Term::Num(m));
        prop_assert!(!g.has_omega());
        prop_assert_eq!(g.free_vars(), f.free_vars());
    }
}
