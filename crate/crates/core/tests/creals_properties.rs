mod common;

use brouwer::creals::{
    self, apart, is_regular_through, measurably_greater, measurably_smaller,
    not_measurably_smaller, Facts, RealGen, TriVerdict,
};
use brouwer::rational::{int, pow2_neg, ratio};
use common::{audit_cert, facts_hold, random_gen, truncation};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn thousand_random_compositions_are_regular() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..1000 {
        let x = random_gen(&mut rng, 4);
        assert!(is_regular_through(&x, 12), "generator {i} breaks regularity");
    }
}

#[test]
fn declared_facts_are_true_of_random_compositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..300 {
        let x = random_gen(&mut rng, 3);
        assert!(facts_hold(&x, 12), "generator {i} violates its facts");
    }
}

#[test]
fn random_verdicts_are_sound() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut proved = 0;
    for _ in 0..300 {
        let a = random_gen(&mut rng, 3);
        let b = random_gen(&mut rng, 3);
        match measurably_smaller(&a, &b, 24) {
            TriVerdict::Proved(cert) => {
                proved += 1;
                assert!(audit_cert(&a, &b, &cert), "{cert}");
                assert!(cert.m <= 24 && cert.n <= 24);
            }
            TriVerdict::Disproved(r) => {
                assert!(r.refutes_smaller(&a, &b));
                // a refutation forbids any certificate, at any fuel
                assert!(!measurably_smaller(&a, &b, 60).is_proved());
            }
            TriVerdict::Unknown(f) => assert_eq!(f, 24),
        }
        if let TriVerdict::Proved(c) = apart(&a, &b, 24) {
            assert_eq!(c.k, c.inner.n);
            let ok = match c.side {
                creals::Side::LeftSmaller => audit_cert(&a, &b, &c.inner),
                creals::Side::RightSmaller => audit_cert(&b, &a, &c.inner),
            };
            assert!(ok);
        }
    }
    assert!(proved > 20, "too few certificates to mean anything: {proved}");
}

#[test]
fn search_order_picks_least_m_then_least_n() {
    let zero = creals::const_rational(int(0));
    let one = creals::const_rational(int(1));
    let cert = *measurably_smaller(&zero, &one, 8).proof().unwrap();
    assert_eq!((cert.m, cert.n), (3, 2));
    // no smaller m admits any n
    for m in 0..cert.m {
        assert!(int(1) <= pow2_neg(m as i64 - 2));
    }
}

#[test]
fn fuel_zero_is_unknown_unless_structural() {
    let zero = creals::const_rational(int(0));
    let one = creals::const_rational(int(1));
    assert_eq!(measurably_smaller(&zero, &one, 0), TriVerdict::Unknown(0));
    assert!(measurably_smaller(&one, &zero, 0).is_disproved());
    assert!(apart(&one, &one, 0).is_disproved());
}

#[test]
fn truncations_order_like_their_limits() {
    let a = truncation(ratio(1, 3));
    let b = truncation(ratio(1, 2));
    let cert = *measurably_smaller(&a, &b, 16).proof().unwrap();
    assert!(audit_cert(&a, &b, &cert));
    assert!(measurably_greater(&b, &a, 16).is_proved());
    // truncations carry no facts, so the reverse can only be unknown
    assert_eq!(measurably_smaller(&b, &a, 16), TriVerdict::Unknown(16));
}

#[test]
fn declared_bounds_refute() {
    let nonneg = RealGen::from_fn(|v| pow2_neg(v as i64 + 1), Facts::nonnegative());
    let zero = creals::const_rational(int(0));
    let r = not_measurably_smaller(&nonneg, &zero).unwrap();
    assert!(r.refutes_smaller(&nonneg, &zero));
    assert!(not_measurably_smaller(&zero, &nonneg).is_none());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn constant_pairs(a in -50i64..50, b in -50i64..50, d in 1i64..8) {
        let x = creals::const_rational(ratio(a, d));
        let y = creals::const_rational(ratio(b, d));
        let v = measurably_smaller(&x, &y, 40);
        if a < b {
            let cert = *v.proof().unwrap();
            prop_assert!(audit_cert(&x, &y, &cert));
        } else {
            prop_assert!(v.is_disproved());
        }
        prop_assert_eq!(apart(&x, &y, 40).is_proved(), a != b);
        prop_assert_eq!(apart(&x, &y, 40).is_disproved(), a == b);
    }

    #[test]
    fn arithmetic_matches_rationals(a in -30i64..30, b in -30i64..30, n in 0u64..20) {
        let (qa, qb) = (ratio(a, 3), ratio(b, 5));
        let x = creals::const_rational(qa.clone());
        let y = creals::const_rational(qb.clone());
        prop_assert_eq!(creals::add(&x, &y).approx(4), &qa + &qb);
        prop_assert_eq!(creals::sub(&x, &y).approx(4), &qa - &qb);
        prop_assert_eq!(creals::mul(&x, &y).approx(4), &qa * &qb);
        prop_assert_eq!(creals::scale_nat(n, &x).approx(4), &qa * int(n as i64));
        prop_assert!(is_regular_through(&creals::mul(&truncation(qa), &truncation(qb)), 10));
    }
}
