#![allow(dead_code)]

use std::path::PathBuf;

use brouwer::creals::{self, Facts, MeasurablyCert, RealGen};
use brouwer::rational::{ratio, Rational};
use brouwer::subject::{brouwer_alpha, vesley_x, ProblemOracle, Verdict};
use num_bigint::BigInt;
use rand::Rng;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests")
        .join("fixtures")
        .join(name)
}

pub fn read_fixture(name: &str) -> String {
    std::fs::read_to_string(fixture(name)).unwrap()
}

fn two_pow_neg(k: i64) -> Rational {
    let base = Rational::from_integer(BigInt::from(2));
    if k >= 0 {
        base.pow(-(k as i32))
    } else {
        base.pow((-k) as i32)
    }
}

/// Re-verifies `lesser <∘ greater` from scratch: the gap exceeds `2^-n` at
/// every index of `[m, m+64]`, and at `m` it exceeds `2^-n + 2^(2-m)`, which
/// regularity of both sides turns into the bound for every `v >= m`.
pub fn audit_cert(lesser: &RealGen, greater: &RealGen, cert: &MeasurablyCert) -> bool {
    let eps = two_pow_neg(cert.n as i64);
    let window = (cert.m..=cert.m + 64).all(|v| greater.approx(v) - lesser.approx(v) > eps);
    let slack = two_pow_neg(cert.m as i64 - 2);
    let margin = greater.approx(cert.m) - lesser.approx(cert.m) > &eps + slack;
    window && margin
}

/// Dyadic truncation of `q`: within `2^-(v+1)` of `q` at index `v`.
pub fn truncation(q: Rational) -> RealGen {
    creals::RealGen::from_fn(
        move |v| {
            let scale = Rational::from_integer(BigInt::from(2)).pow(v as i32 + 1);
            (&q * &scale).floor() / scale
        },
        Facts::none(),
    )
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    ratio(rng.gen_range(-40..=40), rng.gen_range(1..=12))
}

pub fn random_oracle<R: Rng>(rng: &mut R) -> ProblemOracle {
    let verdict = match rng.gen_range(0..4) {
        0 => Verdict::ProvedP,
        1 => Verdict::ProvedNotP,
        2 => Verdict::ProvedAllZero,
        _ => Verdict::FoundNonzero(rng.gen_range(0..20)),
    };
    if rng.gen_bool(0.2) {
        ProblemOracle::undecided()
    } else {
        ProblemOracle::synthetic(rng.gen_range(0..16), verdict)
    }
}

/// A random composition of the generator operations, at most `depth` deep.
pub fn random_gen<R: Rng>(rng: &mut R, depth: u32) -> RealGen {
    if depth == 0 || rng.gen_bool(0.25) {
        return match rng.gen_range(0..4) {
            0 => creals::const_rational(random_rational(rng)),
            1 => truncation(random_rational(rng)),
            2 => brouwer_alpha(&random_oracle(rng)),
            _ => vesley_x(&random_oracle(rng)),
        };
    }
    match rng.gen_range(0..6) {
        0 => creals::add(&random_gen(rng, depth - 1), &random_gen(rng, depth - 1)),
        1 => creals::sub(&random_gen(rng, depth - 1), &random_gen(rng, depth - 1)),
        2 => creals::neg(&random_gen(rng, depth - 1)),
        3 => creals::abs(&random_gen(rng, depth - 1)),
        4 => creals::scale_nat(rng.gen_range(0..9), &random_gen(rng, depth - 1)),
        _ => creals::mul(&random_gen(rng, depth - 1), &random_gen(rng, depth - 1)),
    }
}

/// Checks that the declared facts hold on the first `horizon` approximants.
pub fn facts_hold(x: &RealGen, horizon: u32) -> bool {
    (0..=horizon).all(|v| {
        let a = x.approx(v);
        x.facts().lower.as_ref().is_none_or(|l| &a >= l)
            && x.facts().upper.as_ref().is_none_or(|u| &a <= u)
    })
}
