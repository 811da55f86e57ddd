//! Exact rational scale shared by every other module.
//!
//! [`Rational`] is an arbitrary-precision fraction kept in lowest terms with a
//! positive denominator. Its `Display` form is `a/b`, or just `a` when the
//! denominator is one.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// Builds `num / den`. Panics when `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `2^(-k)` for any integer `k`; negative `k` gives `2^|k|`.
pub fn pow2_neg(k: i64) -> Rational {
    let big = BigInt::one() << k.unsigned_abs();
    if k >= 0 {
        Rational::new(BigInt::one(), big)
    } else {
        Rational::from_integer(big)
    }
}

/// Smallest `k >= 0` with `2^k >= q`. Non-positive `q` gives 0.
pub fn ceil_log2(q: &Rational) -> u32 {
    let mut k = 0u32;
    let mut p = Rational::one();
    while &p < q {
        p *= int(2);
        k += 1;
    }
    k
}

/// Smallest `n >= 0` with `2^(-n) < q`, or `None` when `q <= 0`.
pub fn least_exponent_below(q: &Rational) -> Option<u32> {
    if !q.is_positive() {
        return None;
    }
    let mut n = 0u32;
    let mut p = Rational::one();
    while &p >= q {
        p /= int(2);
        n += 1;
    }
    Some(n)
}

/// Parses `a`, `-a`, `+a`, `a/b`, `-a/b`. Rejects zero denominators and
/// anything with embedded whitespace.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !digits(den) {
        return None;
    }
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    let q = Rational::new(num, den);
    Some(if neg { -q } else { q })
}
