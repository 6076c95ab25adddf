//! Arbitrary-precision rational numbers.
//!
//! `Rat` is `num_rational::BigRational`: always stored in lowest terms with a
//! positive denominator, and all arithmetic is exact. This module adds the
//! small constructors and conversions the rest of the crate leans on.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational scalar used throughout the crate.
pub type Rat = BigRational;

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `p/q` as a rational. Panics if `q == 0`.
pub fn rat(p: i64, q: i64) -> Rat {
    assert!(q != 0, "zero denominator");
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Parse `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(Rat::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(p))
        }
    }
}

/// Canonical `"p/q"` (or `"p"` when the denominator is 1) form.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Exact square root, when `r` is the square of a rational. `r` must be >= 0.
pub fn rat_sqrt_exact(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

/// Round-trip safe f64 conversion; panics only on overflow far outside the
/// magnitudes this crate produces.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// Continued-fraction reconstruction of a rational from a float.
///
/// Returns the first convergent `p/q` with `q <= max_den` and
/// `|x - p/q| <= tol`, or `None` when no such convergent exists.
pub fn rationalize(x: f64, max_den: u64, tol: f64) -> Option<Rat> {
    if !x.is_finite() {
        return None;
    }
    // Convergents of the continued fraction of x.
    let (mut p0, mut q0, mut p1, mut q1) = (BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one());
    let mut t = x;
    for _ in 0..64 {
        let a = t.floor();
        if a.abs() > 1e18 {
            break;
        }
        let ai = BigInt::from(a as i128);
        let p2 = &ai * &p0 + &p1;
        let q2 = &ai * &q0 + &q1;
        if q2 > BigInt::from(max_den) {
            break;
        }
        p1 = std::mem::replace(&mut p0, p2);
        q1 = std::mem::replace(&mut q0, q2);
        let cand = Rat::new(p0.clone(), q0.clone());
        if (rat_to_f64(&cand) - x).abs() <= tol {
            return Some(cand);
        }
        let frac = t - a;
        if frac.abs() < 1e-15 {
            break;
        }
        t = 1.0 / frac;
    }
    let cand = Rat::new(p0, q0);
    if !cand.denom().is_zero() && (rat_to_f64(&cand) - x).abs() <= tol {
        Some(cand)
    } else {
        None
    }
}

/// True iff `r` is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Least common multiple of two positive integers.
pub fn lcm_u64(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["13/1024", "-5", "0", "224", "-7/10"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
        assert_eq!(format_rat(&rat(3, 6)), "1/2");
        assert_eq!(format_rat(&rat(4, 2)), "2");
        assert!(parse_rat("1/0").is_none());
    }

    #[test]
    fn exact_sqrt() {
        assert_eq!(rat_sqrt_exact(&rat(1, 16)), Some(rat(1, 4)));
        assert_eq!(rat_sqrt_exact(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rat_sqrt_exact(&rat(122, 125)), None);
        assert_eq!(rat_sqrt_exact(&rat(-1, 4)), None);
    }

    #[test]
    fn rationalize_central_charges() {
        assert_eq!(rationalize(25.0 / 28.0, 10_000, 1e-9), Some(rat(25, 28)));
        assert_eq!(rationalize(39.0 / 28.0, 10_000, 1e-9), Some(rat(39, 28)));
        assert_eq!(rationalize(0.5, 10_000, 1e-9), Some(rat(1, 2)));
        assert_eq!(rationalize(21.0 / 22.0, 10_000, 1e-9), Some(rat(21, 22)));
        // A generic irrational has no convergent within 1e-9 below den 10^4.
        assert_eq!(rationalize(std::f64::consts::SQRT_2, 10_000, 1e-9), None);
    }
}
