//! Twisted traces over the level-l vacuum module of affine sl2.
//!
//! Two routes are implemented: the q-integer quotient (the working form,
//! valid at every twist including z = 0) and the theta-function quotient
//! (used as a cross-check; its denominator vanishes identically at z = 0).
//! Both compute `tr_{L(l,0)} sigma(-(1/2) z gamma) q^{L(0)}`, graded by the
//! plain `L(0)` eigenvalue.

use super::theta::{reduced_z, theta_rank1};
use super::QSeries;
use crate::cyc::Cyc;
use crate::rat::{rat, Rat};

/// The symmetric q-integer `[n]_a = a^{n-1} + a^{n-3} + ... + a^{-n+1}`,
/// extended to all integers by `[-n]_a = -[n]_a`. Symmetric in `a <-> 1/a`,
/// and `[n]_1 = n`.
pub fn q_integer(n: i64, conductor: u64, power: i64) -> Cyc {
    if n == 0 {
        return Cyc::zero();
    }
    if n < 0 {
        return q_integer(-n, conductor, power).neg();
    }
    let mut acc = Cyc::zero();
    let mut e = n - 1;
    for _ in 0..n {
        acc = acc.add(&Cyc::root_of_unity(conductor, power * e));
        e -= 2;
    }
    acc
}

/// `tr_{L(l,0)} sigma(-(1/2) z gamma) q^{L(0)}` via the q-integer quotient:
/// numerator `1 + sum_{m != 0} [2(l+2)m + 1]_a q^{(l+2)m^2 + m}` over
/// denominator `1 + sum_{n != 0} [4n + 1]_a q^{2n^2 + n}`, with
/// `a = e^{pi i z}`.
pub fn affine_twisted_trace(ell: u64, z: &Rat, order: &Rat) -> QSeries<Cyc> {
    assert!(ell >= 1);
    let (p, r) = reduced_z(z);
    let conductor = 2 * r;
    let lam = |coef: i64, quad: i64, series: &mut QSeries<Cyc>| {
        // sum over m != 0 of [coef*m + 1]_a q^{quad*m^2 + m}
        let trunc = series.trunc();
        let mut m: i64 = 1;
        loop {
            let e_pos = quad * m * m + m;
            let e_neg = quad * m * m - m;
            if e_neg >= trunc {
                break;
            }
            if e_pos < trunc {
                series.add_term(e_pos, q_integer(coef * m + 1, conductor, p));
            }
            series.add_term(e_neg, q_integer(-coef * m + 1, conductor, p));
            m += 1;
        }
    };
    let mut num = QSeries::<Cyc>::one(1, order);
    lam(2 * (ell as i64 + 2), ell as i64 + 2, &mut num);
    let mut den = QSeries::<Cyc>::one(1, order);
    lam(4, 2, &mut den);
    num.div(&den).expect("denominator has constant term 1")
}

/// The same trace through the theta-function quotient
/// `q^{l/8(l+2)} (theta_{1,l+2} - theta_{-1,l+2}) / (theta_{1,2} - theta_{-1,2})`;
/// requires a twist where the denominator does not vanish (z not an integer).
pub fn affine_twisted_trace_theta_route(ell: u64, z: &Rat, order: &Rat) -> QSeries<Cyc> {
    let m = ell + 2;
    // generous internal order: the denominator has valuation 1/8
    let work = order + rat(1, 1);
    let num = theta_rank1(m, 1, z, &work).sub(&theta_rank1(m, -1, z, &work));
    let den = theta_rank1(2, 1, z, &work).sub(&theta_rank1(2, -1, z, &work));
    let quot = num.div(&den).expect("theta denominator vanishes at this twist");
    // shift by q^{l/(8(l+2))}
    let shift_den = 8 * m;
    let shift =
        QSeries::<Cyc>::monomial(shift_den, ell as i64, Cyc::one(), &(order + rat(1, 1)));
    quot.mul(&shift)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;
    use num_traits::Zero;

    #[test]
    fn q_integers_at_one_and_roots() {
        assert_eq!(q_integer(5, 1, 0), Cyc::from_int(5));
        assert_eq!(q_integer(-3, 1, 0), Cyc::from_int(-3));
        assert_eq!(q_integer(0, 4, 1), Cyc::zero());
        // [2]_a = a + 1/a at a = zeta_8: sqrt(2)
        let v = q_integer(2, 8, 1);
        let w = Cyc::root_of_unity(8, 1).add(&Cyc::root_of_unity(8, -1));
        assert_eq!(v, w);
        // symmetric under a -> 1/a
        assert_eq!(q_integer(7, 10, 3), q_integer(7, 10, -3));
    }

    #[test]
    fn level_one_vacuum_character_matches_lattice_construction() {
        // L(1,0) = V_{A1}: character = (sum q^{n^2}) / prod(1 - q^m)
        let t = rat_int(12);
        let got = affine_twisted_trace(1, &Rat::zero(), &t);
        let theta = theta_rank1(1, 0, &Rat::zero(), &t).map(|c| c.clone());
        let lattice = theta.mul(&super::super::inverse_euler_product(1, &t));
        assert!(got.eq_to_common_order(&lattice));
        // leading terms 1 + 3q + 4q^2 + 7q^3 + 13q^4
        for (e, want) in [(0, 1), (1, 3), (2, 4), (3, 7), (4, 13)] {
            assert_eq!(got.coeff(e, 1).unwrap().try_rat(), Some(rat_int(want)));
        }
    }

    #[test]
    fn vacuum_constant_term_is_one() {
        for ell in [1u64, 2, 3, 5, 9] {
            let s = affine_twisted_trace(ell, &Rat::zero(), &rat_int(4));
            assert_eq!(s.coeff(0, 1).unwrap().try_rat(), Some(rat_int(1)));
        }
    }

    #[test]
    fn theta_route_agrees_with_q_integer_route() {
        for (ell, z) in [(2u64, rat(1, 2)), (5, rat(1, 5)), (5, rat(2, 5)), (9, rat(1, 9))] {
            let a = affine_twisted_trace(ell, &z, &rat_int(8));
            let b = affine_twisted_trace_theta_route(ell, &z, &rat_int(8));
            assert!(a.eq_to_common_order(&b), "ell={ell} z={z}");
        }
    }
}
