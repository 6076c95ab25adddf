//! Rank-1 theta sums and lattice coset characters.

use super::{inverse_euler_product, QSeries};
use crate::cyc::Cyc;
use crate::rat::{Rat, rat_int};
use num_traits::Signed;

/// `theta_{n,m}(tau, z) = sum_{j in n/2m + Z} e^{2 pi i m z j} q^{m j^2}`
/// as a series in `q^{1/4m}` with cyclotomic coefficients.
///
/// With `j = n/2m + k` the exponent is `(n + 2mk)^2 / 4m` and the phase is
/// `e^{2 pi i p (n + 2mk) / 2r}` for `z = p/r`, a root of unity of conductor
/// dividing `2r`.
pub fn theta_rank1(m: u64, n: i64, z: &Rat, order: &Rat) -> QSeries<Cyc> {
    assert!(m >= 1);
    let denom = 4 * m;
    let mut out = QSeries::<Cyc>::zero(denom, order);
    let trunc = out.trunc();
    let (p, r) = reduced_z(z);
    let mut k: i64 = 0;
    loop {
        let mut hit = false;
        for kk in [k, -k - 1] {
            let a = n + 2 * (m as i64) * kk;
            let e = a * a; // exponent numerator over 4m
            if e < trunc {
                hit = true;
                out.add_term(e, Cyc::root_of_unity(2 * r, p * a));
            }
        }
        if !hit {
            break;
        }
        k += 1;
    }
    out
}

/// Character of the rank-1 lattice coset module `V_{(k/2l) gamma + Z gamma}`
/// with `<gamma, gamma> = 2l`:
/// `theta_{(k/2l) gamma + Z gamma}(q) / prod (1 - q^n)`.
pub fn lattice_coset_char(ell: u64, k: u64, order: &Rat) -> QSeries<Rat> {
    assert!(ell >= 1 && k < 2 * ell);
    let denom = 4 * ell;
    let mut theta = QSeries::<Rat>::zero(denom, order);
    let trunc = theta.trunc();
    let mut n: i64 = 0;
    loop {
        let mut hit = false;
        for nn in [n, -n - 1] {
            let a = k as i64 + 2 * (ell as i64) * nn;
            let e = a * a;
            if e < trunc {
                hit = true;
                theta.add_term(e, rat_int(1));
            }
        }
        if !hit {
            break;
        }
        n += 1;
    }
    theta.mul(&inverse_euler_product(1, order))
}

/// `z` as `(p, r)` with `r >= 1` in lowest terms.
pub(super) fn reduced_z(z: &Rat) -> (i64, u64) {
    let p = i64::try_from(&z.numer().clone()).expect("z numerator overflow");
    let r = u64::try_from(&z.denom().abs()).expect("z denominator overflow");
    (p, r.max(1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};
    use num_traits::Zero;

    #[test]
    fn theta_0_1_matches_lattice_sum() {
        // theta_{0,1}(tau, 0) = 1 + 2q + 2q^4 + 2q^9 + ...
        let t = theta_rank1(1, 0, &Rat::zero(), &rat_int(30));
        for e in 0..30i64 {
            let want = if e == 0 {
                1
            } else if ((e as f64).sqrt().round() as i64).pow(2) == e {
                2
            } else {
                0
            };
            assert_eq!(t.coeff(4 * e, 4).unwrap().try_rat(), Some(rat_int(want)), "q^{e}");
        }
    }

    #[test]
    fn theta_odd_symmetry_at_z_zero() {
        let a = theta_rank1(2, 1, &Rat::zero(), &rat_int(12));
        let b = theta_rank1(2, -1, &Rat::zero(), &rat_int(12));
        assert!(a.sub(&b).is_zero());
    }

    #[test]
    fn theta_coefficients_live_in_small_cyclotomic_field() {
        let t = theta_rank1(3, 1, &rat(1, 5), &rat_int(8));
        for (_, c) in t.iter() {
            assert!(c.conductor() == 1 || 10 % c.conductor() == 0, "conductor {}", c.conductor());
        }
    }

    #[test]
    fn coset_char_by_direct_lattice_enumeration() {
        // independent oracle: enumerate lattice points of norm <= 2T directly
        let ell = 9u64;
        let t = rat_int(6);
        for k in [0u64, 6, 12] {
            let ch = lattice_coset_char(ell, k, &t);
            // oracle numerator: count alpha = (k/2l + n) gamma with
            // <alpha,alpha>/2 = l (k/2l + n)^2 < 6
            let mut counts = std::collections::BTreeMap::new();
            for n in -20i64..20 {
                let num = (k as i64 + 2 * ell as i64 * n).pow(2); // over 4l
                counts.entry(num).and_modify(|c| *c += 1).or_insert(1i64);
            }
            let mut theta = QSeries::<Rat>::zero(4 * ell, &t);
            for (e, c) in counts {
                theta.add_term(e, rat_int(c));
            }
            let want = theta.mul(&inverse_euler_product(1, &t));
            assert!(ch.eq_to_common_order(&want));
        }
        // negation symmetry k <-> 2l - k
        let a = lattice_coset_char(9, 6, &t);
        let b = lattice_coset_char(9, 12, &t);
        assert!(a.eq_to_common_order(&b));
        // constant term 1 for k = 0
        assert_eq!(lattice_coset_char(9, 0, &t).coeff(0, 1), Some(rat_int(1)));
    }
}
