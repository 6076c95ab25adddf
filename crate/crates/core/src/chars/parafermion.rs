//! Parafermion characters `ch W_l(0, 2k)` by discrete Fourier inversion of
//! twisted affine traces.
//!
//! From `L(l,0) = sum_k V_{(k/l)gamma + Z gamma} (x) W_l(0, 2k)` one gets
//!
//! `ch_V((k/l)gamma) ch_W(0,2k) = (1/l) sum_j zeta_l^{kj}
//!    tr_{L(l,0)} sigma(-(j/2l) gamma) q^{L(0)}`,
//!
//! and the W-character follows by exact series division. Every coefficient
//! must collapse to a nonnegative integer; anything else aborts.

use super::affine::affine_twisted_trace;
use super::theta::lattice_coset_char;
use super::{QSeries, SeriesError};
use crate::cyc::Cyc;
use crate::rat::{rat, Rat};

/// `ch W_l(0, k_even)` with `k_even = 2k`, `0 <= k <= l-1`.
pub fn parafermion_char(ell: u64, k_even: u64, order: &Rat) -> Result<QSeries<Rat>, SeriesError> {
    assert!(ell >= 1, "level must be positive");
    assert!(k_even % 2 == 0 && k_even / 2 < ell, "k out of range");
    let k = k_even / 2;
    // Work a little beyond the requested order: the division by the coset
    // character (valuation k^2/(2l) > 0 for k != 0) costs validity.
    let guard = rat((k * k) as i64, 2 * ell as i64) + rat(1, 1);
    let work = order + guard;
    let mut avg = QSeries::<Cyc>::zero(1, &work);
    for j in 0..ell {
        let tr = affine_twisted_trace(ell, &rat(j as i64, ell as i64), &work);
        let w = Cyc::root_of_unity(ell, (k * j) as i64);
        avg = avg.add(&tr.scale(&w));
    }
    let inv_l = Cyc::from_rat(rat(1, ell as i64));
    avg = avg.scale(&inv_l);
    // The DFT average is the product of two integer series; its coefficients
    // must already be rational.
    let num: QSeries<Rat> = avg.map(|c| {
        c.try_rat().unwrap_or_else(|| panic!("non-rational DFT coefficient: {c}"))
    });
    let den = lattice_coset_char(ell, k_even, &work);
    let mut w = num.div(&den)?;
    w = trim(w, order);
    w.assert_nonneg_integers()?;
    Ok(w)
}

/// Drop coefficients at or beyond `order` and tighten the recorded bound.
fn trim(s: QSeries<Rat>, order: &Rat) -> QSeries<Rat> {
    let denom = s.denom();
    let bound = QSeries::<Rat>::zero(denom, order).trunc().min(s.trunc());
    let mut clipped =
        QSeries::<Rat>::zero(denom, &Rat::new(bound.into(), (denom as i64).into()));
    for (e, c) in s.iter() {
        if *e < bound {
            clipped.add_term(*e, c.clone());
        }
    }
    clipped
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::virasoro::{virasoro_char, ModuleLabel};
    use crate::rat::rat_int;
    use num_traits::Zero;

    #[test]
    fn ising_characters_via_level_two_parafermions() {
        // W_2(0,0) = L(1/2,0) and W_2(0,2) = L(1/2,1/2)
        let t = rat_int(14);
        let w00 = parafermion_char(2, 0, &t).unwrap();
        let vac = virasoro_char(&ModuleLabel::new(1, 1, 1).unwrap(), &t);
        assert!(w00.eq_to_common_order(&vac), "{} vs {}", w00.render(10), vac.render(10));
        let w02 = parafermion_char(2, 2, &t).unwrap();
        let half = virasoro_char(&ModuleLabel::new(1, 2, 1).unwrap(), &t);
        assert!(w02.eq_to_common_order(&half));
    }

    #[test]
    fn level_three_parafermions_are_three_state_potts_characters() {
        // W_3(0,0) = L(4/5,0) + L(4/5,3), W_3(0,2) = W_3(0,4) = L(4/5,2/3)
        let t = rat_int(10);
        let w30 = parafermion_char(3, 0, &t).unwrap();
        let vac = virasoro_char(&ModuleLabel::new(3, 1, 1).unwrap(), &t)
            .add(&virasoro_char(&ModuleLabel::new(3, 1, 5).unwrap(), &t));
        assert!(w30.eq_to_common_order(&vac));
        let w32 = parafermion_char(3, 2, &t).unwrap();
        let w34 = parafermion_char(3, 4, &t).unwrap();
        let twothirds =
            virasoro_char(&ModuleLabel::from_weight(3, &crate::rat::rat(2, 3)).unwrap(), &t);
        assert!(w32.eq_to_common_order(&twothirds));
        assert!(w34.eq_to_common_order(&twothirds));
    }

    #[test]
    fn dual_module_character_symmetries() {
        // W_9(0,6) and W_9(0,12) are dual, hence equal characters
        let t = rat_int(10);
        let a = parafermion_char(9, 6, &t).unwrap();
        let b = parafermion_char(9, 12, &t).unwrap();
        assert!(a.eq_to_common_order(&b));
        // the four level-5 products appearing in the 5A decomposition all
        // share one character
        let t = rat_int(9);
        let w = |k: u64| parafermion_char(5, k, &t).unwrap();
        let p1 = w(2).mul(&w(4));
        let p2 = w(4).mul(&w(8));
        let p3 = w(6).mul(&w(2));
        let p4 = w(8).mul(&w(6));
        assert!(p1.eq_to_common_order(&p2));
        assert!(p1.eq_to_common_order(&p3));
        assert!(p1.eq_to_common_order(&p4));
    }

    #[test]
    fn dft_resummation_recovers_untwisted_trace() {
        // sum_k ch_V((k/l)gamma) ch_W(0,2k) = tr_{L(l,0)} q^{L(0)}
        let ell = 5u64;
        let t = rat_int(8);
        let mut acc = QSeries::<Rat>::zero(1, &t);
        for k in 0..ell {
            let v = lattice_coset_char(ell, 2 * k, &t);
            let w = parafermion_char(ell, 2 * k, &t).unwrap();
            acc = acc.add(&v.mul(&w));
        }
        let tr = affine_twisted_trace(ell, &Rat::zero(), &t).map(|c| c.expect_rat("trace"));
        assert!(acc.eq_to_common_order(&tr));
    }
}
