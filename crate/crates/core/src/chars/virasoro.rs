//! Unitary minimal-model Virasoro characters.
//!
//! For the unitary series `c_m = 1 - 6/((m+2)(m+3))` the irreducible
//! highest weights are `h_{r,s} = ((r(m+3) - s(m+2))^2 - 1) / (4(m+2)(m+3))`
//! with `1 <= r <= m+1`, `1 <= s <= m+2`, and the standard alternating-sum
//! character formula gives, with `p = m+2`, `p' = m+3`,
//!
//! `ch = (1/prod(1-q^n)) sum_{k in Z} ( q^{A(k)} - q^{B(k)} )`,
//! `A(k) = ((2pp'k + p'r - ps)^2 - 1) / (4pp')`,
//! `B(k) = ((2pp'k + p'r + ps)^2 - 1) / (4pp')`,
//!
//! graded by the plain `L(0)` eigenvalue (lowest term `q^h`, no `-c/24`).
//! The formula is standard plumbing; it is cross-validated against the
//! parafermion route and printed graded dimensions before the decomposition
//! identities trust it.

use super::{inverse_euler_product, QSeries};
use crate::rat::{rat, Rat};

/// A module `L(c_m, h_{r,s})` of the unitary series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleLabel {
    pub m: u64,
    pub r: u64,
    pub s: u64,
}

impl ModuleLabel {
    pub fn new(m: u64, r: u64, s: u64) -> Option<Self> {
        if m >= 1 && (1..=m + 1).contains(&r) && (1..=m + 2).contains(&s) {
            Some(ModuleLabel { m, r, s })
        } else {
            None
        }
    }

    /// `c = 1 - 6/((m+2)(m+3))`.
    pub fn central_charge(&self) -> Rat {
        let p = self.m as i64 + 2;
        rat(1, 1) - rat(6, p * (p + 1))
    }

    /// `h_{r,s}`.
    pub fn weight(&self) -> Rat {
        let p = self.m as i64 + 2;
        let pp = p + 1;
        let d = pp * self.r as i64 - p * self.s as i64;
        rat(d * d - 1, 4 * p * pp)
    }

    /// The Kac-table mirror `(r, s) -> (m+2-r, m+3-s)`.
    pub fn mirror(&self) -> ModuleLabel {
        ModuleLabel { m: self.m, r: self.m + 2 - self.r, s: self.m + 3 - self.s }
    }

    /// Label with the given weight, if it is on the grid.
    pub fn from_weight(m: u64, h: &Rat) -> Option<Self> {
        for r in 1..=m + 1 {
            for s in 1..=m + 2 {
                let l = ModuleLabel { m, r, s };
                if l.weight() == *h {
                    return Some(l);
                }
            }
        }
        None
    }

    /// All distinct weights of the unitary grid at level `m`.
    pub fn grid_weights(m: u64) -> Vec<Rat> {
        let mut ws: Vec<Rat> = Vec::new();
        for r in 1..=m + 1 {
            for s in 1..=m + 2 {
                let h = ModuleLabel { m, r, s }.weight();
                if !ws.contains(&h) {
                    ws.push(h);
                }
            }
        }
        ws.sort();
        ws
    }
}

/// `ch L(c_m, h_{r,s})` to the given order.
pub fn virasoro_char(label: &ModuleLabel, order: &Rat) -> QSeries<Rat> {
    let p = label.m as i64 + 2;
    let pp = p + 1;
    let denom = (4 * p * pp) as u64;
    let mut num = QSeries::<Rat>::zero(denom, order);
    let trunc = num.trunc();
    let (r, s) = (label.r as i64, label.s as i64);
    let term = |k: i64, sign_ps: i64| -> i64 {
        let base = 2 * p * pp * k + pp * r + sign_ps * p * s;
        base * base - 1
    };
    let mut k = 0i64;
    loop {
        let mut hit = false;
        for kk in [k, -k - 1] {
            let a = term(kk, -1);
            if a < trunc {
                hit = true;
                num.add_term(a, rat(1, 1));
            }
            let b = term(kk, 1);
            if b < trunc {
                hit = true;
                num.add_term(b, rat(-1, 1));
            }
        }
        if !hit {
            break;
        }
        k += 1;
    }
    num.mul(&inverse_euler_product(1, order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat_int;

    #[test]
    fn kac_table_values() {
        // c_1 = 1/2 with weights {0, 1/2, 1/16}
        assert_eq!(ModuleLabel::new(1, 1, 1).unwrap().central_charge(), rat(1, 2));
        assert_eq!(ModuleLabel::grid_weights(1), vec![rat(0, 1), rat(1, 16), rat(1, 2)]);
        // h(9,1,4) = 31/16 on the c = 21/22 grid
        let l = ModuleLabel::new(9, 1, 4).unwrap();
        assert_eq!(l.central_charge(), rat(21, 22));
        assert_eq!(l.weight(), rat(31, 16));
        // mirror symmetry of the weight
        assert_eq!(l.mirror().weight(), l.weight());
    }

    #[test]
    fn ising_vacuum_expansion() {
        // ch L(1/2, 0) = 1 + q^2 + q^3 + 2q^4 + 2q^5 + 3q^6 + ...
        let ch = virasoro_char(&ModuleLabel::new(1, 1, 1).unwrap(), &rat_int(8));
        for (e, w) in [(0, 1), (1, 0), (2, 1), (3, 1), (4, 2), (5, 2), (6, 3), (7, 3)] {
            assert_eq!(ch.coeff(e * 24, 24), Some(rat_int(w)), "q^{e}");
        }
    }

    #[test]
    fn leading_term_is_q_to_the_h() {
        for (m, r, s) in [(1u64, 2u64, 1u64), (5, 4, 7), (9, 1, 4), (2, 2, 2), (4, 1, 2)] {
            let l = ModuleLabel::new(m, r, s).unwrap();
            let h = l.weight();
            let ch = virasoro_char(&l, &(h.clone() + rat_int(3)));
            let v = ch.valuation().unwrap();
            let denom = ch.denom();
            assert_eq!(Rat::new(v.into(), (denom as i64).into()), h);
            assert_eq!(ch.coeff(v, denom), Some(rat_int(1)));
            ch.assert_nonneg_integers().unwrap();
        }
    }

    #[test]
    fn character_respects_kac_mirror() {
        for (m, r, s) in [(1u64, 1u64, 2u64), (5, 2, 3), (9, 3, 5)] {
            let l = ModuleLabel::new(m, r, s).unwrap();
            let a = virasoro_char(&l, &rat_int(6));
            let b = virasoro_char(&l.mirror(), &rat_int(6));
            assert!(a.eq_to_common_order(&b));
        }
    }
}
