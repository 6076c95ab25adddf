//! Exact truncated q-series and the character engine.
//!
//! A [`QSeries`] is a finite map `e -> c` meaning `sum c q^{e/D}` for a fixed
//! exponent denominator `D`, together with an exclusive truncation bound:
//! coefficients with `e/D < trunc` are tracked (absent means zero),
//! everything at or above the bound is undefined. Binary operations align
//! denominators by lcm and never fabricate coefficients beyond the minimum
//! truncation of the operands.
//!
//! Grading is `tr q^{L(0)}` throughout: no `-c/24` shift anywhere. The
//! printed expansions this engine is checked against use that convention,
//! while the modular-form literature usually does not.

use crate::rat::{lcm_u64, Rat};
use crate::scalar::Field;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

mod affine;
mod decomp;
mod parafermion;
mod theta;
mod virasoro;

pub use affine::{affine_twisted_trace, affine_twisted_trace_theta_route, q_integer};
pub use decomp::{
    integral_weight_modules, verify_decomposition, DecompReport, WeightGrid, FIVE_A_MODULES,
};
pub use parafermion::parafermion_char;
pub use theta::{lattice_coset_char, theta_rank1};
pub use virasoro::{virasoro_char, ModuleLabel};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SeriesError {
    #[error("division by a series with zero leading coefficient")]
    NonInvertibleLeading,
    #[error("coefficient at q^{0}/{1} is not a nonnegative integer: {2}")]
    NotNonnegativeInteger(i64, u64, String),
}

/// Truncated formal series in `q^{1/D}` over a field `C`.
#[derive(Debug, Clone)]
pub struct QSeries<C> {
    /// Exponent denominator D.
    denom: u64,
    /// Exponent numerator -> coefficient; only entries with `e < trunc`.
    coeffs: BTreeMap<i64, C>,
    /// Exclusive validity bound, in units of `1/D`.
    trunc: i64,
}

impl<C: Field> QSeries<C> {
    /// The zero series valid below `order` (a rational bound on `e/D`).
    pub fn zero(denom: u64, order: &Rat) -> Self {
        assert!(denom >= 1);
        let trunc = order_to_trunc(denom, order);
        QSeries { denom, coeffs: BTreeMap::new(), trunc }
    }

    pub fn one(denom: u64, order: &Rat) -> Self {
        let mut s = Self::zero(denom, order);
        s.add_term(0, C::one());
        s
    }

    /// `c * q^{e/denom}`.
    pub fn monomial(denom: u64, e: i64, c: C, order: &Rat) -> Self {
        let mut s = Self::zero(denom, order);
        s.add_term(e, c);
        s
    }

    pub fn denom(&self) -> u64 {
        self.denom
    }

    /// Exclusive validity bound in units of `1/denom`.
    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    /// Adds `c q^{e/denom}`; silently drops terms at or beyond the bound.
    pub fn add_term(&mut self, e: i64, c: C) {
        if e >= self.trunc || c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(e).or_insert_with(C::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    /// Coefficient of `q^{num/den}`; `None` when the exponent is at or beyond
    /// the truncation bound (undefined), zero when merely absent.
    pub fn coeff(&self, num: i64, den: u64) -> Option<C> {
        // num/den in units of 1/denom
        let (e, rem) = scale_exponent(num, den, self.denom);
        if rem {
            // not representable at this denominator: the coefficient is 0 if
            // within bounds
            return if Rat::new(num.into(), (den as i64).into())
                < Rat::new(self.trunc.into(), (self.denom as i64).into())
            {
                Some(C::zero())
            } else {
                None
            };
        }
        if e >= self.trunc {
            return None;
        }
        Some(self.coeffs.get(&e).cloned().unwrap_or_else(C::zero))
    }

    /// Lowest exponent with a nonzero coefficient, in units of `1/denom`.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &C)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Rescale to a denominator that is a common multiple.
    pub fn with_denom(&self, denom: u64) -> Self {
        assert!(denom % self.denom == 0);
        let f = (denom / self.denom) as i64;
        if f == 1 {
            return self.clone();
        }
        QSeries {
            denom,
            coeffs: self.coeffs.iter().map(|(e, c)| (e * f, c.clone())).collect(),
            trunc: self.trunc.saturating_mul(f),
        }
    }

    fn aligned(a: &Self, b: &Self) -> (Self, Self) {
        let d = lcm_u64(a.denom, b.denom);
        (a.with_denom(d), b.with_denom(d))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = Self::aligned(self, other);
        a.trunc = a.trunc.min(b.trunc);
        a.coeffs.retain(|e, _| *e < a.trunc);
        for (e, c) in b.coeffs {
            a.add_term(e, c);
        }
        a
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.coeffs.values_mut() {
            *c = -c.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = self.clone();
        if c.is_zero() {
            out.coeffs.clear();
            return out;
        }
        for v in out.coeffs.values_mut() {
            *v = v.clone() * c.clone();
        }
        out.coeffs.retain(|_, v| !v.is_zero());
        out
    }

    /// Exact convolution. The product is valid below
    /// `min(Ta + val(b), Tb + val(a))`.
    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::aligned(self, other);
        let va = a.valuation().unwrap_or(a.trunc);
        let vb = b.valuation().unwrap_or(b.trunc);
        let trunc = (a.trunc.saturating_add(vb)).min(b.trunc.saturating_add(va));
        let mut out = QSeries { denom: a.denom, coeffs: BTreeMap::new(), trunc };
        for (ea, ca) in &a.coeffs {
            for (eb, cb) in &b.coeffs {
                let e = ea + eb;
                if e < trunc {
                    out.add_term(e, ca.clone() * cb.clone());
                }
            }
        }
        out
    }

    /// Exact division; the divisor's lowest tracked coefficient must be
    /// invertible (nonzero).
    pub fn div(&self, other: &Self) -> Result<Self, SeriesError> {
        let (a, b) = Self::aligned(self, other);
        let Some(vb) = b.valuation() else {
            return Err(SeriesError::NonInvertibleLeading);
        };
        let lead = b.coeffs[&vb].clone();
        let va = a.valuation().unwrap_or(a.trunc);
        let vq = va - vb;
        // q_e needs a_{e+vb} (e + vb < Ta) and b_{e+vb-e'} for e' >= vq
        // (index < Tb), so the quotient is valid below
        // min(Ta - vb, Tb + vq - vb).
        let trunc = (a.trunc - vb).min(b.trunc + vq - vb);
        let mut out = QSeries { denom: a.denom, coeffs: BTreeMap::new(), trunc };
        if a.is_zero() {
            return Ok(out);
        }
        for e in vq..trunc {
            let mut acc = a.coeffs.get(&(e + vb)).cloned().unwrap_or_else(C::zero);
            for (eq, cq) in out.coeffs.range(vq..e) {
                if let Some(cb) = b.coeffs.get(&(e + vb - eq)) {
                    acc = acc - cq.clone() * cb.clone();
                }
            }
            if !acc.is_zero() {
                out.coeffs.insert(e, acc / lead.clone());
            }
        }
        Ok(out)
    }

    /// Map the coefficient field.
    pub fn map<D: Field>(&self, f: impl Fn(&C) -> D) -> QSeries<D> {
        QSeries {
            denom: self.denom,
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, f(c))).collect(),
            trunc: self.trunc,
        }
    }

    /// Equality of all coefficients below the common validity bound;
    /// on mismatch returns the first offending exponent and both values.
    pub fn first_mismatch(&self, other: &Self) -> Option<(Rat, C, C)> {
        let (a, b) = Self::aligned(self, other);
        let bound = a.trunc.min(b.trunc);
        let mut keys: Vec<i64> = a
            .coeffs
            .keys()
            .chain(b.coeffs.keys())
            .copied()
            .filter(|e| *e < bound)
            .collect();
        keys.sort_unstable();
        keys.dedup();
        for e in keys {
            let ca = a.coeffs.get(&e).cloned().unwrap_or_else(C::zero);
            let cb = b.coeffs.get(&e).cloned().unwrap_or_else(C::zero);
            if ca != cb {
                return Some((Rat::new(e.into(), (a.denom as i64).into()), ca, cb));
            }
        }
        None
    }

    pub fn eq_to_common_order(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }
}

impl QSeries<Rat> {
    /// Check that every tracked coefficient is a nonnegative integer.
    pub fn assert_nonneg_integers(&self) -> Result<(), SeriesError> {
        for (e, c) in &self.coeffs {
            if !c.is_integer() || c.is_negative() {
                return Err(SeriesError::NotNonnegativeInteger(*e, self.denom, c.to_string()));
            }
        }
        Ok(())
    }

    /// Plain-text q-expansion, exponents as reduced fractions.
    pub fn render(&self, max_terms: usize) -> String {
        let mut out = String::new();
        for (i, (e, c)) in self.coeffs.iter().enumerate() {
            if i >= max_terms {
                out.push_str(" + ...");
                break;
            }
            if i > 0 {
                out.push_str(" + ");
            }
            let ex = Rat::new((*e).into(), (self.denom as i64).into());
            if ex.is_zero() {
                out.push_str(&c.to_string());
            } else if c.is_one() {
                out.push_str(&format!("q^{ex}"));
            } else {
                out.push_str(&format!("{c}*q^{ex}"));
            }
        }
        if self.coeffs.is_empty() {
            out.push('0');
        }
        out
    }
}

impl<C: Field + fmt::Display> fmt::Display for QSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c})q^[{}/{}]", e, self.denom)?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn order_to_trunc(denom: u64, order: &Rat) -> i64 {
    // smallest integer B with e < B  <=>  e/D < order
    let td = order * Rat::from_integer((denom as i64).into());
    let b = td.ceil().to_integer();
    i64::try_from(&b).expect("truncation bound overflow")
}

/// Rescale `num/den` to units of `1/denom`; `true` flags a remainder.
fn scale_exponent(num: i64, den: u64, denom: u64) -> (i64, bool) {
    let prod = num as i128 * denom as i128;
    let d = den as i128;
    if prod % d != 0 {
        return (0, true);
    }
    (i64::try_from(prod / d).expect("exponent overflow"), false)
}

/// `prod_{n=1}^{...} (1 - q^n)` to the given order, at denominator `denom`.
pub fn euler_product<C: Field>(denom: u64, order: &Rat) -> QSeries<C> {
    let mut out = QSeries::<C>::one(1, order);
    let bound = out.trunc();
    for n in 1..=bound.max(0) {
        let mut f = QSeries::<C>::one(1, order);
        f.add_term(n, -C::one());
        out = out.mul(&f);
    }
    out.with_denom(lcm_u64(denom, out.denom()))
}

/// `1 / prod (1 - q^n)`: the partition generating series.
pub fn inverse_euler_product<C: Field>(denom: u64, order: &Rat) -> QSeries<C> {
    let one = QSeries::<C>::one(1, order);
    one.div(&euler_product(1, order)).expect("euler product is invertible").with_denom(denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{rat, rat_int};

    fn ord(n: i64) -> Rat {
        rat_int(n)
    }

    #[test]
    fn geometric_series_inverts_one_minus_q() {
        // (1 - q) * sum q^n = 1 to truncation
        let mut one_minus_q = QSeries::<Rat>::one(1, &ord(12));
        one_minus_q.add_term(1, rat_int(-1));
        let geo = QSeries::<Rat>::one(1, &ord(12)).div(&one_minus_q).unwrap();
        for e in 0..12 {
            assert_eq!(geo.coeff(e, 1), Some(rat_int(1)));
        }
        let prod = one_minus_q.mul(&geo);
        assert!(prod.eq_to_common_order(&QSeries::one(1, &ord(12))));
    }

    #[test]
    fn partition_numbers_from_euler_product() {
        // independent oracle: direct partition counting by dynamic programming
        let t = 20usize;
        let mut parts = vec![0u64; t + 1];
        parts[0] = 1;
        for k in 1..=t {
            for e in k..=t {
                parts[e] += parts[e - k];
            }
        }
        let series = inverse_euler_product::<Rat>(1, &ord(t as i64 + 1));
        for (e, want) in parts.iter().enumerate() {
            assert_eq!(series.coeff(e as i64, 1), Some(rat_int(*want as i64)), "p({e})");
        }
    }

    #[test]
    fn multiplication_respects_identity_and_denominators() {
        let a = QSeries::<Rat>::monomial(2, 1, rat(3, 2), &ord(5)); // (3/2) q^{1/2}
        let one = QSeries::<Rat>::one(1, &ord(5));
        let p = a.mul(&one);
        assert_eq!(p.coeff(1, 2), Some(rat(3, 2)));
        let b = QSeries::<Rat>::monomial(3, 2, rat_int(2), &ord(5)); // 2 q^{2/3}
        let ab = a.mul(&b);
        assert_eq!(ab.denom(), 6);
        // q^{1/2} * q^{2/3} = q^{7/6}
        assert_eq!(ab.coeff(7, 6), Some(rat_int(3)));
    }

    #[test]
    fn truncation_tightness_through_division() {
        // dividing by a unit keeps validity; dividing by q^v shifts it
        let mut a = QSeries::<Rat>::one(1, &ord(10));
        a.add_term(3, rat_int(5));
        let q2 = QSeries::<Rat>::monomial(1, 2, rat_int(1), &ord(10));
        let shifted = a.mul(&q2);
        let back = shifted.div(&q2).unwrap();
        assert!(back.eq_to_common_order(&a));
        // dividing by q^2 costs two orders of validity
        assert_eq!(back.trunc(), 8);
        // coefficient beyond the bound is undefined
        assert_eq!(a.coeff(10, 1), None);
        assert_eq!(a.coeff(99, 10), Some(rat_int(0))); // 9.9 < 10, absent => 0
    }

    #[test]
    fn nonneg_integer_guard() {
        let mut s = QSeries::<Rat>::one(1, &ord(4));
        s.add_term(2, rat(1, 2));
        assert!(s.assert_nonneg_integers().is_err());
    }
}
