//! Exact cyclotomic numbers.
//!
//! A [`Cyc`] is an element of Q(zeta_N) stored on the power basis
//! `zeta^0 .. zeta^{phi(N)-1}` with coefficients reduced modulo the N-th
//! cyclotomic polynomial, so representation at a fixed conductor is unique.
//! Mixed-conductor arithmetic lifts both operands to the least common
//! multiple. A value whose reduced vector is constant is demoted to
//! conductor 1, which keeps rationals canonical across routes.
//!
//! Conductors stay small here (the nine cases need N <= 8, the character
//! engine N <= 2*9), so no attempt is made at asymptotically clever
//! arithmetic.

use crate::rat::{lcm_u64, rat_to_f64, Rat};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::Mutex;
use std::sync::OnceLock;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycError {
    #[error("division by zero in Q(zeta)")]
    DivisionByZero,
}

/// Monic integer coefficients of the N-th cyclotomic polynomial, ascending.
///
/// Computed once per conductor by the classical recursion
/// `Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d` and cached.
fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let poly = if n == 1 {
        vec![BigInt::from(-1), BigInt::from(1)]
    } else {
        // x^n - 1
        let mut num = vec![BigInt::zero(); n as usize + 1];
        num[0] = BigInt::from(-1);
        num[n as usize] = BigInt::one();
        for d in 1..n {
            if n % d == 0 {
                num = int_poly_exact_div(&num, &cyclotomic_polynomial(d));
            }
        }
        num
    };
    cache.lock().unwrap().insert(n, poly.clone());
    poly
}

/// Exact division of integer polynomials (ascending coefficients); the
/// divisor is monic and the remainder is known to vanish.
fn int_poly_exact_div(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one());
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, d) in den.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(BigInt::is_zero), "non-exact polynomial division");
    quot
}

/// Euler phi(N) = degree of Phi_N.
pub fn euler_phi(n: u64) -> usize {
    cyclotomic_polynomial(n).len() - 1
}

/// Reduce an arbitrary-degree rational polynomial modulo Phi_N (ascending
/// coefficients), returning exactly phi(N) coefficients.
fn reduce_mod_cyclotomic(mut coeffs: Vec<Rat>, n: u64) -> Vec<Rat> {
    let phi_poly = cyclotomic_polynomial(n);
    let deg = phi_poly.len() - 1;
    while coeffs.len() > deg {
        let top = coeffs.len() - 1;
        let c = coeffs[top].clone();
        if !c.is_zero() {
            // subtract c * x^{top-deg} * Phi_N
            for (i, p) in phi_poly.iter().enumerate() {
                let idx = top - deg + i;
                let term = &c * Rat::from_integer(p.clone());
                coeffs[idx] -= term;
            }
        }
        coeffs.pop();
    }
    coeffs.resize(deg, Rat::zero());
    coeffs
}

/// An element of the cyclotomic field Q(zeta_N).
#[derive(Clone)]
pub struct Cyc {
    conductor: u64,
    /// Length phi(conductor), coefficients of zeta^0..zeta^{phi-1}.
    coeffs: Vec<Rat>,
}

impl Cyc {
    fn normalized(conductor: u64, coeffs: Vec<Rat>) -> Self {
        debug_assert_eq!(coeffs.len(), euler_phi(conductor));
        if conductor > 1 && coeffs[1..].iter().all(Rat::is_zero) {
            return Cyc { conductor: 1, coeffs: vec![coeffs[0].clone()] };
        }
        Cyc { conductor, coeffs }
    }

    pub fn zero() -> Self {
        Cyc::from_rat(Rat::zero())
    }

    pub fn one() -> Self {
        Cyc::from_rat(Rat::one())
    }

    pub fn from_rat(r: Rat) -> Self {
        Cyc { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Cyc::from_rat(crate::rat::rat_int(n))
    }

    /// zeta_N^k in canonical form; `k` may be any integer.
    pub fn root_of_unity(n: u64, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let k = k.rem_euclid(n as i64) as usize;
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = Rat::one();
        Cyc::normalized(n, reduce_mod_cyclotomic(coeffs, n))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// The rational value, if this element lies in Q.
    pub fn try_rat(&self) -> Option<Rat> {
        if self.conductor == 1 {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    pub fn expect_rat(&self, what: &str) -> Rat {
        self.try_rat().unwrap_or_else(|| panic!("{what}: expected rational, got {self}"))
    }

    /// Re-express at a multiple of the current conductor.
    pub fn lift(&self, m: u64) -> Self {
        assert!(m % self.conductor == 0, "lift target must be a multiple of the conductor");
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut raw = vec![Rat::zero(); self.coeffs.len() * step + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[i * step] += c;
        }
        Cyc { conductor: m, coeffs: reduce_mod_cyclotomic(raw, m) }
    }

    fn common(a: &Cyc, b: &Cyc) -> (Cyc, Cyc, u64) {
        let m = lcm_u64(a.conductor, b.conductor);
        (a.lift(m), b.lift(m), m)
    }

    pub fn add(&self, other: &Cyc) -> Cyc {
        let (a, b, m) = Cyc::common(self, other);
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        Cyc::normalized(m, coeffs)
    }

    pub fn sub(&self, other: &Cyc) -> Cyc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Cyc {
        Cyc { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Cyc) -> Cyc {
        let (a, b, m) = Cyc::common(self, other);
        let mut raw = vec![Rat::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    raw[i + j] += x * y;
                }
            }
        }
        Cyc::normalized(m, reduce_mod_cyclotomic(raw, m))
    }

    pub fn scale(&self, r: &Rat) -> Cyc {
        Cyc::normalized(self.conductor, self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// Phi_N, which is irreducible over Q.
    pub fn inv(&self) -> Result<Cyc, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        if let Some(r) = self.try_rat() {
            return Ok(Cyc::from_rat(r.recip()));
        }
        let modulus: Vec<Rat> = cyclotomic_polynomial(self.conductor)
            .iter()
            .map(|c| Rat::from_integer(c.clone()))
            .collect();
        let (g, _, u) = poly_ext_gcd(&modulus, &self.coeffs);
        // g is a nonzero constant since Phi_N is irreducible.
        assert_eq!(poly_degree(&g), Some(0), "cyclotomic polynomial not coprime to element");
        let ginv = g[0].recip();
        let inv_coeffs: Vec<Rat> = u.iter().map(|c| c * &ginv).collect();
        Ok(Cyc::normalized(self.conductor, reduce_mod_cyclotomic(inv_coeffs, self.conductor)))
    }

    pub fn div(&self, other: &Cyc) -> Result<Cyc, CycError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Complex conjugation zeta -> zeta^{-1}.
    pub fn conj(&self) -> Cyc {
        if self.conductor == 1 {
            return self.clone();
        }
        let n = self.conductor;
        let mut raw = vec![Rat::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let e = ((n as usize) - i) % n as usize;
                raw[e] += c;
            }
        }
        Cyc::normalized(n, reduce_mod_cyclotomic(raw, n))
    }

    pub fn pow(&self, mut e: u64) -> Cyc {
        let mut base = self.clone();
        let mut acc = Cyc::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Floating-point embedding zeta_N -> exp(2 pi i / N).
    pub fn to_complex(&self) -> Complex64 {
        let n = self.conductor as f64;
        let mut z = Complex64::new(0.0, 0.0);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let arg = 2.0 * std::f64::consts::PI * (i as f64) / n;
                z += Complex64::from_polar(1.0, arg) * rat_to_f64(c);
            }
        }
        z
    }
}

impl PartialEq for Cyc {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b, _) = Cyc::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyc {}

impl std::ops::Add for Cyc {
    type Output = Cyc;
    fn add(self, rhs: Cyc) -> Cyc {
        Cyc::add(&self, &rhs)
    }
}

impl std::ops::Sub for Cyc {
    type Output = Cyc;
    fn sub(self, rhs: Cyc) -> Cyc {
        Cyc::sub(&self, &rhs)
    }
}

impl std::ops::Mul for Cyc {
    type Output = Cyc;
    fn mul(self, rhs: Cyc) -> Cyc {
        Cyc::mul(&self, &rhs)
    }
}

impl std::ops::Div for Cyc {
    type Output = Cyc;
    fn div(self, rhs: Cyc) -> Cyc {
        Cyc::div(&self, &rhs).expect("division by zero in Q(zeta)")
    }
}

impl std::ops::Neg for Cyc {
    type Output = Cyc;
    fn neg(self) -> Cyc {
        Cyc::neg(&self)
    }
}

impl Zero for Cyc {
    fn zero() -> Self {
        Cyc::zero()
    }
    fn is_zero(&self) -> bool {
        Cyc::is_zero(self)
    }
}

impl One for Cyc {
    fn one() -> Self {
        Cyc::one()
    }
}

impl fmt::Debug for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Cyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.try_rat() {
            return write!(f, "{r}");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if i == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})*z{}^{}", self.conductor, i)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

fn poly_degree(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

fn poly_rem_div(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = poly_degree(den).expect("division by zero polynomial");
    let lead = den[dd].clone();
    let mut rem = num.to_vec();
    let nd = match poly_degree(&rem) {
        Some(d) if d >= dd => d,
        _ => return (vec![Rat::zero()], rem),
    };
    let mut quot = vec![Rat::zero(); nd - dd + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dd] / &lead;
        if !c.is_zero() {
            for i in 0..=dd {
                let t = &c * &den[i];
                rem[k + i] -= t;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dd.max(1));
    (quot, rem)
}

/// Extended gcd: returns (g, s, t) with s*a + t*b = g.
fn poly_ext_gcd(a: &[Rat], b: &[Rat]) -> (Vec<Rat>, Vec<Rat>, Vec<Rat>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![Rat::one()], vec![Rat::zero()]);
    let (mut t0, mut t1) = (vec![Rat::zero()], vec![Rat::one()]);
    while poly_degree(&r1).is_some() {
        let (q, r) = poly_rem_div(&r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        let t = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    (r0, s0, t0)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len() + b.len()];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn cyclotomic_polynomials() {
        let phi = |n: u64| -> Vec<i64> {
            cyclotomic_polynomial(n).iter().map(|c| i64::try_from(c).unwrap()).collect()
        };
        assert_eq!(phi(1), vec![-1, 1]);
        assert_eq!(phi(2), vec![1, 1]);
        assert_eq!(phi(3), vec![1, 1, 1]);
        assert_eq!(phi(4), vec![1, 0, 1]);
        assert_eq!(phi(5), vec![1, 1, 1, 1, 1]);
        assert_eq!(phi(6), vec![1, -1, 1]);
        assert_eq!(phi(8), vec![1, 0, 0, 0, 1]);
        assert_eq!(phi(9), vec![1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(phi(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(phi(18), vec![1, 0, 0, -1, 0, 0, 1]);
        assert_eq!(euler_phi(18), 6);
    }

    #[test]
    fn roots_of_unity() {
        assert_eq!(Cyc::root_of_unity(1, 0), Cyc::one());
        assert_eq!(Cyc::root_of_unity(2, 1), Cyc::from_int(-1));
        let i = Cyc::root_of_unity(4, 1);
        assert_eq!(i.mul(&i), Cyc::from_int(-1));
        for (n, k) in [(3u64, 1i64), (5, 2), (8, 3), (9, 4), (18, 7)] {
            assert_eq!(Cyc::root_of_unity(n, k).pow(n), Cyc::one());
        }
        // 1 + zeta_3 + zeta_3^2 = 0
        let z = Cyc::root_of_unity(3, 1);
        assert!(Cyc::one().add(&z).add(&z.mul(&z)).is_zero());
        // zeta_5 * zeta_5^4 = 1
        assert_eq!(Cyc::root_of_unity(5, 1).mul(&Cyc::root_of_unity(5, 4)), Cyc::one());
    }

    #[test]
    fn sqrt2_embedding() {
        // zeta_8 + zeta_8^{-1} = sqrt(2)
        let s = Cyc::root_of_unity(8, 1).add(&Cyc::root_of_unity(8, -1));
        let z = s.to_complex();
        assert!((z.re - 2.0_f64.sqrt()).abs() < 1e-12);
        assert!(z.im.abs() < 1e-12);
        // and s^2 = 2 exactly
        assert_eq!(s.mul(&s), Cyc::from_int(2));
    }

    #[test]
    fn mixed_conductor_arithmetic() {
        let z3 = Cyc::root_of_unity(3, 1);
        let z4 = Cyc::root_of_unity(4, 1);
        let p = z3.mul(&z4);
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, Cyc::root_of_unity(12, 7));
        assert_eq!(p.pow(12), Cyc::one());
        // lift-and-reduce round trip
        let lifted = z3.lift(12);
        assert_eq!(lifted, z3);
    }

    #[test]
    fn inverse_and_conjugation() {
        let a = Cyc::root_of_unity(5, 1)
            .scale(&rat(2, 3))
            .add(&Cyc::root_of_unity(5, 3).scale(&rat(-7, 2)))
            .add(&Cyc::from_rat(rat(1, 4)));
        let b = a.inv().unwrap();
        assert_eq!(a.mul(&b), Cyc::one());
        assert_eq!(a.conj().conj(), a);
        assert_eq!(Cyc::zero().inv(), Err(CycError::DivisionByZero));
        // conj is the identity on rationals
        assert_eq!(Cyc::from_rat(rat(-5, 7)).conj(), Cyc::from_rat(rat(-5, 7)));
        // conj really is complex conjugation under the embedding
        let za = a.to_complex();
        let zc = a.conj().to_complex();
        assert!((za.conj() - zc).norm() < 1e-12);
    }

    #[test]
    fn rational_demotion() {
        // zeta_4^2 = -1 demotes to conductor 1
        let m1 = Cyc::root_of_unity(4, 1).pow(2);
        assert_eq!(m1.conductor(), 1);
        assert_eq!(m1.try_rat(), Some(rat(-1, 1)));
        // equality across conductors
        assert_eq!(Cyc::from_int(1).lift(1), Cyc::root_of_unity(6, 6));
    }
}
