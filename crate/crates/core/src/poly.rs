//! Quadratic polynomial systems over exact rationals, evaluated generically
//! over any [`Field`] (exact cyclotomic verification and floating homotopy
//! tracking share the same system).

use crate::rat::{rat_int, Rat};
use crate::scalar::{Field, FromRat};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// A monomial: sorted variable indices, total degree <= 2.
pub type Mono = Vec<usize>;

/// A polynomial of total degree <= 2 with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn new() -> Self {
        Poly::default()
    }

    pub fn add_term(&mut self, mut vars: Mono, coeff: Rat) {
        assert!(vars.len() <= 2, "only quadratic systems are supported");
        if coeff.is_zero() {
            return;
        }
        vars.sort_unstable();
        let remove = {
            let e = self.terms.entry(vars.clone()).or_insert_with(Rat::zero);
            *e += coeff;
            e.is_zero()
        };
        if remove {
            self.terms.remove(&vars);
        }
    }

    pub fn from_terms(terms: &[(&[usize], Rat)]) -> Self {
        let mut p = Poly::new();
        for (vars, c) in terms {
            p.add_term(vars.to_vec(), c.clone());
        }
        p
    }

    pub fn from_int_terms(terms: &[(&[usize], i64)]) -> Self {
        let mut p = Poly::new();
        for (vars, c) in terms {
            p.add_term(vars.to_vec(), rat_int(*c));
        }
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval<T: Field + FromRat>(&self, point: &[T]) -> T {
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut t = T::from_rat(c);
            for &v in m {
                t = t * point[v].clone();
            }
            acc = acc + t;
        }
        acc
    }

    /// Partial derivative with respect to `var`.
    pub fn derivative(&self, var: usize) -> Poly {
        let mut out = Poly::new();
        for (m, c) in &self.terms {
            match m.as_slice() {
                [a] if *a == var => out.add_term(vec![], c.clone()),
                [a, b] if *a == var && *b == var => out.add_term(vec![var], c * rat_int(2)),
                [a, b] if *a == var => out.add_term(vec![*b], c.clone()),
                [a, b] if *b == var => out.add_term(vec![*a], c.clone()),
                _ => {}
            }
        }
        out
    }

    /// Scale to the primitive integer form: multiply by the lcm of the
    /// coefficient denominators and divide by the gcd of the numerators,
    /// keeping the sign.
    pub fn primitive(&self) -> Poly {
        if self.terms.is_empty() {
            return self.clone();
        }
        let mut lcm = BigInt::one();
        for c in self.terms.values() {
            lcm = lcm.lcm(c.denom());
        }
        let mut gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c * Rat::from_integer(lcm.clone());
            debug_assert!(scaled.is_integer());
            gcd = gcd.gcd(&scaled.to_integer());
        }
        let factor = Rat::new(lcm, gcd.abs().max(BigInt::one()));
        let mut out = Poly::new();
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * &factor);
        }
        out
    }

    pub fn render(&self, var_names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts: Vec<String> = Vec::new();
        // quadratic terms first, constants last, to read like the tables
        let mut keys: Vec<&Mono> = self.terms.keys().collect();
        keys.sort_by_key(|m| (std::cmp::Reverse(m.len()), (*m).clone()));
        for m in keys {
            let c = &self.terms[m];
            let vars: String =
                m.iter().map(|&v| var_names[v].clone()).collect::<Vec<_>>().join("*");
            let body = if m.is_empty() {
                c.to_string()
            } else if c.is_one() {
                vars
            } else if (-c).is_one() {
                format!("-{vars}")
            } else {
                format!("{c}*{vars}")
            };
            if parts.is_empty() || body.starts_with('-') {
                parts.push(body);
            } else {
                parts.push(format!("+{body}"));
            }
        }
        parts.concat()
    }
}

/// A square quadratic system together with its central-charge form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySystem {
    pub vars: Vec<String>,
    pub equations: Vec<Poly>,
    pub central_charge: Poly,
}

impl PolySystem {
    pub fn n(&self) -> usize {
        self.vars.len()
    }

    /// Bezout number 2^n of the square quadratic system.
    pub fn bezout(&self) -> u64 {
        assert_eq!(self.equations.len(), self.vars.len());
        1u64 << self.vars.len()
    }

    pub fn eval<T: Field + FromRat>(&self, point: &[T]) -> Vec<T> {
        self.equations.iter().map(|p| p.eval(point)).collect()
    }

    /// Row-major Jacobian polynomials.
    pub fn jacobian(&self) -> Vec<Vec<Poly>> {
        self.equations.iter().map(|p| (0..self.n()).map(|v| p.derivative(v)).collect()).collect()
    }
}

impl fmt::Display for PolySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.equations {
            writeln!(f, "{} = 0", p.render(&self.vars))?;
        }
        Ok(())
    }
}

/// Variable names in table order: `a, b, c, ...`.
pub fn default_var_names(n: usize) -> Vec<String> {
    (0..n).map(|i| ((b'a' + i as u8) as char).to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn eval_and_derivative() {
        // p = a^2 + 112 c^2 - a
        let p = Poly::from_int_terms(&[(&[0, 0], 1), (&[2, 2], 112), (&[0], -1)]);
        let point = vec![rat(1, 8), rat(5, 8), rat(1, 32)];
        assert_eq!(p.eval(&point), rat(1, 64) + rat(112, 1024) - rat(1, 8));
        let da = p.derivative(0);
        assert_eq!(da, Poly::from_int_terms(&[(&[0], 2), (&[], -1)]));
        let dc = p.derivative(2);
        assert_eq!(dc, Poly::from_int_terms(&[(&[2], 224)]));
        assert!(p.derivative(1).is_zero());
    }

    #[test]
    fn primitive_normalization() {
        // (4/3) a c + (8/3) b c + 20 d^2 - 2c  ->  2ac + 4bc + 30d^2 - 3c
        let raw = Poly::from_terms(&[
            (&[0, 2][..], rat(4, 3)),
            (&[1, 2][..], rat(8, 3)),
            (&[3, 3][..], rat(20, 1)),
            (&[2][..], rat(-2, 1)),
        ]);
        let want = Poly::from_int_terms(&[(&[0, 2], 2), (&[1, 2], 4), (&[3, 3], 30), (&[2], -3)]);
        assert_eq!(raw.primitive(), want);
    }

    #[test]
    fn render_reads_like_tables() {
        let p = Poly::from_int_terms(&[(&[0, 0], 1), (&[2, 2], 112), (&[0], -1)]);
        let names = default_var_names(3);
        assert_eq!(p.render(&names), "a*a+112*c*c-a");
    }
}
