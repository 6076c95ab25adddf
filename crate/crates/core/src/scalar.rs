//! Scalar abstraction for the pieces of the crate that run both exactly and
//! in floating point.
//!
//! Polynomial systems carry rational coefficients but get evaluated over
//! `Cyc` (exact verification) and over `Complex64` (homotopy tracking), and
//! the q-series kernel runs over `Rat` with `Cyc` intermediates. [`Field`] is
//! the num-traits bound those generic kernels share; [`FromRat`] injects the
//! rational coefficients into the working field.

use crate::cyc::Cyc;
use crate::rat::{rat_to_f64, Rat};
use num_complex::Complex64;
use num_traits::{One, Zero};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// A commutative field with exact or floating semantics.
pub trait Field:
    Clone
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Field for T where
    T: Clone
        + PartialEq
        + Zero
        + One
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + Div<Output = T>
        + Neg<Output = T>
{
}

/// Injection of exact rationals into a working field.
pub trait FromRat {
    fn from_rat(r: &Rat) -> Self;
}

impl FromRat for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

impl FromRat for Cyc {
    fn from_rat(r: &Rat) -> Self {
        Cyc::from_rat(r.clone())
    }
}

impl FromRat for Complex64 {
    fn from_rat(r: &Rat) -> Self {
        Complex64::new(rat_to_f64(r), 0.0)
    }
}
