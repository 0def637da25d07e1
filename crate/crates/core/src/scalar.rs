//! Arithmetic backends shared by every evaluator.
//!
//! Each series is written once against [`Scalar`] and instantiated twice:
//! with [`Rational`] for exact truncated sums (non-negative integer exponents,
//! integer bases) and with [`Complex64`] for floating evaluation with
//! arbitrary complex exponents.

use std::fmt::Debug;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + AddAssign
{
    /// Exponent as seen by this backend.
    type Exp: Clone + Debug + PartialEq + Send + Sync;
    /// Base of a power `base^(-s)`; always positive where it is used.
    type Base: Copy + Debug + PartialEq + Send + Sync;

    fn exponent(s: Complex64) -> Result<Self::Exp>;
    fn int_base(n: u64) -> Self::Base;
    /// Converts a positive shift into a base.
    fn shift_base(x: f64) -> Result<Self::Base>;
    fn add_base(b: Self::Base, n: u64) -> Self::Base;
    fn base_is_zero(b: Self::Base) -> bool;
    fn exp_is_zero(e: &Self::Exp) -> bool;
    /// `base^(-e)`, principal branch.
    fn inv_pow(b: Self::Base, e: &Self::Exp) -> Self;
    fn from_i64(c: i64) -> Self;
    fn to_complex(&self) -> Complex64;
}

impl Scalar for Rational {
    type Exp = u32;
    type Base = u64;

    fn exponent(s: Complex64) -> Result<u32> {
        if s.im != 0.0 || s.re < 0.0 || s.re.fract() != 0.0 || s.re > u32::MAX as f64 {
            return Err(Error::NotExact(format!(
                "exponent {s} is not a non-negative integer"
            )));
        }
        Ok(s.re as u32)
    }

    fn int_base(n: u64) -> u64 {
        n
    }

    fn shift_base(x: f64) -> Result<u64> {
        if x > 0.0 && x.fract() == 0.0 && x < 9.0e15 {
            Ok(x as u64)
        } else {
            Err(Error::NotExact(format!("shift {x} is not a positive integer")))
        }
    }

    fn add_base(b: u64, n: u64) -> u64 {
        b + n
    }

    fn base_is_zero(b: u64) -> bool {
        b == 0
    }

    fn exp_is_zero(e: &u32) -> bool {
        *e == 0
    }

    fn inv_pow(b: u64, e: &u32) -> Self {
        BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(b), *e as usize))
    }

    fn from_i64(c: i64) -> Self {
        BigRational::from_integer(BigInt::from(c))
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }
}

impl Scalar for Complex64 {
    type Exp = Complex64;
    type Base = f64;

    fn exponent(s: Complex64) -> Result<Complex64> {
        if s.re.is_finite() && s.im.is_finite() {
            Ok(s)
        } else {
            Err(Error::Domain(format!("non-finite exponent {s}")))
        }
    }

    fn int_base(n: u64) -> f64 {
        n as f64
    }

    fn shift_base(x: f64) -> Result<f64> {
        if x > 0.0 && x.is_finite() {
            Ok(x)
        } else {
            Err(Error::Domain(format!("shift must be positive, got {x}")))
        }
    }

    fn add_base(b: f64, n: u64) -> f64 {
        b + n as f64
    }

    fn base_is_zero(b: f64) -> bool {
        b == 0.0
    }

    fn exp_is_zero(e: &Complex64) -> bool {
        e.is_zero()
    }

    fn inv_pow(b: f64, e: &Complex64) -> Self {
        if e.im == 0.0 {
            let re = e.re;
            if re.fract() == 0.0 && re.abs() <= 16.0 {
                return Complex64::new(b.powi(-(re as i32)), 0.0);
            }
            return Complex64::new(b.powf(-re), 0.0);
        }
        let ln = b.ln();
        Complex64::from_polar((-e.re * ln).exp(), -e.im * ln)
    }

    fn from_i64(c: i64) -> Self {
        Complex64::new(c as f64, 0.0)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }
}

/// Nearest `f64` of a rational, robust to numerators and denominators
/// beyond the `f64` range.
pub fn rational_to_f64(q: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // Scale both to ~60 significant bits before dividing.
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift_n = (nb - 60).max(0);
    let shift_d = (db - 60).max(0);
    let n = (q.numer().abs() >> shift_n as usize).to_f64().unwrap_or(0.0);
    let d = (q.denom() >> shift_d as usize).to_f64().unwrap_or(1.0);
    let mag = n / d * 2f64.powi((shift_n - shift_d) as i32);
    if q.is_negative() {
        -mag
    } else {
        mag
    }
}
