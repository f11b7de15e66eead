//! The scalar abstraction: one trait, two realizations.
//!
//! `BigRational` is the exact realization (arbitrary-precision, comparisons
//! ignore tolerances), `Complex64` the approximate one (tolerance-based
//! comparisons, principal branches for roots and powers). Mixing
//! realizations is impossible by construction since every matrix and
//! family constructor is generic over a single `Scalar` parameter.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::{Error, Result};

pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Exact realizations compare with `==` and ignore every tolerance
    /// argument.
    const EXACT: bool;

    fn from_int(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self;

    /// Floating image of the scalar, used for pivot selection and reporting.
    fn to_complex(&self) -> Complex64;

    fn magnitude(&self) -> f64 {
        self.to_complex().norm()
    }

    fn is_zero_tol(&self, atol: f64) -> bool;

    fn eq_tol(&self, other: &Self, atol: f64) -> bool;

    /// Square root within the realization. Exact mode accepts perfect
    /// squares only; approximate mode takes the principal branch.
    fn try_sqrt(&self) -> Result<Self>;

    /// `self^exp`. Exact mode requires an integer exponent.
    fn try_pow(&self, exp: &Self) -> Result<Self>;

    fn try_recip(&self) -> Result<Self>;
}

fn exact_int_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        BigRational::new(num.into(), den.into())
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(self.to_f64().unwrap_or(f64::NAN), 0.0)
    }

    fn is_zero_tol(&self, _atol: f64) -> bool {
        self.is_zero()
    }

    fn eq_tol(&self, other: &Self, _atol: f64) -> bool {
        self == other
    }

    fn try_sqrt(&self) -> Result<Self> {
        let num = exact_int_sqrt(self.numer()).ok_or_else(|| Error::NoExactSqrt(self.to_string()))?;
        let den = exact_int_sqrt(self.denom()).ok_or_else(|| Error::NoExactSqrt(self.to_string()))?;
        Ok(BigRational::new(num, den))
    }

    fn try_pow(&self, exp: &Self) -> Result<Self> {
        if !exp.is_integer() {
            return Err(Error::NonIntegerExponent(exp.to_string()));
        }
        let e = exp
            .numer()
            .to_i32()
            .ok_or_else(|| Error::NonIntegerExponent(exp.to_string()))?;
        if self.is_zero() && e < 0 {
            return Err(Error::ZeroParameter("zero base with negative exponent".into()));
        }
        Ok(num_traits::Pow::pow(self.clone(), e))
    }

    fn try_recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroParameter("reciprocal of zero".into()));
        }
        Ok(self.recip())
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Complex64::new(num as f64 / den as f64, 0.0)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn is_zero_tol(&self, atol: f64) -> bool {
        self.norm() <= atol
    }

    fn eq_tol(&self, other: &Self, atol: f64) -> bool {
        (self - other).norm() <= atol
    }

    fn try_sqrt(&self) -> Result<Self> {
        Ok(self.sqrt())
    }

    fn try_pow(&self, exp: &Self) -> Result<Self> {
        Ok(self.powc(*exp))
    }

    fn try_recip(&self) -> Result<Self> {
        if self.norm() == 0.0 {
            return Err(Error::ZeroParameter("reciprocal of zero".into()));
        }
        Ok(self.finv())
    }
}
