use crate::{json::ScalarJson, rational_to_string, AlgebraError};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Num, One, Signed, ToPrimitive};
use std::fmt::Debug;
use std::ops::Neg;

/// A field the polynomial code can compute over.
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug + Send + Sync + 'static {
    /// Whether arithmetic is exact (zero tests are then structural).
    const EXACT: bool;

    fn from_rational(q: &BigRational) -> Self;
    fn to_complex(&self) -> Complex64;
    fn magnitude(&self) -> f64;
    fn to_json(&self) -> ScalarJson;
    fn from_json(v: &ScalarJson) -> Result<Self, AlgebraError>;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Integer power; negative exponents invert.
    fn powi(&self, n: i64) -> Self {
        let mut base = if n < 0 { self.inv() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_rational(q: &BigRational) -> Self {
        q.clone()
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(rational_to_f64(self), 0.0)
    }

    fn magnitude(&self) -> f64 {
        rational_to_f64(&self.abs())
    }

    fn to_json(&self) -> ScalarJson {
        ScalarJson::Exact { value: rational_to_string(self) }
    }

    fn from_json(v: &ScalarJson) -> Result<Self, AlgebraError> {
        match v {
            ScalarJson::Exact { value } => crate::parse_rational(value),
            ScalarJson::Complex { .. } => Err(AlgebraError::NotExact),
        }
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn from_rational(q: &BigRational) -> Self {
        Complex64::new(rational_to_f64(q), 0.0)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn magnitude(&self) -> f64 {
        self.norm()
    }

    fn to_json(&self) -> ScalarJson {
        ScalarJson::Complex { re: self.re, im: self.im }
    }

    fn from_json(v: &ScalarJson) -> Result<Self, AlgebraError> {
        match v {
            ScalarJson::Exact { value } => Ok(Self::from_rational(&crate::parse_rational(value)?)),
            ScalarJson::Complex { re, im } => Ok(Complex64::new(*re, *im)),
        }
    }
}

/// Correctly handles numerators and denominators beyond `f64` range.
pub(crate) fn rational_to_f64(q: &BigRational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    let shift = q.numer().bits() as i64 - q.denom().bits() as i64;
    let scaled = if shift > 0 {
        q / BigRational::from_integer(BigInt::one() << (shift as usize))
    } else {
        q * BigRational::from_integer(BigInt::one() << ((-shift) as usize))
    };
    let n = scaled.numer().to_f64().unwrap_or(f64::NAN);
    let d = scaled.denom().to_f64().unwrap_or(f64::NAN);
    (n / d) * 2f64.powi(shift as i32)
}
