use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::scalar::{Backend, Scalar};
use crate::error::{Error, Result};

/// Exact complex rationals, ℚ(i).
pub type GaussianRational = Complex<BigRational>;

/// Floating complex numbers.
pub type C64 = Complex<f64>;

/// Largest denominator accepted when lifting a float root back into ℚ(i).
const MAX_RECOVERY_DENOMINATOR: i64 = 10_000;

/// The scalar field every matrix, subspace and algebra is generic over.
///
/// Implemented for [`GaussianRational`] (exact) and [`C64`] (floating).
/// `is_negligible` is the only place where the two backends differ in
/// semantics: exact scalars ignore the threshold.
pub trait Field:
    Clone
    + Debug
    + PartialEq
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    const BACKEND: Backend;

    fn from_i64(v: i64) -> Self;

    /// Lift a floating value into this field. Always succeeds for floats;
    /// for exact scalars this is a bounded-denominator rational recovery
    /// that callers must verify.
    fn from_c64(z: C64) -> Option<Self>;

    fn to_c64(&self) -> C64;

    fn modulus(&self) -> f64;

    fn to_scalar(&self) -> Scalar;

    fn from_scalar(s: &Scalar) -> Result<Self>;

    fn is_exact() -> bool {
        Self::BACKEND == Backend::Exact
    }

    fn is_negligible(&self, eps: f64) -> bool {
        if Self::is_exact() {
            self.is_zero()
        } else {
            self.modulus() <= eps
        }
    }

    fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        if Self::is_exact() {
            self == other
        } else {
            (self.clone() - other.clone()).modulus() <= eps
        }
    }
}

impl Field for GaussianRational {
    const BACKEND: Backend = Backend::Exact;

    fn from_i64(v: i64) -> Self {
        Complex::new(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
    }

    fn from_c64(z: C64) -> Option<Self> {
        Some(Complex::new(recover_rational(z.re)?, recover_rational(z.im)?))
    }

    fn to_c64(&self) -> C64 {
        Complex::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn modulus(&self) -> f64 {
        self.to_c64().norm()
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Exact(self.clone())
    }

    fn from_scalar(s: &Scalar) -> Result<Self> {
        match s {
            Scalar::Exact(v) => Ok(v.clone()),
            Scalar::Float(_) => Err(Error::BackendMismatch(Backend::Exact, Backend::Float)),
        }
    }
}

impl Field for C64 {
    const BACKEND: Backend = Backend::Float;

    fn from_i64(v: i64) -> Self {
        Complex::new(v as f64, 0.0)
    }

    fn from_c64(z: C64) -> Option<Self> {
        Some(z)
    }

    fn to_c64(&self) -> C64 {
        *self
    }

    fn modulus(&self) -> f64 {
        self.norm()
    }

    fn to_scalar(&self) -> Scalar {
        Scalar::Float(*self)
    }

    fn from_scalar(s: &Scalar) -> Result<Self> {
        match s {
            Scalar::Float(v) => Ok(*v),
            Scalar::Exact(_) => Err(Error::BackendMismatch(Backend::Float, Backend::Exact)),
        }
    }
}

/// The Gaussian integer `re + im·i`.
pub fn gaussian(re: i64, im: i64) -> GaussianRational {
    Complex::new(BigRational::from_integer(re.into()), BigRational::from_integer(im.into()))
}

/// The Gaussian rational `re_n/re_d + (im_n/im_d)·i`.
pub fn gaussian_ratio(re: (i64, i64), im: (i64, i64)) -> GaussianRational {
    Complex::new(
        BigRational::new(re.0.into(), re.1.into()),
        BigRational::new(im.0.into(), im.1.into()),
    )
}

/// Continued-fraction recovery of a rational with bounded denominator.
fn recover_rational(x: f64) -> Option<BigRational> {
    if !x.is_finite() {
        return None;
    }
    let tol = 1e-8 * x.abs().max(1.0);
    // Convergents h/k of the continued fraction of x.
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut rem = x;
    for _ in 0..64 {
        let a = rem.floor();
        if a.abs() > 1e15 {
            return None;
        }
        let a_int = a as i128;
        let h2 = a_int * h1 + h0;
        let k2 = a_int * k1 + k0;
        if k2 > MAX_RECOVERY_DENOMINATOR as i128 {
            return None;
        }
        (h0, h1) = (h1, h2);
        (k0, k1) = (k1, k2);
        let approx = h1 as f64 / k1 as f64;
        if (approx - x).abs() <= tol {
            return Some(BigRational::new(BigInt::from(h1), BigInt::from(k1)));
        }
        let frac = rem - a;
        if frac.abs() < 1e-300 {
            return None;
        }
        rem = 1.0 / frac;
    }
    None
}
