use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{self, Deserializer};
use serde::ser::{SerializeTuple, Serializer};
use serde::{Deserialize, Serialize};

use super::field::{Field, GaussianRational, C64};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Backend::Exact => f.write_str("exact"),
            Backend::Float => f.write_str("float"),
        }
    }
}

/// Numerical thresholds for the float backend. Exact computations ignore them.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    /// Relative pivot threshold for rank decisions.
    pub eps_rank: f64,
    /// Radius within which computed roots are treated as one repeated root.
    pub eps_root: f64,
    /// Absolute threshold for scalar and entrywise comparisons.
    pub eps_cmp: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance { eps_rank: 1e-9, eps_root: 1e-7, eps_cmp: 1e-9 }
    }
}

impl Tolerance {
    pub fn new(eps_rank: f64, eps_root: f64, eps_cmp: f64) -> Result<Self> {
        for (name, v) in [("eps_rank", eps_rank), ("eps_root", eps_root), ("eps_cmp", eps_cmp)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidTolerance(format!("{name} must be positive, got {v}")));
            }
        }
        Ok(Tolerance { eps_rank, eps_root, eps_cmp })
    }

    /// Set `eps_rank` and `eps_cmp` to `eps`, keeping the default ratio for `eps_root`.
    pub fn scaled(eps: f64) -> Result<Self> {
        let d = Tolerance::default();
        Tolerance::new(eps, eps * d.eps_root / d.eps_rank, eps * d.eps_cmp / d.eps_rank)
    }

    pub fn with_eps_root(self, eps_root: f64) -> Result<Self> {
        Tolerance::new(self.eps_rank, eps_root, self.eps_cmp)
    }
}

/// A complex number tagged with its backend.
#[derive(Debug, Clone, PartialEq)]
pub enum Scalar {
    Exact(GaussianRational),
    Float(C64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Exact(_) => Backend::Exact,
            Scalar::Float(_) => Backend::Float,
        }
    }

    pub fn exact(re: (i64, i64), im: (i64, i64)) -> Scalar {
        Scalar::Exact(Complex::new(ratio(re.0, re.1), ratio(im.0, im.1)))
    }

    pub fn float(re: f64, im: f64) -> Scalar {
        Scalar::Float(C64::new(re, im))
    }

    /// One-way conversion to the float backend.
    pub fn to_float(&self) -> Scalar {
        match self {
            Scalar::Exact(v) => Scalar::Float(v.to_c64()),
            Scalar::Float(v) => Scalar::Float(*v),
        }
    }

    pub fn to_c64(&self) -> C64 {
        match self {
            Scalar::Exact(v) => v.to_c64(),
            Scalar::Float(v) => *v,
        }
    }
}

pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Field arithmetic on two scalars of the same backend.
pub fn scalar_arith(x: &Scalar, y: &Scalar, op: ArithOp, tol: &Tolerance) -> Result<Scalar> {
    match (x, y) {
        (Scalar::Exact(a), Scalar::Exact(b)) => {
            if op == ArithOp::Div && b.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Scalar::Exact(apply(a.clone(), b.clone(), op)))
        }
        (Scalar::Float(a), Scalar::Float(b)) => {
            if op == ArithOp::Div && b.norm() <= tol.eps_cmp {
                return Err(Error::DivisionByZero);
            }
            Ok(Scalar::Float(apply(*a, *b, op)))
        }
        _ => Err(Error::BackendMismatch(x.backend(), y.backend())),
    }
}

fn apply<F: Field>(a: F, b: F, op: ArithOp) -> F {
    match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a / b,
    }
}

/// Square root on the branch whose argument lies in `[0, π)`.
///
/// Agrees with the usual principal root on the closed upper half-plane and
/// on the positive reals; `-1` maps to `i`.
pub fn sqrt_principal(x: C64) -> C64 {
    if x.re == 0.0 && x.im == 0.0 {
        return C64::new(0.0, 0.0);
    }
    let r = x.sqrt();
    let arg = r.im.atan2(r.re);
    if (0.0..std::f64::consts::PI).contains(&arg) {
        r
    } else {
        -r
    }
}

fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form of an exact scalar: `"p/q"`, `"r/si"` or `"p/q+r/si"`,
/// with a unit imaginary coefficient written as plain `i`.
pub fn format_gaussian(z: &GaussianRational) -> String {
    let imag = |r: &BigRational| if r.is_one() { "i".to_string() } else { format!("{}i", format_rational(r)) };
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => format_rational(&z.re),
        (true, false) if z.im.is_negative() => format!("-{}", imag(&z.im.abs())),
        (true, false) => imag(&z.im),
        (false, false) => {
            let sign = if z.im.is_negative() { '-' } else { '+' };
            format!("{}{}{}", format_rational(&z.re), sign, imag(&z.im.abs()))
        }
    }
}

fn parse_rational(s: &str) -> Option<BigRational> {
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let valid = |t: &str, signed: bool| {
        let digits = if signed { t.strip_prefix(['+', '-']).unwrap_or(t) } else { t };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return None;
    }
    let n: BigInt = num.trim_start_matches('+').parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

/// Parse `"p/q"`, `"p/q+r/s i"`, `"2i"`, `"-i"` and similar; whitespace is ignored.
pub fn parse_gaussian(text: &str) -> Result<GaussianRational> {
    let err = || Error::ScalarParse(text.to_string());
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(err());
    }
    let Some(body) = s.strip_suffix('i') else {
        return Ok(Complex::new(parse_rational(&s).ok_or_else(err)?, BigRational::zero()));
    };
    // Split at the last sign that is not the leading one.
    let split = body
        .char_indices()
        .rev()
        .find(|&(idx, c)| idx > 0 && (c == '+' || c == '-'))
        .map(|(idx, _)| idx);
    let (re_txt, im_txt) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("", body),
    };
    let re = if re_txt.is_empty() {
        BigRational::zero()
    } else {
        parse_rational(re_txt).ok_or_else(err)?
    };
    let im = match im_txt {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        t => parse_rational(t).ok_or_else(err)?,
    };
    Ok(Complex::new(re, im))
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Scalar::Exact(z) => serializer.serialize_str(&format_gaussian(z)),
            Scalar::Float(z) => {
                let mut t = serializer.serialize_tuple(2)?;
                t.serialize_element(&z.re)?;
                t.serialize_element(&z.im)?;
                t.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Text(String),
            Pair([f64; 2]),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Text(s) => parse_gaussian(&s).map(Scalar::Exact).map_err(de::Error::custom),
            Repr::Pair([re, im]) => Ok(Scalar::Float(C64::new(re, im))),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(z) => f.write_str(&format_gaussian(z)),
            Scalar::Float(z) => write!(f, "{}{:+}i", z.re, z.im),
        }
    }
}
