use std::fmt;
use std::ops::{Add, Mul, Sub};

use super::field::{Field, C64};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Univariate polynomial, coefficients in ascending degree.
///
/// Trailing zero coefficients are trimmed, so the zero polynomial has no
/// coefficients at all.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Poly::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Poly::new(vec![F::zero(), F::one()])
    }

    /// `x - root`
    pub fn linear(root: F) -> Self {
        Poly::new(vec![-root, F::one()])
    }

    /// `Π (x - λ)^m`
    pub fn from_roots(roots: &[(F, usize)]) -> Self {
        roots
            .iter()
            .fold(Poly::constant(F::one()), |acc, (r, m)| &acc * &Poly::linear(r.clone()).pow(*m))
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs.iter().rev().fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Poly::constant(F::one()), |acc, _| &acc * self)
    }

    /// Synthetic division by `x - root`: returns quotient and remainder.
    pub fn div_rem_linear(&self, root: &F) -> (Self, F) {
        if self.coeffs.is_empty() {
            return (Poly::zero(), F::zero());
        }
        let n = self.coeffs.len();
        let mut q = vec![F::zero(); n - 1];
        let mut carry = F::zero();
        for k in (0..n).rev() {
            let v = self.coeffs[k].clone() + carry.clone() * root.clone();
            if k == 0 {
                return (Poly::new(q), v);
            }
            q[k - 1] = v.clone();
            carry = v;
        }
        unreachable!()
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn to_c64(&self) -> Poly<C64> {
        self.map(|c| c.to_c64())
    }

    /// Horner evaluation `p(M)`.
    pub fn eval_matrix(&self, m: &Matrix<F>) -> Result<Matrix<F>> {
        if m.rows() != m.cols() {
            return Err(Error::DimensionMismatch { expected: m.rows(), found: m.cols() });
        }
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &Matrix::identity(n).scale(c);
        }
        Ok(acc)
    }
}

impl<F: Field> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: Self) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Poly<F>, k: usize| p.coeffs.get(k).cloned().unwrap_or_else(F::zero);
        Poly::new((0..n).map(|k| get(self, k) + get(rhs, k)).collect())
    }
}

impl<F: Field> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: Self) -> Poly<F> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &Poly<F>, k: usize| p.coeffs.get(k).cloned().unwrap_or_else(F::zero);
        Poly::new((0..n).map(|k| get(self, k) - get(rhs, k)).collect())
    }
}

impl<F: Field> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: Self) -> Poly<F> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let c = c.to_scalar();
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        Ok(())
    }
}
