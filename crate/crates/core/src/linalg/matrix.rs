use std::ops::{Add, Index, IndexMut, Mul, Sub};

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use super::Subspace;
use crate::error::{Error, Result};
use crate::exactnum::{Field, Tolerance};

#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Reduced row echelon form together with its rank and pivot columns.
#[derive(Debug, Clone, PartialEq)]
pub struct Rref<F> {
    pub matrix: Matrix<F>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Matrix::from_rows_with_cols(rows, cols)
    }

    /// Like [`from_rows`](Self::from_rows) but keeps the column count when there are no rows.
    pub fn from_rows_with_cols(rows: Vec<Vec<F>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            if r.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: r.len() });
            }
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(columns: &[Vec<F>], rows: usize) -> Result<Self> {
        for c in columns {
            if c.len() != rows {
                return Err(Error::DimensionMismatch { expected: rows, found: c.len() });
            }
        }
        Ok(Matrix::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vectors(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out: Matrix<F> = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
            })
            .collect())
    }

    pub fn pow(&self, k: usize) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let mut acc = Matrix::identity(self.rows);
        for _ in 0..k {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Stack `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix { rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn max_modulus(&self) -> f64 {
        self.data.iter().map(F::modulus).fold(0.0, f64::max)
    }

    pub fn is_negligible(&self, eps: f64) -> bool {
        self.data.iter().all(|v| v.is_negligible(eps))
    }

    pub fn approx_eq(&self, other: &Self, eps: f64) -> bool {
        self.rows == other.rows
            && self.cols == other.cols
            && self.data.iter().zip(&other.data).all(|(a, b)| a.approx_eq(b, eps))
    }

    /// Threshold under which a float pivot counts as zero.
    ///
    /// Relative to the largest entry, floored at unit scale so that a matrix
    /// of pure rounding noise has rank zero.
    fn pivot_threshold(&self, tol: &Tolerance) -> f64 {
        tol.eps_rank * self.max_modulus().max(1.0)
    }

    /// Reduced row echelon form.
    ///
    /// Float matrices use partial pivoting and flush entries below the pivot
    /// threshold to zero, so the result is clean enough to compare entrywise.
    pub fn rref(&self, tol: &Tolerance) -> Rref<F> {
        let mut m = self.clone();
        let thresh = self.pivot_threshold(tol);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let candidate = if F::is_exact() {
                (row..m.rows).find(|&r| !m[(r, col)].is_zero())
            } else {
                (row..m.rows)
                    .map(|r| (r, m[(r, col)].modulus()))
                    .filter(|&(_, v)| v > thresh)
                    .max_by(|a, b| a.1.total_cmp(&b.1))
                    .map(|(r, _)| r)
            };
            let Some(p) = candidate else {
                if !F::is_exact() {
                    for r in row..m.rows {
                        m[(r, col)] = F::zero();
                    }
                }
                continue;
            };
            m.swap_rows(p, row);
            let inv = F::one() / m[(row, col)].clone();
            for j in col..m.cols {
                m[(row, j)] = m[(row, j)].clone() * inv.clone();
            }
            m[(row, col)] = F::one();
            for r in 0..m.rows {
                if r == row || m[(r, col)].is_zero() {
                    continue;
                }
                let factor = m[(r, col)].clone();
                for j in col..m.cols {
                    let sub = factor.clone() * m[(row, j)].clone();
                    m[(r, j)] = m[(r, j)].clone() - sub;
                }
                m[(r, col)] = F::zero();
            }
            pivots.push(col);
            row += 1;
        }
        if !F::is_exact() {
            for r in row..m.rows {
                for j in 0..m.cols {
                    m[(r, j)] = F::zero();
                }
            }
            let eps = tol.eps_cmp.min(thresh);
            for v in &mut m.data {
                if v.is_negligible(eps) && !v.is_zero() {
                    *v = F::zero();
                }
            }
        }
        Rref { matrix: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self, tol: &Tolerance) -> usize {
        self.rref(tol).rank
    }

    /// `{v : M v = 0}` in canonical form.
    pub fn kernel(&self, tol: &Tolerance) -> Subspace<F> {
        let r = self.rref(tol);
        let free: Vec<usize> = (0..self.cols).filter(|c| !r.pivots.contains(c)).collect();
        let vectors: Vec<Vec<F>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (i, &p) in r.pivots.iter().enumerate() {
                    v[p] = -r.matrix[(i, f)].clone();
                }
                v
            })
            .collect();
        // The vectors above are already in reduced echelon form up to order.
        Subspace::span(&vectors, self.cols, tol).expect("kernel vectors have ambient length")
    }

    /// Column space in canonical form.
    pub fn image(&self, tol: &Tolerance) -> Subspace<F> {
        Subspace::from_rows_matrix(&self.transpose(), tol)
    }

    /// Kernel of `M^power`; with `power` at least the size of `M` this is the
    /// Fitting null component.
    pub fn generalized_kernel(&self, power: usize, tol: &Tolerance) -> Result<Subspace<F>> {
        if power == 0 {
            return Err(Error::InvalidInput("generalized kernel needs power >= 1".into()));
        }
        Ok(self.pow(power)?.kernel(tol))
    }

    /// Kernels of `M, M^2, …` until two consecutive ones coincide.
    pub fn kernel_chain(&self, tol: &Tolerance) -> Result<Vec<Subspace<F>>> {
        let mut chain: Vec<Subspace<F>> = Vec::new();
        let mut power = self.clone();
        loop {
            let k = power.kernel(tol);
            if chain.last().is_some_and(|prev| prev.equals(&k, tol)) {
                return Ok(chain);
            }
            chain.push(k);
            power = power.try_mul(self)?;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

/// Panics on a shape mismatch; use [`Matrix::try_mul`] for fallible code paths.
impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: Self) -> Matrix<F> {
        self.try_mul(rhs).expect("matrix shapes must agree")
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: Self) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shapes must agree");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: Self) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shapes must agree");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<F: Field> Serialize for Matrix<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.rows))?;
        for i in 0..self.rows {
            let row: Vec<_> = self.row(i).iter().map(F::to_scalar).collect();
            seq.serialize_element(&row)?;
        }
        seq.end()
    }
}
