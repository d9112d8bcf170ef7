use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::Matrix;
use crate::error::{Error, Result};
use crate::exactnum::{Field, Tolerance};

/// A subspace of `F^n`, stored as the nonzero rows of its reduced row echelon basis.
///
/// The echelon form is the canonical representative, so two subspaces are
/// equal exactly when their bases agree entrywise (within `eps_cmp` on the
/// float backend).
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::zeros(0, ambient), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: Matrix::identity(ambient), pivots: (0..ambient).collect() }
    }

    /// Canonical basis of the span of `vectors`.
    pub fn span(vectors: &[Vec<F>], ambient: usize, tol: &Tolerance) -> Result<Self> {
        let m = Matrix::from_rows_with_cols(vectors.to_vec(), ambient)?;
        Ok(Subspace::from_rows_matrix(&m, tol))
    }

    /// Canonical basis of the row space of `m`.
    pub fn from_rows_matrix(m: &Matrix<F>, tol: &Tolerance) -> Self {
        let r = m.rref(tol);
        let rows = r.matrix.row_vectors().into_iter().take(r.rank).collect();
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows_with_cols(rows, m.cols()).expect("rows have ambient length"),
            pivots: r.pivots,
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<F>> {
        self.basis.row_vectors()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots; they parametrize the quotient `F^n / self`.
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    fn check_ambient(&self, other: usize) -> Result<()> {
        if self.ambient != other {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other });
        }
        Ok(())
    }

    /// `v` minus its component along the basis; zero exactly on members.
    pub fn reduce(&self, v: &[F]) -> Result<Vec<F>> {
        self.check_ambient(v.len())?;
        let mut out = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = out[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                out[j] = out[j].clone() - c.clone() * b.clone();
            }
        }
        Ok(out)
    }

    /// Coordinates of `v + self` in the quotient, read off the complement indices.
    pub fn quotient_coords(&self, v: &[F]) -> Result<Vec<F>> {
        let r = self.reduce(v)?;
        Ok(self.complement_indices().into_iter().map(|j| r[j].clone()).collect())
    }

    /// Coefficients of a member `v` in the echelon basis (the pivot entries of `v`).
    pub fn coords_of(&self, v: &[F], tol: &Tolerance) -> Result<Vec<F>> {
        if !self.contains_vector(v, tol)? {
            return Err(Error::InvalidInput("vector is not in the subspace".into()));
        }
        Ok(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn contains_vector(&self, v: &[F], tol: &Tolerance) -> Result<bool> {
        let scale = v.iter().map(F::modulus).fold(1.0, f64::max);
        Ok(self.reduce(v)?.iter().all(|x| x.is_negligible(tol.eps_cmp * scale)))
    }

    pub fn contains(&self, other: &Self, tol: &Tolerance) -> Result<bool> {
        self.check_ambient(other.ambient)?;
        for v in other.basis_vectors() {
            if !self.contains_vector(&v, tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Canonical-form comparison.
    pub fn equals(&self, other: &Self, tol: &Tolerance) -> bool {
        self.ambient == other.ambient
            && self.pivots == other.pivots
            && self.basis.approx_eq(&other.basis, tol.eps_cmp)
    }

    pub fn sum(&self, other: &Self, tol: &Tolerance) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        Ok(Subspace::from_rows_matrix(&self.basis.vstack(&other.basis)?, tol))
    }

    /// `{w : <v, w> = 0 for all v in self}` under the plain bilinear pairing.
    pub fn annihilator(&self, tol: &Tolerance) -> Self {
        self.basis.kernel(tol)
    }

    /// Intersection as the common solution set of both annihilator systems.
    pub fn intersect(&self, other: &Self, tol: &Tolerance) -> Result<Self> {
        self.check_ambient(other.ambient)?;
        let system = self.annihilator(tol).basis.vstack(&other.annihilator(tol).basis)?;
        Ok(system.kernel(tol))
    }

    /// Image of the subspace under `m`.
    pub fn map(&self, m: &Matrix<F>, tol: &Tolerance) -> Result<Self> {
        self.check_ambient(m.cols())?;
        let images = self
            .basis_vectors()
            .iter()
            .map(|v| m.mul_vec(v))
            .collect::<Result<Vec<_>>>()?;
        Subspace::span(&images, m.rows(), tol)
    }

    pub fn is_invariant_under(&self, m: &Matrix<F>, tol: &Tolerance) -> Result<bool> {
        self.contains(&self.map(m, tol)?, tol)
    }

    pub fn to_c64(&self) -> Subspace<crate::exactnum::C64> {
        Subspace { ambient: self.ambient, basis: self.basis.map(F::to_c64), pivots: self.pivots.clone() }
    }
}

impl<F: Field> Serialize for Subspace<F> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Subspace", 2)?;
        s.serialize_field("ambient", &self.ambient)?;
        s.serialize_field("basis", &self.basis)?;
        s.end()
    }
}
