//! Leibniz algebras given by structure constants.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{Field, Tolerance, C64};
use crate::linalg::{Matrix, Subspace};

/// A finite-dimensional algebra with product `b_i b_j = Σ_k c^k_{ij} b_k`.
///
/// Construction does not enforce the Leibniz identity; call
/// [`verify_leibniz`](Self::verify_leibniz) to check it. Indices are 0-based.
#[derive(Debug, Clone, PartialEq)]
pub struct LeibnizAlgebra<F> {
    dim: usize,
    /// `c^k_{ij}` at `(i * dim + j) * dim + k`.
    constants: Vec<F>,
    labels: Option<Vec<String>>,
    tol: Tolerance,
}

/// One basis triple where `x(yz) = (xy)z + y(xz)` fails.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<F> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// `b_i(b_j b_k) - (b_i b_j) b_k - b_j(b_i b_k)`
    pub residual: Vec<F>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LeibnizCheck<F> {
    pub violations: Vec<Violation<F>>,
}

impl<F> LeibnizCheck<F> {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IdealStatus {
    pub left: bool,
    pub right: bool,
    pub two_sided: bool,
}

/// Left, right and two-sided normalizers of a subalgebra.
///
/// There is deliberately no field called just "normalizer".
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct Normalizers<F: Field> {
    pub left: Subspace<F>,
    pub right: Subspace<F>,
    pub both: Subspace<F>,
}

impl<F: Field> LeibnizAlgebra<F> {
    pub fn new(dim: usize, constants: Vec<F>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidInput("algebra dimension must be positive".into()));
        }
        if constants.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim * dim, found: constants.len() });
        }
        Ok(LeibnizAlgebra { dim, constants, labels: None, tol: Tolerance::default() })
    }

    /// Build from the nonzero basis products `(i, j, b_i b_j)`.
    pub fn from_products<I>(dim: usize, products: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<F>)>,
    {
        let mut constants = vec![F::zero(); dim * dim * dim];
        for (i, j, coeffs) in products {
            if i >= dim || j >= dim {
                return Err(Error::InvalidInput(format!("basis index ({i}, {j}) out of range")));
            }
            if coeffs.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: coeffs.len() });
            }
            let base = (i * dim + j) * dim;
            constants[base..base + dim].clone_from_slice(&coeffs);
        }
        LeibnizAlgebra::new(dim, constants)
    }

    /// The algebra with every product zero.
    pub fn abelian(dim: usize) -> Result<Self> {
        LeibnizAlgebra::new(dim, vec![F::zero(); dim * dim * dim])
    }

    pub fn with_tolerance(mut self, tol: Tolerance) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: labels.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tolerance(&self) -> &Tolerance {
        &self.tol
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &F {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// `b_i b_j` as a coordinate vector.
    pub fn basis_product(&self, i: usize, j: usize) -> &[F] {
        let base = (i * self.dim + j) * self.dim;
        &self.constants[base..base + self.dim]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim];
        v[i] = F::one();
        v
    }

    pub fn map_scalars<G: Field>(&self, f: impl Fn(&F) -> G) -> LeibnizAlgebra<G> {
        LeibnizAlgebra {
            dim: self.dim,
            constants: self.constants.iter().map(f).collect(),
            labels: self.labels.clone(),
            tol: self.tol,
        }
    }

    pub fn to_c64(&self) -> LeibnizAlgebra<C64> {
        self.map_scalars(F::to_c64)
    }

    fn check_len(&self, v: &[F]) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: v.len() });
        }
        Ok(())
    }

    pub fn product(&self, x: &[F], y: &[F]) -> Result<Vec<F>> {
        self.check_len(x)?;
        self.check_len(y)?;
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for (i, xi) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (j, yj) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                let w = xi.clone() * yj.clone();
                for (k, c) in self.basis_product(i, j).iter().enumerate() {
                    if !c.is_zero() {
                        out[k] = out[k].clone() + w.clone() * c.clone();
                    }
                }
            }
        }
        Ok(out)
    }

    /// Check `x(yz) = (xy)z + y(xz)` on all basis triples.
    pub fn verify_leibniz(&self) -> LeibnizCheck<F> {
        let n = self.dim;
        let e: Vec<Vec<F>> = (0..n).map(|i| self.basis_vector(i)).collect();
        let mut violations = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let p = |x: &[F], y: &[F]| self.product(x, y).expect("basis vectors have length n");
                    let lhs = p(&e[i], self.basis_product(j, k));
                    let t1 = p(self.basis_product(i, j), &e[k]);
                    let t2 = p(&e[j], self.basis_product(i, k));
                    let residual: Vec<F> = (0..n)
                        .map(|m| lhs[m].clone() - t1[m].clone() - t2[m].clone())
                        .collect();
                    let scale = [&lhs, &t1, &t2]
                        .iter()
                        .flat_map(|v| v.iter().map(F::modulus))
                        .fold(1.0, f64::max);
                    if !residual.iter().all(|r| r.is_negligible(self.tol.eps_cmp * scale)) {
                        violations.push(Violation { i, j, k, residual });
                    }
                }
            }
        }
        LeibnizCheck { violations }
    }

    /// Matrix of `y ↦ x y`.
    pub fn left_mult(&self, x: &[F]) -> Result<Matrix<F>> {
        self.check_len(x)?;
        let cols = (0..self.dim)
            .map(|j| self.product(x, &self.basis_vector(j)))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&cols, self.dim)
    }

    /// Matrix of `y ↦ y x`.
    pub fn right_mult(&self, x: &[F]) -> Result<Matrix<F>> {
        self.check_len(x)?;
        let cols = (0..self.dim)
            .map(|j| self.product(&self.basis_vector(j), x))
            .collect::<Result<Vec<_>>>()?;
        Matrix::from_columns(&cols, self.dim)
    }

    /// Span of all squares, via `b_i b_i` and `b_i b_j + b_j b_i`.
    pub fn leib_ideal(&self) -> Subspace<F> {
        let n = self.dim;
        let mut gens = Vec::new();
        for i in 0..n {
            gens.push(self.basis_product(i, i).to_vec());
            for j in i + 1..n {
                let s = self
                    .basis_product(i, j)
                    .iter()
                    .zip(self.basis_product(j, i))
                    .map(|(a, b)| a.clone() + b.clone())
                    .collect();
                gens.push(s);
            }
        }
        Subspace::span(&gens, n, &self.tol).expect("products have length n")
    }

    fn check_subspace(&self, s: &Subspace<F>) -> Result<()> {
        if s.ambient() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: s.ambient() });
        }
        Ok(())
    }

    /// `span{u v : u ∈ U, v ∈ V}`.
    pub fn subspace_product(&self, u: &Subspace<F>, v: &Subspace<F>) -> Result<Subspace<F>> {
        self.check_subspace(u)?;
        self.check_subspace(v)?;
        let vb = v.basis_vectors();
        let mut gens = Vec::new();
        for x in u.basis_vectors() {
            for y in &vb {
                gens.push(self.product(&x, y)?);
            }
        }
        Subspace::span(&gens, self.dim, &self.tol)
    }

    pub fn is_subalgebra(&self, s: &Subspace<F>) -> Result<bool> {
        s.contains(&self.subspace_product(s, s)?, &self.tol)
    }

    pub fn ideal_check(&self, s: &Subspace<F>) -> Result<IdealStatus> {
        let full = Subspace::full(self.dim);
        let left = s.contains(&self.subspace_product(&full, s)?, &self.tol)?;
        let right = s.contains(&self.subspace_product(s, &full)?, &self.tol)?;
        Ok(IdealStatus { left, right, two_sided: left && right })
    }

    /// `{x : x S ⊆ S}` and `{x : S x ⊆ S}`, each as the kernel of
    /// `x ↦ (x s_j mod S)_j` (resp. `s_j x mod S`).
    pub fn normalizers(&self, s: &Subspace<F>) -> Result<Normalizers<F>> {
        self.check_subspace(s)?;
        let basis = s.basis_vectors();
        let build = |left: bool| -> Result<Subspace<F>> {
            let mut columns = Vec::with_capacity(self.dim);
            for i in 0..self.dim {
                let x = self.basis_vector(i);
                let mut col = Vec::new();
                for sj in &basis {
                    let prod = if left { self.product(&x, sj)? } else { self.product(sj, &x)? };
                    col.extend(s.quotient_coords(&prod)?);
                }
                columns.push(col);
            }
            let rows = basis.len() * (self.dim - s.dim());
            if rows == 0 {
                return Ok(Subspace::full(self.dim));
            }
            Ok(Matrix::from_columns(&columns, rows)?.kernel(&self.tol))
        };
        let left = build(true)?;
        let right = build(false)?;
        let both = left.intersect(&right, &self.tol)?;
        Ok(Normalizers { left, right, both })
    }

    /// Structure constants of a subalgebra in its canonical basis.
    pub fn induced(&self, s: &Subspace<F>) -> Result<LeibnizAlgebra<F>> {
        self.check_subspace(s)?;
        let basis = s.basis_vectors();
        let d = basis.len();
        if d == 0 {
            return Err(Error::InvalidInput("cannot induce an algebra on the zero subspace".into()));
        }
        let mut products = Vec::new();
        for (i, x) in basis.iter().enumerate() {
            for (j, y) in basis.iter().enumerate() {
                let p = self.product(x, y)?;
                let coords = s.coords_of(&p, &self.tol).map_err(|_| Error::NotClosed)?;
                products.push((i, j, coords));
            }
        }
        Ok(LeibnizAlgebra::from_products(d, products)?.with_tolerance(self.tol))
    }

    /// Quotient by a two-sided ideal, in coordinates on the complement of its pivots.
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<LeibnizAlgebra<F>> {
        if !self.ideal_check(ideal)?.two_sided {
            return Err(Error::InvalidInput("quotient requires a two-sided ideal".into()));
        }
        let idx = ideal.complement_indices();
        let d = idx.len();
        if d == 0 {
            return Err(Error::InvalidInput("quotient by the whole algebra is zero".into()));
        }
        let mut products = Vec::new();
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                products.push((a, b, ideal.quotient_coords(self.basis_product(i, j))?));
            }
        }
        Ok(LeibnizAlgebra::from_products(d, products)?.with_tolerance(self.tol))
    }

    /// Antisymmetric product: `b_i b_i = 0` and `b_i b_j = -b_j b_i`.
    pub fn is_lie(&self) -> bool {
        let eps = self.tol.eps_cmp;
        (0..self.dim).all(|i| {
            (i..self.dim).all(|j| {
                self.basis_product(i, j)
                    .iter()
                    .zip(self.basis_product(j, i))
                    .all(|(a, b)| (a.clone() + b.clone()).is_negligible(eps))
            })
        })
    }
}
