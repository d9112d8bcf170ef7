//! Derivations and the Killing form.

use serde::Serialize;

use crate::algebra::LeibnizAlgebra;
use crate::cyclic::{build_cyclic, CyclicPresentation};
use crate::error::{Error, Result};
use crate::exactnum::Field;
use crate::linalg::{Matrix, Subspace};
use crate::series::is_solvable;

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct DerivationSpace<F: Field> {
    /// Canonical basis of all derivations; column `l` of each matrix is `D(b_l)`.
    pub basis: Vec<Matrix<F>>,
    /// Canonical basis of `{L_x : x ∈ A}`.
    pub inner_basis: Vec<Matrix<F>>,
    pub outer_dim: usize,
}

impl<F: Field> DerivationSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn inner_dim(&self) -> usize {
        self.inner_basis.len()
    }
}

fn flatten<F: Field>(m: &Matrix<F>) -> Vec<F> {
    m.entries().to_vec()
}

fn unflatten<F: Field>(v: &[F], n: usize) -> Matrix<F> {
    Matrix::from_fn(n, n, |k, l| v[k * n + l].clone())
}

/// Solve `D(b_i b_j) = (D b_i) b_j + b_i (D b_j)` for all `i, j`.
pub fn derivations<F: Field>(alg: &LeibnizAlgebra<F>) -> Result<DerivationSpace<F>> {
    let n = alg.dim();
    let tol = alg.tolerance();
    let c = |i: usize, j: usize, k: usize| alg.constant(i, j, k).clone();
    // Unknown D_{kl} sits at k * n + l.
    let mut rows = Vec::with_capacity(n * n * n);
    for i in 0..n {
        for j in 0..n {
            for m in 0..n {
                let mut row = vec![F::zero(); n * n];
                for k in 0..n {
                    row[m * n + k] = row[m * n + k].clone() + c(i, j, k);
                    row[k * n + i] = row[k * n + i].clone() - c(k, j, m);
                    row[k * n + j] = row[k * n + j].clone() - c(i, k, m);
                }
                rows.push(row);
            }
        }
    }
    let system = Matrix::from_rows_with_cols(rows, n * n)?;
    let space = system.kernel(tol);
    let basis: Vec<_> = space.basis_vectors().iter().map(|v| unflatten(v, n)).collect();
    let lefts = (0..n)
        .map(|i| alg.left_mult(&alg.basis_vector(i)).map(|m| flatten(&m)))
        .collect::<Result<Vec<_>>>()?;
    let inner = Subspace::span(&lefts, n * n, tol)?;
    let inner_basis: Vec<_> = inner.basis_vectors().iter().map(|v| unflatten(v, n)).collect();
    let outer_dim = basis.len() - inner_basis.len();
    Ok(DerivationSpace { basis, inner_basis, outer_dim })
}

/// Largest residual of the derivation identity over basis pairs.
pub fn derivation_residual<F: Field>(alg: &LeibnizAlgebra<F>, d: &Matrix<F>) -> Result<f64> {
    let n = alg.dim();
    if d.rows() != n || d.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, found: d.rows().max(d.cols()) });
    }
    let mut worst: f64 = 0.0;
    for i in 0..n {
        let di = d.column(i);
        for j in 0..n {
            let dj = d.column(j);
            let lhs = d.mul_vec(alg.basis_product(i, j))?;
            let r1 = alg.product(&di, &alg.basis_vector(j))?;
            let r2 = alg.product(&alg.basis_vector(i), &dj)?;
            for k in 0..n {
                let r = lhs[k].clone() - r1[k].clone() - r2[k].clone();
                worst = worst.max(r.modulus());
            }
        }
    }
    Ok(worst)
}

pub fn is_derivation<F: Field>(alg: &LeibnizAlgebra<F>, d: &Matrix<F>) -> Result<bool> {
    let r = derivation_residual(alg, d)?;
    let scale = d.max_modulus().max(1.0);
    Ok(if F::is_exact() { r == 0.0 } else { r <= alg.tolerance().eps_cmp * scale })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct KillingReport<F: Field> {
    /// `κ(b_i, b_j) = tr(L_{b_i} L_{b_j})`
    pub gram: Matrix<F>,
    /// `A^⊥`, the kernel of the Gram matrix.
    pub radical: Subspace<F>,
    pub trivial: bool,
    pub radical_equals_leib: bool,
    pub radical_equals_whole: bool,
}

pub fn killing<F: Field>(alg: &LeibnizAlgebra<F>) -> Result<KillingReport<F>> {
    let n = alg.dim();
    let tol = alg.tolerance();
    let lefts = (0..n)
        .map(|i| alg.left_mult(&alg.basis_vector(i)))
        .collect::<Result<Vec<_>>>()?;
    let mut gram = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            gram[(i, j)] = lefts[i].try_mul(&lefts[j])?.trace();
        }
    }
    let radical = gram.kernel(tol);
    let trivial = radical.is_full();
    Ok(KillingReport {
        radical_equals_leib: radical.equals(&alg.leib_ideal(), tol),
        radical_equals_whole: trivial,
        trivial,
        radical,
        gram,
    })
}

/// `rad(A)`, available only when `A` itself is solvable.
pub fn solvable_radical<F: Field>(alg: &LeibnizAlgebra<F>) -> Result<Subspace<F>> {
    if is_solvable(alg)? {
        Ok(Subspace::full(alg.dim()))
    } else {
        Err(Error::Unsupported("the radical is only computed for solvable algebras".into()))
    }
}

/// The ingredients of the two "does not imply semisimple" observations.
///
/// No semisimplicity verdict is given. A flag is set when its hypothesis
/// holds while `rad(A) = A ≠ 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct SemisimplicityReport<F: Field> {
    pub solvable: bool,
    pub killing_radical: Subspace<F>,
    pub leib: Subspace<F>,
    /// `Leib(A) = A^⊥` and `A` is solvable.
    pub leib_equals_perp_not_sufficient: bool,
    /// `rad(A) = A^⊥` and `A` is solvable.
    pub rad_equals_perp_not_sufficient: bool,
}

pub fn semisimplicity_counterexamples<F: Field>(
    p: &CyclicPresentation<F>,
) -> Result<SemisimplicityReport<F>> {
    if p.dim() != 3 {
        return Err(Error::WrongDimension { expected: 3, found: p.dim() });
    }
    let alg = build_cyclic(p);
    let solvable = is_solvable(&alg)?;
    let k = killing(&alg)?;
    Ok(SemisimplicityReport {
        solvable,
        leib_equals_perp_not_sufficient: solvable && k.radical_equals_leib,
        rad_equals_perp_not_sufficient: solvable && k.radical_equals_whole,
        killing_radical: k.radical,
        leib: alg.leib_ideal(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{gaussian, GaussianRational, C64};

    type Q = GaussianRational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn cyc(a: Q, b: Q) -> LeibnizAlgebra<Q> {
        build_cyclic(&CyclicPresentation::dim3(a, b))
    }

    fn m(rows: [[Q; 3]; 3]) -> Matrix<Q> {
        Matrix::from_rows(rows.into_iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn derivation_dimensions() {
        let nil = derivations(&cyc(q(0), q(0))).unwrap();
        assert_eq!((nil.dim(), nil.inner_dim(), nil.outer_dim), (3, 1, 2));
        let t2 = derivations(&cyc(q(0), q(1))).unwrap();
        assert_eq!((t2.dim(), t2.inner_dim(), t2.outer_dim), (2, 1, 1));
        let t3 = derivations(&cyc(q(1), gaussian(0, 2))).unwrap();
        assert_eq!((t3.dim(), t3.inner_dim(), t3.outer_dim), (2, 1, 1));
        for d in nil.basis.iter().chain(&t2.basis) {
            assert!(is_derivation(&cyc(q(0), q(0)), d).unwrap() || is_derivation(&cyc(q(0), q(1)), d).unwrap());
        }
    }

    #[test]
    fn parametrized_families() {
        let (z, o) = (q(0), q(1));
        let nil = cyc(q(0), q(0));
        // α₁ = 1
        assert!(is_derivation(&nil, &m([[o.clone(), z.clone(), z.clone()], [z.clone(), q(2), z.clone()], [z.clone(), z.clone(), q(3)]])).unwrap());
        let t2 = cyc(q(0), q(1));
        // α₃ = 1
        assert!(is_derivation(&t2, &m([[z.clone(), z.clone(), z.clone()], [z.clone(), z.clone(), z.clone()], [o.clone(), o.clone(), o.clone()]])).unwrap());
        let g = gaussian(2, -1);
        let t3 = cyc(q(1), g.clone());
        // α₃ = 1: columns (0,0,1), (0,1,γ), (0,γ,γ²+1)
        let d = m([
            [z.clone(), z.clone(), z.clone()],
            [z.clone(), o.clone(), g.clone()],
            [o.clone(), g.clone(), g.clone() * g.clone() + o.clone()],
        ]);
        assert!(is_derivation(&t3, &d).unwrap());
    }

    #[test]
    fn derivation_checks() {
        let t2 = cyc(q(0), q(1));
        assert!(is_derivation(&t2, &t2.left_mult(&[q(1), q(2), q(3)]).unwrap()).unwrap());
        assert!(!is_derivation(&t2, &Matrix::identity(3)).unwrap());
        let ab = LeibnizAlgebra::<Q>::abelian(3).unwrap();
        assert!(is_derivation(&ab, &Matrix::from_fn(3, 3, |i, j| q((i * 3 + j) as i64))).unwrap());
    }

    #[test]
    fn commutators_stay_derivations() {
        let alg = cyc(q(1), q(3));
        let ds = derivations(&alg).unwrap();
        for a in &ds.basis {
            for b in &ds.basis {
                let c = &(a * b) - &(b * a);
                assert!(is_derivation(&alg, &c).unwrap());
            }
        }
    }

    #[test]
    fn killing_forms() {
        let nil = killing(&cyc(q(0), q(0))).unwrap();
        assert!(nil.trivial && nil.gram.is_negligible(0.0));
        let t2 = killing(&cyc(q(0), q(1))).unwrap();
        assert_eq!(t2.gram[(0, 0)], q(1));
        assert!(t2.radical_equals_leib && !t2.trivial);
        let t3 = killing(&cyc(q(1), q(1))).unwrap();
        assert_eq!(t3.gram[(0, 0)], q(3));
        assert!(t3.radical_equals_leib);
        let g = C64::new(0.0, 2f64.sqrt());
        let alg = build_cyclic(&CyclicPresentation::dim3(C64::new(1.0, 0.0), g));
        let k = killing(&alg).unwrap();
        assert!(k.gram[(0, 0)].norm() < 1e-9);
        assert!(k.radical_equals_whole);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(t2.gram[(i, j)], t2.gram[(j, i)]);
            }
        }
    }

    #[test]
    fn counterexample_flags() {
        let r = semisimplicity_counterexamples(&CyclicPresentation::dim3(q(1), q(1))).unwrap();
        assert!(r.solvable && r.leib_equals_perp_not_sufficient && !r.rad_equals_perp_not_sufficient);
        let p = CyclicPresentation::dim3(C64::new(1.0, 0.0), C64::new(0.0, 2f64.sqrt()));
        let r = semisimplicity_counterexamples(&p).unwrap();
        assert!(r.solvable && r.rad_equals_perp_not_sufficient);
        assert!(solvable_radical(&cyc(q(0), q(1))).unwrap().is_full());
    }
}
