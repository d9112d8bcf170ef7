//! Lower central, derived and right-normed series, plus Engel-type conditions.

use serde::Serialize;

use crate::algebra::LeibnizAlgebra;
use crate::error::Result;
use crate::exactnum::Field;
use crate::linalg::{Matrix, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    LowerCentral,
    Derived,
    RightNormed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesVerdict {
    Nilpotent,
    Solvable,
    /// No verdict is implied; for right-normed series this holds even when
    /// the series vanishes.
    NeitherAtCutoff,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct SeriesReport<F: Field> {
    pub kind: SeriesKind,
    /// Strictly decreasing terms, starting with the whole algebra.
    pub terms: Vec<Subspace<F>>,
    pub stabilized: bool,
    pub verdict: SeriesVerdict,
    /// 1-based index of the first zero term, if any.
    pub vanishes_at: Option<usize>,
}

impl<F: Field> SeriesReport<F> {
    pub fn last(&self) -> &Subspace<F> {
        self.terms.last().expect("series starts with the whole algebra")
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

fn iterate<F: Field>(
    alg: &LeibnizAlgebra<F>,
    kind: SeriesKind,
    step: impl Fn(&Subspace<F>) -> Result<Subspace<F>>,
) -> Result<SeriesReport<F>> {
    let tol = alg.tolerance();
    let mut terms = vec![Subspace::full(alg.dim())];
    let mut stabilized = false;
    // A strictly decreasing chain in dimension n has at most n + 1 terms.
    for _ in 0..=alg.dim() {
        let last = terms.last().expect("non-empty");
        if last.is_zero() {
            stabilized = true;
            break;
        }
        let next = step(last)?;
        if next.equals(last, tol) {
            stabilized = true;
            break;
        }
        terms.push(next);
    }
    let vanishes_at = terms.iter().position(Subspace::is_zero).map(|p| p + 1);
    let verdict = match (kind, vanishes_at) {
        (SeriesKind::LowerCentral, Some(_)) => SeriesVerdict::Nilpotent,
        (SeriesKind::Derived, Some(_)) => SeriesVerdict::Solvable,
        _ => SeriesVerdict::NeitherAtCutoff,
    };
    Ok(SeriesReport { kind, terms, stabilized, verdict, vanishes_at })
}

/// `A^1 = A`, `A^{k+1} = A · A^k`.
pub fn lower_central_series<F: Field>(alg: &LeibnizAlgebra<F>) -> Result<SeriesReport<F>> {
    let full = Subspace::full(alg.dim());
    iterate(alg, SeriesKind::LowerCentral, |t| alg.subspace_product(&full, t))
}

/// `B_1 = A`, `B_{k+1} = B_k · A`: spans of right-normed products `((x_1 x_2) x_3)…`.
pub fn right_normed_series<F: Field>(alg: &LeibnizAlgebra<F>) -> Result<SeriesReport<F>> {
    let full = Subspace::full(alg.dim());
    iterate(alg, SeriesKind::RightNormed, |t| alg.subspace_product(t, &full))
}

/// `A^{(1)} = A`, `A^{(k+1)} = A^{(k)} · A^{(k)}`.
pub fn derived_series<F: Field>(alg: &LeibnizAlgebra<F>) -> Result<SeriesReport<F>> {
    iterate(alg, SeriesKind::Derived, |t| alg.subspace_product(t, t))
}

pub fn is_nilpotent<F: Field>(alg: &LeibnizAlgebra<F>) -> Result<bool> {
    Ok(lower_central_series(alg)?.verdict == SeriesVerdict::Nilpotent)
}

pub fn is_solvable<F: Field>(alg: &LeibnizAlgebra<F>) -> Result<bool> {
    Ok(derived_series(alg)?.verdict == SeriesVerdict::Solvable)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

/// How much an `all_nilpotent = true` answer covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certification {
    /// Every element's operator is nilpotent.
    Exact,
    /// Only basis elements and a finite grid of combinations were checked.
    BasisCertified,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct EngelReport<F: Field> {
    pub side: Side,
    pub all_nilpotent: bool,
    pub certification: Certification,
    /// Elements whose multiplication operator is not nilpotent.
    #[serde(serialize_with = "crate::io::ser_vectors")]
    pub witnesses: Vec<Vec<F>>,
}

fn operator<F: Field>(alg: &LeibnizAlgebra<F>, side: Side, x: &[F]) -> Result<Matrix<F>> {
    match side {
        Side::Left => alg.left_mult(x),
        Side::Right => alg.right_mult(x),
    }
}

/// Whether every word of length `n` in the operators vanishes.
///
/// Then `(Σ c_i M_i)^n = 0` for every combination, which certifies
/// nilpotency of the whole operator span, not just its basis.
fn words_vanish<F: Field>(ops: &[Matrix<F>], n: usize, eps: f64) -> Result<bool> {
    let flatten = |m: &Matrix<F>| m.entries().to_vec();
    let tol = crate::exactnum::Tolerance { eps_cmp: eps, ..Default::default() };
    let mut words = Subspace::span(&ops.iter().map(flatten).collect::<Vec<_>>(), n * n, &tol)?;
    for _ in 1..n {
        if words.is_zero() {
            return Ok(true);
        }
        let mut next = Vec::new();
        for w in words.basis_vectors() {
            let wm = Matrix::from_fn(n, n, |i, j| w[i * n + j].clone());
            for m in ops {
                next.push(flatten(&m.try_mul(&wm)?));
            }
        }
        words = Subspace::span(&next, n * n, &tol)?;
    }
    Ok(words.is_zero())
}

/// Grid coefficients used when the word test does not settle the question.
fn grid_points(n: usize) -> Vec<Vec<i64>> {
    let values: &[i64] = if n <= 4 { &[-1, 0, 1, 2] } else { &[-1, 0, 1] };
    let mut points = vec![Vec::new()];
    for _ in 0..n {
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |&v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    points.retain(|p| p.iter().any(|&v| v != 0));
    points
}

/// Are all left (or right) multiplications nilpotent?
///
/// Linearity of `x ↦ L_x` does not carry nilpotency from basis elements to
/// combinations. An `Exact` answer comes from the vanishing of all length-`n`
/// operator words; otherwise basis elements and a small integer grid are
/// checked and a `true` answer is only `BasisCertified`.
pub fn engel_condition<F: Field>(alg: &LeibnizAlgebra<F>, side: Side) -> Result<EngelReport<F>> {
    let n = alg.dim();
    let tol = alg.tolerance();
    let ops = (0..n)
        .map(|i| operator(alg, side, &alg.basis_vector(i)))
        .collect::<Result<Vec<_>>>()?;
    let scale = ops.iter().map(Matrix::max_modulus).fold(1.0, f64::max);
    let eps = tol.eps_cmp * scale.powi(n as i32);
    if words_vanish(&ops, n, tol.eps_cmp)? {
        return Ok(EngelReport { side, all_nilpotent: true, certification: Certification::Exact, witnesses: vec![] });
    }
    let mut witnesses = Vec::new();
    for (i, op) in ops.iter().enumerate() {
        if !op.pow(n)?.is_negligible(eps) {
            witnesses.push(alg.basis_vector(i));
        }
    }
    if witnesses.is_empty() {
        for p in grid_points(n) {
            let x: Vec<F> = p.iter().map(|&v| F::from_i64(v)).collect();
            if !operator(alg, side, &x)?.pow(n)?.is_negligible(eps * 2f64.powi(n as i32)) {
                witnesses.push(x);
                break;
            }
        }
    }
    Ok(EngelReport {
        side,
        all_nilpotent: witnesses.is_empty(),
        certification: Certification::BasisCertified,
        witnesses,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MaximalIdealSummary {
    pub all_two_sided: bool,
    pub all_left: bool,
    pub all_right: bool,
}

/// Aggregate [`LeibnizAlgebra::ideal_check`] over a list of maximal subalgebras.
pub fn nilpotency_via_maximals<F: Field>(
    alg: &LeibnizAlgebra<F>,
    maximals: &[Subspace<F>],
) -> Result<MaximalIdealSummary> {
    let mut summary = MaximalIdealSummary { all_two_sided: true, all_left: true, all_right: true };
    for m in maximals {
        let st = alg.ideal_check(m)?;
        summary.all_left &= st.left;
        summary.all_right &= st.right;
        summary.all_two_sided &= st.two_sided;
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{gaussian, GaussianRational, Tolerance};

    type Q = GaussianRational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn cyclic3(alpha: Q, beta: Q) -> LeibnizAlgebra<Q> {
        LeibnizAlgebra::from_products(
            3,
            vec![
                (0, 0, vec![q(0), q(1), q(0)]),
                (0, 1, vec![q(0), q(0), q(1)]),
                (0, 2, vec![q(0), alpha, beta]),
            ],
        )
        .unwrap()
    }

    fn span(vs: &[&[i64]]) -> Subspace<Q> {
        let vs: Vec<Vec<Q>> = vs.iter().map(|c| c.iter().map(|&x| q(x)).collect()).collect();
        Subspace::span(&vs, 3, &Tolerance::default()).unwrap()
    }

    #[test]
    fn lower_central_nilpotent_case() {
        let r = lower_central_series(&cyclic3(q(0), q(0))).unwrap();
        assert_eq!(r.dims(), vec![3, 2, 1, 0]);
        assert_eq!(r.terms[1], span(&[&[0, 1, 0], &[0, 0, 1]]));
        assert_eq!(r.terms[2], span(&[&[0, 0, 1]]));
        assert_eq!(r.verdict, SeriesVerdict::Nilpotent);
    }

    #[test]
    fn lower_central_type2_stabilizes() {
        let r = lower_central_series(&cyclic3(q(0), q(1))).unwrap();
        assert_eq!(r.dims(), vec![3, 2, 1]);
        assert_eq!(*r.last(), span(&[&[0, 0, 1]]));
        assert!(r.stabilized);
        assert_eq!(r.verdict, SeriesVerdict::NeitherAtCutoff);
    }

    #[test]
    fn abelian_series() {
        let ab = LeibnizAlgebra::<Q>::abelian(3).unwrap();
        assert_eq!(lower_central_series(&ab).unwrap().dims(), vec![3, 0]);
        assert_eq!(right_normed_series(&ab).unwrap().vanishes_at, Some(2));
    }

    #[test]
    fn right_normed_vanishes_at_three() {
        for alg in [cyclic3(q(0), q(1)), cyclic3(q(1), q(0)), cyclic3(q(1), gaussian(0, 2))] {
            let r = right_normed_series(&alg).unwrap();
            assert_eq!(r.vanishes_at, Some(3));
            assert_eq!(r.verdict, SeriesVerdict::NeitherAtCutoff);
            assert!(!is_nilpotent(&alg).unwrap());
        }
    }

    #[test]
    fn derived_series_solvable() {
        let r = derived_series(&cyclic3(q(0), q(1))).unwrap();
        assert_eq!(r.dims(), vec![3, 2, 0]);
        assert_eq!(r.verdict, SeriesVerdict::Solvable);
        assert!(is_solvable(&cyclic3(q(0), q(0))).unwrap());
        assert_eq!(derived_series(&cyclic3(q(1), q(3))).unwrap().vanishes_at, Some(3));
    }

    #[test]
    fn engel_conditions_on_type2() {
        let alg = cyclic3(q(0), q(1));
        let right = engel_condition(&alg, Side::Right).unwrap();
        assert!(right.all_nilpotent);
        assert_eq!(right.certification, Certification::Exact);
        let left = engel_condition(&alg, Side::Left).unwrap();
        assert!(!left.all_nilpotent);
        assert_eq!(left.witnesses[0], vec![q(1), q(0), q(0)]);
    }

    #[test]
    fn engel_conditions_nilpotent_case() {
        let alg = cyclic3(q(0), q(0));
        for side in [Side::Left, Side::Right] {
            let r = engel_condition(&alg, side).unwrap();
            assert!(r.all_nilpotent);
            assert_eq!(r.certification, Certification::Exact);
        }
    }

    #[test]
    fn basis_nilpotent_but_combination_not() {
        // e1 e2 = e2 style nilpotent basis operators whose sum is not nilpotent:
        // L_{b1} = E_{21}, L_{b2} = E_{12}; L_{b1 + b2} has eigenvalues ±1.
        let alg = LeibnizAlgebra::from_products(
            2,
            vec![(0, 0, vec![q(0), q(1)]), (1, 1, vec![q(1), q(0)])],
        )
        .unwrap();
        let r = engel_condition(&alg, Side::Left).unwrap();
        assert!(!r.all_nilpotent);
        assert_eq!(r.certification, Certification::BasisCertified);
        assert_eq!(r.witnesses.len(), 1);
    }

    #[test]
    fn maximal_ideal_summary() {
        let alg = cyclic3(q(0), q(1));
        let maximals = [span(&[&[0, 1, 0], &[0, 0, 1]]), span(&[&[1, -1, 0], &[1, 0, -1]])];
        let s = nilpotency_via_maximals(&alg, &maximals).unwrap();
        assert!(s.all_left && !s.all_right && !s.all_two_sided);
    }
}
