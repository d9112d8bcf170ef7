//! Engel, Fitting and Cartan subalgebras; maximal and Frattini subalgebras
//! of cyclic algebras.

use std::ops::RangeInclusive;

use serde::{Serialize, Serializer};

use crate::algebra::LeibnizAlgebra;
use crate::cyclic::{build_cyclic, companion_data, CyclicPresentation};
use crate::error::{Error, Result};
use crate::exactnum::{poly_roots_with_radius, FactoredPoly, Field, Poly, Tolerance};
use crate::linalg::{Matrix, Subspace};
use crate::series::is_nilpotent;

/// `E_A(x) = {t : L_x^k t = 0 for some k}`.
pub fn engel_subalgebra<F: Field>(alg: &LeibnizAlgebra<F>, x: &[F]) -> Result<Subspace<F>> {
    let e = alg.left_mult(x)?.generalized_kernel(alg.dim(), alg.tolerance())?;
    if !alg.is_subalgebra(&e)? {
        return Err(Error::Verification("Engel subspace is not closed under the product".into()));
    }
    Ok(e)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct FittingDecomposition<F: Field> {
    pub null_component: Subspace<F>,
    pub one_component: Subspace<F>,
    pub operator: Matrix<F>,
}

/// Fitting decomposition of `A` under `L_x`.
pub fn fitting<F: Field>(alg: &LeibnizAlgebra<F>, x: &[F]) -> Result<FittingDecomposition<F>> {
    let tol = alg.tolerance();
    let operator = alg.left_mult(x)?;
    let power = operator.pow(alg.dim())?;
    Ok(FittingDecomposition {
        null_component: power.kernel(tol),
        one_component: power.image(tol),
        operator,
    })
}

/// The Engel subalgebra at the generator, checked to be nilpotent and its
/// own two-sided normalizer.
pub fn cartan_cyclic<F: Field>(p: &CyclicPresentation<F>) -> Result<Subspace<F>> {
    let alg = build_cyclic(p);
    let c = engel_subalgebra(&alg, &alg.basis_vector(0))?;
    if !is_nilpotent(&alg.induced(&c)?)? {
        return Err(Error::Verification("Engel subalgebra at the generator is not nilpotent".into()));
    }
    if !alg.normalizers(&c)?.both.equals(&c, alg.tolerance()) {
        return Err(Error::Verification("Engel subalgebra at the generator is not self-normalizing".into()));
    }
    Ok(c)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct EngelScan<F: Field> {
    /// Distinct Engel subalgebras in order of first appearance.
    pub distinct: Vec<Subspace<F>>,
    /// Members of `distinct` that contain no other member.
    pub minimal: Vec<Subspace<F>>,
    /// Number of grid elements mapped to each member of `distinct`.
    pub counts: Vec<usize>,
}

/// Engel subalgebras at every nonzero point of `range^n`.
pub fn engel_scan<F: Field>(alg: &LeibnizAlgebra<F>, range: RangeInclusive<i64>) -> Result<EngelScan<F>> {
    let n = alg.dim();
    let tol = alg.tolerance();
    let values: Vec<i64> = range.collect();
    let mut distinct: Vec<Subspace<F>> = Vec::new();
    let mut counts = Vec::new();
    let total = values.len().pow(n as u32);
    for idx in 0..total {
        let mut rest = idx;
        let mut x = vec![F::zero(); n];
        for k in (0..n).rev() {
            x[k] = F::from_i64(values[rest % values.len()]);
            rest /= values.len();
        }
        if x.iter().all(F::is_zero) {
            continue;
        }
        let e = engel_subalgebra(alg, &x)?;
        match distinct.iter().position(|d| d.equals(&e, tol)) {
            Some(i) => counts[i] += 1,
            None => {
                distinct.push(e);
                counts.push(1);
            }
        }
    }
    let mut minimal = Vec::new();
    for (i, d) in distinct.iter().enumerate() {
        let mut is_min = true;
        for (j, other) in distinct.iter().enumerate() {
            if i != j && d.contains(other, tol)? {
                is_min = false;
            }
        }
        if is_min {
            minimal.push(d.clone());
        }
    }
    Ok(EngelScan { distinct, minimal, counts })
}

/// Trivial Frattini subalgebra, meaningful only when `A²` is nilpotent.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Elementary {
    Yes,
    No,
    NotApplicable,
}

impl Serialize for Elementary {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Elementary::Yes => s.serialize_bool(true),
            Elementary::No => s.serialize_bool(false),
            Elementary::NotApplicable => s.serialize_str("not-applicable"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct MaximalsReport<F: Field> {
    pub maximals: Vec<Subspace<F>>,
    pub frattini: Subspace<F>,
    pub roots: FactoredPoly,
    pub elementary: Elementary,
}

/// Lift the float roots into `F`; on the exact backend the product of the
/// lifted factors must reproduce `p` exactly.
fn lift_roots<F: Field>(p: &Poly<F>, roots: &FactoredPoly) -> Result<Vec<(F, usize)>> {
    let lifted = roots
        .roots
        .iter()
        .map(|r| F::from_c64(r.value).map(|v| (v, r.multiplicity)))
        .collect::<Option<Vec<_>>>()
        .ok_or(Error::RootsNotExact)?;
    if F::is_exact() && Poly::from_roots(&lifted) != *p {
        return Err(Error::RootsNotExact);
    }
    Ok(lifted)
}

fn maximals_from_roots<F: Field>(
    t: &Matrix<F>,
    roots: &[(F, usize)],
    tol: &Tolerance,
) -> Result<(Vec<Subspace<F>>, Subspace<F>)> {
    let mut maximals = Vec::with_capacity(roots.len());
    for j in 0..roots.len() {
        let mut factors = roots.to_vec();
        factors[j].1 -= 1;
        maximals.push(Poly::from_roots(&factors).eval_matrix(t)?.kernel(tol));
    }
    let q: Vec<(F, usize)> = roots.iter().map(|(l, m)| (l.clone(), m - 1)).collect();
    let frattini = Poly::from_roots(&q).eval_matrix(t)?.kernel(tol);
    Ok((maximals, frattini))
}

/// Maximal subalgebras `ker r_j(T)`, `r_j = p/(x − λ_j)`, and the Frattini
/// subalgebra `ker q(T)`, `q = Π (x − λ_j)^{n_j − 1}`.
///
/// On the exact backend the roots must be Gaussian rationals; otherwise this
/// returns [`Error::RootsNotExact`] and the float backend should be used.
pub fn maximal_subalgebras<F: Field>(p: &CyclicPresentation<F>, tol: &Tolerance) -> Result<MaximalsReport<F>> {
    let n = p.dim();
    let (t, poly) = companion_data(p);
    let mut radius = tol.eps_root;
    let mut attempt = 0;
    let (roots, maximals, frattini) = loop {
        let roots = poly_roots_with_radius(&poly, radius)?;
        let lifted = lift_roots(&poly, &roots)?;
        let (maximals, frattini) = maximals_from_roots(&t, &lifted, tol)?;
        let expected_frattini: usize = roots.roots.iter().map(|r| r.multiplicity - 1).sum();
        let consistent = roots.degree() == n
            && frattini.dim() == expected_frattini
            && maximals.iter().all(|m| m.dim() == n - 1);
        if consistent {
            break (roots, maximals, frattini);
        }
        if attempt == 1 {
            return Err(Error::Verification(format!(
                "root clustering inconsistent with kernel dimensions: {:?}",
                roots.roots
            )));
        }
        attempt += 1;
        radius *= 10.0;
    };
    let alg = build_cyclic(p);
    let full = Subspace::full(n);
    let square = alg.subspace_product(&full, &full)?;
    let square_nilpotent = square.is_zero() || is_nilpotent(&alg.induced(&square)?)?;
    let elementary = match (square_nilpotent, frattini.is_zero()) {
        (false, _) => Elementary::NotApplicable,
        (true, true) => Elementary::Yes,
        (true, false) => Elementary::No,
    };
    Ok(MaximalsReport { maximals, frattini, roots, elementary })
}

/// Intersection of all maximal subalgebras, as an independent check on the
/// `q(T)` kernel.
pub fn frattini_oracle<F: Field>(p: &CyclicPresentation<F>, tol: &Tolerance) -> Result<Subspace<F>> {
    if p.dim() > 4 {
        return Err(Error::Unsupported("the Frattini oracle is limited to dimension at most 4".into()));
    }
    let report = maximal_subalgebras(p, tol)?;
    let mut acc = Subspace::full(p.dim());
    for m in &report.maximals {
        acc = acc.intersect(m, tol)?;
    }
    Ok(acc)
}
