//! Cyclic Leibniz algebras: construction, the cyclicity test, and the
//! dimension-3 classification.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::exactnum::{sqrt_principal, Field, Poly, Tolerance, C64};
use crate::linalg::Matrix;

const RANDOM_SAMPLES: usize = 32;
const RANDOM_BOX: i64 = 1 << 20;
const RANDOM_SEED: u64 = 0x5eed_cafe;

/// `a·aⁿ = α₂a² + … + α_n aⁿ`; `coeffs` holds `(α₂, …, α_n)`, so `n = coeffs.len() + 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct CyclicPresentation<F> {
    coeffs: Vec<F>,
}

impl<F: Field> CyclicPresentation<F> {
    pub fn new(coeffs: Vec<F>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("a cyclic presentation needs dimension at least 2".into()));
        }
        Ok(CyclicPresentation { coeffs })
    }

    /// Dimension-3 shorthand for `(α, β) = (α₂, α₃)`.
    pub fn dim3(alpha: F, beta: F) -> Self {
        CyclicPresentation { coeffs: vec![alpha, beta] }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() + 1
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn to_c64(&self) -> CyclicPresentation<C64> {
        CyclicPresentation { coeffs: self.coeffs.iter().map(F::to_c64).collect() }
    }
}

/// The algebra on `a, a², …, aⁿ` (basis index `k` holds `a^{k+1}`).
pub fn build_cyclic<F: Field>(p: &CyclicPresentation<F>) -> LeibnizAlgebra<F> {
    let n = p.dim();
    let mut products = Vec::with_capacity(n);
    for i in 0..n - 1 {
        let mut v = vec![F::zero(); n];
        v[i + 1] = F::one();
        products.push((0, i, v));
    }
    let mut last = vec![F::zero(); n];
    for (k, c) in p.coeffs.iter().enumerate() {
        last[k + 1] = c.clone();
    }
    products.push((0, n - 1, last));
    LeibnizAlgebra::from_products(n, products).expect("products have length n")
}

/// Companion matrix `T = L_a` and `p(x) = xⁿ − α_n x^{n−1} − … − α₂x`.
pub fn companion_data<F: Field>(p: &CyclicPresentation<F>) -> (Matrix<F>, Poly<F>) {
    let alg = build_cyclic(p);
    let t = alg.left_mult(&alg.basis_vector(0)).expect("basis vector has length n");
    let mut c = vec![F::zero()];
    c.extend(p.coeffs.iter().map(|a| -a.clone()));
    c.push(F::one());
    (t, Poly::new(c))
}

/// `[t, t², …, tⁿ]` with `t^{k+1} = t·t^k`.
pub fn powers_of<F: Field>(alg: &LeibnizAlgebra<F>, t: &[F]) -> Result<Vec<Vec<F>>> {
    let n = alg.dim();
    if t.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: t.len() });
    }
    let mut out = vec![t.to_vec()];
    for _ in 1..n {
        let next = alg.product(t, out.last().expect("non-empty"))?;
        out.push(next);
    }
    Ok(out)
}

fn powers_rank<F: Field>(alg: &LeibnizAlgebra<F>, t: &[F]) -> Result<usize> {
    let mut rows = powers_of(alg, t)?;
    if !F::is_exact() {
        // Powers grow geometrically; compare directions, not magnitudes.
        for r in rows.iter_mut() {
            let m = r.iter().map(F::modulus).fold(0.0, f64::max);
            if m > 0.0 {
                let s = F::from_c64(C64::new(1.0 / m, 0.0)).expect("float lift");
                r.iter_mut().for_each(|x| *x = x.clone() * s.clone());
            }
        }
    }
    Ok(Matrix::from_rows_with_cols(rows, alg.dim())?.rank(alg.tolerance()))
}

pub fn is_generator<F: Field>(alg: &LeibnizAlgebra<F>, t: &[F]) -> Result<bool> {
    Ok(powers_rank(alg, t)? == alg.dim())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CyclicityMethod {
    Grid,
    Randomized,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(bound = "")]
pub struct CyclicityReport<F: Field> {
    pub cyclic: bool,
    #[serde(serialize_with = "crate::io::ser_opt_vector")]
    pub generator: Option<Vec<F>>,
    pub method: CyclicityMethod,
    /// Upper bound on the chance that a cyclic algebra was reported as not
    /// cyclic; zero for the grid method.
    pub failure_probability: f64,
}

/// Does some `t` have `t, t², …, tⁿ` linearly independent?
///
/// `t ↦ det[t; …; tⁿ]` is a polynomial of degree at most `n(n+1)/2` in each
/// coordinate. For `n ≤ 4` it is evaluated on the grid `{0, …, n(n+1)/2}ⁿ`,
/// which decides the question exactly. Larger algebras use random points
/// from a fixed-seed generator.
pub fn is_cyclic<F: Field>(alg: &LeibnizAlgebra<F>) -> Result<CyclicityReport<F>> {
    let n = alg.dim();
    let degree = n * (n + 1) / 2;
    if n <= 4 {
        let side = degree as i64 + 1;
        let total = (side as usize).pow(n as u32);
        for idx in 0..total {
            let mut rest = idx;
            let mut t = vec![F::zero(); n];
            for k in (0..n).rev() {
                t[k] = F::from_i64((rest % side as usize) as i64);
                rest /= side as usize;
            }
            if is_generator(alg, &t)? {
                return Ok(CyclicityReport {
                    cyclic: true,
                    generator: Some(t),
                    method: CyclicityMethod::Grid,
                    failure_probability: 0.0,
                });
            }
        }
        return Ok(CyclicityReport {
            cyclic: false,
            generator: None,
            method: CyclicityMethod::Grid,
            failure_probability: 0.0,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    let box_size = if F::is_exact() { RANDOM_BOX } else { 1000 };
    for _ in 0..RANDOM_SAMPLES {
        let t: Vec<F> = (0..n).map(|_| F::from_i64(rng.random_range(-box_size..=box_size))).collect();
        if is_generator(alg, &t)? {
            return Ok(CyclicityReport {
                cyclic: true,
                generator: Some(t),
                method: CyclicityMethod::Randomized,
                failure_probability: 0.0,
            });
        }
    }
    let per_sample = degree as f64 / (2 * box_size + 1) as f64;
    Ok(CyclicityReport {
        cyclic: false,
        generator: None,
        method: CyclicityMethod::Randomized,
        failure_probability: per_sample.powi(RANDOM_SAMPLES as i32),
    })
}

/// Matrix whose column `k` is `t^{k+1}`; the change of basis to the generator basis.
pub fn generator_basis<F: Field>(alg: &LeibnizAlgebra<F>, t: &[F]) -> Result<Matrix<F>> {
    if !is_generator(alg, t)? {
        return Err(Error::NotAGenerator);
    }
    Matrix::from_columns(&powers_of(alg, t)?, alg.dim())
}

/// Solve `g c = v` for invertible `g`.
fn solve<F: Field>(g: &Matrix<F>, v: &[F], tol: &Tolerance) -> Result<Vec<F>> {
    let n = g.rows();
    let aug = Matrix::from_fn(n, n + 1, |i, j| if j < n { g[(i, j)].clone() } else { v[i].clone() });
    let r = aug.rref(tol);
    if r.pivots != (0..n).collect::<Vec<_>>() {
        return Err(Error::NotAGenerator);
    }
    Ok((0..n).map(|i| r.matrix[(i, n)].clone()).collect())
}

/// Express `t·tⁿ` in the basis `t, …, tⁿ` and read off `(α₂, …, α_n)`.
pub fn presentation_of_generator<F: Field>(
    alg: &LeibnizAlgebra<F>,
    t: &[F],
) -> Result<CyclicPresentation<F>> {
    let g = generator_basis(alg, t)?;
    let n = alg.dim();
    let tn = g.column(n - 1);
    let v = alg.product(t, &tn)?;
    let mut c = solve(&g, &v, alg.tolerance())?;
    let scale = c.iter().map(F::modulus).fold(1.0, f64::max);
    if !c[0].is_negligible(alg.tolerance().eps_cmp * scale) {
        return Err(Error::Verification(format!(
            "coefficient of t in t·t^n is {:?}, expected zero",
            c[0].to_c64()
        )));
    }
    c.remove(0);
    CyclicPresentation::new(c)
}

/// Isomorphism class of a 3-dimensional cyclic algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CanonicalClass {
    /// `aa³ = 0`
    Nilpotent,
    /// `aa³ = a³`
    TypeII,
    /// `aa³ = a² + γa³` with `0 ≤ arg γ < π` or `γ = 0`
    TypeIII { gamma: C64 },
}

impl CanonicalClass {
    pub fn tag(&self) -> &'static str {
        match self {
            CanonicalClass::Nilpotent => "nilpotent",
            CanonicalClass::TypeII => "type2",
            CanonicalClass::TypeIII { .. } => "type3",
        }
    }

    pub fn gamma(&self) -> Option<C64> {
        match self {
            CanonicalClass::TypeIII { gamma } => Some(*gamma),
            _ => None,
        }
    }

    /// Same tag and, for type (iii), `|γ₁ − γ₂| ≤ eps`.
    pub fn matches(&self, other: &CanonicalClass, eps: f64) -> bool {
        match (self, other) {
            (CanonicalClass::TypeIII { gamma: a }, CanonicalClass::TypeIII { gamma: b }) => (a - b).norm() <= eps,
            _ => self.tag() == other.tag(),
        }
    }
}

impl Serialize for CanonicalClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = serializer.serialize_map(None)?;
        m.serialize_entry("class", self.tag())?;
        if let Some(g) = self.gamma() {
            m.serialize_entry("gamma", &[g.re, g.im])?;
        }
        m.end()
    }
}

/// Representative of `{γ, −γ}` with `arg γ ∈ [0, π)`.
pub fn normalize_gamma(gamma: C64, eps: f64) -> C64 {
    let snap = eps * gamma.norm().max(1.0);
    let clean = |x: f64| if x.abs() <= snap { 0.0 } else { x };
    let mut g = C64::new(clean(gamma.re), clean(gamma.im));
    if g.im < 0.0 || (g.im == 0.0 && g.re < 0.0) {
        g = -g;
    }
    // Avoid negative zeros in output.
    C64::new(g.re + 0.0, g.im + 0.0)
}

pub fn classify3<F: Field>(p: &CyclicPresentation<F>, tol: &Tolerance) -> Result<CanonicalClass> {
    if p.dim() != 3 {
        return Err(Error::WrongDimension { expected: 3, found: p.dim() });
    }
    let (alpha, beta) = (&p.coeffs[0], &p.coeffs[1]);
    let scale = alpha.modulus().max(beta.modulus()).max(1.0);
    let eps = tol.eps_cmp * scale;
    match (alpha.is_negligible(eps), beta.is_negligible(eps)) {
        (true, true) => Ok(CanonicalClass::Nilpotent),
        (true, false) => Ok(CanonicalClass::TypeII),
        (false, _) => {
            let gamma = beta.to_c64() / sqrt_principal(alpha.to_c64());
            Ok(CanonicalClass::TypeIII { gamma: normalize_gamma(gamma, tol.eps_cmp) })
        }
    }
}

pub fn isomorphic3<F: Field>(
    p: &CyclicPresentation<F>,
    q: &CyclicPresentation<F>,
    tol: &Tolerance,
) -> Result<bool> {
    Ok(classify3(p, tol)?.matches(&classify3(q, tol)?, tol.eps_cmp))
}

/// The type (iii) element with zero square.
pub fn zero_square_element(gamma: C64) -> Vec<C64> {
    vec![C64::new(1.0, 0.0), gamma, C64::new(-1.0, 0.0)]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{gaussian, GaussianRational};
    use num_traits::Zero;
    use proptest::prelude::*;

    type Q = GaussianRational;

    fn q(v: i64) -> Q {
        Q::from_i64(v)
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn alg3(products: &[(usize, usize, [i64; 3])]) -> LeibnizAlgebra<Q> {
        LeibnizAlgebra::from_products(3, products.iter().map(|(i, j, c)| (*i, *j, c.iter().map(|&x| q(x)).collect())))
            .unwrap()
    }

    #[test]
    fn builds_nilpotent_and_type3() {
        let nil = build_cyclic(&CyclicPresentation::dim3(q(0), q(0)));
        assert!(nil.verify_leibniz().is_ok());
        assert_eq!(nil.basis_product(0, 2), &[q(0), q(0), q(0)][..]);
        let t3 = build_cyclic(&CyclicPresentation::dim3(q(1), gaussian(0, 2)));
        assert!(t3.verify_leibniz().is_ok());
        assert_eq!(t3.basis_product(0, 2), &[q(0), q(1), gaussian(0, 2)][..]);
        let two = build_cyclic(&CyclicPresentation::new(vec![q(0)]).unwrap());
        assert_eq!(two.dim(), 2);
        assert!(two.verify_leibniz().is_ok());
        assert!(CyclicPresentation::<Q>::new(vec![]).is_err());
    }

    #[test]
    fn companion_polynomials() {
        let (t, p) = companion_data(&CyclicPresentation::dim3(q(0), q(1)));
        assert_eq!(p.coeffs(), &[q(0), q(0), q(-1), q(1)][..]);
        assert_eq!(t, Matrix::from_rows(vec![vec![q(0), q(0), q(0)], vec![q(1), q(0), q(0)], vec![q(0), q(1), q(1)]]).unwrap());
        assert!(p.eval_matrix(&t).unwrap().is_negligible(0.0));
        let g = gaussian(3, 1);
        let (_, p) = companion_data(&CyclicPresentation::dim3(q(1), g.clone()));
        assert_eq!(p.coeffs(), &[q(0), q(-1), -g, q(1)][..]);
        let (_, p) = companion_data(&CyclicPresentation::dim3(q(0), q(0)));
        assert_eq!(p.coeffs(), &[q(0), q(0), q(0), q(1)][..]);
    }

    #[test]
    fn powers_in_demir_classes() {
        // zx = y, zy = y, z² = x
        let c7 = alg3(&[(2, 0, [0, 1, 0]), (2, 1, [0, 1, 0]), (2, 2, [1, 0, 0])]);
        let p = powers_of(&c7, &[q(0), q(0), q(1)]).unwrap();
        assert_eq!(p[1], vec![q(1), q(0), q(0)]);
        assert_eq!(p[2], vec![q(0), q(1), q(0)]);
        assert!(is_generator(&c7, &[q(0), q(0), q(1)]).unwrap());
        // x² = z
        let c2 = alg3(&[(0, 0, [0, 0, 1])]);
        let p = powers_of(&c2, &[q(1), q(0), q(0)]).unwrap();
        assert_eq!(p[1], vec![q(0), q(0), q(1)]);
        assert_eq!(p[2], vec![q(0), q(0), q(0)]);
        let ab = LeibnizAlgebra::<Q>::abelian(3).unwrap();
        assert_eq!(powers_of(&ab, &[q(1), q(2), q(3)]).unwrap()[1], vec![q(0); 3]);
    }

    #[test]
    fn cyclicity_decisions() {
        let c1 = alg3(&[(0, 0, [0, 1, 0]), (0, 1, [0, 0, 1])]);
        let r = is_cyclic(&c1).unwrap();
        assert!(r.cyclic);
        assert_eq!(r.generator, Some(vec![q(1), q(0), q(0)]));
        assert_eq!(r.method, CyclicityMethod::Grid);
        // zy = y, zx = x: not cyclic
        let c5 = alg3(&[(2, 0, [1, 0, 0]), (2, 1, [0, 1, 0])]);
        assert!(!is_cyclic(&c5).unwrap().cyclic);
        // zx = x + y, zy = y
        let c6 = alg3(&[(2, 0, [1, 1, 0]), (2, 1, [0, 1, 0])]);
        let r = is_cyclic(&c6).unwrap();
        let g = r.generator.unwrap();
        assert!(!g[0].is_zero() && !g[2].is_zero());
    }

    #[test]
    fn presentations_of_generators() {
        let c6 = alg3(&[(2, 0, [1, 1, 0]), (2, 1, [0, 1, 0])]);
        let p = presentation_of_generator(&c6, &[q(1), q(0), q(1)]).unwrap();
        assert_eq!(p.coeffs(), &[q(-1), q(2)][..]);
        let c7 = alg3(&[(2, 0, [0, 1, 0]), (2, 1, [0, 1, 0]), (2, 2, [1, 0, 0])]);
        let p = presentation_of_generator(&c7, &[q(0), q(0), q(1)]).unwrap();
        assert_eq!(p.coeffs(), &[q(0), q(1)][..]);
        let t2 = build_cyclic(&CyclicPresentation::dim3(q(0), q(1)));
        let p = presentation_of_generator(&t2, &[q(1), q(0), q(0)]).unwrap();
        assert_eq!(p.coeffs(), &[q(0), q(1)][..]);
        assert_eq!(presentation_of_generator(&t2, &[q(0), q(1), q(0)]), Err(Error::NotAGenerator));
    }

    fn class(a: C64, b: C64) -> CanonicalClass {
        classify3(&CyclicPresentation::dim3(a, b), &tol()).unwrap()
    }

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn classify_examples() {
        assert_eq!(class(c(0.0, 0.0), c(0.0, 0.0)), CanonicalClass::Nilpotent);
        assert_eq!(class(c(0.0, 0.0), c(5.0, 0.0)), CanonicalClass::TypeII);
        assert_eq!(class(c(1.0, 0.0), c(-1.0, 0.0)), CanonicalClass::TypeIII { gamma: c(1.0, 0.0) });
        assert!(class(c(1.0, 0.0), c(-1.0, 0.0)).matches(&class(c(1.0, 0.0), c(1.0, 0.0)), 1e-12));
        assert_eq!(class(c(-1.0, 0.0), c(2.0, 0.0)), CanonicalClass::TypeIII { gamma: c(0.0, 2.0) });
        // Demir class (5) at α = 2 gives (−2, 3)
        let g = class(c(-2.0, 0.0), c(3.0, 0.0)).gamma().unwrap();
        assert!((g - c(0.0, 3.0 / 2f64.sqrt())).norm() < 1e-12);
        let exact = classify3(&CyclicPresentation::dim3(q(0), q(0)), &tol()).unwrap();
        assert_eq!(exact, CanonicalClass::Nilpotent);
        assert!(classify3(&CyclicPresentation::new(vec![q(1)]).unwrap(), &tol()).is_err());
    }

    #[test]
    fn isomorphism_examples() {
        let t = tol();
        let p = |a: f64, b: f64| CyclicPresentation::dim3(c(a, 0.0), c(b, 0.0));
        assert!(isomorphic3(&p(1.0, 1.5), &p(1.0, -1.5), &t).unwrap());
        assert!(!isomorphic3(&p(1.0, 1.0), &p(1.0, 2.0), &t).unwrap());
        assert!(isomorphic3(&p(0.0, 0.0), &p(0.0, 0.0), &t).unwrap());
    }

    #[test]
    fn class_json() {
        assert_eq!(serde_json::to_string(&CanonicalClass::TypeII).unwrap(), r#"{"class":"type2"}"#);
        assert_eq!(
            serde_json::to_string(&CanonicalClass::TypeIII { gamma: c(0.0, 2.0) }).unwrap(),
            r#"{"class":"type3","gamma":[0.0,2.0]}"#
        );
    }

    #[test]
    fn zero_square_in_type3() {
        let g = c(0.3, 1.7);
        let alg = build_cyclic(&CyclicPresentation::dim3(c(1.0, 0.0), g));
        let t = zero_square_element(g);
        let sq = alg.product(&t, &t).unwrap();
        assert!(sq.iter().all(|x| x.norm() < 1e-12));
    }

    fn gauss() -> impl Strategy<Value = C64> {
        (-5.0f64..5.0, -5.0f64..5.0).prop_map(|(a, b)| c(a, b))
    }

    proptest! {
        #[test]
        fn built_algebras_are_leibniz(cs in proptest::collection::vec((-9i64..10, -9i64..10), 1..5)) {
            let p = CyclicPresentation::new(cs.iter().map(|&(a, b)| gaussian(a, b)).collect()).unwrap();
            prop_assert!(build_cyclic(&p).verify_leibniz().is_ok());
        }

        #[test]
        fn classification_is_rescaling_invariant(a in gauss(), b in gauss(), l in gauss()) {
            prop_assume!(a.norm() > 1e-2 && l.norm() > 1e-1);
            let before = class(a, b);
            let after = class(l * l * a, l * b);
            prop_assert!(before.matches(&after, 1e-7), "{:?} vs {:?}", before, after);
        }

        #[test]
        fn gamma_window(a in gauss(), b in gauss()) {
            if let CanonicalClass::TypeIII { gamma } = class(a, b) {
                prop_assert!(gamma.im > 0.0 || (gamma.im == 0.0 && gamma.re >= 0.0));
            }
        }
    }
}
