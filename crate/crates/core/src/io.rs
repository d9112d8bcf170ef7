//! JSON formats for algebras and cyclic presentations.
//!
//! Algebra files list nonzero basis products with 1-based indices:
//!
//! ```json
//! {"dim": 3, "scalar": "exact", "products": [{"i": 1, "j": 1, "coeffs": ["0", "1", "0"]}]}
//! ```
//!
//! Cyclic files give `(α₂, …, α_n)`:
//!
//! ```json
//! {"type": "cyclic", "dim": 3, "coeffs": ["1", "2i"]}
//! ```

use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{LeibnizAlgebra, LeibnizCheck};
use crate::cyclic::{build_cyclic, CyclicPresentation};
use crate::error::{Error, Result};
use crate::exactnum::{Backend, Field, GaussianRational, Scalar, Tolerance, C64};

pub(crate) fn ser_vectors<F: Field, S: Serializer>(vs: &[Vec<F>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(vs.len()))?;
    for v in vs {
        seq.serialize_element(&v.iter().map(F::to_scalar).collect::<Vec<_>>())?;
    }
    seq.end()
}

pub(crate) fn ser_opt_vector<F: Field, S: Serializer>(v: &Option<Vec<F>>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(v) => s.collect_seq(v.iter().map(F::to_scalar)),
        None => s.serialize_none(),
    }
}

pub fn vector_json<F: Field>(v: &[F]) -> Value {
    serde_json::to_value(v.iter().map(F::to_scalar).collect::<Vec<_>>()).expect("scalars serialize")
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProductEntry {
    i: usize,
    j: usize,
    coeffs: Vec<Scalar>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    scalar: Backend,
    products: Vec<ProductEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CyclicFile {
    #[serde(rename = "type")]
    kind: String,
    dim: usize,
    coeffs: Vec<Scalar>,
}

/// An algebra whose backend is decided at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyAlgebra {
    Exact(LeibnizAlgebra<GaussianRational>),
    Float(LeibnizAlgebra<C64>),
}

impl AnyAlgebra {
    pub fn backend(&self) -> Backend {
        match self {
            AnyAlgebra::Exact(_) => Backend::Exact,
            AnyAlgebra::Float(_) => Backend::Float,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Exact(a) => a.dim(),
            AnyAlgebra::Float(a) => a.dim(),
        }
    }

    /// Switch backends; exact to float is allowed, float to exact is not.
    pub fn into_backend(self, backend: Backend) -> Result<Self> {
        match (self, backend) {
            (AnyAlgebra::Exact(a), Backend::Float) => Ok(AnyAlgebra::Float(a.to_c64())),
            (AnyAlgebra::Float(_), Backend::Exact) => Err(Error::BackendMismatch(Backend::Exact, Backend::Float)),
            (a, _) => Ok(a),
        }
    }

    pub fn with_tolerance(self, tol: Tolerance) -> Self {
        match self {
            AnyAlgebra::Exact(a) => AnyAlgebra::Exact(a.with_tolerance(tol)),
            AnyAlgebra::Float(a) => AnyAlgebra::Float(a.with_tolerance(tol)),
        }
    }

    pub fn is_leibniz(&self) -> bool {
        match self {
            AnyAlgebra::Exact(a) => a.verify_leibniz().is_ok(),
            AnyAlgebra::Float(a) => a.verify_leibniz().is_ok(),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyAlgebra::Exact(a) => emit_algebra(a),
            AnyAlgebra::Float(a) => emit_algebra(a),
        }
    }
}

/// A cyclic presentation whose backend is decided at runtime.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPresentation {
    Exact(CyclicPresentation<GaussianRational>),
    Float(CyclicPresentation<C64>),
}

impl AnyPresentation {
    pub fn backend(&self) -> Backend {
        match self {
            AnyPresentation::Exact(_) => Backend::Exact,
            AnyPresentation::Float(_) => Backend::Float,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            AnyPresentation::Exact(p) => p.dim(),
            AnyPresentation::Float(p) => p.dim(),
        }
    }

    pub fn into_backend(self, backend: Backend) -> Result<Self> {
        match (self, backend) {
            (AnyPresentation::Exact(p), Backend::Float) => Ok(AnyPresentation::Float(p.to_c64())),
            (AnyPresentation::Float(_), Backend::Exact) => {
                Err(Error::BackendMismatch(Backend::Exact, Backend::Float))
            }
            (p, _) => Ok(p),
        }
    }

    pub fn build(&self) -> AnyAlgebra {
        match self {
            AnyPresentation::Exact(p) => AnyAlgebra::Exact(build_cyclic(p)),
            AnyPresentation::Float(p) => AnyAlgebra::Float(build_cyclic(p)),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            AnyPresentation::Exact(p) => emit_cyclic(p),
            AnyPresentation::Float(p) => emit_cyclic(p),
        }
    }
}

/// Contents of an input file.
#[derive(Debug, Clone, PartialEq)]
pub enum Input {
    Algebra(AnyAlgebra),
    Cyclic(AnyPresentation),
}

impl Input {
    /// The algebra itself; cyclic inputs are expanded on the basis `a, …, aⁿ`.
    pub fn algebra(&self) -> AnyAlgebra {
        match self {
            Input::Algebra(a) => a.clone(),
            Input::Cyclic(p) => p.build(),
        }
    }

    pub fn into_backend(self, backend: Backend) -> Result<Self> {
        Ok(match self {
            Input::Algebra(a) => Input::Algebra(a.into_backend(backend)?),
            Input::Cyclic(p) => Input::Cyclic(p.into_backend(backend)?),
        })
    }

    pub fn backend(&self) -> Backend {
        match self {
            Input::Algebra(a) => a.backend(),
            Input::Cyclic(p) => p.backend(),
        }
    }
}

fn convert<F: Field>(s: &Scalar) -> Result<F> {
    match (F::BACKEND, s) {
        (Backend::Float, Scalar::Exact(_)) => F::from_scalar(&s.to_float()),
        _ => F::from_scalar(s),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn build_algebra<F: Field>(file: &AlgebraFile) -> Result<LeibnizAlgebra<F>> {
    let n = file.dim;
    let mut seen = vec![false; n * n];
    let mut products = Vec::with_capacity(file.products.len());
    for e in &file.products {
        if e.i == 0 || e.j == 0 || e.i > n || e.j > n {
            return Err(bad(format!("product index ({}, {}) outside 1..={n}", e.i, e.j)));
        }
        if e.coeffs.len() != n {
            return Err(bad(format!("product ({}, {}) has {} coefficients, expected {n}", e.i, e.j, e.coeffs.len())));
        }
        let slot = (e.i - 1) * n + (e.j - 1);
        if std::mem::replace(&mut seen[slot], true) {
            return Err(bad(format!("product ({}, {}) listed twice", e.i, e.j)));
        }
        let coeffs = e.coeffs.iter().map(convert::<F>).collect::<Result<Vec<_>>>()?;
        products.push((e.i - 1, e.j - 1, coeffs));
    }
    LeibnizAlgebra::from_products(n, products)
}

fn parse_algebra_value(v: Value) -> Result<AnyAlgebra> {
    let file: AlgebraFile = serde_json::from_value(v).map_err(|e| bad(e.to_string()))?;
    if file.dim == 0 {
        return Err(bad("dim must be at least 1"));
    }
    match file.scalar {
        Backend::Exact => {
            if file.products.iter().flat_map(|p| &p.coeffs).any(|c| c.backend() == Backend::Float) {
                return Err(bad("float coefficient in an exact algebra file"));
            }
            Ok(AnyAlgebra::Exact(build_algebra(&file)?))
        }
        Backend::Float => Ok(AnyAlgebra::Float(build_algebra(&file)?)),
    }
}

fn parse_cyclic_value(v: Value) -> Result<AnyPresentation> {
    let file: CyclicFile = serde_json::from_value(v).map_err(|e| bad(e.to_string()))?;
    if file.kind != "cyclic" {
        return Err(bad(format!("unknown input type {:?}", file.kind)));
    }
    if file.dim < 2 {
        return Err(bad("a cyclic algebra needs dim at least 2"));
    }
    if file.coeffs.len() != file.dim - 1 {
        return Err(bad(format!(
            "cyclic coeffs are (alpha_2, ..., alpha_n): expected {} values, found {}",
            file.dim - 1,
            file.coeffs.len()
        )));
    }
    if file.coeffs.iter().all(|c| c.backend() == Backend::Exact) {
        let cs = file.coeffs.iter().map(convert::<GaussianRational>).collect::<Result<_>>()?;
        Ok(AnyPresentation::Exact(CyclicPresentation::new(cs)?))
    } else {
        let cs = file.coeffs.iter().map(convert::<C64>).collect::<Result<_>>()?;
        Ok(AnyPresentation::Float(CyclicPresentation::new(cs)?))
    }
}

/// Parse either file format.
pub fn parse_input(text: &str) -> Result<Input> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("malformed JSON: {e}")))?;
    if v.get("type").is_some() {
        Ok(Input::Cyclic(parse_cyclic_value(v)?))
    } else {
        Ok(Input::Algebra(parse_algebra_value(v)?))
    }
}

pub fn parse_algebra(text: &str) -> Result<AnyAlgebra> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("malformed JSON: {e}")))?;
    parse_algebra_value(v)
}

pub fn parse_cyclic(text: &str) -> Result<AnyPresentation> {
    let v: Value = serde_json::from_str(text).map_err(|e| bad(format!("malformed JSON: {e}")))?;
    parse_cyclic_value(v)
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

/// Canonical text: nonzero products only, sorted by `(i, j)`, pretty-printed.
pub fn emit_algebra<F: Field>(alg: &LeibnizAlgebra<F>) -> String {
    let n = alg.dim();
    let mut products = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = alg.basis_product(i, j);
            if c.iter().any(|x| !x.is_zero()) {
                products.push(ProductEntry { i: i + 1, j: j + 1, coeffs: c.iter().map(F::to_scalar).collect() });
            }
        }
    }
    pretty(&AlgebraFile { dim: n, scalar: F::BACKEND, products })
}

pub fn emit_cyclic<F: Field>(p: &CyclicPresentation<F>) -> String {
    pretty(&CyclicFile {
        kind: "cyclic".into(),
        dim: p.dim(),
        coeffs: p.coeffs().iter().map(F::to_scalar).collect(),
    })
}

/// `{"leibniz": bool, "violations": [{"i", "j", "k", "residual"}]}` with 1-based indices.
pub fn check_json<F: Field>(check: &LeibnizCheck<F>) -> Value {
    let violations: Vec<Value> = check
        .violations
        .iter()
        .map(|v| {
            serde_json::json!({
                "i": v.i + 1,
                "j": v.j + 1,
                "k": v.k + 1,
                "residual": vector_json(&v.residual),
            })
        })
        .collect();
    serde_json::json!({ "leibniz": check.is_ok(), "violations": violations })
}
