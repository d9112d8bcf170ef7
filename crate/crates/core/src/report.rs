//! JSON reports shared by the command-line tool and the Python bindings.
//!
//! Every function takes a parsed [`Input`] plus [`Options`] and returns an
//! [`Outcome`]. Subspaces are always reported in the coordinates of the
//! input file, even when the computation ran on the generator basis
//! `t, t², …, tⁿ` of a cyclic algebra.

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::algebra::LeibnizAlgebra;
use crate::cyclic::{
    classify3, generator_basis, is_cyclic, presentation_of_generator, CanonicalClass, CyclicPresentation,
};
use crate::error::{Error, Result};
use crate::exactnum::{parse_gaussian, Backend, Field, GaussianRational, Scalar, Tolerance, C64};
use crate::invariants::{derivations, killing, semisimplicity_counterexamples};
use crate::io::{check_json, vector_json, AnyAlgebra, AnyPresentation, Input};
use crate::linalg::{Matrix, Subspace};
use crate::series::{
    derived_series, engel_condition, lower_central_series, nilpotency_via_maximals, right_normed_series,
    SeriesReport, SeriesVerdict, Side,
};
use crate::subalgebra::{cartan_cyclic, fitting, frattini_oracle, maximal_subalgebras, MaximalsReport};

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Options {
    pub tolerance: Tolerance,
    /// Convert the input to this backend first; float to exact is refused.
    pub backend: Option<Backend>,
    /// Load tensors that fail the Leibniz identity.
    pub allow_invalid: bool,
}


#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// The command ran but the property it tests does not hold.
    PropertyFailure,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub json: Value,
    pub status: Status,
}

impl Outcome {
    fn ok(json: Value) -> Self {
        Outcome { json, status: Status::Ok }
    }

    fn fail(json: Value) -> Self {
        Outcome { json, status: Status::PropertyFailure }
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report types serialize")
}

/// An algebra together with a cyclic presentation if one was supplied.
struct Ctx<F: Field> {
    alg: LeibnizAlgebra<F>,
    given: Option<CyclicPresentation<F>>,
    tol: Tolerance,
}

enum Prepared {
    Exact(Ctx<GaussianRational>),
    Float(Ctx<C64>),
}

macro_rules! dispatch {
    ($prep:expr, $ctx:ident => $body:expr) => {
        match $prep {
            Prepared::Exact($ctx) => $body,
            Prepared::Float($ctx) => $body,
        }
    };
}

fn prepare(input: &Input, opts: &Options, validate: bool) -> Result<Prepared> {
    let input = match opts.backend {
        Some(b) => input.clone().into_backend(b)?,
        None => input.clone(),
    };
    let tol = opts.tolerance;
    let prep = match input {
        Input::Algebra(AnyAlgebra::Exact(a)) => Prepared::Exact(Ctx { alg: a.with_tolerance(tol), given: None, tol }),
        Input::Algebra(AnyAlgebra::Float(a)) => Prepared::Float(Ctx { alg: a.with_tolerance(tol), given: None, tol }),
        Input::Cyclic(AnyPresentation::Exact(p)) => Prepared::Exact(Ctx {
            alg: crate::cyclic::build_cyclic(&p).with_tolerance(tol),
            given: Some(p),
            tol,
        }),
        Input::Cyclic(AnyPresentation::Float(p)) => Prepared::Float(Ctx {
            alg: crate::cyclic::build_cyclic(&p).with_tolerance(tol),
            given: Some(p),
            tol,
        }),
    };
    if validate && !opts.allow_invalid {
        let ok = dispatch!(&prep, c => c.alg.verify_leibniz().is_ok());
        if !ok {
            return Err(Error::InvalidInput(
                "tensor fails the Leibniz identity (run `check`, or pass --allow-invalid)".into(),
            ));
        }
    }
    Ok(prep)
}

/// A cyclic algebra seen through a generator.
struct CyclicView<F: Field> {
    presentation: CyclicPresentation<F>,
    generator: Vec<F>,
    /// Columns are `t, …, tⁿ` in input coordinates.
    basis: Matrix<F>,
}

impl<F: Field> CyclicView<F> {
    fn to_input(&self, s: &Subspace<F>, tol: &Tolerance) -> Result<Subspace<F>> {
        s.map(&self.basis, tol)
    }
}

fn cyclic_view<F: Field>(ctx: &Ctx<F>) -> Result<Option<CyclicView<F>>> {
    if let Some(p) = &ctx.given {
        return Ok(Some(CyclicView {
            presentation: p.clone(),
            generator: ctx.alg.basis_vector(0),
            basis: Matrix::identity(p.dim()),
        }));
    }
    if ctx.alg.dim() < 2 {
        return Ok(None);
    }
    let report = is_cyclic(&ctx.alg)?;
    let Some(t) = report.generator else { return Ok(None) };
    Ok(Some(CyclicView {
        presentation: presentation_of_generator(&ctx.alg, &t)?,
        basis: generator_basis(&ctx.alg, &t)?,
        generator: t,
    }))
}

fn not_cyclic() -> Outcome {
    Outcome::fail(json!({ "cyclic": false }))
}

/// `{"leibniz": bool, "violations": [...]}`; fails when the identity does.
pub fn check(input: &Input, opts: &Options) -> Result<Outcome> {
    let prep = prepare(input, opts, false)?;
    let v = dispatch!(&prep, c => check_json(&c.alg.verify_leibniz()));
    Ok(if v["leibniz"] == true { Outcome::ok(v) } else { Outcome::fail(v) })
}

fn classify_ctx<F: Field>(ctx: &Ctx<F>) -> Result<Option<CanonicalClass>> {
    if ctx.alg.dim() != 3 {
        return Err(Error::WrongDimension { expected: 3, found: ctx.alg.dim() });
    }
    match cyclic_view(ctx)? {
        Some(v) => Ok(Some(classify3(&v.presentation, &ctx.tol)?)),
        None => Ok(None),
    }
}

/// Canonical class of a 3-dimensional cyclic algebra.
pub fn classify(input: &Input, opts: &Options) -> Result<Outcome> {
    let prep = prepare(input, opts, true)?;
    Ok(match dispatch!(&prep, c => classify_ctx(c))? {
        Some(class) => Outcome::ok(to_value(&class)),
        None => not_cyclic(),
    })
}

/// Canonical class of `aa³ = αa² + βa³`.
pub fn classify_pair(alpha: C64, beta: C64, opts: &Options) -> Result<Outcome> {
    let class = classify3(&CyclicPresentation::dim3(alpha, beta), &opts.tolerance)?;
    Ok(Outcome::ok(to_value(&class)))
}

fn series_json<F: Field>(r: &SeriesReport<F>) -> Value {
    json!({
        "dims": r.dims(),
        "terms": to_value(&r.terms),
        "stabilized": r.stabilized,
        "verdict": to_value(&r.verdict),
        "vanishes_at": r.vanishes_at,
    })
}

fn series_ctx<F: Field>(ctx: &Ctx<F>) -> Result<Value> {
    Ok(json!({
        "lower_central": series_json(&lower_central_series(&ctx.alg)?),
        "derived": series_json(&derived_series(&ctx.alg)?),
        "right_normed": series_json(&right_normed_series(&ctx.alg)?),
    }))
}

pub fn series(input: &Input, opts: &Options) -> Result<Outcome> {
    let prep = prepare(input, opts, true)?;
    Ok(Outcome::ok(dispatch!(&prep, c => series_ctx(c))?))
}

/// Parse `"c1,c2,…"`; each entry is Gaussian-rational text or a decimal.
pub fn parse_element(text: &str) -> Result<Vec<Scalar>> {
    text.split(',')
        .map(|tok| {
            let tok = tok.trim();
            match parse_gaussian(tok) {
                Ok(v) => Ok(Scalar::Exact(v)),
                Err(e) => tok.parse::<f64>().map(|x| Scalar::float(x, 0.0)).map_err(|_| e),
            }
        })
        .collect()
}

fn element_in<F: Field>(alg: &LeibnizAlgebra<F>, element: &[Scalar]) -> Result<Vec<F>> {
    if element.len() != alg.dim() {
        return Err(Error::DimensionMismatch { expected: alg.dim(), found: element.len() });
    }
    element
        .iter()
        .map(|s| match (F::BACKEND, s) {
            (Backend::Float, Scalar::Exact(_)) => F::from_scalar(&s.to_float()),
            _ => F::from_scalar(s),
        })
        .collect()
}

fn engel_ctx<F: Field>(ctx: &Ctx<F>, element: Option<&[Scalar]>) -> Result<Value> {
    match element {
        Some(e) => {
            let x = element_in(&ctx.alg, e)?;
            let f = fitting(&ctx.alg, &x)?;
            let e = crate::subalgebra::engel_subalgebra(&ctx.alg, &x)?;
            Ok(json!({
                "element": vector_json(&x),
                "engel_subalgebra": to_value(&e),
                "fitting": {
                    "null_component": to_value(&f.null_component),
                    "one_component": to_value(&f.one_component),
                },
            }))
        }
        None => Ok(json!({
            "left": to_value(&engel_condition(&ctx.alg, Side::Left)?),
            "right": to_value(&engel_condition(&ctx.alg, Side::Right)?),
        })),
    }
}

/// Engel subalgebra and Fitting decomposition at `element`, or the Engel
/// conditions on both sides when no element is given.
pub fn engel(input: &Input, element: Option<&[Scalar]>, opts: &Options) -> Result<Outcome> {
    let prep = prepare(input, opts, true)?;
    Ok(Outcome::ok(dispatch!(&prep, c => engel_ctx(c, element))?))
}

fn cartan_ctx<F: Field>(ctx: &Ctx<F>) -> Result<Option<Value>> {
    let Some(view) = cyclic_view(ctx)? else { return Ok(None) };
    let c = view.to_input(&cartan_cyclic(&view.presentation)?, &ctx.tol)?;
    let normalizers = ctx.alg.normalizers(&c)?;
    Ok(Some(json!({
        "generator": vector_json(&view.generator),
        "cartan": to_value(&c),
        "dim": c.dim(),
        "normalizers": to_value(&normalizers),
        "left_normalizer_is_whole": normalizers.left.is_full(),
        "self_normalizing": normalizers.both.equals(&c, &ctx.tol),
    })))
}

/// The Cartan subalgebra of a cyclic algebra and its three normalizers.
pub fn cartan(input: &Input, opts: &Options) -> Result<Outcome> {
    let prep = prepare(input, opts, true)?;
    Ok(match dispatch!(&prep, c => cartan_ctx(c))? {
        Some(v) => Outcome::ok(v),
        None => not_cyclic(),
    })
}

fn maximals_in_input<G: Field>(
    alg: &LeibnizAlgebra<G>,
    basis: &Matrix<G>,
    report: MaximalsReport<G>,
    oracle: Option<Subspace<G>>,
    tol: &Tolerance,
) -> Result<Value> {
    let maximals = report
        .maximals
        .iter()
        .map(|m| m.map(basis, tol))
        .collect::<Result<Vec<_>>>()?;
    let frattini = report.frattini.map(basis, tol)?;
    let oracle_agrees = match oracle {
        Some(o) => Some(o.map(basis, tol)?.equals(&frattini, tol)),
        None => None,
    };
    let ideals = nilpotency_via_maximals(alg, &maximals)?;
    Ok(json!({
        "backend": G::BACKEND,
        "maximals": to_value(&maximals),
        "frattini": to_value(&frattini),
        "roots": to_value(&report.roots),
        "elementary": to_value(&report.elementary),
        "oracle_agrees": oracle_agrees,
        "ideals": to_value(&ideals),
    }))
}

fn maximals_ctx<F: Field>(ctx: &Ctx<F>) -> Result<Option<Value>> {
    let Some(view) = cyclic_view(ctx)? else { return Ok(None) };
    let p = &view.presentation;
    let oracle_ok = p.dim() <= 4;
    match maximal_subalgebras(p, &ctx.tol) {
        Ok(r) => {
            let oracle = if oracle_ok { Some(frattini_oracle(p, &ctx.tol)?) } else { None };
            maximals_in_input(&ctx.alg, &view.basis, r, oracle, &ctx.tol).map(Some)
        }
        Err(Error::RootsNotExact) => {
            let pf = p.to_c64();
            let r = maximal_subalgebras(&pf, &ctx.tol)?;
            let oracle = if oracle_ok { Some(frattini_oracle(&pf, &ctx.tol)?) } else { None };
            let alg = ctx.alg.to_c64();
            maximals_in_input(&alg, &view.basis.map(F::to_c64), r, oracle, &ctx.tol).map(Some)
        }
        Err(e) => Err(e),
    }
}

/// Maximal and Frattini subalgebras of a cyclic algebra.
///
/// Exact inputs whose companion polynomial has roots outside ℚ(i) are
/// answered on the float backend; the `backend` field says which was used.
pub fn maximals(input: &Input, opts: &Options) -> Result<Outcome> {
    let prep = prepare(input, opts, true)?;
    Ok(match dispatch!(&prep, c => maximals_ctx(c))? {
        Some(v) => Outcome::ok(v),
        None => not_cyclic(),
    })
}

fn derivations_ctx<F: Field>(ctx: &Ctx<F>) -> Result<Value> {
    let d = derivations(&ctx.alg)?;
    Ok(json!({
        "dim": d.dim(),
        "inner_dim": d.inner_dim(),
        "outer_dim": d.outer_dim,
        "basis": to_value(&d.basis),
        "inner_basis": to_value(&d.inner_basis),
    }))
}

pub fn derivation_space(input: &Input, opts: &Options) -> Result<Outcome> {
    let prep = prepare(input, opts, true)?;
    Ok(Outcome::ok(dispatch!(&prep, c => derivations_ctx(c))?))
}

pub fn killing_form(input: &Input, opts: &Options) -> Result<Outcome> {
    let prep = prepare(input, opts, true)?;
    Ok(Outcome::ok(dispatch!(&prep, c => killing(&c.alg).map(|k| to_value(&k)))?))
}

fn is_cyclic_ctx<F: Field>(ctx: &Ctx<F>) -> Result<Value> {
    let report = is_cyclic(&ctx.alg)?;
    let mut v = to_value(&report);
    if let Some(t) = &report.generator {
        let p = presentation_of_generator(&ctx.alg, t)?;
        v["presentation"] = vector_json(p.coeffs());
    }
    Ok(v)
}

/// Cyclicity decision with a generator and the presentation it induces.
pub fn cyclicity(input: &Input, opts: &Options) -> Result<Outcome> {
    let prep = prepare(input, opts, true)?;
    Ok(Outcome::ok(dispatch!(&prep, c => is_cyclic_ctx(c))?))
}

fn section(out: &mut Map<String, Value>, skipped: &mut Map<String, Value>, name: &str, r: Result<Option<Value>>, reason: &str) {
    match r {
        Ok(Some(v)) => {
            out.insert(name.into(), v);
        }
        Ok(None) => {
            skipped.insert(name.into(), Value::String(reason.into()));
        }
        Err(e) => {
            skipped.insert(name.into(), Value::String(format!("error: {e}")));
        }
    }
}

fn analyze_ctx<F: Field>(ctx: &Ctx<F>, input_json: Value) -> Result<Value> {
    let mut out = Map::new();
    let mut skipped = Map::new();
    out.insert("input".into(), input_json);
    out.insert("backend".into(), to_value(&F::BACKEND));
    out.insert("tolerance".into(), to_value(&ctx.tol));
    out.insert("dim".into(), json!(ctx.alg.dim()));
    let check = check_json(&ctx.alg.verify_leibniz());
    let valid = check["leibniz"] == true;
    out.insert("leibniz".into(), check);
    if !valid {
        let reason = "tensor fails the Leibniz identity";
        for name in ["cyclicity", "series", "engel_condition", "derivations", "killing"] {
            skipped.insert(name.into(), Value::String(reason.into()));
        }
        out.insert("skipped".into(), Value::Object(skipped));
        return Ok(Value::Object(out));
    }

    let view = cyclic_view(ctx)?;
    out.insert("cyclic".into(), json!(view.is_some()));
    section(&mut out, &mut skipped, "cyclicity", is_cyclic_ctx(ctx).map(Some), "");

    let not_cyclic = "algebra is not cyclic";
    let classification = match (&view, ctx.alg.dim()) {
        (Some(v), 3) => classify3(&v.presentation, &ctx.tol).map(|c| Some(to_value(&c))),
        (Some(_), _) => Ok(None),
        (None, _) => Ok(None),
    };
    let class_reason = if view.is_some() { "classification covers dimension 3 only" } else { not_cyclic };
    section(&mut out, &mut skipped, "classification", classification, class_reason);

    let lcs = lower_central_series(&ctx.alg)?;
    let ds = derived_series(&ctx.alg)?;
    out.insert("nilpotent".into(), json!(lcs.verdict == SeriesVerdict::Nilpotent));
    out.insert("solvable".into(), json!(ds.verdict == SeriesVerdict::Solvable));
    section(&mut out, &mut skipped, "series", series_ctx(ctx).map(Some), "");
    section(&mut out, &mut skipped, "engel_condition", engel_ctx(ctx, None).map(Some), "");
    section(&mut out, &mut skipped, "cartan", cartan_ctx(ctx), not_cyclic);
    section(&mut out, &mut skipped, "maximals", maximals_ctx(ctx), not_cyclic);
    section(&mut out, &mut skipped, "derivations", derivations_ctx(ctx).map(Some), "");
    section(&mut out, &mut skipped, "killing", killing(&ctx.alg).map(|k| Some(to_value(&k))), "");
    let semisimple = match (&view, ctx.alg.dim()) {
        (Some(v), 3) => semisimplicity_counterexamples(&v.presentation).map(|r| {
            Some(json!({
                "solvable": r.solvable,
                "leib_equals_perp_not_sufficient": r.leib_equals_perp_not_sufficient,
                "rad_equals_perp_not_sufficient": r.rad_equals_perp_not_sufficient,
            }))
        }),
        _ => Ok(None),
    };
    section(&mut out, &mut skipped, "semisimplicity", semisimple, "needs a 3-dimensional cyclic algebra");
    out.insert("skipped".into(), Value::Object(skipped));
    Ok(Value::Object(out))
}

/// Everything at once; sections whose preconditions fail are listed under
/// `skipped` with a reason.
pub fn analyze(input: &Input, opts: &Options) -> Result<Outcome> {
    let prep = prepare(input, opts, true)?;
    let text = match input {
        Input::Algebra(a) => a.to_json(),
        Input::Cyclic(p) => p.to_json(),
    };
    let input_json: Value = serde_json::from_str(&text).expect("emitted JSON parses");
    Ok(Outcome::ok(dispatch!(&prep, c => analyze_ctx(c, input_json.clone()))?))
}
