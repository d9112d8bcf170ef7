//! The eight acceptance criteria. Runs without the libtest harness so that
//! each criterion prints exactly one PASS/FAIL line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use leibniz_core::catalog::{demir_nilpotent, demir_non_nilpotent, three_over_sqrt2_i};
use leibniz_core::cyclic::{
    build_cyclic, classify3, is_cyclic, is_generator, presentation_of_generator, CanonicalClass,
    CyclicPresentation, CyclicityMethod,
};
use leibniz_core::exactnum::{gaussian, gaussian_ratio};
use leibniz_core::invariants::{derivations, is_derivation, killing, semisimplicity_counterexamples};
use leibniz_core::series::{
    engel_condition, is_nilpotent, nilpotency_via_maximals, right_normed_series, Side,
};
use leibniz_core::subalgebra::{
    cartan_cyclic, engel_scan, engel_subalgebra, fitting, frattini_oracle, maximal_subalgebras, Elementary,
};
use leibniz_core::{Error, Field, GaussianRational, LeibnizAlgebra, Matrix, Subspace, Tolerance, C64};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Q = GaussianRational;
type Outcome = std::result::Result<(), String>;
type MaximalsRow = (&'static str, CyclicPresentation<Q>, Vec<Subspace<Q>>, Subspace<Q>);
type Criterion = (&'static str, fn() -> Outcome);
type DerivationCase = (String, CyclicPresentation<Q>, Vec<Matrix<Q>>, (usize, usize, usize));

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {{
        let holds: bool = $cond;
        if !holds {
            return Err(format!($($msg)+));
        }
    }};
}

fn q(v: i64) -> Q {
    Q::from_i64(v)
}

fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

fn tol() -> Tolerance {
    Tolerance::default()
}

fn v<F: Field>(xs: &[F]) -> Vec<F> {
    xs.to_vec()
}

fn span<F: Field>(vs: &[Vec<F>]) -> Subspace<F> {
    Subspace::span(vs, vs[0].len(), &tol()).expect("span")
}

fn a2<F: Field>() -> Subspace<F> {
    Subspace::span(&[v(&[F::zero(), F::one(), F::zero()]), v(&[F::zero(), F::zero(), F::one()])], 3, &tol()).unwrap()
}

fn m3(rows: [[Q; 3]; 3]) -> Matrix<Q> {
    Matrix::from_rows(rows.into_iter().map(|r| r.to_vec()).collect()).unwrap()
}

fn err(e: Error) -> String {
    e.to_string()
}

fn within(start: Instant, limit: Duration, what: &str) -> Outcome {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:?}, limit {limit:?}");
    Ok(())
}

/// Expected class from `(α, β)` alone, with `γ` checked through `γ² = β²/α`.
fn check_class<F: Field>(alpha: &F, beta: &F, got: &CanonicalClass) -> Outcome {
    let (al, be) = (alpha.to_c64(), beta.to_c64());
    let scale = al.norm().max(be.norm()).max(1.0);
    let zero_a = alpha.is_negligible(1e-7 * scale);
    let zero_b = beta.is_negligible(1e-7 * scale);
    match got {
        CanonicalClass::Nilpotent => ensure!(zero_a && zero_b, "({al}, {be}) classified nilpotent"),
        CanonicalClass::TypeII => ensure!(zero_a && !zero_b, "({al}, {be}) classified type2"),
        CanonicalClass::TypeIII { gamma } => {
            ensure!(!zero_a, "({al}, {be}) classified type3");
            let want = be * be / al;
            ensure!(
                (gamma * gamma - want).norm() <= 1e-8 * want.norm().max(1.0),
                "({al}, {be}): γ = {gamma}, γ² should be {want}"
            );
            let in_window = *gamma == c(0.0, 0.0)
                || (gamma.arg() >= 0.0 && gamma.arg() < std::f64::consts::PI);
            ensure!(in_window, "γ = {gamma} outside the argument window");
        }
    }
    Ok(())
}

/// Re-present the algebra through a random generator and classify again.
fn reclassify(p: &CyclicPresentation<C64>, rng: &mut ChaCha8Rng) -> std::result::Result<CanonicalClass, String> {
    let alg = build_cyclic(p);
    let mut t: Vec<C64> = (0..3).map(|_| c(rng.random_range(-3.0..3.0), rng.random_range(-3.0..3.0))).collect();
    if t[0].norm() < 0.5 {
        t[0] = c(1.0, 0.5);
    }
    let p2 = presentation_of_generator(&alg, &t).map_err(err)?;
    classify3(&p2, &tol()).map_err(err)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let tol = tol();
    for a in -10..=10 {
        for b in -10..=10 {
            let (alpha, beta) = (gaussian_ratio((a, 2), (0, 1)), gaussian_ratio((b, 3), (0, 1)));
            let p = CyclicPresentation::dim3(alpha.clone(), beta.clone());
            let cls = classify3(&p, &tol).map_err(err)?;
            check_class(&alpha, &beta, &cls)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 0..200 {
        let mut draw = || c(rng.random_range(-5.0..5.0), rng.random_range(-5.0..5.0));
        let (mut alpha, beta) = (draw(), draw());
        if k % 10 == 0 {
            alpha = c(0.0, 0.0);
        }
        let p = CyclicPresentation::dim3(alpha, beta);
        let cls = classify3(&p, &tol).map_err(err)?;
        check_class(&alpha, &beta, &cls)?;
        let again = reclassify(&p, &mut rng)?;
        ensure!(cls.matches(&again, 1e-6), "({alpha}, {beta}): {cls:?} but {again:?} from another generator");
    }
    let one = c(1.0, 0.0);
    for _ in 0..50 {
        let g = c(rng.random_range(-4.0..4.0), rng.random_range(-4.0..4.0));
        let pos = classify3(&CyclicPresentation::dim3(one, g), &tol).map_err(err)?;
        let neg = classify3(&CyclicPresentation::dim3(one, -g), &tol).map_err(err)?;
        ensure!(pos.matches(&neg, 1e-12), "γ = {g}: {pos:?} vs {neg:?}");
    }
    let mut compared = 0;
    while compared < 50 {
        let g1 = c(rng.random_range(-4.0..4.0), rng.random_range(-4.0..4.0));
        let g2 = c(rng.random_range(-4.0..4.0), rng.random_range(-4.0..4.0));
        if (g1.norm() - g2.norm()).abs() < 1e-3 {
            continue;
        }
        compared += 1;
        let c1 = classify3(&CyclicPresentation::dim3(one, g1), &tol).map_err(err)?;
        let c2 = classify3(&CyclicPresentation::dim3(one, g2), &tol).map_err(err)?;
        ensure!(!c1.matches(&c2, 1e-9), "γ = {g1} and {g2} identified");
    }
    within(start, Duration::from_secs(1), "classification")
}

fn generic_row(gamma: C64) -> Outcome {
    let p = CyclicPresentation::dim3(c(1.0, 0.0), gamma);
    let r = maximal_subalgebras(&p, &tol()).map_err(err)?;
    // r₁, r₂ are the roots of x² − γx − 1.
    let disc = (gamma * gamma + 4.0).sqrt();
    let (r1, r2) = ((gamma + disc) / 2.0, (gamma - disc) / 2.0);
    let (z, o) = (c(0.0, 0.0), c(1.0, 0.0));
    let want = [
        a2(),
        span(&[v(&[z, r1, -o]), v(&[o, r2, z])]),
        span(&[v(&[z, r2, -o]), v(&[o, r1, z])]),
    ];
    let cmp = Tolerance::scaled(1e-9).map_err(err)?;
    ensure!(r.maximals.len() == 3, "γ = {gamma}: {} maximals", r.maximals.len());
    for w in &want {
        ensure!(r.maximals.iter().any(|m| m.equals(w, &cmp)), "γ = {gamma}: missing maximal {w:?}");
    }
    ensure!(r.frattini.is_zero(), "γ = {gamma}: Frattini {:?}", r.frattini);
    let oracle = frattini_oracle(&p, &tol()).map_err(err)?;
    ensure!(oracle.equals(&r.frattini, &cmp), "γ = {gamma}: oracle disagrees");
    ensure!(r.elementary == Elementary::Yes, "γ = {gamma}: elementary {:?}", r.elementary);
    Ok(())
}

fn criterion_2() -> Outcome {
    let tol = tol();
    let i = gaussian(0, 1);
    let rows: [MaximalsRow; 3] = [
        ("type (i)", CyclicPresentation::dim3(q(0), q(0)), vec![a2()], a2()),
        (
            "type (ii)",
            CyclicPresentation::dim3(q(0), q(1)),
            vec![a2(), span(&[v(&[q(1), q(-1), q(0)]), v(&[q(1), q(0), q(-1)])])],
            span(&[v(&[q(0), q(1), q(-1)])]),
        ),
        (
            "γ = 2i",
            CyclicPresentation::dim3(q(1), gaussian(0, 2)),
            vec![a2(), span(&[v(&[i.clone(), q(-1), q(0)]), v(&[q(1), q(0), q(1)])])],
            span(&[v(&[q(0), i.clone(), q(-1)])]),
        ),
    ];
    for (name, p, maximals, frattini) in rows {
        let r = maximal_subalgebras(&p, &tol).map_err(err)?;
        ensure!(r.maximals.len() == maximals.len(), "{name}: {} maximals", r.maximals.len());
        for m in &maximals {
            ensure!(r.maximals.contains(m), "{name}: missing maximal {m:?}");
        }
        ensure!(r.frattini == frattini, "{name}: Frattini {:?}", r.frattini);
        ensure!(frattini_oracle(&p, &tol).map_err(err)? == frattini, "{name}: oracle disagrees");
        ensure!(r.elementary == Elementary::No, "{name}: elementary {:?}", r.elementary);
    }
    generic_row(c(1.0, 0.0))?;
    generic_row(c(3.0, 1.0))
}

fn criterion_3() -> Outcome {
    let a = v(&[q(1), q(0), q(0)]);
    let mut cases = vec![(
        "type (ii)",
        CyclicPresentation::dim3(q(0), q(1)),
        span(&[v(&[q(1), q(0), q(-1)]), v(&[q(0), q(1), q(-1)])]),
    )];
    for g in [q(0), q(1), gaussian(0, 2)] {
        cases.push(("type (iii)", CyclicPresentation::dim3(q(1), g.clone()), span(&[v(&[q(1), g, q(-1)])])));
    }
    for (name, p, want) in &cases {
        let alg = build_cyclic(p);
        let e = engel_subalgebra(&alg, &a).map_err(err)?;
        ensure!(&e == want, "{name}: engel subalgebra {e:?}");
        let scan = engel_scan(&alg, -2..=2).map_err(err)?;
        ensure!(scan.distinct.len() == 2, "{name}: scan found {} subalgebras", scan.distinct.len());
        ensure!(scan.distinct.contains(want), "{name}: scan misses A₀");
        ensure!(scan.distinct.contains(&Subspace::full(3)), "{name}: scan misses A");
        let cartan = cartan_cyclic(p).map_err(err)?;
        ensure!(&cartan == want, "{name}: cartan {cartan:?}");
        ensure!(is_nilpotent(&alg.induced(&cartan).map_err(err)?).map_err(err)?, "{name}: cartan not nilpotent");
        let norm = alg.normalizers(&cartan).map_err(err)?;
        ensure!(norm.both == cartan, "{name}: not self-normalizing");
        ensure!(norm.left.is_full(), "{name}: left normalizer {:?}", norm.left);
    }
    let t2 = build_cyclic(&cases[0].1);
    let right = t2.normalizers(&cases[0].2).map_err(err)?.right;
    ensure!(right == cases[0].2, "type (ii): right normalizer {right:?}");
    Ok(())
}

fn non_nilpotent_fixtures() -> Vec<(&'static str, LeibnizAlgebra<Q>)> {
    vec![
        ("type2", build_cyclic(&CyclicPresentation::dim3(q(0), q(1)))),
        ("type3 γ=0", build_cyclic(&CyclicPresentation::dim3(q(1), q(0)))),
        ("type3 γ=1", build_cyclic(&CyclicPresentation::dim3(q(1), q(1)))),
        ("type3 γ=2i", build_cyclic(&CyclicPresentation::dim3(q(1), gaussian(0, 2)))),
        ("type3 γ=3+i", build_cyclic(&CyclicPresentation::dim3(q(1), gaussian(3, 1)))),
    ]
}

fn criterion_4() -> Outcome {
    let tol = tol();
    let p2 = CyclicPresentation::dim3(q(0), q(1));
    let t2 = build_cyclic(&p2);
    let r = maximal_subalgebras(&p2, &tol).map_err(err)?;
    let s = nilpotency_via_maximals(&t2, &r.maximals).map_err(err)?;
    ensure!(s.all_left, "type (ii): a maximal subalgebra is not a left ideal");
    ensure!(!s.all_right, "type (ii): every maximal subalgebra is a right ideal");
    ensure!(!is_nilpotent(&t2).map_err(err)?, "type (ii) reported nilpotent");
    for (name, alg) in non_nilpotent_fixtures() {
        ensure!(!is_nilpotent(&alg).map_err(err)?, "{name} reported nilpotent");
        let rn = right_normed_series(&alg).map_err(err)?;
        ensure!(rn.vanishes_at == Some(3), "{name}: right-normed series {:?}", rn.dims());
        let e = engel_condition(&alg, Side::Right).map_err(err)?;
        ensure!(e.all_nilpotent, "{name}: a right multiplication is not nilpotent");
    }
    let p1 = CyclicPresentation::dim3(q(0), q(0));
    let nil = build_cyclic(&p1);
    let r = maximal_subalgebras(&p1, &tol).map_err(err)?;
    let s = nilpotency_via_maximals(&nil, &r.maximals).map_err(err)?;
    ensure!(s.all_two_sided, "nilpotent: a maximal subalgebra is not an ideal");
    Ok(())
}

/// Known derivation families at the unit vectors of their free parameters.
fn derivation_families(beta: Option<&Q>) -> Vec<Matrix<Q>> {
    let (z, o) = (q(0), q(1));
    match beta {
        None => vec![
            m3([[o.clone(), z.clone(), z.clone()], [z.clone(), q(2), z.clone()], [z.clone(), z.clone(), q(3)]]),
            m3([[z.clone(), z.clone(), z.clone()], [o.clone(), z.clone(), z.clone()], [z.clone(), o.clone(), z.clone()]]),
            m3([[z.clone(), z.clone(), z.clone()], [z.clone(), z.clone(), z.clone()], [o.clone(), z.clone(), z.clone()]]),
        ],
        Some(g) => {
            let g2 = g.clone() * g.clone() + o.clone();
            vec![
                m3([[z.clone(), z.clone(), z.clone()], [o.clone(), z.clone(), o.clone()], [z.clone(), o.clone(), g.clone()]]),
                m3([[z.clone(), z.clone(), z.clone()], [z.clone(), o.clone(), g.clone()], [o.clone(), g.clone(), g2]]),
            ]
        }
    }
}

fn type2_families() -> Vec<Matrix<Q>> {
    let (z, o) = (q(0), q(1));
    vec![
        m3([[z.clone(), z.clone(), z.clone()], [o.clone(), z.clone(), z.clone()], [z.clone(), o.clone(), o.clone()]]),
        m3([[z.clone(), z.clone(), z.clone()], [z.clone(), z.clone(), z.clone()], [o.clone(), o.clone(), o.clone()]]),
    ]
}

fn flat_span(ms: &[Matrix<Q>]) -> Subspace<Q> {
    let flat: Vec<Vec<Q>> = ms.iter().map(|m| m.entries().to_vec()).collect();
    Subspace::span(&flat, 9, &tol()).unwrap()
}

fn criterion_5() -> Outcome {
    let mut cases: Vec<DerivationCase> = vec![
        ("type (i)".into(), CyclicPresentation::dim3(q(0), q(0)), derivation_families(None), (3, 1, 2)),
        ("type (ii)".into(), CyclicPresentation::dim3(q(0), q(1)), type2_families(), (2, 1, 1)),
    ];
    for g in [q(0), q(1), gaussian(0, 2), gaussian(3, 1)] {
        let fam = derivation_families(Some(&g));
        cases.push((format!("type (iii) γ = {g}"), CyclicPresentation::dim3(q(1), g), fam, (2, 1, 1)));
    }
    for (name, p, family, dims) in cases {
        let alg = build_cyclic(&p);
        let ds = derivations(&alg).map_err(err)?;
        let got = (ds.dim(), ds.inner_dim(), ds.outer_dim);
        ensure!(got == dims, "{name}: (dim, inner, outer) = {got:?}");
        for d in &family {
            ensure!(is_derivation(&alg, d).map_err(err)?, "{name}: family member {d:?} rejected");
        }
        ensure!(flat_span(&family) == flat_span(&ds.basis), "{name}: derivation space differs from the family");
        // Inner derivations are the members with α₃ = 0 (and α₁ = 0), spanned by the α₂ member.
        let inner_member = if dims.0 == 3 { &family[1] } else { &family[0] };
        ensure!(
            flat_span(std::slice::from_ref(inner_member)) == flat_span(&ds.inner_basis),
            "{name}: inner derivations differ"
        );
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let nil = killing(&build_cyclic(&CyclicPresentation::dim3(q(0), q(0)))).map_err(err)?;
    ensure!(nil.gram.is_negligible(0.0) && nil.trivial, "type (i): gram {:?}", nil.gram);

    let t2 = build_cyclic(&CyclicPresentation::dim3(q(0), q(1)));
    let k = killing(&t2).map_err(err)?;
    ensure!(k.gram[(0, 0)] == q(1), "type (ii): κ(a,a) = {}", k.gram[(0, 0)]);
    let nonzero = k.gram.entries().iter().filter(|x| **x != q(0)).count();
    ensure!(nonzero == 1, "type (ii): {nonzero} nonzero gram entries");
    ensure!(k.radical == a2() && k.radical == t2.leib_ideal(), "type (ii): radical {:?}", k.radical);

    for g in [q(0), q(1), gaussian(0, 2), gaussian(3, 1)] {
        let k = killing(&build_cyclic(&CyclicPresentation::dim3(q(1), g.clone()))).map_err(err)?;
        let want = g.clone() * g.clone() + q(2);
        ensure!(k.gram[(0, 0)] == want, "γ = {g}: κ(a,a) = {}", k.gram[(0, 0)]);
        ensure!(k.radical == a2(), "γ = {g}: radical {:?}", k.radical);
    }

    let p = CyclicPresentation::dim3(c(1.0, 0.0), c(0.0, 2f64.sqrt()));
    let k = killing(&build_cyclic(&p)).map_err(err)?;
    ensure!(k.gram[(0, 0)].norm() < 1e-9, "γ = √2·i: κ(a,a) = {}", k.gram[(0, 0)]);
    ensure!(k.radical.is_full() && k.radical_equals_whole, "γ = √2·i: radical {:?}", k.radical);

    let r = semisimplicity_counterexamples(&CyclicPresentation::dim3(q(1), q(1))).map_err(err)?;
    ensure!(r.solvable && r.leib_equals_perp_not_sufficient, "γ = 1: Leib(A) = A^⊥ counterexample not flagged");
    let r = semisimplicity_counterexamples(&p).map_err(err)?;
    ensure!(r.solvable && r.rad_equals_perp_not_sufficient, "γ = √2·i: rad(A) = A^⊥ counterexample not flagged");
    Ok(())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut not_cyclic: Vec<(String, LeibnizAlgebra<Q>)> = Vec::new();
    for class in 2..=5 {
        not_cyclic.push((format!("nilpotent list ({class})"), demir_nilpotent(class, 2)));
    }
    for class in 1..=4 {
        not_cyclic.push((format!("non-nilpotent list ({class})"), demir_non_nilpotent(class, 2)));
    }
    not_cyclic.push(("non-nilpotent list (5), α = 1".into(), demir_non_nilpotent(5, 1)));
    for (name, alg) in &not_cyclic {
        let r = is_cyclic(alg).map_err(err)?;
        ensure!(r.method == CyclicityMethod::Grid, "{name}: method {:?}", r.method);
        ensure!(!r.cyclic, "{name}: reported cyclic with generator {:?}", r.generator);
    }
    let cyclic = [
        ("nilpotent list (1)", demir_nilpotent(1, 0)),
        ("non-nilpotent list (5), α = 2", demir_non_nilpotent(5, 2)),
        ("non-nilpotent list (5), α = -1", demir_non_nilpotent(5, -1)),
        ("non-nilpotent list (6)", demir_non_nilpotent(6, 0)),
        ("non-nilpotent list (7)", demir_non_nilpotent(7, 0)),
    ];
    let mut classes = Vec::new();
    for (name, alg) in &cyclic {
        let r = is_cyclic(alg).map_err(err)?;
        ensure!(r.method == CyclicityMethod::Grid, "{name}: method {:?}", r.method);
        let Some(t) = r.generator.filter(|_| r.cyclic) else {
            return Err(format!("{name}: not reported cyclic"));
        };
        ensure!(is_generator(alg, &t).map_err(err)?, "{name}: generator {t:?} fails verification");
        let p = presentation_of_generator(alg, &t).map_err(err)?;
        classes.push(classify3(&p, &tol()).map_err(err)?);
    }
    ensure!(
        classes[3].matches(&CanonicalClass::TypeIII { gamma: c(0.0, 2.0) }, 1e-9),
        "class (6) → {:?}",
        classes[3]
    );
    ensure!(classes[4] == CanonicalClass::TypeII, "class (7) → {:?}", classes[4]);
    ensure!(
        classes[1].matches(&CanonicalClass::TypeIII { gamma: three_over_sqrt2_i() }, 1e-6),
        "class (5), α = 2 → {:?}",
        classes[1]
    );
    within(start, Duration::from_secs(5), "cyclicity")
}

fn random_rational(rng: &mut ChaCha8Rng) -> Q {
    gaussian_ratio((rng.random_range(-9..=9), rng.random_range(1..=9)), (0, 1))
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let tol = tol();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for case in 0..50 {
        let n = if case % 2 == 0 { 3 } else { 4 };
        let p = CyclicPresentation::new((0..n - 1).map(|_| random_rational(&mut rng)).collect()).map_err(err)?;
        let label = format!("{:?}", p.coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>());
        let alg = build_cyclic(&p);
        ensure!(alg.verify_leibniz().is_ok(), "{label}: not Leibniz");

        let x: Vec<Q> = (0..n).map(|_| random_rational(&mut rng)).collect();
        let mut a = vec![q(0); n];
        a[0] = q(1);
        let lx = alg.left_mult(&x).map_err(err)?;
        let la = alg.left_mult(&a).map_err(err)?;
        ensure!(lx == la.scale(&x[0]), "{label}: L_x ≠ c₁L_a for x = {x:?}");

        for y in [&a, &x] {
            let f = fitting(&alg, y).map_err(err)?;
            ensure!(f.null_component.dim() + f.one_component.dim() == n, "{label}: Fitting dims");
            let e = engel_subalgebra(&alg, y).map_err(err)?;
            ensure!(alg.is_subalgebra(&e).map_err(err)?, "{label}: Engel subalgebra not closed");
        }

        match maximal_subalgebras(&p, &tol) {
            Ok(r) => {
                let oracle = frattini_oracle(&p, &tol).map_err(err)?;
                ensure!(oracle == r.frattini, "{label}: exact Frattini disagrees with intersection");
            }
            Err(Error::RootsNotExact) => {
                let pf = p.to_c64();
                let r = maximal_subalgebras(&pf, &tol).map_err(err)?;
                let oracle = frattini_oracle(&pf, &tol).map_err(err)?;
                ensure!(oracle.equals(&r.frattini, &tol), "{label}: float Frattini disagrees with intersection");
            }
            Err(e) => return Err(format!("{label}: {e}")),
        }
    }
    within(start, Duration::from_secs(10), "property suite")
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 three-dimensional cyclic trichotomy", criterion_1),
        ("2 maximal and Frattini subalgebras", criterion_2),
        ("3 Cartan/Engel", criterion_3),
        ("4 nilpotency counterexamples", criterion_4),
        ("5 derivation spaces", criterion_5),
        ("6 Killing form", criterion_6),
        ("7 Demir cyclicity fixtures", criterion_7),
        ("8 oracle equivalence", criterion_8),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(()) => println!("PASS criterion {name}"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
