//! Named example algebras; `fixtures/*.json` is generated from this list.

use crate::algebra::LeibnizAlgebra;
use crate::cyclic::{build_cyclic, CyclicPresentation};
use crate::exactnum::{gaussian, gaussian_ratio, Field, GaussianRational, C64};
use crate::io::{AnyAlgebra, AnyPresentation, Input};

type Q = GaussianRational;

fn q(v: i64) -> Q {
    Q::from_i64(v)
}

/// `aa³ = 0`.
pub fn type1() -> LeibnizAlgebra<Q> {
    build_cyclic(&CyclicPresentation::dim3(q(0), q(0)))
}

/// `aa³ = a³`.
pub fn type2() -> LeibnizAlgebra<Q> {
    build_cyclic(&CyclicPresentation::dim3(q(0), q(1)))
}

/// [`type2`] with the extra product `a²·a³ = a³`; fails the identity at `(a, a, a³)`.
pub fn type2_broken() -> LeibnizAlgebra<Q> {
    let base = type2();
    let mut products = Vec::new();
    for i in 0..3 {
        for j in 0..3 {
            let mut c = base.basis_product(i, j).to_vec();
            if (i, j) == (1, 2) {
                c[2] = q(1);
            }
            products.push((i, j, c));
        }
    }
    LeibnizAlgebra::from_products(3, products).expect("3-dim products")
}

/// `aa³ = a² + γa³`.
pub fn type3<F: Field>(gamma: F) -> LeibnizAlgebra<F> {
    build_cyclic(&CyclicPresentation::dim3(F::one(), gamma))
}

pub fn sqrt2_i() -> C64 {
    C64::new(0.0, 2f64.sqrt())
}

pub fn three_over_sqrt2_i() -> C64 {
    C64::new(0.0, 3.0 / 2f64.sqrt())
}

fn alg3(products: &[(usize, usize, [i64; 3])]) -> LeibnizAlgebra<Q> {
    LeibnizAlgebra::from_products(3, products.iter().map(|(i, j, c)| (*i, *j, c.iter().map(|&x| q(x)).collect())))
        .expect("3-dim products")
}

// Basis (x, y, z) = (b₁, b₂, b₃); indices below are 0-based.
const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

/// 3-dimensional non-Lie nilpotent Leibniz algebras, in the order of Demir et al.
/// `alpha` is used only by class 5 and must avoid ±1.
pub fn demir_nilpotent(class: u8, alpha: i64) -> LeibnizAlgebra<Q> {
    match class {
        1 => alg3(&[(X, X, [0, 1, 0]), (X, Y, [0, 0, 1])]),
        2 => alg3(&[(X, X, [0, 0, 1])]),
        3 => alg3(&[(X, Y, [0, 0, 1]), (Y, X, [0, 0, 1])]),
        4 => alg3(&[(X, Y, [0, 0, 1]), (Y, X, [0, 0, -1]), (Y, Y, [0, 0, 1])]),
        5 => alg3(&[(X, Y, [0, 0, 1]), (Y, X, [0, 0, alpha])]),
        _ => panic!("no class {class}"),
    }
}

/// 3-dimensional non-nilpotent Leibniz algebras, in the order of Demir et al.; `alpha` is used by classes 2 and 5.
pub fn demir_non_nilpotent(class: u8, alpha: i64) -> LeibnizAlgebra<Q> {
    match class {
        1 => alg3(&[(Z, X, [1, 0, 0])]),
        2 => alg3(&[(Z, X, [alpha, 0, 0]), (Z, Y, [0, 1, 0]), (Y, Z, [0, -1, 0])]),
        3 => alg3(&[(Z, Y, [0, 1, 0]), (Y, Z, [0, -1, 0]), (Z, Z, [1, 0, 0])]),
        4 => alg3(&[(Z, X, [2, 0, 0]), (Y, Y, [1, 0, 0]), (Z, Y, [0, 1, 0]), (Y, Z, [0, -1, 0]), (Z, Z, [1, 0, 0])]),
        5 => alg3(&[(Z, Y, [0, 1, 0]), (Z, X, [alpha, 0, 0])]),
        6 => alg3(&[(Z, X, [1, 1, 0]), (Z, Y, [0, 1, 0])]),
        7 => alg3(&[(Z, X, [0, 1, 0]), (Z, Y, [0, 1, 0]), (Z, Z, [1, 0, 0])]),
        _ => panic!("no class {class}"),
    }
}

pub struct Fixture {
    pub name: String,
    pub input: Input,
}

fn exact(name: &str, a: LeibnizAlgebra<Q>) -> Fixture {
    Fixture { name: name.into(), input: Input::Algebra(AnyAlgebra::Exact(a)) }
}

fn float(name: &str, a: LeibnizAlgebra<C64>) -> Fixture {
    Fixture { name: name.into(), input: Input::Algebra(AnyAlgebra::Float(a)) }
}

/// Every shipped fixture, in file-name order of generation.
pub fn fixtures() -> Vec<Fixture> {
    let mut out = vec![
        exact("type1", type1()),
        exact("type2", type2()),
        exact("type2_broken", type2_broken()),
        exact("type3_gamma0", type3(q(0))),
        exact("type3_gamma1", type3(q(1))),
        exact("type3_gamma2i", type3(gaussian(0, 2))),
        exact("type3_gamma3_plus_i", type3(gaussian(3, 1))),
        float("type3_gamma_sqrt2i", type3(sqrt2_i())),
        float("type3_gamma_3_over_sqrt2_i", type3(three_over_sqrt2_i())),
        exact("nilpotent2", build_cyclic(&CyclicPresentation::new(vec![q(0)]).expect("dim 2"))),
        exact("abelian2", LeibnizAlgebra::abelian(2).expect("dim 2")),
        exact("abelian3", LeibnizAlgebra::abelian(3).expect("dim 3")),
    ];
    for class in 1..=4 {
        out.push(exact(&format!("demir_nilpotent_class{class}"), demir_nilpotent(class, 0)));
    }
    out.push(exact("demir_nilpotent_class5_alpha2", demir_nilpotent(5, 2)));
    for class in [1, 3, 4, 6, 7] {
        out.push(exact(&format!("demir_nonnilpotent_class{class}"), demir_non_nilpotent(class, 0)));
    }
    for alpha in [-1, 1, 2] {
        let tag = if alpha < 0 { format!("m{}", -alpha) } else { alpha.to_string() };
        out.push(exact(&format!("demir_nonnilpotent_class2_alpha{tag}"), demir_non_nilpotent(2, alpha)));
        out.push(exact(&format!("demir_nonnilpotent_class5_alpha{tag}"), demir_non_nilpotent(5, alpha)));
    }
    out.push(Fixture {
        name: "cyclic3_gamma1".into(),
        input: Input::Cyclic(AnyPresentation::Exact(CyclicPresentation::dim3(q(1), q(1)))),
    });
    out.push(Fixture {
        name: "cyclic4_example".into(),
        input: Input::Cyclic(AnyPresentation::Exact(
            CyclicPresentation::new(vec![q(0), gaussian_ratio((1, 2), (0, 1)), q(-1)]).expect("dim 4"),
        )),
    });
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

impl Fixture {
    pub fn file_name(&self) -> String {
        format!("{}.json", self.name)
    }

    pub fn to_json(&self) -> String {
        match &self.input {
            Input::Algebra(a) => a.to_json(),
            Input::Cyclic(p) => p.to_json(),
        }
    }
}

pub fn fixture(name: &str) -> Option<Input> {
    fixtures().into_iter().find(|f| f.name == name).map(|f| f.input)
}
