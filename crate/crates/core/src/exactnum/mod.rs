//! Scalars over the complex numbers, in two regimes.
//!
//! Structural computations (products, series, kernels, derivations, Gram
//! matrices) run on exact Gaussian rationals whenever the structure
//! constants allow it. Anything that needs roots of a polynomial runs on
//! `Complex<f64>` under a [`Tolerance`].

mod field;
mod poly;
mod roots;
mod scalar;

pub use field::{gaussian, gaussian_ratio, Field, GaussianRational, C64};
pub use poly::Poly;
pub use roots::{poly_roots, poly_roots_with_radius, FactoredPoly, RootCluster};
pub use scalar::{
    format_gaussian, parse_gaussian, scalar_arith, sqrt_principal, ArithOp, Backend, Scalar,
    Tolerance,
};
