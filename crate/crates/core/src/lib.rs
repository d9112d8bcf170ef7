//! Structural invariants of finite-dimensional Leibniz algebras over ℂ.
//!
//! The crate is organised bottom-up:
//!
//! * [`exactnum`]: Gaussian-rational and floating complex scalars, polynomials, roots.
//! * [`linalg`]: dense matrices and subspaces in canonical echelon form.
//! * [`algebra`]: structure constants, products, ideals and normalizers.
//! * [`series`]: lower central, derived and right-normed series; Engel conditions.
//! * [`cyclic`]: cyclic algebras, cyclicity testing and the 3-dimensional classification.
//! * [`subalgebra`]: Engel, Cartan, maximal and Frattini subalgebras.
//! * [`invariants`]: derivation algebras and Killing forms.
//! * [`io`] and [`report`]: the JSON formats and the aggregated analysis used by the CLI.

pub mod algebra;
pub mod catalog;
pub mod cyclic;
pub mod error;
pub mod exactnum;
pub mod invariants;
pub mod io;
pub mod linalg;
pub mod report;
pub mod series;
pub mod subalgebra;

pub use algebra::{IdealStatus, LeibnizAlgebra, LeibnizCheck, Normalizers, Violation};
pub use error::{Error, Result};
pub use exactnum::{Backend, Field, GaussianRational, Poly, Scalar, Tolerance, C64};
pub use linalg::{Matrix, Subspace};
