//! Dense matrices over a [`Field`](crate::exactnum::Field) and canonical subspaces.
//!
//! Vectors are coordinate columns; a matrix `M` acts as `v ↦ M v`, so column
//! `j` of an operator matrix holds the image of basis vector `j`.

mod matrix;
mod subspace;

pub use matrix::{Matrix, Rref};
pub use subspace::Subspace;
