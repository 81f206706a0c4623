//! Exact-arithmetic structure theory for finite-dimensional Leibniz
//! algebras over the rationals.

pub mod algebra;
pub mod cli;
pub mod conjugacy;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod levi;
pub mod linmap;
pub mod matrix;
pub mod radicals;
pub mod report;
pub mod scalar;
pub mod smodules;
pub mod subspace;

pub use error::{Error, Result};
pub use matrix::{Matrix, Vector};
pub use scalar::Scalar;
pub use subspace::Subspace;
