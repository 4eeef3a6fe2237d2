//! Exact deformation cohomology for associative, Lie, pre-Lie, Leibniz and
//! 3-Lie algebras given by structure constants over the rationals.
//!
//! The crate computes coboundary matrices and cohomology dimensions, the
//! graded Lie brackets whose Maurer-Cartan elements are these structures,
//! the comparison maps between the complexes, and deformation checks.

pub mod brackets;
pub mod cli;
pub mod cochains;
pub mod cohomology;
pub mod combinatorics;
pub mod comparisons;
pub mod deformations;
pub mod error;
pub mod linalg;
pub mod representations;
pub mod samples;
pub mod structures;

pub use error::{Error, Result};
pub use linalg::{Matrix, Scalar};
pub use structures::{Algebra, AlgebraKind};
