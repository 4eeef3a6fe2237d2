//! Exact rational linear algebra: scalars, dense matrices, rank and kernels.
//!
//! Every cohomology dimension in the crate reduces to [`rank_nullity`] on a
//! coboundary matrix; nothing here uses floating point or pivot tolerances.

mod matrix;
mod scalar;

pub use matrix::Matrix;
pub use scalar::{ParseScalarError, Scalar};

/// `(rank, nullity)` of `m`, computed by exact Gaussian elimination.
pub fn rank_nullity(m: &Matrix) -> (usize, usize) {
    m.rank_nullity()
}

/// Linearly independent vectors spanning the kernel of `m`.
pub fn kernel_basis(m: &Matrix) -> Vec<Vec<Scalar>> {
    m.kernel_basis()
}
