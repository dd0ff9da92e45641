//! Exact dense linear algebra: matrices, canonical subspaces, quotients.

mod matrix;
mod subspace;

pub use matrix::Matrix;
pub use subspace::{free_columns, quotient_map, unit_vector, Subspace};
