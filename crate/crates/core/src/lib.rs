//! Exact computations with central extensions of finite-dimensional
//! one-bracket algebras: relative commutators, centrality and triviality
//! tests, universal central extensions of perfect algebras and their
//! second homology, and the Prüfer-module example.
//!
//! All algorithms are generic over an exact [`Scalar`] field; the crate
//! root re-exports concrete aliases for the rationals and `F_5`.

pub mod algebra;
pub mod error;
pub mod extension;
pub mod io;
pub mod linalg;
pub mod pruefer;
pub mod random;
pub mod samples;
pub mod scalar;
pub mod uce;
pub mod variety;

pub use algebra::{Algebra, AlgebraRef, IdealWitness, LinearMap};
pub use error::{Error, Result};
pub use extension::Extension;
pub use linalg::{Matrix, Subspace};
pub use pruefer::PrueferElement;
pub use scalar::{FieldTag, Fp, Rational, Scalar};
pub use uce::{build_uce, UceResult};
pub use variety::{Law, LawTerm, Variety};

/// Rational numbers.
pub type Q = Rational;
/// The prime field with five elements.
pub type F5 = Fp<5>;

pub type AlgebraQ = Algebra<Q>;
pub type AlgebraF5 = Algebra<F5>;
pub type MatrixQ = Matrix<Q>;
pub type MatrixF5 = Matrix<F5>;
