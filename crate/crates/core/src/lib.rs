//! Exact computations with finite-dimensional Hopf algebras: (co)induction
//! along Hopf morphisms, projection-formula isomorphisms, induced
//! Yetter–Drinfeld structures, commutative central monoids and their module
//! categories.

pub mod adjoint;
pub mod builders;
pub mod center;
pub mod cli;
pub mod exactmath;
pub mod hopf;
pub mod monoid;
pub mod rep;
pub mod report;

use thiserror::Error;

pub use exactmath::MathError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Math(#[from] MathError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("no antipode: the convolution system is unsolvable")]
    NoAntipode,
    #[error("supplied antipode differs from the computed one")]
    AntipodeMismatch,
    #[error("H is not recognized as finitely generated projective over K: {0}")]
    NotProjective(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
