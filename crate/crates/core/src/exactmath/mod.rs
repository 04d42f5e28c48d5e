//! Exact arithmetic: rationals, cyclotomic fields, dense matrices and the
//! linear algebra built on them.

pub mod linalg;
pub mod matrix;
pub mod qbinomial;
pub mod scalar;

pub use linalg::{
    coequalizer, equalizer, equalizer_of_rows, inverse, is_invertible, kernel, kernel_of_rows,
    quotient_by_rows, rank, rref, solve_linear, solve_rows, QuotSpace, SparseRow, SubSpace,
};
pub use matrix::{kron_all, swap, tensor_permutation, Matrix};
pub use qbinomial::{qbinomial, qfactorial, qinteger};
pub use scalar::{parse_scalar, FieldKind, FieldSpec, Rational, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MathError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is singular")]
    Singular,
    #[error("argument out of range: {0}")]
    Domain(String),
}
