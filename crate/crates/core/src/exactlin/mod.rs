//! Exact rational linear algebra.
//!
//! All numbers are [`Rational`]s: arbitrary-precision, always reduced, with a
//! positive denominator. Matrices are dense and small (the root systems and
//! arrangements handled here have dimension at most about ten).

mod feasibility;
mod form;
mod matrix;
mod poly;
mod vector;

pub use feasibility::{solve_strict_feasible, Certificate, Feasibility, LinearSystem};
pub use form::{gram_conjugate, BilinearForm, Signature};
pub use matrix::{IntMat, RatMat};
pub use poly::{poly_discriminant, resultant, RatPoly};
pub use vector::{primitive_integer, RatVec};

use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact rational number.
pub type Rational = BigRational;

/// Integer vector with arbitrary-precision entries.
pub type IntVec = alloc::vec::Vec<BigInt>;

/// Shorthand for an integral [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`; panics on `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("polynomial degree {degree} is below the required minimum {min}")]
    DegreeTooSmall { degree: usize, min: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("bilinear form matrix is not symmetric")]
    NotSymmetric,
}
