//! Exact-arithmetic dimension and Hilbert-series computations for the basic
//! classical Lie superalgebras.
//!
//! For a highest weight Λ whose positive multiples are all typical, the
//! generating function Σₙ dim V(nΛ) qⁿ is a rational function with all poles
//! at q = 1. This crate computes it two independent ways (an elementary
//! symmetric / Eulerian polynomial expansion, and a differential-operator
//! closed form), decides typicality and ℕ-typicality exactly, and evaluates
//! the singly-atypical dimension formula for sl(m|n).
//!
//! Everything runs over exact rationals; there is no floating point anywhere
//! in the computational path. The polynomial and series kernels in [`exactq`]
//! are generic over the coefficient type, with the concrete rational
//! instantiations aliased at the crate root ([`Q`], [`QPoly`], [`QSeries`]).

pub mod atypical;
pub mod combinatorics;
pub mod exactq;
pub mod hilbert;
pub mod query;
pub mod render;
pub mod rootdata;
pub mod typicality;
pub mod weights;

/// Arbitrary-precision integer used for counts, Eulerian numbers, dimensions.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational scalar. `num_rational::BigRational` keeps the
/// canonical form this crate relies on: gcd(|num|, den) = 1, den ≥ 1, and
/// zero is 0/1.
pub type Q = num_rational::BigRational;

/// Polynomial over [`Q`].
pub type QPoly = exactq::Poly<Q>;

/// Rational series P(q)/(1-q)^m over [`Q`].
pub type QSeries = exactq::RationalSeries<Q>;

pub use exactq::Scalar;

/// Convenience constructor for a rational from an integer pair.
pub fn q(num: i64, den: i64) -> Q {
    Q::new(num.into(), den.into())
}

/// Convenience constructor for an integer rational.
pub fn qi(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Errors surfaced to callers; internal invariant violations panic instead.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
    #[error("marks length {got} does not match rank {expected}")]
    MarksLength { expected: usize, got: usize },
    #[error("coordinate vector has length {got}, expected {expected}")]
    Dimension { expected: usize, got: usize },
    #[error("singular mark system: {0}")]
    SingularSystem(String),
    #[error("Eulerian-form series is degenerate: (ρ, {root}) = 0 for even root {root}; use the operator form")]
    DegenerateEulerianForm { root: String },
    #[error("weight is not singly atypical: {0}")]
    NotSinglyAtypical(String),
    #[error("operation requires an A-family algebra, got {0}")]
    NotAFamily(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
