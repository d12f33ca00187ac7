//! Exact-arithmetic toolkit for expansions of the determinant and general
//! multilinear forms over prime fields and the integer ring.
//!
//! The crate is organized around a sparse multilinear form representation
//! ([`multilinear::MultilinearForm`]) and two-factor product decompositions of
//! such forms ([`decomp::Decomposition`]). On top of those it provides:
//!
//! - exact bias / analytic-rank computation by enumeration, gradient-kernel
//!   counting, a closed form for the determinant, and seeded Monte-Carlo
//!   estimation ([`rank`]);
//! - the zeroing-vector restriction procedure and exhaustive partition-rank
//!   search with per-field certificates ([`search`]);
//! - the random decomposable-form ensemble and its bias statistics
//!   ([`experiments`]);
//! - linear / syzygy / symmetric rewriting of slice decompositions
//!   ([`decomp::reduction`], [`scripts`]).
//!
//! All arithmetic is exact: prime fields F_p with p < 2^16 or the
//! overflow-checked integer ring ([`field::FieldSpec`]).

pub mod decomp;
pub mod experiments;
pub mod field;
pub mod linalg;
pub mod multilinear;
pub mod poly;
pub mod rank;
pub mod scripts;
pub mod search;

use thiserror::Error;

/// Crate-wide error type. Variants carry the offending values so callers can
/// report precise diagnostics.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("modulus {0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} outside supported range 2..=65536")]
    ModulusOutOfRange(u64),
    #[error("operands belong to different coefficient domains ({0} vs {1})")]
    SpecMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("integer overflow in {0}")]
    IntegerOverflow(&'static str),
    #[error("inversion requires a prime field, not {0}")]
    NotInvertibleDomain(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("input vector {index} depends on the previous ones")]
    DependentVector { index: usize },
    #[error("operation requires a prime field, got {0}")]
    PrimeFieldRequired(String),
    #[error("index tuple {0} out of range for shape {1}")]
    IndexOutOfRange(String, String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("degree too small: {0}")]
    DegreeTooSmall(String),
    #[error("index {0} outside 1..={1} for a {1}-dimensional symbol")]
    SymbolIndexOutOfRange(i64, usize),
    #[error("composed polynomial is not multilinear in the rows: monomial {0}")]
    NotRowMultilinear(String),
    #[error("invalid term support: {0}")]
    InvalidSupport(String),
    #[error("reduction precondition failed: {0}")]
    ReductionPrecondition(String),
    #[error("enumeration of {needed} points exceeds budget {budget}; {guidance}")]
    BudgetExceeded {
        needed: u128,
        budget: u64,
        guidance: &'static str,
    },
    #[error("point tuple is trivial (vector {index} is zero); counts need not be uniform")]
    TrivialPoint { index: usize },
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("decomposition does not verify against the target: first mismatch at {0}")]
    UnverifiedInput(String),
    #[error("term {index} would lose a factor under restriction: {detail}")]
    TermCollapse { index: usize, detail: String },
    #[error("parse error at line {line}: {detail}")]
    Parse { line: usize, detail: String },
    #[error("internal invariant violated (this is a bug): {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub use field::{FieldSpec, Scalar};
pub use linalg::{Matrix, Rational};
pub use multilinear::{MultilinearForm, PointTuple, Shape};
