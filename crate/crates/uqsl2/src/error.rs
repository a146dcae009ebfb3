//! Error type shared by every module of the crate.
//!
//! All failures are programmer-visible conditions (singular matrix handed to
//! an inverse, mismatched dimensions, a context whose parameters violate the
//! square-root convention, ...). Verification *outcomes* are never errors:
//! an identity that fails to hold is reported as a failed check, not an
//! `Err`.

use thiserror::Error;

/// Everything that can go wrong while building modules or running checks.
#[derive(Debug, Error)]
pub enum Error {
    /// Operands have incompatible shapes, or an operation needs a square
    /// matrix and did not get one.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Matrix inverse of a non-invertible matrix.
    #[error("matrix is singular")]
    Singular,

    /// An operation (nilpotency index, q-exponential) requires a nilpotent
    /// matrix and the argument is not nilpotent.
    #[error("matrix of size {0} is not nilpotent")]
    NotNilpotent(usize),

    /// Lagrange interpolation received a repeated node.
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),

    /// A direct sum (or an operator defined only on type-1 modules) saw a
    /// summand with epsilon = -1.
    #[error("mixed or wrong type: {0}")]
    MixedType(String),

    /// A diagonal entry of k is not an integer power of q, so the module has
    /// no integral weight decomposition.
    #[error("eigenvalue {0} of k is not an integer power of q")]
    NonIntegralWeight(String),

    /// An expression mentions a symbol the module does not realize.
    #[error("no matrix is realized for symbol `{0}`")]
    UnknownSymbol(String),

    /// Two constructions that must agree by design disagreed; this signals a
    /// bug in the caller's data, never a mathematical near-miss.
    #[error("inconsistent construction: {0}")]
    Inconsistent(String),

    /// Generators produced by an identification map fail a defining relation
    /// of the target presentation.
    #[error("mapped generators violate the relation `{0}`")]
    RelationFailure(String),

    /// Rotator/Lusztig machinery asked for on a module that is not type 1.
    #[error("operation requires a type-1 module: {0}")]
    NotTypeOne(String),

    /// `emit` was asked for an operator name it does not know.
    #[error("unknown operator `{0}`")]
    UnknownOperator(String),

    /// Invalid run configuration (bad q, theta not matching the mode, empty
    /// grid axis, ...). The CLI maps this to exit code 2.
    #[error("invalid configuration: {0}")]
    Config(String),

    /// A string did not parse as a rational number.
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),

    /// Report or operator output could not be written.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// Report or operator (de)serialization failed.
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
