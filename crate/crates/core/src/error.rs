//! Error type shared by every layer of the engine.
//!
//! Operations that can fail return `Result<_, Error>`; preconditions that a
//! caller inside this crate is expected to uphold (e.g. Adams indices being
//! positive) are `assert!`ed instead.

use thiserror::Error;

use crate::poly::VarId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `t` names the series variable and may never appear inside a coefficient.
    #[error("variable name 't' is reserved for the series layer")]
    ReservedVariable,

    /// Variable names are ASCII identifiers: a letter followed by letters,
    /// digits or underscores.
    #[error("invalid variable name '{0}'")]
    InvalidVariableName(String),

    /// Monomial substitution only accepts images that are a single term with
    /// coefficient 1 (anything else would leave the Laurent ring).
    #[error("unsupported substitution: {0}")]
    UnsupportedSubstitution(String),

    /// A geometric-series ratio must be a single term.
    #[error("expected a monomial, got a polynomial with {0} terms")]
    ExpectedMonomial(usize),

    /// Evaluation hit a variable with no assigned value.
    #[error("incomplete assignment: no value for variable '{0}'")]
    IncompleteAssignment(VarId),

    /// Evaluating `x^(p/q)` at anything other than 1 leaves the rationals.
    #[error("cannot evaluate fractional power of '{0}' at a value other than 1")]
    NonRationalEvaluation(VarId),

    /// Evaluating `x^(-k)` at 0 divides by zero.
    #[error("cannot evaluate negative power of '{0}' at zero")]
    NegativePowerOfZero(VarId),

    /// An exponent fell outside the machine range used for repeated squaring.
    #[error("exponent out of supported range")]
    ExponentOverflow,

    /// `series_exp` is only defined on the augmentation ideal.
    #[error("exp is undefined on series with nonzero constant term")]
    ExpNonzeroConstant,

    /// `series_log` (and the plethystic Log) need constant term exactly 1.
    #[error("log requires constant term 1")]
    LogConstantNotOne,

    /// Multiplicative inversion of a series needs constant term exactly 1.
    #[error("series inversion requires constant term 1")]
    InvertConstantNotOne,

    /// The plethystic Exp needs an augmentation-positive argument.
    #[error("Exp requires an augmentation-positive series (zero constant term)")]
    ExpAugmentation,

    /// Stringy invariants of symmetric products are only defined for d >= 2:
    /// for curves the symmetric products are smooth and need no correction.
    #[error("stringy operations require dimension >= 2, got {0}")]
    DimensionTooSmall(u32),

    /// Dimensions are positive integers.
    #[error("dimension must be a positive integer")]
    InvalidDimension,

    /// The Hilbert-scheme reading of the series is a surface phenomenon.
    #[error("the Hilbert scheme interpretation requires a surface (dimension 2), got dimension {0}")]
    NotASurface(u32),

    /// A polynomial mentions a variable the chosen realization does not carry.
    #[error("unexpected variable '{var}'; allowed variables: {allowed}")]
    UnexpectedVariable { var: VarId, allowed: String },

    /// Any lexer/parser failure, with the byte offset into the source text.
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Partitions must have weakly decreasing positive parts.
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
}
