use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// The input matrix is not a generalized Cartan matrix.
    #[error("malformed Cartan matrix: {0}")]
    MalformedCartan(String),

    /// A generator index is outside `0..rank`.
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    /// Two operands belong to different Coxeter systems.
    #[error("operands belong to different Coxeter systems")]
    SystemMismatch,

    /// A standard parabolic subgroup did not close within the element cap.
    #[error("parabolic subgroup W_J for J={{{j}}} exceeded cap {cap} without closing")]
    ParabolicInfinite { j: String, cap: usize },

    /// The two elements are not comparable in the Bruhat order.
    #[error("elements are not Bruhat-comparable: {y} vs {w}")]
    NotComparable { y: String, w: String },

    /// An element is not a minimal-length coset representative for the given J.
    #[error("element {w} is not a minimal coset representative for J={{{j}}}")]
    NotMinCosetRep { w: String, j: String },

    /// A computed canonical-basis element failed its defining conditions.
    /// This always indicates an implementation bug, never a valid state.
    #[error("post-verification failed for {w}: {detail}")]
    PostVerificationFailed { w: String, detail: String },

    /// The triangular solve has no polynomial solution under the degree bound.
    /// Impossible for correct bar data; signals an upstream bug.
    #[error("triangular solve has no solution at {w}: {detail}")]
    NoSolution { w: String, detail: String },

    /// Unrecognized verification suite name.
    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    /// The suite configuration is invalid for the requested check.
    #[error("invalid configuration: {0}")]
    ConfigurationInvalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
