//! Error type shared by every module of the crate.

/// Errors reported by the library.
///
/// Machine-tier arithmetic is checked: anything that would overflow a
/// `u64` aborts with [`Error::Overflow`] instead of silently promoting to
/// a wider type.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// `gcd(0, 0)` is undefined.
    #[error("gcd(0, 0) is undefined")]
    GcdOfZeros,

    /// Zero cannot be factored into primes.
    #[error("0 has no prime factorization")]
    FactorizeZero,

    /// The Fibonacci convention used throughout is F_1 = F_2 = 1; index 0
    /// is outside it.
    #[error("Fibonacci index 0 is outside the F_1 = F_2 = 1 convention")]
    FibIndexZero,

    /// A machine-tier operation would overflow 64 bits.
    #[error("arithmetic overflow in {context}")]
    Overflow { context: &'static str },

    /// Factoring `value` did not complete within the configured effort.
    #[error("factorization effort exceeded for {value}")]
    FactorizationEffortExceeded { value: u64 },

    /// A sequence element could not be factored within the configured
    /// effort, so no verdict is possible for it. Never a wrong verdict.
    #[error("element {value} at index {index} unresolved: factorization effort exceeded")]
    UnresolvedElement { index: usize, value: u64 },

    /// The input violates the `Sequence` invariants.
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),

    /// The input violates the `Window` invariants.
    #[error("invalid window: {0}")]
    InvalidWindow(String),

    /// The input violates the `CompositeRun` invariants.
    #[error("invalid composite run: {0}")]
    InvalidRun(String),

    /// Arithmetic-progression checker preconditions were violated.
    #[error("invalid arithmetic progression: {0}")]
    ApPrecondition(String),

    /// A parameter is outside its documented domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Two independent computations of the same quantity disagreed.
    /// This is a defect, never silently ignored.
    #[error("internal consistency failure: {0}")]
    InternalInconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
