use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Sphere dimension below the supported range.
    #[error("dimension must be ≥ 2 (got {0})")]
    InvalidDimension(i64),

    /// Argument outside its admissible interval.
    #[error("{name} must lie in {range} (got {value})")]
    OutOfRange {
        name: &'static str,
        range: &'static str,
        value: f64,
    },

    /// Operation undefined for the zero polynomial.
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,

    /// Polynomial division by zero.
    #[error("polynomial division by zero")]
    DivisionByZero,

    /// Certification interval endpoints out of order.
    #[error("interval endpoints must satisfy a < b")]
    EmptyInterval,

    /// Could not move a Sturm evaluation point off a root.
    #[error("failed to nudge {0} off a root of the chain polynomial")]
    NudgeFailed(String),

    /// Jacobi weight exponent at or below -1 is not integrable.
    #[error("Jacobi exponent alpha must be > -1 (got {0})")]
    NonIntegrableWeight(f64),

    /// Quadrature eigenvalue iteration failed to converge.
    #[error("tridiagonal eigenvalue iteration did not converge")]
    EigenNoConvergence,

    /// The integral-representation path needs d ≥ 3.
    #[error(
        "integral representation requires dimension ≥ 3 (got {0}); use the d=2 trigonometric form"
    )]
    IntegralNeedsD3(u32),

    /// Kernel fails the declared integrability requirements.
    #[error("kernel is not integrable for dimension {dim}: {reason}")]
    NonIntegrableKernel { dim: u32, reason: String },

    /// Malformed kernel description.
    #[error("invalid kernel: {0}")]
    InvalidKernel(String),

    /// The two Poincaré-constant formulas disagreed beyond tolerance.
    #[error(
        "Poincaré constant formulas disagree: by moment {by_moment}, by spectrum {by_spectral} \
         (relative gap {rel_gap:e}); quadrature is unreliable for this kernel"
    )]
    PoincareMismatch {
        by_moment: f64,
        by_spectral: f64,
        rel_gap: f64,
    },

    /// Malformed serialized certificate.
    #[error("invalid certificate encoding: {0}")]
    InvalidCertificate(String),
}
