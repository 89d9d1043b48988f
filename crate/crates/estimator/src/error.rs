use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Modulus length with no tabulated security level.
    #[error("unsupported modulus length n={0}: no tabulated security level, refusing to extrapolate")]
    UnsupportedModulus(u64),

    /// The short-discrete-logarithm exponent formula assumes even n.
    #[error("RSA exponent formula requires even n, got n={0}")]
    OddRsaModulus(u64),

    #[error("modulus length must be at least 16, got n={0}")]
    ModulusTooSmall(u64),

    /// Code distances must be odd for the surface-code error law.
    #[error("code distance must be odd, got d={0}")]
    EvenCodeDistance(u32),

    #[error("no {kind} factory model for d1={d1}, d2={d2}")]
    UnsupportedDistance {
        kind: crate::factory::FactoryKind,
        d1: u32,
        d2: u32,
    },

    /// Every grid point had retry risk >= 1.
    #[error("no feasible parameter point: every grid point saturates the error budget (dominant component: {dominant})")]
    Infeasible { dominant: String },

    #[error("unknown problem family {0:?} (expected one of rsa, dlp-schnorr, dlp-safe-short, dlp-safe-full, dlp-schnorr-shor, dlp-safe-shor)")]
    UnknownFamily(String),

    #[error("malformed factory table line {line}: {reason}")]
    FactoryTableParse { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
