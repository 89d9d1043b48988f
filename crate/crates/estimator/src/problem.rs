//! Problem families and the map from (family, modulus length) to exponent
//! length and classical security level.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Modulus lengths with tabulated classical security levels, in bits.
pub const SUPPORTED_MODULUS_BITS: [u64; 7] = [1024, 2048, 3072, 4096, 8192, 12288, 16384];

const SECURITY_BITS: [u64; 7] = [80, 112, 128, 152, 200, 240, 272];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ProblemKind {
    /// Factor an RSA integer by computing the short discrete logarithm of
    /// g^(N+1), which equals p+q.
    RsaViaShortDlog,
    /// Short discrete logarithm in a Schnorr group (n_d = n_r = 2z).
    SchnorrGroupDlog,
    /// Short-exponent discrete logarithm in a safe-prime group
    /// (n_d = 2z, n_r = n-1).
    SafePrimeShortDlog,
    /// Full-length discrete logarithm in a safe-prime group
    /// (n_d = n_r = n-1).
    SafePrimeFullDlog,
    /// Discrete logarithm in a group of known order via the modified Shor
    /// algorithm (n_e = 2(n_r + 5)).
    KnownOrderShorDlog,
}

impl ProblemKind {
    pub const ALL: [ProblemKind; 5] = [
        ProblemKind::RsaViaShortDlog,
        ProblemKind::SchnorrGroupDlog,
        ProblemKind::SafePrimeShortDlog,
        ProblemKind::SafePrimeFullDlog,
        ProblemKind::KnownOrderShorDlog,
    ];
}

/// A cryptographic target: problem kind, modulus length, exponent length and
/// the classical security level it provides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemInstance {
    pub kind: ProblemKind,
    /// Bits of the modulus N.
    pub n: u64,
    /// Total exponent bits across all exponent registers.
    pub n_e: u64,
    /// Classical security in bits.
    pub z: u64,
    /// Logarithm bit length.
    pub n_d: u64,
    /// Group-order bit length.
    pub n_r: u64,
}

/// Classical security level z for a supported modulus length.
///
/// Only tabulated values are returned; anything else is refused rather than
/// silently extrapolated.
pub fn security_level(n: u64) -> Result<u64> {
    SUPPORTED_MODULUS_BITS
        .iter()
        .position(|&m| m == n)
        .map(|i| SECURITY_BITS[i])
        .ok_or(Error::UnsupportedModulus(n))
}

/// Exponent length for the modified Shor algorithm in a group of known order
/// of bit length `n_r`: both exponent registers are padded with 5 bits.
pub fn shor_exponent_length(n_r: u64) -> u64 {
    2 * (n_r + 5)
}

/// Exponent length n_e for a problem kind at modulus length n with security
/// level z.
///
/// For `KnownOrderShorDlog` the Schnorr-group parameterization (n_r = 2z) is
/// assumed; use [`shor_exponent_length`] directly for other group orders.
pub fn exponent_length(kind: ProblemKind, n: u64, z: u64) -> Result<u64> {
    if n < 16 {
        return Err(Error::ModulusTooSmall(n));
    }
    Ok(match kind {
        ProblemKind::RsaViaShortDlog => {
            if n % 2 != 0 {
                return Err(Error::OddRsaModulus(n));
            }
            3 * (n / 2 - 1) - 40
        }
        ProblemKind::SchnorrGroupDlog | ProblemKind::SafePrimeShortDlog => 6 * z,
        ProblemKind::SafePrimeFullDlog => 3 * (n - 1),
        ProblemKind::KnownOrderShorDlog => shor_exponent_length(2 * z),
    })
}

impl ProblemInstance {
    /// Build the instance for a supported modulus length, looking up z and
    /// deriving n_e, n_d and n_r from the kind.
    pub fn new(kind: ProblemKind, n: u64) -> Result<Self> {
        let z = security_level(n)?;
        let n_e = exponent_length(kind, n, z)?;
        let (n_d, n_r) = match kind {
            // For RSA the "logarithm" is d = p + q, about n/2 + 1 bits; the
            // group order is unknown but below 2^(n-1).
            ProblemKind::RsaViaShortDlog => (n / 2 + 1, n - 1),
            ProblemKind::SchnorrGroupDlog | ProblemKind::KnownOrderShorDlog => (2 * z, 2 * z),
            ProblemKind::SafePrimeShortDlog => (2 * z, n - 1),
            ProblemKind::SafePrimeFullDlog => (n - 1, n - 1),
        };
        Ok(Self { kind, n, n_e, z, n_d, n_r })
    }

    /// Modified Shor in a safe-prime group: known order r = (N-1)/2, so
    /// n_r = n - 1 and both exponents are full length.
    pub fn shor_safe_prime(n: u64) -> Result<Self> {
        let z = security_level(n)?;
        let n_r = n - 1;
        Ok(Self {
            kind: ProblemKind::KnownOrderShorDlog,
            n,
            n_e: shor_exponent_length(n_r),
            z,
            n_d: n_r,
            n_r,
        })
    }

    /// An instance with a caller-chosen exponent length, for what-if
    /// estimates outside the tabulated families.
    pub fn custom(n: u64, n_e: u64) -> Self {
        Self {
            kind: ProblemKind::RsaViaShortDlog,
            n,
            n_e,
            z: 0,
            n_d: n,
            n_r: n,
        }
    }
}

/// Every tabulated problem instance: one entry per (kind, modulus length),
/// 5 kinds x 7 lengths = 35 rows.
pub fn catalog() -> Vec<ProblemInstance> {
    let mut out = Vec::with_capacity(35);
    for kind in ProblemKind::ALL {
        for n in SUPPORTED_MODULUS_BITS {
            out.push(ProblemInstance::new(kind, n).expect("catalog entries are valid"));
        }
    }
    out
}
