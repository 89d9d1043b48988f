//! The four error components (approximation, topological, distillation,
//! post-processing) and their combination into the retry risk.

use serde::{Deserialize, Serialize};

use crate::abstract_cost::{lookup_addition_count, padding_length, CostParams};
use crate::{Error, Result};

/// Post-processing succeeds with probability at least 99% for every
/// algorithm kind considered here.
pub const POSTPROCESSING_FAILURE: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErrorBudget {
    /// Deviation of the approximate encoded permutation.
    pub deviation: f64,
    /// Trace-distance bound 2 sqrt(deviation).
    pub approximation_error: f64,
    pub topological_error: f64,
    pub distillation_error: f64,
    pub postprocessing_failure: f64,
    pub retry_risk: f64,
}

fn saturate(p: f64) -> f64 {
    p.clamp(0.0, 1.0)
}

/// Deviation per addition with runway spacing c_sep and padding c_pad:
/// n / (c_sep 2^c_pad).
pub fn deviation_per_addition(n: u64, c_sep: u32, c_pad: u32) -> f64 {
    assert!(c_sep >= 1);
    n as f64 / (c_sep as f64 * 2f64.powi(c_pad as i32))
}

/// Deviation of the whole exponentiation: subadditive, so at most the
/// lookup addition count times the per-addition deviation.
pub fn total_deviation(n: u64, n_e: u64, params: &CostParams) -> f64 {
    let c_pad = padding_length(n, n_e, params.delta_off);
    saturate(
        lookup_addition_count(n, n_e, params) as f64
            * deviation_per_addition(n, params.c_sep, c_pad),
    )
}

/// Trace distance between the approximate and ideal outputs: 2 sqrt(eps),
/// capped at 1.
pub fn approximation_error(deviation: f64) -> f64 {
    assert!((0.0..=1.0).contains(&deviation));
    saturate(2.0 * deviation.sqrt())
}

/// Logical error probability per qubit per surface code cycle at distance d,
/// assuming a physical gate error rate of 1e-3: 10^-ceil(d/2 + 1).
pub fn logical_error_per_qubit_cycle(d: u32) -> Result<f64> {
    if d % 2 == 0 || d < 3 {
        return Err(Error::EvenCodeDistance(d));
    }
    // For odd d, ceil(d/2 + 1) = (d + 3) / 2.
    Ok(10f64.powi(-((d as i32 + 3) / 2)))
}

/// Probability of any topological error over the computation: per-cycle rate
/// times the protected (non-distillation) qubit-cycles.
pub fn topological_error(
    logical_qubits: f64,
    nondistill_fraction: f64,
    cycles: f64,
    d2: u32,
) -> Result<f64> {
    assert!((0.0..=1.0).contains(&nondistill_fraction));
    Ok(saturate(
        logical_error_per_qubit_cycle(d2)? * logical_qubits * nondistill_fraction * cycles,
    ))
}

/// Total distillation error for the given number of magic states.
pub fn distillation_error(magic_state_count: f64, error_per_state: f64) -> f64 {
    assert!(magic_state_count >= 0.0);
    saturate(magic_state_count * error_per_state)
}

/// Combine the independent error components into the retry risk.
pub fn retry_risk(topological: f64, distillation: f64, approximation: f64) -> f64 {
    saturate(
        1.0 - (1.0 - saturate(topological))
            * (1.0 - saturate(distillation))
            * (1.0 - saturate(approximation))
            * (1.0 - POSTPROCESSING_FAILURE),
    )
}

/// A spacetime volume rescaled to a different physical gate error rate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScaledVolume {
    pub volume: f64,
    /// Set when p lies outside the documented validity range
    /// [1e-5, 3e-3] of the rule of thumb.
    pub outside_validity: bool,
}

/// Rule of thumb for other physical gate error rates:
/// V(p) = V(0.1%) / (-log10(p) - 2)^3.
pub fn volume_scaling_rule(v_ref: f64, p: f64) -> ScaledVolume {
    ScaledVolume {
        volume: v_ref / (-p.log10() - 2.0).powi(3),
        outside_validity: !(1e-5..=3e-3).contains(&p),
    }
}
