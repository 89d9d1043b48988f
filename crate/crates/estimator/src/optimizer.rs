//! Grid search over cost parameters, minimizing the skewed expected
//! spacetime volume s^1.2 * t / (1 - eps).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abstract_cost::{abstract_costs, AbstractCosts, CostParams};
use crate::error_budget::ErrorBudget;
use crate::factory::{FactoryKind, FactoryTable};
use crate::physical::{physical_estimate, BoardLayout, PhysicalAssumptions, PhysicalEstimate};
use crate::problem::{ProblemInstance, ProblemKind};
use crate::{Error, Result};

pub const D1_GRID: [u32; 5] = [15, 17, 19, 21, 23];
pub const D2_GRID: [u32; 14] = [25, 27, 29, 31, 33, 35, 37, 39, 41, 43, 45, 47, 49, 51];
pub const WINDOW_GRID: [u32; 3] = [4, 5, 6];
pub const C_SEP_GRID: [u32; 5] = [512, 768, 1024, 1536, 2048];
pub const DELTA_OFF_GRID: [u32; 9] = [2, 3, 4, 5, 6, 7, 8, 9, 10];

/// Rows flagged when the retry risk reaches this level.
pub const RISK_FLAG_THRESHOLD: f64 = 0.5;

/// The full search grid: 5 * 14 * 3 * 3 * 5 * 9 * 2 = 56,700 points, in a
/// fixed deterministic order.
pub fn enumerate_grid() -> impl Iterator<Item = CostParams> {
    FactoryKind::ALL.into_iter().flat_map(|factory| {
        D1_GRID.into_iter().flat_map(move |d1| {
            D2_GRID.into_iter().flat_map(move |d2| {
                WINDOW_GRID.into_iter().flat_map(move |c_exp| {
                    WINDOW_GRID.into_iter().flat_map(move |c_mul| {
                        C_SEP_GRID.into_iter().flat_map(move |c_sep| {
                            DELTA_OFF_GRID.into_iter().map(move |delta_off| CostParams {
                                d1,
                                d2,
                                delta_off,
                                c_exp,
                                c_mul,
                                c_sep,
                                factory,
                            })
                        })
                    })
                })
            })
        })
    })
}

/// The optimizer objective: s^1.2 * t / (1 - eps), with s in physical
/// qubits and t in seconds. Infinite when the retry risk saturates.
pub fn skewed_volume(s: f64, t: f64, eps: f64) -> f64 {
    if eps >= 1.0 {
        return f64::INFINITY;
    }
    s.powf(1.2) * t / (1.0 - eps)
}

/// One optimized (or directly evaluated) estimate.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EstimateReport {
    pub problem: ProblemInstance,
    pub params: CostParams,
    pub abstract_costs: AbstractCosts,
    pub errors: ErrorBudget,
    pub board: BoardLayout,
    pub physical: PhysicalEstimate,
    pub objective: f64,
    /// Set when the retry risk reaches 50%.
    pub flagged: bool,
}

/// Evaluate a single grid point.
pub fn evaluate(
    problem: &ProblemInstance,
    params: &CostParams,
    assumptions: &PhysicalAssumptions,
    factories: &FactoryTable,
) -> Result<EstimateReport> {
    let (physical, errors, board) =
        physical_estimate(problem.n, problem.n_e, params, assumptions, factories)?;
    let objective = skewed_volume(
        physical.physical_qubits as f64,
        physical.runtime_seconds,
        physical.retry_risk,
    );
    Ok(EstimateReport {
        problem: *problem,
        params: *params,
        abstract_costs: abstract_costs(problem.n, problem.n_e, params),
        errors,
        board,
        physical,
        objective,
        flagged: physical.retry_risk >= RISK_FLAG_THRESHOLD,
    })
}

fn tie_break_key(r: &EstimateReport) -> impl Ord {
    let p = r.params;
    (
        r.physical.physical_qubits,
        // Runtime is an integral number of microseconds under the default
        // assumptions; scale before truncating so ties break consistently.
        (r.physical.runtime_seconds * 1e9) as u128,
        p.d1,
        p.d2,
        p.delta_off,
        p.c_exp,
        p.c_mul,
        p.c_sep,
        matches!(p.factory, FactoryKind::T),
    )
}

/// Exhaustive grid search for the parameter point minimizing the skewed
/// expected spacetime volume. Ties break toward fewer physical qubits, then
/// shorter runtime, then lexicographically smaller parameters.
pub fn optimize(
    problem: &ProblemInstance,
    assumptions: &PhysicalAssumptions,
    factories: &FactoryTable,
) -> Result<EstimateReport> {
    let mut best: Option<EstimateReport> = None;
    // Track the least-bad saturated point so an infeasible search can name
    // the dominant error component.
    let mut least_risk: Option<EstimateReport> = None;
    for params in enumerate_grid() {
        let report = evaluate(problem, &params, assumptions, factories)?;
        if report.objective.is_finite() {
            let better = match &best {
                None => true,
                Some(b) => {
                    report.objective < b.objective
                        || (report.objective == b.objective
                            && tie_break_key(&report) < tie_break_key(b))
                }
            };
            if better {
                best = Some(report);
            }
        } else {
            let worse = least_risk
                .as_ref()
                .is_none_or(|w| report.errors.retry_risk < w.errors.retry_risk);
            if worse {
                least_risk = Some(report);
            }
        }
    }
    best.ok_or_else(|| Error::Infeasible {
        dominant: least_risk.map_or_else(|| "unknown".to_string(), |r| dominant_component(&r)),
    })
}

/// Name of the largest error component in a report.
pub fn dominant_component(report: &EstimateReport) -> String {
    let e = &report.errors;
    let components = [
        ("topological", e.topological_error),
        ("distillation", e.distillation_error),
        ("approximation", e.approximation_error),
        ("post-processing", e.postprocessing_failure),
    ];
    components
        .iter()
        .max_by(|a, b| a.1.total_cmp(&b.1))
        .unwrap()
        .0
        .to_string()
}

/// A problem family, i.e. one block of the result tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    Rsa,
    DlpSchnorr,
    DlpSafeShort,
    DlpSafeFull,
    DlpSchnorrShor,
    DlpSafeShor,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Rsa,
        Family::DlpSchnorr,
        Family::DlpSafeShort,
        Family::DlpSafeFull,
        Family::DlpSchnorrShor,
        Family::DlpSafeShor,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Family::Rsa => "rsa",
            Family::DlpSchnorr => "dlp-schnorr",
            Family::DlpSafeShort => "dlp-safe-short",
            Family::DlpSafeFull => "dlp-safe-full",
            Family::DlpSchnorrShor => "dlp-schnorr-shor",
            Family::DlpSafeShor => "dlp-safe-shor",
        }
    }

    /// Problem instance of this family at modulus length n.
    pub fn instance(&self, n: u64) -> Result<ProblemInstance> {
        match self {
            Family::Rsa => ProblemInstance::new(ProblemKind::RsaViaShortDlog, n),
            Family::DlpSchnorr => ProblemInstance::new(ProblemKind::SchnorrGroupDlog, n),
            Family::DlpSafeShort => ProblemInstance::new(ProblemKind::SafePrimeShortDlog, n),
            Family::DlpSafeFull => ProblemInstance::new(ProblemKind::SafePrimeFullDlog, n),
            Family::DlpSchnorrShor => ProblemInstance::new(ProblemKind::KnownOrderShorDlog, n),
            Family::DlpSafeShor => ProblemInstance::shor_safe_prime(n),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// One optimized row per tabulated modulus length of the family.
pub fn make_table(
    family: Family,
    assumptions: &PhysicalAssumptions,
    factories: &FactoryTable,
) -> Result<Vec<EstimateReport>> {
    crate::problem::SUPPORTED_MODULUS_BITS
        .iter()
        .map(|&n| optimize(&family.instance(n)?, assumptions, factories))
        .collect()
}
