//! Physical layer: lattice-surgery board geometry, runtime, physical qubit
//! count and spacetime volume.

use serde::{Deserialize, Serialize};

use crate::abstract_cost::{self, CostParams};
use crate::error_budget::{self, ErrorBudget};
use crate::factory::{FactoryModel, FactoryTable};
use crate::Result;

pub const SECONDS_PER_DAY: f64 = 86_400.0;

/// Hardware assumptions behind the physical estimates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalAssumptions {
    /// Surface code cycle time in microseconds.
    pub cycle_us: f64,
    /// Classical control reaction time in microseconds.
    pub reaction_us: f64,
    /// Physical gate error rate.
    pub gate_error: f64,
}

impl Default for PhysicalAssumptions {
    fn default() -> Self {
        Self { cycle_us: 1.0, reaction_us: 10.0, gate_error: 1e-3 }
    }
}

impl PhysicalAssumptions {
    /// Per-cycle logical error at distance d, rescaled from the 1e-3 law by
    /// (p / 1e-3)^((d+1)/2) when a different gate error rate is assumed.
    pub fn logical_error_per_qubit_cycle(&self, d: u32) -> Result<f64> {
        let base = error_budget::logical_error_per_qubit_cycle(d)?;
        if (self.gate_error - 1e-3).abs() < 1e-18 {
            return Ok(base);
        }
        Ok(base * (self.gate_error / 1e-3).powf((d as f64 + 1.0) / 2.0))
    }
}

/// The lattice-surgery board: independent pieces, each holding two rows of
/// factories, an operating area and the register rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoardLayout {
    pub pieces: u64,
    pub width_per_piece: u32,
    pub height: u32,
    pub factories_per_piece: u32,
    pub logical_qubit_total: u64,
}

impl BoardLayout {
    /// Fraction of the board used by distillation.
    pub fn distill_fraction(&self, factory: &FactoryModel) -> f64 {
        let per_piece = self.factories_per_piece as f64
            * (factory.footprint_w * factory.footprint_h) as f64;
        per_piece / (self.width_per_piece as f64 * self.height as f64)
    }
}

/// Physical qubits per logical qubit in lattice surgery: 2 (d+1)^2.
pub fn physical_qubits_per_logical(d: u32) -> u64 {
    assert!(d >= 3);
    2 * (d as u64 + 1).pow(2)
}

/// Factories needed to sustain one magic state per reaction time.
pub fn factories_per_piece(factory: &FactoryModel, assumptions: &PhysicalAssumptions) -> u32 {
    let cycles_per_reaction = assumptions.reaction_us / assumptions.cycle_us;
    (factory.cycles_per_state as f64 / cycles_per_reaction).ceil() as u32
}

/// Board geometry for a problem of size n with the given parameters.
///
/// Factories are packed two rows deep with single-qubit routing gaps between
/// and beside the columns, so a piece is ceil(f/2) * footprint_w + ceil(f/2)
/// + 1 logical qubits wide. The operating area adds 2*footprint_h + 17 rows
/// (ripple-carry area, fixup boxes and routing); the three registers add
/// ceil(3 (c_sep + c_pad) / width) rows, rounded up to an even count since
/// data rows move in pairs.
pub fn board_geometry(
    n: u64,
    n_e: u64,
    params: &CostParams,
    factory: &FactoryModel,
    assumptions: &PhysicalAssumptions,
) -> BoardLayout {
    let c_pad = abstract_cost::padding_length(n, n_e, params.delta_off);
    let f = factories_per_piece(factory, assumptions);
    let columns = f.div_ceil(2);
    let width = columns * factory.footprint_w + columns + 1;
    let mut register_rows =
        (3 * (params.c_sep + c_pad)).div_ceil(width);
    register_rows += register_rows % 2;
    let height = 2 * factory.footprint_h + 17 + register_rows;
    let pieces = abstract_cost::piece_count(n, params.c_sep);
    BoardLayout {
        pieces,
        width_per_piece: width,
        height,
        factories_per_piece: f,
        logical_qubit_total: pieces * width as u64 * height as u64,
    }
}

/// Wall-clock cost of one lookup addition, in seconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LookupAdditionTime {
    /// Code-depth-limited lookup phase: cycle * d2/2 * 2^(c_exp+c_mul).
    pub lookup: f64,
    /// Reaction-limited piecewise addition: 2 (c_sep + c_pad) reactions.
    pub addition: f64,
    /// Uncomputation and row rearrangement.
    pub misc: f64,
    pub total: f64,
}

pub fn lookup_addition_time(
    params: &CostParams,
    c_pad: u32,
    assumptions: &PhysicalAssumptions,
) -> LookupAdditionTime {
    let lookup = assumptions.cycle_us * 1e-6
        * params.d2 as f64 / 2.0
        * 2f64.powi((params.c_exp + params.c_mul) as i32);
    let addition =
        2.0 * (params.c_sep + c_pad) as f64 * assumptions.reaction_us * 1e-6;
    let misc = 1e-3;
    LookupAdditionTime { lookup, addition, misc, total: lookup + addition + misc }
}

/// Total runtime of one run, in seconds.
pub fn total_runtime(
    n: u64,
    n_e: u64,
    params: &CostParams,
    assumptions: &PhysicalAssumptions,
) -> f64 {
    let c_pad = abstract_cost::padding_length(n, n_e, params.delta_off);
    abstract_cost::lookup_addition_count(n, n_e, params) as f64
        * lookup_addition_time(params, c_pad, assumptions).total
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalEstimate {
    pub physical_qubits: u64,
    pub runtime_seconds: f64,
    pub cycles: f64,
    pub retry_risk: f64,
    /// Spacetime volume of one run, in megaqubitdays.
    pub volume_per_run: f64,
    /// volume_per_run / (1 - retry_risk); infinite when the risk saturates.
    pub expected_volume: f64,
}

/// Full physical estimate with its error budget and board layout.
pub fn physical_estimate(
    n: u64,
    n_e: u64,
    params: &CostParams,
    assumptions: &PhysicalAssumptions,
    factories: &FactoryTable,
) -> Result<(PhysicalEstimate, ErrorBudget, BoardLayout)> {
    let factory = factories.get(params.factory, params.d1, params.d2)?;
    let costs = abstract_cost::abstract_costs(n, n_e, params);
    let board = board_geometry(n, n_e, params, factory, assumptions);
    let runtime = costs.lookup_additions as f64
        * lookup_addition_time(params, costs.c_pad, assumptions).total;
    let cycles = runtime / (assumptions.cycle_us * 1e-6);

    let topological = (assumptions.logical_error_per_qubit_cycle(params.d2)?
        * board.logical_qubit_total as f64
        * (1.0 - board.distill_fraction(factory))
        * cycles)
        .min(1.0);
    let distillation =
        error_budget::distillation_error(costs.toffoli_count, factory.error_per_state);
    let deviation = error_budget::total_deviation(n, n_e, params);
    let approximation = error_budget::approximation_error(deviation);
    let retry = error_budget::retry_risk(topological, distillation, approximation);
    let budget = ErrorBudget {
        deviation,
        approximation_error: approximation,
        topological_error: topological,
        distillation_error: distillation,
        postprocessing_failure: error_budget::POSTPROCESSING_FAILURE,
        retry_risk: retry,
    };

    let physical_qubits =
        board.logical_qubit_total * physical_qubits_per_logical(params.d2);
    let volume_per_run =
        physical_qubits as f64 / 1e6 * runtime / SECONDS_PER_DAY;
    let expected_volume = if retry < 1.0 {
        volume_per_run / (1.0 - retry)
    } else {
        f64::INFINITY
    };
    Ok((
        PhysicalEstimate {
            physical_qubits,
            runtime_seconds: runtime,
            cycles,
            retry_risk: retry,
            volume_per_run,
            expected_volume,
        },
        budget,
        board,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factory::FactoryKind;

    fn assumptions() -> PhysicalAssumptions {
        PhysicalAssumptions::default()
    }

    fn anchor_params(delta_off: u32) -> CostParams {
        CostParams {
            d1: 17,
            d2: 27,
            delta_off,
            c_exp: 5,
            c_mul: 5,
            c_sep: 1024,
            factory: FactoryKind::Ccz,
        }
    }

    #[test]
    fn physical_qubits_per_logical_values() {
        assert_eq!(physical_qubits_per_logical(27), 1568);
        assert_eq!(physical_qubits_per_logical(3), 32);
        assert_eq!(physical_qubits_per_logical(13), 392);
        for d in (3..=49).step_by(2) {
            assert!(physical_qubits_per_logical(d + 2) > physical_qubits_per_logical(d));
        }
    }

    #[test]
    fn board_anchor_geometry() {
        let table = FactoryTable::builtin();
        let factory = table.get(FactoryKind::Ccz, 17, 27).unwrap();
        let board = board_geometry(2048, 3029, &anchor_params(4), factory, &assumptions());
        assert_eq!(board.pieces, 2);
        assert_eq!(board.width_per_piece, 113);
        assert_eq!(board.height, 63);
        assert_eq!(board.factories_per_piece, 14);
        assert_eq!(board.logical_qubit_total, 226 * 63);
        // About a quarter of the board distills magic states.
        let f = board.distill_fraction(factory);
        assert!((0.2..=0.3).contains(&f), "distill fraction {f}");
    }

    #[test]
    fn register_rows_near_thirty() {
        // c_sep = 1024 and c_pad about 41 add roughly 30 rows.
        let table = FactoryTable::builtin();
        let factory = table.get(FactoryKind::Ccz, 17, 27).unwrap();
        let board = board_geometry(2048, 3029, &anchor_params(7), factory, &assumptions());
        let rows = board.height - 33;
        assert!((28..=32).contains(&rows), "register rows {rows}");
    }

    #[test]
    fn single_piece_below_separation() {
        let table = FactoryTable::builtin();
        let factory = table.get(FactoryKind::Ccz, 17, 27).unwrap();
        let board = board_geometry(1024, 1493, &anchor_params(5), factory, &assumptions());
        assert_eq!(board.pieces, 1);
    }

    #[test]
    fn lookup_addition_time_anchor() {
        // 13.8 ms lookup + 21.3 ms addition + 1 ms misc, about 36-37 ms.
        let t = lookup_addition_time(&anchor_params(7), 41, &assumptions());
        assert!((t.lookup / 13.8e-3 - 1.0).abs() < 0.01, "lookup {}", t.lookup);
        assert!((t.addition / 21.3e-3 - 1.0).abs() < 0.01, "addition {}", t.addition);
        assert!((t.total / 36.1e-3 - 1.0).abs() < 0.01, "total {}", t.total);
    }

    #[test]
    fn lookup_time_linear_in_distance() {
        let mut p = anchor_params(7);
        let t27 = lookup_addition_time(&p, 41, &assumptions());
        p.d2 = 51;
        let t51 = lookup_addition_time(&p, 41, &assumptions());
        assert!((t51.lookup / t27.lookup - 51.0 / 27.0).abs() < 1e-12);
    }

    #[test]
    fn lookup_addition_time_small_config() {
        let p = CostParams {
            d1: 15,
            d2: 25,
            delta_off: 2,
            c_exp: 4,
            c_mul: 4,
            c_sep: 512,
            factory: FactoryKind::Ccz,
        };
        let t = lookup_addition_time(&p, 30, &assumptions());
        assert!((t.lookup - 3.2e-3).abs() < 1e-6);
        assert!((t.addition - 10.84e-3).abs() < 1e-6);
    }

    #[test]
    fn runtime_near_table_values() {
        let params = CostParams {
            d1: 15,
            d2: 27,
            delta_off: 4,
            c_exp: 5,
            c_mul: 5,
            c_sep: 1024,
            factory: FactoryKind::Ccz,
        };
        let hours = total_runtime(2048, 3029, &params, &assumptions()) / 3600.0;
        assert!((hours / 5.1 - 1.0).abs() < 0.30, "hours {hours}");
        let p1024 = CostParams { delta_off: 5, ..params };
        let hours = total_runtime(1024, 1493, &p1024, &assumptions()) / 3600.0;
        assert!((hours / 1.3 - 1.0).abs() < 0.30, "hours {hours}");
    }

    #[test]
    fn runtime_default_parameterization_order_of_hours() {
        // The rough 4 n_e n milliseconds estimate puts n = 2048 around 7
        // hours; the exact count lands somewhat lower.
        let hours = total_runtime(2048, 3072, &CostParams::overview(), &assumptions()) / 3600.0;
        assert!((4.5..=7.5).contains(&hours), "hours {hours}");
    }

    #[test]
    fn simplified_qubit_count() {
        let (est, _, board) = physical_estimate(
            2048,
            3029,
            &anchor_params(4),
            &assumptions(),
            FactoryTable::builtin(),
        )
        .unwrap();
        assert_eq!(board.logical_qubit_total, 226 * 63);
        assert_eq!(est.physical_qubits, 226 * 63 * 1568);
        assert!((22e6..24e6).contains(&(est.physical_qubits as f64)));
    }

    #[test]
    fn volume_identity() {
        let (est, budget, _) = physical_estimate(
            2048,
            3029,
            &anchor_params(4),
            &assumptions(),
            FactoryTable::builtin(),
        )
        .unwrap();
        let expected =
            est.physical_qubits as f64 / 1e6 * est.runtime_seconds / SECONDS_PER_DAY;
        assert!((est.volume_per_run - expected).abs() < 1e-12);
        assert!((est.expected_volume - expected / (1.0 - budget.retry_risk)).abs() < 1e-12);
        assert!(est.expected_volume >= est.volume_per_run);
    }

    #[test]
    fn runtime_linear_in_lookup_count() {
        let params = anchor_params(4);
        let t = total_runtime(2048, 3029, &params, &assumptions());
        let per = t / abstract_cost::lookup_addition_count(2048, 3029, &params) as f64;
        let c_pad = abstract_cost::padding_length(2048, 3029, 4);
        let unit = lookup_addition_time(&params, c_pad, &assumptions()).total;
        assert!((per - unit).abs() < 1e-12);
    }

    #[test]
    fn width_independent_of_n() {
        let table = FactoryTable::builtin();
        let factory = table.get(FactoryKind::Ccz, 17, 27).unwrap();
        let b1 = board_geometry(2048, 3029, &anchor_params(4), factory, &assumptions());
        let b2 = board_geometry(16384, 24533, &anchor_params(4), factory, &assumptions());
        assert_eq!(b1.width_per_piece, b2.width_per_piece);
        assert_eq!(b2.pieces, 16);
    }
}
