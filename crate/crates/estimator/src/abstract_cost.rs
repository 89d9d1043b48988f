//! Abstract-circuit-model costs: lookup additions, Toffolis, measurement
//! depth and logical qubits for the windowed modular exponentiation with
//! coset registers and oblivious carry runways.

use serde::{Deserialize, Serialize};

use crate::factory::FactoryKind;

/// One point in the optimizer's search space.
///
/// The grid restricts these to d1 in {15..23}, d2 in {25..51} (odd), window
/// sizes in {4,5,6}, runway separations in {512,768,1024,1536,2048} and
/// padding offsets in {2..10}; the constructors accept any positive values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CostParams {
    /// Level-1 (distillation) code distance.
    pub d1: u32,
    /// Level-2 (computation) code distance.
    pub d2: u32,
    /// Padding offset: c_pad = delta_off + ceil(2 lg n + lg n_e).
    pub delta_off: u32,
    /// Exponent window length in bits.
    pub c_exp: u32,
    /// Multiplication window length in bits.
    pub c_mul: u32,
    /// Runway separation in qubits.
    pub c_sep: u32,
    pub factory: FactoryKind,
}

impl CostParams {
    /// The simple overview parameterization: c_exp = c_mul = 5,
    /// c_sep = 1024, delta_off = 10, distances (17, 27), CCZ factories.
    pub fn overview() -> Self {
        Self {
            d1: 17,
            d2: 27,
            delta_off: 10,
            c_exp: 5,
            c_mul: 5,
            c_sep: 1024,
            factory: FactoryKind::Ccz,
        }
    }
}

/// Outputs of the abstract circuit model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AbstractCosts {
    pub lookup_additions: u64,
    pub toffoli_count: f64,
    pub measurement_depth: u64,
    pub abstract_qubits: u64,
    pub c_pad: u32,
}

/// Coset-padding/runway length: c_pad = delta_off + ceil(2 lg n + lg n_e).
pub fn padding_length(n: u64, n_e: u64, delta_off: u32) -> u32 {
    assert!(n >= 2 && n_e >= 2);
    delta_off + (2.0 * (n as f64).log2() + (n_e as f64).log2()).ceil() as u32
}

/// Number of register pieces under runway separation c_sep.
pub fn piece_count(n: u64, c_sep: u32) -> u64 {
    n.div_ceil(c_sep as u64)
}

/// Total number of lookup additions for the full exponentiation.
///
/// Each group of c_exp exponent bits costs two multiply-adds; each
/// multiply-add iterates over the n main bits, the c_pad coset-padding bits
/// and the pieces-1 temporarily folded runway carries, in windows of c_mul.
pub fn lookup_addition_count(n: u64, n_e: u64, params: &CostParams) -> u64 {
    let c_pad = padding_length(n, n_e, params.delta_off);
    lookup_addition_count_with_pad(n, n_e, params, c_pad)
}

/// As [`lookup_addition_count`], with the padding length supplied directly.
pub fn lookup_addition_count_with_pad(n: u64, n_e: u64, params: &CostParams, c_pad: u32) -> u64 {
    let folded_carries = piece_count(n, params.c_sep) - 1;
    let adds_per_multiplication =
        (n + c_pad as u64 + folded_carries).div_ceil(params.c_mul as u64);
    n_e.div_ceil(params.c_exp as u64) * 2 * adds_per_multiplication
}

/// Toffolis per lookup addition: 2n for the adder, c_pad*n/c_sep for the
/// runway bookkeeping, 2^(c_exp+c_mul) for the lookup.
pub fn per_addition_toffoli(n: u64, params: &CostParams, c_pad: u32) -> f64 {
    2.0 * n as f64
        + c_pad as f64 * n as f64 / params.c_sep as f64
        + 2f64.powi((params.c_exp + params.c_mul) as i32)
}

pub fn toffoli_count(n: u64, n_e: u64, params: &CostParams) -> f64 {
    let c_pad = padding_length(n, n_e, params.delta_off);
    lookup_addition_count(n, n_e, params) as f64 * per_addition_toffoli(n, params, c_pad)
}

/// Measurement depth per lookup addition: 2 c_sep + 2 c_pad for the
/// piecewise ripple-carry sweeps plus 2^(c_exp+c_mul) for the lookup.
pub fn per_addition_depth(params: &CostParams, c_pad: u32) -> u64 {
    2 * params.c_sep as u64 + 2 * c_pad as u64 + (1u64 << (params.c_exp + params.c_mul))
}

pub fn measurement_depth(n: u64, n_e: u64, params: &CostParams) -> u64 {
    let c_pad = padding_length(n, n_e, params.delta_off);
    lookup_addition_count(n, n_e, params) * per_addition_depth(params, c_pad)
}

/// Logical qubits: three registers (accumulator, workspace, lookup output),
/// each carrying per-piece runways and coset padding, plus the windowed
/// exponent/address qubits.
pub fn abstract_qubits(n: u64, n_e: u64, params: &CostParams) -> u64 {
    let c_pad = padding_length(n, n_e, params.delta_off);
    abstract_qubits_with_pad(n, params, c_pad)
}

/// As [`abstract_qubits`], with the padding length supplied directly.
pub fn abstract_qubits_with_pad(n: u64, params: &CostParams, c_pad: u32) -> u64 {
    let c_pad = c_pad as u64;
    3 * (n + c_pad * piece_count(n, params.c_sep) + c_pad)
        + params.c_exp as u64
        + params.c_mul as u64
}

pub fn abstract_costs(n: u64, n_e: u64, params: &CostParams) -> AbstractCosts {
    let c_pad = padding_length(n, n_e, params.delta_off);
    let lookups = lookup_addition_count(n, n_e, params);
    AbstractCosts {
        lookup_additions: lookups,
        toffoli_count: lookups as f64 * per_addition_toffoli(n, params, c_pad),
        measurement_depth: lookups * per_addition_depth(params, c_pad),
        abstract_qubits: abstract_qubits(n, n_e, params),
        c_pad,
    }
}

/// Historical leading-term baselines.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BaselineCosts {
    /// Reference implementation: 20 n_e n^2 Toffolis.
    pub reference: f64,
    /// Coset representation replaces modular adders: 8 n_e n^2.
    pub coset: f64,
    /// Windowed arithmetic at window size lg(n)/2: 24 n_e n^2 / lg^2 n.
    pub windowed_half_lg: f64,
}

pub fn baseline_costs(n: u64, n_e: u64) -> BaselineCosts {
    assert!(n >= 4);
    let n = n as f64;
    let n_e = n_e as f64;
    BaselineCosts {
        reference: 20.0 * n_e * n * n,
        coset: 8.0 * n_e * n * n,
        windowed_half_lg: 24.0 * n_e * n * n / n.log2().powi(2),
    }
}

/// Cost of one table lookup and its measurement-based uncomputation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LookupCosts {
    pub compute: u64,
    pub uncompute: u64,
    pub uncompute_ancillae: u64,
}

pub fn lookup_costs(c_exp: u32, c_mul: u32, n: u64) -> LookupCosts {
    assert!(c_exp >= 1 && c_mul >= 1);
    let table = 1u64 << (c_exp + c_mul);
    let root = (table as f64).sqrt().ceil() as u64;
    LookupCosts {
        compute: table,
        uncompute: 2 * root,
        uncompute_ancillae: root.saturating_sub(n),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn table3_2048() -> CostParams {
        CostParams {
            d1: 15,
            d2: 27,
            delta_off: 4,
            c_exp: 5,
            c_mul: 5,
            c_sep: 1024,
            factory: FactoryKind::Ccz,
        }
    }

    #[test]
    fn padding_examples() {
        assert_eq!(padding_length(2048, 3029, 4), 38);
        assert_eq!(padding_length(2048, 3072, 10), 44);
        assert_eq!(padding_length(2, 2, 2), 5);
    }

    #[test]
    fn lookup_addition_count_exact_value() {
        // ceil(3029/5) * 2 * ceil((2048+38+1)/5) = 606 * 2 * 418
        let count = lookup_addition_count(2048, 3029, &table3_2048());
        assert_eq!(count, 506_616);
        // Must agree with the leading term 2 n n_e / (c_exp c_mul) * (c_sep+1)/c_sep
        // within 2%.
        let leading = 2.0 * 2048.0 * 3029.0 / 25.0 * 1025.0 / 1024.0;
        assert!((count as f64 / leading - 1.0).abs() < 0.02);
    }

    #[test]
    fn lookup_addition_count_rounded_coefficient() {
        // c_exp = c_mul = 5, c_sep = 1024 gives about 0.08 n_e n exact
        // lookup additions, consistent with the rounded 0.1 n_e n.
        let params = CostParams::overview();
        let count = lookup_addition_count(2048, 3072, &params) as f64;
        let coeff = count / (3072.0 * 2048.0);
        assert!((0.07..=0.1).contains(&coeff), "coefficient {coeff}");
    }

    #[test]
    fn lookup_addition_count_degenerate_windows() {
        // One-bit windows, a single piece and no padding: one addition per
        // factor bit, two multiply-adds per multiplication, 2 n n_e total.
        let params = CostParams {
            d1: 17,
            d2: 27,
            delta_off: 0,
            c_exp: 1,
            c_mul: 1,
            c_sep: 4096,
            factory: FactoryKind::Ccz,
        };
        for (n, n_e) in [(16u64, 8u64), (100, 7), (2048, 2048)] {
            assert_eq!(lookup_addition_count_with_pad(n, n_e, &params, 0), 2 * n * n_e);
        }
    }

    #[test]
    fn toffoli_count_table1_value() {
        let t = toffoli_count(2048, 3029, &table3_2048());
        assert!((t / 2.7e9 - 1.0).abs() < 0.10, "toffoli {t:.3e}");
        // Frozen exact value: 506,616 * (4096 + 76 + 1024).
        assert_eq!(t, 506_616.0 * 5196.0);
    }

    #[test]
    fn toffoli_count_monotone_in_c_pad() {
        // At the anchor, one extra padding bit adds exactly
        // lookup_additions * n / c_sep Toffolis (the inner ceiling does not
        // move).
        let p0 = table3_2048();
        let mut p1 = p0;
        p1.delta_off += 1;
        assert_eq!(
            lookup_addition_count(2048, 3029, &p0),
            lookup_addition_count(2048, 3029, &p1)
        );
        let delta = toffoli_count(2048, 3029, &p1) - toffoli_count(2048, 3029, &p0);
        let expected = lookup_addition_count(2048, 3029, &p0) as f64 * 2048.0 / 1024.0;
        assert!((delta - expected).abs() < 1e-6 * expected);
    }

    #[test]
    fn measurement_depth_value() {
        // 506,616 * (2*1024 + 2*38 + 1024) = 506,616 * 3,148
        assert_eq!(measurement_depth(2048, 3029, &table3_2048()), 506_616 * 3_148);
    }

    #[test]
    fn measurement_depth_doubles_with_c_sep() {
        let p = table3_2048();
        let c_pad = padding_length(2048, 3029, p.delta_off);
        let mut wide = p;
        wide.c_sep = 2048;
        let d1 = per_addition_depth(&p, c_pad);
        let d2 = per_addition_depth(&wide, c_pad);
        assert_eq!(d2 - d1, 2 * 1024);
    }

    #[test]
    fn abstract_qubits_headline() {
        let q = abstract_qubits(2048, 3029, &table3_2048()) as f64;
        let headline = 3.0 * 2048.0 + 0.002 * 2048.0 * 11.0;
        assert!((q / headline - 1.0).abs() < 0.10, "qubits {q}");
        assert_eq!(q, 3.0 * (2048.0 + 38.0 * 2.0 + 38.0) + 10.0);
    }

    #[test]
    fn abstract_qubits_no_padding() {
        // c_sep >= n and no padding: exactly 3n + c_exp + c_mul.
        let params = CostParams {
            d1: 17,
            d2: 27,
            delta_off: 0,
            c_exp: 5,
            c_mul: 5,
            c_sep: 4096,
            factory: FactoryKind::Ccz,
        };
        assert_eq!(abstract_qubits_with_pad(2048, &params, 0), 3 * 2048 + 10);
    }

    #[test]
    fn abstract_qubits_delta_off_step() {
        let p0 = table3_2048();
        let mut p1 = p0;
        p1.delta_off += 1;
        let step = abstract_qubits(2048, 3029, &p1) - abstract_qubits(2048, 3029, &p0);
        assert_eq!(step, 3 * (piece_count(2048, 1024) + 1));
    }

    #[test]
    fn baseline_values() {
        let b = baseline_costs(2048, 4096);
        // 20 * 4096 * 2048^2 = 343,597,383,680.
        assert_eq!(b.reference, 3.4359738368e11);
        assert!((b.coset / b.reference - 0.4).abs() < 1e-12);
        // 24 * 4096 * 2048^2 / 121.
        assert!((b.windowed_half_lg / 3.4076e9 - 1.0).abs() < 1e-4);
    }

    #[test]
    fn lookup_cost_values() {
        assert_eq!(
            lookup_costs(5, 5, 2048),
            LookupCosts { compute: 1024, uncompute: 64, uncompute_ancillae: 0 }
        );
        assert_eq!(
            lookup_costs(4, 4, 2048),
            LookupCosts { compute: 256, uncompute: 32, uncompute_ancillae: 0 }
        );
        assert_eq!(
            lookup_costs(1, 1, 1),
            LookupCosts { compute: 4, uncompute: 4, uncompute_ancillae: 1 }
        );
    }

    #[test]
    fn per_addition_term_matches_lookup_costs() {
        let p = table3_2048();
        let c_pad = padding_length(2048, 3029, p.delta_off);
        let term = per_addition_toffoli(2048, &p, c_pad);
        let expected = 2.0 * 2048.0
            + c_pad as f64 * 2048.0 / 1024.0
            + lookup_costs(p.c_exp, p.c_mul, 2048).compute as f64;
        assert_eq!(term, expected);
    }

    proptest! {
        #[test]
        fn costs_are_products_of_count_and_per_addition_terms(
            n in 64u64..8192,
            n_e in 64u64..8192,
            c_exp in 4u32..=6,
            c_mul in 4u32..=6,
            c_sep_ix in 0usize..5,
            delta_off in 2u32..=10,
        ) {
            let params = CostParams {
                d1: 17,
                d2: 27,
                delta_off,
                c_exp,
                c_mul,
                c_sep: [512, 768, 1024, 1536, 2048][c_sep_ix],
                factory: FactoryKind::Ccz,
            };
            let c = abstract_costs(n, n_e, &params);
            prop_assert!(c.lookup_additions > 0);
            prop_assert!(c.toffoli_count >= c.lookup_additions as f64);
            prop_assert_eq!(
                c.toffoli_count,
                c.lookup_additions as f64 * per_addition_toffoli(n, &params, c.c_pad)
            );
            prop_assert_eq!(
                c.measurement_depth,
                c.lookup_additions * per_addition_depth(&params, c.c_pad)
            );
        }

        #[test]
        fn toffoli_monotone_in_c_sep(
            n in 256u64..8192,
            n_e in 256u64..8192,
            ix in 0usize..4,
        ) {
            let mut a = CostParams::overview();
            a.c_sep = [512, 768, 1024, 1536][ix];
            let mut b = a;
            b.c_sep = [768, 1024, 1536, 2048][ix];
            prop_assert!(toffoli_count(n, n_e, &b) <= toffoli_count(n, n_e, &a));
        }

        #[test]
        fn baselines_are_ordered(n in 16u64..10000, n_e in 1u64..10000) {
            let b = baseline_costs(n, n_e);
            prop_assert!(b.reference >= b.coset);
            prop_assert!(b.coset >= b.windowed_half_lg);
        }
    }
}
