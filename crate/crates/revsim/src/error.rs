use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("gate references qubit {qubit} but the circuit is {width} qubits wide")]
    QubitOutOfRange { qubit: u32, width: u32 },

    #[error("state is {state} qubits wide, circuit expects {circuit}")]
    WidthMismatch { state: u32, circuit: u32 },

    #[error("circuits wider than 128 qubits are not supported (got {0})")]
    TooWide(u32),

    #[error("gate condition references classical bit {bit} but the record has {len} bits")]
    ClassicalBitOutOfRange { bit: u32, len: usize },

    #[error("table entry {value} at address {address} is outside the canonical range [0, {bound})")]
    TableEntryOutOfRange { address: usize, value: u64, bound: u64 },

    #[error("table has {len} entries, more than 2^{width} addresses")]
    TableTooLong { len: usize, width: u32 },

    #[error("residue {residue} is not less than the modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },

    #[error("base {base} is not invertible modulo {modulus}")]
    NonInvertibleBase { base: u64, modulus: u64 },

    #[error("malformed measurement record: {0}")]
    MalformedMeasurement(String),

    #[error("p^2 - {d} p + {n} = 0 has no positive integer roots")]
    NoIntegerRoots { d: u64, n: u64 },

    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
}
