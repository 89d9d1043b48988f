//! Reversible Toffoli networks for windowed modular exponentiation with
//! coset registers and oblivious carry runways, simulated as permutations
//! on basis states at desk scale.

pub mod adder;
pub mod circuit;
pub mod coset;
pub mod error;
pub mod lookup;
pub mod modexp;
pub mod postprocess;
pub mod runway;

pub use circuit::{BasisState, Circuit, Gate, GateKind, Resources};
pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
