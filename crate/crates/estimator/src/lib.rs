//! Resource estimation for factoring RSA integers and computing finite-field
//! discrete logarithms on a surface-code quantum computer.
//!
//! The model covers the abstract circuit layer (lookup additions, Toffoli
//! count, measurement depth, logical qubits), the error budget (approximation,
//! topological, distillation, post-processing), the physical layer (board
//! geometry, runtime, physical qubits, spacetime volume), and a grid-search
//! optimizer over code distances, window sizes, runway spacings, padding
//! offsets, and factory kinds.

pub mod abstract_cost;
pub mod error;
pub mod error_budget;
pub mod factory;
pub mod optimizer;
pub mod physical;
pub mod problem;
pub mod report;

pub use abstract_cost::{AbstractCosts, CostParams};
pub use error::Error;
pub use error_budget::ErrorBudget;
pub use factory::{FactoryKind, FactoryModel, FactoryTable};
pub use optimizer::{EstimateReport, Family};
pub use physical::{BoardLayout, PhysicalAssumptions, PhysicalEstimate};
pub use problem::{ProblemInstance, ProblemKind};

pub type Result<T> = std::result::Result<T, Error>;
