//! Quantum measurement engines driven by local or collective entangling
//! measurements.
//!
//! - [`numerics`]: dense complex vectors and matrices (first tensor factor is
//!   the most significant index).
//! - [`quantum`]: states, projective measurements, partial traces, entropies.
//! - [`engine`]: the averaged measure / feedback / erase cycle ledger.
//! - [`collective`]: parallel, two-qubit, Dicke and GHZ strategies on `N`
//!   qubits, each with an exact-state and an analytic evaluation path.
//! - [`experiments`]: deterministic CSV sweeps behind the `qme` binary.
//!
//! Units: `k_B = 1`, temperatures are energies, entropies are in nats.

pub mod collective;
pub mod config;
pub mod engine;
pub mod error;
pub mod experiments;
pub mod numerics;
pub mod quantum;

pub use collective::{evaluate_strategy, CollectiveStrategy, ComputationPath, StrategyKind, StrategyReport};
pub use engine::{run_cycle, CycleReport, EngineSpec};
pub use error::{Error, Result};
pub use numerics::{ComplexMatrix, StateVector};
pub use quantum::{DensityMatrix, Hamiltonian, OutcomeDistribution, ProjectiveMeasurement};
