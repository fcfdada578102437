//! Exact density-matrix simulation and analysis of the two-way entanglement
//! distillation protocol under local Pauli noise.
//!
//! One protocol round takes two Werner pairs in the four arms (A1, B1, A2,
//! B2), applies the bilateral CNOT, lets a weighted Pauli error act on the
//! four arms, measures the second pair in the computational basis and keeps
//! the first pair when the outcomes agree. The crate evaluates this round
//! exactly on 16x16 density matrices, carries the closed-form class curves
//! next to the oracle, partitions the 256 local error types into their four
//! equivalence classes, and solves for distillability thresholds.

pub mod classify;
pub mod distill;
mod error;
pub mod linalg;
pub mod noise;
pub mod states;
pub mod tol;

pub use classify::{
    class_interval, class_weights, classify_by_curve, classify_by_rule,
    depolarization_decomposition, distillable_interval, measurement_noise_curves,
    DistillableInterval, ErrorClass, MeasurementCurve, MeasurementCurves, NoiseBase,
};
pub use distill::{
    analytic_class_terms, branch_table, depolarizing_success_probability, fidelity_increment,
    ideal_round, iterate_protocol, noisy_round_analytic, noisy_round_oracle,
    noisy_round_with_projector, single_error_fidelity, BranchTable, ClassFidelityTerms,
    ClassWeights, DistillOutcome, RoundRecord,
};
pub use error::{Error, Result};
pub use linalg::{
    conjugate, kron, partial_trace_second_pair, singlet_fidelity, CMatrix, DensityMatrix,
};
pub use noise::{
    error_operator, pauli_matrix, self_duality_check, MeasurementImperfection, NoiseDistribution,
    NoiseType, PauliChannel, PauliLabel,
};
pub use states::{bilateral_cnot, post_selector, twirl, twirl_sampled, werner_state, PostSelector};
