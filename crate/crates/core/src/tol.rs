//! Numerical tolerances used throughout the crate.
//!
//! Every threshold is a named constant; no magic numbers at call sites.

/// Exact-algebra tolerance for operations that are algebraically exact in f64
/// (Hermiticity, trace preservation, unitarity residues, weight sums).
pub const EXACT_ALGEBRA: f64 = 1e-12;

/// Slack for positive-semidefiniteness checks. Eigenvalues of valid states may
/// round slightly negative after a chain of conjugations.
pub const PSD_SLACK: f64 = 1e-10;

/// Tolerance for deciding that two fidelity/probability curves are the same
/// curve. The analytic separations between distinct class curves are O(1e-2)
/// at moderate fidelity while arithmetic noise stays below 1e-13, so 1e-9 is
/// safely discriminating in both directions.
pub const CURVE_EQUALITY: f64 = 1e-9;

/// Weight-sum bookkeeping tolerance for noise distributions.
pub const WEIGHT_SUM: f64 = 1e-14;

/// Bisection terminates when the bracket width drops below this.
pub const ROOT_BRACKET: f64 = 1e-9;

/// A returned root must satisfy |g(root)| below this bound.
pub const ROOT_RESIDUAL: f64 = 1e-8;

/// Summed acceptance denominators below this signal a degenerate noise
/// distribution; reported as an error, never clamped.
pub const DEGENERATE_DENOMINATOR: f64 = 1e-15;

/// Step of the coarse scan used to bracket sign changes of the fidelity
/// increment before bisection.
pub const SCAN_STEP: f64 = 1e-3;

/// F_max is reported as exactly 1 when the increment is still positive at
/// 1 - BOUNDARY_PROBE.
pub const BOUNDARY_PROBE: f64 = 1e-6;

/// Fixed-point iteration stops once |delta F| falls below this.
pub const ITERATION_CONVERGENCE: f64 = 1e-12;
