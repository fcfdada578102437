//! Exact evaluation of one distillation round, ideal and noisy, plus the
//! closed-form class fidelity expressions and multi-round iteration.
//!
//! Every branch of a noisy round is tracked as an unnormalized
//! (numerator, denominator) pair - the singlet-fidelity weight and the
//! acceptance probability of that branch - and normalization happens once,
//! after all branches are summed.

use crate::error::{Error, Result};
use crate::linalg::{
    kron, partial_trace_second_pair, sandwich, singlet_fidelity, CMatrix,
};
use crate::noise::{error_operator, NoiseDistribution, NoiseType};
use crate::states::{bilateral_cnot, clamp_unit, post_selector, werner_state};
use crate::tol;

/// Result of one accepted protocol round.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistillOutcome {
    /// Singlet fidelity of the accepted pair.
    pub fidelity_out: f64,
    /// Probability that post-selection accepts.
    pub p_succ: f64,
}

/// U_CN (rho_W(f) (x) rho_W(f)) U_CN^dag, the state right after the bilateral
/// CNOT and before any error or measurement.
pub fn post_cnot_state(f: f64) -> Result<CMatrix> {
    let w = werner_state(f)?;
    let rho = kron(w.mat(), w.mat());
    Ok(sandwich(&bilateral_cnot(), &rho))
}

/// Unnormalized (numerator, denominator) for a deterministic error `t`:
/// the |phi+> weight and the acceptance probability of the branch
/// sigma_t E_U(rho_W^(x)2) sigma_t followed by post-selection.
///
/// This is the dense reference evaluation; it is the primitive the curve
/// classifier consumes.
pub fn single_error_fidelity(f: f64, t: NoiseType) -> Result<(f64, f64)> {
    let m = post_cnot_state(f)?;
    let s = error_operator(t);
    let branch = sandwich(&s, &m);
    let projected = branch.dot(post_selector().projector());
    let kept = partial_trace_second_pair(&projected)?;
    let num = singlet_fidelity(&kept)?;
    let den = crate::linalg::trace(&projected).re;
    Ok((num, den))
}

/// Unnormalized (numerator, denominator) pairs for all 256 error types at
/// one input fidelity, canonical order.
#[derive(Debug, Clone)]
pub struct BranchTable {
    pub numerator: [f64; 256],
    pub denominator: [f64; 256],
}

impl BranchTable {
    pub fn ideal(&self) -> (f64, f64) {
        (
            self.numerator[NoiseType::IDENTITY.index()],
            self.denominator[NoiseType::IDENTITY.index()],
        )
    }
}

/// Evaluate all 256 branches of [`single_error_fidelity`] at once.
///
/// Error operators are tensor products of Paulis, i.e. signed permutations:
/// (sigma M sigma)[r, c] = sign * M[r ^ mask, c ^ mask], so each branch needs
/// only the 16 matrix entries that survive post-selection and the partial
/// trace. Agrees with the dense route to machine precision (pinned by tests).
pub fn branch_table(f: f64) -> Result<BranchTable> {
    let m = post_cnot_state(f)?;
    let mut table = BranchTable {
        numerator: [0.0; 256],
        denominator: [0.0; 256],
    };
    for t in NoiseType::all() {
        let (num, den) = branch_from_post_cnot(&m, t);
        table.numerator[t.index()] = num;
        table.denominator[t.index()] = den;
    }
    Ok(table)
}

/// Site bit positions in the A1 B1 A2 B2 index: A1 = bit 3 ... B2 = bit 0.
fn masks(t: NoiseType) -> (usize, usize, u32) {
    use crate::noise::PauliLabel::*;
    let mut xmask = 0usize;
    let mut zmask = 0usize;
    let mut ycount = 0u32;
    for (site, label) in t.labels().iter().enumerate() {
        let bit = 3 - site;
        match label {
            I => {}
            X => xmask |= 1 << bit,
            Z => zmask |= 1 << bit,
            Y => {
                xmask |= 1 << bit;
                zmask |= 1 << bit;
                ycount += 1;
            }
        }
    }
    (xmask, zmask, ycount)
}

fn branch_from_post_cnot(m: &CMatrix, t: NoiseType) -> (f64, f64) {
    let (xmask, zmask, ycount) = masks(t);
    let ysign = if ycount % 2 == 0 { 1.0 } else { -1.0 };
    let entry = |r: usize, c: usize| -> f64 {
        let par = ((zmask & (r ^ xmask ^ c)).count_ones() % 2) as i32;
        let sign = ysign * if par == 0 { 1.0 } else { -1.0 };
        sign * m[[r ^ xmask, c ^ xmask]].re
    };
    // acceptance: diagonal entries whose A2 B2 part is |00> or |11>
    let mut den = 0.0;
    for x in 0..16 {
        if x % 4 == 0 || x % 4 == 3 {
            den += entry(x, x);
        }
    }
    // <phi+| tr_{A2 B2}[ . P ] |phi+>
    let mut num = 0.0;
    for i in [0usize, 3] {
        for j in [0usize, 3] {
            for k in [0usize, 3] {
                num += 0.5 * entry(4 * i + k, 4 * j + k);
            }
        }
    }
    (num, den)
}

/// One noisy round: every weighted error branch is evaluated on the full
/// post-CNOT density matrix, numerators and denominators are summed across
/// branches (the no-error branch carries weight 1 - p), and the ratio is
/// normalized once.
pub fn noisy_round_oracle(f: f64, d: &NoiseDistribution) -> Result<DistillOutcome> {
    let m = post_cnot_state(f)?;
    let p = d.total_weight();
    let (n0, d0) = branch_from_post_cnot(&m, NoiseType::IDENTITY);
    let mut num = (1.0 - p) * n0;
    let mut den = (1.0 - p) * d0;
    for (t, w) in d.iter_nonzero() {
        let (n, dd) = branch_from_post_cnot(&m, t);
        num += w * n;
        den += w * dd;
    }
    if den < tol::DEGENERATE_DENOMINATOR {
        return Err(Error::ZeroSuccessProbability {
            limit: tol::DEGENERATE_DENOMINATOR,
        });
    }
    Ok(DistillOutcome {
        fidelity_out: (num / den).clamp(0.0, 1.0),
        p_succ: den,
    })
}

/// One round with an explicit (possibly imperfect) measurement operator in
/// place of the ideal post-selector. Used to validate that measurement noise
/// absorbed into the channel reproduces noisy projectors exactly.
pub fn noisy_round_with_projector(f: f64, projector16: &CMatrix) -> Result<DistillOutcome> {
    if projector16.nrows() != 16 || projector16.ncols() != 16 {
        return Err(Error::DimensionMismatch {
            expected: 16,
            got: projector16.nrows(),
            got_cols: projector16.ncols(),
        });
    }
    let m = post_cnot_state(f)?;
    let projected = m.dot(projector16);
    let kept = partial_trace_second_pair(&projected)?;
    let num = singlet_fidelity(&kept)?;
    let den = crate::linalg::trace(&projected).re;
    if den < tol::DEGENERATE_DENOMINATOR {
        return Err(Error::ZeroSuccessProbability {
            limit: tol::DEGENERATE_DENOMINATOR,
        });
    }
    Ok(DistillOutcome {
        fidelity_out: (num / den).clamp(0.0, 1.0),
        p_succ: den,
    })
}

/// The noiseless round. Matches the closed forms
/// F' = (10F^2 - 2F + 1)/(8F^2 - 4F + 5) and p_succ = (8F^2 - 4F + 5)/9.
pub fn ideal_round(f: f64) -> Result<DistillOutcome> {
    noisy_round_oracle(f, &NoiseDistribution::empty())
}

/// The four closed-form class curves at one input fidelity, as unnormalized
/// (numerator, denominator) contributions.
///
/// Errors that preserve the measured-pair parity (classes I, C1, C2 - their
/// operators commute with the post-selection projector) share the ideal
/// acceptance denominator; class M flips the parity and its acceptance is
/// the complement 1 - D_ideal.
#[derive(Debug, Clone, Copy)]
pub struct ClassFidelityTerms {
    pub numerator_ideal: f64,
    pub numerator_i: f64,
    pub numerator_m: f64,
    pub numerator_c1: f64,
    pub numerator_c2: f64,
    pub denominator_ideal: f64,
    /// Acceptance of a parity-flipping (class M) branch: 1 - denominator_ideal.
    pub denominator_mixed: f64,
}

pub fn analytic_class_terms(f: f64) -> Result<ClassFidelityTerms> {
    let f = clamp_unit("F", f)?;
    let d_ideal = (8.0 * f * f - 4.0 * f + 5.0) / 9.0;
    let n_ideal = (10.0 * f * f - 2.0 * f + 1.0) / 9.0;
    Ok(ClassFidelityTerms {
        numerator_ideal: n_ideal,
        numerator_i: n_ideal,
        numerator_m: (1.0 + f - 2.0 * f * f) / 9.0,
        numerator_c1: 2.0 * f * (1.0 - f) / 3.0,
        numerator_c2: 2.0 * (1.0 - f) * (1.0 - f) / 9.0,
        denominator_ideal: d_ideal,
        denominator_mixed: (4.0 + 4.0 * f - 8.0 * f * f) / 9.0,
    })
}

/// Total acceptance probability of a round under depolarizing noise of
/// weight p: (1/9)[(5 - 4F + 8F^2) - (p/2)(1 - 4F)^2].
///
/// Identical to (1-p) D_ideal + p/2 via D_ideal - (1-4F)^2/18 = 1/2; exact
/// whenever the error weight splits evenly between parity-preserving and
/// parity-flipping types, as it does for depolarization (128 of each).
pub fn depolarizing_success_probability(f: f64, p: f64) -> f64 {
    ((5.0 - 4.0 * f + 8.0 * f * f) - (p / 2.0) * (1.0 - 4.0 * f) * (1.0 - 4.0 * f)) / 9.0
}

/// Per-class error weights of a noise distribution.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassWeights {
    pub w_i: f64,
    pub w_m: f64,
    pub w_c1: f64,
    pub w_c2: f64,
}

impl ClassWeights {
    pub fn total(&self) -> f64 {
        self.w_i + self.w_m + self.w_c1 + self.w_c2
    }
}

/// Closed-form noisy round for a distribution collapsed to class weights:
///
/// F~' = [(1-p) N_ideal + sum_K w_K N_K]
///       / [(1 - p + w_I + w_C1 + w_C2) D_ideal + w_M (1 - D_ideal)]
///
/// Matches [`noisy_round_oracle`] for any distribution with these class
/// weights.
pub fn noisy_round_analytic(f: f64, w: ClassWeights, p: f64) -> Result<DistillOutcome> {
    for (name, value) in [
        ("w_i", w.w_i),
        ("w_m", w.w_m),
        ("w_c1", w.w_c1),
        ("w_c2", w.w_c2),
    ] {
        if value < 0.0 {
            return Err(Error::OutOfRange {
                name,
                value,
                min: 0.0,
                max: 1.0,
            });
        }
    }
    let p = clamp_unit("p", p)?;
    if (w.total() - p).abs() > tol::EXACT_ALGEBRA {
        return Err(Error::OutOfRange {
            name: "sum of class weights",
            value: w.total(),
            min: p,
            max: p,
        });
    }
    let terms = analytic_class_terms(f)?;
    let num = (1.0 - p) * terms.numerator_ideal
        + w.w_i * terms.numerator_i
        + w.w_m * terms.numerator_m
        + w.w_c1 * terms.numerator_c1
        + w.w_c2 * terms.numerator_c2;
    let den = (1.0 - p + w.w_i + w.w_c1 + w.w_c2) * terms.denominator_ideal
        + w.w_m * terms.denominator_mixed;
    if den < tol::DEGENERATE_DENOMINATOR {
        return Err(Error::ZeroSuccessProbability {
            limit: tol::DEGENERATE_DENOMINATOR,
        });
    }
    Ok(DistillOutcome {
        fidelity_out: (num / den).clamp(0.0, 1.0),
        p_succ: den,
    })
}

/// delta F~ = F~'(F) - F for one noisy round.
pub fn fidelity_increment(f: f64, d: &NoiseDistribution) -> Result<f64> {
    Ok(noisy_round_oracle(f, d)?.fidelity_out - f)
}

/// State of the iterated protocol after a given round.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RoundRecord {
    pub round: usize,
    pub fidelity: f64,
    pub p_succ: f64,
}

/// Repeated rounds of the protocol. Each output fidelity is treated as a
/// fresh Werner parameter (the protocol re-twirls between rounds); round 0
/// records the input state. Stops after `max_rounds` rounds or once
/// |delta F| drops below the convergence tolerance.
pub fn iterate_protocol(
    f0: f64,
    d: &NoiseDistribution,
    max_rounds: usize,
) -> Result<Vec<RoundRecord>> {
    if max_rounds < 1 {
        return Err(Error::OutOfRange {
            name: "max_rounds",
            value: max_rounds as f64,
            min: 1.0,
            max: f64::INFINITY,
        });
    }
    let mut f = clamp_unit("F0", f0)?;
    let mut records = vec![RoundRecord {
        round: 0,
        fidelity: f,
        p_succ: 1.0,
    }];
    for round in 1..=max_rounds {
        let out = noisy_round_oracle(f, d)?;
        records.push(RoundRecord {
            round,
            fidelity: out.fidelity_out,
            p_succ: out.p_succ,
        });
        let delta = (out.fidelity_out - f).abs();
        f = out.fidelity_out;
        if delta < tol::ITERATION_CONVERGENCE {
            break;
        }
    }
    Ok(records)
}
