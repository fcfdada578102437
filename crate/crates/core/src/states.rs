//! The protocol's quantum objects: Werner states, twirling, the bilateral
//! CNOT and the post-selection projector.

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{
    cr, dagger, identity, kron, phi_plus, singlet_fidelity, CMatrix, DensityMatrix, C_ONE, C_ZERO,
};
use crate::tol;

/// rho_W(F) = F |phi+><phi+| + (1-F)/3 (I - |phi+><phi+|).
///
/// Entangled iff F > 1/2. Inputs within EXACT_ALGEBRA of [0, 1] are clamped
/// so that fixed-point iterates rounding marginally outside the interval
/// stay usable.
pub fn werner_state(f: f64) -> Result<DensityMatrix> {
    let f = clamp_unit("F", f)?;
    let v = phi_plus();
    let w = (1.0 - f) / 3.0;
    let mat = Array2::from_shape_fn((4, 4), |(i, j)| {
        let phi = v[i] * v[j].conj();
        let id = if i == j { C_ONE } else { C_ZERO };
        cr(f) * phi + cr(w) * (id - phi)
    });
    DensityMatrix::new(mat)
}

pub(crate) fn clamp_unit(name: &'static str, x: f64) -> Result<f64> {
    if x < -tol::EXACT_ALGEBRA || x > 1.0 + tol::EXACT_ALGEBRA {
        return Err(Error::OutOfRange {
            name,
            value: x,
            min: 0.0,
            max: 1.0,
        });
    }
    Ok(x.clamp(0.0, 1.0))
}

/// Project a two-qubit state onto the Werner family, preserving the singlet
/// fidelity: the |phi+> component is kept and the orthogonal complement is
/// uniformized.
pub fn twirl(rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rho.dim(),
            got_cols: rho.dim(),
        });
    }
    werner_state(singlet_fidelity(rho.mat())?)
}

/// Sampled twirl for cross-validation: averages rho over the 24 single-qubit
/// Cliffords applied as U (x) conj(U), the finite 2-design whose average
/// leaves |phi+> invariant. Agrees with [`twirl`] up to arithmetic noise.
pub fn twirl_sampled(rho: &DensityMatrix) -> Result<DensityMatrix> {
    if rho.dim() != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: rho.dim(),
            got_cols: rho.dim(),
        });
    }
    let cliffords = single_qubit_cliffords();
    let mut acc = Array2::from_elem((4, 4), C_ZERO);
    for u in &cliffords {
        let uc = u.mapv(|z| z.conj());
        let big = kron(u, &uc);
        acc = acc + big.dot(rho.mat()).dot(&dagger(&big));
    }
    DensityMatrix::new(acc * cr(1.0 / cliffords.len() as f64))
}

/// The 24 single-qubit Clifford unitaries, one representative per global
/// phase, generated by closing {H, S} under multiplication.
pub fn single_qubit_cliffords() -> Vec<CMatrix> {
    let h = {
        let s = cr(std::f64::consts::FRAC_1_SQRT_2);
        let mut m = Array2::from_elem((2, 2), C_ZERO);
        m[[0, 0]] = s;
        m[[0, 1]] = s;
        m[[1, 0]] = s;
        m[[1, 1]] = -s;
        m
    };
    let s_gate = {
        let mut m = identity(2);
        m[[1, 1]] = Complex64::new(0.0, 1.0);
        m
    };

    // canonical phase: first entry of largest magnitude made real positive
    let canon = |m: &CMatrix| -> ([i64; 8], CMatrix) {
        let mut pivot = C_ZERO;
        for z in m.iter() {
            if z.norm() > pivot.norm() + 1e-9 {
                pivot = *z;
            }
        }
        let fixed = m * (pivot.conj() / cr(pivot.norm()));
        let mut key = [0i64; 8];
        for (i, z) in fixed.iter().enumerate() {
            key[2 * i] = (z.re * 1e6).round() as i64;
            key[2 * i + 1] = (z.im * 1e6).round() as i64;
        }
        (key, fixed)
    };

    let mut seen = std::collections::BTreeSet::new();
    let mut group: Vec<CMatrix> = Vec::new();
    let mut queue = vec![identity(2)];
    while let Some(u) = queue.pop() {
        let (key, fixed) = canon(&u);
        if !seen.insert(key) {
            continue;
        }
        queue.push(fixed.dot(&h));
        queue.push(fixed.dot(&s_gate));
        group.push(fixed);
    }
    debug_assert_eq!(group.len(), 24);
    group
}

/// The bilateral CNOT U_CN^(A1 A2) (x) U_CN^(B1 B2) in the A1 B1 A2 B2 basis:
/// |a1 b1 a2 b2> -> |a1 b1 (a1+a2) (b1+b2)> with addition mod 2.
pub fn bilateral_cnot() -> CMatrix {
    let p0 = DensityMatrix::from_pure(&[C_ONE, C_ZERO]).unwrap().mat().clone();
    let p1 = DensityMatrix::from_pure(&[C_ZERO, C_ONE]).unwrap().mat().clone();
    let x = {
        let mut m = Array2::from_elem((2, 2), C_ZERO);
        m[[0, 1]] = C_ONE;
        m[[1, 0]] = C_ONE;
        m
    };
    let i2 = identity(2);
    let on_a = kron(&kron(&p0, &i2), &kron(&i2, &i2)) + kron(&kron(&p1, &i2), &kron(&x, &i2));
    let on_b = kron(&kron(&i2, &p0), &kron(&i2, &i2)) + kron(&kron(&i2, &p1), &kron(&i2, &x));
    on_a.dot(&on_b)
}

/// Projector accepting equal computational-basis outcomes on the measured
/// pair: identity on (A1, B1), P0 (x) P0 + P1 (x) P1 on (A2, B2).
#[derive(Debug, Clone)]
pub struct PostSelector {
    projector: CMatrix,
}

impl PostSelector {
    pub fn projector(&self) -> &CMatrix {
        &self.projector
    }
}

pub fn post_selector() -> PostSelector {
    let mut equal = Array2::from_elem((4, 4), C_ZERO);
    equal[[0, 0]] = C_ONE; // |00><00|
    equal[[3, 3]] = C_ONE; // |11><11|
    PostSelector {
        projector: kron(&identity(4), &equal),
    }
}
