//! Dense complex-matrix toolkit sized for the 2-, 4- and 16-dimensional
//! operators of the protocol: products, Kronecker products, conjugation,
//! partial trace over the measured pair, and state validation.
//!
//! Basis convention: computational basis with tensor order A1 (most
//! significant bit), B1, A2, B2 (least significant bit). The maximally
//! entangled reference state is |phi+> = (|00> + |11>)/sqrt(2).

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tol;

pub type CMatrix = Array2<Complex64>;

pub const C_ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const C_ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Real scalar as a complex number.
pub fn cr(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

pub fn identity(dim: usize) -> CMatrix {
    Array2::eye(dim)
}

/// Kronecker product; the left factor owns the most significant index.
pub fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ar, ac) = a.dim();
    let (br, bc) = b.dim();
    let mut out = Array2::from_elem((ar * br, ac * bc), C_ZERO);
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[[i, j]];
            if aij == C_ZERO {
                continue;
            }
            for k in 0..br {
                for l in 0..bc {
                    out[[i * br + k, j * bc + l]] = aij * b[[k, l]];
                }
            }
        }
    }
    out
}

/// Conjugate transpose.
pub fn dagger(a: &CMatrix) -> CMatrix {
    let (r, c) = a.dim();
    Array2::from_shape_fn((c, r), |(i, j)| a[[j, i]].conj())
}

pub fn trace(a: &CMatrix) -> Complex64 {
    a.diag().iter().sum()
}

/// max entrywise |a - a^dag|.
pub fn hermiticity_deviation(a: &CMatrix) -> f64 {
    let n = a.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            worst = worst.max((a[[i, j]] - a[[j, i]].conj()).norm());
        }
    }
    worst
}

/// max entrywise |a a^dag - I|.
pub fn unitarity_deviation(a: &CMatrix) -> f64 {
    let prod = a.dot(&dagger(a));
    let n = prod.nrows();
    let mut worst = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            let target = if i == j { C_ONE } else { C_ZERO };
            worst = worst.max((prod[[i, j]] - target).norm());
        }
    }
    worst
}

/// u m u^dag, no validity checks.
pub fn sandwich(u: &CMatrix, m: &CMatrix) -> CMatrix {
    u.dot(m).dot(&dagger(u))
}

/// A Hermitian, positive-semidefinite, trace-one state.
///
/// Positivity is screened with a fixed probe set: all basis vectors plus the
/// pairwise superpositions (e_i +/- e_j)/sqrt2 and (e_i +/- i e_j)/sqrt2.
/// Full eigendecompositions are reserved for tests.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    mat: CMatrix,
}

impl DensityMatrix {
    pub fn new(mat: CMatrix) -> Result<Self> {
        let (r, c) = mat.dim();
        if r != c {
            return Err(Error::DimensionMismatch {
                expected: r,
                got: r,
                got_cols: c,
            });
        }
        let herm = hermiticity_deviation(&mat);
        if herm > tol::EXACT_ALGEBRA {
            return Err(Error::InvalidState {
                reason: format!("not Hermitian (max |M - M^dag| = {herm:.3e})"),
            });
        }
        let tr = trace(&mat);
        if (tr - C_ONE).norm() > tol::EXACT_ALGEBRA {
            return Err(Error::InvalidState {
                reason: format!("trace = {tr} differs from 1"),
            });
        }
        for i in 0..r {
            let di = mat[[i, i]].re;
            if di < -tol::PSD_SLACK {
                return Err(Error::InvalidState {
                    reason: format!("diagonal entry {i} = {di:.3e} is negative"),
                });
            }
            for j in (i + 1)..r {
                let dj = mat[[j, j]].re;
                let off = mat[[i, j]];
                // <v|rho|v> for (e_i +/- e_j)/sqrt2 and (e_i +/- i e_j)/sqrt2
                let bound = (di + dj) / 2.0 + tol::PSD_SLACK;
                if off.re.abs() > bound || off.im.abs() > bound {
                    return Err(Error::InvalidState {
                        reason: format!(
                            "probe <v|rho|v> negative for entry ({i},{j}) = {off}"
                        ),
                    });
                }
            }
        }
        Ok(Self { mat })
    }

    /// |v><v| for a normalized state vector.
    pub fn from_pure(v: &[Complex64]) -> Result<Self> {
        let n = v.len();
        let mat = Array2::from_shape_fn((n, n), |(i, j)| v[i] * v[j].conj());
        Self::new(mat)
    }

    pub fn mat(&self) -> &CMatrix {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }
}

/// u rho u^dag for unitary u; trace is preserved.
pub fn conjugate(rho: &DensityMatrix, u: &CMatrix) -> Result<DensityMatrix> {
    if u.nrows() != rho.dim() || u.ncols() != rho.dim() {
        return Err(Error::DimensionMismatch {
            expected: rho.dim(),
            got: u.nrows(),
            got_cols: u.ncols(),
        });
    }
    let dev = unitarity_deviation(u);
    if dev > tol::EXACT_ALGEBRA {
        return Err(Error::NonUnitary { deviation: dev });
    }
    DensityMatrix::new(sandwich(u, rho.mat()))
}

/// Trace out the measured pair (A2, B2) of a 16x16 operator, leaving the
/// 4x4 operator on (A1, B1). Sub-normalized inputs are accepted; the output
/// trace equals the input trace.
pub fn partial_trace_second_pair(m16: &CMatrix) -> Result<CMatrix> {
    let (r, c) = m16.dim();
    if r != 16 || c != 16 {
        return Err(Error::DimensionMismatch {
            expected: 16,
            got: r,
            got_cols: c,
        });
    }
    let mut out = Array2::from_elem((4, 4), C_ZERO);
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = C_ZERO;
            for k in 0..4 {
                acc += m16[[4 * i + k, 4 * j + k]];
            }
            out[[i, j]] = acc;
        }
    }
    Ok(out)
}

/// |phi+> = (|00> + |11>)/sqrt(2) as a 4-vector.
pub fn phi_plus() -> [Complex64; 4] {
    let h = cr(std::f64::consts::FRAC_1_SQRT_2);
    [h, C_ZERO, C_ZERO, h]
}

/// <phi+| m |phi+> for a 4x4 operator; sub-normalized inputs accepted.
pub fn singlet_fidelity(m4: &CMatrix) -> Result<f64> {
    let (r, c) = m4.dim();
    if r != 4 || c != 4 {
        return Err(Error::DimensionMismatch {
            expected: 4,
            got: r,
            got_cols: c,
        });
    }
    Ok(0.5 * (m4[[0, 0]] + m4[[0, 3]] + m4[[3, 0]] + m4[[3, 3]]).re)
}

/// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi sweeps,
/// ascending. Intended for validation; panics if it fails to converge.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let n = m.nrows();
    assert_eq!(n, m.ncols(), "square matrix required");
    let mut a = m.clone();
    for _ in 0..100 {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off = off.max(a[[p, q]].norm());
            }
        }
        if off < 1e-14 {
            let mut eigs: Vec<f64> = a.diag().iter().map(|z| z.re).collect();
            eigs.sort_by(|x, y| x.partial_cmp(y).unwrap());
            return eigs;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let b = a[[p, q]];
                if b.norm() < 1e-16 {
                    continue;
                }
                // phase away the off-diagonal element, then rotate as in the
                // real symmetric case
                let phase = b / cr(b.norm());
                let app = a[[p, p]].re;
                let aqq = a[[q, q]].re;
                let tau = (aqq - app) / (2.0 * b.norm());
                let t = tau.signum() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = t * cs;
                // columns: c_p' = cs*c_p - sn*conj(phase)*c_q,
                //          c_q' = sn*phase*c_p + cs*c_q, then same on rows.
                for i in 0..n {
                    let aip = a[[i, p]];
                    let aiq = a[[i, q]];
                    a[[i, p]] = cr(cs) * aip - cr(sn) * phase.conj() * aiq;
                    a[[i, q]] = cr(sn) * phase * aip + cr(cs) * aiq;
                }
                for j in 0..n {
                    let apj = a[[p, j]];
                    let aqj = a[[q, j]];
                    a[[p, j]] = cr(cs) * apj - cr(sn) * phase * aqj;
                    a[[q, j]] = cr(sn) * phase.conj() * apj + cr(cs) * aqj;
                }
            }
        }
    }
    panic!("Jacobi eigensolver failed to converge");
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn sx() -> CMatrix {
        let mut m = Array2::from_elem((2, 2), C_ZERO);
        m[[0, 1]] = C_ONE;
        m[[1, 0]] = C_ONE;
        m
    }

    fn sz() -> CMatrix {
        let mut m = Array2::from_elem((2, 2), C_ZERO);
        m[[0, 0]] = C_ONE;
        m[[1, 1]] = -C_ONE;
        m
    }

    #[test]
    fn kron_of_identities() {
        let i2 = identity(2);
        let k = kron(&i2, &i2);
        assert_eq!(k, identity(4));
    }

    #[test]
    fn kron_mixed_product_property() {
        // (sz (x) I)(I (x) sz) = sz (x) sz
        let i2 = identity(2);
        let lhs = kron(&sz(), &i2).dot(&kron(&i2, &sz()));
        let rhs = kron(&sz(), &sz());
        for (a, b) in lhs.iter().zip(rhs.iter()) {
            assert!((a - b).norm() < tol::EXACT_ALGEBRA);
        }
    }

    #[test]
    fn xx_fixes_phi_plus() {
        let xx = kron(&sx(), &sx());
        let v = phi_plus();
        for i in 0..4 {
            let mut acc = C_ZERO;
            for j in 0..4 {
                acc += xx[[i, j]] * v[j];
            }
            assert!((acc - v[i]).norm() < tol::EXACT_ALGEBRA);
        }
    }

    #[test]
    fn conjugate_bit_flip() {
        let zero = DensityMatrix::from_pure(&[C_ONE, C_ZERO]).unwrap();
        let one = conjugate(&zero, &sx()).unwrap();
        assert_abs_diff_eq!(one.mat()[[1, 1]].re, 1.0, epsilon = tol::EXACT_ALGEBRA);
        assert_abs_diff_eq!(one.mat()[[0, 0]].re, 0.0, epsilon = tol::EXACT_ALGEBRA);
    }

    #[test]
    fn conjugate_identity_is_identity() {
        let rho = DensityMatrix::from_pure(&phi_plus()).unwrap();
        let same = conjugate(&rho, &identity(4)).unwrap();
        assert_eq!(&same, &rho);
    }

    #[test]
    fn conjugate_rejects_non_unitary() {
        let rho = DensityMatrix::from_pure(&[C_ONE, C_ZERO]).unwrap();
        let mut m = identity(2);
        m[[0, 0]] = cr(2.0);
        assert!(matches!(
            conjugate(&rho, &m),
            Err(Error::NonUnitary { .. })
        ));
    }

    #[test]
    fn partial_trace_of_product_state() {
        let a = DensityMatrix::from_pure(&phi_plus()).unwrap();
        let b = DensityMatrix::from_pure(&[C_ONE, C_ZERO, C_ZERO, C_ZERO]).unwrap();
        let prod = kron(a.mat(), b.mat());
        let back = partial_trace_second_pair(&prod).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                assert!((back[[i, j]] - a.mat()[[i, j]]).norm() < tol::EXACT_ALGEBRA);
            }
        }
    }

    #[test]
    fn partial_trace_of_maximally_mixed() {
        let m = identity(16) * cr(1.0 / 16.0);
        let out = partial_trace_second_pair(&m).unwrap();
        for i in 0..4 {
            for j in 0..4 {
                let want = if i == j { 0.25 } else { 0.0 };
                assert_abs_diff_eq!(out[[i, j]].re, want, epsilon = tol::EXACT_ALGEBRA);
            }
        }
    }

    #[test]
    fn partial_trace_preserves_trace() {
        let m = Array2::from_shape_fn((16, 16), |(i, j)| {
            Complex64::new((i * 7 % 5) as f64 * 0.1, ((i + 3 * j) % 4) as f64 * 0.05)
        });
        let out = partial_trace_second_pair(&m).unwrap();
        assert!((trace(&out) - trace(&m)).norm() < tol::EXACT_ALGEBRA);
    }

    #[test]
    fn partial_trace_rejects_wrong_dim() {
        assert!(matches!(
            partial_trace_second_pair(&identity(4)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn singlet_fidelity_basics() {
        let phi = DensityMatrix::from_pure(&phi_plus()).unwrap();
        assert_abs_diff_eq!(
            singlet_fidelity(phi.mat()).unwrap(),
            1.0,
            epsilon = tol::EXACT_ALGEBRA
        );
        let mixed = identity(4) * cr(0.25);
        assert_abs_diff_eq!(
            singlet_fidelity(&mixed).unwrap(),
            0.25,
            epsilon = tol::EXACT_ALGEBRA
        );
        assert!(singlet_fidelity(&identity(2)).is_err());
    }

    #[test]
    fn density_matrix_rejects_bad_inputs() {
        // non-unit trace
        assert!(DensityMatrix::new(identity(2)).is_err());
        // non-Hermitian
        let mut m = identity(2) * cr(0.5);
        m[[0, 1]] = Complex64::new(0.0, 0.3);
        assert!(DensityMatrix::new(m).is_err());
        // Hermitian, trace one, but indefinite
        let mut m = Array2::from_elem((2, 2), C_ZERO);
        m[[0, 0]] = cr(0.5);
        m[[1, 1]] = cr(0.5);
        m[[0, 1]] = cr(0.8);
        m[[1, 0]] = cr(0.8);
        assert!(DensityMatrix::new(m).is_err());
    }

    #[test]
    fn jacobi_eigenvalues() {
        // projector onto phi+: eigenvalues {0, 0, 0, 1}
        let phi = DensityMatrix::from_pure(&phi_plus()).unwrap();
        let eigs = hermitian_eigenvalues(phi.mat());
        assert_abs_diff_eq!(eigs[3], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(eigs[0], 0.0, epsilon = 1e-12);

        // a Hermitian matrix with a complex off-diagonal entry
        let mut m = Array2::from_elem((2, 2), C_ZERO);
        m[[0, 0]] = cr(1.0);
        m[[1, 1]] = cr(2.0);
        m[[0, 1]] = Complex64::new(0.3, -0.4);
        m[[1, 0]] = Complex64::new(0.3, 0.4);
        let eigs = hermitian_eigenvalues(&m);
        // eigenvalues of [[1, b],[b*, 2]] with |b| = 0.5
        let disc = (0.25f64 + 0.25).sqrt();
        assert_abs_diff_eq!(eigs[0], 1.5 - disc, epsilon = 1e-12);
        assert_abs_diff_eq!(eigs[1], 1.5 + disc, epsilon = 1e-12);
        let tr: f64 = eigs.iter().sum();
        assert_abs_diff_eq!(tr, 3.0, epsilon = 1e-12);
    }
}
