//! Pauli channels, the 256 local error types over the four arms
//! (A1, B1, A2, B2), weighted noise distributions, and the absorption of
//! measurement imperfection into channel noise.

use std::fmt;
use std::str::FromStr;

use ndarray::Array2;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{cr, kron, trace, CMatrix, DensityMatrix, C_ONE, C_ZERO};
use crate::states::clamp_unit;
use crate::tol;

/// Single-site Pauli label. Z-like labels {I, Z} are phase-type, {X, Y} are
/// bit-type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PauliLabel {
    I,
    X,
    Y,
    Z,
}

impl PauliLabel {
    pub const ALL: [PauliLabel; 4] = [PauliLabel::I, PauliLabel::X, PauliLabel::Y, PauliLabel::Z];

    pub fn is_bit_type(self) -> bool {
        matches!(self, PauliLabel::X | PauliLabel::Y)
    }

    pub fn is_phase_type(self) -> bool {
        !self.is_bit_type()
    }

    /// (x, z) symplectic bits: X = (1,0), Z = (0,1), Y = (1,1).
    fn xz(self) -> (u8, u8) {
        match self {
            PauliLabel::I => (0, 0),
            PauliLabel::X => (1, 0),
            PauliLabel::Y => (1, 1),
            PauliLabel::Z => (0, 1),
        }
    }

    fn from_xz(x: u8, z: u8) -> Self {
        match (x, z) {
            (0, 0) => PauliLabel::I,
            (1, 0) => PauliLabel::X,
            (1, 1) => PauliLabel::Y,
            _ => PauliLabel::Z,
        }
    }

    /// Product modulo global phase; phases drop because errors act by
    /// conjugation.
    pub fn product(self, other: Self) -> Self {
        let (xa, za) = self.xz();
        let (xb, zb) = other.xz();
        Self::from_xz(xa ^ xb, za ^ zb)
    }

    fn index(self) -> usize {
        match self {
            PauliLabel::I => 0,
            PauliLabel::X => 1,
            PauliLabel::Y => 2,
            PauliLabel::Z => 3,
        }
    }

    fn from_index(i: usize) -> Self {
        Self::ALL[i]
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(PauliLabel::I),
            'X' => Some(PauliLabel::X),
            'Y' => Some(PauliLabel::Y),
            'Z' => Some(PauliLabel::Z),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            PauliLabel::I => 'I',
            PauliLabel::X => 'X',
            PauliLabel::Y => 'Y',
            PauliLabel::Z => 'Z',
        }
    }
}

/// The 2x2 Pauli matrix for a label.
pub fn pauli_matrix(label: PauliLabel) -> CMatrix {
    let i = Complex64::new(0.0, 1.0);
    let mut m = Array2::from_elem((2, 2), C_ZERO);
    match label {
        PauliLabel::I => {
            m[[0, 0]] = C_ONE;
            m[[1, 1]] = C_ONE;
        }
        PauliLabel::X => {
            m[[0, 1]] = C_ONE;
            m[[1, 0]] = C_ONE;
        }
        PauliLabel::Y => {
            m[[0, 1]] = -i;
            m[[1, 0]] = i;
        }
        PauliLabel::Z => {
            m[[0, 0]] = C_ONE;
            m[[1, 1]] = -C_ONE;
        }
    }
    m
}

/// One of the 4^4 = 256 local error types: Pauli labels on (A1, B1, A2, B2).
/// Canonical order is lexicographic in I, X, Y, Z with A1 most significant:
/// IIII, IIIX, IIIY, IIIZ, IIXI, ... ZZZZ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NoiseType {
    labels: [PauliLabel; 4],
}

pub const NOISE_TYPE_COUNT: usize = 256;

impl NoiseType {
    pub const IDENTITY: NoiseType = NoiseType {
        labels: [PauliLabel::I, PauliLabel::I, PauliLabel::I, PauliLabel::I],
    };

    pub fn new(labels: [PauliLabel; 4]) -> Self {
        Self { labels }
    }

    pub fn labels(self) -> [PauliLabel; 4] {
        self.labels
    }

    /// Canonical index in 0..256.
    pub fn index(self) -> usize {
        self.labels
            .iter()
            .fold(0, |acc, l| acc * 4 + l.index())
    }

    pub fn from_index(i: usize) -> Self {
        assert!(i < NOISE_TYPE_COUNT);
        Self {
            labels: [
                PauliLabel::from_index((i >> 6) & 3),
                PauliLabel::from_index((i >> 4) & 3),
                PauliLabel::from_index((i >> 2) & 3),
                PauliLabel::from_index(i & 3),
            ],
        }
    }

    /// All 256 types in canonical order.
    pub fn all() -> impl Iterator<Item = NoiseType> {
        (0..NOISE_TYPE_COUNT).map(NoiseType::from_index)
    }

    /// Site-wise Pauli product modulo global phase.
    pub fn product(self, other: Self) -> Self {
        let mut labels = [PauliLabel::I; 4];
        for (i, l) in labels.iter_mut().enumerate() {
            *l = self.labels[i].product(other.labels[i]);
        }
        Self { labels }
    }
}

impl fmt::Display for NoiseType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.labels {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for NoiseType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        if chars.len() != 4 {
            return Err(Error::Parse {
                line: 0,
                msg: format!("noise type must be 4 Pauli letters, got {s:?}"),
            });
        }
        let mut labels = [PauliLabel::I; 4];
        for (i, c) in chars.iter().enumerate() {
            labels[i] = PauliLabel::from_char(*c).ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("invalid Pauli letter {c:?} in {s:?}"),
            })?;
        }
        Ok(Self { labels })
    }
}

/// sigma_i (x) sigma_j (x) sigma_k (x) sigma_l on (A1, B1, A2, B2) as a
/// dense 16x16 matrix.
pub fn error_operator(t: NoiseType) -> CMatrix {
    let [i, j, k, l] = t.labels();
    kron(
        &kron(&pauli_matrix(i), &pauli_matrix(j)),
        &kron(&pauli_matrix(k), &pauli_matrix(l)),
    )
}

/// Single-qubit Pauli channel with rates (r_x, r_y, r_z) and overall error
/// rate q = r_x + r_y + r_z.
#[derive(Debug, Clone, Copy)]
pub struct PauliChannel {
    r_x: f64,
    r_y: f64,
    r_z: f64,
}

impl PauliChannel {
    pub fn new(r_x: f64, r_y: f64, r_z: f64) -> Result<Self> {
        for (name, r) in [("r_x", r_x), ("r_y", r_y), ("r_z", r_z)] {
            if r < 0.0 {
                return Err(Error::OutOfRange {
                    name,
                    value: r,
                    min: 0.0,
                    max: 1.0,
                });
            }
        }
        let q = r_x + r_y + r_z;
        if q > 1.0 + tol::WEIGHT_SUM {
            return Err(Error::OutOfRange {
                name: "q",
                value: q,
                min: 0.0,
                max: 1.0,
            });
        }
        Ok(Self { r_x, r_y, r_z })
    }

    pub fn q(&self) -> f64 {
        self.r_x + self.r_y + self.r_z
    }

    /// N_q(m) = (1-q) m + sum_i r_i sigma_i m sigma_i on a 2x2 operator.
    pub fn apply(&self, m: &CMatrix) -> CMatrix {
        let mut out = m * cr(1.0 - self.q());
        for (r, label) in [
            (self.r_x, PauliLabel::X),
            (self.r_y, PauliLabel::Y),
            (self.r_z, PauliLabel::Z),
        ] {
            if r == 0.0 {
                continue;
            }
            let s = pauli_matrix(label);
            out = out + s.dot(m).dot(&s) * cr(r);
        }
        out
    }
}

/// Returns (tr[N(rho) obs], tr[rho N(obs)]); Pauli channels are self-dual so
/// the two agree up to rounding.
pub fn self_duality_check(
    ch: &PauliChannel,
    rho: &DensityMatrix,
    obs: &CMatrix,
) -> Result<(f64, f64)> {
    if rho.dim() != 2 || obs.nrows() != 2 || obs.ncols() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            got: obs.nrows(),
            got_cols: obs.ncols(),
        });
    }
    let lhs = trace(&ch.apply(rho.mat()).dot(obs)).re;
    let rhs = trace(&rho.mat().dot(&ch.apply(obs))).re;
    Ok((lhs, rhs))
}

/// Identical measurement imperfection on both measured qubits: the outcome
/// projectors become P~_x = eta P_x + (1-eta) P_{x+1}.
#[derive(Debug, Clone, Copy)]
pub struct MeasurementImperfection {
    eta: f64,
}

impl MeasurementImperfection {
    pub fn new(eta: f64) -> Result<Self> {
        if !(0.5..=1.0).contains(&eta) {
            return Err(Error::OutOfRange {
                name: "eta",
                value: eta,
                min: 0.5,
                max: 1.0,
            });
        }
        Ok(Self { eta })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }
}

/// Weighting C_ijkl >= 0 over the 256 error types. All 256 slots are stored,
/// including IIII; the no-error branch carries the remaining 1 - p where
/// p is the sum of all stored weights.
#[derive(Debug, Clone, PartialEq)]
pub struct NoiseDistribution {
    weights: Box<[f64; NOISE_TYPE_COUNT]>,
}

impl NoiseDistribution {
    /// The noiseless distribution: every weight zero.
    pub fn empty() -> Self {
        Self {
            weights: Box::new([0.0; NOISE_TYPE_COUNT]),
        }
    }

    /// Uniform weights p/256 on all 256 types, IIII included.
    pub fn depolarizing(p: f64) -> Result<Self> {
        let p = clamp_unit("p", p)?;
        Ok(Self {
            weights: Box::new([p / NOISE_TYPE_COUNT as f64; NOISE_TYPE_COUNT]),
        })
    }

    /// Weight p on a single type, zero elsewhere.
    pub fn single_type(t: NoiseType, p: f64) -> Result<Self> {
        let p = clamp_unit("p", p)?;
        let mut d = Self::empty();
        d.weights[t.index()] = p;
        Ok(d)
    }

    /// The bit-flip distribution on (A2, B2) equivalent to measurement
    /// imperfection eta pushed through the trace by channel self-duality:
    /// weight eta(1-eta) on each of IIXI and IIIX, (1-eta)^2 on IIXX.
    pub fn measurement(m: MeasurementImperfection) -> Self {
        let eta = m.eta();
        let mut d = Self::empty();
        let single = eta * (1.0 - eta);
        d.weights["IIXI".parse::<NoiseType>().unwrap().index()] = single;
        d.weights["IIIX".parse::<NoiseType>().unwrap().index()] = single;
        d.weights["IIXX".parse::<NoiseType>().unwrap().index()] = (1.0 - eta) * (1.0 - eta);
        d
    }

    /// Build from explicit (type, weight) pairs; weights for repeated types
    /// accumulate.
    pub fn from_weights<I: IntoIterator<Item = (NoiseType, f64)>>(pairs: I) -> Result<Self> {
        let mut d = Self::empty();
        for (t, w) in pairs {
            if w < 0.0 {
                return Err(Error::OutOfRange {
                    name: "weight",
                    value: w,
                    min: 0.0,
                    max: 1.0,
                });
            }
            d.weights[t.index()] += w;
        }
        let p = d.total_weight();
        if p > 1.0 + tol::WEIGHT_SUM {
            return Err(Error::OutOfRange {
                name: "total weight",
                value: p,
                min: 0.0,
                max: 1.0,
            });
        }
        Ok(d)
    }

    pub fn weight(&self, t: NoiseType) -> f64 {
        self.weights[t.index()]
    }

    /// Total error weight p = sum of all stored weights.
    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Types with nonzero weight, canonical order.
    pub fn iter_nonzero(&self) -> impl Iterator<Item = (NoiseType, f64)> + '_ {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| **w != 0.0)
            .map(|(i, w)| (NoiseType::from_index(i), *w))
    }

    /// Distribution of the product error when `self` acts after `other`.
    /// Weights convolve under site-wise Pauli multiplication; the implicit
    /// identity branches (1 - p) of both factors participate.
    pub fn compose(&self, other: &Self) -> Self {
        let pa = self.total_weight();
        let pb = other.total_weight();
        let mut out = Self::empty();
        for (ta, wa) in self.iter_nonzero() {
            // cross terms with other's implicit identity branch
            out.weights[ta.index()] += wa * (1.0 - pb);
            for (tb, wb) in other.iter_nonzero() {
                out.weights[ta.product(tb).index()] += wa * wb;
            }
        }
        for (tb, wb) in other.iter_nonzero() {
            out.weights[tb.index()] += (1.0 - pa) * wb;
        }
        out
    }

    /// Plain-text table: one `IJKL weight` line per nonzero weight, canonical
    /// order.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (t, w) in self.iter_nonzero() {
            s.push_str(&format!("{t} {w}\n"));
        }
        s
    }

    /// Parse the `IJKL weight` table format. Blank lines and lines starting
    /// with `#` are ignored.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.split_whitespace();
            let (label, weight) = match (parts.next(), parts.next(), parts.next()) {
                (Some(l), Some(w), None) => (l, w),
                _ => {
                    return Err(Error::Parse {
                        line: idx + 1,
                        msg: format!("expected `IJKL weight`, got {line:?}"),
                    })
                }
            };
            let t: NoiseType = label.parse().map_err(|e| match e {
                Error::Parse { msg, .. } => Error::Parse { line: idx + 1, msg },
                other => other,
            })?;
            let w: f64 = weight.parse().map_err(|_| Error::Parse {
                line: idx + 1,
                msg: format!("invalid weight {weight:?}"),
            })?;
            pairs.push((t, w));
        }
        Self::from_weights(pairs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unitarity_deviation;
    use approx::assert_abs_diff_eq;

    #[test]
    fn pauli_algebra() {
        let x = pauli_matrix(PauliLabel::X);
        let y = pauli_matrix(PauliLabel::Y);
        let z = pauli_matrix(PauliLabel::Z);
        // sigma_x^2 = I
        let sq = x.dot(&x);
        assert_abs_diff_eq!(sq[[0, 0]].re, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(sq[[0, 1]].norm(), 0.0, epsilon = 1e-15);
        // sigma_x sigma_y = i sigma_z
        let xy = x.dot(&y);
        for i in 0..2 {
            for j in 0..2 {
                let want = Complex64::new(0.0, 1.0) * z[[i, j]];
                assert!((xy[[i, j]] - want).norm() < 1e-15);
            }
        }
        // tr(sigma_i sigma_j) = 2 delta_ij
        for a in PauliLabel::ALL {
            for b in PauliLabel::ALL {
                let t = trace(&pauli_matrix(a).dot(&pauli_matrix(b)));
                let want = if a == b { 2.0 } else { 0.0 };
                assert_abs_diff_eq!(t.re, want, epsilon = 1e-15);
                assert_abs_diff_eq!(t.im, 0.0, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn label_products_mod_phase() {
        use PauliLabel::*;
        assert_eq!(X.product(Y), Z);
        assert_eq!(Y.product(Z), X);
        assert_eq!(Z.product(X), Y);
        for a in PauliLabel::ALL {
            assert_eq!(a.product(a), I);
            assert_eq!(a.product(I), a);
        }
    }

    #[test]
    fn noise_type_roundtrip_and_order() {
        let names: Vec<String> = NoiseType::all().map(|t| t.to_string()).collect();
        assert_eq!(names[0], "IIII");
        assert_eq!(names[1], "IIIX");
        assert_eq!(names[2], "IIIY");
        assert_eq!(names[3], "IIIZ");
        assert_eq!(names[4], "IIXI");
        assert_eq!(names[5], "IIXX");
        assert_eq!(names[255], "ZZZZ");
        for (i, t) in NoiseType::all().enumerate() {
            assert_eq!(t.index(), i);
            assert_eq!(t.to_string().parse::<NoiseType>().unwrap(), t);
        }
        assert!("IIXQ".parse::<NoiseType>().is_err());
        assert!("IIX".parse::<NoiseType>().is_err());
    }

    #[test]
    fn error_operators_are_unitary() {
        for t in NoiseType::all() {
            assert!(unitarity_deviation(&error_operator(t)) < tol::EXACT_ALGEBRA);
        }
    }

    #[test]
    fn identity_error_operator() {
        let e = error_operator(NoiseType::IDENTITY);
        assert_eq!(e, crate::linalg::identity(16));
        let xxxx: NoiseType = "XXXX".parse().unwrap();
        let sq = error_operator(xxxx).dot(&error_operator(xxxx));
        for i in 0..16 {
            assert!((sq[[i, i]] - C_ONE).norm() < 1e-15);
        }
    }

    #[test]
    fn zz_on_kept_pair_commutes_with_post_selector() {
        let zzii: NoiseType = "ZZII".parse().unwrap();
        let s = error_operator(zzii);
        let p = crate::states::post_selector();
        let sp = s.dot(p.projector());
        let ps = p.projector().dot(&s);
        for (a, b) in sp.iter().zip(ps.iter()) {
            assert!((a - b).norm() < tol::EXACT_ALGEBRA);
        }
    }

    #[test]
    fn depolarizing_weights() {
        let d = NoiseDistribution::depolarizing(0.0).unwrap();
        assert_eq!(d.total_weight(), 0.0);
        let d = NoiseDistribution::depolarizing(1.0).unwrap();
        assert_abs_diff_eq!(d.weight(NoiseType::IDENTITY), 1.0 / 256.0, epsilon = 1e-18);
        assert_abs_diff_eq!(d.total_weight(), 1.0, epsilon = tol::WEIGHT_SUM);
        for p in [0.02, 0.04, 0.08, 0.5] {
            let d = NoiseDistribution::depolarizing(p).unwrap();
            assert_abs_diff_eq!(d.total_weight(), p, epsilon = tol::WEIGHT_SUM);
        }
        assert!(NoiseDistribution::depolarizing(1.5).is_err());
    }

    #[test]
    fn single_type_weights() {
        let t: NoiseType = "IIIX".parse().unwrap();
        let d = NoiseDistribution::single_type(t, 0.3).unwrap();
        assert_abs_diff_eq!(d.total_weight(), 0.3, epsilon = tol::WEIGHT_SUM);
        assert_eq!(d.iter_nonzero().count(), 1);
        let d = NoiseDistribution::single_type(t, 0.0).unwrap();
        assert_eq!(d.total_weight(), 0.0);
    }

    #[test]
    fn measurement_absorption_weights() {
        let d = NoiseDistribution::measurement(MeasurementImperfection::new(1.0).unwrap());
        assert_eq!(d.total_weight(), 0.0);

        let d = NoiseDistribution::measurement(MeasurementImperfection::new(0.98).unwrap());
        let single: NoiseType = "IIXI".parse().unwrap();
        let double: NoiseType = "IIXX".parse().unwrap();
        assert_abs_diff_eq!(d.weight(single), 0.98 * 0.02, epsilon = 1e-16);
        assert_abs_diff_eq!(d.weight(double), 0.02 * 0.02, epsilon = 1e-16);
        assert_abs_diff_eq!(d.total_weight(), 1.0 - 0.98 * 0.98, epsilon = tol::WEIGHT_SUM);

        assert!(MeasurementImperfection::new(0.4).is_err());
        assert!(MeasurementImperfection::new(1.2).is_err());
    }

    #[test]
    fn compose_basics() {
        let t: NoiseType = "IIXI".parse().unwrap();
        let d = NoiseDistribution::single_type(t, 1.0).unwrap();
        // X.X = I on the same site: identity-only result
        let c = d.compose(&d);
        assert_abs_diff_eq!(c.weight(NoiseType::IDENTITY), 1.0, epsilon = tol::WEIGHT_SUM);
        assert_eq!(c.iter_nonzero().count(), 1);

        // composing with the empty distribution is the identity operation
        let dep = NoiseDistribution::depolarizing(0.3).unwrap();
        let same = NoiseDistribution::empty().compose(&dep);
        for t in NoiseType::all() {
            assert_abs_diff_eq!(same.weight(t), dep.weight(t), epsilon = 1e-18);
        }
    }

    #[test]
    fn compose_total_weight_law() {
        // brute-force convolution over the full support
        let a = NoiseDistribution::depolarizing(0.2).unwrap();
        let t: NoiseType = "ZXYI".parse().unwrap();
        let b = NoiseDistribution::single_type(t, 0.5).unwrap();
        let c = a.compose(&b);

        let mut expect = [0.0f64; NOISE_TYPE_COUNT];
        for ta in NoiseType::all() {
            for tb in NoiseType::all() {
                let wa = a.weight(ta);
                let wb = b.weight(tb);
                expect[ta.product(tb).index()] += wa * wb;
            }
            expect[ta.index()] += a.weight(ta) * (1.0 - b.total_weight());
        }
        for tb in NoiseType::all() {
            expect[tb.index()] += (1.0 - a.total_weight()) * b.weight(tb);
        }
        for t in NoiseType::all() {
            assert_abs_diff_eq!(c.weight(t), expect[t.index()], epsilon = tol::WEIGHT_SUM);
        }
        let p = 1.0 - (1.0 - a.total_weight()) * (1.0 - b.total_weight());
        assert_abs_diff_eq!(c.total_weight(), p, epsilon = tol::WEIGHT_SUM);
    }

    #[test]
    fn text_roundtrip() {
        let t1: NoiseType = "IIIX".parse().unwrap();
        let t2: NoiseType = "ZYXI".parse().unwrap();
        let d = NoiseDistribution::from_weights([(t1, 0.125), (t2, 0.0625)]).unwrap();
        let text = d.to_text();
        assert!(text.contains("IIIX 0.125"));
        let back = NoiseDistribution::from_text(&text).unwrap();
        assert_eq!(back, d);

        let with_comment = "# weights\nIIIX 0.1\n\nZZZZ 0.2\n";
        let d = NoiseDistribution::from_text(with_comment).unwrap();
        assert_abs_diff_eq!(d.total_weight(), 0.3, epsilon = tol::WEIGHT_SUM);

        assert!(NoiseDistribution::from_text("IIIX\n").is_err());
        assert!(NoiseDistribution::from_text("IIIX nan_oops\n").is_err());
        assert!(NoiseDistribution::from_text("IIIX -0.5\n").is_err());
        assert!(NoiseDistribution::from_text("IIIX 0.9\nZZZZ 0.9\n").is_err());
    }

    #[test]
    fn self_duality_simple_cases() {
        let rho = DensityMatrix::from_pure(&[C_ONE, C_ZERO]).unwrap();
        let obs = pauli_matrix(PauliLabel::Z);
        let ch = PauliChannel::new(0.0, 0.0, 0.0).unwrap();
        let (l, r) = self_duality_check(&ch, &rho, &obs).unwrap();
        assert_abs_diff_eq!(l, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r, 1.0, epsilon = 1e-15);

        let ch = PauliChannel::new(0.1, 0.2, 0.3).unwrap();
        let (l, r) = self_duality_check(&ch, &rho, &crate::linalg::identity(2)).unwrap();
        assert_abs_diff_eq!(l, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r, 1.0, epsilon = 1e-15);

        assert!(PauliChannel::new(-0.1, 0.0, 0.0).is_err());
        assert!(PauliChannel::new(0.5, 0.4, 0.3).is_err());
    }
}
