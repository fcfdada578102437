//! Partition of the 256 error types into equivalence classes, by rule and by
//! numerics, plus distillable-interval solving and measurement-noise curve
//! clustering.

use std::fmt;
use std::str::FromStr;

use crate::distill::{
    analytic_class_terms, fidelity_increment, noisy_round_analytic, single_error_fidelity,
    ClassWeights,
};
use crate::error::{Error, Result};
use crate::noise::{MeasurementImperfection, NoiseDistribution, NoiseType};
use crate::states::clamp_unit;
use crate::tol;

/// The four equivalence classes of local error types.
///
/// Membership depends only on the phase/bit type pattern: class M collects
/// every type whose measured-pair labels are mixed (one phase-type, one
/// bit-type); the rest split by the kept-pair labels into I
/// ({II, XX, YY, ZZ}), C1 ({IZ, ZI, XY, YX}) and C2 (mixed kept pair).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ErrorClass {
    I,
    M,
    C1,
    C2,
}

impl ErrorClass {
    pub const ALL: [ErrorClass; 4] = [ErrorClass::I, ErrorClass::M, ErrorClass::C1, ErrorClass::C2];

    /// Number of types in the class: (I) 32, (M) 128, (C1) 32, (C2) 64.
    pub fn cardinality(self) -> usize {
        match self {
            ErrorClass::I => 32,
            ErrorClass::M => 128,
            ErrorClass::C1 => 32,
            ErrorClass::C2 => 64,
        }
    }

    /// A canonical member of the class.
    pub fn representative(self) -> NoiseType {
        let s = match self {
            ErrorClass::I => "IIII",
            ErrorClass::M => "IIIX",
            ErrorClass::C1 => "IZII",
            ErrorClass::C2 => "IXII",
        };
        s.parse().unwrap()
    }
}

impl fmt::Display for ErrorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ErrorClass::I => "I",
            ErrorClass::M => "M",
            ErrorClass::C1 => "C1",
            ErrorClass::C2 => "C2",
        };
        write!(f, "{s}")
    }
}

impl FromStr for ErrorClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" => Ok(ErrorClass::I),
            "M" => Ok(ErrorClass::M),
            "C1" => Ok(ErrorClass::C1),
            "C2" => Ok(ErrorClass::C2),
            _ => Err(Error::Parse {
                line: 0,
                msg: format!("unknown error class {s:?} (expected I, M, C1 or C2)"),
            }),
        }
    }
}

/// Classify by the membership rule alone; total over all 256 types.
pub fn classify_by_rule(t: NoiseType) -> ErrorClass {
    let [i, j, k, l] = t.labels();
    if k.is_bit_type() != l.is_bit_type() {
        return ErrorClass::M;
    }
    match (i, j) {
        _ if i == j => ErrorClass::I, // II, XX, YY, ZZ
        _ if i.is_bit_type() != j.is_bit_type() => ErrorClass::C2,
        _ => ErrorClass::C1, // IZ, ZI, XY, YX
    }
}

/// Collapse a distribution to its per-class weights.
pub fn class_weights(d: &NoiseDistribution) -> ClassWeights {
    let mut w = ClassWeights {
        w_i: 0.0,
        w_m: 0.0,
        w_c1: 0.0,
        w_c2: 0.0,
    };
    for (t, weight) in d.iter_nonzero() {
        match classify_by_rule(t) {
            ErrorClass::I => w.w_i += weight,
            ErrorClass::M => w.w_m += weight,
            ErrorClass::C1 => w.w_c1 += weight,
            ErrorClass::C2 => w.w_c2 += weight,
        }
    }
    w
}

/// Classify by evaluating the exact (numerator, denominator) curve on a grid
/// and matching it against the four analytic class curves.
///
/// The grid must have at least 10 points inside [0.25, 1] spanning at least
/// half that range. Returns `Unclassified` if no analytic curve matches -
/// which would falsify the four-class collapse - and an invalid-grid error
/// if more than one matches.
pub fn classify_by_curve(t: NoiseType, grid: &[f64]) -> Result<ErrorClass> {
    if grid.len() < 10 {
        return Err(Error::InvalidGrid {
            reason: "need at least 10 grid points",
        });
    }
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &f in grid {
        if !(0.25 - tol::EXACT_ALGEBRA..=1.0 + tol::EXACT_ALGEBRA).contains(&f) {
            return Err(Error::InvalidGrid {
                reason: "grid points must lie in [0.25, 1]",
            });
        }
        lo = lo.min(f);
        hi = hi.max(f);
    }
    if hi - lo < 0.375 {
        return Err(Error::InvalidGrid {
            reason: "grid must span at least half of (0.25, 1)",
        });
    }

    let mut alive = [true; 4];
    for &f in grid {
        let (num, den) = single_error_fidelity(f, t)?;
        let terms = analytic_class_terms(f)?;
        let candidates = [
            (terms.numerator_i, terms.denominator_ideal),
            (terms.numerator_m, terms.denominator_mixed),
            (terms.numerator_c1, terms.denominator_ideal),
            (terms.numerator_c2, terms.denominator_ideal),
        ];
        for (slot, (n, d)) in alive.iter_mut().zip(candidates) {
            if (num - n).abs() > tol::CURVE_EQUALITY || (den - d).abs() > tol::CURVE_EQUALITY {
                *slot = false;
            }
        }
    }
    let survivors: Vec<ErrorClass> = ErrorClass::ALL
        .iter()
        .zip(alive)
        .filter(|(_, a)| *a)
        .map(|(c, _)| *c)
        .collect();
    match survivors.as_slice() {
        [unique] => Ok(*unique),
        [] => Err(Error::Unclassified {
            type_label: t.to_string(),
        }),
        _ => Err(Error::InvalidGrid {
            reason: "grid does not separate the class curves",
        }),
    }
}

/// [F_min, F_max] on which one noisy round strictly increases the fidelity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DistillableInterval {
    pub f_min: f64,
    pub f_max: f64,
}

/// Locate the positive region of g(F) = delta F~ on (1/4, 1]: a coarse scan
/// brackets the sign changes, bisection refines each bracket, and F_max is
/// reported as exactly 1 when g is still positive at 1 - 1e-6.
pub fn distillable_interval(d: &NoiseDistribution) -> Result<DistillableInterval> {
    let g = |f: f64| fidelity_increment(f, d);
    solve_positive_region(&g)
}

pub(crate) fn solve_positive_region<G>(g: &G) -> Result<DistillableInterval>
where
    G: Fn(f64) -> Result<f64>,
{
    // nodes strictly inside (1/4, 1): 0.251, 0.252, ..., 0.999, then the
    // boundary probe
    let steps = 749usize;
    let node = |k: usize| 0.25 + (k as f64 + 1.0) * tol::SCAN_STEP;
    let probe_f = 1.0 - tol::BOUNDARY_PROBE;
    let mut fs: Vec<f64> = (0..steps).map(node).collect();
    fs.push(probe_f);
    let mut vs = Vec::with_capacity(fs.len());
    for &f in &fs {
        vs.push(g(f)?);
    }

    let first_pos = vs.iter().position(|&v| v > 0.0);
    let Some(first_pos) = first_pos else {
        return Err(Error::EmptyInterval);
    };

    let f_min = if first_pos == 0 {
        fs[0]
    } else {
        bisect(g, fs[first_pos - 1], fs[first_pos], vs[first_pos - 1])?
    };

    let f_max = if *vs.last().unwrap() > 0.0 {
        1.0
    } else {
        let last_pos = vs.iter().rposition(|&v| v > 0.0).unwrap();
        bisect(g, fs[last_pos], fs[last_pos + 1], vs[last_pos])?
    };

    Ok(DistillableInterval { f_min, f_max })
}

/// Bisection on a bracketing pair down to ROOT_BRACKET width.
fn bisect<G>(g: &G, mut a: f64, mut b: f64, mut ga: f64) -> Result<f64>
where
    G: Fn(f64) -> Result<f64>,
{
    while b - a > tol::ROOT_BRACKET {
        let mid = 0.5 * (a + b);
        let gm = g(mid)?;
        if (ga <= 0.0) == (gm <= 0.0) {
            a = mid;
            ga = gm;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}

/// Distillable interval for a single-class distribution of weight p; any
/// representative gives the same interval by the equivalence property.
pub fn class_interval(k: ErrorClass, p: f64) -> Result<DistillableInterval> {
    let d = NoiseDistribution::single_type(k.representative(), p)?;
    distillable_interval(&d)
}

/// The class-weighted closed form of the depolarized round,
/// (1 - 7p/8) F' + (p/2) F'_M + (p/8) F'_C1 + (p/4) F'_C2 with the shared
/// total acceptance, using the class cardinalities 32/128/32/64 over 256.
/// Equals the uniform 256-type evaluation.
pub fn depolarization_decomposition(p: f64, f: f64) -> Result<f64> {
    let p = clamp_unit("p", p)?;
    let w = ClassWeights {
        w_i: p / 8.0,
        w_m: p / 2.0,
        w_c1: p / 8.0,
        w_c2: p / 4.0,
    };
    Ok(noisy_round_analytic(f, w, p)?.fidelity_out)
}

/// Which noise the measurement imperfection is layered on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseBase {
    /// Measurement noise alone.
    Ideal,
    /// Every member of the class, each at channel weight p.
    Class(ErrorClass),
}

/// One clustered increment curve under measurement noise.
#[derive(Debug, Clone)]
pub struct MeasurementCurve {
    /// 1-based label within the base class, ordered by ascending F_min.
    pub subcluster: usize,
    /// Members producing this curve, canonical order; empty for the ideal base.
    pub members: Vec<NoiseType>,
    /// delta F~ on the grid.
    pub delta: Vec<f64>,
    /// Distillable interval of the curve; None when empty.
    pub interval: Option<DistillableInterval>,
}

#[derive(Debug, Clone)]
pub struct MeasurementCurves {
    pub grid: Vec<f64>,
    pub curves: Vec<MeasurementCurve>,
}

/// Increment curves when measurement imperfection eta is combined with the
/// base noise, clustered at the curve-equality tolerance.
///
/// Under measurement noise the class (M) family splits into three distinct
/// curves, while classes I, C1, C2 each stay a single shifted curve.
pub fn measurement_noise_curves(
    eta: MeasurementImperfection,
    base: NoiseBase,
    p: f64,
    grid: &[f64],
) -> Result<MeasurementCurves> {
    if grid.is_empty() {
        return Err(Error::InvalidGrid {
            reason: "empty fidelity grid",
        });
    }
    let meas = NoiseDistribution::measurement(eta);
    let members: Vec<NoiseType> = match base {
        NoiseBase::Ideal => Vec::new(),
        NoiseBase::Class(k) => NoiseType::all().filter(|t| classify_by_rule(*t) == k).collect(),
    };

    let curve_of = |d: &NoiseDistribution| -> Result<Vec<f64>> {
        grid.iter().map(|&f| fidelity_increment(f, d)).collect()
    };
    let interval_of = |d: &NoiseDistribution| -> Result<Option<DistillableInterval>> {
        match distillable_interval(d) {
            Ok(iv) => Ok(Some(iv)),
            Err(Error::EmptyInterval) => Ok(None),
            Err(e) => Err(e),
        }
    };

    let mut curves = if members.is_empty() {
        vec![MeasurementCurve {
            subcluster: 0,
            members: Vec::new(),
            delta: curve_of(&meas)?,
            interval: interval_of(&meas)?,
        }]
    } else {
        let mut clusters: Vec<(Vec<f64>, Vec<NoiseType>, NoiseDistribution)> = Vec::new();
        for &t in &members {
            let d = meas.compose(&NoiseDistribution::single_type(t, p)?);
            let delta = curve_of(&d)?;
            let found = clusters.iter_mut().find(|(rep, _, _)| {
                rep.iter()
                    .zip(&delta)
                    .all(|(a, b)| (a - b).abs() < tol::CURVE_EQUALITY)
            });
            match found {
                Some((_, mem, _)) => mem.push(t),
                None => clusters.push((delta, vec![t], d)),
            }
        }
        clusters
            .into_iter()
            .map(|(delta, members, d)| {
                Ok(MeasurementCurve {
                    subcluster: 0,
                    members,
                    delta,
                    interval: interval_of(&d)?,
                })
            })
            .collect::<Result<Vec<_>>>()?
    };

    // label by ascending F_min; curves with no distillable region sort last
    curves.sort_by(|a, b| {
        let key = |c: &MeasurementCurve| {
            (
                c.interval.map_or(f64::INFINITY, |iv| iv.f_min),
                c.members.first().map_or(0, |t| t.index()),
            )
        };
        key(a).partial_cmp(&key(b)).unwrap()
    });
    for (i, c) in curves.iter_mut().enumerate() {
        c.subcluster = i + 1;
    }
    Ok(MeasurementCurves {
        grid: grid.to_vec(),
        curves,
    })
}
