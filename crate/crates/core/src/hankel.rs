//! Coefficient functionals built from the Schwarz-parameter representation
//! of Caratheodory functions, the closed-form disk maximum `Y(A, B, C)` with
//! its grid oracle, the sharp second-Hankel bound, and a brute-force global
//! maximizer that confirms it.

use num_complex::Complex64;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HankelError {
    #[error("p1 must lie in [0,1] and p2, p3 in the closed unit disk")]
    InvalidTriple,
    #[error("m must lie in (0, 1/log 4], got {0}")]
    MOutOfRange(f64),
    #[error("p1 = {0} sits on a singularity of the (A, B, C) parameters")]
    ParamSingularity(f64),
    #[error("oracle resolution must be at least 128, got {0}")]
    GridTooSmall(usize),
    #[error("parameters are not in a uniqueness regime")]
    NotUniquenessRegime,
    #[error("evaluation point must lie in the open unit disk, |z| = {0}")]
    PointOutsideDisk(f64),
}

const UNIT_TOL: f64 = 1e-12;

/// Upper end of the admissible parameter range, `1 / log 4`.
pub fn m_upper() -> f64 {
    0.25_f64.ln().abs().recip()
}

/// The branch point `(6 + sqrt(114)) / 39` of the sharp bound.
pub fn branch_threshold() -> f64 {
    (6.0 + 114.0_f64.sqrt()) / 39.0
}

/// `(p1, p2, p3)` with `p1` in [0,1] and `p2`, `p3` in the closed unit disk.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct SchwarzTriple {
    pub p1: f64,
    #[serde(with = "complex_pair")]
    pub p2: Complex64,
    #[serde(with = "complex_pair")]
    pub p3: Complex64,
}

mod complex_pair {
    use super::Complex64;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(c: &Complex64, s: S) -> Result<S::Ok, S::Error> {
        serde::Serialize::serialize(&[c.re, c.im], s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Complex64, D::Error> {
        let [re, im] = <[f64; 2]>::deserialize(d)?;
        Ok(Complex64::new(re, im))
    }
}

impl SchwarzTriple {
    pub fn new(p1: f64, p2: Complex64, p3: Complex64) -> Result<Self, HankelError> {
        let ok = (-UNIT_TOL..=1.0 + UNIT_TOL).contains(&p1)
            && p2.norm() <= 1.0 + UNIT_TOL
            && p3.norm() <= 1.0 + UNIT_TOL;
        if ok {
            Ok(Self { p1: p1.clamp(0.0, 1.0), p2, p3 })
        } else {
            Err(HankelError::InvalidTriple)
        }
    }

    pub fn real(p1: f64, p2: f64, p3: f64) -> Result<Self, HankelError> {
        Self::new(p1, Complex64::new(p2, 0.0), Complex64::new(p3, 0.0))
    }
}

/// The first three Taylor coefficients above the normalization.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct CoeffTriple {
    #[serde(with = "complex_pair")]
    pub a2: Complex64,
    #[serde(with = "complex_pair")]
    pub a3: Complex64,
    #[serde(with = "complex_pair")]
    pub a4: Complex64,
}

impl CoeffTriple {
    pub fn new(a2: Complex64, a3: Complex64, a4: Complex64) -> Self {
        Self { a2, a3, a4 }
    }

    pub fn real(a2: f64, a3: f64, a4: f64) -> Self {
        Self::new(
            Complex64::new(a2, 0.0),
            Complex64::new(a3, 0.0),
            Complex64::new(a4, 0.0),
        )
    }
}

/// Caratheodory coefficients from Schwarz parameters:
/// `c1 = 2 p1`, `c2 = 2 p1^2 + 2(1-p1^2) p2`,
/// `c3 = 2 p1^3 + 4(1-p1^2) p1 p2 - 2(1-p1^2) p1 p2^2 + 2(1-p1^2)(1-|p2|^2) p3`.
pub fn c_from_p(t: &SchwarzTriple) -> (Complex64, Complex64, Complex64) {
    let p1 = t.p1;
    let u = 1.0 - p1 * p1;
    let c1 = Complex64::new(2.0 * p1, 0.0);
    let c2 = t.p2 * (2.0 * u) + 2.0 * p1 * p1;
    let c3 = Complex64::new(2.0 * p1 * p1 * p1, 0.0) + t.p2 * (4.0 * u * p1)
        - t.p2 * t.p2 * (2.0 * u * p1)
        + t.p3 * (2.0 * u * (1.0 - t.p2.norm_sqr()));
    (c1, c2, c3)
}

/// `a2 = m c1 / 2`, `a3 = m c2 / 6`, `a4 = m c3 / 12`.
pub fn a_from_c(m: f64, c: (Complex64, Complex64, Complex64)) -> CoeffTriple {
    CoeffTriple::new(c.0 * (m / 2.0), c.1 * (m / 6.0), c.2 * (m / 12.0))
}

/// Inverse-series coefficients `A2 = -a2`, `A3 = 2 a2^2 - a3`,
/// `A4 = -5 a2^3 + 5 a2 a3 - a4`.
pub fn inverse_coeffs(a: &CoeffTriple) -> (Complex64, Complex64, Complex64) {
    let a2 = a.a2;
    let a3 = a.a3;
    let a4 = a.a4;
    (-a2, a2 * a2 * 2.0 - a3, -a2 * a2 * a2 * 5.0 + a2 * a3 * 5.0 - a4)
}

/// Exact-rational form of [`inverse_coeffs`] for real coefficients.
pub fn inverse_coeffs_rational(
    a2: &BigRational,
    a3: &BigRational,
    a4: &BigRational,
) -> (BigRational, BigRational, BigRational) {
    let two = BigRational::from_integer(2.into());
    let five = BigRational::from_integer(5.into());
    (
        -a2.clone(),
        &two * a2 * a2 - a3,
        -(&five) * a2 * a2 * a2 + &five * a2 * a3 - a4,
    )
}

/// Logarithmic coefficients `g1 = a2/2`, `g2 = (a3 - a2^2/2)/2`,
/// `g3 = (a4 - a2 a3 + a2^3/3)/2`.
pub fn gamma_log(a: &CoeffTriple) -> (Complex64, Complex64, Complex64) {
    let a2 = a.a2;
    let a3 = a.a3;
    let a4 = a.a4;
    (
        a2 / 2.0,
        (a3 - a2 * a2 / 2.0) / 2.0,
        (a4 - a2 * a3 + a2 * a2 * a2 / 3.0) / 2.0,
    )
}

/// Logarithmic inverse coefficients `G1 = -a2/2`, `G2 = -a3/2 + 3 a2^2/4`,
/// `G3 = -a4/2 + 2 a2 a3 - 5 a2^3/3`.
pub fn gamma_inv(a: &CoeffTriple) -> (Complex64, Complex64, Complex64) {
    let a2 = a.a2;
    let a3 = a.a3;
    let a4 = a.a4;
    (
        -a2 / 2.0,
        -a3 / 2.0 + a2 * a2 * 0.75,
        -a4 / 2.0 + a2 * a3 * 2.0 - a2 * a2 * a2 * (5.0 / 3.0),
    )
}

/// The determinant `G1 G3 - G2^2` in its expanded form
/// `(13 a2^4 - 12 a2^2 a3 - 12 a3^2 + 12 a2 a4) / 48`.
pub fn h21_inv(a: &CoeffTriple) -> Complex64 {
    let a2 = a.a2;
    let a3 = a.a3;
    let a4 = a.a4;
    (a2 * a2 * a2 * a2 * 13.0 - a2 * a2 * a3 * 12.0 - a3 * a3 * 12.0 + a2 * a4 * 12.0) / 48.0
}

/// Exact-rational form of [`h21_inv`] for real coefficients.
pub fn h21_inv_rational(a2: &BigRational, a3: &BigRational, a4: &BigRational) -> BigRational {
    let c = |n: i64| BigRational::from_integer(n.into());
    (c(13) * a2 * a2 * a2 * a2 - c(12) * a2 * a2 * a3 - c(12) * a3 * a3 + c(12) * a2 * a4)
        / c(48)
}

/// The determinant expressed directly in Schwarz parameters.
pub fn h21_from_schwarz(m: f64, t: &SchwarzTriple) -> Complex64 {
    let p1 = t.p1;
    let u = 1.0 - p1 * p1;
    let k4 = (13.0 * m.powi(4) - 4.0 * m.powi(3) + 2.0 * m * m / 3.0) * p1.powi(4);
    let k1 = (4.0 * m * m / 3.0 - 4.0 * m.powi(3)) * p1 * p1 * u;
    let k2 = -(2.0 / 3.0) * m * m * u * (2.0 + p1 * p1);
    let c3 = 2.0 * m * m * p1 * u * (1.0 - t.p2.norm_sqr());
    (Complex64::new(k4, 0.0) + t.p2 * k1 + t.p2 * t.p2 * k2 + t.p3 * c3) / 48.0
}

/// `|h21|` maximized over `p3` in the closed disk at fixed `(p1, p2)`: the
/// `p3` term is affine with nonnegative real coefficient, so the optimum
/// aligns `p3` with the phase of the remaining sum.
pub fn reduced_objective(m: f64, p1: f64, p2: Complex64) -> f64 {
    let u = 1.0 - p1 * p1;
    let k4 = (13.0 * m.powi(4) - 4.0 * m.powi(3) + 2.0 * m * m / 3.0) * p1.powi(4);
    let k1 = (4.0 * m * m / 3.0 - 4.0 * m.powi(3)) * p1 * p1 * u;
    let k2 = -(2.0 / 3.0) * m * m * u * (2.0 + p1 * p1);
    let w = Complex64::new(k4, 0.0) + p2 * k1 + p2 * p2 * k2;
    let c3 = 2.0 * m * m * p1 * u * (1.0 - p2.norm_sqr());
    (w.norm() + c3) / 48.0
}

/// The phase-aligned optimizer for `p3` at fixed `(p1, p2)`.
pub fn aligned_p3(m: f64, p1: f64, p2: Complex64) -> Complex64 {
    let u = 1.0 - p1 * p1;
    let k4 = (13.0 * m.powi(4) - 4.0 * m.powi(3) + 2.0 * m * m / 3.0) * p1.powi(4);
    let k1 = (4.0 * m * m / 3.0 - 4.0 * m.powi(3)) * p1 * p1 * u;
    let k2 = -(2.0 / 3.0) * m * m * u * (2.0 + p1 * p1);
    let w = Complex64::new(k4, 0.0) + p2 * k1 + p2 * p2 * k2;
    if w.norm() == 0.0 {
        Complex64::new(1.0, 0.0)
    } else {
        w / w.norm()
    }
}

/// The coefficients of the disk polynomial in the reduced objective.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct YParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// `A = (39m^2 - 12m + 2) p1^3 / (6(1 - p1^2))`, `B = (2/3 - 2m) p1`,
/// `C = -(2 + p1^2) / (3 p1)`; `A C < 0` throughout.
pub fn abc_params(m: f64, p1: f64) -> Result<YParams, HankelError> {
    if !(m > 0.0) {
        return Err(HankelError::MOutOfRange(m));
    }
    if !(p1 > 0.0 && p1 < 1.0) {
        return Err(HankelError::ParamSingularity(p1));
    }
    Ok(YParams {
        a: (39.0 * m * m - 12.0 * m + 2.0) * p1.powi(3) / (6.0 * (1.0 - p1 * p1)),
        b: (2.0 / 3.0 - 2.0 * m) * p1,
        c: -(2.0 + p1 * p1) / (3.0 * p1),
    })
}

/// Closed form of `max_{|z|<=1} (|A + Bz + Cz^2| + 1 - |z|^2)` for real
/// coefficients, by case analysis on the signs and magnitudes.
pub fn y_closed(y: &YParams) -> f64 {
    let (a, b, c) = (y.a, y.b, y.c);
    let (aa, ab, ac) = (a.abs(), b.abs(), c.abs());
    if a * c >= 0.0 {
        return if ab >= 2.0 * (1.0 - ac) {
            aa + ab + ac
        } else {
            1.0 + aa + b * b / (4.0 * (1.0 - ac))
        };
    }
    // a c < 0: both nonzero.
    let t = -4.0 * a * c * (1.0 / (c * c) - 1.0);
    if t <= b * b && ab < 2.0 * (1.0 - ac) {
        1.0 - aa + b * b / (4.0 * (1.0 - ac))
    } else if b * b < (4.0 * (1.0 + ac).powi(2)).min(t) {
        1.0 + aa + b * b / (4.0 * (1.0 + ac))
    } else if ac * (ab + 4.0 * aa) <= aa * ab {
        aa + ab + ac
    } else if aa * ab <= ac * (ab - 4.0 * aa) {
        -aa + ab + ac
    } else {
        (aa + ac) * (1.0 - b * b / (4.0 * a * c)).sqrt()
    }
}

/// Polar-grid maximum of the same disk functional, refined by pattern
/// search on the best cell. Underestimates the true maximum by at most the
/// Lipschitz-bounded cell error before refinement.
pub fn y_oracle(y: &YParams, resolution: usize) -> Result<f64, HankelError> {
    if resolution < 128 {
        return Err(HankelError::GridTooSmall(resolution));
    }
    let obj = |rho: f64, theta: f64| {
        let z = Complex64::from_polar(rho, theta);
        (Complex64::new(y.a, 0.0) + z * y.b + z * z * y.c).norm() + 1.0 - rho * rho
    };
    let n_rho = resolution;
    let n_theta = 2 * resolution;
    let mut best = f64::NEG_INFINITY;
    let mut best_at = (0.0, 0.0);
    // Real coefficients: the functional is even in theta, so [0, pi] suffices.
    for i in 0..n_rho {
        let rho = i as f64 / (n_rho - 1) as f64;
        for j in 0..n_theta {
            let theta = std::f64::consts::PI * j as f64 / (n_theta - 1) as f64;
            let v = obj(rho, theta);
            if v > best {
                best = v;
                best_at = (rho, theta);
            }
        }
    }
    // Pattern-search refinement with step halving.
    let (mut rho, mut theta) = best_at;
    let mut step_r = 1.0 / n_rho as f64;
    let mut step_t = std::f64::consts::PI / n_theta as f64;
    while step_r > 1e-8 || step_t > 1e-8 {
        let mut improved = false;
        for (dr, dt) in [
            (step_r, 0.0),
            (-step_r, 0.0),
            (0.0, step_t),
            (0.0, -step_t),
        ] {
            let r2 = (rho + dr).clamp(0.0, 1.0);
            let t2 = theta + dt;
            let v = obj(r2, t2);
            if v > best {
                best = v;
                rho = r2;
                theta = t2;
                improved = true;
            }
        }
        if !improved {
            step_r *= 0.5;
            step_t *= 0.5;
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Branch {
    First,
    Second,
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::First => write!(f, "FIRST"),
            Self::Second => write!(f, "SECOND"),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoundResult {
    pub m: f64,
    pub branch: Branch,
    pub value: f64,
    pub extremal_description: String,
}

/// The sharp bound: `m^2/36` up to the branch threshold, then
/// `(m^2/144)(39 m^2 - 12 m + 2)`. The two branches agree at the threshold,
/// where `39 m^2 - 12 m - 2 = 0`.
pub fn sharp_bound(m: f64) -> Result<BoundResult, HankelError> {
    if !(m > 0.0 && m <= m_upper() + 1e-15) {
        return Err(HankelError::MOutOfRange(m));
    }
    let thr = branch_threshold();
    Ok(if m <= thr {
        BoundResult {
            m,
            branch: Branch::First,
            value: m * m / 36.0,
            extremal_description: "attained at p1 = 0, p2 = -1; boundary function (1 - z^2)/(1 + z^2)".into(),
        }
    } else {
        BoundResult {
            m,
            branch: Branch::Second,
            value: m * m / 144.0 * (39.0 * m * m - 12.0 * m + 2.0),
            extremal_description: "attained at p1 = 1; boundary function (1 + z)/(1 - z)".into(),
        }
    })
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct MaximizerConfig {
    pub grid_p1: usize,
    pub grid_rho: usize,
    pub grid_phi: usize,
}

impl Default for MaximizerConfig {
    fn default() -> Self {
        Self { grid_p1: 512, grid_rho: 256, grid_phi: 512 }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MaximizerResult {
    pub max_abs: f64,
    pub argmax_p1: f64,
    pub argmax_rho: f64,
    pub argmax_phi: f64,
}

impl MaximizerResult {
    pub fn triple(&self, m: f64) -> SchwarzTriple {
        let p2 = Complex64::from_polar(self.argmax_rho, self.argmax_phi);
        SchwarzTriple { p1: self.argmax_p1, p2, p3: aligned_p3(m, self.argmax_p1, p2) }
    }
}

/// Brute-force global maximum of `|h21|` over the Schwarz parameter domain.
///
/// `p3` is eliminated by phase alignment, `p1` and polar `p2` are gridded,
/// and the best grid point is polished by pattern search with step halving
/// down to 1e-6. Slices over `p1` run in parallel; the reduction keeps the
/// lexicographically first argmax so results are deterministic.
pub fn maximize_h21(m: f64, cfg: &MaximizerConfig) -> Result<MaximizerResult, HankelError> {
    if !(m > 0.0 && m <= m_upper() + 1e-15) {
        return Err(HankelError::MOutOfRange(m));
    }
    if cfg.grid_p1 < 2 || cfg.grid_rho < 2 || cfg.grid_phi < 2 {
        return Err(HankelError::GridTooSmall(cfg.grid_p1.min(cfg.grid_rho).min(cfg.grid_phi)));
    }
    // Precompute the p2 grid: (z, z^2, 1 - rho^2).
    let mut pts = Vec::with_capacity(cfg.grid_rho * cfg.grid_phi);
    for i in 0..cfg.grid_rho {
        let rho = i as f64 / (cfg.grid_rho - 1) as f64;
        for j in 0..cfg.grid_phi {
            let phi = 2.0 * std::f64::consts::PI * j as f64 / cfg.grid_phi as f64;
            let z = Complex64::from_polar(rho, phi);
            pts.push((z.re, z.im, z.re * z.re - z.im * z.im, 2.0 * z.re * z.im, 1.0 - rho * rho));
        }
    }
    let slice_best: Vec<(f64, usize)> = (0..cfg.grid_p1)
        .into_par_iter()
        .map(|i| {
            let p1 = i as f64 / (cfg.grid_p1 - 1) as f64;
            let u = 1.0 - p1 * p1;
            let k4 = (13.0 * m.powi(4) - 4.0 * m.powi(3) + 2.0 * m * m / 3.0) * p1.powi(4);
            let k1 = (4.0 * m * m / 3.0 - 4.0 * m.powi(3)) * p1 * p1 * u;
            let k2 = -(2.0 / 3.0) * m * m * u * (2.0 + p1 * p1);
            let c3 = 2.0 * m * m * p1 * u;
            let mut best = f64::NEG_INFINITY;
            let mut best_j = 0usize;
            for (j, &(zx, zy, z2x, z2y, omr)) in pts.iter().enumerate() {
                let wx = k4 + k1 * zx + k2 * z2x;
                let wy = k1 * zy + k2 * z2y;
                let v = (wx * wx + wy * wy).sqrt() + c3 * omr;
                if v > best {
                    best = v;
                    best_j = j;
                }
            }
            (best / 48.0, best_j)
        })
        .collect();
    let mut best = f64::NEG_INFINITY;
    let mut at = (0usize, 0usize);
    for (i, &(v, j)) in slice_best.iter().enumerate() {
        if v > best {
            best = v;
            at = (i, j);
        }
    }
    let p1 = at.0 as f64 / (cfg.grid_p1 - 1) as f64;
    let rho = (at.1 / cfg.grid_phi) as f64 / (cfg.grid_rho - 1) as f64;
    let phi = 2.0 * std::f64::consts::PI * (at.1 % cfg.grid_phi) as f64 / cfg.grid_phi as f64;

    // Pattern-search polish.
    let mut cur = (p1, rho, phi);
    let mut steps = (
        1.0 / cfg.grid_p1 as f64,
        1.0 / cfg.grid_rho as f64,
        2.0 * std::f64::consts::PI / cfg.grid_phi as f64,
    );
    let obj = |(p, r, f): (f64, f64, f64)| reduced_objective(m, p, Complex64::from_polar(r, f));
    let mut val = obj(cur);
    while steps.0 > 1e-6 || steps.1 > 1e-6 || steps.2 > 1e-6 {
        let candidates = [
            ((cur.0 + steps.0).clamp(0.0, 1.0), cur.1, cur.2),
            ((cur.0 - steps.0).clamp(0.0, 1.0), cur.1, cur.2),
            (cur.0, (cur.1 + steps.1).clamp(0.0, 1.0), cur.2),
            (cur.0, (cur.1 - steps.1).clamp(0.0, 1.0), cur.2),
            (cur.0, cur.1, cur.2 + steps.2),
            (cur.0, cur.1, cur.2 - steps.2),
        ];
        let mut improved = false;
        for cand in candidates {
            let v = obj(cand);
            if v > val {
                val = v;
                cur = cand;
                improved = true;
            }
        }
        if !improved {
            steps = (steps.0 * 0.5, steps.1 * 0.5, steps.2 * 0.5);
        }
    }
    Ok(MaximizerResult { max_abs: val, argmax_p1: cur.0, argmax_rho: cur.1, argmax_phi: cur.2 })
}

/// Evaluates the unique Caratheodory function attached to a boundary
/// parameter triple: `p1` on the unit circle pins the function entirely;
/// otherwise `p2` on the circle does; otherwise `p3` on the circle does.
pub fn extremal_p_eval(t: &SchwarzTriple, z: Complex64) -> Result<Complex64, HankelError> {
    if z.norm() >= 1.0 {
        return Err(HankelError::PointOutsideDisk(z.norm()));
    }
    let p1 = Complex64::new(t.p1, 0.0);
    let one = Complex64::new(1.0, 0.0);
    if (t.p1 - 1.0).abs() <= UNIT_TOL {
        return Ok((one + p1 * z) / (one - p1 * z));
    }
    if (t.p2.norm() - 1.0).abs() <= UNIT_TOL {
        let p2 = t.p2;
        let num = one + (p1 + p1.conj() * p2) * z + p2 * z * z;
        let den = one - (p1 - p1.conj() * p2) * z - p2 * z * z;
        return Ok(num / den);
    }
    if (t.p3.norm() - 1.0).abs() <= UNIT_TOL {
        let p2 = t.p2;
        let p3 = t.p3;
        let num = one
            + (p2.conj() * p3 + p1.conj() * p2 + p1) * z
            + (p1.conj() * p3 + p1 * p2.conj() * p3 + p2) * z * z
            + p3 * z * z * z;
        let den = one + (p2.conj() * p3 + p1.conj() * p2 - p1) * z
            + (p1.conj() * p3 - p1 * p2.conj() * p3 - p2) * z * z
            - p3 * z * z * z;
        return Ok(num / den);
    }
    Err(HankelError::NotUniquenessRegime)
}

/// Closed-form constants of the bound analysis at a given `m`; fields are
/// absent outside their defining ranges.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProofConstants {
    pub m: f64,
    pub t1: Option<f64>,
    pub t2: Option<f64>,
    pub t3: Option<f64>,
    pub t4: Option<f64>,
    pub y0: Option<f64>,
    pub y1: Option<f64>,
    pub y3: Option<f64>,
    pub threshold: f64,
    pub m1: f64,
}

/// The quadratic with roots `t1`, `t2`.
pub fn t12_quadratic(m: f64, t: f64) -> f64 {
    (117.0 * m.powi(3) - 153.0 * m * m + 48.0 * m - 8.0) * t * t
        + (-156.0 * m * m + 54.0 * m - 10.0) * t
        + 4.0 * (1.0 - 3.0 * m)
}

/// The quadratic with roots `t3`, `t4`.
pub fn t34_quadratic(m: f64, t: f64) -> f64 {
    (117.0 * m.powi(3) + 3.0 * m * m) * t * t
        + 2.0 * (78.0 * m * m - 21.0 * m + 3.0) * t
        + 4.0 * (1.0 - 3.0 * m)
}

pub fn proof_constants(m: f64) -> ProofConstants {
    let upper = m_upper();
    let third = 1.0 / 3.0;
    let (t1, t2) = if m > 0.0 && m <= upper && (m - third).abs() > f64::EPSILON {
        let disc = 3.0
            * (2496.0 * m.powi(4) - 2172.0 * m.powi(3) + 899.0 * m * m - 186.0 * m + 19.0);
        let den = 117.0 * m.powi(3) - 153.0 * m * m + 48.0 * m - 8.0;
        if disc >= 0.0 && den != 0.0 {
            let num = 78.0 * m * m - 27.0 * m + 5.0;
            (Some((num - disc.sqrt()) / den), Some((num + disc.sqrt()) / den))
        } else {
            (None, None)
        }
    } else {
        (None, None)
    };
    let (t3, t4) = if (third..=upper).contains(&m) {
        let disc =
            3.0 * (2496.0 * m.powi(4) - 1236.0 * m.powi(3) + 299.0 * m * m - 42.0 * m + 3.0);
        let den = 117.0 * m.powi(3) + 3.0 * m * m;
        if disc >= 0.0 && den != 0.0 {
            let num = -78.0 * m * m + 21.0 * m - 3.0;
            (Some((num - disc.sqrt()) / den), Some((num + disc.sqrt()) / den))
        } else {
            (None, None)
        }
    } else {
        (None, None)
    };
    let y0 = if m > 0.0 && m < 1.0 / 6.0 {
        Some((1.0 - 6.0 * m) / (39.0 * m * m - 24.0 * m + 8.0))
    } else {
        None
    };
    let y1 = if m > 0.5 && m <= upper { Some((2.0 * m - 1.0) / (13.0 * m * m)) } else { None };
    let y3 = if m > 4.0 / 13.0 && m < third { Some(1.0 / (39.0 * m * m - 12.0 * m)) } else { None };
    ProofConstants {
        m,
        t1,
        t2,
        t3,
        t4,
        y0,
        y1,
        y3,
        threshold: branch_threshold(),
        m1: 4.0 / 13.0,
    }
}
