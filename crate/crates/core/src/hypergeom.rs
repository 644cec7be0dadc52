//! The Gauss hypergeometric value `2F1(1, 1/a; 1 + 1/a; r)` for `a` in (0,1]
//! and `r` in [0,1), by two independent routes, and the starlikeness-radius
//! solver driven by it.
//!
//! The series route uses `2F1(1, 1/a; 1+1/a; r) = sum_{n>=0} r^n / (1 + n a)`
//! with a geometric tail majorant. The quadrature route integrates
//! `(1/a) * t^(1/a - 1) / (1 - r t)` over [0,1] with tanh-sinh nodes, which
//! absorb the fractional-power endpoint behavior.

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HypergeomError {
    #[error("alpha must lie in (0, 1], got {0}")]
    AlphaOutOfRange(f64),
    #[error("argument must lie in [0, 1), got {0} (the function diverges at 1)")]
    ArgumentOutOfRange(f64),
    #[error("m must be positive, got {0}")]
    NonPositiveM(f64),
    #[error("root lies closer to 1 than f64 can resolve for m = {0}")]
    RootBeyondPrecision(f64),
}

/// Validated shape parameter in (0, 1].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaParam(f64);

impl AlphaParam {
    pub fn new(alpha: f64) -> Result<Self, HypergeomError> {
        if alpha.is_finite() && alpha > 0.0 && alpha <= 1.0 {
            Ok(Self(alpha))
        } else {
            Err(HypergeomError::AlphaOutOfRange(alpha))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RadiusSolution {
    pub r1: f64,
    pub residual: f64,
    pub iterations: u32,
}

const SERIES_TAIL_TOL: f64 = 1e-13;
const SERIES_SWITCHOVER: f64 = 0.9;
const QUAD_TOL: f64 = 1e-12;

/// `2F1(1, 1/a; 1+1/a; r)` by direct summation for `r <= 0.9`, switching to
/// quadrature nearer the singularity where the series converges too slowly.
pub fn f21_ratio(alpha: AlphaParam, r: f64) -> Result<f64, HypergeomError> {
    check_r(r)?;
    if r > SERIES_SWITCHOVER {
        return f21_integral(alpha, r);
    }
    let a = alpha.get();
    let mut sum = 0.0;
    let mut rn = 1.0;
    let mut n = 0u32;
    loop {
        sum += rn / (1.0 + f64::from(n) * a);
        rn *= r;
        n += 1;
        // Remaining terms are bounded by r^n / ((1 + n a)(1 - r)).
        if rn / ((1.0 + f64::from(n) * a) * (1.0 - r)) < SERIES_TAIL_TOL {
            break;
        }
    }
    Ok(sum)
}

/// `(1/a) * integral_0^1 t^(1/a - 1) / (1 - r t) dt` by tanh-sinh quadrature.
pub fn f21_integral(alpha: AlphaParam, r: f64) -> Result<f64, HypergeomError> {
    check_r(r)?;
    let a = alpha.get();
    let exponent = 1.0 / a - 1.0;
    let f = |t: f64| t.powf(exponent) / (1.0 - r * t);
    Ok(tanh_sinh_unit(f, QUAD_TOL) / a)
}

fn check_r(r: f64) -> Result<(), HypergeomError> {
    if !r.is_finite() || !(0.0..1.0).contains(&r) {
        return Err(HypergeomError::ArgumentOutOfRange(r));
    }
    Ok(())
}

/// Tanh-sinh quadrature on (0, 1). Nodes are `x = (1 + tanh((pi/2) sinh(k h)))/2`;
/// levels halve `h` until two consecutive estimates agree to `tol`.
fn tanh_sinh_unit(f: impl Fn(f64) -> f64, tol: f64) -> f64 {
    use std::f64::consts::FRAC_PI_2;
    let eval = |w: f64| -> Option<(f64, f64)> {
        let s = FRAC_PI_2 * w.sinh();
        let x = 0.5 * (1.0 + s.tanh());
        let dx = 0.5 * FRAC_PI_2 * w.cosh() / s.cosh().powi(2);
        if x <= 0.0 || x >= 1.0 || dx < 1e-320 {
            return None;
        }
        Some((x, dx))
    };
    let mut h = 1.0_f64;
    // Level 0: coarse nodes until the transform saturates on both sides.
    let mut total = eval(0.0).map_or(0.0, |(x, dx)| f(x) * dx);
    for k in 1..=100 {
        let mut contributed = false;
        for sign in [1.0, -1.0] {
            if let Some((x, dx)) = eval(sign * f64::from(k) * h) {
                total += f(x) * dx;
                contributed = true;
            }
        }
        if !contributed {
            break;
        }
    }
    let mut estimate = total * h;
    for _level in 1..=12 {
        h *= 0.5;
        // New midpoints only (odd multiples of the new h).
        let mut k = 1u32;
        loop {
            let w = f64::from(k) * h;
            let mut contributed = false;
            for sign in [1.0, -1.0] {
                if let Some((x, dx)) = eval(sign * w) {
                    total += f(x) * dx;
                    contributed = true;
                }
            }
            if !contributed || k > 1 << 22 {
                break;
            }
            k += 2;
        }
        let next = total * h;
        if (next - estimate).abs() < tol * next.abs().max(1.0) {
            return next;
        }
        estimate = next;
    }
    estimate
}

/// Smallest root in (0,1) of `H(r) = 2 M r * 2F1(1, 1/a; 1+1/a; r) - 1`.
///
/// Every series term of `2 M r * 2F1` is strictly increasing in `r`, so `H`
/// is strictly increasing and the smallest root is the only one. Bisection
/// is therefore unconditionally convergent; a final secant polish trims the
/// residual.
pub fn starlike_radius(alpha: AlphaParam, m: f64) -> Result<RadiusSolution, HypergeomError> {
    if !(m > 0.0) || !m.is_finite() {
        return Err(HypergeomError::NonPositiveM(m));
    }
    let h = |r: f64| -> Result<f64, HypergeomError> { Ok(2.0 * m * r * f21_ratio(alpha, r)? - 1.0) };
    let mut lo = 1e-9;
    let mut hi = 1.0 - 1e-9;
    if h(lo)? >= 0.0 {
        lo = f64::MIN_POSITIVE;
    }
    if h(hi)? <= 0.0 {
        hi = 1.0 - 1e-15;
        if h(hi)? <= 0.0 {
            return Err(HypergeomError::RootBeyondPrecision(m));
        }
    }
    let mut iterations = 0u32;
    let mut flo = h(lo)?;
    while hi - lo > 1e-16 && iterations < 128 {
        let mid = 0.5 * (lo + hi);
        let fmid = h(mid)?;
        if fmid == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (fmid > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    let mut r1 = 0.5 * (lo + hi);
    // Secant polish.
    let mut r_prev = lo;
    let mut f_prev = h(r_prev)?;
    for _ in 0..4 {
        let f_cur = h(r1)?;
        if f_cur == 0.0 || (f_cur - f_prev) == 0.0 {
            break;
        }
        let next = r1 - f_cur * (r1 - r_prev) / (f_cur - f_prev);
        if !(0.0..1.0).contains(&next) {
            break;
        }
        r_prev = r1;
        f_prev = f_cur;
        r1 = next;
        iterations += 1;
    }
    let residual = h(r1)?;
    Ok(RadiusSolution { r1, residual, iterations })
}
