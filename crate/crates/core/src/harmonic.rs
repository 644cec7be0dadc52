//! The two-parameter harmonic family: finite polynomial maps `f = h + conj(g)`
//! with `h(0) = g(0) = 0`, `h'(0) = 1`, `g'(0) = 0`, tested against the
//! defining boundary inequality and its sharp consequences.
//!
//! Membership is semidecidable by sampling: the defining quantity
//! `|(1-a)h' + a z h'' - (1-a)| + |(1-a)g' + a z g''|` is a sum of moduli of
//! analytic functions, so its supremum over the closed disk is attained on
//! the boundary; sampling the boundary either refutes membership with an
//! exact witness or reports membership up to sampling resolution.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarmonicError {
    #[error("alpha must lie in (0, 1] and m must be positive, got alpha={alpha}, m={m}")]
    InvalidParams { alpha: f64, m: f64 },
    #[error("coefficient index must be >= 2, got {0}")]
    IndexTooSmall(usize),
    #[error("need at least {min} boundary samples, got {got}")]
    TooFewSamples { min: usize, got: usize },
    #[error("epsilon must have unit modulus, |eps| = {0}")]
    NotUnitModulus(f64),
    #[error("radius must lie in [0, 1), got {0}")]
    RadiusOutOfRange(f64),
}

pub const MIN_BOUNDARY_SAMPLES: usize = 256;
const UNIT_MODULUS_TOL: f64 = 1e-12;
const MEMBERSHIP_REL_TOL: f64 = 1e-12;
const BOUND_ABS_TOL: f64 = 1e-12;
const JACOBIAN_ABS_TOL: f64 = 1e-10;

/// `(alpha, m)` with `alpha` in (0,1] and `m > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClassParams {
    alpha: f64,
    m: f64,
}

impl ClassParams {
    pub fn new(alpha: f64, m: f64) -> Result<Self, HarmonicError> {
        if alpha.is_finite() && alpha > 0.0 && alpha <= 1.0 && m.is_finite() && m > 0.0 {
            Ok(Self { alpha, m })
        } else {
            Err(HarmonicError::InvalidParams { alpha, m })
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    /// The coefficient weight `n + (n^2 - 2n) alpha`.
    pub fn weight(&self, n: usize) -> f64 {
        let nf = n as f64;
        nf + (nf * nf - 2.0 * nf) * self.alpha
    }
}

/// Finite coefficient lists for `h = z + sum a_n z^n` and
/// `g = sum b_n z^n`, both starting at `n = 2` (index 0 of each vector).
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct HarmonicPolynomialMap {
    #[serde(with = "complex_pairs")]
    pub a: Vec<Complex64>,
    #[serde(with = "complex_pairs")]
    pub b: Vec<Complex64>,
}

mod complex_pairs {
    use super::Complex64;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<[f64; 2]> = v.iter().map(|c| [c.re, c.im]).collect();
        serde::Serialize::serialize(&pairs, s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Complex64>, D::Error> {
        let pairs = Vec::<[f64; 2]>::deserialize(d)?;
        Ok(pairs.into_iter().map(|[re, im]| Complex64::new(re, im)).collect())
    }
}

impl HarmonicPolynomialMap {
    pub fn analytic(a: Vec<Complex64>) -> Self {
        Self { a, b: Vec::new() }
    }

    /// Coefficient `a_n` (n >= 2); zero beyond the stored range.
    pub fn a_coeff(&self, n: usize) -> Complex64 {
        self.a.get(n - 2).copied().unwrap_or_default()
    }

    pub fn b_coeff(&self, n: usize) -> Complex64 {
        self.b.get(n - 2).copied().unwrap_or_default()
    }

    pub fn max_index(&self) -> usize {
        self.a.len().max(self.b.len()) + 1
    }

    /// `f(z) = h(z) + conj(g(z))`.
    pub fn eval(&self, z: Complex64) -> Complex64 {
        let h = horner_from_high(&self.a, z) * z * z + z;
        let g = horner_from_high(&self.b, z) * z * z;
        h + g.conj()
    }

    pub fn h_derivative(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::default();
        for (i, c) in self.a.iter().enumerate().rev() {
            let n = (i + 2) as f64;
            acc = acc * z + c * n;
        }
        acc * z + 1.0
    }

    pub fn g_derivative(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::default();
        for (i, c) in self.b.iter().enumerate().rev() {
            let n = (i + 2) as f64;
            acc = acc * z + c * n;
        }
        acc * z
    }
}

fn horner_from_high(coeffs: &[Complex64], z: Complex64) -> Complex64 {
    let mut acc = Complex64::default();
    for c in coeffs.iter().rev() {
        acc = acc * z + c;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum MembershipStatus {
    MemberUpToSampling,
    Refuted,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MembershipVerdict {
    pub status: MembershipStatus,
    /// Largest sampled value of the defining quantity.
    pub max_value: f64,
    pub witness_theta: Option<f64>,
    pub witness_z: Option<[f64; 2]>,
}

/// The pair `((1-a)h'(z) + a z h''(z) - (1-a), (1-a)g'(z) + a z g''(z))`.
///
/// Termwise both collapse to weighted Horner sums: the `n`-th coefficient
/// enters with weight `n + (n^2 - 2n) alpha`.
pub fn d_operator(
    f: &HarmonicPolynomialMap,
    params: &ClassParams,
    z: Complex64,
) -> (Complex64, Complex64) {
    let weighted = |coeffs: &[Complex64]| {
        let mut acc = Complex64::default();
        for (i, c) in coeffs.iter().enumerate().rev() {
            let w = params.weight(i + 2);
            acc = acc * z + c * w;
        }
        acc * z
    };
    (weighted(&f.a), weighted(&f.b))
}

/// Samples the defining quantity on equally spaced boundary points.
pub fn check_membership(
    f: &HarmonicPolynomialMap,
    params: &ClassParams,
    samples: usize,
) -> Result<MembershipVerdict, HarmonicError> {
    if samples < MIN_BOUNDARY_SAMPLES {
        return Err(HarmonicError::TooFewSamples { min: MIN_BOUNDARY_SAMPLES, got: samples });
    }
    let mut max_value = 0.0_f64;
    let mut arg_theta = 0.0_f64;
    for k in 0..samples {
        let theta = 2.0 * std::f64::consts::PI * (k as f64) / (samples as f64);
        let z = Complex64::from_polar(1.0, theta);
        let (dh, dg) = d_operator(f, params, z);
        let s = dh.norm() + dg.norm();
        if s > max_value {
            max_value = s;
            arg_theta = theta;
        }
    }
    if max_value > params.m() * (1.0 + MEMBERSHIP_REL_TOL) {
        let z = Complex64::from_polar(1.0, arg_theta);
        Ok(MembershipVerdict {
            status: MembershipStatus::Refuted,
            max_value,
            witness_theta: Some(arg_theta),
            witness_z: Some([z.re, z.im]),
        })
    } else {
        Ok(MembershipVerdict {
            status: MembershipStatus::MemberUpToSampling,
            max_value,
            witness_theta: None,
            witness_z: None,
        })
    }
}

/// Sharp modulus bound `m / (n + (n^2 - 2n) alpha)` for the n-th coefficient.
pub fn coefficient_bound(n: usize, params: &ClassParams) -> Result<f64, HarmonicError> {
    if n < 2 {
        return Err(HarmonicError::IndexTooSmall(n));
    }
    Ok(params.m() / params.weight(n))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub n: usize,
    pub abs_a: f64,
    pub abs_b: f64,
    pub bound: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CoefficientReport {
    pub rows: Vec<CoefficientRow>,
    pub pass: bool,
}

pub fn check_coefficient_bounds(
    f: &HarmonicPolynomialMap,
    params: &ClassParams,
) -> CoefficientReport {
    let mut rows = Vec::new();
    let mut pass = true;
    for n in 2..=f.max_index() {
        let bound = params.m() / params.weight(n);
        let abs_a = f.a_coeff(n).norm();
        let abs_b = f.b_coeff(n).norm();
        let ok = abs_a <= bound + BOUND_ABS_TOL && abs_b <= bound + BOUND_ABS_TOL;
        pass &= ok;
        rows.push(CoefficientRow { n, abs_a, abs_b, bound, pass: ok });
    }
    CoefficientReport { rows, pass }
}

/// `sum (n + (n^2-2n) alpha)(|a_n| + |b_n|) - m`. Nonpositive margin is a
/// sufficient condition for membership.
pub fn sufficient_margin(f: &HarmonicPolynomialMap, params: &ClassParams) -> f64 {
    let mut sum = 0.0;
    for n in 2..=f.max_index() {
        sum += params.weight(n) * (f.a_coeff(n).norm() + f.b_coeff(n).norm());
    }
    sum - params.m()
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct StarlikeVerdict {
    /// `sum n(|a_n| + |b_n|) - 1`; nonpositive implies starlikeness.
    pub margin: f64,
    pub starlike: bool,
}

pub fn starlike_sufficient(f: &HarmonicPolynomialMap) -> StarlikeVerdict {
    let mut sum = 0.0;
    for n in 2..=f.max_index() {
        sum += (n as f64) * (f.a_coeff(n).norm() + f.b_coeff(n).norm());
    }
    let margin = sum - 1.0;
    StarlikeVerdict { margin, starlike: margin <= 0.0 }
}

/// Sharp growth bounds `(r - m r^2 / 2, r + m r^2 / 2)`. A negative lower
/// value is returned raw; callers treat it as vacuous.
pub fn growth_envelope(m: f64, r: f64) -> Result<(f64, f64), HarmonicError> {
    if !(0.0..1.0).contains(&r) {
        return Err(HarmonicError::RadiusOutOfRange(r));
    }
    Ok((r - m * r * r / 2.0, r + m * r * r / 2.0))
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct JacobianReport {
    /// Largest sampled `J_f(z) / (1 + m |z|)^2`.
    pub max_ratio: f64,
    pub witness_z: [f64; 2],
    pub pass: bool,
}

/// Samples `J_f = |h'|^2 - |g'|^2` on circles of radius 0.25, 0.5, 0.75,
/// 0.95 against the bound `(1 + m |z|)^2`.
pub fn jacobian_check(
    f: &HarmonicPolynomialMap,
    params: &ClassParams,
    samples: usize,
) -> Result<JacobianReport, HarmonicError> {
    if samples < MIN_BOUNDARY_SAMPLES {
        return Err(HarmonicError::TooFewSamples { min: MIN_BOUNDARY_SAMPLES, got: samples });
    }
    let mut max_ratio = f64::NEG_INFINITY;
    let mut witness = Complex64::default();
    let mut pass = true;
    for &r in &[0.25, 0.5, 0.75, 0.95] {
        let bound = (1.0 + params.m() * r).powi(2);
        for k in 0..samples {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (samples as f64);
            let z = Complex64::from_polar(r, theta);
            let j = f.h_derivative(z).norm_sqr() - f.g_derivative(z).norm_sqr();
            pass &= j <= bound + JACOBIAN_ABS_TOL;
            let ratio = j / bound;
            if ratio > max_ratio {
                max_ratio = ratio;
                witness = z;
            }
        }
    }
    Ok(JacobianReport { max_ratio, witness_z: [witness.re, witness.im], pass })
}

/// Analytic slice `h + eps * g` as a coefficient list starting at `n = 2`.
pub fn epsilon_slice(
    f: &HarmonicPolynomialMap,
    eps: Complex64,
) -> Result<Vec<Complex64>, HarmonicError> {
    if (eps.norm() - 1.0).abs() > UNIT_MODULUS_TOL {
        return Err(HarmonicError::NotUnitModulus(eps.norm()));
    }
    let len = f.a.len().max(f.b.len());
    Ok((0..len)
        .map(|i| {
            f.a.get(i).copied().unwrap_or_default() + eps * f.b.get(i).copied().unwrap_or_default()
        })
        .collect())
}

/// The sharp coefficient extremal: `z + m z^n / w_n` (or its conjugated
/// variant with the coefficient on the co-analytic side).
pub fn extremal_map(
    n: usize,
    params: &ClassParams,
    conjugated: bool,
) -> Result<HarmonicPolynomialMap, HarmonicError> {
    if n < 2 {
        return Err(HarmonicError::IndexTooSmall(n));
    }
    let c = Complex64::new(params.m() / params.weight(n), 0.0);
    let mut coeffs = vec![Complex64::default(); n - 1];
    coeffs[n - 2] = c;
    Ok(if conjugated {
        HarmonicPolynomialMap { a: Vec::new(), b: coeffs }
    } else {
        HarmonicPolynomialMap { a: coeffs, b: Vec::new() }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(alpha: f64, m: f64) -> ClassParams {
        ClassParams::new(alpha, m).unwrap()
    }

    fn quad_map(m: f64) -> HarmonicPolynomialMap {
        HarmonicPolynomialMap::analytic(vec![Complex64::new(m / 2.0, 0.0)])
    }

    #[test]
    fn d_operator_vanishes_at_origin() {
        let f = quad_map(1.0);
        let (dh, dg) = d_operator(&f, &params(0.7, 1.0), Complex64::default());
        assert_eq!(dh, Complex64::default());
        assert_eq!(dg, Complex64::default());
    }

    #[test]
    fn d_operator_of_quadratic_is_m_z() {
        // h = z + (m/2) z^2 has weighted derivative m z for every alpha.
        let m = 0.8;
        let f = quad_map(m);
        for alpha in [0.25, 0.5, 1.0] {
            let z = Complex64::new(0.3, -0.4);
            let (dh, _) = d_operator(&f, &params(alpha, m), z);
            assert!((dh - z * m).norm() < 1e-14);
        }
    }

    #[test]
    fn extremal_weighted_derivative_has_constant_boundary_modulus() {
        let p = params(0.5, 1.0);
        let f = extremal_map(3, &p, false).unwrap();
        for k in 0..32 {
            let theta = 0.2 * f64::from(k);
            let z = Complex64::from_polar(1.0, theta);
            let (dh, dg) = d_operator(&f, &p, z);
            assert!((dh.norm() - p.m()).abs() < 1e-12);
            assert_eq!(dg, Complex64::default());
        }
    }

    #[test]
    fn membership_of_extremal_and_identity() {
        let p = params(0.5, 1.0);
        let f = extremal_map(3, &p, false).unwrap();
        let v = check_membership(&f, &p, 512).unwrap();
        assert_eq!(v.status, MembershipStatus::MemberUpToSampling);
        assert!((v.max_value - 1.0).abs() < 1e-9);

        let id = HarmonicPolynomialMap::default();
        let v = check_membership(&id, &p, 512).unwrap();
        assert_eq!(v.status, MembershipStatus::MemberUpToSampling);
        assert_eq!(v.max_value, 0.0);
    }

    #[test]
    fn inflated_coefficient_is_refuted() {
        let p = params(1.0, 1.0);
        let f = HarmonicPolynomialMap::analytic(vec![Complex64::new(1.01 * 0.5, 0.0)]);
        let v = check_membership(&f, &p, 512).unwrap();
        assert_eq!(v.status, MembershipStatus::Refuted);
        assert!(v.witness_theta.is_some());
        assert!(v.max_value > 1.0);
    }

    #[test]
    fn samples_floor_enforced() {
        let p = params(1.0, 1.0);
        assert!(check_membership(&HarmonicPolynomialMap::default(), &p, 100).is_err());
    }

    #[test]
    fn coefficient_bound_values() {
        assert_eq!(coefficient_bound(2, &params(0.3, 1.0)).unwrap(), 0.5);
        assert!((coefficient_bound(3, &params(1.0, 1.0)).unwrap() - 1.0 / 6.0).abs() < 1e-15);
        assert_eq!(coefficient_bound(4, &params(0.5, 2.0)).unwrap(), 0.25);
        assert!(coefficient_bound(1, &params(0.5, 2.0)).is_err());
    }

    #[test]
    fn bounds_report_pass_and_fail() {
        let p = params(0.5, 1.0);
        let f = extremal_map(5, &p, false).unwrap();
        let rep = check_coefficient_bounds(&f, &p);
        assert!(rep.pass);
        let row = rep.rows.iter().find(|r| r.n == 5).unwrap();
        assert!((row.abs_a - row.bound).abs() < 1e-15);

        let mut bad = HarmonicPolynomialMap::default();
        bad.b = vec![Complex64::default(), Complex64::new(1.0, 0.0)]; // b_3 = m
        let rep = check_coefficient_bounds(&bad, &p);
        assert!(!rep.pass);
        assert!(!rep.rows.iter().find(|r| r.n == 3).unwrap().pass);
    }

    #[test]
    fn margins() {
        let p = params(0.4, 1.0);
        assert!(sufficient_margin(&quad_map(1.0), &p).abs() < 1e-15);
        assert!((sufficient_margin(&HarmonicPolynomialMap::default(), &p) + 1.0).abs() < 1e-15);
        // a_2 = b_2 = m/4: weight 2 * (m/4 + m/4) = m.
        let f = HarmonicPolynomialMap {
            a: vec![Complex64::new(0.25, 0.0)],
            b: vec![Complex64::new(0.25, 0.0)],
        };
        assert!(sufficient_margin(&f, &p).abs() < 1e-15);
    }

    #[test]
    fn starlike_margins() {
        let v = starlike_sufficient(&quad_map(1.0));
        assert!(v.margin.abs() < 1e-15 && v.starlike);
        let v = starlike_sufficient(&HarmonicPolynomialMap::default());
        assert!((v.margin + 1.0).abs() < 1e-15);
        let f = HarmonicPolynomialMap {
            a: vec![Complex64::new(0.3, 0.0)],
            b: vec![Complex64::new(0.2, 0.0)],
        };
        assert!(starlike_sufficient(&f).margin.abs() < 1e-15);
    }

    #[test]
    fn growth_envelope_values() {
        let (lo, hi) = growth_envelope(1.0, 0.5).unwrap();
        assert_eq!((lo, hi), (0.375, 0.625));
        assert!(growth_envelope(1.0, 1.0).is_err());
        // The quadratic extremal attains both ends.
        let f = quad_map(1.0);
        let r = 0.5;
        let up = f.eval(Complex64::new(r, 0.0)).norm();
        let dn = f.eval(Complex64::new(-r, 0.0)).norm();
        assert!((up - hi).abs() < 1e-15);
        assert!((dn - lo).abs() < 1e-15);
    }

    #[test]
    fn jacobian_bound_with_equality_on_real_axis() {
        let p = params(1.0, 1.0);
        let rep = jacobian_check(&quad_map(1.0), &p, 512).unwrap();
        assert!(rep.pass);
        // Equality at z = r real: |1 + m r|^2 = (1 + m r)^2.
        assert!(rep.max_ratio <= 1.0 + 1e-12 && rep.max_ratio > 1.0 - 1e-9);

        let rep = jacobian_check(&HarmonicPolynomialMap::default(), &p, 512).unwrap();
        assert!(rep.pass);
        assert!(rep.max_ratio < 1.0);
    }

    #[test]
    fn epsilon_slice_combines_coefficients() {
        let f = HarmonicPolynomialMap {
            a: vec![Complex64::new(0.25, 0.0)],
            b: vec![Complex64::new(0.25, 0.0)],
        };
        let s = epsilon_slice(&f, Complex64::new(-1.0, 0.0)).unwrap();
        assert!(s[0].norm() < 1e-15);
        let s = epsilon_slice(&f, Complex64::new(1.0, 0.0)).unwrap();
        assert!((s[0] - Complex64::new(0.5, 0.0)).norm() < 1e-15);
        assert!(epsilon_slice(&f, Complex64::new(0.5, 0.0)).is_err());
    }

    #[test]
    fn extremal_map_coefficients() {
        let f = extremal_map(2, &params(0.5, 1.0), false).unwrap();
        assert_eq!(f.a_coeff(2), Complex64::new(0.5, 0.0));
        let f = extremal_map(3, &params(1.0, 1.0), true).unwrap();
        assert!((f.b_coeff(3) - Complex64::new(1.0 / 6.0, 0.0)).norm() < 1e-15);
        assert!(extremal_map(1, &params(1.0, 1.0), false).is_err());
    }

    #[test]
    fn map_json_schema_round_trips() {
        let f = HarmonicPolynomialMap {
            a: vec![Complex64::new(0.1, -0.2)],
            b: vec![Complex64::new(0.0, 0.3)],
        };
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"a":[[0.1,-0.2]],"b":[[0.0,0.3]]}"#);
        let back: HarmonicPolynomialMap = serde_json::from_str(&json).unwrap();
        assert_eq!(back.a[0], f.a[0]);
        assert_eq!(back.b[0], f.b[0]);
    }
}
