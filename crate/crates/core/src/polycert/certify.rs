//! Sign certificates for univariate polynomials on rational intervals.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::interval::RationalInterval;
use super::poly::RationalPoly;
use super::sturm::count_real_roots;
use super::PolyCertError;

/// The sign a claim asserts on an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SignClaim {
    Positive,
    Negative,
    NonNegative,
    NonPositive,
}

impl SignClaim {
    pub fn flip(self) -> Self {
        match self {
            Self::Positive => Self::Negative,
            Self::Negative => Self::Positive,
            Self::NonNegative => Self::NonPositive,
            Self::NonPositive => Self::NonNegative,
        }
    }

    pub fn is_strict(self) -> bool {
        matches!(self, Self::Positive | Self::Negative)
    }

    pub fn admits(self, s: PointSign) -> bool {
        match self {
            Self::Positive => s == PointSign::Positive,
            Self::Negative => s == PointSign::Negative,
            Self::NonNegative => s != PointSign::Negative,
            Self::NonPositive => s != PointSign::Positive,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Positive => "positive",
            Self::Negative => "negative",
            Self::NonNegative => "non_negative",
            Self::NonPositive => "non_positive",
        }
    }
}

/// The exact sign of a value at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointSign {
    Negative,
    Zero,
    Positive,
}

impl PointSign {
    pub fn of(v: &BigRational) -> Self {
        if v.is_zero() {
            Self::Zero
        } else if *v > BigRational::zero() {
            Self::Positive
        } else {
            Self::Negative
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Certified,
    Refuted,
    Inconclusive,
}

/// Outcome record for one sign claim.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub claim_id: String,
    pub interval: RationalInterval,
    pub expected: SignClaim,
    /// Distinct roots of the polynomial inside the interval.
    pub root_count: usize,
    pub witness: Witness,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Witness {
    /// Exact rational sample point (serialized as "num/den").
    pub point: String,
    pub sign: PointSign,
}

impl Witness {
    fn at(p: &RationalPoly, x: &BigRational) -> Self {
        Self { point: x.to_string(), sign: PointSign::of(&p.eval(x)) }
    }
}

/// Quick yes/no version of [`certify_sign`], used by the sqrt-expression
/// case analysis where no certificate object is needed.
pub fn holds_sign(
    p: &RationalPoly,
    iv: &RationalInterval,
    expected: SignClaim,
) -> Result<bool, PolyCertError> {
    Ok(decide(p, iv, expected)?.is_none())
}

/// Sign certification by exact root counting.
///
/// Strict claims are certified by a zero root count (endpoint flags
/// included) plus one matching interior sample. Weak claims tolerate
/// endpoint roots and even-multiplicity interior touch points: the
/// odd-multiplicity part must have no interior root, and one interior
/// non-root sample must match.
pub fn certify_sign(
    claim_id: &str,
    p: &RationalPoly,
    iv: &RationalInterval,
    expected: SignClaim,
) -> Result<Certificate, PolyCertError> {
    if iv.is_point() {
        return Err(PolyCertError::DegenerateInterval);
    }
    let root_count = count_real_roots(p, iv)?;
    let failure = decide(p, iv, expected)?;
    let cert = |witness: Witness, verdict: Verdict| Certificate {
        claim_id: claim_id.to_string(),
        interval: iv.clone(),
        expected,
        root_count,
        witness,
        verdict,
    };
    match failure {
        None => {
            let x = sample_point(p, iv);
            Ok(cert(Witness::at(p, &x), Verdict::Certified))
        }
        Some(w) => Ok(cert(w, Verdict::Refuted)),
    }
}

/// `None` when the claim holds; otherwise a best-effort witness of failure.
fn decide(
    p: &RationalPoly,
    iv: &RationalInterval,
    expected: SignClaim,
) -> Result<Option<Witness>, PolyCertError> {
    if p.is_zero() {
        return Err(PolyCertError::DegenerateInput);
    }
    if expected.is_strict() {
        let roots = count_real_roots(p, iv)?;
        if roots > 0 {
            return Ok(Some(failure_witness(p, iv, expected)));
        }
        let x = sample_point(p, iv);
        let s = PointSign::of(&p.eval(&x));
        if expected.admits(s) {
            Ok(None)
        } else {
            Ok(Some(Witness { point: x.to_string(), sign: s }))
        }
    } else {
        // Interior sign changes happen exactly at roots of odd multiplicity.
        let odd = p.odd_multiplicity_part();
        let interior = RationalInterval::open(iv.lo().clone(), iv.hi().clone())?;
        let sign_changes = if odd.degree().is_none() || odd.degree() == Some(0) {
            0
        } else {
            count_real_roots(&odd, &interior)?
        };
        if sign_changes > 0 {
            return Ok(Some(failure_witness(p, iv, expected)));
        }
        let x = sample_point(p, iv);
        let s = PointSign::of(&p.eval(&x));
        if expected.admits(s) {
            Ok(None)
        } else {
            Ok(Some(Witness { point: x.to_string(), sign: s }))
        }
    }
}

/// An interior point avoiding roots of `p` whenever possible. A polynomial of
/// degree d has at most d roots, so one of d+2 distinct interior points is a
/// non-root.
fn sample_point(p: &RationalPoly, iv: &RationalInterval) -> BigRational {
    let mid = iv.midpoint();
    if !p.eval(&mid).is_zero() {
        return mid;
    }
    let d = p.degree().unwrap_or(0);
    for x in iv.interior_grid(d + 1) {
        if !p.eval(&x).is_zero() {
            return x;
        }
    }
    mid
}

/// Best-effort witness for a refuted claim: prefer an exact interior point of
/// violating sign; for strict claims a rational root read off a linear factor
/// is itself a witness; fall back to the mid sample.
fn failure_witness(p: &RationalPoly, iv: &RationalInterval, expected: SignClaim) -> Witness {
    let d = p.degree().unwrap_or(0);
    let grid = iv.interior_grid((d + 2).max(32));
    for x in &grid {
        let s = PointSign::of(&p.eval(x));
        if !expected.admits(s) {
            return Witness { point: x.to_string(), sign: s };
        }
    }
    if expected.is_strict() && !expected.admits(PointSign::Zero) {
        for (factor, _) in p.square_free_decomposition() {
            if factor.degree() == Some(1) {
                let root = -&factor.coeffs()[0] / &factor.coeffs()[1];
                if iv.contains(&root) {
                    return Witness { point: root.to_string(), sign: PointSign::Zero };
                }
            }
        }
    }
    // No violating rational sample (e.g. an irrational touch root under a
    // strict claim); report the mid sample together with the root count.
    let x = iv.midpoint();
    Witness::at(p, &x)
}

#[cfg(test)]
mod tests {
    use super::super::{big, ratio};
    use super::*;

    fn unit_open() -> RationalInterval {
        RationalInterval::open(big(0), big(1)).unwrap()
    }

    #[test]
    fn positive_quadratic_on_unit_interval() {
        let p = RationalPoly::from_integers(&[2, -3, 1]);
        let c = certify_sign("t", &p, &unit_open(), SignClaim::Positive).unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
        assert_eq!(c.root_count, 0);
        assert_eq!(c.witness.sign, PointSign::Positive);
    }

    #[test]
    fn quartic_negative_on_superset_interval() {
        let p = RationalPoly::from_integers(&[8, -72, 297, -576, 351]);
        let iv = RationalInterval::open_closed(ratio(1, 3), ratio(7214, 10000)).unwrap();
        let c = certify_sign("t", &p, &iv, SignClaim::Negative).unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
    }

    #[test]
    fn strictly_positive_quadratic_certifies() {
        let p = RationalPoly::from_integers(&[1, -7, 26]);
        let iv = RationalInterval::open_closed(big(0), ratio(1, 3)).unwrap();
        let c = certify_sign("t", &p, &iv, SignClaim::Positive).unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
    }

    #[test]
    fn even_touch_point_passes_weak_but_fails_strict() {
        let p = RationalPoly::from_integers(&[1, -6, 9]); // (3x-1)^2
        let weak = certify_sign("t", &p, &unit_open(), SignClaim::NonNegative).unwrap();
        assert_eq!(weak.verdict, Verdict::Certified);
        assert_eq!(weak.root_count, 1);
        let strict = certify_sign("t", &p, &unit_open(), SignClaim::Positive).unwrap();
        assert_eq!(strict.verdict, Verdict::Refuted);
        // The rational double root itself is the witness.
        assert_eq!(strict.witness.point, "1/3");
        assert_eq!(strict.witness.sign, PointSign::Zero);
    }

    #[test]
    fn sign_change_is_refuted_with_witness() {
        let p = RationalPoly::from_integers(&[-1, 2]); // 2x - 1
        let c = certify_sign("t", &p, &unit_open(), SignClaim::NonNegative).unwrap();
        assert_eq!(c.verdict, Verdict::Refuted);
        assert_eq!(c.witness.sign, PointSign::Negative);
    }

    #[test]
    fn wrong_constant_sign_is_refuted() {
        let p = RationalPoly::from_integers(&[-5]);
        let c = certify_sign("t", &p, &unit_open(), SignClaim::Positive).unwrap();
        assert_eq!(c.verdict, Verdict::Refuted);
        assert_eq!(c.witness.sign, PointSign::Negative);
    }

    #[test]
    fn endpoint_root_tolerated_only_by_weak_claims() {
        let p = RationalPoly::from_integers(&[0, 1]); // x, root at closed endpoint 0
        let iv = RationalInterval::closed(big(0), big(1)).unwrap();
        assert_eq!(
            certify_sign("t", &p, &iv, SignClaim::NonNegative).unwrap().verdict,
            Verdict::Certified
        );
        assert_eq!(
            certify_sign("t", &p, &iv, SignClaim::Positive).unwrap().verdict,
            Verdict::Refuted
        );
    }

    #[test]
    fn degenerate_interval_is_an_error() {
        let p = RationalPoly::from_integers(&[1, 1]);
        let iv = RationalInterval::closed(big(1), big(1)).unwrap();
        assert!(matches!(
            certify_sign("t", &p, &iv, SignClaim::Positive),
            Err(PolyCertError::DegenerateInterval)
        ));
    }

    #[test]
    fn flip_symmetry_on_examples() {
        let polys = [
            RationalPoly::from_integers(&[2, -3, 1]),
            RationalPoly::from_integers(&[-1, 2]),
            RationalPoly::from_integers(&[1, -6, 9]),
        ];
        let claims = [
            SignClaim::Positive,
            SignClaim::Negative,
            SignClaim::NonNegative,
            SignClaim::NonPositive,
        ];
        for p in &polys {
            for &s in &claims {
                let a = certify_sign("t", p, &unit_open(), s).unwrap().verdict;
                let b = certify_sign("t", &-p, &unit_open(), s.flip()).unwrap().verdict;
                assert_eq!(a, b);
            }
        }
    }
}
