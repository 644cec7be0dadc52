//! Sign certification for expressions `P(x) + Q(x) * sqrt(D(x))`.

use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::certify::{certify_sign, holds_sign, Certificate, PointSign, SignClaim, Verdict, Witness};
use super::interval::RationalInterval;
use super::poly::RationalPoly;
use super::sturm::count_real_roots;
use super::PolyCertError;

/// `p + q * sqrt(d)` with rational-coefficient parts. The radicand must be
/// certified nonnegative on any interval the expression is evaluated on.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SqrtExpr {
    pub p: RationalPoly,
    pub q: RationalPoly,
    pub d: RationalPoly,
}

impl SqrtExpr {
    pub fn new(p: RationalPoly, q: RationalPoly, d: RationalPoly) -> Self {
        Self { p, q, d }
    }

    /// `p^2 - q^2 d`: positive exactly where `|p| > |q| sqrt(d)`.
    fn square_gap(&self) -> RationalPoly {
        &(&self.p * &self.p) - &(&(&self.q * &self.q) * &self.d)
    }
}

/// Exact sign of `p(x) + q(x) sqrt(d(x))` at a rational point. Errors when
/// the radicand is negative there.
pub fn sqrt_expr_sign_at(e: &SqrtExpr, x: &BigRational) -> Result<PointSign, PolyCertError> {
    let pv = e.p.eval(x);
    let qv = e.q.eval(x);
    let dv = e.d.eval(x);
    if dv < BigRational::zero() {
        return Err(PolyCertError::RadicandUnverified);
    }
    let sp = PointSign::of(&pv);
    if qv.is_zero() || dv.is_zero() {
        return Ok(sp);
    }
    let sq = PointSign::of(&qv);
    Ok(match (sp, sq) {
        (PointSign::Zero, s) => s,
        (PointSign::Positive, PointSign::Positive) => PointSign::Positive,
        (PointSign::Negative, PointSign::Negative) => PointSign::Negative,
        _ => {
            // Opposite signs: compare p^2 with q^2 d, oriented by sign(p).
            let gap = &pv * &pv - &qv * &qv * dv;
            match PointSign::of(&gap) {
                PointSign::Zero => PointSign::Zero,
                PointSign::Positive => sp,
                PointSign::Negative => sq,
            }
        }
    })
}

/// Certifies the sign of `p + q sqrt(d)` on the interval.
///
/// The radicand is certified nonnegative first. Negative-side claims are
/// mirrored through `(-p) + (-q) sqrt(d)`. A piece of the interval decides
/// immediately when `p` and `q` hold weak signs there; pieces on which the
/// parts disagree compare `p^2` against `q^2 d`, and undecidable pieces are
/// bisected (the roots of `p` and `q` are irrational in general, so midpoint
/// splitting stands in for splitting at the roots themselves).
pub fn certify_sqrt_sign(
    claim_id: &str,
    e: &SqrtExpr,
    iv: &RationalInterval,
    expected: SignClaim,
) -> Result<Certificate, PolyCertError> {
    if iv.is_point() {
        return Err(PolyCertError::DegenerateInterval);
    }
    if !e.d.is_zero() && !holds_sign(&e.d, iv, SignClaim::NonNegative)? {
        return Err(PolyCertError::RadicandUnverified);
    }
    // With q = 0 the expression is the polynomial p.
    if e.q.is_zero() {
        return certify_sign(claim_id, &e.p, iv, expected);
    }

    // Mirror negative claims so the piece analysis only reasons about >= / >.
    let (expr, want) = match expected {
        SignClaim::Negative | SignClaim::NonPositive => {
            (SqrtExpr::new(-&e.p, -&e.q, e.d.clone()), expected.flip())
        }
        _ => (e.clone(), expected),
    };

    // Cheap exact refutation scan before any subdivision.
    let mut scan = iv.interior_grid(64);
    if !iv.lo_open() {
        scan.insert(0, iv.lo().clone());
    }
    if !iv.hi_open() {
        scan.push(iv.hi().clone());
    }
    for x in &scan {
        let s = sqrt_expr_sign_at(&expr, x)?;
        if !want.admits(s) {
            return Ok(Certificate {
                claim_id: claim_id.to_string(),
                interval: iv.clone(),
                expected,
                root_count: 0,
                witness: Witness { point: x.to_string(), sign: mirror_sign(expected, s) },
                verdict: Verdict::Refuted,
            });
        }
    }

    let certified = interval_holds(&expr, iv, want.is_strict())?;
    let verdict = if certified { Verdict::Certified } else { Verdict::Inconclusive };
    let wx = iv.midpoint();
    let ws = sqrt_expr_sign_at(&expr, &wx)?;
    Ok(Certificate {
        claim_id: claim_id.to_string(),
        interval: iv.clone(),
        expected,
        root_count: 0,
        witness: Witness { point: wx.to_string(), sign: mirror_sign(expected, ws) },
        verdict,
    })
}

/// Signs reported in certificates refer to the original expression, not the
/// mirrored one used internally.
fn mirror_sign(expected: SignClaim, s: PointSign) -> PointSign {
    match expected {
        SignClaim::Negative | SignClaim::NonPositive => match s {
            PointSign::Positive => PointSign::Negative,
            PointSign::Negative => PointSign::Positive,
            PointSign::Zero => PointSign::Zero,
        },
        _ => s,
    }
}

const MAX_DEPTH: u32 = 48;
const PIECE_BUDGET: usize = 20_000;

/// Zero polynomials hold both weak signs; otherwise defer to root counting.
fn weak_holds(
    p: &RationalPoly,
    piece: &RationalInterval,
    claim: SignClaim,
) -> Result<bool, PolyCertError> {
    if p.is_zero() {
        return Ok(true);
    }
    holds_sign(p, piece, claim)
}

/// Does `p + q sqrt(d) >= 0` (or `> 0` when `strict`) hold on the interval?
/// Work-stack bisection with a global piece budget; endpoint openness of the
/// original interval is inherited by the boundary pieces.
fn interval_holds(e: &SqrtExpr, iv: &RationalInterval, strict: bool) -> Result<bool, PolyCertError> {
    let mut stack = vec![(
        iv.lo().clone(),
        iv.hi().clone(),
        iv.lo_open(),
        iv.hi_open(),
        0u32,
    )];
    let mut budget = PIECE_BUDGET;
    while let Some((lo, hi, lo_open, hi_open, depth)) = stack.pop() {
        if budget == 0 {
            return Ok(false);
        }
        budget -= 1;
        let piece = RationalInterval::new(lo.clone(), hi.clone(), lo_open, hi_open)?;
        if piece_decided(e, &piece, strict)? {
            continue;
        }
        if depth >= MAX_DEPTH {
            return Ok(false);
        }
        let mid = (&lo + &hi) / BigRational::from_integer(2.into());
        stack.push((lo, mid.clone(), lo_open, false, depth + 1));
        stack.push((mid, hi, false, hi_open, depth + 1));
    }
    Ok(true)
}

/// One piece of the case analysis; `false` means "split further".
fn piece_decided(
    e: &SqrtExpr,
    piece: &RationalInterval,
    strict: bool,
) -> Result<bool, PolyCertError> {
    let p_ge = weak_holds(&e.p, piece, SignClaim::NonNegative)?;
    let q_ge = weak_holds(&e.q, piece, SignClaim::NonNegative)?;
    let q_le = weak_holds(&e.q, piece, SignClaim::NonPositive)?;

    if p_ge && q_ge {
        if !strict {
            return Ok(true);
        }
        // s vanishes exactly at common zeros of p and q*d.
        let qd = &e.q * &e.d;
        let common = e.p.square_free_part().gcd(&qd.square_free_part());
        if common.is_zero() {
            // p and q*d both identically zero: s == 0, never strict.
            return Ok(false);
        }
        let zeros = if common.degree() == Some(0) {
            0
        } else {
            count_real_roots(&common, piece)?
        };
        return Ok(zeros == 0);
    }
    let gap_claim = if strict { SignClaim::Positive } else { SignClaim::NonNegative };
    if p_ge && q_le {
        // s >= 0 iff p dominates |q| sqrt(d): compare squares.
        return weak_holds(&e.square_gap(), piece, gap_claim);
    }
    if q_ge {
        // Covers p <= 0 exactly, and mixed-sign p as a sufficient condition:
        // q^2 d >= p^2 forces q sqrt(d) >= |p|.
        return weak_holds(&-&e.square_gap(), piece, gap_claim);
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::super::{big, ratio};
    use super::*;

    #[test]
    fn pure_sqrt_is_positive_on_open_interval() {
        // 0 + 1 * sqrt(x) on (0,1)
        let e = SqrtExpr::new(
            RationalPoly::zero(),
            RationalPoly::from_integers(&[1]),
            RationalPoly::from_integers(&[0, 1]),
        );
        let iv = RationalInterval::open(big(0), big(1)).unwrap();
        let c = certify_sqrt_sign("t", &e, &iv, SignClaim::Positive).unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
    }

    #[test]
    fn q_zero_delegates_to_polynomial_certification() {
        let p = RationalPoly::from_integers(&[2, -3, 1]);
        let e = SqrtExpr::new(p.clone(), RationalPoly::zero(), RationalPoly::from_integers(&[1]));
        let iv = RationalInterval::open(big(0), big(1)).unwrap();
        for claim in [SignClaim::Positive, SignClaim::Negative, SignClaim::NonNegative] {
            let a = certify_sqrt_sign("t", &e, &iv, claim).unwrap().verdict;
            let b = certify_sign("t", &p, &iv, claim).unwrap().verdict;
            assert_eq!(a, b);
        }
    }

    #[test]
    fn radicand_negative_somewhere_is_an_error() {
        let e = SqrtExpr::new(
            RationalPoly::from_integers(&[1]),
            RationalPoly::from_integers(&[1]),
            RationalPoly::from_integers(&[-1, 2]), // 2x - 1 < 0 near 0
        );
        let iv = RationalInterval::open(big(0), big(1)).unwrap();
        assert!(matches!(
            certify_sqrt_sign("t", &e, &iv, SignClaim::Positive),
            Err(PolyCertError::RadicandUnverified)
        ));
    }

    #[test]
    fn dominated_negative_branch_certifies() {
        // (78x^2 - 27x + 5) - sqrt(3(2496x^4 - 2172x^3 + 899x^2 - 186x + 19))
        // is positive on (1/3, 7214/10000].
        let e = SqrtExpr::new(
            RationalPoly::from_integers(&[5, -27, 78]),
            RationalPoly::from_integers(&[-1]),
            RationalPoly::from_integers(&[57, -558, 2697, -6516, 7488]),
        );
        let iv = RationalInterval::open_closed(ratio(1, 3), ratio(7214, 10000)).unwrap();
        let c = certify_sqrt_sign("t", &e, &iv, SignClaim::Positive).unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
    }

    #[test]
    fn sign_flip_refutes_with_witness() {
        // 1 - 2 sqrt(x) changes sign at x = 1/4.
        let e = SqrtExpr::new(
            RationalPoly::from_integers(&[1]),
            RationalPoly::from_integers(&[-2]),
            RationalPoly::from_integers(&[0, 1]),
        );
        let iv = RationalInterval::open(big(0), big(1)).unwrap();
        let c = certify_sqrt_sign("t", &e, &iv, SignClaim::Positive).unwrap();
        assert_eq!(c.verdict, Verdict::Refuted);
        assert_eq!(c.witness.sign, PointSign::Negative);
    }

    #[test]
    fn mixed_sign_p_dominated_by_radical() {
        // (2x - 1) + 2 sqrt(1): p changes sign at 1/2 but q sqrt(d) dominates.
        let e = SqrtExpr::new(
            RationalPoly::from_integers(&[-1, 2]),
            RationalPoly::from_integers(&[2]),
            RationalPoly::from_integers(&[1]),
        );
        let iv = RationalInterval::closed(big(0), big(1)).unwrap();
        let c = certify_sqrt_sign("t", &e, &iv, SignClaim::Positive).unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
    }

    #[test]
    fn exact_point_signs() {
        // 3 - 2 sqrt(x) at x = 9/4 is exactly zero.
        let e = SqrtExpr::new(
            RationalPoly::from_integers(&[3]),
            RationalPoly::from_integers(&[-2]),
            RationalPoly::from_integers(&[0, 1]),
        );
        assert_eq!(sqrt_expr_sign_at(&e, &ratio(9, 4)).unwrap(), PointSign::Zero);
        assert_eq!(sqrt_expr_sign_at(&e, &big(1)).unwrap(), PointSign::Positive);
        assert_eq!(sqrt_expr_sign_at(&e, &big(4)).unwrap(), PointSign::Negative);
    }
}
