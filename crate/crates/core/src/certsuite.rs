//! The fixed ledger of certifiable claims: every polynomial or radical sign
//! assertion the bound analysis rests on, each expressed over an exactly
//! representable rational interval, plus the crossing-point root finder and
//! the bound comparison table.
//!
//! Transcendental interval ends are replaced by rational supersets
//! (`1/log 4 ~ 0.72134752` becomes `7214/10000`), so a certificate on the
//! ledger interval implies the claim on the original one. The algebraic
//! threshold `(6 + sqrt(114))/39` is handled by certifying on both sides of
//! an exact isolating bracket.

use std::time::{Duration, Instant};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hankel::{m_upper, sharp_bound};
use crate::polycert::{
    certify_box_sign, certify_sign, certify_sqrt_sign, isolate_root, BivariatePoly, Box2,
    BoxCertConfig, BoxCertificate, Certificate, PolyCertError, RationalInterval, RationalPoly,
    SignClaim, SqrtExpr, Verdict,
};

#[derive(Debug, Error)]
pub enum CertSuiteError {
    #[error("unknown claim id {id:?}; known ids: {known}")]
    UnknownClaim { id: String, known: String },
    #[error("no sign change over the search interval")]
    NoSignChange,
    #[error("m must lie in (0, 1/log 4], got {0}")]
    MOutOfRange(f64),
    #[error(transparent)]
    Cert(#[from] PolyCertError),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ClaimKind {
    Poly {
        poly: RationalPoly,
        interval: RationalInterval,
        expected: SignClaim,
    },
    SqrtExpr {
        expr: SqrtExpr,
        interval: RationalInterval,
        expected: SignClaim,
    },
    Box {
        poly: BivariatePoly,
        x: RationalInterval,
        y: RationalInterval,
        expected: SignClaim,
    },
    RootFind {
        target: f64,
        tolerance: f64,
    },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Claim {
    pub id: String,
    pub note: String,
    #[serde(flatten)]
    pub kind: ClaimKind,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "detail", rename_all = "snake_case")]
pub enum ClaimOutcome {
    Sign(Certificate),
    BoxSign(BoxCertificate),
    Root(RootBracket),
    Failed { message: String },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClaimReport {
    pub claim_id: String,
    pub verdict: Verdict,
    #[serde(flatten)]
    pub outcome: ClaimOutcome,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct RootBracket {
    pub lo: f64,
    pub hi: f64,
    pub midpoint: f64,
    pub iterations: u32,
}

fn poly(coeffs: &[i64]) -> RationalPoly {
    RationalPoly::from_integers(coeffs)
}

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Rational superset endpoint covering `1/log 4`.
fn log4_superset_end() -> BigRational {
    ratio(7214, 10_000)
}

/// Exact isolating bracket of width <= 1e-9 around the unique root of
/// `39 m^2 - 12 m - 2` in (0, 1).
pub fn threshold_bracket() -> Result<(BigRational, BigRational), CertSuiteError> {
    let p = poly(&[-2, -12, 39]);
    let iv = RationalInterval::open(ratio(0, 1), ratio(1, 1))?;
    Ok(isolate_root(&p, &iv, &ratio(1, 1_000_000_000))?)
}

/// The full fixed ledger. Ids are stable; all claims are expected CERTIFIED.
pub fn builtin_claims() -> Vec<Claim> {
    let mut claims = Vec::new();
    let third = ratio(1, 3);
    let end = log4_superset_end();
    let mut sign_claim =
        |id: &str, note: &str, p: RationalPoly, iv: RationalInterval, expected: SignClaim| {
            claims.push(Claim {
                id: id.to_string(),
                note: note.to_string(),
                kind: ClaimKind::Poly { poly: p, interval: iv, expected },
            });
        };

    let open01 = RationalInterval::open(ratio(0, 1), ratio(1, 1)).expect("valid");
    sign_claim(
        "fig1",
        "x^2 - 3x + 2 > 0 on (0,1): lower envelope of (2 - 3x + 2x^2)/(3x^2) above 1/3",
        poly(&[2, -3, 1]),
        open01.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "fig2",
        "x^2 - 3x + 2 > 0 on (0,1): upper envelope of (3x - 2)/(3x^2) below 1/3",
        poly(&[2, -3, 1]),
        open01.clone(),
        SignClaim::Positive,
    );
    let mid_band = RationalInterval::open_closed(third.clone(), end.clone()).expect("valid");
    sign_claim(
        "fig3",
        "351m^4 - 576m^3 + 297m^2 - 72m + 8 < 0 on (1/3, 7214/10000]",
        poly(&[8, -72, 297, -576, 351]),
        mid_band.clone(),
        SignClaim::Negative,
    );
    let low_band = RationalInterval::open(ratio(0, 1), third.clone()).expect("valid");
    sign_claim(
        "fig4-psi1",
        "351m^4 - 576m^3 + 297m^2 - 72m + 8 > 0 on (0, 1/3)",
        poly(&[8, -72, 297, -576, 351]),
        low_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "fig4-psi2",
        "degree-6 root-location polynomial positive on (0, 1/3)",
        poly(&[112, -1392, 8934, -31176, 63423, -54054, 13689]),
        low_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "fig5",
        "degree-8 critical-point comparison negative on (0, 1/6)",
        poly(&[-448, 5376, -28496, 66768, 24093, -584694, 1561005, -1908036, 876096]),
        RationalInterval::open(ratio(0, 1), ratio(1, 6)).expect("valid"),
        SignClaim::Negative,
    );
    sign_claim(
        "fig6-psi3",
        "1404m^2 - 432m - 12 > 0 on (1/3, 7214/10000]",
        poly(&[-12, -432, 1404]),
        mid_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "fig6-psi4",
        "13689m^4 + 18954m^3 - 5841m^2 + 1008m + 30 > 0 on (1/3, 7214/10000]",
        poly(&[30, 1008, -5841, 18954, 13689]),
        mid_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "fig7",
        "critical point stays below the vertex root: quartic >= 0 on (1/2, 7214/10000]",
        poly(&[225, 6354, -85719, 331812, -292032]),
        RationalInterval::open_closed(ratio(1, 2), end.clone()).expect("valid"),
        SignClaim::NonNegative,
    );
    sign_claim(
        "fig8",
        "degree-8 critical-point comparison nonpositive on (4/13, 1/3)",
        poly(&[-64, 1728, -14208, 45144, 42201, -823878, 2755701, -4106700, 2135484]),
        RationalInterval::open(ratio(4, 13), third.clone()).expect("valid"),
        SignClaim::NonPositive,
    );
    let closed_band = RationalInterval::closed(third.clone(), end.clone()).expect("valid");
    sign_claim(
        "fig9-psi1",
        "3822m - 1176 > 0 on [1/3, 7214/10000] (convexity numerator, x^4 term)",
        poly(&[-1176, 3822]),
        closed_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "fig9-psi2",
        "convexity numerator, x^3 term, positive on [1/3, 7214/10000]",
        poly(&[-504, 4662, -23772, 45318]),
        closed_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "fig9-psi3",
        "convexity numerator, x^2 term, positive on [1/3, 7214/10000]",
        poly(&[-36, 549, -6372, 38178, -129960, 189657]),
        closed_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "fig9-psi4",
        "convexity numerator, x term, positive on [1/3, 7214/10000]",
        poly(&[2, -216, 3148, -25464, 117762, -312096, 369408]),
        closed_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "fig9-psi5",
        "convexity numerator, constant term, positive on [1/3, 7214/10000]",
        poly(&[28, -720, 7592, -45456, 162876, -337920, 319488]),
        closed_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "fig11",
        "degree-12 comparison polynomial nonnegative on (0, 1/3] (vanishes at 1/3)",
        poly(&[
            1024,
            -6144,
            -162816,
            3220992,
            -29086704,
            166905792,
            -666386676,
            1908662292,
            -3923336331,
            5646621132,
            -5375600802,
            3004133184,
            -735140367,
        ]),
        RationalInterval::open_closed(ratio(0, 1), third.clone()).expect("valid"),
        SignClaim::NonNegative,
    );

    // Bracketed algebraic threshold: certify the quadratic's sign on both
    // sides of an exact isolating bracket.
    let (t_lo, t_hi) = threshold_bracket().expect("threshold quadratic has one root in (0,1)");
    sign_claim(
        "case4-i",
        "39m^2 - 12m - 2 < 0 left of the branch threshold",
        poly(&[-2, -12, 39]),
        RationalInterval::open_closed(ratio(0, 1), t_lo).expect("valid"),
        SignClaim::Negative,
    );
    sign_claim(
        "case4-ii",
        "39m^2 - 12m - 2 > 0 right of the branch threshold",
        RationalPoly::from_integers(&[-2, -12, 39]),
        RationalInterval::closed(t_hi, end.clone()).expect("valid"),
        SignClaim::Positive,
    );
    sign_claim(
        "case4-iii",
        "9m^2 - 6m + 1 = (3m - 1)^2 >= 0 on (0, 7214/10000] (double root at 1/3)",
        poly(&[1, -6, 9]),
        RationalInterval::open_closed(ratio(0, 1), end.clone()).expect("valid"),
        SignClaim::NonNegative,
    );
    sign_claim(
        "case4-v",
        "507m^4 - 156m^3 - 38m^2 + 12m - 3 >= 0 on (1/2, 7214/10000]",
        poly(&[-3, 12, -38, -156, 507]),
        RationalInterval::open_closed(ratio(1, 2), end.clone()).expect("valid"),
        SignClaim::NonNegative,
    );
    sign_claim(
        "delta-omega1",
        "first resolvent discriminant positive on (1/3, 7214/10000]",
        poly(&[19, -186, 899, -2172, 2496]),
        mid_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "delta-omega2",
        "second resolvent discriminant positive on [1/3, 7214/10000]",
        poly(&[3, -42, 299, -1236, 2496]),
        closed_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "denom-omega1",
        "117m^3 - 153m^2 + 48m - 8 < 0 on (1/3, 7214/10000]",
        poly(&[-8, 48, -153, 117]),
        mid_band.clone(),
        SignClaim::Negative,
    );
    sign_claim(
        "num-omega1",
        "78m^2 - 27m + 5 > 0 on (1/3, 7214/10000]",
        poly(&[5, -27, 78]),
        mid_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "denom-omega2",
        "117m^3 + 3m^2 > 0 on [1/3, 7214/10000]",
        poly(&[0, 0, 3, 117]),
        closed_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "num-omega2",
        "78m^2 - 21m + 3 > 0 on [1/3, 7214/10000]",
        poly(&[3, -21, 78]),
        closed_band.clone(),
        SignClaim::Positive,
    );
    sign_claim(
        "case331-quad",
        "26m^2 - 7m + 1 > 0 on (0, 1/3]",
        poly(&[1, -7, 26]),
        RationalInterval::open_closed(ratio(0, 1), third.clone()).expect("valid"),
        SignClaim::Positive,
    );
    sign_claim(
        "phi1-concave",
        "39m^2 - 24m + 8 > 0 on (0, 1/3): concavity of the first envelope",
        poly(&[8, -24, 39]),
        low_band,
        SignClaim::Positive,
    );

    claims.push(Claim {
        id: "fig12".to_string(),
        note: "degree-13 part plus degree-11 part times sqrt(quartic) \
               nonnegative on [1/3, 423458/1000000] (vanishes at 1/3)"
            .to_string(),
        kind: ClaimKind::SqrtExpr {
            expr: SqrtExpr::new(
                poly(&[
                    2592,
                    -125280,
                    2920752,
                    -43514160,
                    461874822,
                    -3684223958,
                    22694555717,
                    -109189509687,
                    409947682644,
                    -1185433827318,
                    2565044468649,
                    -3931878351375,
                    3824833597416,
                    -1779161054814,
                ]),
                poly(&[
                    -864,
                    35712,
                    -701712,
                    8663264,
                    -74606178,
                    470004964,
                    -2208185547,
                    7732426260,
                    -19771596624,
                    35153704872,
                    -39090726675,
                    20531017728,
                ]),
                poly(&[9, -126, 897, -3708, 7488]),
            ),
            interval: RationalInterval::closed(third.clone(), ratio(423_458, 1_000_000))
                .expect("valid"),
            expected: SignClaim::NonNegative,
        },
    });
    claims.push(Claim {
        id: "case332-t1".to_string(),
        note: "78m^2 - 27m + 5 dominates sqrt(3 * first discriminant) on (1/3, 7214/10000]: \
               the smaller resolvent root stays negative"
            .to_string(),
        kind: ClaimKind::SqrtExpr {
            expr: SqrtExpr::new(
                poly(&[5, -27, 78]),
                poly(&[-1]),
                poly(&[57, -558, 2697, -6516, 7488]),
            ),
            interval: mid_band,
            expected: SignClaim::Positive,
        },
    });
    claims.push(Claim {
        id: "e4-box".to_string(),
        note: "21y^2x^2 - (213y^2 - 72y + 12)x + (192y^2 - 72y + 12) >= 0 \
               on [0,1] x [1/100, 7214/10000]"
            .to_string(),
        kind: ClaimKind::Box {
            poly: BivariatePoly::from_integers(&[
                &[12, -72, 192],
                &[-12, 72, -213],
                &[0, 0, 21],
            ]),
            x: RationalInterval::closed(ratio(0, 1), ratio(1, 1)).expect("valid"),
            y: RationalInterval::closed(ratio(1, 100), end).expect("valid"),
            expected: SignClaim::NonNegative,
        },
    });
    claims.push(Claim {
        id: "fig10".to_string(),
        note: "the two bound curves cross once; the crossing is bracketed near 0.423458"
            .to_string(),
        kind: ClaimKind::RootFind { target: 0.423458, tolerance: 5e-6 },
    });
    claims
}

#[derive(Debug, Clone)]
pub enum ClaimSelection {
    All,
    Ids(Vec<String>),
}

/// Runs the selected claims in ledger order.
pub fn run_claims(selection: &ClaimSelection) -> Result<Vec<ClaimReport>, CertSuiteError> {
    let ledger = builtin_claims();
    let chosen: Vec<&Claim> = match selection {
        ClaimSelection::All => ledger.iter().collect(),
        ClaimSelection::Ids(ids) => {
            let mut out = Vec::new();
            for id in ids {
                match ledger.iter().find(|c| &c.id == id) {
                    Some(c) => out.push(c),
                    None => {
                        let known: Vec<&str> = ledger.iter().map(|c| c.id.as_str()).collect();
                        return Err(CertSuiteError::UnknownClaim {
                            id: id.clone(),
                            known: known.join(", "),
                        });
                    }
                }
            }
            out
        }
    };
    Ok(chosen.into_iter().map(run_one).collect())
}

fn run_one(claim: &Claim) -> ClaimReport {
    let start = Instant::now();
    let (verdict, outcome) = match &claim.kind {
        ClaimKind::Poly { poly, interval, expected } => {
            match certify_sign(&claim.id, poly, interval, *expected) {
                Ok(c) => (c.verdict, ClaimOutcome::Sign(c)),
                Err(e) => (Verdict::Inconclusive, ClaimOutcome::Failed { message: e.to_string() }),
            }
        }
        ClaimKind::SqrtExpr { expr, interval, expected } => {
            match certify_sqrt_sign(&claim.id, expr, interval, *expected) {
                Ok(c) => (c.verdict, ClaimOutcome::Sign(c)),
                Err(e) => (Verdict::Inconclusive, ClaimOutcome::Failed { message: e.to_string() }),
            }
        }
        ClaimKind::Box { poly, x, y, expected } => {
            let bx = Box2::new(x.clone(), y.clone());
            match certify_box_sign(&claim.id, poly, &bx, *expected, &BoxCertConfig::default()) {
                Ok(c) => (c.verdict, ClaimOutcome::BoxSign(c)),
                Err(e) => (Verdict::Inconclusive, ClaimOutcome::Failed { message: e.to_string() }),
            }
        }
        ClaimKind::RootFind { target, tolerance } => match find_m3() {
            Ok(bracket) => {
                let ok = (bracket.midpoint - target).abs() <= *tolerance;
                let verdict = if ok { Verdict::Certified } else { Verdict::Refuted };
                (verdict, ClaimOutcome::Root(bracket))
            }
            Err(e) => (Verdict::Inconclusive, ClaimOutcome::Failed { message: e.to_string() }),
        },
    };
    ClaimReport {
        claim_id: claim.id.clone(),
        verdict,
        outcome,
        elapsed: start.elapsed(),
    }
}

/// `xi1(t4)` and `xi2(t4)` through their expanded closed forms.
pub fn xi_at_inner_root(m: f64) -> (f64, f64) {
    let s = (3.0 * (3.0 - 42.0 * m + 299.0 * m * m - 1236.0 * m.powi(3) + 2496.0 * m.powi(4)))
        .sqrt();
    let a1 = 48672.0 * m.powi(5) - 34515.0 * m.powi(4) + 12486.0 * m.powi(3) - 2577.0 * m * m
        + 312.0 * m
        - 18.0;
    let b1 = 507.0 * m.powi(3) - 273.0 * m * m + 62.0 * m - 6.0;
    let a2 = 3744.0 * m.powi(3) - 1854.0 * m * m + 345.0 * m - 15.0;
    let b2 = 234.0 * m.powi(3) - 72.0 * m * m + 21.0 * m - 3.0;
    let xi1 = 4.0 * (a1 - b1 * s) / (3.0 * m.powi(3) * (1.0 + 39.0 * m).powi(2));
    let xi2 = 3.0 * m * m * (a2 + 7.0 * s) / ((39.0 * m * m - 12.0 * m + 2.0) * (b2 + s));
    (xi1, xi2)
}

/// Gap between the inner-root bound curve and the endpoint bound curve;
/// its unique root in the band is the crossing point.
pub fn m3_gap(m: f64) -> f64 {
    let (xi1, xi2) = xi_at_inner_root(m);
    xi1 * xi2.sqrt() - (39.0 * m * m - 12.0 * m + 2.0)
}

/// Bisection bracket of width <= 1e-8 around the crossing point of the two
/// bound curves on [1/3, 1/log 4].
pub fn find_m3() -> Result<RootBracket, CertSuiteError> {
    let mut lo = 1.0 / 3.0 + 1e-6;
    let mut hi = 0.7213;
    let mut g_lo = m3_gap(lo);
    let g_hi = m3_gap(hi);
    if g_lo <= 0.0 || g_hi >= 0.0 {
        return Err(CertSuiteError::NoSignChange);
    }
    let mut iterations = 0u32;
    while hi - lo > 1e-8 {
        let mid = 0.5 * (lo + hi);
        let g_mid = m3_gap(mid);
        if (g_mid > 0.0) == (g_lo > 0.0) {
            lo = mid;
            g_lo = g_mid;
        } else {
            hi = mid;
        }
        iterations += 1;
    }
    Ok(RootBracket { lo, hi, midpoint: 0.5 * (lo + hi), iterations })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Case4Entry {
    pub label: String,
    pub value: Option<f64>,
    /// `value <= maximum` up to round-off, when the entry applies.
    pub within_bound: Option<bool>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Case4Table {
    pub m: f64,
    pub entries: Vec<Case4Entry>,
    pub maximum: f64,
    pub sharp: f64,
}

/// Evaluates the candidate bounds of the final comparison at one `m` and
/// returns them beside their maximum and the sharp bound.
///
/// The small-`p1` radical bound is tabulated but excluded from the maximum:
/// on (0, 1/3) it exceeds `m^2/36` (its radicand is `>= 1` there, with
/// equality only at `m = 1/3`), so it is not a tight envelope of the
/// functional, merely an upper estimate of one sub-case chain.
pub fn case4_compare(m: f64) -> Result<Case4Table, CertSuiteError> {
    if !(m > 0.0 && m <= m_upper() + 1e-15) {
        return Err(CertSuiteError::MOutOfRange(m));
    }
    let third = 1.0 / 3.0;
    let p1_zero = m * m / 36.0;
    let p1_one = m * m / 144.0 * (39.0 * m * m - 12.0 * m + 2.0);
    let q2 = if m < third {
        Some(
            m * m / 36.0
                * (3.0 * (16.0 * m * m - 6.0 * m + 1.0) / (39.0 * m * m - 12.0 * m + 2.0)).sqrt(),
        )
    } else {
        None
    };
    let m6 = if m < third {
        let s = (3.0
            * (19.0 - 186.0 * m + 899.0 * m * m - 2172.0 * m.powi(3) + 2496.0 * m.powi(4)))
        .sqrt();
        let psi1 = -24336.0 * m.powi(6) + 33345.0 * m.powi(5) - 21801.0 * m.powi(4)
            + 8415.0 * m.powi(3)
            - 2023.0 * m * m
            + 288.0 * m
            - 20.0;
        let psi2 = 312.0 * m.powi(4) - 330.0 * m.powi(3) + 159.0 * m * m - 36.0 * m + 4.0;
        let den = 117.0 * m.powi(3) - 153.0 * m * m + 48.0 * m - 8.0;
        Some(m * m * (psi1 + psi2 * s) / (6.0 * den * den))
    } else {
        None
    };
    let mi6 = if m > third {
        Some(if m <= 0.5 { m * m / 36.0 } else { (64.0 * m * m - 12.0 * m + 3.0) / 1872.0 })
    } else {
        None
    };
    let q3 = if m >= third {
        let (xi1, xi2) = xi_at_inner_root(m);
        let inner = xi1 * xi2.sqrt();
        Some(m * m / 144.0 * inner.max(39.0 * m * m - 12.0 * m + 2.0))
    } else {
        None
    };
    let counted = [p1_zero, p1_one]
        .into_iter()
        .chain(m6)
        .chain(mi6)
        .chain(q3);
    let maximum = counted.fold(f64::NEG_INFINITY, f64::max);
    let sharp = sharp_bound(m).map_err(|_| CertSuiteError::MOutOfRange(m))?.value;
    let entry = |label: &str, value: Option<f64>| Case4Entry {
        label: label.to_string(),
        value,
        within_bound: value.map(|v| v <= maximum + 1e-12),
    };
    Ok(Case4Table {
        m,
        entries: vec![
            entry("p1_zero", Some(p1_zero)),
            entry("p1_one", Some(p1_one)),
            entry("radical_small_p1", q2),
            entry("sqrt_delta", m6),
            entry("critical_point", mi6),
            entry("xi_endpoint", q3),
        ],
        maximum,
        sharp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::{branch_threshold, proof_constants};
    use crate::polycert::PointSign;

    #[test]
    fn ledger_shape() {
        let ledger = builtin_claims();
        assert!(ledger.len() >= 20, "only {} claims", ledger.len());
        let mut ids: Vec<&str> = ledger.iter().map(|c| c.id.as_str()).collect();
        let before = ids.len();
        ids.sort_unstable();
        ids.dedup();
        assert_eq!(before, ids.len(), "duplicate claim ids");
        for want in ["fig3", "e4-box", "fig12", "fig10", "case4-i", "case4-v"] {
            assert!(ledger.iter().any(|c| c.id == want), "missing {want}");
        }
        let fig3 = ledger.iter().find(|c| c.id == "fig3").unwrap();
        match &fig3.kind {
            ClaimKind::Poly { interval, expected, .. } => {
                assert_eq!(*expected, SignClaim::Negative);
                assert!(interval.lo_open() && !interval.hi_open());
                assert_eq!(interval.hi(), &ratio(7214, 10000));
            }
            _ => panic!("fig3 should be a polynomial claim"),
        }
        let fig12 = ledger.iter().find(|c| c.id == "fig12").unwrap();
        match &fig12.kind {
            ClaimKind::SqrtExpr { interval, .. } => {
                assert_eq!(interval.hi(), &ratio(423_458, 1_000_000));
            }
            _ => panic!("fig12 should be a radical claim"),
        }
        assert!(matches!(
            ledger.iter().find(|c| c.id == "e4-box").unwrap().kind,
            ClaimKind::Box { .. }
        ));
    }

    #[test]
    fn selected_claims_certify() {
        let reports = run_claims(&ClaimSelection::Ids(vec![
            "fig3".into(),
            "fig1".into(),
            "case4-iii".into(),
        ]))
        .unwrap();
        assert_eq!(reports.len(), 3);
        for r in &reports {
            assert_eq!(r.verdict, Verdict::Certified, "{} failed", r.claim_id);
        }
        // The double root at 1/3 shows up in the even-touch certificate.
        match &reports[2].outcome {
            ClaimOutcome::Sign(c) => {
                assert_eq!(c.root_count, 1);
                assert_eq!(c.witness.sign, PointSign::Positive);
            }
            _ => panic!("expected a sign certificate"),
        }
    }

    #[test]
    fn unknown_id_lists_known_ones() {
        let err = run_claims(&ClaimSelection::Ids(vec!["nope".into()])).unwrap_err();
        match err {
            CertSuiteError::UnknownClaim { id, known } => {
                assert_eq!(id, "nope");
                assert!(known.contains("fig3"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn threshold_bracket_is_tight() {
        use num_traits::ToPrimitive;
        let (lo, hi) = threshold_bracket().unwrap();
        let width = &hi - &lo;
        assert!(width <= ratio(1, 1_000_000_000));
        let mid = ((&lo + &hi) / BigRational::from_integer(2.into())).to_f64().unwrap();
        assert!((mid - 0.427617).abs() < 1e-6);
        assert!((mid - branch_threshold()).abs() < 1e-9);
    }

    #[test]
    fn closed_forms_match_direct_inner_root() {
        for &m in &[0.35, 0.40, 0.42, 0.45, 0.60, 0.7213] {
            let t4 = proof_constants(m).t4.unwrap();
            let xi1_direct = (39.0 * m * m - 12.0 * m) * t4 * t4 - 2.0 * t4 + 4.0;
            let xi2_direct = (21.0 * m * m * t4 + 6.0 * (16.0 * m * m - 6.0 * m + 1.0))
                / ((39.0 * m * m - 12.0 * m + 2.0) * (2.0 + t4));
            let (xi1, xi2) = xi_at_inner_root(m);
            assert!((xi1 - xi1_direct).abs() < 1e-9, "m={m}: {xi1} vs {xi1_direct}");
            assert!((xi2 - xi2_direct).abs() < 1e-9, "m={m}: {xi2} vs {xi2_direct}");
        }
    }

    #[test]
    fn crossing_point_bracket() {
        let b = find_m3().unwrap();
        assert!(b.hi - b.lo <= 1e-8);
        assert!((b.midpoint - 0.423458).abs() <= 5e-6);
        // Bracket sits inside [1/3, branch threshold].
        assert!(b.lo >= 1.0 / 3.0 && b.hi <= branch_threshold());
        // Sign-change preconditions at the band ends.
        assert!(m3_gap(1.0 / 3.0 + 1e-6) > 0.0);
        assert!(m3_gap(0.7213) < 0.0);
    }

    #[test]
    fn inner_root_radicand_stays_valid() {
        for k in 0..=1000 {
            let m = 1.0 / 3.0 + (0.7213 - 1.0 / 3.0) * f64::from(k) / 1000.0;
            let disc =
                3.0 * (3.0 - 42.0 * m + 299.0 * m * m - 1236.0 * m.powi(3) + 2496.0 * m.powi(4));
            assert!(disc >= 0.0);
            let (_, xi2) = xi_at_inner_root(m);
            assert!(xi2 >= 0.0, "xi2 negative at m={m}");
        }
    }

    #[test]
    fn comparison_table_spot_values() {
        let t = case4_compare(0.3).unwrap();
        assert!((t.maximum - 0.0025).abs() < 1e-15);
        assert!((t.maximum - t.sharp).abs() < 1e-15);

        let t = case4_compare(0.6).unwrap();
        let want = 0.36 / 144.0 * (39.0 * 0.36 - 7.2 + 2.0);
        assert!((t.maximum - want).abs() < 1e-12);
        assert!((t.maximum - t.sharp).abs() < 1e-12);

        // The second critical-point branch value stays below the endpoint value.
        let t = case4_compare(0.55).unwrap();
        let mi6 = t.entries.iter().find(|e| e.label == "critical_point").unwrap();
        assert!(mi6.value.unwrap() <= t.sharp);

        assert!(case4_compare(0.8).is_err());
    }

    #[test]
    fn comparison_maximum_matches_sharp_bound_across_band() {
        for k in 0..=100 {
            let m = 1.0 / 3.0 + (0.7213 - 1.0 / 3.0) * f64::from(k) / 100.0;
            let t = case4_compare(m).unwrap();
            assert!(
                (t.maximum - t.sharp).abs() < 1e-12,
                "m={m}: max {} vs sharp {}",
                t.maximum,
                t.sharp
            );
        }
    }

    #[test]
    fn small_m_radical_entry_exceeds_sharp_bound() {
        // The tabulated-but-excluded entry really does overshoot below 1/3.
        let t = case4_compare(0.2).unwrap();
        let q2 = t.entries.iter().find(|e| e.label == "radical_small_p1").unwrap();
        assert!(q2.value.unwrap() > t.sharp);
        assert!((t.maximum - t.sharp).abs() < 1e-15);
    }
}
