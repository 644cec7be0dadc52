//! Certification of bivariate polynomial sign claims on rectangular boxes.
//!
//! Each cell is rescaled to the unit square and converted to the Bernstein
//! basis; the coefficient range encloses the polynomial's range on the cell
//! and is exact at the corners, so claims whose zero set touches the box
//! boundary still terminate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::certify::{PointSign, SignClaim, Verdict};
use super::interval::RationalInterval;
use super::poly::RationalPoly;
use super::PolyCertError;

/// `coeffs[i][j]` multiplies `x^i * y^j`; rows are padded to equal length.
#[derive(Debug, Clone)]
pub struct BivariatePoly {
    coeffs: Vec<Vec<BigRational>>,
}

// Wire format: grid of "num/den" strings, rows ascending in x degree.
impl Serialize for BivariatePoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let grid: Vec<Vec<String>> = self
            .coeffs
            .iter()
            .map(|row| row.iter().map(|c| c.to_string()).collect())
            .collect();
        grid.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for BivariatePoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use std::str::FromStr;
        let grid = Vec::<Vec<String>>::deserialize(deserializer)?;
        let mut coeffs = Vec::with_capacity(grid.len());
        for row in grid {
            let mut out = Vec::with_capacity(row.len());
            for s in row {
                out.push(BigRational::from_str(&s).map_err(serde::de::Error::custom)?);
            }
            coeffs.push(out);
        }
        Ok(Self::new(coeffs))
    }
}

impl BivariatePoly {
    pub fn new(mut coeffs: Vec<Vec<BigRational>>) -> Self {
        let width = coeffs.iter().map(Vec::len).max().unwrap_or(0);
        for row in &mut coeffs {
            row.resize(width, BigRational::zero());
        }
        if coeffs.is_empty() {
            coeffs.push(vec![BigRational::zero()]);
        }
        Self { coeffs }
    }

    /// Rows of ascending `x` degree, each row ascending in `y`.
    pub fn from_integers(rows: &[&[i64]]) -> Self {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&c| BigRational::from_integer(c.into())).collect())
                .collect(),
        )
    }

    pub fn degrees(&self) -> (usize, usize) {
        (self.coeffs.len() - 1, self.coeffs[0].len() - 1)
    }

    pub fn eval(&self, x: &BigRational, y: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for row in self.coeffs.iter().rev() {
            let mut row_acc = BigRational::zero();
            for c in row.iter().rev() {
                row_acc = row_acc * y + c;
            }
            acc = acc * x + row_acc;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for row in self.coeffs.iter().rev() {
            let mut row_acc = 0.0;
            for c in row.iter().rev() {
                row_acc = row_acc * y + super::poly::rational_to_f64(c);
            }
            acc = acc * x + row_acc;
        }
        acc
    }

    /// Coefficients of `f(x0 + wx*u, y0 + wy*v)` as a polynomial in `(u, v)`.
    fn affine_to_unit(&self, cell: &Box2) -> Self {
        let (x0, wx) = (cell.x.lo().clone(), cell.x.width());
        let (y0, wy) = (cell.y.lo().clone(), cell.y.width());
        // Substitute in y within each row, then Horner in x over row polys.
        let rows_y: Vec<RationalPoly> = self
            .coeffs
            .iter()
            .map(|row| RationalPoly::new(row.clone()).compose_affine(&y0, &wy))
            .collect();
        let ny = self.coeffs[0].len();
        let mut acc: Vec<RationalPoly> = vec![RationalPoly::zero()];
        for row in rows_y.iter().rev() {
            // acc = acc * (x0 + wx u) + row
            let mut next = vec![RationalPoly::zero(); acc.len() + 1];
            for (i, a) in acc.iter().enumerate() {
                let sx0 = RationalPoly::new(a.coeffs().iter().map(|c| c * &x0).collect());
                let swx = RationalPoly::new(a.coeffs().iter().map(|c| c * &wx).collect());
                next[i] = &next[i] + &sx0;
                next[i + 1] = &next[i + 1] + &swx;
            }
            next[0] = &next[0] + row;
            while next.len() > 1 && next.last().is_some_and(RationalPoly::is_zero) {
                next.pop();
            }
            acc = next;
        }
        let width = acc.iter().map(|p| p.coeffs().len()).max().unwrap_or(1).max(ny);
        Self::new(
            acc.into_iter()
                .map(|p| {
                    let mut row = p.coeffs().to_vec();
                    row.resize(width, BigRational::zero());
                    row
                })
                .collect(),
        )
    }

    /// Exact Bernstein coefficient range on the cell: `lo <= f <= hi` there.
    pub fn bernstein_range(&self, cell: &Box2) -> (BigRational, BigRational) {
        let unit = self.affine_to_unit(cell);
        let n = unit.coeffs.len() - 1;
        let m = unit.coeffs[0].len() - 1;
        let mut lo: Option<BigRational> = None;
        let mut hi: Option<BigRational> = None;
        for i in 0..=n {
            for j in 0..=m {
                let mut b = BigRational::zero();
                for k in 0..=i {
                    for l in 0..=j {
                        let w = BigRational::new(
                            binomial(i, k) * binomial(j, l),
                            binomial(n, k) * binomial(m, l),
                        );
                        b += w * &unit.coeffs[k][l];
                    }
                }
                lo = Some(match lo {
                    Some(v) => v.min(b.clone()),
                    None => b.clone(),
                });
                hi = Some(match hi {
                    Some(v) => v.max(b),
                    None => b,
                });
            }
        }
        (lo.expect("nonempty grid"), hi.expect("nonempty grid"))
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k.min(n - k) {
        num *= BigInt::from(n - i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Box2 {
    pub x: RationalInterval,
    pub y: RationalInterval,
}

impl Box2 {
    pub fn new(x: RationalInterval, y: RationalInterval) -> Self {
        Self { x, y }
    }

    fn center(&self) -> (BigRational, BigRational) {
        (self.x.midpoint(), self.y.midpoint())
    }
}

#[derive(Debug, Clone)]
pub struct BoxCertConfig {
    /// Cells narrower than this on both sides are no longer split.
    pub min_width: BigRational,
    /// Hard cap on processed cells.
    pub max_cells: usize,
}

impl Default for BoxCertConfig {
    fn default() -> Self {
        Self {
            min_width: BigRational::new(BigInt::one(), BigInt::from(1u64 << 20)),
            max_cells: 200_000,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoxCertificate {
    pub claim_id: String,
    pub expected: SignClaim,
    pub verdict: Verdict,
    /// Present for refuted claims: an exact violating sample.
    pub witness: Option<BoxWitness>,
    pub cells_certified: usize,
    pub cells_inconclusive: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BoxWitness {
    pub x: String,
    pub y: String,
    pub sign: PointSign,
}

/// Adaptive subdivision proof that `f` has the expected sign on the box.
pub fn certify_box_sign(
    claim_id: &str,
    f: &BivariatePoly,
    bx: &Box2,
    expected: SignClaim,
    cfg: &BoxCertConfig,
) -> Result<BoxCertificate, PolyCertError> {
    if bx.x.is_point() || bx.y.is_point() {
        return Err(PolyCertError::DegenerateInterval);
    }
    let mut stack = vec![bx.clone()];
    let mut certified = 0usize;
    let mut inconclusive = 0usize;
    let mut processed = 0usize;
    while let Some(cell) = stack.pop() {
        processed += 1;
        if processed > cfg.max_cells {
            inconclusive += 1 + stack.len();
            break;
        }
        // A violating exact sample refutes the whole claim immediately.
        let (cx, cy) = cell.center();
        let v = f.eval(&cx, &cy);
        let s = PointSign::of(&v);
        if !expected.admits(s) {
            return Ok(BoxCertificate {
                claim_id: claim_id.to_string(),
                expected,
                verdict: Verdict::Refuted,
                witness: Some(BoxWitness { x: cx.to_string(), y: cy.to_string(), sign: s }),
                cells_certified: certified,
                cells_inconclusive: inconclusive,
            });
        }
        let (lo, hi) = f.bernstein_range(&cell);
        let decided = match expected {
            SignClaim::Positive => lo.is_positive(),
            SignClaim::NonNegative => !lo.is_negative(),
            SignClaim::Negative => hi.is_negative(),
            SignClaim::NonPositive => !hi.is_positive(),
        };
        if decided {
            certified += 1;
            continue;
        }
        let wx = cell.x.width();
        let wy = cell.y.width();
        if wx < cfg.min_width && wy < cfg.min_width {
            inconclusive += 1;
            continue;
        }
        if wx >= wy {
            let mid = cell.x.midpoint();
            stack.push(Box2::new(
                RationalInterval::new(cell.x.lo().clone(), mid.clone(), cell.x.lo_open(), false)?,
                cell.y.clone(),
            ));
            stack.push(Box2::new(
                RationalInterval::new(mid, cell.x.hi().clone(), false, cell.x.hi_open())?,
                cell.y.clone(),
            ));
        } else {
            let mid = cell.y.midpoint();
            stack.push(Box2::new(
                cell.x.clone(),
                RationalInterval::new(cell.y.lo().clone(), mid.clone(), cell.y.lo_open(), false)?,
            ));
            stack.push(Box2::new(
                cell.x.clone(),
                RationalInterval::new(mid, cell.y.hi().clone(), false, cell.y.hi_open())?,
            ));
        }
    }
    let verdict = if inconclusive == 0 { Verdict::Certified } else { Verdict::Inconclusive };
    Ok(BoxCertificate {
        claim_id: claim_id.to_string(),
        expected,
        verdict,
        witness: None,
        cells_certified: certified,
        cells_inconclusive: inconclusive,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{big, ratio};
    use super::*;

    fn unit_box() -> Box2 {
        Box2::new(
            RationalInterval::closed(big(0), big(1)).unwrap(),
            RationalInterval::closed(big(0), big(1)).unwrap(),
        )
    }

    #[test]
    fn plane_sum_is_nonnegative() {
        let f = BivariatePoly::from_integers(&[&[0, 1], &[1, 0]]); // x + y
        let c = certify_box_sign("t", &f, &unit_box(), SignClaim::NonNegative, &Default::default())
            .unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
    }

    #[test]
    fn negative_slab_is_refuted_with_witness() {
        let f = BivariatePoly::from_integers(&[&[0], &[-1]]); // -x
        let bx = Box2::new(
            RationalInterval::closed(ratio(1, 2), big(1)).unwrap(),
            RationalInterval::closed(big(0), big(1)).unwrap(),
        );
        let c = certify_box_sign("t", &f, &bx, SignClaim::NonNegative, &Default::default()).unwrap();
        assert_eq!(c.verdict, Verdict::Refuted);
        let w = c.witness.expect("witness");
        assert_eq!(w.sign, PointSign::Negative);
    }

    #[test]
    fn boundary_touching_zero_set_still_certifies_weak_claim() {
        // (1 - x)(1 + y): zero along the x = 1 face of the unit box.
        let f = BivariatePoly::from_integers(&[&[1, 1], &[-1, -1]]);
        let c = certify_box_sign("t", &f, &unit_box(), SignClaim::NonNegative, &Default::default())
            .unwrap();
        assert_eq!(c.verdict, Verdict::Certified);
    }

    #[test]
    fn interior_zero_line_fails_strict_but_passes_weak() {
        // (2x - 1)^2 is zero on an interior line; the first cell's center
        // sits on it, refuting the strict claim with an exact witness.
        let f = BivariatePoly::from_integers(&[&[1], &[-4], &[4]]);
        let cfg = BoxCertConfig {
            min_width: ratio(1, 64),
            max_cells: 5_000,
        };
        let c = certify_box_sign("t", &f, &unit_box(), SignClaim::Positive, &cfg).unwrap();
        assert_eq!(c.verdict, Verdict::Refuted);
        let w = c.witness.unwrap();
        assert_eq!((w.x.as_str(), w.sign), ("1/2", PointSign::Zero));
        // The weak form certifies: the touch line lands on a dyadic cell
        // boundary after one split, where the enclosure is exact.
        let c2 = certify_box_sign("t", &f, &unit_box(), SignClaim::NonNegative, &cfg).unwrap();
        assert_eq!(c2.verdict, Verdict::Certified);
    }

    #[test]
    fn enclosure_contains_sampled_values() {
        let f = BivariatePoly::from_integers(&[&[3, -2, 1], &[0, 7, 0], &[-5, 0, 2]]);
        let cell = Box2::new(
            RationalInterval::closed(ratio(1, 4), ratio(3, 4)).unwrap(),
            RationalInterval::closed(ratio(1, 8), ratio(5, 8)).unwrap(),
        );
        let (lo, hi) = f.bernstein_range(&cell);
        for i in 0..10 {
            for j in 0..10 {
                let x = ratio(1, 4) + ratio(1, 2) * ratio(i, 10);
                let y = ratio(1, 8) + ratio(1, 2) * ratio(j, 10);
                let v = f.eval(&x, &y);
                assert!(v >= lo && v <= hi);
            }
        }
    }

    #[test]
    fn corner_values_are_exact() {
        let f = BivariatePoly::from_integers(&[&[1, 2], &[3, 4]]);
        let cell = unit_box();
        let (lo, hi) = f.bernstein_range(&cell);
        // Corner values 1, 3, 4, 10 are Bernstein coefficients themselves.
        assert!(lo <= big(1) && hi >= big(10));
        assert_eq!(lo, big(1));
        assert_eq!(hi, big(10));
    }
}
