//! Univariate polynomials with exact big-rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::PolyCertError;

/// Coefficients in ascending degree order. The zero polynomial is the empty
/// list; otherwise the leading coefficient is nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalPoly {
    coeffs: Vec<BigRational>,
}

impl RationalPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// Monomial `c * x^k`.
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// Ascending integer coefficients, `&[c0, c1, ..]` for `c0 + c1 x + ..`.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect())
    }

    /// Parses ascending coefficients given as `"num"` or `"num/den"` literals.
    pub fn from_literals(coeffs: &[&str]) -> Result<Self, PolyCertError> {
        let parsed: Result<Vec<_>, _> = coeffs
            .iter()
            .map(|s| {
                BigRational::from_str(s).map_err(|_| PolyCertError::BadRationalLiteral(s.to_string()))
            })
            .collect();
        Ok(Self::new(parsed?))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.is_zero() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Horner evaluation in double precision (reporting only, never verdicts).
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + rational_to_f64(c);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Quotient and remainder of exact division.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let lead = divisor.coeffs.last().expect("nonzero divisor");
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let factor = rem[k].clone() / lead;
            if !factor.is_zero() {
                for i in 0..=dd {
                    let t = &factor * &divisor.coeffs[i];
                    rem[k - dd + i] = &rem[k - dd + i] - t;
                }
            }
            quot[k - dd] = factor;
            rem.pop();
            while rem.last().is_some_and(|c| c.is_zero()) {
                rem.pop();
            }
        }
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd via the Euclidean algorithm.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.primitive_part();
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = l.recip();
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    /// Scales by a positive rational so coefficients become coprime integers.
    /// Sign at every point is preserved, which is all Sturm chains need.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut den_lcm = BigInt::one();
        for c in &self.coeffs {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&den_lcm / c.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        Self::new(
            ints.into_iter()
                .map(|v| BigRational::from_integer(v / &g))
                .collect(),
        )
    }

    /// `self / gcd(self, self')`: same roots, all simple.
    pub fn square_free_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.clone();
        }
        self.div_rem(&g).0
    }

    /// Yun decomposition: returns `(f_i, i)` with `self = lead * prod f_i^i`,
    /// the `f_i` square-free, pairwise coprime, monic.
    pub fn square_free_decomposition(&self) -> Vec<(Self, usize)> {
        if self.is_zero() || self.degree() == Some(0) {
            return Vec::new();
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        if a0.degree() == Some(0) {
            return vec![(f, 1)];
        }
        let mut out = Vec::new();
        let mut c = f.div_rem(&a0).0;
        let mut d = &df.div_rem(&a0).0 - &c.derivative();
        let mut i = 1;
        while c.degree() != Some(0) {
            let a = c.gcd(&d);
            if a.degree() != Some(0) {
                out.push((a.clone(), i));
            }
            c = c.div_rem(&a).0;
            d = &d.div_rem(&a).0 - &c.derivative();
            i += 1;
        }
        out
    }

    /// Product of the odd-multiplicity square-free factors: the polynomial
    /// whose roots are exactly the sign changes of `self`.
    pub fn odd_multiplicity_part(&self) -> Self {
        let mut out = Self::constant(BigRational::one());
        for (f, m) in self.square_free_decomposition() {
            if m % 2 == 1 {
                out = &out * &f;
            }
        }
        out
    }

    /// Exact division by `(x - r)`; `r` must be a root.
    pub fn deflate_root(&self, r: &BigRational) -> Self {
        debug_assert!(self.eval(r).is_zero(), "deflate_root at a non-root");
        let linear = Self::new(vec![-r.clone(), BigRational::one()]);
        let (q, rem) = self.div_rem(&linear);
        debug_assert!(rem.is_zero());
        q
    }

    /// Composition `self(a + b x)`, exact.
    pub fn compose_affine(&self, a: &BigRational, b: &BigRational) -> Self {
        let mut acc = Self::zero();
        let shift = Self::new(vec![a.clone(), b.clone()]);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &shift) + &Self::constant(c.clone());
        }
        acc
    }
}

pub(crate) fn rational_to_f64(c: &BigRational) -> f64 {
    num_traits::ToPrimitive::to_f64(c).unwrap_or_else(|| {
        // Fall back for magnitudes outside f64 range.
        if c.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

impl Add for &RationalPoly {
    type Output = RationalPoly;
    fn add(self, rhs: Self) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] += c;
        }
        RationalPoly::new(out)
    }
}

impl Sub for &RationalPoly {
    type Output = RationalPoly;
    fn sub(self, rhs: Self) -> RationalPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            out[i] -= c;
        }
        RationalPoly::new(out)
    }
}

impl Mul for &RationalPoly {
    type Output = RationalPoly;
    fn mul(self, rhs: Self) -> RationalPoly {
        if self.is_zero() || rhs.is_zero() {
            return RationalPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RationalPoly::new(out)
    }
}

impl Neg for &RationalPoly {
    type Output = RationalPoly;
    fn neg(self) -> RationalPoly {
        RationalPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*x"),
                _ => format!("{c}*x^{i}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Display for RationalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

// Wire format: JSON array of "num/den" strings, ascending degree.
impl Serialize for RationalPoly {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for RationalPoly {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = RationalPoly;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "an array of rational coefficient strings")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(s) = seq.next_element::<String>()? {
                    let c = BigRational::from_str(&s)
                        .map_err(|_| serde::de::Error::custom(format!("bad rational {s:?}")))?;
                    coeffs.push(c);
                }
                Ok(RationalPoly::new(coeffs))
            }
        }
        deserializer.deserialize_seq(V)
    }
}
