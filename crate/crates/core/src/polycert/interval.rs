//! Rational intervals with independently open or closed endpoints.

use std::fmt;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::poly::rational_to_f64;
use super::PolyCertError;

#[derive(Clone, PartialEq, Eq)]
pub struct RationalInterval {
    lo: BigRational,
    hi: BigRational,
    lo_open: bool,
    hi_open: bool,
}

impl RationalInterval {
    pub fn new(
        lo: BigRational,
        hi: BigRational,
        lo_open: bool,
        hi_open: bool,
    ) -> Result<Self, PolyCertError> {
        if lo > hi || (lo == hi && (lo_open || hi_open)) {
            return Err(PolyCertError::InvalidInterval);
        }
        Ok(Self { lo, hi, lo_open, hi_open })
    }

    pub fn open(lo: BigRational, hi: BigRational) -> Result<Self, PolyCertError> {
        Self::new(lo, hi, true, true)
    }

    pub fn closed(lo: BigRational, hi: BigRational) -> Result<Self, PolyCertError> {
        Self::new(lo, hi, false, false)
    }

    pub fn open_closed(lo: BigRational, hi: BigRational) -> Result<Self, PolyCertError> {
        Self::new(lo, hi, true, false)
    }

    pub fn closed_open(lo: BigRational, hi: BigRational) -> Result<Self, PolyCertError> {
        Self::new(lo, hi, false, true)
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn lo_open(&self) -> bool {
        self.lo_open
    }

    pub fn hi_open(&self) -> bool {
        self.hi_open
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(2.into())
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        let lo_ok = if self.lo_open { x > &self.lo } else { x >= &self.lo };
        let hi_ok = if self.hi_open { x < &self.hi } else { x <= &self.hi };
        lo_ok && hi_ok
    }

    /// `count + 1` equally spaced points strictly between the endpoints.
    pub fn interior_grid(&self, count: usize) -> Vec<BigRational> {
        let n = BigRational::from_integer(((count + 2) as i64).into());
        let w = self.width();
        (1..=count + 1)
            .map(|j| &self.lo + &w * BigRational::from_integer((j as i64).into()) / &n)
            .collect()
    }
}

impl fmt::Debug for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_open { '(' } else { '[' },
            self.lo,
            self.hi,
            if self.hi_open { ')' } else { ']' },
        )
    }
}

impl fmt::Display for RationalInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_open { '(' } else { '[' },
            rational_to_f64(&self.lo),
            rational_to_f64(&self.hi),
            if self.hi_open { ')' } else { ']' },
        )
    }
}

#[derive(Serialize, Deserialize)]
struct IntervalWire {
    lo: String,
    hi: String,
    lo_open: bool,
    hi_open: bool,
}

impl Serialize for RationalInterval {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        IntervalWire {
            lo: self.lo.to_string(),
            hi: self.hi.to_string(),
            lo_open: self.lo_open,
            hi_open: self.hi_open,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for RationalInterval {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use std::str::FromStr;
        let w = IntervalWire::deserialize(deserializer)?;
        let lo = BigRational::from_str(&w.lo).map_err(serde::de::Error::custom)?;
        let hi = BigRational::from_str(&w.hi).map_err(serde::de::Error::custom)?;
        Self::new(lo, hi, w.lo_open, w.hi_open).map_err(serde::de::Error::custom)
    }
}
