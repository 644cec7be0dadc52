//! Exact-arithmetic sign certification for univariate rational polynomials,
//! expressions of the form `P + Q*sqrt(D)`, and bivariate polynomials on
//! rectangular boxes.
//!
//! Everything here works over `BigRational`; no floating point enters any
//! verdict. Certificates are either `Certified`, `Refuted` (with an exact
//! rational witness where one exists), or `Inconclusive` (box subdivision
//! hit its width floor without a decision).

mod boxcert;
mod certify;
mod interval;
mod poly;
mod sqrt_expr;
mod sturm;

pub use boxcert::{certify_box_sign, BivariatePoly, Box2, BoxCertConfig, BoxCertificate};
pub use certify::{certify_sign, holds_sign, Certificate, PointSign, SignClaim, Verdict};
pub use interval::RationalInterval;
pub use poly::RationalPoly;
pub use sqrt_expr::{certify_sqrt_sign, sqrt_expr_sign_at, SqrtExpr};
pub use sturm::{count_real_roots, isolate_root, sturm_chain};

#[cfg(test)]
use num_rational::BigRational;
use thiserror::Error;

/// Errors shared by the certification operations.
#[derive(Debug, Error)]
pub enum PolyCertError {
    #[error("degenerate input: zero polynomial")]
    DegenerateInput,
    #[error("degenerate interval")]
    DegenerateInterval,
    #[error("invalid interval: lo > hi, or equal endpoints marked open")]
    InvalidInterval,
    #[error("radicand sign unverified on the given interval")]
    RadicandUnverified,
    #[error("expected exactly one root in the bracket, found {0}")]
    RootCountMismatch(usize),
    #[error("cannot parse rational literal {0:?}")]
    BadRationalLiteral(String),
}

#[cfg(test)]
pub(crate) fn big(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

#[cfg(test)]
pub(crate) fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}
