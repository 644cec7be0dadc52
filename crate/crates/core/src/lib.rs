//! Verification toolkit for a family of planar harmonic mappings and for the
//! sharp second Hankel determinant of logarithmic inverse coefficients.
//!
//! The crate is organized around five subsystems:
//!
//! - [`polycert`] — exact big-rational sign certification for univariate
//!   polynomials, `P + Q*sqrt(D)` expressions, and bivariate polynomials on
//!   boxes (Sturm chains, square-free decomposition, Bernstein enclosures).
//! - [`hypergeom`] — the Gauss hypergeometric value `2F1(1, 1/a; 1 + 1/a; r)`
//!   by series and by quadrature, and the starlikeness-radius solver built
//!   on it.
//! - [`harmonic`] — the two-parameter harmonic family: membership sampling,
//!   sharp coefficient/growth/Jacobian bounds, and extremal constructors.
//! - [`hankel`] — coefficient functionals, the Schwarz-parameter pipeline,
//!   the disk-maximum closed form with its grid oracle, the sharp bound and
//!   a brute-force global maximizer.
//! - [`certsuite`] — the fixed ledger of certifiable sign claims together
//!   with the crossing-point root finder and the bound comparison table.

pub mod certsuite;
pub mod hankel;
pub mod harmonic;
pub mod hypergeom;
pub mod polycert;
