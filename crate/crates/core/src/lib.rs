//! eds-forge: an exact engine for elliptic divisibility sequences attached
//! to a point of infinite order on an elliptic curve over F_p(t).
//!
//! The crate computes the divisor terms D_nP from valuations of x(nP) on
//! per-place minimal models, classifies local reduction data with Tate's
//! algorithm (valid in residue characteristics 2 and 3), runs a
//! constant-curve mode driven by division polynomials, and cross-checks the
//! computed primitivity patterns against a built-in catalog of curves with
//! known behavior.

pub mod curve;
pub mod divisor;
pub mod divpoly;
pub mod eds;
pub mod error;
pub mod field;
pub mod local;
pub mod normal;
pub mod poly;
pub mod ratfunc;

pub use error::Error;
pub use field::{Field, FieldElement, FieldLike};
pub use poly::{factor, Poly, UPoly};
pub use ratfunc::RatFunc;
