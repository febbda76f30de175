//! Exact linear duality toolkit.
//!
//! Everything runs over arbitrary-precision rationals, so optima,
//! certificates, and relaxation bounds are exact, never approximate:
//!
//! - [`rat`]: canonical rationals and the nonnegative weight subtype.
//! - [`ext`]: the rationals extended with `bot` and `top`, with the
//!   asymmetric arithmetic where `bot` absorbs (`bot + top = bot`,
//!   `0 • bot = bot`) and weighted vector/matrix products.
//! - [`mat`]: dense matrices, exact products, block assembly, and a
//!   fraction-free determinant.
//! - [`farkas`]: theorem-of-alternatives solvers producing independently
//!   verifiable primal or dual certificates, plus an exact two-phase
//!   simplex for canonical programs.
//! - [`lp`]: standard programs (minimized, `A x <= b`, `x >= 0`), the
//!   dualization `<-A^T, c, b>`, four-valued optima, and duality reports.
//! - [`elp`]: programs with infinite entries, their six validity
//!   conditions, the extended Farkas reduction, and extended duality.
//! - [`vcsp`]: valued constraint satisfaction instances, fractional
//!   operations, the Max-Cut property, and the basic LP relaxation.

pub mod elp;
pub mod ext;
pub mod farkas;
pub mod lp;
pub mod mat;
pub mod rat;
mod simplex;
pub mod vcsp;

pub use ext::{dot_weig, Ext};
pub use farkas::{
    canonical_lp_minimize, farkas_equality, farkas_inequality, solve_linear_alternative,
    verify_certificate, AlternativeKind, Certificate, MinResult,
};
pub use lp::{opposites_opt, CanonicalLP, DualityReport, Optimum, StandardLP};
pub use mat::{dot, Mat};
pub use rat::{NNRat, Rat};
