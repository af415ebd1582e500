//! Exact verification and discovery of identities of the form
//!
//! ```text
//! sum c_i tan(a_i pi / n) + sum d_j sin(b_j pi / n) = q sqrt(m)
//! ```
//!
//! Every claim is decided by arithmetic in a cyclotomic field Q(zeta_L): both
//! sides are multiplied by `i`, mapped to canonical residues modulo Phi_L, and
//! compared coefficient by coefficient. Floating point is used only for
//! prefiltering and diagnostics.

pub mod discover;
pub mod error;
pub mod exact;
pub mod expr;
pub mod gauss;
pub mod reduction;
pub mod trig;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{CycloElem, CycloPoly, Rational};
pub use expr::parse_identity;
pub use verify::{verify, Identity, VerifyResult};
