//! Exact arithmetic: rationals, polynomials over Q, and cyclotomic fields.

mod cyclo;
mod cyclotomic;
mod poly;
pub mod rational;

pub use cyclo::{canonicalize, CycloElem};
pub use cyclotomic::{cyclotomic_polynomial, totient};
pub use poly::CycloPoly;
pub use rational::Rational;

pub(crate) use cyclotomic::lcm;
