//! Text input: parsing expressions and lowering them to identities.

mod lower;
mod parse;

pub use lower::{lower, lower_equation, parse_identity, parse_surd, parse_terms, LinearForm};
pub use parse::{parse, parse_equation, Expr, Func};
