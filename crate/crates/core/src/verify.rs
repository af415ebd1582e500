//! Exact verification of `sum of trig terms = q sqrt(m)`.
//!
//! Both sides are multiplied by `i`, which turns tan and sin terms into
//! elements of Q(zeta_n) (see [`crate::trig`]) and `sqrt(m)` into a Gauss sum.
//! Everything is embedded into a single field Q(zeta_L) with
//! `L = lcm(4, denominators, m)`, and the identity holds iff the difference
//! reduces to zero modulo Phi_L.

use std::fmt;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::{lcm, CycloElem, Rational};
use crate::gauss::SurdTarget;
use crate::trig::{term_key, TrigKind, TrigTerm};

/// A claimed identity `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: Vec<TrigTerm>,
    pub rhs: SurdTarget,
}

impl Identity {
    /// Canonicalizes every term, drops zero terms, and checks that the
    /// identity can be embedded (odd denominators, odd squarefree `m`).
    pub fn new(lhs: Vec<TrigTerm>, rhs: SurdTarget) -> Result<Self> {
        let mut terms = Vec::with_capacity(lhs.len());
        for t in lhs {
            if t.n % 2 == 0 {
                return Err(Error::EvenDenominator(t.n));
            }
            let t = t.canonicalize_term()?;
            if !t.coeff.is_zero() {
                terms.push(t);
            }
        }
        if rhs.m % 2 == 0 {
            return Err(Error::UnsupportedSurd(rhs.m));
        }
        Ok(Identity { lhs: terms, rhs })
    }

    pub fn lhs_f64(&self) -> f64 {
        self.lhs.iter().map(TrigTerm::value_f64).sum()
    }

    /// `lhs - rhs` in double precision.
    pub fn numeric_residual(&self) -> f64 {
        self.lhs_f64() - self.rhs.value_f64()
    }

    /// Smallest L such that every term and the right-hand side embed in Q(zeta_L).
    pub fn field_order(&self) -> u64 {
        self.lhs.iter().fold(lcm(4, self.rhs.m), |acc, t| lcm(acc, t.n))
    }

    /// Canonical form used for deduplication and equivalence: angles moved
    /// into `[0, pi/2]` and reduced by gcd, like terms merged, terms sorted by
    /// (kind, angle), and the whole identity negated if needed so that the
    /// leading (tan) coefficient is positive.
    pub fn normalized(&self) -> Result<Identity> {
        let mut terms: Vec<TrigTerm> = Vec::new();
        for t in &self.lhs {
            let mut t = t.first_quadrant()?;
            if t.coeff.is_zero() {
                continue;
            }
            let g = (t.a as u64).gcd(&t.n);
            t.a /= g as i64;
            t.n /= g;
            match terms.iter_mut().find(|u| u.kind == t.kind && u.a == t.a && u.n == t.n) {
                Some(u) => u.coeff += &t.coeff,
                None => terms.push(t),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        terms.sort_by(|x, y| term_key(x).cmp(&term_key(y)));
        let mut rhs = self.rhs.clone();
        if terms.first().is_some_and(|t| t.coeff.is_negative()) {
            for t in &mut terms {
                t.coeff = -&t.coeff;
            }
            rhs = rhs.negated();
        }
        Ok(Identity { lhs: terms, rhs })
    }

    /// Same claim up to rewriting (see [`Identity::normalized`]).
    pub fn equivalent(&self, other: &Identity) -> bool {
        matches!((self.normalized(), other.normalized()), (Ok(a), Ok(b)) if a == b)
    }

    /// The left-hand side alone, rendered as in `Display`.
    pub fn lhs_string(&self) -> String {
        struct Lhs<'a>(&'a [TrigTerm]);
        impl fmt::Display for Lhs<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_sum(f, self.0)
            }
        }
        Lhs(&self.lhs).to_string()
    }

    pub fn tan_terms(&self) -> impl Iterator<Item = &TrigTerm> {
        self.lhs.iter().filter(|t| t.kind == TrigKind::Tan)
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_sum(f, &self.lhs)?;
        write!(f, " = {}", self.rhs)
    }
}

pub(crate) fn write_sum(f: &mut fmt::Formatter<'_>, terms: &[TrigTerm]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (k, t) in terms.iter().enumerate() {
        if k == 0 {
            write!(f, "{t}")?;
        } else if t.coeff.is_negative() {
            write!(f, " - {}", TrigTerm { coeff: -&t.coeff, ..t.clone() })?;
        } else {
            write!(f, " + {t}")?;
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct VerifyResult {
    pub holds: bool,
    /// L, with every quantity computed in Q(zeta_L).
    pub field_order: u64,
    /// `i * lhs - i * rhs`; zero iff the identity holds.
    pub residual: CycloElem,
    /// `lhs - rhs` in double precision, for diagnostics only.
    pub numeric_residual: f64,
}

/// Decides `id` exactly.
pub fn verify(id: &Identity) -> Result<VerifyResult> {
    let l = id.field_order();
    let mut residual = -id.rhs.times_i_embed()?.embed(l)?;
    for t in &id.lhs {
        residual = &residual + &t.times_i_embed()?.embed(l)?;
    }
    Ok(VerifyResult {
        holds: residual.is_zero(),
        field_order: l,
        residual,
        numeric_residual: id.numeric_residual(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, q: &Rational) -> Rational {
        match self {
            Sign::Plus => q.clone(),
            Sign::Minus => -q,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// The sign `s` for which `lhs = s q_abs sqrt(m)` holds exactly, if any.
pub fn resolve_sign(lhs: &[TrigTerm], q_abs: &Rational, m: u64) -> Result<Option<Sign>> {
    let mut found = None;
    for sign in [Sign::Plus, Sign::Minus] {
        let id = Identity::new(lhs.to_vec(), SurdTarget::new(sign.apply(q_abs), m)?)?;
        if verify(&id)?.holds {
            if found.is_some() {
                // Only possible when q_abs sqrt(m) is zero.
                debug_assert!(q_abs.is_zero());
                return Ok(found);
            }
            found = Some(sign);
        }
    }
    Ok(found)
}
