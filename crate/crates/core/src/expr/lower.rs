//! Lowering parsed expressions to trig terms and surds.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::parse::{parse, parse_equation, Expr, Func};
use crate::error::{Error, Result};
use crate::exact::rational::{int, to_f64};
use crate::exact::Rational;
use crate::gauss::{squarefree_decompose, SurdTarget};
use crate::trig::{TrigKind, TrigTerm};
use crate::verify::Identity;

/// `pi_coeff * pi + sum q_m sqrt(m) + sum of trig terms`. The `m = 1` entry
/// of `surds` is the rational part.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LinearForm {
    pub terms: Vec<TrigTerm>,
    pub surds: BTreeMap<u64, Rational>,
    pub pi_coeff: Rational,
}

impl LinearForm {
    fn rational(q: Rational) -> Self {
        let mut f = LinearForm::default();
        f.add_surd(1, q);
        f
    }

    fn add_surd(&mut self, m: u64, q: Rational) {
        let slot = self.surds.entry(m).or_insert_with(Rational::zero);
        *slot += q;
        if slot.is_zero() {
            self.surds.remove(&m);
        }
    }

    /// Only a rational number (possibly zero).
    pub fn as_rational(&self) -> Option<Rational> {
        if !self.terms.is_empty() || !self.pi_coeff.is_zero() {
            return None;
        }
        match self.surds.len() {
            0 => Some(Rational::zero()),
            1 => self.surds.get(&1).cloned(),
            _ => None,
        }
    }

    fn is_surd_only(&self) -> bool {
        self.terms.is_empty() && self.pi_coeff.is_zero()
    }

    /// Only a single `q sqrt(m)` (or a rational).
    pub fn as_surd(&self) -> Option<SurdTarget> {
        if !self.is_surd_only() || self.surds.len() > 1 {
            return None;
        }
        Some(match self.surds.iter().next() {
            Some((&m, q)) => SurdTarget { q: q.clone(), m },
            None => SurdTarget::rational(Rational::zero()),
        })
    }

    fn scale(mut self, c: &Rational) -> Self {
        for t in &mut self.terms {
            t.coeff *= c;
        }
        for q in self.surds.values_mut() {
            *q *= c;
        }
        self.surds.retain(|_, q| !q.is_zero());
        self.terms.retain(|t| !t.coeff.is_zero());
        self.pi_coeff *= c;
        self
    }

    fn add(mut self, other: LinearForm) -> Self {
        self.terms.extend(other.terms);
        for (m, q) in other.surds {
            self.add_surd(m, q);
        }
        self.pi_coeff += other.pi_coeff;
        self
    }

    fn neg(self) -> Self {
        self.scale(&int(-1))
    }

    pub fn eval_f64(&self) -> f64 {
        self.terms.iter().map(TrigTerm::value_f64).sum::<f64>()
            + self.surds.iter().map(|(&m, q)| to_f64(q) * (m as f64).sqrt()).sum::<f64>()
            + to_f64(&self.pi_coeff) * std::f64::consts::PI
    }
}

fn unsupported(e: &Expr, why: &str) -> Error {
    Error::Unsupported(format!("{why}: {e}"))
}

/// `sqrt(q)` for a nonnegative rational, with squares pulled out.
fn sqrt_rational(q: &Rational, e: &Expr) -> Result<LinearForm> {
    if q.is_negative() {
        return Err(unsupported(e, "square root of a negative number"));
    }
    // sqrt(p/r) = sqrt(p r) / r
    let radicand = (q.numer() * q.denom())
        .to_u64()
        .ok_or_else(|| unsupported(e, "radicand too large"))?;
    let target = SurdTarget::from_sqrt(Rational::new(BigInt::one(), q.denom().clone()), radicand);
    let mut f = LinearForm::default();
    f.add_surd(target.m, target.q);
    Ok(f)
}

fn integer_literal(e: &Expr) -> Option<i64> {
    match e {
        Expr::Num(q) if q.is_integer() => q.numer().to_i64(),
        Expr::Neg(inner) => integer_literal(inner).map(|k| -k),
        _ => None,
    }
}

/// Recognizes `pi`, `k pi`, `k pi / d`, `pi / d`, `k (pi / d)` and negations,
/// keeping the written denominator.
fn angle_literal(e: &Expr) -> Option<(i64, u64)> {
    match e {
        Expr::Pi => Some((1, 1)),
        Expr::Neg(inner) => angle_literal(inner).map(|(a, n)| (-a, n)),
        Expr::Mul(l, r) => match (l.as_ref(), r.as_ref()) {
            (k, inner) | (inner, k) if integer_literal(k).is_some() => {
                let (a, n) = angle_literal(inner)?;
                Some((a.checked_mul(integer_literal(k)?)?, n))
            }
            _ => None,
        },
        Expr::Div(num, den) => {
            let d = integer_literal(den).filter(|&d| d > 0)? as u64;
            let (a, n) = angle_literal(num)?;
            Some((a, n.checked_mul(d)?))
        }
        _ => None,
    }
}

fn trig_term(kind: TrigKind, arg: &Expr) -> Result<LinearForm> {
    let (a, n) = match angle_literal(arg) {
        Some(angle) => angle,
        None => {
            let form = lower(arg)?;
            let ok = form.terms.is_empty() && form.surds.is_empty();
            if !ok {
                return Err(unsupported(arg, "angle is not a rational multiple of pi"));
            }
            let r = form.pi_coeff;
            let a = r.numer().to_i64().ok_or_else(|| unsupported(arg, "angle too large"))?;
            let n = r.denom().to_u64().ok_or_else(|| unsupported(arg, "angle too large"))?;
            (a, n)
        }
    };
    Ok(LinearForm { terms: vec![TrigTerm::new(Rational::one(), kind, a, n)], ..Default::default() })
}

fn multiply(l: LinearForm, r: LinearForm, e: &Expr) -> Result<LinearForm> {
    if let Some(c) = l.as_rational() {
        return Ok(r.scale(&c));
    }
    if let Some(c) = r.as_rational() {
        return Ok(l.scale(&c));
    }
    if l.is_surd_only() && r.is_surd_only() {
        let mut out = LinearForm::default();
        for (&a, p) in &l.surds {
            for (&b, q) in &r.surds {
                // sqrt(a) sqrt(b) = gcd(a,b) sqrt(ab / gcd^2)
                let g = a.gcd(&b);
                let (s, m) = squarefree_decompose((a / g) * (b / g));
                out.add_surd(m, p * q * int((g * s) as i64));
            }
        }
        return Ok(out);
    }
    Err(unsupported(e, "nonlinear product"))
}

/// Flattens an expression into a [`LinearForm`]. Products and quotients are
/// allowed only when one side is a number (or both sides are surds).
pub fn lower(e: &Expr) -> Result<LinearForm> {
    match e {
        Expr::Num(q) => Ok(LinearForm::rational(q.clone())),
        Expr::Pi => Ok(LinearForm { pi_coeff: Rational::one(), ..Default::default() }),
        Expr::Neg(a) => Ok(lower(a)?.neg()),
        Expr::Add(a, b) => Ok(lower(a)?.add(lower(b)?)),
        Expr::Sub(a, b) => Ok(lower(a)?.add(lower(b)?.neg())),
        Expr::Mul(a, b) => multiply(lower(a)?, lower(b)?, e),
        Expr::Div(a, b) => {
            let num = lower(a)?;
            let den = lower(b)?;
            let Some(target) = den.as_surd() else {
                return Err(unsupported(e, "division by a non-constant"));
            };
            if target.q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            // x / (q sqrt m) = x sqrt(m) / (q m)
            let factor = target.q.clone() * int(target.m as i64);
            let root = if target.m == 1 {
                LinearForm::rational(Rational::one())
            } else {
                let mut f = LinearForm::default();
                f.add_surd(target.m, Rational::one());
                f
            };
            multiply(num, root, e).map(|f| f.scale(&factor.recip()))
        }
        Expr::Call(Func::Sqrt, arg) => {
            let inner = lower(arg)?;
            let q = inner.as_rational().ok_or_else(|| unsupported(arg, "sqrt of a non-rational"))?;
            sqrt_rational(&q, arg)
        }
        Expr::Call(Func::Sin, arg) => trig_term(TrigKind::Sin, arg),
        Expr::Call(Func::Cos, arg) => trig_term(TrigKind::Cos, arg),
        Expr::Call(Func::Tan, arg) => trig_term(TrigKind::Tan, arg),
    }
}

/// Lowers `lhs = rhs`: trig terms are collected on the left, constants and
/// surds on the right, which must reduce to a single `q sqrt(m)`.
pub fn lower_equation(lhs: &Expr, rhs: &Expr) -> Result<Identity> {
    let l = lower(lhs)?;
    let r = lower(rhs)?;
    let diff = l.add(r.neg());
    if !diff.pi_coeff.is_zero() {
        return Err(Error::Unsupported("bare multiple of pi outside a trig function".into()));
    }
    let constants = LinearForm { surds: diff.surds, ..Default::default() }.neg();
    let target = constants.as_surd().ok_or_else(|| {
        Error::Unsupported("constant side must be a single rational multiple of one square root".into())
    })?;
    Identity::new(diff.terms, target)
}

/// Parses and lowers `"<lhs> = <rhs>"`.
pub fn parse_identity(text: &str) -> Result<Identity> {
    let (lhs, rhs) = parse_equation(text)?;
    lower_equation(&lhs, &rhs)
}

/// Parses and lowers a left-hand side on its own (no `=`); constants are
/// rejected.
pub fn parse_terms(text: &str) -> Result<Vec<TrigTerm>> {
    let form = lower(&parse(text)?)?;
    if !form.surds.is_empty() || !form.pi_coeff.is_zero() {
        return Err(Error::Unsupported(format!("expected only trig terms: {text}")));
    }
    Ok(form.terms)
}

/// Parses a value such as `sqrt(11)`, `-2 sqrt(3)` or `5/2`.
pub fn parse_surd(text: &str) -> Result<SurdTarget> {
    lower(&parse(text)?)?
        .as_surd()
        .ok_or_else(|| Error::Unsupported(format!("not a single surd: {text}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn lowers_a_sine_term() {
        let f = lower(&parse("4 sin(2pi/11)").unwrap()).unwrap();
        assert_eq!(f.terms, vec![TrigTerm::sin(int(4), 2, 11)]);
        assert!(f.surds.is_empty());
    }

    #[test]
    fn lowers_surds() {
        assert_eq!(parse_surd("-sqrt(11)").unwrap(), SurdTarget { q: int(-1), m: 11 });
        assert_eq!(parse_surd("sqrt(12)").unwrap(), SurdTarget { q: int(2), m: 3 });
        assert_eq!(parse_surd("sqrt(3/4)").unwrap(), SurdTarget { q: frac(1, 2), m: 3 });
        assert_eq!(parse_surd("sqrt(3) sqrt(6)").unwrap(), SurdTarget { q: int(3), m: 2 });
        assert_eq!(parse_surd("1/sqrt(3)").unwrap(), SurdTarget { q: frac(1, 3), m: 3 });
        assert_eq!(parse_surd("5/2").unwrap(), SurdTarget { q: frac(5, 2), m: 1 });
    }

    #[test]
    fn rejects_nonlinear_products() {
        let err = lower(&parse("sin(pi/11)*sin(pi/7)").unwrap()).unwrap_err();
        assert!(matches!(err, Error::Unsupported(ref m) if m.contains("nonlinear")), "{err}");
        assert!(lower(&parse("sin(2)").unwrap()).is_err());
        assert!(lower(&parse("sqrt(-1)").unwrap()).is_err());
        assert!(lower(&parse("sqrt(pi)").unwrap()).is_err());
    }

    #[test]
    fn keeps_written_denominators() {
        let id = parse_identity("tan(6pi/9) + 4 sin(6pi/9) = sqrt(3)").unwrap();
        assert_eq!(id.lhs[0], TrigTerm::tan(int(1), 6, 9));
        // A computed angle is reduced.
        let f = lower(&parse("sin(pi/3 + pi/3)").unwrap()).unwrap();
        assert_eq!(f.terms, vec![TrigTerm::sin(int(1), 2, 3)]);
        let f = lower(&parse("sin(-2pi/7)").unwrap()).unwrap();
        assert_eq!(f.terms, vec![TrigTerm::sin(int(1), -2, 7)]);
    }

    #[test]
    fn equation_moves_terms_across() {
        let id = parse_identity("tan(3pi/11) = sqrt(11) - 4 sin(2pi/11)").unwrap();
        assert_eq!(id.lhs, vec![TrigTerm::tan(int(1), 3, 11), TrigTerm::sin(int(4), 2, 11)]);
        assert_eq!(id.rhs, SurdTarget { q: int(1), m: 11 });
        let id = parse_identity("2 cos(pi/3) - 1 = 0").unwrap();
        assert_eq!(id.rhs, SurdTarget::rational(int(1)));
        assert!(parse_identity("tan(pi/7) = sqrt(7) + sqrt(3)").is_err());
        assert!(parse_identity("tan(pi/7) = pi").is_err());
    }

    #[test]
    fn render_round_trip() {
        for text in [
            "tan(3pi/11) + 4 sin(2pi/11) = sqrt(11)",
            "tan(2pi/11) - 4 sin(5pi/11) = -sqrt(11)",
            "tan(pi/9) + 2 sin(pi/9) - 2 sin(2pi/9) + 2 sin(4pi/9) = sqrt(3)",
            "1/2 cos(pi/5) - 3/7 tan(pi/3) = -3/2 sqrt(15)",
        ] {
            let id = parse_identity(text).unwrap();
            assert_eq!(id.to_string(), text);
            assert_eq!(parse_identity(&id.to_string()).unwrap(), id);
        }
    }
}
