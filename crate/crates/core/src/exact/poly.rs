//! Dense univariate polynomials over the rationals.
//!
//! This is scratch representation: values live here before they are reduced
//! modulo a cyclotomic polynomial and become [`CycloElem`](super::CycloElem)s.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{int, render, Rational};
use crate::error::{Error, Result};

/// Coefficients in ascending degree; no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CycloPoly {
    coeffs: Vec<Rational>,
}

impl CycloPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        CycloPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        CycloPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        CycloPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Makes the leading coefficient 1. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) if !lead.is_one() => self.scale(&lead.recip()),
            _ => self.clone(),
        }
    }

    /// Euclidean division over Q: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &CycloPoly) -> Result<(CycloPoly, CycloPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = &rem[i] * &lead_inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                if !d.is_zero() {
                    rem[i - dd + j] -= &c * d;
                }
            }
            quot[i - dd] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g`, `g` monic
    /// (or zero when both inputs are zero).
    pub fn ext_gcd(a: &CycloPoly, b: &CycloPoly) -> (CycloPoly, CycloPoly, CycloPoly) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1).expect("nonzero divisor");
            let s = &s0 - &(&q * &s1);
            let t = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            Some(lead) => {
                let inv = lead.recip();
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
            None => (r0, s0, t0),
        }
    }
}

impl Add for &CycloPoly {
    type Output = CycloPoly;

    fn add(self, rhs: &CycloPoly) -> CycloPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += s;
        }
        CycloPoly::new(coeffs)
    }
}

impl Neg for &CycloPoly {
    type Output = CycloPoly;

    fn neg(self) -> CycloPoly {
        CycloPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &CycloPoly {
    type Output = CycloPoly;

    fn sub(self, rhs: &CycloPoly) -> CycloPoly {
        self + &(-rhs)
    }
}

impl Mul for &CycloPoly {
    type Output = CycloPoly;

    fn mul(self, rhs: &CycloPoly) -> CycloPoly {
        if self.is_zero() || rhs.is_zero() {
            return CycloPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in rhs.coeffs.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                out[i + j] += a * b;
            }
        }
        CycloPoly::new(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $f:ident),*) => {$(
        impl $tr for CycloPoly {
            type Output = CycloPoly;
            fn $f(self, rhs: CycloPoly) -> CycloPoly {
                (&self).$f(&rhs)
            }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for CycloPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "x")
    }
}

/// Writes `c0 + c1 v + c2 v^2 ...`, skipping zero terms.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[Rational], var: &str) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let negative = c < &Rational::zero();
        let mag = if negative { -c } else { c.clone() };
        match (first, negative) {
            (true, true) => write!(f, "-")?,
            (true, false) => {}
            (false, true) => write!(f, " - ")?,
            (false, false) => write!(f, " + ")?,
        }
        first = false;
        let monomial = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if monomial.is_empty() {
            write!(f, "{}", render(&mag))?;
        } else if mag.is_one() {
            write!(f, "{monomial}")?;
        } else {
            write!(f, "{}*{monomial}", render(&mag))?;
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::frac;

    #[test]
    fn division_recovers_dividend() {
        let a = CycloPoly::from_ints(&[3, 0, -2, 5, 1]);
        let b = CycloPoly::new(vec![frac(1, 2), int(0), int(3)]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().map_or(true, |d| d < 2));
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(CycloPoly::one().div_rem(&CycloPoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn ext_gcd_bezout() {
        // (x-1)(x+2) and (x-1)(x^2+1): gcd x-1
        let a = CycloPoly::from_ints(&[-2, 1, 1]);
        let b = CycloPoly::from_ints(&[-1, 1, -1, 1]);
        let (g, s, t) = CycloPoly::ext_gcd(&a, &b);
        assert_eq!(g, CycloPoly::from_ints(&[-1, 1]));
        assert_eq!(&(&s * &a) + &(&t * &b), g);
    }

    #[test]
    fn display() {
        let p = CycloPoly::new(vec![int(-1), int(0), frac(3, 2), int(-1)]);
        assert_eq!(p.to_string(), "-1 + 3/2*x^2 - x^3");
        assert_eq!(CycloPoly::zero().to_string(), "0");
    }
}
