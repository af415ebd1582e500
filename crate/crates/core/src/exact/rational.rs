//! Exact rationals over arbitrary-precision integers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Exact fraction; always stored reduced with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den`, reduced. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Huge numerators/denominators: fall back to a scaled quotient.
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Parses `7`, `-3/4` or a finite decimal such as `0.25`.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    if let Some((whole, fraction)) = text.split_once('.') {
        let (negative, whole) = match whole.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        let digits = |s: &str| s.bytes().all(|b| b.is_ascii_digit());
        if fraction.is_empty() || !digits(fraction) || !digits(whole) {
            return None;
        }
        let whole: BigInt = if whole.is_empty() { BigInt::zero() } else { whole.parse().ok()? };
        let scale = BigInt::from(10u32).pow(fraction.len() as u32);
        let frac_part: BigInt = fraction.parse().ok()?;
        let value = Rational::new(whole * &scale + frac_part, scale);
        return Some(if negative { -value } else { value });
    }
    let n: BigInt = text.parse().ok()?;
    Some(Rational::from_integer(n))
}

/// Renders a rational as `n` or `n/d`.
pub fn render(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
