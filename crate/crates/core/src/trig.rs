//! Trig terms at rational multiples of pi and their exact images in Q(zeta_n).
//!
//! With `x = zeta_n = exp(2 pi i / n)` and `theta = a pi / n`:
//!
//! * `i tan(theta) = (x^a - 1) / (x^a + 1)`
//! * `i sin(theta) = (x^m - x^-m) / 2` where `x^m = exp(i theta)` for even `a`;
//!   odd `a` is first moved to the supplement `pi - theta`, whose numerator
//!   `n - a` is even when `n` is odd.
//! * `cos(theta)` likewise, with a sign flip for the supplement.
//!
//! Only odd denominators embed: for odd `n`, `x^a != -1`, so `i tan` is always
//! defined and every value stays inside Q(zeta_n) rather than Q(zeta_2n).

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{frac, render, to_f64};
use crate::exact::{CycloElem, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TrigKind {
    Tan,
    Sin,
    Cos,
}

impl TrigKind {
    pub fn name(self) -> &'static str {
        match self {
            TrigKind::Tan => "tan",
            TrigKind::Sin => "sin",
            TrigKind::Cos => "cos",
        }
    }

    pub fn eval(self, theta: f64) -> f64 {
        match self {
            TrigKind::Tan => theta.tan(),
            TrigKind::Sin => theta.sin(),
            TrigKind::Cos => theta.cos(),
        }
    }
}

/// The angle `a pi / n`. Not reduced by gcd: `pi/11` and `2pi/22` are
/// distinct specs that compare equal through [`AngleSpec::same_angle`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AngleSpec {
    pub a: i64,
    pub n: u64,
}

impl AngleSpec {
    pub fn new(a: i64, n: u64) -> Self {
        AngleSpec { a, n }
    }

    pub fn same_angle(&self, other: &AngleSpec) -> bool {
        self.a as i128 * other.n as i128 == other.a as i128 * self.n as i128
    }

    pub fn radians(&self) -> f64 {
        std::f64::consts::PI * self.a as f64 / self.n as f64
    }
}

impl fmt::Display for AngleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.a {
            0 => write!(f, "0"),
            1 => write!(f, "pi"),
            -1 => write!(f, "-pi"),
            a => write!(f, "{a}pi"),
        }?;
        if self.n != 1 && self.a != 0 {
            write!(f, "/{}", self.n)?;
        }
        Ok(())
    }
}

/// `coeff * kind(a pi / n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrigTerm {
    pub coeff: Rational,
    pub kind: TrigKind,
    pub a: i64,
    pub n: u64,
}

impl TrigTerm {
    pub fn new(coeff: Rational, kind: TrigKind, a: i64, n: u64) -> Self {
        TrigTerm { coeff, kind, a, n }
    }

    pub fn tan(coeff: Rational, a: i64, n: u64) -> Self {
        Self::new(coeff, TrigKind::Tan, a, n)
    }

    pub fn sin(coeff: Rational, a: i64, n: u64) -> Self {
        Self::new(coeff, TrigKind::Sin, a, n)
    }

    pub fn cos(coeff: Rational, a: i64, n: u64) -> Self {
        Self::new(coeff, TrigKind::Cos, a, n)
    }

    pub fn angle(&self) -> AngleSpec {
        AngleSpec::new(self.a, self.n)
    }

    pub fn value_f64(&self) -> f64 {
        to_f64(&self.coeff) * self.kind.eval(self.angle().radians())
    }

    /// Same value, angle rewritten over the denominator `n`, a multiple of
    /// the current one.
    pub fn rescale(&self, n: u64) -> Option<TrigTerm> {
        (n % self.n == 0).then(|| TrigTerm { a: self.a * (n / self.n) as i64, n, ..self.clone() })
    }

    /// Reduces the angle by the period of the function: `0 <= a < n` for tan,
    /// `0 <= a < 2n` for sin and cos. Terms whose value is zero come back
    /// with coefficient zero, and a zero angle is written as `0/1`.
    pub fn canonicalize_term(&self) -> Result<TrigTerm> {
        if self.n == 0 {
            return Err(Error::ZeroOrder);
        }
        let n = self.n as i64;
        let mut t = self.clone();
        match t.kind {
            TrigKind::Tan => {
                t.a = t.a.rem_euclid(n);
                if 2 * t.a == n {
                    return Err(Error::UndefinedTangent { a: self.a, n: self.n });
                }
                if t.a == 0 {
                    t.coeff = Rational::zero();
                }
            }
            TrigKind::Sin => {
                t.a = t.a.rem_euclid(2 * n);
                if t.a == 0 || t.a == n {
                    t.coeff = Rational::zero();
                }
            }
            TrigKind::Cos => {
                t.a = t.a.rem_euclid(2 * n);
                if 2 * t.a == n || 2 * t.a == 3 * n {
                    t.coeff = Rational::zero();
                }
            }
        }
        if t.coeff.is_zero() || t.a == 0 {
            t.a = 0;
            t.n = 1;
        }
        Ok(t)
    }

    /// Rewrites the term with its angle in `[0, pi/2]`, moving any sign into
    /// the coefficient (tan and sin are odd, sin and cos are symmetric about
    /// pi/2 up to sign).
    pub fn first_quadrant(&self) -> Result<TrigTerm> {
        let mut t = self.canonicalize_term()?;
        if t.coeff.is_zero() {
            return Ok(t);
        }
        let n = t.n as i64;
        match t.kind {
            TrigKind::Tan => {
                if 2 * t.a > n {
                    t.a = n - t.a;
                    t.coeff = -t.coeff;
                }
            }
            TrigKind::Sin => {
                if t.a > n {
                    t.a -= n;
                    t.coeff = -t.coeff;
                }
                if 2 * t.a > n {
                    t.a = n - t.a;
                }
            }
            TrigKind::Cos => {
                if t.a > n {
                    t.a = 2 * n - t.a;
                }
                if 2 * t.a > n {
                    t.a = n - t.a;
                    t.coeff = -t.coeff;
                }
            }
        }
        Ok(t)
    }

    /// The exact value of `i * self` as an element of Q(zeta_L), L = lcm(4, n).
    pub fn times_i_embed(&self) -> Result<CycloElem> {
        let l = crate::exact::lcm(4, self.n);
        let inner = match self.kind {
            TrigKind::Tan => i_tan_embed(self.a, self.n)?.embed(l)?,
            TrigKind::Sin => i_sin_embed(self.a, self.n)?.embed(l)?,
            TrigKind::Cos => {
                let i = CycloElem::zeta_pow(l, (l / 4) as i64)?;
                &cos_embed(self.a, self.n)?.embed(l)? * &i
            }
        };
        Ok(inner.scale(&self.coeff))
    }
}

impl fmt::Display for TrigTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let call = format!("{}({})", self.kind.name(), self.angle());
        if self.coeff.is_one() {
            write!(f, "{call}")
        } else if (-&self.coeff).is_one() {
            write!(f, "-{call}")
        } else {
            write!(f, "{} {call}", render(&self.coeff))
        }
    }
}

fn require_odd(n: u64) -> Result<()> {
    match n {
        0 => Err(Error::ZeroOrder),
        n if n % 2 == 0 => Err(Error::EvenDenominator(n)),
        _ => Ok(()),
    }
}

/// Exponent m with `x^m = +-exp(i a pi / n)` and whether the supplement (and
/// thus a sign flip for cos) was used.
fn half_exponent(a: i64, n: u64) -> (i64, bool) {
    let n = n as i64;
    let a = a.rem_euclid(2 * n);
    if a % 2 == 0 {
        (a / 2, false)
    } else {
        ((n - a) / 2, true)
    }
}

/// `i tan(a pi / n) = (x^a - 1)/(x^a + 1)` in Q(zeta_n), n odd.
pub fn i_tan_embed(a: i64, n: u64) -> Result<CycloElem> {
    if n != 0 && n % 2 == 0 && (2 * a).rem_euclid(2 * n as i64) == n as i64 {
        return Err(Error::UndefinedTangent { a, n });
    }
    require_odd(n)?;
    let y = CycloElem::zeta_pow(n, a)?;
    let one = CycloElem::one(n)?;
    (&y - &one).checked_div(&(&y + &one))
}

/// `i sin(a pi / n) = (x^m - x^(n-m))/2` in Q(zeta_n), n odd.
pub fn i_sin_embed(a: i64, n: u64) -> Result<CycloElem> {
    require_odd(n)?;
    let (m, _) = half_exponent(a, n);
    let half = frac(1, 2);
    CycloElem::from_exponents(n, [(m, half.clone()), (-m, -half)])
}

/// `cos(a pi / n) = +-(x^m + x^(n-m))/2` in Q(zeta_n), n odd.
pub fn cos_embed(a: i64, n: u64) -> Result<CycloElem> {
    require_odd(n)?;
    let (m, flipped) = half_exponent(a, n);
    let half = if flipped { frac(-1, 2) } else { frac(1, 2) };
    CycloElem::from_exponents(n, [(m, half.clone()), (-m, half)])
}

/// Sign-insensitive ordering key: (kind, angle as a multiple of pi, denominator).
pub(crate) fn term_key(t: &TrigTerm) -> (TrigKind, Rational, u64) {
    (t.kind, frac(t.a, t.n as i64), t.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;
    use num_complex::Complex64;

    fn close(z: Complex64, w: Complex64, tol: f64) -> bool {
        (z - w).norm() < tol
    }

    #[test]
    fn canonicalize_term_examples() {
        let t = TrigTerm::tan(int(1), 14, 11).canonicalize_term().unwrap();
        assert_eq!(t, TrigTerm::tan(int(1), 3, 11));
        let s = TrigTerm::sin(int(4), 11, 11).canonicalize_term().unwrap();
        assert!(s.coeff.is_zero());
        assert_eq!(
            TrigTerm::tan(int(1), 1, 2).canonicalize_term(),
            Err(Error::UndefinedTangent { a: 1, n: 2 })
        );
        assert!(TrigTerm::cos(int(1), 3, 2).canonicalize_term().unwrap().coeff.is_zero());
        assert!(TrigTerm::tan(int(5), 22, 11).canonicalize_term().unwrap().coeff.is_zero());
    }

    #[test]
    fn canonicalize_term_idempotent() {
        for kind in [TrigKind::Tan, TrigKind::Sin, TrigKind::Cos] {
            for a in -40..40 {
                let Ok(t) = TrigTerm::new(int(3), kind, a, 9).canonicalize_term() else { continue };
                assert_eq!(t.canonicalize_term().unwrap(), t);
                assert!((t.value_f64() - TrigTerm::new(int(3), kind, a, 9).value_f64()).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn first_quadrant_preserves_value() {
        for kind in [TrigKind::Tan, TrigKind::Sin, TrigKind::Cos] {
            for a in -30..30 {
                let t = TrigTerm::new(int(2), kind, a, 11);
                let q = t.first_quadrant().unwrap();
                assert!(2 * q.a <= 11 && q.a >= 0);
                assert!((t.value_f64() - q.value_f64()).abs() < 1e-9, "{t} vs {q}");
            }
        }
    }

    #[test]
    fn i_tan_examples() {
        let expected = CycloElem::from_exponents(
            11,
            [(1, -1), (2, -1), (3, 1), (4, 1), (5, 1), (6, -1), (7, -1), (8, -1), (9, 1), (10, 1)]
                .map(|(e, c)| (e, int(c))),
        )
        .unwrap();
        assert_eq!(i_tan_embed(3, 11).unwrap(), expected);
        assert!(i_tan_embed(0, 11).unwrap().is_zero());
        assert_eq!(i_tan_embed(14, 11).unwrap(), expected);
        assert_eq!(i_tan_embed(1, 10), Err(Error::EvenDenominator(10)));
        assert_eq!(i_tan_embed(5, 10), Err(Error::UndefinedTangent { a: 5, n: 10 }));
    }

    #[test]
    fn i_sin_examples() {
        let half = frac(1, 2);
        let e = |a, b| CycloElem::from_exponents(11, [(a, half.clone()), (b, -half.clone())]).unwrap();
        assert_eq!(i_sin_embed(2, 11).unwrap(), e(1, 10));
        assert_eq!(i_sin_embed(3, 11).unwrap(), e(4, 7));
        assert!(i_sin_embed(0, 11).unwrap().is_zero());
        assert_eq!(i_sin_embed(2, 12), Err(Error::EvenDenominator(12)));
    }

    #[test]
    fn cos_examples() {
        assert_eq!(cos_embed(0, 3).unwrap(), CycloElem::one(3).unwrap());
        assert_eq!(cos_embed(2, 3).unwrap(), CycloElem::from_rational(3, frac(-1, 2)).unwrap());
        let expected = CycloElem::from_exponents(11, [(5, frac(-1, 2)), (6, frac(-1, 2))]).unwrap();
        assert_eq!(cos_embed(1, 11).unwrap(), expected);
    }

    #[test]
    fn embeddings_match_floating_point() {
        for n in (1..=51u64).step_by(2) {
            for a in 0..2 * n as i64 {
                let theta = std::f64::consts::PI * a as f64 / n as f64;
                let tan = i_tan_embed(a, n).unwrap().eval_numeric();
                assert!(close(tan, Complex64::new(0.0, theta.tan()), 1e-10 * (1.0 + theta.tan().abs())));
                let sin = i_sin_embed(a, n).unwrap().eval_numeric();
                assert!(close(sin, Complex64::new(0.0, theta.sin()), 1e-10));
                let cos = cos_embed(a, n).unwrap().eval_numeric();
                assert!(close(cos, Complex64::new(theta.cos(), 0.0), 1e-10));
            }
        }
    }

    #[test]
    fn symmetries_are_exact() {
        for n in (3..=31u64).step_by(2) {
            let ni = n as i64;
            for a in 0..ni {
                assert!((i_tan_embed(a, n).unwrap() + i_tan_embed(ni - a, n).unwrap()).is_zero());
            }
            for a in 0..2 * ni {
                assert_eq!(i_sin_embed(2 * ni - a, n).unwrap(), -i_sin_embed(a, n).unwrap());
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(TrigTerm::sin(int(4), 2, 11).to_string(), "4 sin(2pi/11)");
        assert_eq!(TrigTerm::tan(int(-1), 1, 7).to_string(), "-tan(pi/7)");
        assert_eq!(TrigTerm::cos(frac(3, 2), 2, 1).to_string(), "3/2 cos(2pi)");
    }
}
