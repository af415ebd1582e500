//! The squaring reduction for `tan a + B sin b = C` and the two families of
//! solutions it produces.
//!
//! Multiplying by `cos a` and squaring turns the equation into a linear
//! relation among cosines of `2a`, `2a +- b`, `2a +- 2b` and `2b`
//! ([`square_reduce`]). Choosing `B = 4` and then `C^2` so that most
//! coefficients agree leaves a relation whose angles are mostly an arithmetic
//! progression, which [`cos_ap_sum`] collapses. Forcing the remaining angle
//! into the progression gives the two families below.

use std::f64::consts::PI;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{int, render, to_f64};
use crate::exact::Rational;
use crate::gauss::SurdTarget;
use crate::trig::{AngleSpec, TrigTerm};
use crate::verify::{resolve_sign, Identity, Sign};

/// `coeff * cos(alpha a + beta b)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosineTerm {
    pub coeff: Rational,
    pub alpha: i64,
    pub beta: i64,
}

/// `constant = sum coeff cos(alpha a + beta b)`
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosineRelation {
    pub constant: Rational,
    pub terms: Vec<CosineTerm>,
}

impl CosineRelation {
    /// Builds a relation, merging repeated `(alpha, beta)` slots and dropping
    /// zero coefficients.
    pub fn new(constant: Rational, slots: impl IntoIterator<Item = (Rational, i64, i64)>) -> Self {
        let mut terms: Vec<CosineTerm> = Vec::new();
        for (coeff, alpha, beta) in slots {
            match terms.iter_mut().find(|t| t.alpha == alpha && t.beta == beta) {
                Some(t) => t.coeff += coeff,
                None => terms.push(CosineTerm { coeff, alpha, beta }),
            }
        }
        terms.retain(|t| !t.coeff.is_zero());
        CosineRelation { constant, terms }
    }

    pub fn coeff(&self, alpha: i64, beta: i64) -> Rational {
        self.terms
            .iter()
            .find(|t| t.alpha == alpha && t.beta == beta)
            .map_or_else(Rational::zero, |t| t.coeff.clone())
    }

    /// `constant - sum coeff cos(alpha a + beta b)` at the given angles.
    pub fn residual(&self, a: f64, b: f64) -> f64 {
        let rhs: f64 = self
            .terms
            .iter()
            .map(|t| to_f64(&t.coeff) * (t.alpha as f64 * a + t.beta as f64 * b).cos())
            .sum();
        to_f64(&self.constant) - rhs
    }
}

impl fmt::Display for CosineRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} =", render(&self.constant))?;
        for (k, t) in self.terms.iter().enumerate() {
            let negative = t.coeff < Rational::zero();
            let mag = if negative { -&t.coeff } else { t.coeff.clone() };
            let op = match (k, negative) {
                (0, true) => " -",
                (0, false) => "",
                (_, true) => " -",
                (_, false) => " +",
            };
            let angle = match (t.alpha, t.beta) {
                (0, beta) => format!("{beta}b"),
                (alpha, 0) => format!("{alpha}a"),
                (alpha, beta) if beta < 0 => format!("{alpha}a-{}b", -beta),
                (alpha, beta) => format!("{alpha}a+{beta}b"),
            };
            write!(f, "{op} {} cos({angle})", render(&mag))?;
        }
        Ok(())
    }
}

/// The squared form of `tan a + B sin b = C`, given `B` and `C^2`.
pub fn square_reduce(b: &Rational, c2: &Rational) -> CosineRelation {
    let two = int(2);
    let b2 = b * b;
    let constant = (&two - &two * c2 + &b2) / int(4);
    CosineRelation::new(
        constant,
        [
            ((&two + &two * c2 - &b2) / int(4), 2, 0),
            (&b2 / int(8), 2, 2),
            (&b2 / int(8), 2, -2),
            (b / &two, 2, 1),
            (&b2 / int(4), 0, 2),
            (-(b / &two), 2, -1),
        ],
    )
}

/// `sum_{k<n} cos(x + k y)` in closed form. At the removable singularity
/// `sin(y/2) = 0` the value is `n cos x`.
pub fn cos_ap_sum(x: f64, y: f64, n: u32) -> f64 {
    // Shifting y by a multiple of 2 pi leaves every cos(x + k y) unchanged and
    // keeps sin(y/2) away from cancellation near 2 pi k.
    let y = y - 2.0 * PI * (y / (2.0 * PI)).round();
    let half = y / 2.0;
    let s = half.sin();
    if s == 0.0 {
        return n as f64 * x.cos();
    }
    let n = n as f64;
    (x + (n - 1.0) * half).cos() * (n * half).sin() / s
}

/// One member of a family before reduction: parameter `k`, the angles, and
/// the exactly resolved sign of `C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParam {
    pub k: i64,
    pub a: AngleSpec,
    pub b: AngleSpec,
    pub sign: Sign,
}

#[derive(Clone, Debug)]
pub struct IdentityFamily {
    pub description: String,
    /// Distinct identities in normalized form, in order of first appearance.
    pub members: Vec<Identity>,
    pub parameterization: Vec<FamilyParam>,
}

impl IdentityFamily {
    pub fn sign_table(&self) -> Vec<(i64, Sign)> {
        self.parameterization.iter().map(|p| (p.k, p.sign)).collect()
    }

    pub fn sign_of(&self, k: i64) -> Option<Sign> {
        self.parameterization.iter().find(|p| p.k == k).map(|p| p.sign)
    }
}

/// Resolves `tan a + B sin b = +-sqrt(m)` exactly for each candidate and
/// collects the normalized identities.
fn solve_candidates(
    description: String,
    coeff_b: &Rational,
    m: u64,
    candidates: impl IntoIterator<Item = (i64, AngleSpec, AngleSpec)>,
) -> Result<IdentityFamily> {
    let mut members: Vec<Identity> = Vec::new();
    let mut parameterization = Vec::new();
    for (k, a, b) in candidates {
        let lhs = vec![TrigTerm::tan(Rational::one(), a.a, a.n), TrigTerm::sin(coeff_b.clone(), b.a, b.n)];
        let sign = resolve_sign(&lhs, &Rational::one(), m)?.ok_or(Error::UnresolvedSign { k })?;
        let identity = Identity::new(lhs, SurdTarget::new(sign.apply(&Rational::one()), m)?)?.normalized()?;
        if !members.contains(&identity) {
            members.push(identity);
        }
        parameterization.push(FamilyParam { k, a, b, sign });
    }
    Ok(IdentityFamily { description, members, parameterization })
}

/// `2a = 3b` with `B = 4`, `C^2 = 11`.
///
/// The relation collapses to `sin(11b/2) = 0` with `sin(b/2) != 0`, so
/// `b = 2k pi/11`, `a = 3k pi/11` for `k` not divisible by 11. Each sign of
/// `C` is settled by exact verification; reducing the angles leaves five
/// distinct identities.
pub fn family_eleven() -> Result<IdentityFamily> {
    const N: u64 = 11;
    let candidates = (1..N as i64)
        .filter(|k| k % N as i64 != 0)
        .map(|k| (k, AngleSpec::new(3 * k, N), AngleSpec::new(2 * k, N)));
    solve_candidates(
        "tan(3k pi/11) + 4 sin(2k pi/11) = +-sqrt(11), k not divisible by 11".into(),
        &int(4),
        N,
        candidates,
    )
}

/// `a = b` with `B = 4`, `C^2 = 3`.
///
/// The relation becomes `sin(9a/2) = 2 sin(3a/2)`, i.e. with `x = 3a/2`,
/// `sin x (4 sin^2 x - 1) = 0`. Roots `x = j pi/6` give
/// `a = (j + 12m) pi/9`; angles with `sin(a/2) = 0` are excluded.
pub fn family_nine() -> Result<IdentityFamily> {
    const N: i64 = 9;
    let roots: Vec<i64> = (0..12)
        .filter(|&j| {
            let s = (j as f64 * PI / 6.0).sin();
            (s * (4.0 * s * s - 1.0)).abs() < 1e-12
        })
        .collect();
    let mut ts: Vec<i64> = roots
        .iter()
        .flat_map(|&j| (0..3).map(move |m| (j + 12 * m).rem_euclid(2 * N)))
        .filter(|&t| t != 0)
        .collect();
    ts.sort_unstable();
    ts.dedup();
    let candidates = ts.into_iter().map(|t| (t, AngleSpec::new(t, N as u64), AngleSpec::new(t, N as u64)));
    solve_candidates("tan(t pi/9) + 4 sin(t pi/9) = +-sqrt(3)".into(), &int(4), 3, candidates)
}
