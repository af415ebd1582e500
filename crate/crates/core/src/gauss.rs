//! Quadratic Gauss sums, quadratic residues, and square roots as cyclotomic
//! elements.
//!
//! `G_n = sum_{j<n} zeta_n^(j^2)` takes one of four values according to
//! `n mod 4`: `(1+i) sqrt(n)`, `sqrt(n)`, `0`, `i sqrt(n)`. For odd
//! squarefree `m` this gives `sqrt(m)` inside Q(zeta_4m) without any
//! approximation: `G_m` itself when `m = 1 mod 4`, and `-i G_m` when
//! `m = 3 mod 4`.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{int, render, to_f64};
use crate::exact::{lcm, CycloElem, Rational};

/// Which of the four closed forms `G_n` takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussClass {
    /// n = 0 mod 4
    OnePlusISqrtN,
    /// n = 1 mod 4
    SqrtN,
    /// n = 2 mod 4
    Zero,
    /// n = 3 mod 4
    ISqrtN,
}

impl GaussClass {
    pub fn of(n: u64) -> Self {
        match n % 4 {
            0 => GaussClass::OnePlusISqrtN,
            1 => GaussClass::SqrtN,
            2 => GaussClass::Zero,
            _ => GaussClass::ISqrtN,
        }
    }
}

impl fmt::Display for GaussClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GaussClass::OnePlusISqrtN => "(1+i)sqrt(n)",
            GaussClass::SqrtN => "sqrt(n)",
            GaussClass::Zero => "0",
            GaussClass::ISqrtN => "i sqrt(n)",
        })
    }
}

#[derive(Clone, Debug)]
pub struct GaussValue {
    pub n: u64,
    /// The direct sum, in Q(zeta_n).
    pub sum: CycloElem,
    pub closed_class: GaussClass,
}

impl GaussValue {
    pub fn new(n: u64) -> Result<Self> {
        Ok(GaussValue { n, sum: gauss_sum(n)?, closed_class: GaussClass::of(n) })
    }

    /// Whether the direct sum equals the closed form in Q(zeta_lcm(4,n)).
    pub fn matches_closed_form(&self) -> Result<bool> {
        let closed = gauss_closed_form(self.n)?;
        Ok(self.sum.embed(closed.order())? == closed)
    }
}

/// `sum_{j=0}^{n-1} zeta_n^(j^2 mod n)`, summed exactly.
pub fn gauss_sum(n: u64) -> Result<CycloElem> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    CycloElem::from_exponents(n, (0..n).map(|j| ((j * j % n) as i64, Rational::one())))
}

/// The closed form of `G_n` as an exact element of Q(zeta_lcm(4,n)).
pub fn gauss_closed_form(n: u64) -> Result<CycloElem> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let l = lcm(4, n);
    let class = GaussClass::of(n);
    if class == GaussClass::Zero {
        return CycloElem::zero(l);
    }
    let (square, free) = squarefree_decompose(n);
    let root = sqrt_squarefree(free)?.embed(l)?.scale(&int(square as i64));
    let i = imaginary_unit(l)?;
    Ok(match class {
        GaussClass::SqrtN => root,
        GaussClass::ISqrtN => &i * &root,
        GaussClass::OnePlusISqrtN => &(&CycloElem::one(l)? + &i) * &root,
        GaussClass::Zero => unreachable!(),
    })
}

/// `i = zeta_l^(l/4)`; `l` must be a multiple of 4.
pub(crate) fn imaginary_unit(l: u64) -> Result<CycloElem> {
    debug_assert_eq!(l % 4, 0);
    CycloElem::zeta_pow(l, (l / 4) as i64)
}

/// Nonzero squares modulo n, ascending.
pub fn quadratic_residues(n: u64) -> Vec<u64> {
    (1..n).map(|j| j * j % n).filter(|&r| r != 0).collect::<BTreeSet<_>>().into_iter().collect()
}

/// Writes `k = s^2 * m` with `m` squarefree; returns `(s, m)`. `k = 0`
/// gives `(0, 1)`.
pub fn squarefree_decompose(k: u64) -> (u64, u64) {
    if k == 0 {
        return (0, 1);
    }
    let (mut s, mut m, mut rest) = (1, 1, k);
    let mut p = 2;
    while p * p <= rest {
        let mut e = 0;
        while rest % p == 0 {
            rest /= p;
            e += 1;
        }
        s *= p.pow(e / 2);
        if e % 2 == 1 {
            m *= p;
        }
        p += 1;
    }
    (s, m * rest)
}

pub fn is_squarefree(m: u64) -> bool {
    m != 0 && squarefree_decompose(m).0 == 1
}

/// The positive square root of an odd squarefree `m`, in Q(zeta_4m).
pub fn sqrt_embed(m: u64) -> Result<CycloElem> {
    if m % 2 == 0 || !is_squarefree(m) {
        return Err(Error::UnsupportedSurd(m));
    }
    let l = 4 * m;
    if m == 1 {
        return CycloElem::one(l);
    }
    let g = gauss_sum(m)?.embed(l)?;
    if m % 4 == 1 {
        Ok(g)
    } else {
        Ok(-(&imaginary_unit(l)? * &g))
    }
}

/// Like [`sqrt_embed`] but also accepts even squarefree `m`, using
/// `sqrt(2) = zeta_8 + zeta_8^-1`. The result lives in Q(zeta_lcm(8, 4m')),
/// `m'` the odd part.
pub(crate) fn sqrt_squarefree(m: u64) -> Result<CycloElem> {
    if m % 2 == 1 {
        return sqrt_embed(m);
    }
    if !is_squarefree(m) {
        return Err(Error::UnsupportedSurd(m));
    }
    let odd = sqrt_embed(m / 2)?;
    let l = lcm(8, odd.order());
    let root2 = CycloElem::from_exponents(8, [(1, Rational::one()), (-1, Rational::one())])?.embed(l)?;
    Ok(&root2 * &odd.embed(l)?)
}

/// `q sqrt(m)` with `m` squarefree. Rational values use `m = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SurdTarget {
    pub q: Rational,
    pub m: u64,
}

impl SurdTarget {
    pub fn new(q: Rational, m: u64) -> Result<Self> {
        if !is_squarefree(m) {
            return Err(Error::UnsupportedSurd(m));
        }
        let m = if q.is_zero() { 1 } else { m };
        Ok(SurdTarget { q, m })
    }

    pub fn rational(q: Rational) -> Self {
        SurdTarget { q, m: 1 }
    }

    /// `q sqrt(k)` for any `k`, with the square part of `k` moved into `q`.
    pub fn from_sqrt(q: Rational, k: u64) -> Self {
        let (s, m) = squarefree_decompose(k);
        let q = q * int(s as i64);
        let m = if q.is_zero() { 1 } else { m };
        SurdTarget { q, m }
    }

    pub fn negated(&self) -> Self {
        SurdTarget { q: -&self.q, m: self.m }
    }

    pub fn value_f64(&self) -> f64 {
        to_f64(&self.q) * (self.m as f64).sqrt()
    }

    /// `i q sqrt(m)` in Q(zeta_4m); `m` must be odd.
    pub fn times_i_embed(&self) -> Result<CycloElem> {
        let root = sqrt_embed(self.m)?;
        let l = root.order();
        Ok((&imaginary_unit(l)? * &root).scale(&self.q))
    }
}

impl fmt::Display for SurdTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 || self.q.is_zero() {
            return f.write_str(&render(&self.q));
        }
        let root = format!("sqrt({})", self.m);
        if self.q.is_one() {
            write!(f, "{root}")
        } else if (-&self.q).is_one() {
            write!(f, "-{root}")
        } else {
            write!(f, "{} {root}", render(&self.q))
        }
    }
}
