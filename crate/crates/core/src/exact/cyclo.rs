//! Elements of the cyclotomic field Q(zeta_n).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::cyclotomic::{common_denominator, lcm, modulus};
use super::poly::{write_terms, CycloPoly};
use super::rational::{to_f64, Rational};
use crate::error::{Error, Result};

/// An element of Q(zeta_n), stored as its remainder modulo Phi_n.
///
/// `coeffs[k]` is the coefficient of `zeta_n^k` for `k < phi(n)`. Because the
/// representation is canonical, equality within one order is coefficient
/// equality. Elements of different orders compare equal when they agree after
/// embedding into Q(zeta_lcm).
#[derive(Clone, Debug)]
pub struct CycloElem {
    order: u64,
    coeffs: Vec<Rational>,
}

/// Remainder of `p` modulo Phi_n, as an element of Q(zeta_n).
pub fn canonicalize(p: &CycloPoly, n: u64) -> Result<CycloElem> {
    let m = modulus(n)?;
    Ok(CycloElem { order: n, coeffs: m.reduce(p.coeffs().to_vec()) })
}

impl CycloElem {
    pub fn zero(n: u64) -> Result<Self> {
        let m = modulus(n)?;
        Ok(CycloElem { order: n, coeffs: vec![Rational::zero(); m.degree] })
    }

    pub fn from_rational(n: u64, q: Rational) -> Result<Self> {
        let mut e = Self::zero(n)?;
        e.coeffs[0] = q;
        Ok(e)
    }

    pub fn one(n: u64) -> Result<Self> {
        Self::from_rational(n, Rational::one())
    }

    /// `zeta_n^k` for any integer `k`.
    pub fn zeta_pow(n: u64, k: i64) -> Result<Self> {
        Self::from_exponents(n, [(k, Rational::one())])
    }

    /// `sum c * zeta_n^e` over the given (exponent, coefficient) pairs;
    /// exponents may be negative or exceed n.
    pub fn from_exponents<I>(n: u64, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        let m = modulus(n)?;
        let mut dense = vec![Rational::zero(); n as usize];
        for (e, c) in terms {
            if !c.is_zero() {
                dense[e.rem_euclid(n as i64) as usize] += c;
            }
        }
        Ok(CycloElem { order: n, coeffs: m.reduce(dense) })
    }

    /// Builds an element from a coefficient vector already of length phi(n).
    /// Used for deserializing canonical data; the vector is re-reduced anyway.
    pub fn from_coeffs(n: u64, coeffs: Vec<Rational>) -> Result<Self> {
        canonicalize(&CycloPoly::new(coeffs), n)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn to_poly(&self) -> CycloPoly {
        CycloPoly::new(self.coeffs.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in Q.
    pub fn as_rational(&self) -> Option<Rational> {
        if self.coeffs.iter().skip(1).all(Zero::is_zero) {
            Some(self.coeffs.first().cloned().unwrap_or_else(Rational::zero))
        } else {
            None
        }
    }

    fn check_order(&self, other: &CycloElem) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order, right: other.order })
        }
    }

    pub fn checked_add(&self, other: &CycloElem) -> Result<CycloElem> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(CycloElem { order: self.order, coeffs })
    }

    pub fn checked_sub(&self, other: &CycloElem) -> Result<CycloElem> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(CycloElem { order: self.order, coeffs })
    }

    pub fn checked_mul(&self, other: &CycloElem) -> Result<CycloElem> {
        self.check_order(other)?;
        let m = modulus(self.order)?;
        // Multiply over Z with one denominator per factor; normalizing every
        // partial product as a rational is far slower.
        let (a, da) = common_denominator(&self.coeffs);
        let (b, db) = common_denominator(&other.coeffs);
        let mut dense = vec![BigInt::zero(); (a.len() + b.len()).saturating_sub(1).max(1)];
        let rhs: Vec<_> = b.iter().enumerate().filter(|(_, y)| !y.is_zero()).collect();
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for &(j, y) in &rhs {
                dense[i + j] += x * y;
            }
        }
        let den = da * db;
        let coeffs = m.reduce_int(dense).into_iter().map(|c| Rational::new(c, den.clone())).collect();
        Ok(CycloElem { order: self.order, coeffs })
    }

    pub fn scale(&self, c: &Rational) -> CycloElem {
        CycloElem { order: self.order, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplicative inverse. Solves `u * v = 1` as a linear system over Z
    /// with fraction-free elimination, which keeps intermediate sizes bounded
    /// by the final determinant (rational Euclid does not).
    pub fn inverse(&self) -> Result<CycloElem> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(q) = self.as_rational() {
            return CycloElem::from_rational(self.order, q.recip());
        }
        let m = modulus(self.order)?;
        let d = m.degree;
        let phi: Vec<BigInt> = m.poly.coeffs().iter().map(|c| c.numer().clone()).collect();
        let (mut col, den) = common_denominator(&self.coeffs);
        col.resize(d, BigInt::zero());
        // Row-major [M | e_0] where column j of M holds (den u) x^j mod Phi_n.
        let mut rows = vec![vec![BigInt::zero(); d + 1]; d];
        rows[0][d] = BigInt::one();
        for j in 0..d {
            for (i, c) in col.iter().enumerate() {
                rows[i][j] = c.clone();
            }
            let top = col.pop().expect("degree is positive");
            col.insert(0, BigInt::zero());
            if !top.is_zero() {
                for (c, p) in col.iter_mut().zip(&phi) {
                    *c -= &top * p;
                }
            }
        }
        let y = bareiss_solve(rows);
        let det = y.last().expect("degree is positive").1.clone();
        let coeffs = y.into_iter().map(|(v, _)| Rational::new(v * &den, det.clone())).collect();
        CycloElem::from_coeffs(self.order, coeffs)
    }

    pub fn checked_div(&self, other: &CycloElem) -> Result<CycloElem> {
        self.checked_mul(&other.inverse()?)
    }

    pub fn pow(&self, mut e: u32) -> CycloElem {
        let mut base = self.clone();
        let mut acc = CycloElem::one(self.order).expect("order is valid");
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// The ring map zeta_n -> zeta_N^(N/n) into Q(zeta_N).
    pub fn embed(&self, target: u64) -> Result<CycloElem> {
        if target == 0 {
            return Err(Error::ZeroOrder);
        }
        if target % self.order != 0 {
            return Err(Error::NotADivisor { from: self.order, into: target });
        }
        if target == self.order {
            return Ok(self.clone());
        }
        let step = (target / self.order) as usize;
        let m = modulus(target)?;
        let mut dense = vec![Rational::zero(); target as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            dense[k * step] = c.clone();
        }
        Ok(CycloElem { order: target, coeffs: m.reduce(dense) })
    }

    /// The automorphism zeta_n -> zeta_n^k; `k` must be coprime to n.
    pub fn galois(&self, k: i64) -> Result<CycloElem> {
        CycloElem::from_exponents(
            self.order,
            self.coeffs.iter().enumerate().map(|(j, c)| (j as i64 * k, c.clone())),
        )
    }

    /// Complex conjugation, zeta_n -> zeta_n^(-1).
    pub fn conj(&self) -> CycloElem {
        self.galois(-1).expect("order is valid")
    }

    /// Double-precision value with zeta_n = exp(2 pi i / n). Diagnostic only.
    pub fn eval_numeric(&self) -> Complex64 {
        let n = self.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| {
                let theta = 2.0 * std::f64::consts::PI * (k as f64) / n;
                Complex64::from_polar(to_f64(c), theta)
            })
            .sum()
    }

    /// Embeds both operands into Q(zeta_lcm).
    pub fn unify(a: &CycloElem, b: &CycloElem) -> Result<(CycloElem, CycloElem)> {
        let l = lcm(a.order, b.order);
        Ok((a.embed(l)?, b.embed(l)?))
    }
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        if self.order == other.order {
            return self.coeffs == other.coeffs;
        }
        match CycloElem::unify(self, other) {
            Ok((a, b)) => a.coeffs == b.coeffs,
            Err(_) => false,
        }
    }
}

impl Eq for CycloElem {}

macro_rules! binop {
    ($tr:ident, $f:ident, $checked:ident) => {
        impl $tr for &CycloElem {
            type Output = CycloElem;
            /// Panics if the orders differ.
            fn $f(self, rhs: &CycloElem) -> CycloElem {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr for CycloElem {
            type Output = CycloElem;
            fn $f(self, rhs: CycloElem) -> CycloElem {
                (&self).$f(&rhs)
            }
        }
    };
}
binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &CycloElem {
    type Output = CycloElem;

    fn neg(self) -> CycloElem {
        CycloElem { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;

    fn neg(self) -> CycloElem {
        -&self
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, &format!("z{}", self.order))
    }
}

/// Solves the nonsingular system `[A | b]` over Z by Bareiss elimination.
/// Returns `(det(A) x_i, det(A))` for each unknown; the first entries are
/// integers by Cramer's rule.
fn bareiss_solve(mut rows: Vec<Vec<BigInt>>) -> Vec<(BigInt, BigInt)> {
    let d = rows.len();
    let mut prev = BigInt::one();
    let mut sign = 1i32;
    for k in 0..d {
        let p = (k..d).find(|&i| !rows[i][k].is_zero()).expect("matrix is nonsingular");
        if p != k {
            rows.swap(p, k);
            sign = -sign;
        }
        let (head, tail) = rows.split_at_mut(k + 1);
        let pivot = &head[k];
        for row in tail.iter_mut() {
            let lead = std::mem::take(&mut row[k]);
            for j in k + 1..=d {
                let v = &row[j] * &pivot[k] - &lead * &pivot[j];
                row[j] = v / &prev;
            }
        }
        prev = rows[k][k].clone();
    }
    // After elimination rows[d-1][d-1] is +-det(A); scaled back substitution
    // stays in Z.
    let det = &prev * BigInt::from(sign);
    let mut y = vec![BigInt::zero(); d];
    for i in (0..d).rev() {
        let mut acc = &det * &rows[i][d];
        for j in i + 1..d {
            acc -= &rows[i][j] * &y[j];
        }
        y[i] = acc / &rows[i][i];
    }
    y.into_iter().map(|v| (v, det.clone())).collect()
}
