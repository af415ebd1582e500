//! Cyclotomic polynomials and reduction modulo them.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::CycloPoly;
use super::rational::Rational;
use crate::error::{Error, Result};

/// Phi_n together with the data needed to reduce by it quickly.
#[derive(Debug)]
pub(crate) struct Modulus {
    pub n: u64,
    pub poly: CycloPoly,
    /// deg Phi_n = phi(n)
    pub degree: usize,
    /// Nonzero non-leading coefficients of Phi_n.
    terms: Vec<(usize, BigInt)>,
}

impl Modulus {
    fn new(n: u64, poly: CycloPoly) -> Self {
        let degree = poly.degree().expect("cyclotomic polynomial is nonzero");
        let terms = poly.coeffs()[..degree]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (j, c.numer().clone()))
            .collect();
        Modulus { n, poly, degree, terms }
    }

    /// Reduces a dense coefficient vector (any length) modulo Phi_n, returning
    /// exactly `degree` coefficients.
    pub fn reduce(&self, p: Vec<Rational>) -> Vec<Rational> {
        let (ints, den) = common_denominator(&p);
        self.reduce_int(ints).into_iter().map(|c| Rational::new(c, den.clone())).collect()
    }

    /// Integer version of [`Modulus::reduce`]; Phi_n is monic with integer
    /// coefficients, so no denominators appear. Exponents are first folded
    /// mod n.
    pub fn reduce_int(&self, mut p: Vec<BigInt>) -> Vec<BigInt> {
        let n = self.n as usize;
        if p.len() > n {
            let tail = p.split_off(n);
            for (i, c) in tail.into_iter().enumerate() {
                if !c.is_zero() {
                    p[i % n] += c;
                }
            }
        }
        let deg = self.degree;
        // x^deg = -sum(terms)
        for i in (deg..p.len()).rev() {
            if p[i].is_zero() {
                continue;
            }
            let c = std::mem::take(&mut p[i]);
            for (j, coef) in &self.terms {
                let slot = &mut p[i - deg + j];
                if coef.is_one() {
                    *slot -= &c;
                } else if (-coef).is_one() {
                    *slot += &c;
                } else {
                    *slot -= &c * coef;
                }
            }
        }
        p.resize(deg, BigInt::zero());
        p
    }
}

/// Writes `p` as `ints / den` with a single positive denominator.
pub(crate) fn common_denominator(p: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let den = p.iter().fold(BigInt::one(), |acc, c| if c.denom().is_one() { acc } else { acc.lcm(c.denom()) });
    let ints = p
        .iter()
        .map(|c| if c.denom() == &den { c.numer().clone() } else { c.numer() * (&den / c.denom()) })
        .collect();
    (ints, den)
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<Modulus>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<Modulus>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn modulus(n: u64) -> Result<Arc<Modulus>> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    if let Some(m) = cache().read().expect("cache lock").get(&n) {
        return Ok(Arc::clone(m));
    }
    let poly = compute(n)?;
    let mut guard = cache().write().expect("cache lock");
    // Another thread may have raced us; the first insert wins and both agree.
    Ok(Arc::clone(guard.entry(n).or_insert_with(|| Arc::new(Modulus::new(n, poly)))))
}

fn compute(n: u64) -> Result<CycloPoly> {
    // x^n - 1 = prod_{d | n} Phi_d
    let mut p = &CycloPoly::monomial(Rational::one(), n as usize) - &CycloPoly::one();
    for d in proper_divisors(n) {
        let phi_d = modulus(d)?;
        let (q, r) = p.div_rem(&phi_d.poly)?;
        debug_assert!(r.is_zero(), "Phi_{d} must divide x^{n} - 1");
        p = q;
    }
    Ok(p)
}

fn proper_divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..n).filter(move |d| n % d == 0)
}

/// The n-th cyclotomic polynomial, computed by exact division of x^n - 1 by
/// Phi_d for every proper divisor d. Results are cached per process.
pub fn cyclotomic_polynomial(n: u64) -> Result<CycloPoly> {
    Ok(modulus(n)?.poly.clone())
}

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

#[cfg(test)]
pub(crate) fn int_poly(c: &[i64]) -> CycloPoly {
    CycloPoly::new(c.iter().map(|&v| super::rational::int(v)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::int;

    /// Independent route: Phi_n(x) = prod_{d | n} (x^d - 1)^{mu(n/d)}, built
    /// from numerator and denominator products and one final division.
    fn mobius_phi(n: u64) -> CycloPoly {
        fn mu(mut m: u64) -> i32 {
            let mut sign = 1;
            let mut p = 2;
            while p * p <= m {
                if m % p == 0 {
                    m /= p;
                    if m % p == 0 {
                        return 0;
                    }
                    sign = -sign;
                }
                p += 1;
            }
            if m > 1 {
                sign = -sign;
            }
            sign
        }
        let mut num = CycloPoly::one();
        let mut den = CycloPoly::one();
        for d in (1..=n).filter(|d| n % d == 0) {
            let f = &CycloPoly::monomial(Rational::one(), d as usize) - &CycloPoly::one();
            match mu(n / d) {
                1 => num = &num * &f,
                -1 => den = &den * &f,
                _ => {}
            }
        }
        let (q, r) = num.div_rem(&den).unwrap();
        assert!(r.is_zero());
        q
    }

    #[test]
    fn small_orders() {
        assert_eq!(cyclotomic_polynomial(1).unwrap(), int_poly(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(11).unwrap(), int_poly(&[1; 11]));
        assert_eq!(cyclotomic_polynomial(9).unwrap(), int_poly(&[1, 0, 0, 1, 0, 0, 1]));
        assert_eq!(cyclotomic_polynomial(0), Err(Error::ZeroOrder));
    }

    #[test]
    fn agrees_with_mobius_product() {
        for n in 1..=120 {
            let phi = cyclotomic_polynomial(n).unwrap();
            assert_eq!(phi, mobius_phi(n), "n = {n}");
            assert_eq!(phi.degree(), Some(totient(n) as usize));
        }
    }

    #[test]
    fn phi_105_has_a_minus_two() {
        // First cyclotomic polynomial with a coefficient outside {-1, 0, 1}.
        let phi = cyclotomic_polynomial(105).unwrap();
        assert!(phi.coeffs().iter().any(|c| *c == int(-2)));
    }

    #[test]
    fn concurrent_access_agrees() {
        let handles: Vec<_> = (0..8)
            .map(|_| std::thread::spawn(|| cyclotomic_polynomial(210).unwrap()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert!(results.windows(2).all(|w| w[0] == w[1]));
    }
}
