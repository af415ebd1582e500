//! Searching for identities `tan(a pi/n) + sum c_j sin(b_j pi/n) = q sqrt(m)`.
//!
//! Candidates are enumerated in a fixed lexicographic order, filtered in
//! double precision, and only the survivors that verify exactly are reported.
//! The prefilter tolerance only trades time for work: nothing is reported
//! without an exact proof.

use std::collections::HashSet;
use std::ops::RangeInclusive;
use std::time::Duration;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::int;
use crate::exact::{CycloElem, Rational};
use crate::gauss::{gauss_sum, is_squarefree, SurdTarget};
use crate::trig::{i_tan_embed, TrigTerm};
use crate::verify::{verify, Identity};

pub const MAX_SIN_TERMS: usize = 4;
pub const DEFAULT_MAX_DENOMINATOR: u64 = 51;

#[derive(Clone, Debug)]
pub struct DiscoveryConfig {
    pub denominators: Vec<u64>,
    /// Tangent numerators; defaults to `1..=n-1`.
    pub tan_multiples: Option<RangeInclusive<i64>>,
    /// Sine numerators; defaults to `1..=(n-1)/2`, which covers every sine
    /// value up to sign.
    pub sin_multiples: Option<RangeInclusive<i64>>,
    pub coeff_set: Vec<Rational>,
    pub max_sin_terms: usize,
    pub surd_candidates: Vec<u64>,
    pub q_candidates: Vec<Rational>,
    pub prefilter_tol: f64,
    pub max_denominator: u64,
}

impl Default for DiscoveryConfig {
    fn default() -> Self {
        DiscoveryConfig {
            denominators: Vec::new(),
            tan_multiples: None,
            sin_multiples: None,
            coeff_set: vec![int(4), int(-4)],
            max_sin_terms: 1,
            surd_candidates: Vec::new(),
            q_candidates: vec![int(1), int(-1)],
            prefilter_tol: 1e-9,
            max_denominator: DEFAULT_MAX_DENOMINATOR,
        }
    }
}

impl DiscoveryConfig {
    pub fn validate(&self) -> Result<()> {
        for &n in &self.denominators {
            if n == 0 {
                return Err(Error::ZeroOrder);
            }
            if n % 2 == 0 {
                return Err(Error::EvenDenominator(n));
            }
            if n > self.max_denominator {
                return Err(Error::Unsupported(format!(
                    "denominator {n} exceeds the search bound {}",
                    self.max_denominator
                )));
            }
        }
        if self.max_sin_terms > MAX_SIN_TERMS {
            return Err(Error::Unsupported(format!("at most {MAX_SIN_TERMS} sine terms")));
        }
        if let Some(&m) = self.surd_candidates.iter().find(|&&m| m % 2 == 0 || !is_squarefree(m)) {
            return Err(Error::UnsupportedSurd(m));
        }
        Ok(())
    }

    fn tan_range(&self, n: u64) -> RangeInclusive<i64> {
        self.tan_multiples.clone().unwrap_or(1..=n as i64 - 1)
    }

    fn sin_range(&self, n: u64) -> RangeInclusive<i64> {
        self.sin_multiples.clone().unwrap_or(1..=(n as i64 - 1) / 2)
    }
}

#[derive(Clone, Debug, Default)]
pub struct DiscoveryReport {
    /// Exactly verified identities in normalized form, deduplicated, in
    /// enumeration order.
    pub found: Vec<Identity>,
    pub candidates_scanned: u64,
    pub prefilter_pass: u64,
    pub elapsed: Duration,
}

/// All sine selections for one denominator: up to `k` distinct numerators in
/// increasing order, each with a coefficient from the set.
fn sine_combinations(cfg: &DiscoveryConfig, n: u64) -> Vec<(Vec<TrigTerm>, f64)> {
    let numerators: Vec<i64> = cfg.sin_range(n).collect();
    let mut out = vec![(Vec::new(), 0.0)];
    let mut frontier: Vec<(Vec<TrigTerm>, f64, usize)> = vec![(Vec::new(), 0.0, 0)];
    for _ in 0..cfg.max_sin_terms {
        let mut next = Vec::new();
        for (terms, value, start) in &frontier {
            for (idx, &b) in numerators.iter().enumerate().skip(*start) {
                for c in &cfg.coeff_set {
                    if c.is_zero() {
                        continue;
                    }
                    let t = TrigTerm::sin(c.clone(), b, n);
                    let mut terms = terms.clone();
                    let v = value + t.value_f64();
                    terms.push(t);
                    next.push((terms, v, idx + 1));
                }
            }
        }
        out.extend(next.iter().map(|(t, v, _)| (t.clone(), *v)));
        frontier = next;
    }
    // Lexicographic: by selected numerators, then coefficients in set order.
    out.sort_by(|x, y| {
        let key = |ts: &[TrigTerm]| ts.iter().map(|t| t.a).collect::<Vec<_>>();
        key(&x.0).cmp(&key(&y.0))
    });
    out
}

/// Everything that survives the prefilter for one `(n, tan numerator)` block.
fn scan_block(
    n: u64,
    a: i64,
    sines: &[(Vec<TrigTerm>, f64)],
    targets: &[(SurdTarget, f64)],
    tol: f64,
) -> Result<(u64, Vec<Identity>)> {
    let tan = TrigTerm::tan(Rational::one(), a, n);
    if tan.canonicalize_term().is_err() {
        return Ok((0, Vec::new()));
    }
    let tan_value = tan.value_f64();
    let mut scanned = 0;
    let mut survivors = Vec::new();
    for (sin_terms, sin_value) in sines {
        let value = tan_value + sin_value;
        for (target, target_value) in targets {
            scanned += 1;
            if (value - target_value).abs() < tol {
                let terms = std::iter::once(tan.clone()).chain(sin_terms.iter().cloned()).collect();
                survivors.push(Identity::new(terms, target.clone())?);
            }
        }
    }
    Ok((scanned, survivors))
}

#[cfg(feature = "parallel")]
fn map_ordered<T: Sync, U: Send>(items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_ordered<T, U>(items: &[T], f: impl Fn(&T) -> U) -> Vec<U> {
    items.iter().map(f).collect()
}

struct Clock(#[cfg(not(target_arch = "wasm32"))] std::time::Instant);

impl Clock {
    fn start() -> Self {
        Clock(
            #[cfg(not(target_arch = "wasm32"))]
            std::time::Instant::now(),
        )
    }

    fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        return self.0.elapsed();
        #[cfg(target_arch = "wasm32")]
        Duration::ZERO
    }
}

pub fn discover(cfg: &DiscoveryConfig) -> Result<DiscoveryReport> {
    cfg.validate()?;
    let clock = Clock::start();
    let mut targets = Vec::new();
    for &m in &cfg.surd_candidates {
        for q in &cfg.q_candidates {
            let t = SurdTarget::new(q.clone(), m)?;
            let v = t.value_f64();
            targets.push((t, v));
        }
    }

    let mut blocks = Vec::new();
    let mut sines = Vec::new();
    for (slot, &n) in cfg.denominators.iter().enumerate() {
        sines.push(sine_combinations(cfg, n));
        blocks.extend(cfg.tan_range(n).map(|a| (slot, n, a)));
    }

    let scanned = map_ordered(&blocks, |&(slot, n, a)| scan_block(n, a, &sines[slot], &targets, cfg.prefilter_tol));
    let mut report = DiscoveryReport::default();
    let mut survivors = Vec::new();
    for block in scanned {
        let (count, ids) = block?;
        report.candidates_scanned += count;
        survivors.extend(ids);
    }
    report.prefilter_pass = survivors.len() as u64;

    let verdicts = map_ordered(&survivors, |id| verify(id).map(|r| r.holds));
    let mut seen = HashSet::new();
    for (id, holds) in survivors.into_iter().zip(verdicts) {
        if holds? {
            let normal = id.normalized()?;
            if seen.insert(normal.clone()) {
                report.found.push(normal);
            }
        }
    }
    report.elapsed = clock.elapsed();
    Ok(report)
}

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Coefficients of `e` in the basis `x, x^2, ..., x^(p-1)` of Q(zeta_p),
/// `p` prime; index 0 of the result is `x^1`.
fn power_basis_coords(e: &CycloElem) -> Vec<Rational> {
    let p = e.order() as usize;
    let c = e.coeffs();
    let e0 = c[0].clone();
    // 1 = -(x + ... + x^(p-1))
    let mut out: Vec<Rational> = (1..p - 1).map(|k| &c[k] - &e0).collect();
    out.push(-e0);
    out
}

/// For a prime `n = 3 mod 4`, completes each `i tan(k pi/n)` to `+-G_n` with
/// sine terms of coefficient +-4 where possible.
///
/// `4 i sin(2c pi/n) = 2 (x^c - x^-c)`, so the missing piece `+-G_n - i tan`
/// must be antisymmetric in the power basis with coordinates in {0, +-2}.
/// Every returned identity is verified exactly.
pub fn residue_construct(n: u64) -> Result<Vec<Identity>> {
    if !is_prime(n) || n % 4 != 3 {
        return Ok(Vec::new());
    }
    let g = gauss_sum(n)?;
    let half = (n as usize - 1) / 2;
    let mut found: Vec<Identity> = Vec::new();
    for k in 1..n as i64 {
        let tan = i_tan_embed(k, n)?;
        for (target, q) in [(g.clone(), int(1)), (-&g, int(-1))] {
            let coords = power_basis_coords(&(&target - &tan));
            let antisymmetric = (1..=half).all(|c| coords[c - 1] == -&coords[n as usize - c - 1]);
            let allowed = |d: &Rational| d.is_zero() || *d == int(2) || *d == int(-2);
            if !antisymmetric || !coords[..half].iter().all(allowed) {
                continue;
            }
            let mut lhs = vec![TrigTerm::tan(Rational::one(), k, n)];
            for c in 1..=half {
                let d = &coords[c - 1];
                if !d.is_zero() {
                    lhs.push(TrigTerm::sin(d * int(2), 2 * c as i64, n));
                }
            }
            let id = Identity::new(lhs, SurdTarget::new(q, n)?)?;
            if verify(&id)?.holds {
                let id = id.normalized()?;
                if !found.contains(&id) {
                    found.push(id);
                }
            }
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: u64, coeffs: &[i64], max_sin: usize, m: u64) -> DiscoveryConfig {
        DiscoveryConfig {
            denominators: vec![n],
            coeff_set: coeffs.iter().map(|&c| int(c)).collect(),
            max_sin_terms: max_sin,
            surd_candidates: vec![m],
            ..Default::default()
        }
    }

    fn parse_id(terms: &[(i64, crate::trig::TrigKind, i64)], n: u64, q: i64, m: u64) -> Identity {
        let lhs = terms.iter().map(|&(c, kind, a)| TrigTerm::new(int(c), kind, a, n)).collect();
        Identity::new(lhs, SurdTarget::new(int(q), m).unwrap()).unwrap()
    }

    use crate::trig::TrigKind::{Sin, Tan};

    #[test]
    fn rediscovers_the_seven_family() {
        let report = discover(&cfg(7, &[4, -4], 1, 7)).unwrap();
        let expected = [
            parse_id(&[(1, Tan, 1), (-4, Sin, 2)], 7, -1, 7),
            parse_id(&[(1, Tan, 2), (-4, Sin, 3)], 7, -1, 7),
            parse_id(&[(1, Tan, 3), (-4, Sin, 1)], 7, 1, 7),
        ];
        assert_eq!(report.found.len(), 3, "{:?}", report.found);
        for e in &expected {
            assert!(report.found.iter().any(|f| f.equivalent(e)), "missing {e}");
        }
        assert!(report.prefilter_pass >= 3);
    }

    #[test]
    fn finds_coefficient_two_identity_at_nine() {
        let report = discover(&cfg(9, &[2, -2], 3, 3)).unwrap();
        let target = parse_id(&[(1, Tan, 1), (2, Sin, 1), (-2, Sin, 2), (2, Sin, 4)], 9, 1, 3);
        assert!(report.found.iter().any(|f| f.equivalent(&target)));
        for f in &report.found {
            assert!(verify(f).unwrap().holds);
        }
    }

    #[test]
    fn lone_tangent_is_never_a_surd() {
        let report = discover(&cfg(11, &[], 0, 11)).unwrap();
        assert!(report.found.is_empty());
        assert_eq!(report.candidates_scanned, 10 * 2);
    }

    #[test]
    fn deterministic() {
        let c = cfg(9, &[2, -2], 2, 3);
        let a = discover(&c).unwrap();
        let b = discover(&c).unwrap();
        assert_eq!(a.found, b.found);
        assert_eq!(a.candidates_scanned, b.candidates_scanned);
    }

    #[test]
    fn config_validation() {
        assert_eq!(discover(&cfg(8, &[4], 1, 7)).unwrap_err(), Error::EvenDenominator(8));
        assert_eq!(discover(&cfg(7, &[4], 1, 9)).unwrap_err(), Error::UnsupportedSurd(9));
        assert!(discover(&cfg(7, &[4], 5, 7)).is_err());
    }

    #[test]
    fn residue_construction() {
        let eleven = residue_construct(11).unwrap();
        let headline = parse_id(&[(1, Tan, 3), (4, Sin, 2)], 11, 1, 11);
        assert!(eleven.iter().any(|f| f.equivalent(&headline)));

        let seven = residue_construct(7).unwrap();
        let closing = parse_id(&[(1, Tan, 2), (4, Sin, 2), (-4, Sin, 1)], 7, 1, 7);
        assert!(seven.iter().any(|f| f.equivalent(&closing)));

        let nineteen = residue_construct(19).unwrap();
        let closing = parse_id(&[(1, Tan, 4), (4, Sin, 5), (-4, Sin, 6), (4, Sin, 9)], 19, 1, 19);
        assert!(nineteen.iter().any(|f| f.equivalent(&closing)));

        assert!(residue_construct(13).unwrap().is_empty());
        assert!(residue_construct(15).unwrap().is_empty());
    }
}
