mod common;

use common::{id, KNOWN};
use cyclotrig::exact::rational::{frac, int, to_f64};
use cyclotrig::expr::{lower, parse};
use cyclotrig::gauss::SurdTarget;
use cyclotrig::trig::{TrigKind, TrigTerm};
use cyclotrig::verify::{resolve_sign, verify, Identity};
use cyclotrig::{parse_identity, Rational};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const ODD: [u64; 8] = [3, 5, 7, 9, 11, 13, 15, 19];
const SQUAREFREE_ODD: [u64; 7] = [1, 3, 5, 7, 11, 15, 19];

fn random_term(rng: &mut impl Rng) -> TrigTerm {
    let n = *ODD.choose(rng).unwrap();
    random_term_over(rng, n)
}

fn random_term_over(rng: &mut impl Rng, n: u64) -> TrigTerm {
    let a = rng.gen_range(-(2 * n as i64)..=2 * n as i64);
    let kind = *[TrigKind::Tan, TrigKind::Sin, TrigKind::Cos].choose(rng).unwrap();
    let coeff = frac(rng.gen_range(-9..=9), rng.gen_range(1..=5));
    TrigTerm::new(coeff, kind, a, n)
}

/// Terms share one denominator so the field order stays small.
fn random_identity(rng: &mut impl Rng) -> Identity {
    let n = *ODD.choose(rng).unwrap();
    let terms = (0..rng.gen_range(1..=4)).map(|_| random_term_over(rng, n)).collect();
    let q = frac(rng.gen_range(1..=7), rng.gen_range(1..=3)) * int(if rng.gen() { 1 } else { -1 });
    Identity::new(terms, SurdTarget::new(q, *SQUAREFREE_ODD.choose(rng).unwrap()).unwrap()).unwrap()
}

#[test]
fn known_identities_hold() {
    for text in KNOWN {
        assert!(verify(&id(text)).unwrap().holds, "{text}");
    }
}

#[test]
fn prefilter_never_rejects_a_known_identity() {
    for text in KNOWN {
        let r = id(text).numeric_residual().abs();
        assert!(r < 1e-12, "{text}: {r}");
    }
}

#[test]
fn render_reparses_to_the_same_identity() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let orig = random_identity(&mut rng);
        let text = orig.to_string();
        let back = parse_identity(&text).unwrap_or_else(|e| panic!("{text}: {e}"));
        assert_eq!(back, orig, "{text}");
    }
}

#[test]
fn parse_then_eval_matches_direct_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let mut text = String::new();
        let mut direct = 0.0;
        for k in 0..rng.gen_range(1..=5) {
            let c: Rational = frac(rng.gen_range(1..=9), rng.gen_range(1..=4));
            let negative = rng.gen::<bool>();
            let (piece, value) = if rng.gen_ratio(1, 4) {
                let m = rng.gen_range(1..=30u64);
                (format!("sqrt({m})"), (m as f64).sqrt())
            } else {
                let t = random_term(&mut rng);
                let piece = format!("{}({}pi/{})", t.kind.name(), t.a, t.n);
                (piece, t.kind.eval(std::f64::consts::PI * t.a as f64 / t.n as f64))
            };
            let op = match (k, negative) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            text.push_str(&format!("{op}{c} {piece}"));
            let v = to_f64(&c) * value;
            direct += if negative { -v } else { v };
        }
        let expr = parse(&text).unwrap();
        let tol = 1e-10 * direct.abs().max(1.0);
        assert!((expr.eval_f64() - direct).abs() < tol, "{text}");
        let lowered = lower(&expr).unwrap().eval_f64();
        assert!((lowered - direct).abs() < tol, "{text}");
    }
}

#[test]
fn resolve_sign_never_returns_both() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let id = random_identity(&mut rng);
        let q_abs = num_traits::Signed::abs(&id.rhs.q);
        let sign = resolve_sign(&id.lhs, &q_abs, id.rhs.m).unwrap();
        let holds = |s: Rational| verify(&Identity::new(id.lhs.clone(), SurdTarget::new(s, id.rhs.m).unwrap()).unwrap()).unwrap().holds;
        assert!(!(holds(q_abs.clone()) && holds(-q_abs.clone())));
        assert_eq!(sign.is_some(), holds(q_abs.clone()) || holds(-q_abs));
    }
    for text in KNOWN {
        let id = id(text);
        let q_abs = num_traits::Signed::abs(&id.rhs.q);
        let sign = resolve_sign(&id.lhs, &q_abs, id.rhs.m).unwrap().expect(text);
        assert_eq!(sign.apply(&q_abs), id.rhs.q, "{text}");
    }
}

fn supplement_sines(id: &Identity) -> Identity {
    let lhs = id
        .lhs
        .iter()
        .map(|t| match t.kind {
            TrigKind::Sin => TrigTerm::sin(t.coeff.clone(), t.n as i64 - t.a, t.n),
            _ => t.clone(),
        })
        .collect();
    Identity::new(lhs, id.rhs.clone()).unwrap()
}

#[test]
fn verify_is_invariant_under_sine_supplements() {
    for text in KNOWN {
        let id = id(text);
        let moved = supplement_sines(&id);
        assert!(verify(&moved).unwrap().holds, "{moved}");
        assert!(moved.equivalent(&id));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..100 {
        let id = random_identity(&mut rng);
        let a = verify(&id).unwrap();
        let b = verify(&supplement_sines(&id)).unwrap();
        assert_eq!(a.holds, b.holds);
        assert_eq!(a.residual, b.residual, "{id}");
    }
}
