mod common;

use common::id;
use cyclotrig::discover::{discover, residue_construct, DiscoveryConfig};
use cyclotrig::exact::rational::int;
use cyclotrig::verify::verify;

fn config(n: u64, coeffs: &[i64], max_sin: usize, m: u64) -> DiscoveryConfig {
    DiscoveryConfig {
        denominators: vec![n],
        coeff_set: coeffs.iter().map(|&c| int(c)).collect(),
        max_sin_terms: max_sin,
        surd_candidates: vec![m],
        ..DiscoveryConfig::default()
    }
}

#[test]
fn every_reported_identity_is_rechecked() {
    for cfg in [
        config(7, &[4, -4], 1, 7),
        config(7, &[4, -4], 2, 7),
        config(11, &[4, -4], 1, 11),
        config(9, &[2, -2], 3, 3),
        config(15, &[4, -4], 1, 15),
    ] {
        let report = discover(&cfg).unwrap();
        assert!(report.prefilter_pass >= report.found.len() as u64);
        for found in &report.found {
            assert!(verify(found).unwrap().holds, "{found}");
            assert!(found.numeric_residual().abs() < 1e-9, "{found}");
            // Normal form: leading tan coefficient is positive.
            assert!(found.lhs[0].coeff > int(0), "{found}");
        }
        for (i, a) in report.found.iter().enumerate() {
            assert!(report.found[i + 1..].iter().all(|b| !a.equivalent(b)), "duplicate {a}");
        }
    }
}

#[test]
fn recall_on_known_configurations() {
    let found = discover(&config(9, &[2, -2], 3, 3)).unwrap().found;
    let want = id("tan(pi/9) + 2 sin(pi/9) - 2 sin(2pi/9) + 2 sin(4pi/9) = sqrt(3)");
    assert!(found.iter().any(|f| f.equivalent(&want)));

    let found = discover(&config(11, &[4, -4], 1, 11)).unwrap().found;
    assert_eq!(found.len(), 5);

    let lone = discover(&config(11, &[], 0, 11)).unwrap();
    assert!(lone.found.is_empty());
}

#[test]
fn identical_configs_give_identical_reports() {
    let cfg = config(13, &[4, -4], 2, 13);
    let a = discover(&cfg).unwrap();
    let b = discover(&cfg).unwrap();
    assert_eq!(a.found, b.found);
    assert_eq!(a.candidates_scanned, b.candidates_scanned);
}

#[test]
fn residue_construction_examples() {
    for (n, text) in [
        (11, "tan(3pi/11) + 4 sin(2pi/11) = sqrt(11)"),
        (7, "tan(2pi/7) + 4 sin(2pi/7) - 4 sin(pi/7) = sqrt(7)"),
        (19, "tan(4pi/19) + 4 sin(5pi/19) - 4 sin(6pi/19) + 4 sin(9pi/19) = sqrt(19)"),
    ] {
        let built = residue_construct(n).unwrap();
        let want = id(text);
        assert!(built.iter().any(|b| b.equivalent(&want)), "{text}");
        assert!(built.iter().all(|b| verify(b).unwrap().holds));
    }
}
