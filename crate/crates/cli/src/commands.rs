use std::error::Error;

use num_traits::Signed;
use serde_json::json;

use cyclotrig::discover::{discover as run_discovery, DiscoveryConfig};
use cyclotrig::exact::rational::{parse_rational, render};
use cyclotrig::expr::{parse, parse_terms};
use cyclotrig::gauss::{quadratic_residues, GaussValue, SurdTarget};
use cyclotrig::reduction::{family_eleven, family_nine, IdentityFamily};
use cyclotrig::verify::{resolve_sign, verify as verify_identity, Sign};
use cyclotrig::parse_identity;

use crate::lists::{rational_list, u64_list};
use crate::DiscoverArgs;

/// `Ok(true)` exits 0, `Ok(false)` exits 1, `Err` exits 2.
pub type Outcome = Result<bool, Box<dyn Error>>;

pub struct Output {
    pub json: bool,
}

pub fn verify(out: &Output, text: &str) -> Outcome {
    let id = parse_identity(text)?;
    let r = verify_identity(&id)?;
    if out.json {
        let line = json!({
            "holds": r.holds,
            "field_order": r.field_order,
            "lhs": id.lhs_string(),
            "rhs": id.rhs.to_string(),
        });
        println!("{line}");
    } else {
        println!("{}: {id}", if r.holds { "HOLDS" } else { "FAILS" });
        println!("field order L = {}", r.field_order);
        println!("residual is zero: {}", r.residual.is_zero());
    }
    Ok(r.holds)
}

pub fn sign(out: &Output, lhs: &str, surd: u64, q: &str) -> Outcome {
    let terms = parse_terms(lhs)?;
    let q = parse_rational(q).ok_or_else(|| format!("expected a rational number, got '{q}'"))?;
    let target = SurdTarget::from_sqrt(q.abs(), surd);
    let sign = resolve_sign(&terms, &target.q, target.m)?;
    let shown = sign.map_or("none".to_string(), |s| s.to_string());
    if out.json {
        println!("{}", json!({ "sign": shown }));
    } else {
        println!("{shown}");
    }
    Ok(sign.is_some())
}

fn gauss_line(out: &Output, n: u64) -> Result<bool, Box<dyn Error>> {
    let g = GaussValue::new(n)?;
    let matches = g.matches_closed_form()?;
    let v = g.sum.eval_numeric();
    // Avoid printing -0.
    let (re, im) = (v.re + 0.0, v.im + 0.0);
    if out.json {
        let coeffs: Vec<String> = g.sum.coeffs().iter().map(render).collect();
        let line = json!({
            "n": n,
            "coeffs": coeffs,
            "class": g.closed_class.to_string(),
            "value": [re, im],
            "matches": matches,
        });
        println!("{line}");
    } else {
        println!(
            "n={n:<4} G = {:<12} {:>+.6}{:+.6}i  [{}]  {}",
            g.closed_class.to_string(),
            re,
            im,
            g.sum,
            if matches { "ok" } else { "MISMATCH" }
        );
    }
    Ok(matches)
}

pub fn gauss(out: &Output, n: Option<u64>, table: Option<u64>) -> Outcome {
    let mut ok = true;
    if let Some(n) = n {
        ok &= gauss_line(out, n)?;
    }
    if let Some(max) = table {
        for k in 1..=max {
            ok &= gauss_line(out, k)?;
        }
    }
    Ok(ok)
}

pub fn residues(out: &Output, n: u64) -> Outcome {
    if n == 0 {
        return Err("n must be positive".into());
    }
    let r = quadratic_residues(n);
    if out.json {
        println!("{}", json!({ "n": n, "residues": r }));
    } else {
        let list: Vec<String> = r.iter().map(u64::to_string).collect();
        println!("{{{}}}", list.join(", "));
    }
    Ok(true)
}

fn report_family(out: &Output, fam: &IdentityFamily) -> Result<bool, Box<dyn Error>> {
    let mut all = true;
    let mut members = Vec::new();
    for id in &fam.members {
        let r = verify_identity(id)?;
        all &= r.holds;
        members.push((id, r));
    }
    let table = fam.sign_table();
    let ks = |want: Sign| -> Vec<i64> { table.iter().filter(|(_, s)| *s == want).map(|(k, _)| *k).collect() };
    if out.json {
        let line = json!({
            "family": fam.description,
            "plus": ks(Sign::Plus),
            "minus": ks(Sign::Minus),
            "members": members
                .iter()
                .map(|(id, r)| json!({ "identity": id.to_string(), "holds": r.holds, "field_order": r.field_order }))
                .collect::<Vec<_>>(),
        });
        println!("{line}");
    } else {
        let fmt = |v: Vec<i64>| v.iter().map(i64::to_string).collect::<Vec<_>>().join(",");
        println!("{}", fam.description);
        println!("  + for k in {{{}}}", fmt(ks(Sign::Plus)));
        println!("  - for k in {{{}}}", fmt(ks(Sign::Minus)));
        for (id, r) in &members {
            println!("  {}  {id}", if r.holds { "HOLDS" } else { "FAILS" });
        }
    }
    Ok(all)
}

pub fn families(out: &Output) -> Outcome {
    let a = report_family(out, &family_eleven()?)?;
    let b = report_family(out, &family_nine()?)?;
    Ok(a && b)
}

pub fn discover(out: &Output, args: &DiscoverArgs) -> Outcome {
    let cfg = DiscoveryConfig {
        denominators: u64_list(&args.denominators)?,
        coeff_set: rational_list(&args.coeffs)?,
        max_sin_terms: args.max_sin,
        surd_candidates: u64_list(&args.surd)?,
        q_candidates: rational_list(&args.q)?,
        prefilter_tol: args.tol,
        ..DiscoveryConfig::default()
    };
    let report = run_discovery(&cfg)?;
    // Identities always go to stdout as JSON lines; the summary goes to
    // stderr so the stream stays one object per line.
    for id in &report.found {
        let line = json!({
            "identity": id.to_string(),
            "lhs": id.lhs_string(),
            "rhs": id.rhs.to_string(),
            "field_order": id.field_order(),
        });
        println!("{line}");
    }
    if !out.json {
        eprintln!(
            "{} found, {} candidates, {} passed the prefilter, {:.1} ms",
            report.found.len(),
            report.candidates_scanned,
            report.prefilter_pass,
            report.elapsed.as_secs_f64() * 1e3
        );
    }
    Ok(true)
}

pub fn eval(out: &Output, text: &str) -> Outcome {
    let v = parse(text)?.eval_f64();
    if out.json {
        println!("{}", json!({ "value": v, "certified": false }));
    } else {
        println!("{v:.15}  (double precision, not certified)");
    }
    Ok(true)
}
