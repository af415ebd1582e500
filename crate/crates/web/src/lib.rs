//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Every export takes plain strings or numbers and returns a JSON string, so
//! the page needs no generated TypeScript types. Errors come back as
//! `{"error": "..."}` rather than exceptions.

use serde_json::{json, Value};
use wasm_bindgen::prelude::wasm_bindgen;

use cyclotrig::discover::{discover, DiscoveryConfig};
use cyclotrig::gauss::{gauss_closed_form, GaussValue};
use cyclotrig::{parse_identity, verify};

/// Searches are capped so the page stays responsive.
const MAX_DENOMINATOR: u64 = 31;
const MAX_SIN_TERMS: usize = 2;

fn error(e: impl std::fmt::Display) -> String {
    json!({ "error": e.to_string() }).to_string()
}

fn verify_value(text: &str) -> Result<Value, cyclotrig::Error> {
    let id = parse_identity(text)?;
    let r = verify(&id)?;
    Ok(json!({
        "holds": r.holds,
        "field_order": r.field_order,
        "lhs": id.lhs_string(),
        "rhs": id.rhs.to_string(),
        "lhs_value": id.lhs_f64(),
        "rhs_value": id.rhs.value_f64(),
        "residual_zero": r.residual.is_zero(),
    }))
}

/// Decides `"<lhs> = <rhs>"` exactly.
#[wasm_bindgen]
pub fn verify_identity(text: &str) -> String {
    verify_value(text).map_or_else(error, |v| v.to_string())
}

/// The walk `sum_{j<k} zeta_n^(j^2)` for k = 0..=n, whose endpoint is the
/// Gauss sum, plus the closed form it lands on.
#[wasm_bindgen]
pub fn gauss_walk(n: u32) -> String {
    if n == 0 || n > 2000 {
        return error("n must be between 1 and 2000");
    }
    let n64 = u64::from(n);
    let mut points = vec![[0.0, 0.0]];
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for j in 0..n64 {
        let theta = 2.0 * std::f64::consts::PI * ((j * j) % n64) as f64 / n as f64;
        re += theta.cos();
        im += theta.sin();
        points.push([re, im]);
    }
    let exact = GaussValue::new(n64).and_then(|g| {
        let closed = gauss_closed_form(n64)?.eval_numeric();
        Ok((g.closed_class.to_string(), g.matches_closed_form()?, [closed.re, closed.im]))
    });
    match exact {
        Ok((class, matches, closed)) => json!({
            "n": n,
            "points": points,
            "class": class,
            "closed": closed,
            "matches": matches,
        })
        .to_string(),
        Err(e) => error(e),
    }
}

fn parse_list(text: &str) -> Result<Vec<u64>, String> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|_| format!("not a positive integer: '{s}'")))
        .collect()
}

/// Searches `tan(a pi/n) + sum(+-4 sin(b pi/n)) = +-sqrt(m)`.
#[wasm_bindgen]
pub fn search(denominators: &str, surds: &str, max_sin: u32) -> String {
    let run = || -> Result<Value, String> {
        let denominators = parse_list(denominators)?;
        if let Some(n) = denominators.iter().find(|&&n| n > MAX_DENOMINATOR) {
            return Err(format!("denominator {n} is above the demo limit {MAX_DENOMINATOR}"));
        }
        let max_sin_terms = max_sin as usize;
        if max_sin_terms > MAX_SIN_TERMS {
            return Err(format!("at most {MAX_SIN_TERMS} sine terms in the demo"));
        }
        let cfg = DiscoveryConfig {
            denominators,
            max_sin_terms,
            surd_candidates: parse_list(surds)?,
            ..DiscoveryConfig::default()
        };
        let report = discover(&cfg).map_err(|e| e.to_string())?;
        Ok(json!({
            "found": report.found.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "candidates": report.candidates_scanned,
            "prefilter_pass": report.prefilter_pass,
        }))
    };
    run().map_or_else(error, |v| v.to_string())
}
