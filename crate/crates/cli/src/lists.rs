//! Comma-separated list arguments.

use cyclotrig::exact::rational::parse_rational;
use cyclotrig::Rational;

pub fn u64_list(text: &str) -> Result<Vec<u64>, String> {
    items(text)
        .map(|s| s.parse::<u64>().map_err(|_| format!("expected a positive integer, got '{s}'")))
        .collect()
}

/// Rationals, where a leading `±` or `+-` stands for both signs.
pub fn rational_list(text: &str) -> Result<Vec<Rational>, String> {
    let mut out = Vec::new();
    for item in items(text) {
        let (both, body) = match item.strip_prefix('±').or_else(|| item.strip_prefix("+-")) {
            Some(rest) => (true, rest),
            None => (false, item),
        };
        let q = parse_rational(body).ok_or_else(|| format!("expected a rational number, got '{item}'"))?;
        if both {
            out.push(q.clone());
            out.push(-q);
        } else {
            out.push(q);
        }
    }
    Ok(out)
}

fn items(text: &str) -> impl Iterator<Item = &str> {
    text.split(',').map(str::trim).filter(|s| !s.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use cyclotrig::exact::rational::{frac, int};

    #[test]
    fn expands_plus_minus() {
        assert_eq!(rational_list("±4").unwrap(), vec![int(4), int(-4)]);
        assert_eq!(rational_list("+-1/2, 3").unwrap(), vec![frac(1, 2), frac(-1, 2), int(3)]);
        assert_eq!(rational_list("4,-4").unwrap(), vec![int(4), int(-4)]);
        assert!(rational_list("4,x").is_err());
    }

    #[test]
    fn integer_lists() {
        assert_eq!(u64_list("7, 11,").unwrap(), vec![7, 11]);
        assert!(u64_list("-7").is_err());
    }
}
