use cyclotrig_web::{gauss_walk, search, verify_identity};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn verify_reports_holds_and_field_order() {
    let v = parse(verify_identity("tan(3pi/11) + 4 sin(2pi/11) = sqrt(11)"));
    assert_eq!(v["holds"], true);
    assert_eq!(v["field_order"], 44);
    assert_eq!(v["residual_zero"], true);
    let v = parse(verify_identity("tan(3pi/11) + 4 sin(2pi/11) = -sqrt(11)"));
    assert_eq!(v["holds"], false);
}

#[test]
fn errors_are_json() {
    let v = parse(verify_identity("tan(3pi/11"));
    assert!(v["error"].as_str().unwrap().contains("end of input"));
    assert!(parse(gauss_walk(0))["error"].is_string());
    assert!(parse(search("33", "11", 1))["error"].is_string());
    assert!(parse(search("11", "11", 3))["error"].is_string());
}

#[test]
fn gauss_walk_ends_at_the_gauss_sum() {
    let v = parse(gauss_walk(11));
    let points = v["points"].as_array().unwrap();
    assert_eq!(points.len(), 12);
    let end = &points[11];
    assert!(end[0].as_f64().unwrap().abs() < 1e-9);
    assert!((end[1].as_f64().unwrap() - 11f64.sqrt()).abs() < 1e-9);
    assert_eq!(v["matches"], true);
    assert_eq!(v["class"], "i sqrt(n)");
}

#[test]
fn search_finds_the_seven_family() {
    let v = parse(search("7", "7", 1));
    assert_eq!(v["found"].as_array().unwrap().len(), 3);
}
