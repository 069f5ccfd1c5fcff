use radial_demo::{ground_state_json, series_json, shoot_json};
use serde_json::Value;

fn parse(s: &str) -> Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn ground_state_curve_family_point() {
    let v = parse(&ground_state_json(1.0, 2.0, -4.0, 1e-2, 1e2, 300).unwrap());
    assert_eq!(v["E"], -1.0);
    assert_eq!(v["required_C"], 0.25);
    let y = v["y"].as_array().unwrap();
    assert_eq!(y.len(), 300);
    let peak = y.iter().map(|x| x.as_f64().unwrap()).fold(0.0, f64::max);
    assert_eq!(peak, 1.0);
}

#[test]
fn ground_state_errors_are_messages() {
    assert!(ground_state_json(1.0, -2.0, -4.0, 1e-2, 1e2, 300).is_err());
    assert!(ground_state_json(1.0, 2.0, 4.0, 1e-2, 1e2, 300).is_err());
    assert!(ground_state_json(1.0, 2.0, -4.0, 1e-2, 1e2, 1_000_000).is_err());
}

#[test]
fn series_curve_near_origin() {
    let v = parse(&series_json(1.0, 6.0, 1.0, 0.5, 1.0, 40, 0.1, 0.2, 50).unwrap());
    assert!(v["max_residual"].as_f64().unwrap() < 1e-8);
    assert!(v["max_recurrence_residual"].as_f64().unwrap() < 1e-12);
    assert_eq!(v["r"].as_array().unwrap().len(), 50);
}

#[test]
fn series_rejects_odd_beta() {
    let err = series_json(1.0, 5.0, 1.0, 0.5, 1.0, 40, 0.1, 0.2, 50).unwrap_err();
    assert!(err.contains("power series"), "{err}");
}

#[test]
fn shooting_finds_family_energy() {
    let v = parse(&shoot_json(1.0, 2.0, 0.25, -4.0, -2.0, -0.5).unwrap());
    assert_eq!(v["converged"], true);
    assert!((v["energy"].as_f64().unwrap() + 1.0).abs() < 1e-6);
}
