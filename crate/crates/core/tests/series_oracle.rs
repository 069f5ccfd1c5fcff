//! Independent route to the series coefficients: apply the second-order
//! operator for σ,
//!
//!   σ'' + (2ω/r + p(r)) σ' + (ω(ω−1)/r² + ω p(r)/r + q(r)) σ,
//!
//! to a truncated Laurent polynomial term by term and require each power
//! of r to vanish. No recurrence code is shared with the library.

use std::collections::BTreeMap;

use num_complex::Complex64;
use radial_core::asymptotics::Branch;
use radial_core::series::{build_series, RecurrenceForm, SeriesConfig};
use radial_core::PotentialMonomial;

type Laurent = BTreeMap<i64, Complex64>;

struct Params {
    alpha: f64,
    beta: f64,
    kappa: f64,
    lambda: f64,
    eps: f64,
}

fn add(map: &mut Laurent, power: i64, v: Complex64) {
    *map.entry(power).or_insert(Complex64::new(0.0, 0.0)) += v;
}

fn apply_operator(sigma: &Laurent, p: &Params) -> Laurent {
    let i = Complex64::new(0.0, 1.0);
    let b = (p.beta / 2.0) as i64;
    let omega = p.beta / 4.0;
    let sa = p.alpha.sqrt();
    let sk = p.kappa.sqrt();
    let l2 = p.lambda * p.lambda - 0.25;

    // first-derivative coefficient as (power, value) pairs
    let a1 = [
        (-1, Complex64::new(2.0 * omega, 0.0)),
        (-b, Complex64::new(2.0 * sa, 0.0)),
        (0, i * 2.0 * p.eps * sk),
    ];
    // zeroth-order coefficient: ω(ω−1)/r² + (ω/r) p(r) + q(r)
    let a0 = [
        (-2, Complex64::new(omega * (omega - 1.0) - l2, 0.0)),
        (
            -b - 1,
            Complex64::new(2.0 * omega * sa - 0.5 * p.beta * sa, 0.0),
        ),
        (-1, i * 2.0 * omega * p.eps * sk),
        (-b, i * 2.0 * p.eps * (p.alpha * p.kappa).sqrt()),
    ];

    let mut out = Laurent::new();
    for (&n, &a) in sigma {
        let nf = n as f64;
        add(&mut out, n - 2, a * nf * (nf - 1.0));
        for &(pw, c) in &a1 {
            add(&mut out, n - 1 + pw, c * a * nf);
        }
        for &(pw, c) in &a0 {
            add(&mut out, n + pw, c * a);
        }
    }
    out
}

/// Coefficients a_0..=a_max with a_0 = 1 and a_s = 0 below, solved one at a
/// time by making the lowest unresolved power of the operator vanish.
fn oracle_coefficients(p: &Params, max: i64) -> Laurent {
    let b = (p.beta / 2.0) as i64;
    let mut sigma = Laurent::new();
    sigma.insert(0, Complex64::new(1.0, 0.0));
    for n in 1..=max {
        let power = n - 1 - b;
        sigma.insert(n, Complex64::new(0.0, 0.0));
        let f0 = apply_operator(&sigma, p)
            .get(&power)
            .copied()
            .unwrap_or_default();
        sigma.insert(n, Complex64::new(1.0, 0.0));
        let f1 = apply_operator(&sigma, p)
            .get(&power)
            .copied()
            .unwrap_or_default();
        sigma.insert(n, -f0 / (f1 - f0));
    }
    sigma
}

fn config(p: &Params, s_max: i64) -> SeriesConfig {
    let pot = PotentialMonomial::new(p.alpha, p.beta).unwrap();
    let branch = Branch::from_sign(p.eps).unwrap();
    SeriesConfig::new(pot, p.kappa, p.lambda, branch)
        .unwrap()
        .with_window(0, s_max)
        .unwrap()
}

#[test]
fn sextic_coefficients_from_operator() {
    let p = Params {
        alpha: 1.0,
        beta: 6.0,
        kappa: 1.0,
        lambda: 0.5,
        eps: 1.0,
    };
    let oracle = oracle_coefficients(&p, 2);
    assert!((oracle[&1] - Complex64::new(0.0, -1.0)).norm() < 1e-15);
    assert!((oracle[&2] - Complex64::new(-11.0 / 16.0, 0.0)).norm() < 1e-15);
}

#[test]
fn library_matches_operator_oracle() {
    for beta in [4.0, 6.0, 8.0, 10.0] {
        for (alpha, kappa, lambda, eps) in [
            (1.0, 1.0, 0.5, 1.0),
            (0.5, 2.0, 0.0, -1.0),
            (2.0, 0.3, 1.0, 1.0),
        ] {
            let p = Params {
                alpha,
                beta,
                kappa,
                lambda,
                eps,
            };
            let oracle = oracle_coefficients(&p, 12);
            let sol = build_series(&config(&p, 12)).unwrap();
            for n in 0..=12 {
                let lib = sol.coefficients.get(n);
                let diff = (lib - oracle[&n]).norm();
                assert!(
                    diff <= 1e-10 * oracle[&n].norm().max(1.0),
                    "beta {beta} n {n}: {lib} vs {}",
                    oracle[&n]
                );
            }
        }
    }
}

#[test]
fn operator_annihilates_untruncated_orders() {
    let p = Params {
        alpha: 1.0,
        beta: 8.0,
        kappa: 1.0,
        lambda: 1.0,
        eps: 1.0,
    };
    let n_max = 20;
    let sol = build_series(&config(&p, n_max)).unwrap();
    let sigma: Laurent = sol.coefficients.iter().collect();
    let image = apply_operator(&sigma, &p);
    let b = 4;
    let scale = sigma.values().map(|v| v.norm()).fold(0.0, f64::max);
    for (&power, v) in &image {
        if power < n_max - b {
            assert!(v.norm() <= 1e-12 * scale, "power {power}: {v}");
        }
    }
}

#[test]
fn literature_form_disagrees_with_operator() {
    let p = Params {
        alpha: 1.0,
        beta: 6.0,
        kappa: 1.0,
        lambda: 0.5,
        eps: 1.0,
    };
    let sol = build_series(&config(&p, 2).with_form(RecurrenceForm::Literature)).unwrap();
    assert_eq!(sol.coefficients.get(2), Complex64::new(13.0 / 16.0, 0.0));
    let oracle = oracle_coefficients(&p, 2);
    assert!((sol.coefficients.get(2) - oracle[&2]).norm() > 1.0);
}
