use proptest::prelude::*;
use radial_core::groundstate::{
    coefficient_defects, evaluate_ground_state, ground_state_residual,
    ground_state_residual_direct, solve_ground_state,
};
use radial_core::oracle::{
    finite_difference_residual, integrate_radial, shoot_ground_energy, Direction, RadialGrid,
};
use radial_core::MultiTermPotential;

fn log_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| (lo.ln() + (hi / lo).ln() * i as f64 / (n - 1) as f64).exp())
        .collect()
}

/// Composite Simpson in x = ln r of ∫ y(r)² dr.
fn norm_squared(y: impl Fn(f64) -> f64, lo: f64, hi: f64, n: usize) -> f64 {
    let n = n + n % 2;
    let (a, b) = (lo.ln(), hi.ln());
    let h = (b - a) / n as f64;
    let f = |x: f64| {
        let r = x.exp();
        y(r).powi(2) * r
    };
    let mut sum = f(a) + f(b);
    for i in 1..n {
        sum += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    sum * h / 3.0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn algebraic_relations_hold(a in 1e-3f64..=10.0, b in 0.0f64..=10.0, d in -10.0f64..-1e-3) {
        let sol = solve_ground_state(a, b, d).unwrap();
        let pot = sol.potential(a, b, d).unwrap();
        let defects = coefficient_defects(&sol, &pot, sol.energy);
        let scales = [a, b.abs().max(a.sqrt()), pot.c.abs().max(1.0), d.abs(), sol.energy.abs()];
        for (def, scale) in defects.iter().zip(scales) {
            prop_assert!(def.abs() <= 1e-12 * scale, "{defects:?}");
        }
        let mu = b / (2.0 * a.sqrt());
        let alt = -d * d / (4.0 * (1.0 + mu).powi(2));
        prop_assert!((sol.energy - alt).abs() <= 1e-13 * alt.abs());
    }

    #[test]
    fn residual_vanishes_on_mid_range(a in 1e-3f64..=10.0, b in 0.0f64..=10.0, d in -10.0f64..-1e-3) {
        let sol = solve_ground_state(a, b, d).unwrap();
        let pot = sol.potential(a, b, d).unwrap();
        for r in log_grid(0.1, 10.0, 41) {
            let grouped = ground_state_residual(&sol, &pot, sol.energy, r).unwrap();
            let scale = (pot.eval(r).abs() + sol.energy.abs() + 0.25 / (r * r)).max(1.0);
            prop_assert!(grouped <= 1e-12 * scale, "r {r}: {grouped}");
            let direct = ground_state_residual_direct(&sol, &pot, sol.energy, r).unwrap();
            prop_assert!(direct <= 1e-12 * scale, "r {r}: {direct}");
        }
    }
}

#[test]
fn square_integrable() {
    for (a, b, d) in [
        (1.0, 2.0, -4.0),
        (4.0, 0.0, -2.0),
        (0.5, 7.0, -0.3),
        (9.0, 1.0, -9.0),
    ] {
        let sol = solve_ground_state(a, b, d).unwrap();
        let y = |r: f64| evaluate_ground_state(&sol, r).unwrap();
        let base = norm_squared(y, 1e-4, 1e3, 40_000);
        let wide = norm_squared(y, 1e-5, 1e4, 40_000);
        assert!(base.is_finite() && base > 0.0);
        assert!((wide - base).abs() <= 1e-3 * base, "{base} vs {wide}");
    }
}

#[test]
fn numerov_reproduces_closed_form() {
    let sol = solve_ground_state(1.0, 2.0, -4.0).unwrap();
    let pot = MultiTermPotential::new(1.0, 2.0, 0.25, -4.0)
        .unwrap()
        .to_potential();
    let grid = RadialGrid::uniform(0.1, 10.0, 10_000).unwrap();
    let nodes = grid.nodes();
    let exact: Vec<f64> = nodes
        .iter()
        .map(|&r| evaluate_ground_state(&sol, r).unwrap())
        .collect();
    let y = integrate_radial(
        &pot,
        sol.energy,
        0.0,
        &grid,
        Direction::Outward,
        [exact[0], exact[1]],
    )
    .unwrap();
    let worst = y
        .iter()
        .zip(&exact)
        .map(|(v, e)| (v - e).abs() / e.abs())
        .fold(0.0, f64::max);
    assert!(worst <= 1e-7, "worst relative deviation {worst:e}");
}

#[test]
fn finite_difference_is_second_order_on_closed_form() {
    let sol = solve_ground_state(1.0, 2.0, -4.0).unwrap();
    let pot = MultiTermPotential::new(1.0, 2.0, 0.25, -4.0)
        .unwrap()
        .to_potential();
    let residual = |n: usize| {
        let grid = RadialGrid::uniform(0.2, 8.0, n).unwrap();
        let y: Vec<f64> = grid
            .nodes()
            .iter()
            .map(|&r| evaluate_ground_state(&sol, r).unwrap())
            .collect();
        finite_difference_residual(&y, &grid, &pot, sol.energy, 0.0).unwrap()
    };
    let ratio = residual(201) / residual(401);
    assert!((3.5..=4.5).contains(&ratio), "Richardson ratio {ratio}");
}

#[test]
fn shooting_recovers_both_family_points() {
    let grid = RadialGrid::log(0.02, 40.0, 4000).unwrap();
    for (a, b, c, d) in [(1.0, 2.0, 0.25, -4.0), (4.0, 0.0, -3.75, -2.0)] {
        let pot = MultiTermPotential::new(a, b, c, d).unwrap().to_potential();
        let res = shoot_ground_energy(&pot, 0.0, (-2.0, -0.5), &grid, 1e-10).unwrap();
        assert!(res.converged);
        assert!((res.energy + 1.0).abs() <= 1e-6, "{res:?}");
    }
}
