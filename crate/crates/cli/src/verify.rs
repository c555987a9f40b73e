//! The verification suite behind `aquiflow verify`: nine numbered
//! property checks spanning every module, each returning a pass flag and
//! a human-readable measurement. The acceptance tests call the same
//! functions, so the CLI and the test suite can never disagree on
//! tolerances.

use aquiflow_core::fractional::SampledFunction;
use aquiflow_core::weights::{
    build_e_weights, discrete_space_laplacian, discrete_time_derivative, WeightTables,
};
use aquiflow_core::{
    cf_time_derivative, classical_solve, contraction_check, erf_fn, gamma_fn, lipschitz_estimate,
    parseval_check, perturbation_experiment, picard_solve, picard_solve_from,
    relative_l2_distance, run_simulation, uniqueness_check, AquiferParams, FractionalOrder, Grid,
    HeadField, InitialProfile,
};
use aquiflow_testkit::{erf_oracle, smooth_pair, GAMMA_REFERENCE};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: String,
}

impl CheckResult {
    fn new(name: &'static str, passed: bool, details: String) -> Self {
        CheckResult {
            name,
            passed,
            details,
        }
    }
}

fn order(alpha: f64) -> FractionalOrder {
    FractionalOrder::new(alpha).expect("verified orders are in (0,1)")
}

fn default_profile() -> InitialProfile {
    RunConfig::default().initial_profile
}

/// Classical-limit consistency: the fractional solution approaches the
/// classical Crank-Nicolson solution as alpha -> 1, below 5% at 0.999,
/// monotonically over {0.9, 0.99, 0.999}.
pub fn criterion_1() -> CheckResult {
    let params = AquiferParams::new(1.0, 0.01).unwrap();
    let grid = Grid::new(1.0, 100.0, 50, 0.05, 100).unwrap();
    let profile = default_profile();
    let run = |alpha: f64| -> f64 {
        let frac = run_simulation(&params, &grid, &order(alpha), &profile).unwrap();
        let classical = classical_solve(&params, &grid, &profile).unwrap();
        relative_l2_distance(&frac, &classical, grid.n_steps()).unwrap()
    };
    let d: Vec<f64> = [0.9, 0.99, 0.999].iter().map(|&a| run(a)).collect();
    let passed = d[2] <= 0.05 && d[0] > d[1] && d[1] > d[2];
    CheckResult::new(
        "1-classical-limit",
        passed,
        format!(
            "relative L2 at final time: alpha 0.9 -> {:.4}, 0.99 -> {:.4}, 0.999 -> {:.4} (need <= 0.05 and monotone)",
            d[0], d[1], d[2]
        ),
    )
}

/// Discrete-operator consistency in time: on f(t) = t^2 the E-weighted
/// derivative converges at first order, so halving tau cuts the error by
/// a factor in [1.7, 2.3].
pub fn criterion_2() -> CheckResult {
    let mut details = Vec::new();
    let mut passed = true;
    for alpha in [0.3, 0.5, 0.8] {
        let o = order(alpha);
        let oracle_fn = SampledFunction::uniform(0.0, 1.0, 20_000, |t| t * t).unwrap();
        let oracle = cf_time_derivative(&oracle_fn, &o, 1.0).unwrap();
        let err = |n: usize| -> f64 {
            let tau = 1.0 / n as f64;
            let w = build_e_weights(&o, tau, n + 1).unwrap();
            let levels: Vec<f64> = (0..=n + 1).map(|m| (m as f64 * tau).powi(2)).collect();
            (discrete_time_derivative(&levels, n, &w).unwrap() - oracle).abs()
        };
        let (e1, e2, e3) = (err(64), err(128), err(256));
        let (r1, r2) = (e1 / e2, e2 / e3);
        passed &= (1.7..=2.3).contains(&r1) && (1.7..=2.3).contains(&r2);
        details.push(format!("alpha {alpha}: ratios {r1:.3}, {r2:.3}"));
    }
    CheckResult::new(
        "2-time-operator-rate",
        passed,
        format!("{} (need [1.7, 2.3])", details.join("; ")),
    )
}

/// Space-operator consistency: on h(r) = r^2 the F-weighted Laplacian
/// error against the closed-form erf expression should shrink by [3, 5]
/// per halving of xi.
pub fn criterion_3() -> CheckResult {
    let o = order(0.5); // rho = 1
    let r_star = 0.5; // fixed physical node on [0, 1]
    let err = |m: usize| -> f64 {
        let xi = 1.0 / m as f64;
        let w = WeightTables::build(&o, 1.0, 1, xi, m).unwrap();
        let values: Vec<f64> = (0..=m).map(|l| (l as f64 * xi).powi(2)).collect();
        let j = m / 2;
        let got = discrete_space_laplacian(&values, j, &w).unwrap();
        (got - erf_fn(o.rho() * r_star)).abs()
    };
    let (e1, e2, e3) = (err(32), err(64), err(128));
    let (r1, r2) = (e1 / e2, e2 / e3);
    let passed = (3.0..=5.0).contains(&r1) && (3.0..=5.0).contains(&r2);
    CheckResult::new(
        "3-space-operator-rate",
        passed,
        format!("halving ratios {r1:.3}, {r2:.3} (need [3, 5]); errors {e1:.3e}, {e2:.3e}, {e3:.3e}"),
    )
}

/// Stability: 20 random seeds x alpha in {0.3, 0.5, 0.8} on a 32 x 64
/// grid; every perturbation trace must stay within 1 + 1e-8 of its
/// initial norm.
pub fn criterion_4() -> CheckResult {
    let params = AquiferParams::new(1.0, 0.01).unwrap();
    let grid = Grid::new(1.0, 100.0, 32, 0.05, 64).unwrap();
    let profile = default_profile();
    let mut worst = 0.0f64;
    let mut traces = 0;
    for alpha in [0.3, 0.5, 0.8] {
        let o = order(alpha);
        let mut rng = ChaCha8Rng::seed_from_u64(alpha.to_bits());
        for _ in 0..20 {
            let seed: Vec<f64> = (1..grid.n_cells())
                .map(|_| 1e-3 * rng.random_range(-1.0..1.0))
                .collect();
            let trace = perturbation_experiment(&params, &grid, &o, &profile, &seed).unwrap();
            worst = worst.max(trace.max_growth);
            traces += 1;
        }
    }
    CheckResult::new(
        "4-stability-perturbations",
        worst <= 1.0 + 1e-8,
        format!("worst max-growth over {traces} traces: {worst:.12} (need <= 1 + 1e-8)"),
    )
}

/// Contraction: requires parameters with lambda_total < 1, then measures
/// the kernel ratio over 100 random smooth pairs against the bound.
pub fn criterion_5() -> CheckResult {
    // scan the admissible parameter plane for a contraction regime
    let mut best = (f64::INFINITY, 0.0, 0.0);
    let mut found: Option<(AquiferParams, FractionalOrder)> = None;
    for ia in 0..=180 {
        let alpha = 0.05 + 0.9 * ia as f64 / 180.0;
        let o = order(alpha);
        for ig in 0..=240 {
            let gamma = 10f64.powf(-3.0 + 6.0 * ig as f64 / 240.0);
            let params = AquiferParams::new(gamma, 1.0).unwrap();
            let est = lipschitz_estimate(&params, &o);
            if est.lambda_total < best.0 {
                best = (est.lambda_total, alpha, gamma);
            }
            if est.contraction && found.is_none() {
                found = Some((params, o));
            }
        }
    }
    let Some((params, o)) = found else {
        return CheckResult::new(
            "5-contraction-bound",
            false,
            format!(
                "no admissible parameters give lambda_total < 1; the scan minimum is {:.4} at alpha = {:.3}, gamma = {:.4}",
                best.0, best.1, best.2
            ),
        );
    };
    // only reachable if a contraction regime exists
    let est = lipschitz_estimate(&params, &o);
    let nodes: Vec<f64> = (0..=64).map(|i| 1.0 + i as f64 / 64.0).collect();
    let mut worst = 0.0f64;
    for seed in 0..100 {
        let (f, g) = smooth_pair(seed, &nodes, 1.0);
        let h = SampledFunction::new(nodes.clone(), f).unwrap();
        let p = SampledFunction::new(nodes.clone(), g).unwrap();
        let ratio = contraction_check(&h, &p, &params, &o, 2.0, 0.0).unwrap();
        worst = worst.max(ratio);
    }
    CheckResult::new(
        "5-contraction-bound",
        worst <= est.lambda_total,
        format!("measured ratio {worst:.4} vs bound {:.4}", est.lambda_total),
    )
}

/// Picard convergence and cross-method agreement on an 8 x 16 grid.
pub fn criterion_6() -> CheckResult {
    let params = AquiferParams::new(0.005, 1.0).unwrap();
    let grid = Grid::new(1.0, 2.0, 8, 0.25, 16).unwrap();
    let o = order(0.47);
    let profile = InitialProfile::Gaussian {
        center: 1.5,
        width: 1.0 / 6.0,
        amplitude: 1.0,
    };
    let report = picard_solve(&params, &grid, &o, &profile, 200).unwrap();
    let decreasing = report.step_norms.windows(2).all(|w| w[1] < w[0]);
    let scheme = run_simulation(&params, &grid, &o, &profile).unwrap();
    let gap = relative_l2_distance(&report.field, &scheme, grid.n_steps()).unwrap();
    let passed = report.converged && decreasing && gap <= 0.10;
    CheckResult::new(
        "6-picard-convergence",
        passed,
        format!(
            "converged = {} in {} iterations, norms decreasing = {decreasing}, final-level gap to the scheme {gap:.4} (need <= 0.10)",
            report.converged, report.iterations
        ),
    )
}

/// Uniqueness and determinism: identical configs give byte-identical
/// serialized output, and Picard limits from two distinct admissible
/// starts coincide to 1e-6 relative.
pub fn criterion_7() -> CheckResult {
    let cfg = RunConfig {
        n_cells: 24,
        n_steps: 32,
        ..RunConfig::default()
    };
    let bytes = || -> Vec<u8> {
        let field =
            run_simulation(&cfg.params(), &cfg.grid(), &cfg.order(), &cfg.initial_profile)
                .unwrap();
        let mut buf = Vec::new();
        crate::output::write_csv(&mut buf, &field).unwrap();
        buf
    };
    let identical = bytes() == bytes();

    let params = AquiferParams::new(0.01, 1.0).unwrap();
    let grid = Grid::new(1.0, 2.0, 8, 0.25, 16).unwrap();
    let o = order(0.47);
    let profile = InitialProfile::Gaussian {
        center: 1.5,
        width: 1.0 / 6.0,
        amplitude: 1.0,
    };
    let a = picard_solve(&params, &grid, &o, &profile, 50).unwrap();
    let mut ramp = HeadField::new(&grid, &profile);
    for k in 1..=grid.n_steps() {
        let fade = 1.0 - 0.5 * k as f64 / grid.n_steps() as f64;
        for j in 1..grid.n_cells() {
            ramp.set_value(j, k, ramp.value(j, 0) * fade);
        }
    }
    let b = picard_solve_from(&ramp, &params, &o, 50).unwrap();
    let gap = uniqueness_check(&a.field, &b.field).unwrap();
    let rel = gap / a.field.raw().amax();
    let passed = identical && a.converged && b.converged && rel <= 1e-6;
    CheckResult::new(
        "7-uniqueness-determinism",
        passed,
        format!("byte-identical reruns = {identical}; picard start gap {rel:.2e} relative (need <= 1e-6)"),
    )
}

/// Special functions against independent references.
pub fn criterion_8() -> CheckResult {
    let mut worst_erf = 0.0f64;
    for i in 0..10_000 {
        let x = -6.0 + 12.0 * i as f64 / 9_999.0;
        worst_erf = worst_erf.max((erf_fn(x) - erf_oracle(x)).abs());
    }
    let mut worst_gamma = 0.0f64;
    for &(x, reference) in GAMMA_REFERENCE {
        worst_gamma = worst_gamma.max((gamma_fn(x).unwrap() - reference).abs());
    }
    let mut worst_b = 0.0f64;
    for alpha in [1e-6, 1.0 - 1e-6] {
        worst_b = worst_b.max((order(alpha).b_alpha() - 1.0).abs());
    }
    let passed = worst_erf <= 1e-9 && worst_gamma <= 1e-10 && worst_b <= 1e-4;
    CheckResult::new(
        "8-special-functions",
        passed,
        format!(
            "max |erf error| {worst_erf:.2e} (<= 1e-9), max |gamma error| {worst_gamma:.2e} (<= 1e-10), B endpoint gap {worst_b:.2e} (<= 1e-4)"
        ),
    )
}

/// Parseval identity on 100 random interior vectors.
pub fn criterion_9() -> CheckResult {
    let grid = Grid::new(1.0, 100.0, 50, 0.05, 100).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let delta: Vec<f64> = (1..grid.n_cells())
            .map(|_| rng.random_range(-1.0..1.0))
            .collect();
        let scale: f64 = delta.iter().map(|d| grid.xi() * d * d).sum();
        worst = worst.max(parseval_check(&delta, &grid) / scale);
    }
    CheckResult::new(
        "9-parseval",
        worst <= 1e-10,
        format!("worst relative discrepancy {worst:.2e} (need <= 1e-10)"),
    )
}

pub fn run_all() -> Vec<CheckResult> {
    vec![
        criterion_1(),
        criterion_2(),
        criterion_3(),
        criterion_4(),
        criterion_5(),
        criterion_6(),
        criterion_7(),
        criterion_8(),
        criterion_9(),
    ]
}
