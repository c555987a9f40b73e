//! Stability diagnostics for the implicit scheme: discrete norms, a
//! Parseval identity for interior perturbations, a per-mode symbol ratio
//! of the history-free step, and an end-to-end two-run perturbation
//! experiment.
//!
//! The mode ratio treats one Fourier mode e^{i xi T j} frozen in the
//! current step (memory terms beyond the diagonal dropped): with
//! A = G theta(r_j) sin(xi T) from the centered advection difference and
//! B = E[k][k] + gamma (cos(xi T) - 1) sum_{d<j} F_d e^{-i d xi T} from the
//! memory diagonal and the one-sided diffusion stencil, the implicit split
//! gives the amplification |{-i A + B}| / |{i A + B}|. This is a local
//! indicator; the perturbation experiment measures the full scheme.

use num_complex::Complex64;

use crate::domain::{AquiferParams, Grid, HeadField, InitialProfile};
use crate::error::{Error, Result};
use crate::fractional::FractionalOrder;
use crate::scheme::{assemble_system, step};
use crate::weights::WeightTables;

/// Interior-perturbation history of one two-run experiment.
/// `norms[k]` is the discrete l2 norm of the difference at level k;
/// `max_growth` is the largest norms[k]/norms[0].
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationTrace {
    pub norms: Vec<f64>,
    pub max_growth: f64,
}

/// One mode-ratio evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeAmplification {
    pub frequency_index: usize,
    pub t_factor: f64,
    pub ratio: f64,
}

/// Discrete l2 norm sqrt(sum_j xi delta_j^2).
pub fn discrete_l2_norm(delta: &[f64], xi: f64) -> f64 {
    (xi * delta.iter().map(|&d| d * d).sum::<f64>()).sqrt()
}

/// Absolute gap in the Parseval identity for an interior vector delta
/// (indices j = 1..M-1 of an M-cell grid, so M = delta.len() + 1):
/// with d(a) = (1/M) sum_j delta_j e^{-2 pi i a j / M}, the identity is
/// sum_j xi delta_j^2 = xi M sum_a |d(a)|^2.
pub fn parseval_check(delta: &[f64], grid: &Grid) -> f64 {
    let m = delta.len() + 1;
    let xi = grid.xi();
    let physical: f64 = delta.iter().map(|&d| xi * d * d).sum();
    let mut spectral = 0.0;
    for a in 0..m {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, &d) in delta.iter().enumerate() {
            let phase = -2.0 * std::f64::consts::PI * (a * (j + 1)) as f64 / m as f64;
            acc += d * Complex64::from_polar(1.0, phase);
        }
        acc /= m as f64;
        spectral += acc.norm_sqr();
    }
    (physical - xi * m as f64 * spectral).abs()
}

/// Amplification ratio of the mode e^{i xi T j} at interior node j under
/// the implicit split. `t_factor` is the continuous frequency xi T; the
/// stored `frequency_index` is the nearest integer mode count over the
/// radial span.
pub fn mode_amplification(
    t_factor: f64,
    j: usize,
    weights: &WeightTables,
    params: &AquiferParams,
    grid: &Grid,
) -> Result<ModeAmplification> {
    if !t_factor.is_finite() {
        return Err(Error::Domain(format!("t_factor = {t_factor} must be finite")));
    }
    if j == 0 || j >= grid.n_cells() {
        return Err(Error::IndexOutOfRange(format!(
            "mode ratio needs an interior node, got j = {j} of M = {}",
            grid.n_cells()
        )));
    }
    let rel = |a: f64, b: f64| (a - b).abs() <= 1e-12 * a.abs().max(b.abs()).max(1.0);
    if weights.n_cells() != grid.n_cells() || !rel(weights.xi(), grid.xi()) {
        return Err(Error::DimensionMismatch(
            "weight tables were built for a different grid".into(),
        ));
    }

    let xi_t = grid.xi() * t_factor;
    let e0 = weights.e(1, 1);
    let gamma = params.gamma();
    let mut f_sum = Complex64::new(0.0, 0.0);
    for d in 0..j {
        f_sum += weights.f_diag()[d] * Complex64::from_polar(1.0, -(d as f64) * xi_t);
    }
    let a_term = weights.g_coeff() * params.theta_of_r(grid.r(j)) * xi_t.sin();
    let b_term = Complex64::new(e0, 0.0) + gamma * (xi_t.cos() - 1.0) * f_sum;

    let denom = (Complex64::i() * a_term + b_term).norm();
    if denom == 0.0 {
        return Err(Error::Numeric(format!(
            "mode denominator vanished at t_factor = {t_factor}, j = {j}"
        )));
    }
    let ratio = (-Complex64::i() * a_term + b_term).norm() / denom;
    let span = grid.r_max() - grid.r_min();
    let frequency_index = (t_factor * span / (2.0 * std::f64::consts::PI)).round() as usize;
    Ok(ModeAmplification {
        frequency_index,
        t_factor,
        ratio,
    })
}

/// March one field with an optional interior perturbation of level 0.
fn simulate(
    params: &AquiferParams,
    grid: &Grid,
    order: &FractionalOrder,
    profile: &InitialProfile,
    seed: Option<&[f64]>,
) -> Result<HeadField> {
    let weights = WeightTables::build(order, grid.tau(), grid.n_steps(), grid.xi(), grid.n_cells())?;
    let mut system = assemble_system(params, grid, &weights)?;
    let mut h = HeadField::new(grid, profile);
    if let Some(s) = seed {
        for j in 1..grid.n_cells() {
            h.set_value(j, 0, h.value(j, 0) + s[j - 1]);
        }
    }
    for k in 0..grid.n_steps() {
        step(&mut system, &mut h, k, &weights)?;
    }
    Ok(h)
}

/// Two-run experiment: simulate from the profile and from the profile
/// plus an interior seed, and trace the discrete l2 norm of the gap.
/// The seed has one entry per interior node and must not be all zero.
pub fn perturbation_experiment(
    params: &AquiferParams,
    grid: &Grid,
    order: &FractionalOrder,
    profile: &InitialProfile,
    seed: &[f64],
) -> Result<PerturbationTrace> {
    let m = grid.n_cells();
    if seed.len() != m - 1 {
        return Err(Error::DimensionMismatch(format!(
            "seed has {} entries, the grid has {} interior nodes",
            seed.len(),
            m - 1
        )));
    }
    if seed.iter().all(|&s| s == 0.0) {
        return Err(Error::Domain("perturbation seed must not be zero".into()));
    }
    let base = simulate(params, grid, order, profile, None)?;
    let pert = simulate(params, grid, order, profile, Some(seed))?;

    let xi = grid.xi();
    let mut norms = Vec::with_capacity(grid.n_steps() + 1);
    for k in 0..=grid.n_steps() {
        let delta: Vec<f64> = (1..m).map(|j| pert.value(j, k) - base.value(j, k)).collect();
        norms.push(discrete_l2_norm(&delta, xi));
    }
    let max_growth = norms.iter().fold(0.0f64, |acc, &n| acc.max(n / norms[0]));
    Ok(PerturbationTrace { norms, max_growth })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use aquiflow_testkit::fields::smooth_values;
    use rand::Rng;
    use rand_chacha::rand_core::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn order(alpha: f64) -> FractionalOrder {
        FractionalOrder::new(alpha).unwrap()
    }

    fn default_setup(alpha: f64) -> (AquiferParams, Grid, FractionalOrder, InitialProfile) {
        (
            AquiferParams::new(1.0, 0.01).unwrap(),
            Grid::new(1.0, 100.0, 32, 0.05, 64).unwrap(),
            order(alpha),
            InitialProfile::Gaussian {
                center: 50.5,
                width: 19.8,
                amplitude: 1.0,
            },
        )
    }

    #[test]
    fn l2_norm_hand_value() {
        assert_eq!(discrete_l2_norm(&[], 0.5), 0.0);
        assert_eq!(discrete_l2_norm(&[0.0, 0.0], 0.5), 0.0);
        assert_abs_diff_eq!(discrete_l2_norm(&[3.0, 4.0], 2.0), 50.0f64.sqrt(), epsilon = 1e-15);
    }

    #[test]
    fn parseval_identity_holds() {
        let grid = Grid::new(1.0, 100.0, 32, 0.05, 64).unwrap();
        assert_eq!(parseval_check(&[0.0; 31], &grid), 0.0);

        // single resolved sine mode
        let m = grid.n_cells();
        let mode: Vec<f64> = (1..m)
            .map(|j| (2.0 * std::f64::consts::PI * 3.0 * j as f64 / m as f64).sin())
            .collect();
        let scale = discrete_l2_norm(&mode, grid.xi()).powi(2);
        assert!(parseval_check(&mode, &grid) <= 1e-12 * scale);

        // random interior vectors
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..100 {
            let delta: Vec<f64> = (1..m).map(|_| rng.random_range(-1.0..1.0)).collect();
            let scale = discrete_l2_norm(&delta, grid.xi()).powi(2);
            assert!(parseval_check(&delta, &grid) <= 1e-10 * scale);
        }
    }

    #[test]
    fn zero_frequency_mode_passes_through() {
        let (params, grid, ord, _) = default_setup(0.5);
        let w = WeightTables::build(&ord, grid.tau(), grid.n_steps(), grid.xi(), grid.n_cells())
            .unwrap();
        let m = mode_amplification(0.0, 5, &w, &params, &grid).unwrap();
        assert_eq!(m.ratio, 1.0);
        assert_eq!(m.frequency_index, 0);
    }

    #[test]
    fn first_interior_node_has_real_symbol() {
        // j = 1 keeps only the real F_0 term, so B is real and the two
        // half-step magnitudes coincide exactly.
        let (params, grid, ord, _) = default_setup(0.3);
        let w = WeightTables::build(&ord, grid.tau(), grid.n_steps(), grid.xi(), grid.n_cells())
            .unwrap();
        for a in 1..grid.n_cells() {
            let t = 2.0 * std::f64::consts::PI * a as f64 / (grid.r_max() - grid.r_min());
            let m = mode_amplification(t, 1, &w, &params, &grid).unwrap();
            assert_eq!(m.ratio, 1.0);
            assert_eq!(m.frequency_index, a);
        }
    }

    #[test]
    fn mode_sweep_stays_bounded_at_default_parameters() {
        let (params, grid, _, _) = default_setup(0.5);
        let span = grid.r_max() - grid.r_min();
        let mut max_ratio = 0.0f64;
        for alpha in [0.3, 0.5, 0.8] {
            let ord = order(alpha);
            let w =
                WeightTables::build(&ord, grid.tau(), grid.n_steps(), grid.xi(), grid.n_cells())
                    .unwrap();
            for a in 1..grid.n_cells() {
                let t = 2.0 * std::f64::consts::PI * a as f64 / span;
                for j in 1..grid.n_cells() {
                    let m = mode_amplification(t, j, &w, &params, &grid).unwrap();
                    assert!(m.ratio.is_finite());
                    max_ratio = max_ratio.max(m.ratio);
                }
            }
        }
        assert!(max_ratio <= 1.0 + 1e-9, "sweep max {max_ratio}");
    }

    #[test]
    fn mode_ratio_guards() {
        let (params, grid, ord, _) = default_setup(0.5);
        let w = WeightTables::build(&ord, grid.tau(), grid.n_steps(), grid.xi(), grid.n_cells())
            .unwrap();
        assert!(matches!(
            mode_amplification(1.0, 0, &w, &params, &grid),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            mode_amplification(1.0, 32, &w, &params, &grid),
            Err(Error::IndexOutOfRange(_))
        ));
        assert!(matches!(
            mode_amplification(f64::NAN, 3, &w, &params, &grid),
            Err(Error::Domain(_))
        ));
        let other = Grid::new(1.0, 100.0, 16, 0.05, 64).unwrap();
        let wo = WeightTables::build(&ord, other.tau(), other.n_steps(), other.xi(), other.n_cells())
            .unwrap();
        assert!(matches!(
            mode_amplification(1.0, 3, &wo, &params, &grid),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn perturbation_guards() {
        let (params, grid, ord, profile) = default_setup(0.5);
        assert!(matches!(
            perturbation_experiment(&params, &grid, &ord, &profile, &[0.0; 31]),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            perturbation_experiment(&params, &grid, &ord, &profile, &[1.0; 7]),
            Err(Error::DimensionMismatch(_))
        ));
    }

    #[test]
    fn seeded_perturbations_never_grow() {
        for alpha in [0.3, 0.5, 0.8] {
            let (params, grid, ord, profile) = default_setup(alpha);
            let mut rng = ChaCha8Rng::seed_from_u64(alpha.to_bits());
            for _ in 0..5 {
                let seed: Vec<f64> = (0..grid.n_cells() - 1)
                    .map(|_| 1e-3 * rng.random_range(-1.0..1.0))
                    .collect();
                let trace =
                    perturbation_experiment(&params, &grid, &ord, &profile, &seed).unwrap();
                assert_eq!(trace.norms.len(), grid.n_steps() + 1);
                assert!(trace.norms.iter().all(|n| n.is_finite()));
                assert!(
                    trace.max_growth <= 1.0 + 1e-8,
                    "alpha {alpha}: growth {}",
                    trace.max_growth
                );
            }
        }
    }

    #[test]
    fn difference_evolution_is_linear_in_the_seed() {
        // the scheme is linear, so the base-vs-perturbed gap equals the
        // evolution of the bare seed from the zero profile
        let (params, grid, ord, profile) = default_setup(0.5);
        let nodes = grid.r_nodes();
        let seed_full = smooth_values(9, &nodes, 1e-3);
        let seed = &seed_full[1..nodes.len() - 1];

        let with_profile =
            perturbation_experiment(&params, &grid, &ord, &profile, seed).unwrap();
        let bare =
            perturbation_experiment(&params, &grid, &ord, &InitialProfile::Zero, seed).unwrap();
        assert_eq!(with_profile.norms.len(), bare.norms.len());
        for (a, b) in with_profile.norms.iter().zip(&bare.norms) {
            assert_relative_eq!(a, b, max_relative = 1e-12);
        }
    }

    #[test]
    fn empirical_growth_respects_the_mode_bound() {
        let (params, grid, ord, profile) = default_setup(0.5);
        let w = WeightTables::build(&ord, grid.tau(), grid.n_steps(), grid.xi(), grid.n_cells())
            .unwrap();
        let span = grid.r_max() - grid.r_min();
        let mut sweep_max = 0.0f64;
        for a in 1..grid.n_cells() {
            let t = 2.0 * std::f64::consts::PI * a as f64 / span;
            for j in 1..grid.n_cells() {
                sweep_max = sweep_max.max(
                    mode_amplification(t, j, &w, &params, &grid).unwrap().ratio,
                );
            }
        }
        let nodes = grid.r_nodes();
        let seed_full = smooth_values(17, &nodes, 1e-3);
        let trace = perturbation_experiment(
            &params,
            &grid,
            &ord,
            &profile,
            &seed_full[1..nodes.len() - 1],
        )
        .unwrap();
        assert!(trace.max_growth <= sweep_max + 1e-6);
    }
}
