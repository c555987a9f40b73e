//! Precomputed discrete weight tables.
//!
//! E weights are exact integrals of the exponential time kernel over
//! substeps, F weights exact integrals of the Gaussian space kernel over
//! cells (via erf), G the centered-difference advection coefficient.
//! Both E and F depend only on the index difference, so a single diagonal
//! vector backs each matrix accessor.

use crate::error::{Error, Result};
use crate::fractional::FractionalOrder;
use crate::special::erf_fn;

#[derive(Debug, Clone)]
struct TimePart {
    tau: f64,
    n_steps: usize,
    /// e_diag[d] = E[k][s] with d = k−s, 0 <= d < n_steps
    e_diag: Vec<f64>,
}

#[derive(Debug, Clone)]
struct SpacePart {
    xi: f64,
    n_cells: usize,
    /// f_diag[d] = F[j][l] with d = j−l, 0 <= d < n_cells
    f_diag: Vec<f64>,
    g_coeff: f64,
}

/// E (time-memory), F (space-nonlocal) and G (advection) coefficients for
/// one fractional order on one grid. Immutable after construction.
#[derive(Debug, Clone)]
pub struct WeightTables {
    order: FractionalOrder,
    time: Option<TimePart>,
    space: Option<SpacePart>,
}

/// Time part only: E[k][s] = (B(α)/(ατ))·(e^{−ρτ(k−s)} − e^{−ρτ(k−s+1)}).
pub fn build_e_weights(order: &FractionalOrder, tau: f64, n_steps: usize) -> Result<WeightTables> {
    if !(tau > 0.0) || n_steps < 1 {
        return Err(Error::Domain(format!(
            "need tau > 0 and n_steps >= 1, got tau = {tau}, n_steps = {n_steps}"
        )));
    }
    let (b, a, rho) = (order.b_alpha(), order.alpha(), order.rho());
    let scale = b / (a * tau);
    let e_diag = (0..n_steps)
        .map(|d| {
            let d = d as f64;
            scale * ((-rho * tau * d).exp() - (-rho * tau * (d + 1.0)).exp())
        })
        .collect();
    Ok(WeightTables {
        order: *order,
        time: Some(TimePart {
            tau,
            n_steps,
            e_diag,
        }),
        space: None,
    })
}

/// Space part only: F[j][l] = (1/(2ξ²))·(erf[ρξ(j−l)] − erf[ρξ(j−l−1)]),
/// plus the advection coefficient G = 1/(2ξ).
pub fn build_f_weights(order: &FractionalOrder, xi: f64, n_cells: usize) -> Result<WeightTables> {
    if !(xi > 0.0) || n_cells < 3 {
        return Err(Error::Domain(format!(
            "need xi > 0 and n_cells >= 3, got xi = {xi}, n_cells = {n_cells}"
        )));
    }
    let rho = order.rho();
    let scale = 1.0 / (2.0 * xi * xi);
    let f_diag = (0..n_cells)
        .map(|d| {
            let d = d as f64;
            scale * (erf_fn(rho * xi * d) - erf_fn(rho * xi * (d - 1.0)))
        })
        .collect();
    Ok(WeightTables {
        order: *order,
        time: None,
        space: Some(SpacePart {
            xi,
            n_cells,
            f_diag,
            g_coeff: 1.0 / (2.0 * xi),
        }),
    })
}

impl WeightTables {
    /// Both parts, as the marching scheme needs them.
    pub fn build(
        order: &FractionalOrder,
        tau: f64,
        n_steps: usize,
        xi: f64,
        n_cells: usize,
    ) -> Result<Self> {
        let time = build_e_weights(order, tau, n_steps)?.time;
        let space = build_f_weights(order, xi, n_cells)?.space;
        Ok(WeightTables {
            order: *order,
            time,
            space,
        })
    }

    pub fn order(&self) -> &FractionalOrder {
        &self.order
    }

    fn time_part(&self) -> &TimePart {
        self.time.as_ref().expect("time weights not built")
    }

    fn space_part(&self) -> &SpacePart {
        self.space.as_ref().expect("space weights not built")
    }

    pub fn tau(&self) -> f64 {
        self.time_part().tau
    }

    pub fn n_steps(&self) -> usize {
        self.time_part().n_steps
    }

    pub fn xi(&self) -> f64 {
        self.space_part().xi
    }

    pub fn n_cells(&self) -> usize {
        self.space_part().n_cells
    }

    /// E[k][s] for 1 <= s <= k <= n_steps (and the s = 0 full-memory
    /// extension, see `discrete_time_derivative`).
    pub fn e(&self, k: usize, s: usize) -> f64 {
        assert!(s <= k, "E[k][s] needs s <= k, got k = {k}, s = {s}");
        self.time_part().e_diag[k - s]
    }

    /// F[j][l] for 1 <= l <= j <= n_cells − 1.
    pub fn f(&self, j: usize, l: usize) -> f64 {
        assert!(l <= j, "F[j][l] needs l <= j, got j = {j}, l = {l}");
        self.space_part().f_diag[j - l]
    }

    /// Diagonal storage: e_diag()[k − s] = E[k][s].
    pub fn e_diag(&self) -> &[f64] {
        &self.time_part().e_diag
    }

    /// Diagonal storage: f_diag()[j − l] = F[j][l].
    pub fn f_diag(&self) -> &[f64] {
        &self.space_part().f_diag
    }

    pub fn g_coeff(&self) -> f64 {
        self.space_part().g_coeff
    }

    pub fn has_time_part(&self) -> bool {
        self.time.is_some()
    }

    pub fn has_space_part(&self) -> bool {
        self.space.is_some()
    }
}

/// Discrete Caputo-Fabrizio time derivative at level k:
/// Σ_{m=0}^{k} (f^{m+1} − f^m) · E-weight of lag (k−m).
///
/// The memory sum runs from m = 0, so the first difference f¹ − f⁰
/// carries weight E of lag k. A sum starting at m = 1 would leave the
/// first time step with an empty memory and no implicit term; the full
/// sum is what makes the scheme well posed at k = 0 and is exactly the
/// substep-integrated kernel quadrature.
///
/// `levels` holds f(t_0), ..., f(t_n); requires k + 1 < levels.len().
pub fn discrete_time_derivative(levels: &[f64], k: usize, weights: &WeightTables) -> Result<f64> {
    if k + 1 >= levels.len() {
        return Err(Error::IndexOutOfRange(format!(
            "level k + 1 = {} beyond sampled history of {}",
            k + 1,
            levels.len()
        )));
    }
    let e = weights.e_diag();
    if k >= e.len() {
        return Err(Error::IndexOutOfRange(format!(
            "lag {k} beyond built weight table of {}",
            e.len()
        )));
    }
    Ok((0..=k)
        .map(|m| (levels[m + 1] - levels[m]) * e[k - m])
        .sum())
}

/// Discrete Caputo-Fabrizio space Laplacian at node j:
/// Σ_{l=1}^{j} (v_{l+1} − 2v_l + v_{l−1}) · F-weight of lag (j−l).
///
/// `values` holds v(r_0), ..., v(r_m); requires 1 <= j and j + 1 < values.len().
pub fn discrete_space_laplacian(values: &[f64], j: usize, weights: &WeightTables) -> Result<f64> {
    if j == 0 || j + 1 >= values.len() {
        return Err(Error::IndexOutOfRange(format!(
            "node j = {j} needs 1 <= j <= {}",
            values.len().saturating_sub(2)
        )));
    }
    let f = weights.f_diag();
    if j > f.len() {
        return Err(Error::IndexOutOfRange(format!(
            "lag {} beyond built weight table of {}",
            j - 1,
            f.len()
        )));
    }
    Ok((1..=j)
        .map(|l| (values[l + 1] - 2.0 * values[l] + values[l - 1]) * f[j - l])
        .sum())
}
