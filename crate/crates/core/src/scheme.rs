//! Crank-Nicolson discretization of the groundwater problem.
//!
//! Each time step solves one linear system for the interior head values
//! at level k+1. The left-hand side never changes across steps (both
//! weight families depend only on index differences), so the matrix is
//! assembled and LU-factored exactly once per run. The right-hand side
//! carries the explicit halves of the advection and Laplacian terms plus
//! the full memory sum over all previous level differences.
//!
//! `classical_solve` is the local (non-fractional) Crank-Nicolson solver
//! for ∂_t h = ϑ(r)∂_r h + γ∂²_r h, used as the α → 1 oracle.

use crate::domain::{AquiferParams, Grid, HeadField, InitialProfile};
use crate::error::{Error, Result};
use crate::fractional::FractionalOrder;
use crate::linalg::{solve_tridiagonal, LuFactors};
use crate::weights::WeightTables;
use nalgebra::{DMatrix, DVector};

/// The once-assembled implicit system. `rhs` holds the vector built by
/// the most recent `step` call.
#[derive(Debug, Clone)]
pub struct StepSystem {
    matrix_a: DMatrix<f64>,
    rhs: DVector<f64>,
    lu: LuFactors,
    /// c_j = ϑ(r_j)/(4ξ) for interior j, stored at j−1.
    advection: Vec<f64>,
    gamma: f64,
    matrix_inf_norm: f64,
    diagonally_dominant: bool,
}

impl StepSystem {
    pub fn matrix_a(&self) -> &DMatrix<f64> {
        &self.matrix_a
    }

    pub fn rhs(&self) -> &DVector<f64> {
        &self.rhs
    }

    /// Strict row diagonal dominance held at assembly time. A violation
    /// is reported here rather than failing construction: the LU solve
    /// with partial pivoting does not depend on it.
    pub fn is_diagonally_dominant(&self) -> bool {
        self.diagonally_dominant
    }

    pub fn condition_estimate(&self) -> f64 {
        self.lu.condition_estimate()
    }
}

/// CN-averaged centered first difference in r at interior node j between
/// levels k and k+1:
/// [(h^{k+1}_{j+1} − h^{k+1}_{j−1}) + (h^k_{j+1} − h^k_{j−1})]/(4ξ).
pub fn cn_first_derivative(h: &HeadField, j: usize, k: usize) -> Result<f64> {
    let grid = h.grid();
    let (m, n) = (grid.n_cells(), grid.n_steps());
    if j == 0 || j >= m {
        return Err(Error::IndexOutOfRange(format!(
            "interior node j = {j} must satisfy 1 <= j <= {}",
            m - 1
        )));
    }
    if k + 1 > n {
        return Err(Error::IndexOutOfRange(format!(
            "levels k = {k}, k+1 needed, but the grid has {n} steps"
        )));
    }
    Ok(
        ((h.value(j + 1, k + 1) - h.value(j - 1, k + 1)) + (h.value(j + 1, k) - h.value(j - 1, k)))
            / (4.0 * grid.xi()),
    )
}

/// Interior matrix for the implicit side. Row j−1 collects every h^{k+1}
/// coefficient of the discrete equation at node j: the lag-0 memory
/// weight on the diagonal, the implicit half of the centered advection
/// difference, and the implicit half of the nonlocal second-difference
/// sum over l = 1..j. Boundary columns are dropped (Dirichlet zeros).
fn assemble_interior(
    theta: &[f64],
    f_diag: &[f64],
    gamma: f64,
    e0: f64,
    m: usize,
    xi: f64,
) -> DMatrix<f64> {
    let n = m - 1;
    let mut a = DMatrix::zeros(n, n);
    for j in 1..m {
        let row = j - 1;
        a[(row, row)] += e0;
        let cj = theta[j] / (4.0 * xi);
        if j + 1 <= m - 1 {
            a[(row, j)] -= cj;
        }
        if j >= 2 {
            a[(row, j - 2)] += cj;
        }
        for l in 1..=j {
            let w = gamma * f_diag[j - l];
            if l + 1 <= m - 1 {
                a[(row, l)] -= 0.5 * w;
            }
            a[(row, l - 1)] += w;
            if l >= 2 {
                a[(row, l - 2)] -= 0.5 * w;
            }
        }
    }
    a
}

/// Build and factor the implicit system for one (params, grid, weights)
/// triple. The weight tables must carry both parts and match the grid.
pub fn assemble_system(
    params: &AquiferParams,
    grid: &Grid,
    weights: &WeightTables,
) -> Result<StepSystem> {
    if !weights.has_time_part() || !weights.has_space_part() {
        return Err(Error::DimensionMismatch(
            "weight tables need both the time and the space part".into(),
        ));
    }
    let m = grid.n_cells();
    if weights.n_cells() != m
        || weights.n_steps() != grid.n_steps()
        || (weights.xi() - grid.xi()).abs() > 1e-12 * grid.xi()
        || (weights.tau() - grid.tau()).abs() > 1e-12 * grid.tau()
    {
        return Err(Error::DimensionMismatch(format!(
            "weights built for {}x{} (xi = {}, tau = {}), grid is {}x{} (xi = {}, tau = {})",
            weights.n_cells(),
            weights.n_steps(),
            weights.xi(),
            weights.tau(),
            m,
            grid.n_steps(),
            grid.xi(),
            grid.tau()
        )));
    }
    let theta: Vec<f64> = (0..=m).map(|j| params.theta_of_r(grid.r(j))).collect();
    let gamma = params.gamma();
    let e0 = weights.e_diag()[0];
    let matrix_a = assemble_interior(&theta, weights.f_diag(), gamma, e0, m, grid.xi());

    let n = m - 1;
    let mut diagonally_dominant = true;
    let mut matrix_inf_norm = 0.0f64;
    for row in 0..n {
        let mut off = 0.0;
        for col in 0..n {
            if col != row {
                off += matrix_a[(row, col)].abs();
            }
        }
        diagonally_dominant &= matrix_a[(row, row)].abs() > off;
        matrix_inf_norm = matrix_inf_norm.max(off + matrix_a[(row, row)].abs());
    }
    let lu = LuFactors::factor(&matrix_a)?;
    let advection = (1..m).map(|j| theta[j] / (4.0 * grid.xi())).collect();
    Ok(StepSystem {
        matrix_a,
        rhs: DVector::zeros(n),
        lu,
        advection,
        gamma,
        matrix_inf_norm,
        diagonally_dominant,
    })
}

/// Advance the field from level k to k+1 with one implicit solve.
pub fn step(
    system: &mut StepSystem,
    h: &mut HeadField,
    k: usize,
    weights: &WeightTables,
) -> Result<()> {
    let grid = *h.grid();
    let (m, n_steps) = (grid.n_cells(), grid.n_steps());
    if k >= n_steps {
        return Err(Error::IndexOutOfRange(format!(
            "step to level {} beyond the grid's {} steps",
            k + 1,
            n_steps
        )));
    }
    let e = weights.e_diag();
    let f = weights.f_diag();
    let mut b = DVector::zeros(m - 1);
    for j in 1..m {
        let mut acc = e[0] * h.value(j, k);
        // memory over all earlier level differences, most recent first
        for mm in 0..k {
            acc -= (h.value(j, mm + 1) - h.value(j, mm)) * e[k - mm];
        }
        acc += system.advection[j - 1] * (h.value(j + 1, k) - h.value(j - 1, k));
        for l in 1..=j {
            let d2 = h.value(l + 1, k) - 2.0 * h.value(l, k) + h.value(l - 1, k);
            acc += 0.5 * system.gamma * f[j - l] * d2;
        }
        b[j - 1] = acc;
    }
    let x = system.lu.solve(&b);
    let residual = (&system.matrix_a * &x - &b).amax();
    let scale = system.matrix_inf_norm * x.amax();
    if residual > 1e-10 * scale && residual > 0.0 {
        return Err(Error::Numeric(format!(
            "step {k}: residual {residual:.3e} exceeds 1e-10 x {scale:.3e}"
        )));
    }
    h.set_interior_level(k + 1, &x);
    system.rhs = b;
    Ok(())
}

/// March the full history. Deterministic: identical inputs give
/// bit-identical fields.
pub fn run_simulation(
    params: &AquiferParams,
    grid: &Grid,
    order: &FractionalOrder,
    phi: &InitialProfile,
) -> Result<HeadField> {
    let weights = WeightTables::build(
        order,
        grid.tau(),
        grid.n_steps(),
        grid.xi(),
        grid.n_cells(),
    )?;
    let mut system = assemble_system(params, grid, &weights)?;
    let mut h = HeadField::new(grid, phi);
    for k in 0..grid.n_steps() {
        step(&mut system, &mut h, k, &weights)?;
    }
    if !h.is_finite() {
        return Err(Error::Numeric("non-finite head values after run".into()));
    }
    Ok(h)
}

fn classical_cn(
    params: &AquiferParams,
    grid: &Grid,
    phi: &InitialProfile,
    include_advection: bool,
) -> Result<HeadField> {
    let (m, n_steps) = (grid.n_cells(), grid.n_steps());
    let (xi, tau) = (grid.xi(), grid.tau());
    let gamma = params.gamma();
    let n = m - 1;
    // tridiagonal bands of I − (τ/2)L where L is the discrete local operator
    let mut lower = vec![0.0; n];
    let mut diag = vec![0.0; n];
    let mut upper = vec![0.0; n];
    let dif = gamma / (xi * xi);
    let mut adv = vec![0.0; m + 1];
    if include_advection {
        for (j, a) in adv.iter_mut().enumerate() {
            *a = params.theta_of_r(grid.r(j)) / (2.0 * xi);
        }
    }
    for j in 1..m {
        let row = j - 1;
        diag[row] = 1.0 + tau * dif;
        if row > 0 {
            lower[row] = -0.5 * tau * (dif - adv[j]);
        }
        if row + 1 < n {
            upper[row] = -0.5 * tau * (dif + adv[j]);
        }
    }
    let mut h = HeadField::new(grid, phi);
    let mut rhs = vec![0.0; n];
    for k in 0..n_steps {
        for j in 1..m {
            let d2 = h.value(j + 1, k) - 2.0 * h.value(j, k) + h.value(j - 1, k);
            let a1 = h.value(j + 1, k) - h.value(j - 1, k);
            rhs[j - 1] = h.value(j, k) + 0.5 * tau * (dif * d2 + adv[j] * a1);
        }
        let x = solve_tridiagonal(&lower, &diag, &upper, &rhs)?;
        for (i, v) in x.iter().enumerate() {
            h.set_value(i + 1, k + 1, *v);
        }
    }
    if !h.is_finite() {
        return Err(Error::Numeric("non-finite head values after run".into()));
    }
    Ok(h)
}

/// Standard Crank-Nicolson solve of the local radial equation
/// ∂_t h = ϑ(r)∂_r h + γ∂²_r h; the classical-limit oracle.
pub fn classical_solve(
    params: &AquiferParams,
    grid: &Grid,
    phi: &InitialProfile,
) -> Result<HeadField> {
    classical_cn(params, grid, phi, true)
}

/// ξ-weighted relative L2 distance between two final-time levels.
pub fn relative_l2_distance(a: &HeadField, b: &HeadField, k: usize) -> Result<f64> {
    if a.grid() != b.grid() {
        return Err(Error::DimensionMismatch(
            "fields live on different grids".into(),
        ));
    }
    let (va, vb) = (a.level(k), b.level(k));
    let norm = vb.norm();
    if norm == 0.0 {
        return Err(Error::Numeric("reference level is identically zero".into()));
    }
    Ok((va - &vb).norm() / norm)
}
