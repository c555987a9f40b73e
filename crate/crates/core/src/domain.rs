//! Physical parameters, discretization grid, and the head field.

use crate::error::{Error, Result};
use nalgebra::{DMatrix, DVector};

/// Confined-aquifer material parameters.
///
/// gamma = T/S is the diffusion coefficient; theta(r) = T/(rS) the radial
/// advection coefficient, singular at r = 0 (the grid therefore starts at
/// a positive borehole radius).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AquiferParams {
    transmissivity: f64,
    storativity: f64,
}

impl AquiferParams {
    pub fn new(transmissivity: f64, storativity: f64) -> Result<Self> {
        if !(transmissivity > 0.0) || !(storativity > 0.0) {
            return Err(Error::Domain(format!(
                "transmissivity and storativity must be positive, got T = {transmissivity}, S = {storativity}"
            )));
        }
        Ok(AquiferParams {
            transmissivity,
            storativity,
        })
    }

    pub fn transmissivity(&self) -> f64 {
        self.transmissivity
    }

    pub fn storativity(&self) -> f64 {
        self.storativity
    }

    pub fn gamma(&self) -> f64 {
        self.transmissivity / self.storativity
    }

    pub fn theta_of_r(&self, r: f64) -> f64 {
        debug_assert!(r > 0.0);
        self.transmissivity / (r * self.storativity)
    }
}

/// Radial interval [r_min, r_max] with M cells, time horizon t_max with
/// N steps. r_min > 0 keeps theta bounded.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    r_min: f64,
    r_max: f64,
    n_cells: usize,
    t_max: f64,
    n_steps: usize,
}

impl Grid {
    pub fn new(r_min: f64, r_max: f64, n_cells: usize, t_max: f64, n_steps: usize) -> Result<Self> {
        if !(r_min > 0.0) {
            return Err(Error::Domain(format!("r_min must be > 0, got {r_min}")));
        }
        if !(r_max > r_min) {
            return Err(Error::Domain(format!(
                "need r_max > r_min, got [{r_min}, {r_max}]"
            )));
        }
        if n_cells < 3 {
            return Err(Error::Domain(format!("need n_cells >= 3, got {n_cells}")));
        }
        if !(t_max > 0.0) || n_steps < 1 {
            return Err(Error::Domain(format!(
                "need t_max > 0 and n_steps >= 1, got t_max = {t_max}, n_steps = {n_steps}"
            )));
        }
        Ok(Grid {
            r_min,
            r_max,
            n_cells,
            t_max,
            n_steps,
        })
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    pub fn t_max(&self) -> f64 {
        self.t_max
    }

    pub fn xi(&self) -> f64 {
        (self.r_max - self.r_min) / self.n_cells as f64
    }

    pub fn tau(&self) -> f64 {
        self.t_max / self.n_steps as f64
    }

    /// r_j = r_min + j·ξ, j = 0..=n_cells.
    pub fn r(&self, j: usize) -> f64 {
        debug_assert!(j <= self.n_cells);
        self.r_min + j as f64 * self.xi()
    }

    /// t_k = k·τ, k = 0..=n_steps.
    pub fn t(&self, k: usize) -> f64 {
        debug_assert!(k <= self.n_steps);
        k as f64 * self.tau()
    }

    pub fn r_nodes(&self) -> Vec<f64> {
        (0..=self.n_cells).map(|j| self.r(j)).collect()
    }
}

/// Initial head profile φ(r). Whatever the shape, the field constructor
/// truncates it to 0 at both Dirichlet boundaries.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum InitialProfile {
    Gaussian {
        center: f64,
        width: f64,
        amplitude: f64,
    },
    /// amplitude for r <= edge, 0 beyond (a drawdown front).
    Step { edge: f64, amplitude: f64 },
    Zero,
}

impl InitialProfile {
    pub fn eval(&self, r: f64) -> f64 {
        match *self {
            InitialProfile::Gaussian {
                center,
                width,
                amplitude,
            } => {
                let z = (r - center) / width;
                amplitude * (-z * z).exp()
            }
            InitialProfile::Step { edge, amplitude } => {
                if r <= edge {
                    amplitude
                } else {
                    0.0
                }
            }
            InitialProfile::Zero => 0.0,
        }
    }
}

/// Hydraulic head h(r_j, t_k) on the grid: rows are radial nodes
/// j = 0..=M, columns time levels k = 0..=N.
///
/// Invariants: boundary rows are identically 0; column 0 carries the
/// truncated initial profile.
#[derive(Debug, Clone, PartialEq)]
pub struct HeadField {
    values: DMatrix<f64>,
    grid: Grid,
    initial_profile: InitialProfile,
}

impl HeadField {
    pub fn new(grid: &Grid, profile: &InitialProfile) -> Self {
        let (m, n) = (grid.n_cells(), grid.n_steps());
        let mut values = DMatrix::zeros(m + 1, n + 1);
        for j in 1..m {
            values[(j, 0)] = profile.eval(grid.r(j));
        }
        HeadField {
            values,
            grid: *grid,
            initial_profile: *profile,
        }
    }

    pub fn grid(&self) -> &Grid {
        &self.grid
    }

    pub fn initial_profile(&self) -> &InitialProfile {
        &self.initial_profile
    }

    pub fn value(&self, j: usize, k: usize) -> f64 {
        self.values[(j, k)]
    }

    pub fn set_value(&mut self, j: usize, k: usize, v: f64) {
        self.values[(j, k)] = v;
    }

    /// Full radial slice (length M+1) at time level k.
    pub fn level(&self, k: usize) -> DVector<f64> {
        self.values.column(k).into_owned()
    }

    /// Interior radial slice (length M−1) at time level k.
    pub fn interior_level(&self, k: usize) -> DVector<f64> {
        self.values.column(k).rows(1, self.grid.n_cells() - 1).into_owned()
    }

    /// Write the interior of level k; boundaries stay 0.
    pub fn set_interior_level(&mut self, k: usize, interior: &DVector<f64>) {
        assert_eq!(interior.len(), self.grid.n_cells() - 1);
        for (i, &v) in interior.iter().enumerate() {
            self.values[(i + 1, k)] = v;
        }
    }

    pub fn raw(&self) -> &DMatrix<f64> {
        &self.values
    }

    pub fn is_finite(&self) -> bool {
        self.values.iter().all(|v| v.is_finite())
    }

    /// Largest |a − b| over the whole field; grids must match.
    pub fn max_abs_diff(&self, other: &HeadField) -> Result<f64> {
        if self.values.shape() != other.values.shape() {
            return Err(Error::DimensionMismatch(format!(
                "{:?} vs {:?}",
                self.values.shape(),
                other.values.shape()
            )));
        }
        Ok(self
            .values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn params_validation_and_derived() {
        assert!(AquiferParams::new(0.0, 0.01).is_err());
        assert!(AquiferParams::new(1.0, -1.0).is_err());
        let p = AquiferParams::new(2.0, 0.5).unwrap();
        assert_abs_diff_eq!(p.gamma(), 4.0);
        assert_abs_diff_eq!(p.theta_of_r(8.0), 0.5);
        assert!(p.theta_of_r(3.0) > 0.0);
    }

    #[test]
    fn grid_validation_and_nodes() {
        assert!(Grid::new(0.0, 1.0, 4, 1.0, 2).is_err());
        assert!(Grid::new(2.0, 1.0, 4, 1.0, 2).is_err());
        assert!(Grid::new(0.1, 1.0, 2, 1.0, 2).is_err());
        assert!(Grid::new(0.1, 1.0, 4, 0.0, 2).is_err());
        let g = Grid::new(1.0, 2.0, 4, 1.0, 8).unwrap();
        assert_abs_diff_eq!(g.xi(), 0.25);
        assert_abs_diff_eq!(g.tau(), 0.125);
        assert_abs_diff_eq!(g.r(0), 1.0);
        assert_abs_diff_eq!(g.r(4), 2.0);
        assert_abs_diff_eq!(g.t(8), 1.0);
        assert_eq!(g.r_nodes().len(), 5);
    }

    #[test]
    fn head_field_boundary_and_initial_invariants() {
        let g = Grid::new(1.0, 3.0, 8, 1.0, 4).unwrap();
        let phi = InitialProfile::Gaussian {
            center: 2.0,
            width: 0.5,
            amplitude: 1.5,
        };
        let h = HeadField::new(&g, &phi);
        for k in 0..=4 {
            assert_eq!(h.value(0, k), 0.0);
            assert_eq!(h.value(8, k), 0.0);
        }
        for j in 1..8 {
            assert_abs_diff_eq!(h.value(j, 0), phi.eval(g.r(j)));
        }
        assert!(h.is_finite());
    }

    #[test]
    fn profile_shapes() {
        let gauss = InitialProfile::Gaussian {
            center: 2.0,
            width: 0.5,
            amplitude: 3.0,
        };
        assert_abs_diff_eq!(gauss.eval(2.0), 3.0);
        assert!(gauss.eval(4.0) < 3.0 * 1e-6);
        let step = InitialProfile::Step {
            edge: 1.5,
            amplitude: 2.0,
        };
        assert_eq!(step.eval(1.0), 2.0);
        assert_eq!(step.eval(1.6), 0.0);
        assert_eq!(InitialProfile::Zero.eval(7.0), 0.0);
    }

    #[test]
    fn max_abs_diff_checks_shape() {
        let g1 = Grid::new(1.0, 3.0, 8, 1.0, 4).unwrap();
        let g2 = Grid::new(1.0, 3.0, 8, 1.0, 5).unwrap();
        let a = HeadField::new(&g1, &InitialProfile::Zero);
        let b = HeadField::new(&g2, &InitialProfile::Zero);
        assert!(a.max_abs_diff(&b).is_err());
        let mut c = HeadField::new(&g1, &InitialProfile::Zero);
        c.set_value(3, 2, 0.75);
        assert_abs_diff_eq!(a.max_abs_diff(&c).unwrap(), 0.75);
    }
}
