//! Continuous-form Caputo-Fabrizio operators.
//!
//! These are the reference oracles: composite-trapezoid quadrature over
//! the caller's sample nodes, as accurate as the sampling. The fast paths
//! used by the marching scheme live in `weights`.

use crate::error::{Error, Result};
use crate::special::gamma_fn;

/// Fractional order α ∈ (0,1) with its derived constants.
///
/// `b_alpha` is the normalization B(α) = 1 − α + α/Γ(α); `rho` is the
/// positive kernel rate α/(1−α). Every kernel in this crate is written as
/// a decaying exponential of a positive distance scaled by `rho` (or
/// `rho²` in space), which is the only convention that keeps the operator
/// integrals finite and the discrete weights positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FractionalOrder {
    alpha: f64,
    b_alpha: f64,
    rho: f64,
}

impl FractionalOrder {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::Domain(format!(
                "fractional order must satisfy 0 < alpha < 1, got {alpha}"
            )));
        }
        let b_alpha = 1.0 - alpha + alpha / gamma_fn(alpha)?;
        Ok(FractionalOrder {
            alpha,
            b_alpha,
            rho: alpha / (1.0 - alpha),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn b_alpha(&self) -> f64 {
        self.b_alpha
    }

    pub fn rho(&self) -> f64 {
        self.rho
    }
}

/// A real function sampled on strictly increasing nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    nodes: Vec<f64>,
    values: Vec<f64>,
}

impl SampledFunction {
    pub fn new(nodes: Vec<f64>, values: Vec<f64>) -> Result<Self> {
        if nodes.len() != values.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} nodes vs {} values",
                nodes.len(),
                values.len()
            )));
        }
        if nodes.len() < 2 {
            return Err(Error::InsufficientNodes {
                needed: 2,
                got: nodes.len(),
            });
        }
        if nodes.windows(2).any(|w| !(w[1] > w[0])) {
            return Err(Error::Domain("nodes must be strictly increasing".into()));
        }
        if nodes.iter().chain(values.iter()).any(|x| !x.is_finite()) {
            return Err(Error::Domain("non-finite node or value".into()));
        }
        Ok(SampledFunction { nodes, values })
    }

    pub fn from_fn(nodes: Vec<f64>, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = nodes.iter().map(|&x| f(x)).collect();
        SampledFunction::new(nodes, values)
    }

    /// n+1 equally spaced nodes on [a, b].
    pub fn uniform(a: f64, b: f64, n: usize, f: impl Fn(f64) -> f64) -> Result<Self> {
        if !(b > a) || n < 1 {
            return Err(Error::Domain(format!("bad interval [{a}, {b}] with {n} panels")));
        }
        let nodes = (0..=n).map(|i| a + (b - a) * i as f64 / n as f64).collect();
        SampledFunction::from_fn(nodes, f)
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction requires >= 2 nodes
    }

    pub fn span(&self) -> (f64, f64) {
        (self.nodes[0], *self.nodes.last().unwrap())
    }

    fn check_in_range(&self, what: &'static str, x: f64) -> Result<()> {
        let (lo, hi) = self.span();
        // tiny slack for t_max arriving through k*tau roundings
        let eps = 1e-12 * (hi - lo).abs().max(hi.abs());
        if x < lo - eps || x > hi + eps {
            return Err(Error::OutOfRange {
                what,
                value: x,
                lo,
                hi,
            });
        }
        Ok(())
    }

    /// Linear interpolation at x (x must lie in the sampled span).
    pub fn value_at(&self, x: f64) -> Result<f64> {
        self.check_in_range("x", x)?;
        let i = match self
            .nodes
            .binary_search_by(|n| n.partial_cmp(&x).unwrap())
        {
            Ok(i) => return Ok(self.values[i]),
            Err(0) => 0,
            Err(i) if i >= self.len() => self.len() - 2,
            Err(i) => i - 1,
        };
        let w = (x - self.nodes[i]) / (self.nodes[i + 1] - self.nodes[i]);
        Ok(self.values[i] * (1.0 - w) + self.values[i + 1] * w)
    }

    /// First derivative at every node: centered differences in the
    /// interior (nonuniform-aware), one-sided at the ends.
    pub fn derivative_at_nodes(&self) -> Vec<f64> {
        let n = self.len();
        let (x, v) = (&self.nodes, &self.values);
        let mut d = vec![0.0; n];
        d[0] = (v[1] - v[0]) / (x[1] - x[0]);
        d[n - 1] = (v[n - 1] - v[n - 2]) / (x[n - 1] - x[n - 2]);
        for i in 1..n - 1 {
            let (dm, dp) = (x[i] - x[i - 1], x[i + 1] - x[i]);
            // three-point formula, exact for quadratics on nonuniform nodes
            d[i] = (v[i + 1] * dm * dm - v[i - 1] * dp * dp
                + v[i] * (dp * dp - dm * dm))
                / (dm * dp * (dm + dp));
        }
        d
    }

    /// Second derivative at every node; end nodes copy their neighbor.
    pub fn second_derivative_at_nodes(&self) -> Vec<f64> {
        let n = self.len();
        let (x, v) = (&self.nodes, &self.values);
        let mut d = vec![0.0; n];
        for i in 1..n - 1 {
            let (dm, dp) = (x[i] - x[i - 1], x[i + 1] - x[i]);
            d[i] = 2.0
                * (v[i - 1] * dp - v[i] * (dm + dp) + v[i + 1] * dm)
                / (dm * dp * (dm + dp));
        }
        d[0] = d[1];
        d[n - 1] = d[n - 2];
        d
    }

    /// Trapezoid integral of the sampled values from the first node to x.
    pub fn integral_to(&self, x: f64) -> Result<f64> {
        self.check_in_range("upper limit", x)?;
        let mut acc = 0.0;
        for i in 0..self.len() - 1 {
            let (a, b) = (self.nodes[i], self.nodes[i + 1]);
            if x <= a {
                break;
            }
            if x >= b {
                acc += 0.5 * (self.values[i] + self.values[i + 1]) * (b - a);
            } else {
                let vx = self.value_at(x)?;
                acc += 0.5 * (self.values[i] + vx) * (x - a);
                break;
            }
        }
        Ok(acc)
    }
}

/// Caputo-Fabrizio time derivative (reference oracle):
/// (B(α)/(1−α)) ∫₀ᵗ f′(s) e^{−ρ(t−s)} ds,
/// trapezoid on the sample nodes with difference derivatives.
pub fn cf_time_derivative(f: &SampledFunction, order: &FractionalOrder, t: f64) -> Result<f64> {
    f.check_in_range("t", t)?;
    let rho = order.rho();
    let deriv = f.derivative_at_nodes();
    let integrand = SampledFunction::new(
        f.nodes().to_vec(),
        f.nodes()
            .iter()
            .zip(&deriv)
            .map(|(&s, &d)| d * (-rho * (t - s)).exp())
            .collect(),
    )?;
    Ok(order.b_alpha() / (1.0 - order.alpha()) * integrand.integral_to(t)?)
}

/// Caputo-Fabrizio integral:
/// [2(1−α)/((2−α)B(α))] f(t) + [2α/((2−α)B(α))] ∫₀ᵗ f(s) ds.
pub fn cf_time_integral(f: &SampledFunction, order: &FractionalOrder, t: f64) -> Result<f64> {
    f.check_in_range("t", t)?;
    let (a, b) = cf_integral_prefactors(order);
    Ok(a * f.value_at(t)? + b * f.integral_to(t)?)
}

/// The (a_α, b_α) prefactors of the CF integral; shared with the Picard
/// construction.
pub fn cf_integral_prefactors(order: &FractionalOrder) -> (f64, f64) {
    let denom = (2.0 - order.alpha()) * order.b_alpha();
    (
        2.0 * (1.0 - order.alpha()) / denom,
        2.0 * order.alpha() / denom,
    )
}

/// Caputo-Fabrizio space Laplacian (reference oracle):
/// (α/((1−α)√π)) ∫₀ʳ e^{−ρ²(r−u)²} h″(u) du,
/// centered second differences and trapezoid quadrature.
///
/// The kernel rate is ρ² uniformly; the α² variant that sometimes appears
/// alongside it is treated as a typo (§ kernel conventions).
pub fn cf_space_laplacian(h: &SampledFunction, order: &FractionalOrder, r: f64) -> Result<f64> {
    if h.len() < 5 {
        return Err(Error::InsufficientNodes {
            needed: 5,
            got: h.len(),
        });
    }
    h.check_in_range("r", r)?;
    let rho = order.rho();
    let d2 = h.second_derivative_at_nodes();
    let integrand = SampledFunction::new(
        h.nodes().to_vec(),
        h.nodes()
            .iter()
            .zip(&d2)
            .map(|(&u, &d)| {
                let z = rho * (r - u);
                d * (-z * z).exp()
            })
            .collect(),
    )?;
    Ok(rho / std::f64::consts::PI.sqrt() * integrand.integral_to(r)?)
}
