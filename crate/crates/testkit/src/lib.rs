//! Shared test oracles, independent of the library under test.
//!
//! Everything here trades speed for verifiable accuracy: double-double
//! arithmetic for series summation, Richardson-extrapolated trapezoid
//! quadrature for integral references, and seeded smooth-field generators
//! for property sweeps.

pub mod dd;
pub mod fields;
pub mod gamma_ref;
pub mod quad;

pub use dd::Dd;
pub use fields::{smooth_pair, smooth_values, SmoothField};
pub use gamma_ref::GAMMA_REFERENCE;
pub use quad::richardson_trapezoid;

/// erf reference: double-double Maclaurin series.
///
/// erf(x) = (2/sqrt(pi)) * sum_{n>=0} (-1)^n x^(2n+1) / (n! (2n+1)).
///
/// A plain f64 summation loses everything past |x| ~ 4.5 to cancellation;
/// the double-double accumulation keeps ~31 significant digits, which
/// covers |x| < 5 comfortably. Beyond that erfc(x) < 1.6e-12, so the
/// saturated value is returned (error far below any tolerance used here).
pub fn erf_oracle(x: f64) -> f64 {
    if x < 0.0 {
        return -erf_oracle(-x);
    }
    if x == 0.0 {
        return 0.0;
    }
    if x >= 5.0 {
        return 1.0;
    }
    // 2/sqrt(pi) to double-double precision
    let c = Dd::new(1.128_379_167_095_512_6, -2.610_384_109_687_845_6e-17);
    let x2 = Dd::two_prod(x, x);
    let mut term = Dd::from(x); // (-1)^n x^(2n+1) / n!
    let mut sum = Dd::from(x);
    for n in 1..400 {
        term = term.mul_dd(x2).div_f64(-(n as f64));
        let contrib = term.div_f64((2 * n + 1) as f64);
        sum = sum.add_dd(contrib);
        if contrib.hi().abs() < 1e-26 * sum.hi().abs() {
            break;
        }
    }
    sum.mul_dd(c).to_f64()
}
