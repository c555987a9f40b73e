//! Reference quadrature: composite trapezoid with Richardson extrapolation.

/// Composite trapezoid with n panels.
pub fn trapezoid(f: &dyn Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    assert!(n >= 1 && b > a);
    let h = (b - a) / n as f64;
    let mut s = 0.5 * (f(a) + f(b));
    for i in 1..n {
        s += f(a + i as f64 * h);
    }
    s * h
}

/// Trapezoid refined by panel doubling until the Richardson error estimate
/// |T_2n - T_n|/3 drops below `tol`, returning the extrapolated value.
/// Panics if 2^22 panels do not reach the tolerance (oracle misuse).
pub fn richardson_trapezoid(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    let mut n = 16usize;
    let mut coarse = trapezoid(f, a, b, n);
    loop {
        n *= 2;
        // reuse coarse nodes: T_2n = T_n/2 + h*sum(odd nodes)
        let h = (b - a) / n as f64;
        let mut odd = 0.0;
        for i in (1..n).step_by(2) {
            odd += f(a + i as f64 * h);
        }
        let fine = 0.5 * coarse + h * odd;
        let est = (fine - coarse) / 3.0;
        if est.abs() <= tol {
            return fine + est;
        }
        assert!(n <= 1 << 22, "quadrature stalled: err~{est:.3e} at n={n}");
        coarse = fine;
    }
}
