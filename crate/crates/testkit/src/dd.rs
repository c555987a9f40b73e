//! Minimal double-double arithmetic (Dekker/Knuth error-free transforms).
//!
//! A value is represented as an unevaluated sum hi + lo with
//! |lo| <= ulp(hi)/2, giving ~31 significant decimal digits. Only the
//! handful of operations the oracles need are provided.

/// Unevaluated sum of two f64s.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dd {
    hi: f64,
    lo: f64,
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// Requires |a| >= |b| (or a == 0).
#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let err = b - (s - a);
    (s, err)
}

/// Exact product via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let err = a.mul_add(b, -p);
    (p, err)
}

impl Dd {
    pub fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Exact product of two f64s as a Dd.
    pub fn two_prod(a: f64, b: f64) -> Self {
        let (p, e) = two_prod(a, b);
        Dd { hi: p, lo: e }
    }

    pub fn add_dd(self, other: Dd) -> Self {
        let (s, e) = two_sum(self.hi, other.hi);
        let e = e + self.lo + other.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn add_f64(self, b: f64) -> Self {
        let (s, e) = two_sum(self.hi, b);
        let e = e + self.lo;
        let (hi, lo) = quick_two_sum(s, e);
        Dd { hi, lo }
    }

    pub fn mul_dd(self, other: Dd) -> Self {
        let (p, e) = two_prod(self.hi, other.hi);
        let e = e + self.hi * other.lo + self.lo * other.hi;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn mul_f64(self, b: f64) -> Self {
        let (p, e) = two_prod(self.hi, b);
        let e = e + self.lo * b;
        let (hi, lo) = quick_two_sum(p, e);
        Dd { hi, lo }
    }

    pub fn div_f64(self, b: f64) -> Self {
        let q1 = self.hi / b;
        let (p, e) = two_prod(q1, b);
        let r = (self.hi - p) + (self.lo - e);
        let q2 = r / b;
        let (hi, lo) = quick_two_sum(q1, q2);
        Dd { hi, lo }
    }
}

impl From<f64> for Dd {
    fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_prod_is_exact() {
        // 1/3 * 3 != 1 in f64; the error term captures the defect.
        let d = Dd::two_prod(1.0 / 3.0, 3.0);
        assert!(d.lo.abs() > 0.0);
        assert!((d.to_f64() - 1.0).abs() < 1e-16);
    }

    #[test]
    fn series_beats_f64() {
        // 1 + eps/2 + eps/2 in dd keeps the tail that plain f64 drops
        let eps = f64::EPSILON;
        let s = Dd::from(1.0).add_f64(eps / 2.0).add_f64(eps / 2.0);
        assert_eq!(s.to_f64(), 1.0 + eps);
    }

    #[test]
    fn division_roundtrip() {
        let d = Dd::from(1.0).div_f64(7.0).mul_f64(7.0);
        assert!((d.hi - 1.0).abs() < 1e-30 + 1e-16 * d.lo.abs());
        assert!((d.to_f64() - 1.0).abs() < 1e-16);
    }
}
