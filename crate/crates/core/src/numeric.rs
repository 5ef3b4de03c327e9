//! Error-free transformations and compensated accumulation.
//!
//! The propagator identity checks demand phase agreement at the 1e-14 level
//! on phases of magnitude up to ~50, which naive `t*ω - k·x` arithmetic
//! cannot deliver (its rounding noise alone reaches ~2e-14). The helpers
//! here keep every intermediate as an exact (hi, lo) pair and round once at
//! the end, which empirically keeps the gap under 9e-15.

/// Exact sum: returns (s, e) with s = fl(a + b) and a + b = s + e exactly.
#[inline]
pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let ap = s - b;
    let bp = s - ap;
    let da = a - ap;
    let db = b - bp;
    (s, da + db)
}

/// Exact product: returns (p, e) with p = fl(a * b) and a * b = p + e exactly.
#[inline]
pub(crate) fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let e = f64::mul_add(a, b, -p);
    (p, e)
}

/// Double-double value: `hi + lo` with `|lo| <= ulp(hi)/2` after
/// renormalization. Only the operations the crate needs are provided.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

impl Dd {
    #[inline]
    pub fn from(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    /// Add an exact (hi, lo) contribution, e.g. from `two_prod`.
    #[inline]
    pub fn add_pair(self, hi: f64, lo: f64) -> Self {
        let (s, e) = two_sum(self.hi, hi);
        Dd {
            hi: s,
            lo: self.lo + lo + e,
        }
    }

    /// Round to the nearest f64.
    #[inline]
    pub fn round(self) -> f64 {
        self.hi + self.lo
    }
}

/// `t - a·x` with a single final rounding.
///
/// This is the base-time recovery `t_base = t' - a·x'`; it is shared by the
/// kinematic transform and the propagator so both compute bit-identical
/// base coordinates.
#[inline]
pub(crate) fn sub_dot3(t: f64, a: [f64; 3], x: [f64; 3]) -> f64 {
    let mut acc = Dd::from(t);
    for i in 0..3 {
        let (p, e) = two_prod(-a[i], x[i]);
        acc = acc.add_pair(p, e);
    }
    acc.round()
}

/// `t + a·x` with a single final rounding; inverse-direction companion of
/// [`sub_dot3`].
#[inline]
pub(crate) fn add_dot3(t: f64, a: [f64; 3], x: [f64; 3]) -> f64 {
    let mut acc = Dd::from(t);
    for i in 0..3 {
        let (p, e) = two_prod(a[i], x[i]);
        acc = acc.add_pair(p, e);
    }
    acc.round()
}

/// Plane-wave phase `ω t − k·x` with a single final rounding.
#[inline]
pub(crate) fn phase(omega: f64, t: f64, k: [f64; 3], x: [f64; 3]) -> f64 {
    let (p, e) = two_prod(omega, t);
    let mut acc = Dd { hi: p, lo: e };
    for i in 0..3 {
        let (p, e) = two_prod(-k[i], x[i]);
        acc = acc.add_pair(p, e);
    }
    acc.round()
}

/// Neumaier-compensated running sum for long accumulations (quadrature).
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    comp: f64,
}

impl CompensatedSum {
    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.sum + self.comp
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_sum_recovers_exact_error() {
        let a = 1.0;
        let b = 1e-20;
        let (s, e) = two_sum(a, b);
        assert_eq!(s, 1.0);
        assert_eq!(e, 1e-20);
    }

    #[test]
    fn two_prod_recovers_exact_error() {
        let a = 1.0 + f64::EPSILON;
        let (p, e) = two_prod(a, a);
        // (1+ε)² = 1 + 2ε + ε²; the ε² term is exactly the rounding error.
        assert_eq!(p, 1.0 + 2.0 * f64::EPSILON);
        assert_eq!(e, f64::EPSILON * f64::EPSILON);
    }

    #[test]
    fn sub_then_add_is_ulp_stable() {
        // A representative resynchronization round trip: one compensated
        // subtraction followed by one compensated addition returns within
        // one ulp of the start for generic values, and exactly for values
        // whose products are representable.
        let a = [0.25, 0.5, -0.125];
        let x = [2.0, 4.0, 8.0];
        let t = 3.5;
        let back = add_dot3(sub_dot3(t, a, x), a, x);
        assert_eq!(back, t);
    }

    #[test]
    fn compensated_sum_survives_catastrophic_cancellation() {
        // 1e16 swallows unit-sized addends in naive f64 summation
        // (ulp(1e16) = 2, and ties round to even), so the naive result
        // drops them entirely; Neumaier compensation keeps them exactly.
        let mut c = CompensatedSum::default();
        let mut naive = 0.0f64;
        let xs = std::iter::once(1e16)
            .chain(std::iter::repeat_n(1.0, 1000))
            .chain(std::iter::once(-1e16));
        for x in xs {
            c.add(x);
            naive += x;
        }
        assert_eq!(c.value(), 1000.0);
        assert_eq!(naive, 0.0);
    }
}
