//! κ-deformed exponential and logarithm kernels.
//!
//! The deformed exponential
//!
//! ```text
//! exp_κ(x) = (sqrt(1 + κ²x²) + κx)^(1/κ) = exp(asinh(κx) / κ)
//! ```
//!
//! reduces to the ordinary exponential as κ → 0 and behaves as
//! `|2κx|^(±1/κ)` for x → ±∞. Its functional inverse is
//! `ln_κ(y) = (y^κ − y^(−κ)) / (2κ) = sinh(κ ln y) / κ`.
//!
//! Everything is evaluated through `asinh`/`sinh`, which avoids both the
//! catastrophic cancellation of the literal formulas near κ = 0 and overflow
//! of the intermediate `κ²x²` for large arguments. Below
//! [`KAPPA_SWITCH`] the kernels switch to the ordinary `exp`/`ln` limit.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Below this value of κ the kernels use the ordinary `exp`/`ln` limit.
///
/// The deformation enters `ln_κ(y) = sinh(κ ln y)/κ` only at relative order
/// `(κ ln y)²`, which for κ < 10⁻⁶ is indistinguishable from the κ = 0 limit
/// in `f64`, while the literal `(y^κ − y^(−κ))/(2κ)` form would cancel
/// catastrophically.
pub const KAPPA_SWITCH: f64 = 1e-6;

/// Deformation parameter κ ∈ [0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Kappa<T>(T);

impl<T: Real> Kappa<T> {
    /// Creates a validated deformation parameter; requires 0 ≤ κ < 1.
    pub fn new(value: T) -> Result<Self> {
        if !(value >= T::zero() && value < T::one()) {
            return Err(Error::InvalidParameter {
                name: "kappa",
                value: value.to_f64().unwrap_or(f64::NAN),
                reason: "must satisfy 0 <= kappa < 1",
            });
        }
        Ok(Kappa(value))
    }

    /// The undeformed case κ = 0.
    pub fn zero() -> Self {
        Kappa(T::zero())
    }

    pub fn value(self) -> T {
        self.0
    }

    /// Whether this κ is treated as zero by the kernels (κ < [`KAPPA_SWITCH`]).
    pub fn is_deformed(self) -> bool {
        self.0 >= T::of(KAPPA_SWITCH)
    }
}

/// Natural logarithm of `exp_κ(x)`, i.e. `asinh(κx)/κ`.
///
/// Total for finite `x`; safe for |x| up to the `f64` range since `asinh`
/// never overflows. This is the path the distribution layer uses so that
/// densities and tail probabilities can be evaluated in log space.
pub fn log_kappa_exp<T: Real>(x: T, kappa: Kappa<T>) -> T {
    if !kappa.is_deformed() {
        return x;
    }
    let k = kappa.value();
    (k * x).asinh() / k
}

/// `asinh(t)` for `t = exp(ln_t) > 0`, given `ln_t`.
///
/// For large `t`, `asinh(t) = ln 2t + O(t⁻²)`; the cutoff at `ln_t > 40`
/// keeps the neglected term below 10⁻³⁴ while `exp(ln_t)` is still far from
/// overflow on the other branch. Lets callers feed arguments whose linear
/// value would overflow (e.g. `(x/β)^α` at x ~ 10³⁰⁰).
pub(crate) fn asinh_from_ln<T: Real>(ln_t: T) -> T {
    if ln_t > T::of(40.0) {
        ln_t + T::of(std::f64::consts::LN_2)
    } else {
        ln_t.exp().asinh()
    }
}

/// κ-deformed exponential, `exp_κ(x) = (sqrt(1+κ²x²) + κx)^(1/κ)`.
///
/// Strictly positive and strictly increasing in `x`; `exp_κ(0) = 1` and
/// `exp_κ(x)·exp_κ(−x) = 1` for every κ.
pub fn kappa_exp<T: Real>(x: T, kappa: Kappa<T>) -> Result<T> {
    if !x.is_finite() {
        return Err(Error::Domain(format!("kappa_exp: x must be finite, got {x}")));
    }
    Ok(log_kappa_exp(x, kappa).exp())
}

/// κ-deformed logarithm, `ln_κ(y) = (y^κ − y^(−κ))/(2κ) = sinh(κ ln y)/κ`.
///
/// Functional inverse of [`kappa_exp`]; requires `y > 0`.
pub fn kappa_log<T: Real>(y: T, kappa: Kappa<T>) -> Result<T> {
    if !(y > T::zero() && y.is_finite()) {
        return Err(Error::Domain(format!("kappa_log: y must be positive and finite, got {y}")));
    }
    if !kappa.is_deformed() {
        return Ok(y.ln());
    }
    let k = kappa.value();
    Ok((k * y.ln()).sinh() / k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn kap(v: f64) -> Kappa<f64> {
        Kappa::new(v).unwrap()
    }

    #[test]
    fn kappa_range_is_enforced() {
        assert!(Kappa::new(0.0).is_ok());
        assert!(Kappa::new(0.999999).is_ok());
        assert!(Kappa::new(1.0).is_err());
        assert!(Kappa::new(-0.1).is_err());
        assert!(Kappa::new(f64::NAN).is_err());
    }

    #[test]
    fn exp_at_zero_is_one_and_log_of_unity_is_zero() {
        for k in [0.0, 1e-8, 0.25, 0.75, 0.99] {
            assert_eq!(kappa_exp(0.0, kap(k)).unwrap(), 1.0);
            assert_eq!(kappa_log(1.0, kap(k)).unwrap(), 0.0);
        }
    }

    #[test]
    fn hand_values() {
        // exp_{1/2}(1) = (sqrt(1.25) + 0.5)^2, the squared golden ratio.
        assert_relative_eq!(
            kappa_exp(1.0, kap(0.5)).unwrap(),
            2.618033988749895,
            max_relative = 1e-14
        );
        assert_relative_eq!(
            kappa_exp(-1.0, kap(0.5)).unwrap(),
            0.38196601125010515,
            max_relative = 1e-14
        );
        // ln_{1/2}(2) = sqrt(2) - 1/sqrt(2) = 1/sqrt(2).
        assert_relative_eq!(
            kappa_log(2.0, kap(0.5)).unwrap(),
            std::f64::consts::FRAC_1_SQRT_2,
            max_relative = 1e-14
        );
    }

    #[test]
    fn small_kappa_matches_ordinary_exp_and_log() {
        assert_relative_eq!(
            kappa_exp(1.0, kap(1e-8)).unwrap(),
            std::f64::consts::E,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            kappa_log(std::f64::consts::E, kap(1e-8)).unwrap(),
            1.0,
            max_relative = 1e-8
        );
    }

    #[test]
    fn domain_errors() {
        assert!(kappa_exp(f64::NAN, kap(0.5)).is_err());
        assert!(kappa_exp(f64::INFINITY, kap(0.5)).is_err());
        assert!(kappa_log(0.0, kap(0.5)).is_err());
        assert!(kappa_log(-1.0, kap(0.5)).is_err());
    }

    #[test]
    fn kappa_continuity_grid() {
        // |exp_κ(x) − exp(x)| shrinks monotonically along κ = 10⁻¹ .. 10⁻⁸.
        for &x in &[-5.0, -1.0, 0.5, 2.0, 5.0] {
            let mut last = f64::INFINITY;
            for e in 1..=8 {
                let k = 10f64.powi(-e);
                let diff = (kappa_exp(x, kap(k)).unwrap() - x.exp()).abs();
                assert!(
                    diff <= last + 1e-12,
                    "discrepancy not decreasing at x={x}, kappa=1e-{e}: {diff} > {last}"
                );
                last = diff;
            }
            assert!(last <= 1e-9 * x.exp().max(1.0));
        }
    }

    #[test]
    fn power_law_asymptotics() {
        // log exp_κ(−x) / log x → −1/κ, and the log–log slope between 10³ and
        // 10⁶ is −2 within 1% for κ = 1/2.
        let k = kap(0.5);
        let ratio = log_kappa_exp(-1e8, k) / 1e8f64.ln();
        assert_relative_eq!(ratio, -2.0, max_relative = 1e-2);

        let (x0, x1) = (1e3, 1e6);
        let slope = (log_kappa_exp(-x1, k) - log_kappa_exp(-x0, k)) / (x1.ln() - x0.ln());
        assert_relative_eq!(slope, -2.0, max_relative = 1e-2);
    }

    #[test]
    fn asymptotic_prefactor() {
        // exp_κ(−x) ~ (2κx)^(−1/κ): the ratio against the literal power law
        // approaches 1 from desk scale onwards.
        let k = kap(0.5);
        let mut last = f64::INFINITY;
        for &x in &[1e4, 1e6, 1e8] {
            let ratio = (log_kappa_exp(-x, k) + (2.0 * 0.5 * x).ln() / 0.5).abs();
            assert!(ratio < 1e-6, "prefactor mismatch at x={x}: {ratio}");
            assert!(ratio <= last);
            last = ratio;
        }
    }

    #[test]
    fn log_path_survives_huge_arguments() {
        let k = kap(0.75);
        let v = log_kappa_exp(-1e300, k);
        assert!(v.is_finite() && v < -900.0);
        assert!(asinh_from_ln(800.0f64).is_finite());
        assert_relative_eq!(
            asinh_from_ln(39.0f64),
            39.0 + std::f64::consts::LN_2,
            max_relative = 1e-13
        );
    }

    #[test]
    fn f32_instantiation() {
        let k = Kappa::<f32>::new(0.5).unwrap();
        let y = kappa_exp(1.0f32, k).unwrap();
        assert_relative_eq!(y, 2.618034f32, max_relative = 1e-6);
        assert_relative_eq!(
            kappa_exp(kappa_log(2.0f32, k).unwrap(), k).unwrap(),
            2.0f32,
            max_relative = 1e-6
        );
    }

    proptest! {
        #[test]
        fn reciprocal_identity(x in -50.0f64..50.0, k in 0.0f64..0.999) {
            let k = kap(k);
            let p = kappa_exp(x, k).unwrap() * kappa_exp(-x, k).unwrap();
            prop_assert!((p - 1.0).abs() < 1e-12);
        }

        #[test]
        fn log_exp_round_trip(y in 1e-8f64..1e8, k in 0.0f64..0.999) {
            let k = kap(k);
            let back = kappa_exp(kappa_log(y, k).unwrap(), k).unwrap();
            prop_assert!((back - y).abs() <= 1e-10 * y.abs().max(1.0));
        }

        #[test]
        fn exp_log_round_trip(x in -50.0f64..50.0, k in 0.0f64..0.999) {
            let k = kap(k);
            let back = kappa_log(kappa_exp(x, k).unwrap(), k).unwrap();
            prop_assert!((back - x).abs() <= 1e-10 * x.abs().max(1.0));
        }

        #[test]
        fn strictly_increasing(x in -30.0f64..30.0, dx in 1e-6f64..10.0, k in 0.0f64..0.999) {
            let k = kap(k);
            prop_assert!(kappa_exp(x + dx, k).unwrap() > kappa_exp(x, k).unwrap());
            let y = x.exp();
            prop_assert!(kappa_log(y * (1.0 + 1e-9) + 1e-12, k).unwrap() >= kappa_log(y, k).unwrap());
        }
    }
}
