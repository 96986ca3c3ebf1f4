//! Moments, Lorenz curve, Gini index and percentile shares.
//!
//! Distribution-level quantities are computed by adaptive quadrature in the
//! quantile domain: `E[X^r] = ∫₀¹ Q(t)^r dt` and
//! `∫₀^u Q(t) dt` for the Lorenz numerator. For Pareto-tailed distributions
//! the integrand grows like `(1−t)^(−r/λ)` towards t = 1 (λ the tail
//! exponent), so integrals that touch t = 1 are regularized with the
//! substitution `s = (1−t)^(1−p)`, `p = r/λ`, which makes the transformed
//! integrand bounded. Sample-level estimators mirror the same quantities for
//! weighted microdata.

use crate::data::WeightedSample;
use crate::dist::ContinuousDist;
use crate::error::{Error, Result};
use crate::quad::{integrate, QuadOptions, QuadOutcome};
use crate::scalar::Real;

/// One point of a Lorenz curve: the poorest fraction `u` of the population
/// holds the fraction `share` of total income.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LorenzPoint<T> {
    pub u: T,
    pub share: T,
}

/// Internal relative tolerance for the quadratures backing `moment`.
const MOMENT_REL_TOL: f64 = 1e-9;

/// Cap on the substitution power `p = r/λ`; keeps the power map
/// `s = (1−t)^(1−p)` well conditioned. Above the cap a weak integrable
/// singularity `s^((1−p)/(1−cap)−1)` remains for the adaptive rule.
const TAIL_SUB_CAP: f64 = 0.875;

/// Weight factor of the quantile integrals.
#[derive(Clone, Copy)]
enum TailWeight {
    /// w(t) = 1 (moments, Lorenz numerators).
    One,
    /// w(t) = 1 − t (the Fubini-reduced Gini integral).
    OneMinusT,
}

fn check_converged<T: Real>(out: QuadOutcome<T>) -> Result<T> {
    if out.converged {
        Ok(out.value)
    } else {
        Err(Error::QuadratureFailed {
            error_estimate: out.error_estimate.to_f64().unwrap_or(f64::NAN),
            evaluations: out.evaluations,
        })
    }
}

/// `∫_lo^hi w(t)·Q(t)^r dt`.
///
/// When the interval touches t = 1 and the quantile has a Pareto-type
/// divergence `(1−t)^(−1/λ)`, the integral is transformed with
/// `s = (1−t)^(1−p)`, `p = min(r/λ, cap)`, and the transformed integrand is
/// assembled in log space from [`ContinuousDist::log_quantile_from_log_survival`],
/// so survival levels far below `f64` resolution of `1−t` remain exact.
fn weighted_quantile_integral<T: Real, D: ContinuousDist<T> + ?Sized>(
    dist: &D,
    r: T,
    weight: TailWeight,
    lo: T,
    hi: T,
    rel_tol: T,
) -> Result<T> {
    let one = T::one();
    let opts = QuadOptions {
        rel_tol,
        abs_tol: T::of(1e-280),
        max_intervals: 20_000,
    };

    let p = if hi == one {
        match dist.tail_exponent() {
            Some(te) => (r / te).min(T::of(TAIL_SUB_CAP)),
            None => T::zero(),
        }
    } else {
        T::zero()
    };

    if p <= T::zero() {
        let t_max = one - T::epsilon();
        return check_converged(integrate(
            |t: T| {
                let t = t.min(t_max);
                let q = dist.quantile(t).expect("t clamped inside [lo, 1)");
                let qr = if r == one { q } else { q.powf(r) };
                match weight {
                    TailWeight::One => qr,
                    TailWeight::OneMinusT => (one - t) * qr,
                }
            },
            lo,
            hi,
            &opts,
        ));
    }

    // t = 1 − s^(1/(1−p)); dt = (1/(1−p))·s^(p/(1−p)) ds. Everything goes
    // through ln(1−t) = (1/(1−p))·ln s, which never underflows.
    let q_exp = (one - p).recip();
    let s_hi = (one - lo).powf(one - p);
    check_converged(integrate(
        |s: T| {
            let ln_s = s.ln();
            let ln_survival = q_exp * ln_s;
            let ln_q = dist.log_quantile_from_log_survival(ln_survival);
            let w_log = match weight {
                TailWeight::One => T::zero(),
                TailWeight::OneMinusT => ln_survival,
            };
            (r * ln_q + (q_exp - one) * ln_s + q_exp.ln() + w_log).exp()
        },
        T::zero(),
        s_hi,
        &opts,
    ))
}

/// Raw moment `E[X^r]` by quadrature; requires `r ≥ 0` and, for Pareto
/// tails, `r` strictly below the tail exponent.
pub fn moment<T: Real, D: ContinuousDist<T> + ?Sized>(dist: &D, r: T) -> Result<T> {
    if !(r >= T::zero() && r.is_finite()) {
        return Err(Error::Domain(format!(
            "moment order must be nonnegative and finite, got {r}"
        )));
    }
    if r == T::zero() {
        return Ok(T::one());
    }
    if let Some(te) = dist.tail_exponent() {
        if r >= te {
            return Err(Error::MomentDiverges {
                order: r.to_f64().unwrap_or(f64::NAN),
                tail_exponent: te.to_f64().unwrap_or(f64::NAN),
            });
        }
    }
    weighted_quantile_integral(dist, r, TailWeight::One, T::zero(), T::one(), T::of(MOMENT_REL_TOL))
}

/// Mean `E[X]`; [`Error::MeanDiverges`] when the first moment does not exist.
pub fn mean<T: Real, D: ContinuousDist<T> + ?Sized>(dist: &D) -> Result<T> {
    moment(dist, T::one()).map_err(|e| match e {
        Error::MomentDiverges { .. } => Error::MeanDiverges,
        other => other,
    })
}

/// Lorenz curve `L(u) = (1/μ) ∫₀^u Q(t) dt`; endpoints are exact.
pub fn lorenz<T: Real, D: ContinuousDist<T> + ?Sized>(dist: &D, u: T) -> Result<T> {
    if !(u >= T::zero() && u <= T::one()) {
        return Err(Error::Domain(format!("lorenz argument must lie in [0, 1], got {u}")));
    }
    if u == T::zero() {
        return Ok(T::zero());
    }
    if u == T::one() {
        return Ok(T::one());
    }
    let mu = mean(dist)?;
    let num =
        weighted_quantile_integral(dist, T::one(), TailWeight::One, T::zero(), u, T::of(MOMENT_REL_TOL))?;
    Ok(num / mu)
}

/// Lorenz curve on the grid `u_i = i/n`, computed from cumulative segment
/// integrals so the result is self-consistent: `L(0) = 0`, `L(1) = 1`.
pub fn lorenz_grid<T: Real, D: ContinuousDist<T> + ?Sized>(
    dist: &D,
    n: usize,
) -> Result<Vec<LorenzPoint<T>>> {
    if n == 0 {
        return Err(Error::Domain("lorenz grid needs at least one segment".into()));
    }
    // Through the first moment so the grid errors out for κ ≥ α.
    mean(dist)?;
    let mut cuts = Vec::with_capacity(n + 1);
    for i in 0..=n {
        cuts.push(T::of(i as f64 / n as f64));
    }
    let mut segments = Vec::with_capacity(n);
    for i in 0..n {
        segments.push(weighted_quantile_integral(
            dist,
            T::one(),
            TailWeight::One,
            cuts[i],
            cuts[i + 1],
            T::of(MOMENT_REL_TOL),
        )?);
    }
    let total: T = segments.iter().fold(T::zero(), |acc, &s| acc + s);
    let mut points = Vec::with_capacity(n + 1);
    let mut cum = T::zero();
    points.push(LorenzPoint {
        u: T::zero(),
        share: T::zero(),
    });
    for i in 0..n {
        cum = cum + segments[i];
        let share = if i + 1 == n { T::one() } else { cum / total };
        points.push(LorenzPoint {
            u: cuts[i + 1],
            share,
        });
    }
    Ok(points)
}

/// Gini index `G = 1 − 2∫₀¹ L(u) du`, evaluated as the single quadrature
/// `1 − (2/μ) ∫₀¹ (1−t) Q(t) dt` (Fubini on the Lorenz double integral).
pub fn gini<T: Real, D: ContinuousDist<T> + ?Sized>(dist: &D) -> Result<T> {
    let mu = mean(dist)?;
    let one = T::one();
    let j = weighted_quantile_integral(dist, one, TailWeight::OneMinusT, T::zero(), one, T::of(1e-9))?;
    Ok(one - T::of(2.0) * j / mu)
}

/// Income share of the population band (p1, p2]: `L(p2) − L(p1)`.
pub fn percentile_share<T: Real, D: ContinuousDist<T> + ?Sized>(
    dist: &D,
    p1: T,
    p2: T,
) -> Result<T> {
    if !(p1 >= T::zero() && p1 < p2 && p2 <= T::one()) {
        return Err(Error::Domain(format!(
            "percentile band must satisfy 0 <= p1 < p2 <= 1, got ({p1}, {p2})"
        )));
    }
    let mu = mean(dist)?;
    let num = weighted_quantile_integral(dist, T::one(), TailWeight::One, p1, p2, T::of(MOMENT_REL_TOL))?;
    Ok(num / mu)
}

/// Weighted empirical Gini via the covariance/rank form
/// `G = 2 Σ wᵢxᵢRᵢ / (W μ) − 1` with midpoint ranks
/// `Rᵢ = (C_{i-1} + wᵢ/2) / W`.
///
/// Tied values are processed as one group sharing the group's midpoint rank,
/// so the result does not depend on the input order of ties.
pub fn sample_gini(data: &WeightedSample) -> Result<f64> {
    if data.values().iter().any(|&v| v < 0.0) {
        return Err(Error::InvalidData("sample_gini requires nonnegative values".into()));
    }
    let total_w = data.total_weight();
    let mut total_income = 0.0;
    let order = data.sorted_indices();

    let mut rank_acc = 0.0;
    let mut cum_before = 0.0;
    let mut i = 0;
    while i < order.len() {
        let v = data.values()[order[i]];
        let mut gw = 0.0;
        let mut j = i;
        while j < order.len() && data.values()[order[j]] == v {
            gw += data.weights()[order[j]];
            j += 1;
        }
        let rank = (cum_before + 0.5 * gw) / total_w;
        rank_acc += v * gw * rank;
        total_income += v * gw;
        cum_before += gw;
        i = j;
    }

    if total_income <= 0.0 {
        return Err(Error::InvalidData("sample_gini requires a positive weighted mean".into()));
    }
    Ok(2.0 * rank_acc / total_income - 1.0)
}

/// Weighted empirical Lorenz curve evaluated on the grid `u_i = i/n` by
/// linear interpolation between the cumulative (population, income) points.
pub fn sample_lorenz_grid(data: &WeightedSample, n: usize) -> Result<Vec<LorenzPoint<f64>>> {
    if n == 0 {
        return Err(Error::Domain("lorenz grid needs at least one segment".into()));
    }
    if data.values().iter().any(|&v| v < 0.0) {
        return Err(Error::InvalidData("lorenz curve requires nonnegative values".into()));
    }
    let order = data.sorted_indices();
    let total_w = data.total_weight();
    let total_income: f64 = data.iter().map(|(v, w)| v * w).sum();
    if total_income <= 0.0 {
        return Err(Error::InvalidData("lorenz curve requires a positive weighted mean".into()));
    }

    // Vertices of the piecewise-linear empirical Lorenz curve.
    let mut pop = Vec::with_capacity(order.len() + 1);
    let mut inc = Vec::with_capacity(order.len() + 1);
    pop.push(0.0);
    inc.push(0.0);
    let (mut cw, mut ci) = (0.0, 0.0);
    for &k in &order {
        cw += data.weights()[k];
        ci += data.weights()[k] * data.values()[k];
        pop.push(cw / total_w);
        inc.push(ci / total_income);
    }

    let mut points = Vec::with_capacity(n + 1);
    let mut seg = 0usize;
    for i in 0..=n {
        let u = i as f64 / n as f64;
        while seg + 1 < pop.len() && pop[seg + 1] < u {
            seg += 1;
        }
        let share = if i == 0 {
            0.0
        } else if i == n {
            1.0
        } else {
            let (u0, u1) = (pop[seg], pop[seg + 1]);
            let (l0, l1) = (inc[seg], inc[seg + 1]);
            if u1 > u0 {
                l0 + (l1 - l0) * (u - u0) / (u1 - u0)
            } else {
                l1
            }
        };
        points.push(LorenzPoint { u, share });
    }
    Ok(points)
}
