//! Three-component net-wealth model on the real line.
//!
//! Net wealth (gross wealth minus debt) can be negative or exactly zero, so
//! the model mixes a negative branch (Weibull on |x|, an assumption the
//! distribution contract makes swappable), an atom at zero, and a
//! κ-generalized positive branch. The likelihood factorizes over the sign
//! strata, so the global weighted MLE is: component weights = weighted sign
//! proportions, branch parameters = per-stratum weighted MLE.

use crate::data::WeightedSample;
use crate::dist::{ContinuousDist, KappaGeneralized, Weibull};
use crate::error::{Error, Result};
use crate::fit::{fit_mle, FitConfig, FittedModel, ModelKind};
use crate::rng::{streams, Prng};

/// Default zero-atom tolerance: 10⁻⁹ of the weighted median absolute value.
pub const ZERO_TOL_RELATIVE: f64 = 1e-9;

/// Parameters of the three-component net-wealth mixture.
#[derive(Debug, Clone, PartialEq)]
pub struct NetWealthMixture {
    theta_neg: f64,
    theta_zero: f64,
    theta_pos: f64,
    /// Debt branch on |x| for x < 0; present whenever `theta_neg > 0`.
    neg: Option<Weibull<f64>>,
    pos: KappaGeneralized<f64>,
}

impl NetWealthMixture {
    pub fn new(
        theta_neg: f64,
        theta_zero: f64,
        theta_pos: f64,
        neg: Option<Weibull<f64>>,
        pos: KappaGeneralized<f64>,
    ) -> Result<Self> {
        for (name, v) in [
            ("theta_neg", theta_neg),
            ("theta_zero", theta_zero),
            ("theta_pos", theta_pos),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidParameter {
                    name,
                    value: v,
                    reason: "component weights must be finite and nonnegative",
                });
            }
        }
        let sum = theta_neg + theta_zero + theta_pos;
        if (sum - 1.0).abs() > 1e-12 {
            return Err(Error::InvalidParameter {
                name: "theta",
                value: sum,
                reason: "component weights must sum to 1",
            });
        }
        if theta_neg > 0.0 && neg.is_none() {
            return Err(Error::InvalidParameter {
                name: "neg",
                value: theta_neg,
                reason: "negative branch parameters required when theta_neg > 0",
            });
        }
        Ok(NetWealthMixture {
            theta_neg,
            theta_zero,
            theta_pos,
            neg,
            pos,
        })
    }

    pub fn thetas(&self) -> (f64, f64, f64) {
        (self.theta_neg, self.theta_zero, self.theta_pos)
    }

    pub fn negative_branch(&self) -> Option<&Weibull<f64>> {
        self.neg.as_ref()
    }

    pub fn positive_branch(&self) -> &KappaGeneralized<f64> {
        &self.pos
    }

    /// CDF on the real line: right-continuous, with a jump of `theta_zero`
    /// at x = 0.
    pub fn cdf(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(Error::Domain(format!("net wealth level must be finite, got {x}")));
        }
        if x < 0.0 {
            return Ok(match &self.neg {
                Some(w) => self.theta_neg * w.ccdf(-x)?,
                None => 0.0,
            });
        }
        Ok(self.theta_neg + self.theta_zero + self.theta_pos * self.pos.cdf(x)?)
    }

    /// Density of the continuous part; undefined exactly at the atom x = 0.
    pub fn density(&self, x: f64) -> Result<f64> {
        if !x.is_finite() || x == 0.0 {
            return Err(Error::Domain(format!(
                "continuous density undefined at x = {x}"
            )));
        }
        if x < 0.0 {
            return Ok(match &self.neg {
                Some(w) => self.theta_neg * w.pdf(-x)?,
                None => 0.0,
            });
        }
        Ok(self.theta_pos * self.pos.pdf(x)?)
    }

    /// Weighted log-likelihood under the mixed dominating measure:
    /// `ln(θ_neg f_neg(−x))` for x < 0, `ln θ_zero` at the atom,
    /// `ln(θ_pos f_pos(x))` for x > 0. Zeros are exact here; rounding to the
    /// atom is a fitting-time concern.
    pub fn log_likelihood(&self, data: &WeightedSample) -> Result<f64> {
        let mut acc = 0.0;
        for (x, w) in data.iter() {
            if w == 0.0 {
                continue;
            }
            let term = if x == 0.0 {
                self.theta_zero.ln()
            } else if x < 0.0 {
                match &self.neg {
                    Some(wb) => self.theta_neg.ln() + wb.log_pdf(-x)?,
                    None => f64::NEG_INFINITY,
                }
            } else {
                self.theta_pos.ln() + self.pos.log_pdf(x)?
            };
            acc += w * term;
        }
        Ok(acc)
    }

    /// `n` draws, deterministic given `seed`.
    ///
    /// Streams: component selection on [`streams::MIXTURE_SELECT`], negative
    /// branch on [`streams::MIXTURE_NEGATIVE`], positive branch on the
    /// primary [`streams::VALUES`] stream — so a degenerate (0, 0, 1)
    /// mixture reproduces `pos.sample(n, seed)` exactly.
    pub fn sample(&self, n: usize, seed: u64) -> Vec<f64> {
        let mut select = Prng::with_stream(seed, streams::MIXTURE_SELECT);
        let mut neg_rng = Prng::with_stream(seed, streams::MIXTURE_NEGATIVE);
        let mut pos_rng = Prng::new(seed);
        (0..n)
            .map(|_| {
                let u = select.uniform();
                if u < self.theta_neg {
                    let w = self.neg.as_ref().expect("validated: theta_neg > 0");
                    -w.draw(&mut neg_rng)
                } else if u < self.theta_neg + self.theta_zero {
                    0.0
                } else {
                    self.pos.draw(&mut pos_rng)
                }
            })
            .collect()
    }
}

/// Result of a stratified mixture fit.
#[derive(Debug, Clone, PartialEq)]
pub struct MixtureFitResult {
    pub params: NetWealthMixture,
    pub loglik: f64,
    pub aic: f64,
    pub bic: f64,
    pub converged: bool,
    pub iterations: usize,
    /// Weight per stratum (negative, zero, positive).
    pub stratum_weights: (f64, f64, f64),
    /// Estimated parameter count: 2 free component weights, plus 2 for the
    /// negative branch when present, plus 3 for the positive branch.
    pub k: usize,
}

/// Fits the three-component mixture by sign stratification.
///
/// Values with `|x| ≤ zero_tolerance` count as the atom; the default
/// tolerance is `10⁻⁹ ×` the weighted median absolute value (so exact zeros
/// always land in the atom). The positive stratum is mandatory.
pub fn fit_mixture(
    data: &WeightedSample,
    config: &FitConfig,
    zero_tolerance: Option<f64>,
) -> Result<MixtureFitResult> {
    let eps = match zero_tolerance {
        Some(t) => {
            if !(t.is_finite() && t >= 0.0) {
                return Err(Error::InvalidParameter {
                    name: "zero_tolerance",
                    value: t,
                    reason: "must be finite and nonnegative",
                });
            }
            t
        }
        None => {
            let abs_values: Vec<f64> = data.values().iter().map(|v| v.abs()).collect();
            let abs_sample = WeightedSample::new(abs_values, data.weights().to_vec())?;
            ZERO_TOL_RELATIVE * abs_sample.weighted_median()
        }
    };

    let (mut neg_v, mut neg_w) = (Vec::new(), Vec::new());
    let (mut pos_v, mut pos_w) = (Vec::new(), Vec::new());
    let (mut w_neg, mut w_zero, mut w_pos) = (0.0, 0.0, 0.0);
    for (x, w) in data.iter() {
        if x.abs() <= eps {
            w_zero += w;
        } else if x < 0.0 {
            neg_v.push(-x);
            neg_w.push(w);
            w_neg += w;
        } else {
            pos_v.push(x);
            pos_w.push(w);
            w_pos += w;
        }
    }
    if w_pos <= 0.0 {
        return Err(Error::InvalidData(
            "mixture fit requires a nonempty positive stratum".into(),
        ));
    }
    let total = data.total_weight();
    let (theta_neg, theta_zero, theta_pos) = (w_neg / total, w_zero / total, w_pos / total);

    let branch_config = FitConfig {
        bootstrap_replicates: 0,
        ..config.clone()
    };
    let pos_fit = fit_mle(
        &WeightedSample::new(pos_v, pos_w)?,
        ModelKind::KGen,
        &branch_config,
    )?;
    let FittedModel::KGen(pos) = pos_fit.model else {
        unreachable!("kgen fit returns kgen params")
    };

    let mut iterations = pos_fit.iterations;
    let mut converged = pos_fit.converged;
    let mut branch_loglik = pos_fit.loglik;
    let mut k = 2 + 3;
    let neg = if w_neg > 0.0 {
        let neg_fit = fit_mle(
            &WeightedSample::new(neg_v, neg_w)?,
            ModelKind::Weibull,
            &branch_config,
        )?;
        iterations += neg_fit.iterations;
        converged &= neg_fit.converged;
        branch_loglik += neg_fit.loglik;
        k += 2;
        let FittedModel::Weibull(w) = neg_fit.model else {
            unreachable!("weibull fit returns weibull params")
        };
        Some(w)
    } else {
        None
    };

    // Multinomial term of the factorized likelihood; 0·ln 0 = 0.
    let mut multinomial = 0.0;
    for (w_s, theta) in [
        (w_neg, theta_neg),
        (w_zero, theta_zero),
        (w_pos, theta_pos),
    ] {
        if w_s > 0.0 {
            multinomial += w_s * theta.ln();
        }
    }
    let loglik = branch_loglik + multinomial;
    let params = NetWealthMixture::new(theta_neg, theta_zero, theta_pos, neg, pos)?;
    let n_eff = data.effective_size();
    Ok(MixtureFitResult {
        params,
        loglik,
        aic: 2.0 * k as f64 - 2.0 * loglik,
        bic: k as f64 * n_eff.ln() - 2.0 * loglik,
        converged,
        iterations,
        stratum_weights: (w_neg, w_zero, w_pos),
        k,
    })
}
