//! Goodness-of-fit statistics and model comparison.

use rayon::prelude::*;

use crate::data::WeightedSample;
use crate::dist::ContinuousDist;
use crate::error::{Error, Result};
use crate::fit::{fit_mle, FitConfig, FitResult, ModelKind};

/// One row of a model-comparison table, ranked by AIC.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonRow {
    pub model: ModelKind,
    pub k: usize,
    pub loglik: f64,
    pub aic: f64,
    pub bic: f64,
    pub ks: f64,
    pub converged: bool,
    /// 1-based position after sorting (non-converged rows last).
    pub rank: usize,
}

/// Sorted (value, group weight, cumulative-before) triples over positively
/// weighted records, ties merged.
fn weight_groups(data: &WeightedSample) -> Vec<(f64, f64, f64)> {
    let order = data.sorted_indices();
    let mut groups: Vec<(f64, f64, f64)> = Vec::new();
    let mut cum = 0.0;
    let mut i = 0;
    while i < order.len() {
        let v = data.values()[order[i]];
        let mut gw = 0.0;
        let mut j = i;
        while j < order.len() && data.values()[order[j]] == v {
            gw += data.weights()[order[j]];
            j += 1;
        }
        if gw > 0.0 {
            groups.push((v, gw, cum));
            cum += gw;
        }
        i = j;
    }
    groups
}

/// Kolmogorov-Smirnov statistic of weighted data against a model CDF:
/// the sup over data points of |weighted empirical CDF − model CDF|,
/// evaluated on both sides of every jump.
pub fn ks_statistic<D: ContinuousDist<f64> + ?Sized>(
    data: &WeightedSample,
    dist: &D,
) -> Result<f64> {
    let total = data.total_weight();
    let mut sup = 0.0f64;
    for (v, gw, cum_before) in weight_groups(data) {
        let f = dist.cdf(v)?;
        let e_before = cum_before / total;
        let e_after = (cum_before + gw) / total;
        sup = sup.max((e_before - f).abs()).max((e_after - f).abs());
    }
    Ok(sup)
}

/// KS statistic restricted to the top decile of cumulative weight.
///
/// An artifact-defined diagnostic for right-tail fit quality: the same
/// deviations as [`ks_statistic`], maximized only over data points whose
/// empirical CDF exceeds 0.9.
pub fn ks_statistic_top_decile<D: ContinuousDist<f64> + ?Sized>(
    data: &WeightedSample,
    dist: &D,
) -> Result<f64> {
    let total = data.total_weight();
    let mut sup = 0.0f64;
    for (v, gw, cum_before) in weight_groups(data) {
        let e_after = (cum_before + gw) / total;
        if e_after <= 0.9 {
            continue;
        }
        let f = dist.cdf(v)?;
        let e_before = cum_before / total;
        sup = sup.max((e_before - f).abs()).max((e_after - f).abs());
    }
    Ok(sup)
}

/// Fits every requested model and ranks the results by AIC.
///
/// Rows that failed to converge are flagged and placed after all converged
/// rows; ties break by model name so the table is deterministic.
pub fn compare(
    data: &WeightedSample,
    models: &[ModelKind],
    config: &FitConfig,
) -> Result<Vec<ComparisonRow>> {
    if models.len() < 2 {
        return Err(Error::InvalidData("comparison needs at least two models".into()));
    }
    let fits: Vec<Result<FitResult>> = models
        .par_iter()
        .map(|&kind| fit_mle(data, kind, config))
        .collect();

    let mut rows = Vec::with_capacity(models.len());
    for (kind, fit) in models.iter().zip(fits) {
        let fit = fit?;
        let ks = ks_statistic(data, fit.model.as_dist())?;
        rows.push(ComparisonRow {
            model: *kind,
            k: kind.param_count(),
            loglik: fit.loglik,
            aic: fit.aic,
            bic: fit.bic,
            ks,
            converged: fit.converged,
            rank: 0,
        });
    }
    rows.sort_by(|a, b| {
        b.converged
            .cmp(&a.converged)
            .then(a.aic.total_cmp(&b.aic))
            .then(a.model.name().cmp(b.model.name()))
    });
    for (i, row) in rows.iter_mut().enumerate() {
        row.rank = i + 1;
    }
    Ok(rows)
}
