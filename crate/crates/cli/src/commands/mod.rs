pub mod compare;
pub mod curves;
pub mod fit;
pub mod inequality;
pub mod mixture_fit;
pub mod sample;

use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use kgen::fit::{FitConfig, FittedModel, ModelKind};

use crate::config::{pick, FileConfig};

/// Opens `--output` or falls back to stdout.
pub fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    match path {
        Some(p) => {
            let f = std::fs::File::create(p)
                .with_context(|| format!("cannot create {}", p.display()))?;
            Ok(Box::new(std::io::BufWriter::new(f)))
        }
        None => Ok(Box::new(std::io::BufWriter::new(std::io::stdout()))),
    }
}

/// Resolves the model name (flag > config > default `kgen`).
pub fn resolve_model(flag: Option<&str>, cfg: &FileConfig, default: &str) -> Result<String> {
    Ok(flag
        .map(str::to_string)
        .or_else(|| cfg.get_string("model"))
        .unwrap_or_else(|| default.to_string()))
}

pub fn model_kind(name: &str) -> Result<ModelKind> {
    ModelKind::from_name(name).with_context(|| {
        format!("unknown model `{name}` (expected kgen, weibull, exponential, singh-maddala or dagum)")
    })
}

/// Distribution parameters resolved from flags/config with documented
/// defaults (the reference triple α=2, β=1.2, κ=0.75; shape2 = 1).
pub struct ResolvedParams {
    pub alpha: f64,
    pub beta: f64,
    pub kappa: f64,
    pub shape2: f64,
}

pub fn resolve_params(
    cfg: &FileConfig,
    alpha: Option<f64>,
    beta: Option<f64>,
    kappa: Option<f64>,
    shape2: Option<f64>,
) -> Result<ResolvedParams> {
    Ok(ResolvedParams {
        alpha: pick(alpha, cfg.get("alpha")?, 2.0),
        beta: pick(beta, cfg.get("beta")?, 1.2),
        kappa: pick(kappa, cfg.get("kappa")?, 0.75),
        shape2: pick(shape2, cfg.get("shape2")?, 1.0),
    })
}

/// Builds the parametric model a command operates on.
pub fn build_model(kind: ModelKind, p: &ResolvedParams) -> Result<FittedModel> {
    let params: Vec<f64> = match kind {
        ModelKind::KGen => vec![p.alpha, p.beta, p.kappa],
        ModelKind::Weibull => vec![p.alpha, p.beta],
        ModelKind::Exponential => vec![p.beta],
        ModelKind::SinghMaddala | ModelKind::Dagum => vec![p.alpha, p.beta, p.shape2],
    };
    Ok(FittedModel::from_params(kind, &params)?)
}

/// Parameter values for reporting, paired with their names.
pub fn named_params(model: &FittedModel) -> Vec<(&'static str, f64)> {
    model
        .kind()
        .param_names()
        .iter()
        .copied()
        .zip(model.params())
        .collect()
}

/// Fit configuration shared by `fit`, `compare` and `mixture-fit`:
/// flags > config file keys (`seed`, `bootstrap`, `max-iterations`,
/// `param-tolerance`, `loglik-tolerance`) > defaults.
pub fn resolve_fit_config(
    cfg: &FileConfig,
    seed: Option<u64>,
    bootstrap: Option<usize>,
) -> Result<FitConfig> {
    let defaults = FitConfig::default();
    Ok(FitConfig {
        max_iterations: pick(None, cfg.get("max-iterations")?, defaults.max_iterations),
        param_tolerance: pick(None, cfg.get("param-tolerance")?, defaults.param_tolerance),
        loglik_tolerance: pick(None, cfg.get("loglik-tolerance")?, defaults.loglik_tolerance),
        init: kgen::fit::InitStrategy::Auto,
        bootstrap_replicates: pick(bootstrap, cfg.get("bootstrap")?, 0),
        seed: pick(seed, cfg.get("seed")?, defaults.seed),
    })
}

/// Rejects obviously contradictory sweep/model combinations early.
pub fn check_param_flag_supported(kind: ModelKind, name: &str) -> Result<()> {
    let supported: &[&str] = match kind {
        ModelKind::KGen => &["alpha", "beta", "kappa"],
        ModelKind::Weibull => &["alpha", "beta"],
        ModelKind::Exponential => &["beta"],
        ModelKind::SinghMaddala | ModelKind::Dagum => &["alpha", "beta", "shape2"],
    };
    if supported.contains(&name) {
        Ok(())
    } else {
        bail!(
            "parameter `{name}` is not settable for model `{}` (supported: {})",
            kind.name(),
            supported.join(", ")
        )
    }
}
