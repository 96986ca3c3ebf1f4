use anyhow::Result;
use kgen::mixture::fit_mixture;

use super::{open_output, resolve_fit_config};
use crate::config::{pick, FileConfig};
use crate::format::sig10;
use crate::MixtureFitArgs;

pub fn run(args: MixtureFitArgs) -> Result<i32> {
    let cfg = FileConfig::load(args.config.as_deref())?;
    let weights = args.weights.clone().or_else(|| cfg.get_string("weights"));
    let fit_config = resolve_fit_config(&cfg, args.seed, None)?;
    let zero_tol = match pick(args.zero_tol, cfg.get("zero-tol")?, f64::NAN) {
        t if t.is_nan() => None,
        t => Some(t),
    };

    let loaded = crate::input::load_csv(&args.input, weights.as_deref(), false, false)?;
    let fit = fit_mixture(&loaded.sample, &fit_config, zero_tol)?;

    let mut out = open_output(args.output.as_deref())?;
    let (w_neg, w_zero, w_pos) = fit.stratum_weights;
    let (t_neg, t_zero, t_pos) = fit.params.thetas();
    writeln!(out, "model: net-wealth-mixture")?;
    writeln!(out, "n: {}", loaded.sample.len())?;
    writeln!(out, "{}", loaded.weight_note)?;
    writeln!(out, "stratum_weight_negative: {}", sig10(w_neg))?;
    writeln!(out, "stratum_weight_zero: {}", sig10(w_zero))?;
    writeln!(out, "stratum_weight_positive: {}", sig10(w_pos))?;
    writeln!(out, "theta_neg: {}", sig10(t_neg))?;
    writeln!(out, "theta_zero: {}", sig10(t_zero))?;
    writeln!(out, "theta_pos: {}", sig10(t_pos))?;
    match fit.params.negative_branch() {
        Some(w) => {
            writeln!(out, "neg_shape: {}", sig10(w.shape()))?;
            writeln!(out, "neg_scale: {}", sig10(w.scale()))?;
        }
        None => writeln!(out, "negative_branch: absent")?,
    }
    let pos = fit.params.positive_branch();
    writeln!(out, "alpha: {}", sig10(pos.alpha()))?;
    writeln!(out, "beta: {}", sig10(pos.beta()))?;
    writeln!(out, "kappa: {}", sig10(pos.kappa().value()))?;
    writeln!(out, "k: {}", fit.k)?;
    writeln!(out, "converged: {}", fit.converged)?;
    writeln!(out, "iterations: {}", fit.iterations)?;
    writeln!(out, "loglik: {}", sig10(fit.loglik))?;
    writeln!(out, "aic: {}", sig10(fit.aic))?;
    writeln!(out, "bic: {}", sig10(fit.bic))?;
    out.flush()?;

    Ok(if fit.converged { 0 } else { 2 })
}
