use anyhow::Result;
use kgen::fit::fit_mle;
use kgen::gof::ks_statistic;

use super::{model_kind, named_params, open_output, resolve_fit_config, resolve_model};
use crate::config::FileConfig;
use crate::format::sig10;
use crate::FitArgs;

pub fn run(args: FitArgs) -> Result<i32> {
    let cfg = FileConfig::load(args.config.as_deref())?;
    let model = resolve_model(args.model.as_deref(), &cfg, "kgen")?;
    let kind = model_kind(&model)?;
    let weights = args
        .weights
        .clone()
        .or_else(|| cfg.get_string("weights"));
    let fit_config = resolve_fit_config(&cfg, args.seed, args.bootstrap)?;

    let loaded = crate::input::load_csv(
        &args.input,
        weights.as_deref(),
        true,
        args.drop_nonpositive,
    )?;
    let fit = fit_mle(&loaded.sample, kind, &fit_config)?;
    let ks = ks_statistic(&loaded.sample, fit.model.as_dist())?;

    let mut out = open_output(args.output.as_deref())?;
    writeln!(out, "model: {}", kind.name())?;
    writeln!(out, "n: {}", loaded.sample.len())?;
    writeln!(out, "total_weight: {}", sig10(loaded.sample.total_weight()))?;
    writeln!(out, "n_eff: {}", sig10(loaded.sample.effective_size()))?;
    writeln!(out, "{}", loaded.weight_note)?;
    if args.drop_nonpositive {
        writeln!(
            out,
            "dropped_nonpositive: {} rows (weight {})",
            loaded.dropped_rows,
            sig10(loaded.dropped_weight)
        )?;
    }
    writeln!(out, "converged: {}", fit.converged)?;
    writeln!(out, "iterations: {}", fit.iterations)?;
    writeln!(out, "seed: {}", fit_config.seed)?;
    for (name, value) in named_params(&fit.model) {
        writeln!(out, "{name}: {}", sig10(value))?;
    }
    if let Some(stderr) = &fit.stderr {
        for (name, se) in fit.model.kind().param_names().iter().zip(stderr) {
            writeln!(out, "stderr_{name}: {}", sig10(*se))?;
        }
    }
    writeln!(out, "loglik: {}", sig10(fit.loglik))?;
    writeln!(out, "aic: {}", sig10(fit.aic))?;
    writeln!(out, "bic: {}", sig10(fit.bic))?;
    writeln!(out, "ks: {}", sig10(ks))?;
    writeln!(out, "note: KS is computed at estimated parameters; no p-value is reported")?;
    out.flush()?;

    Ok(if fit.converged { 0 } else { 2 })
}
