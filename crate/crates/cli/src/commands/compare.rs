use anyhow::{bail, Result};
use kgen::fit::ModelKind;
use kgen::gof::compare;

use super::{model_kind, open_output, resolve_fit_config};
use crate::config::FileConfig;
use crate::format::sig10;
use crate::CompareArgs;

const DEFAULT_MODELS: &str = "kgen,weibull,exponential,singh-maddala,dagum";

pub fn run(args: CompareArgs) -> Result<i32> {
    let cfg = FileConfig::load(args.config.as_deref())?;
    let spec = args
        .models
        .clone()
        .or_else(|| cfg.get_string("models"))
        .unwrap_or_else(|| DEFAULT_MODELS.to_string());
    let mut kinds: Vec<ModelKind> = Vec::new();
    for name in spec.split(',') {
        let name = name.trim();
        if name.is_empty() {
            bail!("empty model name in --models `{spec}`");
        }
        kinds.push(model_kind(name)?);
    }
    let weights = args.weights.clone().or_else(|| cfg.get_string("weights"));
    let fit_config = resolve_fit_config(&cfg, args.seed, None)?;

    let loaded = crate::input::load_csv(
        &args.input,
        weights.as_deref(),
        true,
        args.drop_nonpositive,
    )?;
    let rows = compare(&loaded.sample, &kinds, &fit_config)?;

    let mut out = open_output(args.output.as_deref())?;
    writeln!(out, "model,k,loglik,aic,bic,ks,converged,rank")?;
    for r in &rows {
        writeln!(
            out,
            "{},{},{},{},{},{},{},{}",
            r.model.name(),
            r.k,
            sig10(r.loglik),
            sig10(r.aic),
            sig10(r.bic),
            sig10(r.ks),
            r.converged,
            r.rank
        )?;
    }
    out.flush()?;
    Ok(if rows.iter().all(|r| r.converged) { 0 } else { 2 })
}
