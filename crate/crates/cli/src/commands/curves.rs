use anyhow::{bail, Context, Result};
use kgen::fit::FittedModel;

use super::{
    build_model, check_param_flag_supported, model_kind, open_output, resolve_model,
    resolve_params, ResolvedParams,
};
use crate::config::{pick, FileConfig};
use crate::format::CurveTable;
use crate::CurvesArgs;

/// One parameter sweep: column label tokens plus the parsed values.
struct Sweep {
    name: String,
    tokens: Vec<String>,
    values: Vec<f64>,
}

fn parse_sweep(spec: &str) -> Result<Sweep> {
    let Some((name, list)) = spec.split_once('=') else {
        bail!("sweep spec must look like NAME=v1,v2,..., got `{spec}`");
    };
    let name = name.trim().to_string();
    let mut tokens = Vec::new();
    let mut values = Vec::new();
    for tok in list.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            bail!("sweep spec has an empty value in `{spec}`");
        }
        let v: f64 = tok
            .parse()
            .with_context(|| format!("sweep value `{tok}` is not a number"))?;
        tokens.push(tok.to_string());
        values.push(v);
    }
    if values.is_empty() {
        bail!("sweep spec `{spec}` has no values");
    }
    Ok(Sweep {
        name,
        tokens,
        values,
    })
}

fn with_param(base: &ResolvedParams, name: &str, value: f64) -> ResolvedParams {
    ResolvedParams {
        alpha: if name == "alpha" { value } else { base.alpha },
        beta: if name == "beta" { value } else { base.beta },
        kappa: if name == "kappa" { value } else { base.kappa },
        shape2: if name == "shape2" { value } else { base.shape2 },
    }
}

pub fn run(args: CurvesArgs) -> Result<i32> {
    let cfg = FileConfig::load(args.config.as_deref())?;
    let model = resolve_model(args.model.as_deref(), &cfg, "kgen")?;
    let kind = model_kind(&model)?;
    let base_params = resolve_params(&cfg, args.alpha, args.beta, args.kappa, args.shape2)?;
    let grid_n = pick(args.grid, cfg.get("grid")?, 200usize);
    if grid_n < 2 {
        bail!("--grid must be at least 2");
    }

    let base = build_model(kind, &base_params)?;
    let (models, labels): (Vec<FittedModel>, Vec<String>) = match &args.sweep {
        None => (vec![base], vec![String::new()]),
        Some(spec) => {
            let sweep = parse_sweep(spec)?;
            check_param_flag_supported(kind, &sweep.name)?;
            let mut models = Vec::new();
            let mut labels = Vec::new();
            for (tok, &v) in sweep.tokens.iter().zip(&sweep.values) {
                models.push(build_model(kind, &with_param(&base_params, &sweep.name, v))?);
                labels.push(format!("_{}={tok}", sweep.name));
            }
            (models, labels)
        }
    };

    // Log-spaced grid from the base model's quantiles unless overridden.
    let x_min = pick(
        args.x_min,
        cfg.get("x-min")?,
        base.as_dist().quantile(1e-3)?,
    );
    let x_max = pick(
        args.x_max,
        cfg.get("x-max")?,
        base.as_dist().quantile(1.0 - 1e-6)?,
    );
    if !(x_min > 0.0 && x_max > x_min) {
        bail!("need 0 < x-min < x-max, got {x_min} and {x_max}");
    }

    let mut header = vec!["x".to_string()];
    for label in &labels {
        header.push(format!("pdf{label}"));
    }
    for label in &labels {
        header.push(format!("ccdf{label}"));
    }
    let mut table = CurveTable::new(header);

    let log_step = (x_max / x_min).ln() / (grid_n - 1) as f64;
    for i in 0..grid_n {
        let x = x_min * ((i as f64) * log_step).exp();
        let mut row = Vec::with_capacity(1 + 2 * models.len());
        row.push(x);
        for m in &models {
            row.push(m.as_dist().pdf(x)?);
        }
        for m in &models {
            row.push(m.as_dist().ccdf(x)?);
        }
        table.push_row(row);
    }

    let mut out = open_output(args.output.as_deref())?;
    table.write(&mut out)?;
    out.flush()?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_parsing() {
        let s = parse_sweep("alpha=1.0,1.5,2.0,2.5").unwrap();
        assert_eq!(s.name, "alpha");
        assert_eq!(s.values, vec![1.0, 1.5, 2.0, 2.5]);
        assert_eq!(s.tokens[0], "1.0");
        assert!(parse_sweep("alpha").is_err());
        assert!(parse_sweep("alpha=").is_err());
        assert!(parse_sweep("alpha=1,x").is_err());
    }
}
