use anyhow::Result;
use kgen::inequality::{
    gini, lorenz_grid, mean, percentile_share, sample_gini, sample_lorenz_grid, LorenzPoint,
};

use super::{build_model, model_kind, open_output, resolve_model, resolve_params};
use crate::config::{pick, FileConfig};
use crate::format::sig10;
use crate::InequalityArgs;

fn write_lorenz(out: &mut dyn std::io::Write, points: &[LorenzPoint<f64>]) -> Result<()> {
    writeln!(out, "lorenz:")?;
    writeln!(out, "u,share")?;
    for p in points {
        writeln!(out, "{},{}", sig10(p.u), sig10(p.share))?;
    }
    Ok(())
}

pub fn run(args: InequalityArgs) -> Result<i32> {
    let cfg = FileConfig::load(args.config.as_deref())?;
    let lorenz_n = pick(args.lorenz_grid, cfg.get("lorenz-grid")?, 0usize);
    let mut out = open_output(args.output.as_deref())?;

    match &args.input {
        Some(path) => {
            let weights = args.weights.clone().or_else(|| cfg.get_string("weights"));
            let loaded = crate::input::load_csv(path, weights.as_deref(), false, false)?;
            let data = &loaded.sample;
            // Percentile shares through the exact piecewise-linear empirical
            // Lorenz curve on a percent grid.
            let pct = sample_lorenz_grid(data, 100)?;
            writeln!(out, "mode: empirical")?;
            writeln!(out, "n: {}", data.len())?;
            writeln!(out, "{}", loaded.weight_note)?;
            writeln!(out, "mean: {}", sig10(data.weighted_mean()))?;
            writeln!(out, "gini: {}", sig10(sample_gini(data)?))?;
            writeln!(out, "top_10pct_share: {}", sig10(1.0 - pct[90].share))?;
            writeln!(out, "top_1pct_share: {}", sig10(1.0 - pct[99].share))?;
            if lorenz_n > 0 {
                write_lorenz(&mut out, &sample_lorenz_grid(data, lorenz_n)?)?;
            }
        }
        None => {
            let model = resolve_model(args.model.as_deref(), &cfg, "kgen")?;
            let kind = model_kind(&model)?;
            let params = resolve_params(&cfg, args.alpha, args.beta, args.kappa, args.shape2)?;
            let dist_model = build_model(kind, &params)?;
            let dist = dist_model.as_dist();
            let mu = mean(dist)?;
            writeln!(out, "mode: parametric")?;
            writeln!(out, "model: {}", kind.name())?;
            for (name, value) in super::named_params(&dist_model) {
                writeln!(out, "{name}: {}", sig10(value))?;
            }
            writeln!(out, "mean: {}", sig10(mu))?;
            writeln!(out, "gini: {}", sig10(gini(dist)?))?;
            writeln!(
                out,
                "top_10pct_share: {}",
                sig10(percentile_share(dist, 0.9, 1.0)?)
            )?;
            writeln!(
                out,
                "top_1pct_share: {}",
                sig10(percentile_share(dist, 0.99, 1.0)?)
            )?;
            if lorenz_n > 0 {
                write_lorenz(&mut out, &lorenz_grid(dist, lorenz_n)?)?;
            }
        }
    }
    out.flush()?;
    Ok(0)
}
