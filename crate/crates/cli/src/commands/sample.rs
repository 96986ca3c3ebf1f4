use anyhow::{bail, Result};
use kgen::dist::{KappaGeneralized, Weibull};
use kgen::mixture::NetWealthMixture;

use super::{build_model, model_kind, open_output, resolve_model, resolve_params};
use crate::config::{pick, FileConfig};
use crate::format::sig10;
use crate::SampleArgs;

pub fn run(args: SampleArgs) -> Result<i32> {
    let cfg = FileConfig::load(args.config.as_deref())?;
    let model = resolve_model(args.model.as_deref(), &cfg, "kgen")?;
    let n = pick(args.n, cfg.get("n")?, 1000usize);
    let seed = pick(args.seed, cfg.get("seed")?, 0u64);
    let params = resolve_params(&cfg, args.alpha, args.beta, args.kappa, args.shape2)?;

    let draws: Vec<f64> = if model == "mixture" {
        let theta_neg = pick(args.theta_neg, cfg.get("theta-neg")?, 0.0);
        let theta_zero = pick(args.theta_zero, cfg.get("theta-zero")?, 0.0);
        let theta_pos = 1.0 - theta_neg - theta_zero;
        if theta_pos < -1e-12 {
            bail!("theta-neg + theta-zero exceeds 1");
        }
        let neg = if theta_neg > 0.0 {
            let shape = pick(args.neg_shape, cfg.get("neg-shape")?, 1.0);
            let scale = pick(args.neg_scale, cfg.get("neg-scale")?, 1.0);
            Some(Weibull::new(shape, scale)?)
        } else {
            None
        };
        let pos = KappaGeneralized::new(params.alpha, params.beta, params.kappa)?;
        let mixture = NetWealthMixture::new(theta_neg, theta_zero, theta_pos.max(0.0), neg, pos)?;
        mixture.sample(n, seed)
    } else {
        let kind = model_kind(&model)?;
        let dist_model = build_model(kind, &params)?;
        dist_model.as_dist().sample(n, seed)
    };

    let mut out = open_output(args.output.as_deref())?;
    writeln!(out, "value")?;
    for v in draws {
        writeln!(out, "{}", sig10(v))?;
    }
    out.flush()?;
    Ok(0)
}
