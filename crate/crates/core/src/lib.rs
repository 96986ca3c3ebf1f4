//! κ-generalized income and wealth distributions.
//!
//! The κ-generalized family replaces the ordinary exponential in the Weibull
//! survival function with the deformed exponential
//! `exp_κ(x) = (sqrt(1 + κ²x²) + κx)^(1/κ)`, producing a distribution that is
//! Weibull-like near the origin and Pareto-tailed with exponent `α/κ` at the
//! top. This crate provides:
//!
//! * numerically robust κ-exponential / κ-logarithm kernels ([`kappa`]),
//! * the κ-generalized distribution plus Weibull, exponential, Singh-Maddala
//!   and Dagum type I baselines under one contract ([`dist`]),
//! * moments, Lorenz curve, Gini index and percentile shares by adaptive
//!   quadrature, with weighted-sample estimators ([`inequality`]),
//! * weighted maximum-likelihood fitting with bootstrap standard errors
//!   ([`fit`]),
//! * a three-component net-wealth mixture on the real line ([`mixture`]),
//! * goodness-of-fit statistics and AIC-ranked model comparison ([`gof`]).
//!
//! Kernel and distribution math is generic over the scalar type through
//! [`scalar::Real`]; the estimation layer and the `F64` aliases below pin
//! `f64`.

pub mod data;
pub mod dist;
pub mod error;
pub mod fit;
pub mod gof;
pub mod inequality;
pub mod kappa;
pub mod mixture;
pub mod optim;
pub mod quad;
pub mod rng;
pub mod scalar;

pub use data::WeightedSample;
pub use dist::{
    BaselineModel, ContinuousDist, Dagum, Exponential, KappaGeneralized, SinghMaddala, Weibull,
};
pub use error::{Error, Result};
pub use fit::{fit_mle, log_likelihood, FitConfig, FitResult, FittedModel, ModelKind};
pub use inequality::LorenzPoint;
pub use kappa::Kappa;
pub use mixture::NetWealthMixture;
pub use scalar::Real;

/// `f64` aliases for the scalar-generic core types.
pub type KappaF64 = kappa::Kappa<f64>;
pub type KappaGeneralizedF64 = dist::KappaGeneralized<f64>;
pub type WeibullF64 = dist::Weibull<f64>;
pub type ExponentialF64 = dist::Exponential<f64>;
pub type SinghMaddalaF64 = dist::SinghMaddala<f64>;
pub type DagumF64 = dist::Dagum<f64>;
pub type BaselineModelF64 = dist::BaselineModel<f64>;
pub type LorenzPointF64 = inequality::LorenzPoint<f64>;
