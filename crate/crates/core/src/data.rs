//! Weighted microdata container.

use crate::error::{Error, Result};

/// Observations with nonnegative survey weights.
///
/// Weights are frequency-like multipliers: they scale log-likelihood
/// contributions and all empirical statistics. A zero weight excludes the
/// record. Values may carry any sign here; sign restrictions (income > 0,
/// wealth on ℝ) are enforced by the consuming operation.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightedSample {
    values: Vec<f64>,
    weights: Vec<f64>,
}

impl WeightedSample {
    pub fn new(values: Vec<f64>, weights: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidData("empty sample".into()));
        }
        if values.len() != weights.len() {
            return Err(Error::InvalidData(format!(
                "{} values but {} weights",
                values.len(),
                weights.len()
            )));
        }
        for (i, &v) in values.iter().enumerate() {
            if !v.is_finite() {
                return Err(Error::InvalidData(format!("value {v} at index {i} is not finite")));
            }
        }
        let mut total = 0.0;
        for (i, &w) in weights.iter().enumerate() {
            if !(w.is_finite() && w >= 0.0) {
                return Err(Error::InvalidData(format!(
                    "weight {w} at index {i} must be finite and nonnegative"
                )));
            }
            total += w;
        }
        if total <= 0.0 {
            return Err(Error::InvalidData("total weight must be positive".into()));
        }
        Ok(WeightedSample { values, weights })
    }

    /// Sample with all weights equal to one.
    pub fn unweighted(values: Vec<f64>) -> Result<Self> {
        let weights = vec![1.0; values.len()];
        Self::new(values, weights)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.values.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn total_weight(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Kish effective sample size `(Σw)² / Σw²`.
    pub fn effective_size(&self) -> f64 {
        let sum: f64 = self.weights.iter().sum();
        let sum_sq: f64 = self.weights.iter().map(|w| w * w).sum();
        sum * sum / sum_sq
    }

    pub fn weighted_mean(&self) -> f64 {
        let num: f64 = self.iter().map(|(v, w)| v * w).sum();
        num / self.total_weight()
    }

    /// Indices sorted ascending by value (ties keep input order).
    pub fn sorted_indices(&self) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..self.values.len()).collect();
        idx.sort_by(|&i, &j| self.values[i].total_cmp(&self.values[j]));
        idx
    }

    /// Weighted median: smallest value whose cumulative weight reaches half
    /// the total.
    pub fn weighted_median(&self) -> f64 {
        let order = self.sorted_indices();
        let half = 0.5 * self.total_weight();
        let mut cum = 0.0;
        for &i in &order {
            cum += self.weights[i];
            if cum >= half {
                return self.values[i];
            }
        }
        self.values[*order.last().expect("nonempty")]
    }

    /// Number of distinct values among positively weighted records.
    pub fn distinct_values(&self) -> usize {
        let mut vals: Vec<f64> = self
            .iter()
            .filter(|&(_, w)| w > 0.0)
            .map(|(v, _)| v)
            .collect();
        vals.sort_by(f64::total_cmp);
        vals.dedup();
        vals.len()
    }
}
