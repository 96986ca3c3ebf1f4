//! Derivative-free simplex minimization (Nelder-Mead).
//!
//! Standard reflection/expansion/contraction/shrink moves. Only the worst
//! vertex is ever replaced (and only by a better point), so the best
//! objective value is nonincreasing across iterations; `best_trace` records
//! it for diagnostics. Box constraints are handled by the callers through
//! parameter transforms, not here.

/// Simplex minimizer configuration.
#[derive(Debug, Clone, Copy)]
pub struct NelderMead {
    pub max_iterations: usize,
    /// Convergence threshold on the simplex extent per coordinate.
    pub x_tolerance: f64,
    /// Convergence threshold on the objective spread across the simplex.
    pub f_tolerance: f64,
}

impl Default for NelderMead {
    fn default() -> Self {
        NelderMead {
            max_iterations: 500,
            x_tolerance: 1e-8,
            f_tolerance: 1e-9,
        }
    }
}

#[derive(Debug, Clone)]
pub struct OptimOutcome {
    pub x: Vec<f64>,
    pub f: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Best objective value after each iteration; nonincreasing.
    pub best_trace: Vec<f64>,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

impl NelderMead {
    /// Minimizes `f` from `x0`, with the initial simplex offset by `step`
    /// along each coordinate. NaN objective values are treated as +∞.
    pub fn minimize(&self, mut f: impl FnMut(&[f64]) -> f64, x0: &[f64], step: f64) -> OptimOutcome {
        let dim = x0.len();
        assert!(dim > 0, "cannot optimize a zero-dimensional problem");
        let mut eval = |x: &[f64]| -> f64 {
            let v = f(x);
            if v.is_nan() {
                f64::INFINITY
            } else {
                v
            }
        };

        let mut simplex: Vec<Vec<f64>> = Vec::with_capacity(dim + 1);
        simplex.push(x0.to_vec());
        for i in 0..dim {
            let mut p = x0.to_vec();
            p[i] += step;
            simplex.push(p);
        }
        let mut values: Vec<f64> = simplex.iter().map(|p| eval(p)).collect();

        let mut best_trace = Vec::new();
        let mut iterations = 0;
        let mut converged = false;

        for _ in 0..self.max_iterations {
            iterations += 1;

            let mut order: Vec<usize> = (0..=dim).collect();
            order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
            let best = order[0];
            let worst = order[dim];
            let second_worst = order[dim - 1];
            best_trace.push(values[best]);

            let f_spread = values[worst] - values[best];
            let x_spread = simplex
                .iter()
                .flat_map(|p| {
                    p.iter()
                        .zip(&simplex[best])
                        .map(|(a, b)| (a - b).abs())
                })
                .fold(0.0, f64::max);
            if f_spread.abs() <= self.f_tolerance && x_spread <= self.x_tolerance {
                converged = true;
                break;
            }

            // Centroid of all vertices except the worst.
            let mut centroid = vec![0.0; dim];
            for &i in order.iter().take(dim) {
                for (c, v) in centroid.iter_mut().zip(&simplex[i]) {
                    *c += v;
                }
            }
            for c in centroid.iter_mut() {
                *c /= dim as f64;
            }

            let towards = |coef: f64, from: &[f64]| -> Vec<f64> {
                centroid
                    .iter()
                    .zip(from)
                    .map(|(c, w)| c + coef * (c - w))
                    .collect()
            };

            let reflected = towards(REFLECT, &simplex[worst]);
            let f_reflected = eval(&reflected);

            if f_reflected < values[best] {
                let expanded = towards(EXPAND, &simplex[worst]);
                let f_expanded = eval(&expanded);
                if f_expanded < f_reflected {
                    simplex[worst] = expanded;
                    values[worst] = f_expanded;
                } else {
                    simplex[worst] = reflected;
                    values[worst] = f_reflected;
                }
                continue;
            }
            if f_reflected < values[second_worst] {
                simplex[worst] = reflected;
                values[worst] = f_reflected;
                continue;
            }

            let contracted = if f_reflected < values[worst] {
                // Outside contraction, between centroid and reflected point.
                towards(CONTRACT, &simplex[worst])
            } else {
                towards(-CONTRACT, &simplex[worst])
            };
            let f_contracted = eval(&contracted);
            if f_contracted < values[worst].min(f_reflected) {
                simplex[worst] = contracted;
                values[worst] = f_contracted;
                continue;
            }

            // Shrink everything towards the best vertex.
            let best_point = simplex[best].clone();
            for i in 0..=dim {
                if i == best {
                    continue;
                }
                for (p, b) in simplex[i].iter_mut().zip(&best_point) {
                    *p = b + SHRINK * (*p - b);
                }
                values[i] = eval(&simplex[i]);
            }
        }

        let best = (0..values.len())
            .min_by(|&i, &j| values[i].total_cmp(&values[j]))
            .expect("simplex non-empty");
        best_trace.push(values[best]);
        OptimOutcome {
            x: simplex[best].clone(),
            f: values[best],
            iterations,
            converged,
            best_trace,
        }
    }
}
