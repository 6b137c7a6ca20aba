//! Derivative-free optimizers sharing one objective interface: periodic
//! HOPSO, constriction PSO and best/1/bin differential evolution.
//!
//! Every optimizer evaluates its population as an ordered batch. Points in
//! a batch are independent, so a batch may be evaluated on a thread pool;
//! each evaluation gets a sequential index, and all state updates are
//! applied afterwards in population order. Results therefore do not depend
//! on evaluation scheduling.
//!
//! Random streams: a run seeded with `s` draws run-level values (the
//! window offset, DE sampling) from ChaCha8 stream 0 of `s`, and particle
//! `i` draws from stream `i + 1` of the same seed.

pub mod de;
pub mod hopso;
pub mod oscillator;
pub mod periodic;
pub mod pso;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use de::{de_run, DeConfig};
pub use hopso::{hopso_run, HopsoConfig};
pub use pso::{pso_run, PsoConfig};

/// A cost function over `ℝ^d`.
///
/// `eval_index` is the zero-based position of this call in the run's
/// evaluation sequence; stochastic objectives use it to pick a noise
/// stream. Returning [`Error::BudgetExhausted`] stops the run cleanly.
pub trait Objective: Sync {
    fn evaluate(&self, x: &[f64], eval_index: u64) -> Result<f64>;
}

impl<F> Objective for F
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    fn evaluate(&self, x: &[f64], _eval_index: u64) -> Result<f64> {
        Ok(self(x))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StopReason {
    Completed,
    BudgetExhausted,
    /// Every particle was retired before the iteration limit.
    SwarmExtinct,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub best_value: f64,
    pub best_position: Vec<f64>,
    /// Global best after initialization, then after every iteration.
    pub trace: Vec<f64>,
    pub evaluations_used: usize,
    pub dead_count: usize,
    pub stop: StopReason,
}

/// Optimizer choice plus its settings.
#[derive(Debug, Clone, PartialEq)]
pub enum Optimizer {
    Hopso(HopsoConfig),
    Pso(PsoConfig),
    De(DeConfig),
}

impl Optimizer {
    pub fn name(&self) -> &'static str {
        match self {
            Optimizer::Hopso(_) => "hopso",
            Optimizer::Pso(_) => "pso",
            Optimizer::De(_) => "de",
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Optimizer::Hopso(c) => c.validate(),
            Optimizer::Pso(c) => c.validate(),
            Optimizer::De(c) => c.validate(),
        }
    }

    pub fn with_seed(&self, seed: u64) -> Optimizer {
        let mut out = self.clone();
        match &mut out {
            Optimizer::Hopso(c) => c.seed = seed,
            Optimizer::Pso(c) => c.seed = seed,
            Optimizer::De(c) => c.seed = seed,
        }
        out
    }

    pub fn with_max_evals(&self, max_evals: Option<usize>) -> Optimizer {
        let mut out = self.clone();
        match &mut out {
            Optimizer::Hopso(c) => c.max_evals = max_evals,
            Optimizer::Pso(c) => c.max_evals = max_evals,
            Optimizer::De(c) => c.max_evals = max_evals,
        }
        out
    }

    pub fn run<O: Objective + ?Sized>(&self, objective: &O, dim: usize) -> Result<RunResult> {
        match self {
            Optimizer::Hopso(c) => hopso_run(objective, dim, c),
            Optimizer::Pso(c) => pso_run(objective, dim, c),
            Optimizer::De(c) => de_run(objective, dim, c),
        }
    }
}

pub(crate) fn run_stream(seed: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(0);
    rng
}

pub(crate) fn member_stream(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64 + 1);
    rng
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 {
        return Err(Error::Config("problem dimension must be at least 1".into()));
    }
    Ok(())
}

/// Budget-aware batch evaluation.
pub(crate) struct Evaluator<'a, O: ?Sized> {
    objective: &'a O,
    budget: Option<usize>,
    used: usize,
    parallel: bool,
    exhausted: bool,
}

impl<'a, O: Objective + ?Sized> Evaluator<'a, O> {
    pub(crate) fn new(objective: &'a O, budget: Option<usize>, parallel: bool) -> Self {
        Self { objective, budget, used: 0, parallel, exhausted: false }
    }

    pub(crate) fn used(&self) -> usize {
        self.used
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }

    /// Evaluates `points` in order. When the budget runs out the returned
    /// vector is a strict prefix and [`Evaluator::exhausted`] turns true.
    pub(crate) fn batch(&mut self, points: &[Vec<f64>]) -> Result<Vec<f64>> {
        if self.exhausted {
            return Ok(Vec::new());
        }
        let allowed = match self.budget {
            Some(b) => points.len().min(b.saturating_sub(self.used)),
            None => points.len(),
        };
        let todo = &points[..allowed];
        let base = self.used as u64;
        let eval = |(k, x): (usize, &Vec<f64>)| self.objective.evaluate(x, base + k as u64);
        let results: Vec<Result<f64>> = if self.parallel {
            todo.par_iter().enumerate().map(eval).collect()
        } else {
            todo.iter().enumerate().map(eval).collect()
        };
        let mut values = Vec::with_capacity(results.len());
        for r in results {
            match r {
                Ok(v) => values.push(v),
                Err(Error::BudgetExhausted { .. }) => {
                    self.exhausted = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        self.used += values.len();
        if allowed < points.len() {
            self.exhausted = true;
        }
        Ok(values)
    }
}

pub(crate) fn argmin(values: &[f64]) -> Option<usize> {
    values
        .iter()
        .enumerate()
        .fold(None, |best: Option<(usize, f64)>, (i, &v)| match best {
            _ if v.is_nan() => best,
            Some((_, bv)) if bv <= v => best,
            _ => Some((i, v)),
        })
        .map(|(i, _)| i)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluator_truncates_at_budget() {
        let f = |x: &[f64]| x[0];
        let mut ev = Evaluator::new(&f, Some(3), false);
        let pts: Vec<Vec<f64>> = (0..2).map(|i| vec![i as f64]).collect();
        assert_eq!(ev.batch(&pts).unwrap(), vec![0.0, 1.0]);
        assert!(!ev.exhausted());
        assert_eq!(ev.batch(&pts).unwrap(), vec![0.0]);
        assert!(ev.exhausted());
        assert_eq!(ev.used(), 3);
        assert!(ev.batch(&pts).unwrap().is_empty());
    }

    #[test]
    fn evaluator_passes_sequential_indices() {
        struct Idx;
        impl Objective for Idx {
            fn evaluate(&self, _x: &[f64], i: u64) -> Result<f64> {
                Ok(i as f64)
            }
        }
        let pts = vec![vec![0.0]; 5];
        for parallel in [false, true] {
            let mut ev = Evaluator::new(&Idx, None, parallel);
            assert_eq!(ev.batch(&pts).unwrap(), vec![0.0, 1.0, 2.0, 3.0, 4.0]);
            assert_eq!(ev.batch(&pts[..2]).unwrap(), vec![5.0, 6.0]);
        }
    }

    #[test]
    fn objective_budget_error_is_a_stop_signal() {
        struct Capped;
        impl Objective for Capped {
            fn evaluate(&self, _x: &[f64], i: u64) -> Result<f64> {
                if i >= 2 {
                    Err(Error::BudgetExhausted { budget: 2 })
                } else {
                    Ok(1.0)
                }
            }
        }
        let mut ev = Evaluator::new(&Capped, None, false);
        assert_eq!(ev.batch(&vec![vec![0.0]; 4]).unwrap(), vec![1.0, 1.0]);
        assert!(ev.exhausted());
    }

    #[test]
    fn argmin_prefers_first_minimum() {
        assert_eq!(argmin(&[3.0, 1.0, 1.0, 2.0]), Some(1));
        assert_eq!(argmin(&[]), None);
    }
}
