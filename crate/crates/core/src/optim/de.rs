//! Differential evolution, best/1/bin with deferred updating.
//!
//! Each generation builds every trial vector from the previous population
//! before any is evaluated, then applies greedy selection in one pass.
//! The mutation factor is dithered once per generation. Mutants leaving
//! the box are clipped to it. No local polish is run at the end.

use std::f64::consts::TAU;

use rand::Rng;

use super::{argmin, check_dim, run_stream, Evaluator, Objective, RunResult, StopReason};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct DeConfig {
    pub population: usize,
    pub max_generations: usize,
    /// Dither range `[low, high)` for the mutation factor.
    pub mutation: (f64, f64),
    pub crossover: f64,
    pub lower: f64,
    pub upper: f64,
    pub seed: u64,
    pub max_evals: Option<usize>,
    pub parallel_evals: bool,
}

impl Default for DeConfig {
    fn default() -> Self {
        Self {
            population: 32,
            max_generations: 157,
            mutation: (0.5, 1.0),
            crossover: 0.7,
            lower: 0.0,
            upper: TAU,
            seed: 0,
            max_evals: None,
            parallel_evals: false,
        }
    }
}

impl DeConfig {
    pub fn validate(&self) -> Result<()> {
        if self.population < 4 {
            return Err(Error::Config(format!(
                "population must be at least 4 for best/1/bin, got {}",
                self.population
            )));
        }
        let (lo, hi) = self.mutation;
        if !(lo >= 0.0 && lo < hi && hi <= 2.0) {
            return Err(Error::Config(format!("mutation range [{lo}, {hi}) is invalid")));
        }
        if !(0.0..=1.0).contains(&self.crossover) {
            return Err(Error::Config(format!("crossover must lie in [0, 1], got {}", self.crossover)));
        }
        if !(self.lower < self.upper && self.lower.is_finite() && self.upper.is_finite()) {
            return Err(Error::Config(format!("bounds [{}, {}] are invalid", self.lower, self.upper)));
        }
        Ok(())
    }
}

fn distinct_pair<R: Rng>(rng: &mut R, n: usize, exclude: usize) -> (usize, usize) {
    let pick = |rng: &mut R, avoid: &[usize]| loop {
        let k = rng.random_range(0..n);
        if !avoid.contains(&k) {
            break k;
        }
    };
    let a = pick(rng, &[exclude]);
    let b = pick(rng, &[exclude, a]);
    (a, b)
}

pub fn de_run<O: Objective + ?Sized>(objective: &O, dim: usize, cfg: &DeConfig) -> Result<RunResult> {
    check_dim(dim)?;
    cfg.validate()?;
    let mut rng = run_stream(cfg.seed);
    let span = cfg.upper - cfg.lower;
    let mut population: Vec<Vec<f64>> =
        (0..cfg.population).map(|_| (0..dim).map(|_| cfg.lower + rng.random::<f64>() * span).collect()).collect();

    let mut evaluator = Evaluator::new(objective, cfg.max_evals, cfg.parallel_evals);
    let values = evaluator.batch(&population)?;
    if values.is_empty() {
        return Err(Error::Config("evaluation budget allows no evaluations".into()));
    }
    let mut fitness: Vec<f64> = (0..cfg.population).map(|i| values.get(i).copied().unwrap_or(f64::INFINITY)).collect();
    let mut best = argmin(&fitness).expect("non-empty");
    let mut trace = vec![fitness[best]];

    let mut stop = StopReason::Completed;
    for _ in 0..cfg.max_generations {
        if evaluator.exhausted() {
            stop = StopReason::BudgetExhausted;
            break;
        }
        let f = rng.random_range(cfg.mutation.0..cfg.mutation.1);
        let trials: Vec<Vec<f64>> = (0..cfg.population)
            .map(|i| {
                let (r1, r2) = distinct_pair(&mut rng, cfg.population, i);
                let forced = rng.random_range(0..dim);
                (0..dim)
                    .map(|j| {
                        let take_mutant = rng.random::<f64>() < cfg.crossover || j == forced;
                        if take_mutant {
                            let m = population[best][j] + f * (population[r1][j] - population[r2][j]);
                            m.clamp(cfg.lower, cfg.upper)
                        } else {
                            population[i][j]
                        }
                    })
                    .collect()
            })
            .collect();
        let values = evaluator.batch(&trials)?;
        for (i, (trial, &value)) in trials.into_iter().zip(&values).enumerate() {
            if value <= fitness[i] {
                population[i] = trial;
                fitness[i] = value;
            }
        }
        best = argmin(&fitness).expect("non-empty");
        trace.push(fitness[best]);
    }
    if stop == StopReason::Completed && evaluator.exhausted() {
        stop = StopReason::BudgetExhausted;
    }

    Ok(RunResult {
        best_value: fitness[best],
        best_position: population[best].clone(),
        trace,
        evaluations_used: evaluator.used(),
        dead_count: 0,
        stop,
    })
}
