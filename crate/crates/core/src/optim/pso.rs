//! Constriction-factor particle swarm optimization.
//!
//! `v ← χ[v + c1·u1⊙(p − x) + c2·u2⊙(g − x)]`, `x ← x + v`, with fresh
//! `u1, u2 ~ U[0,1]^d` per particle per step. Positions are unbounded.
//! The global best is refreshed once per sweep so the sweep can be
//! evaluated as a batch.

use std::f64::consts::TAU;

use rand::Rng;

use super::{argmin, check_dim, member_stream, Evaluator, Objective, RunResult, StopReason};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct PsoConfig {
    pub num_particles: usize,
    pub max_iters: usize,
    pub c1: f64,
    pub c2: f64,
    /// Constriction factor χ.
    pub chi: f64,
    pub seed: u64,
    pub max_evals: Option<usize>,
    pub parallel_evals: bool,
}

impl Default for PsoConfig {
    fn default() -> Self {
        Self {
            num_particles: 10,
            max_iters: 500,
            c1: 2.05,
            c2: 2.05,
            chi: 0.729,
            seed: 0,
            max_evals: None,
            parallel_evals: false,
        }
    }
}

impl PsoConfig {
    pub fn validate(&self) -> Result<()> {
        if self.num_particles == 0 {
            return Err(Error::Config("num_particles must be at least 1".into()));
        }
        for (name, v) in [("c1", self.c1), ("c2", self.c2), ("chi", self.chi)] {
            if !(v > 0.0 && v.is_finite()) {
                return Err(Error::Config(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        Ok(())
    }
}

pub fn pso_run<O: Objective + ?Sized>(objective: &O, dim: usize, cfg: &PsoConfig) -> Result<RunResult> {
    check_dim(dim)?;
    cfg.validate()?;
    let mut rngs: Vec<_> = (0..cfg.num_particles).map(|i| member_stream(cfg.seed, i)).collect();
    let mut positions: Vec<Vec<f64>> = Vec::with_capacity(cfg.num_particles);
    let mut velocities: Vec<Vec<f64>> = Vec::with_capacity(cfg.num_particles);
    for rng in rngs.iter_mut() {
        positions.push((0..dim).map(|_| rng.random::<f64>() * TAU).collect());
        velocities.push((0..dim).map(|_| rng.random_range(-1.0..=1.0)).collect());
    }

    let mut evaluator = Evaluator::new(objective, cfg.max_evals, cfg.parallel_evals);
    let values = evaluator.batch(&positions)?;
    if values.is_empty() {
        return Err(Error::Config("evaluation budget allows no evaluations".into()));
    }
    // Budget-truncated initial members keep infinite personal bests.
    let mut best_pos = positions.clone();
    let mut best_val: Vec<f64> =
        (0..cfg.num_particles).map(|i| values.get(i).copied().unwrap_or(f64::INFINITY)).collect();
    let g = argmin(&best_val).expect("non-empty");
    let mut global_pos = best_pos[g].clone();
    let mut global_val = best_val[g];
    let mut trace = vec![global_val];

    let mut stop = StopReason::Completed;
    for _ in 0..cfg.max_iters {
        if evaluator.exhausted() {
            stop = StopReason::BudgetExhausted;
            break;
        }
        for i in 0..cfg.num_particles {
            let rng = &mut rngs[i];
            for d in 0..dim {
                let u1: f64 = rng.random();
                let u2: f64 = rng.random();
                let x = positions[i][d];
                let v = velocities[i][d];
                let nv = cfg.chi * (v + cfg.c1 * u1 * (best_pos[i][d] - x) + cfg.c2 * u2 * (global_pos[d] - x));
                velocities[i][d] = nv;
                positions[i][d] = x + nv;
            }
        }
        let values = evaluator.batch(&positions)?;
        for (i, &value) in values.iter().enumerate() {
            if value < best_val[i] {
                best_val[i] = value;
                best_pos[i].clone_from(&positions[i]);
            }
        }
        let g = argmin(&best_val).expect("non-empty");
        if best_val[g] < global_val {
            global_val = best_val[g];
            global_pos.clone_from(&best_pos[g]);
        }
        trace.push(global_val);
    }
    if stop == StopReason::Completed && evaluator.exhausted() {
        stop = StopReason::BudgetExhausted;
    }

    Ok(RunResult {
        best_value: global_val,
        best_position: global_pos,
        trace,
        evaluations_used: evaluator.used(),
        dead_count: 0,
        stop,
    })
}
