//! Harmonic-oscillator particle swarm optimization with periodic
//! corrections for angle-valued parameters.
//!
//! Each particle carries, per dimension, a damped oscillation about an
//! attractor between its personal best and the global best. Every dimension
//! is an independent spring with its own clock, and positions are sampled at
//! random times along each trajectory. With `periodic` set:
//!
//! * personal and global bests are wrapped into a window `[r, r + 2π)`
//!   with `r` drawn once per run; positions themselves move freely,
//! * attractors are averaged along the shorter arc,
//! * the amplitude floor uses the wrapped best-to-best distance.
//!
//! A particle whose phase cannot be reconstructed is retired for the rest
//! of the run instead of being clipped back into range.

use std::f64::consts::TAU;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::oscillator::{advance_time, amplitude_at, phase_at, sample_with_amplitude};
use super::periodic::{
    attractor_linear, attractor_periodic, threshold_amplitude, threshold_amplitude_linear, wrap_into_window,
};
use super::{argmin, check_dim, member_stream, run_stream, Evaluator, Objective, RunResult, StopReason};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct HopsoConfig {
    pub num_particles: usize,
    pub max_iters: usize,
    /// Damping rate λ.
    pub lambda: f64,
    pub c1: f64,
    pub c2: f64,
    /// Amplitude-floor multiplier.
    pub m: f64,
    /// Upper bound of the per-iteration time increment.
    pub t_ul: f64,
    pub omega: f64,
    pub periodic: bool,
    pub seed: u64,
    /// Optional cap on cost evaluations, counted from the first
    /// initialization call.
    pub max_evals: Option<usize>,
    pub parallel_evals: bool,
}

impl Default for HopsoConfig {
    fn default() -> Self {
        Self {
            num_particles: 10,
            max_iters: 500,
            lambda: 0.1,
            c1: 1.0,
            c2: 1.0,
            m: 2.05,
            t_ul: TAU,
            omega: 1.0,
            periodic: true,
            seed: 0,
            max_evals: None,
            parallel_evals: false,
        }
    }
}

impl HopsoConfig {
    pub fn validate(&self) -> Result<()> {
        let mut problems = Vec::new();
        if self.num_particles == 0 {
            problems.push("num_particles must be at least 1".to_string());
        }
        if !(self.lambda >= 0.0 && self.lambda.is_finite()) {
            problems.push(format!("lambda must be finite and >= 0, got {}", self.lambda));
        }
        for (name, v) in [("c1", self.c1), ("c2", self.c2), ("m", self.m), ("t_ul", self.t_ul), ("omega", self.omega)] {
            if !(v > 0.0 && v.is_finite()) {
                problems.push(format!("{name} must be finite and > 0, got {v}"));
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(Error::Config(problems.join("; ")))
        }
    }

    fn attractor(&self, p: f64, g: f64, r: f64) -> f64 {
        if self.periodic {
            attractor_periodic(p, g, self.c1, self.c2, r)
        } else {
            attractor_linear(p, g, self.c1, self.c2)
        }
    }

    fn threshold(&self, p: f64, g: f64) -> f64 {
        if self.periodic {
            threshold_amplitude(p, g, self.m)
        } else {
            threshold_amplitude_linear(p, g, self.m)
        }
    }

    fn store_best(&self, x: f64, r: f64) -> f64 {
        if self.periodic {
            wrap_into_window(x, r)
        } else {
            x
        }
    }
}

#[derive(Debug, Clone)]
struct Particle {
    position: Vec<f64>,
    velocity: Vec<f64>,
    best_pos: Vec<f64>,
    best_val: f64,
    attractor: Vec<f64>,
    amplitude: Vec<f64>,
    phase: Vec<f64>,
    clock: Vec<f64>,
    dead: bool,
    rng: ChaCha8Rng,
}

impl Particle {
    /// Recomputes attractor, amplitude and phase from the current position
    /// and velocity with the clock reset. `floor` applies the amplitude
    /// floor at this event; without it the raw recomputed amplitude is used.
    fn rebase(&mut self, cfg: &HopsoConfig, global: &[f64], r: f64, floor: bool) {
        for d in 0..self.position.len() {
            self.clock[d] = 0.0;
            let (p, g) = (self.best_pos[d], global[d]);
            let a = cfg.attractor(p, g, r);
            let (x, v) = (self.position[d], self.velocity[d]);
            let mut amp = amplitude_at(x, v, a, cfg.lambda, cfg.omega);
            if floor {
                amp = amp.max(cfg.threshold(p, g));
            }
            self.attractor[d] = a;
            self.amplitude[d] = amp;
            match phase_at(x, v, a, cfg.lambda, amp) {
                Some(theta) => self.phase[d] = theta,
                None => {
                    self.dead = true;
                    return;
                }
            }
        }
    }

    /// Advances the clock and returns the next (position, velocity).
    fn propose(&mut self, cfg: &HopsoConfig, global: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let dim = self.position.len();
        let mut x = Vec::with_capacity(dim);
        let mut v = Vec::with_capacity(dim);
        for d in 0..dim {
            self.clock[d] = advance_time(self.clock[d], cfg.t_ul, &mut self.rng);
            let decay = (-cfg.lambda * self.clock[d]).exp();
            let floor = cfg.threshold(self.best_pos[d], global[d]);
            let amp = (self.amplitude[d] * decay).max(floor);
            let (xd, vd) =
                sample_with_amplitude(amp, cfg.lambda, cfg.omega, self.phase[d], self.clock[d], self.attractor[d]);
            x.push(xd);
            v.push(vd);
        }
        (x, v)
    }
}

/// Swarm state handed to an observer after initialization and after each
/// iteration.
#[derive(Debug, Clone)]
pub struct SwarmSnapshot<'a> {
    /// 0 after initialization, then the 1-based iteration number.
    pub iteration: usize,
    /// Window offset `r`; zero when `periodic` is off.
    pub window: f64,
    pub global_best: &'a [f64],
    pub global_value: f64,
    pub personal_bests: Vec<&'a [f64]>,
    pub live: usize,
}

/// Minimizes `objective` over `ℝ^dim`.
pub fn hopso_run<O: Objective + ?Sized>(objective: &O, dim: usize, cfg: &HopsoConfig) -> Result<RunResult> {
    hopso_run_observed(objective, dim, cfg, |_| {})
}

/// [`hopso_run`] with a callback receiving a [`SwarmSnapshot`] at every
/// synchronization point.
pub fn hopso_run_observed<O, F>(objective: &O, dim: usize, cfg: &HopsoConfig, mut observe: F) -> Result<RunResult>
where
    O: Objective + ?Sized,
    F: FnMut(&SwarmSnapshot<'_>),
{
    check_dim(dim)?;
    cfg.validate()?;
    let mut run_rng = run_stream(cfg.seed);
    let r: f64 = if cfg.periodic { run_rng.random::<f64>() * TAU } else { 0.0 };

    let mut particles: Vec<Particle> = (0..cfg.num_particles)
        .map(|i| {
            let mut rng = member_stream(cfg.seed, i);
            let position: Vec<f64> = (0..dim).map(|_| rng.random::<f64>() * TAU).collect();
            let velocity: Vec<f64> = (0..dim).map(|_| rng.random_range(-1.0..=1.0)).collect();
            Particle {
                best_pos: position.clone(),
                best_val: f64::INFINITY,
                attractor: vec![0.0; dim],
                amplitude: vec![0.0; dim],
                phase: vec![0.0; dim],
                position,
                velocity,
                clock: vec![0.0; dim],
                dead: false,
                rng,
            }
        })
        .collect();

    let mut evaluator = Evaluator::new(objective, cfg.max_evals, cfg.parallel_evals);
    let starts: Vec<Vec<f64>> = particles.iter().map(|p| p.position.clone()).collect();
    let values = evaluator.batch(&starts)?;
    if values.is_empty() {
        return Err(Error::Config("evaluation budget allows no evaluations".into()));
    }
    // Particles the budget never reached are retired unevaluated.
    for (k, p) in particles.iter_mut().enumerate() {
        match values.get(k) {
            Some(&v) => {
                p.best_val = v;
                p.best_pos = p.position.iter().map(|&x| cfg.store_best(x, r)).collect();
            }
            None => p.dead = true,
        }
    }
    let first = argmin(&values).expect("non-empty");
    let mut global_pos = particles[first].best_pos.clone();
    let mut global_val = particles[first].best_val;
    for p in particles.iter_mut().filter(|p| !p.dead) {
        p.rebase(cfg, &global_pos, r, true);
    }
    let mut trace = vec![global_val];
    let snapshot = |iteration: usize, particles: &[Particle], global_pos: &[f64], global_val: f64, observe: &mut F| {
        observe(&SwarmSnapshot {
            iteration,
            window: r,
            global_best: global_pos,
            global_value: global_val,
            personal_bests: particles.iter().map(|p| p.best_pos.as_slice()).collect(),
            live: particles.iter().filter(|p| !p.dead).count(),
        })
    };
    snapshot(0, &particles, &global_pos, global_val, &mut observe);

    let mut stop = StopReason::Completed;
    for iteration in 1..=cfg.max_iters {
        if evaluator.exhausted() {
            stop = StopReason::BudgetExhausted;
            break;
        }
        let live: Vec<usize> = (0..particles.len()).filter(|&i| !particles[i].dead).collect();
        if live.is_empty() {
            stop = StopReason::SwarmExtinct;
            break;
        }
        let proposals: Vec<(Vec<f64>, Vec<f64>)> =
            live.iter().map(|&i| particles[i].propose(cfg, &global_pos)).collect();
        let points: Vec<Vec<f64>> = proposals.iter().map(|(x, _)| x.clone()).collect();
        let values = evaluator.batch(&points)?;

        for ((&i, (x, v)), &value) in live.iter().zip(proposals).zip(&values) {
            let p = &mut particles[i];
            p.position = x;
            p.velocity = v;
            if value < p.best_val {
                p.best_val = value;
                p.best_pos = p.position.iter().map(|&x| cfg.store_best(x, r)).collect();
                p.rebase(cfg, &global_pos, r, false);
            }
        }

        let best_idx = argmin(&particles.iter().map(|p| p.best_val).collect::<Vec<_>>()).expect("non-empty swarm");
        if particles[best_idx].best_val < global_val {
            global_val = particles[best_idx].best_val;
            global_pos = particles[best_idx].best_pos.clone();
            for p in particles.iter_mut().filter(|p| !p.dead) {
                p.rebase(cfg, &global_pos, r, true);
            }
        }
        trace.push(global_val);
        snapshot(iteration, &particles, &global_pos, global_val, &mut observe);
    }
    if stop == StopReason::Completed && evaluator.exhausted() {
        stop = StopReason::BudgetExhausted;
    }

    Ok(RunResult {
        best_value: global_val,
        best_position: global_pos,
        trace,
        evaluations_used: evaluator.used(),
        dead_count: particles.iter().filter(|p| p.dead).count(),
        stop,
    })
}
