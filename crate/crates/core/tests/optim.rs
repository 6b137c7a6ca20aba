mod common;

use common::geometry;
use hopso::optim::{de_run, hopso_run, pso_run, DeConfig, HopsoConfig, Objective, Optimizer, PsoConfig, StopReason};
use hopso::{Error, Result};
use proptest::prelude::*;
use std::f64::consts::TAU;
use std::sync::atomic::{AtomicUsize, Ordering};

fn shifted_cos(dim: usize) -> impl Fn(&[f64]) -> f64 + Sync {
    let shift: Vec<f64> = (0..dim).map(|i| 0.37 + 1.3 * i as f64).collect();
    move |x: &[f64]| x.iter().zip(&shift).map(|(a, b)| 1.0 - (a - b).cos()).sum()
}

fn all_optimizers(seed: u64) -> Vec<Optimizer> {
    vec![
        Optimizer::Hopso(HopsoConfig { num_particles: 6, max_iters: 40, seed, ..HopsoConfig::default() }),
        Optimizer::Pso(PsoConfig { num_particles: 6, max_iters: 40, seed, ..PsoConfig::default() }),
        Optimizer::De(DeConfig { population: 8, max_generations: 30, seed, ..DeConfig::default() }),
    ]
}

struct Counting<F> {
    f: F,
    calls: AtomicUsize,
}

impl<F: Fn(&[f64]) -> f64 + Sync> Objective for Counting<F> {
    fn evaluate(&self, x: &[f64], _eval_index: u64) -> Result<f64> {
        self.calls.fetch_add(1, Ordering::SeqCst);
        Ok((self.f)(x))
    }
}

#[test]
fn hopso_solves_one_dimensional_cosine() {
    let cost = |x: &[f64]| 1.0 - (x[0] - 1.234).cos();
    let hits = (0..100)
        .filter(|&seed| {
            let cfg = HopsoConfig { seed, ..HopsoConfig::default() };
            hopso_run(&cost, 1, &cfg).unwrap().best_value < 1e-6
        })
        .count();
    assert!(hits >= 95, "{hits}/100");
}

#[test]
fn pso_solves_small_sphere() {
    let cost = |x: &[f64]| x.iter().map(|v| (v - 1.0).powi(2)).sum::<f64>();
    let hits = (0..100)
        .filter(|&seed| {
            let cfg = PsoConfig { seed, ..PsoConfig::default() };
            pso_run(&cost, 2, &cfg).unwrap().best_value < 1e-6
        })
        .count();
    assert!(hits >= 95, "{hits}/100");
}

#[test]
fn de_solves_small_sphere_within_budget() {
    let cost = |x: &[f64]| x.iter().map(|v| (v - 1.0).powi(2)).sum::<f64>();
    let mut hits = 0;
    for seed in 0..100 {
        let cfg = DeConfig { population: 32, max_generations: 157, seed, ..DeConfig::default() };
        let res = de_run(&cost, 2, &cfg).unwrap();
        assert!(res.evaluations_used <= 32 * 158);
        if res.best_value < 1e-4 {
            hits += 1;
        }
    }
    assert!(hits >= 90, "{hits}/100");
}

#[test]
fn constant_cost_gives_flat_trace() {
    let cost = |_: &[f64]| 3.5;
    for opt in all_optimizers(4) {
        let res = opt.run(&cost, 3).unwrap();
        assert!(res.trace.iter().all(|&v| v == 3.5), "{}", opt.name());
        assert_eq!(res.best_value, 3.5);
    }
}

#[test]
fn zero_dimension_is_rejected() {
    let cost = |_: &[f64]| 0.0;
    for opt in all_optimizers(0) {
        assert!(opt.run(&cost, 0).is_err(), "{}", opt.name());
    }
}

#[test]
fn objective_can_stop_a_run() {
    struct Limited;
    impl Objective for Limited {
        fn evaluate(&self, x: &[f64], eval_index: u64) -> Result<f64> {
            if eval_index >= 25 {
                return Err(Error::BudgetExhausted { budget: 25 });
            }
            Ok(x.iter().map(|v| v * v).sum())
        }
    }
    for opt in all_optimizers(2) {
        let res = opt.run(&Limited, 2).unwrap();
        assert_eq!(res.stop, StopReason::BudgetExhausted, "{}", opt.name());
        assert!(res.evaluations_used <= 25);
        assert!(res.best_value.is_finite());
    }
}

#[test]
fn parallel_evaluation_does_not_change_results() {
    let cost = shifted_cos(5);
    for seed in 0..5 {
        let serial = [
            Optimizer::Hopso(HopsoConfig { max_iters: 60, seed, ..HopsoConfig::default() }),
            Optimizer::Pso(PsoConfig { max_iters: 60, seed, ..PsoConfig::default() }),
            Optimizer::De(DeConfig { max_generations: 20, seed, ..DeConfig::default() }),
        ];
        let parallel = vec![
            Optimizer::Hopso(HopsoConfig { max_iters: 60, seed, parallel_evals: true, ..HopsoConfig::default() }),
            Optimizer::Pso(PsoConfig { max_iters: 60, seed, parallel_evals: true, ..PsoConfig::default() }),
            Optimizer::De(DeConfig { max_generations: 20, seed, parallel_evals: true, ..DeConfig::default() }),
        ];
        for (a, b) in serial.iter().zip(&parallel) {
            assert_eq!(a.run(&cost, 5).unwrap(), b.run(&cost, 5).unwrap(), "{}", a.name());
        }
    }
}

#[test]
fn geometry_checks_hold_on_edge_values() {
    use geometry::*;
    let r = 0.3;
    wrap_equivariance(r, r + TAU - 1e-12, r, 3).unwrap();
    minor_arc(0.4, 6.1, r).unwrap();
    minor_arc(1.0, 1.0 + std::f64::consts::PI, r).unwrap();
    threshold_symmetry(0.0, TAU, 2.05, -1, 1).unwrap();
    phase_reconstruction(1.0, 0.0, 0.5, 0.1).unwrap();
    assert!(phase_reconstruction(1.0, 0.0, 1.0, 0.1).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn traces_are_monotone_and_budgets_respected(seed in any::<u64>(), dim in 1usize..6, budget in 1usize..300) {
        let cost = Counting { f: shifted_cos(dim), calls: AtomicUsize::new(0) };
        for opt in all_optimizers(seed) {
            cost.calls.store(0, Ordering::SeqCst);
            let res = opt.with_max_evals(Some(budget)).run(&cost, dim).unwrap();
            prop_assert!(res.trace.windows(2).all(|w| w[1] <= w[0]), "{}", opt.name());
            prop_assert_eq!(*res.trace.last().unwrap(), res.best_value);
            prop_assert!(res.evaluations_used <= budget);
            prop_assert_eq!(res.evaluations_used, cost.calls.load(Ordering::SeqCst));
            prop_assert!(((cost.f)(&res.best_position) - res.best_value).abs() < 1e-12);
        }
    }

    #[test]
    fn runs_are_deterministic(seed in any::<u64>()) {
        let cost = shifted_cos(3);
        for opt in all_optimizers(seed) {
            prop_assert_eq!(opt.run(&cost, 3).unwrap(), opt.run(&cost, 3).unwrap());
        }
    }

    #[test]
    fn wrap_equivariance(p in -50.0f64..50.0, g in -50.0f64..50.0, r in 0.0f64..TAU, k in -20i32..=20) {
        prop_assert!(geometry::wrap_equivariance(p, g, r, k).is_ok());
    }

    #[test]
    fn minor_arc(p in -50.0f64..50.0, g in -50.0f64..50.0, r in 0.0f64..TAU) {
        let out = geometry::minor_arc(p, g, r);
        prop_assert!(out.is_ok(), "{:?}", out);
    }

    #[test]
    fn threshold_symmetry(p in -10.0f64..10.0, g in -10.0f64..10.0, m in 0.1f64..4.0, k in -20i32..=20, j in -20i32..=20) {
        prop_assert!(geometry::threshold_symmetry(p, g, m, k, j).is_ok());
    }

    #[test]
    fn phase_reconstruction(x0 in -10.0f64..10.0, v0 in -5.0f64..5.0, a in -10.0f64..10.0, lambda in 0.0f64..1.0) {
        let out = geometry::phase_reconstruction(x0, v0, a, lambda);
        prop_assert!(out.is_ok(), "{:?}", out);
    }

    #[test]
    fn best_positions_stay_in_window(seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let out = geometry::window_invariant(seed, &mut rng);
        prop_assert!(out.is_ok(), "{:?}", out);
    }
}
