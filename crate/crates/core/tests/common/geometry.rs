//! Case checks for the periodic geometry, shared by the property tests and
//! the acceptance run. Each returns a description of the first violation.

use hopso::optim::hopso::hopso_run_observed;
use hopso::optim::oscillator::{init_amplitude_phase, oscillator_position, oscillator_velocity};
use hopso::optim::periodic::{attractor_periodic, circular_distance, threshold_amplitude, wrap_into_window};
use hopso::optim::HopsoConfig;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::{PI, TAU};

pub type Check = Result<(), String>;

fn in_window(x: f64, r: f64) -> bool {
    x >= r && x < r + TAU
}

pub fn wrap_equivariance(p: f64, g: f64, r: f64, k: i32) -> Check {
    let p = wrap_into_window(p, r);
    let g = wrap_into_window(g, r);
    let base = wrap_into_window(attractor_periodic(p, g, 1.0, 1.0, r), r);
    let lifted = wrap_into_window(attractor_periodic(p + TAU, g, 1.0, 1.0, r), r);
    if circular_distance(base, lifted) > 1e-9 {
        return Err(format!("attractor moved under p+2pi: p={p} g={g} r={r}: {base} vs {lifted}"));
    }
    let shifted = wrap_into_window(p + k as f64 * TAU, r);
    if circular_distance(shifted, p) > 1e-9 || !in_window(shifted, r) {
        return Err(format!("wrap(p + {k}*2pi) = {shifted}, p = {p}, r = {r}"));
    }
    Ok(())
}

pub fn minor_arc(p: f64, g: f64, r: f64) -> Check {
    let p = wrap_into_window(p, r);
    let g = wrap_into_window(g, r);
    let a = attractor_periodic(p, g, 1.0, 1.0, r);
    let half = circular_distance(p, g) / 2.0;
    let (dp, dg) = (circular_distance(a, p), circular_distance(a, g));
    if (dp - half).abs() > 1e-9 || (dg - half).abs() > 1e-9 {
        return Err(format!("p={p} g={g} r={r}: a={a} is {dp}/{dg} from the ends, half arc {half}"));
    }
    if (p - g).abs() > PI && !in_window(a, r) {
        return Err(format!("attractor {a} outside window at r={r}"));
    }
    Ok(())
}

pub fn threshold_symmetry(p: f64, g: f64, m: f64, k: i32, j: i32) -> Check {
    let t = threshold_amplitude(p, g, m);
    let swapped = threshold_amplitude(g, p, m);
    let shifted = threshold_amplitude(p + k as f64 * TAU, g + j as f64 * TAU, m);
    if (t - swapped).abs() > 1e-12 {
        return Err(format!("asymmetric: {t} vs {swapped}"));
    }
    if (t - shifted).abs() > 1e-9 {
        return Err(format!("not periodic: {t} vs {shifted} (k={k}, j={j})"));
    }
    if !(0.0..=PI * m / 2.0 + 1e-12).contains(&t) {
        return Err(format!("{t} outside [0, pi*m/2]"));
    }
    Ok(())
}

pub fn phase_reconstruction(x0: f64, v0: f64, a: f64, lambda: f64) -> Check {
    let Some((amp, theta)) = init_amplitude_phase(x0, v0, a, lambda, 1.0) else {
        return Err(format!("no phase for x0={x0} v0={v0} a={a}"));
    };
    let x = oscillator_position(amp, lambda, 1.0, theta, 0.0, a);
    let v = oscillator_velocity(amp, lambda, 1.0, theta, 0.0);
    if (x - x0).abs() > 1e-9 || (v - v0).abs() > 1e-6 {
        return Err(format!("x0={x0} v0={v0} a={a} lambda={lambda}: got ({x}, {v})"));
    }
    Ok(())
}

/// Runs a short periodic HOPSO search and checks that every best position
/// reported to the observer lies in the run's window.
pub fn window_invariant(seed: u64, rng: &mut ChaCha8Rng) -> Check {
    let dim = rng.random_range(1..=3);
    let shift: Vec<f64> = (0..dim).map(|_| rng.random_range(-10.0..10.0)).collect();
    let cost = move |x: &[f64]| x.iter().zip(&shift).map(|(a, b)| 1.0 - (a - b).cos()).sum::<f64>();
    let cfg = HopsoConfig { num_particles: 5, max_iters: 10, seed, ..HopsoConfig::default() };
    let mut failure = None;
    hopso_run_observed(&cost, dim, &cfg, |s| {
        let r = s.window;
        let all = s.personal_bests.iter().flat_map(|p| p.iter()).chain(s.global_best.iter());
        for &x in all {
            if failure.is_none() && !in_window(x, r) {
                failure = Some(format!("seed {seed}, iteration {}: {x} outside [{r}, {r}+2pi)", s.iteration));
            }
        }
    })
    .map_err(|e| e.to_string())?;
    failure.map_or(Ok(()), Err)
}

/// Draws arguments for one case of `check` (by name) and runs it.
pub fn random_case(name: &str, index: u64, rng: &mut ChaCha8Rng) -> Check {
    let big = -50.0..50.0;
    match name {
        "wrap_equivariance" => wrap_equivariance(
            rng.random_range(big.clone()),
            rng.random_range(big.clone()),
            rng.random_range(0.0..TAU),
            rng.random_range(-20..=20),
        ),
        "minor_arc" => minor_arc(rng.random_range(big.clone()), rng.random_range(big), rng.random_range(0.0..TAU)),
        "threshold_symmetry" => threshold_symmetry(
            rng.random_range(-10.0..10.0),
            rng.random_range(-10.0..10.0),
            rng.random_range(0.1..4.0),
            rng.random_range(-20..=20),
            rng.random_range(-20..=20),
        ),
        "phase_reconstruction" => phase_reconstruction(
            rng.random_range(-10.0..10.0),
            rng.random_range(-5.0..5.0),
            rng.random_range(-10.0..10.0),
            rng.random_range(0.0..1.0),
        ),
        "window_invariant" => window_invariant(index, rng),
        other => Err(format!("unknown check {other}")),
    }
}

pub const CHECKS: [&str; 5] =
    ["wrap_equivariance", "minor_arc", "threshold_symmetry", "window_invariant", "phase_reconstruction"];
