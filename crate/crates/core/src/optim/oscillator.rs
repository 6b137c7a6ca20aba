//! Damped harmonic oscillator used for per-dimension particle motion:
//!
//! ```text
//! x(t) = A₀ e^{−λt} cos(ωt + θ) + a
//! v(t) = −ω A₀ e^{−λt} sin(ωt + θ) − λ A₀ e^{−λt} cos(ωt + θ)
//! ```

use std::f64::consts::TAU;

use rand::Rng;

pub fn oscillator_position(a0: f64, lambda: f64, omega: f64, theta: f64, t: f64, attractor: f64) -> f64 {
    a0 * (-lambda * t).exp() * (omega * t + theta).cos() + attractor
}

pub fn oscillator_velocity(a0: f64, lambda: f64, omega: f64, theta: f64, t: f64) -> f64 {
    let amp = a0 * (-lambda * t).exp();
    let (s, c) = (omega * t + theta).sin_cos();
    -omega * amp * s - lambda * amp * c
}

/// Position and velocity for an already-decayed amplitude `amp`, i.e.
/// `amp` stands in for `A₀ e^{−λt}`.
pub(crate) fn sample_with_amplitude(
    amp: f64,
    lambda: f64,
    omega: f64,
    theta: f64,
    t: f64,
    attractor: f64,
) -> (f64, f64) {
    let (s, c) = (omega * t + theta).sin_cos();
    (amp * c + attractor, -omega * amp * s - lambda * amp * c)
}

/// `t + u` with `u ~ U[0, t_ul)`.
pub fn advance_time<R: Rng + ?Sized>(t: f64, t_ul: f64, rng: &mut R) -> f64 {
    t + rng.random::<f64>() * t_ul
}

/// Amplitude of the oscillation through `(x0, v0)` about `attractor`.
pub fn amplitude_at(x0: f64, v0: f64, attractor: f64, lambda: f64, omega: f64) -> f64 {
    let d = x0 - attractor;
    let w = (v0 + lambda * d) / omega;
    (d * d + w * w).sqrt()
}

/// Phase placing the particle at `x0` at `t = 0` for the given amplitude,
/// on the branch whose velocity sign agrees with `v0`.
///
/// Returns `None` when `(x0 − a)/A₀` leaves `[−1, 1]` or is undefined; the
/// value is never clipped.
pub fn phase_at(x0: f64, v0: f64, attractor: f64, lambda: f64, amplitude: f64) -> Option<f64> {
    let d = x0 - attractor;
    let c = d / amplitude;
    if !c.is_finite() || c.abs() > 1.0 {
        return None;
    }
    let theta = c.acos();
    // v(0) + λ(x0 − a) = −ω A₀ sin θ, so a positive value needs sin θ < 0.
    if v0 + lambda * d > 0.0 {
        let flipped = TAU - theta;
        Some(if flipped >= TAU { 0.0 } else { flipped })
    } else {
        Some(theta)
    }
}

/// `(A₀, θ)` for a particle at `(x0, v0)` with `t` reset to zero, or `None`
/// when the phase is undefined and the particle must be retired.
pub fn init_amplitude_phase(x0: f64, v0: f64, attractor: f64, lambda: f64, omega: f64) -> Option<(f64, f64)> {
    let a0 = amplitude_at(x0, v0, attractor, lambda, omega);
    phase_at(x0, v0, attractor, lambda, a0).map(|theta| (a0, theta))
}
