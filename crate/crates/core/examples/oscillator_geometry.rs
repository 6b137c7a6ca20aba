//! Damped-oscillator trajectory of a single coordinate, and the periodic
//! helpers that keep best positions and attractors on the circle.

use hopso::optim::oscillator::{init_amplitude_phase, oscillator_position, oscillator_velocity};
use hopso::optim::periodic::{
    attractor_linear, attractor_periodic, circular_distance, threshold_amplitude, wrap_into_window,
};
use std::f64::consts::PI;

fn main() {
    let (lambda, omega, a) = (0.1, 1.0, 0.0);
    let (x0, v0) = (1.0, 0.0);
    let (amp, theta) = init_amplitude_phase(x0, v0, a, lambda, omega).expect("valid state");
    println!("A0 = {amp:.6}  theta = {theta:.6}");
    println!("   t        x(t)        v(t)");
    for k in 0..=8 {
        let t = k as f64 * PI / 2.0;
        let x = oscillator_position(amp, lambda, omega, theta, t, a);
        let v = oscillator_velocity(amp, lambda, omega, theta, t);
        println!("{t:6.3}  {x:+.6}  {v:+.6}");
    }

    let r = 0.3;
    println!();
    println!("window [{r}, {r} + 2pi)");
    for x in [-1.0, 0.3, 7.0, 13.0] {
        println!("wrap({x:+}) = {:.6}", wrap_into_window(x, r));
    }

    // Two bests on either side of the seam: the linear midpoint lands on the
    // far side of the circle, the periodic one between them.
    let (p, g) = (0.4, 6.1);
    println!();
    println!("p = {p}, g = {g}, circular distance {:.6}", circular_distance(p, g));
    println!("linear attractor   {:.6}", attractor_linear(p, g, 1.0, 1.0));
    println!("periodic attractor {:.6}", attractor_periodic(p, g, 1.0, 1.0, r));
    println!("amplitude floor    {:.6}", threshold_amplitude(p, g, 2.05));
}
