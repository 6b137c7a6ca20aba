//! One-dimensional cost whose optimum sits just above zero, next to the
//! edge of the sampling range. Runs HOPSO with and without the periodic
//! corrections.

use hopso::optim::{hopso_run, HopsoConfig};

fn main() -> hopso::Result<()> {
    let target = 0.05;
    let cost = move |x: &[f64]| 1.0 - (x[0] - target).cos();
    for periodic in [true, false] {
        let mut hits = 0;
        let mut dead = 0;
        for seed in 0..20 {
            let cfg = HopsoConfig { periodic, seed, ..HopsoConfig::default() };
            let res = hopso_run(&cost, 1, &cfg)?;
            if res.best_value < 1e-6 {
                hits += 1;
            }
            dead += res.dead_count;
        }
        println!("periodic={periodic:<5}  runs below 1e-6: {hits}/20  dead particles: {dead}");
    }
    Ok(())
}
