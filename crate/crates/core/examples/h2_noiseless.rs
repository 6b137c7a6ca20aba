//! Noiseless H2 VQE with HOPSO, PSO and DE at a 5000-evaluation budget.
//!
//! Pass a run count as the first argument (default 5).

use hopso::ansatz::AnsatzSpec;
use hopso::hamiltonians::{ground_state_energy, h2_hamiltonian};
use hopso::optim::{DeConfig, HopsoConfig, Optimizer, PsoConfig};
use hopso::vqe::{run_experiment, CostSpec, ExperimentConfig, Noise};

fn main() -> hopso::Result<()> {
    let runs: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let h = h2_hamiltonian();
    let e0 = ground_state_energy(&h)?;
    let cost = CostSpec::new(h, AnsatzSpec::new(4, 3)?, Noise::Exact, 5000)?;

    let optimizers = [
        Optimizer::Hopso(HopsoConfig { num_particles: 10, max_iters: 500, ..HopsoConfig::default() }),
        Optimizer::Pso(PsoConfig { num_particles: 10, max_iters: 500, ..PsoConfig::default() }),
        Optimizer::De(DeConfig { population: 32, max_generations: 157, ..DeConfig::default() }),
    ];
    println!("ground energy {e0:.6} Ha, {runs} runs each");
    for opt in optimizers {
        let exp = ExperimentConfig::new(cost.clone(), opt.clone(), runs, 1);
        let out = run_experiment(&exp)?;
        let s = &out.summary;
        println!(
            "{:<6} median {:.6}  iqr {:.2e}  best {:.6}  within 1.6e-3: {:.0}%",
            opt.name(),
            s.median_exact,
            s.iqr_exact,
            s.best_min,
            100.0 * s.within_chemical_accuracy.unwrap_or(0.0),
        );
    }
    Ok(())
}
