//! H2 VQE with 1000-shot energy estimates. Reports the measured minimum,
//! which can dip below the ground energy, and the exact energy at the
//! returned parameters.

use hopso::ansatz::AnsatzSpec;
use hopso::hamiltonians::{ground_state_energy, h2_hamiltonian};
use hopso::optim::{DeConfig, HopsoConfig, Optimizer, PsoConfig};
use hopso::vqe::{run_experiment, CostSpec, ExperimentConfig, Noise};

fn main() -> hopso::Result<()> {
    let runs: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let h = h2_hamiltonian();
    let e0 = ground_state_energy(&h)?;
    let cost = CostSpec::new(h, AnsatzSpec::new(4, 3)?, Noise::Shots(1000), 5000)?;

    println!("ground energy {e0:.6} Ha");
    println!("{:<6} {:>12} {:>12} {:>10}", "", "measured", "exact", "below E0");
    for opt in [
        Optimizer::Hopso(HopsoConfig::default()),
        Optimizer::Pso(PsoConfig::default()),
        Optimizer::De(DeConfig::default()),
    ] {
        let out = run_experiment(&ExperimentConfig::new(cost.clone(), opt.clone(), runs, 11))?;
        let below = out.records.iter().filter(|r| r.min_energy < e0).count();
        println!(
            "{:<6} {:>12.6} {:>12.6} {:>7}/{runs}",
            opt.name(),
            out.summary.median_min,
            out.summary.median_exact,
            below
        );
    }
    Ok(())
}
