//! Loads a LiH qubit Hamiltonian from a text file and runs a short HOPSO
//! search on the 80-parameter ansatz.
//!
//! Usage: `cargo run --release --example lih_from_file [-- path/to/lih.txt]`.
//! Without a path the bundled seven-term fragment is used, which is enough
//! to exercise parsing and the 8-qubit pipeline but is not the full operator.

use hopso::ansatz::AnsatzSpec;
use hopso::hamiltonians::{ground_state_energy, parse_pauli_sum, LIH_FRAGMENT};
use hopso::optim::{HopsoConfig, Optimizer};
use hopso::vqe::{make_cost, CostSpec, Noise};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => LIH_FRAGMENT.to_string(),
    };
    let h = parse_pauli_sum(&text)?;
    println!("{} terms on {} qubits", h.len(), h.n_qubits());
    let e0 = ground_state_energy(&h)?;
    println!("ground energy {e0:.6} Ha");

    let ansatz = AnsatzSpec::new(h.n_qubits(), 4)?;
    let budget = 20 * 200;
    let cost = make_cost(CostSpec::new(h, ansatz, Noise::Exact, budget)?, 0);
    let opt = Optimizer::Hopso(HopsoConfig {
        num_particles: 20,
        max_iters: 200,
        lambda: 0.008,
        seed: 5,
        ..HopsoConfig::default()
    });
    let res = opt.run(&cost, ansatz.num_parameters())?;
    println!(
        "best {:.6} after {} evaluations ({} dead particles), gap {:.3e}",
        res.best_value,
        res.evaluations_used,
        res.dead_count,
        res.best_value - e0
    );
    Ok(())
}
