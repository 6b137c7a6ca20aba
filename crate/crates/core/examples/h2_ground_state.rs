//! Exact diagonalization of the built-in H2 operator next to the energy of
//! the hardware-efficient ansatz at a few parameter settings.

use hopso::ansatz::AnsatzSpec;
use hopso::hamiltonians::{ground_state_energy, h2_hamiltonian, spectrum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::TAU;

fn main() -> hopso::Result<()> {
    let h = h2_hamiltonian();
    println!("{} terms on {} qubits, one-norm {:.4}", h.len(), h.n_qubits(), h.one_norm());

    let levels = spectrum(&h)?;
    println!("lowest levels: {:.9?}", &levels[..4]);
    let e0 = ground_state_energy(&h)?;
    println!("ground energy {e0:.9} Ha");

    let ansatz = AnsatzSpec::new(4, 3)?;
    println!("ansatz parameters: {}", ansatz.num_parameters());

    let zero = vec![0.0; ansatz.num_parameters()];
    let e = ansatz.prepare_state(&zero)?.expectation_sum(&h)?;
    println!("theta = 0      E = {e:.9}  (gap {:.3e})", e - e0);

    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for k in 0..3 {
        let theta: Vec<f64> = (0..ansatz.num_parameters()).map(|_| rng.random_range(0.0..TAU)).collect();
        let e = ansatz.prepare_state(&theta)?.expectation_sum(&h)?;
        println!("random #{k}      E = {e:.9}  (gap {:.3e})", e - e0);
    }
    Ok(())
}
