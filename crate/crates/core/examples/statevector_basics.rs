//! Builds a Bell pair by hand and measures a few Pauli observables, both
//! exactly and with a finite shot budget.

use hopso::hamiltonians::{PauliString, PauliSum};
use hopso::simcore::{GateOp, Statevector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::FRAC_PI_2;

fn main() -> hopso::Result<()> {
    // RY(π/2) on qubit 0 followed by CNOT gives (|00⟩ + |11⟩)/√2 up to a sign.
    let mut psi = Statevector::zero(2)?;
    psi.apply(&GateOp::Ry { target: 0, angle: FRAC_PI_2 })?;
    psi.apply(&GateOp::Cnot { control: 0, target: 1 })?;

    for (i, a) in psi.amplitudes().iter().enumerate() {
        println!("|{i:02b}>  {:+.6} {:+.6}i", a.re, a.im);
    }
    println!("norm = {:.12}", psi.norm());

    for label in ["ZZ", "XX", "YY", "ZI", "IX"] {
        let p: PauliString = label.parse()?;
        println!("<{label}> = {:+.6}", psi.expectation_pauli(&p)?);
    }

    let h: PauliSum = "0.5 ZZ\n0.5 XX\n-0.25 IZ\n".parse()?;
    let exact = psi.expectation_sum(&h)?;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sampled: Vec<f64> = (0..5).map(|_| psi.sampled_expectation(&h, 1000, &mut rng)).collect::<Result<_, _>>()?;
    println!("exact <H> = {exact:.6}");
    println!("1000-shot estimates: {sampled:.4?}");
    Ok(())
}
