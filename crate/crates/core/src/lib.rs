//! Periodic harmonic-oscillator particle swarm optimization (HOPSO) for
//! variational quantum eigensolvers.
//!
//! The crate bundles everything needed to run small VQE benchmarks end to
//! end:
//!
//! * [`simcore`]: dense statevector simulation, exact and shot-sampled
//!   Pauli expectations,
//! * [`hamiltonians`]: Pauli sums, a text format, the built-in H₂ operator
//!   and exact ground energies,
//! * [`ansatz`]: the hardware-efficient RY/RZ + CNOT-chain circuit,
//! * [`optim`]: periodic HOPSO plus PSO and differential-evolution
//!   baselines behind one [`optim::Objective`] interface,
//! * [`vqe`]: cost functions and seeded multi-run experiments,
//! * [`cli`]: config files, result records and the `hopso` command.
//!
//! ```
//! use hopso::ansatz::AnsatzSpec;
//! use hopso::hamiltonians::{ground_state_energy, h2_hamiltonian};
//!
//! let h = h2_hamiltonian();
//! let ansatz = AnsatzSpec::new(4, 3).unwrap();
//! assert_eq!(ansatz.num_parameters(), 32);
//! let e0 = ground_state_energy(&h).unwrap();
//! let e = ansatz.prepare_state(&[0.0; 32]).unwrap().expectation_sum(&h).unwrap();
//! assert!(e >= e0);
//! ```

pub mod ansatz;
pub mod cli;
mod eigen;
pub mod error;
pub mod hamiltonians;
pub mod optim;
pub mod simcore;
pub mod vqe;

pub use eigen::symmetric_eigenvalues;
pub use error::{Error, Result};
