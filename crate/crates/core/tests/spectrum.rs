mod common;

use common::*;
use hopso::hamiltonians::{ground_state_energy, h2_hamiltonian, parse_pauli_sum, spectrum, PauliSum, LIH_FRAGMENT};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const H2_GROUND: f64 = -2.0380456287808197;

fn full_two_qubit_sum(rng: &mut ChaCha8Rng) -> PauliSum {
    let mut text = String::new();
    for a in ['I', 'X', 'Y', 'Z'] {
        for b in ['I', 'X', 'Y', 'Z'] {
            text += &format!("{} {a}{b}\n", rng.random_range(-1.0..1.0));
        }
    }
    text.parse().unwrap()
}

#[test]
fn h2_ground_energy_is_frozen() {
    let e0 = ground_state_energy(&h2_hamiltonian()).unwrap();
    assert!((e0 - H2_GROUND).abs() < 1e-9, "{e0}");
}

#[test]
fn spectra_agree_with_nalgebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut cases: Vec<PauliSum> = vec![h2_hamiltonian(), parse_pauli_sum(LIH_FRAGMENT).unwrap()];
    for _ in 0..50 {
        cases.push(full_two_qubit_sum(&mut rng));
    }
    for _ in 0..20 {
        let n = rng.random_range(1..=4);
        let mut text = String::new();
        for _ in 0..6 {
            text += &format!("{} {}\n", rng.random_range(-1.0..1.0), random_label(n, &mut rng));
        }
        cases.push(text.parse().unwrap());
    }
    for h in &cases {
        let ours = spectrum(h).unwrap();
        let theirs = hermitian_eigenvalues(pauli_sum_matrix(h));
        assert_eq!(ours.len(), theirs.len());
        for (a, b) in ours.iter().zip(&theirs) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b} for\n{h}");
        }
    }
}

#[test]
fn malformed_files_report_line_numbers() {
    let err = parse_pauli_sum("# header\n0.5 ZZ\n0.2 ZQ\n").unwrap_err();
    assert!(matches!(err, hopso::Error::Parse { line: 3, .. }), "{err:?}");
    let err = parse_pauli_sum("0.5 ZZ\n0.1 Z\n").unwrap_err();
    assert!(matches!(err, hopso::Error::Parse { line: 2, .. }), "{err:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scaling_and_offset_move_the_ground_energy(seed in any::<u64>(), alpha in 0.1f64..5.0, beta in -3.0f64..3.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = full_two_qubit_sum(&mut rng);
        let e0 = ground_state_energy(&h).unwrap();
        let e1 = ground_state_energy(&h.scaled(alpha).with_offset(beta).unwrap()).unwrap();
        prop_assert!((e1 - (alpha * e0 + beta)).abs() < 1e-9);
    }

    #[test]
    fn display_round_trips(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h = full_two_qubit_sum(&mut rng);
        let back: PauliSum = h.to_string().parse().unwrap();
        prop_assert_eq!(back, h);
    }
}
