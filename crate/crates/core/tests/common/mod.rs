//! Dense-matrix reference implementations built with nalgebra, independent
//! of the library's bitmask kernels.
#![allow(dead_code)]

use hopso::hamiltonians::{Pauli, PauliSum};
use hopso::simcore::GateOp;
use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;

pub type CMat = DMatrix<Complex64>;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

pub fn single(p: Pauli) -> CMat {
    let z = c(0.0, 0.0);
    let o = c(1.0, 0.0);
    let i = c(0.0, 1.0);
    match p {
        Pauli::I => CMat::from_row_slice(2, 2, &[o, z, z, o]),
        Pauli::X => CMat::from_row_slice(2, 2, &[z, o, o, z]),
        Pauli::Y => CMat::from_row_slice(2, 2, &[z, -i, i, z]),
        Pauli::Z => CMat::from_row_slice(2, 2, &[o, z, z, -o]),
    }
}

/// Embeds per-qubit operators; qubit 0 is the least significant index bit,
/// so it is the rightmost Kronecker factor.
pub fn embed(ops: &[CMat]) -> CMat {
    let mut m = CMat::identity(1, 1);
    for op in ops {
        m = op.kronecker(&m);
    }
    m
}

pub fn pauli_sum_matrix(h: &PauliSum) -> CMat {
    let dim = 1usize << h.n_qubits();
    let mut m = CMat::zeros(dim, dim);
    for (coef, p) in h.terms() {
        let ops: Vec<CMat> = p.ops().iter().map(|&q| single(q)).collect();
        m += embed(&ops) * c(*coef, 0.0);
    }
    m
}

pub fn gate_matrix(gate: &GateOp, n: usize) -> CMat {
    let id = CMat::identity(2, 2);
    match *gate {
        GateOp::Ry { target, angle } => {
            let (s, co) = (angle / 2.0).sin_cos();
            let g = CMat::from_row_slice(2, 2, &[c(co, 0.0), c(-s, 0.0), c(s, 0.0), c(co, 0.0)]);
            let ops: Vec<CMat> = (0..n).map(|q| if q == target { g.clone() } else { id.clone() }).collect();
            embed(&ops)
        }
        GateOp::Rz { target, angle } => {
            let g = CMat::from_row_slice(
                2,
                2,
                &[
                    Complex64::from_polar(1.0, -angle / 2.0),
                    c(0.0, 0.0),
                    c(0.0, 0.0),
                    Complex64::from_polar(1.0, angle / 2.0),
                ],
            );
            let ops: Vec<CMat> = (0..n).map(|q| if q == target { g.clone() } else { id.clone() }).collect();
            embed(&ops)
        }
        GateOp::Cnot { control, target } => {
            // |0><0|_c ⊗ I + |1><1|_c ⊗ X_t
            let p0 = CMat::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
            let p1 = CMat::from_row_slice(2, 2, &[c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]);
            let x = single(Pauli::X);
            let a: Vec<CMat> = (0..n).map(|q| if q == control { p0.clone() } else { id.clone() }).collect();
            let b: Vec<CMat> = (0..n)
                .map(|q| {
                    if q == control {
                        p1.clone()
                    } else if q == target {
                        x.clone()
                    } else {
                        id.clone()
                    }
                })
                .collect();
            embed(&a) + embed(&b)
        }
    }
}

pub fn zero_state(n: usize) -> DVector<Complex64> {
    let mut v = DVector::from_element(1 << n, c(0.0, 0.0));
    v[0] = c(1.0, 0.0);
    v
}

pub fn expectation(m: &CMat, psi: &DVector<Complex64>) -> f64 {
    (psi.adjoint() * m * psi)[(0, 0)].re
}

pub fn random_gate<R: Rng>(n: usize, rng: &mut R) -> GateOp {
    let kind = if n < 2 { rng.random_range(0..2) } else { rng.random_range(0..3) };
    let angle = rng.random_range(-10.0..10.0);
    match kind {
        0 => GateOp::Ry { target: rng.random_range(0..n), angle },
        1 => GateOp::Rz { target: rng.random_range(0..n), angle },
        _ => {
            let control = rng.random_range(0..n);
            let mut target = rng.random_range(0..n - 1);
            if target >= control {
                target += 1;
            }
            GateOp::Cnot { control, target }
        }
    }
}

pub fn random_label<R: Rng>(n: usize, rng: &mut R) -> String {
    (0..n).map(|_| ['I', 'X', 'Y', 'Z'][rng.random_range(0..4)]).collect()
}

/// Eigenvalues of a Hermitian matrix, ascending.
pub fn hermitian_eigenvalues(m: CMat) -> Vec<f64> {
    let mut ev: Vec<f64> = m.symmetric_eigen().eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| a.total_cmp(b));
    ev
}

pub mod geometry;
