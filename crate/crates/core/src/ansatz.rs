//! Hardware-efficient RY/RZ ansatz with linear CNOT entanglement.
//!
//! Circuit for `reps = r`: `r` blocks of [rotation layer; CNOT chain]
//! followed by one final rotation layer. A rotation layer applies RY then
//! RZ on every qubit; the chain is CNOT(q → q+1) for q = 0..n−2.
//!
//! Parameters bind layer-major, then qubit, then RY before RZ:
//! `params[2·(layer·n + q)]` is RY on qubit `q` in `layer`, the following
//! entry is its RZ.

use crate::error::{Error, Result};
use crate::simcore::{GateOp, Statevector, MAX_QUBITS};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AnsatzSpec {
    n_qubits: usize,
    reps: usize,
}

impl AnsatzSpec {
    pub fn new(n_qubits: usize, reps: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::Config(format!("ansatz qubit count must be in 1..={MAX_QUBITS}, got {n_qubits}")));
        }
        Ok(Self { n_qubits, reps })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn reps(&self) -> usize {
        self.reps
    }

    pub fn num_parameters(&self) -> usize {
        (self.reps + 1) * 2 * self.n_qubits
    }

    /// Gate list for `params`, in application order.
    pub fn circuit(&self, params: &[f64]) -> Result<Vec<GateOp>> {
        let expected = self.num_parameters();
        if params.len() != expected {
            return Err(Error::Dimension { expected, actual: params.len() });
        }
        let n = self.n_qubits;
        let mut gates = Vec::with_capacity(expected + self.reps * n.saturating_sub(1));
        for layer in 0..=self.reps {
            let block = &params[layer * 2 * n..(layer + 1) * 2 * n];
            for (q, pair) in block.chunks_exact(2).enumerate() {
                gates.push(GateOp::Ry { target: q, angle: pair[0] });
                gates.push(GateOp::Rz { target: q, angle: pair[1] });
            }
            if layer < self.reps {
                gates.extend((0..n - 1).map(|q| GateOp::Cnot { control: q, target: q + 1 }));
            }
        }
        Ok(gates)
    }

    /// |ψ(params)⟩ prepared from |0…0⟩.
    pub fn prepare_state(&self, params: &[f64]) -> Result<Statevector> {
        let gates = self.circuit(params)?;
        let mut state = Statevector::zero(self.n_qubits)?;
        for g in &gates {
            state.apply(g)?;
        }
        Ok(state)
    }
}
