//! Dense statevector simulation and Pauli expectation values.
//!
//! Qubit `q` is bit `q` of the amplitude index (qubit 0 is the least
//! significant bit). A Pauli label's character at position `i` acts on
//! qubit `i`.

use num_complex::Complex64;
use rand::Rng;
use rand_distr::{Binomial, Distribution};

use crate::error::{Error, Result};
use crate::hamiltonians::{PauliString, PauliSum};

/// Largest register the simulator will allocate.
pub const MAX_QUBITS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GateOp {
    Ry { target: usize, angle: f64 },
    Rz { target: usize, angle: f64 },
    Cnot { control: usize, target: usize },
}

impl GateOp {
    fn validate(&self, n_qubits: usize) -> Result<()> {
        let check = |q: usize| {
            if q < n_qubits {
                Ok(())
            } else {
                Err(Error::InvalidGate(format!("qubit index {q} out of range for {n_qubits} qubits")))
            }
        };
        match *self {
            GateOp::Ry { target, .. } | GateOp::Rz { target, .. } => check(target),
            GateOp::Cnot { control, target } => {
                check(control)?;
                check(target)?;
                if control == target {
                    return Err(Error::InvalidGate(format!("CNOT control and target are both qubit {target}")));
                }
                Ok(())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Statevector {
    n_qubits: usize,
    amplitudes: Vec<Complex64>,
}

impl Statevector {
    /// The computational basis state |0…0⟩.
    pub fn zero(n_qubits: usize) -> Result<Self> {
        Self::basis(n_qubits, 0)
    }

    pub fn basis(n_qubits: usize, index: usize) -> Result<Self> {
        if n_qubits == 0 || n_qubits > MAX_QUBITS {
            return Err(Error::Config(format!("qubit count must be in 1..={MAX_QUBITS}, got {n_qubits}")));
        }
        let dim = 1usize << n_qubits;
        if index >= dim {
            return Err(Error::Dimension { expected: dim, actual: index });
        }
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); dim];
        amplitudes[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n_qubits, amplitudes })
    }

    /// Wraps raw amplitudes. The caller is responsible for normalization.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let dim = amplitudes.len();
        if dim < 2 || !dim.is_power_of_two() || dim > 1 << MAX_QUBITS {
            return Err(Error::Config(format!("amplitude vector length {dim} is not 2^n for 1 <= n <= {MAX_QUBITS}")));
        }
        Ok(Self { n_qubits: dim.trailing_zeros() as usize, amplitudes })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    pub fn norm(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn inner(&self, other: &Statevector) -> Complex64 {
        self.amplitudes.iter().zip(&other.amplitudes).map(|(a, b)| a.conj() * b).sum()
    }

    /// Applies `gate` in place.
    pub fn apply(&mut self, gate: &GateOp) -> Result<()> {
        gate.validate(self.n_qubits)?;
        match *gate {
            GateOp::Ry { target, angle } => {
                let (s, c) = (angle / 2.0).sin_cos();
                let bit = 1usize << target;
                for i in 0..self.amplitudes.len() {
                    if i & bit == 0 {
                        let a0 = self.amplitudes[i];
                        let a1 = self.amplitudes[i | bit];
                        self.amplitudes[i] = a0 * c - a1 * s;
                        self.amplitudes[i | bit] = a0 * s + a1 * c;
                    }
                }
            }
            GateOp::Rz { target, angle } => {
                let lower = Complex64::from_polar(1.0, -angle / 2.0);
                let upper = Complex64::from_polar(1.0, angle / 2.0);
                let bit = 1usize << target;
                for (i, a) in self.amplitudes.iter_mut().enumerate() {
                    *a *= if i & bit == 0 { lower } else { upper };
                }
            }
            GateOp::Cnot { control, target } => {
                let cbit = 1usize << control;
                let tbit = 1usize << target;
                for i in 0..self.amplitudes.len() {
                    if i & cbit != 0 && i & tbit == 0 {
                        self.amplitudes.swap(i, i | tbit);
                    }
                }
            }
        }
        Ok(())
    }

    /// Functional form of [`Statevector::apply`].
    pub fn apply_gate(mut self, gate: &GateOp) -> Result<Self> {
        self.apply(gate)?;
        Ok(self)
    }

    /// Returns `P|ψ⟩` as a new state.
    pub fn apply_pauli(&self, pauli: &PauliString) -> Result<Statevector> {
        self.check_len(pauli.n_qubits())?;
        let (x_mask, z_mask, y_phase) = pauli.masks();
        let mut out = vec![Complex64::new(0.0, 0.0); self.amplitudes.len()];
        for (i, &a) in self.amplitudes.iter().enumerate() {
            out[i ^ x_mask] = a * y_phase * parity_sign(i & z_mask);
        }
        Ok(Statevector { n_qubits: self.n_qubits, amplitudes: out })
    }

    /// ⟨ψ|P|ψ⟩ for a single Pauli string.
    pub fn expectation_pauli(&self, pauli: &PauliString) -> Result<f64> {
        self.check_len(pauli.n_qubits())?;
        Ok(self.expectation_unchecked(pauli))
    }

    fn expectation_unchecked(&self, pauli: &PauliString) -> f64 {
        let (x_mask, z_mask, y_phase) = pauli.masks();
        let amps = &self.amplitudes;
        let mut acc = Complex64::new(0.0, 0.0);
        for (i, &a) in amps.iter().enumerate() {
            acc += amps[i ^ x_mask].conj() * a * parity_sign(i & z_mask);
        }
        let value = acc * y_phase;
        debug_assert!(value.im.abs() < 1e-12, "non-real expectation {value}");
        value.re
    }

    /// Σ c_k ⟨ψ|P_k|ψ⟩ in the infinite-shot limit.
    pub fn expectation_sum(&self, h: &PauliSum) -> Result<f64> {
        if h.is_empty() {
            return Ok(0.0);
        }
        self.check_len(h.n_qubits())?;
        Ok(h.terms().iter().map(|(c, p)| if p.is_identity() { *c } else { c * self.expectation_unchecked(p) }).sum())
    }

    /// Finite-shot estimate of ⟨H⟩.
    ///
    /// Each non-identity term is estimated independently from a binomial
    /// draw over the full shot count; identity terms contribute exactly.
    /// Terms are not grouped into commuting measurement bases.
    pub fn sampled_expectation<R: Rng + ?Sized>(&self, h: &PauliSum, shots: u64, rng: &mut R) -> Result<f64> {
        if shots == 0 {
            return Err(Error::Config("shots must be at least 1".into()));
        }
        if h.is_empty() {
            return Ok(0.0);
        }
        self.check_len(h.n_qubits())?;
        let mut total = 0.0;
        for (c, p) in h.terms() {
            if p.is_identity() {
                total += c;
                continue;
            }
            let exact = self.expectation_unchecked(p);
            let prob = ((1.0 + exact) / 2.0).clamp(0.0, 1.0);
            let binom =
                Binomial::new(shots, prob).map_err(|e| Error::Numerical(format!("binomial({shots}, {prob}): {e}")))?;
            let ups = binom.sample(rng);
            total += c * (2.0 * ups as f64 / shots as f64 - 1.0);
        }
        Ok(total)
    }

    fn check_len(&self, n: usize) -> Result<()> {
        if n != self.n_qubits {
            return Err(Error::Dimension { expected: self.n_qubits, actual: n });
        }
        Ok(())
    }
}

#[inline]
fn parity_sign(bits: usize) -> f64 {
    if bits.count_ones() & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}
