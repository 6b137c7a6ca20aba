//! Pauli-sum Hamiltonians: data model, text format, the built-in H₂
//! operator and exact ground energies by dense diagonalization.
//!
//! # Text format
//!
//! One term per line, `<coefficient> <label>`, separated by whitespace.
//! `#` starts a comment that runs to the end of the line and blank lines
//! are ignored. Coefficients are decimal or scientific floats; the unicode
//! minus sign (U+2212) is accepted in place of `-`. Labels use the
//! alphabet `I X Y Z` and character `i` acts on qubit `i`. LF and CRLF
//! line endings are both accepted.
//!
//! ```text
//! # LiH fragment
//! -4.98851 IIIIIIIZ
//! -0.11677 IIIIIZII
//! ```

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::eigen;
use crate::error::{Error, Result};

/// Largest operator [`dense_matrix`] will build.
pub const DENSE_QUBIT_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Pauli {
    I,
    X,
    Y,
    Z,
}

impl Pauli {
    fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(Pauli::I),
            'X' => Some(Pauli::X),
            'Y' => Some(Pauli::Y),
            'Z' => Some(Pauli::Z),
            _ => None,
        }
    }

    fn as_char(self) -> char {
        match self {
            Pauli::I => 'I',
            Pauli::X => 'X',
            Pauli::Y => 'Y',
            Pauli::Z => 'Z',
        }
    }
}

/// A tensor product of single-qubit Paulis, one per qubit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PauliString {
    ops: Vec<Pauli>,
}

impl PauliString {
    pub fn new(ops: Vec<Pauli>) -> Result<Self> {
        if ops.is_empty() {
            return Err(Error::Config("Pauli string must be non-empty".into()));
        }
        Ok(Self { ops })
    }

    pub fn identity(n_qubits: usize) -> Result<Self> {
        Self::new(vec![Pauli::I; n_qubits])
    }

    pub fn n_qubits(&self) -> usize {
        self.ops.len()
    }

    pub fn ops(&self) -> &[Pauli] {
        &self.ops
    }

    pub fn is_identity(&self) -> bool {
        self.ops.iter().all(|&p| p == Pauli::I)
    }

    pub fn y_count(&self) -> usize {
        self.ops.iter().filter(|&&p| p == Pauli::Y).count()
    }

    /// Bit masks describing the action on basis states:
    /// `P|i⟩ = phase · (−1)^popcount(i & z_mask) |i ^ x_mask⟩`.
    pub(crate) fn masks(&self) -> (usize, usize, Complex64) {
        let mut x_mask = 0usize;
        let mut z_mask = 0usize;
        for (q, p) in self.ops.iter().enumerate() {
            match p {
                Pauli::I => {}
                Pauli::X => x_mask |= 1 << q,
                Pauli::Z => z_mask |= 1 << q,
                Pauli::Y => {
                    x_mask |= 1 << q;
                    z_mask |= 1 << q;
                }
            }
        }
        let phase = match self.y_count() % 4 {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
        (x_mask, z_mask, phase)
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let ops = s
            .chars()
            .map(|c| {
                Pauli::from_char(c).ok_or_else(|| Error::Config(format!("invalid Pauli character {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ops)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for p in &self.ops {
            write!(f, "{}", p.as_char())?;
        }
        Ok(())
    }
}

/// Real-weighted sum of Pauli strings on a common register.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct PauliSum {
    n_qubits: usize,
    terms: Vec<(f64, PauliString)>,
}

impl PauliSum {
    pub fn new(terms: Vec<(f64, PauliString)>) -> Result<Self> {
        let n_qubits = terms.first().map_or(0, |(_, p)| p.n_qubits());
        for (c, p) in &terms {
            if p.n_qubits() != n_qubits {
                return Err(Error::Dimension { expected: n_qubits, actual: p.n_qubits() });
            }
            if !c.is_finite() {
                return Err(Error::Config(format!("non-finite coefficient for {p}")));
            }
        }
        Ok(Self { n_qubits, terms })
    }

    pub fn n_qubits(&self) -> usize {
        self.n_qubits
    }

    pub fn terms(&self) -> &[(f64, PauliString)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `label`, summed over duplicates. Zero if absent.
    pub fn coefficient(&self, label: &str) -> f64 {
        self.terms.iter().filter(|(_, p)| p.to_string() == label).map(|(c, _)| c).sum()
    }

    /// Σ|c_k|, an upper bound on the spectral radius.
    pub fn one_norm(&self) -> f64 {
        self.terms.iter().map(|(c, _)| c.abs()).sum()
    }

    /// Merges duplicate labels by summing their coefficients. First
    /// occurrence order is kept.
    pub fn normalized(&self) -> PauliSum {
        let mut terms: Vec<(f64, PauliString)> = Vec::with_capacity(self.terms.len());
        for (c, p) in &self.terms {
            match terms.iter_mut().find(|(_, q)| q == p) {
                Some(slot) => slot.0 += c,
                None => terms.push((*c, p.clone())),
            }
        }
        PauliSum { n_qubits: self.n_qubits, terms }
    }

    pub fn scaled(&self, alpha: f64) -> PauliSum {
        PauliSum { n_qubits: self.n_qubits, terms: self.terms.iter().map(|(c, p)| (c * alpha, p.clone())).collect() }
    }

    /// Appends `beta · I^n`.
    pub fn with_offset(&self, beta: f64) -> Result<PauliSum> {
        let mut terms = self.terms.clone();
        terms.push((beta, PauliString::identity(self.n_qubits)?));
        PauliSum::new(terms)
    }

    /// True when every term has an even number of Y factors, so the
    /// matrix is real symmetric.
    pub fn is_real(&self) -> bool {
        self.terms.iter().all(|(_, p)| p.y_count() % 2 == 0)
    }
}

/// Parses the Hamiltonian text format described in the module docs.
pub fn parse_pauli_sum(text: &str) -> Result<PauliSum> {
    let mut terms = Vec::new();
    let mut width: Option<usize> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let parse_err = |message: String| Error::Parse { line: line_no, message };
        let mut fields = line.split_whitespace();
        let (coef_tok, label_tok) = match (fields.next(), fields.next(), fields.next()) {
            (Some(c), Some(l), None) => (c, l),
            _ => return Err(parse_err(format!("expected `<coefficient> <label>`, got {line:?}"))),
        };
        let coef_text = coef_tok.replace('\u{2212}', "-");
        let coef: f64 = coef_text.parse().map_err(|_| parse_err(format!("non-numeric coefficient {coef_tok:?}")))?;
        if !coef.is_finite() {
            return Err(parse_err(format!("non-finite coefficient {coef_tok:?}")));
        }
        let label: PauliString = label_tok.parse().map_err(|e| match e {
            Error::Config(m) => parse_err(m),
            other => other,
        })?;
        match width {
            None => width = Some(label.n_qubits()),
            Some(w) if w != label.n_qubits() => {
                return Err(parse_err(format!("label {label_tok} has {} qubits, expected {w}", label.n_qubits())))
            }
            Some(_) => {}
        }
        terms.push((coef, label));
    }
    PauliSum::new(terms)
}

impl FromStr for PauliSum {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_pauli_sum(s)
    }
}

/// Writes one `<coefficient> <label>` line per term. Coefficients use the
/// shortest representation that parses back to the same `f64`.
impl fmt::Display for PauliSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (c, p) in &self.terms {
            writeln!(f, "{c} {p}")?;
        }
        Ok(())
    }
}

/// The 4-qubit H₂ Hamiltonian with its published 5-decimal coefficients.
pub fn h2_hamiltonian() -> PauliSum {
    const TERMS: [(f64, &str); 14] = [
        (-0.80718, "IIII"),
        (0.17374, "ZIII"),
        (-0.23047, "ZZII"),
        (0.17374, "IIZI"),
        (-0.23047, "IZZZ"),
        (0.12149, "IZII"),
        (0.16940, "IZZI"),
        (-0.04509, "ZXXI"),
        (0.04509, "XIXZ"),
        (0.04509, "XIXI"),
        (-0.04509, "XZXZ"),
        (0.16658, "ZZZZ"),
        (0.16658, "ZZZI"),
        (0.12149, "IZIZ"),
    ];
    let terms = TERMS.iter().map(|&(c, l)| (c, l.parse().expect("static label"))).collect();
    PauliSum::new(terms).expect("static Hamiltonian")
}

/// The highest-weight LiH terms as printed alongside the full operator.
/// Not a usable Hamiltonian on its own; kept as a parser fixture.
pub const LIH_FRAGMENT: &str = "\
# LiH (8 qubits, tapered), highest-weight terms only
\u{2212}4.98851 IIIIIIIZ
\u{2212}0.11677 IIIIIZII
1.00871 ZZIIZZZZ
0.08981 ZZIIZZII
\u{2212}0.00761 IIIIIIYY
0.00022 ZZIIZXZX
\u{2212}0.00761 IIIIIIXX
";

/// Row-major dense complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// max |M − M†|
    pub fn hermiticity_error(&self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..self.dim {
            for j in i..self.dim {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }
}

/// Σ c_k ⊗ σ(label_k[i]) with qubit 0 as the least significant index bit.
pub fn dense_matrix(h: &PauliSum) -> Result<DenseMatrix> {
    let n = h.n_qubits();
    if n > DENSE_QUBIT_LIMIT {
        return Err(Error::TooLarge { n_qubits: n, limit: DENSE_QUBIT_LIMIT });
    }
    if n == 0 {
        return Err(Error::Config("cannot build a matrix for an empty Pauli sum".into()));
    }
    let dim = 1usize << n;
    let mut data = vec![Complex64::new(0.0, 0.0); dim * dim];
    for (c, p) in h.terms() {
        let (x_mask, z_mask, phase) = p.masks();
        for col in 0..dim {
            let sign = if (col & z_mask).count_ones() % 2 == 0 { 1.0 } else { -1.0 };
            data[(col ^ x_mask) * dim + col] += phase * (c * sign);
        }
    }
    Ok(DenseMatrix { dim, data })
}

/// All eigenvalues of `h`, ascending.
pub fn spectrum(h: &PauliSum) -> Result<Vec<f64>> {
    let m = dense_matrix(h)?;
    let dim = m.dim();
    if h.is_real() {
        let real: Vec<f64> = m.data.iter().map(|z| z.re).collect();
        eigen::symmetric_eigenvalues(real, dim)
    } else {
        // [[Re, −Im], [Im, Re]] has every eigenvalue of M twice.
        let n2 = 2 * dim;
        let mut embed = vec![0.0; n2 * n2];
        for i in 0..dim {
            for j in 0..dim {
                let z = m.get(i, j);
                embed[i * n2 + j] = z.re;
                embed[(i + dim) * n2 + j + dim] = z.re;
                embed[i * n2 + j + dim] = -z.im;
                embed[(i + dim) * n2 + j] = z.im;
            }
        }
        let doubled = eigen::symmetric_eigenvalues(embed, n2)?;
        Ok(doubled.into_iter().step_by(2).collect())
    }
}

/// Smallest eigenvalue of `h`.
pub fn ground_state_energy(h: &PauliSum) -> Result<f64> {
    spectrum(h).map(|s| s[0])
}
