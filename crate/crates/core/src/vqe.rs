//! VQE cost functions and multi-run experiments.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ansatz::AnsatzSpec;
use crate::error::{Error, Result};
use crate::hamiltonians::{ground_state_energy, PauliSum, DENSE_QUBIT_LIMIT};
use crate::optim::{Objective, Optimizer, StopReason};

/// 1 kcal/mol in Hartree.
pub const CHEMICAL_ACCURACY: f64 = 1.6e-3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Noise {
    Exact,
    Shots(u64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CostSpec {
    hamiltonian: PauliSum,
    ansatz: AnsatzSpec,
    noise: Noise,
    eval_budget: usize,
}

impl CostSpec {
    pub fn new(hamiltonian: PauliSum, ansatz: AnsatzSpec, noise: Noise, eval_budget: usize) -> Result<Self> {
        if ansatz.n_qubits() != hamiltonian.n_qubits() {
            return Err(Error::Dimension { expected: ansatz.n_qubits(), actual: hamiltonian.n_qubits() });
        }
        if eval_budget == 0 {
            return Err(Error::Config("evaluation budget must be positive".into()));
        }
        if noise == Noise::Shots(0) {
            return Err(Error::Config("shots must be at least 1".into()));
        }
        Ok(Self { hamiltonian, ansatz, noise, eval_budget })
    }

    pub fn hamiltonian(&self) -> &PauliSum {
        &self.hamiltonian
    }

    pub fn ansatz(&self) -> &AnsatzSpec {
        &self.ansatz
    }

    pub fn noise(&self) -> Noise {
        self.noise
    }

    pub fn eval_budget(&self) -> usize {
        self.eval_budget
    }

    pub fn dimension(&self) -> usize {
        self.ansatz.num_parameters()
    }
}

/// Energy evaluator bound to one run.
///
/// In shots mode, evaluation `i` draws its noise from ChaCha8 stream `i`
/// of `noise_seed`, so the value depends only on the parameters and the
/// evaluation index.
#[derive(Debug)]
pub struct VqeCost {
    spec: CostSpec,
    noise_seed: u64,
    calls: AtomicUsize,
}

pub fn make_cost(spec: CostSpec, noise_seed: u64) -> VqeCost {
    VqeCost { spec, noise_seed, calls: AtomicUsize::new(0) }
}

impl VqeCost {
    pub fn spec(&self) -> &CostSpec {
        &self.spec
    }

    /// Number of evaluations served so far.
    pub fn evaluations(&self) -> usize {
        self.calls.load(Ordering::SeqCst)
    }

    /// Noise-free energy at `params`. Not counted against the budget.
    pub fn exact_energy(&self, params: &[f64]) -> Result<f64> {
        self.spec.ansatz.prepare_state(params)?.expectation_sum(&self.spec.hamiltonian)
    }

    /// Counted evaluation using the next free index.
    pub fn call(&self, params: &[f64]) -> Result<f64> {
        let budget = self.spec.eval_budget;
        let index = self
            .calls
            .fetch_update(Ordering::SeqCst, Ordering::SeqCst, |n| (n < budget).then_some(n + 1))
            .map_err(|_| Error::BudgetExhausted { budget })?;
        self.energy_at(params, index as u64)
    }

    fn energy_at(&self, params: &[f64], index: u64) -> Result<f64> {
        let state = self.spec.ansatz.prepare_state(params)?;
        match self.spec.noise {
            Noise::Exact => state.expectation_sum(&self.spec.hamiltonian),
            Noise::Shots(shots) => {
                let mut rng = ChaCha8Rng::seed_from_u64(self.noise_seed);
                rng.set_stream(index);
                state.sampled_expectation(&self.spec.hamiltonian, shots, &mut rng)
            }
        }
    }
}

impl Objective for VqeCost {
    fn evaluate(&self, x: &[f64], eval_index: u64) -> Result<f64> {
        let budget = self.spec.eval_budget;
        if eval_index >= budget as u64 {
            return Err(Error::BudgetExhausted { budget });
        }
        self.calls.fetch_add(1, Ordering::SeqCst);
        self.energy_at(x, eval_index)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub cost: CostSpec,
    pub optimizer: Optimizer,
    pub runs: usize,
    pub base_seed: u64,
    /// Maximum number of runs executing at once; `None` uses every core.
    pub parallel: Option<usize>,
    pub chemical_accuracy: f64,
}

impl ExperimentConfig {
    pub fn new(cost: CostSpec, optimizer: Optimizer, runs: usize, base_seed: u64) -> Self {
        Self { cost, optimizer, runs, base_seed, parallel: None, chemical_accuracy: CHEMICAL_ACCURACY }
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::Config("runs must be at least 1".into()));
        }
        if self.parallel == Some(0) {
            return Err(Error::Config("parallel must be at least 1".into()));
        }
        if !(self.chemical_accuracy > 0.0) {
            return Err(Error::Config("chemical accuracy must be positive".into()));
        }
        self.optimizer.validate()
    }
}

/// Outcome of one seeded run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub run: usize,
    pub seed: u64,
    /// The optimizer's best cost value; a measured energy in shots mode.
    pub min_energy: f64,
    /// Noise-free energy at the returned parameters.
    pub exact_energy: f64,
    pub evaluations: usize,
    pub dead_particles: usize,
    pub stop: StopReason,
    pub best_params: Vec<f64>,
    pub trace: Vec<f64>,
    pub wall_time_s: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub runs: usize,
    /// Exact ground energy, when the operator is small enough to diagonalize.
    pub ground_energy: Option<f64>,
    pub chemical_accuracy: f64,
    pub best_min: f64,
    pub median_min: f64,
    pub q1_min: f64,
    pub q3_min: f64,
    pub iqr_min: f64,
    pub median_exact: f64,
    pub iqr_exact: f64,
    /// Fraction of runs whose exact energy is within chemical accuracy of
    /// the ground energy.
    pub within_chemical_accuracy: Option<f64>,
}

impl Summary {
    pub fn from_records(records: &[RunRecord], ground_energy: Option<f64>, chemical_accuracy: f64) -> Summary {
        let mins: Vec<f64> = records.iter().map(|r| r.min_energy).collect();
        let exacts: Vec<f64> = records.iter().map(|r| r.exact_energy).collect();
        let (q1, med, q3) = quartiles(&mins);
        let (eq1, emed, eq3) = quartiles(&exacts);
        let within = ground_energy.map(|e0| {
            let hits = exacts.iter().filter(|&&e| e - e0 <= chemical_accuracy).count();
            hits as f64 / records.len().max(1) as f64
        });
        Summary {
            runs: records.len(),
            ground_energy,
            chemical_accuracy,
            best_min: mins.iter().copied().fold(f64::INFINITY, f64::min),
            median_min: med,
            q1_min: q1,
            q3_min: q3,
            iqr_min: q3 - q1,
            median_exact: emed,
            iqr_exact: eq3 - eq1,
            within_chemical_accuracy: within,
        }
    }
}

/// Quantile with linear interpolation between order statistics.
pub fn quantile(values: &[f64], q: f64) -> f64 {
    if values.is_empty() {
        return f64::NAN;
    }
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let pos = q.clamp(0.0, 1.0) * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    sorted[lo] + (sorted[hi] - sorted[lo]) * (pos - lo as f64)
}

pub fn median(values: &[f64]) -> f64 {
    quantile(values, 0.5)
}

fn quartiles(values: &[f64]) -> (f64, f64, f64) {
    (quantile(values, 0.25), quantile(values, 0.5), quantile(values, 0.75))
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentOutcome {
    pub records: Vec<RunRecord>,
    pub summary: Summary,
}

/// SplitMix64 finalizer; derives a run's noise seed from its run seed so
/// noise streams never coincide with optimizer streams.
pub fn noise_seed_for(run_seed: u64) -> u64 {
    let mut z = run_seed.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Executes one run with seed `seed`.
pub fn run_single(config: &ExperimentConfig, run: usize, seed: u64) -> Result<RunRecord> {
    let started = Instant::now();
    let cost = make_cost(config.cost.clone(), noise_seed_for(seed));
    let optimizer = config.optimizer.with_seed(seed).with_max_evals(Some(config.cost.eval_budget));
    let result = optimizer.run(&cost, config.cost.dimension())?;
    let exact_energy = cost.exact_energy(&result.best_position)?;
    Ok(RunRecord {
        run,
        seed,
        min_energy: result.best_value,
        exact_energy,
        evaluations: cost.evaluations(),
        dead_particles: result.dead_count,
        stop: result.stop,
        best_params: result.best_position,
        trace: result.trace,
        wall_time_s: started.elapsed().as_secs_f64(),
    })
}

/// Runs `config.runs` independent runs with seeds `base_seed + i`.
pub fn run_experiment(config: &ExperimentConfig) -> Result<ExperimentOutcome> {
    config.validate()?;
    let ground_energy = if config.cost.hamiltonian.n_qubits() <= DENSE_QUBIT_LIMIT {
        Some(ground_state_energy(&config.cost.hamiltonian)?)
    } else {
        None
    };
    let execute = || -> Result<Vec<RunRecord>> {
        (0..config.runs)
            .into_par_iter()
            .map(|i| run_single(config, i, config.base_seed.wrapping_add(i as u64)))
            .collect()
    };
    let records = match config.parallel {
        Some(width) => rayon::ThreadPoolBuilder::new()
            .num_threads(width)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?
            .install(execute)?,
        None => execute()?,
    };
    let summary = Summary::from_records(&records, ground_energy, config.chemical_accuracy);
    Ok(ExperimentOutcome { records, summary })
}
