//! Experiment config files.
//!
//! A config is a flat TOML table. Keys:
//!
//! | key | type | notes |
//! |-----|------|-------|
//! | `problem` | `"h2"`, `"lih"` or `"file"` | required |
//! | `hamiltonian` | path | required for `lih` and `file` |
//! | `reps` | integer | ansatz repetitions, default 3 |
//! | `optimizer` | `"hopso"`, `"pso"` or `"de"` | required |
//! | `particles` | integer | swarm size, or DE population |
//! | `iterations` | integer | iterations, or DE generations |
//! | `budget` | integer | evaluation cap, default `particles × iterations` |
//! | `shots` | integer ≥ 1 | omit for exact energies |
//! | `runs` | integer ≥ 1 | required |
//! | `seed` | integer | base seed, run `i` uses `seed + i` |
//! | `parallel` | integer ≥ 1 | concurrent runs, default all cores |
//! | `parallel_evals` | bool | evaluate each population batch on the thread pool |
//! | `chemical_accuracy` | float | Hartree, default 1.6e-3 |
//! | `lambda`, `m`, `t_ul`, `omega`, `periodic` | | HOPSO only |
//! | `c1`, `c2` | float | HOPSO (default 1) and PSO (default 2.05) |
//! | `chi` | float | PSO only, default 0.729 |
//! | `mutation_min`, `mutation_max`, `crossover` | float | DE only |
//!
//! Unknown keys, and keys that do not apply to the chosen optimizer, are
//! rejected. Relative `hamiltonian` paths resolve against the working
//! directory.

use std::f64::consts::TAU;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::ansatz::AnsatzSpec;
use crate::hamiltonians::{h2_hamiltonian, parse_pauli_sum, PauliSum};
use crate::optim::{DeConfig, HopsoConfig, Optimizer, PsoConfig};
use crate::vqe::{CostSpec, ExperimentConfig, Noise, CHEMICAL_ACCURACY};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    H2,
    Lih,
    File,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OptimizerKind {
    Hopso,
    Pso,
    De,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub problem: Problem,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hamiltonian: Option<PathBuf>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reps: Option<usize>,
    pub optimizer: OptimizerKind,
    pub particles: usize,
    pub iterations: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shots: Option<u64>,
    pub runs: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parallel: Option<usize>,
    #[serde(default)]
    pub parallel_evals: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chemical_accuracy: Option<f64>,

    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t_ul: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub omega: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub periodic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c1: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation_min: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mutation_max: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub crossover: Option<f64>,
}

/// Command-line overrides applied on top of a config file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub runs: Option<usize>,
    pub shots: Option<u64>,
    pub parallel: Option<usize>,
    pub hamiltonian: Option<PathBuf>,
    pub iterations: Option<usize>,
    pub budget: Option<usize>,
}

/// Presets shipped with the crate, addressable by name on the command line.
pub const PRESETS: &[(&str, &str)] = &[
    ("h2-noiseless-hopso", include_str!("../../presets/h2-noiseless-hopso.toml")),
    ("h2-noiseless-pso", include_str!("../../presets/h2-noiseless-pso.toml")),
    ("h2-noiseless-de", include_str!("../../presets/h2-noiseless-de.toml")),
    ("h2-shots1000-hopso", include_str!("../../presets/h2-shots1000-hopso.toml")),
    ("h2-shots1000-pso", include_str!("../../presets/h2-shots1000-pso.toml")),
    ("h2-shots1000-de", include_str!("../../presets/h2-shots1000-de.toml")),
    ("lih-noiseless-hopso", include_str!("../../presets/lih-noiseless-hopso.toml")),
    ("lih-noiseless-pso", include_str!("../../presets/lih-noiseless-pso.toml")),
    ("lih-noiseless-de", include_str!("../../presets/lih-noiseless-de.toml")),
    ("lih-shots1000-hopso", include_str!("../../presets/lih-shots1000-hopso.toml")),
    ("lih-shots1000-pso", include_str!("../../presets/lih-shots1000-pso.toml")),
    ("lih-shots1000-de", include_str!("../../presets/lih-shots1000-de.toml")),
    ("lih-smoke-hopso", include_str!("../../presets/lih-smoke-hopso.toml")),
];

pub fn preset(name: &str) -> Option<&'static str> {
    PRESETS.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

/// Parses config text. Errors are schema diagnostics, one per line.
pub fn parse_config(text: &str) -> Result<ConfigFile, Vec<String>> {
    toml::from_str(text).map_err(|e| vec![e.to_string().trim().to_string()])
}

impl ConfigFile {
    pub fn apply(&mut self, o: &Overrides) {
        if let Some(s) = o.seed {
            self.seed = s;
        }
        if let Some(r) = o.runs {
            self.runs = r;
        }
        if let Some(s) = o.shots {
            self.shots = Some(s);
        }
        if let Some(p) = o.parallel {
            self.parallel = Some(p);
        }
        if let Some(h) = &o.hamiltonian {
            self.hamiltonian = Some(h.clone());
        }
        if let Some(i) = o.iterations {
            self.iterations = i;
        }
        if let Some(b) = o.budget {
            self.budget = Some(b);
        }
    }

    pub fn budget(&self) -> usize {
        self.budget.unwrap_or_else(|| self.particles.saturating_mul(self.iterations))
    }

    /// Checks everything that does not need the filesystem.
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        if self.runs == 0 {
            problems.push("runs: must be at least 1".to_string());
        }
        if self.particles == 0 {
            problems.push("particles: must be at least 1".to_string());
        }
        if self.budget() == 0 {
            problems.push("budget: must be at least 1".to_string());
        }
        if self.shots == Some(0) {
            problems.push("shots: must be at least 1 (omit for exact energies)".to_string());
        }
        if self.parallel == Some(0) {
            problems.push("parallel: must be at least 1".to_string());
        }
        if let Some(ca) = self.chemical_accuracy {
            if !(ca > 0.0) {
                problems.push("chemical_accuracy: must be positive".to_string());
            }
        }
        match self.problem {
            Problem::H2 => {
                if self.hamiltonian.is_some() {
                    problems.push("hamiltonian: not used with problem = \"h2\"".to_string());
                }
            }
            Problem::Lih | Problem::File => {
                if self.hamiltonian.is_none() {
                    problems.push(format!(
                        "hamiltonian: a Hamiltonian file path is required for problem = \"{}\"",
                        if self.problem == Problem::Lih { "lih" } else { "file" }
                    ));
                }
            }
        }
        let hopso_only = [
            ("lambda", self.lambda.is_some()),
            ("m", self.m.is_some()),
            ("t_ul", self.t_ul.is_some()),
            ("omega", self.omega.is_some()),
            ("periodic", self.periodic.is_some()),
        ];
        let pso_only = [("chi", self.chi.is_some())];
        let de_only = [
            ("mutation_min", self.mutation_min.is_some()),
            ("mutation_max", self.mutation_max.is_some()),
            ("crossover", self.crossover.is_some()),
        ];
        let swarm_shared = [("c1", self.c1.is_some()), ("c2", self.c2.is_some())];
        let name = match self.optimizer {
            OptimizerKind::Hopso => "hopso",
            OptimizerKind::Pso => "pso",
            OptimizerKind::De => "de",
        };
        let foreign: Vec<&str> = match self.optimizer {
            OptimizerKind::Hopso => pso_only.iter().chain(&de_only).filter(|k| k.1).map(|k| k.0).collect(),
            OptimizerKind::Pso => hopso_only.iter().chain(&de_only).filter(|k| k.1).map(|k| k.0).collect(),
            OptimizerKind::De => {
                hopso_only.iter().chain(&pso_only).chain(&swarm_shared).filter(|k| k.1).map(|k| k.0).collect()
            }
        };
        for key in foreign {
            problems.push(format!("{key}: not a setting of optimizer \"{name}\""));
        }
        if problems.is_empty() {
            if let Err(e) = self.optimizer_settings().validate() {
                problems.push(e.to_string());
            }
        }
        problems
    }

    pub fn optimizer_settings(&self) -> Optimizer {
        match self.optimizer {
            OptimizerKind::Hopso => {
                let d = HopsoConfig::default();
                Optimizer::Hopso(HopsoConfig {
                    num_particles: self.particles,
                    max_iters: self.iterations,
                    lambda: self.lambda.unwrap_or(d.lambda),
                    c1: self.c1.unwrap_or(d.c1),
                    c2: self.c2.unwrap_or(d.c2),
                    m: self.m.unwrap_or(d.m),
                    t_ul: self.t_ul.unwrap_or(TAU),
                    omega: self.omega.unwrap_or(d.omega),
                    periodic: self.periodic.unwrap_or(true),
                    seed: self.seed,
                    max_evals: None,
                    parallel_evals: self.parallel_evals,
                })
            }
            OptimizerKind::Pso => {
                let d = PsoConfig::default();
                Optimizer::Pso(PsoConfig {
                    num_particles: self.particles,
                    max_iters: self.iterations,
                    c1: self.c1.unwrap_or(d.c1),
                    c2: self.c2.unwrap_or(d.c2),
                    chi: self.chi.unwrap_or(d.chi),
                    seed: self.seed,
                    max_evals: None,
                    parallel_evals: self.parallel_evals,
                })
            }
            OptimizerKind::De => {
                let d = DeConfig::default();
                Optimizer::De(DeConfig {
                    population: self.particles,
                    max_generations: self.iterations,
                    mutation: (self.mutation_min.unwrap_or(d.mutation.0), self.mutation_max.unwrap_or(d.mutation.1)),
                    crossover: self.crossover.unwrap_or(d.crossover),
                    seed: self.seed,
                    parallel_evals: self.parallel_evals,
                    ..d
                })
            }
        }
    }

    pub fn load_hamiltonian(&self) -> Result<PauliSum, String> {
        match (&self.problem, &self.hamiltonian) {
            (Problem::H2, _) => Ok(h2_hamiltonian()),
            (_, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| format!("cannot read Hamiltonian {}: {e}", path.display()))?;
                parse_pauli_sum(&text).map_err(|e| format!("{}: {e}", path.display()))
            }
            (_, None) => Err("no Hamiltonian path given".to_string()),
        }
    }

    /// Resolves the config into a runnable experiment.
    pub fn to_experiment(&self) -> Result<ExperimentConfig, Vec<String>> {
        let problems = self.validate();
        if !problems.is_empty() {
            return Err(problems);
        }
        let hamiltonian = self.load_hamiltonian().map_err(|e| vec![e])?;
        let reps = self.reps.unwrap_or(3);
        let ansatz = AnsatzSpec::new(hamiltonian.n_qubits(), reps).map_err(|e| vec![e.to_string()])?;
        let noise = match self.shots {
            Some(s) => Noise::Shots(s),
            None => Noise::Exact,
        };
        let cost = CostSpec::new(hamiltonian, ansatz, noise, self.budget()).map_err(|e| vec![e.to_string()])?;
        let mut exp = ExperimentConfig::new(cost, self.optimizer_settings(), self.runs, self.seed);
        exp.parallel = self.parallel;
        exp.chemical_accuracy = self.chemical_accuracy.unwrap_or(CHEMICAL_ACCURACY);
        Ok(exp)
    }
}
