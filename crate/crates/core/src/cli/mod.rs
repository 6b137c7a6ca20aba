//! The `hopso` command: `run`, `diag`, `trace-export` and `presets`.
//!
//! Exit codes: 0 on success, 1 on runtime failures (I/O, numerical
//! errors, unreadable results), 2 on usage or config validation errors.

pub mod config;
pub mod records;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::hamiltonians::{ground_state_energy, h2_hamiltonian, parse_pauli_sum};
use crate::vqe::{run_experiment, ExperimentOutcome};
use config::{parse_config, preset, ConfigFile, Overrides, PRESETS};
use records::Record;

#[derive(Debug, Parser)]
#[command(name = "hopso", version, about = "Periodic HOPSO benchmarks for VQE")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run an experiment from a config file or a bundled preset name.
    Run {
        config: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        runs: Option<usize>,
        #[arg(long)]
        shots: Option<u64>,
        #[arg(long)]
        parallel: Option<usize>,
        #[arg(long, default_value = "results.jsonl")]
        out: PathBuf,
        /// Hamiltonian file for `lih` and `file` problems.
        #[arg(long)]
        hamiltonian: Option<PathBuf>,
        #[arg(long)]
        iterations: Option<usize>,
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Print the exact ground energy of `h2` or a Hamiltonian file.
    Diag { source: String },
    /// Print per-iteration global-best values from a results file.
    TraceExport { results: PathBuf },
    /// List bundled presets.
    Presets,
}

#[derive(Debug)]
pub enum CliError {
    Usage(Vec<String>),
    Runtime(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Runtime(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(lines) => write!(f, "{}", lines.join("\n")),
            CliError::Runtime(msg) => write!(f, "{msg}"),
        }
    }
}

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(stdout, "{}", e.render()) } else { write!(stderr, "{}", e.render()) };
            return code;
        }
    };
    let result = match cli.command {
        Command::Run { config, seed, runs, shots, parallel, out, hamiltonian, iterations, budget } => {
            let overrides = Overrides { seed, runs, shots, parallel, hamiltonian, iterations, budget };
            cmd_run(&config, &overrides, &out, stdout)
        }
        Command::Diag { source } => cmd_diag(&source, stdout),
        Command::TraceExport { results } => cmd_trace_export(&results, stdout),
        Command::Presets => {
            for (name, _) in PRESETS {
                let _ = writeln!(stdout, "{name}");
            }
            Ok(())
        }
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Loads a config from a file path, falling back to a bundled preset name.
pub fn load_config(source: &str) -> Result<ConfigFile, CliError> {
    let text = if Path::new(source).is_file() {
        std::fs::read_to_string(source).map_err(|e| CliError::Runtime(format!("cannot read {source}: {e}")))?
    } else if let Some(text) = preset(source) {
        text.to_string()
    } else {
        return Err(CliError::Usage(vec![format!("{source}: no such config file or bundled preset")]));
    };
    parse_config(&text).map_err(CliError::Usage)
}

pub fn cmd_run(source: &str, overrides: &Overrides, out: &Path, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mut cfg = load_config(source)?;
    cfg.apply(overrides);
    let experiment = cfg.to_experiment().map_err(CliError::Usage)?;
    let ExperimentOutcome { records, summary } =
        run_experiment(&experiment).map_err(|e| CliError::Runtime(e.to_string()))?;

    let mut lines = Vec::with_capacity(records.len() + 2);
    lines.push(Record::Config(cfg));
    lines.extend(records.iter().cloned().map(Record::Run));
    lines.push(Record::Summary(summary.clone()));
    let file = File::create(out).map_err(|e| CliError::Runtime(format!("cannot create {}: {e}", out.display())))?;
    records::write_records(BufWriter::new(file), &lines)
        .map_err(|e| CliError::Runtime(format!("writing {}: {e}", out.display())))?;

    let w = |e: std::io::Error| CliError::Runtime(e.to_string());
    writeln!(stdout, "{:>4} {:>20} {:>20} {:>8} {:>5}", "run", "min_energy", "exact_energy", "evals", "dead")
        .map_err(w)?;
    for r in &records {
        writeln!(
            stdout,
            "{:>4} {:>20.12} {:>20.12} {:>8} {:>5}",
            r.run, r.min_energy, r.exact_energy, r.evaluations, r.dead_particles
        )
        .map_err(w)?;
    }
    writeln!(stdout, "median min energy   {:.12}", summary.median_min).map_err(w)?;
    writeln!(stdout, "IQR min energy      {:.12}", summary.iqr_min).map_err(w)?;
    writeln!(stdout, "median exact energy {:.12}", summary.median_exact).map_err(w)?;
    if let Some(e0) = summary.ground_energy {
        writeln!(stdout, "ground energy       {e0:.12}").map_err(w)?;
    }
    if let Some(frac) = summary.within_chemical_accuracy {
        writeln!(stdout, "within {:.1e} Ha    {:.3}", summary.chemical_accuracy, frac).map_err(w)?;
    }
    writeln!(stdout, "results written to {}", out.display()).map_err(w)?;
    Ok(())
}

pub fn cmd_diag(source: &str, stdout: &mut dyn Write) -> Result<(), CliError> {
    let h = if source == "h2" {
        h2_hamiltonian()
    } else {
        let text =
            std::fs::read_to_string(source).map_err(|e| CliError::Runtime(format!("cannot read {source}: {e}")))?;
        parse_pauli_sum(&text).map_err(|e| CliError::Usage(vec![format!("{source}: {e}")]))?
    };
    let e0 = ground_state_energy(&h).map_err(|e| CliError::Runtime(e.to_string()))?;
    writeln!(stdout, "{e0:.9}").map_err(|e| CliError::Runtime(e.to_string()))
}

pub fn cmd_trace_export(results: &Path, stdout: &mut dyn Write) -> Result<(), CliError> {
    let file = File::open(results).map_err(|e| CliError::Runtime(format!("cannot open {}: {e}", results.display())))?;
    let all = records::read_records(BufReader::new(file))
        .map_err(|e| CliError::Runtime(format!("{}: {e}", results.display())))?;
    let runs = records::runs(&all);
    if runs.is_empty() {
        return Err(CliError::Runtime(format!("{}: no run records", results.display())));
    }
    let w = |e: std::io::Error| CliError::Runtime(e.to_string());
    writeln!(stdout, "run\titeration\tbest_value").map_err(w)?;
    for run in runs {
        for (k, pair) in run.trace.windows(2).enumerate() {
            if pair[1] > pair[0] {
                return Err(CliError::Runtime(format!("run {}: trace increases at iteration {}", run.run, k + 1)));
            }
        }
        for (it, v) in run.trace.iter().enumerate() {
            writeln!(stdout, "{}\t{}\t{}", run.run, it, v).map_err(w)?;
        }
    }
    Ok(())
}
