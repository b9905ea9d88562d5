//! Command-line front end for the `dcrystal` library.
//!
//! Subcommands: `decompose`, `check`, `graph`, `keyprod` and `verify`. Exit
//! codes: 0 success, 1 configuration error, 2 decomposition criterion fails,
//! 3 a verification or equivalence check disagreed.

pub mod commands;
pub mod config;
pub mod render;

use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use commands::{Outcome, EXIT_CONFIG, EXIT_CRITERION, EXIT_MISMATCH, EXIT_OK};
pub use config::{ConfigError, Job, JobConfig, WeightSpec, WordSpec};

#[derive(Debug, Parser)]
#[command(name = "dcrystal", version, about = "Demazure crystals, tensor products and key polynomials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Split B_v(λ) ⊗ B_w(μ) or B_v(λ) ⊗ B_w(∞) into Demazure crystals.
    Decompose(JobArgs),
    /// Compare the criterion, extremality and decomposability.
    Check(JobArgs),
    /// Emit the crystal graph of B_w(λ), B_w(∞) or a tensor set.
    Graph(JobArgs),
    /// Expand a product of two key polynomials (GL_n presets).
    Keyprod(JobArgs),
    /// Run seeded property suites on a root datum.
    Verify(JobArgs),
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct JobArgs {
    /// JSON job file; flags override its fields.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Built-in root datum: A<n>, B<n>, C<n>, D<n>, G2, GL<n>, A1_aff.
    #[arg(long)]
    pub preset: Option<String>,
    /// Inline JSON root datum, or @path to a JSON file.
    #[arg(long)]
    pub datum: Option<String>,
    /// Dominant weight λ, e.g. ω2, ω1+ω2, w1 or 1,0,1.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: Option<String>,
    /// Dominant weight μ (finite mode).
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<String>,
    /// Word for v, 1-based: 2,1,3,2 or s2s1s3s2; empty for the identity.
    #[arg(long)]
    pub v: Option<String>,
    /// Word for w.
    #[arg(long)]
    pub w: Option<String>,
    /// finite or infinity.
    #[arg(long)]
    pub mode: Option<String>,
    /// Depth window for B(∞).
    #[arg(long)]
    pub depth: Option<u64>,
    /// json, dot or table.
    #[arg(long)]
    pub format: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Seed for randomized suites.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Sweep every pair (v, w) of a finite Weyl group.
    #[arg(long)]
    pub all_vw: bool,
}

impl JobArgs {
    /// Merges the config file (if any) with the flags and validates.
    pub fn to_job(&self) -> Result<Job, ConfigError> {
        let base = match &self.config {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| ConfigError::new("config", format!("{}: {e}", path.display())))?;
                JobConfig::from_json(&text)?
            }
            None => JobConfig::default(),
        };
        let datum = match &self.datum {
            Some(s) => {
                let text = match s.strip_prefix('@') {
                    Some(path) => std::fs::read_to_string(path).map_err(|e| ConfigError::new("datum", format!("{path}: {e}")))?,
                    None => s.clone(),
                };
                Some(serde_json::from_str(&text).map_err(|e| ConfigError::new("datum", e.to_string()))?)
            }
            None => None,
        };
        let flags = JobConfig {
            preset: self.preset.clone(),
            datum,
            lambda: self.lambda.clone().map(WeightSpec::Text),
            mu: self.mu.clone().map(WeightSpec::Text),
            v: self.v.clone().map(WordSpec::Text),
            w: self.w.clone().map(WordSpec::Text),
            mode: self.mode.clone(),
            depth: self.depth,
            format: self.format.clone(),
            seed: self.seed,
            all_vw: self.all_vw.then_some(true),
        };
        Job::try_from(base.merge(flags))
    }
}

/// Runs one subcommand. The report is written to `--out` when given and
/// otherwise returned in `Outcome::output`.
pub fn run(cli: &Cli) -> Outcome {
    let (args, f): (&JobArgs, fn(&Job) -> Outcome) = match &cli.command {
        Command::Decompose(a) => (a, commands::cmd_decompose),
        Command::Check(a) => (a, commands::cmd_check),
        Command::Graph(a) => (a, commands::cmd_graph),
        Command::Keyprod(a) => (a, commands::cmd_keyprod),
        Command::Verify(a) => (a, commands::cmd_verify),
    };
    let job = match args.to_job() {
        Ok(j) => j,
        Err(e) => return Outcome::config(&e),
    };
    let mut outcome = f(&job);
    if let Some(path) = &args.out {
        if let Err(e) = std::fs::write(path, &outcome.output) {
            return Outcome::config(&ConfigError::new("out", format!("{}: {e}", path.display())));
        }
        outcome.output.clear();
    }
    outcome
}

/// Parses `argv` (including the program name) and runs it. Usage errors exit
/// with code 1; `--help` and `--version` with 0.
pub fn run_from<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(argv) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { EXIT_OK };
            let text = e.render().to_string();
            if code == EXIT_OK {
                Outcome { code, output: text, message: None }
            } else {
                Outcome { code, output: String::new(), message: Some(text.trim_end().to_string()) }
            }
        }
    }
}
