//! Batch front end: parses a command line into a [`Job`], runs it, and
//! returns the report text together with the exit code (0 all checks pass,
//! 1 a check failed, 2 usage error or malformed input).

mod commands;
pub mod document;
pub mod lemmas;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use exactla::FieldSpec;

pub use output::Output;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    /// Bad command line; clap's rendering is kept verbatim.
    Usage(String),
    /// Help or version text requested.
    Info(String),
    /// Unreadable or malformed input.
    Input(String),
}

impl CliError {
    pub fn code(&self) -> u8 {
        match self {
            CliError::Info(_) => 0,
            _ => 2,
        }
    }

    pub fn into_outcome(self) -> Outcome {
        let code = self.code();
        match self {
            CliError::Info(s) => Outcome {
                code,
                stdout: s,
                stderr: String::new(),
            },
            CliError::Usage(s) => Outcome {
                code,
                stdout: String::new(),
                stderr: s,
            },
            CliError::Input(s) => Outcome {
                code,
                stdout: String::new(),
                stderr: format!("error: {s}\n"),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

fn parse_degree(s: &str) -> Result<usize, String> {
    let d: i64 = s.parse().map_err(|_| format!("`{s}` is not an integer"))?;
    usize::try_from(d).map_err(|_| format!("degree must be non-negative, got {d}"))
}

fn parse_field(s: &str) -> Result<FieldSpec, String> {
    FieldSpec::parse(s).map_err(|e| e.to_string())
}

#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct Common {
    /// rational or fp:<p>
    #[arg(long, global = true, default_value = "rational", value_parser = parse_field)]
    pub field: FieldSpec,
    /// Print the report as JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
}

/// Where the Ω-magma A (and B) come from: a catalog monoid or a structure in
/// a JSON document.
#[derive(Args, Clone, Debug, PartialEq, Eq)]
pub struct Source {
    /// JSON document holding the structure.
    pub file: Option<PathBuf>,
    /// Structure name inside the document, for A.
    #[arg(long)]
    pub structure: Option<String>,
    /// Structure name inside the document, for B; defaults to A.
    #[arg(long)]
    pub target: Option<String>,
    /// Catalog monoid: dual_numbers, product_algebra, truncated_poly,
    /// matrix_algebra, yd_module_algebra.
    #[arg(long)]
    pub magma: Option<String>,
    #[arg(long, default_value = "vect")]
    pub backend: String,
    /// Hopf algebra of the backend (sweedler, C2, C3, ...).
    #[arg(long)]
    pub hopf: Option<String>,
    /// Size parameter of the catalog entry.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Subcommand, Clone, Debug, PartialEq, Eq)]
pub enum Command {
    /// Check every object, morphism and structure of a JSON document.
    Validate {
        file: PathBuf,
    },
    /// List catalog entries, or build and validate one.
    Catalog {
        name: Option<String>,
        #[arg(long, default_value = "vect")]
        backend: String,
        #[arg(long)]
        hopf: Option<String>,
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
    },
    /// Universal comeasuring monoid: presentation, dimensions, bimonoid tables.
    Universal {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "4", allow_negative_numbers = true, value_parser = parse_degree)]
        degree: usize,
        /// Also build the Hopf envelope up to this many antipode levels.
        #[arg(long)]
        level: Option<usize>,
    },
    /// Dimension table and normal words of the truncated universal monoid.
    Truncate {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "4", allow_negative_numbers = true, value_parser = parse_degree)]
        degree: usize,
    },
    /// Round trips between comeasurings into P* and measurings from P.
    DualityCheck {
        #[command(flatten)]
        source: Source,
        #[arg(long, default_value = "4", allow_negative_numbers = true, value_parser = parse_degree)]
        degree: usize,
        /// Coalgebras P: one, a group name (C2, C3, S3, ...) or M<n>; repeatable.
        #[arg(long = "coalgebra")]
        coalgebras: Vec<String>,
        #[arg(long)]
        seed: Option<u64>,
        /// Sampled comeasurings per coalgebra.
        #[arg(long, default_value_t = 3)]
        trials: usize,
    },
    /// Support of ρ: A → B⊗Q from a JSON document.
    Support {
        file: PathBuf,
        /// Morphism name; its target list is [B, Q...].
        #[arg(long, default_value = "rho")]
        map: String,
    },
    /// Cosupport of ψ: P⊗A → B from a JSON document.
    Cosupport {
        file: PathBuf,
        /// Morphism name; its source list is [P, A...].
        #[arg(long, default_value = "psi")]
        map: String,
    },
    /// Seeded identity battery for one backend.
    VerifyLemmas {
        #[arg(long, default_value = "vect")]
        backend: String,
        #[arg(long)]
        hopf: Option<String>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(Parser, Clone, Debug, PartialEq, Eq)]
#[command(name = "cli", version, about = "Universal comeasuring monoids, exactly")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Job {
    pub command: Command,
    pub common: Common,
}

pub fn parse_job<S: AsRef<str>>(argv: &[S]) -> Result<Job, CliError> {
    let args = argv.iter().map(|s| s.as_ref().to_string());
    let cli = Cli::try_parse_from(args).map_err(|e| match e.kind() {
        clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
            CliError::Info(e.render().to_string())
        }
        _ => CliError::Usage(e.render().to_string()),
    })?;
    let job = Job {
        command: cli.command,
        common: cli.common,
    };
    match &job.command {
        Command::VerifyLemmas { seed: None, .. } => {
            Err(CliError::Usage("error: verify-lemmas needs --seed\n".into()))
        }
        Command::DualityCheck { seed: None, .. } => {
            Err(CliError::Usage("error: duality-check needs --seed\n".into()))
        }
        _ => Ok(job),
    }
}

pub fn execute(job: &Job) -> Outcome {
    match commands::run(job) {
        Ok(out) => {
            let code = if out.ok { 0 } else { 1 };
            Outcome {
                code,
                stdout: out.render(job.common.json),
                stderr: String::new(),
            }
        }
        Err(e) => e.into_outcome(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degrees() {
        assert_eq!(parse_degree("0"), Ok(0));
        assert_eq!(parse_degree("12"), Ok(12));
        assert!(parse_degree("-1").is_err());
        assert!(parse_degree("four").is_err());
    }

    #[test]
    fn error_codes() {
        assert_eq!(CliError::Info(String::new()).code(), 0);
        assert_eq!(CliError::Usage(String::new()).code(), 2);
        assert_eq!(CliError::Input(String::new()).code(), 2);
    }
}
