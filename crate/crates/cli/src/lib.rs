//! Command-line driver for `cubeflow`.
//!
//! Every subcommand reads one JSON document (a path, or `-` for standard
//! input) and writes a JSON report. Exit status is 0 on success, 1 when the
//! document is malformed or fails validation, and 2 on usage errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;

use cubeflow::flow::CombFlow;
use cubeflow::generate::generate;
use cubeflow::io::{parse, parse_presentation, serialize, to_json, DocumentError};
use cubeflow::pcs::validate_presentation;
use cubeflow::{
    decomposition_report, euler_characteristic, globular_decomposition, homology, realize_states, skeleton,
    state_order, PathClass, PrecubicalSet, ValidationReport,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_INVALID: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "cubeflow", version, about = "Precubical sets as flows, globular ledgers and cubical homology")]
pub struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(short = 'o', long = "output", global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check face records and the cubical relations.
    Validate { file: String },
    /// Cell counts, Euler characteristic and globular census.
    Info { file: String },
    /// The sub-complex of cells of dimension at most --dim.
    Skeleton {
        file: String,
        #[arg(long)]
        dim: usize,
    },
    /// Integer homology of the cubical complex.
    Homology { file: String },
    /// Alternating sum of cell counts.
    Euler { file: String },
    /// States of the realized flow.
    States { file: String },
    /// Execution-path classes between two states, or the total morphism count.
    Paths {
        file: String,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        /// Longest path considered (default: number of edges).
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Reachability order on states, or a directed cycle.
    Order { file: String },
    /// One globular cell per positive-dimensional cube.
    Globular {
        file: String,
        /// Print per-stage counts instead of the cell list.
        #[arg(long)]
        summary: bool,
    },
    /// Emit a document for a named family: cube N, boundary N, circle,
    /// torus D, cylinder, interval K.
    Generate { family: String, params: Vec<usize> },
}

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
    /// Report still written to the output on failure (validation issues).
    pub report: Option<String>,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into(), report: None }
    }

    fn invalid(message: impl Into<String>) -> Self {
        Failure { code: EXIT_INVALID, message: message.into(), report: None }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        Failure::invalid(e.to_string())
    }
}

fn read_input(file: &str) -> Result<Vec<u8>, Failure> {
    if file == "-" {
        let mut buf = Vec::new();
        io::stdin().read_to_end(&mut buf).map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
        Ok(buf)
    } else {
        fs::read(file).map_err(|e| Failure::usage(format!("reading {file}: {e}")))
    }
}

fn load(file: &str) -> Result<PrecubicalSet, Failure> {
    Ok(parse(&read_input(file)?)?)
}

#[derive(Serialize)]
struct ValidateReport<'a> {
    valid: bool,
    issues: &'a ValidationReport,
}

#[derive(Serialize)]
struct InfoReport {
    top_dim: i64,
    cell_counts: Vec<usize>,
    total_cells: usize,
    euler_characteristic: i64,
    loopless: bool,
    globular: cubeflow::globular::DecompositionSummary,
}

#[derive(Serialize)]
struct PathsReport<'a> {
    from: &'a str,
    to: &'a str,
    max_len: usize,
    count: usize,
    classes: Vec<PathClass>,
}

#[derive(Serialize)]
struct MorphismCount {
    max_len: usize,
    morphism_count: u64,
}

/// Runs one parsed command, returning the report text.
pub fn execute(command: &Command) -> Result<String, Failure> {
    match command {
        Command::Validate { file } => {
            let p = parse_presentation(&read_input(file)?)?;
            let report = validate_presentation(&p);
            let text = to_json(&ValidateReport { valid: report.is_valid(), issues: &report });
            if report.is_valid() {
                Ok(text)
            } else {
                Err(Failure {
                    code: EXIT_INVALID,
                    message: format!("{} issue(s): {report}", report.issues.len()),
                    report: Some(text),
                })
            }
        }
        Command::Info { file } => {
            let k = load(file)?;
            Ok(to_json(&InfoReport {
                top_dim: k.top_dim().map_or(-1, |d| d as i64),
                cell_counts: k.cell_counts(),
                total_cells: k.total_cells(),
                euler_characteristic: euler_characteristic(&k),
                loopless: state_order(&k).poset().is_some(),
                globular: decomposition_report(&k),
            }))
        }
        Command::Skeleton { file, dim } => Ok(serialize(&skeleton(&load(file)?, *dim))),
        Command::Homology { file } => Ok(to_json(&homology(&load(file)?))),
        Command::Euler { file } => {
            let k = load(file)?;
            Ok(to_json(&serde_json::json!({ "euler_characteristic": euler_characteristic(&k) })))
        }
        Command::States { file } => Ok(to_json(&serde_json::json!({ "states": realize_states(&load(file)?) }))),
        Command::Paths { file, from, to, max_len } => {
            let k = load(file)?;
            let max_len = max_len.unwrap_or(k.count(1));
            let flow = CombFlow::new(&k);
            match (from, to) {
                (Some(a), Some(b)) => {
                    let classes = flow.path_classes(a, b, max_len).map_err(|e| Failure::usage(e.to_string()))?;
                    Ok(to_json(&PathsReport { from: a, to: b, max_len, count: classes.len(), classes }))
                }
                (None, None) => Ok(to_json(&MorphismCount { max_len, morphism_count: flow.count_morphisms(max_len) })),
                _ => Err(Failure::usage("--from and --to must be given together")),
            }
        }
        Command::Order { file } => Ok(to_json(&state_order(&load(file)?))),
        Command::Globular { file, summary } => {
            let k = load(file)?;
            if *summary {
                Ok(to_json(&decomposition_report(&k)))
            } else {
                Ok(to_json(&globular_decomposition(&k)))
            }
        }
        Command::Generate { family, params } => {
            let k = generate(family, params).map_err(|e| Failure::usage(e.to_string()))?;
            Ok(serialize(&k))
        }
    }
}

fn emit(output: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text).map_err(|e| Failure::usage(format!("writing {}: {e}", path.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(|e| Failure::usage(format!("writing output: {e}"))),
    }
}

/// Full CLI entry point over explicit streams; returns the exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let outcome = execute(&cli.command).and_then(|text| emit(&cli.output, &text, stdout));
    match outcome {
        Ok(()) => EXIT_OK,
        Err(failure) => {
            if let Some(report) = &failure.report {
                if let Err(e) = emit(&cli.output, report, stdout) {
                    let _ = writeln!(stderr, "error: {}", e.message);
                }
            }
            let _ = writeln!(stderr, "error: {}", failure.message);
            failure.code
        }
    }
}
