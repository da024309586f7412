//! Command-line front end for `burnside-core`.
//!
//! Exit codes: 0 success, 1 usage error, 2 computation error (caps,
//! malformed input, failed numerical gates), 3 when a unit cannot be written
//! as a product of basic degrees (`verify` ending in COUNTEREXAMPLE, or an
//! unfactorable unit passed to `factor`).

mod commands;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use burnside_core::{Error, Limits, Pipeline, DEFAULT_MAX_CLASSES, DEFAULT_MAX_ORDER};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COMPUTATION: i32 = 2;
pub const EXIT_COUNTEREXAMPLE: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "burnside", version, about = "Burnside rings, tables of marks and unit factorization for small finite groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: GlobalArgs,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Catalog spec (e.g. `symmetric:3`, `product:cyclic:2*cyclic:2`) or `file:PATH`.
    #[arg(long, global = true)]
    pub group: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the document here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_ORDER)]
    pub max_order: usize,
    /// Cap on subgroup classes for unit enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_CLASSES)]
    pub max_classes: usize,
    /// Add a `meta` block (version, timing) to JSON documents.
    #[arg(long, global = true)]
    pub meta: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Group order, exponent and class counts.
    Info,
    /// Conjugacy classes of subgroups with normalizers and containment counts.
    Subgroups,
    /// Table of marks.
    Marks,
    /// Multiplication tensor of the Burnside ring.
    Multable,
    /// Complex character table.
    Chartable,
    /// Real irreducible representations and fixed-point dimensions.
    Irreps,
    /// Basic degrees of the real irreducibles.
    BasicDegrees,
    /// All units of the Burnside ring.
    Units,
    /// Factor a unit into basic degrees.
    Factor {
        /// Coefficients `c1,...,cN` in the subgroup class basis.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
        /// Prefer the solution with fewest basic degree factors.
        #[arg(long)]
        min_weight: bool,
    },
    /// Degree of a linear isomorphism from its spectral data.
    Degree {
        /// Negative eigenvalue counts `m1,...,mr` per real irrep.
        #[arg(long, conflicts_with = "blocks", required_unless_present = "blocks")]
        mu: Option<String>,
        /// JSON file of rational matrix blocks.
        #[arg(long)]
        blocks: Option<PathBuf>,
    },
    /// Factor every unit and report whether basic degrees generate the unit group.
    Verify,
}

/// A rendered document and the exit code it implies.
#[derive(Debug)]
pub struct Emit {
    pub body: String,
    pub code: i32,
}

/// Failure with its exit code and a one-line reason.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub kind: String,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Failure {
        Failure {
            code: EXIT_USAGE,
            kind: "Usage".into(),
            message: message.into(),
        }
    }

    /// `error: <Kind>: <message>` on a single line.
    pub fn line(&self) -> String {
        let msg: String = self.message.split_whitespace().collect::<Vec<_>>().join(" ");
        format!("error: {}: {}", self.kind, msg)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure {
            code: EXIT_COMPUTATION,
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

/// Run with explicit arguments (including the program name) and streams.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let first = e.to_string();
                    let first = first.lines().next().unwrap_or("invalid arguments");
                    let first = first.trim_start_matches("error: ");
                    let _ = writeln!(stderr, "{}", Failure::usage(first).line());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(emit) => {
            let written = match &cli.global.out {
                Some(path) => std::fs::write(path, &emit.body).map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(emit.body.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => emit.code,
                Err(msg) => {
                    let f = Failure {
                        code: EXIT_COMPUTATION,
                        kind: "Io".into(),
                        message: msg,
                    };
                    let _ = writeln!(stderr, "{}", f.line());
                    f.code
                }
            }
        }
        Err(f) => {
            let _ = writeln!(stderr, "{}", f.line());
            f.code
        }
    }
}

/// Build the pipeline and render the requested command.
pub fn execute(cli: &Cli) -> Result<Emit, Failure> {
    let start = Instant::now();
    let g = &cli.global;
    let spec = g
        .group
        .as_deref()
        .ok_or_else(|| Failure::usage("--group is required"))?;
    let limits = Limits {
        max_order: g.max_order,
        max_classes: g.max_classes,
        ..Limits::default()
    };
    let ctx = Pipeline::from_spec(spec, limits)?;
    let mut emit = commands::dispatch(&cli.command, &ctx, g.format)?;
    if g.meta && g.format == Format::Json {
        emit.body = render::with_meta(&emit.body, start.elapsed())?;
    }
    Ok(emit)
}
