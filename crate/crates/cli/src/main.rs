//! `maxcomm`: spectral analysis of max-plus and nonnegative matrices from
//! matrix files.

mod commands;
mod error;
mod matfile;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use maxcomm::generate::FamilyKind;
use maxcomm::scalar::with_epsilon;
use maxcomm::{FloatScalar, TropScalar};

use commands::{Classical, Tropical};
use error::{CliError, CliResult};
use report::{Mode, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ScalarMode {
    /// Exact rationals.
    Exact,
    /// Floating point, equalities within --eps.
    Float,
}

#[derive(Debug, Parser)]
#[command(name = "maxcomm", version, about = "Max-plus spectral theory of commuting matrices")]
struct Cli {
    #[arg(long, value_enum, default_value_t = ScalarMode::Exact, global = true)]
    mode: ScalarMode,
    /// Tolerance for float mode and for classical commands.
    #[arg(long, default_value_t = 1e-9, global = true)]
    eps: f64,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for gen-commuting.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Perron root, classes and spectrum.
    Spectrum { file: PathBuf },
    /// Kleene star.
    Star { file: PathBuf },
    /// Critical digraph.
    Critical { file: PathBuf },
    /// Spectral projector of a matrix with Perron root 0.
    Projector {
        file: PathBuf,
        /// Divide by the Perron root first.
        #[arg(long)]
        normalize: bool,
        /// Also compute the projector as a limit, with this iteration cap.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Frobenius normal form.
    Fnf { file: PathBuf },
    /// Eigencone generators for one eigenvalue, or for all of them.
    Eigencone {
        file: PathBuf,
        #[arg(long)]
        value: Option<String>,
    },
    /// Whether the matrices pairwise commute.
    Commute {
        #[arg(num_args = 2.., required = true)]
        files: Vec<PathBuf>,
    },
    /// Common eigenvector of a commuting family.
    CommonEig {
        #[arg(num_args = 1.., required = true)]
        files: Vec<PathBuf>,
        /// Member (1-based) whose eigenvalue is prescribed.
        #[arg(long, default_value_t = 1)]
        index: usize,
        /// Eigenvalue of that member; its Perron root by default.
        #[arg(long)]
        value: Option<String>,
    },
    /// Intersection of principal eigencones.
    IntersectPrincipal {
        #[arg(num_args = 1.., required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        normalize: bool,
    },
    /// Common critical nodes of two commuting irreducible matrices.
    Eigennode { a: PathBuf, b: PathBuf },
    /// Shared class structure of a family with distinct class roots.
    Distroots {
        #[arg(num_args = 1.., required = true)]
        files: Vec<PathBuf>,
        /// Max polynomial such as `x1*x2 + 2*x1^2`.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Classes, roots and distinguished eigenvalues of a nonnegative matrix.
    ClassicalDecompose { file: PathBuf },
    /// Common nonnegative eigenvector of a commuting nonnegative pair.
    ClassicalCommonEig {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        value: f64,
    },
    /// Shared class structure of nonnegative matrices with distinct roots.
    ClassicalDistroots {
        #[arg(num_args = 1.., required = true)]
        files: Vec<PathBuf>,
        /// Real polynomial such as `x1^2*x2 - x1*x2`.
        #[arg(long)]
        poly: Option<String>,
    },
    /// Complete reducibility of A when B is irreducible.
    ClassicalReducibility { a: PathBuf, b: PathBuf },
    /// Random commuting pair.
    GenCommuting {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_kind)]
        kind: FamilyKind,
        /// Directory for A.mpx and B.mpx.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_kind(text: &str) -> Result<FamilyKind, String> {
    text.parse()
}

enum Plan {
    Tropical(Tropical, Vec<PathBuf>),
    Classical(Classical, Vec<PathBuf>),
    Generate {
        kind: FamilyKind,
        n: usize,
        out: Option<PathBuf>,
    },
}

fn plan(command: Command) -> Plan {
    use Command as C;
    let t = |cmd, files| Plan::Tropical(cmd, files);
    let c = |cmd, files| Plan::Classical(cmd, files);
    match command {
        C::Spectrum { file } => t(Tropical::Spectrum, vec![file]),
        C::Star { file } => t(Tropical::Star, vec![file]),
        C::Critical { file } => t(Tropical::Critical, vec![file]),
        C::Projector { file, normalize, limit } => {
            t(Tropical::Projector { normalize, limit }, vec![file])
        }
        C::Fnf { file } => t(Tropical::Fnf, vec![file]),
        C::Eigencone { file, value } => t(Tropical::Eigencone { value }, vec![file]),
        C::Commute { files } => t(Tropical::Commute, files),
        C::CommonEig { files, index, value } => t(Tropical::CommonEig { index, value }, files),
        C::IntersectPrincipal { files, normalize } => {
            t(Tropical::IntersectPrincipal { normalize }, files)
        }
        C::Eigennode { a, b } => t(Tropical::Eigennode, vec![a, b]),
        C::Distroots { files, poly } => t(Tropical::Distroots { poly }, files),
        C::ClassicalDecompose { file } => c(Classical::Decompose, vec![file]),
        C::ClassicalCommonEig { a, b, value } => c(Classical::CommonEig { value }, vec![a, b]),
        C::ClassicalDistroots { files, poly } => c(Classical::Distroots { poly }, files),
        C::ClassicalReducibility { a, b } => c(Classical::Reducibility, vec![a, b]),
        C::GenCommuting { n, kind, out } => Plan::Generate { kind, n, out },
    }
}

fn execute(cli: Cli) -> CliResult<Report> {
    if !(cli.eps > 0.0 && cli.eps.is_finite()) {
        return Err(CliError::Usage("--eps must be a positive number".into()));
    }
    match plan(cli.command) {
        Plan::Tropical(cmd, paths) => {
            let files = commands::read_all(&paths)?;
            match cli.mode {
                ScalarMode::Exact => commands::run_tropical::<TropScalar>(
                    &cmd,
                    &files,
                    Mode { kind: "exact", epsilon: None },
                ),
                ScalarMode::Float => with_epsilon(cli.eps, || {
                    commands::run_tropical::<FloatScalar>(
                        &cmd,
                        &files,
                        Mode { kind: "float", epsilon: Some(cli.eps) },
                    )
                }),
            }
        }
        Plan::Classical(cmd, paths) => {
            let files = commands::read_all(&paths)?;
            commands::run_classical(&cmd, &files, cli.eps)
        }
        Plan::Generate { kind, n, out } => commands::gen_commuting(kind, n, cli.seed, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json;
    match execute(cli) {
        Ok(report) => {
            let text = if json {
                format!("{}\n", report.to_json())
            } else {
                report.to_text()
            };
            // A closed pipe (e.g. `| head`) is not a failure of the command.
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
