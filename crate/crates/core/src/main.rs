use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};

use semideriv::cli::{cmd_check, cmd_decompose, cmd_kernel, cmd_slice, CliError, KernelMode, Law, ProblemFile};
use semideriv::Error;

#[derive(Parser)]
#[command(name = "semideriv", version, about = "Weight decompositions, slices and kernels of diagonal derivations")]
struct Cli {
    /// Problem file.
    #[arg(long, global = true)]
    file: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Split an expression into weight-homogeneous components.
    Decompose {
        #[arg(long)]
        expr: Option<String>,
    },
    /// Bézout slice monomial and localization denominator.
    Slice,
    /// Kernel generators.
    #[command(group(ArgGroup::new("mode").args(["localized", "in_b", "brute"])))]
    Kernel {
        /// Generators u_i = x_i s^(-λ_i) of the kernel on B_s.
        #[arg(long)]
        localized: bool,
        /// Hilbert-basis monomials generating the kernel on B (default).
        #[arg(long = "in-B")]
        in_b: bool,
        /// Every weight-zero monomial up to the given total degree.
        #[arg(long, value_name = "D")]
        brute: Option<u32>,
        /// Names for u_1..u_n, comma or space separated.
        #[arg(long)]
        uvars: Option<String>,
    },
    /// Check a law: leibniz, conjugate, aD, or locfin N.
    Check {
        law: String,
        bound: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<semideriv::cli::Report, CliError> {
    let path = cli
        .file
        .ok_or_else(|| CliError::Input(Error::InvalidArgument("--file is required".into())))?;
    let text = std::fs::read_to_string(&path).map_err(|e| {
        CliError::Input(Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
    })?;
    let pf = ProblemFile::parse(&text)?;
    match cli.command {
        Command::Decompose { expr } => cmd_decompose(&pf, expr.as_deref()),
        Command::Slice => cmd_slice(&pf),
        Command::Kernel { localized, in_b: _, brute, uvars } => {
            let mode = match (localized, brute) {
                (true, _) => KernelMode::Localized,
                (false, Some(d)) => KernelMode::Brute(d),
                (false, None) => KernelMode::InB,
            };
            cmd_kernel(&pf, mode, uvars.as_deref())
        }
        Command::Check { law, bound } => {
            let law = match (law.as_str(), bound) {
                ("leibniz", None) => Law::Leibniz,
                ("conjugate", None) => Law::Conjugate,
                ("aD", None) => Law::ScalarMultiple,
                ("locfin", Some(n)) => Law::LocallyFinite(n),
                ("locfin", None) => {
                    return Err(CliError::Input(Error::InvalidArgument(
                        "locfin needs a bound, e.g. 'check locfin 4'".into(),
                    )))
                }
                (other, _) => {
                    return Err(CliError::Input(Error::InvalidArgument(format!(
                        "unknown law {other:?}; expected leibniz, conjugate, aD or locfin N"
                    ))))
                }
            };
            cmd_check(&pf, law)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(report) => {
            print!("{report}");
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("{e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
