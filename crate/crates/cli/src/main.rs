//! `hodge-micro`: runs a verification suite and prints its report.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hodge_cli::{AlgebraName, CliError, Report};
use plumbing::EndoVariant;

#[derive(Parser)]
#[command(name = "hodge-micro", version, about = "Exact verification suites for monodromic and plumbing computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Md,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Core,
    Relcore,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algebra {
    Agamma,
    Lgamma,
    Mgamma,
}

#[derive(Subcommand)]
enum Command {
    /// Hom/Ext fixtures between catalog blocks.
    VerifyHomtables {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        smax: u32,
        /// Test hook: replace the A catalog by B so that fixtures fail.
        #[arg(long, hide = true)]
        corrupt_catalog: bool,
    },
    /// Fourier transform of a tuple, or an involution round trip.
    Fourier {
        /// JSON tuple {"psi", "phi", "can", "var"}.
        #[arg(long, conflicts_with_all = ["roundtrip", "dims", "trials"], required_unless_present = "roundtrip")]
        input: Option<PathBuf>,
        #[arg(long, requires_all = ["dims", "trials"])]
        roundtrip: bool,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        dims: Option<u32>,
        #[arg(long)]
        trials: Option<u32>,
    },
    /// Bigraded endomorphism table of the towers with its cross-checks.
    Endo {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, value_enum)]
        variant: Variant,
        #[arg(long, default_value_t = 12)]
        a_cutoff: u32,
        #[arg(long, default_value_t = 12)]
        b_cutoff: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Koszul-duality suite for A_Γ, L_Γ or M_Γ.
    Koszul {
        #[arg(long, value_enum)]
        algebra: Algebra,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        n: u32,
        #[arg(long, default_value_t = 12)]
        cutoff: u32,
    },
    /// Bar cohomology of H*(ℙⁿ) against the wrapping sequence.
    Bar {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        pn: u32,
        #[arg(long)]
        degree_cutoff: u32,
    },
    /// Normal form of a tuple with a re-synthesis check.
    Decompose {
        #[arg(long)]
        input: PathBuf,
    },
}

fn read(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn run(command: Command) -> Result<(Report, Format), CliError> {
    let json = |r: Report| (r, Format::Json);
    match command {
        Command::VerifyHomtables { smax, corrupt_catalog } => {
            hodge_cli::verify_homtables(smax as usize, corrupt_catalog).map(json)
        }
        Command::Fourier {
            input,
            roundtrip,
            dims,
            trials,
        } => match (input, roundtrip) {
            (Some(path), false) => hodge_cli::fourier_input(&read(&path)?).map(json),
            (None, true) => {
                let (dims, trials) = (dims.unwrap_or(1), trials.unwrap_or(0));
                let seed = hodge_cli::seed_from_env()?;
                hodge_cli::fourier_roundtrip(dims as usize, trials as usize, seed).map(json)
            }
            _ => Err(CliError::Usage("give exactly one of --input or --roundtrip".into())),
        },
        Command::Endo {
            n,
            variant,
            a_cutoff,
            b_cutoff,
            format,
        } => {
            let variant = match variant {
                Variant::Core => EndoVariant::Core,
                Variant::Relcore => EndoVariant::Relcore,
            };
            let report = hodge_cli::endo(n as usize, variant, a_cutoff as i64, b_cutoff as i64)?;
            Ok((report, format))
        }
        Command::Koszul { algebra, n, cutoff } => {
            let algebra = match algebra {
                Algebra::Agamma => AlgebraName::Agamma,
                Algebra::Lgamma => AlgebraName::Lgamma,
                Algebra::Mgamma => AlgebraName::Mgamma,
            };
            hodge_cli::koszul(algebra, n as usize, cutoff).map(json)
        }
        Command::Bar { pn, degree_cutoff } => hodge_cli::bar(pn as usize, degree_cutoff).map(json),
        Command::Decompose { input } => hodge_cli::decompose_input(&read(&input)?).map(json),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((report, format)) => {
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            match format {
                Format::Json => println!("{}", report.to_json()),
                Format::Md => print!("{}", report.to_markdown()),
            }
            for c in report.failures() {
                eprintln!("check failed: {}", c.name);
            }
            ExitCode::from(if report.all_passed() { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
