use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use horoflex::examples::DEFAULT_EHM_BOUND;
use horoflex::{load_datum, max_rank_from_env, CliError, Format, Rendered};

/// Flexibility certificates for normal affine horospherical varieties.
///
/// Exit status: 0 when certified or all checks pass, 2 when the variety is
/// outside the covered class, 1 on errors and failed checks.
#[derive(Parser)]
#[command(name = "horoflex", version)]
struct Cli {
    #[arg(long, value_enum, global = true, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide flexibility of a datum and print grading witnesses.
    Check { file: PathBuf },
    /// Replace the semigroup by its saturation.
    Saturate {
        file: PathBuf,
        /// Also write the saturated datum to this file.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// List orbits, one per face of the weight cone.
    Orbits { file: PathBuf },
    /// Grading witness for one face.
    Grading {
        file: PathBuf,
        #[arg(long)]
        face: usize,
    },
    /// Check the E_{p/q,m} construction.
    Ehm {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        m: i64,
        /// Degree bound for invariant-monomial enumeration.
        #[arg(long, default_value_t = DEFAULT_EHM_BOUND)]
        bound: u32,
    },
    /// Built-in examples.
    Examples {
        #[command(subcommand)]
        action: ExamplesCommand,
    },
}

#[derive(Subcommand)]
enum ExamplesCommand {
    List,
    Run { name: String },
}

fn run(cli: Cli) -> Result<Rendered, CliError> {
    let max_rank = max_rank_from_env()?;
    let format = cli.format;
    match cli.command {
        Command::Check { file } => {
            let (spec, d) = load_datum(&file, max_rank)?;
            horoflex::run_check(&spec, &d, format)
        }
        Command::Saturate { file, output } => {
            let (spec, d) = load_datum(&file, max_rank)?;
            horoflex::run_saturate(&spec, &d, format, output.as_deref())
        }
        Command::Orbits { file } => {
            let (spec, d) = load_datum(&file, max_rank)?;
            Ok(horoflex::run_orbits(&spec, &d, format))
        }
        Command::Grading { file, face } => {
            let (spec, d) = load_datum(&file, max_rank)?;
            horoflex::run_grading(&spec, &d, face, format)
        }
        Command::Ehm { p, q, m, bound } => horoflex::run_ehm(p, q, m, bound, format),
        Command::Examples { action } => match action {
            ExamplesCommand::List => Ok(horoflex::run_list(format)),
            ExamplesCommand::Run { name } => horoflex::run_example(&name, format, max_rank),
        },
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(r) => {
            let _ = std::io::stdout().write_all(r.stdout.as_bytes());
            ExitCode::from(r.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
