use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use relqubit::UnitAxis;
use relqubit_cli::commands::{self, FockTarget, Generator};
use relqubit_cli::document::{read_pipeline, StateDocument};
use relqubit_cli::error::{CliError, Result};

#[derive(Parser)]
#[command(
    name = "relqubit",
    version,
    about = "Weyl spinors, Lorentz transformations and ladder-operator checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ray coordinate, sphere point and Bloch 4-vector of a Weyl state.
    Bloch { state: PathBuf },
    /// Run a state through a pipeline of transformations.
    Transform { state: PathBuf, pipeline: PathBuf },
    /// Sample a rotation or boost orbit as CSV.
    Orbit {
        state: PathBuf,
        #[arg(long, value_enum)]
        generator: Generator,
        /// Unit axis as `x,y,z`.
        #[arg(long, default_value = "0,0,1")]
        axis: String,
        #[arg(long, default_value_t = 65)]
        steps: usize,
        #[arg(long, allow_negative_numbers = true)]
        max_param: f64,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print both no-go witnesses.
    Nogo {
        #[arg(long, default_value_t = 4)]
        dim: usize,
        #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
        rapidity: f64,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check fermionic or truncated bosonic ladder relations.
    Fock {
        #[arg(
            long,
            conflicts_with = "bose_dim",
            required_unless_present = "bose_dim"
        )]
        modes: Option<usize>,
        #[arg(long)]
        bose_dim: Option<usize>,
    },
}

fn parse_axis(text: &str) -> Result<UnitAxis> {
    let parts = text
        .split(',')
        .map(|s| s.trim().parse::<f64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| CliError::Input(format!("--axis `{text}`: {e}")))?;
    let [x, y, z] = parts[..] else {
        return Err(CliError::Input(format!(
            "--axis `{text}` needs three components"
        )));
    };
    UnitAxis::new([x, y, z]).map_err(|e| CliError::Input(format!("--axis: {e}")))
}

fn run(command: Command) -> Result<()> {
    let output = match command {
        Command::Bloch { state } => commands::bloch(&StateDocument::read(&state)?)?,
        Command::Transform { state, pipeline } => {
            let state = StateDocument::read(&state)?;
            commands::transform(&state, &read_pipeline(&pipeline)?)?
        }
        Command::Orbit {
            state,
            generator,
            axis,
            steps,
            max_param,
            out,
        } => {
            let axis = parse_axis(&axis)?;
            let state = StateDocument::read(&state)?;
            let rows = commands::orbit(&state, generator, axis, steps, max_param)?;
            match out {
                Some(path) => {
                    let io = |e: std::io::Error| {
                        CliError::Io(format!("cannot write {}: {e}", path.display()))
                    };
                    let file = std::fs::File::create(&path).map_err(io)?;
                    commands::write_orbit_csv(&rows, std::io::BufWriter::new(file)).map_err(io)?;
                }
                None => commands::write_orbit_csv(&rows, std::io::stdout().lock())
                    .map_err(|e| CliError::Io(format!("cannot write stdout: {e}")))?,
            }
            return Ok(());
        }
        Command::Nogo {
            dim,
            rapidity,
            samples,
            seed,
        } => commands::nogo(dim, rapidity, samples, seed)?,
        Command::Fock { modes, bose_dim } => {
            let target = match (modes, bose_dim) {
                (Some(n), _) => FockTarget::Modes(n),
                (None, Some(d)) => FockTarget::BoseDim(d),
                (None, None) => unreachable!("clap requires one of --modes, --bose-dim"),
            };
            commands::fock_report(target)?
        }
    };
    std::io::stdout()
        .lock()
        .write_all(output.as_bytes())
        .map_err(|e| CliError::Io(format!("cannot write stdout: {e}")))
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("relqubit: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
