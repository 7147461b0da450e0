use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use omx::cli::{self, CouplingArgs, QndArgs, SimulateArgs, SpectrumArgs, SweepArgs};
use omx::config::DeviceConfig;
use omx::output::write_atomic;

const EXIT_GOLDEN_FAILED: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_PHYSICS: u8 = 3;

fn long_version() -> &'static str {
    let text = format!("{}\n{}", env!("CARGO_PKG_VERSION"), omx::constants::table());
    Box::leak(text.into_boxed_str())
}

#[derive(Parser)]
#[command(name = "omx", version, long_version = long_version(), about = "Quadratic optomechanics pipelines")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Coupling coefficients from field files.
    Coupling {
        #[command(flatten)]
        args: CouplingArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Thermal x² and detected optical spectra.
    Spectrum {
        #[command(flatten)]
        args: SpectrumArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Detected PSD at 2ω_m versus detuning.
    Sweep {
        #[command(flatten)]
        args: SweepArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Langevin simulation and x² periodogram.
    Simulate {
        #[command(flatten)]
        args: SimulateArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// QND phonon-measurement figures of merit.
    Qnd {
        #[command(flatten)]
        args: QndArgs,
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Runs the acceptance criteria on the shipped configs.
    Golden {
        /// Also write the report to this file.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

/// Writes to stdout; a closed downstream pipe is not an error.
fn print_stdout(text: &str) -> omx::Result<()> {
    let mut lock = io::stdout().lock();
    match lock.write_all(text.as_bytes()).and_then(|()| lock.flush()) {
        Err(source) if source.kind() != io::ErrorKind::BrokenPipe => Err(omx::Error::Io {
            path: "<stdout>".into(),
            source,
        }),
        _ => Ok(()),
    }
}

fn emit(out: Option<&Path>, text: &str) -> omx::Result<()> {
    match out {
        Some(p) => write_atomic(p, text),
        None => print_stdout(text),
    }
}

fn run(cli: Cli) -> Result<bool, (&'static str, omx::Error)> {
    match cli.command {
        Command::Coupling { args, out } => {
            let cfg = DeviceConfig::load(&args.config).map_err(|e| ("config", e))?;
            let csv = cli::coupling_csv(&cfg).map_err(|e| ("coupling", e))?;
            emit(out.as_deref(), &csv).map_err(|e| ("output", e))?;
        }
        Command::Spectrum { args, out } => {
            let cfg = DeviceConfig::load(&args.config).map_err(|e| ("config", e))?;
            let csv = cli::spectrum_csv(&cfg, &args).map_err(|e| ("spectrum", e))?;
            emit(out.as_deref(), &csv).map_err(|e| ("output", e))?;
        }
        Command::Sweep { args, out } => {
            let cfg = DeviceConfig::load(&args.config).map_err(|e| ("config", e))?;
            let csv = cli::sweep_csv(&cfg, &args).map_err(|e| ("sweep", e))?;
            emit(out.as_deref(), &csv).map_err(|e| ("output", e))?;
        }
        Command::Simulate { args, out } => {
            let (csv, traj) = cli::simulate_csv(&args).map_err(|e| ("simulate", e))?;
            if let (Some(path), Some(traj)) = (&args.dump_traj, traj) {
                write_atomic(path, &traj).map_err(|e| ("output", e))?;
            }
            emit(out.as_deref(), &csv).map_err(|e| ("output", e))?;
        }
        Command::Qnd { args, out } => {
            let (report, csv) = cli::qnd_report(&args).map_err(|e| ("qnd", e))?;
            print_stdout(&report).map_err(|e| ("output", e))?;
            emit(out.as_deref(), &csv).map_err(|e| ("output", e))?;
        }
        Command::Golden { out } => {
            let run = omx::golden::run_all();
            let report = run.render();
            for (o, elapsed) in &run.outcomes {
                log::info!("criterion {} took {:.3} s", o.id, elapsed.as_secs_f64());
            }
            emit(None, &report).map_err(|e| ("output", e))?;
            if let Some(p) = out {
                write_atomic(p, &report).map_err(|e| ("output", e))?;
            }
            return Ok(run.all_passed());
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_GOLDEN_FAILED),
        Err((stage, e)) => {
            eprintln!("omx: {stage} failed: {e}");
            ExitCode::from(if e.is_input_error() { EXIT_INPUT } else { EXIT_PHYSICS })
        }
    }
}
