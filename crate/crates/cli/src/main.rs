use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use sta_core::generate::{self, Kind, Params};
use sta_core::scalar::parse_rational;
use sta_core::suite::{run_suite_with, Counts, Suite, SuiteOptions};
use sta_core::transcribe::{transcribe_text, Direction};
use sta_core::{Error, FieldDocument, IdempotentSpec, WaveVector};

#[derive(Parser)]
#[command(name = "sta", version, about = "Exact spacetime algebra: generators, verification suites, transcriptions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a JSON report.
    Verify {
        /// algebra, calculus, bosonize, fermionize, gme, hertz, matrix or all
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Use this corpus size for every randomized check.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, hide = true)]
        flip_magnetic_sign: bool,
    },
    /// Emit an exact field of a known family as a field document.
    Generate {
        /// rest-solution, null-plane-wave, superpotential, hertz-rest or random-field
        kind: Kind,
        #[arg(long, value_parser = parse_rational_arg)]
        mass: Option<sta_core::Rational>,
        /// Wave vector as four comma-separated rationals.
        #[arg(long, value_parser = parse_wave_vector, allow_hyphen_values = true)]
        k: Option<WaveVector>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Carry a field document across the spinor/Maxwell dictionary.
    Transcribe {
        /// bosonize or fermionize
        direction: Direction,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "standard")]
        idempotent: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_rational_arg(s: &str) -> Result<sta_core::Rational, String> {
    parse_rational(s)
}

fn parse_wave_vector(s: &str) -> Result<WaveVector, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 4 {
        return Err(format!("expected 4 comma-separated components, got {}", parts.len()));
    }
    let mut k = Vec::with_capacity(4);
    for p in parts {
        k.push(parse_rational(p)?);
    }
    Ok(WaveVector::new(k.try_into().expect("length checked")))
}

enum Failure {
    Usage(String),
    Failed,
}

fn write_output(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Verify { suite, seed, count, out, flip_magnetic_sign } => {
            let counts = count.map(Counts::uniform).unwrap_or_default();
            let options = SuiteOptions {
                magnetic_sign: flip_magnetic_sign.then_some(-sta_core::spinor::MAGNETIC_SIGN),
            };
            let report = run_suite_with(suite, seed, counts, options);
            write_output(out.as_deref(), &report.to_json())?;
            let s = report.summary;
            eprintln!("{suite}: {} checks, {} passed, {} failed, {} skipped", s.total, s.pass, s.fail, s.skip);
            for c in report.checks.iter().filter(|c| c.status == sta_core::suite::Status::Fail) {
                eprintln!("FAIL {}: {}", c.name, c.detail.as_deref().unwrap_or("nonzero residual"));
            }
            if report.all_passed() {
                Ok(())
            } else {
                Err(Failure::Failed)
            }
        }
        Command::Generate { kind, mass, k, seed, out } => {
            let defaults = Params::default();
            let params = Params {
                mass: mass.unwrap_or(defaults.mass),
                k: k.unwrap_or(defaults.k),
                seed,
            };
            let field = generate::generate(kind, &params).map_err(|e| match e {
                Error::GeneratorResidual { .. } => {
                    eprintln!("error: {e}");
                    Failure::Failed
                }
                other => usage(other),
            })?;
            write_output(out.as_deref(), &FieldDocument::from_field(&field).to_json())
        }
        Command::Transcribe { direction, input, idempotent, out } => {
            if idempotent != "standard" {
                return Err(Failure::Usage(format!("unknown idempotent {idempotent:?}; only \"standard\" is supported")));
            }
            let text = fs::read_to_string(&input).map_err(|e| Failure::Usage(format!("cannot read {}: {e}", input.display())))?;
            let doc = transcribe_text(direction, &text, &IdempotentSpec::standard())
                .map_err(|e| Failure::Usage(format!("{}: {e}", input.display())))?;
            write_output(out.as_deref(), &doc.to_json())?;
            if doc.residual_zero {
                Ok(())
            } else {
                eprintln!("{}: residual is nonzero", direction.as_str());
                Err(Failure::Failed)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Failed) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
