//! `crxkit`: synthesis, lowering, pulse compilation, verification, and
//! metrics for the nearest-neighbor n-qubit Toffoli decomposition.

use circuit_core::{circuit_to_json, GateKind};
use clap::{Parser, Subcommand, ValueEnum};
use cli::{qasm, BlockMeta, CliError, LowerOutput};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sim::{czx_matrix, equiv_up_to_phase, toffoli_matrix, unitary_of, C64, UnitaryMatrix};
use std::io::Write as _;
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "crxkit", about = "Nearest-neighbor Toffoli synthesis toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Qasm,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Target {
    Toffoli,
    Czx,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the n-qubit decomposition (backbone plus phase layers).
    Synth {
        #[arg(long)]
        n: usize,
        /// Emit only the controlled-Rx backbone (no phase layers).
        #[arg(long)]
        czx: bool,
        /// Fuse each phase gate into its partner controlled-Rx, yielding
        /// controlled root-of-X gates.
        #[arg(long)]
        fused: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Output path (stdout when omitted).
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Lower the decomposition to nearest-neighbor gates on a linear chain.
    Lower {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compile a local circuit (JSON) to an NMR pulse schedule.
    CompileNmr {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check a circuit (or pulse schedule) against an oracle up to global phase.
    Verify {
        #[arg(long)]
        input: PathBuf,
        /// Treat the input as a pulse schedule instead of a circuit.
        #[arg(long)]
        pulse: bool,
        #[arg(long, value_enum, default_value = "toffoli")]
        target: Target,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Seed for the randomized statevector cross-check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Print depth, per-kind sizes, and the comparison constants.
    Stats {
        #[arg(long)]
        n: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            // One line, machine-parseable: "error: <reason>".
            eprintln!("error: {e}");
            std::process::exit(2);
        }
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

fn require_n(n: usize) -> Result<(), CliError> {
    if n < 3 {
        return Err(CliError::BadArg(format!(
            "n must be at least 3, got {n}"
        )));
    }
    Ok(())
}

fn run(cmd: Command) -> Result<i32, CliError> {
    match cmd {
        Command::Synth {
            n,
            czx,
            fused,
            format,
            output,
        } => {
            require_n(n)?;
            if czx && fused {
                return Err(CliError::BadArg(
                    "--czx and --fused are mutually exclusive (the backbone has no phase gates to fuse)".to_string(),
                ));
            }
            let circuit = if czx {
                synth::gen_czx(n)?
            } else if fused {
                synth::gen_toffoli_fused(n)?
            } else {
                synth::gen_toffoli(n)?
            };
            let text = match format {
                Format::Json => circuit_to_json(&circuit),
                Format::Qasm => qasm::export_qasm(&circuit)?,
            };
            emit(&text, &output)?;
            Ok(0)
        }
        Command::Lower { n, output } => {
            require_n(n)?;
            let lowered = localize::lower_toffoli(n)?;
            let blocks = localize::lower_pipeline(n)?
                .iter()
                .map(BlockMeta::of)
                .collect();
            let doc = LowerOutput {
                width: n,
                circuit: serde_json::from_str(&circuit_to_json(&lowered))
                    .expect("own serialization is valid JSON"),
                blocks,
            };
            emit(
                &serde_json::to_string_pretty(&doc).expect("serialization cannot fail"),
                &output,
            )?;
            Ok(0)
        }
        Command::CompileNmr { input, output } => {
            let text = std::fs::read_to_string(&input)?;
            let circuit = cli::read_circuit(&text)?;
            let sched = nmr::compile_circuit(&circuit)?;
            emit(&nmr::schedule_to_json(&sched), &output)?;
            Ok(0)
        }
        Command::Verify {
            input,
            pulse,
            target,
            tolerance,
            seed,
        } => {
            if tolerance <= 0.0 {
                return Err(CliError::BadArg(format!(
                    "tolerance must be positive, got {tolerance}"
                )));
            }
            let text = std::fs::read_to_string(&input)?;
            let (u, n) = if pulse {
                let sched = nmr::schedule_from_json(&text)?;
                (nmr::pulse_unitary(&sched)?, sched.width)
            } else {
                let circuit = cli::read_circuit(&text)?;
                (unitary_of(&circuit)?, circuit.width())
            };
            let oracle = match target {
                Target::Toffoli => toffoli_matrix(n),
                Target::Czx => czx_matrix(n),
            };
            let report = equiv_up_to_phase(&u, &oracle, tolerance)?;
            let state_dev = state_cross_check(&u, &oracle, report.phase, seed);
            println!(
                "equivalent={} phase=({:+.12e},{:+.12e}) max_deviation={:.6e} state_deviation={:.6e} tolerance={:.1e}",
                report.equivalent,
                report.phase.re,
                report.phase.im,
                report.max_deviation,
                state_dev,
                tolerance
            );
            Ok(if report.equivalent { 0 } else { 1 })
        }
        Command::Stats { n } => {
            require_n(n)?;
            let backbone = synth::gen_czx(n)?;
            let full = synth::gen_toffoli(n)?;
            let size = full.size();
            println!("n = {n}");
            println!("depth(backbone) = {}", backbone.depth());
            println!("depth(full) = {}", full.depth());
            for kind in GateKind::ALL {
                let count = size.get(kind);
                if count > 0 {
                    println!("size.{} = {count}", kind.tag());
                }
            }
            println!("size.total = {}", size.total());
            println!("constant 8n-20 = {}", 8 * n as i64 - 20);
            println!("constant 2n-3 = {}", 2 * n - 3);
            println!("constant 14n-21 = {}", 14 * n - 21);
            Ok(0)
        }
    }
}

/// Deterministic random-state cross-check: applies both matrices to one
/// random normalized state and reports the residual after removing the
/// recovered global phase.
fn state_cross_check(u: &UnitaryMatrix, oracle: &UnitaryMatrix, phase: C64, seed: u64) -> f64 {
    let dim = u.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut state: Vec<C64> = (0..dim)
        .map(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let norm = state.iter().map(|v| v.norm_sqr()).sum::<f64>().sqrt();
    state.iter_mut().for_each(|v| *v /= norm);
    let a = u.apply(&state);
    let b = oracle.apply(&state);
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - phase * y).norm())
        .fold(0.0, f64::max)
}
