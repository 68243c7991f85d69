//! `tripack`: minimum triangle transversals and maximum triangle
//! packings for bilaterally complete tripartite graphs.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use tripack::generator::{GenMode, GenSpec};
use tripack::OracleBudget;
use tripack_cli::commands::{self, CliError, OracleArgs};

#[derive(Parser)]
#[command(
    name = "tripack",
    version,
    about = "Minimum triangle transversals and maximum triangle packings \
             for bilaterally complete tripartite graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve a graph file: minimum transversal and maximum packing.
    Solve {
        graph: PathBuf,
        /// Emit a single JSON object instead of text.
        #[arg(long)]
        machine: bool,
        /// Also write the constructed flow network as arc lines.
        #[arg(long, value_name = "FILE")]
        export_network: Option<PathBuf>,
    },
    /// Check certificate files against a graph (exit 14 on failure).
    Verify {
        graph: PathBuf,
        /// File of U-V edge tokens.
        #[arg(long, value_name = "FILE")]
        transversal: Option<PathBuf>,
        /// File of A-B-C triangle tokens.
        #[arg(long, value_name = "FILE")]
        packing: Option<PathBuf>,
        #[arg(long)]
        machine: bool,
    },
    /// Run exact reference oracles and cross-check their answers.
    Oracle {
        graph: PathBuf,
        /// Run every oracle (the default when no selection flag is given).
        #[arg(long)]
        all: bool,
        #[arg(long)]
        max_packing: bool,
        #[arg(long)]
        min_transversal: bool,
        #[arg(long)]
        uniform: bool,
        #[arg(long)]
        mao_cheng: bool,
        /// Also enumerate every minimum transversal.
        #[arg(long)]
        enumerate_min: bool,
        /// Override budget fields: triangles=, bc-edges=, bc-vertices=, seconds=.
        #[arg(long, value_name = "K=V,...")]
        budget: Option<String>,
        #[arg(long)]
        machine: bool,
    },
    /// Generate a seeded random instance as a graph file.
    Gen {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = ModeArg::Bilateral)]
        mode: ModeArg,
        /// Probability that a BC pair becomes an edge.
        #[arg(long, default_value_t = 0.5)]
        bc_density: f64,
        /// AB edge probability (general mode only).
        #[arg(long)]
        ab_density: Option<f64>,
        /// AC edge probability (general mode only).
        #[arg(long)]
        ac_density: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write to a file instead of stdout.
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// List the triangles of a graph file.
    Triangles {
        graph: PathBuf,
        #[arg(long)]
        machine: bool,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    /// Complete AB and AC sides, random BC side.
    Bilateral,
    /// All three sides complete.
    Complete,
    /// All three sides random.
    General,
}

fn density_in_range(name: &str, value: f64) -> Result<f64, CliError> {
    if (0.0..=1.0).contains(&value) {
        Ok(value)
    } else {
        Err(CliError::Usage(format!(
            "--{name} must lie in [0, 1], got {value}"
        )))
    }
}

/// Resolves the mode flag and the optional side densities (which apply
/// only to general mode and default to the BC density there).
fn resolve_mode(
    mode: ModeArg,
    bc_density: f64,
    ab_density: Option<f64>,
    ac_density: Option<f64>,
) -> Result<GenMode, CliError> {
    if mode != ModeArg::General && (ab_density.is_some() || ac_density.is_some()) {
        return Err(CliError::Usage(
            "--ab-density and --ac-density apply only to --mode general".into(),
        ));
    }
    Ok(match mode {
        ModeArg::Bilateral => GenMode::BilaterallyComplete,
        ModeArg::Complete => GenMode::Complete,
        ModeArg::General => GenMode::General {
            ab_density: density_in_range("ab-density", ab_density.unwrap_or(bc_density))?,
            ac_density: density_in_range("ac-density", ac_density.unwrap_or(bc_density))?,
        },
    })
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Solve {
            graph,
            machine,
            export_network,
        } => commands::solve_cmd(&graph, machine, export_network.as_deref()),
        Command::Verify {
            graph,
            transversal,
            packing,
            machine,
        } => commands::verify_cmd(&graph, transversal.as_deref(), packing.as_deref(), machine),
        Command::Oracle {
            graph,
            all,
            max_packing,
            min_transversal,
            uniform,
            mao_cheng,
            enumerate_min,
            budget,
            machine,
        } => {
            let budget = match budget {
                Some(s) => commands::parse_budget(&s)?,
                None => OracleBudget::default(),
            };
            let args = OracleArgs {
                all,
                max_packing,
                min_transversal,
                uniform,
                mao_cheng,
                enumerate_min,
                budget,
                machine,
            };
            commands::oracle_cmd(&graph, &args)
        }
        Command::Gen {
            p,
            q,
            r,
            mode,
            bc_density,
            ab_density,
            ac_density,
            seed,
            out,
        } => {
            let spec = GenSpec {
                p,
                q,
                r,
                bc_density: density_in_range("bc-density", bc_density)?,
                mode: resolve_mode(mode, bc_density, ab_density, ac_density)?,
                seed,
            };
            commands::gen_cmd(&spec, out.as_deref())
        }
        Command::Triangles { graph, machine } => commands::triangles_cmd(&graph, machine),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            if !text.is_empty() {
                println!("{text}");
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
