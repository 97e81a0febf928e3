//! `bialg`: batch front-end for constructing and classifying Lie bialgebra structures.

mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

const INPUT_ERROR: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "bialg", version, about = "Exact r-matrix constructions and cohomology classifications")]
struct Cli {
    /// Series precision: number of h-adic digits kept.
    #[arg(long, global = true, default_value_t = 16)]
    prec: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here (atomically) instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify K[e]/(e² + pe + q) as dual numbers, split, or ramified.
    ClassifyAlgebra {
        #[arg(long, allow_hyphen_values = true)]
        p: String,
        #[arg(long, allow_hyphen_values = true)]
        q: String,
    },
    /// Build the r-matrix of an admissible triple with CYBE and symmetry certificates.
    BuildR {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long)]
        rank: usize,
        /// `empty`, a JSON file, or inline JSON.
        #[arg(long)]
        triple: Option<String>,
    },
    /// Check CYB(r) = 0 and r + r²¹ = c·Ω for a tensor.
    VerifyR {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: String,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        c: String,
    },
    /// List the admissible triples of a root system.
    EnumerateTriples {
        #[arg(long = "type")]
        root_type: String,
        #[arg(long)]
        rank: usize,
    },
    /// Test whether a matrix fixes r_BD under the diagonal adjoint action.
    Centralizer {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        triple: Option<String>,
        #[arg(long)]
        matrix: String,
    },
    /// Test the cocycle condition and normalize to a class representative.
    ClassifyCocycle {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        triple: Option<String>,
        #[arg(long)]
        matrix: String,
    },
    /// Normalize a twisted cocycle for r_DJ on sl(n); `--matrix x0` uses the canonical X₀.
    ClassifyTwisted {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        matrix: String,
    },
    /// Check isotropy, closure and transversality of a subspace of sl(n) ⊗ A.
    CheckLagrangian {
        #[arg(long)]
        n: usize,
        /// List of generator matrices, or `w0` for the standard complement.
        #[arg(long)]
        w: String,
        #[arg(long, default_value = "RAMIFIED")]
        kind: String,
        /// Reference subspace; defaults to L for K[j] and g(K) otherwise.
        #[arg(long)]
        l: Option<String>,
    },
}

fn run(cli: &Cli) -> anyhow::Result<commands::Outcome> {
    if cli.prec < 4 {
        anyhow::bail!("--prec must be at least 4");
    }
    let prec = cli.prec;
    match &cli.command {
        Command::ClassifyAlgebra { p, q } => commands::classify_algebra(p, q, prec),
        Command::BuildR { root_type, rank, triple } => commands::build_r(root_type, *rank, triple.as_deref(), prec),
        Command::VerifyR { algebra, n, r, c } => commands::verify_r(algebra, *n, r, c, prec),
        Command::EnumerateTriples { root_type, rank } => commands::enumerate(root_type, *rank, prec),
        Command::Centralizer { algebra, n, triple, matrix } => {
            commands::centralizer(algebra, *n, triple.as_deref(), matrix, prec)
        }
        Command::ClassifyCocycle { algebra, n, triple, matrix } => {
            commands::classify_cocycle(algebra, *n, triple.as_deref(), matrix, prec)
        }
        Command::ClassifyTwisted { n, matrix } => commands::classify_twisted(*n, matrix, prec),
        Command::CheckLagrangian { n, w, kind, l } => commands::check_lagrangian(*n, w, kind, l.as_deref(), prec),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let Format::Json = cli.format;
    let out = match run(&cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(INPUT_ERROR);
        }
    };
    let text = io::render(&out.report);
    match &cli.output {
        Some(path) => {
            if let Err(e) = io::write_atomic(path, &text) {
                eprintln!("error: {e:#}");
                return ExitCode::from(INPUT_ERROR);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(out.code as u8)
}
