use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use liminal_core::solve::Budget;

mod commands;

use commands::CliError;

/// Burning, cooling and k-liminal burning on graphs.
#[derive(Debug, Parser)]
#[command(name = "liminal", version)]
struct Cli {
    #[command(flatten)]
    limits: Limits,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Limits {
    /// Search nodes allowed per exact solve.
    #[arg(long, global = true, env = "LIMINAL_NODE_LIMIT", default_value_t = liminal_core::solve::DEFAULT_NODE_LIMIT)]
    node_limit: u64,
    /// Wall-clock seconds allowed per exact solve.
    #[arg(long, global = true, env = "LIMINAL_TIME_LIMIT")]
    time_limit: Option<f64>,
}

impl Limits {
    fn apply(&self, b: Budget) -> Budget {
        b.with_node_limit(self.node_limit)
            .with_time_limit(self.time_limit.map(Duration::from_secs_f64))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Game {
    Burn,
    Cool,
    Liminal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Paths,
    Kings,
    Cube,
    Sharp,
    Cooling,
    Kstar,
    All,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact value of one game on one graph.
    Solve {
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        game: Game,
        /// Reveal size, required for the liminal game.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Cooling number, plus the explicit long sequence on strong products.
    Cool {
        #[arg(long)]
        graph: String,
    },
    /// k-liminal burning number.
    Liminal {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        k: usize,
    },
    /// b_k for k = 1..=k-max.
    Sweep {
        #[arg(long)]
        graph: String,
        /// Defaults to the number of vertices.
        #[arg(long)]
        k_max: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Lower bound on the burning number of the d-fold strong product of P_n.
    Bound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: usize,
        /// Width of the root bracket, as p/q or a decimal.
        #[arg(long, default_value = "1/1000000000000")]
        tol: String,
    },
    /// Packs the odd tiles 2m-1, ..., 3, 1 into [1, n]^d (d = 1 or 2).
    Pack {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        m: usize,
    },
    /// Generating-function lower bound for k* on P_{n^2}.
    Kstar {
        #[arg(long)]
        n: usize,
    },
    /// Solver values next to closed forms and bounds.
    Compare {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<u64>,
        #[arg(long, default_value_t = 3)]
        k_max: u64,
        /// Dimension for the cooling suite.
        #[arg(long, default_value_t = 2)]
        d: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Replays a source sequence file `{"graph": spec, "sources": [..]}`.
    Replay { file: PathBuf },
    /// Runs the game server.
    Serve {
        #[arg(long, default_value = "127.0.0.1:8080")]
        addr: String,
        /// Directory for session logs; sessions stay in memory without it.
        #[arg(long)]
        data_dir: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let limits = &cli.limits;
    match cli.command {
        Command::Solve { graph, game, k } => commands::solve(&graph, game, k, |b| limits.apply(b)),
        Command::Cool { graph } => commands::cool(&graph, &limits.apply(Budget::cooling())),
        Command::Liminal { graph, k } => commands::solve(&graph, Game::Liminal, Some(k), |b| limits.apply(b)),
        Command::Sweep { graph, k_max, format } => commands::sweep(&graph, k_max, format, &limits.apply(Budget::liminal())),
        Command::Bound { n, d, tol } => commands::bound(n, d, &tol),
        Command::Pack { n, d, m } => commands::pack(n, d, m, limits.node_limit),
        Command::Kstar { n } => commands::kstar(n),
        Command::Compare { suite, n_max, k_max, d, format } => {
            commands::compare(suite, n_max, k_max, d, format, |b| limits.apply(b))
        }
        Command::Replay { file } => commands::replay(&file),
        Command::Serve { addr, data_dir } => commands::serve(&addr, data_dir),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if let CliError::Unsolved { partial: Some(out), .. } = &e {
                print!("{out}");
            }
            eprintln!("liminal: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
