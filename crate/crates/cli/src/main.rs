mod repl;
mod spec;

use std::fs;
use std::io;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use domgame_core::game::{
    solve, solve_parallel, GameError, Position, VerdictRecord, DEFAULT_BUDGET,
};
use domgame_core::graph::{find_involution, write_edge_list, InvolutionError};
use domgame_core::paths::{
    classify_standard, parse_position, solve_path_sum, PathError, PathMove, PathPosition,
};
use domgame_core::verify::run_suite;

const EXIT_USAGE: u8 = 1;
const EXIT_DISAGREE: u8 = 2;
const EXIT_BUDGET: u8 = 3;

/// A failed command: message for stderr and process exit code.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn budget(budget: u64) -> Self {
        Failure {
            code: EXIT_BUDGET,
            message: format!("node budget of {budget} exhausted"),
        }
    }
}

impl From<GameError> for Failure {
    fn from(e: GameError) -> Self {
        match e {
            GameError::BudgetExhausted { budget } => Failure::budget(budget),
            other => Failure::usage(other.to_string()),
        }
    }
}

impl From<PathError> for Failure {
    fn from(e: PathError) -> Self {
        match e {
            PathError::BudgetExhausted { budget } => Failure::budget(budget),
            other => Failure::usage(other.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(name = "domgame", version, about = "Exact solver for the snooker-domination game")]
struct Cli {
    /// Node budget per search (default: $DOMGAME_BUDGET, else 50000000).
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide who wins the game on a graph.
    Solve {
        /// Edge-list file or family:name:params, e.g. family:path:5.
        #[arg(long)]
        graph: String,
        #[arg(long)]
        json: bool,
        /// Evaluate root moves on this many threads.
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Classify a sum of paths, e.g. "P7^0 + P3^2 + P1^1".
    Classify {
        #[arg(long)]
        position: String,
    },
    /// Check closed-form predictions against the solver.
    Verify {
        /// Largest instance, in vertices.
        #[arg(long, default_value_t = 16)]
        cap: usize,
        /// Write the JSON report here.
        #[arg(long)]
        json: Option<String>,
    },
    /// Write a named graph as an edge list.
    Construct {
        /// name:params, e.g. sunlet:7.
        #[arg(long)]
        family: String,
        /// Output file (default: standard output).
        #[arg(long)]
        out: Option<String>,
    },
    /// Search for an order-two automorphism moving every vertex at least d.
    Involution {
        #[arg(long)]
        graph: String,
        #[arg(long, default_value_t = 3)]
        d: usize,
    },
    /// Play against the solver on standard input.
    Play {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        human_first: bool,
    },
}

fn budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var("DOMGAME_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Failure::usage(format!("DOMGAME_BUDGET is not a number: '{v}'"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn describe(q: &PathPosition, mv: PathMove) -> String {
    format!(
        "vertex {} of {}",
        mv.vertex,
        q.components()[mv.component]
    )
}

fn run(cli: Cli) -> Result<(), Failure> {
    let budget = budget(cli.budget)?;
    match cli.command {
        Command::Solve {
            graph,
            json,
            threads,
        } => {
            let g = spec::load_graph(&graph)?;
            let q = Position::initial(&g)?;
            let start = Instant::now();
            let v = if threads > 1 {
                solve_parallel(&q, budget, threads)?
            } else {
                solve(&q, budget)?
            };
            let millis = start.elapsed().as_millis() as u64;
            if json {
                let name = g.name().unwrap_or(&graph).to_string();
                let record = VerdictRecord::new(name, &v, millis);
                println!("{}", serde_json::to_string(&record).expect("record serializes"));
            } else {
                match v.winning_move {
                    Some(u) => println!("{}, winning move {u}", v.outcome),
                    None => println!("{}", v.outcome),
                }
            }
        }
        Command::Classify { position } => {
            let q = parse_position(&position)
                .map_err(|e| Failure::usage(format!("syntax error\n{}", e.render(&position))))?;
            let (v, engine) = if q.is_standard() && !q.is_trivial() {
                (classify_standard(&q)?, "closed-form")
            } else {
                (solve_path_sum(&q, budget)?, "search")
            };
            match v.winning_move {
                Some(mv) => println!("{} ({engine}), winning move {}", v.outcome, describe(&q, mv)),
                None => println!("{} ({engine})", v.outcome),
            }
        }
        Command::Verify { cap, json } => {
            let report = run_suite(cap, budget).map_err(|e| Failure::usage(e.to_string()))?;
            print!("{}", report.table());
            if let Some(path) = json {
                fs::write(&path, report.to_json())
                    .map_err(|e| Failure::usage(format!("cannot write {path}: {e}")))?;
            }
            let bad = report.disagreements();
            if !bad.is_empty() {
                return Err(Failure {
                    code: EXIT_DISAGREE,
                    message: format!("{} disagreement(s)", bad.len()),
                });
            }
        }
        Command::Construct { family, out } => {
            let name = family.strip_prefix("family:").unwrap_or(&family);
            let g = spec::parse_family(name)?;
            let text = write_edge_list(&g);
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::usage(format!("cannot write {path}: {e}")))?,
                None => print!("{text}"),
            }
        }
        Command::Involution { graph, d } => {
            let g = spec::load_graph(&graph)?;
            match find_involution(&g, d) {
                Ok(Some(inv)) => println!("{inv}"),
                Ok(None) => println!("none"),
                Err(e @ InvolutionError::BudgetExceeded { .. }) => {
                    return Err(Failure {
                        code: EXIT_BUDGET,
                        message: e.to_string(),
                    })
                }
                Err(e) => return Err(Failure::usage(e.to_string())),
            }
        }
        Command::Play { graph, human_first } => {
            let g = spec::load_graph(&graph)?;
            let stdin = io::stdin();
            let mut input = stdin.lock();
            repl::play_interactive(&g, human_first, budget, &mut input, &mut io::stdout())?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
