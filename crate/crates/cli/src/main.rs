//! `cointour`: dominance graphs of biased coins from the command line.
//!
//! Exit codes: 0 answered (including negative answers), 1 a `verify-paper`
//! check failed, 2 malformed input, 3 a tie where a tournament was required,
//! 4 a budget cap was exceeded. Errors are a single `error: <kind>: <reason>`
//! line on stderr.

use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use coin_tournaments::enumeration::DEFAULT_COUNT_CAP;
use coin_tournaments::fixtures::verify_paper;
use coin_tournaments::formats::{parse_coins, parse_tournament, write_coins, write_tournament};
use coin_tournaments::montecarlo::{simulate_system, SimConfig};
use coin_tournaments::ordering::{DEFAULT_ORDERING_CAP, DEFAULT_PARTITION_CAP};
use coin_tournaments::{
    count_semiacyclic_parallel, dominance_graph, encode, enumerate_semiacyclic,
    find_semiacyclic_ordering, find_winner_loser_partition, realize_losers, realize_winners,
    CoinSystem, Error, SearchConfig, Semiacyclicity, Tournament,
};

#[derive(Parser)]
#[command(
    name = "cointour",
    version,
    about = "Dominance graphs of two-sided biased coins"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Worker threads for the parallel commands (default: all cores).
    #[arg(long, global = true, value_name = "K")]
    parallel: Option<usize>,
}

#[derive(Args)]
struct Cap {
    /// Largest vertex count the command will attempt.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the dominance graph of a coin file.
    Dominance { coins: PathBuf },
    /// Decide whether a labeled tournament is semiacyclic.
    Check { tournament: PathBuf },
    /// Search for a numbering under which the tournament is semiacyclic.
    /// Prints the new label of each vertex 1..n, or NONE.
    Order {
        tournament: PathBuf,
        #[command(flatten)]
        cap: Cap,
    },
    /// Build coins whose dominance graph is the given semiacyclic tournament.
    Realize {
        tournament: PathBuf,
        /// Winner coins sharing the high face n+1.
        #[arg(long, conflicts_with = "losers", required_unless_present = "losers")]
        winners: bool,
        /// Loser coins sharing the low face 0.
        #[arg(long)]
        losers: bool,
    },
    /// Direct product of two tournaments.
    Product { first: PathBuf, second: PathBuf },
    /// Count semiacyclic tournaments on n labeled vertices.
    Count {
        n: usize,
        #[command(flatten)]
        cap: Cap,
    },
    /// List semiacyclic tournaments on n vertices as integer codes, or write
    /// one tournament file per code into a directory.
    Enumerate {
        n: usize,
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
        #[command(flatten)]
        cap: Cap,
    },
    /// Search for a split into two sides that each admit a semiacyclic
    /// numbering. Prints both sides, or NONE.
    Partition {
        tournament: PathBuf,
        #[command(flatten)]
        cap: Cap,
    },
    /// Simulate every pair of coins.
    Simulate {
        coins: PathBuf,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run the built-in checks of the nine-coin example and related claims.
    VerifyPaper,
}

enum Failure {
    Malformed(String),
    Tie(usize, usize),
    Budget(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Malformed(_) | Failure::Io(_) => 2,
            Failure::Tie(..) => 3,
            Failure::Budget(_) => 4,
        }
    }

    fn line(&self) -> String {
        match self {
            Failure::Malformed(r) => format!("error: malformed: {r}"),
            Failure::Io(r) => format!("error: io: {r}"),
            Failure::Tie(i, j) => format!("error: tie: coins {i} and {j} tie"),
            Failure::Budget(r) => format!("error: budget: {r}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Tie { first, second } => Failure::Tie(first, second),
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Malformed(other.to_string()),
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    let mut text = String::new();
    let res = if path == Path::new("-") {
        io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        fs::read_to_string(path).map(|t| text = t)
    };
    res.map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    Ok(text)
}

fn read_coins(path: &Path) -> Result<CoinSystem, Failure> {
    parse_coins(&read_input(path)?)
        .map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

fn read_tournament(path: &Path) -> Result<Tournament, Failure> {
    parse_tournament(&read_input(path)?)
        .map_err(|e| Failure::Malformed(format!("{}: {e}", path.display())))
}

fn join(vs: &[usize]) -> String {
    vs.iter()
        .map(usize::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn search_config(cap: &Cap) -> SearchConfig {
    SearchConfig {
        ordering_cap: cap.cap.unwrap_or(DEFAULT_ORDERING_CAP),
        partition_cap: cap.cap.unwrap_or(DEFAULT_PARTITION_CAP),
        parallel: true,
    }
}

/// Runs one command; on success returns stdout text and the exit code.
fn execute(command: Command, threads: usize) -> Result<(String, u8), Failure> {
    let mut out = String::new();
    match command {
        Command::Dominance { coins } => {
            out = write_tournament(&dominance_graph(&read_coins(&coins)?)?);
        }
        Command::Check { tournament } => match read_tournament(&tournament)?.is_semiacyclic() {
            Semiacyclicity::Yes => out.push_str("SEMIACYCLIC\n"),
            Semiacyclicity::No(w) => writeln!(out, "NOT SEMIACYCLIC\ncycle {w}").unwrap(),
        },
        Command::Order { tournament, cap } => {
            let t = read_tournament(&tournament)?;
            match find_semiacyclic_ordering(&t, &search_config(&cap))? {
                Some(o) => writeln!(out, "{}", join(o.as_slice())).unwrap(),
                None => out.push_str("NONE\n"),
            }
        }
        Command::Realize {
            tournament,
            winners,
            ..
        } => {
            let t = read_tournament(&tournament)?;
            let realized = if winners {
                realize_winners(&t)
            } else {
                realize_losers(&t)
            };
            match realized {
                Ok(s) => out = write_coins(&s),
                Err(Error::NotSemiacyclic(w)) => {
                    writeln!(out, "NOT SEMIACYCLIC\ncycle {w}").unwrap()
                }
                Err(e) => return Err(e.into()),
            }
        }
        Command::Product { first, second } => {
            let t1 = read_tournament(&first)?;
            let t2 = read_tournament(&second)?;
            out = write_tournament(&t1.direct_product(&t2));
        }
        Command::Count { n, cap } => {
            let count =
                count_semiacyclic_parallel(n, cap.cap.unwrap_or(DEFAULT_COUNT_CAP), threads * 8)?;
            writeln!(out, "{count}").unwrap();
        }
        Command::Enumerate { n, out: dir, cap } => {
            let all = enumerate_semiacyclic(n, cap.cap.unwrap_or(DEFAULT_COUNT_CAP))?;
            if let Some(dir) = &dir {
                fs::create_dir_all(dir)
                    .map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))?;
            }
            for t in all {
                let code = encode(&t)?.code;
                match &dir {
                    None => writeln!(out, "{code}").unwrap(),
                    Some(dir) => {
                        let path = dir.join(format!("n{n}-{code}.txt"));
                        fs::write(&path, write_tournament(&t))
                            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
                    }
                }
            }
        }
        Command::Partition { tournament, cap } => {
            let t = read_tournament(&tournament)?;
            match find_winner_loser_partition(&t, &search_config(&cap))? {
                Some(p) => writeln!(out, "v1: {}\nv2: {}", join(&p.v1), join(&p.v2)).unwrap(),
                None => out.push_str("NONE\n"),
            }
        }
        Command::Simulate {
            coins,
            trials,
            seed,
        } => {
            let system = read_coins(&coins)?;
            let m = simulate_system(&system, &SimConfig { trials, seed })?;
            out.push_str("i j wins_i wins_j draws\n");
            for p in &m.pairs {
                let o = &p.outcome;
                writeln!(
                    out,
                    "{} {} {} {} {}",
                    p.first, p.second, o.wins_first, o.wins_second, o.draws
                )
                .unwrap();
            }
        }
        Command::VerifyPaper => {
            let checks = verify_paper();
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                writeln!(out, "[{tag}] {}: {} ({} ms)", c.name, c.detail, c.millis).unwrap();
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            writeln!(
                out,
                "{} of {} checks passed",
                checks.len() - failed,
                checks.len()
            )
            .unwrap();
            return Ok((out, u8::from(failed > 0)));
        }
    }
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("bad arguments");
            eprintln!("error: malformed: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };

    let threads = cli.parallel.unwrap_or_else(rayon::current_num_threads);
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(threads.max(1))
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!("error: io: {e}");
            return ExitCode::from(2);
        }
    };

    match pool.install(|| execute(cli.command, threads.max(1))) {
        Ok((text, code)) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("{}", f.line());
            ExitCode::from(f.code())
        }
    }
}
