use std::fs;
use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use matchgame::construct::{all_names, named, parse_graph_spec, split_atom};
use matchgame::corpus;
use matchgame::game::DEFAULT_MEMO_BUDGET;
use matchgame::graph6::parse_graph6_lines;
use matchgame::play::GameState;
use matchgame::strategies::{by_name, StrategyError};
use matchgame::verify::{check_ids, run_check_spec, VerifyOptions};
use matchgame::{
    emit_graph6, matching_number, min_maximal_size, parse_graph6, play, Edge, Graph, Mode, Player, SolveError, Solver,
    SolverConfig, Strategy,
};
use matchgame_cli::store::{cache_get, cache_put, CacheEntry};

/// Exact solver and experiment driver for the maximal matching game.
#[derive(Parser)]
#[command(name = "matchgame", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the game on one graph (or every graph in a file).
    Solve(SolveArgs),
    /// Run a verification check over a corpus.
    Verify(VerifyArgs),
    /// Print graph6 for a graph spec or corpus spec.
    Gen(GenArgs),
    /// Tabulate values over one family parameter.
    Table(TableArgs),
    /// Play a game between two strategies or against a human.
    Play(PlayArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Graph in graph6.
    #[arg(long)]
    g6: Option<String>,
    /// File with one graph6 string per line.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Graph spec such as `cycle:6` or `path:3+star:2`.
    #[arg(long)]
    gen: Option<String>,
}

impl GraphInput {
    fn graphs(&self) -> Result<Vec<(String, Graph)>, String> {
        if let Some(s) = &self.g6 {
            let g = parse_graph6(s).map_err(|e| format!("--g6 {s:?}: {e}"))?;
            return Ok(vec![(s.clone(), g)]);
        }
        if let Some(p) = &self.file {
            let text = fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            let gs = parse_graph6_lines(&text).map_err(|(line, e)| format!("{}:{line}: {e}", p.display()))?;
            if gs.is_empty() {
                return Err(format!("{}: no graphs", p.display()));
            }
            return Ok(gs.into_iter().map(|g| (emit_graph6(&g), g)).collect());
        }
        let s = self.gen.as_deref().unwrap_or_default();
        let g = parse_graph_spec(s).map_err(|e| format!("--gen {s:?}: {e}"))?;
        Ok(vec![(s.to_string(), g)])
    }

    fn graph(&self) -> Result<Graph, String> {
        let mut gs = self.graphs()?;
        if gs.len() != 1 {
            return Err(format!("expected one graph, found {}", gs.len()));
        }
        Ok(gs.remove(0).1)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PlayerArg {
    Max,
    Min,
}

impl From<PlayerArg> for Player {
    fn from(p: PlayerArg) -> Player {
        match p {
            PlayerArg::Max => Player::Max,
            PlayerArg::Min => Player::Min,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Subset,
    Iso,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Subset => Mode::Subset,
            ModeArg::Iso => Mode::Iso,
        }
    }
}

#[derive(Args)]
struct SolveArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Player who moves first.
    #[arg(long, value_enum, default_value = "max")]
    player: PlayerArg,
    #[arg(long, value_enum, default_value = "subset")]
    mode: ModeArg,
    /// Skip moves that cannot beat the bound already found.
    #[arg(long)]
    prune: bool,
    /// Maximum number of memo entries.
    #[arg(long, default_value_t = DEFAULT_MEMO_BUDGET)]
    budget: usize,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Result cache file; read before solving, appended after.
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Print search statistics.
    #[arg(long)]
    stats: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Check id; `--check list` prints the available ids.
    #[arg(long)]
    check: String,
    /// Corpus spec; defaults to the check's own corpus.
    #[arg(long)]
    corpus: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    #[arg(long, value_enum, default_value = "iso")]
    mode: ModeArg,
    /// Print every record as a JSON line after the summary.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct GenArgs {
    /// Graph spec, or a corpus spec such as `trees:6`.
    #[arg(long)]
    gen: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct TableArgs {
    /// Family name, optionally with leading fixed parameters (`complete_bipartite:2`).
    #[arg(long)]
    gen: String,
    /// Inclusive range for the last parameter, e.g. `1..14`.
    #[arg(long)]
    range: String,
    #[arg(long, value_enum, default_value = "iso")]
    mode: ModeArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Seat {
    First,
    Second,
}

#[derive(Args)]
struct PlayArgs {
    #[command(flatten)]
    input: GraphInput,
    /// Strategy for the player who starts.
    #[arg(long, default_value = "exact")]
    first: String,
    /// Strategy for the other player.
    #[arg(long, default_value = "exact")]
    second: String,
    /// Player who starts.
    #[arg(long, value_enum, default_value = "max")]
    start: PlayerArg,
    /// Seed for randomized strategies.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Replace a seat with moves typed as `u v` on stdin.
    #[arg(long, value_enum, num_args = 0..=1, default_missing_value = "first")]
    interactive: Option<Seat>,
    /// Memo budget for the closing comparison with the solved value.
    #[arg(long, default_value_t = 1 << 22)]
    budget: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Gen(a) => cmd_gen(a),
        Command::Table(a) => cmd_table(a),
        Command::Play(a) => cmd_play(a),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn edge_list(edges: &[Edge]) -> String {
    edges.iter().map(Edge::to_string).collect::<Vec<_>>().join(" ")
}

fn cmd_solve(a: SolveArgs) -> Result<ExitCode, String> {
    let first = Player::from(a.player);
    let config = SolverConfig {
        mode: a.mode.into(),
        prune: a.prune,
        memo_budget: a.budget,
        threads: a.threads.max(1),
    };
    let graphs = a.input.graphs()?;
    for (i, (label, g)) in graphs.iter().enumerate() {
        if i > 0 {
            println!();
        }
        let start = Instant::now();
        println!("graph={label} n={} m={}", g.vertex_count(), g.edge_count());
        let cached = match &a.cache {
            Some(p) => cache_get(p, g).map_err(|e| e.to_string())?,
            None => None,
        };
        if let Some(entry) = cached {
            let value = match first {
                Player::Max => entry.max,
                Player::Min => entry.min,
            };
            println!("value={value}");
            println!("cache=hit");
        } else {
            let solver = Solver::new(config.clone());
            let tree = solver.tree(g, first);
            let res = tree.solve().map_err(budget_msg)?;
            println!("value={}", res.value);
            println!("optimal_moves={}", edge_list(&res.optimal_moves));
            if a.stats {
                println!("nodes={} memo_entries={}", tree.nodes_visited(), tree.memo_entries());
            }
            if let Some(p) = &a.cache {
                let other = solver.value(g, first.other()).map_err(budget_msg)?;
                let (max, min) = match first {
                    Player::Max => (res.value, other),
                    Player::Min => (other, res.value),
                };
                cache_put(p, &CacheEntry::new(g, max, min)).map_err(|e| e.to_string())?;
                println!("cache=miss");
            }
        }
        println!("alpha={}", matching_number(g));
        println!("mu={}", min_maximal_size(g));
        println!("time={:.3}s", start.elapsed().as_secs_f64());
    }
    Ok(ExitCode::SUCCESS)
}

fn budget_msg(e: SolveError) -> String {
    format!("{e}; raise --budget or try --mode iso")
}

fn cmd_verify(a: VerifyArgs) -> Result<ExitCode, String> {
    if a.check == "list" {
        for id in check_ids() {
            println!("{id}");
        }
        return Ok(ExitCode::SUCCESS);
    }
    let opts = VerifyOptions {
        jobs: a.jobs.max(1),
        seed: a.seed,
        mode: a.mode.into(),
    };
    let report = run_check_spec(&a.check, a.corpus.as_deref(), &opts).map_err(|e| e.to_string())?;
    println!("{}: {}", report.check, report.summary());
    for r in report.violations().take(10) {
        println!("  {} {}: expected {}, got {}", r.label, r.graph6, r.expected, r.actual);
    }
    if a.json {
        print!("{}", report.json_lines());
    }
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
}

fn cmd_gen(a: GenArgs) -> Result<ExitCode, String> {
    let graphs = match parse_graph_spec(&a.gen) {
        Ok(g) => vec![g],
        Err(graph_err) => match corpus::load(&a.gen, a.seed) {
            Ok(insts) => insts.into_iter().map(|i| i.graph).collect(),
            Err(_) => return Err(format!("--gen {:?}: {graph_err}", a.gen)),
        },
    };
    let mut out = io::stdout().lock();
    for g in &graphs {
        writeln!(out, "{}", emit_graph6(g)).map_err(|e| e.to_string())?;
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>, String> {
    let num = |t: &str| t.trim().parse::<usize>().map_err(|_| format!("bad range {s:?}"));
    let r = match s.split_once("..") {
        Some((lo, hi)) => num(lo)?..=num(hi.strip_prefix('=').unwrap_or(hi))?,
        None => num(s)?..=num(s)?,
    };
    if r.is_empty() {
        return Err(format!("empty range {s:?}"));
    }
    Ok(r)
}

fn cmd_table(a: TableArgs) -> Result<ExitCode, String> {
    let (name, fixed) = split_atom(&a.gen).map_err(|e| e.to_string())?;
    if !all_names().contains(&name) {
        return Err(format!("unknown family {name:?}; available: {}", all_names().join(", ")));
    }
    let range = parse_range(&a.range)?;
    let solver = Solver::new(SolverConfig::with_mode(a.mode.into()));
    println!("{:>4} {:>6} {:>4} {:>4} {:>4}", "n", "alpha", "mu", "Max", "Min");
    for p in range {
        let mut params = fixed.clone();
        params.push(p);
        let g = match named(name, &params) {
            Ok(g) => g,
            Err(e) => {
                println!("{p:>4} {e}");
                continue;
            }
        };
        let (max, min) = solver.values(&g).map_err(budget_msg)?;
        println!(
            "{p:>4} {:>6} {:>4} {max:>4} {min:>4}",
            matching_number(&g),
            min_maximal_size(&g)
        );
    }
    Ok(ExitCode::SUCCESS)
}

/// Reads moves from a line source, re-prompting until a legal edge arrives.
struct Human<R> {
    input: R,
}

impl<R: BufRead> Strategy for Human<R> {
    fn name(&self) -> &str {
        "human"
    }

    fn choose(&mut self, state: &GameState) -> Result<Edge, StrategyError> {
        loop {
            eprint!("{} to move; legal: {}\n> ", state.to_move(), edge_list(&state.legal_edges()));
            let _ = io::stderr().flush();
            let mut line = String::new();
            match self.input.read_line(&mut line) {
                Ok(0) => return Err(StrategyError::Aborted("end of input".into())),
                Ok(_) => {}
                Err(e) => return Err(StrategyError::Aborted(e.to_string())),
            }
            let nums: Vec<usize> = line
                .split(|c: char| c.is_whitespace() || c == '-' || c == ',')
                .filter(|t| !t.is_empty())
                .map_while(|t| t.parse().ok())
                .collect();
            match nums[..] {
                [u, v] if u != v && u.max(v) < state.root().vertex_count() && state.is_legal(Edge::new(u, v)) => {
                    return Ok(Edge::new(u, v));
                }
                _ => eprintln!("illegal move {:?}; enter two endpoints of a legal edge", line.trim()),
            }
        }
    }
}

fn cmd_play(a: PlayArgs) -> Result<ExitCode, String> {
    let g = a.input.graph()?;
    let start = Player::from(a.start);
    let strategy = |name: &str| by_name(name, a.seed).map_err(|e| e.to_string());
    let mut first: Box<dyn Strategy> = strategy(&a.first)?;
    let mut second: Box<dyn Strategy> = strategy(&a.second)?;
    let human = || Box::new(Human { input: io::stdin().lock() });
    match a.interactive {
        Some(Seat::First) => first = human(),
        Some(Seat::Second) => second = human(),
        None => {}
    }
    let (max, min) = match start {
        Player::Max => (&mut first, &mut second),
        Player::Min => (&mut second, &mut first),
    };
    println!("graph={} n={} m={}", emit_graph6(&g), g.vertex_count(), g.edge_count());
    println!("max={} min={} start={start}", max.name(), min.name());
    let outcome = play(&g, start, max.as_mut(), min.as_mut());
    let transcript = match outcome {
        Ok(t) => t,
        Err(e) => {
            println!("{}", e.partial());
            println!("aborted");
            eprintln!("error: {e}");
            return Ok(ExitCode::FAILURE);
        }
    };
    println!("{transcript}");
    let config = SolverConfig {
        memo_budget: a.budget,
        ..SolverConfig::with_mode(Mode::Iso)
    };
    match Solver::new(config).value(&g, start) {
        Ok(v) => println!("solved value={v}; final size is {}", cmp_word(transcript.final_size, v)),
        Err(e) => println!("solved value unavailable: {e}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmp_word(size: usize, value: usize) -> &'static str {
    match size.cmp(&value) {
        std::cmp::Ordering::Less => "below it",
        std::cmp::Ordering::Equal => "equal",
        std::cmp::Ordering::Greater => "above it",
    }
}
