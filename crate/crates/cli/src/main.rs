mod report;

use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use mbdom::engine::{solve_with, EngineError, SolverOptions};
use mbdom::formulas::{
    cycle_values, erdos_selfridge, gamma2_witness, tree_values, union_bounds, FormulaError,
};
use mbdom::graph::{domination_stats, generate, parse_edge_list, Family, GraphError};
use mbdom::residual::{reduce_and_solve, residual_decompose};
use mbdom::strategies::{by_name, simulate, StrategyError, STRATEGY_NAMES};
use mbdom::verify::{run_suite, Suite, VerifyError, VerifyOptions};
use mbdom::{gmb, gmb_prime, GameConfig, Graph, Player, VertexSet};

use report::Report;

const EXIT_USAGE: u8 = 1;
const EXIT_VERIFY_FAILED: u8 = 2;
const EXIT_RESOURCE_CAP: u8 = 3;

/// Exact solver and experiment runner for the Maker-Breaker domination game.
///
/// INPUT is an edge-list file (`-` for stdin) or a generator spec such as
/// `gen:cycle:9`, `gen:grst:2,3,4` or `gen:fig4`.
#[derive(Parser)]
#[command(name = "mbdom", version)]
struct Cli {
    /// Print one JSON object per run instead of key=value lines.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum First {
    D,
    S,
}

impl From<First> for Player {
    fn from(f: First) -> Player {
        match f {
            First::D => Player::Dominator,
            First::S => Player::Staller,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Tree,
    Cycle,
    Union,
    Es,
    Gamma2,
}

#[derive(Subcommand)]
enum Command {
    /// Game value of the D-game or S-game, optionally with pre-dominated vertices.
    Solve {
        input: String,
        #[arg(long, value_enum, default_value = "d")]
        first: First,
        /// Comma-separated vertices (labels or indices) that count as dominated.
        #[arg(long, value_delimiter = ',')]
        pre_dominated: Vec<String>,
        /// Players allowed to pass: `d`, `s` or `d,s`.
        #[arg(long, value_enum, value_delimiter = ',')]
        allow_pass: Vec<First>,
        /// Worker threads for the root split.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Solve graphs above the default vertex cap.
        #[arg(long)]
        allow_oversize: bool,
        /// Largest number of memo entries before giving up.
        #[arg(long, default_value_t = SolverOptions::default().memo_cap)]
        memo_cap: usize,
    },
    /// Evaluate a closed form or criterion without the game search.
    Formula {
        input: String,
        #[arg(long, value_enum)]
        which: Which,
        /// Second graph for `--which union`.
        #[arg(long)]
        other: Option<String>,
    },
    /// Residual graph and the values it implies.
    Residual { input: String },
    /// Run a property suite and report every counterexample.
    Verify {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Size of each random pool.
        #[arg(long, default_value_t = 50)]
        instances: usize,
    },
    /// Referee a game between two strategies and print the record.
    Simulate {
        input: String,
        /// optimal, random or pairing.
        #[arg(long, default_value = "optimal")]
        dom: String,
        /// optimal, random, tree or cycle.
        #[arg(long, default_value = "optimal")]
        sta: String,
        #[arg(long, value_enum, default_value = "d")]
        first: First,
        /// Vertex the tree strategy saves for its last move.
        #[arg(long, default_value = "0")]
        target: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Order, size, domination number and number of minimum dominating sets.
    Stats { input: String },
    /// Print a generated graph as an edge list.
    Generate { spec: String },
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
    let start = Instant::now();
    match run(cli.command) {
        Ok(report) => {
            if cli.json {
                println!("{}", report.to_json(start.elapsed()));
            } else {
                print!("{}", report.to_text());
                eprintln!("elapsed_ms={}", start.elapsed().as_millis());
            }
            ExitCode::from(exit_code(&report))
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(if is_resource_cap(&e) {
                EXIT_RESOURCE_CAP
            } else {
                EXIT_USAGE
            })
        }
    }
}

fn exit_code(report: &Report) -> u8 {
    match report.passed {
        Some(false) => EXIT_VERIFY_FAILED,
        _ => 0,
    }
}

fn is_resource_cap(e: &anyhow::Error) -> bool {
    let engine = |e: &EngineError| {
        matches!(e, EngineError::MemoCapExceeded(_) | EngineError::TooLarge { .. })
    };
    let graph = |e: &GraphError| matches!(e, GraphError::CapExceeded { .. });
    e.chain().any(|cause| {
        cause.downcast_ref::<EngineError>().is_some_and(engine)
            || cause.downcast_ref::<GraphError>().is_some_and(graph)
            || cause
                .downcast_ref::<FormulaError>()
                .is_some_and(|f| matches!(f, FormulaError::Graph(g) if graph(g)))
            || cause
                .downcast_ref::<StrategyError>()
                .is_some_and(|s| matches!(s, StrategyError::Engine(e) if engine(e)))
            || cause.downcast_ref::<VerifyError>().is_some_and(VerifyError::is_resource_cap)
    })
}

fn load(input: &str) -> Result<Graph> {
    if input.starts_with("gen:") {
        let family: Family = input.parse()?;
        return Ok(generate(&family)?);
    }
    let text = if input == "-" {
        std::io::read_to_string(std::io::stdin()).context("reading stdin")?
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {input}"))?
    };
    parse_edge_list(&text).with_context(|| format!("parsing {input}"))
}

fn run(command: Command) -> Result<Report> {
    match command {
        Command::Solve {
            input,
            first,
            pre_dominated,
            allow_pass,
            jobs,
            allow_oversize,
            memo_cap,
        } => {
            let g = load(&input)?;
            let mut pre = VertexSet::EMPTY;
            for token in &pre_dominated {
                pre.insert(g.resolve_vertex(token)?);
            }
            let dom_pass = allow_pass.iter().any(|p| matches!(p, First::D));
            let sta_pass = allow_pass.iter().any(|p| matches!(p, First::S));
            let config = GameConfig::new(g, first.into())
                .with_pre_dominated(pre)?
                .with_passes(dom_pass, sta_pass);
            let opts = SolverOptions {
                allow_oversize,
                memo_cap,
                jobs,
                ..SolverOptions::default()
            };
            let value = solve_with(&config, &opts)?;
            let mut report = Report::new("solve", input).field("first", config.first);
            if !pre.is_empty() {
                let names: Vec<String> = pre.iter().map(|v| config.graph.vertex_name(v)).collect();
                report = report.field("pre_dominated", names.join(","));
            }
            Ok(report.field("value", value))
        }
        Command::Formula { input, which, other } => {
            let g = load(&input)?;
            let report = Report::new("formula", input.clone());
            match which {
                Which::Tree => {
                    let (d, s) = tree_values(&g)?;
                    Ok(report.field("gmb", d).field("gmb'", s))
                }
                Which::Cycle => {
                    let n = g.order();
                    if !(n >= 3 && g.is_connected() && (0..n).all(|v| g.degree(v) == 2)) {
                        bail!("{input} is not a cycle");
                    }
                    let (d, s) = cycle_values(n)?;
                    Ok(report.field("gmb", d).field("gmb'", s))
                }
                Which::Union => {
                    let Some(other) = other else {
                        bail!("--which union needs --other <INPUT>");
                    };
                    let h = load(&other)?;
                    let b = union_bounds(gmb(&g)?, gmb_prime(&g)?, gmb(&h)?, gmb_prime(&h)?);
                    Ok(Report::new("formula", format!("{input} {other}"))
                        .field("d_low", b.d_low)
                        .field("d_high", b.d_high)
                        .field("s_low", b.s_low)
                        .field("s_high", b.s_high))
                }
                Which::Es => {
                    let es = erdos_selfridge(&g)?;
                    Ok(report
                        .field("criterion", es.criterion)
                        .field("gamma", es.gamma)
                        .field("gamma_sets", es.num_gamma_sets))
                }
                Which::Gamma2 => {
                    let w = gamma2_witness(&g)?;
                    let name = w.map_or("none".to_string(), |v| g.vertex_name(v));
                    Ok(report.field("witness", name))
                }
            }
        }
        Command::Residual { input } => {
            let g = load(&input)?;
            let dec = residual_decompose(&g);
            let b = reduce_and_solve(&g)?;
            let pairs: Vec<String> = dec
                .removed_pairs
                .iter()
                .map(|&(x, y)| format!("({},{})", g.vertex_name(x), g.vertex_name(y)))
                .collect();
            Ok(Report::new("residual", input)
                .field("residual", dec.describe())
                .field("order", dec.residual.order())
                .field("pairs", dec.removed_pairs.len())
                .field("removed", if pairs.is_empty() { "none".into() } else { pairs.join(",") })
                .field("sgame", b.sgame_exact)
                .field("dgame", format!("[{},{}]", b.dgame_low, b.dgame_high)))
        }
        Command::Verify {
            suite,
            max_n,
            seed,
            instances,
        } => {
            let opts = VerifyOptions {
                max_n,
                seed,
                instances,
            };
            let report = run_suite(suite, &opts)?;
            let instances: usize = report.checks.iter().map(|c| c.instances).sum();
            Ok(Report::new("verify", suite.to_string())
                .field("instances", instances)
                .field("passed", report.passed())
                .passed(report.passed())
                .body(report.to_string()))
        }
        Command::Simulate {
            input,
            dom,
            sta,
            first,
            target,
            seed,
        } => {
            let g = load(&input)?;
            let target = g.resolve_vertex(&target)?;
            let config = GameConfig::new(g, first.into());
            let names = STRATEGY_NAMES.join(", ");
            let mut d = by_name(&dom, &config, Player::Dominator, target, seed)
                .with_context(|| format!("--dom {dom} (strategies: {names})"))?;
            let mut s = by_name(&sta, &config, Player::Staller, target, seed.wrapping_add(1))
                .with_context(|| format!("--sta {sta} (strategies: {names})"))?;
            let record = simulate(&config, d.as_mut(), s.as_mut());
            Ok(Report::new("simulate", input)
                .field("dom", dom)
                .field("sta", sta)
                .field("first", config.first)
                .field("fallbacks", record.fallback_count())
                .body(record.to_string()))
        }
        Command::Stats { input } => {
            let g = load(&input)?;
            let stats = domination_stats(&g)?;
            Ok(Report::new("stats", input)
                .field("n", g.order())
                .field("m", g.edge_count())
                .field("gamma", stats.gamma)
                .field("gamma_sets", stats.num_gamma_sets))
        }
        Command::Generate { spec } => {
            let family: Family = spec.parse()?;
            let g = generate(&family)?;
            Ok(Report::new("generate", format!("gen:{family}")).body(g.to_edge_list()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_verification_exits_with_two() {
        let failed = Report::new("verify", "cycles").passed(false);
        assert_eq!(exit_code(&failed), EXIT_VERIFY_FAILED);
        assert_eq!(exit_code(&Report::new("verify", "cycles").passed(true)), 0);
        assert_eq!(exit_code(&Report::new("solve", "gen:cycle:3")), 0);
    }

    #[test]
    fn caps_are_recognised_through_context() {
        let e = anyhow::Error::new(EngineError::MemoCapExceeded(10)).context("solving");
        assert!(is_resource_cap(&e));
        assert!(!is_resource_cap(&anyhow::anyhow!("bad flag")));
    }
}
