use std::fs;
use std::io::{self, BufReader, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use domlab::domination::{DominationKind, SolverConfig, SolverRegistry, DEFAULT_SOLVER};
use domlab::gadgets::gadget_by_name;
use domlab::graph::{edge_list_decode, edge_list_encode, graph6_encode, read_graph6_lines, to_dot, Tier};
use domlab::harness::{run_verification, CorpusSource, CorpusSpec, TheoremRegistry};
use domlab::recognizers::classify;
use domlab::spanning::{edge_removal_sweep, wcon_spectrum};
use domlab::Graph;

#[derive(Parser)]
#[command(name = "domlab", version, about = "Connected and weakly convex domination on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimum dominating set of the requested kind, one certificate per input graph.
    Solve {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value = "weakly-convex")]
        kind: DominationKind,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Graph-class membership flags.
    Classify {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Print a named construction or family member.
    Gadget {
        name: String,
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "graph6")]
        format: OutputFormat,
        /// Print the descriptor metadata as JSON instead of the graph.
        #[arg(long)]
        meta: bool,
    },
    /// Check theorems over a corpus and emit a JSON-lines report.
    Verify {
        /// Comma-separated theorem ids; all of them when omitted.
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        /// Corpus override, e.g. `exhaustive:5` or `file:graphs.g6+random:tree:50:1`.
        #[arg(long)]
        corpus: Option<CorpusSpec>,
        /// Replaces the seed of every random source.
        #[arg(long)]
        seed: Option<u64>,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long)]
        json_out: Option<PathBuf>,
        /// List theorem ids and exit.
        #[arg(long)]
        list: bool,
    },
    /// Domination numbers before and after removing each edge.
    SweepEdges {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        solver: SolverArgs,
    },
    /// Weakly convex domination numbers over all spanning trees.
    Interpolate {
        #[command(flatten)]
        input: InputArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Input file, or `-` for standard input.
    #[arg(long, default_value = "-")]
    input: String,
    #[arg(long, value_enum, default_value = "graph6")]
    format: InputFormat,
}

#[derive(Args)]
struct SolverArgs {
    #[arg(long, default_value = DEFAULT_SOLVER)]
    solver: String,
    /// Search-node budget per solve.
    #[arg(long)]
    budget: Option<u64>,
    /// Disable cut-vertex / simplicial forcing.
    #[arg(long)]
    no_pruning: bool,
}

impl SolverArgs {
    fn config(&self) -> Result<SolverConfig> {
        let mut cfg = SolverConfig { use_forced_pruning: !self.no_pruning, ..SolverConfig::default() };
        if let Some(b) = self.budget {
            cfg.node_budget = b;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum InputFormat {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Graph6,
    Edgelist,
    Dot,
}

/// Input problems exit with 2, theorem failures with 1.
enum Outcome {
    Ok,
    Failed,
}

fn read_graphs(args: &InputArgs) -> Result<Vec<Graph>> {
    let tier = Tier::from_env()?;
    let mut text = String::new();
    if args.input == "-" {
        io::stdin().read_to_string(&mut text).context("reading standard input")?;
    } else {
        text = fs::read_to_string(&args.input).with_context(|| format!("reading {}", args.input))?;
    }
    let graphs = match args.format {
        InputFormat::Graph6 => read_graph6_lines(BufReader::new(text.as_bytes()), tier)?,
        InputFormat::Edgelist => vec![edge_list_decode(&text, tier)?],
    };
    if graphs.is_empty() {
        bail!("no graph in input");
    }
    Ok(graphs)
}

fn print_json(value: &impl serde::Serialize) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Solve { input, kind, solver } => {
            let cfg = solver.config()?;
            let solver = SolverRegistry::builtin().get(&solver.solver)?;
            for g in read_graphs(&input)? {
                print_json(&solver.solve(&g, kind, &cfg)?)?;
            }
        }
        Command::Classify { input } => {
            for g in read_graphs(&input)? {
                print_json(&classify(&g)?)?;
            }
        }
        Command::Gadget { name, k, n, seed, format, meta } => {
            let d = gadget_by_name(&name, k, seed, n)?;
            if meta {
                print_json(&d.metadata())?;
            } else {
                let text = match format {
                    OutputFormat::Graph6 => graph6_encode(&d.graph) + "\n",
                    OutputFormat::Edgelist => edge_list_encode(&d.graph),
                    OutputFormat::Dot => to_dot(&d.graph, Some(&d.vertex_names())),
                };
                io::stdout().write_all(text.as_bytes())?;
            }
        }
        Command::Verify { theorems, corpus, seed, solver, json_out, list } => {
            if list {
                let reg = TheoremRegistry::builtin();
                for id in reg.ids() {
                    let t = reg.get(id)?;
                    println!("{id}\t{}\t{}", t.default_corpus(), t.statement());
                }
                return Ok(Outcome::Ok);
            }
            let cfg = solver.config()?;
            let corpus = corpus.map(|mut spec| {
                if let Some(s) = seed {
                    for src in &mut spec.sources {
                        if let CorpusSource::Random { seed, .. } = src {
                            *seed = s;
                        }
                    }
                }
                spec
            });
            let ids: Vec<&str> = theorems.iter().map(String::as_str).collect();
            let report = run_verification(&ids, corpus.as_ref(), &cfg)?;
            let lines = report.to_json_lines();
            io::stdout().write_all(lines.as_bytes())?;
            if let Some(path) = json_out {
                fs::write(&path, &lines).with_context(|| format!("writing {}", path.display()))?;
            }
            if report.exit_code() != 0 {
                return Ok(Outcome::Failed);
            }
        }
        Command::SweepEdges { input, solver } => {
            let cfg = solver.config()?;
            for g in read_graphs(&input)? {
                print_json(&edge_removal_sweep(&g, &cfg)?)?;
            }
        }
        Command::Interpolate { input } => {
            for g in read_graphs(&input)? {
                print_json(&wcon_spectrum(&g)?)?;
            }
        }
    }
    Ok(Outcome::Ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Outcome::Ok) => ExitCode::SUCCESS,
        Ok(Outcome::Failed) => ExitCode::from(1),
        Err(e) => {
            eprintln!("domlab: {e:#}");
            ExitCode::from(2)
        }
    }
}
