use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use girthscope::bench::{bench_compare, BenchOptions};
use girthscope::extremal::ExtremalSearch;
use girthscope::graph::{complete, cycle, path, petersen, read_graph_file};
use girthscope::verify::{verify_matrix, VerifyOptions};
use girthscope::{
    enumerate_baseline, girth_unweighted, girth_weighted, Connectivity, EdgeEnumerator, EnumConfig, EnumSummary,
    Error, ExtremalBudget, Flow, Graph, GraphError, InducedEnumerator, Length, Mode, SolutionSink,
};

/// Enumerate connected subgraphs of bounded girth.
#[derive(Parser, Debug)]
#[command(name = "girthscope", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the girth of a graph ("inf" if it is a forest).
    Girth {
        #[command(flatten)]
        input: GraphArgs,
        /// Sum edge weights instead of counting edges.
        #[arg(long)]
        weighted: bool,
    },
    /// Stream every solution, one sorted id list per line.
    Enum {
        #[command(flatten)]
        input: GraphArgs,
        #[command(flatten)]
        run: EnumArgs,
        /// Write solutions here instead of standard output.
        #[arg(long, short)]
        output: Option<PathBuf>,
        /// In edge mode, print edges as "u-v" label pairs instead of ids.
        #[arg(long)]
        endpoints: bool,
    },
    /// Print the number of solutions.
    Count {
        #[command(flatten)]
        input: GraphArgs,
        #[command(flatten)]
        run: EnumArgs,
    },
    /// Find the densest n-vertex graphs of girth at least k.
    Extremal {
        #[arg(short)]
        n: usize,
        #[arg(short, value_parser = parse_length)]
        k: Length,
        #[arg(long, value_enum, default_value_t = ConnArg::Connected)]
        connectivity: ConnArg,
        /// Give up after this many enumerated subgraphs.
        #[arg(long)]
        max_explored: Option<u64>,
        /// Disable the branch-and-bound cut.
        #[arg(long)]
        no_prune: bool,
        /// Also list one witness per isomorphism class (n ≤ 8).
        #[arg(long)]
        distinct: bool,
    },
    /// Time the subset filter against the fast engine.
    Bench {
        #[command(flatten)]
        input: GraphArgs,
        #[arg(short, value_parser = parse_length)]
        k: Length,
        #[arg(long, value_enum, default_value_t = ModeArg::Edge)]
        mode: ModeArg,
        /// Also time the baseline engine.
        #[arg(long)]
        baseline: bool,
        #[arg(long)]
        limit: Option<u64>,
        /// Largest number of vertices (or edges) the subset filter accepts.
        #[arg(long, default_value_t = 24)]
        brute_budget: usize,
    },
    /// Check every engine against the subset filter on a graph corpus.
    Verify {
        /// Include all connected graphs up to this many vertices.
        #[arg(long, default_value_t = 5)]
        exhaustive_n: usize,
        #[arg(long, default_value_t = 50)]
        random: usize,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct GraphArgs {
    /// Edge list ("u v [w]" per line, '#' comments) or DIMACS file.
    #[arg(long, short)]
    graph: Option<PathBuf>,
    /// Use the complete graph K_N.
    #[arg(long, value_name = "N")]
    complete: Option<usize>,
    /// Use the cycle C_N.
    #[arg(long, value_name = "N")]
    cycle: Option<usize>,
    /// Use the path P_N.
    #[arg(long, value_name = "N")]
    path: Option<usize>,
    #[arg(long)]
    petersen: bool,
}

impl GraphArgs {
    fn load(&self, weighted: bool) -> Result<Graph, CliError> {
        if let Some(p) = &self.graph {
            return read_graph_file(p, weighted).map_err(|e| CliError::Input(p.clone(), e));
        }
        let g = match (self.complete, self.cycle, self.path) {
            (Some(n), _, _) => complete(n),
            (_, Some(n), _) if n < 3 => return Err(CliError::Usage("a cycle needs at least 3 vertices".into())),
            (_, Some(n), _) => cycle(n),
            (_, _, Some(n)) => path(n),
            _ => petersen(),
        };
        Ok(g)
    }

    fn describe(&self) -> String {
        match (&self.graph, self.complete, self.cycle, self.path) {
            (Some(p), ..) => p.display().to_string(),
            (_, Some(n), ..) => format!("K{n}"),
            (_, _, Some(n), _) => format!("C{n}"),
            (_, _, _, Some(n)) => format!("P{n}"),
            _ => "petersen".into(),
        }
    }
}

#[derive(Args, Debug)]
struct EnumArgs {
    /// Girth threshold: an integer ≥ 3, or "inf" for forests only.
    #[arg(short, value_parser = parse_length)]
    k: Length,
    #[arg(long, value_enum, default_value_t = ModeArg::Induced)]
    mode: ModeArg,
    #[arg(long, value_enum, default_value_t = ConnArg::Connected)]
    connectivity: ConnArg,
    /// Read edge weights and measure cycles by total weight.
    #[arg(long)]
    weighted: bool,
    /// Leave out the empty solution.
    #[arg(long)]
    no_empty: bool,
    #[arg(long, value_enum, default_value_t = Algorithm::Auto)]
    algorithm: Algorithm,
    /// Stop after this many solutions.
    #[arg(long)]
    limit: Option<u64>,
}

impl EnumArgs {
    fn config(&self) -> EnumConfig {
        EnumConfig::new(self.k, self.mode.into())
            .connectivity(self.connectivity.into())
            .weighted(self.weighted)
            .include_empty(!self.no_empty)
            .limit(self.limit)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Induced,
    Edge,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Induced => Mode::Induced,
            ModeArg::Edge => Mode::Edge,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ConnArg {
    Connected,
    Any,
}

impl From<ConnArg> for Connectivity {
    fn from(c: ConnArg) -> Connectivity {
        match c {
            ConnArg::Connected => Connectivity::Connected,
            ConnArg::Any => Connectivity::Any,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    /// Fast engine when it applies, baseline otherwise.
    Auto,
    Baseline,
    Fast,
}

fn parse_length(s: &str) -> Result<Length, String> {
    s.parse()
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Input(PathBuf, GraphError),
    Usage(String),
    Output(io::Error),
    /// A cross-check disagreed.
    Check(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Lib(Error::Graph(e))
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_, GraphError::Io(_)) | CliError::Lib(Error::Graph(GraphError::Io(_))) => 3,
            CliError::Input(..) => 4,
            CliError::Lib(Error::Graph(_)) => 4,
            CliError::Lib(Error::InvalidConfig(_)) | CliError::Usage(_) => 5,
            CliError::Lib(Error::BudgetExceeded { .. }) => 6,
            CliError::Check(_) => 7,
            CliError::Output(_) => 8,
            CliError::Lib(_) => 9,
        }
    }

    fn message(&self) -> String {
        match self {
            CliError::Lib(e) => e.to_string(),
            CliError::Input(p, e) => format!("{}: {e}", p.display()),
            CliError::Usage(m) | CliError::Check(m) => m.clone(),
            CliError::Output(e) => format!("cannot write output: {e}"),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("girthscope: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let stdout = io::stdout();
    match cli.command {
        Command::Girth { input, weighted } => {
            let g = input.load(weighted)?;
            let girth = if weighted { girth_weighted(&g) } else { girth_unweighted(&g) };
            writeln!(stdout.lock(), "{girth}").map_err(CliError::Output)?;
        }
        Command::Count { input, run } => {
            let g = input.load(run.weighted)?;
            let mut count = 0u64;
            let mut sink = |_: &[usize], _: u64| {
                count += 1;
                Flow::Continue
            };
            enumerate(&g, &run, &mut sink)?;
            writeln!(stdout.lock(), "{count}").map_err(CliError::Output)?;
        }
        Command::Enum { input, run, output, endpoints } => {
            let g = input.load(run.weighted)?;
            let out: Box<dyn Write> = match &output {
                Some(p) => Box::new(File::create(p).map_err(CliError::Output)?),
                None => Box::new(stdout.lock()),
            };
            let mut out = BufWriter::new(out);
            let edge_mode = matches!(run.mode, ModeArg::Edge);
            let mut failure: Option<io::Error> = None;
            let mut line = String::new();
            let mut sink = |sol: &[usize], _: u64| {
                line.clear();
                for (i, &x) in sol.iter().enumerate() {
                    if i > 0 {
                        line.push(' ');
                    }
                    if edge_mode && endpoints {
                        let e = g.edge(x);
                        line.push_str(&format!("{}-{}", g.label(e.u), g.label(e.v)));
                    } else if edge_mode {
                        line.push_str(&x.to_string());
                    } else {
                        line.push_str(&g.label(x).to_string());
                    }
                }
                line.push('\n');
                match out.write_all(line.as_bytes()) {
                    Ok(()) => Flow::Continue,
                    Err(e) => {
                        failure = Some(e);
                        Flow::Stop
                    }
                }
            };
            enumerate(&g, &run, &mut sink)?;
            let flushed = out.flush();
            match failure.map_or(flushed, Err) {
                Err(e) if e.kind() == io::ErrorKind::BrokenPipe => {}
                Err(e) => return Err(CliError::Output(e)),
                Ok(()) => {}
            }
        }
        Command::Extremal { n, k, connectivity, max_explored, no_prune, distinct } => {
            let result = ExtremalSearch::new(n, k)
                .budget(ExtremalBudget { max_explored })
                .prune(!no_prune)
                .connectivity(connectivity.into())
                .run()?;
            let mut text = result.report();
            if distinct {
                let classes = result.distinct_witnesses()?;
                let kn = complete(n);
                text.push_str(&format!("distinct_witnesses={}\n", classes.len()));
                for w in classes {
                    let pairs: Vec<String> = w.iter().map(|&e| format!("{}-{}", kn.edge(e).u, kn.edge(e).v)).collect();
                    text.push_str(&format!("class {}\n", pairs.join(" ")));
                }
            }
            stdout.lock().write_all(text.as_bytes()).map_err(CliError::Output)?;
        }
        Command::Bench { input, k, mode, baseline, limit, brute_budget } => {
            let g = input.load(false)?;
            let opts = BenchOptions { baseline, brute_budget, limit };
            let report = bench_compare(&g, &input.describe(), k, mode.into(), &opts)?;
            stdout.lock().write_all(report.to_key_values().as_bytes()).map_err(CliError::Output)?;
            if !report.passed() {
                return Err(CliError::Check("engines disagree on the solution count".into()));
            }
        }
        Command::Verify { exhaustive_n, random, seed } => {
            if exhaustive_n > 6 {
                return Err(CliError::Usage("--exhaustive-n is limited to 6".into()));
            }
            let opts = VerifyOptions { exhaustive_n, random_graphs: random, seed, ..VerifyOptions::default() };
            let report = verify_matrix(&opts);
            stdout.lock().write_all(report.summary().as_bytes()).map_err(CliError::Output)?;
            if !report.passed() {
                return Err(CliError::Check(format!("{} mismatches against the oracle", report.mismatches.len())));
            }
        }
    }
    Ok(())
}

fn enumerate<S: SolutionSink>(g: &Graph, args: &EnumArgs, sink: &mut S) -> Result<EnumSummary, CliError> {
    let cfg = args.config();
    cfg.validate_for(g)?;
    let plain = !cfg.weighted && cfg.connectivity == Connectivity::Connected;
    let fast = match args.algorithm {
        Algorithm::Baseline => false,
        Algorithm::Auto => plain,
        Algorithm::Fast if plain => true,
        Algorithm::Fast => {
            return Err(CliError::Usage(
                "--algorithm fast handles unweighted, connected enumeration only; use --algorithm baseline".into(),
            ))
        }
    };
    if !fast {
        return Ok(enumerate_baseline(g, &cfg, sink)?);
    }
    Ok(match cfg.mode {
        Mode::Induced => {
            InducedEnumerator::new(g, cfg.k)?.include_empty(cfg.include_empty).limit(cfg.limit).run(sink).summary
        }
        Mode::Edge => EdgeEnumerator::new(g, cfg.k)?.include_empty(cfg.include_empty).limit(cfg.limit).run(sink),
    })
}
