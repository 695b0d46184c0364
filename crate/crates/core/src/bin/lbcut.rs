use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lbcut::cli::{self, Algo, BenchOptions, GenKind, SolveOptions, VerifyOptions};
use lbcut::{build_heuristic, io, Strategy, Variant};

#[derive(Parser)]
#[command(name = "lbcut", version, about = "Length-bounded s-t cuts")]
struct Args {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Edge,
    Vertex,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Edge => Variant::EdgeCut,
            VariantArg::Vertex => Variant::VertexCut,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgoArg {
    Exact,
    Approx,
    Brute,
    MincutBaseline,
    Auto,
}

impl From<AlgoArg> for Algo {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Exact => Algo::Exact,
            AlgoArg::Approx => Algo::Approx,
            AlgoArg::Brute => Algo::Brute,
            AlgoArg::MincutBaseline => Algo::MincutBaseline,
            AlgoArg::Auto => Algo::Auto,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    MinFill,
    MinDegree,
}

#[derive(Subcommand)]
enum Cmd {
    /// Find a cut.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        /// Source vertex (1-indexed).
        #[arg(long, alias = "s")]
        source: usize,
        /// Sink vertex (1-indexed).
        #[arg(long, alias = "t")]
        sink: usize,
        /// Hop bound L.
        #[arg(long, alias = "L")]
        length: usize,
        #[arg(long, value_enum, default_value = "edge")]
        variant: VariantArg,
        #[arg(long, value_enum, default_value = "auto")]
        algo: AlgoArg,
        /// PACE `.td` decomposition of the graph.
        #[arg(long)]
        td: Option<PathBuf>,
        /// Accepted for reproducible scripts; all solvers are deterministic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Print the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Check a cut and print a short surviving path if there is one.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        /// Source vertex (1-indexed).
        #[arg(long, alias = "s")]
        source: usize,
        /// Sink vertex (1-indexed).
        #[arg(long, alias = "t")]
        sink: usize,
        /// Hop bound L.
        #[arg(long, alias = "L")]
        length: usize,
        #[arg(long, value_enum, default_value = "edge")]
        variant: VariantArg,
        /// `3,5` for vertices, `1-2,2-3` for edges.
        #[arg(long, default_value = "")]
        cut: String,
        #[arg(long)]
        json: bool,
    },
    /// Write a generated instance to stdout.
    Generate {
        #[command(subcommand)]
        kind: GenArg,
        #[arg(long, default_value_t = 0, global = true)]
        seed: u64,
    },
    /// Run algorithms over a directory of `.lbc` files and print CSV.
    Bench {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "exact,approx,mincut-baseline")]
        algos: Vec<AlgoArg>,
        #[arg(long, alias = "L")]
        length: usize,
        #[arg(long, value_enum, default_value = "vertex")]
        variant: VariantArg,
        /// Accepted for reproducible scripts; all solvers are deterministic.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a heuristic tree decomposition in PACE `.td` format.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "min-fill")]
        strategy: StrategyArg,
    },
}

#[derive(Subcommand)]
enum GenArg {
    Grid { rows: usize, cols: usize },
    Cycle { n: usize },
    Diamond { k: usize },
    Theta { a: usize, b: usize },
    PartialKtree { n: usize, k: usize, p: f64 },
}

fn fail(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(1)
}

fn main() -> ExitCode {
    match Args::parse().cmd {
        Cmd::Solve { graph, source, sink, length, variant, algo, td, seed: _, json } => {
            let mut opts = SolveOptions::new(graph, source, sink, length, variant.into(), algo.into());
            opts.td = td;
            let result = cli::run_solve(&opts);
            let code = cli::exit_code(&result);
            match &result {
                Ok(r) if json => println!("{}", r.to_json()),
                Ok(r) => print!("{}", r.to_text()),
                Err(e) => eprintln!("error: {e}"),
            }
            ExitCode::from(code as u8)
        }
        Cmd::Verify { graph, source, sink, length, variant, cut, json } => {
            let opts = VerifyOptions { graph, source, sink, length, variant: variant.into(), cut };
            match cli::run_verify(&opts) {
                Ok(r) => {
                    if json {
                        println!("{}", serde_json::to_string(&r).expect("serializes"));
                    } else {
                        print!("{}", r.to_text());
                    }
                    ExitCode::from(if r.feasible { 0 } else { 1 })
                }
                Err(e) => fail(e),
            }
        }
        Cmd::Generate { kind, seed } => {
            let kind = match kind {
                GenArg::Grid { rows, cols } => GenKind::Grid { rows, cols },
                GenArg::Cycle { n } => GenKind::Cycle { n },
                GenArg::Diamond { k } => GenKind::Diamond { k },
                GenArg::Theta { a, b } => GenKind::Theta { a, b },
                GenArg::PartialKtree { n, k, p } => GenKind::PartialKTree { n, k, p },
            };
            match cli::generate(kind, seed) {
                Ok(text) => {
                    print!("{text}");
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Cmd::Bench { corpus, algos, length, variant, seed: _ } => {
            let opts = BenchOptions::new(corpus, algos.into_iter().map(Algo::from).collect(), length, variant.into());
            match cli::run_bench(&opts) {
                Ok(csv) => {
                    print!("{csv}");
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
        Cmd::Decompose { graph, strategy } => {
            let strategy = match strategy {
                StrategyArg::MinFill => Strategy::MinFill,
                StrategyArg::MinDegree => Strategy::MinDegree,
            };
            let parsed = std::fs::read_to_string(&graph)
                .map_err(lbcut::Error::from)
                .and_then(|text| io::parse_instance(&text));
            match parsed {
                Ok(g) => {
                    print!("{}", io::write_td(&build_heuristic(&g, strategy), g.n()));
                    ExitCode::SUCCESS
                }
                Err(e) => fail(e),
            }
        }
    }
}
