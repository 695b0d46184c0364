use std::path::{Path, PathBuf};
use std::time::Instant;

use crate::dp::DpConfig;
use crate::error::{Error, Result};
use crate::instance::{Instance, Variant};
use crate::io::{parse_instance, read_terminals};
use crate::oracle::{brute_force_cut, DEFAULT_MAX_CUT_SIZE};

use super::{solve_with, Algo};

pub const BENCH_COLUMNS: [&str; 9] = [
    "instance",
    "algo",
    "size",
    "lower_bound",
    "width_used",
    "elapsed_ms",
    "oracle",
    "ratio_vs_oracle",
    "error",
];

/// Largest graph the bench hands to the brute-force oracle.
const ORACLE_MAX_VERTICES: usize = 14;

#[derive(Debug, Clone)]
pub struct BenchOptions {
    /// Directory of `*.lbc` instance files. Terminals come from a
    /// `c terminals <s> <t>` comment, defaulting to `1` and `n`.
    pub corpus: PathBuf,
    pub algos: Vec<Algo>,
    pub length: usize,
    pub variant: Variant,
    pub dp: DpConfig,
    pub oracle_max_size: usize,
}

impl BenchOptions {
    pub fn new(corpus: impl Into<PathBuf>, algos: Vec<Algo>, length: usize, variant: Variant) -> Self {
        BenchOptions {
            corpus: corpus.into(),
            algos,
            length,
            variant,
            dp: DpConfig::default(),
            oracle_max_size: DEFAULT_MAX_CUT_SIZE,
        }
    }
}

fn corpus_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)?
        .map(|e| e.map(|e| e.path()))
        .collect::<std::io::Result<_>>()?;
    files.retain(|p| p.is_file() && p.extension().is_some_and(|x| x == "lbc"));
    files.sort();
    Ok(files)
}

fn load(path: &Path, length: usize, variant: Variant) -> Result<Instance> {
    let text = std::fs::read_to_string(path)?;
    let g = parse_instance(&text)?;
    if g.n() < 2 {
        return Err(Error::InvalidInstance("fewer than two vertices".into()));
    }
    let (s, t) = read_terminals(&text).unwrap_or((0, g.n() - 1));
    Instance::new(g, s, t, length, variant)
}

fn cell(x: Option<usize>) -> String {
    x.map_or_else(String::new, |x| x.to_string())
}

/// Runs every algorithm on every corpus instance and returns the CSV text.
/// Failures become rows with an `error` cell; rows are ordered by file name,
/// then by the order of `algos`.
pub fn run_bench(opts: &BenchOptions) -> Result<String> {
    let mut out = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Internal(format!("csv: {e}"));
    out.write_record(BENCH_COLUMNS).map_err(csv_err)?;
    for path in corpus_files(&opts.corpus)? {
        let name = path.file_name().unwrap().to_string_lossy().into_owned();
        let inst = load(&path, opts.length, opts.variant).map_err(|e| e.to_string());
        let oracle = match &inst {
            Ok(inst) if inst.graph.n() <= ORACLE_MAX_VERTICES => {
                brute_force_cut(inst, opts.oracle_max_size).map(|c| c.len())
            }
            _ => None,
        };
        for &algo in &opts.algos {
            let start = Instant::now();
            let result = inst.as_ref().map_err(Clone::clone).and_then(|inst| {
                solve_with(inst, algo, None, &opts.dp, opts.oracle_max_size).map_err(|e| e.to_string())
            });
            let elapsed = format!("{:.3}", start.elapsed().as_secs_f64() * 1e3);
            let row: Vec<String> = match result {
                Ok(r) => {
                    let size = r.cut.len();
                    let ratio = match oracle {
                        Some(0) if size == 0 => "1.0000".to_string(),
                        Some(o) if o > 0 => format!("{:.4}", size as f64 / o as f64),
                        _ => String::new(),
                    };
                    vec![
                        name.clone(),
                        algo.name().into(),
                        size.to_string(),
                        cell(r.cut.lower_bound),
                        cell(r.width_used),
                        elapsed,
                        cell(oracle),
                        ratio,
                        String::new(),
                    ]
                }
                Err(e) => vec![
                    name.clone(),
                    algo.name().into(),
                    String::new(),
                    String::new(),
                    String::new(),
                    elapsed,
                    cell(oracle),
                    String::new(),
                    e,
                ],
            };
            out.write_record(&row).map_err(csv_err)?;
        }
    }
    let bytes = out.into_inner().map_err(|e| Error::Internal(format!("csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::Internal(e.to_string()))
}
