//! The library side of the `lbcut` command-line tool: option structs, run
//! reports and the solve/verify/generate/bench entry points. Everything here
//! speaks 1-indexed external ids; the rest of the crate is 0-indexed.

mod bench;
mod generate;

use std::path::PathBuf;
use std::time::Instant;

use serde::Serialize;

pub use bench::{run_bench, BenchOptions, BENCH_COLUMNS};
pub use generate::{generate, GenKind};

use crate::approx::{approx_auto, approx_vertex_cut};
use crate::dp::DpConfig;
use crate::error::{Error, Result};
use crate::flow::{min_edge_cut, min_vertex_cut};
use crate::fpt::solve_fpt_with;
use crate::graph::{Edge, Graph, Vertex};
use crate::instance::{verify_cut, CutMembers, CutSet, Instance, Variant};
use crate::io::{parse_instance, read_td};
use crate::oracle::{brute_force_cut, DEFAULT_MAX_CUT_SIZE};
use crate::treedec::TreeDecomposition;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algo {
    Exact,
    Approx,
    Brute,
    MincutBaseline,
    Auto,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Exact => "exact",
            Algo::Approx => "approx",
            Algo::Brute => "brute",
            Algo::MincutBaseline => "mincut-baseline",
            Algo::Auto => "auto",
        }
    }
}

impl std::str::FromStr for Algo {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "exact" => Algo::Exact,
            "approx" => Algo::Approx,
            "brute" => Algo::Brute,
            "mincut-baseline" => Algo::MincutBaseline,
            "auto" => Algo::Auto,
            other => return Err(Error::Usage(format!("unknown algorithm `{other}`"))),
        })
    }
}

/// A cut member in external (1-indexed) ids.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum ExternalMember {
    Vertex(usize),
    Edge([usize; 2]),
}

fn external_members(cut: &CutSet) -> Vec<ExternalMember> {
    match cut.members() {
        CutMembers::Edges(e) => e.iter().map(|e| ExternalMember::Edge([e.0 + 1, e.1 + 1])).collect(),
        CutMembers::Vertices(v) => v.iter().map(|&v| ExternalMember::Vertex(v + 1)).collect(),
    }
}

/// Result of one solver run. `feasible` always comes from an independent
/// verification of the returned cut.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunReport {
    pub algorithm: String,
    pub variant: Variant,
    #[serde(rename = "L")]
    pub bound: usize,
    pub cut: Vec<ExternalMember>,
    pub size: usize,
    pub feasible: bool,
    pub lower_bound: Option<usize>,
    pub width_used: Option<usize>,
    pub elapsed_ms: f64,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let members: Vec<String> = self
            .cut
            .iter()
            .map(|m| match m {
                ExternalMember::Vertex(v) => v.to_string(),
                ExternalMember::Edge([u, v]) => format!("{u}-{v}"),
            })
            .collect();
        let opt = |x: Option<usize>| x.map_or_else(|| "-".to_string(), |x| x.to_string());
        format!(
            "algorithm:   {}\nvariant:     {}\nL:           {}\nsize:        {}\ncut:         {}\nfeasible:    {}\nlower_bound: {}\nwidth_used:  {}\nelapsed_ms:  {:.3}\n",
            self.algorithm,
            self.variant,
            self.bound,
            self.size,
            members.join(","),
            self.feasible,
            opt(self.lower_bound),
            opt(self.width_used),
            self.elapsed_ms
        )
    }
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    pub graph: PathBuf,
    /// 1-indexed.
    pub source: usize,
    /// 1-indexed.
    pub sink: usize,
    pub length: usize,
    pub variant: Variant,
    pub algo: Algo,
    pub td: Option<PathBuf>,
    pub dp: DpConfig,
    pub oracle_max_size: usize,
}

impl SolveOptions {
    pub fn new(graph: impl Into<PathBuf>, source: usize, sink: usize, length: usize, variant: Variant, algo: Algo) -> Self {
        SolveOptions {
            graph: graph.into(),
            source,
            sink,
            length,
            variant,
            algo,
            td: None,
            dp: DpConfig::default(),
            oracle_max_size: DEFAULT_MAX_CUT_SIZE,
        }
    }
}

pub(crate) fn external_vertex(g: &Graph, id: usize, what: &str) -> Result<Vertex> {
    if id == 0 || id > g.n() {
        return Err(Error::Usage(format!("{what} {id} out of range 1..={}", g.n())));
    }
    Ok(id - 1)
}

fn load_instance(path: &std::path::Path, source: usize, sink: usize, length: usize, variant: Variant) -> Result<Instance> {
    let g = parse_instance(&std::fs::read_to_string(path)?)?;
    let s = external_vertex(&g, source, "source")?;
    let t = external_vertex(&g, sink, "sink")?;
    Instance::new(g, s, t, length, variant)
}

fn load_td(path: &std::path::Path, g: &Graph) -> Result<TreeDecomposition> {
    let (td, n) = read_td(&std::fs::read_to_string(path)?)?;
    if n != g.n() {
        return Err(Error::DecompositionMismatch(format!(
            "decomposition is for {n} vertices, graph has {}",
            g.n()
        )));
    }
    Ok(td)
}

pub(crate) struct Solved {
    pub cut: CutSet,
    pub algorithm: String,
    pub width_used: Option<usize>,
}

pub(crate) fn solve_with(
    inst: &Instance,
    algo: Algo,
    td: Option<&TreeDecomposition>,
    dp: &DpConfig,
    oracle_max_size: usize,
) -> Result<Solved> {
    let tagged = |cut: CutSet, width_used| Solved {
        algorithm: cut.algorithm.clone(),
        cut,
        width_used,
    };
    match algo {
        Algo::Exact => {
            let r = solve_fpt_with(inst, td, dp)?;
            Ok(tagged(r.cut, r.width_used))
        }
        Algo::Approx => {
            if inst.variant == Variant::EdgeCut {
                return Err(Error::Usage("--algo approx supports --variant vertex only".into()));
            }
            let r = match td {
                Some(td) => approx_vertex_cut(inst, td)?,
                None => approx_auto(inst)?,
            };
            Ok(tagged(r.cut, Some(r.width_used)))
        }
        Algo::Brute => {
            if inst.variant == Variant::VertexCut && inst.terminals_adjacent() {
                return Err(Error::NoVertexCut);
            }
            let cut = brute_force_cut(inst, oracle_max_size).ok_or(Error::OracleUnknown {
                max_size: oracle_max_size,
            })?;
            Ok(tagged(cut, None))
        }
        Algo::MincutBaseline => {
            let mut cut = match inst.variant {
                Variant::EdgeCut => min_edge_cut(&inst.graph, inst.s, inst.t)?,
                Variant::VertexCut => min_vertex_cut(&inst.graph, inst.s, inst.t)?,
            };
            cut.algorithm = "mincut-baseline".into();
            Ok(tagged(cut, None))
        }
        Algo::Auto => match solve_with(inst, Algo::Exact, td, dp, oracle_max_size) {
            Err(Error::ResourceExceeded { .. }) => {
                let fallback = match inst.variant {
                    Variant::VertexCut => Algo::Approx,
                    Variant::EdgeCut => Algo::MincutBaseline,
                };
                let mut r = solve_with(inst, fallback, td, dp, oracle_max_size)?;
                r.algorithm = format!("auto:{}", fallback.name());
                Ok(r)
            }
            Ok(mut r) => {
                r.algorithm = "auto:exact".into();
                Ok(r)
            }
            Err(e) => Err(e),
        },
    }
}

/// Loads the instance (and decomposition), runs the chosen solver and
/// re-verifies its cut.
pub fn run_solve(opts: &SolveOptions) -> Result<RunReport> {
    let inst = load_instance(&opts.graph, opts.source, opts.sink, opts.length, opts.variant)?;
    let td = opts.td.as_deref().map(|p| load_td(p, &inst.graph)).transpose()?;
    let start = Instant::now();
    let solved = solve_with(&inst, opts.algo, td.as_ref(), &opts.dp, opts.oracle_max_size)?;
    let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    let feasible = verify_cut(&inst, &solved.cut)?.feasible;
    Ok(RunReport {
        algorithm: solved.algorithm,
        variant: inst.variant,
        bound: inst.bound,
        cut: external_members(&solved.cut),
        size: solved.cut.len(),
        feasible,
        lower_bound: solved.cut.lower_bound,
        width_used: solved.width_used,
        elapsed_ms,
    })
}

/// Process exit code for a solve: 0 for a verified cut, 2 when no cut can
/// exist, 1 for everything else (including a cut that failed verification).
pub fn exit_code(result: &Result<RunReport>) -> i32 {
    match result {
        Ok(r) if r.feasible => 0,
        Ok(_) => 1,
        Err(Error::NoVertexCut | Error::Infeasible) => 2,
        Err(_) => 1,
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub graph: PathBuf,
    pub source: usize,
    pub sink: usize,
    pub length: usize,
    pub variant: Variant,
    /// Comma-separated ids (`3,5`) or, for edges, endpoint pairs (`1-2,2-3`).
    pub cut: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub feasible: bool,
    /// 1-indexed vertex sequence of a short surviving path.
    pub witness: Option<Vec<usize>>,
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        match &self.witness {
            None => "feasible\n".to_string(),
            Some(path) => {
                let ids: Vec<String> = path.iter().map(usize::to_string).collect();
                format!("infeasible\nwitness: {}\n", ids.join(" "))
            }
        }
    }
}

pub fn parse_cut(text: &str, variant: Variant, g: &Graph) -> Result<CutSet> {
    let items = text.split(',').map(str::trim).filter(|s| !s.is_empty());
    let bad = |item: &str| Error::InvalidCut(format!("cannot parse cut member `{item}`"));
    let id = |tok: &str, item: &str| -> Result<Vertex> {
        let v: usize = tok.trim().parse().map_err(|_| bad(item))?;
        if v == 0 || v > g.n() {
            return Err(Error::InvalidCut(format!("vertex {v} out of range")));
        }
        Ok(v - 1)
    };
    match variant {
        Variant::VertexCut => {
            let vs = items.map(|item| id(item, item)).collect::<Result<Vec<_>>>()?;
            Ok(CutSet::vertices(vs, "given"))
        }
        Variant::EdgeCut => {
            let es = items
                .map(|item| {
                    let (u, v) = item.split_once('-').ok_or_else(|| bad(item))?;
                    Ok(Edge::new(id(u, item)?, id(v, item)?))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(CutSet::edges(es, "given"))
        }
    }
}

pub fn run_verify(opts: &VerifyOptions) -> Result<VerifyReport> {
    let inst = load_instance(&opts.graph, opts.source, opts.sink, opts.length, opts.variant)?;
    let cut = parse_cut(&opts.cut, opts.variant, &inst.graph)?;
    let verdict = verify_cut(&inst, &cut)?;
    Ok(VerifyReport {
        feasible: verdict.feasible,
        witness: verdict.witness.map(|p| p.into_iter().map(|v| v + 1).collect()),
    })
}
