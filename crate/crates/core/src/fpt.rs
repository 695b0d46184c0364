//! Prune-then-solve pipeline for exact L-bounded cuts.
//!
//! Only vertices with `d(s,v) + d(v,t) <= L` can lie on a short `s`-`t` path,
//! so the problem is solved on the subgraph they induce. That subgraph has
//! radius at most `L` around `s`; on planar inputs its treewidth is at most
//! `3L` and on genus-`g` inputs it is `O(g L)`, which is what makes the table
//! pass fixed-parameter tractable in `L`. The decompositions built here are
//! heuristic, so those bounds are expectations and the width actually used is
//! reported instead.

use crate::dp::{solve_exact_cut_with, DpConfig};
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Edge, Graph, Vertex};
use crate::instance::{verify_cut, CutMembers, CutSet, Instance, Variant};
use crate::treedec::{prune_decomposition, TreeDecomposition};

/// The subgraph induced by vertices on short `s`-`t` paths, renumbered
/// densely. `kept[i]` is the original id of new vertex `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relevant {
    pub subgraph: Graph,
    pub kept: Vec<Vertex>,
    to_sub: Vec<Option<Vertex>>,
}

impl Relevant {
    pub fn to_sub(&self, v: Vertex) -> Option<Vertex> {
        self.to_sub.get(v).copied().flatten()
    }

    pub fn to_original(&self, v: Vertex) -> Vertex {
        self.kept[v]
    }
}

/// Returns `None` when `d(s,t) > L`, in which case the empty cut is optimal.
pub fn prune_to_relevant(inst: &Instance) -> Option<Relevant> {
    let from_s = bfs_distances(&inst.graph, inst.s);
    let from_t = bfs_distances(&inst.graph, inst.t);
    if from_s.get(inst.t).is_none_or(|d| d > inst.bound) {
        return None;
    }
    let keep: Vec<bool> = (0..inst.graph.n())
        .map(|v| match (from_s.get(v), from_t.get(v)) {
            (Some(a), Some(b)) => a + b <= inst.bound,
            _ => false,
        })
        .collect();
    let (subgraph, kept) = inst.graph.compact(&keep);
    let mut to_sub = vec![None; inst.graph.n()];
    for (i, &v) in kept.iter().enumerate() {
        to_sub[v] = Some(i);
    }
    Some(Relevant {
        subgraph,
        kept,
        to_sub,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FptResult {
    pub cut: CutSet,
    /// Width of the decomposition of the pruned graph, if a table pass ran.
    pub width_used: Option<usize>,
    /// Number of vertices left after pruning.
    pub pruned_size: usize,
}

pub fn solve_fpt(inst: &Instance, td: Option<&TreeDecomposition>) -> Result<CutSet> {
    solve_fpt_with(inst, td, &DpConfig::default()).map(|r| r.cut)
}

/// Prunes to the relevant subgraph, solves exactly there and maps the cut
/// back. A supplied decomposition (of the full graph) is restricted to the
/// kept vertices. The cut is re-verified on the original graph.
pub fn solve_fpt_with(inst: &Instance, td: Option<&TreeDecomposition>, config: &DpConfig) -> Result<FptResult> {
    if inst.variant == Variant::VertexCut && inst.terminals_adjacent() {
        return Err(Error::NoVertexCut);
    }
    let Some(relevant) = prune_to_relevant(inst) else {
        return Ok(FptResult {
            cut: CutSet::empty(inst.variant, "exact").with_lower_bound(0),
            width_used: None,
            pruned_size: 0,
        });
    };
    let sub_td = match td {
        Some(td) => Some(restrict_decomposition(td, inst, &relevant)?),
        None => None,
    };
    let sub_inst = Instance::new(
        relevant.subgraph.clone(),
        relevant.to_sub(inst.s).expect("s is relevant"),
        relevant.to_sub(inst.t).expect("t is relevant"),
        inst.bound,
        inst.variant,
    )?;
    let (sub_cut, width_used) = solve_exact_cut_with(&sub_inst, sub_td.as_ref(), config)?;
    let mut cut = match sub_cut.members() {
        CutMembers::Edges(edges) => CutSet::edges(
            edges
                .iter()
                .map(|e| Edge::new(relevant.to_original(e.0), relevant.to_original(e.1))),
            "exact",
        ),
        CutMembers::Vertices(vs) => CutSet::vertices(vs.iter().map(|&v| relevant.to_original(v)), "exact"),
    };
    cut.lower_bound = sub_cut.lower_bound;
    if !verify_cut(inst, &cut)?.feasible {
        return Err(Error::Internal(
            "cut of the pruned graph does not cut the original graph".into(),
        ));
    }
    Ok(FptResult {
        cut,
        width_used,
        pruned_size: relevant.kept.len(),
    })
}

fn restrict_decomposition(td: &TreeDecomposition, inst: &Instance, relevant: &Relevant) -> Result<TreeDecomposition> {
    let dropped: Vec<Vertex> = inst.graph.vertices().filter(|&v| relevant.to_sub(v).is_none()).collect();
    let (_, pruned) = prune_decomposition(td, &inst.graph, &dropped);
    let bags = pruned
        .bags()
        .iter()
        .map(|bag| bag.iter().map(|&v| relevant.to_sub(v)).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::DecompositionMismatch("bag holds a vertex outside the graph".into()))?;
    TreeDecomposition::with_root(bags, pruned.tree_edges().to_vec(), pruned.root())
}
