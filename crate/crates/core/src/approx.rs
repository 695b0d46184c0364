//! Width-ratio approximation for L-bounded vertex cuts.
//!
//! The recursion walks a rooted tree decomposition of width `w`:
//!
//! 1. no `s`-`t` path of length `<= L`: return nothing;
//! 2. no bag holds both terminals: return an ordinary minimum vertex cut,
//!    which has at most `w` vertices;
//! 3. otherwise let `R` be the nodes whose bag holds `s` and `t` and whose
//!    subtree graph still has a short `s`-`t` path, and `b` a deepest node
//!    of `R`;
//! 4. if `B(b) = {s,t}`, solve both sides of the separator independently;
//!    otherwise delete `B(b) \ {s,t}` (at most `w - 1` vertices, and every
//!    optimal cut needs at least one vertex for the short paths inside the
//!    subtree of `b`) and recurse.
//!
//! Every step pays at most `w` per unit of certified lower bound, so the
//! returned cut is within a factor `w` of the optimum and
//! [`ApproxResult::lower_bound`] certifies it.
//!
//! When `R` is empty although some bag holds both terminals, the topmost such
//! node `a` is used instead: one terminal only occurs below `a`, so every
//! short path leaves the subtree graph of `a` through `B(a) \ {s,t}`.

use crate::error::{Error, Result};
use crate::flow::min_vertex_cut;
use crate::graph::{shortest_path, Graph, Vertex};
use crate::instance::{verify_cut, CutSet, Instance, Variant};
use crate::treedec::{build_heuristic, prune_decomposition, split_at, subtree_vertex_sets, validate, Strategy, TreeDecomposition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// The (sub)graph has no short `s`-`t` path.
    NoShortPath,
    /// No bag holds both terminals; an ordinary minimum cut was used.
    LeafMinCut { cut: Vec<Vertex> },
    /// The bag of `node` is exactly `{s,t}`; both sides were solved separately.
    Split { node: usize },
    /// `removed` (the bag of `node` minus the terminals) was taken into the cut.
    /// `witness` is a short `s`-`t` path inside the subtree graph of `node`.
    Prune {
        node: usize,
        removed: Vec<Vertex>,
        witness: Vec<Vertex>,
    },
    /// No node qualified for pruning; the bag of the topmost node holding
    /// both terminals was taken instead.
    Fallback { node: usize, removed: Vec<Vertex> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproxResult {
    pub cut: CutSet,
    /// A certified lower bound on the optimum.
    pub lower_bound: usize,
    pub width_used: usize,
    /// Recursion events in pre-order. Node ids refer to the input decomposition.
    pub trace: Vec<TraceEvent>,
}

struct Recursion {
    s: Vertex,
    t: Vertex,
    bound: usize,
    trace: Vec<TraceEvent>,
}

impl Recursion {
    fn short_path_exists(&self, g: &Graph) -> bool {
        crate::graph::distance(g, self.s, self.t).is_some_and(|d| d <= self.bound)
    }

    /// `ids[a]` is the input-decomposition id of local node `a`.
    fn solve(&mut self, g: &Graph, td: &TreeDecomposition, ids: &[usize]) -> Result<(Vec<Vertex>, usize)> {
        let (s, t) = (self.s, self.t);
        if !self.short_path_exists(g) {
            self.trace.push(TraceEvent::NoShortPath);
            return Ok((Vec::new(), 0));
        }
        let both: Vec<usize> = (0..td.num_nodes())
            .filter(|&a| td.bag_contains(a, s) && td.bag_contains(a, t))
            .collect();
        if both.is_empty() {
            let cut = min_vertex_cut(g, s, t)?.vertex_members().to_vec();
            self.trace.push(TraceEvent::LeafMinCut { cut: cut.clone() });
            return Ok((cut, 1));
        }

        let sets = subtree_vertex_sets(td)?;
        let mut candidates = Vec::new();
        for &a in &both {
            let mut mask = vec![false; g.n()];
            for &v in &sets[a] {
                mask[v] = true;
            }
            let sub = g.induced(&mask);
            if let Some(path) = shortest_path(&sub, s, t).filter(|p| p.len() <= self.bound + 1) {
                candidates.push((a, path));
            }
        }

        let terminals_only = |a: usize| td.bag(a).iter().all(|&v| v == s || v == t);
        let Some((b, witness)) = candidates
            .into_iter()
            .max_by_key(|(a, _)| (td.depth(*a), std::cmp::Reverse(*a)))
        else {
            let top = *both
                .iter()
                .min_by_key(|&&a| (td.depth(a), a))
                .expect("some bag holds both terminals");
            let removed: Vec<Vertex> = td.bag(top).iter().copied().filter(|&v| v != s && v != t).collect();
            if removed.is_empty() {
                return Err(Error::InvalidDecomposition(
                    "short path escapes a bag holding only the terminals".into(),
                ));
            }
            self.trace.push(TraceEvent::Fallback {
                node: ids[top],
                removed: removed.clone(),
            });
            return Ok((removed, 1));
        };

        if terminals_only(b) {
            if b == td.root() {
                return Err(Error::InvalidDecomposition(format!(
                    "deepest qualifying node {} is the root and holds only the terminals",
                    ids[b]
                )));
            }
            let split = split_at(td, g, b)?;
            let current = (td.num_nodes(), g.num_active());
            for (part, graph) in [(&split.below, &split.below_graph), (&split.above, &split.above_graph)] {
                if (part.num_nodes(), graph.num_active()) >= current {
                    return Err(Error::InvalidDecomposition(format!(
                        "split at node {} makes no progress",
                        ids[b]
                    )));
                }
            }
            self.trace.push(TraceEvent::Split { node: ids[b] });
            let below_ids: Vec<usize> = split.below_nodes.iter().map(|&a| ids[a]).collect();
            let above_ids: Vec<usize> = split.above_nodes.iter().map(|&a| ids[a]).collect();
            let (mut cut, lb_below) = self.solve(&split.below_graph, &split.below, &below_ids)?;
            let (rest, lb_above) = self.solve(&split.above_graph, &split.above, &above_ids)?;
            cut.extend(rest);
            return Ok((cut, lb_below + lb_above));
        }

        let removed: Vec<Vertex> = td.bag(b).iter().copied().filter(|&v| v != s && v != t).collect();
        self.trace.push(TraceEvent::Prune {
            node: ids[b],
            removed: removed.clone(),
            witness,
        });
        let (pruned_graph, pruned_td) = prune_decomposition(td, g, &removed);
        let (mut cut, lb) = self.solve(&pruned_graph, &pruned_td, ids)?;
        cut.extend(removed);
        Ok((cut, lb + 1))
    }
}

/// Approximates the minimum L-bounded vertex cut within a factor of the
/// decomposition's width. `td` must be a valid decomposition of the graph.
pub fn approx_vertex_cut(inst: &Instance, td: &TreeDecomposition) -> Result<ApproxResult> {
    if inst.variant != Variant::VertexCut {
        return Err(Error::Usage("the approximation handles vertex cuts only".into()));
    }
    if inst.terminals_adjacent() {
        return Err(Error::NoVertexCut);
    }
    let check = validate(td, &inst.graph);
    if let Some(v) = check.violation {
        return Err(Error::InvalidDecomposition(v));
    }
    let mut rec = Recursion {
        s: inst.s,
        t: inst.t,
        bound: inst.bound,
        trace: Vec::new(),
    };
    let ids: Vec<usize> = (0..td.num_nodes()).collect();
    let (members, lower_bound) = rec.solve(&inst.graph, td, &ids)?;
    let cut = CutSet::vertices(members, "approx").with_lower_bound(lower_bound);
    if !verify_cut(inst, &cut)?.feasible {
        return Err(Error::Internal("approximate cut failed verification".into()));
    }
    Ok(ApproxResult {
        cut,
        lower_bound,
        width_used: td.width(),
        trace: rec.trace,
    })
}

/// Builds a min-fill decomposition and runs [`approx_vertex_cut`] on it.
pub fn approx_auto(inst: &Instance) -> Result<ApproxResult> {
    let td = build_heuristic(&inst.graph, Strategy::MinFill);
    approx_vertex_cut(inst, &td)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_gives_single_vertex() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(g, 0, 3, 3, Variant::VertexCut).unwrap();
        let r = approx_auto(&inst).unwrap();
        assert_eq!(r.cut.len(), 1);
        assert_eq!(r.lower_bound, 1);
    }

    #[test]
    fn diamond_with_terminal_bags() {
        let g = Graph::new(4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let inst = Instance::new(g, 0, 3, 2, Variant::VertexCut).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 3, 1], vec![0, 3, 2]], vec![(0, 1)]).unwrap();
        let r = approx_vertex_cut(&inst, &td).unwrap();
        assert_eq!(r.cut.vertex_members(), &[1, 2]);
        assert!(r.lower_bound >= 1 && r.lower_bound <= 2);
        assert!(r.cut.len() <= r.width_used * 2);
        assert!(r.trace.iter().any(|e| matches!(e, TraceEvent::Prune { .. })));
    }

    #[test]
    fn empty_region_uses_fallback() {
        // s=0 x=1 y=2 t=3
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(g, 0, 3, 3, Variant::VertexCut).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1, 2], vec![0, 2, 3]], vec![(0, 1)]).unwrap();
        let r = approx_vertex_cut(&inst, &td).unwrap();
        assert_eq!(r.cut.vertex_members(), &[2]);
        assert_eq!(
            r.trace,
            vec![TraceEvent::Fallback {
                node: 1,
                removed: vec![2]
            }]
        );
    }

    #[test]
    fn distant_terminals_give_empty_cut() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(g, 0, 3, 2, Variant::VertexCut).unwrap();
        let r = approx_auto(&inst).unwrap();
        assert!(r.cut.is_empty());
        assert_eq!(r.lower_bound, 0);
    }

    #[test]
    fn rejects_edge_variant_and_adjacent_terminals() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let inst = Instance::new(g.clone(), 0, 2, 2, Variant::EdgeCut).unwrap();
        assert!(matches!(approx_auto(&inst), Err(Error::Usage(_))));
        let inst = Instance::new(g, 0, 1, 2, Variant::VertexCut).unwrap();
        assert!(matches!(approx_auto(&inst), Err(Error::NoVertexCut)));
    }

    #[test]
    fn rejects_invalid_decomposition() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let inst = Instance::new(g, 0, 3, 3, Variant::VertexCut).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1, 2]], vec![]).unwrap();
        assert!(matches!(approx_vertex_cut(&inst, &td), Err(Error::InvalidDecomposition(_))));
    }

    #[test]
    fn deterministic() {
        let g = Graph::new(6, [(0, 1), (1, 5), (0, 2), (2, 5), (0, 3), (3, 4), (4, 5)]).unwrap();
        let inst = Instance::new(g, 0, 5, 3, Variant::VertexCut).unwrap();
        assert_eq!(approx_auto(&inst).unwrap(), approx_auto(&inst).unwrap());
    }
}
