//! Ordinary minimum `s`-`t` cuts by unit-capacity max-flow.
//!
//! Augmenting paths are found by breadth-first search with arcs scanned in
//! ascending vertex order, and the returned cut is the source side of the
//! final residual graph. Both choices make the output deterministic.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex};
use crate::instance::CutSet;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u32,
    rev: usize,
}

struct Network {
    arcs: Vec<Vec<Arc>>,
}

impl Network {
    fn new(nodes: usize) -> Self {
        Network {
            arcs: vec![Vec::new(); nodes],
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: u32, back_cap: u32) {
        let rev_from = self.arcs[to].len();
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc { to, cap, rev: rev_from });
        self.arcs[to].push(Arc {
            to: from,
            cap: back_cap,
            rev: rev_to,
        });
    }

    /// Edmonds-Karp. Returns the flow value.
    fn max_flow(&mut self, source: usize, sink: usize) -> u32 {
        let mut total = 0;
        loop {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.arcs.len()];
            let mut seen = vec![false; self.arcs.len()];
            seen[source] = true;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                if u == sink {
                    break;
                }
                for (i, a) in self.arcs[u].iter().enumerate() {
                    if a.cap > 0 && !seen[a.to] {
                        seen[a.to] = true;
                        prev[a.to] = Some((u, i));
                        queue.push_back(a.to);
                    }
                }
            }
            if !seen[sink] {
                return total;
            }
            let mut bottleneck = u32::MAX;
            let mut v = sink;
            while let Some((u, i)) = prev[v] {
                bottleneck = bottleneck.min(self.arcs[u][i].cap);
                v = u;
            }
            let mut v = sink;
            while let Some((u, i)) = prev[v] {
                self.arcs[u][i].cap -= bottleneck;
                let rev = self.arcs[u][i].rev;
                self.arcs[v][rev].cap += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
    }

    fn residual_reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.arcs.len()];
        seen[source] = true;
        let mut stack = vec![source];
        while let Some(u) = stack.pop() {
            for a in &self.arcs[u] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}

/// Minimum set of vertices (excluding `s` and `t`) separating `s` from `t`.
///
/// Each vertex other than the terminals is split into an in-node and an
/// out-node joined by a unit arc; graph edges become uncapacitated arcs.
pub fn min_vertex_cut(g: &Graph, s: Vertex, t: Vertex) -> Result<CutSet> {
    if s == t || !g.is_active(s) || !g.is_active(t) {
        return Err(Error::InvalidInstance(format!("bad terminals {s},{t}")));
    }
    if g.has_edge(s, t) {
        return Err(Error::NoVertexCut);
    }
    let n = g.n();
    let infinite = u32::try_from(n + 1).unwrap_or(u32::MAX);
    let mut net = Network::new(2 * n);
    for v in g.vertices() {
        let cap = if v == s || v == t { infinite } else { 1 };
        net.add(2 * v, 2 * v + 1, cap, 0);
        for &w in g.neighbors(v) {
            net.add(2 * v + 1, 2 * w, infinite, 0);
        }
    }
    net.max_flow(2 * s + 1, 2 * t);
    let reach = net.residual_reachable(2 * s + 1);
    let cut = g
        .vertices()
        .filter(|&v| v != s && v != t && reach[2 * v] && !reach[2 * v + 1]);
    Ok(CutSet::vertices(cut, "mincut"))
}

/// Minimum set of edges separating `s` from `t`.
pub fn min_edge_cut(g: &Graph, s: Vertex, t: Vertex) -> Result<CutSet> {
    if s == t || !g.is_active(s) || !g.is_active(t) {
        return Err(Error::InvalidInstance(format!("bad terminals {s},{t}")));
    }
    let mut net = Network::new(g.n());
    for e in g.edges() {
        net.add(e.0, e.1, 1, 1);
    }
    net.max_flow(s, t);
    let reach = net.residual_reachable(s);
    let cut = g.edges().filter(|e| reach[e.0] != reach[e.1]);
    Ok(CutSet::edges(cut.collect::<Vec<Edge>>(), "mincut"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::distance;

    fn diamond() -> Graph {
        // s=0, x=1, y=2, t=3
        Graph::new(4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap()
    }

    /// Smallest vertex separator by exhaustive search.
    fn brute_vertex_cut(g: &Graph, s: Vertex, t: Vertex) -> usize {
        let inner: Vec<Vertex> = g.vertices().filter(|&v| v != s && v != t).collect();
        (0u32..1 << inner.len())
            .filter(|mask| {
                let removed: Vec<Vertex> = (0..inner.len())
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| inner[i])
                    .collect();
                distance(&g.without_vertices(&removed), s, t).is_none()
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn diamond_vertex_cut() {
        let c = min_vertex_cut(&diamond(), 0, 3).unwrap();
        assert_eq!(c.vertex_members(), &[1, 2]);
        assert_eq!(brute_vertex_cut(&diamond(), 0, 3), 2);
    }

    #[test]
    fn path_vertex_cut_takes_smallest_id() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(min_vertex_cut(&g, 0, 3).unwrap().vertex_members(), &[1]);
        assert_eq!(brute_vertex_cut(&g, 0, 3), 1);
    }

    #[test]
    fn disconnected_terminals() {
        let g = Graph::empty(2);
        assert!(min_vertex_cut(&g, 0, 1).unwrap().is_empty());
        assert!(min_edge_cut(&g, 0, 1).unwrap().is_empty());
    }

    #[test]
    fn adjacent_terminals_have_no_vertex_cut() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        assert!(matches!(min_vertex_cut(&g, 0, 1), Err(Error::NoVertexCut)));
    }

    #[test]
    fn edge_cuts() {
        let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(min_edge_cut(&path, 0, 3).unwrap().len(), 1);
        let cycle = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let c = min_edge_cut(&cycle, 0, 2).unwrap();
        assert_eq!(c.len(), 2);
        let rest = cycle.without_edges(c.edge_members());
        assert_eq!(distance(&rest, 0, 2), None);
    }

    #[test]
    fn vertex_cut_matches_brute_force_on_all_small_graphs() {
        // Every labeled graph with terminals 0 and n-1 covers every terminal
        // placement up to relabeling.
        for n in 3..=6usize {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..1 << pairs.len() {
                let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p);
                let g = Graph::new(n, edges).unwrap();
                let (s, t) = (0, n - 1);
                if g.has_edge(s, t) {
                    continue;
                }
                let c = min_vertex_cut(&g, s, t).unwrap();
                assert_eq!(c.len(), brute_vertex_cut(&g, s, t), "mask {mask:b} n {n}");
                assert_eq!(distance(&g.without_vertices(c.vertex_members()), s, t), None);
            }
        }
    }
}
