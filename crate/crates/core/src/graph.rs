//! Simple undirected graphs with stable vertex ids.
//!
//! A [`Graph`] owns the id space `0..n`. Removing vertices does not renumber
//! the survivors: removed vertices become inactive and isolated, so cuts and
//! paths computed on subgraphs can be reported against the original ids.

use std::collections::VecDeque;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge stored with its smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Self {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.0, self.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    active: Vec<bool>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on vertices `0..n`. Self-loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {{{u},{v}}} out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {}",
                    Edge::new(u, w[0])
                )));
            }
        }
        Ok(Graph {
            adj,
            active: vec![true; n],
            edge_count,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            active: vec![true; n],
            edge_count: 0,
        }
    }

    /// Size of the vertex id space, including inactive ids.
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn num_active(&self) -> usize {
        self.active.iter().filter(|&&a| a).count()
    }

    pub fn m(&self) -> usize {
        self.edge_count
    }

    pub fn is_active(&self, v: Vertex) -> bool {
        self.active.get(v).copied().unwrap_or(false)
    }

    /// Active vertices in ascending order.
    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.n()).filter(move |&v| self.active[v])
    }

    /// Sorted neighbor list.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| Edge(u, v)))
    }

    /// Subgraph induced by the active vertices with `keep[v]` set. Ids are
    /// preserved; dropped vertices become inactive.
    pub fn induced(&self, keep: &[bool]) -> Graph {
        let active: Vec<bool> = (0..self.n())
            .map(|v| self.active[v] && keep.get(v).copied().unwrap_or(false))
            .collect();
        let mut edge_count = 0;
        let adj: Vec<Vec<Vertex>> = (0..self.n())
            .map(|u| {
                if !active[u] {
                    return Vec::new();
                }
                let list: Vec<Vertex> = self.adj[u].iter().copied().filter(|&v| active[v]).collect();
                edge_count += list.len();
                list
            })
            .collect();
        Graph {
            adj,
            active,
            edge_count: edge_count / 2,
        }
    }

    pub fn without_vertices(&self, removed: &[Vertex]) -> Graph {
        let mut keep = self.active.clone();
        for &v in removed {
            if v < keep.len() {
                keep[v] = false;
            }
        }
        self.induced(&keep)
    }

    pub fn without_edges(&self, removed: &[Edge]) -> Graph {
        let mut g = self.clone();
        for e in removed {
            if let Ok(i) = g.adj[e.0].binary_search(&e.1) {
                g.adj[e.0].remove(i);
                let j = g.adj[e.1].binary_search(&e.0).expect("adjacency is symmetric");
                g.adj[e.1].remove(j);
                g.edge_count -= 1;
            }
        }
        g
    }

    /// Induced subgraph on `keep`, renumbered densely. Returns the new graph
    /// and the original id of each new vertex.
    pub fn compact(&self, keep: &[bool]) -> (Graph, Vec<Vertex>) {
        let kept: Vec<Vertex> = self.vertices().filter(|&v| keep.get(v).copied().unwrap_or(false)).collect();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let mut adj = vec![Vec::new(); kept.len()];
        let mut edge_count = 0;
        for (i, &v) in kept.iter().enumerate() {
            for &w in &self.adj[v] {
                if new_id[w] != usize::MAX {
                    adj[i].push(new_id[w]);
                    edge_count += 1;
                }
            }
        }
        let g = Graph {
            adj,
            active: vec![true; kept.len()],
            edge_count: edge_count / 2,
        };
        (g, kept)
    }
}

/// Hop distances from one source; `None` marks unreachable vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceVector {
    pub source: Vertex,
    pub dist: Vec<Option<usize>>,
}

impl DistanceVector {
    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.dist[v]
    }
}

pub fn bfs_distances(g: &Graph, source: Vertex) -> DistanceVector {
    let (dist, _) = bfs_tree(g, source, usize::MAX);
    DistanceVector { source, dist }
}

/// Breadth-first search that stops expanding past `limit` hops. Returns
/// distances and parents.
pub(crate) fn bfs_tree(g: &Graph, source: Vertex, limit: usize) -> (Vec<Option<usize>>, Vec<Vertex>) {
    let n = g.n();
    let mut dist = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        if du >= limit {
            continue;
        }
        for &v in g.neighbors(u) {
            if dist[v].is_none() {
                dist[v] = Some(du + 1);
                parent[v] = u;
                queue.push_back(v);
            }
        }
    }
    (dist, parent)
}

/// A shortest `s`-`t` path as a vertex sequence, if one exists.
pub fn shortest_path(g: &Graph, s: Vertex, t: Vertex) -> Option<Vec<Vertex>> {
    let (dist, parent) = bfs_tree(g, s, usize::MAX);
    dist[t]?;
    let mut path = vec![t];
    let mut v = t;
    while v != s {
        v = parent[v];
        path.push(v);
    }
    path.reverse();
    Some(path)
}

pub fn distance(g: &Graph, s: Vertex, t: Vertex) -> Option<usize> {
    bfs_distances(g, s).dist[t]
}
