//! Problem instances, candidate cuts and cut verification.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bfs_tree, Edge, Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[serde(rename = "edge")]
    EdgeCut,
    #[serde(rename = "vertex")]
    VertexCut,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::EdgeCut => "edge",
            Variant::VertexCut => "vertex",
        })
    }
}

impl std::str::FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edge" => Ok(Variant::EdgeCut),
            "vertex" => Ok(Variant::VertexCut),
            other => Err(Error::Usage(format!("unknown variant `{other}`"))),
        }
    }
}

/// A graph with terminals `s`, `t` and hop bound `L`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub s: Vertex,
    pub t: Vertex,
    pub bound: usize,
    pub variant: Variant,
}

impl Instance {
    pub fn new(graph: Graph, s: Vertex, t: Vertex, bound: usize, variant: Variant) -> Result<Self> {
        if !graph.is_active(s) || !graph.is_active(t) {
            return Err(Error::InvalidInstance(format!(
                "terminals {s},{t} must be vertices of the graph"
            )));
        }
        if s == t {
            return Err(Error::InvalidInstance("s and t must differ".into()));
        }
        if bound == 0 {
            return Err(Error::InvalidInstance("L must be at least 1".into()));
        }
        Ok(Instance {
            graph,
            s,
            t,
            bound,
            variant,
        })
    }

    pub fn with_graph(&self, graph: Graph) -> Self {
        Instance { graph, ..self.clone() }
    }

    pub fn with_variant(&self, variant: Variant) -> Self {
        Instance { variant, ..self.clone() }
    }

    pub fn terminals_adjacent(&self) -> bool {
        self.graph.has_edge(self.s, self.t)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CutMembers {
    Edges(Vec<Edge>),
    Vertices(Vec<Vertex>),
}

/// A proposed cut. Members are kept sorted and distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutSet {
    members: CutMembers,
    /// Certified lower bound on the optimum, when the producing algorithm has one.
    pub lower_bound: Option<usize>,
    pub algorithm: String,
}

impl CutSet {
    pub fn edges<I: IntoIterator<Item = Edge>>(edges: I, algorithm: &str) -> Self {
        let mut list: Vec<Edge> = edges.into_iter().map(|e| Edge::new(e.0, e.1)).collect();
        list.sort_unstable();
        list.dedup();
        CutSet {
            members: CutMembers::Edges(list),
            lower_bound: None,
            algorithm: algorithm.to_string(),
        }
    }

    pub fn vertices<I: IntoIterator<Item = Vertex>>(vertices: I, algorithm: &str) -> Self {
        let mut list: Vec<Vertex> = vertices.into_iter().collect();
        list.sort_unstable();
        list.dedup();
        CutSet {
            members: CutMembers::Vertices(list),
            lower_bound: None,
            algorithm: algorithm.to_string(),
        }
    }

    pub fn empty(variant: Variant, algorithm: &str) -> Self {
        match variant {
            Variant::EdgeCut => CutSet::edges([], algorithm),
            Variant::VertexCut => CutSet::vertices([], algorithm),
        }
    }

    pub fn with_lower_bound(mut self, lower_bound: usize) -> Self {
        self.lower_bound = Some(lower_bound);
        self
    }

    pub fn variant(&self) -> Variant {
        match self.members {
            CutMembers::Edges(_) => Variant::EdgeCut,
            CutMembers::Vertices(_) => Variant::VertexCut,
        }
    }

    pub fn members(&self) -> &CutMembers {
        &self.members
    }

    /// Edge members; empty for a vertex cut.
    pub fn edge_members(&self) -> &[Edge] {
        match &self.members {
            CutMembers::Edges(e) => e,
            CutMembers::Vertices(_) => &[],
        }
    }

    /// Vertex members; empty for an edge cut.
    pub fn vertex_members(&self) -> &[Vertex] {
        match &self.members {
            CutMembers::Vertices(v) => v,
            CutMembers::Edges(_) => &[],
        }
    }

    pub fn len(&self) -> usize {
        match &self.members {
            CutMembers::Edges(e) => e.len(),
            CutMembers::Vertices(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Deletes the cut from the graph. Vertex ids are preserved.
pub fn remove(g: &Graph, cut: &CutSet) -> Result<Graph> {
    match cut.members() {
        CutMembers::Edges(edges) => {
            if let Some(e) = edges.iter().find(|e| !g.has_edge(e.0, e.1)) {
                return Err(Error::InvalidCut(format!("edge {e} is not in the graph")));
            }
            Ok(g.without_edges(edges))
        }
        CutMembers::Vertices(vertices) => {
            if let Some(v) = vertices.iter().find(|&&v| !g.is_active(v)) {
                return Err(Error::InvalidCut(format!("vertex {v} is not in the graph")));
            }
            Ok(g.without_vertices(vertices))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub feasible: bool,
    /// An `s`-`t` path with at most `L` edges that avoids the cut.
    pub witness: Option<Vec<Vertex>>,
}

/// Checks that every `s`-`t` path in `G \ cut` has more than `L` edges.
pub fn verify_cut(inst: &Instance, cut: &CutSet) -> Result<Verdict> {
    if cut.variant() != inst.variant {
        return Err(Error::InvalidCut(format!(
            "{} cut supplied for a {} instance",
            cut.variant(),
            inst.variant
        )));
    }
    if cut.vertex_members().iter().any(|&v| v == inst.s || v == inst.t) {
        return Err(Error::InvalidCut("a vertex cut may not contain s or t".into()));
    }
    let rest = remove(&inst.graph, cut)?;
    let (dist, parent) = bfs_tree(&rest, inst.s, inst.bound);
    match dist[inst.t] {
        Some(d) if d <= inst.bound => {
            let mut path = vec![inst.t];
            let mut v = inst.t;
            while v != inst.s {
                v = parent[v];
                path.push(v);
            }
            path.reverse();
            Ok(Verdict {
                feasible: false,
                witness: Some(path),
            })
        }
        _ => Ok(Verdict {
            feasible: true,
            witness: None,
        }),
    }
}
