//! Rooted tree decompositions.
//!
//! Node ids are dense `0..num_nodes`. A decomposition may be constructed from
//! arbitrary bags and tree edges; [`validate`] reports whether the result is a
//! tree satisfying the three decomposition axioms. Operations that need a
//! rooted tree return [`Error::InvalidDecomposition`] on forests.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<Vertex>>,
    tree_edges: Vec<(usize, usize)>,
    root: usize,
    adj: Vec<Vec<usize>>,
    parent: Vec<Option<usize>>,
    children: Vec<Vec<usize>>,
    depth: Vec<usize>,
    /// Nodes reachable from the root, in breadth-first order.
    order: Vec<usize>,
}

impl TreeDecomposition {
    /// Builds a decomposition rooted at node 0. Bags are sorted and deduplicated.
    pub fn new(bags: Vec<Vec<Vertex>>, tree_edges: Vec<(usize, usize)>) -> Result<Self> {
        Self::with_root(bags, tree_edges, 0)
    }

    pub fn with_root(mut bags: Vec<Vec<Vertex>>, tree_edges: Vec<(usize, usize)>, root: usize) -> Result<Self> {
        let k = bags.len();
        if k == 0 {
            return Err(Error::InvalidDecomposition("no nodes".into()));
        }
        if root >= k {
            return Err(Error::InvalidDecomposition(format!("root {root} out of range")));
        }
        for bag in &mut bags {
            bag.sort_unstable();
            bag.dedup();
        }
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(tree_edges.len());
        for (a, b) in tree_edges {
            if a >= k || b >= k || a == b {
                return Err(Error::InvalidDecomposition(format!("bad tree edge ({a},{b})")));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        let mut adj = vec![Vec::new(); k];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut td = TreeDecomposition {
            bags,
            tree_edges: edges,
            root,
            adj,
            parent: Vec::new(),
            children: Vec::new(),
            depth: Vec::new(),
            order: Vec::new(),
        };
        td.orient();
        Ok(td)
    }

    fn orient(&mut self) {
        let k = self.bags.len();
        self.parent = vec![None; k];
        self.children = vec![Vec::new(); k];
        self.depth = vec![0; k];
        self.order.clear();
        let mut seen = vec![false; k];
        seen[self.root] = true;
        let mut queue = VecDeque::from([self.root]);
        while let Some(a) = queue.pop_front() {
            self.order.push(a);
            for &b in &self.adj[a] {
                if !seen[b] {
                    seen[b] = true;
                    self.parent[b] = Some(a);
                    self.children[a].push(b);
                    self.depth[b] = self.depth[a] + 1;
                    queue.push_back(b);
                }
            }
        }
    }

    /// The same decomposition rooted elsewhere.
    pub fn rerooted(&self, root: usize) -> Result<Self> {
        Self::with_root(self.bags.clone(), self.tree_edges.clone(), root)
    }

    pub fn num_nodes(&self) -> usize {
        self.bags.len()
    }

    pub fn bag(&self, a: usize) -> &[Vertex] {
        &self.bags[a]
    }

    pub fn bags(&self) -> &[Vec<Vertex>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn root(&self) -> usize {
        self.root
    }

    pub fn parent(&self, a: usize) -> Option<usize> {
        self.parent[a]
    }

    pub fn children(&self, a: usize) -> &[usize] {
        &self.children[a]
    }

    pub fn depth(&self, a: usize) -> usize {
        self.depth[a]
    }

    /// Nodes in breadth-first order from the root; parents precede children.
    pub fn top_down(&self) -> &[usize] {
        &self.order
    }

    pub fn bag_contains(&self, a: usize, v: Vertex) -> bool {
        self.bags[a].binary_search(&v).is_ok()
    }

    /// Max bag size minus one (zero when every bag is empty).
    pub fn width(&self) -> usize {
        self.max_bag_size().saturating_sub(1)
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn tree_violation(&self) -> Option<String> {
        let k = self.num_nodes();
        if self.tree_edges.len() + 1 != k {
            return Some(format!(
                "not a tree: {} nodes but {} tree edges",
                k,
                self.tree_edges.len()
            ));
        }
        if self.tree_edges.windows(2).any(|w| w[0] == w[1]) {
            return Some("not a tree: repeated tree edge".into());
        }
        if self.order.len() != k {
            return Some("not a tree: disconnected".into());
        }
        None
    }

    fn require_tree(&self) -> Result<()> {
        match self.tree_violation() {
            Some(v) => Err(Error::InvalidDecomposition(v)),
            None => Ok(()),
        }
    }

    /// Checks that the nodes containing each vertex form a connected subtree.
    /// Assumes the decomposition is a tree.
    pub fn connectivity_violation(&self) -> Option<String> {
        // In a rooted tree, the nodes holding v are connected iff exactly one
        // of them has a parent not holding v.
        let mut tops: std::collections::HashMap<Vertex, usize> = std::collections::HashMap::new();
        for a in 0..self.num_nodes() {
            for &v in &self.bags[a] {
                let parent_has = self.parent[a].is_some_and(|p| self.bag_contains(p, v));
                if !parent_has {
                    *tops.entry(v).or_default() += 1;
                }
            }
        }
        let mut bad: Vec<Vertex> = tops.into_iter().filter(|&(_, c)| c > 1).map(|(v, _)| v).collect();
        bad.sort_unstable();
        bad.first()
            .map(|v| format!("nodes containing vertex {v} are not connected"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Validation {
    pub ok: bool,
    pub violation: Option<String>,
}

/// Checks the decomposition axioms against `g`: the tree shape, vertex
/// coverage, edge coverage and connectivity of every vertex's node set.
pub fn validate(td: &TreeDecomposition, g: &Graph) -> Validation {
    let fail = |msg: String| Validation {
        ok: false,
        violation: Some(msg),
    };
    if let Some(v) = td.tree_violation() {
        return fail(v);
    }
    let mut covered = vec![false; g.n()];
    for (a, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if !g.is_active(v) {
                return fail(format!("bag {a} holds {v}, which is not a graph vertex"));
            }
            covered[v] = true;
        }
    }
    if let Some(v) = g.vertices().find(|&v| !covered[v]) {
        return fail(format!("vertex {v} is in no bag"));
    }
    for e in g.edges() {
        if !(0..td.num_nodes()).any(|a| td.bag_contains(a, e.0) && td.bag_contains(a, e.1)) {
            return fail(format!("edge {e} is in no bag"));
        }
    }
    if let Some(v) = td.connectivity_violation() {
        return fail(v);
    }
    Validation {
        ok: true,
        violation: None,
    }
}

pub fn width(td: &TreeDecomposition) -> usize {
    td.width()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    MinFill,
    MinDegree,
}

/// Decomposition from a greedy elimination ordering of the active vertices.
///
/// The bag of an eliminated vertex is the vertex plus its neighbors at the
/// time of elimination; its parent is the node of the earliest-eliminated
/// of those neighbors. Nodes are numbered in reverse elimination order so
/// the last-eliminated vertex is the root, node 0. Components are chained
/// under the root.
pub fn build_heuristic(g: &Graph, strategy: Strategy) -> TreeDecomposition {
    let n = g.n();
    let mut alive: Vec<bool> = (0..n).map(|v| g.is_active(v)).collect();
    let mut nbrs: Vec<std::collections::BTreeSet<Vertex>> =
        (0..n).map(|v| g.neighbors(v).iter().copied().collect()).collect();
    let mut elim_order = Vec::with_capacity(g.num_active());
    let mut elim_bags = Vec::with_capacity(g.num_active());
    let remaining = g.num_active();
    for _ in 0..remaining {
        let pick = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| {
                let score = match strategy {
                    Strategy::MinDegree => nbrs[v].len(),
                    Strategy::MinFill => fill_in(&nbrs, v),
                };
                (score, nbrs[v].len(), v)
            })
            .expect("a vertex remains");
        let neighbors: Vec<Vertex> = nbrs[pick].iter().copied().collect();
        for (i, &a) in neighbors.iter().enumerate() {
            for &b in &neighbors[i + 1..] {
                nbrs[a].insert(b);
                nbrs[b].insert(a);
            }
            nbrs[a].remove(&pick);
        }
        alive[pick] = false;
        let mut bag = neighbors;
        bag.push(pick);
        elim_order.push(pick);
        elim_bags.push(bag);
    }
    if elim_order.is_empty() {
        return TreeDecomposition::new(vec![Vec::new()], Vec::new()).expect("single node");
    }
    let count = elim_order.len();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in elim_order.iter().enumerate() {
        position[v] = i;
    }
    let node_of = |i: usize| count - 1 - i;
    let mut bags = vec![Vec::new(); count];
    let mut edges = Vec::with_capacity(count - 1);
    for (i, bag) in elim_bags.into_iter().enumerate() {
        let v = elim_order[i];
        let next = bag
            .iter()
            .filter(|&&w| w != v)
            .map(|&w| position[w])
            .min();
        match next {
            Some(j) => edges.push((node_of(i), node_of(j))),
            None if node_of(i) != 0 => edges.push((node_of(i), 0)),
            None => {}
        }
        bags[node_of(i)] = bag;
    }
    TreeDecomposition::new(bags, edges).expect("elimination tree is well formed")
}

fn fill_in(nbrs: &[std::collections::BTreeSet<Vertex>], v: Vertex) -> usize {
    let list: Vec<Vertex> = nbrs[v].iter().copied().collect();
    let mut missing = 0;
    for (i, &a) in list.iter().enumerate() {
        for &b in &list[i + 1..] {
            if !nbrs[a].contains(&b) {
                missing += 1;
            }
        }
    }
    missing
}

/// The two halves of a decomposition around node `b`.
///
/// `below` is the subtree of `b` and its descendants, rooted at `b`;
/// `above` is everything except the strict descendants of `b`, keeping the
/// original root. The `*_nodes` vectors map each new node id to the
/// original one.
#[derive(Debug, Clone)]
pub struct SubtreeSplit {
    pub below: TreeDecomposition,
    pub above: TreeDecomposition,
    pub below_graph: Graph,
    pub above_graph: Graph,
    pub below_nodes: Vec<usize>,
    pub above_nodes: Vec<usize>,
}

pub fn split_at(td: &TreeDecomposition, g: &Graph, b: usize) -> Result<SubtreeSplit> {
    td.require_tree()?;
    if b >= td.num_nodes() {
        return Err(Error::InvalidDecomposition(format!("node {b} out of range")));
    }
    let k = td.num_nodes();
    let mut in_below = vec![false; k];
    in_below[b] = true;
    let mut stack = vec![b];
    while let Some(a) = stack.pop() {
        for &c in td.children(a) {
            in_below[c] = true;
            stack.push(c);
        }
    }
    let below_nodes: Vec<usize> = (0..k).filter(|&a| in_below[a]).collect();
    let above_nodes: Vec<usize> = (0..k).filter(|&a| !in_below[a] || a == b).collect();
    let below = restrict(td, &below_nodes, b)?;
    let above = restrict(td, &above_nodes, td.root())?;
    let below_graph = g.induced(&vertex_mask(g.n(), below.bags()));
    let above_graph = g.induced(&vertex_mask(g.n(), above.bags()));
    Ok(SubtreeSplit {
        below,
        above,
        below_graph,
        above_graph,
        below_nodes,
        above_nodes,
    })
}

fn restrict(td: &TreeDecomposition, nodes: &[usize], root: usize) -> Result<TreeDecomposition> {
    let mut new_id = vec![usize::MAX; td.num_nodes()];
    for (i, &a) in nodes.iter().enumerate() {
        new_id[a] = i;
    }
    let bags = nodes.iter().map(|&a| td.bag(a).to_vec()).collect();
    let edges = td
        .tree_edges()
        .iter()
        .filter(|&&(a, c)| new_id[a] != usize::MAX && new_id[c] != usize::MAX)
        .map(|&(a, c)| (new_id[a], new_id[c]))
        .collect();
    TreeDecomposition::with_root(bags, edges, new_id[root])
}

fn vertex_mask(n: usize, bags: &[Vec<Vertex>]) -> Vec<bool> {
    let mut mask = vec![false; n];
    for bag in bags {
        for &v in bag {
            mask[v] = true;
        }
    }
    mask
}

/// Deletes `removed` from the graph and from every bag. Empty bags stay so
/// the tree keeps its shape.
pub fn prune_decomposition(td: &TreeDecomposition, g: &Graph, removed: &[Vertex]) -> (Graph, TreeDecomposition) {
    let mut gone = vec![false; g.n()];
    for &v in removed {
        gone[v] = true;
    }
    let bags = td
        .bags()
        .iter()
        .map(|bag| bag.iter().copied().filter(|&v| !gone[v]).collect())
        .collect();
    let pruned = TreeDecomposition::with_root(bags, td.tree_edges().to_vec(), td.root())
        .expect("same tree shape");
    (g.without_vertices(removed), pruned)
}

/// For every node `a`, the sorted union of the bags in the subtree of `a`.
pub fn subtree_vertex_sets(td: &TreeDecomposition) -> Result<Vec<Vec<Vertex>>> {
    td.require_tree()?;
    let mut sets: Vec<Vec<Vertex>> = td.bags().to_vec();
    for &a in td.top_down().iter().rev() {
        if let Some(p) = td.parent(a) {
            let merged = merge_sorted(&sets[p], &sets[a]);
            sets[p] = merged;
        }
    }
    Ok(sets)
}

fn merge_sorted(a: &[Vertex], b: &[Vertex]) -> Vec<Vertex> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path3() -> Graph {
        Graph::new(3, [(0, 1), (1, 2)]).unwrap()
    }

    fn grid(r: usize, c: usize) -> Graph {
        let mut edges = Vec::new();
        for i in 0..r {
            for j in 0..c {
                let v = i * c + j;
                if j + 1 < c {
                    edges.push((v, v + 1));
                }
                if i + 1 < r {
                    edges.push((v, v + c));
                }
            }
        }
        Graph::new(r * c, edges).unwrap()
    }

    #[test]
    fn single_bag_is_valid() {
        let g = grid(2, 3);
        let td = TreeDecomposition::new(vec![(0..6).collect()], vec![]).unwrap();
        assert!(validate(&td, &g).ok);
        assert_eq!(td.width(), 5);
    }

    #[test]
    fn path_decomposition() {
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]).unwrap();
        assert!(validate(&td, &path3()).ok);
        assert_eq!(td.width(), 1);
    }

    #[test]
    fn forest_is_rejected() {
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![]).unwrap();
        let v = validate(&td, &path3());
        assert!(!v.ok);
        assert!(v.violation.unwrap().contains("not a tree"));
    }

    #[test]
    fn coverage_violations() {
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![2]], vec![(0, 1)]).unwrap();
        assert!(validate(&td, &path3()).violation.unwrap().contains("edge"));
        let td = TreeDecomposition::new(vec![vec![0, 1]], vec![]).unwrap();
        assert!(validate(&td, &path3()).violation.unwrap().contains("no bag"));
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![0]], vec![(0, 1), (1, 2)]).unwrap();
        assert!(validate(&td, &path3()).violation.unwrap().contains("not connected"));
    }

    #[test]
    fn widths() {
        let td = TreeDecomposition::new(vec![vec![0, 1, 2, 3]], vec![]).unwrap();
        assert_eq!(td.width(), 3);
        let td = TreeDecomposition::new(vec![vec![0], vec![1]], vec![(0, 1)]).unwrap();
        assert_eq!(td.width(), 0);
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2, 3], vec![3, 4]], vec![(0, 1), (1, 2)]).unwrap();
        assert_eq!(td.width(), 2);
    }

    #[test]
    fn heuristic_on_tree_has_width_one() {
        let g = Graph::new(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]).unwrap();
        for strategy in [Strategy::MinFill, Strategy::MinDegree] {
            let td = build_heuristic(&g, strategy);
            assert!(validate(&td, &g).ok);
            assert_eq!(td.width(), 1);
        }
    }

    #[test]
    fn heuristic_on_k4() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let td = build_heuristic(&g, Strategy::MinFill);
        assert!(validate(&td, &g).ok);
        assert_eq!(td.width(), 3);
    }

    #[test]
    fn heuristic_on_grid() {
        let g = grid(3, 3);
        let td = build_heuristic(&g, Strategy::MinFill);
        assert!(validate(&td, &g).ok);
        assert!(td.width() <= 4 && td.width() >= 3, "width {}", td.width());
    }

    #[test]
    fn heuristic_handles_components_and_inactive_vertices() {
        let g = Graph::new(6, [(0, 1), (2, 3), (4, 5)]).unwrap().without_vertices(&[5]);
        let td = build_heuristic(&g, Strategy::MinDegree);
        assert!(validate(&td, &g).ok, "{:?}", validate(&td, &g));
        assert_eq!(td.root(), 0);
    }

    #[test]
    fn split_at_root_and_leaf() {
        let g = path3();
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]).unwrap();
        let split = split_at(&td, &g, 0).unwrap();
        assert_eq!(split.below.bags(), td.bags());
        assert_eq!(split.above.bags(), &[vec![0, 1]]);
        let split = split_at(&td, &g, 1).unwrap();
        assert_eq!(split.below.bags(), &[vec![1, 2]]);
        assert_eq!(split.below_graph.num_active(), 2);
    }

    #[test]
    fn split_middle_of_chain() {
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]], vec![(0, 1), (1, 2)]).unwrap();
        let split = split_at(&td, &g, 1).unwrap();
        assert_eq!(split.below.num_nodes(), 2);
        assert_eq!(split.above.num_nodes(), 2);
        assert_eq!(split.below_nodes, vec![1, 2]);
        assert_eq!(split.above_nodes, vec![0, 1]);
        assert_eq!(split.below.bag(split.below.root()), &[1, 2]);
        assert!(validate(&split.below, &split.below_graph).ok);
        assert!(validate(&split.above, &split.above_graph).ok);
        let shared: Vec<Vertex> = split
            .below_graph
            .vertices()
            .filter(|&v| split.above_graph.is_active(v))
            .collect();
        assert_eq!(shared, vec![1, 2]);
    }

    #[test]
    fn prune_examples() {
        let g = Graph::new(4, [(0, 1), (1, 3), (0, 2), (2, 3)]).unwrap();
        let td = TreeDecomposition::new(vec![vec![0, 3, 1], vec![0, 3, 2]], vec![(0, 1)]).unwrap();
        assert!(validate(&td, &g).ok);

        let (g0, td0) = prune_decomposition(&td, &g, &[]);
        assert_eq!(g0, g);
        assert_eq!(td0, td);

        let (g1, td1) = prune_decomposition(&td, &g, &[1]);
        assert_eq!(td1.bags(), &[vec![0, 3], vec![0, 2, 3]]);
        assert_eq!(g1.num_active(), 3);
        assert!(validate(&td1, &g1).ok);

        let (g2, td2) = prune_decomposition(&td, &g, &[0, 1, 2, 3]);
        assert_eq!(g2.num_active(), 0);
        assert!(td2.bags().iter().all(Vec::is_empty));
        assert!(validate(&td2, &g2).ok);
    }

    #[test]
    fn subtree_sets_on_chain() {
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2]], vec![(0, 1)]).unwrap();
        assert_eq!(subtree_vertex_sets(&td).unwrap(), vec![vec![0, 1, 2], vec![1, 2]]);
    }

    #[test]
    fn rerooting() {
        let td = TreeDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]], vec![(0, 1), (1, 2)]).unwrap();
        let r = td.rerooted(2).unwrap();
        assert_eq!(r.root(), 2);
        assert_eq!(r.parent(0), Some(1));
        assert_eq!(r.depth(0), 2);
    }
}
