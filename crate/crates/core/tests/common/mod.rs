//! Instance builders shared by the integration suites.
#![allow(dead_code)]

use lbcut::csp::{CspInstance, Value};
use lbcut::oracle::connected_graphs;
use lbcut::{Graph, Instance, TreeDecomposition, Variant};
use rand::seq::SliceRandom;
use rand::Rng;

pub const VARIANTS: [Variant; 2] = [Variant::EdgeCut, Variant::VertexCut];

/// Every connected graph on 2..=max_n vertices (up to isomorphism), every
/// ordered terminal pair, both variants and `L` in `bounds`.
pub fn small_corpus(max_n: usize, bounds: std::ops::RangeInclusive<usize>) -> Vec<Instance> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for g in connected_graphs(n) {
            for s in 0..n {
                for t in (0..n).filter(|&t| t != s) {
                    for variant in VARIANTS {
                        for bound in bounds.clone() {
                            out.push(Instance::new(g.clone(), s, t, bound, variant).unwrap());
                        }
                    }
                }
            }
        }
    }
    out
}

/// Edges of a `rows x cols` grid, vertices numbered row-major.
pub fn grid_edges(rows: usize, cols: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..rows {
        for j in 0..cols {
            let v = i * cols + j;
            if j + 1 < cols {
                edges.push((v, v + 1));
            }
            if i + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    edges
}

/// A grid with at most 20 vertices and each edge kept with probability 0.8.
pub fn random_grid_subgraph<R: Rng>(rng: &mut R) -> Graph {
    let shapes = [(2, 5), (3, 3), (3, 4), (3, 5), (3, 6), (4, 4), (4, 5), (2, 10)];
    let &(rows, cols) = shapes.choose(rng).unwrap();
    let edges: Vec<_> = grid_edges(rows, cols).into_iter().filter(|_| rng.gen_bool(0.8)).collect();
    Graph::new(rows * cols, edges).unwrap()
}

pub fn k5() -> Vec<(usize, usize)> {
    (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect()
}

pub fn k33() -> Vec<(usize, usize)> {
    (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect()
}

/// Replaces every edge by a path of 1 to `max_len` edges.
pub fn subdivide<R: Rng>(n: usize, edges: &[(usize, usize)], max_len: usize, rng: &mut R) -> Graph {
    let mut next = n;
    let mut out = Vec::new();
    for &(u, v) in edges {
        let len = rng.gen_range(1..=max_len);
        let mut prev = u;
        for _ in 1..len {
            out.push((prev, next));
            prev = next;
            next += 1;
        }
        out.push((prev, v));
    }
    Graph::new(next, out).unwrap()
}

/// Distinct random terminals.
pub fn terminals<R: Rng>(g: &Graph, rng: &mut R) -> (usize, usize) {
    let s = rng.gen_range(0..g.n());
    let mut t = rng.gen_range(0..g.n() - 1);
    if t >= s {
        t += 1;
    }
    (s, t)
}

/// Random CSP with at most 10 variables, domains of at most 4 values, and
/// random unary and binary relations, some hard and some soft.
pub fn random_csp<R: Rng>(rng: &mut R) -> CspInstance {
    let n = rng.gen_range(1..=10);
    let domains: Vec<Vec<Value>> = (0..n)
        .map(|_| {
            let size = rng.gen_range(1..=4);
            let base: Value = rng.gen_range(-1..=1);
            (base..base + size).collect()
        })
        .collect();
    let mut q = CspInstance::new(domains).unwrap();
    let density = rng.gen_range(0.1..0.6);
    for u in 0..n {
        for v in u + 1..n {
            if !rng.gen_bool(density) {
                continue;
            }
            let keep = rng.gen_range(0.3..0.95);
            let table: Vec<(Value, Value, bool)> = q
                .domain(u)
                .iter()
                .flat_map(|&a| q.domain(v).iter().map(move |&b| (a, b)))
                .map(|(a, b)| (a, b, rng.gen_bool(keep)))
                .collect();
            let pred = move |x: &[Value]| table.iter().any(|&(a, b, ok)| ok && a == x[0] && b == x[1]);
            if rng.gen_bool(0.3) {
                q.add_hard(vec![u, v], pred).unwrap();
            } else {
                q.add_soft(vec![u, v], pred).unwrap();
            }
        }
        if rng.gen_bool(0.3) {
            let banned: Value = *q.domain(u).choose(rng).unwrap();
            if rng.gen_bool(0.2) {
                q.add_hard(vec![u], move |x| x[0] != banned).unwrap();
            } else {
                q.add_soft(vec![u], move |x| x[0] != banned).unwrap();
            }
        }
    }
    q
}

/// Column-major `3 x k` ladder and its width-3 path decomposition with bags
/// `{p, .., p+3}`.
pub fn ladder(k: usize) -> (Graph, TreeDecomposition) {
    let mut edges = Vec::new();
    for c in 0..k {
        for r in 0..3 {
            let v = 3 * c + r;
            if r + 1 < 3 {
                edges.push((v, v + 1));
            }
            if c + 1 < k {
                edges.push((v, v + 3));
            }
        }
    }
    let n = 3 * k;
    let bags: Vec<Vec<usize>> = (0..n - 3).map(|p| (p..p + 4).collect()).collect();
    let tree: Vec<(usize, usize)> = (1..bags.len()).map(|p| (p - 1, p)).collect();
    (Graph::new(n, edges).unwrap(), TreeDecomposition::new(bags, tree).unwrap())
}
