//! Brute-force ground truth for small instances.

use crate::csp::{Assignment, CspInstance, Value};
use crate::dp::CspSolution;
use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Edge, Graph, Vertex};
use crate::instance::{verify_cut, CutSet, Instance, Variant};

pub const DEFAULT_MAX_CUT_SIZE: usize = 6;
pub const DEFAULT_CSP_BUDGET: u64 = 10_000_000;

/// Smallest feasible cut with at most `max_size` members, searching
/// candidate sets by size and then lexicographically. `None` means no
/// feasible cut exists within the size budget, not that none exists.
pub fn brute_force_cut(inst: &Instance, max_size: usize) -> Option<CutSet> {
    match inst.variant {
        Variant::EdgeCut => {
            let edges: Vec<Edge> = inst.graph.edges().collect();
            first_feasible(edges.len(), max_size, |pick| {
                CutSet::edges(pick.iter().map(|&i| edges[i]), "brute")
            }, inst)
        }
        Variant::VertexCut => {
            let inner: Vec<Vertex> = inst
                .graph
                .vertices()
                .filter(|&v| v != inst.s && v != inst.t)
                .collect();
            first_feasible(inner.len(), max_size, |pick| {
                CutSet::vertices(pick.iter().map(|&i| inner[i]), "brute")
            }, inst)
        }
    }
}

fn first_feasible<F>(universe: usize, max_size: usize, make: F, inst: &Instance) -> Option<CutSet>
where
    F: Fn(&[usize]) -> CutSet,
{
    for size in 0..=max_size.min(universe) {
        let mut pick: Vec<usize> = (0..size).collect();
        loop {
            let cut = make(&pick);
            if verify_cut(inst, &cut).is_ok_and(|v| v.feasible) {
                let k = cut.len();
                return Some(cut.with_lower_bound(k));
            }
            if !next_combination(&mut pick, universe) {
                break;
            }
        }
    }
    None
}

/// Advances to the next `k`-subset of `0..n` in lexicographic order.
fn next_combination(pick: &mut [usize], n: usize) -> bool {
    let k = pick.len();
    for i in (0..k).rev() {
        if pick[i] < n - k + i {
            pick[i] += 1;
            for j in i + 1..k {
                pick[j] = pick[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Exhaustive minimum-cost assignment, or `None` if the hard constraints are
/// unsatisfiable. Branches whose fully-assigned constraints already cost at
/// least the incumbent are skipped; ties go to the lexicographically first
/// assignment in domain order.
pub fn brute_force_csp(q: &CspInstance, budget: u64) -> Result<Option<CspSolution>> {
    let total = q
        .domains()
        .iter()
        .try_fold(1u128, |acc, d| acc.checked_mul(d.len() as u128))
        .unwrap_or(u128::MAX);
    if total > budget as u128 {
        return Err(Error::BudgetExceeded { needed: total, budget });
    }
    let n = q.num_vars();
    // Constraints grouped by their last scope variable: checkable once it is set.
    let mut hard_at = vec![Vec::new(); n];
    for c in &q.hard {
        hard_at[*c.scope().last().unwrap()].push(c);
    }
    let mut soft_at = vec![Vec::new(); n];
    for c in &q.soft {
        soft_at[*c.scope().last().unwrap()].push(c);
    }
    let mut values: Vec<Value> = vec![0; n];
    let mut best: Option<(usize, Vec<Value>)> = None;
    search(q, 0, 0, &mut values, &hard_at, &soft_at, &mut best);
    Ok(best.map(|(cost, values)| CspSolution {
        cost,
        assignment: Assignment::new(values),
    }))
}

fn search(
    q: &CspInstance,
    var: usize,
    cost: usize,
    values: &mut Vec<Value>,
    hard_at: &[Vec<&crate::csp::Constraint>],
    soft_at: &[Vec<&crate::csp::Constraint>],
    best: &mut Option<(usize, Vec<Value>)>,
) {
    if best.as_ref().is_some_and(|(b, _)| cost >= *b) {
        return;
    }
    if var == q.num_vars() {
        *best = Some((cost, values.clone()));
        return;
    }
    let holds = |c: &crate::csp::Constraint, values: &[Value]| {
        let tuple: Vec<Value> = c.scope().iter().map(|&v| values[v]).collect();
        c.contains(&tuple)
    };
    for &x in q.domain(var) {
        values[var] = x;
        if !hard_at[var].iter().all(|c| holds(c, values)) {
            continue;
        }
        let extra = soft_at[var].iter().filter(|c| !holds(c, values)).count();
        search(q, var + 1, cost + extra, values, hard_at, soft_at, best);
    }
}

/// All simple `s`-`t` paths with at most `bound` edges, in depth-first order
/// with neighbors visited in ascending id.
pub fn enumerate_short_paths(g: &Graph, s: Vertex, t: Vertex, bound: usize) -> Vec<Vec<Vertex>> {
    let to_t = bfs_distances(g, t);
    let mut out = Vec::new();
    let mut on_path = vec![false; g.n()];
    let mut path = vec![s];
    on_path[s] = true;
    extend(g, t, bound, &to_t.dist, &mut path, &mut on_path, &mut out);
    out
}

fn extend(
    g: &Graph,
    t: Vertex,
    bound: usize,
    to_t: &[Option<usize>],
    path: &mut Vec<Vertex>,
    on_path: &mut [bool],
    out: &mut Vec<Vec<Vertex>>,
) {
    let u = *path.last().unwrap();
    let used = path.len() - 1;
    if to_t[u].is_none_or(|d| used + d > bound) {
        return;
    }
    if u == t {
        out.push(path.clone());
        return;
    }
    for &v in g.neighbors(u) {
        if !on_path[v] {
            on_path[v] = true;
            path.push(v);
            extend(g, t, bound, to_t, path, on_path, out);
            path.pop();
            on_path[v] = false;
        }
    }
}

/// Graphs on exactly `n` vertices, one per isomorphism class, connected or
/// not. Class representatives are the smallest edge bitmask over all vertex
/// relabelings; candidates on `n` vertices come from the representatives on
/// `n - 1` vertices plus one new vertex with every possible neighborhood.
/// Practical for `n <= 7`.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 7, "isomorph-free enumeration is exhaustive and only meant for tiny graphs");
    let mut reps: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    for k in 2..=n {
        let pairs: Vec<(usize, usize)> = (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect();
        let mut pair_index = vec![vec![0usize; k]; k];
        for (i, &(u, v)) in pairs.iter().enumerate() {
            pair_index[u][v] = i;
            pair_index[v][u] = i;
        }
        let maps: Vec<Vec<usize>> = permutations(k)
            .iter()
            .map(|p| pairs.iter().map(|&(u, v)| pair_index[p[u]][p[v]]).collect())
            .collect();
        let canon = |mask: u32| {
            maps.iter()
                .map(|m| {
                    m.iter()
                        .enumerate()
                        .filter(|&(i, _)| mask >> i & 1 == 1)
                        .fold(0u32, |acc, (_, &j)| acc | 1 << j)
                })
                .min()
                .unwrap()
        };
        let mut seen = std::collections::BTreeSet::new();
        for rep in &reps {
            let base = rep.iter().fold(0u32, |acc, &(u, v)| acc | 1 << pair_index[u][v]);
            for nbrs in 0u32..1 << (k - 1) {
                let mask = (0..k - 1)
                    .filter(|&u| nbrs >> u & 1 == 1)
                    .fold(base, |acc, u| acc | 1 << pair_index[u][k - 1]);
                seen.insert(canon(mask));
            }
        }
        reps = seen
            .into_iter()
            .map(|mask| {
                pairs
                    .iter()
                    .enumerate()
                    .filter(|&(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect()
            })
            .collect();
    }
    if n == 0 {
        return Vec::new();
    }
    reps.into_iter()
        .map(|edges| Graph::new(n, edges).expect("simple by construction"))
        .collect()
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n)
        .into_iter()
        .filter(|g| bfs_distances(g, 0).dist.iter().all(Option::is_some))
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut p, &mut out);
    out
}

fn heap_permute(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap_permute(k - 1, p, out);
        if k % 2 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap_permute(k - 1, p, out);
}
