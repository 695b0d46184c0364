mod common;

use lbcut::graph::distance;
use lbcut::oracle::{all_graphs, enumerate_short_paths};
use lbcut::{min_vertex_cut, remove, verify_cut, CutSet, Edge, Graph, Instance, Variant};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn brute_separator(g: &Graph, s: usize, t: usize) -> usize {
    let inner: Vec<usize> = g.vertices().filter(|&v| v != s && v != t).collect();
    (0u32..1 << inner.len())
        .filter(|mask| {
            let removed: Vec<usize> = (0..inner.len()).filter(|i| mask >> i & 1 == 1).map(|i| inner[i]).collect();
            distance(&g.without_vertices(&removed), s, t).is_none()
        })
        .map(|mask| mask.count_ones() as usize)
        .min()
        .unwrap()
}

fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::new(n, edges).unwrap()
}

#[test]
fn min_vertex_cut_on_every_graph_up_to_seven_vertices() {
    let counts: Vec<usize> = (1..=7).map(|n| all_graphs(n).len()).collect();
    assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    for n in 2..=7 {
        for g in all_graphs(n) {
            for s in 0..n {
                for t in (0..n).filter(|&t| t != s && !g.has_edge(s, t)) {
                    let cut = min_vertex_cut(&g, s, t).unwrap();
                    assert_eq!(cut.len(), brute_separator(&g, s, t));
                    assert_eq!(distance(&g.without_vertices(cut.vertex_members()), s, t), None);
                }
            }
        }
    }
}

#[test]
fn min_vertex_cut_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(200);
    let mut checked = 0;
    while checked < 200 {
        let n = rng.gen_range(2..=10);
        let g = random_graph(n, rng.gen_range(0.1..0.7), &mut rng);
        let (s, t) = common::terminals(&g, &mut rng);
        if g.has_edge(s, t) {
            continue;
        }
        let cut = min_vertex_cut(&g, s, t).unwrap();
        assert_eq!(cut.len(), brute_separator(&g, s, t));
        checked += 1;
    }
}

/// Every subset of edges (or inner vertices) is feasible exactly when it hits
/// every short path.
#[test]
fn verify_cut_is_a_hitting_set_test() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for round in 0..150 {
        let n = if round < 100 { rng.gen_range(3..=8) } else { 12 };
        let g = random_graph(n, rng.gen_range(0.15..0.5), &mut rng);
        let (s, t) = common::terminals(&g, &mut rng);
        let bound = rng.gen_range(1..=5);
        let paths = enumerate_short_paths(&g, s, t, bound);
        for p in &paths {
            assert!(p.len() - 1 <= bound && p[0] == s && *p.last().unwrap() == t);
        }
        for _ in 0..20 {
            let edges: Vec<Edge> = g.edges().filter(|_| rng.gen_bool(0.3)).collect();
            let inst = Instance::new(g.clone(), s, t, bound, Variant::EdgeCut).unwrap();
            let hits = paths.iter().all(|p| p.windows(2).any(|w| edges.contains(&Edge::new(w[0], w[1]))));
            assert_eq!(verify_cut(&inst, &CutSet::edges(edges, "t")).unwrap().feasible, hits);

            let vs: Vec<usize> = g.vertices().filter(|&v| v != s && v != t && rng.gen_bool(0.3)).collect();
            let inst = inst.with_variant(Variant::VertexCut);
            let hits = paths.iter().all(|p| p.iter().any(|v| vs.contains(v)));
            assert_eq!(verify_cut(&inst, &CutSet::vertices(vs, "t")).unwrap().feasible, hits);
        }
    }
}

proptest! {
    #[test]
    fn remove_empty_is_identity(n in 2usize..9, bits in proptest::collection::vec(any::<bool>(), 36)) {
        let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        let g = Graph::new(n, pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p)).unwrap();
        prop_assert_eq!(remove(&g, &CutSet::empty(Variant::EdgeCut, "t")).unwrap(), g.clone());
        prop_assert_eq!(remove(&g, &CutSet::empty(Variant::VertexCut, "t")).unwrap(), g);
    }

    #[test]
    fn feasibility_is_monotone(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(rng.gen_range(3..=9), 0.4, &mut rng);
        let (s, t) = common::terminals(&g, &mut rng);
        let bound = rng.gen_range(1..=4);
        let all: Vec<Edge> = g.edges().collect();
        let inst = Instance::new(g, s, t, bound, Variant::EdgeCut).unwrap();
        let cut: Vec<Edge> = all.iter().copied().filter(|_| rng.gen_bool(0.5)).collect();
        if verify_cut(&inst, &CutSet::edges(cut.clone(), "t")).unwrap().feasible {
            let mut bigger = cut;
            bigger.extend(all.iter().copied().filter(|_| rng.gen_bool(0.5)));
            prop_assert!(verify_cut(&inst, &CutSet::edges(bigger, "t")).unwrap().feasible);
        }
    }
}
