mod common;

use lbcut::approx::{approx_vertex_cut, TraceEvent};
use lbcut::graph::distance;
use lbcut::oracle::{brute_force_cut, DEFAULT_MAX_CUT_SIZE};
use lbcut::{build_heuristic, prune_to_relevant, solve_fpt, verify_cut, Error, Graph, Instance, Strategy, Variant};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random planar instances with at most 14 vertices.
fn planar_instances(count: usize, seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let g = common::random_grid_subgraph(&mut rng);
        if g.n() > 14 {
            continue;
        }
        let (s, t) = common::terminals(&g, &mut rng);
        let variant = common::VARIANTS[out.len() % 2];
        out.push(Instance::new(g, s, t, rng.gen_range(1..=6), variant).unwrap());
    }
    out
}

fn non_planar_instances(seed: u64) -> Vec<Instance> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    while out.len() < 40 {
        let g = if out.len() % 2 == 0 {
            common::subdivide(5, &common::k5(), 2, &mut rng)
        } else {
            common::subdivide(6, &common::k33(), 2, &mut rng)
        };
        if g.n() > 14 {
            continue;
        }
        let (s, t) = common::terminals(&g, &mut rng);
        let variant = common::VARIANTS[out.len() / 2 % 2];
        out.push(Instance::new(g, s, t, rng.gen_range(2..=6), variant).unwrap());
    }
    out
}

fn assert_matches_oracle(inst: &Instance) -> bool {
    let oracle = brute_force_cut(inst, DEFAULT_MAX_CUT_SIZE);
    match solve_fpt(inst, None) {
        Ok(cut) => {
            assert!(verify_cut(inst, &cut).unwrap().feasible);
            match oracle {
                Some(o) => assert_eq!(cut.len(), o.len(), "{inst:?}"),
                // The oracle gave up: the optimum is beyond its size cap.
                None => assert!(cut.len() > DEFAULT_MAX_CUT_SIZE),
            }
            true
        }
        Err(Error::NoVertexCut) => {
            assert!(inst.variant == Variant::VertexCut && inst.terminals_adjacent());
            false
        }
        Err(e) => panic!("{e} on {inst:?}"),
    }
}

#[test]
fn pruned_exact_solver_matches_oracle_on_planar_graphs() {
    let solved = planar_instances(100, 14).iter().filter(|i| assert_matches_oracle(i)).count();
    assert!(solved >= 80);
}

#[test]
fn pipeline_is_unchanged_on_non_planar_graphs() {
    for inst in non_planar_instances(35) {
        assert_matches_oracle(&inst);
    }
}

/// Every kept vertex lies within `L` of `s` inside the pruned graph itself.
#[test]
fn pruned_graph_radius() {
    for inst in planar_instances(200, 99) {
        let Some(rel) = prune_to_relevant(&inst) else {
            assert!(distance(&inst.graph, inst.s, inst.t).is_none_or(|d| d > inst.bound));
            continue;
        };
        let s = rel.to_sub(inst.s).unwrap();
        for (i, &v) in rel.kept.iter().enumerate() {
            assert_eq!(rel.to_original(i), v);
            let d = distance(&rel.subgraph, s, i).expect("kept vertex reachable");
            assert!(d <= inst.bound, "{inst:?}: vertex {v} at distance {d}");
        }
    }
}

fn check_trace(inst: &Instance, trace: &[TraceEvent]) {
    for ev in trace {
        if let TraceEvent::Prune { removed, witness, .. } = ev {
            assert!(!removed.is_empty());
            assert_eq!((witness[0], *witness.last().unwrap()), (inst.s, inst.t));
            assert!(witness.len() - 1 <= inst.bound);
            assert!(witness.windows(2).all(|w| inst.graph.has_edge(w[0], w[1])));
            let inner = &witness[1..witness.len() - 1];
            assert!(inner.iter().any(|v| removed.contains(v)), "witness {witness:?} misses {removed:?}");
        }
    }
}

#[test]
fn approximation_bounds_and_witnesses() {
    let mut instances: Vec<Instance> = common::small_corpus(6, 1..=5)
        .into_iter()
        .filter(|i| i.variant == Variant::VertexCut && !i.terminals_adjacent())
        .collect();
    instances.extend(
        planar_instances(200, 5)
            .into_iter()
            .map(|i| i.with_variant(Variant::VertexCut))
            .filter(|i| !i.terminals_adjacent()),
    );
    for inst in &instances {
        let opt = brute_force_cut(inst, DEFAULT_MAX_CUT_SIZE).map(|c| c.len());
        for strategy in [Strategy::MinFill, Strategy::MinDegree] {
            let td = build_heuristic(&inst.graph, strategy);
            let r = approx_vertex_cut(inst, &td).unwrap();
            let w = td.width();
            assert!(verify_cut(inst, &r.cut).unwrap().feasible);
            assert!(r.cut.len() <= w * r.lower_bound.max(1));
            if let Some(opt) = opt {
                assert!(r.lower_bound <= opt);
                assert!(r.cut.len() <= w * opt);
            }
            check_trace(inst, &r.trace);
            assert_eq!(approx_vertex_cut(inst, &td).unwrap(), r, "not deterministic");
        }
    }
}

#[test]
fn approximation_on_rerooted_decompositions() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for inst in planar_instances(60, 8) {
        let inst = inst.with_variant(Variant::VertexCut);
        if inst.terminals_adjacent() {
            continue;
        }
        let td = build_heuristic(&inst.graph, Strategy::MinFill);
        let td = td.rerooted(rng.gen_range(0..td.num_nodes())).unwrap();
        let r = approx_vertex_cut(&inst, &td).unwrap();
        assert!(verify_cut(&inst, &r.cut).unwrap().feasible);
        assert!(r.cut.len() <= td.width() * r.lower_bound.max(1));
        check_trace(&inst, &r.trace);
    }
}

#[test]
fn disconnected_and_isolated_inputs() {
    let g = Graph::new(6, [(0, 1), (1, 2), (3, 4)]).unwrap();
    for variant in common::VARIANTS {
        let inst = Instance::new(g.clone(), 0, 4, 3, variant).unwrap();
        assert!(solve_fpt(&inst, None).unwrap().is_empty());
    }
    let inst = Instance::new(g, 0, 2, 3, Variant::VertexCut).unwrap();
    assert_eq!(solve_fpt(&inst, None).unwrap().vertex_members(), &[1]);
}
