mod common;

use lbcut::dp::{soft_owners, solve_min_csp_with};
use lbcut::oracle::{brute_force_csp, DEFAULT_CSP_BUDGET};
use lbcut::{build_heuristic, solve_min_csp, Assignment, CspInstance, DpConfig, Error, Strategy, TreeDecomposition};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn covers(td: &TreeDecomposition, a: usize, scope: &[usize]) -> bool {
    scope.iter().all(|&v| td.bag_contains(a, v))
}

fn random_assignment<R: Rng>(q: &CspInstance, rng: &mut R) -> Assignment {
    Assignment::new(
        (0..q.num_vars())
            .map(|v| q.domain(v)[rng.gen_range(0..q.domain(v).len())])
            .collect(),
    )
}

#[test]
fn soft_constraints_are_charged_once() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..300 {
        let q = common::random_csp(&mut rng);
        for strategy in [Strategy::MinFill, Strategy::MinDegree] {
            let td = build_heuristic(&q.constraint_graph(), strategy);
            let owners = soft_owners(&q, &td).unwrap();
            assert_eq!(owners.len(), q.soft.len());
            for (c, &a) in q.soft.iter().zip(&owners) {
                assert!(covers(&td, a, c.scope()));
                let mut up = td.parent(a);
                while let Some(p) = up {
                    assert!(!covers(&td, p, c.scope()), "owner {a} is not topmost");
                    up = td.parent(p);
                }
            }
            for _ in 0..10 {
                let z = random_assignment(&q, &mut rng);
                let charged: usize = (0..td.num_nodes())
                    .map(|a| {
                        q.soft
                            .iter()
                            .zip(&owners)
                            .filter(|(c, &o)| o == a && !c.satisfied_by(&z))
                            .count()
                    })
                    .sum();
                assert_eq!(charged, q.violated_soft(&z));
            }
        }
    }
}

#[test]
fn dense_and_sparse_tables_agree_with_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let sparse = DpConfig {
        dense_limit: 0,
        ..DpConfig::default()
    };
    for _ in 0..300 {
        let q = common::random_csp(&mut rng);
        let td = build_heuristic(&q.constraint_graph(), Strategy::MinDegree);
        let expected = brute_force_csp(&q, DEFAULT_CSP_BUDGET).unwrap().map(|s| s.cost);
        let dense = solve_min_csp(&q, &td).unwrap();
        let sparse = solve_min_csp_with(&q, &td, &sparse).unwrap();
        assert_eq!(dense.as_ref().map(|s| s.cost), expected);
        assert_eq!(sparse.as_ref().map(|s| s.cost), expected);
        for sol in dense.iter().chain(&sparse) {
            assert!(q.satisfies_hard(&sol.assignment));
            assert_eq!(q.violated_soft(&sol.assignment), sol.cost);
        }
    }
}

#[test]
fn any_root_gives_the_same_optimum() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    for _ in 0..100 {
        let q = common::random_csp(&mut rng);
        let td = build_heuristic(&q.constraint_graph(), Strategy::MinFill);
        let base = solve_min_csp(&q, &td).unwrap().map(|s| s.cost);
        for root in 0..td.num_nodes() {
            let r = td.rerooted(root).unwrap();
            assert_eq!(solve_min_csp(&q, &r).unwrap().map(|s| s.cost), base);
        }
    }
}

#[test]
fn budget_is_enforced() {
    let q = CspInstance::new(vec![vec![0, 1, 2, 3]; 6]).unwrap();
    let td = TreeDecomposition::new(vec![(0..6).collect()], vec![]).unwrap();
    let tight = DpConfig {
        max_table_entries: 4095,
        ..DpConfig::default()
    };
    assert!(matches!(
        solve_min_csp_with(&q, &td, &tight),
        Err(Error::ResourceExceeded { needed: 4096, budget: 4095 })
    ));
}
