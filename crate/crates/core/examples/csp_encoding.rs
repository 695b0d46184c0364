//! Encode a cut instance as a min-cost CSP, solve it over a tree
//! decomposition and decode the labels back into a cut.
//!
//!     cargo run --example csp_encoding

use lbcut::csp::{decode, encode};
use lbcut::{build_heuristic, solve_min_csp, Graph, Instance, Strategy, Variant};

fn main() -> lbcut::Result<()> {
    // 5-cycle with terminals two steps apart: the short side has 2 edges,
    // the long side 3.
    let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])?;
    for bound in 1..=4 {
        let inst = Instance::new(g.clone(), 0, 2, bound, Variant::EdgeCut)?;
        let q = encode(&inst)?;
        let td = build_heuristic(&q.constraint_graph(), Strategy::MinFill);
        let sol = solve_min_csp(&q, &td)?.expect("edge encodings are always satisfiable");
        let cut = decode(&inst, &sol.assignment)?;
        println!(
            "L={bound}: labels {:?} -> cost {} cut {:?}",
            sol.assignment.values,
            sol.cost,
            cut.edge_members()
        );
    }
    Ok(())
}
