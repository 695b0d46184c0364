//! The width-ratio approximation, its certified lower bound and its trace.
//!
//!     cargo run --example approx_vertex_cut

use lbcut::{approx_vertex_cut, build_heuristic, solve_fpt, Graph, Instance, Strategy, TreeDecomposition, Variant};

fn main() -> lbcut::Result<()> {
    // Three s-t routes of length 2, 3 and 4 sharing nothing but the terminals.
    let g = Graph::new(8, [(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 7), (7, 1)])?;
    let inst = Instance::new(g.clone(), 0, 1, 3, Variant::VertexCut)?;

    let td = build_heuristic(&g, Strategy::MinFill);
    let r = approx_vertex_cut(&inst, &td)?;
    println!("width {}: cut {:?}, lower bound {}", r.width_used, r.cut.vertex_members(), r.lower_bound);
    for ev in &r.trace {
        println!("  {ev:?}");
    }
    println!("optimum {}", solve_fpt(&inst, None)?.len());

    // A hand-made decomposition on which no node qualifies for pruning, so
    // the topmost bag holding both terminals is taken instead.
    let path = Graph::new(4, [(0, 1), (1, 2), (2, 3)])?;
    let inst = Instance::new(path, 0, 3, 3, Variant::VertexCut)?;
    let td = TreeDecomposition::new(vec![vec![0, 1, 2], vec![0, 2, 3]], vec![(0, 1)])?;
    let r = approx_vertex_cut(&inst, &td)?;
    println!("fallback fixture: cut {:?}, trace {:?}", r.cut.vertex_members(), r.trace);
    Ok(())
}
