//! Minimum L-bounded edge and vertex cuts on a 4x4 grid.
//!
//!     cargo run --example exact_cut

use lbcut::{solve_fpt, CutMembers, Graph, Instance, Variant};

fn main() -> lbcut::Result<()> {
    let (rows, cols) = (4, 4);
    let mut edges = Vec::new();
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                edges.push((v, v + 1));
            }
            if r + 1 < rows {
                edges.push((v, v + cols));
            }
        }
    }
    let g = Graph::new(rows * cols, edges)?;
    // Diagonal neighbours in the middle of the grid.
    let (s, t) = (5, 10);

    for bound in 1..=6 {
        for variant in [Variant::EdgeCut, Variant::VertexCut] {
            let inst = Instance::new(g.clone(), s, t, bound, variant)?;
            let cut = solve_fpt(&inst, None)?;
            let members: Vec<String> = match cut.members() {
                CutMembers::Edges(e) => e.iter().map(ToString::to_string).collect(),
                CutMembers::Vertices(v) => v.iter().map(ToString::to_string).collect(),
            };
            println!("L={bound} {:<6} size {} [{}]", variant.to_string(), cut.len(), members.join(" "));
        }
    }
    Ok(())
}
