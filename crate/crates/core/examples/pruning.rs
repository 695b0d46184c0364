//! Only vertices on some short s-t walk matter; everything else is dropped
//! before the exact solver runs.
//!
//!     cargo run --example pruning

use lbcut::fpt::solve_fpt_with;
use lbcut::{prune_to_relevant, DpConfig, Graph, Instance, Variant};

fn main() -> lbcut::Result<()> {
    // A 2x12 ladder with terminals in adjacent columns.
    let k = 12;
    let mut edges = Vec::new();
    for c in 0..k {
        edges.push((c, c + k));
        if c + 1 < k {
            edges.push((c, c + 1));
            edges.push((c + k, c + k + 1));
        }
    }
    let g = Graph::new(2 * k, edges)?;
    for bound in [1, 3, 5, 9] {
        let inst = Instance::new(g.clone(), 5, 6 + k, bound, Variant::EdgeCut)?;
        let kept = prune_to_relevant(&inst).map_or(0, |r| r.kept.len());
        let r = solve_fpt_with(&inst, None, &DpConfig::default())?;
        println!("L={bound}: kept {kept:>2} of {} vertices, cut size {}", g.n(), r.cut.len());
    }
    Ok(())
}
