//! Cross-check the exact solver and the approximation against brute force on
//! every connected graph with five vertices.
//!
//!     cargo run --release --example oracle_crosscheck

use lbcut::oracle::{brute_force_cut, connected_graphs};
use lbcut::{approx_auto, solve_fpt, Instance, Variant};

fn main() -> lbcut::Result<()> {
    let (mut runs, mut worst) = (0, 1.0f64);
    for g in connected_graphs(5) {
        for t in 1..5 {
            for bound in 1..=4 {
                for variant in [Variant::EdgeCut, Variant::VertexCut] {
                    let inst = Instance::new(g.clone(), 0, t, bound, variant)?;
                    let Some(opt) = brute_force_cut(&inst, usize::MAX) else { continue };
                    assert_eq!(solve_fpt(&inst, None)?.len(), opt.len());
                    if variant == Variant::VertexCut && !opt.is_empty() {
                        let approx = approx_auto(&inst)?;
                        worst = worst.max(approx.cut.len() as f64 / opt.len() as f64);
                    }
                    runs += 1;
                }
            }
        }
    }
    println!("{runs} instances agree with brute force; worst approximation ratio {worst:.2}");
    Ok(())
}
