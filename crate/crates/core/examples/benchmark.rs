//! Generate a small corpus and benchmark every algorithm on it.
//!
//!     cargo run --release --example benchmark

use lbcut::cli::{generate, run_bench, Algo, BenchOptions, GenKind};
use lbcut::Variant;

fn main() -> lbcut::Result<()> {
    let dir = std::env::temp_dir().join("lbcut-bench-example");
    std::fs::create_dir_all(&dir)?;
    let corpus = [
        ("grid-4x5", GenKind::Grid { rows: 4, cols: 5 }),
        ("cycle-12", GenKind::Cycle { n: 12 }),
        ("diamond-5", GenKind::Diamond { k: 5 }),
        ("theta-3-4", GenKind::Theta { a: 3, b: 4 }),
        ("ktree-14-3", GenKind::PartialKTree { n: 14, k: 3, p: 0.7 }),
    ];
    for (name, kind) in corpus {
        std::fs::write(dir.join(format!("{name}.lbc")), generate(kind, 1)?)?;
    }
    let algos = vec![Algo::Exact, Algo::Approx, Algo::MincutBaseline, Algo::Brute];
    print!("{}", run_bench(&BenchOptions::new(&dir, algos, 5, Variant::VertexCut))?);
    Ok(())
}
