//! Heuristic tree decompositions, validation and the PACE `.td` format.
//!
//!     cargo run --example tree_decomposition

use lbcut::io::{read_td, write_td};
use lbcut::treedec::validate;
use lbcut::{build_heuristic, Graph, Strategy};

fn main() -> lbcut::Result<()> {
    // Wheel: hub 0 joined to a 6-cycle. Treewidth 3.
    let mut edges: Vec<(usize, usize)> = (1..=6).map(|v| (0, v)).collect();
    edges.extend((1..=6).map(|v| (v, v % 6 + 1)));
    let g = Graph::new(7, edges)?;

    for strategy in [Strategy::MinFill, Strategy::MinDegree] {
        let td = build_heuristic(&g, strategy);
        println!("{strategy:?}: width {}, valid {}", td.width(), validate(&td, &g).ok);
        let text = write_td(&td, g.n());
        print!("{text}");
        let (back, _) = read_td(&text)?;
        assert_eq!(back.bags(), td.bags());
    }
    Ok(())
}
