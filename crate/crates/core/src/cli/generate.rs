use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::write_instance;

/// Instance families. Terminal suggestions are recorded in the output as a
/// `c terminals <s> <t>` comment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GenKind {
    /// `rows x cols` grid; terminals at opposite corners.
    Grid { rows: usize, cols: usize },
    /// Cycle on `n` vertices; terminals roughly opposite.
    Cycle { n: usize },
    /// `k` internally disjoint `s`-`t` paths of length two.
    Diamond { k: usize },
    /// Two `s`-`t` paths with `a` and `b` edges.
    Theta { a: usize, b: usize },
    /// Random `k`-tree on `n` vertices with each edge kept with probability `p`.
    PartialKTree { n: usize, k: usize, p: f64 },
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::Usage(msg.into())
}

fn build(kind: GenKind, rng: &mut ChaCha8Rng) -> Result<(Graph, usize, usize)> {
    match kind {
        GenKind::Grid { rows, cols } => {
            if rows == 0 || cols == 0 || rows * cols < 2 {
                return Err(invalid("grid needs at least two vertices"));
            }
            let mut edges = Vec::new();
            for i in 0..rows {
                for j in 0..cols {
                    let v = i * cols + j;
                    if j + 1 < cols {
                        edges.push((v, v + 1));
                    }
                    if i + 1 < rows {
                        edges.push((v, v + cols));
                    }
                }
            }
            Ok((Graph::new(rows * cols, edges)?, 0, rows * cols - 1))
        }
        GenKind::Cycle { n } => {
            if n < 3 {
                return Err(invalid("cycle needs at least three vertices"));
            }
            let g = Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))?;
            Ok((g, 0, n / 2))
        }
        GenKind::Diamond { k } => {
            if k == 0 {
                return Err(invalid("diamond needs at least one middle vertex"));
            }
            let edges = (0..k).flat_map(|i| [(0, 2 + i), (2 + i, 1)]);
            Ok((Graph::new(k + 2, edges)?, 0, 1))
        }
        GenKind::Theta { a, b } => {
            if a == 0 || b == 0 || (a == 1 && b == 1) {
                return Err(invalid("theta needs positive path lengths, at most one of them 1"));
            }
            let n = 2 + (a - 1) + (b - 1);
            let mut edges = Vec::new();
            let mut next = 2;
            for len in [a, b] {
                let mut prev = 0;
                for _ in 0..len - 1 {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
                edges.push((prev, 1));
            }
            Ok((Graph::new(n, edges)?, 0, 1))
        }
        GenKind::PartialKTree { n, k, p } => {
            if k == 0 || n < k + 1 || n < 2 || !(0.0..=1.0).contains(&p) {
                return Err(invalid("partial k-tree needs k >= 1, n >= max(k+1, 2) and 0 <= p <= 1"));
            }
            let mut edges = Vec::new();
            let mut cliques: Vec<Vec<usize>> = Vec::new();
            for u in 0..=k {
                for v in u + 1..=k {
                    edges.push((u, v));
                }
            }
            for skip in 0..=k {
                cliques.push((0..=k).filter(|&v| v != skip).collect());
            }
            for v in k + 1..n {
                let base = cliques[rng.gen_range(0..cliques.len())].clone();
                for &u in &base {
                    edges.push((u, v));
                }
                for skip in 0..k {
                    let mut c: Vec<usize> = base.iter().copied().enumerate().filter(|&(i, _)| i != skip).map(|(_, u)| u).collect();
                    c.push(v);
                    cliques.push(c);
                }
            }
            let kept: Vec<(usize, usize)> = edges.into_iter().filter(|_| rng.gen_bool(p)).collect();
            Ok((Graph::new(n, kept)?, 0, n - 1))
        }
    }
}

fn describe(kind: GenKind) -> String {
    match kind {
        GenKind::Grid { rows, cols } => format!("grid {rows} {cols}"),
        GenKind::Cycle { n } => format!("cycle {n}"),
        GenKind::Diamond { k } => format!("diamond {k}"),
        GenKind::Theta { a, b } => format!("theta {a} {b}"),
        GenKind::PartialKTree { n, k, p } => format!("partial-ktree {n} {k} {p}"),
    }
}

/// Generates an instance file. Output is a pure function of `kind` and `seed`.
pub fn generate(kind: GenKind, seed: u64) -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (g, s, t) = build(kind, &mut rng)?;
    let comments = vec![
        format!("generated {} seed {seed}", describe(kind)),
        format!("terminals {} {}", s + 1, t + 1),
    ];
    Ok(write_instance(&g, &comments))
}
