//! Text formats. Both use 1-indexed ids on disk.
//!
//! Instance files:
//!
//! ```text
//! c optional comment lines
//! p lbcut <n> <m>
//! e <u> <v>
//! ```
//!
//! Tree decompositions use the PACE 2017 `.td` format:
//!
//! ```text
//! s td <num_bags> <max_bag_size> <n>
//! b <bag_id> <v ...>
//! <bag_id> <bag_id>
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::treedec::TreeDecomposition;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

fn parse_vertex(tok: Option<&str>, line: usize, n: usize) -> Result<Vertex> {
    let v = parse_num(tok, line, "vertex")?;
    if v == 0 || v > n {
        return Err(parse_err(line, format!("vertex {v} out of range 1..={n}")));
    }
    Ok(v - 1)
}

pub fn parse_instance(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        match toks.next() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                if toks.next() != Some("lbcut") {
                    return Err(parse_err(line, "expected `p lbcut <n> <m>`"));
                }
                let n = parse_num(toks.next(), line, "vertex count")?;
                let m = parse_num(toks.next(), line, "edge count")?;
                header = Some((n, m));
            }
            Some("e") => {
                let (n, _) = header.ok_or_else(|| parse_err(line, "edge before header"))?;
                let u = parse_vertex(toks.next(), line, n)?;
                let v = parse_vertex(toks.next(), line, n)?;
                if u == v {
                    return Err(parse_err(line, format!("self-loop at {}", u + 1)));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_err(line, format!("duplicate edge {} {}", u + 1, v + 1)));
                }
                edges.push((u, v));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let (n, m) = header.ok_or_else(|| parse_err(text.lines().count().max(1), "missing header"))?;
    if edges.len() != m {
        return Err(parse_err(
            text.lines().count(),
            format!("header declares {m} edges but {} were given", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

/// Terminals recorded by a `c terminals <s> <t>` comment, 0-indexed.
pub fn read_terminals(text: &str) -> Option<(Vertex, Vertex)> {
    text.lines().find_map(|l| {
        let mut toks = l.split_whitespace();
        if toks.next()? != "c" || toks.next()? != "terminals" {
            return None;
        }
        let s: usize = toks.next()?.parse().ok()?;
        let t: usize = toks.next()?.parse().ok()?;
        (s >= 1 && t >= 1).then(|| (s - 1, t - 1))
    })
}

/// Writes the graph with edges in ascending order. Inactive vertices keep
/// their ids and simply have no edges.
pub fn write_instance(g: &Graph, comments: &[String]) -> String {
    let mut out = String::new();
    for c in comments {
        let _ = writeln!(out, "c {c}");
    }
    let _ = writeln!(out, "p lbcut {} {}", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.0 + 1, e.1 + 1);
    }
    out
}

/// Parses a PACE `.td` file. Returns the decomposition (rooted at the first
/// bag) and the vertex count declared in the header.
pub fn read_td(text: &str) -> Result<(TreeDecomposition, usize)> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut bags: Vec<Option<Vec<Vertex>>> = Vec::new();
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(first) = toks.next() else { continue };
        match first {
            "c" => continue,
            "s" => {
                if header.is_some() {
                    return Err(parse_err(line, "duplicate header"));
                }
                if toks.next() != Some("td") {
                    return Err(parse_err(line, "expected `s td <bags> <max_bag> <n>`"));
                }
                let k = parse_num(toks.next(), line, "bag count")?;
                let w = parse_num(toks.next(), line, "max bag size")?;
                let n = parse_num(toks.next(), line, "vertex count")?;
                bags = vec![None; k];
                header = Some((k, w, n));
            }
            "b" => {
                let (k, _, n) = header.ok_or_else(|| parse_err(line, "bag before header"))?;
                let id = parse_num(toks.next(), line, "bag id")?;
                if id == 0 || id > k {
                    return Err(parse_err(line, format!("bag id {id} out of range 1..={k}")));
                }
                if bags[id - 1].is_some() {
                    return Err(parse_err(line, format!("bag {id} defined twice")));
                }
                let mut bag = Vec::new();
                for tok in toks.by_ref() {
                    bag.push(parse_vertex(Some(tok), line, n)?);
                }
                bags[id - 1] = Some(bag);
            }
            _ => {
                let (k, _, _) = header.ok_or_else(|| parse_err(line, "tree edge before header"))?;
                let a = parse_num(Some(first), line, "bag id")?;
                let b = parse_num(toks.next(), line, "bag id")?;
                if a == 0 || a > k || b == 0 || b > k {
                    return Err(parse_err(line, format!("tree edge {a} {b} out of range")));
                }
                edges.push((a - 1, b - 1));
            }
        }
        if toks.next().is_some() {
            return Err(parse_err(line, "trailing tokens"));
        }
    }
    let (_, declared, n) = header.ok_or_else(|| parse_err(1, "missing `s td` header"))?;
    let bags: Vec<Vec<Vertex>> = bags
        .into_iter()
        .enumerate()
        .map(|(i, b)| b.ok_or_else(|| parse_err(0, format!("bag {} is missing", i + 1))))
        .collect::<Result<_>>()?;
    let td = TreeDecomposition::new(bags, edges)?;
    if td.max_bag_size() != declared {
        return Err(parse_err(
            1,
            format!("header declares max bag size {declared}, bags have {}", td.max_bag_size()),
        ));
    }
    Ok((td, n))
}

/// Writes a PACE `.td` file: bags by ascending id, vertices ascending, then
/// tree edges in ascending order.
pub fn write_td(td: &TreeDecomposition, n: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "s td {} {} {}", td.num_nodes(), td.max_bag_size(), n);
    for (i, bag) in td.bags().iter().enumerate() {
        let _ = write!(out, "b {}", i + 1);
        for v in bag {
            let _ = write!(out, " {}", v + 1);
        }
        out.push('\n');
    }
    for &(a, b) in td.tree_edges() {
        let _ = writeln!(out, "{} {}", a + 1, b + 1);
    }
    out
}
