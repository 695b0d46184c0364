//! Minimum-cost constraint satisfaction problems and the reduction from
//! L-bounded cuts.
//!
//! For the edge variant every vertex gets a label in `0..=L+1`, with `s`
//! pinned to `0` and `t` to `L+1`. An edge is kept exactly when the labels of
//! its endpoints differ by at most one, so each soft edge constraint that is
//! violated corresponds to a cut edge. Labels along a kept path grow by at
//! most one per step, hence a surviving `s`-`t` path has more than `L` edges.
//!
//! The vertex variant adds the label `-1` for deleted vertices. Edge
//! constraints become hard, with `-1` acting as a wildcard, and each
//! non-terminal vertex carries a unary soft constraint that is violated
//! exactly when it is deleted.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{bfs_distances, Edge, Graph, Vertex};
use crate::instance::{verify_cut, CutSet, Instance, Variant};

pub type Value = i32;

/// A relation over a sorted scope, stored as a dense truth table indexed by
/// the positions of the values within each variable's domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    scope: Vec<usize>,
    domains: Vec<Vec<Value>>,
    allowed: Vec<bool>,
}

impl Constraint {
    /// Builds the relation `{ tuple : pred(tuple) }` over the scope's domains.
    pub fn from_predicate<F>(scope: Vec<usize>, domains: &[Vec<Value>], pred: F) -> Result<Self>
    where
        F: Fn(&[Value]) -> bool,
    {
        check_scope(&scope, domains.len())?;
        let local: Vec<Vec<Value>> = scope.iter().map(|&v| domains[v].clone()).collect();
        let size: usize = local.iter().map(Vec::len).product();
        let mut allowed = vec![false; size];
        let mut digits = vec![0usize; scope.len()];
        let mut tuple: Vec<Value> = local.iter().map(|d| d.first().copied().unwrap_or(0)).collect();
        for slot in allowed.iter_mut() {
            for (i, &d) in digits.iter().enumerate() {
                tuple[i] = local[i][d];
            }
            *slot = pred(&tuple);
            odometer(&mut digits, &local);
        }
        Ok(Constraint {
            scope,
            domains: local,
            allowed,
        })
    }

    /// Builds the relation from an explicit tuple list.
    pub fn from_tuples(scope: Vec<usize>, domains: &[Vec<Value>], tuples: &[Vec<Value>]) -> Result<Self> {
        let mut c = Constraint::from_predicate(scope, domains, |_| false)?;
        for t in tuples {
            if t.len() != c.scope.len() {
                return Err(Error::InvalidCsp(format!(
                    "tuple {t:?} does not match arity {}",
                    c.scope.len()
                )));
            }
            let idx = c
                .value_index(t)
                .ok_or_else(|| Error::InvalidCsp(format!("tuple {t:?} lies outside the domains")))?;
            c.allowed[idx] = true;
        }
        Ok(c)
    }

    pub fn scope(&self) -> &[usize] {
        &self.scope
    }

    pub fn arity(&self) -> usize {
        self.scope.len()
    }

    fn value_index(&self, values: &[Value]) -> Option<usize> {
        let mut idx = 0;
        for (i, v) in values.iter().enumerate() {
            let d = self.domains[i].binary_search(v).ok()?;
            idx = idx * self.domains[i].len() + d;
        }
        Some(idx)
    }

    /// Whether the tuple (one value per scope variable) is in the relation.
    pub fn contains(&self, values: &[Value]) -> bool {
        self.value_index(values).is_some_and(|i| self.allowed[i])
    }

    /// Same as [`contains`](Self::contains), with values given as domain positions.
    pub fn contains_indices(&self, digits: impl IntoIterator<Item = usize>) -> bool {
        let mut idx = 0;
        for (i, d) in digits.into_iter().enumerate() {
            idx = idx * self.domains[i].len() + d;
        }
        self.allowed[idx]
    }

    /// Whether an assignment of all variables satisfies this constraint.
    pub fn satisfied_by(&self, z: &Assignment) -> bool {
        let values: Vec<Value> = self.scope.iter().map(|&v| z.values[v]).collect();
        self.contains(&values)
    }

    pub fn allowed_tuples(&self) -> BTreeSet<Vec<Value>> {
        let mut out = BTreeSet::new();
        let mut digits = vec![0usize; self.scope.len()];
        for &ok in &self.allowed {
            if ok {
                out.insert(digits.iter().enumerate().map(|(i, &d)| self.domains[i][d]).collect());
            }
            odometer(&mut digits, &self.domains);
        }
        out
    }
}

fn check_scope(scope: &[usize], num_vars: usize) -> Result<()> {
    if scope.is_empty() {
        return Err(Error::InvalidCsp("empty scope".into()));
    }
    if scope.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidCsp(format!("scope {scope:?} is not strictly ascending")));
    }
    if scope.iter().any(|&v| v >= num_vars) {
        return Err(Error::InvalidCsp(format!("scope {scope:?} out of range")));
    }
    Ok(())
}

/// Advances a mixed-radix counter, last position fastest.
pub(crate) fn odometer<T>(digits: &mut [usize], domains: &[Vec<T>]) {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < domains[i].len() {
            return;
        }
        digits[i] = 0;
    }
}

/// Variables `0..num_vars` with finite sorted domains, hard constraints that
/// must hold and soft constraints whose violations are counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspInstance {
    domains: Vec<Vec<Value>>,
    pub hard: Vec<Constraint>,
    pub soft: Vec<Constraint>,
}

impl CspInstance {
    pub fn new(mut domains: Vec<Vec<Value>>) -> Result<Self> {
        for (v, d) in domains.iter_mut().enumerate() {
            d.sort_unstable();
            d.dedup();
            if d.is_empty() {
                return Err(Error::InvalidCsp(format!("variable {v} has an empty domain")));
            }
        }
        Ok(CspInstance {
            domains,
            hard: Vec::new(),
            soft: Vec::new(),
        })
    }

    pub fn num_vars(&self) -> usize {
        self.domains.len()
    }

    pub fn domain(&self, v: usize) -> &[Value] {
        &self.domains[v]
    }

    pub fn domains(&self) -> &[Vec<Value>] {
        &self.domains
    }

    pub fn add_hard<F: Fn(&[Value]) -> bool>(&mut self, scope: Vec<usize>, pred: F) -> Result<()> {
        let c = Constraint::from_predicate(scope, &self.domains, pred)?;
        self.hard.push(c);
        Ok(())
    }

    pub fn add_soft<F: Fn(&[Value]) -> bool>(&mut self, scope: Vec<usize>, pred: F) -> Result<()> {
        let c = Constraint::from_predicate(scope, &self.domains, pred)?;
        self.soft.push(c);
        Ok(())
    }

    /// Checks domain membership of every value.
    pub fn check_domains(&self, z: &Assignment) -> Result<()> {
        if z.values.len() != self.num_vars() {
            return Err(Error::InvalidAssignment(format!(
                "{} values for {} variables",
                z.values.len(),
                self.num_vars()
            )));
        }
        for (v, x) in z.values.iter().enumerate() {
            if self.domains[v].binary_search(x).is_err() {
                return Err(Error::InvalidAssignment(format!("value {x} outside the domain of {v}")));
            }
        }
        Ok(())
    }

    pub fn satisfies_hard(&self, z: &Assignment) -> bool {
        self.check_domains(z).is_ok() && self.hard.iter().all(|c| c.satisfied_by(z))
    }

    pub fn violated_soft(&self, z: &Assignment) -> usize {
        self.soft.iter().filter(|c| !c.satisfied_by(z)).count()
    }

    /// Pairs of variables that share a constraint scope.
    pub fn constraint_graph(&self) -> Graph {
        let mut pairs = BTreeSet::new();
        for c in self.hard.iter().chain(&self.soft) {
            for (i, &a) in c.scope().iter().enumerate() {
                for &b in &c.scope()[i + 1..] {
                    pairs.insert((a, b));
                }
            }
        }
        Graph::new(self.num_vars(), pairs).expect("scopes are strictly ascending")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Assignment {
    pub values: Vec<Value>,
}

impl Assignment {
    pub fn new(values: Vec<Value>) -> Self {
        Assignment { values }
    }
}

fn label_max(inst: &Instance) -> Value {
    Value::try_from(inst.bound + 1).expect("L fits in a label")
}

/// Edge-cut encoding: labels `0..=L+1`, `z_s = 0`, `z_t = L+1`, and one soft
/// constraint `|z_u - z_v| <= 1` per edge.
pub fn encode_edge_cut(inst: &Instance) -> Result<CspInstance> {
    if inst.variant != Variant::EdgeCut {
        return Err(Error::Usage("edge encoding needs an edge-cut instance".into()));
    }
    let top = label_max(inst);
    let mut q = CspInstance::new(vec![(0..=top).collect(); inst.graph.n()])?;
    q.add_hard(vec![inst.s], |x| x[0] == 0)?;
    q.add_hard(vec![inst.t], |x| x[0] == top)?;
    for e in inst.graph.edges() {
        q.add_soft(vec![e.0, e.1], |x| (x[0] - x[1]).abs() <= 1)?;
    }
    Ok(q)
}

/// Vertex-cut encoding: `-1` marks a deleted vertex; edge constraints are hard
/// with `-1` as a wildcard, and each non-terminal carries a unary soft
/// constraint `z_v != -1`.
pub fn encode_vertex_cut(inst: &Instance) -> Result<CspInstance> {
    if inst.variant != Variant::VertexCut {
        return Err(Error::Usage("vertex encoding needs a vertex-cut instance".into()));
    }
    if inst.terminals_adjacent() {
        return Err(Error::NoVertexCut);
    }
    let top = label_max(inst);
    let g = &inst.graph;
    let domains = (0..g.n())
        .map(|v| {
            if v == inst.s || v == inst.t || !g.is_active(v) {
                (0..=top).collect()
            } else {
                (-1..=top).collect()
            }
        })
        .collect();
    let mut q = CspInstance::new(domains)?;
    q.add_hard(vec![inst.s], |x| x[0] == 0)?;
    q.add_hard(vec![inst.t], |x| x[0] == top)?;
    for e in g.edges() {
        q.add_hard(vec![e.0, e.1], |x| x[0] == -1 || x[1] == -1 || (x[0] - x[1]).abs() <= 1)?;
    }
    for v in g.vertices().filter(|&v| v != inst.s && v != inst.t) {
        q.add_soft(vec![v], |x| x[0] != -1)?;
    }
    Ok(q)
}

pub fn encode(inst: &Instance) -> Result<CspInstance> {
    match inst.variant {
        Variant::EdgeCut => encode_edge_cut(inst),
        Variant::VertexCut => encode_vertex_cut(inst),
    }
}

fn check_decodable(inst: &Instance, z: &Assignment) -> Result<CspInstance> {
    let q = encode(inst)?;
    q.check_domains(z)?;
    if let Some(c) = q.hard.iter().find(|c| !c.satisfied_by(z)) {
        return Err(Error::InvalidAssignment(format!(
            "hard constraint on {:?} violated",
            c.scope()
        )));
    }
    Ok(q)
}

/// Cut edges are those whose endpoint labels differ by more than one.
pub fn decode_edge(inst: &Instance, z: &Assignment) -> Result<CutSet> {
    check_decodable(inst, z)?;
    let cut = inst
        .graph
        .edges()
        .filter(|e| (z.values[e.0] - z.values[e.1]).abs() > 1)
        .collect::<Vec<Edge>>();
    Ok(CutSet::edges(cut, "csp"))
}

/// Cut vertices are those labelled `-1`.
pub fn decode_vertex(inst: &Instance, z: &Assignment) -> Result<CutSet> {
    check_decodable(inst, z)?;
    let cut = inst.graph.vertices().filter(|&v| z.values[v] == -1);
    Ok(CutSet::vertices(cut.collect::<Vec<Vertex>>(), "csp"))
}

pub fn decode(inst: &Instance, z: &Assignment) -> Result<CutSet> {
    match inst.variant {
        Variant::EdgeCut => decode_edge(inst, z),
        Variant::VertexCut => decode_vertex(inst, z),
    }
}

/// Labels every vertex with its distance from `s` after removing the cut,
/// truncated at `L+1`; deleted vertices get `-1`.
pub fn cut_to_assignment(inst: &Instance, cut: &CutSet) -> Result<Assignment> {
    let verdict = verify_cut(inst, cut)?;
    if !verdict.feasible {
        return Err(Error::InvalidCut("cut leaves a short s-t path".into()));
    }
    let rest = crate::instance::remove(&inst.graph, cut)?;
    let dist = bfs_distances(&rest, inst.s);
    let top = label_max(inst);
    let mut values: Vec<Value> = dist
        .dist
        .iter()
        .map(|d| match d {
            Some(d) if *d <= inst.bound => *d as Value,
            _ => top,
        })
        .collect();
    for &v in cut.vertex_members() {
        values[v] = -1;
    }
    Ok(Assignment { values })
}
