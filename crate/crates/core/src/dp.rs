//! Minimum-cost CSP solving by dynamic programming over a rooted tree
//! decomposition of the constraint graph.
//!
//! Each node keeps a table from assignments of its bag to the cheapest cost of
//! extending that assignment to the variables of its subtree. Hard constraints
//! filter every table whose bag covers their scope. A soft constraint is
//! charged only at its owner, the topmost node whose bag covers its scope, so
//! no violation is counted twice. Children are folded into the parent through
//! messages keyed by the variables the two bags share.

use std::collections::HashMap;

use crate::csp::{self, Assignment, CspInstance};
use crate::error::{Error, Result};
use crate::graph::distance;
use crate::instance::{verify_cut, CutSet, Instance, Variant};
use crate::treedec::{build_heuristic, Strategy, TreeDecomposition};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DpConfig {
    /// Largest table (product of bag domain sizes) the solver will build.
    pub max_table_entries: u64,
    /// Tables up to this size are stored densely, larger ones in a hash map.
    pub dense_limit: u64,
}

impl Default for DpConfig {
    fn default() -> Self {
        DpConfig {
            max_table_entries: 1 << 26,
            dense_limit: 1 << 22,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CspSolution {
    pub cost: usize,
    pub assignment: Assignment,
}

enum Table<T> {
    Dense(Vec<Option<T>>),
    Sparse(HashMap<u64, T>),
}

impl<T> Table<T> {
    fn new(size: u64, dense_limit: u64) -> Self {
        if size <= dense_limit {
            Table::Dense((0..size).map(|_| None).collect())
        } else {
            Table::Sparse(HashMap::new())
        }
    }

    fn get(&self, key: u64) -> Option<&T> {
        match self {
            Table::Dense(v) => v[key as usize].as_ref(),
            Table::Sparse(m) => m.get(&key),
        }
    }

    fn insert(&mut self, key: u64, value: T) {
        match self {
            Table::Dense(v) => v[key as usize] = Some(value),
            Table::Sparse(m) => {
                m.insert(key, value);
            }
        }
    }

}

/// Node table: only feasible bag assignments get a slot. Each slot stores
/// its cost and the chosen table key of every child, in child order.
struct NodeTable {
    index: Index,
    costs: Vec<u64>,
    picks: Vec<u64>,
    arity: usize,
}

enum Index {
    /// Slot per key, `u32::MAX` when absent.
    Dense(Vec<u32>),
    Sparse(HashMap<u64, u32>),
}

impl NodeTable {
    fn new(size: u64, arity: usize, dense_limit: u64) -> Self {
        let index = if size <= dense_limit {
            Index::Dense(vec![u32::MAX; size as usize])
        } else {
            Index::Sparse(HashMap::new())
        };
        NodeTable {
            index,
            costs: Vec::new(),
            picks: Vec::new(),
            arity,
        }
    }

    fn insert(&mut self, key: u64, cost: u64, picks: &[u64]) {
        let slot = u32::try_from(self.costs.len()).expect("table budget fits in u32 slots");
        match &mut self.index {
            Index::Dense(v) => v[key as usize] = slot,
            Index::Sparse(m) => {
                m.insert(key, slot);
            }
        }
        self.costs.push(cost);
        self.picks.extend_from_slice(picks);
    }

    fn slot(&self, key: u64) -> Option<usize> {
        match &self.index {
            Index::Dense(v) => Some(v[key as usize]).filter(|&s| s != u32::MAX).map(|s| s as usize),
            Index::Sparse(m) => m.get(&key).map(|&s| s as usize),
        }
    }

    fn picks(&self, key: u64) -> Option<&[u64]> {
        let slot = self.slot(key)?;
        Some(&self.picks[slot * self.arity..(slot + 1) * self.arity])
    }

    fn for_each(&self, mut f: impl FnMut(u64, u64)) {
        match &self.index {
            Index::Dense(v) => {
                for (key, &slot) in v.iter().enumerate() {
                    if slot != u32::MAX {
                        f(key as u64, self.costs[slot as usize]);
                    }
                }
            }
            Index::Sparse(m) => {
                for (&key, &slot) in m {
                    f(key, self.costs[slot as usize]);
                }
            }
        }
    }
}

struct NodePlan {
    vars: Vec<usize>,
    radices: Vec<usize>,
    size: u64,
    hard: Vec<(usize, Vec<usize>)>,
    soft: Vec<(usize, Vec<usize>)>,
}

fn decode_key(mut key: u64, radices: &[usize], digits: &mut [usize]) {
    for i in (0..radices.len()).rev() {
        let r = radices[i] as u64;
        digits[i] = (key % r) as usize;
        key /= r;
    }
}

fn advance(digits: &mut [usize], radices: &[usize]) {
    for i in (0..digits.len()).rev() {
        digits[i] += 1;
        if digits[i] < radices[i] {
            return;
        }
        digits[i] = 0;
    }
}

fn positions(scope: &[usize], vars: &[usize]) -> Option<Vec<usize>> {
    scope.iter().map(|v| vars.binary_search(v).ok()).collect()
}

/// Owner node of every soft constraint: the topmost node whose bag contains
/// the whole scope.
pub fn soft_owners(q: &CspInstance, td: &TreeDecomposition) -> Result<Vec<usize>> {
    q.soft.iter().map(|c| owner(c.scope(), td)).collect()
}

fn owner(scope: &[usize], td: &TreeDecomposition) -> Result<usize> {
    td.top_down()
        .iter()
        .copied()
        .filter(|&a| scope.iter().all(|&v| td.bag_contains(a, v)))
        .min_by_key(|&a| (td.depth(a), a))
        .ok_or_else(|| Error::DecompositionMismatch(format!("no bag covers scope {scope:?}")))
}

fn check_decomposition(q: &CspInstance, td: &TreeDecomposition) -> Result<()> {
    if let Some(v) = td.tree_violation() {
        return Err(Error::InvalidDecomposition(v));
    }
    if let Some(v) = td.bags().iter().flatten().find(|&&v| v >= q.num_vars()) {
        return Err(Error::DecompositionMismatch(format!("bag variable {v} out of range")));
    }
    if let Some(v) = td.connectivity_violation() {
        return Err(Error::DecompositionMismatch(v));
    }
    Ok(())
}

pub fn solve_min_csp(q: &CspInstance, td: &TreeDecomposition) -> Result<Option<CspSolution>> {
    solve_min_csp_with(q, td, &DpConfig::default())
}

/// Returns the optimum, or `None` when no assignment satisfies every hard
/// constraint.
pub fn solve_min_csp_with(q: &CspInstance, td: &TreeDecomposition, config: &DpConfig) -> Result<Option<CspSolution>> {
    check_decomposition(q, td)?;
    let k = td.num_nodes();
    let mut plans: Vec<NodePlan> = Vec::with_capacity(k);
    for a in 0..k {
        let vars = td.bag(a).to_vec();
        let radices: Vec<usize> = vars.iter().map(|&v| q.domain(v).len()).collect();
        let size = radices.iter().try_fold(1u128, |acc, &r| acc.checked_mul(r as u128));
        let size = match size {
            Some(s) if s <= config.max_table_entries as u128 => s as u64,
            other => {
                return Err(Error::ResourceExceeded {
                    needed: other.unwrap_or(u128::MAX),
                    budget: config.max_table_entries,
                })
            }
        };
        plans.push(NodePlan {
            vars,
            radices,
            size,
            hard: Vec::new(),
            soft: Vec::new(),
        });
    }
    for (i, c) in q.hard.iter().enumerate() {
        let mut covered = false;
        for (a, plan) in plans.iter_mut().enumerate() {
            if let Some(pos) = positions(c.scope(), td.bag(a)) {
                plan.hard.push((i, pos));
                covered = true;
            }
        }
        if !covered {
            return Err(Error::DecompositionMismatch(format!(
                "no bag covers hard scope {:?}",
                c.scope()
            )));
        }
    }
    for (i, c) in q.soft.iter().enumerate() {
        let a = owner(c.scope(), td)?;
        let pos = positions(c.scope(), td.bag(a)).expect("owner covers scope");
        plans[a].soft.push((i, pos));
    }

    let mut tables: Vec<Option<NodeTable>> = (0..k).map(|_| None).collect();
    for &a in td.top_down().iter().rev() {
        let plan = &plans[a];
        let children = td.children(a);
        // Message from each child: best child entry per assignment of the
        // shared variables, keyed in parent-position order.
        let mut messages = Vec::with_capacity(children.len());
        for &c in children {
            let child = &plans[c];
            let shared: Vec<usize> = plan
                .vars
                .iter()
                .copied()
                .filter(|v| child.vars.binary_search(v).is_ok())
                .collect();
            let parent_pos = positions(&shared, &plan.vars).expect("shared vars in parent");
            let child_pos = positions(&shared, &child.vars).expect("shared vars in child");
            let sep_radices: Vec<usize> = parent_pos.iter().map(|&p| plan.radices[p]).collect();
            let sep_size: u64 = sep_radices.iter().map(|&r| r as u64).product();
            let mut msg: Table<(u64, u64)> = Table::new(sep_size, config.dense_limit);
            let mut digits = vec![0usize; child.vars.len()];
            let child_table = tables[c].take().expect("children are solved first");
            child_table.for_each(|key, cost| {
                decode_key(key, &child.radices, &mut digits);
                let mut sep = 0u64;
                for (j, &p) in child_pos.iter().enumerate() {
                    sep = sep * sep_radices[j] as u64 + digits[p] as u64;
                }
                let better = match msg.get(sep) {
                    Some(&(best, pick)) => (cost, key) < (best, pick),
                    None => true,
                };
                if better {
                    msg.insert(sep, (cost, key));
                }
            });
            tables[c] = Some(child_table);
            messages.push((parent_pos, sep_radices, msg));
        }

        let mut table = NodeTable::new(plan.size, messages.len(), config.dense_limit);
        let mut digits = vec![0usize; plan.vars.len()];
        let mut picks = Vec::with_capacity(messages.len());
        'assign: for key in 0..plan.size {
            if key > 0 {
                advance(&mut digits, &plan.radices);
            }
            for (ci, pos) in &plan.hard {
                if !q.hard[*ci].contains_indices(pos.iter().map(|&p| digits[p])) {
                    continue 'assign;
                }
            }
            let mut cost = plan
                .soft
                .iter()
                .filter(|(ci, pos)| !q.soft[*ci].contains_indices(pos.iter().map(|&p| digits[p])))
                .count() as u64;
            picks.clear();
            for (parent_pos, sep_radices, msg) in &messages {
                let mut sep = 0u64;
                for (j, &p) in parent_pos.iter().enumerate() {
                    sep = sep * sep_radices[j] as u64 + digits[p] as u64;
                }
                match msg.get(sep) {
                    Some(&(c, pick)) => {
                        cost += c;
                        picks.push(pick);
                    }
                    None => continue 'assign,
                }
            }
            table.insert(key, cost, &picks);
        }
        tables[a] = Some(table);
    }

    let root = td.root();
    let mut best: Option<(u64, u64)> = None;
    tables[root].as_ref().expect("root solved").for_each(|key, cost| {
        if best.is_none_or(|b| (cost, key) < b) {
            best = Some((cost, key));
        }
    });
    let Some((cost, root_key)) = best else {
        return Ok(None);
    };

    let mut values: Vec<csp::Value> = (0..q.num_vars()).map(|v| q.domain(v)[0]).collect();
    let mut stack = vec![(root, root_key)];
    while let Some((a, key)) = stack.pop() {
        let plan = &plans[a];
        let mut digits = vec![0usize; plan.vars.len()];
        decode_key(key, &plan.radices, &mut digits);
        for (i, &v) in plan.vars.iter().enumerate() {
            values[v] = q.domain(v)[digits[i]];
        }
        let picks = tables[a].as_ref().unwrap().picks(key).expect("reachable entry");
        for (&c, &pick) in td.children(a).iter().zip(picks) {
            stack.push((c, pick));
        }
    }
    let assignment = Assignment::new(values);
    debug_assert!(q.satisfies_hard(&assignment));
    debug_assert_eq!(q.violated_soft(&assignment) as u64, cost);
    Ok(Some(CspSolution {
        cost: cost as usize,
        assignment,
    }))
}

/// Exact minimum L-bounded cut via the CSP encoding. Without a supplied
/// decomposition a min-fill heuristic one is built.
pub fn solve_exact_cut(inst: &Instance, td: Option<&TreeDecomposition>) -> Result<CutSet> {
    solve_exact_cut_with(inst, td, &DpConfig::default()).map(|(cut, _)| cut)
}

/// Like [`solve_exact_cut`], also returning the width of the decomposition
/// the table pass ran on (`None` when the instance was trivial).
pub fn solve_exact_cut_with(
    inst: &Instance,
    td: Option<&TreeDecomposition>,
    config: &DpConfig,
) -> Result<(CutSet, Option<usize>)> {
    if inst.variant == Variant::VertexCut && inst.terminals_adjacent() {
        return Err(Error::NoVertexCut);
    }
    if distance(&inst.graph, inst.s, inst.t).is_none_or(|d| d > inst.bound) {
        return Ok((CutSet::empty(inst.variant, "exact").with_lower_bound(0), None));
    }
    let q = csp::encode(inst)?;
    let built;
    let td = match td {
        Some(td) => td,
        None => {
            built = build_heuristic(&inst.graph, Strategy::MinFill);
            &built
        }
    };
    let solution = solve_min_csp_with(&q, td, config)?.ok_or(Error::Infeasible)?;
    let mut cut = csp::decode(inst, &solution.assignment)?;
    if cut.len() != solution.cost {
        return Err(Error::Internal(format!(
            "decoded cut has {} members but the optimum is {}",
            cut.len(),
            solution.cost
        )));
    }
    if !verify_cut(inst, &cut)?.feasible {
        return Err(Error::Internal("exact cut failed verification".into()));
    }
    cut.algorithm = "exact".into();
    cut.lower_bound = Some(solution.cost);
    Ok((cut, Some(td.width())))
}
