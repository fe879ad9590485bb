//! Brute-force reference for `kappa_set`.
//!
//! Shares nothing with the solver: it lists every edge subset of size at most
//! `n - 1`, keeps those forming a tree that contains `S` with all leaves in
//! `S`, then tries every collection of pairwise compatible trees.

use super::{SteinerTree, TerminalSet};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the oracle accepts.
pub const ORACLE_MAX_ORDER: usize = 7;

fn is_minimal_tree(edges: &[(usize, usize)], terminals: u32) -> bool {
    let mut verts = 0u32;
    let mut degree = [0u8; 32];
    for &(a, b) in edges {
        verts |= 1 << a | 1 << b;
        degree[a] += 1;
        degree[b] += 1;
    }
    if verts & terminals != terminals || edges.len() + 1 != verts.count_ones() as usize {
        return false;
    }
    if (0..32).any(|v| degree[v] == 1 && terminals >> v & 1 == 0) {
        return false;
    }
    let mut seen = 1u32 << verts.trailing_zeros();
    loop {
        let before = seen;
        for &(a, b) in edges {
            if seen >> a & 1 == 1 || seen >> b & 1 == 1 {
                seen |= 1 << a | 1 << b;
            }
        }
        if seen == before {
            return seen == verts;
        }
    }
}

fn choose(
    all: &[(usize, usize)],
    size: usize,
    start: usize,
    picked: &mut Vec<(usize, usize)>,
    visit: &mut impl FnMut(&[(usize, usize)]),
) {
    if picked.len() == size {
        visit(picked);
        return;
    }
    for i in start..all.len() {
        if all.len() - i < size - picked.len() {
            break;
        }
        picked.push(all[i]);
        choose(all, size, i + 1, picked, visit);
        picked.pop();
    }
}

fn guard(g: &Graph, s: &TerminalSet) -> Result<()> {
    if g.order() > ORACLE_MAX_ORDER {
        return Err(Error::TooLarge {
            n: g.order(),
            max: ORACLE_MAX_ORDER,
        });
    }
    if s.mask() & !g.vertex_set() != 0 {
        return Err(Error::Terminals("terminal outside the graph".into()));
    }
    Ok(())
}

/// Every tree whose leaves all lie in `s`, by filtering edge subsets.
pub fn minimal_trees_oracle(g: &Graph, s: &TerminalSet) -> Result<Vec<SteinerTree>> {
    guard(g, s)?;
    let all = g.edges();
    let mut out = Vec::new();
    for size in 1..g.order() {
        choose(&all, size, 0, &mut Vec::new(), &mut |edges| {
            if is_minimal_tree(edges, s.mask()) {
                out.push(SteinerTree::from_edges(edges.iter().copied()));
            }
        });
    }
    out.sort();
    Ok(out)
}

fn best_from(trees: &[SteinerTree], start: usize, chosen: &mut Vec<usize>, s: u32) -> usize {
    let mut best = chosen.len();
    for i in start..trees.len() {
        let fits = chosen.iter().all(|&j| {
            trees[i].vertices & trees[j].vertices == s
                && trees[i].edges.iter().all(|e| !trees[j].edges.contains(e))
        });
        if fits {
            chosen.push(i);
            best = best.max(best_from(trees, i + 1, chosen, s));
            chosen.pop();
        }
    }
    best
}

pub fn kappa_set_oracle(g: &Graph, s: &TerminalSet) -> Result<usize> {
    let trees = minimal_trees_oracle(g, s)?;
    Ok(best_from(&trees, 0, &mut Vec::new(), s.mask()))
}
