//! Exact maximum packing of internally disjoint Steiner trees.

use serde::{Deserialize, Serialize};

use super::trees::{minimal_footprint_trees, Candidate};
use super::{bounds, check_k, TerminalSet, TreePacking};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingResult {
    /// `kappa_set`, or any value at least the requested target when the
    /// search was cut short.
    pub value: usize,
    pub packing: TreePacking,
}

struct Packer<'a> {
    g: &'a Graph,
    terms: Vec<usize>,
    others: VertexSet,
    cands: Vec<Candidate>,
    stop_at: usize,
    best: Vec<usize>,
    chosen: Vec<usize>,
}

impl Packer<'_> {
    /// Upper bound on how many more trees fit, given what is already used.
    fn room(&self, used: VertexSet, used_te: u8) -> usize {
        let free = self.others & !used;
        let k = self.terms.len();
        let free_te = !used_te & if k == 2 { 0b1 } else { 0b111 };
        // every further tree leaves each terminal through its own edge
        let ports = self
            .terms
            .iter()
            .map(|&t| {
                let te = self
                    .terms
                    .iter()
                    .filter(|&&u| u != t && self.g.has_edge(t, u))
                    .filter(|&&u| {
                        let bit = super::trees::pair_bit(&self.terms, t, u).unwrap();
                        free_te >> bit & 1 == 1
                    })
                    .count();
                (self.g.neighbors(t) & free).count_ones() as usize + te
            })
            .min()
            .unwrap_or(0);
        // all but one of them needs a non-terminal vertex
        let te_only = usize::from(free_te.count_ones() as usize >= k - 1);
        ports.min(free.count_ones() as usize + te_only)
    }

    /// Returns true once `stop_at` trees have been found.
    fn search(&mut self, from: usize, used: VertexSet, used_te: u8) -> bool {
        if self.chosen.len() > self.best.len() {
            self.best = self.chosen.clone();
            if self.best.len() >= self.stop_at {
                return true;
            }
        }
        if self.chosen.len() + self.room(used, used_te) <= self.best.len() {
            return false;
        }
        for j in from..self.cands.len() {
            let fp = self.cands[j].footprint;
            if fp.internal & used != 0 || fp.terminal_edges & used_te != 0 {
                continue;
            }
            self.chosen.push(j);
            let done = self.search(j + 1, used | fp.internal, used_te | fp.terminal_edges);
            self.chosen.pop();
            if done {
                return true;
            }
            if self.chosen.len() + self.room(used, used_te) <= self.best.len() {
                return false;
            }
        }
        false
    }
}

/// Maximum number of internally disjoint trees connecting `s`, with a
/// certificate.
///
/// With `target = Some(t)` the search stops as soon as `t` trees are found
/// and the certificate then has exactly `t` trees. Terminals in different
/// components give 0 with an empty certificate.
pub fn max_packing(g: &Graph, s: &TerminalSet, target: Option<usize>) -> Result<PackingResult> {
    check_k(s.len())?;
    if s.mask() & !g.vertex_set() != 0 {
        return Err(Error::Terminals("terminal outside the graph".into()));
    }
    let empty = |value| PackingResult {
        value,
        packing: TreePacking {
            terminals: *s,
            trees: Vec::new(),
        },
    };
    let first = s.mask().trailing_zeros() as usize;
    if g.component_of(first) & s.mask() != s.mask() || target == Some(0) {
        return Ok(empty(0));
    }
    let limit = bounds(g, s).min();
    let stop_at = target.map_or(limit, |t| t.min(limit));
    if stop_at == 0 {
        return Ok(empty(0));
    }
    let mut packer = Packer {
        g,
        terms: s.vertices(),
        others: g.vertex_set() & !s.mask(),
        cands: minimal_footprint_trees(g, s),
        stop_at,
        best: Vec::new(),
        chosen: Vec::new(),
    };
    packer.search(0, 0, 0);
    let trees = packer
        .best
        .iter()
        .map(|&j| packer.cands[j].tree.clone())
        .collect::<Vec<_>>();
    Ok(PackingResult {
        value: trees.len(),
        packing: TreePacking {
            terminals: *s,
            trees,
        },
    })
}

pub fn kappa_set(g: &Graph, s: &TerminalSet) -> Result<usize> {
    Ok(max_packing(g, s, None)?.value)
}

/// All `k`-subsets of the vertex set, in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = VertexSet> {
    let mut idx: Vec<usize> = (0..k).collect();
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let set = idx.iter().fold(0u32, |acc, &v| acc | 1 << v);
        // advance
        let mut i = k;
        loop {
            if i == 0 {
                done = true;
                break;
            }
            i -= 1;
            if idx[i] < n - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(set)
    })
}

fn check_order(g: &Graph, k: usize) -> Result<()> {
    check_k(k)?;
    if k > g.order() {
        return Err(Error::KExceedsOrder { k, n: g.order() });
    }
    Ok(())
}

/// Minimum of `kappa_set` over all `k`-subsets.
pub fn kappa_k(g: &Graph, k: usize) -> Result<usize> {
    check_order(g, k)?;
    let mut best: Option<usize> = None;
    for set in k_subsets(g.order(), k) {
        let s = TerminalSet::from_set(g, set)?;
        let v = kappa_set(g, &s)?;
        best = Some(best.map_or(v, |b| b.min(v)));
        if best == Some(0) {
            break;
        }
    }
    Ok(best.unwrap_or(0))
}

/// Maximum of `kappa_set` over all `k`-subsets.
pub fn kappa_bar_k(g: &Graph, k: usize) -> Result<usize> {
    check_order(g, k)?;
    let mut best = 0;
    for set in k_subsets(g.order(), k) {
        let s = TerminalSet::from_set(g, set)?;
        if bounds(g, &s).min() <= best {
            continue;
        }
        best = best.max(kappa_set(g, &s)?);
    }
    Ok(best)
}

/// The first `k`-subset (lexicographically) with `kappa_set >= threshold`,
/// with a certificate of exactly `threshold` trees; `None` when
/// `kappa_bar_k < threshold`.
pub fn kappa_bar_at_least(g: &Graph, k: usize, threshold: usize) -> Result<Option<PackingResult>> {
    check_order(g, k)?;
    for set in k_subsets(g.order(), k) {
        let s = TerminalSet::from_set(g, set)?;
        if bounds(g, &s).min() < threshold {
            continue;
        }
        let r = max_packing(g, &s, Some(threshold))?;
        if r.value >= threshold {
            return Ok(Some(r));
        }
    }
    Ok(None)
}
