//! Internally disjoint Steiner trees.
//!
//! Two trees connecting a terminal set `S` are internally disjoint when they
//! share no edge and meet exactly in `S`. `kappa_set` is the largest number
//! of pairwise internally disjoint `S`-trees; `kappa_k` / `kappa_bar_k` take
//! the minimum / maximum of that over all `k`-subsets.
//!
//! Only `|S| ∈ {2, 3}` is supported. Larger terminal sets are rejected with
//! [`Error::UnsupportedK`].

mod menger;
mod oracle;
mod packing;
mod trees;
mod verify;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet};

pub use menger::menger_local_connectivity;
pub use oracle::{kappa_set_oracle, minimal_trees_oracle, ORACLE_MAX_ORDER};
pub use packing::{
    kappa_bar_at_least, kappa_bar_k, kappa_k, kappa_set, max_packing, PackingResult,
};
pub use trees::enumerate_minimal_trees;
pub use verify::verify_packing;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TerminalSet(VertexSet);

impl TerminalSet {
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<TerminalSet> {
        let mut set = 0;
        for &v in vertices {
            if v >= g.order() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    order: g.order(),
                });
            }
            if set >> v & 1 == 1 {
                return Err(Error::Terminals(format!("vertex {v} listed twice")));
            }
            set |= 1 << v;
        }
        TerminalSet::from_set(g, set)
    }

    pub fn from_set(g: &Graph, set: VertexSet) -> Result<TerminalSet> {
        if set & !g.vertex_set() != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: (set & !g.vertex_set()).trailing_zeros() as usize,
                order: g.order(),
            });
        }
        if set.count_ones() < 2 {
            return Err(Error::Terminals(
                "a terminal set needs at least two vertices".into(),
            ));
        }
        Ok(TerminalSet(set))
    }

    #[inline]
    pub fn mask(&self) -> VertexSet {
        self.0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn vertices(&self) -> Vec<usize> {
        members(self.0).collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }
}

/// One tree connecting a terminal set. Edges are `(u, v)` with `u < v`,
/// sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SteinerTree {
    pub edges: Vec<(usize, usize)>,
    pub vertices: VertexSet,
}

impl SteinerTree {
    /// Normalise an edge list (orient each edge low-high, sort, dedup) and
    /// record the spanned vertices.
    pub fn from_edges(edges: impl IntoIterator<Item = (usize, usize)>) -> SteinerTree {
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        edges.sort_unstable();
        edges.dedup();
        let vertices = edges.iter().fold(0, |acc, &(u, v)| acc | 1 << u | 1 << v);
        SteinerTree { edges, vertices }
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreePacking {
    pub terminals: TerminalSet,
    pub trees: Vec<SteinerTree>,
}

impl TreePacking {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}

/// Cheap upper bounds on `kappa_set(g, s)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    /// Smallest degree of a terminal: every tree uses an edge at each terminal.
    pub degree_bound: usize,
    /// Edge budget. For three terminals at most one tree has two edges and
    /// every other has at least three, so `3t - 1 <= e(G)`. For two terminals
    /// the analogue is `2t - 1 <= e(G)`.
    pub edge_bound: usize,
    /// `n - k + floor(k / 2)`.
    pub clique_bound: usize,
}

impl Bounds {
    pub fn min(&self) -> usize {
        self.degree_bound
            .min(self.edge_bound)
            .min(self.clique_bound)
    }
}

pub fn bounds(g: &Graph, s: &TerminalSet) -> Bounds {
    let k = s.len();
    let degree_bound = members(s.mask()).map(|v| g.deg(v)).min().unwrap_or(0);
    let e = g.edge_count();
    let edge_bound = match k {
        2 => e.div_ceil(2),
        3 => (e + 1) / 3,
        // a tree on k terminals has at least k - 1 edges
        _ => e / (k - 1).max(1),
    };
    let clique_bound = (g.order() + k / 2).saturating_sub(k);
    Bounds {
        degree_bound,
        edge_bound,
        clique_bound,
    }
}

pub(crate) fn check_k(k: usize) -> Result<()> {
    if k == 2 || k == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedK(k))
    }
}
