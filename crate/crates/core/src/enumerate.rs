//! Isomorphism-free generation of small graphs.
//!
//! Level `n` is grown from level `n - 1` by adding vertex `n - 1` joined to
//! every subset of the old vertices and keeping the first child seen for
//! each canonical key. Every graph on `n` vertices arises this way (delete
//! its last vertex), so the levels are complete. Representatives are stored
//! in canonical labelling.

use std::collections::HashSet;
use std::io::BufRead;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalKey};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Largest order generated by augmentation.
pub const MAX_ENUM_ORDER: usize = 9;
/// Largest order the filter-all reference handles.
pub const BRUTE_MAX_ORDER: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GraphClassQuery {
    pub n: usize,
    pub m_min: usize,
    pub m_max: usize,
    pub connected_only: bool,
}

impl GraphClassQuery {
    pub fn new(n: usize, m_min: usize, m_max: usize, connected_only: bool) -> Result<Self> {
        let q = GraphClassQuery {
            n,
            m_min,
            m_max,
            connected_only,
        };
        q.validate()?;
        Ok(q)
    }

    /// Connected graphs of order `n` and size exactly `m`.
    pub fn connected(n: usize, m: usize) -> Result<Self> {
        Self::new(n, m, m, true)
    }

    pub fn validate(&self) -> Result<()> {
        let max_edges = self.n * self.n.saturating_sub(1) / 2;
        if self.m_min > self.m_max {
            return Err(Error::InvalidQuery(format!(
                "m_min {} exceeds m_max {}",
                self.m_min, self.m_max
            )));
        }
        if self.m_max > max_edges {
            return Err(Error::InvalidQuery(format!(
                "m_max {} exceeds C({}, 2) = {max_edges}",
                self.m_max, self.n
            )));
        }
        if self.n > MAX_ENUM_ORDER {
            return Err(Error::TooLarge {
                n: self.n,
                max: MAX_ENUM_ORDER,
            });
        }
        Ok(())
    }

    pub fn matches(&self, g: &Graph) -> bool {
        let m = g.edge_count();
        g.order() == self.n
            && (self.m_min..=self.m_max).contains(&m)
            && (!self.connected_only || g.is_connected())
    }

    pub fn describe(&self) -> String {
        let kind = if self.connected_only {
            "connected"
        } else {
            "all"
        };
        if self.m_min == self.m_max {
            format!("{kind} graphs, n={}, m={}", self.n, self.m_min)
        } else {
            format!(
                "{kind} graphs, n={}, m={}..={}",
                self.n, self.m_min, self.m_max
            )
        }
    }
}

fn next_level(parents: &[Graph]) -> Vec<Graph> {
    let children: Vec<Vec<(CanonicalKey, Graph)>> = parents
        .par_iter()
        .map(|p| {
            let n = p.order();
            let mut local = HashSet::new();
            let mut out = Vec::new();
            for nbrs in 0u32..(1 << n) {
                let child = p
                    .add_vertex_with_neighbors(nbrs)
                    .expect("order within capacity");
                let key = canonical_form(&child);
                if local.insert(key.clone()) {
                    out.push((key, child));
                }
            }
            out
        })
        .collect();
    let mut seen = HashSet::new();
    let mut level = Vec::new();
    for (key, _) in children.into_iter().flatten() {
        if !seen.contains(&key) {
            level.push(key.graph());
            seen.insert(key);
        }
    }
    level
}

/// Caches generated levels so repeated queries share work.
#[derive(Debug, Default)]
pub struct Enumerator {
    levels: Vec<Vec<Graph>>,
}

impl Enumerator {
    pub fn new() -> Self {
        Enumerator { levels: Vec::new() }
    }

    /// One canonical representative per isomorphism class of order `n`.
    pub fn level(&mut self, n: usize) -> Result<&[Graph]> {
        if n > MAX_ENUM_ORDER {
            return Err(Error::TooLarge {
                n,
                max: MAX_ENUM_ORDER,
            });
        }
        if self.levels.is_empty() {
            self.levels.push(vec![Graph::empty(0)?]);
        }
        while self.levels.len() <= n {
            let next = next_level(self.levels.last().unwrap());
            self.levels.push(next);
        }
        Ok(&self.levels[n])
    }

    pub fn matching(&mut self, q: &GraphClassQuery) -> Result<Vec<Graph>> {
        q.validate()?;
        Ok(self
            .level(q.n)?
            .iter()
            .filter(|g| q.matches(g))
            .copied()
            .collect())
    }
}

pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    Ok(Enumerator::new().level(n)?.to_vec())
}

pub fn enumerate_matching(q: &GraphClassQuery) -> Result<Vec<Graph>> {
    Enumerator::new().matching(q)
}

/// Reference enumeration: every labelled graph on `n` vertices, deduplicated
/// by canonical key. Exponential in `C(n, 2)`.
pub fn enumerate_all_brute(n: usize) -> Result<Vec<Graph>> {
    if n > BRUTE_MAX_ORDER {
        return Err(Error::TooLarge {
            n,
            max: BRUTE_MAX_ORDER,
        });
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::from_edges(n, &edges)?;
        let key = canonical_form(&g);
        if seen.insert(key.clone()) {
            out.push(key.graph());
        }
    }
    Ok(out)
}

#[derive(Debug, Default)]
pub struct Ingested {
    pub graphs: Vec<Graph>,
    /// `(1-based line number, error)` for every rejected line.
    pub errors: Vec<(usize, Error)>,
}

/// Read one graph6 string per line. Bad lines are reported and skipped;
/// blank lines are ignored. With `dedup`, only the first graph of each
/// isomorphism class is kept.
pub fn ingest_graph6(reader: impl BufRead, dedup: bool) -> Ingested {
    let mut out = Ingested::default();
    let mut seen = HashSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line = match line {
            Ok(l) => l,
            Err(e) => {
                out.errors.push((i + 1, e.into()));
                continue;
            }
        };
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        match graph6::decode(text) {
            Ok(g) => {
                if !dedup || seen.insert(canonical_form(&g)) {
                    out.graphs.push(g);
                }
            }
            Err(e) => out.errors.push((i + 1, e)),
        }
    }
    out
}
