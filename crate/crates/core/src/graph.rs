//! Small simple undirected graphs with one `u32` adjacency row per vertex.
//!
//! A [`Graph`] is a plain `Copy` value. Editing operations return a new graph
//! and never touch their input, so graphs can be handed to worker threads
//! freely.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of vertices a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 32;

/// A set of vertices, bit `v` set iff vertex `v` is a member.
pub type VertexSet = u32;

/// Iterate the members of a vertex set in ascending order.
pub fn members(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(v)
        }
    })
}

/// Build a vertex set from a list of vertex indices.
pub fn set_of(vertices: &[usize]) -> VertexSet {
    vertices.iter().fold(0, |acc, &v| acc | (1 << v))
}

#[inline]
fn full_set(n: usize) -> VertexSet {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [VertexSet; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::Capacity(n));
        }
        Ok(Graph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    /// Build from raw adjacency rows. Rows must be symmetric and loop-free;
    /// bits at or above `n` are rejected.
    pub fn from_rows(rows: &[VertexSet]) -> Result<Graph> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let full = full_set(n);
        for (v, &row) in rows.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: (row & !full).trailing_zeros() as usize,
                    order: n,
                });
            }
            if row & (1 << v) != 0 {
                return Err(Error::LoopEdge(v));
            }
            g.adj[v] = row;
        }
        for u in 0..n {
            for v in members(g.adj[u]) {
                if g.adj[v] & (1 << u) == 0 {
                    return Err(Error::InvalidParameters(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub(crate) fn clear_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// The set of all vertices.
    #[inline]
    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.adj[..self.order()]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && v < self.order() && self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].count_ones() as usize)
    }

    #[inline]
    pub(crate) fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.deg(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.deg(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.order() {
            for v in members(self.adj[u] & !full_set(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Vertices reachable from `start` using only vertices in `within`.
    pub fn reach_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn component_of(&self, v: usize) -> VertexSet {
        self.reach_within(v, self.vertex_set())
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut rest = self.vertex_set();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach_within(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// The empty graph and the single vertex both count as connected.
    pub fn is_connected(&self) -> bool {
        self.order() == 0 || self.component_of(0) == self.vertex_set()
    }

    /// Append a vertex adjacent to exactly `nbrs`; it gets index `order()`.
    pub fn add_vertex_with_neighbors(&self, nbrs: VertexSet) -> Result<Graph> {
        let n = self.order();
        if n + 1 > MAX_VERTICES {
            return Err(Error::Capacity(n + 1));
        }
        if nbrs & !self.vertex_set() != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: (nbrs & !self.vertex_set()).trailing_zeros() as usize,
                order: n,
            });
        }
        let mut g = *self;
        g.n += 1;
        for v in members(nbrs) {
            g.set_edge(n, v);
        }
        Ok(g)
    }

    /// Remove `v`; vertices above it shift down by one.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        let n = self.order();
        let mut g = Graph::empty(n - 1)?;
        let low = full_set(v);
        for u in (0..n).filter(|&u| u != v) {
            let row = self.adj[u];
            let target = if u < v { u } else { u - 1 };
            // bits above v shift down one place; bit v itself disappears
            let high = if v + 1 >= 32 {
                0
            } else {
                (row >> (v + 1)) << v
            };
            g.adj[target] = (row & low) | high;
        }
        Ok(g)
    }

    /// Subgraph induced by `keep`, relabelled in ascending vertex order.
    pub fn induced(&self, keep: VertexSet) -> Graph {
        let keep = keep & self.vertex_set();
        let map: Vec<usize> = members(keep).collect();
        let mut g = Graph::empty(map.len()).expect("subset of a valid graph");
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        g
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopEdge(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u, v));
        }
        let mut g = *self;
        g.set_edge(u, v);
        Ok(g)
    }

    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeAbsent(u, v));
        }
        let mut g = *self;
        g.clear_edge(u, v);
        Ok(g)
    }

    /// Relabel so that new vertex `i` is old vertex `order[i]`.
    pub fn permuted(&self, order: &[usize]) -> Graph {
        debug_assert_eq!(order.len(), self.order());
        let mut inverse = [0usize; MAX_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            inverse[v] = i;
        }
        let mut g = Graph::empty(self.order()).unwrap();
        for (i, &v) in order.iter().enumerate() {
            let mut row = 0;
            for u in members(self.adj[v]) {
                row |= 1 << inverse[u];
            }
            g.adj[i] = row;
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let mut g = *self;
        let full = self.vertex_set();
        for v in 0..self.order() {
            g.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        g
    }

    /// All `k`-cliques, as vertex sets.
    pub fn cliques_of_size(&self, k: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.extend_cliques(0, self.vertex_set(), k, &mut out);
        out
    }

    fn extend_cliques(
        &self,
        clique: VertexSet,
        cand: VertexSet,
        k: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if clique.count_ones() as usize == k {
            out.push(clique);
            return;
        }
        for v in members(cand) {
            let higher = !full_set(v + 1);
            self.extend_cliques(clique | (1 << v), cand & self.adj[v] & higher, k, out);
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}
