//! Named graphs, graph operations and extremal catalogs.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_form, CanonicalKey};
use crate::enumerate::{Enumerator, MAX_ENUM_ORDER};
use crate::error::{Error, Result};
use crate::graph::{members, Graph, VertexSet, MAX_VERTICES};
use crate::steiner::kappa_bar_at_least;

fn at_least(what: &str, n: usize, min: usize) -> Result<()> {
    if n < min {
        Err(Error::InvalidParameters(format!(
            "{what} needs n >= {min}, got {n}"
        )))
    } else {
        Ok(())
    }
}

pub fn empty(n: usize) -> Result<Graph> {
    at_least("empty graph", n, 1)?;
    Graph::empty(n)
}

pub fn complete_graph(n: usize) -> Result<Graph> {
    at_least("complete graph", n, 1)?;
    Ok(Graph::empty(n)?.complement())
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges)
}

/// The cycle `0 - 1 - ... - (n-1) - 0`.
pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    let edges: Vec<_> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Hub 0 joined to the cycle `1 - 2 - ... - (n-1) - 1`.
pub fn wheel(n: usize) -> Result<Graph> {
    at_least("wheel", n, 4)?;
    join(&complete_graph(1)?, &cycle(n - 1)?)
}

/// `g` on vertices `0..n(g)`, `h` shifted after it, no edges between.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let (a, b) = (g.order(), h.order());
    if a + b > MAX_VERTICES {
        return Err(Error::Capacity(a + b));
    }
    let mut rows: Vec<VertexSet> = g.rows().to_vec();
    rows.extend(h.rows().iter().map(|&r| r << a));
    Graph::from_rows(&rows)
}

/// Disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let (a, b) = (g.order(), h.order());
    let mut out = disjoint_union(g, h)?;
    for u in 0..a {
        for v in a..a + b {
            out.set_edge(u, v);
        }
    }
    Ok(out)
}

/// `k` disjoint copies of `g`.
pub fn k_copies(g: &Graph, k: usize) -> Result<Graph> {
    if g.order() * k > MAX_VERTICES {
        return Err(Error::Capacity(g.order() * k));
    }
    let mut out = Graph::empty(0)?;
    for _ in 0..k {
        out = disjoint_union(&out, g)?;
    }
    Ok(out)
}

/// Is `u` the shared vertex of an already attached K4, i.e. does it lie in
/// a K4 whose other three vertices have degree exactly three?
pub fn is_attaching_vertex(g: &Graph, u: usize) -> bool {
    if u >= g.order() {
        return false;
    }
    let nbrs = g.neighbors(u);
    let cubic_nbrs: Vec<usize> = members(nbrs).filter(|&v| g.deg(v) == 3).collect();
    for (i, &a) in cubic_nbrs.iter().enumerate() {
        for (j, &b) in cubic_nbrs.iter().enumerate().skip(i + 1) {
            for &c in &cubic_nbrs[j + 1..] {
                if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                    return true;
                }
            }
        }
    }
    false
}

/// Identify `u` with one vertex of a new K4, without the one-K4-per-vertex
/// check. The three new vertices get indices `n, n+1, n+2`.
pub fn glue_k4(g: &Graph, u: usize) -> Result<Graph> {
    let n = g.order();
    if u >= n {
        return Err(Error::VertexOutOfRange {
            vertex: u,
            order: n,
        });
    }
    if n + 3 > MAX_VERTICES {
        return Err(Error::Capacity(n + 3));
    }
    let triangle = complete_graph(3)?;
    let mut out = disjoint_union(g, &triangle)?;
    for v in n..n + 3 {
        out.set_edge(u, v);
    }
    Ok(out)
}

/// The attaching operation: glue a K4 at `u`, which must not already carry
/// one.
pub fn attach_k4(g: &Graph, u: usize) -> Result<Graph> {
    if is_attaching_vertex(g, u) {
        return Err(Error::AlreadyAttached(u));
    }
    glue_k4(g, u)
}

/// `K2 ∨ (r-2)K1`; for `r = 3` this is the triangle.
pub fn h1(r: usize) -> Result<Graph> {
    if r < 3 {
        return Err(Error::InvalidParameters(format!(
            "h1 needs r >= 3, got {r}"
        )));
    }
    join(&empty(r - 2)?, &complete_graph(2)?)
}

/// The graphs of order `n >= 5` obtained from some `h1(r)` with
/// `r ≡ n (mod 3)` by attaching a K4 at `(n - r) / 3` of its degree-2
/// vertices. All degree-2 vertices of `h1(r)` are similar, so each `r` gives
/// one class.
pub fn h1_family(n: usize) -> Result<Vec<Graph>> {
    if n < 5 {
        return Err(Error::InvalidParameters(format!(
            "h1_family needs n >= 5, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut r = n;
    while r >= 3 {
        let base = h1(r)?;
        let low: Vec<usize> = (0..r).filter(|&v| base.deg(v) == 2).collect();
        let j = (n - r) / 3;
        if j <= low.len() {
            let mut g = base;
            for &u in &low[..j] {
                g = attach_k4(&g, u)?;
            }
            out.push(g);
        }
        r -= 3;
    }
    Ok(out)
}

/// A `d`-regular circulant on `m` vertices: offsets `1..=d/2`, plus `m/2`
/// when `d` is odd.
pub fn regular_graph(m: usize, d: usize) -> Result<Graph> {
    if m == 0 || d >= m {
        return Err(Error::InvalidParameters(format!(
            "regular graph needs 0 <= d < m, got m={m}, d={d}"
        )));
    }
    if d * m % 2 == 1 {
        return Err(Error::InvalidParameters(format!(
            "no {d}-regular graph on {m} vertices (d*m odd)"
        )));
    }
    let mut g = Graph::empty(m)?;
    for v in 0..m {
        for off in 1..=d / 2 {
            g.set_edge(v, (v + off) % m);
        }
        if d % 2 == 1 {
            g.set_edge(v, (v + m / 2) % m);
        }
    }
    Ok(g)
}

fn best_matching(
    comp: &Graph,
    free: VertexSet,
    current: &mut Vec<(usize, usize)>,
    best: &mut Vec<(usize, usize)>,
) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if current.len() + free.count_ones() as usize / 2 <= best.len() {
        return;
    }
    let Some(v) = members(free).next() else {
        return;
    };
    let rest = free & !(1 << v);
    for u in members(comp.neighbors(v) & rest) {
        current.push((v, u));
        best_matching(comp, rest & !(1 << u), current, best);
        current.pop();
        if best.len() * 2 >= free.count_ones() as usize {
            return;
        }
    }
    // leave v unmatched
    best_matching(comp, rest, current, best);
}

/// A maximum matching of the complement of `g`, pairs in lexicographic order
/// of discovery.
pub fn complement_matching(g: &Graph) -> Vec<(usize, usize)> {
    let comp = g.complement();
    let mut best = Vec::new();
    best_matching(&comp, g.vertex_set(), &mut Vec::new(), &mut best);
    best
}

/// Add a maximum set of pairwise disjoint non-edges.
pub fn add_maximum_matching(g: &Graph) -> Graph {
    let mut out = *g;
    for (u, v) in complement_matching(g) {
        out.set_edge(u, v);
    }
    out
}

/// Edge count of the lower-bound construction for `f(n; kappa3bar <= l)`.
/// Both odd: `(l+2)(n-2)/2 + 1/2`, otherwise `(l+2)(n-2)/2 + 1`.
pub fn remark_edge_count(n: usize, l: usize) -> usize {
    if n % 2 == 1 && l % 2 == 1 {
        ((l + 2) * (n - 2)).div_ceil(2)
    } else {
        (l + 2) * (n - 2) / 2 + 1
    }
}

/// Lower-bound construction: `G' ∨ K2` where `G'` has order `n - 2` and is
/// an `(l-3)`-regular graph plus a maximum matching when `n` and `l` are
/// both odd, and an `(l-2)`-regular graph otherwise.
pub fn remark_construction(n: usize, l: usize) -> Result<Graph> {
    if n < 5 || l < 2 || l > n - 2 {
        return Err(Error::InvalidParameters(format!(
            "construction needs n >= 5 and 2 <= l <= n-2, got n={n}, l={l}"
        )));
    }
    let k2 = complete_graph(2)?;
    let base = if n % 2 == 1 && l % 2 == 1 {
        let reg = regular_graph(n - 2, l - 3)?;
        let matched = complement_matching(&reg);
        if matched.len() != (n - 3) / 2 {
            return Err(Error::InvalidParameters(format!(
                "complement of the {}-regular circulant on {} vertices has no near-perfect matching",
                l - 3,
                n - 2
            )));
        }
        add_maximum_matching(&reg)
    } else {
        regular_graph(n - 2, l - 2)?
    };
    join(&base, &k2)
}

/// Every extremal class of order `n`: the connected graphs with
/// `kappa3bar <= 2` and the largest edge count among them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalCatalog {
    pub n: usize,
    pub f_value: usize,
    /// Canonical graph6 of each member, sorted.
    pub members: Vec<CanonicalKey>,
}

impl ExtremalCatalog {
    pub fn contains(&self, g: &Graph) -> bool {
        g.order() == self.n && self.members.binary_search(&canonical_form(g)).is_ok()
    }

    pub fn graphs(&self) -> Vec<Graph> {
        self.members.iter().map(|k| k.graph()).collect()
    }
}

pub const CATALOG_MIN_ORDER: usize = 3;

/// `kappa3bar(g) <= 2`, by asking for a triple with three disjoint trees.
pub fn at_most_two(g: &Graph) -> bool {
    g.order() < 3 || kappa_bar_at_least(g, 3, 3).expect("k = 3 <= n").is_none()
}

pub fn extremal_catalog_with(enumerator: &mut Enumerator, n: usize) -> Result<ExtremalCatalog> {
    extremal_catalog_by(enumerator, n, |g| Ok(at_most_two(g)))
}

/// Catalog with a caller-supplied test for `kappa3bar(g) <= 2`.
pub fn extremal_catalog_by<F>(
    enumerator: &mut Enumerator,
    n: usize,
    low: F,
) -> Result<ExtremalCatalog>
where
    F: Fn(&Graph) -> Result<bool> + Sync,
{
    if !(CATALOG_MIN_ORDER..=MAX_ENUM_ORDER).contains(&n) {
        return Err(Error::InvalidParameters(format!(
            "catalog order must be in {CATALOG_MIN_ORDER}..={MAX_ENUM_ORDER}, got {n}"
        )));
    }
    let level = enumerator.level(n)?;
    let flags: Vec<bool> = level
        .par_iter()
        .map(|g| Ok(g.is_connected() && low(g)?))
        .collect::<Result<_>>()?;
    let low: Vec<(usize, &Graph)> = level
        .iter()
        .zip(flags)
        .filter(|(_, keep)| *keep)
        .map(|(g, _)| (g.edge_count(), g))
        .collect();
    let f_value = low.iter().map(|(m, _)| *m).max().unwrap_or(0);
    let mut members: Vec<CanonicalKey> = low
        .iter()
        .filter(|(m, _)| *m == f_value)
        .map(|(_, g)| canonical_form(g))
        .collect();
    members.sort();
    Ok(ExtremalCatalog {
        n,
        f_value,
        members,
    })
}

pub fn extremal_catalog(n: usize) -> Result<ExtremalCatalog> {
    extremal_catalog_with(&mut Enumerator::new(), n)
}
