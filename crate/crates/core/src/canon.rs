//! Canonical labelling by individualisation and refinement.
//!
//! The search tree is the usual one: refine an ordered colouring to an
//! equitable one, pick the first non-singleton cell, individualise each of
//! its vertices in turn. Every leaf is a vertex ordering; the canonical form
//! is the leaf whose relabelled graph has the lexicographically smallest
//! upper-triangle bit string. Subtrees that are images of explored ones under
//! a known automorphism (twin transpositions up front, plus automorphisms
//! discovered from equal leaves) are skipped.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{members, Graph, VertexSet, MAX_VERTICES};
use crate::graph6;

/// graph6 text of the canonically relabelled graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalKey(String);

impl CanonicalKey {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn as_bytes(&self) -> &[u8] {
        self.0.as_bytes()
    }

    /// Wrap text that is already a canonical graph6 string. Nothing is
    /// checked; use [`canonical_form`] when in doubt.
    pub fn from_canonical_graph6(text: impl Into<String>) -> CanonicalKey {
        CanonicalKey(text.into())
    }

    pub fn graph(&self) -> Graph {
        graph6::decode(&self.0).expect("canonical keys hold valid graph6")
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({:?})", self.0)
    }
}

const WORDS: usize = (MAX_VERTICES * (MAX_VERTICES - 1) / 2).div_ceil(64);

type Bits = [u64; WORDS];
type Colors = [u8; MAX_VERTICES];

fn leaf_bits(g: &Graph, order: &[usize]) -> Bits {
    let mut bits = [0u64; WORDS];
    let mut k = 0usize;
    for j in 1..order.len() {
        let row = g.neighbors(order[j]);
        for &oi in &order[..j] {
            if row >> oi & 1 == 1 {
                bits[k / 64] |= 1u64 << (63 - k % 64);
            }
            k += 1;
        }
    }
    bits
}

/// Refine `colors` (ranks `0..c`) to the coarsest equitable colouring that
/// refines it. Cell order is derived from sorted signatures only, so the
/// result commutes with relabelling.
fn refine(g: &Graph, colors: &mut Colors) -> usize {
    let n = g.order();
    let mut ncolors = count_colors(colors, n);
    loop {
        let mut cells = [0 as VertexSet; MAX_VERTICES];
        for v in 0..n {
            cells[colors[v] as usize] |= 1 << v;
        }
        let mut sigs = [[0u8; MAX_VERTICES + 1]; MAX_VERTICES];
        for v in 0..n {
            sigs[v][0] = colors[v];
            let row = g.neighbors(v);
            for c in 0..ncolors {
                sigs[v][c + 1] = (row & cells[c]).count_ones() as u8;
            }
        }
        let mut idx: Vec<usize> = (0..n).collect();
        idx.sort_by(|&a, &b| sigs[a][..=ncolors].cmp(&sigs[b][..=ncolors]));
        let mut rank = 0u8;
        for w in 0..n {
            if w > 0 && sigs[idx[w]][..=ncolors] != sigs[idx[w - 1]][..=ncolors] {
                rank += 1;
            }
            colors[idx[w]] = rank;
        }
        let next = if n == 0 { 0 } else { rank as usize + 1 };
        if next == ncolors {
            return ncolors;
        }
        ncolors = next;
    }
}

fn count_colors(colors: &Colors, n: usize) -> usize {
    colors[..n]
        .iter()
        .map(|&c| c as usize + 1)
        .max()
        .unwrap_or(0)
}

fn individualize(colors: &Colors, n: usize, v: usize) -> Colors {
    let cv = colors[v];
    let mut out = [0u8; MAX_VERTICES];
    for u in 0..n {
        let c = colors[u];
        out[u] = if c < cv || u == v { c } else { c + 1 };
    }
    out
}

struct UnionFind {
    parent: [u8; MAX_VERTICES],
}

impl UnionFind {
    fn new() -> Self {
        let mut parent = [0u8; MAX_VERTICES];
        for (i, p) in parent.iter_mut().enumerate() {
            *p = i as u8;
        }
        UnionFind { parent }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let p = self.parent[x] as usize;
            self.parent[x] = self.parent[p];
            x = p;
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb) as u8;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Bits, Vec<usize>)>,
    automorphisms: Vec<[u8; MAX_VERTICES]>,
}

impl Search<'_> {
    fn visit(&mut self, mut colors: Colors, fixed: VertexSet) {
        let n = self.g.order();
        let ncolors = refine(self.g, &mut colors);
        if ncolors == n {
            let mut order = vec![0usize; n];
            for v in 0..n {
                order[colors[v] as usize] = v;
            }
            self.leaf(order);
            return;
        }
        let mut sizes = [0u8; MAX_VERTICES];
        for v in 0..n {
            sizes[colors[v] as usize] += 1;
        }
        let target = (0..ncolors).find(|&c| sizes[c] > 1).unwrap() as u8;
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut explored: Vec<usize> = Vec::new();
        for &v in &cell {
            if !explored.is_empty() && self.equivalent_to_explored(v, &explored, fixed) {
                continue;
            }
            let child = individualize(&colors, n, v);
            self.visit(child, fixed | (1 << v));
            explored.push(v);
        }
    }

    fn equivalent_to_explored(&self, v: usize, explored: &[usize], fixed: VertexSet) -> bool {
        let mut uf = UnionFind::new();
        for perm in &self.automorphisms {
            if members(fixed).all(|f| perm[f] as usize == f) {
                for (x, &image) in perm.iter().enumerate().take(self.g.order()) {
                    uf.union(x, image as usize);
                }
            }
        }
        let root = uf.find(v);
        explored.iter().any(|&u| uf.find(u) == root)
    }

    fn leaf(&mut self, order: Vec<usize>) {
        let bits = leaf_bits(self.g, &order);
        match &self.best {
            None => self.best = Some((bits, order)),
            Some((best_bits, best_order)) => match bits.cmp(best_bits) {
                Ordering::Less => self.best = Some((bits, order)),
                Ordering::Equal => {
                    let mut perm = [0u8; MAX_VERTICES];
                    for (i, &v) in order.iter().enumerate() {
                        perm[v] = best_order[i] as u8;
                    }
                    self.automorphisms.push(perm);
                }
                Ordering::Greater => {}
            },
        }
    }
}

fn twin_transpositions(g: &Graph) -> Vec<[u8; MAX_VERTICES]> {
    let n = g.order();
    let mut out = Vec::new();
    let mut covered: VertexSet = 0;
    for u in 0..n {
        if covered >> u & 1 == 1 {
            continue;
        }
        for w in u + 1..n {
            let nu = g.neighbors(u) & !(1 << w);
            let nw = g.neighbors(w) & !(1 << u);
            if nu == nw {
                let mut perm = [0u8; MAX_VERTICES];
                for (i, p) in perm.iter_mut().enumerate() {
                    *p = i as u8;
                }
                perm.swap(u, w);
                out.push(perm);
                covered |= 1 << w;
            }
        }
    }
    out
}

/// A canonical vertex ordering: `order[i]` is the original vertex placed at
/// position `i`. `g.permuted(&order)` is the canonical graph.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 1 {
        return (0..n).collect();
    }
    let mut colors = [0u8; MAX_VERTICES];
    // start from the degree partition; refine() would get there too
    let mut degs: Vec<usize> = g.degrees();
    degs.sort_unstable();
    degs.dedup();
    for (v, c) in colors.iter_mut().enumerate().take(n) {
        *c = degs.binary_search(&g.deg(v)).unwrap() as u8;
    }
    let mut search = Search {
        g,
        best: None,
        automorphisms: twin_transpositions(g),
    };
    search.visit(colors, 0);
    search.best.expect("search reaches at least one leaf").1
}

pub fn canonical_graph(g: &Graph) -> Graph {
    g.permuted(&canonical_labeling(g))
}

pub fn canonical_form(g: &Graph) -> CanonicalKey {
    CanonicalKey(graph6::encode(&canonical_graph(g)))
}

pub fn are_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order()
        && g.edge_count() == h.edge_count()
        && {
            let (mut dg, mut dh) = (g.degrees(), h.degrees());
            dg.sort_unstable();
            dh.sort_unstable();
            dg == dh
        }
        && canonical_form(g) == canonical_form(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, HashSet};

    fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        (0u32..(1 << pairs.len())).map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    }

    fn permutations(n: usize) -> Vec<Vec<usize>> {
        fn rec(cur: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == used.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..used.len() {
                if !used[v] {
                    used[v] = true;
                    cur.push(v);
                    rec(cur, used, out);
                    cur.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = vec![];
        rec(&mut vec![], &mut vec![false; n], &mut out);
        out
    }

    /// Lexicographically smallest graph6 over all n! orderings.
    fn brute_force_key(g: &Graph, perms: &[Vec<usize>]) -> String {
        perms
            .iter()
            .map(|p| graph6::encode(&g.permuted(p)))
            .min()
            .unwrap()
    }

    #[test]
    fn k4_is_unique() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let sixes: HashSet<_> = all_labeled(4)
            .filter(|g| g.edge_count() == 6)
            .map(|g| canonical_form(&g))
            .collect();
        assert_eq!(sixes.len(), 1);
        assert!(sixes.contains(&canonical_form(&k4)));
    }

    #[test]
    fn partitions_match_brute_force_up_to_five() {
        for n in 1..=5 {
            let perms = permutations(n);
            let mut by_key: HashMap<CanonicalKey, String> = HashMap::new();
            let mut classes = HashSet::new();
            for g in all_labeled(n) {
                let brute = brute_force_key(&g, &perms);
                let key = canonical_form(&g);
                if let Some(prev) = by_key.insert(key, brute.clone()) {
                    assert_eq!(prev, brute, "two non-isomorphic graphs share a key");
                }
                classes.insert(brute);
            }
            assert_eq!(by_key.len(), classes.len(), "n = {n}");
        }
    }

    #[test]
    fn canonical_graph_is_fixed_point() {
        for g in all_labeled(5) {
            let c = canonical_graph(&g);
            assert_eq!(canonical_graph(&c), c);
            assert_eq!(graph6::encode(&c), canonical_form(&g).as_str());
        }
    }

    #[test]
    fn two_cubic_classes_on_six_vertices() {
        let keys: HashSet<_> = all_labeled(6)
            .filter(|g| g.degrees().iter().all(|&d| d == 3))
            .map(|g| canonical_form(&g))
            .collect();
        assert_eq!(keys.len(), 2);
    }

    #[test]
    fn symmetric_graphs_are_fast_and_stable() {
        // empty, complete and a perfect matching on 32 vertices
        let empty = Graph::empty(32).unwrap();
        assert_eq!(canonical_graph(&empty), empty);
        let complete = empty.complement();
        assert_eq!(canonical_graph(&complete), complete);
        let matching: Vec<_> = (0..16).map(|i| (2 * i, 2 * i + 1)).collect();
        let m = Graph::from_edges(32, &matching).unwrap();
        let shuffled: Vec<usize> = (0..32).map(|i| (i * 7) % 32).collect();
        assert_eq!(canonical_form(&m), canonical_form(&m.permuted(&shuffled)));
    }

    #[test]
    fn isomorphism_checks() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let c4b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(are_isomorphic(&c4, &c4b));
        assert!(!are_isomorphic(&c4, &p4));
        assert!(!are_isomorphic(&c4, &Graph::empty(5).unwrap()));
    }
}
