//! Certificate checking, written against the definition only.

use std::collections::HashSet;

use super::TreePacking;
use crate::graph::Graph;

/// True iff every tree is a tree of `g` containing the terminals, and any two
/// trees share no edge and meet exactly in the terminal set.
pub fn verify_packing(g: &Graph, cert: &TreePacking) -> bool {
    let s = cert.terminals.mask();
    let n = g.order();
    let mut vertex_sets = Vec::with_capacity(cert.trees.len());
    let mut edge_sets: Vec<HashSet<(usize, usize)>> = Vec::with_capacity(cert.trees.len());
    for tree in &cert.trees {
        let mut verts = 0u64;
        let mut edges = HashSet::new();
        for &(a, b) in &tree.edges {
            if a >= n || b >= n || a == b || !g.has_edge(a, b) {
                return false;
            }
            if !edges.insert((a.min(b), a.max(b))) {
                return false;
            }
            verts |= 1 << a | 1 << b;
        }
        if verts != tree.vertices as u64 || verts & s as u64 != s as u64 {
            return false;
        }
        if edges.len() + 1 != verts.count_ones() as usize {
            return false;
        }
        // connected: grow from one vertex through the tree's edges
        let mut seen = 1u64 << verts.trailing_zeros();
        loop {
            let before = seen;
            for &(a, b) in &edges {
                if seen >> a & 1 == 1 || seen >> b & 1 == 1 {
                    seen |= 1 << a | 1 << b;
                }
            }
            if seen == before {
                break;
            }
        }
        if seen != verts {
            return false;
        }
        vertex_sets.push(verts);
        edge_sets.push(edges);
    }
    for i in 0..vertex_sets.len() {
        for j in i + 1..vertex_sets.len() {
            if vertex_sets[i] & vertex_sets[j] != s as u64 {
                return false;
            }
            if !edge_sets[i].is_disjoint(&edge_sets[j]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::steiner::{SteinerTree, TerminalSet};

    fn wheel() -> Graph {
        Graph::from_edges(
            5,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (0, 4),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 1),
            ],
        )
        .unwrap()
    }

    // x = 0, u1..u4 = 1..4, S = {x, u2, u4}
    fn wheel_certificate(g: &Graph) -> TreePacking {
        TreePacking {
            terminals: TerminalSet::new(g, &[0, 2, 4]).unwrap(),
            trees: vec![
                SteinerTree::from_edges([(0, 2), (0, 4)]),
                SteinerTree::from_edges([(3, 0), (3, 2), (3, 4)]),
                SteinerTree::from_edges([(1, 0), (1, 4), (1, 2)]),
            ],
        }
    }

    #[test]
    fn wheel_certificate_is_valid() {
        let g = wheel();
        assert!(verify_packing(&g, &wheel_certificate(&g)));
    }

    #[test]
    fn moving_an_edge_breaks_it() {
        let g = wheel();
        let mut cert = wheel_certificate(&g);
        // hand u3-x from the second tree to the third
        cert.trees[1] = SteinerTree::from_edges([(3, 2), (3, 4)]);
        cert.trees[2] = SteinerTree::from_edges([(1, 0), (1, 4), (1, 2), (0, 3)]);
        assert!(!verify_packing(&g, &cert));
    }

    #[test]
    fn empty_packing_is_valid() {
        let g = wheel();
        let cert = TreePacking {
            terminals: TerminalSet::new(&g, &[0, 1]).unwrap(),
            trees: vec![],
        };
        assert!(verify_packing(&g, &cert));
    }

    #[test]
    fn rejects_non_trees_and_missing_edges() {
        let g = wheel();
        let s = TerminalSet::new(&g, &[1, 2, 3]).unwrap();
        let cycle = TreePacking {
            terminals: s,
            trees: vec![SteinerTree::from_edges([(1, 2), (2, 3), (3, 0), (0, 1)])],
        };
        assert!(!verify_packing(&g, &cycle));
        let missing = TreePacking {
            terminals: s,
            trees: vec![SteinerTree::from_edges([(1, 3), (2, 3)])],
        };
        assert!(!verify_packing(&g, &missing));
        let not_spanning = TreePacking {
            terminals: s,
            trees: vec![SteinerTree::from_edges([(1, 2)])],
        };
        assert!(!verify_packing(&g, &not_spanning));
    }
}
