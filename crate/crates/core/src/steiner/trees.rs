//! Enumeration of minimal Steiner trees (every leaf a terminal).
//!
//! For two terminals these are the simple paths between them. For three
//! terminals a minimal tree has a unique centre: either one terminal lies
//! inside a path joining the other two, or a non-terminal of degree three
//! sends three disjoint branches to the terminals.

use std::collections::BTreeMap;

use super::{check_k, SteinerTree, TerminalSet};
use crate::error::Result;
use crate::graph::{members, Graph, VertexSet};

#[derive(Clone, Debug)]
struct Branch {
    edges: Vec<(usize, usize)>,
    internal: VertexSet,
}

/// Branches from `from` to `to` whose interior lies in `allowed`.
///
/// With `chordless`, a branch may not have an edge of `adj` between two of
/// its vertices other than consecutive ones; any chord would shortcut the
/// branch to one with strictly fewer interior vertices.
fn branches(
    adj: &Graph,
    from: usize,
    to: usize,
    allowed: VertexSet,
    chordless: bool,
) -> Vec<Branch> {
    let mut out = Vec::new();
    let mut path = vec![from];
    walk(adj, to, allowed, chordless, &mut path, 1 << from, &mut out);
    out
}

fn walk(
    adj: &Graph,
    to: usize,
    allowed: VertexSet,
    chordless: bool,
    path: &mut Vec<usize>,
    on_path: VertexSet,
    out: &mut Vec<Branch>,
) {
    let end = *path.last().unwrap();
    let step = adj.neighbors(end) & (allowed | 1 << to) & !on_path;
    for w in members(step) {
        if chordless && adj.neighbors(w) & on_path & !(1 << end) != 0 {
            continue;
        }
        path.push(w);
        if w == to {
            let edges = path.windows(2).map(|p| (p[0], p[1])).collect();
            let internal = on_path & !(1 << path[0]);
            out.push(Branch { edges, internal });
        } else {
            walk(adj, to, allowed, chordless, path, on_path | 1 << w, out);
        }
        path.pop();
    }
}

fn terminals_linked(g: &Graph, s: &TerminalSet) -> bool {
    let first = s.mask().trailing_zeros() as usize;
    g.component_of(first) & s.mask() == s.mask()
}

/// Every tree in `g` that connects `s` and whose leaves all lie in `s`,
/// normalised and sorted by edge list.
pub fn enumerate_minimal_trees(g: &Graph, s: &TerminalSet) -> Result<Vec<SteinerTree>> {
    check_k(s.len())?;
    if !terminals_linked(g, s) {
        return Ok(Vec::new());
    }
    let terms = s.vertices();
    let others = g.vertex_set() & !s.mask();
    let mut out = Vec::new();
    if terms.len() == 2 {
        for b in branches(g, terms[0], terms[1], others, false) {
            out.push(SteinerTree::from_edges(b.edges));
        }
    } else {
        for_each_tripod(g, &terms, others, false, |edges| {
            out.push(SteinerTree::from_edges(edges.iter().copied()));
        });
    }
    out.sort();
    Ok(out)
}

/// Enumerate three-terminal trees by centre. `adj` supplies the branches.
/// In full mode it is `g` itself.
fn for_each_tripod(
    adj: &Graph,
    terms: &[usize],
    others: VertexSet,
    chordless: bool,
    mut emit: impl FnMut(&[(usize, usize)]),
) {
    // a terminal in the middle of a path between the other two
    for (i, &centre) in terms.iter().enumerate() {
        let ends = other_two(terms, i);
        let left = branches(adj, centre, ends[0], others, chordless);
        let right = branches(adj, centre, ends[1], others, chordless);
        join_pairs(&left, &right, &mut emit);
    }
    vertex_centred(adj, terms, others, chordless, emit);
}

fn other_two(terms: &[usize], i: usize) -> [usize; 2] {
    let mut rest = terms
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &t)| t);
    [rest.next().unwrap(), rest.next().unwrap()]
}

fn join_pairs(left: &[Branch], right: &[Branch], emit: &mut impl FnMut(&[(usize, usize)])) {
    for l in left {
        for r in right {
            if l.internal & r.internal == 0 {
                let edges: Vec<_> = l.edges.iter().chain(&r.edges).copied().collect();
                emit(&edges);
            }
        }
    }
}

/// Trees whose centre is a non-terminal of degree three.
fn vertex_centred(
    adj: &Graph,
    terms: &[usize],
    others: VertexSet,
    chordless: bool,
    mut emit: impl FnMut(&[(usize, usize)]),
) {
    for z in members(others) {
        if adj.neighbors(z).count_ones() < 3 {
            continue;
        }
        let allowed = others & !(1 << z);
        let legs: Vec<Vec<Branch>> = terms
            .iter()
            .map(|&t| branches(adj, z, t, allowed, chordless))
            .collect();
        if legs.iter().any(|l| l.is_empty()) {
            continue;
        }
        for a in &legs[0] {
            for b in &legs[1] {
                if a.internal & b.internal != 0 {
                    continue;
                }
                for c in &legs[2] {
                    if (a.internal | b.internal) & c.internal != 0 {
                        continue;
                    }
                    let edges: Vec<_> = a
                        .edges
                        .iter()
                        .chain(&b.edges)
                        .chain(&c.edges)
                        .copied()
                        .collect();
                    emit(&edges);
                }
            }
        }
    }
}

/// What a tree consumes from the shared pool: its non-terminal vertices and
/// the terminal-terminal edges it uses. Two trees are internally disjoint
/// exactly when both parts are disjoint, since an edge with a non-terminal
/// end belongs to whichever tree owns that vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub(crate) struct Footprint {
    pub internal: VertexSet,
    pub terminal_edges: u8,
}

impl Footprint {
    fn covers(&self, other: &Footprint) -> bool {
        self.internal & other.internal == self.internal
            && self.terminal_edges & other.terminal_edges == self.terminal_edges
    }

    pub fn weight(&self) -> u32 {
        self.internal.count_ones() + self.terminal_edges.count_ones()
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Candidate {
    pub footprint: Footprint,
    pub tree: SteinerTree,
}

/// Index of the terminal pair `{terms[i], terms[j]}` in the terminal-edge mask.
pub(crate) fn pair_bit(terms: &[usize], u: usize, v: usize) -> Option<u8> {
    let i = terms.iter().position(|&t| t == u)?;
    let j = terms.iter().position(|&t| t == v)?;
    let (i, j) = (i.min(j), i.max(j));
    Some(match (i, j) {
        (0, 1) => 0,
        (0, 2) => 1,
        (1, 2) => 2,
        _ => unreachable!(),
    })
}

fn footprint_of(tree: &SteinerTree, s: &TerminalSet, terms: &[usize]) -> Footprint {
    let mut terminal_edges = 0u8;
    for &(u, v) in &tree.edges {
        if let Some(bit) = pair_bit(terms, u, v) {
            terminal_edges |= 1 << bit;
        }
    }
    Footprint {
        internal: tree.vertices & !s.mask(),
        terminal_edges,
    }
}

/// One representative tree for every inclusion-minimal footprint.
///
/// Some maximum packing uses only trees with minimal footprints (swap each
/// tree for one whose footprint it covers), and a tree realising a minimal
/// footprint has chordless branches, so the chordless enumeration is enough.
pub(crate) fn minimal_footprint_trees(g: &Graph, s: &TerminalSet) -> Vec<Candidate> {
    let terms = s.vertices();
    let others = g.vertex_set() & !s.mask();
    let mut inner = *g;
    for (i, &u) in terms.iter().enumerate() {
        for &v in &terms[i + 1..] {
            inner.clear_edge(u, v);
        }
    }
    let mut best: BTreeMap<Footprint, SteinerTree> = BTreeMap::new();
    let mut offer = |tree: SteinerTree| {
        let fp = footprint_of(&tree, s, &terms);
        match best.get(&fp) {
            Some(t) if t.edges <= tree.edges => {}
            _ => {
                best.insert(fp, tree);
            }
        }
    };

    if terms.len() == 2 {
        let (x, y) = (terms[0], terms[1]);
        if g.has_edge(x, y) {
            offer(SteinerTree::from_edges([(x, y)]));
        }
        for b in branches(&inner, x, y, others, true) {
            offer(SteinerTree::from_edges(b.edges));
        }
    } else {
        // direct terminal edges are one-edge branches from a terminal centre
        for (i, &centre) in terms.iter().enumerate() {
            let sides: Vec<Vec<Branch>> = other_two(&terms, i)
                .iter()
                .map(|&end| {
                    let mut side = branches(&inner, centre, end, others, true);
                    if g.has_edge(centre, end) {
                        side.push(Branch {
                            edges: vec![(centre, end)],
                            internal: 0,
                        });
                    }
                    side
                })
                .collect();
            join_pairs(&sides[0], &sides[1], &mut |edges: &[(usize, usize)]| {
                offer(SteinerTree::from_edges(edges.iter().copied()))
            });
        }
        vertex_centred(&inner, &terms, others, true, |edges| {
            offer(SteinerTree::from_edges(edges.iter().copied()))
        });
    }

    let all: Vec<(Footprint, SteinerTree)> = best.into_iter().collect();
    let mut out: Vec<Candidate> = all
        .iter()
        .filter(|(fp, _)| !all.iter().any(|(other, _)| other != fp && other.covers(fp)))
        .map(|(fp, t)| Candidate {
            footprint: *fp,
            tree: t.clone(),
        })
        .collect();
    out.sort_by(|a, b| {
        (a.footprint.weight(), a.footprint, &a.tree.edges).cmp(&(
            b.footprint.weight(),
            b.footprint,
            &b.tree.edges,
        ))
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = vec![];
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn path_has_one_tree() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let s = TerminalSet::new(&p3, &[0, 2]).unwrap();
        let trees = enumerate_minimal_trees(&p3, &s).unwrap();
        assert_eq!(trees, vec![SteinerTree::from_edges([(0, 1), (1, 2)])]);
    }

    #[test]
    fn triangle_has_three_stars() {
        let k3 = complete(3);
        let s = TerminalSet::new(&k3, &[0, 1, 2]).unwrap();
        let trees = enumerate_minimal_trees(&k3, &s).unwrap();
        assert_eq!(trees.len(), 3);
        assert!(trees.iter().all(|t| t.size() == 2));
    }

    #[test]
    fn k4_contains_the_outer_star() {
        let k4 = complete(4);
        let s = TerminalSet::new(&k4, &[0, 1, 2]).unwrap();
        let trees = enumerate_minimal_trees(&k4, &s).unwrap();
        assert!(trees.contains(&SteinerTree::from_edges([(0, 3), (1, 3), (2, 3)])));
        assert_eq!(trees.iter().filter(|t| t.size() == 2).count(), 3);
    }

    #[test]
    fn larger_sets_are_rejected() {
        let k4 = complete(4);
        let s = TerminalSet::new(&k4, &[0, 1, 2, 3]).unwrap();
        assert!(enumerate_minimal_trees(&k4, &s).is_err());
    }

    #[test]
    fn disconnected_terminals_have_no_trees() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let s = TerminalSet::new(&g, &[0, 1, 2]).unwrap();
        assert!(enumerate_minimal_trees(&g, &s).unwrap().is_empty());
    }

    #[test]
    fn clique_footprints() {
        // K5 with terminals {0,1,2}: three stars at terminals, and the two
        // outer vertices as tripod centres; everything else is covered
        let k5 = complete(5);
        let s = TerminalSet::new(&k5, &[0, 1, 2]).unwrap();
        let c = minimal_footprint_trees(&k5, &s);
        assert_eq!(c.len(), 5);
        assert_eq!(c.iter().filter(|c| c.footprint.internal == 0).count(), 3);
    }
}
