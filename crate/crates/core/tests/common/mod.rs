//! Exhaustive checks shared by the property suite and the acceptance runner.
//! Each returns a short summary on success and the first failure otherwise.

#![allow(dead_code)]

use kappa3::canon::{are_isomorphic, canonical_form};
use kappa3::enumerate::{enumerate_all_brute, Enumerator, GraphClassQuery, BRUTE_MAX_ORDER};
use kappa3::families::{complete_graph, empty, glue_k4, join};
use kappa3::graph6;
use kappa3::harness::has_k4_path;
use kappa3::steiner::{
    bounds, kappa_bar_at_least, kappa_bar_k, kappa_set, kappa_set_oracle, max_packing,
    menger_local_connectivity, verify_packing, TerminalSet,
};
use kappa3::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub type Check = Result<String, String>;

pub fn connected_upto(e: &mut Enumerator, max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| e.level(n).unwrap().to_vec())
        .filter(|g| g.is_connected())
        .collect()
}

pub fn all_upto(e: &mut Enumerator, max_n: usize) -> Vec<Graph> {
    (1..=max_n)
        .flat_map(|n| e.level(n).unwrap().to_vec())
        .collect()
}

pub fn triples(n: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_connected(rng: &mut StdRng, n: usize) -> Graph {
    loop {
        let p = rng.random_range(0.2..0.8);
        let g = random_graph(rng, n, p);
        if g.is_connected() {
            return g;
        }
    }
}

/// Every labelled graph with `n <= max_n` survives encode/decode.
pub fn graph6_roundtrip(max_n: usize) -> Check {
    let mut count = 0;
    for n in 0..=max_n {
        let pairs = n * n.saturating_sub(1) / 2;
        for mask in 0u64..1 << pairs {
            let mut edges = Vec::new();
            let mut i = 0;
            for v in 0..n {
                for u in 0..v {
                    if mask >> i & 1 == 1 {
                        edges.push((u, v));
                    }
                    i += 1;
                }
            }
            let g = Graph::from_edges(n, &edges).unwrap();
            let back = graph6::decode(&graph6::encode(&g)).map_err(|e| e.to_string())?;
            if back != g {
                return Err(format!("roundtrip changed {}", graph6::encode(&g)));
            }
            count += 1;
        }
    }
    Ok(format!("{count} labelled graphs"))
}

/// 100 random relabellings of every class up to `max_n` keep the key.
pub fn canonical_invariance(e: &mut Enumerator, max_n: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let graphs = all_upto(e, max_n);
    for g in &graphs {
        let key = canonical_form(g);
        let mut order: Vec<usize> = (0..g.order()).collect();
        for _ in 0..100 {
            order.shuffle(&mut rng);
            let h = g.permuted(&order);
            if canonical_form(&h) != key {
                return Err(format!("key changed under relabelling of {key}"));
            }
        }
    }
    Ok(format!("{} classes x 100 relabellings", graphs.len()))
}

/// Adding an edge never lowers `kappa_set` for any triple, over all classes
/// up to `max_n`.
pub fn monotonicity(e: &mut Enumerator, max_n: usize) -> Check {
    let mut count = 0;
    for g in all_upto(e, max_n) {
        let n = g.order();
        let before: Vec<usize> = triples(n)
            .iter()
            .map(|t| kappa_set(&g, &TerminalSet::new(&g, t).unwrap()).unwrap())
            .collect();
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(u, v) {
                    continue;
                }
                let h = g.add_edge(u, v).unwrap();
                for (t, &b) in triples(n).iter().zip(&before) {
                    let a = kappa_set(&h, &TerminalSet::new(&h, t).unwrap()).unwrap();
                    count += 1;
                    if a < b {
                        return Err(format!(
                            "{} + {u}{v}: kappa({t:?}) fell from {b} to {a}",
                            graph6::encode(&g)
                        ));
                    }
                }
            }
        }
    }
    Ok(format!("{count} (graph, edge, triple) cases"))
}

/// `kappa_set <= Bounds::min` and the certificate verifies, for every triple
/// of every class up to `max_n`.
pub fn bounds_and_certificates(e: &mut Enumerator, max_n: usize) -> Check {
    let mut count = 0;
    for g in all_upto(e, max_n) {
        for t in triples(g.order()) {
            let s = TerminalSet::new(&g, &t).unwrap();
            let r = max_packing(&g, &s, None).unwrap();
            count += 1;
            if r.value > bounds(&g, &s).min() {
                return Err(format!("{} {t:?}: value above bound", graph6::encode(&g)));
            }
            if r.value != r.packing.len() || !verify_packing(&g, &r.packing) {
                return Err(format!("{} {t:?}: bad certificate", graph6::encode(&g)));
            }
        }
    }
    Ok(format!("{count} (graph, triple) packings"))
}

/// Solver equals brute-force oracle on every connected class up to `max_n`,
/// every triple.
pub fn oracle_agreement(e: &mut Enumerator, max_n: usize) -> Check {
    let mut count = 0;
    for g in connected_upto(e, max_n) {
        for t in triples(g.order()) {
            let s = TerminalSet::new(&g, &t).unwrap();
            let a = kappa_set(&g, &s).unwrap();
            let b = kappa_set_oracle(&g, &s).unwrap();
            count += 1;
            if a != b {
                return Err(format!(
                    "{} {t:?}: solver {a}, oracle {b}",
                    graph6::encode(&g)
                ));
            }
        }
    }
    Ok(format!("{count} (graph, triple) pairs"))
}

fn menger_on(g: &Graph) -> Result<usize, String> {
    let mut count = 0;
    for x in 0..g.order() {
        for y in x + 1..g.order() {
            let s = TerminalSet::new(g, &[x, y]).unwrap();
            let a = kappa_set(g, &s).unwrap();
            let b = menger_local_connectivity(g, x, y).unwrap();
            count += 1;
            if a != b {
                return Err(format!(
                    "{} {x},{y}: trees {a}, flow {b}",
                    graph6::encode(g)
                ));
            }
        }
    }
    Ok(count)
}

/// Two-terminal packing equals max-flow on all connected classes up to
/// `max_n` and `random` random connected graphs with up to 10 vertices.
pub fn menger_agreement(e: &mut Enumerator, max_n: usize, random: usize, seed: u64) -> Check {
    let mut pairs = 0;
    for g in connected_upto(e, max_n) {
        pairs += menger_on(&g)?;
    }
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..random {
        let n = rng.random_range(2..=10);
        pairs += menger_on(&random_connected(&mut rng, n))?;
    }
    Ok(format!("{pairs} vertex pairs"))
}

/// Augmentation matches filter-all for every `(n, m, connected)` cell.
pub fn enumeration_cells(e: &mut Enumerator, max_n: usize) -> Check {
    let max_n = max_n.min(BRUTE_MAX_ORDER);
    let mut cells = 0;
    for n in 1..=max_n {
        let brute = enumerate_all_brute(n).unwrap();
        let aug = e.level(n).unwrap().to_vec();
        for m in 0..=n * (n - 1) / 2 {
            for connected in [false, true] {
                let q = GraphClassQuery::new(n, m, m, connected).unwrap();
                let a = aug.iter().filter(|g| q.matches(g)).count();
                let b = brute.iter().filter(|g| q.matches(g)).count();
                cells += 1;
                if a != b {
                    return Err(format!(
                        "{}: augmentation {a}, filter-all {b}",
                        q.describe()
                    ));
                }
            }
        }
        let mut keys: Vec<_> = aug.iter().map(canonical_form).collect();
        keys.sort();
        keys.dedup();
        if keys.len() != aug.len() {
            return Err(format!("n={n}: duplicate classes"));
        }
    }
    Ok(format!("{cells} cells"))
}

fn three(g: &Graph) -> bool {
    g.order() >= 3 && kappa_bar_at_least(g, 3, 3).unwrap().is_some()
}

/// Supergraphs and single subdivisions of a graph with three trees keep
/// three trees; connected classes up to `max_n`.
pub fn observation_supergraph(e: &mut Enumerator, max_n: usize) -> Check {
    let mut count = 0;
    for g in connected_upto(e, max_n).into_iter().filter(three) {
        let n = g.order();
        let mut grown = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if !g.has_edge(u, v) {
                    grown.push(g.add_edge(u, v).unwrap());
                }
            }
        }
        for nbrs in 0..1u32 << n {
            grown.push(g.add_vertex_with_neighbors(nbrs).unwrap());
        }
        for (u, v) in g.edges() {
            let h = g.delete_edge(u, v).unwrap();
            grown.push(h.add_vertex_with_neighbors(1 << u | 1 << v).unwrap());
        }
        for h in grown {
            count += 1;
            if !three(&h) {
                return Err(format!(
                    "{} -> {} lost three trees",
                    graph6::encode(&g),
                    graph6::encode(&h)
                ));
            }
        }
    }
    Ok(format!("{count} supergraphs and subdivisions"))
}

/// A K4 glued at a vertex with local connectivity at least 3 to some vertex
/// gives three trees.
pub fn observation_attach(e: &mut Enumerator, max_n: usize) -> Check {
    let mut count = 0;
    for g in connected_upto(e, max_n) {
        for u in 0..g.order() {
            let strong = (0..g.order())
                .filter(|&v| v != u)
                .any(|v| menger_local_connectivity(&g, u, v).unwrap() >= 3);
            if !strong {
                continue;
            }
            let h = glue_k4(&g, u).unwrap();
            count += 1;
            if !three(&h) {
                return Err(format!("{} at {u}", graph6::encode(&g)));
            }
        }
    }
    Ok(format!("{count} attachments"))
}

/// A K4 two of whose vertices are joined outside it gives three trees.
pub fn k4_path(e: &mut Enumerator, max_n: usize) -> Check {
    let mut count = 0;
    for g in connected_upto(e, max_n).into_iter().filter(has_k4_path) {
        count += 1;
        if !three(&g) {
            return Err(format!(
                "{} has a K4 path but not three trees",
                graph6::encode(&g)
            ));
        }
    }
    Ok(format!("{count} graphs with a K4 path"))
}

/// `kappa3bar(K_n) = n - 2`.
pub fn clique_values(range: std::ops::RangeInclusive<usize>) -> Check {
    for n in range.clone() {
        let v = kappa_bar_k(&complete_graph(n).unwrap(), 3).unwrap();
        if v != n - 2 {
            return Err(format!("kappa3bar(K{n}) = {v}"));
        }
    }
    Ok(format!("n = {}..={}", range.start(), range.end()))
}

/// `K2 ∨ (n-2)K1` has `2n - 3` edges and `kappa3bar = 2`.
pub fn h1_values(range: std::ops::RangeInclusive<usize>) -> Check {
    for n in range.clone() {
        let g = join(&complete_graph(2).unwrap(), &empty(n - 2).unwrap()).unwrap();
        let v = kappa_bar_k(&g, 3).unwrap();
        if g.edge_count() != 2 * n - 3 || v != 2 {
            return Err(format!("n={n}: {} edges, kappa3bar {v}", g.edge_count()));
        }
    }
    Ok(format!("n = {}..={}", range.start(), range.end()))
}

/// Isomorphism test agrees with key equality on all pairs of small classes
/// after a relabelling.
pub fn isomorphism_consistency(e: &mut Enumerator, n: usize, seed: u64) -> Check {
    let mut rng = StdRng::seed_from_u64(seed);
    let level = e.level(n).unwrap().to_vec();
    for (i, g) in level.iter().enumerate() {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let h = g.permuted(&order);
        for (j, k) in level.iter().enumerate() {
            if are_isomorphic(&h, k) != (i == j) {
                return Err(format!("classes {i} and {j} confused"));
            }
        }
    }
    Ok(format!("{} classes pairwise", level.len()))
}
