//! Exhaustive checks of the extremal statements, with structured reports.
//!
//! Each check enumerates a finite universe of isomorphism classes, tests a
//! predicate on every member and records counts plus a bounded list of
//! witnesses. Checks that need `kappa3bar >= 3` keep the packing certificate
//! and re-verify it with the independent checker.

mod cache;
mod report;

use std::collections::BTreeMap;
use std::time::Instant;

use rayon::prelude::*;

pub use cache::Kappa3Cache;
pub use report::{Outcome, VerificationReport, Witness, WitnessKind, WITNESS_LIMIT};

use crate::canon::{are_isomorphic, canonical_form};
use crate::enumerate::{Enumerator, GraphClassQuery, MAX_ENUM_ORDER};
use crate::error::{Error, Result};
use crate::families::{
    at_most_two, attach_k4, complete_graph, empty, extremal_catalog_by, h1_family, join,
    remark_construction, wheel, ExtremalCatalog, CATALOG_MIN_ORDER,
};
use crate::graph::{members, Graph};
use crate::graph6;
use crate::steiner::{
    kappa_bar_at_least, menger_local_connectivity, verify_packing, PackingResult,
};

/// Largest order used by the observation checks on all connected graphs.
pub const OBSERVATION_MAX_ORDER: usize = 6;
/// Largest order for the K4-path check.
pub const K4_PATH_MAX_ORDER: usize = 7;

/// Outcome of testing `kappa3bar >= 3` on one graph.
#[derive(Clone, Debug)]
pub enum Three {
    /// At least three; the certificate is absent on a cache hit.
    Yes(Option<PackingResult>),
    No,
    /// The solver claimed three trees but the certificate did not check out.
    BadCertificate(PackingResult),
}

impl Three {
    pub fn holds(&self) -> bool {
        matches!(self, Three::Yes(_))
    }
}

/// The value `f(n)` should take.
pub fn expected_f(n: usize) -> usize {
    match n {
        4 => 6,
        _ => 2 * n - 3,
    }
}

#[derive(Debug, Default)]
pub struct Harness {
    enumerator: Enumerator,
    catalogs: BTreeMap<usize, ExtremalCatalog>,
    cache: Option<Kappa3Cache>,
}

impl Harness {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cache(cache: Kappa3Cache) -> Self {
        Harness {
            cache: Some(cache),
            ..Self::default()
        }
    }

    pub fn cache(&self) -> Option<&Kappa3Cache> {
        self.cache.as_ref()
    }

    pub fn enumerator(&mut self) -> &mut Enumerator {
        &mut self.enumerator
    }

    pub fn three(&self, g: &Graph) -> Result<Three> {
        if g.order() < 3 {
            return Ok(Three::No);
        }
        if let Some(c) = &self.cache {
            return Ok(if c.kappa3bar(g)? >= 3 {
                Three::Yes(None)
            } else {
                Three::No
            });
        }
        Ok(match kappa_bar_at_least(g, 3, 3)? {
            Some(r) if verify_packing(g, &r.packing) && r.packing.len() >= 3 => Three::Yes(Some(r)),
            Some(r) => Three::BadCertificate(r),
            None => Three::No,
        })
    }

    fn low(&self, g: &Graph) -> Result<bool> {
        match &self.cache {
            Some(c) if g.order() >= 3 => Ok(c.kappa3bar(g)? <= 2),
            _ => Ok(at_most_two(g)),
        }
    }

    fn classes(&mut self, q: &GraphClassQuery) -> Result<Vec<Graph>> {
        self.enumerator.matching(q)
    }

    fn connected_upto(&mut self, max_n: usize) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        for n in 1..=max_n {
            out.extend(
                self.enumerator
                    .level(n)?
                    .iter()
                    .filter(|g| g.is_connected()),
            );
        }
        Ok(out)
    }

    pub fn catalog(&mut self, n: usize) -> Result<&ExtremalCatalog> {
        if !self.catalogs.contains_key(&n) {
            let cache = self.cache.take();
            let probe = Harness {
                cache,
                ..Harness::default()
            };
            let built = extremal_catalog_by(&mut self.enumerator, n, |g| probe.low(g));
            self.cache = probe.cache;
            self.catalogs.insert(n, built?);
        }
        Ok(&self.catalogs[&n])
    }

    fn three_all(&self, graphs: &[Graph]) -> Result<Vec<Three>> {
        graphs.par_iter().map(|g| self.three(g)).collect()
    }

    /// Scan connected `(n, m)` classes expecting every one to have
    /// `kappa3bar >= 3`.
    fn all_three(&mut self, id: &str, n: usize, m: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let q = GraphClassQuery::connected(n, m)?;
        let mut rep = VerificationReport::new(id, q.describe());
        let graphs = self.classes(&q)?;
        let results = self.three_all(&graphs)?;
        rep.scanned = graphs.len();
        for (g, r) in graphs.iter().zip(&results) {
            record_three(&mut rep, g, r);
        }
        rep.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(rep)
    }

    pub fn lemma3(&mut self) -> Result<VerificationReport> {
        let mut rep = self.all_three("lemma3", 5, 8)?;
        let w5 = wheel(5)?;
        if let Three::Yes(Some(r)) = self.three(&w5)? {
            rep.note(Witness::example(&w5, "wheel on five vertices").with_packing(&r));
        }
        Ok(rep)
    }

    pub fn lemma5(&mut self) -> Result<VerificationReport> {
        self.all_three("lemma5", 6, 10)
    }

    /// Connected `(5, 7)`: exactly four classes, all with `kappa3bar <= 2`.
    pub fn lemma4(&mut self) -> Result<VerificationReport> {
        let start = Instant::now();
        let q = GraphClassQuery::connected(5, 7)?;
        let mut rep = VerificationReport::new("lemma4", q.describe());
        let graphs = self.classes(&q)?;
        let results = self.three_all(&graphs)?;
        rep.scanned = graphs.len();
        for (g, r) in graphs.iter().zip(&results) {
            match r {
                Three::No => {
                    rep.satisfied += 1;
                    rep.members.push(canonical_form(g).to_string());
                }
                Three::Yes(cert) => {
                    let w = Witness::counterexample(Some(g), "kappa3bar >= 3");
                    rep.fail(match cert {
                        Some(c) => w.with_packing(c),
                        None => w,
                    });
                }
                Three::BadCertificate(c) => rep
                    .fail(Witness::counterexample(Some(g), "certificate rejected").with_packing(c)),
            }
        }
        rep.members.sort();
        if rep.scanned != 4 {
            rep.fail(Witness::counterexample(
                None,
                format!("expected 4 classes, found {}", rep.scanned),
            ));
        }
        let named = [
            (join(&complete_graph(2)?, &empty(3)?)?, "K2 joined with 3K1"),
            (
                complete_graph(4)?.add_vertex_with_neighbors(0b1)?,
                "K4 with a pendant vertex",
            ),
        ];
        for (h, name) in named {
            if graphs.iter().any(|g| are_isomorphic(g, &h)) {
                rep.note(Witness::example(&h, name));
            } else {
                rep.fail(Witness::counterexample(
                    Some(&h),
                    format!("{name} not among the classes"),
                ));
            }
        }
        rep.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(rep)
    }

    /// Connected `(6, 9)`: list the classes with `kappa3bar <= 2`.
    pub fn lemma6(&mut self) -> Result<VerificationReport> {
        let start = Instant::now();
        let q = GraphClassQuery::connected(6, 9)?;
        let mut rep = VerificationReport::new("lemma6", q.describe());
        let graphs = self.classes(&q)?;
        let results = self.three_all(&graphs)?;
        rep.scanned = graphs.len();
        let mut low = Vec::new();
        for (g, r) in graphs.iter().zip(&results) {
            match r {
                Three::No => low.push(*g),
                Three::BadCertificate(c) => rep
                    .fail(Witness::counterexample(Some(g), "certificate rejected").with_packing(c)),
                Three::Yes(_) => {}
            }
        }
        rep.satisfied = low.len();
        rep.members = low.iter().map(|g| canonical_form(g).to_string()).collect();
        rep.members.sort();
        rep.count(
            "cubic",
            low.iter()
                .filter(|g| g.max_degree() == 3 && g.min_degree() == 3)
                .count(),
        );
        let k3_k4 = attach_k4(&complete_graph(3)?, 0)?;
        if low.iter().any(|g| are_isomorphic(g, &k3_k4)) {
            rep.note(Witness::example(&k3_k4, "K4 attached to a triangle"));
        }
        if low.is_empty() {
            rep.fail(Witness::counterexample(
                None,
                "no class with kappa3bar <= 2",
            ));
        }
        rep.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(rep)
    }

    /// Compute `f(n)` and the extremal classes, then confirm every connected
    /// class with `f(n) + 1` edges has `kappa3bar >= 3`.
    pub fn theorem(&mut self, n: usize) -> Result<VerificationReport> {
        if !(CATALOG_MIN_ORDER..=MAX_ENUM_ORDER).contains(&n) {
            return Err(Error::InvalidParameters(format!(
                "theorem check needs {CATALOG_MIN_ORDER} <= n <= {MAX_ENUM_ORDER}, got {n}"
            )));
        }
        let start = Instant::now();
        let catalog = self.catalog(n)?.clone();
        let f = catalog.f_value;
        let universe = format!("connected graphs, n={n}");
        let mut rep = VerificationReport::new(format!("theorem-n{n}"), universe);
        rep.f_value = Some(f);
        rep.members = catalog.members.iter().map(|k| k.to_string()).collect();
        if f != expected_f(n) {
            rep.fail(Witness::counterexample(
                None,
                format!("f({n}) = {f}, expected {}", expected_f(n)),
            ));
        }
        let max_m = n * (n - 1) / 2;
        if f < max_m {
            let above = self.all_three("", n, f + 1)?;
            rep.scanned = above.scanned;
            rep.satisfied = above.satisfied;
            for w in above.witnesses {
                rep.fail(w);
            }
        }
        let mut textual = vec![];
        match n {
            3 => textual.push((complete_graph(3)?, "K3".to_string())),
            4 => textual.push((complete_graph(4)?, "K4".to_string())),
            _ => {
                for (i, g) in h1_family(n)?.into_iter().enumerate() {
                    textual.push((g, format!("attachment family member {i}")));
                }
            }
        }
        for (g, name) in textual {
            if !catalog.contains(&g) {
                rep.fail(Witness::counterexample(
                    Some(&g),
                    format!("{name} missing from catalog"),
                ));
            }
        }
        rep.count("catalog_size", catalog.members.len());
        rep.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(rep)
    }

    /// Grow each extremal class of order `n - 1` by one vertex in the three
    /// ways below; every result must have `kappa3bar >= 3` or be extremal
    /// (the degree-3 addition must always reach 3).
    ///
    /// * add a vertex adjacent to two vertices;
    /// * add a vertex adjacent to three vertices;
    /// * delete an edge `x1x2` and add a vertex adjacent to `x1`, `x2` and a
    ///   third vertex `x3`.
    pub fn inductive(&mut self, n: usize) -> Result<VerificationReport> {
        if !(CATALOG_MIN_ORDER + 1..=MAX_ENUM_ORDER).contains(&n) {
            return Err(Error::InvalidParameters(format!(
                "inductive check needs {} <= n <= {MAX_ENUM_ORDER}, got {n}",
                CATALOG_MIN_ORDER + 1
            )));
        }
        let start = Instant::now();
        let prev = self.catalog(n - 1)?.clone();
        let next = self.catalog(n)?.clone();
        let mut rep = VerificationReport::new(
            format!("inductive-n{n}"),
            format!(
                "extensions of the {} extremal classes of order {}",
                prev.members.len(),
                n - 1
            ),
        );
        // (lemma tag, graph, may be extremal)
        let mut cases: Vec<(&str, Graph, bool)> = Vec::new();
        for g in prev.graphs() {
            let m = g.order();
            for a in 0..m {
                for b in a + 1..m {
                    cases.push((
                        "degree2",
                        g.add_vertex_with_neighbors(1 << a | 1 << b)?,
                        true,
                    ));
                    for c in b + 1..m {
                        let nbrs = 1 << a | 1 << b | 1 << c;
                        cases.push(("degree3", g.add_vertex_with_neighbors(nbrs)?, false));
                    }
                }
            }
            for (x1, x2) in g.edges() {
                let cut = g.delete_edge(x1, x2)?;
                for x3 in (0..m).filter(|&x| x != x1 && x != x2) {
                    let nbrs = 1 << x1 | 1 << x2 | 1 << x3;
                    cases.push(("split", cut.add_vertex_with_neighbors(nbrs)?, true));
                }
            }
        }
        let results: Vec<Three> = cases
            .par_iter()
            .map(|(_, h, _)| self.three(h))
            .collect::<Result<_>>()?;
        rep.scanned = cases.len();
        let mut tally: BTreeMap<String, usize> = BTreeMap::new();
        for ((tag, h, may_be_extremal), r) in cases.iter().zip(&results) {
            *tally.entry(format!("{tag}_extensions")).or_default() += 1;
            let ok = match r {
                Three::Yes(_) => {
                    *tally.entry(format!("{tag}_three")).or_default() += 1;
                    true
                }
                Three::No if *may_be_extremal && next.contains(h) => {
                    *tally.entry(format!("{tag}_extremal")).or_default() += 1;
                    true
                }
                Three::No => false,
                Three::BadCertificate(_) => false,
            };
            if ok {
                rep.satisfied += 1;
            } else {
                rep.fail(Witness::counterexample(Some(h), format!("{tag} extension")));
            }
        }
        rep.counts = tally;
        rep.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(rep)
    }

    /// Structural facts about adding vertices, edges and K4s, checked on all
    /// small connected graphs. Every tested implication whose premise holds
    /// counts as scanned.
    pub fn observations(&mut self) -> Result<VerificationReport> {
        let start = Instant::now();
        let mut rep = VerificationReport::new(
            "observations",
            format!(
                "connected graphs with n <= {OBSERVATION_MAX_ORDER} (K4 paths: n <= {K4_PATH_MAX_ORDER})"
            ),
        );
        let small = self.connected_upto(OBSERVATION_MAX_ORDER)?;
        let small_three = self.three_all(&small)?;

        // supergraphs and subdivisions keep kappa3bar >= 3
        let mut grown: Vec<(&str, Graph)> = Vec::new();
        for (g, r) in small.iter().zip(&small_three) {
            if !r.holds() {
                continue;
            }
            let n = g.order();
            for u in 0..n {
                for v in u + 1..n {
                    if !g.has_edge(u, v) {
                        grown.push(("add_edge", g.add_edge(u, v)?));
                    }
                }
            }
            for nbrs in 0..1u32 << n {
                grown.push(("add_vertex", g.add_vertex_with_neighbors(nbrs)?));
            }
            for (u, v) in g.edges() {
                let h = g
                    .delete_edge(u, v)?
                    .add_vertex_with_neighbors(1 << u | 1 << v)?;
                grown.push(("subdivide", h));
            }
        }

        // K4 attached at a vertex with local connectivity >= 3 to some vertex
        let mut attached: Vec<(&str, Graph)> = Vec::new();
        for g in &small {
            for u in 0..g.order() {
                let strong = (0..g.order())
                    .filter(|&v| v != u)
                    .any(|v| menger_local_connectivity(g, u, v).is_ok_and(|c| c >= 3));
                if !strong {
                    continue;
                }
                match attach_k4(g, u) {
                    Ok(h) => attached.push(("attach_k4", h)),
                    Err(Error::AlreadyAttached(_)) => {}
                    Err(e) => return Err(e),
                }
            }
        }

        // a K4 two of whose vertices are joined outside it
        let mut k4_path: Vec<(&str, Graph)> = Vec::new();
        for g in self.connected_upto(K4_PATH_MAX_ORDER)? {
            if has_k4_path(&g) {
                k4_path.push(("k4_path", g));
            }
        }

        let all: Vec<(&str, Graph)> = grown.into_iter().chain(attached).chain(k4_path).collect();
        let results: Vec<Three> = all
            .par_iter()
            .map(|(_, h)| self.three(h))
            .collect::<Result<_>>()?;
        rep.scanned = all.len();
        for ((tag, h), r) in all.iter().zip(&results) {
            *rep.counts.entry((*tag).to_string()).or_default() += 1;
            if r.holds() {
                rep.satisfied += 1;
            } else {
                rep.fail(Witness::counterexample(
                    Some(h),
                    format!("{tag}: kappa3bar <= 2"),
                ));
            }
        }
        rep.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(rep)
    }

    /// The lower-bound construction for every `5 <= n <= max_n` and
    /// `2 <= l <= min(n - 2, max_l)`: exact edge count and `kappa3bar <= l`.
    pub fn remark(&mut self, max_n: usize, max_l: usize) -> Result<VerificationReport> {
        let start = Instant::now();
        let mut rep = VerificationReport::new(
            "remark",
            format!("5 <= n <= {max_n}, 2 <= l <= min(n-2, {max_l})"),
        );
        let mut params = Vec::new();
        for n in 5..=max_n {
            for l in 2..=max_l.min(n - 2) {
                params.push((n, l));
            }
        }
        let outcomes: Vec<(usize, usize, Result<Graph>, bool)> = params
            .par_iter()
            .map(|&(n, l)| match remark_construction(n, l) {
                Ok(g) => {
                    let capped = kappa_bar_at_least(&g, 3, l + 1).map(|r| r.is_none());
                    (n, l, Ok(g), capped.unwrap_or(false))
                }
                Err(e) => (n, l, Err(e), false),
            })
            .collect();
        rep.scanned = outcomes.len();
        for (n, l, g, capped) in outcomes {
            let g = match g {
                Ok(g) => g,
                Err(e) => {
                    rep.fail(Witness::counterexample(None, format!("n={n}, l={l}: {e}")));
                    continue;
                }
            };
            let both_odd = n % 2 == 1 && l % 2 == 1;
            let twice = (l + 2) * (n - 2) + if both_odd { 1 } else { 2 };
            let edges_ok = 2 * g.edge_count() == twice;
            let delta = if both_odd { l - 1 } else { l };
            *rep.counts
                .entry(format!(
                    "min_degree_{}",
                    if g.min_degree() == l { "l" } else { "other" }
                ))
                .or_default() += 1;
            if edges_ok && capped && g.min_degree() == delta {
                rep.satisfied += 1;
            } else {
                let why = format!(
                    "n={n}, l={l}: edges {} (want {}/2), kappa3bar <= l: {capped}, min degree {}",
                    g.edge_count(),
                    twice,
                    g.min_degree()
                );
                rep.fail(Witness::counterexample(Some(&g), why));
            }
        }
        rep.elapsed_ms = start.elapsed().as_millis() as u64;
        Ok(rep)
    }

    /// Every check: lemmas 3-6, theorem for `3..=max_n`, inductive steps for
    /// `7..=max_n`, observations and the construction up to order 9.
    pub fn all(&mut self, max_n: usize) -> Result<Vec<VerificationReport>> {
        let mut out = vec![
            self.lemma3()?,
            self.lemma4()?,
            self.lemma5()?,
            self.lemma6()?,
        ];
        for n in CATALOG_MIN_ORDER..=max_n {
            out.push(self.theorem(n)?);
        }
        for n in 7..=max_n {
            out.push(self.inductive(n)?);
        }
        out.push(self.observations()?);
        out.push(self.remark(9, 7)?);
        Ok(out)
    }
}

fn record_three(rep: &mut VerificationReport, g: &Graph, r: &Three) {
    match r {
        Three::Yes(_) => rep.satisfied += 1,
        Three::No => rep.fail(Witness::counterexample(Some(g), "kappa3bar <= 2")),
        Three::BadCertificate(c) => {
            rep.fail(Witness::counterexample(Some(g), "certificate rejected").with_packing(c))
        }
    }
}

/// Does `g` contain a K4 with two of its vertices joined by a path that
/// avoids the K4's edges?
pub fn has_k4_path(g: &Graph) -> bool {
    g.cliques_of_size(4).into_iter().any(|q| {
        let mut h = *g;
        let qv: Vec<usize> = members(q).collect();
        for (i, &a) in qv.iter().enumerate() {
            for &b in &qv[i + 1..] {
                h = h.delete_edge(a, b).expect("clique edge");
            }
        }
        qv.iter().any(|&a| h.component_of(a) & q & !(1 << a) != 0)
    })
}

pub fn verify_lemma3() -> Result<VerificationReport> {
    Harness::new().lemma3()
}

pub fn verify_lemma4() -> Result<VerificationReport> {
    Harness::new().lemma4()
}

pub fn verify_lemma5() -> Result<VerificationReport> {
    Harness::new().lemma5()
}

pub fn verify_lemma6() -> Result<VerificationReport> {
    Harness::new().lemma6()
}

pub fn verify_theorem(n: usize) -> Result<VerificationReport> {
    Harness::new().theorem(n)
}

pub fn verify_inductive_lemmas(n: usize) -> Result<VerificationReport> {
    Harness::new().inductive(n)
}

pub fn verify_observations() -> Result<VerificationReport> {
    Harness::new().observations()
}

pub fn verify_remark(max_n: usize, max_l: usize) -> Result<VerificationReport> {
    Harness::new().remark(max_n, max_l)
}

/// Decode the members listed in a report.
pub fn member_graphs(rep: &VerificationReport) -> Result<Vec<Graph>> {
    rep.members.iter().map(|m| graph6::decode(m)).collect()
}
