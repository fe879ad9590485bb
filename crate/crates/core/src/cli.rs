//! Command-line front end. `run` does all the work so tests can drive it
//! without spawning a process.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad usage or input.

use std::fs;
use std::io::{self, BufReader, Cursor, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::enumerate::{ingest_graph6, GraphClassQuery};
use crate::error::{Error, Result};
use crate::families;
use crate::graph::Graph;
use crate::graph6;
use crate::harness::{Harness, Kappa3Cache, VerificationReport};
use crate::steiner::{kappa_bar_k, kappa_k, max_packing, TerminalSet};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kappa3",
    version,
    about = "Internally disjoint Steiner trees on small graphs"
)]
pub struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Persistent kappa3bar cache file.
    #[arg(long, global = true, env = "KAPPA3_CACHE", value_name = "PATH")]
    cache: Option<PathBuf>,
    /// Include elapsed times in JSON reports.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tree packing numbers of a graph.
    Kappa(KappaArgs),
    /// List isomorphism classes.
    Enumerate(EnumerateArgs),
    /// Build a named graph.
    Family(FamilyArgs),
    /// Extremal classes of one order.
    Catalog(CatalogArgs),
    /// Check a claim exhaustively.
    Verify(VerifyArgs),
    /// Maintain the cache file.
    Cache(CacheArgs),
}

#[derive(Debug, Args)]
#[group(id = "input", required = true, multiple = false)]
struct InputArgs {
    /// A graph6 string.
    #[arg(long, group = "input")]
    g6: Option<String>,
    /// A file of graph6 strings, one per line.
    #[arg(long, group = "input")]
    file: Option<PathBuf>,
    /// An edge list such as `0-1,1-2,2-0`.
    #[arg(long, group = "input")]
    edges: Option<String>,
}

#[derive(Debug, Args)]
struct KappaArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Order for --edges (default: largest endpoint + 1).
    #[arg(long)]
    order: Option<usize>,
    /// Terminal set, e.g. `0,2,4`.
    #[arg(long, conflicts_with = "all_triples")]
    set: Option<String>,
    /// Report every 3-subset.
    #[arg(long)]
    all_triples: bool,
    /// Terminal set size for the min/max summary.
    #[arg(long, default_value_t = 3)]
    k: usize,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    n: usize,
    /// Exact size; overrides --m-min/--m-max.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    m_min: Option<usize>,
    #[arg(long)]
    m_max: Option<usize>,
    #[arg(long)]
    connected: bool,
    /// Print only the number of classes.
    #[arg(long)]
    count: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyName {
    Empty,
    Complete,
    Path,
    Cycle,
    Wheel,
    H1,
    Regular,
    Remark,
}

#[derive(Debug, Args)]
struct FamilyArgs {
    name: FamilyName,
    #[arg(long)]
    n: usize,
    /// Degree for `regular`.
    #[arg(long)]
    d: Option<usize>,
    /// Parameter for `remark`.
    #[arg(long)]
    l: Option<usize>,
    /// Attach a K4 at this vertex; repeatable, applied in order.
    #[arg(long = "attach", value_name = "V")]
    attach: Vec<usize>,
}

#[derive(Debug, Args)]
struct CatalogArgs {
    #[arg(long)]
    n: usize,
    /// Also write the catalog JSON here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Claim {
    Lemma3,
    Lemma4,
    Lemma5,
    Lemma6,
    Theorem,
    Inductive,
    Observations,
    Remark,
    All,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    claim: Claim,
    /// A single order for theorem/inductive; otherwise every order up to
    /// --max-n.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 8)]
    max_n: usize,
    /// Largest l for the construction check.
    #[arg(long, default_value_t = 7)]
    max_l: usize,
    /// Largest n for the construction check.
    #[arg(long, default_value_t = 9)]
    remark_max_n: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CacheAction {
    Inspect,
    Compact,
    Audit,
}

#[derive(Debug, Args)]
struct CacheArgs {
    action: CacheAction,
    /// Entries to recompute for `audit`.
    #[arg(long, default_value_t = 200)]
    sample: usize,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Parse `args` (including the program name) and run. Primary output goes
/// to `out`, diagnostics and timings to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    if let Some(t) = cli.threads {
        // only the first call in a process can size the global pool
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global();
    }
    match dispatch(&cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_FAIL,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match &cli.command {
        Command::Kappa(a) => kappa(cli, a, out),
        Command::Enumerate(a) => enumerate(cli, a, out),
        Command::Family(a) => family(cli, a, out),
        Command::Catalog(a) => catalog(cli, a, out, err),
        Command::Verify(a) => verify(cli, a, out, err),
        Command::Cache(a) => cache(cli, a, out),
    }
}

fn print_json(out: &mut dyn Write, v: &serde_json::Value) -> Outcome {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("json value")
    )?;
    Ok(())
}

fn parse_list(text: &str) -> std::result::Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("not a vertex: {t:?}")))
        })
        .collect()
}

fn parse_edges(text: &str, order: Option<usize>) -> std::result::Result<Graph, Failure> {
    let mut edges = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (a, b) = part
            .split_once('-')
            .ok_or_else(|| Failure::Usage(format!("bad edge {part:?}, expected u-v")))?;
        let a: usize = a
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("bad edge {part:?}")))?;
        let b: usize = b
            .trim()
            .parse()
            .map_err(|_| Failure::Usage(format!("bad edge {part:?}")))?;
        edges.push((a, b));
    }
    let n = order.unwrap_or_else(|| edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0));
    Ok(Graph::from_edges(n, &edges)?)
}

fn read_inputs(a: &KappaArgs) -> std::result::Result<Vec<Graph>, Failure> {
    let i = &a.input;
    if let Some(text) = &i.g6 {
        return Ok(vec![graph6::decode(text)?]);
    }
    if let Some(text) = &i.edges {
        return Ok(vec![parse_edges(text, a.order)?]);
    }
    let path = i.file.as_ref().expect("clap enforces one input");
    let data = fs::read(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    let got = ingest_graph6(BufReader::new(Cursor::new(data)), false);
    if let Some((line, e)) = got.errors.first() {
        return Err(Failure::Usage(format!("{}:{line}: {e}", path.display())));
    }
    Ok(got.graphs)
}

fn open_cache(cli: &Cli) -> Result<Option<Kappa3Cache>> {
    cli.cache.as_deref().map(Kappa3Cache::load).transpose()
}

fn save_cache(cli: &Cli, cache: Option<&Kappa3Cache>) -> Result<()> {
    match (cli.cache.as_deref(), cache) {
        (Some(path), Some(c)) => c.flush(path),
        _ => Ok(()),
    }
}

fn kappa(cli: &Cli, a: &KappaArgs, out: &mut dyn Write) -> Outcome {
    let graphs = read_inputs(a)?;
    let cache = open_cache(cli)?;
    let mut docs = Vec::new();
    for g in &graphs {
        let code = graph6::encode(g);
        if let Some(set) = &a.set {
            let s = TerminalSet::new(g, &parse_list(set)?)?;
            let r = max_packing(g, &s, None)?;
            let trees: Vec<_> = r.packing.trees.iter().map(|t| t.edges.clone()).collect();
            if cli.json {
                docs.push(json!({
                    "graph6": code, "terminals": s.vertices(), "value": r.value, "trees": trees,
                }));
            } else {
                writeln!(
                    out,
                    "{code}\tkappa({}) = {}",
                    join_list(&s.vertices()),
                    r.value
                )?;
                for t in &trees {
                    let parts: Vec<String> = t.iter().map(|(u, v)| format!("{u}-{v}")).collect();
                    writeln!(out, "  {}", parts.join(","))?;
                }
            }
        } else if a.all_triples {
            let mut rows = Vec::new();
            for x in 0..g.order() {
                for y in x + 1..g.order() {
                    for z in y + 1..g.order() {
                        let s = TerminalSet::new(g, &[x, y, z])?;
                        rows.push(([x, y, z], max_packing(g, &s, None)?.value));
                    }
                }
            }
            if cli.json {
                let list: Vec<_> = rows
                    .iter()
                    .map(|(t, v)| json!({"terminals": t, "value": v}))
                    .collect();
                docs.push(json!({"graph6": code, "triples": list}));
            } else {
                writeln!(out, "{code}")?;
                for (t, v) in rows {
                    writeln!(out, "  {}\t{v}", join_list(&t))?;
                }
            }
        } else {
            let k = a.k;
            let low = kappa_k(g, k)?;
            let high = match (&cache, k) {
                (Some(c), 3) => c.kappa3bar(g)? as usize,
                _ => kappa_bar_k(g, k)?,
            };
            if cli.json {
                docs.push(json!({"graph6": code, "k": k, "kappa": low, "kappa_bar": high}));
            } else {
                writeln!(out, "{code}\tkappa{k} = {low}\tkappa{k}bar = {high}")?;
            }
        }
    }
    save_cache(cli, cache.as_ref())?;
    if cli.json {
        let v = if docs.len() == 1 {
            docs.pop().unwrap()
        } else {
            json!(docs)
        };
        print_json(out, &v)?;
    }
    Ok(())
}

fn join_list(v: &[usize]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn enumerate(cli: &Cli, a: &EnumerateArgs, out: &mut dyn Write) -> Outcome {
    let max_m = a.n * a.n.saturating_sub(1) / 2;
    let (lo, hi) = match a.m {
        Some(m) => (m, m),
        None => (a.m_min.unwrap_or(0), a.m_max.unwrap_or(max_m)),
    };
    let q = GraphClassQuery::new(a.n, lo, hi, a.connected)?;
    let graphs = crate::enumerate::enumerate_matching(&q)?;
    let mut codes: Vec<String> = graphs.iter().map(graph6::encode).collect();
    codes.sort();
    if cli.json {
        let mut doc = json!({"query": q, "count": codes.len()});
        if !a.count {
            doc["graphs"] = json!(codes);
        }
        print_json(out, &doc)
    } else if a.count {
        writeln!(out, "{}", codes.len())?;
        Ok(())
    } else {
        for c in codes {
            writeln!(out, "{c}")?;
        }
        Ok(())
    }
}

fn need(value: Option<usize>, flag: &str) -> std::result::Result<usize, Failure> {
    value.ok_or_else(|| Failure::Usage(format!("this family needs --{flag}")))
}

fn family(cli: &Cli, a: &FamilyArgs, out: &mut dyn Write) -> Outcome {
    let mut g = match a.name {
        FamilyName::Empty => families::empty(a.n)?,
        FamilyName::Complete => families::complete_graph(a.n)?,
        FamilyName::Path => families::path(a.n)?,
        FamilyName::Cycle => families::cycle(a.n)?,
        FamilyName::Wheel => families::wheel(a.n)?,
        FamilyName::H1 => families::h1(a.n)?,
        FamilyName::Regular => families::regular_graph(a.n, need(a.d, "d")?)?,
        FamilyName::Remark => families::remark_construction(a.n, need(a.l, "l")?)?,
    };
    for &u in &a.attach {
        g = families::attach_k4(&g, u)?;
    }
    let code = graph6::encode(&g);
    if cli.json {
        print_json(
            out,
            &json!({"graph6": code, "n": g.order(), "m": g.edge_count()}),
        )
    } else {
        writeln!(out, "{code}")?;
        Ok(())
    }
}

fn catalog(cli: &Cli, a: &CatalogArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let mut h = harness(cli)?;
    let start = std::time::Instant::now();
    let c = h.catalog(a.n)?.clone();
    writeln!(err, "catalog n={}: {} ms", a.n, start.elapsed().as_millis())?;
    save_cache(cli, h.cache())?;
    let doc = serde_json::to_value(&c).expect("catalog serialises");
    if let Some(path) = &a.out {
        write_json(path, &doc)?;
    }
    if cli.json {
        print_json(out, &doc)
    } else {
        writeln!(out, "f({}) = {}", c.n, c.f_value)?;
        for m in &c.members {
            writeln!(out, "{m}")?;
        }
        Ok(())
    }
}

fn write_json(path: &Path, v: &serde_json::Value) -> Outcome {
    let text = serde_json::to_string_pretty(v).expect("json value") + "\n";
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn harness(cli: &Cli) -> Result<Harness> {
    Ok(match open_cache(cli)? {
        Some(c) => Harness::with_cache(c),
        None => Harness::new(),
    })
}

fn orders(a: &VerifyArgs, from: usize) -> Vec<usize> {
    match a.n {
        Some(n) => vec![n],
        None => (from..=a.max_n).collect(),
    }
}

fn verify(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let mut h = harness(cli)?;
    let reports: Vec<VerificationReport> = match a.claim {
        Claim::Lemma3 => vec![h.lemma3()?],
        Claim::Lemma4 => vec![h.lemma4()?],
        Claim::Lemma5 => vec![h.lemma5()?],
        Claim::Lemma6 => vec![h.lemma6()?],
        Claim::Theorem => orders(a, 3)
            .into_iter()
            .map(|n| h.theorem(n))
            .collect::<Result<_>>()?,
        Claim::Inductive => orders(a, 7)
            .into_iter()
            .map(|n| h.inductive(n))
            .collect::<Result<_>>()?,
        Claim::Observations => vec![h.observations()?],
        Claim::Remark => vec![h.remark(a.remark_max_n, a.max_l)?],
        Claim::All => {
            let mut v = vec![h.lemma3()?, h.lemma4()?, h.lemma5()?, h.lemma6()?];
            for n in 3..=a.max_n {
                v.push(h.theorem(n)?);
            }
            for n in 7..=a.max_n {
                v.push(h.inductive(n)?);
            }
            v.push(h.observations()?);
            v.push(h.remark(a.remark_max_n, a.max_l)?);
            v
        }
    };
    save_cache(cli, h.cache())?;
    for r in &reports {
        writeln!(err, "{}: {} ms", r.claim_id, r.elapsed_ms)?;
    }
    if cli.json {
        let docs: Vec<_> = reports.iter().map(|r| r.to_json(cli.timings)).collect();
        let v = if docs.len() == 1 {
            docs[0].clone()
        } else {
            json!(docs)
        };
        print_json(out, &v)?;
    } else {
        for r in &reports {
            let status = if r.passed() { "PASS" } else { "FAIL" };
            write!(
                out,
                "{status} {} scanned={} satisfied={}",
                r.claim_id, r.scanned, r.satisfied
            )?;
            if let Some(f) = r.f_value {
                write!(out, " f={f} members={}", r.members.len())?;
            }
            writeln!(out)?;
            for w in r
                .witnesses
                .iter()
                .filter(|w| !r.passed() || w.graph6.is_some())
            {
                let code = w.graph6.as_deref().unwrap_or("-");
                writeln!(out, "  {:?} {code} {}", w.kind, w.note)?;
            }
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn cache(cli: &Cli, a: &CacheArgs, out: &mut dyn Write) -> Outcome {
    let path = cli
        .cache
        .as_deref()
        .ok_or_else(|| Failure::Usage("no cache file: pass --cache or set KAPPA3_CACHE".into()))?;
    let c = Kappa3Cache::load(path)?;
    match a.action {
        CacheAction::Inspect => {
            let mut hist = std::collections::BTreeMap::new();
            for (_, v) in c.entries() {
                *hist.entry(v).or_insert(0usize) += 1;
            }
            if cli.json {
                let h: serde_json::Map<_, _> = hist
                    .iter()
                    .map(|(k, v)| (k.to_string(), json!(v)))
                    .collect();
                print_json(out, &json!({"entries": c.len(), "by_value": h}))
            } else {
                writeln!(out, "entries\t{}", c.len())?;
                for (k, v) in hist {
                    writeln!(out, "kappa3bar={k}\t{v}")?;
                }
                Ok(())
            }
        }
        CacheAction::Compact => {
            c.flush(path)?;
            writeln!(out, "entries\t{}", c.len())?;
            Ok(())
        }
        CacheAction::Audit => {
            let bad = c.audit(a.sample)?;
            for (k, stored, fresh) in &bad {
                writeln!(out, "{k}\tstored={stored}\trecomputed={fresh}")?;
            }
            writeln!(out, "mismatches\t{}", bad.len())?;
            if bad.is_empty() {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}
