//! Command-line driver: generate the blow-up constructions, count induced
//! cycles, run the structural detectors, test family membership, evaluate the
//! count formulas, search graph streams, and verify structural properties.
//!
//! Graphs stream in as graph6 lines (stdin or `--input`); results stream out
//! as one JSON document per input graph. Diagnostics go to stderr. Exit codes:
//! 0 success, 1 property violations found, 2 usage or input errors.

use std::fs::File;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use planar_cycles::graph::{parse_edge_list, write_edge_list, Graph};
use planar_cycles::graph6::{graph6_decode_verbose, graph6_encode, Graph6Warning};
use planar_cycles::{
    blowup_cycle, blowup_cycle_with_paths, count_induced_cycles_with, family_layout,
    family_member, find_empty_k27, find_hub_spoke_cycles, formula_table, hub_cycle_probe,
    is_in_family, is_planar, max_induced_6cycles, property_suite, random_planar, search_complete,
    span_intersection, structure::principal_map, IntraEdges, Parallelism,
};

#[derive(Parser)]
#[command(name = "planar-cycles", version, about = "Planar graph analysis around induced cycles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Graph6,
    EdgeList,
}

#[derive(Args)]
struct InputOpts {
    /// Input file of graph6 lines; `-` or absent reads stdin
    #[arg(long)]
    input: Option<String>,
    /// Treat the whole input as one graph in edge-list format (`n m` header)
    #[arg(long)]
    edge_list: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Generate the blow-up of an m-cycle on n vertices (the hexagon-family
    /// endpoints for m = 6)
    Gen {
        n: usize,
        m: usize,
        /// Add the path through each blown-up class
        #[arg(long, conflicts_with = "family")]
        prime: bool,
        /// Family member with an intra-edge selector: `none`, `all`,
        /// `seed:<u64>`, or explicit `a=0,2;b=;c=1` (m must be 6)
        #[arg(long)]
        family: Option<String>,
        #[arg(long, value_enum, default_value = "graph6")]
        format: Format,
        /// Write a JSON sidecar naming hubs and classes to this path
        #[arg(long)]
        sidecar: Option<String>,
    },
    /// Count induced k-cycles per input graph
    Count {
        #[arg(short, default_value_t = 6)]
        k: usize,
        #[command(flatten)]
        input: InputOpts,
    },
    /// Structural analysis: principal neighbours, hub/spoke hexagons, empty
    /// K_{2,7} witnesses, and probes
    Analyze {
        #[command(flatten)]
        input: InputOpts,
        /// Half length of the hub-cycle probe
        #[arg(long, default_value_t = 3)]
        hub_k: usize,
        /// Common-neighbourhood threshold for the hub-cycle probe
        /// (default: max(1, n/10))
        #[arg(long)]
        hub_tau: Option<usize>,
        /// Minimum per-vertex induced 6-cycle count before the expensive
        /// probes run (default: n^2/10)
        #[arg(long)]
        probe_threshold: Option<u64>,
        /// Run the probes regardless of the thresholds
        #[arg(long)]
        force_probes: bool,
    },
    /// Hexagon-family membership report per input graph
    CheckFamily {
        #[command(flatten)]
        input: InputOpts,
    },
    /// The closed-form count table for order n
    Formula { n: usize },
    /// Maximum induced 6-cycle count over a stream (or the complete internal
    /// enumeration for n <= 7 when no input is given)
    Search {
        n: usize,
        /// Input file of graph6 lines; absent runs the internal enumeration
        #[arg(long)]
        input: Option<String>,
        /// Deduplicate the internal enumeration up to isomorphism (slower)
        #[arg(long)]
        dedup: bool,
        /// Worker threads (0 = rayon default)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
    /// Run the structural property suite over a stream of planar graphs
    Verify {
        /// Input file of graph6 lines; `-` or absent reads stdin (unless
        /// --random is given)
        #[arg(long)]
        input: Option<String>,
        /// Generate a seeded random planar corpus of this size instead of
        /// reading input
        #[arg(long)]
        random: Option<usize>,
        /// Largest order in the random corpus
        #[arg(long, default_value_t = 40)]
        nmax: usize,
        /// Base seed for the random corpus
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Worker threads (0 = rayon default)
        #[arg(long, default_value_t = 0)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, String> {
    match cmd {
        Command::Gen { n, m, prime, family, format, sidecar } => gen(n, m, prime, family, format, sidecar),
        Command::Count { k, input } => count(k, &input),
        Command::Analyze { input, hub_k, hub_tau, probe_threshold, force_probes } => {
            analyze(&input, hub_k, hub_tau, probe_threshold, force_probes)
        }
        Command::CheckFamily { input } => check_family(&input),
        Command::Formula { n } => {
            let table = formula_table(n).map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string(&table).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
        Command::Search { n, input, dedup, jobs } => search(n, input, dedup, jobs),
        Command::Verify { input, random, nmax, seed, jobs } => verify(input, random, nmax, seed, jobs),
    }
}

fn gen(
    n: usize,
    m: usize,
    prime: bool,
    family: Option<String>,
    format: Format,
    sidecar: Option<String>,
) -> Result<ExitCode, String> {
    let stringify = |e: planar_cycles::Error| e.to_string();
    let (graph, selector_desc): (Graph, Option<String>) = match &family {
        Some(sel) => {
            if m != 6 {
                return Err("--family requires m = 6".into());
            }
            let selector = parse_selector(sel)?;
            (family_member(n, &selector).map_err(stringify)?, Some(sel.clone()))
        }
        None if prime => (blowup_cycle_with_paths(n, m).map_err(stringify)?.0, None),
        None => (blowup_cycle(n, m).map_err(stringify)?.0, None),
    };
    match format {
        Format::Graph6 => println!("{}", graph6_encode(&graph).map_err(stringify)?),
        Format::EdgeList => print!("{}", write_edge_list(&graph)),
    }
    if let Some(path) = sidecar {
        let layout = family_layout(n, m).map_err(stringify)?;
        let intra: Vec<(usize, usize)> = graph
            .edges()
            .iter()
            .copied()
            .filter(|&(u, v)| {
                layout.classes.iter().any(|cls| cls.contains(&u) && cls.contains(&v))
            })
            .collect();
        let doc = json!({
            "n": n,
            "m": m,
            "prime": prime,
            "family_selector": selector_desc,
            "hubs": layout.hubs,
            "classes": layout.classes,
            "intra_edges": intra,
        });
        std::fs::write(&path, format!("{doc}\n")).map_err(|e| format!("sidecar {path}: {e}"))?;
    }
    Ok(ExitCode::SUCCESS)
}

/// `none` | `all` | `seed:<u64>` | `a=0,2;b=;c=1`
fn parse_selector(text: &str) -> Result<IntraEdges, String> {
    match text {
        "none" => return Ok(IntraEdges::None),
        "all" => return Ok(IntraEdges::All),
        _ => {}
    }
    if let Some(seed) = text.strip_prefix("seed:") {
        let seed: u64 = seed.parse().map_err(|_| format!("bad seed in selector {text:?}"))?;
        return Ok(IntraEdges::Seeded(seed));
    }
    let mut a = None;
    let mut b = None;
    let mut c = None;
    for part in text.split(';') {
        let (name, list) = part
            .split_once('=')
            .ok_or_else(|| format!("bad selector component {part:?}"))?;
        let slots: Vec<usize> = if list.is_empty() {
            Vec::new()
        } else {
            list.split(',')
                .map(|t| t.parse().map_err(|_| format!("bad slot index {t:?}")))
                .collect::<Result<_, _>>()?
        };
        match name {
            "a" => a = Some(slots),
            "b" => b = Some(slots),
            "c" => c = Some(slots),
            _ => return Err(format!("unknown class {name:?} in selector")),
        }
    }
    match (a, b, c) {
        (Some(a), Some(b), Some(c)) => Ok(IntraEdges::Explicit { a, b, c }),
        _ => Err("explicit selector must name all of a, b, c".into()),
    }
}

/// Read the input graphs. Graph6 streams report malformed lines on stderr and
/// skip them; the returned flag records whether any line failed.
fn read_graphs(opts: &InputOpts) -> Result<(Vec<Graph>, bool), String> {
    let mut text = String::new();
    match opts.input.as_deref() {
        None | Some("-") => {
            io::stdin().read_to_string(&mut text).map_err(|e| e.to_string())?;
        }
        Some(path) => {
            let mut f = File::open(path).map_err(|e| format!("{path}: {e}"))?;
            f.read_to_string(&mut text).map_err(|e| format!("{path}: {e}"))?;
        }
    }
    if opts.edge_list {
        return Ok((vec![parse_edge_list(&text).map_err(|e| e.to_string())?], false));
    }
    let mut graphs = Vec::new();
    let mut any_bad = false;
    for (line_no, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        match graph6_decode_verbose(line) {
            Ok((g, warnings)) => {
                for w in warnings {
                    match w {
                        Graph6Warning::NonZeroPadding => {
                            eprintln!("line {}: nonzero padding bits (accepted)", line_no + 1)
                        }
                    }
                }
                graphs.push(g);
            }
            Err(e) => {
                eprintln!("line {}: skipped: {e}", line_no + 1);
                any_bad = true;
            }
        }
    }
    Ok((graphs, any_bad))
}

fn finish(any_bad_input: bool, violations: bool) -> ExitCode {
    if any_bad_input {
        ExitCode::from(2)
    } else if violations {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn emit(doc: &impl Serialize) {
    println!("{}", serde_json::to_string(doc).expect("serializable"));
}

fn count(k: usize, input: &InputOpts) -> Result<ExitCode, String> {
    let (graphs, any_bad) = read_graphs(input)?;
    let out = io::stdout();
    let mut out = out.lock();
    for g in &graphs {
        let report =
            count_induced_cycles_with(g, k, Parallelism::Sequential).map_err(|e| e.to_string())?;
        let per_edge: Vec<(usize, usize, u64)> = report
            .edges
            .iter()
            .zip(&report.per_edge)
            .map(|(&(u, v), &c)| (u, v, c))
            .collect();
        let doc = json!({
            "graph6": graph6_encode(g).map_err(|e| e.to_string())?,
            "k": report.k,
            "total": report.total,
            "per_vertex": report.per_vertex,
            "per_edge": per_edge,
        });
        writeln!(out, "{doc}").map_err(|e| e.to_string())?;
    }
    Ok(finish(any_bad, false))
}

fn analyze(
    input: &InputOpts,
    hub_k: usize,
    hub_tau: Option<usize>,
    probe_threshold: Option<u64>,
    force_probes: bool,
) -> Result<ExitCode, String> {
    let (graphs, any_bad) = read_graphs(input)?;
    for g in &graphs {
        let n = g.n();
        let g6 = graph6_encode(g).map_err(|e| e.to_string())?;
        let report =
            count_induced_cycles_with(g, 6, Parallelism::Sequential).map_err(|e| e.to_string())?;
        let principal: Vec<Vec<usize>> = principal_map(g).iter().map(|s| s.to_vec()).collect();
        let vertex_min = report.min_vertex();
        let cycles = find_hub_spoke_cycles(g);
        let good: Vec<_> = cycles
            .iter()
            .map(|c| {
                let span = span_intersection(g, c).map_err(|e| e.to_string())?;
                Ok(json!({ "hubs": c.hubs, "spokes": c.spokes, "span_intersection": span }))
            })
            .collect::<Result<_, String>>()?;

        // probes are gated on the per-vertex activity thresholds
        let threshold = probe_threshold.unwrap_or((n as u64 * n as u64) / 10);
        let min_count = vertex_min.map(|(_, c)| c).unwrap_or(0);
        let run_probes = force_probes || min_count >= threshold;
        let mut k27 = Vec::new();
        let mut hub_witnesses = None;
        if run_probes {
            let planarity = is_planar(g);
            if let Some(embedding) = planarity.embedding {
                for u in 0..n {
                    for w in u + 1..n {
                        let common =
                            g.common_neighbourhood(u, w).map_err(|e| e.to_string())?.len();
                        if common >= 7 {
                            k27.extend(
                                find_empty_k27(g, &embedding, u, w).map_err(|e| e.to_string())?,
                            );
                        }
                    }
                }
            }
            let tau = hub_tau.unwrap_or_else(|| (n / 10).max(1));
            let hub_gate = force_probes || hub_gate_passes(g, hub_k, n)?;
            if hub_gate {
                hub_witnesses = Some(json!({
                    "k": hub_k,
                    "tau": tau,
                    "witnesses": hub_cycle_probe(g, hub_k, tau).map_err(|e| e.to_string())?,
                }));
            }
        }
        emit(&json!({
            "graph6": g6,
            "n": n,
            "m": g.m(),
            "total_6cycles": report.total,
            "principal": principal,
            "vertex_min": vertex_min.map(|(v, c)| json!({ "vertex": v, "count": c })),
            "good_cycles": good,
            "empty_k27": k27,
            "hub_cycles": hub_witnesses,
            "probes_skipped": !run_probes,
        }));
    }
    Ok(finish(any_bad, false))
}

/// The hub probe gate: every vertex lies on at least n^(k-1)/10 induced
/// 2k-cycles.
fn hub_gate_passes(g: &Graph, hub_k: usize, n: usize) -> Result<bool, String> {
    let two_k = 2 * hub_k;
    if !(3..=12).contains(&two_k) {
        return Ok(false);
    }
    let report =
        count_induced_cycles_with(g, two_k, Parallelism::Sequential).map_err(|e| e.to_string())?;
    let gate = (n as u64).pow(hub_k as u32 - 1) / 10;
    Ok(report.min_vertex().map(|(_, c)| c).unwrap_or(0) >= gate)
}

fn check_family(input: &InputOpts) -> Result<ExitCode, String> {
    let (graphs, any_bad) = read_graphs(input)?;
    for g in &graphs {
        let report = is_in_family(g);
        let mut doc = serde_json::to_value(&report).expect("serializable");
        doc.as_object_mut().expect("object").insert(
            "graph6".into(),
            graph6_encode(g).map_err(|e| e.to_string())?.into(),
        );
        emit(&doc);
    }
    Ok(finish(any_bad, false))
}

fn in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T, String> {
    if jobs == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| e.to_string())?;
    Ok(pool.install(f))
}

fn search(n: usize, input: Option<String>, dedup: bool, jobs: usize) -> Result<ExitCode, String> {
    let report = match input {
        None => in_pool(jobs, || {
            if dedup {
                let stream = planar_cycles::enumerate_planar(n, true)?;
                max_induced_6cycles(stream, n, Parallelism::Rayon)
            } else {
                search_complete(n, Parallelism::Rayon)
            }
        })?
        .map_err(|e| e.to_string())?,
        Some(path) => {
            let opts = InputOpts { input: Some(path), edge_list: false };
            let (graphs, any_bad) = read_graphs(&opts)?;
            if any_bad {
                return Err("malformed graph6 lines in search input".into());
            }
            in_pool(jobs, || max_induced_6cycles(graphs, n, Parallelism::Rayon))?
                .map_err(|e| e.to_string())?
        }
    };
    emit(&report);
    Ok(ExitCode::SUCCESS)
}

fn verify(
    input: Option<String>,
    random: Option<usize>,
    nmax: usize,
    seed: u64,
    jobs: usize,
) -> Result<ExitCode, String> {
    let (graphs, any_bad) = match random {
        Some(count) => (random_corpus(count, nmax, seed)?, false),
        None => {
            let opts = InputOpts { input, edge_list: false };
            read_graphs(&opts)?
        }
    };
    let results: Vec<Result<Vec<planar_cycles::PropertyViolation>, String>> =
        in_pool(jobs, || {
            use rayon::prelude::*;
            graphs
                .par_iter()
                .map(|g| property_suite(g).map_err(|e| e.to_string()))
                .collect()
        })?;
    let mut total_violations = 0usize;
    for (g, result) in graphs.iter().zip(results) {
        let violations = result?;
        total_violations += violations.len();
        emit(&json!({
            "graph6": graph6_encode(g).map_err(|e| e.to_string())?,
            "violations": violations,
        }));
    }
    eprintln!("verified {} graphs, {} violations", graphs.len(), total_violations);
    Ok(finish(any_bad, total_violations > 0))
}

/// Deterministic mixed-density corpus: orders sweep 6..=nmax, densities cycle
/// through five levels between tree-like and maximal planar.
fn random_corpus(count: usize, nmax: usize, seed: u64) -> Result<Vec<Graph>, String> {
    if nmax < 6 {
        return Err("--nmax must be at least 6".into());
    }
    let mut graphs = Vec::with_capacity(count);
    for i in 0..count {
        let n = 6 + i % (nmax - 5);
        let lo = n - 1;
        let hi = 3 * n - 6;
        let m = lo + (hi - lo) * (i % 5) / 4;
        graphs.push(random_planar(n, seed.wrapping_add(i as u64), m).map_err(|e| e.to_string())?);
    }
    Ok(graphs)
}
