//! Exhaustive and randomized verification: complete small-order enumeration
//! with a planarity filter, stream search for the maximum induced 6-cycle
//! count, seeded random planar graphs, and a registered property suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cycles::{
    count_induced_cycles_with, count_simple_paths, edge_set_is_forest, forest_bounds,
    induced_cycles_through_path, path_cycle_sets, CycleCountReport,
};
use crate::embedding::euler_check;
use crate::error::{Error, Result};
use crate::extremal::{family_count, is_in_family};
use crate::graph::Graph;
use crate::graph6::{graph6_decode, graph6_encode};
use crate::planarity::is_planar;
use crate::structure::{find_hub_spoke_cycles, span_intersection_unchecked};
use crate::Parallelism;

/// Internal enumeration stops here: beyond 7 vertices, feed external streams.
pub const ENUMERATION_CAP: usize = 7;

fn pair_count(n: usize) -> usize {
    n * (n - 1) / 2
}

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edge_list(n, &edges).expect("mask edges are valid")
}

#[cfg(test)]
fn mask_of_graph(g: &Graph) -> u64 {
    let mut mask = 0u64;
    let mut bit = 0;
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                mask |= 1 << bit;
            }
            bit += 1;
        }
    }
    mask
}

/// The lexicographically smallest adjacency mask over all vertex
/// relabellings. Exponential in n; meant for n <= 7.
fn canonical_mask(g: &Graph) -> u64 {
    let n = g.n();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permute(&mut perm, 0, &mut |p| {
        let mut mask = 0u64;
        let mut bit = 0;
        for u in 0..n {
            for v in u + 1..n {
                if g.has_edge(p[u], p[v]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        if mask < best {
            best = mask;
        }
    });
    best
}

fn permute(items: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
    if k == items.len() {
        f(items);
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permute(items, k + 1, f);
        items.swap(k, i);
    }
}

/// Lazily yield every labeled simple graph on `n <= 7` vertices that passes
/// the planarity test; with `dedup`, only the first representative of each
/// isomorphism class (by minimum adjacency mask) is yielded.
pub fn enumerate_planar(n: usize, dedup: bool) -> Result<PlanarEnumeration> {
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationTooLarge { n, cap: ENUMERATION_CAP });
    }
    Ok(PlanarEnumeration {
        n,
        next: 0,
        limit: 1u64 << pair_count(n),
        seen: dedup.then(std::collections::HashSet::new),
    })
}

pub struct PlanarEnumeration {
    n: usize,
    next: u64,
    limit: u64,
    seen: Option<std::collections::HashSet<u64>>,
}

impl Iterator for PlanarEnumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.limit {
            let g = graph_from_mask(self.n, self.next);
            self.next += 1;
            if !is_planar(&g).planar {
                continue;
            }
            if let Some(seen) = &mut self.seen {
                if !seen.insert(canonical_mask(&g)) {
                    continue;
                }
            }
            return Some(g);
        }
        None
    }
}

/// Outcome of a maximum-search over a stream of order-n graphs.
///
/// `argmax` holds the graphs attaining the maximum as graph6 strings, sorted;
/// for n <= 7 they are deduplicated up to isomorphism (canonical labelling),
/// for larger orders they are reported as encoded. `formula_value` is the
/// family count (defined for n >= 6); `equality` records whether the
/// empirical maximum matches it — at small orders this is a report, not a
/// theorem.
#[derive(Debug, Clone, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub empirical_max: u64,
    pub formula_value: Option<u64>,
    pub equality: Option<bool>,
    pub argmax: Vec<String>,
    pub argmax_in_family: Vec<bool>,
}

#[derive(Clone, Default)]
struct MaxAccumulator {
    max: u64,
    argmax: Vec<String>,
    any: bool,
}

impl MaxAccumulator {
    fn add(&mut self, count: u64, g6: String) {
        self.any = true;
        match count.cmp(&self.max) {
            std::cmp::Ordering::Greater => {
                self.max = count;
                self.argmax = vec![g6];
            }
            std::cmp::Ordering::Equal => self.argmax.push(g6),
            std::cmp::Ordering::Less => {}
        }
    }

    fn merge(mut self, other: MaxAccumulator) -> MaxAccumulator {
        if !other.any {
            return self;
        }
        if !self.any {
            return other;
        }
        match other.max.cmp(&self.max) {
            std::cmp::Ordering::Greater => other,
            std::cmp::Ordering::Equal => {
                self.argmax.extend(other.argmax);
                self
            }
            std::cmp::Ordering::Less => self,
        }
    }
}

fn finish_report(n: usize, acc: MaxAccumulator) -> Result<SearchReport> {
    let mut argmax = acc.argmax;
    if n <= ENUMERATION_CAP {
        // collapse isomorphic argmax graphs to one canonical representative
        let mut canon: Vec<u64> = argmax
            .iter()
            .map(|s| canonical_mask(&graph6_decode(s).expect("argmax strings round-trip")))
            .collect();
        canon.sort_unstable();
        canon.dedup();
        argmax = canon
            .into_iter()
            .map(|mask| graph6_encode(&graph_from_mask(n, mask)).expect("within size limits"))
            .collect();
    } else {
        argmax.sort_unstable();
        argmax.dedup();
    }
    let argmax_in_family = argmax
        .iter()
        .map(|s| is_in_family(&graph6_decode(s).expect("argmax strings round-trip")).member)
        .collect();
    let formula_value = family_count(n).ok();
    Ok(SearchReport {
        n,
        empirical_max: acc.max,
        formula_value,
        equality: formula_value.map(|f| f == acc.max),
        argmax,
        argmax_in_family,
    })
}

fn count6(g: &Graph) -> u64 {
    count_induced_cycles_with(g, 6, Parallelism::Sequential)
        .expect("k = 6 is valid")
        .total
}

/// Maximum induced 6-cycle count over a stream of graphs, all of order `n`.
pub fn max_induced_6cycles<I>(stream: I, n: usize, par: Parallelism) -> Result<SearchReport>
where
    I: IntoIterator<Item = Graph>,
    I::IntoIter: Send,
{
    let process = |g: &Graph| -> Result<(u64, String)> {
        if g.n() != n {
            return Err(Error::MixedOrders { got: g.n(), expected: n });
        }
        Ok((count6(g), graph6_encode(g)?))
    };
    #[cfg(feature = "parallel")]
    if par == Parallelism::Rayon {
        use rayon::iter::{ParallelBridge, ParallelIterator};
        let acc = stream
            .into_iter()
            .par_bridge()
            .map(|g| process(&g))
            .try_fold(MaxAccumulator::default, |mut acc, item| {
                let (count, g6) = item?;
                acc.add(count, g6);
                Ok::<_, Error>(acc)
            })
            .try_reduce(MaxAccumulator::default, |a, b| Ok(a.merge(b)))?;
        return finish_report(n, acc);
    }
    let _ = par;
    let mut acc = MaxAccumulator::default();
    for g in stream {
        let (count, g6) = process(&g)?;
        acc.add(count, g6);
    }
    finish_report(n, acc)
}

/// Complete labeled enumeration at order `n <= 7` (planarity-filtered) fed to
/// the maximum search; parallel over the adjacency-mask range.
pub fn search_complete(n: usize, par: Parallelism) -> Result<SearchReport> {
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationTooLarge { n, cap: ENUMERATION_CAP });
    }
    let limit = 1u64 << pair_count(n);
    #[cfg(feature = "parallel")]
    if par == Parallelism::Rayon {
        use rayon::prelude::*;
        let acc = (0..limit)
            .into_par_iter()
            .fold(MaxAccumulator::default, |mut acc, mask| {
                let g = graph_from_mask(n, mask);
                if is_planar(&g).planar {
                    acc.add(count6(&g), graph6_encode(&g).expect("small graph encodes"));
                }
                acc
            })
            .reduce(MaxAccumulator::default, |a, b| a.merge(b));
        return finish_report(n, acc);
    }
    let _ = par;
    let mut acc = MaxAccumulator::default();
    for mask in 0..limit {
        let g = graph_from_mask(n, mask);
        if is_planar(&g).planar {
            acc.add(count6(&g), graph6_encode(&g)?);
        }
    }
    finish_report(n, acc)
}

/// A seeded random planar graph: random vertex-insertion triangulation (a
/// maximal planar graph), then uniform random edge deletion down to
/// `target_m`. Deterministic per `(n, seed, target_m)`.
pub fn random_planar(n: usize, seed: u64, target_m: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::OrderTooSmall { n, what: "triangulation needs n >= 3" });
    }
    let max = 3 * n - 6;
    if target_m > max {
        return Err(Error::InfeasibleEdgeCount { target: target_m, n, max });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 2]];
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for v in 3..n {
        let idx = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[idx];
        edges.extend([(a, v), (b, v), (c, v)]);
        faces[idx] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([a, c, v]);
    }
    debug_assert_eq!(edges.len(), max);
    edges.sort_unstable();
    let delete = max - target_m;
    for i in 0..delete {
        let j = rng.gen_range(i..edges.len());
        edges.swap(i, j);
    }
    Graph::from_edge_list(n, &edges[delete..])
}

/// A reproducible property violation: rerunning the named property on the
/// named graph yields it again.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyViolation {
    pub property: String,
    pub graph6: String,
    pub details: String,
}

fn violation(property: &str, g6: &str, details: String) -> PropertyViolation {
    PropertyViolation { property: property.into(), graph6: g6.into(), details }
}

/// Upper bound on the number of simple u-w paths with `len` edges in a planar
/// graph on n >= 3 vertices.
pub fn planar_path_bound(n: usize, len: usize) -> u64 {
    let n = n as u64;
    let base = 6 * n - 12;
    if len.is_multiple_of(2) {
        n * base.pow(len as u32 / 2 - 1)
    } else {
        base.pow((len as u32 - 1) / 2)
    }
}

/// Run every registered structural property against one planar graph; an
/// empty list means all pass. Non-planar input is an error.
///
/// Properties: Euler's formula of the computed embedding; the planar edge
/// bound; count consistency across granularities; acyclicity of both
/// path-extension bipartite graphs plus their count bounds, for every path
/// admitting an induced 6-cycle; the span-intersection cap for hub/spoke
/// cycles; and the planar simple-path bounds for lengths 2..=6.
pub fn property_suite(g: &Graph) -> Result<Vec<PropertyViolation>> {
    let pr = is_planar(g);
    if !pr.planar {
        return Err(Error::NonPlanarInput);
    }
    let embedding = pr.embedding.expect("planar result carries an embedding");
    let g6 = graph6_encode(g)?;
    let mut out = Vec::new();

    if let Err(e) = euler_check(g, &embedding) {
        out.push(violation("euler", &g6, e.to_string()));
    }
    if g.n() >= 3 && g.m() > 3 * g.n() - 6 {
        out.push(violation("edge-bound", &g6, format!("m={} exceeds 3n-6", g.m())));
    }

    let report = count_induced_cycles_with(g, 6, Parallelism::Sequential)?;
    out.extend(count_consistency_violations(g, &report, &g6));
    out.extend(path_extension_violations(g, &report, &g6)?);

    for c in find_hub_spoke_cycles(g) {
        let x = span_intersection_unchecked(g, &c);
        if x.len() > 8 {
            out.push(violation(
                "span-intersection-cap",
                &g6,
                format!("cycle {:?} has |X∩Y∩Z| = {} > 8: {:?}", c.cycle_order(), x.len(), x),
            ));
        }
    }

    if g.n() >= 3 {
        for u in 0..g.n() {
            for w in u + 1..g.n() {
                for len in 2..=6 {
                    let count = count_simple_paths(g, u, w, len)?;
                    let bound = planar_path_bound(g.n(), len);
                    if count > bound {
                        out.push(violation(
                            "path-bound",
                            &g6,
                            format!("{count} paths of length {len} from {u} to {w} exceed {bound}"),
                        ));
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Cross-granularity identities of one count report: vertex and edge tallies
/// each sum to k times the total, and for every vertex the per-centered-path
/// counts sum back to its per-vertex count.
fn count_consistency_violations(
    g: &Graph,
    report: &CycleCountReport,
    g6: &str,
) -> Vec<PropertyViolation> {
    let mut out = Vec::new();
    let k = report.k as u64;
    let pv: u64 = report.per_vertex.iter().sum();
    if pv != k * report.total {
        out.push(violation(
            "count-consistency",
            g6,
            format!("per-vertex sum {pv} != {k} * total {}", report.total),
        ));
    }
    let pe: u64 = report.per_edge.iter().sum();
    if pe != k * report.total {
        out.push(violation(
            "count-consistency",
            g6,
            format!("per-edge sum {pe} != {k} * total {}", report.total),
        ));
    }
    for v in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbours(v).collect();
        let mut through = 0;
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                through += induced_cycles_through_path(g, u, v, w, report.k)
                    .expect("valid centered path");
            }
        }
        if through != report.per_vertex[v] {
            out.push(violation(
                "count-consistency",
                g6,
                format!(
                    "paths centered at {v} carry {through} cycles, per-vertex says {}",
                    report.per_vertex[v]
                ),
            ));
        }
    }
    out
}

/// For every path u-v-w on an induced 6-cycle: the strata partition claims,
/// acyclicity of both bipartite graphs, and the count bounds.
fn path_extension_violations(
    g: &Graph,
    report: &CycleCountReport,
    g6: &str,
) -> Result<Vec<PropertyViolation>> {
    let mut out = Vec::new();
    for v in 0..g.n() {
        if report.per_vertex[v] == 0 {
            continue;
        }
        let nbrs: Vec<usize> = g.neighbours(v).collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                let count = induced_cycles_through_path(g, u, v, w, 6)?;
                if count == 0 {
                    continue;
                }
                let sets = path_cycle_sets(g, u, v, w)?;
                let at = |what: &str| format!("path {u}-{v}-{w}: {what}");
                if !edge_set_is_forest(&sets.edges_u_mid) {
                    out.push(violation("extension-forest", g6, at("near/middle graph has a cycle")));
                }
                if !edge_set_is_forest(&sets.edges_mid_w) {
                    out.push(violation("extension-forest", g6, at("middle/far graph has a cycle")));
                }
                let union = sets.near_u.union(&sets.middle).union(&sets.near_w);
                if union != sets.all
                    || !sets.near_u.intersection(&sets.middle).is_empty()
                    || !sets.middle.intersection(&sets.near_w).is_empty()
                    || !sets.near_u.intersection(&sets.near_w).is_empty()
                    || sets.all.contains(u)
                    || sets.all.contains(v)
                    || sets.all.contains(w)
                {
                    out.push(violation("extension-strata", g6, at("strata do not partition")));
                }
                let (ba, bb) = forest_bounds(&sets)?;
                if count > ba.min(bb) {
                    out.push(violation(
                        "extension-bound",
                        g6,
                        at(&format!("{count} cycles exceed min({ba}, {bb})")),
                    ));
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::blowup_cycle;

    #[test]
    fn enumeration_counts_small_orders() {
        // planar isomorphism classes by order: 1, 2, 4, 11, 33, 142 (OEIS A005470)
        assert_eq!(enumerate_planar(1, true).unwrap().count(), 1);
        assert_eq!(enumerate_planar(2, true).unwrap().count(), 2);
        assert_eq!(enumerate_planar(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_planar(4, true).unwrap().count(), 11);
        assert_eq!(enumerate_planar(5, true).unwrap().count(), 33);
        // all labeled graphs at n=4 are planar except none (K4 is planar)
        assert_eq!(enumerate_planar(4, false).unwrap().count(), 64);
        assert!(enumerate_planar(8, false).is_err());
    }

    #[test]
    fn k5_is_filtered_out() {
        let all: Vec<Graph> = enumerate_planar(5, false).unwrap().collect();
        let full_mask = (1u64 << 10) - 1;
        assert!(all.iter().all(|g| mask_of_graph(g) != full_mask));
        assert_eq!(all.len(), (1 << 10) - 1);
    }

    #[test]
    fn search_on_a_single_graph() {
        let (g, _) = blowup_cycle(12, 6).unwrap();
        let r = max_induced_6cycles([g], 12, Parallelism::Sequential).unwrap();
        assert_eq!(r.empirical_max, 27);
        assert_eq!(r.formula_value, Some(27));
        assert_eq!(r.equality, Some(true));
        assert_eq!(r.argmax_in_family, vec![true]);
    }

    #[test]
    fn search_rejects_mixed_orders() {
        let graphs = vec![Graph::cycle(6), Graph::cycle(5)];
        assert!(matches!(
            max_induced_6cycles(graphs, 6, Parallelism::Sequential),
            Err(Error::MixedOrders { got: 5, expected: 6 })
        ));
    }

    #[test]
    fn complete_search_at_n6() {
        let r = search_complete(6, Parallelism::default()).unwrap();
        assert_eq!(r.empirical_max, 1);
        assert_eq!(r.formula_value, Some(1));
        assert_eq!(r.equality, Some(true));
        // only C6 itself attains one induced hexagon on six vertices
        assert_eq!(r.argmax.len(), 1);
        assert_eq!(r.argmax_in_family, vec![true]);
        assert_eq!(graph6_decode(&r.argmax[0]).unwrap().m(), 6);
    }

    #[test]
    fn parallel_and_sequential_searches_agree() {
        let a = search_complete(5, Parallelism::Sequential).unwrap();
        let b = search_complete(5, Parallelism::Rayon).unwrap();
        assert_eq!(a.empirical_max, b.empirical_max);
        assert_eq!(a.argmax, b.argmax);
    }

    #[test]
    fn random_planar_shapes() {
        let g = random_planar(20, 7, 3 * 20 - 6).unwrap();
        assert_eq!(g.m(), 54);
        assert!(is_planar(&g).planar);
        let sparse = random_planar(20, 7, 19).unwrap();
        assert_eq!(sparse.m(), 19);
        assert!(is_planar(&sparse).planar);
        assert!(random_planar(20, 7, 55).is_err());
        assert!(random_planar(2, 7, 0).is_err());
    }

    #[test]
    fn random_planar_is_deterministic() {
        let a = random_planar(25, 99, 40).unwrap();
        let b = random_planar(25, 99, 40).unwrap();
        assert_eq!(graph6_encode(&a).unwrap(), graph6_encode(&b).unwrap());
        let c = random_planar(25, 100, 40).unwrap();
        assert_ne!(graph6_encode(&a).unwrap(), graph6_encode(&c).unwrap());
    }

    #[test]
    fn property_suite_passes_on_constructions() {
        for n in [9, 12, 15] {
            let (g, _) = blowup_cycle(n, 6).unwrap();
            assert!(property_suite(&g).unwrap().is_empty(), "violations at n={n}");
        }
        let g = random_planar(18, 5, 30).unwrap();
        assert!(property_suite(&g).unwrap().is_empty());
    }

    #[test]
    fn property_suite_rejects_nonplanar() {
        assert!(matches!(property_suite(&Graph::complete(5)), Err(Error::NonPlanarInput)));
    }

    #[test]
    fn corrupted_report_is_flagged() {
        let g = Graph::cycle(6);
        let mut report = count_induced_cycles_with(&g, 6, Parallelism::Sequential).unwrap();
        report.total = 5; // deliberate corruption: the harness must notice
        let v = count_consistency_violations(&g, &report, "EhEG");
        assert!(!v.is_empty());
        assert!(v.iter().all(|x| x.property == "count-consistency"));
    }

    #[test]
    fn path_bound_values() {
        assert_eq!(planar_path_bound(10, 2), 10);
        assert_eq!(planar_path_bound(10, 3), 48);
        assert_eq!(planar_path_bound(10, 4), 480);
        assert_eq!(planar_path_bound(10, 5), 48 * 48);
    }
}
