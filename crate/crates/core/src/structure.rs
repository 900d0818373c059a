//! Structural detectors: principal neighbours, empty K_{2,7} subgraphs of an
//! embedded graph, hub/spoke hexagons, their span intersection, and the
//! common-neighbourhood hub-cycle probe.

use serde::Serialize;

use crate::cycles::{count_induced_cycles_with, for_each_induced_cycle, path_cycle_sets};
use crate::embedding::{faces, Embedding, FaceSet};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Parallelism;

/// Principal-neighbour sets of every vertex: `u` is principal for `v` when
/// they are adjacent and share an induced 6-cycle. Equivalently, the edge
/// `uv` lies on an induced 6-cycle (adjacent vertices of an induced cycle are
/// consecutive on it), so this reads off the per-edge counts of one report.
pub fn principal_map(g: &Graph) -> Vec<VertexSet> {
    let report = count_induced_cycles_with(g, 6, Parallelism::Sequential).expect("k = 6 is valid");
    let mut map = vec![VertexSet::new(g.n()); g.n()];
    for (i, &(u, v)) in report.edges.iter().enumerate() {
        if report.per_edge[i] > 0 {
            map[u].insert(v);
            map[v].insert(u);
        }
    }
    map
}

/// The principal neighbours of one vertex.
pub fn principal_neighbours(g: &Graph, v: usize) -> Result<VertexSet> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { v, n: g.n() });
    }
    Ok(principal_map(g).swap_remove(v))
}

/// An empty K_{2,7}: seven consecutive common neighbours of `{u, w}` (in the
/// cyclic arc order of the embedding) whose six bounded quadrilateral regions
/// contain no vertices in their interiors.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmptyK27Witness {
    pub u: usize,
    pub w: usize,
    /// the seven fan vertices, consecutive in rotation order around `u`
    pub fan: [usize; 7],
    /// the middle fan vertex; its only principal neighbours are `u` and `w`
    pub central: usize,
}

/// Find every empty K_{2,7} over `{u, w}` in the given embedding.
///
/// The common neighbourhood is ordered cyclically as it appears around `u`;
/// for each consecutive pair the interior of the bounded 4-cycle region is
/// checked by a flood fill over the dual that may not cross the region
/// boundary. Fewer than seven common neighbours yields an empty list.
///
/// Detection is sound for the supplied embedding but makes no claim about
/// other embeddings of the same graph.
pub fn find_empty_k27(g: &Graph, e: &Embedding, u: usize, w: usize) -> Result<Vec<EmptyK27Witness>> {
    let common = g.common_neighbourhood(u, w)?;
    let t = common.len();
    if t < 7 {
        return Ok(Vec::new());
    }
    let fs = faces(g, e)?;
    let fan: Vec<usize> = e.rotation(u).iter().copied().filter(|&x| common.contains(x)).collect();
    debug_assert_eq!(fan.len(), t);
    let mut gap_empty = vec![false; t];
    for i in 0..t {
        gap_empty[i] = region_is_empty(g, &fs, u, w, fan[i], fan[(i + 1) % t], &fan)?;
    }
    let mut out = Vec::new();
    for a in 0..t {
        if (0..6).all(|i| gap_empty[(a + i) % t]) {
            let mut window = [0usize; 7];
            for (i, slot) in window.iter_mut().enumerate() {
                *slot = fan[(a + i) % t];
            }
            out.push(EmptyK27Witness { u, w, fan: window, central: window[3] });
        }
    }
    Ok(out)
}

/// Is the bounded region of the 4-cycle `u-x-w-y` (the side away from the
/// rest of the fan) free of vertices in its interior?
fn region_is_empty(
    g: &Graph,
    fs: &FaceSet,
    u: usize,
    w: usize,
    x: usize,
    y: usize,
    fan: &[usize],
) -> Result<bool> {
    let blocked = |a: usize, b: usize| -> bool {
        let p = (a.min(b), a.max(b));
        [(u, x), (x, w), (w, y), (y, u)]
            .iter()
            .any(|&(s, t)| (s.min(t), s.max(t)) == p)
    };
    // flood fill face components of the dual without crossing the 4-cycle
    let nf = fs.num_faces();
    let mut comp = vec![usize::MAX; nf];
    let mut next_comp = 0;
    for start in 0..nf {
        if comp[start] != usize::MAX {
            continue;
        }
        comp[start] = next_comp;
        let mut stack = vec![start];
        while let Some(f) = stack.pop() {
            for &(a, b) in &fs.walks()[f] {
                if blocked(a, b) {
                    continue;
                }
                let twin = fs.face_of_dart(g, b, a).expect("twin dart exists");
                if comp[twin] == usize::MAX {
                    comp[twin] = next_comp;
                    stack.push(twin);
                }
            }
        }
        next_comp += 1;
    }
    // the component holding the rest of the fan is the outside
    let other = fan.iter().copied().find(|&v| v != x && v != y).expect("fan has >= 7 vertices");
    let outside = comp[face_of_vertex(g, fs, other)?];
    let f1 = fs.face_of_dart(g, u, x).expect("cycle dart");
    let f2 = fs.face_of_dart(g, x, u).expect("cycle dart");
    let inside = if comp[f1] != outside {
        comp[f1]
    } else if comp[f2] != outside {
        comp[f2]
    } else {
        // the 4-cycle failed to separate the dual; treat as non-empty
        return Ok(false);
    };
    let boundary = [u, x, w, y];
    for (f, walk) in fs.walks().iter().enumerate() {
        if comp[f] != inside {
            continue;
        }
        if walk.iter().any(|&(a, _)| !boundary.contains(&a)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Some face incident to `v`.
fn face_of_vertex(g: &Graph, fs: &FaceSet, v: usize) -> Result<usize> {
    let n = g.neighbours(v).next().ok_or_else(|| {
        Error::InconsistentEmbedding(format!("vertex {v} has no incident face"))
    })?;
    fs.face_of_dart(g, v, n)
        .ok_or_else(|| Error::InconsistentEmbedding(format!("missing dart ({v},{n})")))
}

/// Check the structural consequence of an empty K_{2,7}: the central fan
/// vertex has exactly `{u, w}` as principal neighbours.
pub fn central_principal_check(g: &Graph, wit: &EmptyK27Witness) -> Result<bool> {
    let common = g.common_neighbourhood(wit.u, wit.w)?;
    let mut seen = std::collections::HashSet::new();
    for &v in &wit.fan {
        if !common.contains(v) || !seen.insert(v) {
            return Err(Error::InvalidWitness(format!(
                "fan vertex {v} is not a fresh common neighbour of ({}, {})",
                wit.u, wit.w
            )));
        }
    }
    if wit.central != wit.fan[3] {
        return Err(Error::InvalidWitness("central vertex must be the middle fan entry".into()));
    }
    let principal = principal_neighbours(g, wit.central)?;
    Ok(principal == VertexSet::from_vertices(g.n(), [wit.u, wit.w]))
}

/// An induced 6-cycle `hubs[0] spokes[0] hubs[1] spokes[1] hubs[2] spokes[2]`
/// in which each spoke's only principal neighbours are its two flanking hubs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HubSpokeCycle {
    pub hubs: [usize; 3],
    pub spokes: [usize; 3],
}

impl HubSpokeCycle {
    /// The cycle as the vertex sequence u1 v1 u2 v2 u3 v3.
    pub fn cycle_order(&self) -> [usize; 6] {
        [
            self.hubs[0], self.spokes[0], self.hubs[1], self.spokes[1], self.hubs[2],
            self.spokes[2],
        ]
    }
}

/// Enumerate induced 6-cycles and keep those admitting a hub/spoke labelling
/// (both alternation parities are tried; each qualifying cycle is reported
/// once, canonically labelled).
pub fn find_hub_spoke_cycles(g: &Graph) -> Vec<HubSpokeCycle> {
    let principal = principal_map(g);
    let mut out = Vec::new();
    for_each_induced_cycle(g, 6, |cycle| {
        let mut best: Option<HubSpokeCycle> = None;
        for parity in 0..2 {
            if !spokes_ok(&principal, cycle, parity) {
                continue;
            }
            let cand = canonical_labelling(cycle, parity);
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
        if let Some(c) = best {
            out.push(c);
        }
    });
    out.sort();
    out
}

/// Spokes sit at `parity, parity+2, parity+4`; each must have exactly its two
/// cycle neighbours as principal neighbours.
fn spokes_ok(principal: &[VertexSet], cycle: &[usize], parity: usize) -> bool {
    (0..3).all(|i| {
        let pos = (parity + 2 * i) % 6;
        let s = cycle[pos];
        let left = cycle[(pos + 5) % 6];
        let right = cycle[(pos + 1) % 6];
        let p = &principal[s];
        p.len() == 2 && p.contains(left) && p.contains(right)
    })
}

fn canonical_labelling(cycle: &[usize], parity: usize) -> HubSpokeCycle {
    let hub_positions = [(parity + 1) % 6, (parity + 3) % 6, (parity + 5) % 6];
    let &start = hub_positions
        .iter()
        .min_by_key(|&&p| cycle[p])
        .expect("three hub positions");
    // two directions around the cycle from the smallest hub
    let forward: Vec<usize> = (0..6).map(|i| cycle[(start + i) % 6]).collect();
    let backward: Vec<usize> = (0..6).map(|i| cycle[(start + 6 - i) % 6]).collect();
    let seq = if forward[1] <= backward[1] { forward } else { backward };
    HubSpokeCycle {
        hubs: [seq[0], seq[2], seq[4]],
        spokes: [seq[1], seq[3], seq[5]],
    }
}

/// Intersection of the three path-extension sets taken over the spoke paths
/// `u1-v1-u2`, `u2-v2-u3`, `u3-v3-u1`. At most 8 vertices for planar graphs.
pub fn span_intersection(g: &Graph, c: &HubSpokeCycle) -> Result<VertexSet> {
    validate_hub_spoke(g, c)?;
    Ok(span_intersection_unchecked(g, c))
}

pub(crate) fn span_intersection_unchecked(g: &Graph, c: &HubSpokeCycle) -> VertexSet {
    let [u1, u2, u3] = c.hubs;
    let [v1, v2, v3] = c.spokes;
    let sets = |u, v, w| path_cycle_sets(g, u, v, w).expect("validated spoke path").all;
    let mut out = sets(u1, v1, u2);
    out.intersect_with(&sets(u2, v2, u3));
    out.intersect_with(&sets(u3, v3, u1));
    out
}

fn validate_hub_spoke(g: &Graph, c: &HubSpokeCycle) -> Result<()> {
    let order = c.cycle_order();
    let mut sorted = order;
    sorted.sort_unstable();
    if sorted.windows(2).any(|p| p[0] == p[1]) || order.iter().any(|&v| v >= g.n()) {
        return Err(Error::InvalidWitness("cycle vertices must be six distinct vertices".into()));
    }
    for i in 0..6 {
        for j in i + 1..6 {
            let adjacent = g.has_edge(order[i], order[j]);
            let consecutive = j == i + 1 || (i == 0 && j == 5);
            if adjacent != consecutive {
                return Err(Error::InvalidWitness("vertices do not induce a 6-cycle in the given order".into()));
            }
        }
    }
    // spoke condition, checked locally: the cycle itself realizes both hub
    // edges, so only edges to non-hub neighbours may carry induced 6-cycles
    for i in 0..3 {
        let s = c.spokes[i];
        let left = c.hubs[i];
        let right = c.hubs[(i + 1) % 3];
        for x in g.neighbours(s) {
            if x == left || x == right {
                continue;
            }
            if edge_on_induced_6cycle(g, s, x) {
                return Err(Error::InvalidWitness(format!(
                    "spoke {s} has principal neighbour {x} beyond its hubs"
                )));
            }
        }
    }
    Ok(())
}

/// Does some induced 6-cycle traverse the edge `(s, x)`?
fn edge_on_induced_6cycle(g: &Graph, s: usize, x: usize) -> bool {
    g.neighbours(s).any(|y| {
        y != x
            && crate::cycles::induced_cycles_through_path(g, x, s, y, 6)
                .map(|c| c > 0)
                .unwrap_or(false)
    })
}

/// The vertex in the fewest induced 6-cycles (ties to the smallest index).
pub fn vertex_minimum_probe(g: &Graph) -> Result<(usize, u64)> {
    if g.n() == 0 {
        return Err(Error::OrderTooSmall { n: 0, what: "probe needs at least one vertex" });
    }
    let report = count_induced_cycles_with(g, 6, Parallelism::default())?;
    Ok(report.min_vertex().expect("nonempty graph"))
}

/// `k` distinct vertices whose consecutive (cyclic) common neighbourhoods all
/// have size at least the probed threshold.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct HubCycleWitness {
    pub k: usize,
    pub hubs: Vec<usize>,
    pub min_common: usize,
}

/// Search for hub cycles: sequences `x_0, x_1, ..., x_{k-1}` of distinct
/// vertices with `|N(x_i) ∩ N(x_{i+1})| >= tau` cyclically. Candidates are
/// restricted to vertices of degree at least `tau`; each witness is reported
/// once, starting at its smallest vertex (rotation and reflection dropped).
pub fn hub_cycle_probe(g: &Graph, k: usize, tau: usize) -> Result<Vec<HubCycleWitness>> {
    if k < 3 {
        return Err(Error::CycleLengthOutOfRange(k));
    }
    if tau == 0 {
        return Err(Error::ZeroThreshold);
    }
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= tau).collect();
    let nc = candidates.len();
    let mut common = vec![0usize; nc * nc];
    for i in 0..nc {
        for j in i + 1..nc {
            let c = g
                .row(candidates[i])
                .iter()
                .zip(g.row(candidates[j]))
                .map(|(a, b)| (a & b).count_ones() as usize)
                .sum();
            common[i * nc + j] = c;
            common[j * nc + i] = c;
        }
    }
    let linked = |i: usize, j: usize| common[i * nc + j] >= tau;
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::with_capacity(k);
    for start in 0..nc {
        path.push(start);
        let mut in_path = vec![false; nc];
        in_path[start] = true;
        hub_dfs(k, start, nc, &linked, &mut path, &mut in_path, &mut |cyc: &[usize]| {
            let min_common = (0..k)
                .map(|i| common[cyc[i] * nc + cyc[(i + 1) % k]])
                .min()
                .expect("k >= 3");
            out.push(HubCycleWitness {
                k,
                hubs: cyc.iter().map(|&i| candidates[i]).collect(),
                min_common,
            });
        });
        path.pop();
    }
    out.sort();
    Ok(out)
}

fn hub_dfs(
    k: usize,
    start: usize,
    nc: usize,
    linked: &impl Fn(usize, usize) -> bool,
    path: &mut Vec<usize>,
    in_path: &mut Vec<bool>,
    emit: &mut impl FnMut(&[usize]),
) {
    let last = *path.last().unwrap();
    if path.len() == k {
        if linked(last, start) && path[1] < path[k - 1] {
            emit(path);
        }
        return;
    }
    for next in start + 1..nc {
        if !in_path[next] && linked(last, next) {
            path.push(next);
            in_path[next] = true;
            hub_dfs(k, start, nc, linked, path, in_path, emit);
            in_path[next] = false;
            path.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::{blowup_cycle, blowup_cycle_with_paths};
    use crate::planarity::is_planar;

    #[test]
    fn principal_neighbours_on_blowup() {
        let (g, _) = blowup_cycle(9, 6).unwrap();
        // class-A vertex 3: principal are exactly the hubs 0 and 1
        assert_eq!(principal_neighbours(&g, 3).unwrap().to_vec(), vec![0, 1]);
        // hub 0: all of class A (3,4) and class C (7,8)
        assert_eq!(principal_neighbours(&g, 0).unwrap().to_vec(), vec![3, 4, 7, 8]);
        let k4 = Graph::complete(4);
        assert!(principal_neighbours(&k4, 0).unwrap().is_empty());
    }

    #[test]
    fn empty_k27_on_large_blowup() {
        let (g, e) = blowup_cycle(24, 6).unwrap();
        // classes have size 7; class A = {3..=9}
        let wits = find_empty_k27(&g, &e, 0, 1).unwrap();
        assert_eq!(wits.len(), 1);
        let w = &wits[0];
        assert_eq!(w.central, 6);
        let mut fan = w.fan;
        fan.sort_unstable();
        assert_eq!(fan.to_vec(), (3..=9).collect::<Vec<_>>());
        assert!(central_principal_check(&g, w).unwrap());
    }

    #[test]
    fn small_common_neighbourhoods_give_no_witness() {
        let (g, e) = blowup_cycle(9, 6).unwrap();
        assert!(find_empty_k27(&g, &e, 0, 1).unwrap().is_empty());
        assert!(find_empty_k27(&g, &e, 3, 4).unwrap().is_empty());
    }

    #[test]
    fn k27_alone_is_empty_everywhere() {
        let g = Graph::complete_bipartite(2, 7);
        let e = is_planar(&g).embedding.unwrap();
        let wits = find_empty_k27(&g, &e, 0, 1).unwrap();
        // every cyclic window qualifies when nothing else exists
        assert_eq!(wits.len(), 7);
    }

    #[test]
    fn path_variant_still_has_the_witness() {
        let (g, e) = blowup_cycle_with_paths(24, 6).unwrap();
        let wits = find_empty_k27(&g, &e, 0, 1).unwrap();
        assert_eq!(wits.len(), 1);
        assert!(central_principal_check(&g, &wits[0]).unwrap());
    }

    #[test]
    fn hub_spoke_cycles_on_c6() {
        let c6 = Graph::cycle(6);
        let found = find_hub_spoke_cycles(&c6);
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].hubs[0], 0);
        let k4 = Graph::complete(4);
        assert!(find_hub_spoke_cycles(&k4).is_empty());
    }

    #[test]
    fn hub_spoke_cycles_on_blowup() {
        let (g, _) = blowup_cycle(9, 6).unwrap();
        let found = find_hub_spoke_cycles(&g);
        assert_eq!(found.len(), 8);
        for c in &found {
            assert_eq!(c.hubs, [0, 1, 2]);
            let x = span_intersection(&g, c).unwrap();
            assert!(x.is_empty());
        }
    }

    #[test]
    fn span_intersection_rejects_bad_witness() {
        let (g, _) = blowup_cycle(9, 6).unwrap();
        let bad = HubSpokeCycle { hubs: [0, 1, 2], spokes: [3, 5, 7] };
        // that is a real canonical cycle; corrupt it
        assert!(span_intersection(&g, &bad).is_ok());
        let worse = HubSpokeCycle { hubs: [0, 1, 2], spokes: [3, 5, 5] };
        assert!(span_intersection(&g, &worse).is_err());
        let not_induced = HubSpokeCycle { hubs: [0, 1, 2], spokes: [3, 4, 7] };
        assert!(span_intersection(&g, &not_induced).is_err());
    }

    #[test]
    fn vertex_minimum_on_blowups() {
        let (g, _) = blowup_cycle(9, 6).unwrap();
        let (v, c) = vertex_minimum_probe(&g).unwrap();
        assert_eq!(c, 4);
        assert!(v >= 3); // a class vertex, not a hub
        let (g, _) = blowup_cycle(10, 6).unwrap();
        assert_eq!(vertex_minimum_probe(&g).unwrap().1, 4);
        assert_eq!(vertex_minimum_probe(&Graph::complete(4)).unwrap(), (0, 0));
    }

    #[test]
    fn hub_cycle_probe_finds_the_hub_cycle() {
        let (g, _) = blowup_cycle(20, 8).unwrap();
        let wits = hub_cycle_probe(&g, 4, 4).unwrap();
        assert_eq!(wits.len(), 1);
        assert_eq!(wits[0].hubs, vec![0, 1, 2, 3]);
        assert_eq!(wits[0].min_common, 4);

        let (g, _) = blowup_cycle(9, 6).unwrap();
        let wits = hub_cycle_probe(&g, 3, 2).unwrap();
        assert!(wits.iter().any(|w| w.hubs == vec![0, 1, 2]));

        assert!(hub_cycle_probe(&Graph::cycle(8), 4, 2).unwrap().is_empty());
        assert!(hub_cycle_probe(&Graph::cycle(8), 2, 2).is_err());
        assert!(hub_cycle_probe(&Graph::cycle(8), 4, 0).is_err());
    }
}
