//! Exact induced k-cycle counting and enumeration, the path-extension
//! decomposition with its acyclicity bounds, and simple-path counting.
//!
//! Cycles are generated once each by a canonical DFS: every cycle is rooted at
//! its minimum vertex and the direction is fixed by requiring the second
//! vertex to be smaller than the last. Inducedness is checked incrementally
//! with neighbour bitsets: a vertex may extend the path only if its
//! neighbourhood meets the path in exactly the allowed vertices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::Parallelism;

pub const MAX_CYCLE_LEN: usize = 12;
pub const MAX_PATH_LEN: usize = 8;

/// Induced k-cycle counts at graph, vertex, and edge granularity.
///
/// `per_edge[i]` counts cycles traversing `edges[i]`; `edges` mirrors the
/// graph's sorted edge list so the report is self-contained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCountReport {
    pub k: usize,
    pub total: u64,
    pub per_vertex: Vec<u64>,
    pub edges: Vec<(usize, usize)>,
    pub per_edge: Vec<u64>,
}

impl CycleCountReport {
    fn empty(g: &Graph, k: usize) -> Self {
        CycleCountReport {
            k,
            total: 0,
            per_vertex: vec![0; g.n()],
            edges: g.edges().to_vec(),
            per_edge: vec![0; g.m()],
        }
    }

    fn absorb(&mut self, other: &CycleCountReport) {
        self.total += other.total;
        for (a, b) in self.per_vertex.iter_mut().zip(&other.per_vertex) {
            *a += b;
        }
        for (a, b) in self.per_edge.iter_mut().zip(&other.per_edge) {
            *a += b;
        }
    }

    pub fn per_edge_of(&self, u: usize, v: usize) -> Option<u64> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|i| self.per_edge[i])
    }

    /// Smallest per-vertex count with its vertex (ties to the lowest index).
    pub fn min_vertex(&self) -> Option<(usize, u64)> {
        self.per_vertex
            .iter()
            .copied()
            .enumerate()
            .min_by_key(|&(v, c)| (c, v))
    }
}

fn check_k(k: usize) -> Result<()> {
    if !(3..=MAX_CYCLE_LEN).contains(&k) {
        return Err(Error::CycleLengthOutOfRange(k));
    }
    Ok(())
}

struct Scratch {
    path: Vec<usize>,
    mask: Vec<u64>,
    expect: Vec<u64>,
}

impl Scratch {
    fn new(words: usize) -> Self {
        Scratch { path: Vec::with_capacity(MAX_CYCLE_LEN), mask: vec![0; words], expect: vec![0; words] }
    }

    fn set(words: &mut [u64], v: usize) {
        words[v / 64] |= 1 << (v % 64);
    }

    fn clear(words: &mut [u64], v: usize) {
        words[v / 64] &= !(1 << (v % 64));
    }

    fn test(words: &[u64], v: usize) -> bool {
        words[v / 64] >> (v % 64) & 1 == 1
    }
}

/// row & mask == expect, word-wise.
fn masked_eq(row: &[u64], mask: &[u64], expect: &[u64]) -> bool {
    row.iter().zip(mask).zip(expect).all(|((r, m), e)| r & m == *e)
}

/// Canonical enumeration of all induced k-cycles whose minimum vertex is
/// `start`. The callback sees each cycle once, as `[start, p1, ..., p_{k-1}]`
/// in cycle order with `p1 < p_{k-1}`.
fn for_each_cycle_from(g: &Graph, k: usize, start: usize, s: &mut Scratch, f: &mut impl FnMut(&[usize])) {
    s.path.clear();
    s.mask.iter_mut().for_each(|w| *w = 0);
    s.path.push(start);
    Scratch::set(&mut s.mask, start);
    extend_cycle(g, k, start, s, f);
    Scratch::clear(&mut s.mask, start);
}

fn extend_cycle(g: &Graph, k: usize, start: usize, s: &mut Scratch, f: &mut impl FnMut(&[usize])) {
    let depth = s.path.len();
    let last = s.path[depth - 1];
    if depth == k - 1 {
        // closing vertex: adjacent to exactly `last` and `start` on the path
        s.expect.iter_mut().for_each(|w| *w = 0);
        Scratch::set(&mut s.expect, last);
        Scratch::set(&mut s.expect, start);
        let floor = s.path[1]; // direction canon: second vertex < closing vertex
        for x in g.neighbours(last) {
            if x > floor && x > start && !Scratch::test(&s.mask, x) && masked_eq(g.row(x), &s.mask, &s.expect) {
                s.path.push(x);
                f(&s.path);
                s.path.pop();
            }
        }
        return;
    }
    s.expect.iter_mut().for_each(|w| *w = 0);
    Scratch::set(&mut s.expect, last);
    // collect candidates before descending: the scratch is reused below
    let cands: Vec<usize> = g
        .neighbours(last)
        .filter(|&x| x > start && !Scratch::test(&s.mask, x) && masked_eq(g.row(x), &s.mask, &s.expect))
        .collect();
    for x in cands {
        s.path.push(x);
        Scratch::set(&mut s.mask, x);
        extend_cycle(g, k, start, s, f);
        Scratch::clear(&mut s.mask, x);
        s.path.pop();
    }
}

fn count_from_start(g: &Graph, k: usize, start: usize) -> CycleCountReport {
    let mut report = CycleCountReport::empty(g, k);
    let mut scratch = Scratch::new(g.row_words());
    for_each_cycle_from(g, k, start, &mut scratch, &mut |cycle| {
        report.total += 1;
        for i in 0..k {
            report.per_vertex[cycle[i]] += 1;
            let e = g
                .edge_index(cycle[i], cycle[(i + 1) % k])
                .expect("cycle edges are graph edges");
            report.per_edge[e] += 1;
        }
    });
    report
}

/// Count every induced k-cycle of `g`, with per-vertex and per-edge tallies.
pub fn count_induced_cycles(g: &Graph, k: usize) -> Result<CycleCountReport> {
    count_induced_cycles_with(g, k, Parallelism::default())
}

/// As [`count_induced_cycles`], with explicit execution mode. Results are
/// identical and schedule-independent in both modes.
pub fn count_induced_cycles_with(g: &Graph, k: usize, par: Parallelism) -> Result<CycleCountReport> {
    check_k(k)?;
    #[cfg(feature = "parallel")]
    if par == Parallelism::Rayon {
        use rayon::prelude::*;
        return Ok((0..g.n())
            .into_par_iter()
            .map(|s| count_from_start(g, k, s))
            .reduce(
                || CycleCountReport::empty(g, k),
                |mut a, b| {
                    a.absorb(&b);
                    a
                },
            ));
    }
    let _ = par;
    let mut report = CycleCountReport::empty(g, k);
    for s in 0..g.n() {
        report.absorb(&count_from_start(g, k, s));
    }
    Ok(report)
}

/// Enumerate all induced k-cycles (canonical orientation), sequentially.
pub(crate) fn for_each_induced_cycle(g: &Graph, k: usize, mut f: impl FnMut(&[usize])) {
    let mut scratch = Scratch::new(g.row_words());
    for s in 0..g.n() {
        for_each_cycle_from(g, k, s, &mut scratch, &mut f);
    }
}

fn check_path_args(g: &Graph, u: usize, v: usize, w: usize) -> Result<()> {
    for x in [u, v, w] {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange { v: x, n: g.n() });
        }
    }
    if u == w || u == v || v == w {
        return Err(Error::VerticesNotDistinct);
    }
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    if !g.has_edge(v, w) {
        return Err(Error::NotAnEdge { u: v, v: w });
    }
    Ok(())
}

/// Enumerate induced k-cycles containing the path `u-v-w` consecutively; each
/// cycle is seen once as `[u, v, w, ...]` continuing around to the neighbour
/// of `u`.
pub(crate) fn for_each_cycle_through_path(
    g: &Graph,
    u: usize,
    v: usize,
    w: usize,
    k: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if g.has_edge(u, w) {
        // a chord between the path endpoints rules out induced cycles, and
        // for k = 3 the triangle itself is the single induced cycle
        if k == 3 {
            f(&[u, v, w]);
        }
        return;
    }
    if k == 3 {
        return;
    }
    let mut s = Scratch::new(g.row_words());
    s.path.extend([u, v, w]);
    for x in [u, v, w] {
        Scratch::set(&mut s.mask, x);
    }
    extend_through_path(g, u, k, &mut s, f);
}

fn extend_through_path(g: &Graph, close_at: usize, k: usize, s: &mut Scratch, f: &mut impl FnMut(&[usize])) {
    let depth = s.path.len();
    let last = s.path[depth - 1];
    if depth == k - 1 {
        s.expect.iter_mut().for_each(|w| *w = 0);
        Scratch::set(&mut s.expect, last);
        Scratch::set(&mut s.expect, close_at);
        for x in g.neighbours(last) {
            if !Scratch::test(&s.mask, x) && masked_eq(g.row(x), &s.mask, &s.expect) {
                s.path.push(x);
                f(&s.path);
                s.path.pop();
            }
        }
        return;
    }
    s.expect.iter_mut().for_each(|w| *w = 0);
    Scratch::set(&mut s.expect, last);
    let cands: Vec<usize> = g
        .neighbours(last)
        .filter(|&x| !Scratch::test(&s.mask, x) && masked_eq(g.row(x), &s.mask, &s.expect))
        .collect();
    for x in cands {
        s.path.push(x);
        Scratch::set(&mut s.mask, x);
        extend_through_path(g, close_at, k, s, f);
        Scratch::clear(&mut s.mask, x);
        s.path.pop();
    }
}

/// Count induced k-cycles whose vertex set induces the path `u-v-w`
/// consecutively. Zero whenever `uw` is an edge and k > 3.
pub fn induced_cycles_through_path(g: &Graph, u: usize, v: usize, w: usize, k: usize) -> Result<u64> {
    check_path_args(g, u, v, w)?;
    check_k(k)?;
    let mut count = 0;
    for_each_cycle_through_path(g, u, v, w, k, &mut |_| count += 1);
    Ok(count)
}

/// As [`induced_cycles_through_path`], returning the cycles themselves.
pub fn induced_cycles_through_path_list(
    g: &Graph,
    u: usize,
    v: usize,
    w: usize,
    k: usize,
) -> Result<Vec<Vec<usize>>> {
    check_path_args(g, u, v, w)?;
    check_k(k)?;
    let mut out = Vec::new();
    for_each_cycle_through_path(g, u, v, w, k, &mut |c| out.push(c.to_vec()));
    Ok(out)
}

/// The vertices participating in induced 6-cycles through the path `u-v-w`,
/// stratified by adjacency to the path endpoints, together with the two
/// bipartite edge sets between neighbouring strata.
///
/// Every such cycle reads `u v w x3 x2 x1` with `x1` in `near_u`, `x2` in
/// `middle`, and `x3` in `near_w`. For planar graphs both bipartite graphs are
/// forests (see [`forest_bounds`]).
#[derive(Debug, Clone, Serialize)]
pub struct PathCycleSets {
    pub u: usize,
    pub v: usize,
    pub w: usize,
    /// all vertices outside the path on some induced 6-cycle through it
    pub all: VertexSet,
    /// `all ∩ N(u)`
    pub near_u: VertexSet,
    /// vertices of `all` adjacent to neither endpoint
    pub middle: VertexSet,
    /// `all ∩ N(w)`
    pub near_w: VertexSet,
    /// edges of `g` between `near_u` and `middle`
    pub edges_u_mid: Vec<(usize, usize)>,
    /// edges of `g` between `middle` and `near_w`
    pub edges_mid_w: Vec<(usize, usize)>,
}

pub fn path_cycle_sets(g: &Graph, u: usize, v: usize, w: usize) -> Result<PathCycleSets> {
    check_path_args(g, u, v, w)?;
    let n = g.n();
    let mut all = VertexSet::new(n);
    for_each_cycle_through_path(g, u, v, w, 6, &mut |cycle| {
        for &x in &cycle[3..] {
            all.insert(x);
        }
    });
    let mut near_u = all.intersection(&g.neighbour_set(u));
    let near_w = all.intersection(&g.neighbour_set(w));
    // in an induced 6-cycle through u-v-w no extension vertex sees both
    // endpoints, so the two strata cannot overlap
    debug_assert!(near_u.intersection(&near_w).is_empty());
    near_u.difference_with(&near_w);
    let mut middle = all.clone();
    middle.difference_with(&near_u);
    middle.difference_with(&near_w);
    let mut edges_u_mid = Vec::new();
    let mut edges_mid_w = Vec::new();
    for x2 in middle.iter() {
        for x1 in near_u.iter() {
            if g.has_edge(x1, x2) {
                edges_u_mid.push((x1, x2));
            }
        }
        for x3 in near_w.iter() {
            if g.has_edge(x2, x3) {
                edges_mid_w.push((x2, x3));
            }
        }
    }
    Ok(PathCycleSets { u, v, w, all, near_u, middle, near_w, edges_u_mid, edges_mid_w })
}

/// The two acyclicity bounds on the number of induced 6-cycles through the
/// path: `|near_w|·(|near_u|+|middle|-1)` and `|near_u|·(|middle|+|near_w|-1)`.
/// Undefined (error) when a stratum is empty.
pub fn forest_bounds(sets: &PathCycleSets) -> Result<(u64, u64)> {
    let (a, b, c) = (sets.near_u.len() as u64, sets.middle.len() as u64, sets.near_w.len() as u64);
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::EmptyStratum);
    }
    Ok((c * (a + b - 1), a * (b + c - 1)))
}

/// True iff the edge list (on arbitrary vertex labels) contains no cycle.
pub fn edge_set_is_forest(edges: &[(usize, usize)]) -> bool {
    use std::collections::HashMap;
    let mut id: HashMap<usize, usize> = HashMap::new();
    let mut parent: Vec<usize> = Vec::new();
    let root = |parent: &mut Vec<usize>, mut x: usize| {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    };
    for &(u, v) in edges {
        let next = parent.len();
        let iu = *id.entry(u).or_insert(next);
        if iu == parent.len() {
            parent.push(iu);
        }
        let next = parent.len();
        let iv = *id.entry(v).or_insert(next);
        if iv == parent.len() {
            parent.push(iv);
        }
        let (ru, rv) = (root(&mut parent, iu), root(&mut parent, iv));
        if ru == rv {
            return false;
        }
        parent[ru] = rv;
    }
    true
}

/// Count simple paths from `u` to `w` with exactly `len` edges.
pub fn count_simple_paths(g: &Graph, u: usize, w: usize, len: usize) -> Result<u64> {
    for x in [u, w] {
        if x >= g.n() {
            return Err(Error::VertexOutOfRange { v: x, n: g.n() });
        }
    }
    if u == w {
        return Err(Error::VerticesNotDistinct);
    }
    if !(1..=MAX_PATH_LEN).contains(&len) {
        return Err(Error::PathLengthOutOfRange(len));
    }
    let words = g.row_words();
    let mut mask = vec![0u64; words];
    Scratch::set(&mut mask, u);
    let mut count = 0;
    count_paths_rec(g, u, w, len, &mut mask, &mut count);
    Ok(count)
}

fn count_paths_rec(g: &Graph, cur: usize, target: usize, remaining: usize, mask: &mut Vec<u64>, count: &mut u64) {
    if remaining == 1 {
        if g.has_edge(cur, target) {
            *count += 1;
        }
        return;
    }
    let cands: Vec<usize> = g
        .neighbours(cur)
        .filter(|&x| x != target && !Scratch::test(mask, x))
        .collect();
    for x in cands {
        Scratch::set(mask, x);
        count_paths_rec(g, x, target, remaining - 1, mask, count);
        Scratch::clear(mask, x);
    }
}
