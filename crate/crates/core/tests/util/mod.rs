//! Shared test helpers: an independent brute-force induced-cycle oracle and
//! seeded random-graph corpora. The oracle deliberately shares no code with
//! the library's counting path.
#![allow(dead_code)] // each test binary uses a subset of these helpers

use planar_cycles::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Count induced k-cycles by checking every k-subset of the vertices: the
/// induced subgraph must have exactly k edges, all inner degrees 2, and be
/// connected.
pub fn naive_induced_cycle_count(g: &Graph, k: usize) -> u64 {
    let n = g.n();
    if k > n {
        return 0;
    }
    let mut subset: Vec<usize> = (0..k).collect();
    let mut count = 0;
    loop {
        if subset_is_cycle(g, &subset) {
            count += 1;
        }
        // next k-combination in lexicographic order
        let mut i = k;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            if subset[i] != i + n - k {
                break;
            }
            if i == 0 {
                return count;
            }
        }
        subset[i] += 1;
        for j in i + 1..k {
            subset[j] = subset[j - 1] + 1;
        }
    }
}

fn subset_is_cycle(g: &Graph, subset: &[usize]) -> bool {
    let k = subset.len();
    let mut degrees = vec![0usize; k];
    let mut edges = 0;
    for i in 0..k {
        for j in i + 1..k {
            if g.has_edge(subset[i], subset[j]) {
                degrees[i] += 1;
                degrees[j] += 1;
                edges += 1;
            }
        }
    }
    if edges != k || degrees.iter().any(|&d| d != 2) {
        return false;
    }
    // 2-regular and connected = a single cycle
    let mut seen = vec![false; k];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut reached = 1;
    while let Some(i) = stack.pop() {
        for j in 0..k {
            if !seen[j] && g.has_edge(subset[i], subset[j]) {
                seen[j] = true;
                reached += 1;
                stack.push(j);
            }
        }
    }
    reached == k
}

/// A seeded Erdos-Renyi style graph.
pub fn seeded_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, &edges).expect("valid edges")
}
