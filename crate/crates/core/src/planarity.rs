//! Planarity testing that always produces a rotation system for planar
//! inputs.
//!
//! The test embeds each biconnected block by incremental face splitting
//! (Demoucron–Malgrange–Pertuiset): start from a cycle, then repeatedly choose
//! a fragment with the fewest admissible faces and embed a path of it into one
//! of them. A fragment with no admissible face certifies non-planarity. Block
//! rotations are concatenated at cut vertices, which preserves genus zero.
//!
//! Quadratic per block, which is fine at the orders this crate targets. No
//! obstruction witness is produced for non-planar inputs.

use crate::embedding::{rotation_from_faces, Embedding};
use crate::graph::Graph;

#[derive(Debug, Clone)]
pub struct PlanarityResult {
    pub planar: bool,
    /// Present iff `planar`.
    pub embedding: Option<Embedding>,
}

pub fn is_planar(g: &Graph) -> PlanarityResult {
    let non_planar = PlanarityResult { planar: false, embedding: None };
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for block in biconnected_blocks(g) {
        if block.len() == 1 {
            let (u, v) = block[0];
            rotation[u].push(v);
            rotation[v].push(u);
            continue;
        }
        let mut verts: Vec<usize> = block.iter().flat_map(|&(u, v)| [u, v]).collect();
        verts.sort_unstable();
        verts.dedup();
        let mut local_id = vec![usize::MAX; g.n()];
        for (i, &v) in verts.iter().enumerate() {
            local_id[v] = i;
        }
        let local_edges: Vec<(usize, usize)> =
            block.iter().map(|&(u, v)| (local_id[u], local_id[v])).collect();
        let gb = Graph::from_edge_list(verts.len(), &local_edges).expect("block edges are valid");
        let Some(local_rot) = dmp_embed_block(&gb) else {
            return non_planar;
        };
        for (lv, rot) in local_rot.into_iter().enumerate() {
            rotation[verts[lv]].extend(rot.into_iter().map(|lu| verts[lu]));
        }
    }
    PlanarityResult {
        planar: true,
        embedding: Some(Embedding::from_rotation_unchecked(rotation)),
    }
}

/// Biconnected blocks as edge lists (a bridge is a one-edge block), via the
/// classic lowpoint DFS with an edge stack.
fn biconnected_blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![usize::MAX; n];
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    let mut timer = 0usize;

    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack: Vec<(usize, Vec<usize>, usize)> =
            vec![(root, g.neighbours(root).collect(), 0)];
        while let Some(frame) = stack.last_mut() {
            let v = frame.0;
            if frame.2 < frame.1.len() {
                let u = frame.1[frame.2];
                frame.2 += 1;
                if disc[u] == usize::MAX {
                    parent[u] = v;
                    edge_stack.push((v, u));
                    disc[u] = timer;
                    low[u] = timer;
                    timer += 1;
                    stack.push((u, g.neighbours(u).collect(), 0));
                } else if u != parent[v] && disc[u] < disc[v] {
                    edge_stack.push((v, u));
                    low[v] = low[v].min(disc[u]);
                }
            } else {
                stack.pop();
                if let Some(pframe) = stack.last() {
                    let p = pframe.0;
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks
}

/// A fragment of the block relative to the embedded subgraph: either a chord
/// between two embedded vertices, or a component of the unembedded vertices
/// together with its attachment edges.
struct Fragment {
    attachments: Vec<usize>,
    attach_words: Vec<u64>,
    chord: Option<(usize, usize)>,
    /// bitset of the fragment's unembedded vertices (empty for chords)
    interior: Vec<u64>,
}

/// Embed a 2-connected block; `None` means non-planar.
fn dmp_embed_block(gb: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = gb.n();
    let m = gb.m();
    debug_assert!(n >= 3);
    if m > 3 * n - 6 {
        return None;
    }
    let words = n.div_ceil(64);
    let to_words = |vs: &[usize]| {
        let mut w = vec![0u64; words];
        for &v in vs {
            w[v / 64] |= 1 << (v % 64);
        }
        w
    };

    let cycle = find_cycle(gb);
    let mut emb_vert = vec![false; n];
    let mut emb_adj = vec![0u64; n * words];
    let add_edge = |adj: &mut Vec<u64>, u: usize, v: usize| {
        adj[u * words + v / 64] |= 1 << (v % 64);
        adj[v * words + u / 64] |= 1 << (u % 64);
    };
    for &v in &cycle {
        emb_vert[v] = true;
    }
    for i in 0..cycle.len() {
        add_edge(&mut emb_adj, cycle[i], cycle[(i + 1) % cycle.len()]);
    }
    let mut rev = cycle.clone();
    rev.reverse();
    // each face: oriented vertex cycle plus its vertex bitset
    let mut faces: Vec<(Vec<usize>, Vec<u64>)> =
        vec![(cycle.clone(), to_words(&cycle)), (rev, to_words(&cycle))];

    loop {
        let frags = fragments(gb, &emb_vert, &emb_adj, words);
        if frags.is_empty() {
            break;
        }
        // fragment with the fewest admissible faces; it must be embedded there
        let mut best: Option<(usize, usize, usize)> = None; // (count, frag, face)
        for (fi, frag) in frags.iter().enumerate() {
            let mut count = 0;
            let mut first_face = usize::MAX;
            for (j, (_, fwords)) in faces.iter().enumerate() {
                if frag.attach_words.iter().zip(fwords).all(|(a, f)| a & !f == 0) {
                    count += 1;
                    if first_face == usize::MAX {
                        first_face = j;
                    }
                }
            }
            if count == 0 {
                return None;
            }
            if best.is_none_or(|(c, _, _)| count < c) {
                best = Some((count, fi, first_face));
                if count == 1 {
                    break;
                }
            }
        }
        let (_, fi, face_idx) = best.expect("at least one fragment");
        let path = fragment_path(gb, &frags[fi], &emb_vert);
        for pair in path.windows(2) {
            add_edge(&mut emb_adj, pair[0], pair[1]);
        }
        for &p in &path[1..path.len() - 1] {
            emb_vert[p] = true;
        }
        let (f1, f2) = split_face(&faces[face_idx].0, &path);
        let w1 = to_words(&f1);
        let w2 = to_words(&f2);
        faces[face_idx] = (f1, w1);
        faces.push((f2, w2));
    }

    let face_cycles: Vec<Vec<usize>> = faces.into_iter().map(|(c, _)| c).collect();
    Some(rotation_from_faces(n, &face_cycles).expect("incremental embedding yields a planar map"))
}

/// Some cycle of a 2-connected graph (first back edge of a DFS from vertex 0).
fn find_cycle(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 new, 1 open, 2 closed
    let mut stack: Vec<(usize, Vec<usize>, usize)> = vec![(0, g.neighbours(0).collect(), 0)];
    state[0] = 1;
    while let Some(frame) = stack.last_mut() {
        let v = frame.0;
        if frame.2 < frame.1.len() {
            let u = frame.1[frame.2];
            frame.2 += 1;
            if state[u] == 0 {
                parent[u] = v;
                state[u] = 1;
                stack.push((u, g.neighbours(u).collect(), 0));
            } else if state[u] == 1 && u != parent[v] {
                // back edge closes a cycle u ... v
                let mut cycle = vec![v];
                let mut x = v;
                while x != u {
                    x = parent[x];
                    cycle.push(x);
                }
                cycle.reverse();
                return cycle;
            }
        } else {
            state[v] = 2;
            stack.pop();
        }
    }
    unreachable!("2-connected block contains a cycle")
}

fn fragments(gb: &Graph, emb_vert: &[bool], emb_adj: &[u64], words: usize) -> Vec<Fragment> {
    let n = gb.n();
    let has_emb = |u: usize, v: usize| emb_adj[u * words + v / 64] >> (v % 64) & 1 == 1;
    let mut frags = Vec::new();
    for &(u, v) in gb.edges() {
        if emb_vert[u] && emb_vert[v] && !has_emb(u, v) {
            frags.push(Fragment {
                attachments: vec![u, v],
                attach_words: {
                    let mut w = vec![0u64; words];
                    w[u / 64] |= 1 << (u % 64);
                    w[v / 64] |= 1 << (v % 64);
                    w
                },
                chord: Some((u, v)),
                interior: vec![0u64; words],
            });
        }
    }
    let mut assigned = vec![false; n];
    for start in 0..n {
        if emb_vert[start] || assigned[start] {
            continue;
        }
        let mut queue = std::collections::VecDeque::from([start]);
        assigned[start] = true;
        let mut attach = Vec::new();
        let mut interior = vec![0u64; words];
        interior[start / 64] |= 1 << (start % 64);
        while let Some(v) = queue.pop_front() {
            for u in gb.neighbours(v) {
                if emb_vert[u] {
                    attach.push(u);
                } else if !assigned[u] {
                    assigned[u] = true;
                    interior[u / 64] |= 1 << (u % 64);
                    queue.push_back(u);
                }
            }
        }
        attach.sort_unstable();
        attach.dedup();
        debug_assert!(attach.len() >= 2, "2-connected block fragment has >= 2 attachments");
        let mut w = vec![0u64; words];
        for &a in &attach {
            w[a / 64] |= 1 << (a % 64);
        }
        frags.push(Fragment { attachments: attach, attach_words: w, chord: None, interior });
    }
    frags
}

/// A path through the fragment between two distinct attachment vertices,
/// staying inside the fragment's own interior.
fn fragment_path(gb: &Graph, frag: &Fragment, emb_vert: &[bool]) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    let inside = |v: usize| frag.interior[v / 64] >> (v % 64) & 1 == 1;
    let a = frag.attachments[0];
    let n = gb.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    for x in gb.neighbours(a) {
        if inside(x) && !seen[x] {
            seen[x] = true;
            parent[x] = a;
            queue.push_back(x);
        }
    }
    while let Some(x) = queue.pop_front() {
        if let Some(b) = gb.neighbours(x).find(|&b| emb_vert[b] && b != a) {
            let mut path = vec![b, x];
            let mut cur = x;
            while parent[cur] != a {
                cur = parent[cur];
                path.push(cur);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for y in gb.neighbours(x) {
            if inside(y) && !seen[y] {
                seen[y] = true;
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment connects two attachments")
}

/// Split an oriented face cycle along a path between two of its vertices,
/// keeping both new faces orientation-coherent.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let a = path[0];
    let b = *path.last().unwrap();
    let l = face.len();
    let ia = face.iter().position(|&x| x == a).expect("path start on face");
    let ib = face.iter().position(|&x| x == b).expect("path end on face");
    let mut f1 = Vec::new();
    let mut i = ia;
    loop {
        f1.push(face[i]);
        if i == ib {
            break;
        }
        i = (i + 1) % l;
    }
    let mut f2 = Vec::new();
    let mut i = ib;
    loop {
        f2.push(face[i]);
        if i == ia {
            break;
        }
        i = (i + 1) % l;
    }
    let interior = &path[1..path.len() - 1];
    f1.extend(interior.iter().rev());
    f2.extend(interior.iter());
    (f1, f2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{euler_check, faces};

    #[test]
    fn complete_graphs() {
        assert!(is_planar(&Graph::complete(4)).planar);
        assert!(!is_planar(&Graph::complete(5)).planar);
        assert!(!is_planar(&Graph::complete_bipartite(3, 3)).planar);
        assert!(is_planar(&Graph::complete_bipartite(2, 7)).planar);
    }

    #[test]
    fn k4_embedding_is_valid() {
        let g = Graph::complete(4);
        let r = is_planar(&g);
        let e = r.embedding.unwrap();
        let fs = faces(&g, &e).unwrap();
        assert_eq!(fs.num_faces(), 4);
        euler_check(&g, &e).unwrap();
    }

    #[test]
    fn cycles_and_trees() {
        for g in [Graph::cycle(6), Graph::path(8), Graph::empty(4)] {
            let r = is_planar(&g);
            assert!(r.planar);
            euler_check(&g, &r.embedding.unwrap()).unwrap();
        }
        let c6 = Graph::cycle(6);
        let fs = faces(&c6, &is_planar(&c6).embedding.unwrap()).unwrap();
        assert_eq!(fs.num_faces(), 2);
        assert!(fs.walks().iter().all(|w| w.len() == 6));
    }

    #[test]
    fn petersen_is_not_planar() {
        let petersen = Graph::from_edge_list(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        )
        .unwrap();
        assert!(!is_planar(&petersen).planar);
    }

    #[test]
    fn k5_minus_an_edge_is_planar() {
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                if (u, v) != (0, 1) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(5, &edges).unwrap();
        let r = is_planar(&g);
        assert!(r.planar);
        euler_check(&g, &r.embedding.unwrap()).unwrap();
    }

    #[test]
    fn cut_vertices_and_components() {
        // bowtie: two triangles sharing vertex 2, plus an isolated vertex and a K4
        let mut edges = vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)];
        for u in 6..10 {
            for v in u + 1..10 {
                edges.push((u, v));
            }
        }
        let g = Graph::from_edge_list(10, &edges).unwrap();
        let r = is_planar(&g);
        assert!(r.planar);
        let e = r.embedding.unwrap();
        euler_check(&g, &e).unwrap();
        assert_eq!(e.rotation(2).len(), 4);
        assert!(e.rotation(5).is_empty());
    }

    #[test]
    fn subdivided_k33_is_not_planar() {
        // subdivide every edge of K33 once: 6 + 9 vertices
        let mut edges = Vec::new();
        let mut next = 6;
        for u in 0..3 {
            for v in 3..6 {
                edges.push((u, next));
                edges.push((next, v));
                next += 1;
            }
        }
        let g = Graph::from_edge_list(next, &edges).unwrap();
        assert!(!is_planar(&g).planar);
    }

    #[test]
    fn planarity_is_monotone_under_deletion() {
        use crate::graph::VertexSet;
        let mut edges = Vec::new();
        for u in 0..5 {
            for v in u + 1..5 {
                if (u, v) != (0, 1) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edge_list(5, &edges).unwrap();
        for v in 0..5 {
            let h = g.delete_vertices(&VertexSet::from_vertices(5, [v]));
            assert!(is_planar(&h).planar);
        }
    }

    #[test]
    fn blocks_of_a_bowtie() {
        let g = Graph::from_edge_list(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let blocks = biconnected_blocks(&g);
        assert_eq!(blocks.len(), 2);
        assert!(blocks.iter().all(|b| b.len() == 3));
    }
}
