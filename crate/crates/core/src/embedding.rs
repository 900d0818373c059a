//! Combinatorial embeddings: a rotation system (cyclic neighbour order per
//! vertex) together with face traversal.
//!
//! Face walks follow the convention `next(u -> v) = (v -> succ_v(u))` where
//! `succ_v` is the cyclic successor in `rotation(v)`. For a planar rotation
//! system the walk orbits are the faces of the drawing and Euler's formula
//! holds per connected component.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// A dart is a directed edge.
pub type Dart = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
}

impl Embedding {
    /// Wrap a rotation system after validating it against `g`: every vertex's
    /// list must be a permutation of its neighbour set.
    pub fn from_rotation(rotation: Vec<Vec<usize>>, g: &Graph) -> Result<Self> {
        let e = Embedding { rotation };
        e.validate(g)?;
        Ok(e)
    }

    pub(crate) fn from_rotation_unchecked(rotation: Vec<Vec<usize>>) -> Self {
        Embedding { rotation }
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.rotation.len() != g.n() {
            return Err(Error::InconsistentEmbedding(format!(
                "rotation covers {} vertices, graph has {}",
                self.rotation.len(),
                g.n()
            )));
        }
        for v in 0..g.n() {
            let rot = &self.rotation[v];
            if rot.len() != g.degree(v) {
                return Err(Error::InconsistentEmbedding(format!(
                    "vertex {v} has degree {} but {} rotation entries",
                    g.degree(v),
                    rot.len()
                )));
            }
            let mut seen = vec![false; g.n()];
            for &u in rot {
                if u >= g.n() || !g.has_edge(u, v) || seen[u] {
                    return Err(Error::InconsistentEmbedding(format!(
                        "rotation at {v} lists {u}, which is not a fresh neighbour"
                    )));
                }
                seen[u] = true;
            }
        }
        Ok(())
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    /// Cyclic successor of `u` in the rotation at `v`.
    fn succ(&self, v: usize, u: usize) -> Option<usize> {
        let rot = &self.rotation[v];
        let pos = rot.iter().position(|&x| x == u)?;
        Some(rot[(pos + 1) % rot.len()])
    }
}

/// The faces of an embedded graph, with a dart -> face lookup.
#[derive(Debug, Clone)]
pub struct FaceSet {
    walks: Vec<Vec<Dart>>,
    /// indexed by `2 * edge_index + dir`, dir 0 for the (u,v) dart with u < v
    dart_face: Vec<usize>,
}

impl FaceSet {
    pub fn walks(&self) -> &[Vec<Dart>] {
        &self.walks
    }

    pub fn num_faces(&self) -> usize {
        self.walks.len()
    }

    pub fn face_of_dart(&self, g: &Graph, u: usize, v: usize) -> Option<usize> {
        let e = g.edge_index(u, v)?;
        let dir = usize::from(u > v);
        Some(self.dart_face[2 * e + dir])
    }

    /// Vertices on the boundary walk of face `f` (deduplicated, sorted).
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        let mut vs: Vec<usize> = self.walks[f].iter().map(|d| d.0).collect();
        vs.sort_unstable();
        vs.dedup();
        vs
    }
}

/// Trace all facial walks of `(g, e)`. Every dart lands in exactly one walk.
pub fn faces(g: &Graph, e: &Embedding) -> Result<FaceSet> {
    e.validate(g)?;
    let m = g.m();
    let dart_id = |u: usize, v: usize| -> usize {
        let idx = g.edge_index(u, v).expect("dart of a graph edge");
        2 * idx + usize::from(u > v)
    };
    let mut dart_face = vec![usize::MAX; 2 * m];
    let mut walks = Vec::new();
    for e_idx in 0..m {
        for dir in 0..2 {
            if dart_face[2 * e_idx + dir] != usize::MAX {
                continue;
            }
            let (a, b) = g.edges()[e_idx];
            let start: Dart = if dir == 0 { (a, b) } else { (b, a) };
            let face_idx = walks.len();
            let mut walk = Vec::new();
            let mut dart = start;
            loop {
                let id = dart_id(dart.0, dart.1);
                if dart_face[id] != usize::MAX {
                    return Err(Error::InconsistentEmbedding(
                        "face traversal revisited a dart".into(),
                    ));
                }
                dart_face[id] = face_idx;
                walk.push(dart);
                let (u, v) = dart;
                let w = e
                    .succ(v, u)
                    .ok_or_else(|| Error::InconsistentEmbedding("missing rotation entry".into()))?;
                dart = (v, w);
                if dart == start {
                    break;
                }
            }
            walks.push(walk);
        }
    }
    Ok(FaceSet { walks, dart_face })
}

/// Check Euler's formula `V - E + F = 2` on every connected component of a
/// planar-embedded graph. Components without edges count one face (the plane).
pub fn euler_check(g: &Graph, e: &Embedding) -> Result<()> {
    let fs = faces(g, e)?;
    for comp in g.components() {
        let vs: std::collections::HashSet<usize> = comp.iter().copied().collect();
        let v = comp.len();
        let edges = g.edges().iter().filter(|(u, _)| vs.contains(u)).count();
        let f = if edges == 0 {
            1
        } else {
            fs.walks()
                .iter()
                .filter(|w| vs.contains(&w[0].0))
                .count()
        };
        if v + f != edges + 2 {
            return Err(Error::InconsistentEmbedding(format!(
                "Euler's formula fails on a component: V={v} E={edges} F={f}"
            )));
        }
    }
    Ok(())
}

/// Rebuild the rotation system from an orientation-coherent face list (each
/// face an oriented vertex cycle; every dart appears exactly once overall).
///
/// For consecutive face vertices `a, b, c` this records `succ_b(a) = c`; a
/// valid planar face set closes into a single rotation cycle per vertex.
pub(crate) fn rotation_from_faces(n: usize, face_cycles: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    use std::collections::HashMap;
    let mut succ: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
    for cyc in face_cycles {
        let l = cyc.len();
        for i in 0..l {
            let a = cyc[i];
            let b = cyc[(i + 1) % l];
            let c = cyc[(i + 2) % l];
            if succ[b].insert(a, c).is_some() {
                return Err(Error::InconsistentEmbedding(format!(
                    "dart ({a},{b}) appears in two faces"
                )));
            }
        }
    }
    let mut rotation = Vec::with_capacity(n);
    for (v, map) in succ.iter().enumerate() {
        let mut rot = Vec::with_capacity(map.len());
        if let Some(&start) = map.keys().min() {
            let mut cur = start;
            loop {
                rot.push(cur);
                cur = *map.get(&cur).ok_or_else(|| {
                    Error::InconsistentEmbedding(format!("rotation at {v} is not closed"))
                })?;
                if cur == start {
                    break;
                }
                if rot.len() > map.len() {
                    return Err(Error::InconsistentEmbedding(format!(
                        "rotation at {v} does not close into one cycle"
                    )));
                }
            }
        }
        if rot.len() != map.len() {
            return Err(Error::InconsistentEmbedding(format!(
                "rotation at {v} splits into multiple cycles"
            )));
        }
        rotation.push(rot);
    }
    Ok(rotation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c6_embedding() -> (Graph, Embedding) {
        let g = Graph::cycle(6);
        let rot: Vec<Vec<usize>> = (0..6).map(|v| vec![(v + 5) % 6, (v + 1) % 6]).collect();
        let e = Embedding::from_rotation(rot, &g).unwrap();
        (g, e)
    }

    #[test]
    fn c6_has_two_hexagonal_faces() {
        let (g, e) = c6_embedding();
        let fs = faces(&g, &e).unwrap();
        assert_eq!(fs.num_faces(), 2);
        assert!(fs.walks().iter().all(|w| w.len() == 6));
        euler_check(&g, &e).unwrap();
    }

    #[test]
    fn k4_from_faces() {
        // the four oriented triangles of the planar K4
        let faces_list = vec![vec![0, 1, 3], vec![0, 2, 1], vec![2, 0, 3], vec![2, 3, 1]];
        let rot = rotation_from_faces(4, &faces_list).unwrap();
        let g = Graph::complete(4);
        let e = Embedding::from_rotation(rot, &g).unwrap();
        let fs = faces(&g, &e).unwrap();
        assert_eq!(fs.num_faces(), 4);
        assert!(fs.walks().iter().all(|w| w.len() == 3));
        euler_check(&g, &e).unwrap();
    }

    #[test]
    fn validation_catches_bad_rotation() {
        let g = Graph::cycle(6);
        let mut rot: Vec<Vec<usize>> = (0..6).map(|v| vec![(v + 5) % 6, (v + 1) % 6]).collect();
        rot[0][0] = 3; // not a neighbour of 0
        assert!(Embedding::from_rotation(rot, &g).is_err());
    }

    #[test]
    fn every_dart_in_exactly_one_walk() {
        let (g, e) = c6_embedding();
        let fs = faces(&g, &e).unwrap();
        let total: usize = fs.walks().iter().map(|w| w.len()).sum();
        assert_eq!(total, 2 * g.m());
        for &(u, v) in g.edges() {
            assert!(fs.face_of_dart(&g, u, v).is_some());
            assert!(fs.face_of_dart(&g, v, u).is_some());
        }
    }
}
