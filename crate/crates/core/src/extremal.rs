//! Generators for the cycle blow-up constructions, the extremal hexagon
//! family built on them, closed-form count formulas, and an exact membership
//! test.
//!
//! The blow-up of an m-cycle replaces a maximum independent set of alternate
//! cycle vertices (`floor(m/2)` of them) by independent classes of as-equal
//! size as possible; the remaining `ceil(m/2)` cycle vertices are hubs. The
//! path variant additionally threads a path through each class. Both come
//! with a canonical planar embedding in which each class is a fan of parallel
//! arcs between its two hubs, drawn in class-index order.
//!
//! The hexagon family (m = 6) consists of the graphs between the plain and
//! the path variant: three hubs, three near-equal classes, complete hub-class
//! incidences for adjacent pairs, and any subset of the consecutive path
//! edges inside each class. Every member has exactly `family_count(n)` induced
//! 6-cycles and its per-vertex minimum is `family_vertex_min(n)`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::cycles;
use crate::embedding::{rotation_from_faces, Embedding};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Canonical vertex layout of a blow-up: hubs first (`0..hubs.len()`), then
/// the classes consecutively, larger classes at lower class index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyLayout {
    pub hubs: Vec<usize>,
    pub classes: Vec<Vec<usize>>,
}

impl FamilyLayout {
    /// Hubs flanking class `j`: `(hub_j, hub_{j+1})`, cyclically for even m.
    pub fn class_hubs(&self, j: usize) -> (usize, usize) {
        (self.hubs[j], self.hubs[(j + 1) % self.hubs.len()])
    }
}

fn check_orders(n: usize, m: usize) -> Result<()> {
    if m < 3 {
        return Err(Error::OrderTooSmall { n: m, what: "base cycle needs length >= 3" });
    }
    if n < m {
        return Err(Error::OrderTooSmall { n, what: "blow-up needs n >= m" });
    }
    Ok(())
}

/// The canonical layout for the order-n blow-up of an m-cycle.
pub fn family_layout(n: usize, m: usize) -> Result<FamilyLayout> {
    check_orders(n, m)?;
    let hubs_n = m.div_ceil(2);
    let classes_n = m / 2;
    let total = n - hubs_n;
    let base = total / classes_n;
    let rem = total % classes_n;
    let mut classes = Vec::with_capacity(classes_n);
    let mut next = hubs_n;
    for j in 0..classes_n {
        let size = base + usize::from(j < rem);
        classes.push((next..next + size).collect());
        next += size;
    }
    Ok(FamilyLayout { hubs: (0..hubs_n).collect(), classes })
}

/// Oriented face cycles of the canonical drawing. With `with_paths`, each
/// quadrilateral between consecutive fan arcs is split by the path chord.
fn canonical_faces(layout: &FamilyLayout, m: usize, with_paths: bool) -> Vec<Vec<usize>> {
    let hubs = &layout.hubs;
    let q = layout.classes.len();
    let mut faces = Vec::new();
    // innermost arcs plus, for odd m, the hub-hub edge
    let mut inner = Vec::new();
    for (hub, cls) in hubs.iter().zip(&layout.classes) {
        inner.push(*hub);
        inner.push(cls[0]);
    }
    if m % 2 == 1 {
        inner.push(hubs[q]);
    }
    faces.push(inner);
    // outermost arcs, traversed against hub order
    let mut outer = Vec::new();
    if m % 2 == 1 {
        outer.push(hubs[0]);
        outer.push(hubs[q]);
        for j in (0..q).rev() {
            outer.push(*layout.classes[j].last().unwrap());
            outer.push(hubs[j]);
        }
        outer.pop(); // hub_0 closes the cycle implicitly
    } else {
        for j in (0..q).rev() {
            outer.push(hubs[(j + 1) % hubs.len()]);
            outer.push(*layout.classes[j].last().unwrap());
        }
    }
    faces.push(outer);
    // the region between consecutive arcs of one class
    for (j, cls) in layout.classes.iter().enumerate() {
        let (p, r) = layout.class_hubs(j);
        for i in 0..cls.len() - 1 {
            if with_paths {
                faces.push(vec![cls[i], p, cls[i + 1]]);
                faces.push(vec![cls[i + 1], r, cls[i]]);
            } else {
                faces.push(vec![cls[i], p, cls[i + 1], r]);
            }
        }
    }
    faces
}

fn blowup_edges(layout: &FamilyLayout, m: usize) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (j, cls) in layout.classes.iter().enumerate() {
        let (p, r) = layout.class_hubs(j);
        for &a in cls {
            edges.push((p, a));
            edges.push((a, r));
        }
    }
    if m % 2 == 1 {
        edges.push((*layout.hubs.last().unwrap(), layout.hubs[0]));
    }
    edges
}

fn build_blowup(n: usize, m: usize, with_paths: bool) -> Result<(Graph, Embedding)> {
    let layout = family_layout(n, m)?;
    let mut edges = blowup_edges(&layout, m);
    if with_paths {
        for cls in &layout.classes {
            for pair in cls.windows(2) {
                edges.push((pair[0], pair[1]));
            }
        }
    }
    let g = Graph::from_edge_list(n, &edges)?;
    let faces = canonical_faces(&layout, m, with_paths);
    let rotation = rotation_from_faces(n, &faces).expect("canonical face set is coherent");
    let e = Embedding::from_rotation(rotation, &g).expect("canonical rotation matches the graph");
    Ok((g, e))
}

/// The order-n blow-up of an m-cycle, with its canonical embedding.
pub fn blowup_cycle(n: usize, m: usize) -> Result<(Graph, Embedding)> {
    build_blowup(n, m, false)
}

/// The blow-up plus a path through each class, with its canonical embedding.
pub fn blowup_cycle_with_paths(n: usize, m: usize) -> Result<(Graph, Embedding)> {
    build_blowup(n, m, true)
}

/// Which of the allowed consecutive path edges to place inside each class of
/// a hexagon-family member. `Explicit` lists slot indices per class: slot `i`
/// joins the class's i-th and (i+1)-th vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntraEdges {
    None,
    All,
    Explicit { a: Vec<usize>, b: Vec<usize>, c: Vec<usize> },
    /// Every slot kept independently with probability 1/2, from a seeded RNG
    /// (classes in order, slots in order; deterministic per seed).
    Seeded(u64),
}

/// A member of the hexagon family on `n` vertices: the plain blow-up plus the
/// selected intra-class path edges.
pub fn family_member(n: usize, selector: &IntraEdges) -> Result<Graph> {
    if n < 6 {
        return Err(Error::OrderTooSmall { n, what: "the hexagon family starts at n = 6" });
    }
    let layout = family_layout(n, 6)?;
    let mut edges = blowup_edges(&layout, 6);
    let mut rng = match selector {
        IntraEdges::Seeded(seed) => Some(ChaCha8Rng::seed_from_u64(*seed)),
        _ => None,
    };
    for (j, cls) in layout.classes.iter().enumerate() {
        let slots = cls.len() - 1;
        let explicit: Option<&Vec<usize>> = match selector {
            IntraEdges::Explicit { a, b, c } => Some([a, b, c][j]),
            _ => None,
        };
        if let Some(list) = explicit {
            for &i in list {
                if i >= slots {
                    return Err(Error::SelectorOutOfRange { pos: i, size: cls.len() });
                }
                edges.push((cls[i], cls[i + 1]));
            }
            continue;
        }
        for i in 0..slots {
            let keep = match selector {
                IntraEdges::None => false,
                IntraEdges::All => true,
                IntraEdges::Seeded(_) => rng.as_mut().unwrap().gen_bool(0.5),
                IntraEdges::Explicit { .. } => unreachable!(),
            };
            if keep {
                edges.push((cls[i], cls[i + 1]));
            }
        }
    }
    Graph::from_edge_list(n, &edges)
}

fn check_formula_order(n: usize) -> Result<u64> {
    if n < 6 {
        return Err(Error::OrderTooSmall { n, what: "count formulas need n >= 6" });
    }
    Ok(n as u64)
}

/// Exact number of induced 6-cycles in every order-n hexagon-family member:
/// the product of the three class sizes.
pub fn family_count(n: usize) -> Result<u64> {
    let n = check_formula_order(n)?;
    Ok(match n % 3 {
        0 => {
            let t = n / 3 - 1;
            t * t * t
        }
        1 => {
            let a = (n - 4) / 3;
            a * a * ((n - 1) / 3)
        }
        _ => {
            let b = (n - 2) / 3;
            let c = (n - 5) / 3;
            b * b * c
        }
    })
}

/// Minimum per-vertex induced 6-cycle count over an order-n family member:
/// the product of the two smallest class sizes. Equals the first difference
/// of [`family_count`] for n >= 7.
pub fn family_vertex_min(n: usize) -> Result<u64> {
    let n = check_formula_order(n)?;
    Ok(match n % 3 {
        0 => {
            let t = n / 3 - 1;
            t * t
        }
        1 => {
            let a = (n - 4) / 3;
            a * a
        }
        _ => ((n - 2) / 3) * ((n - 5) / 3),
    })
}

/// Closed form for the maximum number of induced 6-cycles in an n-vertex
/// planar graph (valid for large n); coincides with [`family_count`].
pub fn extremal_count_formula(n: usize) -> Result<u64> {
    family_count(n)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormulaTable {
    pub n: usize,
    pub h0: u64,
    pub h1: u64,
    pub fi: u64,
}

pub fn formula_table(n: usize) -> Result<FormulaTable> {
    Ok(FormulaTable {
        n,
        h0: family_count(n)?,
        h1: family_vertex_min(n)?,
        fi: extremal_count_formula(n)?,
    })
}

/// Verdict of the hexagon-family membership test, with a witness labelling
/// for members and a rejection reason otherwise.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyReport {
    pub member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hubs: Option<(usize, usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub classes: Option<[VertexSet; 3]>,
    pub intra_edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl FamilyReport {
    fn reject(reason: impl Into<String>) -> Self {
        FamilyReport { member: false, hubs: None, classes: None, intra_edges: Vec::new(), reason: Some(reason.into()) }
    }
}

/// Exact membership test for the hexagon family.
///
/// Hub triples are drawn from vertices of degree at least
/// `2*floor((n-3)/3) - 2` (every hub's degree is the sum of two class sizes,
/// so this never excludes a true hub); given a triple, the classes are forced
/// as pairwise common neighbourhoods and every clause is checked directly.
/// The first qualifying triple in lexicographic order is reported.
pub fn is_in_family(g: &Graph) -> FamilyReport {
    let n = g.n();
    if n < 6 {
        return FamilyReport::reject(format!("order {n} is below the family minimum 6"));
    }
    let q = (n - 3) / 3;
    let threshold = (2 * q).saturating_sub(2).max(2);
    let candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= threshold).collect();
    for (i, &x) in candidates.iter().enumerate() {
        for (j, &y) in candidates.iter().enumerate().skip(i + 1) {
            if g.has_edge(x, y) {
                continue;
            }
            for &z in candidates.iter().skip(j + 1) {
                if g.has_edge(x, z) || g.has_edge(y, z) {
                    continue;
                }
                if let Some(report) = try_hub_triple(g, x, y, z) {
                    return report;
                }
            }
        }
    }
    FamilyReport::reject("no hub triple yields the required form")
}

fn try_hub_triple(g: &Graph, x: usize, y: usize, z: usize) -> Option<FamilyReport> {
    let n = g.n();
    let a = g.common_neighbourhood(x, y).expect("distinct vertices");
    let b = g.common_neighbourhood(y, z).expect("distinct vertices");
    let c = g.common_neighbourhood(z, x).expect("distinct vertices");
    // strata must partition the rest of the graph
    if !a.intersection(&b).is_empty() || !b.intersection(&c).is_empty() || !a.intersection(&c).is_empty() {
        return None;
    }
    let (la, lb, lc) = (a.len(), b.len(), c.len());
    if la + lb + lc != n - 3 {
        return None;
    }
    let max = la.max(lb).max(lc);
    let min = la.min(lb).min(lc);
    if max - min > 1 {
        return None;
    }
    // hubs see exactly their two incident classes
    if g.degree(x) != la + lc || g.degree(y) != la + lb || g.degree(z) != lb + lc {
        return None;
    }
    // class vertices see exactly their two hubs plus at most a path inside
    // the class: no cross-class edges, degree <= 2 within, and no cycle
    let mut intra_edges = Vec::new();
    for (cls, h1, h2) in [(&a, x, y), (&b, y, z), (&c, z, x)] {
        let mut class_edges = Vec::new();
        for v in cls.iter() {
            let mut within = 0;
            for u in g.neighbours(v) {
                if u == h1 || u == h2 {
                    continue;
                }
                if !cls.contains(u) {
                    return None;
                }
                within += 1;
                if v < u {
                    class_edges.push((v, u));
                }
            }
            if within > 2 {
                return None;
            }
        }
        if !cycles::edge_set_is_forest(&class_edges) {
            return None;
        }
        class_edges.sort_unstable();
        intra_edges.extend(class_edges);
    }
    Some(FamilyReport {
        member: true,
        hubs: Some((x, y, z)),
        classes: Some([a, b, c]),
        intra_edges,
        reason: None,
    })
}
