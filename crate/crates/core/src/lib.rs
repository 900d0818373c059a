//! Planar-graph analysis around induced cycles.
//!
//! The crate provides:
//!
//! - a compact immutable [`Graph`] with bitset adjacency, plus a graph6 codec
//!   and an edge-list text format ([`graph6`], [`graph::parse_edge_list`]);
//! - planarity testing that produces a combinatorial embedding (rotation
//!   system) and face traversal ([`planarity::is_planar`], [`embedding`]);
//! - exact induced k-cycle counting at graph / vertex / edge / path
//!   granularity, the path-extension decomposition and its acyclicity bounds,
//!   and simple-path counting ([`cycles`]);
//! - generators for the cycle blow-up constructions and the extremal hexagon
//!   family, closed-form count formulas, and an exact membership test
//!   ([`extremal`]);
//! - structural detectors: principal neighbours, empty K_{2,7} subgraphs in an
//!   embedding, hub/spoke hexagons, and common-neighbourhood cycle probes
//!   ([`structure`]);
//! - exhaustive small-order search, seeded random planar graphs, and a
//!   property-checking harness ([`search`]).
//!
//! Heavy operations are data-parallel with rayon when the `parallel` feature
//! (on by default) is enabled; every entry point also accepts an explicit
//! [`Parallelism`] so results can be reproduced single-threaded. Outputs are
//! deterministic and schedule-independent either way.

pub mod cycles;
pub mod embedding;
mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod planarity;
pub mod search;
pub mod structure;

pub use cycles::{
    count_induced_cycles, count_induced_cycles_with, count_simple_paths, forest_bounds,
    induced_cycles_through_path, path_cycle_sets, CycleCountReport, PathCycleSets,
};
pub use error::{Error, Result};
pub use extremal::{
    blowup_cycle, blowup_cycle_with_paths, extremal_count_formula, family_count, family_layout,
    family_member, family_vertex_min, formula_table, is_in_family, FamilyLayout, FamilyReport,
    FormulaTable, IntraEdges,
};
pub use graph::{Graph, VertexSet};
pub use planarity::{is_planar, PlanarityResult};
pub use search::{
    enumerate_planar, max_induced_6cycles, property_suite, random_planar, search_complete,
    PropertyViolation, SearchReport,
};
pub use structure::{
    central_principal_check, find_empty_k27, find_hub_spoke_cycles, hub_cycle_probe,
    principal_neighbours, span_intersection, vertex_minimum_probe, EmptyK27Witness,
    HubCycleWitness, HubSpokeCycle,
};

/// Execution mode for the data-parallel kernels.
///
/// `Rayon` falls back to sequential execution when the crate is built without
/// the `parallel` feature, so it is always safe to request.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    #[default]
    Rayon,
}
