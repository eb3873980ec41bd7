//! r-regular multigraph toolkit.
//!
//! The crate decides whether a regular multigraph meets the odd-cut lower
//! bound (an "r-graph"), enumerates and validates (t,r)-perfect-matching
//! covers, recognizes the structures those covers interact with (tight
//! edge-cuts, small vertex cuts, planarity, K5/K3,3 minors, crossing number
//! at most one, clique-sum decompositions), and runs three constructive
//! reductions that turn minor-restricted or one-crossing instances into
//! planar ones, emitting independently checkable certificates at every step.
//!
//! Start with the runnable examples (`cargo run --example pm_covers`) or the
//! `rgraph` CLI (`rgraph verify fixtures/petersen.g --r 3`).

pub mod canon;
pub mod census;
pub mod certificate;
pub mod fixtures;
pub mod format;
pub mod graph;
pub mod matching;
pub mod minor;
pub mod reduce;
pub mod rgraph;

pub use graph::{EdgeCut, EdgeId, GraphError, Multigraph, VertexCut, VertexId};
pub use matching::{EdgeColoring, Matching, PMCover};
pub use rgraph::RGraphVerdict;
