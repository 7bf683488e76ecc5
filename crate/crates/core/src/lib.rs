//! Burning, cooling and k-liminal burning on graphs.
//!
//! * [`graph`]: connected graphs, paths and strong products of paths.
//! * [`burn`]: the propagate/place round mechanics and sequence replay.
//! * [`solve`]: exact burning number, cooling number and liminal minimax.
//! * [`bounds`]: exact-rational lower bounds for strong products of paths.
//! * [`tiling`]: odd-tile packings and the generating function behind `k*`.
//! * [`report`]: cross-check tables comparing solver values with formulas.

pub mod bounds;
pub mod burn;
pub mod error;
pub mod graph;
pub mod report;
pub mod solve;
pub mod tiling;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{path, strong_path, Graph, GraphSpec};
pub use vertex_set::VertexSet;
