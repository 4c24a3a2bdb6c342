//! Densest common subgraph problems on sequences of graphs that share one
//! vertex set.

pub mod am;
pub mod error;
pub mod generators;
pub mod graph;
pub mod lp;
pub mod ma;
pub mod mcss;
pub mod objectives;
pub mod oracle;
pub mod report;

pub use error::{Error, Result};
pub use graph::{induced_stats, parse, serialize, Edge, FrameStats, TemporalGraph, VertexSet};
pub use objectives::{frame_densities, score, ObjectiveKind, Score};
pub use report::SolveReport;
