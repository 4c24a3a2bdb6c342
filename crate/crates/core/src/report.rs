use std::time::Duration;

use num_rational::BigRational;

use crate::graph::VertexSet;
use crate::objectives::Score;

/// Outcome of one solver run.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub algorithm: String,
    pub solution: VertexSet,
    /// Recomputed from `solution` with [`crate::objectives::score`].
    pub score: Score,
    /// Frames newly covered at each greedy iteration, when the solver has one.
    pub frames_covered_per_iteration: Option<Vec<usize>>,
    pub wall_time: Duration,
    pub seed: Option<u64>,
    /// Set when some frame is edgeless, so every set scores 0 under MA.
    pub zero_score_instance: bool,
    /// Scores of the sub-solutions a combined solver chose between.
    pub candidates: Vec<(String, BigRational)>,
}
