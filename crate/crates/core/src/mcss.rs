//! Minimum Common Spanning Subgraph: a max-gain greedy over per-frame
//! union-find structures, plus feasibility and potential checks.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{canonical_edge, Edge, TemporalGraph};

/// A subset of the union edge set, sorted with `u < v` in every pair.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeSolution(Vec<Edge>);

impl EdgeSolution {
    pub fn new<I: IntoIterator<Item = Edge>>(edges: I) -> Self {
        let mut v: Vec<Edge> = edges.into_iter().map(|(u, v)| canonical_edge(u, v)).collect();
        v.sort_unstable();
        v.dedup();
        EdgeSolution(v)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// One `u v` line per edge.
    pub fn to_text(&self) -> String {
        self.0.iter().map(|(u, v)| format!("{u} {v}\n")).collect()
    }
}

impl fmt::Display for EdgeSolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Debug, Clone)]
pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
    components: usize,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            rank: vec![0; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Returns true if `a` and `b` were in different sets.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        self.components -= 1;
        true
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

/// For every union edge, the frames that contain it.
pub(crate) fn frames_per_union_edge(g: &TemporalGraph) -> Vec<Vec<usize>> {
    let union = g.union_edges();
    let mut owners = vec![Vec::new(); union.len()];
    for (t, f) in g.frames().iter().enumerate() {
        for e in f.edges() {
            let idx = union.binary_search(e).expect("frame edge is in the union");
            owners[idx].push(t);
        }
    }
    owners
}

pub(crate) fn check_connected_frames(g: &TemporalGraph) -> Result<()> {
    for (t, f) in g.frames().iter().enumerate() {
        let mut ds = DisjointSets::new(g.n());
        for &(u, v) in f.edges() {
            ds.union(u, v);
        }
        if ds.components() != 1 {
            return Err(Error::InfeasibleFrame { frame: t });
        }
    }
    Ok(())
}

fn union_indices(g: &TemporalGraph, f: &EdgeSolution) -> Result<Vec<usize>> {
    let union = g.union_edges();
    f.edges()
        .iter()
        .map(|&(u, v)| union.binary_search(&(u, v)).map_err(|_| Error::EdgeNotInUnion(u, v)))
        .collect()
}

fn components_per_frame(g: &TemporalGraph, f: &EdgeSolution) -> Result<Vec<usize>> {
    let chosen = union_indices(g, f)?;
    let owners = frames_per_union_edge(g);
    let mut sets: Vec<DisjointSets> = (0..g.num_frames()).map(|_| DisjointSets::new(g.n())).collect();
    for idx in chosen {
        let (u, v) = g.union_edges()[idx];
        for &t in &owners[idx] {
            sets[t].union(u, v);
        }
    }
    Ok(sets.iter().map(DisjointSets::components).collect())
}

/// True iff `(V, F ∩ E_t)` is connected for every frame `t`.
pub fn check_spanning(g: &TemporalGraph, f: &EdgeSolution) -> Result<bool> {
    Ok(components_per_frame(g, f)?.iter().all(|&c| c == 1))
}

/// Total component count of `(V, F ∩ E_t)` over all frames, minus `T`.
pub fn potential(g: &TemporalGraph, f: &EdgeSolution) -> Result<usize> {
    Ok(components_per_frame(g, f)?.iter().sum::<usize>() - g.num_frames())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    pub edge: Edge,
    /// Component merges caused by this edge, summed over frames.
    pub gain: usize,
    pub potential_after: usize,
}

#[derive(Debug, Clone)]
pub struct McssGreedyResult {
    pub solution: EdgeSolution,
    pub trace: Vec<GreedyStep>,
    pub initial_potential: usize,
    /// Index of the first step taken with potential at most `n`, the point
    /// where the two-phase formulation switches to its closing phase.
    pub phase_boundary: Option<usize>,
}

/// Greedy MCSS: repeatedly add the union edge that merges the most
/// components summed over the frames containing it (smallest edge on
/// ties) until every frame is spanned.
pub fn mcss_greedy(g: &TemporalGraph) -> Result<McssGreedyResult> {
    check_connected_frames(g)?;
    let n = g.n();
    let union = g.union_edges();
    let owners = frames_per_union_edge(g);
    let mut sets: Vec<DisjointSets> = (0..g.num_frames()).map(|_| DisjointSets::new(n)).collect();
    let initial_potential = n * g.num_frames() - g.num_frames();
    let mut potential = initial_potential;
    let mut picked = Vec::new();
    let mut trace = Vec::new();
    let mut phase_boundary = None;

    while potential > 0 {
        let mut best: Option<(usize, usize)> = None;
        for (idx, &(u, v)) in union.iter().enumerate() {
            let gain = owners[idx].iter().filter(|&&t| !sets[t].same(u, v)).count();
            if gain > 0 && best.is_none_or(|(_, g)| gain > g) {
                best = Some((idx, gain));
            }
        }
        // every frame is connected, so some edge still merges components
        let (idx, gain) = best.expect("connected frames always admit a merging edge");
        let (u, v) = union[idx];
        for &t in &owners[idx] {
            sets[t].union(u, v);
        }
        if phase_boundary.is_none() && potential <= n {
            phase_boundary = Some(trace.len());
        }
        potential -= gain;
        picked.push((u, v));
        trace.push(GreedyStep {
            edge: (u, v),
            gain,
            potential_after: potential,
        });
    }

    Ok(McssGreedyResult {
        solution: EdgeSolution::new(picked),
        trace,
        initial_potential,
        phase_boundary,
    })
}
