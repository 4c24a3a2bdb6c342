//! Graph sequences over a shared vertex set, the `.dcs` text format, and
//! induced-subgraph statistics.
//!
//! Vertices are dense indices `0..n`. Each frame stores its edges as a
//! sorted list of `(u, v)` pairs with `u < v` plus a CSR adjacency index.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub type Edge = (usize, usize);

#[inline]
pub fn canonical_edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// One simple undirected graph of the sequence.
#[derive(Debug, Clone)]
pub struct Frame {
    edges: Vec<Edge>,
    offsets: Vec<usize>,
    neighbors: Vec<usize>,
}

impl Frame {
    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut degree = vec![0usize; n];
        for &(u, v) in &edges {
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut neighbors = vec![0usize; 2 * edges.len()];
        // edges are sorted by (u, v), so every list comes out sorted
        for &(u, v) in &edges {
            neighbors[fill[u]] = v;
            fill[u] += 1;
        }
        for &(u, v) in &edges {
            neighbors[fill[v]] = u;
            fill[v] += 1;
        }
        for v in 0..n {
            neighbors[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Frame {
            edges,
            offsets,
            neighbors,
        }
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.offsets.len() - 1)
            .map(|v| self.degree(v))
            .max()
            .unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.offsets.len() - 1)
            .map(|v| self.degree(v))
            .min()
            .unwrap_or(0)
    }
}

/// A sequence of `T >= 1` graphs on the vertex set `0..n`, `n >= 1`.
///
/// Immutable after construction.
#[derive(Debug, Clone)]
pub struct TemporalGraph {
    n: usize,
    frames: Vec<Frame>,
    union: OnceLock<Vec<Edge>>,
}

impl PartialEq for TemporalGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
            && self.frames.len() == other.frames.len()
            && self
                .frames
                .iter()
                .zip(&other.frames)
                .all(|(a, b)| a.edges == b.edges)
    }
}

impl Eq for TemporalGraph {}

impl TemporalGraph {
    /// Builds a graph from per-frame edge lists. Endpoint order and edge
    /// order within a frame are irrelevant; duplicates are rejected.
    pub fn new(n: usize, frames: Vec<Vec<Edge>>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be at least 1".into()));
        }
        if frames.is_empty() {
            return Err(Error::InvalidGraph("frame count must be at least 1".into()));
        }
        let mut built = Vec::with_capacity(frames.len());
        for (t, edges) in frames.into_iter().enumerate() {
            let mut canon = Vec::with_capacity(edges.len());
            for (u, v) in edges {
                if u >= n || v >= n {
                    return Err(Error::InvalidGraph(format!(
                        "frame {t}: edge ({u}, {v}) has an endpoint outside 0..{n}"
                    )));
                }
                if u == v {
                    return Err(Error::InvalidGraph(format!("frame {t}: self-loop at {u}")));
                }
                canon.push(canonical_edge(u, v));
            }
            canon.sort_unstable();
            if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::InvalidGraph(format!(
                    "frame {t}: duplicate edge ({}, {})",
                    w[0].0, w[0].1
                )));
            }
            built.push(Frame::from_sorted(n, canon));
        }
        Ok(TemporalGraph {
            n,
            frames: built,
            union: OnceLock::new(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_frames(&self) -> usize {
        self.frames.len()
    }

    pub fn frames(&self) -> &[Frame] {
        &self.frames
    }

    pub fn frame(&self, t: usize) -> Result<&Frame> {
        self.frames.get(t).ok_or(Error::FrameIndexOutOfRange {
            index: t,
            frames: self.frames.len(),
        })
    }

    /// Sorted, deduplicated union of all frame edge sets.
    pub fn union_edges(&self) -> &[Edge] {
        self.union.get_or_init(|| {
            let mut all: Vec<Edge> = self
                .frames
                .iter()
                .flat_map(|f| f.edges.iter().copied())
                .collect();
            all.sort_unstable();
            all.dedup();
            all
        })
    }

    pub fn has_edgeless_frame(&self) -> bool {
        self.frames.iter().any(|f| f.edges.is_empty())
    }

    /// Edge lists per frame, suitable for feeding back into [`TemporalGraph::new`].
    pub fn to_edge_lists(&self) -> Vec<Vec<Edge>> {
        self.frames.iter().map(|f| f.edges.clone()).collect()
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<TemporalGraph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation length differs from n".into()));
        }
        let frames = self
            .frames
            .iter()
            .map(|f| f.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect())
            .collect();
        TemporalGraph::new(self.n, frames)
    }
}

/// A candidate solution `S`: sorted, deduplicated vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(members: I) -> Self {
        let mut v: Vec<usize> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn all(n: usize) -> Self {
        VertexSet((0..n).collect())
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|&i| mask >> i & 1 == 1).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    /// Errors unless the set is nonempty and every member is below `n`.
    pub fn validate_for(&self, n: usize) -> Result<()> {
        if self.0.is_empty() {
            return Err(Error::EmptySolution);
        }
        match self.0.last() {
            Some(&v) if v >= n => Err(Error::VertexOutOfRange { vertex: v, n }),
            _ => Ok(()),
        }
    }

    pub fn indicator(&self, n: usize) -> Vec<bool> {
        let mut inside = vec![false; n];
        for &v in &self.0 {
            inside[v] = true;
        }
        inside
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Edge count and minimum degree of one frame's induced subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameStats {
    pub edge_count: usize,
    pub min_degree: usize,
}

pub fn induced_stats(g: &TemporalGraph, t: usize, s: &VertexSet) -> Result<FrameStats> {
    let frame = g.frame(t)?;
    s.validate_for(g.n())?;
    let inside = s.indicator(g.n());
    Ok(stats_with_indicator(frame, s, &inside))
}

pub(crate) fn stats_with_indicator(frame: &Frame, s: &VertexSet, inside: &[bool]) -> FrameStats {
    let mut degree_sum = 0;
    let mut min_degree = usize::MAX;
    for v in s.iter() {
        let d = frame.neighbors(v).iter().filter(|&&w| inside[w]).count();
        degree_sum += d;
        min_degree = min_degree.min(d);
    }
    FrameStats {
        edge_count: degree_sum / 2,
        min_degree: if s.is_empty() { 0 } else { min_degree },
    }
}

/// Parses the `.dcs` text format.
///
/// The first non-blank, non-comment line is the header `<n> <T>`; every
/// later such line is an edge `<t> <u> <v>`. Lines starting with `#` are
/// comments.
pub fn parse(text: &str) -> Result<TemporalGraph> {
    let mut header: Option<(usize, usize)> = None;
    let mut frames: Vec<Vec<Edge>> = Vec::new();
    let mut seen: Vec<HashSet<Edge>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let Some((n, t_count)) = header else {
            let parsed = match fields.as_slice() {
                [a, b] => a.parse::<usize>().ok().zip(b.parse::<usize>().ok()),
                _ => None,
            };
            match parsed {
                Some((n, t)) if n >= 1 && t >= 1 => {
                    header = Some((n, t));
                    frames = vec![Vec::new(); t];
                    seen = vec![HashSet::new(); t];
                }
                _ => return Err(Error::MalformedHeader { line: line_no }),
            }
            continue;
        };
        let [t, u, v] = fields.as_slice() else {
            return Err(Error::MalformedLine { line: line_no });
        };
        let (Ok(t), Ok(u), Ok(v)) = (t.parse::<usize>(), u.parse::<usize>(), v.parse::<usize>())
        else {
            return Err(Error::MalformedLine { line: line_no });
        };
        if t >= t_count || u >= n || v >= n {
            return Err(Error::EdgeOutOfRange { line: line_no });
        }
        if u == v {
            return Err(Error::SelfLoop { line: line_no });
        }
        let e = canonical_edge(u, v);
        if !seen[t].insert(e) {
            return Err(Error::DuplicateEdge { line: line_no });
        }
        frames[t].push(e);
    }

    let Some((n, _)) = header else {
        return Err(Error::MalformedHeader {
            line: text.lines().count().max(1),
        });
    };
    TemporalGraph::new(n, frames)
}

/// Canonical `.dcs` bytes: header, then edges sorted by `(t, u, v)` with `u < v`.
pub fn serialize(g: &TemporalGraph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.frames.iter().map(|f| f.edges.len()).sum::<usize>());
    out.push_str(&format!("{} {}\n", g.n, g.frames.len()));
    for (t, f) in g.frames.iter().enumerate() {
        for &(u, v) in &f.edges {
            out.push_str(&format!("{t} {u} {v}\n"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = "3 2\n0 0 1\n1 0 1\n1 1 2\n";

    #[test]
    fn parses_small_example() {
        let g = parse(SMALL).unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.num_frames(), 2);
        assert_eq!(g.frames()[0].edges(), &[(0, 1)]);
        assert_eq!(g.frames()[1].edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parses_degenerate_graph() {
        let g = parse("1 1\n").unwrap();
        assert_eq!((g.n(), g.num_frames()), (1, 1));
        assert!(g.frames()[0].edges().is_empty());
        assert_eq!(serialize(&g), "1 1\n");
    }

    #[test]
    fn tolerates_comments_and_whitespace() {
        let g = parse("# header next\n\n  3   2 \n# edges\n0 1 0\n\n1  0 1\n1 2 1\n").unwrap();
        assert_eq!(g, parse(SMALL).unwrap());
    }

    #[test]
    fn rejects_bad_input_with_line_numbers() {
        assert_eq!(parse("2 1\n0 1 1\n").unwrap_err(), Error::SelfLoop { line: 2 });
        assert_eq!(parse("x 1\n").unwrap_err(), Error::MalformedHeader { line: 1 });
        assert_eq!(parse("0 1\n").unwrap_err(), Error::MalformedHeader { line: 1 });
        assert_eq!(parse("3 1 4\n").unwrap_err(), Error::MalformedHeader { line: 1 });
        assert_eq!(parse("").unwrap_err(), Error::MalformedHeader { line: 1 });
        assert_eq!(parse("2 1\n0 0 2\n").unwrap_err(), Error::EdgeOutOfRange { line: 2 });
        assert_eq!(parse("2 1\n1 0 1\n").unwrap_err(), Error::EdgeOutOfRange { line: 2 });
        assert_eq!(
            parse("3 1\n0 0 1\n# c\n0 1 0\n").unwrap_err(),
            Error::DuplicateEdge { line: 4 }
        );
        assert_eq!(parse("3 1\n0 0\n").unwrap_err(), Error::MalformedLine { line: 2 });
    }

    #[test]
    fn serializes_canonically() {
        let g = TemporalGraph::new(2, vec![vec![(1, 0)]]).unwrap();
        assert_eq!(serialize(&g), "2 1\n0 0 1\n");
        let g = parse(SMALL).unwrap();
        assert_eq!(serialize(&g), SMALL);
        assert_eq!(parse(&serialize(&g)).unwrap(), g);
    }

    #[test]
    fn induced_stats_examples() {
        let g = parse(SMALL).unwrap();
        let all = VertexSet::new([0, 1, 2]);
        assert_eq!(
            induced_stats(&g, 1, &all).unwrap(),
            FrameStats { edge_count: 2, min_degree: 1 }
        );
        assert_eq!(
            induced_stats(&g, 0, &VertexSet::new([2])).unwrap(),
            FrameStats { edge_count: 0, min_degree: 0 }
        );
        assert_eq!(
            induced_stats(&g, 0, &VertexSet::new([0, 1])).unwrap(),
            FrameStats { edge_count: 1, min_degree: 1 }
        );
        assert_eq!(
            induced_stats(&g, 2, &all).unwrap_err(),
            Error::FrameIndexOutOfRange { index: 2, frames: 2 }
        );
        assert_eq!(
            induced_stats(&g, 0, &VertexSet::default()).unwrap_err(),
            Error::EmptySolution
        );
    }

    #[test]
    fn union_edges_are_deduplicated() {
        let g = parse(SMALL).unwrap();
        assert_eq!(g.union_edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn constructor_rejects_invalid_frames() {
        assert!(TemporalGraph::new(0, vec![vec![]]).is_err());
        assert!(TemporalGraph::new(2, vec![]).is_err());
        assert!(TemporalGraph::new(2, vec![vec![(0, 2)]]).is_err());
        assert!(TemporalGraph::new(2, vec![vec![(1, 1)]]).is_err());
        assert!(TemporalGraph::new(2, vec![vec![(0, 1), (1, 0)]]).is_err());
    }

    #[test]
    fn adjacency_matches_edges() {
        let g = TemporalGraph::new(4, vec![vec![(2, 0), (0, 1), (3, 0), (1, 2)]]).unwrap();
        let f = &g.frames()[0];
        assert_eq!(f.neighbors(0), &[1, 2, 3]);
        assert_eq!(f.neighbors(2), &[0, 1]);
        assert_eq!(f.degree(3), 1);
        assert!(f.has_edge(2, 1));
        assert!(!f.has_edge(3, 1));
        assert_eq!((f.min_degree(), f.max_degree()), (1, 3));
    }
}
