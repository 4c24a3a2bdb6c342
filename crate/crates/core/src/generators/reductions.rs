//! Deterministic constructions: the star-sequence gap family and the
//! reductions from MinRep, Maximum Independent Set, Set Cover and
//! hypergraph vertex cover.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Edge, TemporalGraph};

/// `T = n - 1` frames; frame `k - 1` (for `k = 1..n`) is the star centered
/// at vertex `k` with leaves `0..k`.
pub fn gen_gap_instance(n: usize) -> Result<TemporalGraph> {
    if n < 2 {
        return Err(Error::InvalidParams(format!("gap instance needs n >= 2, got {n}")));
    }
    let frames = (1..n).map(|k| (0..k).map(|i| (i, k)).collect()).collect();
    TemporalGraph::new(n, frames)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Superedge {
    pub a_part: usize,
    pub b_part: usize,
    /// Underlying `(a, b)` edges in `A_i x B_j`, sorted.
    pub edges: Vec<Edge>,
}

/// Label-cover instance in MinRep form.
///
/// The parts of both sides together partition the vertex ids `0..N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinRepInstance {
    a_parts: Vec<Vec<usize>>,
    b_parts: Vec<Vec<usize>>,
    edges: Vec<Edge>,
    superedges: Vec<Superedge>,
    // vertex id -> (is_a, part index)
    owner: Vec<(bool, usize)>,
}

impl MinRepInstance {
    /// `edges` are `(a, b)` pairs with `a` on the A side and `b` on the B side.
    pub fn new(a_parts: Vec<Vec<usize>>, b_parts: Vec<Vec<usize>>, edges: Vec<Edge>) -> Result<Self> {
        let total: usize = a_parts.iter().chain(&b_parts).map(Vec::len).sum();
        let mut owner: Vec<Option<(bool, usize)>> = vec![None; total];
        for (is_a, parts) in [(true, &a_parts), (false, &b_parts)] {
            for (i, part) in parts.iter().enumerate() {
                for &v in part {
                    match owner.get_mut(v) {
                        Some(slot @ None) => *slot = Some((is_a, i)),
                        Some(Some(_)) => {
                            return Err(Error::InvalidMinRep(format!("vertex {v} is in two parts")))
                        }
                        None => {
                            return Err(Error::InvalidMinRep(format!(
                                "vertex ids must be exactly 0..{total}, found {v}"
                            )))
                        }
                    }
                }
            }
        }
        let owner: Vec<(bool, usize)> = owner.into_iter().map(|o| o.unwrap()).collect();

        let mut edges = edges;
        edges.sort_unstable();
        edges.dedup();
        let mut grouped: BTreeMap<(usize, usize), Vec<Edge>> = BTreeMap::new();
        for &(a, b) in &edges {
            match (owner.get(a), owner.get(b)) {
                (Some(&(true, i)), Some(&(false, j))) => grouped.entry((i, j)).or_default().push((a, b)),
                _ => {
                    return Err(Error::InvalidMinRep(format!(
                        "edge ({a}, {b}) does not run from A to B"
                    )))
                }
            }
        }
        let superedges = grouped
            .into_iter()
            .map(|((a_part, b_part), edges)| Superedge { a_part, b_part, edges })
            .collect();
        Ok(MinRepInstance {
            a_parts,
            b_parts,
            edges,
            superedges,
            owner,
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.owner.len()
    }

    pub fn a_parts(&self) -> &[Vec<usize>] {
        &self.a_parts
    }

    pub fn b_parts(&self) -> &[Vec<usize>] {
        &self.b_parts
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn superedges(&self) -> &[Superedge] {
        &self.superedges
    }

    pub fn is_a_side(&self, v: usize) -> bool {
        self.owner[v].0
    }

    /// Human-readable label: `A<part>:<id>` or `B<part>:<id>`, parts 1-based.
    pub fn label(&self, v: usize) -> String {
        let (is_a, part) = self.owner[v];
        format!("{}{}:{}", if is_a { 'A' } else { 'B' }, part + 1, v)
    }
}

/// MinRep to DCS-MA. Vertices `0..N` are the MinRep vertices, then two
/// fresh vertices `u = N`, `v = N + 1`. Frame 0 is the single edge
/// `(u, v)`; frame `i + 1` holds exactly the edges of superedge `i`.
///
/// Returns the graph and a label per vertex.
pub fn reduce_minrep_to_ma(mr: &MinRepInstance) -> Result<(TemporalGraph, Vec<String>)> {
    if mr.superedges.is_empty() {
        return Err(Error::NoSuperedges);
    }
    let base = mr.num_vertices();
    let (u, v) = (base, base + 1);
    let mut frames = vec![vec![(u, v)]];
    frames.extend(mr.superedges.iter().map(|s| s.edges.clone()));
    let mut names: Vec<String> = (0..base).map(|w| mr.label(w)).collect();
    names.push("u".into());
    names.push("v".into());
    Ok((TemporalGraph::new(base + 2, frames)?, names))
}

/// Maximum Independent Set to DCS-AM: one frame per vertex `v`, in which
/// the neighbors of `v` are isolated and every non-neighbor is joined to `v`.
pub fn reduce_mis_to_am(graph: &TemporalGraph) -> Result<TemporalGraph> {
    if graph.num_frames() != 1 {
        return Err(Error::NotSingleFrame {
            frames: graph.num_frames(),
        });
    }
    let n = graph.n();
    let frame = &graph.frames()[0];
    if frame.edge_count() == n * (n - 1) / 2 {
        return Err(Error::CompleteGraph);
    }
    let frames = (0..n)
        .map(|center| {
            (0..n)
                .filter(|&w| w != center && !frame.has_edge(center, w))
                .map(|w| (center, w))
                .collect()
        })
        .collect();
    TemporalGraph::new(n, frames)
}

/// Set system over elements `0..n_elems`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetCoverInstance {
    n_elems: usize,
    sets: Vec<Vec<usize>>,
}

impl SetCoverInstance {
    pub fn new(n_elems: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut clean = Vec::with_capacity(sets.len());
        for (j, mut set) in sets.into_iter().enumerate() {
            set.sort_unstable();
            set.dedup();
            if let Some(&x) = set.last().filter(|&&x| x >= n_elems) {
                return Err(Error::InvalidSetSystem(format!(
                    "set {j} contains element {x} outside 0..{n_elems}"
                )));
            }
            clean.push(set);
        }
        Ok(SetCoverInstance { n_elems, sets: clean })
    }

    pub fn n_elems(&self) -> usize {
        self.n_elems
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn m(&self) -> usize {
        self.sets.len()
    }

    pub fn uncovered_elements(&self) -> Vec<usize> {
        let mut covered = vec![false; self.n_elems];
        for &x in self.sets.iter().flatten() {
            covered[x] = true;
        }
        (0..self.n_elems).filter(|&x| !covered[x]).collect()
    }
}

/// Set Cover to MCSS. Vertices: `s_1..s_m` are `0..m`, `x = m`, `y = m + 1`.
/// Frame 0 is the path `x, y, s_1, ..., s_m`; frame `i + 1` (element `i`)
/// is the path `y, s_1, ..., s_m` plus `(s_j, x)` for every set `j`
/// containing element `i`.
pub fn reduce_setcover_to_mcss(sc: &SetCoverInstance) -> Result<(TemporalGraph, Vec<String>)> {
    let missing = sc.uncovered_elements();
    if !missing.is_empty() {
        return Err(Error::Uncoverable(format!("elements {missing:?} are in no set")));
    }
    let m = sc.m();
    let (x, y) = (m, m + 1);
    let mut spine: Vec<Edge> = Vec::with_capacity(m);
    let mut prev = y;
    for s in 0..m {
        spine.push((prev, s));
        prev = s;
    }
    let mut frames = Vec::with_capacity(sc.n_elems + 1);
    let mut first = vec![(x, y)];
    first.extend(&spine);
    frames.push(first);
    for elem in 0..sc.n_elems {
        let mut edges = spine.clone();
        for (j, set) in sc.sets.iter().enumerate() {
            if set.binary_search(&elem).is_ok() {
                edges.push((j, x));
            }
        }
        frames.push(edges);
    }
    let mut names: Vec<String> = (1..=m).map(|j| format!("s{j}")).collect();
    names.push("x".into());
    names.push("y".into());
    Ok((TemporalGraph::new(m + 2, frames)?, names))
}

/// Vertex cover of a `k`-uniform hypergraph on vertices `0..num_vertices`
/// as Set Cover: elements are hyperedges, and vertex `v` contributes the
/// set of hyperedges incident to it.
pub fn ekvc_to_setcover(num_vertices: usize, hyperedges: &[Vec<usize>]) -> Result<SetCoverInstance> {
    let k = hyperedges.first().map_or(0, Vec::len);
    for e in hyperedges {
        let mut sorted = e.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if k < 2 || e.len() != k || sorted.len() != k {
            return Err(Error::NotUniform);
        }
        if let Some(&v) = e.iter().find(|&&v| v >= num_vertices) {
            return Err(Error::InvalidSetSystem(format!(
                "hyperedge vertex {v} outside 0..{num_vertices}"
            )));
        }
    }
    let mut sets = vec![Vec::new(); num_vertices];
    for (idx, e) in hyperedges.iter().enumerate() {
        for &v in e {
            sets[v].push(idx);
        }
    }
    SetCoverInstance::new(hyperedges.len(), sets)
}

/// `.names` sidecar text: one `<index> <label>` line per vertex.
pub fn names_to_text(names: &[String]) -> String {
    names
        .iter()
        .enumerate()
        .map(|(i, l)| format!("{i} {l}\n"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gap_instances() {
        let g = gen_gap_instance(3).unwrap();
        assert_eq!(g.to_edge_lists(), vec![vec![(0, 1)], vec![(0, 2), (1, 2)]]);
        let g = gen_gap_instance(4).unwrap();
        assert_eq!(g.frames()[2].edges(), &[(0, 3), (1, 3), (2, 3)]);
        let g = gen_gap_instance(2).unwrap();
        assert_eq!(g.to_edge_lists(), vec![vec![(0, 1)]]);
        assert!(gen_gap_instance(1).is_err());
    }

    fn tiny_minrep() -> MinRepInstance {
        // A_1 = {a1, a2} = {0, 1}, B_1 = {b1} = {2}
        MinRepInstance::new(vec![vec![0, 1]], vec![vec![2]], vec![(0, 2)]).unwrap()
    }

    #[test]
    fn minrep_superedges() {
        let mr = tiny_minrep();
        assert_eq!(mr.superedges().len(), 1);
        assert_eq!(mr.superedges()[0].edges, vec![(0, 2)]);
        let two = MinRepInstance::new(
            vec![vec![0], vec![1]],
            vec![vec![2], vec![3]],
            vec![(0, 2), (1, 3), (0, 3)],
        )
        .unwrap();
        assert_eq!(two.superedges().len(), 3);
    }

    #[test]
    fn minrep_validation() {
        assert!(MinRepInstance::new(vec![vec![0, 1]], vec![vec![1]], vec![]).is_err());
        assert!(MinRepInstance::new(vec![vec![0]], vec![vec![5]], vec![]).is_err());
        assert!(MinRepInstance::new(vec![vec![0]], vec![vec![1]], vec![(1, 0)]).is_err());
    }

    #[test]
    fn minrep_reduction_shape() {
        let (g, names) = reduce_minrep_to_ma(&tiny_minrep()).unwrap();
        assert_eq!((g.n(), g.num_frames()), (5, 2));
        assert_eq!(g.frames()[0].edges(), &[(3, 4)]);
        assert_eq!(g.frames()[1].edges(), &[(0, 2)]);
        assert_eq!(names, vec!["A1:0", "A1:1", "B1:2", "u", "v"]);

        let two = MinRepInstance::new(vec![vec![0], vec![1]], vec![vec![2]], vec![(0, 2), (1, 2)]).unwrap();
        let (g, _) = reduce_minrep_to_ma(&two).unwrap();
        assert_eq!(g.num_frames(), 3);
        assert_eq!(g.frames()[0].edge_count(), 1);

        let none = MinRepInstance::new(vec![vec![0]], vec![vec![1]], vec![]).unwrap();
        assert_eq!(reduce_minrep_to_ma(&none).unwrap_err(), Error::NoSuperedges);
    }

    #[test]
    fn mis_reduction_shape() {
        let path = TemporalGraph::new(3, vec![vec![(0, 1), (1, 2)]]).unwrap();
        let g = reduce_mis_to_am(&path).unwrap();
        assert_eq!(g.num_frames(), 3);
        assert!(g.frames()[1].edges().is_empty());
        assert_eq!(g.frames()[0].edges(), &[(0, 2)]);

        let empty = TemporalGraph::new(4, vec![vec![]]).unwrap();
        let g = reduce_mis_to_am(&empty).unwrap();
        for (v, f) in g.frames().iter().enumerate() {
            assert_eq!(f.edge_count(), 3);
            assert_eq!(f.degree(v), 3);
        }

        let k3 = TemporalGraph::new(3, vec![vec![(0, 1), (1, 2), (0, 2)]]).unwrap();
        assert_eq!(reduce_mis_to_am(&k3).unwrap_err(), Error::CompleteGraph);
        let two_frames = TemporalGraph::new(3, vec![vec![], vec![]]).unwrap();
        assert!(reduce_mis_to_am(&two_frames).is_err());
    }

    #[test]
    fn setcover_reduction_shape() {
        let sc = SetCoverInstance::new(1, vec![vec![0]]).unwrap();
        let (g, names) = reduce_setcover_to_mcss(&sc).unwrap();
        assert_eq!((g.n(), g.num_frames()), (3, 2));
        assert_eq!(names, vec!["s1", "x", "y"]);
        // frame 0: x-y, y-s1; frame 1: y-s1, s1-x
        assert_eq!(g.frames()[0].edges(), &[(0, 2), (1, 2)]);
        assert_eq!(g.frames()[1].edges(), &[(0, 1), (0, 2)]);

        let both = SetCoverInstance::new(1, vec![vec![0], vec![0]]).unwrap();
        let (g, _) = reduce_setcover_to_mcss(&both).unwrap();
        let x = 2;
        assert_eq!(g.frames()[1].degree(x), 2);
        assert_eq!(g.frames()[0].edge_count(), 3);

        let gap = SetCoverInstance::new(2, vec![vec![0]]).unwrap();
        assert!(matches!(reduce_setcover_to_mcss(&gap), Err(Error::Uncoverable(_))));
        assert!(SetCoverInstance::new(1, vec![vec![1]]).is_err());
    }

    #[test]
    fn ekvc_conversion() {
        let triangle = vec![vec![0, 1], vec![1, 2], vec![0, 2]];
        let sc = ekvc_to_setcover(3, &triangle).unwrap();
        assert_eq!(sc.n_elems(), 3);
        assert_eq!(sc.sets(), &[vec![0, 2], vec![0, 1], vec![1, 2]]);

        let single = ekvc_to_setcover(3, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(single.sets(), &[vec![0], vec![0], vec![0]]);

        let isolated = ekvc_to_setcover(3, &[vec![0, 1]]).unwrap();
        assert!(isolated.sets()[2].is_empty());

        assert_eq!(ekvc_to_setcover(3, &[vec![0, 1], vec![0, 1, 2]]).unwrap_err(), Error::NotUniform);
        assert_eq!(ekvc_to_setcover(3, &[vec![0]]).unwrap_err(), Error::NotUniform);
        assert_eq!(ekvc_to_setcover(3, &[vec![1, 1]]).unwrap_err(), Error::NotUniform);
    }

    #[test]
    fn names_text() {
        assert_eq!(names_to_text(&["x".into(), "y".into()]), "0 x\n1 y\n");
    }
}
