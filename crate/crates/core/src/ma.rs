//! Approximation algorithms for DCS-MA, the problem of maximizing
//! `min_t |E_t[S]| / |S|`.
//!
//! * [`greedy_cover`] adds vertex pairs until every frame has an induced edge.
//! * [`best_with_all`] keeps the better of the greedy set and `V`; its
//!   ratio is at most `sqrt(2 n ln T)`.
//! * [`subset_search`] and [`partition_search`] cover small optima and
//!   huge `T`; [`composite_ma`] takes the best of everything and stays
//!   within `n^{2/3}`.

use std::cmp::Ordering;
use std::time::Instant;

use crate::error::Result;
use crate::graph::{TemporalGraph, VertexSet};
use crate::mcss::frames_per_union_edge;
use crate::objectives::{ma_fraction, score, Fraction, ObjectiveKind};
use crate::report::SolveReport;

/// Candidate order shared by every MA solver: higher value, then fewer
/// vertices, then the lexicographically smaller member list.
fn compare(a: (Fraction, &VertexSet), b: (Fraction, &VertexSet)) -> Ordering {
    b.0.cmp(&a.0)
        .then(a.1.len().cmp(&b.1.len()))
        .then_with(|| a.1.cmp(b.1))
}

struct Best {
    value: Fraction,
    set: VertexSet,
}

impl Best {
    fn offer(slot: &mut Option<Best>, value: Fraction, set: VertexSet) {
        let replace = match slot {
            None => true,
            Some(b) => compare((value, &set), (b.value, &b.set)) == Ordering::Less,
        };
        if replace {
            *slot = Some(Best { value, set });
        }
    }
}

fn finish(
    g: &TemporalGraph,
    algorithm: &str,
    solution: VertexSet,
    started: Instant,
    trace: Option<Vec<usize>>,
    candidates: Vec<(String, num_rational::BigRational)>,
) -> Result<SolveReport> {
    let score = score(g, &solution, ObjectiveKind::MA)?;
    Ok(SolveReport {
        algorithm: algorithm.to_string(),
        solution,
        score,
        frames_covered_per_iteration: trace,
        wall_time: started.elapsed(),
        seed: None,
        zero_score_instance: g.has_edgeless_frame(),
        candidates,
    })
}

struct FrameBits {
    words: usize,
}

impl FrameBits {
    fn new(frames: usize) -> Self {
        FrameBits { words: frames.div_ceil(64) }
    }

    fn zeros(&self) -> Vec<u64> {
        vec![0; self.words]
    }

    fn set(bits: &mut [u64], t: usize) {
        bits[t / 64] |= 1 << (t % 64);
    }

    fn clear(bits: &mut [u64], t: usize) {
        bits[t / 64] &= !(1 << (t % 64));
    }

    fn get(bits: &[u64], t: usize) -> bool {
        bits[t / 64] >> (t % 64) & 1 == 1
    }
}

/// Greedy frame cover: starting from the empty set, add the pair `{u, v}`
/// that newly covers the most frames (a frame is covered once the set
/// induces an edge in it), lexicographically smallest pair on ties.
///
/// On instances with an edgeless frame the result is `V` with score 0 and
/// `zero_score_instance` set.
pub fn greedy_cover(g: &TemporalGraph) -> Result<SolveReport> {
    let started = Instant::now();
    let n = g.n();
    if g.has_edgeless_frame() {
        return finish(g, "greedy-ma", VertexSet::all(n), started, Some(Vec::new()), Vec::new());
    }
    let frames = g.num_frames();
    let bits = FrameBits::new(frames);
    let union = g.union_edges();
    let owners = frames_per_union_edge(g);

    let mut uncovered = bits.zeros();
    for t in 0..frames {
        FrameBits::set(&mut uncovered, t);
    }
    let mut remaining = frames;
    // touched[w]: frames in which w is adjacent to the current set
    let mut touched: Vec<Vec<u64>> = vec![bits.zeros(); n];
    let mut chosen = vec![false; n];
    let mut trace = Vec::new();

    while remaining > 0 {
        let mut best: Option<(usize, usize, usize)> = None;
        let mut edge_cursor = 0;
        for u in 0..n {
            for v in u + 1..n {
                let mut gain: usize = touched[u]
                    .iter()
                    .zip(&touched[v])
                    .zip(&uncovered)
                    .map(|((a, b), c)| ((a | b) & c).count_ones() as usize)
                    .sum();
                while edge_cursor < union.len() && union[edge_cursor] < (u, v) {
                    edge_cursor += 1;
                }
                if edge_cursor < union.len() && union[edge_cursor] == (u, v) {
                    gain += owners[edge_cursor]
                        .iter()
                        .filter(|&&t| {
                            FrameBits::get(&uncovered, t)
                                && !FrameBits::get(&touched[u], t)
                                && !FrameBits::get(&touched[v], t)
                        })
                        .count();
                }
                if gain > 0 && best.is_none_or(|(_, _, b)| gain > b) {
                    best = Some((u, v, gain));
                }
            }
        }
        let (u, v, gain) = best.expect("every uncovered frame has an edge");

        let mut newly = Vec::with_capacity(gain);
        for t in 0..frames {
            if FrameBits::get(&uncovered, t)
                && (FrameBits::get(&touched[u], t)
                    || FrameBits::get(&touched[v], t)
                    || g.frames()[t].has_edge(u, v))
            {
                newly.push(t);
            }
        }
        debug_assert_eq!(newly.len(), gain);
        for &t in &newly {
            FrameBits::clear(&mut uncovered, t);
        }
        remaining -= newly.len();
        trace.push(newly.len());

        for x in [u, v] {
            if chosen[x] {
                continue;
            }
            chosen[x] = true;
            for t in 0..frames {
                if FrameBits::get(&uncovered, t) {
                    for &w in g.frames()[t].neighbors(x) {
                        FrameBits::set(&mut touched[w], t);
                    }
                }
            }
        }
    }

    let solution = VertexSet::new((0..n).filter(|&v| chosen[v]));
    finish(g, "greedy-ma", solution, started, Some(trace), Vec::new())
}

/// The better of `V` and the greedy cover under MA; `V` wins ties.
pub fn best_with_all(g: &TemporalGraph) -> Result<SolveReport> {
    let started = Instant::now();
    let all = VertexSet::all(g.n());
    let greedy = greedy_cover(g)?;
    let all_value = ma_fraction(g, &all)?;
    let greedy_value = ma_fraction(g, &greedy.solution)?;
    let candidates = vec![
        ("all-vertices".to_string(), all_value.to_big()),
        ("greedy-ma".to_string(), greedy_value.to_big()),
    ];
    let trace = greedy.frames_covered_per_iteration;
    let solution = if greedy_value > all_value {
        greedy.solution
    } else {
        all
    };
    finish(g, "best-with-all", solution, started, trace, candidates)
}

/// `max(2, floor(log_n T))`, capped at `n`.
pub fn subset_size_bound(n: usize, frames: usize) -> usize {
    let mut b = 0usize;
    if n >= 2 {
        let mut power: u128 = 1;
        while power * n as u128 <= frames as u128 {
            power *= n as u128;
            b += 1;
        }
    }
    b.max(2).min(n)
}

/// Visits every `k`-subset of `0..n` in lexicographic order.
fn for_each_combination(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        visit(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn small_set_ma(g: &TemporalGraph, members: &[usize]) -> Fraction {
    let min_edges = g
        .frames()
        .iter()
        .map(|f| {
            let mut count = 0u64;
            for (i, &u) in members.iter().enumerate() {
                for &v in &members[i + 1..] {
                    if f.has_edge(u, v) {
                        count += 1;
                    }
                }
            }
            count
        })
        .min()
        .unwrap_or(0);
    Fraction::new(min_edges, members.len() as u64)
}

/// Best set among all subsets of size at most [`subset_size_bound`].
pub fn subset_search(g: &TemporalGraph) -> Result<SolveReport> {
    let started = Instant::now();
    if g.has_edgeless_frame() {
        return finish(g, "subset-search", VertexSet::all(g.n()), started, None, Vec::new());
    }
    let bound = subset_size_bound(g.n(), g.num_frames());
    let mut best: Option<Best> = None;
    for k in 1..=bound {
        for_each_combination(g.n(), k, |members| {
            let value = small_set_ma(g, members);
            if best.as_ref().is_none_or(|b| value >= b.value) {
                Best::offer(&mut best, value, VertexSet::new(members.iter().copied()));
            }
        });
    }
    let best = best.expect("n >= 1 yields a singleton");
    finish(g, "subset-search", best.set, started, None, Vec::new())
}

/// `min(n, 2 * ceil(ln T))`, at least 1.
pub fn partition_parts(n: usize, frames: usize) -> usize {
    let ceil_ln = (frames as f64).ln().ceil().max(0.0) as usize;
    (2 * ceil_ln).clamp(1, n)
}

/// Contiguous index blocks of `0..n` whose sizes differ by at most one.
pub fn balanced_blocks(n: usize, parts: usize) -> Vec<std::ops::Range<usize>> {
    let (base, extra) = (n / parts, n % parts);
    let mut start = 0;
    (0..parts)
        .map(|i| {
            let len = base + usize::from(i < extra);
            let r = start..start + len;
            start += len;
            r
        })
        .collect()
}

/// Splits `V` into [`partition_parts`] balanced contiguous blocks and
/// evaluates every nonempty union of blocks.
pub fn partition_search(g: &TemporalGraph) -> Result<SolveReport> {
    let started = Instant::now();
    let n = g.n();
    if g.has_edgeless_frame() {
        return finish(g, "partition-search", VertexSet::all(n), started, None, Vec::new());
    }
    let r = partition_parts(n, g.num_frames());
    assert!(r < 64, "2^{r} block unions are not enumerable");
    let blocks = balanced_blocks(n, r);
    let mut block_of = vec![0usize; n];
    for (i, b) in blocks.iter().enumerate() {
        for v in b.clone() {
            block_of[v] = i;
        }
    }
    // cross[t][i * r + j]: edges of frame t between blocks i <= j
    let cross: Vec<Vec<u64>> = g
        .frames()
        .iter()
        .map(|f| {
            let mut c = vec![0u64; r * r];
            for &(u, v) in f.edges() {
                let (a, b) = (block_of[u].min(block_of[v]), block_of[u].max(block_of[v]));
                c[a * r + b] += 1;
            }
            c
        })
        .collect();

    let mut best: Option<Best> = None;
    for mask in 1u64..1u64 << r {
        let size: usize = (0..r).filter(|&i| mask >> i & 1 == 1).map(|i| blocks[i].len()).sum();
        let min_edges = cross
            .iter()
            .map(|c| {
                let mut total = 0;
                for i in (0..r).filter(|&i| mask >> i & 1 == 1) {
                    for j in (i..r).filter(|&j| mask >> j & 1 == 1) {
                        total += c[i * r + j];
                    }
                }
                total
            })
            .min()
            .unwrap_or(0);
        let value = Fraction::new(min_edges, size as u64);
        if best.as_ref().is_none_or(|b| value >= b.value) {
            let set = VertexSet::new(
                (0..r)
                    .filter(|&i| mask >> i & 1 == 1)
                    .flat_map(|i| blocks[i].clone()),
            );
            Best::offer(&mut best, value, set);
        }
    }
    let best = best.expect("r >= 1 yields a union");
    finish(g, "partition-search", best.set, started, None, Vec::new())
}

/// Best of the greedy cover, subset search, partition search and `V`.
pub fn composite_ma(g: &TemporalGraph) -> Result<SolveReport> {
    let started = Instant::now();
    let greedy = greedy_cover(g)?;
    if g.has_edgeless_frame() {
        let trace = greedy.frames_covered_per_iteration;
        return finish(g, "composite-ma", VertexSet::all(g.n()), started, trace, Vec::new());
    }
    let subsets = subset_search(g)?;
    let partition = partition_search(g)?;
    let all = VertexSet::all(g.n());
    let all_value = ma_fraction(g, &all)?;

    let mut candidates = Vec::new();
    let mut best: Option<Best> = None;
    for (name, set) in [
        ("greedy-ma", greedy.solution),
        ("subset-search", subsets.solution),
        ("partition-search", partition.solution),
        ("all-vertices", all),
    ] {
        let value = if name == "all-vertices" { all_value } else { ma_fraction(g, &set)? };
        candidates.push((name.to_string(), value.to_big()));
        Best::offer(&mut best, value, set);
    }
    let best = best.expect("four candidates");
    finish(
        g,
        "composite-ma",
        best.set,
        started,
        greedy.frames_covered_per_iteration,
        candidates,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::gen_gap_instance;
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn shared_edge() -> TemporalGraph {
        TemporalGraph::new(3, vec![vec![(0, 1)], vec![(0, 1), (1, 2)]]).unwrap()
    }

    #[test]
    fn greedy_traces() {
        let g = TemporalGraph::new(3, vec![vec![(0, 1)], vec![(0, 2), (1, 2)]]).unwrap();
        let r = greedy_cover(&g).unwrap();
        assert_eq!(r.solution, VertexSet::all(3));
        assert_eq!(r.score.value, q(1, 3));
        assert_eq!(r.frames_covered_per_iteration, Some(vec![1, 1]));

        let r = greedy_cover(&shared_edge()).unwrap();
        assert_eq!(r.solution, VertexSet::new([0, 1]));
        assert_eq!(r.score.value, q(1, 2));
        assert_eq!(r.frames_covered_per_iteration, Some(vec![2]));

        let single = TemporalGraph::new(4, vec![vec![(2, 3)]]).unwrap();
        let r = greedy_cover(&single).unwrap();
        assert_eq!((r.solution, r.score.value), (VertexSet::new([2, 3]), q(1, 2)));
    }

    #[test]
    fn greedy_flags_edgeless_frames() {
        let g = TemporalGraph::new(3, vec![vec![(0, 1)], vec![]]).unwrap();
        let r = greedy_cover(&g).unwrap();
        assert!(r.zero_score_instance);
        assert_eq!((r.solution, r.score.value), (VertexSet::all(3), q(0, 1)));
    }

    #[test]
    fn greedy_uses_adjacency_to_chosen_vertices() {
        // after picking (0,1) for frames 0 and 1, frame 2 is covered by
        // adding any neighbor of 0 or 1; pair (0,2) is the smallest such
        let g = TemporalGraph::new(
            5,
            vec![vec![(0, 1)], vec![(0, 1)], vec![(1, 2), (3, 4)]],
        )
        .unwrap();
        let r = greedy_cover(&g).unwrap();
        assert_eq!(r.solution, VertexSet::new([0, 1, 2]));
        assert_eq!(r.frames_covered_per_iteration, Some(vec![2, 1]));
    }

    #[test]
    fn best_with_all_examples() {
        let r = best_with_all(&shared_edge()).unwrap();
        assert_eq!((r.solution, r.score.value), (VertexSet::new([0, 1]), q(1, 2)));

        let k4 = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let r = best_with_all(&TemporalGraph::new(4, vec![k4]).unwrap()).unwrap();
        assert_eq!((r.solution, r.score.value), (VertexSet::all(4), q(3, 2)));

        let r = best_with_all(&TemporalGraph::new(3, vec![vec![(0, 1)], vec![]]).unwrap()).unwrap();
        assert!(r.zero_score_instance);
        assert_eq!((r.solution, r.score.value), (VertexSet::all(3), q(0, 1)));
    }

    #[test]
    fn subset_bound_arithmetic() {
        assert_eq!(subset_size_bound(3, 2), 2);
        assert_eq!(subset_size_bound(5, 5), 2);
        assert_eq!(subset_size_bound(3, 27), 3);
        assert_eq!(subset_size_bound(3, 26), 2);
        assert_eq!(subset_size_bound(4, 1 << 20), 4);
        assert_eq!(subset_size_bound(1, 10), 1);
    }

    #[test]
    fn subset_search_example() {
        let r = subset_search(&shared_edge()).unwrap();
        assert_eq!((r.solution, r.score.value), (VertexSet::new([0, 1]), q(1, 2)));
    }

    #[test]
    fn combinations_are_lexicographic() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push(c.to_vec()));
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
        let mut count = 0;
        for_each_combination(3, 0, |_| count += 1);
        assert_eq!(count, 1);
        for_each_combination(2, 3, |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn partition_arithmetic() {
        assert_eq!(partition_parts(3, 2), 2);
        assert_eq!(partition_parts(100, 2), 2);
        assert_eq!(partition_parts(100, 3), 4);
        assert_eq!(partition_parts(100, 1), 1);
        assert_eq!(partition_parts(3, 1_000_000), 3);
        assert_eq!(balanced_blocks(3, 2), vec![0..2, 2..3]);
        assert_eq!(balanced_blocks(100, 2), vec![0..50, 50..100]);
        assert_eq!(balanced_blocks(7, 3), vec![0..3, 3..5, 5..7]);
    }

    #[test]
    fn partition_search_example() {
        let r = partition_search(&shared_edge()).unwrap();
        assert_eq!((r.solution, r.score.value), (VertexSet::new([0, 1]), q(1, 2)));
    }

    #[test]
    fn composite_examples() {
        let r = composite_ma(&shared_edge()).unwrap();
        assert_eq!((r.solution, r.score.value), (VertexSet::new([0, 1]), q(1, 2)));
        assert_eq!(r.candidates.len(), 4);

        let r = composite_ma(&gen_gap_instance(4).unwrap()).unwrap();
        assert_eq!((r.solution, r.score.value), (VertexSet::all(4), q(1, 4)));

        let r = composite_ma(&TemporalGraph::new(3, vec![vec![(0, 1)], vec![]]).unwrap()).unwrap();
        assert!(r.zero_score_instance);
        assert_eq!((r.solution, r.score.value), (VertexSet::all(3), q(0, 1)));
        let edgeless = TemporalGraph::new(3, vec![vec![]]).unwrap();
        assert_eq!(subset_search(&edgeless).unwrap().solution, VertexSet::all(3));
        assert_eq!(partition_search(&edgeless).unwrap().solution, VertexSet::all(3));
    }
}
