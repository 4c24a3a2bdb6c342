//! Exhaustive solvers used as ground truth.
//!
//! Vertex and set subsets are `u64` bitmasks, so every enumeration is
//! additionally capped at 63 items regardless of the budget.

use std::cmp::Ordering;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::generators::{MinRepInstance, SetCoverInstance};
use crate::graph::{FrameStats, TemporalGraph, VertexSet};
use crate::mcss::{check_connected_frames, DisjointSets, EdgeSolution};
use crate::objectives::{score, Fraction, ObjectiveKind, Score};

const MASK_BITS: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Cap on the number of items whose subsets are enumerated.
    pub max_vertices: usize,
    /// Cap on `|E|` for MCSS edge-subset enumeration.
    pub max_union_edges: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_vertices: 20,
            max_union_edges: 22,
        }
    }
}

impl OracleBudget {
    fn check(&self, what: &'static str, actual: usize, cap: usize) -> Result<()> {
        let cap = cap.min(MASK_BITS);
        if actual > cap {
            return Err(Error::BudgetExceeded {
                what,
                actual: actual as u64,
                cap: cap as u64,
            });
        }
        Ok(())
    }
}

/// All `k`-bit masks below `1 << n`, in increasing numeric order.
pub(crate) fn masks_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = 1u64 << n;
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut next = if k <= n { Some(first) } else { None };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            // Gosper's hack
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let succ = (((r ^ cur) >> 2) / c) | r;
            (succ < limit).then_some(succ)
        };
        Some(cur)
    })
}

/// Orders candidate subsets: higher value first, then fewer members, then
/// the lexicographically smaller member list. `Less` means `a` wins.
fn rank(a: (Fraction, u64), b: (Fraction, u64)) -> Ordering {
    b.0.cmp(&a.0)
        .then(a.1.count_ones().cmp(&b.1.count_ones()))
        .then_with(|| {
            let diff = a.1 ^ b.1;
            if diff == 0 {
                Ordering::Equal
            } else if a.1 & diff & diff.wrapping_neg() != 0 {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
}

fn adjacency_masks(g: &TemporalGraph) -> Vec<Vec<u64>> {
    g.frames()
        .iter()
        .map(|f| {
            (0..g.n())
                .map(|v| f.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
                .collect()
        })
        .collect()
}

/// Best nonempty vertex subset under `kind` by exhaustive enumeration.
/// Ties go to the smaller set, then the lexicographically smaller one.
pub fn exact_best(
    g: &TemporalGraph,
    kind: ObjectiveKind,
    budget: &OracleBudget,
) -> Result<(VertexSet, Score)> {
    kind.check_for(g.num_frames())?;
    budget.check("vertex count", g.n(), budget.max_vertices)?;
    let adj = adjacency_masks(g);
    let n = g.n();
    let best = (1u64..1u64 << n)
        .into_par_iter()
        .map_init(
            || Vec::with_capacity(adj.len()),
            |stats: &mut Vec<FrameStats>, mask| {
                stats.clear();
                for frame in &adj {
                    let mut sum = 0usize;
                    let mut min = usize::MAX;
                    let mut rest = mask;
                    while rest != 0 {
                        let v = rest.trailing_zeros() as usize;
                        rest &= rest - 1;
                        let d = (frame[v] & mask).count_ones() as usize;
                        sum += d;
                        min = min.min(d);
                    }
                    stats.push(FrameStats {
                        edge_count: sum / 2,
                        min_degree: min,
                    });
                }
                (kind.aggregate(stats, mask.count_ones() as usize), mask)
            },
        )
        .min_by(|a, b| rank(*a, *b))
        .expect("n >= 1 gives at least one subset");
    let set = VertexSet::from_mask(best.1);
    let sc = score(g, &set, kind)?;
    Ok((set, sc))
}

/// Minimum-cardinality edge set spanning every frame, by enumerating
/// union-edge subsets in increasing size.
pub fn exact_mcss(g: &TemporalGraph, budget: &OracleBudget) -> Result<EdgeSolution> {
    check_connected_frames(g)?;
    let union = g.union_edges();
    budget.check("union edge count", union.len(), budget.max_union_edges)?;
    let n = g.n();
    let frame_masks: Vec<u64> = g
        .frames()
        .iter()
        .map(|f| {
            f.edges().iter().fold(0u64, |m, e| {
                m | 1 << union.binary_search(e).expect("frame edge is in the union")
            })
        })
        .collect();
    let spans = |mask: u64| {
        frame_masks.iter().all(|&fm| {
            let inside = mask & fm;
            if (inside.count_ones() as usize) + 1 < n {
                return false;
            }
            let mut ds = DisjointSets::new(n);
            let mut rest = inside;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                ds.union(union[i].0, union[i].1);
            }
            ds.components() == 1
        })
    };
    for k in n.saturating_sub(1)..=union.len() {
        if let Some(mask) = masks_of_size(union.len(), k).find(|&m| spans(m)) {
            return Ok(EdgeSolution::new(
                (0..union.len()).filter(|&i| mask >> i & 1 == 1).map(|i| union[i]),
            ));
        }
    }
    unreachable!("the full union edge set spans every connected frame")
}

/// Minimum `|A'| + |B'|` covering every superedge.
pub fn exact_minrep(mr: &MinRepInstance, budget: &OracleBudget) -> Result<usize> {
    let n = mr.num_vertices();
    budget.check("MinRep vertex count", n, budget.max_vertices)?;
    let mut needs: Vec<Vec<u64>> = Vec::with_capacity(mr.superedges().len());
    for (i, s) in mr.superedges().iter().enumerate() {
        if s.edges.is_empty() {
            return Err(Error::Uncoverable(format!("superedge {i} has no edges")));
        }
        needs.push(s.edges.iter().map(|&(a, b)| 1u64 << a | 1u64 << b).collect());
    }
    #[allow(clippy::manual_contains)]
    let covers = |mask: u64| {
        needs
            .iter()
            .all(|alts| alts.iter().any(|&pair| mask & pair == pair))
    };
    (0..=n)
        .find(|&k| masks_of_size(n, k).any(covers))
        .ok_or_else(|| Error::Uncoverable("no labeling covers every superedge".into()))
}

/// Maximum independent set size of a single-frame graph.
pub fn exact_mis(graph: &TemporalGraph, budget: &OracleBudget) -> Result<usize> {
    if graph.num_frames() != 1 {
        return Err(Error::NotSingleFrame {
            frames: graph.num_frames(),
        });
    }
    let n = graph.n();
    budget.check("vertex count", n, budget.max_vertices)?;
    let adj = &adjacency_masks(graph)[0];
    let independent = |mask: u64| {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if adj[v] & mask != 0 {
                return false;
            }
        }
        true
    };
    Ok((0..=n)
        .rev()
        .find(|&k| masks_of_size(n, k).any(independent))
        .unwrap_or(0))
}

/// Minimum number of sets whose union is the universe.
pub fn exact_setcover(sc: &SetCoverInstance, budget: &OracleBudget) -> Result<usize> {
    let m = sc.m();
    budget.check("set count", m, budget.max_vertices)?;
    let missing = sc.uncovered_elements();
    if !missing.is_empty() {
        return Err(Error::Uncoverable(format!("elements {missing:?} are in no set")));
    }
    let words = sc.n_elems().div_ceil(64);
    let bits: Vec<Vec<u64>> = sc
        .sets()
        .iter()
        .map(|set| {
            let mut w = vec![0u64; words];
            for &x in set {
                w[x / 64] |= 1 << (x % 64);
            }
            w
        })
        .collect();
    let full: Vec<u64> = (0..words)
        .map(|i| {
            let hi = (sc.n_elems() - i * 64).min(64);
            if hi == 64 {
                u64::MAX
            } else {
                (1u64 << hi) - 1
            }
        })
        .collect();
    let covers = |mask: u64| {
        let mut acc = vec![0u64; words];
        let mut rest = mask;
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            for (a, b) in acc.iter_mut().zip(&bits[j]) {
                *a |= b;
            }
        }
        acc == full
    };
    (0..=m)
        .find(|&k| masks_of_size(m, k).any(covers))
        .ok_or_else(|| Error::Uncoverable("sets do not cover the universe".into()))
}
