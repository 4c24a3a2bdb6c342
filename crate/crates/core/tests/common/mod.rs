#![allow(dead_code)]

use dcs_core::generators::rng::SplitMix64;
use dcs_core::{Edge, TemporalGraph, VertexSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::sample::Index;

pub fn pairs(n: usize) -> Vec<Edge> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

fn from_masks(n: usize, masks: &[Vec<bool>]) -> TemporalGraph {
    let all = pairs(n);
    let frames = masks
        .iter()
        .map(|m| all.iter().zip(m).filter(|(_, &b)| b).map(|(&e, _)| e).collect())
        .collect();
    TemporalGraph::new(n, frames).unwrap()
}

/// Random sequence with `n` in `1..=max_n`, `T` in `1..=max_t`.
pub fn graph(max_n: usize, max_t: usize) -> impl Strategy<Value = TemporalGraph> {
    (1..=max_n, 1..=max_t).prop_flat_map(|(n, t)| {
        let p = n * (n - 1) / 2;
        prop::collection::vec(prop::collection::vec(any::<bool>(), p), t)
            .prop_map(move |m| from_masks(n, &m))
    })
}

/// Like [`graph`] with `n >= 2`, and an edge forced into every frame.
pub fn non_edgeless(max_n: usize, t_range: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = TemporalGraph> {
    (2..=max_n, t_range).prop_flat_map(|(n, t)| {
        let p = n * (n - 1) / 2;
        (prop::collection::vec(prop::collection::vec(any::<bool>(), p), t), prop::collection::vec(any::<Index>(), t))
            .prop_map(move |(mut m, picks)| {
                for (frame, pick) in m.iter_mut().zip(picks) {
                    if !frame.iter().any(|&b| b) {
                        frame[pick.index(p)] = true;
                    }
                }
                from_masks(n, &m)
            })
    })
}

/// Every frame a random spanning tree plus extra edges with probability 1/5.
pub fn connected(max_n: usize, max_t: usize) -> impl Strategy<Value = TemporalGraph> {
    (1..=max_n, 1..=max_t).prop_flat_map(|(n, t)| {
        let p = n * (n - 1) / 2;
        let frame = (
            prop::collection::vec(any::<Index>(), n.saturating_sub(1)),
            prop::collection::vec(prop::bool::weighted(0.2), p),
        );
        prop::collection::vec(frame, t).prop_map(move |frames| {
            let all = pairs(n);
            let edges = frames
                .into_iter()
                .map(|(parents, extra)| {
                    let mut es: Vec<Edge> = parents
                        .iter()
                        .enumerate()
                        .map(|(i, ix)| (ix.index(i + 1), i + 1))
                        .collect();
                    es.extend(all.iter().zip(&extra).filter(|(_, &b)| b).map(|(&e, _)| e));
                    es.sort_unstable();
                    es.dedup();
                    es
                })
                .collect();
            TemporalGraph::new(n, edges).unwrap()
        })
    })
}

pub fn with_subset<S: Strategy<Value = TemporalGraph>>(s: S) -> impl Strategy<Value = (TemporalGraph, VertexSet)> {
    s.prop_flat_map(|g| {
        let n = g.n();
        (Just(g), prop::collection::vec(any::<bool>(), n)).prop_map(|(g, bits)| {
            let mut members: Vec<usize> = (0..g.n()).filter(|&v| bits[v]).collect();
            if members.is_empty() {
                members.push(0);
            }
            (g, VertexSet::new(members))
        })
    })
}

/// Independent density draw per frame pair.
pub fn random_instance(rng: &mut SplitMix64, n: usize, frames: usize, p: f64) -> TemporalGraph {
    let all = pairs(n);
    let edges = (0..frames)
        .map(|_| all.iter().copied().filter(|_| rng.bernoulli(p)).collect())
        .collect();
    TemporalGraph::new(n, edges).unwrap()
}

pub fn random_connected(rng: &mut SplitMix64, n: usize, frames: usize, extra_p: f64, max_edges: usize) -> TemporalGraph {
    let all = pairs(n);
    loop {
        let edges: Vec<Vec<Edge>> = (0..frames)
            .map(|_| {
                let mut es: Vec<Edge> = (1..n).map(|v| (rng.below(v as u64) as usize, v)).collect();
                es.extend(all.iter().copied().filter(|_| rng.bernoulli(extra_p)));
                es.sort_unstable();
                es.dedup();
                es
            })
            .collect();
        let g = TemporalGraph::new(n, edges).unwrap();
        if g.union_edges().len() <= max_edges {
            return g;
        }
    }
}

pub fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A rational no larger than `ln x`.
pub fn ln_lower(x: f64) -> BigRational {
    BigRational::from_float(x.ln() - 1e-9).unwrap()
}

/// A rational no smaller than `ln x`.
pub fn ln_upper(x: f64) -> BigRational {
    BigRational::from_float(x.ln() + 1e-9).unwrap()
}

/// True when `a * n^(2/3) >= b`, decided by cubing.
pub fn times_two_thirds_power_at_least(a: &BigRational, n: usize, b: &BigRational) -> bool {
    let a3 = a * a * a;
    let b3 = b * b * b;
    a3 * int(n * n) >= b3
}

/// True when `a * sqrt(2 n ln T) >= b`, with `ln T` replaced by a rational
/// lower bound so a pass is certified.
pub fn times_sqrt_2n_ln_t_at_least(a: &BigRational, n: usize, frames: usize, b: &BigRational) -> bool {
    a * a * int(2 * n) * ln_lower(frames as f64) >= b * b
}

/// Maximal vertex set meeting every threshold, by enumeration.
pub fn largest_k_core_by_filter(g: &TemporalGraph, k: &[usize]) -> Option<VertexSet> {
    let n = g.n();
    let mut best: Option<VertexSet> = None;
    for mask in 1u64..(1u64 << n) {
        let s = VertexSet::from_mask(mask);
        let ok = (0..g.num_frames()).all(|t| dcs_core::induced_stats(g, t, &s).unwrap().min_degree >= k[t]);
        if ok && best.as_ref().is_none_or(|b| s.len() > b.len()) {
            best = Some(s);
        }
    }
    best
}
