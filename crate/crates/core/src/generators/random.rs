//! Seeded random constructions. Each output is a pure function of its
//! parameters and seed; frames are drawn from per-frame sub-streams (see
//! [`super::rng`]) and may be generated in parallel.

use num_rational::Rational64;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::reductions::{MinRepInstance, SetCoverInstance};
use super::rng::SplitMix64;
use crate::error::{Error, Result};
use crate::graph::{Edge, TemporalGraph};

/// Smallest `r` with `r^k >= n`.
pub fn ceil_root(n: u128, k: u32) -> u128 {
    let mut r = (n as f64).powf(1.0 / k as f64).floor() as u128;
    while r > 0 && r.pow(k) >= n {
        r -= 1;
    }
    while r.pow(k) < n {
        r += 1;
    }
    r
}

fn rational_f64(r: &Rational64) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// `T` independent `G(n, p)` frames.
pub fn random_sequence(n: usize, frames: usize, p: f64, seed: u64) -> Result<TemporalGraph> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParams(format!("edge probability {p} outside [0, 1]")));
    }
    let vertices: Vec<usize> = (0..n).collect();
    let edges = (0..frames)
        .into_par_iter()
        .map(|t| SplitMix64::stream(seed, t as u64).gnp(&vertices, p))
        .collect();
    TemporalGraph::new(n, edges)
}

#[derive(Debug, Clone, PartialEq)]
pub struct PlantedParams {
    /// Ambient vertex count, at least 16.
    pub n: usize,
    /// In the open interval `(0, 1/4)`.
    pub eps: Rational64,
    pub planted: bool,
    pub seed: u64,
}

impl PlantedParams {
    pub fn validate(&self) -> Result<()> {
        if self.n < 16 {
            return Err(Error::InvalidParams(format!("planted instance needs n >= 16, got {}", self.n)));
        }
        let zero = Rational64::from_integer(0);
        if self.eps <= zero || self.eps >= Rational64::new(1, 4) {
            return Err(Error::InvalidParams(format!("eps = {} outside (0, 1/4)", self.eps)));
        }
        Ok(())
    }

    pub fn clique_size(&self) -> usize {
        ceil_root(self.n as u128, 4) as usize
    }

    pub fn hidden_size(&self) -> usize {
        ceil_root(self.n as u128, 2) as usize
    }

    /// `ceil(n^{3/8})`, the number of hidden vertices in the witness set.
    pub fn witness_size(&self) -> usize {
        (ceil_root((self.n as u128).pow(3), 8) as usize).min(self.hidden_size())
    }
}

#[derive(Debug, Clone)]
pub struct PlantedInstance {
    pub graph: TemporalGraph,
    /// The fresh clique vertices `n..n + |U|`.
    pub clique: Vec<usize>,
    /// The `ceil(sqrt n)` ambient vertices chosen for planting. Drawn in
    /// both modes; only densified when `planted` is set.
    pub hidden: Vec<usize>,
}

impl PlantedInstance {
    /// The clique plus the first `ceil(n^{3/8})` hidden vertices.
    pub fn witness(&self, params: &PlantedParams) -> Vec<usize> {
        let mut w = self.clique.clone();
        w.extend(self.hidden.iter().take(params.witness_size()));
        w.sort_unstable();
        w
    }
}

/// Two-frame planted construction. Frame 0 is a clique on `ceil(n^{1/4})`
/// fresh vertices appended after the ambient range. Frame 1 is
/// `G(n, n^{-1/2})` on the ambient vertices; when planted, a uniform
/// `ceil(sqrt n)`-subset additionally receives an independent
/// `G(sqrt n, n^{-1/4-eps})` layer unioned in.
///
/// Frame 1's stream draws the hidden subset first, then the base graph,
/// then (planted only) the dense layer.
pub fn gen_planted_2frame(params: &PlantedParams) -> Result<PlantedInstance> {
    params.validate()?;
    let n = params.n;
    let clique: Vec<usize> = (n..n + params.clique_size()).collect();
    let mut clique_edges = Vec::new();
    for (i, &u) in clique.iter().enumerate() {
        for &v in &clique[i + 1..] {
            clique_edges.push((u, v));
        }
    }

    let mut rng = SplitMix64::stream(params.seed, 1);
    let hidden = rng.subset(n, params.hidden_size());
    let ambient: Vec<usize> = (0..n).collect();
    let nf = n as f64;
    let mut edges = rng.gnp(&ambient, nf.powf(-0.5));
    if params.planted {
        let q = nf.powf(-0.25 - rational_f64(&params.eps));
        edges.extend(rng.gnp(&hidden, q));
        edges.sort_unstable();
        edges.dedup();
    }
    let graph = TemporalGraph::new(n + clique.len(), vec![clique_edges, edges])?;
    Ok(PlantedInstance { graph, clique, hidden })
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecursiveParams {
    /// Strictly decreasing positive sizes `n_1 > n_2 > ...`.
    pub nvec: Vec<usize>,
    /// Log-densities in `(0, 1]`; level `l` uses edge probability `n_l^{p_l - 1}`.
    pub pvec: Vec<Rational64>,
    pub seed: u64,
}

impl RecursiveParams {
    pub fn validate(&self) -> Result<()> {
        if self.nvec.is_empty() || self.nvec.len() != self.pvec.len() {
            return Err(Error::InvalidParams(
                "size and log-density vectors must be nonempty and of equal length".into(),
            ));
        }
        if self.nvec[0] == 0 || self.nvec.windows(2).any(|w| w[1] >= w[0] || w[1] == 0) {
            return Err(Error::InvalidParams("sizes must be positive and strictly decreasing".into()));
        }
        let (zero, one) = (Rational64::from_integer(0), Rational64::from_integer(1));
        if self.pvec.iter().any(|p| *p <= zero || *p > one) {
            return Err(Error::InvalidParams("log-densities must lie in (0, 1]".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct RecursivePlanted {
    pub graph: TemporalGraph,
    /// `layers[l]` is the vertex set sampled at level `l` (`layers[0]` is all of `0..n_1`).
    pub layers: Vec<Vec<usize>>,
}

/// Recursive planted sampler: `G(n_1, n_1^{p_1 - 1})`, and for more than
/// one level, a uniform `n_2`-subset with a recursive sample of the tail
/// vectors unioned onto it. Level `l` draws from sub-stream `l`: first its
/// edges, then the subset handed to level `l + 1`.
pub fn sample_recursive_planted(params: &RecursiveParams) -> Result<RecursivePlanted> {
    params.validate()?;
    let mut layers = vec![(0..params.nvec[0]).collect::<Vec<usize>>()];
    let mut edges: Vec<Edge> = Vec::new();
    for (level, (&size, p)) in params.nvec.iter().zip(&params.pvec).enumerate() {
        let mut rng = SplitMix64::stream(params.seed, level as u64);
        let current = layers.last().unwrap().clone();
        debug_assert_eq!(current.len(), size);
        let prob = (size as f64).powf(rational_f64(p) - 1.0);
        edges.extend(rng.gnp(&current, prob));
        if let Some(&next) = params.nvec.get(level + 1) {
            let picks = rng.subset(current.len(), next);
            layers.push(picks.into_iter().map(|i| current[i]).collect());
        }
    }
    edges.sort_unstable();
    edges.dedup();
    let graph = TemporalGraph::new(params.nvec[0], vec![edges])?;
    Ok(RecursivePlanted { graph, layers })
}

/// `min(n^2, 10^4)` padding frames.
pub fn default_pad_count(n: usize) -> usize {
    n.saturating_mul(n).min(10_000)
}

/// Appends `pad_count` i.i.d. `G(ambient, ambient^{-3 eps'})` frames on the
/// vertices `0..ambient`; vertices at or above `ambient` stay isolated in
/// the padding. Padding frame `j` uses sub-stream `T_base + j`.
pub fn gen_padded_sequence(
    base: &TemporalGraph,
    pad_count: usize,
    eps_prime: Rational64,
    ambient: usize,
    seed: u64,
) -> Result<TemporalGraph> {
    if ambient == 0 || ambient > base.n() {
        return Err(Error::InvalidParams(format!(
            "ambient range {ambient} must be within 1..={}",
            base.n()
        )));
    }
    if eps_prime < Rational64::from_integer(0) {
        return Err(Error::InvalidParams("eps' must be nonnegative".into()));
    }
    let p = (ambient as f64).powf(-3.0 * rational_f64(&eps_prime));
    let vertices: Vec<usize> = (0..ambient).collect();
    let offset = base.num_frames();
    let padding: Vec<Vec<Edge>> = (0..pad_count)
        .into_par_iter()
        .map(|j| SplitMix64::stream(seed, (offset + j) as u64).gnp(&vertices, p))
        .collect();
    let mut frames = base.to_edge_lists();
    frames.extend(padding);
    TemporalGraph::new(base.n(), frames)
}

/// Random MinRep instance with `parts` supervertices per side of
/// `part_size` vertices each; every A-B pair is an edge with probability
/// `p`. At least one edge is forced so the instance has a superedge.
pub fn random_minrep(parts: usize, part_size: usize, p: f64, seed: u64) -> Result<MinRepInstance> {
    if parts == 0 || part_size == 0 {
        return Err(Error::InvalidParams("parts and part size must be positive".into()));
    }
    let side = parts * part_size;
    let a_parts: Vec<Vec<usize>> = (0..parts)
        .map(|i| (i * part_size..(i + 1) * part_size).collect())
        .collect();
    let b_parts: Vec<Vec<usize>> = (0..parts)
        .map(|i| (side + i * part_size..side + (i + 1) * part_size).collect())
        .collect();
    let mut rng = SplitMix64::stream(seed, 0);
    let mut edges = Vec::new();
    for a in 0..side {
        for b in side..2 * side {
            if rng.bernoulli(p) {
                edges.push((a, b));
            }
        }
    }
    if edges.is_empty() {
        let a = rng.below(side as u64) as usize;
        let b = side + rng.below(side as u64) as usize;
        edges.push((a, b));
    }
    MinRepInstance::new(a_parts, b_parts, edges)
}

/// Random set system: each (set, element) incidence with probability `p`;
/// any element left uncovered joins one uniformly chosen set.
pub fn random_set_system(m: usize, n_elems: usize, p: f64, seed: u64) -> Result<SetCoverInstance> {
    if m == 0 && n_elems > 0 {
        return Err(Error::InvalidParams("need at least one set to cover elements".into()));
    }
    let mut rng = SplitMix64::stream(seed, 0);
    let mut sets = vec![Vec::new(); m];
    let mut covered = vec![false; n_elems];
    for set in sets.iter_mut() {
        for (x, c) in covered.iter_mut().enumerate() {
            if rng.bernoulli(p) {
                set.push(x);
                *c = true;
            }
        }
    }
    for (x, c) in covered.iter().enumerate() {
        if !c {
            sets[rng.below(m as u64) as usize].push(x);
        }
    }
    SetCoverInstance::new(n_elems, sets)
}
