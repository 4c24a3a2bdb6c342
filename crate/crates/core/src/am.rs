//! DCS-AM (maximize `sum_t min-deg(G_t[S])`) through generalized cores.
//!
//! A `(k_1, ..., k_T)`-core is the largest set inducing minimum degree at
//! least `k_t` in every frame `t`. It is unique and found by peeling. The
//! AM optimum is the largest `sum_t k_t` over vectors with a nonempty
//! core; [`exact_am`] searches all vectors, [`fpt_approx_am`] only those
//! on a geometric grid.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::graph::{TemporalGraph, VertexSet};

/// Per-frame minimum-degree thresholds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoreVector(Vec<usize>);

impl CoreVector {
    /// Checks length `T` and entries at most `n - 1`.
    pub fn new(g: &TemporalGraph, k: Vec<usize>) -> Result<Self> {
        if k.len() != g.num_frames() {
            return Err(Error::InvalidCoreVector(format!(
                "length {} differs from T = {}",
                k.len(),
                g.num_frames()
            )));
        }
        if let Some(&bad) = k.iter().find(|&&x| x >= g.n()) {
            return Err(Error::InvalidCoreVector(format!(
                "threshold {bad} exceeds n - 1 = {}",
                g.n() - 1
            )));
        }
        Ok(CoreVector(k))
    }

    pub fn zeros(g: &TemporalGraph) -> Self {
        CoreVector(vec![0; g.num_frames()])
    }

    pub fn thresholds(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn dominates(&self, other: &CoreVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }
}

/// Peels vertices with degree below `k_t` in some frame `t` until none
/// remain. `None` when the core is empty.
pub fn core(g: &TemporalGraph, kv: &CoreVector) -> Option<VertexSet> {
    peel(g, kv.thresholds())
}

/// Peels by sweeping `order` repeatedly, removing each violating vertex
/// as it is met, until a sweep removes nothing. `order` must be a
/// permutation of the vertices.
pub fn core_with_order(g: &TemporalGraph, kv: &CoreVector, order: &[usize]) -> Option<VertexSet> {
    let n = g.n();
    assert_eq!(order.len(), n, "order must list every vertex");
    let k = kv.thresholds();
    let mut degree: Vec<Vec<usize>> = g
        .frames()
        .iter()
        .map(|f| (0..n).map(|v| f.degree(v)).collect())
        .collect();
    let mut removed = vec![false; n];
    loop {
        let mut changed = false;
        for &v in order {
            if removed[v] || k.iter().zip(&degree).all(|(&need, d)| d[v] >= need) {
                continue;
            }
            removed[v] = true;
            changed = true;
            for (t, f) in g.frames().iter().enumerate() {
                for &w in f.neighbors(v) {
                    if !removed[w] {
                        degree[t][w] -= 1;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let survivors: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    (!survivors.is_empty()).then(|| VertexSet::new(survivors))
}

fn peel(g: &TemporalGraph, k: &[usize]) -> Option<VertexSet> {
    let n = g.n();
    let frames = g.frames();
    let mut degree: Vec<Vec<usize>> = frames
        .iter()
        .map(|f| (0..n).map(|v| f.degree(v)).collect())
        .collect();
    let violates = |degree: &Vec<Vec<usize>>, v: usize| {
        k.iter().zip(degree).any(|(&need, d)| d[v] < need)
    };
    let mut removed = vec![false; n];
    let mut queued = vec![false; n];
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| violates(&degree, v)).collect();
    for &v in &queue {
        queued[v] = true;
    }
    while let Some(v) = queue.pop_front() {
        removed[v] = true;
        for (t, f) in frames.iter().enumerate() {
            for &w in f.neighbors(v) {
                if removed[w] {
                    continue;
                }
                degree[t][w] -= 1;
                if !queued[w] && degree[t][w] < k[t] {
                    queued[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let survivors: Vec<usize> = (0..n).filter(|&v| !removed[v]).collect();
    (!survivors.is_empty()).then(|| VertexSet::new(survivors))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmResult {
    /// Core of the best vector.
    pub solution: VertexSet,
    /// `sum_t k_t` of the best vector; equals the AM optimum for [`exact_am`].
    pub value: usize,
    /// Lexicographically smallest vector attaining `value`.
    pub vector: CoreVector,
    /// Core computations performed.
    pub evaluated: u64,
}

pub const DEFAULT_VECTOR_CAP: u64 = 100_000_000;

/// Exact AM optimum over all threshold vectors with `k_t <= maxdeg(G_t)`.
pub fn exact_am(g: &TemporalGraph) -> Result<AmResult> {
    exact_am_with_cap(g, DEFAULT_VECTOR_CAP)
}

pub fn exact_am_with_cap(g: &TemporalGraph, cap: u64) -> Result<AmResult> {
    let grids = g.frames().iter().map(|f| (0..=f.max_degree()).collect()).collect();
    search(g, grids, cap)
}

/// `{0}` together with the distinct values `floor((1 + eps)^l)`, `l >= 0`,
/// not exceeding `max_value`, ascending. Computed exactly.
pub fn geometric_grid(eps: &BigRational, max_value: usize) -> Result<Vec<usize>> {
    if !eps.is_positive() {
        return Err(Error::InvalidParams(format!("eps = {eps} must be positive")));
    }
    let mut grid = vec![0usize];
    if max_value == 0 {
        return Ok(grid);
    }
    // below 1/eps consecutive powers differ by less than one, so every
    // integer up to floor(1/eps) occurs
    let dense_top = eps.recip().floor().to_integer().min(BigInt::from(max_value));
    let dense_top: usize = dense_top.try_into().expect("bounded by max_value");
    grid.extend(1..=dense_top.max(1));
    let base = BigRational::one() + eps;
    let mut power = BigRational::one();
    let limit = BigRational::from_integer(BigInt::from(max_value) + 1);
    while power < limit {
        let v: usize = power.floor().to_integer().try_into().expect("bounded by max_value");
        if v > *grid.last().unwrap() {
            grid.push(v);
        }
        power *= &base;
    }
    Ok(grid)
}

/// `(1 + eps)`-approximate AM: the exact search restricted to
/// [`geometric_grid`] thresholds.
pub fn fpt_approx_am(g: &TemporalGraph, eps: &BigRational) -> Result<AmResult> {
    fpt_approx_am_with_cap(g, eps, DEFAULT_VECTOR_CAP)
}

pub fn fpt_approx_am_with_cap(g: &TemporalGraph, eps: &BigRational, cap: u64) -> Result<AmResult> {
    let grid = geometric_grid(eps, g.n() - 1)?;
    let grids = g
        .frames()
        .iter()
        .map(|f| {
            let top = f.max_degree();
            grid.iter().copied().take_while(|&v| v <= top).collect()
        })
        .collect();
    search(g, grids, cap)
}

struct Search<'a> {
    g: &'a TemporalGraph,
    grids: Vec<Vec<usize>>,
    cap: u64,
    evaluated: u64,
    // minimal vectors known to have an empty core
    frontier: Vec<Vec<usize>>,
    best: Option<(usize, Vec<usize>)>,
}

impl Search<'_> {
    fn dominated(&self, v: &[usize]) -> bool {
        self.frontier
            .iter()
            .any(|e| e.iter().zip(v).all(|(a, b)| a <= b))
    }

    fn nonempty(&mut self, v: &[usize]) -> Result<bool> {
        if self.dominated(v) {
            return Ok(false);
        }
        self.evaluated += 1;
        if self.evaluated > self.cap {
            return Err(Error::BudgetExceeded {
                what: "threshold vectors evaluated",
                actual: self.evaluated,
                cap: self.cap,
            });
        }
        let alive = peel(self.g, v).is_some();
        if !alive {
            self.frontier.retain(|e| !e.iter().zip(v).all(|(a, b)| a >= b));
            self.frontier.push(v.to_vec());
        }
        Ok(alive)
    }

    fn descend(&mut self, level: usize, vector: &mut Vec<usize>) -> Result<()> {
        let last = self.grids.len() - 1;
        if level == last {
            // the core shrinks as the last threshold grows: binary search
            // for the largest grid value that keeps it nonempty
            let grid = self.grids[level].clone();
            let (mut lo, mut hi) = (0usize, grid.len());
            while lo < hi {
                let mid = (lo + hi) / 2;
                vector[level] = grid[mid];
                if self.nonempty(vector)? {
                    lo = mid + 1;
                } else {
                    hi = mid;
                }
            }
            if lo > 0 {
                vector[level] = grid[lo - 1];
                let total: usize = vector.iter().sum();
                if self.best.as_ref().is_none_or(|(b, _)| total > *b) {
                    self.best = Some((total, vector.clone()));
                }
            }
            vector[level] = 0;
            return Ok(());
        }
        for i in 0..self.grids[level].len() {
            vector[level] = self.grids[level][i];
            // completions of a dominated prefix are all dominated
            if self.dominated(vector) {
                break;
            }
            self.descend(level + 1, vector)?;
        }
        vector[level] = 0;
        Ok(())
    }
}

fn search(g: &TemporalGraph, grids: Vec<Vec<usize>>, cap: u64) -> Result<AmResult> {
    let mut s = Search {
        g,
        grids,
        cap,
        evaluated: 0,
        frontier: Vec::new(),
        best: None,
    };
    let mut vector = vec![0usize; g.num_frames()];
    s.descend(0, &mut vector)?;
    let (value, best) = s.best.expect("the zero vector keeps every vertex");
    let solution = peel(g, &best).expect("best vector has a nonempty core");
    Ok(AmResult {
        solution,
        value,
        vector: CoreVector(best),
        evaluated: s.evaluated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k4_and_path() -> TemporalGraph {
        let k4 = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        TemporalGraph::new(4, vec![k4, vec![(0, 1), (1, 2), (2, 3)]]).unwrap()
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn core_examples() {
        let g = k4_and_path();
        let kv = CoreVector::new(&g, vec![2, 1]).unwrap();
        assert_eq!(core(&g, &kv), Some(VertexSet::all(4)));
        let kv = CoreVector::new(&g, vec![3, 2]).unwrap();
        assert_eq!(core(&g, &kv), None);
        assert_eq!(core(&g, &CoreVector::zeros(&g)), Some(VertexSet::all(4)));
    }

    #[test]
    fn core_vector_validation() {
        let g = k4_and_path();
        assert!(CoreVector::new(&g, vec![1]).is_err());
        assert!(CoreVector::new(&g, vec![4, 0]).is_err());
        assert!(CoreVector::new(&g, vec![3, 3]).is_ok());
    }

    #[test]
    fn exact_examples() {
        let g = TemporalGraph::new(3, vec![vec![(0, 1)], vec![(0, 1), (1, 2)]]).unwrap();
        let r = exact_am(&g).unwrap();
        assert_eq!((r.solution, r.value), (VertexSet::new([0, 1]), 2));

        let r = exact_am(&k4_and_path()).unwrap();
        assert_eq!((r.solution, r.value), (VertexSet::all(4), 4));
        assert_eq!(r.vector.thresholds(), &[3, 1]);
    }

    #[test]
    fn exact_single_frame_is_max_core_degree() {
        // triangle with a pendant: best min-degree is 2 on the triangle
        let g = TemporalGraph::new(4, vec![vec![(0, 1), (1, 2), (0, 2), (2, 3)]]).unwrap();
        let r = exact_am(&g).unwrap();
        assert_eq!((r.solution, r.value), (VertexSet::new([0, 1, 2]), 2));
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            exact_am_with_cap(&k4_and_path(), 2),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn grids() {
        assert_eq!(geometric_grid(&q(1, 1), 10).unwrap(), vec![0, 1, 2, 4, 8]);
        assert_eq!(geometric_grid(&q(1_000_000, 1), 50).unwrap(), vec![0, 1]);
        assert_eq!(geometric_grid(&q(1, 10), 1).unwrap(), vec![0, 1]);
        assert_eq!(geometric_grid(&q(1, 2), 12).unwrap(), vec![0, 1, 2, 3, 5, 7, 11]);
        assert_eq!(geometric_grid(&q(1, 1), 0).unwrap(), vec![0]);
        assert_eq!(geometric_grid(&q(1, 100), 30).unwrap(), (0..=30).collect::<Vec<_>>());
        assert!(geometric_grid(&q(0, 1), 5).is_err());
        assert!(geometric_grid(&q(-1, 2), 5).is_err());
    }

    #[test]
    fn fpt_examples() {
        let g = TemporalGraph::new(3, vec![vec![(0, 1)], vec![(0, 1), (1, 2)]]).unwrap();
        let r = fpt_approx_am(&g, &q(1, 1)).unwrap();
        assert_eq!((r.solution, r.value), (VertexSet::new([0, 1]), 2));
        let r = fpt_approx_am(&k4_and_path(), &q(1_000_000, 1)).unwrap();
        assert_eq!(r.value, 2);
        let r = fpt_approx_am(&k4_and_path(), &q(1, 2)).unwrap();
        assert_eq!(r.value, 4);
    }
}
