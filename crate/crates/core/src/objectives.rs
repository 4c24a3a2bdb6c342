//! Aggregate-density objectives, evaluated exactly.
//!
//! With `E_t[S]` the edges of frame `t` induced by `S`:
//!
//! | kind     | value                                   |
//! |----------|-----------------------------------------|
//! | `MM`     | `min_t min-deg(G_t[S])`                 |
//! | `MA`     | `min_t |E_t[S]| / |S|`                  |
//! | `AM`     | `sum_t min-deg(G_t[S])`                 |
//! | `AA`     | `sum_t 2 |E_t[S]| / |S|`                |
//! | `KMA(k)` | k-th largest of `|E_t[S]| / |S|`        |

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::graph::{stats_with_indicator, FrameStats, TemporalGraph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectiveKind {
    MM,
    MA,
    AM,
    AA,
    /// k-th densest frame, `1 <= k <= T`.
    KMA(usize),
}

impl ObjectiveKind {
    pub fn check_for(&self, frames: usize) -> Result<()> {
        match *self {
            ObjectiveKind::KMA(k) if k == 0 || k > frames => {
                Err(Error::KOrderOutOfRange { k, frames })
            }
            _ => Ok(()),
        }
    }

    /// Exact value from per-frame statistics of a set of size `size`.
    pub(crate) fn aggregate(&self, stats: &[FrameStats], size: usize) -> Fraction {
        let size = size as u64;
        match *self {
            ObjectiveKind::MM => {
                Fraction::integer(stats.iter().map(|s| s.min_degree).min().unwrap_or(0) as u64)
            }
            ObjectiveKind::MA => Fraction::new(
                stats.iter().map(|s| s.edge_count).min().unwrap_or(0) as u64,
                size,
            ),
            ObjectiveKind::AM => {
                Fraction::integer(stats.iter().map(|s| s.min_degree as u64).sum())
            }
            ObjectiveKind::AA => Fraction::new(
                2 * stats.iter().map(|s| s.edge_count as u64).sum::<u64>(),
                size,
            ),
            ObjectiveKind::KMA(k) => {
                let mut counts: Vec<usize> = stats.iter().map(|s| s.edge_count).collect();
                counts.sort_unstable_by(|a, b| b.cmp(a));
                Fraction::new(counts[k - 1] as u64, size)
            }
        }
    }

    fn per_frame(&self, s: &FrameStats, size: usize) -> BigRational {
        match self {
            ObjectiveKind::MM | ObjectiveKind::AM => Fraction::integer(s.min_degree as u64),
            ObjectiveKind::MA | ObjectiveKind::KMA(_) => {
                Fraction::new(s.edge_count as u64, size as u64)
            }
            ObjectiveKind::AA => Fraction::new(2 * s.edge_count as u64, size as u64),
        }
        .to_big()
    }

    pub fn needs_min_degree(&self) -> bool {
        matches!(self, ObjectiveKind::MM | ObjectiveKind::AM)
    }
}

impl fmt::Display for ObjectiveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ObjectiveKind::MM => f.write_str("MM"),
            ObjectiveKind::MA => f.write_str("MA"),
            ObjectiveKind::AM => f.write_str("AM"),
            ObjectiveKind::AA => f.write_str("AA"),
            ObjectiveKind::KMA(k) => write!(f, "KMA({k})"),
        }
    }
}

impl FromStr for ObjectiveKind {
    type Err = String;

    /// Accepts `mm`, `ma`, `am`, `aa` (any case) and `kma:<k>`.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "mm" => Ok(ObjectiveKind::MM),
            "ma" => Ok(ObjectiveKind::MA),
            "am" => Ok(ObjectiveKind::AM),
            "aa" => Ok(ObjectiveKind::AA),
            other => other
                .strip_prefix("kma:")
                .and_then(|k| k.parse().ok())
                .map(ObjectiveKind::KMA)
                .ok_or_else(|| format!("unknown objective {s:?}")),
        }
    }
}

/// Score of a solution under one objective. `value` is the aggregation
/// of `per_frame` (min, sum or k-th largest depending on the kind).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Score {
    pub kind: ObjectiveKind,
    pub value: BigRational,
    pub per_frame: Vec<BigRational>,
}

pub fn score(g: &TemporalGraph, s: &VertexSet, kind: ObjectiveKind) -> Result<Score> {
    kind.check_for(g.num_frames())?;
    let stats = all_frame_stats(g, s)?;
    Ok(Score {
        kind,
        value: kind.aggregate(&stats, s.len()).to_big(),
        per_frame: stats.iter().map(|st| kind.per_frame(st, s.len())).collect(),
    })
}

/// `|E_t[S]| / |S|` for every frame.
pub fn frame_densities(g: &TemporalGraph, s: &VertexSet) -> Result<Vec<BigRational>> {
    let stats = all_frame_stats(g, s)?;
    Ok(stats
        .iter()
        .map(|st| Fraction::new(st.edge_count as u64, s.len() as u64).to_big())
        .collect())
}

pub(crate) fn all_frame_stats(g: &TemporalGraph, s: &VertexSet) -> Result<Vec<FrameStats>> {
    s.validate_for(g.n())?;
    let inside = s.indicator(g.n());
    Ok(g.frames()
        .iter()
        .map(|f| stats_with_indicator(f, s, &inside))
        .collect())
}

/// Fast MA value of a set, as an unreduced fraction.
pub(crate) fn ma_fraction(g: &TemporalGraph, s: &VertexSet) -> Result<Fraction> {
    Ok(ObjectiveKind::MA.aggregate(&all_frame_stats(g, s)?, s.len()))
}

/// Nonnegative fraction with a small denominator, compared exactly by
/// cross-multiplication. Used on hot paths before promoting to
/// [`BigRational`].
#[derive(Debug, Clone, Copy)]
pub(crate) struct Fraction {
    pub num: u64,
    pub den: u64,
}

impl Fraction {
    pub fn new(num: u64, den: u64) -> Self {
        debug_assert!(den > 0);
        Fraction { num, den }
    }

    pub fn integer(num: u64) -> Self {
        Fraction { num, den: 1 }
    }

    pub fn to_big(self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

impl PartialEq for Fraction {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Fraction {}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}
