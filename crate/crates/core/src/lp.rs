//! LP relaxation of DCS-MA: model construction, CPLEX-LP export, exact
//! feasibility checks and the harmonic solution on the star-sequence
//! gap family.
//!
//! ```text
//! maximize z
//!   sum_v y_v = 1
//!   x_uv <= y_u, x_uv <= y_v      for every union edge uv
//!   z <= sum_{e in E_t} x_e       for every frame t
//!   y, x, z >= 0
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::generators::gen_gap_instance;
use crate::graph::{Edge, TemporalGraph, VertexSet};
use crate::objectives::{score, ObjectiveKind};
use crate::oracle::{exact_best, OracleBudget};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Eq,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constraint {
    pub name: String,
    /// `(coefficient, variable index)` pairs.
    pub terms: Vec<(i64, usize)>,
    pub sense: Sense,
    pub rhs: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LPModel {
    /// `y0..y{n-1}`, then `x_u_v` per union edge, then `z`.
    pub variables: Vec<String>,
    pub constraints: Vec<Constraint>,
    /// Index of `z`, the variable being maximized.
    pub objective: usize,
    /// Per-variable upper bound; `None` means unbounded above.
    pub upper_bounds: Vec<Option<i64>>,
}

fn x_name((u, v): Edge) -> String {
    format!("x_{u}_{v}")
}

pub fn build_lp(g: &TemporalGraph) -> LPModel {
    let n = g.n();
    let union = g.union_edges();
    let z = n + union.len();
    let mut variables: Vec<String> = (0..n).map(|v| format!("y{v}")).collect();
    variables.extend(union.iter().map(|&e| x_name(e)));
    variables.push("z".to_string());

    let mut constraints = Vec::with_capacity(1 + 2 * union.len() + g.num_frames());
    constraints.push(Constraint {
        name: "norm".into(),
        terms: (0..n).map(|v| (1, v)).collect(),
        sense: Sense::Eq,
        rhs: 1,
    });
    for (i, &(u, v)) in union.iter().enumerate() {
        for (side, end) in [("u", u), ("v", v)] {
            constraints.push(Constraint {
                name: format!("e_{u}_{v}_{side}"),
                terms: vec![(1, n + i), (-1, end)],
                sense: Sense::Le,
                rhs: 0,
            });
        }
    }
    for (t, f) in g.frames().iter().enumerate() {
        let mut terms = vec![(1, z)];
        terms.extend(f.edges().iter().map(|e| {
            let i = union.binary_search(e).expect("frame edge is in the union");
            (-1, n + i)
        }));
        constraints.push(Constraint {
            name: format!("frame{t}"),
            terms,
            sense: Sense::Le,
            rhs: 0,
        });
    }
    let mut upper_bounds = vec![Some(1); z];
    upper_bounds.push(None);
    LPModel {
        variables,
        constraints,
        objective: z,
        upper_bounds,
    }
}

const LINE_WIDTH: usize = 200;

/// CPLEX-LP text. Long rows are wrapped onto continuation lines.
pub fn export_lp(m: &LPModel) -> Vec<u8> {
    let mut out = String::new();
    out.push_str("\\ densest common subgraph LP relaxation\n");
    let _ = writeln!(out, "Maximize\n obj: {}", m.variables[m.objective]);
    out.push_str("Subject To\n");
    for c in &m.constraints {
        let mut line = format!(" {}:", c.name);
        for (k, &(coef, var)) in c.terms.iter().enumerate() {
            let sign = if coef < 0 { "-" } else if k == 0 { "" } else { "+" };
            let mag = coef.unsigned_abs();
            let term = match (sign, mag) {
                ("", 1) => format!(" {}", m.variables[var]),
                ("", _) => format!(" {mag} {}", m.variables[var]),
                (_, 1) => format!(" {sign} {}", m.variables[var]),
                _ => format!(" {sign} {mag} {}", m.variables[var]),
            };
            if line.len() + term.len() > LINE_WIDTH {
                out.push_str(&line);
                out.push('\n');
                line = "  ".to_string();
            }
            line.push_str(&term);
        }
        let op = match c.sense {
            Sense::Le => "<=",
            Sense::Eq => "=",
        };
        let _ = writeln!(out, "{line} {op} {}", c.rhs);
    }
    out.push_str("Bounds\n");
    for (name, ub) in m.variables.iter().zip(&m.upper_bounds) {
        match ub {
            Some(ub) => {
                let _ = writeln!(out, " 0 <= {name} <= {ub}");
            }
            None => {
                let _ = writeln!(out, " {name} >= 0");
            }
        }
    }
    out.push_str("End\n");
    out.into_bytes()
}

/// An assignment to the LP variables. `x` must be keyed by exactly the
/// union edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalSolution {
    pub y: Vec<BigRational>,
    pub x: BTreeMap<Edge, BigRational>,
    pub z: BigRational,
}

impl FractionalSolution {
    /// The embedding of a vertex set: `y = 1/|S|` on `S`, `x = 1/|S|` on
    /// union edges inside `S`, `z` the MA score of `S`.
    pub fn from_vertex_set(g: &TemporalGraph, s: &VertexSet) -> Result<Self> {
        let z = score(g, s, ObjectiveKind::MA)?.value;
        let share = BigRational::new(BigInt::one(), BigInt::from(s.len()));
        let y = (0..g.n())
            .map(|v| if s.contains(v) { share.clone() } else { BigRational::zero() })
            .collect();
        let x = g
            .union_edges()
            .iter()
            .map(|&(u, v)| {
                let val = if s.contains(u) && s.contains(v) {
                    share.clone()
                } else {
                    BigRational::zero()
                };
                ((u, v), val)
            })
            .collect();
        Ok(FractionalSolution { y, x, z })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Feasibility {
    pub feasible: bool,
    /// The value of `z`.
    pub objective: BigRational,
    /// Names of violated constraints, in model order; bound violations
    /// appear as `bound:<variable>`.
    pub violations: Vec<String>,
}

pub fn check_feasible(g: &TemporalGraph, f: &FractionalSolution) -> Result<Feasibility> {
    if f.y.len() != g.n() {
        return Err(Error::DomainMismatch(format!(
            "y has {} entries for {} vertices",
            f.y.len(),
            g.n()
        )));
    }
    let union = g.union_edges();
    if f.x.len() != union.len() || !f.x.keys().zip(union).all(|(a, b)| a == b) {
        let stray = f.x.keys().find(|e| union.binary_search(e).is_err());
        let missing = union.iter().find(|e| !f.x.contains_key(e));
        let detail = match (stray, missing) {
            (Some((u, v)), _) => format!("x_{u}_{v} is not a union edge"),
            (None, Some((u, v))) => format!("x_{u}_{v} is missing"),
            _ => "x keys differ from the union edges".to_string(),
        };
        return Err(Error::DomainMismatch(detail));
    }

    let one = BigRational::one();
    let mut violations = Vec::new();
    let total: BigRational = f.y.iter().sum();
    if total != one {
        violations.push("norm".to_string());
    }
    for (&(u, v), xe) in &f.x {
        if xe > &f.y[u] {
            violations.push(format!("e_{u}_{v}_u"));
        }
        if xe > &f.y[v] {
            violations.push(format!("e_{u}_{v}_v"));
        }
    }
    for (t, frame) in g.frames().iter().enumerate() {
        let sum: BigRational = frame.edges().iter().map(|e| &f.x[e]).sum();
        if f.z > sum {
            violations.push(format!("frame{t}"));
        }
    }
    for (v, yv) in f.y.iter().enumerate() {
        if yv.is_negative() || yv > &one {
            violations.push(format!("bound:y{v}"));
        }
    }
    for (&e, xe) in &f.x {
        if xe.is_negative() || xe > &one {
            violations.push(format!("bound:{}", x_name(e)));
        }
    }
    if f.z.is_negative() {
        violations.push("bound:z".to_string());
    }
    Ok(Feasibility {
        feasible: violations.is_empty(),
        objective: f.z.clone(),
        violations,
    })
}

/// `H_k = 1 + 1/2 + ... + 1/k`.
pub fn harmonic_number(k: usize) -> BigRational {
    (1..=k)
        .map(|i| BigRational::new(BigInt::one(), BigInt::from(i)))
        .sum()
}

/// The gap instance on `n` vertices with `h = 1/(1 + H_{n-1})`,
/// `y_0 = h`, `y_i = h/i`, `x_e` the smaller endpoint weight and `z = h`.
pub fn harmonic_solution(n: usize) -> Result<(TemporalGraph, FractionalSolution)> {
    let g = gen_gap_instance(n)?;
    let h = (BigRational::one() + harmonic_number(n - 1)).recip();
    let mut y = vec![h.clone()];
    y.extend((1..n).map(|i| &h / BigRational::from_integer(BigInt::from(i))));
    let x = g
        .union_edges()
        .iter()
        .map(|&(u, v)| ((u, v), y[u].clone().min(y[v].clone())))
        .collect();
    Ok((g, FractionalSolution { y, x, z: h }))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapReport {
    pub lp_value: BigRational,
    pub integral_opt: BigRational,
    pub ratio: BigRational,
}

/// Certified LP value against the brute-force integral MA optimum on the
/// `n`-vertex gap instance.
pub fn gap_report(n: usize, budget: &OracleBudget) -> Result<GapReport> {
    let (g, f) = harmonic_solution(n)?;
    let check = check_feasible(&g, &f)?;
    debug_assert!(check.feasible, "harmonic solution violates {:?}", check.violations);
    let (_, best) = exact_best(&g, ObjectiveKind::MA, budget)?;
    let integral_opt = best.value;
    let ratio = &check.objective / &integral_opt;
    Ok(GapReport {
        lp_value: check.objective,
        integral_opt,
        ratio,
    })
}
