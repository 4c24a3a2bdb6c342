use std::collections::BTreeMap;
use std::time::Duration;

use dcs_core::mcss::{EdgeSolution, McssGreedyResult};
use dcs_core::{Edge, Score, SolveReport};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde_json::{json, Value};

pub fn rational(q: &BigRational) -> Value {
    Value::String(q.to_string())
}

pub fn millis(d: Duration) -> Value {
    json!(d.as_secs_f64() * 1e3)
}

pub fn score(s: &Score) -> Value {
    json!({
        "objective": s.kind.to_string(),
        "value": rational(&s.value),
        "per_frame": s.per_frame.iter().map(rational).collect::<Vec<_>>(),
    })
}

pub fn solve_report(r: &SolveReport) -> Value {
    json!({
        "algorithm": r.algorithm,
        "solution": r.solution.members(),
        "score": score(&r.score),
        "frames_covered_per_iteration": r.frames_covered_per_iteration,
        "wall_time_ms": millis(r.wall_time),
        "seed": r.seed,
        "zero_score_instance": r.zero_score_instance,
        "candidates": r
            .candidates
            .iter()
            .map(|(name, value)| json!({ "algorithm": name, "value": rational(value) }))
            .collect::<Vec<_>>(),
    })
}

pub fn edges(e: &[Edge]) -> Value {
    json!(e.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>())
}

pub fn edge_solution(algorithm: &str, f: &EdgeSolution, wall: Duration) -> Value {
    json!({
        "algorithm": algorithm,
        "solution": edges(f.edges()),
        "score": { "objective": "MCSS", "value": f.len().to_string() },
        "wall_time_ms": millis(wall),
    })
}

pub fn mcss_greedy(r: &McssGreedyResult, wall: Duration) -> Value {
    let mut v = edge_solution("mcss-greedy", &r.solution, wall);
    v["initial_potential"] = json!(r.initial_potential);
    v["phase_boundary"] = json!(r.phase_boundary);
    v["trace"] = json!(r
        .trace
        .iter()
        .map(|s| json!({ "edge": [s.edge.0, s.edge.1], "gain": s.gain, "potential_after": s.potential_after }))
        .collect::<Vec<_>>());
    v
}

fn value_to_rational(v: &Value) -> Option<BigRational> {
    match v {
        Value::String(s) => crate::parse_rational(s).ok(),
        Value::Number(n) => n.as_i64().map(|i| BigRational::from_integer(BigInt::from(i))),
        _ => None,
    }
}

/// Reads `{"y": [..], "x": [[u, v, value], ..], "z": value}` where each
/// value is an integer or a `"p/q"` string.
pub fn fractional_solution(text: &str) -> Result<dcs_core::lp::FractionalSolution, String> {
    let doc: Value = serde_json::from_str(text).map_err(|e| format!("solution is not JSON: {e}"))?;
    let y = doc["y"]
        .as_array()
        .ok_or("missing array \"y\"")?
        .iter()
        .map(|v| value_to_rational(v).ok_or_else(|| format!("bad y entry {v}")))
        .collect::<Result<Vec<_>, _>>()?;
    let mut x = BTreeMap::new();
    for entry in doc["x"].as_array().ok_or("missing array \"x\"")? {
        let bad = || format!("bad x entry {entry}, expected [u, v, value]");
        let parts = entry.as_array().filter(|a| a.len() == 3).ok_or_else(bad)?;
        let u = parts[0].as_u64().ok_or_else(bad)? as usize;
        let v = parts[1].as_u64().ok_or_else(bad)? as usize;
        let value = value_to_rational(&parts[2]).ok_or_else(bad)?;
        if x.insert((u.min(v), u.max(v)), value).is_some() {
            return Err(format!("x lists edge ({u}, {v}) twice"));
        }
    }
    let z = value_to_rational(&doc["z"]).ok_or("missing or bad \"z\"")?;
    Ok(dcs_core::lp::FractionalSolution { y, x, z })
}
