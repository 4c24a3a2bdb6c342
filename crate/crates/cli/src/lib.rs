//! The `dcs` command line: instance generation, solvers, oracles, LP
//! tooling and scoring, with JSON reports on standard output.

mod json;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use dcs_core::am::{exact_am_with_cap, fpt_approx_am_with_cap, AmResult, DEFAULT_VECTOR_CAP};
use dcs_core::generators::{
    ekvc_to_setcover, gen_gap_instance, gen_padded_sequence, gen_planted_2frame, names_to_text, random_minrep,
    random_sequence, random_set_system, reduce_minrep_to_ma, reduce_mis_to_am, reduce_setcover_to_mcss,
    sample_recursive_planted, PlantedParams, RecursiveParams, SetCoverInstance,
};
use dcs_core::lp::{build_lp, check_feasible, export_lp, gap_report};
use dcs_core::ma::{best_with_all, composite_ma, greedy_cover};
use dcs_core::mcss::mcss_greedy;
use dcs_core::oracle::{exact_best, exact_mcss, OracleBudget};
use dcs_core::{parse, score, serialize, ObjectiveKind, SolveReport, TemporalGraph, VertexSet};
use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

#[derive(Debug, Parser)]
#[command(name = "dcs", version, about = "Densest common subgraph toolkit")]
struct Cli {
    /// Worker threads for parallel solvers and generators (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate an instance (.dcs on stdout, or a JSON summary with --out).
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Run one solver on an instance.
    Solve(SolveArgs),
    /// Brute-force optimum of an objective.
    Oracle(OracleArgs),
    /// LP relaxation tools.
    Lp {
        #[command(subcommand)]
        op: LpOp,
    },
    /// Score a vertex set under every objective.
    Eval(EvalArgs),
    /// Time every solver on seeded random instances.
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct OutArg {
    /// Write the instance here instead of stdout; name maps go to the
    /// sibling `.names` file.
    #[arg(long = "out")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum GenKind {
    /// Star-sequence integrality-gap instance.
    Gap {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        out: OutArg,
    },
    /// Random MinRep instance reduced to DCS-MA.
    Minrep {
        #[arg(long, default_value_t = 2)]
        parts: usize,
        #[arg(long, default_value_t = 2)]
        part_size: usize,
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Independent-set instance (single-frame --in) reduced to DCS-AM.
    Mis {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        out: OutArg,
    },
    /// Two-frame planted/unplanted construction.
    Planted {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational, default_value = "1/20")]
        eps: BigRational,
        /// Draw the unplanted distribution instead.
        #[arg(long)]
        unplanted: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
    /// Recursive planted sample, optionally padded with random frames.
    Recursive {
        /// Comma-separated strictly decreasing sizes.
        #[arg(long, value_delimiter = ',', required = true)]
        nvec: Vec<usize>,
        /// Comma-separated log-densities in (0, 1].
        #[arg(long, value_delimiter = ',', value_parser = parse_rational, required = true)]
        pvec: Vec<BigRational>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random frames appended after the sample.
        #[arg(long, default_value_t = 0)]
        pad_count: usize,
        /// Padding frames use edge probability n^(-3 eps').
        #[arg(long, value_parser = parse_rational, default_value = "1/10")]
        eps_prime: BigRational,
        #[command(flatten)]
        out: OutArg,
    },
    /// Set cover reduced to MCSS: explicit --sets, a --hyperedges vertex
    /// cover instance, or a random system.
    SetcoverMcss {
        /// Sets as `;`-separated comma lists of elements, e.g. "0,1;1,2".
        #[arg(long, conflicts_with = "hyperedges")]
        sets: Option<String>,
        /// Uniform hyperedges as `;`-separated comma lists of vertices.
        #[arg(long)]
        hyperedges: Option<String>,
        /// Universe size (explicit sets) or hypergraph vertex count.
        #[arg(long)]
        elems: Option<usize>,
        /// Number of random sets.
        #[arg(long, default_value_t = 4)]
        m: usize,
        #[arg(long, default_value_t = 0.4)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutArg,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algorithm {
    GreedyMa,
    BestWithAll,
    CompositeMa,
    ExactAm,
    FptAm,
    McssGreedy,
}

#[derive(Debug, Args)]
struct SolveArgs {
    #[arg(long, value_enum)]
    alg: Algorithm,
    #[arg(long = "in")]
    input: PathBuf,
    /// Grid parameter for fpt-am, e.g. "1/2" or "0.5".
    #[arg(long, value_parser = parse_rational)]
    eps: Option<BigRational>,
    /// Cap on threshold vectors evaluated by exact-am and fpt-am.
    #[arg(long, default_value_t = DEFAULT_VECTOR_CAP)]
    budget_vectors: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Objective {
    Mm,
    Ma,
    Am,
    Aa,
    Kma,
    Mcss,
}

#[derive(Debug, Args)]
struct BudgetArgs {
    /// Largest vertex count the oracle will enumerate.
    #[arg(long, default_value_t = OracleBudget::default().max_vertices)]
    budget_n: usize,
    /// Largest union edge count for MCSS enumeration.
    #[arg(long, default_value_t = OracleBudget::default().max_union_edges)]
    budget_edges: usize,
}

impl BudgetArgs {
    fn budget(&self) -> OracleBudget {
        OracleBudget {
            max_vertices: self.budget_n,
            max_union_edges: self.budget_edges,
        }
    }
}

#[derive(Debug, Args)]
struct OracleArgs {
    #[arg(long, value_enum)]
    objective: Objective,
    #[arg(long = "in")]
    input: PathBuf,
    /// Order for the kma objective.
    #[arg(long)]
    k: Option<usize>,
    #[command(flatten)]
    budget: BudgetArgs,
}

#[derive(Debug, Subcommand)]
enum LpOp {
    /// Write the relaxation in CPLEX LP format.
    Export {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a fractional solution given as JSON.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        /// `{"y": [...], "x": [[u, v, value], ...], "z": value}`.
        #[arg(long)]
        solution: PathBuf,
    },
    /// Certified LP value against the integral optimum on the gap instance.
    Gap {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Debug, Args)]
struct EvalArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Comma-separated vertex list.
    #[arg(long, value_delimiter = ',', required = true)]
    set: Vec<usize>,
    /// Only report KMA at this order (default: every order).
    #[arg(long)]
    k: Option<usize>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 12)]
    n: usize,
    #[arg(long, default_value_t = 3)]
    frames: usize,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    /// Number of instances.
    #[arg(long, default_value_t = 5)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_parser = parse_rational, default_value = "1/2")]
    eps: BigRational,
    #[command(flatten)]
    budget: BudgetArgs,
}

/// Exit status plus captured output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Invalid(String),
    Budget(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Invalid(_) => 2,
            Failure::Budget(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Invalid(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<dcs_core::Error> for Failure {
    fn from(e: dcs_core::Error) -> Self {
        match e {
            dcs_core::Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            other => Failure::Invalid(other.to_string()),
        }
    }
}

type Fallible<T> = std::result::Result<T, Failure>;

/// Accepts `p/q`, integers and plain decimals such as `0.05`.
pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    let bad = || format!("expected a rational like 1/2 or 0.5, got {s:?}");
    if let Some((int_part, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let digits: BigInt = format!("{int_part}{frac}").parse().map_err(|_| bad())?;
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        return Ok(BigRational::new(digits, scale));
    }
    let q: BigRational = s.parse().map_err(|_| bad())?;
    Ok(q)
}

fn small_rational(q: &BigRational, what: &str) -> Fallible<Rational64> {
    match (q.numer().to_i64(), q.denom().to_i64()) {
        (Some(a), Some(b)) => Ok(Rational64::new(a, b)),
        _ => Err(Failure::Usage(format!("{what} = {q} has too many digits"))),
    }
}

fn read_graph(path: &Path) -> Fallible<TemporalGraph> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", path.display())))?;
    parse(&text).map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, bytes: &[u8]) -> Fallible<()> {
    fs::write(path, bytes).map_err(|e| Failure::Invalid(format!("cannot write {}: {e}", path.display())))
}

pub fn digest(g: &TemporalGraph) -> String {
    format!("sha256:{:x}", Sha256::digest(serialize(g).as_bytes()))
}

fn instance(g: &TemporalGraph) -> Value {
    json!({ "digest": digest(g), "n": g.n(), "frames": g.num_frames() })
}

struct Ctx {
    argv: Vec<String>,
}

impl Ctx {
    fn report(&self, g: Option<&TemporalGraph>, body: Value) -> String {
        let mut doc = json!({ "command": self.argv, "exit_status": 0 });
        if let Some(g) = g {
            doc["instance"] = instance(g);
        }
        if let Value::Object(fields) = body {
            for (k, v) in fields {
                doc[k] = v;
            }
        }
        let mut text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
        text.push('\n');
        text
    }

    fn failure_report(&self, f: &Failure) -> String {
        let doc = json!({ "command": self.argv, "exit_status": f.code(), "error": f.message() });
        let mut text = serde_json::to_string_pretty(&doc).expect("JSON values serialize");
        text.push('\n');
        text
    }
}

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    let ctx = Ctx {
        argv: args.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: "error: --threads must be at least 1\n".into(),
            };
        }
        builder = builder.num_threads(t);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: cannot start worker pool: {e}\n"),
            }
        }
    };
    match pool.install(|| execute(&ctx, cli.command)) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(f) => {
            let stdout = match f {
                Failure::Usage(_) => String::new(),
                _ => ctx.failure_report(&f),
            };
            Outcome {
                code: f.code(),
                stdout,
                stderr: format!("error: {}\n", f.message()),
            }
        }
    }
}

fn execute(ctx: &Ctx, command: Command) -> Fallible<String> {
    match command {
        Command::Gen { kind } => generate(ctx, kind),
        Command::Solve(a) => solve(ctx, a),
        Command::Oracle(a) => oracle(ctx, a),
        Command::Lp { op } => lp(ctx, op),
        Command::Eval(a) => eval(ctx, a),
        Command::Bench(a) => bench(ctx, a),
    }
}

fn parse_lists(s: &str, what: &str) -> Fallible<Vec<Vec<usize>>> {
    s.split(';')
        .map(|group| {
            group
                .split(',')
                .map(str::trim)
                .filter(|x| !x.is_empty())
                .map(|x| x.parse().map_err(|_| Failure::Usage(format!("bad {what} entry {x:?}"))))
                .collect()
        })
        .collect()
}

fn emit_instance(
    ctx: &Ctx,
    g: &TemporalGraph,
    names: Option<&[String]>,
    out: &OutArg,
    mut extra: Value,
) -> Fallible<String> {
    let Some(path) = &out.out else {
        return Ok(serialize(g));
    };
    write_file(path, serialize(g).as_bytes())?;
    extra["out"] = json!(path.display().to_string());
    if let Some(names) = names {
        let names_path = path.with_extension("names");
        write_file(&names_path, names_to_text(names).as_bytes())?;
        extra["names"] = json!(names_path.display().to_string());
    }
    Ok(ctx.report(Some(g), extra))
}

fn generate(ctx: &Ctx, kind: GenKind) -> Fallible<String> {
    match kind {
        GenKind::Gap { n, out } => {
            let g = gen_gap_instance(n)?;
            emit_instance(ctx, &g, None, &out, json!({ "generator": "gap" }))
        }
        GenKind::Minrep {
            parts,
            part_size,
            p,
            seed,
            out,
        } => {
            let mr = random_minrep(parts, part_size, p, seed)?;
            let (g, names) = reduce_minrep_to_ma(&mr)?;
            let extra = json!({ "generator": "minrep", "seed": seed, "superedges": mr.superedges().len() });
            emit_instance(ctx, &g, Some(&names), &out, extra)
        }
        GenKind::Mis { input, out } => {
            let g = reduce_mis_to_am(&read_graph(&input)?)?;
            emit_instance(ctx, &g, None, &out, json!({ "generator": "mis" }))
        }
        GenKind::Planted {
            n,
            eps,
            unplanted,
            seed,
            out,
        } => {
            let params = PlantedParams {
                n,
                eps: small_rational(&eps, "eps")?,
                planted: !unplanted,
                seed,
            };
            let inst = gen_planted_2frame(&params)?;
            let extra = json!({
                "generator": "planted",
                "planted": !unplanted,
                "seed": seed,
                "clique": inst.clique,
                "hidden": inst.hidden,
                "witness": inst.witness(&params),
            });
            emit_instance(ctx, &inst.graph, None, &out, extra)
        }
        GenKind::Recursive {
            nvec,
            pvec,
            seed,
            pad_count,
            eps_prime,
            out,
        } => {
            let pvec = pvec
                .iter()
                .map(|p| small_rational(p, "pvec entry"))
                .collect::<Fallible<Vec<_>>>()?;
            let params = RecursiveParams { nvec, pvec, seed };
            let sample = sample_recursive_planted(&params)?;
            let mut g = sample.graph;
            if pad_count > 0 {
                let ambient = g.n();
                g = gen_padded_sequence(&g, pad_count, small_rational(&eps_prime, "eps-prime")?, ambient, seed)?;
            }
            let extra = json!({ "generator": "recursive", "seed": seed, "layers": sample.layers });
            emit_instance(ctx, &g, None, &out, extra)
        }
        GenKind::SetcoverMcss {
            sets,
            hyperedges,
            elems,
            m,
            p,
            seed,
            out,
        } => {
            let sc = if let Some(sets) = sets {
                let sets = parse_lists(&sets, "set")?;
                let n_elems = match elems {
                    Some(e) => e,
                    None => sets.iter().flatten().max().map_or(0, |&x| x + 1),
                };
                SetCoverInstance::new(n_elems, sets)?
            } else if let Some(h) = hyperedges {
                let hyper = parse_lists(&h, "hyperedge")?;
                let vertices = match elems {
                    Some(e) => e,
                    None => hyper.iter().flatten().max().map_or(0, |&x| x + 1),
                };
                ekvc_to_setcover(vertices, &hyper)?
            } else {
                random_set_system(m, elems.unwrap_or(4), p, seed)?
            };
            let (g, names) = reduce_setcover_to_mcss(&sc)?;
            let extra = json!({ "generator": "setcover-mcss", "sets": sc.m(), "elements": sc.n_elems() });
            emit_instance(ctx, &g, Some(&names), &out, extra)
        }
    }
}

fn am_report(g: &TemporalGraph, name: &str, r: &AmResult, wall: Duration) -> Fallible<Value> {
    let report = SolveReport {
        algorithm: name.to_string(),
        solution: r.solution.clone(),
        score: score(g, &r.solution, ObjectiveKind::AM)?,
        frames_covered_per_iteration: None,
        wall_time: wall,
        seed: None,
        zero_score_instance: false,
        candidates: Vec::new(),
    };
    let mut v = json::solve_report(&report);
    v["vector"] = json!(r.vector.thresholds());
    v["vector_total"] = json!(r.value);
    v["vectors_evaluated"] = json!(r.evaluated);
    Ok(v)
}

fn solve(ctx: &Ctx, a: SolveArgs) -> Fallible<String> {
    let g = read_graph(&a.input)?;
    let start = Instant::now();
    let report = match a.alg {
        Algorithm::GreedyMa => json::solve_report(&greedy_cover(&g)?),
        Algorithm::BestWithAll => json::solve_report(&best_with_all(&g)?),
        Algorithm::CompositeMa => json::solve_report(&composite_ma(&g)?),
        Algorithm::ExactAm => {
            let r = exact_am_with_cap(&g, a.budget_vectors)?;
            am_report(&g, "exact-am", &r, start.elapsed())?
        }
        Algorithm::FptAm => {
            let eps = a.eps.ok_or_else(|| Failure::Usage("fpt-am needs --eps".into()))?;
            if eps <= BigRational::zero() {
                return Err(Failure::Usage(format!("--eps must be positive, got {eps}")));
            }
            let r = fpt_approx_am_with_cap(&g, &eps, a.budget_vectors)?;
            let mut v = am_report(&g, "fpt-am", &r, start.elapsed())?;
            v["eps"] = json::rational(&eps);
            v
        }
        Algorithm::McssGreedy => {
            let r = mcss_greedy(&g)?;
            json::mcss_greedy(&r, start.elapsed())
        }
    };
    Ok(ctx.report(Some(&g), json!({ "reports": [report] })))
}

fn objective_kind(objective: Objective, k: Option<usize>) -> Fallible<ObjectiveKind> {
    Ok(match objective {
        Objective::Mm => ObjectiveKind::MM,
        Objective::Ma => ObjectiveKind::MA,
        Objective::Am => ObjectiveKind::AM,
        Objective::Aa => ObjectiveKind::AA,
        Objective::Kma => ObjectiveKind::KMA(k.ok_or_else(|| Failure::Usage("kma needs --k".into()))?),
        Objective::Mcss => unreachable!("handled by the caller"),
    })
}

fn oracle(ctx: &Ctx, a: OracleArgs) -> Fallible<String> {
    let g = read_graph(&a.input)?;
    let budget = a.budget.budget();
    let start = Instant::now();
    let report = if let Objective::Mcss = a.objective {
        let f = exact_mcss(&g, &budget)?;
        json::edge_solution("oracle-mcss", &f, start.elapsed())
    } else {
        let kind = objective_kind(a.objective, a.k)?;
        let (set, best) = exact_best(&g, kind, &budget)?;
        let report = SolveReport {
            algorithm: format!("oracle-{}", kind.to_string().to_ascii_lowercase()),
            solution: set,
            score: best,
            frames_covered_per_iteration: None,
            wall_time: start.elapsed(),
            seed: None,
            zero_score_instance: false,
            candidates: Vec::new(),
        };
        json::solve_report(&report)
    };
    Ok(ctx.report(Some(&g), json!({ "reports": [report] })))
}

fn lp(ctx: &Ctx, op: LpOp) -> Fallible<String> {
    match op {
        LpOp::Export { input, out } => {
            let g = read_graph(&input)?;
            let bytes = export_lp(&build_lp(&g));
            match out {
                None => Ok(String::from_utf8(bytes).expect("LP text is ASCII")),
                Some(path) => {
                    write_file(&path, &bytes)?;
                    Ok(ctx.report(Some(&g), json!({ "out": path.display().to_string() })))
                }
            }
        }
        LpOp::Check { input, solution } => {
            let g = read_graph(&input)?;
            let text = fs::read_to_string(&solution)
                .map_err(|e| Failure::Invalid(format!("cannot read {}: {e}", solution.display())))?;
            let f = json::fractional_solution(&text).map_err(Failure::Invalid)?;
            let r = check_feasible(&g, &f)?;
            let body = json!({
                "feasible": r.feasible,
                "objective": json::rational(&r.objective),
                "violations": r.violations,
            });
            Ok(ctx.report(Some(&g), body))
        }
        LpOp::Gap { n, budget } => {
            let r = gap_report(n, &budget.budget())?;
            let g = gen_gap_instance(n)?;
            let body = json!({
                "lp_value": json::rational(&r.lp_value),
                "integral_opt": json::rational(&r.integral_opt),
                "ratio": json::rational(&r.ratio),
            });
            Ok(ctx.report(Some(&g), body))
        }
    }
}

fn eval(ctx: &Ctx, a: EvalArgs) -> Fallible<String> {
    let g = read_graph(&a.input)?;
    let s = VertexSet::new(a.set);
    let mut kinds = vec![ObjectiveKind::MM, ObjectiveKind::MA, ObjectiveKind::AM, ObjectiveKind::AA];
    match a.k {
        Some(k) => kinds.push(ObjectiveKind::KMA(k)),
        None => kinds.extend((1..=g.num_frames()).map(ObjectiveKind::KMA)),
    }
    let scores = kinds
        .into_iter()
        .map(|kind| Ok(json::score(&score(&g, &s, kind)?)))
        .collect::<Fallible<Vec<_>>>()?;
    Ok(ctx.report(Some(&g), json!({ "set": s.members(), "scores": scores })))
}

fn bench(ctx: &Ctx, a: BenchArgs) -> Fallible<String> {
    if a.eps <= BigRational::zero() {
        return Err(Failure::Usage(format!("--eps must be positive, got {}", a.eps)));
    }
    let budget = a.budget.budget();
    let mut rows = Vec::new();
    for i in 0..a.count {
        let seed = a.seed.wrapping_add(i as u64);
        let g = random_sequence(a.n, a.frames, a.p, seed)?;
        let mut reports = vec![
            json::solve_report(&greedy_cover(&g)?),
            json::solve_report(&best_with_all(&g)?),
            json::solve_report(&composite_ma(&g)?),
        ];
        let start = Instant::now();
        let exact = exact_am_with_cap(&g, DEFAULT_VECTOR_CAP)?;
        reports.push(am_report(&g, "exact-am", &exact, start.elapsed())?);
        let start = Instant::now();
        let approx = fpt_approx_am_with_cap(&g, &a.eps, DEFAULT_VECTOR_CAP)?;
        reports.push(am_report(&g, "fpt-am", &approx, start.elapsed())?);
        if g.n() <= budget.max_vertices {
            let start = Instant::now();
            let (set, best) = exact_best(&g, ObjectiveKind::MA, &budget)?;
            let report = SolveReport {
                algorithm: "oracle-ma".into(),
                solution: set,
                score: best,
                frames_covered_per_iteration: None,
                wall_time: start.elapsed(),
                seed: None,
                zero_score_instance: false,
                candidates: Vec::new(),
            };
            reports.push(json::solve_report(&report));
        }
        for r in &mut reports {
            r["seed"] = json!(seed);
        }
        rows.push(json!({ "instance": instance(&g), "seed": seed, "reports": reports }));
    }
    Ok(ctx.report(None, json!({ "runs": rows, "eps": json::rational(&a.eps) })))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        let q = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        assert_eq!(parse_rational("1/2").unwrap(), q(1, 2));
        assert_eq!(parse_rational("0.05").unwrap(), q(1, 20));
        assert_eq!(parse_rational("3").unwrap(), q(3, 1));
        assert_eq!(parse_rational("1.5").unwrap(), q(3, 2));
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1.").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn lists() {
        assert_eq!(parse_lists("0,1;2", "set").ok().unwrap(), vec![vec![0, 1], vec![2]]);
        assert!(parse_lists("0,x", "set").is_err());
    }
}
