mod common;

use common::{graph, int, ln_upper, q, with_subset};
use dcs_core::generators::{
    gen_gap_instance, gen_padded_sequence, gen_planted_2frame, random_minrep, random_sequence, random_set_system,
    reduce_minrep_to_ma, reduce_mis_to_am, reduce_setcover_to_mcss, sample_recursive_planted, PlantedParams,
    RecursiveParams,
};
use dcs_core::lp::{build_lp, check_feasible, gap_report, harmonic_number, harmonic_solution, FractionalSolution};
use dcs_core::mcss::mcss_greedy;
use dcs_core::oracle::{exact_best, exact_mcss, exact_minrep, exact_mis, exact_setcover, OracleBudget};
use dcs_core::{score, serialize, ObjectiveKind, VertexSet};
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn vertex_set_embedding_is_feasible((g, s) in with_subset(graph(10, 1))) {
        let f = FractionalSolution::from_vertex_set(&g, &s).unwrap();
        let r = check_feasible(&g, &f).unwrap();
        prop_assert!(r.feasible, "{:?}", r.violations);
        let edges = dcs_core::induced_stats(&g, 0, &s).unwrap().edge_count;
        prop_assert_eq!(r.objective, int(edges) / int(s.len()));
    }

    #[test]
    fn model_sizes(g in graph(10, 4)) {
        let m = build_lp(&g);
        let e = g.union_edges().len();
        prop_assert_eq!(m.variables.len(), g.n() + e + 1);
        prop_assert_eq!(m.constraints.len(), 1 + 2 * e + g.num_frames());
    }

    #[test]
    fn minrep_reduction_identity(parts in 1usize..=3, size in 1usize..=2, p in 0.2f64..0.9, seed in any::<u64>()) {
        let mr = random_minrep(parts, size, p, seed).unwrap();
        let (g, names) = reduce_minrep_to_ma(&mr).unwrap();
        prop_assert_eq!(names.len(), g.n());
        let opt = exact_best(&g, ObjectiveKind::MA, &OracleBudget::default()).unwrap().1.value;
        let cover = exact_minrep(&mr, &OracleBudget::default()).unwrap();
        prop_assert_eq!(opt, q(1, cover as i64 + 2));
    }

    #[test]
    fn mis_reduction_identity(g in graph(8, 1)) {
        prop_assume!(g.n() >= 2 && g.frames()[0].edge_count() < g.n() * (g.n() - 1) / 2);
        let h = reduce_mis_to_am(&g).unwrap();
        let opt = exact_best(&h, ObjectiveKind::AM, &OracleBudget::default()).unwrap().1.value;
        prop_assert_eq!(opt, int(exact_mis(&g, &OracleBudget::default()).unwrap()));
    }

    #[test]
    fn setcover_reduction_identity(m in 1usize..=5, elems in 1usize..=3, p in 0.2f64..0.8, seed in any::<u64>()) {
        let sc = random_set_system(m, elems, p, seed).unwrap();
        let (g, _) = reduce_setcover_to_mcss(&sc).unwrap();
        let best = exact_mcss(&g, &OracleBudget::default()).unwrap().len();
        prop_assert_eq!(best, m + exact_setcover(&sc, &OracleBudget::default()).unwrap() + 1);
        prop_assert!(mcss_greedy(&g).unwrap().solution.len() > m);
    }

    #[test]
    fn seeded_generators_repeat(seed in any::<u64>(), n in 2usize..40, t in 1usize..5) {
        let a = serialize(&random_sequence(n, t, 0.3, seed).unwrap());
        prop_assert_eq!(&a, &serialize(&random_sequence(n, t, 0.3, seed).unwrap()));
        let pp = PlantedParams { n: 64, eps: Rational64::new(1, 20), planted: seed % 2 == 0, seed };
        prop_assert_eq!(
            serialize(&gen_planted_2frame(&pp).unwrap().graph),
            serialize(&gen_planted_2frame(&pp).unwrap().graph)
        );
    }
}

#[test]
fn gap_instances_need_every_vertex() {
    for n in 2..=10 {
        let g = gen_gap_instance(n).unwrap();
        assert_eq!(score(&g, &VertexSet::all(n), ObjectiveKind::MA).unwrap().value, q(1, n as i64));
        for mask in 1u64..(1 << n) - 1 {
            let s = VertexSet::from_mask(mask);
            assert!(score(&g, &s, ObjectiveKind::MA).unwrap().value.is_zero(), "n={n} S={s}");
        }
    }
}

#[test]
fn harmonic_solutions_are_feasible() {
    for n in 2..=30 {
        let (g, f) = harmonic_solution(n).unwrap();
        let r = check_feasible(&g, &f).unwrap();
        assert!(r.feasible && r.violations.is_empty());
        assert!(f.y.iter().sum::<BigRational>().is_one());
        assert_eq!(r.objective, (BigRational::one() + harmonic_number(n - 1)).recip());
    }
}

#[test]
fn harmonic_ratio_lower_bound() {
    for n in 3..=64usize {
        let (_, f) = harmonic_solution(n).unwrap();
        // with OPT = 1/n the ratio is n h
        let ratio = int(n) * f.z;
        let denom = ln_upper((n - 1) as f64) + int(2);
        assert!(ratio * denom >= int(n), "n={n}");
    }
    let r = gap_report(6, &OracleBudget::default()).unwrap();
    assert_eq!(r.ratio, int(6) / (BigRational::one() + harmonic_number(5)));
}

#[test]
fn other_seeded_generators_repeat() {
    let rp = RecursiveParams {
        nvec: vec![40, 20, 8],
        pvec: vec![Rational64::new(1, 4), Rational64::new(1, 2), Rational64::new(3, 4)],
        seed: 9,
    };
    let a = sample_recursive_planted(&rp).unwrap();
    assert_eq!(serialize(&a.graph), serialize(&sample_recursive_planted(&rp).unwrap().graph));
    let base = random_sequence(10, 2, 0.5, 3).unwrap();
    let pad = |s| serialize(&gen_padded_sequence(&base, 5, Rational64::new(1, 10), 10, s).unwrap());
    assert_eq!(pad(4), pad(4));
    assert_ne!(pad(4), pad(5));
}
