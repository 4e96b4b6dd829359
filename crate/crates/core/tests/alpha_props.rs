mod common;

use common::{alpha, graph, permutation};
use dgas_core::alpha::{
    build_ac, criterion_check, spectrum_key, structure_check, unscaled_walk_matrix, walk_matrix,
    AlphaParam, CriterionOptions, Verdict,
};
use dgas_core::graph::{complement, Graph};
use dgas_core::linalg::{det_bareiss, rank_mod_p, BigIntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn walk_sums(g: &Graph, a: AlphaParam, kmax: usize) -> Vec<BigInt> {
    let ac = build_ac(g, a);
    let mut v = vec![BigInt::from(1); g.order()];
    let mut out = vec![BigInt::from(g.order())];
    for _ in 0..kmax {
        v = ac.mul_vec(&v);
        out.push(v.iter().sum());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn walk_sum_congruences(g in graph(2, 10), a in alpha()) {
        let c = BigInt::from(a.c_alpha());
        let sums = walk_sums(&g, a, 2 * g.order());
        prop_assert!(sums[1].is_multiple_of(&(&c * 2)));
        for s in &sums[2..] {
            prop_assert!(s.is_multiple_of(&(&c * &c * 2)));
        }
    }

    #[test]
    fn walk_rank_mod_two_bounded(g in graph(2, 10), a in alpha()) {
        let w = walk_matrix(&g, a);
        prop_assert!(rank_mod_p(&w, 2).unwrap() <= g.order().div_ceil(2));
    }

    #[test]
    fn complement_identity(g in graph(1, 10), a in alpha()) {
        let n = g.order();
        let lhs = build_ac(&complement(&g), a);
        let (aa, bb) = (BigInt::from(a.a()), BigInt::from(a.b()));
        let j = BigIntMatrix::from_fn(n, n, |_, _| bb.clone());
        let i = BigIntMatrix::identity(n).scale(&(&aa * (n as i64 - 1) - &bb));
        let rhs = j.add(&i).sub(&build_ac(&g, a));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unscaled_walk_is_column_scaling(g in graph(1, 9), a in alpha()) {
        let w = walk_matrix(&g, a);
        let u = unscaled_walk_matrix(&g, a);
        let n = g.order();
        let c = BigInt::from(a.c_alpha());
        let d = BigIntMatrix::from_fn(n, n, |i, j| match (i == j, i) {
            (true, 0) => BigInt::from(1),
            (true, _) => c.clone(),
            _ => BigInt::zero(),
        });
        prop_assert_eq!(&w * &d, u.clone());
        // Column k of the unscaled matrix is A_c^k 1.
        let ac = build_ac(&g, a);
        for k in 1..n {
            prop_assert_eq!(ac.mul_vec(&u.column(k - 1)), u.column(k));
        }
    }

    #[test]
    fn invariants_under_relabeling(
        (g, p) in graph(2, 9).prop_flat_map(|g| { let n = g.order(); (Just(g), permutation(n)) }),
        a in alpha(),
    ) {
        let h = g.relabel(&p);
        prop_assert_eq!(spectrum_key(&g, a), spectrum_key(&h, a));
        let rg = criterion_check(&g, a, &CriterionOptions::default());
        let rh = criterion_check(&h, a, &CriterionOptions::default());
        prop_assert_eq!(rg.det_walk.abs(), rh.det_walk.abs());
        prop_assert_eq!(rg.verdict, rh.verdict);
    }

    #[test]
    fn spectrum_key_swaps_under_complement(g in graph(1, 9), a in alpha()) {
        let k = spectrum_key(&g, a);
        let kc = spectrum_key(&complement(&g), a);
        prop_assert_eq!(k.graph, kc.complement);
        prop_assert_eq!(k.complement, kc.graph);
    }

    #[test]
    fn report_is_self_consistent(g in graph(1, 10), a in alpha()) {
        let r = criterion_check(&g, a, &CriterionOptions::default());
        let n = g.order();
        prop_assert_eq!(&r.det_walk, &det_bareiss(&walk_matrix(&g, a)).unwrap());
        let two_pow = BigInt::from(1) << (n / 2);
        prop_assert_eq!(r.reduced_integral, r.det_walk.is_multiple_of(&two_pow));
        match r.verdict {
            Verdict::CertifiedDgas => {
                prop_assert!(n >= 5 && r.reduced_odd && r.square_free == Some(true) && r.ranks_full());
                prop_assert!(!(n % 2 == 0 && a.c_alpha() % 2 == 1 && a.c_alpha() >= 3));
                let s = structure_check(&g, a).unwrap();
                prop_assert_eq!(s.violations(true), Vec::<String>::new());
            }
            Verdict::SingularWalkMatrix => prop_assert!(r.det_walk.is_zero()),
            Verdict::SmallOrder => prop_assert!(n < 5 && !r.det_walk.is_zero()),
            Verdict::ExcludedCase => {
                prop_assert!(n % 2 == 0 && a.c_alpha() >= 3 && a.c_alpha() % 2 == 1);
                prop_assert!(r.reduced_odd && r.square_free == Some(true) && r.ranks_full());
            }
            Verdict::FailsArithmetic => prop_assert!(
                !r.reduced_odd || r.square_free == Some(false) || !r.ranks_full()
            ),
            Verdict::UndecidedFactorization => prop_assert!(r.unfactored.is_some()),
        }
    }
}

#[test]
fn json_shape() {
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 2), (1, 4)]).unwrap();
    let r = criterion_check(&g, "1/2".parse().unwrap(), &CriterionOptions::default());
    let v: serde_json::Value = serde_json::to_value(&r).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["alpha"], "1/2");
    assert!(v["det_walk"].is_string());
    assert!(v["reduced_det"].is_string());
    assert_eq!(v["verdict"], r.verdict.as_str());
    if let Some(f) = v["factorization"].as_array() {
        assert!(f.iter().all(|pe| pe[0].is_string() && pe[1].is_u64()));
    }
}
