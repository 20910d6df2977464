use std::collections::BTreeSet;

use mugen_core::artinian::{check_plane_duality, check_rough, intersect_components, irreducible_decomposition};
use mugen_core::bounds::{check_power_bound, check_product_bound};
use mugen_core::fiber::{
    analytic_spread_equigenerated, check_difference, check_freiman_set, doubling, exponent_points,
    freiman_dimension, h_coefficients, mu_series, reconstruct_series,
};
use mugen_core::planar::{
    check_common_safe_area, check_convex, in_safe_area, is_lexsegment, predicted_square_generators,
    safe_area_indices, square_mu_u64, triangle,
};
use mugen_core::{minimalize, Check, Monomial, MonomialIdeal, Staircase};
use num_bigint::BigInt;
use proptest::prelude::*;

fn monomial(arity: usize, max_exp: u64) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, arity).prop_map(|e| Monomial::from_u64s(&e))
}

fn ideal(arity: usize, max_gens: usize, max_exp: u64) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(monomial(arity, max_exp), 1..=max_gens)
        .prop_map(|gens| minimalize(&gens).unwrap())
}

fn compositions(n: usize, d: u64) -> Vec<Vec<u64>> {
    if n == 1 {
        return vec![vec![d]];
    }
    (0..=d)
        .rev()
        .flat_map(|first| {
            compositions(n - 1, d - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// A nonempty subset of the degree-`d` monomials, optionally with all pure powers.
fn equigenerated(arity: usize, max_d: u64, artinian: bool) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_d).prop_flat_map(move |d| {
        let all = compositions(arity, d);
        let len = all.len();
        prop::collection::vec(any::<bool>(), len).prop_map(move |mask| {
            let gens: Vec<Monomial> = all
                .iter()
                .zip(&mask)
                .filter(|(e, &keep)| keep || (artinian && e.iter().filter(|&&v| v > 0).count() == 1))
                .map(|(e, _)| Monomial::from_u64s(e))
                .collect();
            let gens = if gens.is_empty() { vec![Monomial::from_u64s(&all[0])] } else { gens };
            minimalize(&gens).unwrap()
        })
    })
}

fn staircase(max_m: usize, bound: u64) -> impl Strategy<Value = Staircase> {
    (1..=max_m).prop_flat_map(move |m| {
        let pick = move || {
            prop::sample::subsequence((0..=bound).collect::<Vec<_>>(), m)
        };
        (pick(), pick()).prop_map(|(mut a, b)| {
            a.reverse();
            Staircase::from_u64s(&a, &b).unwrap()
        })
    })
}

fn height_two_plane(max_m: usize, bound: u64) -> impl Strategy<Value = MonomialIdeal> {
    staircase(max_m, bound).prop_map(|s| s.normalize().1.to_ideal())
}

fn artinian(arity: usize, max_gens: usize, max_exp: u64) -> impl Strategy<Value = MonomialIdeal> {
    (prop::collection::vec(1..=max_exp, arity), prop::collection::vec(monomial(arity, max_exp), 0..max_gens))
        .prop_map(move |(pure, mut extra)| {
            for (v, &e) in pure.iter().enumerate() {
                let mut exps = vec![0; arity];
                exps[v] = e;
                extra.push(Monomial::from_u64s(&exps));
            }
            minimalize(&extra).unwrap()
        })
        .prop_filter("proper", |i| !i.is_unit())
}

fn rows(i: &MonomialIdeal) -> Vec<Vec<u64>> {
    i.generators().iter().map(|g| g.exponents().iter().map(|e| e.to_u64().unwrap()).collect()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn minimalize_is_idempotent_and_generates_the_same_ideal(
        gens in prop::collection::vec(monomial(3, 4), 1..8)
    ) {
        let i = minimalize(&gens).unwrap();
        prop_assert_eq!(minimalize(i.generators()).unwrap(), i.clone());
        for g in &gens {
            prop_assert!(i.contains(g).unwrap());
        }
        for g in i.generators() {
            prop_assert!(gens.contains(g));
        }
        for (p, a) in i.generators().iter().enumerate() {
            for b in &i.generators()[p + 1..] {
                prop_assert!(!a.divides(b).unwrap() && !b.divides(a).unwrap());
            }
        }
    }

    #[test]
    fn operations_are_commutative_and_associative(
        i in ideal(3, 4, 3), j in ideal(3, 4, 3), l in ideal(3, 3, 3)
    ) {
        prop_assert_eq!(i.product(&j).unwrap(), j.product(&i).unwrap());
        prop_assert_eq!(i.sum(&j).unwrap(), j.sum(&i).unwrap());
        prop_assert_eq!(i.intersect(&j).unwrap(), j.intersect(&i).unwrap());
        prop_assert_eq!(
            i.product(&j).unwrap().product(&l).unwrap(),
            i.product(&j.product(&l).unwrap()).unwrap()
        );
        prop_assert_eq!(
            i.intersect(&j).unwrap().intersect(&l).unwrap(),
            i.intersect(&j.intersect(&l).unwrap()).unwrap()
        );
        prop_assert_eq!(
            i.sum(&j).unwrap().product(&l).unwrap(),
            i.product(&l).unwrap().sum(&j.product(&l).unwrap()).unwrap()
        );
    }

    #[test]
    fn powers_are_iterated_products(i in ideal(3, 4, 3), k in 0usize..4) {
        prop_assert_eq!(i.power(k + 1), i.power(k).product(&i).unwrap());
    }

    #[test]
    fn product_membership_matches_pairwise_sums(i in ideal(2, 4, 3), j in ideal(2, 4, 3)) {
        let p = i.product(&j).unwrap();
        for x in 0..=7u64 {
            for y in 0..=7u64 {
                let u = Monomial::from_u64s(&[x, y]);
                let by_pairs = i.generators().iter().any(|g| {
                    j.generators().iter().any(|h| g.mul(h).unwrap().divides(&u).unwrap())
                });
                prop_assert_eq!(p.contains(&u).unwrap(), by_pairs);
            }
        }
    }

    #[test]
    fn intersection_membership(i in ideal(3, 4, 3), j in ideal(3, 4, 3), u in monomial(3, 6)) {
        let both = i.contains(&u).unwrap() && j.contains(&u).unwrap();
        prop_assert_eq!(i.intersect(&j).unwrap().contains(&u).unwrap(), both);
    }

    #[test]
    fn staircase_round_trip(s in staircase(7, 12)) {
        let i = s.to_ideal();
        prop_assert_eq!(Staircase::from_ideal(&i).unwrap(), s);
        prop_assert_eq!(i.mu(), Staircase::from_ideal(&i).unwrap().len());
    }

    #[test]
    fn word_sized_square_count_matches_power(s in staircase(7, 30)) {
        let a: Vec<u64> = s.a().iter().map(|e| e.to_u64().unwrap()).collect();
        let b: Vec<u64> = s.b().iter().map(|e| e.to_u64().unwrap()).collect();
        prop_assert_eq!(square_mu_u64(&a, &b, &mut Vec::new()), s.to_ideal().power(2).mu());
    }

    #[test]
    fn safe_areas_are_mutually_non_divisible(s in staircase(6, 10)) {
        let m = s.len();
        for i in 1..=m {
            for j in i..=m {
                let uij = s.generator(i).mul(&s.generator(j)).unwrap();
                for (k, l) in safe_area_indices(m, i, j) {
                    let ukl = s.generator(k).mul(&s.generator(l)).unwrap();
                    prop_assert!(!ukl.divides(&uij).unwrap());
                    prop_assert!(!uij.divides(&ukl).unwrap());
                    prop_assert!(in_safe_area(i, j, k, l));
                }
            }
        }
    }

    #[test]
    fn nonempty_common_safe_area_blocks_generation(
        s in staircase(6, 10),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 1..8)
    ) {
        let m = s.len();
        let all: Vec<(usize, usize)> = (1..=m).flat_map(|i| (i..=m).map(move |j| (i, j))).collect();
        let set: BTreeSet<(usize, usize)> = picks.iter().map(|p| all[p.index(all.len())]).collect();
        let set: Vec<_> = set.into_iter().collect();
        prop_assert!(check_common_safe_area(&s, &set).unwrap().holds());
    }

    #[test]
    fn marked_triangle_entries_are_the_square_generators(s in staircase(7, 12)) {
        let marked: BTreeSet<Monomial> =
            triangle(&s).into_iter().filter(|e| e.marked).map(|e| e.position.monomial).collect();
        let square: BTreeSet<Monomial> = s.to_ideal().power(2).generators().iter().cloned().collect();
        prop_assert_eq!(marked, square);
    }

    #[test]
    fn convex_or_concave_staircases_follow_the_prediction(
        m in 1usize..7, start in 0u64..5, d1 in 1u64..5, dd in 0u64..3, e1 in 1u64..5, ee in 0u64..3,
        concave in any::<bool>()
    ) {
        // gaps of a shrink and of b grow (concave), or the reverse (convex)
        let mut a = vec![0u64];
        let mut b = vec![start];
        for k in 0..m - 1 {
            let k = k as u64;
            let (ga, gb) = if concave { (d1 + dd * k, e1 + ee * k) } else { (d1 + dd * (m as u64 - 2 - k), e1 + ee * (m as u64 - 2 - k)) };
            a.push(a.last().unwrap() + ga);
            b.push(b.last().unwrap() + gb);
        }
        a.reverse();
        let s = Staircase::from_u64s(&a, &b).unwrap();
        prop_assume!(predicted_square_generators(&s).is_some());
        prop_assert!(check_convex(&s).unwrap().holds());
    }

    #[test]
    fn lexsegments_square_to_two_mu_minus_one(d in 1u64..9, gaps in prop::collection::vec(1u64..4, 0..6)) {
        let mut b = 0;
        let mut gens = vec![Monomial::from_u64s(&[d, 0])];
        for (k, g) in gaps.iter().enumerate().take(d as usize) {
            b += g;
            gens.push(Monomial::from_u64s(&[d - 1 - k as u64, b]));
        }
        let i = minimalize(&gens).unwrap();
        prop_assert!(is_lexsegment(&i).unwrap());
        prop_assert_eq!(i.power(2).mu() + 1, 2 * i.mu());
    }

    #[test]
    fn h_vector_reconstructs_series(i in ideal(3, 4, 3)) {
        prop_assume!(!i.is_unit());
        let series = mu_series(&i, 5).unwrap().values;
        for ell in 1..=3 {
            let h = h_coefficients(&series, ell);
            let back = reconstruct_series(ell, &h, series.len());
            prop_assert_eq!(back, series.iter().map(|&v| BigInt::from(v)).collect::<Vec<_>>());
        }
    }

    #[test]
    fn doubling_counts_the_square(i in equigenerated(3, 4, false)) {
        let points = exponent_points(&i);
        prop_assert_eq!(doubling(&points).len(), i.power(2).mu());
        prop_assert_eq!(freiman_dimension(&points).unwrap() + 1, analytic_spread_equigenerated(&i).unwrap());
        prop_assert!(check_difference(&i, 4).unwrap().holds());
    }

    #[test]
    fn freiman_inequality_on_integer_sets(
        pts in prop::collection::vec(prop::collection::vec(-4i64..5, 3), 1..10)
    ) {
        let pts: Vec<Vec<BigInt>> = pts.iter().map(|p| p.iter().map(|&v| BigInt::from(v)).collect()).collect();
        prop_assert!(check_freiman_set(&pts).unwrap().holds());
    }

    #[test]
    fn equigenerated_bounds(i in equigenerated(3, 4, false), j in equigenerated(3, 4, false)) {
        prop_assume!(!i.is_unit() && !j.is_unit());
        prop_assert!(check_product_bound(&i, &j).unwrap().holds());
        prop_assert!(check_power_bound(&i, 3).unwrap().holds());
    }

    #[test]
    fn decompositions_reconstruct(i in artinian(3, 4, 3)) {
        let c = irreducible_decomposition(&i).unwrap();
        prop_assert_eq!(intersect_components(&c).unwrap(), i.clone());
        for skip in 0..c.len() {
            if c.len() > 1 {
                let rest: Vec<_> = c.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, q)| q.clone()).collect();
                prop_assert_ne!(intersect_components(&rest).unwrap(), i.clone());
            }
        }
    }

    #[test]
    fn plane_duality(i in artinian(2, 5, 7)) {
        prop_assert!(check_plane_duality(&i).unwrap().holds(), "{:?}", rows(&i));
    }

    #[test]
    fn projections_commute_with_products(i in artinian(3, 3, 3), j in artinian(3, 3, 3)) {
        prop_assert!(check_rough(&i, &j).unwrap().holds());
    }

    #[test]
    fn height_two_normalization(i in height_two_plane(6, 9)) {
        prop_assert!(i.is_artinian() || i.is_unit());
    }
}
