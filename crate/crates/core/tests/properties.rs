//! Cross-module properties: randomized invariants connecting the sequence
//! statistics, the simplex point counts, the bijections, and the order
//! polytope formulas.

use num_bigint::BigInt;
use proptest::prelude::*;

use lhl::inversion::{
    enumerate_all, enumerate_restricted, s_derangement_enum, s_derangement_recursive, s_eulerian,
    SSequence,
};
use lhl::order::OrderPolytope;
use lhl::perm::{derangement_to_inversion, inversion_to_derangement};
use lhl::poly::IntPolynomial;
use lhl::poset::{enumerate_nonisomorphic, Poset};
use lhl::simplex::{rem_map, LatticeSimplex, PointEnumerator};

fn s_strategy(max_len: usize, max_entry: u64) -> impl Strategy<Value = SSequence> {
    prop::collection::vec(1..=max_entry, 1..=max_len)
        .prop_map(|entries| SSequence::new(entries).expect("positive entries"))
}

fn poset_strategy(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n).prop_flat_map(|n| {
        let posets = enumerate_nonisomorphic(n).expect("small poset corpus");
        let count = posets.len();
        (Just(posets), 0..count).prop_map(|(posets, i)| posets[i].clone())
    })
}

proptest! {
    #[test]
    fn eulerian_counts_every_sequence(s in s_strategy(4, 5)) {
        prop_assert_eq!(s_eulerian(&s).eval_at_one(), s.product());
        prop_assert_eq!(enumerate_all(&s).len(), s.product_u64().unwrap() as usize);
    }

    #[test]
    fn complement_is_an_involution_exchanging_the_statistics(s in s_strategy(4, 5)) {
        for e in enumerate_all(&s) {
            let c = e.complement();
            prop_assert_eq!(e.ascents(), c.descents());
            prop_assert_eq!(e.descents(), c.ascents());
            prop_assert_eq!(c.complement(), e);
        }
    }

    #[test]
    fn recursion_matches_enumeration(s in s_strategy(5, 5)) {
        prop_assert_eq!(s_derangement_recursive(&s), s_derangement_enum(&s));
    }

    #[test]
    fn derangement_polynomial_is_symmetric_with_nonnegative_gamma(s in s_strategy(5, 5)) {
        let d = s_derangement_recursive(&s);
        let degree = s.len() + 1;
        prop_assert!(d.is_symmetric(degree));
        prop_assert!(d.gamma_vector(degree).unwrap().is_nonnegative());
    }

    #[test]
    fn box_points_count_the_volume_and_recover_hstar(s in s_strategy(4, 4)) {
        let simplex = LatticeSimplex::lecture_hall(&s).unwrap();
        let enumerator = PointEnumerator::new();
        let points = enumerator.half_open_points(&simplex).unwrap();
        prop_assert_eq!(BigInt::from(points.len()), simplex.normalized_volume());

        let mut heights = vec![BigInt::from(0); s.len() + 1];
        for point in &points {
            heights[point.height()] += 1;
        }
        prop_assert_eq!(IntPolynomial::new(heights), enumerator.hstar(&simplex).unwrap());
    }

    #[test]
    fn rem_is_a_bijection_preserving_the_statistic(s in s_strategy(4, 4)) {
        let simplex = LatticeSimplex::lecture_hall(&s).unwrap();
        let points = PointEnumerator::new().half_open_points(&simplex).unwrap();
        let mut images = Vec::with_capacity(points.len());
        for point in &points {
            let e = rem_map(point, &s).unwrap();
            prop_assert_eq!(e.descents(), point.height());
            prop_assert_eq!(point.is_interior(), e.is_restricted());
            images.push(e.entries().to_vec());
        }
        images.sort();
        images.dedup();
        prop_assert_eq!(images.len(), points.len());
        prop_assert_eq!(images.len(), enumerate_all(&s).len());
    }

    #[test]
    fn cycle_bijection_round_trips(n in 2usize..=6, pick in 0usize..10_000) {
        let bound = SSequence::derangement_bound(n).unwrap();
        let restricted = enumerate_restricted(&bound);
        let e = &restricted[pick % restricted.len()];
        let pi = inversion_to_derangement(e).unwrap();
        prop_assert!(pi.is_derangement());
        prop_assert_eq!(pi.excedances(), e.descents());
        prop_assert_eq!(&derangement_to_inversion(&pi).unwrap(), e);
    }

    #[test]
    fn hstar_is_translation_invariant(s in s_strategy(3, 4), shift in prop::collection::vec(-3i64..=3, 3)) {
        let simplex = LatticeSimplex::lecture_hall(&s).unwrap();
        let moved = LatticeSimplex::new(
            simplex
                .vertices()
                .iter()
                .map(|v| v.iter().zip(&shift).map(|(x, c)| x + c).collect())
                .collect(),
        )
        .unwrap();
        let enumerator = PointEnumerator::new();
        prop_assert_eq!(
            enumerator.hstar_pair(&simplex).unwrap(),
            enumerator.hstar_pair(&moved).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn order_hstar_at_one_counts_weighted_extensions(
        poset in poset_strategy(4),
        entries in prop::collection::vec(1u64..=3, 4),
    ) {
        let n = poset.n();
        let s = SSequence::new(entries[..n].to_vec()).unwrap();
        let extensions = poset.linear_extensions().len();
        let op = OrderPolytope::new(poset, s.clone()).unwrap();
        prop_assert_eq!(
            op.ehrhart_hstar().unwrap().eval_at_one(),
            BigInt::from(extensions) * s.product()
        );
    }

    #[test]
    fn triangulation_formula_matches_ehrhart(
        poset in poset_strategy(4),
        entries in prop::collection::vec(1u64..=2, 4),
    ) {
        let n = poset.n();
        let s = SSequence::new(entries[..n].to_vec()).unwrap();
        let op = OrderPolytope::new(poset, s).unwrap();
        prop_assert_eq!(op.betke_mcmullen_hstar().unwrap(), op.ehrhart_hstar().unwrap());
    }

    #[test]
    fn dilate_search_matches_the_naive_counter(
        poset in poset_strategy(3),
        entries in prop::collection::vec(1u64..=3, 3),
        t in 0u64..=3,
    ) {
        let n = poset.n();
        let s = SSequence::new(entries[..n].to_vec()).unwrap();
        let op = OrderPolytope::new(poset, s).unwrap();
        prop_assert_eq!(
            op.count_dilate_points(t).unwrap(),
            op.count_dilate_points_naive(t).unwrap()
        );
    }

    #[test]
    fn symmetric_decomposition_recovers_its_parts(
        half_a in prop::collection::vec(0i64..=9, 1..=3),
        half_b in prop::collection::vec(0i64..=9, 1..=3),
    ) {
        // Build a palindrome of degree d from each half, then check the
        // decomposition of a + z*b against (a, b).
        let palindrome = |half: &[i64], degree: usize| {
            let mut coeffs = vec![0i64; degree + 1];
            for (i, &c) in half.iter().enumerate() {
                coeffs[i] = c;
                coeffs[degree - i] = c;
            }
            IntPolynomial::from_i64s(&coeffs)
        };
        let d = 2 * half_a.len();
        let a = palindrome(&half_a, d);
        let b = palindrome(&half_b[..half_b.len().min(half_a.len())], d - 1);
        let h = &a + &b.shifted_up(1);
        let (got_a, got_b) = h.symmetric_decomposition(d).unwrap();
        prop_assert_eq!(got_a, a);
        prop_assert_eq!(got_b, b);
    }
}
