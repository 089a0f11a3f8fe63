//! Property tests for the exact-arithmetic and graph layers.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sgcodes::graph::EdgeSet;
use sgcodes::matroid::Matroid;
use sgcodes::{ExactMatrix, ScalarDomain};

fn small_matrix_strategy() -> impl Strategy<Value = (usize, usize, Vec<i64>)> {
    (1usize..=5, 1usize..=6).prop_flat_map(|(rows, cols)| {
        proptest::collection::vec(-3i64..=3, rows * cols).prop_map(move |data| (rows, cols, data))
    })
}

proptest! {
    #[test]
    fn rank_axioms_hold_on_random_rational_matrices((rows, cols, data) in small_matrix_strategy()) {
        let m = ExactMatrix::from_integers(ScalarDomain::Rationals, rows, cols, &data).unwrap();
        let rank_of = |bits: u64| {
            let subset: Vec<usize> = (0..cols).filter(|&c| bits & (1 << c) != 0).collect();
            m.rank_of_columns(&subset).unwrap()
        };
        let full = (1u64 << cols) - 1;
        for x in 0..=full {
            let rx = rank_of(x);
            prop_assert!(rx <= (x.count_ones() as usize));
            // R1: adding one element changes the rank by 0 or 1
            for e in 0..cols {
                if x & (1 << e) == 0 {
                    let rxe = rank_of(x | (1 << e));
                    prop_assert!(rxe == rx || rxe == rx + 1);
                }
            }
        }
        // R2 (submodularity) on sampled pairs
        let mut seed = 0x9e3779b97f4a7c15u64;
        for _ in 0..32 {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let x = seed & full;
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let y = seed & full;
            prop_assert!(rank_of(x | y) + rank_of(x & y) <= rank_of(x) + rank_of(y));
        }
    }

    #[test]
    fn columns_split_into_rank_plus_kernel((rows, cols, data) in small_matrix_strategy()) {
        for domain in [ScalarDomain::Rationals, ScalarDomain::prime_field(5).unwrap()] {
            let m = ExactMatrix::from_integers(domain, rows, cols, &data).unwrap();
            prop_assert_eq!(m.rank() + m.kernel_basis().len(), cols);
        }
    }

    #[test]
    fn prime_field_rank_never_exceeds_rational_rank((rows, cols, data) in small_matrix_strategy()) {
        let mq = ExactMatrix::from_integers(ScalarDomain::Rationals, rows, cols, &data).unwrap();
        for p in [2u64, 3, 5, 7] {
            let mp =
                ExactMatrix::from_integers(ScalarDomain::prime_field(p).unwrap(), rows, cols, &data)
                    .unwrap();
            prop_assert!(mp.rank() <= mq.rank());
        }
    }
}

#[test]
fn balanced_components_bounded_by_components_and_balance_iff_equal() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let g = common::random_graph(&mut rng, true);
        let m = g.edge_count();
        for bits in 0u64..(1 << m) {
            let removed = EdgeSet(bits);
            let c = g.connected_components(removed);
            let c0 = g.balanced_component_count(removed);
            assert!(c0 <= c);
        }
        assert_eq!(
            g.is_balanced(),
            g.balanced_component_count(EdgeSet::empty())
                == g.connected_components(EdgeSet::empty())
        );
    }
}

#[test]
fn frustration_by_switching_equals_deletion_brute_force() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..60 {
        let g = common::random_graph(&mut rng, true);
        let m = g.edge_count();
        let mut oracle = usize::MAX;
        for bits in 0u64..(1 << m) {
            let removed = EdgeSet(bits);
            if g.connected_components(removed) == g.balanced_component_count(removed) {
                oracle = oracle.min(removed.len());
            }
        }
        assert_eq!(g.frustration_index_switching().unwrap(), oracle);
    }
}

#[test]
fn frustration_vanishes_exactly_on_balanced_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..120 {
        let g = common::random_graph(&mut rng, true);
        assert_eq!(g.frustration_index_switching().unwrap() == 0, g.is_balanced());
    }
}

#[test]
fn cogirth_and_edge_connectivity_are_strictly_increasing() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    let mut checked = 0;
    for _ in 0..200 {
        let g = common::random_graph(&mut rng, false);
        if !g.is_connected() {
            continue;
        }
        let lambda = g.edge_connectivity_table().unwrap();
        for w in lambda.windows(2) {
            assert!(w[0] < w[1]);
        }
        if !g.is_balanced() {
            let upsilon = g.cogirth_table().unwrap();
            for w in upsilon.windows(2) {
                assert!(w[0] < w[1]);
            }
            checked += 1;
        }
    }
    assert!(checked > 10, "generator should produce unbalanced connected graphs");
}

#[test]
fn matroid_rank_axioms_hold_for_signed_graphic_matroids() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    for _ in 0..40 {
        let g = common::random_graph(&mut rng, true);
        let m = sgcodes::matroid::signed_graphic_matroid(&g);
        let n = m.ground_size();
        let full = EdgeSet::full(n);
        assert_eq!(m.rank(EdgeSet::empty()), 0);
        for bits in 0u64..(1 << n) {
            let x = EdgeSet(bits);
            let rx = m.rank(x);
            assert!(rx <= x.len());
            for e in 1..=n {
                if !x.contains(e) {
                    let mut xe = x;
                    xe.insert(e);
                    let rxe = m.rank(xe);
                    assert!(rxe == rx || rxe == rx + 1);
                }
            }
        }
        // submodularity on sampled pairs
        let mut seed = 0xdeadbeefu64;
        for _ in 0..64 {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let x = EdgeSet(seed & full.0);
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let y = EdgeSet(seed & full.0);
            assert!(
                m.rank(x.union(y)) + m.rank(x.intersection(y)) <= m.rank(x) + m.rank(y)
            );
        }
    }
}
