//! Randomised checks beyond the exhaustive bounds.

use catalan_parity::bijections::{
    dyck_to_tree, foata_zeilberger, foata_zeilberger_inverse, krattenthaler, krattenthaler_inverse,
    plane_tree_to_stack_sortable, restricted_to_stack_sortable, restricted_to_walk_pair, simion_schmidt,
    stack_sortable_to_plane_tree, stack_sortable_to_restricted, stack_sortable_to_tree, stack_sortable_to_walk_pair,
    tree_to_dyck, tree_to_stack_sortable, walk_pair_to_restricted, walk_pair_to_stack_sortable,
};
use catalan_parity::objects::{BinaryTree, DyckPath, Pattern, Permutation, Step, WalkPair};
use catalan_parity::poly::LaurentPoly2;
use catalan_parity::series::TruncatedSeries;
use catalan_parity::statistics::{
    ascent_set, descent_bottoms, descent_set, excedance_profile, mark_count, mnd, peak_profile, run_profile,
    tree_chain_profile,
};
use num_bigint::BigInt;
use proptest::prelude::*;

fn permutation(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|w| Permutation::new(w).unwrap())
}

/// Uniform Dyck paths by the cycle lemma: among the rotations of a word with
/// `n` east and `n + 1` north steps exactly one stays weakly above until its
/// final step, which is then dropped.
fn dyck_path(max_n: usize) -> impl Strategy<Value = DyckPath> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let mut word = vec![Step::E; n];
            word.extend(vec![Step::N; n + 1]);
            Just(word).prop_shuffle()
        })
        .prop_map(|word| {
            let mut height = 0i64;
            let (mut lowest, mut start) = (0i64, 0);
            for (i, s) in word.iter().enumerate() {
                height += if *s == Step::E { 1 } else { -1 };
                if height < lowest {
                    lowest = height;
                    start = i + 1;
                }
            }
            let mut rotated: Vec<Step> = word[start..].iter().chain(&word[..start]).copied().collect();
            rotated.pop();
            DyckPath::new(rotated).unwrap()
        })
}

fn stack_sortable(max_n: usize) -> impl Strategy<Value = Permutation> {
    dyck_path(max_n).prop_map(|d| tree_to_stack_sortable(&dyck_to_tree(&d)))
}

fn restricted(max_n: usize) -> impl Strategy<Value = Permutation> {
    dyck_path(max_n).prop_map(|d| krattenthaler_inverse(&d))
}

fn laurent() -> impl Strategy<Value = LaurentPoly2> {
    prop::collection::vec((-2i32..3, -2i32..3, -4i64..5), 0..5).prop_map(|terms| {
        let mut p = LaurentPoly2::zero();
        for (a, b, c) in terms {
            p.add_term(a, b, BigInt::from(c));
        }
        p
    })
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

proptest! {
    #[test]
    fn generated_objects_are_in_their_classes(p in stack_sortable(14), q in restricted(14)) {
        prop_assert!(Pattern::P231.avoided_by(&p));
        prop_assert!(Pattern::P321.avoided_by(&q));
    }

    #[test]
    fn text_forms_round_trip(p in permutation(12), d in dyck_path(12)) {
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p.clone());
        prop_assert_eq!(d.to_string().parse::<DyckPath>().unwrap(), d.clone());
        let t = dyck_to_tree(&d);
        prop_assert_eq!(t.to_string().parse::<BinaryTree>().unwrap(), t);
        let wp = stack_sortable_to_walk_pair(&tree_to_stack_sortable(&dyck_to_tree(&d))).unwrap();
        prop_assert_eq!(wp.to_string().parse::<WalkPair>().unwrap(), wp);
    }

    #[test]
    fn permutation_symmetries(p in permutation(12)) {
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.reverse_complement().reverse_complement(), p.clone());
        let r = run_profile(&p);
        prop_assert_eq!(r.dr.sum(), p.len());
        prop_assert_eq!(r.ar.sum(), p.len());
        prop_assert!(2 * mnd(&p) <= p.len());
        let pk = peak_profile(&p);
        prop_assert!(pk.pk_o + pk.pk_e <= pk.lpk.len());
    }

    #[test]
    fn laguerre_histories_round_trip(p in permutation(10)) {
        prop_assert_eq!(foata_zeilberger_inverse(&foata_zeilberger(&p)), p);
    }

    #[test]
    fn stack_sortable_transports(p in stack_sortable(14)) {
        let t = stack_sortable_to_tree(&p).unwrap();
        prop_assert_eq!(tree_to_stack_sortable(&t), p.clone());
        let chains = tree_chain_profile(&t);
        prop_assert_eq!(chains.lc, run_profile(&p).dr);
        prop_assert_eq!(chains.rc, run_profile(&p.inverse()).ar);

        let wp = stack_sortable_to_walk_pair(&p).unwrap();
        prop_assert_eq!(walk_pair_to_stack_sortable(&wp).unwrap(), p.clone());
        prop_assert_eq!(wp.bottom.hor(), descent_set(&p));
        prop_assert_eq!(wp.top.ver(), ascent_set(&p.inverse()));

        prop_assert_eq!(descent_bottoms(&p.inverse()), descent_set(&p));

        let tree = stack_sortable_to_plane_tree(&p).unwrap();
        prop_assert_eq!(plane_tree_to_stack_sortable(&tree), p.clone());
        prop_assert_eq!(mark_count(&tree), mnd(&p));
    }

    #[test]
    fn restricted_transports(p in restricted(14)) {
        let d = krattenthaler(&p).unwrap();
        prop_assert_eq!(krattenthaler_inverse(&d), p.clone());

        let wp = restricted_to_walk_pair(&p).unwrap();
        prop_assert_eq!(walk_pair_to_restricted(&wp).unwrap(), p.clone());
        prop_assert_eq!(wp.bottom.hor(), excedance_profile(&p).exc);
        prop_assert_eq!(wp.top.ver(), excedance_profile(&p.inverse()).wexc_shifted);

        let lpk = sorted(peak_profile(&p).lpk);
        let s = simion_schmidt(&p).unwrap();
        prop_assert!(Pattern::P312.avoided_by(&s));
        prop_assert_eq!(sorted(peak_profile(&s).lpk), lpk.clone());
        let sigma = restricted_to_stack_sortable(&p).unwrap();
        prop_assert!(Pattern::P231.avoided_by(&sigma));
        prop_assert_eq!(sorted(peak_profile(&sigma).lpk), lpk);
        prop_assert_eq!(stack_sortable_to_restricted(&sigma).unwrap(), p);
    }

    #[test]
    fn trees_and_dyck_paths(d in dyck_path(16)) {
        let t = dyck_to_tree(&d);
        prop_assert_eq!(tree_to_dyck(&t), d.clone());
        prop_assert_eq!(t.size(), d.order());
    }

    #[test]
    fn laurent_ring_laws(p in laurent(), q in laurent(), r in laurent()) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
        prop_assert_eq!(&(&p - &p), &LaurentPoly2::zero());
        prop_assert_eq!(p.swap_xy().swap_xy(), p.clone());
    }

    #[test]
    fn series_inverse(coeffs in prop::collection::vec(laurent(), 1..7), sign in prop::bool::ANY, a in -2i32..3, b in -2i32..3) {
        let order = 6;
        let mut all = vec![LaurentPoly2::monomial(BigInt::from(if sign { 1 } else { -1 }), a, b)];
        all.extend(coeffs);
        let s = TruncatedSeries::from_coeffs(all, order);
        let inv = s.inverse().unwrap();
        prop_assert_eq!(&s * &inv, TruncatedSeries::one(order));
        prop_assert_eq!(s.swap_xy().swap_xy(), s);
    }
}
