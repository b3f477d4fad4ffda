//! Library results against deliberately naive reimplementations.

use catalan_parity::objects::{
    all_permutations, avoiders, baxter_permutations, binary_trees, catalan, dyck_paths, plane_trees,
    refined_catalan, Pattern, Permutation,
};
use catalan_parity::statistics::{
    descent_set, excedance_profile, mna, mnd, peak_profile, run_profile, tree_chain_profile,
};
use num_bigint::BigUint;

/// Cubic scan for a classical pattern of length three.
fn contains(w: &[usize], pattern: [usize; 3]) -> bool {
    let n = w.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let triple = [w[i], w[j], w[k]];
                let rank = |v: usize| triple.iter().filter(|&&u| u <= v).count();
                if triple.map(rank) == pattern {
                    return true;
                }
            }
        }
    }
    false
}

/// Largest set of pairwise disjoint adjacent pairs `(i, i+1)` satisfying `rel`,
/// by trying every subset of pair starts.
fn max_disjoint_pairs(w: &[usize], rel: impl Fn(usize, usize) -> bool) -> usize {
    let starts: Vec<usize> = (0..w.len().saturating_sub(1)).filter(|&i| rel(w[i], w[i + 1])).collect();
    let mut best = 0;
    for mask in 0u32..(1 << starts.len()) {
        let chosen: Vec<usize> = (0..starts.len()).filter(|b| mask >> b & 1 == 1).map(|b| starts[b]).collect();
        if chosen.windows(2).all(|p| p[1] > p[0] + 1) {
            best = best.max(chosen.len());
        }
    }
    best
}

/// Largest subset of `set` containing no two consecutive integers.
fn max_spread_subset(set: &[usize]) -> usize {
    (0u32..(1 << set.len()))
        .map(|mask| (0..set.len()).filter(|b| mask >> b & 1 == 1).map(|b| set[b]).collect::<Vec<_>>())
        .filter(|chosen| chosen.windows(2).all(|p| p[1] > p[0] + 1))
        .map(|chosen| chosen.len())
        .max()
        .unwrap_or(0)
}

#[test]
fn avoiders_match_a_filter_over_all_permutations() {
    for n in 0..=7 {
        let all = all_permutations(n);
        for pattern in Pattern::classical_patterns() {
            let Pattern::Classical(word) = pattern else { unreachable!() };
            let naive: Vec<Permutation> = all.iter().filter(|p| !contains(p.as_slice(), word)).cloned().collect();
            assert_eq!(avoiders(n, pattern), naive, "n = {n}, pattern {pattern}");
        }
    }
}

#[test]
fn non_overlapping_runs_match_subset_search() {
    for n in 1..=7 {
        for p in all_permutations(n) {
            let w = p.as_slice();
            assert_eq!(mnd(&p), max_disjoint_pairs(w, |a, b| a > b), "{p}");
            assert_eq!(mna(&p), max_disjoint_pairs(w, |a, b| a < b), "{p}");
            let exc = excedance_profile(&p);
            assert_eq!(exc.mne, max_spread_subset(&exc.exc), "{p}");
            assert_eq!(exc.mnw, max_spread_subset(&exc.wexc_shifted), "{p}");
        }
    }
}

#[test]
fn run_parities_count_maximal_runs() {
    for n in 1..=7 {
        for p in all_permutations(n) {
            let w = p.as_slice();
            // maximal ascending runs by direct splitting
            let mut runs = vec![1];
            for i in 1..n {
                if w[i] > w[i - 1] {
                    *runs.last_mut().unwrap() += 1;
                } else {
                    runs.push(1);
                }
            }
            let r = run_profile(&p);
            assert_eq!(r.oar, runs.iter().filter(|&&l| l % 2 == 1).count(), "{p}");
            assert_eq!(r.ear, runs.iter().filter(|&&l| l % 2 == 0).count(), "{p}");
            assert_eq!(r.dr.sum(), n);
        }
    }
}

#[test]
fn left_peaks_by_definition() {
    for n in 1..=7 {
        for p in all_permutations(n) {
            let w = p.as_slice();
            let mut naive: Vec<usize> = (0..n.saturating_sub(1))
                .filter(|&i| (i == 0 || w[i - 1] < w[i]) && w[i] > w[i + 1])
                .map(|i| w[i])
                .collect();
            naive.sort_unstable();
            let pk = peak_profile(&p);
            let mut lpk = pk.lpk.clone();
            lpk.sort_unstable();
            assert_eq!(lpk, naive, "{p}");
            assert_eq!(pk.lpk_o + pk.lpk_e, lpk.len());
            assert!(pk.pk_o <= pk.lpk_o && pk.pk_e <= pk.lpk_e);
        }
    }
}

#[test]
fn catalan_families_have_catalan_many_members() {
    for n in 1..=9 {
        let c = catalan(n as u64);
        assert_eq!(BigUint::from(binary_trees(n).len()), c);
        assert_eq!(BigUint::from(plane_trees(n).len()), c);
        assert_eq!(BigUint::from(dyck_paths(n).len()), c);
    }
    assert_eq!(catalan(10), BigUint::from(16796u32));
}

#[test]
fn refined_catalan_counts_by_mnd() {
    // spot value: three letters, one non-overlapping descent
    assert_eq!(refined_catalan(3, 1), BigUint::from(4u32));
    for n in 1..=8u64 {
        let perms = avoiders(n as usize, Pattern::P231);
        for k in 0..=n / 2 {
            let count = perms.iter().filter(|p| mnd(p) == k as usize).count();
            assert_eq!(BigUint::from(count), refined_catalan(n, k), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn baxter_numbers() {
    let counts: Vec<usize> = (1..=7).map(|n| baxter_permutations(n).len()).collect();
    assert_eq!(counts, [1, 2, 6, 22, 92, 422, 2074]);
}

#[test]
fn left_chains_of_binary_trees_partition_the_nodes() {
    for n in 1..=8 {
        for t in binary_trees(n) {
            let c = tree_chain_profile(&t);
            assert_eq!(c.lc.sum(), n);
            assert_eq!(c.rc.sum(), n);
            assert_eq!(2 * c.x + c.olc, n);
            assert_eq!(2 * c.y + c.orc, n);
        }
    }
}

#[test]
fn descents_of_small_words() {
    let p = Permutation::from_digits("318972456").unwrap();
    assert_eq!(descent_set(&p), [1, 4, 5]);
    assert_eq!(run_profile(&p).odr, 5);
}
