//! Exhaustive checks over all objects of each size up to a bound.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Display;
use std::hash::Hash;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde_json::{json, Value};

use super::Outcome;
use crate::bijections::{
    dyck_to_tree, foata_zeilberger, foata_zeilberger_inverse, krattenthaler, krattenthaler_inverse_checked,
    maximise_weights, plane_tree_to_stack_sortable, restricted_to_stack_sortable, restricted_to_walk_pair,
    simion_schmidt, simion_schmidt_inverse, stack_sortable_to_plane_tree, stack_sortable_to_restricted,
    stack_sortable_to_tree, stack_sortable_to_walk_pair, tree_to_dyck, tree_to_stack_sortable,
    walk_pair_to_restricted, walk_pair_to_stack_sortable, BaxterTable, WalkPairTransfer,
};
use crate::objects::{
    all_permutations, avoiders, baxter_permutations, binary_trees, catalan, factorial, laguerre_histories,
    plane_trees, refined_catalan, DyckPath, Pattern, Permutation, PlaneTree,
};
use crate::poly::BivariatePolynomial;
use crate::schett::{catalan_schett, schett, Route};
use crate::series::parse_tpoly;
use crate::statistics::{
    ascent_set, descent_bottoms, descent_set, descent_tops, dyck_profile, excedance_profile, idr, iar,
    mark_count, mna, mnd, peak_profile, run_profile, shifted_descent_tops, tree_chain_profile,
};

/// Per-object verdict: `Err` carries the reason the object fails.
type Verdict = std::result::Result<(), String>;
/// Per-size verdict: `Err` carries the serialized counterexample.
type Found = std::result::Result<(), Value>;

fn ensure(cond: bool, reason: impl FnOnce() -> String) -> Verdict {
    if cond {
        Ok(())
    } else {
        Err(reason())
    }
}

fn sizes(max_n: usize, mut check: impl FnMut(usize) -> Found) -> Outcome {
    for n in 1..=max_n {
        if let Err(counterexample) = check(n) {
            return Outcome::counterexample(counterexample);
        }
    }
    Outcome::pass()
}

/// First failing object in enumeration order, found in parallel.
fn objects<T, F>(n: usize, items: &[T], check: F) -> Found
where
    T: Display + Sync,
    F: Fn(&T) -> Verdict + Sync,
{
    match items
        .par_iter()
        .find_map_first(|x| check(x).err().map(|reason| (x.to_string(), reason)))
    {
        Some((object, reason)) => Err(json!({ "n": n, "object": object, "reason": reason })),
        None => Ok(()),
    }
}

fn aggregate(n: usize, cond: bool, reason: impl FnOnce() -> String) -> Found {
    if cond {
        Ok(())
    } else {
        Err(json!({ "n": n, "reason": reason() }))
    }
}

/// Checks that `images` are pairwise distinct and number `C_n`.
fn catalan_many_distinct<T: Hash + Eq>(n: usize, images: impl IntoIterator<Item = T>) -> Found {
    let distinct: HashSet<T> = images.into_iter().collect();
    let expected = catalan(n as u64);
    aggregate(n, BigUint::from(distinct.len()) == expected, || {
        format!("{} distinct images, expected {expected}", distinct.len())
    })
}

fn err(e: crate::Error) -> String {
    e.to_string()
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

/// Positions `i ∈ [n-1]` of left peaks, with `π_0 = 0`.
fn left_peak_positions(pi: &Permutation) -> Vec<usize> {
    let w = pi.as_slice();
    (1..w.len())
        .filter(|&i| {
            let before = if i == 1 { 0 } else { w[i - 2] };
            before < w[i - 1] && w[i - 1] > w[i]
        })
        .collect()
}

/// Index of the second-to-last east step of each platform of length at
/// least two.
fn penultimate_platform_steps(d: &DyckPath) -> Vec<usize> {
    let levels = d.east_step_levels();
    let n = levels.len();
    (1..n)
        .filter(|&i| levels[i - 1] == levels[i] && (i + 1 == n || levels[i + 1] > levels[i]))
        .collect()
}

pub(super) fn catalan_counts(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let expected = catalan(n as u64);
        for pattern in Pattern::classical_patterns() {
            let count = avoiders(n, pattern).len();
            if BigUint::from(count) != expected {
                return Err(json!({
                    "n": n,
                    "pattern": pattern.to_string(),
                    "count": count,
                    "expected": expected.to_string(),
                }));
            }
        }
        Ok(())
    })
}

pub(super) fn mnd_distribution(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let mut counts = vec![0usize; n / 2 + 1];
        for p in avoiders(n, Pattern::P231) {
            counts[mnd(&p)] += 1;
        }
        for (k, &count) in counts.iter().enumerate() {
            let expected = refined_catalan(n as u64, k as u64);
            if BigUint::from(count) != expected {
                return Err(json!({ "n": n, "k": k, "count": count, "expected": expected.to_string() }));
            }
        }
        Ok(())
    })
    .with_note("spot value: 4 stack-sortable permutations of length 3 have one non-overlapping descent")
}

pub(super) fn mna_mnd_symmetry(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let mut joint: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for p in avoiders(n, Pattern::P231) {
            *joint.entry((mna(&p), mnd(&p))).or_default() += 1;
        }
        for (&(a, d), &count) in &joint {
            let mirror = joint.get(&(d, a)).copied().unwrap_or(0);
            if mirror != count {
                return Err(json!({
                    "n": n,
                    "reason": format!("{count} with (mna, mnd) = ({a}, {d}) but {mirror} with ({d}, {a})"),
                }));
            }
        }
        Ok(())
    })
}

pub(super) fn tree_runs(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let perms = avoiders(n, Pattern::P231);
        objects(n, &perms, |p| {
            let t = stack_sortable_to_tree(p).map_err(err)?;
            ensure(&tree_to_stack_sortable(&t) == p, || format!("round trip fails via {t}"))?;
            let chains = tree_chain_profile(&t);
            let dr = run_profile(p).dr;
            let ar_inv = run_profile(&p.inverse()).ar;
            ensure(chains.lc == dr, || format!("LC {} but DR {}", chains.lc, dr))?;
            ensure(chains.rc == ar_inv, || format!("RC {} but AR of inverse {}", chains.rc, ar_inv))
        })?;
        catalan_many_distinct(n, perms.iter().filter_map(|p| stack_sortable_to_tree(p).ok()))?;
        let trees = catalan_schett(n, Route::Trees);
        let perm = catalan_schett(n, Route::StackSortable);
        aggregate(n, trees == perm, || format!("tree polynomial {trees}, permutation polynomial {perm}"))
    })
}

pub(super) fn tree_arms(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        objects(n, &avoiders(n, Pattern::P231), |p| {
            let chains = tree_chain_profile(&stack_sortable_to_tree(p).map_err(err)?);
            let (i_dr, i_ar) = (idr(p).map_err(err)?, iar(&p.inverse()).map_err(err)?);
            ensure(chains.larm == i_dr, || format!("left arm {} but initial descending run {i_dr}", chains.larm))?;
            ensure(chains.rarm == i_ar, || {
                format!("right arm {} but initial ascending run of inverse {i_ar}", chains.rarm)
            })
        })
    })
}

fn root_has_leaf_child(t: &PlaneTree) -> bool {
    t.children.iter().any(PlaneTree::is_leaf)
}

pub(super) fn plane_tree_marks(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let trees = plane_trees(n);
        objects(n, &trees, |t| {
            let p = plane_tree_to_stack_sortable(t);
            ensure(p.len() == n && Pattern::P231.avoided_by(&p), || format!("image {p} is not in S_{n}(231)"))?;
            let back = stack_sortable_to_plane_tree(&p).map_err(err)?;
            ensure(&back == t, || format!("image {p} maps back to {back}"))?;
            ensure(mark_count(t) == mnd(&p), || format!("mark {} but mnd({p}) = {}", mark_count(t), mnd(&p)))
        })?;
        catalan_many_distinct(n, trees.iter().map(plane_tree_to_stack_sortable))
    })
}

pub(super) fn plane_tree_parity(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        objects(n, &plane_trees(n), |t| {
            let p = plane_tree_to_stack_sortable(t);
            let run = idr(&p).map_err(err)?;
            ensure(root_has_leaf_child(t) == (run % 2 == 1), || {
                format!("root leaf child {} but idr({p}) = {run}", root_has_leaf_child(t))
            })
        })
    })
}

pub(super) fn walk_pair_descents(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let perms = avoiders(n, Pattern::P231);
        objects(n, &perms, |p| {
            let wp = stack_sortable_to_walk_pair(p).map_err(err)?;
            let back = walk_pair_to_stack_sortable(&wp).map_err(err)?;
            ensure(&back == p, || format!("walk pair {wp} maps back to {back}"))?;
            let (hor, des) = (wp.bottom.hor(), descent_set(p));
            ensure(hor == des, || format!("bottom east steps {hor:?} but descents {des:?}"))?;
            let (ver, asc) = (wp.top.ver(), ascent_set(&p.inverse()));
            ensure(ver == asc, || format!("top north steps {ver:?} but inverse ascents {asc:?}"))
        })?;
        catalan_many_distinct(n, perms.iter().filter_map(|p| stack_sortable_to_walk_pair(p).ok()))
    })
}

pub(super) fn tree_platforms(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        objects(n, &binary_trees(n), |t| {
            let d = tree_to_dyck(t);
            ensure(d.order() == n, || format!("path {d} has order {}", d.order()))?;
            let back = dyck_to_tree(&d);
            ensure(&back == t, || format!("path {d} maps back to {back}"))?;
            let (lc, pt) = (tree_chain_profile(t).lc, dyck_profile(&d).map_err(err)?.pt);
            ensure(lc == pt, || format!("LC {lc} but platforms {pt} of {d}"))
        })
    })
}

pub(super) fn descent_bottoms_check(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        objects(n, &avoiders(n, Pattern::P231), |p| {
            let (db, des) = (descent_bottoms(&p.inverse()), descent_set(p));
            ensure(db == des, || format!("descent bottoms of inverse {db:?} but descents {des:?}"))
        })
    })
}

pub(super) fn restricted_platforms(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let perms = avoiders(n, Pattern::P321);
        objects(n, &perms, |p| {
            let d = krattenthaler(p).map_err(err)?;
            let back = krattenthaler_inverse_checked(&d).map_err(err)?;
            ensure(&back == p, || format!("path {d} maps back to {back}"))?;
            for i in 1..=n {
                let non_excedance = p.at(i) <= i;
                ensure(non_excedance == d.is_platform_final(i), || {
                    format!("position {i}: non-excedance {non_excedance} but platform-final {}", !non_excedance)
                })?;
            }
            let (des, pen) = (descent_set(p), penultimate_platform_steps(&d));
            ensure(des == pen, || format!("descents {des:?} but penultimate platform steps {pen:?} of {d}"))
        })?;
        catalan_many_distinct(n, perms.iter().filter_map(|p| krattenthaler(p).ok()))
    })
}

pub(super) fn excedance_walks(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let perms = avoiders(n, Pattern::P321);
        objects(n, &perms, |p| {
            let wp = restricted_to_walk_pair(p).map_err(err)?;
            let back = walk_pair_to_restricted(&wp).map_err(err)?;
            ensure(&back == p, || format!("walk pair {wp} maps back to {back}"))?;
            let (hor, exc) = (wp.bottom.hor(), excedance_profile(p).exc);
            ensure(hor == exc, || format!("bottom east steps {hor:?} but excedances {exc:?}"))?;
            let (ver, wexc) = (wp.top.ver(), excedance_profile(&p.inverse()).wexc_shifted);
            ensure(ver == wexc, || format!("top north steps {ver:?} but shifted weak excedances of inverse {wexc:?}"))
        })?;
        catalan_many_distinct(n, perms.iter().filter_map(|p| restricted_to_walk_pair(p).ok()))
    })
}

pub(super) fn left_peak_transport(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let perms = avoiders(n, Pattern::P321);
        objects(n, &perms, |p| {
            let lpk = sorted(peak_profile(p).lpk);
            let s = simion_schmidt(p).map_err(err)?;
            let back = simion_schmidt_inverse(&s).map_err(err)?;
            ensure(&back == p, || format!("Simion-Schmidt image {s} maps back to {back}"))?;
            ensure(sorted(peak_profile(&s).lpk) == lpk, || format!("Simion-Schmidt image {s} changes left peak values"))?;
            ensure(left_peak_positions(&s) == left_peak_positions(p), || {
                format!("Simion-Schmidt image {s} moves left peaks")
            })?;
            let f = maximise_weights(&s).map_err(err)?;
            ensure(Pattern::P231.avoided_by(&f), || format!("weight maximisation of {s} gives {f}, not 231-avoiding"))?;
            ensure(sorted(peak_profile(&f).lpk) == lpk, || format!("weight maximisation of {s} gives {f}, changing left peaks"))?;
            let composite = restricted_to_stack_sortable(p).map_err(err)?;
            ensure(composite == f, || format!("composite gives {composite}, stepwise {f}"))?;
            let back = stack_sortable_to_restricted(&composite).map_err(err)?;
            ensure(&back == p, || format!("{composite} maps back to {back}"))
        })?;
        catalan_many_distinct(n, perms.iter().filter_map(|p| restricted_to_stack_sortable(p).ok()))
    })
}

fn joint_over<F>(n: usize, pattern: Pattern, weight: F) -> BivariatePolynomial
where
    F: Fn(&Permutation) -> (usize, usize),
{
    BivariatePolynomial::from_pairs(avoiders(n, pattern).iter().map(weight))
}

fn equidistribution<F, G>(max_n: usize, left: F, right: G) -> Outcome
where
    F: Fn(usize) -> BivariatePolynomial,
    G: Fn(usize) -> BivariatePolynomial,
{
    sizes(max_n, |n| {
        let (l, r) = (left(n), right(n));
        if l == r {
            Ok(())
        } else {
            Err(json!({ "n": n, "lhs": l.to_string(), "rhs": r.to_string() }))
        }
    })
}

pub(super) fn lpk_equidistribution(max_n: usize) -> Outcome {
    let weight = |p: &Permutation| {
        let pk = peak_profile(p);
        (pk.lpk_e, pk.lpk_o)
    };
    equidistribution(max_n, |n| joint_over(n, Pattern::P321, weight), |n| joint_over(n, Pattern::P231, weight))
}

pub(super) fn mnd_mne_equidistribution(max_n: usize) -> Outcome {
    equidistribution(
        max_n,
        |n| joint_over(n, Pattern::P231, |p| (mnd(p), 0)),
        |n| joint_over(n, Pattern::P321, |p| (excedance_profile(p).mne, 0)),
    )
}

pub(super) fn joint_parity_equidistribution(max_n: usize) -> Outcome {
    equidistribution(
        max_n,
        |n| joint_over(n, Pattern::P231, |p| (mnd(p), mna(&p.inverse()))),
        |n| joint_over(n, Pattern::P321, |p| (excedance_profile(p).mne, excedance_profile(&p.inverse()).mnw)),
    )
}

pub(super) fn laguerre_roundtrip(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let perms = all_permutations(n);
        objects(n, &perms, |p| {
            let h = foata_zeilberger(p);
            let back = foata_zeilberger_inverse(&h);
            ensure(&back == p, || format!("history {h} maps back to {back}"))
        })?;
        let images: HashSet<_> = perms.iter().map(foata_zeilberger).collect();
        let all: HashSet<_> = laguerre_histories(n).into_iter().collect();
        aggregate(n, images == all, || {
            format!("{} distinct images against {} histories", images.len(), all.len())
        })
    })
}

pub(super) fn baxter_walks(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let count = baxter_permutations(n).len();
        match BaxterTable::new(n) {
            Ok(table) => aggregate(n, table.len() == count, || format!("{} triples for {count} permutations", table.len())),
            Err(e) => Err(json!({ "n": n, "reason": e.to_string() })),
        }
    })
}

pub(super) fn walk_transfer(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let transfer = WalkPairTransfer::new(n).map_err(|e| json!({ "n": n, "reason": e.to_string() }))?;
        let perms = avoiders(n, Pattern::P231);
        objects(n, &perms, |p| {
            let sigma = transfer.apply(p).map_err(err)?;
            let (des_s, des_p) = (descent_set(&sigma), descent_set(p));
            ensure(des_s == des_p, || format!("image {sigma} has descents {des_s:?}, expected {des_p:?}"))?;
            let (tops, des_inv) = (shifted_descent_tops(&sigma.inverse()), descent_set(&p.inverse()));
            ensure(tops == des_inv, || {
                format!("image {sigma}: shifted descent tops of inverse {tops:?}, inverse descents {des_inv:?}")
            })
        })?;
        catalan_many_distinct(n, perms.iter().filter_map(|p| transfer.apply(p).ok()))
    })
}

/// The literal claim compares the left peak values with the descent
/// positions; the reading that holds compares them with the descent tops.
pub(super) fn left_peaks_descents(max_n: usize) -> Outcome {
    let literal = sizes(max_n, |n| {
        objects(n, &avoiders(n, Pattern::P321), |p| {
            let (lpk, des) = (sorted(peak_profile(p).lpk), descent_set(p));
            ensure(lpk == des, || format!("left peaks {lpk:?} but descent positions {des:?}"))
        })
    });
    let tops = sizes(max_n, |n| {
        objects(n, &avoiders(n, Pattern::P321), |p| {
            let (lpk, tops) = (sorted(peak_profile(p).lpk), sorted(descent_tops(p)));
            ensure(lpk == tops, || format!("left peaks {lpk:?} but descent tops {tops:?}"))
        })
    });
    if literal.pass {
        return literal.with_reading("left peak values equal descent positions");
    }
    let literal_failure = literal.counterexample.clone();
    if tops.pass {
        let mut out = tops.with_reading("left peak values equal descent top values");
        out.details = Some(json!({ "literal_counterexample": literal_failure }));
        out.with_note("the literal equality of left peak values and descent positions fails")
    } else {
        literal.with_note("neither the literal equality nor the descent-top reading holds")
    }
}

const PUBLISHED_CATALAN_SCHETT: [&str; 6] = [
    "xy",
    "x^2+y^2",
    "x^3y+xy^3+3xy",
    "x^4+8y^2x^2+y^4+2x^2+2y^2",
    "x^5y+5x^3y^3+xy^5+15x^3y+15xy^3+5xy",
    "x^6+27x^4y^2+27x^2y^4+y^6+8x^4+54x^2y^2+8y^4+3x^2+3y^2",
];

pub(super) fn schett_routes(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let polys: Vec<BivariatePolynomial> = Route::ALL.par_iter().map(|&r| catalan_schett(n, r)).collect();
        for (route, p) in Route::ALL.iter().zip(&polys).skip(1) {
            aggregate(n, *p == polys[0], || format!("route {route} gives {p}, trees give {}", polys[0]))?;
        }
        let c = &polys[0];
        aggregate(n, BigUint::try_from(c.eval_at_one()).ok() == Some(catalan(n as u64)), || {
            format!("{c} does not sum to the Catalan number")
        })?;
        aggregate(n, c.terms().all(|(a, b, _)| a % 2 == n % 2 && b % 2 == n % 2), || {
            format!("{c} has a monomial of the wrong parity")
        })?;
        if let Some(published) = PUBLISHED_CATALAN_SCHETT.get(n - 1) {
            let expected = parse_tpoly(published).expect("well-formed constant").coeff(0);
            aggregate(n, c.as_laurent() == &expected, || format!("computed {c}, published {expected}"))?;
        }
        Ok(())
    })
}

pub(super) fn schett_classical(max_n: usize) -> Outcome {
    sizes(max_n, |n| {
        let s = schett(n);
        let total = BigUint::try_from(s.eval_at_one()).ok();
        aggregate(n, total == Some(factorial(n as u64)), || format!("{s} does not sum to {n}!"))?;
        aggregate(n, s == s.swap_xy(), || format!("{s} is not symmetric"))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn platform_helpers() {
        let d: DyckPath = "EENENN".parse().unwrap();
        assert_eq!(penultimate_platform_steps(&d), [1]);
        let p = Permutation::from_digits("3271654").unwrap();
        assert_eq!(left_peak_positions(&p), [1, 3, 5]);
    }

    #[test]
    fn small_bounds_pass() {
        assert!(catalan_counts(5).pass);
        assert!(restricted_platforms(5).pass);
        assert!(!left_peaks_descents(3).counterexample.is_some());
    }
}
