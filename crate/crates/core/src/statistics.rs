//! Set-, multiset- and parity-valued statistics.
//!
//! Sets are returned as sorted vectors of 1-based positions or values.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::objects::{BinaryTree, Composition, DyckPath, Multiset, Permutation, PlaneTree, Step};

/// Positions `i ∈ [n-1]` with `π_i > π_{i+1}`.
pub fn descent_set(pi: &Permutation) -> Vec<usize> {
    let w = pi.as_slice();
    (1..w.len()).filter(|&i| w[i - 1] > w[i]).collect()
}

/// Positions `i ∈ [n-1]` with `π_i < π_{i+1}`.
pub fn ascent_set(pi: &Permutation) -> Vec<usize> {
    let w = pi.as_slice();
    (1..w.len()).filter(|&i| w[i - 1] < w[i]).collect()
}

/// Gap multiset of `S = {s_1 < ... < s_k} ⊆ [n-1]`:
/// `{s_1, s_2 - s_1, ..., n - s_k}`, and `{n}` when `S` is empty.
pub fn gap_multiset(n: usize, set: &[usize]) -> Multiset {
    gap_composition(n, set).to_multiset()
}

pub fn gap_composition(n: usize, set: &[usize]) -> Composition {
    let mut parts = Vec::with_capacity(set.len() + 1);
    let mut prev = 0;
    for &s in set {
        parts.push(s - prev);
        prev = s;
    }
    if n > 0 {
        parts.push(n - prev);
    }
    Composition::new(parts)
}

/// Size of a largest subset of `set` with no two consecutive integers.
pub fn max_non_adjacent(set: &[usize]) -> usize {
    let mut total = 0;
    let mut block: usize = 0;
    let mut prev: Option<usize> = None;
    for &s in set {
        if prev.is_some_and(|p| p + 1 == s) {
            block += 1;
        } else {
            total += block.div_ceil(2);
            block = 1;
        }
        prev = Some(s);
    }
    total + block.div_ceil(2)
}

/// Descending runs (`DR`) and ascending runs (`AR`) with their parity counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunProfile {
    pub dr: Multiset,
    pub ar: Multiset,
    pub odr: usize,
    pub edr: usize,
    pub oar: usize,
    pub ear: usize,
}

pub fn run_profile(pi: &Permutation) -> RunProfile {
    let n = pi.len();
    let dr = gap_multiset(n, &ascent_set(pi));
    let ar = gap_multiset(n, &descent_set(pi));
    RunProfile {
        odr: dr.odd_parts(),
        edr: dr.even_parts(),
        oar: ar.odd_parts(),
        ear: ar.even_parts(),
        dr,
        ar,
    }
}

/// Maximum number of non-overlapping descents, `Σ ⌊i/2⌋` over `DR(π)`.
pub fn mnd(pi: &Permutation) -> usize {
    gap_multiset(pi.len(), &ascent_set(pi)).half_floor_sum()
}

/// Maximum number of non-overlapping ascents, `Σ ⌊i/2⌋` over `AR(π)`.
pub fn mna(pi: &Permutation) -> usize {
    gap_multiset(pi.len(), &descent_set(pi)).half_floor_sum()
}

/// Length of the initial descending run.
pub fn idr(pi: &Permutation) -> Result<usize> {
    initial_run(pi, |a, b| a > b).ok_or(Error::Empty("idr"))
}

/// Length of the initial ascending run.
pub fn iar(pi: &Permutation) -> Result<usize> {
    initial_run(pi, |a, b| a < b).ok_or(Error::Empty("iar"))
}

fn initial_run(pi: &Permutation, cmp: impl Fn(usize, usize) -> bool) -> Option<usize> {
    let w = pi.as_slice();
    if w.is_empty() {
        return None;
    }
    Some(1 + w.windows(2).take_while(|p| cmp(p[0], p[1])).count())
}

/// Left peaks (as values) and interior peak parities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PeakProfile {
    /// Values `π_i`, `i ∈ [n-1]`, with `π_{i-1} < π_i > π_{i+1}` and `π_0 = 0`.
    pub lpk: Vec<usize>,
    pub lpk_o: usize,
    pub lpk_e: usize,
    /// Interior peaks (`2 <= i <= n-1`) by parity of the peak value.
    pub pk_o: usize,
    pub pk_e: usize,
}

pub fn peak_profile(pi: &Permutation) -> PeakProfile {
    let w = pi.as_slice();
    let n = w.len();
    let mut lpk = Vec::new();
    let (mut pk_o, mut pk_e) = (0, 0);
    for i in 1..n {
        let before = if i == 1 { 0 } else { w[i - 2] };
        let here = w[i - 1];
        if before < here && here > w[i] {
            lpk.push(here);
            if i >= 2 {
                if here % 2 == 1 {
                    pk_o += 1;
                } else {
                    pk_e += 1;
                }
            }
        }
    }
    let lpk_o = lpk.iter().filter(|&&v| v % 2 == 1).count();
    let lpk_e = lpk.len() - lpk_o;
    lpk.sort_unstable();
    PeakProfile {
        lpk,
        lpk_o,
        lpk_e,
        pk_o,
        pk_e,
    }
}

/// Excedances, shifted weak excedances and their non-overlapping maxima.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExcedanceProfile {
    /// `i ∈ [n-1]` with `π_i > i`.
    pub exc: Vec<usize>,
    /// `{i - 1 : 2 <= i <= n, π_i >= i}`.
    pub wexc_shifted: Vec<usize>,
    /// Positions that are not excedances, `π_i <= i`.
    pub nonexc: Vec<usize>,
    pub mne: usize,
    pub mnw: usize,
}

pub fn excedance_profile(pi: &Permutation) -> ExcedanceProfile {
    let w = pi.as_slice();
    let n = w.len();
    let exc: Vec<usize> = (1..n).filter(|&i| w[i - 1] > i).collect();
    let nonexc: Vec<usize> = (1..=n).filter(|&i| w[i - 1] <= i).collect();
    let wexc_shifted: Vec<usize> = (2..=n).filter(|&i| w[i - 1] >= i).map(|i| i - 1).collect();
    ExcedanceProfile {
        mne: max_non_adjacent(&exc),
        mnw: max_non_adjacent(&wexc_shifted),
        exc,
        wexc_shifted,
        nonexc,
    }
}

/// Values `π_{i+1}` at descents `i`.
pub fn descent_bottoms(pi: &Permutation) -> Vec<usize> {
    let mut v: Vec<usize> = descent_set(pi).into_iter().map(|i| pi.at(i + 1)).collect();
    v.sort_unstable();
    v
}

/// Values `π_i` at descents `i`.
pub fn descent_tops(pi: &Permutation) -> Vec<usize> {
    let mut v: Vec<usize> = descent_set(pi).into_iter().map(|i| pi.at(i)).collect();
    v.sort_unstable();
    v
}

/// `{π_i - 1 : i a descent}`, a subset of `[n-1]`.
pub fn shifted_descent_tops(pi: &Permutation) -> Vec<usize> {
    descent_tops(pi).into_iter().map(|v| v - 1).collect()
}

/// Left and right chain structure of a binary tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainProfile {
    pub lc: Multiset,
    pub rc: Multiset,
    pub olc: usize,
    pub orc: usize,
    /// `Σ ⌊i/2⌋` over `LC`.
    pub x: usize,
    /// `Σ ⌊i/2⌋` over `RC`.
    pub y: usize,
    /// Order of the left chain starting at the root.
    pub larm: usize,
    /// Order of the right chain starting at the root.
    pub rarm: usize,
}

pub fn tree_chain_profile(t: &BinaryTree) -> ChainProfile {
    let mut lc = Vec::new();
    let mut rc = Vec::new();
    // left_run/right_run: nodes above this one on its left/right chain
    fn walk(t: &BinaryTree, left_run: usize, right_run: usize, lc: &mut Vec<usize>, rc: &mut Vec<usize>) {
        let Some((l, r)) = t.children() else { return };
        if l.is_empty() {
            lc.push(left_run + 1);
        }
        if r.is_empty() {
            rc.push(right_run + 1);
        }
        walk(l, left_run + 1, 0, lc, rc);
        walk(r, 0, right_run + 1, lc, rc);
    }
    walk(t, 0, 0, &mut lc, &mut rc);
    let arm = |pick_left: bool| {
        let mut len = 0;
        let mut cur = t;
        while let Some((l, r)) = cur.children() {
            len += 1;
            cur = if pick_left { l } else { r };
        }
        len
    };
    let lc = Multiset::new(lc);
    let rc = Multiset::new(rc);
    ChainProfile {
        olc: lc.odd_parts(),
        orc: rc.odd_parts(),
        x: lc.half_floor_sum(),
        y: rc.half_floor_sum(),
        larm: arm(true),
        rarm: arm(false),
        lc,
        rc,
    }
}

/// Non-root internal nodes having at least one leaf child.
pub fn mark_count(t: &PlaneTree) -> usize {
    fn marked_below(t: &PlaneTree) -> usize {
        t.children
            .iter()
            .map(|c| {
                let own = usize::from(!c.is_leaf() && c.children.iter().any(PlaneTree::is_leaf));
                own + marked_below(c)
            })
            .sum()
    }
    marked_below(t)
}

/// Platform and composition data of a Dyck path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DyckProfile {
    /// Orders of maximal runs of east steps.
    pub pt: Multiset,
    /// Segment east-step counts after cutting before the last step of each
    /// platform of order at least two.
    pub comp: Composition,
    pub op: usize,
    pub ep: usize,
    /// First part of `comp`.
    pub initial: usize,
    /// Last part of `comp`.
    pub terminal: usize,
}

pub fn dyck_profile(d: &DyckPath) -> Result<DyckProfile> {
    if d.order() == 0 {
        return Err(Error::Empty("Dyck composition"));
    }
    let mut platforms = Vec::new();
    let mut run = 0;
    for s in d.steps() {
        if *s == Step::E {
            run += 1;
        } else if run > 0 {
            platforms.push(run);
            run = 0;
        }
    }
    // cut before east step number (end of platform) for long platforms
    let mut cuts = Vec::new();
    let mut seen = 0;
    for &p in &platforms {
        seen += p;
        if p >= 2 {
            cuts.push(seen - 1);
        }
    }
    let comp = gap_composition(d.order(), &cuts);
    let parts = comp.to_multiset();
    Ok(DyckProfile {
        pt: Multiset::new(platforms),
        op: parts.odd_parts(),
        ep: parts.even_parts(),
        initial: comp.first().expect("non-empty"),
        terminal: comp.last().expect("non-empty"),
        comp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    #[test]
    fn run_multisets_of_worked_example() {
        let pi = p("318972456");
        assert_eq!(ascent_set(&pi), [2, 3, 6, 7, 8]);
        assert_eq!(descent_set(&pi), [1, 4, 5]);
        let r = run_profile(&pi);
        assert_eq!(r.dr.parts(), [3, 2, 1, 1, 1, 1]);
        assert_eq!(r.ar.parts(), [4, 3, 1, 1]);
        assert_eq!((r.odr, r.edr, r.oar, r.ear), (5, 1, 3, 1));
    }

    #[test]
    fn left_peaks() {
        let pk = peak_profile(&p("3271654"));
        assert_eq!(pk.lpk, [3, 6, 7]);
        assert_eq!(peak_profile(&p("132")).lpk, [3]);
    }

    #[test]
    fn excedances() {
        let pi = p("134275968");
        assert_eq!(excedance_profile(&pi).exc, [2, 3, 5, 7]);
        let inv = excedance_profile(&pi.inverse());
        assert_eq!(inv.wexc_shifted, [1, 4, 5, 7]);
        assert_eq!(inv.mnw, 3);
        assert_eq!(excedance_profile(&p("245136879")).mne, 3);
    }

    #[test]
    fn descent_tops_and_bottoms() {
        let pi = p("143295768");
        assert_eq!(shifted_descent_tops(&pi), [2, 3, 6, 8]);
        assert_eq!(descent_bottoms(&pi), [2, 3, 5, 6]);
    }

    #[test]
    fn initial_runs() {
        assert_eq!(idr(&p("321")).unwrap(), 3);
        assert_eq!(iar(&p("132")).unwrap(), 2);
        assert_eq!(idr(&Permutation::empty()), Err(Error::Empty("idr")));
    }

    #[test]
    fn non_adjacent_maximum() {
        assert_eq!(max_non_adjacent(&[]), 0);
        assert_eq!(max_non_adjacent(&[1, 2, 3, 7]), 3);
        assert_eq!(max_non_adjacent(&[1, 2, 3, 4]), 2);
    }

    #[test]
    fn chains_of_the_nine_node_tree() {
        // root 9 with subtrees 4(1, 3(., 2)) and 8(7(5, 6), .)
        let t: BinaryTree = "(((. .) (. (. .))) (((. .) (. .)) .))".parse().unwrap();
        let c = tree_chain_profile(&t);
        assert_eq!(c.rc.parts(), [3, 2, 2, 1, 1]);
        assert_eq!(c.lc.parts(), [3, 3, 1, 1, 1]);
        assert_eq!((c.x, c.y), (2, 3));
        assert_eq!((c.larm, c.rarm), (3, 2));
    }

    #[test]
    fn marked_nodes_of_the_twelve_edge_tree() {
        let t: PlaneTree = "(((()))((()()())())()(()))".parse().unwrap();
        assert_eq!(t.edges(), 12);
        assert_eq!(mark_count(&t), 4);
    }

    #[test]
    fn composition_of_the_nine_step_path() {
        let d: DyckPath = "EEEENNENNNENEENNEN".parse().unwrap();
        let prof = dyck_profile(&d).unwrap();
        assert_eq!(prof.pt.parts(), [4, 2, 1, 1, 1]);
        assert_eq!(prof.comp.parts(), [3, 4, 2]);
        assert_eq!((prof.op, prof.ep, prof.initial, prof.terminal), (1, 2, 3, 2));
        assert_eq!(dyck_profile(&DyckPath::zigzag(4)).unwrap().comp.parts(), [4]);
    }
}
