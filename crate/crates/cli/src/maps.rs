//! Bijections addressable from the command line, one object per line.

use std::fmt::Display;
use std::str::FromStr;

use catalan_parity::bijections::{
    baxter_to_walk_triple, decreasing_tree_shape, decreasing_tree_shape_inverse, dyck_to_tree, foata_zeilberger,
    foata_zeilberger_inverse, krattenthaler, krattenthaler_inverse_checked, lin_fu, lin_fu_inverse,
    maximise_weights, minimise_weights, motzkin_to_walk_pair, plane_tree_to_stack_sortable,
    restricted_to_stack_sortable, restricted_to_walk_pair, simion_schmidt, simion_schmidt_inverse,
    stack_sortable_to_plane_tree_checked, stack_sortable_to_restricted, stack_sortable_to_tree,
    stack_sortable_to_walk_pair, star_transform, star_transform_inverse, tree_to_dyck, tree_to_stack_sortable,
    tree_to_walk_pair, walk_pair_to_motzkin, walk_pair_to_restricted, walk_pair_to_stack_sortable,
    walk_pair_to_tree, BaxterTable, WalkPairTransfer,
};
use catalan_parity::objects::{Permutation, WalkTriple};
use catalan_parity::{Error, Result};
use clap::ValueEnum;

/// Largest size for which lookup tables over all of `S_n` are built.
const TABLE_MAX_N: usize = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    /// 231-avoiders to binary trees carrying the run structure.
    StackSortableTree,
    /// 231-avoiders to the shape of their decreasing binary tree.
    DecreasingTree,
    /// Binary trees to non-crossing walk pairs.
    TreeWalks,
    /// 231-avoiders to walk pairs (decreasing tree, then walks).
    StackSortableWalks,
    /// Binary trees to Dyck paths by preorder of the completed tree.
    TreeDyck,
    /// 321-avoiders to Dyck paths hugging the diagonal.
    RestrictedDyck,
    /// 321-avoiders to two-coloured Motzkin paths.
    RestrictedMotzkin,
    /// Two-coloured Motzkin paths to walk pairs.
    MotzkinWalks,
    /// 321-avoiders to walk pairs (Motzkin path, then walks).
    RestrictedWalks,
    /// 321-avoiders to 312-avoiders keeping left-to-right maxima.
    SimionSchmidt,
    /// Permutations to restricted Laguerre histories.
    FoataZeilberger,
    /// 312-avoiders to 231-avoiders by maximising history weights.
    WeightMax,
    /// 321-avoiders to 231-avoiders preserving left peaks.
    LeftPeakTransfer,
    /// Plane trees to 231-avoiders with mark = mnd.
    PlaneTree,
    /// Baxter permutations to non-crossing walk triples.
    BaxterTriple,
    /// 231-avoiders to 231-avoiders exchanging inverse descents for descent tops.
    WalkTransfer,
    /// Moves the right branch of the root's left child onto the root.
    Star,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Fwd,
    Inv,
}

fn via<A, B>(line: &str, f: impl Fn(&A) -> Result<B>) -> Result<String>
where
    A: FromStr<Err = Error>,
    B: Display,
{
    Ok(f(&line.parse()?)?.to_string())
}

fn table_size(n: usize) -> Result<usize> {
    if n > TABLE_MAX_N {
        return Err(Error::BoundExceeded {
            what: "lookup table size",
            requested: n,
            bound: TABLE_MAX_N,
        });
    }
    Ok(n)
}

pub fn apply(name: MapName, dir: Direction, line: &str) -> Result<String> {
    use Direction::{Fwd, Inv};
    use MapName::*;
    let line = line.trim_end_matches(['\n', '\r']);
    match (name, dir) {
        (StackSortableTree, Fwd) => via(line, stack_sortable_to_tree),
        (StackSortableTree, Inv) => via(line, |t| Ok(tree_to_stack_sortable(t))),
        (DecreasingTree, Fwd) => via(line, decreasing_tree_shape),
        (DecreasingTree, Inv) => via(line, |t| Ok(decreasing_tree_shape_inverse(t))),
        (TreeWalks, Fwd) => via(line, |t| Ok(tree_to_walk_pair(t))),
        (TreeWalks, Inv) => via(line, walk_pair_to_tree),
        (StackSortableWalks, Fwd) => via(line, stack_sortable_to_walk_pair),
        (StackSortableWalks, Inv) => via(line, walk_pair_to_stack_sortable),
        (TreeDyck, Fwd) => via(line, |t| Ok(tree_to_dyck(t))),
        (TreeDyck, Inv) => via(line, |d| Ok(dyck_to_tree(d))),
        (RestrictedDyck, Fwd) => via(line, krattenthaler),
        (RestrictedDyck, Inv) => via(line, krattenthaler_inverse_checked),
        (RestrictedMotzkin, Fwd) => via(line, lin_fu),
        (RestrictedMotzkin, Inv) => via(line, lin_fu_inverse),
        (MotzkinWalks, Fwd) => via(line, |m| Ok(motzkin_to_walk_pair(m))),
        (MotzkinWalks, Inv) => via(line, walk_pair_to_motzkin),
        (RestrictedWalks, Fwd) => via(line, restricted_to_walk_pair),
        (RestrictedWalks, Inv) => via(line, walk_pair_to_restricted),
        (SimionSchmidt, Fwd) => via(line, simion_schmidt),
        (SimionSchmidt, Inv) => via(line, simion_schmidt_inverse),
        (FoataZeilberger, Fwd) => via(line, |p| Ok(foata_zeilberger(p))),
        (FoataZeilberger, Inv) => via(line, |h| Ok(foata_zeilberger_inverse(h))),
        (WeightMax, Fwd) => via(line, maximise_weights),
        (WeightMax, Inv) => via(line, minimise_weights),
        (LeftPeakTransfer, Fwd) => via(line, restricted_to_stack_sortable),
        (LeftPeakTransfer, Inv) => via(line, stack_sortable_to_restricted),
        (PlaneTree, Fwd) => via(line, |t| Ok(plane_tree_to_stack_sortable(t))),
        (PlaneTree, Inv) => via(line, stack_sortable_to_plane_tree_checked),
        (BaxterTriple, Fwd) => via(line, baxter_to_walk_triple),
        (BaxterTriple, Inv) => via(line, |t: &WalkTriple| {
            let table = BaxterTable::new(table_size(t.middle.size())?)?;
            table.lookup(t).cloned()
        }),
        (WalkTransfer, Fwd) => via(line, |p: &Permutation| WalkPairTransfer::new(table_size(p.len())?)?.apply(p)),
        (WalkTransfer, Inv) => Err(Error::Domain("walk-transfer has no inverse direction".into())),
        (Star, Fwd) => via(line, star_transform),
        (Star, Inv) => via(line, star_transform_inverse),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_through_text() {
        let p = "2 4 5 1 3 6 8 7 9";
        let d = apply(MapName::RestrictedDyck, Direction::Fwd, p).unwrap();
        assert_eq!(apply(MapName::RestrictedDyck, Direction::Inv, &d).unwrap(), p);
        let sigma = apply(MapName::WeightMax, Direction::Fwd, "4 3 2 7 6 8 9 5 1").unwrap();
        assert_eq!(sigma, "9 5 1 4 3 2 7 6 8");
    }

    #[test]
    fn wrong_domain_is_reported() {
        assert!(matches!(
            apply(MapName::RestrictedDyck, Direction::Fwd, "3 2 1"),
            Err(Error::PatternViolation { .. })
        ));
        assert!(apply(MapName::WalkTransfer, Direction::Inv, "1").is_err());
    }
}
