//! Bijections between the Catalan families, each with its inverse.
//!
//! Every forward map validates its domain on entry and reports an offending
//! pattern occurrence when the input is outside it.

mod baxter;
mod binary;
mod dyck;
mod laguerre;
mod motzkin;
mod plane;

pub use baxter::{baxter_to_walk_triple, BaxterTable, WalkPairTransfer};
pub use binary::{
    decreasing_tree_shape, decreasing_tree_shape_inverse, dyck_to_tree, stack_sortable_to_tree,
    stack_sortable_to_walk_pair, star_transform, star_transform_inverse, tree_to_dyck, tree_to_stack_sortable,
    tree_to_walk_pair, walk_pair_to_stack_sortable, walk_pair_to_tree,
};
pub use dyck::{krattenthaler, krattenthaler_inverse, krattenthaler_inverse_checked};
pub use laguerre::{
    foata_zeilberger, foata_zeilberger_inverse, maximise_weights, minimise_weights, restricted_to_stack_sortable,
    simion_schmidt, simion_schmidt_inverse, stack_sortable_to_restricted,
};
pub use motzkin::{
    lin_fu, lin_fu_inverse, motzkin_to_walk_pair, restricted_to_walk_pair, value_position_indicators,
    walk_pair_to_motzkin, walk_pair_to_restricted,
};
pub use plane::{plane_tree_to_stack_sortable, stack_sortable_to_plane_tree, stack_sortable_to_plane_tree_checked};
