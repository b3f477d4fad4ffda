//! Combinatorial objects, their text forms and exhaustive generators.

mod multiset;
mod numbers;
mod paths;
mod pattern;
mod permutation;
mod trees;

pub use multiset::{Composition, Multiset};
pub use numbers::{binomial, catalan, factorial, refined_catalan};
pub use paths::{
    dyck_paths, laguerre_histories, motzkin_paths, walk_pairs, DyckPath, LaguerreHistory, MotzkinPath,
    MotzkinStep, Step, Walk, WalkPair, WalkTriple,
};
pub use pattern::{avoiders, is_baxter, require_avoids, Pattern};
pub use permutation::{all_permutations, Permutation};
pub use trees::{binary_trees, plane_trees, BinaryTree, PlaneTree};

/// Baxter permutations of `[n]`, lexicographic. Filters all of `S_n`.
pub fn baxter_permutations(n: usize) -> Vec<Permutation> {
    all_permutations(n).into_iter().filter(is_baxter).collect()
}
