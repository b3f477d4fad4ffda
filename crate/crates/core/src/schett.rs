//! Catalan–Schett polynomials `C_n(x, y) = Σ_T x^{olc(T)} y^{orc(T)}` over
//! binary trees with `n` nodes, computed along three independent routes, and
//! the classical Schett polynomials over increasing binary trees.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::objects::{all_permutations, avoiders, binary_trees, BinaryTree, Pattern, Permutation};
pub use crate::poly::BivariatePolynomial;
use crate::statistics::{excedance_profile, mna, mnd, peak_profile, tree_chain_profile};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    /// `x^{n-2X(T)} y^{n-2Y(T)}` over binary trees.
    Trees,
    /// `x^{n-2 mnd(π)} y^{n-2 mna(π⁻¹)}` over 231-avoiders.
    StackSortable,
    /// `x^{n-2 mne(π)} y^{n-2 mnw(π⁻¹)}` over 321-avoiders.
    Restricted,
}

impl Route {
    pub const ALL: [Route; 3] = [Route::Trees, Route::StackSortable, Route::Restricted];
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Trees => "trees",
            Route::StackSortable => "perm231",
            Route::Restricted => "perm321",
        })
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "trees" => Ok(Route::Trees),
            "perm231" => Ok(Route::StackSortable),
            "perm321" => Ok(Route::Restricted),
            other => Err(Error::Unknown {
                kind: "route",
                name: other.to_string(),
            }),
        }
    }
}

pub fn catalan_schett(n: usize, route: Route) -> BivariatePolynomial {
    match route {
        Route::Trees => catalan_schett_trees(n),
        Route::StackSortable => catalan_schett_stack_sortable(n),
        Route::Restricted => catalan_schett_restricted(n),
    }
}

pub fn catalan_schett_trees(n: usize) -> BivariatePolynomial {
    BivariatePolynomial::from_pairs(binary_trees(n).iter().map(|t| {
        let c = tree_chain_profile(t);
        (n - 2 * c.x, n - 2 * c.y)
    }))
}

pub fn catalan_schett_stack_sortable(n: usize) -> BivariatePolynomial {
    BivariatePolynomial::from_pairs(
        avoiders(n, Pattern::P231)
            .iter()
            .map(|p| (n - 2 * mnd(p), n - 2 * mna(&p.inverse()))),
    )
}

pub fn catalan_schett_restricted(n: usize) -> BivariatePolynomial {
    BivariatePolynomial::from_pairs(avoiders(n, Pattern::P321).iter().map(|p| {
        let e = excedance_profile(p);
        let w = excedance_profile(&p.inverse());
        (n - 2 * e.mne, n - 2 * w.mnw)
    }))
}

/// Shape of the increasing binary tree of `π`: the minimum letter is the
/// root, the letters to its left and right form the two subtrees.
pub fn increasing_tree_shape(pi: &Permutation) -> BinaryTree {
    fn go(w: &[usize]) -> BinaryTree {
        match w.iter().enumerate().min_by_key(|(_, v)| **v) {
            None => BinaryTree::Empty,
            Some((j, _)) => BinaryTree::node(go(&w[..j]), go(&w[j + 1..])),
        }
    }
    go(pi.as_slice())
}

/// `S_n(x, y) = Σ x^{olc(T)} y^{orc(T)}` over increasing binary trees on
/// `[n]`, enumerated through their permutations.
pub fn schett(n: usize) -> BivariatePolynomial {
    BivariatePolynomial::from_pairs(all_permutations(n).iter().map(|p| {
        let c = tree_chain_profile(&increasing_tree_shape(p));
        (c.olc, c.orc)
    }))
}

/// Joint distribution of (odd left peaks, even left peaks) over all of
/// `S_n`, exposed for comparison with [`schett`]. Nothing is asserted about
/// how the two relate.
pub fn left_peak_parity_distribution(n: usize) -> BivariatePolynomial {
    BivariatePolynomial::from_pairs(all_permutations(n).iter().map(|p| {
        let pk = peak_profile(p);
        (pk.lpk_o, pk.lpk_e)
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn first_polynomials() {
        assert_eq!(catalan_schett_trees(1).to_string(), "x*y");
        assert_eq!(catalan_schett_trees(2).to_string(), "x^2 + y^2");
        assert_eq!(catalan_schett_trees(3).to_string(), "x^3*y + x*y^3 + 3*x*y");
    }

    #[test]
    fn schett_values_at_one_are_factorials() {
        let fact = [1u32, 1, 2, 6, 24, 120, 720];
        for (n, &f) in fact.iter().enumerate().skip(1) {
            assert_eq!(schett(n).eval_at_one(), BigInt::from(f));
        }
    }

    #[test]
    fn route_names_parse() {
        for r in Route::ALL {
            assert_eq!(r.to_string().parse::<Route>().unwrap(), r);
        }
        assert!("forest".parse::<Route>().is_err());
    }
}
