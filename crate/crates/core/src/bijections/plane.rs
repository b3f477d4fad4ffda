//! Plane trees to 231-avoiders, sending marked nodes to non-overlapping
//! descents.

use crate::error::{Error, Result};
use crate::objects::{require_avoids, Pattern, Permutation, PlaneTree};
use crate::statistics::idr;

/// Recursive map `T ↦ (k · f(T_L)) ⊕ f(T_R)` with `k` the number of nodes
/// of `T_L`. The split depends on whether the root has a leaf child:
///
/// * if it does, cut at the leftmost leaf child `w`; `T_L` keeps the root
///   with the children left of `w`, `T_R` the root with those right of `w`;
/// * otherwise follow first children from the root down to the first leaf
///   `x` with parent `y`. `T_L` is rooted at `y` with children: the root's
///   other children, then `x`, then `y`'s other children. `T_R` is a new
///   root whose children are the nodes strictly between the root and `y`,
///   each keeping its non-path children.
pub fn plane_tree_to_stack_sortable(t: &PlaneTree) -> Permutation {
    if t.is_leaf() {
        return Permutation::empty();
    }
    let (left, right) = split(t);
    Permutation::first_letter_compose(
        &plane_tree_to_stack_sortable(&left),
        &plane_tree_to_stack_sortable(&right),
    )
}

fn split(t: &PlaneTree) -> (PlaneTree, PlaneTree) {
    if let Some(w) = t.children.iter().position(PlaneTree::is_leaf) {
        let left = PlaneTree::with_children(t.children[..w].to_vec());
        let right = PlaneTree::with_children(t.children[w + 1..].to_vec());
        return (left, right);
    }
    // the leftmost path r = p_0, p_1, ..., p_m = y, x
    let mut path: Vec<&PlaneTree> = vec![t];
    while !path.last().unwrap().children[0].is_leaf() {
        let next = &path.last().unwrap().children[0];
        path.push(next);
    }
    let y = *path.last().unwrap();
    let mut left_children: Vec<PlaneTree> = t.children[1..].to_vec();
    left_children.extend(y.children.iter().cloned());
    let middle: Vec<PlaneTree> = path[1..path.len() - 1]
        .iter()
        .map(|node| PlaneTree::with_children(node.children[1..].to_vec()))
        .collect();
    (PlaneTree::with_children(left_children), PlaneTree::with_children(middle))
}

/// Inverse of [`plane_tree_to_stack_sortable`]. Which split was used is
/// recovered from the parity of the initial descending run of the head
/// `π'`: even (or `π'` empty) means the root had a leaf child.
pub fn stack_sortable_to_plane_tree(pi: &Permutation) -> Result<PlaneTree> {
    require_avoids(pi, Pattern::P231)?;
    Ok(unsplit(pi))
}

fn unsplit(pi: &Permutation) -> PlaneTree {
    if pi.is_empty() {
        return PlaneTree::leaf();
    }
    let (_, head, tail) = pi.first_letter_decompose().expect("231-avoider");
    let left = unsplit(&head);
    let right = unsplit(&tail);
    let root_had_leaf = head.is_empty() || idr(&head).expect("non-empty").is_multiple_of(2);
    if root_had_leaf {
        let mut children = left.children;
        children.push(PlaneTree::leaf());
        children.extend(right.children);
        return PlaneTree::with_children(children);
    }
    // `left` is rooted at y, whose leftmost leaf child is x
    let x = left
        .children
        .iter()
        .position(PlaneTree::is_leaf)
        .expect("odd initial run means the root has a leaf child");
    let root_rest = left.children[..x].to_vec();
    let y = PlaneTree::with_children(left.children[x..].to_vec());
    // rebuild the path bottom-up: p_m = y, then p_{m-1}, ..., p_1
    let mut below = y;
    for node in right.children.into_iter().rev() {
        let mut children = vec![below];
        children.extend(node.children);
        below = PlaneTree::with_children(children);
    }
    let mut children = vec![below];
    children.extend(root_rest);
    PlaneTree::with_children(children)
}

/// Checked form of the inverse for callers holding arbitrary input.
pub fn stack_sortable_to_plane_tree_checked(pi: &Permutation) -> Result<PlaneTree> {
    let t = stack_sortable_to_plane_tree(pi)?;
    if plane_tree_to_stack_sortable(&t) != *pi {
        return Err(Error::Internal(format!("{pi} does not round-trip through {t}")));
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn image(s: &str) -> String {
        let t: PlaneTree = s.parse().unwrap();
        plane_tree_to_stack_sortable(&t).to_string()
    }

    #[test]
    fn small_trees() {
        assert_eq!(image("()"), "");
        assert_eq!(image("(())"), "1");
        assert_eq!(image("((()))"), "2 1");
        assert_eq!(image("(()())"), "1 2");
        assert_eq!(image("((()()))"), "3 1 2");
    }

    #[test]
    fn round_trip_small() {
        for s in ["(())", "((()))", "(()())", "((()()))", "(((()))((()()())())()(()))"] {
            let t: PlaneTree = s.parse().unwrap();
            let pi = plane_tree_to_stack_sortable(&t);
            assert_eq!(stack_sortable_to_plane_tree(&pi).unwrap(), t, "{s}");
        }
    }
}
