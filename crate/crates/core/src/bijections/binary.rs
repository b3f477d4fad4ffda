//! Maps between 231-avoiders, binary trees, walk pairs and Dyck paths.

use crate::error::{Error, Result};
use crate::objects::{require_avoids, BinaryTree, DyckPath, Pattern, Permutation, Step, Walk, WalkPair};

/// Detaches the right branch of the root's left child and re-attaches it as
/// the root's right branch. Requires a root with a left child and no right
/// child.
pub fn star_transform(t: &BinaryTree) -> Result<BinaryTree> {
    let Some((left, right)) = t.children() else {
        return Err(Error::Domain("star transform of the empty tree".into()));
    };
    if !right.is_empty() {
        return Err(Error::Domain(format!("{t}: root already has a right child")));
    }
    let Some((ll, lr)) = left.children() else {
        return Err(Error::Domain(format!("{t}: root has no left child")));
    };
    Ok(BinaryTree::node(BinaryTree::node(ll.clone(), BinaryTree::Empty), lr.clone()))
}

/// Inverse of [`star_transform`]: the root's right branch moves under the
/// root's left child, which must have no right child.
pub fn star_transform_inverse(t: &BinaryTree) -> Result<BinaryTree> {
    let Some((left, right)) = t.children() else {
        return Err(Error::Domain("star transform of the empty tree".into()));
    };
    let Some((ll, lr)) = left.children() else {
        return Err(Error::Domain(format!("{t}: root has no left child")));
    };
    if !lr.is_empty() {
        return Err(Error::Domain(format!("{t}: left child already has a right child")));
    }
    Ok(BinaryTree::node(BinaryTree::node(ll.clone(), right.clone()), BinaryTree::Empty))
}

/// Recursive map from 231-avoiders to binary trees built on the first-letter
/// decomposition `π = (k·π') ⊕ π''`. Descending runs of `π` become left
/// chains and ascending runs of `π⁻¹` become right chains.
pub fn stack_sortable_to_tree(pi: &Permutation) -> Result<BinaryTree> {
    require_avoids(pi, Pattern::P231)?;
    Ok(upsilon(pi))
}

fn upsilon(pi: &Permutation) -> BinaryTree {
    if pi.is_empty() {
        return BinaryTree::Empty;
    }
    let (_, head, tail) = pi.first_letter_decompose().expect("231-avoider");
    let rest = upsilon(&tail);
    if head.is_empty() {
        return BinaryTree::node(BinaryTree::Empty, rest);
    }
    let grown = BinaryTree::node(upsilon(&head), BinaryTree::Empty);
    let starred = star_transform(&grown).expect("root has a left child only");
    // hang the tail's tree on the (now childless on the right) left child
    let (left, right) = starred.into_children().expect("non-empty");
    let (ll, _) = left.into_children().expect("left child present");
    BinaryTree::node(BinaryTree::node(ll, rest), right)
}

pub fn tree_to_stack_sortable(t: &BinaryTree) -> Permutation {
    match t.children() {
        None => Permutation::empty(),
        Some((left, right)) => match left.children() {
            None => Permutation::first_letter_compose(&Permutation::empty(), &tree_to_stack_sortable(right)),
            Some((ll, lr)) => {
                let tail = tree_to_stack_sortable(lr);
                let unstarred = star_transform_inverse(&BinaryTree::node(
                    BinaryTree::node(ll.clone(), BinaryTree::Empty),
                    right.clone(),
                ))
                .expect("left child has no right child");
                let head = tree_to_stack_sortable(unstarred.children().expect("non-empty").0);
                Permutation::first_letter_compose(&head, &tail)
            }
        },
    }
}

/// The classical bijection from the greatest-letter decomposition
/// `π = α n β`: the root's left branch encodes `α`, its right branch `β`.
pub fn decreasing_tree_shape(pi: &Permutation) -> Result<BinaryTree> {
    require_avoids(pi, Pattern::P231)?;
    Ok(shape(pi))
}

fn shape(pi: &Permutation) -> BinaryTree {
    if pi.is_empty() {
        return BinaryTree::Empty;
    }
    let (alpha, beta) = pi.greatest_letter_decompose().expect("231-avoider");
    BinaryTree::node(shape(&alpha), shape(&beta))
}

pub fn decreasing_tree_shape_inverse(t: &BinaryTree) -> Permutation {
    match t.children() {
        None => Permutation::empty(),
        Some((l, r)) => Permutation::greatest_letter_compose(
            &decreasing_tree_shape_inverse(l),
            &decreasing_tree_shape_inverse(r),
        ),
    }
}

/// Letters recorded while walking around a tree: each edge is passed twice,
/// once going down and once coming back.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pass {
    LeftDown,
    LeftUp,
    RightDown,
    RightUp,
}

fn contour(t: &BinaryTree, out: &mut Vec<Pass>) {
    let Some((l, r)) = t.children() else { return };
    if !l.is_empty() {
        out.push(Pass::LeftDown);
        contour(l, out);
        out.push(Pass::LeftUp);
    }
    if !r.is_empty() {
        out.push(Pass::RightDown);
        contour(r, out);
        out.push(Pass::RightUp);
    }
}

/// Viennot's walk pair of a binary tree. The top walk keeps the second
/// passes of all edges (east for right edges); the bottom walk keeps second
/// passes of left edges and first passes of right edges (east for the
/// right ones).
pub fn tree_to_walk_pair(t: &BinaryTree) -> WalkPair {
    let mut passes = Vec::new();
    contour(t, &mut passes);
    let top = passes
        .iter()
        .filter_map(|p| match p {
            Pass::LeftUp => Some(Step::N),
            Pass::RightUp => Some(Step::E),
            _ => None,
        })
        .collect();
    let bottom = passes
        .iter()
        .filter_map(|p| match p {
            Pass::LeftUp => Some(Step::N),
            Pass::RightDown => Some(Step::E),
            _ => None,
        })
        .collect();
    WalkPair {
        top: Walk::new(top),
        bottom: Walk::new(bottom),
    }
}

/// Inverse of [`tree_to_walk_pair`]. Uses the root decomposition
/// `top = top_L N top_R E`, `bottom = bottom_L N E bottom_R` (with the
/// obvious degenerations when a branch is empty); the split point is the
/// unique one for which both halves are again walk pairs.
pub fn walk_pair_to_tree(wp: &WalkPair) -> Result<BinaryTree> {
    decode_pair(wp.top.steps(), wp.bottom.steps())
        .ok_or_else(|| Error::Domain(format!("{wp} is not the walk pair of a binary tree")))
}

fn is_pair(top: &[Step], bottom: &[Step]) -> bool {
    Walk::new(top.to_vec()).weakly_above(&Walk::new(bottom.to_vec()))
}

fn decode_pair(top: &[Step], bottom: &[Step]) -> Option<BinaryTree> {
    let m = top.len();
    if m == 0 {
        return Some(BinaryTree::leaf());
    }
    if top[m - 1] == Step::N {
        // no right branch
        if bottom[m - 1] != Step::N {
            return None;
        }
        let left = decode_pair(&top[..m - 1], &bottom[..m - 1])?;
        return Some(BinaryTree::node(left, BinaryTree::Empty));
    }
    // right branch present; try the empty left branch first
    if bottom[0] == Step::E && is_pair(&top[..m - 1], &bottom[1..]) {
        let right = decode_pair(&top[..m - 1], &bottom[1..])?;
        return Some(BinaryTree::node(BinaryTree::Empty, right));
    }
    for j in 0..m - 1 {
        // top = top[..j] N top[j+1..m-1] E ; bottom = bottom[..j] N E bottom[j+2..]
        if top[j] != Step::N || bottom[j] != Step::N || bottom[j + 1] != Step::E {
            continue;
        }
        let (tl, bl) = (&top[..j], &bottom[..j]);
        let (tr, br) = (&top[j + 1..m - 1], &bottom[j + 2..]);
        if is_pair(tl, bl) && is_pair(tr, br) {
            let left = decode_pair(tl, bl)?;
            let right = decode_pair(tr, br)?;
            return Some(BinaryTree::node(left, right));
        }
    }
    None
}

/// `V ∘ φ`: 231-avoiders to walk pairs, sending `(DES(π), ASC(π⁻¹))` to
/// (east steps of the bottom walk, north steps of the top walk).
pub fn stack_sortable_to_walk_pair(pi: &Permutation) -> Result<WalkPair> {
    Ok(tree_to_walk_pair(&decreasing_tree_shape(pi)?))
}

pub fn walk_pair_to_stack_sortable(wp: &WalkPair) -> Result<Permutation> {
    Ok(decreasing_tree_shape_inverse(&walk_pair_to_tree(wp)?))
}

/// Preorder reading of a binary tree: each node contributes an east step,
/// then its left subtree, then a north step, then its right subtree. Left
/// chains become platforms.
pub fn tree_to_dyck(t: &BinaryTree) -> DyckPath {
    fn go(t: &BinaryTree, out: &mut Vec<Step>) {
        if let Some((l, r)) = t.children() {
            out.push(Step::E);
            go(l, out);
            out.push(Step::N);
            go(r, out);
        }
    }
    let mut steps = Vec::new();
    go(t, &mut steps);
    DyckPath::new(steps).expect("preorder reading is a Dyck path")
}

pub fn dyck_to_tree(d: &DyckPath) -> BinaryTree {
    fn go(steps: &[Step]) -> BinaryTree {
        if steps.is_empty() {
            return BinaryTree::Empty;
        }
        // first return: the N matching the initial E
        let mut h = 0i32;
        let mut close = 0;
        for (i, s) in steps.iter().enumerate() {
            h += if *s == Step::E { 1 } else { -1 };
            if h == 0 {
                close = i;
                break;
            }
        }
        BinaryTree::node(go(&steps[1..close]), go(&steps[close + 1..]))
    }
    go(d.steps())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    #[test]
    fn upsilon_small_cases() {
        assert_eq!(stack_sortable_to_tree(&p("1")).unwrap().to_string(), "(. .)");
        assert_eq!(stack_sortable_to_tree(&p("21")).unwrap().to_string(), "((. .) .)");
        assert_eq!(stack_sortable_to_tree(&p("12")).unwrap().to_string(), "(. (. .))");
    }

    #[test]
    fn upsilon_nine_letter_example() {
        let t = stack_sortable_to_tree(&p("143295768")).unwrap();
        let want: BinaryTree = "(. (((. .) ((. .) ((. (. .)) .))) .))".parse().unwrap();
        assert_eq!(t, want);
        assert_eq!(tree_to_stack_sortable(&t), p("143295768"));
    }

    #[test]
    fn upsilon_rejects_231() {
        assert!(matches!(
            stack_sortable_to_tree(&p("231")),
            Err(Error::PatternViolation { .. })
        ));
    }

    #[test]
    fn star_transform_round_trip() {
        let t: BinaryTree = "(((. .) (. .)) .)".parse().unwrap();
        let s = star_transform(&t).unwrap();
        assert_eq!(s.to_string(), "(((. .) .) (. .))");
        assert_eq!(star_transform_inverse(&s).unwrap(), t);
        assert!(star_transform(&s).is_err());
    }

    #[test]
    fn viennot_walks_of_nine_letter_example() {
        let wp = stack_sortable_to_walk_pair(&p("143295768")).unwrap();
        assert_eq!(wp.top.to_string(), "NEENNENE");
        assert_eq!(wp.bottom.to_string(), "NEENENEN");
        assert_eq!(wp.top.hor(), [2, 3, 6, 8]);
        assert_eq!(walk_pair_to_stack_sortable(&wp).unwrap(), p("143295768"));
    }

    #[test]
    fn preorder_reading_of_nine_node_tree() {
        let t: BinaryTree = "((((. .) (. .)) .) (. ((. .) (. .))))".parse().unwrap();
        assert_eq!(tree_to_dyck(&t).to_string(), "EEEENNENNNENEENNEN");
        assert_eq!(dyck_to_tree(&tree_to_dyck(&t)), t);
    }
}
