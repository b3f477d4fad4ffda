use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};

/// A binary tree where every node has an optional left and right child.
/// Text form: `.` for the empty tree, `(L R)` for a node.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum BinaryTree {
    #[default]
    Empty,
    Node(Box<BinaryTree>, Box<BinaryTree>),
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> BinaryTree {
        BinaryTree::Node(Box::new(left), Box::new(right))
    }

    pub fn leaf() -> BinaryTree {
        BinaryTree::node(BinaryTree::Empty, BinaryTree::Empty)
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, BinaryTree::Empty)
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            BinaryTree::Empty => 0,
            BinaryTree::Node(l, r) => 1 + l.size() + r.size(),
        }
    }

    pub fn children(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node(l, r) => Some((l, r)),
        }
    }

    pub fn into_children(self) -> Option<(BinaryTree, BinaryTree)> {
        match self {
            BinaryTree::Empty => None,
            BinaryTree::Node(l, r) => Some((*l, *r)),
        }
    }

    /// The left-right mirror image.
    pub fn mirror(&self) -> BinaryTree {
        match self {
            BinaryTree::Empty => BinaryTree::Empty,
            BinaryTree::Node(l, r) => BinaryTree::node(r.mirror(), l.mirror()),
        }
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BinaryTree::Empty => f.write_str("."),
            BinaryTree::Node(l, r) => write!(f, "({l} {r})"),
        }
    }
}

impl FromStr for BinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.trim_end().as_bytes();
        let mut pos = 0;
        let tree = parse_binary(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(parse_err(pos + 1, "trailing characters after tree"));
        }
        Ok(tree)
    }
}

fn expect(bytes: &[u8], pos: &mut usize, want: u8) -> Result<()> {
    match bytes.get(*pos) {
        Some(&c) if c == want => {
            *pos += 1;
            Ok(())
        }
        Some(&c) => Err(parse_err(
            *pos + 1,
            format!("expected `{}`, found `{}`", want as char, c as char),
        )),
        None => Err(parse_err(*pos + 1, format!("expected `{}`, found end of input", want as char))),
    }
}

fn parse_binary(bytes: &[u8], pos: &mut usize) -> Result<BinaryTree> {
    match bytes.get(*pos) {
        Some(b'.') => {
            *pos += 1;
            Ok(BinaryTree::Empty)
        }
        Some(b'(') => {
            *pos += 1;
            let left = parse_binary(bytes, pos)?;
            expect(bytes, pos, b' ')?;
            let right = parse_binary(bytes, pos)?;
            expect(bytes, pos, b')')?;
            Ok(BinaryTree::node(left, right))
        }
        Some(&c) => Err(parse_err(*pos + 1, format!("expected `.` or `(`, found `{}`", c as char))),
        None => Err(parse_err(*pos + 1, "unexpected end of input")),
    }
}

/// All binary trees with `n` nodes, sorted by their text form.
pub fn binary_trees(n: usize) -> Vec<BinaryTree> {
    let mut by_size: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Empty]];
    for m in 1..=n {
        let mut trees = Vec::new();
        for k in 0..m {
            for l in &by_size[k] {
                for r in &by_size[m - 1 - k] {
                    trees.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(trees);
    }
    let mut out = by_size.swap_remove(n);
    sort_by_text(&mut out);
    out
}

pub(crate) fn sort_by_text<T: ToString>(items: &mut Vec<T>) {
    let mut keyed: Vec<(String, T)> = items.drain(..).map(|t| (t.to_string(), t)).collect();
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    items.extend(keyed.into_iter().map(|(_, t)| t));
}

/// A rooted plane (ordered) tree. Text form: a node is `(` followed by its
/// children and `)`, so a leaf is `()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PlaneTree {
    pub children: Vec<PlaneTree>,
}

impl PlaneTree {
    pub fn leaf() -> PlaneTree {
        PlaneTree::default()
    }

    pub fn with_children(children: Vec<PlaneTree>) -> PlaneTree {
        PlaneTree { children }
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn edges(&self) -> usize {
        self.children.iter().map(|c| 1 + c.edges()).sum()
    }

    pub fn nodes(&self) -> usize {
        self.edges() + 1
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for c in &self.children {
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for PlaneTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes = s.trim_end().as_bytes();
        let mut pos = 0;
        let tree = parse_plane(bytes, &mut pos)?;
        if pos != bytes.len() {
            return Err(parse_err(pos + 1, "trailing characters after tree"));
        }
        Ok(tree)
    }
}

fn parse_plane(bytes: &[u8], pos: &mut usize) -> Result<PlaneTree> {
    expect(bytes, pos, b'(')?;
    let mut children = Vec::new();
    while bytes.get(*pos) == Some(&b'(') {
        children.push(parse_plane(bytes, pos)?);
    }
    expect(bytes, pos, b')')?;
    Ok(PlaneTree { children })
}

/// All plane trees with `n` edges, sorted by their text form.
pub fn plane_trees(n: usize) -> Vec<PlaneTree> {
    // forests[m] = ordered forests with m edges in total (each tree counts
    // its own edge to the parent)
    let mut forests: Vec<Vec<Vec<PlaneTree>>> = vec![vec![Vec::new()]];
    for m in 1..=n {
        let mut out = Vec::new();
        for first_edges in 0..m {
            let firsts: Vec<PlaneTree> = forests[first_edges]
                .iter()
                .map(|f| PlaneTree::with_children(f.clone()))
                .collect();
            for first in &firsts {
                for rest in &forests[m - 1 - first_edges] {
                    let mut forest = Vec::with_capacity(rest.len() + 1);
                    forest.push(first.clone());
                    forest.extend(rest.iter().cloned());
                    out.push(forest);
                }
            }
        }
        forests.push(out);
    }
    let mut out: Vec<PlaneTree> = forests
        .swap_remove(n)
        .into_iter()
        .map(PlaneTree::with_children)
        .collect();
    sort_by_text(&mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_text_round_trip() {
        for n in 0..=6 {
            for t in binary_trees(n) {
                assert_eq!(t.to_string().parse::<BinaryTree>().unwrap(), t);
                assert_eq!(t.size(), n);
            }
        }
        assert!(matches!("(. x)".parse::<BinaryTree>(), Err(Error::Parse { column: 4, .. })));
    }

    #[test]
    fn plane_text_round_trip() {
        for n in 0..=6 {
            for t in plane_trees(n) {
                assert_eq!(t.to_string().parse::<PlaneTree>().unwrap(), t);
                assert_eq!(t.edges(), n);
            }
        }
        assert!("(()".parse::<PlaneTree>().is_err());
    }

    #[test]
    fn catalan_many_trees() {
        let expected = [1, 1, 2, 5, 14, 42, 132, 429];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(binary_trees(n).len(), c);
            assert_eq!(plane_trees(n).len(), c);
        }
    }
}
