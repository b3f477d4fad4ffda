use std::fmt;
use std::str::FromStr;

use crate::error::{parse_err, Error, Result};

/// A permutation of `[n]` in one-line notation. Positions and values are
/// 1-based in every public method; the empty permutation is allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for (i, &v) in word.iter().enumerate() {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} at position {} is outside 1..={n}",
                    i + 1
                )));
            }
            if seen[v] {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} repeated at position {}",
                    i + 1
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation(word))
    }

    /// Caller guarantees `word` is a permutation of `1..=word.len()`.
    pub(crate) fn from_vec_unchecked(word: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(word.clone()).is_ok());
        Permutation(word)
    }

    /// Parses the compact digit form used in small examples, e.g. `"3125476"`.
    /// Only meaningful for `n <= 9`.
    pub fn from_digits(s: &str) -> Result<Self> {
        let word = s
            .chars()
            .enumerate()
            .map(|(i, c)| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| parse_err(i + 1, format!("expected a digit, found `{c}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::new(word)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn empty() -> Self {
        Permutation(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// The letter at 1-based position `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `π^rc_i = n + 1 - π_{n+1-i}`.
    pub fn reverse_complement(&self) -> Permutation {
        let n = self.len();
        Permutation(self.0.iter().rev().map(|&v| n + 1 - v).collect())
    }

    pub fn reverse(&self) -> Permutation {
        Permutation(self.0.iter().rev().copied().collect())
    }

    pub fn complement(&self) -> Permutation {
        let n = self.len();
        Permutation(self.0.iter().map(|&v| n + 1 - v).collect())
    }

    /// `self ⊕ other`: `other` shifted up by `self.len()` and appended.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let k = self.len();
        let mut word = self.0.clone();
        word.extend(other.0.iter().map(|&v| v + k));
        Permutation(word)
    }

    /// Splits `π = (k·π') ⊕ π''` where `k = π_1`. Fails on the empty
    /// permutation and when the first `k` letters are not exactly `1..=k`,
    /// which happens precisely when the input contains 231.
    pub fn first_letter_decompose(&self) -> Result<(usize, Permutation, Permutation)> {
        if self.is_empty() {
            return Err(Error::Empty("first-letter decomposition"));
        }
        let k = self.0[0];
        if let Some(pos) = self.0[..k].iter().position(|&v| v > k) {
            return Err(Error::Domain(format!(
                "{self} has no first-letter decomposition: letter {} at position {} lies above the first letter {k} \
                 inside the first block",
                self.0[pos],
                pos + 1
            )));
        }
        let head = Permutation(self.0[1..k].to_vec());
        let tail = Permutation(self.0[k..].iter().map(|&v| v - k).collect());
        Ok((k, head, tail))
    }

    /// Inverse of [`Permutation::first_letter_decompose`].
    pub fn first_letter_compose(head: &Permutation, tail: &Permutation) -> Permutation {
        let k = head.len() + 1;
        let mut block = Vec::with_capacity(k);
        block.push(k);
        block.extend_from_slice(&head.0);
        Permutation(block).direct_sum(tail)
    }

    /// Splits around the greatest letter: `π = α n β`, with `β`
    /// standardised (its values reduced by `|α|`). Requires the letters of
    /// `α` to be smaller than those of `β`, i.e. a 231-avoider.
    pub fn greatest_letter_decompose(&self) -> Result<(Permutation, Permutation)> {
        let n = self.len();
        if n == 0 {
            return Err(Error::Empty("greatest-letter decomposition"));
        }
        let j = self.0.iter().position(|&v| v == n).expect("n is present");
        if let Some(bad) = self.0[..j].iter().position(|&v| v > j) {
            return Err(Error::Domain(format!(
                "{self}: letter {} left of {n} exceeds every letter to its right",
                self.0[bad]
            )));
        }
        let alpha = Permutation(self.0[..j].to_vec());
        let beta = Permutation(self.0[j + 1..].iter().map(|&v| v - j).collect());
        Ok((alpha, beta))
    }

    pub fn greatest_letter_compose(alpha: &Permutation, beta: &Permutation) -> Permutation {
        let k = alpha.len();
        let n = k + beta.len() + 1;
        let mut word = alpha.0.clone();
        word.push(n);
        word.extend(beta.0.iter().map(|&v| v + k));
        Permutation(word)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut word = Vec::new();
        let mut column = 1;
        for token in s.split(' ') {
            if !token.is_empty() {
                let value = token.parse::<usize>().map_err(|_| {
                    parse_err(column, format!("expected a positive integer, found `{token}`"))
                })?;
                word.push(value);
            }
            column += token.len() + 1;
        }
        Permutation::new(word)
    }
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word: Vec<usize> = (1..=n).collect();
    loop {
        out.push(Permutation(word.clone()));
        // next lexicographic permutation
        let Some(i) = (1..n).rev().find(|&i| word[i - 1] < word[i]) else {
            break;
        };
        let j = (i..n).rev().find(|&j| word[j] > word[i - 1]).unwrap();
        word.swap(i - 1, j);
        word[i..].reverse();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::from_digits(s).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let q: Permutation = "4 1 2 7 3 9 5 6 8 12 13 10 11".parse().unwrap();
        assert_eq!(q.to_string(), "4 1 2 7 3 9 5 6 8 12 13 10 11");
        assert_eq!("".parse::<Permutation>().unwrap(), Permutation::empty());
        assert!(matches!("1 x".parse::<Permutation>(), Err(Error::Parse { column: 3, .. })));
        assert!("1 1".parse::<Permutation>().is_err());
    }

    #[test]
    fn inverse_and_symmetries() {
        assert_eq!(p("143295768").inverse(), p("143268795"));
        assert_eq!(p("132").reverse_complement(), p("213"));
        for q in all_permutations(5) {
            assert_eq!(q.inverse().inverse(), q);
            assert_eq!(q.reverse_complement().reverse_complement(), q);
        }
    }

    #[test]
    fn first_letter_decomposition() {
        let (k, head, tail) = p("3125476").first_letter_decompose().unwrap();
        assert_eq!((k, head.clone(), tail.clone()), (3, p("12"), p("2143")));
        assert_eq!(Permutation::first_letter_compose(&head, &tail), p("3125476"));
        assert!(p("231").first_letter_decompose().is_err());
    }

    #[test]
    fn greatest_letter_decomposition() {
        let (a, b) = p("143295768").greatest_letter_decompose().unwrap();
        assert_eq!((a.clone(), b.clone()), (p("1432"), p("1324")));
        assert_eq!(Permutation::greatest_letter_compose(&a, &b), p("143295768"));
    }

    #[test]
    fn lexicographic_enumeration() {
        let all = all_permutations(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_permutations(0), vec![Permutation::empty()]);
    }
}
