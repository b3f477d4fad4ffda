use std::fmt;
use std::str::FromStr;

use super::permutation::Permutation;
use crate::error::{Error, Result};

/// The patterns this crate knows how to avoid: the six classical patterns of
/// length three and the two vincular patterns cutting out Baxter permutations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pattern {
    /// A word of `S_3`, stored as its letters.
    Classical([usize; 3]),
    /// 2-41-3: `i < j, j+1 < k` with `π_{j+1} < π_i < π_k < π_j`.
    Baxter2413,
    /// 3-14-2: `i < j, j+1 < k` with `π_j < π_k < π_i < π_{j+1}`.
    Baxter3142,
}

impl Pattern {
    pub const P123: Pattern = Pattern::Classical([1, 2, 3]);
    pub const P132: Pattern = Pattern::Classical([1, 3, 2]);
    pub const P213: Pattern = Pattern::Classical([2, 1, 3]);
    pub const P231: Pattern = Pattern::Classical([2, 3, 1]);
    pub const P312: Pattern = Pattern::Classical([3, 1, 2]);
    pub const P321: Pattern = Pattern::Classical([3, 2, 1]);

    pub fn classical_patterns() -> [Pattern; 6] {
        [
            Self::P123,
            Self::P132,
            Self::P213,
            Self::P231,
            Self::P312,
            Self::P321,
        ]
    }

    pub fn classical(word: &[usize]) -> Result<Pattern> {
        let name = word.iter().map(|d| d.to_string()).collect::<String>();
        if word.len() != 3 {
            return Err(Error::UnsupportedPattern(name));
        }
        let mut sorted = word.to_vec();
        sorted.sort_unstable();
        if sorted != [1, 2, 3] {
            return Err(Error::UnsupportedPattern(name));
        }
        Ok(Pattern::Classical([word[0], word[1], word[2]]))
    }

    /// Positions (1-based) of some occurrence in `pi`, if any.
    pub fn find_occurrence(&self, pi: &Permutation) -> Option<Vec<usize>> {
        let w = pi.as_slice();
        let n = w.len();
        match *self {
            Pattern::Classical(p) => {
                for k in 2..n {
                    if let Some((i, j)) = classical_ending_at(w, k, p) {
                        return Some(vec![i + 1, j + 1, k + 1]);
                    }
                }
                None
            }
            Pattern::Baxter2413 | Pattern::Baxter3142 => {
                for k in 3..n {
                    if let Some((i, j)) = baxter_ending_at(w, k, *self) {
                        return Some(vec![i + 1, j + 1, j + 2, k + 1]);
                    }
                }
                None
            }
        }
    }

    pub fn avoided_by(&self, pi: &Permutation) -> bool {
        self.find_occurrence(pi).is_none()
    }

    /// Whether some occurrence uses the last letter of `w` as its last
    /// letter. Used for prefix pruning, where `w` need not be standardised.
    pub(crate) fn occurs_ending_at_last(&self, w: &[usize]) -> bool {
        let Some(k) = w.len().checked_sub(1) else {
            return false;
        };
        match *self {
            Pattern::Classical(p) => classical_ending_at(w, k, p).is_some(),
            _ => baxter_ending_at(w, k, *self).is_some(),
        }
    }
}

/// Occurrence `(i, j, k)` of the classical pattern `p` whose last index is `k`.
fn classical_ending_at(w: &[usize], k: usize, p: [usize; 3]) -> Option<(usize, usize)> {
    let same = |a: usize, b: usize, pa: usize, pb: usize| (a < b) == (pa < pb);
    for j in 1..k {
        if !same(w[j], w[k], p[1], p[2]) {
            continue;
        }
        for i in 0..j {
            if same(w[i], w[j], p[0], p[1]) && same(w[i], w[k], p[0], p[2]) {
                return Some((i, j));
            }
        }
    }
    None
}

fn baxter_ending_at(w: &[usize], k: usize, pattern: Pattern) -> Option<(usize, usize)> {
    for j in 1..k.saturating_sub(1) {
        for i in 0..j {
            let (a, b, c, d) = (w[i], w[j], w[j + 1], w[k]);
            let hit = match pattern {
                Pattern::Baxter2413 => c < a && a < d && d < b,
                _ => b < d && d < a && a < c,
            };
            if hit {
                return Some((i, j));
            }
        }
    }
    None
}

/// Whether `pi` avoids both vincular patterns 2-41-3 and 3-14-2.
pub fn is_baxter(pi: &Permutation) -> bool {
    Pattern::Baxter2413.avoided_by(pi) && Pattern::Baxter3142.avoided_by(pi)
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Classical(p) => write!(f, "{}{}{}", p[0], p[1], p[2]),
            Pattern::Baxter2413 => f.write_str("2-41-3"),
            Pattern::Baxter3142 => f.write_str("3-14-2"),
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "2-41-3" => Ok(Pattern::Baxter2413),
            "3-14-2" => Ok(Pattern::Baxter3142),
            other => {
                let digits = other
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<Vec<_>>>()
                    .ok_or_else(|| Error::UnsupportedPattern(other.to_string()))?;
                Pattern::classical(&digits)
            }
        }
    }
}

/// Checks that `pi` avoids `pattern`, producing a diagnostic otherwise.
pub fn require_avoids(pi: &Permutation, pattern: Pattern) -> Result<()> {
    match pattern.find_occurrence(pi) {
        None => Ok(()),
        Some(positions) => Err(Error::PatternViolation {
            input: pi.to_string(),
            pattern: pattern.to_string(),
            positions,
        }),
    }
}

/// All permutations of `[n]` avoiding `pattern`, in lexicographic order.
/// Prefixes containing an occurrence are pruned, since any extension would
/// contain it too.
pub fn avoiders(n: usize, pattern: Pattern) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    extend(n, pattern, &mut prefix, &mut used, &mut out);
    out
}

fn extend(
    n: usize,
    pattern: Pattern,
    prefix: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    if prefix.len() == n {
        out.push(Permutation::from_vec_unchecked(prefix.clone()));
        return;
    }
    for v in 1..=n {
        if used[v] {
            continue;
        }
        prefix.push(v);
        if !pattern.occurs_ending_at_last(prefix) {
            used[v] = true;
            extend(n, pattern, prefix, used, out);
            used[v] = false;
        }
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::objects::permutation::all_permutations;

    #[test]
    fn parses_supported_patterns() {
        assert_eq!("231".parse::<Pattern>().unwrap(), Pattern::P231);
        assert_eq!("2-41-3".parse::<Pattern>().unwrap(), Pattern::Baxter2413);
        assert!("1234".parse::<Pattern>().is_err());
        assert!("112".parse::<Pattern>().is_err());
    }

    #[test]
    fn avoiders_of_231_of_size_three() {
        let words: Vec<String> = avoiders(3, Pattern::P231).iter().map(|p| p.to_string()).collect();
        assert_eq!(words, ["1 2 3", "1 3 2", "2 1 3", "3 1 2", "3 2 1"]);
    }

    #[test]
    fn pruned_generation_matches_filtering() {
        for n in 0..=7 {
            let all = all_permutations(n);
            for pattern in Pattern::classical_patterns() {
                let filtered: Vec<_> = all.iter().filter(|p| pattern.avoided_by(p)).cloned().collect();
                assert_eq!(avoiders(n, pattern), filtered, "n={n} pattern={pattern}");
            }
        }
    }

    #[test]
    fn occurrence_is_reported() {
        let pi = Permutation::from_digits("2431").unwrap();
        let occ = Pattern::P231.find_occurrence(&pi).unwrap();
        let letters: Vec<usize> = occ.iter().map(|&i| pi.at(i)).collect();
        assert!(letters[2] < letters[0] && letters[0] < letters[1]);
    }

    #[test]
    fn baxter_counts() {
        let counts: Vec<usize> = (1..=7)
            .map(|n| all_permutations(n).iter().filter(|p| is_baxter(p)).count())
            .collect();
        assert_eq!(counts, [1, 2, 6, 22, 92, 422, 2074]);
    }
}
