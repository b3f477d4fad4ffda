//! Krattenthaler's map from 321-avoiders to Dyck paths.

use crate::error::{Error, Result};
use crate::objects::{require_avoids, DyckPath, Pattern, Permutation};

/// The `i`-th east step sits at level `min(i - 1, min_{j >= i} π_j - 1)`.
/// Non-excedances `π_i <= i` end up exactly at the ends of platforms, and
/// descents at the penultimate steps of platforms of order at least two.
pub fn krattenthaler(pi: &Permutation) -> Result<DyckPath> {
    require_avoids(pi, Pattern::P321)?;
    let w = pi.as_slice();
    let n = w.len();
    let mut levels = vec![0; n];
    let mut suffix_min = usize::MAX;
    for i in (1..=n).rev() {
        suffix_min = suffix_min.min(w[i - 1]);
        levels[i - 1] = (i - 1).min(suffix_min - 1);
    }
    DyckPath::from_east_step_levels(&levels)
}

/// Inverse of [`krattenthaler`]: a platform-final east step `i` at level
/// `g` is the non-excedance `π_i = g + 1`; the remaining values fill the
/// other positions in increasing order.
pub fn krattenthaler_inverse(d: &DyckPath) -> Permutation {
    let levels = d.east_step_levels();
    let n = levels.len();
    let mut word = vec![0; n];
    let mut used = vec![false; n + 1];
    for i in 1..=n {
        if d.is_platform_final(i) {
            word[i - 1] = levels[i - 1] + 1;
            used[levels[i - 1] + 1] = true;
        }
    }
    let mut free = (1..=n).filter(|&v| !used[v]);
    for slot in word.iter_mut().filter(|v| **v == 0) {
        *slot = free.next().expect("as many free values as free slots");
    }
    Permutation::from_vec_unchecked(word)
}

/// Fails unless `d` decodes to a 321-avoider that encodes back to `d`.
pub fn krattenthaler_inverse_checked(d: &DyckPath) -> Result<Permutation> {
    let pi = krattenthaler_inverse(d);
    if krattenthaler(&pi)? != *d {
        return Err(Error::Internal(format!("{d} does not round-trip through {pi}")));
    }
    Ok(pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_letter_example() {
        let pi = Permutation::from_digits("245136879").unwrap();
        let d = krattenthaler(&pi).unwrap();
        assert_eq!(d.to_string(), "EEEENNENNNENEENNEN");
        assert_eq!(krattenthaler_inverse(&d), pi);
    }

    #[test]
    fn rejects_321() {
        assert!(krattenthaler(&Permutation::from_digits("321").unwrap()).is_err());
    }
}
