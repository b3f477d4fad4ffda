//! Simion–Schmidt, Foata–Zeilberger and their composite on 321-avoiders.

use crate::error::{Error, Result};
use crate::objects::{require_avoids, LaguerreHistory, MotzkinPath, MotzkinStep, Pattern, Permutation};

/// Left-to-right maxima stay put; every other letter is replaced by the
/// largest unused value below the current maximum. Maps 321-avoiders to
/// 312-avoiders and keeps left peaks (both values and positions).
pub fn simion_schmidt(pi: &Permutation) -> Result<Permutation> {
    require_avoids(pi, Pattern::P321)?;
    Ok(replace_non_maxima(pi, |free| free.iter().rposition(|&f| f)))
}

/// Inverse of [`simion_schmidt`]: same scan, taking the smallest unused value
/// below the current maximum.
pub fn simion_schmidt_inverse(sigma: &Permutation) -> Result<Permutation> {
    require_avoids(sigma, Pattern::P312)?;
    Ok(replace_non_maxima(sigma, |free| free.iter().position(|&f| f)))
}

fn replace_non_maxima(pi: &Permutation, pick: impl Fn(&[bool]) -> Option<usize>) -> Permutation {
    let n = pi.len();
    // unused[v] is true while value v is still available
    let mut unused = vec![true; n + 1];
    unused[0] = false;
    let mut current_max = 0;
    let mut word = Vec::with_capacity(n);
    for &v in pi.as_slice() {
        if v > current_max {
            current_max = v;
            unused[v] = false;
            word.push(v);
        } else {
            let k = pick(&unused[..current_max]).expect("a free value below the maximum");
            unused[k] = false;
            word.push(k);
        }
    }
    Permutation::from_vec_unchecked(word)
}

/// Foata–Zeilberger: the value `i` sitting at position `j` contributes a
/// step chosen by the shape of `π_{j-1} π_j π_{j+1}` (with `π_0 = 0`,
/// `π_{n+1} = ∞`): valley up, peak down, double ascent plain level, double
/// descent coloured level. Its weight counts the descents `π_{k-1} > i > π_k`
/// with `k < j`.
pub fn foata_zeilberger(pi: &Permutation) -> LaguerreHistory {
    let n = pi.len();
    let w = pi.as_slice();
    let at = |j: usize| -> usize {
        if j == 0 {
            0
        } else if j > n {
            usize::MAX
        } else {
            w[j - 1]
        }
    };
    let inv = pi.inverse();
    let mut steps = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 1..=n {
        let j = inv.at(i);
        let (before, after) = (at(j - 1), at(j + 1));
        steps.push(match (before > i, i < after) {
            (true, true) => MotzkinStep::U,
            (false, false) => MotzkinStep::D,
            (false, true) => MotzkinStep::H,
            (true, false) => MotzkinStep::T,
        });
        weights.push((2..j).filter(|&k| w[k - 2] > i && i > w[k - 1]).count());
    }
    let path = MotzkinPath::new(steps).expect("histories of permutations are Motzkin paths");
    LaguerreHistory::new(path, weights).expect("weights respect the height bounds")
}

/// Inverse of [`foata_zeilberger`], by successive insertion into slots.
pub fn foata_zeilberger_inverse(h: &LaguerreHistory) -> Permutation {
    // None marks an open slot
    let mut word: Vec<Option<usize>> = vec![None];
    for (k, (step, &weight)) in h.path().steps().iter().zip(h.weights()).enumerate() {
        let i = k + 1;
        let slot = word
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_none())
            .nth(weight)
            .map(|(idx, _)| idx)
            .expect("weight bound guarantees enough open slots");
        let replacement: &[Option<usize>] = match step {
            MotzkinStep::U => &[None, Some(i), None],
            MotzkinStep::H => &[Some(i), None],
            MotzkinStep::D => &[Some(i)],
            MotzkinStep::T => &[None, Some(i)],
        };
        word.splice(slot..=slot, replacement.iter().copied());
    }
    Permutation::from_vec_unchecked(word.into_iter().flatten().collect())
}

/// 312-avoiders to 231-avoiders: keep the Motzkin path of the history and
/// replace the (necessarily zero) weights by their maxima.
pub fn maximise_weights(pi: &Permutation) -> Result<Permutation> {
    require_avoids(pi, Pattern::P312)?;
    let h = foata_zeilberger(pi);
    if let Some(step) = h.weights().iter().position(|&w| w != 0) {
        return Err(Error::Internal(format!("{pi} has non-zero weight at step {}", step + 1)));
    }
    let maxed = max_weight_history(h.path())?;
    Ok(foata_zeilberger_inverse(&maxed))
}

fn max_weight_history(path: &MotzkinPath) -> Result<LaguerreHistory> {
    let weights = path
        .weight_bounds()
        .into_iter()
        .enumerate()
        .map(|(k, b)| {
            b.ok_or_else(|| Error::Domain(format!("no admissible weight at step {}", k + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    LaguerreHistory::new(path.clone(), weights)
}

/// Inverse of [`maximise_weights`]: 231-avoiders carry maximal weights,
/// which are reset to zero.
pub fn minimise_weights(sigma: &Permutation) -> Result<Permutation> {
    require_avoids(sigma, Pattern::P231)?;
    let h = foata_zeilberger(sigma);
    if h.weights() != max_weight_history(h.path())?.weights() {
        return Err(Error::Internal(format!("{sigma} does not carry maximal weights")));
    }
    let zeroed = LaguerreHistory::new(h.path().clone(), vec![0; h.len()])?;
    Ok(foata_zeilberger_inverse(&zeroed))
}

/// 321-avoiders to 231-avoiders preserving left peaks: Simion–Schmidt
/// followed by weight maximisation.
pub fn restricted_to_stack_sortable(pi: &Permutation) -> Result<Permutation> {
    maximise_weights(&simion_schmidt(pi)?)
}

pub fn stack_sortable_to_restricted(sigma: &Permutation) -> Result<Permutation> {
    simion_schmidt_inverse(&minimise_weights(sigma)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simion_schmidt_thirteen_letter_example() {
        let pi: Permutation = "4 1 2 7 3 9 5 6 8 12 13 10 11".parse().unwrap();
        let sigma = simion_schmidt(&pi).unwrap();
        assert_eq!(sigma.to_string(), "4 3 2 7 6 9 8 5 1 12 13 11 10");
        assert_eq!(simion_schmidt_inverse(&sigma).unwrap(), pi);
    }

    #[test]
    fn foata_zeilberger_example() {
        let pi = Permutation::from_digits("524139768").unwrap();
        let h = foata_zeilberger(&pi);
        assert_eq!(h.to_string(), "UUHDDUTHD|0,0,2,1,0,0,0,1,0");
        assert_eq!(foata_zeilberger_inverse(&h), pi);
    }

    #[test]
    fn weight_maximisation_example() {
        let pi = Permutation::from_digits("432768951").unwrap();
        let h = foata_zeilberger(&pi);
        assert_eq!(h.path().to_string(), "UUTDTUDHD");
        let sigma = maximise_weights(&pi).unwrap();
        assert_eq!(foata_zeilberger(&sigma).weights(), [0, 1, 1, 1, 0, 1, 1, 1, 0]);
        assert_eq!(sigma, Permutation::from_digits("951432768").unwrap());
        assert_eq!(minimise_weights(&sigma).unwrap(), pi);
    }
}
