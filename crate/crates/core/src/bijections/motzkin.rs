//! 321-avoiders to two-coloured Motzkin paths and on to walk pairs.

use crate::error::{Error, Result};
use crate::objects::{require_avoids, MotzkinPath, MotzkinStep, Pattern, Permutation, Step, Walk, WalkPair};

/// Excedance-value indicators `v_i = [i > π⁻¹_i]` and excedance-position
/// indicators `p_i = [π_i > i]`, both indexed from 1.
pub fn value_position_indicators(pi: &Permutation) -> (Vec<bool>, Vec<bool>) {
    let inv = pi.inverse();
    let val = (1..=pi.len()).map(|i| i > inv.at(i)).collect();
    let pos = (1..=pi.len()).map(|i| pi.at(i) > i).collect();
    (val, pos)
}

/// Step `i` (for `i < n`) is read off `(v_{i+1}, p_i)`: `(0,1)` up,
/// `(1,1)` coloured level, `(1,0)` down, `(0,0)` plain level.
pub fn lin_fu(pi: &Permutation) -> Result<MotzkinPath> {
    require_avoids(pi, Pattern::P321)?;
    let (val, pos) = value_position_indicators(pi);
    let n = pi.len();
    let steps = (1..n)
        .map(|i| match (val[i], pos[i - 1]) {
            (false, true) => MotzkinStep::U,
            (true, true) => MotzkinStep::T,
            (true, false) => MotzkinStep::D,
            (false, false) => MotzkinStep::H,
        })
        .collect();
    MotzkinPath::new(steps)
}

/// Inverse of [`lin_fu`]: excedance values go to excedance positions in
/// increasing order, the other values to the other positions likewise.
pub fn lin_fu_inverse(m: &MotzkinPath) -> Result<Permutation> {
    let n = m.len() + 1;
    let mut exc_pos = Vec::new();
    let mut exc_val = Vec::new();
    for (k, s) in m.steps().iter().enumerate() {
        let i = k + 1;
        if matches!(s, MotzkinStep::U | MotzkinStep::T) {
            exc_pos.push(i);
        }
        if matches!(s, MotzkinStep::D | MotzkinStep::T) {
            exc_val.push(i + 1);
        }
    }
    let mut word = vec![0; n];
    for (&i, &v) in exc_pos.iter().zip(&exc_val) {
        word[i - 1] = v;
    }
    let mut free = (1..=n).filter(|v| !exc_val.contains(v));
    for slot in word.iter_mut().filter(|v| **v == 0) {
        *slot = free.next().ok_or_else(|| Error::Internal("value pool exhausted".into()))?;
    }
    let pi = Permutation::new(word)?;
    if lin_fu(&pi)? != *m {
        return Err(Error::Internal(format!("{m} does not round-trip through {pi}")));
    }
    Ok(pi)
}

/// Splits each Motzkin step into a step of the top and the bottom walk:
/// up `(N, E)`, down `(E, N)`, plain level `(N, N)`, coloured level `(E, E)`.
pub fn motzkin_to_walk_pair(m: &MotzkinPath) -> WalkPair {
    let (top, bottom) = m
        .steps()
        .iter()
        .map(|s| match s {
            MotzkinStep::U => (Step::N, Step::E),
            MotzkinStep::D => (Step::E, Step::N),
            MotzkinStep::H => (Step::N, Step::N),
            MotzkinStep::T => (Step::E, Step::E),
        })
        .unzip();
    WalkPair {
        top: Walk::new(top),
        bottom: Walk::new(bottom),
    }
}

pub fn walk_pair_to_motzkin(wp: &WalkPair) -> Result<MotzkinPath> {
    let steps = wp
        .top
        .steps()
        .iter()
        .zip(wp.bottom.steps())
        .map(|pair| match pair {
            (Step::N, Step::E) => MotzkinStep::U,
            (Step::E, Step::N) => MotzkinStep::D,
            (Step::N, Step::N) => MotzkinStep::H,
            (Step::E, Step::E) => MotzkinStep::T,
        })
        .collect();
    MotzkinPath::new(steps)
}

/// 321-avoiders to walk pairs, sending `(EXC(π), shifted WEXC(π⁻¹))` to
/// (east steps of the bottom walk, north steps of the top walk).
pub fn restricted_to_walk_pair(pi: &Permutation) -> Result<WalkPair> {
    Ok(motzkin_to_walk_pair(&lin_fu(pi)?))
}

pub fn walk_pair_to_restricted(wp: &WalkPair) -> Result<Permutation> {
    lin_fu_inverse(&walk_pair_to_motzkin(wp)?)
}
