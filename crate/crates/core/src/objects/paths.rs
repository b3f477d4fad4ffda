use std::fmt;
use std::str::FromStr;

use super::trees::sort_by_text;
use crate::error::{parse_err, Error, Result};

/// A lattice step. Dyck paths and walks use only east and north steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    E,
    N,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::E => 'E',
            Step::N => 'N',
        }
    }
}

fn parse_steps(s: &str) -> Result<Vec<Step>> {
    s.chars()
        .enumerate()
        .map(|(i, c)| match c {
            'E' => Ok(Step::E),
            'N' => Ok(Step::N),
            other => Err(parse_err(i + 1, format!("expected `E` or `N`, found `{other}`"))),
        })
        .collect()
}

fn write_steps(f: &mut fmt::Formatter<'_>, steps: &[Step]) -> fmt::Result {
    for s in steps {
        write!(f, "{}", s.letter())?;
    }
    Ok(())
}

/// A Dyck path of order `n`: `n` east and `n` north steps, starting with an
/// east step, with at least as many east as north steps in every prefix.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath(Vec<Step>);

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: isize = 0;
        for (i, s) in steps.iter().enumerate() {
            height += if *s == Step::E { 1 } else { -1 };
            if height < 0 {
                return Err(Error::Domain(format!(
                    "north step {} drops below the diagonal",
                    i + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::Domain("path does not return to the diagonal".into()));
        }
        Ok(DyckPath(steps))
    }

    /// `(EN)^n`.
    pub fn zigzag(n: usize) -> DyckPath {
        DyckPath([Step::E, Step::N].repeat(n))
    }

    pub fn order(&self) -> usize {
        self.0.len() / 2
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// `g_i`: the number of north steps preceding the `i`-th east step.
    pub fn east_step_levels(&self) -> Vec<usize> {
        let mut levels = Vec::with_capacity(self.order());
        let mut norths = 0;
        for s in &self.0 {
            match s {
                Step::E => levels.push(norths),
                Step::N => norths += 1,
            }
        }
        levels
    }

    /// Rebuilds a path from the levels of its east steps; the levels must be
    /// weakly increasing with `g_i <= i - 1`.
    pub fn from_east_step_levels(levels: &[usize]) -> Result<DyckPath> {
        let n = levels.len();
        let mut steps = Vec::with_capacity(2 * n);
        let mut norths = 0;
        for (i, &g) in levels.iter().enumerate() {
            if g < norths || g > i {
                return Err(Error::Domain(format!("east-step level {g} invalid at step {}", i + 1)));
            }
            steps.extend(std::iter::repeat_n(Step::N, g - norths));
            norths = g;
            steps.push(Step::E);
        }
        steps.extend(std::iter::repeat_n(Step::N, n - norths));
        DyckPath::new(steps)
    }

    /// Whether the `i`-th east step (1-based) is the last of its platform.
    pub fn is_platform_final(&self, i: usize) -> bool {
        let levels = self.east_step_levels();
        i == levels.len() || levels[i] > levels[i - 1]
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_steps(f, &self.0)
    }
}

impl FromStr for DyckPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        DyckPath::new(parse_steps(s.trim_end())?)
    }
}

/// All Dyck paths of order `n` in lexicographic order of their text form.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    fn go(n: usize, east: usize, north: usize, cur: &mut Vec<Step>, out: &mut Vec<DyckPath>) {
        if north == n {
            out.push(DyckPath(cur.clone()));
            return;
        }
        if east < n {
            cur.push(Step::E);
            go(n, east + 1, north, cur, out);
            cur.pop();
        }
        if north < east {
            cur.push(Step::N);
            go(n, east, north + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, 0, &mut Vec::with_capacity(2 * n), &mut out);
    out
}

/// A walk of `n - 1` unit steps encoding a subset `S ⊆ [n-1]`: step `i` is
/// east exactly when `i ∈ S`. The size of the walk is `n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Walk(Vec<Step>);

impl Walk {
    pub fn new(steps: Vec<Step>) -> Walk {
        Walk(steps)
    }

    pub fn from_set(n: usize, set: &[usize]) -> Walk {
        let mut steps = vec![Step::N; n.saturating_sub(1)];
        for &i in set {
            steps[i - 1] = Step::E;
        }
        Walk(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.len() + 1
    }

    /// Positions of east steps.
    pub fn hor(&self) -> Vec<usize> {
        self.positions(Step::E)
    }

    /// Positions of north steps.
    pub fn ver(&self) -> Vec<usize> {
        self.positions(Step::N)
    }

    fn positions(&self, kind: Step) -> Vec<usize> {
        (1..=self.0.len()).filter(|&i| self.0[i - 1] == kind).collect()
    }

    fn east_count(&self) -> usize {
        self.0.iter().filter(|&&s| s == Step::E).count()
    }

    /// Whether `self` stays weakly above `other`: every prefix of `self` has
    /// at most as many east steps as the same prefix of `other`, and both
    /// end at the same point.
    pub fn weakly_above(&self, other: &Walk) -> bool {
        if self.0.len() != other.0.len() || self.east_count() != other.east_count() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for (s, t) in self.0.iter().zip(&other.0) {
            a += (*s == Step::E) as usize;
            b += (*t == Step::E) as usize;
            if a > b {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_steps(f, &self.0)
    }
}

impl FromStr for Walk {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(Walk(parse_steps(s)?))
    }
}

/// A pair of non-crossing walks with common endpoints. Text form `top/bottom`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalkPair {
    pub top: Walk,
    pub bottom: Walk,
}

impl WalkPair {
    pub fn new(top: Walk, bottom: Walk) -> Result<WalkPair> {
        if !top.weakly_above(&bottom) {
            return Err(Error::Domain(format!(
                "walk {top} is not weakly above {bottom} with a common endpoint"
            )));
        }
        Ok(WalkPair { top, bottom })
    }

    pub fn size(&self) -> usize {
        self.top.size()
    }
}

impl fmt::Display for WalkPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.top, self.bottom)
    }
}

impl FromStr for WalkPair {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim_end();
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| parse_err(s.len() + 1, "expected `top/bottom`"))?;
        let top = a.parse()?;
        let bottom = b.parse().map_err(|e| shift_column(e, a.len() + 1))?;
        WalkPair::new(top, bottom)
    }
}

fn shift_column(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { column, message } => Error::Parse {
            column: column + by,
            message,
        },
        other => other,
    }
}

/// All non-crossing walk pairs of size `n`, sorted by text form.
pub fn walk_pairs(n: usize) -> Vec<WalkPair> {
    let len = n.saturating_sub(1);
    let mut out = Vec::new();
    // diff = (#E in bottom) - (#E in top) along the way
    fn go(len: usize, diff: usize, top: &mut Vec<Step>, bottom: &mut Vec<Step>, out: &mut Vec<WalkPair>) {
        if top.len() == len {
            if diff == 0 {
                out.push(WalkPair {
                    top: Walk(top.clone()),
                    bottom: Walk(bottom.clone()),
                });
            }
            return;
        }
        for (a, b) in [(Step::E, Step::E), (Step::E, Step::N), (Step::N, Step::E), (Step::N, Step::N)] {
            let next = diff as isize + (b == Step::E) as isize - (a == Step::E) as isize;
            if next < 0 {
                continue;
            }
            top.push(a);
            bottom.push(b);
            go(len, next as usize, top, bottom, out);
            top.pop();
            bottom.pop();
        }
    }
    if n == 0 {
        return out;
    }
    go(len, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
    sort_by_text(&mut out);
    out
}

/// Three pairwise non-crossing walks, top weakly above middle weakly above
/// bottom. Text form `top/middle/bottom`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalkTriple {
    pub top: Walk,
    pub middle: Walk,
    pub bottom: Walk,
}

impl WalkTriple {
    pub fn new(top: Walk, middle: Walk, bottom: Walk) -> Result<WalkTriple> {
        if !top.weakly_above(&middle) || !middle.weakly_above(&bottom) {
            return Err(Error::Domain(format!(
                "walks {top}/{middle}/{bottom} are not nested non-crossing"
            )));
        }
        Ok(WalkTriple { top, middle, bottom })
    }
}

impl fmt::Display for WalkTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}/{}", self.top, self.middle, self.bottom)
    }
}

impl FromStr for WalkTriple {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.trim_end().split('/').collect();
        if parts.len() != 3 {
            return Err(parse_err(1, "expected `top/middle/bottom`"));
        }
        WalkTriple::new(parts[0].parse()?, parts[1].parse()?, parts[2].parse()?)
    }
}

/// Steps of a two-coloured Motzkin path; `T` is the second horizontal colour.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MotzkinStep {
    D,
    H,
    T,
    U,
}

impl MotzkinStep {
    fn letter(self) -> char {
        match self {
            MotzkinStep::U => 'U',
            MotzkinStep::D => 'D',
            MotzkinStep::H => 'H',
            MotzkinStep::T => 'T',
        }
    }

    fn rise(self) -> isize {
        match self {
            MotzkinStep::U => 1,
            MotzkinStep::D => -1,
            _ => 0,
        }
    }
}

/// A two-coloured Motzkin path: never below the axis, ends on the axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MotzkinPath(Vec<MotzkinStep>);

impl MotzkinPath {
    pub fn new(steps: Vec<MotzkinStep>) -> Result<MotzkinPath> {
        let mut h: isize = 0;
        for (i, s) in steps.iter().enumerate() {
            h += s.rise();
            if h < 0 {
                return Err(Error::Domain(format!("down step {} goes below the axis", i + 1)));
            }
        }
        if h != 0 {
            return Err(Error::Domain("path does not end on the axis".into()));
        }
        Ok(MotzkinPath(steps))
    }

    pub fn steps(&self) -> &[MotzkinStep] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `h_i`: the height at the start of step `i`, for each step.
    pub fn heights(&self) -> Vec<usize> {
        let mut h = 0isize;
        self.0
            .iter()
            .map(|s| {
                let here = h as usize;
                h += s.rise();
                here
            })
            .collect()
    }

    /// Largest admissible Laguerre weight at each step: `h_i` for up and
    /// plain level steps, `h_i - 1` for down and coloured level steps
    /// (`None` when no weight is admissible).
    pub fn weight_bounds(&self) -> Vec<Option<usize>> {
        self.0
            .iter()
            .zip(self.heights())
            .map(|(s, h)| match s {
                MotzkinStep::U | MotzkinStep::H => Some(h),
                MotzkinStep::D | MotzkinStep::T => h.checked_sub(1),
            })
            .collect()
    }
}

impl fmt::Display for MotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for MotzkinPath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim_end()
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'U' => Ok(MotzkinStep::U),
                'D' => Ok(MotzkinStep::D),
                'H' => Ok(MotzkinStep::H),
                'T' => Ok(MotzkinStep::T),
                other => Err(parse_err(i + 1, format!("expected one of U D H T, found `{other}`"))),
            })
            .collect::<Result<Vec<_>>>()?;
        MotzkinPath::new(steps)
    }
}

/// All two-coloured Motzkin paths of length `n`, lexicographic by text form.
pub fn motzkin_paths(n: usize) -> Vec<MotzkinPath> {
    fn go(n: usize, h: usize, cur: &mut Vec<MotzkinStep>, out: &mut Vec<MotzkinPath>) {
        let left = n - cur.len();
        if left == 0 {
            if h == 0 {
                out.push(MotzkinPath(cur.clone()));
            }
            return;
        }
        if h > left {
            return;
        }
        for s in [MotzkinStep::D, MotzkinStep::H, MotzkinStep::T, MotzkinStep::U] {
            if s == MotzkinStep::D && h == 0 {
                continue;
            }
            cur.push(s);
            go(n, (h as isize + s.rise()) as usize, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// A restricted Laguerre history: a two-coloured Motzkin path with weights
/// bounded by [`MotzkinPath::weight_bounds`]. Text form `path|w1,w2,...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaguerreHistory {
    path: MotzkinPath,
    weights: Vec<usize>,
}

impl LaguerreHistory {
    pub fn new(path: MotzkinPath, weights: Vec<usize>) -> Result<LaguerreHistory> {
        if weights.len() != path.len() {
            return Err(Error::Domain(format!(
                "{} weights for a path of length {}",
                weights.len(),
                path.len()
            )));
        }
        for (i, (&w, bound)) in weights.iter().zip(path.weight_bounds()).enumerate() {
            match bound {
                Some(b) if w <= b => {}
                _ => {
                    return Err(Error::WeightBound {
                        step: i + 1,
                        weight: w,
                        bound: bound.unwrap_or(0),
                    })
                }
            }
        }
        Ok(LaguerreHistory { path, weights })
    }

    pub fn path(&self) -> &MotzkinPath {
        &self.path
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.path.len()
    }

    pub fn is_empty(&self) -> bool {
        self.path.is_empty()
    }
}

impl fmt::Display for LaguerreHistory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|", self.path)?;
        for (i, w) in self.weights.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        Ok(())
    }
}

impl FromStr for LaguerreHistory {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim_end();
        let (p, w) = s
            .split_once('|')
            .ok_or_else(|| parse_err(s.len() + 1, "expected `path|weights`"))?;
        let path: MotzkinPath = p.parse()?;
        let mut weights = Vec::new();
        let mut column = p.len() + 2;
        if !w.is_empty() {
            for tok in w.split(',') {
                weights.push(
                    tok.parse::<usize>()
                        .map_err(|_| parse_err(column, format!("bad weight `{tok}`")))?,
                );
                column += tok.len() + 1;
            }
        }
        LaguerreHistory::new(path, weights)
    }
}

/// All restricted Laguerre histories of length `n`; there are `n!` of them.
pub fn laguerre_histories(n: usize) -> Vec<LaguerreHistory> {
    let mut out = Vec::new();
    for path in motzkin_paths(n) {
        let bounds: Option<Vec<usize>> = path.weight_bounds().into_iter().collect();
        let Some(bounds) = bounds else { continue };
        let mut w = vec![0; n];
        loop {
            out.push(LaguerreHistory {
                path: path.clone(),
                weights: w.clone(),
            });
            // odometer, last position fastest
            let mut i = n;
            loop {
                if i == 0 {
                    break;
                }
                i -= 1;
                if w[i] < bounds[i] {
                    w[i] += 1;
                    break;
                }
                w[i] = 0;
            }
            if w.iter().all(|&x| x == 0) {
                break;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyck_levels_round_trip() {
        for n in 0..=6 {
            let paths = dyck_paths(n);
            assert!(paths.windows(2).all(|w| w[0].to_string() < w[1].to_string()));
            for d in paths {
                let back = DyckPath::from_east_step_levels(&d.east_step_levels()).unwrap();
                assert_eq!(back, d);
                assert_eq!(d.to_string().parse::<DyckPath>().unwrap(), d);
            }
        }
        assert!("NE".parse::<DyckPath>().is_err());
    }

    #[test]
    fn walk_pair_counts_are_catalan() {
        let counts: Vec<usize> = (1..=8).map(|n| walk_pairs(n).len()).collect();
        assert_eq!(counts, [1, 2, 5, 14, 42, 132, 429, 1430]);
        let wp: WalkPair = "NEENNENE/NEENENEN".parse().unwrap();
        assert_eq!(wp.to_string(), "NEENNENE/NEENENEN");
        assert!("E/N".parse::<WalkPair>().is_err());
    }

    #[test]
    fn laguerre_counts_are_factorials() {
        let counts: Vec<usize> = (0..=7).map(|n| laguerre_histories(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 24, 120, 720, 5040]);
    }

    #[test]
    fn laguerre_text_round_trip() {
        let h: LaguerreHistory = "UUHDDUTHD|0,0,2,1,0,0,0,1,0".parse().unwrap();
        assert_eq!(h.to_string(), "UUHDDUTHD|0,0,2,1,0,0,0,1,0");
        assert!(matches!(
            "UD|0,1".parse::<LaguerreHistory>(),
            Err(Error::WeightBound { step: 2, .. })
        ));
    }

    #[test]
    fn motzkin_weight_bounds() {
        let m: MotzkinPath = "UUTDTUDHD".parse().unwrap();
        assert_eq!(m.heights(), [0, 1, 2, 2, 1, 1, 2, 1, 1]);
    }
}
