//! Baxter permutations as triples of non-crossing walks.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::objects::{avoiders, baxter_permutations, is_baxter, Pattern, Permutation, Walk, WalkPair, WalkTriple};
use crate::statistics::{descent_bottoms, descent_set, shifted_descent_tops};

use super::binary::stack_sortable_to_walk_pair;

/// `π ↦ (shifted descent tops of π⁻¹, DES(π), descent bottoms of π⁻¹)`,
/// read as top, middle and bottom walks.
pub fn baxter_to_walk_triple(pi: &Permutation) -> Result<WalkTriple> {
    if !is_baxter(pi) {
        let pattern = if Pattern::Baxter2413.avoided_by(pi) {
            Pattern::Baxter3142
        } else {
            Pattern::Baxter2413
        };
        return Err(Error::PatternViolation {
            input: pi.to_string(),
            positions: pattern.find_occurrence(pi).unwrap_or_default(),
            pattern: pattern.to_string(),
        });
    }
    let n = pi.len();
    let inv = pi.inverse();
    WalkTriple::new(
        Walk::from_set(n, &shifted_descent_tops(&inv)),
        Walk::from_set(n, &descent_set(pi)),
        Walk::from_set(n, &descent_bottoms(&inv)),
    )
}

/// Lookup table inverting [`baxter_to_walk_triple`] on Baxter permutations
/// of one size.
pub struct BaxterTable {
    n: usize,
    by_triple: HashMap<WalkTriple, Permutation>,
}

impl BaxterTable {
    pub fn new(n: usize) -> Result<BaxterTable> {
        let mut by_triple = HashMap::new();
        for pi in baxter_permutations(n) {
            let triple = baxter_to_walk_triple(&pi)?;
            if let Some(prev) = by_triple.insert(triple.clone(), pi.clone()) {
                return Err(Error::Internal(format!("{prev} and {pi} share the triple {triple}")));
            }
        }
        Ok(BaxterTable { n, by_triple })
    }

    pub fn len(&self) -> usize {
        self.by_triple.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_triple.is_empty()
    }

    pub fn lookup(&self, triple: &WalkTriple) -> Result<&Permutation> {
        if triple.middle.size() != self.n {
            return Err(Error::Domain(format!("triple {triple} has size {}, table has {}", triple.middle.size(), self.n)));
        }
        self.by_triple
            .get(triple)
            .ok_or_else(|| Error::Domain(format!("{triple} is not the triple of a Baxter permutation")))
    }
}

/// `Γ⁻¹ ∘ Θ` on 231-avoiders of one size. Among 231-avoiders the bottom and
/// middle walks coincide, so the walk pair of `p` names a unique `σ` with
/// `(DES(p), DES(p⁻¹)) = (DES(σ), shifted descent tops of σ⁻¹)`.
pub struct WalkPairTransfer {
    by_pair: HashMap<WalkPair, Permutation>,
}

impl WalkPairTransfer {
    pub fn new(n: usize) -> Result<WalkPairTransfer> {
        let mut by_pair = HashMap::new();
        for sigma in avoiders(n, Pattern::P231) {
            let triple = baxter_to_walk_triple(&sigma)?;
            let pair = WalkPair::new(triple.top, triple.middle)?;
            if by_pair.insert(pair.clone(), sigma).is_some() {
                return Err(Error::Internal(format!("walk pair {pair} hit twice")));
            }
        }
        Ok(WalkPairTransfer { by_pair })
    }

    pub fn apply(&self, p: &Permutation) -> Result<Permutation> {
        let pair = stack_sortable_to_walk_pair(p)?;
        self.by_pair
            .get(&pair)
            .cloned()
            .ok_or_else(|| Error::Internal(format!("walk pair {pair} of {p} has no preimage")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triple_of_312() {
        let t = baxter_to_walk_triple(&Permutation::from_digits("312").unwrap()).unwrap();
        assert_eq!(t.to_string(), "NE/EN/EN");
    }

    #[test]
    fn rejects_non_baxter() {
        assert!(baxter_to_walk_triple(&Permutation::from_digits("2413").unwrap()).is_err());
    }
}
