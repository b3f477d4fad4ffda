//! Parity statistics on pattern-avoiding permutations and Catalan objects.
//!
//! The crate is organised bottom-up:
//!
//! * [`objects`]: permutations, trees, lattice paths and their generators;
//! * [`statistics`]: run multisets, peaks, excedances, tree chains, platforms;
//! * [`bijections`]: the maps between those families, each with its inverse;
//! * [`schett`]: the Catalan analogue of the Schett polynomials, three ways;
//! * [`series`]: exact truncated power series and the identity checks;
//! * [`verify`]: a registry of named checks producing deterministic reports.

pub mod bijections;
pub mod error;
pub mod objects;
pub mod poly;
pub mod schett;
pub mod series;
pub mod statistics;
pub mod verify;

pub use error::{Error, Result};
