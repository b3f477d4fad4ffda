//! Truncated power series in `t` over Laurent polynomials in `x`, `y`, the
//! distribution series built by enumeration, and the identities among them.

mod enumerate;
mod expr;
mod identities;
mod relations;
mod truncated;

pub use enumerate::{DistributionTable, DyckParts, PeakParts, SeriesLab, TableRow, DEFAULT_MAX_ORDER};
pub use expr::parse_tpoly;
pub use identities::{check_identity, compare, evaluate, FirstFailure, Identity, IdentityReport, Residual};
pub use relations::{readings, relation, relations, Relation};
pub use truncated::TruncatedSeries;
