//! Named checks producing deterministic reports.
//!
//! Exhaustive checks enumerate every object of each size `1..=n`; series
//! checks compare truncated generating functions up to a fixed order. Bounds
//! come from a small TOML file embedded in the crate, which can be replaced
//! at run time through [`CONFIG_ENV`].

mod checks;

use std::collections::BTreeMap;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::objects::catalan;
use crate::poly::LaurentPoly2;
use crate::series::{check_identity, compare, FirstFailure, Identity, Residual, SeriesLab, TruncatedSeries};

/// Environment variable naming a replacement for the embedded bounds file.
pub const CONFIG_ENV: &str = "CATPARITY_CONFIG";

const DEFAULT_CONFIG: &str = include_str!("../../data/verify.toml");

/// Largest sizes and series order the suite will run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub max_order: usize,
    pub max_n: BTreeMap<String, usize>,
}

impl Config {
    pub fn embedded() -> Config {
        Config::from_toml(DEFAULT_CONFIG).expect("embedded bounds file is valid")
    }

    /// Parses a bounds file; every exhaustive check needs an entry.
    pub fn from_toml(text: &str) -> Result<Config> {
        let config: Config = toml::from_str(text).map_err(|e| Error::Data(format!("bounds file: {e}")))?;
        for check in registry() {
            if matches!(check.kind, Kind::Sizes(_)) && !config.max_n.contains_key(check.name) {
                return Err(Error::Data(format!("bounds file has no max_n for `{}`", check.name)));
            }
        }
        if let Some(name) = config.max_n.keys().find(|k| find(k).is_none()) {
            return Err(Error::Data(format!("bounds file names unknown check `{name}`")));
        }
        Ok(config)
    }

    /// The file named by [`CONFIG_ENV`] if set, else the embedded defaults.
    pub fn load() -> Result<Config> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Data(format!("{}: {e}", path.to_string_lossy())))?;
                Config::from_toml(&text)
            }
            None => Ok(Config::embedded()),
        }
    }

    fn max_n(&self, check: &str) -> usize {
        self.max_n[check]
    }
}

/// Requested size or order; `None` means the configured bound.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Params {
    pub n: Option<usize>,
    pub order: Option<usize>,
}

/// Result of one check. `pass` is false exactly when a counterexample or a
/// first failing coefficient is present. Everything but `wall_time_ms` is a
/// function of the check and its parameters.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    pub pass: bool,
    /// Which reading of an ambiguous or repaired statement the verdict refers to.
    pub reading: Option<String>,
    pub counterexample: Option<Value>,
    pub first_failure: Option<FirstFailure>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<Value>,
    pub wall_time_ms: u64,
}

impl VerificationReport {
    /// The report as JSON without the timing field.
    pub fn payload(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("reports serialize");
        v.as_object_mut().expect("object").remove("wall_time_ms");
        v
    }
}

/// What a check function returns before parameters and timing are attached.
#[derive(Clone, Debug, Default)]
pub(crate) struct Outcome {
    pass: bool,
    reading: Option<String>,
    counterexample: Option<Value>,
    first_failure: Option<FirstFailure>,
    notes: Vec<String>,
    details: Option<Value>,
}

impl Outcome {
    fn pass() -> Outcome {
        Outcome {
            pass: true,
            ..Outcome::default()
        }
    }

    fn counterexample(v: Value) -> Outcome {
        Outcome {
            counterexample: Some(v),
            ..Outcome::default()
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Outcome {
        self.notes.push(note.into());
        self
    }

    fn with_reading(mut self, reading: impl Into<String>) -> Outcome {
        self.reading = Some(reading.into());
        self
    }

    fn from_residuals(residuals: Vec<Residual>) -> Outcome {
        let first_failure = residuals.iter().find_map(|r| r.first_failure.clone());
        Outcome {
            pass: residuals.iter().all(|r| r.pass),
            first_failure,
            details: Some(json!({ "residuals": residuals })),
            ..Outcome::default()
        }
    }
}

#[derive(Clone, Copy)]
enum Kind {
    Sizes(fn(usize) -> Outcome),
    Series(fn(&SeriesLab) -> Result<Outcome>),
    Identity(Identity),
}

/// A registered check.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub summary: &'static str,
    kind: Kind,
}

impl Check {
    /// Whether the check is parameterised by a series order rather than a size.
    pub fn uses_order(&self) -> bool {
        !matches!(self.kind, Kind::Sizes(_))
    }
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name)
    }
}

const fn sizes(name: &'static str, summary: &'static str, f: fn(usize) -> Outcome) -> Check {
    Check {
        name,
        summary,
        kind: Kind::Sizes(f),
    }
}

const fn series(name: &'static str, summary: &'static str, f: fn(&SeriesLab) -> Result<Outcome>) -> Check {
    Check {
        name,
        summary,
        kind: Kind::Series(f),
    }
}

const fn identity(id: Identity, summary: &'static str) -> Check {
    Check {
        name: id.name(),
        summary,
        kind: Kind::Identity(id),
    }
}

static REGISTRY: [Check; 34] = [
    sizes("catalan-counts", "every pattern of length 3 is avoided by C_n permutations", checks::catalan_counts),
    sizes("mnd-distribution", "non-overlapping descents on 231-avoiders follow the refined Catalan numbers", checks::mnd_distribution),
    sizes("mna-mnd-symmetry", "joint (mna, mnd) on 231-avoiders is symmetric", checks::mna_mnd_symmetry),
    sizes("tree-runs", "231-avoiders to binary trees: round trip, (DR, AR of inverse) = (LC, RC), Catalan-Schett", checks::tree_runs),
    sizes("tree-arms", "initial runs become the arms of the binary tree", checks::tree_arms),
    sizes("plane-tree-marks", "plane trees to 231-avoiders: bijection with mark = mnd", checks::plane_tree_marks),
    sizes("plane-tree-parity", "root has a leaf child iff the initial descending run is odd", checks::plane_tree_parity),
    sizes("walk-pair-descents", "231-avoiders to walk pairs: (DES, ASC of inverse) = (bottom E, top N)", checks::walk_pair_descents),
    sizes("tree-platforms", "binary trees to Dyck paths: round trip, LC = platforms", checks::tree_platforms),
    sizes("descent-bottoms", "descent bottoms of the inverse equal descents on 231-avoiders", checks::descent_bottoms_check),
    sizes("restricted-platforms", "321-avoiders to Dyck paths: round trip, non-excedances and descents read off platforms", checks::restricted_platforms),
    sizes("excedance-walks", "321-avoiders to walk pairs: (EXC, shifted WEXC of inverse) = (bottom E, top N)", checks::excedance_walks),
    sizes("left-peak-transport", "321-avoiders to 231-avoiders preserving left peaks, stepwise and composed", checks::left_peak_transport),
    sizes("lpk-equidistribution", "left peak parities agree on 321- and 231-avoiders", checks::lpk_equidistribution),
    sizes("mnd-mne-equidistribution", "mnd on 231-avoiders matches mne on 321-avoiders", checks::mnd_mne_equidistribution),
    sizes("joint-parity-equidistribution", "(mnd, mna of inverse) matches (mne, mnw of inverse)", checks::joint_parity_equidistribution),
    sizes("laguerre-roundtrip", "permutations to restricted Laguerre histories: bijection on all of S_n", checks::laguerre_roundtrip),
    sizes("baxter-walks", "Baxter permutations have distinct walk triples", checks::baxter_walks),
    sizes("walk-transfer", "walk-pair transfer sends (DES, DES of inverse) to (DES, shifted descent tops of inverse)", checks::walk_transfer),
    sizes("left-peaks-descents", "left peaks of 321-avoiders against their descents", checks::left_peaks_descents),
    sizes("schett-routes", "Catalan-Schett polynomials agree across trees, 231- and 321-avoiders", checks::schett_routes),
    sizes("schett-classical", "classical Schett polynomials sum to n! and are symmetric", checks::schett_classical),
    series("series-routes", "enumerated series agree across routes and specialise to Catalan numbers", series_routes),
    series("mna-table", "mna distribution on 321-avoiders read off G(t, x, 1)", mna_table),
    identity(Identity::MixedParitySymmetry, "EO = OE"),
    identity(Identity::EvenEven, "functional equation for EE"),
    identity(Identity::EvenOdd, "functional equation for EO"),
    identity(Identity::OddOdd, "functional equation for OO"),
    identity(Identity::ParitySum, "G = EE + 2 EO + OO"),
    identity(Identity::LeftPeakSystem, "the left peak system for M, LE, LO, E, O and swapped companions"),
    identity(Identity::RunsQuartic, "quartic relation for G"),
    identity(Identity::OddRunsQuartic, "quartic relation for G(t, x, 1)"),
    identity(Identity::LeftPeakSextic, "sextic relation for M"),
    identity(Identity::DescentQuadratic, "quadratic relation for the descent series of 321-avoiders"),
];

pub fn registry() -> &'static [Check] {
    &REGISTRY
}

pub fn find(name: &str) -> Option<&'static Check> {
    REGISTRY.iter().find(|c| c.name == name)
}

/// The series with `x = y = 1`.
fn at_one(s: &TruncatedSeries) -> TruncatedSeries {
    let coeffs = s.coeffs().iter().map(|c| LaurentPoly2::constant(c.sum_of_coefficients())).collect();
    TruncatedSeries::from_coeffs(coeffs, s.order())
}

fn series_routes(lab: &SeriesLab) -> Result<Outcome> {
    let g = lab.g_restricted();
    let parts = lab.dyck_parts();
    let m = lab.m_stack_sortable();
    let catalan_numbers = (0..=lab.order())
        .map(|n| match n {
            0 => LaurentPoly2::zero(),
            _ => LaurentPoly2::constant(BigInt::from(catalan(n as u64))),
        })
        .collect();
    let catalan_series = TruncatedSeries::from_coeffs(catalan_numbers, lab.order());
    let sum = &parts.ee + &parts.eo + &parts.oe + &parts.oo;
    Ok(Outcome::from_residuals(vec![
        compare("G over 321-avoiders = G over Dyck paths", &g, &lab.g_dyck()),
        compare("EE + EO + OE + OO = G", &sum, &g),
        compare("M over 231-avoiders = M over 321-avoiders", &m, &lab.m_restricted()),
        compare("G(t, 1, 1) = Catalan", &at_one(&g), &catalan_series),
        compare("M(t, 1, 1) = Catalan", &at_one(&m), &catalan_series),
    ]))
}

fn mna_table(lab: &SeriesLab) -> Result<Outcome> {
    let derived = lab.mna_table_from_series()?;
    let enumerated = lab.mna_table_enumerated();
    let details = Some(json!({ "table": derived }));
    if let Some((d, e)) = derived.rows.iter().zip(&enumerated.rows).find(|(d, e)| d != e) {
        return Ok(Outcome {
            counterexample: Some(json!({ "n": d.n, "from_series": d.counts, "enumerated": e.counts })),
            details,
            ..Outcome::default()
        });
    }
    for row in &derived.rows {
        let total = catalan(row.n as u64);
        if BigUint::from(row.total()) != total {
            return Ok(Outcome {
                counterexample: Some(json!({ "n": row.n, "row_sum": row.total(), "expected": total.to_string() })),
                details,
                ..Outcome::default()
            });
        }
    }
    Ok(Outcome {
        pass: true,
        details,
        ..Outcome::default()
    })
}

fn identity_outcome(id: Identity, lab: &SeriesLab) -> Result<Outcome> {
    let r = check_identity(id, lab)?;
    Ok(Outcome {
        pass: r.pass,
        reading: r.reading,
        counterexample: None,
        first_failure: if r.pass { None } else { r.first_failure },
        notes: r.notes,
        details: Some(json!({ "residuals": r.residuals })),
    })
}

/// Runs one check. A requested size or order above the configured bound is
/// an error rather than a silent clamp.
pub fn run(check: &Check, params: Params, config: &Config) -> Result<VerificationReport> {
    let start = Instant::now();
    let (n, order, outcome) = match check.kind {
        Kind::Sizes(f) => {
            let bound = config.max_n(check.name);
            let n = params.n.unwrap_or(bound);
            if n > bound {
                return Err(Error::BoundExceeded {
                    what: "size",
                    requested: n,
                    bound,
                });
            }
            (Some(n), None, f(n))
        }
        Kind::Series(_) | Kind::Identity(_) => {
            let order = params.order.unwrap_or(config.max_order);
            let lab = SeriesLab::new(order, config.max_order)?;
            let outcome = match check.kind {
                Kind::Series(f) => f(&lab)?,
                Kind::Identity(id) => identity_outcome(id, &lab)?,
                Kind::Sizes(_) => unreachable!(),
            };
            (None, Some(order), outcome)
        }
    };
    Ok(VerificationReport {
        check: check.name.to_string(),
        n,
        order,
        pass: outcome.pass,
        reading: outcome.reading,
        counterexample: outcome.counterexample,
        first_failure: outcome.first_failure,
        notes: outcome.notes,
        details: outcome.details,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

pub fn run_named(name: &str, params: Params, config: &Config) -> Result<VerificationReport> {
    let check = find(name).ok_or_else(|| Error::Unknown {
        kind: "check",
        name: name.to_string(),
    })?;
    run(check, params, config)
}

/// Runs every check in parallel, clamping the requested size and order to
/// each check's bound. Reports come back in registry order.
pub fn run_all(params: Params, config: &Config) -> Result<Vec<VerificationReport>> {
    REGISTRY
        .par_iter()
        .map(|check| {
            let clamped = Params {
                n: params.n.map(|n| n.min(config.max_n.get(check.name).copied().unwrap_or(n))),
                order: params.order.map(|o| o.min(config.max_order)),
            };
            run(check, clamped, config)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique_and_configured() {
        let config = Config::embedded();
        let mut names: Vec<&str> = registry().iter().map(|c| c.name).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), registry().len());
        assert_eq!(config.max_order, 12);
    }

    #[test]
    fn bounds_are_enforced() {
        let config = Config::embedded();
        let err = run_named("catalan-counts", Params { n: Some(11), order: None }, &config).unwrap_err();
        assert!(matches!(err, Error::BoundExceeded { requested: 11, bound: 10, .. }));
        assert!(matches!(run_named("nope", Params::default(), &config), Err(Error::Unknown { .. })));
    }

    #[test]
    fn bad_bounds_files_are_rejected() {
        assert!(Config::from_toml("max_order = 12\n[max_n]\ncatalan-counts = 3\n").is_err());
        let extra = format!("{DEFAULT_CONFIG}\nno-such-check = 2\n");
        assert!(Config::from_toml(&extra).is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let config = Config::embedded();
        let params = Params { n: Some(5), order: None };
        let a = run_named("left-peaks-descents", params, &config).unwrap();
        let b = run_named("left-peaks-descents", params, &config).unwrap();
        assert_eq!(a.payload(), b.payload());
        assert!(a.pass && a.counterexample.is_none());
        assert_eq!(a.reading.as_deref(), Some("left peak values equal descent top values"));
    }
}
