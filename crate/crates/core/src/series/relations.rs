//! Polynomial relations loaded from `data/relations.toml`.
//!
//! Each coefficient is stored twice: `src` is the formula as typeset in the
//! literature and `exp` its full expansion in canonical monomial order. The
//! file-level checksum covers every expansion, so a stray edit shows up even
//! when the source line still looks plausible.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use super::expr::parse_tpoly;
use crate::error::{Error, Result};
use crate::poly::TPoly;

const RELATIONS_TOML: &str = include_str!("../../data/relations.toml");

#[cfg(test)]
const HEADER: &str = "\
# Polynomial relations sum_k coef_k * U^k = 0 satisfied by generating functions.
# `src` transcribes each coefficient as published, except in readings flagged
# `correction`, which are candidate repairs. `exp` is the expansion in
# canonical order (increasing t-degree, then decreasing total degree in x, y,
# then decreasing x-degree). `checksum` is the SHA-256 of the lines
# `id|reading|power|exp` over all coefficients in file order.
# Regenerate the expansions with REGENERATE_RELATIONS=1 cargo test -p catalan-parity relations.
";

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RelationFile {
    checksum: String,
    relation: Vec<RelationEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RelationEntry {
    id: String,
    reading: String,
    unknown: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    correction: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    coef: Vec<CoefEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CoefEntry {
    power: u32,
    src: String,
    exp: String,
}

/// `Σ_k coeffs[k] · U^k = 0` for the named unknown series `U`.
#[derive(Debug, Clone)]
pub struct Relation {
    pub id: String,
    pub reading: String,
    pub unknown: String,
    /// Set for candidate repairs found by residual search; such a reading is
    /// never a transcription of the published relation.
    pub correction: bool,
    /// `(power, coefficient)` pairs, highest power first.
    pub coeffs: Vec<(u32, TPoly)>,
}

fn checksum(file: &RelationFile) -> String {
    let mut hasher = Sha256::new();
    for r in &file.relation {
        for c in &r.coef {
            hasher.update(format!("{}|{}|{}|{}\n", r.id, r.reading, c.power, c.exp));
        }
    }
    hasher
        .finalize()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

fn parse_file(text: &str) -> Result<RelationFile> {
    toml::from_str(text).map_err(|e| Error::Data(e.to_string()))
}

fn coef_poly(entry: &RelationEntry, c: &CoefEntry, field: &str, text: &str) -> Result<TPoly> {
    parse_tpoly(text).map_err(|e| {
        Error::Data(format!(
            "{} ({}) coefficient {} `{field}`: {e}",
            entry.id, entry.reading, c.power
        ))
    })
}

/// All relations, with expansions checked against the stored checksum.
/// Readings that list only some coefficients inherit the others from the
/// `literal` reading of the same relation.
pub fn relations() -> Result<Vec<Relation>> {
    load(RELATIONS_TOML)
}

fn load(text: &str) -> Result<Vec<Relation>> {
    let file = parse_file(text)?;
    let digest = checksum(&file);
    if digest != file.checksum {
        return Err(Error::Data(format!(
            "checksum mismatch: file says {}, expansions hash to {digest}",
            file.checksum
        )));
    }
    let mut out: Vec<Relation> = Vec::new();
    for entry in &file.relation {
        let mut coeffs = entry
            .coef
            .iter()
            .map(|c| Ok((c.power, coef_poly(entry, c, "exp", &c.exp)?)))
            .collect::<Result<Vec<_>>>()?;
        if let Some(base) = out.iter().find(|r| r.id == entry.id && r.reading == "literal") {
            for (p, poly) in &base.coeffs {
                if !coeffs.iter().any(|(q, _)| q == p) {
                    coeffs.push((*p, poly.clone()));
                }
            }
        }
        coeffs.sort_by_key(|c| std::cmp::Reverse(c.0));
        if coeffs.iter().rev().enumerate().any(|(i, (p, _))| *p as usize != i) {
            return Err(Error::Data(format!("{} ({}) skips a power", entry.id, entry.reading)));
        }
        out.push(Relation {
            id: entry.id.clone(),
            reading: entry.reading.clone(),
            unknown: entry.unknown.clone(),
            correction: entry.correction,
            coeffs,
        });
    }
    Ok(out)
}

pub fn relation(id: &str, reading: &str) -> Result<Relation> {
    relations()?
        .into_iter()
        .find(|r| r.id == id && r.reading == reading)
        .ok_or_else(|| Error::Unknown {
            kind: "relation",
            name: format!("{id} ({reading})"),
        })
}

/// Readings available for a relation, in file order.
pub fn readings(id: &str) -> Result<Vec<String>> {
    Ok(relations()?
        .into_iter()
        .filter(|r| r.id == id)
        .map(|r| r.reading)
        .collect())
}

#[cfg(test)]
/// Recomputes every `exp` field and the checksum from the `src` fields.
fn regenerate(text: &str) -> Result<String> {
    let mut file = parse_file(text)?;
    for entry in &mut file.relation {
        let snapshot = entry.clone();
        for c in &mut entry.coef {
            c.exp = coef_poly(&snapshot, c, "src", &c.src)?.to_string();
        }
    }
    file.checksum = checksum(&file);
    let body = toml::to_string(&file).map_err(|e| Error::Data(e.to_string()))?;
    Ok(format!("{HEADER}\n{body}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn relations_data_is_current() {
        let fresh = regenerate(RELATIONS_TOML).unwrap();
        if std::env::var_os("REGENERATE_RELATIONS").is_some() {
            let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/relations.toml");
            std::fs::write(path, &fresh).unwrap();
            return;
        }
        assert!(fresh == RELATIONS_TOML, "expansions or checksum are stale");
    }

    #[test]
    fn loads_every_reading() {
        let rels = relations().unwrap();
        assert_eq!(readings("descent-quadratic").unwrap(), ["2t^2x", "2tx"]);
        let gf2 = rels.iter().filter(|r| r.id == "left-peak-sextic").count();
        assert_eq!(gf2, 3);
        for r in &rels {
            let powers: Vec<u32> = r.coeffs.iter().map(|c| c.0).collect();
            let top = powers[0];
            assert_eq!(powers, (0..=top).rev().collect::<Vec<_>>(), "{} {}", r.id, r.reading);
        }
    }

    #[test]
    fn tampering_is_detected() {
        let tampered = RELATIONS_TOML.replacen("exp = \"", "exp = \"1 + ", 1);
        assert!(matches!(load(&tampered), Err(Error::Data(_))));
    }
}
