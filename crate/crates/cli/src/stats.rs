//! Statistic records for a single object read from a line of text.

use catalan_parity::objects::{is_baxter, BinaryTree, DyckPath, Pattern, Permutation, PlaneTree};
use catalan_parity::statistics::{
    ascent_set, descent_bottoms, descent_set, descent_tops, dyck_profile, excedance_profile, iar, idr,
    mark_count, mna, mnd, peak_profile, run_profile, tree_chain_profile,
};
use catalan_parity::{Error, Result};
use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Perm,
    Btree,
    Ptree,
    Dyck,
}

/// Guesses the family from the first character: digits for permutations,
/// `E`/`N` for Dyck paths, and for parenthesised text the presence of `.`
/// (binary trees print empty subtrees as dots).
pub fn detect(line: &str) -> Kind {
    let t = line.trim();
    match t.chars().next() {
        Some('E' | 'N') => Kind::Dyck,
        Some('(' | '.') if t.contains('.') => Kind::Btree,
        Some('(') => Kind::Ptree,
        _ => Kind::Perm,
    }
}

pub fn record(line: &str, kind: Kind) -> Result<Value> {
    let line = line.trim_end_matches(['\n', '\r']);
    match kind {
        Kind::Perm => Ok(permutation_record(&line.parse()?)),
        Kind::Btree => Ok(binary_tree_record(&line.parse()?)),
        Kind::Ptree => Ok(plane_tree_record(&line.parse()?)),
        Kind::Dyck => dyck_record(&line.parse()?),
    }
}

fn permutation_record(p: &Permutation) -> Value {
    let runs = run_profile(p);
    let peaks = peak_profile(p);
    let exc = excedance_profile(p);
    let inv = p.inverse();
    let mut lpk = peaks.lpk.clone();
    lpk.sort_unstable();
    let avoids: Vec<String> = Pattern::classical_patterns()
        .into_iter()
        .filter(|pat| pat.avoided_by(p))
        .map(|pat| pat.to_string())
        .collect();
    let mut out = Map::new();
    let mut put = |k: &str, v: Value| {
        out.insert(k.to_string(), v);
    };
    put("n", json!(p.len()));
    put("DES", json!(descent_set(p)));
    put("ASC", json!(ascent_set(p)));
    put("DR", json!(runs.dr));
    put("AR", json!(runs.ar));
    put("odr", json!(runs.odr));
    put("edr", json!(runs.edr));
    put("oar", json!(runs.oar));
    put("ear", json!(runs.ear));
    put("mnd", json!(mnd(p)));
    put("mna", json!(mna(p)));
    if let (Ok(d), Ok(a)) = (idr(p), iar(p)) {
        put("idr", json!(d));
        put("iar", json!(a));
    }
    put("LPK", json!(lpk));
    put("lpk_o", json!(peaks.lpk_o));
    put("lpk_e", json!(peaks.lpk_e));
    put("pk_o", json!(peaks.pk_o));
    put("pk_e", json!(peaks.pk_e));
    put("EXC", json!(exc.exc));
    put("WEXC_shifted", json!(exc.wexc_shifted));
    put("mne", json!(exc.mne));
    put("mnw", json!(exc.mnw));
    put("DB", json!(descent_bottoms(p)));
    put("DT", json!(descent_tops(p)));
    put("inverse", json!(inv.to_string()));
    put("avoids", json!(avoids));
    put("baxter", json!(is_baxter(p)));
    Value::Object(out)
}

fn binary_tree_record(t: &BinaryTree) -> Value {
    let c = tree_chain_profile(t);
    json!({
        "n": t.size(),
        "LC": c.lc,
        "RC": c.rc,
        "olc": c.olc,
        "orc": c.orc,
        "X": c.x,
        "Y": c.y,
        "larm": c.larm,
        "rarm": c.rarm,
    })
}

fn plane_tree_record(t: &PlaneTree) -> Value {
    json!({ "edges": t.edges(), "mark": mark_count(t) })
}

fn dyck_record(d: &DyckPath) -> Result<Value> {
    if d.order() == 0 {
        return Err(Error::Empty("Dyck path statistics"));
    }
    let prof = dyck_profile(d)?;
    Ok(json!({
        "n": d.order(),
        "PT": prof.pt,
        "Comp": prof.comp,
        "op": prof.op,
        "ep": prof.ep,
        "initial": prof.initial,
        "terminal": prof.terminal,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_families() {
        assert_eq!(detect("3 1 2"), Kind::Perm);
        assert_eq!(detect("(. .)"), Kind::Btree);
        assert_eq!(detect("(()())"), Kind::Ptree);
        assert_eq!(detect("EENN"), Kind::Dyck);
        assert_eq!(detect(""), Kind::Perm);
    }

    #[test]
    fn permutation_fields() {
        let r = record("3 2 7 1 6 5 4", Kind::Perm).unwrap();
        assert_eq!(r["LPK"], json!([3, 6, 7]));
        assert_eq!(r["lpk_o"], json!(2));
        assert_eq!(r["lpk_e"], json!(1));
        let r = record("3 1 8 9 7 2 4 5 6", Kind::Perm).unwrap();
        assert_eq!(r["DES"], json!([1, 4, 5]));
        assert_eq!(r["odr"], json!(5));
    }
}
