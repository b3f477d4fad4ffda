//! Acceptance run: one `[PASS]`/`[FAIL]` line per criterion.
//!
//! A criterion listed in `EXPECTED_FAILURES` prints `[FAIL]` with its reason
//! but does not fail the run; the run fails if any other criterion fails or
//! if an expected failure starts passing.

use std::process::Command;
use std::time::{Duration, Instant};

use catalan_parity::objects::{avoiders, catalan, Pattern};
use catalan_parity::series::{SeriesLab, DEFAULT_MAX_ORDER};
use catalan_parity::statistics::mnd;
use catalan_parity::verify::{run_named, Config, Params, VerificationReport};
use num_bigint::BigUint;

const EXPECTED_FAILURES: &[(&str, &str)] = &[(
    "series-functional-equations",
    "the functional equation for EO fails as published (t^5, x*y: 13 vs 11); with (EO + OO) in its second term it holds to t^12",
)];

type Criterion = (&'static str, fn() -> Verdict);

struct Verdict {
    pass: bool,
    detail: String,
}

fn sizes(check: &str, n: usize) -> VerificationReport {
    run_named(check, Params { n: Some(n), order: None }, &Config::embedded()).expect("check runs")
}

fn series(check: &str, order: usize) -> VerificationReport {
    run_named(check, Params { n: None, order: Some(order) }, &Config::embedded()).expect("check runs")
}

fn describe(r: &VerificationReport) -> String {
    let mut s = format!("{} {}", r.check, if r.pass { "ok" } else { "FAILED" });
    if let Some(reading) = &r.reading {
        s.push_str(&format!(" [reading: {reading}]"));
    }
    if let Some(ce) = &r.counterexample {
        s.push_str(&format!(" counterexample {ce}"));
    }
    if let Some(f) = &r.first_failure {
        s.push_str(&format!(" first failure t^{} {} ({} vs {})", f.t_order, f.monomial, f.lhs, f.rhs));
    }
    s
}

fn all_pass(reports: &[VerificationReport]) -> Verdict {
    Verdict {
        pass: reports.iter().all(|r| r.pass),
        detail: reports.iter().map(describe).collect::<Vec<_>>().join("; "),
    }
}

fn within(v: Verdict, elapsed: Duration, limit: Duration) -> Verdict {
    if elapsed <= limit {
        v
    } else {
        Verdict {
            pass: false,
            detail: format!("{}; took {elapsed:?}, limit {limit:?}", v.detail),
        }
    }
}

fn catalan_counts() -> Verdict {
    let start = Instant::now();
    let v = all_pass(&[sizes("catalan-counts", 10)]);
    within(v, start.elapsed(), Duration::from_secs(10))
}

fn mnd_distribution() -> Verdict {
    let mut v = all_pass(&[sizes("mnd-distribution", 9)]);
    let spot: Vec<String> = avoiders(3, Pattern::P231)
        .into_iter()
        .filter(|p| mnd(p) == 1)
        .map(|p| p.to_string().replace(' ', ""))
        .collect();
    let expected = ["132", "213", "312", "321"];
    v.pass &= spot == expected;
    v.detail.push_str(&format!("; length 3 with one non-overlapping descent: {}", spot.join(",")));
    v
}

fn joint_symmetry() -> Verdict {
    all_pass(&[sizes("mna-mnd-symmetry", 9)])
}

fn catalan_schett() -> Verdict {
    all_pass(&[sizes("schett-routes", 8)])
}

fn bijection_suites() -> Verdict {
    let suites = [
        ("tree-runs", 9),
        ("tree-arms", 9),
        ("walk-pair-descents", 9),
        ("tree-platforms", 9),
        ("restricted-platforms", 10),
        ("excedance-walks", 9),
        ("left-peak-transport", 9),
        ("laguerre-roundtrip", 7),
        ("plane-tree-marks", 8),
        ("plane-tree-parity", 8),
        ("baxter-walks", 7),
        ("walk-transfer", 8),
    ];
    let mut reports = Vec::new();
    let mut slow = Vec::new();
    for (name, n) in suites {
        let start = Instant::now();
        reports.push(sizes(name, n));
        if start.elapsed() > Duration::from_secs(60) {
            slow.push(name);
        }
    }
    let mut v = all_pass(&reports);
    if !slow.is_empty() {
        v.pass = false;
        v.detail.push_str(&format!("; over 60 s: {}", slow.join(", ")));
    }
    v
}

fn equidistributions() -> Verdict {
    all_pass(&[
        sizes("mnd-mne-equidistribution", 9),
        sizes("joint-parity-equidistribution", 9),
        sizes("lpk-equidistribution", 9),
    ])
}

fn functional_equations() -> Verdict {
    let names = [
        "eo-oe-symmetry",
        "ee-equation",
        "eo-equation",
        "oo-equation",
        "parity-sum",
        "left-peak-system",
    ];
    all_pass(&names.map(|c| series(c, 12)))
}

/// Each relation either holds or has its first failing coefficient
/// reported; the descent quadratic must hold under exactly one named reading.
fn algebraic_relations() -> Verdict {
    let reports = ["runs-quartic", "odd-runs-quartic", "left-peak-sextic", "descent-quadratic"].map(|c| series(c, 12));
    let localized = reports.iter().all(|r| r.pass || r.first_failure.is_some());
    let quadratic = &reports[3];
    let named = quadratic.pass && quadratic.reading.is_some();
    Verdict {
        pass: localized && named,
        detail: reports.iter().map(describe).collect::<Vec<_>>().join("; "),
    }
}

fn mna_table() -> Verdict {
    let out = Command::new(env!("CARGO_BIN_EXE_catparity"))
        .args(["series", "mna-table", "--order", "12", "--format", "csv"])
        .output()
        .expect("binary runs");
    if !out.status.success() {
        return Verdict {
            pass: false,
            detail: format!("exit {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr)),
        };
    }
    let text = String::from_utf8(out.stdout).expect("utf-8");
    let rows: Vec<Vec<u64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse().expect("integer cell")).collect())
        .collect();
    let sums_ok = rows.len() == 12
        && rows
            .iter()
            .enumerate()
            .all(|(i, r)| r[0] == i as u64 + 1 && BigUint::from(r[1..].iter().sum::<u64>()) == catalan(i as u64 + 1));
    let lab = SeriesLab::new(12, DEFAULT_MAX_ORDER).expect("order within bound");
    let enumerated = lab.mna_table_enumerated().to_csv();
    Verdict {
        pass: sums_ok && enumerated == text,
        detail: format!(
            "{} rows, row sums Catalan: {sums_ok}, matches direct enumeration: {}; n=12 row: {}",
            rows.len(),
            enumerated == text,
            text.lines().last().unwrap_or("")
        ),
    }
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("pattern-class-sizes", catalan_counts),
        ("mnd-distribution", mnd_distribution),
        ("mna-mnd-symmetry", joint_symmetry),
        ("catalan-schett-routes", catalan_schett),
        ("bijection-suites", bijection_suites),
        ("equidistributions", equidistributions),
        ("series-functional-equations", functional_equations),
        ("algebraic-relations", algebraic_relations),
        ("mna-table-cli", mna_table),
    ];
    let mut unexpected = Vec::new();
    let mut passed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let v = run();
        let ms = start.elapsed().as_millis();
        println!("[{}] {name} ({ms} ms): {}", if v.pass { "PASS" } else { "FAIL" }, v.detail);
        let expected_failure = EXPECTED_FAILURES.iter().find(|(n, _)| *n == name);
        match (v.pass, expected_failure) {
            (true, None) => passed += 1,
            (false, Some((_, why))) => println!("       expected failure: {why}"),
            (true, Some(_)) => unexpected.push(format!("{name} passed but is listed as an expected failure")),
            (false, None) => unexpected.push(format!("{name} failed")),
        }
    }
    println!(
        "acceptance: {passed}/{} passed, {} expected failure(s), {} unexpected",
        criteria.len(),
        EXPECTED_FAILURES.len(),
        unexpected.len()
    );
    if !unexpected.is_empty() {
        for u in &unexpected {
            eprintln!("unexpected: {u}");
        }
        std::process::exit(1);
    }
}
