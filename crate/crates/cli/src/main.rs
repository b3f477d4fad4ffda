//! `catparity`: enumerate Catalan objects, compute statistics, apply
//! bijections and run the verification suite.

mod maps;
mod stats;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use catalan_parity::objects::{
    all_permutations, avoiders, baxter_permutations, binary_trees, dyck_paths, laguerre_histories, motzkin_paths,
    plane_trees, walk_pairs, Pattern,
};
use catalan_parity::schett::{catalan_schett, schett, BivariatePolynomial, Route};
use catalan_parity::series::{SeriesLab, TruncatedSeries};
use catalan_parity::verify::{self, Config, Params, VerificationReport};
use catalan_parity::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

/// Largest size accepted by `enumerate` for Catalan-sized families.
const ENUMERATE_MAX_N: usize = 13;
/// Largest size accepted for families of size `n!` or Baxter numbers.
const ENUMERATE_MAX_N_FACTORIAL: usize = 9;
/// Largest size accepted by `schett`.
const SCHETT_MAX_N: usize = 12;

#[derive(Parser)]
#[command(name = "catparity", version, about = "Parity statistics on Catalan objects")]
struct Cli {
    /// Worker threads for parallel enumeration (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

/// A size given either positionally or with `--n`.
#[derive(Args)]
struct Size {
    #[arg(value_name = "N")]
    pos: Option<usize>,
    #[arg(long = "n", value_name = "N", conflicts_with = "pos")]
    flag: Option<usize>,
}

impl Size {
    fn get(&self) -> Option<usize> {
        self.pos.or(self.flag)
    }

    fn required(&self) -> Result<usize> {
        self.get().ok_or_else(|| Error::Domain("a size N is required".into()))
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print every object of a family and size, one per line.
    Enumerate {
        family: Family,
        #[command(flatten)]
        size: Size,
        /// Pattern for `avoiders`: a word of S_3, 2-41-3 or 3-14-2.
        #[arg(long)]
        pattern: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Read objects from standard input and print their statistics as JSON.
    Stats {
        /// Object family; guessed from each line when omitted.
        #[arg(long, value_enum)]
        kind: Option<stats::Kind>,
    },
    /// Apply a bijection to each line of standard input.
    Map {
        #[arg(long, value_enum)]
        name: maps::MapName,
        #[arg(long, value_enum, default_value = "fwd")]
        dir: maps::Direction,
    },
    /// Catalan-Schett or classical Schett polynomials.
    Schett {
        #[command(flatten)]
        size: Size,
        #[arg(long, value_enum, default_value = "trees")]
        route: SchettRoute,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Distribution series from enumeration, or the mna table.
    Series {
        name: SeriesName,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run a named check, or `all`; `--list` shows the registry.
    Verify {
        check: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Avoiders,
    Perm,
    Baxter,
    Btree,
    Ptree,
    Dyck,
    Motzkin2,
    Walkpair,
    Laguerre,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SchettRoute {
    Trees,
    Perm231,
    Perm321,
    /// All three routes, failing if they disagree.
    All,
    /// The classical Schett polynomial over increasing trees.
    Classical,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SeriesName {
    /// 321-avoiders by odd and even ascending runs.
    G,
    /// The same series over Dyck paths by odd and even composition parts.
    GDyck,
    Ee,
    Eo,
    Oe,
    Oo,
    /// 231-avoiders by even and odd left peaks.
    M,
    /// The same series over 321-avoiders.
    MRestricted,
    Le,
    Lo,
    E,
    O,
    /// G(t, x, 1).
    A,
    /// 321-avoiders by descents.
    Descents,
    /// Distribution of mna over 321-avoiders, derived from A.
    MnaTable,
}

/// Failures of a mathematical check, as opposed to bad input.
struct CheckFailed;

enum Failure {
    Usage(Error),
    Check,
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<CheckFailed> for Failure {
    fn from(_: CheckFailed) -> Self {
        Failure::Check
    }
}

fn bounded(n: usize, bound: usize, what: &'static str) -> Result<usize> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what,
            requested: n,
            bound,
        });
    }
    Ok(n)
}

fn enumerate(family: Family, n: usize, pattern: Option<&str>, format: Format) -> std::result::Result<(), Failure> {
    let factorial = matches!(family, Family::Perm | Family::Baxter | Family::Laguerre);
    let bound = if factorial { ENUMERATE_MAX_N_FACTORIAL } else { ENUMERATE_MAX_N };
    let n = bounded(n, bound, "enumeration size")?;
    if pattern.is_some() && family != Family::Avoiders {
        return Err(Error::Domain("--pattern only applies to the avoiders family".into()).into());
    }
    fn text<T: ToString>(items: Vec<T>) -> Vec<String> {
        items.iter().map(T::to_string).collect()
    }
    let lines = match family {
        Family::Avoiders => {
            let pattern: Pattern = pattern
                .ok_or_else(|| Error::Domain("avoiders needs --pattern".into()))?
                .parse()?;
            text(avoiders(n, pattern))
        }
        Family::Perm => text(all_permutations(n)),
        Family::Baxter => text(baxter_permutations(n)),
        Family::Btree => text(binary_trees(n)),
        Family::Ptree => text(plane_trees(n)),
        Family::Dyck => text(dyck_paths(n)),
        Family::Motzkin2 => text(motzkin_paths(n)),
        Family::Walkpair => text(walk_pairs(n)),
        Family::Laguerre => text(laguerre_histories(n)),
    };
    let mut out = io::stdout().lock();
    match format {
        Format::Json => writeln!(out, "{}", json!(lines))?,
        _ => {
            for line in lines {
                writeln!(out, "{line}")?;
            }
        }
    }
    Ok(())
}

fn stats(kind: Option<stats::Kind>) -> std::result::Result<(), Failure> {
    let mut out = io::stdout().lock();
    for line in io::stdin().lock().lines() {
        let line = line?;
        let k = kind.unwrap_or_else(|| stats::detect(&line));
        writeln!(out, "{}", stats::record(&line, k)?)?;
    }
    Ok(())
}

fn map(name: maps::MapName, dir: maps::Direction) -> std::result::Result<(), Failure> {
    let mut out = io::stdout().lock();
    for line in io::stdin().lock().lines() {
        writeln!(out, "{}", maps::apply(name, dir, &line?)?)?;
    }
    Ok(())
}

fn polynomial_json(n: usize, route: &str, p: &BivariatePolynomial) -> serde_json::Value {
    let terms: Vec<_> = p.terms().map(|(a, b, c)| json!([a, b, c.to_string()])).collect();
    json!({ "n": n, "route": route, "polynomial": p.to_string(), "terms": terms })
}

fn schett_cmd(n: usize, route: SchettRoute, format: Format) -> std::result::Result<(), Failure> {
    let n = bounded(n, SCHETT_MAX_N, "Schett size")?;
    if n == 0 {
        return Err(Error::Domain("Schett polynomials start at n = 1".into()).into());
    }
    let results: Vec<(String, BivariatePolynomial)> = match route {
        SchettRoute::Classical => vec![("classical".into(), schett(n))],
        SchettRoute::All => Route::ALL.iter().map(|r| (r.to_string(), catalan_schett(n, *r))).collect(),
        SchettRoute::Trees => vec![("trees".into(), catalan_schett(n, Route::Trees))],
        SchettRoute::Perm231 => vec![("perm231".into(), catalan_schett(n, Route::StackSortable))],
        SchettRoute::Perm321 => vec![("perm321".into(), catalan_schett(n, Route::Restricted))],
    };
    let mut out = io::stdout().lock();
    for (name, p) in &results {
        match format {
            Format::Json => writeln!(out, "{}", polynomial_json(n, name, p))?,
            _ if results.len() > 1 => writeln!(out, "{name}: {p}")?,
            _ => writeln!(out, "{p}")?,
        }
    }
    if results.windows(2).any(|w| w[0].1 != w[1].1) {
        return Err(CheckFailed.into());
    }
    Ok(())
}

fn series_cmd(name: SeriesName, order: Option<usize>, format: Format) -> std::result::Result<(), Failure> {
    let config = Config::load()?;
    let lab = SeriesLab::new(order.unwrap_or(config.max_order), config.max_order)?;
    let mut out = io::stdout().lock();
    if name == SeriesName::MnaTable {
        let table = lab.mna_table_from_series()?;
        match format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&table).expect("serializable"))?,
            Format::Csv => write!(out, "{}", table.to_csv())?,
            Format::Text => {
                for row in &table.rows {
                    let counts: Vec<String> = row.counts.iter().map(u64::to_string).collect();
                    writeln!(out, "n={:<3} {}  (sum {})", row.n, counts.join(" "), row.total())?;
                }
            }
        }
        return Ok(());
    }
    let s: TruncatedSeries = match name {
        SeriesName::G => lab.g_restricted(),
        SeriesName::GDyck => lab.g_dyck(),
        SeriesName::Ee => lab.dyck_parts().ee,
        SeriesName::Eo => lab.dyck_parts().eo,
        SeriesName::Oe => lab.dyck_parts().oe,
        SeriesName::Oo => lab.dyck_parts().oo,
        SeriesName::M => lab.m_stack_sortable(),
        SeriesName::MRestricted => lab.m_restricted(),
        SeriesName::Le => lab.peak_parts().le,
        SeriesName::Lo => lab.peak_parts().lo,
        SeriesName::E => lab.peak_parts().e,
        SeriesName::O => lab.peak_parts().o,
        SeriesName::A => lab.a(),
        SeriesName::Descents => lab.descents_restricted(0),
        SeriesName::MnaTable => unreachable!(),
    };
    let label = name.to_possible_value().expect("named").get_name().to_string();
    match format {
        Format::Json => {
            let coeffs: Vec<String> = s.coeffs().iter().map(|c| c.to_string()).collect();
            writeln!(out, "{}", json!({ "series": label, "order": lab.order(), "coefficients": coeffs }))?;
        }
        Format::Csv => {
            writeln!(out, "k,coefficient")?;
            for (k, c) in s.coeffs().iter().enumerate() {
                writeln!(out, "{k},\"{c}\"")?;
            }
        }
        Format::Text => {
            for (k, c) in s.coeffs().iter().enumerate().skip(1) {
                writeln!(out, "t^{k}: {c}")?;
            }
        }
    }
    Ok(())
}

fn print_report(out: &mut impl Write, r: &VerificationReport) -> io::Result<()> {
    let verdict = if r.pass { "PASS" } else { "FAIL" };
    let scope = match (r.n, r.order) {
        (Some(n), _) => format!("n <= {n}"),
        (_, Some(o)) => format!("order {o}"),
        _ => String::new(),
    };
    writeln!(out, "{verdict} {} ({scope}, {} ms)", r.check, r.wall_time_ms)?;
    if let Some(reading) = &r.reading {
        writeln!(out, "  reading: {reading}")?;
    }
    if let Some(ce) = &r.counterexample {
        writeln!(out, "  counterexample: {ce}")?;
    }
    if let Some(f) = &r.first_failure {
        writeln!(out, "  first failure: t^{} {}: lhs {} rhs {}", f.t_order, f.monomial, f.lhs, f.rhs)?;
    }
    for note in &r.notes {
        writeln!(out, "  note: {note}")?;
    }
    Ok(())
}

fn verify_cmd(
    check: Option<&str>,
    params: Params,
    format: Format,
    list: bool,
) -> std::result::Result<(), Failure> {
    let mut out = io::stdout().lock();
    if list {
        for c in verify::registry() {
            writeln!(out, "{:<30} {}", c.name, c.summary)?;
        }
        return Ok(());
    }
    let check = check.ok_or_else(|| Error::Domain("name a check, `all`, or pass --list".into()))?;
    let config = Config::load()?;
    let reports = if check == "all" {
        verify::run_all(params, &config)?
    } else {
        vec![verify::run_named(check, params, &config)?]
    };
    let all_pass = reports.iter().all(|r| r.pass);
    match format {
        Format::Json if check == "all" => {
            let failed: Vec<&str> = reports.iter().filter(|r| !r.pass).map(|r| r.check.as_str()).collect();
            let body = json!({ "pass": all_pass, "failed": failed, "reports": reports });
            writeln!(out, "{body}")?;
        }
        Format::Json => writeln!(out, "{}", serde_json::to_string(&reports[0]).expect("serializable"))?,
        _ => {
            for r in &reports {
                print_report(&mut out, r)?;
            }
            if reports.len() > 1 {
                let passed = reports.iter().filter(|r| r.pass).count();
                writeln!(out, "{passed}/{} checks passed", reports.len())?;
            }
        }
    }
    if all_pass {
        Ok(())
    } else {
        Err(CheckFailed.into())
    }
}

fn run(cli: Cli) -> std::result::Result<(), Failure> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| Error::Domain(format!("--jobs: {e}")))?;
    }
    match cli.command {
        Command::Enumerate {
            family,
            size,
            pattern,
            format,
        } => enumerate(family, size.required()?, pattern.as_deref(), format),
        Command::Stats { kind } => stats(kind),
        Command::Map { name, dir } => map(name, dir),
        Command::Schett { size, route, format } => schett_cmd(size.required()?, route, format),
        Command::Series { name, order, format } => series_cmd(name, order, format),
        Command::Verify {
            check,
            n,
            order,
            format,
            list,
        } => verify_cmd(check.as_deref(), Params { n, order }, format, list),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(e @ Error::Internal(_))) => {
            eprintln!("catparity: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("catparity: {e}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("catparity: {e}");
            ExitCode::from(2)
        }
    }
}
