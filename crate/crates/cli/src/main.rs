//! `sqcomm`: check finite groups for square commutativity.
//!
//! Exit codes: 0 square commutative (or success), 1 not square commutative
//! (or a failed verification suite), 2 usage or input error, 3 coset
//! enumeration limit reached.

mod cayley;
mod report;
mod subject;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use sqcomm_core::catalog::{self, CatalogEntry, CatalogError};
use sqcomm_core::presentation::{EnumerationError, DEFAULT_MAX_COSETS};
use sqcomm_core::{sqcomm, todd_coxeter, verify, Presentation};

use report::{ReportDocument, Timings};
use subject::SubjectError;

const EXIT_NOT_SQCOMM: u8 = 1;
const EXIT_ERROR: u8 = 2;
const EXIT_COSET_LIMIT: u8 = 3;

#[derive(Parser)]
#[command(name = "sqcomm", version, about = "Square commutativity checks for finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a presentation, a catalog spec or a Cayley table file.
    Check {
        /// `< a, b | ... >`, `family:params` (e.g. `dihedral:4`) or `table:<path>`
        subject: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Comma-separated element labels to use as generators
        #[arg(long, value_delimiter = ',')]
        gens: Option<Vec<String>>,
        #[arg(long)]
        timings: bool,
        /// Extra relations for `bs:p:q`
        #[arg(long)]
        rel: Option<String>,
    },
    /// Run coset enumeration and print the group order.
    Enumerate {
        presentation: String,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        /// Write the Cayley table to this file
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// List catalog groups with their verdicts.
    Catalog {
        /// Family name (`cyclic`, `dihedral`, `heisenberg`, `q8`, `small`) or a full spec
        target: Option<String>,
        /// Keep groups of order below this bound
        #[arg(long)]
        under: Option<usize>,
        /// Parameter range `a..b` (inclusive) for one-parameter families
        #[arg(long)]
        n: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_COSETS)]
        max_cosets: usize,
        #[arg(long)]
        rel: Option<String>,
    },
    /// Run every verification suite over the built-in corpus.
    VerifyPaper {
        #[arg(long)]
        timings: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Check { subject, json, max_cosets, gens, timings, rel } => {
            check(&subject, json, max_cosets, gens.as_deref(), timings, rel.as_deref())
        }
        Command::Enumerate { presentation, max_cosets, dump } => enumerate(&presentation, max_cosets, dump),
        Command::Catalog { target, under, n, max_cosets, rel } => {
            list_catalog(target.as_deref(), under, n.as_deref(), max_cosets, rel.as_deref())
        }
        Command::VerifyPaper { timings } => verify_paper(timings),
    };
    ExitCode::from(code)
}

fn fail(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    EXIT_ERROR
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1000.0
}

fn check(text: &str, json: bool, max_cosets: usize, gens: Option<&[String]>, timings: bool, rel: Option<&str>) -> u8 {
    let start = Instant::now();
    let subject = match subject::resolve(text, rel, max_cosets) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    if let Some(w) = &subject.warning {
        eprintln!("warning: {w}");
    }
    let generators = match gens {
        Some(labels) => match subject::lookup_labels(&subject.group, labels) {
            Ok(g) => g,
            Err(e) => return fail(e),
        },
        None => subject.generators,
    };
    let build_ms = millis(start);

    let start = Instant::now();
    let gens_arg = (!generators.is_empty()).then_some(&generators[..]);
    let analysis = match sqcomm::analyze(&subject.group, gens_arg) {
        Ok(a) => a,
        Err(e) => return fail(e),
    };
    let mut doc = ReportDocument::new(text, &subject.group, &analysis);
    if timings {
        doc.timings = Some(Timings { build_ms, analysis_ms: millis(start) });
    }
    if json {
        println!("{}", doc.to_json());
    } else {
        print!("{}", doc.to_text());
    }
    if analysis.is_square_commutative {
        0
    } else {
        EXIT_NOT_SQCOMM
    }
}

fn enumerate(text: &str, max_cosets: usize, dump: Option<PathBuf>) -> u8 {
    let presentation = match Presentation::parse(text) {
        Ok(p) => p,
        Err(e) => return fail(format!("presentation: {e}")),
    };
    let realization = match todd_coxeter(&presentation, max_cosets) {
        Ok(r) => r,
        Err(e @ EnumerationError::CosetLimitExceeded { .. }) => {
            eprintln!("error: {e}");
            return EXIT_COSET_LIMIT;
        }
        Err(e) => return fail(e),
    };
    println!("order: {}", realization.group.order());
    if let Some(path) = dump {
        if let Err(e) = std::fs::write(&path, cayley::write(&realization.group)) {
            return fail(format!("cannot write {}: {e}", path.display()));
        }
    }
    0
}

/// Inclusive `a..b` or `a..=b`.
fn parse_range(text: &str) -> Result<std::ops::RangeInclusive<u64>, CatalogError> {
    let bad = || CatalogError::BadParameter(format!("bad range {text:?}, expected a..b"));
    let (lo, hi) = text.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: u64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: u64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn catalog_entries(
    target: Option<&str>,
    under: Option<usize>,
    range: Option<&str>,
    max_cosets: usize,
    rel: Option<&str>,
) -> Result<Vec<CatalogEntry>, SubjectError> {
    let bad = |msg: String| SubjectError::Catalog(CatalogError::BadParameter(msg));
    let target = target.unwrap_or("small");
    if range.is_some() && (target.contains(':') || matches!(target, "small" | "q8")) {
        return Err(bad(format!("--n does not apply to {target}")));
    }
    let mut entries = match target {
        "small" => {
            if under.is_some_and(|n| n > 12) {
                return Err(bad("the complete listing only covers orders below 12".into()));
            }
            catalog::small_groups_under_12()
        }
        "cyclic" | "dihedral" | "heisenberg" => {
            let range = range.ok_or_else(|| bad(format!("{target} needs --n a..b or a parameter")))?;
            parse_range(range)?
                .map(|n| catalog::from_spec(&format!("{target}:{n}"), None, max_cosets))
                .collect::<Result<_, _>>()?
        }
        spec => vec![catalog::from_spec(spec, rel, max_cosets)?],
    };
    if let Some(bound) = under {
        entries.retain(|e| e.group.order() < bound);
    }
    Ok(entries)
}

fn list_catalog(
    target: Option<&str>,
    under: Option<usize>,
    range: Option<&str>,
    max_cosets: usize,
    rel: Option<&str>,
) -> u8 {
    let entries = match catalog_entries(target, under, range, max_cosets, rel) {
        Ok(e) => e,
        Err(e) => return fail(e),
    };
    let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0).max(4);
    println!("{:<width$}  {:>5}  {:>4}  {:>4}  square-commutative", "name", "order", "|Z|", "|Z2|");
    let mut failing = 0;
    for e in &entries {
        let sq = sqcomm::is_square_commutative(&e.group);
        failing += usize::from(!sq);
        println!(
            "{:<width$}  {:>5}  {:>4}  {:>4}  {}",
            e.name,
            e.group.order(),
            e.group.center().len(),
            sqcomm::z2_subgroup(&e.group).len(),
            if sq { "yes" } else { "no" }
        );
        if let Some(w) = &e.warning {
            eprintln!("warning: {}: {w}", e.name);
        }
    }
    println!("rows: {}, not square commutative: {failing}", entries.len());
    0
}

fn verify_paper(timings: bool) -> u8 {
    let start = Instant::now();
    let corpus = verify::corpus();
    let max_order = corpus.iter().map(|e| e.group.order()).max().unwrap_or(0);
    print!("corpus: {} groups, orders up to {max_order}", corpus.len());
    if timings {
        print!(" [{:.1} ms]", millis(start));
    }
    println!();

    let width = verify::SUITES.iter().map(|s| s.name.len()).max().unwrap_or(0);
    let mut passed = 0;
    for suite in verify::SUITES {
        let start = Instant::now();
        let outcome = (suite.run)(&corpus);
        let verdict = if outcome.passed() { "PASS" } else { "FAIL" };
        print!("{verdict}  {:<width$}  {:>4} cases  {}", suite.name, outcome.cases, suite.claim);
        if timings {
            print!(" [{:.1} ms]", millis(start));
        }
        println!();
        match &outcome.failure {
            None => passed += 1,
            Some(f) => println!("      first failure: {f}"),
        }
    }
    let total = verify::SUITES.len();
    println!("{passed} of {total} suites passed");
    if passed == total {
        0
    } else {
        1
    }
}
