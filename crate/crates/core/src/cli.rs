//! Command-line front end. Every subcommand prints a short human summary,
//! or JSON with `--json PATH` (`-` for stdout).
//!
//! Exit codes: 0 success, 1 usage, 2 property violated, 3 unsupported or
//! undecided.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::brute::{brute_report, Group};
use crate::certify::{certify, route, Certificate, Route};
use crate::characters::{dimension, mn_character};
use crate::error::{BruteError, CertifyError, WeightsError};
use crate::lp::{feasibility_search, SearchOutcome};
use crate::partitions::{enumerate_partitions, Partition};
use crate::rational::{self, Rational};
use crate::schemes::{spectrum_from_characters, WeightScheme};
use crate::weights::Family;
use crate::SCHEMA_VERSION;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VIOLATION: i32 = 2;
pub const EXIT_UNDECIDED: i32 = 3;

/// Environment variable naming the on-disk character cache directory.
pub const CACHE_ENV: &str = "EKR_CACHE_DIR";

#[derive(Debug, Parser)]
#[command(name = "ekr", version, about = "Exact EKR certificates for Sym(n) and Alt(n) on k-subsets")]
pub struct RunConfig {
    /// Worker threads for spectrum evaluation (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Output {
    /// Write JSON to this path; `-` writes it to stdout.
    #[arg(long, value_name = "PATH")]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certify the EKR property for one (n, k).
    Certify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[command(flatten)]
        out: Output,
    },
    /// Every eigenvalue of the weighted matrix used for (n, k).
    Spectrum {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Use this closed form even outside its range (e.g. k4-odd).
        #[arg(long)]
        case: Option<Family>,
        #[command(flatten)]
        out: Output,
    },
    /// Character values of the low-dimensional shapes on a family's classes.
    Chartab {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        case: Family,
        #[command(flatten)]
        out: Output,
    },
    /// Closed-form weights, or an LP search with --search.
    Weights {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        case: Option<Family>,
        /// Search for weights on even classes instead of using a closed form.
        #[arg(long)]
        search: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Exact maximum coclique of an explicit derangement graph.
    Brute {
        #[arg(long, default_value = "sym")]
        group: Group,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
        /// Largest group order accepted; Sym(7) needs --cap 5040.
        #[arg(long, default_value_t = 2520)]
        cap: usize,
        /// Include a maximum coclique in the output.
        #[arg(long)]
        witness: bool,
        #[command(flatten)]
        out: Output,
    },
    /// Certify every n in a range and print a summary table.
    Sweep {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        n_from: u32,
        #[arg(long)]
        n_to: u32,
        #[command(flatten)]
        out: Output,
    },
}

/// Parses `argv` (including the program name), runs the command and
/// returns the exit code.
pub fn dispatch<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    if let Some(t) = config.threads {
        if t == 0 {
            eprintln!("error: --threads must be positive");
            return EXIT_USAGE;
        }
        // Fails only if a pool already exists, which is harmless.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match run(&config.command) {
        Ok(code) => code,
        Err(Failure { code, message }) => {
            eprintln!("error: {message}");
            code
        }
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl From<CertifyError> for Failure {
    fn from(e: CertifyError) -> Self {
        let code = match e {
            CertifyError::Unsupported { .. }
            | CertifyError::Undecided { .. }
            | CertifyError::Infeasible { .. } => EXIT_UNDECIDED,
            CertifyError::Weights(w) => return Failure::from(w),
            _ => EXIT_VIOLATION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<WeightsError> for Failure {
    fn from(e: WeightsError) -> Self {
        let code = match &e {
            WeightsError::OutOfRange { .. } | WeightsError::WrongParity { .. } | WeightsError::SearchRange { .. } => {
                EXIT_UNDECIDED
            }
            _ => EXIT_VIOLATION,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<BruteError> for Failure {
    fn from(e: BruteError) -> Self {
        let code = match &e {
            BruteError::MomentMismatch { .. } => EXIT_VIOLATION,
            BruteError::BadParameters { .. } => EXIT_USAGE,
            _ => EXIT_UNDECIDED,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(e: impl std::fmt::Display) -> Failure {
    Failure {
        code: EXIT_USAGE,
        message: e.to_string(),
    }
}

/// Writes JSON if requested; returns whether the human summary should be
/// suppressed (JSON went to stdout).
fn emit_json<T: Serialize>(out: &Output, value: &T) -> Result<bool, Failure> {
    let Some(path) = &out.json else {
        return Ok(false);
    };
    let mut text = serde_json::to_string_pretty(value).map_err(io_failure)?;
    text.push('\n');
    if path.as_os_str() == "-" {
        std::io::stdout().write_all(text.as_bytes()).map_err(io_failure)?;
        Ok(true)
    } else {
        fs::write(path, text).map_err(io_failure)?;
        Ok(false)
    }
}

fn run(command: &Command) -> Result<i32, Failure> {
    match command {
        Command::Certify { n, k, out } => {
            let cert = certify(*n, *k)?;
            if !emit_json(out, &cert)? {
                print!("{}", certificate_summary(&cert));
            }
            Ok(if cert.is_certified() { EXIT_OK } else { EXIT_VIOLATION })
        }
        Command::Spectrum { n, k, case, out } => run_spectrum(*n, *k, *case, out),
        Command::Chartab { n, case, out } => run_chartab(*n, *case, out),
        Command::Weights {
            n,
            k,
            case,
            search,
            out,
        } => run_weights(*n, *k, *case, *search, out),
        Command::Brute {
            group,
            n,
            k,
            cap,
            witness,
            out,
        } => {
            let report = brute_report(*group, *n, *k, *cap, *witness)?;
            if !emit_json(out, &report)? {
                println!(
                    "{} on {}-subsets, n = {}: order {}, degree {}, alpha = {}, stabilizer {}, density {}{}",
                    report.group,
                    report.k,
                    report.n,
                    report.order,
                    report.degree,
                    report.alpha,
                    report.stabilizer_order,
                    report.density,
                    if report.witness_is_canonical { " (canonical witness)" } else { "" }
                );
                if let Some(w) = &report.witness {
                    for p in w {
                        println!("  {}", p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Sweep { k, n_from, n_to, out } => run_sweep(*k, *n_from, *n_to, out),
    }
}

fn certificate_summary(c: &Certificate) -> String {
    let mut s = String::new();
    let shapes = |set: &std::collections::BTreeSet<Partition>| {
        set.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
    };
    let _ = writeln!(s, "n = {}, k = {}: {:?}", c.n, c.k, c.status);
    let _ = writeln!(s, "  weights: {}", provenance_label(c));
    let _ = writeln!(
        s,
        "  largest eigenvalue {} (multiplicity {}) at {}",
        c.max_eigenvalue,
        c.multiplicity,
        shapes(&c.max_attained_at)
    );
    let _ = writeln!(s, "  least eigenvalue {} at {}", c.min_eigenvalue, shapes(&c.min_attained_at));
    let _ = writeln!(s, "  Sym(n) coclique bound {}", c.sym_bound);
    if let Some(a) = &c.alt_bound {
        let _ = writeln!(s, "  Alt(n) coclique bound {a}");
    }
    let _ = writeln!(
        s,
        "  density one: Sym {}, Alt {}",
        c.conclusions.sym_density_one, c.conclusions.alt_density_one
    );
    for v in &c.violations {
        let _ = writeln!(
            s,
            "  violated: {}{}{}",
            v.property,
            v.shape.as_ref().map(|p| format!(" at {p}")).unwrap_or_default(),
            v.value.as_ref().map(|x| format!(" (value {x})")).unwrap_or_default()
        );
    }
    for note in &c.notes {
        let _ = writeln!(s, "  note: {note}");
    }
    s
}

fn provenance_label(c: &Certificate) -> String {
    match &c.provenance {
        crate::certify::Provenance::ClosedForm { family } => format!("closed form {family}"),
        crate::certify::Provenance::LpSearch { rounds, pivots, .. } => {
            format!("LP search ({rounds} rounds, {pivots} pivots)")
        }
    }
}

fn scheme_for(n: u32, k: u32, case: Option<Family>) -> Result<WeightScheme, Failure> {
    if let Some(f) = case {
        if f.k() != k {
            return Err(Failure {
                code: EXIT_USAGE,
                message: format!("case {f} is for k = {}, not {k}", f.k()),
            });
        }
        return Ok(f.closed_form_unchecked(n)?);
    }
    match route(n, k)? {
        Route::ClosedForm(f) => Ok(f.closed_form(n)?),
        Route::Search => match feasibility_search(n, k, true)?.outcome {
            SearchOutcome::Feasible { scheme } => Ok(scheme),
            SearchOutcome::Infeasible => Err(CertifyError::Infeasible { n, k }.into()),
            SearchOutcome::Undecided { reason } => Err(CertifyError::Undecided { n, k, reason }.into()),
        },
    }
}

fn run_spectrum(n: u32, k: u32, case: Option<Family>, out: &Output) -> Result<i32, Failure> {
    let scheme = scheme_for(n, k, case)?;
    let shapes = enumerate_partitions(n);
    let classes: Vec<Partition> = scheme.entries.iter().map(|e| e.class.clone()).collect();
    let rows = character_rows(n, &shapes, &classes);
    let spectrum = spectrum_from_characters(&scheme, &shapes, &rows);
    if !emit_json(out, &spectrum)? {
        println!(
            "n = {n}, k = {k}: {} shapes, max {} at {}, min {} at {}",
            spectrum.values.len(),
            spectrum.max(),
            join(spectrum.argmax()),
            spectrum.min(),
            join(spectrum.argmin())
        );
        for e in &spectrum.values {
            println!("  {:<24} {}", e.shape.to_string(), e.value);
        }
    }
    Ok(EXIT_OK)
}

fn join(set: impl IntoIterator<Item = Partition>) -> String {
    set.into_iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ")
}

#[derive(Serialize)]
struct ChartabRow {
    shape: Partition,
    dimension: String,
    values: Vec<i128>,
}

#[derive(Serialize)]
struct Chartab {
    schema: u32,
    n: u32,
    case: String,
    classes: Vec<Partition>,
    rows: Vec<ChartabRow>,
    cells: Vec<ChartabCell>,
}

#[derive(Serialize)]
struct ChartabCell {
    shape: Partition,
    class: Partition,
    value: i128,
}

fn run_chartab(n: u32, case: Family, out: &Output) -> Result<i32, Failure> {
    let classes = case.classes(n);
    let mut shapes = Vec::new();
    for tail in case.table_row_tails() {
        match Partition::with_long_first_part(n, tail) {
            Some(p) => shapes.push(p),
            None => {
                return Err(Failure {
                    code: EXIT_UNDECIDED,
                    message: format!("n = {n} is too small for the {case} table"),
                })
            }
        }
    }
    if classes.iter().any(|c| c.n() != n) {
        return Err(Failure {
            code: EXIT_UNDECIDED,
            message: format!("n = {n} is too small for the {case} classes"),
        });
    }
    let values = character_rows(n, &shapes, &classes);
    let cells = shapes
        .iter()
        .zip(&values)
        .flat_map(|(shape, row)| {
            classes.iter().zip(row).map(|(class, &value)| ChartabCell {
                shape: shape.clone(),
                class: class.clone(),
                value,
            })
        })
        .collect();
    let table = Chartab {
        schema: SCHEMA_VERSION,
        n,
        case: case.name().to_string(),
        classes: classes.clone(),
        rows: shapes
            .into_iter()
            .zip(values)
            .map(|(shape, values)| ChartabRow {
                dimension: dimension(&shape).to_string(),
                shape,
                values,
            })
            .collect(),
        cells,
    };
    if !emit_json(out, &table)? {
        let header: Vec<String> = classes.iter().map(|c| c.to_string()).collect();
        println!("{:<20} {:>24} {}", "shape", "dimension", header.join("  "));
        for row in &table.rows {
            let cells: Vec<String> = row
                .values
                .iter()
                .zip(&header)
                .map(|(v, h)| format!("{v:>w$}", w = h.len()))
                .collect();
            println!("{:<20} {:>24} {}", row.shape.to_string(), row.dimension, cells.join("  "));
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct WeightsJson<'a> {
    schema: u32,
    n: u32,
    k: u32,
    case: &'a str,
    weights: &'a [crate::schemes::WeightedClass],
}

#[derive(Serialize)]
struct SearchJson<'a> {
    schema: u32,
    #[serde(flatten)]
    report: &'a crate::lp::SearchReport,
}

fn run_weights(n: u32, k: u32, case: Option<Family>, search: bool, out: &Output) -> Result<i32, Failure> {
    if search {
        let report = feasibility_search(n, k, true)?;
        if !emit_json(out, &SearchJson { schema: SCHEMA_VERSION, report: &report })? {
            println!(
                "n = {n}, k = {k}: {} even classes, {} rows, {} rounds, {} pivots",
                report.columns, report.rows, report.rounds, report.pivots
            );
            match &report.outcome {
                SearchOutcome::Feasible { scheme } => print_weights(scheme),
                SearchOutcome::Infeasible => println!("  infeasible"),
                SearchOutcome::Undecided { reason } => println!("  undecided: {reason}"),
            }
        }
        return Ok(match report.outcome {
            SearchOutcome::Feasible { .. } => EXIT_OK,
            _ => EXIT_UNDECIDED,
        });
    }
    let family = match case.or_else(|| Family::of(n, k)) {
        Some(f) => f,
        None => return Err(CertifyError::Unsupported { n, k }.into()),
    };
    if family.k() != k {
        return Err(Failure {
            code: EXIT_USAGE,
            message: format!("case {family} is for k = {}, not {k}", family.k()),
        });
    }
    let scheme = family.closed_form(n)?;
    let json = WeightsJson {
        schema: SCHEMA_VERSION,
        n,
        k,
        case: family.name(),
        weights: &scheme.entries,
    };
    if !emit_json(out, &json)? {
        println!("n = {n}, k = {k}: closed form {family}");
        print_weights(&scheme);
    }
    Ok(EXIT_OK)
}

fn print_weights(scheme: &WeightScheme) {
    for e in scheme.support() {
        println!("  {:<24} {}", e.class.to_string(), e.weight);
    }
}

#[derive(Serialize)]
struct SweepRow {
    n: u32,
    case: &'static str,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    weights: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_pq")]
    max: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    multiplicity: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none", with = "opt_pq")]
    min: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sym_density_one: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    alt_density_one: Option<bool>,
}

mod opt_pq {
    use super::*;

    pub fn serialize<S: serde::Serializer>(x: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match x {
            Some(x) => rational::serialize(x, s),
            None => s.serialize_none(),
        }
    }
}

#[derive(Serialize)]
struct SweepJson {
    schema: u32,
    k: u32,
    rows: Vec<SweepRow>,
}

fn run_sweep(k: u32, from: u32, to: u32, out: &Output) -> Result<i32, Failure> {
    if from > to {
        return Err(Failure {
            code: EXIT_USAGE,
            message: format!("empty range {from}..={to}"),
        });
    }
    let mut code = EXIT_OK;
    let mut rows = Vec::new();
    for n in from..=to {
        let case = match route(n, k) {
            Ok(Route::Search) => "small",
            _ if n % 2 == 0 => "even",
            _ => "odd",
        };
        let row = match certify(n, k) {
            Ok(c) => {
                if !c.is_certified() {
                    code = code.max(EXIT_VIOLATION);
                }
                SweepRow {
                    n,
                    case,
                    status: format!("{:?}", c.status).to_lowercase(),
                    weights: Some(provenance_label(&c)),
                    max: Some(c.max_eigenvalue.clone()),
                    multiplicity: Some(c.multiplicity),
                    min: Some(c.min_eigenvalue.clone()),
                    sym_density_one: Some(c.conclusions.sym_density_one),
                    alt_density_one: Some(c.conclusions.alt_density_one),
                }
            }
            Err(e) => {
                let f = Failure::from(e);
                code = code.max(f.code);
                SweepRow {
                    n,
                    case,
                    status: f.message,
                    weights: None,
                    max: None,
                    multiplicity: None,
                    min: None,
                    sym_density_one: None,
                    alt_density_one: None,
                }
            }
        };
        rows.push(row);
    }
    let json = SweepJson {
        schema: SCHEMA_VERSION,
        k,
        rows,
    };
    if !emit_json(out, &json)? {
        println!("{:>4} {:<6} {:<10} {:>14} {:>4} {:>5} {:>4} {:>4}  weights", "n", "case", "status", "max", "mult", "min", "sym", "alt");
        for r in &json.rows {
            let show = |x: &Option<Rational>| x.as_ref().map(|v| v.to_string()).unwrap_or_default();
            let flag = |x: Option<bool>| match x {
                Some(true) => "yes",
                Some(false) => "no",
                None => "",
            };
            println!(
                "{:>4} {:<6} {:<10} {:>14} {:>4} {:>5} {:>4} {:>4}  {}",
                r.n,
                r.case,
                r.status,
                show(&r.max),
                r.multiplicity.map(|m| m.to_string()).unwrap_or_default(),
                show(&r.min),
                flag(r.sym_density_one),
                flag(r.alt_density_one),
                r.weights.as_deref().unwrap_or("")
            );
        }
    }
    Ok(code)
}

#[derive(Serialize, Deserialize)]
struct CachedRows {
    schema: u32,
    n: u32,
    shapes: Vec<Partition>,
    classes: Vec<Partition>,
    values: Vec<Vec<i128>>,
}

/// Content address of a character block: hash of the schema version, `n`,
/// the shapes and the classes.
pub fn cache_key(n: u32, shapes: &[Partition], classes: &[Partition]) -> String {
    let mut h = Sha256::new();
    h.update(format!("schema={SCHEMA_VERSION};n={n};"));
    for s in shapes {
        h.update(format!("{s};"));
    }
    h.update("|");
    for c in classes {
        h.update(format!("{c};"));
    }
    hex::encode(h.finalize())
}

/// `values[j][i] = chi^{shapes[j]}(classes[i])`, read from and written to
/// `$EKR_CACHE_DIR` when that is set. Cache problems fall back to
/// computing the values.
pub fn character_rows(n: u32, shapes: &[Partition], classes: &[Partition]) -> Vec<Vec<i128>> {
    let dir = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    let path = dir.as_ref().map(|d| d.join(format!("{}.json", cache_key(n, shapes, classes))));
    if let Some(p) = &path {
        if let Some(rows) = load_cached(p, n, shapes, classes) {
            return rows;
        }
    }
    let values: Vec<Vec<i128>> = {
        use rayon::prelude::*;
        shapes
            .par_iter()
            .map(|s| classes.iter().map(|c| mn_character(s, c)).collect())
            .collect()
    };
    if let (Some(dir), Some(p)) = (&dir, &path) {
        let entry = CachedRows {
            schema: SCHEMA_VERSION,
            n,
            shapes: shapes.to_vec(),
            classes: classes.to_vec(),
            values: values.clone(),
        };
        if let Err(e) = store_cached(dir, p, &entry) {
            eprintln!("warning: could not write character cache: {e}");
        }
    }
    values
}

fn load_cached(path: &Path, n: u32, shapes: &[Partition], classes: &[Partition]) -> Option<Vec<Vec<i128>>> {
    let text = fs::read_to_string(path).ok()?;
    let entry: CachedRows = serde_json::from_str(&text).ok()?;
    let fresh = entry.schema == SCHEMA_VERSION
        && entry.n == n
        && entry.shapes == shapes
        && entry.classes == classes
        && entry.values.len() == shapes.len();
    fresh.then_some(entry.values)
}

fn store_cached(dir: &Path, path: &Path, entry: &CachedRows) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, serde_json::to_vec(entry)?)?;
    fs::rename(tmp, path)
}
