//! Command-line front end.
//!
//! Exit codes: 0 success, 1 other failure, 2 usage or invalid input,
//! 3 degenerate sampling, 4 size limit exceeded.

use std::ffi::OsString;
use std::fmt::{Display, Write as _};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{embed_fiber, fiber_coordinates, recover_overlap, PlueckerVector};
use crate::fields::{Field, Rationals, Zp};
use crate::finite_codes::{
    classify_all, generator_matrix, orbit_closure, orbit_label, write_generator_csv, write_mask_set, TrivectorMask,
};
use crate::formulas::{predict, Prediction};
use crate::terracini::{benchmark, dimension, BenchmarkReport, DimensionReport, OracleField, SecantParams};
use num_bigint::BigInt;
use num_rational::BigRational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_TOO_LARGE: i32 = 4;

/// Environment variable capping the worker pool.
pub const THREADS_ENV: &str = "GRASSDIM_THREADS";

#[derive(Parser, Debug)]
#[command(name = "grassdim", version, about = "Dimensions of restricted secant varieties of Grassmannians")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub r: usize,
}

impl ParamArgs {
    fn params(&self) -> Result<SecantParams> {
        SecantParams::new(self.n, self.k, self.s, self.r)
    }
}

#[derive(Args, Debug, Clone)]
pub struct OracleArgs {
    /// Random sample points per prime.
    #[arg(long, default_value_t = 2)]
    pub trials: usize,
    /// Prime modulus; repeat for several. Defaults to two primes drawn from the seed.
    #[arg(long = "prime", conflicts_with = "rationals")]
    pub primes: Vec<u64>,
    /// Exact arithmetic over the rationals.
    #[arg(long)]
    pub rationals: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl OracleArgs {
    fn oracle(&self) -> OracleField {
        if self.rationals {
            OracleField::Rationals
        } else if self.primes.is_empty() {
            OracleField::primes_from_seed(self.seed)
        } else {
            OracleField::Primes(self.primes.clone())
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension of σ_s^r(Gr(k,n)) from the Jacobian rank.
    Dim {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Closed-form predictions only.
    Predict {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Oracle against predictions over a grid; ranges are `A` or `A..B` (inclusive).
    DefectScan {
        #[arg(long, default_value = "3..8")]
        n: Range,
        #[arg(long, default_value = "2..5")]
        k: Range,
        #[arg(long, default_value = "1..3")]
        s: Range,
        /// Values above k are skipped.
        #[arg(long, default_value = "0..5")]
        r: Range,
        /// Skip tuples with more Plücker coordinates than this.
        #[arg(long, default_value_t = 252)]
        max_coords: u64,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Overlap E and fiber coordinates of a point read from a file.
    Recover {
        /// Line 1 `n k`, line 2 numerators, optional line 3 denominators.
        file: PathBuf,
        r: usize,
        /// Work modulo this prime instead of over the rationals.
        #[arg(long)]
        prime: Option<u64>,
    },
    /// Orbit sizes in Λ³F₂⁶ under SL₆(F₂).
    OrbitCount {
        /// Seed such as `012+034`.
        #[arg(long, conflicts_with = "classify", required_unless_present = "classify")]
        seed_form: Option<String>,
        /// Partition all nonzero trivectors.
        #[arg(long)]
        classify: bool,
        /// Also write the orbit of the seed as sorted little-endian u32 masks.
        #[arg(long, requires = "seed_form")]
        export_bin: Option<PathBuf>,
    },
    /// Generator matrix of the Grassmann code of Gr(k, F_q^n).
    CodeGen {
        n: usize,
        k: usize,
        #[arg(long, default_value_t = 2)]
        q: u64,
    },
    /// Cofactor against symbolic Jacobian timing.
    Bench {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 2_147_483_647)]
        prime: u64,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

/// Inclusive integer range.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Range {
    pub lo: usize,
    pub hi: usize,
}

impl Range {
    pub fn iter(self) -> std::ops::RangeInclusive<usize> {
        self.lo..=self.hi
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => (parse(s)?, parse(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Range { lo, hi })
    }
}

/// One row of a scan; field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub n: usize,
    pub k: usize,
    pub s: usize,
    pub r: usize,
    pub cone: u64,
    pub proj: u64,
    #[serde(rename = "virtual")]
    pub virtual_dim: u64,
    pub expected: u64,
    pub fiber: u64,
    pub defect: i64,
    pub fiber_match: bool,
}

impl From<&DimensionReport> for ScanRow {
    fn from(rep: &DimensionReport) -> Self {
        let SecantParams { n, k, s, r } = rep.params;
        ScanRow {
            n,
            k,
            s,
            r,
            cone: rep.cone_dim,
            proj: rep.proj_dim,
            virtual_dim: rep.predicted.virtual_dim,
            expected: rep.predicted.expected,
            fiber: rep.predicted.fiber,
            defect: rep.defect,
            fiber_match: rep.predicted.fiber == rep.proj_dim,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RecoverReport {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub field: String,
    /// Rows of a basis of E.
    pub overlap: Vec<Vec<String>>,
    /// Nonzero coordinates of t on Λ^{k−r} of the quotient, as (index, value).
    pub fiber: Vec<(String, String)>,
    /// c with Φ(Ψ(w)) = c·w, if proportional.
    pub scalar: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub seed: TrivectorMask,
    pub seed_form: String,
    pub size: u64,
    pub label: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeReport {
    pub n: usize,
    pub k: usize,
    pub q: u64,
    pub rows: usize,
    pub points: usize,
    pub columns: Vec<Vec<u64>>,
}

pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::DegenerateAfterRetries(_) => EXIT_DEGENERATE,
        Error::TooLarge(_) => EXIT_TOO_LARGE,
        Error::Io(_) => EXIT_FAILURE,
        _ => EXIT_USAGE,
    }
}

/// Parses arguments, runs the command and writes the report to `stdout`
/// (or `--output`). Diagnostics go to `stderr`. Returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if code == EXIT_OK {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    configure_threads();
    let mut notes = Notes::default();
    let outcome = execute(&cli, &mut notes).and_then(|report| match &cli.output {
        Some(path) => fs::write(path, report).map_err(Error::from),
        None => stdout.write_all(&report).map_err(Error::from),
    });
    for w in &notes.warnings {
        let _ = writeln!(stderr, "warning: {w}");
    }
    for f in &notes.failures {
        let _ = writeln!(stderr, "failed: {f}");
    }
    match outcome {
        Ok(()) if notes.failures.is_empty() => EXIT_OK,
        Ok(()) => EXIT_FAILURE,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

#[cfg(feature = "parallel")]
fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}

#[cfg(not(feature = "parallel"))]
fn configure_threads() {}

fn json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut out = serde_json::to_vec_pretty(value).map_err(|e| Error::Io(e.to_string()))?;
    out.push(b'\n');
    Ok(out)
}

fn csv_rows<T: Serialize>(rows: &[T]) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).map_err(|e| Error::Io(e.to_string()))?;
    }
    w.into_inner().map_err(|e| Error::Io(e.to_string()))
}

#[derive(Default)]
struct Notes {
    warnings: Vec<String>,
    /// Partial failures; the report is still written, the exit code is 1.
    failures: Vec<String>,
}

fn execute(cli: &Cli, notes: &mut Notes) -> Result<Vec<u8>> {
    match &cli.command {
        Command::Dim { params, oracle } => {
            let rep = dimension(&params.params()?, &oracle.oracle(), oracle.trials, oracle.seed)?;
            if !rep.agreed {
                notes.warnings.push(format!("ranks disagreed across trials: {:?}", rep.ranks));
            }
            match cli.format {
                Format::Json => json(&rep),
                Format::Csv => csv_rows(&[ScanRow::from(&rep)]),
                Format::Text => Ok(dim_text(&rep).into_bytes()),
            }
        }
        Command::Predict { params } => {
            let p = predict(&params.params()?);
            match cli.format {
                Format::Json => json(&p),
                Format::Csv => csv_rows(&[PredictRow::from(&p)]),
                Format::Text => Ok(predict_text(&p).into_bytes()),
            }
        }
        Command::DefectScan {
            n,
            k,
            s,
            r,
            max_coords,
            oracle,
        } => {
            let (rows, failures) = defect_scan(*n, *k, *s, *r, *max_coords, oracle);
            notes.failures.extend(failures);
            match cli.format {
                Format::Json => json(&rows),
                Format::Csv => csv_rows(&rows),
                Format::Text => Ok(scan_text(&rows).into_bytes()),
            }
        }
        Command::Recover { file, r, prime } => {
            let rep = match prime {
                Some(p) => recover_from_file(file, *r, &Zp::new(*p)?, |f, x| Ok(f.reduce_i64(x)), |f, a, b| {
                    f.div(a, b)
                })?,
                None => recover_from_file(
                    file,
                    *r,
                    &Rationals::default(),
                    |_, x| Ok(BigRational::from_integer(BigInt::from(x))),
                    |f, a, b| f.div(a, b),
                )?,
            };
            match cli.format {
                Format::Json => json(&rep),
                Format::Csv => Ok(recover_csv(&rep)?),
                Format::Text => Ok(recover_text(&rep).into_bytes()),
            }
        }
        Command::OrbitCount {
            seed_form,
            classify,
            export_bin,
        } => {
            if *classify {
                let table = classify_all();
                if !table.is_complete() {
                    notes.failures.push(format!("orbits cover {} of 2^20 − 1 trivectors", table.total()));
                }
                return match cli.format {
                    Format::Json => json(&table),
                    Format::Csv => {
                        let mut buf = Vec::new();
                        table.write_csv(&mut buf)?;
                        Ok(buf)
                    }
                    Format::Text => {
                        let mut out = String::new();
                        for o in &table.orbits {
                            let _ = writeln!(out, "{:<10} {:>8}  seed {}", o.label, o.size, o.seed);
                        }
                        let _ = writeln!(out, "{:<10} {:>8}", "total", table.total());
                        Ok(out.into_bytes())
                    }
                };
            }
            let form = seed_form.as_deref().expect("clap requires a seed form");
            let seed = TrivectorMask::from_str(form)?;
            if seed.bits() == 0 {
                return Err(Error::InvalidParams("the zero trivector has no orbit to count".into()));
            }
            let orbit = orbit_closure(seed);
            if let Some(path) = export_bin {
                write_mask_set(&orbit, fs::File::create(path)?)?;
            }
            let rep = OrbitReport {
                seed,
                seed_form: seed.to_string(),
                size: orbit.len() as u64,
                label: orbit_label(orbit.len() as u64).to_string(),
            };
            match cli.format {
                Format::Json => json(&rep),
                Format::Csv => csv_rows(&[&rep]),
                Format::Text => Ok(format!("{} {} ({})\n", rep.seed_form, rep.size, rep.label).into_bytes()),
            }
        }
        Command::CodeGen { n, k, q } => {
            let g = generator_matrix(*n, *k, *q)?;
            match cli.format {
                Format::Csv => {
                    let mut buf = Vec::new();
                    write_generator_csv(&g, &mut buf)?;
                    Ok(buf)
                }
                Format::Json => json(&CodeReport {
                    n: *n,
                    k: *k,
                    q: *q,
                    rows: g.rows(),
                    points: g.cols(),
                    columns: (0..g.cols()).map(|j| (0..g.rows()).map(|i| *g.get(i, j)).collect()).collect(),
                }),
                Format::Text => Ok(format!(
                    "Grassmann code of Gr({k},{n}) over F_{q}: generator matrix {} x {}\n",
                    g.rows(),
                    g.cols()
                )
                .into_bytes()),
            }
        }
        Command::Bench {
            params,
            prime,
            reps,
            seed,
        } => {
            let rep = benchmark(&params.params()?, *prime, *seed, *reps)?;
            match cli.format {
                Format::Json => json(&rep),
                Format::Csv => csv_rows(&[BenchRow::from(&rep)]),
                Format::Text => Ok(bench_text(&rep).into_bytes()),
            }
        }
    }
}

/// Runs the oracle on every admissible grid tuple; failures are returned
/// as messages next to the rows that did succeed.
pub fn defect_scan(n: Range, k: Range, s: Range, r: Range, max_coords: u64, oracle: &OracleArgs) -> (Vec<ScanRow>, Vec<String>) {
    let mut tuples = Vec::new();
    for n in n.iter() {
        for k in k.iter().filter(|&k| k >= 1 && k < n) {
            for s in s.iter().filter(|&s| s >= 1) {
                for r in r.iter().filter(|&r| r <= k) {
                    if let Ok(p) = SecantParams::new(n, k, s, r) {
                        if p.coordinate_count() <= max_coords {
                            tuples.push(p);
                        }
                    }
                }
            }
        }
    }
    let field = oracle.oracle();
    let job = |p: &SecantParams| dimension(p, &field, oracle.trials, oracle.seed);
    #[cfg(feature = "parallel")]
    let results: Vec<Result<DimensionReport>> = {
        use rayon::prelude::*;
        tuples.par_iter().map(job).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let results: Vec<Result<DimensionReport>> = tuples.iter().map(job).collect();
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for (p, res) in tuples.iter().zip(results) {
        match res {
            Ok(rep) => rows.push(ScanRow::from(&rep)),
            Err(e) => failures.push(format!("{p}: {e}")),
        }
    }
    (rows, failures)
}

/// `n`, `k`, numerators, and optional denominators of a point file.
pub type PointFile = (usize, usize, Vec<i64>, Option<Vec<i64>>);

/// Reads `n k`, numerators, and optional denominators.
pub fn parse_point_file(text: &str) -> Result<PointFile> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let ints = |line: &str| -> Result<Vec<i64>> {
        line.split_whitespace()
            .map(|t| t.parse::<i64>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect()
    };
    let header = ints(lines.next().ok_or_else(|| Error::Parse("empty point file".into()))?)?;
    let [n, k] = header[..] else {
        return Err(Error::Parse("first line must be `n k`".into()));
    };
    if n < 0 || k < 0 {
        return Err(Error::Parse("n and k must be nonnegative".into()));
    }
    let numerators = ints(lines.next().ok_or_else(|| Error::Parse("missing coordinate line".into()))?)?;
    let denominators = lines.next().map(ints).transpose()?;
    if lines.next().is_some() {
        return Err(Error::Parse("trailing lines after denominators".into()));
    }
    Ok((n as usize, k as usize, numerators, denominators))
}

fn recover_from_file<F: Field>(
    path: &Path,
    r: usize,
    field: &F,
    lift: impl Fn(&F, i64) -> Result<F::Elem>,
    divide: impl Fn(&F, &F::Elem, &F::Elem) -> Result<F::Elem>,
) -> Result<RecoverReport> {
    let text = fs::read_to_string(path)?;
    let (n, k, nums, dens) = parse_point_file(&text)?;
    let coords = match dens {
        None => nums.iter().map(|&x| lift(field, x)).collect::<Result<Vec<_>>>()?,
        Some(d) => {
            if d.len() != nums.len() {
                return Err(Error::Parse(format!("{} numerators but {} denominators", nums.len(), d.len())));
            }
            nums.iter()
                .zip(&d)
                .map(|(&a, &b)| divide(field, &lift(field, a)?, &lift(field, b)?))
                .collect::<Result<Vec<_>>>()?
        }
    };
    let w = PlueckerVector::new(field, n, k, coords)?;
    recover(&w, r, &format!("{:?}", field.kind()))
}

/// Ψ then Φ: overlap, fiber coordinates, and the proportionality check.
pub fn recover<F: Field>(w: &PlueckerVector<F>, r: usize, field_name: &str) -> Result<RecoverReport> {
    let e = recover_overlap(w, r)?;
    let t = fiber_coordinates(w, &e)?;
    let back = embed_fiber(&e, &t)?;
    let show = |x: &F::Elem| x.to_string();
    Ok(RecoverReport {
        n: w.ambient(),
        k: w.degree(),
        r,
        field: field_name.to_string(),
        overlap: e.to_rows().iter().map(|row| row.iter().map(show).collect()).collect(),
        fiber: t.support().iter().map(|(i, c)| (i.to_string(), show(c))).collect(),
        scalar: w.proportionality(&back).map(|c| show(&c)),
    })
}

fn recover_csv(rep: &RecoverReport) -> Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["part", "index", "value"]).map_err(err)?;
    for (i, row) in rep.overlap.iter().enumerate() {
        w.write_record(["overlap".to_string(), i.to_string(), row.join(" ")]).map_err(err)?;
    }
    for (i, c) in &rep.fiber {
        w.write_record(["fiber", i, c]).map_err(err)?;
    }
    w.write_record(["scalar", "", rep.scalar.as_deref().unwrap_or("none")]).map_err(err)?;
    w.into_inner().map_err(|e| Error::Io(e.to_string()))
}

#[derive(Serialize)]
struct PredictRow {
    n: usize,
    k: usize,
    s: usize,
    r: usize,
    stability_step: usize,
    forced_overlap: usize,
    dimfam: Option<u64>,
    #[serde(rename = "virtual")]
    virtual_dim: u64,
    expected: u64,
    fiber: u64,
    assumes_bddg: bool,
}

impl From<&Prediction> for PredictRow {
    fn from(p: &Prediction) -> Self {
        let SecantParams { n, k, s, r } = p.params;
        PredictRow {
            n,
            k,
            s,
            r,
            stability_step: p.stability_step,
            forced_overlap: p.forced_overlap,
            dimfam: p.dimfam_value,
            virtual_dim: p.virtual_dim,
            expected: p.expected_dim,
            fiber: p.fiber_dim,
            assumes_bddg: p.assumes_bddg,
        }
    }
}

#[derive(Serialize)]
struct BenchRow {
    n: usize,
    k: usize,
    s: usize,
    r: usize,
    rank: u64,
    naive_time: Option<f64>,
    cofactor_time: f64,
    speedup: Option<f64>,
    naive_skipped: Option<String>,
}

impl From<&BenchmarkReport> for BenchRow {
    fn from(b: &BenchmarkReport) -> Self {
        let SecantParams { n, k, s, r } = b.params;
        BenchRow {
            n,
            k,
            s,
            r,
            rank: b.rank,
            naive_time: b.naive_time,
            cofactor_time: b.cofactor_time,
            speedup: b.speedup,
            naive_skipped: b.naive_skipped.clone(),
        }
    }
}

fn line(out: &mut String, key: &str, value: impl Display) {
    let _ = writeln!(out, "{key:<12} {value}");
}

fn dim_text(rep: &DimensionReport) -> String {
    let mut out = format!("{}\n", rep.params);
    line(&mut out, "cone dim", rep.cone_dim);
    line(&mut out, "proj dim", rep.proj_dim);
    line(&mut out, "virtual", rep.predicted.virtual_dim);
    line(&mut out, "expected", rep.predicted.expected);
    line(&mut out, "fiber", rep.predicted.fiber);
    line(&mut out, "defect", rep.defect);
    let oracle = if rep.primes_used.is_empty() {
        "rationals".to_string()
    } else {
        format!("mod {:?}", rep.primes_used)
    };
    line(&mut out, "oracle", format!("{oracle}, {} trials, ranks {:?}", rep.trials, rep.ranks));
    line(&mut out, "agreed", rep.agreed);
    out
}

fn predict_text(p: &Prediction) -> String {
    let mut out = format!("{}\n", p.params);
    line(&mut out, "step p", p.stability_step);
    line(&mut out, "forced r", p.forced_overlap);
    line(
        &mut out,
        "dimfam",
        p.dimfam_value.map_or("below stability step".to_string(), |v| v.to_string()),
    );
    line(&mut out, "virtual", p.virtual_dim);
    line(&mut out, "expected", p.expected_dim);
    line(&mut out, "fiber", p.fiber_dim);
    line(&mut out, "conjectural", p.assumes_bddg);
    out
}

fn scan_text(rows: &[ScanRow]) -> String {
    let mut out = String::from(" n  k  s  r  cone  proj  virt   exp  fiber  defect  match\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{:>2} {:>2} {:>2} {:>2} {:>5} {:>5} {:>5} {:>5} {:>6} {:>7}  {}",
            r.n, r.k, r.s, r.r, r.cone, r.proj, r.virtual_dim, r.expected, r.fiber, r.defect, r.fiber_match
        );
    }
    out
}

fn recover_text(rep: &RecoverReport) -> String {
    let mut out = format!("overlap E ({} x {}):\n", rep.r, rep.n);
    for row in &rep.overlap {
        let _ = writeln!(out, "  [{}]", row.join(", "));
    }
    let _ = writeln!(out, "fiber t in Λ^{} of the {}-dim quotient:", rep.k - rep.r, rep.n - rep.r);
    for (i, c) in &rep.fiber {
        let _ = writeln!(out, "  e{i}: {c}");
    }
    match &rep.scalar {
        Some(c) => line(&mut out, "Φ∘Ψ", format!("proportional, scalar {c}")),
        None => line(&mut out, "Φ∘Ψ", "NOT proportional"),
    }
    out
}

fn bench_text(b: &BenchmarkReport) -> String {
    let mut out = format!("{} (rank {})\n", b.params, b.rank);
    line(&mut out, "cofactor", format!("{:.6} s", b.cofactor_time));
    match (b.naive_time, &b.naive_skipped) {
        (Some(t), _) => line(&mut out, "symbolic", format!("{t:.6} s")),
        (None, Some(why)) => line(&mut out, "symbolic", format!("skipped: {why}")),
        (None, None) => line(&mut out, "symbolic", "skipped"),
    }
    if let Some(s) = b.speedup {
        line(&mut out, "speedup", format!("{s:.1}x"));
    }
    out
}
