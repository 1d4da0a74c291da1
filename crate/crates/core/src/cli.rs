//! The `permident` command line: `verify`, `compute`, and `bench`.
//!
//! Exit codes: 0 when every emitted record passes, 1 when any fails, 2 for
//! usage errors and guard violations.

use std::ffi::OsString;
use std::io::{self, Write};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use itertools::Itertools;
use serde::Serialize;

use crate::arith::Rat;
use crate::builders::{build_c, build_m, PointVector};
use crate::error::{guard, Error, Result};
use crate::identities::{
    cyclotomic_expected, rn, s_by_cycles, s_by_definition, s_sequence, verify_all,
    verify_family, Family, SizeSelection, TrialPlan, VerdictRecord, MAX_RN_INDEX,
};
use crate::matrix::{permanent_naive, permanent_ryser, MAX_RYSER_DIM};
use crate::perm::{bernoulli, tangent_numbers};

const GRAMMAR: &str = "\
usage:
  permident verify <theorem1|vanishing|theorem2|recurrence|perA|theorem3|even-cycle|cyclo-even|cyclo-odd|cycle-lemma|derangement|wang-sun|sun-congruence|all> [--n K | --max-n K] [--trials T] [--seed S] [--parallel W] [--force] [--output json|human]
  permident compute <rn|tangent|bernoulli|S|s> [N | --points p1,p2,...]
  permident bench <rn|cyclo> --sizes a..b [--reps R]
";

/// Values above this dimension are not cross-checked against the naive permanent.
const BENCH_NAIVE_DIM: usize = 8;

#[derive(Parser, Debug)]
#[command(name = "permident", version, about, override_usage = GRAMMAR)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check identities exactly and print one record per comparison.
    Verify(VerifyArgs),
    /// Print a single value or sequence.
    Compute(ComputeArgs),
    /// Time permanents of the structured matrices.
    Bench(BenchArgs),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Identity family, or `all`.
    target: String,
    #[arg(long, conflicts_with = "max_n")]
    n: Option<usize>,
    #[arg(long = "max-n")]
    max_n: Option<usize>,
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads; defaults to the number of cores.
    #[arg(long)]
    parallel: Option<usize>,
    /// Unlock the sizes behind explicit guards.
    #[arg(long)]
    force: bool,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    output: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Json,
    Human,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Quantity {
    Rn,
    Tangent,
    Bernoulli,
    #[value(name = "S")]
    BigS,
    #[value(name = "s")]
    SmallS,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[arg(value_enum)]
    quantity: Quantity,
    #[arg(conflicts_with = "points")]
    index: Option<usize>,
    /// Comma-separated rationals.
    #[arg(long)]
    points: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum BenchKind {
    Rn,
    Cyclo,
}

#[derive(Args, Debug)]
struct BenchArgs {
    #[arg(value_enum)]
    kind: BenchKind,
    /// Inclusive range `a..b`.
    #[arg(long)]
    sizes: String,
    #[arg(long, default_value_t = 3)]
    reps: usize,
}

#[derive(Serialize)]
struct BenchRecord {
    bench: &'static str,
    size: usize,
    dim: usize,
    reps: usize,
    median_ms: f64,
    value: String,
    expected: String,
    naive: Option<String>,
    status: &'static str,
}

enum Failure {
    Usage(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

/// Runs the CLI against the process's standard streams.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    // Unlocked handles: log lines from pool threads also write to stderr.
    let mut stdout = io::BufWriter::new(io::stdout());
    let code = run_with(argv, &mut stdout, &mut io::stderr());
    let _ = stdout.flush();
    code
}

/// Runs the CLI with explicit output streams. `argv[0]` is the program name.
pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    init_logging();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}\n{GRAMMAR}");
                    2
                }
            };
        }
    };
    let result = match cli.command {
        Command::Verify(args) => run_verify(&args, out),
        Command::Compute(args) => run_compute(&args, out).map(|()| true),
        Command::Bench(args) => run_bench(&args, out),
    };
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(Failure::Usage(msg)) => {
            let _ = write!(err, "error: {msg}\n{GRAMMAR}");
            2
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn init_logging() {
    let env = env_logger::Env::new().filter_or("PERMIDENT_LOG", "off");
    let _ = env_logger::Builder::from_env(env)
        .target(env_logger::Target::Stderr)
        .try_init();
}

fn run_verify(args: &VerifyArgs, out: &mut dyn Write) -> std::result::Result<bool, Failure> {
    if args.trials == 0 {
        return Err(Failure::Usage("--trials must be at least 1".into()));
    }
    let mut plan = TrialPlan::new(args.trials, args.seed);
    if args.force {
        plan = plan.forced();
    }
    let threads = match args.parallel {
        Some(0) => return Err(Failure::Usage("--parallel must be at least 1".into())),
        Some(w) => w,
        None => 0,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Failure::Usage(format!("cannot start worker pool: {e}")))?;

    let records = if args.target == "all" {
        if args.n.is_some() {
            return Err(Failure::Usage("`verify all` takes --max-n, not --n".into()));
        }
        pool.install(|| verify_all(args.max_n, &plan))?
    } else {
        let family: Family = args
            .target
            .parse()
            .map_err(|_| Failure::Usage(format!("unknown verify target {:?}", args.target)))?;
        let sel = match (args.n, args.max_n) {
            (Some(k), _) => SizeSelection::Exactly(k),
            (None, Some(k)) => SizeSelection::UpTo(k),
            (None, None) => SizeSelection::Default,
        };
        pool.install(|| verify_family(family, sel, &plan))?
    };
    log::info!("{} records", records.len());
    write_records(&records, args.output, out)?;
    Ok(records.iter().all(VerdictRecord::passed))
}

fn write_records(
    records: &[VerdictRecord],
    format: OutputFormat,
    out: &mut dyn Write,
) -> io::Result<()> {
    for r in records {
        match format {
            OutputFormat::Json => writeln!(out, "{}", r.to_json_line())?,
            OutputFormat::Human => writeln!(out, "{}", r.to_human_line())?,
        }
    }
    if format == OutputFormat::Human {
        let failed = records.iter().filter(|r| !r.passed()).count();
        writeln!(out, "{} checks, {} failed", records.len(), failed)?;
    }
    out.flush()
}

fn run_compute(args: &ComputeArgs, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let points = args
        .points
        .as_deref()
        .map(str::parse::<PointVector>)
        .transpose()?;
    let need_index = || {
        args.index
            .ok_or_else(|| Failure::Usage("this quantity takes an index N".into()))
    };
    let text = match args.quantity {
        Quantity::Rn => rn(need_index()?)?.to_string(),
        Quantity::Tangent => {
            let n = need_index()?;
            if n == 0 {
                return Err(Failure::Usage("tangent needs N >= 1".into()));
            }
            tangent_numbers(n)?.iter().join(" ")
        }
        Quantity::Bernoulli => bernoulli(need_index()?)?.to_string(),
        Quantity::BigS => match points {
            Some(xs) => s_by_definition(&xs)?.to_string(),
            None => s_by_definition(&consecutive_points(need_index()?)?)?.to_string(),
        },
        Quantity::SmallS => match points {
            Some(xs) => s_by_cycles(&xs)?.to_string(),
            None => {
                let n = need_index()?;
                if n == 0 {
                    return Err(Failure::Usage("s needs N >= 1".into()));
                }
                s_sequence(n)?.pop().expect("n >= 1").to_string()
            }
        },
    };
    writeln!(out, "{text}")?;
    Ok(())
}

/// Points `1, 2, ..., 2n`.
fn consecutive_points(n: usize) -> Result<PointVector> {
    if n == 0 {
        return Err(Error::Domain("S needs n >= 1".into()));
    }
    guard("S points", 2 * n, MAX_RYSER_DIM)?;
    PointVector::from_i64(&(1..=2 * n as i64).collect::<Vec<_>>())
}

fn parse_range(s: &str) -> std::result::Result<(usize, usize), Failure> {
    let bad = || Failure::Usage(format!("--sizes expects a..b, got {s:?}"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn median_ms(mut times: Vec<f64>) -> f64 {
    times.sort_by(f64::total_cmp);
    let m = times.len() / 2;
    if times.len() % 2 == 1 {
        times[m]
    } else {
        (times[m - 1] + times[m]) / 2.0
    }
}

/// Known values of `r_1 .. r_4`.
fn known_rn(n: usize) -> Option<&'static str> {
    ["-10", "5870/9", "-436619903/4050", "204409938157631/6125000"]
        .get(n.wrapping_sub(1))
        .copied()
}

fn run_bench(args: &BenchArgs, out: &mut dyn Write) -> std::result::Result<bool, Failure> {
    if args.reps == 0 {
        return Err(Failure::Usage("--reps must be at least 1".into()));
    }
    let (lo, hi) = parse_range(&args.sizes)?;
    let mut all_ok = true;
    for size in lo..=hi {
        let record = match args.kind {
            BenchKind::Rn => bench_rn(size, args.reps)?,
            BenchKind::Cyclo => bench_cyclo(size, args.reps)?,
        };
        all_ok &= record.status == "pass";
        writeln!(out, "{}", serde_json::to_string(&record).expect("serializable"))?;
    }
    out.flush()?;
    Ok(all_ok)
}

fn time_reps<T: PartialEq + ToString>(
    reps: usize,
    f: impl Fn() -> Result<T>,
) -> Result<(T, f64, bool)> {
    let mut times = Vec::with_capacity(reps);
    let mut first: Option<T> = None;
    let mut stable = true;
    for _ in 0..reps {
        let started = Instant::now();
        let v = f()?;
        times.push(started.elapsed().as_secs_f64() * 1e3);
        match &first {
            Some(f0) => stable &= *f0 == v,
            None => first = Some(v),
        }
    }
    Ok((first.expect("reps >= 1"), median_ms(times), stable))
}

fn bench_rn(n: usize, reps: usize) -> Result<BenchRecord> {
    if n == 0 {
        return Err(Error::Domain("r_n is defined for n >= 1".into()));
    }
    guard("r_n index", n, MAX_RN_INDEX)?;
    let m = build_m(n);
    let (value, median, stable) = time_reps(reps, || permanent_ryser(&m))?;
    let naive = if m.dim() <= BENCH_NAIVE_DIM {
        Some(permanent_naive(&m)?)
    } else {
        None
    };
    let expected = known_rn(n).map(str::to_owned);
    let ok = stable
        && naive.as_ref().is_none_or(|v| *v == value)
        && expected.as_deref().is_none_or(|e| e == value.to_string());
    Ok(BenchRecord {
        bench: "rn",
        size: n,
        dim: m.dim(),
        reps,
        median_ms: median,
        value: value.to_string(),
        expected: expected.unwrap_or_default(),
        naive: naive.map(|v| v.to_string()),
        status: if ok { "pass" } else { "fail" },
    })
}

fn bench_cyclo(n: usize, reps: usize) -> Result<BenchRecord> {
    if n < 2 {
        return Err(Error::Domain(format!("cyclo bench needs n >= 2, got {n}")));
    }
    let dim = if n % 2 == 0 { n } else { n - 1 };
    guard("Ryser dimension", dim, MAX_RYSER_DIM)?;
    let c = build_c(n, dim)?;
    let (value, median, stable) = time_reps(reps, || permanent_ryser(&c))?;
    let naive = if dim <= BENCH_NAIVE_DIM {
        Some(permanent_naive(&c)?)
    } else {
        None
    };
    let expected: Rat = cyclotomic_expected(n);
    let shown = |v: &crate::arith::CycloNum| match v.as_rational() {
        Some(r) => r.to_string(),
        None => v.to_string(),
    };
    let ok = stable
        && naive.as_ref().is_none_or(|v| *v == value)
        && value.as_rational().as_ref() == Some(&expected);
    Ok(BenchRecord {
        bench: "cyclo",
        size: n,
        dim,
        reps,
        median_ms: median,
        value: shown(&value),
        expected: expected.to_string(),
        naive: naive.as_ref().map(shown),
        status: if ok { "pass" } else { "fail" },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("permident").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn compute_values() {
        assert_eq!(run_capture(&["compute", "rn", "1"]), (0, "-10\n".into(), String::new()));
        assert_eq!(run_capture(&["compute", "tangent", "5"]).1, "1 2 16 272 7936\n");
        assert_eq!(run_capture(&["compute", "bernoulli", "2"]).1, "1/6\n");
        assert_eq!(run_capture(&["compute", "S", "--points", "1,2"]).1, "-8\n");
        assert_eq!(run_capture(&["compute", "S", "2"]).1, "1352/3\n");
        assert_eq!(run_capture(&["compute", "s", "3"]).1, "-16\n");
        assert_eq!(run_capture(&["compute", "s", "--points", "1,2,3,4"]).1, "2\n");
    }

    #[test]
    fn usage_and_guard_errors() {
        assert_eq!(run_capture(&["frobnicate"]).0, 2);
        assert_eq!(run_capture(&["compute", "rn"]).0, 2);
        let (code, _, err) = run_capture(&["compute", "rn", "40"]);
        assert_eq!(code, 2);
        assert!(err.contains("r_n index"));
        assert_eq!(run_capture(&["verify", "theorem2", "--n", "5"]).0, 2);
        assert_eq!(run_capture(&["verify", "nope"]).0, 2);
        assert_eq!(run_capture(&["bench", "rn", "--sizes", "3..1"]).0, 2);
    }

    #[test]
    fn bench_lines() {
        let (code, out, _) = run_capture(&["bench", "rn", "--sizes", "1..2", "--reps", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        assert!(out.contains("\"value\":\"5870/9\""));
    }

    #[test]
    fn ranges() {
        assert!(matches!(parse_range("1..4"), Ok((1, 4))));
        assert!(parse_range("4").is_err());
        assert_eq!(median_ms(vec![3.0, 1.0, 2.0]), 2.0);
        assert_eq!(median_ms(vec![4.0, 1.0]), 2.5);
    }
}
