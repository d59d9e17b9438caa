//! `powertuple`: verify, construct and search for k-th power rational
//! Diophantine tuples.
//!
//! Exit codes: 0 success, 1 domain failure (invalid tuple, degenerate or
//! exceptional input), 2 usage or I/O error.

use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use powertuple::euler::{
    auto_square_certificate, general_map_even, general_map_odd, params_from_point, point_from_params,
    quartic_map, special_locus_check, EulerError, MapOutput, SpecialLocusParams, SurfacePoint,
};
use powertuple::exactnum::kth_power_root;
use powertuple::parametrize::{cubic_family, cubic_member, family_at, ParamError};
use powertuple::search::{
    enumerate_rationals, extension_search, genus_one_search, run_search, HeightTable, RationalsByHeight,
    SearchConfig, SearchError,
};
use powertuple::tuples::{verify_tuple, TupleRecord};
use powertuple::Rational;

#[derive(Parser)]
#[command(name = "powertuple", version, about = "Exact tools for k-th power rational Diophantine tuples")]
struct Cli {
    /// Output layout: one JSON value per line, or indented JSON.
    #[arg(long, value_enum, default_value_t = Format::Lines, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Lines,
    Pretty,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every a_i a_j + 1 is a k-th power. Reads JSON records from
    /// stdin when no elements are given.
    Verify {
        #[arg(short = 'k', default_value_t = 4)]
        k: u32,
        #[arg(allow_hyphen_values = true)]
        elements: Vec<Rational>,
    },
    /// Map a surface point X:Y:Z:W@k to a quadruple.
    Map {
        point: SurfacePoint,
        /// lambda with lambda^2 = W/Z for odd k; defaults to the rational
        /// square root of W/Z when there is one.
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<Rational>,
    },
    /// Sweep a parametrized family.
    Family {
        #[arg(value_enum)]
        which: Family,
        /// Parameter values; `t` for both families.
        #[arg(allow_hyphen_values = true)]
        params: Vec<Rational>,
        /// Sweep every nonzero rational of height at most this bound instead.
        #[arg(long)]
        max_height: Option<u64>,
    },
    /// Cubic quadruples from the point attached to K (K not in {0, 1, -1}).
    Cubic {
        #[arg(allow_hyphen_values = true, required = true)]
        k_values: Vec<Rational>,
    },
    /// Special-locus identities for (kappa, u, w), or for a surface point.
    SpecialLocus {
        #[arg(short = 'k', default_value_t = 4)]
        k: u32,
        #[arg(long, allow_hyphen_values = true, requires_all = ["u", "w"], conflicts_with = "point")]
        kappa: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        u: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        w: Option<Rational>,
        #[arg(long)]
        point: Option<SurfacePoint>,
    },
    /// Rational points v on y^2 = (r^4-1)(u^4-1)(v^4-1) for a frame (r, t, u, w).
    Genus1 {
        #[arg(allow_hyphen_values = true)]
        r: Rational,
        #[arg(allow_hyphen_values = true)]
        t: Rational,
        #[arg(allow_hyphen_values = true)]
        u: Rational,
        #[arg(allow_hyphen_values = true)]
        w: Rational,
        #[arg(long, default_value_t = 50)]
        bound: u64,
    },
    /// Run the height-bounded search.
    Search(SearchArgs),
    /// Third elements x for a pair (a, b): ax+1 a fourth power, bx+1 a square.
    Extend {
        #[arg(allow_hyphen_values = true)]
        a: Rational,
        #[arg(allow_hyphen_values = true)]
        b: Rational,
        #[arg(long, default_value_t = 100)]
        bound: u64,
    },
    /// Positive reduced rationals in search order.
    Enumerate {
        #[arg(long, conflicts_with = "max_height")]
        count: Option<usize>,
        #[arg(long)]
        max_height: Option<u64>,
        /// Print the 1-based index of this value instead.
        #[arg(long, conflicts_with_all = ["count", "max_height"])]
        index_of: Option<Rational>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Family {
    Quartic,
    Cubic,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long, default_value_t = 100)]
    height_bound: u64,
    #[arg(long, default_value_t = 100)]
    ext_bound: u64,
    #[arg(long, default_value_t = 50)]
    genus1_bound: u64,
    #[arg(long, default_value_t = 1)]
    partitions: u64,
    /// Run only this 0-based partition.
    #[arg(long)]
    partition_index: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, requires = "out")]
    resume: bool,
    /// First 1-based enumeration index of `a`.
    #[arg(long)]
    window_start: Option<u64>,
    /// Last 1-based enumeration index of `a` (inclusive).
    #[arg(long)]
    window_end: Option<u64>,
    /// Center the window on this value of `a`, extending `--window-radius`
    /// indices either side.
    #[arg(long, conflicts_with_all = ["window_start", "window_end"])]
    around: Option<Rational>,
    #[arg(long, default_value_t = 0)]
    window_radius: u64,
    /// Report triples that are contained in larger findings.
    #[arg(long)]
    keep_sub_triples: bool,
    #[arg(long)]
    allow_negative_a: bool,
    #[arg(long, default_value_t = 256)]
    checkpoint_every: u64,
}

enum Failure {
    Domain(String),
    Usage(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::NotAFinding | SearchError::IncompatibleQuadrupleFrame => Failure::Domain(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<EulerError> for Failure {
    fn from(e: EulerError) -> Self {
        match e {
            EulerError::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

struct Out {
    format: Format,
    sink: io::StdoutLock<'static>,
}

impl Out {
    fn emit<T: serde::Serialize>(&mut self, value: &T) -> io::Result<()> {
        let text = match self.format {
            Format::Lines => serde_json::to_string(value),
            Format::Pretty => serde_json::to_string_pretty(value),
        }
        .expect("values serialize infallibly");
        writeln!(self.sink, "{text}")
    }

    fn text(&mut self, line: &str) -> io::Result<()> {
        writeln!(self.sink, "{line}")
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = Out { format: cli.format, sink: io::stdout().lock() };
    let result = run(cli.command, &mut out);
    let _ = out.sink.flush();
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// `Ok(false)` signals a domain-level negative result already reported.
fn run(command: Command, out: &mut Out) -> Result<bool, Failure> {
    match command {
        Command::Verify { k, elements } => cmd_verify(k, elements, out),
        Command::Map { point, lambda } => cmd_map(&point, lambda, out),
        Command::Family { which, params, max_height } => cmd_family(which, params, max_height, out),
        Command::Cubic { k_values } => cmd_cubic(&k_values, out),
        Command::SpecialLocus { k, kappa, u, w, point } => cmd_special_locus(k, kappa, u, w, point, out),
        Command::Genus1 { r, t, u, w, bound } => {
            for pt in genus_one_search(&r, &t, &u, &w, bound)? {
                out.emit(&pt)?;
            }
            Ok(true)
        }
        Command::Search(args) => cmd_search(args, out),
        Command::Extend { a, b, bound } => {
            if a.is_zero() || b.is_zero() || a == b {
                return Err(Failure::Usage("a and b must be distinct and nonzero".into()));
            }
            for ext in extension_search(&a, &b, bound) {
                out.emit(&ext)?;
            }
            Ok(true)
        }
        Command::Enumerate { count, max_height, index_of } => cmd_enumerate(count, max_height, index_of, out),
    }
}

fn cmd_verify(k: u32, elements: Vec<Rational>, out: &mut Out) -> Result<bool, Failure> {
    if k < 2 {
        return Err(Failure::Usage("k must be at least 2".into()));
    }
    let inputs: Vec<(u32, Vec<Rational>)> = if elements.is_empty() {
        let mut v = Vec::new();
        for line in io::stdin().lock().lines() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: TupleRecord =
                serde_json::from_str(&line).map_err(|e| Failure::Usage(format!("bad record: {e}")))?;
            v.push((rec.k, rec.elements));
        }
        v
    } else {
        vec![(k, elements)]
    };
    let mut all_valid = true;
    for (k, elements) in inputs {
        if elements.len() < 2 {
            return Err(Failure::Usage("need at least two elements".into()));
        }
        let report = verify_tuple(&elements, k);
        all_valid &= report.valid;
        out.emit(&TupleRecord::from_report(&report))?;
    }
    Ok(all_valid)
}

fn map_point(point: &SurfacePoint, lambda: Option<Rational>) -> Result<MapOutput, EulerError> {
    let k = point.k();
    if k.is_multiple_of(2) {
        return if k == 4 { quartic_map(point) } else { general_map_even(point) };
    }
    let lambda = match lambda {
        Some(l) => l,
        None => {
            let ratio = Rational::from(point.w().clone())
                .checked_div(&Rational::from(point.z().clone()))
                .map_err(|_| EulerError::OffAffineChart)?;
            kth_power_root(&ratio, 2).ok_or(EulerError::BadSquareWitness)?
        }
    };
    general_map_odd(point, &lambda)
}

fn cmd_map(point: &SurfacePoint, lambda: Option<Rational>, out: &mut Out) -> Result<bool, Failure> {
    let mapped = map_point(point, lambda)?;
    let valid = mapped.tuple().map(|t| t.verify().valid).unwrap_or(false);
    out.emit(&mapped.record(valid))?;
    Ok(valid)
}

fn failure_record(k: u32, param: Rational, err: &ParamError) -> TupleRecord {
    TupleRecord {
        k,
        elements: Vec::new(),
        roots: None,
        valid: false,
        source_point: None,
        param: Some(param),
        diagnostic: Some(err.to_string()),
    }
}

fn sweep_params(max_height: u64) -> Vec<Rational> {
    let mut v = Vec::new();
    for x in RationalsByHeight::new() {
        let x = Rational::new(x.0, x.1).expect("q > 0");
        if x.height() > max_height.into() {
            break;
        }
        v.push(-&x);
        v.push(x);
    }
    v
}

fn cmd_family(which: Family, params: Vec<Rational>, max_height: Option<u64>, out: &mut Out) -> Result<bool, Failure> {
    let sweep = max_height.is_some();
    let params = match max_height {
        Some(h) => sweep_params(h),
        None if params.is_empty() => return Err(Failure::Usage("give parameters or --max-height".into())),
        None => params,
    };
    let mut all_valid = true;
    for t in params {
        let record = match which {
            Family::Quartic => family_at(&t).map(|m| m.record()).unwrap_or_else(|e| failure_record(4, t, &e)),
            Family::Cubic => match cubic_family(&t) {
                Ok(tuple) => {
                    let mut rec = TupleRecord::from_report(&tuple.verify());
                    rec.param = Some(t);
                    rec
                }
                Err(e) => failure_record(3, t, &e),
            },
        };
        all_valid &= record.valid;
        out.emit(&record)?;
    }
    // Sweeps report exceptional parameters inline; explicit lists fail on them.
    Ok(sweep || all_valid)
}

fn cmd_cubic(k_values: &[Rational], out: &mut Out) -> Result<bool, Failure> {
    let mut all_valid = true;
    for k in k_values {
        match cubic_member(k) {
            Ok(m) => out.emit(&m.record())?,
            Err(e) => {
                all_valid = false;
                out.emit(&failure_record(3, k.clone(), &e))?;
            }
        }
    }
    Ok(all_valid)
}

fn cmd_special_locus(
    k: u32,
    kappa: Option<Rational>,
    u: Option<Rational>,
    w: Option<Rational>,
    point: Option<SurfacePoint>,
    out: &mut Out,
) -> Result<bool, Failure> {
    let params = match (point, kappa, u, w) {
        (Some(pt), _, _, _) => params_from_point(&pt)?,
        (None, Some(kappa), Some(u), Some(w)) => SpecialLocusParams::new(k, kappa, u, w)?,
        _ => return Err(Failure::Usage("give --kappa, --u and --w, or --point".into())),
    };
    let check = special_locus_check(&params);
    let mut report = json!({
        "k": params.k,
        "kappa": params.kappa,
        "u": params.u,
        "w": params.w,
        "third_holds": check.third_holds,
        "diagonal_factor": check.diagonal_factor,
        "quartic_factor": check.quartic_factor,
        "product": check.product(),
    });
    if check.third_holds {
        let cert = auto_square_certificate(&params)?;
        report["square_lhs"] = json!(cert.lhs);
        report["square_root"] = json!(cert.rhs_root);
        report["point"] = Value::String(point_from_params(&params)?.to_string());
    }
    out.emit(&report)?;
    Ok(check.third_holds)
}

fn cmd_search(args: SearchArgs, out: &mut Out) -> Result<bool, Failure> {
    let window = match (&args.around, args.window_start, args.window_end) {
        (Some(center), _, _) => {
            let table = HeightTable::new(args.height_bound);
            let index = table
                .index_of(center)
                .ok_or_else(|| Failure::Usage(format!("{center} is not a positive rational within the height bound")))?;
            Some((index.saturating_sub(args.window_radius).max(1), index + args.window_radius))
        }
        (None, None, None) => None,
        (None, lo, hi) => Some((lo.unwrap_or(1), hi.unwrap_or(u64::MAX))),
    };
    let cfg = SearchConfig {
        height_bound: args.height_bound,
        ext_bound: args.ext_bound,
        genus1_bound: args.genus1_bound,
        window,
        partitions: args.partitions,
        partition_index: args.partition_index,
        out: args.out.clone(),
        resume: args.resume,
        keep_sub_triples: args.keep_sub_triples,
        allow_negative_a: args.allow_negative_a,
        checkpoint_every: args.checkpoint_every,
    };
    let outcome = run_search(&cfg)?;
    if args.out.is_none() {
        for rec in &outcome.findings {
            out.emit(rec)?;
        }
    }
    let mut summary = serde_json::to_value(&outcome.stats).expect("stats serialize");
    summary["complete"] = json!(outcome.complete);
    if args.out.is_some() {
        out.emit(&summary)?;
    } else {
        eprintln!("{summary}");
    }
    eprintln!("wall time: {:.3}s", outcome.stats.wall_time.as_secs_f64());
    Ok(true)
}

fn cmd_enumerate(count: Option<usize>, max_height: Option<u64>, index_of: Option<Rational>, out: &mut Out) -> Result<bool, Failure> {
    if let Some(x) = index_of {
        let h = u64::try_from(x.height()).map_err(|_| Failure::Usage("height too large".into()))?;
        let table = HeightTable::new(h.max(1));
        return match table.index_of(&x) {
            Some(i) => {
                out.text(&i.to_string())?;
                Ok(true)
            }
            None => Err(Failure::Domain(format!("{x} is not a positive rational"))),
        };
    }
    let values = match (count, max_height) {
        (Some(n), _) => enumerate_rationals(n),
        (None, Some(h)) => {
            let n = HeightTable::new(h).count_up_to(h);
            enumerate_rationals(n as usize)
        }
        (None, None) => return Err(Failure::Usage("give --count or --max-height".into())),
    };
    for v in values {
        out.text(&v.to_string())?;
    }
    Ok(true)
}
