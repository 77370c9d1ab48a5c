//! Command-line front end: one subcommand per computation.
//!
//! Exit codes: 0 on success, 1 when a computation fails, 2 for usage and
//! argument validation errors.

mod emit;
mod records;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use emit::{emit, Format, Record, Value};
use records::*;

use crate::coefficients::CoefficientTable;
use crate::error::{Error, Result};
use crate::gapbounds::{prop5_check, theorem1_lower, theorem2_bounds, DEFAULT_ENVELOPE_CONSTANT};
use crate::limitation::{limitation_solve, sqrt2_asymptote_check, Direction, WChoice};
use crate::primes::{build_prime_table, build_prime_table_cached, main_term, prime_sum, PrimeSumKind, PrimeTable};
use crate::quadrature::{self, DEFAULT_TOL};
use crate::resonator::{
    derive_params, enumerate_support, prop6_main_term, resonance_quotient_exact, ResonatorParams, Sign,
};
use crate::tau::{quotient_bruteforce, tau_eval, theorem3_bound_h, theorem3_bound_xi};
use crate::zerodata::{empirical_extremes, load_zeros, normalized_r_gaps, s_difference_trace, GapNormalization};

pub const EXIT_OK: u8 = 0;
pub const EXIT_COMPUTATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "zeta-resonance", version, about = "Resonance-method numerics for zeta-zero gaps")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Worker threads for data-parallel kernels (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sinc² integrals φ(x), φ₂(x; κ), φ₃(x; κ).
    Phi(PhiArgs),
    /// Sieve primes up to L.
    Sieve(SieveArgs),
    /// Exact prime sums S1, S2, S3 against their integral main terms.
    PrimeSum(PrimeSumArgs),
    /// Resonator parameters and support size.
    Resonator(ResonatorArgs),
    /// Resonance quotient of the resonator (or of a coefficient file).
    Quotient(QuotientArgs),
    /// τ(ξ; f) = ξ − quotient at h = 2πξ/log T.
    Tau(TauArgs),
    /// Upper bound functional in its window (h, L) or ξ form.
    Bound(BoundArgs),
    /// Limitation ξ₀ where ξ ∓ B(ξ, W) = r.
    Limitation(LimitationArgs),
    /// Explicit gap bounds, the short-interval bound, or the side conditions.
    GapBounds(GapBoundsArgs),
    /// Normalized r-gap statistics of a zero table.
    ZerosStats(ZerosStatsArgs),
    /// Extremes of the S(t + h) − S(t) estimate over [T, 2T].
    SExtremes(SExtremesArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PhiKind {
    Phi,
    Phi2,
    Phi3,
}

#[derive(Debug, Args)]
pub struct PhiArgs {
    /// Upper limit (`inf` allowed).
    #[arg(long, allow_negative_numbers = true)]
    pub x: f64,
    #[arg(long, value_enum, default_value_t = PhiKind::Phi)]
    pub kind: PhiKind,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub kappa: f64,
    #[arg(long, default_value_t = DEFAULT_TOL, allow_negative_numbers = true)]
    pub tol: f64,
}

#[derive(Debug, Args)]
pub struct SieveArgs {
    #[arg(long = "L", alias = "limit", value_parser = parse_count)]
    pub limit: u64,
    /// Bitmap cache file, read if it covers L and (re)written otherwise.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Emit every prime instead of a summary row.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct ResonatorFlags {
    #[arg(long = "L", alias = "limit", value_parser = parse_count)]
    pub limit: u64,
    #[arg(long, allow_negative_numbers = true)]
    pub h: f64,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true, default_value = "+")]
    pub sign: Sign,
    /// Override the lower support cutoff M.
    #[arg(long = "M", allow_negative_numbers = true)]
    pub lower_cutoff: Option<f64>,
    #[arg(long)]
    pub cache: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SumKind {
    S1,
    S2,
    S3,
    All,
}

#[derive(Debug, Args)]
pub struct PrimeSumArgs {
    #[command(flatten)]
    pub resonator: ResonatorFlags,
    #[arg(long, value_enum, default_value_t = SumKind::All)]
    pub kind: SumKind,
}

#[derive(Debug, Args)]
pub struct ResonatorArgs {
    #[command(flatten)]
    pub resonator: ResonatorFlags,
    /// Write the coefficient table to this file.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct QuotientArgs {
    #[command(flatten)]
    pub resonator: ResonatorFlags,
    /// Also evaluate the literal double sum (L ≤ 10⁵).
    #[arg(long)]
    pub bruteforce: bool,
    /// Use this coefficient table instead of the resonator (implies --bruteforce).
    #[arg(long)]
    pub coeffs: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct TauArgs {
    #[arg(long, allow_negative_numbers = true)]
    pub xi: f64,
    #[arg(long = "L", alias = "limit", value_parser = parse_count)]
    pub limit: u64,
    /// log T (default: log(L (log L)²)).
    #[arg(long = "log-t", allow_negative_numbers = true)]
    pub log_t: Option<f64>,
    /// Coefficient table; without it the resonator for --resonator-h is used.
    #[arg(long, conflicts_with = "resonator_h")]
    pub coeffs: Option<PathBuf>,
    #[arg(long = "resonator-h", required_unless_present = "coeffs", allow_negative_numbers = true)]
    pub resonator_h: Option<f64>,
    #[arg(long, value_parser = parse_sign, allow_hyphen_values = true, default_value = "+")]
    pub sign: Sign,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long = "w", alias = "W", allow_negative_numbers = true)]
    pub w: f64,
    /// ξ form.
    #[arg(long, conflicts_with_all = ["h", "limit"], required_unless_present_all = ["h", "limit"], allow_negative_numbers = true)]
    pub xi: Option<f64>,
    /// Window form: h (with --L).
    #[arg(long, requires = "limit", allow_negative_numbers = true)]
    pub h: Option<f64>,
    #[arg(long = "L", alias = "limit", value_parser = parse_count, requires = "h")]
    pub limit: Option<u64>,
}

#[derive(Debug, Args)]
pub struct LimitationArgs {
    /// One or more r (comma separated).
    #[arg(long, value_delimiter = ',', required = true, value_parser = parse_count)]
    pub r: Vec<u64>,
    #[arg(long, value_parser = parse_direction, required_unless_present = "sqrt2")]
    pub direction: Option<Direction>,
    /// Fixed W, or `auto` to minimize over W.
    #[arg(long = "w", alias = "W", value_parser = parse_w, default_value = "auto")]
    pub w: WChoice,
    /// Solve both directions with W=auto and report the distance to 1 ± √2/√r.
    #[arg(long, conflicts_with = "direction")]
    pub sqrt2: bool,
}

#[derive(Debug, Args)]
pub struct GapBoundsArgs {
    /// One or more r (comma separated) for the explicit gap bounds.
    #[arg(long, value_delimiter = ',', value_parser = parse_count)]
    pub r: Vec<u64>,
    #[arg(long, default_value_t = DEFAULT_ENVELOPE_CONSTANT, allow_negative_numbers = true)]
    pub c1: f64,
    #[arg(long, default_value_t = DEFAULT_ENVELOPE_CONSTANT, allow_negative_numbers = true)]
    pub c2: f64,
    /// Short-interval bound at height T (with --h).
    #[arg(long = "T", alias = "t", requires = "h", conflicts_with = "b", allow_negative_numbers = true)]
    pub t: Option<f64>,
    #[arg(long, requires = "t", allow_negative_numbers = true)]
    pub h: Option<f64>,
    /// Side-condition check for increment b (with --theta-prime, --direction, one --r).
    #[arg(long, requires_all = ["theta_prime", "direction"], allow_negative_numbers = true)]
    pub b: Option<f64>,
    #[arg(long = "theta-prime", allow_negative_numbers = true)]
    pub theta_prime: Option<f64>,
    #[arg(long, value_parser = parse_direction)]
    pub direction: Option<Direction>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum NormalizationArg {
    LogGamma,
    LocalDensity,
}

#[derive(Debug, Args)]
pub struct ZerosStatsArgs {
    #[arg(long)]
    pub zeros: PathBuf,
    #[arg(long, value_delimiter = ',', default_value = "1", value_parser = parse_count)]
    pub r: Vec<u64>,
    /// First 0-based index of the range.
    #[arg(long, default_value_t = 0)]
    pub start: usize,
    /// One past the last index (default: table length).
    #[arg(long)]
    pub end: Option<usize>,
    #[arg(long, value_enum, default_value_t = NormalizationArg::LogGamma)]
    pub normalization: NormalizationArg,
}

#[derive(Debug, Args)]
pub struct SExtremesArgs {
    #[arg(long)]
    pub zeros: PathBuf,
    #[arg(long = "T", alias = "t", allow_negative_numbers = true)]
    pub t: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub h: f64,
    /// Grid step (default h/4).
    #[arg(long, allow_negative_numbers = true)]
    pub step: Option<f64>,
    /// Emit the (t, estimate) grid instead of the extremes.
    #[arg(long)]
    pub trace: bool,
}

/// Accepts integers and integral floats such as `1e6`.
fn parse_count(s: &str) -> std::result::Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    match s.parse::<f64>() {
        Ok(x) if x >= 0.0 && x.fract() == 0.0 && x <= 9_007_199_254_740_992.0 => Ok(x as u64),
        _ => Err(format!("expected a nonnegative integer, got {s:?}")),
    }
}

fn parse_sign(s: &str) -> std::result::Result<Sign, String> {
    match s {
        "+" | "plus" | "+1" | "1" => Ok(Sign::Plus),
        "-" | "minus" | "-1" => Ok(Sign::Minus),
        _ => Err(format!("sign must be + or -, got {s:?}")),
    }
}

fn parse_direction(s: &str) -> std::result::Result<Direction, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_w(s: &str) -> std::result::Result<WChoice, String> {
    if s.eq_ignore_ascii_case("auto") {
        return Ok(WChoice::Auto);
    }
    s.parse::<f64>().map(WChoice::Fixed).map_err(|_| format!("W must be a number or `auto`, got {s:?}"))
}

/// Parses `std::env::args`, runs, and maps the outcome to an exit code.
pub fn run() -> ExitCode {
    run_from(std::env::args_os())
}

pub fn run_from<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match RunConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    let result = with_threads(config.threads, || {
        let mut buf = Vec::new();
        dispatch(&config, &mut buf).map(|()| buf)
    })
    .and_then(|r| r)
    .and_then(|buf| {
        let mut out = io::stdout().lock();
        out.write_all(&buf)?;
        out.flush().map_err(Error::from)
    });
    match result {
        Ok(()) => ExitCode::from(EXIT_OK),
        Err(Error::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::from(EXIT_OK),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// Stable exit code per error class.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Domain(_) => EXIT_USAGE,
        _ => EXIT_COMPUTATION,
    }
}

fn with_threads<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        None => Ok(f()),
        Some(0) => Err(Error::domain("--threads must be ≥ 1")),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::precondition(format!("cannot start thread pool: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

fn write<R: Record, W: Write>(records: &[R], format: Format, out: &mut W) -> Result<()> {
    emit(records, format, out)?;
    Ok(())
}

fn prime_table(limit: u64, cache: Option<&PathBuf>) -> Result<PrimeTable> {
    match cache {
        Some(path) => build_prime_table_cached(limit, path),
        None => build_prime_table(limit),
    }
}

fn resonator_params(flags: &ResonatorFlags) -> Result<ResonatorParams> {
    let mut params = derive_params(flags.limit, flags.h, flags.sign)?;
    if let Some(m) = flags.lower_cutoff {
        if !(m >= 1.0 && m.is_finite()) {
            return Err(Error::domain(format!("M must be finite and ≥ 1, got {m}")));
        }
        params = params.with_lower_cutoff(m);
    }
    for w in &params.warnings {
        eprintln!("warning: {w}");
    }
    Ok(params)
}

/// Runs the configured subcommand, writing records to `out`.
pub fn dispatch<W: Write>(config: &RunConfig, out: &mut W) -> Result<()> {
    let format = config.format;
    match &config.command {
        Command::Phi(a) => {
            let v = match a.kind {
                PhiKind::Phi => quadrature::phi(a.x, a.tol)?,
                PhiKind::Phi2 => quadrature::phi2(a.x, a.kappa, a.tol)?,
                PhiKind::Phi3 => quadrature::phi3(a.x, a.kappa, a.tol)?,
            };
            let kappa = if a.kind == PhiKind::Phi { 0.0 } else { a.kappa };
            write(&[PhiRow { kind: a.kind, x: a.x, kappa, value: v }], format, out)
        }
        Command::Sieve(a) => {
            let table = prime_table(a.limit, a.cache.as_ref())?;
            if a.list {
                let rows: Vec<PrimeRow> = table.primes().iter().map(|&p| PrimeRow(p)).collect();
                write(&rows, format, out)
            } else {
                let row = SieveRow {
                    limit: table.limit(),
                    count: table.len(),
                    largest: table.primes().last().copied().unwrap_or(0),
                };
                write(&[row], format, out)
            }
        }
        Command::PrimeSum(a) => {
            let params = resonator_params(&a.resonator)?;
            let table = prime_table(params.limit, a.resonator.cache.as_ref())?;
            let kinds: &[PrimeSumKind] = match a.kind {
                SumKind::S1 => &[PrimeSumKind::S1],
                SumKind::S2 => &[PrimeSumKind::S2],
                SumKind::S3 => &[PrimeSumKind::S3],
                SumKind::All => &[PrimeSumKind::S1, PrimeSumKind::S2, PrimeSumKind::S3],
            };
            let rows = kinds
                .iter()
                .map(|&kind| {
                    Ok(PrimeSumRow {
                        kind,
                        params: params.clone(),
                        exact: prime_sum(kind, &params, &table)?,
                        main: main_term(kind, &params)?,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            write(&rows, format, out)
        }
        Command::Resonator(a) => {
            let params = resonator_params(&a.resonator)?;
            let table = prime_table(params.limit, a.resonator.cache.as_ref())?;
            let support = enumerate_support(&params, &table)?;
            if let Some(path) = &a.output {
                support.save(path)?;
            }
            write(&[ResonatorRow { support_size: support.len(), params }], format, out)
        }
        Command::Quotient(a) => {
            let params = resonator_params(&a.resonator)?;
            let table = prime_table(params.limit, a.resonator.cache.as_ref())?;
            let mut rows = Vec::new();
            let target = params.target_scale();
            if let Some(path) = &a.coeffs {
                let coeffs = CoefficientTable::load(path)?;
                let q = quotient_bruteforce(&coeffs, params.limit, params.h, &table)?;
                rows.push(QuotientRow::new(&params, "bruteforce", q, target, None));
            } else {
                let support = enumerate_support(&params, &table)?;
                let main = prop6_main_term(&params)?;
                let q = resonance_quotient_exact(&support, &params)?;
                rows.push(QuotientRow::new(&params, "divisor-pair", q, target, Some(main)));
                if a.bruteforce {
                    let b = quotient_bruteforce(&support, params.limit, params.h, &table)?;
                    rows.push(QuotientRow::new(&params, "bruteforce", b, target, Some(main)));
                }
            }
            write(&rows, format, out)
        }
        Command::Tau(a) => {
            let log_l = (a.limit as f64).ln();
            let log_t = a.log_t.unwrap_or_else(|| (a.limit as f64 * log_l * log_l).ln());
            let table = build_prime_table(a.limit.max(2))?;
            let coeffs = match (&a.coeffs, a.resonator_h) {
                (Some(path), _) => CoefficientTable::load(path)?,
                (None, Some(h)) => {
                    let params = derive_params(a.limit, h, a.sign)?;
                    for w in &params.warnings {
                        eprintln!("warning: {w}");
                    }
                    enumerate_support(&params, &table)?
                }
                (None, None) => return Err(Error::domain("need --coeffs or --resonator-h")),
            };
            let tau = tau_eval(a.xi, &coeffs, a.limit, log_t, &table)?;
            let h = 2.0 * std::f64::consts::PI * a.xi / log_t;
            write(&[TauRow { xi: a.xi, limit: a.limit, log_t, h, quotient: a.xi - tau, tau }], format, out)
        }
        Command::Bound(a) => {
            let (form, eval) = match (a.xi, a.h, a.limit) {
                (Some(xi), _, _) => ("xi", theorem3_bound_xi(xi, a.w)?),
                (None, Some(h), Some(l)) => ("h", theorem3_bound_h(h, l, a.w)?),
                _ => return Err(Error::domain("bound needs --xi, or --h with --L")),
            };
            write(&[BoundRow { form, eval }], format, out)
        }
        Command::Limitation(a) => {
            if a.sqrt2 {
                let rows = sqrt2_asymptote_check(&a.r)?;
                let rows: Vec<AsymptoteRecord> = rows.into_iter().map(AsymptoteRecord).collect();
                return write(&rows, format, out);
            }
            let direction = a.direction.ok_or_else(|| Error::domain("--direction is required"))?;
            let rows = a.r.iter().map(|&r| limitation_solve(r, direction, a.w)).collect::<Result<Vec<_>>>()?;
            write(&rows, format, out)
        }
        Command::GapBounds(a) => {
            if let Some(b) = a.b {
                let (Some(theta), Some(direction)) = (a.theta_prime, a.direction) else {
                    return Err(Error::domain("--b needs --theta-prime and --direction"));
                };
                let [r] = a.r[..] else {
                    return Err(Error::domain("--b needs exactly one --r"));
                };
                let holds = prop5_check(b, theta, r, direction)?;
                return write(&[SideConditionRow { b, theta_prime: theta, r, direction, holds }], format, out);
            }
            if let (Some(t), Some(h)) = (a.t, a.h) {
                let bound = theorem1_lower(t, h)?;
                return write(&[ShortIntervalRow { t, h, bound }], format, out);
            }
            if a.r.is_empty() {
                return Err(Error::domain("gap-bounds needs --r, --T with --h, or --b"));
            }
            let rows = a.r.iter().map(|&r| theorem2_bounds(r, a.c1, a.c2)).collect::<Result<Vec<_>>>()?;
            write(&rows, format, out)
        }
        Command::ZerosStats(a) => {
            let table = load_zeros(&a.zeros)?;
            let end = a.end.unwrap_or(table.len());
            let normalization = match a.normalization {
                NormalizationArg::LogGamma => GapNormalization::LogGamma,
                NormalizationArg::LocalDensity => GapNormalization::LocalDensity,
            };
            let rows =
                a.r.iter()
                    .map(|&r| normalized_r_gaps(&table, r as usize, a.start..end, normalization))
                    .collect::<Result<Vec<_>>>()?;
            write(&rows, format, out)
        }
        Command::SExtremes(a) => {
            let table = load_zeros(&a.zeros)?;
            let step = a.step.unwrap_or(a.h / 4.0);
            if a.trace {
                let rows: Vec<TraceRow> =
                    s_difference_trace(&table, a.t, a.h, step)?.into_iter().map(|(t, v)| TraceRow(t, v)).collect();
                return write(&rows, format, out);
            }
            let e = empirical_extremes(&table, a.t, a.h, step)?;
            let main = theorem1_lower(a.t, a.h).map(|b| b.main).unwrap_or(f64::NAN);
            write(&[ExtremesRow { t: a.t, h: a.h, step, extremes: e, theorem1_main: main }], format, out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> Result<String> {
        let mut argv = vec!["zeta-resonance"];
        argv.extend_from_slice(args);
        let config = RunConfig::try_parse_from(argv).expect("valid arguments");
        let mut buf = Vec::new();
        dispatch(&config, &mut buf)?;
        Ok(String::from_utf8(buf).unwrap())
    }

    #[test]
    fn phi_at_zero() {
        assert_eq!(run_capture(&["phi", "--x", "0"]).unwrap(), "kind,x,kappa,value,error_estimate\nphi,0,0,0,0\n");
    }

    #[test]
    fn limitation_header() {
        let text = run_capture(&["limitation", "--r", "1", "--direction", "lambda", "--w", "22.6"]).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("r,direction,W,xi0,residual"));
        let row: Vec<&str> = lines.next().unwrap().split(',').collect();
        assert_eq!(&row[..3], &["1", "lambda", "22.600000000000001"]);
        assert!((row[3].parse::<f64>().unwrap() - 3.022).abs() < 0.01);
        assert!(lines.next().is_none());
    }

    #[test]
    fn sign_accepts_bare_minus() {
        let config = RunConfig::try_parse_from(["z", "quotient", "--L", "1000", "--h", "0.8", "--sign", "-"]).unwrap();
        match config.command {
            Command::Quotient(q) => assert_eq!(q.resonator.sign, Sign::Minus),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn counts_accept_scientific_notation() {
        assert_eq!(parse_count("1e6"), Ok(1_000_000));
        assert!(parse_count("1.5").is_err());
        assert!(parse_count("-3").is_err());
    }

    #[test]
    fn usage_errors() {
        assert!(RunConfig::try_parse_from(["z", "bound", "--w", "2"]).is_err());
        assert!(RunConfig::try_parse_from(["z", "bound", "--w", "2", "--xi", "1", "--h", "1", "--L", "9"]).is_err());
        assert!(RunConfig::try_parse_from(["z", "limitation", "--r", "1"]).is_err());
        assert_eq!(exit_code(&Error::domain("x")), EXIT_USAGE);
        assert_eq!(exit_code(&Error::ZeroCoefficients), EXIT_COMPUTATION);
    }
}
