//! Tables of zeta-zero ordinates: normalized gap statistics and the
//! short-interval counting fluctuation `S(t + h) − S(t)`.
//!
//! Text format: one ordinate per line, strictly ascending. Blank lines and
//! lines starting with `#` are skipped; leading `#` lines become the table's
//! provenance string.

use std::f64::consts::PI;
use std::fs;
use std::io::{self, BufRead};
use std::ops::Range;
use std::path::Path;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::summation::CompensatedSum;

/// Sanity floor for the first ordinate (`γ₁ ≈ 14.1347`).
pub const FIRST_ZERO_FLOOR: f64 = 14.0;

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroTable {
    ordinates: Vec<f64>,
    source: String,
}

impl ZeroTable {
    /// Validates `ordinates`: nonempty, finite, strictly ascending, first `> 14`.
    pub fn new(ordinates: Vec<f64>, source: impl Into<String>) -> Result<Self> {
        if ordinates.is_empty() {
            return Err(Error::domain("zero table is empty"));
        }
        if let Some(i) = ordinates.iter().position(|g| !g.is_finite()) {
            return Err(Error::domain(format!("ordinate {} is not finite", i + 1)));
        }
        if ordinates[0] <= FIRST_ZERO_FLOOR {
            return Err(Error::domain(format!("first ordinate {} is not above {FIRST_ZERO_FLOOR}", ordinates[0])));
        }
        if let Some(i) = ordinates.windows(2).position(|w| w[1] <= w[0]) {
            return Err(Error::domain(format!("ordinate {} is not above its predecessor", i + 2)));
        }
        Ok(Self { ordinates, source: source.into() })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// `[first, last]` ordinate.
    pub fn coverage(&self) -> (f64, f64) {
        (self.ordinates[0], self.ordinates[self.ordinates.len() - 1])
    }

    /// A table of the first `n` ordinates.
    pub fn prefix(&self, n: usize) -> Result<ZeroTable> {
        if n == 0 || n > self.len() {
            return Err(Error::domain(format!("prefix length {n} outside 1..={}", self.len())));
        }
        Ok(ZeroTable { ordinates: self.ordinates[..n].to_vec(), source: self.source.clone() })
    }

    /// `#{n : a < γ_n ≤ b}`.
    pub fn count_between(&self, a: f64, b: f64) -> usize {
        let lo = self.ordinates.partition_point(|&g| g <= a);
        let hi = self.ordinates.partition_point(|&g| g <= b);
        hi.saturating_sub(lo)
    }

    /// `#{n : a ≤ γ_n < b}`.
    fn count_between_left(&self, a: f64, b: f64) -> usize {
        let lo = self.ordinates.partition_point(|&g| g < a);
        let hi = self.ordinates.partition_point(|&g| g < b);
        hi.saturating_sub(lo)
    }

    fn check_covered(&self, lo: f64, hi: f64) -> Result<()> {
        let (first, last) = self.coverage();
        for at in [lo, hi] {
            if !(at >= first && at <= last) {
                return Err(Error::Coverage { at, lo: first, hi: last });
            }
        }
        Ok(())
    }
}

pub fn load_zeros(path: &Path) -> Result<ZeroTable> {
    let file = io::BufReader::new(fs::File::open(path)?);
    read_zeros(file, path)
}

pub fn read_zeros<R: BufRead>(input: R, origin: &Path) -> Result<ZeroTable> {
    let err = |line: usize, msg: String| Error::Format { path: origin.to_path_buf(), line, msg };
    let mut ordinates: Vec<f64> = Vec::new();
    let mut header: Vec<String> = Vec::new();
    let mut last_line = 0;
    for (i, line) in input.lines().enumerate() {
        let lineno = i + 1;
        last_line = lineno;
        let line = line?;
        let text = line.trim();
        if let Some(comment) = text.strip_prefix('#') {
            if ordinates.is_empty() {
                header.push(comment.trim().to_string());
            }
            continue;
        }
        if text.is_empty() {
            continue;
        }
        let g: f64 = text.parse().map_err(|e| err(lineno, format!("bad ordinate {text:?}: {e}")))?;
        if !g.is_finite() {
            return Err(err(lineno, format!("non-finite ordinate {g}")));
        }
        match ordinates.last() {
            None if g <= FIRST_ZERO_FLOOR => {
                return Err(err(lineno, format!("first ordinate {g} is not above {FIRST_ZERO_FLOOR}")));
            }
            Some(&prev) if g <= prev => {
                return Err(err(lineno, format!("ordinate {g} not above previous {prev}")));
            }
            _ => {}
        }
        ordinates.push(g);
    }
    if ordinates.is_empty() {
        return Err(err(last_line, "no ordinates in file".into()));
    }
    let source = if header.is_empty() { origin.display().to_string() } else { header.join(" ") };
    Ok(ZeroTable { ordinates, source })
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GapNormalization {
    /// `(γ_{n+r} − γ_n) · log γ_n / (2πr)`.
    #[default]
    LogGamma,
    /// `(γ_{n+r} − γ_n) · log(γ_n/2π) / (2πr)`, the local mean spacing.
    LocalDensity,
}

impl GapNormalization {
    fn factor(self, gamma: f64, r: usize) -> f64 {
        let log = match self {
            GapNormalization::LogGamma => gamma.ln(),
            GapNormalization::LocalDensity => (gamma / (2.0 * PI)).ln(),
        };
        log / (2.0 * PI * r as f64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GapStats {
    pub r: usize,
    pub count: usize,
    pub max_norm: f64,
    pub min_norm: f64,
    pub mean_norm: f64,
    /// 1-based `n` of the `γ_n` starting the largest gap.
    pub argmax_index: usize,
    pub argmin_index: usize,
}

/// Statistics of the normalized `r`-gaps `γ_{n+r} − γ_n` with both `γ_n`
/// and `γ_{n+r}` inside `range` (0-based indices into the table).
pub fn normalized_r_gaps(
    table: &ZeroTable,
    r: usize,
    range: Range<usize>,
    normalization: GapNormalization,
) -> Result<GapStats> {
    if r == 0 {
        return Err(Error::domain("r must be ≥ 1"));
    }
    if range.end > table.len() || range.start >= range.end {
        return Err(Error::domain(format!(
            "range {range:?} is not a nonempty part of a table with {} ordinates",
            table.len()
        )));
    }
    if r >= range.len() {
        return Err(Error::domain(format!("range of {} ordinates is too short for r = {r}", range.len())));
    }
    let g = &table.ordinates;
    let mut sum = CompensatedSum::new();
    let mut stats = GapStats {
        r,
        count: 0,
        max_norm: f64::NEG_INFINITY,
        min_norm: f64::INFINITY,
        mean_norm: 0.0,
        argmax_index: 0,
        argmin_index: 0,
    };
    for n in range.start..range.end - r {
        let v = (g[n + r] - g[n]) * normalization.factor(g[n], r);
        sum += v;
        stats.count += 1;
        if v > stats.max_norm {
            stats.max_norm = v;
            stats.argmax_index = n + 1;
        }
        if v < stats.min_norm {
            stats.min_norm = v;
            stats.argmin_index = n + 1;
        }
    }
    stats.mean_norm = sum.value() / stats.count as f64;
    Ok(stats)
}

/// Smooth part of the zero-counting function, `(u/2π) log(u/2πe) + 7/8`.
pub fn smooth_count(u: f64) -> f64 {
    u / (2.0 * PI) * (u / (2.0 * PI * std::f64::consts::E)).ln() + 0.875
}

/// `#{t < γ_n ≤ t+h} − [N̄(t+h) − N̄(t)]`, an estimate of `S(t+h) − S(t)`.
pub fn s_difference_estimate(table: &ZeroTable, t: f64, h: f64) -> Result<f64> {
    if !(h >= 0.0 && h.is_finite()) {
        return Err(Error::domain(format!("h must be finite and ≥ 0, got {h}")));
    }
    table.check_covered(t, t + h)?;
    Ok(estimate_unchecked(table, t, h))
}

fn estimate_unchecked(table: &ZeroTable, t: f64, h: f64) -> f64 {
    table.count_between(t, t + h) as f64 - (smooth_count(t + h) - smooth_count(t))
}

// value as s → t from the left: the window is then [t, t+h)
fn left_limit_unchecked(table: &ZeroTable, t: f64, h: f64) -> f64 {
    table.count_between_left(t, t + h) as f64 - (smooth_count(t + h) - smooth_count(t))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extremes {
    pub sup: f64,
    pub inf: f64,
    /// Where the supremum is attained or approached from the left.
    pub sup_at: f64,
    pub inf_at: f64,
    /// Number of points evaluated (grid, endpoints and events).
    pub evaluations: usize,
}

/// Supremum and infimum of [`s_difference_estimate`] over `t ∈ [T, 2T]`.
///
/// Evaluates the grid `T, T+step, …`, the endpoints, and every event point
/// `γ_n` and `γ_n − h` in `[T, 2T]`, both at the point and as a left limit.
/// Between events the estimate is continuous and decreasing, so the events
/// alone determine the extremes; the grid is kept as a cross-check.
pub fn empirical_extremes(table: &ZeroTable, t: f64, h: f64, grid_step: f64) -> Result<Extremes> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::domain(format!("T must be positive and finite, got {t}")));
    }
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::domain(format!("h must be positive and finite, got {h}")));
    }
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(Error::domain(format!("grid step must be positive and finite, got {grid_step}")));
    }
    table.check_covered(t, 2.0 * t + h)?;
    let end = 2.0 * t;

    // (point, include left limit)
    let mut points: Vec<(f64, bool)> = grid(t, end, grid_step).into_iter().map(|x| (x, false)).collect();
    points.push((end, false));
    let g = &table.ordinates;
    let lo = g.partition_point(|&x| x < t - h);
    let hi = g.partition_point(|&x| x <= end);
    for &gamma in &g[lo..hi] {
        for e in [gamma, gamma - h] {
            if e >= t && e <= end {
                points.push((e, e > t));
            }
        }
    }

    let evaluated: Vec<[(f64, f64); 2]> = points
        .par_iter()
        .map(|&(x, left)| {
            let v = estimate_unchecked(table, x, h);
            let l = if left { left_limit_unchecked(table, x, h) } else { v };
            [(x, v), (x, l)]
        })
        .collect();

    let mut out =
        Extremes { sup: f64::NEG_INFINITY, inf: f64::INFINITY, sup_at: t, inf_at: t, evaluations: points.len() };
    for &(x, v) in evaluated.iter().flatten() {
        if v > out.sup || (v == out.sup && x < out.sup_at) {
            out.sup = v;
            out.sup_at = x;
        }
        if v < out.inf || (v == out.inf && x < out.inf_at) {
            out.inf = v;
            out.inf_at = x;
        }
    }
    Ok(out)
}

/// `(t, estimate)` on the grid `T, T+step, …, 2T`.
pub fn s_difference_trace(table: &ZeroTable, t: f64, h: f64, grid_step: f64) -> Result<Vec<(f64, f64)>> {
    if !(grid_step > 0.0 && grid_step.is_finite()) {
        return Err(Error::domain(format!("grid step must be positive and finite, got {grid_step}")));
    }
    if !(h >= 0.0 && h.is_finite()) {
        return Err(Error::domain(format!("h must be finite and ≥ 0, got {h}")));
    }
    table.check_covered(t, 2.0 * t + h)?;
    Ok(grid(t, 2.0 * t, grid_step).into_iter().map(|x| (x, estimate_unchecked(table, x, h))).collect())
}

fn grid(start: f64, end: f64, step: f64) -> Vec<f64> {
    let n = ((end - start) / step).floor() as usize;
    (0..=n).map(|k| start + k as f64 * step).filter(|&x| x <= end).collect()
}
