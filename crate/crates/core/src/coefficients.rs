//! Sparse tables of arithmetic-function values `(n, f(n))`.
//!
//! Text form: one `n value` pair per line, strictly ascending `n ≥ 1`, values
//! with 17 significant digits. Blank lines and lines starting with `#` are
//! ignored on input.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::numfmt::g17;
use crate::summation::CompensatedSum;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SupportKind {
    /// Built by [`crate::resonator::enumerate_support`].
    Resonator,
    User,
}

/// Position of `n / q` in the table, where `q` is the largest prime factor of `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct FactorLink {
    pub parent: usize,
    pub prime: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    entries: Vec<(u64, f64)>,
    kind: SupportKind,
    links: Option<Vec<FactorLink>>,
}

impl CoefficientTable {
    /// A user table; entries must be strictly ascending with `n ≥ 1`.
    pub fn new(entries: Vec<(u64, f64)>) -> Result<Self> {
        if let Some(pos) = entries.iter().position(|&(n, _)| n == 0) {
            return Err(Error::domain(format!("entry {pos}: n must be ≥ 1")));
        }
        if let Some(w) = entries.windows(2).position(|w| w[0].0 >= w[1].0) {
            return Err(Error::domain(format!("entries not strictly ascending at n = {}", entries[w + 1].0)));
        }
        if let Some(&(n, v)) = entries.iter().find(|(_, v)| !v.is_finite()) {
            return Err(Error::domain(format!("non-finite value {v} at n = {n}")));
        }
        Ok(Self { entries, kind: SupportKind::User, links: None })
    }

    pub(crate) fn resonator(entries: Vec<(u64, f64)>, links: Vec<FactorLink>) -> Self {
        debug_assert_eq!(entries.len(), links.len());
        Self { entries, kind: SupportKind::Resonator, links: Some(links) }
    }

    pub fn entries(&self) -> &[(u64, f64)] {
        &self.entries
    }

    pub fn kind(&self) -> SupportKind {
        self.kind
    }

    pub(crate) fn links(&self) -> Option<&[FactorLink]> {
        self.links.as_deref()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `f(n)`, zero when `n` is absent.
    pub fn get(&self, n: u64) -> f64 {
        match self.entries.binary_search_by_key(&n, |&(m, _)| m) {
            Ok(i) => self.entries[i].1,
            Err(_) => 0.0,
        }
    }

    pub fn max_n(&self) -> u64 {
        self.entries.last().map_or(0, |&(n, _)| n)
    }

    /// `Σ_{n ≤ limit} f(n)²`.
    pub fn norm_sq(&self, limit: u64) -> f64 {
        self.entries.iter().take_while(|&&(n, _)| n <= limit).map(|&(_, v)| v * v).sum::<CompensatedSum>().value()
    }

    /// Dense vector `f[0..=limit]` with `f[0] = 0`.
    pub fn to_dense(&self, limit: u64) -> Vec<f64> {
        let mut out = vec![0.0; limit as usize + 1];
        for &(n, v) in self.entries.iter().take_while(|&&(n, _)| n <= limit) {
            out[n as usize] = v;
        }
        out
    }

    /// The same support with every value multiplied by `c`, as a user table.
    pub fn scaled(&self, c: f64) -> CoefficientTable {
        CoefficientTable {
            entries: self.entries.iter().map(|&(n, v)| (n, c * v)).collect(),
            kind: SupportKind::User,
            links: None,
        }
    }

    pub fn write_text<W: Write>(&self, mut out: W) -> io::Result<()> {
        for &(n, v) in &self.entries {
            writeln!(out, "{n} {}", g17(v))?;
        }
        Ok(())
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut file = io::BufWriter::new(fs::File::create(path)?);
        self.write_text(&mut file)?;
        file.flush()?;
        Ok(())
    }

    pub fn load(path: &Path) -> Result<Self> {
        let file = io::BufReader::new(fs::File::open(path)?);
        Self::read_text(file, path)
    }

    pub fn read_text<R: BufRead>(input: R, origin: &Path) -> Result<Self> {
        let err = |line: usize, msg: String| Error::Format { path: origin.to_path_buf(), line, msg };
        let mut entries: Vec<(u64, f64)> = Vec::new();
        for (i, line) in input.lines().enumerate() {
            let lineno = i + 1;
            let line = line?;
            let text = line.trim();
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            let mut fields = text.split_whitespace();
            let (Some(n), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(lineno, "expected `n value`".into()));
            };
            let n: u64 = n.parse().map_err(|e| err(lineno, format!("bad index {n:?}: {e}")))?;
            let v: f64 = v.parse().map_err(|e| err(lineno, format!("bad value {v:?}: {e}")))?;
            if n == 0 {
                return Err(err(lineno, "index must be ≥ 1".into()));
            }
            if !v.is_finite() {
                return Err(err(lineno, format!("non-finite value {v}")));
            }
            if let Some(&(prev, _)) = entries.last() {
                if n <= prev {
                    return Err(err(lineno, format!("index {n} not above previous {prev}")));
                }
            }
            entries.push((n, v));
        }
        Ok(Self { entries, kind: SupportKind::User, links: None })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::path::PathBuf;

    #[test]
    fn rejects_unsorted_or_zero_index() {
        assert!(CoefficientTable::new(vec![(2, 1.0), (1, 1.0)]).is_err());
        assert!(CoefficientTable::new(vec![(0, 1.0)]).is_err());
        assert!(CoefficientTable::new(vec![(1, 1.0), (1, 2.0)]).is_err());
    }

    #[test]
    fn lookup_and_norm() {
        let t = CoefficientTable::new(vec![(1, 1.0), (5, -2.0), (9, 0.5)]).unwrap();
        assert_eq!(t.get(5), -2.0);
        assert_eq!(t.get(4), 0.0);
        assert_eq!(t.norm_sq(8), 5.0);
        assert_eq!(t.norm_sq(100), 5.25);
        assert_eq!(t.to_dense(6), vec![0.0, 1.0, 0.0, 0.0, 0.0, -2.0, 0.0]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let origin = PathBuf::from("coeffs.txt");
        let bad = "# header\n1 1.0\n3 0.5\n2 0.1\n";
        match CoefficientTable::read_text(bad.as_bytes(), &origin) {
            Err(Error::Format { line, .. }) => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
        let garbage = "1 1.0\n2 x\n";
        assert!(matches!(CoefficientTable::read_text(garbage.as_bytes(), &origin), Err(Error::Format { line: 2, .. })));
    }

    proptest! {
        #[test]
        fn text_round_trip(values in proptest::collection::btree_map(1u64..10_000, -1e3f64..1e3, 0..50)) {
            let t = CoefficientTable::new(values.into_iter().collect()).unwrap();
            let mut buf = Vec::new();
            t.write_text(&mut buf).unwrap();
            let back = CoefficientTable::read_text(buf.as_slice(), Path::new("mem")).unwrap();
            prop_assert_eq!(back, t);
        }
    }
}
