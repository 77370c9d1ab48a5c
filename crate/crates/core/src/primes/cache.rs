//! Flat bitmap cache of a sieve.
//!
//! Layout: an 8-byte little-endian `u64` holding the limit `L`, followed by
//! `⌈⌈L/2⌉/8⌉` bytes. Bit `i` (least significant bit first within each byte)
//! is set iff the odd number `2i + 1` is prime; 2 is implied.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use super::{build_prime_table, check_limit, PrimeTable};
use crate::error::{Error, Result};

pub fn write_cache(table: &PrimeTable, path: &Path) -> Result<()> {
    let odd_count = table.limit().div_ceil(2);
    let mut bits = vec![0u8; odd_count.div_ceil(8) as usize];
    for &p in table.primes().iter().filter(|&&p| p > 2) {
        let i = (p - 1) / 2;
        bits[(i / 8) as usize] |= 1 << (i % 8);
    }
    let mut file = io::BufWriter::new(fs::File::create(path)?);
    file.write_all(&table.limit().to_le_bytes())?;
    file.write_all(&bits)?;
    file.flush()?;
    Ok(())
}

pub fn read_cache(path: &Path) -> Result<PrimeTable> {
    let format_err = |msg: &str| Error::Format { path: path.to_path_buf(), line: 0, msg: msg.to_string() };
    let mut file = fs::File::open(path)?;
    let mut header = [0u8; 8];
    file.read_exact(&mut header).map_err(|_| format_err("missing 8-byte header"))?;
    let limit = u64::from_le_bytes(header);
    check_limit(limit)?;
    let odd_count = limit.div_ceil(2);
    let mut bits = Vec::new();
    file.read_to_end(&mut bits)?;
    if bits.len() as u64 != odd_count.div_ceil(8) {
        return Err(format_err("bitmap length does not match the header limit"));
    }
    let mut primes = vec![2];
    for (byte_index, &byte) in bits.iter().enumerate() {
        let mut b = byte;
        while b != 0 {
            let bit = b.trailing_zeros() as u64;
            let i = byte_index as u64 * 8 + bit;
            if i >= odd_count {
                return Err(format_err("bit set beyond the header limit"));
            }
            primes.push(2 * i + 1);
            b &= b - 1;
        }
    }
    Ok(PrimeTable::from_parts(limit, primes))
}

/// Loads primes `≤ limit` from `path` when the cache covers them, otherwise
/// sieves and (re)writes the cache.
pub fn build_prime_table_cached(limit: u64, path: &Path) -> Result<PrimeTable> {
    check_limit(limit)?;
    if path.exists() {
        let cached = read_cache(path)?;
        if cached.limit() >= limit {
            return cached.truncated(limit);
        }
    }
    let table = build_prime_table(limit)?;
    write_cache(&table, path)?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cached_and_fresh_tables_agree() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sieve.bin");
        let fresh = build_prime_table(100_003).unwrap();
        let first = build_prime_table_cached(100_003, &path).unwrap();
        assert_eq!(first, fresh);
        let bytes = fs::read(&path).unwrap();
        assert_eq!(&bytes[..8], &100_003u64.to_le_bytes());
        assert_eq!(bytes.len(), 8 + 50_002usize.div_ceil(8));

        let smaller = build_prime_table_cached(5_000, &path).unwrap();
        assert_eq!(smaller, build_prime_table(5_000).unwrap());
    }

    #[test]
    fn bitmap_bit_layout() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("small.bin");
        write_cache(&build_prime_table(17).unwrap(), &path).unwrap();
        let bytes = fs::read(&path).unwrap();
        // odd numbers 1,3,5,...,15 -> bits 0..7; primes 3,5,7,11,13 -> bits 1,2,3,5,6
        assert_eq!(bytes[8], 0b0110_1110);
        // 17 -> bit 8
        assert_eq!(bytes[9], 0b0000_0001);
    }

    #[test]
    fn truncated_file_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("bad.bin");
        fs::write(&path, 1000u64.to_le_bytes()).unwrap();
        assert!(matches!(read_cache(&path), Err(Error::Format { .. })));
    }
}
