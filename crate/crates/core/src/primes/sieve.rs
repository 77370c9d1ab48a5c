use rayon::prelude::*;

/// Odd integers per segment.
pub(crate) const SEGMENT_LEN: u64 = 1 << 20;

fn simple_sieve(limit: u64) -> Vec<u64> {
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Primes `≤ limit` from an odd-only segmented sieve.
pub(crate) fn segmented(limit: u64) -> Vec<u64> {
    let root = limit.isqrt();
    let base: Vec<u64> = simple_sieve(root).into_iter().filter(|&p| p > 2).collect();
    // index i stands for the odd number 2i + 1
    let odd_count = limit.div_ceil(2);
    let segments = odd_count.div_ceil(SEGMENT_LEN);

    let blocks: Vec<Vec<u64>> = (0..segments)
        .into_par_iter()
        .map(|s| {
            let start = s * SEGMENT_LEN;
            let end = (start + SEGMENT_LEN).min(odd_count);
            let mut composite = vec![false; (end - start) as usize];
            for &p in &base {
                let first = p * p;
                if first > 2 * end - 1 {
                    break;
                }
                let lo_num = 2 * start + 1;
                let mut m = if first >= lo_num { first } else { lo_num.div_ceil(p) * p };
                if m % 2 == 0 {
                    m += p;
                }
                let mut j = (m - 1) / 2;
                while j < end {
                    composite[(j - start) as usize] = true;
                    j += p;
                }
            }
            composite
                .iter()
                .enumerate()
                .filter(|&(_, &c)| !c)
                .map(|(k, _)| 2 * (start + k as u64) + 1)
                .filter(|&n| n > 1)
                .collect()
        })
        .collect();

    let mut primes = Vec::with_capacity(blocks.iter().map(Vec::len).sum::<usize>() + 1);
    if limit >= 2 {
        primes.push(2);
    }
    for b in blocks {
        primes.extend(b);
    }
    primes
}
