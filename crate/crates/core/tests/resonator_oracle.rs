use zeta_resonance::resonator::{enumerate_support, resonance_quotient_exact};
use zeta_resonance::tau::quotient_bruteforce;
use zeta_resonance::{build_prime_table, derive_params, Sign};

// Smallest prime factor of every n ≤ limit.
fn spf(limit: usize) -> Vec<usize> {
    let mut s = vec![0; limit + 1];
    for i in 2..=limit {
        if s[i] == 0 {
            for j in (i..=limit).step_by(i) {
                if s[j] == 0 {
                    s[j] = i;
                }
            }
        }
    }
    s
}

#[test]
fn support_matches_predicate_scan() {
    for (limit, h) in [(1_000u64, 1.2), (20_000, 0.6), (100_000, 0.35), (100_000, 1.5)] {
        let primes = build_prime_table(limit).unwrap();
        let params = derive_params(limit, h, Sign::Plus).unwrap();
        let support = enumerate_support(&params, &primes).unwrap();
        let s = spf(limit as usize);
        let mut expected = Vec::new();
        'n: for n in 1..=limit as usize {
            let mut m = n;
            let mut value = 1.0;
            while m > 1 {
                let p = s[m];
                m /= p;
                if m % p == 0 || !params.in_support_range(p as u64) {
                    continue 'n;
                }
                value *= params.prime_coefficient(p as u64);
            }
            expected.push((n as u64, value));
        }
        let got = support.entries();
        assert_eq!(got.len(), expected.len(), "L = {limit}, h = {h}");
        for (&(n, v), &(m, w)) in got.iter().zip(&expected) {
            assert_eq!(n, m);
            assert!((v - w).abs() <= 1e-13 * w.abs(), "f({n}) = {v} vs {w}");
        }
    }
}

#[test]
fn exact_quotient_matches_double_sum_across_parameters() {
    for limit in [1_000u64, 3_000, 30_000, 100_000] {
        let primes = build_prime_table(limit).unwrap();
        for h in [0.25, 0.6, 1.1, 2.0] {
            for sign in [Sign::Plus, Sign::Minus] {
                let params = derive_params(limit, h, sign).unwrap();
                let support = enumerate_support(&params, &primes).unwrap();
                let exact = resonance_quotient_exact(&support, &params).unwrap();
                let brute = quotient_bruteforce(&support, limit, h, &primes).unwrap();
                assert!(
                    (exact - brute).abs() <= 1e-10 * brute.abs(),
                    "L = {limit}, h = {h}, {sign}: {exact} vs {brute}"
                );
                assert_eq!(exact > 0.0, sign == Sign::Plus);
            }
        }
    }
}

#[test]
fn lower_cutoff_override_keeps_oracle_agreement() {
    let limit = 10_000;
    let primes = build_prime_table(limit).unwrap();
    let params = derive_params(limit, 0.8, Sign::Plus).unwrap().with_lower_cutoff(2.5);
    let support = enumerate_support(&params, &primes).unwrap();
    assert_eq!(support.get(3), params.prime_coefficient(3));
    assert_eq!(support.get(2), 0.0);
    let exact = resonance_quotient_exact(&support, &params).unwrap();
    let brute = quotient_bruteforce(&support, limit, 0.8, &primes).unwrap();
    assert!((exact - brute).abs() <= 1e-10 * brute.abs());
}

#[test]
fn imported_tables_need_the_double_sum() {
    let limit = 2_000;
    let primes = build_prime_table(limit).unwrap();
    let params = derive_params(limit, 0.8, Sign::Plus).unwrap();
    let support = enumerate_support(&params, &primes).unwrap();
    let mut text = Vec::new();
    support.write_text(&mut text).unwrap();
    let reread = zeta_resonance::CoefficientTable::read_text(&text[..], std::path::Path::new("mem")).unwrap();
    assert!(resonance_quotient_exact(&reread, &params).is_err());
    let a = quotient_bruteforce(&reread, limit, 0.8, &primes).unwrap();
    let b = resonance_quotient_exact(&support, &params).unwrap();
    assert!((a - b).abs() <= 1e-12 * b);
}
