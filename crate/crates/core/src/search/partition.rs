//! The integer partition function and the PENT(2,r) count.

/// Largest `n` for which `partition_p` fits in an `i128` with headroom.
pub const PARTITION_MAX_N: i64 = 1400;

/// Number of partitions of `n` by Euler's pentagonal-number recurrence.
/// `p(n) = 0` for negative `n`.
///
/// # Panics
/// If `n > PARTITION_MAX_N`.
pub fn partition_p(n: i64) -> u128 {
    if n < 0 {
        return 0;
    }
    partition_table(n)[n as usize] as u128
}

fn partition_table(n: i64) -> Vec<i128> {
    assert!(n <= PARTITION_MAX_N, "partition_p({n}) exceeds the supported range 0..={PARTITION_MAX_N}");
    let n = n as usize;
    let mut p = vec![0i128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut sum = 0i128;
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let term = p[m - g1] + if g1 + j <= m { p[m - g1 - j] } else { 0 };
            if j % 2 == 1 { sum += term } else { sum -= term }
        }
        p[m] = sum;
    }
    p
}

/// Number of PENT(2,r) up to isomorphism:
/// `p(r+3) - p(r+2) - p(r+1) + p(r-1) + p(r-2) - p(r-3)`.
///
/// # Panics
/// If `r + 3 > PARTITION_MAX_N`.
pub fn pent2_count(r: usize) -> u128 {
    let r = r as i64;
    let p = |n: i64| partition_p(n) as i128;
    let value = p(r + 3) - p(r + 2) - p(r + 1) + p(r - 1) + p(r - 2) - p(r - 3);
    u128::try_from(value).expect("count of partitions is non-negative")
}
