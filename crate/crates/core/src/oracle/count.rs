//! Closed-form counts of connected graphs, used to cross-check enumeration.
//!
//! Labeled: `c(n) = 2^C(n,2) - sum_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2)`.
//! Unlabeled: all graphs by Burnside over vertex-permutation cycle types,
//! then connected graphs by inverting the Euler transform.

use super::{Mode, OracleError};

const MAX_RECOUNT_N: usize = 12;

fn pairs(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn labeled_connected(n: usize) -> Vec<i128> {
    let mut c = vec![0i128; n + 1];
    for m in 1..=n {
        let mut v = 1i128 << pairs(m);
        for (k, &ck) in c.iter().enumerate().take(m).skip(1) {
            v -= binomial(m - 1, k - 1) as i128 * ck * (1i128 << pairs(m - k));
        }
        c[m] = v;
    }
    c
}

/// (part, multiplicity) pairs, parts strictly decreasing.
type Partition = [(usize, usize)];

/// Visits every partition of `n`.
fn partitions(n: usize, max_part: usize, acc: &mut Vec<(usize, usize)>, visit: &mut dyn FnMut(&Partition)) {
    if n == 0 {
        visit(acc);
        return;
    }
    for part in (1..=max_part.min(n)).rev() {
        for mult in (1..=n / part).rev() {
            acc.push((part, mult));
            partitions(n - part * mult, part - 1, acc, visit);
            acc.pop();
        }
    }
}

/// Number of unlabeled graphs (connected or not) on `n` vertices.
pub fn unlabeled_graph_count(n: usize) -> u128 {
    if n == 0 {
        return 1;
    }
    let factorial: u128 = (1..=n as u128).product();
    let mut total = 0u128;
    partitions(n, n, &mut Vec::new(), &mut |parts| {
        // cycles of the induced permutation on vertex pairs
        let mut cycles = 0usize;
        for (i, &(a, ma)) in parts.iter().enumerate() {
            cycles += ma * (a / 2) + a * ma * (ma - 1) / 2;
            for &(b, mb) in &parts[i + 1..] {
                cycles += ma * mb * gcd(a, b);
            }
        }
        let centralizer: u128 = parts
            .iter()
            .map(|&(a, ma)| (a as u128).pow(ma as u32) * (1..=ma as u128).product::<u128>())
            .product();
        total += (factorial / centralizer) << cycles;
    });
    total / factorial
}

fn mobius(n: usize) -> i128 {
    let mut m = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if m > 1 {
        result = -result;
    }
    result
}

fn unlabeled_connected(n: usize) -> Vec<i128> {
    let a: Vec<i128> = (0..=n).map(|k| unlabeled_graph_count(k) as i128).collect();
    let mut c = vec![0i128; n + 1];
    for m in 1..=n {
        c[m] = m as i128 * a[m] - (1..m).map(|k| c[k] * a[m - k]).sum::<i128>();
    }
    (0..=n)
        .map(|m| {
            if m == 0 {
                return 0;
            }
            let s: i128 = (1..=m).filter(|d| m % d == 0).map(|d| mobius(m / d) * c[d]).sum();
            s / m as i128
        })
        .collect()
}

/// Number of connected graphs on `n` vertices, computed without enumerating.
pub fn recount_connected(n: usize, mode: Mode) -> Result<u64, OracleError> {
    if n == 0 || n > MAX_RECOUNT_N {
        return Err(OracleError::OutOfRange { n, mode, max: MAX_RECOUNT_N });
    }
    let counts = match mode {
        Mode::Labeled => labeled_connected(n),
        Mode::Unlabeled => unlabeled_connected(n),
    };
    Ok(counts[n] as u64)
}
