//! Test-only oracles. Nothing here calls into the strip or bijection code,
//! so agreement with the library is evidence rather than tautology.

#![allow(dead_code)]

use kstrips::Partition;
use rand::Rng;

pub fn p(parts: &[u64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Conjugate by counting cells row by row of the Ferrers diagram.
pub fn conjugate_by_cells(parts: &[u64]) -> Vec<u64> {
    let largest = parts.first().copied().unwrap_or(0);
    (1..=largest)
        .map(|row| parts.iter().filter(|&&x| x >= row).count() as u64)
        .collect()
}

/// Closed-form strip decomposition: the gap at position `i` contributes
/// `gap mod k` to the remainder and `floor(gap / k)` strips of length `i`.
pub fn decompose_by_gaps(parts: &[u64], k: u64) -> (Vec<u64>, Vec<u64>) {
    let m = parts.len();
    let gap = |i: usize| parts[i] - parts.get(i + 1).copied().unwrap_or(0);
    let mut pi = vec![0u64; m];
    let mut acc = 0;
    for i in (0..m).rev() {
        acc += gap(i) % k;
        pi[i] = acc;
    }
    while pi.last() == Some(&0) {
        pi.pop();
    }
    let mut delta = Vec::new();
    for i in (0..m).rev() {
        for _ in 0..gap(i) / k {
            delta.push(k * (i as u64 + 1));
        }
    }
    delta.sort_unstable_by(|a, b| b.cmp(a));
    (pi, delta)
}

/// Forward map evaluated from the definitions with the closed-form split.
pub fn forward_by_gaps(lambda: &[u64], k: u64) -> Vec<u64> {
    let conj = conjugate_by_cells(lambda);
    let (pi, delta) = decompose_by_gaps(&conj, k);
    let len = pi.len().max(delta.len());
    let alpha: Vec<u64> = (0..len)
        .map(|i| pi.get(i).copied().unwrap_or(0) + delta.get(i).copied().unwrap_or(0))
        .collect();
    conjugate_by_cells(&alpha)
}

/// Inverse by gap splitting: `δ_i = k·Σ_{t>=i} floor(mult_t(β)/k)`,
/// `π_i = β'_i - δ_i`, then each strip of length `L = δ_j/k` adds `k` to
/// parts `1..=L`.
pub fn inverse_by_gaps(beta: &[u64], k: u64) -> Vec<u64> {
    let alpha = conjugate_by_cells(beta);
    let mult = |t: u64| beta.iter().filter(|&&x| x == t).count() as u64;
    let len = alpha.len();
    let delta: Vec<u64> = (1..=len as u64)
        .map(|i| k * (i..=len as u64).map(|t| mult(t) / k).sum::<u64>())
        .collect();
    let pi: Vec<u64> = alpha.iter().zip(&delta).map(|(a, d)| a - d).collect();
    let lengths: Vec<usize> = delta.iter().filter(|&&d| d > 0).map(|&d| (d / k) as usize).collect();
    let width = pi.len().max(lengths.iter().copied().max().unwrap_or(0));
    let mut lambda_conj: Vec<u64> = (0..width)
        .map(|i| {
            pi.get(i).copied().unwrap_or(0) + k * lengths.iter().filter(|&&l| l > i).count() as u64
        })
        .collect();
    while lambda_conj.last() == Some(&0) {
        lambda_conj.pop();
    }
    conjugate_by_cells(&lambda_conj)
}

pub fn multiplicities(parts: &[u64]) -> Vec<(u64, u64)> {
    let mut out: Vec<(u64, u64)> = Vec::new();
    for &x in parts {
        match out.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Recursive partition count, independent of the enumerator and the series.
pub fn partition_count(n: u64) -> u64 {
    fn go(n: u64, max: u64, memo: &mut std::collections::HashMap<(u64, u64), u64>) -> u64 {
        if n == 0 {
            return 1;
        }
        if let Some(&v) = memo.get(&(n, max)) {
            return v;
        }
        let v = (1..=max.min(n)).map(|first| go(n - first, first, memo)).sum();
        memo.insert((n, max), v);
        v
    }
    go(n, n, &mut Default::default())
}

/// A random partition: up to `max_len` parts drawn from `1..=max_part`.
pub fn random_partition<R: Rng>(rng: &mut R, max_len: usize, max_part: u64) -> Partition {
    let len = rng.random_range(0..=max_len);
    let mut parts: Vec<u64> = (0..len).map(|_| rng.random_range(1..=max_part)).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(parts).unwrap()
}

/// A random partition with every multiplicity at most `2k - 1`.
pub fn random_bounded_partition<R: Rng>(rng: &mut R, k: u64, max_part: u64) -> Partition {
    let mut parts = Vec::new();
    for value in (1..=max_part).rev() {
        if rng.random_bool(0.5) {
            let m = rng.random_range(1..=2 * k - 1);
            parts.extend(std::iter::repeat_n(value, m as usize));
        }
    }
    Partition::new(parts).unwrap()
}

/// A random partition where a part repeated `k` or more times forces every
/// smaller value to appear at least `2k` times.
pub fn random_strong_partition<R: Rng>(rng: &mut R, k: u64, max_part: u64) -> Partition {
    let top = rng.random_range(0..=max_part.min(8));
    let mut parts = Vec::new();
    for value in (1..=max_part).rev() {
        let m = if value > top {
            if rng.random_bool(0.5) { rng.random_range(0..k) } else { 0 }
        } else if value == top {
            rng.random_range(k..=3 * k)
        } else {
            rng.random_range(2 * k..=4 * k)
        };
        parts.extend(std::iter::repeat_n(value, m as usize));
    }
    Partition::new(parts).unwrap()
}
