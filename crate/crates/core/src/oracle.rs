//! Brute-force reference answers, written straight from the definitions.
//!
//! Nothing here touches suffix structures, runs machinery or any helper of the
//! main algorithms. Inputs are capped because the costs are polynomial of
//! high degree.

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::repetitions::Run;

pub const DEFAULT_CAP: usize = 256;

fn check_cap(len: usize, cap: usize) -> Result<()> {
    if len > cap {
        Err(Error::OracleCapExceeded { len, cap })
    } else {
        Ok(())
    }
}

fn has_period(f: &[u32], p: usize) -> bool {
    (0..f.len().saturating_sub(p)).all(|a| f[a] == f[a + p])
}

fn naive_period(f: &[u32]) -> usize {
    (1..=f.len()).find(|&p| has_period(f, p)).unwrap_or(0)
}

fn occurs(hay: &[u32], needle: &[u32]) -> bool {
    needle.is_empty() || hay.windows(needle.len()).any(|w| w == needle)
}

fn is_square_free(f: &[u32]) -> bool {
    (0..f.len()).all(|i| (1..=(f.len() - i) / 2).all(|h| f[i..i + h] != f[i + h..i + 2 * h]))
}

/// All runs: every `(start, period)` extended maximally to the right, kept
/// when it is left-maximal, spans two periods, and `period` is the smallest
/// period of the interval.
pub fn brute_runs(t: &[u32], cap: usize) -> Result<Vec<Run>> {
    check_cap(t.len(), cap)?;
    let n = t.len();
    let mut runs = Vec::new();
    for start in 0..n {
        for period in 1..=(n - start) / 2 {
            let mut end = start + period - 1;
            while end + 1 < n && t[end + 1] == t[end + 1 - period] {
                end += 1;
            }
            let len = end + 1 - start;
            if len < 2 * period {
                continue;
            }
            if start > 0 && t[start - 1] == t[start - 1 + period] {
                continue;
            }
            if naive_period(&t[start..=end]) != period {
                continue;
            }
            runs.push(Run { start, end, period });
        }
    }
    runs.sort_unstable();
    Ok(runs)
}

/// Longest factor of `x` that is square-free and occurs in `y`.
pub fn brute_longest_common_squarefree(x: &[u32], y: &[u32], cap: usize) -> Result<usize> {
    check_cap(x.len().max(y.len()), cap)?;
    let mut best = 0;
    for i in 0..x.len() {
        for j in i + 1..=x.len() {
            let f = &x[i..j];
            if !is_square_free(f) {
                break;
            }
            if f.len() > best && occurs(y, f) {
                best = f.len();
            }
        }
    }
    Ok(best)
}

/// Longest factor with smallest period at most half its length occurring in
/// at least `k_prime` of the strings.
pub fn brute_lpcf(texts: &[&[u32]], k_prime: usize, cap: usize) -> Result<usize> {
    for t in texts {
        check_cap(t.len(), cap)?;
    }
    let mut owners: HashMap<&[u32], HashSet<usize>> = HashMap::new();
    for (id, t) in texts.iter().enumerate() {
        for i in 0..t.len() {
            for j in i + 2..=t.len() {
                owners.entry(&t[i..j]).or_default().insert(id);
            }
        }
    }
    Ok(owners
        .into_iter()
        .filter(|(f, ids)| ids.len() >= k_prime && 2 * naive_period(f) <= f.len())
        .map(|(f, _)| f.len())
        .max()
        .unwrap_or(0))
}

/// Longest factor of `x` equal to its reversal that also occurs in `y`.
pub fn brute_lpalcf(x: &[u32], y: &[u32], cap: usize) -> Result<usize> {
    check_cap(x.len().max(y.len()), cap)?;
    let mut best = 0;
    for i in 0..x.len() {
        for j in i + 1..=x.len() {
            let f = &x[i..j];
            if f.len() > best && f.iter().eq(f.iter().rev()) && occurs(y, f) {
                best = f.len();
            }
        }
    }
    Ok(best)
}
