//! Runs (maximal repetitions) and the square arrays built from them.
//!
//! Runs are found through Lyndon roots: under one of the two symbol orders,
//! every run contains a root that is the longest Lyndon word starting at its
//! position. Extending each candidate root by forward and backward
//! longest-common-extension queries recovers the run.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::suffix_array::{inverse, suffix_array, Lce};
use crate::text::Text;

/// Maximal periodicity `x[start..=end]` with smallest period `period`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Run {
    pub start: usize,
    pub end: usize,
    pub period: usize,
}

impl Run {
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// End of the leftmost square of the run.
    pub fn first_square_end(&self) -> usize {
        self.start + 2 * self.period - 1
    }
}

pub fn compute_runs(t: &Text) -> Vec<Run> {
    runs_of(t.symbols(), Exec::default())
}

pub fn compute_runs_with(t: &Text, exec: Exec) -> Vec<Run> {
    runs_of(t.symbols(), exec)
}

/// Runs sorted by `(start, end, period)`.
pub(crate) fn runs_of(s: &[u32], exec: Exec) -> Vec<Run> {
    let n = s.len();
    if n < 2 {
        return Vec::new();
    }
    let max = *s.iter().max().unwrap();
    let inverted: Vec<u32> = s.iter().map(|&c| max + 1 - c).collect();
    let reversed: Vec<u32> = s.iter().rev().copied().collect();

    let ((lyndon_a, lyndon_b), (forward, backward)) = exec.join(
        || exec.join(|| lyndon_array(s), || lyndon_array(&inverted)),
        || exec.join(|| Lce::new(s), || Lce::new(&reversed)),
    );

    let mut runs = Vec::new();
    for lyndon in [&lyndon_a, &lyndon_b] {
        for (i, &p) in lyndon.iter().enumerate() {
            let j = i + p;
            if j >= n {
                continue;
            }
            let ahead = forward.lce(i, j);
            // common suffix of x[..i] and x[..j]
            let behind = if i == 0 {
                0
            } else {
                backward.lce(n - j, n - i)
            };
            let start = i - behind;
            let end = j + ahead - 1;
            if end + 1 - start >= 2 * p {
                runs.push(Run {
                    start,
                    end,
                    period: p,
                });
            }
        }
    }
    runs.sort_unstable();
    runs.dedup();
    runs
}

/// Length of the longest Lyndon word starting at each position, via the
/// next smaller suffix.
fn lyndon_array(s: &[u32]) -> Vec<usize> {
    let n = s.len();
    let rank = inverse(&suffix_array(s));
    let mut out = vec![0; n];
    let mut stack: Vec<usize> = Vec::new();
    for i in (0..n).rev() {
        while stack.last().is_some_and(|&j| rank[j] > rank[i]) {
            stack.pop();
        }
        out[i] = stack.last().copied().unwrap_or(n) - i;
        stack.push(i);
    }
    out
}

/// Smallest period of `t[i..=j]`, from the border (failure) function.
pub fn smallest_period(t: &Text, i: usize, j: usize) -> Result<usize> {
    if i > j || j >= t.len() {
        return Err(Error::InvalidInterval { i, j, len: t.len() });
    }
    let f = &t.symbols()[i..=j];
    let mut border = vec![0usize; f.len()];
    for q in 1..f.len() {
        let mut b = border[q - 1];
        while b > 0 && f[q] != f[b] {
            b = border[b - 1];
        }
        if f[q] == f[b] {
            b += 1;
        }
        border[q] = b;
    }
    Ok(f.len() - border[f.len() - 1])
}

/// The arrays `C`, `S` and `L` of a text. Absent values are stored as
/// [`SquareArrays::infinity`], which is `n + 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareArrays {
    /// Shortest prefix of `x[i..]` ending with the leftmost square of a run starting after `i`.
    pub after: Vec<usize>,
    /// Length of the shortest square starting at `i`.
    pub start: Vec<usize>,
    /// Length of the longest square-free factor starting at `i`.
    pub longest: Vec<usize>,
    pub infinity: usize,
}

impl SquareArrays {
    pub fn new(t: &Text) -> Self {
        let n = t.len();
        let runs = compute_runs(t);
        let after = shortest_square_after_array(n, &runs);
        let start = shortest_square_start_array(n, &runs);
        let longest = longest_squarefree_start_array(&after, &start, n);
        SquareArrays {
            after,
            start,
            longest,
            infinity: n + 1,
        }
    }
}

/// `S[i] = min { 2p : run (l, r, p) with l <= i <= r - 2p + 1 }`, or `n + 1`.
///
/// Shortest squares are primitively rooted, hence leftmost-aligned squares of
/// some run. Runs are painted in increasing period; a skip list of unpainted
/// positions keeps the total work near-linear.
pub fn shortest_square_start_array(n: usize, runs: &[Run]) -> Vec<usize> {
    let inf = n + 1;
    let mut s = vec![inf; n];
    let mut order: Vec<&Run> = runs.iter().collect();
    order.sort_unstable_by_key(|r| r.period);
    // next[i]: smallest unpainted position >= i (n when none)
    let mut next: Vec<usize> = (0..=n).collect();
    fn find(next: &mut [usize], i: usize) -> usize {
        let mut root = i;
        while next[root] != root {
            root = next[root];
        }
        let mut cur = i;
        while next[cur] != root {
            let up = next[cur];
            next[cur] = root;
            cur = up;
        }
        root
    }
    for run in order {
        let last = run.end + 1 - 2 * run.period;
        let mut i = find(&mut next, run.start);
        while i <= last {
            s[i] = 2 * run.period;
            next[i] = i + 1;
            i = find(&mut next, i + 1);
        }
    }
    s
}

/// `C[i] = min over runs with l > i of (l + 2p - i)`, or `n + 1`.
///
/// Runs are bucketed by start; a right-to-left scan keeps the nearest
/// leftmost-square end among runs starting strictly after `i`.
pub fn shortest_square_after_array(n: usize, runs: &[Run]) -> Vec<usize> {
    let inf = n + 1;
    let mut end_by_start = vec![usize::MAX; n];
    for r in runs {
        let e = r.first_square_end() + 1;
        end_by_start[r.start] = end_by_start[r.start].min(e);
    }
    let mut c = vec![inf; n];
    let mut best = usize::MAX;
    for i in (0..n).rev() {
        if best != usize::MAX {
            c[i] = best - i;
        }
        best = best.min(end_by_start[i]);
    }
    c
}

/// `L[i] = n - i` when `C[i]` and `S[i]` are both absent, else `min(C[i], S[i]) - 1`.
pub fn longest_squarefree_start_array(after: &[usize], start: &[usize], n: usize) -> Vec<usize> {
    let inf = n + 1;
    after
        .iter()
        .zip(start)
        .enumerate()
        .map(|(i, (&c, &s))| {
            if c == inf && s == inf {
                n - i
            } else {
                c.min(s) - 1
            }
        })
        .collect()
}
