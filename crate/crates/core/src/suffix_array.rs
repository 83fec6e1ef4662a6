//! Suffix arrays by induced sorting, Kasai LCP, and constant-ish time LCE.

const NONE: usize = usize::MAX;

/// Suffix array of `s`. A proper prefix sorts before its extensions.
pub fn suffix_array(s: &[u32]) -> Vec<usize> {
    if s.is_empty() {
        return Vec::new();
    }
    let max = *s.iter().max().unwrap() as usize;
    if max <= 2 * s.len() + 256 {
        let s: Vec<usize> = s.iter().map(|&c| c as usize).collect();
        sa_is(&s, max)
    } else {
        let mut distinct = s.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        let s: Vec<usize> = s
            .iter()
            .map(|c| distinct.binary_search(c).unwrap())
            .collect();
        sa_is(&s, distinct.len() - 1)
    }
}

/// SA-IS over symbols in `0..=upper`.
fn sa_is(s: &[usize], upper: usize) -> Vec<usize> {
    let n = s.len();
    match n {
        0 => return Vec::new(),
        1 => return vec![0],
        2 => return if s[0] < s[1] { vec![0, 1] } else { vec![1, 0] },
        _ => {}
    }
    if n < 10 {
        let mut sa: Vec<usize> = (0..n).collect();
        sa.sort_by(|&a, &b| s[a..].cmp(&s[b..]));
        return sa;
    }

    // ls[i]: suffix i is S-type
    let mut ls = vec![false; n];
    for i in (0..n - 1).rev() {
        ls[i] = if s[i] == s[i + 1] {
            ls[i + 1]
        } else {
            s[i] < s[i + 1]
        };
    }
    let mut sum_l = vec![0usize; upper + 2];
    let mut sum_s = vec![0usize; upper + 2];
    for i in 0..n {
        if !ls[i] {
            sum_s[s[i]] += 1;
        } else {
            sum_l[s[i] + 1] += 1;
        }
    }
    for i in 0..=upper {
        sum_s[i] += sum_l[i];
        if i < upper {
            sum_l[i + 1] += sum_s[i];
        }
    }

    let mut sa = vec![NONE; n];
    let induce = |sa: &mut Vec<usize>, lms: &[usize]| {
        sa.iter_mut().for_each(|v| *v = NONE);
        let mut buf = sum_s.clone();
        for &d in lms {
            if d == n {
                continue;
            }
            sa[buf[s[d]]] = d;
            buf[s[d]] += 1;
        }
        buf.copy_from_slice(&sum_l);
        sa[buf[s[n - 1]]] = n - 1;
        buf[s[n - 1]] += 1;
        for i in 0..n {
            let v = sa[i];
            if v != NONE && v >= 1 && !ls[v - 1] {
                sa[buf[s[v - 1]]] = v - 1;
                buf[s[v - 1]] += 1;
            }
        }
        buf.copy_from_slice(&sum_l);
        for i in (0..n).rev() {
            let v = sa[i];
            if v != NONE && v >= 1 && ls[v - 1] {
                buf[s[v - 1] + 1] -= 1;
                sa[buf[s[v - 1] + 1]] = v - 1;
            }
        }
    };

    let mut lms_map = vec![NONE; n + 1];
    let mut lms = Vec::new();
    for i in 1..n {
        if !ls[i - 1] && ls[i] {
            lms_map[i] = lms.len();
            lms.push(i);
        }
    }
    let m = lms.len();
    induce(&mut sa, &lms);

    if m > 0 {
        let sorted_lms: Vec<usize> = sa
            .iter()
            .copied()
            .filter(|&v| v != NONE && lms_map[v] != NONE)
            .collect();
        let mut rec_s = vec![0usize; m];
        let mut rec_upper = 0;
        rec_s[lms_map[sorted_lms[0]]] = 0;
        for i in 1..m {
            let mut l = sorted_lms[i - 1];
            let mut r = sorted_lms[i];
            let end_l = if lms_map[l] + 1 < m {
                lms[lms_map[l] + 1]
            } else {
                n
            };
            let end_r = if lms_map[r] + 1 < m {
                lms[lms_map[r] + 1]
            } else {
                n
            };
            let mut same = true;
            if end_l - l != end_r - r {
                same = false;
            } else {
                while l < end_l {
                    if s[l] != s[r] {
                        break;
                    }
                    l += 1;
                    r += 1;
                }
                if l == n || s[l] != s[r] {
                    same = false;
                }
            }
            if !same {
                rec_upper += 1;
            }
            rec_s[lms_map[sorted_lms[i]]] = rec_upper;
        }
        let rec_sa = sa_is(&rec_s, rec_upper);
        let sorted: Vec<usize> = rec_sa.iter().map(|&i| lms[i]).collect();
        induce(&mut sa, &sorted);
    }
    sa
}

pub fn inverse(sa: &[usize]) -> Vec<usize> {
    let mut rank = vec![0; sa.len()];
    for (r, &p) in sa.iter().enumerate() {
        rank[p] = r;
    }
    rank
}

/// `lcp[r]` is the longest common prefix of suffixes `sa[r - 1]` and `sa[r]`; `lcp[0] = 0`.
pub fn lcp_array(s: &[u32], sa: &[usize], rank: &[usize]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i];
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1];
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

const BLOCK: usize = 32;

/// Range minimum: sparse table over block minima, linear scan inside blocks.
#[derive(Clone, Debug)]
pub struct RangeMin {
    values: Vec<u32>,
    table: Vec<Vec<u32>>,
}

impl RangeMin {
    pub fn new(values: Vec<u32>) -> Self {
        let blocks: Vec<u32> = values
            .chunks(BLOCK)
            .map(|c| *c.iter().min().unwrap())
            .collect();
        let mut table = vec![blocks];
        let mut width = 1;
        while 2 * width <= table[0].len() {
            let prev = table.last().unwrap();
            let next: Vec<u32> = (0..prev.len() - width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            table.push(next);
            width *= 2;
        }
        RangeMin { values, table }
    }

    /// Minimum of `values[lo..hi]`; `hi > lo`.
    pub fn min(&self, lo: usize, hi: usize) -> u32 {
        debug_assert!(lo < hi && hi <= self.values.len());
        let (bl, bh) = (lo / BLOCK, (hi - 1) / BLOCK);
        if bh - bl <= 1 {
            return *self.values[lo..hi].iter().min().unwrap();
        }
        let head = *self.values[lo..(bl + 1) * BLOCK].iter().min().unwrap();
        let tail = *self.values[bh * BLOCK..hi].iter().min().unwrap();
        let (a, b) = (bl + 1, bh);
        let level = (usize::BITS - 1 - (b - a).leading_zeros()) as usize;
        let mid = self.table[level][a].min(self.table[level][b - (1 << level)]);
        head.min(tail).min(mid)
    }
}

/// Longest-common-extension queries on a fixed string.
#[derive(Clone, Debug)]
pub struct Lce {
    rank: Vec<usize>,
    rmq: RangeMin,
}

impl Lce {
    pub fn new(s: &[u32]) -> Self {
        let sa = suffix_array(s);
        let rank = inverse(&sa);
        let lcp = lcp_array(s, &sa, &rank);
        Lce {
            rank,
            rmq: RangeMin::new(lcp),
        }
    }

    pub fn len(&self) -> usize {
        self.rank.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rank.is_empty()
    }

    /// Length of the longest common prefix of the suffixes at `i` and `j`.
    pub fn lce(&self, i: usize, j: usize) -> usize {
        let n = self.len();
        if i == j {
            return n - i;
        }
        if i >= n || j >= n {
            return 0;
        }
        let (a, b) = (
            self.rank[i].min(self.rank[j]),
            self.rank[i].max(self.rank[j]),
        );
        self.rmq.min(a + 1, b + 1) as usize
    }
}
