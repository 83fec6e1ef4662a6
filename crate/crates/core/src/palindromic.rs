//! Longest palindromic factor common to two strings.
//!
//! A common palindrome is a factor of a maximal palindrome of `x` and of one of
//! `y` with the same center. Taking the right half ("arm") of each maximal
//! palindrome, the answer for odd lengths is `2l - 1` and for even lengths
//! `2l`, where `l` is the longest common prefix of an `x` arm and a `y` arm of
//! that parity. Arms are ordered by the suffix array of `x#y`.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::suffix_array::{inverse, lcp_array, suffix_array};
use crate::text::{join_texts, JoinedText, Text};

/// Maximal palindrome `[start, end)` centered at `center2 / 2`; `radius2` is its length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaximalPalindrome {
    pub center2: usize,
    pub radius2: usize,
    pub start: usize,
    pub end: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Odd,
    Even,
}

/// Right half of a maximal palindrome: `t[start..=end]`, including the center
/// symbol for odd parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PalindromicArm {
    pub origin: usize,
    pub start: usize,
    pub end: usize,
    pub parity: Parity,
}

impl PalindromicArm {
    pub fn len(&self) -> usize {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Start and length of the palindrome obtained by mirroring the first `m` symbols.
    pub fn mirror(&self, m: usize) -> (usize, usize) {
        match self.parity {
            Parity::Odd => (self.start + 1 - m, 2 * m - 1),
            Parity::Even => (self.start - m, 2 * m),
        }
    }
}

/// All `2n - 1` maximal palindromes, ordered by center (Manacher).
pub fn maximal_palindromes(t: &Text) -> Vec<MaximalPalindrome> {
    let s = t.symbols();
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    // odd[i]: number of symbols in the right arm of the odd palindrome at i
    let mut odd = vec![0usize; n];
    let (mut l, mut r) = (0usize, 0usize);
    for i in 0..n {
        let mut k = if i < r {
            odd[l + r - 1 - i].min(r - i)
        } else {
            1
        };
        while i + k < n && i >= k && s[i + k] == s[i - k] {
            k += 1;
        }
        odd[i] = k;
        if i + k > r {
            l = i + 1 - k;
            r = i + k;
        }
    }
    // even[i]: half length of the even palindrome centered between i - 1 and i
    let mut even = vec![0usize; n];
    let (mut l, mut r) = (0usize, 0usize);
    for i in 1..n {
        let mut k = if i < r { even[l + r - i].min(r - i) } else { 0 };
        while i + k < n && i > k && s[i + k] == s[i - k - 1] {
            k += 1;
        }
        even[i] = k;
        if i + k > r {
            l = i - k;
            r = i + k;
        }
    }
    let mut out = Vec::with_capacity(2 * n - 1);
    for i in 0..n {
        if i > 0 {
            out.push(MaximalPalindrome {
                center2: 2 * i - 1,
                radius2: 2 * even[i],
                start: i - even[i],
                end: i + even[i],
            });
        }
        out.push(MaximalPalindrome {
            center2: 2 * i,
            radius2: 2 * odd[i] - 1,
            start: i + 1 - odd[i],
            end: i + odd[i],
        });
    }
    out
}

/// Arms of the given maximal palindromes; empty even palindromes are skipped.
pub fn collect_arms(origin: usize, pals: &[MaximalPalindrome]) -> Vec<PalindromicArm> {
    pals.iter()
        .filter(|p| p.radius2 > 0)
        .map(|p| {
            let (start, parity) = if p.center2 % 2 == 0 {
                (p.center2 / 2, Parity::Odd)
            } else {
                (p.center2.div_ceil(2), Parity::Even)
            };
            PalindromicArm {
                origin,
                start,
                end: p.end - 1,
                parity,
            }
        })
        .collect()
}

/// Suffix array, ranks and LCP of `x#y`.
#[derive(Clone, Debug)]
pub struct JoinedSuffixes {
    joined: JoinedText,
    sa: Vec<usize>,
    lcp: Vec<u32>,
}

impl JoinedSuffixes {
    pub fn new(x: &Text, y: &Text) -> Result<Self> {
        let joined = join_texts(&[x.clone(), y.clone()])?;
        let sa = suffix_array(joined.symbols());
        let rank = inverse(&sa);
        let lcp = lcp_array(joined.symbols(), &sa, &rank);
        Ok(JoinedSuffixes { joined, sa, lcp })
    }
}

/// Best cross-string pair for one parity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossLcp {
    pub length: usize,
    /// Indices into the `x` and `y` arm lists of a pair attaining `length`,
    /// choosing the earliest `x` arm.
    pub pair: Option<(usize, usize)>,
}

/// Longest common prefix over all pairs of one `x` arm and one `y` arm.
///
/// Arms are visited in suffix-array order. A forward and a backward sweep each
/// carry, for the current position, the best `min(|b|, LCP)` over `y` arms `b`
/// seen so far, which bounds every `x` arm met next. Arms of both lists must
/// share one parity.
pub fn max_cross_lcp(
    arms_x: &[PalindromicArm],
    arms_y: &[PalindromicArm],
    suffixes: &JoinedSuffixes,
) -> CrossLcp {
    let joined = &suffixes.joined;
    let n = joined.len();
    // slot per global position: (is_x, arm index)
    let mut at = vec![None; n];
    for (i, a) in arms_x.iter().enumerate() {
        at[joined.global(0, a.start)] = Some((true, i));
    }
    for (i, b) in arms_y.iter().enumerate() {
        at[joined.global(1, b.start)] = Some((false, i));
    }
    // entries in suffix order with the LCP to the previous entry
    let mut entries: Vec<(bool, usize, usize)> = Vec::with_capacity(arms_x.len() + arms_y.len());
    let mut gaps: Vec<usize> = Vec::with_capacity(entries.capacity());
    let mut gap = usize::MAX;
    for (r, &pos) in suffixes.sa.iter().enumerate() {
        gap = gap.min(suffixes.lcp[r] as usize);
        if let Some((is_x, i)) = at[pos] {
            let len = if is_x {
                arms_x[i].len()
            } else {
                arms_y[i].len()
            };
            entries.push((is_x, i, len));
            gaps.push(if entries.len() == 1 { 0 } else { gap });
            gap = usize::MAX;
        }
    }

    // best partner per x arm
    let mut per_x: Vec<(usize, usize)> = vec![(0, usize::MAX); arms_x.len()];
    let mut consider = |value: usize, xi: usize, yi: Option<usize>| {
        if let Some(yi) = yi {
            if value > per_x[xi].0 {
                per_x[xi] = (value, yi);
            }
        }
    };
    let mut carry = (0usize, None::<usize>);
    for (e, &(is_x, i, len)) in entries.iter().enumerate() {
        if e > 0 {
            carry.0 = carry.0.min(gaps[e]);
        }
        if is_x {
            consider(carry.0.min(len), i, carry.1);
        } else if len > carry.0 {
            carry = (len, Some(i));
        }
    }
    let mut carry = (0usize, None::<usize>);
    for e in (0..entries.len()).rev() {
        let (is_x, i, len) = entries[e];
        if e + 1 < entries.len() {
            carry.0 = carry.0.min(gaps[e + 1]);
        }
        if is_x {
            consider(carry.0.min(len), i, carry.1);
        } else if len > carry.0 {
            carry = (len, Some(i));
        }
    }
    let length = per_x.iter().map(|p| p.0).max().unwrap_or(0);
    let pair = (length > 0)
        .then(|| per_x.iter().position(|p| p.0 == length).unwrap())
        .map(|xi| (xi, per_x[xi].1));
    CrossLcp { length, pair }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PalindromeWitness {
    pub x_pos: usize,
    pub y_pos: usize,
    pub length: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LpalcfResult {
    pub length: usize,
    pub witness: Option<PalindromeWitness>,
}

pub fn lpalcf(x: &Text, y: &Text) -> Result<LpalcfResult> {
    lpalcf_with(x, y, Exec::default())
}

pub fn lpalcf_with(x: &Text, y: &Text, exec: Exec) -> Result<LpalcfResult> {
    if x.is_empty() {
        return Err(Error::EmptyText(0));
    }
    if y.is_empty() {
        return Err(Error::EmptyText(1));
    }
    let ((pals_x, pals_y), suffixes) = exec.join(
        || exec.join(|| maximal_palindromes(x), || maximal_palindromes(y)),
        || JoinedSuffixes::new(x, y),
    );
    let suffixes = suffixes?;
    let arms_x = collect_arms(0, &pals_x);
    let arms_y = collect_arms(1, &pals_y);

    let mut best: Option<(usize, PalindromeWitness)> = None;
    for parity in [Parity::Odd, Parity::Even] {
        let ax: Vec<_> = arms_x
            .iter()
            .copied()
            .filter(|a| a.parity == parity)
            .collect();
        let ay: Vec<_> = arms_y
            .iter()
            .copied()
            .filter(|a| a.parity == parity)
            .collect();
        let cross = max_cross_lcp(&ax, &ay, &suffixes);
        let Some((xi, yi)) = cross.pair else { continue };
        let m = cross.length;
        let (x_pos, length) = ax[xi].mirror(m);
        let (y_pos, _) = ay[yi].mirror(m);
        if best.is_none_or(|(l, _)| length > l) {
            best = Some((
                length,
                PalindromeWitness {
                    x_pos,
                    y_pos,
                    length,
                },
            ));
        }
    }
    Ok(match best {
        None => LpalcfResult {
            length: 0,
            witness: None,
        },
        Some((length, w)) => LpalcfResult {
            length,
            witness: Some(w),
        },
    })
}
