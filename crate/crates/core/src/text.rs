//! Input texts and multi-string concatenation.
//!
//! A [`Text`] is a sequence of integer symbols. Symbol `0` is reserved: the
//! joined representation used by the suffix structures places its separators
//! below every input symbol, so no input may contain it.

use std::collections::BTreeMap;

use crate::error::{Error, Result};

pub type Symbol = u32;

/// Symbol value rejected in every input.
pub const RESERVED: Symbol = 0;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum NewlinePolicy {
    /// Drop exactly one trailing `\n`, if present.
    #[default]
    StripOne,
    Keep,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct LoadOptions {
    /// Remap symbols onto `1..=sigma` preserving their order.
    pub dense: bool,
    pub newline: NewlinePolicy,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Text {
    symbols: Vec<Symbol>,
    sigma: usize,
    wide: bool,
}

/// Validates raw bytes as a text. Byte `0x00` is rejected.
pub fn load_text(raw: &[u8]) -> Result<Text> {
    Text::from_bytes(raw)
}

/// Like [`load_text`], applying the newline policy and optional dense remap.
pub fn load_text_with(raw: &[u8], opts: &LoadOptions) -> Result<Text> {
    let raw = match opts.newline {
        NewlinePolicy::StripOne => raw.strip_suffix(b"\n").unwrap_or(raw),
        NewlinePolicy::Keep => raw,
    };
    let text = Text::from_bytes(raw)?;
    Ok(if opts.dense { text.densify() } else { text })
}

impl Text {
    pub fn from_bytes(raw: &[u8]) -> Result<Self> {
        let symbols: Vec<Symbol> = raw.iter().map(|&b| b as Symbol).collect();
        Self::validated(symbols, false)
    }

    /// 32-bit symbol mode, for alphabets larger than a byte.
    pub fn from_symbols(symbols: &[Symbol]) -> Result<Self> {
        Self::validated(symbols.to_vec(), true)
    }

    fn validated(symbols: Vec<Symbol>, wide: bool) -> Result<Self> {
        if let Some(position) = symbols.iter().position(|&c| c == RESERVED) {
            return Err(Error::ReservedSymbol {
                position,
                value: RESERVED,
            });
        }
        let sigma = distinct_count(&symbols);
        Ok(Text {
            symbols,
            sigma,
            wide,
        })
    }

    /// Order-preserving remap onto `1..=sigma`.
    pub fn densify(&self) -> Text {
        let mut distinct: Vec<Symbol> = self.symbols.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let symbols = self
            .symbols
            .iter()
            .map(|c| distinct.binary_search(c).unwrap() as Symbol + 1)
            .collect();
        Text {
            symbols,
            sigma: distinct.len(),
            wide: self.wide,
        }
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn is_wide(&self) -> bool {
        self.wide
    }

    /// Bytes of a byte-mode text; `None` in 32-bit mode.
    pub fn to_bytes(&self) -> Option<Vec<u8>> {
        if self.wide {
            return None;
        }
        Some(self.symbols.iter().map(|&c| c as u8).collect())
    }

    /// Human-readable rendering of `self[start..start + len]`.
    pub fn render(&self, start: usize, len: usize) -> String {
        let part = &self.symbols[start..start + len];
        if self.wide {
            part.iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        } else {
            let bytes: Vec<u8> = part.iter().map(|&c| c as u8).collect();
            String::from_utf8_lossy(&bytes).into_owned()
        }
    }
}

fn distinct_count(symbols: &[Symbol]) -> usize {
    if symbols.iter().all(|&c| c < 256) {
        let mut seen = [false; 256];
        symbols.iter().for_each(|&c| seen[c as usize] = true);
        seen.iter().filter(|&&b| b).count()
    } else {
        let mut counts = BTreeMap::new();
        symbols
            .iter()
            .for_each(|&c| *counts.entry(c).or_insert(0usize) += 1);
        counts.len()
    }
}

/// `k` texts concatenated, each followed by its own separator.
///
/// Separators take values `0..k` (string `j` gets `k - 1 - j`, so the final
/// separator is the global minimum) and every input symbol `c` is stored as
/// `c + k - 1`. Suffixes from different strings therefore never compare equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinedText {
    symbols: Vec<Symbol>,
    /// `starts[j]` is the global position of string `j`; `starts[k]` the total length.
    starts: Vec<usize>,
    shift: Symbol,
}

pub fn join_texts(texts: &[Text]) -> Result<JoinedText> {
    JoinedText::new(texts)
}

impl JoinedText {
    pub fn new(texts: &[Text]) -> Result<Self> {
        let k = texts.len();
        if k == 0 {
            return Err(Error::NoTexts);
        }
        let total = texts.iter().map(Text::len).sum::<usize>() + k;
        if total >= u32::MAX as usize {
            return Err(Error::TooLong(total));
        }
        let shift = (k - 1) as u64;
        let max = texts
            .iter()
            .flat_map(|t| t.symbols().iter().copied())
            .max()
            .unwrap_or(1) as u64;
        if k as u64 > u32::MAX as u64 || max + shift > u32::MAX as u64 {
            return Err(Error::SeparatorOverflow { k });
        }
        let shift = shift as Symbol;
        let mut symbols = Vec::with_capacity(total);
        let mut starts = Vec::with_capacity(k + 1);
        for (j, t) in texts.iter().enumerate() {
            starts.push(symbols.len());
            symbols.extend(t.symbols().iter().map(|&c| c + shift));
            symbols.push((k - 1 - j) as Symbol);
        }
        starts.push(symbols.len());
        Ok(JoinedText {
            symbols,
            starts,
            shift,
        })
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Number of joined strings.
    pub fn k(&self) -> usize {
        self.starts.len() - 1
    }

    /// Maps an input symbol into the joined encoding.
    pub fn encode(&self, c: Symbol) -> Symbol {
        c + self.shift
    }

    pub fn is_separator(&self, pos: usize) -> bool {
        self.symbols[pos] <= self.shift
    }

    pub fn string_start(&self, string: usize) -> usize {
        self.starts[string]
    }

    /// Length of string `string`, separator excluded.
    pub fn string_len(&self, string: usize) -> usize {
        self.starts[string + 1] - self.starts[string] - 1
    }

    /// Position of the separator that terminates `string`.
    pub fn separator_of(&self, string: usize) -> usize {
        self.starts[string + 1] - 1
    }

    pub fn global(&self, string: usize, local: usize) -> usize {
        self.starts[string] + local
    }

    /// String id owning `pos` (separators belong to the string they end).
    pub fn string_of(&self, pos: usize) -> usize {
        self.starts.partition_point(|&s| s <= pos) - 1
    }

    /// `(string id, local position)` for non-separator positions.
    pub fn origin(&self, pos: usize) -> Option<(usize, usize)> {
        if pos >= self.len() || self.is_separator(pos) {
            return None;
        }
        let j = self.string_of(pos);
        Some((j, pos - self.starts[j]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Text {
        load_text(s.as_bytes()).unwrap()
    }

    #[test]
    fn example_text_loads() {
        let x = t("aababaababb");
        assert_eq!(x.len(), 11);
        assert_eq!(x.sigma(), 2);
        assert!(t("").is_empty());
    }

    #[test]
    fn reserved_byte_rejected_at_first_offender() {
        let err = load_text(b"ab\0c\0").unwrap_err();
        assert_eq!(
            err,
            Error::ReservedSymbol {
                position: 2,
                value: 0
            }
        );
        assert!(Text::from_symbols(&[5, 0]).is_err());
    }

    #[test]
    fn newline_policy() {
        let strip = LoadOptions::default();
        assert_eq!(load_text_with(b"ab\n\n", &strip).unwrap().len(), 3);
        let keep = LoadOptions {
            newline: NewlinePolicy::Keep,
            ..Default::default()
        };
        assert_eq!(load_text_with(b"ab\n", &keep).unwrap().len(), 3);
    }

    #[test]
    fn dense_remap_keeps_order() {
        let x = Text::from_symbols(&[900, 7, 900, 40]).unwrap().densify();
        assert_eq!(x.symbols(), &[3, 1, 3, 2]);
        assert_eq!(x.sigma(), 3);
    }

    #[test]
    fn load_is_idempotent() {
        let x = t("abracadabra");
        let again = load_text(&x.to_bytes().unwrap()).unwrap();
        assert_eq!(x, again);
    }

    #[test]
    fn join_two_short() {
        let j = join_texts(&[t("ab"), t("ba")]).unwrap();
        assert_eq!(j.len(), 6);
        assert_eq!(j.k(), 2);
        assert_eq!(j.origin(0), Some((0, 0)));
        assert_eq!(j.origin(1), Some((0, 1)));
        assert_eq!(j.origin(2), None);
        assert_eq!(j.origin(3), Some((1, 0)));
        assert_eq!(j.origin(4), Some((1, 1)));
        assert_eq!(j.origin(5), None);
        assert_eq!(j.separator_of(0), 2);
    }

    #[test]
    fn join_example_pair() {
        let j = join_texts(&[t("ababbabba"), t("ababaab")]).unwrap();
        assert_eq!(j.len(), 18);
        assert_eq!(j.k(), 2);
    }

    #[test]
    fn separators_are_distinct_and_below_letters() {
        let j = join_texts(&[t("a"), t(""), t("b")]).unwrap();
        let seps: Vec<_> = (0..j.len()).filter(|&p| j.is_separator(p)).collect();
        assert_eq!(seps, vec![1, 2, 4]);
        let vals: Vec<_> = seps.iter().map(|&p| j.symbols()[p]).collect();
        assert_eq!(vals, vec![2, 1, 0]);
    }

    #[test]
    fn separator_overflow() {
        let x = Text::from_symbols(&[u32::MAX]).unwrap();
        assert_eq!(
            join_texts(&[x.clone(), x]).unwrap_err(),
            Error::SeparatorOverflow { k: 2 }
        );
    }

    #[test]
    fn no_texts() {
        assert_eq!(join_texts(&[]).unwrap_err(), Error::NoTexts);
    }
}
