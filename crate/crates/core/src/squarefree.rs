//! Square-free-preserved matching statistics.
//!
//! The index over `x` is its suffix tree plus `L`, the longest square-free
//! factor starting at each position. For a query `y` with matching statistic
//! `(l, p)` at `j`, the answer is `min(l, L[p])`: every factor of a
//! square-free string is square-free, and `L[p]` is the same for every
//! occurrence of the matched string.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::repetitions::SquareArrays;
use crate::suffix_index::{build_suffix_tree, matching_statistics, SuffixTree};
use crate::text::Text;

#[derive(Clone, Debug)]
pub struct SqmsIndex {
    tree: SuffixTree,
    arrays: SquareArrays,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SqmsWitness {
    pub x_pos: usize,
    pub y_pos: usize,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SqmsResult {
    pub values: Vec<usize>,
    pub best_length: usize,
    /// Leftmost query position attaining `best_length`; `None` when it is 0.
    pub witness: Option<SqmsWitness>,
}

pub fn build_sqms_index(x: &Text) -> Result<SqmsIndex> {
    SqmsIndex::build(x)
}

pub fn sqms_query(idx: &SqmsIndex, y: &Text) -> SqmsResult {
    idx.query(y)
}

impl SqmsIndex {
    pub fn build(x: &Text) -> Result<Self> {
        if x.is_empty() {
            return Err(Error::EmptyText(0));
        }
        let (tree, arrays) = Exec::default().join(|| build_suffix_tree(x), || SquareArrays::new(x));
        Ok(SqmsIndex { tree, arrays })
    }

    pub fn len(&self) -> usize {
        self.arrays.longest.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn tree(&self) -> &SuffixTree {
        &self.tree
    }

    pub fn square_arrays(&self) -> &SquareArrays {
        &self.arrays
    }

    /// `L`: longest square-free factor starting at each position of `x`.
    pub fn longest_squarefree(&self) -> &[usize] {
        &self.arrays.longest
    }

    pub fn query(&self, y: &Text) -> SqmsResult {
        let ms = matching_statistics(&self.tree, y);
        let longest = &self.arrays.longest;
        let values: Vec<usize> = ms
            .iter()
            .map(|e| {
                if e.length == 0 {
                    0
                } else {
                    e.length.min(longest[e.position])
                }
            })
            .collect();
        let best_length = values.iter().copied().max().unwrap_or(0);
        let witness = (best_length > 0).then(|| {
            let y_pos = values.iter().position(|&v| v == best_length).unwrap();
            SqmsWitness {
                x_pos: ms[y_pos].position,
                y_pos,
                length: best_length,
            }
        });
        SqmsResult {
            values,
            best_length,
            witness,
        }
    }

    /// Independent queries against one index.
    pub fn query_batch(&self, ys: &[Text], exec: Exec) -> Vec<SqmsResult> {
        exec.map(ys, |y| self.query(y))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::load_text;

    fn t(s: &str) -> Text {
        load_text(s.as_bytes()).unwrap()
    }

    #[test]
    fn example_query() {
        let idx = SqmsIndex::build(&t("aababaababb")).unwrap();
        assert_eq!(idx.longest_squarefree(), &[1, 3, 3, 3, 2, 1, 3, 3, 2, 1, 1]);
        let res = idx.query(&t("babababbaaab"));
        assert_eq!(res.values, vec![3, 3, 3, 3, 3, 2, 1, 2, 1, 1, 2, 1]);
        assert_eq!(res.best_length, 3);
        let w = res.witness.unwrap();
        assert_eq!((w.x_pos, w.y_pos, w.length), (2, 0, 3));
    }

    #[test]
    fn single_symbol_index() {
        let idx = SqmsIndex::build(&t("a")).unwrap();
        assert_eq!(idx.longest_squarefree(), &[1]);
    }

    #[test]
    fn no_shared_symbol() {
        let idx = SqmsIndex::build(&t("aab")).unwrap();
        let res = idx.query(&t("cdc"));
        assert_eq!(res.values, vec![0, 0, 0]);
        assert_eq!(res.best_length, 0);
        assert!(res.witness.is_none());
    }

    #[test]
    fn empty_query_and_empty_index() {
        let idx = SqmsIndex::build(&t("ab")).unwrap();
        let res = idx.query(&t(""));
        assert!(res.values.is_empty());
        assert_eq!(res.best_length, 0);
        assert_eq!(SqmsIndex::build(&t("")).unwrap_err(), Error::EmptyText(0));
    }

    #[test]
    fn batch_equals_single() {
        let idx = SqmsIndex::build(&t("abcabcbabcab")).unwrap();
        let ys = vec![t("cabcab"), t("bb"), t("acbacb")];
        let single: Vec<_> = ys.iter().map(|y| idx.query(y)).collect();
        assert_eq!(idx.query_batch(&ys, Exec::Sequential), single);
        assert_eq!(idx.query_batch(&ys, Exec::Parallel), single);
    }
}
