//! Matching statistics of a query against the indexed text.

use super::{SuffixTree, NIL};
use crate::text::Text;

/// One matching-statistics cell: `y[i..i + length]` equals `x[position..position + length]`
/// and cannot be extended within `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MsEntry {
    pub length: usize,
    /// Leftmost occurrence in `x`; `0` when `length == 0`.
    pub position: usize,
}

/// Computes `MS_y` against the tree's text using suffix links and skip/count
/// descents. Positions are the leftmost occurrences. For a generalized tree,
/// positions are local to the first string containing the match.
///
/// Child lookup is a binary search, so the running time carries an
/// `O(log sigma)` factor for large alphabets.
pub fn matching_statistics(tree: &SuffixTree, y: &Text) -> Vec<MsEntry> {
    let links = tree
        .suffix_link
        .as_ref()
        .expect("matching statistics need suffix links");
    let joined = tree.joined();
    let x = joined.symbols();
    let y: Vec<u32> = y.symbols().iter().map(|&c| joined.encode(c)).collect();
    let depth = &tree.depth;
    let mut out = Vec::with_capacity(y.len());

    let mut node = 0u32;
    let mut m = 0usize;
    for i in 0..y.len() {
        while i + m < y.len() {
            let c = y[i + m];
            if m == depth[node as usize] as usize {
                match tree.child_by_symbol(node, c) {
                    Some(ch) => {
                        node = ch;
                        m += 1;
                    }
                    None => break,
                }
            } else if x[tree.label[node as usize] as usize + m] == c {
                m += 1;
            } else {
                break;
            }
        }
        let position = if m == 0 {
            0
        } else {
            joined
                .origin(tree.label[node as usize] as usize)
                .map_or(0, |(_, p)| p)
        };
        out.push(MsEntry {
            length: m,
            position,
        });
        if m == 0 {
            continue;
        }

        let mut v = if m == depth[node as usize] as usize {
            node
        } else {
            tree.parent[node as usize]
        };
        while links[v as usize] == NIL {
            v = tree.parent[v as usize];
        }
        let target = m - 1;
        let mut w = links[v as usize];
        while (depth[w as usize] as usize) < target {
            let c = y[i + 1 + depth[w as usize] as usize];
            w = tree
                .child_by_symbol(w, c)
                .expect("every suffix of a factor is a factor");
        }
        node = w;
        m = target;
    }
    out
}

impl SuffixTree {
    pub fn matching_statistics(&self, y: &Text) -> Vec<MsEntry> {
        matching_statistics(self, y)
    }
}
