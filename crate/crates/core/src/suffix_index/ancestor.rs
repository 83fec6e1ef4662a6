//! Weighted-ancestor queries over string depth.
//!
//! Each node keeps one skew-binary jump pointer (Myers' scheme), giving
//! logarithmic queries with linear space.

use super::{NodeId, SuffixTree, NIL};
use crate::error::{Error, Result};

pub struct WeightedAncestors<'a> {
    tree: &'a SuffixTree,
    jump: Vec<u32>,
}

impl<'a> WeightedAncestors<'a> {
    pub fn new(tree: &'a SuffixTree) -> Self {
        let n = tree.num_nodes();
        let mut jump = vec![0u32; n];
        let mut level = vec![0u32; n];
        for v in tree.preorder().into_iter().skip(1) {
            let p = tree.parent[v] as usize;
            level[v] = level[p] + 1;
            let jp = jump[p] as usize;
            let jjp = jump[jp] as usize;
            jump[v] = if level[p] - level[jp] == level[jp] - level[jjp] {
                jjp as u32
            } else {
                p as u32
            };
        }
        WeightedAncestors { tree, jump }
    }

    /// Highest ancestor `u` of `v` (possibly `v`) with `depth(u) >= length`.
    pub fn query(&self, v: NodeId, length: usize) -> Result<NodeId> {
        let depth = self.tree.depth(v);
        if length == 0 || length > depth {
            return Err(Error::WeightOutOfRange { length, depth });
        }
        let d = &self.tree.depth;
        let target = length as u32;
        let mut u = v.0 as usize;
        while u != 0 {
            let j = self.jump[u] as usize;
            let p = self.tree.parent[u];
            if d[j] >= target {
                u = j;
            } else if p != NIL && d[p as usize] >= target {
                u = p as usize;
            } else {
                break;
            }
        }
        Ok(NodeId(u as u32))
    }
}

/// Answers a batch of `(node, length)` weighted-ancestor queries.
/// A zero length maps to `None` (the root).
pub fn weighted_ancestors_offline(
    tree: &SuffixTree,
    queries: &[(NodeId, usize)],
) -> Result<Vec<Option<NodeId>>> {
    let wa = WeightedAncestors::new(tree);
    queries
        .iter()
        .map(|&(v, length)| {
            if length == 0 {
                Ok(None)
            } else {
                wa.query(v, length).map(Some)
            }
        })
        .collect()
}

impl SuffixTree {
    /// Single weighted-ancestor query; builds the jump pointers on each call.
    pub fn weighted_ancestor(&self, v: NodeId, length: usize) -> Result<NodeId> {
        WeightedAncestors::new(self).query(v, length)
    }
}
