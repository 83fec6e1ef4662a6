//! Suffix trees and generalized suffix trees, folded from a suffix array.
//!
//! Node string depths (`depth`) are the weights used by weighted-ancestor
//! queries: the root has depth 0 and every child is strictly deeper than its
//! parent. Leaf depths count the terminating separator, so a leaf for the
//! local suffix `x[i..]` has depth `|x| - i + 1`.

mod ancestor;
mod colors;
mod dump;
mod matching;

pub use ancestor::{weighted_ancestors_offline, WeightedAncestors};
pub use colors::color_set_size;
pub use matching::{matching_statistics, MsEntry};

use crate::error::{Error, Result};
use crate::suffix_array::{inverse, lcp_array, suffix_array};
use crate::text::{join_texts, JoinedText, Text};

pub(crate) const NIL: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NodeId(pub(crate) u32);

impl NodeId {
    pub const ROOT: NodeId = NodeId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A suffix of one of the indexed strings.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SuffixRef {
    pub string: usize,
    pub start: usize,
}

#[derive(Clone, Debug)]
pub struct SuffixTree {
    joined: JoinedText,
    parent: Vec<u32>,
    depth: Vec<u32>,
    /// Smallest global suffix start below the node; edge labels are read from it.
    label: Vec<u32>,
    child_off: Vec<u32>,
    child_len: Vec<u32>,
    children: Vec<u32>,
    /// Global suffix start for leaves, `NIL` otherwise.
    leaf_suffix: Vec<u32>,
    /// Leaf id per global position, `NIL` at separators.
    leaf_of: Vec<u32>,
    /// Leaves in lexicographic order.
    leaves: Vec<u32>,
    /// `split[r]` is the lowest common ancestor of `leaves[r - 1]` and `leaves[r]`.
    split: Vec<u32>,
    suffix_link: Option<Vec<u32>>,
    colors: Vec<u32>,
    good: Vec<bool>,
    candidate: Vec<u32>,
}

/// Suffix tree of one text, terminated by a unique sentinel.
pub fn build_suffix_tree(t: &Text) -> SuffixTree {
    let joined = join_texts(std::slice::from_ref(t)).expect("a single text always joins");
    let mut tree = SuffixTree::from_joined(joined);
    tree.compute_suffix_links();
    tree
}

/// Generalized suffix tree; leaves are colored by string id.
pub fn build_generalized_suffix_tree(j: JoinedText) -> SuffixTree {
    SuffixTree::from_joined(j)
}

impl SuffixTree {
    pub fn from_texts(texts: &[Text]) -> Result<SuffixTree> {
        Ok(Self::from_joined(join_texts(texts)?))
    }

    fn from_joined(joined: JoinedText) -> SuffixTree {
        let s = joined.symbols();
        let sa = suffix_array(s);
        let rank = inverse(&sa);
        let lcp = lcp_array(s, &sa, &rank);

        let mut depth: Vec<u32> = vec![0];
        let mut leaf_suffix: Vec<u32> = vec![NIL];
        let mut edges: Vec<(u32, u32)> = Vec::with_capacity(2 * s.len());
        let mut leaves = Vec::new();
        let mut split = Vec::new();
        let mut leaf_of = vec![NIL; s.len()];
        let mut stack: Vec<u32> = vec![0];
        // lcp with the previous kept suffix; separator suffixes are dropped
        let mut gap = u32::MAX;

        for (r, &pos) in sa.iter().enumerate() {
            gap = gap.min(lcp[r]);
            if joined.is_separator(pos) {
                continue;
            }
            let l = if leaves.is_empty() { 0 } else { gap };
            gap = u32::MAX;
            while depth[*stack.last().unwrap() as usize] > l {
                let last = stack.pop().unwrap();
                let top = *stack.last().unwrap();
                if depth[top as usize] < l {
                    let w = depth.len() as u32;
                    depth.push(l);
                    leaf_suffix.push(NIL);
                    edges.push((w, last));
                    stack.push(w);
                } else {
                    edges.push((top, last));
                }
            }
            if !leaves.is_empty() {
                split.push(*stack.last().unwrap());
            } else {
                split.push(NIL);
            }
            let string = joined.string_of(pos);
            let leaf_depth = (joined.separator_of(string) + 1 - pos) as u32;
            let leaf = depth.len() as u32;
            depth.push(leaf_depth);
            leaf_suffix.push(pos as u32);
            leaf_of[pos] = leaf;
            leaves.push(leaf);
            stack.push(leaf);
        }
        while stack.len() > 1 {
            let c = stack.pop().unwrap();
            edges.push((*stack.last().unwrap(), c));
        }

        let nodes = depth.len();
        let mut parent = vec![NIL; nodes];
        let mut child_len = vec![0u32; nodes];
        for &(p, c) in &edges {
            parent[c as usize] = p;
            child_len[p as usize] += 1;
        }
        let mut child_off = vec![0u32; nodes];
        let mut acc = 0u32;
        for v in 0..nodes {
            child_off[v] = acc;
            acc += child_len[v];
        }
        let mut fill = child_off.clone();
        let mut children = vec![0u32; edges.len()];
        for &(p, c) in &edges {
            children[fill[p as usize] as usize] = c;
            fill[p as usize] += 1;
        }

        let mut tree = SuffixTree {
            joined,
            parent,
            depth,
            label: leaf_suffix.clone(),
            child_off,
            child_len,
            children,
            leaf_suffix,
            leaf_of,
            leaves,
            split,
            suffix_link: None,
            colors: Vec::new(),
            good: Vec::new(),
            candidate: Vec::new(),
        };
        for v in tree.postorder() {
            let p = tree.parent[v];
            if p != NIL {
                let lv = tree.label[v];
                let lp = &mut tree.label[p as usize];
                *lp = (*lp).min(lv);
            }
        }
        tree.reset_annotations();
        tree
    }

    fn reset_annotations(&mut self) {
        let n = self.num_nodes();
        self.colors = vec![0; n];
        self.good = vec![false; n];
        self.candidate = vec![0; n];
    }

    pub fn joined(&self) -> &JoinedText {
        &self.joined
    }

    pub fn root(&self) -> NodeId {
        NodeId::ROOT
    }

    pub fn num_nodes(&self) -> usize {
        self.depth.len()
    }

    pub fn num_leaves(&self) -> usize {
        self.leaves.len()
    }

    /// String depth, the weight function of weighted-ancestor queries.
    pub fn depth(&self, v: NodeId) -> usize {
        self.depth[v.index()] as usize
    }

    pub fn parent(&self, v: NodeId) -> Option<NodeId> {
        match self.parent[v.index()] {
            NIL => None,
            p => Some(NodeId(p)),
        }
    }

    pub fn children(&self, v: NodeId) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        self.child_slice(v.0).iter().map(|&c| NodeId(c))
    }

    fn child_slice(&self, v: u32) -> &[u32] {
        let off = self.child_off[v as usize] as usize;
        &self.children[off..off + self.child_len[v as usize] as usize]
    }

    pub fn is_leaf(&self, v: NodeId) -> bool {
        self.leaf_suffix[v.index()] != NIL
    }

    /// `(string, local start)` of a leaf.
    pub fn leaf_payload(&self, v: NodeId) -> Option<SuffixRef> {
        match self.leaf_suffix[v.index()] {
            NIL => None,
            pos => self.suffix_ref(pos as usize),
        }
    }

    /// Smallest `(string, start)` among the leaves below `v`.
    pub fn first_occurrence(&self, v: NodeId) -> Option<SuffixRef> {
        match self.label[v.index()] {
            NIL => None,
            pos => self.suffix_ref(pos as usize),
        }
    }

    fn suffix_ref(&self, pos: usize) -> Option<SuffixRef> {
        self.joined
            .origin(pos)
            .map(|(string, start)| SuffixRef { string, start })
    }

    pub fn leaf_for_suffix(&self, string: usize, start: usize) -> Option<NodeId> {
        if string >= self.joined.k() || start >= self.joined.string_len(string) {
            return None;
        }
        match self.leaf_of[self.joined.global(string, start)] {
            NIL => None,
            v => Some(NodeId(v)),
        }
    }

    /// Leaves in lexicographic order of their suffixes.
    pub fn leaves(&self) -> impl ExactSizeIterator<Item = NodeId> + '_ {
        self.leaves.iter().map(|&v| NodeId(v))
    }

    /// Symbols on the edge entering `v`, in the joined encoding.
    pub fn edge_label(&self, v: NodeId) -> &[u32] {
        let p = match self.parent(v) {
            Some(p) => self.depth(p),
            None => return &[],
        };
        let start = self.label[v.index()] as usize;
        &self.joined.symbols()[start + p..start + self.depth(v)]
    }

    /// The joined-encoded string spelled from the root to `v`.
    pub fn path_label(&self, v: NodeId) -> &[u32] {
        if self.depth(v) == 0 {
            return &[];
        }
        let start = self.label[v.index()] as usize;
        &self.joined.symbols()[start..start + self.depth(v)]
    }

    /// Child whose edge starts with the joined-encoded symbol `c`.
    pub fn child(&self, v: NodeId, c: u32) -> Option<NodeId> {
        self.child_by_symbol(v.0, c).map(NodeId)
    }

    pub(crate) fn child_by_symbol(&self, v: u32, c: u32) -> Option<u32> {
        let d = self.depth[v as usize] as usize;
        let s = self.joined.symbols();
        let kids = self.child_slice(v);
        kids.binary_search_by_key(&c, |&ch| s[self.label[ch as usize] as usize + d])
            .ok()
            .map(|i| kids[i])
    }

    /// Nodes with every descendant before its ancestors.
    pub(crate) fn postorder(&self) -> Vec<usize> {
        let mut order = self.preorder();
        order.reverse();
        order
    }

    pub(crate) fn preorder(&self) -> Vec<usize> {
        let mut order = Vec::with_capacity(self.num_nodes());
        let mut stack = vec![0u32];
        while let Some(v) = stack.pop() {
            order.push(v as usize);
            stack.extend(self.child_slice(v).iter().rev());
        }
        order
    }

    pub fn color_count(&self, v: NodeId) -> usize {
        self.colors[v.index()] as usize
    }

    pub fn is_good(&self, v: NodeId) -> bool {
        self.good[v.index()]
    }

    /// Smallest certified period when `v` is a candidate node.
    pub fn candidate_period(&self, v: NodeId) -> Option<usize> {
        match self.candidate[v.index()] {
            0 => None,
            p => Some(p as usize),
        }
    }

    pub(crate) fn set_good_threshold(&mut self, k_prime: usize) {
        for (g, &c) in self.good.iter_mut().zip(&self.colors) {
            *g = c as usize >= k_prime;
        }
    }

    pub(crate) fn set_candidate(&mut self, v: usize, period: u32) {
        self.candidate[v] = period;
    }

    pub(crate) fn clear_candidates(&mut self) {
        self.candidate.iter_mut().for_each(|p| *p = 0);
    }

    /// Lowest common ancestors for pairs of leaf ranks, answered off-line.
    ///
    /// Uses the split nodes between lexicographically adjacent leaves: the
    /// LCA of ranks `a < b` is the shallowest of `split[a + 1..=b]`.
    pub(crate) fn lca_of_ranks(&self, pairs: &[(usize, usize)]) -> Vec<u32> {
        let mut out = vec![NIL; pairs.len()];
        let mut by_hi: Vec<Vec<(usize, usize)>> = vec![Vec::new(); self.leaves.len()];
        for (q, &(a, b)) in pairs.iter().enumerate() {
            let (lo, hi) = (a.min(b), a.max(b));
            if lo == hi {
                out[q] = self.leaves[lo];
            } else {
                by_hi[hi].push((lo, q));
            }
        }
        // monotone stack of (rank, split node) with strictly increasing depth
        let mut stack: Vec<(usize, u32)> = Vec::new();
        for (r, queries) in by_hi.iter().enumerate().skip(1) {
            let node = self.split[r];
            let d = self.depth[node as usize];
            while stack
                .last()
                .is_some_and(|&(_, top)| self.depth[top as usize] >= d)
            {
                stack.pop();
            }
            stack.push((r, node));
            for &(lo, q) in queries {
                let i = stack.partition_point(|&(rank, _)| rank <= lo);
                out[q] = stack[i].1;
            }
        }
        out
    }

    pub(crate) fn leaf_rank_table(&self) -> Vec<u32> {
        let mut rank = vec![NIL; self.num_nodes()];
        for (r, &v) in self.leaves.iter().enumerate() {
            rank[v as usize] = r as u32;
        }
        rank
    }

    pub fn has_suffix_links(&self) -> bool {
        self.suffix_link.is_some()
    }

    /// Suffix links of branching internal nodes. Nodes created later by
    /// subdivision carry none.
    pub fn compute_suffix_links(&mut self) {
        let n = self.num_nodes();
        let rank = self.leaf_rank_table();
        let mut lo = vec![u32::MAX; n];
        let mut hi = vec![0u32; n];
        for v in self.postorder() {
            if rank[v] != NIL {
                lo[v] = rank[v];
                hi[v] = rank[v];
            }
            let p = self.parent[v];
            if p != NIL {
                lo[p as usize] = lo[p as usize].min(lo[v]);
                hi[p as usize] = hi[p as usize].max(hi[v]);
            }
        }
        let mut link = vec![NIL; n];
        link[0] = 0;
        let mut pending = Vec::new();
        let mut pairs = Vec::new();
        for v in 1..n {
            if self.leaf_suffix[v] != NIL || self.child_len[v] < 2 {
                continue;
            }
            if self.depth[v] == 1 {
                link[v] = 0;
                continue;
            }
            let first = self.leaf_suffix[self.leaves[lo[v] as usize] as usize] as usize;
            let last = self.leaf_suffix[self.leaves[hi[v] as usize] as usize] as usize;
            let a = self.leaf_of[first + 1];
            let b = self.leaf_of[last + 1];
            pending.push(v);
            pairs.push((rank[a as usize] as usize, rank[b as usize] as usize));
        }
        for (v, w) in pending.into_iter().zip(self.lca_of_ranks(&pairs)) {
            link[v] = w;
        }
        self.suffix_link = Some(link);
    }

    pub fn suffix_link(&self, v: NodeId) -> Option<NodeId> {
        match self.suffix_link.as_ref()?[v.index()] {
            NIL => None,
            w => Some(NodeId(w)),
        }
    }

    /// Node spelling `x_string[start..start + length]`, creating it by edge
    /// subdivision when the locus is implicit. Existing ids stay valid.
    ///
    /// A factor that extends to the end of its string resolves to the leaf of
    /// that suffix (whose depth also counts the separator).
    pub fn locus_of_factor(
        &mut self,
        string: usize,
        start: usize,
        length: usize,
    ) -> Result<NodeId> {
        Ok(self.materialize_loci(&[(string, start, length)])?[0])
    }

    /// Batch form of [`SuffixTree::locus_of_factor`]: all weighted-ancestor
    /// queries run against the unmodified tree, then every edge is
    /// subdivided once per distinct requested depth.
    pub fn materialize_loci(&mut self, factors: &[(usize, usize, usize)]) -> Result<Vec<NodeId>> {
        let k = self.joined.k();
        let mut queries = Vec::with_capacity(factors.len());
        for &(string, start, length) in factors {
            if string >= k {
                return Err(Error::UnknownString { string, k });
            }
            let string_len = self.joined.string_len(string);
            if start >= string_len || length > string_len - start {
                return Err(Error::FactorOutOfRange {
                    string,
                    start,
                    length,
                    string_len,
                });
            }
            queries.push((self.leaf_for_suffix(string, start).unwrap(), length));
        }
        let found = weighted_ancestors_offline(self, &queries)?;

        let mut splits: Vec<(u32, u32, usize)> = Vec::new();
        let mut result = vec![NodeId::ROOT; queries.len()];
        for (q, (&(_, length), u)) in queries.iter().zip(&found).enumerate() {
            match u {
                None => result[q] = NodeId::ROOT,
                Some(u) if self.depth(*u) == length => result[q] = *u,
                // a factor running to the end of its string: the leaf is its locus
                Some(u) if self.is_leaf(*u) && self.depth(*u) == length + 1 => result[q] = *u,
                Some(u) => splits.push((u.0, length as u32, q)),
            }
        }
        splits.sort_unstable();
        let mut i = 0;
        while i < splits.len() {
            let u = splits[i].0;
            let mut j = i;
            while j < splits.len() && splits[j].0 == u {
                j += 1;
            }
            let mut above = self.parent[u as usize];
            let mut last_depth = u32::MAX;
            let mut last_node = NIL;
            for &(_, d, q) in &splits[i..j] {
                if d != last_depth {
                    last_node = self.subdivide(above, u, d);
                    above = last_node;
                    last_depth = d;
                }
                result[q] = NodeId(last_node);
            }
            i = j;
        }
        Ok(result)
    }

    /// Inserts a unary node of depth `d` between `above` and its child `u`.
    fn subdivide(&mut self, above: u32, u: u32, d: u32) -> u32 {
        let w = self.num_nodes() as u32;
        self.depth.push(d);
        self.parent.push(above);
        self.label.push(self.label[u as usize]);
        self.leaf_suffix.push(NIL);
        self.child_off.push(self.children.len() as u32);
        self.child_len.push(1);
        self.children.push(u);
        self.colors.push(0);
        self.good.push(false);
        self.candidate.push(0);
        if let Some(link) = self.suffix_link.as_mut() {
            link.push(NIL);
        }
        let off = self.child_off[above as usize] as usize;
        let len = self.child_len[above as usize] as usize;
        let slot = self.children[off..off + len]
            .iter()
            .position(|&c| c == u)
            .expect("u is a child of above");
        self.children[off + slot] = w;
        self.parent[u as usize] = w;
        w
    }
}
