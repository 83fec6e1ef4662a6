//! Color set size: distinct string ids among the leaves below each node.
//!
//! Leaves are visited in lexicographic order. Each leaf adds one to its own
//! count; each pair of consecutive same-colored leaves subtracts one at their
//! lowest common ancestor. Subtree sums then give the distinct counts.

use super::{SuffixTree, NIL};

pub fn color_set_size(tree: &mut SuffixTree) {
    let n = tree.num_nodes();
    let k = tree.joined().k();
    let mut count = vec![0i64; n];
    let mut last_rank = vec![usize::MAX; k];
    let mut pairs = Vec::new();
    for (r, &leaf) in tree.leaves.iter().enumerate() {
        count[leaf as usize] += 1;
        let color = tree
            .joined()
            .string_of(tree.leaf_suffix[leaf as usize] as usize);
        if last_rank[color] != usize::MAX {
            pairs.push((last_rank[color], r));
        }
        last_rank[color] = r;
    }
    for lca in tree.lca_of_ranks(&pairs) {
        count[lca as usize] -= 1;
    }
    for v in tree.postorder() {
        let p = tree.parent[v];
        if p != NIL {
            count[p as usize] += count[v];
        }
    }
    tree.colors = count.into_iter().map(|c| c as u32).collect();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::suffix_index::NodeId;
    use crate::text::{load_text, Text};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeSet;

    fn brute(tree: &SuffixTree, v: NodeId) -> usize {
        let mut colors = BTreeSet::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            if let Some(s) = tree.leaf_payload(u) {
                colors.insert(s.string);
            }
            stack.extend(tree.children(u));
        }
        colors.len()
    }

    fn random_texts(rng: &mut ChaCha8Rng, k: usize) -> Vec<Text> {
        (0..k)
            .map(|_| {
                let n = rng.gen_range(1..25);
                let x: Vec<u8> = (0..n).map(|_| b'a' + rng.gen_range(0..2)).collect();
                load_text(&x).unwrap()
            })
            .collect()
    }

    #[test]
    fn single_color() {
        let mut tree = SuffixTree::from_texts(&[load_text(b"abaab").unwrap()]).unwrap();
        color_set_size(&mut tree);
        for v in 0..tree.num_nodes() {
            assert_eq!(tree.color_count(NodeId(v as u32)), 1);
        }
    }

    #[test]
    fn example_abab_has_two_colors() {
        let texts = [load_text(b"ababaa").unwrap(), load_text(b"bababb").unwrap()];
        let mut tree = SuffixTree::from_texts(&texts).unwrap();
        color_set_size(&mut tree);
        let want: Vec<u32> = b"abab"
            .iter()
            .map(|&c| tree.joined().encode(c as u32))
            .collect();
        let v = (0..tree.num_nodes())
            .map(|v| NodeId(v as u32))
            .find(|&v| tree.path_label(v) == want.as_slice())
            .unwrap();
        assert_eq!(tree.color_count(v), 2);
    }

    #[test]
    fn random_k4_matches_enumeration() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for _ in 0..200 {
            let texts = random_texts(&mut rng, 4);
            let mut tree = SuffixTree::from_texts(&texts).unwrap();
            color_set_size(&mut tree);
            for v in 0..tree.num_nodes() {
                let v = NodeId(v as u32);
                assert_eq!(tree.color_count(v), brute(&tree, v));
            }
        }
    }

    #[test]
    fn counts_after_subdivision() {
        let mut rng = ChaCha8Rng::seed_from_u64(22);
        for _ in 0..100 {
            let texts = random_texts(&mut rng, 3);
            let mut tree = SuffixTree::from_texts(&texts).unwrap();
            let s = rng.gen_range(0..3);
            let len = texts[s].len();
            tree.locus_of_factor(s, 0, rng.gen_range(1..=len)).unwrap();
            color_set_size(&mut tree);
            for v in 0..tree.num_nodes() {
                let v = NodeId(v as u32);
                assert_eq!(tree.color_count(v), brute(&tree, v));
            }
        }
    }
}
