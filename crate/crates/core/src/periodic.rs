//! Longest periodic factor common to at least `k'` of `k` strings.
//!
//! Two routes over the generalized suffix tree:
//!
//! * weighted ancestor: make every run's locus explicit, flag it and every
//!   ancestor at depth at least twice the run's period as a candidate, flag
//!   nodes with at least `k'` colors as good, and report the deepest node that
//!   is both;
//! * nearest good ancestor: for every run, look up the deepest good ancestor
//!   of the leaf of the run's suffix and keep either the whole run (if it fits
//!   above that node) or the node's depth (if it still spans two periods).

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::repetitions::{compute_runs_with, Run};
use crate::suffix_index::{color_set_size, NodeId, SuffixTree, NIL};
use crate::text::Text;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LpcfAlgorithm {
    #[default]
    WeightedAncestor,
    NearestGoodAncestor,
}

#[derive(Clone, Debug)]
pub struct LpcfQuery {
    texts: Vec<Text>,
    k_prime: usize,
    algorithm: LpcfAlgorithm,
}

impl LpcfQuery {
    pub fn new(texts: Vec<Text>, k_prime: usize, algorithm: LpcfAlgorithm) -> Result<Self> {
        let k = texts.len();
        if k == 0 {
            return Err(Error::NoTexts);
        }
        if k_prime < 2 || k_prime > k {
            return Err(Error::InvalidThreshold { k_prime, k });
        }
        if let Some(j) = texts.iter().position(Text::is_empty) {
            return Err(Error::EmptyText(j));
        }
        Ok(LpcfQuery {
            texts,
            k_prime,
            algorithm,
        })
    }

    pub fn texts(&self) -> &[Text] {
        &self.texts
    }

    pub fn k_prime(&self) -> usize {
        self.k_prime
    }

    pub fn algorithm(&self) -> LpcfAlgorithm {
        self.algorithm
    }

    pub fn with_algorithm(mut self, algorithm: LpcfAlgorithm) -> Self {
        self.algorithm = algorithm;
        self
    }
}

/// `x_string[start..start + length]` has smallest period `period`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LpcfWitness {
    pub string: usize,
    pub start: usize,
    pub length: usize,
    pub period: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LpcfResult {
    pub length: usize,
    pub witness: Option<LpcfWitness>,
}

impl LpcfResult {
    fn none() -> Self {
        LpcfResult {
            length: 0,
            witness: None,
        }
    }
}

pub fn lpcf(q: &LpcfQuery) -> LpcfResult {
    lpcf_with(q, Exec::default())
}

pub fn lpcf_with(q: &LpcfQuery, exec: Exec) -> LpcfResult {
    match q.algorithm {
        LpcfAlgorithm::WeightedAncestor => weighted_ancestor_route(q, exec),
        LpcfAlgorithm::NearestGoodAncestor => nearest_good_route(q, exec),
    }
}

pub fn lpcf_weighted_ancestor(q: &LpcfQuery) -> LpcfResult {
    weighted_ancestor_route(q, Exec::default())
}

pub fn lpcf_nearest_good_ancestor(q: &LpcfQuery) -> LpcfResult {
    nearest_good_route(q, Exec::default())
}

fn runs_per_string(texts: &[Text], exec: Exec) -> Vec<Vec<Run>> {
    exec.map(texts, |t| compute_runs_with(t, Exec::Sequential))
}

/// Length of the string a node spells, not counting a leaf's separator.
fn spelled_len(tree: &SuffixTree, v: NodeId) -> usize {
    if tree.is_leaf(v) {
        tree.depth(v) - 1
    } else {
        tree.depth(v)
    }
}

/// Makes every run's locus explicit and flags candidates: the locus and each
/// ancestor whose depth is at least twice the period of a run below it. A node
/// keeps the smallest such period.
pub fn mark_candidates(gst: &mut SuffixTree, runs: &[Vec<Run>]) -> Result<()> {
    let joined = gst.joined();
    let k = joined.k();
    if runs.len() > k {
        return Err(Error::UnknownString {
            string: runs.len() - 1,
            k,
        });
    }
    let mut factors = Vec::new();
    let mut periods = Vec::new();
    for (string, list) in runs.iter().enumerate() {
        let len = joined.string_len(string);
        for r in list {
            if r.start > r.end || r.end >= len || 2 * r.period > r.len() || r.period == 0 {
                return Err(Error::RunOutOfRange {
                    string,
                    start: r.start,
                    end: r.end,
                });
            }
            factors.push((string, r.start, r.len()));
            periods.push(r.period as u32);
        }
    }
    let loci = gst.materialize_loci(&factors)?;

    let n = gst.num_nodes();
    let mut min_period = vec![u32::MAX; n];
    for (v, p) in loci.iter().zip(periods) {
        let slot = &mut min_period[v.index()];
        *slot = (*slot).min(p);
    }
    gst.clear_candidates();
    for v in gst.postorder() {
        let id = NodeId(v as u32);
        let p = min_period[v];
        if p != u32::MAX && 2 * p as usize <= spelled_len(gst, id) {
            gst.set_candidate(v, p);
        }
        if let Some(parent) = gst.parent(id) {
            let slot = &mut min_period[parent.index()];
            *slot = (*slot).min(p);
        }
    }
    Ok(())
}

/// Computes color set sizes and flags nodes with at least `k_prime` colors.
pub fn mark_good(gst: &mut SuffixTree, k_prime: usize) {
    color_set_size(gst);
    gst.set_good_threshold(k_prime);
}

fn weighted_ancestor_route(q: &LpcfQuery, exec: Exec) -> LpcfResult {
    let mut tree = SuffixTree::from_texts(&q.texts).expect("validated texts join");
    let runs = runs_per_string(&q.texts, exec);
    mark_candidates(&mut tree, &runs).expect("runs lie inside their strings");
    mark_good(&mut tree, q.k_prime);

    let tree = &tree;
    let best = exec.max_by_index(tree.num_nodes(), |v| {
        let v = NodeId(v as u32);
        let period = tree.candidate_period(v)?;
        if !tree.is_good(v) {
            return None;
        }
        let occ = tree.first_occurrence(v)?;
        Some((tree.depth(v), Reverse((occ.string, occ.start)), period))
    });
    match best {
        None => LpcfResult::none(),
        Some((length, Reverse((string, start)), period)) => LpcfResult {
            length,
            witness: Some(LpcfWitness {
                string,
                start,
                length,
                period,
            }),
        },
    }
}

/// Step-by-step record of the nearest-good-ancestor route for one run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunTrace {
    pub string: usize,
    pub run: Run,
    /// String depth of the deepest good ancestor of the run's suffix leaf (0 if none).
    pub good_depth: usize,
    /// Periodic common prefix length certified by this run (0 if none).
    pub contribution: usize,
}

pub fn nearest_good_ancestor_trace(q: &LpcfQuery, exec: Exec) -> Vec<RunTrace> {
    let mut tree = SuffixTree::from_texts(&q.texts).expect("validated texts join");
    let runs = runs_per_string(&q.texts, exec);
    mark_good(&mut tree, q.k_prime);

    let n = tree.num_nodes();
    let mut nearest = vec![NIL; n];
    for v in tree.preorder() {
        let id = NodeId(v as u32);
        nearest[v] = if tree.is_good(id) {
            v as u32
        } else {
            tree.parent(id).map_or(NIL, |p| nearest[p.index()])
        };
    }

    let mut traces = Vec::new();
    for (string, list) in runs.iter().enumerate() {
        for &run in list {
            let leaf = tree
                .leaf_for_suffix(string, run.start)
                .expect("every position has a leaf");
            let good_depth = match nearest[leaf.index()] {
                NIL => 0,
                g => tree.depth(NodeId(g)),
            };
            let contribution = if run.len() <= good_depth {
                run.len()
            } else if 2 * run.period <= good_depth {
                good_depth
            } else {
                0
            };
            traces.push(RunTrace {
                string,
                run,
                good_depth,
                contribution,
            });
        }
    }
    traces
}

fn nearest_good_route(q: &LpcfQuery, exec: Exec) -> LpcfResult {
    let traces = nearest_good_ancestor_trace(q, exec);
    let best = traces
        .iter()
        .filter(|t| t.contribution > 0)
        .max_by_key(|t| (t.contribution, Reverse((t.string, t.run.start))));
    match best {
        None => LpcfResult::none(),
        Some(t) => LpcfResult {
            length: t.contribution,
            witness: Some(LpcfWitness {
                string: t.string,
                start: t.run.start,
                length: t.contribution,
                period: t.run.period,
            }),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::load_text;

    fn texts(list: &[&str]) -> Vec<Text> {
        list.iter()
            .map(|s| load_text(s.as_bytes()).unwrap())
            .collect()
    }

    fn query(list: &[&str], k_prime: usize) -> LpcfQuery {
        LpcfQuery::new(texts(list), k_prime, LpcfAlgorithm::WeightedAncestor).unwrap()
    }

    #[test]
    fn example_pair_both_routes() {
        let q = query(&["ababbabba", "ababaab"], 2);
        let wa = lpcf_weighted_ancestor(&q);
        assert_eq!(wa.length, 4);
        let w = wa.witness.unwrap();
        assert_eq!((w.string, w.start, w.length, w.period), (0, 0, 4, 2));
        assert_eq!(lpcf_nearest_good_ancestor(&q).length, 4);
    }

    #[test]
    fn second_example_trace() {
        let q = query(&["ababaa", "bababb"], 2);
        let trace = nearest_good_ancestor_trace(&q, Exec::Sequential);
        let first = trace
            .iter()
            .find(|t| t.string == 0 && t.run.start == 0)
            .unwrap();
        assert_eq!(first.run.end, 4);
        assert_eq!(first.good_depth, 4);
        assert_eq!(first.contribution, 4);
        assert_eq!(lpcf_nearest_good_ancestor(&q).length, 4);
        assert_eq!(lpcf_weighted_ancestor(&q).length, 4);
    }

    #[test]
    fn no_periodic_factor() {
        assert_eq!(lpcf(&query(&["ab", "ab"], 2)).length, 0);
        let q = query(&["ab", "cb"], 2).with_algorithm(LpcfAlgorithm::NearestGoodAncestor);
        assert_eq!(lpcf(&q), LpcfResult::none());
    }

    #[test]
    fn candidates_on_example() {
        let ts = texts(&["ababbabba", "ababaab"]);
        let mut tree = SuffixTree::from_texts(&ts).unwrap();
        let runs: Vec<Vec<Run>> = ts
            .iter()
            .map(|t| compute_runs_with(t, Exec::Sequential))
            .collect();
        mark_candidates(&mut tree, &runs).unwrap();
        let loci = tree.materialize_loci(&[(0, 0, 4)]).unwrap();
        assert_eq!(tree.candidate_period(loci[0]), Some(2));
    }

    #[test]
    fn no_runs_no_flags() {
        let ts = texts(&["abc", "cab"]);
        let mut tree = SuffixTree::from_texts(&ts).unwrap();
        mark_candidates(&mut tree, &[vec![], vec![]]).unwrap();
        assert!((0..tree.num_nodes()).all(|v| tree.candidate_period(NodeId(v as u32)).is_none()));
    }

    #[test]
    fn bad_run_rejected() {
        let ts = texts(&["aab"]);
        let mut tree = SuffixTree::from_texts(&ts).unwrap();
        let bad = Run {
            start: 1,
            end: 5,
            period: 1,
        };
        assert!(matches!(
            mark_candidates(&mut tree, &[vec![bad]]),
            Err(Error::RunOutOfRange { .. })
        ));
    }

    #[test]
    fn query_validation() {
        let alg = LpcfAlgorithm::WeightedAncestor;
        assert!(matches!(
            LpcfQuery::new(texts(&["aa", "aa"]), 1, alg),
            Err(Error::InvalidThreshold { .. })
        ));
        assert!(matches!(
            LpcfQuery::new(texts(&["aa", "aa"]), 3, alg),
            Err(Error::InvalidThreshold { .. })
        ));
        assert_eq!(
            LpcfQuery::new(texts(&["aa", ""]), 2, alg).unwrap_err(),
            Error::EmptyText(1)
        );
    }

    #[test]
    fn modes_agree() {
        let q = query(&["aabaabaab", "baabaa", "abab"], 2);
        for alg in [
            LpcfAlgorithm::WeightedAncestor,
            LpcfAlgorithm::NearestGoodAncestor,
        ] {
            let q = q.clone().with_algorithm(alg);
            assert_eq!(
                lpcf_with(&q, Exec::Sequential),
                lpcf_with(&q, Exec::Parallel)
            );
        }
    }
}
