//! Longest common factors that keep a structural property.
//!
//! * [`squarefree`]: for every position of `y`, the longest square-free
//!   prefix of `y[j..]` occurring in an indexed text `x`.
//! * [`periodic`]: the longest periodic factor shared by at least `k'` of
//!   `k` strings.
//! * [`palindromic`]: the longest palindrome occurring in both of two
//!   strings.
//!
//! The building blocks ([`suffix_index`], [`repetitions`]) are public as
//! well, and [`oracle`] holds brute-force references for testing.

pub mod error;
pub mod exec;
pub mod oracle;
pub mod palindromic;
pub mod periodic;
pub mod repetitions;
pub mod squarefree;
pub mod suffix_array;
pub mod suffix_index;
pub mod text;

pub use error::{Error, Result};
pub use exec::Exec;
pub use palindromic::{lpalcf, lpalcf_with, maximal_palindromes, LpalcfResult, PalindromeWitness};
pub use periodic::{
    lpcf, lpcf_nearest_good_ancestor, lpcf_weighted_ancestor, lpcf_with, LpcfAlgorithm, LpcfQuery,
    LpcfResult, LpcfWitness,
};
pub use repetitions::{compute_runs, smallest_period, Run, SquareArrays};
pub use squarefree::{build_sqms_index, sqms_query, SqmsIndex, SqmsResult, SqmsWitness};
pub use suffix_index::{
    build_generalized_suffix_tree, build_suffix_tree, matching_statistics, NodeId, SuffixTree,
};
pub use text::{
    join_texts, load_text, load_text_with, JoinedText, LoadOptions, NewlinePolicy, Text,
};
