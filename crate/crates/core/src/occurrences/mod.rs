//! Occurrence counting and the overlap-chain calculus.
//!
//! An occurrence of a pattern `A` in a host word ends at position `k`
//! (1-based, `|A| <= k <= |host|`) when the window of the last `|A|`
//! letters up to `k` equals `A`. Occurrences may overlap. Words covered by
//! a single run of overlapping occurrences of the two pattern words form
//! overlap chains; every word splits uniquely into filler segments and
//! maximal chains, and the involution [`OverlapChain::phi`] exchanges the
//! roles of the two patterns on chains and patterns.

mod chain;
mod decompose;

pub use chain::{enumerate_chains, ChainLimits, Label, OverlapChain};
pub use decompose::{maximal_decomposition, pattern_decompose, Decomposition, Pattern};

use serde::Serialize;

use crate::words::Word;

/// 0-based start positions of every occurrence of `pattern` in `host`,
/// in increasing order.
pub(crate) fn occurrence_starts(pattern: &Word, host: &Word) -> Vec<usize> {
    assert!(!pattern.is_empty(), "empty pattern has no occurrences");
    let l = pattern.len();
    let n = host.len();
    if n < l {
        return Vec::new();
    }
    (0..=n - l)
        .filter(|&start| host.subword(start, l) == *pattern)
        .collect()
}

/// Number of (possibly overlapping) occurrences of `pattern` in `host`.
pub fn count_occurrences(pattern: &Word, host: &Word) -> usize {
    occurrence_starts(pattern, host).len()
}

/// The occurrences of a pattern in a host, reported by 1-based end index.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct OccurrenceList {
    pub pattern: Word,
    /// 1-based end indices, strictly increasing; each lies in
    /// `pattern.len()..=host.len()`.
    pub end_positions: Vec<usize>,
}

pub fn occurrence_positions(pattern: &Word, host: &Word) -> OccurrenceList {
    let l = pattern.len();
    OccurrenceList {
        pattern: *pattern,
        end_positions: occurrence_starts(pattern, host)
            .into_iter()
            .map(|start| start + l)
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    #[test]
    fn overlapping_occurrences_count() {
        assert_eq!(count_occurrences(&w("HH"), &w("HHH")), 2);
        assert_eq!(count_occurrences(&w("HT"), &w("THTHT")), 2);
        assert_eq!(count_occurrences(&w("HH"), &w("T")), 0);
    }

    #[test]
    fn end_positions_are_one_based() {
        assert_eq!(
            occurrence_positions(&w("HH"), &w("HHH")).end_positions,
            vec![2, 3]
        );
        assert_eq!(
            occurrence_positions(&w("HH"), &w("THHTT")).end_positions,
            vec![3]
        );
        assert_eq!(
            occurrence_positions(&w("HHT"), &w("HHTHHT")).end_positions,
            vec![3, 6]
        );
    }
}
