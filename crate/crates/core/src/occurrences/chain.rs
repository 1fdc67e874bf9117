//! Overlap chains: words built by chaining copies of the two pattern
//! words so that each consecutive pair overlaps by at least one letter.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::words::{correlation_set, CorrelationSet, Pair, Word, MAX_WORD_LEN};

/// Which of the two pattern words a chain slot holds.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Label {
    A,
    B,
}

impl Label {
    pub fn flip(self) -> Label {
        match self {
            Label::A => Label::B,
            Label::B => Label::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Label::A => 'A',
            Label::B => 'B',
        }
    }
}

/// A chain `C_1 ^m_1 C_2 ^m_2 ... C_k` with `C_i` in {A, B} and each
/// overlap `m_i >= 1` a correlation index of `(C_i, C_{i+1})`. The
/// realized word has length `k*l - sum(m_i)`.
///
/// Overlaps of zero are not chains: two abutting occurrences belong to
/// different chains.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct OverlapChain {
    pair: Pair,
    labels: Vec<Label>,
    overlaps: Vec<usize>,
}

impl OverlapChain {
    pub fn new(pair: Pair, labels: Vec<Label>, overlaps: Vec<usize>) -> Result<OverlapChain> {
        if labels.is_empty() {
            return Err(Error::InvalidChain("chain needs at least one word".into()));
        }
        if overlaps.len() + 1 != labels.len() {
            return Err(Error::InvalidChain(format!(
                "{} words need {} overlaps, got {}",
                labels.len(),
                labels.len() - 1,
                overlaps.len()
            )));
        }
        let chain = OverlapChain {
            pair,
            labels,
            overlaps,
        };
        for i in 0..chain.overlaps.len() {
            let m = chain.overlaps[i];
            let cor = correlation_set(chain.word_at(i), chain.word_at(i + 1))
                .expect("pair words have equal length");
            if m == 0 || !cor.contains(m) {
                return Err(Error::InvalidOverlap {
                    left: chain.word_at(i).to_string(),
                    right: chain.word_at(i + 1).to_string(),
                    overlap: m,
                });
            }
        }
        if chain.realized_len() > MAX_WORD_LEN {
            return Err(Error::WordTooLong(chain.realized_len()));
        }
        Ok(chain)
    }

    pub fn pair(&self) -> &Pair {
        &self.pair
    }

    /// Number of chained words, `k`.
    pub fn word_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn overlaps(&self) -> &[usize] {
        &self.overlaps
    }

    pub fn first_label(&self) -> Label {
        self.labels[0]
    }

    pub fn last_label(&self) -> Label {
        *self.labels.last().unwrap()
    }

    pub fn word_at(&self, i: usize) -> &Word {
        match self.labels[i] {
            Label::A => self.pair.a(),
            Label::B => self.pair.b(),
        }
    }

    pub fn count_label(&self, label: Label) -> usize {
        self.labels.iter().filter(|&&x| x == label).count()
    }

    /// `k*l - sum(m_i)`.
    pub fn realized_len(&self) -> usize {
        self.labels.len() * self.pair.word_len() - self.overlaps.iter().sum::<usize>()
    }

    /// The unique word the chain spells out: it begins with `C_1` and each
    /// `C_{i+1}` starts `m_i` letters before `C_i` ends.
    pub fn realize(&self) -> Word {
        let l = self.pair.word_len();
        let mut word = *self.word_at(0);
        for i in 1..self.labels.len() {
            let added = l - self.overlaps[i - 1];
            let tail = self.word_at(i).suffix(added);
            word = word.concat(&tail).expect("validated realized length");
        }
        word
    }

    /// The mirror chain: labels reversed and swapped (A <-> B), overlaps
    /// reversed. Defined when Cor(A) = Cor(B); an involution that
    /// preserves realized length and exchanges the two occurrence counts
    /// of the realized word.
    pub fn phi(&self) -> Result<OverlapChain> {
        self.pair.require_equal_autocorrelation()?;
        let labels = self.labels.iter().rev().map(|l| l.flip()).collect();
        let overlaps = self.overlaps.iter().rev().copied().collect();
        OverlapChain::new(self.pair, labels, overlaps)
    }

    /// Parses the CLI chain syntax `A:1:B:2:A` (labels alternating with
    /// overlap sizes; a bare `A` or `B` is a one-word chain).
    pub fn parse(text: &str, pair: Pair) -> Result<OverlapChain> {
        let fields: Vec<&str> = text.split(':').collect();
        if fields.is_empty() || fields.len() % 2 == 0 {
            return Err(Error::InvalidChain(format!(
                "chain {text:?} must alternate labels and overlaps"
            )));
        }
        let mut labels = Vec::with_capacity(fields.len() / 2 + 1);
        let mut overlaps = Vec::with_capacity(fields.len() / 2);
        for (i, field) in fields.iter().enumerate() {
            if i % 2 == 0 {
                labels.push(match *field {
                    "A" | "a" => Label::A,
                    "B" | "b" => Label::B,
                    other => {
                        return Err(Error::InvalidChain(format!(
                            "expected label A or B, got {other:?}"
                        )))
                    }
                });
            } else {
                let m: usize = field.parse().map_err(|_| {
                    Error::InvalidChain(format!("expected overlap size, got {field:?}"))
                })?;
                overlaps.push(m);
            }
        }
        OverlapChain::new(pair, labels, overlaps)
    }
}

impl fmt::Display for OverlapChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, label) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, ":{}:", self.overlaps[i - 1])?;
            }
            write!(f, "{}", label.as_char())?;
        }
        Ok(())
    }
}

impl Serialize for OverlapChain {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Guards for exhaustive chain enumeration.
#[derive(Clone, Copy, Debug)]
pub struct ChainLimits {
    /// Largest realized word length to visit (hard cap [`MAX_WORD_LEN`]).
    pub max_realized_len: usize,
    /// Largest number of chained words, 0 meaning unlimited.
    pub max_words: usize,
}

impl Default for ChainLimits {
    fn default() -> Self {
        ChainLimits {
            max_realized_len: 32,
            max_words: 8,
        }
    }
}

/// Every overlap chain of the pair within the limits, in a deterministic
/// depth-first order (label A before B, overlaps ascending).
pub fn enumerate_chains(pair: &Pair, limits: &ChainLimits) -> Result<Vec<OverlapChain>> {
    pair.require_distinct()?;
    if limits.max_realized_len > MAX_WORD_LEN {
        return Err(Error::GuardExceeded(format!(
            "chain enumeration capped at realized length {MAX_WORD_LEN}, asked for {}",
            limits.max_realized_len
        )));
    }
    let l = pair.word_len();
    if limits.max_realized_len < l {
        return Ok(Vec::new());
    }
    // cor[x][y] = Cor(word(x), word(y)) for x, y in {A, B}
    let word = |label: Label| match label {
        Label::A => pair.a(),
        Label::B => pair.b(),
    };
    let cor = |x: Label, y: Label| -> CorrelationSet {
        correlation_set(word(x), word(y)).expect("equal lengths")
    };
    let cors = [
        [cor(Label::A, Label::A), cor(Label::A, Label::B)],
        [cor(Label::B, Label::A), cor(Label::B, Label::B)],
    ];
    let idx = |label: Label| match label {
        Label::A => 0,
        Label::B => 1,
    };

    let mut out = Vec::new();
    let mut labels = Vec::new();
    let mut overlaps = Vec::new();

    fn extend(
        pair: &Pair,
        cors: &[[CorrelationSet; 2]; 2],
        idx: &dyn Fn(Label) -> usize,
        limits: &ChainLimits,
        len: usize,
        labels: &mut Vec<Label>,
        overlaps: &mut Vec<usize>,
        out: &mut Vec<OverlapChain>,
    ) {
        out.push(
            OverlapChain::new(*pair, labels.clone(), overlaps.clone())
                .expect("enumeration only visits valid chains"),
        );
        if limits.max_words != 0 && labels.len() >= limits.max_words {
            return;
        }
        let l = pair.word_len();
        let last = *labels.last().unwrap();
        for next in [Label::A, Label::B] {
            let cor = &cors[idx(last)][idx(next)];
            for m in cor.indices() {
                let new_len = len + l - m;
                if new_len > limits.max_realized_len {
                    continue;
                }
                labels.push(next);
                overlaps.push(m);
                extend(pair, cors, idx, limits, new_len, labels, overlaps, out);
                labels.pop();
                overlaps.pop();
            }
        }
    }

    for start in [Label::A, Label::B] {
        labels.push(start);
        extend(
            pair,
            &cors,
            &idx,
            limits,
            l,
            &mut labels,
            &mut overlaps,
            &mut out,
        );
        labels.pop();
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::occurrences::count_occurrences;

    fn w(text: &str) -> Word {
        text.parse().unwrap()
    }

    fn pair(a: &str, b: &str) -> Pair {
        Pair::new(w(a), w(b)).unwrap()
    }

    #[test]
    fn realize_matches_known_overlap() {
        // C = HTTHTH, D = THTHHH, C^2 D spells HTTHTHTHHH (length 10).
        let p = pair("HTTHTH", "THTHHH");
        let chain = OverlapChain::new(p, vec![Label::A, Label::B], vec![2]).unwrap();
        assert_eq!(chain.realize(), w("HTTHTHTHHH"));
        assert_eq!(chain.realized_len(), 10);
    }

    #[test]
    fn single_word_chain_realizes_itself() {
        let p = pair("HH", "TT");
        let chain = OverlapChain::new(p, vec![Label::A], vec![]).unwrap();
        assert_eq!(chain.realize(), w("HH"));
    }

    #[test]
    fn self_overlap_chain() {
        let p = pair("HH", "TT");
        let chain = OverlapChain::new(p, vec![Label::A, Label::A], vec![1]).unwrap();
        assert_eq!(chain.realize(), w("HHH"));
    }

    #[test]
    fn rejects_invalid_overlap() {
        let p = pair("HH", "TT");
        // Cor(HH, TT) is empty, so A and B cannot overlap.
        assert!(matches!(
            OverlapChain::new(p, vec![Label::A, Label::B], vec![1]),
            Err(Error::InvalidOverlap { .. })
        ));
        // m = 0 is never a chain.
        assert!(matches!(
            OverlapChain::new(p, vec![Label::A, Label::A], vec![0]),
            Err(Error::InvalidOverlap { .. })
        ));
    }

    #[test]
    fn phi_swaps_labels_and_reverses() {
        let p = pair("HH", "TT");
        let chain = OverlapChain::new(p, vec![Label::A, Label::A], vec![1]).unwrap();
        let phi = chain.phi().unwrap();
        assert_eq!(phi.labels(), &[Label::B, Label::B]);
        assert_eq!(phi.overlaps(), &[1]);
        assert_eq!(phi.realize(), w("TTT"));
    }

    #[test]
    fn phi_fixed_point_on_mixed_chain() {
        let p = pair("HHTHTH", "HTTTHH");
        let chain = OverlapChain::new(p, vec![Label::A, Label::B], vec![1]).unwrap();
        let phi = chain.phi().unwrap();
        assert_eq!(phi, chain);
    }

    #[test]
    fn phi_requires_equal_autocorrelation() {
        let p = pair("HH", "HT");
        let chain = OverlapChain::new(p, vec![Label::A], vec![]).unwrap();
        assert!(matches!(
            chain.phi(),
            Err(Error::AutocorrelationMismatch(2, 0))
        ));
    }

    #[test]
    fn chain_text_roundtrip() {
        let p = pair("HHTHTH", "HTTTHH");
        let chain = OverlapChain::parse("A:1:B:2:A", p).unwrap();
        assert_eq!(chain.to_string(), "A:1:B:2:A");
        assert_eq!(chain.word_count(), 3);
        assert!(OverlapChain::parse("A:1", p).is_err());
        assert!(OverlapChain::parse("A:x:B", p).is_err());
        assert!(OverlapChain::parse("C", p).is_err());
    }

    #[test]
    fn enumeration_respects_limits_and_validity() {
        let p = pair("HH", "HT");
        let limits = ChainLimits {
            max_realized_len: 6,
            max_words: 4,
        };
        let chains = enumerate_chains(&p, &limits).unwrap();
        assert!(!chains.is_empty());
        for chain in &chains {
            assert!(chain.realized_len() <= 6);
            assert!(chain.word_count() <= 4);
            // every chain word really contains its labelled occurrences
            let y = chain.realize();
            assert!(count_occurrences(p.a(), &y) >= chain.count_label(Label::A));
            assert!(count_occurrences(p.b(), &y) >= chain.count_label(Label::B));
        }
        // deterministic order
        let again = enumerate_chains(&p, &limits).unwrap();
        assert_eq!(chains, again);
    }
}
