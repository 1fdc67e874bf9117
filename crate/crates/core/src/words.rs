//! Binary words over {H, T} and their correlation algebra.
//!
//! A word of length `l` is a sequence of letters in {H, T}. For two words
//! of the same length, `Cor(A, B)` collects every `k` in `1..l` such that
//! the length-`k` suffix of `A` equals the length-`k` prefix of `B`; its
//! base-2 encoding `[A, B] = sum of 2^k` is the correlation number. The
//! auto-correlation of a word is `Cor(A, A)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Hard cap on word length imposed by the packed representation.
pub const MAX_WORD_LEN: usize = 64;

/// Guard on exhaustive word enumeration (2^16 words at most).
pub const MAX_ENUMERATION_LEN: usize = 16;

fn mask(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// One coin face.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Letter {
    H,
    T,
}

impl Letter {
    pub fn flip(self) -> Letter {
        match self {
            Letter::H => Letter::T,
            Letter::T => Letter::H,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::H => 'H',
            Letter::T => 'T',
        }
    }

    pub(crate) fn bit(self) -> u64 {
        match self {
            Letter::H => 0,
            Letter::T => 1,
        }
    }

    pub(crate) fn from_bit(bit: u64) -> Letter {
        if bit & 1 == 0 {
            Letter::H
        } else {
            Letter::T
        }
    }
}

/// A finite word over {H, T}, stored bit-packed.
///
/// H maps to bit 0 and T to bit 1. The first letter occupies the most
/// significant of the `len` used bits, so for a fixed length the numeric
/// order of `bits` is the lexicographic order with H < T. This mapping is
/// part of the crate contract: enumeration order and every CLI output
/// derive from it.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u64,
}

impl Word {
    /// The empty word. Only meaningful as a filler segment; it is rejected
    /// as a game pattern.
    pub fn empty() -> Word {
        Word { len: 0, bits: 0 }
    }

    /// Builds a word from its length and packed bits (first letter = most
    /// significant used bit).
    pub fn from_bits(len: usize, bits: u64) -> Result<Word> {
        if len > MAX_WORD_LEN {
            return Err(Error::WordTooLong(len));
        }
        if bits & !mask(len) != 0 {
            return Err(Error::Parse(format!(
                "bit pattern {bits:#x} does not fit in {len} letters"
            )));
        }
        Ok(Word {
            len: len as u8,
            bits,
        })
    }

    pub fn from_letters(letters: &[Letter]) -> Result<Word> {
        if letters.len() > MAX_WORD_LEN {
            return Err(Error::WordTooLong(letters.len()));
        }
        let mut bits = 0u64;
        for &l in letters {
            bits = (bits << 1) | l.bit();
        }
        Ok(Word {
            len: letters.len() as u8,
            bits,
        })
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Packed representation (see the type-level contract).
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Letter at 0-based position `i`.
    pub fn get(&self, i: usize) -> Letter {
        assert!(i < self.len(), "letter index {i} out of range");
        Letter::from_bit(self.bits >> (self.len() - 1 - i))
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn push(&self, letter: Letter) -> Result<Word> {
        if self.len() + 1 > MAX_WORD_LEN {
            return Err(Error::WordTooLong(self.len() + 1));
        }
        Ok(Word {
            len: self.len + 1,
            bits: (self.bits << 1) | letter.bit(),
        })
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        if self.len() + other.len() > MAX_WORD_LEN {
            return Err(Error::WordTooLong(self.len() + other.len()));
        }
        if self.is_empty() {
            return Ok(*other);
        }
        Ok(Word {
            len: self.len + other.len,
            bits: (self.bits << other.len()) | other.bits,
        })
    }

    /// Contiguous subword of `sublen` letters starting at 0-based `start`.
    pub fn subword(&self, start: usize, sublen: usize) -> Word {
        assert!(start + sublen <= self.len(), "subword out of range");
        if sublen == 0 {
            return Word::empty();
        }
        Word {
            len: sublen as u8,
            bits: (self.bits >> (self.len() - start - sublen)) & mask(sublen),
        }
    }

    pub fn prefix(&self, k: usize) -> Word {
        self.subword(0, k)
    }

    pub fn suffix(&self, k: usize) -> Word {
        self.subword(self.len() - k, k)
    }

    pub(crate) fn prefix_bits(&self, k: usize) -> u64 {
        debug_assert!(k >= 1 && k <= self.len());
        self.bits >> (self.len() - k)
    }

    pub(crate) fn suffix_bits(&self, k: usize) -> u64 {
        debug_assert!(k >= 1 && k <= self.len());
        self.bits & mask(k)
    }

    /// The word read back to front.
    pub fn reverse(&self) -> Word {
        if self.len == 0 {
            return *self;
        }
        Word {
            len: self.len,
            bits: self.bits.reverse_bits() >> (64 - self.len()),
        }
    }

    /// The word with every H and T exchanged.
    pub fn complement(&self) -> Word {
        Word {
            len: self.len,
            bits: self.bits ^ mask(self.len()),
        }
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in self.letters() {
            write!(f, "{}", l.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word(\"{self}\")")
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses an H/T string, case-insensitively.
    fn from_str(text: &str) -> Result<Word> {
        if text.is_empty() {
            return Err(Error::Parse("empty word".into()));
        }
        if text.len() > MAX_WORD_LEN {
            return Err(Error::WordTooLong(text.len()));
        }
        let mut bits = 0u64;
        let mut len = 0u8;
        for c in text.chars() {
            let bit = match c {
                'H' | 'h' => 0,
                'T' | 't' => 1,
                other => {
                    return Err(Error::Parse(format!(
                        "invalid letter {other:?}; expected H or T"
                    )))
                }
            };
            bits = (bits << 1) | bit;
            len += 1;
        }
        Ok(Word { len, bits })
    }
}

/// Parses an H/T string into a [`Word`] (alias for the `FromStr` impl).
pub fn parse_word(text: &str) -> Result<Word> {
    text.parse()
}

impl Serialize for Word {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Word {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Word, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// All `2^len` words of the given length in lexicographic order (H < T).
pub fn enumerate_words(len: usize) -> Result<impl Iterator<Item = Word>> {
    if len == 0 || len > MAX_ENUMERATION_LEN {
        return Err(Error::GuardExceeded(format!(
            "word enumeration supports lengths 1..={MAX_ENUMERATION_LEN}, got {len}"
        )));
    }
    Ok((0..1u64 << len).map(move |bits| Word {
        len: len as u8,
        bits,
    }))
}

/// The set `Cor(A, B)` of correlation indices, kept as a bitmask whose
/// integer value is exactly the correlation number `[A, B]`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CorrelationSet {
    word_len: u8,
    mask: u64,
}

impl CorrelationSet {
    pub fn indices(&self) -> impl Iterator<Item = usize> + '_ {
        let mask = self.mask;
        (1..self.word_len as usize).filter(move |k| mask >> k & 1 == 1)
    }

    pub fn contains(&self, k: usize) -> bool {
        k < 64 && self.mask >> k & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn max_index(&self) -> Option<usize> {
        if self.mask == 0 {
            None
        } else {
            Some(63 - self.mask.leading_zeros() as usize)
        }
    }

    /// Length of the words this set was computed from.
    pub fn word_len(&self) -> usize {
        self.word_len as usize
    }

    /// The base-2 encoding `sum of 2^k over k in Cor`.
    pub fn number(&self) -> CorrelationNumber {
        CorrelationNumber(self.mask)
    }

    pub fn symmetric_difference(&self, other: &CorrelationSet) -> Result<CorrelationSet> {
        if self.word_len != other.word_len {
            return Err(Error::LengthMismatch(self.word_len(), other.word_len()));
        }
        Ok(CorrelationSet {
            word_len: self.word_len,
            mask: self.mask ^ other.mask,
        })
    }
}

impl fmt::Display for CorrelationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, k) in self.indices().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for CorrelationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CorrelationSet({self})")
    }
}

/// `[A, B]`, the integer encoding of a correlation set. Distinct sets map
/// to distinct numbers and the value is always even (indices start at 1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CorrelationNumber(u64);

impl CorrelationNumber {
    pub fn value(&self) -> u64 {
        self.0
    }
}

impl fmt::Display for CorrelationNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `Cor(A, B)`: every `k` in `1..l` with suffix_k(A) = prefix_k(B).
/// `A` and `B` may be the same word (auto-correlation).
pub fn correlation_set(a: &Word, b: &Word) -> Result<CorrelationSet> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch(a.len(), b.len()));
    }
    let l = a.len();
    let mut set = 0u64;
    for k in 1..l {
        if a.suffix_bits(k) == b.prefix_bits(k) {
            set |= 1 << k;
        }
    }
    Ok(CorrelationSet {
        word_len: l as u8,
        mask: set,
    })
}

/// `[A, B]`, the base-2 encoding of `Cor(A, B)`.
pub fn correlation_number(a: &Word, b: &Word) -> Result<CorrelationNumber> {
    Ok(correlation_set(a, b)?.number())
}

/// `Cor(A) = Cor(A, A)`.
pub fn auto_correlation(a: &Word) -> CorrelationSet {
    correlation_set(a, a).expect("same word has equal length")
}

/// An ordered pair of same-length, nonempty words: the two game patterns.
/// Alice holds `a`, Bob holds `b`. The words may coincide; operations that
/// need distinct words check [`Pair::require_distinct`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Pair {
    a: Word,
    b: Word,
}

impl Pair {
    pub fn new(a: Word, b: Word) -> Result<Pair> {
        if a.is_empty() || b.is_empty() {
            return Err(Error::EmptyWord);
        }
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        Ok(Pair { a, b })
    }

    pub fn a(&self) -> &Word {
        &self.a
    }

    pub fn b(&self) -> &Word {
        &self.b
    }

    pub fn word_len(&self) -> usize {
        self.a.len()
    }

    pub fn is_distinct(&self) -> bool {
        self.a != self.b
    }

    pub fn require_distinct(&self) -> Result<()> {
        if self.is_distinct() {
            Ok(())
        } else {
            Err(Error::EqualWords)
        }
    }

    pub fn auto_correlation_a(&self) -> CorrelationSet {
        auto_correlation(&self.a)
    }

    pub fn auto_correlation_b(&self) -> CorrelationSet {
        auto_correlation(&self.b)
    }

    pub fn has_equal_autocorrelation(&self) -> bool {
        self.auto_correlation_a() == self.auto_correlation_b()
    }

    /// Errors with [`Error::AutocorrelationMismatch`] unless Cor(A) = Cor(B).
    pub fn require_equal_autocorrelation(&self) -> Result<()> {
        let caa = self.auto_correlation_a().number().value();
        let cbb = self.auto_correlation_b().number().value();
        if caa == cbb {
            Ok(())
        } else {
            Err(Error::AutocorrelationMismatch(caa, cbb))
        }
    }
}
