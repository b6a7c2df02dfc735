//! Words on a finite alphabet `[N] = {1, ..., N}` and integer content vectors.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Index, Sub};

use crate::error::{Error, Result};
use crate::foundation::partition::Partition;

/// Largest supported alphabet.
pub const MAX_ALPHABET: usize = u8::MAX as usize;

/// A finite word; letters are positive and compared as integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word(Vec<u8>);

impl Word {
    pub fn new(letters: Vec<u8>) -> Self {
        debug_assert!(letters.iter().all(|&l| l > 0));
        Word(letters)
    }

    /// Builds a word and checks every letter lies in `1..=n`.
    pub fn with_alphabet(letters: &[usize], n: usize) -> Result<Self> {
        if n > MAX_ALPHABET {
            return Err(Error::AlphabetTooSmall {
                needed: n,
                bound: MAX_ALPHABET,
            });
        }
        for &l in letters {
            if l == 0 || l > n {
                return Err(Error::LetterOutOfRange {
                    letter: l,
                    bound: n,
                });
            }
        }
        Ok(Word(letters.iter().map(|&l| l as u8).collect()))
    }

    /// Parses a string of single digits such as `"53141634"`.
    ///
    /// Panics on non-digit characters; intended for literals in tests and examples.
    pub fn from_digits(s: &str) -> Self {
        Word(
            s.chars()
                .map(|c| c.to_digit(10).expect("digit") as u8)
                .collect(),
        )
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_letter(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn fits_alphabet(&self, n: usize) -> bool {
        self.max_letter() <= n
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    /// Number of occurrences of each letter `1..=n`.
    pub fn content(&self, n: usize) -> IntVector {
        let mut c = vec![0i64; n];
        for &l in &self.0 {
            c[l as usize - 1] += 1;
        }
        IntVector(c)
    }

    /// The word sorted into weakly increasing order.
    pub fn sorted(&self) -> Word {
        let mut v = self.0.clone();
        v.sort_unstable();
        Word(v)
    }
}

impl Index<usize> for Word {
    type Output = u8;
    fn index(&self, i: usize) -> &u8 {
        &self.0[i]
    }
}

impl From<Vec<u8>> for Word {
    fn from(v: Vec<u8>) -> Self {
        Word::new(v)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Word {
    /// Concatenated digits when every letter is below 10, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "ε");
        }
        if self.0.iter().all(|&l| l < 10) {
            for l in &self.0 {
                write!(f, "{l}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|l| l.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Positions `i` (1-based) with `w_i > w_{i+1}`.
pub fn descent_set(w: &Word) -> BTreeSet<usize> {
    descents_by(w, |a, b| a > b)
}

/// Positions `i` (1-based) where `greater(w_i, w_{i+1})` holds.
pub fn descents_by(w: &Word, greater: impl Fn(u8, u8) -> bool) -> BTreeSet<usize> {
    w.0.windows(2)
        .enumerate()
        .filter(|(_, pair)| greater(pair[0], pair[1]))
        .map(|(i, _)| i + 1)
        .collect()
}

/// A fixed-length integer vector: contents `β ∈ N^N`, indicator vectors `ε_S`, differences.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVector(Vec<i64>);

impl IntVector {
    pub fn new(entries: Vec<i64>) -> Self {
        IntVector(entries)
    }

    pub fn zeros(n: usize) -> Self {
        IntVector(vec![0; n])
    }

    pub fn from_usizes(entries: &[usize]) -> Self {
        IntVector(entries.iter().map(|&e| e as i64).collect())
    }

    /// `ε_i` for 1-based `i`.
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        IntVector(v)
    }

    /// `β_S`: entry `i` counts the occurrences of letter `i` in the multiset `letters`.
    pub fn indicator(n: usize, letters: &[u8]) -> Self {
        let mut v = vec![0; n];
        for &l in letters {
            v[l as usize - 1] += 1;
        }
        IntVector(v)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &IntVector) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Entries as counts; `None` if any entry is negative.
    pub fn as_counts(&self) -> Option<Vec<usize>> {
        self.0.iter().map(|&x| usize::try_from(x).ok()).collect()
    }

    /// All nonnegative vectors `α <= self` with `|α| = total`, in lexicographic order.
    pub fn sub_vectors_of_sum(&self, total: usize) -> Vec<IntVector> {
        fn go(bound: &[i64], i: usize, rest: i64, cur: &mut Vec<i64>, out: &mut Vec<IntVector>) {
            if i == bound.len() {
                if rest == 0 {
                    out.push(IntVector(cur.clone()));
                }
                return;
            }
            let tail: i64 = bound[i + 1..].iter().map(|&b| b.max(0)).sum();
            for a in 0..=bound[i].max(0).min(rest) {
                if rest - a > tail {
                    continue;
                }
                cur.push(a);
                go(bound, i + 1, rest - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, total as i64, &mut Vec::new(), &mut out);
        out
    }

    /// All nonnegative vectors of length `n` with entry sum at most `max_total`.
    pub fn all_nonnegative(n: usize, max_total: usize) -> Vec<IntVector> {
        let bound = IntVector(vec![max_total as i64; n]);
        (0..=max_total)
            .flat_map(|t| bound.sub_vectors_of_sum(t))
            .collect()
    }
}

impl Add for &IntVector {
    type Output = IntVector;
    fn add(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.0.len(), rhs.0.len());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &IntVector {
    type Output = IntVector;
    fn sub(self, rhs: &IntVector) -> IntVector {
        assert_eq!(self.0.len(), rhs.0.len());
        IntVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All words whose letter `i` appears `content[i-1]` times, in lexicographic order.
pub fn words_of_content(content: &[usize]) -> Vec<Word> {
    fn go(counts: &mut [usize], rest: usize, cur: &mut Vec<u8>, out: &mut Vec<Word>) {
        if rest == 0 {
            out.push(Word(cur.clone()));
            return;
        }
        for i in 0..counts.len() {
            if counts[i] > 0 {
                counts[i] -= 1;
                cur.push(i as u8 + 1);
                go(counts, rest - 1, cur, out);
                cur.pop();
                counts[i] += 1;
            }
        }
    }
    let mut counts = content.to_vec();
    let total = counts.iter().sum();
    let mut out = Vec::new();
    go(&mut counts, total, &mut Vec::with_capacity(total), &mut out);
    out
}

/// All words of length `len` on `[n]`, in lexicographic order.
pub fn all_words(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|w| {
                (1..=n as u8).map(move |l| {
                    let mut v = w.0.clone();
                    v.push(l);
                    Word(v)
                })
            })
            .collect();
    }
    out
}

/// The set `[λ]` of distinct rearrangements of `1^{λ_1} 2^{λ_2} ⋯`.
pub fn distinct_permutation_class(lambda: &Partition, n: usize) -> Result<Vec<Word>> {
    if lambda.len() > n {
        return Err(Error::AlphabetTooSmall {
            needed: lambda.len(),
            bound: n,
        });
    }
    let mut content = lambda.parts().to_vec();
    content.resize(n, 0);
    Ok(words_of_content(&content))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descents() {
        let w = Word::from_digits("53141634");
        assert_eq!(descent_set(&w), [1, 2, 4, 6].into_iter().collect());
        assert!(descent_set(&Word::from_digits("1123")).is_empty());
        assert_eq!(
            descent_set(&Word::from_digits("21")),
            [1].into_iter().collect()
        );
    }

    #[test]
    fn class_of_211() {
        let lambda = Partition::new(vec![2, 1, 1]).unwrap();
        let class = distinct_permutation_class(&lambda, 3).unwrap();
        let expected: Vec<Word> = [
            "1123", "1132", "1213", "1231", "1312", "1321", "2113", "2131", "2311", "3112", "3121",
            "3211",
        ]
        .iter()
        .map(|s| Word::from_digits(s))
        .collect();
        assert_eq!(class, expected);
    }

    #[test]
    fn small_classes() {
        let ones = Partition::new(vec![1, 1]).unwrap();
        assert_eq!(
            distinct_permutation_class(&ones, 2).unwrap(),
            vec![Word::from_digits("12"), Word::from_digits("21")]
        );
        let two = Partition::new(vec![2]).unwrap();
        assert_eq!(
            distinct_permutation_class(&two, 1).unwrap(),
            vec![Word::from_digits("11")]
        );
        assert!(matches!(
            distinct_permutation_class(&ones, 1),
            Err(Error::AlphabetTooSmall { .. })
        ));
    }

    #[test]
    fn sub_vectors() {
        let beta = IntVector::new(vec![1, 1, 2, 1, 1]);
        let subs = beta.sub_vectors_of_sum(2);
        assert!(subs.iter().all(|a| a.le(&beta) && a.sum() == 2));
        // choose 2 from {1,2,3,3',4,5} as multisets: C(5,2) + 1 = 11
        assert_eq!(subs.len(), 11);
    }

    #[test]
    fn letter_validation() {
        assert!(Word::with_alphabet(&[1, 3], 2).is_err());
        assert!(Word::with_alphabet(&[0], 2).is_err());
        assert_eq!(
            Word::with_alphabet(&[2, 1], 2).unwrap(),
            Word::from_digits("21")
        );
    }
}
