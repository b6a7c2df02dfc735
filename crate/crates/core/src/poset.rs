//! Natural unit interval orders and their word statistics.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::foundation::{descents_by, IntVector, Word};

/// A natural unit interval order on `[N]`, encoded by its Hessenberg vector:
/// `i <_P j` iff `hess_i < j`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Nuio {
    hess: Vec<usize>,
}

impl Nuio {
    /// Validates that `hess` is weakly increasing with `i ≤ hess_i ≤ N`, then
    /// re-checks the order axioms on the induced relation.
    pub fn from_hessenberg(hess: &[usize]) -> Result<Self> {
        let n = hess.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidHessenberg(format!(
                "at most {} elements are supported",
                u8::MAX
            )));
        }
        for (i, &h) in hess.iter().enumerate() {
            if h < i + 1 || h > n {
                return Err(Error::InvalidHessenberg(format!(
                    "entry {} is {h}, expected a value in {}..={n}",
                    i + 1,
                    i + 1
                )));
            }
        }
        if hess.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidHessenberg(
                "entries must weakly increase".into(),
            ));
        }
        let p = Nuio {
            hess: hess.to_vec(),
        };
        if let Some(msg) = p.axiom_violation() {
            return Err(Error::InvalidHessenberg(msg));
        }
        Ok(p)
    }

    /// The total order `1 <_P 2 <_P ⋯ <_P N`.
    pub fn chain(n: usize) -> Self {
        Nuio {
            hess: (1..=n).collect(),
        }
    }

    /// The order with no strict relations.
    pub fn antichain(n: usize) -> Self {
        Nuio { hess: vec![n; n] }
    }

    /// Every NUIO on `[n]`, in lexicographic order of Hessenberg vectors.
    pub fn all(n: usize) -> Vec<Nuio> {
        fn go(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Nuio>) {
            if i == n {
                out.push(Nuio { hess: cur.clone() });
                return;
            }
            let lo = cur.last().copied().unwrap_or(0).max(i + 1);
            for h in lo..=n {
                cur.push(h);
                go(i + 1, n, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(0, n, &mut Vec::with_capacity(n), &mut out);
        out
    }

    pub fn size(&self) -> usize {
        self.hess.len()
    }

    pub fn hessenberg(&self) -> &[usize] {
        &self.hess
    }

    /// `a <_P b`.
    pub fn less(&self, a: u8, b: u8) -> bool {
        self.hess[a as usize - 1] < b as usize
    }

    /// `a >_P b`.
    pub fn greater(&self, a: u8, b: u8) -> bool {
        self.less(b, a)
    }

    /// `a ∼_P b`: neither `a <_P b` nor `b <_P a`. Every letter is incomparable
    /// to itself.
    pub fn incomparable(&self, a: u8, b: u8) -> bool {
        !self.less(a, b) && !self.less(b, a)
    }

    /// Checks irreflexivity, transitivity and both unit-interval axioms by
    /// brute force, returning a description of the first failure.
    fn axiom_violation(&self) -> Option<String> {
        let n = self.size() as u8;
        for a in 1..=n {
            if self.less(a, a) {
                return Some(format!("{a} <_P {a}"));
            }
            for b in 1..=n {
                if self.less(a, b) && a >= b {
                    return Some(format!("{a} <_P {b} but {a} ≥ {b}"));
                }
                for c in 1..=n {
                    if self.less(a, b) && self.less(b, c) && !self.less(a, c) {
                        return Some(format!("transitivity fails at {a}, {b}, {c}"));
                    }
                    if self.less(a, c)
                        && self.incomparable(a, b)
                        && self.incomparable(b, c)
                        && !(a < b && b < c)
                    {
                        return Some(format!(
                            "{b} is incomparable to {a} <_P {c} but not between them"
                        ));
                    }
                }
            }
        }
        None
    }

    pub fn satisfies_axioms(&self) -> bool {
        self.axiom_violation().is_none()
    }
}

pub fn nuio_from_hessenberg(hess: &[usize]) -> Result<Nuio> {
    Nuio::from_hessenberg(hess)
}

impl fmt::Debug for Nuio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Nuio({self})")
    }
}

impl fmt::Display for Nuio {
    /// Comma-separated Hessenberg vector, e.g. `2,3,4,5,5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.hess.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Nuio {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Nuio::from_hessenberg(&[]);
        }
        let hess = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidHessenberg(format!("cannot parse {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Nuio::from_hessenberg(&hess)
    }
}

/// `Des_P(w) = {i : w_i >_P w_{i+1}}`, 1-based.
pub fn des_p(w: &Word, p: &Nuio) -> BTreeSet<usize> {
    descents_by(w, |a, b| p.greater(a, b))
}

/// Pairs `i < j` with `w_i > w_j` and `w_i ∼_P w_j`.
pub fn inv_p(w: &Word, p: &Nuio) -> usize {
    let l = w.letters();
    (0..l.len())
        .flat_map(|i| (i + 1..l.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| l[i] > l[j] && p.incomparable(l[i], l[j]))
        .count()
}

/// The `k`-element chains `t_1 <_P ⋯ <_P t_k`, each stored as its increasing
/// letter sequence, in lexicographic order.
pub fn chains(p: &Nuio, k: usize) -> Vec<Vec<u8>> {
    fn go(p: &Nuio, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        let start = cur
            .last()
            .map_or(1, |&t| p.hessenberg()[t as usize - 1] + 1);
        for t in start..=p.size() {
            cur.push(t as u8);
            go(p, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(p, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// The size of a longest chain; 0 for the empty poset.
pub fn height(p: &Nuio) -> usize {
    // Greedy jumps from 1 along the Hessenberg vector realize a longest chain.
    let mut len = 0;
    let mut next = 1;
    while next <= p.size() {
        len += 1;
        next = p.hessenberg()[next - 1] + 1;
    }
    len
}

/// Which letters `k` contribute `β_k` to `deg_P(i, β)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum DegVariant {
    /// Letters `k < i` incomparable to `i`: the cross-inversions between a
    /// removed prefix letter `i` and the remaining suffix.
    A,
    /// Letters `k > i` incomparable to `i`.
    #[default]
    B,
}

impl fmt::Display for DegVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DegVariant::A => "a",
            DegVariant::B => "b",
        })
    }
}

impl FromStr for DegVariant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(DegVariant::A),
            "b" => Ok(DegVariant::B),
            other => Err(format!("unknown degree variant {other:?}, expected a or b")),
        }
    }
}

/// `deg_P(i, β)` for a single letter.
pub fn deg_p(i: u8, beta: &IntVector, p: &Nuio, variant: DegVariant) -> i64 {
    (1..=p.size() as u8)
        .filter(|&k| {
            let side = match variant {
                DegVariant::A => k < i,
                DegVariant::B => k > i,
            };
            side && p.incomparable(i, k)
        })
        .map(|k| beta.get(k as usize - 1))
        .sum()
}

/// `deg_P(S, β) = Σ_{i ∈ S} deg_P(i, β)` for a multiset `S` given as a letter list.
pub fn deg_p_multiset(s: &[u8], beta: &IntVector, p: &Nuio, variant: DegVariant) -> i64 {
    s.iter().map(|&i| deg_p(i, beta, p, variant)).sum()
}

/// The multiset `S_α = {1^{α_1}, …, N^{α_N}}` as a sorted letter list.
pub fn multiset_of(alpha: &IntVector) -> Vec<u8> {
    alpha
        .entries()
        .iter()
        .enumerate()
        .flat_map(|(i, &a)| std::iter::repeat_n(i as u8 + 1, a.max(0) as usize))
        .collect()
}

/// `N_{P,k}`: words of length `k` with no P-descents and no nontrivial
/// left-to-right P-maxima, optionally restricted to a content vector.
pub fn n_words(p: &Nuio, k: usize, content: Option<&IntVector>) -> Vec<Word> {
    let n = p.size();
    let mut remaining: Option<Vec<i64>> = content.map(|c| c.entries().to_vec());
    if let Some(r) = &remaining {
        if r.len() != n || r.iter().any(|&x| x < 0) || r.iter().sum::<i64>() != k as i64 {
            return Vec::new();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    extend_n_word(p, k, &mut remaining, &mut cur, &mut out);
    out
}

fn extend_n_word(
    p: &Nuio,
    k: usize,
    remaining: &mut Option<Vec<i64>>,
    cur: &mut Vec<u8>,
    out: &mut Vec<Word>,
) {
    if cur.len() == k {
        out.push(Word::new(cur.clone()));
        return;
    }
    for x in 1..=p.size() as u8 {
        if let Some(r) = remaining.as_ref() {
            if r[x as usize - 1] == 0 {
                continue;
            }
        }
        if let Some(&prev) = cur.last() {
            if p.greater(prev, x) {
                continue;
            }
            if cur.iter().all(|&y| p.greater(x, y)) {
                continue;
            }
        }
        if let Some(r) = remaining.as_mut() {
            r[x as usize - 1] -= 1;
        }
        cur.push(x);
        extend_n_word(p, k, remaining, cur, out);
        cur.pop();
        if let Some(r) = remaining.as_mut() {
            r[x as usize - 1] += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::QPoly;

    fn example_order() -> Nuio {
        Nuio::from_hessenberg(&[2, 3, 4, 5, 5]).unwrap()
    }

    #[test]
    fn hessenberg_encoding() {
        let p = example_order();
        for i in 1..=5u8 {
            for j in 1..=5u8 {
                assert_eq!(p.less(i, j), j as i32 - i as i32 >= 2, "{i} {j}");
            }
        }
        let chain = Nuio::from_hessenberg(&[1, 2]).unwrap();
        assert!(chain.less(1, 2));
        assert_eq!(chain, Nuio::chain(2));
        let anti = Nuio::from_hessenberg(&[2, 2]).unwrap();
        assert!(anti.incomparable(1, 2));
        assert_eq!(anti, Nuio::antichain(2));
        assert_eq!("2,3,4,5,5".parse::<Nuio>().unwrap(), p);
        assert_eq!(p.to_string(), "2,3,4,5,5");
    }

    #[test]
    fn rejects_bad_vectors() {
        assert!(Nuio::from_hessenberg(&[1, 1]).is_err());
        assert!(Nuio::from_hessenberg(&[3, 2, 3]).is_err());
        assert!(Nuio::from_hessenberg(&[2, 3, 4]).is_err());
        assert!("2,x".parse::<Nuio>().is_err());
    }

    #[test]
    fn counts_are_catalan() {
        let counts: Vec<usize> = (0..=6).map(|n| Nuio::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn word_statistics() {
        let p = example_order();
        assert_eq!(inv_p(&Word::from_digits("543321"), &p), 6);
        assert_eq!(des_p(&Word::from_digits("31"), &p), BTreeSet::from([1]));
        assert!(des_p(&Word::from_digits("21"), &p).is_empty());
        assert_eq!(inv_p(&Word::from_digits("12"), &p), 0);
    }

    #[test]
    fn chains_and_height() {
        let p = example_order();
        let c2: Vec<Vec<u8>> = chains(&p, 2);
        assert_eq!(
            c2,
            vec![
                vec![1, 3],
                vec![1, 4],
                vec![1, 5],
                vec![2, 4],
                vec![2, 5],
                vec![3, 5]
            ]
        );
        assert_eq!(chains(&p, 1).len(), 5);
        assert_eq!(chains(&p, 3), vec![vec![1, 3, 5]]);
        assert!(chains(&p, 4).is_empty());
        assert_eq!(height(&p), 3);
        assert_eq!(height(&Nuio::antichain(4)), 1);
        assert_eq!(height(&Nuio::chain(4)), 4);
    }

    #[test]
    fn degree_tables() {
        let p = example_order();
        let beta = IntVector::new(vec![1, 1, 2, 1, 1]);
        let expected_b = [2, 2, 1, 3, 2, 1];
        for (t, want) in chains(&p, 2).iter().zip(expected_b) {
            let rest = &beta - &IntVector::indicator(5, t);
            assert_eq!(deg_p_multiset(t, &rest, &p, DegVariant::B), want, "{t:?}");
        }
        let alpha = IntVector::new(vec![0, 0, 0, 1, 1]);
        let s = multiset_of(&alpha);
        assert_eq!(s, vec![4, 5]);
        assert_eq!(deg_p_multiset(&s, &(&beta - &alpha), &p, DegVariant::B), 0);
        assert_eq!(deg_p(1, &beta, &p, DegVariant::A), 0);
    }

    #[test]
    fn n_word_examples() {
        let p = example_order();
        let beta = IntVector::new(vec![1, 1, 2, 1, 1]);
        let words = n_words(&p, 6, Some(&beta));
        assert_eq!(words.len(), 12);
        let total: QPoly = words.iter().map(|w| QPoly::q_pow(inv_p(w, &p))).sum();
        assert_eq!(total, QPoly::from_ints(&[1, 2, 2, 2, 2, 2, 1]));
        assert_eq!(n_words(&p, 1, None).len(), 5);
        assert_eq!(n_words(&p, 0, None), vec![Word::empty()]);
    }
}
