//! The free algebra `U = Q⟨u_1, …, u_N⟩` with `q`-polynomial coefficients, its
//! dual space of words, noncommutative symmetric generators and the `F_γ`
//! functionals.
//!
//! Generators come in two flavours that differ only in the order used to read
//! "decreasing": the integer order on `[N]` and the order `<_P` of a unit
//! interval order. Both are expressed through [`LetterOrder`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::foundation::{descents_by, QPoly, Word};
use crate::poset::Nuio;
use crate::symfun::{fundamental_to_monomial, QSymElem};

/// A strict order on the letters `1..=alphabet()`.
pub trait LetterOrder {
    fn alphabet(&self) -> usize;
    fn greater(&self, a: u8, b: u8) -> bool;
}

/// The usual order on `[N]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NaturalOrder(pub usize);

impl LetterOrder for NaturalOrder {
    fn alphabet(&self) -> usize {
        self.0
    }

    fn greater(&self, a: u8, b: u8) -> bool {
        a > b
    }
}

impl LetterOrder for Nuio {
    fn alphabet(&self) -> usize {
        self.size()
    }

    fn greater(&self, a: u8, b: u8) -> bool {
        Nuio::greater(self, a, b)
    }
}

type WordTerms = BTreeMap<Word, QPoly>;

fn add_word_term(terms: &mut WordTerms, w: Word, c: &QPoly) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match terms.entry(w) {
        Entry::Occupied(mut slot) => {
            *slot.get_mut() += c;
            if slot.get().is_zero() {
                slot.remove();
            }
        }
        Entry::Vacant(slot) => {
            slot.insert(c.clone());
        }
    }
}

fn check_word(w: &Word, n: usize) -> Result<()> {
    match w.letters().iter().find(|&&x| x == 0 || x as usize > n) {
        Some(&x) => Err(Error::LetterOutOfRange {
            letter: x as usize,
            bound: n,
        }),
        None => Ok(()),
    }
}

fn fmt_terms(f: &mut fmt::Formatter<'_>, terms: &WordTerms, prefix: &str) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (w, c)) in terms.iter().enumerate() {
        if i > 0 {
            write!(f, " + ")?;
        }
        if c.is_one() {
            write!(f, "{prefix}{w}")?;
        } else {
            write!(f, "({c}){prefix}{w}")?;
        }
    }
    Ok(())
}

/// An element of `U`: a finite sum of words with `q`-polynomial coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct NCElem {
    n: usize,
    terms: WordTerms,
}

impl NCElem {
    pub fn zero(n: usize) -> Self {
        NCElem {
            n,
            terms: WordTerms::new(),
        }
    }

    /// The empty word.
    pub fn one(n: usize) -> Self {
        Self::monomial(n, Word::empty()).expect("the empty word fits any alphabet")
    }

    pub fn monomial(n: usize, w: Word) -> Result<Self> {
        let mut out = Self::zero(n);
        out.add_term(w, &QPoly::one())?;
        Ok(out)
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, QPoly)>>(n: usize, terms: I) -> Result<Self> {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            out.add_term(w, &c)?;
        }
        Ok(out)
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Word, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> QPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: &QPoly) -> Result<()> {
        check_word(&w, self.n)?;
        add_word_term(&mut self.terms, w, c);
        Ok(())
    }

    pub fn scale(&self, c: &QPoly) -> NCElem {
        let mut out = NCElem::zero(self.n);
        for (w, x) in &self.terms {
            add_word_term(&mut out.terms, w.clone(), &(x * c));
        }
        out
    }

    /// The distinct word lengths in the support.
    pub fn degrees(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Word::len).collect()
    }

    fn assert_same_alphabet(&self, other: &NCElem) {
        assert_eq!(
            self.n, other.n,
            "free algebra elements over different alphabets"
        );
    }
}

impl fmt::Debug for NCElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms, "u")
    }
}

impl Add for &NCElem {
    type Output = NCElem;

    fn add(self, rhs: &NCElem) -> NCElem {
        self.assert_same_alphabet(rhs);
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            add_word_term(&mut out.terms, w.clone(), c);
        }
        out
    }
}

impl Sub for &NCElem {
    type Output = NCElem;

    fn sub(self, rhs: &NCElem) -> NCElem {
        self + &(-rhs)
    }
}

impl Neg for &NCElem {
    type Output = NCElem;

    fn neg(self) -> NCElem {
        NCElem {
            n: self.n,
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }
}

impl Mul for &NCElem {
    type Output = NCElem;

    /// Concatenation, extended bilinearly.
    fn mul(self, rhs: &NCElem) -> NCElem {
        self.assert_same_alphabet(rhs);
        let mut out = NCElem::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                add_word_term(&mut out.terms, a.concat(b), &(x * y));
            }
        }
        out
    }
}

/// An element of the dual space `U*`: a finite formal sum of words.
#[derive(Clone, PartialEq, Eq)]
pub struct DualElem {
    n: usize,
    terms: WordTerms,
}

impl DualElem {
    pub fn zero(n: usize) -> Self {
        DualElem {
            n,
            terms: WordTerms::new(),
        }
    }

    pub fn word(n: usize, w: Word) -> Result<Self> {
        let mut out = Self::zero(n);
        out.add_term(w, &QPoly::one())?;
        Ok(out)
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, QPoly)>>(n: usize, terms: I) -> Result<Self> {
        let mut out = Self::zero(n);
        for (w, c) in terms {
            out.add_term(w, &c)?;
        }
        Ok(out)
    }

    /// The sum of the given words, each with coefficient 1.
    pub fn sum_of_words<I: IntoIterator<Item = Word>>(n: usize, words: I) -> Result<Self> {
        Self::from_terms(n, words.into_iter().map(|w| (w, QPoly::one())))
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Word, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, w: &Word) -> QPoly {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Word, c: &QPoly) -> Result<()> {
        check_word(&w, self.n)?;
        add_word_term(&mut self.terms, w, c);
        Ok(())
    }
}

impl fmt::Debug for DualElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_terms(f, &self.terms, "")
    }
}

/// `Σ u_{i_1}⋯u_{i_k}` over `i_1 > ⋯ > i_k` in the given order; `ee_0 = 1`.
pub fn ee<O: LetterOrder + ?Sized>(k: usize, order: &O) -> NCElem {
    let n = order.alphabet();
    let mut out = NCElem::zero(n);
    let mut cur = Vec::with_capacity(k);
    sequences(order, k, &|o, a, b| o.greater(a, b), &mut cur, &mut out);
    out
}

/// `Σ u_{i_1}⋯u_{i_k}` over `i_1 ≯ ⋯ ≯ i_k`: the closed form of `hh_k`.
pub fn hh_direct<O: LetterOrder + ?Sized>(k: usize, order: &O) -> NCElem {
    let n = order.alphabet();
    let mut out = NCElem::zero(n);
    let mut cur = Vec::with_capacity(k);
    sequences(order, k, &|o, a, b| !o.greater(a, b), &mut cur, &mut out);
    out
}

fn sequences<O: LetterOrder + ?Sized>(
    order: &O,
    k: usize,
    step: &dyn Fn(&O, u8, u8) -> bool,
    cur: &mut Vec<u8>,
    out: &mut NCElem,
) {
    if cur.len() == k {
        add_word_term(&mut out.terms, Word::new(cur.clone()), &QPoly::one());
        return;
    }
    for x in 1..=order.alphabet() as u8 {
        if cur.last().is_some_and(|&prev| !step(order, prev, x)) {
            continue;
        }
        cur.push(x);
        sequences(order, k, step, cur, out);
        cur.pop();
    }
}

/// `hh_0, …, hh_k` from `hh_j = ee_1 hh_{j-1} − ee_2 hh_{j-2} + ⋯ + (−1)^{j-1} ee_j`.
fn hh_table<O: LetterOrder + ?Sized>(k: usize, order: &O, es: &[NCElem]) -> Vec<NCElem> {
    let n = order.alphabet();
    let mut hs = vec![NCElem::one(n)];
    for j in 1..=k {
        let mut h = NCElem::zero(n);
        for i in 1..=j {
            let term = &es[i] * &hs[j - i];
            h = if i % 2 == 1 { &h + &term } else { &h - &term };
        }
        hs.push(h);
    }
    hs
}

fn ee_table<O: LetterOrder + ?Sized>(k: usize, order: &O) -> Vec<NCElem> {
    (0..=k).map(|i| ee(i, order)).collect()
}

/// `hh_k` by the defining recursion in terms of `ee_1, …, ee_k`.
pub fn hh<O: LetterOrder + ?Sized>(k: usize, order: &O) -> NCElem {
    let es = ee_table(k, order);
    hh_table(k, order, &es)
        .pop()
        .expect("table has k + 1 entries")
}

/// `hh_λ = hh_{λ_1} ⋯ hh_{λ_ℓ}`.
pub fn hh_product<O: LetterOrder + ?Sized>(parts: &[usize], order: &O) -> NCElem {
    let top = parts.iter().copied().max().unwrap_or(0);
    let es = ee_table(top, order);
    let hs = hh_table(top, order, &es);
    parts
        .iter()
        .fold(NCElem::one(order.alphabet()), |acc, &p| &acc * &hs[p])
}

/// `pp_k = ee_1 hh_{k-1} − 2 ee_2 hh_{k-2} + ⋯ + (−1)^{k-1} k ee_k`.
pub fn pp<O: LetterOrder + ?Sized>(k: usize, order: &O) -> NCElem {
    let n = order.alphabet();
    let es = ee_table(k, order);
    let hs = hh_table(k, order, &es);
    let mut out = NCElem::zero(n);
    for i in 1..=k {
        let sign = if i % 2 == 1 { 1 } else { -1 };
        let term = (&es[i] * &hs[k - i]).scale(&QPoly::from_int(sign * i as i64));
        out = &out + &term;
    }
    out
}

/// `Σ_σ sgn(σ) ee_{λ'_1+σ_1−1} ⋯ ee_{λ'_m+σ_m−m}` with `m = λ_1`, the
/// product taken left to right in `i`.
pub fn schur<O: LetterOrder + ?Sized>(lambda: &crate::Partition, order: &O) -> NCElem {
    let n = order.alphabet();
    let conj = lambda.conjugate();
    let m = lambda.part(0);
    let top = conj.part(0) + m;
    let es = ee_table(top, order);
    let mut out = NCElem::zero(n);
    let mut used = vec![false; m];
    let mut perm = Vec::with_capacity(m);
    schur_terms(&conj, &es, &mut used, &mut perm, NCElem::one(n), &mut out);
    out
}

fn schur_terms(
    conj: &crate::Partition,
    es: &[NCElem],
    used: &mut [bool],
    perm: &mut Vec<usize>,
    acc: NCElem,
    out: &mut NCElem,
) {
    let m = used.len();
    let i = perm.len();
    if i == m {
        let inversions = (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .filter(|&(a, b)| perm[a] > perm[b])
            .count();
        *out = if inversions % 2 == 0 {
            &*out + &acc
        } else {
            &*out - &acc
        };
        return;
    }
    for j in 0..m {
        if used[j] {
            continue;
        }
        let idx = conj.part(i) as i64 + j as i64 - i as i64;
        if idx < 0 || idx as usize >= es.len() {
            continue;
        }
        let next = &acc * &es[idx as usize];
        if next.is_zero() {
            continue;
        }
        used[j] = true;
        perm.push(j);
        schur_terms(conj, es, used, perm, next, out);
        perm.pop();
        used[j] = false;
    }
}

pub fn nc_e(k: usize, n: usize) -> NCElem {
    ee(k, &NaturalOrder(n))
}

pub fn nc_e_p(k: usize, p: &Nuio) -> NCElem {
    ee(k, p)
}

pub fn nc_h(k: usize, n: usize) -> NCElem {
    hh(k, &NaturalOrder(n))
}

pub fn nc_h_p(k: usize, p: &Nuio) -> NCElem {
    hh(k, p)
}

pub fn nc_p(k: usize, n: usize) -> NCElem {
    pp(k, &NaturalOrder(n))
}

pub fn nc_p_p(k: usize, p: &Nuio) -> NCElem {
    pp(k, p)
}

pub fn nc_schur(lambda: &crate::Partition, n: usize) -> NCElem {
    schur(lambda, &NaturalOrder(n))
}

pub fn nc_schur_p(lambda: &crate::Partition, p: &Nuio) -> NCElem {
    schur(lambda, p)
}

/// `⟨z, γ⟩ = Σ_w z_w γ_w`.
pub fn pairing(z: &NCElem, gamma: &DualElem) -> Result<QPoly> {
    if z.n != gamma.n {
        return Err(Error::AlphabetMismatch {
            left: z.n,
            right: gamma.n,
        });
    }
    let (small, large) = if z.terms.len() <= gamma.terms.len() {
        (&z.terms, &gamma.terms)
    } else {
        (&gamma.terms, &z.terms)
    };
    Ok(small
        .iter()
        .filter_map(|(w, a)| large.get(w).map(|b| a * b))
        .sum())
}

/// Expands `Σ c · F_{d,S}` from a table keyed by `(d, S)`.
fn expand_fundamentals(table: BTreeMap<(usize, BTreeSet<usize>), QPoly>) -> QSymElem {
    let mut out = QSymElem::zero();
    for ((d, set), c) in table {
        if c.is_zero() {
            continue;
        }
        let f = fundamental_to_monomial(d, &set).expect("descent sets lie in [d-1]");
        out.add_scaled(&f, &c);
    }
    out
}

fn accumulate(
    table: &mut BTreeMap<(usize, BTreeSet<usize>), QPoly>,
    key: (usize, BTreeSet<usize>),
    c: QPoly,
) {
    *table.entry(key).or_default() += c;
}

/// `F_γ = Σ_w γ_w F_{|w|, Des(w)}` with descents read in `order`.
pub fn f_gamma_by<O: LetterOrder + ?Sized>(gamma: &DualElem, order: &O) -> QSymElem {
    let mut table = BTreeMap::new();
    for (w, c) in &gamma.terms {
        let des = descents_by(w, |a, b| order.greater(a, b));
        accumulate(&mut table, (w.len(), des), c.clone());
    }
    expand_fundamentals(table)
}

/// `F_γ` with the plain descent set.
pub fn f_gamma(gamma: &DualElem) -> QSymElem {
    f_gamma_by(gamma, &NaturalOrder(gamma.n))
}

/// `F^P_γ` with P-descents.
pub fn f_gamma_p(gamma: &DualElem, p: &Nuio) -> QSymElem {
    f_gamma_by(gamma, p)
}

/// `⟨z · Ω, γ⟩`, where `Ω = Σ_w u_w F_{|w|, Des(w)}` with descents read in
/// `order`. Each word of `γ` is split as `w = u·v` with `u` in the support of
/// `z`, contributing `z_u γ_w F_{|v|, Des(v)}`.
pub fn omega_pairing<O: LetterOrder + ?Sized>(
    z: &NCElem,
    gamma: &DualElem,
    order: &O,
) -> Result<QSymElem> {
    if z.n != gamma.n {
        return Err(Error::AlphabetMismatch {
            left: z.n,
            right: gamma.n,
        });
    }
    let lengths = z.degrees();
    let mut table = BTreeMap::new();
    for (w, c) in &gamma.terms {
        for &j in lengths.iter().filter(|&&j| j <= w.len()) {
            let Some(zc) = z.terms.get(&w.slice(0, j)) else {
                continue;
            };
            let suffix = w.slice(j, w.len());
            let des = descents_by(&suffix, |a, b| order.greater(a, b));
            accumulate(&mut table, (suffix.len(), des), zc * c);
        }
    }
    Ok(expand_fundamentals(table))
}
