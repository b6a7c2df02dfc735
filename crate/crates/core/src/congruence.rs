//! Word congruences generated by binomial relations, and the ideals and perp
//! spaces they determine.
//!
//! Each ideal `I` handled here is spanned by differences `u_w − u_{w'}` of
//! congruent words. Hence `z ∈ I` exactly when the coefficients of `z` sum to
//! zero over every congruence class, and `γ ∈ I^⊥` exactly when `γ` is constant
//! on classes. Classes preserve length and content, so they are finite.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Mutex;

use crate::foundation::{words_of_content, QPoly, Word};
use crate::freealg::{ee, DualElem, LetterOrder, NCElem, NaturalOrder};
use crate::poset::Nuio;
use crate::tableaux::rsk_p_tableau;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CongruenceKind {
    /// Commuting letters: `u_a u_b ≡ u_b u_a`.
    Content,
    /// Knuth relations.
    Plactic,
    /// `u_a u_c ≡ u_c u_a` for `a <_P c`, and `u_b u_a u_c ≡ u_a u_c u_b` for
    /// `a ∼_P b`, `b ∼_P c`, `a <_P c`.
    UnitInterval(Nuio),
}

/// A congruence on words over `[N]` with a canonical representative for each class.
pub struct WordCongruence {
    kind: CongruenceKind,
    n: usize,
    memo: Mutex<HashMap<Word, Word>>,
}

impl WordCongruence {
    fn with_kind(kind: CongruenceKind, n: usize) -> Self {
        WordCongruence {
            kind,
            n,
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn content(n: usize) -> Self {
        Self::with_kind(CongruenceKind::Content, n)
    }

    pub fn plactic(n: usize) -> Self {
        Self::with_kind(CongruenceKind::Plactic, n)
    }

    pub fn unit_interval(p: Nuio) -> Self {
        let n = p.size();
        Self::with_kind(CongruenceKind::UnitInterval(p), n)
    }

    pub fn kind(&self) -> &CongruenceKind {
        &self.kind
    }

    pub fn alphabet(&self) -> usize {
        self.n
    }

    /// The words reachable from `w` by one application of a defining relation.
    pub fn neighbors(&self, w: &Word) -> Vec<Word> {
        let l = w.letters();
        let mut out = Vec::new();
        let mut push = |i: usize, replacement: &[u8]| {
            let mut v = l.to_vec();
            v[i..i + replacement.len()].copy_from_slice(replacement);
            out.push(Word::new(v));
        };
        match &self.kind {
            CongruenceKind::Content => {
                for i in 0..l.len().saturating_sub(1) {
                    if l[i] != l[i + 1] {
                        push(i, &[l[i + 1], l[i]]);
                    }
                }
            }
            CongruenceKind::Plactic => {
                for i in 0..l.len().saturating_sub(2) {
                    let (x, y, z) = (l[i], l[i + 1], l[i + 2]);
                    // acb ↔ cab for a ≤ b < c
                    if x <= z && z < y || y <= z && z < x {
                        push(i, &[y, x]);
                    }
                    // bac ↔ bca for a < b ≤ c
                    if y < x && x <= z || z < x && x <= y {
                        push(i + 1, &[z, y]);
                    }
                }
            }
            CongruenceKind::UnitInterval(p) => {
                for i in 0..l.len().saturating_sub(1) {
                    let (x, y) = (l[i], l[i + 1]);
                    if !p.incomparable(x, y) {
                        push(i, &[y, x]);
                    }
                }
                for i in 0..l.len().saturating_sub(2) {
                    let (x, y, z) = (l[i], l[i + 1], l[i + 2]);
                    // bac → acb
                    if p.incomparable(y, x) && p.incomparable(x, z) && p.less(y, z) {
                        push(i, &[y, z, x]);
                    }
                    // acb → bac
                    if p.less(x, y) && p.incomparable(x, z) && p.incomparable(z, y) {
                        push(i, &[z, x, y]);
                    }
                }
            }
        }
        out
    }

    /// The congruence class of `w`, sorted.
    pub fn class_of(&self, w: &Word) -> Vec<Word> {
        if self.kind == CongruenceKind::Content {
            return words_of_content(&w.content(self.n).as_counts().expect("counts"));
        }
        let mut seen: BTreeSet<Word> = BTreeSet::from([w.clone()]);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(v) = queue.pop_front() {
            for u in self.neighbors(&v) {
                if seen.insert(u.clone()) {
                    queue.push_back(u);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// The canonical representative of the class of `w`: the sorted word for
    /// commuting letters, the column word of the insertion tableau for the
    /// plactic congruence, and the lexicographically least class member for
    /// the unit interval congruence.
    pub fn classify(&self, w: &Word) -> Word {
        match &self.kind {
            CongruenceKind::Content => w.sorted(),
            CongruenceKind::Plactic => rsk_p_tableau(w).column_word(),
            CongruenceKind::UnitInterval(_) => {
                if let Some(rep) = self.memo.lock().expect("memo lock").get(w) {
                    return rep.clone();
                }
                let class = self.class_of(w);
                let rep = class[0].clone();
                let mut memo = self.memo.lock().expect("memo lock");
                for v in class {
                    memo.insert(v, rep.clone());
                }
                rep
            }
        }
    }

    /// The generator order whose elementary functions this ideal should make commute.
    fn generator_order(&self) -> Box<dyn LetterOrder> {
        match &self.kind {
            CongruenceKind::UnitInterval(p) => Box::new(p.clone()),
            _ => Box::new(NaturalOrder(self.n)),
        }
    }
}

impl Clone for WordCongruence {
    fn clone(&self) -> Self {
        Self::with_kind(self.kind.clone(), self.n)
    }
}

impl fmt::Debug for WordCongruence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WordCongruence({:?}, N = {})", self.kind, self.n)
    }
}

pub fn classify(w: &Word, c: &WordCongruence) -> Word {
    c.classify(w)
}

/// Class sums of the coefficients of `z`.
pub fn class_sums(z: &NCElem, c: &WordCongruence) -> BTreeMap<Word, QPoly> {
    let mut sums: BTreeMap<Word, QPoly> = BTreeMap::new();
    for (w, coeff) in z.terms() {
        *sums.entry(c.classify(w)).or_default() += coeff;
    }
    sums.retain(|_, v| !v.is_zero());
    sums
}

/// `z ∈ I` iff every class sum of its coefficients vanishes.
pub fn in_ideal(z: &NCElem, c: &WordCongruence) -> bool {
    z.terms().keys().all(|w| w.fits_alphabet(c.alphabet())) && class_sums(z, c).is_empty()
}

/// `γ ∈ I^⊥` iff `γ` is constant on every class meeting the contents of its support.
pub fn in_perp(gamma: &DualElem, c: &WordCongruence) -> bool {
    let contents: BTreeSet<Vec<usize>> = gamma
        .terms()
        .keys()
        .map(|w| w.content(c.alphabet()).as_counts().expect("counts"))
        .collect();
    for content in contents {
        let mut values: HashMap<Word, QPoly> = HashMap::new();
        for w in words_of_content(&content) {
            let rep = c.classify(&w);
            let value = gamma.coeff(&w);
            match values.get(&rep) {
                Some(seen) if *seen != value => return false,
                Some(_) => {}
                None => {
                    values.insert(rep, value);
                }
            }
        }
    }
    true
}

/// The first pair `(k, l)` with `ee_k ee_l − ee_l ee_k ∉ I`, for distinct
/// `1 ≤ k ≤ kmax`, `1 ≤ l ≤ lmax`. The generators are read in `<_P` for the unit
/// interval congruence and in the integer order otherwise.
pub fn commutation_failure(c: &WordCongruence, kmax: usize, lmax: usize) -> Option<(usize, usize)> {
    let order = c.generator_order();
    let top = kmax.max(lmax);
    let es: Vec<NCElem> = (0..=top).map(|k| ee(k, order.as_ref())).collect();
    for k in 1..=kmax {
        for l in 1..=lmax {
            if k == l {
                continue;
            }
            let diff = &(&es[k] * &es[l]) - &(&es[l] * &es[k]);
            if !in_ideal(&diff, c) {
                return Some((k, l));
            }
        }
    }
    None
}

/// The first pair `k < l` with `k + l ≤ max_deg` and `ee_k ee_l − ee_l ee_k ∉ I`.
pub fn commutation_failure_by_degree(c: &WordCongruence, max_deg: usize) -> Option<(usize, usize)> {
    let order = c.generator_order();
    let es: Vec<NCElem> = (0..max_deg).map(|k| ee(k, order.as_ref())).collect();
    for total in 3..=max_deg {
        for k in 1..total.div_ceil(2) {
            let l = total - k;
            let diff = &(&es[k] * &es[l]) - &(&es[l] * &es[k]);
            if !in_ideal(&diff, c) {
                return Some((k, l));
            }
        }
    }
    None
}

pub fn check_commutation(c: &WordCongruence, kmax: usize, lmax: usize) -> bool {
    commutation_failure(c, kmax, lmax).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::nc_e;

    fn w(s: &str) -> Word {
        Word::from_digits(s)
    }

    fn example_order() -> Nuio {
        Nuio::from_hessenberg(&[2, 3, 4, 5, 5]).unwrap()
    }

    fn nc(n: usize, terms: &[(&str, i64)]) -> NCElem {
        NCElem::from_terms(n, terms.iter().map(|(s, c)| (w(s), QPoly::from_int(*c)))).unwrap()
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(WordCongruence::content(3).classify(&w("213")), w("123"));
        let plac = WordCongruence::plactic(2);
        assert_eq!(plac.classify(&w("121")), plac.classify(&w("211")));
        assert_ne!(plac.classify(&w("12")), plac.classify(&w("21")));
        let up = WordCongruence::unit_interval(example_order());
        assert_eq!(up.classify(&w("31")), w("13"));
        assert_eq!(up.classify(&w("21")), w("21"));
    }

    #[test]
    fn plactic_classes_are_insertion_fibres() {
        let plac = WordCongruence::plactic(3);
        let class = plac.class_of(&w("2113"));
        for v in &class {
            assert_eq!(rsk_p_tableau(v), rsk_p_tableau(&w("2113")));
        }
        assert!(class.contains(&w("2113")));
    }

    #[test]
    fn ideal_membership() {
        let up = WordCongruence::unit_interval(example_order());
        assert!(in_ideal(&nc(5, &[("13", 1), ("31", -1)]), &up));
        let plac = WordCongruence::plactic(2);
        let e1 = nc_e(1, 2);
        let e2 = nc_e(2, 2);
        assert!(in_ideal(&(&(&e1 * &e2) - &(&e2 * &e1)), &plac));
        assert!(!in_ideal(&nc(2, &[("12", 1)]), &WordCongruence::content(2)));
    }

    #[test]
    fn commutation_examples() {
        assert!(check_commutation(&WordCongruence::plactic(4), 4, 4));
        assert!(check_commutation(&WordCongruence::content(3), 3, 3));
        assert!(check_commutation(
            &WordCongruence::unit_interval(example_order()),
            3,
            3
        ));
        assert_eq!(
            commutation_failure_by_degree(&WordCongruence::plactic(3), 7),
            None
        );
        assert_eq!(
            commutation_failure_by_degree(&WordCongruence::unit_interval(example_order()), 6),
            None
        );
        // Plain elementary functions do not commute in the free algebra.
        assert!(!in_ideal(
            &(&(&nc_e(1, 2) * &nc_e(2, 2)) - &(&nc_e(2, 2) * &nc_e(1, 2))),
            &WordCongruence::unit_interval(Nuio::antichain(2))
        ));
    }
}
