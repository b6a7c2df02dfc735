//! Quasisymmetric functions in the monomial basis `M_α`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{Basis, SymElem};
use crate::error::{Error, Result};
use crate::foundation::{Composition, Partition, QPoly};

#[derive(Clone, PartialEq, Eq, Default)]
pub struct QSymElem {
    terms: BTreeMap<Composition, QPoly>,
}

impl QSymElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(alpha: Composition) -> Self {
        let mut out = Self::zero();
        out.add_term(alpha, &QPoly::one());
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Composition, QPoly)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (a, c) in terms {
            out.add_term(a, &c);
        }
        out
    }

    pub fn terms(&self) -> &BTreeMap<Composition, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, alpha: &Composition) -> QPoly {
        self.terms.get(alpha).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, alpha: Composition, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
            Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
        }
    }

    /// Adds `coeff · other`.
    pub fn add_scaled(&mut self, other: &QSymElem, coeff: &QPoly) {
        for (a, c) in &other.terms {
            self.add_term(a.clone(), &(c * coeff));
        }
    }
}

impl fmt::Debug for QSymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (a, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})M{a:?}")?;
        }
        Ok(())
    }
}

/// `F_{d,S} = Σ_{T ⊇ S} M_{comp(T)}`, where `comp(T)` is the composition of `d`
/// with partial-sum set `T ⊆ [d-1]`.
pub fn fundamental_to_monomial(d: usize, set: &BTreeSet<usize>) -> Result<QSymElem> {
    if set.iter().any(|&s| s == 0 || s >= d) {
        return Err(Error::InvalidComposition(set.iter().copied().collect()));
    }
    let free: Vec<usize> = (1..d).filter(|i| !set.contains(i)).collect();
    let mut out = QSymElem::zero();
    for mask in 0u64..(1u64 << free.len()) {
        let mut t = set.clone();
        for (bit, &pos) in free.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                t.insert(pos);
            }
        }
        out.add_term(Composition::from_descent_set(d, &t), &QPoly::one());
    }
    Ok(out)
}

fn multinomial_rearrangements(lambda: &Partition) -> usize {
    let n = lambda.len();
    let mut count: u128 = (1..=n as u128).product();
    for m in lambda.multiplicities() {
        count /= (1..=m as u128).product::<u128>();
    }
    count as usize
}

/// True when every rearrangement of each partition carries the same coefficient.
pub fn is_symmetric(q: &QSymElem) -> bool {
    let mut groups: BTreeMap<Partition, (usize, &QPoly)> = BTreeMap::new();
    for (alpha, c) in &q.terms {
        match groups.entry(alpha.sorted()) {
            Entry::Vacant(slot) => {
                slot.insert((1, c));
            }
            Entry::Occupied(mut slot) => {
                if slot.get().1 != c {
                    return false;
                }
                slot.get_mut().0 += 1;
            }
        }
    }
    groups
        .iter()
        .all(|(lambda, (seen, _))| *seen == multinomial_rearrangements(lambda))
}

/// Collects a symmetric quasisymmetric function into the monomial symmetric basis.
pub fn qsym_to_sym(q: &QSymElem) -> Result<SymElem> {
    if !is_symmetric(q) {
        return Err(Error::NotSymmetric);
    }
    Ok(SymElem::from_terms(
        Basis::M,
        q.terms
            .iter()
            .filter(|(alpha, _)| alpha.parts().windows(2).all(|w| w[0] >= w[1]))
            .map(|(alpha, c)| (alpha.sorted(), c.clone())),
    ))
}
