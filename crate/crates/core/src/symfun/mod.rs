//! The algebra of symmetric functions over `Q[q]` and the space of quasisymmetric
//! functions.
//!
//! A [`SymElem`] is a sparse table from partitions to coefficients tagged with one
//! of the five classical bases. Conversions go through the monomial basis with
//! exact per-weight transition matrices; products are taken in the elementary
//! basis, where they amount to concatenating index partitions.

mod qsym;
mod skew;
mod transition;

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

pub use qsym::{fundamental_to_monomial, is_symmetric, qsym_to_sym, QSymElem};
pub(crate) use skew::k_subsets;
pub use skew::{schur_via_jacobi_trudi, skew, skew_e_on_h, skew_p_on_h, skew_schur_det};

use crate::foundation::{Partition, QPoly};
use transition::{apply, transition, Terms};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Monomial symmetric functions `m_λ`.
    M,
    /// Elementary `e_λ`.
    E,
    /// Complete homogeneous `h_λ`.
    H,
    /// Power sums `p_λ`.
    P,
    /// Schur functions `s_λ`.
    S,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::M, Basis::E, Basis::H, Basis::P, Basis::S];

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::E => "e",
            Basis::H => "h",
            Basis::P => "p",
            Basis::S => "s",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for Basis {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "m" => Ok(Basis::M),
            "e" => Ok(Basis::E),
            "h" => Ok(Basis::H),
            "p" => Ok(Basis::P),
            "s" => Ok(Basis::S),
            _ => Err(format!(
                "unknown basis {s:?}; expected one of m, e, h, p, s"
            )),
        }
    }
}

/// A symmetric function written in a single basis.
///
/// Terms of different weights may coexist; every operation works weight by weight.
#[derive(Clone, PartialEq, Eq)]
pub struct SymElem {
    basis: Basis,
    terms: Terms,
}

impl SymElem {
    pub fn zero(basis: Basis) -> Self {
        SymElem {
            basis,
            terms: Terms::new(),
        }
    }

    pub fn one(basis: Basis) -> Self {
        Self::basis_element(basis, Partition::empty())
    }

    pub fn basis_element(basis: Basis, lambda: Partition) -> Self {
        Self::term(basis, lambda, QPoly::one())
    }

    pub fn term(basis: Basis, lambda: Partition, coeff: QPoly) -> Self {
        let mut out = Self::zero(basis);
        out.add_term(lambda, &coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Partition, QPoly)>>(basis: Basis, terms: I) -> Self {
        let mut out = Self::zero(basis);
        for (p, c) in terms {
            out.add_term(p, &c);
        }
        out
    }

    pub(crate) fn from_raw(basis: Basis, terms: Terms) -> Self {
        debug_assert!(terms.values().all(|c| !c.is_zero()));
        SymElem { basis, terms }
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    /// Terms in canonical order: by weight, then descending lexicographic.
    pub fn terms(&self) -> &BTreeMap<Partition, QPoly> {
        &self.terms
    }

    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.terms.get(lambda).cloned().unwrap_or_default()
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

    pub fn add_term(&mut self, lambda: Partition, coeff: &QPoly) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
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

    pub fn scale(&self, c: &QPoly) -> SymElem {
        SymElem::from_terms(
            self.basis,
            self.terms.iter().map(|(p, x)| (p.clone(), x * c)),
        )
    }

    /// The weights that carry nonzero terms.
    pub fn weights(&self) -> BTreeSet<usize> {
        self.terms.keys().map(Partition::weight).collect()
    }

    /// Highest weight present; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Partition::weight).max()
    }

    pub fn homogeneous_part(&self, n: usize) -> SymElem {
        SymElem {
            basis: self.basis,
            terms: self
                .terms
                .iter()
                .filter(|(p, _)| p.weight() == n)
                .map(|(p, c)| (p.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn convert(&self, target: Basis) -> SymElem {
        convert(self, target)
    }

    /// Product, expressed in the basis of `self`.
    pub fn mul(&self, other: &SymElem) -> SymElem {
        multiply(self, other)
    }
}

impl fmt::Debug for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{}{}", self.basis, p)?;
            } else {
                write!(f, "({}){}{}", c, self.basis, p)?;
            }
        }
        Ok(())
    }
}

impl Add for &SymElem {
    type Output = SymElem;
    fn add(self, rhs: &SymElem) -> SymElem {
        let rhs = convert(rhs, self.basis);
        let mut out = self.clone();
        for (p, c) in rhs.terms {
            out.add_term(p, &c);
        }
        out
    }
}

impl Sub for &SymElem {
    type Output = SymElem;
    fn sub(self, rhs: &SymElem) -> SymElem {
        self + &(-rhs)
    }
}

impl Neg for &SymElem {
    type Output = SymElem;
    fn neg(self) -> SymElem {
        SymElem {
            basis: self.basis,
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

fn group_by_weight(terms: &Terms) -> BTreeMap<usize, Terms> {
    let mut out: BTreeMap<usize, Terms> = BTreeMap::new();
    for (p, c) in terms {
        out.entry(p.weight())
            .or_default()
            .insert(p.clone(), c.clone());
    }
    out
}

fn to_monomial_terms(f: &SymElem) -> Terms {
    if f.basis == Basis::M {
        return f.terms.clone();
    }
    let mut out = Terms::new();
    for (n, part) in group_by_weight(&f.terms) {
        let t = transition(f.basis, n);
        out.extend(apply(&part, &t.to_m, &t));
    }
    out
}

fn from_monomial_terms(terms: &Terms, target: Basis) -> Terms {
    if target == Basis::M {
        return terms.clone();
    }
    let mut out = Terms::new();
    for (n, part) in group_by_weight(terms) {
        let t = transition(target, n);
        out.extend(apply(&part, &t.from_m, &t));
    }
    out
}

/// Re-expresses `f` in the `target` basis, routing through monomials.
pub fn convert(f: &SymElem, target: Basis) -> SymElem {
    if f.basis == target {
        return f.clone();
    }
    let m = to_monomial_terms(f);
    SymElem::from_raw(target, from_monomial_terms(&m, target))
}

/// The monomial expansion of `e_k`, `h_k` or `p_k`.
///
/// # Panics
/// If `basis` is `m` or `s`, or `k == 0`.
pub fn generator_to_monomial(basis: Basis, k: usize) -> SymElem {
    assert!(k >= 1, "generator index must be positive");
    SymElem::from_raw(Basis::M, transition::generator_to_monomial_terms(basis, k))
}

/// Product in the elementary basis, converted back to the basis of `f`.
pub fn multiply(f: &SymElem, g: &SymElem) -> SymElem {
    multiply_into(f, g, f.basis)
}

pub fn multiply_into(f: &SymElem, g: &SymElem, target: Basis) -> SymElem {
    let fe = convert(f, Basis::E);
    let ge = convert(g, Basis::E);
    let mut out = SymElem::zero(Basis::E);
    for (a, ca) in &fe.terms {
        for (b, cb) in &ge.terms {
            let mut parts = a.parts().to_vec();
            parts.extend_from_slice(b.parts());
            out.add_term(Partition::from_unsorted(parts), &(ca * cb));
        }
    }
    convert(&out, target)
}

/// The Hall inner product: `f` in monomials against `g` in complete homogeneous.
pub fn hall_inner(f: &SymElem, g: &SymElem) -> QPoly {
    let fm = convert(f, Basis::M);
    let gh = convert(g, Basis::H);
    fm.terms
        .iter()
        .filter_map(|(p, c)| gh.terms.get(p).map(|d| c * d))
        .sum()
}

pub(crate) fn m_structure(a: &Partition, b: &Partition) -> std::sync::Arc<Vec<(Partition, i64)>> {
    transition::m_structure(a, b)
}
