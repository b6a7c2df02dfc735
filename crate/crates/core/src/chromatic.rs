//! Chromatic quasisymmetric functions of natural unit interval orders, their
//! `h`-expansions, and the `e_k^⊥` / `p_k^⊥` recurrences for the coefficients.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::foundation::{normalize_to_partition, words_of_content, IntVector, Partition, QPoly};
use crate::freealg::{nc_p_p, omega_pairing, pairing, DualElem, NCElem};
use crate::poset::{chains, deg_p_multiset, height, inv_p, multiset_of, DegVariant, Nuio};
use crate::symfun::k_subsets;
use crate::symfun::{convert, qsym_to_sym, skew_e_on_h, skew_p_on_h, Basis, QSymElem, SymElem};

/// The coefficients `c^{P,β}_λ(q)` of `ωX_P(x; q, β) = Σ_λ c_λ h_λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HExpansion {
    content: IntVector,
    coeffs: BTreeMap<Partition, QPoly>,
}

impl HExpansion {
    pub fn content(&self) -> &IntVector {
        &self.content
    }

    /// Nonzero coefficients only.
    pub fn coeffs(&self) -> &BTreeMap<Partition, QPoly> {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: &Partition) -> QPoly {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// The coefficient of `h_{(d)}`, `d = |β|`; for `d = 0` the coefficient of `h_∅`.
    pub fn one_row(&self) -> QPoly {
        let d = self.content.sum() as usize;
        let row = if d == 0 {
            Partition::empty()
        } else {
            Partition::new(vec![d]).expect("single positive part")
        };
        self.coeff(&row)
    }

    pub fn to_sym(&self) -> SymElem {
        SymElem::from_terms(
            Basis::H,
            self.coeffs.iter().map(|(l, c)| (l.clone(), c.clone())),
        )
    }
}

fn check_content(p: &Nuio, beta: &IntVector) -> Result<Vec<usize>> {
    if beta.len() != p.size() {
        return Err(Error::ContentLength {
            expected: p.size(),
            found: beta.len(),
        });
    }
    beta.as_counts().ok_or(Error::NegativeContent)
}

/// `γ_β = Σ_{w ∈ W(β)} q^{inv_P(w)} w`.
pub fn gamma_beta(p: &Nuio, beta: &IntVector) -> Result<DualElem> {
    let counts = check_content(p, beta)?;
    DualElem::from_terms(
        p.size(),
        words_of_content(&counts).into_iter().map(|w| {
            let c = QPoly::q_pow(inv_p(&w, p));
            (w, c)
        }),
    )
}

/// `ωX_P(x; q, β) = Σ_{w ∈ W(β)} q^{inv_P(w)} F_{d, Des_P(w)}`.
pub fn omega_x(p: &Nuio, beta: &IntVector) -> Result<QSymElem> {
    Ok(crate::freealg::f_gamma_p(&gamma_beta(p, beta)?, p))
}

/// Collects `ωX_P` into `Sym` and expands it in the complete homogeneous basis.
pub fn h_expansion(p: &Nuio, beta: &IntVector) -> Result<HExpansion> {
    let sym = qsym_to_sym(&omega_x(p, beta)?)?;
    Ok(HExpansion {
        content: beta.clone(),
        coeffs: convert(&sym, Basis::H).terms().clone(),
    })
}

/// `⟨pp^P_d, γ_β⟩` with `d = |β|`, which equals the one-row coefficient
/// `c^{P,β}_{(d)}`. For `β = 0` this is the coefficient of `h_∅`, namely 1.
pub fn c_via_nc_p(p: &Nuio, beta: &IntVector) -> Result<QPoly> {
    let gamma = gamma_beta(p, beta)?;
    let d = beta.sum() as usize;
    if d == 0 {
        return Ok(QPoly::one());
    }
    pairing(&nc_p_p(d, p), &gamma)
}

/// Memoized `h`-expansions for one poset, with the convention that a content
/// vector with a negative entry has expansion 0.
#[derive(Clone, Debug)]
pub struct ChromaticTable {
    poset: Nuio,
    cache: HashMap<IntVector, Arc<HExpansion>>,
}

impl ChromaticTable {
    pub fn new(poset: Nuio) -> Self {
        ChromaticTable {
            poset,
            cache: HashMap::new(),
        }
    }

    pub fn poset(&self) -> &Nuio {
        &self.poset
    }

    /// `None` when `β` has a negative entry.
    pub fn expansion(&mut self, beta: &IntVector) -> Result<Option<Arc<HExpansion>>> {
        if beta.len() != self.poset.size() {
            return Err(Error::ContentLength {
                expected: self.poset.size(),
                found: beta.len(),
            });
        }
        if !beta.is_nonnegative() {
            return Ok(None);
        }
        if let Some(e) = self.cache.get(beta) {
            return Ok(Some(Arc::clone(e)));
        }
        let e = Arc::new(h_expansion(&self.poset, beta)?);
        self.cache.insert(beta.clone(), Arc::clone(&e));
        Ok(Some(e))
    }

    /// `c^{P,β}_λ(q)`, zero when `β` has a negative entry.
    pub fn coeff(&mut self, beta: &IntVector, lambda: &Partition) -> Result<QPoly> {
        Ok(self
            .expansion(beta)?
            .map(|e| e.coeff(lambda))
            .unwrap_or_default())
    }

    /// `c^{P,β}_{(|β|)}(q)`, zero when `β` has a negative entry.
    pub fn one_row(&mut self, beta: &IntVector) -> Result<QPoly> {
        Ok(self
            .expansion(beta)?
            .map(|e| e.one_row())
            .unwrap_or_default())
    }

    /// The expansion as an element of `Sym` in the `h` basis.
    pub fn sym(&mut self, beta: &IntVector) -> Result<SymElem> {
        Ok(self
            .expansion(beta)?
            .map(|e| e.to_sym())
            .unwrap_or_else(|| SymElem::zero(Basis::H)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Recurrence {
    E,
    P,
    HaradaPrecup,
}

/// One pair on the left-hand side: a partition `μ ⊢ |β|` and the 1-based
/// positions removed from it (a `k`-subset for `e_k^⊥`, a single index for
/// `p_k^⊥`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LhsTerm {
    pub mu: Partition,
    pub positions: Vec<usize>,
    pub coeff: QPoly,
}

/// One summand on the right-hand side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhsTerm {
    /// The removed multiset as a content vector: `β_T` or `α`.
    pub removed: IntVector,
    /// The removed letters in increasing order.
    pub letters: Vec<u8>,
    /// `deg_P(removed, β − removed)`.
    pub deg: i64,
    /// `c^{P,α}_{(k)}(q)` for the power sum recurrence; absent for the elementary one.
    pub one_row: Option<QPoly>,
    /// `c^{P, β − removed}_λ(q)`.
    pub coeff: QPoly,
    pub contribution: QPoly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceReport {
    pub recurrence: Recurrence,
    pub poset: Nuio,
    pub beta: IntVector,
    pub k: usize,
    pub lambda: Partition,
    pub variant: DegVariant,
    pub lhs: QPoly,
    pub rhs: QPoly,
    pub holds: bool,
    pub lhs_terms: Vec<LhsTerm>,
    pub rhs_terms: Vec<RhsTerm>,
}

fn check_recurrence_input(
    table: &ChromaticTable,
    beta: &IntVector,
    k: usize,
    lambda: &Partition,
) -> Result<usize> {
    check_content(table.poset(), beta)?;
    if k == 0 {
        return Err(Error::ParameterTooSmall { name: "k", min: 1 });
    }
    let d = beta.sum() as usize;
    if k <= d && lambda.weight() != d - k {
        return Err(Error::WeightMismatch {
            expected: d - k,
            found: lambda.weight(),
        });
    }
    Ok(d)
}

fn subtract_positions(mu: &Partition, positions: &[usize], amount: i64) -> Option<Partition> {
    let mut v: Vec<i64> = mu.parts().iter().map(|&x| x as i64).collect();
    for &i in positions {
        v[i] -= amount;
    }
    normalize_to_partition(&v)
}

/// Checks `Σ_{(μ,S)} c^{P,β}_μ = Σ_{T ∈ C_k(P)} q^{deg_P(T, β−β_T)} c^{P,β−β_T}_λ`,
/// where `μ − ε_S` sorts to `λ`.
pub fn verify_e_recurrence(
    p: &Nuio,
    beta: &IntVector,
    k: usize,
    lambda: &Partition,
    variant: DegVariant,
) -> Result<RecurrenceReport> {
    verify_e_recurrence_with(
        &mut ChromaticTable::new(p.clone()),
        beta,
        k,
        lambda,
        variant,
    )
}

pub fn verify_e_recurrence_with(
    table: &mut ChromaticTable,
    beta: &IntVector,
    k: usize,
    lambda: &Partition,
    variant: DegVariant,
) -> Result<RecurrenceReport> {
    let d = check_recurrence_input(table, beta, k, lambda)?;
    let p = table.poset().clone();
    let mut lhs_terms = Vec::new();
    let mut rhs_terms = Vec::new();
    if k <= d {
        let full = table.expansion(beta)?.expect("content checked nonnegative");
        for mu in Partition::all(d) {
            for s in k_subsets(mu.len(), k) {
                if subtract_positions(&mu, &s, 1).as_ref() == Some(lambda) {
                    lhs_terms.push(LhsTerm {
                        coeff: full.coeff(&mu),
                        mu: mu.clone(),
                        positions: s.iter().map(|i| i + 1).collect(),
                    });
                }
            }
        }
        for t in chains(&p, k) {
            let removed = IntVector::indicator(p.size(), &t);
            let rest = beta - &removed;
            let deg = deg_p_multiset(&t, &rest, &p, variant);
            let coeff = table.coeff(&rest, lambda)?;
            let contribution = q_shift(&coeff, deg);
            rhs_terms.push(RhsTerm {
                removed,
                letters: t,
                deg,
                one_row: None,
                coeff,
                contribution,
            });
        }
    }
    Ok(finish(
        Recurrence::E,
        p,
        beta,
        k,
        lambda,
        variant,
        lhs_terms,
        rhs_terms,
    ))
}

/// Checks `Σ_{(μ,i)} c^{P,β}_μ = Σ_{α ≤ β, |α| = k} q^{deg_P(S_α, β−α)} c^{P,α}_{(k)} c^{P,β−α}_λ`,
/// where `μ_i ≥ k` and `μ − kε_i` sorts to `λ`.
pub fn verify_p_recurrence(
    p: &Nuio,
    beta: &IntVector,
    k: usize,
    lambda: &Partition,
    variant: DegVariant,
) -> Result<RecurrenceReport> {
    verify_p_recurrence_with(
        &mut ChromaticTable::new(p.clone()),
        beta,
        k,
        lambda,
        variant,
    )
}

pub fn verify_p_recurrence_with(
    table: &mut ChromaticTable,
    beta: &IntVector,
    k: usize,
    lambda: &Partition,
    variant: DegVariant,
) -> Result<RecurrenceReport> {
    let d = check_recurrence_input(table, beta, k, lambda)?;
    let p = table.poset().clone();
    let mut lhs_terms = Vec::new();
    let mut rhs_terms = Vec::new();
    if k <= d {
        let full = table.expansion(beta)?.expect("content checked nonnegative");
        for mu in Partition::all(d) {
            for i in 0..mu.len() {
                if mu.part(i) >= k
                    && subtract_positions(&mu, &[i], k as i64).as_ref() == Some(lambda)
                {
                    lhs_terms.push(LhsTerm {
                        coeff: full.coeff(&mu),
                        mu: mu.clone(),
                        positions: vec![i + 1],
                    });
                }
            }
        }
        for alpha in beta.sub_vectors_of_sum(k) {
            let rest = beta - &alpha;
            let letters = multiset_of(&alpha);
            let deg = deg_p_multiset(&letters, &rest, &p, variant);
            let one_row = table.one_row(&alpha)?;
            let coeff = table.coeff(&rest, lambda)?;
            let contribution = q_shift(&(&one_row * &coeff), deg);
            rhs_terms.push(RhsTerm {
                removed: alpha,
                letters,
                deg,
                one_row: Some(one_row),
                coeff,
                contribution,
            });
        }
    }
    Ok(finish(
        Recurrence::P,
        p,
        beta,
        k,
        lambda,
        variant,
        lhs_terms,
        rhs_terms,
    ))
}

/// The elementary recurrence at `k = h_P` with `λ = μ − (1, …, 1)`, where the
/// left-hand side reduces to the single coefficient `c^{P,β}_μ`.
pub fn harada_precup(p: &Nuio, beta: &IntVector, mu: &Partition) -> Result<RecurrenceReport> {
    harada_precup_with(&mut ChromaticTable::new(p.clone()), beta, mu)
}

pub fn harada_precup_with(
    table: &mut ChromaticTable,
    beta: &IntVector,
    mu: &Partition,
) -> Result<RecurrenceReport> {
    let h = height(table.poset());
    if mu.len() != h {
        return Err(Error::HeightMismatch {
            length: mu.len(),
            height: h,
        });
    }
    let d = check_content(table.poset(), beta)?.iter().sum::<usize>();
    if mu.weight() != d {
        return Err(Error::WeightMismatch {
            expected: d,
            found: mu.weight(),
        });
    }
    let lambda = Partition::from_unsorted(mu.parts().iter().map(|&x| x - 1).collect());
    let mut report = verify_e_recurrence_with(table, beta, h, &lambda, DegVariant::default())?;
    let c_mu = table.coeff(beta, mu)?;
    report.recurrence = Recurrence::HaradaPrecup;
    report.holds = report.holds && report.lhs == c_mu;
    Ok(report)
}

fn q_shift(c: &QPoly, deg: i64) -> QPoly {
    c.shift(usize::try_from(deg).expect("degrees of nonnegative contents are nonnegative"))
}

#[allow(clippy::too_many_arguments)]
fn finish(
    recurrence: Recurrence,
    poset: Nuio,
    beta: &IntVector,
    k: usize,
    lambda: &Partition,
    variant: DegVariant,
    lhs_terms: Vec<LhsTerm>,
    rhs_terms: Vec<RhsTerm>,
) -> RecurrenceReport {
    let lhs: QPoly = lhs_terms.iter().map(|t| &t.coeff).sum();
    let rhs: QPoly = rhs_terms.iter().map(|t| &t.contribution).sum();
    RecurrenceReport {
        recurrence,
        poset,
        beta: beta.clone(),
        k,
        lambda: lambda.clone(),
        variant,
        holds: lhs == rhs,
        lhs,
        rhs,
        lhs_terms,
        rhs_terms,
    }
}

/// `Σ_μ c^{P,β}_μ e_k^⊥ h_μ` through the closed form for `e_k^⊥ h_μ`: the
/// left-hand sides of the elementary recurrence for every `λ` at once.
pub fn e_lhs_aggregate(table: &mut ChromaticTable, beta: &IntVector, k: usize) -> Result<SymElem> {
    let full = table.expansion(beta)?.ok_or(Error::NegativeContent)?;
    let mut out = SymElem::zero(Basis::H);
    for (mu, c) in full.coeffs() {
        out = &out + &skew_e_on_h(k, mu).scale(c);
    }
    Ok(out)
}

/// `Σ_μ c^{P,β}_μ p_k^⊥ h_μ` through the closed form for `p_k^⊥ h_μ`.
pub fn p_lhs_aggregate(table: &mut ChromaticTable, beta: &IntVector, k: usize) -> Result<SymElem> {
    let full = table.expansion(beta)?.ok_or(Error::NegativeContent)?;
    let mut out = SymElem::zero(Basis::H);
    for (mu, c) in full.coeffs() {
        out = &out + &skew_p_on_h(k, mu).scale(c);
    }
    Ok(out)
}

/// `Σ_{T ∈ C_k(P)} q^{deg_P(T, β−β_T)} ωX_P(β − β_T)` in the `h` basis.
pub fn e_rhs_aggregate(
    table: &mut ChromaticTable,
    beta: &IntVector,
    k: usize,
    variant: DegVariant,
) -> Result<SymElem> {
    let p = table.poset().clone();
    let mut out = SymElem::zero(Basis::H);
    for t in chains(&p, k) {
        let rest = beta - &IntVector::indicator(p.size(), &t);
        if !rest.is_nonnegative() {
            continue;
        }
        let deg = deg_p_multiset(&t, &rest, &p, variant);
        out = &out + &table.sym(&rest)?.scale(&q_shift(&QPoly::one(), deg));
    }
    Ok(out)
}

/// `Σ_{α ≤ β, |α| = k} q^{deg_P(S_α, β−α)} c^{P,α}_{(k)} ωX_P(β − α)` in the `h` basis.
pub fn p_rhs_aggregate(
    table: &mut ChromaticTable,
    beta: &IntVector,
    k: usize,
    variant: DegVariant,
) -> Result<SymElem> {
    let p = table.poset().clone();
    let mut out = SymElem::zero(Basis::H);
    for alpha in beta.sub_vectors_of_sum(k) {
        let rest = beta - &alpha;
        let deg = deg_p_multiset(&multiset_of(&alpha), &rest, &p, variant);
        let factor = q_shift(&table.one_row(&alpha)?, deg);
        if factor.is_zero() {
            continue;
        }
        out = &out + &table.sym(&rest)?.scale(&factor);
    }
    Ok(out)
}

/// `f^⊥ ωX_P(β)` computed by the generic adjoint in `Sym`, in the `h` basis.
pub fn skew_generic(table: &mut ChromaticTable, f: &SymElem, beta: &IntVector) -> Result<SymElem> {
    let x = table.sym(beta)?;
    Ok(crate::symfun::skew(f, &x))
}

/// `⟨z · Ω^P, γ_β⟩` collected into `Sym`, in the `h` basis. With `z = ee^P_k`
/// or `pp^P_k` this is the word-level side of the skewing identity.
pub fn nc_skew(p: &Nuio, z: &NCElem, beta: &IntVector) -> Result<SymElem> {
    let gamma = gamma_beta(p, beta)?;
    let q = omega_pairing(z, &gamma, p)?;
    Ok(convert(&qsym_to_sym(&q)?, Basis::H))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example_order() -> Nuio {
        Nuio::from_hessenberg(&[2, 3, 4, 5, 5]).unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn beta() -> IntVector {
        IntVector::new(vec![1, 1, 2, 1, 1])
    }

    #[test]
    fn gamma_examples() {
        let anti = Nuio::antichain(2);
        let g = gamma_beta(&anti, &IntVector::new(vec![1, 1])).unwrap();
        assert_eq!(g.coeff(&crate::Word::from_digits("12")), QPoly::one());
        assert_eq!(g.coeff(&crate::Word::from_digits("21")), QPoly::q());
        assert_eq!(gamma_beta(&example_order(), &beta()).unwrap().len(), 360);
        let e = gamma_beta(&anti, &IntVector::zeros(2)).unwrap();
        assert_eq!(e.coeff(&crate::Word::empty()), QPoly::one());
        assert!(gamma_beta(&anti, &IntVector::new(vec![1])).is_err());
        assert!(gamma_beta(&anti, &IntVector::new(vec![1, -1])).is_err());
    }

    #[test]
    fn small_expansions() {
        let one = Nuio::chain(1);
        let e = h_expansion(&one, &IntVector::new(vec![3])).unwrap();
        assert_eq!(e.coeffs().len(), 1);
        assert_eq!(e.coeff(&part(&[3])), QPoly::one());

        let anti = Nuio::antichain(2);
        let e = h_expansion(&anti, &IntVector::new(vec![1, 1])).unwrap();
        assert_eq!(e.coeff(&part(&[2])), QPoly::from_ints(&[1, 1]));
        assert_eq!(
            c_via_nc_p(&anti, &IntVector::new(vec![1, 1])).unwrap(),
            QPoly::from_ints(&[1, 1])
        );

        let chain = Nuio::chain(2);
        let e = h_expansion(&chain, &IntVector::new(vec![1, 1])).unwrap();
        assert_eq!(e.coeff(&part(&[1, 1])), QPoly::one());
        assert!(e.one_row().is_zero());
        assert!(c_via_nc_p(&chain, &IntVector::new(vec![1, 1]))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn example_expansion() {
        let e = h_expansion(&example_order(), &beta()).unwrap();
        let expected = [
            (part(&[3, 2, 1]), QPoly::from_ints(&[0, 0, 0, 1])),
            (part(&[3, 3]), QPoly::from_ints(&[0, 0, 1, 1, 1])),
            (part(&[4, 1, 1]), QPoly::from_ints(&[0, 0, 1, 1, 1])),
            (part(&[4, 2]), QPoly::from_ints(&[0, 0, 1, 2, 1])),
            (part(&[5, 1]), QPoly::from_ints(&[0, 2, 3, 3, 3, 2])),
            (part(&[6]), QPoly::from_ints(&[1, 2, 2, 2, 2, 2, 1])),
        ];
        assert_eq!(
            e.coeffs(),
            &expected.into_iter().collect::<BTreeMap<_, _>>()
        );
        assert_eq!(c_via_nc_p(&example_order(), &beta()).unwrap(), e.one_row());
    }

    #[test]
    fn example_recurrences() {
        let lambda = part(&[3, 1]);
        let r = verify_e_recurrence(&example_order(), &beta(), 2, &lambda, DegVariant::B).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, QPoly::from_ints(&[0, 0, 3, 5, 3]));
        let degs: Vec<i64> = r.rhs_terms.iter().map(|t| t.deg).collect();
        assert_eq!(degs, vec![2, 2, 1, 3, 2, 1]);

        let r = verify_p_recurrence(&example_order(), &beta(), 2, &lambda, DegVariant::B).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, QPoly::from_ints(&[0, 2, 5, 6, 5, 2]));

        let r = verify_e_recurrence(&example_order(), &beta(), 2, &lambda, DegVariant::A).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn harada_precup_example() {
        let r = harada_precup(&example_order(), &beta(), &part(&[2, 2, 2])).unwrap();
        assert!(r.holds);
        assert_eq!(r.lambda, part(&[1, 1, 1]));
        assert!(matches!(
            harada_precup(&example_order(), &beta(), &part(&[3, 3])),
            Err(Error::HeightMismatch { .. })
        ));
    }
}
