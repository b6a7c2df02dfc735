//! Littlewood–Richardson coefficients `c^λ_{μν}` by three independent routes:
//! Schur products under the Hall inner product, skewing `s_λ` by `s_μ`, and
//! counting factorizations of words in a plactic class.

use crate::congruence::WordCongruence;
use crate::error::{Error, Result};
use crate::foundation::{Partition, QPoly};
use crate::symfun::{hall_inner, multiply, skew, skew_schur_det, Basis, SymElem};
use crate::tableaux::{tableau_word_shape, Ssyt};

fn schur(lambda: &Partition) -> SymElem {
    SymElem::basis_element(Basis::S, lambda.clone())
}

fn check_weights(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<()> {
    if mu.weight() + nu.weight() != lambda.weight() {
        return Err(Error::WeightMismatch {
            expected: lambda.weight(),
            found: mu.weight() + nu.weight(),
        });
    }
    Ok(())
}

/// `⟨s_μ s_ν, s_λ⟩`.
pub fn lr_classical(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<QPoly> {
    check_weights(lambda, mu, nu)?;
    Ok(hall_inner(
        &multiply(&schur(mu), &schur(nu)),
        &schur(lambda),
    ))
}

/// `s_μ^⊥ s_λ` in the Schur basis; the coefficient of `s_ν` is `c^λ_{μν}`.
pub fn lr_skew_expansion(lambda: &Partition, mu: &Partition) -> SymElem {
    skew(&schur(mu), &schur(lambda)).convert(Basis::S)
}

/// Compares [`lr_skew_expansion`] with the skew Jacobi–Trudi determinant
/// `s_{λ/μ}` when `μ ⊆ λ`, and with zero otherwise.
pub fn lr_skew_matches_determinant(lambda: &Partition, mu: &Partition) -> bool {
    let via_skew = lr_skew_expansion(lambda, mu);
    match skew_schur_det(lambda, mu) {
        Ok(det) => det.convert(Basis::S) == via_skew,
        Err(_) => via_skew.is_zero(),
    }
}

/// Counts words in the plactic class of `col(T)`, `T` the tableau of shape `λ`
/// with row `i` filled by `i`, whose first `|μ|` letters form a tableau word
/// of shape `μ` and whose remaining letters form one of shape `ν`. `n` is the
/// alphabet size and defaults to `|λ|`.
pub fn lr_plactic(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    n: Option<usize>,
) -> Result<usize> {
    check_weights(lambda, mu, nu)?;
    let n = n.unwrap_or(lambda.weight());
    if n < lambda.len() {
        return Err(Error::AlphabetTooSmall {
            needed: lambda.len(),
            bound: n,
        });
    }
    lr_plactic_with_tableau(&Ssyt::superstandard(lambda), mu, nu, n)
}

/// The same count for an arbitrary recording tableau `T` over `[n]`.
pub fn lr_plactic_with_tableau(
    t: &Ssyt,
    mu: &Partition,
    nu: &Partition,
    n: usize,
) -> Result<usize> {
    check_weights(&t.shape(), mu, nu)?;
    if t.max_entry() > n {
        return Err(Error::AlphabetTooSmall {
            needed: t.max_entry(),
            bound: n,
        });
    }
    let split = mu.weight();
    let class = WordCongruence::plactic(n).class_of(&t.column_word());
    Ok(class
        .iter()
        .filter(|w| {
            tableau_word_shape(&w.slice(0, split)).as_ref() == Some(mu)
                && tableau_word_shape(&w.slice(split, w.len())).as_ref() == Some(nu)
        })
        .count())
}
