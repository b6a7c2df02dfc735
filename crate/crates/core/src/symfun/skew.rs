//! Skewing operators and Jacobi–Trudi determinants.

use super::transition::Terms;
use super::{convert, m_structure, Basis, SymElem};
use crate::error::{Error, Result};
use crate::foundation::{normalize_to_partition, Partition, QPoly};

/// `a^⊥ f`, the adjoint of multiplication by `a` under the Hall inner product,
/// returned in the complete homogeneous basis.
///
/// The coefficient of `h_λ` is `⟨f, a·m_λ⟩`. With `f` written in `h` and
/// `a·m_λ` in `m` the pairing is a diagonal dot product, so only monomial
/// structure constants are needed. Components with `deg a > deg f` vanish.
pub fn skew(a: &SymElem, f: &SymElem) -> SymElem {
    let am = convert(a, Basis::M);
    let fh = convert(f, Basis::H);
    let f_weights = fh.weights();
    let mut out = SymElem::zero(Basis::H);
    for (kappa, ca) in am.terms() {
        let da = kappa.weight();
        for &df in f_weights.iter().filter(|&&df| df >= da) {
            for lambda in Partition::all(df - da) {
                let mut pairing = QPoly::zero();
                for (rho, c) in m_structure(kappa, &lambda).iter() {
                    if let Some(fc) = fh.terms().get(rho) {
                        pairing += fc.scale(&crate::foundation::rational_int(*c));
                    }
                }
                if !pairing.is_zero() {
                    out.add_term(lambda, &(ca * &pairing));
                }
            }
        }
    }
    out
}

/// All `k`-subsets of `{0, .., n-1}` in lexicographic order.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `e_k^⊥ h_λ = Σ_S h_{λ-ε_S}` over `k`-subsets `S` of `[ℓ(λ)]`.
pub fn skew_e_on_h(k: usize, lambda: &Partition) -> SymElem {
    let mut out = SymElem::zero(Basis::H);
    for s in k_subsets(lambda.len(), k) {
        let mut v: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
        for i in s {
            v[i] -= 1;
        }
        if let Some(p) = normalize_to_partition(&v) {
            out.add_term(p, &QPoly::one());
        }
    }
    out
}

/// `p_k^⊥ h_λ = Σ_i h_{λ-kε_i}`, dropping terms with a negative entry.
pub fn skew_p_on_h(k: usize, lambda: &Partition) -> SymElem {
    let mut out = SymElem::zero(Basis::H);
    for i in 0..lambda.len() {
        let mut v: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
        v[i] -= k as i64;
        if let Some(p) = normalize_to_partition(&v) {
            out.add_term(p, &QPoly::one());
        }
    }
    out
}

/// Expands `det(e_{entry(i,j)})_{i,j=1..m}` as a signed sum over permutations,
/// with `e_0 = 1` and `e_{<0} = 0`. Zero entries prune the search.
fn e_determinant(m: usize, entry: impl Fn(usize, usize) -> i64) -> SymElem {
    let mut terms: Terms = Terms::new();
    let mut used = vec![false; m];
    let mut perm = Vec::with_capacity(m);
    expand(m, &entry, &mut used, &mut perm, &mut terms);
    terms.retain(|_, c| !c.is_zero());
    SymElem::from_raw(Basis::E, terms)
}

fn expand(
    m: usize,
    entry: &impl Fn(usize, usize) -> i64,
    used: &mut [bool],
    perm: &mut Vec<usize>,
    terms: &mut Terms,
) {
    let i = perm.len();
    if i == m {
        let inversions = (0..m)
            .flat_map(|a| (a + 1..m).map(move |b| (a, b)))
            .filter(|&(a, b)| perm[a] > perm[b])
            .count();
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let idx: Vec<usize> = (0..m).map(|r| entry(r, perm[r]) as usize).collect();
        let lambda = Partition::from_unsorted(idx);
        *terms.entry(lambda).or_insert_with(QPoly::zero) += QPoly::from_int(sign);
        return;
    }
    for j in 0..m {
        if used[j] || entry(i, j) < 0 {
            continue;
        }
        used[j] = true;
        perm.push(j);
        expand(m, entry, used, perm, terms);
        perm.pop();
        used[j] = false;
    }
}

/// `s_λ = det(e_{λ'_i + j - i})`, an `m × m` determinant with `m = λ_1`.
pub fn schur_via_jacobi_trudi(lambda: &Partition) -> SymElem {
    let conj = lambda.conjugate();
    let m = lambda.part(0);
    e_determinant(m, |i, j| conj.part(i) as i64 + j as i64 - i as i64)
}

/// `s_{λ/μ} = det(e_{λ'_i - μ'_j - i + j})`, `m = λ_1`.
pub fn skew_schur_det(lambda: &Partition, mu: &Partition) -> Result<SymElem> {
    if !lambda.contains(mu) {
        return Err(Error::NotContained {
            outer: lambda.parts().to_vec(),
            inner: mu.parts().to_vec(),
        });
    }
    let lc = lambda.conjugate();
    let mc = mu.conjugate();
    let m = lambda.part(0);
    Ok(e_determinant(m, |i, j| {
        lc.part(i) as i64 - mc.part(j) as i64 - i as i64 + j as i64
    }))
}
