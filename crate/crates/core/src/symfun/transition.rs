//! Monomial structure constants and per-weight transition matrices.
//!
//! Every basis is tied to the monomial basis: `to_m` holds the `m`-expansion of
//! each basis element of a given weight (one row per partition), and `from_m`
//! maps `m`-coordinates back. Both are memoized per `(basis, weight)`; the
//! caches only ever store the value a fresh computation would produce.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::{schur_via_jacobi_trudi, Basis};
use crate::foundation::{rational_int, Partition, QPoly, Rational};

pub(crate) type Terms = BTreeMap<Partition, QPoly>;

type StructureKey = (Partition, Partition);
type StructureConstants = Arc<Vec<(Partition, i64)>>;

fn structure_cache() -> &'static Mutex<HashMap<StructureKey, StructureConstants>> {
    static CACHE: OnceLock<Mutex<HashMap<StructureKey, StructureConstants>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Coefficients of `m_a · m_b` in the monomial basis.
///
/// The coefficient of `m_ν` is the coefficient of `x^ν` in the product, i.e. the
/// number of vectors `α <= ν` with `sort(α) = a` and `sort(ν - α) = b`.
pub(crate) fn m_structure(a: &Partition, b: &Partition) -> StructureConstants {
    let (a, b) = if a <= b { (a, b) } else { (b, a) };
    let key = (a.clone(), b.clone());
    if let Some(hit) = structure_cache().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let computed = Arc::new(compute_m_structure(a, b));
    structure_cache()
        .lock()
        .unwrap()
        .entry(key)
        .or_insert(computed)
        .clone()
}

fn compute_m_structure(a: &Partition, b: &Partition) -> Vec<(Partition, i64)> {
    let total = a.weight() + b.weight();
    let max_len = a.len() + b.len();
    let mut out = Vec::new();
    for nu in Partition::all(total) {
        if nu.len() > max_len || nu.len() < a.len().max(b.len()) {
            continue;
        }
        let mut count = 0i64;
        let mut alpha = Vec::with_capacity(nu.len());
        count_splits(nu.parts(), a, b, &mut alpha, a.weight(), &mut count);
        if count != 0 {
            out.push((nu, count));
        }
    }
    out
}

fn count_splits(
    nu: &[usize],
    a: &Partition,
    b: &Partition,
    alpha: &mut Vec<usize>,
    rest: usize,
    count: &mut i64,
) {
    let i = alpha.len();
    if i == nu.len() {
        if rest == 0 {
            let left = Partition::from_unsorted(alpha.clone());
            if &left == a {
                let right = Partition::from_unsorted(
                    nu.iter().zip(alpha.iter()).map(|(n, x)| n - x).collect(),
                );
                if &right == b {
                    *count += 1;
                }
            }
        }
        return;
    }
    let tail: usize = nu[i + 1..].iter().sum();
    for x in 0..=nu[i].min(rest) {
        if rest - x > tail {
            continue;
        }
        // nonzero entries of alpha must be parts of a
        if x > 0 && !a.parts().contains(&x) {
            continue;
        }
        let y = nu[i] - x;
        if y > 0 && !b.parts().contains(&y) {
            continue;
        }
        alpha.push(x);
        count_splits(nu, a, b, alpha, rest - x, count);
        alpha.pop();
    }
}

/// Product of two elements given by their monomial coordinates.
pub(crate) fn mul_monomial(f: &Terms, g: &Terms) -> Terms {
    let mut out = Terms::new();
    for (a, fa) in f {
        for (b, gb) in g {
            let prod = fa * gb;
            for (nu, c) in m_structure(a, b).iter() {
                let entry = out.entry(nu.clone()).or_insert_with(QPoly::zero);
                *entry += prod.scale(&rational_int(*c));
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// The monomial expansion of `e_k`, `h_k` or `p_k`, obtained by expanding the
/// defining sum over index sequences in `k` variables and keeping the
/// exponent vectors that are partitions (k variables suffice in degree k).
pub fn generator_to_monomial_terms(basis: Basis, k: usize) -> Terms {
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut record = |idx: &[usize]| {
        let mut exps = vec![0usize; k];
        for &i in idx {
            exps[i] += 1;
        }
        if exps.windows(2).all(|w| w[0] >= w[1]) {
            *counts.entry(Partition::from_unsorted(exps)).or_default() += 1;
        }
    };
    match basis {
        Basis::E => {
            // i_1 > ... > i_k in [k]: only one sequence
            let idx: Vec<usize> = (0..k).rev().collect();
            record(&idx);
        }
        Basis::H => {
            let mut idx = vec![0usize; k];
            loop {
                record(&idx);
                // next weakly increasing sequence in [k]
                let Some(pos) = (0..k).rev().find(|&p| idx[p] + 1 < k) else {
                    break;
                };
                let v = idx[pos] + 1;
                for slot in idx.iter_mut().skip(pos) {
                    *slot = v;
                }
            }
        }
        Basis::P => {
            for i in 0..k {
                record(&vec![i; k]);
            }
        }
        Basis::M | Basis::S => panic!("generator_to_monomial expects e, h or p"),
    }
    counts
        .into_iter()
        .map(|(p, c)| (p, QPoly::from_int(c)))
        .collect()
}

pub(crate) struct Transition {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// Row `i`: the m-coordinates of the basis element indexed by `parts[i]`.
    pub to_m: Vec<Vec<Rational>>,
    /// Row `i`: the target coordinates of `m_{parts[i]}`.
    pub from_m: Vec<Vec<Rational>>,
}

type TransitionCache = Mutex<HashMap<(Basis, usize), Arc<Transition>>>;

fn transition_cache() -> &'static TransitionCache {
    static CACHE: OnceLock<TransitionCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub(crate) fn transition(basis: Basis, weight: usize) -> Arc<Transition> {
    assert!(
        basis != Basis::M,
        "the monomial basis has no transition matrix"
    );
    if let Some(t) = transition_cache().lock().unwrap().get(&(basis, weight)) {
        return t.clone();
    }
    let computed = Arc::new(compute_transition(basis, weight));
    transition_cache()
        .lock()
        .unwrap()
        .entry((basis, weight))
        .or_insert(computed)
        .clone()
}

fn compute_transition(basis: Basis, weight: usize) -> Transition {
    let parts = Partition::all(weight);
    let index: HashMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let to_terms = |terms: &Terms| -> Vec<Rational> {
        let mut row = vec![Rational::zero(); parts.len()];
        for (p, c) in terms {
            row[index[p]] = c.as_constant().expect("transition entries are constants");
        }
        row
    };
    match basis {
        Basis::E | Basis::H | Basis::P => {
            let to_m: Vec<Vec<Rational>> = parts
                .iter()
                .map(|lambda| {
                    let mut acc: Terms = [(Partition::empty(), QPoly::one())].into();
                    for &k in lambda.parts() {
                        acc = mul_monomial(&acc, &generator_to_monomial_terms(basis, k));
                    }
                    to_terms(&acc)
                })
                .collect();
            let from_m = invert(&to_m);
            Transition {
                parts,
                index,
                to_m,
                from_m,
            }
        }
        Basis::S => {
            let e = transition(Basis::E, weight);
            let h = transition(Basis::H, weight);
            let to_m: Vec<Vec<Rational>> = parts
                .iter()
                .map(|lambda| {
                    let jt = schur_via_jacobi_trudi(lambda);
                    let e_row = to_terms(jt.terms());
                    mat_vec_left(&e_row, &e.to_m)
                })
                .collect();
            // ⟨X, s_λ⟩ = Σ_μ X_m[μ] · [h_μ] s_λ, since m and h are dual
            let s_in_h: Vec<Vec<Rational>> = to_m
                .iter()
                .map(|row| mat_vec_left(row, &h.from_m))
                .collect();
            let from_m = transpose(&s_in_h);
            Transition {
                parts,
                index,
                to_m,
                from_m,
            }
        }
        Basis::M => unreachable!(),
    }
}

/// Row vector times matrix.
fn mat_vec_left(row: &[Rational], m: &[Vec<Rational>]) -> Vec<Rational> {
    let n = m.first().map_or(0, Vec::len);
    let mut out = vec![Rational::zero(); n];
    for (r, mrow) in row.iter().zip(m) {
        if r.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(mrow) {
            if !x.is_zero() {
                *o += r * x;
            }
        }
    }
    out
}

fn transpose(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.first().map_or(0, Vec::len);
    (0..n)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Exact Gauss–Jordan inverse. Panics on a singular matrix, which would mean a
/// basis failed to be one.
pub(crate) fn invert(m: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = m.len();
    let mut a: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .expect("transition matrix is singular");
        a.swap(col, pivot);
        let inv = Rational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            let (pivot_row, target) = if r < col {
                let (lo, hi) = a.split_at_mut(col);
                (&hi[0], &mut lo[r])
            } else {
                let (lo, hi) = a.split_at_mut(r);
                (&lo[col], &mut hi[0])
            };
            for (t, p) in target.iter_mut().zip(pivot_row) {
                if !p.is_zero() {
                    *t -= &factor * p;
                }
            }
        }
    }
    a.into_iter().map(|row| row[n..].to_vec()).collect()
}

/// Applies a per-weight matrix to the weight-`n` coordinates in `terms`.
pub(crate) fn apply(terms: &Terms, rows: &[Vec<Rational>], t: &Transition) -> Terms {
    let mut acc: Vec<QPoly> = vec![QPoly::zero(); t.parts.len()];
    for (p, c) in terms {
        let row = &rows[t.index[p]];
        for (slot, x) in acc.iter_mut().zip(row) {
            if !x.is_zero() {
                *slot += c.scale(x);
            }
        }
    }
    t.parts
        .iter()
        .cloned()
        .zip(acc)
        .filter(|(_, c)| !c.is_zero())
        .collect()
}
