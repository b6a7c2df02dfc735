//! Integer partitions and compositions.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Partitions are ordered by weight first and then in descending
/// lexicographic order, so `(2) < (1,1) < (3) < (2,1) < (1,1,1)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let valid = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if valid {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(
                parts.into_iter().map(|p| p as i64).collect(),
            ))
        }
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts, often written ℓ(λ).
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The i-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.part(0);
        Partition(
            (1..=first)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// True when `inner` fits inside `self` part by part.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Multiplicities `m_i` of each part size `i >= 1`, indexed from 0 for size 1.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0)];
        for &p in &self.0 {
            m[p - 1] += 1;
        }
        m
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the size of the centralizer of a permutation of cycle type λ.
    pub fn z_factor(&self) -> u128 {
        self.multiplicities()
            .iter()
            .enumerate()
            .map(|(i, &m)| {
                let size = (i + 1) as u128;
                (1..=m as u128).map(|j| j * size).product::<u128>()
            })
            .product()
    }

    /// All partitions of `n`, in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill_partitions(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of every weight up to and including `n`.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }

    fn sort_key(&self) -> (usize, std::cmp::Reverse<&[usize]>) {
        (self.weight(), std::cmp::Reverse(&self.0))
    }
}

fn fill_partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill_partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl TryFrom<&[usize]> for Partition {
    type Error = Error;
    fn try_from(parts: &[usize]) -> Result<Self> {
        Partition::new(parts.to_vec())
    }
}

/// Turns an integer sequence into a partition: `None` if any entry is
/// negative, otherwise zeros are dropped and the rest sorted decreasingly.
pub fn normalize_to_partition(v: &[i64]) -> Option<Partition> {
    if v.iter().any(|&x| x < 0) {
        return None;
    }
    Some(Partition::from_unsorted(
        v.iter().map(|&x| x as usize).collect(),
    ))
}

/// A finite sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().all(|&p| p > 0) {
            Ok(Composition(parts))
        } else {
            Err(Error::InvalidComposition(parts))
        }
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The composition of `d` whose partial sums are exactly the elements of `set`.
    ///
    /// Every element of `set` must lie in `1..d`.
    pub fn from_descent_set(d: usize, set: &BTreeSet<usize>) -> Composition {
        let mut parts = Vec::with_capacity(set.len() + 1);
        let mut prev = 0;
        for &s in set {
            debug_assert!(s > prev && s < d);
            parts.push(s - prev);
            prev = s;
        }
        if d > 0 {
            parts.push(d - prev);
        }
        Composition(parts)
    }

    /// Partial sums excluding the total.
    pub fn descent_set(&self) -> BTreeSet<usize> {
        let mut acc = 0;
        let mut out = BTreeSet::new();
        for &p in self.0.iter().take(self.0.len().saturating_sub(1)) {
            acc += p;
            out.insert(acc);
        }
        out
    }

    /// The partition obtained by sorting the parts.
    pub fn sorted(&self) -> Partition {
        Partition::from_unsorted(self.0.clone())
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[4, 3, 1]).conjugate(), p(&[3, 2, 2, 1]));
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_to_partition(&[2, 0, 1]), Some(p(&[2, 1])));
        assert_eq!(normalize_to_partition(&[3, -1]), None);
        assert_eq!(normalize_to_partition(&[]), Some(Partition::empty()));
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(Composition::new(vec![1, 0, 2]).is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn ordering_is_descending_lex_within_weight() {
        let all = Partition::all(4);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all[0], p(&[4]));
        assert_eq!(all[4], p(&[1, 1, 1, 1]));
        assert!(p(&[1, 1]) < p(&[3]));
    }

    #[test]
    fn z_factors() {
        assert_eq!(p(&[1, 1, 1]).z_factor(), 6);
        assert_eq!(p(&[2, 1]).z_factor(), 2);
        assert_eq!(p(&[2, 2]).z_factor(), 8);
        assert_eq!(Partition::empty().z_factor(), 1);
    }

    #[test]
    fn composition_descent_round_trip() {
        let set: BTreeSet<usize> = [1, 3].into_iter().collect();
        let c = Composition::from_descent_set(5, &set);
        assert_eq!(c.parts(), &[1, 2, 2]);
        assert_eq!(c.descent_set(), set);
        assert!(Composition::from_descent_set(0, &BTreeSet::new()).is_empty());
    }
}
