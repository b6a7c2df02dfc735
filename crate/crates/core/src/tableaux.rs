//! Semistandard Young tableaux, RSK row insertion and column reading words.

use std::fmt;

use crate::error::{Error, Result};
use crate::foundation::{IntVector, Partition, Word};

/// A semistandard Young tableau in English notation: rows weakly increase
/// left to right, columns strictly increase top to bottom.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Ssyt {
    rows: Vec<Vec<u8>>,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<u8>>) -> Result<Self> {
        let t = Ssyt { rows };
        t.validate()?;
        Ok(t)
    }

    pub fn empty() -> Self {
        Ssyt { rows: Vec::new() }
    }

    fn validate(&self) -> Result<()> {
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {} is empty", i + 1)));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
            if row.windows(2).any(|p| p[0] > p[1]) {
                return Err(Error::InvalidTableau(format!(
                    "row {} is not weakly increasing",
                    i + 1
                )));
            }
            if i > 0 {
                let above = &self.rows[i - 1];
                if row.len() > above.len() {
                    return Err(Error::InvalidTableau(
                        "row lengths must weakly decrease".into(),
                    ));
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::InvalidTableau(format!(
                        "column strictness fails between rows {} and {}",
                        i,
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u8>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect())
            .expect("tableau rows have weakly decreasing lengths")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn max_entry(&self) -> usize {
        self.rows
            .iter()
            .flat_map(|r| r.iter())
            .copied()
            .max()
            .unwrap_or(0) as usize
    }

    /// Multiplicities `m_i(T)` of the letters `1..=n`.
    pub fn content(&self, n: usize) -> IntVector {
        IntVector::indicator(n, &self.rows.concat())
    }

    /// Row-inserts `x`, bumping the leftmost strictly larger entry of each row.
    pub fn row_insert(&mut self, mut x: u8) {
        for row in self.rows.iter_mut() {
            match row.iter().position(|&y| y > x) {
                Some(pos) => x = std::mem::replace(&mut row[pos], x),
                None => {
                    row.push(x);
                    return;
                }
            }
        }
        self.rows.push(vec![x]);
    }

    /// The column word: each column read bottom to top, columns left to right.
    pub fn column_word(&self) -> Word {
        let width = self.rows.first().map_or(0, Vec::len);
        let mut letters = Vec::with_capacity(self.size());
        for j in 0..width {
            for row in self.rows.iter().rev() {
                if let Some(&x) = row.get(j) {
                    letters.push(x);
                }
            }
        }
        Word::new(letters)
    }

    /// The tableau whose row `i` is filled entirely with the letter `i`.
    pub fn superstandard(shape: &Partition) -> Ssyt {
        Ssyt {
            rows: shape
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &len)| vec![i as u8 + 1; len])
                .collect(),
        }
    }
}

impl fmt::Debug for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Ssyt {
    /// Rows separated by `/`, e.g. `1134/346/5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| Word::new(r.clone()).to_string())
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

/// The RSK insertion tableau `P(w)`.
pub fn rsk_p_tableau(w: &Word) -> Ssyt {
    let mut t = Ssyt::empty();
    for &x in w.letters() {
        t.row_insert(x);
    }
    t
}

pub fn column_word(t: &Ssyt) -> Word {
    t.column_word()
}

/// The shape `λ` if `w` is the column word of some tableau of shape `λ`.
pub fn tableau_word_shape(w: &Word) -> Option<Partition> {
    let t = rsk_p_tableau(w);
    (t.column_word() == *w).then(|| t.shape())
}

/// All tableaux of shape `λ` with entries in `[n]`, each once.
pub fn enumerate_ssyt(shape: &Partition, n: usize) -> Vec<Ssyt> {
    let cells: Vec<(usize, usize)> = shape
        .parts()
        .iter()
        .enumerate()
        .flat_map(|(i, &len)| (0..len).map(move |j| (i, j)))
        .collect();
    let mut rows: Vec<Vec<u8>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
    let mut out = Vec::new();
    fill(&cells, 0, n as u8, &mut rows, &mut out);
    out
}

fn fill(cells: &[(usize, usize)], k: usize, n: u8, rows: &mut [Vec<u8>], out: &mut Vec<Ssyt>) {
    if k == cells.len() {
        out.push(Ssyt {
            rows: rows.to_vec(),
        });
        return;
    }
    let (i, j) = cells[k];
    let left = if j > 0 { rows[i][j - 1] } else { 1 };
    let above = if i > 0 { rows[i - 1][j] + 1 } else { 1 };
    for v in left.max(above)..=n {
        rows[i][j] = v;
        fill(cells, k + 1, n, rows, out);
    }
    rows[i][j] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tab(rows: &[&[u8]]) -> Ssyt {
        Ssyt::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn insertion_recovers_example_tableau() {
        let t = rsk_p_tableau(&Word::from_digits("53141634"));
        assert_eq!(t, tab(&[&[1, 1, 3, 4], &[3, 4, 6], &[5]]));
        assert_eq!(
            rsk_p_tableau(&Word::from_digits("121")),
            tab(&[&[1, 1], &[2]])
        );
        assert_eq!(rsk_p_tableau(&Word::empty()), Ssyt::empty());
    }

    #[test]
    fn column_words() {
        let t = tab(&[&[1, 1, 3, 4], &[3, 4, 6], &[5]]);
        assert_eq!(t.column_word(), Word::from_digits("53141634"));
        assert_eq!(tab(&[&[1, 2]]).column_word(), Word::from_digits("12"));
        assert_eq!(tab(&[&[1], &[2]]).column_word(), Word::from_digits("21"));
    }

    #[test]
    fn tableau_word_shapes() {
        assert_eq!(
            tableau_word_shape(&Word::from_digits("53141634")),
            Some(part(&[4, 3, 1]))
        );
        assert_eq!(
            tableau_word_shape(&Word::from_digits("21")),
            Some(part(&[1, 1]))
        );
        assert_eq!(
            tableau_word_shape(&Word::from_digits("12")),
            Some(part(&[2]))
        );
        assert_eq!(tableau_word_shape(&Word::from_digits("132")), None);
        assert_eq!(tableau_word_shape(&Word::empty()), Some(Partition::empty()));
    }

    #[test]
    fn enumeration() {
        let two = enumerate_ssyt(&part(&[2]), 2);
        assert_eq!(two, vec![tab(&[&[1, 1]]), tab(&[&[1, 2]]), tab(&[&[2, 2]])]);
        assert_eq!(enumerate_ssyt(&part(&[1, 1]), 2), vec![tab(&[&[1], &[2]])]);
        assert!(enumerate_ssyt(&part(&[1, 1, 1]), 2).is_empty());
        // |SSYT((2,1), 3)| = s_{21}(1,1,1) = 8
        assert_eq!(enumerate_ssyt(&part(&[2, 1]), 3).len(), 8);
    }

    #[test]
    fn rejects_malformed_tableaux() {
        assert!(Ssyt::new(vec![vec![2, 1]]).is_err());
        assert!(Ssyt::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(Ssyt::new(vec![vec![1], vec![2, 3]]).is_err());
    }
}
