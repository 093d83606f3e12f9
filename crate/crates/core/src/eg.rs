//! Edelman–Greene insertion and its weak, key-shaped analogue.
//!
//! Insertion tableaux have strictly increasing rows and columns and a reduced
//! row word (read top row to bottom row, each left to right).  The weak
//! correspondence lifts the insertion tableau to key shape and records with a
//! key tableau whose column sort is the ordinary recording tableau.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::composition::{Partition, WeakComposition};
use crate::factorization::{enumerate_rfc, ReducedFactorization};
use crate::key::{column_sort_preimage, KeyTableau};
use crate::perm::{is_reduced, Permutation, Word};
use crate::ssyt::Ssyt;

/// A Young-shaped tableau with strictly increasing rows and columns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct IncTableau {
    rows: Vec<Vec<usize>>,
}

/// A key-shaped tableau with strictly increasing rows and columns, as
/// produced by [`lift`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct LiftedTableau {
    rows: Vec<Vec<usize>>,
}

/// Insertion and recording tableaux of the ordinary correspondence.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InsertionPair {
    pub p: IncTableau,
    pub q: Ssyt,
}

/// Weak insertion and recording tableaux.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeakInsertionPair {
    pub p_hat: LiftedTableau,
    pub q_hat: KeyTableau,
}

/// Errors from insertion and lift/drop.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum EgError {
    NonReducedWord,
    NotPartitionShape,
    InvalidTableau,
}

impl fmt::Display for EgError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EgError::NonReducedWord => write!(f, "word is not reduced"),
            EgError::NotPartitionShape => write!(f, "dropped tableau is not of partition shape"),
            EgError::InvalidTableau => write!(f, "rows or columns fail to strictly increase"),
        }
    }
}

impl core::error::Error for EgError {}

impl IncTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, EgError> {
        for r in 0..rows.len() {
            if rows[r].is_empty() || (r + 1 < rows.len() && rows[r + 1].len() > rows[r].len()) {
                return Err(EgError::NotPartitionShape);
            }
            if !rows[r].windows(2).all(|w| w[0] < w[1]) {
                return Err(EgError::InvalidTableau);
            }
            if r > 0 {
                for c in 0..rows[r].len() {
                    if rows[r - 1][c] >= rows[r][c] {
                        return Err(EgError::InvalidTableau);
                    }
                }
            }
        }
        Ok(IncTableau { rows })
    }

    pub fn empty() -> Self {
        IncTableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("partition shape")
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Row word: rows from top to bottom, each left to right.
    pub fn row_word(&self) -> Word {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Edelman–Greene insertion of a letter.
    pub fn insert(&self, x: usize) -> IncTableau {
        self.insert_tracked(x).0
    }

    /// Insertion together with the 0-based `(row, col)` of the new cell.
    pub fn insert_tracked(&self, x: usize) -> (IncTableau, (usize, usize)) {
        let mut rows = self.rows.clone();
        let mut x = x;
        for r in 0..rows.len() {
            let row = &mut rows[r];
            if row.last().is_none_or(|&last| x >= last) {
                // note: x == last cannot occur for reduced insertions
                row.push(x);
                let cell = (r, row.len() - 1);
                return (IncTableau { rows }, cell);
            }
            let pos = row.partition_point(|&z| z <= x);
            let bumped = row[pos];
            if bumped == x + 1 && row[..pos].last() == Some(&x) {
                // special rule: the row already reads ... x, x+1 ...; leave it
                // unchanged and bump x+1 onward
                x = bumped;
            } else {
                row[pos] = x;
                x = bumped;
            }
        }
        rows.push(alloc::vec![x]);
        let cell = (rows.len() - 1, 0);
        (IncTableau { rows }, cell)
    }
}

impl LiftedTableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        let mut rows = rows;
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        LiftedTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> WeakComposition {
        WeakComposition::new(self.rows.iter().map(|r| r.len()).collect())
    }

    /// Row word: rows from top to bottom, each left to right.
    pub fn row_word(&self) -> Word {
        self.rows.iter().rev().flatten().copied().collect()
    }
}

/// The ordinary correspondence: a reduced word maps to its insertion tableau
/// and standard recording tableau.
pub fn eg_correspondence(word: &[usize]) -> Result<InsertionPair, EgError> {
    let n = word.iter().copied().max().unwrap_or(0) + 1;
    if !is_reduced(word, n) {
        return Err(EgError::NonReducedWord);
    }
    let mut p = IncTableau::empty();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for (step, &letter) in word.iter().enumerate() {
        let (next, (r, c)) = p.insert_tracked(letter);
        p = next;
        if q_rows.len() <= r {
            q_rows.push(Vec::new());
        }
        debug_assert_eq!(q_rows[r].len(), c);
        q_rows[r].push(step + 1);
    }
    let q = Ssyt::new(q_rows, word.len().max(1)).map_err(|_| EgError::InvalidTableau)?;
    Ok(InsertionPair { p, q })
}

/// The correspondence for factorizations: the underlying word is inserted and
/// each new cell records the display index of its block (block `i` from the
/// right records `ℓ - i + 1`).
pub fn eg_record_factorization(r: &ReducedFactorization) -> Result<InsertionPair, EgError> {
    let word = r.word();
    let n = word.iter().copied().max().unwrap_or(0) + 1;
    if !is_reduced(&word, n) {
        return Err(EgError::NonReducedWord);
    }
    let mut p = IncTableau::empty();
    let mut q_rows: Vec<Vec<usize>> = Vec::new();
    for (j, block) in r.blocks().iter().enumerate() {
        for &letter in block {
            let (next, (row, col)) = p.insert_tracked(letter);
            p = next;
            if q_rows.len() <= row {
                q_rows.push(Vec::new());
            }
            debug_assert_eq!(q_rows[row].len(), col);
            q_rows[row].push(j + 1);
        }
    }
    let q = Ssyt::new(q_rows, r.num_blocks()).map_err(|_| EgError::InvalidTableau)?;
    Ok(InsertionPair { p, q })
}

/// Lifts a partition-shaped increasing tableau to key shape: column 1 entries
/// rise to the rows given by their values; column `c` entries are placed top
/// to bottom in the highest available row whose column `c-1` entry is
/// strictly smaller.
pub fn lift(p: &IncTableau) -> LiftedTableau {
    let width = p.rows.first().map_or(0, |r| r.len());
    // per column, a map row index -> entry
    let mut placed: Vec<BTreeMap<usize, usize>> = Vec::with_capacity(width);
    for c in 0..width {
        let column: Vec<usize> = p.rows.iter().filter_map(|row| row.get(c).copied()).collect();
        let mut current = BTreeMap::new();
        if c == 0 {
            for &e in &column {
                current.insert(e, e); // rises to the row given by its value
            }
        } else {
            let prev = placed.last().expect("previous column placed");
            let mut prev_row = usize::MAX;
            for &e in column.iter().rev() {
                let row = prev
                    .iter()
                    .filter(|&(&row, &left)| row < prev_row && left < e)
                    .map(|(&row, _)| row)
                    .max()
                    .expect("liftable column entry");
                current.insert(row, e);
                prev_row = row;
            }
        }
        placed.push(current);
    }
    let mut by_row: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
    for (c, column) in placed.iter().enumerate() {
        for (&row, &e) in column {
            by_row.entry(row).or_default().insert(c, e);
        }
    }
    let height = by_row.keys().copied().max().unwrap_or(0);
    let rows: Vec<Vec<usize>> = (1..=height)
        .map(|row| {
            by_row
                .get(&row)
                .map(|cells| cells.values().copied().collect())
                .unwrap_or_default()
        })
        .collect();
    LiftedTableau::new(rows)
}

/// Lets entries fall down their columns; fails when the result is not of
/// partition shape.
pub fn drop_tableau(p_hat: &LiftedTableau) -> Result<IncTableau, EgError> {
    let width = p_hat.rows.iter().map(|r| r.len()).max().unwrap_or(0);
    let mut columns: Vec<Vec<usize>> = Vec::with_capacity(width);
    for c in 0..width {
        columns.push(
            p_hat
                .rows
                .iter()
                .filter_map(|row| row.get(c).copied())
                .collect(),
        );
    }
    for pair in columns.windows(2) {
        if pair[1].len() > pair[0].len() {
            return Err(EgError::NotPartitionShape);
        }
    }
    let height = columns.first().map_or(0, |c| c.len());
    let rows: Vec<Vec<usize>> = (0..height)
        .map(|r| {
            columns
                .iter()
                .filter(|col| col.len() > r)
                .map(|col| col[r])
                .collect()
        })
        .collect();
    IncTableau::new(rows)
}

/// The weak correspondence for a reduced word: the lifted insertion tableau
/// and the standard key recording tableau.
pub fn weak_eg_word(word: &[usize]) -> Result<WeakInsertionPair, EgError> {
    let InsertionPair { p, q } = eg_correspondence(word)?;
    let p_hat = lift(&p);
    let a = p_hat.shape();
    let q_hat = column_sort_preimage(&q, &a, word.len().max(1), false)
        .map_err(|_| EgError::InvalidTableau)?
        .ok_or(EgError::InvalidTableau)?;
    debug_assert!(q_hat.validate(false).is_ok());
    Ok(WeakInsertionPair { p_hat, q_hat })
}

/// The weak correspondence for a factorization: the recording tableau is the
/// unique semi-standard key tableau whose column sort is the ordinary
/// semi-standard recording tableau.
pub fn weak_eg(r: &ReducedFactorization) -> Result<WeakInsertionPair, EgError> {
    let InsertionPair { p, q } = eg_record_factorization(r)?;
    let p_hat = lift(&p);
    let a = p_hat.shape();
    let q_hat = column_sort_preimage(&q, &a, r.num_blocks(), true)
        .map_err(|_| EgError::InvalidTableau)?
        .ok_or(EgError::InvalidTableau)?;
    Ok(WeakInsertionPair { p_hat, q_hat })
}

/// Shapes of the distinct insertion tableaux over the reduced words of
/// `w^{-1}`: the Schur expansion multiplicities of the Stanley symmetric
/// function.
pub fn schur_expansion_stanley(w: &Permutation) -> BTreeMap<Partition, usize> {
    let mut tableaux = BTreeSet::new();
    for word in w.inverse().reduced_words() {
        let pair = eg_correspondence(&word).expect("reduced by construction");
        tableaux.insert(pair.p);
    }
    let mut out = BTreeMap::new();
    for p in tableaux {
        *out.entry(p.shape().trimmed()).or_insert(0) += 1;
    }
    out
}

/// Shapes of the lifted insertion tableaux over the highest weight elements
/// of `RFC(w^{-1})`: the Demazure expansion multiplicities of the Schubert
/// polynomial.
pub fn demazure_expansion_schubert(w: &Permutation) -> BTreeMap<WeakComposition, usize> {
    let mut out = BTreeMap::new();
    for r in enumerate_rfc(&w.inverse()) {
        let highest = (1..r.num_blocks()).all(|i| r.raise(i, true).is_none());
        if !highest {
            continue;
        }
        let pair = weak_eg(&r).expect("factorizations of reduced words");
        *out.entry(pair.p_hat.shape().trimmed()).or_insert(0) += 1;
    }
    out
}

impl fmt::Display for IncTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty tableau)");
        }
        for (k, row) in self.rows.iter().enumerate().rev() {
            let cells: Vec<String> = row.iter().map(|e| alloc::format!("{e}")).collect();
            write!(f, "{}", cells.join(" "))?;
            if k > 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for LiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "|");
        }
        for (k, row) in self.rows.iter().enumerate().rev() {
            let cells: Vec<String> = row.iter().map(|e| alloc::format!("{e}")).collect();
            write!(f, "|{}", cells.join(" "))?;
            if k > 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn inc(rows: &[&[usize]]) -> IncTableau {
        IncTableau::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    #[test]
    fn insertion_steps() {
        let p = IncTableau::empty().insert(4);
        assert_eq!(p, inc(&[&[4]]));
        let p = p.insert(5);
        assert_eq!(p, inc(&[&[4, 5]]));
        // the special no-bump rule
        let before = inc(&[&[2, 3], &[4, 5]]);
        assert_eq!(before.insert(2), inc(&[&[2, 3], &[3, 5], &[4]]));
    }

    #[test]
    fn correspondence_anchor() {
        let pair = eg_correspondence(&[4, 5, 2, 3, 2]).unwrap();
        assert_eq!(pair.p, inc(&[&[2, 3], &[3, 5], &[4]]));
        assert_eq!(pair.q.rows(), &[vec![1, 2], vec![3, 4], vec![5]]);
        assert_eq!(pair.p.row_word(), vec![4, 3, 5, 2, 3]);
        let empty = eg_correspondence(&[]).unwrap();
        assert!(empty.p.rows().is_empty());
        assert!(eg_correspondence(&[1, 1]).is_err());
    }

    #[test]
    fn correspondence_shapes() {
        let w = Permutation::from_oneline(vec![1, 5, 3, 2, 6, 4]).unwrap();
        let s221 = Partition::new(vec![2, 2, 1]).unwrap();
        let s311 = Partition::new(vec![3, 1, 1]).unwrap();
        for word in w.reduced_words() {
            let shape = eg_correspondence(&word).unwrap().p.shape();
            assert!(shape == s221 || shape == s311);
        }
    }

    #[test]
    fn factorization_recording_anchor() {
        let r: ReducedFactorization = "(4)(5)(23)(2)".parse().unwrap();
        let pair = eg_record_factorization(&r).unwrap();
        assert_eq!(pair.q.rows(), &[vec![1, 2], vec![3, 3], vec![4]]);
        // weights reverse between the factorization and its recording tableau
        assert_eq!(pair.q.weight().parts(), &[1, 1, 2, 1]);
        assert_eq!(r.weight().parts(), &[1, 2, 1, 1]);
        let single: ReducedFactorization = "(1)".parse().unwrap();
        let q1 = eg_record_factorization(&single).unwrap().q;
        assert_eq!(q1.rows(), &[vec![1]]);
    }

    #[test]
    fn lift_anchor() {
        let p = inc(&[&[2, 3], &[3, 5], &[4]]);
        let lifted = lift(&p);
        assert_eq!(lifted.rows(), &[vec![], vec![2, 3], vec![3], vec![4, 5]]);
        assert_eq!(lifted.shape().parts(), &[0, 2, 1, 2]);
        let tall = inc(&[&[2, 3, 5], &[3], &[4]]);
        let lifted_tall = lift(&tall);
        assert_eq!(lifted_tall.rows(), &[vec![], vec![2, 3, 5], vec![3], vec![4]]);
        // a tableau whose row i starts with entry i lifts to itself
        let fixed = inc(&[&[1, 2], &[2, 3]]);
        assert_eq!(lift(&fixed).rows(), &[vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn drop_reverses_lift() {
        let p = inc(&[&[2, 3], &[3, 5], &[4]]);
        assert_eq!(drop_tableau(&lift(&p)).unwrap(), p);
        let fixed = inc(&[&[1, 3], &[2, 4]]);
        let as_lifted = LiftedTableau::new(fixed.rows().to_vec());
        assert_eq!(drop_tableau(&as_lifted).unwrap(), fixed);
        let with_gap = LiftedTableau::new(vec![vec![], vec![1, 2, 3], vec![4]]);
        assert!(drop_tableau(&with_gap).is_ok());
        // falling preserves relative column order, so inverted columns fail
        let inverted = LiftedTableau::new(vec![vec![3], vec![1, 2]]);
        assert!(drop_tableau(&inverted).is_err());
    }

    #[test]
    fn weak_eg_word_anchor() {
        let pair = weak_eg_word(&[4, 5, 2, 3, 2]).unwrap();
        assert_eq!(pair.p_hat.rows(), &[vec![], vec![2, 3], vec![3], vec![4, 5]]);
        assert_eq!(
            pair.q_hat.rows(),
            &[vec![], vec![3, 2], vec![1], vec![5, 4]]
        );
    }

    #[test]
    fn weak_eg_factorization_anchor() {
        let r: ReducedFactorization = "(4)(5)(23)(2)".parse().unwrap();
        let pair = weak_eg(&r).unwrap();
        assert_eq!(pair.p_hat.rows(), &[vec![], vec![2, 3], vec![3], vec![4, 5]]);
        assert_eq!(pair.q_hat.rows(), &[vec![], vec![2, 2], vec![1], vec![4, 3]]);
        assert_eq!(pair.q_hat.weight().parts(), &[1, 2, 1, 1]);
        assert_eq!(pair.q_hat.weight(), r.weight());
    }

    #[test]
    fn weak_eg_highest_weight_shape() {
        let r: ReducedFactorization = "()(4)(35)(23)".parse().unwrap();
        let pair = weak_eg(&r).unwrap();
        assert_eq!(pair.p_hat.shape().parts(), &[0, 2, 1, 2]);
    }

    #[test]
    fn expansion_anchors() {
        let w = Permutation::from_oneline(vec![1, 4, 3, 6, 2, 5]).unwrap();
        let schur = schur_expansion_stanley(&w);
        assert_eq!(schur.len(), 2);
        assert_eq!(schur[&Partition::new(vec![2, 2, 1]).unwrap()], 1);
        assert_eq!(schur[&Partition::new(vec![3, 1, 1]).unwrap()], 1);

        let demazure = demazure_expansion_schubert(&w);
        assert_eq!(demazure.len(), 2);
        assert_eq!(demazure[&WeakComposition::new(vec![0, 2, 1, 2])], 1);
        assert_eq!(demazure[&WeakComposition::new(vec![0, 3, 1, 1])], 1);

        let id = Permutation::identity(3);
        assert_eq!(
            schur_expansion_stanley(&id),
            BTreeMap::from([(Partition::empty(), 1)])
        );
        assert_eq!(
            demazure_expansion_schubert(&id),
            BTreeMap::from([(WeakComposition::new(vec![]), 1)])
        );
        let s1 = Permutation::from_oneline(vec![2, 1]).unwrap();
        assert_eq!(
            schur_expansion_stanley(&s1),
            BTreeMap::from([(Partition::new(vec![1]).unwrap(), 1)])
        );
    }
}
