//! Semi-standard Young tableaux and their type A crystal operators.
//!
//! French notation throughout: row 1 is the bottom row, rows weakly decrease
//! in length from bottom to top, and columns strictly increase from bottom to
//! top.  The column reading word reads each column top to bottom, columns
//! left to right.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::composition::{Partition, WeakComposition};
use crate::perm::Word;

/// A semi-standard Young tableau over the alphabet `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Ssyt {
    rows: Vec<Vec<usize>>,
    n: usize,
}

/// Violations of the semi-standard Young tableau conditions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SsytError {
    NotPartitionShape,
    RowNotWeaklyIncreasing { row: usize, col: usize },
    ColumnNotStrictlyIncreasing { row: usize, col: usize },
    EntryOutOfRange { row: usize, col: usize },
}

impl fmt::Display for SsytError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SsytError::NotPartitionShape => write!(f, "rows do not form a partition shape"),
            SsytError::RowNotWeaklyIncreasing { row, col } => {
                write!(f, "row {row} fails to weakly increase at column {col}")
            }
            SsytError::ColumnNotStrictlyIncreasing { row, col } => {
                write!(f, "column {col} fails to strictly increase at row {row}")
            }
            SsytError::EntryOutOfRange { row, col } => {
                write!(f, "entry at row {row}, column {col} is out of range")
            }
        }
    }
}

impl core::error::Error for SsytError {}

impl Ssyt {
    /// Builds and validates a tableau; `rows[0]` is the bottom row.
    pub fn new(rows: Vec<Vec<usize>>, n: usize) -> Result<Self, SsytError> {
        for r in 0..rows.len() {
            if r + 1 < rows.len() && rows[r + 1].len() > rows[r].len() {
                return Err(SsytError::NotPartitionShape);
            }
            if rows[r].is_empty() {
                return Err(SsytError::NotPartitionShape);
            }
            for c in 0..rows[r].len() {
                let entry = rows[r][c];
                if entry == 0 || entry > n {
                    return Err(SsytError::EntryOutOfRange { row: r + 1, col: c + 1 });
                }
                if c > 0 && rows[r][c - 1] > entry {
                    return Err(SsytError::RowNotWeaklyIncreasing { row: r + 1, col: c + 1 });
                }
                if r > 0 && rows[r - 1][c] >= entry {
                    return Err(SsytError::ColumnNotStrictlyIncreasing { row: r + 1, col: c + 1 });
                }
            }
        }
        Ok(Ssyt { rows, n })
    }

    /// The empty tableau.
    pub fn empty(n: usize) -> Self {
        Ssyt { rows: Vec::new(), n }
    }

    /// The highest weight tableau `u_λ` (row `i` filled with `i`), when the
    /// shape fits in `n` rows.
    pub fn highest_weight(shape: &Partition, n: usize) -> Option<Self> {
        if shape.rows() > n {
            return None;
        }
        let rows: Vec<Vec<usize>> = shape
            .parts()
            .iter()
            .enumerate()
            .take_while(|(_, &len)| len > 0)
            .map(|(i, &len)| alloc::vec![i + 1; len])
            .collect();
        Some(Ssyt { rows, n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
            .expect("tableau rows form a partition")
    }

    /// Occurrence counts of `1..=n`.
    pub fn weight(&self) -> WeakComposition {
        let mut counts = alloc::vec![0; self.n];
        for row in &self.rows {
            for &e in row {
                counts[e - 1] += 1;
            }
        }
        WeakComposition::new(counts)
    }

    /// Cells in column reading order: down each column, columns left to right.
    /// Coordinates are 0-based `(row, col)`.
    pub fn reading_cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.num_cells());
        let width = self.rows.first().map_or(0, |r| r.len());
        for c in 0..width {
            let height = self.rows.iter().take_while(|r| r.len() > c).count();
            for r in (0..height).rev() {
                cells.push((r, c));
            }
        }
        cells
    }

    /// The column reading word.
    pub fn reading_word(&self) -> Word {
        self.reading_cells()
            .into_iter()
            .map(|(r, c)| self.rows[r][c])
            .collect()
    }

    /// The lowering operator `f_i`.
    pub fn lower(&self, i: usize) -> Option<Ssyt> {
        assert!(i >= 1 && i < self.n, "color out of range");
        let cells = self.reading_cells();
        let (max, first, _) = prefix_statistic(&self.word_of(&cells), i);
        if max <= 0 {
            return None;
        }
        let (r, c) = cells[first - 1];
        debug_assert_eq!(self.rows[r][c], i);
        let mut rows = self.rows.clone();
        rows[r][c] = i + 1;
        Some(Ssyt::new(rows, self.n).expect("lowering preserves semi-standardness"))
    }

    /// The raising operator `e_i`.
    pub fn raise(&self, i: usize) -> Option<Ssyt> {
        assert!(i >= 1 && i < self.n, "color out of range");
        let cells = self.reading_cells();
        let word = self.word_of(&cells);
        let (_, _, last) = prefix_statistic(&word, i);
        if last == word.len() {
            return None;
        }
        let (r, c) = cells[last];
        debug_assert_eq!(self.rows[r][c], i + 1);
        let mut rows = self.rows.clone();
        rows[r][c] = i;
        Some(Ssyt::new(rows, self.n).expect("raising preserves semi-standardness"))
    }

    fn word_of(&self, cells: &[(usize, usize)]) -> Vec<usize> {
        cells.iter().map(|&(r, c)| self.rows[r][c]).collect()
    }
}

/// Running statistic `M_i(w, r) = wt(w_1..w_r)_i - wt(w_1..w_r)_{i+1}` with
/// `r = 0` included.  Returns `(max, smallest r attaining, largest r attaining)`.
fn prefix_statistic(word: &[usize], i: usize) -> (i64, usize, usize) {
    let mut max = 0i64;
    let mut first = 0usize;
    let mut last = 0usize;
    let mut current = 0i64;
    for (pos, &letter) in word.iter().enumerate() {
        if letter == i {
            current += 1;
        } else if letter == i + 1 {
            current -= 1;
        }
        if current > max {
            max = current;
            first = pos + 1;
            last = pos + 1;
        } else if current == max {
            last = pos + 1;
        }
    }
    (max, first, last)
}

/// All semi-standard Young tableaux of the given shape over `{1, ..., n}`.
pub fn enumerate_ssyt(shape: &Partition, n: usize) -> BTreeSet<Ssyt> {
    let shape = shape.trimmed();
    let mut out = BTreeSet::new();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    fill_rows(&shape, n, &mut rows, &mut out);
    out
}

fn fill_rows(shape: &Partition, n: usize, rows: &mut Vec<Vec<usize>>, out: &mut BTreeSet<Ssyt>) {
    let r = rows.len();
    if r == shape.len() {
        out.insert(Ssyt {
            rows: rows.clone(),
            n,
        });
        return;
    }
    let len = shape.part(r + 1);
    let mut row = Vec::with_capacity(len);
    fill_row(shape, n, rows, &mut row, len, out);
}

fn fill_row(
    shape: &Partition,
    n: usize,
    rows: &mut Vec<Vec<usize>>,
    row: &mut Vec<usize>,
    len: usize,
    out: &mut BTreeSet<Ssyt>,
) {
    if row.len() == len {
        rows.push(core::mem::take(row));
        fill_rows(shape, n, rows, out);
        *row = rows.pop().expect("just pushed");
        return;
    }
    let c = row.len();
    let lo = {
        let mut lo = 1;
        if c > 0 {
            lo = lo.max(row[c - 1]);
        }
        if let Some(below) = rows.last() {
            lo = lo.max(below[c] + 1);
        }
        lo
    };
    for entry in lo..=n {
        row.push(entry);
        fill_row(shape, n, rows, row, len, out);
        row.pop();
    }
}

impl fmt::Display for Ssyt {
    /// French layout: highest row first.
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
