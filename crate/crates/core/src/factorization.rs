//! Reduced factorizations, the cutoff condition, the pairing-rule crystal
//! operators, and compatible sequences.
//!
//! A factorization splits a reduced word into blocks that increase left to
//! right within each block.  Blocks are stored in display order
//! `r^ℓ r^{ℓ-1} ... r^1`, so block 1 is the rightmost; the weight records the
//! block sizes from the right.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::composition::WeakComposition;
use crate::perm::{apply_word, PermError, Permutation, Word};

/// An increasing factorization of a reduced word into blocks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ReducedFactorization {
    blocks: Vec<Vec<usize>>,
}

/// A reduced word together with a compatible sequence.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct CompatibleSequence {
    word: Word,
    seq: Vec<usize>,
}

/// Errors from factorization and compatible-sequence construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FactorizationError {
    BlockNotIncreasing { block: usize },
    CutoffViolation { block: usize },
    InvalidCompatiblePair(&'static str),
    Word(PermError),
}

impl fmt::Display for FactorizationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FactorizationError::BlockNotIncreasing { block } => {
                write!(f, "block {block} (from the right) is not strictly increasing")
            }
            FactorizationError::CutoffViolation { block } => {
                write!(f, "block {block} (from the right) starts below its index")
            }
            FactorizationError::InvalidCompatiblePair(what) => {
                write!(f, "invalid compatible pair: {what}")
            }
            FactorizationError::Word(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for FactorizationError {}

impl ReducedFactorization {
    /// Builds a factorization from blocks in display order (`r^ℓ` first),
    /// validating that every block strictly increases.
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self, FactorizationError> {
        let l = blocks.len();
        for (j, block) in blocks.iter().enumerate() {
            if !block.windows(2).all(|w| w[0] < w[1]) || block.contains(&0) {
                return Err(FactorizationError::BlockNotIncreasing { block: l - j });
            }
        }
        Ok(ReducedFactorization { blocks })
    }

    /// The all-empty factorization into `l` blocks.
    pub fn empty(l: usize) -> Self {
        ReducedFactorization {
            blocks: alloc::vec![Vec::new(); l],
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Blocks in display order (`r^ℓ` first).
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// The block `r^i`, indexed from the right (1-based).
    pub fn block_from_right(&self, i: usize) -> &[usize] {
        &self.blocks[self.blocks.len() - i]
    }

    /// The underlying word, blocks concatenated left to right.
    pub fn word(&self) -> Word {
        self.blocks.iter().flatten().copied().collect()
    }

    /// `wt(r)_i` is the size of block `i` from the right; length `ℓ`.
    pub fn weight(&self) -> WeakComposition {
        WeakComposition::new(self.blocks.iter().rev().map(|b| b.len()).collect())
    }

    pub fn underlying_permutation(&self, n: usize) -> Result<Permutation, PermError> {
        apply_word(&self.word(), n)
    }

    /// The cutoff condition: the first entry of block `i` from the right is
    /// at least `i`.
    pub fn satisfies_cutoff(&self) -> bool {
        (1..=self.num_blocks())
            .all(|i| self.block_from_right(i).first().is_none_or(|&first| first >= i))
    }

    /// Prepends empty blocks on the left to reach `l` blocks.
    pub fn pad_blocks(&self, l: usize) -> Self {
        assert!(l >= self.num_blocks(), "cannot pad to fewer blocks");
        let mut blocks = alloc::vec![Vec::new(); l - self.num_blocks()];
        blocks.extend(self.blocks.iter().cloned());
        ReducedFactorization { blocks }
    }

    /// The unpaired letters `(R_i, L_i)` of blocks `r^i` and `r^{i+1}` under
    /// the pairing rule: each `b` in `r^i`, taken in decreasing order, pairs
    /// with the smallest unpaired `a > b` in `r^{i+1}`.
    pub fn pairing(&self, i: usize) -> (BTreeSet<usize>, BTreeSet<usize>) {
        assert!(i >= 1 && i < self.num_blocks(), "block index out of range");
        let lower_block = self.block_from_right(i);
        let upper_block = self.block_from_right(i + 1);
        let mut paired = alloc::vec![false; upper_block.len()];
        let mut r_unpaired = BTreeSet::new();
        for &b in lower_block.iter().rev() {
            let partner = upper_block
                .iter()
                .enumerate()
                .find(|&(k, &a)| !paired[k] && a > b);
            match partner {
                Some((k, _)) => paired[k] = true,
                None => {
                    r_unpaired.insert(b);
                }
            }
        }
        let l_unpaired = upper_block
            .iter()
            .enumerate()
            .filter(|&(k, _)| !paired[k])
            .map(|(_, &a)| a)
            .collect();
        (r_unpaired, l_unpaired)
    }

    /// The lowering operator `f_i`: moves `b = min R_i` from `r^i` to
    /// `r^{i+1}` as `b - t`.  With `cutoff` set, results violating the cutoff
    /// condition are absent.
    pub fn lower(&self, i: usize, cutoff: bool) -> Option<Self> {
        let (r_unpaired, _) = self.pairing(i);
        let &b = r_unpaired.first()?;
        let lower_set: BTreeSet<usize> = self.block_from_right(i).iter().copied().collect();
        let mut t = 0;
        while lower_set.contains(&(b - t - 1)) {
            t += 1;
        }
        let mut out = self.clone();
        let l = self.num_blocks();
        out.blocks[l - i].retain(|&x| x != b);
        insert_sorted(&mut out.blocks[l - i - 1], b - t);
        debug_assert!(ReducedFactorization::new(out.blocks.clone()).is_ok());
        if cutoff && !out.satisfies_cutoff() {
            return None;
        }
        Some(out)
    }

    /// The raising operator `e_i`: moves `a = max L_i` from `r^{i+1}` to
    /// `r^i` as `a + s`.  With `cutoff` set, results violating the cutoff
    /// condition are absent.
    pub fn raise(&self, i: usize, cutoff: bool) -> Option<Self> {
        let (_, l_unpaired) = self.pairing(i);
        let &a = l_unpaired.last()?;
        let upper_set: BTreeSet<usize> = self.block_from_right(i + 1).iter().copied().collect();
        let mut s = 0;
        while upper_set.contains(&(a + s + 1)) {
            s += 1;
        }
        let mut out = self.clone();
        let l = self.num_blocks();
        out.blocks[l - i - 1].retain(|&x| x != a);
        insert_sorted(&mut out.blocks[l - i], a + s);
        debug_assert!(ReducedFactorization::new(out.blocks.clone()).is_ok());
        if cutoff && !out.satisfies_cutoff() {
            return None;
        }
        Some(out)
    }

    /// The compatible pair `(ρ, α)` with `α_j` the block index of `ρ_j` from
    /// the right.  Requires the cutoff condition.
    pub fn to_compatible(&self) -> Result<CompatibleSequence, FactorizationError> {
        if !self.satisfies_cutoff() {
            let bad = (1..=self.num_blocks())
                .find(|&i| self.block_from_right(i).first().is_some_and(|&first| first < i))
                .expect("some block violates");
            return Err(FactorizationError::CutoffViolation { block: bad });
        }
        let l = self.num_blocks();
        let mut word = Vec::new();
        let mut seq = Vec::new();
        for (j, block) in self.blocks.iter().enumerate() {
            for &letter in block {
                word.push(letter);
                seq.push(l - j);
            }
        }
        CompatibleSequence::new(word, seq)
    }
}

fn insert_sorted(block: &mut Vec<usize>, value: usize) {
    let pos = block.partition_point(|&x| x < value);
    block.insert(pos, value);
}

impl CompatibleSequence {
    /// Validates the compatibility conditions: `α` weakly decreasing,
    /// `α_j <= ρ_j`, and `α_j > α_{j+1}` whenever `ρ_j > ρ_{j+1}`.
    pub fn new(word: Word, seq: Vec<usize>) -> Result<Self, FactorizationError> {
        if word.len() != seq.len() {
            return Err(FactorizationError::InvalidCompatiblePair("length mismatch"));
        }
        if seq.iter().any(|&a| a == 0) || word.iter().any(|&p| p == 0) {
            return Err(FactorizationError::InvalidCompatiblePair("entries must be positive"));
        }
        if !seq.windows(2).all(|w| w[0] >= w[1]) {
            return Err(FactorizationError::InvalidCompatiblePair(
                "sequence must weakly decrease",
            ));
        }
        if word.iter().zip(&seq).any(|(&p, &a)| a > p) {
            return Err(FactorizationError::InvalidCompatiblePair(
                "sequence entry exceeds its word letter",
            ));
        }
        for j in 0..word.len().saturating_sub(1) {
            if word[j] > word[j + 1] && seq[j] <= seq[j + 1] {
                return Err(FactorizationError::InvalidCompatiblePair(
                    "sequence must strictly decrease at word descents",
                ));
            }
        }
        Ok(CompatibleSequence { word, seq })
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn seq(&self) -> &[usize] {
        &self.seq
    }
}

/// Rebuilds the factorization with `blocks` blocks from a compatible pair:
/// letter `ρ_j` goes to block `α_j` from the right.
pub fn from_compatible(
    c: &CompatibleSequence,
    blocks: usize,
) -> Result<ReducedFactorization, FactorizationError> {
    if c.seq.first().is_some_and(|&a| a > blocks) {
        return Err(FactorizationError::InvalidCompatiblePair(
            "sequence entry exceeds the block count",
        ));
    }
    let mut out = alloc::vec![Vec::new(); blocks];
    for (&letter, &a) in c.word.iter().zip(&c.seq) {
        out[blocks - a].push(letter);
    }
    ReducedFactorization::new(out)
}

/// All increasing factorizations of the reduced words of `w` into `l` blocks.
pub fn enumerate_rf(w: &Permutation, l: usize) -> BTreeSet<ReducedFactorization> {
    let mut out = BTreeSet::new();
    for word in w.reduced_words() {
        let mut assignment: Vec<usize> = Vec::with_capacity(word.len());
        assign_blocks(&word, l, &mut assignment, &mut out);
    }
    out
}

// Block indices from the right weakly decrease along the word and may repeat
// only across a strict ascent.
fn assign_blocks(
    word: &[usize],
    l: usize,
    assignment: &mut Vec<usize>,
    out: &mut BTreeSet<ReducedFactorization>,
) {
    let j = assignment.len();
    if j == word.len() {
        let mut blocks = alloc::vec![Vec::new(); l];
        for (k, &a) in assignment.iter().enumerate() {
            blocks[l - a].push(word[k]);
        }
        out.insert(ReducedFactorization { blocks });
        return;
    }
    if l == 0 {
        return;
    }
    let hi = if j == 0 { l } else { assignment[j - 1] };
    for a in (1..=hi).rev() {
        if j > 0 && a == assignment[j - 1] && word[j - 1] >= word[j] {
            continue;
        }
        assignment.push(a);
        assign_blocks(word, l, assignment, out);
        assignment.pop();
    }
}

/// All reduced factorizations with cutoff of `w`, into `n` blocks for
/// `w` in `S_n`.
pub fn enumerate_rfc(w: &Permutation) -> BTreeSet<ReducedFactorization> {
    enumerate_rf(w, w.n())
        .into_iter()
        .filter(|r| r.satisfies_cutoff())
        .collect()
}

impl fmt::Display for ReducedFactorization {
    /// Parenthesized blocks left to right, e.g. `(45)(3)(23)()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            let all_small = block.iter().all(|&x| x <= 9);
            let letters: Vec<String> = block.iter().map(|x| alloc::format!("{x}")).collect();
            if all_small {
                write!(f, "({})", letters.join(""))?;
            } else {
                write!(f, "({})", letters.join(","))?;
            }
        }
        Ok(())
    }
}

impl FromStr for ReducedFactorization {
    type Err = FactorizationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut blocks = Vec::new();
        let mut rest = s;
        while !rest.is_empty() {
            let inner = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or(FactorizationError::InvalidCompatiblePair(
                    "expected parenthesized blocks",
                ))?;
            let block = crate::perm::parse_word(inner.0).ok_or(
                FactorizationError::InvalidCompatiblePair("unreadable block letters"),
            )?;
            blocks.push(block);
            rest = inner.1;
        }
        ReducedFactorization::new(blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rf(blocks: &[&[usize]]) -> ReducedFactorization {
        ReducedFactorization::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    fn w153264() -> Permutation {
        Permutation::from_oneline(vec![1, 5, 3, 2, 6, 4]).unwrap()
    }

    #[test]
    fn weights() {
        assert_eq!(rf(&[&[4, 5], &[3], &[2, 3], &[]]).weight().parts(), &[0, 2, 1, 2]);
        assert_eq!(rf(&[&[], &[], &[]]).weight().parts(), &[0, 0, 0]);
        assert_eq!(rf(&[&[4], &[5], &[2, 3], &[2]]).weight().parts(), &[1, 2, 1, 1]);
    }

    #[test]
    fn enumerate_rf_examples() {
        let rf4 = enumerate_rf(&w153264(), 4);
        assert_eq!(rf4.len(), 56);
        assert!(rf4.contains(&rf(&[&[], &[4, 5], &[3], &[2, 3]])));
        assert!(rf4.contains(&rf(&[&[2, 4], &[3], &[2, 5], &[]])));
        let id3 = enumerate_rf(&Permutation::identity(3), 3);
        assert_eq!(id3.len(), 1);
        let s2 = enumerate_rf(&Permutation::from_oneline(vec![2, 1]).unwrap(), 2);
        assert_eq!(s2, BTreeSet::from([rf(&[&[1], &[]]), rf(&[&[], &[1]])]));
    }

    #[test]
    fn enumerate_rfc_examples() {
        let rfc = enumerate_rfc(&w153264());
        assert_eq!(rfc.len(), 26);
        assert!(rfc.contains(&rf(&[&[4, 5], &[3], &[2, 3], &[]]).pad_blocks(6)));
        assert!(rfc.contains(&rf(&[&[4], &[3], &[2, 5], &[3]]).pad_blocks(6)));
        let id = enumerate_rfc(&Permutation::identity(3));
        assert_eq!(id.len(), 1);
        let s2 = enumerate_rfc(&Permutation::from_oneline(vec![2, 1]).unwrap());
        assert_eq!(s2, BTreeSet::from([rf(&[&[], &[1]])]));
    }

    #[test]
    fn pairing_examples() {
        let r = rf(&[&[2], &[1, 3], &[2, 3]]);
        let (r1, l1) = r.pairing(1);
        assert_eq!(r1, BTreeSet::from([3]));
        assert_eq!(l1, BTreeSet::from([1]));
        let empty_low = rf(&[&[2], &[1, 3], &[]]);
        let (r2, l2) = empty_low.pairing(1);
        assert!(r2.is_empty());
        assert_eq!(l2, BTreeSet::from([1, 3]));
        let full = rf(&[&[3, 5], &[2, 3]]);
        let (ru, lu) = full.pairing(1);
        assert!(ru.is_empty());
        assert!(lu.is_empty());
    }

    #[test]
    fn operator_examples() {
        let r = rf(&[&[2], &[1, 3], &[2, 3]]);
        assert_eq!(r.lower(1, false).unwrap(), rf(&[&[2], &[1, 2, 3], &[2]]));
        assert_eq!(r.raise(1, false).unwrap(), rf(&[&[2], &[3], &[1, 2, 3]]));
        let no_unpaired = rf(&[&[3, 5], &[2, 3]]);
        assert_eq!(no_unpaired.lower(1, false), None);
    }

    #[test]
    fn operators_are_mutually_inverse() {
        for w in crate::perm::all_permutations(4) {
            for r in enumerate_rf(&w, 4) {
                for i in 1..4 {
                    if let Some(lowered) = r.lower(i, false) {
                        assert_eq!(lowered.raise(i, false).unwrap(), r);
                        let wt = r.weight();
                        let wl = lowered.weight();
                        assert_eq!(wl.part(i) + 1, wt.part(i));
                        assert_eq!(wl.part(i + 1), wt.part(i + 1) + 1);
                    }
                    if let Some(raised) = r.raise(i, false) {
                        assert_eq!(raised.lower(i, false).unwrap(), r);
                    }
                }
            }
        }
    }

    #[test]
    fn rfc_highest_weight_anchor() {
        let hw = rf(&[&[], &[4], &[3, 5], &[2, 3]]).pad_blocks(6);
        for i in 1..6 {
            assert_eq!(hw.raise(i, true), None, "e_{i} should be absent");
        }
    }

    #[test]
    fn compatible_round_trip() {
        let r = rf(&[&[4, 5], &[3], &[2, 3], &[]]);
        let c = r.to_compatible().unwrap();
        assert_eq!(c.word(), &[4, 5, 3, 2, 3]);
        assert_eq!(c.seq(), &[4, 4, 3, 2, 2]);
        assert_eq!(from_compatible(&c, 4).unwrap(), r);

        let r2 = rf(&[&[4], &[3], &[2, 5], &[3]]);
        let c2 = r2.to_compatible().unwrap();
        assert_eq!(c2.word(), &[4, 3, 2, 5, 3]);
        assert_eq!(c2.seq(), &[4, 3, 2, 2, 1]);

        let c3 = CompatibleSequence::new(vec![4, 5, 2, 3, 2], vec![4, 3, 2, 2, 1]).unwrap();
        assert_eq!(from_compatible(&c3, 4).unwrap(), rf(&[&[4], &[5], &[2, 3], &[2]]));

        let cutoff_violation = rf(&[&[1], &[]]);
        assert!(cutoff_violation.to_compatible().is_err());
    }

    #[test]
    fn round_trip_on_rfc() {
        for w in crate::perm::all_permutations(4) {
            for r in enumerate_rfc(&w) {
                let c = r.to_compatible().unwrap();
                assert_eq!(from_compatible(&c, 4).unwrap(), r);
            }
        }
    }

    #[test]
    fn display_and_parse() {
        let r = rf(&[&[4, 5], &[3], &[2, 3], &[]]);
        assert_eq!(alloc::format!("{r}"), "(45)(3)(23)()");
        assert_eq!("(45)(3)(23)()".parse::<ReducedFactorization>().unwrap(), r);
        assert!("(45".parse::<ReducedFactorization>().is_err());
        assert!("(54)".parse::<ReducedFactorization>().is_err());
    }
}
