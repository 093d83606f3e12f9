//! Permutations in one-line notation, words in the simple transpositions,
//! and reduced-word enumeration.
//!
//! The word convention is fixed once for the whole crate: a word is applied
//! left to right, and each letter `i` swaps positions `i` and `i+1` of the
//! one-line notation built so far.  Equivalently `apply_word([i1, ..., ik])`
//! is the product `s_{i1} s_{i2} ... s_{ik}` under `(u v)(j) = u(v(j))`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

/// A word in the simple transpositions; letter `i` stands for `s_i`.
pub type Word = Vec<usize>;

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    oneline: Vec<usize>,
}

/// Errors from constructing permutations or applying words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PermError {
    /// The one-line data is not a rearrangement of `1..=n`.
    NotAPermutation,
    /// A word letter lies outside `1..=n-1`.
    LetterOutOfRange { letter: usize, n: usize },
}

impl fmt::Display for PermError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PermError::NotAPermutation => write!(f, "one-line data is not a permutation of 1..n"),
            PermError::LetterOutOfRange { letter, n } => {
                write!(f, "letter {letter} out of range for n = {n}")
            }
        }
    }
}

impl core::error::Error for PermError {}

impl Permutation {
    /// The identity permutation of `{1, ..., n}`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            oneline: (1..=n).collect(),
        }
    }

    /// The longest element `w_0 = n n-1 ... 1`.
    pub fn longest(n: usize) -> Self {
        Permutation {
            oneline: (1..=n).rev().collect(),
        }
    }

    /// Builds a permutation from one-line notation, validating that the
    /// entries are exactly `{1, ..., n}`.
    pub fn from_oneline(oneline: Vec<usize>) -> Result<Self, PermError> {
        let n = oneline.len();
        let mut seen = alloc::vec![false; n];
        for &v in &oneline {
            if v == 0 || v > n || seen[v - 1] {
                return Err(PermError::NotAPermutation);
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { oneline })
    }

    pub fn n(&self) -> usize {
        self.oneline.len()
    }

    pub fn oneline(&self) -> &[usize] {
        &self.oneline
    }

    /// The image `w(i)` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.oneline[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.oneline.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = alloc::vec![0; self.n()];
        for (k, &v) in self.oneline.iter().enumerate() {
            inv[v - 1] = k + 1;
        }
        Permutation { oneline: inv }
    }

    /// Functional composition: `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Self {
        assert_eq!(self.n(), other.n(), "size mismatch in composition");
        Permutation {
            oneline: other.oneline.iter().map(|&v| self.oneline[v - 1]).collect(),
        }
    }

    /// Number of pairs `i < j` with `w(i) > w(j)`.
    pub fn inversions(&self) -> usize {
        let w = &self.oneline;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right multiplication by `s_i`: swaps positions `i` and `i+1` (1-based).
    pub fn swap_positions(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n(), "position out of range");
        let mut oneline = self.oneline.clone();
        oneline.swap(i - 1, i);
        Permutation { oneline }
    }

    /// Positions `i` with `w(i) > w(i+1)`.
    pub fn descents(&self) -> Vec<usize> {
        (1..self.n())
            .filter(|&i| self.oneline[i - 1] > self.oneline[i])
            .collect()
    }

    /// Lehmer code: `c_i = #{ j > i : w(j) < w(i) }`.
    pub fn lehmer_code(&self) -> Vec<usize> {
        let w = &self.oneline;
        (0..w.len())
            .map(|i| (i + 1..w.len()).filter(|&j| w[j] < w[i]).count())
            .collect()
    }

    /// The canonical reduced word built from the Lehmer code: for each `i`
    /// the decreasing run `i+c_i-1, ..., i+1, i`.
    pub fn code_word(&self) -> Word {
        let mut word = Vec::new();
        for (i, &c) in self.lehmer_code().iter().enumerate() {
            let i = i + 1;
            for letter in (i..i + c).rev() {
                word.push(letter);
            }
        }
        debug_assert_eq!(word.len(), self.inversions());
        word
    }

    /// The complete set of reduced words, by descent recursion.
    pub fn reduced_words(&self) -> BTreeSet<Word> {
        fn rec(w: &Permutation, memo: &mut BTreeMap<Vec<usize>, BTreeSet<Word>>) -> BTreeSet<Word> {
            if let Some(cached) = memo.get(w.oneline()) {
                return cached.clone();
            }
            let mut out = BTreeSet::new();
            if w.is_identity() {
                out.insert(Vec::new());
            } else {
                for i in w.descents() {
                    let shorter = w.swap_positions(i);
                    for mut word in rec(&shorter, memo) {
                        word.push(i);
                        out.insert(word);
                    }
                }
            }
            memo.insert(w.oneline().to_vec(), out.clone());
            out
        }
        rec(self, &mut BTreeMap::new())
    }

    /// The shifted permutation `1^m × w` in `S_{m+n}`.
    pub fn shift(&self, m: usize) -> Permutation {
        let mut oneline: Vec<usize> = (1..=m).collect();
        oneline.extend(self.oneline.iter().map(|&v| v + m));
        Permutation { oneline }
    }
}

/// Evaluates a word left to right starting from the identity in `S_n`.
pub fn apply_word(word: &[usize], n: usize) -> Result<Permutation, PermError> {
    let mut w = Permutation::identity(n);
    for &letter in word {
        if letter == 0 || letter >= n {
            return Err(PermError::LetterOutOfRange { letter, n });
        }
        w = w.swap_positions(letter);
    }
    Ok(w)
}

/// A word is reduced when its length equals the inversion number of its product.
pub fn is_reduced(word: &[usize], n: usize) -> bool {
    match apply_word(word, n) {
        Ok(w) => w.inversions() == word.len(),
        Err(_) => false,
    }
}

/// All of `S_n` in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(n: usize, current: &mut Vec<usize>, out: &mut Vec<Permutation>) {
        if current.len() == n {
            out.push(Permutation::from_oneline(current.clone()).expect("valid by construction"));
            return;
        }
        for v in 1..=n {
            if !current.contains(&v) {
                current.push(v);
                rec(n, current, out);
                current.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Permutation {
    /// One-line digit string for `n <= 9`, comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.oneline {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.oneline.iter().map(|v| alloc::format!("{v}")).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, PermError> {
        let oneline = parse_positive_sequence(s).ok_or(PermError::NotAPermutation)?;
        Permutation::from_oneline(oneline)
    }
}

/// Renders a word as a digit string (comma-separated if any letter exceeds 9).
pub fn word_to_string(word: &[usize]) -> String {
    if word.iter().all(|&l| l <= 9) {
        word.iter().map(|l| alloc::format!("{l}")).collect()
    } else {
        let parts: Vec<String> = word.iter().map(|l| alloc::format!("{l}")).collect();
        parts.join(",")
    }
}

/// Parses a word from a digit string or a comma-separated list.
pub fn parse_word(s: &str) -> Option<Word> {
    parse_positive_sequence(s)
}

fn parse_positive_sequence(s: &str) -> Option<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Some(Vec::new());
    }
    if s.contains(',') {
        s.split(',')
            .map(|p| p.trim().parse::<usize>().ok().filter(|&v| v > 0))
            .collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).filter(|&v| v > 0))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn inversion_counts() {
        assert_eq!(Permutation::identity(4).inversions(), 0);
        assert_eq!(Permutation::longest(4).inversions(), 6);
        let w = Permutation::from_oneline(vec![1, 5, 3, 2, 6, 4]).unwrap();
        assert_eq!(w.inversions(), 5);
    }

    #[test]
    fn word_application() {
        let w = apply_word(&[4, 5, 3, 2, 3], 6).unwrap();
        assert_eq!(w.oneline(), &[1, 5, 3, 2, 6, 4]);
        assert_eq!(apply_word(&[], 4).unwrap(), Permutation::identity(4));
        assert_eq!(apply_word(&[1, 1], 3).unwrap(), Permutation::identity(3));
        assert!(apply_word(&[3], 3).is_err());
    }

    #[test]
    fn reducedness() {
        assert!(is_reduced(&[4, 5, 2, 3, 2], 6));
        assert!(!is_reduced(&[1, 1], 3));
        // 232 and 323 are both reduced words for 1432 in S_4
        assert!(is_reduced(&[2, 3, 2], 4));
        assert!(is_reduced(&[3, 2, 3], 4));
        assert_eq!(
            apply_word(&[2, 3, 2], 4).unwrap(),
            apply_word(&[3, 2, 3], 4).unwrap()
        );
        assert_eq!(apply_word(&[2, 3, 2], 4).unwrap().oneline(), &[1, 4, 3, 2]);
    }

    #[test]
    fn reduced_words_of_153264() {
        let w = Permutation::from_oneline(vec![1, 5, 3, 2, 6, 4]).unwrap();
        let words = w.reduced_words();
        assert_eq!(words.len(), 11);
        assert!(words.contains(&vec![4, 5, 3, 2, 3]));
        assert!(words.contains(&vec![2, 4, 3, 2, 5]));
    }

    #[test]
    fn reduced_words_small() {
        assert_eq!(
            Permutation::identity(3).reduced_words(),
            BTreeSet::from([vec![]])
        );
        // longest element of S_4: 16 reduced words, cross-checked by brute force
        let w0 = Permutation::longest(4);
        let words = w0.reduced_words();
        assert_eq!(words.len(), 16);
        let mut brute = BTreeSet::new();
        let k = w0.inversions();
        let mut stack = vec![Vec::new()];
        while let Some(word) = stack.pop() {
            if word.len() == k {
                if apply_word(&word, 4).unwrap() == w0 {
                    brute.insert(word);
                }
                continue;
            }
            for letter in 1..4 {
                let mut next = word.clone();
                next.push(letter);
                if is_reduced(&next, 4) {
                    stack.push(next);
                }
            }
        }
        assert_eq!(words, brute);
    }

    #[test]
    fn reduced_words_are_reduced() {
        for n in 1..=4 {
            for w in all_permutations(n) {
                for word in w.reduced_words() {
                    assert_eq!(word.len(), w.inversions());
                    assert_eq!(apply_word(&word, n).unwrap(), w);
                }
            }
        }
    }

    #[test]
    fn code_word_is_reduced() {
        for n in 1..=5 {
            for w in all_permutations(n) {
                let word = w.code_word();
                assert_eq!(word.len(), w.inversions());
                assert_eq!(apply_word(&word, n).unwrap(), w);
            }
        }
    }

    #[test]
    fn word_concatenation_is_composition() {
        let u = [1, 3, 2];
        let v = [2, 1];
        let mut uv: Vec<usize> = u.to_vec();
        uv.extend_from_slice(&v);
        let left = apply_word(&uv, 4).unwrap();
        let right = apply_word(&u, 4).unwrap().compose(&apply_word(&v, 4).unwrap());
        assert_eq!(left, right);
    }

    #[test]
    fn display_round_trip() {
        let w = Permutation::from_oneline(vec![1, 5, 3, 2, 6, 4]).unwrap();
        assert_eq!(alloc::format!("{w}"), "153264");
        assert_eq!("153264".parse::<Permutation>().unwrap(), w);
        assert!("153264x".parse::<Permutation>().is_err());
        assert!("1122".parse::<Permutation>().is_err());
    }
}
