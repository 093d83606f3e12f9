//! Weak compositions, partitions, and the sorting action of permutations.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::perm::{Permutation, Word};

/// A sequence of non-negative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct WeakComposition {
    parts: Vec<usize>,
}

/// A weakly decreasing sequence of non-negative integers.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl WeakComposition {
    pub fn new(parts: Vec<usize>) -> Self {
        WeakComposition { parts }
    }

    pub fn zero(n: usize) -> Self {
        WeakComposition {
            parts: alloc::vec![0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The part `a_i`, 1-based.
    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_weakly_decreasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn is_weakly_increasing(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] <= w[1])
    }

    /// The decreasing rearrangement, keeping the length.
    pub fn sorted(&self) -> Partition {
        let mut parts = self.parts.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// Swaps parts `i` and `i+1` (1-based).
    pub fn swap_adjacent(&self, i: usize) -> Self {
        let mut parts = self.parts.clone();
        parts.swap(i - 1, i);
        WeakComposition { parts }
    }

    /// Reversal of the parts.
    pub fn reversed(&self) -> Self {
        let mut parts = self.parts.clone();
        parts.reverse();
        WeakComposition { parts }
    }

    /// Drops trailing zero parts.
    pub fn trimmed(&self) -> Self {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        WeakComposition { parts }
    }

    /// Zero-pads on the right to length `n`.
    pub fn padded(&self, n: usize) -> Self {
        let mut parts = self.parts.clone();
        assert!(parts.len() <= n, "cannot pad to a shorter length");
        parts.resize(n, 0);
        WeakComposition { parts }
    }
}

impl Partition {
    /// Validates that the parts weakly decrease.
    pub fn new(parts: Vec<usize>) -> Option<Self> {
        if parts.windows(2).all(|w| w[0] >= w[1]) {
            Some(Partition { parts })
        } else {
            None
        }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts[i - 1]
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn rows(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    pub fn trimmed(&self) -> Self {
        let mut parts = self.parts.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn as_composition(&self) -> WeakComposition {
        WeakComposition::new(self.parts.clone())
    }
}

/// The action `(w · a)_i = a_{w(i)}`.
///
/// Panics when the lengths disagree.
pub fn act_on_composition(w: &Permutation, a: &WeakComposition) -> WeakComposition {
    assert_eq!(w.n(), a.len(), "length mismatch acting on composition");
    WeakComposition::new((1..=w.n()).map(|i| a.part(w.image(i))).collect())
}

/// Sorts a weak composition to its partition rearrangement.
///
/// Returns the partition `λ`, the minimal-length permutation `w` with
/// `a_{w(i)} = λ_i`, and the canonical (Lehmer code) reduced word for `w`.
pub fn sort_composition(a: &WeakComposition) -> (Partition, Permutation, Word) {
    let n = a.len();
    let mut idx: Vec<usize> = (1..=n).collect();
    // stable: value descending, original position ascending
    idx.sort_by(|&i, &j| a.part(j).cmp(&a.part(i)).then(i.cmp(&j)));
    let w = Permutation::from_oneline(idx).expect("index sort yields a permutation");
    let lambda = a.sorted();
    debug_assert_eq!(act_on_composition(&w, a), lambda.as_composition());
    let word = w.code_word();
    (lambda, w, word)
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| alloc::format!("{p}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| alloc::format!("{p}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for WeakComposition {
    type Err = &'static str;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(WeakComposition::new(Vec::new()));
        }
        let parts: Result<Vec<usize>, _> = s.split(',').map(|p| p.trim().parse()).collect();
        parts
            .map(WeakComposition::new)
            .map_err(|_| "expected a comma-separated list of non-negative integers")
    }
}

impl FromStr for Partition {
    type Err = &'static str;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let a: WeakComposition = s.parse()?;
        Partition::new(a.parts().to_vec()).ok_or("parts must weakly decrease")
    }
}
