//! Sparse integer polynomials with divided-difference calculus, and the
//! Schur, Demazure, Schubert, and Stanley polynomial constructors.
//!
//! Coefficients are checked 64-bit integers; arithmetic panics on overflow
//! rather than wrapping.  Divided differences are computed term by term from
//! the closed geometric-sum form, so division is exact by construction.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::composition::{Partition, WeakComposition};
use crate::factorization::{enumerate_rf, enumerate_rfc};
use crate::perm::{is_reduced, Permutation};
use crate::ssyt::enumerate_ssyt;

/// A polynomial in `nvars` variables as a map from exponent vectors to
/// nonzero integer coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SparsePolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<usize>, i64>,
}

/// Errors from operator application.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PolyError {
    NonReducedWord,
    IndexOutOfRange,
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::NonReducedWord => write!(f, "operator word is not reduced"),
            PolyError::IndexOutOfRange => write!(f, "operator index out of range"),
        }
    }
}

impl core::error::Error for PolyError {}

/// Which operator family a word applies.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorKind {
    /// Divided differences `∂_i`.
    Partial,
    /// Isobaric divided differences `π_i`.
    Isobaric,
}

impl SparsePolynomial {
    pub fn zero(nvars: usize) -> Self {
        SparsePolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(alloc::vec![0; nvars], 1)
    }

    /// The single term `coeff · x^exponents`.
    pub fn monomial(exponents: Vec<usize>, coeff: i64) -> Self {
        let nvars = exponents.len();
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exponents, coeff);
        }
        SparsePolynomial { nvars, terms }
    }

    /// `x^a` for a weak composition `a`.
    pub fn from_composition(a: &WeakComposition) -> Self {
        Self::monomial(a.parts().to_vec(), 1)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients (the evaluation at `x = (1, ..., 1)`).
    pub fn coefficient_mass(&self) -> i64 {
        self.terms
            .values()
            .fold(0i64, |acc, &c| acc.checked_add(c).expect("mass overflow"))
    }

    pub fn coeff(&self, exponents: &[usize]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Terms in canonical order: lexicographically descending exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], i64)> {
        self.terms.iter().rev().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn add_term(&mut self, exponents: Vec<usize>, coeff: i64) {
        assert_eq!(exponents.len(), self.nvars, "exponent length mismatch");
        if coeff == 0 {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(exponents) {
            Entry::Occupied(mut occupied) => {
                let updated = occupied.get().checked_add(coeff).expect("coefficient overflow");
                if updated == 0 {
                    occupied.remove();
                } else {
                    *occupied.get_mut() = updated;
                }
            }
            Entry::Vacant(vacant) => {
                vacant.insert(coeff);
            }
        }
    }

    pub fn add(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, &c) in &other.terms {
            out.add_term(e.clone(), c.checked_neg().expect("negation overflow"));
        }
        out
    }

    /// Multiplication by the variable `x_i` (1-based).
    pub fn mul_var(&self, i: usize) -> SparsePolynomial {
        assert!(i >= 1 && i <= self.nvars, "variable index out of range");
        let mut out = SparsePolynomial::zero(self.nvars);
        for (e, &c) in &self.terms {
            let mut exp = e.clone();
            exp[i - 1] += 1;
            out.add_term(exp, c);
        }
        out
    }

    /// The divided difference `∂_i f = (f - s_i f) / (x_i - x_{i+1})`,
    /// 1-based `i < nvars`.
    pub fn divided_difference(&self, i: usize) -> SparsePolynomial {
        assert!(i >= 1 && i < self.nvars, "operator index out of range");
        let mut out = SparsePolynomial::zero(self.nvars);
        for (e, &c) in &self.terms {
            let p = e[i - 1];
            let q = e[i];
            if p == q {
                continue;
            }
            // ∂_i(x_i^p x_{i+1}^q) = ± Σ x_i^a x_{i+1}^{p+q-1-a}
            let (lo, hi, sign) = if p > q { (q, p, 1) } else { (p, q, -1) };
            for a in lo..hi {
                let mut exp = e.clone();
                exp[i - 1] = a;
                exp[i] = p + q - 1 - a;
                out.add_term(exp, c.checked_mul(sign).expect("coefficient overflow"));
            }
        }
        out
    }

    /// The isobaric divided difference `π_i f = ∂_i (x_i f)`.
    pub fn isobaric_divided_difference(&self, i: usize) -> SparsePolynomial {
        self.mul_var(i).divided_difference(i)
    }

    /// Applies `op_{i_1} op_{i_2} ... op_{i_k} f`, rightmost letter first.
    /// The word must be reduced.
    pub fn apply_operator_word(
        &self,
        word: &[usize],
        kind: OperatorKind,
    ) -> Result<SparsePolynomial, PolyError> {
        if word.iter().any(|&l| l == 0 || l >= self.nvars) {
            return Err(PolyError::IndexOutOfRange);
        }
        if !is_reduced(word, self.nvars) {
            return Err(PolyError::NonReducedWord);
        }
        let mut out = self.clone();
        for &i in word.iter().rev() {
            out = match kind {
                OperatorKind::Partial => out.divided_difference(i),
                OperatorKind::Isobaric => out.isobaric_divided_difference(i),
            };
        }
        Ok(out)
    }

    /// Sets variables beyond the first `l` to zero and truncates exponent
    /// vectors to length `l`.
    pub fn restrict_vars(&self, l: usize) -> SparsePolynomial {
        assert!(l <= self.nvars);
        let mut out = SparsePolynomial::zero(l);
        for (e, &c) in &self.terms {
            if e[l..].iter().all(|&x| x == 0) {
                out.add_term(e[..l].to_vec(), c);
            }
        }
        out
    }

    /// Zero-pads exponent vectors on the right to `nvars` variables.
    pub fn extend_vars(&self, nvars: usize) -> SparsePolynomial {
        assert!(nvars >= self.nvars);
        let mut out = SparsePolynomial::zero(nvars);
        for (e, &c) in &self.terms {
            let mut exp = e.clone();
            exp.resize(nvars, 0);
            out.add_term(exp, c);
        }
        out
    }
}

/// The Schur polynomial as the weight generating function of `SSYT_n(λ)`.
pub fn schur_via_ssyt(shape: &Partition, n: usize) -> SparsePolynomial {
    let mut out = SparsePolynomial::zero(n);
    for t in enumerate_ssyt(shape, n) {
        out.add_term(t.weight().parts().to_vec(), 1);
    }
    out
}

/// The Demazure character `κ_a`: isobaric divided differences along the
/// sorting word of `a`, applied to the dominant monomial.
pub fn demazure_character(a: &WeakComposition) -> SparsePolynomial {
    let (lambda, _, word) = crate::composition::sort_composition(a);
    let dominant = SparsePolynomial::monomial(lambda.parts().to_vec(), 1);
    dominant
        .apply_operator_word(&word, OperatorKind::Isobaric)
        .expect("sorting words are reduced")
}

/// The Schubert polynomial via divided differences:
/// `∂_{w^{-1} w_0}` applied to the staircase monomial.
pub fn schubert_bgg(w: &Permutation) -> SparsePolynomial {
    let n = w.n();
    let staircase = SparsePolynomial::monomial((0..n).rev().collect(), 1);
    let u = w.inverse().compose(&Permutation::longest(n));
    staircase
        .apply_operator_word(&u.code_word(), OperatorKind::Partial)
        .expect("code words are reduced")
}

/// The Schubert polynomial as the weight generating function of reduced
/// factorizations with cutoff of `w^{-1}`.
pub fn schubert_via_rfc(w: &Permutation) -> SparsePolynomial {
    let mut out = SparsePolynomial::zero(w.n());
    for r in enumerate_rfc(&w.inverse()) {
        out.add_term(r.weight().parts().to_vec(), 1);
    }
    out
}

/// The Stanley symmetric polynomial `F_w(x_1, ..., x_l)` as the weight
/// generating function of `RF^l(w^{-1})`.
pub fn stanley_polynomial(w: &Permutation, l: usize) -> SparsePolynomial {
    assert!(l >= 1, "at least one block is required");
    let mut out = SparsePolynomial::zero(l);
    for r in enumerate_rf(&w.inverse(), l) {
        out.add_term(r.weight().parts().to_vec(), 1);
    }
    out
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
                first = false;
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let monomial = render_monomial(e);
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{monomial}")?;
            } else {
                write!(f, "{mag}*{monomial}")?;
            }
        }
        Ok(())
    }
}

fn render_monomial(exponents: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, &e) in exponents.iter().enumerate() {
        if e == 1 {
            parts.push(alloc::format!("x{}", k + 1));
        } else if e > 1 {
            parts.push(alloc::format!("x{}^{}", k + 1, e));
        }
    }
    parts.join("*")
}
