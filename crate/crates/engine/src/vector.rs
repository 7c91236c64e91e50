//! Vectors of `L(λ)` stored by their pairings against f-words, and subspaces
//! of one weight space kept in reduced row-echelon form.

use std::fmt;

use twining_core::linalg::RowEchelon;
use twining_core::{Error, Rational, Result, RootVector, Weight};

use crate::words::{word_count, word_rank, words_of_content, FWord};

/// A vector `v` of weight `λ − content`, recorded as `coords[k] = <w_k, v>`
/// where `w_k` runs over the f-words of that content in lexicographic order.
///
/// The form is nondegenerate on `L(λ)`, so these coordinates determine `v`
/// and the zero vector is the all-zero list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingVector {
    pub(crate) lambda: Weight,
    pub(crate) content: RootVector,
    pub(crate) coords: Vec<Rational>,
}

impl PairingVector {
    pub(crate) fn new(lambda: Weight, content: RootVector, coords: Vec<Rational>) -> Self {
        Self {
            lambda,
            content,
            coords,
        }
    }

    /// Builds a vector from raw coordinates, which must list the pairings
    /// with every word of `content` in lexicographic order.
    pub fn from_coords(lambda: Weight, content: RootVector, coords: Vec<Rational>) -> Result<Self> {
        let expected = word_count(content.coeffs()).unwrap_or(u64::MAX);
        if coords.len() as u64 != expected {
            return Err(Error::SizeMismatch {
                expected: expected as usize,
                got: coords.len(),
            });
        }
        Ok(Self::new(lambda, content, coords))
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn content(&self) -> &RootVector {
        &self.content
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords
            .iter()
            .all(|c| *c == Rational::from_integer(0.into()))
    }

    /// `<word, v>`; zero for words of another content.
    pub fn get(&self, word: &FWord) -> Rational {
        if word.content(self.content.len()) != self.content {
            return Rational::from_integer(0.into());
        }
        self.coords[word_rank(word, self.content.len())].clone()
    }

    /// `<Σ c_k w_k, v>` for a formal combination of words.
    pub fn pair_with_words(&self, combination: &[(Rational, FWord)]) -> Rational {
        combination
            .iter()
            .map(|(c, w)| c * self.get(w))
            .fold(Rational::from_integer(0.into()), |a, b| a + b)
    }

    /// Nonzero coordinates keyed by word, for display and debugging.
    pub fn nonzero_terms(&self) -> Vec<(FWord, Rational)> {
        words_of_content(&self.content)
            .into_iter()
            .zip(&self.coords)
            .filter(|(_, c)| **c != Rational::from_integer(0.into()))
            .map(|(w, c)| (w, c.clone()))
            .collect()
    }
}

impl fmt::Display for PairingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "content {}:", self.content)?;
        for (w, c) in self.nonzero_terms() {
            write!(f, " {w}={c}")?;
        }
        Ok(())
    }
}

/// A subspace of `L(λ)_{λ−content}` in reduced row-echelon form over the
/// lexicographic order of words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub(crate) lambda: Weight,
    pub(crate) content: RootVector,
    pub(crate) echelon: RowEchelon,
}

impl Subspace {
    pub(crate) fn empty(lambda: Weight, content: RootVector, width: usize) -> Self {
        Self {
            lambda,
            content,
            echelon: RowEchelon::new(width),
        }
    }

    pub fn content(&self) -> &RootVector {
        &self.content
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn echelon(&self) -> &RowEchelon {
        &self.echelon
    }

    pub fn basis(&self) -> Vec<PairingVector> {
        self.echelon
            .rows()
            .iter()
            .map(|r| PairingVector::new(self.lambda.clone(), self.content.clone(), r.clone()))
            .collect()
    }

    /// Adds a vector of the same content; returns whether the dimension grew.
    pub fn insert(&mut self, v: PairingVector) -> bool {
        debug_assert_eq!(v.content, self.content);
        self.echelon.insert(v.coords)
    }

    pub fn contains(&self, v: &PairingVector) -> bool {
        v.content == self.content && self.echelon.contains(&v.coords)
    }
}
