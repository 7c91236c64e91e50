//! Finitely supported integer combinations `Σ c_χ e(χ)` of weights.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::{Error, Result, Weight};

/// No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CharacterPolynomial {
    rank: usize,
    terms: BTreeMap<Weight, BigInt>,
}

impl CharacterPolynomial {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(weight: Weight) -> Self {
        let mut p = Self::zero(weight.len());
        p.add_term(weight, BigInt::from(1));
        p
    }

    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Weight, BigInt)>,
    {
        let mut p = Self::zero(rank);
        for (w, c) in terms {
            if w.len() != rank {
                return Err(Error::SizeMismatch {
                    expected: rank,
                    got: w.len(),
                });
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    /// Rank of the Cartan matrix whose weights index the terms.
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_term(&mut self, weight: Weight, coeff: BigInt) {
        debug_assert_eq!(weight.len(), self.rank);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(weight);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn coefficient(&self, weight: &Weight) -> BigInt {
        self.terms.get(weight).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> &BTreeMap<Weight, BigInt> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        let mut p = Self::zero(self.rank);
        for (w, c) in &self.terms {
            p.add_term(w.clone(), c * k);
        }
        p
    }

    /// Applies `f` to every exponent; collisions are summed.
    pub fn map_exponents(&self, rank: usize, f: impl Fn(&Weight) -> Weight) -> Self {
        let mut p = Self::zero(rank);
        for (w, c) in &self.terms {
            p.add_term(f(w), c.clone());
        }
        p
    }

    /// Terms in descending lexicographic order of exponents.
    pub fn sorted_terms(&self) -> impl Iterator<Item = (&Weight, &BigInt)> {
        self.terms.iter().rev()
    }

    /// One `c*e[m1,...,mn]` line per term, descending lexicographic order.
    pub fn canonical_text(&self) -> String {
        self.sorted_terms()
            .map(|(w, c)| {
                let coords: Vec<String> = w.coords().iter().map(i64::to_string).collect();
                format!("{c}*e[{}]", coords.join(","))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Terms that differ between `self` and `other`: `(weight, ours, theirs)`.
    pub fn differences(&self, other: &Self) -> Vec<(Weight, BigInt, BigInt)> {
        let mut keys: Vec<&Weight> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter()
            .rev()
            .filter_map(|w| {
                let (a, b) = (self.coefficient(w), other.coefficient(w));
                (a != b).then(|| (w.clone(), a, b))
            })
            .collect()
    }
}

impl fmt::Display for CharacterPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_text())
    }
}

impl Add<&CharacterPolynomial> for &CharacterPolynomial {
    type Output = CharacterPolynomial;
    fn add(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        let mut p = self.clone();
        for (w, c) in &rhs.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }
}

impl Neg for &CharacterPolynomial {
    type Output = CharacterPolynomial;
    fn neg(self) -> CharacterPolynomial {
        self.scale(&BigInt::from(-1))
    }
}

impl Sub<&CharacterPolynomial> for &CharacterPolynomial {
    type Output = CharacterPolynomial;
    fn sub(self, rhs: &CharacterPolynomial) -> CharacterPolynomial {
        self + &(-rhs)
    }
}
