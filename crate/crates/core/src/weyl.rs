//! Weyl group elements as words in simple reflections, with integer matrices
//! on fundamental-weight coordinates as the canonical form.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::linalg;
use crate::{
    DiagramAutomorphism, Error, GeneralizedCartanMatrix, Rational, Result, RootVector, Weight,
};

/// A word `s_{i_1} ⋯ s_{i_k}`; the empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylWord(Vec<usize>);

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    pub fn identity() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &WeylWord) -> WeylWord {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        WeylWord(letters)
    }

    pub fn reversed(&self) -> WeylWord {
        WeylWord(self.0.iter().rev().copied().collect())
    }
}

impl From<Vec<usize>> for WeylWord {
    fn from(v: Vec<usize>) -> Self {
        Self(v)
    }
}

/// Comma-separated letters, e.g. `1,2,1`; the identity prints as the empty string.
impl fmt::Display for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

impl FromStr for WeylWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(WeylWord::identity());
        }
        s.split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("bad Weyl letter {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(WeylWord)
    }
}

/// The action of a Weyl group element on fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylElement {
    matrix: Vec<Vec<i64>>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        Self {
            matrix: (0..n)
                .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
                .collect(),
        }
    }

    /// Matrix of `s_i`: `λ ↦ λ − m_i α_i`.
    pub fn simple_reflection(gcm: &GeneralizedCartanMatrix, i: usize) -> Self {
        let n = gcm.rank();
        let mut m = Self::identity(n).matrix;
        for (k, row) in m.iter_mut().enumerate() {
            row[i] -= gcm.entry(k, i);
        }
        Self { matrix: m }
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank())
    }

    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            matrix: linalg::mul_int(&self.matrix, &other.matrix),
        }
    }

    pub fn apply(&self, lambda: &Weight) -> Weight {
        Weight::new(
            self.matrix
                .iter()
                .map(|row| row.iter().zip(lambda.coords()).map(|(a, m)| a * m).sum())
                .collect(),
        )
    }

    pub fn commutes_with(&self, other: &[Vec<i64>]) -> bool {
        linalg::mul_int(&self.matrix, other) == linalg::mul_int(other, &self.matrix)
    }
}

/// `element_of(w ++ w') = element_of(w) · element_of(w')`.
pub fn element_of(gcm: &GeneralizedCartanMatrix, word: &WeylWord) -> Result<WeylElement> {
    let mut g = WeylElement::identity(gcm.rank());
    for &i in word.letters() {
        gcm.check_index(i)?;
        g = g.compose(&WeylElement::simple_reflection(gcm, i));
    }
    Ok(g)
}

/// `w` commutes with ω* as matrices on weight coordinates.
pub fn is_in_w_tilde(
    gcm: &GeneralizedCartanMatrix,
    word: &WeylWord,
    omega: &DiagramAutomorphism,
) -> Result<bool> {
    if omega.rank() != gcm.rank() {
        return Err(Error::SizeMismatch {
            expected: gcm.rank(),
            got: omega.rank(),
        });
    }
    Ok(element_of(gcm, word)?.commutes_with(&omega.weight_matrix()))
}

/// Length-aware operations for a finite-type Weyl group.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    gcm: GeneralizedCartanMatrix,
    inverse: Vec<Vec<Rational>>,
    positive_roots: Vec<RootVector>,
}

impl WeylGroup {
    pub fn new(gcm: &GeneralizedCartanMatrix) -> Result<Self> {
        let positive_roots = gcm.positive_roots()?;
        let inverse = linalg::inverse(gcm.entries()).ok_or(Error::SingularCartanMatrix)?;
        Ok(Self {
            gcm: gcm.clone(),
            inverse,
            positive_roots,
        })
    }

    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        &self.gcm
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    pub fn element_of(&self, word: &WeylWord) -> Result<WeylElement> {
        element_of(&self.gcm, word)
    }

    /// The action on root coordinates, `A^{-1} M A`.
    pub fn root_matrix(&self, g: &WeylElement) -> Result<Vec<Vec<i64>>> {
        let n = self.gcm.rank();
        let ma = linalg::mul_int(g.matrix(), self.gcm.entries());
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                let x = (0..n).fold(Rational::zero(), |acc, k| {
                    acc + &self.inverse[i][k] * Rational::from_integer(ma[k][j].into())
                });
                if !x.is_integer() {
                    return Err(Error::Internal("non-integral root action".into()));
                }
                out[i][j] = i64::try_from(x.to_integer())
                    .map_err(|_| Error::Internal("root action overflow".into()))?;
            }
        }
        Ok(out)
    }

    /// Number of positive roots sent to negative roots.
    pub fn element_length(&self, g: &WeylElement) -> Result<usize> {
        let r = self.root_matrix(g)?;
        Ok(self
            .positive_roots
            .iter()
            .filter(|beta| sends_negative(&r, beta.coeffs()))
            .count())
    }

    pub fn length(&self, word: &WeylWord) -> Result<usize> {
        self.element_length(&self.element_of(word)?)
    }

    /// Indices `i` with `g(α_i) < 0`, ascending.
    pub fn right_descents(&self, g: &WeylElement) -> Result<Vec<usize>> {
        let r = self.root_matrix(g)?;
        let n = self.gcm.rank();
        Ok((0..n).filter(|&i| (0..n).any(|k| r[k][i] < 0)).collect())
    }

    /// Canonical reduced word: repeatedly peel the smallest right descent.
    pub fn reduced_word(&self, g: &WeylElement) -> Result<WeylWord> {
        let mut g = g.clone();
        let mut peeled = Vec::new();
        loop {
            let descents = self.right_descents(&g)?;
            let Some(&i) = descents.first() else { break };
            peeled.push(i);
            g = g.compose(&WeylElement::simple_reflection(&self.gcm, i));
            if peeled.len() > self.positive_roots.len() {
                return Err(Error::Internal("descent peeling did not terminate".into()));
            }
        }
        if !g.is_identity() {
            return Err(Error::Internal(
                "element without descents is not the identity".into(),
            ));
        }
        peeled.reverse();
        Ok(WeylWord(peeled))
    }

    pub fn canonicalize(&self, word: &WeylWord) -> Result<WeylWord> {
        self.reduced_word(&self.element_of(word)?)
    }

    pub fn is_reduced(&self, word: &WeylWord) -> Result<bool> {
        Ok(self.length(word)? == word.len())
    }

    /// Climb by smallest ascents until none is left, then canonicalize.
    pub fn longest_element(&self) -> Result<WeylWord> {
        let n = self.gcm.rank();
        let mut g = WeylElement::identity(n);
        loop {
            let descents = self.right_descents(&g)?;
            let Some(i) = (0..n).find(|i| !descents.contains(i)) else {
                break;
            };
            g = g.compose(&WeylElement::simple_reflection(&self.gcm, i));
        }
        self.reduced_word(&g)
    }

    /// All group elements by closure, shortest first; fails past `cap` elements.
    pub fn elements(&self, cap: usize) -> Result<Vec<WeylElement>> {
        let n = self.gcm.rank();
        let gens: Vec<WeylElement> = (0..n)
            .map(|i| WeylElement::simple_reflection(&self.gcm, i))
            .collect();
        let id = WeylElement::identity(n);
        let mut seen: HashSet<WeylElement> = HashSet::from([id.clone()]);
        let mut order = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(g) = queue.pop_front() {
            for s in &gens {
                let h = g.compose(s);
                if seen.insert(h.clone()) {
                    if seen.len() > cap {
                        return Err(Error::TooLarge {
                            content: "Weyl group".into(),
                            words: format!(">{cap}"),
                            cap: cap as u64,
                        });
                    }
                    order.push(h.clone());
                    queue.push_back(h);
                }
            }
        }
        Ok(order)
    }

    /// Canonical reduced words of all elements, sorted by length then letters.
    pub fn all_reduced_words(&self, cap: usize) -> Result<Vec<WeylWord>> {
        let mut words = self
            .elements(cap)?
            .iter()
            .map(|g| self.reduced_word(g))
            .collect::<Result<Vec<_>>>()?;
        words.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(words)
    }
}

fn sends_negative(root_matrix: &[Vec<i64>], beta: &[i64]) -> bool {
    root_matrix
        .iter()
        .map(|row| row.iter().zip(beta).map(|(a, b)| a * b).sum::<i64>())
        .any(|x| x < 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::cartan_matrix;
    use proptest::prelude::*;

    fn w(v: &[usize]) -> WeylWord {
        WeylWord::new(v.to_vec())
    }

    #[test]
    fn s_squared_is_identity() {
        let a2 = cartan_matrix("A2").unwrap();
        assert!(element_of(&a2, &w(&[0, 0])).unwrap().is_identity());
    }

    #[test]
    fn lengths_a2() {
        let a2 = cartan_matrix("A2").unwrap();
        let wg = WeylGroup::new(&a2).unwrap();
        assert_eq!(wg.length(&w(&[0, 1, 0])).unwrap(), 3);
        assert_eq!(wg.length(&w(&[])).unwrap(), 0);
        assert_eq!(wg.length(&w(&[0, 1, 0, 0, 1])).unwrap(), 1);
    }

    /// Brute force in the 6-element group: s1 s2 s1 s1 s2 = s1.
    #[test]
    fn reduced_word_matches_brute_force() {
        let a2 = cartan_matrix("A2").unwrap();
        let wg = WeylGroup::new(&a2).unwrap();
        let target = element_of(&a2, &w(&[0, 1, 0, 0, 1])).unwrap();
        let mut brute: Option<WeylWord> = None;
        'outer: for len in 0..=3usize {
            for code in 0..(1usize << len) {
                let cand: Vec<usize> = (0..len).map(|k| (code >> k) & 1).collect();
                if element_of(&a2, &w(&cand)).unwrap() == target {
                    brute = Some(w(&cand));
                    break 'outer;
                }
            }
        }
        assert_eq!(brute, Some(w(&[0])));
        assert_eq!(wg.reduced_word(&target).unwrap(), w(&[0]));
    }

    #[test]
    fn longest_elements() {
        let a2 = cartan_matrix("A2").unwrap();
        assert_eq!(
            WeylGroup::new(&a2).unwrap().longest_element().unwrap(),
            w(&[0, 1, 0])
        );
        let a1 = cartan_matrix("A1").unwrap();
        assert_eq!(
            WeylGroup::new(&a1).unwrap().longest_element().unwrap(),
            w(&[0])
        );
        let b2 = cartan_matrix("B2").unwrap();
        assert_eq!(
            WeylGroup::new(&b2)
                .unwrap()
                .longest_element()
                .unwrap()
                .len(),
            4
        );
        let d4 = cartan_matrix("D4").unwrap();
        assert_eq!(
            WeylGroup::new(&d4)
                .unwrap()
                .longest_element()
                .unwrap()
                .len(),
            12
        );
    }

    #[test]
    fn group_orders() {
        for (label, order) in [
            ("A2", 6),
            ("B2", 8),
            ("G2", 12),
            ("A3", 24),
            ("C3", 48),
            ("A4", 120),
            ("D4", 192),
        ] {
            let wg = WeylGroup::new(&cartan_matrix(label).unwrap()).unwrap();
            assert_eq!(wg.elements(1000).unwrap().len(), order, "{label}");
        }
    }

    #[test]
    fn w_tilde_membership_a2_flip() {
        let a2 = cartan_matrix("A2").unwrap();
        let flip = DiagramAutomorphism::new(&a2, vec![1, 0]).unwrap();
        assert!(is_in_w_tilde(&a2, &w(&[0, 1, 0]), &flip).unwrap());
        assert!(!is_in_w_tilde(&a2, &w(&[0]), &flip).unwrap());
        assert!(is_in_w_tilde(&a2, &w(&[]), &flip).unwrap());
    }

    #[test]
    fn affine_rejected_for_lengths() {
        let aff = GeneralizedCartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(matches!(WeylGroup::new(&aff), Err(Error::NotFiniteType)));
        // element_of still works without finite type
        assert!(element_of(&aff, &w(&[0, 0])).unwrap().is_identity());
    }

    #[test]
    fn word_parsing() {
        assert_eq!("1,2,1".parse::<WeylWord>().unwrap(), w(&[1, 2, 1]));
        assert_eq!("".parse::<WeylWord>().unwrap(), w(&[]));
        assert!("1,x".parse::<WeylWord>().is_err());
        assert_eq!(w(&[3, 0]).to_string(), "3,0");
    }

    #[test]
    fn w_tilde_closed_under_products_and_inverses() {
        let d4 = cartan_matrix("D4").unwrap();
        let tri = DiagramAutomorphism::new(&d4, vec![2, 1, 3, 0]).unwrap();
        let wg = WeylGroup::new(&d4).unwrap();
        let om = tri.weight_matrix();
        let fixed: Vec<WeylElement> = wg
            .elements(1000)
            .unwrap()
            .into_iter()
            .filter(|g| g.commutes_with(&om))
            .collect();
        assert_eq!(fixed.len(), 12);
        for g in &fixed {
            let inv_word = wg.reduced_word(g).unwrap().reversed();
            assert!(is_in_w_tilde(&d4, &inv_word, &tri).unwrap());
            for h in &fixed {
                assert!(g.compose(h).commutes_with(&om));
            }
        }
    }

    proptest! {
        #[test]
        fn element_of_is_homomorphism(a in proptest::collection::vec(0usize..3, 0..7), b in proptest::collection::vec(0usize..3, 0..7)) {
            let c3 = cartan_matrix("C3").unwrap();
            let (a, b) = (w(&a), w(&b));
            prop_assert_eq!(
                element_of(&c3, &a.concat(&b)).unwrap(),
                element_of(&c3, &a).unwrap().compose(&element_of(&c3, &b).unwrap())
            );
        }

        #[test]
        fn reduced_words_are_minimal_and_stable(letters in proptest::collection::vec(0usize..4, 0..10)) {
            let d4 = cartan_matrix("D4").unwrap();
            let wg = WeylGroup::new(&d4).unwrap();
            let g = wg.element_of(&w(&letters)).unwrap();
            let red = wg.reduced_word(&g).unwrap();
            prop_assert_eq!(wg.element_of(&red).unwrap(), g.clone());
            prop_assert_eq!(red.len(), wg.element_length(&g).unwrap());
            prop_assert!(red.len() <= letters.len());
            prop_assert_eq!(wg.canonicalize(&red).unwrap(), red);
        }
    }
}
