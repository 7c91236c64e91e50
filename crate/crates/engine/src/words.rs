//! f-words `f_{i_1} ⋯ f_{i_k} u_λ` and their lexicographic indexing within a
//! fixed content.
//!
//! For a content γ the words of content γ are listed in lexicographic order,
//! so the words starting with letter `j` form one contiguous block whose
//! suffixes are exactly the words of content `γ − α_j`, again in order.

use std::fmt;

use twining_core::RootVector;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FWord(Vec<usize>);

impl FWord {
    pub fn new(letters: Vec<usize>) -> Self {
        Self(letters)
    }

    /// The empty word, standing for `u_λ`.
    pub fn empty() -> Self {
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

    pub fn content(&self, rank: usize) -> RootVector {
        let mut c = vec![0i64; rank];
        for &i in &self.0 {
            c[i] += 1;
        }
        RootVector::new(c)
    }

    /// Letterwise image under a permutation of the index set.
    pub fn relabel(&self, perm: &[usize]) -> FWord {
        FWord(self.0.iter().map(|&i| perm[i]).collect())
    }
}

impl fmt::Display for FWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, ")")
    }
}

/// Number of words of the given content (a multinomial coefficient), or `None`
/// if it does not fit in a `u64`.
pub fn word_count(content: &[i64]) -> Option<u64> {
    let mut total: u128 = 1;
    let mut placed: u128 = 0;
    for &k in content {
        if k < 0 {
            return Some(0);
        }
        for j in 1..=k as u128 {
            placed += 1;
            total = total.checked_mul(placed)? / j;
        }
    }
    u64::try_from(total).ok()
}

/// All words of a content in lexicographic order.
pub fn words_of_content(content: &RootVector) -> Vec<FWord> {
    fn rec(rem: &mut Vec<i64>, prefix: &mut Vec<usize>, out: &mut Vec<FWord>) {
        if rem.iter().all(|&k| k == 0) {
            out.push(FWord(prefix.clone()));
            return;
        }
        for j in 0..rem.len() {
            if rem[j] > 0 {
                rem[j] -= 1;
                prefix.push(j);
                rec(rem, prefix, out);
                prefix.pop();
                rem[j] += 1;
            }
        }
    }
    let mut out = Vec::new();
    if content.is_nonnegative() {
        rec(&mut content.coeffs().to_vec(), &mut Vec::new(), &mut out);
    }
    out
}

/// Position of `word` in the lexicographic list of its content.
pub fn word_rank(word: &FWord, rank: usize) -> usize {
    let mut rem = word.content(rank).coeffs().to_vec();
    let mut left: u64 = word_count(&rem).expect("word count fits in u64");
    let mut total: u64 = word.len() as u64;
    let mut index: u64 = 0;
    for &letter in word.letters() {
        for j in 0..letter {
            if rem[j] > 0 {
                index += left * rem[j] as u64 / total;
            }
        }
        left = left * rem[letter] as u64 / total;
        rem[letter] -= 1;
        total -= 1;
    }
    index as usize
}
