//! The contravariant form on f-words, computed directly from
//! `<f_i x, y> = <x, e_i y>` and `<u_λ, u_λ> = 1`.

use std::collections::HashMap;

use twining_core::{BigInt, Error, GeneralizedCartanMatrix, Rational, Result, Weight};

use crate::words::{words_of_content, FWord};
use twining_core::RootVector;

/// `<w1, w2>` for f-words over the highest weight λ.
///
/// `e_i (f_{j_1} ⋯ f_{j_k} u_λ) = Σ_{t: j_t = i} <λ − Σ_{s>t} α_{j_s}, α_i^∨> ·
/// (word with letter t deleted)`; memoized over (suffix of `w1`, subsequence of `w2`).
pub fn shapovalov_pair(
    gcm: &GeneralizedCartanMatrix,
    lambda: &Weight,
    w1: &FWord,
    w2: &FWord,
) -> Result<Rational> {
    let n = gcm.rank();
    gcm.check_weight(lambda)?;
    for &i in w1.letters().iter().chain(w2.letters()) {
        gcm.check_index(i)?;
    }
    if w1.content(n) != w2.content(n) {
        return Ok(Rational::from_integer(0.into()));
    }
    let k = w2.len();
    if k > 63 {
        return Err(Error::TooLarge {
            content: w2.content(n).to_string(),
            words: "word longer than 63 letters".into(),
            cap: 63,
        });
    }
    let mut memo: HashMap<(usize, u64), BigInt> = HashMap::new();
    let full = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let value = pair_rec(gcm, lambda, w1.letters(), w2.letters(), 0, full, &mut memo);
    Ok(Rational::from_integer(value))
}

fn pair_rec(
    gcm: &GeneralizedCartanMatrix,
    lambda: &Weight,
    left: &[usize],
    right: &[usize],
    pos: usize,
    mask: u64,
    memo: &mut HashMap<(usize, u64), BigInt>,
) -> BigInt {
    if pos == left.len() {
        return BigInt::from(i64::from(mask == 0));
    }
    if let Some(v) = memo.get(&(pos, mask)) {
        return v.clone();
    }
    let i = left[pos];
    let mut total = BigInt::from(0);
    // walk t from the right so the weight shift Σ_{s>t} accumulates
    let mut shift: i64 = 0;
    for t in (0..right.len()).rev() {
        if mask & (1 << t) == 0 {
            continue;
        }
        if right[t] == i {
            let coeff = lambda.coords()[i] - shift;
            if coeff != 0 {
                let sub = pair_rec(gcm, lambda, left, right, pos + 1, mask & !(1 << t), memo);
                total += sub * coeff;
            }
        }
        shift += gcm.entry(i, right[t]);
    }
    memo.insert((pos, mask), total.clone());
    total
}

/// Words of the content (lexicographic) and their Gram matrix.
pub fn gram_matrix(
    gcm: &GeneralizedCartanMatrix,
    lambda: &Weight,
    content: &RootVector,
) -> Result<(Vec<FWord>, Vec<Vec<Rational>>)> {
    let words = words_of_content(content);
    let gram = words
        .iter()
        .map(|a| {
            words
                .iter()
                .map(|b| shapovalov_pair(gcm, lambda, a, b))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((words, gram))
}
