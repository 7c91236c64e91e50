//! Characters on the folded side: Demazure operators and Demazure characters,
//! the Freudenthal multiplicity recursion, and the push-forward along `P*_ω`.

use std::collections::BTreeMap;

use twining_core::{
    BigInt, CharacterPolynomial, Error, GeneralizedCartanMatrix, Result, RootVector, Weight,
    WeylGroup, WeylWord,
};
use twining_folding::FoldingData;

/// Image of a single monomial `e(μ)` under `D_i`.
fn demazure_monomial(
    gcm: &GeneralizedCartanMatrix,
    mu: &Weight,
    coeff: &BigInt,
    i: usize,
    out: &mut CharacterPolynomial,
) {
    let m = gcm.pairing(mu, i);
    let alpha = gcm.simple_root(i);
    if m >= 0 {
        let mut w = mu.clone();
        for _ in 0..=m {
            out.add_term(w.clone(), coeff.clone());
            w = &w - &alpha;
        }
    } else if m <= -2 {
        let mut w = mu.clone();
        for _ in 1..=(-m - 1) {
            w = &w + &alpha;
            out.add_term(w.clone(), -coeff);
        }
    }
}

/// The Demazure operator `D_i`, applied monomial by monomial:
/// `m ≥ 0 ↦ Σ_{k=0}^{m} e(μ−kα_i)`, `m = −1 ↦ 0`,
/// `m ≤ −2 ↦ −Σ_{k=1}^{−m−1} e(μ+kα_i)`, where `m = <μ, α_i^∨>`.
pub fn demazure_op(
    gcm: &GeneralizedCartanMatrix,
    f: &CharacterPolynomial,
    i: usize,
) -> Result<CharacterPolynomial> {
    gcm.check_index(i)?;
    if f.rank() != gcm.rank() {
        return Err(Error::SizeMismatch {
            expected: gcm.rank(),
            got: f.rank(),
        });
    }
    let mut out = CharacterPolynomial::zero(gcm.rank());
    for (mu, c) in f.terms() {
        demazure_monomial(gcm, mu, c, i, &mut out);
    }
    Ok(out)
}

/// Applies `D_{i_1} ⋯ D_{i_k}` to `f` (rightmost letter first), without any
/// canonicalization of the word.
pub fn apply_word(
    gcm: &GeneralizedCartanMatrix,
    f: &CharacterPolynomial,
    word: &WeylWord,
) -> Result<CharacterPolynomial> {
    word.letters()
        .iter()
        .rev()
        .try_fold(f.clone(), |acc, &i| demazure_op(gcm, &acc, i))
}

/// `ch L_w(λ) = D_{i_1} ⋯ D_{i_k} e(λ)` for a reduced word of `w`.
///
/// In finite type the word is first replaced by the canonical reduced word of
/// its element. Otherwise it is used as given and must already be reduced.
pub fn demazure_character(
    gcm: &GeneralizedCartanMatrix,
    lambda: &Weight,
    word: &WeylWord,
) -> Result<CharacterPolynomial> {
    gcm.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    for &i in word.letters() {
        gcm.check_index(i)?;
    }
    let word = if gcm.is_finite_type() {
        WeylGroup::new(gcm)?.canonicalize(word)?
    } else {
        word.clone()
    };
    apply_word(gcm, &CharacterPolynomial::monomial(lambda.clone()), &word)
}

/// Full character of `L(λ)` by Freudenthal's recursion
/// `((λ+ρ,λ+ρ) − (μ+ρ,μ+ρ)) mult(μ) = 2 Σ_{α>0} Σ_{k≥1} (μ+kα, α) mult(μ+kα)`,
/// run over contents `β = λ − μ` in order of height.
pub fn freudenthal_multiplicities(
    gcm: &GeneralizedCartanMatrix,
    lambda: &Weight,
) -> Result<BTreeMap<RootVector, BigInt>> {
    gcm.check_weight(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    let roots = gcm.positive_roots()?;
    let n = gcm.rank();
    let rho = Weight::rho(n);
    let shifted = lambda + &rho;

    let mut mult: BTreeMap<RootVector, BigInt> = BTreeMap::new();
    mult.insert(RootVector::zero(n), BigInt::from(1));
    let mut layer = vec![RootVector::zero(n)];
    while !layer.is_empty() {
        let mut candidates: Vec<RootVector> = layer
            .iter()
            .flat_map(|b| (0..n).map(move |i| b.with_added(i, 1)))
            .collect();
        candidates.sort();
        candidates.dedup();
        let mut next = Vec::new();
        for beta in candidates {
            // 2(λ+ρ, β) − (β, β)
            let denom = 2 * gcm.form_weight_root(&shifted, &beta) - gcm.form_roots(&beta, &beta);
            let mut rhs = BigInt::from(0);
            for alpha in &roots {
                let mut lower = &beta - alpha;
                while lower.is_nonnegative() {
                    if let Some(m) = mult.get(&lower) {
                        // (μ + kα, α) with μ = λ − β
                        let mu_k =
                            gcm.form_weight_root(lambda, alpha) - gcm.form_roots(&lower, alpha);
                        rhs += m * BigInt::from(mu_k);
                    }
                    lower = &lower - alpha;
                }
            }
            rhs *= 2;
            let value = if denom == 0 {
                if rhs != BigInt::from(0) {
                    return Err(Error::Internal(format!(
                        "Freudenthal recursion has zero denominator at content {beta}"
                    )));
                }
                BigInt::from(0)
            } else {
                let d = BigInt::from(denom);
                if &rhs % &d != BigInt::from(0) {
                    return Err(Error::Internal(format!(
                        "non-integral multiplicity {rhs}/{d} at content {beta}"
                    )));
                }
                rhs / d
            };
            if value < BigInt::from(0) {
                return Err(Error::Internal(format!(
                    "negative multiplicity at content {beta}"
                )));
            }
            if value > BigInt::from(0) {
                mult.insert(beta.clone(), value);
                next.push(beta);
            }
        }
        layer = next;
    }
    Ok(mult)
}

pub fn freudenthal_character(
    gcm: &GeneralizedCartanMatrix,
    lambda: &Weight,
) -> Result<CharacterPolynomial> {
    let mult = freudenthal_multiplicities(gcm, lambda)?;
    let mut out = CharacterPolynomial::zero(gcm.rank());
    for (beta, m) in mult {
        out.add_term(lambda - &gcm.root_to_weight(&beta), m);
    }
    Ok(out)
}

/// Pushes a character over Â forward along `P*_ω`; coefficients unchanged.
pub fn map_character(
    folding: &FoldingData,
    f: &CharacterPolynomial,
) -> Result<CharacterPolynomial> {
    let small = folding.folded().rank();
    if f.rank() != small {
        return Err(Error::SizeMismatch {
            expected: small,
            got: f.rank(),
        });
    }
    let mut out = CharacterPolynomial::zero(folding.source().rank());
    for (mu, c) in f.terms() {
        out.add_term(folding.pstar(mu)?, c.clone());
    }
    Ok(out)
}

/// One `c*e[m1,...,mn]` line per term, in descending lexicographic order.
pub fn canonical_serialize(f: &CharacterPolynomial) -> String {
    f.canonical_text()
}

#[cfg(test)]
mod tests {
    use super::*;
    use twining_core::catalog::cartan_matrix;
    use twining_folding::{fold, validate_automorphism};

    fn e(v: &[i64]) -> CharacterPolynomial {
        CharacterPolynomial::monomial(Weight::new(v.to_vec()))
    }

    #[test]
    fn demazure_op_branches() {
        let a2 = cartan_matrix("A2").unwrap();
        assert_eq!(
            demazure_op(&a2, &e(&[1, 1]), 0).unwrap(),
            &e(&[1, 1]) + &e(&[-1, 2])
        );
        assert!(demazure_op(&a2, &e(&[-1, 5]), 0).unwrap().is_empty());
        let a1 = cartan_matrix("A1").unwrap();
        assert_eq!(demazure_op(&a1, &e(&[-2]), 0).unwrap(), -&e(&[0]));
        // m = -3: −(e(μ+α) + e(μ+2α))
        assert_eq!(
            demazure_op(&a1, &e(&[-3]), 0).unwrap(),
            -&(&e(&[-1]) + &e(&[1]))
        );
    }

    #[test]
    fn demazure_characters_a2() {
        let a2 = cartan_matrix("A2").unwrap();
        let rho = Weight::rho(2);
        assert_eq!(
            demazure_character(&a2, &rho, &WeylWord::new(vec![0])).unwrap(),
            &e(&[1, 1]) + &e(&[-1, 2])
        );
        let full = demazure_character(&a2, &rho, &WeylWord::new(vec![0, 1, 0])).unwrap();
        assert_eq!(full.coefficient_sum(), BigInt::from(8));
        assert_eq!(
            demazure_character(&a2, &rho, &WeylWord::identity()).unwrap(),
            e(&[1, 1])
        );
        // non-reduced input is canonicalized: s0 s0 = e
        assert_eq!(
            demazure_character(&a2, &rho, &WeylWord::new(vec![0, 0])).unwrap(),
            e(&[1, 1])
        );
        assert!(matches!(
            demazure_character(&a2, &Weight::new(vec![-1, 0]), &WeylWord::identity()),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn freudenthal_a2() {
        let a2 = cartan_matrix("A2").unwrap();
        let fund = freudenthal_character(&a2, &Weight::fundamental(2, 0)).unwrap();
        assert_eq!(fund.len(), 3);
        assert!(fund.terms().values().all(|c| *c == BigInt::from(1)));
        let adj = freudenthal_character(&a2, &Weight::rho(2)).unwrap();
        assert_eq!(adj.coefficient(&Weight::zero(2)), BigInt::from(2));
        assert_eq!(adj.coefficient_sum(), BigInt::from(8));
        assert_eq!(
            freudenthal_character(&a2, &Weight::zero(2)).unwrap(),
            e(&[0, 0])
        );
        let aff = GeneralizedCartanMatrix::new(vec![vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(matches!(
            freudenthal_character(&aff, &Weight::zero(2)),
            Err(Error::NotFiniteType)
        ));
    }

    #[test]
    fn freudenthal_matches_weyl_dimension() {
        for (label, lambda) in [
            ("G2", vec![1, 1]),
            ("B2", vec![2, 1]),
            ("C3", vec![1, 0, 1]),
            ("D4", vec![0, 1, 0, 0]),
            ("A4", vec![0, 1, 1, 0]),
        ] {
            let a = cartan_matrix(label).unwrap();
            let lambda = Weight::new(lambda);
            let ch = freudenthal_character(&a, &lambda).unwrap();
            assert_eq!(
                ch.coefficient_sum(),
                a.weyl_dimension(&lambda).unwrap(),
                "{label}"
            );
        }
    }

    #[test]
    fn map_and_serialize() {
        let a2 = cartan_matrix("A2").unwrap();
        let (omega, _) = validate_automorphism(&a2, vec![1, 0]).unwrap();
        let fd = fold(&a2, &omega).unwrap();
        let f = &e(&[1]) + &e(&[-1]);
        let mapped = map_character(&fd, &f).unwrap();
        assert_eq!(mapped, &e(&[1, 1]) + &e(&[-1, -1]));
        assert!(map_character(&fd, &CharacterPolynomial::zero(1))
            .unwrap()
            .is_empty());
        assert_eq!(canonical_serialize(&mapped), "1*e[1,1]\n1*e[-1,-1]");
        assert!(matches!(
            map_character(&fd, &e(&[1, 1])),
            Err(Error::SizeMismatch { .. })
        ));
    }
}
