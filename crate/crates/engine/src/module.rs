//! The irreducible module `L(λ)` in pairing coordinates: generator actions,
//! weight spaces, extremal vectors, Demazure subspaces and twining traces.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use twining_core::{
    is_in_w_tilde, BigInt, CharacterPolynomial, DiagramAutomorphism, Error,
    GeneralizedCartanMatrix, Rational, Result, RootVector, Weight, WeylGroup, WeylWord,
};

use crate::vector::{PairingVector, Subspace};
use crate::words::{word_count, FWord};

/// Largest number of words allowed in any content the module visits.
pub const DEFAULT_WORD_CAP: u64 = 100_000;

fn zero() -> Rational {
    Rational::from_integer(0.into())
}

/// `(start, len)` of the block of words beginning with each letter.
fn blocks(content: &[i64]) -> Vec<(usize, usize)> {
    let total = word_count(content).expect("content already checked against the cap");
    let height: i64 = content.iter().sum();
    let mut start = 0usize;
    content
        .iter()
        .map(|&k| {
            let len = if height == 0 || k <= 0 {
                0
            } else {
                (total as u128 * k as u128 / height as u128) as usize
            };
            let b = (start, len);
            start += len;
            b
        })
        .collect()
}

/// Appends the coordinates of `f_i v` (content `γ + α_i`) to `out`, where
/// `v` has content `γ`:
/// `<(j, w'), f_i v> = δ_ij <λ − γ, α_i^∨> <w', v> + <w', f_i e_j v>`.
fn f_rec(
    gcm: &GeneralizedCartanMatrix,
    lambda: &[i64],
    i: usize,
    content: &mut Vec<i64>,
    v: &[Rational],
    out: &mut Vec<Rational>,
) {
    let n = content.len();
    content[i] += 1;
    let target = word_count(content).expect("content already checked against the cap") as usize;
    content[i] -= 1;
    if v.iter().all(|x| *x == zero()) {
        out.extend(std::iter::repeat_with(zero).take(target));
        return;
    }
    let h: i64 = lambda[i] - (0..n).map(|k| gcm.entry(i, k) * content[k]).sum::<i64>();
    let own = blocks(content);
    for j in 0..n {
        let has_j = content[j] > 0;
        if j != i && !has_j {
            continue;
        }
        let start = out.len();
        if has_j {
            let (s, l) = own[j];
            content[j] -= 1;
            f_rec(gcm, lambda, i, content, &v[s..s + l], out);
            content[j] += 1;
        } else {
            out.extend(std::iter::repeat_with(zero).take(v.len()));
        }
        if j == i && h != 0 {
            let h = Rational::from_integer(h.into());
            for (o, x) in out[start..].iter_mut().zip(v) {
                if *x != zero() {
                    *o += &h * x;
                }
            }
        }
    }
}

/// Appends the coordinates of `τ v`: `<(j, w'), τ v> = <w', τ e_{ω(j)} v>`.
fn tau_rec(perm: &[usize], content: &mut Vec<i64>, v: &[Rational], out: &mut Vec<Rational>) {
    if content.iter().all(|&k| k == 0) {
        out.push(v[0].clone());
        return;
    }
    let own = blocks(content);
    for &src in perm {
        if content[src] == 0 {
            continue;
        }
        let (s, l) = own[src];
        content[src] -= 1;
        tau_rec(perm, content, &v[s..s + l], out);
        content[src] += 1;
    }
}

/// `L(λ)` for a dominant integral λ over a finite-type GCM.
#[derive(Clone, Debug)]
pub struct HighestWeightModule {
    gcm: GeneralizedCartanMatrix,
    lambda: Weight,
    word_cap: u64,
}

impl HighestWeightModule {
    pub fn new(gcm: &GeneralizedCartanMatrix, lambda: Weight) -> Result<Self> {
        gcm.check_weight(&lambda)?;
        if !gcm.is_finite_type() {
            return Err(Error::NotFiniteType);
        }
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        Ok(Self {
            gcm: gcm.clone(),
            lambda,
            word_cap: DEFAULT_WORD_CAP,
        })
    }

    pub fn with_word_cap(mut self, cap: u64) -> Self {
        self.word_cap = cap;
        self
    }

    pub fn gcm(&self) -> &GeneralizedCartanMatrix {
        &self.gcm
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn word_cap(&self) -> u64 {
        self.word_cap
    }

    pub fn rank(&self) -> usize {
        self.gcm.rank()
    }

    /// Weight `λ − β` of the given content.
    pub fn weight_of(&self, content: &RootVector) -> Weight {
        &self.lambda - &self.gcm.root_to_weight(content)
    }

    fn check_content(&self, content: &RootVector) -> Result<usize> {
        if content.len() != self.rank() {
            return Err(Error::SizeMismatch {
                expected: self.rank(),
                got: content.len(),
            });
        }
        match word_count(content.coeffs()) {
            Some(c) if c <= self.word_cap => Ok(c as usize),
            other => Err(Error::TooLarge {
                content: content.to_string(),
                words: other.map_or_else(|| "more than 2^64".to_string(), |c| c.to_string()),
                cap: self.word_cap,
            }),
        }
    }

    fn check_vector(&self, v: &PairingVector) -> Result<()> {
        if v.lambda != self.lambda {
            return Err(Error::Internal(format!(
                "vector of L({}) used in L({})",
                v.lambda, self.lambda
            )));
        }
        Ok(())
    }

    pub fn zero_vector(&self, content: RootVector) -> Result<PairingVector> {
        let len = self.check_content(&content)?;
        Ok(PairingVector::new(
            self.lambda.clone(),
            content,
            vec![zero(); len],
        ))
    }

    /// `u_λ`, the empty word.
    pub fn highest_weight_vector(&self) -> PairingVector {
        PairingVector::new(
            self.lambda.clone(),
            RootVector::zero(self.rank()),
            vec![Rational::from_integer(1.into())],
        )
    }

    pub fn f_action(&self, i: usize, v: &PairingVector) -> Result<PairingVector> {
        self.gcm.check_index(i)?;
        self.check_vector(v)?;
        let target = v.content.with_added(i, 1);
        let len = self.check_content(&target)?;
        let mut out = Vec::with_capacity(len);
        let mut content = v.content.coeffs().to_vec();
        f_rec(
            &self.gcm,
            self.lambda.coords(),
            i,
            &mut content,
            &v.coords,
            &mut out,
        );
        debug_assert_eq!(out.len(), len);
        Ok(PairingVector::new(self.lambda.clone(), target, out))
    }

    /// `e_i v`, or `None` when `λ − content + α_i` lies above λ (then `e_i v = 0`
    /// in a weight that does not occur).
    pub fn e_action(&self, i: usize, v: &PairingVector) -> Result<Option<PairingVector>> {
        self.gcm.check_index(i)?;
        self.check_vector(v)?;
        if v.content.coeffs()[i] == 0 {
            return Ok(None);
        }
        let (s, l) = blocks(v.content.coeffs())[i];
        Ok(Some(PairingVector::new(
            self.lambda.clone(),
            v.content.with_added(i, -1),
            v.coords[s..s + l].to_vec(),
        )))
    }

    /// Content of `τ_ω v` for `v` of content γ: `γ'_k = γ_{ω(k)}`.
    pub fn tau_content(omega: &DiagramAutomorphism, content: &RootVector) -> RootVector {
        RootVector::new(
            (0..content.len())
                .map(|k| content.coeffs()[omega.image(k)])
                .collect(),
        )
    }

    fn check_omega(&self, omega: &DiagramAutomorphism) -> Result<()> {
        if omega.rank() != self.rank() {
            return Err(Error::SizeMismatch {
                expected: self.rank(),
                got: omega.rank(),
            });
        }
        if !omega.is_symmetric_weight(&self.lambda) {
            return Err(Error::NotSymmetricWeight(self.lambda.to_string()));
        }
        Ok(())
    }

    /// The twining map: `<w, τ v> = <ω(w), v>` with `ω` relabeling letters, so
    /// that `τ(f_{j_1} ⋯ f_{j_k} u_λ) = f_{ω⁻¹(j_1)} ⋯ f_{ω⁻¹(j_k)} u_λ`.
    pub fn tau(&self, omega: &DiagramAutomorphism, v: &PairingVector) -> Result<PairingVector> {
        self.check_omega(omega)?;
        self.check_vector(v)?;
        let mut out = Vec::with_capacity(v.coords.len());
        let mut content = v.content.coeffs().to_vec();
        tau_rec(omega.perm(), &mut content, &v.coords, &mut out);
        Ok(PairingVector::new(
            self.lambda.clone(),
            Self::tau_content(omega, &v.content),
            out,
        ))
    }

    /// The vector `f_{i_1} ⋯ f_{i_k} u_λ`.
    pub fn word_vector(&self, word: &FWord) -> Result<PairingVector> {
        for &i in word.letters() {
            self.gcm.check_index(i)?;
        }
        self.check_content(&word.content(self.rank()))?;
        word.letters()
            .iter()
            .rev()
            .try_fold(self.highest_weight_vector(), |v, &i| self.f_action(i, &v))
    }

    /// Every nonzero weight space `L(λ)_{λ−γ}` with `γ ≤ max` componentwise,
    /// built upward as `span f_i L(λ)_{λ−γ+α_i}`.
    pub fn weight_spaces(&self, max: &RootVector) -> Result<BTreeMap<RootVector, Subspace>> {
        self.check_content(max)?;
        Ok(self.build_weight_spaces(max).0)
    }

    /// Every nonzero weight space whose content fits under the word cap, plus
    /// the first contents `γ ≤ λ − w₀(λ)` above which nothing was built
    /// because they exceed it.
    pub fn weight_spaces_within_cap(
        &self,
    ) -> Result<(BTreeMap<RootVector, Subspace>, BTreeSet<RootVector>)> {
        let group = WeylGroup::new(&self.gcm)?;
        let lowest = group
            .element_of(&group.longest_element()?)?
            .apply(&self.lambda);
        let max = self
            .gcm
            .weight_to_integral_root(&(&self.lambda - &lowest))?
            .ok_or_else(|| Error::Internal("λ − w₀(λ) is not in the root lattice".into()))?;
        Ok(self.build_weight_spaces(&max))
    }

    fn build_weight_spaces(
        &self,
        max: &RootVector,
    ) -> (BTreeMap<RootVector, Subspace>, BTreeSet<RootVector>) {
        let n = self.rank();
        let mut skipped = BTreeSet::new();
        if !max.is_nonnegative() {
            return (BTreeMap::new(), skipped);
        }
        let mut out = BTreeMap::new();
        let mut top = Subspace::empty(self.lambda.clone(), RootVector::zero(n), 1);
        top.insert(self.highest_weight_vector());
        out.insert(RootVector::zero(n), top);
        let mut layer = vec![RootVector::zero(n)];
        while !layer.is_empty() {
            let mut next: BTreeSet<RootVector> = layer
                .iter()
                .flat_map(|g| (0..n).map(move |i| g.with_added(i, 1)))
                .filter(|g| g.le(max))
                .collect();
            // word counts only grow upward, so anything built from a skipped
            // content would be skipped as well
            let (fits, over): (BTreeSet<_>, BTreeSet<_>) = std::mem::take(&mut next)
                .into_iter()
                .partition(|g| self.check_content(g).is_ok());
            skipped.extend(over);
            let built: Vec<Subspace> = fits
                .into_par_iter()
                .map(|gamma| {
                    let width = self.check_content(&gamma).expect("partitioned above");
                    let mut space = Subspace::empty(self.lambda.clone(), gamma.clone(), width);
                    for i in 0..n {
                        if gamma.coeffs()[i] == 0 {
                            continue;
                        }
                        if let Some(below) = out.get(&gamma.with_added(i, -1)) {
                            for row in below.basis() {
                                let up = self.f_action(i, &row).expect("content fits the cap");
                                space.insert(up);
                            }
                        }
                    }
                    space
                })
                .collect();
            layer = Vec::new();
            for space in built.into_iter().filter(|s| s.dim() > 0) {
                layer.push(space.content.clone());
                out.insert(space.content.clone(), space);
            }
        }
        (out, skipped)
    }

    /// `L(λ)_{λ−β}`; empty when the weight does not occur.
    pub fn weight_space(&self, beta: &RootVector) -> Result<Subspace> {
        let width = self.check_content(beta)?;
        let mut spaces = self.weight_spaces(beta)?;
        Ok(spaces
            .remove(beta)
            .unwrap_or_else(|| Subspace::empty(self.lambda.clone(), beta.clone(), width)))
    }

    /// The f-word `f_{i_1}^{m_1} ⋯ f_{i_k}^{m_k}` with
    /// `m_t = <s_{i_{t+1}} ⋯ s_{i_k} λ, α_{i_t}^∨>`.
    pub fn extremal_word(&self, word: &WeylWord) -> Result<FWord> {
        let mut mu = self.lambda.clone();
        let mut powers = Vec::with_capacity(word.len());
        for &i in word.letters().iter().rev() {
            self.gcm.check_index(i)?;
            let m = self.gcm.pairing(&mu, i);
            if m < 0 {
                return Err(Error::NotReduced(word.to_string()));
            }
            powers.push((i, m as usize));
            mu = self.gcm.reflect(&mu, i);
        }
        let letters = powers
            .iter()
            .rev()
            .flat_map(|&(i, m)| std::iter::repeat_n(i, m))
            .collect();
        Ok(FWord::new(letters))
    }

    /// `u_{w(λ)}` as the pairing vector of its extremal word.
    pub fn extremal_vector(&self, word: &WeylWord) -> Result<PairingVector> {
        let fword = self.extremal_word(word)?;
        let v = self.word_vector(&fword)?;
        if v.is_zero() {
            return Err(Error::Internal(format!(
                "extremal vector for {word} vanished"
            )));
        }
        let expected = twining_core::element_of(&self.gcm, word)?.apply(&self.lambda);
        if self.weight_of(&v.content) != expected {
            return Err(Error::Internal(format!(
                "extremal vector for {word} has weight {} instead of {expected}",
                self.weight_of(&v.content)
            )));
        }
        Ok(v)
    }

    /// The Demazure module `L_w(λ) = U(b) u_{w(λ)}` as one subspace per content,
    /// computed downward from `β_w = λ − w(λ)` as `span e_i L_w(λ)_{λ−γ−α_i}`.
    /// Only nonzero subspaces are returned.
    pub fn demazure_subspaces(&self, word: &WeylWord) -> Result<BTreeMap<RootVector, Subspace>> {
        let group = WeylGroup::new(&self.gcm)?;
        let word = group.canonicalize(word)?;
        let w_lambda = group.element_of(&word)?.apply(&self.lambda);
        let beta_w = self
            .gcm
            .weight_to_integral_root(&(&self.lambda - &w_lambda))?
            .ok_or_else(|| Error::Internal("λ − w(λ) is not in the root lattice".into()))?;
        let width = self.check_content(&beta_w)?;
        let mut top = Subspace::empty(self.lambda.clone(), beta_w.clone(), width);
        top.insert(self.extremal_vector(&word)?);

        let n = self.rank();
        let mut out = BTreeMap::new();
        let mut layer: BTreeMap<RootVector, Subspace> = BTreeMap::new();
        layer.insert(beta_w, top);
        while !layer.is_empty() {
            let next: BTreeSet<RootVector> = layer
                .keys()
                .flat_map(|g| {
                    (0..n)
                        .filter(|&i| g.coeffs()[i] > 0)
                        .map(move |i| g.with_added(i, -1))
                })
                .collect();
            let built: Vec<Subspace> = next
                .into_par_iter()
                .map(|gamma| {
                    let width = self.check_content(&gamma)?;
                    let mut space = Subspace::empty(self.lambda.clone(), gamma.clone(), width);
                    for i in 0..n {
                        if let Some(above) = layer.get(&gamma.with_added(i, 1)) {
                            // e_i is the block of words starting with i
                            let (s, l) = blocks(above.content.coeffs())[i];
                            for row in above.echelon.rows() {
                                space.insert(PairingVector::new(
                                    self.lambda.clone(),
                                    gamma.clone(),
                                    row[s..s + l].to_vec(),
                                ));
                            }
                        }
                    }
                    Ok(space)
                })
                .collect::<Result<_>>()?;
            out.append(&mut layer);
            layer = built
                .into_iter()
                .filter(|s| s.dim() > 0)
                .map(|s| (s.content.clone(), s))
                .collect();
        }
        Ok(out)
    }

    /// `Σ_γ dim · e(λ − γ)`.
    pub fn dimension_character(
        &self,
        spaces: &BTreeMap<RootVector, Subspace>,
    ) -> CharacterPolynomial {
        let mut ch = CharacterPolynomial::zero(self.rank());
        for (gamma, space) in spaces {
            if space.dim() > 0 {
                ch.add_term(self.weight_of(gamma), BigInt::from(space.dim()));
            }
        }
        ch
    }

    /// Trace of `τ_ω` on a subspace at an ω-stable content. Fails with
    /// `NotTauStable` if `τ_ω` does not preserve the subspace.
    pub fn twining_trace(&self, space: &Subspace, omega: &DiagramAutomorphism) -> Result<BigInt> {
        self.check_omega(omega)?;
        if !omega.is_symmetric_content(&space.content) {
            return Err(Error::ContentNotSymmetric(space.content.to_string()));
        }
        let mut trace = zero();
        for (row, &p) in space.basis().iter().zip(space.echelon.pivots()) {
            let image = self.tau(omega, row)?;
            if !space.contains(&image) {
                return Err(Error::NotTauStable(format!(
                    "a vector of content {} leaves the subspace",
                    space.content
                )));
            }
            // rows are reduced, so the coefficient of row r in τ(row r) sits at its pivot
            trace += &image.coords[p];
        }
        if !trace.is_integer() {
            return Err(Error::Internal(format!("non-integral trace {trace}")));
        }
        Ok(trace.to_integer())
    }

    /// Checks `τ_ω(S_γ) ⊆ S_{γ'}` for every content of the family, symmetric or not.
    pub fn check_tau_stable(
        &self,
        spaces: &BTreeMap<RootVector, Subspace>,
        omega: &DiagramAutomorphism,
    ) -> Result<()> {
        self.check_omega(omega)?;
        // collected in content order so the reported violation is deterministic
        let checks: Vec<Result<()>> = spaces
            .par_iter()
            .map(|(gamma, space)| {
                if space.dim() == 0 {
                    return Ok(());
                }
                let target = Self::tau_content(omega, gamma);
                let image_space = spaces.get(&target).ok_or_else(|| {
                    Error::NotTauStable(format!("content {gamma} maps to missing content {target}"))
                })?;
                for row in space.basis() {
                    if !image_space.contains(&self.tau(omega, &row)?) {
                        return Err(Error::NotTauStable(format!(
                            "τ maps content {gamma} outside the subspace at {target}"
                        )));
                    }
                }
                Ok(())
            })
            .collect();
        checks.into_iter().collect()
    }

    /// `Σ_{γ symmetric} tr(τ_ω | S_γ) e(λ − γ)` after checking stability of
    /// the whole family.
    pub fn twining_character_of(
        &self,
        spaces: &BTreeMap<RootVector, Subspace>,
        omega: &DiagramAutomorphism,
    ) -> Result<CharacterPolynomial> {
        self.check_tau_stable(spaces, omega)?;
        let traces: Vec<(RootVector, BigInt)> = spaces
            .par_iter()
            .filter(|(gamma, _)| omega.is_symmetric_content(gamma))
            .map(|(gamma, space)| Ok((gamma.clone(), self.twining_trace(space, omega)?)))
            .collect::<Result<_>>()?;
        let mut ch = CharacterPolynomial::zero(self.rank());
        for (gamma, t) in traces {
            ch.add_term(self.weight_of(&gamma), t);
        }
        Ok(ch)
    }

    /// The twining character `ch^ω(L_w(λ))` for `w ∈ W̃`.
    pub fn twining_character(
        &self,
        word: &WeylWord,
        omega: &DiagramAutomorphism,
    ) -> Result<CharacterPolynomial> {
        self.check_omega(omega)?;
        if !is_in_w_tilde(&self.gcm, word, omega)? {
            return Err(Error::NotInWTilde(word.to_string()));
        }
        let spaces = self.demazure_subspaces(word)?;
        self.twining_character_of(&spaces, omega)
    }
}
