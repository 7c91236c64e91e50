//! Folding a symmetrizable generalized Cartan matrix along a diagram
//! automorphism ω: orbit data, the linking condition, the folded matrix Â of
//! the orbit Lie algebra, the weight map `P*_ω` and the group isomorphism
//! `Θ : Ŵ → W̃`.
//!
//! Conventions:
//! * `s_î = Σ_{j∈î} a_{rep(î),j}` and `c_î = 2 / s_î`;
//! * `â_{îĵ} = c_ĵ Σ_{j'∈ĵ} a_{rep(î),j'}` (the scale of the column orbit);
//! * `P*_ω(Λ̂_î) = Σ_{j∈î} Λ_j`;
//! * `Θ(ŝ_î)` is the longest element of the parabolic subgroup on orbit `î`.
//!
//! Every construction re-checks the intertwining identity
//! `M(Θ(ŝ_î)) · P* = P* · M̂(ŝ_î)`, so an inconsistent convention fails at
//! construction time instead of producing wrong characters.

use std::collections::HashSet;
use std::fmt;

use twining_core::linalg::mul_int;
use twining_core::{
    element_of, is_in_w_tilde, DiagramAutomorphism, Error, GeneralizedCartanMatrix, Result, Weight,
    WeylElement, WeylGroup, WeylWord,
};

/// Orbits of ω with their sums `s_î` and scale factors `c_î`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitData {
    orbits: Vec<Vec<usize>>,
    sums: Vec<i64>,
}

impl OrbitData {
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn representative(&self, orbit: usize) -> usize {
        self.orbits[orbit][0]
    }

    pub fn size(&self, orbit: usize) -> usize {
        self.orbits[orbit].len()
    }

    /// `s_î`.
    pub fn sums(&self) -> &[i64] {
        &self.sums
    }

    /// `c_î = 2 / s_î`, integral under the linking condition.
    pub fn scale(&self, orbit: usize) -> Option<i64> {
        let s = self.sums[orbit];
        (s == 1 || s == 2).then(|| 2 / s)
    }

    /// Index of the orbit containing node `i`.
    pub fn orbit_of(&self, i: usize) -> usize {
        self.orbits
            .iter()
            .position(|o| o.contains(&i))
            .expect("orbits partition the index set")
    }
}

/// Checks `a_{ω(i),ω(j)} = a_ij` and computes the orbit data.
pub fn validate_automorphism(
    gcm: &GeneralizedCartanMatrix,
    perm: Vec<usize>,
) -> Result<(DiagramAutomorphism, OrbitData)> {
    let omega = DiagramAutomorphism::new(gcm, perm)?;
    let data = orbit_data(gcm, &omega)?;
    Ok((omega, data))
}

pub fn orbit_data(gcm: &GeneralizedCartanMatrix, omega: &DiagramAutomorphism) -> Result<OrbitData> {
    let orbits = omega.orbits();
    let mut sums = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let sum_from = |i: usize| -> i64 { orbit.iter().map(|&j| gcm.entry(i, j)).sum() };
        let s = sum_from(orbit[0]);
        if orbit.iter().any(|&i| sum_from(i) != s) {
            return Err(Error::Internal(format!(
                "orbit sum depends on the representative for orbit {orbit:?}"
            )));
        }
        sums.push(s);
    }
    Ok(OrbitData { orbits, sums })
}

/// Everything the folding produces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoldingData {
    source: GeneralizedCartanMatrix,
    omega: DiagramAutomorphism,
    orbit_data: OrbitData,
    folded: GeneralizedCartanMatrix,
    pstar_matrix: Vec<Vec<i64>>,
    theta_table: Vec<WeylWord>,
}

/// Reduced word of the longest element of the parabolic subgroup on `orbit`,
/// which is a disjoint union of A1 and A2 components.
fn orbit_longest_word(gcm: &GeneralizedCartanMatrix, orbit: &[usize]) -> Result<WeylWord> {
    let mut used = vec![false; orbit.len()];
    let mut letters = Vec::new();
    for (k, &p) in orbit.iter().enumerate() {
        if used[k] {
            continue;
        }
        used[k] = true;
        let neighbours: Vec<usize> = (0..orbit.len())
            .filter(|&l| l != k && gcm.entry(p, orbit[l]) != 0)
            .collect();
        match neighbours.as_slice() {
            [] => letters.push(p),
            [l] => {
                let q = orbit[*l];
                let q_degree = orbit
                    .iter()
                    .filter(|&&r| r != q && gcm.entry(q, r) != 0)
                    .count();
                if gcm.entry(p, q) != -1 || gcm.entry(q, p) != -1 || q_degree != 1 || used[*l] {
                    return Err(Error::UnsupportedOrbitShape(orbit.to_vec()));
                }
                used[*l] = true;
                letters.extend([p, q, p]);
            }
            _ => return Err(Error::UnsupportedOrbitShape(orbit.to_vec())),
        }
    }
    Ok(WeylWord::new(letters))
}

/// Builds Â, `P*_ω` and the Θ table, then checks all invariants.
pub fn fold(gcm: &GeneralizedCartanMatrix, omega: &DiagramAutomorphism) -> Result<FoldingData> {
    let data = orbit_data(gcm, omega)?;
    for (orbit, &s) in data.orbits.iter().zip(&data.sums) {
        if s != 1 && s != 2 {
            return Err(Error::LinkingConditionFailed {
                orbit: orbit.clone(),
                sum: s,
            });
        }
    }
    let theta_table = data
        .orbits
        .iter()
        .map(|orbit| orbit_longest_word(gcm, orbit))
        .collect::<Result<Vec<_>>>()?;

    let m = data.len();
    let mut folded = vec![vec![0i64; m]; m];
    for (hi, row) in folded.iter_mut().enumerate() {
        for (hj, entry) in row.iter_mut().enumerate() {
            let c = data.scale(hj).expect("linking condition checked");
            let value_from = |i: usize| -> i64 {
                c * data.orbits[hj]
                    .iter()
                    .map(|&j| gcm.entry(i, j))
                    .sum::<i64>()
            };
            *entry = value_from(data.representative(hi));
            if data.orbits[hi].iter().any(|&i| value_from(i) != *entry) {
                return Err(Error::Internal(format!(
                    "folded entry ({hi},{hj}) depends on the representative"
                )));
            }
        }
    }
    let folded = GeneralizedCartanMatrix::new(folded)?;
    let fd = FoldingData::from_parts_unchecked(gcm.clone(), omega.clone(), folded, theta_table)?;
    fd.check_invariants()?;
    Ok(fd)
}

impl FoldingData {
    /// Assembles folding data without checking intertwining or W̃ membership.
    /// Used for mutation fixtures; prefer [`fold`].
    pub fn from_parts_unchecked(
        source: GeneralizedCartanMatrix,
        omega: DiagramAutomorphism,
        folded: GeneralizedCartanMatrix,
        theta_table: Vec<WeylWord>,
    ) -> Result<Self> {
        let orbit_data = orbit_data(&source, &omega)?;
        if folded.rank() != orbit_data.len() {
            return Err(Error::SizeMismatch {
                expected: orbit_data.len(),
                got: folded.rank(),
            });
        }
        if theta_table.len() != orbit_data.len() {
            return Err(Error::SizeMismatch {
                expected: orbit_data.len(),
                got: theta_table.len(),
            });
        }
        let n = source.rank();
        let mut pstar_matrix = vec![vec![0i64; orbit_data.len()]; n];
        for (hi, orbit) in orbit_data.orbits.iter().enumerate() {
            for &j in orbit {
                pstar_matrix[j][hi] = 1;
            }
        }
        Ok(Self {
            source,
            omega,
            orbit_data,
            folded,
            pstar_matrix,
            theta_table,
        })
    }

    /// Θ words lie in W̃ and intertwine with `P*`.
    pub fn check_invariants(&self) -> Result<()> {
        for (hi, word) in self.theta_table.iter().enumerate() {
            if !is_in_w_tilde(&self.source, word, &self.omega)? {
                return Err(Error::Internal(format!(
                    "theta word {word} of orbit {hi} is not in W~"
                )));
            }
            let hat = WeylWord::new(vec![hi]);
            if !self.intertwines(&hat)? {
                return Err(Error::Internal(format!(
                    "theta word {word} of orbit {hi} does not intertwine with P*"
                )));
            }
        }
        Ok(())
    }

    /// `M(Θ(ŵ)) · P* = P* · M̂(ŵ)`.
    pub fn intertwines(&self, w_hat: &WeylWord) -> Result<bool> {
        let big = element_of(&self.source, &self.theta(w_hat)?)?;
        let small = element_of(&self.folded, w_hat)?;
        Ok(
            mul_int(big.matrix(), &self.pstar_matrix)
                == mul_int(&self.pstar_matrix, small.matrix()),
        )
    }

    pub fn source(&self) -> &GeneralizedCartanMatrix {
        &self.source
    }

    pub fn automorphism(&self) -> &DiagramAutomorphism {
        &self.omega
    }

    pub fn orbit_data(&self) -> &OrbitData {
        &self.orbit_data
    }

    /// The folded matrix Â.
    pub fn folded(&self) -> &GeneralizedCartanMatrix {
        &self.folded
    }

    /// `n × n̂` matrix whose column `î` is the indicator of orbit `î`.
    pub fn pstar_matrix(&self) -> &[Vec<i64>] {
        &self.pstar_matrix
    }

    pub fn theta_table(&self) -> &[WeylWord] {
        &self.theta_table
    }

    pub fn pstar(&self, mu_hat: &Weight) -> Result<Weight> {
        self.folded.check_weight(mu_hat)?;
        Ok(Weight::new(
            self.pstar_matrix
                .iter()
                .map(|row| row.iter().zip(mu_hat.coords()).map(|(a, m)| a * m).sum())
                .collect(),
        ))
    }

    pub fn is_symmetric_weight(&self, lambda: &Weight) -> bool {
        self.omega.is_symmetric_weight(lambda)
    }

    pub fn pstar_inverse(&self, lambda: &Weight) -> Result<Weight> {
        self.source.check_weight(lambda)?;
        if !self.is_symmetric_weight(lambda) {
            return Err(Error::NotSymmetricWeight(lambda.to_string()));
        }
        Ok(Weight::new(
            (0..self.orbit_data.len())
                .map(|hi| lambda.coords()[self.orbit_data.representative(hi)])
                .collect(),
        ))
    }

    /// Substitutes `ŝ_î ↦ w_î` letterwise.
    pub fn theta(&self, w_hat: &WeylWord) -> Result<WeylWord> {
        let mut letters = Vec::new();
        for &hi in w_hat.letters() {
            self.folded.check_index(hi)?;
            letters.extend_from_slice(self.theta_table[hi].letters());
        }
        Ok(WeylWord::new(letters))
    }

    /// Peels right factors `w_î` that shorten `w`, smallest `î` first.
    pub fn theta_inverse(&self, w: &WeylWord) -> Result<WeylWord> {
        if !is_in_w_tilde(&self.source, w, &self.omega)? {
            return Err(Error::NotInWTilde(w.to_string()));
        }
        let big = WeylGroup::new(&self.source)?;
        let blocks: Vec<WeylElement> = self
            .theta_table
            .iter()
            .map(|t| element_of(&self.source, t))
            .collect::<Result<_>>()?;
        let mut g = big.element_of(w)?;
        let mut len = big.element_length(&g)?;
        let mut peeled = Vec::new();
        while len > 0 {
            let mut step = None;
            for (hi, block) in blocks.iter().enumerate() {
                let h = g.compose(block);
                let l = big.element_length(&h)?;
                if l < len {
                    step = Some((hi, h, l));
                    break;
                }
            }
            let Some((hi, h, l)) = step else {
                return Err(Error::NoDescentFound(w.to_string()));
            };
            peeled.push(hi);
            g = h;
            len = l;
        }
        peeled.reverse();
        let w_hat = WeylWord::new(peeled);
        if self.folded.is_finite_type() {
            WeylGroup::new(&self.folded)?.canonicalize(&w_hat)
        } else {
            Ok(w_hat)
        }
    }

    /// `|Θ(Ŵ)| = |Ŵ|` and `Θ(Ŵ) = {g ∈ W : g ω* = ω* g}`, by enumeration of
    /// both groups (finite type, at most `cap` elements each).
    pub fn check_bijectivity(&self, cap: usize) -> Result<bool> {
        let small = WeylGroup::new(&self.folded)?;
        let big = WeylGroup::new(&self.source)?;
        let hat_elements = small.elements(cap)?;
        let mut image = HashSet::new();
        for g in &hat_elements {
            let word = small.reduced_word(g)?;
            image.insert(element_of(&self.source, &self.theta(&word)?)?);
        }
        let om = self.omega.weight_matrix();
        let fixed: HashSet<WeylElement> = big
            .elements(cap)?
            .into_iter()
            .filter(|g| g.commutes_with(&om))
            .collect();
        Ok(image.len() == hat_elements.len() && image == fixed)
    }

    /// `{0,2}->0,2 ; {1}->1`.
    pub fn theta_table_text(&self) -> String {
        self.orbit_data
            .orbits
            .iter()
            .zip(&self.theta_table)
            .map(|(orbit, word)| {
                let o: Vec<String> = orbit.iter().map(usize::to_string).collect();
                format!("{{{}}}->{word}", o.join(","))
            })
            .collect::<Vec<_>>()
            .join(" ; ")
    }
}

impl fmt::Display for FoldingData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "folded: {}", self.folded)?;
        let orbits: Vec<String> = self
            .orbit_data
            .orbits
            .iter()
            .map(|o| {
                let o: Vec<String> = o.iter().map(usize::to_string).collect();
                format!("{{{}}}", o.join(","))
            })
            .collect();
        writeln!(f, "orbits: {}", orbits.join(" "))?;
        let sc: Vec<String> = (0..self.orbit_data.len())
            .map(|k| {
                format!(
                    "s={} c={}",
                    self.orbit_data.sums[k],
                    self.orbit_data
                        .scale(k)
                        .map_or("-".into(), |c| c.to_string())
                )
            })
            .collect();
        writeln!(f, "orbit sums: {}", sc.join(" ; "))?;
        let rows: Vec<String> = self
            .pstar_matrix
            .iter()
            .map(|r| {
                let r: Vec<String> = r.iter().map(i64::to_string).collect();
                format!("[{}]", r.join(","))
            })
            .collect();
        writeln!(f, "pstar: [{}]", rows.join(","))?;
        write!(f, "theta: {}", self.theta_table_text())
    }
}
