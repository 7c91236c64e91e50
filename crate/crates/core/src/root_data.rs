//! Generalized Cartan matrices, integral weights and simple-root arithmetic.
//!
//! Weights live in fundamental-weight coordinates `m_i = <λ, α_i^∨>`, root
//! vectors in simple-root coordinates. The simple root `α_j` has weight
//! coordinates given by column `j` of the Cartan matrix.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg;
use crate::{Error, Rational, Result};

fn fmt_list(f: &mut fmt::Formatter<'_>, xs: &[i64]) -> fmt::Result {
    write!(f, "(")?;
    for (k, x) in xs.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

/// An integral weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    /// The all-ones weight ρ.
    pub fn rho(n: usize) -> Self {
        Self(vec![1; n])
    }

    /// The fundamental weight Λ_i.
    pub fn fundamental(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i] = 1;
        Self(c)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn into_coords(self) -> Vec<i64> {
        self.0
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_list(f, &self.0)
    }
}

impl Add<&Weight> for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&Weight> for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// `Σ k_i α_i` in simple-root coordinates. A "content" when all `k_i ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector(Vec<i64>);

impl RootVector {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self(coeffs)
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn simple(n: usize, i: usize) -> Self {
        let mut c = vec![0; n];
        c[i] = 1;
        Self(c)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&k| k >= 0)
    }

    pub fn is_positive_root_like(&self) -> bool {
        self.is_nonnegative() && !self.is_zero()
    }

    /// Componentwise `self ≤ other`.
    pub fn le(&self, other: &RootVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn with_added(&self, i: usize, delta: i64) -> RootVector {
        let mut c = self.0.clone();
        c[i] += delta;
        RootVector(c)
    }
}

impl From<Vec<i64>> for RootVector {
    fn from(v: Vec<i64>) -> Self {
        Self(v)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_list(f, &self.0)
    }
}

impl Add<&RootVector> for &RootVector {
    type Output = RootVector;
    fn add(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&RootVector> for &RootVector {
    type Output = RootVector;
    fn sub(self, rhs: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RootVector {
    type Output = RootVector;
    fn neg(self) -> RootVector {
        RootVector(self.0.iter().map(|a| -a).collect())
    }
}

/// A validated, symmetrizable generalized Cartan matrix `A = (a_ij)`.
///
/// `a_ij = <α_j, α_i^∨>`; the symmetrizer `d` satisfies `d_i a_ij = d_j a_ji`
/// and is the smallest positive integer solution on each connected component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneralizedCartanMatrix {
    entries: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
}

impl GeneralizedCartanMatrix {
    /// Validates the GCM axioms and computes the symmetrizer.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::NotGcm {
                row: 0,
                col: 0,
                reason: "empty matrix".into(),
            });
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotGcm {
                    row: i,
                    col: row.len(),
                    reason: format!("row has {} entries, expected {n}", row.len()),
                });
            }
        }
        for i in 0..n {
            if entries[i][i] != 2 {
                return Err(Error::NotGcm {
                    row: i,
                    col: i,
                    reason: format!("diagonal entry is {}, expected 2", entries[i][i]),
                });
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if entries[i][j] > 0 {
                    return Err(Error::NotGcm {
                        row: i,
                        col: j,
                        reason: format!("off-diagonal entry {} is positive", entries[i][j]),
                    });
                }
                if (entries[i][j] == 0) != (entries[j][i] == 0) {
                    return Err(Error::NotGcm {
                        row: i,
                        col: j,
                        reason: "zero pattern is not symmetric".into(),
                    });
                }
            }
        }
        let symmetrizer = compute_symmetrizer(&entries)?;
        Ok(Self {
            entries,
            symmetrizer,
        })
    }

    /// Size of the index set I.
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn determinant(&self) -> Rational {
        linalg::determinant(&self.entries)
    }

    /// True iff every leading principal minor is positive.
    pub fn is_finite_type(&self) -> bool {
        linalg::leading_minors(&self.entries)
            .iter()
            .all(Signed::is_positive)
    }

    pub fn check_index(&self, i: usize) -> Result<()> {
        if i < self.rank() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                rank: self.rank(),
            })
        }
    }

    pub fn check_weight(&self, w: &Weight) -> Result<()> {
        if w.len() == self.rank() {
            Ok(())
        } else {
            Err(Error::SizeMismatch {
                expected: self.rank(),
                got: w.len(),
            })
        }
    }

    /// `<λ, α_i^∨>`.
    pub fn pairing(&self, lambda: &Weight, i: usize) -> i64 {
        lambda.0[i]
    }

    /// `<β, α_i^∨> = Σ_j a_ij k_j` for a root vector β.
    pub fn root_pairing(&self, beta: &RootVector, i: usize) -> i64 {
        self.entries[i]
            .iter()
            .zip(&beta.0)
            .map(|(a, k)| a * k)
            .sum()
    }

    /// Column `j` of A.
    pub fn simple_root(&self, j: usize) -> Weight {
        Weight(self.entries.iter().map(|row| row[j]).collect())
    }

    pub fn root_to_weight(&self, beta: &RootVector) -> Weight {
        Weight(
            (0..self.rank())
                .map(|i| self.root_pairing(beta, i))
                .collect(),
        )
    }

    /// Root coordinates `A^{-1} m`; fails if A is singular.
    pub fn weight_to_root(&self, lambda: &Weight) -> Result<Vec<Rational>> {
        let inv = linalg::inverse(&self.entries).ok_or(Error::SingularCartanMatrix)?;
        Ok(inv
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&lambda.0)
                    .map(|(x, &m)| x * Rational::from_integer(BigInt::from(m)))
                    .fold(Rational::zero(), |acc, t| acc + t)
            })
            .collect())
    }

    /// Integral root coordinates of λ, when they exist.
    pub fn weight_to_integral_root(&self, lambda: &Weight) -> Result<Option<RootVector>> {
        let q = self.weight_to_root(lambda)?;
        if q.iter().all(|x| x.is_integer()) {
            let coeffs = q
                .iter()
                .map(|x| {
                    i64::try_from(x.to_integer())
                        .map_err(|_| Error::Internal("root coordinate overflow".into()))
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Some(RootVector(coeffs)))
        } else {
            Ok(None)
        }
    }

    /// `s_i(λ) = λ − m_i α_i`.
    pub fn reflect(&self, lambda: &Weight, i: usize) -> Weight {
        let m = lambda.0[i];
        Weight(
            lambda
                .0
                .iter()
                .zip(&self.entries)
                .map(|(x, row)| x - m * row[i])
                .collect(),
        )
    }

    /// `s_i(β) = β − <β, α_i^∨> α_i` on root coordinates.
    pub fn reflect_root(&self, beta: &RootVector, i: usize) -> RootVector {
        let m = self.root_pairing(beta, i);
        beta.with_added(i, -m)
    }

    /// `(λ, β)` for a weight λ and root vector β: `Σ_j k_j d_j m_j`.
    pub fn form_weight_root(&self, lambda: &Weight, beta: &RootVector) -> i64 {
        beta.0
            .iter()
            .zip(&self.symmetrizer)
            .zip(&lambda.0)
            .map(|((k, d), m)| k * d * m)
            .sum()
    }

    /// `(β, γ)` for root vectors.
    pub fn form_roots(&self, beta: &RootVector, gamma: &RootVector) -> i64 {
        self.form_weight_root(&self.root_to_weight(beta), gamma)
    }

    /// All positive roots of a finite-type matrix, by closing the simple roots
    /// under simple reflections. Sorted by height, then lexicographically.
    pub fn positive_roots(&self) -> Result<Vec<RootVector>> {
        if !self.is_finite_type() {
            return Err(Error::NotFiniteType);
        }
        let n = self.rank();
        let mut seen: BTreeSet<RootVector> = (0..n).map(|i| RootVector::simple(n, i)).collect();
        let mut queue: VecDeque<RootVector> = seen.iter().cloned().collect();
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let r = self.reflect_root(&beta, i);
                if r.is_positive_root_like() && seen.insert(r.clone()) {
                    queue.push_back(r);
                }
            }
        }
        let mut roots: Vec<RootVector> = seen.into_iter().collect();
        roots.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| a.cmp(b)));
        Ok(roots)
    }

    /// `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigInt> {
        self.check_weight(lambda)?;
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        let roots = self.positive_roots()?;
        let rho = Weight::rho(self.rank());
        let shifted = lambda + &rho;
        let mut num = BigInt::one();
        let mut den = BigInt::one();
        for alpha in &roots {
            num *= self.form_weight_root(&shifted, alpha);
            den *= self.form_weight_root(&rho, alpha);
        }
        let (q, r) = num.div_rem(&den);
        if !r.is_zero() {
            return Err(Error::Internal(format!(
                "Weyl dimension {num}/{den} is not an integer"
            )));
        }
        Ok(q)
    }

    /// Connected components of the Dynkin diagram, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components(&self.entries)
    }
}

impl fmt::Display for GeneralizedCartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn components(entries: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = entries.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if !seen[j] && entries[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Propagates `d_j = d_i a_ij / a_ji` along a spanning tree of each component,
/// checks every edge, then scales to the smallest positive integers.
fn compute_symmetrizer(entries: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = entries.len();
    let mut d: Vec<Option<Rational>> = vec![None; n];
    for comp in components(entries) {
        let root = comp[0];
        d[root] = Some(Rational::one());
        let mut stack = vec![root];
        while let Some(i) = stack.pop() {
            let di = d[i].clone().expect("visited");
            for j in 0..n {
                if i == j || entries[i][j] == 0 || d[j].is_some() {
                    continue;
                }
                let dj = di.clone() * Rational::new(entries[i][j].into(), entries[j][i].into());
                d[j] = Some(dj);
                stack.push(j);
            }
        }
        let denom_lcm = comp
            .iter()
            .map(|&i| d[i].as_ref().expect("visited").denom().clone())
            .fold(BigInt::one(), |acc, x| acc.lcm(&x));
        let scaled: Vec<BigInt> = comp
            .iter()
            .map(|&i| (d[i].as_ref().expect("visited") * &denom_lcm).to_integer())
            .collect();
        let g = scaled.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        for (&i, x) in comp.iter().zip(&scaled) {
            d[i] = Some(Rational::from_integer(x / &g));
        }
    }
    let d: Vec<i64> = d
        .into_iter()
        .map(|x| {
            i64::try_from(x.expect("every node visited").to_integer())
                .map_err(|_| Error::Internal("symmetrizer overflow".into()))
        })
        .collect::<Result<_>>()?;
    for i in 0..n {
        for j in 0..n {
            if d[i] * entries[i][j] != d[j] * entries[j][i] {
                return Err(Error::NotSymmetrizable { row: i, col: j });
            }
        }
    }
    Ok(d)
}
