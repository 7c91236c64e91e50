use std::fmt;

use crate::{Error, GeneralizedCartanMatrix, Result, RootVector, Weight};

/// A permutation ω of the index set with `a_{ω(i),ω(j)} = a_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DiagramAutomorphism {
    perm: Vec<usize>,
    inverse: Vec<usize>,
    order: usize,
}

impl DiagramAutomorphism {
    /// `perm` is the image list `[ω(0), …, ω(n-1)]`.
    pub fn new(gcm: &GeneralizedCartanMatrix, perm: Vec<usize>) -> Result<Self> {
        let n = gcm.rank();
        if perm.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                got: perm.len(),
            });
        }
        let mut inverse = vec![usize::MAX; n];
        for (i, &p) in perm.iter().enumerate() {
            if p >= n || inverse[p] != usize::MAX {
                return Err(Error::NotPermutation(format!("{perm:?}")));
            }
            inverse[p] = i;
        }
        for i in 0..n {
            for j in 0..n {
                if gcm.entry(perm[i], perm[j]) != gcm.entry(i, j) {
                    return Err(Error::NotDiagramAutomorphism { i, j });
                }
            }
        }
        let mut order = 1;
        let mut power = perm.clone();
        while power.iter().enumerate().any(|(i, &p)| i != p) {
            power = power.iter().map(|&p| perm[p]).collect();
            order += 1;
        }
        Ok(Self {
            perm,
            inverse,
            order,
        })
    }

    pub fn identity(n: usize) -> Self {
        let perm: Vec<usize> = (0..n).collect();
        Self {
            inverse: perm.clone(),
            perm,
            order: 1,
        }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.perm[i]
    }

    pub fn preimage(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `(ω*λ)_i = m_{ω(i)}`.
    pub fn act_on_weight(&self, lambda: &Weight) -> Weight {
        Weight::new(self.perm.iter().map(|&p| lambda.coords()[p]).collect())
    }

    /// Permutation matrix of ω* on fundamental-weight coordinates.
    pub fn weight_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| i64::from(self.perm[i] == j)).collect())
            .collect()
    }

    pub fn is_symmetric_weight(&self, lambda: &Weight) -> bool {
        self.act_on_weight(lambda) == *lambda
    }

    pub fn is_symmetric_content(&self, beta: &RootVector) -> bool {
        (0..self.rank()).all(|i| beta.coeffs()[self.perm[i]] == beta.coeffs()[i])
    }

    /// Orbits as sorted index lists, ordered by their smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.rank();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                orbit.push(i);
                i = self.perm[i];
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }
}

impl fmt::Display for DiagramAutomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.perm.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}
