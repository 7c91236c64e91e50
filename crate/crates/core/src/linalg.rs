//! Exact rational linear algebra: small dense matrices and an incremental
//! reduced row-echelon form for long coordinate rows.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::Rational;

pub fn to_rational_matrix(m: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|&x| Rational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect()
}

/// Determinant by fraction-tracking Gaussian elimination.
pub fn determinant(m: &[Vec<i64>]) -> Rational {
    let mut a = to_rational_matrix(m);
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let factor = &a[r][col] / &pivot;
            for c in col..n {
                let t = &factor * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// Leading principal minors `det(m[..k][..k])` for `k = 1..=n`.
pub fn leading_minors(m: &[Vec<i64>]) -> Vec<Rational> {
    (1..=m.len())
        .map(|k| {
            let sub: Vec<Vec<i64>> = m[..k].iter().map(|row| row[..k].to_vec()).collect();
            determinant(&sub)
        })
        .collect()
}

/// Inverse over the rationals, `None` when singular.
pub fn inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut a = to_rational_matrix(m);
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(p, col);
        inv.swap(p, col);
        let pivot = a[col][col].clone();
        for c in 0..n {
            a[col][c] /= &pivot;
            inv[col][c] /= &pivot;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col].clone();
            for c in 0..n {
                let t = &factor * &a[col][c];
                a[r][c] -= t;
                let t = &factor * &inv[col][c];
                inv[r][c] -= t;
            }
        }
    }
    Some(inv)
}

pub fn mul_int(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let inner = b.len();
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

/// A row space kept in reduced row-echelon form.
///
/// Rows are sorted by strictly increasing pivot column; every pivot entry is
/// one and is the only nonzero entry of its column.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RowEchelon {
    width: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(width: usize) -> Self {
        Self {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Subtracts the projection onto the current rows; returns the remainder.
    pub fn reduce(&self, mut row: Vec<Rational>) -> Vec<Rational> {
        debug_assert_eq!(row.len(), self.width);
        for (basis, &p) in self.rows.iter().zip(&self.pivots) {
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for (x, b) in row.iter_mut().zip(basis) {
                if !b.is_zero() {
                    *x -= &factor * b;
                }
            }
        }
        row
    }

    pub fn contains(&self, row: &[Rational]) -> bool {
        self.reduce(row.to_vec()).iter().all(Zero::is_zero)
    }

    /// Adds a row; returns whether the rank grew.
    pub fn insert(&mut self, row: Vec<Rational>) -> bool {
        let mut row = self.reduce(row);
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let lead = row[p].clone();
        if !lead.is_one() {
            for x in row.iter_mut() {
                if !x.is_zero() {
                    *x /= &lead;
                }
            }
        }
        for basis in self.rows.iter_mut() {
            if basis[p].is_zero() {
                continue;
            }
            let factor = basis[p].clone();
            for (b, x) in basis.iter_mut().zip(&row) {
                if !x.is_zero() {
                    *b -= &factor * x;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, row);
        true
    }

    /// Coefficients of `row` in the echelon basis, or `None` if outside the span.
    pub fn coordinates(&self, row: &[Rational]) -> Option<Vec<Rational>> {
        let coeffs: Vec<Rational> = self.pivots.iter().map(|&p| row[p].clone()).collect();
        self.contains(row).then_some(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    #[test]
    fn determinant_of_a3() {
        let a3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]];
        assert_eq!(determinant(&a3), q(4));
        assert_eq!(leading_minors(&a3), vec![q(2), q(3), q(4)]);
    }

    #[test]
    fn inverse_round_trip() {
        let b2 = vec![vec![2, -1], vec![-2, 2]];
        let inv = inverse(&b2).unwrap();
        // det = 2, inverse = [[1, 1/2], [1, 1]]
        assert_eq!(inv[0][0], q(1));
        assert_eq!(inv[0][1], Rational::new(1.into(), 2.into()));
        assert_eq!(inv[1][0], q(1));
        assert!(inverse(&[vec![2, -2], vec![-2, 2]]).is_none());
    }

    #[test]
    fn echelon_keeps_reduced_form() {
        let mut e = RowEchelon::new(3);
        assert!(e.insert(vec![q(0), q(2), q(4)]));
        assert!(e.insert(vec![q(1), q(1), q(1)]));
        assert!(!e.insert(vec![q(2), q(4), q(6)]));
        assert_eq!(e.pivots(), &[0, 1]);
        assert_eq!(e.rows()[0], vec![q(1), q(0), q(-1)]);
        assert_eq!(e.rows()[1], vec![q(0), q(1), q(2)]);
        assert_eq!(e.coordinates(&[q(3), q(5), q(7)]), Some(vec![q(3), q(5)]));
        assert_eq!(e.coordinates(&[q(0), q(0), q(1)]), None);
    }
}
