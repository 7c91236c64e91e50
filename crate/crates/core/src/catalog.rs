//! Cartan matrices of finite type by label, Bourbaki numbering with node `k`
//! standing for Bourbaki's `α_{k+1}`.
//!
//! Entries follow `a_ij = <α_j, α_i^∨>`, so for `B_n` the last node is short
//! and `a_{n-1,n-2} = -2`; for `C_n` the last node is long and
//! `a_{n-2,n-1} = -2`; `G2` has node 0 short.

use crate::{Error, GeneralizedCartanMatrix, Result};

fn type_a(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0; n]; n];
    for i in 0..n {
        m[i][i] = 2;
        if i + 1 < n {
            m[i][i + 1] = -1;
            m[i + 1][i] = -1;
        }
    }
    m
}

/// The matrix for a label such as `"A3"`, `"B2"`, `"C3"`, `"D4"` or `"G2"`.
pub fn cartan_entries(label: &str) -> Result<Vec<Vec<i64>>> {
    let unknown = || Error::UnknownLabel(label.to_string());
    let label = label.trim();
    let (kind, rank) = label.split_at(
        label
            .find(|c: char| c.is_ascii_digit())
            .ok_or_else(unknown)?,
    );
    let n: usize = rank.parse().map_err(|_| unknown())?;
    let m = match (kind.to_ascii_uppercase().as_str(), n) {
        ("A", n) if n >= 1 => type_a(n),
        ("B", n) if n >= 2 => {
            let mut m = type_a(n);
            m[n - 1][n - 2] = -2;
            m
        }
        ("C", n) if n >= 2 => {
            let mut m = type_a(n);
            m[n - 2][n - 1] = -2;
            m
        }
        ("D", n) if n >= 4 => {
            let mut m = type_a(n);
            // branch node n-3 joins both n-2 and n-1
            m[n - 2][n - 1] = 0;
            m[n - 1][n - 2] = 0;
            m[n - 3][n - 1] = -1;
            m[n - 1][n - 3] = -1;
            m
        }
        ("G", 2) => vec![vec![2, -3], vec![-1, 2]],
        _ => return Err(unknown()),
    };
    Ok(m)
}

pub fn cartan_matrix(label: &str) -> Result<GeneralizedCartanMatrix> {
    GeneralizedCartanMatrix::new(cartan_entries(label)?)
}
