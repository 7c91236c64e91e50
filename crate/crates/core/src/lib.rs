//! Root data shared by every part of the workspace: generalized Cartan
//! matrices, integral weights, Weyl groups, diagram automorphisms and the
//! character ring.
//!
//! All arithmetic is exact; rationals are arbitrary precision.

pub mod automorphism;
pub mod catalog;
pub mod charpoly;
pub mod error;
pub mod linalg;
pub mod root_data;
pub mod weyl;

pub use automorphism::DiagramAutomorphism;
pub use charpoly::CharacterPolynomial;
pub use error::{Error, Result};
pub use root_data::{GeneralizedCartanMatrix, RootVector, Weight};
pub use weyl::{element_of, is_in_w_tilde, WeylElement, WeylGroup, WeylWord};

pub type Rational = num_rational::BigRational;
pub use num_bigint::BigInt;

/// Parses a comma-separated integer list such as `1,0,-2`.
pub fn parse_csv_i64(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<i64>()
                .map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
        })
        .collect()
}
