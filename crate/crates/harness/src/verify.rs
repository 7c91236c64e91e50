//! Both sides of the twining character identity, computed independently.
//!
//! The left side only touches the engine and shared root data; the right side
//! only touches the folded characters. They meet in the final comparison.

use std::time::Instant;

use serde_json::{json, Value};
use twining_characters::{demazure_character, map_character};
use twining_core::{BigInt, CharacterPolynomial, Result, Weight};
use twining_engine::{HighestWeightModule, DEFAULT_WORD_CAP};

use crate::instance::{Instance, Resolved};

/// Sizes recorded alongside a verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Dimensions {
    /// `dim L_w(λ)`.
    pub demazure: usize,
    /// Number of contents of `L_w(λ)` that are ω-stable.
    pub symmetric_contents: usize,
    /// `dim L̂_ŵ(λ̂)`, the coefficient sum of the right side.
    pub folded: BigInt,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub resolved: Resolved,
    pub lhs: CharacterPolynomial,
    pub rhs: CharacterPolynomial,
    pub equal: bool,
    pub ms: u128,
    pub dimensions: Dimensions,
}

impl VerificationReport {
    pub fn instance(&self) -> &Instance {
        &self.resolved.instance
    }

    /// `(weight, lhs coefficient, rhs coefficient)` where the sides disagree.
    pub fn differences(&self) -> Vec<(Weight, BigInt, BigInt)> {
        self.lhs.differences(&self.rhs)
    }

    /// Deterministic text form (no timing).
    pub fn canonical_text(&self) -> String {
        let r = &self.resolved;
        let mut out =
            format!(
            "instance: {}\nunfolded: lambda={} w=({})\nfolded: lambda_hat={} w_hat=({}) over {}\n",
            r.instance, r.lambda, r.w, r.lambda_hat, r.w_hat, r.folding.folded()
        );
        out += &format!(
            "dimensions: demazure={} symmetric_contents={} folded={}\n",
            self.dimensions.demazure, self.dimensions.symmetric_contents, self.dimensions.folded
        );
        out += "lhs:\n";
        out += &text_or_zero(&self.lhs);
        out += "\nrhs:\n";
        out += &text_or_zero(&self.rhs);
        out += "\n";
        if self.equal {
            out += "verdict: equal\n";
        } else {
            out += "verdict: unequal\n";
            for (mu, a, b) in self.differences() {
                out += &format!("  at e[{}]: lhs {a}, rhs {b}\n", csv(mu.coords()));
            }
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let r = &self.resolved;
        json!({
            "instance": serde_json::to_value(&r.instance).expect("instances serialize"),
            "lambda": r.lambda.coords(),
            "lambda_hat": r.lambda_hat.coords(),
            "w": r.w.letters(),
            "w_hat": r.w_hat.letters(),
            "lhs": polynomial_json(&self.lhs),
            "rhs": polynomial_json(&self.rhs),
            "equal": self.equal,
            "ms": self.ms as u64,
            "dimensions": {
                "demazure": self.dimensions.demazure,
                "symmetric_contents": self.dimensions.symmetric_contents,
                "folded": big_json(&self.dimensions.folded),
            },
            "differences": self.differences().iter().map(|(mu, a, b)| {
                json!([mu.coords(), big_json(a), big_json(b)])
            }).collect::<Vec<_>>(),
        })
    }
}

fn csv(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn text_or_zero(f: &CharacterPolynomial) -> String {
    if f.is_empty() {
        "0".into()
    } else {
        f.canonical_text()
    }
}

fn big_json(n: &BigInt) -> Value {
    match i64::try_from(n) {
        Ok(v) => json!(v),
        Err(_) => json!(n.to_string()),
    }
}

/// `[[coeff, [exponents]], ...]` in the canonical term order.
pub fn polynomial_json(f: &CharacterPolynomial) -> Value {
    Value::Array(
        f.sorted_terms()
            .map(|(mu, c)| json!([big_json(c), mu.coords()]))
            .collect(),
    )
}

pub fn verify(instance: &Instance) -> Result<VerificationReport> {
    verify_resolved(instance.resolve()?, DEFAULT_WORD_CAP)
}

/// Computes `ch^ω(L_w(λ))` with the engine and `P*_ω(ch L̂_ŵ(λ̂))` with the
/// folded Demazure operators, then compares them exactly.
pub fn verify_resolved(resolved: Resolved, word_cap: u64) -> Result<VerificationReport> {
    let start = Instant::now();
    let (lhs, rhs) = rayon::join(
        || -> Result<_> {
            let module = HighestWeightModule::new(&resolved.gcm, resolved.lambda.clone())?
                .with_word_cap(word_cap);
            let spaces = module.demazure_subspaces(&resolved.w)?;
            let ch = module.twining_character_of(&spaces, &resolved.omega)?;
            let dim = spaces.values().map(|s| s.dim()).sum::<usize>();
            let symmetric = spaces
                .keys()
                .filter(|g| resolved.omega.is_symmetric_content(g))
                .count();
            Ok((ch, dim, symmetric))
        },
        || -> Result<_> {
            let folded = demazure_character(
                resolved.folding.folded(),
                &resolved.lambda_hat,
                &resolved.w_hat,
            )?;
            let sum = folded.coefficient_sum();
            Ok((map_character(&resolved.folding, &folded)?, sum))
        },
    );
    let (lhs, demazure, symmetric_contents) = lhs?;
    let (rhs, folded) = rhs?;
    let equal = lhs == rhs;
    Ok(VerificationReport {
        resolved,
        lhs,
        rhs,
        equal,
        ms: start.elapsed().as_millis(),
        dimensions: Dimensions {
            demazure,
            symmetric_contents,
            folded,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a2_flip_instances() {
        let r = verify(&Instance::folded("A2", vec![1, 0], vec![1], vec![0])).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs.canonical_text(), "1*e[1,1]\n1*e[-1,-1]");
        assert_eq!(r.dimensions.demazure, 8);
        let r = verify(&Instance::folded("A2", vec![1, 0], vec![1], vec![])).unwrap();
        assert!(r.equal);
        assert_eq!(r.rhs.canonical_text(), "1*e[1,1]");
    }

    #[test]
    fn d4_triality_adjoint() {
        let inst = Instance {
            gcm: crate::instance::GcmSpec::Label("D4".into()),
            automorphism: vec![2, 1, 3, 0],
            lambda_hat: None,
            lambda: Some(vec![0, 1, 0, 0]),
            w_hat: Some(vec![0, 1, 0, 1, 0, 1]),
            w: None,
        };
        let r = verify(&inst).unwrap();
        assert!(r.equal);
        assert_eq!(r.rhs.coefficient_sum(), BigInt::from(7));
        assert_eq!(r.dimensions.demazure, 28);
    }

    #[test]
    fn report_json_shape() {
        let r = verify(&Instance::folded("A2", vec![1, 0], vec![1], vec![0])).unwrap();
        let j = r.to_json();
        assert_eq!(j["lhs"], json!([[1, [1, 1]], [1, [-1, -1]]]));
        assert_eq!(j["equal"], json!(true));
        assert_eq!(j["instance"]["gcm"], json!("A2"));
        assert!(j["ms"].is_u64());
    }
}
