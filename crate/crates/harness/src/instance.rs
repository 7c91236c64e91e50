//! Instance files: a GCM, a diagram automorphism, and a weight and Weyl
//! word given on either the folded or the unfolded side.

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};
use twining_core::catalog::cartan_matrix;
use twining_core::{
    is_in_w_tilde, DiagramAutomorphism, Error, GeneralizedCartanMatrix, Result, Weight, WeylWord,
};
use twining_folding::{fold, validate_automorphism, FoldingData};

/// A catalog label such as `"D4"` or an explicit matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GcmSpec {
    Label(String),
    Matrix(Vec<Vec<i64>>),
}

impl GcmSpec {
    pub fn build(&self) -> Result<GeneralizedCartanMatrix> {
        match self {
            GcmSpec::Label(label) => cartan_matrix(label),
            GcmSpec::Matrix(m) => GeneralizedCartanMatrix::new(m.clone()),
        }
    }

    /// Parses a label or a JSON matrix literal such as `[[2,-1],[-1,2]]`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.starts_with('[') {
            serde_json::from_str(s)
                .map(GcmSpec::Matrix)
                .map_err(|e| Error::Parse(format!("bad matrix {s:?}: {e}")))
        } else {
            Ok(GcmSpec::Label(s.to_string()))
        }
    }
}

impl fmt::Display for GcmSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GcmSpec::Label(l) => write!(f, "{l}"),
            GcmSpec::Matrix(m) => write!(f, "{}", serde_json::to_string(m).unwrap_or_default()),
        }
    }
}

/// One verification problem. Exactly one of `lambda_hat`/`lambda` and one of
/// `w_hat`/`w` must be present; indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Instance {
    pub gcm: GcmSpec,
    pub automorphism: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_hat: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w_hat: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<usize>>,
}

impl Instance {
    /// An instance stated on the folded side.
    pub fn folded(
        gcm: &str,
        automorphism: Vec<usize>,
        lambda_hat: Vec<i64>,
        w_hat: Vec<usize>,
    ) -> Self {
        Self {
            gcm: GcmSpec::Label(gcm.to_string()),
            automorphism,
            lambda_hat: Some(lambda_hat),
            lambda: None,
            w_hat: Some(w_hat),
            w: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("instance: {e}")))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("instances always serialize")
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Validates the instance and derives both sides with the folding computed
    /// by [`fold`].
    pub fn resolve(&self) -> Result<Resolved> {
        self.resolve_with(None)
    }

    /// As [`Instance::resolve`], but with caller-supplied folding data (which
    /// must be built over the same matrix and automorphism).
    pub fn resolve_with(&self, folding: Option<FoldingData>) -> Result<Resolved> {
        let gcm = self.gcm.build()?;
        let (omega, _) = validate_automorphism(&gcm, self.automorphism.clone())?;
        let folding = match folding {
            Some(fd) => {
                if fd.source() != &gcm || fd.automorphism() != &omega {
                    return Err(Error::Internal(
                        "supplied folding data belongs to another instance".into(),
                    ));
                }
                fd
            }
            None => fold(&gcm, &omega)?,
        };

        let (lambda_hat, lambda) = match (&self.lambda_hat, &self.lambda) {
            (Some(lh), None) => {
                let lh = Weight::new(lh.clone());
                let l = folding.pstar(&lh)?;
                (lh, l)
            }
            (None, Some(l)) => {
                let l = Weight::new(l.clone());
                (folding.pstar_inverse(&l)?, l)
            }
            _ => {
                return Err(Error::Parse(
                    "exactly one of lambda_hat and lambda must be given".into(),
                ))
            }
        };
        if !lambda.is_dominant() {
            return Err(Error::NotDominant(lambda.to_string()));
        }

        let (w_hat, w) = match (&self.w_hat, &self.w) {
            (Some(wh), None) => {
                let wh = WeylWord::new(wh.clone());
                for &i in wh.letters() {
                    folding.folded().check_index(i)?;
                }
                let w = folding.theta(&wh)?;
                (wh, w)
            }
            (None, Some(w)) => {
                let w = WeylWord::new(w.clone());
                for &i in w.letters() {
                    gcm.check_index(i)?;
                }
                if !is_in_w_tilde(&gcm, &w, &omega)? {
                    return Err(Error::NotInWTilde(w.to_string()));
                }
                (folding.theta_inverse(&w)?, w)
            }
            _ => {
                return Err(Error::Parse(
                    "exactly one of w_hat and w must be given".into(),
                ))
            }
        };

        Ok(Resolved {
            instance: self.clone(),
            gcm,
            omega,
            folding,
            lambda_hat,
            lambda,
            w_hat,
            w,
        })
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        write!(f, "{} [{}]", self.gcm, list(&self.automorphism))?;
        if let Some(l) = &self.lambda_hat {
            write!(f, " lambda_hat={}", Weight::new(l.clone()))?;
        }
        if let Some(l) = &self.lambda {
            write!(f, " lambda={}", Weight::new(l.clone()))?;
        }
        if let Some(w) = &self.w_hat {
            write!(f, " w_hat=({})", list(w))?;
        }
        if let Some(w) = &self.w {
            write!(f, " w=({})", list(w))?;
        }
        Ok(())
    }
}

/// A validated instance with both the folded and the unfolded data.
#[derive(Clone, Debug)]
pub struct Resolved {
    pub instance: Instance,
    pub gcm: GeneralizedCartanMatrix,
    pub omega: DiagramAutomorphism,
    pub folding: FoldingData,
    pub lambda_hat: Weight,
    pub lambda: Weight,
    pub w_hat: WeylWord,
    pub w: WeylWord,
}
