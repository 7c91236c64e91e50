//! The verification battery: a fixed list of instances over five folding
//! families, optional sweeps, and mutation fixtures for testing the harness.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;
use twining_core::catalog::cartan_matrix;
use twining_core::{Error, GeneralizedCartanMatrix, Result, WeylGroup, WeylWord};
use twining_folding::{fold, validate_automorphism, FoldingData};

use crate::exit;
use crate::instance::Instance;
use crate::verify::{verify_resolved, VerificationReport};

/// A (GCM, automorphism) pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Family {
    pub name: &'static str,
    pub label: &'static str,
    pub automorphism: &'static [usize],
}

pub const FAMILIES: [Family; 5] = [
    Family {
        name: "A2 flip",
        label: "A2",
        automorphism: &[1, 0],
    },
    Family {
        name: "A3 flip",
        label: "A3",
        automorphism: &[2, 1, 0],
    },
    Family {
        name: "A4 flip",
        label: "A4",
        automorphism: &[3, 2, 1, 0],
    },
    Family {
        name: "D4 triality",
        label: "D4",
        automorphism: &[2, 1, 3, 0],
    },
    Family {
        name: "D4 swap",
        label: "D4",
        automorphism: &[0, 1, 3, 2],
    },
];

/// Default word cap for battery runs. It admits every fixed instance except
/// the four D4-triality ones at λ̂ = (1,0) with the longest Demazure modules.
pub const BATTERY_WORD_CAP: u64 = 1_000_000;

impl Family {
    pub fn folding(&self) -> Result<FoldingData> {
        let a = cartan_matrix(self.label)?;
        let (omega, _) = validate_automorphism(&a, self.automorphism.to_vec())?;
        fold(&a, &omega)
    }

    pub fn instance(&self, lambda_hat: Vec<i64>, w_hat: &WeylWord) -> Instance {
        Instance::folded(
            self.label,
            self.automorphism.to_vec(),
            lambda_hat,
            w_hat.letters().to_vec(),
        )
    }
}

/// A deliberate corruption of one family's folding data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Replace `Â[row][col]`; the result must still be a GCM.
    FoldedEntry {
        family: usize,
        row: usize,
        col: usize,
        value: i64,
    },
    /// Replace the Θ word of one orbit.
    ThetaWord {
        family: usize,
        orbit: usize,
        word: WeylWord,
    },
}

impl Mutation {
    pub fn family(&self) -> usize {
        match self {
            Mutation::FoldedEntry { family, .. } | Mutation::ThetaWord { family, .. } => *family,
        }
    }

    pub fn apply(&self, fd: &FoldingData) -> Result<FoldingData> {
        let mut folded = fd.folded().entries().to_vec();
        let mut theta = fd.theta_table().to_vec();
        match self {
            Mutation::FoldedEntry {
                row, col, value, ..
            } => {
                let cell = folded.get_mut(*row).and_then(|r| r.get_mut(*col)).ok_or(
                    Error::IndexOutOfRange {
                        index: (*row).max(*col),
                        rank: fd.folded().rank(),
                    },
                )?;
                *cell = *value;
            }
            Mutation::ThetaWord { orbit, word, .. } => {
                let slot = theta.get_mut(*orbit).ok_or(Error::IndexOutOfRange {
                    index: *orbit,
                    rank: fd.folded().rank(),
                })?;
                *slot = word.clone();
            }
        }
        FoldingData::from_parts_unchecked(
            fd.source().clone(),
            fd.automorphism().clone(),
            GeneralizedCartanMatrix::new(folded)?,
            theta,
        )
    }
}

#[derive(Clone, Debug)]
pub struct BatteryConfig {
    /// Run the fixed battery.
    pub fixed: bool,
    /// Sweep every ŵ up to this length (all families)...
    pub max_word_len: Option<usize>,
    /// ...against every λ̂ in the box `{0..=M}^rank`.
    pub lambda_box: Option<i64>,
    pub word_cap: u64,
    pub mutation: Option<Mutation>,
}

impl Default for BatteryConfig {
    fn default() -> Self {
        Self {
            fixed: true,
            max_word_len: None,
            lambda_box: None,
            word_cap: BATTERY_WORD_CAP,
            mutation: None,
        }
    }
}

impl BatteryConfig {
    /// No instances at all.
    pub fn empty() -> Self {
        Self {
            fixed: false,
            ..Self::default()
        }
    }

    pub fn sweeps_enabled(&self) -> bool {
        self.max_word_len.is_some() || self.lambda_box.is_some()
    }
}

fn elements_up_to(fd: &FoldingData, max_len: Option<usize>) -> Result<Vec<WeylWord>> {
    let words = WeylGroup::new(fd.folded())?.all_reduced_words(100_000)?;
    Ok(words
        .into_iter()
        .filter(|w| max_len.is_none_or(|k| w.len() <= k))
        .collect())
}

fn lambda_box(rank: usize, m: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=m).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// The fixed battery, in a stable order: (family index, instance).
pub fn fixed_battery() -> Result<Vec<(usize, Instance)>> {
    let mut out = Vec::new();
    let specs: [(usize, Vec<Vec<i64>>, Option<usize>); 5] = [
        (0, (0..=3).map(|k| vec![k]).collect(), None),
        (1, lambda_box(2, 1), None),
        (2, vec![vec![1, 0], vec![0, 1]], None),
        (3, vec![vec![1, 0], vec![0, 1]], None),
        (4, vec![vec![0, 1, 0]], Some(4)),
    ];
    for (f, lambdas, max_len) in specs {
        let family = FAMILIES[f];
        let words = elements_up_to(&family.folding()?, max_len)?;
        for lambda_hat in lambdas {
            for w in &words {
                out.push((f, family.instance(lambda_hat.clone(), w)));
            }
        }
    }
    Ok(out)
}

/// Every instance the configuration asks for, without duplicates.
pub fn battery_instances(config: &BatteryConfig) -> Result<Vec<(usize, Instance)>> {
    let mut out = if config.fixed {
        fixed_battery()?
    } else {
        Vec::new()
    };
    if config.sweeps_enabled() {
        let max_len = Some(config.max_word_len.unwrap_or(2));
        let m = config.lambda_box.unwrap_or(1);
        for (f, family) in FAMILIES.iter().enumerate() {
            let fd = family.folding()?;
            let words = elements_up_to(&fd, max_len)?;
            for lambda_hat in lambda_box(fd.folded().rank(), m) {
                for w in &words {
                    out.push((f, family.instance(lambda_hat.clone(), w)));
                }
            }
        }
    }
    let mut seen = BTreeSet::new();
    out.retain(|(_, inst)| seen.insert(inst.to_json()));
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Equal,
    Unequal,
    /// Over the word cap or otherwise outside what the engine handles.
    Skipped,
    Error,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Status::Equal => "equal",
            Status::Unequal => "unequal",
            Status::Skipped => "skipped",
            Status::Error => "error",
        };
        write!(f, "{s}")
    }
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub family: usize,
    pub instance: Instance,
    pub status: Status,
    pub detail: String,
    pub report: Option<VerificationReport>,
}

impl Outcome {
    /// One deterministic line (no timing).
    pub fn line(&self) -> String {
        let mut s = format!(
            "{:<8} {:<12} {}",
            self.status, FAMILIES[self.family].name, self.instance
        );
        if !self.detail.is_empty() {
            s += &format!(" : {}", self.detail);
        }
        s
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Summary {
    pub total: usize,
    pub equal: usize,
    pub unequal: usize,
    pub skipped: usize,
    pub errors: usize,
    pub exit_code: i32,
}

#[derive(Clone, Debug)]
pub struct BatteryResult {
    pub outcomes: Vec<Outcome>,
    pub summary: Summary,
}

impl BatteryResult {
    pub fn canonical_text(&self) -> String {
        let mut out: String = self.outcomes.iter().map(|o| o.line() + "\n").collect();
        let s = &self.summary;
        out += &format!(
            "total {} : equal {} , unequal {} , skipped {} , errors {}\n",
            s.total, s.equal, s.unequal, s.skipped, s.errors
        );
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let instances: Vec<serde_json::Value> = self
            .outcomes
            .iter()
            .map(|o| {
                let mut v = match &o.report {
                    Some(r) => r.to_json(),
                    None => serde_json::json!({
                        "instance": serde_json::to_value(&o.instance).expect("instances serialize"),
                    }),
                };
                v["family"] = serde_json::json!(FAMILIES[o.family].name);
                v["status"] = serde_json::json!(o.status);
                v["detail"] = serde_json::json!(o.detail);
                v
            })
            .collect();
        serde_json::json!({ "instances": instances, "summary": self.summary })
    }
}

fn run_one(family: usize, instance: Instance, folding: &FoldingData, cap: u64) -> Outcome {
    let result = instance
        .resolve_with(Some(folding.clone()))
        .and_then(|r| verify_resolved(r, cap));
    match result {
        Ok(report) => {
            let (status, detail) = if report.equal {
                (Status::Equal, String::new())
            } else {
                (
                    Status::Unequal,
                    format!("{} differing terms", report.differences().len()),
                )
            };
            Outcome {
                family,
                instance,
                status,
                detail,
                report: Some(report),
            }
        }
        Err(e) => {
            let status = if exit::code_for(&e) == exit::UNSUPPORTED {
                Status::Skipped
            } else {
                Status::Error
            };
            Outcome {
                family,
                instance,
                status,
                detail: e.to_string(),
                report: None,
            }
        }
    }
}

/// Runs every instance in parallel; outcomes keep the instance order.
pub fn run_battery(config: &BatteryConfig) -> Result<BatteryResult> {
    let instances = battery_instances(config)?;
    let mut foldings = FAMILIES
        .iter()
        .map(Family::folding)
        .collect::<Result<Vec<_>>>()?;
    if let Some(m) = &config.mutation {
        let f = m.family();
        let slot = foldings.get_mut(f).ok_or(Error::IndexOutOfRange {
            index: f,
            rank: FAMILIES.len(),
        })?;
        *slot = m.apply(slot)?;
    }
    let outcomes: Vec<Outcome> = instances
        .into_par_iter()
        .map(|(f, inst)| run_one(f, inst, &foldings[f], config.word_cap))
        .collect();
    let count = |s: Status| outcomes.iter().filter(|o| o.status == s).count();
    let (equal, unequal, skipped, errors) = (
        count(Status::Equal),
        count(Status::Unequal),
        count(Status::Skipped),
        count(Status::Error),
    );
    let exit_code = if unequal > 0 || errors > 0 {
        exit::FALSIFIED
    } else {
        exit::OK
    };
    Ok(BatteryResult {
        summary: Summary {
            total: outcomes.len(),
            equal,
            unequal,
            skipped,
            errors,
            exit_code,
        },
        outcomes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixed_battery_size() {
        // 4*2 + 4*8 + 2*8 + 2*12 + (1+3+5+7+8)
        assert_eq!(fixed_battery().unwrap().len(), 104);
    }

    #[test]
    fn empty_battery_exits_cleanly() {
        let r = run_battery(&BatteryConfig::empty()).unwrap();
        assert_eq!(r.summary.total, 0);
        assert_eq!(r.summary.exit_code, exit::OK);
    }

    #[test]
    fn boxes() {
        assert_eq!(
            lambda_box(2, 1),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(lambda_box(0, 3), vec![Vec::<i64>::new()]);
    }
}
