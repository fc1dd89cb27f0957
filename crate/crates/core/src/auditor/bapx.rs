//! Worst-case ratio between optimal welfare and a mechanism's welfare.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::game::{social_welfare, Instance};
use crate::mechanisms::MechanismSpec;
use crate::rational::{self, Rational};
use crate::solvers::optimal_value;

/// `opt / SW`, or unbounded when the mechanism's welfare is not positive
/// while the optimum is.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ratio {
    Finite(Rational),
    Unbounded,
}

impl Ratio {
    /// `0 / 0` counts as 1. A negative mechanism welfare is unbounded too.
    pub fn of(opt: &Rational, welfare: &Rational) -> Ratio {
        if welfare.is_positive() {
            Ratio::Finite(opt / welfare)
        } else if opt.is_zero() && welfare.is_zero() {
            Ratio::Finite(rational::one())
        } else {
            Ratio::Unbounded
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Ratio::Finite(r) => Value::String(rational::format(r)),
            Ratio::Unbounded => Value::String("unbounded".into()),
        }
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Ratio::Finite(a), Ratio::Finite(b)) => a.cmp(b),
            (Ratio::Finite(_), Ratio::Unbounded) => Ordering::Less,
            (Ratio::Unbounded, Ratio::Finite(_)) => Ordering::Greater,
            (Ratio::Unbounded, Ratio::Unbounded) => Ordering::Equal,
        }
    }
}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ratio::Finite(r) => f.write_str(&rational::format(r)),
            Ratio::Unbounded => f.write_str("unbounded"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BapxEntry {
    pub optimum: Rational,
    pub welfare: Rational,
    pub ratio: Ratio,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BapxReport {
    pub mechanism: String,
    /// Largest ratio over the corpus.
    pub ratio: Ratio,
    /// Index of the first instance attaining it.
    pub worst: usize,
    pub entries: Vec<BapxEntry>,
}

impl BapxReport {
    pub fn to_json(&self, names: Option<&[String]>) -> Value {
        json!({
            "mechanism": self.mechanism,
            "ratio": self.ratio.to_json(),
            "worst": names.map_or_else(|| Value::from(self.worst), |n| Value::from(n[self.worst].clone())),
            "instances": self.entries.iter().enumerate().map(|(k, e)| json!({
                "name": names.map_or_else(|| Value::from(k), |n| Value::from(n[k].clone())),
                "optimum": rational::format(&e.optimum),
                "welfare": rational::format(&e.welfare),
                "ratio": e.ratio.to_json(),
            })).collect::<Vec<_>>(),
        })
    }
}

pub fn approximation_ratio(spec: &MechanismSpec, inst: &Instance) -> Result<BapxEntry> {
    let optimum = optimal_value(inst)?;
    let welfare = social_welfare(inst, &spec.run(inst)?)?;
    let ratio = Ratio::of(&optimum, &welfare);
    Ok(BapxEntry { optimum, welfare, ratio })
}

/// Maximum of `opt / SW(mechanism)` over the corpus.
pub fn measure_bapx(spec: &MechanismSpec, corpus: &[Instance]) -> Result<BapxReport> {
    if corpus.is_empty() {
        return Err(Error::Argument("the corpus is empty".into()));
    }
    let entries = corpus
        .iter()
        .map(|inst| approximation_ratio(spec, inst))
        .collect::<Result<Vec<_>>>()?;
    let mut worst = 0;
    for (k, e) in entries.iter().enumerate() {
        if e.ratio > entries[worst].ratio {
            worst = k;
        }
    }
    Ok(BapxReport {
        mechanism: spec.kind.name(),
        ratio: entries[worst].ratio.clone(),
        worst,
        entries,
    })
}
