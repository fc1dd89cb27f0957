//! JSON wire formats.
//!
//! Instance:
//! `{"game":"ashg","class":{"kind":"duplex","x":"3"},"n":3,"weights":[["0","1","-1/2"],...]}`.
//! Partition: `[[1,2],[3]]`, 1-based, canonical order.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::game::{Game, Instance, Partition, WeightClass};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassJson {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InstanceJson {
    pub game: Game,
    pub class: ClassJson,
    pub n: usize,
    pub weights: Vec<Vec<Value>>,
}

impl From<&WeightClass> for ClassJson {
    fn from(class: &WeightClass) -> Self {
        ClassJson {
            kind: class.name().to_string(),
            x: class.duplex_x().map(|x| Value::String(rational::format(x))),
        }
    }
}

impl TryFrom<&ClassJson> for WeightClass {
    type Error = Error;

    fn try_from(c: &ClassJson) -> Result<Self> {
        match c.kind.as_str() {
            "arbitrary" => Ok(WeightClass::Arbitrary),
            "nonnegative" | "non-negative" => Ok(WeightClass::NonNegative),
            "bounded" => Ok(WeightClass::Bounded),
            "duplex" | "generalduplex" => {
                let x = c
                    .x
                    .as_ref()
                    .ok_or_else(|| Error::Parse("duplex class requires \"x\"".into()))?;
                WeightClass::duplex(rational::from_json_value(x)?)
            }
            other => Err(Error::Parse(format!("unknown weight class {other:?}"))),
        }
    }
}

impl From<&Instance> for InstanceJson {
    fn from(inst: &Instance) -> Self {
        InstanceJson {
            game: inst.game(),
            class: inst.class().into(),
            n: inst.n(),
            weights: inst
                .weights()
                .iter()
                .map(|row| row.iter().map(|w| Value::String(rational::format(w))).collect())
                .collect(),
        }
    }
}

impl TryFrom<&InstanceJson> for Instance {
    type Error = Error;

    fn try_from(j: &InstanceJson) -> Result<Self> {
        if j.weights.len() != j.n {
            return Err(Error::Structural(format!(
                "\"n\" is {} but the matrix has {} rows",
                j.n,
                j.weights.len()
            )));
        }
        let weights = j
            .weights
            .iter()
            .map(|row| row.iter().map(rational::from_json_value).collect::<Result<Vec<Rational>>>())
            .collect::<Result<Vec<_>>>()?;
        Instance::new(j.game, WeightClass::try_from(&j.class)?, weights)
    }
}

pub fn instance_to_json(inst: &Instance) -> Value {
    serde_json::to_value(InstanceJson::from(inst)).expect("instance JSON is always serialisable")
}

pub fn instance_to_string(inst: &Instance) -> String {
    serde_json::to_string_pretty(&InstanceJson::from(inst)).expect("instance JSON is always serialisable")
}

pub fn instance_from_value(v: &Value) -> Result<Instance> {
    let j: InstanceJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    Instance::try_from(&j)
}

pub fn instance_from_str(s: &str) -> Result<Instance> {
    let j: InstanceJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    Instance::try_from(&j)
}

pub fn partition_to_json(p: &Partition) -> Value {
    Value::Array(
        p.blocks()
            .iter()
            .map(|b| Value::Array(b.iter().map(|&a| Value::from(a + 1)).collect()))
            .collect(),
    )
}

pub fn partition_from_json(v: &Value, n: usize) -> Result<Partition> {
    let blocks: Vec<Vec<usize>> =
        serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let blocks = blocks
        .into_iter()
        .map(|b| {
            b.into_iter()
                .map(|a| a.checked_sub(1).ok_or_else(|| Error::Parse("agents are 1-based".into())))
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Partition::new(n, blocks)
}

pub fn rationals_to_json(values: &[Rational]) -> Value {
    Value::Array(values.iter().map(|v| Value::String(rational::format(v))).collect())
}
