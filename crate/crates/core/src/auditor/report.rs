//! Audit verdicts, witnesses and their JSON form.
//!
//! Agents are 1-based in JSON. A declaration is written as the agent's full
//! row, with 0 at its own position.

use std::fmt;

use serde_json::{json, Value};

use crate::canonical::instances_proportional;
use crate::error::{Error, Result};
use crate::game::{Declaration, Instance, Partition};
use crate::io::{instance_from_value, instance_to_json, partition_from_json, partition_to_json, rationals_to_json};
use crate::mechanisms::MechanismSpec;
use crate::rational::{self, Rational};

/// Which guarantee a witness breaks.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// Best case under the manipulation beats the truthful best case.
    NomSup,
    /// Worst case under the manipulation beats the truthful worst case.
    NomInf,
    /// Some counterpart profile rewards the manipulation.
    Sp,
    /// Proportional inputs produce different outputs.
    Si,
}

impl Condition {
    pub fn name(self) -> &'static str {
        match self {
            Condition::NomSup => "NOM-sup",
            Condition::NomInf => "NOM-inf",
            Condition::Sp => "SP",
            Condition::Si => "SI",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text {
            "NOM-sup" => Ok(Condition::NomSup),
            "NOM-inf" => Ok(Condition::NomInf),
            "SP" => Ok(Condition::Sp),
            "SI" => Ok(Condition::Si),
            other => Err(Error::Parse(format!("unknown condition {other:?}"))),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One mechanism run: the input, its output and the witness agent's utility
/// under its true type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Exhibit {
    pub label: String,
    pub instance: Instance,
    pub partition: Partition,
    pub utility: Rational,
}

/// The first exhibit is the truthful side, the second the manipulated side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub condition: Condition,
    pub agent: usize,
    pub true_type: Declaration,
    pub manipulation: Declaration,
    pub exhibits: Vec<Exhibit>,
}

impl Witness {
    pub(crate) fn exhibit(
        spec: &MechanismSpec,
        true_type: &Declaration,
        label: &str,
        instance: Instance,
    ) -> Result<Exhibit> {
        let partition = spec.run(&instance)?;
        let utility = true_type.utility(spec.game, partition.coalition_of(true_type.agent));
        Ok(Exhibit {
            label: label.to_string(),
            instance,
            partition,
            utility,
        })
    }

    /// Re-runs every exhibit and checks outputs, utilities and the violation itself.
    pub fn replay(&self, spec: &MechanismSpec) -> Result<()> {
        if self.exhibits.len() != 2 {
            return Err(Error::Replay(format!("expected 2 exhibits, found {}", self.exhibits.len())));
        }
        for e in &self.exhibits {
            let fresh = Witness::exhibit(spec, &self.true_type, &e.label, e.instance.clone())?;
            if fresh.partition != e.partition {
                return Err(Error::Replay(format!(
                    "{}: mechanism returns {}, witness records {}",
                    e.label, fresh.partition, e.partition
                )));
            }
            if fresh.utility != e.utility {
                return Err(Error::Replay(format!(
                    "{}: utility is {}, witness records {}",
                    e.label, fresh.utility, e.utility
                )));
            }
        }
        let (t, m) = (&self.exhibits[0], &self.exhibits[1]);
        match self.condition {
            Condition::Si => {
                if instances_proportional(&t.instance, &m.instance)?.is_none() {
                    return Err(Error::Replay("the two inputs are not proportional".into()));
                }
                if t.partition == m.partition {
                    return Err(Error::Replay("both inputs produce the same partition".into()));
                }
            }
            _ => {
                if t.instance.declaration(self.agent) != self.true_type {
                    return Err(Error::Replay(format!("{} does not declare the true type", t.label)));
                }
                if m.instance.declaration(self.agent) != self.manipulation {
                    return Err(Error::Replay(format!("{} does not declare the manipulation", m.label)));
                }
                if self.condition == Condition::Sp && t.instance.others(self.agent) != m.instance.others(self.agent) {
                    return Err(Error::Replay("SP exhibits must share the counterpart profile".into()));
                }
                if t.utility >= m.utility {
                    return Err(Error::Replay(format!(
                        "truthful utility {} is not below manipulated utility {}",
                        t.utility, m.utility
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        json!({
            "condition": self.condition.name(),
            "agent": self.agent + 1,
            "true_type": rationals_to_json(&self.true_type.to_row()),
            "manipulation": rationals_to_json(&self.manipulation.to_row()),
            "exhibits": self.exhibits.iter().map(|e| json!({
                "label": e.label,
                "instance": instance_to_json(&e.instance),
                "partition": partition_to_json(&e.partition),
                "utility": rational::format(&e.utility),
            })).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let field = |name: &str| v.get(name).ok_or_else(|| Error::Parse(format!("witness lacks {name:?}")));
        let condition = Condition::parse(field("condition")?.as_str().unwrap_or_default())?;
        let agent = field("agent")?
            .as_u64()
            .and_then(|a| (a as usize).checked_sub(1))
            .ok_or_else(|| Error::Parse("witness agent must be a positive integer".into()))?;
        let row = |name: &str| -> Result<Declaration> {
            let values = field(name)?
                .as_array()
                .ok_or_else(|| Error::Parse(format!("{name} must be an array")))?
                .iter()
                .map(rational::from_json_value)
                .collect::<Result<Vec<_>>>()?;
            if agent >= values.len() {
                return Err(Error::Parse(format!("{name} is too short for agent {}", agent + 1)));
            }
            Ok(Declaration::from_row(agent, &values))
        };
        let exhibits = field("exhibits")?
            .as_array()
            .ok_or_else(|| Error::Parse("exhibits must be an array".into()))?
            .iter()
            .map(|e| {
                let part = |name: &str| e.get(name).ok_or_else(|| Error::Parse(format!("exhibit lacks {name:?}")));
                let instance = instance_from_value(part("instance")?)?;
                let partition = partition_from_json(part("partition")?, instance.n())?;
                Ok(Exhibit {
                    label: part("label")?.as_str().unwrap_or_default().to_string(),
                    partition,
                    utility: rational::from_json_value(part("utility")?)?,
                    instance,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Witness {
            condition,
            agent,
            true_type: row("true_type")?,
            manipulation: row("manipulation")?,
            exhibits,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Witness,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Witness => "witness",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct AuditStats {
    /// Complete profiles examined (memo hits included).
    pub profiles: u128,
    pub millis: u128,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditReport {
    /// `nom`, `sp` or `si`.
    pub audit: String,
    pub mechanism: String,
    /// Grid description, or the sampler's parameters for `si`.
    pub space: String,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
    pub stats: AuditStats,
    pub notes: Vec<String>,
}

impl AuditReport {
    pub(crate) fn new(audit: &str, spec: &MechanismSpec, space: String, witness: Option<Witness>) -> Self {
        AuditReport {
            audit: audit.to_string(),
            mechanism: spec.kind.name(),
            space,
            verdict: if witness.is_some() { Verdict::Witness } else { Verdict::Pass },
            witness,
            stats: AuditStats::default(),
            notes: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    /// Everything except the wall time, which varies between runs.
    pub fn same_outcome(&self, other: &AuditReport) -> bool {
        self.audit == other.audit
            && self.mechanism == other.mechanism
            && self.space == other.space
            && self.verdict == other.verdict
            && self.witness == other.witness
            && self.stats.profiles == other.stats.profiles
            && self.notes == other.notes
    }

    pub fn to_json(&self) -> Value {
        json!({
            "audit": self.audit,
            "mechanism": self.mechanism,
            "space": self.space,
            "verdict": self.verdict.name(),
            "witness": self.witness.as_ref().map(Witness::to_json),
            "stats": {
                "profiles": self.stats.profiles.to_string(),
                "millis": self.stats.millis.to_string(),
            },
            "notes": self.notes,
        })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let text = |name: &str| -> Result<String> {
            v.get(name)
                .and_then(Value::as_str)
                .map(str::to_string)
                .ok_or_else(|| Error::Parse(format!("report lacks string {name:?}")))
        };
        let verdict = match text("verdict")?.as_str() {
            "pass" => Verdict::Pass,
            "witness" => Verdict::Witness,
            other => return Err(Error::Parse(format!("unknown verdict {other:?}"))),
        };
        let witness = match v.get("witness") {
            None | Some(Value::Null) => None,
            Some(w) => Some(Witness::from_json(w)?),
        };
        if witness.is_some() != (verdict == Verdict::Witness) {
            return Err(Error::Parse("verdict and witness disagree".into()));
        }
        let stat = |name: &str| -> Result<u128> {
            let s = v.get("stats").and_then(|s| s.get(name));
            match s {
                Some(Value::String(t)) => t.parse().map_err(|_| Error::Parse(format!("bad stats.{name}"))),
                Some(Value::Number(n)) => n.as_u64().map(u128::from).ok_or_else(|| Error::Parse(format!("bad stats.{name}"))),
                _ => Err(Error::Parse(format!("report lacks stats.{name}"))),
            }
        };
        let notes = v
            .get("notes")
            .and_then(Value::as_array)
            .map(|a| a.iter().filter_map(Value::as_str).map(str::to_string).collect())
            .unwrap_or_default();
        Ok(AuditReport {
            audit: text("audit")?,
            mechanism: text("mechanism")?,
            space: text("space")?,
            verdict,
            witness,
            stats: AuditStats {
                profiles: stat("profiles")?,
                millis: stat("millis")?,
            },
            notes,
        })
    }

    /// Aligned, human-readable summary.
    pub fn summary(&self) -> String {
        let mut lines = vec![
            format!("{:<10} {}", "audit", self.audit),
            format!("{:<10} {}", "mechanism", self.mechanism),
            format!("{:<10} {}", "space", self.space),
            format!("{:<10} {}", "verdict", self.verdict.name()),
            format!("{:<10} {} in {} ms", "profiles", self.stats.profiles, self.stats.millis),
        ];
        if let Some(w) = &self.witness {
            lines.push(format!("{:<10} {} by agent {}", "violation", w.condition, w.agent + 1));
            lines.push(format!("{:<10} {}", "true type", fmt_row(&w.true_type)));
            lines.push(format!("{:<10} {}", "reports", fmt_row(&w.manipulation)));
            for e in &w.exhibits {
                lines.push(format!(
                    "  {:<18} output {:<16} utility {}",
                    e.label,
                    e.partition.to_string(),
                    rational::format(&e.utility)
                ));
            }
        }
        for note in &self.notes {
            lines.push(format!("note: {note}"));
        }
        lines.join("\n")
    }
}

fn fmt_row(d: &Declaration) -> String {
    let parts: Vec<String> = d
        .iter()
        .map(|(j, v)| format!("w{}{}={}", d.agent + 1, j + 1, rational::format(v)))
        .collect();
    parts.join(", ")
}
