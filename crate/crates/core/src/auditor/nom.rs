//! NOM and SP checks over a finite declaration space.

use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::game::{mask_members, Instance};
use crate::mechanisms::MechanismSpec;

use super::report::{AuditReport, Condition, Witness};
use super::space::DeclarationSpace;
use super::sweep::{coalition_summaries, AgentTable, Auditor};

/// Integer ranks of the audited agent's utility, per true type, over every
/// coalition mask that occurs in its table.
struct Ranks {
    pos: Vec<u32>,
    rank: Vec<Vec<u32>>,
}

impl Ranks {
    fn new(aud: &Auditor, agent: usize, table: &AgentTable) -> Self {
        let n = aud.space().n();
        let mut pos = vec![u32::MAX; 1 << n];
        let mut masks = Vec::new();
        for row in &table.masks {
            for &m in row {
                if pos[m as usize] == u32::MAX {
                    pos[m as usize] = masks.len() as u32;
                    masks.push(m);
                }
            }
        }
        let coalitions: Vec<Vec<usize>> = masks.iter().map(|&m| mask_members(m)).collect();
        let rank = (0..aud.space().per_agent())
            .map(|w| {
                let truth = aud.space().declaration(agent, w);
                let utils: Vec<_> = coalitions.iter().map(|c| truth.utility(aud.spec().game, c)).collect();
                let mut sorted = utils.clone();
                sorted.sort();
                sorted.dedup();
                utils
                    .iter()
                    .map(|u| sorted.binary_search(u).expect("utility is listed") as u32)
                    .collect()
            })
            .collect();
        Ranks { pos, rank }
    }

    fn of(&self, truth: usize, mask: u32) -> u32 {
        self.rank[truth][self.pos[mask as usize] as usize]
    }
}

/// Best and worst rank with the first profile attaining each.
struct Extremes {
    max: (u32, u128),
    min: (u32, u128),
}

fn extremes(summary: &BTreeMap<u32, u128>, ranks: &Ranks, truth: usize) -> Extremes {
    let mut max = (0, u128::MAX);
    let mut min = (u32::MAX, u128::MAX);
    for (&mask, &p) in summary {
        let r = ranks.of(truth, mask);
        if r > max.0 || (r == max.0 && p < max.1) || max.1 == u128::MAX {
            max = (r, p);
        }
        if r < min.0 || (r == min.0 && p < min.1) {
            min = (r, p);
        }
    }
    Extremes { max, min }
}

fn pair_witness(
    aud: &Auditor,
    condition: Condition,
    agent: usize,
    (truth, truth_profile, truth_label): (u128, u128, &str),
    (lie, lie_profile, lie_label): (u128, u128, &str),
) -> Result<Witness> {
    let space = aud.space();
    let true_type = space.declaration(agent, truth);
    let manipulation = space.declaration(agent, lie);
    let exhibits = vec![
        Witness::exhibit(aud.spec(), &true_type, truth_label, aud.instance(agent, truth, truth_profile)?)?,
        Witness::exhibit(aud.spec(), &true_type, lie_label, aud.instance(agent, lie, lie_profile)?)?,
    ];
    Ok(Witness {
        condition,
        agent,
        true_type,
        manipulation,
        exhibits,
    })
}

fn notes(space: &DeclarationSpace, witness: Option<&Witness>) -> Vec<String> {
    let whole = space.is_whole_domain();
    let note = match (witness.map(|w| w.condition), whole) {
        (None, true) => format!(
            "the grid is the whole {} domain, so the pass covers every declaration profile with n = {}",
            space.class(),
            space.n()
        ),
        (None, false) => format!(
            "pass is relative to the grid {}: best and worst cases were taken over its profiles only",
            space.describe()
        ),
        (Some(Condition::Sp), _) => {
            "one counterpart profile rewards the misreport, so the manipulation exists in any domain containing these declarations".into()
        }
        (Some(_), true) => format!(
            "the grid is the whole {} domain, so the witness is an obvious manipulation for n = {}",
            space.class(),
            space.n()
        ),
        (Some(_), false) => format!(
            "best and worst cases were taken over the grid {}; profiles off the grid can move them",
            space.describe()
        ),
    };
    vec![note]
}

impl Auditor {
    /// First `(agent, true type, manipulation)` in enumeration order whose
    /// best case (checked first) or worst case improves by misreporting.
    pub fn audit_nom(&self) -> Result<AuditReport> {
        self.check_budget("NOM audit")?;
        let start = Instant::now();
        let space = self.space();
        let per = space.per_agent();
        let mut profiles = 0u128;
        let mut witness = None;
        'agents: for agent in 0..space.n() {
            let table = self.agent_table(agent)?;
            profiles += per * space.counterparts();
            let summaries = coalition_summaries(&table);
            let ranks = Ranks::new(self, agent, &table);
            for w in 0..per {
                let truthful = extremes(&summaries[w as usize], &ranks, w as usize);
                for d in (0..per).filter(|&d| d != w) {
                    let lie = extremes(&summaries[d as usize], &ranks, w as usize);
                    let found = if truthful.max.0 < lie.max.0 {
                        Some((
                            Condition::NomSup,
                            (w, truthful.max.1, "truthful best"),
                            (d, lie.max.1, "manipulated best"),
                        ))
                    } else if truthful.min.0 < lie.min.0 {
                        Some((
                            Condition::NomInf,
                            (w, truthful.min.1, "truthful worst"),
                            (d, lie.min.1, "manipulated worst"),
                        ))
                    } else {
                        None
                    };
                    if let Some((condition, t, m)) = found {
                        witness = Some(pair_witness(self, condition, agent, t, m)?);
                        break 'agents;
                    }
                }
            }
        }
        let mut report = AuditReport::new("nom", self.spec(), space.describe(), witness);
        report.notes = notes(space, report.witness.as_ref());
        report.stats.profiles = profiles;
        report.stats.millis = start.elapsed().as_millis();
        Ok(report)
    }

    /// First `(agent, true type, counterpart profile, manipulation)` in
    /// enumeration order where misreporting pays.
    pub fn audit_sp(&self) -> Result<AuditReport> {
        self.check_budget("SP audit")?;
        let start = Instant::now();
        let space = self.space();
        let per = space.per_agent();
        let total = space.counterparts();
        let mut profiles = 0u128;
        let mut witness = None;
        'agents: for agent in 0..space.n() {
            let table = self.agent_table(agent)?;
            profiles += per * total;
            let ranks = Ranks::new(self, agent, &table);
            for w in 0..per as usize {
                for p in 0..total as usize {
                    let truthful = ranks.of(w, table.masks[w][p]);
                    let better = (0..per as usize).find(|&d| d != w && ranks.of(w, table.masks[d][p]) > truthful);
                    if let Some(d) = better {
                        witness = Some(pair_witness(
                            self,
                            Condition::Sp,
                            agent,
                            (w as u128, p as u128, "truthful"),
                            (d as u128, p as u128, "manipulated"),
                        )?);
                        break 'agents;
                    }
                }
            }
        }
        let mut report = AuditReport::new("sp", self.spec(), space.describe(), witness);
        report.notes = notes(space, report.witness.as_ref());
        report.stats.profiles = profiles;
        report.stats.millis = start.elapsed().as_millis();
        Ok(report)
    }

    /// Recomputes, over every counterpart profile in the space, the best or
    /// worst case a NOM witness claims; other witnesses are replayed.
    pub fn confirm(&self, witness: &Witness) -> Result<()> {
        witness.replay(self.spec())?;
        let extreme = |label: &str, decl| -> Result<crate::rational::Rational> {
            let utils: Vec<_> = self
                .coal_set(decl)?
                .iter()
                .map(|c| witness.true_type.utility(self.spec().game, c))
                .collect();
            let best = match witness.condition {
                Condition::NomSup => utils.into_iter().max(),
                _ => utils.into_iter().min(),
            };
            best.ok_or_else(|| Error::Replay(format!("{label}: empty coalition set")))
        };
        if matches!(witness.condition, Condition::NomSup | Condition::NomInf) {
            for (decl, e) in [&witness.true_type, &witness.manipulation].into_iter().zip(&witness.exhibits) {
                let value = extreme(&e.label, decl)?;
                if value != e.utility {
                    return Err(Error::Replay(format!(
                        "{}: the grid extreme is {value}, witness records {}",
                        e.label, e.utility
                    )));
                }
            }
        }
        Ok(())
    }
}

/// SP at one fixed profile: does any agent gain by switching to a grid declaration?
pub fn audit_sp_at(spec: &MechanismSpec, truth: &Instance, space: &DeclarationSpace) -> Result<AuditReport> {
    if truth.n() != space.n() {
        return Err(Error::Argument(format!(
            "instance has {} agents, the space {}",
            truth.n(),
            space.n()
        )));
    }
    let start = Instant::now();
    let base = spec.run(truth)?;
    let mut profiles = 1u128;
    let mut witness = None;
    'agents: for agent in 0..truth.n() {
        let true_type = truth.declaration(agent);
        let honest = true_type.utility(spec.game, base.coalition_of(agent));
        for d in 0..space.per_agent() {
            let lie = space.declaration(agent, d);
            if lie == true_type {
                continue;
            }
            let inst = truth.with_declaration(&lie)?;
            let out = spec.run(&inst)?;
            profiles += 1;
            if true_type.utility(spec.game, out.coalition_of(agent)) > honest {
                let exhibits = vec![
                    Witness::exhibit(spec, &true_type, "truthful", truth.clone())?,
                    Witness::exhibit(spec, &true_type, "manipulated", inst)?,
                ];
                witness = Some(Witness {
                    condition: Condition::Sp,
                    agent,
                    true_type,
                    manipulation: lie,
                    exhibits,
                });
                break 'agents;
            }
        }
    }
    let mut report = AuditReport::new("sp", spec, format!("{} at a fixed profile", space.describe()), witness);
    if report.witness.is_some() {
        report.notes = notes(space, report.witness.as_ref());
    } else {
        report.notes = vec!["pass covers only the given profile and the grid's declarations".into()];
    }
    report.stats.profiles = profiles;
    report.stats.millis = start.elapsed().as_millis();
    Ok(report)
}
