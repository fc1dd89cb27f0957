//! Exhaustive sweeps over counterpart profiles with a shared memo of
//! mechanism outputs.

use std::collections::{BTreeMap, BTreeSet};

use dashmap::DashMap;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::game::{mask_members, Declaration, Instance, Partition};
use crate::mechanisms::MechanismSpec;
use crate::rational::Rational;

use super::space::DeclarationSpace;

/// Mechanism evaluations allowed per audit unless overridden.
pub const DEFAULT_BUDGET: u128 = 20_000_000;
/// Environment variable overriding the evaluation budget.
pub const BUDGET_ENV: &str = "HF_BUDGET";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditOptions {
    /// Worker threads for the counterpart sweep.
    pub jobs: usize,
    /// Cap on mechanism evaluations.
    pub budget: u128,
    /// Reuse mechanism outputs across profiles that share a key.
    pub memo: bool,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            jobs: std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1),
            budget: DEFAULT_BUDGET,
            memo: true,
        }
    }
}

impl AuditOptions {
    /// Defaults, with the budget taken from `HF_BUDGET` when it is set.
    pub fn from_env() -> Result<Self> {
        let mut opts = AuditOptions::default();
        if let Some(b) = budget_from_env()? {
            opts.budget = b;
        }
        Ok(opts)
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = jobs.max(1);
        self
    }

    pub fn with_budget(mut self, budget: u128) -> Self {
        self.budget = budget;
        self
    }

    pub fn with_memo(mut self, memo: bool) -> Self {
        self.memo = memo;
        self
    }
}

pub fn budget_from_env() -> Result<Option<u128>> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::Parse(format!("{BUDGET_ENV}={v:?} is not a non-negative integer"))),
        Err(_) => Ok(None),
    }
}

/// How a complete profile is turned into a memo key.
enum Keying {
    /// Mixed radix over the flattened pair-sums (index into `sums`).
    Flattened { sum_index: Vec<Vec<u128>>, base: u128 },
    /// Mixed radix over every directed value index.
    Directed { base: u128 },
    None,
}

/// Mechanism, space and shared memo for one audit session.
pub struct Auditor {
    spec: MechanismSpec,
    space: DeclarationSpace,
    opts: AuditOptions,
    keying: Keying,
    memo: DashMap<u128, u64>,
    pool: rayon::ThreadPool,
}

/// `masks[d][p]`: the coalition of the audited agent, as a bit mask, when it
/// declares the `d`-th grid declaration and the others play profile `p`.
pub(crate) struct AgentTable {
    pub masks: Vec<Vec<u32>>,
}

impl Auditor {
    pub fn new(spec: &MechanismSpec, space: &DeclarationSpace, opts: AuditOptions) -> Result<Self> {
        let n = space.n();
        if n > 16 {
            return Err(Error::capacity("agents in an audited space", n as u128, 16));
        }
        if let Some(v) = space.grid().iter().find(|v| !spec.domain.admits(v)) {
            return Err(Error::Domain(format!(
                "grid value {v} lies outside the mechanism's domain {}",
                spec.domain
            )));
        }
        spec.check_size(n)?;
        let q = space.grid().len();
        let pairs = (n * (n - 1) / 2) as u32;
        let keying = if !opts.memo {
            Keying::None
        } else if spec.kind.flattened_only() {
            let mut sums: Vec<Rational> = Vec::new();
            for a in space.grid() {
                for b in space.grid() {
                    sums.push(a + b);
                }
            }
            sums.sort();
            sums.dedup();
            let sum_index = space
                .grid()
                .iter()
                .map(|a| {
                    space
                        .grid()
                        .iter()
                        .map(|b| sums.binary_search(&(a + b)).expect("sum is listed") as u128)
                        .collect()
                })
                .collect();
            let base = sums.len() as u128;
            match base.checked_pow(pairs) {
                Some(_) => Keying::Flattened { sum_index, base },
                None => Keying::None,
            }
        } else {
            let base = q as u128;
            match base.checked_pow(2 * pairs) {
                Some(_) => Keying::Directed { base },
                None => Keying::None,
            }
        };
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs.max(1))
            .build()
            .map_err(|e| Error::Argument(format!("cannot start {} worker threads: {e}", opts.jobs)))?;
        Ok(Auditor {
            spec: spec.clone(),
            space: space.clone(),
            opts,
            keying,
            memo: DashMap::new(),
            pool,
        })
    }

    pub fn spec(&self) -> &MechanismSpec {
        &self.spec
    }

    pub fn space(&self) -> &DeclarationSpace {
        &self.space
    }

    pub fn options(&self) -> &AuditOptions {
        &self.opts
    }

    /// Distinct profiles whose outputs are memoised so far.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `idx[a][b]`: grid index of agent `a`'s value towards `b` (diagonal unused).
    fn value_indices(&self, agent: usize, decl: u128, profile: u128) -> Vec<Vec<u8>> {
        let n = self.space.n();
        let q = self.space.grid().len() as u128;
        let mut idx = vec![vec![0u8; n]; n];
        let own = self.space.digits(decl);
        for b in (0..n).filter(|&b| b != agent) {
            idx[agent][b] = own[if b < agent { b } else { b - 1 }];
        }
        // The profile is a base-q number with (n-1)^2 digits, the last other
        // agent's last value changing fastest.
        let mut rest = profile;
        for a in (0..n).rev().filter(|&a| a != agent) {
            for b in (0..n).rev().filter(|&b| b != a) {
                idx[a][b] = (rest % q) as u8;
                rest /= q;
            }
        }
        idx
    }

    fn key(&self, idx: &[Vec<u8>]) -> Option<u128> {
        let n = idx.len();
        match &self.keying {
            Keying::Flattened { sum_index, base } => {
                let mut key = 0u128;
                for a in 0..n {
                    for b in a + 1..n {
                        key = key * base + sum_index[idx[a][b] as usize][idx[b][a] as usize];
                    }
                }
                Some(key)
            }
            Keying::Directed { base } => {
                let mut key = 0u128;
                for (a, row) in idx.iter().enumerate() {
                    for (b, &v) in row.iter().enumerate() {
                        if a != b {
                            key = key * base + v as u128;
                        }
                    }
                }
                Some(key)
            }
            Keying::None => None,
        }
    }

    fn instance_from_indices(&self, idx: &[Vec<u8>]) -> Result<Instance> {
        let grid = self.space.grid();
        let weights = idx
            .iter()
            .enumerate()
            .map(|(a, row)| {
                row.iter()
                    .enumerate()
                    .map(|(b, &v)| if a == b { Rational::from_integer(0.into()) } else { grid[v as usize].clone() })
                    .collect()
            })
            .collect();
        Instance::new(self.spec.game, self.spec.domain.clone(), weights)
    }

    /// Packed block labels (4 bits per agent) of the mechanism's output.
    fn evaluate(&self, idx: &[Vec<u8>]) -> Result<u64> {
        let key = self.key(idx);
        if let Some(k) = key {
            if let Some(hit) = self.memo.get(&k) {
                return Ok(*hit);
            }
        }
        let pi = self.spec.run_unchecked(&self.instance_from_indices(idx)?)?;
        let labels = pack(&pi);
        if let Some(k) = key {
            self.memo.insert(k, labels);
        }
        Ok(labels)
    }

    /// The instance where `agent` declares the `decl`-th grid declaration and
    /// the others play the `profile`-th counterpart profile.
    pub fn instance(&self, agent: usize, decl: u128, profile: u128) -> Result<Instance> {
        self.instance_from_indices(&self.value_indices(agent, decl, profile))
    }

    fn check_agent(&self, agent: usize) -> Result<()> {
        if agent >= self.space.n() {
            return Err(Error::Argument(format!(
                "agent {} is out of range 1..={}",
                agent + 1,
                self.space.n()
            )));
        }
        Ok(())
    }

    /// Output labels over the first `limit` counterpart profiles.
    fn row(&self, agent: usize, decl: u128, limit: u128) -> Result<Vec<u64>> {
        (0..limit)
            .map(|p| self.evaluate(&self.value_indices(agent, decl, p)))
            .collect()
    }

    fn grid_index(&self, decl: &Declaration) -> Result<u128> {
        self.check_agent(decl.agent)?;
        if decl.n() != self.space.n() {
            return Err(Error::Structural(format!(
                "declaration is for {} agents, the space has {}",
                decl.n(),
                self.space.n()
            )));
        }
        self.space
            .index_of(decl)
            .ok_or_else(|| Error::Argument(format!("declaration {:?} is not on the grid {}", decl.values, self.space)))
    }

    /// Output labels for every counterpart profile, or the budget error
    /// carrying whatever the budget allowed.
    fn full_row(&self, decl: &Declaration, what: &str) -> Result<Vec<u64>> {
        let d = self.grid_index(decl)?;
        let total = self.space.counterparts();
        if total > self.opts.budget {
            let partial = self.row(decl.agent, d, self.opts.budget)?;
            let coalitions: BTreeSet<Vec<usize>> =
                partial.iter().map(|&l| mask_members(coalition_mask(l, decl.agent, self.space.n()))).collect();
            return Err(Error::Budget {
                what: what.to_string(),
                requested: total,
                limit: self.opts.budget,
                partial: coalitions.into_iter().collect(),
            });
        }
        let chunk = chunk_len(total, self.opts.jobs);
        let chunks: Vec<u128> = (0..total.div_ceil(chunk)).collect();
        let parts = self.pool.install(|| {
            chunks
                .par_iter()
                .map(|&c| {
                    let hi = ((c + 1) * chunk).min(total);
                    (c * chunk..hi)
                        .map(|p| self.evaluate(&self.value_indices(decl.agent, d, p)))
                        .collect::<Result<Vec<u64>>>()
                })
                .collect::<Result<Vec<_>>>()
        })?;
        Ok(parts.concat())
    }

    /// Coalitions `decl.agent` can end up in, over every counterpart profile.
    pub fn coal_set(&self, decl: &Declaration) -> Result<BTreeSet<Vec<usize>>> {
        let n = self.space.n();
        Ok(self
            .full_row(decl, "coalition set")?
            .into_iter()
            .map(|l| mask_members(coalition_mask(l, decl.agent, n)))
            .collect())
    }

    /// Partitions the mechanism can return, over every counterpart profile.
    pub fn out_set(&self, decl: &Declaration) -> Result<BTreeSet<Partition>> {
        let n = self.space.n();
        Ok(self
            .full_row(decl, "outcome set")?
            .into_iter()
            .map(|l| unpack(l, n))
            .collect())
    }

    /// Evaluations one exhaustive audit needs.
    pub fn audit_cost(&self) -> u128 {
        (self.space.n() as u128)
            .saturating_mul(self.space.per_agent())
            .saturating_mul(self.space.counterparts())
    }

    pub(crate) fn check_budget(&self, what: &str) -> Result<()> {
        let cost = self.audit_cost();
        if cost > self.opts.budget {
            return Err(Error::Budget {
                what: what.to_string(),
                requested: cost,
                limit: self.opts.budget,
                partial: Vec::new(),
            });
        }
        Ok(())
    }

    /// The audited agent's coalition mask for every (grid declaration, profile).
    pub(crate) fn agent_table(&self, agent: usize) -> Result<AgentTable> {
        self.check_agent(agent)?;
        let n = self.space.n();
        let decls = self.space.per_agent();
        let total = self.space.counterparts();
        let masks = self.pool.install(|| {
            (0..decls)
                .into_par_iter()
                .map(|d| {
                    (0..total)
                        .map(|p| Ok(coalition_mask(self.evaluate(&self.value_indices(agent, d, p))?, agent, n)))
                        .collect::<Result<Vec<u32>>>()
                })
                .collect::<Result<Vec<_>>>()
        })?;
        Ok(AgentTable { masks })
    }
}

fn chunk_len(total: u128, jobs: usize) -> u128 {
    let target = (jobs.max(1) as u128) * 8;
    total.div_ceil(target).max(1)
}

pub(crate) fn pack(pi: &Partition) -> u64 {
    let mut labels = 0u64;
    for (b, block) in pi.blocks().iter().enumerate() {
        for &a in block {
            labels |= (b as u64) << (4 * a);
        }
    }
    labels
}

pub(crate) fn unpack(labels: u64, n: usize) -> Partition {
    let l: Vec<usize> = (0..n).map(|a| ((labels >> (4 * a)) & 0xf) as usize).collect();
    Partition::from_labels(&l)
}

pub(crate) fn coalition_mask(labels: u64, agent: usize, n: usize) -> u32 {
    let own = (labels >> (4 * agent)) & 0xf;
    (0..n)
        .filter(|&a| (labels >> (4 * a)) & 0xf == own)
        .fold(0u32, |m, a| m | (1 << a))
}

/// For each grid declaration, the coalitions reached and the first profile reaching each.
pub(crate) fn coalition_summaries(table: &AgentTable) -> Vec<BTreeMap<u32, u128>> {
    table
        .masks
        .iter()
        .map(|row| {
            let mut first = BTreeMap::new();
            for (p, &m) in row.iter().enumerate() {
                first.entry(m).or_insert(p as u128);
            }
            first
        })
        .collect()
}
