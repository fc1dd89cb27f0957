//! Subset dynamic programming over bitmasks.
//!
//! `best(S) = max over C ⊆ S with min(S) ∈ C of value(C) + best(S \ C)`.
//! Enumerating `C` as submasks of `S` gives the usual `O(3^n)` bound.

use num_traits::Zero;

use super::TiePolicy;
use crate::error::{Error, Result};
use crate::game::{coalition_mask, flatten, mask_members, FlattenedGraph, Game, Instance, Partition};
use crate::rational::{self, Rational};

/// Largest agent count accepted by the subset DP.
pub const DP_CAP: usize = 16;

/// Welfare contribution of a single coalition: internal flattened weight,
/// divided by `|C|` under FHG.
pub fn coalition_value(inst: &Instance, coalition: &[usize]) -> Result<Rational> {
    if coalition.is_empty() {
        return Err(Error::Argument("coalition must be non-empty".into()));
    }
    if let Some(&a) = coalition.iter().find(|&&a| a >= inst.n()) {
        return Err(Error::Argument(format!("agent {} is out of range 1..={}", a + 1, inst.n())));
    }
    let mut sorted = coalition.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::Argument("coalition lists an agent twice".into()));
    }
    let g = flatten(inst);
    let w = g.internal_weight(&sorted);
    Ok(match inst.game() {
        Game::Ashg => w,
        Game::Fhg => w / Rational::from_integer(sorted.len().into()),
    })
}

pub fn optimal_value(inst: &Instance) -> Result<Rational> {
    Ok(SubsetTable::build(&flatten(inst), inst.game())?.optimum().clone())
}

pub fn optimal_partition(inst: &Instance, policy: TiePolicy) -> Result<Partition> {
    SubsetTable::build(&flatten(inst), inst.game())?.select(policy)
}

/// Coalition values and best sub-partition values for every subset of agents.
#[derive(Debug, Clone)]
pub struct SubsetTable {
    n: usize,
    value: Vec<Rational>,
    best: Vec<Rational>,
}

impl SubsetTable {
    pub fn build(g: &FlattenedGraph, game: Game) -> Result<Self> {
        let n = g.n();
        if n > DP_CAP {
            return Err(Error::capacity("subset DP (agents)", n as u128, DP_CAP as u128));
        }
        let full = 1usize << n;
        // Internal flattened weight, built by peeling off the lowest member.
        let mut value = vec![rational::zero(); full];
        for mask in 1..full {
            let low = mask.trailing_zeros() as usize;
            let rest = mask & (mask - 1);
            let mut w = value[rest].clone();
            let mut r = rest;
            while r != 0 {
                let j = r.trailing_zeros() as usize;
                w += g.weight(low, j);
                r &= r - 1;
            }
            value[mask] = w;
        }
        if game == Game::Fhg {
            for (mask, v) in value.iter_mut().enumerate().skip(1) {
                if !v.is_zero() {
                    *v /= Rational::from_integer(mask.count_ones().into());
                }
            }
        }
        let mut best = vec![rational::zero(); full];
        for s in 1..full {
            let low = s & s.wrapping_neg();
            let rest = s ^ low;
            let mut top: Option<Rational> = None;
            let mut sub = rest;
            loop {
                let c = sub | low;
                let cand = &value[c] + &best[s ^ c];
                if top.as_ref().is_none_or(|t| cand > *t) {
                    top = Some(cand);
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
            best[s] = top.expect("at least the singleton of min(S) is a candidate");
        }
        Ok(SubsetTable { n, value, best })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn full(&self) -> usize {
        (1usize << self.n) - 1
    }

    pub fn optimum(&self) -> &Rational {
        &self.best[self.full()]
    }

    /// Value of the coalition given as a bitmask.
    pub fn value_of(&self, mask: u32) -> &Rational {
        &self.value[mask as usize]
    }

    /// Best welfare achievable on the agents in `mask`.
    pub fn best_of(&self, mask: u32) -> &Rational {
        &self.best[mask as usize]
    }

    /// Coalitions `C ∋ min(S)` that start some optimal partition of `S`,
    /// ordered by their ascending member lists.
    fn optimal_firsts(&self, s: usize) -> Vec<usize> {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut out = Vec::new();
        let mut sub = rest;
        loop {
            let c = sub | low;
            if &self.value[c] + &self.best[s ^ c] == self.best[s] {
                out.push(c);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
        out.sort_by_cached_key(|&c| mask_members(c as u32));
        out
    }

    /// Optimal partition with the smallest canonical encoding.
    ///
    /// Blocks are ordered by their minimum, so the first block always holds
    /// `min(S)`; picking the smallest feasible first block and recursing is exact.
    pub fn lexmin(&self) -> Partition {
        let mut blocks = Vec::new();
        let mut s = self.full();
        while s != 0 {
            let c = self.optimal_firsts(s)[0];
            blocks.push(c as u32);
            s ^= c;
        }
        Partition::from_masks(self.n, &blocks).expect("DP blocks partition the agent set")
    }

    /// Among optimal partitions, maximise the largest block; break the rest by `LexMin`.
    pub fn largest_block(&self) -> Partition {
        let full = self.full();
        // large[s]: biggest block over optimal partitions of s.
        let mut large = vec![0u32; full + 1];
        for s in 1..=full {
            large[s] = self
                .optimal_firsts(s)
                .into_iter()
                .map(|c| (c.count_ones()).max(large[s ^ c]))
                .max()
                .unwrap_or(0);
        }
        let target = large[full];
        let mut need = true;
        let mut blocks = Vec::new();
        let mut s = full;
        while s != 0 {
            let c = self
                .optimal_firsts(s)
                .into_iter()
                .find(|&c| !need || c.count_ones() >= target || large[s ^ c] >= target)
                .expect("the target block size is reachable");
            if c.count_ones() >= target {
                need = false;
            }
            blocks.push(c as u32);
            s ^= c;
        }
        Partition::from_masks(self.n, &blocks).expect("DP blocks partition the agent set")
    }

    /// `Some(j)` when the grand coalition is optimal and so is `{N \ {j}, {j}}`,
    /// with the smallest such `j`.
    pub fn grand_split_tie(&self) -> Option<usize> {
        let full = self.full();
        if self.n < 2 || self.value[full] != self.best[full] {
            return None;
        }
        (0..self.n).find(|&j| self.value[full ^ (1 << j)] == self.best[full])
    }

    pub fn select(&self, policy: TiePolicy) -> Result<Partition> {
        Ok(match policy {
            TiePolicy::LexMin => self.lexmin(),
            TiePolicy::PreferLargestBlock => self.largest_block(),
            TiePolicy::PreferSplitOfGrand => match self.grand_split_tie() {
                Some(j) => Partition::new(self.n, vec![(0..self.n).filter(|&a| a != j).collect(), vec![j]])?,
                None => self.lexmin(),
            },
            TiePolicy::AdversarialGrand => match self.grand_split_tie() {
                Some(_) => Partition::grand(self.n),
                None => self.lexmin(),
            },
        })
    }

    /// Whether `pi` attains the optimum.
    pub fn is_optimal(&self, pi: &Partition) -> bool {
        let total: Rational = pi.blocks().iter().map(|b| &self.value[coalition_mask(b) as usize]).sum();
        total == *self.optimum()
    }
}
