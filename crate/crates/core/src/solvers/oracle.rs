//! Full enumeration of set partitions. Slow, but independent of the DP, so it
//! serves as the reference for every universal claim about optima.

use super::TiePolicy;
use crate::error::{Error, Result};
use crate::game::{block_welfare, enumerate_partitions, flatten, Instance, Partition};
use crate::rational::Rational;

/// Every welfare-maximising partition, in canonical order.
pub fn all_optimal_partitions(inst: &Instance) -> Result<Vec<Partition>> {
    let g = flatten(inst);
    let mut best: Option<Rational> = None;
    let mut optima = Vec::new();
    for pi in enumerate_partitions(inst.n())? {
        let sw = block_welfare(&g, inst.game(), &pi);
        match best.as_ref().map(|b| sw.cmp(b)) {
            None | Some(std::cmp::Ordering::Greater) => {
                best = Some(sw);
                optima.clear();
                optima.push(pi);
            }
            Some(std::cmp::Ordering::Equal) => optima.push(pi),
            Some(std::cmp::Ordering::Less) => {}
        }
    }
    optima.sort();
    Ok(optima)
}

/// Applies a tie policy directly to an explicit list of optima.
pub fn select_among_optima(optima: &[Partition], policy: TiePolicy) -> Result<Partition> {
    let lexmin = optima
        .iter()
        .min()
        .cloned()
        .ok_or_else(|| Error::Argument("no optimal partitions given".into()))?;
    let n = lexmin.n();
    let grand = Partition::grand(n);
    let split = || {
        optima
            .iter()
            .filter_map(|p| p.split_off_agent().map(|j| (j, p)))
            .min_by_key(|&(j, _)| j)
            .map(|(_, p)| p.clone())
    };
    Ok(match policy {
        TiePolicy::LexMin => lexmin,
        TiePolicy::PreferLargestBlock => {
            let top = optima.iter().map(Partition::largest_block).max().unwrap_or(0);
            optima
                .iter()
                .filter(|p| p.largest_block() == top)
                .min()
                .cloned()
                .expect("some optimum has the largest block")
        }
        TiePolicy::PreferSplitOfGrand | TiePolicy::AdversarialGrand => {
            match (n >= 2 && optima.contains(&grand), split()) {
                (true, Some(s)) => {
                    if policy == TiePolicy::PreferSplitOfGrand {
                        s
                    } else {
                        grand
                    }
                }
                _ => lexmin,
            }
        }
    })
}
