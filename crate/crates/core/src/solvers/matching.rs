//! Maximum-weight matchings on flattened graphs with a deterministic tie-break.
//!
//! Only strictly positive edges are considered. Among maximum-weight
//! matchings the one whose ascending edge list is lexicographically smallest
//! wins. The blossom route gets this by perturbing weights; the brute-force
//! route compares candidates directly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};
use serde::Serialize;

use super::blossom;
use crate::error::{Error, Result};
use crate::game::{FlattenedGraph, Partition};
use crate::rational::{self, Rational};

/// Largest vertex count accepted by [`brute_force_matching`].
pub const MATCHING_ORACLE_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Matching {
    /// `(i, j)` with `i < j`, ascending.
    pub edges: Vec<(usize, usize)>,
    #[serde(with = "rational::as_string")]
    pub weight: Rational,
}

impl Matching {
    fn from_edges(g: &FlattenedGraph, mut edges: Vec<(usize, usize)>) -> Self {
        for e in edges.iter_mut() {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        let weight = edges.iter().map(|&(i, j)| g.weight(i, j)).sum();
        Matching { edges, weight }
    }

    /// Matched pairs as coalitions, everyone else alone.
    pub fn to_partition(&self, n: usize) -> Partition {
        let mut blocks: Vec<Vec<usize>> = self.edges.iter().map(|&(i, j)| vec![i, j]).collect();
        let mut covered = vec![false; n];
        for &(i, j) in &self.edges {
            covered[i] = true;
            covered[j] = true;
        }
        blocks.extend((0..n).filter(|&v| !covered[v]).map(|v| vec![v]));
        Partition::new(n, blocks).expect("a matching induces a partition")
    }
}

fn positive_edges(g: &FlattenedGraph) -> Vec<(usize, usize)> {
    let n = g.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if g.weight(i, j).is_positive() {
                out.push((i, j));
            }
        }
    }
    out
}

/// Blossom-based maximum-weight matching.
///
/// Weights are scaled to integers by the common denominator `L`; edge `k`
/// of `m` (in ascending order) then gets `w·L·2^(m+1) + 2^(m-1-k)`. The
/// bonuses sum to less than one scaled unit, so the perturbed optimum is a
/// true optimum, and it is the one containing the earliest possible edges,
/// which is the lexicographically smallest edge list.
pub fn max_weight_matching(g: &FlattenedGraph) -> Matching {
    let edges = positive_edges(g);
    let m = edges.len();
    if m == 0 {
        return Matching::from_edges(g, Vec::new());
    }
    let lcm = edges
        .iter()
        .fold(BigInt::one(), |acc, &(i, j)| acc.lcm(g.weight(i, j).denom()));
    let unit = BigInt::one() << (m + 1);
    let perturbed: Vec<(usize, usize, BigInt)> = edges
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| {
            let w = g.weight(i, j);
            let scaled = w.numer() * (&lcm / w.denom());
            (i, j, scaled * &unit + (BigInt::one() << (m - 1 - k)))
        })
        .collect();
    let mate = blossom::max_weight_matching(g.n(), &perturbed);
    let chosen = mate
        .iter()
        .enumerate()
        .filter_map(|(v, m)| m.filter(|&u| v < u).map(|u| (v, u)))
        .collect();
    Matching::from_edges(g, chosen)
}

/// Exhaustive maximum-weight matching with the same tie-break.
pub fn brute_force_matching(g: &FlattenedGraph) -> Result<Matching> {
    let n = g.n();
    if n > MATCHING_ORACLE_CAP {
        return Err(Error::capacity("brute-force matching (vertices)", n as u128, MATCHING_ORACLE_CAP as u128));
    }
    let mut best = Matching::from_edges(g, Vec::new());
    let mut current = Vec::new();
    let mut used = vec![false; n];
    search(g, 0, &mut used, &mut current, &mut best);
    Ok(best)
}

fn search(
    g: &FlattenedGraph,
    from: usize,
    used: &mut [bool],
    current: &mut Vec<(usize, usize)>,
    best: &mut Matching,
) {
    let n = g.n();
    let Some(v) = (from..n).find(|&v| !used[v]) else {
        let cand = Matching::from_edges(g, current.clone());
        if cand.weight > best.weight || (cand.weight == best.weight && cand.edges < best.edges) {
            *best = cand;
        }
        return;
    };
    // v stays unmatched.
    used[v] = true;
    search(g, v + 1, used, current, best);
    for u in v + 1..n {
        if !used[u] && g.weight(v, u).is_positive() {
            used[u] = true;
            current.push((v, u));
            search(g, v + 1, used, current, best);
            current.pop();
            used[u] = false;
        }
    }
    used[v] = false;
}
