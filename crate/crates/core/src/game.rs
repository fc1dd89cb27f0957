//! The hedonic game model: instances, partitions, utilities and welfare.
//!
//! Agents are `0..n` internally. Every external format (JSON, CLI) is
//! 1-based; the conversion happens in [`crate::io`].

use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Full set-partition enumeration is only offered up to this many agents.
pub const ORACLE_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Game {
    /// Additively separable: utility is the plain sum of scores.
    Ashg,
    /// Fractional: the sum divided by the coalition size.
    Fhg,
}

impl fmt::Display for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Game::Ashg => "ashg",
            Game::Fhg => "fhg",
        })
    }
}

/// Which scores an agent may declare.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum WeightClass {
    Arbitrary,
    NonNegative,
    /// Scores in `[-1, 1]`.
    Bounded,
    /// Scores in `{-x, 0, 1}` for a fixed `x > 0`.
    GeneralDuplex(Rational),
}

impl WeightClass {
    pub fn duplex(x: Rational) -> Result<Self> {
        if !x.is_positive() {
            return Err(Error::Domain(format!("duplex parameter must be positive, got {x}")));
        }
        Ok(WeightClass::GeneralDuplex(x))
    }

    pub fn admits(&self, value: &Rational) -> bool {
        match self {
            WeightClass::Arbitrary => true,
            WeightClass::NonNegative => !value.is_negative(),
            WeightClass::Bounded => value.abs() <= rational::one(),
            WeightClass::GeneralDuplex(x) => {
                value.is_zero() || *value == rational::one() || *value == -x.clone()
            }
        }
    }

    pub fn duplex_x(&self) -> Option<&Rational> {
        match self {
            WeightClass::GeneralDuplex(x) => Some(x),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            WeightClass::Arbitrary => "arbitrary",
            WeightClass::NonNegative => "nonnegative",
            WeightClass::Bounded => "bounded",
            WeightClass::GeneralDuplex(_) => "duplex",
        }
    }
}

impl fmt::Display for WeightClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightClass::GeneralDuplex(x) => write!(f, "duplex(x={x})"),
            other => f.write_str(other.name()),
        }
    }
}

/// A game instance: `n` agents with a complete directed weight matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Instance {
    game: Game,
    class: WeightClass,
    weights: Vec<Vec<Rational>>,
}

impl Instance {
    /// Validates squareness, the zero diagonal and class membership of every entry.
    pub fn new(game: Game, class: WeightClass, weights: Vec<Vec<Rational>>) -> Result<Self> {
        let n = weights.len();
        if n == 0 {
            return Err(Error::Structural("an instance needs at least one agent".into()));
        }
        for (i, row) in weights.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Structural(format!(
                    "row {} has {} entries, expected {n}",
                    i + 1,
                    row.len()
                )));
            }
            if !row[i].is_zero() {
                return Err(Error::Structural(format!("self-weight of agent {} is not zero", i + 1)));
            }
            for (j, w) in row.iter().enumerate() {
                if i != j && !class.admits(w) {
                    return Err(Error::Domain(format!(
                        "weight w({},{}) = {w} is not admitted by class {class}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(Instance { game, class, weights })
    }

    /// Assemble an instance from one declaration per agent (any order).
    pub fn from_declarations(game: Game, class: WeightClass, decls: &[Declaration]) -> Result<Self> {
        let n = decls.len();
        let mut weights = vec![vec![rational::zero(); n]; n];
        let mut seen = vec![false; n];
        for d in decls {
            if d.agent >= n || seen[d.agent] {
                return Err(Error::Structural(format!("duplicate or out-of-range agent {}", d.agent + 1)));
            }
            if d.values.len() + 1 != n {
                return Err(Error::Structural(format!(
                    "declaration of agent {} has {} values, expected {}",
                    d.agent + 1,
                    d.values.len(),
                    n - 1
                )));
            }
            seen[d.agent] = true;
            for (j, v) in d.iter() {
                weights[d.agent][j] = v.clone();
            }
        }
        Instance::new(game, class, weights)
    }

    pub fn zero(game: Game, class: WeightClass, n: usize) -> Result<Self> {
        Instance::new(game, class, vec![vec![rational::zero(); n]; n])
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    pub fn game(&self) -> Game {
        self.game
    }

    pub fn class(&self) -> &WeightClass {
        &self.class
    }

    pub fn weight(&self, i: usize, j: usize) -> &Rational {
        &self.weights[i][j]
    }

    pub fn weights(&self) -> &[Vec<Rational>] {
        &self.weights
    }

    pub fn with_game(mut self, game: Game) -> Self {
        self.game = game;
        self
    }

    /// Re-tag the instance with another class, re-checking every entry.
    pub fn with_class(self, class: WeightClass) -> Result<Self> {
        Instance::new(self.game, class, self.weights)
    }

    pub fn declaration(&self, agent: usize) -> Declaration {
        Declaration::from_row(agent, &self.weights[agent])
    }

    /// Declarations of every agent except `agent`, ascending.
    pub fn others(&self, agent: usize) -> Vec<Declaration> {
        (0..self.n()).filter(|&j| j != agent).map(|j| self.declaration(j)).collect()
    }

    /// The instance with `agent`'s row replaced.
    pub fn with_declaration(&self, decl: &Declaration) -> Result<Self> {
        let mut decls: Vec<Declaration> = self.others(decl.agent);
        decls.push(decl.clone());
        Instance::from_declarations(self.game, self.class.clone(), &decls)
    }

    /// Every weight multiplied by `lambda` (class tag kept, so this can fail for bounded classes).
    pub fn scaled(&self, lambda: &Rational) -> Result<Self> {
        let weights = self
            .weights
            .iter()
            .map(|row| row.iter().map(|w| w * lambda).collect())
            .collect();
        Instance::new(self.game, self.class.clone(), weights)
    }
}

/// What agent `agent` declares about every other agent, ordered by the other agent's index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Declaration {
    pub agent: usize,
    pub values: Vec<Rational>,
}

impl Declaration {
    pub fn new(agent: usize, values: Vec<Rational>) -> Self {
        Declaration { agent, values }
    }

    /// Build from a full matrix row (the self entry is dropped).
    pub fn from_row(agent: usize, row: &[Rational]) -> Self {
        let values = row
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != agent)
            .map(|(_, v)| v.clone())
            .collect();
        Declaration { agent, values }
    }

    pub fn n(&self) -> usize {
        self.values.len() + 1
    }

    /// The declared value for agent `other` (zero for the agent itself).
    pub fn get(&self, other: usize) -> Rational {
        match other.cmp(&self.agent) {
            std::cmp::Ordering::Less => self.values[other].clone(),
            std::cmp::Ordering::Equal => rational::zero(),
            std::cmp::Ordering::Greater => self.values[other - 1].clone(),
        }
    }

    pub fn set(&mut self, other: usize, value: Rational) {
        match other.cmp(&self.agent) {
            std::cmp::Ordering::Less => self.values[other] = value,
            std::cmp::Ordering::Equal => panic!("cannot set a self-value"),
            std::cmp::Ordering::Greater => self.values[other - 1] = value,
        }
    }

    /// `(other agent, value)` pairs in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> + '_ {
        let agent = self.agent;
        self.values
            .iter()
            .enumerate()
            .map(move |(k, v)| (if k < agent { k } else { k + 1 }, v))
    }

    pub fn to_row(&self) -> Vec<Rational> {
        (0..self.n()).map(|j| self.get(j)).collect()
    }

    pub fn satisfies(&self, class: &WeightClass) -> bool {
        self.values.iter().all(|v| class.admits(v))
    }

    /// The utility this declaration (read as a true type) assigns to a coalition containing its agent.
    pub fn utility(&self, game: Game, coalition: &[usize]) -> Rational {
        debug_assert!(coalition.contains(&self.agent));
        let sum: Rational = coalition.iter().map(|&j| self.get(j)).sum();
        match game {
            Game::Ashg => sum,
            Game::Fhg => sum / Rational::from_integer(coalition.len().into()),
        }
    }
}

/// Undirected graph of mutual sums `w_ij + w_ji`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FlattenedGraph {
    w: Vec<Vec<Rational>>,
}

impl FlattenedGraph {
    pub fn from_matrix(w: Vec<Vec<Rational>>) -> Result<Self> {
        let n = w.len();
        for i in 0..n {
            if w[i].len() != n {
                return Err(Error::Structural("flattened matrix is not square".into()));
            }
            if !w[i][i].is_zero() {
                return Err(Error::Structural("flattened matrix has a non-zero diagonal".into()));
            }
            for j in 0..i {
                if w[i][j] != w[j][i] {
                    return Err(Error::Structural(format!(
                        "flattened matrix is not symmetric at ({}, {})",
                        j + 1,
                        i + 1
                    )));
                }
            }
        }
        Ok(FlattenedGraph { w })
    }

    /// Build from the upper triangle, `edges[(i, j)]` with `i < j`.
    pub fn from_edges(n: usize, edges: &[(usize, usize, Rational)]) -> Result<Self> {
        let mut w = vec![vec![rational::zero(); n]; n];
        for (i, j, v) in edges {
            if i == j || *i >= n || *j >= n {
                return Err(Error::Argument(format!("bad edge ({}, {})", i + 1, j + 1)));
            }
            w[*i][*j] = v.clone();
            w[*j][*i] = v.clone();
        }
        Ok(FlattenedGraph { w })
    }

    pub fn n(&self) -> usize {
        self.w.len()
    }

    pub fn weight(&self, i: usize, j: usize) -> &Rational {
        &self.w[i][j]
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.w
    }

    pub fn is_zero(&self) -> bool {
        self.w.iter().flatten().all(Zero::is_zero)
    }

    pub fn scaled(&self, lambda: &Rational) -> FlattenedGraph {
        FlattenedGraph {
            w: self.w.iter().map(|row| row.iter().map(|v| v * lambda).collect()).collect(),
        }
    }

    /// Largest `|w(i, j)|` over all pairs (zero for the empty graph).
    pub fn max_abs(&self) -> Rational {
        self.w
            .iter()
            .flatten()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(rational::zero)
    }

    /// Total weight of the edges inside `coalition`.
    pub fn internal_weight(&self, coalition: &[usize]) -> Rational {
        let mut total = rational::zero();
        for (a, &i) in coalition.iter().enumerate() {
            for &j in &coalition[a + 1..] {
                total += &self.w[i][j];
            }
        }
        total
    }
}

pub fn flatten(inst: &Instance) -> FlattenedGraph {
    let n = inst.n();
    let w = (0..n)
        .map(|i| (0..n).map(|j| inst.weight(i, j) + inst.weight(j, i)).collect())
        .collect();
    FlattenedGraph { w }
}

/// A coalition: agent indices in ascending order.
pub type Coalition = Vec<usize>;

/// Disjoint coalitions covering `0..n`, stored canonically: ascending inside
/// each block, blocks ordered by their smallest agent.
///
/// The derived ordering compares the block lists lexicographically; it is the
/// "canonical encoding" order used by every lexicographic tie-break.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<Coalition>,
}

impl Partition {
    pub fn new(n: usize, blocks: Vec<Coalition>) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut canon = Vec::with_capacity(blocks.len());
        for mut block in blocks {
            if block.is_empty() {
                return Err(Error::Structural("empty coalition in partition".into()));
            }
            block.sort_unstable();
            for &a in &block {
                if a >= n {
                    return Err(Error::Structural(format!("agent {} is out of range 1..={n}", a + 1)));
                }
                if seen[a] {
                    return Err(Error::Structural(format!("agent {} appears twice", a + 1)));
                }
                seen[a] = true;
            }
            canon.push(block);
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::Structural(format!("agent {} is not covered", missing + 1)));
        }
        canon.sort_unstable_by_key(|b| b[0]);
        Ok(Partition { blocks: canon })
    }

    pub fn singletons(n: usize) -> Self {
        Partition {
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    pub fn grand(n: usize) -> Self {
        Partition {
            blocks: vec![(0..n).collect()],
        }
    }

    /// From a block label per agent (labels arbitrary).
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Coalition> = Vec::new();
        let mut slot: Vec<Option<usize>> = vec![None; labels.iter().copied().max().map_or(0, |m| m + 1)];
        for (agent, &label) in labels.iter().enumerate() {
            match slot[label] {
                Some(b) => blocks[b].push(agent),
                None => {
                    slot[label] = Some(blocks.len());
                    blocks.push(vec![agent]);
                }
            }
        }
        Partition { blocks }
    }

    /// From disjoint bitmasks covering `0..n`.
    pub fn from_masks(n: usize, masks: &[u32]) -> Result<Self> {
        let blocks = masks.iter().map(|&m| mask_members(m)).collect();
        Partition::new(n, blocks)
    }

    pub fn n(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    pub fn blocks(&self) -> &[Coalition] {
        &self.blocks
    }

    /// The coalition containing `agent`.
    pub fn coalition_of(&self, agent: usize) -> &[usize] {
        self.blocks
            .iter()
            .find(|b| b.binary_search(&agent).is_ok())
            .map(Vec::as_slice)
            .unwrap_or_else(|| panic!("agent {agent} is not in the partition"))
    }

    pub fn largest_block(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_grand(&self) -> bool {
        self.blocks.len() == 1
    }

    /// If this is `{N \ {j}, {j}}`, returns `j`.
    pub fn split_off_agent(&self) -> Option<usize> {
        if self.blocks.len() != 2 {
            return None;
        }
        self.blocks.iter().find(|b| b.len() == 1).map(|b| b[0]).filter(|_| {
            let n = self.n();
            n >= 2 && self.blocks.iter().any(|b| b.len() == n - 1)
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, block) in self.blocks.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str("{")?;
            for (a, agent) in block.iter().enumerate() {
                if a > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{}", agent + 1)?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

pub(crate) fn mask_members(mask: u32) -> Coalition {
    (0..32).filter(|b| mask >> b & 1 == 1).collect()
}

pub(crate) fn coalition_mask(coalition: &[usize]) -> u32 {
    coalition.iter().fold(0, |m, &a| m | 1 << a)
}

fn check_partition(inst: &Instance, pi: &Partition) -> Result<()> {
    if pi.n() != inst.n() {
        return Err(Error::Structural(format!(
            "partition covers {} agents, instance has {}",
            pi.n(),
            inst.n()
        )));
    }
    Ok(())
}

fn row_sum(inst: &Instance, i: usize, coalition: &[usize]) -> Rational {
    coalition.iter().map(|&j| inst.weight(i, j)).sum()
}

/// `u_i = sum of w_ij over i's coalition`, irrespective of the instance's game tag.
pub fn ashg_utility(inst: &Instance, pi: &Partition, i: usize) -> Result<Rational> {
    check_partition(inst, pi)?;
    agent_in_range(inst, i)?;
    Ok(row_sum(inst, i, pi.coalition_of(i)))
}

/// The additive sum divided by the size of i's coalition.
pub fn fhg_utility(inst: &Instance, pi: &Partition, i: usize) -> Result<Rational> {
    check_partition(inst, pi)?;
    agent_in_range(inst, i)?;
    let c = pi.coalition_of(i);
    Ok(row_sum(inst, i, c) / Rational::from_integer(c.len().into()))
}

/// Utility under the instance's own game.
pub fn utility(inst: &Instance, pi: &Partition, i: usize) -> Result<Rational> {
    match inst.game() {
        Game::Ashg => ashg_utility(inst, pi, i),
        Game::Fhg => fhg_utility(inst, pi, i),
    }
}

fn agent_in_range(inst: &Instance, i: usize) -> Result<()> {
    if i >= inst.n() {
        return Err(Error::Argument(format!("agent {} is out of range 1..={}", i + 1, inst.n())));
    }
    Ok(())
}

pub fn social_welfare(inst: &Instance, pi: &Partition) -> Result<Rational> {
    check_partition(inst, pi)?;
    let mut total = rational::zero();
    for i in 0..inst.n() {
        total += utility(inst, pi, i)?;
    }
    Ok(total)
}

/// Welfare computed block-wise from the flattened graph (equal to [`social_welfare`]).
pub fn block_welfare(g: &FlattenedGraph, game: Game, pi: &Partition) -> Rational {
    pi.blocks()
        .iter()
        .map(|b| {
            let w = g.internal_weight(b);
            match game {
                Game::Ashg => w,
                Game::Fhg => w / Rational::from_integer(b.len().into()),
            }
        })
        .sum()
}

/// Sum of flattened weights over all pairs `(a, b)` with `a` in `a_side` and `b` in `b_side`.
pub fn cut_value(g: &FlattenedGraph, a_side: &[usize], b_side: &[usize]) -> Result<Rational> {
    if a_side.is_empty() || b_side.is_empty() {
        return Err(Error::Argument("cut sides must be non-empty".into()));
    }
    if let Some(a) = a_side.iter().find(|a| b_side.contains(a)) {
        return Err(Error::Argument(format!("agent {} is on both sides of the cut", a + 1)));
    }
    if let Some(a) = a_side.iter().chain(b_side).find(|&&a| a >= g.n()) {
        return Err(Error::Argument(format!("agent {} is out of range", a + 1)));
    }
    let mut total = rational::zero();
    for &a in a_side {
        for &b in b_side {
            total += g.weight(a, b);
        }
    }
    Ok(total)
}

/// `(positive neighbours, negative neighbours)` of agent `i` by its outgoing weights.
pub fn neighbors(inst: &Instance, i: usize) -> (Vec<usize>, Vec<usize>) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for j in (0..inst.n()).filter(|&j| j != i) {
        let w = inst.weight(i, j);
        if w.is_positive() {
            pos.push(j);
        } else if w.is_negative() {
            neg.push(j);
        }
    }
    (pos, neg)
}

/// Bell numbers `B(0..=n)`.
pub fn bell_numbers(n: usize) -> Vec<u128> {
    // Bell triangle.
    let mut bells = vec![1u128];
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        bells.push(next[0]);
        row = next;
    }
    bells
}

/// Every set partition of `0..n`, in restricted-growth-string order.
pub fn enumerate_partitions(n: usize) -> Result<PartitionIter> {
    enumerate_partitions_capped(n, ORACLE_CAP)
}

pub fn enumerate_partitions_capped(n: usize, cap: usize) -> Result<PartitionIter> {
    if n > cap {
        return Err(Error::capacity("partition enumeration (agents)", n as u128, cap as u128));
    }
    Ok(PartitionIter::new(n))
}

/// Iterates restricted growth strings `a` with `a[0] = 0` and
/// `a[k] <= 1 + max(a[..k])`, the lexicographic order of those strings.
#[derive(Debug, Clone)]
pub struct PartitionIter {
    rgs: Vec<usize>,
    // prefix maxima: max[k] = max(rgs[..=k])
    max: Vec<usize>,
    done: bool,
}

impl PartitionIter {
    fn new(n: usize) -> Self {
        PartitionIter {
            rgs: vec![0; n],
            max: vec![0; n],
            done: false,
        }
    }

    fn advance(&mut self) {
        let n = self.rgs.len();
        let mut k = n;
        while k > 1 {
            k -= 1;
            if self.rgs[k] <= self.max[k - 1] {
                self.rgs[k] += 1;
                self.max[k] = self.max[k - 1].max(self.rgs[k]);
                for t in k + 1..n {
                    self.rgs[t] = 0;
                    self.max[t] = self.max[k];
                }
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if self.rgs.is_empty() {
            self.done = true;
            return Some(Partition { blocks: vec![] });
        }
        let p = Partition::from_labels(&self.rgs);
        self.advance();
        Some(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio, zero};
    use std::collections::HashSet;

    fn fig1() -> Instance {
        Instance::new(
            Game::Ashg,
            WeightClass::Arbitrary,
            vec![vec![zero(), int(1)], vec![ratio(-1, 10), zero()]],
        )
        .unwrap()
    }

    fn chain4(game: Game) -> Instance {
        // w_12 = 3, w_23 = 4, w_34 = 3; reverse arcs zero.
        let mut w = vec![vec![zero(); 4]; 4];
        w[0][1] = int(3);
        w[1][2] = int(4);
        w[2][3] = int(3);
        Instance::new(game, WeightClass::Arbitrary, w).unwrap()
    }

    #[test]
    fn utilities_on_fig1() {
        let inst = fig1();
        let grand = Partition::grand(2);
        assert_eq!(ashg_utility(&inst, &grand, 0).unwrap(), int(1));
        assert_eq!(ashg_utility(&inst, &grand, 1).unwrap(), ratio(-1, 10));
        assert_eq!(fhg_utility(&inst, &grand, 0).unwrap(), ratio(1, 2));
        let single = Partition::singletons(2);
        assert_eq!(ashg_utility(&inst, &single, 0).unwrap(), zero());
        assert_eq!(fhg_utility(&inst, &single, 1).unwrap(), zero());
    }

    #[test]
    fn fhg_utility_divides_by_size() {
        let mut w = vec![vec![zero(); 3]; 3];
        w[0][1] = int(1);
        w[0][2] = int(1);
        let inst = Instance::new(Game::Fhg, WeightClass::Arbitrary, w).unwrap();
        assert_eq!(fhg_utility(&inst, &Partition::grand(3), 0).unwrap(), ratio(2, 3));
    }

    #[test]
    fn welfare_examples() {
        let inst = fig1();
        assert_eq!(social_welfare(&inst, &Partition::grand(2)).unwrap(), ratio(9, 10));
        assert_eq!(social_welfare(&inst, &Partition::singletons(2)).unwrap(), zero());
        let fhg = chain4(Game::Fhg);
        let pi = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(social_welfare(&fhg, &pi).unwrap(), int(3));
    }

    #[test]
    fn invalid_partitions_are_structural_errors() {
        assert!(matches!(Partition::new(3, vec![vec![0, 1]]), Err(Error::Structural(_))));
        assert!(matches!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]), Err(Error::Structural(_))));
        assert!(matches!(Partition::new(2, vec![vec![0, 2], vec![1]]), Err(Error::Structural(_))));
        let inst = fig1();
        let wrong = Partition::grand(3);
        assert!(matches!(social_welfare(&inst, &wrong), Err(Error::Structural(_))));
    }

    #[test]
    fn canonical_encoding() {
        let p = Partition::new(4, vec![vec![3, 1], vec![2], vec![0]]).unwrap();
        assert_eq!(p.blocks(), &[vec![0], vec![1, 3], vec![2]]);
        assert_eq!(p.to_string(), "{{1},{2,4},{3}}");
        assert_eq!(p.coalition_of(3), &[1, 3]);
    }

    #[test]
    fn flatten_examples() {
        let g = flatten(&fig1());
        assert_eq!(g.weight(0, 1), &ratio(9, 10));
        assert_eq!(g.weight(1, 0), &ratio(9, 10));
        let z = Instance::zero(Game::Ashg, WeightClass::Arbitrary, 3).unwrap();
        assert!(flatten(&z).is_zero());
        let class = WeightClass::duplex(int(3)).unwrap();
        let d = Instance::new(Game::Ashg, class, vec![vec![zero(), int(-3)], vec![int(1), zero()]]).unwrap();
        assert_eq!(flatten(&d).weight(0, 1), &int(-2));
    }

    #[test]
    fn cut_examples() {
        let g = flatten(&fig1());
        assert_eq!(cut_value(&g, &[0], &[1]).unwrap(), ratio(9, 10));
        // duplex x = 3: agent 1 declares (-3, 1), the others declare 1 everywhere.
        let class = WeightClass::duplex(int(3)).unwrap();
        let w = vec![
            vec![zero(), int(-3), int(1)],
            vec![int(1), zero(), int(1)],
            vec![int(1), int(1), zero()],
        ];
        let g = flatten(&Instance::new(Game::Ashg, class, w).unwrap());
        assert_eq!(g.weight(0, 1), &int(-2));
        assert_eq!(g.weight(0, 2), &int(2));
        assert_eq!(cut_value(&g, &[1, 2], &[0]).unwrap(), zero());
        let z = flatten(&Instance::zero(Game::Ashg, WeightClass::Arbitrary, 3).unwrap());
        assert_eq!(cut_value(&z, &[0, 1], &[2]).unwrap(), zero());
        assert!(matches!(cut_value(&z, &[0, 1], &[1]), Err(Error::Argument(_))));
    }

    #[test]
    fn neighbor_sets() {
        let w = vec![
            vec![zero(), int(1), int(-3)],
            vec![zero(), zero(), zero()],
            vec![int(-3), int(-3), zero()],
        ];
        let inst = Instance::new(Game::Ashg, WeightClass::Arbitrary, w).unwrap();
        assert_eq!(neighbors(&inst, 0), (vec![1], vec![2]));
        assert_eq!(neighbors(&inst, 1), (vec![], vec![]));
        assert_eq!(neighbors(&inst, 2), (vec![], vec![0, 1]));
    }

    #[test]
    fn partition_counts_match_bell_numbers() {
        let bell = bell_numbers(8);
        assert_eq!(&bell[..6], &[1, 1, 2, 5, 15, 52]);
        for n in 1..=8 {
            let all: Vec<Partition> = enumerate_partitions(n).unwrap().collect();
            assert_eq!(all.len() as u128, bell[n], "n = {n}");
            let distinct: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), all.len());
            for p in &all {
                assert_eq!(Partition::new(n, p.blocks().to_vec()).unwrap(), *p);
            }
        }
        assert!(matches!(enumerate_partitions(11), Err(Error::Capacity { .. })));
    }

    #[test]
    fn enumeration_order_is_restricted_growth() {
        let all: Vec<String> = enumerate_partitions(3).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(
            all,
            ["{{1,2,3}}", "{{1,2},{3}}", "{{1,3},{2}}", "{{1},{2,3}}", "{{1},{2},{3}}"]
        );
    }

    #[test]
    fn class_membership() {
        let d = WeightClass::duplex(ratio(3, 2)).unwrap();
        assert!(d.admits(&ratio(-3, 2)) && d.admits(&zero()) && d.admits(&int(1)));
        assert!(!d.admits(&int(-1)));
        assert!(WeightClass::Bounded.admits(&int(-1)) && !WeightClass::Bounded.admits(&ratio(3, 2)));
        assert!(!WeightClass::NonNegative.admits(&ratio(-1, 100)));
        assert!(WeightClass::duplex(zero()).is_err());
        let bad = Instance::new(Game::Ashg, WeightClass::Bounded, vec![vec![zero(), int(2)], vec![zero(), zero()]]);
        assert!(matches!(bad, Err(Error::Domain(_))));
    }

    #[test]
    fn declarations_round_trip_rows() {
        let inst = chain4(Game::Ashg);
        let d = inst.declaration(1);
        assert_eq!(d.values, vec![zero(), int(4), zero()]);
        assert_eq!(d.get(2), int(4));
        assert_eq!(d.to_row(), inst.weights()[1]);
        let rebuilt = Instance::from_declarations(Game::Ashg, WeightClass::Arbitrary, &{
            let mut all = inst.others(1);
            all.push(d);
            all
        })
        .unwrap();
        assert_eq!(rebuilt, inst);
    }
}
