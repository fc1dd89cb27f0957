//! Named, deterministic mechanisms and the profile constructions used to
//! exhibit their (non-)manipulability.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::canonical::repr;
use crate::error::{Error, Result};
use crate::game::{flatten, Declaration, Game, Instance, Partition, WeightClass, ORACLE_CAP};
use crate::rational::{self, Rational};
use crate::solvers::{all_optimal_partitions, max_weight_matching, SubsetTable, TiePolicy};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MechanismKind {
    /// A welfare-maximising partition chosen by the tie policy.
    Optimal(TiePolicy),
    /// `Optimal(policy)` applied to the representative instance.
    OptimalRepr(TiePolicy),
    /// Maximum-weight matching on the representative's flattened graph;
    /// matched pairs form coalitions, everyone else stays alone.
    MatchingRepr,
    /// Optimal with grand-versus-split ties broken towards the split
    /// (duplex weights with `x = 2n - 3`).
    DuplexSplit,
    /// Optimal maximising the largest coalition (duplex weights with `x = 1`).
    DuplexLargest,
    /// Two agents, bounded weights: the unique optimum when `d12 + d21 != 0`;
    /// on a zero pair-sum, split exactly when `d12 = -1`.
    AdversarialPair,
    /// Everyone alone, whatever is declared.
    Singletons,
}

impl MechanismKind {
    /// Whether the output depends on the declarations only through the flattened graph.
    pub fn flattened_only(self) -> bool {
        !matches!(self, MechanismKind::AdversarialPair)
    }

    pub fn name(self) -> String {
        match self {
            MechanismKind::Optimal(p) => format!("opt:{p}"),
            MechanismKind::OptimalRepr(p) => format!("repr:{p}"),
            MechanismKind::MatchingRepr => "m1".into(),
            MechanismKind::DuplexSplit => "mech2".into(),
            MechanismKind::DuplexLargest => "mech3".into(),
            MechanismKind::AdversarialPair => "ex1".into(),
            MechanismKind::Singletons => "singletons".into(),
        }
    }
}

impl fmt::Display for MechanismKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for MechanismKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Some(p) = s.strip_prefix("opt:") {
            return Ok(MechanismKind::Optimal(p.parse()?));
        }
        if let Some(p) = s.strip_prefix("repr:") {
            return Ok(MechanismKind::OptimalRepr(p.parse()?));
        }
        match s {
            "opt" => Ok(MechanismKind::Optimal(TiePolicy::LexMin)),
            "m1" | "matching" => Ok(MechanismKind::MatchingRepr),
            "mech2" => Ok(MechanismKind::DuplexSplit),
            "mech3" => Ok(MechanismKind::DuplexLargest),
            "ex1" => Ok(MechanismKind::AdversarialPair),
            "singletons" => Ok(MechanismKind::Singletons),
            _ => Err(Error::Parse(format!(
                "unknown mechanism {s:?} (expected opt:<policy>, repr:<policy>, m1, mech2, mech3, ex1 or singletons)"
            ))),
        }
    }
}

/// A mechanism together with the declaration domain and game it runs on.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MechanismSpec {
    pub kind: MechanismKind,
    pub domain: WeightClass,
    pub game: Game,
}

impl MechanismSpec {
    pub fn new(kind: MechanismKind, domain: WeightClass, game: Game) -> Self {
        MechanismSpec { kind, domain, game }
    }

    /// Checks the kind's own requirements on the domain and the agent count.
    pub fn check_size(&self, n: usize) -> Result<()> {
        let need_x = |want: Rational, what: &str| -> Result<()> {
            match self.domain.duplex_x() {
                Some(x) if *x == want => Ok(()),
                _ => Err(Error::Domain(format!(
                    "{} needs duplex weights with x = {want} ({what}) for n = {n}, got {}",
                    self.kind, self.domain
                ))),
            }
        };
        match self.kind {
            MechanismKind::DuplexSplit => need_x(rational::int(2 * n as i64 - 3), "2n - 3"),
            MechanismKind::DuplexLargest => need_x(rational::one(), "1"),
            MechanismKind::AdversarialPair => {
                if self.domain != WeightClass::Bounded || n != 2 {
                    return Err(Error::Domain(format!(
                        "ex1 is defined for two agents with bounded weights, got n = {n}, {}",
                        self.domain
                    )));
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Checks `inst` against the domain and game, then runs the mechanism.
    pub fn run(&self, inst: &Instance) -> Result<Partition> {
        if inst.game() != self.game {
            return Err(Error::Domain(format!(
                "mechanism runs on {} but the instance is {}",
                self.game,
                inst.game()
            )));
        }
        let n = inst.n();
        for i in 0..n {
            for j in 0..n {
                if i != j && !self.domain.admits(inst.weight(i, j)) {
                    return Err(Error::Domain(format!(
                        "weight w({},{}) = {} is outside the mechanism's domain {}",
                        i + 1,
                        j + 1,
                        inst.weight(i, j),
                        self.domain
                    )));
                }
            }
        }
        self.check_size(n)?;
        self.run_unchecked(inst)
    }

    /// Runs without re-validating the instance (the caller guarantees it lies in the domain).
    pub(crate) fn run_unchecked(&self, inst: &Instance) -> Result<Partition> {
        let n = inst.n();
        let optimal = |inst: &Instance, policy: TiePolicy| {
            SubsetTable::build(&flatten(inst), inst.game())?.select(policy)
        };
        match self.kind {
            MechanismKind::Optimal(policy) => optimal(inst, policy),
            MechanismKind::OptimalRepr(policy) => optimal(&repr(inst), policy),
            MechanismKind::MatchingRepr => Ok(max_weight_matching(&flatten(&repr(inst))).to_partition(n)),
            MechanismKind::DuplexSplit => optimal(inst, TiePolicy::PreferSplitOfGrand),
            MechanismKind::DuplexLargest => optimal(inst, TiePolicy::PreferLargestBlock),
            MechanismKind::Singletons => Ok(Partition::singletons(n)),
            MechanismKind::AdversarialPair => {
                let (d12, d21) = (inst.weight(0, 1), inst.weight(1, 0));
                let sum = d12 + d21;
                let together = if sum.is_zero() {
                    *d12 != -rational::one()
                } else {
                    sum.is_positive()
                };
                Ok(if together { Partition::grand(2) } else { Partition::singletons(2) })
            }
        }
    }
}

impl fmt::Display for MechanismSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {} ({})", self.kind, self.domain, self.game)
    }
}

/// Other agents' declarations that make `coalition` the only coalition agent
/// `own.agent` can end up in under any welfare-optimal partition.
///
/// Arbitrary weights: flattened weight 1 for pairs inside the coalition and
/// `-(n + 1)` for every other pair; pairs involving the agent absorb its own
/// declaration, pairs among others are split evenly. Duplex weights with
/// `x = 1`: every other agent declares 1 towards members of the coalition
/// when it is a member itself, and -1 otherwise.
pub fn forcing_profile(own: &Declaration, coalition: &[usize], class: &WeightClass) -> Result<Vec<Declaration>> {
    let n = own.n();
    let i = own.agent;
    if !coalition.contains(&i) {
        return Err(Error::Argument(format!("the coalition must contain agent {}", i + 1)));
    }
    if let Some(&a) = coalition.iter().find(|&&a| a >= n) {
        return Err(Error::Argument(format!("agent {} is out of range 1..={n}", a + 1)));
    }
    let inside = |a: usize, b: usize| coalition.contains(&a) && coalition.contains(&b);
    match class {
        WeightClass::Arbitrary => {
            let big = rational::int(n as i64 + 1);
            let target = |a: usize, b: usize| if inside(a, b) { rational::one() } else { -big.clone() };
            let half = rational::ratio(1, 2);
            Ok((0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    let mut d = Declaration::new(j, vec![rational::zero(); n - 1]);
                    for k in (0..n).filter(|&k| k != j) {
                        let v = if k == i { target(i, j) - own.get(j) } else { target(j, k) * &half };
                        d.set(k, v);
                    }
                    d
                })
                .collect())
        }
        WeightClass::GeneralDuplex(x) if x.is_one() => Ok((0..n)
            .filter(|&j| j != i)
            .map(|j| {
                let values = (0..n)
                    .filter(|&k| k != j)
                    .map(|k| if inside(j, k) { rational::one() } else { -rational::one() })
                    .collect();
                Declaration::new(j, values)
            })
            .collect()),
        other => Err(Error::Domain(format!(
            "forcing profiles are built for arbitrary weights or duplex weights with x = 1, not {other}"
        ))),
    }
}

/// The open interval `((n-1)/k - 1, 2(n-1)/k - 1)` for `k = 1..=n-2`.
pub fn duplex_intervals(n: usize) -> Result<Vec<(usize, Rational, Rational)>> {
    if n < 3 {
        return Err(Error::Argument(format!("intervals need n >= 3, got {n}")));
    }
    let m = rational::int(n as i64 - 1);
    Ok((1..=n - 2)
        .map(|k| {
            let k_r = rational::int(k as i64);
            (k, &m / &k_r - rational::one(), &m * rational::int(2) / &k_r - rational::one())
        })
        .collect())
}

/// An obvious manipulation for agent 1 on duplex weights with `1 < x < 2n - 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DuplexWitness {
    pub n: usize,
    pub x: Rational,
    /// Agent 1's true declaration.
    pub truth: Declaration,
    /// Declares `-x` towards everyone.
    pub manipulation: Declaration,
    /// The counterpart profile under which truth-telling lands agent 1 in a
    /// coalition with negative utility.
    pub others: Vec<Declaration>,
    /// Number of `-x` entries in the true type, when the interval construction applies.
    pub k: Option<usize>,
    /// Agent 1's coalition under the counterpart profile and the true type.
    pub coalition: Vec<usize>,
}

impl DuplexWitness {
    pub fn truthful_instance(&self, game: Game) -> Result<Instance> {
        self.assemble(&self.truth, game)
    }

    pub fn manipulated_instance(&self, game: Game) -> Result<Instance> {
        self.assemble(&self.manipulation, game)
    }

    fn assemble(&self, own: &Declaration, game: Game) -> Result<Instance> {
        let mut all = self.others.clone();
        all.push(own.clone());
        Instance::from_declarations(game, WeightClass::duplex(self.x.clone())?, &all)
    }
}

/// Builds the profile on which truth-telling gives agent 1 negative utility
/// while declaring `-x` towards everyone guarantees 0.
///
/// When `x != n - 2`, the smallest `k` with `x` inside the `k`-th interval is
/// used: the true type holds `-x` for the first `k` others and 1 for the rest,
/// and all others declare 1 everywhere. Then the grand coalition is optimal
/// (cut `2(n-1) - (1+x)k > 0`) and agent 1's utility there is `n-1 - (1+x)k < 0`.
///
/// When `x = n - 2`, a coalition `C = {1..c}` with `c = max(3, ceil(3n/4))` is
/// used; agent 1 values the last member of `C` and all outsiders at `-x`, the
/// rest of `C` at 1. Members of `C` value `C` at 1 and outsiders at `-x`;
/// outsiders value everyone at `-x`. The builder checks with the enumeration
/// oracle that `{C, singletons}` is the unique optimum.
pub fn duplex_om_witness(n: usize, x: &Rational) -> Result<DuplexWitness> {
    if n < 3 {
        return Err(Error::Construction(format!("needs n >= 3, got {n}")));
    }
    let upper = rational::int(2 * n as i64 - 3);
    if *x <= rational::one() || *x >= upper {
        return Err(Error::Construction(format!("x = {x} is outside the open interval (1, {upper})")));
    }
    let minus_x = -x.clone();
    let one = rational::one();
    let class = WeightClass::duplex(x.clone())?;
    let manipulation = Declaration::new(0, vec![minus_x.clone(); n - 1]);

    if *x != rational::int(n as i64 - 2) {
        let k = duplex_intervals(n)?
            .into_iter()
            .find(|(_, lo, hi)| lo < x && x < hi)
            .map(|(k, _, _)| k)
            .ok_or_else(|| Error::Construction(format!("no interval contains x = {x} for n = {n}")))?;
        let values = (0..n - 1).map(|t| if t < k { minus_x.clone() } else { one.clone() }).collect();
        let truth = Declaration::new(0, values);
        let others: Vec<Declaration> = (1..n).map(|j| Declaration::new(j, vec![one.clone(); n - 1])).collect();
        let nm1 = rational::int(n as i64 - 1);
        let load = (&one + x) * rational::int(k as i64);
        let cut = &nm1 * rational::int(2) - &load;
        let utility = &nm1 - &load;
        if !cut.is_positive() || !utility.is_negative() {
            return Err(Error::Construction(format!(
                "k = {k} does not satisfy the strict bounds (cut {cut}, utility {utility})"
            )));
        }
        return Ok(DuplexWitness {
            n,
            x: x.clone(),
            truth,
            manipulation,
            others,
            k: Some(k),
            coalition: (0..n).collect(),
        });
    }

    let c = 3.max((3 * n).div_ceil(4));
    if c > n {
        return Err(Error::Construction(format!("coalition size {c} exceeds n = {n}")));
    }
    let star = c - 1;
    let in_c = |a: usize| a < c;
    let truth = Declaration::new(
        0,
        (1..n).map(|j| if in_c(j) && j != star { one.clone() } else { minus_x.clone() }).collect(),
    );
    let others: Vec<Declaration> = (1..n)
        .map(|j| {
            let values = (0..n)
                .filter(|&k| k != j)
                .map(|k| if in_c(j) && in_c(k) { one.clone() } else { minus_x.clone() })
                .collect();
            Declaration::new(j, values)
        })
        .collect();
    let witness = DuplexWitness {
        n,
        x: x.clone(),
        truth,
        manipulation,
        others,
        k: None,
        coalition: (0..c).collect(),
    };
    if n > ORACLE_CAP {
        return Err(Error::Construction(format!(
            "cannot confirm the optimum by enumeration for n = {n} > {ORACLE_CAP}"
        )));
    }
    let inst = witness.truthful_instance(Game::Ashg)?;
    debug_assert!(inst.class() == &class);
    let mut blocks = vec![witness.coalition.clone()];
    blocks.extend((c..n).map(|a| vec![a]));
    let expected = Partition::new(n, blocks)?;
    let optima = all_optimal_partitions(&inst)?;
    if optima != [expected] {
        return Err(Error::Construction(format!(
            "coalition of size {c} is not the unique optimum for n = {n}"
        )));
    }
    if !witness.truth.utility(Game::Ashg, &witness.coalition).is_negative() {
        return Err(Error::Construction("agent 1's utility in the coalition is not negative".into()));
    }
    Ok(witness)
}

/// Two agents: truth `w12 = 1, w21 = -epsilon`; agent 2 misreports `d21 = -big`
/// (`-1` under bounded weights).
pub fn fig1_family(epsilon: &Rational, big: &Rational, class: &WeightClass, game: Game) -> Result<(Instance, Instance)> {
    if !epsilon.is_positive() || *epsilon >= rational::one() {
        return Err(Error::Argument(format!("epsilon must lie in (0, 1), got {epsilon}")));
    }
    if *big <= rational::one() {
        return Err(Error::Argument(format!("big must exceed 1, got {big}")));
    }
    let report = if *class == WeightClass::Bounded {
        -rational::one()
    } else {
        -big.clone()
    };
    let z = rational::zero();
    let truth = Instance::new(
        game,
        class.clone(),
        vec![vec![z.clone(), rational::one()], vec![-epsilon.clone(), z.clone()]],
    )?;
    let manipulated = Instance::new(
        game,
        class.clone(),
        vec![vec![z.clone(), rational::one()], vec![report, z]],
    )?;
    Ok((truth, manipulated))
}
