//! Proportionality between flattened graphs and the representative of a
//! proportionality class.
//!
//! Two instances are proportional when their flattened graphs differ by one
//! positive factor. [`repr`] maps every member of a class to the same
//! instance: normalise the largest absolute flattened weight to 1, then put
//! each pair-sum on the lower-indexed agent's declaration.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::game::{flatten, Declaration, FlattenedGraph, Instance, WeightClass};
use crate::rational::{self, Rational};

/// `lambda > 0` such that `g = lambda * h` for the two compared graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProportionalityWitness {
    pub lambda: Rational,
}

/// Returns `lambda` with `g = lambda * h`, if any. The zero graph is
/// proportional only to itself, with `lambda = 1`.
pub fn is_proportional(g: &FlattenedGraph, h: &FlattenedGraph) -> Result<Option<ProportionalityWitness>> {
    if g.n() != h.n() {
        return Err(Error::Argument(format!("graphs have {} and {} vertices", g.n(), h.n())));
    }
    let n = g.n();
    let mut lambda: Option<Rational> = None;
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (g.weight(i, j), h.weight(i, j));
            if b.is_zero() {
                if !a.is_zero() {
                    return Ok(None);
                }
                continue;
            }
            let ratio = a / b;
            match &lambda {
                None => {
                    if !ratio.is_positive() {
                        return Ok(None);
                    }
                    lambda = Some(ratio);
                }
                Some(l) if *l != ratio => return Ok(None),
                Some(_) => {}
            }
        }
    }
    Ok(Some(ProportionalityWitness {
        lambda: lambda.unwrap_or_else(rational::one),
    }))
}

/// Whether two instances have proportional flattened graphs.
pub fn instances_proportional(a: &Instance, b: &Instance) -> Result<Option<ProportionalityWitness>> {
    is_proportional(&flatten(a), &flatten(b))
}

/// The representative instance of `inst`'s proportionality class.
///
/// The output is tagged [`WeightClass::Bounded`] (every weight lies in
/// `[-1, 1]`) and keeps the input's game. An all-zero graph is returned
/// unnormalised.
pub fn repr(inst: &Instance) -> Instance {
    let g = flatten(inst);
    let n = g.n();
    let scale = g.max_abs();
    let mut w = vec![vec![rational::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            w[i][j] = if scale.is_zero() {
                g.weight(i, j).clone()
            } else {
                g.weight(i, j) / &scale
            };
        }
    }
    Instance::new(inst.game(), WeightClass::Bounded, w).expect("normalised weights lie in [-1, 1]")
}

/// Counterpart declarations making `(alt, result)` proportional to `(own, others)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub others: Vec<Declaration>,
    /// Flattened graph of the completed profile equals `lambda` times the original.
    pub lambda: Rational,
}

/// Given `own` and an alternative `alt` for the same agent, rebuild the
/// other agents' declarations so the profile with `alt` is proportional to
/// the profile with `own`, staying inside `class`.
///
/// Arbitrary: `d'_ji = d_ij + d_ji - d'_ij`, everything else copied.
/// Non-negative: pick `lambda = 1 + max ceil(d'_ij / (d_ij + d_ji))`, set
/// `d'_ji = lambda (d_ij + d_ji) - d'_ij` and scale the rest by `lambda`.
/// Bounded: divide every pair-sum by the smallest `mu >= 1` that lets each
/// `d'_ji = s_ij / mu - d'_ij` land in `[-1, 1]`; other pairs are divided by `mu` entry-wise.
pub fn proportional_completion(
    class: &WeightClass,
    own: &Declaration,
    alt: &Declaration,
    others: &[Declaration],
) -> Result<Completion> {
    let i = own.agent;
    if alt.agent != i {
        return Err(Error::Argument("both declarations must belong to the same agent".into()));
    }
    let n = own.n();
    if alt.n() != n || others.len() + 1 != n {
        return Err(Error::Structural("declaration sizes do not match".into()));
    }
    let mut sorted: Vec<Declaration> = others.to_vec();
    sorted.sort_by_key(|d| d.agent);
    if sorted.iter().any(|d| d.agent == i || d.n() != n)
        || sorted.windows(2).any(|w| w[0].agent == w[1].agent)
    {
        return Err(Error::Structural("counterpart profile must hold every other agent once".into()));
    }
    if !own.satisfies(class) || !alt.satisfies(class) || !sorted.iter().all(|d| d.satisfies(class)) {
        return Err(Error::Domain(format!("declarations are not all in class {class}")));
    }
    let pair_sum = |j: &Declaration| own.get(j.agent) + j.get(i);

    let (lambda, mut out) = match class {
        WeightClass::Arbitrary => (rational::one(), sorted.clone()),
        WeightClass::NonNegative => {
            let mut lambda_minus_one = rational::zero();
            for j in &sorted {
                let s = pair_sum(j);
                let target = alt.get(j.agent);
                if s.is_zero() {
                    if target.is_positive() {
                        return Err(Error::Domain(format!(
                            "pair ({}, {}) has zero sum but the alternative declares {target}; no non-negative completion exists",
                            i + 1,
                            j.agent + 1
                        )));
                    }
                    continue;
                }
                let c = rational::ceil(&(target / &s));
                if c > lambda_minus_one {
                    lambda_minus_one = c;
                }
            }
            let lambda = lambda_minus_one + rational::one();
            let scaled = sorted
                .iter()
                .map(|d| Declaration::new(d.agent, d.values.iter().map(|v| v * &lambda).collect()))
                .collect();
            (lambda, scaled)
        }
        WeightClass::Bounded => {
            let mut mu = rational::one();
            for j in &sorted {
                let s = pair_sum(j);
                let t = alt.get(j.agent);
                let bound = if s.is_positive() {
                    let room = &t + rational::one();
                    if room.is_zero() {
                        return Err(infeasible_bounded(i, j.agent, &s, &t));
                    }
                    s / room
                } else if s.is_negative() {
                    let room = rational::one() - &t;
                    if room.is_zero() {
                        return Err(infeasible_bounded(i, j.agent, &s, &t));
                    }
                    -s / room
                } else {
                    continue;
                };
                if bound > mu {
                    mu = bound;
                }
            }
            let lambda = rational::one() / &mu;
            let scaled = sorted
                .iter()
                .map(|d| Declaration::new(d.agent, d.values.iter().map(|v| v * &lambda).collect()))
                .collect();
            (lambda, scaled)
        }
        WeightClass::GeneralDuplex(_) => {
            return Err(Error::Domain(
                "proportional completion is not available for general duplex weights".into(),
            ))
        }
    };

    for (orig, new) in sorted.iter().zip(out.iter_mut()) {
        let target = pair_sum(orig) * &lambda - alt.get(orig.agent);
        new.set(i, target);
    }
    debug_assert!(out.iter().all(|d| d.satisfies(class)));
    Ok(Completion { others: out, lambda })
}

fn infeasible_bounded(i: usize, j: usize, s: &Rational, t: &Rational) -> Error {
    Error::Domain(format!(
        "pair ({}, {}) has sum {s} but the alternative declares {t}; every positive rescaling pushes d'({}, {}) outside [-1, 1]",
        i + 1,
        j + 1,
        j + 1,
        i + 1
    ))
}
