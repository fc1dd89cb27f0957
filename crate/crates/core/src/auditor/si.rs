//! Sampled scale-invariance check: proportional inputs must give the same partition.

use std::time::Instant;

use num_traits::{Signed, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::instances_proportional;
use crate::error::{Error, Result};
use crate::game::{flatten, Instance, WeightClass};
use crate::gen::{random_instance, random_weight};
use crate::mechanisms::MechanismSpec;
use crate::rational::{self, Rational};

use super::report::{AuditReport, Condition, Witness};

pub const DEFAULT_SI_TRIALS: usize = 200;
/// Largest agent count the sampler draws.
pub const SI_MAX_AGENTS: usize = 6;

/// A witness if `a` and `b` are proportional but the mechanism separates them.
pub fn check_si_pair(spec: &MechanismSpec, a: &Instance, b: &Instance) -> Result<Option<Witness>> {
    if instances_proportional(a, b)?.is_none() {
        return Err(Error::Argument("the two instances are not proportional".into()));
    }
    let (pa, pb) = (spec.run(a)?, spec.run(b)?);
    if pa == pb {
        return Ok(None);
    }
    let agent = (0..a.n())
        .find(|&i| pa.coalition_of(i) != pb.coalition_of(i))
        .expect("different partitions differ for some agent");
    let true_type = a.declaration(agent);
    let exhibits = vec![
        Witness::exhibit(spec, &true_type, "input", a.clone())?,
        Witness::exhibit(spec, &true_type, "proportional input", b.clone())?,
    ];
    Ok(Some(Witness {
        condition: Condition::Si,
        agent,
        true_type,
        manipulation: b.declaration(agent),
        exhibits,
    }))
}

/// An instance in the same class whose flattened graph is a positive
/// multiple of `inst`'s, with each pair-sum split at random. Duplex weights
/// keep the factor at 1 and only re-split.
pub fn proportional_variant<R: Rng + ?Sized>(rng: &mut R, inst: &Instance) -> Result<Instance> {
    let n = inst.n();
    let g = flatten(inst);
    let class = inst.class().clone();
    let lambda = match &class {
        WeightClass::Arbitrary | WeightClass::NonNegative => rational::ratio(rng.gen_range(1..=7), rng.gen_range(1..=4)),
        WeightClass::Bounded => {
            let top = g.max_abs();
            if top.is_zero() {
                rational::one()
            } else {
                rational::int(2) / top * rational::ratio(rng.gen_range(1..=4), 4)
            }
        }
        WeightClass::GeneralDuplex(_) => rational::one(),
    };
    let mut w = vec![vec![rational::zero(); n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let s = g.weight(i, j) * &lambda;
            let (a, b) = split(rng, &class, &s);
            w[i][j] = a;
            w[j][i] = b;
        }
    }
    Instance::new(inst.game(), class, w)
}

fn split<R: Rng + ?Sized>(rng: &mut R, class: &WeightClass, s: &Rational) -> (Rational, Rational) {
    let t = rational::ratio(rng.gen_range(0..=4), 4);
    let a = match class {
        WeightClass::Arbitrary => random_weight(rng, class),
        WeightClass::NonNegative => s * &t,
        WeightClass::Bounded => {
            let one = rational::one();
            let lo = if s.is_positive() { s - &one } else { -one.clone() };
            let hi = if s.is_negative() { s + &one } else { one };
            &lo + (hi - &lo) * &t
        }
        WeightClass::GeneralDuplex(x) => {
            let values = [-x.clone(), rational::zero(), rational::one()];
            let options: Vec<Rational> = values
                .iter()
                .filter(|a| values.contains(&(s - *a)))
                .cloned()
                .collect();
            options.choose(rng).cloned().unwrap_or_else(rational::zero)
        }
    };
    let b = s - &a;
    (a, b)
}

/// `trials` seeded random instances, each compared with a proportional variant.
pub fn audit_si(spec: &MechanismSpec, trials: usize, seed: u64) -> Result<AuditReport> {
    let start = Instant::now();
    let sizes: Vec<usize> = (1..=SI_MAX_AGENTS).filter(|&n| spec.check_size(n).is_ok()).collect();
    if sizes.is_empty() {
        return Err(Error::Domain(format!("{spec} accepts no agent count up to {SI_MAX_AGENTS}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut profiles = 0u128;
    let mut witness = None;
    for _ in 0..trials {
        let n = *sizes.choose(&mut rng).expect("sizes is non-empty");
        let a = random_instance(&mut rng, spec.game, &spec.domain, n)?;
        let b = proportional_variant(&mut rng, &a)?;
        profiles += 2;
        if let Some(w) = check_si_pair(spec, &a, &b)? {
            witness = Some(w);
            break;
        }
    }
    let space = format!(
        "{} sampled pairs, seed {seed}, n in {}..={}",
        trials,
        sizes[0],
        sizes[sizes.len() - 1]
    );
    let mut report = AuditReport::new("si", spec, space, witness);
    report.notes = vec![if report.witness.is_some() {
        "the two exhibits are proportional inputs with different outputs".into()
    } else {
        "pass is relative to the sampled pairs".into()
    }];
    report.stats.profiles = profiles;
    report.stats.millis = start.elapsed().as_millis();
    Ok(report)
}
