//! Acceptance checks: one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use hedonom_core::auditor::{
    approximation_ratio, audit_nom, audit_si, audit_sp_at, proportional_variant, AuditOptions, Auditor, Condition,
    DeclarationSpace, Ratio, Witness,
};
use hedonom_core::canonical::{proportional_completion, repr};
use hedonom_core::game::flatten;
use hedonom_core::gen::{chain, random, random_instance};
use hedonom_core::mechanisms::fig1_family;
use hedonom_core::rational::{int, ratio};
use hedonom_core::solvers::{brute_force_matching, clique_one_factorization, max_weight_matching, optimal_value};
use hedonom_core::{Declaration, Game, Instance, MechanismKind, MechanismSpec, Rational, TiePolicy, WeightClass};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("{what} took {took:.1?}, limit {limit:?}"))
}

fn game_of(k: usize) -> Game {
    if k % 2 == 0 {
        Game::Ashg
    } else {
        Game::Fhg
    }
}

fn classes() -> Vec<WeightClass> {
    vec![
        WeightClass::Arbitrary,
        WeightClass::NonNegative,
        WeightClass::Bounded,
        WeightClass::duplex(int(3)).unwrap(),
    ]
}

fn solver_equivalence() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for (c, class) in classes().iter().enumerate() {
        for k in 0..500usize {
            let n = 1 + k % 8;
            let inst = random(game_of(k / 8), class, n, (c * 100_000 + k) as u64).unwrap();
            let dp = optimal_value(&inst).map_err(|e| e.to_string())?;
            let oracle = common::optimum(&inst);
            ensure(dp == oracle, || format!("{class} n={n} seed {k}: dp {dp}, enumeration {oracle}"))?;
            count += 1;
        }
    }
    within(start, Duration::from_secs(60), "solver equivalence")?;
    Ok(format!("{count} instances agree"))
}

fn matching_correctness() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for k in 0..500usize {
        let n = 1 + k % 10;
        let g = flatten(&random_instance(&mut rng, Game::Ashg, &WeightClass::Arbitrary, n).unwrap());
        let m = max_weight_matching(&g);
        let oracle = common::matching_weight(&g);
        let brute = brute_force_matching(&g).map_err(|e| e.to_string())?;
        ensure(m.weight == oracle && brute.weight == oracle, || {
            format!("graph {k} (n={n}): blossom {}, library brute force {}, reference {oracle}", m.weight, brute.weight)
        })?;
        let mut used = BTreeSet::new();
        let mut total = Rational::from_integer(0.into());
        for &(a, b) in &m.edges {
            ensure(used.insert(a) && used.insert(b), || format!("graph {k}: edges share a vertex"))?;
            total += g.weight(a, b);
        }
        ensure(total == m.weight, || format!("graph {k}: edge weights do not sum to the reported weight"))?;
    }
    within(start, Duration::from_secs(60), "matching")?;
    Ok("500 graphs agree".into())
}

fn m1(class: &WeightClass, game: Game) -> MechanismSpec {
    MechanismSpec::new(MechanismKind::MatchingRepr, class.clone(), game)
}

fn approximation_bounds() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let classes = classes();
    let mut worst = [Ratio::Finite(int(0)), Ratio::Finite(int(0))];
    for k in 0..500usize {
        let n = 1 + k % 8;
        let game = game_of(k / 8);
        let class = &classes[k % classes.len()];
        let inst = random_instance(&mut rng, game, class, n).unwrap();
        let entry = approximation_ratio(&m1(class, game), &inst).map_err(|e| e.to_string())?;
        let bound = if game == Game::Ashg { int(n as i64) } else { int(2) };
        ensure(entry.ratio <= Ratio::Finite(bound.clone()), || {
            format!("{game} {class} n={n}: opt {} vs welfare {} exceeds bound {bound}", entry.optimum, entry.welfare)
        })?;
        let slot = &mut worst[(game == Game::Fhg) as usize];
        if entry.ratio > *slot {
            *slot = entry.ratio;
        }
    }
    let w = [int(3), int(4), int(3)];
    let ashg = approximation_ratio(&m1(&WeightClass::Arbitrary, Game::Ashg), &chain(Game::Ashg, &w).unwrap())
        .map_err(|e| e.to_string())?;
    let fhg = approximation_ratio(&m1(&WeightClass::Arbitrary, Game::Fhg), &chain(Game::Fhg, &w).unwrap())
        .map_err(|e| e.to_string())?;
    ensure(ashg.ratio == Ratio::Finite(ratio(10, 6)), || format!("ASHG chain ratio {}", ashg.ratio))?;
    ensure(fhg.ratio == Ratio::Finite(int(1)), || format!("FHG chain ratio {}", fhg.ratio))?;
    Ok(format!(
        "500 instances within bounds (largest ratio ASHG {}, FHG {}); chain {} and {}",
        worst[0], worst[1], ashg.ratio, fhg.ratio
    ))
}

fn factorization() -> Outcome {
    for k in 2..=12usize {
        let rounds = clique_one_factorization(k).map_err(|e| e.to_string())?;
        let want = if k % 2 == 0 { k - 1 } else { k };
        ensure(rounds.len() == want, || format!("k={k}: {} rounds, expected {want}", rounds.len()))?;
        let mut edges = BTreeSet::new();
        for round in &rounds {
            let mut seen = BTreeSet::new();
            for &(a, b) in round {
                ensure(a < b && b < k && seen.insert(a) && seen.insert(b), || format!("k={k}: round is not a matching"))?;
                ensure(edges.insert((a, b)), || format!("k={k}: edge ({a},{b}) repeated"))?;
            }
        }
        ensure(edges.len() == k * (k - 1) / 2, || format!("k={k}: {} edges covered", edges.len()))?;
    }
    Ok("k = 2..12 factorised".into())
}

fn repr_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let classes = [WeightClass::Arbitrary, WeightClass::NonNegative, WeightClass::Bounded];
    for k in 0..200usize {
        let n = 1 + k % 6;
        let class = &classes[k % 3];
        let game = game_of(k / 3);
        let a = random_instance(&mut rng, game, class, n).unwrap();
        let b = proportional_variant(&mut rng, &a).map_err(|e| e.to_string())?;
        let ra = repr(&a);
        ensure(repr(&ra) == ra, || format!("pair {k}: repr is not idempotent"))?;
        ensure(ra == repr(&b), || format!("pair {k}: proportional inputs have different representatives"))?;
        let spec = m1(class, game);
        let (x, y) = (
            approximation_ratio(&spec, &a).map_err(|e| e.to_string())?,
            approximation_ratio(&spec, &b).map_err(|e| e.to_string())?,
        );
        ensure(x.ratio == y.ratio, || format!("pair {k}: ratios {} and {}", x.ratio, y.ratio))?;
    }
    for (class, game) in [(WeightClass::Arbitrary, Game::Ashg), (WeightClass::Bounded, Game::Fhg)] {
        let report = audit_si(&m1(&class, game), 200, 17).map_err(|e| e.to_string())?;
        ensure(report.passed(), || format!("SI audit on {class}: {}", report.summary()))?;
    }
    Ok("200 proportional pairs share repr and ratio; SI audits pass".into())
}

fn replay_and_confirm(spec: &MechanismSpec, space: &DeclarationSpace, w: &Witness) -> Result<(), String> {
    let aud = Auditor::new(spec, space, AuditOptions::default()).map_err(|e| e.to_string())?;
    aud.confirm(w).map_err(|e| e.to_string())?;
    let back = Witness::from_json(&w.to_json()).map_err(|e| e.to_string())?;
    back.replay(spec).map_err(|e| e.to_string())
}

fn adversarial_examples() -> Outcome {
    let spec = MechanismSpec::new(MechanismKind::AdversarialPair, WeightClass::Bounded, Game::Ashg);
    let space = DeclarationSpace::bounded(2, ratio(1, 2)).unwrap();
    let report = audit_nom(&spec, &space, AuditOptions::default()).map_err(|e| e.to_string())?;
    let w = report.witness.as_ref().ok_or("AdversarialPair passed")?;
    ensure(w.condition == Condition::NomInf && w.manipulation.values == vec![int(-1)], || report.summary())?;
    replay_and_confirm(&spec, &space, w)?;

    let x = int(3);
    let spec = MechanismSpec::new(
        MechanismKind::Optimal(TiePolicy::AdversarialGrand),
        WeightClass::duplex(x.clone()).unwrap(),
        Game::Ashg,
    );
    let space = DeclarationSpace::duplex(3, x).unwrap();
    let report = audit_nom(&spec, &space, AuditOptions::default()).map_err(|e| e.to_string())?;
    let g = report.witness.as_ref().ok_or("AdversarialGrand passed")?;
    ensure(
        g.condition == Condition::NomInf && g.agent == 0 && g.true_type.values == vec![int(-3), int(1)],
        || report.summary(),
    )?;
    replay_and_confirm(&spec, &space, g)?;
    Ok(format!(
        "pair: agent 1 true {} reports {}; grand-biased: true (-3, 1) reports ({})",
        w.true_type.values[0],
        w.manipulation.values[0],
        g.manipulation.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
    ))
}

fn duplex_spec(kind: MechanismKind, x: &Rational) -> MechanismSpec {
    MechanismSpec::new(kind, WeightClass::duplex(x.clone()).unwrap(), Game::Ashg)
}

/// Sub-claim lines, plus every (declaration, coalition) missing from a coalition set.
fn duplex_sweep() -> Result<(Vec<String>, Vec<(Declaration, Vec<usize>)>, usize), String> {
    let mut n4_time = Duration::ZERO;
    let mut lines = Vec::new();
    let cases: Vec<(usize, Vec<Rational>)> = vec![
        (3, vec![ratio(3, 2), int(2), ratio(5, 2), int(3), int(4)]),
        (4, vec![int(2), int(3), int(5), int(6)]),
    ];
    let mut audit = |n: usize, kind: MechanismKind, x: &Rational| -> Result<hedonom_core::auditor::AuditReport, String> {
        let start = Instant::now();
        let spec = duplex_spec(kind, x);
        let space = DeclarationSpace::duplex(n, x.clone()).unwrap();
        let r = audit_nom(&spec, &space, AuditOptions::default()).map_err(|e| e.to_string())?;
        if let Some(w) = &r.witness {
            w.replay(&spec).map_err(|e| e.to_string())?;
        }
        if n == 4 {
            n4_time += start.elapsed();
        }
        Ok(r)
    };
    for (n, xs) in &cases {
        let boundary = int(2 * *n as i64 - 3);
        for x in xs {
            if *x > boundary {
                for p in TiePolicy::ALL {
                    let r = audit(*n, MechanismKind::Optimal(p), x)?;
                    ensure(r.passed(), || format!("n={n} x={x} {p}: expected pass\n{}", r.summary()))?;
                }
                lines.push(format!("n={n} x={x}: all policies pass"));
            } else if *x == boundary {
                let split = audit(*n, MechanismKind::DuplexSplit, x)?;
                ensure(split.passed(), || format!("n={n} x={x} split-biased: expected pass\n{}", split.summary()))?;
                let grand = audit(*n, MechanismKind::Optimal(TiePolicy::AdversarialGrand), x)?;
                ensure(!grand.passed(), || format!("n={n} x={x} grand-biased: expected a witness"))?;
                lines.push(format!("n={n} x={x}: split-biased passes, grand-biased fails"));
            } else {
                let star = vec![-x.clone(); n - 1];
                for p in TiePolicy::ALL {
                    let r = audit(*n, MechanismKind::Optimal(p), x)?;
                    let w = r.witness.as_ref().ok_or_else(|| format!("n={n} x={x} {p}: expected a witness"))?;
                    ensure(w.manipulation.values == star, || {
                        format!("n={n} x={x} {p}: manipulation is not all -x\n{}", r.summary())
                    })?;
                }
                lines.push(format!("n={n} x={x}: every policy manipulable by all -x"));
            }
        }
    }
    let one = int(1);
    let mut misses = Vec::new();
    let mut checked = 0;
    for n in 2..=4usize {
        let start = Instant::now();
        let spec = duplex_spec(MechanismKind::DuplexLargest, &one);
        let space = DeclarationSpace::duplex(n, one.clone()).unwrap();
        let aud = Auditor::new(&spec, &space, AuditOptions::default()).map_err(|e| e.to_string())?;
        let r = aud.audit_nom().map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("n={n} x=1 largest-block: expected pass\n{}", r.summary()))?;
        for i in 0..n {
            let full: BTreeSet<Vec<usize>> = (0u32..1 << n)
                .filter(|m| m & (1 << i) != 0)
                .map(|m| (0..n).filter(|&a| m & (1 << a) != 0).collect())
                .collect();
            for d in 0..space.per_agent() {
                let decl = space.declaration(i, d);
                let coal = aud.coal_set(&decl).map_err(|e| e.to_string())?;
                checked += 1;
                for c in full.difference(&coal) {
                    misses.push((decl.clone(), c.clone()));
                }
            }
        }
        if n == 4 {
            n4_time += start.elapsed();
        }
    }
    lines.push("x=1: largest-block passes NOM for n = 2..4".into());
    ensure(n4_time < Duration::from_secs(600), || format!("n=4 audits took {n4_time:.1?}"))?;
    lines.push(format!("n=4 audits {n4_time:.1?}"));
    Ok((lines, misses, checked))
}

fn duplex_criterion() -> Status {
    match duplex_sweep() {
        Err(why) => Status::Fail(why),
        Ok((lines, misses, checked)) if misses.is_empty() => {
            Status::Pass(format!("{}; full coalition sets for all {checked} declarations", lines.join("; ")))
        }
        Ok((lines, misses, checked)) => {
            let describe = |(d, c): &(Declaration, Vec<usize>)| {
                let row: Vec<String> = d.values.iter().map(|v| v.to_string()).collect();
                format!("n={} agent {} declaring ({}) never reaches {:?}", d.n(), d.agent + 1, row.join(","), one_based(c))
            };
            // Each missing coalition leaves out some j the agent rates 1: then
            // w_ij + w_ji >= 0, j joins at no loss, and the largest-block rule takes the larger block.
            let unexplained: Vec<String> = misses
                .iter()
                .filter(|(d, c)| !(0..d.n()).any(|j| !c.contains(&j) && d.get(j) == int(1)))
                .map(describe)
                .collect();
            if !unexplained.is_empty() {
                return Status::Fail(format!("{}; unexplained misses:\n  {}", lines.join("; "), unexplained.join("\n  ")));
            }
            Status::Unattainable(format!(
                "{}; coalition sets are not full in {} (declaration, coalition) cases over {checked} declarations, \
                 each leaving out an agent rated 1 by the declarer:\n  {}",
                lines.join("; "),
                misses.len(),
                misses.iter().map(describe).collect::<Vec<_>>().join("\n  ")
            ))
        }
    }
}

fn one_based(c: &[usize]) -> Vec<usize> {
    c.iter().map(|a| a + 1).collect()
}

/// Agent 1 declares `-x` towards agent 2 and 1 towards the rest; everyone else declares 1.
fn tie_instance(n: usize, x: &Rational) -> Instance {
    let mut w = vec![vec![int(1); n]; n];
    for (i, row) in w.iter_mut().enumerate() {
        row[i] = int(0);
    }
    w[0][1] = -x.clone();
    Instance::new(Game::Ashg, WeightClass::duplex(x.clone()).unwrap(), w).unwrap()
}

fn negative_arcs() -> Outcome {
    let x = int(6);
    let class = WeightClass::duplex(x.clone()).unwrap();
    for k in 0..300u64 {
        let inst = random(Game::Ashg, &class, 4, 8000 + k).unwrap();
        for p in common::optima(&inst) {
            ensure(!common::has_internal_arc(&inst, &p, &-x.clone()), || {
                format!("seed {}: optimum {p:?} holds a -6 arc", 8000 + k)
            })?;
        }
    }
    let x = int(5);
    let inst = tie_instance(4, &x);
    let split = duplex_spec(MechanismKind::DuplexSplit, &x).run(&inst).map_err(|e| e.to_string())?;
    let grand = duplex_spec(MechanismKind::Optimal(TiePolicy::AdversarialGrand), &x)
        .run(&inst)
        .map_err(|e| e.to_string())?;
    let neg = -x.clone();
    ensure(!common::has_internal_arc(&inst, split.blocks(), &neg), || format!("split-biased output {split}"))?;
    ensure(common::has_internal_arc(&inst, grand.blocks(), &neg), || format!("grand-biased output {grand}"))?;
    Ok(format!("300 instances clean at x=6; at x=5 split-biased {split}, grand-biased {grand}"))
}

fn fig1_sp() -> Outcome {
    let spec = m1(&WeightClass::Bounded, Game::Ashg);
    let (truth, _) = fig1_family(&ratio(1, 2), &int(100), &WeightClass::Bounded, Game::Ashg).map_err(|e| e.to_string())?;
    let space = DeclarationSpace::bounded(2, ratio(1, 2)).unwrap();
    let report = audit_sp_at(&spec, &truth, &space).map_err(|e| e.to_string())?;
    let w = report.witness.as_ref().ok_or("no SP witness")?;
    ensure(
        w.condition == Condition::Sp
            && w.agent == 1
            && w.manipulation.values == vec![int(-1)]
            && w.exhibits[0].utility == ratio(-1, 2)
            && w.exhibits[1].utility == int(0),
        || report.summary(),
    )?;
    w.replay(&spec).map_err(|e| e.to_string())?;
    Ok("agent 2 reports -1: utility -1/2 -> 0".into())
}

fn scale_invariant_grids() -> Result<Status, String> {
    let start = Instant::now();
    let arbitrary =
        DeclarationSpace::values(3, WeightClass::Arbitrary, vec![int(-4), int(-1), int(0), int(1)]).unwrap();
    let bounded = DeclarationSpace::bounded(3, int(1)).unwrap();
    let mut results = Vec::new();
    let mut witnesses = Vec::new();
    for (class, space) in [(WeightClass::Arbitrary, &arbitrary), (WeightClass::Bounded, &bounded)] {
        for kind in [MechanismKind::OptimalRepr(TiePolicy::LexMin), MechanismKind::MatchingRepr] {
            let spec = MechanismSpec::new(kind, class.clone(), Game::Ashg);
            let r = audit_nom(&spec, space, AuditOptions::default()).map_err(|e| e.to_string())?;
            results.push(format!("{kind} on {}: {}", space.describe(), r.verdict.name()));
            if let Some(w) = r.witness.clone() {
                w.replay(&spec).map_err(|e| e.to_string())?;
                witnesses.push((kind, class.clone(), r, w));
            }
        }
    }
    within(start, Duration::from_secs(300), "grid audits")?;
    if witnesses.is_empty() {
        return Ok(Status::Pass(results.join("; ")));
    }
    // Only the representative-optimal mechanism may fail, and each failure
    // must match one of the two explanations checked below.
    let mut analysis = Vec::new();
    for (kind, class, report, w) in &witnesses {
        if *kind != MechanismKind::OptimalRepr(TiePolicy::LexMin) || w.condition != Condition::NomInf {
            return Err(format!("{}\n{}", results.join("; "), report.summary()));
        }
        let spec = MechanismSpec::new(*kind, class.clone(), Game::Ashg);
        let worst = &w.exhibits[0];
        match class {
            WeightClass::Arbitrary => {
                // Off the grid, completing the truthful worst profile for the
                // manipulation reproduces the same outcome.
                let others = worst.instance.others(w.agent);
                let done = proportional_completion(class, &w.true_type, &w.manipulation, &others)
                    .map_err(|e| e.to_string())?;
                let mut decls = done.others.clone();
                decls.push(w.manipulation.clone());
                let inst = Instance::from_declarations(Game::Ashg, class.clone(), &decls).map_err(|e| e.to_string())?;
                let out = spec.run(&inst).map_err(|e| e.to_string())?;
                let u = w.true_type.utility(Game::Ashg, out.coalition_of(w.agent));
                ensure(u <= worst.utility, || format!("completion gives utility {u}, not <= {}", worst.utility))?;
                analysis.push(format!(
                    "the arbitrary grid is not closed under completion; off the grid the report ({}) also yields {} with utility {u}",
                    w.manipulation.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
                    out
                ));
            }
            WeightClass::Bounded => {
                // No bounded completion exists, and on a four-times finer grid
                // the manipulation still always leaves the agent alone.
                let others = worst.instance.others(w.agent);
                ensure(proportional_completion(class, &w.true_type, &w.manipulation, &others).is_err(), || {
                    "a bounded completion exists".into()
                })?;
                let fine = DeclarationSpace::bounded(3, ratio(1, 4)).unwrap();
                let coal = Auditor::new(&spec, &fine, AuditOptions::default())
                    .and_then(|a| a.coal_set(&w.manipulation))
                    .map_err(|e| e.to_string())?;
                ensure(coal.len() == 1 && coal.contains(&vec![w.agent]), || format!("coalitions {coal:?}"))?;
                analysis.push(format!(
                    "bounded weights admit no completion when the report is -1 towards a positive pair-sum; \
                     the report ({}) keeps agent {} alone on the step-1/4 grid while the truth can reach utility {}, \
                     so this is a manipulation of a scale-invariant mechanism in the bounded domain",
                    w.manipulation.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","),
                    w.agent + 1,
                    worst.utility
                ));
            }
            _ => unreachable!("only two grids are audited"),
        }
    }
    Ok(Status::Unattainable(format!(
        "{}\n  {}\n{}",
        results.join("; "),
        analysis.join("\n  "),
        witnesses.iter().map(|(_, _, r, _)| r.summary()).collect::<Vec<_>>().join("\n")
    )))
}

enum Status {
    Pass(String),
    Fail(String),
    /// The criterion fails as stated, and the check confirmed why.
    Unattainable(String),
}

fn plain(outcome: Outcome) -> Status {
    match outcome {
        Ok(detail) => Status::Pass(detail),
        Err(why) => Status::Fail(why),
    }
}

fn main() {
    let criteria: [(&str, fn() -> Status); 10] = [
        ("subset DP equals partition enumeration", || plain(solver_equivalence())),
        ("blossom matching equals brute force", || plain(matching_correctness())),
        ("matching approximation bounds", || plain(approximation_bounds())),
        ("clique one-factorization", || plain(factorization())),
        ("representative and scale invariance", || plain(repr_suite())),
        ("adversarial mechanisms are manipulable", || plain(adversarial_examples())),
        ("duplex sweep", duplex_criterion),
        ("no internal negative arcs", || plain(negative_arcs())),
        ("matching is not strategyproof", || plain(fig1_sp())),
        ("representative mechanisms on grids", || scale_invariant_grids().unwrap_or_else(Status::Fail)),
    ];
    let (mut passed, mut failed, mut unattainable) = (0, 0, 0);
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let status = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Status::Fail(
                e.downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panicked".into()),
            )
        });
        let took = start.elapsed();
        match status {
            Status::Pass(detail) => {
                passed += 1;
                println!("PASS {:>2} {name} [{took:.1?}]: {detail}", k + 1);
            }
            Status::Fail(why) => {
                failed += 1;
                println!("FAIL {:>2} {name} [{took:.1?}]: {why}", k + 1);
            }
            Status::Unattainable(why) => {
                unattainable += 1;
                println!("FAIL {:>2} {name} [{took:.1?}] (unattainable as stated, cause verified): {why}", k + 1);
            }
        }
    }
    println!(
        "{passed} passed, {unattainable} failed with a verified cause, {failed} failed unexpectedly, of {}",
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
