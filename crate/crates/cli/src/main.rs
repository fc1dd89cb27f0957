//! `hedonom`: solve, run, audit and benchmark hedonic-game mechanisms.
//!
//! JSON goes to stdout, the aligned summary to stderr. Exit code 0 means
//! success or a pass, 2 a witness, 1 an error.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hedonom_core::auditor::{
    approximation_ratio, audit_si, AuditOptions, AuditReport, Auditor, BapxReport, DeclarationSpace, DEFAULT_SI_TRIALS,
};
use hedonom_core::canonical::repr;
use hedonom_core::game::social_welfare;
use hedonom_core::gen::{add_to_corpus, load_corpus, verify_corpus, Generator};
use hedonom_core::io::{instance_from_str, instance_to_json, partition_to_json, ClassJson};
use hedonom_core::rational::{self, Rational};
use hedonom_core::solvers::{optimal_partition, optimal_value};
use hedonom_core::{Game, Instance, MechanismKind, MechanismSpec, TiePolicy, WeightClass};

const WITNESS: u8 = 2;

#[derive(Parser)]
#[command(name = "hedonom", version, about = "Exact solvers and manipulation audits for hedonic games")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Welfare-maximising partition of an instance.
    Solve {
        #[arg(long, default_value = "lexmin")]
        policy: TiePolicy,
        /// Instance JSON file, or `-` for stdin.
        #[arg(default_value = "-")]
        input: String,
    },
    /// Run a mechanism on an instance.
    Run {
        /// opt:<policy>, repr:<policy>, m1, mech2, mech3, ex1 or singletons.
        #[arg(long)]
        mechanism: MechanismKind,
        #[arg(default_value = "-")]
        input: String,
    },
    /// Representative of the instance's proportionality class.
    Repr {
        #[arg(default_value = "-")]
        input: String,
    },
    /// Audit a mechanism for manipulability.
    Audit {
        #[command(subcommand)]
        kind: AuditKind,
    },
    /// Measure approximation ratios.
    Bench {
        #[command(subcommand)]
        kind: BenchKind,
    },
    /// Generate instances, optionally into a corpus directory.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Subcommand)]
enum AuditKind {
    /// Exhaustive not-obvious-manipulability check.
    Nom(GridArgs),
    /// Exhaustive strategyproofness check.
    Sp(GridArgs),
    /// Sampled scale-invariance check.
    Si(SiArgs),
    /// Re-run every exhibit of a saved report.
    Replay {
        #[arg(long)]
        mechanism: MechanismKind,
        #[arg(default_value = "-")]
        report: String,
    },
}

#[derive(Args)]
struct GridArgs {
    #[arg(long)]
    mechanism: MechanismKind,
    /// duplex:x=<x>, bounded:step=<s>, or <arbitrary|nonnegative|bounded>:values=<v1,v2,...>
    #[arg(long)]
    space: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "ashg")]
    game: GameArg,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    /// Cap on mechanism evaluations (default from HF_BUDGET).
    #[arg(long)]
    budget: Option<u128>,
    #[arg(long)]
    no_memo: bool,
}

#[derive(Args)]
struct SiArgs {
    #[arg(long)]
    mechanism: MechanismKind,
    /// Weight class to sample from: arbitrary, nonnegative, bounded or duplex:x=<x>.
    #[arg(long, default_value = "arbitrary")]
    class: String,
    #[arg(long, value_enum, default_value = "ashg")]
    game: GameArg,
    #[arg(long, default_value_t = DEFAULT_SI_TRIALS)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum BenchKind {
    /// Worst ratio of optimal welfare to the mechanism's welfare over a corpus.
    Bapx {
        #[arg(long)]
        mechanism: MechanismKind,
        #[arg(long)]
        corpus: PathBuf,
    },
}

#[derive(Args)]
struct Output {
    /// Add the generated files to this corpus directory instead of printing them.
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Entry name inside the corpus.
    #[arg(long, requires = "corpus")]
    name: Option<String>,
    #[arg(long, value_enum, default_value = "ashg")]
    game: GameArg,
}

#[derive(Subcommand)]
enum GenKind {
    Random {
        #[arg(long)]
        class: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        seed: u64,
        #[command(flatten)]
        out: Output,
    },
    /// The two-agent pair where the matching mechanism can be manipulated.
    Fig1 {
        #[arg(long)]
        epsilon: String,
        #[arg(long)]
        big: String,
        #[arg(long, default_value = "bounded")]
        class: String,
        #[command(flatten)]
        out: Output,
    },
    /// Path with the given consecutive edge weights.
    Chain {
        /// Comma-separated, e.g. 3,4,3.
        #[arg(long)]
        weights: String,
        #[command(flatten)]
        out: Output,
    },
    /// Truthful and manipulated duplex profiles.
    DuplexWitness {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        x: String,
        #[command(flatten)]
        out: Output,
    },
    /// A profile forcing `agent` into `coalition` (1-based).
    Forcing {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        agent: usize,
        /// Comma-separated, e.g. 1,3.
        #[arg(long)]
        coalition: String,
        #[command(flatten)]
        out: Output,
    },
    /// Regenerate a corpus from its manifest and compare byte for byte.
    Verify {
        #[arg(long)]
        corpus: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GameArg {
    Ashg,
    Fhg,
}

impl From<GameArg> for Game {
    fn from(g: GameArg) -> Game {
        match g {
            GameArg::Ashg => Game::Ashg,
            GameArg::Fhg => Game::Fhg,
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Solve { policy, input } => solve(policy, &input),
        Command::Run { mechanism, input } => run(mechanism, &input),
        Command::Repr { input } => {
            let inst = read_instance(&input)?;
            emit(&instance_to_json(&repr(&inst)));
            Ok(0)
        }
        Command::Audit { kind } => audit(kind),
        Command::Bench { kind: BenchKind::Bapx { mechanism, corpus } } => bapx(mechanism, &corpus),
        Command::Gen { kind } => gen(kind),
    }
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn read_instance(path: &str) -> Result<Instance> {
    Ok(instance_from_str(&read_input(path)?)?)
}

/// A closed stdout (e.g. piped into `head`) is not an error.
fn emit(v: &Value) {
    let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(v).expect("JSON values serialise"));
}

fn solve(policy: TiePolicy, input: &str) -> Result<u8> {
    let inst = read_instance(input)?;
    let pi = optimal_partition(&inst, policy)?;
    let welfare = social_welfare(&inst, &pi)?;
    let optimum = optimal_value(&inst)?;
    emit(&json!({
        "partition": partition_to_json(&pi),
        "welfare": rational::format(&welfare),
        "optimum": rational::format(&optimum),
    }));
    eprintln!("{:<10} {}\n{:<10} {pi}\n{:<10} {}", "policy", policy, "partition", "welfare", rational::format(&welfare));
    Ok(0)
}

fn run(kind: MechanismKind, input: &str) -> Result<u8> {
    let inst = read_instance(input)?;
    let spec = MechanismSpec::new(kind, inst.class().clone(), inst.game());
    let pi = spec.run(&inst)?;
    let welfare = social_welfare(&inst, &pi)?;
    emit(&json!({
        "mechanism": kind.name(),
        "partition": partition_to_json(&pi),
        "welfare": rational::format(&welfare),
    }));
    eprintln!("{:<10} {kind}\n{:<10} {pi}\n{:<10} {}", "mechanism", "partition", "welfare", rational::format(&welfare));
    Ok(0)
}

fn parse_class(text: &str) -> Result<WeightClass> {
    Ok(match text {
        "arbitrary" => WeightClass::Arbitrary,
        "nonnegative" => WeightClass::NonNegative,
        "bounded" => WeightClass::Bounded,
        _ => match text.strip_prefix("duplex:x=") {
            Some(x) => WeightClass::duplex(rational::parse(x)?)?,
            None => bail!("unknown weight class {text:?} (expected arbitrary, nonnegative, bounded or duplex:x=<x>)"),
        },
    })
}

fn class_json(text: &str) -> Result<ClassJson> {
    Ok(ClassJson::from(&parse_class(text)?))
}

fn report(r: &AuditReport) -> u8 {
    emit(&r.to_json());
    eprintln!("{}", r.summary());
    if r.passed() {
        0
    } else {
        WITNESS
    }
}

fn audit(kind: AuditKind) -> Result<u8> {
    match kind {
        AuditKind::Nom(a) => {
            let auditor = grid_auditor(&a)?;
            Ok(report(&auditor.audit_nom()?))
        }
        AuditKind::Sp(a) => {
            let auditor = grid_auditor(&a)?;
            Ok(report(&auditor.audit_sp()?))
        }
        AuditKind::Si(a) => {
            let spec = MechanismSpec::new(a.mechanism, parse_class(&a.class)?, a.game.into());
            Ok(report(&audit_si(&spec, a.trials, a.seed)?))
        }
        AuditKind::Replay { mechanism, report: path } => {
            let text = read_input(&path)?;
            let v: Value = serde_json::from_str(&text).context("parsing the report")?;
            let r = AuditReport::from_json(&v)?;
            let Some(w) = &r.witness else {
                eprintln!("the report holds no witness");
                return Ok(0);
            };
            let inst = &w.exhibits.first().context("the witness has no exhibits")?.instance;
            let spec = MechanismSpec::new(mechanism, inst.class().clone(), inst.game());
            w.replay(&spec)?;
            eprintln!("witness replays: {} by agent {}", w.condition, w.agent + 1);
            Ok(WITNESS)
        }
    }
}

fn grid_auditor(a: &GridArgs) -> Result<Auditor> {
    let space = DeclarationSpace::parse(&a.space, a.n)?;
    let spec = MechanismSpec::new(a.mechanism, space.class().clone(), a.game.into());
    let mut opts = AuditOptions::from_env()?.with_memo(!a.no_memo);
    if let Some(j) = a.jobs {
        opts = opts.with_jobs(j);
    }
    if let Some(b) = a.budget {
        opts = opts.with_budget(b);
    }
    Ok(Auditor::new(&spec, &space, opts)?)
}

fn bapx(kind: MechanismKind, dir: &Path) -> Result<u8> {
    let corpus = load_corpus(dir)?;
    if corpus.is_empty() {
        bail!("no instances in {}", dir.display());
    }
    let mut entries = Vec::with_capacity(corpus.len());
    for (name, inst) in &corpus {
        let spec = MechanismSpec::new(kind, inst.class().clone(), inst.game());
        entries.push(approximation_ratio(&spec, inst).with_context(|| format!("instance {name}"))?);
    }
    let mut worst = 0;
    for (k, e) in entries.iter().enumerate() {
        if e.ratio > entries[worst].ratio {
            worst = k;
        }
    }
    let r = BapxReport { mechanism: kind.name(), ratio: entries[worst].ratio.clone(), worst, entries };
    let names: Vec<String> = corpus.into_iter().map(|(n, _)| n).collect();
    emit(&r.to_json(Some(&names)));
    eprintln!("{:<10} {}\n{:<10} {}\n{:<10} {}\n{:<10} {}", "mechanism", r.mechanism, "instances", names.len(), "ratio", r.ratio, "worst", names[r.worst]);
    Ok(0)
}

fn split_list<T>(text: &str, parse: impl Fn(&str) -> Result<T>) -> Result<Vec<T>> {
    text.split(',').map(|t| parse(t.trim())).collect()
}

fn gen(kind: GenKind) -> Result<u8> {
    let (generator, out) = match kind {
        GenKind::Verify { corpus } => {
            verify_corpus(&corpus)?;
            eprintln!("{} regenerates exactly", corpus.display());
            return Ok(0);
        }
        GenKind::Random { class, n, seed, out } => {
            (Generator::Random { game: out.game.into(), class: class_json(&class)?, n, seed }, out)
        }
        GenKind::Fig1 { epsilon, big, class, out } => (
            Generator::Fig1 {
                game: out.game.into(),
                class: class_json(&class)?,
                epsilon: rational::parse(&epsilon)?,
                big: rational::parse(&big)?,
            },
            out,
        ),
        GenKind::Chain { weights, out } => (
            Generator::Chain {
                game: out.game.into(),
                weights: split_list(&weights, |t| Ok::<Rational, _>(rational::parse(t)?))?,
            },
            out,
        ),
        GenKind::DuplexWitness { n, x, out } => {
            (Generator::DuplexWitness { game: out.game.into(), n, x: rational::parse(&x)? }, out)
        }
        GenKind::Forcing { n, agent, coalition, out } => (
            Generator::Forcing {
                game: out.game.into(),
                n,
                agent,
                coalition: split_list(&coalition, |t| t.parse::<usize>().with_context(|| format!("agent {t:?}")))?,
            },
            out,
        ),
    };
    match out.corpus {
        Some(dir) => {
            let name = out.name.context("--name is required with --corpus")?;
            for f in add_to_corpus(&dir, &[(name, generator)])? {
                let _ = writeln!(std::io::stdout(), "{}", f.display());
            }
        }
        None => {
            let instances = generator.generate()?;
            let values: Vec<Value> = instances.iter().map(instance_to_json).collect();
            emit(&if values.len() == 1 { values[0].clone() } else { Value::Array(values) });
        }
    }
    Ok(0)
}
