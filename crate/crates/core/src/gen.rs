//! Seeded instance generators and on-disk corpora.
//!
//! A corpus directory holds one instance JSON per file plus `manifest.json`,
//! which lists the generator behind every file so the corpus can be rebuilt
//! byte for byte.

use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::game::{Declaration, Game, Instance, WeightClass};
use crate::io::{instance_from_str, instance_to_string, ClassJson};
use crate::mechanisms::{duplex_om_witness, fig1_family, forcing_profile};
use crate::rational::{self, Rational};

pub const MANIFEST: &str = "manifest.json";

/// One random score from `class`. Arbitrary and non-negative scores have
/// numerators up to 6 over denominators up to 3; bounded scores have
/// denominators up to 4.
pub fn random_weight<R: Rng + ?Sized>(rng: &mut R, class: &WeightClass) -> Rational {
    match class {
        WeightClass::Arbitrary => rational::ratio(rng.gen_range(-6..=6), rng.gen_range(1..=3)),
        WeightClass::NonNegative => rational::ratio(rng.gen_range(0..=6), rng.gen_range(1..=3)),
        WeightClass::Bounded => {
            let q = rng.gen_range(1..=4);
            rational::ratio(rng.gen_range(-q..=q), q)
        }
        WeightClass::GeneralDuplex(x) => match rng.gen_range(0..3) {
            0 => -x.clone(),
            1 => rational::zero(),
            _ => rational::one(),
        },
    }
}

pub fn random_instance<R: Rng + ?Sized>(rng: &mut R, game: Game, class: &WeightClass, n: usize) -> Result<Instance> {
    let weights = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { rational::zero() } else { random_weight(rng, class) })
                .collect()
        })
        .collect();
    Instance::new(game, class.clone(), weights)
}

/// The same `(game, class, n, seed)` always yields the same instance.
pub fn random(game: Game, class: &WeightClass, n: usize, seed: u64) -> Result<Instance> {
    random_instance(&mut ChaCha8Rng::seed_from_u64(seed), game, class, n)
}

/// A path `1 - 2 - ... - n` whose consecutive pairs have the given flattened
/// weights, split evenly between the two directions.
pub fn chain(game: Game, weights: &[Rational]) -> Result<Instance> {
    let n = weights.len() + 1;
    let half = rational::ratio(1, 2);
    let mut m = vec![vec![rational::zero(); n]; n];
    for (k, w) in weights.iter().enumerate() {
        m[k][k + 1] = w * &half;
        m[k + 1][k] = w * &half;
    }
    Instance::new(game, WeightClass::Arbitrary, m)
}

/// Arbitrary weights where agent `agent` declares 0 to everyone and the
/// others force it into `coalition` under every welfare-optimal partition.
pub fn forcing(game: Game, n: usize, agent: usize, coalition: &[usize]) -> Result<Instance> {
    if agent >= n {
        return Err(Error::Argument(format!("agent {} is out of range 1..={n}", agent + 1)));
    }
    let own = Declaration::new(agent, vec![rational::zero(); n - 1]);
    let mut decls = forcing_profile(&own, coalition, &WeightClass::Arbitrary)?;
    decls.push(own);
    Instance::from_declarations(game, WeightClass::Arbitrary, &decls)
}

/// Parameters of one corpus entry.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Generator {
    Random {
        game: Game,
        class: ClassJson,
        n: usize,
        seed: u64,
    },
    Fig1 {
        game: Game,
        class: ClassJson,
        #[serde(with = "rational::as_string")]
        epsilon: Rational,
        #[serde(with = "rational::as_string")]
        big: Rational,
    },
    Chain {
        game: Game,
        #[serde(with = "as_string_vec")]
        weights: Vec<Rational>,
    },
    DuplexWitness {
        game: Game,
        n: usize,
        #[serde(with = "rational::as_string")]
        x: Rational,
    },
    /// `agent` and `coalition` are 1-based.
    Forcing {
        game: Game,
        n: usize,
        agent: usize,
        coalition: Vec<usize>,
    },
}

impl Generator {
    /// One instance, or a truthful/manipulated pair for `fig1` and `duplex_witness`.
    pub fn generate(&self) -> Result<Vec<Instance>> {
        let one_based = |a: usize| {
            a.checked_sub(1)
                .ok_or_else(|| Error::Argument("agents are numbered from 1".into()))
        };
        match self {
            Generator::Random { game, class, n, seed } => {
                Ok(vec![random(*game, &WeightClass::try_from(class)?, *n, *seed)?])
            }
            Generator::Fig1 { game, class, epsilon, big } => {
                let (a, b) = fig1_family(epsilon, big, &WeightClass::try_from(class)?, *game)?;
                Ok(vec![a, b])
            }
            Generator::Chain { game, weights } => Ok(vec![chain(*game, weights)?]),
            Generator::DuplexWitness { game, n, x } => {
                let w = duplex_om_witness(*n, x)?;
                Ok(vec![w.truthful_instance(*game)?, w.manipulated_instance(*game)?])
            }
            Generator::Forcing { game, n, agent, coalition } => {
                let coalition = coalition.iter().map(|&a| one_based(a)).collect::<Result<Vec<_>>>()?;
                Ok(vec![forcing(*game, *n, one_based(*agent)?, &coalition)?])
            }
        }
    }
}

mod as_string_vec {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::rational::{self, Rational};

    pub fn serialize<S: Serializer>(values: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(values.iter().map(rational::format))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|t| rational::parse(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub generator: Generator,
    pub files: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct Manifest {
    pub entries: Vec<ManifestEntry>,
}

fn file_names(name: &str, count: usize) -> Vec<String> {
    match count {
        1 => vec![format!("{name}.json")],
        2 => vec![format!("{name}-truth.json"), format!("{name}-manipulated.json")],
        _ => (0..count).map(|k| format!("{name}-{k}.json")).collect(),
    }
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Argument(format!("{}: {e}", path.display()))
}

/// Generates every entry into `dir` (created if missing), appends them to the
/// directory's manifest and returns the written paths.
pub fn add_to_corpus(dir: &Path, entries: &[(String, Generator)]) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
    let mut manifest = read_manifest(dir).unwrap_or_default();
    let mut written = Vec::new();
    for (name, generator) in entries {
        if manifest.entries.iter().any(|e| &e.name == name) {
            return Err(Error::Argument(format!("corpus already has an entry named {name:?}")));
        }
        let instances = generator.generate()?;
        let files = file_names(name, instances.len());
        for (file, inst) in files.iter().zip(&instances) {
            let path = dir.join(file);
            fs::write(&path, instance_to_string(inst) + "\n").map_err(|e| io_err(&path, e))?;
            written.push(path);
        }
        manifest.entries.push(ManifestEntry {
            name: name.clone(),
            generator: generator.clone(),
            files,
        });
    }
    let path = dir.join(MANIFEST);
    let text = serde_json::to_string_pretty(&manifest).map_err(|e| Error::Parse(e.to_string()))?;
    fs::write(&path, text + "\n").map_err(|e| io_err(&path, e))?;
    Ok(written)
}

pub fn read_manifest(dir: &Path) -> Result<Manifest> {
    let path = dir.join(MANIFEST);
    let text = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

/// Every instance file in `dir` (the manifest excluded), sorted by file name.
pub fn load_corpus(dir: &Path) -> Result<Vec<(String, Instance)>> {
    let mut names: Vec<String> = fs::read_dir(dir)
        .map_err(|e| io_err(dir, e))?
        .filter_map(|entry| entry.ok())
        .map(|entry| entry.file_name().to_string_lossy().into_owned())
        .filter(|name| name.ends_with(".json") && name != MANIFEST)
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|name| {
            let path = dir.join(&name);
            let text = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
            let inst = instance_from_str(&text).map_err(|e| Error::Parse(format!("{name}: {e}")))?;
            Ok((name, inst))
        })
        .collect()
}

/// Regenerates every manifest entry and compares it with the file on disk.
pub fn verify_corpus(dir: &Path) -> Result<()> {
    for entry in read_manifest(dir)?.entries {
        let instances = entry.generator.generate()?;
        if instances.len() != entry.files.len() {
            return Err(Error::Replay(format!("entry {:?} lists the wrong number of files", entry.name)));
        }
        for (file, inst) in entry.files.iter().zip(&instances) {
            let path = dir.join(file);
            let text = fs::read_to_string(&path).map_err(|e| io_err(&path, e))?;
            if text != instance_to_string(inst) + "\n" {
                return Err(Error::Replay(format!("{file} differs from its generator")));
            }
        }
    }
    Ok(())
}
