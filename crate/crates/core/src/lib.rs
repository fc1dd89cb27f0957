//! Social-welfare mechanisms for additively separable and fractional hedonic
//! games, with exact solvers and an exhaustive manipulation auditor.

pub mod auditor;
pub mod canonical;
pub mod error;
pub mod game;
pub mod gen;
pub mod io;
pub mod mechanisms;
pub mod rational;
pub mod solvers;

pub use error::{Error, Result};
pub use mechanisms::{MechanismKind, MechanismSpec};
pub use game::{Declaration, FlattenedGraph, Game, Instance, Partition, WeightClass};
pub use rational::Rational;
pub use solvers::TiePolicy;
