//! Finite declaration spaces: every agent declares one value from a fixed
//! grid towards each other agent.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::game::{Declaration, WeightClass};
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpaceKind {
    /// `{-x, 0, 1}`: the whole duplex domain.
    DuplexGrid(Rational),
    /// `{-1, -1 + step, ..., 1}`.
    BoundedGrid(Rational),
    /// An explicit value list inside some class.
    ValueGrid,
}

/// `D_i` is `values^(n-1)` for every agent; `D_{-i}` is the product over the others.
///
/// Declarations are enumerated as base-`q` odometers over the value indices,
/// the highest-indexed other agent changing fastest. Profiles of the other
/// agents are enumerated the same way, agents in ascending order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeclarationSpace {
    n: usize,
    kind: SpaceKind,
    class: WeightClass,
    values: Vec<Rational>,
}

impl DeclarationSpace {
    pub fn duplex(n: usize, x: Rational) -> Result<Self> {
        let class = WeightClass::duplex(x.clone())?;
        let values = vec![-x.clone(), rational::zero(), rational::one()];
        Self::build(n, SpaceKind::DuplexGrid(x), class, values)
    }

    pub fn bounded(n: usize, step: Rational) -> Result<Self> {
        if !step.is_positive() {
            return Err(Error::Argument(format!("grid step must be positive, got {step}")));
        }
        let count = rational::int(2) / &step;
        if !count.is_integer() {
            return Err(Error::Argument(format!("grid step {step} does not divide 2")));
        }
        let count = count.to_integer();
        let points: usize = count
            .try_into()
            .map_err(|_| Error::Argument(format!("grid step {step} is too fine")))?;
        let values = (0..=points)
            .map(|k| -rational::one() + &step * rational::int(k as i64))
            .collect();
        Self::build(n, SpaceKind::BoundedGrid(step), WeightClass::Bounded, values)
    }

    /// An explicit grid; every value must belong to `class`.
    pub fn values(n: usize, class: WeightClass, values: Vec<Rational>) -> Result<Self> {
        if let Some(v) = values.iter().find(|v| !class.admits(v)) {
            return Err(Error::Domain(format!("grid value {v} is not in class {class}")));
        }
        Self::build(n, SpaceKind::ValueGrid, class, values)
    }

    fn build(n: usize, kind: SpaceKind, class: WeightClass, mut values: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("a declaration space needs at least one agent".into()));
        }
        values.sort();
        values.dedup();
        if values.is_empty() {
            return Err(Error::Argument("a declaration grid needs at least one value".into()));
        }
        if values.len() > u8::MAX as usize {
            return Err(Error::capacity("grid values", values.len() as u128, u8::MAX as u128));
        }
        Ok(DeclarationSpace { n, kind, class, values })
    }

    /// Parses `duplex:x=3`, `bounded:step=1/2`, or `<class>:values=v1,v2,...`
    /// where `<class>` is `arbitrary`, `nonnegative` or `bounded`.
    pub fn parse(text: &str, n: usize) -> Result<Self> {
        let (head, tail) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("space {text:?} must look like kind:param=value")))?;
        let (key, value) = tail
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("space {text:?} must look like kind:param=value")))?;
        match (head, key) {
            ("duplex", "x") => Self::duplex(n, rational::parse(value)?),
            ("bounded", "step") => Self::bounded(n, rational::parse(value)?),
            (class, "values") => {
                let class = match class {
                    "arbitrary" => WeightClass::Arbitrary,
                    "nonnegative" => WeightClass::NonNegative,
                    "bounded" => WeightClass::Bounded,
                    other => return Err(Error::Parse(format!("unknown grid class {other:?}"))),
                };
                let values = value.split(',').map(rational::parse).collect::<Result<Vec<_>>>()?;
                Self::values(n, class, values)
            }
            _ => Err(Error::Parse(format!("unknown declaration space {text:?}"))),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.kind
    }

    pub fn class(&self) -> &WeightClass {
        &self.class
    }

    /// Grid values in ascending order.
    pub fn grid(&self) -> &[Rational] {
        &self.values
    }

    /// Whether the grid is the entire declaration domain of its class.
    pub fn is_whole_domain(&self) -> bool {
        matches!(self.kind, SpaceKind::DuplexGrid(_))
            || (self.class.duplex_x().is_some() && self.values.len() == 3)
    }

    /// `|D_i|`.
    pub fn per_agent(&self) -> u128 {
        (self.values.len() as u128).saturating_pow((self.n - 1) as u32)
    }

    /// `|D_{-i}|`.
    pub fn counterparts(&self) -> u128 {
        self.per_agent().saturating_pow((self.n - 1) as u32)
    }

    /// Value indices of the `index`-th declaration (one per other agent, ascending).
    pub fn digits(&self, index: u128) -> Vec<u8> {
        let q = self.values.len() as u128;
        let mut out = vec![0u8; self.n - 1];
        let mut rest = index;
        for slot in out.iter_mut().rev() {
            *slot = (rest % q) as u8;
            rest /= q;
        }
        out
    }

    pub fn declaration(&self, agent: usize, index: u128) -> Declaration {
        let values = self.digits(index).into_iter().map(|d| self.values[d as usize].clone()).collect();
        Declaration::new(agent, values)
    }

    /// Index of a declaration whose values all lie on the grid.
    pub fn index_of(&self, decl: &Declaration) -> Option<u128> {
        let q = self.values.len() as u128;
        decl.values.iter().try_fold(0u128, |acc, v| {
            let d = self.values.binary_search(v).ok()?;
            Some(acc * q + d as u128)
        })
    }

    /// The `index`-th profile of every agent except `agent`.
    pub fn profile(&self, agent: usize, index: u128) -> Vec<Declaration> {
        let per = self.per_agent();
        let others: Vec<usize> = (0..self.n).filter(|&j| j != agent).collect();
        let mut idx = vec![0u128; others.len()];
        let mut rest = index;
        for slot in idx.iter_mut().rev() {
            *slot = rest % per;
            rest /= per;
        }
        others.iter().zip(idx).map(|(&j, k)| self.declaration(j, k)).collect()
    }

    pub fn describe(&self) -> String {
        match &self.kind {
            SpaceKind::DuplexGrid(x) => format!("duplex:x={}", rational::format(x)),
            SpaceKind::BoundedGrid(step) => format!("bounded:step={}", rational::format(step)),
            SpaceKind::ValueGrid => format!(
                "{}:values={}",
                self.class.name(),
                self.values.iter().map(rational::format).collect::<Vec<_>>().join(",")
            ),
        }
    }

    /// Whether the grid contains zero (used by callers that need the empty report).
    pub fn has_zero(&self) -> bool {
        self.values.iter().any(Zero::is_zero)
    }
}

impl fmt::Display for DeclarationSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (n = {})", self.describe(), self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn grids() {
        let d = DeclarationSpace::duplex(3, int(3)).unwrap();
        assert_eq!(d.grid(), &[int(-3), int(0), int(1)]);
        assert_eq!(d.per_agent(), 9);
        assert_eq!(d.counterparts(), 81);
        assert!(d.is_whole_domain());
        let b = DeclarationSpace::bounded(2, ratio(1, 2)).unwrap();
        assert_eq!(b.grid(), &[int(-1), ratio(-1, 2), int(0), ratio(1, 2), int(1)]);
        assert_eq!(b.counterparts(), 5);
        assert!(!b.is_whole_domain());
        assert!(DeclarationSpace::bounded(2, ratio(3, 4)).is_err());
        assert!(DeclarationSpace::values(2, WeightClass::NonNegative, vec![int(-1)]).is_err());
    }

    #[test]
    fn enumeration_order() {
        let d = DeclarationSpace::duplex(3, int(2)).unwrap();
        assert_eq!(d.declaration(0, 0).values, vec![int(-2), int(-2)]);
        assert_eq!(d.declaration(0, 1).values, vec![int(-2), int(0)]);
        assert_eq!(d.declaration(0, 3).values, vec![int(0), int(-2)]);
        let p = d.profile(1, 1);
        assert_eq!(p[0].agent, 0);
        assert_eq!(p[1].agent, 2);
        assert_eq!(p[1].values, vec![int(-2), int(0)]);
        for k in 0..d.per_agent() {
            assert_eq!(d.index_of(&d.declaration(2, k)), Some(k));
        }
    }

    #[test]
    fn parsing() {
        let s = DeclarationSpace::parse("duplex:x=3", 3).unwrap();
        assert_eq!(s.describe(), "duplex:x=3");
        let s = DeclarationSpace::parse("bounded:step=1/2", 2).unwrap();
        assert_eq!(s.grid().len(), 5);
        let s = DeclarationSpace::parse("arbitrary:values=1,-4,0,-1", 3).unwrap();
        assert_eq!(s.describe(), "arbitrary:values=-4,-1,0,1");
        assert!(DeclarationSpace::parse("duplex", 3).is_err());
        assert!(DeclarationSpace::parse("weird:values=1", 3).is_err());
    }
}
