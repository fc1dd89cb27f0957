//! Reference computations written from the definitions alone, sharing no
//! code with the library's solvers.

#![allow(dead_code)]

use hedonom_core::game::FlattenedGraph;
use hedonom_core::{Game, Instance, Rational};
use num_traits::Zero;

/// Every set partition of `0..n`, blocks in order of their smallest member.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(k: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if k == n {
            out.push(cur.clone());
            return;
        }
        for b in 0..cur.len() {
            cur[b].push(k);
            go(k + 1, n, cur, out);
            cur[b].pop();
        }
        cur.push(vec![k]);
        go(k + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

/// Sum over agents of their utility, straight from the weight matrix.
pub fn welfare(inst: &Instance, blocks: &[Vec<usize>]) -> Rational {
    let mut total = Rational::zero();
    for block in blocks {
        for &i in block {
            let mut u = Rational::zero();
            for &j in block {
                if i != j {
                    u += inst.weight(i, j);
                }
            }
            if inst.game() == Game::Fhg {
                u /= Rational::from_integer((block.len() as i64).into());
            }
            total += u;
        }
    }
    total
}

pub fn optimum(inst: &Instance) -> Rational {
    set_partitions(inst.n())
        .iter()
        .map(|p| welfare(inst, p))
        .max()
        .expect("at least one partition")
}

/// All welfare-maximising partitions.
pub fn optima(inst: &Instance) -> Vec<Vec<Vec<usize>>> {
    let all = set_partitions(inst.n());
    let values: Vec<Rational> = all.iter().map(|p| welfare(inst, p)).collect();
    let best = values.iter().max().expect("at least one partition").clone();
    all.into_iter().zip(values).filter(|(_, v)| *v == best).map(|(p, _)| p).collect()
}

/// Heaviest matching weight by trying, for the lowest free vertex, every
/// partner and staying unmatched.
pub fn matching_weight(g: &FlattenedGraph) -> Rational {
    fn go(g: &FlattenedGraph, free: &mut Vec<bool>) -> Rational {
        let Some(v) = free.iter().position(|&f| f) else {
            return Rational::zero();
        };
        free[v] = false;
        let mut best = go(g, free);
        for u in v + 1..g.n() {
            if free[u] {
                free[u] = false;
                let cand = g.weight(v, u) + go(g, free);
                if cand > best {
                    best = cand;
                }
                free[u] = true;
            }
        }
        free[v] = true;
        best
    }
    go(g, &mut vec![true; g.n()])
}

/// Whether some block holds `a`, `b` with `w_ab = value`.
pub fn has_internal_arc(inst: &Instance, blocks: &[Vec<usize>], value: &Rational) -> bool {
    blocks
        .iter()
        .any(|b| b.iter().any(|&i| b.iter().any(|&j| i != j && inst.weight(i, j) == value)))
}
