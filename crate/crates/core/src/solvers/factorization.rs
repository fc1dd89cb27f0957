//! Round-robin 1-factorization of the complete graph.

use crate::error::{Error, Result};

/// Splits the edges of `K_k` into perfect matchings (`k` even, `k - 1` of
/// them) or near-perfect ones (`k` odd, `k` of them) with the circle method.
/// Vertices are `0..k`; each edge is `(i, j)` with `i < j`.
pub fn clique_one_factorization(k: usize) -> Result<Vec<Vec<(usize, usize)>>> {
    if k < 2 {
        return Err(Error::Argument(format!("need at least 2 vertices, got {k}")));
    }
    // For odd k, a dummy vertex k joins and its edges are dropped.
    let m = if k % 2 == 0 { k } else { k + 1 };
    let fixed = m - 1;
    let rounds = m - 1;
    let mut out = Vec::with_capacity(rounds);
    for r in 0..rounds {
        let mut round = Vec::with_capacity(m / 2);
        let mut push = |a: usize, b: usize| {
            if a < k && b < k {
                round.push((a.min(b), a.max(b)));
            }
        };
        push(fixed, r);
        for s in 1..m / 2 {
            push((r + s) % rounds, (r + rounds - s) % rounds);
        }
        round.sort_unstable();
        out.push(round);
    }
    Ok(out)
}
