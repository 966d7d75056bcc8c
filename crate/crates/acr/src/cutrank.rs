//! Exact cut-rank, average cut-rank and maximum cut-rank.
//!
//! The average is computed per connected component (the parameter is
//! additive over disjoint unions) by sweeping the subsets that contain the
//! component's first vertex and doubling, since the cut-rank function is
//! symmetric under complementation. Partial sums are exact integers, so the
//! result is bit-identical at any worker count.

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::graph::{Family, Graph, VertexSet};

/// Default cap on the size of a connected component in the subset sweep.
pub const DEFAULT_COMPONENT_CAP: usize = 24;

/// Rank over GF(2) of the bipartite adjacency block between `s` and its
/// complement. Symmetric: `cut_rank(g, s) == cut_rank(g, V \ s)`.
pub fn cut_rank(g: &Graph, s: VertexSet) -> usize {
    let comp = VertexSet::full(g.n()).bits() & !s.bits();
    let mut pivots: [u64; 64] = [0; 64];
    let mut rank = 0;
    for v in s.iter() {
        let mut row = g.adjacency_row(v) & comp;
        while row != 0 {
            let bit = row.trailing_zeros() as usize;
            if pivots[bit] == 0 {
                pivots[bit] = row;
                rank += 1;
                break;
            }
            row ^= pivots[bit];
        }
    }
    rank
}

/// Rank of the adjacency block between two disjoint vertex sets.
pub fn cut_rank_bipartite(g: &Graph, x: VertexSet, y: VertexSet) -> Result<usize> {
    if x.bits() & y.bits() != 0 {
        return Err(Error::Domain(format!("sets overlap: {x} and {y}")));
    }
    let mut pivots: [u64; 64] = [0; 64];
    let mut rank = 0;
    for v in x.iter() {
        let mut row = g.adjacency_row(v) & y.bits();
        while row != 0 {
            let bit = row.trailing_zeros() as usize;
            if pivots[bit] == 0 {
                pivots[bit] = row;
                rank += 1;
                break;
            }
            row ^= pivots[bit];
        }
    }
    Ok(rank)
}

/// Sum of cut-ranks over all `2^n` subsets, and the maximum, for one
/// connected piece (correct for any graph, but used per component).
fn sweep(g: &Graph) -> (u128, usize) {
    let n = g.n();
    if n == 0 {
        return (0, 0);
    }
    // subsets containing vertex 0: S = {0} ∪ T, T ⊆ {1..n-1}
    let half = 1u64 << (n - 1);
    const CHUNK: u64 = 1 << 14;
    let chunks: Vec<u64> = (0..half.div_ceil(CHUNK)).collect();
    let (sum, max) = chunks
        .par_iter()
        .map(|&c| {
            let lo = c * CHUNK;
            let hi = (lo + CHUNK).min(half);
            let mut sum: u128 = 0;
            let mut max = 0usize;
            for t in lo..hi {
                let s = VertexSet((t << 1) | 1);
                let r = cut_rank(g, s);
                sum += r as u128;
                max = max.max(r);
            }
            (sum, max)
        })
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1.max(b.1)));
    // complements contribute the same ranks; ∅ and V contribute 0
    (2 * sum, max)
}

fn check_component_cap(g: &Graph, cap: usize) -> Result<Vec<VertexSet>> {
    let comps = g.components();
    for &c in &comps {
        if c.len() > cap {
            return Err(Error::Capacity {
                what: "connected component size in subset sweep (split the graph or raise the cap)",
                got: c.len(),
                limit: cap,
            });
        }
    }
    Ok(comps)
}

/// Exact average cut-rank `(1/2^n) · Σ_S ρ(S)` with the default component cap.
pub fn average_cut_rank(g: &Graph) -> Result<Dyadic> {
    average_cut_rank_with_cap(g, DEFAULT_COMPONENT_CAP)
}

pub fn average_cut_rank_with_cap(g: &Graph, cap: usize) -> Result<Dyadic> {
    Ok(avg_and_max_with_cap(g, cap)?.0)
}

/// Maximum of `ρ(S)` over all subsets.
pub fn max_cut_rank(g: &Graph) -> Result<usize> {
    Ok(avg_and_max_with_cap(g, DEFAULT_COMPONENT_CAP)?.1)
}

/// Average and maximum cut-rank in one pass. Both are additive over
/// connected components: the adjacency block of any cut is block-diagonal
/// across components.
pub fn avg_and_max(g: &Graph) -> Result<(Dyadic, usize)> {
    avg_and_max_with_cap(g, DEFAULT_COMPONENT_CAP)
}

pub fn avg_and_max_with_cap(g: &Graph, cap: usize) -> Result<(Dyadic, usize)> {
    let comps = check_component_cap(g, cap)?;
    let mut avg = Dyadic::zero();
    let mut max = 0usize;
    for c in comps {
        if c.len() == 1 {
            continue;
        }
        let sub = g.induced_subgraph(c);
        let (sum, m) = sweep(&sub);
        avg = avg.add(&Dyadic::new(BigUint::from(sum), sub.n() as u32));
        max += m;
    }
    Ok((avg, max))
}

/// Closed forms for the families with known average cut-rank:
/// `K_k`, `K_{m,k}` (hence `K_{1,k}`), and `E_k`.
pub fn closed_form(family: Family) -> Result<Dyadic> {
    match family {
        Family::Complete(k) => {
            if k < 1 {
                return Err(Error::Parameter("K_k needs k >= 1".into()));
            }
            // 1 - 2^(1-k)
            Ok(Dyadic::one()
                .checked_sub_pow2(k - 1)
                .expect("k >= 1 keeps the value nonnegative"))
        }
        Family::Biclique(m, k) => {
            if m < 1 || k < 1 {
                return Err(Error::Parameter("K_{m,k} needs m,k >= 1".into()));
            }
            // (2^m - 1)(2^k - 1) / 2^(m+k-1)
            let p = ((BigUint::from(1u32) << m) - 1u32) * ((BigUint::from(1u32) << k) - 1u32);
            Ok(Dyadic::new(p, m + k - 1))
        }
        Family::Star(k) => {
            // 1 - 2^-k
            Ok(Dyadic::one()
                .checked_sub_pow2(k)
                .expect("nonnegative for k >= 0"))
        }
        Family::SubdividedStar(k) => {
            // 3/2 - 3/2^(k+2)
            Dyadic::from_ratio(3, 1)
                .checked_sub(&Dyadic::new(BigUint::from(3u32), k + 2))
                .ok_or_else(|| Error::Integrity("E_k closed form underflow".into()))
        }
        other => Err(Error::Parameter(format!(
            "no closed form for family {other:?}"
        ))),
    }
}
