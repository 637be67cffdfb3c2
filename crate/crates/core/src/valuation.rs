//! The valuation `v` on perfect matchings of a snake graph and its module
//! counterpart `v_γ` on canonical submodules.
//!
//! On the matching side the counts are read straight off the snake graph.
//! On the module side they are computed from the string, the triangulation
//! and the index set alone, one local rule per edge of the snake graph that
//! can carry the label `τ_k`:
//!
//! * the side of tile `j ± 1` cut off by `x_j = τ_k` (counts `n^∓(j)`),
//! * a glue edge labeled `τ_k` between tiles `i, i+1` (attached to `i`),
//! * a side of the first (last) tile coming from `Δ_0` (`Δ_d`).
//!
//! Every `τ_k`-labeled edge falls under exactly one rule, so the rules are
//! summed rather than dispatched.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::snake::{crossing_triangles, slot_of, PerfectMatching, Role, Side, SnakeGraph};
use crate::strings::{is_canonical_submodule, Dir, StringWord};
use crate::surface::{QuiverWithRelations, Triangulation};

pub type ValuationTable<K> = BTreeMap<K, i64>;

/// `(m^−, m^+)`: diagonals labeled `tau` before and after tile `s`.
pub fn m_pm(g: &SnakeGraph, s: usize, tau: i64) -> (i64, i64) {
    let count = |r: std::ops::Range<usize>| r.filter(|&j| g.tile(j).diagonal == tau).count() as i64;
    (count(1..s), count(s + 1..g.d() + 1))
}

fn labeled_in(g: &SnakeGraph, tiles: std::ops::Range<usize>, p: &PerfectMatching, tau: i64) -> i64 {
    let mut seen = BTreeSet::new();
    for j in tiles {
        for e in g.tile_edges(j) {
            if p.contains(&e) && g.edge(e).label == tau {
                seen.insert(e);
            }
        }
    }
    seen.len() as i64
}

/// `(n^−, n^+)`: edges of `p` labeled `tau` in the subgraphs of tiles
/// `1..s-1` and `s+1..d`.
pub fn n_pm(g: &SnakeGraph, s: usize, p: &PerfectMatching, tau: i64) -> Result<(i64, i64)> {
    if s == 0 || s > g.d() || !g.can_twist(p, s) {
        return Err(Error::CannotTwist(s));
    }
    Ok((labeled_in(g, 1..s, p, tau), labeled_in(g, s + 1..g.d() + 1, p, tau)))
}

/// Whether the counterclockwise sides of tile `s` belong to `p`.
fn ccw_in(g: &SnakeGraph, s: usize, p: &PerfectMatching) -> bool {
    let tile = g.tile(s);
    Side::ALL
        .iter()
        .filter(|&&side| tile.role(side) == Role::Ccw)
        .all(|&side| p.contains(&g.edge_id(s, side)))
}

/// `Ω(p_s, P)`.
pub fn omega(g: &SnakeGraph, s: usize, p: &PerfectMatching) -> Result<i64> {
    let tau = g.tile(s).diagonal;
    let (nm, np) = n_pm(g, s, p, tau)?;
    let (mm, mp) = m_pm(g, s, tau);
    let v = np - mp - nm + mm;
    Ok(if ccw_in(g, s, p) { v } else { -v })
}

/// `v` by propagation from `v(P_−) = 0` over twists, checking every twist
/// edge and `v(P_+) = 0`.
pub fn valuation_v(g: &SnakeGraph) -> Result<ValuationTable<PerfectMatching>> {
    let start = g.minimal_matching()?;
    let mut table = BTreeMap::from([(start.clone(), 0i64)]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        let vp = table[&p];
        for s in 1..=g.d() {
            if !g.can_twist(&p, s) {
                continue;
            }
            let next = g.twist(&p, s)?;
            let vn = vp - omega(g, s, &p)?;
            match table.get(&next) {
                Some(&old) if old != vn => {
                    return Err(Error::InconsistentValuation(format!(
                        "twist on tile {s} gives {vn}, previously {old}"
                    )))
                }
                Some(_) => {}
                None => {
                    table.insert(next.clone(), vn);
                    queue.push_back(next);
                }
            }
        }
    }
    let top = g.maximal_matching()?;
    match table.get(&top) {
        Some(0) => Ok(table),
        other => Err(Error::InconsistentValuation(format!("v(P_+) = {other:?}"))),
    }
}

/// Module-side counts at one position of the string.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PositionCounts {
    /// Total attached to this position.
    pub n: i64,
    /// Only nonzero where `x_i = τ_k`.
    pub n_plus: i64,
    pub n_minus: i64,
}

/// Per-position counts of `τ_k`-labeled edges in the matching of `iset`,
/// for positions `1..=d` (index 0 of the result is position 1).
pub fn n_module(
    w: &StringWord,
    t: &Triangulation,
    q: &QuiverWithRelations,
    k: i64,
    iset: &[usize],
) -> Result<Vec<PositionCounts>> {
    if !t.is_internal(k) {
        return Err(Error::NotInternal(k));
    }
    let d = w.len();
    let x = &w.vertices;
    let delta = crossing_triangles(w, t, q)?;
    let inn = |i: usize| iset.contains(&i);
    // (ccw, cw) neighbours of x_i inside Δ
    let around = |tri: usize, arc: i64| -> Result<(i64, i64)> {
        let (_, ccw, cw) = t.rotated(tri, slot_of(t, tri, arc)?);
        Ok((ccw, cw))
    };
    let b = |v: bool| v as i64;
    let mut out = vec![PositionCounts::default(); d];
    for i in 1..=d {
        let c = &mut out[i - 1];
        if x[i - 1] == k {
            if i >= 2 {
                // side x_i of tile i-1 lies in P_− iff the letter is inverse
                c.n_minus = b((w.letters[i - 2].dir == Dir::Inverse) ^ inn(i - 1));
            }
            if i < d {
                c.n_plus = b((w.letters[i - 1].dir == Dir::Direct) ^ inn(i + 1));
            }
            c.n += c.n_minus + c.n_plus;
        } else {
            if i < d && x[i] != k {
                let tri = &t.triangles[delta[i]];
                if tri.contains(&k) {
                    c.n += b(inn(i) ^ inn(i + 1));
                }
            }
            // sides of the end tiles coming from Δ_0 and Δ_d
            for (end, tri) in [(1, delta[0]), (d, delta[d])] {
                if i != end {
                    continue;
                }
                let (ccw, cw) = around(tri, x[i - 1])?;
                if cw == k {
                    c.n += b(!inn(i));
                } else if ccw == k {
                    c.n += b(inn(i));
                }
            }
        }
    }
    Ok(out)
}

/// `(M^−, M^+, N^−, N^+)` at position `j`, where `x_j = τ_k`.
pub fn big_counts(
    w: &StringWord,
    t: &Triangulation,
    q: &QuiverWithRelations,
    j: usize,
    iset: &[usize],
) -> Result<(i64, i64, i64, i64)> {
    let d = w.len();
    if j == 0 || j > d {
        return Err(Error::DimensionMismatch(format!("position {j} outside 1..={d}")));
    }
    let k = w.vertices[j - 1];
    let counts = n_module(w, t, q, k, iset)?;
    let mm = w.vertices[..j - 1].iter().filter(|&&v| v == k).count() as i64;
    let mp = w.vertices[j..].iter().filter(|&&v| v == k).count() as i64;
    let nm = counts[j - 1].n_minus + counts[..j - 1].iter().map(|c| c.n).sum::<i64>();
    let np = counts[j - 1].n_plus + counts[j..].iter().map(|c| c.n).sum::<i64>();
    Ok((mm, mp, nm, np))
}

/// `Ω'(x_j, N)`.
pub fn omega_prime(
    w: &StringWord,
    t: &Triangulation,
    q: &QuiverWithRelations,
    j: usize,
    iset: &[usize],
) -> Result<i64> {
    let (mm, mp, nm, np) = big_counts(w, t, q, j, iset)?;
    let v = np - mp - nm + mm;
    Ok(if iset.contains(&j) { v } else { -v })
}

fn toggled(iset: &[usize], j: usize) -> Vec<usize> {
    let mut s: BTreeSet<usize> = iset.iter().copied().collect();
    if !s.remove(&j) {
        s.insert(j);
    }
    s.into_iter().collect()
}

/// `v_γ` over all canonical submodules, from `v_γ(∅) = 0` along single-index
/// steps, checking every step.
pub fn valuation_v_gamma(
    w: &StringWord,
    t: &Triangulation,
    q: &QuiverWithRelations,
) -> Result<ValuationTable<Vec<usize>>> {
    let d = w.len();
    let mut table = BTreeMap::from([(Vec::new(), 0i64)]);
    let mut queue = VecDeque::from([Vec::<usize>::new()]);
    while let Some(cur) = queue.pop_front() {
        let vc = table[&cur];
        for j in 1..=d {
            let next = toggled(&cur, j);
            if !is_canonical_submodule(w, &next) {
                continue;
            }
            // v_γ(N ∪ {j}) − v_γ(N) = Ω'(x_j, N ∪ {j})
            let vn = if next.len() > cur.len() {
                vc + omega_prime(w, t, q, j, &next)?
            } else {
                vc - omega_prime(w, t, q, j, &cur)?
            };
            match table.get(&next) {
                Some(&old) if old != vn => {
                    return Err(Error::InconsistentValuation(format!(
                        "submodule {next:?} reached with {vn}, previously {old}"
                    )))
                }
                Some(_) => {}
                None => {
                    table.insert(next.clone(), vn);
                    queue.push_back(next);
                }
            }
        }
    }
    for n in crate::strings::enumerate_canonical_submodules(w) {
        if !table.contains_key(&n) {
            return Err(Error::UnreachableSubmodule(n));
        }
    }
    Ok(table)
}
