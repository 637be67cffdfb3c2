//! The Kronecker family: straight snake graphs `G_s` (tiles `−s..s`) and
//! `H_s` (tiles `−s..s−1`) on the annulus with one marked point per
//! boundary component, the tile weights `α`, the `α`-weighted expansion
//! `r_s`, and its comparison with the valuation `v`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::x_of_matching;
use crate::snake::{label_snake, PerfectMatching, SnakeGraph};
use crate::strings::{parse_string, StringWord};
use crate::surface::{QuiverWithRelations, Triangulation};
use crate::torus::{CompatiblePair, HalfInt, QCoeff, TorusElement};
use crate::valuation::valuation_v;

const ANNULUS: &str = include_str!("../data/annulus_c11.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Family {
    G,
    H,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "G" | "g" => Ok(Family::G),
            "H" | "h" => Ok(Family::H),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

/// The annulus triangulation whose quiver is `1 ⇉ 2`.
pub fn kronecker_surface() -> Result<(Triangulation, QuiverWithRelations)> {
    let t = Triangulation::from_json(ANNULUS)?;
    let q = t.build_quiver();
    Ok((t, q))
}

/// `(1 >a> 2 <b<)^s 1` for `G_s`, and the same without the final vertex
/// for `H_s`.
pub fn family_string(family: Family, s: usize, q: &QuiverWithRelations) -> Result<StringWord> {
    let mut text = "1 >a> 2 <b< ".repeat(s);
    match family {
        Family::G => text.push('1'),
        Family::H => {
            if s == 0 {
                return Err(Error::DimensionMismatch("H_s needs s ≥ 1".into()));
            }
            text.truncate(text.len() - " <b< ".len());
        }
    }
    parse_string(q, &text)
}

#[derive(Debug, Clone)]
pub struct WeightedSnake {
    pub family: Family,
    pub s: usize,
    pub string: StringWord,
    pub graph: SnakeGraph,
}

impl WeightedSnake {
    pub fn tiles(&self) -> usize {
        self.graph.d()
    }

    /// Tile position `1..=d` to the index `−s..`.
    pub fn index(&self, pos: usize) -> i64 {
        pos as i64 - self.s as i64 - 1
    }

    pub fn weight(&self, pos: usize) -> i64 {
        self.graph.tile(pos).diagonal
    }

    pub fn alpha_tile(&self, pos: usize) -> i64 {
        let i = self.index(pos);
        match (self.family, self.weight(pos)) {
            (Family::G, 1) => i,
            (Family::H, 1) => i + 1,
            _ => -i,
        }
    }

    /// Tiles enclosed by `P △ P_−`, as positions.
    pub fn twist_set(&self, p: &PerfectMatching) -> Result<Vec<usize>> {
        self.graph.enclosed_tiles(p)
    }

    pub fn alpha_of_matching(&self, p: &PerfectMatching) -> Result<i64> {
        Ok(self.twist_set(p)?.iter().map(|&j| self.alpha_tile(j)).sum())
    }

    /// `(u, w)`: enclosed tiles of weight 1 and 2.
    pub fn dimension(&self, p: &PerfectMatching) -> Result<(i64, i64)> {
        let set = self.twist_set(p)?;
        let u = set.iter().filter(|&&j| self.weight(j) == 1).count() as i64;
        Ok((u, set.len() as i64 - u))
    }
}

pub fn build_weighted(family: Family, s: usize) -> Result<WeightedSnake> {
    let (t, q) = kronecker_surface()?;
    let string = family_string(family, s, &q)?;
    let graph = label_snake(&string, &t, &q)?;
    Ok(WeightedSnake {
        family,
        s,
        string,
        graph,
    })
}

/// `Σ_P q^{d·α(P)/2} X(P)`, with `d` the common entry of the compatibility
/// diagonal of `pair` (the same normalisation as the valuation expansion).
pub fn r_s(snake: &WeightedSnake, pair: &CompatiblePair) -> Result<TorusElement> {
    let d = pair
        .uniform_d()
        .ok_or_else(|| Error::NotCompatible(format!("non-uniform diagonal {:?}", pair.d)))?;
    let rank = pair.m();
    let mut out = TorusElement::zero(rank);
    for p in snake.graph.enumerate_matchings() {
        let a = snake.alpha_of_matching(&p)?;
        out.add_term(
            x_of_matching(&p, &snake.graph, &snake.string, rank),
            QCoeff::q_pow(HalfInt::from_twice(d * a)),
        );
    }
    Ok(out)
}

/// Per dimension vector, `Σ q^{α(P)/2}` and `Σ q^{v(P)/2}`.
pub type DimensionSums = BTreeMap<(i64, i64), (QCoeff, QCoeff)>;

pub fn dimension_sums(snake: &WeightedSnake) -> Result<DimensionSums> {
    let v = valuation_v(&snake.graph)?;
    let mut out: DimensionSums = BTreeMap::new();
    for (p, &vp) in &v {
        let a = snake.alpha_of_matching(p)?;
        let e = out.entry(snake.dimension(p)?).or_insert((QCoeff::zero(), QCoeff::zero()));
        e.0 = e.0.add(&QCoeff::q_pow(HalfInt::from_twice(a)));
        e.1 = e.1.add(&QCoeff::q_pow(HalfInt::from_twice(vp)));
    }
    Ok(out)
}

/// A dimension vector with its differing `α` and `v` sums.
pub type Mismatch = ((i64, i64), QCoeff, QCoeff);

/// The dimension vectors where the two sums differ.
pub fn equality_check(snake: &WeightedSnake) -> Result<Vec<Mismatch>> {
    Ok(dimension_sums(snake)?
        .into_iter()
        .filter(|(_, (a, v))| a != v)
        .map(|(k, (a, v))| (k, a, v))
        .collect())
}

/// Matchings where `α(P) ≠ v(P)`; the equality only holds per dimension
/// vector, not matching by matching.
pub fn pointwise_differences(snake: &WeightedSnake) -> Result<Vec<(PerfectMatching, i64, i64)>> {
    let mut out = Vec::new();
    for (p, vp) in valuation_v(&snake.graph)? {
        let a = snake.alpha_of_matching(&p)?;
        if a != vp {
            out.push((p, a, vp));
        }
    }
    Ok(out)
}

/// Restriction of `p` to the first `tiles` tiles of `smaller`, by enclosed
/// tile positions.
fn restrict(smaller: &WeightedSnake, twist: &[usize], tiles: usize) -> Result<PerfectMatching> {
    let kept: Vec<usize> = twist.iter().copied().filter(|&j| j <= tiles).collect();
    smaller.graph.matching_from_tiles(&kept)
}

/// Checks the four recursion relations between `G_s`, `H_s`, `G_{s−1}`,
/// `H_{s−1}` for `α` and `v`, and the two anchor values. Returns the first
/// failure.
pub fn recursion_lemma_checks(s: usize) -> Result<Option<String>> {
    if s == 0 {
        return Err(Error::DimensionMismatch("recursion needs s ≥ 1".into()));
    }
    let g = build_weighted(Family::G, s)?;
    let h = build_weighted(Family::H, s)?;
    let g1 = build_weighted(Family::G, s - 1)?;
    let h1 = (s >= 2).then(|| build_weighted(Family::H, s - 1)).transpose()?;
    let vg = valuation_v(&g.graph)?;
    let vh = valuation_v(&h.graph)?;
    let vg1 = valuation_v(&g1.graph)?;
    let vh1 = h1.as_ref().map(|x| valuation_v(&x.graph)).transpose()?;
    let si = s as i64;

    for (p, &v) in &vg {
        let tw = g.twist_set(p)?;
        let (u, w) = g.dimension(p)?;
        let a = g.alpha_of_matching(p)?;
        let last = g.tiles();
        let (small, vs, expect_a, expect_v) = if !tw.contains(&last) {
            // G_s without its last tile is H_s
            let r = restrict(&h, &tw, last - 1)?;
            let (ar, vr) = (h.alpha_of_matching(&r)?, vh[&r]);
            ("H_s", r, ar - u, vr - u)
        } else {
            let r = restrict(&g1, &tw, last - 2)?;
            let (ar, vr) = (g1.alpha_of_matching(&r)?, vg1[&r]);
            ("G_{s-1}", r, ar - u + w + 1, vr - u + w + 1)
        };
        if a != expect_a || v != expect_v {
            return Ok(Some(format!(
                "G_{s} twist {tw:?} via {small} {:?}: α {a} (expected {expect_a}), v {v} (expected {expect_v})",
                vs
            )));
        }
    }

    for (p, &v) in &vh {
        let tw = h.twist_set(p)?;
        let (u, w) = h.dimension(p)?;
        let a = h.alpha_of_matching(p)?;
        let last = h.tiles();
        let (expect_a, expect_v) = if tw.contains(&last) {
            let r = restrict(&g1, &tw, last - 1)?;
            (g1.alpha_of_matching(&r)? - si + w, vg1[&r] + si - w)
        } else {
            match (&h1, &vh1) {
                (Some(h1), Some(vh1)) => {
                    let r = restrict(h1, &tw, last - 2)?;
                    (h1.alpha_of_matching(&r)? - u + w, vh1[&r] + u - w)
                }
                // H_0 is empty: only P_− itself
                _ => (0, 0),
            }
        };
        if a != expect_a || v != expect_v {
            return Ok(Some(format!(
                "H_{s} twist {tw:?}: α {a} (expected {expect_a}), v {v} (expected {expect_v})"
            )));
        }
    }

    let qg = g.graph.matching_from_tiles(&[g.tiles() - 1, g.tiles()])?;
    if vg[&qg] != 1 {
        return Ok(Some(format!("G_{s}: v(Q) = {} at the last two tiles, expected 1", vg[&qg])));
    }
    let qh = h.graph.matching_from_tiles(&[h.tiles()])?;
    if vh[&qh] != si - 1 {
        return Ok(Some(format!("H_{s}: v(Q) = {} at the last tile, expected {}", vh[&qh], si - 1)));
    }
    Ok(None)
}
