//! Snake graphs of strings: tile placement and labels, perfect matchings,
//! twists, and the matching ↔ canonical-submodule correspondence.
//!
//! Each tile is the quadrilateral of the triangulation around its diagonal
//! `x_j`, formed by `Δ_{j-1}` (the triangle shared with the previous tile)
//! and `Δ_j` (shared with the next one). Read counterclockwise on the
//! surface the quadrilateral's sides are the four *slots*
//! `(Δ_j ccw, Δ_j cw, Δ_{j-1} ccw, Δ_{j-1} cw)`, where "ccw"/"cw" is the
//! side's position relative to the diagonal inside its triangle. Odd tiles
//! are drawn with the planar orientation reversed, even tiles with it
//! preserved.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::strings::{is_canonical_submodule, Dir, StringWord};
use crate::surface::{QuiverWithRelations, Triangulation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Step {
    Right,
    Up,
}

/// Planar sides, in counterclockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Side {
    S,
    E,
    N,
    W,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::S, Side::E, Side::N, Side::W];

    fn from_index(i: i64) -> Side {
        Side::ALL[i.rem_euclid(4) as usize]
    }

    fn index(self) -> i64 {
        self as i64
    }

    pub fn opposite(self) -> Side {
        Side::from_index(self.index() + 2)
    }
}

/// Position of a side relative to the diagonal inside its triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Role {
    Ccw,
    Cw,
}

/// `(tile, side)`, with glue edges named after the lower tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeId {
    pub tile: usize,
    pub side: Side,
}

impl std::fmt::Display for EdgeId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}{}", self.side, self.tile)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Tile {
    /// 1-based.
    pub index: usize,
    pub diagonal: i64,
    /// Arc labels indexed by `Side as usize`.
    pub labels: [i64; 4],
    /// Role of each planar side inside its triangle.
    pub roles: [Role; 4],
    /// `true` where the side comes from `Δ_j` (the next triangle).
    pub from_next: [bool; 4],
    /// Lower-left corner.
    pub origin: (i64, i64),
    pub reversed: bool,
}

impl Tile {
    pub fn label(&self, s: Side) -> i64 {
        self.labels[s as usize]
    }

    pub fn role(&self, s: Side) -> Role {
        self.roles[s as usize]
    }

    fn corners(&self, s: Side) -> [(i64, i64); 2] {
        let (x, y) = self.origin;
        match s {
            Side::S => [(x, y), (x + 1, y)],
            Side::E => [(x + 1, y), (x + 1, y + 1)],
            Side::N => [(x, y + 1), (x + 1, y + 1)],
            Side::W => [(x, y), (x, y + 1)],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub id: EdgeId,
    pub label: i64,
    pub ends: [(i64, i64); 2],
    /// Tiles containing the edge: one, or two for a glue edge.
    pub tiles: Vec<usize>,
}

impl Edge {
    pub fn is_glue(&self) -> bool {
        self.tiles.len() == 2
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnakeGraph {
    pub tiles: Vec<Tile>,
    pub shape: Vec<Step>,
    pub edges: Vec<Edge>,
    /// `(tile, side)` to canonical edge id.
    alias: BTreeMap<(usize, Side), EdgeId>,
}

pub type PerfectMatching = BTreeSet<EdgeId>;

/// Shape word: first step right iff the first letter is direct; equal
/// consecutive directions alternate the step, opposite ones repeat it.
pub fn snake_from_string(w: &StringWord) -> Vec<Step> {
    let mut out: Vec<Step> = Vec::with_capacity(w.letters.len());
    for (i, l) in w.letters.iter().enumerate() {
        let step = if i == 0 {
            if l.dir == Dir::Direct {
                Step::Right
            } else {
                Step::Up
            }
        } else {
            let prev = out[i - 1];
            if l.dir == w.letters[i - 1].dir {
                match prev {
                    Step::Right => Step::Up,
                    Step::Up => Step::Right,
                }
            } else {
                prev
            }
        };
        out.push(step);
    }
    out
}

/// The other triangle containing internal arc `x`.
fn other_triangle(t: &Triangulation, x: i64, not: usize) -> Result<usize> {
    t.triangles_of(x)
        .iter()
        .map(|p| p.0)
        .find(|&tri| tri != not)
        .ok_or(Error::NotInternal(x))
}

pub(crate) fn slot_of(t: &Triangulation, tri: usize, x: i64) -> Result<usize> {
    t.triangles[tri]
        .iter()
        .position(|&a| a == x)
        .ok_or(Error::NotCrossingSequence(x, x))
}

/// `Δ_0, …, Δ_d`: `Δ_j` (`1 ≤ j < d`) is the triangle of letter `j`, shared
/// by `x_j` and `x_{j+1}`; `Δ_0` and `Δ_d` are the remaining triangles at
/// the two ends (file order for a single arc).
pub fn crossing_triangles(w: &StringWord, t: &Triangulation, q: &QuiverWithRelations) -> Result<Vec<usize>> {
    let d = w.len();
    let x = &w.vertices;
    for &v in x {
        if !t.is_internal(v) {
            return Err(Error::NotInternal(v));
        }
    }
    let mut delta = vec![0usize; d + 1];
    for (i, l) in w.letters.iter().enumerate() {
        let tri = q.arrows.get(l.arrow).ok_or(Error::NotCrossingSequence(x[i], x[i + 1]))?.triangle;
        let sides = &t.triangles[tri];
        if !sides.contains(&x[i]) || !sides.contains(&x[i + 1]) {
            return Err(Error::NotCrossingSequence(x[i], x[i + 1]));
        }
        delta[i + 1] = tri;
    }
    if d == 1 {
        let places = t.triangles_of(x[0]);
        delta[0] = places[0].0;
        delta[1] = places[1].0;
    } else {
        delta[0] = other_triangle(t, x[0], delta[1])?;
        delta[d] = other_triangle(t, x[d - 1], delta[d - 1])?;
    }
    Ok(delta)
}

/// Builds and labels the snake graph of `w`.
pub fn label_snake(w: &StringWord, t: &Triangulation, q: &QuiverWithRelations) -> Result<SnakeGraph> {
    let d = w.len();
    let x = &w.vertices;
    for &v in x {
        if !t.is_internal(v) {
            return Err(Error::NotInternal(v));
        }
    }
    let delta = crossing_triangles(w, t, q)?;
    let shape = snake_from_string(w);
    let mut tiles = Vec::with_capacity(d);
    let mut origin = (0i64, 0i64);
    for j in 1..=d {
        let diag = x[j - 1];
        let (ta, tb) = (delta[j - 1], delta[j]);
        let (_, a_ccw, a_cw) = t.rotated(ta, slot_of(t, ta, diag)?);
        let (_, b_ccw, b_cw) = t.rotated(tb, slot_of(t, tb, diag)?);
        let quad = [b_ccw, b_cw, a_ccw, a_cw];
        let roles = [Role::Ccw, Role::Cw, Role::Ccw, Role::Cw];
        let reversed = j % 2 == 1;
        let sign = if reversed { -1 } else { 1 };
        // anchor one slot at a known planar side
        let (anchor_slot, anchor_side) = if j > 1 {
            let prev = x[j - 2];
            let slot = if a_ccw == prev { 3 } else { 2 };
            let side = match shape[j - 2] {
                Step::Right => Side::W,
                Step::Up => Side::S,
            };
            (slot, side)
        } else if d > 1 {
            let slot = if b_ccw == x[1] { 1 } else { 0 };
            let side = match shape[0] {
                Step::Right => Side::E,
                Step::Up => Side::N,
            };
            (slot, side)
        } else {
            (0, Side::S)
        };
        let place = |k: usize| Side::from_index(anchor_side.index() + sign * (k as i64 - anchor_slot as i64));
        let mut labels = [0; 4];
        let mut role_by_side = [Role::Ccw; 4];
        let mut from_next = [false; 4];
        for k in 0..4 {
            let s = place(k) as usize;
            labels[s] = quad[k];
            role_by_side[s] = roles[k];
            from_next[s] = k < 2;
        }
        if j < d {
            let exit_slot = if b_ccw == x[j] { 1 } else { 0 };
            let want = match shape[j - 1] {
                Step::Right => Side::E,
                Step::Up => Side::N,
            };
            if place(exit_slot) != want {
                return Err(Error::GeometricInconsistency(j));
            }
        }
        tiles.push(Tile {
            index: j,
            diagonal: diag,
            labels,
            roles: role_by_side,
            from_next,
            origin,
            reversed,
        });
        if j < d {
            match shape[j - 1] {
                Step::Right => origin.0 += 1,
                Step::Up => origin.1 += 1,
            }
        }
    }
    let mut edges = Vec::new();
    let mut alias = BTreeMap::new();
    for tile in &tiles {
        for s in Side::ALL {
            let j = tile.index;
            let glued_below = j > 1
                && match shape[j - 2] {
                    Step::Right => s == Side::W,
                    Step::Up => s == Side::S,
                };
            if glued_below {
                let prev_side = s.opposite();
                let id = EdgeId { tile: j - 1, side: prev_side };
                if tiles[j - 2].label(prev_side) != tile.label(s) {
                    return Err(Error::GeometricInconsistency(j));
                }
                alias.insert((j, s), id);
                let e: &mut Edge = edges.iter_mut().find(|e: &&mut Edge| e.id == id).unwrap();
                e.tiles.push(j);
                continue;
            }
            let id = EdgeId { tile: j, side: s };
            alias.insert((j, s), id);
            edges.push(Edge {
                id,
                label: tile.label(s),
                ends: tile.corners(s),
                tiles: vec![j],
            });
        }
    }
    edges.sort_by_key(|e| e.id);
    Ok(SnakeGraph {
        tiles,
        shape,
        edges,
        alias,
    })
}

impl SnakeGraph {
    pub fn d(&self) -> usize {
        self.tiles.len()
    }

    pub fn tile(&self, j: usize) -> &Tile {
        &self.tiles[j - 1]
    }

    pub fn edge(&self, id: EdgeId) -> &Edge {
        self.edges.iter().find(|e| e.id == id).expect("unknown edge id")
    }

    /// Canonical id of side `s` of tile `j`.
    pub fn edge_id(&self, j: usize, s: Side) -> EdgeId {
        self.alias[&(j, s)]
    }

    pub fn tile_edges(&self, j: usize) -> [EdgeId; 4] {
        Side::ALL.map(|s| self.edge_id(j, s))
    }

    pub fn is_glue(&self, id: EdgeId) -> bool {
        self.edge(id).is_glue()
    }

    fn vertices(&self) -> Vec<(i64, i64)> {
        let mut v: BTreeSet<(i64, i64)> = BTreeSet::new();
        for e in &self.edges {
            v.extend(e.ends);
        }
        v.into_iter().collect()
    }

    pub fn is_perfect_matching(&self, p: &PerfectMatching) -> bool {
        let mut cover: BTreeMap<(i64, i64), usize> = BTreeMap::new();
        for id in p {
            let Some(e) = self.edges.iter().find(|e| e.id == *id) else {
                return false;
            };
            for c in e.ends {
                *cover.entry(c).or_default() += 1;
            }
        }
        self.vertices().iter().all(|v| cover.get(v) == Some(&1))
    }

    /// Boundary edges whose role inside their tile is `role`.
    fn boundary_with_role(&self, role: Role) -> PerfectMatching {
        let mut out = BTreeSet::new();
        for tile in &self.tiles {
            for s in Side::ALL {
                let id = self.edge_id(tile.index, s);
                if !self.is_glue(id) && tile.role(s) == role {
                    out.insert(id);
                }
            }
        }
        out
    }

    pub fn minimal_matching(&self) -> Result<PerfectMatching> {
        let p = self.boundary_with_role(Role::Cw);
        if !self.is_perfect_matching(&p) {
            return Err(Error::Internal("clockwise boundary edges do not form a matching".into()));
        }
        Ok(p)
    }

    pub fn maximal_matching(&self) -> Result<PerfectMatching> {
        let p = self.boundary_with_role(Role::Ccw);
        if !self.is_perfect_matching(&p) {
            return Err(Error::Internal("counterclockwise boundary edges do not form a matching".into()));
        }
        Ok(p)
    }

    /// The two matchings using only boundary edges, found from the boundary cycle.
    pub fn boundary_matchings(&self) -> Result<[PerfectMatching; 2]> {
        let boundary: Vec<&Edge> = self.edges.iter().filter(|e| !e.is_glue()).collect();
        let mut adj: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
        for (i, e) in boundary.iter().enumerate() {
            for c in e.ends {
                adj.entry(c).or_default().push(i);
            }
        }
        if adj.values().any(|v| v.len() != 2) {
            return Err(Error::Internal("snake boundary is not a cycle".into()));
        }
        let mut sets = [BTreeSet::new(), BTreeSet::new()];
        let mut cur = 0usize;
        let mut at = boundary[0].ends[0];
        for k in 0..boundary.len() {
            sets[k % 2].insert(boundary[cur].id);
            let e = boundary[cur];
            at = if e.ends[0] == at { e.ends[1] } else { e.ends[0] };
            cur = *adj[&at].iter().find(|&&i| i != cur).unwrap();
        }
        Ok(sets)
    }

    /// The boundary matching avoiding the counterclockwise edges of tile 1.
    pub fn minimal_matching_by_first_tile(&self) -> Result<PerfectMatching> {
        let t1 = self.tile(1);
        let avoid: Vec<EdgeId> = Side::ALL
            .iter()
            .filter(|&&s| t1.role(s) == Role::Ccw)
            .map(|&s| self.edge_id(1, s))
            .filter(|&id| !self.is_glue(id))
            .collect();
        let [a, b] = self.boundary_matchings()?;
        let ok_a = avoid.iter().all(|e| !a.contains(e));
        let ok_b = avoid.iter().all(|e| !b.contains(e));
        match (ok_a, ok_b) {
            (true, false) => Ok(a),
            (false, true) => Ok(b),
            _ => Err(Error::Internal("first-tile rule does not single out a boundary matching".into())),
        }
    }

    /// All perfect matchings, sorted.
    pub fn enumerate_matchings(&self) -> Vec<PerfectMatching> {
        let verts = self.vertices();
        let mut incident: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            for c in e.ends {
                incident.entry(c).or_default().push(i);
            }
        }
        let mut out = Vec::new();
        let mut covered: BTreeSet<(i64, i64)> = BTreeSet::new();
        let mut chosen = Vec::new();
        self.match_rec(&verts, &incident, &mut covered, &mut chosen, &mut out);
        out.sort();
        out
    }

    fn match_rec(
        &self,
        verts: &[(i64, i64)],
        incident: &BTreeMap<(i64, i64), Vec<usize>>,
        covered: &mut BTreeSet<(i64, i64)>,
        chosen: &mut Vec<EdgeId>,
        out: &mut Vec<PerfectMatching>,
    ) {
        let Some(&v) = verts.iter().find(|v| !covered.contains(v)) else {
            out.push(chosen.iter().copied().collect());
            return;
        };
        for &i in &incident[&v] {
            let e = &self.edges[i];
            let other = if e.ends[0] == v { e.ends[1] } else { e.ends[0] };
            if covered.contains(&other) {
                continue;
            }
            covered.insert(v);
            covered.insert(other);
            chosen.push(e.id);
            self.match_rec(verts, incident, covered, chosen, out);
            chosen.pop();
            covered.remove(&other);
            covered.remove(&v);
        }
    }

    /// Every edge subset that is a perfect matching; exponential, for testing.
    pub fn brute_force_matchings(&self) -> Vec<PerfectMatching> {
        let n = self.edges.len();
        assert!(n <= 24, "brute force is only for tiny snake graphs");
        let mut out = Vec::new();
        for mask in 0u32..(1 << n) {
            let p: PerfectMatching = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| self.edges[i].id).collect();
            if self.is_perfect_matching(&p) {
                out.push(p);
            }
        }
        out.sort();
        out
    }

    /// Tile `j` carries a pair of opposite edges of `p`.
    pub fn can_twist(&self, p: &PerfectMatching, j: usize) -> bool {
        let e = self.tile_edges(j);
        (p.contains(&e[0]) && p.contains(&e[2])) || (p.contains(&e[1]) && p.contains(&e[3]))
    }

    pub fn twist(&self, p: &PerfectMatching, j: usize) -> Result<PerfectMatching> {
        if j == 0 || j > self.d() || !self.can_twist(p, j) {
            return Err(Error::CannotTwist(j));
        }
        let mut out = p.clone();
        for e in self.tile_edges(j) {
            if !out.remove(&e) {
                out.insert(e);
            }
        }
        Ok(out)
    }

    /// Connectedness of the graph whose vertices are matchings and whose
    /// edges are twists.
    pub fn twist_connectivity(&self) -> bool {
        let all = self.enumerate_matchings();
        let Some(start) = all.first() else {
            return false;
        };
        let mut seen = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start.clone()]);
        while let Some(p) = queue.pop_front() {
            for j in 1..=self.d() {
                if let Ok(n) = self.twist(&p, j) {
                    if seen.insert(n.clone()) {
                        queue.push_back(n);
                    }
                }
            }
        }
        seen.len() == all.len()
    }

    /// Tiles enclosed by `p △ P_−`.
    pub fn enclosed_tiles(&self, p: &PerfectMatching) -> Result<Vec<usize>> {
        let pm = self.minimal_matching()?;
        let diff: BTreeSet<EdgeId> = p.symmetric_difference(&pm).copied().collect();
        let mut iset = Vec::new();
        for j in 1..=self.d() {
            if self.tile_edges(j).iter().any(|e| !self.is_glue(*e) && diff.contains(e)) {
                iset.push(j);
            }
        }
        let mut boundary_sum: BTreeSet<EdgeId> = BTreeSet::new();
        for &j in &iset {
            for e in self.tile_edges(j) {
                if !boundary_sum.remove(&e) {
                    boundary_sum.insert(e);
                }
            }
        }
        if boundary_sum != diff {
            return Err(Error::Internal(format!(
                "symmetric difference is not the boundary of tiles {iset:?}"
            )));
        }
        Ok(iset)
    }

    /// Inverse of `enclosed_tiles`: the matching whose difference with `P_−`
    /// encloses exactly `iset`.
    pub fn matching_from_tiles(&self, iset: &[usize]) -> Result<PerfectMatching> {
        let mut p = self.minimal_matching()?;
        for &j in iset {
            for e in self.tile_edges(j) {
                if !p.remove(&e) {
                    p.insert(e);
                }
            }
        }
        if self.is_perfect_matching(&p) {
            Ok(p)
        } else {
            Err(Error::BijectionViolation(iset.to_vec()))
        }
    }

    pub fn matching_to_submodule(&self, p: &PerfectMatching, w: &StringWord) -> Result<Vec<usize>> {
        let iset = self.enclosed_tiles(p)?;
        if is_canonical_submodule(w, &iset) {
            Ok(iset)
        } else {
            Err(Error::BijectionViolation(iset))
        }
    }

    /// Product of edge labels of `p` as an exponent vector over all arcs.
    pub fn edge_weight(&self, p: &PerfectMatching, m: usize) -> Vec<i64> {
        let mut out = vec![0; m];
        for id in p {
            out[(self.edge(*id).label - 1) as usize] += 1;
        }
        out
    }
}
