//! Triangulated unpunctured surfaces given combinatorially: arcs plus
//! counterclockwise triangles. Derives the quiver with relations, the
//! exchange matrix, arc neighborhoods and a compatible form.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::{self, Matrix};
use crate::torus::{check_compatible, CompatiblePair};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ArcKind {
    Internal,
    Boundary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arc {
    pub id: i64,
    pub kind: ArcKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct SurfaceFile {
    arcs: Vec<Arc>,
    triangles: Vec<[i64; 3]>,
    #[serde(default)]
    lambda: Option<Matrix>,
}

/// A validated triangulation. Triangles list their sides counterclockwise.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    pub arcs: Vec<Arc>,
    pub triangles: Vec<[i64; 3]>,
    pub lambda: Option<Matrix>,
    n: usize,
    /// arc id -> (triangle index, slot) in file order
    incidence: BTreeMap<i64, Vec<(usize, usize)>>,
}

/// An arrow of the quiver. Arrows come from consecutive sides of a triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: i64,
    pub target: i64,
    pub triangle: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QuiverWithRelations {
    pub vertices: Vec<i64>,
    pub arrows: Vec<Arrow>,
    /// Each relation is a path of arrow indices; the triangulation only
    /// produces paths of length two.
    pub relations: Vec<Vec<usize>>,
}

impl QuiverWithRelations {
    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn is_relation(&self, first: usize, second: usize) -> bool {
        self.relations.iter().any(|r| r.as_slice() == [first, second])
    }
}

/// The four arcs flanking an internal arc. `a1`, `a4` close up a triangle
/// with the arc, and so do `a2`, `a3`; `a1`, `a3` are clockwise of it and
/// `a2`, `a4` counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ArcNeighborhood {
    pub arc: i64,
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
    pub a4: i64,
}

fn arrow_name(idx: usize) -> String {
    if idx < 26 {
        ((b'a' + idx as u8) as char).to_string()
    } else {
        format!("a{idx}")
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let p = self.0[x];
        if p == x {
            return x;
        }
        let r = self.find(p);
        self.0[x] = r;
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }
}

impl Triangulation {
    pub fn new(arcs: Vec<Arc>, triangles: Vec<[i64; 3]>, lambda: Option<Matrix>) -> Result<Self> {
        let invalid = |m: String| Err(Error::InvalidTriangulation(m));
        let mut seen = BTreeSet::new();
        for a in &arcs {
            if !seen.insert(a.id) {
                return invalid(format!("duplicate arc id {}", a.id));
            }
        }
        let n = arcs.iter().filter(|a| a.kind == ArcKind::Internal).count();
        for a in &arcs {
            let ok = match a.kind {
                ArcKind::Internal => (1..=n as i64).contains(&a.id),
                ArcKind::Boundary => a.id > n as i64 && a.id <= arcs.len() as i64,
            };
            if !ok {
                return invalid(format!(
                    "arc {} breaks the numbering (internal arcs 1..={n}, boundary arcs after)",
                    a.id
                ));
            }
        }
        if n == 0 {
            return invalid("no internal arcs".into());
        }
        let kind: BTreeMap<i64, ArcKind> = arcs.iter().map(|a| (a.id, a.kind)).collect();
        let mut incidence: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
        for (t, tri) in triangles.iter().enumerate() {
            for (s, id) in tri.iter().enumerate() {
                if !kind.contains_key(id) {
                    return invalid(format!("triangle {t} uses unknown arc {id}"));
                }
                if tri[..s].contains(id) {
                    return invalid(format!("triangle {t} repeats arc {id}"));
                }
                incidence.entry(*id).or_default().push((t, s));
            }
        }
        for a in &arcs {
            let count = incidence.get(&a.id).map_or(0, Vec::len);
            let want = if a.kind == ArcKind::Internal { 2 } else { 1 };
            if count != want {
                let t = incidence.get(&a.id).and_then(|v| v.last()).map_or(0, |x| x.0);
                return invalid(format!(
                    "arc {} lies in {count} triangles, expected {want} (triangle {t})",
                    a.id
                ));
            }
        }
        let tri = Triangulation {
            arcs,
            triangles,
            lambda,
            n,
            incidence,
        };
        tri.check_marked_points()?;
        Ok(tri)
    }

    /// Every vertex of the glued surface must lie on the boundary.
    fn check_marked_points(&self) -> Result<()> {
        // corner c of triangle t sits between sides c and c+1;
        // side s runs from corner s-1 to corner s.
        let corner = |t: usize, c: usize| 3 * t + (c % 3);
        let mut uf = UnionFind((0..3 * self.triangles.len()).collect());
        for (id, places) in &self.incidence {
            if self.is_internal(*id) {
                let (t1, s1) = places[0];
                let (t2, s2) = places[1];
                uf.union(corner(t1, s1 + 2), corner(t2, s2));
                uf.union(corner(t1, s1), corner(t2, s2 + 2));
            }
        }
        let mut on_boundary = BTreeSet::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            for s in 0..3 {
                if !self.is_internal(tri[s]) {
                    on_boundary.insert(uf.find(corner(t, s + 2)));
                    on_boundary.insert(uf.find(corner(t, s)));
                }
            }
        }
        for t in 0..self.triangles.len() {
            for c in 0..3 {
                if !on_boundary.contains(&uf.find(corner(t, c))) {
                    return Err(Error::InvalidTriangulation(format!(
                        "triangle {t} has a corner at an interior marked point (puncture)"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SurfaceFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidTriangulation(e.to_string()))?;
        Self::new(raw.arcs, raw.triangles, raw.lambda)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Number of internal arcs.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of arcs.
    pub fn m(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_internal(&self, id: i64) -> bool {
        (1..=self.n as i64).contains(&id)
    }

    /// `(triangle, slot)` occurrences of `id`, in file order.
    pub fn triangles_of(&self, id: i64) -> &[(usize, usize)] {
        self.incidence.get(&id).map_or(&[], Vec::as_slice)
    }

    /// The triangle rotated to start at `slot`: `(side, ccw side, cw side)`.
    pub fn rotated(&self, t: usize, slot: usize) -> (i64, i64, i64) {
        let tri = &self.triangles[t];
        (tri[slot % 3], tri[(slot + 1) % 3], tri[(slot + 2) % 3])
    }

    /// All oriented adjacent pairs `x -> y` over all arcs, one per triangle.
    fn oriented_pairs(&self) -> Vec<(i64, i64, usize)> {
        let mut out = Vec::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            for s in 0..3 {
                out.push((tri[s], tri[(s + 1) % 3], t));
            }
        }
        out
    }

    pub fn build_quiver(&self) -> QuiverWithRelations {
        let mut arrows = Vec::new();
        for (x, y, t) in self.oriented_pairs() {
            if self.is_internal(x) && self.is_internal(y) {
                arrows.push(Arrow {
                    name: arrow_name(arrows.len()),
                    source: x,
                    target: y,
                    triangle: t,
                });
            }
        }
        let mut relations = Vec::new();
        for (t, tri) in self.triangles.iter().enumerate() {
            if tri.iter().all(|&x| self.is_internal(x)) {
                let in_t: Vec<usize> = (0..arrows.len()).filter(|&i| arrows[i].triangle == t).collect();
                for &a in &in_t {
                    for &b in &in_t {
                        if arrows[a].target == arrows[b].source {
                            relations.push(vec![a, b]);
                        }
                    }
                }
            }
        }
        QuiverWithRelations {
            vertices: (1..=self.n as i64).collect(),
            arrows,
            relations,
        }
    }

    /// `b_ij = #(j -> i) - #(i -> j)`; rows `n+1..m` are the boundary arcs.
    pub fn b_matrix(&self) -> Matrix {
        let (m, n) = (self.m(), self.n);
        let mut b = matrix::zeros(m, n);
        for (x, y, _) in self.oriented_pairs() {
            let (xi, yi) = ((x - 1) as usize, (y - 1) as usize);
            if yi < n {
                b[xi][yi] -= 1;
            }
            if xi < n {
                b[yi][xi] += 1;
            }
        }
        b
    }

    pub fn principal_b(&self) -> Matrix {
        self.b_matrix()[..self.n].to_vec()
    }

    pub fn neighborhood(&self, k: i64) -> Result<ArcNeighborhood> {
        if !self.is_internal(k) {
            return Err(Error::NotInternal(k));
        }
        let places = self.triangles_of(k);
        let (_, a4, a1) = self.rotated(places[0].0, places[0].1);
        let (_, a2, a3) = self.rotated(places[1].0, places[1].1);
        Ok(ArcNeighborhood { arc: k, a1, a2, a3, a4 })
    }

    /// The compatible pair for this surface: principal (`n×n`) or with the
    /// boundary arcs as frozen rows. A form from the surface file is used
    /// when its size fits.
    pub fn compatible_pair(&self, frozen: bool) -> Result<CompatiblePair> {
        let b = if frozen { self.b_matrix() } else { self.principal_b() };
        if let Some(l) = &self.lambda {
            if l.len() == b.len() {
                return CompatiblePair::new(b, l.clone());
            }
        }
        let lambda = find_lambda(&b)?;
        CompatiblePair::new(b, lambda)
    }
}

/// Verifies the gentle axioms; `None` means gentle.
pub fn gentle_violation(q: &QuiverWithRelations) -> Option<String> {
    for v in &q.vertices {
        let out = q.arrows.iter().filter(|a| a.source == *v).count();
        let inc = q.arrows.iter().filter(|a| a.target == *v).count();
        if out > 2 || inc > 2 {
            return Some(format!("vertex {v} has {inc} incoming and {out} outgoing arrows"));
        }
    }
    for r in &q.relations {
        if r.len() != 2 {
            return Some(format!("relation of length {}", r.len()));
        }
        if q.arrows[r[0]].target != q.arrows[r[1]].source {
            return Some(format!("relation {r:?} is not a path"));
        }
    }
    for (b, beta) in q.arrows.iter().enumerate() {
        let before: Vec<usize> = (0..q.arrows.len())
            .filter(|&a| q.arrows[a].target == beta.source)
            .collect();
        let after: Vec<usize> = (0..q.arrows.len())
            .filter(|&c| q.arrows[c].source == beta.target)
            .collect();
        let rel_before = before.iter().filter(|&&a| q.is_relation(a, b)).count();
        let rel_after = after.iter().filter(|&&c| q.is_relation(b, c)).count();
        if rel_before > 1 || before.len() - rel_before > 1 {
            return Some(format!("arrow {} has too many predecessors of one kind", beta.name));
        }
        if rel_after > 1 || after.len() - rel_after > 1 {
            return Some(format!("arrow {} has too many successors of one kind", beta.name));
        }
    }
    None
}

pub fn check_gentle(q: &QuiverWithRelations) -> bool {
    gentle_violation(q).is_none()
}

const MAX_D: i64 = 64;

/// Smallest `d` (and a small integer skew `Λ`) with `Λ B̃ = -d [I; 0]`.
pub fn find_lambda(b_tilde: &Matrix) -> Result<Matrix> {
    let m = b_tilde.len();
    let n = matrix::cols(b_tilde);
    if n == 0 || matrix::rank(b_tilde) < n {
        return Err(Error::NoCompatibleLambda);
    }
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    // (Λ B̃)_{rj} = Σ_l λ_{rl} b_{lj}, with λ_{rl} = x_{(r,l)} for r<l, -x_{(l,r)} for r>l.
    let mut a = vec![vec![BigInt::zero(); pairs.len()]; m * n];
    for r in 0..m {
        for j in 0..n {
            for (p, &(s, t)) in pairs.iter().enumerate() {
                let coef = if s == r {
                    b_tilde[t][j]
                } else if t == r {
                    -b_tilde[s][j]
                } else {
                    0
                };
                a[r * n + j][p] = BigInt::from(coef);
            }
        }
    }
    for d in 1..=MAX_D {
        let rhs: Vec<BigInt> = (0..m * n)
            .map(|idx| {
                let (r, j) = (idx / n, idx % n);
                BigInt::from(if r == j { -d } else { 0 })
            })
            .collect();
        if let Some((x, kernel)) = matrix::solve_integer(&a, &rhs) {
            let x = shorten(x, &kernel);
            let mut lambda = matrix::zeros(m, m);
            for (p, &(s, t)) in pairs.iter().enumerate() {
                let v = x[p].to_i64().ok_or(Error::NoCompatibleLambda)?;
                lambda[s][t] = v;
                lambda[t][s] = -v;
            }
            check_compatible(b_tilde, &lambda)?;
            return Ok(lambda);
        }
    }
    Err(Error::NoCompatibleLambda)
}

/// Greedy reduction of a particular solution along kernel directions.
fn shorten(mut x: Vec<BigInt>, kernel: &[Vec<BigInt>]) -> Vec<BigInt> {
    let norm = |v: &[BigInt]| -> BigInt { v.iter().map(|c| c * c).sum() };
    loop {
        let mut improved = false;
        for k in kernel {
            for sign in [1i64, -1] {
                loop {
                    let cand: Vec<BigInt> = x.iter().zip(k).map(|(a, b)| a + b * sign).collect();
                    if norm(&cand) < norm(&x) {
                        x = cand;
                        improved = true;
                    } else {
                        break;
                    }
                }
            }
        }
        if !improved {
            break;
        }
    }
    x
}
