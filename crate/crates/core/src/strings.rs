//! Strings over the gentle algebra of a triangulation, their canonical
//! submodules, truncations, and the arrow/overlap extension combinatorics.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::surface::QuiverWithRelations;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Dir {
    Direct,
    Inverse,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Direct => Dir::Inverse,
            Dir::Inverse => Dir::Direct,
        }
    }
}

/// A letter: an arrow (index into the quiver's arrow list) read forwards or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Letter {
    pub arrow: usize,
    pub dir: Dir,
}

/// A walk `v_1 L_1 v_2 … L_{d-1} v_d`. A direct letter `L_i` is an arrow
/// `v_i → v_{i+1}`, an inverse one an arrow `v_{i+1} → v_i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StringWord {
    pub vertices: Vec<i64>,
    pub letters: Vec<Letter>,
}

impl StringWord {
    pub fn trivial(v: i64) -> Self {
        StringWord {
            vertices: vec![v],
            letters: vec![],
        }
    }

    /// Number of vertices `d` (the dimension of the string module).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn start(&self) -> i64 {
        self.vertices[0]
    }

    pub fn end(&self) -> i64 {
        *self.vertices.last().unwrap()
    }

    /// All letters direct (vacuously true for trivial strings).
    pub fn is_direct(&self) -> bool {
        self.letters.iter().all(|l| l.dir == Dir::Direct)
    }

    pub fn is_inverse(&self) -> bool {
        self.letters.iter().all(|l| l.dir == Dir::Inverse)
    }

    pub fn inverse(&self) -> StringWord {
        StringWord {
            vertices: self.vertices.iter().rev().copied().collect(),
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    arrow: l.arrow,
                    dir: l.dir.flip(),
                })
                .collect(),
        }
    }

    /// The lesser of `w` and `w^{-1}`; both give the same module.
    pub fn canonical(&self) -> StringWord {
        let inv = self.inverse();
        if inv < *self {
            inv
        } else {
            self.clone()
        }
    }

    /// Vertices `i..=j` (0-based) with the letters between them.
    pub fn substring(&self, i: usize, j: usize) -> StringWord {
        StringWord {
            vertices: self.vertices[i..=j].to_vec(),
            letters: self.letters[i..j].to_vec(),
        }
    }

    /// `self · L · other`.
    pub fn join(&self, l: Letter, other: &StringWord) -> StringWord {
        let mut out = self.clone();
        out.letters.push(l);
        out.letters.extend_from_slice(&other.letters);
        out.vertices.extend_from_slice(&other.vertices);
        out
    }

    pub fn render(&self, q: &QuiverWithRelations) -> String {
        let mut s = self.vertices[0].to_string();
        for (l, v) in self.letters.iter().zip(&self.vertices[1..]) {
            let name = &q.arrows[l.arrow].name;
            let c = if l.dir == Dir::Direct { '>' } else { '<' };
            let _ = write!(s, " {c}{name}{c} {v}");
        }
        s
    }

    pub fn dimension_vector(&self, iset: &[usize], n: usize) -> Vec<i64> {
        let mut out = vec![0; n];
        for &i in iset {
            out[(self.vertices[i - 1] - 1) as usize] += 1;
        }
        out
    }

    pub fn full_dimension_vector(&self, n: usize) -> Vec<i64> {
        let all: Vec<usize> = (1..=self.len()).collect();
        self.dimension_vector(&all, n)
    }
}

fn check_letter(q: &QuiverWithRelations, w: &StringWord, i: usize) -> Result<()> {
    let l = w.letters[i];
    let a = q
        .arrows
        .get(l.arrow)
        .ok_or_else(|| Error::Parse(format!("unknown arrow index {}", l.arrow)))?;
    let (from, to) = (w.vertices[i], w.vertices[i + 1]);
    let ok = match l.dir {
        Dir::Direct => a.source == from && a.target == to,
        Dir::Inverse => a.source == to && a.target == from,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::NotComposable { pos: i + 1, next: i + 2 })
    }
}

/// Checks composability, reducedness and avoidance of relations at letter
/// pair `(i, i+1)` (0-based).
fn check_pair(q: &QuiverWithRelations, w: &StringWord, i: usize) -> Result<()> {
    let (x, y) = (w.letters[i], w.letters[i + 1]);
    if x.arrow == y.arrow && x.dir != y.dir {
        return Err(Error::NotReduced(i + 1));
    }
    let rel = match (x.dir, y.dir) {
        (Dir::Direct, Dir::Direct) => q.is_relation(x.arrow, y.arrow),
        (Dir::Inverse, Dir::Inverse) => q.is_relation(y.arrow, x.arrow),
        _ => false,
    };
    if rel {
        return Err(Error::RelationViolated(i + 1, i + 2));
    }
    Ok(())
}

pub fn validate_string(q: &QuiverWithRelations, w: &StringWord) -> Result<()> {
    if w.vertices.is_empty() || w.vertices.len() != w.letters.len() + 1 {
        return Err(Error::Parse("a string needs one more vertex than letters".into()));
    }
    for v in &w.vertices {
        if !q.vertices.contains(v) {
            return Err(Error::Parse(format!("{v} is not a quiver vertex")));
        }
    }
    for i in 0..w.letters.len() {
        check_letter(q, w, i)?;
    }
    for i in 0..w.letters.len().saturating_sub(1) {
        check_pair(q, w, i)?;
    }
    Ok(())
}

/// Parses `1 >a> 2 <b< 1`; arrow names may be omitted (`1 > 2 < 1`), in
/// which case the first valid filling in arrow order is taken.
pub fn parse_string(q: &QuiverWithRelations, text: &str) -> Result<StringWord> {
    let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut pos = 0;
    let read_vertex = |pos: &mut usize| -> Result<i64> {
        let start = *pos;
        while *pos < chars.len() && (chars[*pos].is_ascii_digit() || (*pos == start && chars[*pos] == '-')) {
            *pos += 1;
        }
        let s: String = chars[start..*pos].iter().collect();
        s.parse()
            .map_err(|_| Error::Parse(format!("expected a vertex at position {start} in {text:?}")))
    };
    let mut vertices = vec![read_vertex(&mut pos)?];
    let mut slots: Vec<(Dir, Option<String>)> = Vec::new();
    while pos < chars.len() {
        let dir = match chars[pos] {
            '>' => Dir::Direct,
            '<' => Dir::Inverse,
            c => return Err(Error::Parse(format!("unexpected {c:?} in {text:?}"))),
        };
        let mark = chars[pos];
        pos += 1;
        let start = pos;
        while pos < chars.len() && chars[pos].is_ascii_alphanumeric() && !(pos == start && chars[pos].is_ascii_digit()) {
            pos += 1;
        }
        let name: String = chars[start..pos].iter().collect();
        let name = if name.is_empty() {
            None
        } else {
            if pos >= chars.len() || chars[pos] != mark {
                return Err(Error::Parse(format!("arrow {name} must be closed by {mark:?}")));
            }
            pos += 1;
            Some(name)
        };
        slots.push((dir, name));
        vertices.push(read_vertex(&mut pos)?);
    }
    let mut letters = Vec::with_capacity(slots.len());
    let mut word = StringWord {
        vertices: vertices.clone(),
        letters: vec![],
    };
    if fill(q, &slots, &mut word, &mut letters)? {
        word.letters = letters;
        validate_string(q, &word)?;
        Ok(word)
    } else {
        // report the precise failure of the naive filling
        let naive: Result<Vec<Letter>> = slots
            .iter()
            .enumerate()
            .map(|(i, (dir, name))| {
                let arrow = match name {
                    Some(n) => q.arrow_index(n).ok_or_else(|| Error::Parse(format!("unknown arrow {n}")))?,
                    None => candidates(q, *dir, vertices[i], vertices[i + 1])
                        .first()
                        .copied()
                        .ok_or(Error::NotComposable { pos: i + 1, next: i + 2 })?,
                };
                Ok(Letter { arrow, dir: *dir })
            })
            .collect();
        let w = StringWord {
            vertices,
            letters: naive?,
        };
        validate_string(q, &w)?;
        Err(Error::Parse(format!("no valid arrow filling for {text:?}")))
    }
}

fn candidates(q: &QuiverWithRelations, dir: Dir, from: i64, to: i64) -> Vec<usize> {
    (0..q.arrows.len())
        .filter(|&a| {
            let ar = &q.arrows[a];
            match dir {
                Dir::Direct => ar.source == from && ar.target == to,
                Dir::Inverse => ar.source == to && ar.target == from,
            }
        })
        .collect()
}

fn fill(
    q: &QuiverWithRelations,
    slots: &[(Dir, Option<String>)],
    word: &mut StringWord,
    letters: &mut Vec<Letter>,
) -> Result<bool> {
    let i = letters.len();
    if i == slots.len() {
        return Ok(true);
    }
    let (dir, name) = &slots[i];
    let opts = match name {
        Some(n) => vec![q.arrow_index(n).ok_or_else(|| Error::Parse(format!("unknown arrow {n}")))?],
        None => candidates(q, *dir, word.vertices[i], word.vertices[i + 1]),
    };
    for a in opts {
        letters.push(Letter { arrow: a, dir: *dir });
        let probe = StringWord {
            vertices: word.vertices[..=i + 1].to_vec(),
            letters: letters.clone(),
        };
        let ok = check_letter(q, &probe, i).is_ok() && (i == 0 || check_pair(q, &probe, i - 1).is_ok());
        if ok && fill(q, slots, word, letters)? {
            return Ok(true);
        }
        letters.pop();
    }
    Ok(false)
}

/// All valid strings with at most `max_vertices` vertices, one per
/// inversion class, in canonical order.
pub fn enumerate_strings(q: &QuiverWithRelations, max_vertices: usize) -> Vec<StringWord> {
    let mut out = std::collections::BTreeSet::new();
    let mut frontier: Vec<StringWord> = q.vertices.iter().map(|&v| StringWord::trivial(v)).collect();
    while let Some(w) = frontier.pop() {
        if w.len() < max_vertices {
            for (a, ar) in q.arrows.iter().enumerate() {
                for dir in [Dir::Direct, Dir::Inverse] {
                    let (from, to) = match dir {
                        Dir::Direct => (ar.source, ar.target),
                        Dir::Inverse => (ar.target, ar.source),
                    };
                    if from != w.end() {
                        continue;
                    }
                    let ext = w.join(Letter { arrow: a, dir }, &StringWord::trivial(to));
                    if check_pair_tail(q, &ext) {
                        frontier.push(ext);
                    }
                }
            }
        }
        out.insert(w.canonical());
    }
    out.into_iter().collect()
}

fn check_pair_tail(q: &QuiverWithRelations, w: &StringWord) -> bool {
    w.letters.len() < 2 || check_pair(q, w, w.letters.len() - 2).is_ok()
}

/// Maximal runs of consecutive indices, in order.
pub fn interval_decomposition(iset: &[usize]) -> Vec<(usize, usize)> {
    let mut sorted = iset.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out: Vec<(usize, usize)> = Vec::new();
    for i in sorted {
        match out.last_mut() {
            Some((_, hi)) if *hi + 1 == i => *hi = i,
            _ => out.push((i, i)),
        }
    }
    out
}

/// Closure test via the interval shape: every maximal interval `[i, j]`
/// starts at 1 or after a direct letter and ends at `d` or before an
/// inverse letter.
pub fn is_canonical_submodule(w: &StringWord, iset: &[usize]) -> bool {
    let d = w.len();
    if iset.iter().any(|&i| i == 0 || i > d) {
        return false;
    }
    interval_decomposition(iset).into_iter().all(|(i, j)| {
        (i == 1 || w.letters[i - 2].dir == Dir::Direct) && (j == d || w.letters[j - 1].dir == Dir::Inverse)
    })
}

/// Matrix of each arrow acting on `M(w)` in the basis `x_1..x_d`:
/// `action[a]` lists pairs `(from, to)` with `a · x_from = x_to`.
pub fn module_action(q: &QuiverWithRelations, w: &StringWord) -> Vec<Vec<(usize, usize)>> {
    let mut action = vec![Vec::new(); q.arrows.len()];
    for (i, l) in w.letters.iter().enumerate() {
        let (from, to) = match l.dir {
            Dir::Direct => (i + 1, i + 2),
            Dir::Inverse => (i + 2, i + 1),
        };
        action[l.arrow].push((from, to));
    }
    action
}

/// Brute-force closure of the span of `{x_i : i ∈ iset}` under every arrow.
pub fn is_submodule_by_action(q: &QuiverWithRelations, w: &StringWord, iset: &[usize]) -> bool {
    let inside = |i: usize| iset.contains(&i);
    module_action(q, w)
        .iter()
        .all(|pairs| pairs.iter().all(|&(from, to)| !inside(from) || inside(to)))
}

/// Every canonical submodule, ordered by size and then lexicographically.
pub fn enumerate_canonical_submodules(w: &StringWord) -> Vec<Vec<usize>> {
    let d = w.len();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    // choose membership of positions left to right; position i+1 is forced
    // in whenever i is in and L_i is direct, forced out whenever i is out
    // and L_i is inverse.
    fn go(w: &StringWord, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let d = w.len();
        if i > d {
            out.push(cur.clone());
            return;
        }
        for take in [false, true] {
            if i > 1 {
                let prev_in = cur.last() == Some(&(i - 1));
                match w.letters[i - 2].dir {
                    Dir::Direct if prev_in && !take => continue,
                    Dir::Inverse if !prev_in && take => continue,
                    _ => {}
                }
            }
            if take {
                cur.push(i);
            }
            go(w, i + 1, cur, out);
            if take {
                cur.pop();
            }
        }
    }
    if d > 0 {
        go(w, 1, &mut cur, &mut out);
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// The four truncations `(_h v, _c v, v_h, v_c)`, where a degenerate case
/// yields a trivial string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Truncations {
    pub h_left: StringWord,
    pub c_left: StringWord,
    pub h_right: StringWord,
    pub c_right: StringWord,
}

fn first_with(v: &StringWord, dir: Dir) -> Option<usize> {
    v.letters.iter().position(|l| l.dir == dir)
}

fn last_with(v: &StringWord, dir: Dir) -> Option<usize> {
    v.letters.iter().rposition(|l| l.dir == dir)
}

/// `_h v`: delete the first direct letter and the inverse run before it.
pub fn hook_left(v: &StringWord) -> StringWord {
    match first_with(v, Dir::Direct) {
        None => StringWord::trivial(v.end()),
        Some(p) => v.substring(p + 1, v.len() - 1),
    }
}

/// `_c v`: delete the first inverse letter and the direct run before it.
pub fn cohook_left(v: &StringWord) -> StringWord {
    match first_with(v, Dir::Inverse) {
        None => StringWord::trivial(v.end()),
        Some(p) => v.substring(p + 1, v.len() - 1),
    }
}

/// `v_h`: delete the last inverse letter and the direct run after it.
pub fn hook_right(v: &StringWord) -> StringWord {
    match last_with(v, Dir::Inverse) {
        None => StringWord::trivial(v.start()),
        Some(p) => v.substring(0, p),
    }
}

/// `v_c`: delete the last direct letter and the inverse run after it.
pub fn cohook_right(v: &StringWord) -> StringWord {
    match last_with(v, Dir::Direct) {
        None => StringWord::trivial(v.start()),
        Some(p) => v.substring(0, p),
    }
}

/// Which of the four truncations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cut {
    HookLeft,
    CohookLeft,
    HookRight,
    CohookRight,
}

impl Cut {
    pub fn apply(self, v: &StringWord) -> StringWord {
        match self {
            Cut::HookLeft => hook_left(v),
            Cut::CohookLeft => cohook_left(v),
            Cut::HookRight => hook_right(v),
            Cut::CohookRight => cohook_right(v),
        }
    }

    /// Direction of the letter the truncation deletes.
    fn pivot(self) -> Dir {
        match self {
            Cut::HookLeft | Cut::CohookRight => Dir::Direct,
            Cut::CohookLeft | Cut::HookRight => Dir::Inverse,
        }
    }
}

/// A truncation whose pivot letter is missing stands for a boundary
/// segment; `None` in that case.
pub fn proper_truncation(v: &StringWord, cut: Cut) -> Option<StringWord> {
    first_with(v, cut.pivot()).map(|_| cut.apply(v))
}

pub fn truncations(v: &StringWord) -> Truncations {
    Truncations {
        h_left: hook_left(v),
        c_left: cohook_left(v),
        h_right: hook_right(v),
        c_right: cohook_right(v),
    }
}

/// `w a^{-1} v` is a string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArrowExtension {
    pub arrow: usize,
    pub u1: StringWord,
    /// Trivial strings at `s(a)` and `e(a)`.
    pub u2_candidates: [StringWord; 2],
    /// `_c v` and `w_h`; `None` for a boundary segment.
    pub u3: Option<StringWord>,
    pub u4: Option<StringWord>,
}

pub fn arrow_extensions(v: &StringWord, w: &StringWord, q: &QuiverWithRelations) -> Vec<ArrowExtension> {
    let mut out = Vec::new();
    for (a, ar) in q.arrows.iter().enumerate() {
        if ar.source != v.start() || ar.target != w.end() {
            continue;
        }
        let u1 = w.join(Letter { arrow: a, dir: Dir::Inverse }, v);
        if validate_string(q, &u1).is_ok() {
            out.push(ArrowExtension {
                arrow: a,
                u1,
                u2_candidates: [StringWord::trivial(ar.source), StringWord::trivial(ar.target)],
                u3: proper_truncation(v, Cut::CohookLeft),
                u4: proper_truncation(w, Cut::HookRight),
            });
        }
    }
    out
}

/// `v = v_L b m a^{-1} v_R`, `w = w_L d^{-1} m c w_R`. Absent arrows are
/// `None`; `v_L` exists iff `b` does, and so on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverlapExtension {
    pub m: StringWord,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub c: Option<usize>,
    pub d: Option<usize>,
    pub u1: StringWord,
    pub u2: StringWord,
    /// `None` stands for the empty string (a boundary segment).
    pub u3: Option<StringWord>,
    pub u4: Option<StringWord>,
}

/// The arrows adjacent to an occurrence of `m` spanning vertices `i..=j` of `s`.
fn flanks(s: &StringWord, i: usize, j: usize) -> (Option<Letter>, Option<Letter>) {
    let before = (i > 0).then(|| s.letters[i - 1]);
    let after = (j + 1 < s.len()).then(|| s.letters[j]);
    (before, after)
}

/// Unique `x f^{-1} y` (`y` possibly inverted) that is a valid string.
fn connect(q: &QuiverWithRelations, x: &StringWord, y: &StringWord) -> Result<StringWord> {
    let mut found = Vec::new();
    for yy in [y.clone(), y.inverse()] {
        for (f, ar) in q.arrows.iter().enumerate() {
            if ar.target == x.end() && ar.source == yy.start() {
                let s = x.join(Letter { arrow: f, dir: Dir::Inverse }, &yy);
                if validate_string(q, &s).is_ok() && !found.contains(&s) {
                    found.push(s);
                }
            }
        }
    }
    match found.len() {
        1 => Ok(found.pop().unwrap()),
        k => Err(Error::AmbiguousConnector(format!(
            "{k} connecting arrows between {} and {}",
            x.render(q),
            y.render(q)
        ))),
    }
}

pub fn overlap_extensions(
    v: &StringWord,
    w: &StringWord,
    q: &QuiverWithRelations,
) -> Result<Vec<OverlapExtension>> {
    let mut out: Vec<OverlapExtension> = Vec::new();
    let mut seen = std::collections::BTreeSet::new();
    for ww in [w.clone(), w.inverse()] {
        for vi in 0..v.len() {
            for vj in vi..v.len() {
                let m = v.substring(vi, vj);
                for wi in 0..ww.len() {
                    let wj = wi + (vj - vi);
                    if wj >= ww.len() || ww.substring(wi, wj) != m {
                        continue;
                    }
                    let (vb, va) = flanks(v, vi, vj);
                    let (wd, wc) = flanks(&ww, wi, wj);
                    // b direct, a^{-1} inverse in v; d^{-1} inverse, c direct in w
                    if vb.is_some_and(|l| l.dir != Dir::Direct)
                        || va.is_some_and(|l| l.dir != Dir::Inverse)
                        || wd.is_some_and(|l| l.dir != Dir::Inverse)
                        || wc.is_some_and(|l| l.dir != Dir::Direct)
                    {
                        continue;
                    }
                    let (a, b, c, d) = (
                        va.map(|l| l.arrow),
                        vb.map(|l| l.arrow),
                        wc.map(|l| l.arrow),
                        wd.map(|l| l.arrow),
                    );
                    if (a.is_none() && c.is_none()) || (b.is_none() && d.is_none()) {
                        continue;
                    }
                    if m.is_trivial() {
                        if let (Some(a), Some(c)) = (a, c) {
                            if !q.is_relation(a, c) {
                                continue;
                            }
                        }
                        if let (Some(b), Some(d)) = (b, d) {
                            if !q.is_relation(b, d) {
                                continue;
                            }
                        }
                    }
                    let v_l = b.map(|_| v.substring(0, vi - 1));
                    let v_r = a.map(|_| v.substring(vj + 1, v.len() - 1));
                    let w_l = d.map(|_| ww.substring(0, wi - 1));
                    let w_r = c.map(|_| ww.substring(wj + 1, ww.len() - 1));
                    let mut u1 = match (&v_l, b) {
                        (Some(l), Some(b)) => l.join(Letter { arrow: b, dir: Dir::Direct }, &m),
                        _ => m.clone(),
                    };
                    if let (Some(r), Some(c)) = (&w_r, c) {
                        u1 = u1.join(Letter { arrow: c, dir: Dir::Direct }, r);
                    }
                    let mut u2 = match (&w_l, d) {
                        (Some(l), Some(d)) => l.join(Letter { arrow: d, dir: Dir::Inverse }, &m),
                        _ => m.clone(),
                    };
                    if let (Some(r), Some(a)) = (&v_r, a) {
                        u2 = u2.join(Letter { arrow: a, dir: Dir::Inverse }, r);
                    }
                    // a trivial overlap may glue b and c (or d and a) into a relation
                    if validate_string(q, &u1).is_err() || validate_string(q, &u2).is_err() {
                        continue;
                    }
                    let u3 = match (&v_l, &w_l) {
                        (Some(x), Some(y)) => Some(connect(q, x, y)?),
                        (None, Some(y)) => proper_truncation(y, Cut::HookRight),
                        (Some(x), None) => proper_truncation(x, Cut::CohookRight),
                        (None, None) => None,
                    };
                    let u4 = match (&v_r, &w_r) {
                        (Some(x), Some(y)) => Some(connect(q, x, y)?),
                        (None, Some(y)) => proper_truncation(y, Cut::HookLeft),
                        (Some(x), None) => proper_truncation(x, Cut::CohookLeft),
                        (None, None) => None,
                    };
                    let key = (u1.canonical(), u2.canonical());
                    if seen.insert(key) {
                        out.push(OverlapExtension { m: m.clone(), a, b, c, d, u1, u2, u3, u4 });
                    }
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::surface::Triangulation;

    fn kronecker() -> QuiverWithRelations {
        Triangulation::from_json(include_str!("../data/annulus_c11.json"))
            .unwrap()
            .build_quiver()
    }

    fn triangle_quiver() -> QuiverWithRelations {
        Triangulation::from_json(include_str!("../data/hexagon_triangle.json"))
            .unwrap()
            .build_quiver()
    }

    #[test]
    fn parse_and_render() {
        let q = kronecker();
        let w = parse_string(&q, "1 >a> 2 <b< 1").unwrap();
        assert_eq!(w.render(&q), "1 >a> 2 <b< 1");
        let w2 = parse_string(&q, "1>2<1").unwrap();
        assert_eq!(w2, w);
        assert!(matches!(parse_string(&q, "1 >a> 2 <a< 1"), Err(Error::NotReduced(1))));
        assert!(matches!(
            parse_string(&q, "2 >a> 1"),
            Err(Error::NotComposable { pos: 1, next: 2 })
        ));
        assert!(parse_string(&q, "1 >z> 2").is_err());
    }

    #[test]
    fn relations_rejected() {
        let q = triangle_quiver();
        // arrows 1->2 (a), 2->3 (b), 3->1 (c); consecutive pairs are relations
        assert!(matches!(parse_string(&q, "1 > 2 > 3"), Err(Error::RelationViolated(1, 2))));
        assert!(matches!(parse_string(&q, "3 < 2 < 1"), Err(Error::RelationViolated(1, 2))));
        assert!(parse_string(&q, "1 > 2").is_ok());
    }

    #[test]
    fn intervals() {
        assert_eq!(interval_decomposition(&[1, 2, 4]), vec![(1, 2), (4, 4)]);
        assert_eq!(interval_decomposition(&[]), vec![]);
        assert_eq!(interval_decomposition(&[2, 3, 5, 6]), vec![(2, 3), (5, 6)]);
    }

    #[test]
    fn kronecker_submodules() {
        let q = kronecker();
        let w = parse_string(&q, "1 >a> 2 <b< 1").unwrap();
        assert!(is_canonical_submodule(&w, &[2]));
        assert!(!is_canonical_submodule(&w, &[1]));
        assert!(is_canonical_submodule(&w, &[]));
        assert!(is_canonical_submodule(&w, &[1, 2, 3]));
        assert_eq!(
            enumerate_canonical_submodules(&w),
            vec![vec![], vec![2], vec![1, 2], vec![2, 3], vec![1, 2, 3]]
        );
        assert_eq!(enumerate_canonical_submodules(&StringWord::trivial(1)), vec![vec![], vec![1]]);
        let d = parse_string(&q, "1 >a> 2").unwrap();
        assert_eq!(enumerate_canonical_submodules(&d), vec![vec![], vec![2], vec![1, 2]]);
        assert_eq!(w.dimension_vector(&[1, 2, 3], 2), vec![2, 1]);
        assert_eq!(w.dimension_vector(&[2], 2), vec![0, 1]);
    }

    #[test]
    fn truncation_examples() {
        let q = kronecker();
        let w = parse_string(&q, "1 >a> 2 <b< 1").unwrap();
        assert_eq!(hook_left(&w).render(&q), "2 <b< 1");
        let inv = parse_string(&q, "2 <a< 1").unwrap();
        assert_eq!(hook_left(&inv), StringWord::trivial(1));
        let dir = parse_string(&q, "1 >a> 2").unwrap();
        assert_eq!(hook_right(&dir), StringWord::trivial(1));
    }

    #[test]
    fn kronecker_arrow_extension() {
        let q = kronecker();
        let exts = arrow_extensions(&StringWord::trivial(1), &StringWord::trivial(2), &q);
        assert_eq!(exts.len(), 2);
        assert_eq!(exts[0].u1.render(&q), "2 <a< 1");
        assert!(arrow_extensions(&StringWord::trivial(2), &StringWord::trivial(2), &q).is_empty());
    }
}
