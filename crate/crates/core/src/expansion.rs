//! Laurent expansions of the cluster variable of a string, as a sum over
//! perfect matchings of its snake graph and, independently, over canonical
//! submodules of its string module.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix;
use crate::seeds::{mutation_sequence, QuantumSeed, DEFAULT_DEPTH_LIMIT};
use crate::snake::{label_snake, PerfectMatching, SnakeGraph};
use crate::strings::{enumerate_canonical_submodules, StringWord};
use crate::surface::{QuiverWithRelations, Triangulation};
use crate::torus::{CompatiblePair, HalfInt, QCoeff, TorusElement};
use crate::valuation::{valuation_v, valuation_v_gamma};

/// One summand of an expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExpansionTerm {
    pub index_set: Vec<usize>,
    pub dimension: Vec<i64>,
    pub valuation: i64,
    pub exponent: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionResult {
    pub torus_element: TorusElement,
    /// Ordered like the canonical submodules.
    pub per_term: Vec<ExpansionTerm>,
}

/// Lattice rank of an expansion over `t` in `pair`'s torus: `n` with
/// boundary arcs set to 1, `m` when they are kept as frozen generators.
fn rank_for(t: &Triangulation, pair: &CompatiblePair) -> Result<usize> {
    let m = pair.m();
    if m == t.n() || m == t.m() {
        Ok(m)
    } else {
        Err(Error::DimensionMismatch(format!(
            "seed of rank {m} fits neither {} internal nor {} total arcs",
            t.n(),
            t.m()
        )))
    }
}

/// Crossings of the arc with the triangulation, as an exponent vector.
pub fn crossing_monomial_exponent(w: &StringWord, rank: usize) -> Vec<i64> {
    w.full_dimension_vector(rank)
}

/// Edge labels of `p`, dropping arcs beyond `rank`.
pub fn weight_exponent(p: &PerfectMatching, g: &SnakeGraph, rank: usize) -> Vec<i64> {
    let mut out = vec![0; rank];
    for id in p {
        let l = g.edge(*id).label;
        if let Some(x) = out.get_mut((l - 1) as usize) {
            *x += 1;
        }
    }
    out
}

/// `x(P)`: weight over crossing monomial.
pub fn x_of_matching(p: &PerfectMatching, g: &SnakeGraph, w: &StringWord, rank: usize) -> Vec<i64> {
    let c = crossing_monomial_exponent(w, rank);
    weight_exponent(p, g, rank).iter().zip(&c).map(|(a, b)| a - b).collect()
}

fn q_factor(d: i64, v: i64) -> QCoeff {
    QCoeff::q_pow(HalfInt::from_twice(d * v))
}

/// The quantum cluster variable of `w` in the torus of `pair`, computed
/// from matchings and from submodules; the two must agree term by term.
///
/// The valuation is scaled by the common entry `d` of the compatibility
/// diagonal, so that the result equals the variable produced by mutating
/// the seed `pair` (for `d = 1` this is the bare `q^{v/2}`).
pub fn quantum_expansion(
    w: &StringWord,
    t: &Triangulation,
    q: &QuiverWithRelations,
    pair: &CompatiblePair,
) -> Result<ExpansionResult> {
    let rank = rank_for(t, pair)?;
    let d = pair
        .uniform_d()
        .ok_or_else(|| Error::NotCompatible(format!("non-uniform diagonal {:?}", pair.d)))?;
    let g = label_snake(w, t, q)?;
    let v = valuation_v(&g)?;
    let vg = valuation_v_gamma(w, t, q)?;

    let mut by_matching = TorusElement::zero(rank);
    for (p, &val) in &v {
        by_matching.add_term(x_of_matching(p, &g, w, rank), q_factor(d, val));
    }

    let b = &pair.b_tilde;
    let ind = x_of_matching(&g.minimal_matching()?, &g, w, rank);
    let mut by_module = TorusElement::zero(rank);
    let mut per_term = Vec::new();
    for n in enumerate_canonical_submodules(w) {
        let dim = w.dimension_vector(&n, matrix::cols(b));
        let shift = matrix::mul_vec(b, &dim);
        let exponent: Vec<i64> = ind.iter().zip(&shift).map(|(a, s)| a + s).collect();
        let val = vg[&n];
        by_module.add_term(exponent.clone(), q_factor(d, val));
        per_term.push(ExpansionTerm {
            index_set: n,
            dimension: dim,
            valuation: val,
            exponent,
        });
    }
    if by_matching != by_module {
        return Err(Error::Internal(format!(
            "matching sum {by_matching} differs from submodule sum {by_module}"
        )));
    }
    Ok(ExpansionResult {
        torus_element: by_module,
        per_term,
    })
}

/// `q^{1/2} = 1`.
pub fn classical_specialization(e: &ExpansionResult) -> LaurentPoly {
    e.torus_element.specialize()
}

/// Sum of `x(P)` over matchings, with no valuation involved.
pub fn classical_matching_sum(w: &StringWord, t: &Triangulation, q: &QuiverWithRelations, rank: usize) -> Result<LaurentPoly> {
    let g = label_snake(w, t, q)?;
    let mut out = LaurentPoly::zero(rank);
    for p in g.enumerate_matchings() {
        out.add_term(x_of_matching(&p, &g, w, rank), 1.into());
    }
    Ok(out)
}

/// Compares the expansion of `w` with the variable created by the last
/// mutation of `seq`; `Ok(None)` on equality, otherwise a description of the
/// first differing term.
pub fn oracle_compare(
    w: &StringWord,
    t: &Triangulation,
    q: &QuiverWithRelations,
    pair: &CompatiblePair,
    seq: &[usize],
) -> Result<Option<String>> {
    let &last = seq
        .last()
        .ok_or_else(|| Error::DimensionMismatch("empty mutation sequence".into()))?;
    let seed = mutation_sequence(&QuantumSeed::initial(pair.clone()), seq, DEFAULT_DEPTH_LIMIT.max(seq.len()))?;
    let target = &seed.cluster[last - 1];
    let got = quantum_expansion(w, t, q, pair)?.torus_element;
    Ok(first_difference(&got, target))
}

/// Largest negative power of each of the first `n` initial variables.
pub fn denominator_vector(x: &TorusElement, n: usize) -> Vec<i64> {
    (0..n)
        .map(|i| x.terms().map(|(g, _)| -g[i]).max().unwrap_or(0).max(0))
        .collect()
}

/// Compares a variable produced by mutation with the expansions of the
/// strings whose crossing vector is its denominator vector. Initial
/// variables are skipped. `Ok(None)` when some candidate equals `x`.
pub fn oracle_by_denominator(
    x: &TorusElement,
    t: &Triangulation,
    q: &QuiverWithRelations,
    pair: &CompatiblePair,
    strings: &[StringWord],
) -> Result<Option<String>> {
    let n = t.n();
    let den = denominator_vector(x, n);
    if den.iter().all(|&v| v == 0) {
        return Ok(None);
    }
    let mut why = Vec::new();
    for w in strings.iter().filter(|w| w.full_dimension_vector(n) == den) {
        match first_difference(&quantum_expansion(w, t, q, pair)?.torus_element, x) {
            None => return Ok(None),
            Some(d) => why.push(format!("{}: {d}", w.render(q))),
        }
    }
    if why.is_empty() {
        return Ok(Some(format!("no string with crossing vector {den:?}")));
    }
    Ok(Some(why.join("; ")))
}

/// First lattice exponent (in order) where `a` and `b` differ.
pub fn first_difference(a: &TorusElement, b: &TorusElement) -> Option<String> {
    if a == b {
        return None;
    }
    let zero = QCoeff::zero();
    let mut keys: Vec<&Vec<i64>> = a.terms().map(|(g, _)| g).chain(b.terms().map(|(g, _)| g)).collect();
    keys.sort();
    keys.dedup();
    for g in keys {
        let x = a.coeff(g).unwrap_or(&zero);
        let y = b.coeff(g).unwrap_or(&zero);
        if x != y {
            return Some(format!("at X^{g:?}: expansion has {x}, oracle has {y}"));
        }
    }
    Some("rank mismatch".into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::strings::parse_string;

    fn kron() -> (Triangulation, QuiverWithRelations) {
        let t = Triangulation::from_json(include_str!("../data/annulus_c11.json")).unwrap();
        let q = t.build_quiver();
        (t, q)
    }

    #[test]
    fn single_arc() {
        let (t, q) = kron();
        let pair = t.compatible_pair(false).unwrap();
        let w = StringWord::trivial(2);
        let e = quantum_expansion(&w, &t, &q, &pair).unwrap();
        assert_eq!(e.per_term.len(), 2);
        assert_eq!(crossing_monomial_exponent(&w, 2), vec![0, 1]);
    }

    #[test]
    fn kronecker_g1() {
        let (t, q) = kron();
        let pair = t.compatible_pair(false).unwrap();
        let w = parse_string(&q, "1 >a> 2 <b< 1").unwrap();
        assert_eq!(crossing_monomial_exponent(&w, 2), vec![2, 1]);
        let e = quantum_expansion(&w, &t, &q, &pair).unwrap();
        assert_eq!(e.per_term.len(), 5);
        assert!(e.torus_element.is_bar_invariant());
        assert!(e.torus_element.has_nonnegative_coefficients());
        let mut mid: Vec<i64> = e
            .per_term
            .iter()
            .filter(|x| x.dimension == vec![1, 1])
            .map(|x| x.valuation)
            .collect();
        mid.sort();
        assert_eq!(mid, vec![-1, 1]);
        assert_eq!(classical_specialization(&e), classical_matching_sum(&w, &t, &q, 2).unwrap());
    }
}
