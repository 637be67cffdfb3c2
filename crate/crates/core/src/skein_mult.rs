//! Multiplication of two cluster variables whose string modules have a
//! one-dimensional extension space: `X_v X_w` is a combination of the two
//! smoothings `X_{u1} X_{u2}` and `X_{u3} X_{u4}`, with the q-powers solved
//! exactly rather than read off the surface.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::quantum_expansion;
use crate::laurent::LaurentPoly;
use crate::strings::{arrow_extensions, overlap_extensions, StringWord};
use crate::surface::{QuiverWithRelations, Triangulation};
use crate::torus::{CompatiblePair, HalfInt, TorusElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtensionKind {
    Arrow,
    Overlap,
}

/// The smoothings of the crossing of `v` and `w`; `None` is the empty
/// string, whose variable is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmoothingQuadruple {
    pub kind: ExtensionKind,
    pub u1: Option<StringWord>,
    pub u2: Option<StringWord>,
    pub u3: Option<StringWord>,
    pub u4: Option<StringWord>,
}

/// Every `(α, β)` with `p = q^α a + q^β b`, for `a`, `b` nonzero with
/// nonnegative coefficients.
pub fn solve_exponents(p: &TorusElement, a: &TorusElement, b: &TorusElement) -> Vec<(HalfInt, HalfInt)> {
    let mut alphas = BTreeSet::new();
    // no cancellation is possible, so every summand of q^α a shows up in p
    if let Some((g, ca)) = a.terms().next() {
        let top = ca.max_exp().expect("nonzero coefficient");
        if let Some(cp) = p.coeff(g) {
            for (e, _) in cp.iter() {
                alphas.insert(e - top);
            }
        }
    }
    let mut out = Vec::new();
    for alpha in alphas {
        let Ok(rest) = p.try_sub(&a.shift_q(alpha)) else {
            continue;
        };
        let Some((g, cb)) = b.terms().next() else {
            continue;
        };
        let Some(cr) = rest.coeff(g) else {
            continue;
        };
        let beta = cr.max_exp().expect("nonzero coefficient") - cb.max_exp().expect("nonzero coefficient");
        if rest == b.shift_q(beta) {
            out.push((alpha, beta));
        }
    }
    out
}

fn expand(u: &Option<StringWord>, t: &Triangulation, q: &QuiverWithRelations, pair: &CompatiblePair) -> Result<TorusElement> {
    match u {
        None => Ok(TorusElement::one(pair.m())),
        Some(w) => Ok(quantum_expansion(w, t, q, pair)?.torus_element),
    }
}

fn product(x: &Option<StringWord>, y: &Option<StringWord>, t: &Triangulation, q: &QuiverWithRelations, pair: &CompatiblePair) -> Result<TorusElement> {
    expand(x, t, q, pair)?.mul(&expand(y, t, q, pair)?, &pair.lambda)
}

fn empties(x: &Option<StringWord>, y: &Option<StringWord>) -> i64 {
    x.is_none() as i64 + y.is_none() as i64
}

/// An empty slot is an arc that has no string: a boundary segment or an arc
/// of the triangulation itself. Finds the monomials `f1`, `f2` filling the
/// empty slots of the two smoothings with `p = x^{f1} a + x^{f2} b` at
/// `q = 1`. With boundary arcs set to 1 (`exact = false`) a slot may also
/// contribute nothing.
fn slot_fillings(
    p: &LaurentPoly,
    a: &LaurentPoly,
    b: &LaurentPoly,
    exact: bool,
    (k1, k2): (i64, i64),
) -> Vec<(Vec<i64>, Vec<i64>)> {
    let admissible = |f: &[i64], k: i64| {
        let deg: i64 = f.iter().sum();
        f.iter().all(|&x| x >= 0) && if exact { deg == k } else { deg <= k }
    };
    let diff = |x: &[i64], y: &[i64]| -> Vec<i64> { x.iter().zip(y).map(|(u, v)| u - v).collect() };
    let (Some((ga, _)), Some((gb, _))) = (a.terms().next(), b.terms().next()) else {
        return vec![];
    };
    let mut out = Vec::new();
    for (h, _) in p.terms() {
        let f1 = diff(h, ga);
        if !admissible(&f1, k1) {
            continue;
        }
        let rest = p.sub(&LaurentPoly::monomial(f1.clone()).mul(a));
        let Some((gr, _)) = rest.terms().next() else {
            continue;
        };
        let f2 = diff(gr, gb);
        if admissible(&f2, k2) && rest == LaurentPoly::monomial(f2.clone()).mul(b) && !out.contains(&(f1.clone(), f2.clone())) {
            out.push((f1, f2));
        }
    }
    out
}

/// Candidate quadruples, one group per extension of `M(v)` by `M(w)`.
/// The arrow case leaves the second factor of the first smoothing open: a
/// boundary segment or the trivial string at either end of the arrow.
pub fn smoothing_candidates(v: &StringWord, w: &StringWord, q: &QuiverWithRelations) -> Result<Vec<Vec<SmoothingQuadruple>>> {
    let mut out = Vec::new();
    for e in arrow_extensions(v, w, q) {
        let u2s = [None, Some(e.u2_candidates[0].clone()), Some(e.u2_candidates[1].clone())];
        out.push(
            u2s.into_iter()
                .map(|u2| SmoothingQuadruple {
                    kind: ExtensionKind::Arrow,
                    u1: Some(e.u1.clone()),
                    u2,
                    u3: e.u3.clone(),
                    u4: e.u4.clone(),
                })
                .collect(),
        );
    }
    for e in overlap_extensions(v, w, q)? {
        out.push(vec![SmoothingQuadruple {
            kind: ExtensionKind::Overlap,
            u1: Some(e.u1),
            u2: Some(e.u2),
            u3: e.u3,
            u4: e.u4,
        }]);
    }
    Ok(out)
}

/// One solution of the multiplication identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub alpha: HalfInt,
    pub beta: HalfInt,
    /// Bar-normalized smoothings, boundary segments included.
    pub m1: TorusElement,
    pub m2: TorusElement,
    /// Arcs without strings filling the empty slots.
    pub frozen1: Vec<i64>,
    pub frozen2: Vec<i64>,
}

/// Every way to write `X_v X_w = q^α M̃_1 + q^β M̃_2` for one quadruple.
pub fn certify_quadruple(
    v: &StringWord,
    w: &StringWord,
    quad: &SmoothingQuadruple,
    t: &Triangulation,
    q: &QuiverWithRelations,
    pair: &CompatiblePair,
) -> Result<Vec<Solution>> {
    let xv = quantum_expansion(v, t, q, pair)?.torus_element;
    let xw = quantum_expansion(w, t, q, pair)?.torus_element;
    let p = xv.mul(&xw, &pair.lambda)?;
    let a = product(&quad.u1, &quad.u2, t, q, pair)?;
    let b = product(&quad.u3, &quad.u4, t, q, pair)?;
    let m = pair.m();
    let ks = (empties(&quad.u1, &quad.u2), empties(&quad.u3, &quad.u4));
    let fills = slot_fillings(&p.specialize(), &a.specialize(), &b.specialize(), m == t.m(), ks);
    let mut out = Vec::new();
    for (f1, f2) in fills {
        let normal = |x: &TorusElement, f: &[i64]| -> Result<Option<TorusElement>> {
            match x.mul(&TorusElement::monomial(f.to_vec()), &pair.lambda)?.bar_normalize() {
                Ok((_, e)) => Ok(Some(e)),
                Err(Error::NotNormalizable) => Ok(None),
                Err(e) => Err(e),
            }
        };
        let (Some(m1), Some(m2)) = (normal(&a, &f1)?, normal(&b, &f2)?) else {
            continue;
        };
        for (alpha, beta) in solve_exponents(&p, &m1, &m2) {
            out.push(Solution {
                alpha,
                beta,
                m1: m1.clone(),
                m2: m2.clone(),
                frozen1: f1.clone(),
                frozen2: f2.clone(),
            });
        }
    }
    Ok(out)
}

/// Proof that `X_v X_w = q^α M̃_1 + q^β M̃_2` with exact arithmetic.
///
/// Writing `α = λ − δ`, `β = λ + δ`, the step `δ = d/4` is fixed by the
/// compatibility diagonal `d`; its sign records whether `M(v)` extends by
/// `M(w)` (`+`) or the other way round (`−`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicationCertificate {
    pub quad: SmoothingQuadruple,
    /// `M(v)` is extended by `M(w)` rather than the reverse.
    pub forward: bool,
    pub alpha: HalfInt,
    pub beta: HalfInt,
    /// `4λ = 2(α + β)`.
    pub lambda4: i64,
    pub d: i64,
    pub m1: TorusElement,
    pub m2: TorusElement,
    pub frozen1: Vec<i64>,
    pub frozen2: Vec<i64>,
    pub product: TorusElement,
    pub identity_verified: bool,
}

impl MultiplicationCertificate {
    /// `λ` as a reduced fraction.
    pub fn lambda_display(&self) -> String {
        match self.lambda4 {
            x if x % 4 == 0 => (x / 4).to_string(),
            x if x % 2 == 0 => format!("{}/2", x / 2),
            x => format!("{x}/4"),
        }
    }
}

/// Expands `X_v X_w` along the unique extension between `M(v)` and `M(w)`.
pub fn multiply_and_certify(
    v: &StringWord,
    w: &StringWord,
    t: &Triangulation,
    q: &QuiverWithRelations,
    pair: &CompatiblePair,
) -> Result<MultiplicationCertificate> {
    let d = pair
        .uniform_d()
        .ok_or_else(|| Error::NotCompatible(format!("non-uniform diagonal {:?}", pair.d)))?;
    let fwd = smoothing_candidates(v, w, q)?;
    let back = smoothing_candidates(w, v, q)?;
    let (group, forward) = match (fwd.len(), back.len()) {
        (1, 0) => (&fwd[0], true),
        (0, 1) => (&back[0], false),
        (x, y) => {
            return Err(Error::NoSolution(format!(
                "{} and {} have {} extensions, not one",
                v.render(q),
                w.render(q),
                x + y
            )))
        }
    };
    let mut found = Vec::new();
    for quad in group {
        for s in certify_quadruple(v, w, quad, t, q, pair)? {
            found.push((quad.clone(), s));
        }
    }
    let (quad, s) = match found.len() {
        0 => return Err(Error::NoSolution(format!("{} · {}", v.render(q), w.render(q)))),
        1 => found.pop().unwrap(),
        k => {
            return Err(Error::AmbiguousSolution(format!(
                "{k} solutions for {} · {}",
                v.render(q),
                w.render(q)
            )))
        }
    };
    let xv = quantum_expansion(v, t, q, pair)?.torus_element;
    let xw = quantum_expansion(w, t, q, pair)?.torus_element;
    let product = xv.mul(&xw, &pair.lambda)?;
    let rhs = s.m1.shift_q(s.alpha).try_add(&s.m2.shift_q(s.beta))?;
    Ok(MultiplicationCertificate {
        quad,
        forward,
        alpha: s.alpha,
        beta: s.beta,
        lambda4: s.alpha.twice() + s.beta.twice(),
        d,
        m1: s.m1,
        m2: s.m2,
        frozen1: s.frozen1,
        frozen2: s.frozen2,
        identity_verified: rhs == product,
        product,
    })
}

/// Recomputes the identity from the stored polynomials and checks that the
/// two prefactors sit `d/2` apart with the orientation recorded in `forward`.
pub fn relative_exponent_check(cert: &MultiplicationCertificate) -> bool {
    let step = if cert.forward { cert.d } else { -cert.d };
    let spaced = (cert.beta - cert.alpha).twice() == step;
    let rhs = cert.m1.shift_q(cert.alpha).try_add(&cert.m2.shift_q(cert.beta));
    spaced && rhs.is_ok_and(|r| r == cert.product)
}

/// The identity at `q = 1`: the classical exchange of smoothings.
pub fn classical_identity(cert: &MultiplicationCertificate) -> bool {
    cert.product.specialize() == cert.m1.specialize().add(&cert.m2.specialize())
}
