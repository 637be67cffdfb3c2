//! Exact arithmetic in the based quantum torus over `Z[q^{±1/2}]`.
//!
//! Exponents of `q^{1/2}` are stored doubled, so every q-power in the
//! crate is an integer. Lattice exponents and coefficients are kept in
//! `BTreeMap`s, which gives the canonical term order (lexicographic on the
//! lattice vector, then on the q-exponent) for free.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::{self, Matrix};

/// A half-integer, stored as twice its value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt(0);

    pub fn from_twice(twice: i64) -> Self {
        HalfInt(twice)
    }

    pub fn from_int(v: i64) -> Self {
        HalfInt(2 * v)
    }

    pub fn twice(self) -> i64 {
        self.0
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 + o.0)
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, o: HalfInt) -> HalfInt {
        HalfInt(self.0 - o.0)
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt(-self.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// An element of `Z[q^{±1/2}]`: doubled q-exponent to nonzero integer.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct QCoeff {
    terms: BTreeMap<i64, BigInt>,
}

impl QCoeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::q_pow(HalfInt::ZERO)
    }

    pub fn q_pow(e: HalfInt) -> Self {
        Self::term(e, BigInt::one())
    }

    pub fn term(e: HalfInt, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e.twice(), c);
        }
        QCoeff { terms }
    }

    pub fn from_pairs<I: IntoIterator<Item = (HalfInt, i64)>>(pairs: I) -> Self {
        let mut out = QCoeff::zero();
        for (e, c) in pairs {
            out.add_term(e.twice(), BigInt::from(c));
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Iterates `(exponent, coefficient)` in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (HalfInt, &BigInt)> {
        self.terms.iter().map(|(e, c)| (HalfInt(*e), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, twice: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(twice).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&twice);
        }
    }

    pub fn add(&self, o: &QCoeff) -> QCoeff {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c.clone());
        }
        out
    }

    pub fn neg(&self) -> QCoeff {
        QCoeff {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }

    pub fn mul(&self, o: &QCoeff) -> QCoeff {
        let mut out = QCoeff::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }

    /// Multiplies by `q^{e}`.
    pub fn shift(&self, e: HalfInt) -> QCoeff {
        QCoeff {
            terms: self.terms.iter().map(|(k, c)| (k + e.0, c.clone())).collect(),
        }
    }

    pub fn bar(&self) -> QCoeff {
        QCoeff {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    pub fn min_exp(&self) -> Option<HalfInt> {
        self.terms.keys().next().map(|e| HalfInt(*e))
    }

    pub fn max_exp(&self) -> Option<HalfInt> {
        self.terms.keys().next_back().map(|e| HalfInt(*e))
    }

    /// Value at `q^{1/2} = 1`.
    pub fn at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    /// Exact quotient in `Z[q^{±1/2}]`, or `None` if the division leaves a
    /// remainder or needs non-integer coefficients.
    pub fn div_exact(&self, d: &QCoeff) -> Option<QCoeff> {
        let (&dmax, dlead) = d.terms.iter().next_back()?;
        let dmin = *d.terms.keys().next()?;
        let mut rem = self.clone();
        let mut quot = QCoeff::zero();
        let floor = self.min_exp().map(|e| e.0 - dmin);
        while let Some((&rmax, rlead)) = rem.terms.iter().next_back() {
            let e = rmax - dmax;
            if floor.is_some_and(|f| e < f) {
                return None;
            }
            if !(rlead % dlead).is_zero() {
                return None;
            }
            let c = rlead / dlead;
            let t = QCoeff::term(HalfInt(e), c);
            rem = rem.add(&t.mul(d).neg());
            quot = quot.add(&t);
        }
        Some(quot)
    }

    fn render(&self) -> String {
        let mut s = String::new();
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if i > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let abs = c.abs();
            let q = render_q(HalfInt(*e));
            if q.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&q);
            } else {
                s.push_str(&format!("{abs}{q}"));
            }
        }
        s
    }
}

impl fmt::Display for QCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            write!(f, "0")
        } else {
            write!(f, "{}", self.render())
        }
    }
}

fn render_q(e: HalfInt) -> String {
    match e.0 {
        0 => String::new(),
        t if t % 2 == 0 => format!("q^{}", t / 2),
        t => format!("q^{{{t}/2}}"),
    }
}

fn render_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("X[({})]", parts.join(","))
}

/// An element of the quantum torus: lattice vector to nonzero coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TorusElement {
    rank: usize,
    terms: BTreeMap<Vec<i64>, QCoeff>,
}

impl TorusElement {
    pub fn zero(rank: usize) -> Self {
        TorusElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// `X^g`.
    pub fn monomial(g: Vec<i64>) -> Self {
        Self::term(g, QCoeff::one())
    }

    pub fn term(g: Vec<i64>, c: QCoeff) -> Self {
        let mut out = Self::zero(g.len());
        out.add_term(g, c);
        out
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &QCoeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &[i64]) -> Option<&QCoeff> {
        self.terms.get(g)
    }

    pub fn add_term(&mut self, g: Vec<i64>, c: QCoeff) {
        assert_eq!(g.len(), self.rank, "lattice vector of wrong length");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&g) {
            Some(existing) => {
                let sum = existing.add(&c);
                if sum.is_zero() {
                    self.terms.remove(&g);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(g, c);
            }
        }
    }

    fn check_rank(&self, other: usize) -> Result<()> {
        if self.rank == other {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank,
                found: other,
            })
        }
    }

    pub fn try_add(&self, o: &TorusElement) -> Result<TorusElement> {
        self.check_rank(o.rank)?;
        let mut out = self.clone();
        for (g, c) in &o.terms {
            out.add_term(g.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, o: &TorusElement) -> Result<TorusElement> {
        self.try_add(&o.neg())
    }

    pub fn neg(&self) -> TorusElement {
        TorusElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c.neg())).collect(),
        }
    }

    /// Multiplies every coefficient by `q^{e}`.
    pub fn shift_q(&self, e: HalfInt) -> TorusElement {
        TorusElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c.shift(e))).collect(),
        }
    }

    pub fn scale(&self, c: &QCoeff) -> TorusElement {
        let mut out = TorusElement::zero(self.rank);
        for (g, x) in &self.terms {
            out.add_term(g.clone(), x.mul(c));
        }
        out
    }

    /// Product under `X^g X^h = q^{Λ(g,h)/2} X^{g+h}`.
    pub fn mul(&self, o: &TorusElement, lambda: &Matrix) -> Result<TorusElement> {
        self.check_rank(o.rank)?;
        self.check_rank(lambda.len())?;
        let mut out = TorusElement::zero(self.rank);
        for (g, a) in &self.terms {
            for (h, b) in &o.terms {
                let shift = HalfInt(matrix::bilinear(lambda, g, h));
                let sum: Vec<i64> = g.iter().zip(h).map(|(x, y)| x + y).collect();
                out.add_term(sum, a.mul(b).shift(shift));
            }
        }
        Ok(out)
    }

    pub fn bar(&self) -> TorusElement {
        TorusElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(g, c)| (g.clone(), c.bar())).collect(),
        }
    }

    pub fn is_bar_invariant(&self) -> bool {
        *self == self.bar()
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(QCoeff::is_nonnegative)
    }

    /// Returns `b` with `b · X^g = self`.
    pub fn div_monomial(&self, g: &[i64], lambda: &Matrix) -> Result<TorusElement> {
        self.check_rank(g.len())?;
        let mut out = TorusElement::zero(self.rank);
        for (h, c) in &self.terms {
            let e: Vec<i64> = h.iter().zip(g).map(|(x, y)| x - y).collect();
            let shift = HalfInt(-matrix::bilinear(lambda, &e, g));
            out.add_term(e, c.shift(shift));
        }
        Ok(out)
    }

    /// Returns `y` with `y · d = self` exactly, by long division on the
    /// lexicographically leading terms. Fails if no such `y` exists.
    pub fn right_div_exact(&self, d: &TorusElement, lambda: &Matrix) -> Result<TorusElement> {
        self.check_rank(d.rank)?;
        let Some((dlead_g, dlead_c)) = d.terms.iter().next_back() else {
            return Err(Error::NonExactDivision("division by zero".into()));
        };
        if d.terms.len() == 1 {
            if let Some(inv) = unit_inverse(dlead_c) {
                return Ok(self.div_monomial(dlead_g, lambda)?.scale(&inv));
            }
        }
        let dmin = d.terms.keys().next().unwrap();
        let floor: Option<Vec<i64>> = self
            .terms
            .keys()
            .next()
            .map(|amin| amin.iter().zip(dmin).map(|(x, y)| x - y).collect());
        let mut rem = self.clone();
        let mut quot = TorusElement::zero(self.rank);
        while let Some((g, c)) = rem.terms.iter().next_back() {
            let e: Vec<i64> = g.iter().zip(dlead_g).map(|(x, y)| x - y).collect();
            if floor.as_ref().is_some_and(|f| e < *f) {
                return Err(Error::NonExactDivision(format!(
                    "remainder term at {g:?} below the quotient support"
                )));
            }
            let twist = HalfInt(matrix::bilinear(lambda, &e, dlead_g));
            let k = c.div_exact(&dlead_c.shift(twist)).ok_or_else(|| {
                Error::NonExactDivision(format!("coefficient {c} not divisible at {g:?}"))
            })?;
            let t = TorusElement::term(e, k);
            rem = rem.try_sub(&t.mul(d, lambda)?)?;
            quot = quot.try_add(&t)?;
        }
        Ok(quot)
    }

    /// Splits `self = q^λ · ã` with `ã` bar-invariant.
    pub fn bar_normalize(&self) -> Result<(HalfInt, TorusElement)> {
        let (_, first) = self.terms.iter().next().ok_or(Error::NotNormalizable)?;
        let sum = first.min_exp().unwrap().twice() + first.max_exp().unwrap().twice();
        if sum % 2 != 0 {
            return Err(Error::NotNormalizable);
        }
        let lam = HalfInt(sum / 2);
        let normalized = self.shift_q(-lam);
        if normalized.is_bar_invariant() {
            Ok((lam, normalized))
        } else {
            Err(Error::NotNormalizable)
        }
    }

    /// Sets `q^{1/2} = 1`.
    pub fn specialize(&self) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for (g, c) in &self.terms {
            out.add_term(g.clone(), c.at_one());
        }
        out
    }

    /// Drops lattice coordinates `keep..` (sets those generators to 1).
    pub fn truncate_rank(&self, keep: usize) -> TorusElement {
        let mut out = TorusElement::zero(keep);
        for (g, c) in &self.terms {
            out.add_term(g[..keep].to_vec(), c.clone());
        }
        out
    }

    /// Canonical text form.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        let mut first = true;
        for (g, c) in &self.terms {
            for (e, k) in c.iter() {
                let neg = k.is_negative();
                if first {
                    if neg {
                        s.push('-');
                    }
                } else {
                    s.push_str(if neg { " - " } else { " + " });
                }
                first = false;
                let abs = k.abs();
                if !abs.is_one() {
                    s.push_str(&abs.to_string());
                }
                s.push_str(&render_q(e));
                s.push_str(&render_vec(g));
            }
        }
        s
    }
}

impl fmt::Display for TorusElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

fn unit_inverse(c: &QCoeff) -> Option<QCoeff> {
    if c.len() != 1 {
        return None;
    }
    let (e, k) = c.iter().next()?;
    if k.is_one() {
        Some(QCoeff::q_pow(-e))
    } else if (-k).is_one() {
        Some(QCoeff::q_pow(-e).neg())
    } else {
        None
    }
}

/// A compatible pair `(B̃, Λ)` with `Λ B̃ = -[D; 0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompatiblePair {
    pub b_tilde: Matrix,
    pub lambda: Matrix,
    pub d: Vec<i64>,
}

impl CompatiblePair {
    pub fn new(b_tilde: Matrix, lambda: Matrix) -> Result<Self> {
        let d = check_compatible(&b_tilde, &lambda)?;
        Ok(CompatiblePair { b_tilde, lambda, d })
    }

    /// Lattice rank.
    pub fn m(&self) -> usize {
        self.b_tilde.len()
    }

    /// Number of mutable directions.
    pub fn n(&self) -> usize {
        matrix::cols(&self.b_tilde)
    }

    pub fn form(&self, g: &[i64], h: &[i64]) -> i64 {
        matrix::bilinear(&self.lambda, g, h)
    }

    /// The common value of `D` when it is a scalar matrix.
    pub fn uniform_d(&self) -> Option<i64> {
        let first = *self.d.first()?;
        self.d.iter().all(|&x| x == first).then_some(first)
    }
}

pub fn torus_mul(a: &TorusElement, b: &TorusElement, pair: &CompatiblePair) -> Result<TorusElement> {
    a.mul(b, &pair.lambda)
}

pub fn torus_div_exact(a: &TorusElement, g: &[i64], pair: &CompatiblePair) -> Result<TorusElement> {
    if a.is_zero() {
        return Ok(a.clone());
    }
    let monomial_free = a
        .terms
        .keys()
        .any(|h| h.iter().zip(g).any(|(x, y)| x - y < 0));
    if monomial_free {
        return Err(Error::NonExactDivision(format!(
            "no monomial factor X^{g:?} in every term"
        )));
    }
    a.div_monomial(g, &pair.lambda)
}

/// Validates `(B̃, Λ)` and returns the diagonal `d` of `D`.
pub fn check_compatible(b_tilde: &Matrix, lambda: &Matrix) -> Result<Vec<i64>> {
    let m = b_tilde.len();
    let n = matrix::cols(b_tilde);
    if lambda.len() != m || lambda.iter().any(|r| r.len() != m) {
        return Err(Error::DimensionMismatch(format!(
            "lambda must be {m}x{m} to match b_tilde rows"
        )));
    }
    if let Some((i, j)) = matrix::is_skew(lambda) {
        return Err(Error::NotSkew(i, j));
    }
    let prod = matrix::mul(lambda, b_tilde);
    let mut d = Vec::with_capacity(n);
    for (i, row) in prod.iter().enumerate() {
        for (j, &x) in row.iter().enumerate() {
            if i == j && i < n {
                continue;
            }
            if x != 0 {
                return Err(Error::NotCompatible(format!(
                    "entry ({i},{j}) of lambda*b_tilde is {x}"
                )));
            }
        }
    }
    for (i, row) in prod.iter().enumerate().take(n) {
        let di = -row[i];
        if di <= 0 {
            return Err(Error::NonPositiveD { index: i, value: di });
        }
        d.push(di);
    }
    Ok(d)
}

/// Normalized ordered product `q^{-Σ_{i<j} Λ_t(a_i e_i, a_j e_j)/2} X_1^{a_1} ⋯ X_m^{a_m}`,
/// where `seed_lambda` is the form of the seed owning `variables` and the
/// products are taken in the initial torus with form `torus_lambda`.
pub fn cluster_monomial(
    exponents: &[i64],
    variables: &[TorusElement],
    seed_lambda: &Matrix,
    torus_lambda: &Matrix,
) -> Result<TorusElement> {
    if exponents.len() != variables.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} exponents for {} variables",
            exponents.len(),
            variables.len()
        )));
    }
    if exponents.iter().any(|&a| a < 0) {
        return Err(Error::DimensionMismatch("negative cluster exponent".into()));
    }
    let rank = torus_lambda.len();
    let mut prefactor = 0;
    for i in 0..exponents.len() {
        for j in i + 1..exponents.len() {
            prefactor -= exponents[i] * exponents[j] * seed_lambda[i][j];
        }
    }
    let mut out = TorusElement::one(rank);
    for (a, x) in exponents.iter().zip(variables) {
        for _ in 0..*a {
            out = out.mul(x, torus_lambda)?;
        }
    }
    Ok(out.shift_q(HalfInt(prefactor)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn std_lambda() -> Matrix {
        vec![vec![0, 1], vec![-1, 0]]
    }

    fn h(t: i64) -> HalfInt {
        HalfInt::from_twice(t)
    }

    #[test]
    fn defining_relation() {
        let x = TorusElement::monomial(vec![1, 0]);
        let y = TorusElement::monomial(vec![0, 1]);
        let p = x.mul(&y, &std_lambda()).unwrap();
        assert_eq!(p, TorusElement::term(vec![1, 1], QCoeff::q_pow(h(1))));
        assert_eq!(p.render(), "q^{1/2}X[(1,1)]");
    }

    #[test]
    fn identity_element() {
        let a = TorusElement::monomial(vec![2, -1])
            .try_add(&TorusElement::term(vec![0, 3], QCoeff::q_pow(h(-3))))
            .unwrap();
        let one = TorusElement::one(2);
        assert_eq!(one.mul(&a, &std_lambda()).unwrap(), a);
        assert_eq!(a.mul(&one, &std_lambda()).unwrap(), a);
    }

    #[test]
    fn rank_mismatch() {
        let a = TorusElement::monomial(vec![1, 0]);
        let b = TorusElement::monomial(vec![1, 0, 0]);
        assert!(matches!(a.mul(&b, &std_lambda()), Err(Error::RankMismatch { .. })));
    }

    #[test]
    fn div_by_monomial() {
        // q^{1/2} X^{(1,1)} = b X^{(1,0)}  =>  b = q X^{(0,1)} since X^{(0,1)} X^{(1,0)} = q^{-1/2} X^{(1,1)}.
        let pair = CompatiblePair {
            b_tilde: vec![vec![0, 1], vec![-1, 0]],
            lambda: std_lambda(),
            d: vec![1, 1],
        };
        let a = TorusElement::term(vec![1, 1], QCoeff::q_pow(h(1)));
        let b = torus_div_exact(&a, &[1, 0], &pair).unwrap();
        assert_eq!(b, TorusElement::term(vec![0, 1], QCoeff::q_pow(h(2))));
        let back = b.mul(&TorusElement::monomial(vec![1, 0]), &pair.lambda).unwrap();
        assert_eq!(back, a);

        let a = TorusElement::monomial(vec![2, 0]);
        assert_eq!(torus_div_exact(&a, &[2, 0], &pair).unwrap(), TorusElement::one(2));

        let a = TorusElement::monomial(vec![1, 0])
            .try_add(&TorusElement::monomial(vec![0, 1]))
            .unwrap();
        assert!(torus_div_exact(&a, &[1, 1], &pair).is_err());
    }

    #[test]
    fn bar_examples() {
        let a = TorusElement::term(vec![1, 1], QCoeff::q_pow(h(1)));
        assert_eq!(a.bar(), TorusElement::term(vec![1, 1], QCoeff::q_pow(h(-1))));
        assert_eq!(a.bar().bar(), a);
    }

    #[test]
    fn bar_normalize_examples() {
        let a = TorusElement::term(vec![1, 0], QCoeff::q_pow(h(3)));
        let (lam, n) = a.bar_normalize().unwrap();
        assert_eq!(lam, h(3));
        assert_eq!(n, TorusElement::monomial(vec![1, 0]));

        let sym = TorusElement::term(vec![0, 1], QCoeff::from_pairs([(h(2), 1), (h(-2), 1)]));
        let (lam, n) = sym.bar_normalize().unwrap();
        assert_eq!(lam, HalfInt::ZERO);
        assert_eq!(n, sym);

        let bad = TorusElement::term(vec![0, 1], QCoeff::q_pow(h(4)))
            .try_add(&TorusElement::monomial(vec![1, 0]))
            .unwrap();
        assert_eq!(bad.bar_normalize(), Err(Error::NotNormalizable));
    }

    #[test]
    fn cluster_monomial_examples() {
        let l = std_lambda();
        let vars = vec![TorusElement::monomial(vec![1, 0]), TorusElement::monomial(vec![0, 1])];
        assert_eq!(cluster_monomial(&[1, 0], &vars, &l, &l).unwrap(), vars[0]);
        assert_eq!(
            cluster_monomial(&[1, 1], &vars, &l, &l).unwrap(),
            TorusElement::monomial(vec![1, 1])
        );
        assert_eq!(cluster_monomial(&[0, 0], &vars, &l, &l).unwrap(), TorusElement::one(2));
        assert!(cluster_monomial(&[1], &vars, &l, &l).is_err());
    }

    #[test]
    fn compatible_examples() {
        let b = vec![vec![0, 2], vec![-2, 0]];
        assert_eq!(check_compatible(&b, &std_lambda()).unwrap(), vec![2, 2]);
        assert!(matches!(
            check_compatible(&b, &vec![vec![0, 1], vec![1, 0]]),
            Err(Error::NotSkew(..))
        ));
        assert!(matches!(
            check_compatible(&b, &vec![vec![0, 0], vec![0, 0]]),
            Err(Error::NonPositiveD { .. })
        ));
        assert_eq!(check_compatible(&vec![vec![0], vec![1]], &vec![vec![0, -1], vec![1, 0]]).unwrap(), vec![1]);
    }

    #[test]
    fn right_division_by_polynomial() {
        let l = std_lambda();
        let p = TorusElement::monomial(vec![1, 0])
            .try_add(&TorusElement::term(vec![0, 1], QCoeff::q_pow(h(2))))
            .unwrap();
        let y = TorusElement::monomial(vec![-1, 2])
            .try_add(&TorusElement::monomial(vec![0, -1]))
            .unwrap();
        let a = y.mul(&p, &l).unwrap();
        assert_eq!(a.right_div_exact(&p, &l).unwrap(), y);
        let off = a.try_add(&TorusElement::monomial(vec![5, 5])).unwrap();
        assert!(off.right_div_exact(&p, &l).is_err());
    }

    #[test]
    fn rendering() {
        let e = TorusElement::term(vec![0, -1], QCoeff::from_pairs([(h(-2), 1), (h(2), 2)]))
            .try_add(&TorusElement::term(vec![1, 0], QCoeff::from_pairs([(h(3), -1)])))
            .unwrap();
        assert_eq!(e.render(), "q^-1X[(0,-1)] + 2q^1X[(0,-1)] - q^{3/2}X[(1,0)]");
        assert_eq!(TorusElement::zero(2).render(), "0");
    }
}
