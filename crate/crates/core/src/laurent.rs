//! Commutative Laurent polynomials with integer coefficients (the `q = 1` shadow).

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    rank: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl LaurentPoly {
    pub fn zero(rank: usize) -> Self {
        LaurentPoly {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(g: Vec<i64>) -> Self {
        let mut p = Self::zero(g.len());
        p.add_term(g, BigInt::one());
        p
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

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &[i64]) -> BigInt {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, g: Vec<i64>, c: BigInt) {
        assert_eq!(g.len(), self.rank, "lattice vector of wrong length");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(g.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&g);
        }
    }

    pub fn add(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (g, c) in &o.terms {
            out.add_term(g.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (g, c) in &o.terms {
            out.add_term(g.clone(), -c);
        }
        out
    }

    pub fn mul(&self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero(self.rank);
        for (g, a) in &self.terms {
            for (h, b) in &o.terms {
                let s = g.iter().zip(h).map(|(x, y)| x + y).collect();
                out.add_term(s, a * b);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        (0..k).fold(LaurentPoly::one(self.rank), |acc, _| acc.mul(self))
    }

    /// Exact quotient by lexicographic long division.
    pub fn div_exact(&self, d: &LaurentPoly) -> Result<LaurentPoly> {
        let (dg, dc) = d
            .terms
            .iter()
            .next_back()
            .ok_or_else(|| Error::NonExactDivision("division by zero".into()))?;
        let dmin = d.terms.keys().next().unwrap();
        let floor: Option<Vec<i64>> = self
            .terms
            .keys()
            .next()
            .map(|a| a.iter().zip(dmin).map(|(x, y)| x - y).collect());
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero(self.rank);
        while let Some((g, c)) = rem.terms.iter().next_back() {
            let e: Vec<i64> = g.iter().zip(dg).map(|(x, y)| x - y).collect();
            if floor.as_ref().is_some_and(|f| e < *f) || !(c % dc).is_zero() {
                return Err(Error::NonExactDivision(format!("remainder at {g:?}")));
            }
            let mut t = LaurentPoly::zero(self.rank);
            t.add_term(e, c / dc);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Ok(quot)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            let parts: Vec<String> = g.iter().map(i64::to_string).collect();
            write!(f, "X[({})]", parts.join(","))?;
        }
        Ok(())
    }
}
