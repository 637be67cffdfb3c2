//! Quantum seeds and their mutation, with every cluster variable stored in
//! the initial quantum torus.

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::matrix::{self, Matrix};
use crate::torus::{check_compatible, cluster_monomial, CompatiblePair, HalfInt, TorusElement};

pub const DEFAULT_DEPTH_LIMIT: usize = 12;

fn pos(x: i64) -> i64 {
    x.max(0)
}

fn check_direction(k: usize, n: usize) -> Result<()> {
    if (1..=n).contains(&k) {
        Ok(())
    } else {
        Err(Error::DirectionOutOfRange { k, n })
    }
}

/// Matrix mutation in direction `k` (1-based).
pub fn mutate_matrix(b: &Matrix, k: usize) -> Result<Matrix> {
    let n = matrix::cols(b);
    check_direction(k, n)?;
    let k = k - 1;
    let mut out = b.clone();
    for (i, row) in out.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            *x = if i == k || j == k {
                -b[i][j]
            } else {
                b[i][j] + pos(b[i][k]) * b[k][j] + b[i][k] * pos(-b[k][j])
            };
        }
    }
    Ok(out)
}

/// Mutation of the quasi-commutation form in direction `k` (1-based).
pub fn mutate_lambda(lambda: &Matrix, b: &Matrix, k: usize) -> Result<Matrix> {
    check_compatible(b, lambda)?;
    let n = matrix::cols(b);
    check_direction(k, n)?;
    let k = k - 1;
    let m = lambda.len();
    let mut col: Vec<i64> = (0..m).map(|l| pos(b[l][k])).collect();
    col[k] -= 1;
    let mut out = lambda.clone();
    for i in 0..m {
        if i == k {
            continue;
        }
        let v = matrix::bilinear(lambda, &matrix::unit(m, i), &col);
        out[i][k] = v;
        out[k][i] = -v;
    }
    Ok(out)
}

/// Mutation sequences of length `1..=len` over `1..=n` without immediate
/// repetitions, shortest first.
pub fn reduced_sequences(n: usize, len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier = vec![vec![]];
    for _ in 0..len {
        let mut next = Vec::new();
        for s in &frontier {
            for k in (1..=n).filter(|&k| s.last() != Some(&k)) {
                let mut t: Vec<usize> = s.clone();
                t.push(k);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// A quantum seed whose cluster variables live in the initial torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumSeed {
    pub pair: CompatiblePair,
    pub cluster: Vec<TorusElement>,
    /// Form of the initial torus in which `cluster` is expressed.
    pub initial_lambda: Matrix,
    pub depth: usize,
}

impl QuantumSeed {
    pub fn initial(pair: CompatiblePair) -> Self {
        let m = pair.m();
        let cluster = (0..m).map(|i| TorusElement::monomial(matrix::unit(m, i))).collect();
        QuantumSeed {
            initial_lambda: pair.lambda.clone(),
            pair,
            cluster,
            depth: 0,
        }
    }

    pub fn n(&self) -> usize {
        self.pair.n()
    }

    pub fn frozen_count(&self) -> usize {
        self.pair.m() - self.pair.n()
    }

    /// The seed monomial `X(t)^c` for `c ≥ 0`, expanded in the initial torus.
    pub fn monomial(&self, c: &[i64]) -> Result<TorusElement> {
        cluster_monomial(c, &self.cluster, &self.pair.lambda, &self.initial_lambda)
    }
}

/// Mutation in direction `k` (1-based) via the exchange relation.
pub fn mutate_seed(seed: &QuantumSeed, k: usize) -> Result<QuantumSeed> {
    let n = seed.n();
    check_direction(k, n)?;
    let b = &seed.pair.b_tilde;
    let kk = k - 1;
    let m = seed.pair.m();
    let ek = matrix::unit(m, kk);
    let plus: Vec<i64> = (0..m).map(|i| pos(b[i][kk])).collect();
    let minus: Vec<i64> = (0..m).map(|i| pos(-b[i][kk])).collect();
    // X(t)^{c - e_k} · X_k(t) = q^{Λ_t(c, e_k)/2} X(t)^c
    let mut numerator = TorusElement::zero(m);
    for c in [&plus, &minus] {
        let twist = HalfInt::from_twice(matrix::bilinear(&seed.pair.lambda, c, &ek));
        numerator = numerator.try_add(&seed.monomial(c)?.shift_q(twist))?;
    }
    let new_var = numerator
        .right_div_exact(&seed.cluster[kk], &seed.initial_lambda)
        .map_err(|e| Error::Internal(format!("exchange relation in direction {k}: {e}")))?;
    let b_new = mutate_matrix(b, k)?;
    let l_new = mutate_lambda(&seed.pair.lambda, b, k)?;
    let pair = CompatiblePair::new(b_new, l_new)?;
    if pair.d != seed.pair.d {
        return Err(Error::Internal("mutation changed the compatibility diagonal".into()));
    }
    let mut cluster = seed.cluster.clone();
    cluster[kk] = new_var;
    Ok(QuantumSeed {
        pair,
        cluster,
        initial_lambda: seed.initial_lambda.clone(),
        depth: seed.depth + 1,
    })
}

/// Applies `ks` left to right, refusing to go deeper than `limit` mutations.
pub fn mutation_sequence(seed: &QuantumSeed, ks: &[usize], limit: usize) -> Result<QuantumSeed> {
    let mut cur = seed.clone();
    for &k in ks {
        if cur.depth + 1 > limit {
            return Err(Error::DepthLimit {
                depth: cur.depth + 1,
                limit,
            });
        }
        cur = mutate_seed(&cur, k)?;
    }
    Ok(cur)
}

/// Commutative seed used to cross-check the `q = 1` shadow of mutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassicalSeed {
    pub b_tilde: Matrix,
    pub cluster: Vec<LaurentPoly>,
}

impl ClassicalSeed {
    pub fn initial(b_tilde: Matrix) -> Self {
        let m = b_tilde.len();
        let cluster = (0..m).map(|i| LaurentPoly::monomial(matrix::unit(m, i))).collect();
        ClassicalSeed { b_tilde, cluster }
    }

    pub fn mutate(&self, k: usize) -> Result<ClassicalSeed> {
        let n = matrix::cols(&self.b_tilde);
        check_direction(k, n)?;
        let kk = k - 1;
        let m = self.cluster.len();
        let mut p = LaurentPoly::one(m);
        let mut r = LaurentPoly::one(m);
        for i in 0..m {
            let b = self.b_tilde[i][kk];
            if b > 0 {
                p = p.mul(&self.cluster[i].pow(b as u32));
            } else if b < 0 {
                r = r.mul(&self.cluster[i].pow((-b) as u32));
            }
        }
        let new_var = p
            .add(&r)
            .div_exact(&self.cluster[kk])
            .map_err(|e| Error::Internal(format!("classical exchange relation: {e}")))?;
        let mut cluster = self.cluster.clone();
        cluster[kk] = new_var;
        Ok(ClassicalSeed {
            b_tilde: mutate_matrix(&self.b_tilde, k)?,
            cluster,
        })
    }

    pub fn mutate_sequence(&self, ks: &[usize]) -> Result<ClassicalSeed> {
        ks.iter().try_fold(self.clone(), |s, &k| s.mutate(k))
    }
}
