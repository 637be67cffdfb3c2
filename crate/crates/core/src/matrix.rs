//! Small dense integer matrices, row-major `Vec<Vec<i64>>`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

pub type Matrix = Vec<Vec<i64>>;

pub fn zeros(rows: usize, cols: usize) -> Matrix {
    vec![vec![0; cols]; rows]
}

pub fn cols(m: &Matrix) -> usize {
    m.first().map_or(0, Vec::len)
}

pub fn mul(a: &Matrix, b: &Matrix) -> Matrix {
    let (r, k, c) = (a.len(), b.len(), cols(b));
    let mut out = zeros(r, c);
    for i in 0..r {
        for l in 0..k {
            let x = a[i][l];
            if x == 0 {
                continue;
            }
            for j in 0..c {
                out[i][j] += x * b[l][j];
            }
        }
    }
    out
}

pub fn mul_vec(a: &Matrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// `g^T A h`.
pub fn bilinear(a: &Matrix, g: &[i64], h: &[i64]) -> i64 {
    let mut s = 0;
    for (i, gi) in g.iter().enumerate() {
        if *gi == 0 {
            continue;
        }
        for (j, hj) in h.iter().enumerate() {
            s += gi * a[i][j] * hj;
        }
    }
    s
}

pub fn is_skew(a: &Matrix) -> Option<(usize, usize)> {
    let n = a.len();
    for i in 0..n {
        if a[i].len() != n {
            return Some((i, 0));
        }
        for j in 0..n {
            if a[i][j] != -a[j][i] {
                return Some((i, j));
            }
        }
    }
    None
}

/// Rank over the rationals, by fraction-free elimination in `i128`.
pub fn rank(a: &Matrix) -> usize {
    let mut m: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let rows = m.len();
    let c = cols(a);
    let mut r = 0;
    for col in 0..c {
        let Some(p) = (r..rows).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..rows {
            if i != r && m[i][col] != 0 {
                let (a0, b0) = (m[r][col], m[i][col]);
                let g = gcd(a0, b0);
                let (fa, fb) = (b0 / g, a0 / g);
                for j in 0..c {
                    m[i][j] = m[i][j] * fb - m[r][j] * fa;
                }
                let g = m[i].iter().fold(0, |acc, &x| gcd(acc, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn unit(len: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; len];
    v[i] = 1;
    v
}

/// An integer solution of `A x = b` (if one exists) together with a basis of
/// the integer kernel of `A`, via column-style Hermite elimination.
pub fn solve_integer(a: &[Vec<BigInt>], b: &[BigInt]) -> Option<(Vec<BigInt>, Vec<Vec<BigInt>>)> {
    let rows = a.len();
    let n = a.first().map_or(0, Vec::len);
    let mut h: Vec<Vec<BigInt>> = a.to_vec();
    // u holds the accumulated unimodular column operations: A·U = H.
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
        .collect();
    let col_op = |m: &mut Vec<Vec<BigInt>>, j: usize, k: usize, f: &BigInt| {
        for row in m.iter_mut() {
            let v = &row[k] * f;
            row[j] -= v;
        }
    };
    let swap = |m: &mut Vec<Vec<BigInt>>, j: usize, k: usize| {
        for row in m.iter_mut() {
            row.swap(j, k);
        }
    };
    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut c = 0;
    for r in 0..rows {
        if c == n {
            break;
        }
        loop {
            let nz: Vec<usize> = (c..n).filter(|&j| !h[r][j].is_zero()).collect();
            if nz.is_empty() {
                break;
            }
            let p = *nz.iter().min_by_key(|&&j| h[r][j].abs()).unwrap();
            swap(&mut h, c, p);
            swap(&mut u, c, p);
            let mut done = true;
            for j in c + 1..n {
                if !h[r][j].is_zero() {
                    let f = h[r][j].div_floor(&h[r][c]);
                    col_op(&mut h, j, c, &f);
                    col_op(&mut u, j, c, &f);
                    if !h[r][j].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                pivots.push((r, c));
                c += 1;
                break;
            }
        }
    }
    // Forward substitution on the column echelon form.
    let mut y = vec![BigInt::zero(); n];
    let mut next = 0;
    for r in 0..rows {
        let mut acc = b[r].clone();
        for j in 0..next {
            acc -= &h[r][j] * &y[j];
        }
        if next < pivots.len() && pivots[next].0 == r {
            let piv = &h[r][next];
            if !(&acc % piv).is_zero() {
                return None;
            }
            y[next] = acc / piv;
            next += 1;
        } else if !acc.is_zero() {
            return None;
        }
    }
    let x: Vec<BigInt> = (0..n)
        .map(|i| (0..n).map(|j| &u[i][j] * &y[j]).sum())
        .collect();
    let kernel = (pivots.len()..n)
        .map(|j| (0..n).map(|i| u[i][j].clone()).collect())
        .collect();
    Some((x, kernel))
}
