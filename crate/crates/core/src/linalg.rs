//! Exact integer matrix helpers for the lattice point enumerators.

// Elimination steps combine two rows at distinct indices; explicit indices
// keep the pivot arithmetic readable.
#![allow(clippy::needless_range_loop)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub(crate) type Mat = Vec<Vec<BigInt>>;

/// A diagonalization `P * A * Q = [D; 0]` of an integer matrix with
/// unimodular `P` and `Q`, keeping only the column transform `Q` and the
/// positive diagonal `D`. Exists iff the columns of `A` are linearly
/// independent.
pub(crate) struct Diagonalization {
    pub diagonal: Vec<BigInt>,
    pub q: Mat,
}

pub(crate) fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::one() } else { BigInt::zero() })
                .collect()
        })
        .collect()
}

pub(crate) fn transpose(a: &Mat) -> Mat {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    (0..cols)
        .map(|j| (0..rows).map(|i| a[i][j].clone()).collect())
        .collect()
}

pub(crate) fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let rows = a.len();
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| (0..inner).map(|k| &a[i][k] * &b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub(crate) fn mat_vec(a: &Mat, v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

/// Diagonalizes `a` (rows x cols, rows >= cols) by unimodular row and column
/// operations. Row operations are discarded; column operations accumulate in
/// `q`. Returns `None` when the columns are linearly dependent.
pub(crate) fn diagonalize(a: &Mat) -> Option<Diagonalization> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if rows < cols {
        return None;
    }
    let mut m: Mat = a.to_vec();
    let mut q = identity(cols);

    for k in 0..cols {
        // Bring a nonzero entry of the trailing submatrix to the pivot seat.
        let pivot = (k..rows)
            .flat_map(|i| (k..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero());
        let (pi, pj) = pivot?;
        m.swap(k, pi);
        if pj != k {
            for row in m.iter_mut() {
                row.swap(k, pj);
            }
            for row in q.iter_mut() {
                row.swap(k, pj);
            }
        }

        // Euclidean reduction until row k and column k are clear off the pivot.
        loop {
            let mut clean = true;
            for i in k + 1..rows {
                if m[i][k].is_zero() {
                    continue;
                }
                let quot = m[i][k].div_floor(&m[k][k]);
                if !quot.is_zero() {
                    for j in k..cols {
                        let delta = &quot * &m[k][j];
                        m[i][j] -= delta;
                    }
                }
                if !m[i][k].is_zero() {
                    // Remainder is strictly smaller; promote it and restart.
                    m.swap(k, i);
                    clean = false;
                    break;
                }
            }
            if !clean {
                continue;
            }
            for j in k + 1..cols {
                if m[k][j].is_zero() {
                    continue;
                }
                let quot = m[k][j].div_floor(&m[k][k]);
                if !quot.is_zero() {
                    for i in 0..rows {
                        let delta = &quot * &m[i][k];
                        m[i][j] -= delta;
                    }
                    for row in q.iter_mut() {
                        let delta = &quot * &row[k];
                        row[j] -= delta;
                    }
                }
                if !m[k][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(k, j);
                    }
                    for row in q.iter_mut() {
                        row.swap(k, j);
                    }
                    clean = false;
                    break;
                }
            }
            if clean {
                break;
            }
        }
    }

    // Normalize the diagonal to positive entries.
    for k in 0..cols {
        if m[k][k].is_negative() {
            for row in m.iter_mut() {
                row[k] = -std::mem::take(&mut row[k]);
            }
            for row in q.iter_mut() {
                row[k] = -std::mem::take(&mut row[k]);
            }
        }
    }

    let diagonal = (0..cols).map(|k| m[k][k].clone()).collect();
    Some(Diagonalization { diagonal, q })
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub(crate) fn determinant(a: &Mat) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Mat = a.to_vec();
    let mut sign = 1i64;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                let (quot, rem) = num.div_rem(&prev);
                debug_assert!(rem.is_zero());
                m[i][j] = quot;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    m[n - 1][n - 1].clone() * sign
}

/// Inverse of a square integer matrix over the rationals, or `None` if it is
/// singular.
pub(crate) fn rational_inverse(a: &Mat) -> Option<Vec<Vec<BigRational>>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .map(|row| row.iter().map(|x| BigRational::from(x.clone())).collect())
        .collect();
    let mut inv: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot_row = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, pivot_row);
        inv.swap(k, pivot_row);
        let pivot = m[k][k].clone();
        for j in 0..n {
            m[k][j] /= pivot.clone();
            inv[k][j] /= pivot.clone();
        }
        for i in 0..n {
            if i == k || m[i][k].is_zero() {
                continue;
            }
            let factor = m[i][k].clone();
            for j in 0..n {
                let mdelta = &factor * &m[k][j];
                m[i][j] -= mdelta;
                let idelta = &factor * &inv[k][j];
                inv[i][j] -= idelta;
            }
        }
    }
    Some(inv)
}
