//! Exact linear algebra over Z and Q.
//!
//! Rational matrices are row-scaled to integer matrices and reduced with
//! fraction-free (Bareiss) elimination; every intermediate entry is a minor
//! of the input, so coefficient growth stays polynomial.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::rational::{self, Rational};
use crate::numberfield::{FieldElement, NumberField};

/// Row echelon form produced by fraction-free elimination.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
    pub cols: usize,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn integer_rows(rows: &[Vec<Rational>]) -> Vec<Vec<BigInt>> {
    rows.iter()
        .map(|r| {
            let l = rational::denominator_lcm(r);
            r.iter().map(|q| (q * &l).to_integer()).collect()
        })
        .collect()
}

/// Bareiss elimination of an integer matrix with `cols` columns.
pub fn bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> Echelon {
    let nrows = a.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut k = 0;
    for c in 0..cols {
        if k == nrows {
            break;
        }
        let Some(pr) = (k..nrows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(k, pr);
        let (top, rest) = a.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pv = pivot_row[c].clone();
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..cols {
                let v = &pv * &row[j] - &f * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
            // columns before c are already zero in rows below k
        }
        prev = pv;
        pivots.push(c);
        k += 1;
    }
    a.truncate(k);
    Echelon { rows: a, pivots, cols }
}

pub fn rank(rows: &[Vec<Rational>], cols: usize) -> usize {
    bareiss(integer_rows(rows), cols).rank()
}

/// Basis of the right nullspace `{v : A v = 0}` as primitive integer vectors,
/// one per free column, each with a positive entry at its free column.
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<BigInt>> {
    nullspace_from_echelon(&bareiss(integer_rows(rows), cols))
}

pub fn integer_nullspace(rows: Vec<Vec<BigInt>>, cols: usize) -> Vec<Vec<BigInt>> {
    nullspace_from_echelon(&bareiss(rows, cols))
}

fn nullspace_from_echelon(e: &Echelon) -> Vec<Vec<BigInt>> {
    let cols = e.cols;
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); cols];
            v[fc] = Rational::one();
            for (i, &pc) in e.pivots.iter().enumerate().rev() {
                let row = &e.rows[i];
                let mut s = Rational::zero();
                for j in pc + 1..cols {
                    if !row[j].is_zero() && !v[j].is_zero() {
                        s += Rational::from_integer(row[j].clone()) * &v[j];
                    }
                }
                v[pc] = -s / Rational::from_integer(row[pc].clone());
            }
            let p = rational::primitive_integer_vector(&v);
            // keep the free coordinate positive
            if p[fc] < BigInt::zero() {
                p.into_iter().map(|x| -x).collect()
            } else {
                p
            }
        })
        .collect()
}

/// Solves `A x = b` over Q; `None` when inconsistent. Free variables are 0.
pub fn solve(a: &[Vec<Rational>], b: &[Rational], cols: usize) -> Option<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut r = r.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    let e = bareiss(integer_rows(&rows), cols + 1);
    if e.pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (i, &pc) in e.pivots.iter().enumerate().rev() {
        let row = &e.rows[i];
        let mut s = Rational::from_integer(row[cols].clone());
        for j in pc + 1..cols {
            if !row[j].is_zero() && !x[j].is_zero() {
                s -= Rational::from_integer(row[j].clone()) * &x[j];
            }
        }
        x[pc] = s / Rational::from_integer(row[pc].clone());
    }
    Some(x)
}

/// Determinant of a square integer matrix.
pub fn determinant(a: &[Vec<BigInt>]) -> BigInt {
    let n = a.len();
    let mut m = a.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        let Some(pr) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigInt::zero();
        };
        if pr != k {
            m.swap(k, pr);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[k][k] * &m[i][j] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * prev
}

/// Reduced row echelon form over a number field; returns pivot columns.
pub fn field_rref(rows: &mut [Vec<FieldElement>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().expect("nonzero pivot");
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let sub: Vec<FieldElement> = rows[r].iter().map(|x| x * &f).collect();
                for (a, b) in rows[i].iter_mut().zip(&sub) {
                    *a = &*a - b;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    pivots
}

pub fn field_rank(rows: &[Vec<FieldElement>], cols: usize) -> usize {
    field_rref(&mut rows.to_vec(), cols).len()
}

/// Basis of `{x : A x = 0}` over the field of the entries, one vector per
/// free column with a 1 there.
pub fn field_nullspace(rows: &[Vec<FieldElement>], cols: usize, field: &NumberField) -> Vec<Vec<FieldElement>> {
    let mut m = rows.to_vec();
    let pivots = field_rref(&mut m, cols);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![field.zero(); cols];
            v[free] = field.one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -&m[i][free];
            }
            v
        })
        .collect()
}
