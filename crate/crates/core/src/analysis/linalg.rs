//! Exact linear algebra over `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Matrix;
use crate::ring::Rational;

/// Reduced row echelon form and its pivot columns.
pub fn rref(m: &Matrix<Rational>) -> (Matrix<Rational>, Vec<usize>) {
    let mut a = m.clone();
    let (rows, cols) = (a.rows(), a.cols());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for k in 0..cols {
                let tmp = a[(p, k)].clone();
                a[(p, k)] = a[(r, k)].clone();
                a[(r, k)] = tmp;
            }
        }
        let inv = a[(r, c)].recip();
        for k in c..cols {
            a[(r, k)] = &a[(r, k)] * &inv;
        }
        for i in 0..rows {
            if i == r || a[(i, c)].is_zero() {
                continue;
            }
            let f = a[(i, c)].clone();
            for k in c..cols {
                let v = &a[(i, k)] - &(&f * &a[(r, k)]);
                a[(i, k)] = v;
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Matrix<Rational>) -> usize {
    rref(m).1.len()
}

/// Basis of `{v : m v = 0}`, one vector per free column in increasing order,
/// with a `1` in that free column.
pub fn nullspace(m: &Matrix<Rational>) -> Vec<Vec<Rational>> {
    let (r, pivots) = rref(m);
    let cols = m.cols();
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); cols];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, free)].clone();
            }
            v
        })
        .collect()
}

/// Canonical basis of the span of `vectors`: the nonzero rows of their RREF.
pub fn canonical_basis(vectors: &[Vec<Rational>], dim: usize) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let (r, pivots) = rref(&Matrix::from_rows(vectors.to_vec()));
    (0..pivots.len())
        .map(|i| r.row(i).to_vec())
        .take(dim)
        .collect()
}

/// Integer multiple with coprime entries and a positive first nonzero entry.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.into_iter().map(|x| x / &g * &sign).collect()
}

/// A growing linearly independent set kept in echelon form, for span tests.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Rational>)>,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// The residue of `v` after elimination against the stored rows.
    fn reduce(&self, mut v: Vec<Rational>) -> Vec<Rational> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, y) in v.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Adds `v` if it is independent of the stored rows; returns whether it was.
    pub fn insert(&mut self, v: Vec<Rational>) -> bool {
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        for x in v.iter_mut() {
            *x = &*x * &inv;
        }
        self.rows.push((p, v));
        true
    }
}
