//! Dense square-or-rectangular matrices over a [`Scalar`] ring.

use std::fmt;

use serde::ser::{Serialize, SerializeStruct, Serializer};

use crate::ring::{Field, LaurentPoly, RatFunc, Rational, Scalar};
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut m = Self::zeros(d, d);
        for i in 0..d {
            m[(i, i)] = T::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// The `d x d` identity with `block` placed on the diagonal at rows/columns
    /// `at..at + block.rows()` (zero-based).
    pub fn embed_block(d: usize, at: usize, block: &Matrix<T>) -> Self {
        assert!(
            block.is_square() && at + block.rows <= d,
            "block does not fit"
        );
        let mut m = Self::identity(d);
        for r in 0..block.rows {
            for c in 0..block.cols {
                m[(at + r, at + c)] = block[(r, c)].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix shapes do not compose");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a.mul(b);
                    out[(i, j)] = out[(i, j)].add(&prod);
                }
            }
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|x| x.mul(c))
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out[(c, r)] = self[(r, c)].clone();
            }
        }
        out
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U: Scalar>(&self, f: impl Fn(&T) -> Result<U>) -> Result<Matrix<U>> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_>>()?,
        })
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| {
                (0..self.cols).all(|c| {
                    let x = &self[(r, c)];
                    if r == c {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Top-left `k x k` submatrix.
    pub fn leading_block(&self, k: usize) -> Self {
        assert!(k <= self.rows && k <= self.cols);
        let mut out = Self::zeros(k, k);
        for r in 0..k {
            for c in 0..k {
                out[(r, c)] = self[(r, c)].clone();
            }
        }
        out
    }

    /// First `(row, col)` where two equally-shaped matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Some((0, 0));
        }
        (0..self.rows)
            .flat_map(|r| (0..self.cols).map(move |c| (r, c)))
            .find(|&(r, c)| self[(r, c)] != other[(r, c)])
    }
}

impl<T: Field> Matrix<T> {
    /// Determinant by Gaussian elimination over the field.
    pub fn det(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return T::zero();
            };
            if p != col {
                for c in 0..n {
                    a.data.swap(p * n + c, col * n + c);
                }
                det = det.neg();
            }
            let pivot = a[(col, col)].clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let factor = a[(r, col)].mul(&inv);
                if factor.is_zero() {
                    continue;
                }
                for c in col..n {
                    let v = a[(r, c)].sub(&factor.mul(&a[(col, c)]));
                    a[(r, c)] = v;
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan elimination; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let p = (col..n).find(|&r| !a[(r, col)].is_zero())?;
            if p != col {
                for c in 0..n {
                    a.data.swap(p * n + c, col * n + c);
                    inv.data.swap(p * n + c, col * n + c);
                }
            }
            let pinv = a[(col, col)].inv()?;
            for c in 0..n {
                a[(col, c)] = a[(col, c)].mul(&pinv);
                inv[(col, c)] = inv[(col, c)].mul(&pinv);
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let x = a[(r, c)].sub(&f.mul(&a[(col, c)]));
                    a[(r, c)] = x;
                    let y = inv[(r, c)].sub(&f.mul(&inv[(col, c)]));
                    inv[(r, c)] = y;
                }
            }
        }
        Some(inv)
    }
}

impl Matrix<RatFunc> {
    /// Substitutes `t = t0` in every entry.
    pub fn specialize(&self, t0: &Rational) -> Result<Matrix<Rational>> {
        self.try_map(|x| x.eval(t0))
    }

    /// Parses row-major canonical strings.
    pub fn parse_rows(rows: &[Vec<String>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidParameter("ragged matrix rows".into()));
        }
        let parsed = rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| s.parse())
                    .collect::<Result<Vec<RatFunc>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_rows(parsed))
    }
}

impl From<&Matrix<LaurentPoly>> for Matrix<RatFunc> {
    fn from(m: &Matrix<LaurentPoly>) -> Self {
        m.map(|x| RatFunc::from(x.clone()))
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:>width$}", cells[r * self.cols + c])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix {}x{}\n{}", self.rows, self.cols, self)
    }
}

impl<T: fmt::Display> Matrix<T> {
    /// Row-major canonical strings of the entries.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|r| {
                self.data[r * self.cols..(r + 1) * self.cols]
                    .iter()
                    .map(ToString::to_string)
                    .collect()
            })
            .collect()
    }
}

/// `{"degree": d, "entries": [[canonical-string, ...], ...]}`
impl<T: fmt::Display> Serialize for Matrix<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries = self.to_strings();
        let mut st = s.serialize_struct("Matrix", 2)?;
        st.serialize_field("degree", &self.rows)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn m(rows: &[&[&str]]) -> Matrix<RatFunc> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| rf(s)).collect())
                .collect(),
        )
    }

    #[test]
    fn determinant_and_inverse() {
        let a = m(&[&["1 - t", "t"], &["2 - t", "-1 + t"]]);
        assert_eq!(a.det(), rf("-1"));
        assert_eq!(a.inverse().unwrap(), a);
        let s = m(&[&["1", "1"], &["1", "1"]]);
        assert!(s.inverse().is_none());
        assert!(s.det().is_zero());
    }

    #[test]
    fn embedding_and_identity() {
        let block = m(&[&["0", "t"], &["t^-1", "0"]]);
        let e = Matrix::embed_block(4, 1, &block);
        assert_eq!(e[(1, 2)], rf("t"));
        assert_eq!(e[(2, 1)], rf("t^-1"));
        assert_eq!(e[(0, 0)], RatFunc::one());
        assert!(e.mul(&e).is_identity());
        assert!(!e.is_identity());
    }

    #[test]
    fn json_schema() {
        let a = m(&[&["1 - t", "t"], &["2 - t", "-1 + t"]]);
        let v = serde_json::to_value(&a).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"degree": 2, "entries": [["1 - t", "t"], ["2 - t", "-1 + t"]]})
        );
    }
}
