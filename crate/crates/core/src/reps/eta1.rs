use std::collections::BTreeMap;

use super::MatrixRep;
use crate::freegroup::{FreeAut, FreeWord};
use crate::matrix::Matrix;
use crate::presentations::{GroupKind, Letter};
use crate::ring::{LaurentPoly, RatFunc};
use crate::{Error, Result};

/// The automorphism of `F_n` attached to `s_i`:
///
/// ```text
/// x_i     -> x_i x_{i+1} x_i^-1
/// x_{i+1} -> x_i x_{i+1}^-1 x_i x_{i+1} x_i^-1
/// x_k     -> x_k                 otherwise
/// ```
pub fn eta1_automorphism(n: usize, i: usize) -> Result<FreeAut> {
    if n < 2 {
        return Err(Error::BadStrandCount { n, min: 2 });
    }
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange {
            index: i,
            max: n - 1,
        });
    }
    let images = (1..=n)
        .map(|k| {
            let letters: Vec<(usize, i64)> = if k == i {
                vec![(i, 1), (i + 1, 1), (i, -1)]
            } else if k == i + 1 {
                vec![(i, 1), (i + 1, -1), (i, 1), (i + 1, 1), (i, -1)]
            } else {
                vec![(k, 1)]
            };
            FreeWord::from_letters(n, letters)
        })
        .collect::<Result<Vec<_>>>()?;
    FreeAut::new(images)
}

/// `[[1 - t, t], [2 - t, t - 1]]`
pub fn eta1_block() -> Matrix<RatFunc> {
    let t = LaurentPoly::t();
    let one = LaurentPoly::one();
    let two = LaurentPoly::constant(2);
    Matrix::from_rows(vec![
        vec![(&one - &t).into(), t.clone().into()],
        vec![(&two - &t).into(), (&t - &one).into()],
    ])
}

fn eta1_images(n: usize) -> BTreeMap<Letter, Matrix<RatFunc>> {
    let block = eta1_block();
    (1..n)
        .map(|i| (Letter::S(i), Matrix::embed_block(n, i - 1, &block)))
        .collect()
}

/// The `n x n` representation of `T_n` obtained from the Fox Jacobians of
/// [`eta1_automorphism`] under `x_k -> t`.
pub fn eta1_matrix(n: usize) -> Result<MatrixRep> {
    if n < 2 {
        return Err(Error::BadStrandCount { n, min: 2 });
    }
    MatrixRep::new(GroupKind::T, n, eta1_images(n), "eta1")
}

/// Columns `e_1, ..., e_{n-1}, (1, ..., 1)`.
pub fn eta1_basis_change(n: usize) -> Matrix<RatFunc> {
    let mut p = Matrix::identity(n);
    for r in 0..n {
        p[(r, n - 1)] = RatFunc::one();
    }
    p
}

/// Conjugates by [`eta1_basis_change`], checks that the all-ones line is
/// invariant and returns the strip of the leading `(n-1) x (n-1)` blocks.
fn conjugated_quotient(n: usize) -> Result<BTreeMap<Letter, Matrix<RatFunc>>> {
    let p = eta1_basis_change(n);
    let p_inv = p.inverse().expect("unitriangular");
    let mut out = BTreeMap::new();
    for (l, m) in eta1_images(n) {
        let w = p_inv.mul(&m).mul(&p);
        for r in 0..n {
            let expect = if r == n - 1 {
                RatFunc::one()
            } else {
                RatFunc::zero()
            };
            if w[(r, n - 1)] != expect {
                return Err(Error::BlockStructureViolation(format!(
                    "conjugated {l} has entry {} at ({}, {n})",
                    w[(r, n - 1)],
                    r + 1
                )));
            }
        }
        out.insert(l, w.leading_block(n - 1));
    }
    Ok(out)
}

/// The action of [`eta1_matrix`] on the quotient by the all-ones line.
///
/// `s_{n-1}` is the identity except for its last column `(t-2, ..., t-2, -1)`.
pub fn eta1_quotient(n: usize) -> Result<MatrixRep> {
    if n < 2 {
        return Err(Error::BadStrandCount { n, min: 2 });
    }
    MatrixRep::new(GroupKind::T, n, conjugated_quotient(n)?, "eta1q")
}

/// The degree `n - 1` family: `s_i` for `i <= n-2` keep the block of
/// [`eta1_block`], and `s_{n-1}` is the identity except for its last row
/// `(t-2, ..., t-2, -1)`.
///
/// This is [`eta1_quotient`] with the image of `s_{n-1}` transposed. For
/// `n >= 4` it does not satisfy the commutation relations of `T_n`.
pub fn eta1_composition_factor(n: usize) -> Result<MatrixRep> {
    if n < 2 {
        return Err(Error::BadStrandCount { n, min: 2 });
    }
    let mut images = conjugated_quotient(n)?;
    let last = Letter::S(n - 1);
    let transposed = images[&last].transpose();
    images.insert(last, transposed);

    let d = n - 1;
    let block = eta1_block();
    let t_minus_two: RatFunc = (&LaurentPoly::t() - &LaurentPoly::constant(2)).into();
    for (&l, m) in &images {
        let i = l.index();
        let expect = if i < n - 1 {
            Matrix::embed_block(d, i - 1, &block)
        } else {
            let mut e = Matrix::identity(d);
            for c in 0..d - 1 {
                e[(d - 1, c)] = t_minus_two.clone();
            }
            e[(d - 1, d - 1)] = RatFunc::from(-1);
            e
        };
        if let Some((r, c)) = m.first_difference(&expect) {
            return Err(Error::BlockStructureViolation(format!(
                "{l}: entry ({}, {}) is {}, expected {}",
                r + 1,
                c + 1,
                m[(r, c)],
                expect[(r, c)]
            )));
        }
    }
    MatrixRep::new(GroupKind::T, n, images, "eta1p")
}
