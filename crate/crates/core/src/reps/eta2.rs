use std::collections::BTreeMap;

use super::MatrixRep;
use crate::matrix::Matrix;
use crate::presentations::{GroupKind, Letter};
use crate::ring::{LaurentPoly, RatFunc};
use crate::{Error, Result};

/// `[[0, x], [1/x, 0]]`
pub fn swap_block(x: &LaurentPoly, name: &'static str) -> Result<Matrix<RatFunc>> {
    if x.is_zero() {
        return Err(Error::ZeroScalar(name));
    }
    let x = RatFunc::from(x.clone());
    let inv = x.inv()?;
    Ok(Matrix::from_rows(vec![
        vec![RatFunc::zero(), x],
        vec![inv, RatFunc::zero()],
    ]))
}

/// The monomial representation `s_i -> [[0, f], [1/f, 0]]` at block `i`.
pub fn eta2_matrix(n: usize, f: &LaurentPoly) -> Result<MatrixRep> {
    if n < 2 {
        return Err(Error::BadStrandCount { n, min: 2 });
    }
    let block = swap_block(f, "f")?;
    let images: BTreeMap<_, _> = (1..n)
        .map(|i| (Letter::S(i), Matrix::embed_block(n, i - 1, &block)))
        .collect();
    MatrixRep::new(GroupKind::T, n, images, "eta2")
}
