use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use super::linalg::{canonical_basis, nullspace, primitive_integer_vector, Echelon};
use crate::matrix::Matrix;
use crate::presentations::Letter;
use crate::reps::{eta1_composition_factor, MatrixRep};
use crate::ring::{format_rational, Rational};
use crate::{Error, Result};

fn check_point(t0: &Rational) -> Result<()> {
    if t0.is_zero() {
        Err(Error::ZeroSpecialization)
    } else {
        Ok(())
    }
}

fn int_json(v: &BigInt) -> serde_json::Value {
    match v.to_i64() {
        Some(x) => x.into(),
        None => v.to_string().into(),
    }
}

/// Basis of the vectors fixed by every generator image at `t = t0`, as
/// primitive integer vectors in echelon order.
pub fn common_fixed_vectors(rep: &MatrixRep, t0: &Rational) -> Result<Vec<Vec<BigInt>>> {
    check_point(t0)?;
    let d = rep.degree();
    let mut stacked = Vec::new();
    for (_, m) in rep.specialize(t0)? {
        let m = m.sub(&Matrix::identity(d));
        stacked.extend(m.to_rows());
    }
    let basis = if stacked.is_empty() {
        (0..d)
            .map(|i| Matrix::<Rational>::identity(d).row(i).to_vec())
            .collect()
    } else {
        nullspace(&Matrix::from_rows(stacked))
    };
    Ok(canonical_basis(&basis, d)
        .iter()
        .map(|v| primitive_integer_vector(v))
        .collect())
}

/// Which action the invariant line is for.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    /// `M v = ±v` for every image `M`.
    Column,
    /// `v M = ±v` for every image `M`.
    Row,
}

/// A common eigenvector of all generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantLine {
    pub vector: Vec<BigInt>,
    pub signs: Vec<(Letter, i8)>,
    pub side: Side,
}

impl Serialize for InvariantLine {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let vector: Vec<serde_json::Value> = self.vector.iter().map(int_json).collect();
        let signs: Vec<serde_json::Value> = self
            .signs
            .iter()
            .map(|(l, e)| serde_json::json!({ "gen": l.to_string(), "eigenvalue": e }))
            .collect();
        let mut st = s.serialize_struct("InvariantLine", 3)?;
        st.serialize_field("vector", &vector)?;
        st.serialize_field("signs", &signs)?;
        st.serialize_field("side", &self.side)?;
        st.end()
    }
}

/// `B c` for the columns of `basis` (stored as rows) and coefficients `c`.
fn combine(basis: &[Vec<Rational>], c: &[Rational]) -> Vec<Rational> {
    let d = basis[0].len();
    (0..d)
        .map(|k| {
            basis
                .iter()
                .zip(c)
                .fold(Rational::zero(), |acc, (b, x)| acc + &b[k] * x)
        })
        .collect()
}

/// Intersects span(`basis`) with `ker(m - sign I)`.
fn restrict(basis: &[Vec<Rational>], m: &Matrix<Rational>, sign: i8) -> Vec<Vec<Rational>> {
    let d = m.rows();
    let shifted = m.sub(&Matrix::identity(d).scale(&Rational::from_integer(sign.into())));
    // columns are the images of the basis vectors
    let mut image = Matrix::zeros(d, basis.len());
    for (j, b) in basis.iter().enumerate() {
        for r in 0..d {
            let v = (0..d).fold(Rational::zero(), |acc, k| acc + &shifted[(r, k)] * &b[k]);
            image[(r, j)] = v;
        }
    }
    let coeffs = nullspace(&image);
    let vectors: Vec<Vec<Rational>> = coeffs.iter().map(|c| combine(basis, c)).collect();
    canonical_basis(&vectors, d)
}

fn search_side(
    mats: &[(Letter, Matrix<Rational>)],
    depth: usize,
    basis: Vec<Vec<Rational>>,
    signs: &mut Vec<(Letter, i8)>,
) -> Option<Vec<Rational>> {
    if basis.is_empty() {
        return None;
    }
    let Some((l, m)) = mats.get(depth) else {
        return Some(basis[0].clone());
    };
    for sign in [1i8, -1] {
        signs.push((*l, sign));
        let sub = restrict(&basis, m, sign);
        if let Some(v) = search_side(mats, depth + 1, sub, signs) {
            return Some(v);
        }
        signs.pop();
    }
    None
}

fn specialized_involutions(
    rep: &MatrixRep,
    t0: &Rational,
) -> Result<Vec<(Letter, Matrix<Rational>)>> {
    check_point(t0)?;
    let mats = rep.specialize(t0)?;
    for (l, m) in &mats {
        if !m.mul(m).is_identity() {
            return Err(Error::NotInvolution(format!(
                "image of {l} at t = {}",
                format_rational(t0)
            )));
        }
    }
    Ok(mats)
}

/// Like [`invariant_line_search`] but restricted to one side.
pub fn invariant_line_search_side(
    rep: &MatrixRep,
    t0: &Rational,
    side: Side,
) -> Result<Option<InvariantLine>> {
    let mut mats = specialized_involutions(rep, t0)?;
    if side == Side::Row {
        for (_, m) in mats.iter_mut() {
            *m = m.transpose();
        }
    }
    let d = rep.degree();
    let full: Vec<Vec<Rational>> = (0..d)
        .map(|i| Matrix::<Rational>::identity(d).row(i).to_vec())
        .collect();
    let mut signs = Vec::new();
    Ok(
        search_side(&mats, 0, full, &mut signs).map(|v| InvariantLine {
            vector: primitive_integer_vector(&v),
            signs,
            side,
        }),
    )
}

/// First common `±1` eigenvector of the images at `t = t0`, trying sign
/// patterns with `+1` before `-1` in generator order, columns before rows.
pub fn invariant_line_search(rep: &MatrixRep, t0: &Rational) -> Result<Option<InvariantLine>> {
    for side in [Side::Column, Side::Row] {
        if let Some(line) = invariant_line_search_side(rep, t0, side)? {
            return Ok(Some(line));
        }
    }
    Ok(None)
}

/// Dimension of the algebra spanned by all products of `mats`, including the identity.
pub fn algebra_dimension(mats: &[Matrix<Rational>]) -> Result<usize> {
    let first = mats
        .first()
        .ok_or_else(|| Error::InvalidParameter("no matrices given".into()))?;
    let d = first.rows();
    for m in mats {
        if !m.is_square() || m.rows() != d {
            return Err(Error::DegreeMismatch(d, m.rows()));
        }
    }
    let flat = |m: &Matrix<Rational>| m.entries().cloned().collect::<Vec<_>>();
    let mut span = Echelon::new();
    let mut queue = VecDeque::new();
    let id = Matrix::<Rational>::identity(d);
    span.insert(flat(&id));
    queue.push_back(id);
    while let Some(a) = queue.pop_front() {
        if span.dim() == d * d {
            break;
        }
        for g in mats {
            let b = a.mul(g);
            if span.insert(flat(&b)) {
                queue.push_back(b);
            }
        }
    }
    Ok(span.dim())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "absolutely-irreducible")]
    AbsolutelyIrreducible,
    #[serde(rename = "reducible")]
    Reducible,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrreducibilityVerdict {
    pub n: usize,
    pub t0: Rational,
    pub dim: usize,
    pub verdict: Verdict,
    pub witness: Option<InvariantLine>,
}

impl Serialize for IrreducibilityVerdict {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("IrreducibilityVerdict", 5)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("t", &format_rational(&self.t0))?;
        st.serialize_field("dim", &self.dim)?;
        st.serialize_field("verdict", &self.verdict)?;
        st.serialize_field("witness", &self.witness)?;
        st.end()
    }
}

/// Absolute irreducibility of `rep` at `t = t0` from the generated algebra;
/// reducible verdicts carry an invariant line when one exists.
pub fn irreducibility_verdict(rep: &MatrixRep, t0: &Rational) -> Result<IrreducibilityVerdict> {
    check_point(t0)?;
    let mats: Vec<Matrix<Rational>> = rep.specialize(t0)?.into_iter().map(|(_, m)| m).collect();
    let d = rep.degree();
    let dim = algebra_dimension(&mats)?;
    let (verdict, witness) = if dim == d * d {
        (Verdict::AbsolutelyIrreducible, None)
    } else {
        (Verdict::Reducible, invariant_line_search(rep, t0)?)
    };
    Ok(IrreducibilityVerdict {
        n: rep.n(),
        t0: t0.clone(),
        dim,
        verdict,
        witness,
    })
}

/// Whether the degree `n - 1` factor should be irreducible at `t0`:
/// `t0 != 2` and `t0 != (2n - 2)/(n - 2)`.
pub fn criterion_predicate(n: usize, t0: &Rational) -> bool {
    let n = n as i64;
    let special = Rational::new((2 * n - 2).into(), (n - 2).into());
    *t0 != Rational::from_integer(2.into()) && *t0 != special
}

/// Decides irreducibility of [`eta1_composition_factor`] at `t0` and
/// fails with `CriterionMismatch` if it disagrees with [`criterion_predicate`].
pub fn check_irreducibility_criterion(n: usize, t0: &Rational) -> Result<IrreducibilityVerdict> {
    if n < 3 {
        return Err(Error::BadStrandCount { n, min: 3 });
    }
    let v = irreducibility_verdict(&eta1_composition_factor(n)?, t0)?;
    let expected = criterion_predicate(n, t0);
    if (v.verdict == Verdict::AbsolutelyIrreducible) != expected {
        return Err(Error::CriterionMismatch(format!(
            "n = {n}, t = {}: algebra dimension {} but predicate says {}",
            format_rational(t0),
            v.dim,
            if expected { "irreducible" } else { "reducible" }
        )));
    }
    Ok(v)
}
