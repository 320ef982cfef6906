//! Matrix representations of twin groups and their extensions.
//!
//! Every generator image is a square matrix over `Q(t)`. Words are evaluated
//! as ordered products of images; all generators are involutions, so no
//! inverses are ever needed.

mod descriptor;
mod eta1;
mod eta2;
mod extensions;

use std::collections::BTreeMap;

use crate::matrix::Matrix;
use crate::presentations::{GroupKind, Letter, TwinWord};
use crate::ring::{RatFunc, Rational};
use crate::{Error, Result};

pub use descriptor::{RepDescriptor, RepName};
pub use eta1::{
    eta1_automorphism, eta1_basis_change, eta1_block, eta1_composition_factor, eta1_matrix,
    eta1_quotient,
};
pub use eta2::{eta2_matrix, swap_block};
pub use extensions::{two_local_family_t2, vt_extension_eta1, vt_wt_extension_eta2, T2Family};

/// An assignment of a `d x d` matrix to each generator of `T_n`, `VT_n` or `WT_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRep {
    kind: GroupKind,
    n: usize,
    degree: usize,
    images: BTreeMap<Letter, Matrix<RatFunc>>,
    label: String,
}

impl MatrixRep {
    /// Checks that every generator has a square, invertible image of a common degree.
    pub fn new(
        kind: GroupKind,
        n: usize,
        images: BTreeMap<Letter, Matrix<RatFunc>>,
        label: impl Into<String>,
    ) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadStrandCount { n, min: 2 });
        }
        let degree = images.values().next().map_or(0, Matrix::rows);
        let letters = (1..n)
            .map(Letter::S)
            .chain((1..n).map(Letter::Rho).filter(|_| kind.has_rho()));
        for l in letters {
            let m = images
                .get(&l)
                .ok_or_else(|| Error::KindMismatch(format!("no image for {l}")))?;
            if !m.is_square() || m.rows() != degree {
                return Err(Error::DegreeMismatch(degree, m.rows()));
            }
            if m.det().is_zero() {
                return Err(Error::InvalidParameter(format!("image of {l} is singular")));
            }
        }
        if images.len() != if kind.has_rho() { 2 * (n - 1) } else { n - 1 } {
            return Err(Error::KindMismatch(
                "image for a generator outside the group".into(),
            ));
        }
        Ok(Self {
            kind,
            n,
            degree,
            images,
            label: label.into(),
        })
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn image(&self, l: Letter) -> Option<&Matrix<RatFunc>> {
        self.images.get(&l)
    }

    /// Images in generator order: `s_1..s_{n-1}` then `ρ_1..ρ_{n-1}`.
    pub fn images(&self) -> impl Iterator<Item = (Letter, &Matrix<RatFunc>)> {
        self.images.iter().map(|(l, m)| (*l, m))
    }

    /// Whether the image of generator `i` differs from the identity only in
    /// the `2 x 2` block at rows and columns `i, i+1`.
    pub fn is_two_local(&self) -> bool {
        self.images.iter().all(|(l, m)| {
            let lo = l.index() - 1;
            (0..self.degree).all(|r| {
                (0..self.degree).all(|c| {
                    let in_block = (lo..=lo + 1).contains(&r) && (lo..=lo + 1).contains(&c);
                    in_block
                        || (if r == c {
                            m[(r, c)].is_one()
                        } else {
                            m[(r, c)].is_zero()
                        })
                })
            })
        })
    }

    /// Replaces one image without any validation. Used to inject faults.
    pub fn with_image(&self, l: Letter, m: Matrix<RatFunc>) -> Self {
        let mut out = self.clone();
        out.images.insert(l, m);
        out.label = format!("{}*", self.label);
        out
    }

    /// Generator images with `t = t0` substituted.
    pub fn specialize(&self, t0: &Rational) -> Result<Vec<(Letter, Matrix<Rational>)>> {
        self.images
            .iter()
            .map(|(l, m)| Ok((*l, m.specialize(t0)?)))
            .collect()
    }
}

/// Ordered product of the generator images along `w`.
pub fn evaluate_word(rep: &MatrixRep, w: &TwinWord) -> Result<Matrix<RatFunc>> {
    if w.n() != rep.n {
        return Err(Error::KindMismatch(format!(
            "word on {} strands, representation of {}_{}",
            w.n(),
            rep.kind,
            rep.n
        )));
    }
    let mut acc: Option<Matrix<RatFunc>> = None;
    for &l in w.letters() {
        let m = rep.image(l).ok_or_else(|| {
            Error::KindMismatch(format!("{l} is not a generator of {}_{}", rep.kind, rep.n))
        })?;
        acc = Some(match acc {
            None => m.clone(),
            Some(a) => a.mul(m),
        });
    }
    Ok(acc.unwrap_or_else(|| Matrix::identity(rep.degree)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_is_an_ordered_product() {
        let rep = eta1_matrix(3).unwrap();
        let w = TwinWord::from_s(3, &[1, 2]).unwrap();
        let s1 = rep.image(Letter::S(1)).unwrap();
        let s2 = rep.image(Letter::S(2)).unwrap();
        assert_eq!(evaluate_word(&rep, &w).unwrap(), s1.mul(s2));
        assert!(evaluate_word(&rep, &TwinWord::empty(GroupKind::T, 3))
            .unwrap()
            .is_identity());
        assert!(evaluate_word(&rep, &TwinWord::from_s(3, &[1, 1]).unwrap())
            .unwrap()
            .is_identity());
    }

    #[test]
    fn evaluation_rejects_foreign_words() {
        let rep = eta1_matrix(3).unwrap();
        let w4 = TwinWord::from_s(4, &[1]).unwrap();
        assert!(matches!(
            evaluate_word(&rep, &w4),
            Err(Error::KindMismatch(_))
        ));
        let rho = TwinWord::parse(GroupKind::VT, 3, "r1").unwrap();
        assert!(matches!(
            evaluate_word(&rep, &rho),
            Err(Error::KindMismatch(_))
        ));
    }

    #[test]
    fn construction_checks() {
        let good = eta1_matrix(3).unwrap();
        let mut images: BTreeMap<Letter, Matrix<RatFunc>> =
            good.images().map(|(l, m)| (l, m.clone())).collect();
        assert!(MatrixRep::new(GroupKind::T, 3, images.clone(), "x").is_ok());
        images.insert(Letter::S(2), Matrix::zeros(3, 3));
        assert!(matches!(
            MatrixRep::new(GroupKind::T, 3, images.clone(), "x"),
            Err(Error::InvalidParameter(_))
        ));
        images.insert(Letter::S(2), Matrix::identity(2));
        assert_eq!(
            MatrixRep::new(GroupKind::T, 3, images.clone(), "x"),
            Err(Error::DegreeMismatch(3, 2))
        );
        images.remove(&Letter::S(2));
        assert!(matches!(
            MatrixRep::new(GroupKind::T, 3, images, "x"),
            Err(Error::KindMismatch(_))
        ));
    }

    #[test]
    fn two_local_shape() {
        assert!(eta1_matrix(5).unwrap().is_two_local());
        // the last generator acts on the whole last row
        assert!(!eta1_composition_factor(4).unwrap().is_two_local());
        assert!(vt_extension_eta1(4, &crate::ring::LaurentPoly::t())
            .unwrap()
            .is_two_local());
    }
}
