use std::collections::BTreeMap;

use super::{eta1_block, eta1_matrix, eta2_matrix, swap_block, MatrixRep};
use crate::matrix::Matrix;
use crate::presentations::{GroupKind, Letter};
use crate::ring::{LaurentPoly, RatFunc};
use crate::{Error, Result};

fn with_rho(
    base: &MatrixRep,
    kind: GroupKind,
    rho: &Matrix<RatFunc>,
    label: String,
) -> Result<MatrixRep> {
    let n = base.n();
    let mut images: BTreeMap<Letter, Matrix<RatFunc>> =
        base.images().map(|(l, m)| (l, m.clone())).collect();
    for i in 1..n {
        images.insert(Letter::Rho(i), Matrix::embed_block(n, i - 1, rho));
    }
    MatrixRep::new(kind, n, images, label)
}

/// Extends [`eta1_matrix`] to `VT_n` with `ρ_i -> [[0, b], [1/b, 0]]` at block `i`.
pub fn vt_extension_eta1(n: usize, b: &LaurentPoly) -> Result<MatrixRep> {
    if n < 3 {
        return Err(Error::BadStrandCount { n, min: 3 });
    }
    let rho = swap_block(b, "b")?;
    with_rho(&eta1_matrix(n)?, GroupKind::VT, &rho, "vt1".into())
}

/// Extends `eta2_matrix(n, f)` to `VT_n` or `WT_n` with `ρ_i -> [[0, g], [1/g, 0]]`.
pub fn vt_wt_extension_eta2(
    n: usize,
    f: &LaurentPoly,
    g: &LaurentPoly,
    kind: GroupKind,
) -> Result<MatrixRep> {
    if n < 3 {
        return Err(Error::BadStrandCount { n, min: 3 });
    }
    if kind == GroupKind::T {
        return Err(Error::KindMismatch(
            "extension target must be VT or WT".into(),
        ));
    }
    let rho = swap_block(g, "g")?;
    with_rho(&eta2_matrix(n, f)?, kind, &rho, "vtwt2".into())
}

/// The five shapes of `ρ_1` extending the two-strand block of `η₁` to `VT_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum T2Family {
    /// `[[a, b], [(1 - a^2)/b, -a]]`, `b != 0`
    General { a: RatFunc, b: RatFunc },
    /// `[[1, 0], [c, -1]]`
    LowerPlus { c: RatFunc },
    /// `[[-1, 0], [c, 1]]`
    LowerMinus { c: RatFunc },
    /// `-I`
    MinusIdentity,
    /// `I`
    Identity,
}

impl T2Family {
    /// Builds family `tag` from whichever of `a, b, c` it uses; missing
    /// parameters default to `0` for `a, c` and `1` for `b`.
    pub fn from_tag(
        tag: u8,
        a: Option<RatFunc>,
        b: Option<RatFunc>,
        c: Option<RatFunc>,
    ) -> Result<Self> {
        Ok(match tag {
            1 => T2Family::General {
                a: a.unwrap_or_else(RatFunc::zero),
                b: b.unwrap_or_else(RatFunc::one),
            },
            2 => T2Family::LowerPlus {
                c: c.unwrap_or_else(RatFunc::zero),
            },
            3 => T2Family::LowerMinus {
                c: c.unwrap_or_else(RatFunc::zero),
            },
            4 => T2Family::MinusIdentity,
            5 => T2Family::Identity,
            other => return Err(Error::BadFamilyTag(other)),
        })
    }

    pub fn tag(&self) -> u8 {
        match self {
            T2Family::General { .. } => 1,
            T2Family::LowerPlus { .. } => 2,
            T2Family::LowerMinus { .. } => 3,
            T2Family::MinusIdentity => 4,
            T2Family::Identity => 5,
        }
    }

    /// The `2 x 2` image of `ρ_1`.
    pub fn block(&self) -> Result<Matrix<RatFunc>> {
        let one = RatFunc::one();
        let zero = RatFunc::zero();
        Ok(match self {
            T2Family::General { a, b } => {
                if b.is_zero() {
                    return Err(Error::ZeroScalar("b"));
                }
                let c = (&one - &(a * a)).div(b)?;
                Matrix::from_rows(vec![vec![a.clone(), b.clone()], vec![c, -a]])
            }
            T2Family::LowerPlus { c } => {
                Matrix::from_rows(vec![vec![one, zero], vec![c.clone(), RatFunc::from(-1)]])
            }
            T2Family::LowerMinus { c } => {
                Matrix::from_rows(vec![vec![RatFunc::from(-1), zero], vec![c.clone(), one]])
            }
            T2Family::MinusIdentity => Matrix::identity(2).scale(&RatFunc::from(-1)),
            T2Family::Identity => Matrix::identity(2),
        })
    }
}

/// `VT_2` representation with `s_1` the block of [`eta1_block`] and `ρ_1` from `family`.
pub fn two_local_family_t2(family: &T2Family) -> Result<MatrixRep> {
    let images = BTreeMap::from([
        (Letter::S(1), eta1_block()),
        (Letter::Rho(1), family.block()?),
    ]);
    MatrixRep::new(GroupKind::VT, 2, images, format!("t2fam{}", family.tag()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn eta1_extension_blocks() {
        let rep = vt_extension_eta1(3, &LaurentPoly::one()).unwrap();
        let perm = Matrix::from_rows(vec![
            vec![rf("0"), rf("1"), rf("0")],
            vec![rf("1"), rf("0"), rf("0")],
            vec![rf("0"), rf("0"), rf("1")],
        ]);
        assert_eq!(rep.image(Letter::Rho(1)).unwrap(), &perm);

        let rep = vt_extension_eta1(3, &LaurentPoly::t()).unwrap();
        let r1 = rep.image(Letter::Rho(1)).unwrap();
        assert_eq!(
            r1.leading_block(2).to_strings(),
            [["0", "t"], ["t^-1", "0"]]
        );
        for (_, m) in rep.images() {
            assert!(m.mul(m).is_identity());
        }
        assert_eq!(
            vt_extension_eta1(3, &LaurentPoly::zero()),
            Err(Error::ZeroScalar("b"))
        );
        assert!(matches!(
            vt_extension_eta1(2, &LaurentPoly::one()),
            Err(Error::BadStrandCount { .. })
        ));
    }

    #[test]
    fn eta2_extension_checks() {
        let t = LaurentPoly::t();
        let rep = vt_wt_extension_eta2(3, &t, &LaurentPoly::one(), GroupKind::WT).unwrap();
        assert_eq!(rep.kind(), GroupKind::WT);
        assert!(rep.is_two_local());
        assert_eq!(
            vt_wt_extension_eta2(3, &t, &LaurentPoly::zero(), GroupKind::VT),
            Err(Error::ZeroScalar("g"))
        );
        assert!(vt_wt_extension_eta2(3, &t, &t, GroupKind::T).is_err());
    }

    #[test]
    fn t2_family_blocks() {
        let fam = T2Family::from_tag(1, Some(rf("t")), Some(rf("1")), None).unwrap();
        let m = fam.block().unwrap();
        assert_eq!(m.to_strings(), [["t", "1"], ["1 - t^2", "-t"]]);
        assert!(m.mul(&m).is_identity());

        let m4 = T2Family::MinusIdentity.block().unwrap();
        assert_eq!(m4, Matrix::identity(2).scale(&rf("-1")));

        let m2 = T2Family::from_tag(2, None, None, Some(rf("0")))
            .unwrap()
            .block()
            .unwrap();
        assert_eq!(m2.to_strings(), [["1", "0"], ["0", "-1"]]);

        assert_eq!(
            T2Family::from_tag(6, None, None, None),
            Err(Error::BadFamilyTag(6))
        );
        let zero_b = T2Family::General {
            a: rf("t"),
            b: rf("0"),
        };
        assert_eq!(zero_b.block(), Err(Error::ZeroScalar("b")));
        let rep = two_local_family_t2(&fam).unwrap();
        assert_eq!(rep.kind(), GroupKind::VT);
        assert_eq!(rep.n(), 2);
    }
}
