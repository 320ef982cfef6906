use serde::Serialize;

use crate::matrix::Matrix;
use crate::presentations::{GroupKind, Letter, TwinWord};
use crate::reps::{evaluate_word, vt_extension_eta1};
use crate::ring::{LaurentPoly, RatFunc};
use crate::{Error, Result};

/// Family tag (1..=5) of a `2 x 2` involution `ρ_1` extending the `T_2` block.
pub fn classify_involution_2x2(m: &Matrix<RatFunc>) -> Result<u8> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::DegreeMismatch(2, m.rows()));
    }
    if !m.mul(m).is_identity() {
        return Err(Error::NotInvolution(
            "matrix does not square to the identity".into(),
        ));
    }
    let minus_one = RatFunc::from(-1);
    if m.is_identity() {
        return Ok(5);
    }
    if *m == Matrix::identity(2).scale(&minus_one) {
        return Ok(4);
    }
    if !(&m[(0, 0)] + &m[(1, 1)]).is_zero() {
        return Err(Error::UnclassifiableInvolution);
    }
    if !m[(0, 1)].is_zero() {
        Ok(1)
    } else if m[(0, 0)].is_one() {
        Ok(2)
    } else if m[(0, 0)] == minus_one {
        Ok(3)
    } else {
        Err(Error::UnclassifiableInvolution)
    }
}

/// The first entry where two sides of a relation differ (1-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryWitness {
    pub relation: String,
    pub row: usize,
    pub col: usize,
    pub lhs: String,
    pub rhs: String,
}

/// The welded relations at one index `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeldedIndexCheck {
    pub i: usize,
    /// `ρ_i s_{i+1} s_i = s_{i+1} s_i ρ_{i+1}`
    pub welded: bool,
    /// `s_{i+1} ρ_i ρ_{i+1} = ρ_i ρ_{i+1} s_i`
    pub welded_alt: bool,
    /// `ρ_i s_{i+1} s_i = s_{i+1} ρ_i ρ_{i+1}`
    pub mixed_variant: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WtObstruction {
    pub n: usize,
    pub b: String,
    pub obstructed: bool,
    pub indices: Vec<WeldedIndexCheck>,
    pub witness: Option<EntryWitness>,
}

/// Checks the welded relations on the `VT_n` extension of `η₁` with
/// parameter `b`; `obstructed` is true when one of the two welded forms fails.
pub fn wt_obstruction_check(n: usize, b: &LaurentPoly) -> Result<WtObstruction> {
    let rep = vt_extension_eta1(n, b)?;
    let word = |letters: Vec<Letter>| TwinWord::new(GroupKind::WT, n, letters);
    let mut indices = Vec::new();
    let mut witness = None;
    for i in 1..n - 1 {
        use Letter::{Rho as R, S};
        let pairs = [
            (
                "welded",
                vec![R(i), S(i + 1), S(i)],
                vec![S(i + 1), S(i), R(i + 1)],
            ),
            (
                "welded-alt",
                vec![S(i + 1), R(i), R(i + 1)],
                vec![R(i), R(i + 1), S(i)],
            ),
            (
                "mixed-variant",
                vec![R(i), S(i + 1), S(i)],
                vec![S(i + 1), R(i), R(i + 1)],
            ),
        ];
        let mut holds = [true; 3];
        for (k, (name, lhs, rhs)) in pairs.into_iter().enumerate() {
            let (lw, rw) = (word(lhs)?, word(rhs)?);
            let (lm, rm) = (evaluate_word(&rep, &lw)?, evaluate_word(&rep, &rw)?);
            if let Some((r, c)) = lm.first_difference(&rm) {
                holds[k] = false;
                if witness.is_none() && k < 2 {
                    witness = Some(EntryWitness {
                        relation: format!("[{name}] {lw} = {rw}"),
                        row: r + 1,
                        col: c + 1,
                        lhs: lm[(r, c)].to_string(),
                        rhs: rm[(r, c)].to_string(),
                    });
                }
            }
        }
        indices.push(WeldedIndexCheck {
            i,
            welded: holds[0],
            welded_alt: holds[1],
            mixed_variant: holds[2],
        });
    }
    Ok(WtObstruction {
        n,
        b: b.to_string(),
        obstructed: witness.is_some(),
        indices,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::T2Family;

    fn rf(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn m(rows: [[&str; 2]; 2]) -> Matrix<RatFunc> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|s| rf(s)).collect())
                .collect(),
        )
    }

    #[test]
    fn classification_samples() {
        assert_eq!(
            classify_involution_2x2(&m([["t", "1"], ["1 - t^2", "-t"]])),
            Ok(1)
        );
        assert_eq!(
            classify_involution_2x2(&m([["-1", "0"], ["0", "-1"]])),
            Ok(4)
        );
        assert_eq!(
            classify_involution_2x2(&m([["-1", "0"], ["t", "1"]])),
            Ok(3)
        );
        assert_eq!(
            classify_involution_2x2(&m([["1", "0"], ["t", "-1"]])),
            Ok(2)
        );
        assert_eq!(classify_involution_2x2(&Matrix::identity(2)), Ok(5));
        assert!(matches!(
            classify_involution_2x2(&m([["1", "1"], ["0", "1"]])),
            Err(Error::NotInvolution(_))
        ));
        assert!(classify_involution_2x2(&Matrix::identity(3)).is_err());
    }

    #[test]
    fn classification_inverts_construction() {
        let fams = [
            T2Family::General {
                a: rf("2 + t"),
                b: rf("(1)/(1 + t)"),
            },
            T2Family::LowerPlus { c: rf("t^-3") },
            T2Family::LowerMinus { c: rf("0") },
            T2Family::MinusIdentity,
            T2Family::Identity,
        ];
        for f in fams {
            assert_eq!(classify_involution_2x2(&f.block().unwrap()), Ok(f.tag()));
        }
    }

    #[test]
    fn welded_obstruction_for_b_one() {
        let w = wt_obstruction_check(3, &LaurentPoly::one()).unwrap();
        assert!(w.obstructed);
        let idx = &w.indices[0];
        assert!(!idx.welded);
        assert!(idx.welded_alt);
        assert!(!idx.mixed_variant);
        let wit = w.witness.unwrap();
        assert!(wit.relation.starts_with("[welded] r1 s2 s1 = s2 s1 r2"));
        assert_ne!(wit.lhs, wit.rhs);
    }

    #[test]
    fn welded_obstruction_at_every_index() {
        let b: LaurentPoly = "1 + t".parse().unwrap();
        let w = wt_obstruction_check(5, &b).unwrap();
        assert!(w.obstructed);
        assert_eq!(w.indices.len(), 3);
        assert!(w.indices.iter().all(|c| !c.welded));
        assert_eq!(
            wt_obstruction_check(3, &LaurentPoly::zero()).unwrap_err(),
            Error::ZeroScalar("b")
        );
    }
}
