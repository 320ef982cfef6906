use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::ser::{Serialize, SerializeStruct, Serializer};

use super::{FreeAut, FreeWord, GroupRingElt};
use crate::matrix::Matrix;
use crate::ring::LaurentPoly;
use crate::{Error, Result};

/// Fox derivative `∂w/∂x_k` of a reduced word.
///
/// Reading `w` left to right with prefix `p`, a letter `x_k` contributes `p`
/// and a letter `x_k^-1` contributes `-p x_k^-1`.
pub fn fox_derivative(w: &FreeWord, k: usize) -> Result<GroupRingElt> {
    let rank = w.rank();
    if k == 0 || k > rank {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: rank,
        });
    }
    let mut out = GroupRingElt::zero(rank);
    let mut prefix = FreeWord::identity(rank);
    for (g, e) in w.letters() {
        let letter = FreeWord::from_letters(rank, [(g, e)])?;
        if g == k && e > 0 {
            out.add_term(prefix.clone(), BigInt::one());
        }
        prefix = prefix.multiply(&letter)?;
        if g == k && e < 0 {
            out.add_term(prefix.clone(), -BigInt::one());
        }
    }
    Ok(out)
}

/// Linear extension of [`fox_derivative`] to the group ring.
pub fn fox_derivative_elt(e: &GroupRingElt, k: usize) -> Result<GroupRingElt> {
    let rank = e.rank();
    if k == 0 || k > rank {
        return Err(Error::IndexOutOfRange {
            index: k,
            max: rank,
        });
    }
    let mut out = GroupRingElt::zero(rank);
    for (w, c) in e.terms() {
        out = &out + &fox_derivative(w, k)?.scale(c);
    }
    Ok(out)
}

/// Sends every generator to `t`, so a word maps to `t^(exponent sum)`.
pub fn magnus_specialize(e: &GroupRingElt) -> LaurentPoly {
    LaurentPoly::from_terms(e.terms().map(|(w, c)| (w.exponent_sum(), c.clone())))
}

/// Matrix of Fox derivatives of an endomorphism: entry `(r, k)` is
/// `∂φ(x_r)/∂x_k` (both 1-based in the text, 0-based in storage).
#[derive(Clone, PartialEq, Eq)]
pub struct FoxJacobian {
    rank: usize,
    entries: Vec<Vec<GroupRingElt>>,
}

impl FoxJacobian {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Zero-based entry.
    pub fn entry(&self, r: usize, k: usize) -> &GroupRingElt {
        &self.entries[r][k]
    }

    pub fn rows(&self) -> &[Vec<GroupRingElt>] {
        &self.entries
    }

    pub fn magnus(&self) -> Matrix<LaurentPoly> {
        Matrix::from_rows(
            self.entries
                .iter()
                .map(|row| row.iter().map(magnus_specialize).collect())
                .collect(),
        )
    }
}

pub fn jacobian_matrix(phi: &FreeAut) -> FoxJacobian {
    let rank = phi.rank();
    let entries = phi
        .images()
        .iter()
        .map(|img| {
            (1..=rank)
                .map(|k| fox_derivative(img, k).expect("index within rank"))
                .collect()
        })
        .collect();
    FoxJacobian { rank, entries }
}

impl fmt::Display for FoxJacobian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FoxJacobian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FoxJacobian\n{self}")
    }
}

impl Serialize for FoxJacobian {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let entries: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(ToString::to_string).collect())
            .collect();
        let mut st = s.serialize_struct("FoxJacobian", 2)?;
        st.serialize_field("degree", &self.rank)?;
        st.serialize_field("entries", &entries)?;
        st.end()
    }
}
