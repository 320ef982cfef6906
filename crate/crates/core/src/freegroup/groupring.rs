use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::FreeWord;
use crate::{Error, Result};

/// A finite `Z`-linear combination of free-group words.
///
/// Arithmetic operators panic when the ranks of the operands differ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupRingElt {
    rank: usize,
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElt {
    pub fn zero(rank: usize) -> Self {
        Self {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::from_word(FreeWord::identity(rank))
    }

    pub fn from_word(w: FreeWord) -> Self {
        Self::from_term(w, BigInt::one())
    }

    pub fn from_term(w: FreeWord, c: BigInt) -> Self {
        let mut e = Self::zero(w.rank());
        e.add_term(w, c);
        e
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_term(&mut self, w: FreeWord, c: BigInt) {
        assert_eq!(w.rank(), self.rank, "rank mismatch in group ring");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(slot) => {
                *slot += c;
                if slot.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    /// Terms in shortlex order of their words.
    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &FreeWord) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The augmentation: sum of the coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    /// Parses `"1 - x1*x2*x1^-1 + 2*x2"`.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        // split on +/- that are not exponent signs
        let mut chunks: Vec<(usize, i64, &str)> = Vec::new();
        let mut sign = 1i64;
        let mut start = 0usize;
        let mut last: Option<char> = None;
        for (pos, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && last != Some('^') {
                let text = &s[start..pos];
                if !text.trim().is_empty() {
                    chunks.push((start, sign, text));
                } else if last.is_some() {
                    return Err(Error::SyntaxError {
                        pos,
                        msg: "dangling operator".into(),
                    });
                }
                sign = if ch == '-' { -1 } else { 1 };
                start = pos + 1;
            }
            if !ch.is_whitespace() {
                last = Some(ch);
            }
        }
        if s[start..].trim().is_empty() {
            return Err(Error::SyntaxError {
                pos: s.len(),
                msg: "expected a term".into(),
            });
        }
        chunks.push((start, sign, &s[start..]));

        let mut out = Self::zero(rank);
        for (pos, sign, text) in chunks {
            let text = text.trim();
            let is_int = |x: &str| !x.is_empty() && x.chars().all(|ch| ch.is_ascii_digit());
            let (coeff, word) = match text.split_once('*') {
                Some((c, rest)) if is_int(c.trim()) => (
                    c.trim().parse::<BigInt>().unwrap(),
                    FreeWord::parse(rank, rest),
                ),
                _ if is_int(text) => (
                    text.parse::<BigInt>().unwrap(),
                    Ok(FreeWord::identity(rank)),
                ),
                _ => (BigInt::one(), FreeWord::parse(rank, text)),
            };
            let word = word.map_err(|e| match e {
                Error::SyntaxError { pos: p, msg } => Error::SyntaxError { pos: pos + p, msg },
                other => other,
            })?;
            out.add_term(word, coeff * sign);
        }
        Ok(out)
    }
}

impl From<FreeWord> for GroupRingElt {
    fn from(w: FreeWord) -> Self {
        Self::from_word(w)
    }
}

impl Add<&GroupRingElt> for &GroupRingElt {
    type Output = GroupRingElt;
    fn add(self, rhs: &GroupRingElt) -> GroupRingElt {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub<&GroupRingElt> for &GroupRingElt {
    type Output = GroupRingElt;
    fn sub(self, rhs: &GroupRingElt) -> GroupRingElt {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul<&GroupRingElt> for &GroupRingElt {
    type Output = GroupRingElt;
    fn mul(self, rhs: &GroupRingElt) -> GroupRingElt {
        assert_eq!(self.rank, rhs.rank, "rank mismatch in group ring");
        let mut out = GroupRingElt::zero(self.rank);
        for (u, a) in &self.terms {
            for (v, b) in &rhs.terms {
                out.add_term(u.multiply(v).expect("same rank"), a * b);
            }
        }
        out
    }
}

impl Neg for &GroupRingElt {
    type Output = GroupRingElt;
    fn neg(self) -> GroupRingElt {
        self.scale(&BigInt::from(-1))
    }
}

impl fmt::Display for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            if w.is_identity() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{abs}*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GroupRingElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupRingElt({self})")
    }
}
