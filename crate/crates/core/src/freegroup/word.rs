use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// A freely reduced word in the free group of rank `rank` on `x1..x_rank`.
///
/// Stored as syllables `(generator, exponent)` with nonzero exponents and no
/// two adjacent syllables on the same generator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: usize,
    syllables: Vec<(usize, i64)>,
}

impl FreeWord {
    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            syllables: Vec::new(),
        }
    }

    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        Self::from_letters(rank, [(i, 1)])
    }

    /// Freely reduces a sequence of generator powers `(index, exponent)`.
    pub fn from_letters(
        rank: usize,
        letters: impl IntoIterator<Item = (usize, i64)>,
    ) -> Result<Self> {
        let mut w = Self::identity(rank);
        for (g, e) in letters {
            if g == 0 || g > rank {
                return Err(Error::IndexOutOfRange {
                    index: g,
                    max: rank,
                });
            }
            w.push(g, e);
        }
        Ok(w)
    }

    fn push(&mut self, g: usize, e: i64) {
        if e == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((h, f)) if *h == g => {
                *f += e;
                if *f == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((g, e)),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn syllables(&self) -> &[(usize, i64)] {
        &self.syllables
    }

    /// Letters `(generator, ±1)` left to right.
    pub fn letters(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.syllables
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.syllables
            .iter()
            .map(|(_, e)| e.unsigned_abs() as usize)
            .sum()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.syllables.iter().map(|(_, e)| e).sum()
    }

    pub fn multiply(&self, rhs: &Self) -> Result<Self> {
        if self.rank != rhs.rank {
            return Err(Error::RankMismatch(self.rank, rhs.rank));
        }
        let mut out = self.clone();
        for &(g, e) in &rhs.syllables {
            out.push(g, e);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> Self {
        Self {
            rank: self.rank,
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Self::identity(self.rank);
        for _ in 0..k.unsigned_abs() {
            out = out.multiply(&base).expect("same rank");
        }
        out
    }

    /// Parses `"x1*x2^-1*x1"`; `"1"` is the identity.
    pub fn parse(rank: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::identity(rank));
        }
        let mut letters = Vec::new();
        let mut offset = 0;
        for factor in s.split('*') {
            let pos = offset + (factor.len() - factor.trim_start().len());
            offset += factor.len() + 1;
            let f = factor.trim();
            let syntax = |msg: &str| Error::SyntaxError {
                pos,
                msg: msg.to_string(),
            };
            let rest = f
                .strip_prefix('x')
                .ok_or_else(|| syntax("expected x<index>"))?;
            let (idx, exp) = match rest.split_once('^') {
                Some((i, e)) => (
                    i,
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| syntax("bad exponent"))?,
                ),
                None => (rest, 1),
            };
            let idx: usize = idx
                .trim()
                .parse()
                .map_err(|_| syntax("bad generator index"))?;
            letters.push((idx, exp));
        }
        Self::from_letters(rank, letters)
    }

    fn letter_key((g, e): (usize, i64)) -> (usize, bool) {
        (g, e < 0)
    }
}

/// Shortlex: shorter words first, then lexicographic with
/// `x1 < x1^-1 < x2 < x2^-1 < ...`.
impl Ord for FreeWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank
            .cmp(&other.rank)
            .then(self.len().cmp(&other.len()))
            .then_with(|| {
                self.letters()
                    .map(Self::letter_key)
                    .cmp(other.letters().map(Self::letter_key))
            })
    }
}

impl PartialOrd for FreeWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for (k, &(g, e)) in self.syllables.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "x{g}")?;
            } else {
                write!(f, "x{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeWord({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(rank: usize, s: &str) -> FreeWord {
        FreeWord::parse(rank, s).unwrap()
    }

    #[test]
    fn free_reduction() {
        let id = FreeWord::from_letters(3, [(1, 1), (1, -1)]).unwrap();
        assert!(id.is_identity());
        let sq = FreeWord::from_letters(3, [(1, 1), (2, 1), (2, -1), (1, 1)]).unwrap();
        assert_eq!(sq, w(3, "x1^2"));
        let x3 = FreeWord::from_letters(3, [(1, 1), (2, -1), (2, 1), (1, -1), (3, 1)]).unwrap();
        assert_eq!(x3, w(3, "x3"));
        assert_eq!(
            FreeWord::from_letters(2, [(3, 1)]),
            Err(Error::IndexOutOfRange { index: 3, max: 2 })
        );
        assert_eq!(
            FreeWord::from_letters(2, [(0, 1)]),
            Err(Error::IndexOutOfRange { index: 0, max: 2 })
        );
    }

    #[test]
    fn products_and_inverses() {
        assert_eq!(w(2, "x1*x2").multiply(&w(2, "x2^-1")).unwrap(), w(2, "x1"));
        let c = w(2, "x1*x2*x1^-1");
        assert_eq!(c.inverse(), w(2, "x1*x2^-1*x1^-1"));
        assert!(c.multiply(&w(2, "x1*x2^-1*x1^-1")).unwrap().is_identity());
        assert_eq!(
            w(2, "x1").multiply(&w(3, "x1")),
            Err(Error::RankMismatch(2, 3))
        );
    }

    #[test]
    fn text_form() {
        assert_eq!(w(3, "x1 * x2^-1 * x1").to_string(), "x1*x2^-1*x1");
        assert_eq!(w(3, "x2*x2*x2").to_string(), "x2^3");
        assert_eq!(FreeWord::identity(2).to_string(), "1");
        assert!(FreeWord::parse(2, "y1").is_err());
        assert!(FreeWord::parse(2, "x1^").is_err());
        assert!(FreeWord::parse(2, "x5").is_err());
    }

    #[test]
    fn shortlex_order() {
        let mut v = [
            w(2, "x2"),
            w(2, "x1^-1"),
            FreeWord::identity(2),
            w(2, "x1*x1"),
            w(2, "x1"),
        ];
        v.sort();
        let s: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(s, ["1", "x1", "x1^-1", "x2", "x1^2"]);
    }

    #[test]
    fn powers_and_lengths() {
        let a = w(2, "x1*x2");
        assert_eq!(a.pow(2), w(2, "x1*x2*x1*x2"));
        assert_eq!(a.pow(-1), a.inverse());
        assert_eq!(a.pow(3).len(), 6);
        assert_eq!(w(2, "x1^-3*x2").exponent_sum(), -2);
    }
}
