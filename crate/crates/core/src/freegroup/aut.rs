use std::fmt;

use super::FreeWord;
use crate::{Error, Result};

/// An endomorphism of a free group given by the images of its generators.
///
/// Invertibility is not assumed; use [`FreeAut::is_inverse_of`] to certify it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeAut {
    rank: usize,
    images: Vec<FreeWord>,
}

impl FreeAut {
    pub fn new(images: Vec<FreeWord>) -> Result<Self> {
        let rank = images.len();
        if let Some(bad) = images.iter().find(|w| w.rank() != rank) {
            return Err(Error::RankMismatch(rank, bad.rank()));
        }
        Ok(Self { rank, images })
    }

    pub fn identity(rank: usize) -> Self {
        Self {
            rank,
            images: (1..=rank)
                .map(|i| FreeWord::generator(rank, i).unwrap())
                .collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Image of `x_i` (1-based).
    pub fn image(&self, i: usize) -> &FreeWord {
        &self.images[i - 1]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    /// Substitutes every letter by its image and reduces.
    pub fn apply(&self, w: &FreeWord) -> Result<FreeWord> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch(self.rank, w.rank()));
        }
        let mut out = FreeWord::identity(self.rank);
        for &(g, e) in w.syllables() {
            out = out.multiply(&self.images[g - 1].pow(e))?;
        }
        Ok(out)
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.rank != self.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        let images = other
            .images
            .iter()
            .map(|w| self.apply(w))
            .collect::<Result<_>>()?;
        Ok(Self {
            rank: self.rank,
            images,
        })
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rank)
    }

    /// True when both composites are the identity.
    pub fn is_inverse_of(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.compose(other).is_ok_and(|c| c.is_identity())
            && other.compose(self).is_ok_and(|c| c.is_identity())
    }

    /// Parses one `xi -> word` line per generator. Blank lines and `#` comments
    /// are skipped. The rank is the number of mapping lines; every generator
    /// must be mapped exactly once.
    pub fn parse(text: &str) -> Result<Self> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty())
            .collect();
        let rank = lines.len();
        let mut images: Vec<Option<FreeWord>> = vec![None; rank];
        for (lineno, line) in lines {
            let syntax = |msg: String| Error::SyntaxError { pos: lineno, msg };
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| syntax(format!("line {}: expected 'xi -> word'", lineno + 1)))?;
            let idx: usize = lhs
                .trim()
                .strip_prefix('x')
                .and_then(|i| i.parse().ok())
                .ok_or_else(|| syntax(format!("line {}: bad generator {lhs:?}", lineno + 1)))?;
            if idx == 0 || idx > rank {
                return Err(Error::IndexOutOfRange {
                    index: idx,
                    max: rank,
                });
            }
            if images[idx - 1].is_some() {
                return Err(syntax(format!("line {}: x{idx} mapped twice", lineno + 1)));
            }
            images[idx - 1] = Some(FreeWord::parse(rank, rhs)?);
        }
        Self::new(
            images
                .into_iter()
                .map(|w| w.expect("each index mapped once"))
                .collect(),
        )
    }
}

impl fmt::Display for FreeAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            writeln!(f, "x{} -> {}", i + 1, w)?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeAut {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeAut[")?;
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x{} -> {}", i + 1, w)?;
        }
        write!(f, "]")
    }
}
