use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Which of the three groups a word or presentation belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupKind {
    /// Twin group `T_n`.
    T,
    /// Virtual twin group `VT_n`.
    VT,
    /// Welded twin group `WT_n`.
    WT,
}

impl GroupKind {
    pub fn has_rho(self) -> bool {
        !matches!(self, GroupKind::T)
    }

    pub fn name(self) -> &'static str {
        match self {
            GroupKind::T => "T",
            GroupKind::VT => "VT",
            GroupKind::WT => "WT",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "T" => Ok(GroupKind::T),
            "VT" => Ok(GroupKind::VT),
            "WT" => Ok(GroupKind::WT),
            _ => Err(Error::InvalidParameter(format!("unknown group kind {s:?}"))),
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A generator `s_i` or `ρ_i` (1-based index).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    S(usize),
    Rho(usize),
}

impl Letter {
    pub fn index(self) -> usize {
        match self {
            Letter::S(i) | Letter::Rho(i) => i,
        }
    }

    pub fn is_rho(self) -> bool {
        matches!(self, Letter::Rho(_))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::S(i) => write!(f, "s{i}"),
            Letter::Rho(i) => write!(f, "r{i}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct LetterJson {
    gen: String,
    i: usize,
}

impl Serialize for Letter {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let gen = if self.is_rho() { "r" } else { "s" };
        LetterJson {
            gen: gen.into(),
            i: self.index(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = LetterJson::deserialize(d)?;
        match j.gen.as_str() {
            "s" => Ok(Letter::S(j.i)),
            "r" => Ok(Letter::Rho(j.i)),
            other => Err(serde::de::Error::custom(format!(
                "unknown generator {other:?}"
            ))),
        }
    }
}

/// A word in the generators of `T_n`, `VT_n` or `WT_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwinWord {
    kind: GroupKind,
    n: usize,
    letters: Vec<Letter>,
}

impl TwinWord {
    pub fn new(kind: GroupKind, n: usize, letters: Vec<Letter>) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadStrandCount { n, min: 2 });
        }
        for &l in &letters {
            if l.index() == 0 || l.index() >= n {
                return Err(Error::IndexOutOfRange {
                    index: l.index(),
                    max: n - 1,
                });
            }
            if l.is_rho() && !kind.has_rho() {
                return Err(Error::KindMismatch(format!(
                    "{l} is not a generator of T_{n}"
                )));
            }
        }
        Ok(Self { kind, n, letters })
    }

    pub fn empty(kind: GroupKind, n: usize) -> Self {
        Self {
            kind,
            n,
            letters: Vec::new(),
        }
    }

    /// `s_i` indices; convenience for words in `T_n`.
    pub fn from_s(n: usize, indices: &[usize]) -> Result<Self> {
        Self::new(
            GroupKind::T,
            n,
            indices.iter().map(|&i| Letter::S(i)).collect(),
        )
    }

    /// Parses whitespace-separated letters such as `"s1 s2 r1"`.
    pub fn parse(kind: GroupKind, n: usize, s: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut offset = 0;
        for tok in s.split_whitespace() {
            let pos = s[offset..].find(tok).map_or(offset, |p| p + offset);
            offset = pos + tok.len();
            let bad = || Error::SyntaxError {
                pos,
                msg: format!("bad letter {tok:?}"),
            };
            let (head, idx) = tok.split_at(1);
            let i: usize = idx.parse().map_err(|_| bad())?;
            letters.push(match head {
                "s" => Letter::S(i),
                "r" => Letter::Rho(i),
                _ => return Err(bad()),
            });
        }
        Self::new(kind, n, letters)
    }

    /// Parses the JSON form `[{"gen": "s", "i": 1}, ...]`.
    pub fn from_json(kind: GroupKind, n: usize, json: &str) -> Result<Self> {
        let letters: Vec<Letter> = serde_json::from_str(json).map_err(|e| Error::SyntaxError {
            pos: e.column(),
            msg: e.to_string(),
        })?;
        Self::new(kind, n, letters)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.letters).expect("letters serialize")
    }

    pub fn kind(&self) -> GroupKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Concatenation; panics when the groups differ.
    pub fn concat(&self, other: &Self) -> Self {
        assert_eq!(
            (self.kind, self.n),
            (other.kind, other.n),
            "words from different groups"
        );
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Self {
            kind: self.kind,
            n: self.n,
            letters,
        }
    }

    /// The same letters viewed in another group on the same strands.
    pub fn with_kind(&self, kind: GroupKind) -> Result<Self> {
        Self::new(kind, self.n, self.letters.clone())
    }

    pub fn power(&self, k: usize) -> Self {
        let letters = std::iter::repeat_n(self.letters.iter().copied(), k)
            .flatten()
            .collect();
        Self {
            kind: self.kind,
            n: self.n,
            letters,
        }
    }
}

impl fmt::Display for TwinWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Serialize for TwinWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.letters.serialize(s)
    }
}
