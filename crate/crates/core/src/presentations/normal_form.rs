use std::collections::HashSet;

use super::{GroupKind, Letter, TwinWord};
use crate::{Error, Result};

fn commute(a: usize, b: usize) -> bool {
    a.abs_diff(b) >= 2
}

fn s_indices(w: &TwinWord) -> Result<Vec<usize>> {
    w.letters()
        .iter()
        .map(|l| match *l {
            Letter::S(i) => Ok(i),
            Letter::Rho(_) => Err(Error::KindMismatch(format!(
                "{l} is not an element of T_{}",
                w.n()
            ))),
        })
        .collect()
}

/// Deletes `a ... a` pairs whose interior commutes with `a` until none remain.
fn cancel(mut w: Vec<usize>) -> Vec<usize> {
    'outer: loop {
        for p in 0..w.len() {
            for q in p + 1..w.len() {
                if w[q] == w[p] {
                    w.remove(q);
                    w.remove(p);
                    continue 'outer;
                }
                if !commute(w[q], w[p]) {
                    break;
                }
            }
        }
        return w;
    }
}

/// Lex-least word in the commutation class of a reduced word.
fn lex_least(mut w: Vec<usize>) -> Vec<usize> {
    let mut out = Vec::with_capacity(w.len());
    while !w.is_empty() {
        let mut best: Option<usize> = None;
        for p in 0..w.len() {
            if w[..p].iter().all(|&b| commute(b, w[p])) && best.is_none_or(|b| w[p] < w[b]) {
                best = Some(p);
            }
        }
        let p = best.expect("the first letter is always movable");
        out.push(w.remove(p));
    }
    out
}

fn normal_indices(w: Vec<usize>) -> Vec<usize> {
    lex_least(cancel(w))
}

/// Canonical representative of a twin-group element: a reduced word, lex-least
/// among those reachable by commuting distant generators.
pub fn normal_form_t(w: &TwinWord) -> Result<TwinWord> {
    let idx = s_indices(w)?;
    TwinWord::from_s(w.n(), &normal_indices(idx))
}

/// Whether two words represent the same element of `T_n`.
pub fn words_equal_in_t(u: &TwinWord, v: &TwinWord) -> Result<bool> {
    if u.n() != v.n() {
        return Err(Error::KindMismatch(format!("T_{} vs T_{}", u.n(), v.n())));
    }
    if u.kind() != GroupKind::T || v.kind() != GroupKind::T {
        return Err(Error::KindMismatch(format!(
            "{} and {} words are not twin-group words",
            u.kind(),
            v.kind()
        )));
    }
    Ok(normal_indices(s_indices(u)?) == normal_indices(s_indices(v)?))
}

/// Every element of `T_n` of length at most `maxlen`, as normal forms ordered
/// by length then lexicographically.
pub fn enumerate_t_elements(n: usize, maxlen: usize) -> Result<Vec<TwinWord>> {
    if n < 2 {
        return Err(Error::BadStrandCount { n, min: 2 });
    }
    let mut all: Vec<Vec<usize>> = vec![Vec::new()];
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    for len in 1..=maxlen {
        let mut next: HashSet<Vec<usize>> = HashSet::new();
        for w in &level {
            for s in 1..n {
                let mut ext = w.clone();
                ext.push(s);
                let nf = normal_indices(ext);
                if nf.len() == len {
                    next.insert(nf);
                }
            }
        }
        let mut next: Vec<Vec<usize>> = next.into_iter().collect();
        next.sort();
        all.extend(next.iter().cloned());
        level = next;
    }
    all.into_iter().map(|w| TwinWord::from_s(n, &w)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(n: usize, idx: &[usize]) -> String {
        normal_form_t(&TwinWord::from_s(n, idx).unwrap())
            .unwrap()
            .to_string()
    }

    #[test]
    fn cancellation_through_commuting_letters() {
        assert_eq!(nf(4, &[1, 3, 3, 1]), "");
        assert_eq!(nf(4, &[1, 3, 1]), "s3");
        assert_eq!(nf(4, &[3, 1]), "s1 s3");
        assert_eq!(nf(3, &[1, 2, 1]), "s1 s2 s1");
        assert_eq!(nf(5, &[4, 2, 1, 4]), "s2 s1");
        // s2 blocks s1 from meeting s1
        assert_eq!(nf(4, &[1, 2, 3, 1]), "s1 s2 s1 s3");
    }

    #[test]
    fn rejects_rho_letters() {
        let w = TwinWord::parse(GroupKind::VT, 3, "s1 r1").unwrap();
        assert!(matches!(normal_form_t(&w), Err(Error::KindMismatch(_))));
        let u = TwinWord::from_s(3, &[1]).unwrap();
        let v = TwinWord::from_s(4, &[1]).unwrap();
        assert!(words_equal_in_t(&u, &v).is_err());
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_t_elements(2, 5).unwrap().len(), 2);
        assert_eq!(enumerate_t_elements(3, 3).unwrap().len(), 7);
        assert_eq!(enumerate_t_elements(4, 2).unwrap().len(), 9);
        for len in 0..10 {
            assert_eq!(enumerate_t_elements(3, len).unwrap().len(), 2 * len + 1);
        }
    }

    #[test]
    fn enumeration_order() {
        let words: Vec<String> = enumerate_t_elements(4, 2)
            .unwrap()
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            words,
            ["", "s1", "s2", "s3", "s1 s2", "s1 s3", "s2 s1", "s2 s3", "s3 s2"]
        );
    }
}
