//! Seeded random inputs for the randomized checks.
//!
//! The seed comes from `TWINREP_SEED` when set, so failures reproduce.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::freegroup::FreeWord;
use crate::reps::T2Family;
use crate::ring::{LaurentPoly, RatFunc};

pub const DEFAULT_SEED: u64 = 0x7a11_2024;

pub fn seed_from_env() -> u64 {
    std::env::var("TWINREP_SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_SEED)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A freely reduced word of length at most `maxlen`.
pub fn random_free_word(rng: &mut impl Rng, rank: usize, maxlen: usize) -> FreeWord {
    let len = rng.gen_range(0..=maxlen);
    let mut letters = Vec::with_capacity(len);
    while letters.len() < len {
        let g = rng.gen_range(1..=rank);
        let e = if rng.gen_bool(0.5) { 1 } else { -1 };
        if letters.last() == Some(&(g, -e)) {
            continue;
        }
        letters.push((g, e));
    }
    FreeWord::from_letters(rank, letters).expect("indices within rank")
}

/// Up to three terms with exponents in `-2..=3` and coefficients in `-4..=4`.
pub fn random_laurent(rng: &mut impl Rng) -> LaurentPoly {
    let terms: Vec<(i64, i64)> = (0..rng.gen_range(0..=3))
        .map(|_| (rng.gen_range(-2..=3), rng.gen_range(-4..=4)))
        .collect();
    LaurentPoly::from_terms(terms)
}

pub fn random_nonzero_laurent(rng: &mut impl Rng) -> LaurentPoly {
    loop {
        let p = random_laurent(rng);
        if !p.is_zero() {
            return p;
        }
    }
}

/// A quotient of two small Laurent polynomials, sometimes with trivial denominator.
pub fn random_ratfunc(rng: &mut impl Rng) -> RatFunc {
    let num = random_laurent(rng);
    if rng.gen_bool(0.5) {
        return num.into();
    }
    RatFunc::new(num, random_nonzero_laurent(rng)).expect("nonzero denominator")
}

pub fn random_nonzero_ratfunc(rng: &mut impl Rng) -> RatFunc {
    loop {
        let r = random_ratfunc(rng);
        if !r.is_zero() {
            return r;
        }
    }
}

/// One of the five `T_2` families with random parameters; family `k` is
/// chosen with equal probability.
pub fn random_t2_family(rng: &mut impl Rng) -> T2Family {
    match rng.gen_range(1..=5) {
        1 => T2Family::General {
            a: random_ratfunc(rng),
            b: random_nonzero_ratfunc(rng),
        },
        2 => T2Family::LowerPlus {
            c: random_ratfunc(rng),
        },
        3 => T2Family::LowerMinus {
            c: random_ratfunc(rng),
        },
        4 => T2Family::MinusIdentity,
        _ => T2Family::Identity,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words_are_reduced_and_bounded() {
        let mut r = rng(1);
        for _ in 0..200 {
            let w = random_free_word(&mut r, 3, 12);
            assert!(w.len() <= 12);
            let letters: Vec<(usize, i64)> = w.letters().collect();
            assert!(letters
                .windows(2)
                .all(|p| p[0].0 != p[1].0 || p[0].1 == p[1].1));
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<String> = (0..5)
            .map(|_| random_laurent(&mut rng(9)).to_string())
            .collect();
        let b: Vec<String> = (0..5)
            .map(|_| random_laurent(&mut rng(9)).to_string())
            .collect();
        assert_eq!(a, b);
    }
}
