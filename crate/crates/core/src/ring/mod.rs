//! Exact arithmetic in `Z[t, t^-1]` and its fraction field `Q(t)`.
//!
//! Both types keep a canonical form at all times, so structural equality is
//! mathematical equality. The textual grammar shared by [`LaurentPoly`] and
//! [`RatFunc`] lists terms in ascending exponent order:
//!
//! ```text
//! -1 + 2*t - t^2        t^-1        (1 - t)/(1 + t)
//! ```

mod laurent;
mod parse;
mod ratfunc;

pub use laurent::LaurentPoly;
pub use ratfunc::RatFunc;

use num_bigint::BigInt;
use num_rational::BigRational;

/// Specialization points for `t`.
pub type Rational = BigRational;

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> crate::Result<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let bad = |pos: usize| crate::Error::SyntaxError {
        pos,
        msg: format!("expected rational p/q, got {s:?}"),
    };
    let p: BigInt = num.parse().map_err(|_| bad(0))?;
    let q: BigInt = den.parse().map_err(|_| bad(num.len() + 1))?;
    if q == BigInt::from(0) {
        return Err(crate::Error::DivisionByZero);
    }
    Ok(Rational::new(p, q))
}

/// Always renders as `p/q`, including integers (`4/1`).
pub fn format_rational(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Commutative ring operations needed by the dense matrix code.
pub trait Scalar: Clone + PartialEq + std::fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

/// A [`Scalar`] with multiplicative inverses of nonzero elements.
pub trait Field: Scalar {
    fn inv(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn zero() -> Self {
        num_traits::Zero::zero()
    }
    fn one() -> Self {
        num_traits::One::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn one() -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Scalar for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        RatFunc::inv(self).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_round_trip() {
        let r = parse_rational("6/4").unwrap();
        assert_eq!(format_rational(&r), "3/2");
        assert_eq!(format_rational(&parse_rational("-3").unwrap()), "-3/1");
        assert_eq!(
            format_rational(&parse_rational(" 8 / -3 ").unwrap()),
            "-8/3"
        );
    }

    #[test]
    fn rational_errors() {
        assert!(matches!(
            parse_rational("1/0"),
            Err(crate::Error::DivisionByZero)
        ));
        assert!(matches!(
            parse_rational("x"),
            Err(crate::Error::SyntaxError { .. })
        ));
    }
}
