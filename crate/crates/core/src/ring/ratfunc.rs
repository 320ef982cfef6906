use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{format_rational, LaurentPoly, Rational};
use crate::{Error, Result};

/// An element of `Q(t)` stored as a normalized quotient of Laurent polynomials.
///
/// Normal form: the denominator has lowest exponent 0 and a positive leading
/// coefficient, numerator and denominator share no polynomial factor over `Q`,
/// and their joint integer content is 1. Equal values have identical fields.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(num, den))
    }

    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn t() -> Self {
        Self::from(LaurentPoly::t())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from(LaurentPoly::constant(c))
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The underlying Laurent polynomial when the denominator is 1.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(normalize(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, exp: i64) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let (num, den) = (base.num.pow(exp.abs())?, base.den.pow(exp.abs())?);
        // powers of coprime polynomials stay coprime
        Ok(Self { num, den })
    }

    pub fn eval(&self, t0: &Rational) -> Result<Rational> {
        let d = self.den.eval(t0)?;
        if d.is_zero() {
            return Err(Error::PoleAtPoint(format_rational(t0)));
        }
        Ok(self.num.eval(t0)? / d)
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(num: LaurentPoly) -> Self {
        Self {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

fn normalize(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
    if num.is_zero() {
        return RatFunc::zero();
    }
    let (num_lo, n) = num.to_dense();
    let (den_lo, d) = den.to_dense();
    let (mut n, mut d) = if d.len() == 1 {
        (n, d)
    } else {
        let g = poly_gcd(&n, &d);
        if g.len() > 1 {
            (div_exact(&n, &g), div_exact(&d, &g))
        } else {
            (n, d)
        }
    };
    let c = content(&n).gcd(&content(&d));
    if !c.is_one() {
        n.iter_mut().for_each(|x| *x /= &c);
        d.iter_mut().for_each(|x| *x /= &c);
    }
    if d.last().expect("nonzero").is_negative() {
        n.iter_mut().for_each(|x| *x = -&*x);
        d.iter_mut().for_each(|x| *x = -&*x);
    }
    RatFunc {
        num: LaurentPoly::from_dense(num_lo - den_lo, &n),
        den: LaurentPoly::from_dense(0, &d),
    }
}

// Dense polynomials over Z, index = degree, no trailing zeros.

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c))
}

fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    let c = content(v);
    if c.is_zero() || c.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &c).collect()
}

/// Pseudo-remainder of `a` by `b` (`b` nonzero).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for x in r.iter_mut() {
            *x *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        trim(&mut r);
    }
    r
}

/// Primitive gcd in `Z[t]` with positive leading coefficient.
fn poly_gcd(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let (mut a, mut b) = (primitive(a), primitive(b));
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_empty() {
        let r = pseudo_rem(&a, &b);
        a = b;
        b = primitive(&r);
    }
    if a.last().is_some_and(|c| c.is_negative()) {
        a.iter_mut().for_each(|x| *x = -&*x);
    }
    a
}

/// Exact quotient `a / g` in `Z[t]`, `g` primitive and dividing `a`.
fn div_exact(a: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let dg = g.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - dg];
    let lg = &g[dg];
    for k in (0..q.len()).rev() {
        let coef = &r[k + dg] / lg;
        for (i, gc) in g.iter().enumerate() {
            r[k + i] -= &coef * gc;
        }
        q[k] = coef;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()), "inexact polynomial division");
    trim(&mut q);
    q
}

impl Add<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            if self.den.is_one() {
                return RatFunc::from(&self.num + &rhs.num);
            }
            return normalize(&self.num + &rhs.num, self.den.clone());
        }
        normalize(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul<&RatFunc> for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from(&self.num * &rhs.num);
        }
        normalize(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: &RatFunc) -> RatFunc {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl FromStr for RatFunc {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        super::parse::parse_ratfunc(s)
    }
}
