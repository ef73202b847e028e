//! Arbitrary-precision rational scalars and integer combinatorics.
//!
//! `Rat` is backed by `num_rational::BigRational`, which maintains the
//! canonical form required here: `gcd(|numerator|, denominator) = 1`,
//! `denominator > 0`, zero stored as `0/1`. The helpers in this module fix
//! the textual format (`"num/den"`, integers without the `/1`) used by
//! every serializer in the crate.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::ring::CoeffRing;

/// Exact rational scalar.
pub type Rat = num_rational::BigRational;

/// Build a rational from an integer pair. Panics on zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Render as `"num/den"`, or `"num"` when the denominator is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse the `"num/den"` format accepted throughout the crate.
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<BigInt> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("invalid integer `{t}`")))
    };
    match s.split_once('/') {
        None => Ok(Rat::from_integer(parse_int(s)?)),
        Some((n, d)) => {
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rat::new(parse_int(n)?, den))
        }
    }
}

impl CoeffRing for Rat {
    fn zero() -> Self {
        <Rat as Zero>::zero()
    }
    fn one() -> Self {
        <Rat as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rat as Zero>::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn scale(&self, r: &Rat) -> Self {
        self * r
    }
    fn from_rat(r: Rat) -> Self {
        r
    }
    fn try_inv(&self) -> Option<Self> {
        if <Rat as Zero>::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn try_exact_div(&self, d: &Self) -> Option<Self> {
        if <Rat as Zero>::is_zero(d) {
            None
        } else {
            Some(self / d)
        }
    }
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Ordinary binomial coefficient C(n, k) for non-negative arguments.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Generalized binomial coefficient C(n, k) for integer `n` of either sign,
/// i.e. the coefficient of t^k in (1+t)^n.
pub fn binomial_signed(n: i64, k: usize) -> Rat {
    let mut num = rat_int(1);
    for j in 0..k {
        num = num * Rat::from_integer(BigInt::from(n - j as i64));
    }
    num / Rat::from_integer(factorial(k))
}

/// Central binomial coefficient (2k)! / (k!)^2.
pub fn central_binomial(k: usize) -> BigInt {
    binomial(2 * k, k)
}
