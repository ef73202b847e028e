//! Gaussian rationals: exact values `re + im*i` with `i^2 = -1`.

use crate::error::{Error, Result};
use crate::rational::{rat_from_str, rat_int, rat_to_string, Rat};
use crate::ring::CoeffRing;

/// Element of Q(i).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Gaussian {
    pub re: Rat,
    pub im: Rat,
}

impl Gaussian {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gaussian { re, im }
    }

    pub fn from_re(re: Rat) -> Self {
        Gaussian { re, im: rat_int(0) }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Gaussian { re: rat_int(0), im: rat_int(1) }
    }

    /// i^k for any exponent.
    pub fn i_pow(k: usize) -> Self {
        let mut v = Gaussian::from_re(<Rat as CoeffRing>::one());
        match k % 4 {
            0 => {}
            1 => v = Gaussian::i(),
            2 => v = Gaussian::from_re(-<Rat as CoeffRing>::one()),
            _ => v = Gaussian { re: rat_int(0), im: rat_int(-1) },
        }
        v
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -&self.im }
    }

    /// |z|^2 = z * conj(z) as a rational.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        CoeffRing::is_zero(&self.im)
    }

    /// Serialize as `"re+im*i"` (sign of the imaginary part folded in).
    pub fn to_canonical_string(&self) -> String {
        if CoeffRing::is_zero(&self.im) {
            return rat_to_string(&self.re);
        }
        let (sign, abs_im) = if self.im < rat_int(0) {
            ("-", -&self.im)
        } else {
            ("+", self.im.clone())
        };
        format!("{}{}{}*i", rat_to_string(&self.re), sign, rat_to_string(&abs_im))
    }

    /// Parse the format produced by [`Gaussian::to_canonical_string`].
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.strip_suffix("*i") {
            None => Ok(Gaussian::from_re(rat_from_str(s)?)),
            Some(head) => {
                // split at the sign separating re from im; skip a leading sign
                let bytes = head.as_bytes();
                let mut split = None;
                for (idx, &b) in bytes.iter().enumerate().skip(1) {
                    if (b == b'+' || b == b'-') && bytes[idx - 1] != b'/' && idx > 0 {
                        split = Some(idx);
                    }
                }
                let idx = split
                    .ok_or_else(|| Error::Parse(format!("malformed gaussian `{s}`")))?;
                let re = rat_from_str(&head[..idx])?;
                let im_str = &head[idx..];
                let im = match im_str.strip_prefix('+') {
                    Some(rest) => rat_from_str(rest)?,
                    None => rat_from_str(im_str)?,
                };
                Ok(Gaussian { re, im })
            }
        }
    }
}

impl CoeffRing for Gaussian {
    fn zero() -> Self {
        Gaussian::default()
    }
    fn one() -> Self {
        Gaussian::from_re(<Rat as CoeffRing>::one())
    }
    fn is_zero(&self) -> bool {
        CoeffRing::is_zero(&self.re) && CoeffRing::is_zero(&self.im)
    }
    fn add(&self, other: &Self) -> Self {
        Gaussian { re: &self.re + &other.re, im: &self.im + &other.im }
    }
    fn sub(&self, other: &Self) -> Self {
        Gaussian { re: &self.re - &other.re, im: &self.im - &other.im }
    }
    fn neg(&self) -> Self {
        Gaussian { re: -&self.re, im: -&self.im }
    }
    fn mul(&self, other: &Self) -> Self {
        Gaussian {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }
    fn scale(&self, r: &Rat) -> Self {
        Gaussian { re: &self.re * r, im: &self.im * r }
    }
    fn from_rat(r: Rat) -> Self {
        Gaussian::from_re(r)
    }
    fn try_inv(&self) -> Option<Self> {
        let n = self.norm();
        if CoeffRing::is_zero(&n) {
            None
        } else {
            Some(self.conj().scale(&n.recip()))
        }
    }
    fn try_exact_div(&self, d: &Self) -> Option<Self> {
        d.try_inv().map(|inv| self.mul(&inv))
    }
}
