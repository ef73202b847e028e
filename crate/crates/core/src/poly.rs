//! Dense univariate polynomials over an exact coefficient ring.
//!
//! Coefficients are stored in ascending degree order; the representation is
//! canonical: trailing zeros are stripped and the zero polynomial is the
//! empty list (its degree is `None`). The same type serves the rational
//! polynomials in `x` or `rho` of the arithmetic layer and the
//! time-polynomial coefficients of the graded algebra.

use crate::rational::{rat_to_string, Rat};
use crate::ring::CoeffRing;

/// Dense univariate polynomial with coefficients in `C`.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<C: CoeffRing> {
    coeffs: Vec<C>,
}

/// Polynomial with exact rational coefficients.
pub type RatPoly = Polynomial<Rat>;

impl<C: CoeffRing> Polynomial<C> {
    fn normalized(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        Self::normalized(coeffs)
    }

    pub fn constant(c: C) -> Self {
        Self::normalized(vec![c])
    }

    /// c * x^deg.
    pub fn monomial(c: C, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); deg + 1];
        coeffs[deg] = c;
        Polynomial { coeffs }
    }

    /// The indeterminate.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, deg: usize) -> C {
        self.coeffs.get(deg).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, at: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(at).add(c);
        }
        acc
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Rat::from_integer((k as i64).into())))
            .collect();
        Self::normalized(coeffs)
    }

    /// Exact integral over [0, 1]: sum of c_j / (j+1).
    pub fn integral_unit_interval(&self) -> C {
        let mut acc = C::zero();
        for (j, c) in self.coeffs.iter().enumerate() {
            acc = acc.add(&c.scale(&Rat::new(1.into(), ((j + 1) as i64).into())));
        }
        acc
    }

    /// Drop all terms of degree > `bound`.
    pub fn truncated(&self, bound: usize) -> Self {
        if self.coeffs.len() <= bound + 1 {
            self.clone()
        } else {
            Self::normalized(self.coeffs[..=bound].to_vec())
        }
    }

    /// Multiply by x^k.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Polynomial { coeffs }
    }

    pub fn map_coeffs<D: CoeffRing>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::normalized(self.coeffs.iter().map(f).collect())
    }
}

impl<C: CoeffRing> CoeffRing for Polynomial<C> {
    fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }
    fn one() -> Self {
        Polynomial { coeffs: vec![C::one()] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            let a = self.coeffs.get(k);
            let b = other.coeffs.get(k);
            coeffs.push(match (a, b) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::normalized(coeffs)
    }
    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }
    fn neg(&self) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }
    fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::zero();
        }
        let mut coeffs = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::normalized(coeffs)
    }
    fn scale(&self, r: &Rat) -> Self {
        Self::normalized(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }
    fn from_rat(r: Rat) -> Self {
        Self::constant(C::from_rat(r))
    }
    fn try_inv(&self) -> Option<Self> {
        // units in C[x] over a domain are the unit constants
        if self.coeffs.len() == 1 {
            self.coeffs[0].try_inv().map(Self::constant)
        } else {
            None
        }
    }
    fn try_exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // long division; exact iff the remainder vanishes
        let dd = d.coeffs.len() - 1;
        let lead_inv = d.coeffs[dd].try_inv()?;
        if self.coeffs.len() < d.coeffs.len() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![C::zero(); self.coeffs.len() - d.coeffs.len() + 1];
        for k in (0..quot.len()).rev() {
            let q = rem[k + dd].mul(&lead_inv);
            if q.is_zero() {
                continue;
            }
            for (j, dj) in d.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&q.mul(dj));
            }
            quot[k] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::normalized(quot))
        } else {
            None
        }
    }
}

impl RatPoly {
    /// Render with the given variable name, e.g. `-1/12*rho^2`.
    pub fn to_string_with_var(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = rat_to_string(c);
            let term = match k {
                0 => cs,
                1 if cs == "1" => var.to_string(),
                1 if cs == "-1" => format!("-{var}"),
                1 => format!("{cs}*{var}"),
                _ if cs == "1" => format!("{var}^{k}"),
                _ if cs == "-1" => format!("-{var}^{k}"),
                _ => format!("{cs}*{var}^{k}"),
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (idx, term) in parts.iter().enumerate() {
            if idx == 0 {
                out.push_str(term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(term);
            }
        }
        out
    }
}
