//! Bernoulli numbers and polynomials, and generalized binomial polynomials.
//!
//! The Bernoulli convention is fixed by the generating function
//! `t*exp(x*t)/(exp(t) - 1) = sum_l B_l(x) t^l / l!`, so `B_1(x) = x - 1/2`
//! and the Bernoulli numbers carry `B_1 = -1/2`.

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::RatPoly;
use crate::rational::{binomial, factorial, rat_int, Rat};
use crate::ring::CoeffRing;

/// Bernoulli numbers B_0..B_n, computed once and shared across workers.
#[derive(Clone, Debug)]
pub struct BernoulliTable {
    numbers: Vec<Rat>,
}

impl BernoulliTable {
    /// Table of B_0..B_n via the defining recurrence
    /// `sum_{j<=m} C(m+1, j) B_j = 0` for m >= 1.
    pub fn up_to(n: usize) -> Self {
        let mut numbers = Vec::with_capacity(n + 1);
        numbers.push(rat_int(1));
        for m in 1..=n {
            let mut acc = rat_int(0);
            // incremental row of C(m+1, j)
            let mut c = BigInt::one();
            for (j, b) in numbers.iter().enumerate().take(m) {
                if !CoeffRing::is_zero(b) {
                    acc += b * Rat::from_integer(c.clone());
                }
                c = c * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            numbers.push(-acc / Rat::from_integer(BigInt::from(m + 1)));
        }
        BernoulliTable { numbers }
    }

    pub fn number(&self, k: usize) -> &Rat {
        &self.numbers[k]
    }

    pub fn len(&self) -> usize {
        self.numbers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.numbers.is_empty()
    }

    /// B_l evaluated at `y`, given precomputed powers `y_pows[j] = y^j`
    /// for j <= l.
    pub fn eval(&self, l: usize, y_pows: &[Rat]) -> Rat {
        assert!(l < self.numbers.len(), "Bernoulli table too short");
        let mut acc = rat_int(0);
        let mut c = BigInt::one();
        for (k, b) in self.numbers.iter().enumerate().take(l + 1) {
            if !CoeffRing::is_zero(b) {
                acc += b * Rat::from_integer(c.clone()) * &y_pows[l - k];
            }
            c = c * BigInt::from(l - k) / BigInt::from(k + 1);
        }
        acc
    }
}

/// The l-th Bernoulli polynomial `B_l(x) = sum_k C(l,k) B_k x^{l-k}`.
pub fn bernoulli_polynomial(l: usize) -> RatPoly {
    let table = BernoulliTable::up_to(l);
    bernoulli_polynomial_from(&table, l)
}

/// As [`bernoulli_polynomial`] but reusing a shared number table.
pub fn bernoulli_polynomial_from(table: &BernoulliTable, l: usize) -> RatPoly {
    let mut coeffs = vec![rat_int(0); l + 1];
    for k in 0..=l {
        let c = Rat::from_integer(binomial(l, k));
        coeffs[l - k] = c * table.number(k);
    }
    RatPoly::from_coeffs(coeffs)
}

/// The degree-k polynomial `C(x + shift, k) = prod_{j<k} (x + shift - j) / k!`.
pub fn binomial_polynomial(shift: &Rat, k: usize) -> RatPoly {
    let mut acc = RatPoly::one();
    for j in 0..k {
        let lin = RatPoly::from_coeffs(vec![shift - Rat::from_integer(BigInt::from(j)), rat_int(1)]);
        acc = acc.mul(&lin);
    }
    acc.scale(&Rat::from_integer(factorial(k)).recip())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn low_bernoulli_polynomials() {
        assert_eq!(bernoulli_polynomial(0), RatPoly::one());
        assert_eq!(bernoulli_polynomial(1), RatPoly::from_coeffs(vec![rat(-1, 2), rat_int(1)]));
        assert_eq!(
            bernoulli_polynomial(2),
            RatPoly::from_coeffs(vec![rat(1, 6), rat_int(-1), rat_int(1)])
        );
    }

    #[test]
    fn difference_identity() {
        // B_l(x+1) - B_l(x) = l*x^{l-1}
        for l in 1..=20usize {
            let b = bernoulli_polynomial(l);
            let shifted = shift_by_one(&b);
            let diff = shifted.sub(&b);
            assert_eq!(
                diff,
                RatPoly::monomial(rat_int(l as i64), l - 1),
                "difference identity fails at l={l}"
            );
        }
    }

    #[test]
    fn half_value_identity() {
        // B_l(1/2) = (2^{1-l} - 1) B_l(0)
        for l in 1..=20usize {
            let b = bernoulli_polynomial(l);
            let lhs = b.eval(&rat(1, 2));
            let factor = rat(2, 1).pow(1 - l as i32) - rat_int(1);
            assert_eq!(lhs, factor * b.eval(&rat_int(0)), "half-value fails at l={l}");
        }
    }

    #[test]
    fn binomial_polynomial_examples() {
        assert_eq!(binomial_polynomial(&rat_int(0), 0), RatPoly::one());
        assert_eq!(binomial_polynomial(&rat_int(0), 1), RatPoly::x());
        // C(x + 1/2, 2) = x^2/2 - 1/8
        assert_eq!(
            binomial_polynomial(&rat(1, 2), 2),
            RatPoly::from_coeffs(vec![rat(-1, 8), rat_int(0), rat(1, 2)])
        );
        assert_eq!(binomial_polynomial(&rat_int(3), 2).degree(), Some(2));
    }

    #[test]
    fn binomial_polynomial_integer_agreement() {
        // with integer shift m, evaluation at integer x >= k - m matches C(x+m, k)
        for m in 0..4i64 {
            for k in 0..7usize {
                let poly = binomial_polynomial(&rat_int(m), k);
                for x in (k as i64 - m).max(0)..8 {
                    let expect = Rat::from_integer(binomial((x + m) as usize, k));
                    assert_eq!(poly.eval(&rat_int(x)), expect, "m={m} k={k} x={x}");
                }
            }
        }
    }

    fn shift_by_one(p: &RatPoly) -> RatPoly {
        // p(x+1) by Horner in (x+1)
        let one_plus_x = RatPoly::from_coeffs(vec![rat_int(1), rat_int(1)]);
        let mut acc = RatPoly::zero();
        for c in p.coeffs().iter().rev() {
            acc = acc.mul(&one_plus_x).add(&RatPoly::constant(c.clone()));
        }
        acc
    }
}
