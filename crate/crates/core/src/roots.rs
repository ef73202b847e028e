//! Chern-root verification contexts.
//!
//! A context replaces a real rank-`2m` bundle by formal line-bundle roots
//! `±x_1, ..., ±x_m` (or a complex rank-`m` bundle by roots `x_1..x_m`).
//! Expressions live in a truncated multivariate polynomial ring; `p_k` is
//! identified with the k-th elementary symmetric polynomial in the `x_j^2`
//! and `c_k` with the one in the `x_j`. The context is a verification
//! device only: the weighted `p`-variable ring is the storage format.

use std::collections::BTreeMap;

use crate::rational::{factorial, Rat};
use crate::ring::CoeffRing;
use crate::weighted::WeightedPolynomial;

/// Multivariate polynomial over the rationals, truncated by total degree.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    degree_bound: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize, degree_bound: usize) -> Self {
        MultiPoly { nvars, degree_bound, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize, degree_bound: usize) -> Self {
        let mut p = Self::zero(nvars, degree_bound);
        p.terms.insert(vec![0; nvars], Rat::one());
        p
    }

    pub fn constant(nvars: usize, degree_bound: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars, degree_bound);
        p.insert(vec![0; nvars], c);
        p
    }

    pub fn variable(nvars: usize, degree_bound: usize, j: usize) -> Self {
        assert!(j < nvars);
        let mut p = Self::zero(nvars, degree_bound);
        let mut exps = vec![0; nvars];
        exps[j] = 1;
        p.insert(exps, Rat::one());
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn total_degree(exps: &[u32]) -> usize {
        exps.iter().map(|&e| e as usize).sum()
    }

    fn insert(&mut self, exps: Vec<u32>, c: Rat) {
        if CoeffRing::is_zero(&c) || Self::total_degree(&exps) > self.degree_bound {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if CoeffRing::is_zero(&sum) {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Self::zero(self.nvars, self.degree_bound.min(other.degree_bound));
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            degree_bound: self.degree_bound,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, r: &Rat) -> Self {
        let mut out = Self::zero(self.nvars, self.degree_bound);
        for (e, c) in &self.terms {
            out.insert(e.clone(), c * r);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let bound = self.degree_bound.min(other.degree_bound);
        let mut out = Self::zero(self.nvars, bound);
        for (ea, ca) in &self.terms {
            let da = Self::total_degree(ea);
            if da > bound {
                continue;
            }
            for (eb, cb) in &other.terms {
                if da + Self::total_degree(eb) > bound {
                    continue;
                }
                let exps = ea.iter().zip(eb.iter()).map(|(a, b)| a + b).collect();
                out.insert(exps, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one(self.nvars, self.degree_bound);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// True iff every exponent of every term is even.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x % 2 == 0))
    }

    /// True iff invariant under every transposition of adjacent variables.
    pub fn is_symmetric(&self) -> bool {
        for j in 0..self.nvars.saturating_sub(1) {
            let mut swapped = Self::zero(self.nvars, self.degree_bound);
            for (e, c) in &self.terms {
                let mut e2 = e.clone();
                e2.swap(j, j + 1);
                swapped.insert(e2, c.clone());
            }
            if swapped != *self {
                return false;
            }
        }
        true
    }

    /// Substitute x_j -> x_j^2 in reverse: requires an even polynomial,
    /// halves all exponents.
    fn halve_exponents(&self) -> Self {
        assert!(self.is_even(), "halve_exponents needs an even polynomial");
        let mut out = Self::zero(self.nvars, self.degree_bound);
        for (e, c) in &self.terms {
            out.insert(e.iter().map(|&x| x / 2).collect(), c.clone());
        }
        out
    }

    /// Elementary symmetric polynomial e_k of the given values.
    pub fn elementary_symmetric(values: &[MultiPoly], k: usize) -> Self {
        assert!(!values.is_empty());
        let nvars = values[0].nvars;
        let bound = values[0].degree_bound;
        let mut coeffs = vec![Self::zero(nvars, bound); k + 1];
        coeffs[0] = Self::one(nvars, bound);
        for v in values {
            for j in (1..=k).rev() {
                let bumped = coeffs[j - 1].mul(v);
                coeffs[j] = coeffs[j].add(&bumped);
            }
        }
        coeffs[k].clone()
    }

    /// Complete homogeneous symmetric polynomial h_k of the given values.
    pub fn complete_homogeneous(values: &[MultiPoly], k: usize) -> Self {
        assert!(!values.is_empty());
        let nvars = values[0].nvars;
        let bound = values[0].degree_bound;
        // prod (1 - tau v)^{-1} truncated at tau^k
        let mut coeffs = vec![Self::zero(nvars, bound); k + 1];
        coeffs[0] = Self::one(nvars, bound);
        for v in values {
            for j in 1..=k {
                // new[j] = sum_{i<=j} old[i] v^{j-i}; incremental form
                // new[j] = old[j] + new[j-1] * v keeps it linear
                let bumped = coeffs[j - 1].mul(v);
                coeffs[j] = coeffs[j].add(&bumped);
            }
        }
        coeffs[k].clone()
    }
}

/// Formal roots `±x_1..±x_m` of a real rank-2m bundle, with all
/// computations truncated at total form-weight `weight_bound` (each `x_j`
/// has form-weight 2).
#[derive(Clone, Debug)]
pub struct ChernRootContext {
    m: usize,
    weight_bound: usize,
}

impl ChernRootContext {
    pub fn new(m: usize, weight_bound: usize) -> Self {
        assert!(m >= 1);
        ChernRootContext { m, weight_bound }
    }

    pub fn root_pairs(&self) -> usize {
        self.m
    }

    pub fn weight_bound(&self) -> usize {
        self.weight_bound
    }

    fn degree_bound(&self) -> usize {
        self.weight_bound / 2
    }

    pub fn variable(&self, j: usize) -> MultiPoly {
        MultiPoly::variable(self.m, self.degree_bound(), j)
    }

    /// exp(sign * x_j) truncated.
    pub fn exp_root(&self, j: usize, sign: i64) -> MultiPoly {
        let bound = self.degree_bound();
        let mut acc = MultiPoly::zero(self.m, bound);
        let x = self.variable(j);
        let mut power = MultiPoly::one(self.m, bound);
        for g in 0..=bound {
            let c = Rat::new(sign.pow(g as u32).into(), factorial(g));
            acc = acc.add(&power.scale(&c));
            if g < bound {
                power = power.mul(&x);
            }
        }
        acc
    }

    fn all_exponentials(&self) -> Vec<MultiPoly> {
        let mut out = Vec::with_capacity(2 * self.m);
        for j in 0..self.m {
            out.push(self.exp_root(j, 1));
            out.push(self.exp_root(j, -1));
        }
        out
    }

    /// ch of the d-th exterior power: the tau^d coefficient of
    /// `prod_j (1 + tau e^{x_j})(1 + tau e^{-x_j})`.
    pub fn ch_exterior(&self, d: usize) -> MultiPoly {
        MultiPoly::elementary_symmetric(&self.all_exponentials(), d)
    }

    /// ch of the d-th symmetric power: the tau^d coefficient of
    /// `prod_j (1 - tau e^{x_j})^{-1} (1 - tau e^{-x_j})^{-1}`.
    pub fn ch_symmetric(&self, d: usize) -> MultiPoly {
        MultiPoly::complete_homogeneous(&self.all_exponentials(), d)
    }

    /// The Pontryagin variable `p_k = e_k(x_1^2, ..., x_m^2)`.
    pub fn pontryagin(&self, k: usize) -> MultiPoly {
        let squares: Vec<MultiPoly> =
            (0..self.m).map(|j| self.variable(j).pow(2)).collect();
        MultiPoly::elementary_symmetric(&squares, k)
    }

    /// Evaluate a weighted polynomial in this context: `p_k -> e_k(x^2)`
    /// for base weight 4, `c_k -> e_k(x)` for base weight 2.
    pub fn eval_weighted(&self, w: &WeightedPolynomial<Rat>) -> MultiPoly {
        let bound = self.degree_bound();
        let basis: Vec<MultiPoly> = match w.base_weight() {
            4 => (0..self.m).map(|j| self.variable(j).pow(2)).collect(),
            2 => (0..self.m).map(|j| self.variable(j)).collect(),
            other => panic!("unsupported base weight {other}"),
        };
        // cache e_k(basis)
        let max_k: usize = w
            .terms()
            .map(|(idx, _)| idx.len())
            .max()
            .unwrap_or(0);
        let elem: Vec<MultiPoly> = (0..=max_k)
            .map(|k| MultiPoly::elementary_symmetric(&basis, k))
            .collect();
        let mut acc = MultiPoly::zero(self.m, bound);
        for (idx, c) in w.terms() {
            let mut term = MultiPoly::constant(self.m, bound, c.clone());
            for (i, &e) in idx.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&elem[i + 1]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }

    /// Express a symmetric even polynomial in the roots as a weighted
    /// polynomial in `p_1..p_m` (the classical leading-term reduction
    /// against elementary symmetric polynomials).
    pub fn reduce_to_pontryagin(&self, poly: &MultiPoly) -> WeightedPolynomial<Rat> {
        assert!(poly.is_even(), "not even under x_j -> -x_j");
        assert!(poly.is_symmetric(), "not symmetric in the roots");
        let in_squares = poly.halve_exponents();
        self.reduce_symmetric(&in_squares, 4)
    }

    /// Express a symmetric polynomial in complex roots as a weighted
    /// polynomial in `c_1..c_m`.
    pub fn reduce_to_chern(&self, poly: &MultiPoly) -> WeightedPolynomial<Rat> {
        assert!(poly.is_symmetric(), "not symmetric in the roots");
        self.reduce_symmetric(poly, 2)
    }

    fn reduce_symmetric(&self, poly: &MultiPoly, base_weight: usize) -> WeightedPolynomial<Rat> {
        let nv = poly.nvars;
        let bound = poly.degree_bound;
        let vars: Vec<MultiPoly> = (0..nv).map(|j| MultiPoly::variable(nv, bound, j)).collect();
        let elem: Vec<MultiPoly> =
            (0..=nv).map(|k| MultiPoly::elementary_symmetric(&vars, k)).collect();
        let mut rest = poly.clone();
        let mut out = WeightedPolynomial::zero(base_weight, self.weight_bound);
        while let Some((lead_exps, lead_coeff)) = rest.terms.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            debug_assert!(
                lead_exps.windows(2).all(|w| w[0] >= w[1]),
                "leading exponent of a symmetric polynomial must be weakly decreasing"
            );
            // e-monomial with the same leading term
            let mut e_exps = vec![0u32; nv];
            for i in 0..nv {
                let next = if i + 1 < nv { lead_exps[i + 1] } else { 0 };
                e_exps[i] = lead_exps[i] - next;
            }
            let mut expansion = MultiPoly::constant(nv, bound, lead_coeff.clone());
            for (i, &e) in e_exps.iter().enumerate() {
                for _ in 0..e {
                    expansion = expansion.mul(&elem[i + 1]);
                }
            }
            rest = rest.sub(&expansion);
            out = out.add(&WeightedPolynomial::from_terms(
                base_weight,
                self.weight_bound,
                [(e_exps.iter().map(|&e| e).collect::<Vec<u32>>(), lead_coeff)],
            ));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn elementary_and_complete() {
        let ctx = ChernRootContext::new(2, 8);
        let x0 = ctx.variable(0);
        let x1 = ctx.variable(1);
        let e1 = MultiPoly::elementary_symmetric(&[x0.clone(), x1.clone()], 1);
        assert_eq!(e1, x0.add(&x1));
        let e2 = MultiPoly::elementary_symmetric(&[x0.clone(), x1.clone()], 2);
        assert_eq!(e2, x0.mul(&x1));
        // h_2(x0, x1) = x0^2 + x0 x1 + x1^2
        let h2 = MultiPoly::complete_homogeneous(&[x0.clone(), x1.clone()], 2);
        let expect = x0.pow(2).add(&x1.pow(2)).add(&x0.mul(&x1));
        assert_eq!(h2, expect);
    }

    #[test]
    fn chern_character_of_plane_bundle() {
        // m=1: ch Lambda^1 = e^x + e^{-x} = 2 + x^2 + x^4/12 (weight 8)
        let ctx = ChernRootContext::new(1, 8);
        let ch = ctx.ch_exterior(1);
        let x = ctx.variable(0);
        let expect = MultiPoly::constant(1, 4, rat_int(2))
            .add(&x.pow(2))
            .add(&x.pow(4).scale(&rat(1, 12)));
        assert_eq!(ch, expect);
    }

    #[test]
    fn reduction_round_trip() {
        let ctx = ChernRootContext::new(2, 8);
        // reduce p1^2 - 3 p2 expressed in roots
        let p1 = ctx.pontryagin(1);
        let p2 = ctx.pontryagin(2);
        let expr = p1.pow(2).sub(&p2.scale(&rat_int(3)));
        let reduced = ctx.reduce_to_pontryagin(&expr);
        assert_eq!(reduced.coefficient(&[2]), rat_int(1));
        assert_eq!(reduced.coefficient(&[0, 1]), rat_int(-3));
        // and back
        assert_eq!(ctx.eval_weighted(&reduced), expr);
    }

    #[test]
    fn power_sums_reduce() {
        // sum x_j^4 = p1^2 - 2 p2 for m = 3
        let ctx = ChernRootContext::new(3, 12);
        let mut power_sum = MultiPoly::zero(3, 6);
        for j in 0..3 {
            power_sum = power_sum.add(&ctx.variable(j).pow(4));
        }
        let reduced = ctx.reduce_to_pontryagin(&power_sum);
        assert_eq!(reduced.coefficient(&[2]), rat_int(1));
        assert_eq!(reduced.coefficient(&[0, 1]), rat_int(-2));
        assert_eq!(reduced.coefficient(&[1]), rat_int(0));
    }
}
