//! Polynomials in graded characteristic-class variables, truncated by
//! total weight.
//!
//! The variables are `p_1, p_2, ...` of weight `4k` (Pontryagin) or
//! `c_1, c_2, ...` of weight `2k` (Chern); a value stores the weight of
//! the first variable (`4` or `2`), its weight bound and a canonical term
//! map keyed by exponent multi-indices in lexicographic order. Every
//! stored term has nonzero coefficient and weight at most the bound;
//! multiplication truncates at the bound.

use std::collections::BTreeMap;

use crate::rational::{rat_to_string, Rat};
use crate::ring::CoeffRing;

/// Exponent multi-index: `exps[i]` is the exponent of the variable of
/// index `i+1`. Trailing zeros are stripped.
pub type MultiIndex = Vec<u32>;

fn normalize_index(mut idx: MultiIndex) -> MultiIndex {
    while idx.last() == Some(&0) {
        idx.pop();
    }
    idx
}

/// Weighted polynomial over the coefficient ring `C`.
#[derive(Clone, PartialEq, Debug)]
pub struct WeightedPolynomial<C: CoeffRing> {
    /// Weight of the first variable: 4 for `p`-variables, 2 for `c`-variables.
    base_weight: usize,
    /// Total-weight truncation bound.
    bound: usize,
    terms: BTreeMap<MultiIndex, C>,
}

impl<C: CoeffRing> WeightedPolynomial<C> {
    pub fn zero(base_weight: usize, bound: usize) -> Self {
        WeightedPolynomial { base_weight, bound, terms: BTreeMap::new() }
    }

    pub fn one(base_weight: usize, bound: usize) -> Self {
        let mut p = Self::zero(base_weight, bound);
        p.terms.insert(Vec::new(), C::one());
        p
    }

    /// The variable `p_k` (or `c_k`), weight `base_weight * k`.
    pub fn variable(base_weight: usize, bound: usize, k: usize) -> Self {
        assert!(k >= 1, "variables are indexed from 1");
        let mut p = Self::zero(base_weight, bound);
        if base_weight * k <= bound {
            let mut idx = vec![0u32; k];
            idx[k - 1] = 1;
            p.terms.insert(idx, C::one());
        }
        p
    }

    pub fn base_weight(&self) -> usize {
        self.base_weight
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &C)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, idx: &[u32]) -> C {
        let key = normalize_index(idx.to_vec());
        self.terms.get(&key).cloned().unwrap_or_else(C::zero)
    }

    /// Total weight of a multi-index under this grading.
    pub fn index_weight(&self, idx: &[u32]) -> usize {
        idx.iter()
            .enumerate()
            .map(|(i, &e)| self.base_weight * (i + 1) * e as usize)
            .sum()
    }

    fn insert(&mut self, idx: MultiIndex, c: C) {
        if c.is_zero() {
            return;
        }
        let idx = normalize_index(idx);
        if self.index_weight(&idx) > self.bound {
            return;
        }
        let entry = self.terms.entry(idx);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&c);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Build from raw terms, dropping zero coefficients and overweight terms.
    pub fn from_terms(
        base_weight: usize,
        bound: usize,
        terms: impl IntoIterator<Item = (MultiIndex, C)>,
    ) -> Self {
        let mut p = Self::zero(base_weight, bound);
        for (idx, c) in terms {
            p.insert(idx, c);
        }
        p
    }

    fn check_compatible(&self, other: &Self) {
        assert_eq!(self.base_weight, other.base_weight, "mixed variable gradings");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let bound = self.bound.min(other.bound);
        let mut out = Self::zero(self.base_weight, bound);
        for (idx, c) in self.terms.iter().chain(other.terms.iter()) {
            out.insert(idx.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        WeightedPolynomial {
            base_weight: self.base_weight,
            bound: self.bound,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, r: &C) -> Self {
        let mut out = Self::zero(self.base_weight, self.bound);
        for (idx, c) in &self.terms {
            out.insert(idx.clone(), c.mul(r));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_compatible(other);
        let bound = self.bound.min(other.bound);
        let mut out = Self::zero(self.base_weight, bound);
        for (ia, ca) in &self.terms {
            let wa = self.index_weight(ia);
            if wa > bound {
                continue;
            }
            for (ib, cb) in &other.terms {
                if wa + other.index_weight(ib) > bound {
                    continue;
                }
                let mut idx = vec![0u32; ia.len().max(ib.len())];
                for (i, &e) in ia.iter().enumerate() {
                    idx[i] += e;
                }
                for (i, &e) in ib.iter().enumerate() {
                    idx[i] += e;
                }
                out.insert(idx, ca.mul(cb));
            }
        }
        out
    }

    pub fn pow(&self, n: usize) -> Self {
        let mut acc = Self::one(self.base_weight, self.bound);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// The homogeneous part of the given weight.
    pub fn homogeneous_part(&self, weight: usize) -> Self {
        let mut out = Self::zero(self.base_weight, self.bound);
        for (idx, c) in &self.terms {
            if self.index_weight(idx) == weight {
                out.insert(idx.clone(), c.clone());
            }
        }
        out
    }

    /// Largest weight with a nonzero term.
    pub fn top_weight(&self) -> usize {
        self.terms.keys().map(|i| self.index_weight(i)).max().unwrap_or(0)
    }

    /// log(self) for self = 1 + (positive-weight terms).
    pub fn log(&self) -> Self {
        assert!(
            self.coefficient(&[]).is_one(),
            "log of a weighted polynomial needs constant term 1"
        );
        let mut q = self.clone();
        q.terms.remove(&Vec::new());
        let steps = self.bound / self.base_weight;
        let mut acc = Self::zero(self.base_weight, self.bound);
        let mut power = Self::one(self.base_weight, self.bound);
        for j in 1..=steps {
            power = power.mul(&q);
            if power.is_zero() {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            acc = acc.add(&power.scale(&C::from_rat(Rat::new(sign.into(), (j as i64).into()))));
        }
        acc
    }

    /// exp(self) for self with zero constant term.
    pub fn exp(&self) -> Self {
        assert!(
            self.coefficient(&[]).is_zero(),
            "exp of a weighted polynomial needs constant term 0"
        );
        let steps = self.bound / self.base_weight;
        let mut acc = Self::one(self.base_weight, self.bound);
        let mut power = Self::one(self.base_weight, self.bound);
        let mut fact = Rat::one();
        for j in 1..=steps {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            fact *= Rat::new(1.into(), (j as i64).into());
            acc = acc.add(&power.scale(&C::from_rat(fact.clone())));
        }
        acc
    }

    /// Applies the grading operator that scales the homogeneous part of
    /// weight `base_weight * k` by `(-1)^{k-1} k f_k`; `log_coeffs[k-1]`
    /// holds `f_k`. Parts with no matching `f_k` are annihilated.
    pub fn lambda_scale(&self, log_coeffs: &[C]) -> Self {
        let mut out = Self::zero(self.base_weight, self.bound);
        for (idx, c) in &self.terms {
            let w = self.index_weight(idx);
            if w == 0 {
                continue;
            }
            debug_assert_eq!(w % self.base_weight, 0);
            let k = w / self.base_weight;
            if k > log_coeffs.len() {
                continue;
            }
            let sign = if k % 2 == 1 { 1i64 } else { -1i64 };
            let factor = log_coeffs[k - 1].scale(&Rat::new((sign * k as i64).into(), 1.into()));
            out.insert(idx.clone(), c.mul(&factor));
        }
        out
    }

    /// Extract per-term coefficient data into another ring.
    pub fn map_coeffs<D: CoeffRing>(&self, f: impl Fn(&C) -> D) -> WeightedPolynomial<D> {
        let mut out = WeightedPolynomial::zero(self.base_weight, self.bound);
        for (idx, c) in &self.terms {
            out.insert(idx.clone(), f(c));
        }
        out
    }
}

impl WeightedPolynomial<Rat> {
    /// Serialize to the documented JSON shape: a list of
    /// `{exponents, coeff}` objects in lexicographic index order.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(idx, c)| {
                serde_json::json!({
                    "exponents": idx,
                    "coeff": rat_to_string(c),
                })
            })
            .collect();
        serde_json::Value::Array(items)
    }

    /// Human-readable rendering with `p`- or `c`-variables.
    pub fn to_string_with_vars(&self, var: &str) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (idx, c) in &self.terms {
            let mut mono = String::new();
            for (i, &e) in idx.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                mono.push_str(&format!("{var}{}", i + 1));
                if e > 1 {
                    mono.push_str(&format!("^{e}"));
                }
            }
            let cs = rat_to_string(c);
            let term = if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono
            } else if cs == "-1" {
                format!("-{mono}")
            } else {
                format!("{cs}*{mono}")
            };
            parts.push(term);
        }
        let mut out = String::new();
        for (i, t) in parts.iter().enumerate() {
            if i == 0 {
                out.push_str(t);
            } else if let Some(rest) = t.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
        out
    }
}
