//! Free graded-commutative algebra over the Gaussian rationals with a
//! time parameter.
//!
//! Elements are linear combinations of normal-ordered generator monomials
//! with coefficients that are polynomials in `t` over Q(i). Products are
//! normalized with the Koszul sign rule (`ab = (-1)^{|a||b|} ba`); a
//! repeated odd generator annihilates a term. Every element carries a
//! total-degree bound and a `t`-degree bound; products truncate at both.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gaussian::Gaussian;
use crate::poly::Polynomial;
use crate::rational::{rat_int, Rat};
use crate::ring::CoeffRing;

/// Coefficient polynomials in the time parameter.
pub type TPoly = Polynomial<Gaussian>;

/// Named generators with fixed positive degrees.
#[derive(Debug, PartialEq, Eq)]
pub struct GeneratorTable {
    names: Vec<String>,
    degrees: Vec<usize>,
}

impl GeneratorTable {
    pub fn new(generators: &[(&str, usize)]) -> Result<Arc<Self>> {
        let mut names = Vec::with_capacity(generators.len());
        let mut degrees = Vec::with_capacity(generators.len());
        for &(name, degree) in generators {
            if degree == 0 {
                return Err(Error::DegreeParity("generator degrees must be positive"));
            }
            if names.iter().any(|n| n == name) {
                return Err(Error::Parse(format!("duplicate generator `{name}`")));
            }
            names.push(name.to_string());
            degrees.push(degree);
        }
        Ok(Arc::new(GeneratorTable { names, degrees }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.degrees[i]
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.degrees[i] % 2 == 1
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn monomial_degree(&self, exps: &[u32]) -> usize {
        exps.iter().enumerate().map(|(i, &e)| self.degrees[i] * e as usize).sum()
    }
}

/// Element of the free graded-commutative algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedElement {
    table: Arc<GeneratorTable>,
    degree_bound: usize,
    t_bound: usize,
    terms: BTreeMap<Vec<u32>, TPoly>,
}

impl GradedElement {
    pub fn zero(table: &Arc<GeneratorTable>, degree_bound: usize, t_bound: usize) -> Self {
        GradedElement {
            table: Arc::clone(table),
            degree_bound,
            t_bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(table: &Arc<GeneratorTable>, degree_bound: usize, t_bound: usize) -> Self {
        Self::scalar(table, degree_bound, t_bound, TPoly::one())
    }

    pub fn scalar(
        table: &Arc<GeneratorTable>,
        degree_bound: usize,
        t_bound: usize,
        coeff: TPoly,
    ) -> Self {
        let mut out = Self::zero(table, degree_bound, t_bound);
        out.insert(vec![0; table.len()], coeff);
        out
    }

    /// The generator with the given index, as an element.
    pub fn generator(
        table: &Arc<GeneratorTable>,
        degree_bound: usize,
        t_bound: usize,
        index: usize,
    ) -> Self {
        let mut exps = vec![0u32; table.len()];
        exps[index] = 1;
        let mut out = Self::zero(table, degree_bound, t_bound);
        out.insert(exps, TPoly::one());
        out
    }

    pub fn table(&self) -> &Arc<GeneratorTable> {
        &self.table
    }

    pub fn degree_bound(&self) -> usize {
        self.degree_bound
    }

    pub fn t_bound(&self) -> usize {
        self.t_bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &TPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> TPoly {
        self.terms.get(exps).cloned().unwrap_or_else(TPoly::zero)
    }

    fn insert(&mut self, exps: Vec<u32>, coeff: TPoly) {
        let coeff = coeff.truncated(self.t_bound);
        if coeff.is_zero() {
            return;
        }
        if self.table.monomial_degree(&exps) > self.degree_bound {
            return;
        }
        // repeated odd generators vanish
        if exps.iter().enumerate().any(|(i, &e)| e >= 2 && self.table.is_odd(i)) {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_table(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.table, &other.table) || self.table == other.table {
            Ok(())
        } else {
            Err(Error::TableMismatch)
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = Self::zero(
            &self.table,
            self.degree_bound.min(other.degree_bound),
            self.t_bound.min(other.t_bound),
        );
        for (e, c) in self.terms.iter().chain(other.terms.iter()) {
            out.insert(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GradedElement {
            table: Arc::clone(&self.table),
            degree_bound: self.degree_bound,
            t_bound: self.t_bound,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, c: &TPoly) -> Self {
        let mut out = Self::zero(&self.table, self.degree_bound, self.t_bound);
        for (e, coeff) in &self.terms {
            out.insert(e.clone(), coeff.mul(c));
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Self {
        self.scale(&TPoly::from_rat(r.clone()))
    }

    /// Multiply every coefficient by `t^k`.
    pub fn mul_t_power(&self, k: usize) -> Self {
        let mut out = Self::zero(&self.table, self.degree_bound, self.t_bound);
        for (e, coeff) in &self.terms {
            out.insert(e.clone(), coeff.shift_up(k));
        }
        out
    }

    /// Koszul sign of merging the normal-ordered monomials `a` and `b`.
    fn koszul_sign(table: &GeneratorTable, a: &[u32], b: &[u32]) -> i32 {
        // each odd occurrence in b of generator i crosses the odd
        // occurrences in a of generators with larger index
        let mut inversions: u64 = 0;
        let mut odd_tail: u64 = 0; // odd occurrences of a with index > i
        for i in (0..a.len()).rev() {
            if table.is_odd(i) {
                inversions += b[i] as u64 * odd_tail;
                odd_tail += a[i] as u64;
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Graded product.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_table(other)?;
        let mut out = Self::zero(
            &self.table,
            self.degree_bound.min(other.degree_bound),
            self.t_bound.min(other.t_bound),
        );
        for (ea, ca) in &self.terms {
            let da = self.table.monomial_degree(ea);
            if da > out.degree_bound {
                continue;
            }
            for (eb, cb) in &other.terms {
                if da + self.table.monomial_degree(eb) > out.degree_bound {
                    continue;
                }
                if ea
                    .iter()
                    .zip(eb.iter())
                    .enumerate()
                    .any(|(i, (&x, &y))| self.table.is_odd(i) && x + y >= 2)
                {
                    continue;
                }
                let sign = Self::koszul_sign(&self.table, ea, eb);
                let exps: Vec<u32> = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                let mut coeff = ca.mul(cb);
                if sign < 0 {
                    coeff = coeff.neg();
                }
                out.insert(exps, coeff);
            }
        }
        Ok(out)
    }

    pub fn wedge_pow(&self, n: usize) -> Result<Self> {
        let mut acc = Self::one(&self.table, self.degree_bound, self.t_bound);
        for _ in 0..n {
            acc = acc.wedge(self)?;
        }
        Ok(acc)
    }

    /// The degree-0 component (a polynomial in `t`).
    pub fn degree_zero_part(&self) -> TPoly {
        self.coefficient(&vec![0; self.table.len()])
    }

    /// True iff every monomial has odd total degree.
    pub fn is_odd_element(&self) -> bool {
        self.terms.keys().all(|e| self.table.monomial_degree(e) % 2 == 1)
    }

    /// True iff every monomial has positive total degree divisible by 4.
    pub fn is_div4_positive(&self) -> bool {
        self.terms.keys().all(|e| {
            let d = self.table.monomial_degree(e);
            d > 0 && d % 4 == 0
        })
    }

    /// `(1 + a)^{-1} = sum_k (-a)^k` for nilpotent `a` (zero degree-0 part).
    pub fn geometric_inverse(&self) -> Result<Self> {
        if !self.degree_zero_part().is_zero() {
            return Err(Error::DegreeParity(
                "geometric inverse needs a zero degree-0 part",
            ));
        }
        let mut acc = Self::one(&self.table, self.degree_bound, self.t_bound);
        let neg = self.neg();
        let mut power = Self::one(&self.table, self.degree_bound, self.t_bound);
        for _ in 0..=self.degree_bound {
            power = power.wedge(&neg)?;
            if power.is_zero() {
                break;
            }
            acc = acc.add(&power)?;
        }
        Ok(acc)
    }

    /// exp of a nilpotent element concentrated in even degrees.
    pub fn exponential(&self) -> Result<Self> {
        if !self.degree_zero_part().is_zero() {
            return Err(Error::DegreeParity("exponential needs a zero degree-0 part"));
        }
        if self.terms.keys().any(|e| self.table.monomial_degree(e) % 2 != 0) {
            return Err(Error::DegreeParity("exponential needs an even element"));
        }
        let mut acc = Self::one(&self.table, self.degree_bound, self.t_bound);
        let mut power = Self::one(&self.table, self.degree_bound, self.t_bound);
        let mut fact = rat_int(1);
        for j in 1..=self.degree_bound {
            power = power.wedge(self)?;
            if power.is_zero() {
                break;
            }
            fact *= Rat::new(1.into(), (j as i64).into());
            acc = acc.add(&power.scale_rat(&fact))?;
        }
        Ok(acc)
    }

    /// The operator multiplying a homogeneous odd form of degree `r` by
    /// `i^{r+1}`. Errors on even-degree terms.
    pub fn i_n_plus_1(&self) -> Result<Self> {
        let mut out = Self::zero(&self.table, self.degree_bound, self.t_bound);
        for (e, c) in &self.terms {
            let r = self.table.monomial_degree(e);
            if r % 2 == 0 {
                return Err(Error::DegreeParity("i^{N+1} applies to odd elements only"));
            }
            let factor = TPoly::constant(Gaussian::i_pow(r + 1));
            out.insert(e.clone(), c.mul(&factor));
        }
        Ok(out)
    }

    /// d/dt applied to every coefficient.
    pub fn ddt(&self) -> Self {
        let mut out = Self::zero(&self.table, self.degree_bound, self.t_bound);
        for (e, c) in &self.terms {
            out.insert(e.clone(), c.derivative());
        }
        out
    }

    /// Drop coefficients of t-degree above `bound`.
    pub fn truncate_t(&self, bound: usize) -> Self {
        let mut out = Self::zero(&self.table, self.degree_bound, bound.min(self.t_bound));
        for (e, c) in &self.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    /// Integrate every coefficient over t in [0, 1]; the result has
    /// constant coefficients.
    pub fn integrate_t_unit(&self) -> Self {
        let mut out = Self::zero(&self.table, self.degree_bound, self.t_bound);
        for (e, c) in &self.terms {
            out.insert(e.clone(), TPoly::constant(c.integral_unit_interval()));
        }
        out
    }

    /// Serialize to the documented JSON shape.
    pub fn to_json(&self) -> serde_json::Value {
        let items: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(exps, coeff)| {
                let mut monomial = Vec::new();
                for (i, &e) in exps.iter().enumerate() {
                    for _ in 0..e {
                        monomial.push(self.table.name(i).to_string());
                    }
                }
                let coeff_t_poly: Vec<String> = (0..=coeff.degree().unwrap_or(0))
                    .map(|j| coeff.coeff(j).to_canonical_string())
                    .collect();
                serde_json::json!({
                    "monomial": monomial,
                    "coeff_t_poly": coeff_t_poly,
                })
            })
            .collect();
        serde_json::Value::Array(items)
    }
}

/// The closed-form solution triple of the hypersurface ODE system.
#[derive(Clone, Debug)]
pub struct EtfSolution {
    pub xi_t: GradedElement,
    pub psi_t: GradedElement,
    pub big_psi_t: GradedElement,
}

/// Closed-form solution with initial value `(xi, psi, Psi)`:
///
/// ```text
/// xi^t  = xi (1 + t^2 psi)^{-1} (1 + t^2 Psi)^{-1}
/// psi^t = psi (1 + t^2 psi)^{-1}
///         + t^2 xi (i^{N+1} xi) (1 + t^2 psi)^{-2} (1 + t^2 Psi)^{-1}
/// Psi^t = Psi (1 + t^2 Psi)^{-1}
///         - t^2 xi (i^{N+1} xi) (1 + t^2 psi)^{-1} (1 + t^2 Psi)^{-2}
/// ```
pub fn etf_solution(
    xi: &GradedElement,
    psi: &GradedElement,
    big_psi: &GradedElement,
) -> Result<EtfSolution> {
    if !xi.is_odd_element() {
        return Err(Error::DegreeParity("xi must be odd"));
    }
    if !psi.is_div4_positive() || !big_psi.is_div4_positive() {
        return Err(Error::DegreeParity(
            "psi and Psi must live in positive degrees divisible by 4",
        ));
    }
    let inv_psi = psi.mul_t_power(2).geometric_inverse()?;
    let inv_big = big_psi.mul_t_power(2).geometric_inverse()?;
    let inv_psi2 = inv_psi.wedge(&inv_psi)?;
    let inv_big2 = inv_big.wedge(&inv_big)?;
    let square = xi.wedge(&xi.i_n_plus_1()?)?.mul_t_power(2);
    let xi_t = xi.wedge(&inv_psi)?.wedge(&inv_big)?;
    let psi_t = psi
        .wedge(&inv_psi)?
        .add(&square.wedge(&inv_psi2)?.wedge(&inv_big)?)?;
    let big_psi_t = big_psi
        .wedge(&inv_big)?
        .sub(&square.wedge(&inv_psi)?.wedge(&inv_big2)?)?;
    Ok(EtfSolution { xi_t, psi_t, big_psi_t })
}

/// Residuals of the ODE system on the closed-form solution:
///
/// ```text
/// d/dt xi^t  + 2t xi^t (psi^t + Psi^t)
/// d/dt psi^t + 2t psi^t psi^t - 2t xi^t (i^{N+1} xi^t)
/// d/dt Psi^t + 2t Psi^t Psi^t + 2t xi^t (i^{N+1} xi^t)
/// ```
///
/// truncated to t-degree `t_bound - 1` (the derivative of a series
/// truncated at `t_bound` is exact only below it). All three vanish
/// identically; a nonzero residual is returned as a witness, not an error.
pub fn etf_ode_residual(
    xi: &GradedElement,
    psi: &GradedElement,
    big_psi: &GradedElement,
) -> Result<(GradedElement, GradedElement, GradedElement)> {
    let sol = etf_solution(xi, psi, big_psi)?;
    let t_bound = xi.t_bound();
    let two_t = |e: &GradedElement| -> GradedElement { e.mul_t_power(1).scale_rat(&Rat::from_integer(2.into())) };
    let cross = sol.xi_t.wedge(&sol.xi_t.i_n_plus_1()?)?;
    let r1 = sol
        .xi_t
        .ddt()
        .add(&two_t(&sol.xi_t.wedge(&sol.psi_t.add(&sol.big_psi_t)?)?))?;
    let r2 = sol
        .psi_t
        .ddt()
        .add(&two_t(&sol.psi_t.wedge(&sol.psi_t)?))?
        .sub(&two_t(&cross))?;
    let r3 = sol
        .big_psi_t
        .ddt()
        .add(&two_t(&sol.big_psi_t.wedge(&sol.big_psi_t)?))?
        .add(&two_t(&cross))?;
    let cut = t_bound.saturating_sub(1);
    Ok((r1.truncate_t(cut), r2.truncate_t(cut), r3.truncate_t(cut)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn table() -> Arc<GeneratorTable> {
        GeneratorTable::new(&[("g3", 3), ("g4", 4), ("g5", 5)]).unwrap()
    }

    fn gen(t: &Arc<GeneratorTable>, i: usize) -> GradedElement {
        GradedElement::generator(t, 16, 12, i)
    }

    #[test]
    fn koszul_rules() {
        let t = table();
        let g3 = gen(&t, 0);
        let g4 = gen(&t, 1);
        let g5 = gen(&t, 2);
        // odd square vanishes
        assert!(g3.wedge(&g3).unwrap().is_zero());
        // even element commutes
        let ab = g3.wedge(&g4).unwrap();
        let ba = g4.wedge(&g3).unwrap();
        assert_eq!(ab, ba);
        assert_eq!(
            ab.add(&ba).unwrap(),
            ab.scale_rat(&rat_int(2))
        );
        // two odds anticommute
        let g35 = g3.wedge(&g5).unwrap();
        let g53 = g5.wedge(&g3).unwrap();
        assert_eq!(g35, g53.neg());
        assert_eq!(g35.coefficient(&[1, 0, 1]), TPoly::one());
    }

    #[test]
    fn table_mismatch_is_an_error() {
        let t1 = table();
        let t2 = GeneratorTable::new(&[("h3", 3)]).unwrap();
        let a = gen(&t1, 0);
        let b = GradedElement::generator(&t2, 16, 12, 0);
        assert!(matches!(a.wedge(&b), Err(Error::TableMismatch)));
    }

    #[test]
    fn geometric_inverse_examples() {
        let t = table();
        // a = 0 -> 1
        let zero = GradedElement::zero(&t, 8, 12);
        assert_eq!(zero.geometric_inverse().unwrap(), GradedElement::one(&t, 8, 12));
        // a = t^2 g4 at D=8: 1 - t^2 g4 + t^4 g4^2
        let a = GradedElement::generator(&t, 8, 12, 1).mul_t_power(2);
        let inv = a.geometric_inverse().unwrap();
        let one = GradedElement::one(&t, 8, 12);
        let product = one.add(&a).unwrap().wedge(&inv).unwrap();
        assert_eq!(product, one);
        assert_eq!(inv.coefficient(&[0, 1, 0]), TPoly::monomial(Gaussian::from_re(rat_int(-1)), 2));
        assert_eq!(inv.coefficient(&[0, 2, 0]), TPoly::monomial(Gaussian::from_re(rat_int(1)), 4));
        // nonzero degree-0 part is rejected
        assert!(GradedElement::one(&t, 8, 12).geometric_inverse().is_err());
    }

    #[test]
    fn i_n_plus_1_degrees() {
        let t = table();
        let g3 = gen(&t, 0);
        let g5 = gen(&t, 2);
        // degree 3: i^4 = 1
        assert_eq!(g3.i_n_plus_1().unwrap(), g3);
        // degree 5: i^6 = -1
        assert_eq!(g5.i_n_plus_1().unwrap(), g5.neg());
        // degree 7 (g3 g4): i^8 = 1
        let g34 = g3.wedge(&gen(&t, 1)).unwrap();
        assert_eq!(g34.i_n_plus_1().unwrap(), g34);
        // even element rejected
        assert!(gen(&t, 1).i_n_plus_1().is_err());
    }

    #[test]
    fn modified_square_lands_in_degrees_div_4() {
        let t = table();
        let g3 = gen(&t, 0);
        let g5 = gen(&t, 2);
        let xi = g3.add(&g5).unwrap();
        let square = xi.wedge(&xi.i_n_plus_1().unwrap()).unwrap();
        assert!(square.is_div4_positive());
    }

    #[test]
    fn etf_solution_degenerate_cases() {
        let t = table();
        let g3 = gen(&t, 0);
        let g4 = gen(&t, 1);
        let zero = GradedElement::zero(&t, 16, 12);

        // psi = Psi = 0: xi^t = xi, psi^t = t^2 xi (i xi), Psi^t = -t^2 xi (i xi)
        let sol = etf_solution(&g3, &zero, &zero).unwrap();
        assert_eq!(sol.xi_t, g3);
        let square = g3.wedge(&g3.i_n_plus_1().unwrap()).unwrap().mul_t_power(2);
        assert_eq!(sol.psi_t, square);
        assert_eq!(sol.big_psi_t, square.neg());

        // xi = g3, psi = 0, Psi = g4: xi^t = g3 (1 + t^2 g4)^{-1}
        let sol = etf_solution(&g3, &zero, &g4).unwrap();
        let expect = g3.wedge(&g4.mul_t_power(2).geometric_inverse().unwrap()).unwrap();
        assert_eq!(sol.xi_t, expect);
        assert_eq!(
            sol.xi_t.coefficient(&[1, 1, 0]),
            TPoly::monomial(Gaussian::from_re(rat_int(-1)), 2)
        );
        assert_eq!(
            sol.xi_t.coefficient(&[1, 2, 0]),
            TPoly::monomial(Gaussian::from_re(rat_int(1)), 4)
        );

        // t = 0 slice is the initial value
        let eval0 = |e: &GradedElement| -> Vec<(Vec<u32>, Gaussian)> {
            e.terms().map(|(m, c)| (m.clone(), c.coeff(0))).filter(|(_, c)| !c.is_zero()).collect()
        };
        assert_eq!(eval0(&sol.xi_t), eval0(&g3));
        assert_eq!(eval0(&sol.big_psi_t), eval0(&g4));
        assert!(eval0(&sol.psi_t).is_empty());

        // parity violations are rejected
        assert!(etf_solution(&g4, &zero, &zero).is_err());
        assert!(etf_solution(&g3, &g3, &zero).is_err());
    }

    #[test]
    fn etf_residuals_vanish() {
        let t = table();
        let g3 = gen(&t, 0);
        let g4 = gen(&t, 1);
        let g5 = gen(&t, 2);
        let zero = GradedElement::zero(&t, 16, 12);
        let cases: Vec<(GradedElement, GradedElement, GradedElement)> = vec![
            (g3.clone(), zero.clone(), zero.clone()),
            (g3.clone(), zero.clone(), g4.clone()),
            (
                g3.add(&g5).unwrap(),
                g4.scale_rat(&rat(1, 2)),
                g4.scale_rat(&rat(-2, 3)),
            ),
        ];
        for (xi, psi, big) in cases {
            let (r1, r2, r3) = etf_ode_residual(&xi, &psi, &big).unwrap();
            assert!(r1.is_zero(), "xi residual nonzero");
            assert!(r2.is_zero(), "psi residual nonzero");
            assert!(r3.is_zero(), "Psi residual nonzero");
        }
    }

    #[test]
    fn wedge_is_associative_on_samples() {
        let t = table();
        let a = gen(&t, 0).add(&gen(&t, 1)).unwrap();
        let b = gen(&t, 2).scale_rat(&rat(2, 3)).add(&GradedElement::one(&t, 16, 12)).unwrap();
        let c = gen(&t, 0).wedge(&gen(&t, 2)).unwrap();
        let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn json_shape() {
        let t = table();
        let e = gen(&t, 0).wedge(&gen(&t, 1)).unwrap().mul_t_power(2);
        let v = e.to_json();
        assert_eq!(v[0]["monomial"], serde_json::json!(["g3", "g4"]));
        assert_eq!(v[0]["coeff_t_poly"], serde_json::json!(["0", "0", "1"]));
    }
}
