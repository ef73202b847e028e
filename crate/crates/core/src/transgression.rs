//! Logarithmic transgression of a permeable hypersurface and the residue
//! chain that reduces the Berger-ball value to projective-space residues.
//!
//! For a permeable hypersurface the transgression data collapse onto two
//! generators: `u` of degree 3 (the normalized 3-form) and `du` of degree
//! 4 (its exterior derivative). Writing `LF(z) = log F(z) / z^2`, the
//! logarithmic transgression form is
//!
//! ```text
//! d/dt ( t^2 u LF(sqrt(t^2 du)) )
//! ```
//!
//! and the transgression form integrates `F(sqrt(t^2 du))` against it over
//! `t in [0, 1]`. The exterior derivative enters only through the
//! substitution rule `d(t^2 u w(du)) -> t^2 du w(du)`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gaussian::Gaussian;
use crate::genus::MultiplicativeSequence;
use crate::graded::{GeneratorTable, GradedElement, TPoly};
use crate::poly::RatPoly;
use crate::rational::Rat;
use crate::ring::CoeffRing;
use crate::series::PowerSeries;

/// The algebra on `{u (deg 3), du (deg 4)}` used by the permeable
/// transgression computations.
pub struct TransgressionAlgebra {
    pub table: Arc<GeneratorTable>,
    pub degree_bound: usize,
    pub t_bound: usize,
}

impl TransgressionAlgebra {
    pub fn new(degree_bound: usize) -> Self {
        assert!(degree_bound >= 4);
        let table = GeneratorTable::new(&[("u", 3), ("du", 4)]).expect("fixed table");
        // t-degrees reach 2k with 4k <= degree_bound + 3; no truncation bites
        let t_bound = 2 * (degree_bound / 4 + 1);
        TransgressionAlgebra { table, degree_bound, t_bound }
    }

    pub fn zero(&self) -> GradedElement {
        GradedElement::zero(&self.table, self.degree_bound, self.t_bound)
    }

    pub fn u(&self) -> GradedElement {
        GradedElement::generator(&self.table, self.degree_bound, self.t_bound, 0)
    }

    pub fn du(&self) -> GradedElement {
        GradedElement::generator(&self.table, self.degree_bound, self.t_bound, 1)
    }

    /// `sum_{k>=1} f_k t^{2k-2} du^{k-1}`, i.e. `LF(sqrt(t^2 du))`.
    fn lf_element(&self, seq: &MultiplicativeSequence<Rat>) -> Result<GradedElement> {
        let mut acc = self.zero();
        let du = self.du();
        let mut du_pow = GradedElement::one(&self.table, self.degree_bound, self.t_bound);
        let mut k = 1usize;
        loop {
            if 2 * k > seq.log_series().truncation_order() || 4 * (k - 1) > self.degree_bound {
                break;
            }
            let f_k = seq.log_coeff(k);
            if !CoeffRing::is_zero(&f_k) {
                let coeff = TPoly::monomial(Gaussian::from_re(f_k), 2 * k - 2);
                acc = acc.add(&du_pow.scale(&coeff))?;
            }
            du_pow = du_pow.wedge(&du)?;
            if du_pow.is_zero() {
                break;
            }
            k += 1;
        }
        Ok(acc)
    }

    /// `F(sqrt(t^2 du)) = exp(sum_k f_k t^{2k} du^k)`.
    fn f_element(&self, seq: &MultiplicativeSequence<Rat>) -> Result<GradedElement> {
        let arg = self.lf_element(seq)?.wedge(&self.du())?.mul_t_power(2);
        arg.exponential()
    }

    /// The substitution rule `u w(du) -> du w(du)`, `w(du) -> 0`, which is
    /// the exterior derivative on the image of the transgression forms.
    pub fn exterior_derivative(&self, elem: &GradedElement) -> Result<GradedElement> {
        let mut out = self.zero();
        for (exps, coeff) in elem.terms() {
            match exps[0] {
                0 => continue, // d(du^k) = 0
                1 => {
                    let shifted = vec![0u32, exps[1] + 1];
                    let term = GradedElement::scalar(
                        &self.table,
                        self.degree_bound,
                        self.t_bound,
                        coeff.clone(),
                    );
                    let mut du_mono =
                        GradedElement::one(&self.table, self.degree_bound, self.t_bound);
                    for _ in 0..shifted[1] {
                        du_mono = du_mono.wedge(&self.du())?;
                    }
                    out = out.add(&term.wedge(&du_mono)?)?;
                }
                _ => unreachable!("u is odd, exponent cannot exceed 1"),
            }
        }
        Ok(out)
    }
}

/// The logarithmic transgression integrand
/// `d/dt ( t^2 u LF(sqrt(t^2 du)) )` of a permeable hypersurface.
pub fn permeable_transgression_integrand(
    seq: &MultiplicativeSequence<Rat>,
    degree_bound: usize,
) -> Result<GradedElement> {
    let alg = TransgressionAlgebra::new(degree_bound);
    let core = alg.u().wedge(&alg.lf_element(seq)?)?.mul_t_power(2);
    Ok(core.ddt())
}

/// The transgression form
/// `int_0^1 F(sqrt(t^2 du)) d/dt ( t^2 u LF(sqrt(t^2 du)) ) dt`.
pub fn permeable_transgression(
    seq: &MultiplicativeSequence<Rat>,
    degree_bound: usize,
) -> Result<GradedElement> {
    let alg = TransgressionAlgebra::new(degree_bound);
    let core = alg.u().wedge(&alg.lf_element(seq)?)?.mul_t_power(2);
    let product = alg.f_element(seq)?.wedge(&core.ddt())?;
    Ok(product.integrate_t_unit())
}

/// Witness of the residue-chain verification behind the ball-value
/// theorem, with `rho` symbolic.
#[derive(Clone, Debug)]
pub struct NullReductionWitness {
    /// The boundary residue
    /// `res[F(rho z)^n (int_0^1 F(t rho z) d/dt[(log F)(t rho z)/z] dt) dz/z^n]`.
    pub boundary: RatPoly,
    /// `rho^n res[(F^{n+1} - F^n)/z^{n+1}]`.
    pub reduced: RatPoly,
    /// `rho^n res[F^{n+1}/z^{n+1}]`, the interior integral.
    pub interior: RatPoly,
    /// `interior - boundary`, which the chain equates with
    /// `rho^n res[F^n/z^{n+1}]`.
    pub ball: RatPoly,
    /// Whether `boundary == reduced`.
    pub equal: bool,
    /// Whether `int_0^1 F(tw) d/dt[(log F)(tw)] dt = F(w) - 1` held as a
    /// series identity in `w`.
    pub scalar_lemma_ok: bool,
    /// Whether `ball` equals the direct residue `rho^n res[F^n/z^{n+1}]`.
    pub ball_matches: bool,
}

impl NullReductionWitness {
    pub fn passed(&self) -> bool {
        self.equal && self.scalar_lemma_ok && self.ball_matches
    }
}

/// Evaluate the residue chain of the ball-value theorem as a formal
/// identity: the time integral is carried out exactly on t-polynomial
/// coefficients, and the `rho`-dependence is restored from homogeneity
/// (the `z^k` coefficient of any series in `rho z` carries exactly
/// `rho^k`).
pub fn null_reduction_check(
    seq: &MultiplicativeSequence<Rat>,
    n: usize,
    order: usize,
) -> Result<NullReductionWitness> {
    assert!(n >= 1);
    if order < n + 1 {
        return Err(Error::InsufficientTruncation { needed: n + 1, have: order });
    }
    if seq.order() < order {
        return Err(Error::InsufficientTruncation { needed: order, have: seq.order() });
    }
    let f = seq.series().truncated(order);
    // F(t w) and (log F)(t w) over polynomials in t
    let with_t = |s: &PowerSeries<Rat>| -> PowerSeries<RatPoly> {
        PowerSeries::from_coeffs(
            s.var(),
            s.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| RatPoly::monomial(c.clone(), k))
                .collect(),
        )
    };
    let f_t = with_t(&f);
    let log_f_t = with_t(&seq.log_series().truncated(order));
    let ddt_log = log_f_t.map_coeffs(|p| p.derivative());
    let product = f_t.mul(&ddt_log)?;
    // H(w) = int_0^1 F(tw) d/dt[(log F)(tw)] dt
    let h = product.map_coeffs(|p| p.integral_unit_interval());

    // scalar lemma: H = F - 1
    let f_minus_one = f.sub(&PowerSeries::one(f.var(), order))?;
    let scalar_lemma_ok = h == f_minus_one;

    let f_pow_n = f.pow(n)?;
    let boundary_coeff = f_pow_n.mul(&h)?.coeff(n);
    let reduced_coeff = f_pow_n.mul(&f)?.sub(&f_pow_n)?.coeff(n);
    let interior_coeff = f_pow_n.mul(&f)?.coeff(n);
    let ball_coeff = &interior_coeff - &boundary_coeff;
    let direct_ball = f_pow_n.coeff(n);

    Ok(NullReductionWitness {
        boundary: RatPoly::monomial(boundary_coeff.clone(), n),
        reduced: RatPoly::monomial(reduced_coeff.clone(), n),
        interior: RatPoly::monomial(interior_coeff, n),
        ball: RatPoly::monomial(ball_coeff.clone(), n),
        equal: boundary_coeff == reduced_coeff,
        scalar_lemma_ok,
        ball_matches: ball_coeff == direct_ball,
    })
}
