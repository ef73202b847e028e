//! Multiplicative sequences of Pontryagin (and Chern) classes.
//!
//! A sequence is parametrized by an even series `F(z) = 1 + O(z^2)` with
//! formal logarithm `log F(z) = sum_{k>0} f_k z^{2k}`. The module computes
//! its values on complex projective spaces (residues of `F^{n+1}/z^{n+1}`),
//! its Berger-ball values (two residue forms, compared internally), its
//! expansion in the weighted `p`-variable ring, the quantized Pontryagin /
//! symmetric / Chern classes, and the splitting-principle identities for
//! Chern characters of exterior and symmetric powers.

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::{binomial_signed, Rat};
use crate::ring::CoeffRing;
use crate::roots::{ChernRootContext, MultiPoly};
use crate::series::{
    named_series, parametric_series, NamedSeries, ParametricSeries, PowerSeries,
};
use crate::weighted::WeightedPolynomial;

/// An even series `F(z) = 1 + O(z^2)` with its cached logarithm.
#[derive(Clone, Debug)]
pub struct MultiplicativeSequence<C: CoeffRing> {
    f: PowerSeries<C>,
    log_f: PowerSeries<C>,
}

impl<C: CoeffRing> MultiplicativeSequence<C> {
    pub fn new(f: PowerSeries<C>) -> Result<Self> {
        if !f.coeff(0).is_one() {
            return Err(Error::ConstantTerm("a multiplicative sequence needs F(0) = 1"));
        }
        if !f.is_even() {
            return Err(Error::ConstantTerm("a multiplicative sequence needs an even F"));
        }
        let log_f = f.log()?;
        // the defining invariant: exp of the stored logarithm reproduces F
        if log_f.exp()? != f {
            return Err(Error::FormMismatch("exp(log F) != F"));
        }
        Ok(MultiplicativeSequence { f, log_f })
    }

    pub fn series(&self) -> &PowerSeries<C> {
        &self.f
    }

    pub fn log_series(&self) -> &PowerSeries<C> {
        &self.log_f
    }

    pub fn order(&self) -> usize {
        self.f.truncation_order()
    }

    /// f_k, the coefficient of `z^{2k}` in `log F`.
    pub fn log_coeff(&self, k: usize) -> C {
        self.log_f.coeff(2 * k)
    }

    /// f_1..f_k as a list (entries beyond the truncation order error out).
    pub fn log_coeffs(&self, k_max: usize) -> Result<Vec<C>> {
        if 2 * k_max > self.log_f.truncation_order() {
            return Err(Error::InsufficientTruncation {
                needed: 2 * k_max,
                have: self.log_f.truncation_order(),
            });
        }
        Ok((1..=k_max).map(|k| self.log_coeff(k)).collect())
    }

    /// Product sequence `F * G`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        Self::new(self.f.mul(&other.f)?)
    }

    /// `<F(T CP^n), [CP^n]> = res[F^{n+1} / z^{n+1}]`.
    pub fn cp_value(&self, n: usize) -> Result<C> {
        if n > self.order() {
            return Err(Error::InsufficientTruncation { needed: n, have: self.order() });
        }
        Ok(self.cp_values(n)?.pop().expect("n+1 values"))
    }

    /// CP values for n = 0..n_max by incremental powers of F.
    pub fn cp_values(&self, n_max: usize) -> Result<Vec<C>> {
        if n_max > self.order() {
            return Err(Error::InsufficientTruncation { needed: n_max, have: self.order() });
        }
        let f = self.f.truncated(n_max);
        let mut power = f.clone();
        let mut values = Vec::with_capacity(n_max + 1);
        values.push(power.coeff(0)); // n = 0: res[F/z] = 1
        for n in 1..=n_max {
            power = power.mul(&f)?;
            values.push(power.coeff(n));
        }
        Ok(values)
    }

    /// The composition inverse `phi` of `z / F(z)`, to order
    /// `F`'s order + 1.
    pub fn phi(&self) -> Result<PowerSeries<C>> {
        let z_over_f = self.f.inverse()?.shift_up_one();
        z_over_f.comp_inverse()
    }

    /// `phi'`, the generating series of the CP values, truncated to `order`.
    pub fn phi_prime(&self, order: usize) -> Result<PowerSeries<C>> {
        if order > self.order() {
            return Err(Error::InsufficientTruncation { needed: order, have: self.order() });
        }
        Ok(self.phi()?.derivative().truncated(order))
    }

    /// Both residue forms of the Berger-ball value:
    /// `res[F^n / z^{n+1}]` and `res[(log phi)' / z^n]`.
    pub fn ball_residue_forms(&self, n: usize) -> Result<(C, C)> {
        assert!(n >= 1, "ball values need n >= 1");
        if n > self.order() {
            return Err(Error::InsufficientTruncation { needed: n, have: self.order() });
        }
        let power_form = self.f.truncated(n).pow(n)?.residue(n + 1)?;
        // (log phi)' has the Laurent expansion 1/z + ...; its residue
        // against dz/z^n is the z^n coefficient of z phi'/phi
        let log_form = self.phi()?.z_dlog()?.residue(n + 1)?;
        Ok((power_form, log_form))
    }

    /// Expansion in the weighted Pontryagin ring:
    /// `exp(Lambda^F log(1 + p_1 + p_2 + ...))` truncated at weight `w`.
    pub fn expand_in_pontryagin(&self, w: usize) -> Result<WeightedPolynomial<C>> {
        assert!(w % 4 == 0, "weight bound must be a multiple of 4");
        let log_coeffs = self.log_coeffs(w / 4)?;
        Ok(expand_from_log_coeffs(&log_coeffs, 4, w))
    }
}

fn total_pontryagin_class<C: CoeffRing>(base_weight: usize, w: usize) -> WeightedPolynomial<C> {
    let mut p = WeightedPolynomial::one(base_weight, w);
    for k in 1..=w / base_weight {
        p = p.add(&WeightedPolynomial::variable(base_weight, w, k));
    }
    p
}

/// `exp(Lambda^F log(1 + sum_k v_k))` for the grading with variable weight
/// `base_weight * k`; `log_coeffs[k-1]` holds `f_k`.
pub fn expand_from_log_coeffs<C: CoeffRing>(
    log_coeffs: &[C],
    base_weight: usize,
    w: usize,
) -> WeightedPolynomial<C> {
    let log_p = total_pontryagin_class::<C>(base_weight, w).log();
    log_p.lambda_scale(log_coeffs).exp()
}

impl MultiplicativeSequence<Rat> {
    /// Sequence of a named series (`l`, `ahat`, `trivial`, ...).
    pub fn from_named(name: NamedSeries, order: usize) -> Result<Self> {
        Self::new(named_series(name, order))
    }
}

/// How the Berger parameter enters a ball value.
#[derive(Clone, Debug, PartialEq)]
pub enum RhoSpec {
    Symbolic,
    Exact(Rat),
}

impl RhoSpec {
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim().eq_ignore_ascii_case("symbolic") {
            Ok(RhoSpec::Symbolic)
        } else {
            Ok(RhoSpec::Exact(crate::rational::rat_from_str(s)?))
        }
    }
}

/// A ball value: either a polynomial in `rho` or an exact scalar.
#[derive(Clone, Debug, PartialEq)]
pub enum BallValue {
    Poly(RatPoly),
    Scalar(Rat),
}

/// `rho^n res[F^n / z^{n+1}]`, the value of the sequence on the Berger
/// ball. Both residue forms are computed; disagreement is an internal
/// error, not an input error.
pub fn ball_value(
    seq: &MultiplicativeSequence<Rat>,
    n: usize,
    rho: &RhoSpec,
) -> Result<BallValue> {
    let (power_form, log_form) = seq.ball_residue_forms(n)?;
    if power_form != log_form {
        return Err(Error::FormMismatch("ball-value residue forms"));
    }
    Ok(match rho {
        RhoSpec::Symbolic => BallValue::Poly(RatPoly::monomial(power_form, n)),
        RhoSpec::Exact(r) => BallValue::Scalar(power_form * pow_rat(r, n)),
    })
}

fn pow_rat(r: &Rat, n: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..n {
        acc *= r;
    }
    acc
}

/// Reconstruct the sequence whose CP values are prescribed:
/// `values[k-1]` is the desired value on `CP^{2k}`. The parametrizing
/// series is `F = z / f` where `f' = 1 / phi'(f)`, `f(0) = 0`.
pub fn sequence_from_cp_values(
    values: &[Rat],
    order: usize,
) -> Result<MultiplicativeSequence<Rat>> {
    let needed = if order > 0 { order - 1 } else { 0 };
    let phi_order = needed.max(2 * values.len());
    let mut coeffs = vec![Rat::zero(); phi_order + 1];
    coeffs[0] = Rat::one();
    for (k, v) in values.iter().enumerate() {
        let idx = 2 * (k + 1);
        if idx <= phi_order {
            coeffs[idx] = v.clone();
        }
    }
    let phi_prime = PowerSeries::from_coeffs("z", coeffs);
    let p = phi_prime.inverse()?;
    let f = PowerSeries::ode_solve_autonomous(&p, order + 1)?;
    // F = z / f = 1 / (f / z)
    let f_over_z = PowerSeries::from_coeffs("z", f.coeffs()[1..].to_vec());
    MultiplicativeSequence::new(f_over_z.inverse()?)
}

/// The k-th quantized Pontryagin class as a universal weighted polynomial,
/// truncated at weight `w`: the t^k coefficient of the multiplicative
/// sequence of `P(t, z) = 1 + 2t(cosh z - 1)`.
pub fn quantized_pontryagin(k: usize, w: usize) -> Result<WeightedPolynomial<Rat>> {
    quantized_from(ParametricSeries::QuantizedPontryagin, k, w)
}

/// The k-th quantized symmetric class: t^k coefficient of the sequence of
/// `S(t, z) = (1 - 2t(cosh z - 1))^{-1}`.
pub fn quantized_symmetric(k: usize, w: usize) -> Result<WeightedPolynomial<Rat>> {
    quantized_from(ParametricSeries::QuantizedSymmetric, k, w)
}

fn quantized_from(which: ParametricSeries, k: usize, w: usize) -> Result<WeightedPolynomial<Rat>> {
    if k == 0 {
        return Ok(WeightedPolynomial::one(4, w));
    }
    let series = parametric_series(which, w.div_euclid(2).max(2));
    let seq = MultiplicativeSequence::new(series)?;
    let expanded = seq.expand_in_pontryagin(w)?;
    Ok(expanded.map_coeffs(|poly| poly.coeff(k)))
}

/// The k-th quantized Chern class in `c`-variables (weight 2k): the t^k
/// coefficient of the Chern-form sequence of `C(t, z) = 1 + t(e^z - 1)`.
pub fn quantized_chern(k: usize, w: usize) -> Result<WeightedPolynomial<Rat>> {
    if k == 0 {
        return Ok(WeightedPolynomial::one(2, w));
    }
    let order = w.div_euclid(2).max(1);
    let series = parametric_series(ParametricSeries::QuantizedChern, order);
    let log = series.log()?;
    // Chern normalization: log F(z) = sum_{k>0} f_k z^k, variables of
    // weight 2k
    let log_coeffs: Vec<RatPoly> = (1..=order).map(|j| log.coeff(j)).collect();
    let expanded = expand_from_log_coeffs(&log_coeffs, 2, w);
    Ok(expanded.map_coeffs(|poly| poly.coeff(k)))
}

/// Outcome of a splitting-principle identity check: the verdict and both
/// sides expressed in `p`-variables.
#[derive(Clone, Debug)]
pub struct ChIdentityWitness {
    pub equal: bool,
    pub lhs: WeightedPolynomial<Rat>,
    pub rhs: WeightedPolynomial<Rat>,
}

/// Verify `ch Lambda^d(VM) = sum_k C(dim VM - 2k, d - k) P_k(VM)` for a
/// rank-2m bundle in the root context, comparing both sides up to weight `w`.
pub fn ch_exterior_identity_check(m: usize, d: usize, w: usize) -> Result<ChIdentityWitness> {
    let ctx = ChernRootContext::new(m, w);
    let lhs_x = ctx.ch_exterior(d);
    let mut rhs_x = MultiPoly::zero(m, w / 2);
    for k in 0..=d {
        let coeff = binomial_signed(2 * m as i64 - 2 * k as i64, d - k);
        if CoeffRing::is_zero(&coeff) {
            continue;
        }
        let pk = quantized_pontryagin(k, w)?;
        rhs_x = rhs_x.add(&ctx.eval_weighted(&pk).scale(&coeff));
    }
    Ok(ChIdentityWitness {
        equal: lhs_x == rhs_x,
        lhs: ctx.reduce_to_pontryagin(&lhs_x),
        rhs: ctx.reduce_to_pontryagin(&rhs_x),
    })
}

/// Verify `ch Sym^d(VM) = sum_k C(dim VM + d + k - 1, d - k) S_k(VM)` in
/// the root context up to weight `w`.
pub fn ch_symmetric_identity_check(m: usize, d: usize, w: usize) -> Result<ChIdentityWitness> {
    let ctx = ChernRootContext::new(m, w);
    let lhs_x = ctx.ch_symmetric(d);
    let mut rhs_x = MultiPoly::zero(m, w / 2);
    for k in 0..=d {
        let coeff = binomial_signed((2 * m + d + k) as i64 - 1, d - k);
        if CoeffRing::is_zero(&coeff) {
            continue;
        }
        let sk = quantized_symmetric(k, w)?;
        rhs_x = rhs_x.add(&ctx.eval_weighted(&sk).scale(&coeff));
    }
    Ok(ChIdentityWitness {
        equal: lhs_x == rhs_x,
        lhs: ctx.reduce_to_pontryagin(&lhs_x),
        rhs: ctx.reduce_to_pontryagin(&rhs_x),
    })
}
