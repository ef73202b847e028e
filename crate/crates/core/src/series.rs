//! Truncated univariate formal power series over an exact coefficient ring.
//!
//! A value of truncation order `T` is known exactly modulo `z^{T+1}` and
//! carries its indeterminate name. Binary operations require matching
//! indeterminates and truncate to the minimum order; composition and
//! inversion adjust orders per their contracts. Mixing orders never loses
//! precision silently, and residue extraction beyond the known order is an
//! error rather than a zero.

use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::{central_binomial, factorial, rat_to_string, Rat};
use crate::ring::CoeffRing;

/// Formal power series `c_0 + c_1 z + ... + c_T z^T` (mod `z^{T+1}`).
#[derive(Clone, PartialEq, Debug)]
pub struct PowerSeries<C: CoeffRing> {
    var: String,
    coeffs: Vec<C>,
}

impl<C: CoeffRing> PowerSeries<C> {
    /// Series with the given coefficients; the truncation order is
    /// `coeffs.len() - 1`.
    pub fn from_coeffs(var: &str, coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the constant term");
        PowerSeries { var: var.to_string(), coeffs }
    }

    pub fn zero(var: &str, order: usize) -> Self {
        PowerSeries { var: var.to_string(), coeffs: vec![C::zero(); order + 1] }
    }

    pub fn constant(var: &str, c: C, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(var: &str, order: usize) -> Self {
        Self::constant(var, C::one(), order)
    }

    /// The identity series `z`.
    pub fn identity(var: &str, order: usize) -> Self {
        let mut s = Self::zero(var, order);
        if order >= 1 {
            s.coeffs[1] = C::one();
        }
        s
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn truncation_order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True iff all odd-index coefficients vanish.
    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    /// True iff all even-index coefficients vanish.
    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(|c| c.is_zero())
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn truncated(&self, order: usize) -> Self {
        assert!(order <= self.truncation_order(), "cannot extend a series by truncation");
        PowerSeries { var: self.var.clone(), coeffs: self.coeffs[..=order].to_vec() }
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var == other.var {
            Ok(())
        } else {
            Err(Error::IndeterminateMismatch(self.var.clone(), other.var.clone()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.truncation_order().min(other.truncation_order());
        let coeffs = (0..=order).map(|k| self.coeffs[k].add(&other.coeffs[k])).collect();
        Ok(PowerSeries { var: self.var.clone(), coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        PowerSeries { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn scale(&self, r: &C) -> Self {
        PowerSeries { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| c.mul(r)).collect() }
    }

    /// Cauchy product, truncated to the minimum order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let order = self.truncation_order().min(other.truncation_order());
        let mut coeffs = vec![C::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Ok(PowerSeries { var: self.var.clone(), coeffs })
    }

    /// n-th power by repeated multiplication.
    pub fn pow(&self, n: usize) -> Result<Self> {
        let mut acc = Self::one(&self.var, self.truncation_order());
        for _ in 0..n {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse; requires an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0]
            .try_inv()
            .ok_or(Error::NonInvertible("constant term of series"))?;
        let order = self.truncation_order();
        let mut inv = vec![C::zero(); order + 1];
        inv[0] = c0_inv.clone();
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !inv[n - k].is_zero() {
                    acc = acc.add(&self.coeffs[k].mul(&inv[n - k]));
                }
            }
            inv[n] = acc.neg().mul(&c0_inv);
        }
        Ok(PowerSeries { var: self.var.clone(), coeffs: inv })
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zero(&self.var, 0);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Rat::from_integer((k as i64).into())))
            .collect();
        PowerSeries { var: self.var.clone(), coeffs }
    }

    /// The operator z d/dz: scales `c_k` by `k`, preserving the order.
    pub fn z_ddz(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| c.scale(&Rat::from_integer((k as i64).into())))
            .collect();
        PowerSeries { var: self.var.clone(), coeffs }
    }

    /// Multiply by `z`: shifts coefficients up, growing the order by one.
    pub fn shift_up_one(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries { var: self.var.clone(), coeffs }
    }

    /// Termwise antiderivative with constant term zero; order grows by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(C::zero());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(c.scale(&Rat::new(1.into(), ((k + 1) as i64).into())));
        }
        PowerSeries { var: self.var.clone(), coeffs }
    }

    /// Formal logarithm; requires constant term 1.
    pub fn log(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTerm("log requires constant term 1"));
        }
        // log(a) = integral of a'/a
        let quotient = self.derivative().mul(&self.inverse()?)?;
        Ok(quotient.integrate())
    }

    /// Formal exponential; requires constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm("exp requires constant term 0"));
        }
        // E' = a' E solved degree by degree
        let order = self.truncation_order();
        let mut e = vec![C::zero(); order + 1];
        e[0] = C::one();
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !e[n - k].is_zero() {
                    let term = self.coeffs[k].scale(&Rat::from_integer((k as i64).into()));
                    acc = acc.add(&term.mul(&e[n - k]));
                }
            }
            e[n] = acc.scale(&Rat::new(1.into(), (n as i64).into()));
        }
        Ok(PowerSeries { var: self.var.clone(), coeffs: e })
    }

    /// Composition `self(inner)`; requires `inner(0) = 0`. The result order
    /// is the minimum of the two orders.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        self.check_var(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm("composition requires inner constant term 0"));
        }
        let order = self.truncation_order().min(inner.truncation_order());
        let inner = inner.truncated(order);
        let mut acc = PowerSeries::constant(&self.var, self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = acc.mul(&inner)?;
            acc.coeffs[0] = acc.coeffs[0].add(&self.coeffs[k]);
        }
        Ok(acc)
    }

    /// res[self / z^pole_order dz], i.e. the coefficient `c_{pole_order-1}`.
    /// Requesting a coefficient beyond the truncation order is an error.
    pub fn residue(&self, pole_order: usize) -> Result<C> {
        assert!(pole_order >= 1, "pole order must be positive");
        let needed = pole_order - 1;
        if needed > self.truncation_order() {
            return Err(Error::InsufficientTruncation {
                needed,
                have: self.truncation_order(),
            });
        }
        Ok(self.coeffs[needed].clone())
    }

    /// Compositional inverse by Newton iteration, doubling the correct
    /// order each step. Requires `c_0 = 0` and invertible `c_1`.
    pub fn comp_inverse_newton(&self) -> Result<Self> {
        let c1_inv = self.check_comp_invertible()?;
        let order = self.truncation_order();
        let mut phi = Self::identity(&self.var, order).scale(&c1_inv);
        if order < 2 {
            return Ok(phi);
        }
        let deriv = self.derivative();
        let mut correct = 1usize;
        while correct < order {
            // phi <- phi - (self(phi) - z) / self'(phi)
            let err = self.compose(&phi)?.sub(&Self::identity(&self.var, order))?;
            if err.is_zero() {
                break;
            }
            // self'(phi) has order - 1 coefficients; extend by one term so
            // the update keeps full working precision. The top coefficient
            // of the update beyond `2*correct` is discarded anyway.
            let mut dphi = deriv.compose(&phi.truncated(order - 1))?;
            dphi.coeffs.push(C::zero());
            let update = err.mul(&dphi.inverse()?)?;
            let mut padded = update.coeffs;
            padded.resize(order + 1, C::zero());
            let update = PowerSeries { var: self.var.clone(), coeffs: padded };
            phi = phi.sub(&update)?;
            correct *= 2;
        }
        Ok(phi)
    }

    /// Compositional inverse by coefficient-wise Lagrange inversion:
    /// `[z^n] phi = (1/n) [z^{n-1}] (z / a(z))^n`.
    pub fn comp_inverse_lagrange(&self) -> Result<Self> {
        self.check_comp_invertible()?;
        let order = self.truncation_order();
        let mut coeffs = vec![C::zero(); order + 1];
        if order == 0 {
            return Ok(PowerSeries { var: self.var.clone(), coeffs });
        }
        // z / a(z) = 1 / (a(z)/z), a power series of order `order - 1`
        let shifted = PowerSeries {
            var: self.var.clone(),
            coeffs: self.coeffs[1..].to_vec(),
        };
        let base = shifted.inverse()?;
        let mut power = Self::one(&self.var, base.truncation_order());
        for n in 1..=order {
            power = power.mul(&base)?;
            coeffs[n] = power.coeff(n - 1).scale(&Rat::new(1.into(), (n as i64).into()));
        }
        Ok(PowerSeries { var: self.var.clone(), coeffs })
    }

    fn check_comp_invertible(&self) -> Result<C> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::ConstantTerm("compositional inverse requires c_0 = 0"));
        }
        if self.coeffs.len() < 2 {
            return Err(Error::NonInvertible("series of order 0 has no linear term"));
        }
        self.coeffs[1]
            .try_inv()
            .ok_or(Error::NonInvertible("linear coefficient"))
    }

    /// Compositional inverse (Newton path).
    pub fn comp_inverse(&self) -> Result<Self> {
        self.comp_inverse_newton()
    }

    /// Unique solution `f = c_1 z + ...` of the autonomous equation
    /// `f' = p(f)` with `f(0) = 0`, by degree-by-degree coefficient
    /// matching. Requires an invertible constant term of `p` and
    /// `p` known at least to order `order - 1`.
    pub fn ode_solve_autonomous(p: &Self, order: usize) -> Result<Self> {
        p.coeffs[0]
            .try_inv()
            .ok_or(Error::NonInvertible("p(0) in autonomous ODE"))?;
        if order >= 1 && p.truncation_order() < order - 1 {
            return Err(Error::InsufficientTruncation { needed: order - 1, have: p.truncation_order() });
        }
        let mut f = Self::zero(&p.var, order);
        if order == 0 {
            return Ok(f);
        }
        f.coeffs[1] = p.coeffs[0].clone();
        for n in 1..order {
            // (n+1) c_{n+1} = [z^n] p(f_{<=n}); the coefficient matching uses
            // only c_1..c_n of f, already final at this point.
            let partial = f.truncated(n);
            let rhs = p.truncated((order - 1).min(p.truncation_order())).compose(&partial)?;
            let value = if n <= rhs.truncation_order() { rhs.coeff(n) } else { C::zero() };
            f.coeffs[n + 1] = value.scale(&Rat::new(1.into(), ((n + 1) as i64).into()));
        }
        Ok(f)
    }

    /// The operator `z d/dz log(g)` for a series `g = c_v z^v (1 + O(z))`
    /// whose coefficients are all exactly divisible by the leading one.
    /// Returns `v + z h'/h` with `h = g / (c_v z^v)`, a power series of
    /// order `T - v`.
    pub fn z_dlog(&self) -> Result<Self> {
        let v = self
            .valuation()
            .ok_or(Error::NonInvertible("z d/dz log of the zero series"))?;
        let lead = self.coeffs[v].clone();
        let mut h = Vec::with_capacity(self.coeffs.len() - v);
        for c in &self.coeffs[v..] {
            h.push(
                c.try_exact_div(&lead)
                    .ok_or(Error::NonInvertible("leading coefficient in z d/dz log"))?,
            );
        }
        let h = PowerSeries { var: self.var.clone(), coeffs: h };
        let order = h.truncation_order();
        // z h'/h has exact coefficients up to order
        let mut zdh = h.z_ddz();
        zdh.coeffs.truncate(order + 1);
        let mut out = zdh.mul(&h.inverse()?)?;
        out.coeffs[0] = out.coeffs[0].add(&C::from_int(v as i64));
        Ok(out)
    }

    /// Map coefficients into another ring.
    pub fn map_coeffs<D: CoeffRing>(&self, f: impl Fn(&C) -> D) -> PowerSeries<D> {
        PowerSeries { var: self.var.clone(), coeffs: self.coeffs.iter().map(|c| f(c)).collect() }
    }
}

impl PowerSeries<Rat> {
    /// Substitute `z -> scale * rho * z`, producing a series over
    /// polynomials in `rho`: the coefficient of `z^k` becomes
    /// `c_k scale^k rho^k`.
    pub fn substitute_rho_scaled(&self, scale: &Rat) -> PowerSeries<RatPoly> {
        let mut factor = Rat::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs.push(RatPoly::monomial(c * &factor, k));
            factor *= scale;
        }
        PowerSeries { var: self.var.clone(), coeffs }
    }

    /// Serialize to the documented JSON shape: indeterminate, order and the
    /// coefficient strings in ascending degree order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "indeterminate": self.var,
            "order": self.truncation_order(),
            "coefficients": self.coeffs.iter().map(rat_to_string).collect::<Vec<_>>(),
        })
    }
}

/// Names of the built-in series constructors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NamedSeries {
    Tanh,
    Artanh,
    Sinh,
    Arsinh,
    /// L(z) = z / tanh(z)
    LGenus,
    /// A-hat(z) = (z/2) / sinh(z/2)
    AHat,
    /// The constant series 1.
    Trivial,
}

impl NamedSeries {
    pub fn parse(name: &str) -> Result<Self> {
        match name.to_ascii_lowercase().as_str() {
            "tanh" => Ok(NamedSeries::Tanh),
            "artanh" => Ok(NamedSeries::Artanh),
            "sinh" => Ok(NamedSeries::Sinh),
            "arsinh" => Ok(NamedSeries::Arsinh),
            "l" | "l-genus" => Ok(NamedSeries::LGenus),
            "ahat" | "a-hat" => Ok(NamedSeries::AHat),
            "trivial" | "one" => Ok(NamedSeries::Trivial),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// Construct a named series over the rationals in the indeterminate `z`.
pub fn named_series(name: NamedSeries, order: usize) -> PowerSeries<Rat> {
    let var = "z";
    match name {
        NamedSeries::Sinh => sinh(var, order),
        NamedSeries::Tanh => {
            // tanh = sinh / cosh
            let s = sinh(var, order);
            let c = cosh(var, order);
            s.mul(&c.inverse().expect("cosh(0)=1")).expect("same var")
        }
        NamedSeries::Artanh => {
            let mut coeffs = vec![Rat::zero(); order + 1];
            let mut k = 1usize;
            while k <= order {
                coeffs[k] = Rat::new(1.into(), (k as i64).into());
                k += 2;
            }
            PowerSeries::from_coeffs(var, coeffs)
        }
        NamedSeries::Arsinh => {
            // d/dz arsinh z = (1+z^2)^{-1/2} = sum (-1/4)^k C(2k,k) z^{2k},
            // integrated termwise
            if order == 0 {
                return PowerSeries::zero(var, 0);
            }
            let mut deriv = vec![Rat::zero(); order];
            let quarter = Rat::new((-1).into(), 4.into());
            let mut factor = Rat::one();
            for k in 0..=(order - 1) / 2 {
                deriv[2 * k] = &factor * Rat::from_integer(central_binomial(k));
                factor *= &quarter;
            }
            PowerSeries::from_coeffs(var, deriv).integrate()
        }
        NamedSeries::LGenus => {
            // z/tanh z = 1 / (tanh(z)/z)
            let t = named_series(NamedSeries::Tanh, order + 1);
            let shifted = PowerSeries::from_coeffs(var, t.coeffs()[1..].to_vec());
            shifted.inverse().expect("tanh(z)/z has constant term 1")
        }
        NamedSeries::AHat => {
            // (z/2)/sinh(z/2) = 1 / (sinh(z/2) / (z/2))
            let half = Rat::new(1.into(), 2.into());
            let s = sinh(var, order + 1);
            let mut scaled = Vec::with_capacity(order + 1);
            let mut factor = half.clone();
            for k in 1..=order + 1 {
                scaled.push(s.coeff(k) * &factor / &half);
                factor *= &half;
            }
            let shifted = PowerSeries::from_coeffs(var, scaled);
            shifted.inverse().expect("sinh(z/2)/(z/2) has constant term 1")
        }
        NamedSeries::Trivial => PowerSeries::one(var, order),
    }
}

fn sinh(var: &str, order: usize) -> PowerSeries<Rat> {
    let mut coeffs = vec![Rat::zero(); order + 1];
    let mut k = 1usize;
    while k <= order {
        coeffs[k] = Rat::new(1.into(), factorial(k));
        k += 2;
    }
    PowerSeries::from_coeffs(var, coeffs)
}

fn cosh(var: &str, order: usize) -> PowerSeries<Rat> {
    let mut coeffs = vec![Rat::zero(); order + 1];
    let mut k = 0usize;
    while k <= order {
        coeffs[k] = Rat::new(1.into(), factorial(k));
        k += 2;
    }
    PowerSeries::from_coeffs(var, coeffs)
}

/// Parametric series over Q[t] used by the quantized classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ParametricSeries {
    /// P(t, z) = 1 + 2t (cosh z - 1)
    QuantizedPontryagin,
    /// S(t, z) = (1 - 2t (cosh z - 1))^{-1}
    QuantizedSymmetric,
    /// C(t, z) = 1 + t (e^z - 1)
    QuantizedChern,
}

/// Construct a parametric series over polynomial coefficients in `t`.
pub fn parametric_series(name: ParametricSeries, order: usize) -> PowerSeries<RatPoly> {
    let var = "z";
    let t = RatPoly::x();
    match name {
        ParametricSeries::QuantizedPontryagin => {
            let c = cosh(var, order);
            let mut coeffs: Vec<RatPoly> = c
                .coeffs()
                .iter()
                .map(|ck| t.scale(ck).scale(&Rat::from_integer(2.into())))
                .collect();
            // subtract 2t and add 1 in degree zero
            coeffs[0] = RatPoly::one();
            PowerSeries::from_coeffs(var, coeffs)
        }
        ParametricSeries::QuantizedSymmetric => {
            let p = parametric_series(ParametricSeries::QuantizedPontryagin, order);
            let two_minus = PowerSeries::constant(var, RatPoly::from_rat(Rat::from_integer(2.into())), order)
                .sub(&p)
                .expect("same var");
            two_minus.inverse().expect("constant term 1")
        }
        ParametricSeries::QuantizedChern => {
            let mut coeffs = Vec::with_capacity(order + 1);
            coeffs.push(RatPoly::one());
            for k in 1..=order {
                coeffs.push(t.scale(&Rat::new(1.into(), factorial(k))));
            }
            PowerSeries::from_coeffs(var, coeffs)
        }
    }
}

/// Coefficient of `t^k` in each `z`-coefficient, as a scalar series.
pub fn t_coefficient(series: &PowerSeries<RatPoly>, k: usize) -> PowerSeries<Rat> {
    series.map_coeffs(|p| p.coeff(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn series(coeffs: &[(i64, i64)]) -> PowerSeries<Rat> {
        PowerSeries::from_coeffs("z", coeffs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn mul_examples() {
        let a = series(&[(1, 1), (1, 1), (0, 1)]);
        let b = series(&[(1, 1), (-1, 1), (0, 1)]);
        assert_eq!(a.mul(&b).unwrap(), series(&[(1, 1), (0, 1), (-1, 1)]));
        // identity element
        let one = PowerSeries::one("z", 2);
        assert_eq!(one.mul(&a).unwrap(), a);
        // geometric series telescoping
        let geo = PowerSeries::from_coeffs("z", vec![rat_int(1); 7]);
        let lin = {
            let mut l = PowerSeries::one("z", 6);
            l = l.sub(&PowerSeries::identity("z", 6)).unwrap();
            l
        };
        assert_eq!(geo.mul(&lin).unwrap(), PowerSeries::one("z", 6));
    }

    #[test]
    fn indeterminate_mismatch() {
        let a = PowerSeries::<Rat>::one("z", 2);
        let b = PowerSeries::<Rat>::one("w", 2);
        assert!(matches!(a.mul(&b), Err(Error::IndeterminateMismatch(_, _))));
    }

    #[test]
    fn inverse_examples() {
        // 1 - z -> geometric series
        let a = PowerSeries::one("z", 5).sub(&PowerSeries::identity("z", 5)).unwrap();
        assert_eq!(a.inverse().unwrap(), PowerSeries::from_coeffs("z", vec![rat_int(1); 6]));
        assert_eq!(PowerSeries::<Rat>::one("z", 4).inverse().unwrap(), PowerSeries::one("z", 4));
        // long-division oracle: 1 + z^2/3 to order 6
        let b = PowerSeries::from_coeffs(
            "z",
            vec![rat_int(1), rat_int(0), rat(1, 3), rat_int(0), rat_int(0), rat_int(0), rat_int(0)],
        );
        let expect = PowerSeries::from_coeffs(
            "z",
            vec![rat_int(1), rat_int(0), rat(-1, 3), rat_int(0), rat(1, 9), rat_int(0), rat(-1, 27)],
        );
        assert_eq!(b.inverse().unwrap(), expect);
        assert!(PowerSeries::<Rat>::zero("z", 3).inverse().is_err());
    }

    #[test]
    fn log_exp_zddz() {
        assert_eq!(PowerSeries::<Rat>::zero("z", 4).exp().unwrap(), PowerSeries::one("z", 4));
        // log(1+z) by termwise integration of the geometric series
        let one_plus = PowerSeries::one("z", 6).add(&PowerSeries::identity("z", 6)).unwrap();
        let geo_alt = PowerSeries::from_coeffs(
            "z",
            (0..6).map(|k| if k % 2 == 0 { rat_int(1) } else { rat_int(-1) }).collect(),
        );
        assert_eq!(one_plus.log().unwrap(), geo_alt.integrate());
        // z d/dz
        let s = series(&[(1, 1), (0, 1), (3, 1)]);
        assert_eq!(s.z_ddz(), series(&[(0, 1), (0, 1), (6, 1)]));
        // round trips
        let a = series(&[(0, 1), (1, 2), (-2, 3), (1, 5)]);
        assert_eq!(a.exp().unwrap().log().unwrap(), a);
        let b = series(&[(1, 1), (1, 7), (3, 2), (-1, 4)]);
        assert_eq!(b.log().unwrap().exp().unwrap(), b);
        assert!(b.exp().is_err());
        assert!(a.log().is_err());
    }

    #[test]
    fn compose_examples() {
        // z^2 o (z + z^2) = z^2 + 2z^3 + z^4
        let outer = series(&[(0, 1), (0, 1), (1, 1), (0, 1), (0, 1)]);
        let inner = series(&[(0, 1), (1, 1), (1, 1), (0, 1), (0, 1)]);
        assert_eq!(
            outer.compose(&inner).unwrap(),
            series(&[(0, 1), (0, 1), (1, 1), (2, 1), (1, 1)])
        );
        // identity inner
        let any = series(&[(2, 3), (1, 1), (-5, 7), (0, 1), (1, 9)]);
        assert_eq!(any.compose(&PowerSeries::identity("z", 4)).unwrap(), any);
        // 1/(1-z) o z/(1-z) = (1-z)/(1-2z)
        let geo = PowerSeries::from_coeffs("z", vec![rat_int(1); 5]);
        let zgeo = PowerSeries::from_coeffs(
            "z",
            vec![rat_int(0), rat_int(1), rat_int(1), rat_int(1), rat_int(1)],
        );
        let composed = geo.compose(&zgeo).unwrap();
        assert_eq!(
            composed,
            series(&[(1, 1), (1, 1), (2, 1), (4, 1), (8, 1)])
        );
        assert!(geo.compose(&geo).is_err());
    }

    #[test]
    fn comp_inverse_examples() {
        // inverse of z is z
        let id = PowerSeries::<Rat>::identity("z", 5);
        assert_eq!(id.comp_inverse_newton().unwrap(), id);
        assert_eq!(id.comp_inverse_lagrange().unwrap(), id);
        // tanh -> artanh
        let tanh = named_series(NamedSeries::Tanh, 7);
        assert_eq!(
            tanh.coeffs(),
            series(&[(0, 1), (1, 1), (0, 1), (-1, 3), (0, 1), (2, 15), (0, 1), (-17, 315)])
                .coeffs()
        );
        let artanh = named_series(NamedSeries::Artanh, 7);
        assert_eq!(tanh.comp_inverse_newton().unwrap(), artanh);
        assert_eq!(tanh.comp_inverse_lagrange().unwrap(), artanh);
        // z - z^2: Catalan-number recurrence oracle
        let a = series(&[(0, 1), (1, 1), (-1, 1), (0, 1), (0, 1)]);
        // phi = sum_n C_{n-1} z^n with Catalan numbers 1,1,2,5
        let expect = series(&[(0, 1), (1, 1), (1, 1), (2, 1), (5, 1)]);
        assert_eq!(a.comp_inverse_newton().unwrap(), expect);
        assert_eq!(a.comp_inverse_lagrange().unwrap(), expect);
        // both directions compose to the identity
        let phi = a.comp_inverse().unwrap();
        assert_eq!(a.compose(&phi).unwrap(), PowerSeries::identity("z", 4));
        assert_eq!(phi.compose(&a).unwrap(), PowerSeries::identity("z", 4));
        // errors
        assert!(series(&[(1, 1), (1, 1)]).comp_inverse().is_err());
        assert!(series(&[(0, 1), (0, 1), (1, 1)]).comp_inverse().is_err());
    }

    #[test]
    fn residue_contract() {
        let one = PowerSeries::<Rat>::one("z", 4);
        assert_eq!(one.residue(1).unwrap(), rat_int(1));
        assert_eq!(one.residue(5).unwrap(), rat_int(0));
        assert!(matches!(
            one.residue(6),
            Err(Error::InsufficientTruncation { needed: 5, have: 4 })
        ));
    }

    #[test]
    fn ode_solver() {
        // p = 1 + f^2 -> tan
        let p = series(&[(1, 1), (0, 1), (1, 1), (0, 1), (0, 1), (0, 1)]);
        let tan = PowerSeries::ode_solve_autonomous(&p, 6).unwrap();
        assert_eq!(
            tan,
            series(&[(0, 1), (1, 1), (0, 1), (1, 3), (0, 1), (2, 15), (0, 1)])
        );
        // p = 1 - f^2 -> tanh
        let p = series(&[(1, 1), (0, 1), (-1, 1), (0, 1), (0, 1), (0, 1)]);
        let tanh = PowerSeries::ode_solve_autonomous(&p, 6).unwrap();
        assert_eq!(tanh, named_series(NamedSeries::Tanh, 6));
        // p = 1 -> z
        let p = PowerSeries::<Rat>::one("z", 5);
        assert_eq!(
            PowerSeries::ode_solve_autonomous(&p, 5).unwrap(),
            PowerSeries::identity("z", 5)
        );
        // f' = p(f) termwise
        let f = named_series(NamedSeries::Tanh, 9);
        let p = series(&[(1, 1), (0, 1), (-1, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)]);
        let lhs = f.derivative();
        let rhs = p.truncated(8).compose(&f.truncated(8)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn named_series_values() {
        // arsinh to order 3: z - z^3/6
        let a = named_series(NamedSeries::Arsinh, 3);
        assert_eq!(a, series(&[(0, 1), (1, 1), (0, 1), (-1, 6)]));
        // L to order 4: 1 + z^2/3 - z^4/45, via independent division oracle
        let l = named_series(NamedSeries::LGenus, 4);
        assert_eq!(l, series(&[(1, 1), (0, 1), (1, 3), (0, 1), (-1, 45)]));
        // direct check: L * tanh = z
        let prod = l.mul(&named_series(NamedSeries::Tanh, 4)).unwrap();
        assert_eq!(prod, PowerSeries::identity("z", 4));
        // A-hat to order 4: 1 - z^2/24 + 7z^4/5760
        let ahat = named_series(NamedSeries::AHat, 4);
        assert_eq!(ahat, series(&[(1, 1), (0, 1), (-1, 24), (0, 1), (7, 5760)]));
        // parity predicates
        assert!(l.is_even());
        assert!(named_series(NamedSeries::Sinh, 7).is_odd());
    }

    #[test]
    fn parametric_series_values() {
        let p = parametric_series(ParametricSeries::QuantizedPontryagin, 4);
        // coefficient of z^2 is t, of z^4 is t/12
        assert_eq!(p.coeff(0), RatPoly::one());
        assert_eq!(p.coeff(2), RatPoly::monomial(rat_int(1), 1));
        assert_eq!(p.coeff(4), RatPoly::monomial(rat(1, 12), 1));
        // S * (2 - P) = 1
        let s = parametric_series(ParametricSeries::QuantizedSymmetric, 6);
        let p6 = parametric_series(ParametricSeries::QuantizedPontryagin, 6);
        let two = PowerSeries::constant("z", RatPoly::from_rat(rat_int(2)), 6);
        let prod = s.mul(&two.sub(&p6).unwrap()).unwrap();
        assert_eq!(prod, PowerSeries::one("z", 6));
        // C(t,z) coefficient of z^k is t/k!
        let c = parametric_series(ParametricSeries::QuantizedChern, 3);
        assert_eq!(c.coeff(3), RatPoly::monomial(rat(1, 6), 1));
    }

    #[test]
    fn z_dlog_on_monomial_lead() {
        // g = 2 z (1 - z^2/6): z dlog g = 1 + z h'/h
        let g = series(&[(0, 1), (2, 1), (0, 1), (-1, 3)]);
        let out = g.z_dlog().unwrap();
        // h = 1 - z^2/6, h' = -z/3, z h'/h = -z^2/3 (1 + z^2/6 + ...)
        assert_eq!(out.coeff(0), rat_int(1));
        assert_eq!(out.coeff(2), rat(-1, 3));
        assert!(PowerSeries::<Rat>::zero("z", 2).z_dlog().is_err());
    }

    #[test]
    fn json_shape() {
        let s = series(&[(1, 1), (-1, 8)]);
        let v = s.to_json();
        assert_eq!(v["indeterminate"], "z");
        assert_eq!(v["order"], 1);
        assert_eq!(v["coefficients"][1], "-1/8");
    }
}
