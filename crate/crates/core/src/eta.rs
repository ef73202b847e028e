//! Generating functions of reduced eta-invariants on Berger spheres.
//!
//! For the Berger metric of parameter `rho` on `S^{2n-1}` the reduced
//! eta-invariants of the untwisted Dirac and the signature operator have
//! the generating functions
//!
//! ```text
//! 1 + (1/2) sum_n eta_D(S^{2n-1}) z^n  =  z d/dz log(2 arsinh(rho z / 2))
//! 1 +       sum_n eta_S(S^{2n-1}) z^n  =  z d/dz log(artanh(rho z))
//! ```
//!
//! each with an equivalent ratio form built from central binomial
//! coefficients. Both forms are computed with `rho` symbolic and compared
//! coefficientwise; a mismatch is an internal error. `habel_eta`
//! implements the conjectural residue formula and `verify_habel` runs the
//! agreement sweep against the ratio form over a worker pool.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::One;
use crate::error::{Error, Result};
use crate::poly::RatPoly;
use crate::rational::{central_binomial, rat_int, rat_to_string, Rat};
use crate::ring::CoeffRing;
use crate::series::{named_series, NamedSeries, PowerSeries};
use crate::special::BernoulliTable;

/// Which operator an eta series belongs to.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OperatorKind {
    Dirac,
    Signature,
}

impl OperatorKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "dirac" => Ok(OperatorKind::Dirac),
            "signature" => Ok(OperatorKind::Signature),
            other => Err(Error::UnknownName(other.to_string())),
        }
    }
}

/// Reduced eta-invariants `eta_n` as polynomials in `rho`, indexed by `n`
/// (the sphere `S^{2n-1}`), up to a truncation order.
#[derive(Clone, Debug, PartialEq)]
pub struct EtaSeries {
    operator: OperatorKind,
    values: Vec<RatPoly>,
}

impl EtaSeries {
    fn from_generating(operator: OperatorKind, gf: &PowerSeries<RatPoly>) -> Self {
        // Dirac: 1 + (1/2) sum eta_n z^n; signature: 1 + sum eta_n z^n
        let unpack = match operator {
            OperatorKind::Dirac => rat_int(2),
            OperatorKind::Signature => rat_int(1),
        };
        let mut values = vec![RatPoly::zero()];
        for n in 1..=gf.truncation_order() {
            values.push(gf.coeff(n).scale(&unpack));
        }
        EtaSeries { operator, values }
    }

    pub fn operator(&self) -> OperatorKind {
        self.operator
    }

    /// Largest `n` with a stored value.
    pub fn order(&self) -> usize {
        self.values.len() - 1
    }

    /// `eta_n` as a polynomial in `rho`.
    pub fn value(&self, n: usize) -> &RatPoly {
        &self.values[n]
    }
}

fn dirac_gf_arsinh(order: usize) -> Result<PowerSeries<RatPoly>> {
    // 2 arsinh(rho z / 2), built over polynomials in rho
    let arsinh = named_series(NamedSeries::Arsinh, order + 1);
    let scaled = arsinh.substitute_rho_scaled(&Rat::new(1.into(), 2.into()));
    let g = scaled.scale(&RatPoly::from_rat(Rat::from_integer(2.into())));
    g.z_dlog()
}

fn dirac_gf_ratio(order: usize) -> Result<PowerSeries<RatPoly>> {
    // numerator   sum_k (-1/16)^k C(2k,k) (rho z)^{2k}
    // denominator sum_k (-1/16)^k C(2k,k) (rho z)^{2k} / (2k+1)
    let mut num = vec![RatPoly::zero(); order + 1];
    let mut den = vec![RatPoly::zero(); order + 1];
    let step = Rat::new((-1).into(), 16.into());
    let mut factor = rat_int(1);
    for k in 0..=order / 2 {
        let c = &factor * Rat::from_integer(central_binomial(k));
        num[2 * k] = RatPoly::monomial(c.clone(), 2 * k);
        den[2 * k] = RatPoly::monomial(c / Rat::from_integer(BigInt::from(2 * k + 1)), 2 * k);
        factor *= &step;
    }
    let num = PowerSeries::from_coeffs("z", num);
    let den = PowerSeries::from_coeffs("z", den);
    num.mul(&den.inverse()?)
}

fn signature_gf_artanh(order: usize) -> Result<PowerSeries<RatPoly>> {
    let artanh = named_series(NamedSeries::Artanh, order + 1);
    let g = artanh.substitute_rho_scaled(&rat_int(1));
    g.z_dlog()
}

fn signature_gf_ratio(order: usize) -> Result<PowerSeries<RatPoly>> {
    // (sum_k (rho z)^{2k}) / (sum_k (rho z)^{2k} / (2k+1))
    let mut num = vec![RatPoly::zero(); order + 1];
    let mut den = vec![RatPoly::zero(); order + 1];
    for k in 0..=order / 2 {
        num[2 * k] = RatPoly::monomial(rat_int(1), 2 * k);
        den[2 * k] = RatPoly::monomial(Rat::new(1.into(), ((2 * k + 1) as i64).into()), 2 * k);
    }
    let num = PowerSeries::from_coeffs("z", num);
    let den = PowerSeries::from_coeffs("z", den);
    num.mul(&den.inverse()?)
}

/// Dirac eta series from the arsinh form of the generating function.
pub fn dirac_eta_generating(order: usize) -> Result<EtaSeries> {
    assert!(order >= 1);
    Ok(EtaSeries::from_generating(OperatorKind::Dirac, &dirac_gf_arsinh(order)?))
}

/// Dirac eta series from the central-binomial ratio form. The arsinh form
/// is recomputed and compared coefficientwise; disagreement is an internal
/// error.
pub fn dirac_eta_ratio(order: usize) -> Result<EtaSeries> {
    assert!(order >= 1);
    let ratio = dirac_gf_ratio(order)?;
    if ratio != dirac_gf_arsinh(order)? {
        return Err(Error::FormMismatch("dirac eta: ratio vs arsinh form"));
    }
    Ok(EtaSeries::from_generating(OperatorKind::Dirac, &ratio))
}

/// Signature eta series from the artanh form.
pub fn signature_eta_generating(order: usize) -> Result<EtaSeries> {
    assert!(order >= 1);
    Ok(EtaSeries::from_generating(OperatorKind::Signature, &signature_gf_artanh(order)?))
}

/// Signature eta series from the ratio form, cross-checked against the
/// artanh form.
pub fn signature_eta_ratio(order: usize) -> Result<EtaSeries> {
    assert!(order >= 1);
    let ratio = signature_gf_ratio(order)?;
    if ratio != signature_gf_artanh(order)? {
        return Err(Error::FormMismatch("signature eta: ratio vs artanh form"));
    }
    Ok(EtaSeries::from_generating(OperatorKind::Signature, &ratio))
}

/// Habel's conjectural formula for the Dirac eta-invariant on `S^{2n-1}`:
///
/// ```text
/// eta_n = -2 (-rho)^n res_{x=0}[ dx/x^n (sum_{l=1}^n B_l(n/2)/l x^{n-l})
///                                 C(x + n/2 - 1, n - 1) ]
/// ```
pub fn habel_eta(n: usize) -> RatPoly {
    let table = BernoulliTable::up_to(n);
    habel_eta_with_table(n, &table)
}

/// As [`habel_eta`], reusing a shared Bernoulli-number table (the sweep
/// workers share one).
pub fn habel_eta_with_table(n: usize, table: &BernoulliTable) -> RatPoly {
    assert!(n >= 1);
    let half_n = Rat::new((n as i64).into(), 2.into());
    let mut y_pows = Vec::with_capacity(n + 1);
    y_pows.push(rat_int(1));
    for _ in 0..n {
        y_pows.push(y_pows.last().unwrap() * &half_n);
    }
    // inner polynomial sum_l B_l(n/2)/l x^{n-l}: coefficient of x^j is
    // B_{n-j}(n/2)/(n-j)
    let bin = crate::special::binomial_polynomial(&(half_n - rat_int(1)), n - 1);
    // residue against dx/x^n: the x^{n-1} coefficient of the product
    let mut coeff = rat_int(0);
    for j in 0..n {
        let l = n - j;
        let b = table.eval(l, &y_pows);
        if CoeffRing::is_zero(&b) {
            continue;
        }
        let bin_c = bin.coeff(n - 1 - j);
        if CoeffRing::is_zero(&bin_c) {
            continue;
        }
        coeff += b / Rat::from_integer((l as i64).into()) * bin_c;
    }
    let sign = if n % 2 == 0 { -2i64 } else { 2i64 };
    RatPoly::monomial(coeff * Rat::from_integer(sign.into()), n)
}

/// One row of the Habel agreement sweep.
#[derive(Clone, Debug)]
pub struct HabelRow {
    pub n: usize,
    /// Habel's formula, a rational multiple of rho^n.
    pub habel: RatPoly,
    /// The coefficient from the ratio form of the generating function.
    pub ratio: RatPoly,
    /// habel - ratio.
    pub difference: RatPoly,
    pub agree: bool,
    /// When the values disagree: whether the difference is still an
    /// integer multiple of rho^n (agreement of the reduced invariants
    /// modulo Z).
    pub integer_difference: Option<bool>,
}

impl HabelRow {
    /// The documented JSON-lines schema.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "habel": rat_to_string(&self.habel.coeff(self.n)),
            "ratio": rat_to_string(&self.ratio.coeff(self.n)),
            "agree": self.agree,
        })
    }
}

/// Result of the agreement sweep `n = 1..n_max`.
#[derive(Clone, Debug)]
pub struct HabelReport {
    pub rows: Vec<HabelRow>,
    pub wall_time: Duration,
    pub workers: usize,
}

impl HabelReport {
    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(|r| r.agree)
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for row in &self.rows {
            out.push_str(&row.to_json().to_string());
            out.push('\n');
        }
        out
    }
}

/// Compare `habel_eta(n)` with the ratio-form coefficient for every
/// `n = 1..n_max`, distributing the independent values over `workers`
/// threads. The outcome is deterministic and independent of the worker
/// count.
pub fn verify_habel(n_max: usize, workers: usize) -> Result<HabelReport> {
    assert!(n_max >= 1);
    let started = Instant::now();
    let workers = workers.max(1);
    let ratio = dirac_eta_ratio(n_max)?;
    let table = BernoulliTable::up_to(n_max);
    let next = AtomicUsize::new(1);
    let rows: Mutex<Vec<HabelRow>> = Mutex::new(Vec::with_capacity(n_max));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let n = next.fetch_add(1, Ordering::Relaxed);
                if n > n_max {
                    break;
                }
                let habel = habel_eta_with_table(n, &table);
                let ratio_n = ratio.value(n).clone();
                let difference = habel.sub(&ratio_n);
                let agree = difference.is_zero();
                let integer_difference = if agree {
                    None
                } else {
                    let c = difference.coeff(n);
                    let only_rho_n = difference == RatPoly::monomial(c.clone(), n);
                    Some(only_rho_n && c.denom().is_one())
                };
                let row = HabelRow { n, habel, ratio: ratio_n, difference, agree, integer_difference };
                rows.lock().expect("sweep worker poisoned the row list").push(row);
            });
        }
    });
    let mut rows = rows.into_inner().expect("sweep worker poisoned the row list");
    rows.sort_by_key(|r| r.n);
    Ok(HabelReport { rows, wall_time: started.elapsed(), workers })
}
