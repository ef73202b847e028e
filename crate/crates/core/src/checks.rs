//! Named identity suites, shared by the CLI `check` subcommand and the
//! acceptance tests. Each suite pre-draws its randomized inputs from a
//! seed, then evaluates the independent cases over a worker pool; the
//! outcome is deterministic and independent of the worker count.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use crate::error::Result;
use crate::genus::{
    ch_exterior_identity_check, ch_symmetric_identity_check, MultiplicativeSequence,
};
use crate::graded::{GeneratorTable, GradedElement};
use crate::rational::{rat_int, Rat};
use crate::ring::CoeffRing;
use crate::series::{named_series, NamedSeries, PowerSeries};
use crate::transgression::null_reduction_check;

/// Outcome of one suite: how many cases ran and which failed.
#[derive(Clone, Debug)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Deterministic split-mix generator; keeps the library free of RNG
/// dependencies while making every sweep reproducible from its seed.
#[derive(Clone, Debug)]
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in 0..bound.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    /// Rational with numerator in [-max, max] and denominator in [1, max].
    pub fn rat(&mut self, max: u64) -> Rat {
        let num = self.below(2 * max + 1) as i64 - max as i64;
        let den = self.below(max) as i64 + 1;
        Rat::new(num.into(), den.into())
    }

    /// Nonzero rational with the same bounds.
    pub fn nonzero_rat(&mut self, max: u64) -> Rat {
        loop {
            let r = self.rat(max);
            if !CoeffRing::is_zero(&r) {
                return r;
            }
        }
    }
}

/// Evaluate `count` independent cases over `workers` threads, preserving
/// case order in the result.
fn par_cases<T, F>(count: usize, workers: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    let workers = workers.max(1).min(count.max(1));
    if workers <= 1 {
        return (0..count).map(f).collect();
    }
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<(usize, T)>> = Mutex::new(Vec::with_capacity(count));
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= count {
                    break;
                }
                let value = f(i);
                results.lock().expect("suite worker panicked").push((i, value));
            });
        }
    });
    let mut results = results.into_inner().expect("suite worker panicked");
    results.sort_by_key(|(i, _)| *i);
    results.into_iter().map(|(_, v)| v).collect()
}

fn collect_failures(results: Vec<Result<Vec<String>>>) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    for r in results {
        failures.extend(r?);
    }
    Ok(failures)
}

/// Random even series `1 + c_2 z^2 + c_4 z^4 + ...` with small rational
/// coefficients.
pub fn random_even_one_series(rng: &mut SplitMix64, order: usize, max: u64) -> PowerSeries<Rat> {
    let mut coeffs = vec![Rat::zero(); order + 1];
    coeffs[0] = rat_int(1);
    let mut k = 2;
    while k <= order {
        coeffs[k] = rng.rat(max);
        k += 2;
    }
    PowerSeries::from_coeffs("z", coeffs)
}

/// Random series with `a(0) = 0` and invertible linear term.
pub fn random_comp_invertible(rng: &mut SplitMix64, order: usize, max: u64) -> PowerSeries<Rat> {
    let mut coeffs = vec![Rat::zero(); order + 1];
    coeffs[1] = rng.nonzero_rat(max);
    for c in coeffs.iter_mut().skip(2) {
        *c = rng.rat(max);
    }
    PowerSeries::from_coeffs("z", coeffs)
}

/// Residue identity of the ball-value theorem:
/// `res[F^n / z^{n+1}] = res[(log phi)' / z^n]` for randomized even `F`.
pub fn mult_identity(
    trials: usize,
    order: usize,
    n_max: usize,
    seed: u64,
    workers: usize,
) -> Result<CheckOutcome> {
    let mut rng = SplitMix64(seed);
    let inputs: Vec<PowerSeries<Rat>> =
        (0..trials).map(|_| random_even_one_series(&mut rng, order, 100)).collect();
    let n_top = n_max.min(order.saturating_sub(1));
    let results = par_cases(trials, workers, |trial| -> Result<Vec<String>> {
        let seq = MultiplicativeSequence::new(inputs[trial].clone())?;
        let mut failures = Vec::new();
        for n in 1..=n_top {
            let (power_form, log_form) = seq.ball_residue_forms(n)?;
            if power_form != log_form {
                failures.push(format!("trial {trial}, n={n}: {power_form} != {log_form}"));
            }
        }
        Ok(failures)
    });
    Ok(CheckOutcome {
        name: "mult-identity",
        cases: trials * n_top,
        failures: collect_failures(results)?,
    })
}

/// Agreement of the two compositional-inverse algorithms, plus the
/// fixed tanh/artanh cross-check.
pub fn comp_inverse_agreement(
    trials: usize,
    order: usize,
    seed: u64,
    workers: usize,
) -> Result<CheckOutcome> {
    let mut rng = SplitMix64(seed);
    let inputs: Vec<PowerSeries<Rat>> =
        (0..trials).map(|_| random_comp_invertible(&mut rng, order, 10)).collect();
    let mut failures = Vec::new();
    let tanh = named_series(NamedSeries::Tanh, order.max(7));
    let artanh = named_series(NamedSeries::Artanh, order.max(7));
    if tanh.comp_inverse_newton()? != artanh || tanh.comp_inverse_lagrange()? != artanh {
        failures.push("comp_inverse(tanh) != artanh".to_string());
    }
    let results = par_cases(trials, workers, |trial| -> Result<Vec<String>> {
        let a = &inputs[trial];
        if a.comp_inverse_newton()? != a.comp_inverse_lagrange()? {
            Ok(vec![format!("trial {trial}: Newton and Lagrange paths disagree")])
        } else {
            Ok(vec![])
        }
    });
    failures.extend(collect_failures(results)?);
    Ok(CheckOutcome { name: "comp-inverse", cases: trials + 1, failures })
}

fn random_scaled(rng: &mut SplitMix64, g: &GradedElement, max: u64) -> GradedElement {
    g.scale_rat(&rng.rat(max))
}

/// Vanishing of the ODE residuals on the closed-form solution, for the
/// three fixed generator configurations and `extra` randomized ones at
/// degree bound 16 and t-degree bound 12.
pub fn etf_ode(extra: usize, seed: u64, workers: usize) -> Result<CheckOutcome> {
    let mut rng = SplitMix64(seed);
    let table =
        GeneratorTable::new(&[("g3", 3), ("g5", 5), ("g7", 7), ("g4", 4), ("g4p", 4), ("g8", 8)])?;
    let d = 16;
    let tt = 12;
    let g = |i: usize| GradedElement::generator(&table, d, tt, i);
    let zero = GradedElement::zero(&table, d, tt);

    let mut configs: Vec<(GradedElement, GradedElement, GradedElement)> = vec![
        (g(0), zero.clone(), zero.clone()),
        (g(0), zero.clone(), g(3)),
        (g(0).add(&g(1))?, g(3), g(4)),
    ];
    for _ in 0..extra {
        let xi = random_scaled(&mut rng, &g(0), 6)
            .add(&random_scaled(&mut rng, &g(1), 6))?
            .add(&random_scaled(&mut rng, &g(2), 6))?;
        let psi = random_scaled(&mut rng, &g(3), 6).add(&random_scaled(&mut rng, &g(5), 6))?;
        let big = random_scaled(&mut rng, &g(4), 6).add(&random_scaled(&mut rng, &g(5), 6))?;
        configs.push((xi, psi, big));
    }
    let results = par_cases(configs.len(), workers, |i| -> Result<Vec<String>> {
        let (xi, psi, big) = &configs[i];
        let (r1, r2, r3) = crate::graded::etf_ode_residual(xi, psi, big)?;
        if !r1.is_zero() || !r2.is_zero() || !r3.is_zero() {
            Ok(vec![format!("configuration {i}: nonzero residual")])
        } else {
            Ok(vec![])
        }
    });
    Ok(CheckOutcome { name: "etf-ode", cases: configs.len(), failures: collect_failures(results)? })
}

/// The residue chain of the ball-value reduction for L, A-hat and
/// randomized even series.
pub fn null_reduction(
    extra: usize,
    n_max: usize,
    order: usize,
    seed: u64,
    workers: usize,
) -> Result<CheckOutcome> {
    let mut rng = SplitMix64(seed);
    let mut sequences = vec![
        ("L".to_string(), MultiplicativeSequence::from_named(NamedSeries::LGenus, order)?),
        ("A-hat".to_string(), MultiplicativeSequence::from_named(NamedSeries::AHat, order)?),
    ];
    for trial in 0..extra {
        let f = random_even_one_series(&mut rng, order, 20);
        sequences.push((format!("random {trial}"), MultiplicativeSequence::new(f)?));
    }
    let n_top = n_max.min(order.saturating_sub(1));
    let results = par_cases(sequences.len(), workers, |i| -> Result<Vec<String>> {
        let (label, seq) = &sequences[i];
        let mut failures = Vec::new();
        for n in 1..=n_top {
            let witness = null_reduction_check(seq, n, order)?;
            if !witness.passed() {
                failures.push(format!("{label}, n={n}"));
            }
        }
        Ok(failures)
    });
    Ok(CheckOutcome {
        name: "null-reduction",
        cases: sequences.len() * n_top,
        failures: collect_failures(results)?,
    })
}

/// Splitting-principle identity for Chern characters of exterior powers.
pub fn ch_exterior(m_max: usize, d_max: usize, weight: usize, workers: usize) -> Result<CheckOutcome> {
    let grid: Vec<(usize, usize)> =
        (1..=m_max).flat_map(|m| (0..=d_max).map(move |d| (m, d))).collect();
    let results = par_cases(grid.len(), workers, |i| -> Result<Vec<String>> {
        let (m, d) = grid[i];
        let witness = ch_exterior_identity_check(m, d, weight)?;
        if witness.equal {
            Ok(vec![])
        } else {
            Ok(vec![format!("m={m}, d={d}")])
        }
    });
    Ok(CheckOutcome { name: "ch-exterior", cases: grid.len(), failures: collect_failures(results)? })
}

/// Splitting-principle identity for Chern characters of symmetric powers.
pub fn ch_symmetric(m_max: usize, d_max: usize, weight: usize, workers: usize) -> Result<CheckOutcome> {
    let grid: Vec<(usize, usize)> =
        (1..=m_max).flat_map(|m| (0..=d_max).map(move |d| (m, d))).collect();
    let results = par_cases(grid.len(), workers, |i| -> Result<Vec<String>> {
        let (m, d) = grid[i];
        let witness = ch_symmetric_identity_check(m, d, weight)?;
        if witness.equal {
            Ok(vec![])
        } else {
            Ok(vec![format!("m={m}, d={d}")])
        }
    });
    Ok(CheckOutcome { name: "ch-symmetric", cases: grid.len(), failures: collect_failures(results)? })
}
