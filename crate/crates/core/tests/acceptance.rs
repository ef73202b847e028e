//! Acceptance suite: every release gate runs here, one test per
//! criterion, each printing a pass line (run with `--nocapture` to see
//! them). All comparisons are exact; there are no tolerances.

use berger_eta::checks;
use berger_eta::eta::{dirac_eta_ratio, signature_eta_ratio, verify_habel};
use berger_eta::genus::{quantized_pontryagin, sequence_from_cp_values, MultiplicativeSequence};
use berger_eta::poly::RatPoly;
use berger_eta::rational::{central_binomial, rat, rat_int, Rat};
use berger_eta::ring::CoeffRing;
use berger_eta::series::{named_series, NamedSeries};
use berger_eta::weighted::WeightedPolynomial;

const SEED: u64 = 0x0be4_9e7a;

#[test]
fn criterion_01_habel_agreement_sweep_to_200() {
    let report = verify_habel(200, 4).unwrap();
    for row in &report.rows {
        assert!(
            row.agree,
            "Habel formula disagrees at n={}: difference {}",
            row.n,
            row.difference.to_string_with_var("rho")
        );
    }
    println!(
        "criterion 01 (Habel sweep n=1..200, exact): PASS in {:?}",
        report.wall_time
    );
}

#[test]
fn criterion_02_habel_low_dimension_regression() {
    let report = verify_habel(16, 1).unwrap();
    for row in report.rows.iter().filter(|r| (3..=16).contains(&r.n)) {
        assert!(row.agree, "disagreement at n={}", row.n);
    }
    println!("criterion 02 (Habel regression n=3..16, exact): PASS");
}

#[test]
fn criterion_03_a_hat_cp_values() {
    let seq = MultiplicativeSequence::from_named(NamedSeries::AHat, 100).unwrap();
    let values = seq.cp_values(100).unwrap();
    let sixteenth = rat(-1, 16);
    let mut factor = rat_int(1);
    for k in 1..=50usize {
        factor *= &sixteenth;
        let expect = &factor * Rat::from_integer(central_binomial(k));
        assert_eq!(values[2 * k], expect, "A-hat CP value at k={k}");
    }
    println!("criterion 03 (A-hat CP values k=1..50, exact): PASS");
}

#[test]
fn criterion_04_l_genus_cp_values() {
    let seq = MultiplicativeSequence::from_named(NamedSeries::LGenus, 100).unwrap();
    let values = seq.cp_values(100).unwrap();
    for (n, v) in values.iter().enumerate().take(101) {
        let expect = if n % 2 == 0 { rat_int(1) } else { rat_int(0) };
        assert_eq!(*v, expect, "L-genus CP value at n={n}");
    }
    println!("criterion 04 (L-genus CP values n<=100, exact): PASS");
}

#[test]
fn criterion_05_mult_residue_identity() {
    let outcome = checks::mult_identity(25, 40, 18, SEED).unwrap();
    assert!(outcome.passed(), "failures: {:?}", outcome.failures);
    assert_eq!(outcome.cases, 25 * 18);
    println!("criterion 05 (residue identity, 25 random F, n<=18, exact): PASS");
}

#[test]
fn criterion_06_compositional_inverse_cross_check() {
    let outcome = checks::comp_inverse_agreement(25, 60, SEED).unwrap();
    assert!(outcome.passed(), "failures: {:?}", outcome.failures);
    // tanh -> artanh with the expected leading coefficients
    let artanh = named_series(NamedSeries::Tanh, 7).comp_inverse().unwrap();
    for (k, expect) in [(1usize, rat_int(1)), (3, rat(1, 3)), (5, rat(1, 5)), (7, rat(1, 7))] {
        assert_eq!(artanh.coeff(k), expect);
    }
    println!("criterion 06 (Lagrange/Newton agreement, order 60, exact): PASS");
}

#[test]
fn criterion_07_etf_ode_residuals() {
    let outcome = checks::etf_ode(10, SEED).unwrap();
    assert!(outcome.passed(), "failures: {:?}", outcome.failures);
    assert_eq!(outcome.cases, 13); // 3 fixed + 10 randomized
    println!("criterion 07 (ODE residuals at D=16, T_t=12, exact): PASS");
}

#[test]
fn criterion_08_null_reduction() {
    let outcome = checks::null_reduction(10, 10, 24, SEED).unwrap();
    assert!(outcome.passed(), "failures: {:?}", outcome.failures);
    assert_eq!(outcome.cases, 12 * 10); // L, A-hat, 10 random; n = 1..10
    println!("criterion 08 (residue-chain reduction, order 24, exact): PASS");
}

#[test]
fn criterion_09_splitting_principle_identities() {
    let ext = checks::ch_exterior(4, 4, 12).unwrap();
    assert!(ext.passed(), "failures: {:?}", ext.failures);
    let sym = checks::ch_symmetric(3, 3, 12).unwrap();
    assert!(sym.passed(), "failures: {:?}", sym.failures);
    println!("criterion 09 (ch identities, m<=4 d<=4 / m<=3 d<=3, weight 12, exact): PASS");
}

#[test]
fn criterion_10_quantized_pontryagin_leading_terms() {
    // the displayed universal formula p_k + (p_1 p_k - (k+1) p_{k+1})/12
    // reproduced exactly at weight 4k+4
    for k in 1..=3usize {
        let got = quantized_pontryagin(k, 4 * k + 4).unwrap();
        let w = 4 * k + 4;
        let pk = WeightedPolynomial::<Rat>::variable(4, w, k);
        let p1 = WeightedPolynomial::<Rat>::variable(4, w, 1);
        let pk1 = WeightedPolynomial::<Rat>::variable(4, w, k + 1);
        let correction = Rat::from_integer(((k + 1) as i64).into()) * rat(1, 12);
        let expect = pk
            .add(&p1.mul(&pk).scale(&rat(1, 12)))
            .sub(&pk1.scale(&correction));
        assert_eq!(got, expect, "P_{k} at weight {w}");
    }
    // spot value from the k=1 display
    let p1 = quantized_pontryagin(1, 8).unwrap();
    assert_eq!(p1.coefficient(&[2]), rat(1, 12));
    assert_eq!(p1.coefficient(&[0, 1]), rat(-1, 6));
    println!("criterion 10 (quantized Pontryagin universal formula, exact): PASS");
}

#[test]
fn criterion_11_eta_cross_forms_and_invariants() {
    // the ratio constructors internally compare against the arsinh/artanh
    // forms to full order; a mismatch would error out here
    let dirac = dirac_eta_ratio(60).unwrap();
    let sig = signature_eta_ratio(60).unwrap();
    for eta in [&dirac, &sig] {
        for n in 1..=60 {
            let v = eta.value(n);
            assert_eq!(*v, RatPoly::monomial(v.coeff(n), n), "rho-homogeneity at n={n}");
            if n % 2 == 1 {
                assert!(v.is_zero(), "evenness fails at n={n}");
            }
        }
    }
    println!("criterion 11 (eta cross-forms to order 60, symbolic rho, exact): PASS");
}

#[test]
fn criterion_12_cp_value_round_trip() {
    for name in [NamedSeries::LGenus, NamedSeries::AHat] {
        let seq = MultiplicativeSequence::from_named(name, 40).unwrap();
        let values: Vec<Rat> = (1..=20).map(|k| seq.cp_value(2 * k).unwrap()).collect();
        let rebuilt = sequence_from_cp_values(&values, 40).unwrap();
        assert_eq!(rebuilt.series(), seq.series(), "series round-trip for {name:?}");
        for (k, expect) in values.iter().enumerate() {
            assert_eq!(
                rebuilt.cp_value(2 * (k + 1)).unwrap(),
                *expect,
                "value round-trip at k={}",
                k + 1
            );
        }
    }
    println!("criterion 12 (CP-value round-trip to order 40, exact): PASS");
}
