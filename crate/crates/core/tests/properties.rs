//! Property-based and randomized invariant tests across the modules.

use proptest::prelude::*;

use berger_eta::checks::{random_comp_invertible, random_even_one_series, SplitMix64};
use berger_eta::gaussian::Gaussian;
use berger_eta::genus::{sequence_from_cp_values, MultiplicativeSequence};
use berger_eta::graded::{GeneratorTable, GradedElement};
use berger_eta::rational::{rat_int, Rat};
use berger_eta::ring::CoeffRing;
use berger_eta::series::{named_series, NamedSeries, PowerSeries};

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| Rat::new(n.into(), d.into()))
}

fn arb_gaussian() -> impl Strategy<Value = Gaussian> {
    (arb_rat(), arb_rat()).prop_map(|(re, im)| Gaussian::new(re, im))
}

proptest! {
    #[test]
    fn rational_field_laws(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        if !CoeffRing::is_zero(&a) {
            let inv = a.try_inv().unwrap();
            prop_assert!(a.mul(&inv).is_one());
        }
    }

    #[test]
    fn gaussian_field_laws(a in arb_gaussian(), b in arb_gaussian(), c in arb_gaussian()) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        // conjugation is an involutive algebra map
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        if !a.is_zero() {
            prop_assert!(a.mul(&a.try_inv().unwrap()).is_one());
        }
    }
}

#[test]
fn comp_inverse_idempotence_on_odd_series() {
    // 25 randomized odd series with small rational coefficients
    let mut rng = SplitMix64(11);
    for _ in 0..25 {
        let order = 9 + (rng.below(6) as usize);
        let mut coeffs = vec![rat_int(0); order + 1];
        coeffs[1] = rng.nonzero_rat(6);
        let mut k = 3;
        while k <= order {
            coeffs[k] = rng.rat(6);
            k += 2;
        }
        let a = PowerSeries::from_coeffs("z", coeffs);
        let phi = a.comp_inverse().unwrap();
        assert!(phi.is_odd(), "compositional inverse of an odd series is odd");
        assert_eq!(phi.comp_inverse().unwrap(), a, "inverse is an involution");
    }
}

#[test]
fn chain_rule_on_random_series() {
    let mut rng = SplitMix64(23);
    for _ in 0..20 {
        let order = 8 + (rng.below(6) as usize);
        let outer = random_comp_invertible(&mut rng, order, 8);
        let mut inner = random_comp_invertible(&mut rng, order, 8);
        // inner may have zero linear term for the chain rule; flip a coin
        if rng.below(2) == 0 {
            inner = inner.mul(&inner).unwrap().truncated(order);
        }
        let lhs = outer.compose(&inner).unwrap().derivative();
        let rhs = outer
            .derivative()
            .compose(&inner.truncated(order - 1))
            .unwrap()
            .mul(&inner.derivative())
            .unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn residue_transformation_rule() {
    // res[h/z^m] = res[h(g) g'/g^m] for g = z u, u invertible
    let mut rng = SplitMix64(37);
    for _ in 0..15 {
        let order = 12;
        let h = random_comp_invertible(&mut rng, order, 8)
            .add(&PowerSeries::constant("z", rng.rat(8), order))
            .unwrap();
        let g = random_comp_invertible(&mut rng, order, 8);
        for m in 1..=6usize {
            let lhs = h.residue(m).unwrap();
            // h(g) g' / g^m = h(g) g' u^{-m} / z^m with u = g/z
            let u = PowerSeries::from_coeffs("z", g.coeffs()[1..].to_vec());
            let u_inv_m = u.inverse().unwrap().pow(m).unwrap();
            let num = h
                .compose(&g.truncated(order - 1))
                .unwrap()
                .mul(&g.derivative())
                .unwrap()
                .mul(&u_inv_m)
                .unwrap();
            let rhs = num.residue(m).unwrap();
            assert_eq!(lhs, rhs, "transformation rule fails at m={m}");
        }
    }
}

#[test]
fn parity_under_composition() {
    let mut rng = SplitMix64(41);
    for _ in 0..10 {
        let order = 10;
        // even series composed with odd series is even
        let even = random_even_one_series(&mut rng, order, 8);
        let mut odd_coeffs = vec![rat_int(0); order + 1];
        let mut k = 1;
        while k <= order {
            odd_coeffs[k] = rng.rat(8);
            k += 2;
        }
        let odd = PowerSeries::from_coeffs("z", odd_coeffs);
        assert!(even.compose(&odd).unwrap().is_even());
    }
}

#[test]
fn hproof_consistency_phi_prime_generates_cp_values() {
    let mut rng = SplitMix64(43);
    let mut sequences = vec![
        MultiplicativeSequence::from_named(NamedSeries::LGenus, 40).unwrap(),
        MultiplicativeSequence::from_named(NamedSeries::AHat, 40).unwrap(),
    ];
    for _ in 0..3 {
        let f = random_even_one_series(&mut rng, 40, 30);
        sequences.push(MultiplicativeSequence::new(f).unwrap());
    }
    for seq in &sequences {
        let phi_prime = seq.phi_prime(40).unwrap();
        let values = seq.cp_values(40).unwrap();
        for k in 1..=20usize {
            assert_eq!(phi_prime.coeff(2 * k), values[2 * k], "hproof fails at k={k}");
            assert_eq!(phi_prime.coeff(2 * k - 1), rat_int(0));
        }
    }
}

#[test]
fn expansion_is_multiplicative() {
    let mut rng = SplitMix64(47);
    for _ in 0..5 {
        let f = MultiplicativeSequence::new(random_even_one_series(&mut rng, 16, 12)).unwrap();
        let g = MultiplicativeSequence::new(random_even_one_series(&mut rng, 16, 12)).unwrap();
        let fg = f.product(&g).unwrap();
        let lhs = fg.expand_in_pontryagin(16).unwrap();
        let rhs = f
            .expand_in_pontryagin(16)
            .unwrap()
            .mul(&g.expand_in_pontryagin(16).unwrap());
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn cp_value_reconstruction_round_trip() {
    let mut rng = SplitMix64(53);
    for _ in 0..5 {
        let len = 1 + rng.below(10) as usize;
        let values: Vec<Rat> = (0..len).map(|_| rng.rat(12)).collect();
        let seq = sequence_from_cp_values(&values, 2 * len).unwrap();
        for (k, expect) in values.iter().enumerate() {
            assert_eq!(seq.cp_value(2 * (k + 1)).unwrap(), *expect);
        }
    }
}

#[test]
fn eta_series_arise_from_genus_phi() {
    // shared structure: both generating functions are z d/dz log phi(rho z)
    // with phi the compositional inverse of z/F for F = A-hat resp. L
    let order = 24;
    for (name, operator_series, halved) in [
        (NamedSeries::AHat, berger_eta::eta::dirac_eta_generating(order).unwrap(), true),
        (NamedSeries::LGenus, berger_eta::eta::signature_eta_generating(order).unwrap(), false),
    ] {
        let seq = MultiplicativeSequence::from_named(name, order + 1).unwrap();
        let phi = seq.phi().unwrap();
        let scaled = phi.substitute_rho_scaled(&rat_int(1));
        let gf = scaled.z_dlog().unwrap();
        for n in 1..=order {
            let coeff = gf.coeff(n);
            let expect = if halved {
                coeff.scale(&rat_int(2))
            } else {
                coeff
            };
            assert_eq!(&expect, operator_series.value(n), "n={n} for {name:?}");
        }
    }
}

fn graded_table() -> std::sync::Arc<GeneratorTable> {
    GeneratorTable::new(&[("a3", 3), ("b5", 5), ("c4", 4), ("d8", 8)]).unwrap()
}

fn random_homogeneous(rng: &mut SplitMix64, degree_choices: &[usize]) -> GradedElement {
    let table = graded_table();
    let d = 16;
    let tt = 8;
    let mut out = GradedElement::zero(&table, d, tt);
    let target = degree_choices[rng.below(degree_choices.len() as u64) as usize];
    for i in 0..table.len() {
        if table.degree(i) == target {
            let g = GradedElement::generator(&table, d, tt, i);
            out = out.add(&g.scale_rat(&rng.rat(5))).unwrap();
        }
    }
    out
}

#[test]
fn koszul_sign_rule_on_random_homogeneous_elements() {
    let mut rng = SplitMix64(59);
    let degrees = [3usize, 4, 5, 8];
    for _ in 0..40 {
        let a = random_homogeneous(&mut rng, &degrees);
        let b = random_homogeneous(&mut rng, &degrees);
        let c = random_homogeneous(&mut rng, &degrees);
        // associativity
        let left = a.wedge(&b).unwrap().wedge(&c).unwrap();
        let right = a.wedge(&b.wedge(&c).unwrap()).unwrap();
        assert_eq!(left, right);
        // graded commutativity for homogeneous parts: both elements here
        // are homogeneous by construction
        let deg = |e: &GradedElement| -> Option<usize> {
            e.terms().next().map(|(m, _)| {
                m.iter()
                    .enumerate()
                    .map(|(i, &x)| e.table().degree(i) * x as usize)
                    .sum()
            })
        };
        if let (Some(da), Some(db)) = (deg(&a), deg(&b)) {
            let ab = a.wedge(&b).unwrap();
            let ba = b.wedge(&a).unwrap();
            if da * db % 2 == 0 {
                assert_eq!(ab, ba);
            } else {
                assert_eq!(ab, ba.neg());
            }
        }
    }
}

#[test]
fn i_n_plus_1_commutes_with_div4_factors() {
    let table = graded_table();
    let d = 16;
    let tt = 8;
    let mut rng = SplitMix64(61);
    for _ in 0..20 {
        // odd element: mix of degree-3 and degree-5 generators
        let a = GradedElement::generator(&table, d, tt, 0)
            .scale_rat(&rng.rat(5))
            .add(&GradedElement::generator(&table, d, tt, 1).scale_rat(&rng.rat(5)))
            .unwrap();
        // even factor concentrated in degrees divisible by 4
        let w = GradedElement::generator(&table, d, tt, 2)
            .scale_rat(&rng.rat(5))
            .add(&GradedElement::generator(&table, d, tt, 3).scale_rat(&rng.rat(5)))
            .unwrap();
        let lhs = a.wedge(&w).unwrap().i_n_plus_1().unwrap();
        let rhs = a.i_n_plus_1().unwrap().wedge(&w).unwrap();
        assert_eq!(lhs, rhs);
        // the modified square lands in degrees divisible by 4
        let square = a.wedge(&a.i_n_plus_1().unwrap()).unwrap();
        assert!(square.is_zero() || square.is_div4_positive());
    }
}
