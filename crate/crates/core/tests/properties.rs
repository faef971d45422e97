//! Invariants as properties. Inputs come from a seeded ChaCha stream so a
//! failing seed reproduces exactly.

mod common;

use std::collections::BTreeMap;

use num_traits::Zero;
use proptest::prelude::*;
use qrs::coeff::{int, qpow, rf_substitute, sym, RationalFunction, Symbol::*};
use qrs::operators::{apply_operator, apply_s_product_form, monomial_x, OperatorSpec};
use qrs::parse::parse_rational;
use qrs::qcomb::{binom2, pochhammer_reverse, pochhammer_shift_split, qbinomial, qpochhammer};
use qrs::report::Status;
use qrs::series::{dq_apply, dq_leibniz, TruncatedSeries};
use qrs::verifier::{self, Expected};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;

const FIELD_VARS: [qrs::coeff::Symbol; 3] = [Q, A, X];

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn addition_is_associative_and_commutative(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, g, h) = (random_rf(&mut r, &FIELD_VARS), random_rf(&mut r, &FIELD_VARS), random_rf(&mut r, &FIELD_VARS));
        prop_assert_eq!((&f + &g) + &h, &f + &(&g + &h));
        prop_assert_eq!(&f + &g, &g + &f);
    }

    #[test]
    fn multiplication_distributes(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, g, h) = (random_rf(&mut r, &FIELD_VARS), random_rf(&mut r, &FIELD_VARS), random_rf(&mut r, &FIELD_VARS));
        prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
        prop_assert_eq!((&f * &g) * &h, &f * &(&g * &h));
    }

    #[test]
    fn nonzero_elements_invert(seed in any::<u64>()) {
        let f = random_rf(&mut rng(seed), &FIELD_VARS);
        prop_assume!(!f.is_zero());
        prop_assert!(f.mul(&f.recip().unwrap()).is_one());
    }

    #[test]
    fn equal_values_have_identical_representations(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, g, h) = (random_rf(&mut r, &FIELD_VARS), random_rf(&mut r, &FIELD_VARS), random_rf(&mut r, &FIELD_VARS));
        prop_assume!(!h.is_zero());
        // two routes to the same element
        let one = f.mul(&h).add(&g.mul(&h)).div(&h).unwrap();
        let two = g.add(&f);
        prop_assert_eq!(one.to_string(), two.to_string());
        prop_assert!(one.content_is_unit());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, g) = (random_rf(&mut r, &FIELD_VARS), random_rf(&mut r, &FIELD_VARS));
        let rep = random_rf(&mut r, &[Q, B]);
        let sub = |h: &RationalFunction| rf_substitute(h, X, &rep);
        // a replacement that is a root of a denominator is a legitimate error
        if let (Ok(fs), Ok(gs), Ok(ps), Ok(ss)) = (sub(&f), sub(&g), sub(&f.mul(&g)), sub(&f.add(&g))) {
            prop_assert_eq!(ps, fs.mul(&gs));
            prop_assert_eq!(ss, fs.add(&gs));
        }
    }

    #[test]
    fn evaluation_agrees_with_arithmetic(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (f, g) = (random_rf(&mut r, &FIELD_VARS), random_rf(&mut r, &FIELD_VARS));
        let p = random_point(&mut r);
        if let (Some(fv), Some(gv), Some(pv)) = (f.eval(&p), g.eval(&p), f.mul(&g).eval(&p)) {
            prop_assert_eq!(pv, fv * gv);
        }
    }

    #[test]
    fn canonical_strings_parse_back(seed in any::<u64>()) {
        let f = random_rf(&mut rng(seed), &FIELD_VARS);
        prop_assert_eq!(parse_rational(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn leibniz_rule_matches_iterated_dq(seed in any::<u64>(), n in 0usize..=4) {
        let mut r = rng(seed);
        // the product has degree 10, so order 10 holds it exactly
        let order = 10;
        let (f, g) = (random_series_poly(&mut r, 5, order), random_series_poly(&mut r, 5, order));
        prop_assert_eq!(dq_leibniz(&f, &g, n).unwrap(), dq_apply(&f.mul(&g), n).unwrap());
    }

    #[test]
    fn operators_are_linear(seed in any::<u64>(), n in 0usize..=4) {
        let mut r = rng(seed);
        let (f, g) = (random_series_poly(&mut r, 5, 9), random_series_poly(&mut r, 5, 9));
        let c = random_rf(&mut r, &[Q, A]);
        let (b, u) = (sym(B), sym(U));
        let ops = [
            OperatorSpec::g(n, b.clone(), u.clone()),
            OperatorSpec::h(n, b.clone()),
            OperatorSpec::s(n, b.clone()),
            OperatorSpec::t_deformed(b.clone(), u.clone()),
            OperatorSpec::e_plain(b.clone()),
        ];
        let combo = f.add(&g.scale(&c));
        for op in &ops {
            let lhs = apply_operator(op, &combo).unwrap();
            let rhs = apply_operator(op, &f).unwrap().add(&apply_operator(op, &g).unwrap().scale(&c));
            prop_assert_eq!(lhs, rhs, "{}", op);
        }
    }

    #[test]
    fn dq_lowers_order_and_kills_constants(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = random_series_poly(&mut r, 5, 7);
        let d = dq_apply(&f, 1).unwrap();
        prop_assert_eq!(d.order(), f.order() - 1);
        prop_assert!(d.is_pure());
        let c = TruncatedSeries::constant(X, 7, random_rf(&mut r, &[Q, A])).unwrap();
        prop_assert!(dq_apply(&c, 1).unwrap().is_zero());
    }
}

#[test]
fn pascal_recurrences_and_symmetry() {
    for n in 1..=12i64 {
        for k in 0..=n {
            let lower = qbinomial(n - 1, k - 1) + qpow(k) * qbinomial(n - 1, k);
            let mirrored = qpow(n - k) * qbinomial(n - 1, k - 1) + qbinomial(n - 1, k);
            assert_eq!(qbinomial(n, k), lower, "[{n},{k}]");
            assert_eq!(qbinomial(n, k), mirrored, "[{n},{k}] mirrored");
            assert_eq!(qbinomial(n, k), qbinomial(n, n - k));
            assert!(qbinomial(n, k).is_polynomial());
            // at q = 1 the Gaussian coefficient is the ordinary one
            let at_one = qbinomial(n, k).substitute(Q, &int(1)).unwrap();
            assert_eq!(at_one, int(binomial(n, k)));
        }
    }
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `(a;q)_n` by the defining product, independent of the library.
fn poch_by_hand(a: &RationalFunction, n: usize) -> RationalFunction {
    (0..n).map(|j| int(1) - a.mul(&qpow(j as i64))).product()
}

#[test]
fn split_and_reverse_identities_for_symbolic_a() {
    let a = sym(A);
    for n in 0..=8usize {
        assert_eq!(qpochhammer(&a, n), poch_by_hand(&a, n));
        for k in 0..=8usize {
            let (l, r) = pochhammer_shift_split(&a, n, k);
            assert_eq!(l.mul(&r), poch_by_hand(&a, n + k), "split n={n} k={k}");
            if k <= n {
                assert_eq!(pochhammer_reverse(&a, n, k).unwrap(), poch_by_hand(&a, n - k), "reverse n={n} k={k}");
            }
        }
    }
}

#[test]
fn s_product_form_equals_summation_form() {
    for n in 0..=5 {
        for m in 0..=6 {
            let x = monomial_x(m, n);
            let sum = apply_operator(&OperatorSpec::s(n, sym(B)), &x).unwrap();
            assert_eq!(apply_s_product_form(n, &sym(B), &x).unwrap(), sum, "n={n} m={m}");
        }
    }
}

#[test]
fn h_and_s_are_g_at_one_and_q() {
    for n in 0..=5 {
        for m in 0..=6 {
            let x = monomial_x(m, n);
            let g1 = apply_operator(&OperatorSpec::g(n, sym(B), int(1)), &x).unwrap();
            let gq = apply_operator(&OperatorSpec::g(n, sym(B), sym(Q)), &x).unwrap();
            assert_eq!(apply_operator(&OperatorSpec::h(n, sym(B)), &x).unwrap(), g1, "h n={n} m={m}");
            assert_eq!(apply_operator(&OperatorSpec::s(n, sym(B)), &x).unwrap(), gq, "s n={n} m={m}");
        }
    }
}

#[test]
fn t_deformed_specializes_to_t_and_e() {
    for m in 0..=8 {
        let x = monomial_x(m, 0);
        let t1 = apply_operator(&OperatorSpec::t_deformed(sym(B), int(1)), &x).unwrap();
        let tq = apply_operator(&OperatorSpec::t_deformed(sym(B), sym(Q)), &x).unwrap();
        assert_eq!(t1, apply_operator(&OperatorSpec::t_plain(sym(B)), &x).unwrap());
        assert_eq!(tq, apply_operator(&OperatorSpec::e_plain(sym(B)), &x).unwrap());
        // coefficient of b^k x^{m-k} is [m,k] u^{C(k,2)}
        let tu = apply_operator(&OperatorSpec::t_deformed(sym(B), sym(U)), &x).unwrap();
        for k in 0..=m {
            let want = qbinomial(m as i64, k as i64) * sym(U).pow(binom2(k as i64)).unwrap() * sym(B).pow(k as i64).unwrap();
            assert_eq!(*tu.coeff(m - k), want, "m={m} k={k}");
        }
    }
}

#[test]
fn specialization_lattice_holds_through_degree_six() {
    let failed: Vec<_> = lattice(6).into_iter().filter(|r| !r.holds).map(|r| r.name).collect();
    assert!(failed.is_empty(), "{failed:#?}");
}

fn meta_of(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

#[test]
fn reported_differences_are_nonzero_at_random_points() {
    let mut r = rng(0x9e37_79b9);
    let reports = verifier::sweep(
        &["s1-leibniz-printed", "s2-thm1-monomial", "s2-thm3-poch", "s3-thm1-geometric", "s4-rogers-ordinary"],
        &[4],
        &verifier::default_ranges(),
    )
    .unwrap();
    let mut checked = 0;
    for rep in reports.iter().filter(|r| r.status == Status::Mismatch) {
        let mm = rep.first_mismatch.as_ref().expect("mismatch carries a diff");
        let diff = parse_rational(&mm.diff).unwrap();
        let lhs = parse_rational(&mm.lhs).unwrap();
        let rhs = parse_rational(&mm.rhs).unwrap();
        assert_eq!(diff, lhs.sub(&rhs), "{}", rep.id);
        let mut nonzero = 0;
        while nonzero < 3 {
            let p = random_point(&mut r);
            if let Some(v) = diff.eval(&p) {
                assert!(!v.is_zero(), "{} {:?} vanishes at a random point", rep.id, rep.meta);
                nonzero += 1;
            }
        }
        checked += 1;
    }
    assert!(checked >= 5, "only {checked} mismatches sampled");
}

#[test]
fn verification_is_deterministic() {
    for rec in verifier::catalog().iter().step_by(5) {
        let Some(meta) = rec.instances(&verifier::default_ranges()).pop() else { continue };
        let once = verifier::verify(rec.id, 3, &meta).unwrap();
        let twice = verifier::verify(rec.id, 3, &meta).unwrap();
        assert_eq!(once.to_json(), twice.to_json(), "{}", rec.id);
    }
}

#[test]
fn a_pass_at_order_n_passes_at_every_lower_order() {
    let cases = [
        ("s2-thm2-eq-inv-poch", meta_of(&[("n", 2)])),
        ("s2-thm4-phi", meta_of(&[("n", 2)])),
        ("s3-thm1-geometric-corrected", meta_of(&[("n", 2)])),
        ("s1-qbinomial-theorem", meta_of(&[])),
        ("s4-rogers-corrected", meta_of(&[("k", 1)])),
    ];
    for (id, meta) in &cases {
        let top = 5;
        assert!(verifier::verify(id, top, meta).unwrap().passed(), "{id} at order {top}");
        for order in 0..top {
            assert!(verifier::verify(id, order, meta).unwrap().passed(), "{id} at order {order}");
        }
    }
}

#[test]
fn pass_records_never_mismatch_on_small_instances() {
    let ids: Vec<&str> = verifier::catalog()
        .iter()
        .filter(|r| r.expected == Expected::Pass)
        .map(|r| r.id)
        .collect();
    let ranges = BTreeMap::from([
        ("k".to_string(), (0, 1)),
        ("m".to_string(), (0, 1)),
        ("n".to_string(), (0, 2)),
    ]);
    for rep in verifier::sweep(&ids, &[3], &ranges).unwrap() {
        assert_eq!(rep.status, Status::Pass, "{} {:?}", rep.id, rep.meta);
    }
}
