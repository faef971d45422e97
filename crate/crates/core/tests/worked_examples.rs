//! Hand-checked values for every module, each against an oracle written
//! out independently of the code under test.

use std::collections::BTreeMap;

use qrs::coeff::{int, qpow, rf_eval_integer_power, rf_substitute, sym, RationalFunction, Symbol::*};
use qrs::families::{build_polynomial, deformed_plus_power, hahn_generating_check, hahn_generating_check_with, Family, PolySpec};
use qrs::operators::{apply_operator, monomial_x, operator_limit_check, LimitKind, OperatorSpec};
use qrs::qcomb::{binom2, pochhammer_reverse, pochhammer_shift_split, qbinomial, qpochhammer};
use qrs::report::Status;
use qrs::series::{
    dq_apply, dq_leibniz, hypergeometric_series, pochhammer_series, series_invert, HypergeometricSpec, PochhammerMode,
    TruncatedSeries,
};
use qrs::verifier::{self, Expansion};

fn q() -> RationalFunction {
    sym(Q)
}

fn one_minus(f: RationalFunction) -> RationalFunction {
    int(1) - f
}

fn frac(n: RationalFunction, d: RationalFunction) -> RationalFunction {
    n.div(&d).unwrap()
}

fn meta(pairs: &[(&str, i64)]) -> BTreeMap<String, i64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

#[test]
fn field_cancellations() {
    let sum = frac(q(), one_minus(q())) + frac(int(1) - q().scale_int(2), one_minus(q()));
    assert!(sum.is_one());
    let prod = frac(one_minus(q() * q()), one_minus(q())) * int(1);
    assert_eq!(prod, int(1) + q());
    let quot = frac(int(1), one_minus(q())).div(&frac(int(1), one_minus(q() * q()))).unwrap();
    assert_eq!(quot, int(1) + q());
}

#[test]
fn substitutions() {
    let x = sym(X);
    assert_eq!(rf_substitute(&(&x * &x), X, &(q() * &x)).unwrap(), q() * q() * &x * &x);
    assert_eq!(
        rf_substitute(&frac(int(1), one_minus(x.clone())), X, &(q() * &x)).unwrap(),
        frac(int(1), one_minus(q() * &x))
    );
    let before = frac(one_minus(x.clone()), one_minus(q()));
    let after = frac(one_minus(q() * q() * &x), one_minus(q()));
    assert_eq!(rf_substitute(&before, X, &(q() * q() * &x)).unwrap(), after);
}

#[test]
fn integer_powers() {
    assert_eq!(rf_eval_integer_power(Q, 3), q() * q() * q());
    assert_eq!(rf_eval_integer_power(Q, -2), frac(int(1), q() * q()));
    assert!(rf_eval_integer_power(U, 0).is_one());
}

#[test]
fn shifted_factorials() {
    let a = sym(A);
    assert!(qpochhammer(&a, 0).is_one());
    assert_eq!(qpochhammer(&a, 2), one_minus(a.clone()) * one_minus(q() * &a));
    let by_hand = one_minus(q()) * one_minus(q() * q()) * one_minus(q() * q() * q());
    assert_eq!(qpochhammer(&q(), 3), by_hand);
}

#[test]
fn gaussian_coefficients() {
    let q2 = q() * q();
    let expected = int(1) + q() + q2.scale_int(2) + &q2 * &q() + &q2 * &q2;
    assert_eq!(qbinomial(4, 2), expected);
    assert!(qbinomial(5, 0).is_one());
    assert!(qbinomial(3, 4).is_zero());
}

#[test]
fn split_and_reverse() {
    let a = sym(A);
    let (l, r) = pochhammer_shift_split(&a, 1, 1);
    assert_eq!((l.clone(), r.clone()), (one_minus(a.clone()), one_minus(q() * &a)));
    assert_eq!(l * r, qpochhammer(&a, 2));
    let (l, r) = pochhammer_shift_split(&a, 0, 3);
    assert!(l.is_one());
    assert_eq!(r, qpochhammer(&a, 3));
    let (l, r) = pochhammer_shift_split(&a, 2, 2);
    assert_eq!(r, qpochhammer(&(q() * q() * &a), 2));
    assert_eq!(l * r, qpochhammer(&a, 4));

    assert_eq!(pochhammer_reverse(&a, 3, 0).unwrap(), qpochhammer(&a, 3));
    assert!(pochhammer_reverse(&a, 1, 1).unwrap().is_one());
    assert_eq!(pochhammer_reverse(&a, 3, 1).unwrap(), one_minus(a.clone()) * one_minus(q() * &a));
}

fn series(coeffs: Vec<RationalFunction>, order: usize) -> TruncatedSeries {
    TruncatedSeries::new(X, order, coeffs).unwrap()
}

#[test]
fn series_products_and_inverses() {
    let p = series(vec![int(1), int(1), int(0)], 2).mul(&series(vec![int(1), int(-1), int(0)], 2));
    assert_eq!(p, series(vec![int(1), int(0), int(-1)], 2));
    let geo = series(vec![int(1); 4], 3);
    assert_eq!(geo.mul(&TruncatedSeries::one(X, 3)), geo);
    let tele = geo.mul(&series(vec![int(1), int(-1), int(0), int(0)], 3));
    assert_eq!(tele, TruncatedSeries::one(X, 3));

    let inv = series_invert(&series(vec![int(1), sym(Y).neg(), int(0), int(0), int(0)], 4)).unwrap();
    for j in 0..=4 {
        assert_eq!(*inv.coeff(j), sym(Y).pow(j as i64).unwrap());
    }
    let half = series_invert(&TruncatedSeries::constant(X, 3, int(2)).unwrap()).unwrap();
    assert_eq!(half, TruncatedSeries::constant(X, 3, RationalFunction::ratio(1, 2)).unwrap());

    // 1/(x;q)_inf against the e_q sum
    let prod = pochhammer_series(&int(1), PochhammerMode::InfiniteProduct, X, 6).unwrap();
    let recip = series_invert(&prod).unwrap();
    for n in 0..=6 {
        assert_eq!(*recip.coeff(n), frac(int(1), qpochhammer(&q(), n)));
    }
}

#[test]
fn q_derivatives() {
    let x3 = monomial_x(3, 0);
    let q3 = q() * q() * q();
    assert_eq!(*dq_apply(&x3, 1).unwrap().coeff(2), one_minus(q3.clone()));
    assert_eq!(*dq_apply(&x3, 2).unwrap().coeff(1), one_minus(q3) * one_minus(q() * q()));
    assert!(dq_apply(&TruncatedSeries::constant(X, 4, sym(A)).unwrap(), 1).unwrap().is_zero());
}

#[test]
fn leibniz_small_cases() {
    let x1 = monomial_x(1, 2);
    let x2 = monomial_x(2, 1);
    assert_eq!(dq_leibniz(&x1, &x1, 1).unwrap(), dq_apply(&monomial_x(2, 1), 1).unwrap().truncate(2));
    assert_eq!(*dq_leibniz(&x1, &x1, 1).unwrap().coeff(1), one_minus(q() * q()));
    let expected = one_minus(q() * q() * q()) * one_minus(q() * q());
    assert_eq!(*dq_leibniz(&x1, &x2, 2).unwrap().coeff(1), expected);
    let f = TruncatedSeries::from_rational(&frac(int(1), one_minus(sym(A) * sym(X))), X, 7).unwrap();
    for n in 0..4 {
        assert_eq!(dq_leibniz(&f, &TruncatedSeries::one(X, 7), n).unwrap(), dq_apply(&f, n).unwrap());
    }
}

#[test]
fn exponential_expansions() {
    let a = sym(A);
    let inv = pochhammer_series(&a, PochhammerMode::InverseInfiniteProduct, X, 2).unwrap();
    let c2 = frac(&a * &a, one_minus(q()) * one_minus(q() * q()));
    assert_eq!(inv.coeffs(), &[int(1), frac(a.clone(), one_minus(q())), c2]);
    for mode in [PochhammerMode::InfiniteProduct, PochhammerMode::InverseInfiniteProduct] {
        assert_eq!(pochhammer_series(&int(0), mode, X, 4).unwrap(), TruncatedSeries::one(X, 4));
    }
    // (ax;q)_inf = prod (1 - a q^j x): the x-coefficient is -a sum q^j
    let prod = pochhammer_series(&a, PochhammerMode::InfiniteProduct, X, 1).unwrap();
    assert_eq!(*prod.coeff(1), frac(a.neg(), one_minus(q())));
}

#[test]
fn basic_hypergeometric_sums() {
    let x = TruncatedSeries::monomial(X, 6, int(1), 1).unwrap();
    let e = hypergeometric_series(&HypergeometricSpec::new(vec![int(0)], vec![], x.clone()), 6).unwrap();
    for n in 0..=6 {
        assert_eq!(*e.coeff(n), frac(int(1), qpochhammer(&q(), n)));
    }
    let zero = TruncatedSeries::zero(X, 6);
    let spec = HypergeometricSpec::new(vec![sym(A), sym(B)], vec![sym(C)], zero);
    assert_eq!(hypergeometric_series(&spec, 6).unwrap(), TruncatedSeries::one(X, 6));
    // q-binomial theorem, right side from two product expansions
    let lhs = hypergeometric_series(&HypergeometricSpec::new(vec![sym(A)], vec![], x), 6).unwrap();
    let num = pochhammer_series(&sym(A), PochhammerMode::InfiniteProduct, X, 6).unwrap();
    let den = pochhammer_series(&int(1), PochhammerMode::InverseInfiniteProduct, X, 6).unwrap();
    assert_eq!(lhs, num.mul(&den));
}

fn family(f: Family, n: usize) -> PolySpec {
    PolySpec::new(f, n)
}

#[test]
fn family_values() {
    let (x, y, a) = (sym(X), sym(Y), sym(A));
    let rs2 = int(1) + (int(1) + q()) * &x + &x * &x;
    assert_eq!(build_polynomial(&family(Family::RogersSzego, 2)).unwrap(), rs2);
    let hahn1 = &y + &(one_minus(a.clone()) * &x);
    assert_eq!(build_polynomial(&family(Family::Hahn, 1)).unwrap(), hahn1);
    for n in 0..6 {
        let h = build_polynomial(&family(Family::Hahn, n).with("a", int(0)).with("y", int(1))).unwrap();
        assert_eq!(h, build_polynomial(&family(Family::RogersSzego, n)).unwrap());
    }
    let psi1 = &y - &(one_minus(a) * &x);
    assert_eq!(build_polynomial(&family(Family::AscHomogeneousDeformed, 1)).unwrap(), psi1);
}

#[test]
fn deformed_plus_powers() {
    let c = sym(C);
    assert!(deformed_plus_power(0, &c, &q()).is_one());
    assert_eq!(deformed_plus_power(1, &c, &sym(U)), int(1) + &c);
    for n in 1..=5i64 {
        let arg = qpow(1 - n) * sym(A) * sym(B);
        let closed = qpochhammer(&arg.neg(), n as usize);
        assert_eq!(deformed_plus_power(n as usize, &arg, &q()), closed, "n={n}");
        assert_eq!(deformed_plus_power(n as usize, &sym(C), &int(1)), {
            (0..=n).map(|k| qbinomial(n, k) * c.pow(k).unwrap()).sum::<RationalFunction>()
        });
    }
}

#[test]
fn hahn_generating_function() {
    assert!(hahn_generating_check(0, 0).passed());
    assert!(hahn_generating_check(4, 4).passed());
    assert!(hahn_generating_check_with(&int(0), &sym(X), &int(1), 4, 4).passed());
}

#[test]
fn operator_actions() {
    let s = TruncatedSeries::from_rational(&frac(int(1), one_minus(sym(A) * sym(X))), X, 6).unwrap();
    assert_eq!(apply_operator(&OperatorSpec::g(0, sym(B), sym(U)), &s).unwrap(), s);
    let (x, b) = (sym(X), sym(B));
    let g1 = apply_operator(&OperatorSpec::g(1, b.clone(), sym(U)), &monomial_x(2, 1)).unwrap();
    assert_eq!(g1.to_polynomial(), &x * &x + &(&b * &one_minus(q() * q()) * &x));
    for m in 0..6usize {
        let s1 = apply_operator(&OperatorSpec::s(1, b.clone()), &monomial_x(m, 1)).unwrap();
        let mut want = x.pow(m as i64).unwrap();
        if m > 0 {
            want = want + &b * &one_minus(qpow(m as i64)) * x.pow(m as i64 - 1).unwrap();
        }
        assert_eq!(s1.to_polynomial(), want, "m={m}");
    }
}

/// `u^{C(n,2)} sum_k [m,k] (-1)^k (u/q)^{C(k+1,2)-mk} (q^{-n};q)_k (ub)^k x^{m-k}`, the printed claim.
fn printed_monomial_rhs(n: usize, m: usize) -> RationalFunction {
    let (u, b, x) = (sym(U), sym(B), sym(X));
    let uq = frac(u.clone(), q());
    let (ni, mi) = (n as i64, m as i64);
    let sum: RationalFunction = (0..=mi)
        .map(|k| {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (qbinomial(mi, k)
                * uq.pow(binom2(k + 1) - mi * k).unwrap()
                * qpochhammer(&qpow(-ni), k as usize)
                * (&u * &b).pow(k).unwrap()
                * x.pow(mi - k).unwrap())
            .scale_int(sign)
        })
        .sum();
    u.pow(binom2(ni)).unwrap() * sum
}

#[test]
fn monomial_theorem_small_cases() {
    let rep = verifier::verify("s2-thm1-monomial", 8, &meta(&[("m", 2), ("n", 1)])).unwrap();
    assert_eq!(rep.status, Status::Pass);
    let lhs = apply_operator(&OperatorSpec::g(1, sym(B), sym(U)), &monomial_x(2, 1)).unwrap();
    assert_eq!(lhs.to_polynomial(), printed_monomial_rhs(1, 2));
    // g_2{1} keeps only the k = 0 weight u^{C(2,2)}
    let g2 = apply_operator(&OperatorSpec::g(2, sym(B), sym(U)), &monomial_x(0, 2)).unwrap();
    assert_eq!(g2.to_polynomial(), sym(U));
    assert_eq!(printed_monomial_rhs(2, 0), sym(U));
}

#[test]
fn monomial_theorem_fails_off_the_edges() {
    // the printed right side agrees only when m = 0 or m = n + 1
    for n in 1..=4usize {
        for m in 0..=4usize {
            let lhs = apply_operator(&OperatorSpec::g(n, sym(B), sym(U)), &monomial_x(m, n)).unwrap();
            let agrees = lhs.to_polynomial() == printed_monomial_rhs(n, m);
            assert_eq!(agrees, m == 0 || m == n + 1, "n={n} m={m}");
        }
    }
}

#[test]
fn operator_limits() {
    for kind in [LimitKind::TDeformedFromG, LimitKind::TPlainFromH, LimitKind::EFromS] {
        assert!(operator_limit_check(kind, 0, 3).passed());
    }
    assert!(operator_limit_check(LimitKind::TPlainFromH, 1, 5).passed());
    assert!(operator_limit_check(LimitKind::EFromS, 2, 6).passed());
    // [5,1] = 1+q+...+q^4 agrees with 1/(1-q) through q^4 exactly
    let diff = qbinomial(5, 1) - frac(int(1), one_minus(q()));
    assert_eq!(diff.valuation(Q), Some(5));
}

#[test]
fn catalog_examples() {
    let pass = |id: &str, order: usize, m: &[(&str, i64)]| verifier::verify(id, order, &meta(m)).unwrap().status;
    assert_eq!(pass("s2-thm2-eq-inv-poch", 6, &[("n", 3)]), Status::Pass);
    assert_eq!(pass("s2-thm5-phi-sum", 0, &[]), Status::Pass);
    assert_eq!(pass("s2-thm5-phi-sum", 6, &[]), Status::Pass);
    assert_eq!(pass("s3-thm1-geometric-corrected", 5, &[("n", 2)]), Status::Pass);
    let printed = verifier::verify("s4-mehler-ordinary", 6, &meta(&[("m", 2), ("n", 2)])).unwrap();
    assert_eq!(printed.status, Status::Mismatch);
    assert!(printed.first_mismatch.is_some());
    assert!(verifier::sweep(&[], &[6], &verifier::default_ranges()).unwrap().is_empty());
}

#[test]
fn theta_records_are_unsupported_with_probes() {
    for id in ["s3-theta-minus", "s3-theta-plus"] {
        let rep = verifier::verify(id, 3, &meta(&[("n", 1)])).unwrap();
        assert_eq!(rep.status, Status::Unsupported);
        assert!(rep.reason.unwrap().contains("RHS notation has no definition"));
    }
    let Expansion::Series(probe) = verifier::lhs_probe("s3-theta-minus", 3, &meta(&[("n", 1)])).unwrap() else {
        panic!("theta LHS is a series in y");
    };
    let (b, x, u) = (sym(B), sym(X), sym(U));
    let uq = frac(u, q());
    for m in 0..=3i64 {
        let psi: RationalFunction = (0..=m)
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                (qbinomial(m, k)
                    * uq.pow(binom2(k + 1) - m * k).unwrap()
                    * qpochhammer(&qpow(-1), k as usize)
                    * b.pow(k).unwrap()
                    * x.pow(m - k).unwrap())
                .scale_int(sign)
            })
            .sum();
        assert_eq!(*probe.coeff(m as usize), qpow(-binom2(m)) * psi, "y^{m}");
    }
    let Expansion::Series(zeroth) = verifier::lhs_probe("s3-theta-plus", 0, &meta(&[("n", 2)])).unwrap() else {
        panic!("theta LHS is a series in y");
    };
    assert_eq!(zeroth.order(), 0);
    assert!(zeroth.coeff(0).is_one());
}
