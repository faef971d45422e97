//! Classical identities the operator calculus is built on.

use crate::coeff::Symbol::*;
use crate::coeff::{int, qpow};
use crate::error::Result;
use crate::families::{Family, IndexConvention};
use crate::qcomb::{pochhammer_reverse, pochhammer_shift_split, qfactorial};
use crate::series::{
    dq_apply, dq_leibniz, dq_leibniz_printed, hypergeometric_series, series_invert, HypergeometricSpec, TruncatedSeries,
};

use super::support::*;
use super::{meta, Expansion, Expected, IdentityRecord, Instance, MetaRange};

const N8: &[MetaRange] = &[meta("n", 0, 8)];
const NK8: &[MetaRange] = &[meta("k", 0, 8), meta("n", 0, 8)];
const N4: &[MetaRange] = &[meta("n", 0, 4)];

fn k_at_most_n(m: &std::collections::BTreeMap<String, i64>) -> bool {
    m["k"] <= m["n"]
}

fn z_series(order: usize) -> TruncatedSeries {
    TruncatedSeries::monomial(Z, order, int(1), 1).expect("unit coefficient")
}

fn exp_sum(order: usize, weighted: bool) -> Result<TruncatedSeries> {
    series_from(Z, order, |n| {
        let w = if weighted { qpow(b2(n)) } else { int(1) };
        w.div(&qfactorial(n))
    })
}

fn qbt_lhs(i: &Instance) -> Result<Expansion> {
    let spec = HypergeometricSpec::new(vec![s(A)], vec![], z_series(i.order));
    Ok(hypergeometric_series(&spec, i.order)?.into())
}

fn qbt_rhs(i: &Instance) -> Result<Expansion> {
    Ok(poch_inf(&s(A), Z, i.order)?.mul(&inv_poch_inf(&int(1), Z, i.order)?).into())
}

fn eq_sum(i: &Instance) -> Result<Expansion> {
    Ok(exp_sum(i.order, false)?.into())
}

fn eq_product(i: &Instance) -> Result<Expansion> {
    Ok(series_invert(&poch_inf(&int(1), Z, i.order)?)?.into())
}

fn eq_display(i: &Instance) -> Result<Expansion> {
    let arg = z_series(i.order).neg();
    Ok(hypergeometric_series(&HypergeometricSpec::new(vec![int(0)], vec![], arg), i.order)?.into())
}

fn big_eq_sum(i: &Instance) -> Result<Expansion> {
    Ok(exp_sum(i.order, true)?.into())
}

fn big_eq_display(i: &Instance) -> Result<Expansion> {
    let arg = z_series(i.order).neg();
    Ok(hypergeometric_series(&HypergeometricSpec::new(vec![int(0)], vec![int(0)], arg), i.order)?.into())
}

fn duality_lhs(i: &Instance) -> Result<Expansion> {
    // e_q(z) E_q(-z) from the two defining sums
    let big = exp_sum(i.order, true)?.dilate(&int(-1));
    Ok(exp_sum(i.order, false)?.mul(&big).into())
}

fn one(i: &Instance) -> Result<Expansion> {
    Ok(TruncatedSeries::one(Z, i.order).into())
}

fn quotient_lhs(i: &Instance) -> Result<Expansion> {
    let ax = s(A).mul(&s(X));
    Ok(expand(&poch(&ax, i.get("n")), X, i.order)?.into())
}

fn quotient_rhs(i: &Instance) -> Result<Expansion> {
    let shifted = s(A).mul(&qpow(i.get("n") as i64));
    Ok(poch_inf(&s(A), X, i.order)?.mul(&inv_poch_inf(&shifted, X, i.order)?).into())
}

fn split_lhs(i: &Instance) -> Result<Expansion> {
    Ok(poch(&s(A), i.get("n") + i.get("k")).into())
}

fn split_rhs(i: &Instance) -> Result<Expansion> {
    let (l, r) = pochhammer_shift_split(&s(A), i.get("n"), i.get("k"));
    Ok(l.mul(&r).into())
}

fn reverse_lhs(i: &Instance) -> Result<Expansion> {
    Ok(poch(&s(A), i.get("n") - i.get("k")).into())
}

fn reverse_rhs(i: &Instance) -> Result<Expansion> {
    Ok(pochhammer_reverse(&s(A), i.get("n"), i.get("k"))?.into())
}

/// `f = 1/(1-ax)` and `g = 1/(bx;q)_inf`, with `n` orders of headroom.
fn leibniz_pair(i: &Instance) -> Result<(TruncatedSeries, TruncatedSeries)> {
    let order = i.order + i.get("n");
    let f = expand(&int(1).div(&(int(1) - s(A).mul(&s(X))))?, X, order)?;
    Ok((f, inv_poch_inf(&s(B), X, order)?))
}

fn leibniz_direct(i: &Instance) -> Result<Expansion> {
    let (f, g) = leibniz_pair(i)?;
    Ok(dq_apply(&f.mul(&g), i.get("n"))?.into())
}

fn leibniz_sum(i: &Instance) -> Result<Expansion> {
    let (f, g) = leibniz_pair(i)?;
    Ok(dq_leibniz(&f, &g, i.get("n"))?.into())
}

fn leibniz_printed(i: &Instance) -> Result<Expansion> {
    let (f, g) = leibniz_pair(i)?;
    Ok(dq_leibniz_printed(&f, &g, i.get("n"))?.into())
}

fn hahn_lhs(i: &Instance) -> Result<Expansion> {
    Ok(series_from(Z, i.order, |n| hahn(n, &s(A), &s(X), &s(Y))?.div(&qfactorial(n)))?.into())
}

fn hahn_rhs(i: &Instance) -> Result<Expansion> {
    let o = i.order;
    let num = poch_inf(&s(A).mul(&s(X)), Z, o)?;
    Ok(num.mul(&inv_poch_inf(&s(X), Z, o)?).mul(&inv_poch_inf(&s(Y), Z, o)?).into())
}

fn asc_lhs(i: &Instance, family: Family, index: IndexConvention) -> Result<Expansion> {
    let (a, b, c, d, e) = (s(A), s(B), s(C), s(D), s(V));
    let gf = series_from(Z, i.order, |n| {
        general(family, n, [&a, &b, &c], [&d, &e], &s(X), &s(Y), index)?.div(&qfactorial(n))
    })?;
    Ok(gf.into())
}

fn asc_rhs(i: &Instance, psi: bool) -> Result<Expansion> {
    let t = z_series(i.order);
    let (lower, arg) = if psi {
        (vec![int(0), s(D), s(V)], t.scale(&s(Y).neg()))
    } else {
        (vec![s(D), s(V)], t.scale(&s(Y)))
    };
    let spec = HypergeometricSpec::new(vec![s(A), s(B), s(C)], lower, arg);
    let phi = hypergeometric_series(&spec, i.order)?;
    Ok(inv_poch_inf(&s(X), Z, i.order)?.mul(&phi).into())
}

fn phi_n_lhs(i: &Instance) -> Result<Expansion> {
    asc_lhs(i, Family::AscGeneralPhi, IndexConvention::Degree)
}

fn phi_k_lhs(i: &Instance) -> Result<Expansion> {
    asc_lhs(i, Family::AscGeneralPhi, IndexConvention::Summation)
}

fn psi_n_lhs(i: &Instance) -> Result<Expansion> {
    asc_lhs(i, Family::AscGeneralPsi, IndexConvention::Degree)
}

fn psi_k_lhs(i: &Instance) -> Result<Expansion> {
    asc_lhs(i, Family::AscGeneralPsi, IndexConvention::Summation)
}

fn phi_gf_rhs(i: &Instance) -> Result<Expansion> {
    asc_rhs(i, false)
}

fn psi_gf_rhs(i: &Instance) -> Result<Expansion> {
    asc_rhs(i, true)
}

pub(super) fn records() -> Vec<IdentityRecord> {
    use Expected::*;
    type R = IdentityRecord;
    vec![
        R::pair("s1-qbinomial-theorem", "1phi0(a;-;q,z) = (az;q)_inf/(z;q)_inf", qbt_lhs, qbt_rhs)
            .series(Z)
            .order(10)
            .expect(Pass, "q-binomial theorem"),
        R::pair("s1-eq-product", "e_q(z) = sum z^n/(q;q)_n = 1/(z;q)_inf", eq_sum, eq_product)
            .series(Z)
            .expect(Pass, "right side inverts the product expansion of (z;q)_inf"),
        R::pair("s1-eq-display", "e_q(z) = 1phi0(0;-;q,-z)", eq_sum, eq_display)
            .series(Z)
            .expect(KnownDiscrepancy, "the argument -z turns the 1phi0 into e_q(-z); the defining sum is normative"),
        R::pair("s1-Eq-display", "E_q(z) = sum q^{C(n,2)} z^n/(q;q)_n = 1phi1(0;0;q,-z)", big_eq_sum, big_eq_display)
            .series(Z)
            .expect(Pass, "balancing factor of 1phi1 supplies q^{C(n,2)}"),
        R::pair("s1-eq-duality", "e_q(z) E_q(-z) = 1", duality_lhs, one)
            .series(Z)
            .expect(Pass, "(z;q)_inf/(z;q)_inf through the two defining sums"),
        R::pair("s1-eq2-quotient", "(ax;q)_n = (ax;q)_inf/(a q^n x;q)_inf", quotient_lhs, quotient_rhs)
            .meta(N8)
            .series(X)
            .expect(Pass, "finite product against a quotient of infinite products"),
        R::pair("s1-eq3-split", "(a;q)_{n+k} = (a;q)_n (a q^n;q)_k", split_lhs, split_rhs)
            .meta(NK8)
            .expect(Pass, "exact product identity"),
        R::pair(
            "s1-eq4-reverse",
            "(a;q)_{n-k} = (a;q)_n/(a^{-1}q^{1-n};q)_k (-q/a)^k q^{C(k,2)-nk}",
            reverse_lhs,
            reverse_rhs,
        )
        .meta(NK8)
        .constrained("k <= n", k_at_most_n)
        .expect(Pass, "exact rational identity"),
        R::pair(
            "s1-leibniz",
            "D^n{fg} = sum_k q^{-k(n-k)} [n,k] D^k f D^{n-k}{g(q^k x)}",
            leibniz_direct,
            leibniz_sum,
        )
        .meta(N4)
        .series(X)
        .order(6)
        .expect(Pass, "the sign later expansions rely on; f = 1/(1-ax), g = 1/(bx;q)_inf"),
        R::pair(
            "s1-leibniz-printed",
            "D^n{fg} = sum_k q^{k(n-k)} [n,k] D^k f D^{n-k}{g(q^k x)}",
            leibniz_direct,
            leibniz_printed,
        )
        .meta(N4)
        .series(X)
        .order(6)
        .expect(KnownDiscrepancy, "a positive exponent counts the dilation twice; fails from n = 2"),
        R::pair(
            "s1-hahn-generating",
            "sum Phi_n^{(a)}(x,y) t^n/(q;q)_n = (axt;q)_inf/(xt,yt;q)_inf",
            hahn_lhs,
            hahn_rhs,
        )
        .series(Z)
        .expect(Pass, "t is written z"),
        R::pair(
            "s1-asc-phi-generating",
            "sum phi_n(x,y) t^n/(q;q)_n = 3phi2(a,b,c;d,e;q,yt)/(xt;q)_inf, ratio indexed by n",
            phi_n_lhs,
            phi_gf_rhs,
        )
        .series(Z)
        .order(5)
        .expect(
            KnownDiscrepancy,
            "with the ratio (a,b,c)_n/(d,e)_n the polynomial is a multiple of r_n(x,y); e is written v, t is z",
        ),
        R::pair(
            "s1-asc-phi-generating-k",
            "sum phi_n(x,y) t^n/(q;q)_n = 3phi2(a,b,c;d,e;q,yt)/(xt;q)_inf, ratio indexed by k",
            phi_k_lhs,
            phi_gf_rhs,
        )
        .series(Z)
        .order(5)
        .expect(Pass, "indexing the ratio by the summation variable makes the generating function factor"),
        R::pair(
            "s1-asc-psi-generating",
            "sum psi_n(x,y) t^n/(q;q)_n = 3phi3(a,b,c;0,d,e;q,-yt)/(xt;q)_inf, ratio indexed by n",
            psi_n_lhs,
            psi_gf_rhs,
        )
        .series(Z)
        .order(5)
        .expect(KnownDiscrepancy, "the weight (-1)^k q^{k(k-n)} does not split into k and n-k parts"),
        R::pair(
            "s1-asc-psi-generating-k",
            "sum psi_n(x,y) t^n/(q;q)_n = 3phi3(a,b,c;0,d,e;q,-yt)/(xt;q)_inf, ratio indexed by k",
            psi_k_lhs,
            psi_gf_rhs,
        )
        .series(Z)
        .order(5)
        .expect(KnownDiscrepancy, "same weight obstruction as the n-indexed reading"),
    ]
}
