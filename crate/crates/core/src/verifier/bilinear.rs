//! Bilinear (Mehler) and double (Rogers) generating functions.
//!
//! Printed records sum `Psi_k^{(q^{-n})}(b, x | u/q)` as written; corrected
//! records sum the true images of `g_n`, which is what every proof applies
//! the operator to.

use crate::coeff::Symbol::*;
use crate::coeff::{int, qpow, Symbol};
use crate::error::Result;
use crate::families::{deformed_plus_power, Family, IndexConvention};
use crate::qcomb::qfactorial;
use crate::series::GridSeries;

use super::support::*;
use super::{meta, Expansion, Expected, IdentityRecord, Instance, MetaRange};

const NM: &[MetaRange] = &[meta("n", 0, 3), meta("m", 0, 3)];
const K: &[MetaRange] = &[meta("k", 0, 3)];

/// Which polynomial stands on the left.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Reading {
    Printed,
    Corrected,
}

fn poly(r: Reading, n: usize, m: usize, b: Symbol, x: Symbol, u: Symbol) -> Result<RF> {
    match r {
        Reading::Printed => printed_psi(n, m, &s(b), &s(x), &s(u)),
        Reading::Corrected => Ok(monomial_image(n, m, &s(b), &s(x), &s(u))),
    }
}

fn mehler_lhs(i: &Instance, r: Reading, weighted: bool) -> Result<Expansion> {
    let (n, m) = (i.get("n"), i.get("m"));
    let series = series_from(Z, i.order, |k| {
        let t = poly(r, n, k, B, X, U)?.mul(&poly(r, m, k, C, Y, V)?);
        if weighted {
            t.div(&qfactorial(k))
        } else {
            Ok(t)
        }
    })?;
    Ok(series.into())
}

fn xyz() -> RF {
    s(X).mul(&s(Y)).mul(&s(Z))
}

/// Outer weight `[n,k] u^{C(k+1,2)-nk} b^k`.
fn outer(n: usize, k: usize) -> RF {
    qb(n, k).mul(&shifted_weight(&s(U), n, k)).mul(&pw(&s(B), k as i64))
}

fn mehler_ordinary_rhs_printed(i: &Instance) -> Result<Expansion> {
    let (n, m) = (i.get("n"), i.get("m"));
    let (w, cz, zero, one) = (xyz(), s(C).mul(&s(Z)), int(0), int(1));
    let mut sum = int(0);
    for k in 0..=n {
        // 1/(q;q)_{l-k} vanishes for l < k
        for l in k..=m {
            let ql = qpow(l as i64);
            let upper = [&zero, &zero, &qpow(l as i64 + 1)];
            let lower = [&qpow(l as i64 + 1).mul(&w), &qpow((l - k) as i64 + 1)];
            let psi = general(Family::AscGeneralPsi, k, upper, lower, &ql.mul(&w).neg(), &one, IndexConvention::Degree)?;
            let den = (int(1) - ql.mul(&w)).mul(&poch(&w, l)).mul(&qfactorial(l - k));
            let t = outer(n, k)
                .mul(&qb(m, k))
                .mul(&shifted_weight(&s(V), m, l))
                .mul(&qfactorial(l))
                .mul(&qfactorial(l))
                .mul(&pw(&cz, l as i64))
                .mul(&pw(&s(X), (l - k) as i64))
                .mul(&psi)
                .div(&den)?;
            sum = sum.add(&t);
        }
    }
    let sum = sum.div(&qfactorial(m))?;
    Ok(expand(&sum, Z, i.order)?.into())
}

/// `D_x^k {(cxz)^l/(xyz;q)_{l+1}}` through the Leibniz rule, summed over
/// the surviving `i >= k - l`.
fn leibniz_term(k: usize, l: usize) -> Result<RF> {
    let (w, yz) = (xyz(), s(Y).mul(&s(Z)));
    let mut acc = int(0);
    for i in k.saturating_sub(l)..=k {
        let e = l + i - k;
        let t = qb(k, i)
            .mul(&pw(&yz, i as i64))
            .mul(&poch(&qpow(l as i64 + 1), i))
            .mul(&qfactorial(l))
            .mul(&qpow((i * e) as i64))
            .mul(&pw(&s(X), e as i64))
            .div(&poch(&w, l + 1 + i).mul(&qfactorial(e)))?;
        acc = acc.add(&t);
    }
    Ok(acc.mul(&pw(&s(C).mul(&s(Z)), l as i64)))
}

fn mehler_ordinary_rhs_corrected(i: &Instance) -> Result<Expansion> {
    let (n, m) = (i.get("n"), i.get("m"));
    let mut sum = int(0);
    for k in 0..=n {
        for l in 0..=m {
            let t = outer(n, k)
                .mul(&qb(m, l))
                .mul(&shifted_weight(&s(V), m, l))
                .mul(&qfactorial(l))
                .mul(&leibniz_term(k, l)?);
            sum = sum.add(&t);
        }
    }
    Ok(expand(&sum, Z, i.order)?.into())
}

fn mehler_rhs(i: &Instance, r: Reading) -> Result<Expansion> {
    let (n, m) = (i.get("n"), i.get("m"));
    let (cz, yz) = (s(C).mul(&s(Z)), s(Y).mul(&s(Z)));
    let mut sum = int(0);
    for k in 0..=n {
        for l in 0..=k {
            let j = k - l;
            if j > m {
                continue;
            }
            let ql = qpow(l as i64);
            let arg = pw(&s(V), 1 - m as i64 + j as i64).mul(&ql).mul(&cz).mul(&s(X));
            let mut step = pw(&s(V), 1 - m as i64).mul(&cz);
            if r == Reading::Printed {
                step = step.mul(&ql);
            }
            let t = outer(n, k)
                .mul(&qb(k, l))
                .mul(&qb(m, j))
                .mul(&pw(&s(V), b2(j)))
                .mul(&qfactorial(j))
                .mul(&deformed_plus_power(m - j, &arg, &s(V)))
                .mul(&pw(&yz, l as i64))
                .mul(&pw(&step, j as i64));
            sum = sum.add(&t);
        }
    }
    let inner = expand(&sum, Z, i.order)?;
    Ok(inv_poch_inf(&s(X).mul(&s(Y)), Z, i.order)?.mul(&inner).into())
}

fn rogers_lhs(i: &Instance, r: Reading, weighted: bool) -> Result<Expansion> {
    let k = i.get("k");
    let g = GridSeries::from_fn(Y, Z, i.order, |a, b| {
        let p = poly(r, k, a + b, B, X, U)?;
        if weighted {
            p.div(&qfactorial(a).mul(&qfactorial(b)))
        } else {
            Ok(p)
        }
    })?;
    Ok(g.into())
}

fn rogers_ordinary_rhs(i: &Instance, r: Reading) -> Result<Expansion> {
    let k = i.get("k");
    let (xy, xz) = (s(X).mul(&s(Y)), s(X).mul(&s(Z)));
    let mut sum = int(0);
    for l in 0..=k {
        let mut inner = int(0);
        for j in 0..=l {
            let mut t = qb(l, j)
                .mul(&pw(&s(Y), j as i64))
                .mul(&pw(&s(Z), (l - j) as i64))
                .div(&poch(&s(Q).mul(&xy), j).mul(&poch(&qpow(j as i64).mul(&xz), l - j + 1)))?;
            if r == Reading::Corrected {
                t = t.mul(&qfactorial(j)).mul(&qfactorial(l - j));
            }
            inner = inner.add(&t);
        }
        sum = sum.add(&outer(k, l).mul(&inner));
    }
    let f = sum.div(&(int(1) - xy))?;
    Ok(GridSeries::from_rational(&f, Y, Z, i.order)?.into())
}

fn rogers_rhs(i: &Instance) -> Result<Expansion> {
    let (k, o) = (i.get("k"), i.order);
    let xz = s(X).mul(&s(Z));
    let mut sum = int(0);
    for l in 0..=k {
        sum = sum.add(&outer(k, l).mul(&hahn(l, &xz, &s(Y), &s(Z))?));
    }
    let poly = GridSeries::from_rational(&sum, Y, Z, o)?;
    let a = grid_inv_poch(&s(X), (1, 0), (Y, Z), o)?;
    let b = grid_inv_poch(&s(X), (0, 1), (Y, Z), o)?;
    Ok(a.mul(&b).mul(&poly).into())
}

pub(super) fn records() -> Vec<IdentityRecord> {
    use Expected::*;
    type R = IdentityRecord;
    vec![
        R::pair(
            "s4-mehler-ordinary",
            "sum_k Psi_k^{(q^{-n})}(b,x|u/q) Psi_k^{(q^{-m})}(c,y|v/q) z^k = 1/(q;q)_m sum_k [n,k] u^{C(k+1,2)-nk} b^k sum_l [m,k] v^{C(l+1,2)-ml} (q;q)_l^2 (cz)^l x^{l-k}/((1-q^l xyz)(xyz;q)_l (q;q)_{l-k}) psi_k^{(0,0,q^{l+1};q^{l+1}xyz,q^{l-k+1})}(-q^l xyz,1|q)",
            |i| mehler_lhs(i, Reading::Printed, false),
            mehler_ordinary_rhs_printed,
        )
        .meta(NM)
        .series(Z)
        .order(6)
        .expect(KnownDiscrepancy, "printed [m,k], the stray 1/(q;q)_m and the monomial-action error"),
        R::pair(
            "s4-mehler-ordinary-corrected",
            "sum_k u^{-C(n,2)} g_n(bD|u){x^k} v^{-C(m,2)} g_m(cD|v){y^k} z^k = sum_k [n,k] u^{C(k+1,2)-nk} b^k sum_l [m,l] v^{C(l+1,2)-ml} (q;q)_l D_x^k{(cxz)^l/(xyz;q)_{l+1}}",
            |i| mehler_lhs(i, Reading::Corrected, false),
            mehler_ordinary_rhs_corrected,
        )
        .meta(NM)
        .series(Z)
        .order(6)
        .expect(Pass, "[m,l] in the inner sum, no 1/(q;q)_m, every l kept"),
        R::pair(
            "s4-mehler",
            "sum_k Psi_k^{(q^{-n})}(b,x|u/q) Psi_k^{(q^{-m})}(c,y|v/q) z^k/(q;q)_k = 1/(xyz;q)_inf sum_k [n,k] u^{C(k+1,2)-nk} b^k sum_l [k,l][m,k-l] v^{C(k-l,2)} (q;q)_{k-l} (1 (+)_{1,v} v^{1-m+k-l} q^l cxz)^{(m-k+l)} (yz)^l (v^{1-m} q^l cz)^{k-l}",
            |i| mehler_lhs(i, Reading::Printed, true),
            |i| mehler_rhs(i, Reading::Printed),
        )
        .meta(NM)
        .series(Z)
        .order(6)
        .expect(KnownDiscrepancy, "the monomial-action error and a stray q^{l(k-l)}"),
        R::pair(
            "s4-mehler-corrected",
            "sum_k u^{-C(n,2)} g_n(bD|u){x^k} v^{-C(m,2)} g_m(cD|v){y^k} z^k/(q;q)_k = 1/(xyz;q)_inf sum_k [n,k] u^{C(k+1,2)-nk} b^k sum_l [k,l][m,k-l] v^{C(k-l,2)} (q;q)_{k-l} (1 (+)_{1,v} v^{1-m+k-l} q^l cxz)^{(m-k+l)} (yz)^l (v^{1-m} cz)^{k-l}",
            |i| mehler_lhs(i, Reading::Corrected, true),
            |i| mehler_rhs(i, Reading::Corrected),
        )
        .meta(NM)
        .series(Z)
        .order(6)
        .expect(Pass, "the Leibniz weight q^{l(l-k)} cancels the q^l inside the last power"),
        R::pair(
            "s4-rogers-ordinary",
            "sum_{n,m} Psi_{n+m}^{(q^{-k})}(b,x|u/q) y^n z^m = 1/(1-xy) sum_l [k,l] u^{C(l+1,2)-lk} b^l sum_i [l,i] y^i/(qxy;q)_i z^{l-i}/(q^i xz;q)_{l-i+1}",
            |i| rogers_lhs(i, Reading::Printed, false),
            |i| rogers_ordinary_rhs(i, Reading::Printed),
        )
        .meta(K)
        .grid(Y, Z)
        .order(6)
        .expect(KnownDiscrepancy, "drops (q;q)_i (q;q)_{l-i} from the derivatives, on top of the monomial-action error"),
        R::pair(
            "s4-rogers-ordinary-corrected",
            "sum_{n,m} u^{-C(k,2)} g_k(bD|u){x^{n+m}} y^n z^m = 1/(1-xy) sum_l [k,l] u^{C(l+1,2)-lk} b^l sum_i [l,i] (q;q)_i (q;q)_{l-i} y^i/(qxy;q)_i z^{l-i}/(q^i xz;q)_{l-i+1}",
            |i| rogers_lhs(i, Reading::Corrected, false),
            |i| rogers_ordinary_rhs(i, Reading::Corrected),
        )
        .meta(K)
        .grid(Y, Z)
        .order(6)
        .expect(Pass, "true images and the full derivatives of 1/(1-xy) and 1/(1-q^i xz)"),
        R::pair(
            "s4-rogers",
            "sum_{n,m} Psi_{n+m}^{(q^{-k})}(b,x|u/q) y^n/(q;q)_n z^m/(q;q)_m = 1/(xy,xz;q)_inf sum_l [k,l] u^{C(l+1,2)-kl} b^l Phi_l^{(xz)}(y,z|q)",
            |i| rogers_lhs(i, Reading::Printed, true),
            rogers_rhs,
        )
        .meta(K)
        .grid(Y, Z)
        .order(6)
        .expect(KnownDiscrepancy, "inherits the monomial-action error"),
        R::pair(
            "s4-rogers-corrected",
            "sum_{n,m} u^{-C(k,2)} g_k(bD|u){x^{n+m}} y^n/(q;q)_n z^m/(q;q)_m = 1/(xy,xz;q)_inf sum_l [k,l] u^{C(l+1,2)-kl} b^l Phi_l^{(xz)}(y,z|q)",
            |i| rogers_lhs(i, Reading::Corrected, true),
            rogers_rhs,
        )
        .meta(K)
        .grid(Y, Z)
        .order(6)
        .expect(Pass, "true images on the left"),
    ]
}
