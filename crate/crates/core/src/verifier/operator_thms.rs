//! Operator actions on monomials and on products of infinite Pochhammers.
//!
//! Left sides apply the operator to an expansion of its argument; right
//! sides evaluate the stated closed forms. Finite operators consume `n`
//! orders, so their inputs carry `n` orders of headroom.

use crate::coeff::Symbol::*;
use crate::coeff::{int, qpow, Symbol};
use crate::error::{Error, Result};
use crate::families::{deformed_plus_power, deformed_plus_power_homogeneous, Family, PolySpec};
use crate::operators::{apply_graded, apply_operator, monomial_x, operator_limit_check, LimitKind, OperatorSpec};
use crate::qcomb::qfactorial;
use crate::report::{Mismatch, Status};
use crate::series::{phi_coefficient, GridSeries, TruncatedSeries};

use super::support::*;
use super::{meta, Expansion, Expected, IdentityRecord, Instance, MetaRange};

const N3: &[MetaRange] = &[meta("n", 0, 3)];
const NM4: &[MetaRange] = &[meta("m", 0, 4), meta("n", 1, 4)];
const M6: &[MetaRange] = &[meta("m", 0, 6)];
const KN: &[MetaRange] = &[meta("k", 0, 3), meta("n", 1, 8)];

fn n_exceeds_k(m: &std::collections::BTreeMap<String, i64>) -> bool {
    m["n"] > m["k"]
}

fn g_op(n: usize, b: Symbol) -> OperatorSpec {
    OperatorSpec::g(n, s(b), s(U))
}

fn u_binom(n: usize) -> RF {
    pw(&s(U), b2(n))
}

/// `u^{1-n} c`, the rescaled coefficient in the finite sums.
fn u_scaled(n: usize, c: &RF) -> RF {
    pw(&s(U), 1 - n as i64).mul(c)
}

// ---- monomials

fn monomial_lhs(i: &Instance) -> Result<Expansion> {
    let (n, m) = (i.get("n"), i.get("m"));
    let x_m = monomial_x(m, i.order + n).truncate(i.order + n);
    Ok(apply_operator(&g_op(n, B), &x_m)?.into())
}

fn monomial_rhs(i: &Instance) -> Result<Expansion> {
    let (n, m) = (i.get("n"), i.get("m"));
    let spec = PolySpec::new(Family::AscHomogeneousDeformed, m)
        .with("a", qpow(-(n as i64)))
        .with("x", s(U).mul(&s(B)))
        .with("y", s(X))
        .with("u", s(U).div(&s(Q))?);
    let psi = crate::families::build_polynomial(&spec)?;
    Ok(expand(&u_binom(n).mul(&psi), X, i.order)?.into())
}

fn monomial_rhs_corrected(i: &Instance) -> Result<Expansion> {
    let (n, m) = (i.get("n"), i.get("m"));
    let c = monomial_image(n, m, &s(B), &s(X), &s(U));
    Ok(expand(&u_binom(n).mul(&c), X, i.order)?.into())
}

fn t_monomial_lhs(i: &Instance) -> Result<Expansion> {
    let x_m = monomial_x(i.get("m"), i.order).truncate(i.order);
    Ok(apply_operator(&OperatorSpec::t_deformed(s(B), s(U)), &x_m)?.into())
}

fn t_monomial_rhs(i: &Instance) -> Result<Expansion> {
    let p = deformed_plus_power_homogeneous(i.get("m"), &s(X), &s(B), &s(U));
    Ok(expand(&p, X, i.order)?.into())
}

fn t_monomial_proof_sum(i: &Instance) -> Result<Expansion> {
    let m = i.get("m");
    let r: RF = (0..=m).map(|j| qb(m, j).mul(&pw(&s(B), j as i64)).mul(&pw(&s(X), (m - j) as i64))).sum();
    Ok(expand(&r, X, i.order)?.into())
}

// ---- 1/(ax;q)_inf and (ax;q)_inf

fn on_inv_ax(op: OperatorSpec, i: &Instance) -> Result<Expansion> {
    let input = inv_poch_inf(&s(A), X, i.order + op.max_power().unwrap_or(0))?;
    Ok(apply_operator(&op, &input)?.into())
}

fn times_inv_ax(c: RF, i: &Instance) -> Result<Expansion> {
    Ok(inv_poch_inf(&s(A), X, i.order)?.scale(&c).into())
}

fn inv_poch_g(i: &Instance) -> Result<Expansion> {
    on_inv_ax(g_op(i.get("n"), B), i)
}

fn inv_poch_g_rhs(i: &Instance) -> Result<Expansion> {
    let n = i.get("n");
    let ab = s(A).mul(&s(B));
    times_inv_ax(u_binom(n).mul(&deformed_plus_power(n, &u_scaled(n, &ab), &s(U))), i)
}

fn inv_poch_h(i: &Instance) -> Result<Expansion> {
    on_inv_ax(OperatorSpec::h(i.get("n"), s(B)), i)
}

fn inv_poch_h_rhs(i: &Instance) -> Result<Expansion> {
    let spec = PolySpec::new(Family::RogersSzego, i.get("n")).with("x", s(A).mul(&s(B)));
    times_inv_ax(crate::families::build_polynomial(&spec)?, i)
}

fn inv_poch_s(i: &Instance) -> Result<Expansion> {
    on_inv_ax(OperatorSpec::s(i.get("n"), s(B)), i)
}

fn shifted_ab(n: usize) -> RF {
    qpow(1 - n as i64).mul(&s(A)).mul(&s(B))
}

fn inv_poch_s_product(i: &Instance) -> Result<Expansion> {
    let n = i.get("n");
    times_inv_ax(qpow(b2(n)).mul(&poch(&shifted_ab(n).neg(), n)), i)
}

fn inv_poch_s_plus(i: &Instance) -> Result<Expansion> {
    let n = i.get("n");
    times_inv_ax(qpow(b2(n)).mul(&deformed_plus_power(n, &shifted_ab(n), &s(Q))), i)
}

fn poch_g(i: &Instance) -> Result<Expansion> {
    let n = i.get("n");
    let input = poch_inf(&s(A), X, i.order + n)?;
    Ok(apply_operator(&g_op(n, B), &input)?.into())
}

fn poch_g_rhs(i: &Instance) -> Result<Expansion> {
    let zero = int(0);
    let psi = generalized_deformed(i.get("n"), [&zero, &zero, &s(A)], &s(A).mul(&s(B)), &int(1), &s(U))?;
    Ok(poch_inf(&s(A), X, i.order)?.scale(&psi).into())
}

fn poch_g_rhs_corrected(i: &Instance) -> Result<Expansion> {
    let n = i.get("n");
    let (ab, ax) = (s(A).mul(&s(B)), s(A).mul(&s(X)));
    let mut sum = int(0);
    for k in 0..=n {
        let t = qb(n, k)
            .mul(&shifted_weight(&s(U), n, k))
            .mul(&qpow(b2(k)))
            .mul(&pw(&ab, k as i64))
            .scale_int(sign(k))
            .div(&poch(&ax, k))?;
        sum = sum.add(&t);
    }
    let tail = expand(&u_binom(n).mul(&sum), X, i.order)?;
    Ok(poch_inf(&s(A), X, i.order)?.mul(&tail).into())
}

// ---- 1/(bx,cx;q)_inf

fn inv_bc(order: usize) -> Result<TruncatedSeries> {
    Ok(inv_poch_inf(&s(B), X, order)?.mul(&inv_poch_inf(&s(C), X, order)?))
}

fn hahn_cx(k: usize) -> Result<RF> {
    hahn(k, &s(C).mul(&s(X)), &s(B), &s(C))
}

fn thm4_lhs(i: &Instance) -> Result<Expansion> {
    let n = i.get("n");
    Ok(apply_operator(&g_op(n, A), &inv_bc(i.order + n)?)?.into())
}

fn thm4_rhs(i: &Instance) -> Result<Expansion> {
    let n = i.get("n");
    let ua = u_scaled(n, &s(A));
    let mut sum = int(0);
    for k in 0..=n {
        let t = qb(n, k).mul(&pw(&s(U), b2(k))).mul(&pw(&ua, k as i64)).mul(&hahn_cx(k)?);
        sum = sum.add(&t);
    }
    Ok(inv_bc(i.order)?.mul(&expand(&u_binom(n).mul(&sum), X, i.order)?).into())
}

fn thm5_lhs(i: &Instance) -> Result<Expansion> {
    Ok(series_from(A, i.order, |k| hahn_cx(k)?.div(&qfactorial(k)))?.into())
}

fn thm5_rhs(i: &Instance) -> Result<Expansion> {
    let o = i.order;
    // (abcx;q)_inf as a product in a with coefficient bcx
    let num = poch_inf(&s(B).mul(&s(C)).mul(&s(X)), A, o)?;
    Ok(num.mul(&inv_poch_inf(&s(C), A, o)?).mul(&inv_poch_inf(&s(B), A, o)?).into())
}

const AX: (Symbol, Symbol) = (A, X);
const DX: (Symbol, Symbol) = (D, X);

fn grid_rational(f: &RF, g: (Symbol, Symbol), degree: usize) -> Result<GridSeries> {
    GridSeries::from_rational(f, g.0, g.1, degree)
}

fn thm6_input(degree: usize) -> Result<GridSeries> {
    Ok(grid_inv_poch(&s(B), (0, 1), AX, degree)?.mul(&grid_inv_poch(&s(C), (0, 1), AX, degree)?))
}

fn thm6_lhs(i: &Instance) -> Result<Expansion> {
    Ok(apply_graded(&OperatorSpec::e_plain(s(A)), &thm6_input(i.order)?)?.into())
}

/// `(s ac;q)_inf/(bx,cx;q)_inf sum_j w_j (cx;q)_j (ab)^j/((q;q)_j (s ac;q)_j)`
/// with `s = 1, w_j = 1` as printed and `s = -1, w_j = q^{C(j,2)}` corrected.
fn thm6_rhs_with(i: &Instance, corrected: bool) -> Result<Expansion> {
    let d = i.order;
    let sc = if corrected { s(C).neg() } else { s(C) };
    let (ac, ab, cx) = (sc.mul(&s(A)), s(A).mul(&s(B)), s(C).mul(&s(X)));
    let mut sum = GridSeries::zero(A, X, d);
    for j in 0..=d {
        let w = if corrected { qpow(b2(j)) } else { int(1) };
        let t = w.mul(&poch(&cx, j)).mul(&pw(&ab, j as i64)).div(&qfactorial(j).mul(&poch(&ac, j)))?;
        sum = sum.add(&grid_rational(&t, AX, d)?);
    }
    let pre = grid_poch(&sc, (1, 0), AX, d)?.mul(&thm6_input(d)?);
    Ok(pre.mul(&sum).into())
}

fn thm6_rhs(i: &Instance) -> Result<Expansion> {
    thm6_rhs_with(i, false)
}

fn thm6_rhs_corrected(i: &Instance) -> Result<Expansion> {
    thm6_rhs_with(i, true)
}

// ---- (cx;q)_inf/(ax,bx;q)_inf

fn ratio_series(order: usize) -> Result<TruncatedSeries> {
    let num = poch_inf(&s(C), X, order)?;
    Ok(num.mul(&inv_poch_inf(&s(A), X, order)?).mul(&inv_poch_inf(&s(B), X, order)?))
}

fn hahn_bx(m: usize) -> Result<RF> {
    hahn(m, &s(B).mul(&s(X)), &s(A), &s(B))
}

fn thm7_lhs(i: &Instance) -> Result<Expansion> {
    let n = i.get("n");
    Ok(apply_operator(&g_op(n, D), &ratio_series(i.order + n)?)?.into())
}

fn thm7_rhs_with(i: &Instance, corrected: bool) -> Result<Expansion> {
    let n = i.get("n");
    let (ud, cx) = (u_scaled(n, &s(D)), s(C).mul(&s(X)));
    let mut sum = int(0);
    for l in 0..=n {
        for m in 0..=l {
            let j = l - m;
            let mut c = pw(&s(C), j as i64);
            if corrected {
                c = c.mul(&qpow(b2(j))).scale_int(sign(j));
            }
            let t = qb(n, l)
                .mul(&qb(l, m))
                .mul(&pw(&s(U), b2(l)))
                .mul(&hahn_bx(m)?.div(&poch(&cx, l))?)
                .mul(&pw(&ud, l as i64))
                .mul(&c);
            sum = sum.add(&t);
        }
    }
    let tail = expand(&u_binom(n).mul(&sum), X, i.order)?;
    Ok(ratio_series(i.order)?.mul(&tail).into())
}

fn thm7_rhs(i: &Instance) -> Result<Expansion> {
    thm7_rhs_with(i, false)
}

fn thm7_rhs_corrected(i: &Instance) -> Result<Expansion> {
    thm7_rhs_with(i, true)
}

fn ratio_grid(degree: usize) -> Result<GridSeries> {
    let num = grid_poch(&s(C), (0, 1), DX, degree)?;
    Ok(num
        .mul(&grid_inv_poch(&s(A), (0, 1), DX, degree)?)
        .mul(&grid_inv_poch(&s(B), (0, 1), DX, degree)?))
}

fn thm8_lhs(i: &Instance) -> Result<Expansion> {
    Ok(apply_graded(&OperatorSpec::e_plain(s(D)), &ratio_grid(i.order)?)?.into())
}

/// Inner series `sum_j coef_j (-q^m cd)^j`: the printed `1phi1(0; c q^m x)`
/// or the `0phi1(-; c q^m x)` the derivation produces.
fn thm8_rhs_with(i: &Instance, corrected: bool) -> Result<Expansion> {
    let d = i.order;
    let cx = s(C).mul(&s(X));
    let mut sum = GridSeries::zero(D, X, d);
    for m in 0..=d {
        let outer = qpow(b2(m))
            .mul(&hahn_bx(m)?)
            .mul(&pw(&s(D), m as i64))
            .div(&qfactorial(m).mul(&poch(&cx, m)))?;
        let lower = [cx.mul(&qpow(m as i64))];
        let upper: &[RF] = if corrected { &[] } else { &[int(0)] };
        let arg = qpow(m as i64).mul(&s(C)).mul(&s(D)).neg();
        for j in 0..=d - m {
            let t = outer.mul(&phi_coefficient(upper, &lower, j)?).mul(&pw(&arg, j as i64));
            sum = sum.add(&grid_rational(&t, DX, d)?);
        }
    }
    Ok(ratio_grid(d)?.mul(&sum).into())
}

fn thm8_rhs(i: &Instance) -> Result<Expansion> {
    thm8_rhs_with(i, false)
}

fn thm8_rhs_corrected(i: &Instance) -> Result<Expansion> {
    thm8_rhs_with(i, true)
}

// ---- 1/(ax,bx,cx;q)_inf

fn triple_series(order: usize) -> Result<TruncatedSeries> {
    Ok(inv_poch_inf(&s(A), X, order)?.mul(&inv_bc(order)?))
}

fn thm9_lhs(i: &Instance) -> Result<Expansion> {
    let n = i.get("n");
    Ok(apply_operator(&g_op(n, D), &triple_series(i.order + n)?)?.into())
}

fn thm9_rhs_with(i: &Instance, corrected: bool) -> Result<Expansion> {
    let n = i.get("n");
    let cx = s(C).mul(&s(X));
    let mut sum = int(0);
    for k in 0..=n {
        let e = if corrected { b2(k + 1) } else { b2(k) } - (n * k) as i64;
        for l in 0..=k {
            let t = qb(n, k)
                .mul(&qb(k, l))
                .mul(&pw(&s(U), e))
                .mul(&pw(&s(D), k as i64))
                .mul(&hahn_bx(l)?)
                .mul(&poch(&cx, l))
                .mul(&pw(&s(C), (k - l) as i64));
            sum = sum.add(&t);
        }
    }
    let tail = expand(&u_binom(n).mul(&sum), X, i.order)?;
    Ok(triple_series(i.order)?.mul(&tail).into())
}

fn thm9_rhs(i: &Instance) -> Result<Expansion> {
    thm9_rhs_with(i, false)
}

fn thm9_rhs_corrected(i: &Instance) -> Result<Expansion> {
    thm9_rhs_with(i, true)
}

fn triple_grid(degree: usize) -> Result<GridSeries> {
    let mut g = GridSeries::one(D, X, degree);
    for c in [A, B, C] {
        g = g.mul(&grid_inv_poch(&s(c), (0, 1), DX, degree)?);
    }
    Ok(g)
}

fn thm10_lhs(i: &Instance) -> Result<Expansion> {
    Ok(apply_graded(&OperatorSpec::e_plain(s(D)), &triple_grid(i.order)?)?.into())
}

/// Printed: `(cd)_inf sum_k ... /(cd)_k * 1phi1(q^k cx; q^k cd; q, -q^k bd)`;
/// corrected: `cd -> -cd` in all three places.
fn thm10_rhs_with(i: &Instance, corrected: bool) -> Result<Expansion> {
    let d = i.order;
    let sc = if corrected { s(C).neg() } else { s(C) };
    let (bx, cx, cd) = (s(B).mul(&s(X)), s(C).mul(&s(X)), sc.mul(&s(D)));
    let ad = s(A).mul(&s(D));
    let mut sum = GridSeries::zero(D, X, d);
    for k in 0..=d {
        let qk = qpow(k as i64);
        let outer = qpow(b2(k))
            .mul(&poch(&bx, k))
            .mul(&poch(&cx, k))
            .mul(&pw(&ad, k as i64))
            .div(&qfactorial(k).mul(&poch(&cd, k)))?;
        let (upper, lower) = ([qk.mul(&cx)], [qk.mul(&cd)]);
        let arg = qk.mul(&s(B)).mul(&s(D)).neg();
        for j in 0..=d - k {
            let t = outer.mul(&phi_coefficient(&upper, &lower, j)?).mul(&pw(&arg, j as i64));
            sum = sum.add(&grid_rational(&t, DX, d)?);
        }
    }
    let pre = grid_poch(&sc, (1, 0), DX, d)?.mul(&triple_grid(d)?);
    Ok(pre.mul(&sum).into())
}

fn thm10_rhs(i: &Instance) -> Result<Expansion> {
    thm10_rhs_with(i, false)
}

fn thm10_rhs_corrected(i: &Instance) -> Result<Expansion> {
    thm10_rhs_with(i, true)
}

// ---- limits

fn limit(kind: LimitKind, i: &Instance) -> Result<Option<Mismatch>> {
    let r = operator_limit_check(kind, i.get("k"), i.get("n"));
    match r.status {
        Status::Unsupported => Err(Error::UnsupportedExpression(r.reason.unwrap_or_default())),
        _ => Ok(r.first_mismatch),
    }
}

fn limit_t_deformed(i: &Instance) -> Result<Option<Mismatch>> {
    limit(LimitKind::TDeformedFromG, i)
}

fn limit_t_plain(i: &Instance) -> Result<Option<Mismatch>> {
    limit(LimitKind::TPlainFromH, i)
}

fn limit_e(i: &Instance) -> Result<Option<Mismatch>> {
    limit(LimitKind::EFromS, i)
}

pub(super) fn records() -> Vec<IdentityRecord> {
    use Expected::*;
    type R = IdentityRecord;
    vec![
        R::pair(
            "s2-thm1-monomial",
            "g_n(bD|u){x^m} = u^{C(n,2)} Psi_m^{(q^{-n})}(ub, x | u/q)",
            monomial_lhs,
            monomial_rhs,
        )
        .meta(NM4)
        .series(X)
        .expect(
            KnownDiscrepancy,
            "holds only for m = 0 and m = n+1; the stated family has weight (u/q)^{C(k+1,2)-mk}, the operator gives (u/q)^{C(k,2)-nk}",
        ),
        R::pair(
            "s2-thm1-monomial-corrected",
            "g_n(bD|u){x^m} = u^{C(n,2)} sum_k [m,k] (-1)^k (u/q)^{C(k,2)-nk} (q^{-n};q)_k (ub)^k x^{m-k}",
            monomial_lhs,
            monomial_rhs_corrected,
        )
        .meta(NM4)
        .series(X)
        .expect(Pass, "closed form read off the expansion of g_n term by term"),
        R::pair(
            "s2-thm1-T-deformed",
            "T(bD,u){x^m} = (x (+)_{1,u} b)^{(m)} = sum_k [m,k] u^{C(k,2)} b^k x^{m-k}",
            t_monomial_lhs,
            t_monomial_rhs,
        )
        .meta(M6)
        .series(X)
        .expect(Pass, "the (+)-power is read as the u-weighted binomial sum"),
        R::pair(
            "s2-thm1-T-proof-sum",
            "T(bD,u){x^m} = sum_j [m,j] b^j x^{m-j}",
            t_monomial_lhs,
            t_monomial_proof_sum,
        )
        .meta(M6)
        .series(X)
        .expect(KnownDiscrepancy, "the closing sum drops u^{C(j,2)}; agrees for m <= 1"),
        R::pair(
            "s2-thm2-eq-inv-poch",
            "g_n(bD|u){1/(ax;q)_inf} = u^{C(n,2)} (1 (+)_{1,u} u^{1-n}ab)^{(n)}/(ax;q)_inf",
            inv_poch_g,
            inv_poch_g_rhs,
        )
        .meta(N3)
        .series(X)
        .expect(Pass, "D^k 1/(ax)_inf = a^k/(ax)_inf"),
        R::pair(
            "s2-thm2-u1",
            "h_n(bD|q){1/(ax;q)_inf} = h_n(ab|q)/(ax;q)_inf",
            inv_poch_h,
            inv_poch_h_rhs,
        )
        .meta(N3)
        .series(X)
        .expect(Pass, "u = 1 specialization"),
        R::pair(
            "s2-thm2-uq",
            "s_n(bD|q){1/(ax;q)_inf} = q^{C(n,2)} (-q^{1-n}ab;q)_n/(ax;q)_inf",
            inv_poch_s,
            inv_poch_s_product,
        )
        .meta(N3)
        .series(X)
        .expect(Pass, "u = q specialization, product form"),
        R::pair(
            "s2-thm2-uq-plus",
            "s_n(bD|q){1/(ax;q)_inf} = q^{C(n,2)} (1 (+)_{1,q} q^{1-n}ab)^{(n)}/(ax;q)_inf",
            inv_poch_s,
            inv_poch_s_plus,
        )
        .meta(N3)
        .series(X)
        .expect(Pass, "u = q specialization, (+)-power form"),
        R::pair(
            "s2-thm3-poch",
            "g_n(bD|u){(ax;q)_inf} = (ax;q)_inf Psi_n^{(0,0,a)}(ab, 1 | u)",
            poch_g,
            poch_g_rhs,
        )
        .meta(N3)
        .series(X)
        .expect(
            KnownDiscrepancy,
            "D^k (ax)_inf = (-a)^k q^{C(k,2)} (ax)_inf/(ax;q)_k; the sign, q^{C(k,2)}, the x in (ax;q)_k and u^{C(n,2)} are lost",
        ),
        R::pair(
            "s2-thm3-poch-corrected",
            "g_n(bD|u){(ax;q)_inf} = u^{C(n,2)} (ax;q)_inf sum_k [n,k] u^{C(k+1,2)-nk} (-1)^k q^{C(k,2)} (ab)^k/(ax;q)_k",
            poch_g,
            poch_g_rhs_corrected,
        )
        .meta(N3)
        .series(X)
        .expect(Pass, "expansion with the exact D^k of (ax;q)_inf"),
        R::pair(
            "s2-thm4-phi",
            "g_n(aD|u){1/(bx,cx;q)_inf} = u^{C(n,2)}/(bx,cx;q)_inf sum_k [n,k] u^{C(k,2)} (u^{1-n}a)^k Phi_k^{(cx)}(b,c)",
            thm4_lhs,
            thm4_rhs,
        )
        .meta(N3)
        .series(X)
        .order(6)
        .expect(Pass, "Leibniz expansion of D^k over the two products"),
        R::pair(
            "s2-thm5-phi-sum",
            "sum_k Phi_k^{(cx)}(b,c) a^k/(q;q)_k = (abcx;q)_inf/(ac,ab;q)_inf",
            thm5_lhs,
            thm5_rhs,
        )
        .series(A)
        .order(6)
        .expect(Pass, "expanded in a"),
        R::pair(
            "s2-thm6-E-phi",
            "E(aD){1/(bx,cx;q)_inf} = (ac;q)_inf/(bx,cx;q)_inf 2phi1(cx,0;ac;q,ab)",
            thm6_lhs,
            thm6_rhs,
        )
        .grid(A, X)
        .order(6)
        .expect(
            KnownDiscrepancy,
            "summing q^{C(l,2)} (q^k ac)^l/(q;q)_l gives (-q^k ac;q)_inf, so ac should read -ac with q^{C(k,2)} in the sum",
        ),
        R::pair(
            "s2-thm6-E-phi-corrected",
            "E(aD){1/(bx,cx;q)_inf} = (-ac;q)_inf/(bx,cx;q)_inf 1phi1(cx;-ac;q,-ab)",
            thm6_lhs,
            thm6_rhs_corrected,
        )
        .grid(A, X)
        .order(6)
        .expect(Pass, "E_q(z) = (-z;q)_inf in the inner sum"),
        R::pair(
            "s2-thm7-g-ratio",
            "g_n(dD|u){(cx)_inf/(ax,bx)_inf} = (cx)_inf/(ax,bx)_inf u^{C(n,2)} sum_{l,m} [n,l][l,m] u^{C(l,2)} Phi_m^{(bx)}(a,b)/(cx;q)_l (u^{1-n}d)^l c^{l-m}",
            thm7_lhs,
            thm7_rhs,
        )
        .meta(N3)
        .series(X)
        .order(6)
        .expect(
            KnownDiscrepancy,
            "D^j (q^m cx)_inf = (-q^m c)^j q^{C(j,2)} (q^{m+j} cx)_inf; the factor (-1)^{l-m} q^{C(l-m,2)} is missing",
        ),
        R::pair(
            "s2-thm7-g-ratio-corrected",
            "as printed with c^{l-m} replaced by (-1)^{l-m} q^{C(l-m,2)} c^{l-m}",
            thm7_lhs,
            thm7_rhs_corrected,
        )
        .meta(N3)
        .series(X)
        .order(6)
        .expect(Pass, "exact D^j of the numerator product"),
        R::pair(
            "s2-thm8-E-ratio",
            "E(dD){(cx)_inf/(ax,bx)_inf} = (cx)_inf/(ax,bx)_inf sum_m q^{C(m,2)} Phi_m^{(bx)}(a,b) d^m/((q;q)_m (cx;q)_m) 1phi1(0;cq^m x;q,-q^m cd)",
            thm8_lhs,
            thm8_rhs,
        )
        .grid(D, X)
        .order(6)
        .expect(
            KnownDiscrepancy,
            "inherits the missing signs of the g_n version; the limit in n is vacuous",
        ),
        R::pair(
            "s2-thm8-E-ratio-corrected",
            "E(dD){(cx)_inf/(ax,bx)_inf} = (cx)_inf/(ax,bx)_inf sum_m q^{C(m,2)} Phi_m^{(bx)}(a,b) d^m/((q;q)_m (cx;q)_m) 0phi1(-;cq^m x;q,-q^m cd)",
            thm8_lhs,
            thm8_rhs_corrected,
        )
        .grid(D, X)
        .order(6)
        .expect(Pass, "the signed inner sum carries q^{2C(j,2)}, which is the 0phi1 balance"),
        R::pair(
            "s2-thm9-g-triple",
            "g_n(dD|u){1/(ax,bx,cx)_inf} = u^{C(n,2)}/(ax,bx,cx)_inf sum_{k,l} [n,k][k,l] u^{C(k,2)-nk} d^k Phi_l^{(bx)}(a,b) (cx;q)_l c^{k-l}",
            thm9_lhs,
            thm9_rhs,
        )
        .meta(N3)
        .series(X)
        .order(6)
        .expect(KnownDiscrepancy, "the operator weight is u^{C(k+1,2)-nk}; the statement drops one u^k"),
        R::pair(
            "s2-thm9-g-triple-corrected",
            "as printed with u^{C(k,2)-nk} replaced by u^{C(k+1,2)-nk}",
            thm9_lhs,
            thm9_rhs_corrected,
        )
        .meta(N3)
        .series(X)
        .order(6)
        .expect(Pass, "weight of g_n after factoring u^{C(n,2)}"),
        R::pair(
            "s2-thm10-E-triple",
            "E(dD){1/(ax,bx,cx)_inf} = (cd)_inf/(ax,bx,cx)_inf sum_k q^{C(k,2)} (bx,cx)_k/(q,cd)_k (ad)^k 1phi1(q^k cx;q^k cd;q,-q^k bd)",
            thm10_lhs,
            thm10_rhs,
        )
        .grid(D, X)
        .order(6)
        .expect(
            KnownDiscrepancy,
            "sum_k q^{C(k,2)} (q^l dc)^k/(q;q)_k is (-q^l cd;q)_inf, so cd should read -cd throughout",
        ),
        R::pair(
            "s2-thm10-E-triple-corrected",
            "E(dD){1/(ax,bx,cx)_inf} = (-cd)_inf/(ax,bx,cx)_inf sum_k q^{C(k,2)} (bx,cx)_k/(q,-cd)_k (ad)^k 1phi1(q^k cx;-q^k cd;q,-q^k bd)",
            thm10_lhs,
            thm10_rhs_corrected,
        )
        .grid(D, X)
        .order(6)
        .expect(Pass, "E_q(z) = (-z;q)_inf in the inner sum"),
        R::custom(
            "s2-limit-T_deformed_from_g",
            "u^{-C(n,2)} g_n(u^{n-1} bD|u) -> T(bD,u), coefficients agree mod q^{n-k+1}",
            limit_t_deformed,
        )
        .meta(KN)
        .constrained("n >= k + 1", n_exceeds_k)
        .expect(Pass, "coefficient of b^k D^k converges q-adically"),
        R::custom(
            "s2-limit-T_plain_from_h",
            "h_n(bD|q) -> T(bD), coefficients agree mod q^{n-k+1}",
            limit_t_plain,
        )
        .meta(KN)
        .constrained("n >= k + 1", n_exceeds_k)
        .expect(Pass, "[n,k] -> 1/(q;q)_k"),
        R::custom(
            "s2-limit-E_from_s",
            "q^{-C(n,2)} s_n(q^{n-1} bD|q) -> E(bD), coefficients agree mod q^{n-k+1}",
            limit_e,
        )
        .meta(KN)
        .constrained("n >= k + 1", n_exceeds_k)
        .expect(Pass, "[n,k] q^{C(k,2)} -> q^{C(k,2)}/(q;q)_k"),
    ]
}
