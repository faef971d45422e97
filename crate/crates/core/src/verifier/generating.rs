//! Generating functions of the monomial images, expanded in `y`.
//!
//! Printed left sides sum `Psi_m^{(q^{-n})}(b, x | u/q)` as written.
//! Corrected ones sum the true images `u^{-C(n,2)} g_n(bD|u){x^m}`.

use crate::coeff::Symbol::*;
use crate::coeff::{int, qpow};
use crate::error::Result;
use crate::families::{deformed_plus_power, Family};
use crate::qcomb::qfactorial;
use crate::series::TruncatedSeries;

use super::support::*;
use super::{meta, Expansion, Expected, IdentityRecord, Instance, MetaRange};

const N3: &[MetaRange] = &[meta("n", 0, 3)];

/// Weight on `y^m` besides the polynomial.
#[derive(Clone, Copy)]
enum Weight {
    One,
    InvQFactorial,
    QBinomInvQFactorial,
    QBinom,
    QBinomNeg,
}

impl Weight {
    fn at(self, m: usize) -> Result<RF> {
        let e = qpow(b2(m));
        Ok(match self {
            Weight::One => int(1),
            Weight::InvQFactorial => qfactorial(m).recip()?,
            Weight::QBinomInvQFactorial => e.div(&qfactorial(m))?,
            Weight::QBinom => e,
            Weight::QBinomNeg => e.recip()?,
        })
    }
}

fn printed_sum(i: &Instance, u: &RF, w: Weight) -> Result<TruncatedSeries> {
    let n = i.get("n");
    series_from(Y, i.order, |m| Ok(printed_psi(n, m, &s(B), &s(X), u)?.mul(&w.at(m)?)))
}

fn image_sum(i: &Instance, u: &RF, w: Weight) -> Result<TruncatedSeries> {
    let n = i.get("n");
    series_from(Y, i.order, |m| Ok(monomial_image(n, m, &s(B), &s(X), u).mul(&w.at(m)?)))
}

fn xy() -> RF {
    s(X).mul(&s(Y))
}

fn geometric_lhs(i: &Instance) -> Result<Expansion> {
    Ok(printed_sum(i, &s(U), Weight::One)?.into())
}

fn geometric_lhs_corrected(i: &Instance) -> Result<Expansion> {
    Ok(image_sum(i, &s(U), Weight::One)?.into())
}

/// `1/((1-xy) [(q;q)_n]) * P` expanded in `y`, the bracket only as printed.
fn over_one_minus_xy(i: &Instance, p: RF, with_factorial: bool) -> Result<Expansion> {
    let mut den = int(1) - xy();
    if with_factorial {
        den = den.mul(&qfactorial(i.get("n")));
    }
    Ok(expand(&p.div(&den)?, Y, i.order)?.into())
}

fn deformed_0q(i: &Instance) -> Result<RF> {
    let (zero, q, qxy) = (int(0), s(Q), s(Q).mul(&xy()));
    generalized_deformed(i.get("n"), [&zero, &q, &qxy], &s(B).mul(&s(Y)), &int(1), &s(U))
}

fn geometric_rhs(i: &Instance) -> Result<Expansion> {
    over_one_minus_xy(i, deformed_0q(i)?, true)
}

fn geometric_rhs_corrected(i: &Instance) -> Result<Expansion> {
    over_one_minus_xy(i, deformed_0q(i)?, false)
}

fn psi_0q(i: &Instance) -> Result<RF> {
    let (zero, q, qxy) = (int(0), s(Q), s(Q).mul(&xy()));
    let by = s(B).mul(&s(Y));
    generalized(Family::AscGeneralizedPsi, i.get("n"), [&zero, &q, &qxy], &by.neg(), &int(1))
}

fn phi_0q(i: &Instance) -> Result<RF> {
    let (zero, q, qxy) = (int(0), s(Q), s(Q).mul(&xy()));
    generalized(Family::AscGeneralizedPhi, i.get("n"), [&zero, &q, &qxy], &s(B).mul(&s(Y)), &int(1))
}

fn cor_psi_lhs(i: &Instance) -> Result<Expansion> {
    Ok(printed_sum(i, &s(Q), Weight::One)?.into())
}

fn cor_psi_lhs_corrected(i: &Instance) -> Result<Expansion> {
    Ok(image_sum(i, &s(Q), Weight::One)?.into())
}

fn cor_psi_rhs(i: &Instance) -> Result<Expansion> {
    over_one_minus_xy(i, psi_0q(i)?, true)
}

fn cor_psi_rhs_corrected(i: &Instance) -> Result<Expansion> {
    over_one_minus_xy(i, psi_0q(i)?, false)
}

fn cor_phi_lhs(i: &Instance) -> Result<Expansion> {
    Ok(printed_sum(i, &int(1), Weight::One)?.into())
}

fn cor_phi_lhs_corrected(i: &Instance) -> Result<Expansion> {
    Ok(image_sum(i, &int(1), Weight::One)?.into())
}

fn cor_phi_rhs(i: &Instance) -> Result<Expansion> {
    over_one_minus_xy(i, phi_0q(i)?, true)
}

fn cor_phi_rhs_corrected(i: &Instance) -> Result<Expansion> {
    over_one_minus_xy(i, phi_0q(i)?, false)
}

fn theta_minus_lhs(i: &Instance) -> Result<Expansion> {
    Ok(printed_sum(i, &s(U), Weight::QBinomNeg)?.into())
}

fn theta_plus_lhs(i: &Instance) -> Result<Expansion> {
    Ok(printed_sum(i, &s(U), Weight::QBinom)?.into())
}

fn eq_lhs(i: &Instance) -> Result<Expansion> {
    Ok(printed_sum(i, &s(U), Weight::InvQFactorial)?.into())
}

fn eq_lhs_corrected(i: &Instance) -> Result<Expansion> {
    Ok(image_sum(i, &s(U), Weight::InvQFactorial)?.into())
}

fn eq_rhs(i: &Instance) -> Result<Expansion> {
    let n = i.get("n");
    let c = pw(&s(U), 1 - n as i64).mul(&s(B)).mul(&s(Y));
    let p = expand(&deformed_plus_power(n, &c, &s(U)), Y, i.order)?;
    Ok(inv_poch_inf(&s(X), Y, i.order)?.mul(&p).into())
}

fn big_eq_lhs(i: &Instance) -> Result<Expansion> {
    Ok(printed_sum(i, &s(U), Weight::QBinomInvQFactorial)?.into())
}

fn big_eq_lhs_corrected(i: &Instance) -> Result<Expansion> {
    Ok(image_sum(i, &s(U), Weight::QBinomInvQFactorial)?.into())
}

fn big_eq_rhs(i: &Instance) -> Result<Expansion> {
    let zero = int(0);
    let psi = generalized_deformed(i.get("n"), [&zero, &zero, &s(Y)], &s(B).mul(&s(Y)), &int(1), &s(U))?;
    let p = expand(&psi, Y, i.order)?;
    Ok(poch_inf(&s(X), Y, i.order)?.mul(&p).into())
}

/// `(-xy;q)_inf sum_k [n,k] u^{C(k+1,2)-nk} q^{C(k,2)} (by)^k/(-xy;q)_k`.
fn big_eq_rhs_corrected(i: &Instance) -> Result<Expansion> {
    let n = i.get("n");
    let (by, mxy) = (s(B).mul(&s(Y)), xy().neg());
    let mut sum = int(0);
    for k in 0..=n {
        let t = qb(n, k)
            .mul(&shifted_weight(&s(U), n, k))
            .mul(&qpow(b2(k)))
            .mul(&pw(&by, k as i64))
            .div(&poch(&mxy, k))?;
        sum = sum.add(&t);
    }
    let p = expand(&sum, Y, i.order)?;
    Ok(poch_inf(&s(X).neg(), Y, i.order)?.mul(&p).into())
}

const THETA_REASON: &str =
    "RHS notation has no definition: Theta_0 and the negative (-)-power (1 (-)_{1,p} w)^{(-k-1)}";

pub(super) fn records() -> Vec<IdentityRecord> {
    use Expected::*;
    type R = IdentityRecord;
    vec![
        R::pair(
            "s3-thm1-geometric",
            "sum_m Psi_m^{(q^{-n})}(b,x|u/q) y^m = Psi_n^{(0,q,qxy)}(by,1|u)/((1-xy)(q;q)_n)",
            geometric_lhs,
            geometric_rhs,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(
            KnownDiscrepancy,
            "inherits the monomial-action error, and D^k 1/(1-xy) = (q;q)_k y^k/(xy;q)_{k+1} leaves no 1/(q;q)_n",
        ),
        R::pair(
            "s3-thm1-geometric-corrected",
            "sum_m u^{-C(n,2)} g_n(bD|u){x^m} y^m = Psi_n^{(0,q,qxy)}(by,1|u)/(1-xy)",
            geometric_lhs_corrected,
            geometric_rhs_corrected,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(Pass, "true monomial images, no 1/(q;q)_n"),
        R::pair(
            "s3-cor-psi",
            "sum_m Psi_m^{(q^{-n})}(b,x|1) y^m = psi_n^{(0,q,qxy)}(-by,1|q)/((1-xy)(q;q)_n)",
            cor_psi_lhs,
            cor_psi_rhs,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(KnownDiscrepancy, "u = q case of the geometric statement"),
        R::pair(
            "s3-cor-psi-corrected",
            "sum_m q^{-C(n,2)} s_n(bD|q){x^m} y^m = psi_n^{(0,q,qxy)}(-by,1|q)/(1-xy)",
            cor_psi_lhs_corrected,
            cor_psi_rhs_corrected,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(Pass, "psi at -by equals the u = q deformed family at by"),
        R::pair(
            "s3-cor-phi",
            "sum_m Psi_m^{(q^{-n})}(b,x|1/q) y^m = phi_n^{(0,q,qxy)}(by,1|q)/((1-xy)(q;q)_n)",
            cor_phi_lhs,
            cor_phi_rhs,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(KnownDiscrepancy, "u = 1 case of the geometric statement"),
        R::pair(
            "s3-cor-phi-corrected",
            "sum_m h_n(bD|q){x^m} y^m = phi_n^{(0,q,qxy)}(by,1|q)/(1-xy)",
            cor_phi_lhs_corrected,
            cor_phi_rhs_corrected,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(Pass, "the u = 1 deformed family is phi"),
        R::lhs_only(
            "s3-theta-minus",
            "sum_m q^{-C(m,2)} Psi_m^{(q^{-n})}(b,x|u/q) y^m = sum_k [n,k] u^{C(k+1,2)-nk} q^{-C(k,2)} (q;q)_k (1 (-)_{1,1} qx)^{(-k-1)} (by)^k",
            theta_minus_lhs,
            THETA_REASON,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(LhsOnly, "right side is not computable"),
        R::lhs_only(
            "s3-theta-plus",
            "sum_m q^{C(m,2)} Psi_m^{(q^{-n})}(b,x|u/q) y^m = sum_k [n,k] u^{C(k+1,2)-nk} q^{C(k,2)} (q;q)_k (1 (-)_{1,q^2} q^{2k+1}x)^{(-k-1)} (by)^k",
            theta_plus_lhs,
            THETA_REASON,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(LhsOnly, "right side is not computable"),
        R::pair(
            "s3-eq-weighted",
            "sum_m Psi_m^{(q^{-n})}(b,x|u/q) y^m/(q;q)_m = (1 (+)_{1,u} u^{1-n}by)^{(n)}/(xy;q)_inf",
            eq_lhs,
            eq_rhs,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(KnownDiscrepancy, "inherits the monomial-action error"),
        R::pair(
            "s3-eq-weighted-corrected",
            "sum_m u^{-C(n,2)} g_n(bD|u){x^m} y^m/(q;q)_m = (1 (+)_{1,u} u^{1-n}by)^{(n)}/(xy;q)_inf",
            eq_lhs_corrected,
            eq_rhs,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(Pass, "the action on 1/(xy;q)_inf with true monomial images"),
        R::pair(
            "s3-Eq-weighted",
            "sum_m q^{C(m,2)} Psi_m^{(q^{-n})}(b,x|u/q) y^m/(q;q)_m = (xy;q)_inf Psi_n^{(0,0,y)}(by,1|u)",
            big_eq_lhs,
            big_eq_rhs,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(
            KnownDiscrepancy,
            "the weighted sum of (xy)^m is (-xy;q)_inf, not (xy;q)_inf, on top of the monomial-action error",
        ),
        R::pair(
            "s3-Eq-weighted-corrected",
            "sum_m q^{C(m,2)} u^{-C(n,2)} g_n(bD|u){x^m} y^m/(q;q)_m = (-xy;q)_inf sum_k [n,k] u^{C(k+1,2)-nk} q^{C(k,2)} (by)^k/(-xy;q)_k",
            big_eq_lhs_corrected,
            big_eq_rhs_corrected,
        )
        .meta(N3)
        .series(Y)
        .order(6)
        .expect(Pass, "the action on (-xy;q)_inf through the Pochhammer rule"),
    ]
}
