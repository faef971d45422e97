//! Helpers shared by the integration suites: random exact inputs,
//! random evaluation points and the family specialization lattice.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use qrs::coeff::{int, sym, Monomial, MultiPoly, RationalFunction, Symbol, NSYM, Q};
use qrs::families::{build_polynomial, Family, PolySpec};
use qrs::series::TruncatedSeries;
use rand::Rng;

pub fn rat(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// A polynomial over `vars` with at most `terms` terms, each exponent below `max_exp`.
pub fn random_poly(rng: &mut impl Rng, vars: &[Symbol], terms: usize, max_exp: u16) -> MultiPoly {
    MultiPoly::from_terms((0..terms).map(|_| {
        let mut m = Monomial::default();
        for &v in vars {
            m = m.with_exp(v, rng.gen_range(0..max_exp));
        }
        (m, rat(rng.gen_range(-4..=4), 1))
    }))
}

/// A rational function over `vars`; the denominator is never zero.
pub fn random_rf(rng: &mut impl Rng, vars: &[Symbol]) -> RationalFunction {
    let num = random_poly(rng, vars, 3, 3);
    let den = loop {
        let d = random_poly(rng, vars, 2, 2);
        if !d.is_zero() {
            break d;
        }
    };
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// `sum_{j<=deg} c_j x^j` with small integer-polynomial coefficients in `q, a, b`.
pub fn random_series_poly(rng: &mut impl Rng, deg: usize, order: usize) -> TruncatedSeries {
    let coeffs = (0..=order)
        .map(|j| {
            if j <= deg {
                RationalFunction::from_poly(random_poly(rng, &[Symbol::Q, Symbol::A, Symbol::B], 2, 2))
            } else {
                RationalFunction::zero()
            }
        })
        .collect();
    TruncatedSeries::new(Symbol::X, order, coeffs).expect("coefficients are free of x")
}

/// Random nonzero rationals for every symbol, q kept away from 0 and roots of unity.
pub fn random_point(rng: &mut impl Rng) -> [Q; NSYM] {
    std::array::from_fn(|_| loop {
        let n = rng.gen_range(-97i64..=97);
        let d = rng.gen_range(2i64..=61);
        if n != 0 && n.abs() != d {
            break rat(n, d);
        }
    })
}

fn poly(family: Family, n: usize) -> PolySpec {
    PolySpec::new(family, n)
}

/// One rung of the specialization lattice: a name and whether both sides agree.
pub struct Rung {
    pub name: String,
    pub holds: bool,
}

fn rung(name: String, lhs: qrs::Result<RationalFunction>, rhs: qrs::Result<RationalFunction>) -> Rung {
    let holds = matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r);
    Rung { name, holds }
}

/// Every total degree of a numerator monomial in `(x, y)` equals `n`, and the
/// denominator is free of both.
fn homogeneous(f: &RationalFunction, n: usize) -> bool {
    let free = !f.den().contains(Symbol::X) && !f.den().contains(Symbol::Y);
    free && f
        .num()
        .terms()
        .iter()
        .all(|(m, _)| (m.exp(Symbol::X) + m.exp(Symbol::Y)) as usize == n)
}

/// The family lattice for degrees `0..=n_max`.
pub fn lattice(n_max: usize) -> Vec<Rung> {
    use Family::*;
    let q = sym(Symbol::Q);
    let mut rungs = Vec::new();
    for n in 0..=n_max {
        rungs.push(rung(
            format!("asc_homogeneous_deformed(u=q) = asc_homogeneous, n={n}"),
            build_polynomial(&poly(AscHomogeneousDeformed, n).with("u", q.clone())),
            build_polynomial(&poly(AscHomogeneous, n)),
        ));
        // the deformed weight carries no sign, so u=q meets psi at -x
        rungs.push(rung(
            format!("asc_generalized_deformed(u=q, x) = asc_generalized_psi(-x), n={n}"),
            build_polynomial(&poly(AscGeneralizedDeformed, n).with("u", q.clone())),
            build_polynomial(&poly(AscGeneralizedPsi, n).with("x", sym(Symbol::X).neg())),
        ));
        rungs.push(rung(
            format!("hahn(a=0) = generalized_rs, n={n}"),
            build_polynomial(&poly(Hahn, n).with("a", int(0))),
            build_polynomial(&poly(GeneralizedRs, n)),
        ));
        rungs.push(rung(
            format!("generalized_rs(y=1) = rogers_szego, n={n}"),
            build_polynomial(&poly(GeneralizedRs, n).with("y", int(1))),
            build_polynomial(&poly(RogersSzego, n)),
        ));
        rungs.push(rung(
            format!("hahn(a=0, y=1) = rogers_szego, n={n}"),
            build_polynomial(&poly(Hahn, n).with("a", int(0)).with("y", int(1))),
            build_polynomial(&poly(RogersSzego, n)),
        ));
        // (1;q)_k = 0 for k >= 1, leaving the k = 0 term
        rungs.push(rung(
            format!("asc_homogeneous(a=1) = y^n, n={n}"),
            build_polynomial(&poly(AscHomogeneous, n).with("a", int(1))),
            sym(Symbol::Y).pow(n as i64),
        ));
        rungs.push(rung(
            format!("asc_generalized_deformed(b=1) = y^n, n={n}"),
            build_polynomial(&poly(AscGeneralizedDeformed, n).with("b", int(1))),
            sym(Symbol::Y).pow(n as i64),
        ));
        for family in [AscHomogeneous, Hahn] {
            let f = build_polynomial(&poly(family, n));
            rungs.push(Rung {
                name: format!("{family} homogeneous of degree {n} in (x,y)"),
                holds: f.is_ok_and(|f| homogeneous(&f, n)),
            });
        }
        for family in Family::ALL {
            let f = build_polynomial(&poly(family, n));
            rungs.push(Rung {
                name: format!("{family} denominator free of x and y, n={n}"),
                holds: f.is_ok_and(|f| !f.den().contains(Symbol::X) && !f.den().contains(Symbol::Y)),
            });
        }
    }
    rungs
}
