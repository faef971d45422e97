//! The polynomial families: Rogers-Szegő, Hahn and the Al-Salam-Carlitz
//! variants, each as an exact finite sum.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::coeff::{int, qpow, sym, RationalFunction, Symbol};
use crate::error::{Error, Result};
use crate::qcomb::{binom2, qbinomial, qfactorial, qpochhammer, qpochhammer_multi};
use crate::report::{compare_series, VerificationReport};
use crate::series::{pochhammer_series, PochhammerMode, TruncatedSeries};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    RogersSzego,
    GeneralizedRs,
    Hahn,
    AscGeneralPhi,
    AscGeneralPsi,
    AscGeneralizedPhi,
    AscGeneralizedPsi,
    AscHomogeneous,
    AscHomogeneousDeformed,
    AscGeneralizedDeformed,
}

impl Family {
    pub const ALL: [Family; 10] = [
        Family::RogersSzego,
        Family::GeneralizedRs,
        Family::Hahn,
        Family::AscGeneralPhi,
        Family::AscGeneralPsi,
        Family::AscGeneralizedPhi,
        Family::AscGeneralizedPsi,
        Family::AscHomogeneous,
        Family::AscHomogeneousDeformed,
        Family::AscGeneralizedDeformed,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::RogersSzego => "rogers_szego",
            Family::GeneralizedRs => "generalized_rs",
            Family::Hahn => "hahn",
            Family::AscGeneralPhi => "asc_general_phi",
            Family::AscGeneralPsi => "asc_general_psi",
            Family::AscGeneralizedPhi => "asc_generalized_phi",
            Family::AscGeneralizedPsi => "asc_generalized_psi",
            Family::AscHomogeneous => "asc_homogeneous",
            Family::AscHomogeneousDeformed => "asc_homogeneous_deformed",
            Family::AscGeneralizedDeformed => "asc_generalized_deformed",
        }
    }

    /// Parameter slots and the symbol each defaults to.
    pub fn slots(self) -> &'static [(&'static str, Symbol)] {
        use Symbol::*;
        match self {
            Family::RogersSzego => &[("x", X)],
            Family::GeneralizedRs => &[("x", X), ("y", Y)],
            Family::Hahn => &[("a", A), ("x", X), ("y", Y)],
            Family::AscGeneralPhi | Family::AscGeneralPsi => &[
                ("a", A),
                ("b", B),
                ("c", C),
                ("d", D),
                ("e", V),
                ("x", X),
                ("y", Y),
            ],
            Family::AscGeneralizedPhi | Family::AscGeneralizedPsi => {
                &[("a", A), ("b", B), ("c", C), ("x", X), ("y", Y)]
            }
            Family::AscHomogeneous => &[("a", A), ("x", X), ("y", Y)],
            Family::AscHomogeneousDeformed => &[("a", A), ("x", X), ("y", Y), ("u", U)],
            Family::AscGeneralizedDeformed => &[("a", A), ("b", B), ("c", C), ("x", X), ("y", Y), ("u", U)],
        }
    }

    /// Human-readable name of the defining sum.
    pub fn describe(self) -> &'static str {
        match self {
            Family::RogersSzego => "h_n(x|q) = sum [n,k] x^k",
            Family::GeneralizedRs => "r_n(x,y|q) = sum [n,k] x^k y^(n-k)",
            Family::Hahn => "Phi_n^(a)(x,y|q) = sum [n,k] (a;q)_k x^k y^(n-k)",
            Family::AscGeneralPhi => "phi_n^(a,b,c;d,e)(x,y|q) = sum [n,k] (a,b,c;q)_I/(d,e;q)_I x^(n-k) y^k",
            Family::AscGeneralPsi => {
                "psi_n^(a,b,c;d,e)(x,y|q) = sum [n,k] (-1)^k q^(k(k-n)) (a,b,c;q)_I/(d,e;q)_I x^(n-k) y^k"
            }
            Family::AscGeneralizedPhi => "phi_n^(a,b,c)(x,y|q) = sum [n,k] (a,b;q)_k/(c;q)_k x^k y^(n-k)",
            Family::AscGeneralizedPsi => {
                "psi_n^(a,b,c)(x,y|q) = sum [n,k] (-1)^k q^(C(k+1,2)-nk) (a,b;q)_k/(c;q)_k x^k y^(n-k)"
            }
            Family::AscHomogeneous => "Psi_n^(a)(x,y|q) = sum [n,k] (-1)^k q^(C(k+1,2)-nk) (a;q)_k x^k y^(n-k)",
            Family::AscHomogeneousDeformed => {
                "Psi_n^(a)(x,y|u) = sum [n,k] (-1)^k u^(C(k+1,2)-nk) (a;q)_k x^k y^(n-k)"
            }
            Family::AscGeneralizedDeformed => {
                "Psi_n^(a,b,c)(x,y|u) = sum [n,k] u^(C(k+1,2)-nk) (a,b;q)_k/(c;q)_k x^k y^(n-k)"
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::BadPolySpec {
                family: s.to_string(),
                reason: "unknown family".into(),
            })
    }
}

/// Which index the `(a,b,c;q)/(d,e;q)` ratio of the general families uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IndexConvention {
    /// The degree `n`, as the defining displays print it.
    #[default]
    Degree,
    /// The summation index `k`, as the generating functions suggest.
    Summation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolySpec {
    pub family: Family,
    pub degree: usize,
    pub params: BTreeMap<String, RationalFunction>,
    pub index: IndexConvention,
}

impl PolySpec {
    /// Every slot at its default symbol.
    pub fn new(family: Family, degree: usize) -> Self {
        PolySpec {
            family,
            degree,
            params: BTreeMap::new(),
            index: IndexConvention::Degree,
        }
    }

    pub fn with(mut self, slot: &str, value: impl Into<RationalFunction>) -> Self {
        self.params.insert(slot.to_string(), value.into());
        self
    }

    pub fn with_index(mut self, index: IndexConvention) -> Self {
        self.index = index;
        self
    }

    fn resolve(&self) -> Result<BTreeMap<&'static str, RationalFunction>> {
        let slots = self.family.slots();
        if let Some(bad) = self.params.keys().find(|k| !slots.iter().any(|(s, _)| s == k)) {
            let names: Vec<_> = slots.iter().map(|(s, _)| *s).collect();
            return Err(Error::BadPolySpec {
                family: self.family.tag().into(),
                reason: format!("no slot `{bad}`; slots are {}", names.join(", ")),
            });
        }
        Ok(slots
            .iter()
            .map(|&(name, default)| {
                let v = self.params.get(name).cloned().unwrap_or_else(|| sym(default));
                (name, v)
            })
            .collect())
    }
}

fn nonzero_den(den: RationalFunction, what: &str, family: Family) -> Result<RationalFunction> {
    if den.is_zero() {
        return Err(Error::ZeroDenominatorParameter(format!("{what} vanishes in {family}")));
    }
    Ok(den)
}

fn sign(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Exact value of the family's defining sum.
pub fn build_polynomial(spec: &PolySpec) -> Result<RationalFunction> {
    let p = spec.resolve()?;
    let n = spec.degree;
    let ni = n as i64;
    let family = spec.family;
    let qb = |k: usize| qbinomial(ni, k as i64);
    let pow = |v: &RationalFunction, e: usize| v.pow(e as i64).expect("non-negative power");
    let (x, y) = (&p["x"], p.get("y").cloned().unwrap_or_else(|| int(1)));
    let mut acc = RationalFunction::zero();
    match family {
        Family::RogersSzego => {
            for k in 0..=n {
                acc = acc.add(&qb(k).mul(&pow(x, k)));
            }
        }
        Family::GeneralizedRs | Family::Hahn => {
            let a = p.get("a").cloned().unwrap_or_else(|| int(0));
            for k in 0..=n {
                let t = qb(k).mul(&qpochhammer(&a, k)).mul(&pow(x, k)).mul(&pow(&y, n - k));
                acc = acc.add(&t);
            }
        }
        Family::AscGeneralPhi | Family::AscGeneralPsi => {
            let ups = [p["a"].clone(), p["b"].clone(), p["c"].clone()];
            let downs = [p["d"].clone(), p["e"].clone()];
            let ratio = |i: usize| -> Result<RationalFunction> {
                let den = nonzero_den(qpochhammer_multi(&downs, i), "(d,e;q)", family)?;
                qpochhammer_multi(&ups, i).div(&den)
            };
            let fixed = match spec.index {
                IndexConvention::Degree => Some(ratio(n)?),
                IndexConvention::Summation => None,
            };
            for k in 0..=n {
                let r = match &fixed {
                    Some(r) => r.clone(),
                    None => ratio(k)?,
                };
                let mut t = qb(k).mul(&r).mul(&pow(x, n - k)).mul(&pow(&y, k));
                if family == Family::AscGeneralPsi {
                    let ki = k as i64;
                    t = t.mul(&qpow(ki * (ki - ni))).scale_int(sign(k));
                }
                acc = acc.add(&t);
            }
        }
        Family::AscGeneralizedPhi | Family::AscGeneralizedPsi | Family::AscGeneralizedDeformed => {
            let ab = [p["a"].clone(), p["b"].clone()];
            let base = match family {
                Family::AscGeneralizedDeformed => Some(p["u"].clone()),
                Family::AscGeneralizedPsi => Some(sym(Symbol::Q)),
                _ => None,
            };
            for k in 0..=n {
                let den = nonzero_den(qpochhammer(&p["c"], k), "(c;q)_k", family)?;
                let mut t = qb(k)
                    .mul(&qpochhammer_multi(&ab, k).div(&den)?)
                    .mul(&pow(x, k))
                    .mul(&pow(&y, n - k));
                if let Some(base) = &base {
                    let ki = k as i64;
                    t = t.mul(&base.pow(binom2(ki + 1) - ni * ki)?);
                }
                if family == Family::AscGeneralizedPsi {
                    t = t.scale_int(sign(k));
                }
                acc = acc.add(&t);
            }
        }
        Family::AscHomogeneous | Family::AscHomogeneousDeformed => {
            let base = match family {
                Family::AscHomogeneous => sym(Symbol::Q),
                _ => p["u"].clone(),
            };
            for k in 0..=n {
                let ki = k as i64;
                let t = qb(k)
                    .mul(&base.pow(binom2(ki + 1) - ni * ki)?)
                    .mul(&qpochhammer(&p["a"], k))
                    .mul(&pow(x, k))
                    .mul(&pow(&y, n - k))
                    .scale_int(sign(k));
                acc = acc.add(&t);
            }
        }
    }
    Ok(acc)
}

/// `sum_k [M,k] defo^{C(k,2)} c^k`, the operational meaning of
/// `(1 (+)_{1,defo} c)^{(M)}`.
///
/// At `defo = q` this is `(-c;q)_M`; at `defo = 1` the Rogers-Szegő
/// polynomial `h_M(c)`.
pub fn deformed_plus_power(m: usize, c: &RationalFunction, defo: &RationalFunction) -> RationalFunction {
    deformed_plus_power_homogeneous(m, &int(1), c, defo)
}

/// `sum_k [M,k] defo^{C(k,2)} x^{M-k} b^k`, i.e. `(x (+)_{1,defo} b)^{(M)}`.
pub fn deformed_plus_power_homogeneous(
    m: usize,
    x: &RationalFunction,
    b: &RationalFunction,
    defo: &RationalFunction,
) -> RationalFunction {
    let mi = m as i64;
    (0..=m)
        .map(|k| {
            let ki = k as i64;
            let w = defo.pow(binom2(ki)).expect("C(k,2) >= 0");
            qbinomial(mi, ki)
                .mul(&w)
                .mul(&x.pow(mi - ki).unwrap())
                .mul(&b.pow(ki).unwrap())
        })
        .sum()
}

/// Checks `sum_n Phi_n^(alpha)(x,y) t^n/(q;q)_n = (alpha x t;q)_inf / (xt, yt;q)_inf`
/// through `t^n_max`, with `t` written as `z`.
pub fn hahn_generating_check(n_max: usize, order: usize) -> VerificationReport {
    hahn_generating_check_with(&sym(Symbol::A), &sym(Symbol::X), &sym(Symbol::Y), n_max, order)
}

pub fn hahn_generating_check_with(
    alpha: &RationalFunction,
    x: &RationalFunction,
    y: &RationalFunction,
    n_max: usize,
    order: usize,
) -> VerificationReport {
    let id = "s1-hahn-generating";
    let meta = BTreeMap::from([("n".to_string(), n_max as i64)]);
    let n_max = n_max.min(order);
    let run = || -> Result<Option<crate::report::Mismatch>> {
        let t = Symbol::Z;
        let mut lhs = vec![RationalFunction::zero(); n_max + 1];
        for (n, slot) in lhs.iter_mut().enumerate() {
            let spec = PolySpec::new(Family::Hahn, n)
                .with("a", alpha.clone())
                .with("x", x.clone())
                .with("y", y.clone());
            *slot = build_polynomial(&spec)?.div(&qfactorial(n))?;
        }
        let lhs = TruncatedSeries::new(t, n_max, lhs)?;
        let num = pochhammer_series(&alpha.mul(x), PochhammerMode::InfiniteProduct, t, n_max)?;
        let dx = pochhammer_series(x, PochhammerMode::InverseInfiniteProduct, t, n_max)?;
        let dy = pochhammer_series(y, PochhammerMode::InverseInfiniteProduct, t, n_max)?;
        Ok(compare_series(&lhs, &num.mul(&dx).mul(&dy)))
    };
    match run() {
        Ok(m) => VerificationReport::from_comparison(id, n_max, meta, m),
        Err(e) => VerificationReport::unsupported(id, n_max, meta, e.to_string()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Symbol::*;

    fn build(spec: PolySpec) -> RationalFunction {
        build_polynomial(&spec).unwrap()
    }

    #[test]
    fn rogers_szego_degree_two() {
        let h2 = build(PolySpec::new(Family::RogersSzego, 2));
        assert_eq!(h2, int(1) + (int(1) + sym(Q)) * sym(X) + sym(X) * sym(X));
    }

    #[test]
    fn hahn_degree_one() {
        let p = build(PolySpec::new(Family::Hahn, 1));
        assert_eq!(p, sym(Y) + (int(1) - sym(A)) * sym(X));
    }

    #[test]
    fn hahn_specializes_to_rogers_szego() {
        for n in 0..6 {
            let h = build(PolySpec::new(Family::Hahn, n).with("a", 0).with("y", 1));
            assert_eq!(h, build(PolySpec::new(Family::RogersSzego, n)));
        }
    }

    #[test]
    fn deformed_homogeneous_degree_one() {
        let p = build(PolySpec::new(Family::AscHomogeneousDeformed, 1));
        assert_eq!(p, sym(Y) - (int(1) - sym(A)) * sym(X));
    }

    #[test]
    fn plus_power_examples() {
        let c = sym(C);
        assert!(deformed_plus_power(0, &c, &sym(U)).is_one());
        assert_eq!(deformed_plus_power(1, &c, &sym(U)), int(1) + c.clone());
        // at defo = q the sum is the q-binomial theorem (-w;q)_n
        for n in 0..5usize {
            let w = qpow(1 - n as i64) * sym(A) * sym(B);
            assert_eq!(deformed_plus_power(n, &w, &sym(Q)), qpochhammer(&w.neg(), n));
        }
    }

    #[test]
    fn unknown_slot_is_rejected() {
        let spec = PolySpec::new(Family::RogersSzego, 2).with("z", 1);
        assert!(matches!(build_polynomial(&spec), Err(Error::BadPolySpec { .. })));
    }

    #[test]
    fn vanishing_denominator_is_reported() {
        let spec = PolySpec::new(Family::AscGeneralizedPhi, 3).with("c", qpow(-1));
        assert!(matches!(build_polynomial(&spec), Err(Error::ZeroDenominatorParameter(_))));
    }

    #[test]
    fn general_phi_as_printed_is_a_multiple_of_rs() {
        let n = 3;
        let p = build(PolySpec::new(Family::AscGeneralPhi, n));
        let ups = [sym(A), sym(B), sym(C)];
        let downs = [sym(D), sym(V)];
        let ratio = qpochhammer_multi(&ups, n).div(&qpochhammer_multi(&downs, n)).unwrap();
        let r = build(PolySpec::new(Family::GeneralizedRs, n).with("x", sym(Y)).with("y", sym(X)));
        assert_eq!(p, ratio.mul(&r));
    }

    #[test]
    fn hahn_generating_function() {
        assert!(hahn_generating_check(0, 0).passed());
        assert!(hahn_generating_check(4, 4).passed());
        let r = hahn_generating_check_with(&int(0), &sym(X), &int(1), 4, 4);
        assert!(r.passed());
    }
}
