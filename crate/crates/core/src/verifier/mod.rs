//! Executable catalog of identities: each record builds both sides as exact
//! expansions and the engine compares them coefficient by coefficient.

mod bilinear;
mod generating;
mod operator_thms;
mod prelim;
mod support;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{RationalFunction, Symbol};
use crate::error::{Error, Result};
use crate::report::{compare_grids, compare_series, compare_values, Mismatch, Status, VerificationReport};
use crate::series::{GridSeries, TruncatedSeries};

pub use support::monomial_image;

/// Status a record is expected to reach across its declared meta ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expected {
    /// Every instance passes.
    Pass,
    /// The statement as written fails somewhere; instances may still pass.
    KnownDiscrepancy,
    /// Only the left-hand side is computable.
    LhsOnly,
}

impl Expected {
    pub fn tag(self) -> &'static str {
        match self {
            Expected::Pass => "pass",
            Expected::KnownDiscrepancy => "known_discrepancy",
            Expected::LhsOnly => "lhs_only",
        }
    }

    /// Whether `status` is consistent with this expectation.
    pub fn admits(self, status: Status) -> bool {
        match self {
            Expected::Pass => status == Status::Pass,
            Expected::KnownDiscrepancy => status != Status::Unsupported,
            Expected::LhsOnly => status == Status::Unsupported,
        }
    }
}

impl fmt::Display for Expected {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MetaRange {
    pub name: &'static str,
    pub lo: i64,
    pub hi: i64,
}

pub(crate) const fn meta(name: &'static str, lo: i64, hi: i64) -> MetaRange {
    MetaRange { name, lo, hi }
}

/// Where the comparison happens.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExpansionVars {
    /// Power series in one variable.
    Single(Symbol),
    /// Bidegree box `i + j <= order` in `(outer, inner)`.
    Grid(Symbol, Symbol),
    /// Exact equality of two rational functions; the order is ignored.
    Exact,
}

impl fmt::Display for ExpansionVars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExpansionVars::Single(v) => write!(f, "{v}"),
            ExpansionVars::Grid(a, b) => write!(f, "({a},{b})"),
            ExpansionVars::Exact => f.write_str("exact"),
        }
    }
}

/// One side of an identity, already expanded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expansion {
    Series(TruncatedSeries),
    Grid(GridSeries),
    Value(RationalFunction),
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expansion::Series(s) => write!(f, "{s}"),
            Expansion::Grid(g) => write!(f, "{g}"),
            Expansion::Value(v) => write!(f, "{v}"),
        }
    }
}

impl From<TruncatedSeries> for Expansion {
    fn from(s: TruncatedSeries) -> Self {
        Expansion::Series(s)
    }
}

impl From<GridSeries> for Expansion {
    fn from(g: GridSeries) -> Self {
        Expansion::Grid(g)
    }
}

impl From<RationalFunction> for Expansion {
    fn from(v: RationalFunction) -> Self {
        Expansion::Value(v)
    }
}

fn compare(lhs: &Expansion, rhs: &Expansion) -> Result<Option<Mismatch>> {
    match (lhs, rhs) {
        (Expansion::Series(l), Expansion::Series(r)) => {
            if l.var() != r.var() {
                return Err(Error::VariableMismatch(l.var(), r.var()));
            }
            let n = l.order().min(r.order());
            Ok(compare_series(&l.truncate(n), &r.truncate(n)))
        }
        (Expansion::Grid(l), Expansion::Grid(r)) => Ok(compare_grids(l, r)),
        (Expansion::Value(l), Expansion::Value(r)) => Ok(compare_values(l, r)),
        _ => Err(Error::UnsupportedExpression("sides expand into different shapes".into())),
    }
}

/// Concrete meta-parameters and truncation order for one check.
#[derive(Debug, Clone)]
pub struct Instance {
    pub order: usize,
    pub meta: BTreeMap<String, i64>,
}

impl Instance {
    /// Value of a declared meta-parameter; the engine guarantees presence
    /// and non-negativity before a builder runs.
    pub fn get(&self, name: &str) -> usize {
        self.meta[name] as usize
    }
}

pub type SideFn = fn(&Instance) -> Result<Expansion>;
pub type CheckFn = fn(&Instance) -> Result<Option<Mismatch>>;
pub type MetaFilter = fn(&BTreeMap<String, i64>) -> bool;

#[derive(Clone, Copy)]
pub enum Builder {
    Pair { lhs: SideFn, rhs: SideFn },
    LhsOnly { lhs: SideFn, reason: &'static str },
    /// A check that is not a plain equality of expansions.
    Custom(CheckFn),
}

#[derive(Clone, Copy)]
pub struct IdentityRecord {
    pub id: &'static str,
    /// The statement being checked, in plain notation.
    pub statement: &'static str,
    pub meta: &'static [MetaRange],
    /// Extra restriction on meta instances, with its description.
    pub constraint: Option<(&'static str, MetaFilter)>,
    pub expansion: ExpansionVars,
    pub default_order: usize,
    pub expected: Expected,
    /// Why the record has its expected status.
    pub note: &'static str,
    pub builder: Builder,
}

impl fmt::Debug for IdentityRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdentityRecord")
            .field("id", &self.id)
            .field("expected", &self.expected)
            .finish_non_exhaustive()
    }
}

impl IdentityRecord {
    fn base(id: &'static str, statement: &'static str, builder: Builder) -> Self {
        IdentityRecord {
            id,
            statement,
            meta: &[],
            constraint: None,
            expansion: ExpansionVars::Exact,
            default_order: 8,
            expected: Expected::Pass,
            note: "",
            builder,
        }
    }

    pub(crate) fn pair(id: &'static str, statement: &'static str, lhs: SideFn, rhs: SideFn) -> Self {
        Self::base(id, statement, Builder::Pair { lhs, rhs })
    }

    pub(crate) fn lhs_only(id: &'static str, statement: &'static str, lhs: SideFn, reason: &'static str) -> Self {
        IdentityRecord {
            expected: Expected::LhsOnly,
            ..Self::base(id, statement, Builder::LhsOnly { lhs, reason })
        }
    }

    pub(crate) fn custom(id: &'static str, statement: &'static str, check: CheckFn) -> Self {
        Self::base(id, statement, Builder::Custom(check))
    }

    pub(crate) fn meta(self, meta: &'static [MetaRange]) -> Self {
        IdentityRecord { meta, ..self }
    }

    pub(crate) fn constrained(self, what: &'static str, f: MetaFilter) -> Self {
        IdentityRecord { constraint: Some((what, f)), ..self }
    }

    pub(crate) fn series(self, var: Symbol) -> Self {
        IdentityRecord { expansion: ExpansionVars::Single(var), ..self }
    }

    pub(crate) fn grid(self, outer: Symbol, inner: Symbol) -> Self {
        IdentityRecord { expansion: ExpansionVars::Grid(outer, inner), ..self }
    }

    pub(crate) fn order(self, default_order: usize) -> Self {
        IdentityRecord { default_order, ..self }
    }

    pub(crate) fn expect(self, expected: Expected, note: &'static str) -> Self {
        IdentityRecord { expected, note, ..self }
    }

    fn admits(&self, meta: &BTreeMap<String, i64>) -> bool {
        self.constraint.is_none_or(|(_, f)| f(meta))
    }

    /// Meta instances in the declared ranges, clipped to `ranges`, in
    /// lexicographic order of the declared names.
    pub fn instances(&self, ranges: &BTreeMap<String, (i64, i64)>) -> Vec<BTreeMap<String, i64>> {
        let mut out = vec![BTreeMap::new()];
        for r in self.meta {
            let (lo, hi) = match ranges.get(r.name) {
                Some(&(lo, hi)) => (lo.max(r.lo), hi.min(r.hi)),
                None => (r.lo, r.hi),
            };
            out = out
                .into_iter()
                .flat_map(|m| {
                    (lo..=hi).map(move |v| {
                        let mut m = m.clone();
                        m.insert(r.name.to_string(), v);
                        m
                    })
                })
                .collect();
        }
        out.retain(|m| self.admits(m));
        out
    }

    fn check_meta(&self, given: &BTreeMap<String, i64>) -> Result<BTreeMap<String, i64>> {
        let mut meta = BTreeMap::new();
        for r in self.meta {
            let v = *given.get(r.name).ok_or_else(|| Error::MissingMeta(r.name.to_string()))?;
            if v < r.lo || v > r.hi {
                return Err(Error::MetaOutOfRange {
                    name: r.name.to_string(),
                    value: v,
                    lo: r.lo,
                    hi: r.hi,
                });
            }
            meta.insert(r.name.to_string(), v);
        }
        if let Some((what, ok)) = self.constraint {
            if !ok(&meta) {
                return Err(Error::UnsupportedExpression(format!("meta instance violates {what}")));
            }
        }
        Ok(meta)
    }
}

fn catalog_cell() -> &'static Vec<IdentityRecord> {
    static CATALOG: OnceLock<Vec<IdentityRecord>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut all = Vec::new();
        all.extend(prelim::records());
        all.extend(operator_thms::records());
        all.extend(generating::records());
        all.extend(bilinear::records());
        all.sort_by_key(|r| r.id);
        for w in all.windows(2) {
            assert_ne!(w[0].id, w[1].id, "duplicate identity id");
        }
        all
    })
}

/// Every registered record, sorted by id.
pub fn catalog() -> &'static [IdentityRecord] {
    catalog_cell()
}

pub fn find(id: &str) -> Result<&'static IdentityRecord> {
    catalog()
        .iter()
        .find(|r| r.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

fn run(rec: &IdentityRecord, inst: &Instance) -> Result<VerificationReport> {
    let mismatch = match rec.builder {
        Builder::Pair { lhs, rhs } => compare(&lhs(inst)?, &rhs(inst)?)?,
        Builder::LhsOnly { lhs, reason } => {
            lhs(inst)?;
            return Ok(VerificationReport::unsupported(rec.id, inst.order, inst.meta.clone(), reason));
        }
        Builder::Custom(check) => check(inst)?,
    };
    Ok(VerificationReport::from_comparison(rec.id, inst.order, inst.meta.clone(), mismatch))
}

/// Check one instance of a record. Meta-parameters the record does not
/// declare are ignored.
pub fn verify(id: &str, order: usize, meta: &BTreeMap<String, i64>) -> Result<VerificationReport> {
    let rec = find(id)?;
    let inst = Instance { order, meta: rec.check_meta(meta)? };
    run(rec, &inst)
}

/// Engine failures become `unsupported` reports carrying the error text.
fn verify_lenient(rec: &IdentityRecord, order: usize, meta: BTreeMap<String, i64>) -> VerificationReport {
    let inst = Instance { order, meta };
    run(rec, &inst).unwrap_or_else(|e| VerificationReport::unsupported(rec.id, order, inst.meta, e.to_string()))
}

/// Cartesian sweep over ids, orders and meta ranges, run in parallel and
/// returned sorted by id, order, then meta. An empty `orders` uses each
/// record's default order.
pub fn sweep(ids: &[&str], orders: &[usize], ranges: &BTreeMap<String, (i64, i64)>) -> Result<Vec<VerificationReport>> {
    let mut jobs = Vec::new();
    for id in ids {
        let rec = find(id)?;
        let ords = if orders.is_empty() { vec![rec.default_order] } else { orders.to_vec() };
        for order in ords {
            for m in rec.instances(ranges) {
                jobs.push((rec, order, m));
            }
        }
    }
    let mut reports: Vec<VerificationReport> = jobs
        .into_par_iter()
        .map(|(rec, order, m)| verify_lenient(rec, order, m))
        .collect();
    reports.sort_by(|a, b| (&a.id, a.order, &a.meta).cmp(&(&b.id, b.order, &b.meta)));
    Ok(reports)
}

/// The box swept when no range is given: `n`, `m`, `k` each in `0..=3`.
pub fn default_ranges() -> BTreeMap<String, (i64, i64)> {
    ["k", "m", "n"].iter().map(|name| (name.to_string(), (0, 3))).collect()
}

/// The expanded left-hand side alone.
pub fn lhs_probe(id: &str, order: usize, meta: &BTreeMap<String, i64>) -> Result<Expansion> {
    let rec = find(id)?;
    let inst = Instance { order, meta: rec.check_meta(meta)? };
    match rec.builder {
        Builder::Pair { lhs, .. } | Builder::LhsOnly { lhs, .. } => lhs(&inst),
        Builder::Custom(_) => Err(Error::UnsupportedExpression(format!("{id} has no separate left-hand side"))),
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub mismatch: usize,
    pub unsupported: usize,
    /// Reports whose status the record's expectation does not admit.
    pub unexpected: usize,
}

pub fn summarize(reports: &[VerificationReport]) -> Summary {
    let mut s = Summary::default();
    for r in reports {
        match r.status {
            Status::Pass => s.pass += 1,
            Status::Mismatch => s.mismatch += 1,
            Status::Unsupported => s.unsupported += 1,
        }
        let ok = find(&r.id).map(|rec| rec.expected.admits(r.status)).unwrap_or(false);
        if !ok {
            s.unexpected += 1;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_sorted() {
        let ids: Vec<_> = catalog().iter().map(|r| r.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert_eq!(
            verify("no-such-id", 4, &BTreeMap::new()).unwrap_err(),
            Error::UnknownIdentity("no-such-id".into())
        );
    }

    #[test]
    fn missing_and_out_of_range_meta() {
        let e = verify("s2-thm2-eq-inv-poch", 4, &BTreeMap::new()).unwrap_err();
        assert_eq!(e, Error::MissingMeta("n".into()));
        let e = verify("s2-thm2-eq-inv-poch", 4, &BTreeMap::from([("n".into(), 99)])).unwrap_err();
        assert!(matches!(e, Error::MetaOutOfRange { value: 99, .. }));
    }

    #[test]
    fn empty_sweep() {
        assert!(sweep(&[], &[4], &BTreeMap::new()).unwrap().is_empty());
    }
}
