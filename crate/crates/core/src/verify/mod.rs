//! Finite-range verification of the partition identities.
//!
//! Each registered identity compares two or three independent routes
//! (enumeration, conjugation, series coefficients) exactly over a parameter
//! range and returns an [`IdentityReport`]. A failing report carries the
//! smallest mismatch in `(n, r, j, m)` order and up to ten partitions from
//! each enumerated side.

mod builders;
mod registry;

use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

pub use builders::{Builders, Standard};
pub use registry::{chain_maex_reading_name, registry, Identity, CHAIN_MAEX_READINGS};

use crate::census::{self, Statistic};
use crate::enumerate::{partitions, partitions_constrained, ConstraintSpec};
use crate::error::{invalid, Error, Result};
use crate::partition::Partition;

/// Partitions listed per side of a witness.
pub const WITNESS_PARTITIONS: usize = 10;

/// Scale of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyParams {
    /// Largest `n` enumerated by exhaustive checks.
    pub max_n: u32,
    /// Chain lengths / moduli; `None` uses each identity's default range.
    pub r: Option<Vec<u32>>,
    /// Restricts `j` where an identity has a `j` axis; `None` means all.
    pub j: Option<Vec<u32>>,
    /// Truncation order for series-only checks.
    pub order: usize,
    /// Record wall-clock durations (which makes reports non-reproducible).
    pub timings: bool,
}

impl Default for VerifyParams {
    fn default() -> Self {
        Self {
            max_n: 40,
            r: None,
            j: None,
            order: 120,
            timings: false,
        }
    }
}

/// Resource ceilings enforced before any work starts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_n: u32,
    pub max_order: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_n: 90,
            max_order: 5000,
        }
    }
}

impl Limits {
    /// Default limits, with `MEXLAB_MAX_N` replacing the scan ceiling and
    /// raising the order ceiling when larger.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(v) = std::env::var("MEXLAB_MAX_N").ok().and_then(|s| s.trim().parse::<u32>().ok()) {
            limits.max_n = v;
            limits.max_order = limits.max_order.max(v as usize);
        }
        limits
    }

    pub fn check_n(&self, n: u32) -> Result<()> {
        if n > self.max_n {
            return Err(Error::ResourceCeiling {
                what: "max_n",
                requested: n.into(),
                ceiling: self.max_n.into(),
            });
        }
        Ok(())
    }

    pub fn check_order(&self, order: usize) -> Result<()> {
        if order > self.max_order {
            return Err(Error::ResourceCeiling {
                what: "order",
                requested: order as u64,
                ceiling: self.max_order as u64,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportParams {
    pub max_n: u32,
    pub r: Vec<u32>,
    pub j: Option<Vec<u32>>,
    pub order: usize,
}

/// The first mismatch of a failing check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub n: u32,
    pub r: Option<u32>,
    pub j: Option<u32>,
    pub m: Option<u32>,
    /// Decimal, so that big coefficients survive serialization.
    pub lhs: String,
    pub rhs: String,
    pub partitions_lhs: Vec<Vec<u32>>,
    pub partitions_rhs: Vec<Vec<u32>>,
    /// Which comparison of a multi-step check failed.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub step: Option<&'static str>,
}

/// Result under one reading of an identity whose domain is ambiguous.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Variant {
    pub name: String,
    pub status: Status,
    pub checks: u64,
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity_id: String,
    pub params: ReportParams,
    pub status: Status,
    pub witness: Option<Witness>,
    pub duration_ms: Option<u64>,
    /// Number of exact comparisons made.
    pub checks: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub variants: Vec<Variant>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

/// Where a comparison sits in the parameter space.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub(crate) struct At {
    n: u32,
    r: Option<u32>,
    j: Option<u32>,
    m: Option<u32>,
    step: Option<&'static str>,
}

impl At {
    pub(crate) fn n(n: u32) -> Self {
        Self { n, ..Self::default() }
    }
    pub(crate) fn r(mut self, r: u32) -> Self {
        self.r = Some(r);
        self
    }
    pub(crate) fn j(mut self, j: u32) -> Self {
        self.j = Some(j);
        self
    }
    pub(crate) fn m(mut self, m: u32) -> Self {
        self.m = Some(m);
        self
    }
    pub(crate) fn step(mut self, step: &'static str) -> Self {
        self.step = Some(step);
        self
    }

    fn key(&self) -> (u32, u32, u32, u32, &'static str) {
        (
            self.n,
            self.r.unwrap_or(0),
            self.j.unwrap_or(0),
            self.m.unwrap_or(0),
            self.step.unwrap_or(""),
        )
    }
}

/// How to list the partitions behind one side of a comparison.
pub(crate) enum Side {
    Series,
    Census(Statistic, Vec<u32>),
    Constrained(ConstraintSpec),
    Filter(Box<dyn Fn(&Partition) -> bool + Send + Sync>),
}

impl Side {
    pub(crate) fn filter(f: impl Fn(&Partition) -> bool + Send + Sync + 'static) -> Self {
        Side::Filter(Box::new(f))
    }

    fn list(&self, n: u32) -> Vec<Vec<u32>> {
        let found: Vec<Partition> = match self {
            Side::Series => Vec::new(),
            Side::Census(stat, key) => census::members(n, stat, key, WITNESS_PARTITIONS),
            Side::Constrained(spec) => partitions_constrained(n, spec)
                .map(|it| it.take(WITNESS_PARTITIONS).collect())
                .unwrap_or_default(),
            Side::Filter(f) => partitions(n).filter(|p| f(p)).take(WITNESS_PARTITIONS).collect(),
        };
        found.iter().map(Partition::parts).collect()
    }
}

struct Mismatch {
    at: At,
    lhs: BigInt,
    rhs: BigInt,
    sides: (Side, Side),
}

/// Accumulates exact comparisons, keeping only the smallest mismatch.
#[derive(Default)]
pub(crate) struct Checker {
    checks: u64,
    first: Option<Mismatch>,
}

impl Checker {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    pub(crate) fn compare(
        &mut self,
        at: At,
        lhs: impl Into<BigInt>,
        rhs: impl Into<BigInt>,
        sides: impl FnOnce() -> (Side, Side),
    ) {
        self.checks += 1;
        let (lhs, rhs) = (lhs.into(), rhs.into());
        if lhs == rhs {
            return;
        }
        if self.first.as_ref().is_some_and(|f| f.at.key() <= at.key()) {
            return;
        }
        self.first = Some(Mismatch {
            at,
            lhs,
            rhs,
            sides: sides(),
        });
    }

    /// Compares two series coefficientwise, recording `q^n` at `at(n)`.
    pub(crate) fn compare_series(
        &mut self,
        lhs: &crate::qseries::TruncatedSeries,
        rhs: &crate::qseries::TruncatedSeries,
        at: impl Fn(u32) -> At,
    ) {
        let order = lhs.order().min(rhs.order());
        for n in 0..=order {
            self.compare(at(n as u32), lhs.coeff(n).clone(), rhs.coeff(n).clone(), || {
                (Side::Series, Side::Series)
            });
        }
    }

    pub(crate) fn finish(self) -> Outcome {
        Outcome {
            checks: self.checks,
            witness: self.first.map(|m| Witness {
                n: m.at.n,
                r: m.at.r,
                j: m.at.j,
                m: m.at.m,
                lhs: m.lhs.to_string(),
                rhs: m.rhs.to_string(),
                partitions_lhs: m.sides.0.list(m.at.n),
                partitions_rhs: m.sides.1.list(m.at.n),
                step: m.at.step,
            }),
            variants: Vec::new(),
        }
    }
}

pub(crate) struct Outcome {
    checks: u64,
    witness: Option<Witness>,
    variants: Vec<Variant>,
}

impl Outcome {
    /// Passes iff some variant passes; the witness is that of the first
    /// variant when all fail.
    pub(crate) fn any_of(variants: Vec<Variant>) -> Self {
        let checks = variants.iter().map(|v| v.checks).sum();
        let witness = if variants.iter().any(|v| v.status == Status::Pass) {
            None
        } else {
            variants.first().and_then(|v| v.witness.clone())
        };
        Outcome {
            checks,
            witness,
            variants,
        }
    }

    pub(crate) fn into_variant(self, name: impl Into<String>) -> Variant {
        Variant {
            name: name.into(),
            status: if self.witness.is_none() { Status::Pass } else { Status::Fail },
            checks: self.checks,
            witness: self.witness,
        }
    }
}

/// Parameters passed to a registry check after defaults are resolved.
pub(crate) struct Ctx<'a> {
    pub(crate) max_n: u32,
    pub(crate) rs: Vec<u32>,
    pub(crate) js: Option<Vec<u32>>,
    pub(crate) order: usize,
    pub(crate) builders: &'a dyn Builders,
}

impl Ctx<'_> {
    /// Whether `j` lies in the requested range.
    pub(crate) fn wants_j(&self, j: u32) -> bool {
        self.js.as_ref().is_none_or(|js| js.contains(&j))
    }

    pub(crate) fn js_or(&self, default: impl Iterator<Item = u32>) -> Vec<u32> {
        self.js.clone().unwrap_or_else(|| default.collect())
    }
}

pub fn lookup(id: &str) -> Result<&'static Identity> {
    registry()
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Runs one identity with the library's builders and default limits.
pub fn verify_identity(id: &str, params: &VerifyParams) -> Result<IdentityReport> {
    verify_with(id, params, &Standard, &Limits::default())
}

pub fn verify_with(id: &str, params: &VerifyParams, builders: &dyn Builders, limits: &Limits) -> Result<IdentityReport> {
    let entry = lookup(id)?;
    let rs = entry.resolve_r(params.r.as_deref(), true)?;
    run_entry(entry, rs, params, builders, limits)
}

/// Runs every registered identity; requested `r` values below an
/// identity's minimum are dropped for that identity.
pub fn run_suite(params: &VerifyParams) -> Result<Vec<IdentityReport>> {
    run_suite_with(params, &Standard, &Limits::default())
}

pub fn run_suite_with(params: &VerifyParams, builders: &dyn Builders, limits: &Limits) -> Result<Vec<IdentityReport>> {
    registry()
        .par_iter()
        .map(|entry| {
            let rs = entry.resolve_r(params.r.as_deref(), false)?;
            run_entry(entry, rs, params, builders, limits)
        })
        .collect()
}

fn run_entry(
    entry: &Identity,
    rs: Vec<u32>,
    params: &VerifyParams,
    builders: &dyn Builders,
    limits: &Limits,
) -> Result<IdentityReport> {
    if entry.scans {
        limits.check_n(params.max_n)?;
    }
    if entry.uses_order {
        limits.check_order(params.order)?;
    }
    let start = Instant::now();
    let ctx = Ctx {
        max_n: params.max_n,
        rs: rs.clone(),
        js: params.j.clone(),
        order: params.order,
        builders,
    };
    let outcome = (entry.check)(&ctx)?;
    let duration_ms = params.timings.then(|| start.elapsed().as_millis() as u64);
    Ok(IdentityReport {
        identity_id: entry.id.to_string(),
        params: ReportParams {
            max_n: params.max_n,
            r: rs,
            j: params.j.clone(),
            order: params.order,
        },
        status: if outcome.witness.is_none() { Status::Pass } else { Status::Fail },
        witness: outcome.witness,
        duration_ms,
        checks: outcome.checks,
        variants: outcome.variants,
    })
}

impl Identity {
    fn resolve_r(&self, requested: Option<&[u32]>, strict: bool) -> Result<Vec<u32>> {
        let Some(range) = self.r_range.clone() else {
            return Ok(Vec::new());
        };
        let Some(req) = requested else {
            return Ok(range.collect());
        };
        let mut out = Vec::new();
        for &r in req {
            if r < *range.start() {
                if strict {
                    return Err(invalid("r", r, "below the minimum for this identity"));
                }
                continue;
            }
            if !out.contains(&r) {
                out.push(r);
            }
        }
        out.sort_unstable();
        Ok(out)
    }
}
