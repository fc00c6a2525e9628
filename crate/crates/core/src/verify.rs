//! Comparison of quadrature against closed forms, and the table audit.

use crate::identities::{self, Identity, IdentityError, ParamPoint, StatusHint};
use crate::quad::QuadConfig;
use crate::specfun::CNum;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum VerifyError {
    #[error(transparent)]
    Identity(#[from] IdentityError),
    #[error("{0}: no grid point lies inside the domain")]
    EmptyGridAfterDomainFilter(String),
}

pub type Result<T> = std::result::Result<T, VerifyError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PointStatus {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Confirmed,
    Failed,
    Mixed,
    Undetermined,
}

impl PointStatus {
    pub fn name(self) -> &'static str {
        match self {
            PointStatus::Pass => "PASS",
            PointStatus::Fail => "FAIL",
            PointStatus::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Confirmed => "CONFIRMED",
            Verdict::Failed => "FAILED",
            Verdict::Mixed => "MIXED",
            Verdict::Undetermined => "UNDETERMINED",
        }
    }
}

impl fmt::Display for PointStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub identity_id: String,
    /// Which reading of the closed form `rhs` came from.
    pub reading: String,
    pub params: ParamPoint,
    #[serde(with = "crate::cnum_serde")]
    pub lhs: CNum,
    #[serde(with = "crate::cnum_serde")]
    pub rhs: CNum,
    pub abs_err: f64,
    /// `abs_err / max(1, |rhs|)`
    pub rel_err: f64,
    pub tol: f64,
    pub quad_converged: bool,
    pub quad_err_estimate: f64,
    pub status: PointStatus,
}

impl VerificationRecord {
    fn new(
        identity_id: &str,
        reading: &str,
        params: ParamPoint,
        lhs: &crate::quad::QuadResult,
        rhs: CNum,
        tol: f64,
    ) -> Self {
        let abs_err = (lhs.value - rhs).norm();
        let rel_err = abs_err / rhs.norm().max(1.0);
        let status = if !lhs.converged {
            PointStatus::Inconclusive
        } else if rel_err <= tol {
            PointStatus::Pass
        } else {
            PointStatus::Fail
        };
        Self {
            identity_id: identity_id.to_string(),
            reading: reading.to_string(),
            params,
            lhs: lhs.value,
            rhs,
            abs_err,
            rel_err,
            tol,
            quad_converged: lhs.converged,
            quad_err_estimate: lhs.err_estimate,
            status,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReadingVerdict {
    pub reading: String,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SkippedPoint {
    pub params: ParamPoint,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityVerdict {
    pub identity_id: String,
    pub status_hint: StatusHint,
    pub verdict: Verdict,
    /// The reading every record agrees with, if any.
    pub matched_reading: Option<String>,
    pub readings: Vec<ReadingVerdict>,
    pub records: Vec<VerificationRecord>,
    pub skipped: Vec<SkippedPoint>,
}

/// Classify a set of point statuses.
pub fn classify(statuses: impl IntoIterator<Item = PointStatus>) -> Verdict {
    let (mut pass, mut fail, mut inconclusive) = (0usize, 0usize, 0usize);
    for s in statuses {
        match s {
            PointStatus::Pass => pass += 1,
            PointStatus::Fail => fail += 1,
            PointStatus::Inconclusive => inconclusive += 1,
        }
    }
    match (pass, fail, inconclusive) {
        (p, 0, 0) if p > 0 => Verdict::Confirmed,
        (0, f, 0) if f > 0 => Verdict::Failed,
        (0, 0, _) => Verdict::Undetermined,
        _ => Verdict::Mixed,
    }
}

/// One record per reading of the closed form, sharing one quadrature.
pub fn verify_point_readings(
    id: &str,
    pp: &ParamPoint,
    tol: f64,
    qcfg: &QuadConfig,
) -> Result<Vec<VerificationRecord>> {
    let identity = identities::lookup(id)?;
    point_records(identity, pp, tol, qcfg)
}

fn point_records(
    identity: &Identity,
    pp: &ParamPoint,
    tol: f64,
    qcfg: &QuadConfig,
) -> Result<Vec<VerificationRecord>> {
    let rhs = identity.eval_readings(pp)?;
    let lhs = identity.eval_lhs(pp, qcfg)?;
    Ok(rhs
        .into_iter()
        .map(|(label, value)| VerificationRecord::new(identity.id, label, *pp, &lhs, value, tol))
        .collect())
}

/// Compare both sides at one point using the primary reading.
pub fn verify_point(
    id: &str,
    pp: &ParamPoint,
    tol: f64,
    qcfg: &QuadConfig,
) -> Result<VerificationRecord> {
    let mut records = verify_point_readings(id, pp, tol, qcfg)?;
    Ok(records.swap_remove(0))
}

/// Verify every in-domain point of `grid`. Points run in parallel; records
/// come back in grid order.
pub fn sweep(
    id: &str,
    grid: &[ParamPoint],
    tol: f64,
    qcfg: &QuadConfig,
) -> Result<IdentityVerdict> {
    let identity = identities::lookup(id)?;
    let mut inside = Vec::new();
    let mut skipped = Vec::new();
    for pp in grid {
        match identity.check_domain(pp) {
            Ok(()) => inside.push(*pp),
            Err(IdentityError::DomainViolation { message, .. }) => skipped.push(SkippedPoint {
                params: *pp,
                reason: message,
            }),
            Err(e) => return Err(e.into()),
        }
    }
    if inside.is_empty() {
        return Err(VerifyError::EmptyGridAfterDomainFilter(id.to_string()));
    }

    let per_point: Vec<Vec<VerificationRecord>> = inside
        .par_iter()
        .map(|pp| point_records(identity, pp, tol, qcfg))
        .collect::<Result<_>>()?;

    let readings: Vec<ReadingVerdict> = identity
        .readings
        .iter()
        .enumerate()
        .map(|(i, r)| ReadingVerdict {
            reading: r.label.to_string(),
            verdict: classify(per_point.iter().map(|recs| recs[i].status)),
        })
        .collect();
    let chosen = readings
        .iter()
        .position(|r| r.verdict == Verdict::Confirmed)
        .unwrap_or(0);
    let verdict = readings[chosen].verdict;
    let matched_reading =
        (verdict == Verdict::Confirmed).then(|| readings[chosen].reading.clone());
    let records = per_point
        .into_iter()
        .map(|mut recs| recs.swap_remove(chosen))
        .collect();

    Ok(IdentityVerdict {
        identity_id: id.to_string(),
        status_hint: identity.status_hint,
        verdict,
        matched_reading,
        readings,
        records,
        skipped,
    })
}

/// Sweep an identity over its default grid at its default tolerance.
pub fn sweep_default(id: &str, qcfg: &QuadConfig) -> Result<IdentityVerdict> {
    let identity = identities::lookup(id)?;
    sweep(id, &identity.default_grid(), identity.default_tol, qcfg)
}

/// Identities behind the rows of the table of integrals, in row order.
pub const TABLE_ROWS: [&str; 18] = [
    "I_6A", "I_6B", "E1", "I_LG_ATANH", "E2", "E3", "E4", "E5", "E6", "E7", "E8", "E9", "E10",
    "E11", "E12", "I_DD1", "E13", "I_DD2",
];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub row: usize,
    pub integrand: String,
    pub closed_form: String,
    pub result: IdentityVerdict,
}

/// Audit every row of the table. Rows with free parameters run over their
/// default grids. `tol = None` uses each identity's own tolerance.
pub fn reproduce_table(tol: Option<f64>, qcfg: &QuadConfig) -> Result<Vec<TableRow>> {
    TABLE_ROWS
        .iter()
        .enumerate()
        .map(|(i, id)| {
            let identity = identities::lookup(id)?;
            let tol = tol.unwrap_or(identity.default_tol);
            let result = sweep(id, &identity.default_grid(), tol, qcfg)?;
            Ok(TableRow {
                row: i + 1,
                integrand: identity.integrand_text.to_string(),
                closed_form: identity.closed_form_text.to_string(),
                result,
            })
        })
        .collect()
}
