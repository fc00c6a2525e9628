//! Registry of integral identities.
//!
//! Each [`Identity`] pairs an integrand on `(0, 1)` with one or more readings
//! of its closed form, a parameter domain, and the removable singularities and
//! breakpoints the quadrature needs. The two sides are evaluated by disjoint
//! code: integrands use elementary functions only, and closed forms never
//! integrate.

mod catalog;
mod closed_forms;
mod integrands;

use crate::quad::{self, Fill, QuadConfig, QuadError, QuadResult, UnitPoint};
use crate::specfun::{real, CNum, SpecFunConfig, SpecFunError};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

pub use catalog::registry;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IdentityError {
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error("{id}: {message}")]
    DomainViolation { id: String, message: String },
    #[error(transparent)]
    SpecFun(#[from] SpecFunError),
    #[error(transparent)]
    Quad(#[from] QuadError),
}

pub type Result<T> = std::result::Result<T, IdentityError>;

/// Names of the free parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    A,
    K,
    M,
    N,
    P,
}

impl Param {
    pub const ALL: [Param; 5] = [Param::A, Param::K, Param::M, Param::N, Param::P];

    pub fn name(self) -> &'static str {
        match self {
            Param::A => "a",
            Param::K => "k",
            Param::M => "m",
            Param::N => "n",
            Param::P => "p",
        }
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Param {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Param::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| format!("unknown parameter '{s}'"))
    }
}

/// A point in parameter space. Identities ignore the fields they do not use.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ParamPoint {
    #[serde(with = "crate::cnum_serde")]
    pub a: CNum,
    #[serde(with = "crate::cnum_serde")]
    pub k: CNum,
    #[serde(with = "crate::cnum_serde")]
    pub m: CNum,
    #[serde(with = "crate::cnum_serde")]
    pub n: CNum,
    #[serde(with = "crate::cnum_serde")]
    pub p: CNum,
}

impl Default for ParamPoint {
    fn default() -> Self {
        Self {
            a: real(1.0),
            k: real(1.0),
            m: real(1.0),
            n: real(1.0),
            p: real(0.0),
        }
    }
}

impl ParamPoint {
    pub fn get(&self, p: Param) -> CNum {
        match p {
            Param::A => self.a,
            Param::K => self.k,
            Param::M => self.m,
            Param::N => self.n,
            Param::P => self.p,
        }
    }

    pub fn set(&mut self, p: Param, v: CNum) {
        match p {
            Param::A => self.a = v,
            Param::K => self.k = v,
            Param::M => self.m = v,
            Param::N => self.n = v,
            Param::P => self.p = v,
        }
    }

    pub fn with(mut self, p: Param, v: CNum) -> Self {
        self.set(p, v);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StatusHint {
    ExpectedConfirmed,
    /// The printed closed form looks malformed; verify rather than trust.
    SuspectedTypo,
}

impl StatusHint {
    pub fn name(self) -> &'static str {
        match self {
            StatusHint::ExpectedConfirmed => "expected_confirmed",
            StatusHint::SuspectedTypo => "suspected_typo",
        }
    }
}

pub type ClosedForm = fn(&ParamPoint, &SpecFunConfig) -> crate::specfun::Result<CNum>;

/// One way of reading a printed closed form.
#[derive(Clone, Copy)]
pub struct Reading {
    pub label: &'static str,
    pub eval: ClosedForm,
}

pub struct Identity {
    pub id: &'static str,
    pub description: &'static str,
    /// Parameters that may be set; empty for fixed-parameter examples.
    pub uses: &'static [Param],
    pub status_hint: StatusHint,
    pub anchor: &'static str,
    pub integrand_text: &'static str,
    pub closed_form_text: &'static str,
    /// Tolerance on `|lhs - rhs| / max(1, |rhs|)`.
    pub default_tol: f64,
    pub readings: &'static [Reading],
    domain: fn(&ParamPoint) -> std::result::Result<(), String>,
    integrand: fn(&ParamPoint, UnitPoint) -> CNum,
    fills: fn(&ParamPoint) -> Vec<Fill>,
    breaks: fn(&ParamPoint) -> Vec<f64>,
    grid: fn() -> Vec<ParamPoint>,
}

impl fmt::Debug for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Identity")
            .field("id", &self.id)
            .field("uses", &self.uses)
            .field("status_hint", &self.status_hint)
            .finish_non_exhaustive()
    }
}

impl Identity {
    pub fn check_domain(&self, pp: &ParamPoint) -> Result<()> {
        (self.domain)(pp).map_err(|message| IdentityError::DomainViolation {
            id: self.id.to_string(),
            message,
        })
    }

    pub fn fills(&self, pp: &ParamPoint) -> Vec<Fill> {
        (self.fills)(pp)
    }

    /// Interior points where the integrand has a branch jump or kink.
    pub fn breaks(&self, pp: &ParamPoint) -> Vec<f64> {
        (self.breaks)(pp)
    }

    /// The integrand at a single node, without domain checks.
    pub fn integrand(&self, pp: &ParamPoint, pt: UnitPoint) -> CNum {
        (self.integrand)(pp, pt)
    }

    /// Parameter points used when none are given. Fixed-parameter examples
    /// have a single point recording their bindings.
    pub fn default_grid(&self) -> Vec<ParamPoint> {
        (self.grid)()
    }

    pub fn is_fixed(&self) -> bool {
        self.uses.is_empty()
    }

    pub fn eval_lhs(&self, pp: &ParamPoint, qcfg: &QuadConfig) -> Result<QuadResult> {
        self.check_domain(pp)?;
        let pp = *pp;
        let f = self.integrand;
        Ok(quad::integrate_split(
            move |pt| f(&pp, pt),
            &self.breaks(&pp),
            &self.fills(&pp),
            qcfg,
        )?)
    }

    /// Every reading of the closed form, in registry order.
    pub fn eval_readings(&self, pp: &ParamPoint) -> Result<Vec<(&'static str, CNum)>> {
        self.check_domain(pp)?;
        let cfg = SpecFunConfig::default();
        self.readings
            .iter()
            .map(|r| {
                let v = (r.eval)(pp, &cfg)?;
                Ok((r.label, v))
            })
            .collect()
    }

    /// The primary reading of the closed form.
    pub fn eval_rhs(&self, pp: &ParamPoint) -> Result<CNum> {
        self.check_domain(pp)?;
        Ok((self.readings[0].eval)(pp, &SpecFunConfig::default())?)
    }
}

pub fn lookup(id: &str) -> Result<&'static Identity> {
    registry()
        .iter()
        .find(|i| i.id == id)
        .ok_or_else(|| IdentityError::UnknownIdentity(id.to_string()))
}

pub fn check_domain(id: &str, pp: &ParamPoint) -> Result<()> {
    lookup(id)?.check_domain(pp)
}

pub fn eval_rhs(id: &str, pp: &ParamPoint) -> Result<CNum> {
    lookup(id)?.eval_rhs(pp)
}

pub fn eval_lhs(id: &str, pp: &ParamPoint, qcfg: &QuadConfig) -> Result<QuadResult> {
    lookup(id)?.eval_lhs(pp, qcfg)
}
