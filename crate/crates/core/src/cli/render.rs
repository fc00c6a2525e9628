use super::Format;
use crate::identities::{self, Identity, Param, StatusHint};
use crate::quad::QuadConfig;
use crate::specfun::{constant, CNum, Constant};
use crate::verify::{IdentityVerdict, ReadingVerdict, SkippedPoint, TableRow, Verdict, VerificationRecord};
use serde::{Deserialize, Serialize};
use std::fmt::Write;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub identity: Option<String>,
    /// `None` means each identity's own tolerance.
    pub tol: Option<f64>,
    pub abs_tol: f64,
    pub max_level: u32,
    pub clip_eps: f64,
}

impl ConfigEcho {
    pub fn new(identity: Option<&str>, tol: Option<f64>, qcfg: &QuadConfig) -> Self {
        Self {
            identity: identity.map(str::to_string),
            tol,
            abs_tol: qcfg.abs_tol,
            max_level: qcfg.max_level,
            clip_eps: qcfg.clip_eps,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictSummary {
    pub identity_id: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub row: Option<usize>,
    pub verdict: Verdict,
    pub status_hint: StatusHint,
    pub matched_reading: Option<String>,
    pub readings: Vec<ReadingVerdict>,
    pub points: usize,
    pub skipped: Vec<SkippedPoint>,
}

impl VerdictSummary {
    fn new(v: &IdentityVerdict, row: Option<usize>) -> Self {
        Self {
            identity_id: v.identity_id.clone(),
            row,
            verdict: v.verdict,
            status_hint: v.status_hint,
            matched_reading: v.matched_reading.clone(),
            readings: v.readings.clone(),
            points: v.records.len(),
            skipped: v.skipped.clone(),
        }
    }
}

/// The JSON document written by `verify`, `sweep` and `table`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub config: ConfigEcho,
    pub records: Vec<VerificationRecord>,
    pub verdicts: Vec<VerdictSummary>,
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report values are finite");
    s.push('\n');
    s
}

/// `x` to `digits` significant digits.
pub(super) fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    let e = x.abs().log10().floor() as i32;
    if (-5..15).contains(&e) {
        let decimals = (digits as i32 - 1 - e).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        format!("{:.*e}", digits - 1, x)
    }
}

fn complex_with(z: CNum, part: impl Fn(f64) -> String) -> String {
    if z.im == 0.0 {
        part(z.re)
    } else if z.re == 0.0 {
        format!("{}i", part(z.im))
    } else {
        let sign = if z.im < 0.0 { '-' } else { '+' };
        format!("{}{sign}{}i", part(z.re), part(z.im.abs()))
    }
}

fn complex(z: CNum) -> String {
    complex_with(z, |x| sig(x, 12))
}

/// Parameters as typed: shortest round-trip form.
fn param(z: CNum) -> String {
    complex_with(z, |x| x.to_string())
}

fn status_cell(verdict: Verdict, hint: StatusHint) -> String {
    match hint {
        StatusHint::SuspectedTypo => format!("{verdict} (suspected typo)"),
        StatusHint::ExpectedConfirmed => verdict.to_string(),
    }
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

fn uses_text(identity: &Identity) -> String {
    if identity.is_fixed() {
        "-".to_string()
    } else {
        identity
            .uses
            .iter()
            .map(|p| p.name())
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub(super) fn list(registry: &[Identity], format: Format) -> String {
    match format {
        Format::Json => {
            #[derive(Serialize)]
            struct Entry<'a> {
                id: &'a str,
                description: &'a str,
                uses: Vec<&'a str>,
                status_hint: StatusHint,
                anchor: &'a str,
                integrand: &'a str,
                closed_form: &'a str,
                default_tol: f64,
                readings: Vec<&'a str>,
            }
            let entries: Vec<Entry> = registry
                .iter()
                .map(|i| Entry {
                    id: i.id,
                    description: i.description,
                    uses: i.uses.iter().map(|p| p.name()).collect(),
                    status_hint: i.status_hint,
                    anchor: i.anchor,
                    integrand: i.integrand_text,
                    closed_form: i.closed_form_text,
                    default_tol: i.default_tol,
                    readings: i.readings.iter().map(|r| r.label).collect(),
                })
                .collect();
            to_json(&serde_json::json!({ "command": "list", "identities": entries }))
        }
        Format::Csv => csv_text(
            &["id", "uses", "status_hint", "default_tol", "anchor", "integrand", "closed_form"],
            registry.iter().map(|i| {
                vec![
                    i.id.to_string(),
                    uses_text(i),
                    i.status_hint.name().to_string(),
                    i.default_tol.to_string(),
                    i.anchor.to_string(),
                    i.integrand_text.to_string(),
                    i.closed_form_text.to_string(),
                ]
            }),
        ),
        Format::Markdown => {
            let mut s = String::from("| id | uses | hint | integrand | anchor |\n|---|---|---|---|---|\n");
            for i in registry {
                let _ = writeln!(
                    s,
                    "| {} | {} | {} | `{}` | {} |",
                    i.id,
                    uses_text(i),
                    i.status_hint.name(),
                    i.integrand_text,
                    i.anchor
                );
            }
            s
        }
    }
}

pub(super) fn constants(format: Format) -> String {
    let values: Vec<(Constant, f64)> = Constant::ALL.iter().map(|&c| (c, constant(c))).collect();
    match format {
        Format::Json => {
            let entries: Vec<_> = values
                .iter()
                .map(|(c, v)| serde_json::json!({ "name": c.name(), "value": v }))
                .collect();
            to_json(&serde_json::json!({ "command": "constants", "constants": entries }))
        }
        Format::Csv => csv_text(
            &["name", "value"],
            values.iter().map(|(c, v)| vec![c.name().to_string(), sig(*v, 15)]),
        ),
        Format::Markdown => {
            let mut s = String::from("| constant | value |\n|---|---|\n");
            for (c, v) in &values {
                let _ = writeln!(s, "| {} | {} |", c.name(), sig(*v, 15));
            }
            s
        }
    }
}

const RECORD_HEADER: [&str; 21] = [
    "identity_id", "reading", "a_re", "a_im", "k_re", "k_im", "m_re", "m_im", "n_re", "n_im",
    "p_re", "p_im", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_err", "rel_err", "tol",
    "quad_converged", "status",
];

fn record_row(r: &VerificationRecord) -> Vec<String> {
    let mut row = vec![r.identity_id.clone(), r.reading.clone()];
    for p in Param::ALL {
        let v = r.params.get(p);
        row.push(format!("{:?}", v.re));
        row.push(format!("{:?}", v.im));
    }
    for z in [r.lhs, r.rhs] {
        row.push(format!("{:?}", z.re));
        row.push(format!("{:?}", z.im));
    }
    row.push(format!("{:?}", r.abs_err));
    row.push(format!("{:?}", r.rel_err));
    row.push(format!("{:?}", r.tol));
    row.push(r.quad_converged.to_string());
    row.push(r.status.to_string());
    row
}

fn markdown_verdict(s: &mut String, v: &IdentityVerdict) {
    let identity = identities::lookup(&v.identity_id).ok();
    let _ = writeln!(s, "## {}: {}\n", v.identity_id, status_cell(v.verdict, v.status_hint));
    if let Some(i) = identity {
        let _ = writeln!(s, "`{}` = `{}`\n", i.integrand_text, i.closed_form_text);
    }
    if v.readings.len() > 1 {
        for r in &v.readings {
            let _ = writeln!(s, "- reading {}: {}", r.reading, r.verdict);
        }
        s.push('\n');
    }
    let uses: &[Param] = identity.map(|i| i.uses).unwrap_or(&[]);
    let mut header = String::from("|");
    let mut rule = String::from("|");
    for p in uses {
        let _ = write!(header, " {p} |");
        rule.push_str("---|");
    }
    header.push_str(" lhs | rhs | rel_err | status |");
    rule.push_str("---|---|---|---|");
    let _ = writeln!(s, "{header}\n{rule}");
    for r in &v.records {
        let mut line = String::from("|");
        for &p in uses {
            let _ = write!(line, " {} |", param(r.params.get(p)));
        }
        let _ = writeln!(
            s,
            "{line} {} | {} | {:.2e} | {} |",
            complex(r.lhs),
            complex(r.rhs),
            r.rel_err,
            r.status
        );
    }
    for skip in &v.skipped {
        let _ = writeln!(s, "\nskipped a point: {}", skip.reason);
    }
    s.push('\n');
}

pub(super) fn verdicts(
    command: &str,
    verdicts: &[IdentityVerdict],
    echo: &ConfigEcho,
    format: Format,
) -> String {
    match format {
        Format::Json => to_json(&Report {
            command: command.to_string(),
            config: echo.clone(),
            records: verdicts.iter().flat_map(|v| v.records.iter().cloned()).collect(),
            verdicts: verdicts.iter().map(|v| VerdictSummary::new(v, None)).collect(),
        }),
        Format::Csv => csv_text(
            &RECORD_HEADER,
            verdicts.iter().flat_map(|v| v.records.iter().map(record_row)),
        ),
        Format::Markdown => {
            let mut s = String::new();
            for v in verdicts {
                markdown_verdict(&mut s, v);
            }
            s
        }
    }
}

pub(super) fn table(rows: &[TableRow], echo: &ConfigEcho, format: Format) -> String {
    match format {
        Format::Json => to_json(&Report {
            command: "table".to_string(),
            config: echo.clone(),
            records: rows.iter().flat_map(|r| r.result.records.iter().cloned()).collect(),
            verdicts: rows
                .iter()
                .map(|r| VerdictSummary::new(&r.result, Some(r.row)))
                .collect(),
        }),
        Format::Csv => csv_text(
            &["row", "identity_id", "integrand", "closed_form", "points", "max_rel_err", "status"],
            rows.iter().map(|r| {
                vec![
                    r.row.to_string(),
                    r.result.identity_id.clone(),
                    r.integrand.clone(),
                    r.closed_form.clone(),
                    r.result.records.len().to_string(),
                    format!("{:?}", max_rel_err(&r.result)),
                    r.result.verdict.to_string(),
                ]
            }),
        ),
        Format::Markdown => {
            let mut s = String::from(
                "| # | f(x) | integral of f over (0, 1) | id | points | max rel err | Status |\n|---|---|---|---|---|---|---|\n",
            );
            for r in rows {
                let _ = writeln!(
                    s,
                    "| {} | `{}` | `{}` | {} | {} | {:.1e} | {} |",
                    r.row,
                    r.integrand,
                    r.closed_form,
                    r.result.identity_id,
                    r.result.records.len(),
                    max_rel_err(&r.result),
                    status_cell(r.result.verdict, r.result.status_hint)
                );
            }
            s
        }
    }
}

fn max_rel_err(v: &IdentityVerdict) -> f64 {
    v.records.iter().map(|r| r.rel_err).fold(0.0, f64::max)
}
