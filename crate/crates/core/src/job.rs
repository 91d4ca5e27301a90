//! Batch jobs: one command over one quiver, rendered as JSON or a text table.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::coha::{coha_character, shuffle_law_check, ShuffleAlgebra};
use crate::dt::{
    cross_check_with, dt_invariants, module_character, module_dims_with, positivity_check, symmetry_identity_check,
    PositivityOutcome,
};
use crate::fock::{locality_order_check, span_framed, span_principal, DimensionTable, LocalityOutcome};
use crate::qseries::{DimVector, GradedSeries, WeightWindow};
use crate::quiver::Quiver;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Dt,
    CharCoha,
    CharModule,
    ModuleDims,
    SpanPrincipal,
    SpanFramed,
    Verify,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::Dt,
        Command::CharCoha,
        Command::CharModule,
        Command::ModuleDims,
        Command::SpanPrincipal,
        Command::SpanFramed,
        Command::Verify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Dt => "dt",
            Command::CharCoha => "char-coha",
            Command::CharModule => "char-module",
            Command::ModuleDims => "module-dims",
            Command::SpanPrincipal => "span-principal",
            Command::SpanFramed => "span-framed",
            Command::Verify => "verify",
        }
    }

    pub fn needs_framing(self) -> bool {
        matches!(self, Command::CharModule | Command::ModuleDims | Command::SpanFramed)
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown command `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    Json,
    #[default]
    Table,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "table" => Ok(OutputFormat::Table),
            _ => Err(Error::InvalidInput(format!("unknown format `{s}`"))),
        }
    }
}

/// Everything a run depends on. Identical specs give identical output.
#[derive(Clone, Debug)]
pub struct JobSpec {
    pub quiver: Quiver,
    pub command: Command,
    pub dmax: u32,
    /// Largest twice-weight kept; `None` picks [`default_weight_window`].
    pub weight_window: Option<i64>,
    /// Polynomial degrees in `Λ_d` examined by `module-dims` and `verify`.
    pub degree_window: RangeInclusive<i64>,
    pub framing: Option<DimVector>,
    pub format: OutputFormat,
}

impl JobSpec {
    pub fn new(quiver: Quiver, command: Command) -> Self {
        JobSpec {
            quiver,
            command,
            dmax: 3,
            weight_window: None,
            degree_window: 0..=8,
            framing: None,
            format: OutputFormat::Table,
        }
    }

    pub fn window(&self) -> WeightWindow {
        WeightWindow::new(
            self.weight_window
                .unwrap_or_else(|| default_weight_window(&self.quiver, self.dmax)),
        )
    }

    fn framing(&self) -> Result<&DimVector> {
        let w = self
            .framing
            .as_ref()
            .ok_or_else(|| Error::InvalidInput(format!("`{}` needs a framing vector", self.command)))?;
        w.check_len(self.quiver.vertex_count())?;
        Ok(w)
    }
}

/// `2·max(1, max |χ(e_i,e_j)|)·dmax²` twice-weight units.
pub fn default_weight_window(q: &Quiver, dmax: u32) -> i64 {
    let r = q.vertex_count();
    let chi = (0..r)
        .flat_map(|i| (0..r).map(move |j| (i, j)))
        .map(|(i, j)| q.chi_vertices(i, j).abs())
        .max()
        .unwrap_or(0)
        .max(1);
    2 * chi * i64::from(dmax * dmax)
}

/// Parse `"1,0,2"`.
pub fn parse_framing(s: &str) -> Result<DimVector> {
    s.split(',')
        .map(|x| {
            x.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidInput(format!("bad framing entry `{x}`")))
        })
        .collect::<Result<Vec<_>>>()
        .map(DimVector::new)
}

/// Parse `"A..B"` (inclusive).
pub fn parse_degree_window(s: &str) -> Result<RangeInclusive<i64>> {
    let bad = || Error::InvalidInput(format!("bad degree window `{s}`, expected A..B"));
    let (a, b) = s.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim_start_matches('=').trim().parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JobStatus {
    Success,
    VerificationFailed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JobOutput {
    pub status: JobStatus,
    pub report: String,
}

impl JobOutput {
    /// 0 on success, 1 when a verification failed.
    pub fn exit_code(&self) -> i32 {
        match self.status {
            JobStatus::Success => 0,
            JobStatus::VerificationFailed => 1,
        }
    }
}

/// A computed report, before rendering.
struct Report {
    json: Value,
    headers: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    footer: Vec<String>,
    passed: bool,
}

impl Report {
    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("JSON values always serialize");
                s.push('\n');
                s
            }
            OutputFormat::Table => {
                let mut s = render_table(&self.headers, &self.rows);
                for line in &self.footer {
                    s.push_str(line);
                    s.push('\n');
                }
                s
            }
        }
    }
}

fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        format!("{}\n", padded.join("  ").trim_end())
    };
    let mut out = line(headers.to_vec());
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    out.push_str(&format!("{}\n", rule.join("  ")));
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
    }
    out
}

fn series_report(title: &'static str, job: &JobSpec, series: &GradedSeries, extra: Value) -> Report {
    let rows: Vec<Vec<String>> = series.iter().map(|(d, c)| vec![d.to_string(), c.to_string()]).collect();
    let coefficients: Vec<Value> = series
        .iter()
        .map(|(d, c)| json!({"d": d, "series": c.to_string()}))
        .collect();
    let mut json = json!({
        "command": job.command.name(),
        "dmax": job.dmax,
        "weight_window": job.window().max_twice_weight,
        "coefficients": coefficients,
    });
    if let (Value::Object(m), Value::Object(e)) = (&mut json, extra) {
        m.extend(e);
    }
    Report {
        json,
        headers: vec!["d", title],
        rows,
        footer: Vec::new(),
        passed: true,
    }
}

fn dims_rows(t: &DimensionTable, rows: &mut Vec<Vec<String>>) {
    for (tw, dim) in &t.dims {
        let mut row = vec![t.d.to_string(), tw.to_string(), dim.to_string()];
        if let Some(s) = t.saturated {
            row.push(s.to_string());
        }
        rows.push(row);
    }
}

fn span_report(job: &JobSpec, framed: bool) -> Result<Report> {
    let q = &job.quiver;
    let win = job.window();
    let w = if framed { Some(job.framing()?) } else { None };
    let mut tables = Vec::new();
    let mut rows = Vec::new();
    let mut footer = Vec::new();
    for d in DimVector::all_up_to(q.vertex_count(), job.dmax) {
        let t = match w {
            Some(w) => span_framed(q, w, &d, win),
            None => span_principal(q, &d, win),
        };
        match t {
            Ok(t) => {
                dims_rows(&t, &mut rows);
                tables.push(serde_json::to_value(&t).expect("tables serialize"));
            }
            Err(e @ Error::WindowTooSmall { .. }) => {
                footer.push(format!("{d}: {e}"));
                tables.push(json!({"d": d, "error": e.to_string()}));
            }
            Err(e) => return Err(e),
        }
    }
    let mut json = json!({
        "command": job.command.name(),
        "dmax": job.dmax,
        "weight_window": win.max_twice_weight,
        "tables": tables,
    });
    let mut headers = vec!["d", "twice_weight", "dim"];
    if let Some(w) = w {
        json["w"] = json!(w);
        headers.push("saturated");
    }
    Ok(Report {
        json,
        headers,
        rows,
        footer,
        passed: true,
    })
}

fn dt_report(job: &JobSpec) -> Result<Report> {
    let tbl = dt_invariants(&job.quiver, job.dmax, job.window())?;
    let mut rows = Vec::new();
    let mut entries = Vec::new();
    for (d, omega) in &tbl.invariants {
        let certified = tbl.is_certified(d);
        rows.push(vec![
            d.to_string(),
            omega.to_string(),
            omega.render_q(),
            certified.to_string(),
        ]);
        let terms: Vec<Value> = omega.terms().map(|(k, c)| json!([k, c.to_string()])).collect();
        entries.push(json!({
            "d": d,
            "omega": omega.to_string(),
            "terms": terms,
            "certified": certified,
        }));
    }
    Ok(Report {
        json: json!({
            "command": "dt",
            "dmax": job.dmax,
            "weight_window": job.window().max_twice_weight,
            "invariants": entries,
        }),
        headers: vec!["d", "Omega_d (t = q^1/2)", "Omega_d (q)", "certified"],
        rows,
        footer: Vec::new(),
        passed: true,
    })
}

fn module_dims_report(job: &JobSpec) -> Result<Report> {
    let w = job.framing()?;
    let alg = ShuffleAlgebra::new(job.quiver.clone());
    let mut cells = Vec::new();
    for d in DimVector::all_up_to(job.quiver.vertex_count(), job.dmax) {
        cells.extend(module_dims_with(&alg, w, &d, job.degree_window.clone())?.cells);
    }
    let rows = cells
        .iter()
        .map(|c| {
            vec![
                c.d.to_string(),
                c.degree.to_string(),
                c.poly_degree.to_string(),
                c.dim.to_string(),
            ]
        })
        .collect();
    Ok(Report {
        json: json!({
            "command": "module-dims",
            "dmax": job.dmax,
            "w": w,
            "degree_window": [job.degree_window.start(), job.degree_window.end()],
            "cells": cells,
        }),
        headers: vec!["d", "degree", "poly_degree", "dim"],
        rows,
        footer: Vec::new(),
        passed: true,
    })
}

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn verify_report(job: &JobSpec) -> Result<Report> {
    let q = &job.quiver;
    let r = q.vertex_count();
    let win = job.window();
    let mut checks = Vec::new();

    for i in 0..r {
        for j in 0..r {
            let name = format!("locality ({},{})", i + 1, j + 1);
            let (passed, detail) = match locality_order_check(q, i, j, win) {
                Ok(LocalityOutcome::Ok { from, to }) => (true, format!("vanishes for n in {from}..={to}")),
                Ok(LocalityOutcome::Violation { n, vector }) => (false, format!("n = {n}: {vector}")),
                Ok(LocalityOutcome::NotSharp { n }) => (false, format!("vanishes already at n = {n}")),
                Err(e) => (false, e.to_string()),
            };
            checks.push(Check { name, passed, detail });
        }
    }

    let alg = ShuffleAlgebra::new(q.clone());
    let laws = shuffle_law_check(&alg, job.dmax.min(3), 6)?;
    checks.push(Check {
        name: "shuffle laws".into(),
        passed: laws.is_ok(),
        detail: format!("{laws:?}"),
    });

    let sym = symmetry_identity_check(q, job.dmax, win)?;
    checks.push(Check {
        name: "symmetry identities".into(),
        passed: sym.is_ok(),
        detail: format!("{sym:?}"),
    });

    let tbl = dt_invariants(q, job.dmax, win)?;
    let pos = positivity_check(q, &tbl);
    let detail = match &pos {
        PositivityOutcome::Ok { checked, skipped } => format!(
            "{checked} certified entries; uncertified: [{}]",
            skipped.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(" ")
        ),
        PositivityOutcome::Counterexample {
            d,
            exponent,
            coefficient,
        } => {
            format!("d = {d}: coefficient {coefficient} at t^{exponent}")
        }
    };
    checks.push(Check {
        name: "DT positivity".into(),
        passed: pos.is_ok(),
        detail,
    });

    if let Some(w) = &job.framing {
        w.check_len(r)?;
        for d in DimVector::all_up_to(r, job.dmax) {
            let rep = cross_check_with(&alg, w, &d, win, job.degree_window.clone())?;
            let mismatches: Vec<String> = rep.mismatches().map(|c| c.degree.to_string()).collect();
            let unknown = rep
                .cells
                .iter()
                .filter(|c| !matches!(c.status, crate::dt::CellStatus::Agree))
                .count()
                - mismatches.len();
            let mut detail = if mismatches.is_empty() {
                format!(
                    "{} degrees agree, {unknown} outside the windows",
                    rep.cells.len() - unknown
                )
            } else {
                format!("mismatch at degrees {}", mismatches.join(" "))
            };
            if let Some(p) = &rep.parking {
                detail.push_str(&format!(
                    "; parking functions: expected {}, observed {}{}",
                    p.expected,
                    p.observed,
                    if p.matches { "" } else { " (flagged)" }
                ));
            }
            checks.push(Check {
                name: format!("cross-check d = {d}"),
                passed: mismatches.is_empty(),
                detail,
            });
        }
    }

    let passed = checks.iter().all(|c| c.passed);
    let rows = checks
        .iter()
        .map(|c| {
            vec![
                c.name.clone(),
                if c.passed { "pass" } else { "FAIL" }.into(),
                c.detail.clone(),
            ]
        })
        .collect();
    let json_checks: Vec<Value> = checks
        .iter()
        .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
        .collect();
    Ok(Report {
        json: json!({
            "command": "verify",
            "dmax": job.dmax,
            "weight_window": win.max_twice_weight,
            "w": job.framing,
            "checks": json_checks,
            "passed": passed,
        }),
        headers: vec!["check", "result", "detail"],
        rows,
        footer: vec![format!("overall: {}", if passed { "pass" } else { "FAIL" })],
        passed,
    })
}

/// Run one job. Input problems surface as `Err`; failed verifications as
/// [`JobStatus::VerificationFailed`].
pub fn run(job: &JobSpec) -> Result<JobOutput> {
    job.quiver.validate()?;
    if job.command.needs_framing() {
        job.framing()?;
    }
    let report = match job.command {
        Command::Dt => dt_report(job)?,
        Command::CharCoha => series_report(
            "A_Q(x,q)",
            job,
            &coha_character(&job.quiver, job.dmax, job.window()),
            json!({}),
        ),
        Command::CharModule => {
            let w = job.framing()?;
            let z = module_character(&job.quiver, w, job.dmax, job.window())?;
            series_report("Z(M_w,x,q)", job, &z, json!({ "w": w }))
        }
        Command::ModuleDims => module_dims_report(job)?,
        Command::SpanPrincipal => span_report(job, false)?,
        Command::SpanFramed => span_report(job, true)?,
        Command::Verify => verify_report(job)?,
    };
    Ok(JobOutput {
        status: if report.passed {
            JobStatus::Success
        } else {
            JobStatus::VerificationFailed
        },
        report: report.render(job.format),
    })
}
