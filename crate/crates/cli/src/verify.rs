use std::collections::BTreeMap;
use std::io::Write;

use eulerec::identities::{self, Evaluator, IdentityId, IdentityReport, Params};
use rayon::prelude::*;
use serde::Serialize;

use crate::output::{csv_io, csv_writer, JsonArray};
use crate::{CliError, ReportFormat};

pub struct Options {
    pub max_n: u64,
    pub no_cap: bool,
    pub threads: usize,
}

struct Outcome {
    report: IdentityReport,
    /// Set when `max_n` was lowered to the identity's cost ceiling.
    capped_from: Option<u64>,
}

impl Outcome {
    fn first_n(&self) -> u64 {
        self.report.n_lo.max(self.report.id.domain_start())
    }

    fn notes(&self) -> Vec<String> {
        let mut notes = self.report.notes.clone();
        if let Some(requested) = self.capped_from {
            notes.push(format!(
                "capped at n = {} (oracle cost ceiling); {requested} requested",
                self.report.n_hi
            ));
        }
        notes
    }
}

#[derive(Serialize)]
struct FailureRecord {
    n: u64,
    lhs: String,
    rhs: String,
    residual: String,
}

#[derive(Serialize)]
struct ReportRecord {
    key: &'static str,
    id: String,
    passed: bool,
    n_lo: u64,
    n_hi: u64,
    checked: u64,
    failures: Vec<FailureRecord>,
    notes: Vec<String>,
    elapsed_ms: f64,
}

/// Ids named by `target`: one key, or the whole catalog for `all`.
pub fn select(target: &str, params: Params) -> Result<Vec<IdentityId>, CliError> {
    if target == "all" {
        Ok(IdentityId::catalog(params))
    } else {
        IdentityId::parse(target, params)
            .map(|id| vec![id])
            .map_err(|e| CliError::Usage(e.to_string()))
    }
}

/// Runs every id and prints reports in catalog order; `Ok(false)` on any failure.
pub fn run(
    ids: Vec<IdentityId>,
    opts: &Options,
    format: ReportFormat,
    out: impl Write,
) -> Result<bool, CliError> {
    let limit = |id: &IdentityId| {
        if opts.no_cap {
            opts.max_n
        } else {
            opts.max_n.min(id.cost_ceiling())
        }
    };
    // one evaluator per distinct range so capped ids do not pay for large tables
    let evaluators: BTreeMap<u64, Evaluator> = ids
        .iter()
        .map(|id| (limit(id), Evaluator::new(limit(id).max(1))))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.threads)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start worker pool: {e}")))?;
    let outcomes: Vec<Outcome> = pool.install(|| {
        ids.par_iter()
            .map(|&id| {
                let n_hi = limit(&id);
                Outcome {
                    report: identities::verify_range_with(&evaluators[&n_hi], id, 0, n_hi),
                    capped_from: (n_hi < opts.max_n).then_some(opts.max_n),
                }
            })
            .collect()
    });

    match format {
        ReportFormat::Text => write_text(&outcomes, out)?,
        ReportFormat::Json => {
            let mut array = JsonArray::new(out)?;
            for o in &outcomes {
                array.push(&record(o))?;
            }
            array.finish()?;
        }
        ReportFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record([
                "key", "id", "status", "n_lo", "n_hi", "n", "lhs", "rhs", "residual",
            ])
            .map_err(csv_io)?;
            for o in &outcomes {
                let r = &o.report;
                let prefix = [
                    r.id.key().to_string(),
                    r.id.to_string(),
                    status(r).to_string(),
                    o.first_n().to_string(),
                    r.n_hi.to_string(),
                ];
                if r.failures.is_empty() {
                    w.write_record(prefix.iter().chain(&[
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ]))
                    .map_err(csv_io)?;
                }
                for f in &r.failures {
                    let detail = [
                        f.n.to_string(),
                        f.lhs.to_string(),
                        f.rhs.to_string(),
                        f.residual().to_string(),
                    ];
                    w.write_record(prefix.iter().chain(&detail))
                        .map_err(csv_io)?;
                }
            }
            w.flush()?;
        }
    }
    Ok(outcomes.iter().all(|o| o.report.passed()))
}

fn status(report: &IdentityReport) -> &'static str {
    if report.passed() {
        "PASS"
    } else {
        "FAIL"
    }
}

fn record(o: &Outcome) -> ReportRecord {
    let r = &o.report;
    ReportRecord {
        key: r.id.key(),
        id: r.id.to_string(),
        passed: r.passed(),
        n_lo: o.first_n(),
        n_hi: r.n_hi,
        checked: r.checked(),
        failures: r
            .failures
            .iter()
            .map(|f| FailureRecord {
                n: f.n,
                lhs: f.lhs.to_string(),
                rhs: f.rhs.to_string(),
                residual: f.residual().to_string(),
            })
            .collect(),
        notes: o.notes(),
        elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
    }
}

fn write_text(outcomes: &[Outcome], mut out: impl Write) -> std::io::Result<()> {
    let mut failed = 0;
    for o in outcomes {
        let r = &o.report;
        if !r.passed() {
            failed += 1;
        }
        write!(
            out,
            "{} {} n={}..={} checked={}",
            status(r),
            r.id,
            o.first_n(),
            r.n_hi,
            r.checked()
        )?;
        if !r.passed() {
            write!(out, " failures={}", r.failures.len())?;
        }
        writeln!(out, " [{:.2?}]", r.elapsed)?;
        for f in &r.failures {
            writeln!(
                out,
                "  n={} lhs={} rhs={} lhs-rhs={}",
                f.n,
                f.lhs,
                f.rhs,
                f.residual()
            )?;
        }
        for note in o.notes() {
            writeln!(out, "  note: {note}")?;
        }
    }
    writeln!(out, "{} passed, {failed} failed", outcomes.len() - failed)?;
    out.flush()
}
