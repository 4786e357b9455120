use std::io::Write;

use serde_json::json;

use licoef::analysis::{check_corollary_bound, scan_conjecture, BoundVerdict};
use licoef::li::{lambda_series, Method};

use crate::args::Format;
use crate::config::{MethodSel, RunConfig};
use crate::error::{CliError, CliResult};
use crate::output::{write_summary, Cell, Records};
use crate::source::load;

pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    if cfg.n_max < 3 {
        return Err(CliError::Usage("scan needs --n-max >= 3".to_string()));
    }
    let ctx = cfg.ctx()?;
    let loaded = load(cfg, &ctx)?;
    let method = match cfg.method {
        MethodSel::All => Method::DirectKeiper,
        MethodSel::One(m) => m,
    };
    let series = lambda_series(loaded.source(), cfg.n_max, method, &ctx)?;
    let report = scan_conjecture(&series, &ctx)?;
    let bound = check_corollary_bound(loaded.source(), cfg.n_max, &ctx)?;

    // the CSV header is a fixed five-column schema
    let caveat = cfg.format != Format::Csv;
    let mut columns = vec!["n", "delta2", "bound", "margin", "flag"];
    if caveat {
        columns.push("caveat");
    }
    let sig = cfg.digits as usize;
    let mut records = Records::new(&columns);
    for e in &report.entries {
        let mut row = vec![
            Cell::from(e.diff.n),
            Cell::str(e.diff.delta2.to_sig_string(sig)),
            Cell::str(e.diff.bound.to_sig_string(sig)),
            Cell::str(e.diff.margin.to_sig_string(sig)),
            Cell::str(e.flag.to_string()),
        ];
        if caveat {
            row.push(Cell::opt(e.caveat.as_ref().map(|c| c.to_sig_string(3))));
        }
        records.push(row);
    }

    let bound_detail = match (&bound.verdict, &bound.max_abs) {
        (BoundVerdict::NotApplicable, _) => "not applicable to synthetic sets".to_string(),
        (_, Some((n, m))) => format!("max |delta2| {} at n = {n}", m.to_sig_string(6)),
        (_, None) => String::new(),
    };
    let mut lines = vec![
        format!("method {method}, {} entries", report.entries.len()),
        format!(
            "min delta2 {} at n = {}",
            report.min_delta2.1.to_sig_string(6),
            report.min_delta2.0
        ),
        format!(
            "min margin {} at n = {}",
            report.min_margin.1.to_sig_string(6),
            report.min_margin.0
        ),
        format!("conjecture: {}", report.verdict()),
        format!(
            "bound 2 + gamma - log 4 pi = {}: {}, {bound_detail}",
            bound.bound.to_sig_string(sig),
            bound.verdict
        ),
    ];
    if !bound.offending.is_empty() {
        let ns: Vec<String> = bound.offending.iter().map(u32::to_string).collect();
        lines.push(format!("bound exceeded at n = {}", ns.join(", ")));
    }
    records.write(cfg.format, out)?;
    write_summary(
        cfg.format,
        out,
        &lines,
        json!({
            "summary": {
                "method": method.name(),
                "entries": report.entries.len(),
                "min_delta2": { "n": report.min_delta2.0, "value": report.min_delta2.1.to_sig_string(sig) },
                "min_margin": { "n": report.min_margin.0, "value": report.min_margin.1.to_sig_string(sig) },
                "violations": report.violations,
                "inconclusive": report.inconclusive,
                "verdict": report.verdict(),
                "bound": bound.bound.to_sig_string(sig),
                "bound_verdict": bound.verdict.to_string(),
                "bound_offending": bound.offending,
            }
        }),
    )?;

    let mut failures = Vec::new();
    if report.has_violation() {
        failures.push(report.verdict());
    }
    if !bound.passed() {
        let ns: Vec<String> = bound.offending.iter().map(u32::to_string).collect();
        failures.push(format!("bound exceeded at n = {}", ns.join(", ")));
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(failures.join("; ")))
    }
}
