use std::io::Write;

use serde_json::json;

use licoef::zeros::{default_checkpoints, fetch_remote, load_catalog, validate, ZeroCatalog};

use crate::args::ZerosCommand;
use crate::config::{RunConfig, ZerosSel};
use crate::error::{CliError, CliResult};
use crate::output::{write_summary, Cell, Records};
use crate::source::load_table;

fn table(path: Option<&str>, cfg: &RunConfig) -> CliResult<ZeroCatalog> {
    let sel = path.map_or_else(|| cfg.zeros.clone(), ZerosSel::parse);
    load_table(&sel, cfg)
}

pub fn run(cfg: &RunConfig, cmd: &ZerosCommand, out: &mut dyn Write) -> CliResult<()> {
    match cmd {
        ZerosCommand::Validate { path } => run_validate(cfg, path.as_deref(), out),
        ZerosCommand::Fetch { url } => run_fetch(cfg, url, out),
        ZerosCommand::Info { path } => run_info(cfg, path.as_deref(), out),
    }
}

fn run_validate(cfg: &RunConfig, path: Option<&str>, out: &mut dyn Write) -> CliResult<()> {
    let ctx = cfg.ctx()?;
    let cat = table(path, cfg)?;
    let checkpoints = default_checkpoints(&cat, &ctx);
    let report = validate(&cat, &checkpoints, &ctx)?;
    let mut records = Records::new(&["t", "observed", "expected", "deviation", "status"]);
    for c in &report.checkpoints {
        records.push(vec![
            Cell::str(c.t.to_fixed_string(3)),
            Cell::from(c.observed),
            Cell::str(c.expected.to_fixed_string(4)),
            Cell::str(c.deviation.to_fixed_string(4)),
            Cell::str(if c.pass { "ok" } else { "FAIL" }),
        ]);
    }
    let status = if report.passed() { "PASS" } else { "FAIL" };
    let line = format!("{status}, {} ordinates", report.count);
    records.write(cfg.format, out)?;
    write_summary(
        cfg.format,
        out,
        &[format!("source {}", cat.source()), line.clone()],
        json!({
            "summary": {
                "source": cat.source(),
                "count": report.count,
                "max_gamma": cat.ordinates().last().map(|g| g.literal()),
                "status": status,
            }
        }),
    )?;
    if report.passed() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!(
            "zero table {}: {line}",
            cat.source()
        )))
    }
}

fn run_fetch(cfg: &RunConfig, url: &str, out: &mut dyn Write) -> CliResult<()> {
    let fetched = fetch_remote(url, &cfg.cache_dir)?;
    let cat = load_catalog(&fetched.bytes, cfg.source_digits)?;
    let mut records = Records::new(&["url", "status", "bytes", "count", "path"]);
    records.push(vec![
        Cell::str(url),
        Cell::str(if fetched.from_cache {
            "cache hit"
        } else {
            "downloaded"
        }),
        Cell::from(fetched.bytes.len()),
        Cell::from(cat.len()),
        Cell::str(fetched.body_path.display().to_string()),
    ]);
    records.write(cfg.format, out)?;
    Ok(())
}

fn run_info(cfg: &RunConfig, path: Option<&str>, out: &mut dyn Write) -> CliResult<()> {
    let cat = table(path, cfg)?;
    let mut records = Records::new(&["source", "count", "max_gamma", "source_digits"]);
    records.push(vec![
        Cell::str(cat.source()),
        Cell::from(cat.len()),
        Cell::opt(cat.ordinates().last().map(|g| g.literal().to_string())),
        Cell::opt(cat.source_digits().map(|d| d.to_string())),
    ]);
    records.write(cfg.format, out)?;
    Ok(())
}
