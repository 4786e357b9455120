use std::io::Write;
use std::path::Path;

use serde::Deserialize;
use serde_json::json;

use licoef::li::{verify_chebyshev_link, Residual, Verifier, RESIDUAL_SLACK};
use licoef::numerics::{Complex, PrecisionContext, Real};
use licoef::zeros::{rho_of, ZeroSource};

use crate::args::{VerifyArgs, Which};
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::{write_summary, Cell, Records};
use crate::source::{load, Loaded};

/// One line of a `compute --format json` stream; other fields are ignored.
#[derive(Debug, Deserialize)]
struct SeriesLine {
    n: u32,
    lambda: String,
    method: String,
}

fn read_series(path: &Path, ctx: &PrecisionContext) -> CliResult<Vec<Real>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Data(format!("cannot read series {}: {e}", path.display())))?;
    let mut values = Vec::new();
    let mut method: Option<String> = None;
    for (i, line) in text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
    {
        let rec: SeriesLine = serde_json::from_str(line).map_err(|e| {
            CliError::Data(format!(
                "{}:{}: not a series record: {e}",
                path.display(),
                i + 1
            ))
        })?;
        match &method {
            None => method = Some(rec.method.clone()),
            Some(m) if *m != rec.method => {
                return Err(CliError::Data(format!(
                    "{}:{}: series mixes methods {m} and {}",
                    path.display(),
                    i + 1,
                    rec.method
                )))
            }
            Some(_) => {}
        }
        if rec.n as usize != values.len() + 1 {
            return Err(CliError::Data(format!(
                "{}:{}: expected n = {}, found n = {}",
                path.display(),
                i + 1,
                values.len() + 1,
                rec.n
            )));
        }
        let v = Real::parse(&rec.lambda, ctx).map_err(|_| {
            CliError::Data(format!(
                "{}:{}: invalid lambda {:?}",
                path.display(),
                i + 1,
                rec.lambda
            ))
        })?;
        values.push(v);
    }
    Ok(values)
}

struct Check {
    name: &'static str,
    residuals: Vec<Residual>,
}

fn link_residuals(loaded: &Loaded, n_max: u32, ctx: &PrecisionContext) -> CliResult<Vec<Residual>> {
    let rhos: Vec<Complex> = match loaded.source() {
        ZeroSource::Catalog(c) => c.ordinates().iter().map(|g| rho_of(g, ctx)).collect(),
        ZeroSource::Synthetic(s) => s.rhos().to_vec(),
    };
    let mut out = Vec::with_capacity(n_max as usize);
    for n in 1..=n_max {
        let mut worst: Option<Residual> = None;
        for rho in &rhos {
            let r = verify_chebyshev_link(rho, n, ctx)?;
            if worst.as_ref().is_none_or(|w| r.relative > w.relative) {
                worst = Some(r);
            }
        }
        if let Some(w) = worst {
            out.push(w);
        }
    }
    Ok(out)
}

pub fn run(cfg: &RunConfig, args: &VerifyArgs, out: &mut dyn Write) -> CliResult<()> {
    let min = match args.which {
        Which::Thm1 => 2,
        Which::Chebyshev => 1,
        Which::Thm2 | Which::All => 3,
    };
    if cfg.n_max < min {
        return Err(CliError::Usage(format!(
            "verify {} needs --n-max >= {min}",
            which_name(args.which)
        )));
    }
    let ctx = cfg.ctx()?;
    let loaded = load(cfg, &ctx)?;
    let series = match &args.series {
        Some(p) => Some(read_series(p, &ctx)?),
        None => None,
    };
    let n_max = match &series {
        Some(s) => {
            let len = u32::try_from(s.len()).unwrap_or(u32::MAX);
            if len < min {
                return Err(CliError::Data(format!(
                    "series has {len} values, need at least {min}"
                )));
            }
            cfg.n_max.min(len)
        }
        None => cfg.n_max,
    };
    let verifier = Verifier::new(loaded.source(), &ctx)?;
    let mut checks = Vec::new();
    if matches!(args.which, Which::Thm1 | Which::All) {
        let residuals = (2..=n_max)
            .map(|n| match &series {
                Some(s) => verifier.thm1_from(n, &s[n as usize - 1], &s[n as usize - 2]),
                None => verifier.thm1(n),
            })
            .collect::<Result<Vec<_>, _>>()?;
        checks.push(Check {
            name: "thm1",
            residuals,
        });
    }
    if matches!(args.which, Which::Thm2 | Which::All) {
        let residuals = (3..=n_max)
            .map(|n| match &series {
                Some(s) => verifier.thm2_from(
                    n,
                    &s[n as usize - 1],
                    &s[n as usize - 2],
                    &s[n as usize - 3],
                ),
                None => verifier.thm2(n),
            })
            .collect::<Result<Vec<_>, _>>()?;
        checks.push(Check {
            name: "thm2",
            residuals,
        });
    }
    if matches!(args.which, Which::Chebyshev | Which::All) {
        checks.push(Check {
            name: "chebyshev",
            residuals: link_residuals(&loaded, n_max, &ctx)?,
        });
    }

    let mut records = Records::new(&["check", "n", "absolute", "relative", "status"]);
    let mut failures: Vec<String> = Vec::new();
    let mut lines = vec![format!(
        "tolerance 1e{} relative to max(1, |lambda_n|)",
        i64::from(RESIDUAL_SLACK) - i64::from(ctx.digits())
    )];
    let mut summary = Vec::new();
    for check in &checks {
        let mut bad = Vec::new();
        for r in &check.residuals {
            let ok = r.within(&ctx);
            if !ok {
                bad.push(r.n);
            }
            records.push(vec![
                Cell::str(check.name),
                Cell::from(r.n),
                Cell::str(r.absolute.to_sig_string(3)),
                Cell::str(r.relative.to_sig_string(3)),
                Cell::str(if ok { "ok" } else { "FAIL" }),
            ]);
        }
        let worst = check
            .residuals
            .iter()
            .max_by(|a, b| a.relative.partial_cmp(&b.relative).expect("finite"))
            .expect("non-empty range");
        let status = if bad.is_empty() { "PASS" } else { "FAIL" };
        lines.push(format!(
            "{}: {} residuals, max relative {} at n = {}, {status}",
            check.name,
            check.residuals.len(),
            worst.relative.to_sig_string(3),
            worst.n
        ));
        summary.push(json!({
            "check": check.name,
            "count": check.residuals.len(),
            "max_relative": worst.relative.to_sig_string(3),
            "failed_n": bad,
            "status": status,
        }));
        if !bad.is_empty() {
            let ns: Vec<String> = bad.iter().map(u32::to_string).collect();
            failures.push(format!("{} at n = {}", check.name, ns.join(", ")));
        }
    }
    records.write(cfg.format, out)?;
    write_summary(cfg.format, out, &lines, json!({ "summary": summary }))?;
    if failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::CheckFailed(format!(
            "verification failed: {}",
            failures.join("; ")
        )))
    }
}

fn which_name(w: Which) -> &'static str {
    match w {
        Which::Thm1 => "thm1",
        Which::Thm2 => "thm2",
        Which::Chebyshev => "chebyshev",
        Which::All => "all",
    }
}
