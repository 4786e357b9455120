use std::io::Write;

use licoef::li::{lambda_series, LiValue, Method};
use licoef::numerics::Real;

use crate::args::Format;
use crate::config::{MethodSel, RunConfig};
use crate::error::CliResult;
use crate::output::{Cell, Records};
use crate::source::load;

const COLUMNS: [&str; 7] = [
    "n",
    "lambda",
    "method",
    "zeros_used",
    "max_gamma",
    "tail",
    "digits",
];

pub fn run(cfg: &RunConfig, out: &mut dyn Write) -> CliResult<()> {
    let ctx = cfg.ctx()?;
    let loaded = load(cfg, &ctx)?;
    let methods = cfg.method.methods();
    let series = methods
        .iter()
        .map(|m| lambda_series(loaded.source(), cfg.n_max, *m, &ctx))
        .collect::<Result<Vec<_>, _>>()?;

    // cross-method spread is shown next to each value, except in JSON
    // where the record schema is fixed
    let agreement = cfg.method == MethodSel::All && cfg.format != Format::Json;
    let mut columns = COLUMNS.to_vec();
    if agreement {
        columns.push("agreement");
    }
    let sig = cfg.digits as usize;
    let max_gamma = loaded.max_gamma_literal();
    let mut records = Records::new(&columns);
    for i in 0..cfg.n_max as usize {
        let reference = &series[0][i].value;
        for (m, values) in methods.iter().zip(&series) {
            let v = &values[i];
            let mut row = record(v, max_gamma.clone(), sig);
            if agreement {
                let spread = if *m == Method::DirectKeiper {
                    Real::zero(&ctx)
                } else {
                    (&v.value - reference).abs()
                };
                row.push(Cell::str(spread.to_sig_string(3)));
            }
            records.push(row);
        }
    }
    records.write(cfg.format, out)?;
    Ok(())
}

/// `max_gamma` is printed as written in the table rather than from its
/// binary value.
fn record(v: &LiValue, max_gamma: Option<String>, sig: usize) -> Vec<Cell> {
    vec![
        Cell::from(v.n),
        Cell::str(v.value.to_sig_string(sig)),
        Cell::str(v.method.name()),
        Cell::from(v.zeros_used),
        Cell::opt(max_gamma),
        Cell::opt(v.tail.as_ref().map(|t| t.to_sig_string(sig))),
        Cell::from(v.ctx_digits),
    ]
}
