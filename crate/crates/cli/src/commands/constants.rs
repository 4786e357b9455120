use std::io::Write;

use licoef::analysis::lambda1_closed_form;
use licoef::numerics::{
    corollary_constant, euler_gamma, log_four_pi, PrecisionContext, MIN_DIGITS,
};

use crate::args::ConstantsArgs;
use crate::config::RunConfig;
use crate::error::{CliError, CliResult};
use crate::output::{Cell, Records};

/// Digits carried beyond the requested display.
const EXTRA_DIGITS: u32 = 10;

/// Prints the constants to `--digits` significant digits, or to
/// `--decimals` places. Requests below the working minimum are computed at
/// the minimum and rounded for display.
pub fn run(cfg: &RunConfig, args: &ConstantsArgs, out: &mut dyn Write) -> CliResult<()> {
    if cfg.digits == 0 || args.decimals == Some(0) {
        return Err(CliError::Usage(
            "constants needs at least one digit".to_string(),
        ));
    }
    let shown = args
        .decimals
        .map_or(cfg.digits, |d| u32::try_from(d).unwrap_or(u32::MAX));
    let ctx = PrecisionContext::new(shown.saturating_add(EXTRA_DIGITS).max(MIN_DIGITS))?;
    let render = |v: &licoef::numerics::Real| match args.decimals {
        Some(d) => v.to_fixed_string(d),
        None => v.to_sig_string(cfg.digits as usize),
    };
    let rows = [
        ("euler_gamma", euler_gamma(&ctx)?),
        ("log_4pi", log_four_pi(&ctx)),
        ("corollary_constant", corollary_constant(&ctx)?),
        ("lambda1", lambda1_closed_form(&ctx)?),
    ];
    let mut records = Records::new(&["name", "value"]);
    for (name, v) in &rows {
        records.push(vec![Cell::str(*name), Cell::str(render(v))]);
    }
    records.write(cfg.format, out)?;
    Ok(())
}
