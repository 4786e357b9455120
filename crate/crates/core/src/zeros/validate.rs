//! Sanity check of a catalog against the Riemann–von Mangoldt count
//! `N(T) ~ (T / 2 pi) log(T / (2 pi e)) + 7/8`.

use super::ZeroCatalog;
use crate::error::{Error, Result};
use crate::numerics::{PrecisionContext, Real};

/// Largest tolerated `|observed - expected|` at a checkpoint.
pub const MAX_COUNT_DEVIATION: i64 = 2;

#[derive(Debug, Clone)]
pub struct Checkpoint {
    pub t: Real,
    pub observed: usize,
    pub expected: Real,
    pub deviation: Real,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub count: usize,
    pub max_gamma: Real,
    pub checkpoints: Vec<Checkpoint>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checkpoints.iter().all(|c| c.pass)
    }
}

/// Smooth zero count `N(T)`.
pub fn expected_count(t: &Real, ctx: &PrecisionContext) -> Result<Real> {
    let t = t.round_to(ctx);
    let two_pi = Real::pi(ctx).mul_pow2(1);
    let e = Real::one(ctx).exp();
    let ratio = t.checked_div(&(&two_pi * &e))?;
    let seven_eighths = Real::from_i64(7, ctx).mul_pow2(-3);
    Ok(t.checked_div(&two_pi)? * ratio.ln()? + seven_eighths)
}

/// 10, 20, 50, 100, 200, ... up to the largest ordinate.
pub fn default_checkpoints(cat: &ZeroCatalog, ctx: &PrecisionContext) -> Vec<Real> {
    let Some(max) = cat.max_gamma() else {
        return Vec::new();
    };
    let mut out = Vec::new();
    let mut decade: i64 = 10;
    'outer: loop {
        for m in [1, 2, 5] {
            let t = Real::from_i64(m * decade, ctx);
            if t > *max {
                break 'outer;
            }
            out.push(t);
        }
        decade *= 10;
    }
    out
}

/// Counts ordinates below each checkpoint and compares with `N(T)`.
pub fn validate(
    cat: &ZeroCatalog,
    checkpoints: &[Real],
    ctx: &PrecisionContext,
) -> Result<ValidationReport> {
    let max_gamma = cat.max_gamma().ok_or(Error::EmptyCatalog)?.clone();
    let limit = Real::from_i64(MAX_COUNT_DEVIATION, ctx);
    let mut rows = Vec::with_capacity(checkpoints.len());
    for t in checkpoints {
        let observed = cat.ordinates().partition_point(|o| o.gamma() < t);
        let expected = expected_count(t, ctx)?;
        let deviation = (Real::from_i64(observed as i64, ctx) - &expected).abs();
        let pass = deviation <= limit;
        rows.push(Checkpoint {
            t: t.round_to(ctx),
            observed,
            expected,
            deviation,
            pass,
        });
    }
    Ok(ValidationReport {
        count: cat.len(),
        max_gamma,
        checkpoints: rows,
    })
}
