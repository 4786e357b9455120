use rayon::prelude::*;

use super::{second_differences, SecondDifference};
use crate::error::{Error, Result};
use crate::li::{lambda_series, Method};
use crate::numerics::{corollary_constant, pairwise_sum, PrecisionContext, Real};
use crate::zeros::{tail_bound, ZeroCatalog, ZeroSource};

/// Multiplier on `tail_bound(T, 1)` allowed for the zero-sum deficit: the
/// sum over all zeros counts each conjugate pair twice.
pub const ZERO_SUM_SLACK: i64 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundVerdict {
    Pass,
    Fail,
    /// The bound is a statement about zeta zeros on the critical line and
    /// says nothing about arbitrary multisets.
    NotApplicable,
}

impl std::fmt::Display for BoundVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            BoundVerdict::Pass => "PASS",
            BoundVerdict::Fail => "FAIL",
            BoundVerdict::NotApplicable => "NOT-APPLICABLE",
        })
    }
}

#[derive(Debug, Clone)]
pub struct BoundReport {
    pub n_max: u32,
    pub bound: Real,
    pub verdict: BoundVerdict,
    /// Empty when not applicable.
    pub entries: Vec<SecondDifference>,
    /// Largest `|delta2|` and where it occurs.
    pub max_abs: Option<(u32, Real)>,
    /// Every `n` with `|delta2| >= bound`.
    pub offending: Vec<u32>,
}

impl BoundReport {
    pub fn passed(&self) -> bool {
        self.verdict != BoundVerdict::Fail
    }
}

/// Asserts `|delta2| < 2 + gamma - log 4 pi` for `3 <= n <= n_max`.
pub fn check_corollary_bound(
    source: ZeroSource<'_>,
    n_max: u32,
    ctx: &PrecisionContext,
) -> Result<BoundReport> {
    if n_max < 3 {
        return Err(Error::IndexOutOfRange {
            what: "check_corollary_bound n_max",
            n: n_max,
            min: 3,
        });
    }
    let bound = corollary_constant(ctx)?;
    let ZeroSource::Catalog(_) = source else {
        return Ok(BoundReport {
            n_max,
            bound,
            verdict: BoundVerdict::NotApplicable,
            entries: Vec::new(),
            max_abs: None,
            offending: Vec::new(),
        });
    };
    let series = lambda_series(source, n_max, Method::DirectKeiper, ctx)?;
    let entries = second_differences(&series, ctx)?;
    let offending: Vec<u32> = entries
        .iter()
        .filter(|d| !d.margin.is_positive())
        .map(|d| d.n)
        .collect();
    let max_abs = entries
        .iter()
        .map(|d| (d.n, d.delta2.abs()))
        .reduce(|a, b| if b.1 > a.1 { b } else { a });
    Ok(BoundReport {
        n_max,
        bound,
        verdict: if offending.is_empty() {
            BoundVerdict::Pass
        } else {
            BoundVerdict::Fail
        },
        entries,
        max_abs,
        offending,
    })
}

#[derive(Debug, Clone)]
pub struct ConstantReport {
    pub zeros_used: usize,
    pub max_gamma: Real,
    /// `sum_rho 1/(rho (1 - rho)) = sum_gamma 2/(1/4 + gamma^2)`.
    pub partial: Real,
    pub constant: Real,
    /// `constant - partial`.
    pub deficit: Real,
    /// `ZERO_SUM_SLACK * tail_bound(max_gamma, 1)`.
    pub allowance: Real,
    pub passed: bool,
}

/// Compares the truncated zero sum with `2 + gamma - log 4 pi`: the partial
/// sum must lie strictly between 0 and the constant, and its deficit must be
/// covered by the tail bound.
pub fn check_zero_sum_constant(
    cat: &ZeroCatalog,
    ctx: &PrecisionContext,
) -> Result<ConstantReport> {
    let Some(max_gamma) = cat.max_gamma() else {
        return Err(Error::EmptyCatalog);
    };
    let quarter = Real::one(ctx).mul_pow2(-2);
    let terms = cat
        .ordinates()
        .par_iter()
        .map(|g| {
            (&quarter + &g.gamma().round_to(ctx).square())
                .recip()
                .map(|v| v.mul_pow2(1))
        })
        .collect::<Result<Vec<_>>>()?;
    let partial = pairwise_sum(&terms, ctx);
    let constant = corollary_constant(ctx)?;
    let deficit = &constant - &partial;
    let max_gamma = max_gamma.round_to(ctx);
    let allowance = tail_bound(&max_gamma, 1, ctx)?.mul_i64(ZERO_SUM_SLACK);
    let passed = partial.is_positive() && deficit.is_positive() && deficit <= allowance;
    Ok(ConstantReport {
        zeros_used: cat.len(),
        max_gamma,
        partial,
        constant,
        deficit,
        allowance,
        passed,
    })
}

/// `lambda_1 = (2 + gamma - log 4 pi) / 2`.
pub fn lambda1_closed_form(ctx: &PrecisionContext) -> Result<Real> {
    Ok(corollary_constant(ctx)?.mul_pow2(-1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::Complex;
    use crate::zeros::close_under_symmetry;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    #[test]
    fn closed_form() {
        let x = ctx();
        let l1 = lambda1_closed_form(&x).unwrap();
        assert_eq!(l1.to_fixed_string(10), "0.0230957090");
        assert_eq!(l1.to_sig_string(4), "0.02310");
        assert_eq!(l1.mul_pow2(1), corollary_constant(&x).unwrap());
        // 25 digits, independently from mpmath
        assert_eq!(l1.to_sig_string(20), "0.023095708966121033814");
    }

    #[test]
    fn bundled_bound_passes() {
        let x = ctx();
        let cat = ZeroCatalog::bundled();
        let rep = check_corollary_bound(ZeroSource::Catalog(&cat), 30, &x).unwrap();
        assert_eq!(rep.verdict, BoundVerdict::Pass);
        assert_eq!(rep.entries.len(), 28);
        let (n, max) = rep.max_abs.clone().unwrap();
        assert_eq!(n, 3);
        assert!(max < Real::parse("0.04620", &x).unwrap());
        assert!(rep.offending.is_empty());
    }

    #[test]
    fn bound_scope_and_range() {
        let x = ctx();
        let cat = ZeroCatalog::bundled();
        assert!(check_corollary_bound(ZeroSource::Catalog(&cat), 2, &x).is_err());
        let two = Complex::from_f64(2.0, 0.0, &x).unwrap();
        let set = close_under_symmetry(&[two], false).unwrap();
        let rep = check_corollary_bound(ZeroSource::Synthetic(&set), 10, &x).unwrap();
        assert_eq!(rep.verdict, BoundVerdict::NotApplicable);
        assert!(rep.passed());
        assert_eq!(rep.verdict.to_string(), "NOT-APPLICABLE");
    }

    #[test]
    fn zero_sum_constant_bundled() {
        let x = ctx();
        let rep = check_zero_sum_constant(&ZeroCatalog::bundled(), &x).unwrap();
        assert!(rep.passed);
        // mpmath over the same ordinates
        assert_eq!(rep.partial.to_sig_string(10), "0.03996970481");
        assert_eq!(rep.deficit.to_sig_string(7), "0.006221713");
        assert_eq!(rep.allowance.to_sig_string(7), "0.006228509");
        assert!(matches!(
            check_zero_sum_constant(&ZeroCatalog::bundled().truncated(0), &x),
            Err(Error::EmptyCatalog)
        ));
    }

    #[test]
    fn partial_increases_with_catalog_size() {
        let x = ctx();
        let cat = ZeroCatalog::bundled();
        let mut prev = Real::zero(&x);
        for k in [8usize, 9, 20, 50, 100] {
            let rep = check_zero_sum_constant(&cat.truncated(k), &x).unwrap();
            assert!(rep.partial > prev);
            assert!(rep.partial < rep.constant);
            prev = rep.partial;
        }
    }
}
