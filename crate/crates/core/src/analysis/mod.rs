//! Second differences of a coefficient series, the bound they obey for
//! critical-line data, the zero-sum constant, and the positivity scan.

mod conjecture;
mod corollary;

use crate::error::{Error, Result};
use crate::li::{LiValue, Verifier};
use crate::numerics::{corollary_constant, PrecisionContext, Real};
use crate::zeros::ZeroSource;

pub use conjecture::{scan_conjecture, ConjectureReport, Flag, ScanEntry};
pub use corollary::{
    check_corollary_bound, check_zero_sum_constant, lambda1_closed_form, BoundReport, BoundVerdict,
    ConstantReport, ZERO_SUM_SLACK,
};

/// `delta2 = lambda_n - 2 lambda_{n-1} + lambda_{n-2}` with its distance to
/// the bound `2 + gamma - log 4 pi`.
#[derive(Debug, Clone, PartialEq)]
pub struct SecondDifference {
    pub n: u32,
    pub delta2: Real,
    pub bound: Real,
    /// `bound - |delta2|`.
    pub margin: Real,
    pub positive: bool,
}

impl SecondDifference {
    fn new(n: u32, delta2: Real, bound: &Real) -> Self {
        let margin = bound - &delta2.abs();
        let positive = delta2.is_positive();
        Self {
            n,
            delta2,
            bound: bound.clone(),
            margin,
            positive,
        }
    }
}

fn same_origin(a: &LiValue, b: &LiValue) -> bool {
    a.method == b.method
        && a.source == b.source
        && a.ctx_digits == b.ctx_digits
        && a.zeros_used == b.zeros_used
        && a.max_gamma == b.max_gamma
}

/// Checks that `values` is `lambda_1..lambda_N` from one computation with
/// real entries.
pub(crate) fn check_series(
    values: &[LiValue],
    min_len: usize,
    ctx: &PrecisionContext,
) -> Result<()> {
    if values.len() < min_len {
        return Err(Error::SeriesTooShort {
            len: values.len(),
            min: min_len,
        });
    }
    for (i, v) in values.iter().enumerate() {
        if u64::from(v.n) != i as u64 + 1 {
            return Err(Error::SeriesGap {
                position: i,
                found: v.n,
            });
        }
        if !same_origin(v, &values[0]) {
            return Err(Error::MixedSeries);
        }
        let scale = Real::one(ctx).max(v.value.abs());
        if v.imag.abs() > ctx.tolerance(crate::li::RESIDUAL_SLACK) * scale {
            return Err(Error::NonReal { n: v.n });
        }
    }
    Ok(())
}

/// One record per `n` in `3..=N`, by subtracting series entries.
pub fn second_differences(
    values: &[LiValue],
    ctx: &PrecisionContext,
) -> Result<Vec<SecondDifference>> {
    check_series(values, 3, ctx)?;
    let bound = corollary_constant(ctx)?;
    Ok(values
        .windows(3)
        .map(|w| {
            let delta2 = &(&w[2].value - &w[1].value.mul_i64(2)) + &w[0].value;
            SecondDifference::new(w[2].n, delta2, &bound)
        })
        .collect())
}

/// `-sum_rho (1/rho^2) t^{n-2}`: the second difference straight from the
/// zeros, without forming any coefficient.
pub fn delta2_direct(source: ZeroSource<'_>, n: u32, ctx: &PrecisionContext) -> Result<Real> {
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            what: "delta2_direct",
            n,
            min: 3,
        });
    }
    Verifier::new(source, ctx)?.delta2(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::li::{lambda_series, Method};
    use crate::numerics::Complex;
    use crate::zeros::{close_under_symmetry, SyntheticZeroSet, ZeroCatalog};

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn c(re: f64) -> Complex {
        Complex::from_f64(re, 0.0, &ctx()).unwrap()
    }

    fn r(lit: &str) -> Real {
        Real::parse(lit, &ctx()).unwrap()
    }

    #[test]
    fn synthetic_hand_values() {
        let x = ctx();
        let pair = close_under_symmetry(&[c(2.0)], false).unwrap();
        let series =
            lambda_series(ZeroSource::Synthetic(&pair), 3, Method::DirectKeiper, &x).unwrap();
        let d = second_differences(&series, &x).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!(
            (d[0].n, &d[0].delta2, d[0].positive),
            (3, &r("-2.125"), false)
        );
        assert_eq!(
            delta2_direct(ZeroSource::Synthetic(&pair), 3, &x).unwrap(),
            r("-2.125")
        );

        let single = SyntheticZeroSet::new(vec![c(2.0)]).unwrap();
        let series =
            lambda_series(ZeroSource::Synthetic(&single), 4, Method::DirectKeiper, &x).unwrap();
        let d = second_differences(&series, &x).unwrap();
        assert_eq!(d[0].delta2, r("-0.125"));
        assert_eq!(d[1].delta2, r("-0.0625"));
        assert_eq!(
            delta2_direct(ZeroSource::Synthetic(&single), 4, &x).unwrap(),
            r("-0.0625")
        );
        assert_eq!(d[0].margin, &d[0].bound - &r("0.125"));
    }

    #[test]
    fn catalog_matches_direct() {
        let x = ctx();
        let cat = ZeroCatalog::bundled();
        let src = ZeroSource::Catalog(&cat);
        let series = lambda_series(src, 12, Method::DirectKeiper, &x).unwrap();
        let d = second_differences(&series, &x).unwrap();
        let tol = x.tolerance(10);
        for rec in &d {
            let direct = delta2_direct(src, rec.n, &x).unwrap();
            assert!((&rec.delta2 - &direct).abs() <= tol, "n={}", rec.n);
        }
        // mpmath over the same 100 ordinates
        assert_eq!(d[0].delta2.to_sig_string(12), "0.0398215092289");
    }

    #[test]
    fn series_shape_errors() {
        let x = ctx();
        let cat = ZeroCatalog::bundled().truncated(5);
        let src = ZeroSource::Catalog(&cat);
        let series = lambda_series(src, 4, Method::DirectKeiper, &x).unwrap();
        assert!(matches!(
            second_differences(&series[..2], &x),
            Err(Error::SeriesTooShort { len: 2, min: 3 })
        ));
        assert!(matches!(
            second_differences(&series[1..], &x),
            Err(Error::SeriesGap {
                position: 0,
                found: 2
            })
        ));
        let mut mixed = series.clone();
        mixed[2].method = Method::Chebyshev;
        assert!(matches!(
            second_differences(&mixed, &x),
            Err(Error::MixedSeries)
        ));
        let mut complex = series;
        complex[1].imag = r("0.001");
        assert!(matches!(
            second_differences(&complex, &x),
            Err(Error::NonReal { n: 2 })
        ));
        assert!(delta2_direct(src, 2, &x).is_err());
    }
}
