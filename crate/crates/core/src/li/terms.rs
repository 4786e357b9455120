//! Per-zero quantities and summands.
//!
//! With `t = 1 - 1/rho`, the companion zero `1 - rho` has `t^{-1}`, and
//! `x = (t + t^{-1}) / 2 = 1 - 1 / (2 rho (1 - rho))`.

use crate::error::{Error, Result};
use crate::numerics::{Complex, PrecisionContext, Real};

fn guard_nonzero(rho: &Complex, what: &'static str) -> Result<()> {
    if rho.is_zero() {
        return Err(Error::DivisionByZero(what));
    }
    Ok(())
}

fn guard_n(what: &'static str, n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(Error::IndexOutOfRange { what, n, min });
    }
    Ok(())
}

/// `t = 1 - 1/rho`.
pub fn t_of_rho(rho: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    guard_nonzero(rho, "t_of_rho at rho = 0")?;
    let rho = rho.round_to(ctx);
    Ok(&Complex::one(ctx) - &rho.recip()?)
}

/// `x = 1 - 1 / (2 rho (1 - rho))`.
pub fn x_of_rho(rho: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    guard_nonzero(rho, "x_of_rho at rho = 0")?;
    if rho.is_one() {
        return Err(Error::DivisionByZero("x_of_rho at rho = 1"));
    }
    let rho = rho.round_to(ctx);
    let companion = rho.one_minus_exact().round_to(ctx);
    let denom = (&rho * &companion).mul_i64(2);
    Ok(&Complex::one(ctx) - &denom.recip()?)
}

/// `x = (t + 1/t) / 2`, the other route to [`x_of_rho`].
pub fn x_of_rho_via_t(rho: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    if rho.is_one() {
        return Err(Error::DivisionByZero("x_of_rho_via_t at rho = 1"));
    }
    let t = t_of_rho(rho, ctx)?;
    let sum = &t + &t.recip()?;
    Ok(Complex::new(sum.re.mul_pow2(-1), sum.im.mul_pow2(-1)))
}

/// Argument of `t` for `rho = 1/2 + i gamma`: `theta = pi - 2 atan(2 gamma)`.
pub fn theta_of_gamma(gamma: &Real, ctx: &PrecisionContext) -> Result<Real> {
    if gamma.is_sign_negative() {
        return Err(Error::InvalidNumber {
            literal: gamma.to_sig_string(20),
        });
    }
    let g = gamma.round_to(ctx);
    Ok(Real::pi(ctx) - g.mul_pow2(1).atan().mul_pow2(1))
}

/// `1 - t^n`, the summand of the defining series.
pub fn term_keiper(rho: &Complex, n: u32, ctx: &PrecisionContext) -> Result<Complex> {
    guard_n("term_keiper", n, 1)?;
    let t = t_of_rho(rho, ctx)?;
    Ok(&Complex::one(ctx) - &t.powu(u64::from(n), ctx))
}

/// `(1/rho) t^{n-1}`, the increment `lambda_n - lambda_{n-1}` per zero.
pub fn term_thm1(rho: &Complex, n: u32, ctx: &PrecisionContext) -> Result<Complex> {
    guard_n("term_thm1", n, 1)?;
    let t = t_of_rho(rho, ctx)?;
    let inv = rho.round_to(ctx).recip()?;
    Ok(&inv * &t.powu(u64::from(n - 1), ctx))
}

/// `(1/rho^2) t^{n-2}`, minus the second difference per zero.
pub fn term_thm2(rho: &Complex, n: u32, ctx: &PrecisionContext) -> Result<Complex> {
    guard_n("term_thm2", n, 2)?;
    thm2_power(rho, i64::from(n) - 2, ctx)
}

/// `(1/rho^2) t^k` for any integer `k`; negative `k` needs `rho != 1`.
pub(crate) fn thm2_power(rho: &Complex, k: i64, ctx: &PrecisionContext) -> Result<Complex> {
    guard_nonzero(rho, "term_thm2 at rho = 0")?;
    let t = t_of_rho(rho, ctx)?;
    let inv = rho.round_to(ctx).recip()?;
    Ok(&inv.square() * &t.powi(k, ctx)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn c(re: f64, im: f64) -> Complex {
        Complex::from_f64(re, im, &ctx()).unwrap()
    }

    fn close(a: &Complex, b: &Complex, slack: i32) -> bool {
        let c = ctx();
        let scale = Real::one(&c).max(b.abs());
        (a - b).abs() <= c.tolerance(slack) * scale
    }

    #[test]
    fn t_reciprocal_pair() {
        let x = ctx();
        assert_eq!(t_of_rho(&c(2.0, 0.0), &x).unwrap(), c(0.5, 0.0));
        assert_eq!(t_of_rho(&c(-1.0, 0.0), &x).unwrap(), c(2.0, 0.0));
        assert!(matches!(
            t_of_rho(&c(0.0, 0.0), &x),
            Err(Error::DivisionByZero(_))
        ));
    }

    #[test]
    fn t_on_critical_line_has_unit_modulus() {
        let x = ctx();
        let rho = Complex::parse("0.5+14.134725141i", &x).unwrap();
        let t = t_of_rho(&rho, &x).unwrap();
        assert!((t.abs() - Real::one(&x)).abs() <= x.tolerance(0));
    }

    #[test]
    fn x_examples() {
        let x = ctx();
        assert_eq!(x_of_rho(&c(2.0, 0.0), &x).unwrap(), c(1.25, 0.0));
        let rho = Complex::parse("0.5+14.134725141i", &x).unwrap();
        let v = x_of_rho(&rho, &x).unwrap();
        assert!(v.im.is_zero());
        // mpmath: 1 - 1/(2 (1/4 + g^2)) = 0.997500505583...
        assert_eq!(v.re.to_sig_string(10), "0.9975005056");
        assert!(close(&v, &x_of_rho_via_t(&rho, &x).unwrap(), 0));
        assert!(x_of_rho(&c(1.0, 0.0), &x).is_err());
        assert!(x_of_rho(&c(0.0, 0.0), &x).is_err());
    }

    #[test]
    fn theta_examples() {
        let x = ctx();
        assert_eq!(theta_of_gamma(&Real::zero(&x), &x).unwrap(), Real::pi(&x));
        let g = Real::parse("14.134725141", &x).unwrap();
        let th = theta_of_gamma(&g, &x).unwrap();
        // mpmath: pi - 2 atan(2 g) = 0.0707182629466...
        assert_eq!(th.to_sig_string(9), "0.0707182629");
        // 2 - 2 cos(theta) equals the paired n = 1 term 1 / (1/4 + g^2)
        let lhs = Real::from_i64(2, &x) - th.cos().mul_pow2(1);
        let rhs = (Real::parse("0.25", &x).unwrap() + g.square())
            .recip()
            .unwrap();
        assert!((&lhs - &rhs).abs() <= x.tolerance(3));
        assert_eq!(rhs.to_sig_string(6), "0.00499899");
        let t = t_of_rho(
            &Complex::new(Real::parse("0.5", &x).unwrap(), g.clone()),
            &x,
        )
        .unwrap();
        assert!((&t.re - &th.cos()).abs() <= x.tolerance(0));
        assert!((&t.im - &th.sin()).abs() <= x.tolerance(0));
        assert!(theta_of_gamma(&Real::from_i64(-1, &x), &x).is_err());
    }

    #[test]
    fn hand_values() {
        let x = ctx();
        assert_eq!(term_keiper(&c(2.0, 0.0), 1, &x).unwrap(), c(0.5, 0.0));
        assert_eq!(term_keiper(&c(2.0, 0.0), 3, &x).unwrap(), c(0.875, 0.0));
        assert_eq!(term_thm1(&c(2.0, 0.0), 2, &x).unwrap(), c(0.25, 0.0));
        assert_eq!(term_thm1(&c(-1.0, 0.0), 2, &x).unwrap(), c(-2.0, 0.0));
        assert_eq!(term_thm2(&c(2.0, 0.0), 3, &x).unwrap(), c(0.125, 0.0));
        assert_eq!(term_thm2(&c(-1.0, 0.0), 3, &x).unwrap(), c(2.0, 0.0));
        assert!(term_thm2(&c(2.0, 0.0), 1, &x).is_err());
        assert!(term_keiper(&c(2.0, 0.0), 0, &x).is_err());
        assert!(term_thm1(&c(0.0, 0.0), 2, &x).is_err());
    }

    #[test]
    fn keiper_term_first_order_for_large_rho() {
        let x = ctx();
        let rho = c(1.0e6, 0.0);
        for n in [1u32, 3, 10] {
            let term = term_keiper(&rho, n, &x).unwrap();
            let first = Real::from_i64(i64::from(n), &x)
                .checked_div(&rho.re)
                .unwrap();
            // remainder is O(n^2 / rho^2)
            let bound = Real::from_i64(i64::from(n * n), &x)
                .checked_div(&rho.re.square())
                .unwrap();
            assert!((&term.re - &first).abs() <= bound);
            assert!(term.im.is_zero());
        }
    }

    fn rho_strategy() -> impl Strategy<Value = (f64, f64)> {
        (0.1f64..10.0, -3.1f64..3.1)
            .prop_map(|(r, a)| (r * a.cos(), r * a.sin()))
            .prop_filter("away from 1", |(a, b)| (a - 1.0).powi(2) + b * b > 0.01)
    }

    proptest! {
        #[test]
        fn telescoping((a, b) in rho_strategy(), n in 1u32..=50) {
            let x = ctx();
            let rho = c(a, b);
            let terms: Vec<Complex> = (1..=n).map(|k| term_thm1(&rho, k, &x).unwrap()).collect();
            let sum = crate::numerics::pairwise_sum(&terms, &x);
            prop_assert!(close(&sum, &term_keiper(&rho, n, &x).unwrap(), 10));
        }

        #[test]
        fn thm1_difference_is_thm2((a, b) in rho_strategy(), n in 2u32..=50) {
            let x = ctx();
            let rho = c(a, b);
            let diff = &term_thm1(&rho, n - 1, &x).unwrap() - &term_thm1(&rho, n, &x).unwrap();
            prop_assert!(close(&diff, &term_thm2(&rho, n, &x).unwrap(), 10));
        }

        #[test]
        fn x_symmetric_and_two_routes((a, b) in rho_strategy()) {
            let x = ctx();
            let rho = c(a, b);
            let v = x_of_rho(&rho, &x).unwrap();
            prop_assert!(close(&v, &x_of_rho(&rho.one_minus_exact(), &x).unwrap(), 5));
            prop_assert!(close(&v, &x_of_rho_via_t(&rho, &x).unwrap(), 5));
        }

        #[test]
        fn companion_t_is_reciprocal((a, b) in rho_strategy()) {
            let x = ctx();
            let rho = c(a, b);
            let prod = &t_of_rho(&rho, &x).unwrap() * &t_of_rho(&rho.one_minus_exact(), &x).unwrap();
            prop_assert!(close(&prod, &Complex::one(&x), 5));
        }
    }
}
