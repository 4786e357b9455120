use super::engine::Prepared;
use super::terms::{thm2_power, x_of_rho};
use super::Method;
use crate::error::{Error, Result};
use crate::numerics::{chebyshev_t, Complex, PrecisionContext, Real};
use crate::zeros::ZeroSource;

/// Residuals pass when `relative <= 10^(RESIDUAL_SLACK - digits)`.
pub const RESIDUAL_SLACK: i32 = 10;

/// Mismatch between the two sides of an identity.
#[derive(Debug, Clone, PartialEq)]
pub struct Residual {
    pub n: u32,
    pub absolute: Real,
    /// `max(1, |lambda_n|)`, or `max(1, |lhs|)` for the per-zero link.
    pub scale: Real,
    pub relative: Real,
}

impl Residual {
    fn new(n: u32, diff: &Complex, magnitude: Real, ctx: &PrecisionContext) -> Result<Self> {
        let absolute = diff.abs();
        let scale = Real::one(ctx).max(magnitude);
        let relative = absolute.checked_div(&scale)?;
        Ok(Self {
            n,
            absolute,
            scale,
            relative,
        })
    }

    pub fn tolerance(ctx: &PrecisionContext) -> Real {
        ctx.tolerance(RESIDUAL_SLACK)
    }

    pub fn within(&self, ctx: &PrecisionContext) -> bool {
        self.relative <= Self::tolerance(ctx)
    }
}

/// Checks the increment identities against one zero source, reusing the
/// per-zero values across `n`.
pub struct Verifier {
    prep: Prepared,
    ctx: PrecisionContext,
}

impl Verifier {
    pub fn new(source: ZeroSource<'_>, ctx: &PrecisionContext) -> Result<Self> {
        Ok(Self {
            prep: Prepared::new(source, ctx)?,
            ctx: *ctx,
        })
    }

    fn lambda(&self, n: u32) -> Result<Complex> {
        self.prep.direct(Method::DirectKeiper, n, &self.ctx)
    }

    /// `lambda_n - lambda_{n-1} = sum (1/rho) t^{n-1}` with both sides from
    /// the zeros.
    pub fn thm1(&self, n: u32) -> Result<Residual> {
        guard("verify_thm1", n, 2)?;
        let (ln, lp) = (self.lambda(n)?, self.lambda(n - 1)?);
        self.thm1_complex(n, &ln, &lp)
    }

    /// `lambda_n - 2 lambda_{n-1} + lambda_{n-2} = -sum (1/rho^2) t^{n-2}`.
    pub fn thm2(&self, n: u32) -> Result<Residual> {
        guard("verify_thm2", n, 3)?;
        let (ln, lp, lpp) = (self.lambda(n)?, self.lambda(n - 1)?, self.lambda(n - 2)?);
        self.thm2_complex(n, &ln, &lp, &lpp)
    }

    /// The first identity with externally supplied coefficients.
    pub fn thm1_from(&self, n: u32, lambda_n: &Real, lambda_prev: &Real) -> Result<Residual> {
        guard("verify_thm1", n, 2)?;
        let c = |r: &Real| Complex::from_real(r.round_to(&self.ctx), &self.ctx);
        self.thm1_complex(n, &c(lambda_n), &c(lambda_prev))
    }

    /// The second identity with externally supplied coefficients.
    pub fn thm2_from(
        &self,
        n: u32,
        lambda_n: &Real,
        lambda_prev: &Real,
        lambda_prev2: &Real,
    ) -> Result<Residual> {
        guard("verify_thm2", n, 3)?;
        let c = |r: &Real| Complex::from_real(r.round_to(&self.ctx), &self.ctx);
        self.thm2_complex(n, &c(lambda_n), &c(lambda_prev), &c(lambda_prev2))
    }

    /// `-sum (1/rho^2) t^{n-2}`, which must be real.
    pub fn delta2(&self, n: u32) -> Result<Real> {
        guard("delta2", n, 3)?;
        let s = self.prep.thm2_sum(n, &self.ctx)?;
        let scale = Real::one(&self.ctx).max(s.re.abs());
        if s.im.abs() > Residual::tolerance(&self.ctx) * scale {
            return Err(Error::NonReal { n });
        }
        Ok(-s.re)
    }

    fn thm1_complex(&self, n: u32, ln: &Complex, lp: &Complex) -> Result<Residual> {
        let s = self.prep.thm1_sum(n, &self.ctx)?;
        let diff = &(ln - lp) - &s;
        Residual::new(n, &diff, ln.abs(), &self.ctx)
    }

    fn thm2_complex(&self, n: u32, ln: &Complex, lp: &Complex, lpp: &Complex) -> Result<Residual> {
        let s = self.prep.thm2_sum(n, &self.ctx)?;
        let diff = &(&(ln - &lp.mul_i64(2)) + lpp) + &s;
        Residual::new(n, &diff, ln.abs(), &self.ctx)
    }
}

fn guard(what: &'static str, n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(Error::IndexOutOfRange { what, n, min });
    }
    Ok(())
}

pub fn verify_thm1(source: ZeroSource<'_>, n: u32, ctx: &PrecisionContext) -> Result<Residual> {
    guard("verify_thm1", n, 2)?;
    Verifier::new(source, ctx)?.thm1(n)
}

pub fn verify_thm2(source: ZeroSource<'_>, n: u32, ctx: &PrecisionContext) -> Result<Residual> {
    guard("verify_thm2", n, 3)?;
    Verifier::new(source, ctx)?.thm2(n)
}

/// Per-zero link between the Chebyshev form and the second-order summand:
/// `T_{n-1}(x) / (rho (1 - rho)) = -1/2 [rho^-2 t^{n-2} + (1-rho)^-2 t^{2-n}]`.
pub fn verify_chebyshev_link(rho: &Complex, n: u32, ctx: &PrecisionContext) -> Result<Residual> {
    guard("verify_chebyshev_link", n, 1)?;
    let x = x_of_rho(rho, ctx)?;
    let rho = rho.round_to(ctx);
    let companion = rho.one_minus_exact().round_to(ctx);
    let lhs = chebyshev_t(n - 1, &x, ctx).checked_div(&(&rho * &companion))?;
    let k = i64::from(n) - 2;
    let sum = &thm2_power(&rho, k, ctx)? + &thm2_power(&companion, k, ctx)?;
    let rhs = Complex::new(-sum.re.mul_pow2(-1), -sum.im.mul_pow2(-1));
    Residual::new(n, &(&lhs - &rhs), lhs.abs(), ctx)
}
