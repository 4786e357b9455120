use rayon::prelude::*;

use super::terms::{t_of_rho, theta_of_gamma, x_of_rho};
use super::{LiValue, Method};
use crate::error::{Error, Result};
use crate::numerics::{chebyshev_t, pairwise_sum, Complex, PrecisionContext, Real};
use crate::zeros::{rho_of, tail_bound, SyntheticZeroSet, ZeroCatalog, ZeroSource};

/// Per-zero values shared by every summand.
struct ZeroData {
    t: Complex,
    inv_rho: Complex,
    x: Complex,
    /// Argument of `t`; only for catalog zeros.
    theta: Option<Real>,
}

#[derive(Clone, Copy)]
enum Kind {
    Keiper,
    Chebyshev,
    SinSquared,
    Thm1,
    Thm2,
}

/// A zero source with its per-zero values computed once at the working
/// precision.
pub(crate) struct Prepared {
    /// Catalog sums run over conjugate pairs, each contributing `2 Re`.
    paired: bool,
    symmetric: bool,
    zeros: Vec<ZeroData>,
    max_gamma: Option<Real>,
    source: String,
}

impl Prepared {
    pub(crate) fn new(source: ZeroSource<'_>, ctx: &PrecisionContext) -> Result<Self> {
        match source {
            ZeroSource::Catalog(cat) => Self::catalog(cat, ctx),
            ZeroSource::Synthetic(set) => Self::synthetic(set, ctx),
        }
    }

    fn catalog(cat: &ZeroCatalog, ctx: &PrecisionContext) -> Result<Self> {
        if cat.is_empty() {
            return Err(Error::EmptyCatalog);
        }
        let zeros = cat
            .ordinates()
            .par_iter()
            .map(|g| {
                let rho = rho_of(g, ctx);
                Ok(ZeroData {
                    t: t_of_rho(&rho, ctx)?,
                    inv_rho: rho.recip()?,
                    x: x_of_rho(&rho, ctx)?,
                    theta: Some(theta_of_gamma(g.gamma(), ctx)?),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            paired: true,
            symmetric: true,
            zeros,
            max_gamma: cat.max_gamma().map(|g| g.round_to(ctx)),
            source: cat.source().to_string(),
        })
    }

    fn synthetic(set: &SyntheticZeroSet, ctx: &PrecisionContext) -> Result<Self> {
        let zeros = set
            .rhos()
            .par_iter()
            .map(|rho| {
                let rho = rho.round_to(ctx);
                Ok(ZeroData {
                    t: t_of_rho(&rho, ctx)?,
                    inv_rho: rho.recip()?,
                    x: x_of_rho(&rho, ctx)?,
                    theta: None,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            paired: false,
            symmetric: set.is_symmetric(),
            zeros,
            max_gamma: None,
            source: "synthetic".to_string(),
        })
    }

    /// Catalog ordinates (each standing for a conjugate pair) or multiset
    /// elements.
    pub(crate) fn zeros_used(&self) -> usize {
        self.zeros.len()
    }

    fn tail(&self, n: u32, ctx: &PrecisionContext) -> Option<Real> {
        match &self.max_gamma {
            Some(t) => tail_bound(t, n, ctx).ok(),
            None => Some(Real::zero(ctx)),
        }
    }

    fn paired_summand(&self, z: &ZeroData, kind: Kind, n: u32, ctx: &PrecisionContext) -> Real {
        let two = Real::from_i64(2, ctx);
        match kind {
            Kind::Keiper => two - z.t.powu(u64::from(n), ctx).re.mul_pow2(1),
            Kind::Chebyshev => two - chebyshev_t(n, &z.x.re, ctx).mul_pow2(1),
            Kind::SinSquared => {
                let theta = z.theta.as_ref().expect("catalog zeros carry theta");
                let half_angle = theta.mul_i64(i64::from(n)).mul_pow2(-1);
                half_angle.sin().mul_pow2(1).square()
            }
            Kind::Thm1 => (&z.inv_rho * &z.t.powu(u64::from(n - 1), ctx))
                .re
                .mul_pow2(1),
            Kind::Thm2 => (&z.inv_rho.square() * &z.t.powu(u64::from(n - 2), ctx))
                .re
                .mul_pow2(1),
        }
    }

    fn single_summand(
        &self,
        z: &ZeroData,
        kind: Kind,
        n: u32,
        ctx: &PrecisionContext,
    ) -> Result<Complex> {
        let one = Complex::one(ctx);
        Ok(match kind {
            Kind::Keiper => &one - &z.t.powu(u64::from(n), ctx),
            Kind::Chebyshev => &one - &chebyshev_t(n, &z.x, ctx),
            Kind::SinSquared => {
                // the square does not depend on which root of t is taken
                let s = z.t.sqrt()?.powu(u64::from(n), ctx);
                let w = &s - &s.recip()?;
                let sq = w.square();
                Complex::new(-sq.re.mul_pow2(-1), -sq.im.mul_pow2(-1))
            }
            Kind::Thm1 => &z.inv_rho * &z.t.powu(u64::from(n - 1), ctx),
            Kind::Thm2 => &z.inv_rho.square() * &z.t.powu(u64::from(n - 2), ctx),
        })
    }

    fn sum(&self, kind: Kind, n: u32, ctx: &PrecisionContext) -> Result<Complex> {
        if self.paired {
            let terms: Vec<Real> = self
                .zeros
                .par_iter()
                .map(|z| self.paired_summand(z, kind, n, ctx))
                .collect();
            Ok(Complex::from_real(pairwise_sum(&terms, ctx), ctx))
        } else {
            let terms = self
                .zeros
                .par_iter()
                .map(|z| self.single_summand(z, kind, n, ctx))
                .collect::<Result<Vec<_>>>()?;
            Ok(pairwise_sum(&terms, ctx))
        }
    }

    /// `sum (1/rho) t^{n-1}`, `n >= 1`.
    pub(crate) fn thm1_sum(&self, n: u32, ctx: &PrecisionContext) -> Result<Complex> {
        check_n("thm1_sum", n, 1)?;
        self.sum(Kind::Thm1, n, ctx)
    }

    /// `sum (1/rho^2) t^{n-2}`, `n >= 2`.
    pub(crate) fn thm2_sum(&self, n: u32, ctx: &PrecisionContext) -> Result<Complex> {
        check_n("thm2_sum", n, 2)?;
        self.sum(Kind::Thm2, n, ctx)
    }

    /// A closed-form sum; `method` must not be a recurrence.
    pub(crate) fn direct(&self, method: Method, n: u32, ctx: &PrecisionContext) -> Result<Complex> {
        check_n("lambda", n, 1)?;
        if method.needs_symmetry() && !self.symmetric {
            return Err(Error::SymmetryRequired(method));
        }
        let kind = match method {
            Method::DirectKeiper => Kind::Keiper,
            Method::Chebyshev => Kind::Chebyshev,
            Method::SinSquared => Kind::SinSquared,
            Method::RecurrenceT1 | Method::RecurrenceT2 => {
                unreachable!("recurrences are stepped by series()")
            }
        };
        self.sum(kind, n, ctx)
    }

    pub(crate) fn series(
        &self,
        n_max: u32,
        method: Method,
        ctx: &PrecisionContext,
    ) -> Result<Vec<Complex>> {
        check_n("lambda_series", n_max, 1)?;
        let mut out: Vec<Complex> = Vec::with_capacity(n_max as usize);
        for n in 1..=n_max {
            let value = match method {
                Method::RecurrenceT1 if n >= 2 => &out[n as usize - 2] + &self.thm1_sum(n, ctx)?,
                Method::RecurrenceT2 if n >= 3 => {
                    let prev = &out[n as usize - 2];
                    let prev2 = &out[n as usize - 3];
                    &(&prev.mul_i64(2) - prev2) - &self.thm2_sum(n, ctx)?
                }
                Method::RecurrenceT1 | Method::RecurrenceT2 => {
                    self.direct(Method::DirectKeiper, n, ctx)?
                }
                _ => self.direct(method, n, ctx)?,
            };
            out.push(value);
        }
        Ok(out)
    }

    fn record(&self, n: u32, value: Complex, method: Method, ctx: &PrecisionContext) -> LiValue {
        LiValue {
            n,
            value: value.re,
            imag: value.im,
            method,
            zeros_used: self.zeros_used(),
            max_gamma: self.max_gamma.clone(),
            tail: self.tail(n, ctx),
            ctx_digits: ctx.digits(),
            source: self.source.clone(),
        }
    }
}

fn check_n(what: &'static str, n: u32, min: u32) -> Result<()> {
    if n < min {
        return Err(Error::IndexOutOfRange { what, n, min });
    }
    Ok(())
}

/// `lambda_n` by `method`. The recurrences need `n >= 2` (first order) and
/// `n >= 3` (second order); their base cases come from the defining series.
pub fn lambda(
    source: ZeroSource<'_>,
    n: u32,
    method: Method,
    ctx: &PrecisionContext,
) -> Result<LiValue> {
    check_n("lambda", n, method.min_n())?;
    let prep = Prepared::new(source, ctx)?;
    let value = match method {
        Method::RecurrenceT1 | Method::RecurrenceT2 => prep
            .series(n, method, ctx)?
            .pop()
            .expect("series has n entries"),
        _ => prep.direct(method, n, ctx)?,
    };
    Ok(prep.record(n, value, method, ctx))
}

pub fn lambda_catalog(
    cat: &ZeroCatalog,
    n: u32,
    method: Method,
    ctx: &PrecisionContext,
) -> Result<LiValue> {
    lambda(ZeroSource::Catalog(cat), n, method, ctx)
}

pub fn lambda_synthetic(
    set: &SyntheticZeroSet,
    n: u32,
    method: Method,
    ctx: &PrecisionContext,
) -> Result<LiValue> {
    lambda(ZeroSource::Synthetic(set), n, method, ctx)
}

/// `[lambda_1, ..., lambda_{n_max}]`. For the recurrences the leading
/// entries are the base cases taken from the defining series.
pub fn lambda_series(
    source: ZeroSource<'_>,
    n_max: u32,
    method: Method,
    ctx: &PrecisionContext,
) -> Result<Vec<LiValue>> {
    let prep = Prepared::new(source, ctx)?;
    let values = prep.series(n_max, method, ctx)?;
    Ok(values
        .into_iter()
        .zip(1..)
        .map(|(v, n)| prep.record(n, v, method, ctx))
        .collect())
}

/// `sum_rho (1/rho) t^{n-1}`, the predicted `lambda_n - lambda_{n-1}`.
pub fn thm1_sum(source: ZeroSource<'_>, n: u32, ctx: &PrecisionContext) -> Result<Complex> {
    Prepared::new(source, ctx)?.thm1_sum(n, ctx)
}

/// `sum_rho (1/rho^2) t^{n-2}`, the predicted `-(lambda_n - 2 lambda_{n-1} + lambda_{n-2})`.
pub fn thm2_sum(source: ZeroSource<'_>, n: u32, ctx: &PrecisionContext) -> Result<Complex> {
    Prepared::new(source, ctx)?.thm2_sum(n, ctx)
}
