//! Truncation bound for conjugate-paired zero sums.
//!
//! On the critical line each conjugate pair contributes
//! `2 - 2 cos(n theta) <= n^2 theta^2` with `theta = pi - 2 atan(2 gamma) <= 1/gamma`.
//! Integrating `n^2 / gamma^2` against the zero density
//! `log(gamma / 2 pi) / 2 pi` from `T` to infinity gives
//!
//! ```text
//! n^2 (log(T / 2 pi) + 1) / (2 pi T)
//! ```

use crate::error::{Error, Result};
use crate::numerics::{PrecisionContext, Real};

/// Smallest `T` accepted by [`tail_bound`] regardless of `n`.
pub const MIN_TAIL_T: i64 = 20;

pub fn tail_bound(t: &Real, n: u32, ctx: &PrecisionContext) -> Result<Real> {
    let floor = Real::from_i64(MIN_TAIL_T.max(i64::from(n)), ctx);
    if n == 0 || *t < floor {
        return Err(Error::TailDomain {
            t: t.to_sig_string(12),
            n,
        });
    }
    let t = t.round_to(ctx);
    let two_pi = Real::pi(ctx).mul_pow2(1);
    let log_term = t.checked_div(&two_pi)?.ln()? + Real::one(ctx);
    let n2 = Real::from_i64(i64::from(n) * i64::from(n), ctx);
    (n2 * log_term).checked_div(&(two_pi * t))
}
