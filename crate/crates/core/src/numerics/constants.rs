//! Mathematical constants at context precision.

use super::{PrecisionContext, Real};
use crate::error::{Error, Result};

/// Euler–Mascheroni constant, 1050 decimal places. Verified against two
/// independent evaluations (Brent–McMillan and Euler–Maclaurin on H_10000).
const EULER_GAMMA_LITERAL: &str = include_str!("euler_gamma.txt");

/// Decimal places held by the stored literal.
pub const EULER_GAMMA_LITERAL_DIGITS: u32 = 1050;

/// Largest working precision the literal can serve once guard digits are
/// accounted for.
pub const MAX_EULER_DIGITS: u32 = EULER_GAMMA_LITERAL_DIGITS - 20;

pub fn euler_gamma(ctx: &PrecisionContext) -> Result<Real> {
    if ctx.digits() > MAX_EULER_DIGITS {
        return Err(Error::PrecisionExceedsLiteral {
            requested: ctx.digits(),
            max: MAX_EULER_DIGITS,
        });
    }
    Real::parse(EULER_GAMMA_LITERAL.trim(), ctx)
}

/// `log(4 pi)`.
pub fn log_four_pi(ctx: &PrecisionContext) -> Real {
    Real::pi(ctx).mul_pow2(2).ln().expect("4 pi is positive")
}

/// `2 + gamma - log(4 pi)`, the value of the zero sum `sum 1/(rho (1 - rho))`.
pub fn corollary_constant(ctx: &PrecisionContext) -> Result<Real> {
    Ok(Real::from_i64(2, ctx) + euler_gamma(ctx)? - log_four_pi(ctx))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_length_matches() {
        let lit = EULER_GAMMA_LITERAL.trim();
        assert!(lit.starts_with("0.5772156649"));
        assert_eq!(lit.len() as u32 - 2, EULER_GAMMA_LITERAL_DIGITS);
    }

    #[test]
    fn euler_gamma_digits() {
        let ctx = PrecisionContext::new(15).unwrap();
        let g = euler_gamma(&ctx).unwrap();
        assert_eq!(g.to_sig_string(5), "0.57722");
        assert_eq!(g.to_sig_string(15), "0.577215664901533");
        let wide = euler_gamma(&PrecisionContext::new(1000).unwrap()).unwrap();
        assert!(wide
            .to_sig_string(1000)
            .starts_with("0.5772156649015328606065120900824024310421"));
    }

    #[test]
    fn euler_gamma_precision_guard() {
        let ctx = PrecisionContext::new(2000).unwrap();
        assert!(matches!(
            euler_gamma(&ctx),
            Err(Error::PrecisionExceedsLiteral {
                requested: 2000,
                ..
            })
        ));
        assert!(corollary_constant(&ctx).is_err());
    }

    #[test]
    fn corollary_constant_digits() {
        // Oracle: mpmath at 60 digits gives 0.046191417932242067629...
        let ctx = PrecisionContext::default();
        let c = corollary_constant(&ctx).unwrap();
        assert_eq!(c.to_sig_string(4), "0.04619");
        assert_eq!(c.to_fixed_string(10), "0.0461914179");
        assert_eq!(c.to_sig_string(20), "0.046191417932242067629");
    }

    #[test]
    fn log_four_pi_value() {
        let ctx = PrecisionContext::default();
        // log(4 pi) = 2.5310242469692907929...
        assert_eq!(log_four_pi(&ctx).to_sig_string(20), "2.5310242469692907930");
    }
}
