use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use rug::float::{Constant, Round};
use rug::ops::Pow;
use rug::Float;

use super::PrecisionContext;
use crate::error::{Error, Result};

/// A finite arbitrary-precision real number.
///
/// Binary operations round to the wider of the two operand precisions with
/// ties-to-even; every constructor takes its precision from a
/// [`PrecisionContext`], so in practice that is the context precision.
#[derive(Clone, PartialEq, PartialOrd)]
pub struct Real(Float);

impl Real {
    pub fn zero(ctx: &PrecisionContext) -> Self {
        Real(Float::new(ctx.bits()))
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        Self::from_i64(1, ctx)
    }

    pub fn from_i64(v: i64, ctx: &PrecisionContext) -> Self {
        Real(Float::with_val(ctx.bits(), v))
    }

    /// Exact conversion; fails only for NaN and infinities.
    pub fn from_f64(v: f64, ctx: &PrecisionContext) -> Result<Self> {
        if !v.is_finite() {
            return Err(Error::NonFinite("f64 conversion"));
        }
        Ok(Real(Float::with_val(ctx.bits(), v)))
    }

    /// Parses a decimal literal, rounding to the context precision.
    pub fn parse(literal: &str, ctx: &PrecisionContext) -> Result<Self> {
        Self::parse_with_bits(literal, ctx.bits())
    }

    /// Parses a decimal literal at a precision wide enough that two distinct
    /// literals of this length never collapse to the same value.
    pub fn parse_literal(literal: &str) -> Result<Self> {
        let digits = literal.bytes().filter(u8::is_ascii_digit).count() as u32;
        let bits = (f64::from(digits.max(17)) * std::f64::consts::LOG2_10).ceil() as u32 + 16;
        Self::parse_with_bits(literal, bits)
    }

    fn parse_with_bits(literal: &str, bits: u32) -> Result<Self> {
        let invalid = || Error::InvalidNumber {
            literal: literal.to_string(),
        };
        let parsed = Float::parse(literal.trim()).map_err(|_| invalid())?;
        let f = Float::with_val(bits, parsed);
        if !f.is_finite() {
            return Err(invalid());
        }
        Ok(Real(f))
    }

    /// `10^k` at context precision.
    pub fn pow10(k: i32, ctx: &PrecisionContext) -> Self {
        let ten = Float::with_val(ctx.bits(), 10);
        Real(Float::with_val(ctx.bits(), ten.pow(k)))
    }

    pub fn pi(ctx: &PrecisionContext) -> Self {
        Real(Float::with_val(ctx.bits(), Constant::Pi))
    }

    pub fn prec(&self) -> u32 {
        self.0.prec()
    }

    /// Re-rounds to the context precision.
    pub fn round_to(&self, ctx: &PrecisionContext) -> Self {
        Real(Float::with_val(ctx.bits(), &self.0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_sign_negative(&self) -> bool {
        self.0.is_sign_negative() && !self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.cmp0() == Some(Ordering::Greater)
    }

    pub fn abs(&self) -> Self {
        Real(self.0.clone().abs())
    }

    pub fn max(self, other: Self) -> Self {
        if other > self {
            other
        } else {
            self
        }
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Real(Float::with_val(self.prec(), &self.0 * k))
    }

    /// Multiplies by `2^k` exactly.
    pub fn mul_pow2(&self, k: i32) -> Self {
        Real(Float::with_val(self.prec(), &self.0 << k))
    }

    pub fn square(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.square_ref()))
    }

    pub fn checked_div(&self, rhs: &Real) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero("real division"));
        }
        Ok(Real(Float::with_val(
            self.prec().max(rhs.prec()),
            &self.0 / &rhs.0,
        )))
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("real reciprocal"));
        }
        Ok(Real(Float::with_val(self.prec(), self.0.recip_ref())))
    }

    pub fn sqrt(&self) -> Result<Self> {
        if self.is_sign_negative() {
            return Err(Error::NonFinite("square root of a negative number"));
        }
        Ok(Real(Float::with_val(self.prec(), self.0.sqrt_ref())))
    }

    pub fn ln(&self) -> Result<Self> {
        if !self.is_positive() {
            return Err(Error::NonFinite("logarithm of a non-positive number"));
        }
        Ok(Real(Float::with_val(self.prec(), self.0.ln_ref())))
    }

    pub fn exp(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.exp_ref()))
    }

    pub fn sin(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.sin_ref()))
    }

    pub fn cos(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.cos_ref()))
    }

    pub fn atan(&self) -> Self {
        Real(Float::with_val(self.prec(), self.0.atan_ref()))
    }

    pub fn hypot(&self, other: &Real) -> Self {
        Real(Float::with_val(
            self.prec().max(other.prec()),
            self.0.hypot_ref(&other.0),
        ))
    }

    /// `1 - self` computed exactly, widening the mantissa as needed.
    pub fn one_minus_exact(&self) -> Self {
        if self.is_zero() {
            return Real(Float::with_val(self.prec(), 1));
        }
        let exp = self.0.get_exp().unwrap_or(0);
        let lowest = (exp - self.prec() as i32).min(0);
        let highest = exp.max(1) + 1;
        let bits = (highest - lowest) as u32 + 1;
        Real(Float::with_val(bits.max(self.prec()), 1 - &self.0))
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64()
    }

    /// Decimal rendering with `sig` significant digits, ties to even.
    ///
    /// Positional notation is used unless the decimal exponent is far from
    /// zero, in which case the output is `d.ddd...e±k`.
    pub fn to_sig_string(&self, sig: usize) -> String {
        let sig = sig.max(1);
        if self.is_zero() {
            return "0".to_string();
        }
        let (neg, digits, exp) = self
            .0
            .to_sign_string_exp_round(10, Some(sig), Round::Nearest);
        let exp = exp.unwrap_or(0);
        let body = layout_decimal(&digits, exp);
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }

    /// Decimal rendering with exactly `decimals` digits after the point,
    /// ties to even.
    pub fn to_fixed_string(&self, decimals: usize) -> String {
        let scale = Float::with_val(
            self.prec() + 64,
            Float::with_val(self.prec() + 64, 10).pow(decimals as u32),
        );
        let scaled = Float::with_val(self.prec() + 64, &self.0 * &scale).round_even();
        let int = scaled
            .to_integer()
            .expect("finite values convert to integers");
        let neg = int < 0;
        let mut s = int.abs().to_string();
        if s.len() <= decimals {
            s = format!("{}{}", "0".repeat(decimals + 1 - s.len()), s);
        }
        let (whole, frac) = s.split_at(s.len() - decimals);
        let body = if decimals == 0 {
            whole.to_string()
        } else {
            format!("{whole}.{frac}")
        };
        if neg {
            format!("-{body}")
        } else {
            body
        }
    }
}

/// Lays out `0.DIGITS × 10^exp`.
fn layout_decimal(digits: &str, exp: i32) -> String {
    let len = digits.len() as i32;
    if !(-20..=40).contains(&exp) {
        let (lead, rest) = digits.split_at(1);
        let e = exp - 1;
        return if rest.is_empty() {
            format!("{lead}e{e:+}")
        } else {
            format!("{lead}.{rest}e{e:+}")
        };
    }
    if exp <= 0 {
        format!("0.{}{}", "0".repeat((-exp) as usize), digits)
    } else if exp >= len {
        format!("{}{}", digits, "0".repeat((exp - len) as usize))
    } else {
        let (a, b) = digits.split_at(exp as usize);
        format!("{a}.{b}")
    }
}

impl fmt::Debug for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Real({})", self.to_sig_string(30))
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = ((self.prec().saturating_sub(super::context::GUARD_BITS)) as f64
            / std::f64::consts::LOG2_10)
            .floor()
            .max(15.0) as usize;
        f.write_str(&self.to_sig_string(f.precision().unwrap_or(digits)))
    }
}

macro_rules! real_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait<&Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                Real(Float::with_val(self.prec().max(rhs.prec()), &self.0 $op &rhs.0))
            }
        }
        impl $trait<Real> for Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Real> for Real {
            type Output = Real;
            fn $method(self, rhs: &Real) -> Real {
                (&self).$method(rhs)
            }
        }
        impl $trait<Real> for &Real {
            type Output = Real;
            fn $method(self, rhs: Real) -> Real {
                self.$method(&rhs)
            }
        }
    };
}

real_binop!(Add, add, +);
real_binop!(Sub, sub, -);
real_binop!(Mul, mul, *);

impl Neg for Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(-self.0)
    }
}

impl Neg for &Real {
    type Output = Real;
    fn neg(self) -> Real {
        Real(Float::with_val(self.prec(), -&self.0))
    }
}
