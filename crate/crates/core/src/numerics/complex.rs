use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{PrecisionContext, Real};
use crate::error::{Error, Result};

/// Complex number over [`Real`] parts.
#[derive(Clone, PartialEq)]
pub struct Complex {
    pub re: Real,
    pub im: Real,
}

impl Complex {
    pub fn new(re: Real, im: Real) -> Self {
        Self { re, im }
    }

    pub fn from_real(re: Real, ctx: &PrecisionContext) -> Self {
        Self {
            re,
            im: Real::zero(ctx),
        }
    }

    pub fn zero(ctx: &PrecisionContext) -> Self {
        Self::new(Real::zero(ctx), Real::zero(ctx))
    }

    pub fn one(ctx: &PrecisionContext) -> Self {
        Self::new(Real::one(ctx), Real::zero(ctx))
    }

    pub fn from_f64(re: f64, im: f64, ctx: &PrecisionContext) -> Result<Self> {
        Ok(Self::new(
            Real::from_f64(re, ctx)?,
            Real::from_f64(im, ctx)?,
        ))
    }

    pub fn round_to(&self, ctx: &PrecisionContext) -> Self {
        Self::new(self.re.round_to(ctx), self.im.round_to(ctx))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// Exactly one, as opposed to "close to one".
    pub fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.one_minus_exact().is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `1 - self` with both parts exact.
    pub fn one_minus_exact(&self) -> Self {
        Self::new(self.re.one_minus_exact(), -&self.im)
    }

    pub fn norm_sqr(&self) -> Real {
        self.re.square() + self.im.square()
    }

    pub fn abs(&self) -> Real {
        self.re.hypot(&self.im)
    }

    pub fn scale(&self, k: &Real) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    pub fn mul_i64(&self, k: i64) -> Self {
        Self::new(self.re.mul_i64(k), self.im.mul_i64(k))
    }

    pub fn square(&self) -> Self {
        let re = self.re.square() - self.im.square();
        let im = (&self.re * &self.im).mul_pow2(1);
        Self::new(re, im)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero("complex reciprocal"));
        }
        let d = self.norm_sqr();
        Ok(Self::new(
            self.re.checked_div(&d)?,
            (-&self.im).checked_div(&d)?,
        ))
    }

    pub fn checked_div(&self, rhs: &Complex) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero("complex division"));
        }
        let d = rhs.norm_sqr();
        let re = &self.re * &rhs.re + &self.im * &rhs.im;
        let im = &self.im * &rhs.re - &self.re * &rhs.im;
        Ok(Self::new(re.checked_div(&d)?, im.checked_div(&d)?))
    }

    /// `self^k` by binary exponentiation.
    pub fn powu(&self, mut k: u64, ctx: &PrecisionContext) -> Self {
        let mut acc = Complex::one(ctx);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// `self^k` for signed `k`; negative powers go through the reciprocal.
    pub fn powi(&self, k: i64, ctx: &PrecisionContext) -> Result<Self> {
        if k >= 0 {
            Ok(self.powu(k as u64, ctx))
        } else {
            Ok(self.recip()?.powu(k.unsigned_abs(), ctx))
        }
    }

    /// Principal square root (branch cut on the negative real axis).
    pub fn sqrt(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let r = self.abs();
        if !self.re.is_sign_negative() {
            let u = ((&r + &self.re).mul_pow2(-1)).sqrt()?;
            let v = self.im.checked_div(&u.mul_pow2(1))?;
            Ok(Self::new(u, v))
        } else {
            let mut v = ((&r - &self.re).mul_pow2(-1)).sqrt()?;
            if self.im.is_sign_negative() {
                v = -v;
            }
            let u = self.im.checked_div(&v.mul_pow2(1))?;
            Ok(Self::new(u, v))
        }
    }

    /// Parses `a`, `bi`, `a+bi`, `a-bi` (also `i`, `-i`).
    pub fn parse(literal: &str, ctx: &PrecisionContext) -> Result<Self> {
        let invalid = || Error::InvalidNumber {
            literal: literal.to_string(),
        };
        let s: String = literal.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(invalid());
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Self::from_real(Real::parse(&s, ctx)?, ctx));
        };
        // split at the last sign that is not part of an exponent
        let bytes = body.as_bytes();
        let split = (1..bytes.len()).rev().find(|&k| {
            (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E')
        });
        let (re_part, im_part) = match split {
            Some(k) => (&body[..k], &body[k..]),
            None => ("", body),
        };
        let im_text = match im_part {
            "" | "+" => "1",
            "-" => "-1",
            other => other,
        };
        let re = if re_part.is_empty() {
            Real::zero(ctx)
        } else {
            Real::parse(re_part, ctx).map_err(|_| invalid())?
        };
        let im = Real::parse(im_text, ctx).map_err(|_| invalid())?;
        Ok(Self::new(re, im))
    }

    pub fn to_sig_string(&self, sig: usize) -> String {
        let re = self.re.to_sig_string(sig);
        if self.im.is_zero() {
            return re;
        }
        let im = self.im.abs().to_sig_string(sig);
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        format!("{re}{sign}{im}i")
    }
}

impl fmt::Debug for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Complex({})", self.to_sig_string(30))
    }
}

impl Add<&Complex> for &Complex {
    type Output = Complex;
    fn add(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub<&Complex> for &Complex {
    type Output = Complex;
    fn sub(self, rhs: &Complex) -> Complex {
        Complex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul<&Complex> for &Complex {
    type Output = Complex;
    fn mul(self, rhs: &Complex) -> Complex {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        Complex::new(re, im)
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, rhs: Complex) -> Complex {
        &self + &rhs
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, rhs: Complex) -> Complex {
        &self - &rhs
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, rhs: Complex) -> Complex {
        &self * &rhs
    }
}

impl Neg for &Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-&self.re, -&self.im)
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        -&self
    }
}
