use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Bits carried beyond the requested decimal precision. Every operation
/// rounds to `bits()`, so results are good to the requested digits after
/// the round-off of long sums and recurrences.
pub const GUARD_BITS: u32 = 64;

/// Smallest accepted working precision, in decimal digits.
pub const MIN_DIGITS: u32 = 15;

/// Precision used when nothing else is configured.
pub const DEFAULT_DIGITS: u32 = 50;

const LOG2_10: f64 = std::f64::consts::LOG2_10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rounding {
    /// Round to nearest, ties to even.
    NearestEven,
}

/// Working precision and rounding policy for every arithmetic operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrecisionContext {
    digits: u32,
    rounding: Rounding,
}

impl PrecisionContext {
    pub fn new(digits: u32) -> Result<Self> {
        if digits < MIN_DIGITS {
            return Err(Error::PrecisionTooLow {
                digits,
                min: MIN_DIGITS,
            });
        }
        Ok(Self {
            digits,
            rounding: Rounding::NearestEven,
        })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn rounding(&self) -> Rounding {
        self.rounding
    }

    /// Binary mantissa width used for every value created under this context.
    pub fn bits(&self) -> u32 {
        (f64::from(self.digits) * LOG2_10).ceil() as u32 + GUARD_BITS
    }

    /// Round-off contract shared by the identity checks: `10^(slack - digits)`.
    pub fn tolerance(&self, slack: i32) -> crate::numerics::Real {
        crate::numerics::Real::pow10(slack - self.digits as i32, self)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self {
            digits: DEFAULT_DIGITS,
            rounding: Rounding::NearestEven,
        }
    }
}
