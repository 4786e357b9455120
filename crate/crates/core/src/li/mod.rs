//! Li coefficients `lambda_n = sum_rho [1 - (1 - 1/rho)^n]` by five
//! equivalent routes, plus residual checks of the increment identities.

mod engine;
mod terms;
mod verify;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::numerics::Real;

pub use engine::{lambda, lambda_catalog, lambda_series, lambda_synthetic, thm1_sum, thm2_sum};
pub use terms::{
    t_of_rho, term_keiper, term_thm1, term_thm2, theta_of_gamma, x_of_rho, x_of_rho_via_t,
};
pub use verify::{
    verify_chebyshev_link, verify_thm1, verify_thm2, Residual, Verifier, RESIDUAL_SLACK,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// `sum (1 - t^n)`.
    DirectKeiper,
    /// `sum (1 - T_n(x))`.
    Chebyshev,
    /// `-1/2 sum (t^{n/2} - t^{-n/2})^2`.
    SinSquared,
    /// `lambda_{n-1} + sum (1/rho) t^{n-1}`.
    RecurrenceT1,
    /// `2 lambda_{n-1} - lambda_{n-2} - sum (1/rho^2) t^{n-2}`.
    RecurrenceT2,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::DirectKeiper,
        Method::Chebyshev,
        Method::SinSquared,
        Method::RecurrenceT1,
        Method::RecurrenceT2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::DirectKeiper => "direct",
            Method::Chebyshev => "chebyshev",
            Method::SinSquared => "sin-squared",
            Method::RecurrenceT1 => "recurrence-t1",
            Method::RecurrenceT2 => "recurrence-t2",
        }
    }

    /// Needs the multiset to be closed under `rho -> 1 - rho`.
    pub fn needs_symmetry(self) -> bool {
        matches!(self, Method::Chebyshev | Method::SinSquared)
    }

    /// Smallest `n` for which a single value can be requested.
    pub fn min_n(self) -> u32 {
        match self {
            Method::RecurrenceT1 => 2,
            Method::RecurrenceT2 => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Method::ALL.iter().map(|m| m.name()).collect();
                format!("unknown method {s:?}; expected one of {}", names.join(", "))
            })
    }
}

/// One computed coefficient with its provenance.
#[derive(Debug, Clone, PartialEq)]
pub struct LiValue {
    pub n: u32,
    pub value: Real,
    /// Imaginary part of the sum; exactly zero for catalogs and for
    /// conjugate-closed multisets up to rounding.
    pub imag: Real,
    pub method: Method,
    pub zeros_used: usize,
    /// Largest ordinate used; `None` for synthetic multisets.
    pub max_gamma: Option<Real>,
    /// Truncation bound for the omitted zeros: zero for synthetic multisets,
    /// `None` when the catalog height is below the bound's domain.
    pub tail: Option<Real>,
    pub ctx_digits: u32,
    pub source: String,
}
