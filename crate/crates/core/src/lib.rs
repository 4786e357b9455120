//! Li coefficients of the Riemann zeta function from finite zero tables,
//! computed to a chosen decimal precision by several equivalent formulas.
//!
//! ```
//! use licoef::{li, numerics::PrecisionContext, zeros::ZeroCatalog};
//!
//! let ctx = PrecisionContext::new(30).unwrap();
//! let cat = ZeroCatalog::bundled();
//! let v = li::lambda_catalog(&cat, 1, li::Method::DirectKeiper, &ctx).unwrap();
//! assert_eq!(v.value.to_sig_string(6), "0.0199849");
//! ```

pub mod analysis;
pub mod error;
pub mod li;
pub mod numerics;
pub mod zeros;

pub use error::{Error, Result};
