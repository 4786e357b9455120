//! Arbitrary-precision scalars, constants, Chebyshev evaluation and
//! deterministic summation. Arithmetic is delegated to MPFR through `rug`.

mod chebyshev;
mod complex;
mod constants;
mod context;
mod real;
mod sum;

pub use chebyshev::{chebyshev_t, chebyshev_t_all};
pub use complex::Complex;
pub use constants::{
    corollary_constant, euler_gamma, log_four_pi, EULER_GAMMA_LITERAL_DIGITS, MAX_EULER_DIGITS,
};
pub use context::{PrecisionContext, Rounding, DEFAULT_DIGITS, GUARD_BITS, MIN_DIGITS};
pub use real::Real;
pub use sum::{pairwise_sum, Scalar};
