//! Deterministic pairwise reduction.
//!
//! The reduction tree depends only on the number of terms: the slice is
//! split at `len / 2` recursively. The two halves may run on different rayon
//! workers, but the shape of the tree and therefore every rounding step is
//! the same for any thread count.

use super::{Complex, PrecisionContext, Real};

/// Below this many terms a subtree is reduced on the current thread.
const PARALLEL_CUTOFF: usize = 256;

/// Values that can be reduced by [`pairwise_sum`] and fed to the Chebyshev
/// recurrence.
pub trait Scalar: Clone + Send + Sync {
    fn zero(ctx: &PrecisionContext) -> Self;
    fn one(ctx: &PrecisionContext) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn double(&self) -> Self;
}

impl Scalar for Real {
    fn zero(ctx: &PrecisionContext) -> Self {
        Real::zero(ctx)
    }
    fn one(ctx: &PrecisionContext) -> Self {
        Real::one(ctx)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn double(&self) -> Self {
        self.mul_pow2(1)
    }
}

impl Scalar for Complex {
    fn zero(ctx: &PrecisionContext) -> Self {
        Complex::zero(ctx)
    }
    fn one(ctx: &PrecisionContext) -> Self {
        Complex::one(ctx)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn double(&self) -> Self {
        Complex::new(self.re.mul_pow2(1), self.im.mul_pow2(1))
    }
}

/// Sums `terms` with a balanced binary tree over the given order.
pub fn pairwise_sum<S: Scalar>(terms: &[S], ctx: &PrecisionContext) -> S {
    match terms.len() {
        0 => S::zero(ctx),
        1 => terms[0].clone(),
        _ => reduce(terms),
    }
}

fn reduce<S: Scalar>(terms: &[S]) -> S {
    match terms.len() {
        1 => terms[0].clone(),
        2 => terms[0].add(&terms[1]),
        len => {
            let (left, right) = terms.split_at(len / 2);
            let (l, r) = if len >= PARALLEL_CUTOFF {
                rayon::join(|| reduce(left), || reduce(right))
            } else {
                (reduce(left), reduce(right))
            };
            l.add(&r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_small_sums() {
        let ctx = PrecisionContext::default();
        let empty: Vec<Real> = vec![];
        assert!(pairwise_sum(&empty, &ctx).is_zero());
        let v: Vec<Real> = [1, 2, 3].iter().map(|&k| Real::from_i64(k, &ctx)).collect();
        assert_eq!(pairwise_sum(&v, &ctx), Real::from_i64(6, &ctx));
    }

    #[test]
    fn reproducible_across_thread_counts() {
        let ctx = PrecisionContext::new(30).unwrap();
        let terms: Vec<Real> = (1..5000)
            .map(|k| {
                Real::one(&ctx)
                    .checked_div(&Real::from_i64(k * k + 7, &ctx))
                    .unwrap()
            })
            .collect();
        let reference = pairwise_sum(&terms, &ctx).to_sig_string(40);
        for threads in [1, 2, 4, 7] {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .unwrap();
            let s = pool.install(|| pairwise_sum(&terms, &ctx));
            assert_eq!(s.to_sig_string(40), reference);
        }
        assert_eq!(pairwise_sum(&terms, &ctx).to_sig_string(40), reference);
    }
}
