use super::sum::Scalar;
use super::PrecisionContext;

/// `T_n(z)` by the three-term recurrence `T_{k+1} = 2 z T_k - T_{k-1}`.
pub fn chebyshev_t<S: Scalar>(n: u32, z: &S, ctx: &PrecisionContext) -> S {
    let mut prev = S::one(ctx);
    if n == 0 {
        return prev;
    }
    let mut cur = z.clone();
    let two_z = z.double();
    for _ in 1..n {
        let next = two_z.mul(&cur).sub(&prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// `[T_0(z), ..., T_n(z)]`; entry `k` is bit-identical to `chebyshev_t(k, z)`.
pub fn chebyshev_t_all<S: Scalar>(n: u32, z: &S, ctx: &PrecisionContext) -> Vec<S> {
    let mut out = Vec::with_capacity(n as usize + 1);
    out.push(S::one(ctx));
    if n == 0 {
        return out;
    }
    out.push(z.clone());
    let two_z = z.double();
    for k in 1..n as usize {
        let next = two_z.mul(&out[k]).sub(&out[k - 1]);
        out.push(next);
    }
    out
}
