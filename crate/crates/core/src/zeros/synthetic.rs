use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::numerics::Complex;

/// Finite multiset of complex "zeros" used to exercise the identities on
/// data where every quantity is known exactly.
#[derive(Debug, Clone)]
pub struct SyntheticZeroSet {
    rhos: Vec<Complex>,
    symmetric: bool,
    conjugate_closed: bool,
}

impl SyntheticZeroSet {
    /// Takes the multiset as given and records which closures it has.
    pub fn new(rhos: Vec<Complex>) -> Result<Self> {
        for rho in &rhos {
            check_element(rho)?;
        }
        let symmetric = same_multiset(
            &rhos,
            &rhos
                .iter()
                .map(Complex::one_minus_exact)
                .collect::<Vec<_>>(),
        );
        let conjugate_closed =
            same_multiset(&rhos, &rhos.iter().map(Complex::conj).collect::<Vec<_>>());
        Ok(Self {
            rhos,
            symmetric,
            conjugate_closed,
        })
    }

    pub fn rhos(&self) -> &[Complex] {
        &self.rhos
    }

    pub fn len(&self) -> usize {
        self.rhos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rhos.is_empty()
    }

    /// Closed under `rho -> 1 - rho`.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    /// Closed under complex conjugation.
    pub fn is_conjugate_closed(&self) -> bool {
        self.conjugate_closed
    }

    /// Every element has real part exactly 1/2.
    pub fn on_critical_line(&self) -> bool {
        self.rhos
            .iter()
            .all(|r| r.re.mul_pow2(1).one_minus_exact().is_zero())
    }
}

fn check_element(rho: &Complex) -> Result<()> {
    if rho.is_zero() || rho.is_one() {
        return Err(Error::InvalidElement(rho.to_sig_string(20)));
    }
    Ok(())
}

fn cmp_complex(a: &Complex, b: &Complex) -> Ordering {
    a.re.partial_cmp(&b.re)
        .unwrap_or(Ordering::Equal)
        .then_with(|| a.im.partial_cmp(&b.im).unwrap_or(Ordering::Equal))
}

fn sorted(values: &[Complex]) -> Vec<&Complex> {
    let mut v: Vec<&Complex> = values.iter().collect();
    v.sort_by(|a, b| cmp_complex(a, b));
    v
}

fn same_multiset(a: &[Complex], b: &[Complex]) -> bool {
    a.len() == b.len() && sorted(a).iter().zip(sorted(b)).all(|(x, y)| *x == y)
}

/// Multiset union of `rhos` with its image under `rho -> 1 - rho` (and
/// under conjugation when `conjugate` is set). Each value ends up with the
/// largest multiplicity found in its orbit, so fixed points such as
/// `rho = 1/2` and already-closed inputs are not duplicated.
pub fn close_under_symmetry(rhos: &[Complex], conjugate: bool) -> Result<SyntheticZeroSet> {
    for rho in rhos {
        check_element(rho)?;
    }
    let mut counts: Vec<(Complex, usize)> = Vec::new();
    for rho in rhos {
        match counts.iter_mut().find(|(v, _)| v == rho) {
            Some((_, c)) => *c += 1,
            None => counts.push((rho.clone(), 1)),
        }
    }
    let orbit = |z: &Complex| -> Vec<Complex> {
        let mut out = vec![z.clone(), z.one_minus_exact()];
        if conjugate {
            out.push(z.conj());
            out.push(z.conj().one_minus_exact());
        }
        out
    };
    let mut closed: Vec<(Complex, usize)> = Vec::new();
    for (z, _) in &counts {
        let members = orbit(z);
        let multiplicity = members
            .iter()
            .map(|m| counts.iter().find(|(v, _)| v == m).map_or(0, |(_, c)| *c))
            .max()
            .unwrap_or(0);
        for m in members {
            match closed.iter_mut().find(|(v, _)| *v == m) {
                Some((_, c)) => *c = (*c).max(multiplicity),
                None => closed.push((m, multiplicity)),
            }
        }
    }
    let rhos = closed
        .into_iter()
        .flat_map(|(v, c)| std::iter::repeat_n(v, c))
        .collect();
    SyntheticZeroSet::new(rhos)
}
