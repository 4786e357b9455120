use std::fmt;

use super::{check_series, second_differences, SecondDifference};
use crate::error::Result;
use crate::li::LiValue;
use crate::numerics::{PrecisionContext, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flag {
    /// `delta2` exceeds the truncation caveat.
    Ok,
    /// The caveat band contains zero, so the sign of the full sum is open.
    Inconclusive,
    /// `delta2 <= 0` by more than the caveat.
    Violation,
}

impl fmt::Display for Flag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flag::Ok => "OK",
            Flag::Inconclusive => "INCONCLUSIVE",
            Flag::Violation => "VIOLATION",
        })
    }
}

#[derive(Debug, Clone)]
pub struct ScanEntry {
    pub diff: SecondDifference,
    /// Bound on how far the omitted zeros can move `delta2`: zero for
    /// synthetic multisets, `2 tail_bound(T, n)` for catalogs, `None` when
    /// `T` is below the tail bound's domain.
    pub caveat: Option<Real>,
    pub flag: Flag,
}

#[derive(Debug, Clone)]
pub struct ConjectureReport {
    pub entries: Vec<ScanEntry>,
    /// Smallest `delta2` and where it occurs.
    pub min_delta2: (u32, Real),
    /// Smallest `bound - |delta2|` and where it occurs.
    pub min_margin: (u32, Real),
    pub violations: Vec<u32>,
    pub inconclusive: Vec<u32>,
}

impl ConjectureReport {
    pub fn has_violation(&self) -> bool {
        !self.violations.is_empty()
    }

    pub fn verdict(&self) -> String {
        let total = self.entries.len();
        let first = self.entries.first().map_or(0, |e| e.diff.n);
        let last = self.entries.last().map_or(0, |e| e.diff.n);
        if self.has_violation() {
            let ns: Vec<String> = self.violations.iter().map(u32::to_string).collect();
            format!(
                "VIOLATION at n = {} ({} of {total} entries)",
                ns.join(", "),
                self.violations.len()
            )
        } else if self.inconclusive.is_empty() {
            format!("no violation for n = {first}..{last}; all {total} entries positive")
        } else {
            format!(
                "no violation for n = {first}..{last}; {} of {total} entries inconclusive within the truncation caveat",
                self.inconclusive.len()
            )
        }
    }
}

fn classify(delta2: &Real, caveat: Option<&Real>) -> Flag {
    match caveat {
        None => Flag::Inconclusive,
        Some(c) if delta2 > c => Flag::Ok,
        Some(c) if (delta2 + c).is_positive() => Flag::Inconclusive,
        Some(_) => Flag::Violation,
    }
}

/// Scans `lambda_n > 2 lambda_{n-1} - lambda_{n-2}` over a series
/// `lambda_1..lambda_N`, `N >= 3`.
pub fn scan_conjecture(values: &[LiValue], ctx: &PrecisionContext) -> Result<ConjectureReport> {
    check_series(values, 3, ctx)?;
    let diffs = second_differences(values, ctx)?;
    let entries: Vec<ScanEntry> = diffs
        .into_iter()
        .map(|diff| {
            let caveat = values[diff.n as usize - 1]
                .tail
                .as_ref()
                .map(|t| t.mul_pow2(1));
            let flag = classify(&diff.delta2, caveat.as_ref());
            ScanEntry { diff, caveat, flag }
        })
        .collect();
    let pick = |key: fn(&ScanEntry) -> &Real| {
        entries
            .iter()
            .map(|e| (e.diff.n, key(e).clone()))
            .reduce(|a, b| if b.1 < a.1 { b } else { a })
            .expect("at least one entry")
    };
    let min_delta2 = pick(|e| &e.diff.delta2);
    let min_margin = pick(|e| &e.diff.margin);
    let with_flag = |f: Flag| -> Vec<u32> {
        entries
            .iter()
            .filter(|e| e.flag == f)
            .map(|e| e.diff.n)
            .collect()
    };
    Ok(ConjectureReport {
        violations: with_flag(Flag::Violation),
        inconclusive: with_flag(Flag::Inconclusive),
        entries,
        min_delta2,
        min_margin,
    })
}
