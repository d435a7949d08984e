//! Rows comparing stated parameters with constructed codes, and the ternary
//! dual-distance table.

use std::collections::HashMap;

use serde::Serialize;

use crate::codes::{min_distance, BchCode, BchSpec, CodeError, Distance, Extension};
use crate::formulas::{ternary_dual_bound, CodeClaim, DistanceClaim};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    /// The measurement proves the claim.
    Match,
    /// The measurement is only a range, and the claim is inside it.
    BoundConsistent,
    Mismatch,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Match => "match",
            Verdict::BoundConsistent => "bound-consistent",
            Verdict::Mismatch => "MISMATCH",
        })
    }
}

/// Measured parameters of one code, optionally against a claim.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportRow {
    pub q: u64,
    pub m: Option<u32>,
    pub delta: u64,
    pub b: u64,
    pub n: u64,
    pub k: u64,
    pub distance: Distance,
    pub claimed: Option<CodeClaim>,
    pub verdict: Option<Verdict>,
}

impl ReportRow {
    pub fn new(spec: &BchSpec, m: Option<u32>, k: u64, distance: Distance, claimed: Option<CodeClaim>) -> ReportRow {
        let verdict = claimed.map(|c| compare(&c, spec.n, k, &distance));
        ReportRow {
            q: spec.q,
            m,
            delta: spec.delta,
            b: spec.b,
            n: spec.n,
            k,
            distance,
            claimed,
            verdict,
        }
    }

    /// `[n, k, d]` with d written as a range when not exact.
    pub fn params(&self) -> String {
        format!("[{}, {}, {}]", self.n, self.k, self.distance)
    }
}

/// Judges a measured `[n, k, distance]` against a claim.
pub fn compare(claim: &CodeClaim, n: u64, k: u64, distance: &Distance) -> Verdict {
    if claim.n != n || claim.k != k {
        return Verdict::Mismatch;
    }
    let (Some(lo), Some(hi)) = (distance.lower(), distance.upper()) else {
        return Verdict::Mismatch;
    };
    match claim.d {
        DistanceClaim::Exact(c) if lo == hi => verdict(lo == c),
        DistanceClaim::Exact(c) => {
            if (lo..=hi).contains(&c) {
                Verdict::BoundConsistent
            } else {
                Verdict::Mismatch
            }
        }
        DistanceClaim::AtLeast(c) => {
            if lo >= c {
                Verdict::Match
            } else if hi < c {
                Verdict::Mismatch
            } else {
                Verdict::BoundConsistent
            }
        }
    }
}

fn verdict(ok: bool) -> Verdict {
    if ok {
        Verdict::Match
    } else {
        Verdict::Mismatch
    }
}

/// Builds `spec`, measures it and compares with `claim`.
pub fn measure(spec: &BchSpec, m: Option<u32>, claim: Option<CodeClaim>, budget: u64) -> Result<ReportRow, CodeError> {
    let code = BchCode::new(*spec)?;
    let d = min_distance(&code.code, budget)?;
    Ok(ReportRow::new(spec, m, code.dim(), d, claim))
}

fn same_value(a: &Distance, b: &Distance) -> bool {
    (a.lower(), a.upper()) == (b.lower(), b.upper())
}

/// One row of the ternary table: designed distances `delta_lo..=delta_hi`
/// share the dual-distance bound and the measured dual distance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub delta_lo: u64,
    pub delta_hi: u64,
    pub bound: u64,
    pub actual: Distance,
}

impl Table1Row {
    pub fn delta_label(&self) -> String {
        if self.delta_lo == self.delta_hi {
            self.delta_lo.to_string()
        } else {
            format!("{}~{}", self.delta_lo, self.delta_hi)
        }
    }

    /// The bound never exceeds what is known of the true distance.
    pub fn consistent(&self) -> bool {
        self.actual.upper().is_some_and(|u| self.bound <= u)
    }
}

/// Lower bound vs measured minimum distance of `C(3, 3^m+1, δ, 1)^⊥` for
/// every `2 <= δ <= 3^m + 1`, with runs of equal rows merged.
pub fn table1(m: u32, budget: u64) -> Result<Vec<Table1Row>, CodeError> {
    let n = 3u64
        .checked_pow(m)
        .filter(|&p| m >= 2 && p < (1 << 20))
        .ok_or_else(|| CodeError::InvalidSpec(format!("m={m} out of range for the table")))?
        + 1;
    let ext = Extension::new(3, n)?;
    let mut by_size: HashMap<u64, Distance> = HashMap::new();
    let mut rows: Vec<Table1Row> = Vec::new();
    for delta in 2..=n {
        let spec = BchSpec::narrow(3, n, delta)?;
        let code = BchCode::with_extension(spec, Some(&ext))?;
        let size = code.defining_set().total_size;
        let actual = match by_size.get(&size) {
            Some(d) => *d,
            None => {
                let d = min_distance(&code.code.dual()?, budget)?;
                by_size.insert(size, d);
                d
            }
        };
        let bound = ternary_dual_bound(m, delta).map_err(|e| CodeError::InvalidSpec(e.to_string()))?;
        match rows.last_mut() {
            Some(last) if last.bound == bound && same_value(&last.actual, &actual) => {
                last.delta_hi = delta;
            }
            _ => rows.push(Table1Row {
                delta_lo: delta,
                delta_hi: delta,
                bound,
                actual,
            }),
        }
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::DistanceSource;

    fn exact(d: u64) -> Distance {
        Distance::Exact { d, source: DistanceSource::Enumerated }
    }

    #[test]
    fn verdicts() {
        let claim = CodeClaim { n: 43, k: 29, d: DistanceClaim::AtLeast(3) };
        assert_eq!(compare(&claim, 43, 29, &exact(6)), Verdict::Match);
        assert_eq!(compare(&claim, 43, 28, &exact(6)), Verdict::Mismatch);
        assert_eq!(compare(&claim, 43, 29, &Distance::Bounds { lower: 2, upper: 8 }), Verdict::BoundConsistent);
        assert_eq!(compare(&claim, 43, 29, &Distance::Bounds { lower: 1, upper: 2 }), Verdict::Mismatch);
        let claim = CodeClaim { n: 21, k: 3, d: DistanceClaim::Exact(7) };
        assert_eq!(compare(&claim, 21, 3, &exact(7)), Verdict::Match);
        assert_eq!(compare(&claim, 21, 3, &exact(8)), Verdict::Mismatch);
        assert_eq!(compare(&claim, 21, 3, &Distance::Bounds { lower: 5, upper: 9 }), Verdict::BoundConsistent);
    }
}
