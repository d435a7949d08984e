//! Cut points and dual-distance bounds for ternary codes of length `3^m + 1`.

use serde::Serialize;

use super::FormulaError;
use crate::arith;

/// Where the defining set of `C(3, 3^m+1, δ, 1)` stops short of `(3^m+1)/2`
/// on either side, and the resulting bound `I2 - I1` on the dual distance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DualBoundReport {
    pub m: u32,
    pub delta: u64,
    /// `None` only at `δ = (3^m+1)/2`.
    pub level: Option<u32>,
    pub i1: u64,
    pub i2: u64,
    pub bound: u64,
}

fn pow3(m: u32) -> Result<u64, FormulaError> {
    if !(2..=39).contains(&m) {
        return Err(FormulaError::OutOfStatedRange(format!("m={m} must lie in [2, 39]")));
    }
    Ok(arith::pow(3, m))
}

/// Position of δ: `Some((l, true))` when `δ = (3^l+1)/2`, `Some((l, false))`
/// when `(3^l+3)/2 <= δ <= (3^(l+1)-1)/2`, for `1 <= l <= m-1`.
fn level_of(m: u32, delta: u64) -> Option<(u32, bool)> {
    (1..m).find_map(|l| {
        let p = arith::pow(3, l);
        if delta == (p + 1) / 2 {
            Some((l, true))
        } else if delta >= (p + 3) / 2 && delta <= (3 * p - 1) / 2 {
            Some((l, false))
        } else {
            None
        }
    })
}

/// `I1`, `I2 = n - I1` and `I2 - I1` for `2 <= δ <= (3^m+1)/2`.
pub fn ternary_dual_cuts(m: u32, delta: u64) -> Result<DualBoundReport, FormulaError> {
    let p = pow3(m)?;
    let n = p + 1;
    let half = (p + 1) / 2;
    if delta < 2 || delta > half {
        return Err(FormulaError::OutOfStatedRange(format!("δ={delta} must lie in [2, {half}]")));
    }
    let (level, i1) = if delta == half {
        (None, (p - 1) / 2)
    } else {
        let (l, exact) = level_of(m, delta).expect("levels cover [2, (3^m-1)/2]");
        let base = (p - arith::pow(3, m - l)) / 2;
        (Some(l), if exact { base } else { base + 1 })
    };
    let i2 = n - i1;
    Ok(DualBoundReport {
        m,
        delta,
        level,
        i1,
        i2,
        bound: i2 - i1,
    })
}

/// Lower bound on `d(C(3, 3^m+1, δ, 1)^⊥)` for `2 <= δ <= 3^m + 1`.
pub fn ternary_dual_bound(m: u32, delta: u64) -> Result<u64, FormulaError> {
    let p = pow3(m)?;
    let n = p + 1;
    if delta < 2 || delta > n {
        return Err(FormulaError::OutOfStatedRange(format!("δ={delta} must lie in [2, {n}]")));
    }
    if delta >= (p + 1) / 2 {
        return Ok(2);
    }
    let (l, exact) = level_of(m, delta).expect("levels cover [2, (3^m-1)/2]");
    let r = arith::pow(3, m - l);
    Ok(if exact { r + 1 } else { r - 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cuts_examples() {
        let r = ternary_dual_cuts(3, 2).unwrap();
        assert_eq!((r.level, r.i1, r.i2, r.bound), (Some(1), 9, 19, 10));
        let r = ternary_dual_cuts(3, 5).unwrap();
        assert_eq!((r.level, r.i1, r.i2, r.bound), (Some(2), 12, 16, 4));
        let r = ternary_dual_cuts(3, 14).unwrap();
        assert_eq!((r.level, r.i1, r.i2, r.bound), (None, 13, 15, 2));
        assert!(ternary_dual_cuts(3, 15).is_err());
        assert!(ternary_dual_cuts(1, 2).is_err());
    }

    #[test]
    fn bound_examples() {
        assert_eq!(ternary_dual_bound(3, 2).unwrap(), 10);
        assert_eq!(ternary_dual_bound(3, 3).unwrap(), 8);
        assert_eq!(ternary_dual_bound(3, 4).unwrap(), 8);
        assert_eq!(ternary_dual_bound(3, 5).unwrap(), 4);
        assert_eq!(ternary_dual_bound(3, 28).unwrap(), 2);
        assert_eq!(ternary_dual_bound(4, 5).unwrap(), 10);
        assert!(ternary_dual_bound(3, 29).is_err());
    }

    #[test]
    fn bound_agrees_with_cuts() {
        for m in 2..=6 {
            let half = (arith::pow(3, m) + 1) / 2;
            for d in 2..=half {
                assert_eq!(ternary_dual_cuts(m, d).unwrap().bound, ternary_dual_bound(m, d).unwrap());
            }
        }
    }
}
