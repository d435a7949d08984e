use serde::Serialize;

use super::{family_length, FormulaError};
use crate::arith;
use crate::cosets::{is_coset_leader, CosetParams};

/// `true` unless `a` is the one non-leader in `[1, q^((m-1)/2)]`, namely
/// `(q^((m+1)/2) - (-1)^((m+1)/2)) / (q+1)`.
pub fn small_range_leader(q: u64, m: u32, a: u64) -> Result<bool, FormulaError> {
    if m < 3 || m % 2 == 0 {
        return Err(FormulaError::OutOfStatedRange(format!("m={m} must be odd and >= 3")));
    }
    let h = (m - 1) / 2;
    let top = arith::checked_pow(q, h + 1)
        .ok_or_else(|| FormulaError::OutOfStatedRange(format!("q^{} overflows", h + 1)))?;
    let bound = top / q;
    if q < 2 || a == 0 || a > bound || a % q == 0 {
        return Err(FormulaError::OutOfStatedRange(format!(
            "a={a} must lie in [1, {bound}] and not be a multiple of q={q}"
        )));
    }
    let exception = if (h + 1) % 2 == 1 { (top + 1) / (q + 1) } else { (top - 1) / (q + 1) };
    Ok(a != exception)
}

/// Size of the coset of a leader `a` in `[1, q^((m+1)/2)]` (`[1, q^2-q]`
/// when `m = 3`): `2m` apart from three listed exceptions.
pub fn coset_size_rule(q: u64, m: u32, a: u64) -> Result<u64, FormulaError> {
    if (q, m) == (2, 3) {
        return Err(FormulaError::OutOfStatedRange("(q, m) = (2, 3) is excluded".into()));
    }
    let n = family_length(q, m)?;
    if m < 3 {
        return Err(FormulaError::OutOfStatedRange(format!("m={m} must be >= 3")));
    }
    let bound = if m == 3 {
        q * q - q
    } else {
        arith::checked_pow(q, (m + 1) / 2)
            .ok_or_else(|| FormulaError::OutOfStatedRange("q^((m+1)/2) overflows".into()))?
    };
    if a == 0 || a > bound {
        return Err(FormulaError::OutOfStatedRange(format!("a={a} must lie in [1, {bound}]")));
    }
    let params = CosetParams::new(q, n)?;
    if !is_coset_leader(a, &params)?.is_leader {
        return Err(FormulaError::NotALeader { a, n });
    }
    let size = if m == 3 && q % 3 == 2 && a == (q * q - q + 1) / 3 {
        2
    } else if q == 2 && m == 9 && a == 19 {
        6
    } else if q == 4 && m == 5 && a == 41 {
        2
    } else {
        2 * m as u64
    };
    Ok(size)
}

/// Largest coset leader modulo `q^2 - q + 1`, by `q mod 3`.
pub fn delta1_m3(q: u64) -> Result<u64, FormulaError> {
    if q < 3 {
        return Err(FormulaError::DegenerateQ(q));
    }
    Ok(match q % 3 {
        0 => (q * q - 2 * q) / 3,
        1 => (q * q - 3 * q + 2) / 3,
        _ => (q * q - q + 1) / 3,
    })
}

/// The two largest binary coset leaders modulo `(2^m + 1)/3`, with sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TopTwo {
    pub delta1: (u64, u64),
    pub delta2: Option<(u64, u64)>,
}

/// Closed forms selected by `m mod 3`, including the small cases m = 3, 5, 7.
pub fn binary_top_two(m: u32) -> Result<TopTwo, FormulaError> {
    if m % 2 == 0 {
        return Err(FormulaError::EvenM(m));
    }
    if !(3..=61).contains(&m) {
        return Err(FormulaError::OutOfStatedRange(format!("m={m} must lie in [3, 61]")));
    }
    let two_m = 2 * m as u64;
    let half = 1u64 << (m - 1);
    let top = match (m % 3, m) {
        (0, 3) => TopTwo { delta1: (1, 2), delta2: None },
        (0, _) => TopTwo {
            delta1: (((1u64 << m) + 1) / 9, 2),
            delta2: Some(((half - 31) / 9, two_m)),
        },
        (1, 7) => TopTwo { delta1: (7, 14), delta2: Some((3, 14)) },
        (1, _) => TopTwo {
            delta1: ((half - 1) / 9, two_m),
            delta2: Some(((half - 127) / 9, two_m)),
        },
        (_, 5) => TopTwo { delta1: (1, 10), delta2: None },
        _ => TopTwo {
            delta1: ((half - 7) / 9, two_m),
            delta2: Some(((half - 25) / 9, two_m)),
        },
    };
    Ok(top)
}
