//! Closed forms for coset leaders, coset sizes, code dimensions and
//! dual-distance bounds.
//!
//! Every function enforces its stated range strictly and never extrapolates.
//! The [`crate::verify`] module checks each of them against the orbit-walk
//! oracle in [`crate::cosets`].

mod catalog;
mod claims;
mod dimension;
mod leaders;
mod ternary;

use thiserror::Error;

use crate::arith;
use crate::cosets::CosetError;

pub use catalog::{
    is_leader_general, is_leader_m3, is_leader_m5, rules_for, CatalogVerdict, ExceptionRule, LeaderCatalog,
};
pub use claims::{binary_family_class, claim_for, theorem_code_params, ClaimFamily, CodeClaim, DesignChoice, DistanceClaim, TheoremClaim};
pub use dimension::{dim_for, dim_general, dim_m3, dim_m5, DimensionFormulaResult};
pub use leaders::{binary_top_two, coset_size_rule, delta1_m3, small_range_leader, TopTwo};
pub use ternary::{ternary_dual_bound, ternary_dual_cuts, DualBoundReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("outside the stated range: {0}")]
    OutOfStatedRange(String),
    #[error("q={0} is degenerate for this formula")]
    DegenerateQ(u64),
    #[error("{a} is not a coset leader modulo {n}")]
    NotALeader { a: u64, n: u64 },
    #[error("{matched} branches matched for q={q}, m={m}, l={ell}")]
    BranchAmbiguity { q: u64, m: u32, ell: u64, matched: usize },
    #[error("m={0} must be odd")]
    EvenM(u32),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Coset(#[from] CosetError),
}

/// `n = (q^m + 1)/(q + 1)` for odd m, checked against overflow.
pub fn family_length(q: u64, m: u32) -> Result<u64, FormulaError> {
    if m % 2 == 0 {
        return Err(FormulaError::EvenM(m));
    }
    arith::checked_pow(q, m)
        .and_then(|x| x.checked_add(1))
        .filter(|&x| x < (1u64 << 63))
        .map(|x| x / (q + 1))
        .ok_or_else(|| FormulaError::OutOfStatedRange(format!("q^m too large for q={q}, m={m}")))
}

/// Picks the unique branch whose condition holds, in the order given.
fn select_branch<T: Copy>(
    q: u64,
    m: u32,
    ell: u64,
    branches: &[(bool, T)],
) -> Result<T, FormulaError> {
    let hits: Vec<T> = branches.iter().filter(|(c, _)| *c).map(|&(_, t)| t).collect();
    match hits.as_slice() {
        [one] => Ok(*one),
        [] => Err(FormulaError::OutOfStatedRange(format!(
            "no branch covers q={q}, m={m}, l={ell}"
        ))),
        _ => Err(FormulaError::BranchAmbiguity {
            q,
            m,
            ell,
            matched: hits.len(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_lengths() {
        assert_eq!(family_length(5, 3).unwrap(), 21);
        assert_eq!(family_length(3, 5).unwrap(), 61);
        assert_eq!(family_length(2, 7).unwrap(), 43);
        assert_eq!(family_length(3, 7).unwrap(), 547);
        assert_eq!(family_length(2, 4), Err(FormulaError::EvenM(4)));
        assert!(family_length(2, 63).is_err());
    }

    #[test]
    fn branch_selection() {
        assert_eq!(select_branch(3, 3, 2, &[(false, 1), (true, 2)]), Ok(2));
        assert!(matches!(
            select_branch(3, 3, 2, &[(true, 1), (true, 2)]),
            Err(FormulaError::BranchAmbiguity { matched: 2, .. })
        ));
        assert!(matches!(
            select_branch::<u8>(3, 3, 2, &[(false, 1)]),
            Err(FormulaError::OutOfStatedRange(_))
        ));
    }
}
