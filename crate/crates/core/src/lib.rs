//! BCH codes of lengths `(q^m+1)/(q+1)` and `q^m+1`.
//!
//! The crate is layered:
//!
//! * [`gf`]: finite fields GF(p^k) and polynomials over them.
//! * [`cosets`]: q-cyclotomic cosets modulo n; the brute-force oracle.
//! * [`formulas`]: closed-form coset-leader catalogs, largest leaders,
//!   dimension formulas and dual-distance bounds.
//! * [`codes`]: BCH code construction, duals, LCD checks and minimum distance.
//! * [`verify`]: the sweep that checks every closed form against the oracle.

pub(crate) mod arith;
pub mod codes;
pub mod cosets;
pub mod formulas;
pub mod gf;
pub mod report;
pub mod verify;

pub use codes::{BchCode, BchSpec, CodeError, DefiningSet, Distance, DistanceSource};
pub use cosets::{CosetError, CosetParams, CosetPartition, LeaderVerdict};
pub use formulas::{DimensionFormulaResult, DualBoundReport, FormulaError};
pub use gf::{Field, FieldElement, GfError, Poly};
