//! Literal `[n, k, d]` claims for the narrow-sense code `C(q, n, δ, 1)` and
//! the even-like code `C(q, n, δ+1, 0)`, for downstream comparison against
//! constructed codes.

use serde::Serialize;

use super::{binary_top_two, delta1_m3, dim_for, family_length, FormulaError};
use crate::arith;

/// The families with parameter claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ClaimFamily {
    /// m = 3 at the largest leader δ1, by `q mod 3`.
    LargestLeaderM3,
    /// `δ = l q^((m-1)/2) + 1` for m = 3, 5 or odd m > 5.
    Dimension,
    /// q = 2, `m ≡ 0 (mod 3)`.
    BinaryZeroMod3,
    /// q = 2, `m ≡ 1 (mod 3)`.
    BinaryOneMod3,
    /// q = 2, `m ≡ 2 (mod 3)`.
    BinaryTwoMod3,
}

/// Which designed distance a claim is asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum DesignChoice {
    Delta1,
    Delta2,
    /// An explicit δ in `[δ2 + 1, δ1]` (binary families).
    Designed(u64),
    /// The multiplier l of `δ = l q^((m-1)/2) + 1`.
    Ell(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "d", rename_all = "kebab-case")]
pub enum DistanceClaim {
    Exact(u64),
    AtLeast(u64),
}

impl DistanceClaim {
    pub fn value(self) -> u64 {
        match self {
            DistanceClaim::Exact(d) | DistanceClaim::AtLeast(d) => d,
        }
    }

    /// Whether a true minimum distance `d` is consistent with the claim.
    pub fn admits(self, d: u64) -> bool {
        match self {
            DistanceClaim::Exact(c) => d == c,
            DistanceClaim::AtLeast(c) => d >= c,
        }
    }
}

impl std::fmt::Display for DistanceClaim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DistanceClaim::Exact(d) => write!(f, "{d}"),
            DistanceClaim::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CodeClaim {
    pub n: u64,
    pub k: u64,
    pub d: DistanceClaim,
}

impl std::fmt::Display for CodeClaim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}, {}]", self.n, self.k, self.d)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TheoremClaim {
    pub family: ClaimFamily,
    pub q: u64,
    pub m: u32,
    pub delta: u64,
    pub narrow: CodeClaim,
    /// Absent when the narrow-sense code has dimension at most 1.
    pub even_like: Option<CodeClaim>,
}

/// The binary family for a given m.
pub fn binary_family_class(m: u32) -> ClaimFamily {
    match m % 3 {
        0 => ClaimFamily::BinaryZeroMod3,
        1 => ClaimFamily::BinaryOneMod3,
        _ => ClaimFamily::BinaryTwoMod3,
    }
}

fn violated(msg: String) -> FormulaError {
    FormulaError::HypothesisViolated(msg)
}

fn pair(n: u64, k: u64, d: DistanceClaim, k2: u64, d2: DistanceClaim) -> (CodeClaim, Option<CodeClaim>) {
    (CodeClaim { n, k, d }, Some(CodeClaim { n, k: k2, d: d2 }))
}

/// The stated parameters of both codes for the given family and choice.
pub fn theorem_code_params(
    family: ClaimFamily,
    q: u64,
    m: u32,
    choice: DesignChoice,
) -> Result<TheoremClaim, FormulaError> {
    use DistanceClaim::{AtLeast, Exact};
    let n = family_length(q, m).map_err(|e| violated(e.to_string()))?;
    let (delta, narrow, even_like) = match family {
        ClaimFamily::LargestLeaderM3 => {
            if m != 3 || choice != DesignChoice::Delta1 {
                return Err(violated("the largest-leader family needs m = 3 and δ = δ1".into()));
            }
            let d1 = delta1_m3(q).map_err(|e| violated(e.to_string()))?;
            let (narrow, even) = match q % 3 {
                0 => pair(n, 7, AtLeast((q * q - 2 * q) / 3), 6, AtLeast((2 * q * q - 4 * q) / 3)),
                1 => pair(n, 7, AtLeast((q * q - 3 * q + 2) / 3), 6, AtLeast((2 * q * q - 6 * q + 4) / 3)),
                _ => pair(n, 3, Exact((q * q - q + 1) / 3), 2, Exact((2 * q * q - 2 * q + 2) / 3)),
            };
            (d1, narrow, even)
        }
        ClaimFamily::Dimension => {
            let DesignChoice::Ell(ell) = choice else {
                return Err(violated("the dimension family takes l".into()));
            };
            let r = dim_for(q, m, ell).map_err(|e| violated(e.to_string()))?;
            if r.dim < 1 {
                return Err(violated(format!("formula dimension {} is not positive", r.dim)));
            }
            let k = r.dim as u64;
            let narrow = CodeClaim { n, k, d: AtLeast(r.delta) };
            let even = (k > 1).then_some(CodeClaim { n, k: k - 1, d: AtLeast(2 * r.delta) });
            (r.delta, narrow, even)
        }
        binary => {
            if q != 2 {
                return Err(violated(format!("binary family needs q = 2, got {q}")));
            }
            if binary_family_class(m) != binary {
                return Err(violated(format!("m={m} is in the wrong class mod 3")));
            }
            let top = binary_top_two(m).map_err(|e| violated(e.to_string()))?;
            let Some((d2, _)) = top.delta2 else {
                return Err(violated(format!("no second-largest leader is stated for m={m}")));
            };
            let d1 = top.delta1.0;
            let half = arith::pow(2, m - 1);
            let full = 2 * half;
            let mm = m as u64;
            let first_part = |delta: u64| -> Result<(u64, CodeClaim, Option<CodeClaim>), FormulaError> {
                if delta <= d2 || delta > d1 {
                    return Err(violated(format!("δ={delta} must lie in [{}, {d1}]", d2 + 1)));
                }
                let (narrow, even) = match binary {
                    ClaimFamily::BinaryZeroMod3 => pair(n, 3, Exact((full + 1) / 9), 2, Exact((2 * full + 2) / 9)),
                    ClaimFamily::BinaryOneMod3 => pair(n, 2 * mm + 1, AtLeast((half - 1) / 9), 2 * mm, AtLeast((full - 2) / 9)),
                    _ => pair(n, 2 * mm + 1, AtLeast((half - 7) / 9), 2 * mm, AtLeast((full - 14) / 9)),
                };
                Ok((delta, narrow, even))
            };
            match choice {
                DesignChoice::Delta1 => first_part(d1)?,
                DesignChoice::Designed(delta) => first_part(delta)?,
                DesignChoice::Delta2 => {
                    let (narrow, even) = match (binary, m) {
                        (ClaimFamily::BinaryZeroMod3, _) => {
                            pair(n, 2 * mm + 3, AtLeast((half - 31) / 9), 2 * mm + 2, AtLeast((full - 62) / 9))
                        }
                        (ClaimFamily::BinaryOneMod3, 7) => pair(n, 29, AtLeast(3), 28, AtLeast(6)),
                        (ClaimFamily::BinaryOneMod3, _) => {
                            pair(n, 4 * mm + 1, AtLeast((half - 127) / 9), 4 * mm, AtLeast((full - 254) / 9))
                        }
                        _ => pair(n, 4 * mm + 1, AtLeast((half - 25) / 9), 4 * mm, AtLeast((full - 50) / 9)),
                    };
                    (d2, narrow, even)
                }
                DesignChoice::Ell(_) => return Err(violated("binary families take δ1, δ2 or δ".into())),
            }
        }
    };
    Ok(TheoremClaim {
        family,
        q,
        m,
        delta,
        narrow,
        even_like,
    })
}

/// Stated parameters for `C(q, n, δ, b)` when it belongs to one of the
/// families above: narrow-sense (b = 1), or the even-like subcode (b = 0,
/// designed distance one more than the narrow-sense code's).
pub fn claim_for(q: u64, n: u64, delta: u64, b: u64) -> Option<(TheoremClaim, CodeClaim)> {
    let base = match b {
        1 => delta,
        0 => delta.checked_sub(1)?,
        _ => return None,
    };
    let m = (3..64).step_by(2).find(|&m| family_length(q, m).ok() == Some(n))?;
    let mut candidates = Vec::new();
    if m == 3 {
        candidates.push((ClaimFamily::LargestLeaderM3, DesignChoice::Delta1));
    }
    if q == 2 {
        let f = binary_family_class(m);
        candidates.extend([(f, DesignChoice::Delta2), (f, DesignChoice::Designed(base))]);
    }
    candidates.extend((2..q).map(|ell| (ClaimFamily::Dimension, DesignChoice::Ell(ell))));
    candidates.into_iter().find_map(|(family, choice)| {
        let t = theorem_code_params(family, q, m, choice).ok().filter(|t| t.delta == base)?;
        let c = if b == 1 { Some(t.narrow) } else { t.even_like }?;
        Some((t, c))
    })
}
