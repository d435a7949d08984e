//! Closed-form catalogs of the non-leaders in `[q^h + 1, (q-1) q^h]` modulo
//! `n = (q^m+1)/(q+1)`, `h = (m-1)/2`.
//!
//! Each clause is an [`ExceptionRule`] that generates its members from digit
//! ranges, so a disagreement with the orbit-walk oracle names the clause.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{family_length, FormulaError};
use crate::arith;

/// One exception clause of a catalog.
#[derive(Clone, Copy)]
pub struct ExceptionRule {
    pub id: &'static str,
    /// The digit constraints, written out.
    pub parameters: &'static str,
    generate: fn(i64, u32) -> Vec<i64>,
}

impl std::fmt::Debug for ExceptionRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} ({})", self.id, self.parameters)
    }
}

impl ExceptionRule {
    /// All values the clause describes for alphabet size `q` and `h = (m-1)/2`,
    /// without range filtering.
    pub fn members(&self, q: u64, h: u32) -> Vec<i64> {
        (self.generate)(q as i64, h)
    }
}

fn span(lo: i64, hi: i64) -> std::ops::RangeInclusive<i64> {
    lo..=hi
}

fn ipow(q: i64, e: u32) -> i64 {
    q.pow(e)
}

// ---- m = 3: a = a1 q + a0 ----

const M3_RULES: [ExceptionRule; 4] = [
    ExceptionRule {
        id: "m3-1",
        parameters: "ceil(q/3) <= a1 <= q-2, 1 <= a0 <= q-1",
        generate: |q, _| {
            let mut v = Vec::new();
            for a1 in span((q + 2) / 3, q - 2) {
                for a0 in span(1, q - 1) {
                    v.push(a1 * q + a0);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "m3-2",
        parameters: "1 <= a1 <= floor((q-1)/3), 1 <= a0 <= a1",
        generate: |q, _| {
            let mut v = Vec::new();
            for a1 in span(1, (q - 1) / 3) {
                for a0 in span(1, a1) {
                    v.push(a1 * q + a0);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "m3-3",
        parameters: "1 <= a1 <= floor((q-3)/3), q-1-2a1 <= a0 <= q-1",
        generate: |q, _| {
            let mut v = Vec::new();
            for a1 in span(1, (q - 3).div_euclid(3)) {
                for a0 in span(q - 1 - 2 * a1, q - 1) {
                    v.push(a1 * q + a0);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "m3-4",
        parameters: "a1 = floor((q-1)/3), q-2a1 <= a0 <= q-1",
        generate: |q, _| {
            let a1 = (q - 1) / 3;
            span(q - 2 * a1, q - 1).map(|a0| a1 * q + a0).collect()
        },
    },
];

// ---- m = 5: a = a2 q^2 + a1 q + a0 ----

const M5_SMALL_RULES: [ExceptionRule; 2] = [
    ExceptionRule {
        id: "m5-q3",
        parameters: "q = 3: a in {11, 13, 14, 16, 17}",
        generate: |q, _| if q == 3 { vec![11, 13, 14, 16, 17] } else { Vec::new() },
    },
    ExceptionRule {
        id: "m5-q4",
        parameters: "q = 4: a in {19, 25, 26, 27, 29, 35, 37, 38, 39, 42, 43, 45, 46, 47}",
        generate: |q, _| {
            if q == 4 {
                vec![19, 25, 26, 27, 29, 35, 37, 38, 39, 42, 43, 45, 46, 47]
            } else {
                Vec::new()
            }
        },
    },
];

const M5_RULES: [ExceptionRule; 10] = [
    ExceptionRule {
        id: "m5-a",
        parameters: "a in {q^2+q-1, (q-2)q^2+q-1}",
        generate: |q, _| vec![q * q + q - 1, (q - 2) * q * q + q - 1],
    },
    ExceptionRule {
        id: "m5-b",
        parameters: "a = (q^3+q^2+q)/2 - 1, q even",
        generate: |q, _| {
            if q % 2 == 0 {
                vec![(q * q * q + q * q + q) / 2 - 1]
            } else {
                Vec::new()
            }
        },
    },
    ExceptionRule {
        id: "m5-c",
        parameters: "a = a2 q^2 + (q-1-a2) q + 2a2+1, 1 <= a2 <= min(floor(q/2)-1, q-3)",
        generate: |q, _| {
            span(1, (q / 2 - 1).min(q - 3))
                .map(|a2| a2 * q * q + (q - 1 - a2) * q + 2 * a2 + 1)
                .collect()
        },
    },
    ExceptionRule {
        id: "m5-d",
        parameters: "a = a2 q^2 + (q-1-a2) q + a0, 1 <= a2 <= q-3, 1 <= a0 <= min(2a2, q-1)",
        generate: |q, _| {
            let mut v = Vec::new();
            for a2 in span(1, q - 3) {
                for a0 in span(1, (2 * a2).min(q - 1)) {
                    v.push(a2 * q * q + (q - 1 - a2) * q + a0);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "m5-e",
        parameters: "a = a2 q^2 + (q-a2) q + a0, ceil((q+1)/2) <= a2 <= q-3, 1 <= a0 <= 2a2-q",
        generate: |q, _| {
            let mut v = Vec::new();
            for a2 in span((q + 2) / 2, q - 3) {
                for a0 in span(1, 2 * a2 - q) {
                    v.push(a2 * q * q + (q - a2) * q + a0);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "m5-f",
        parameters: "a = a2 q^2 + (a1+1) q - a1, 1 <= a2 <= q-3, q-1-a2 <= a1 <= q-1",
        generate: |q, _| {
            let mut v = Vec::new();
            for a2 in span(1, q - 3) {
                for a1 in span(q - 1 - a2, q - 1) {
                    v.push(a2 * q * q + (a1 + 1) * q - a1);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "m5-g",
        parameters: "a = a2 q^2 + (a2+1) q - a2 - 1, ceil((q+1)/2) <= a2 <= q-3",
        generate: |q, _| {
            span((q + 2) / 2, q - 3)
                .map(|a2| a2 * q * q + (a2 + 1) * q - a2 - 1)
                .collect()
        },
    },
    ExceptionRule {
        id: "m5-h",
        parameters: "a = a2 q^2 + a2 q - a2, 2 <= a2 <= q-3",
        generate: |q, _| span(2, q - 3).map(|a2| a2 * q * q + a2 * q - a2).collect(),
    },
    ExceptionRule {
        id: "m5-i",
        parameters: "a = a2 q^2 + (a1+1) q - a1 - 1, 2 <= a2 <= q-3, 0 <= a1 <= a2-2",
        generate: |q, _| {
            let mut v = Vec::new();
            for a2 in span(2, q - 3) {
                for a1 in span(0, a2 - 2) {
                    v.push(a2 * q * q + (a1 + 1) * q - a1 - 1);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "m5-j",
        parameters: "a = (q-2) q^2 + a1 q + a0, 1 <= a1, a0 <= q-1",
        generate: |q, _| {
            let mut v = Vec::new();
            for a1 in span(1, q - 1) {
                for a0 in span(1, q - 1) {
                    v.push((q - 2) * q * q + a1 * q + a0);
                }
            }
            v
        },
    },
];

// ---- m > 5, h = (m-1)/2 odd ----

const H_ODD_RULES: [ExceptionRule; 5] = [
    ExceptionRule {
        id: "hodd-1",
        parameters: "a = (ah+1)(q^(h+1)+q)/(q+1) - q + a0, 1 <= ah <= q-2, max(1, q-1-2ah) <= a0 <= q-1",
        generate: |q, h| {
            let base = (ipow(q, h + 1) + q) / (q + 1);
            let mut v = Vec::new();
            for ah in span(1, q - 2) {
                for a0 in span(1.max(q - 1 - 2 * ah), q - 1) {
                    v.push((ah + 1) * base - q + a0);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "hodd-2",
        parameters: "a = (ah+1)(q^(h+1)+q)/(q+1) - 2q + a0, ceil((q+1)/2) <= ah <= q-2, 2q-2ah <= a0 <= q-1",
        generate: |q, h| {
            let base = (ipow(q, h + 1) + q) / (q + 1);
            let mut v = Vec::new();
            for ah in span((q + 2) / 2, q - 2) {
                for a0 in span(2 * q - 2 * ah, q - 1) {
                    v.push((ah + 1) * base - 2 * q + a0);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "hodd-3",
        parameters: "a = ah q^h + (ah+1)(q^h+1)/(q+1), ceil((q-1)/2) <= ah <= q-2",
        generate: |q, h| {
            let b = (ipow(q, h) + 1) / (q + 1);
            span(q / 2, q - 2).map(|ah| ah * ipow(q, h) + (ah + 1) * b).collect()
        },
    },
    ExceptionRule {
        id: "hodd-4",
        parameters: "a = ah q^h + (ah1+1)(q^h+1)/(q+1), 0 <= ah1 < ah <= q-2",
        generate: |q, h| {
            let b = (ipow(q, h) + 1) / (q + 1);
            let mut v = Vec::new();
            for ah in span(1, q - 2) {
                for ah1 in span(0, ah - 1) {
                    v.push(ah * ipow(q, h) + (ah1 + 1) * b);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "hodd-5",
        parameters: "a = ah q^h + (ah1+1)(q^h+1)/(q+1) - 1, 1 <= ah <= q-2, q-ah <= ah1 <= q-1",
        generate: |q, h| {
            let b = (ipow(q, h) + 1) / (q + 1);
            let mut v = Vec::new();
            for ah in span(1, q - 2) {
                for ah1 in span(q - ah, q - 1) {
                    v.push(ah * ipow(q, h) + (ah1 + 1) * b - 1);
                }
            }
            v
        },
    },
];

// ---- m > 5, h = (m-1)/2 even ----

const H_EVEN_RULES: [ExceptionRule; 5] = [
    ExceptionRule {
        id: "heven-1",
        parameters: "a = (ah+1)(q^(h+1)-q)/(q+1) + a0, 1 <= ah <= q-2, 1 <= a0 <= min(2ah+1, q-1)",
        generate: |q, h| {
            let base = (ipow(q, h + 1) - q) / (q + 1);
            let mut v = Vec::new();
            for ah in span(1, q - 2) {
                for a0 in span(1, (2 * ah + 1).min(q - 1)) {
                    v.push((ah + 1) * base + a0);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "heven-2",
        parameters: "a = (ah+1)(q^(h+1)-q)/(q+1) + q + a0, ceil((q+1)/2) <= ah <= q-2, 1 <= a0 <= 2ah-q",
        generate: |q, h| {
            let base = (ipow(q, h + 1) - q) / (q + 1);
            let mut v = Vec::new();
            for ah in span((q + 2) / 2, q - 2) {
                for a0 in span(1, 2 * ah - q) {
                    v.push((ah + 1) * base + q + a0);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "heven-3",
        parameters: "a = ah q^h + (ah+1)(q^h-1)/(q+1), ceil(q/2) <= ah <= q-2",
        generate: |q, h| {
            let b = (ipow(q, h) - 1) / (q + 1);
            span((q + 1) / 2, q - 2).map(|ah| ah * ipow(q, h) + (ah + 1) * b).collect()
        },
    },
    ExceptionRule {
        id: "heven-4",
        parameters: "a = ah q^h + (ah1+1)(q^h-1)/(q+1), 0 <= ah1 < ah <= q-2",
        generate: |q, h| {
            let b = (ipow(q, h) - 1) / (q + 1);
            let mut v = Vec::new();
            for ah in span(1, q - 2) {
                for ah1 in span(0, ah - 1) {
                    v.push(ah * ipow(q, h) + (ah1 + 1) * b);
                }
            }
            v
        },
    },
    ExceptionRule {
        id: "heven-5",
        parameters: "a = ah q^h + (ah1+1)(q^h-1)/(q+1) + 1, 1 <= ah <= q-2, q-1-ah <= ah1 <= q-1",
        generate: |q, h| {
            let b = (ipow(q, h) - 1) / (q + 1);
            let mut v = Vec::new();
            for ah in span(1, q - 2) {
                for ah1 in span(q - 1 - ah, q - 1) {
                    v.push(ah * ipow(q, h) + (ah1 + 1) * b + 1);
                }
            }
            v
        },
    },
];

/// Which clause set applies to `(q, m)`.
pub fn rules_for(q: u64, m: u32) -> &'static [ExceptionRule] {
    let h = (m - 1) / 2;
    match m {
        3 => &M3_RULES,
        5 if q == 3 => &M5_SMALL_RULES[..1],
        5 if q == 4 => &M5_SMALL_RULES[1..],
        5 => &M5_RULES,
        _ if h % 2 == 1 => &H_ODD_RULES,
        _ => &H_EVEN_RULES,
    }
}

/// Result of looking `a` up in a catalog.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CatalogVerdict {
    pub a: u64,
    pub is_leader: bool,
    /// Every clause that lists `a` (clauses may overlap).
    pub fired: Vec<&'static str>,
}

/// All exception clauses for one `(q, m)`, expanded and indexed by value.
#[derive(Debug, Clone)]
pub struct LeaderCatalog {
    q: u64,
    m: u32,
    n: u64,
    lo: u64,
    hi: u64,
    rules: &'static [ExceptionRule],
    exceptions: BTreeMap<u64, Vec<&'static str>>,
    /// Generated values that fall outside the stated range or are multiples of q.
    stray: Vec<(&'static str, i64)>,
}

impl LeaderCatalog {
    /// Catalog for `n = (q^m+1)/(q+1)`, `m >= 3` odd.
    pub fn new(q: u64, m: u32) -> Result<LeaderCatalog, FormulaError> {
        if q < 2 || m < 3 || m % 2 == 0 {
            return Err(FormulaError::OutOfStatedRange(format!(
                "catalog needs q >= 2 and odd m >= 3, got q={q}, m={m}"
            )));
        }
        let n = family_length(q, m)?;
        let h = (m - 1) / 2;
        let qh = arith::checked_pow(q, h)
            .filter(|&x| x < (1u64 << 40))
            .ok_or_else(|| FormulaError::OutOfStatedRange(format!("q^h too large for q={q}, m={m}")))?;
        let lo = qh + 1;
        let hi = (q - 1) * qh;
        let rules = rules_for(q, m);
        let mut exceptions: BTreeMap<u64, Vec<&'static str>> = BTreeMap::new();
        let mut stray = Vec::new();
        for rule in rules {
            for v in rule.members(q, h) {
                if v < lo as i64 || v > hi as i64 || v as u64 % q == 0 {
                    stray.push((rule.id, v));
                    continue;
                }
                let ids = exceptions.entry(v as u64).or_default();
                if !ids.contains(&rule.id) {
                    ids.push(rule.id);
                }
            }
        }
        Ok(LeaderCatalog {
            q,
            m,
            n,
            lo,
            hi,
            rules,
            exceptions,
            stray,
        })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// The stated range `[q^h + 1, (q-1) q^h]`.
    pub fn range(&self) -> (u64, u64) {
        (self.lo, self.hi)
    }

    pub fn rules(&self) -> &'static [ExceptionRule] {
        self.rules
    }

    /// Members generated outside the range or divisible by q.
    pub fn stray(&self) -> &[(&'static str, i64)] {
        &self.stray
    }

    /// The non-leaders the catalog lists, ascending.
    pub fn exceptions(&self) -> impl Iterator<Item = (u64, &[&'static str])> {
        self.exceptions.iter().map(|(&a, ids)| (a, ids.as_slice()))
    }

    /// Classifies `a`; it must lie in the stated range and be prime to q.
    pub fn classify(&self, a: u64) -> Result<CatalogVerdict, FormulaError> {
        if a < self.lo || a > self.hi || a % self.q == 0 {
            return Err(FormulaError::OutOfStatedRange(format!(
                "a={a} must lie in [{}, {}] and not be a multiple of q={}",
                self.lo, self.hi, self.q
            )));
        }
        let fired = self.exceptions.get(&a).cloned().unwrap_or_default();
        Ok(CatalogVerdict {
            a,
            is_leader: fired.is_empty(),
            fired,
        })
    }

    /// Number of non-leaders in `[lo, bound]` listed by the catalog.
    pub fn exceptions_up_to(&self, bound: u64) -> usize {
        self.exceptions.range(..=bound).count()
    }
}

fn classify(q: u64, m: u32, a: u64) -> Result<CatalogVerdict, FormulaError> {
    LeaderCatalog::new(q, m)?.classify(a)
}

/// Leader test for `m = 3` and `q+1 <= a <= (q-1)q`, `q ∤ a`.
pub fn is_leader_m3(q: u64, a: u64) -> Result<bool, FormulaError> {
    Ok(classify(q, 3, a)?.is_leader)
}

/// Leader test for `m = 5` and `q^2+1 <= a <= (q-1)q^2`, `q ∤ a`.
pub fn is_leader_m5(q: u64, a: u64) -> Result<bool, FormulaError> {
    Ok(classify(q, 5, a)?.is_leader)
}

/// Leader test for odd `m > 5` and `q^h+1 <= a <= (q-1)q^h`, `q ∤ a`.
pub fn is_leader_general(q: u64, m: u32, a: u64) -> Result<bool, FormulaError> {
    if m <= 5 || m % 2 == 0 {
        return Err(FormulaError::OutOfStatedRange(format!("m={m} must be odd and > 5")));
    }
    Ok(classify(q, m, a)?.is_leader)
}
