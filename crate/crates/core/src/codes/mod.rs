//! BCH codes `C(q, n, δ, b)` with defining set `C_b ∪ ... ∪ C_(b+δ-2)`.

mod cyclic;
mod distance;
mod small;

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::cosets::{self, is_coset_leader, CosetError, CosetParams};
use crate::formulas::DistanceClaim;
use crate::gf::GfError;

pub use cyclic::{generator_polynomial, is_lcd, BchCode, CyclicCode, Extension, LcdReport};
pub use distance::{dual_min_distance, enumerate_min_weight, min_distance, Distance, DistanceSource, DEFAULT_BUDGET};

/// Largest n for which defining sets are materialized element by element.
pub const MATERIALIZE_CAP: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("invalid code parameters: {0}")]
    InvalidSpec(String),
    #[error("GF({q}^{r}) is too large to build")]
    FieldTooLarge { q: u64, r: u64 },
    #[error("the defining set is not closed under negation")]
    NotNegationClosed,
    #[error("n={0} is too large to materialize the defining set")]
    TooLargeToMaterialize(u64),
    #[error("n={n} is not of the form (q^m+1)/N for q={q}")]
    WrongLengthFamily { q: u64, n: u64 },
    #[error("no generator polynomial is available")]
    NoGenerator,
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Gf(#[from] GfError),
}

/// `(q, n, δ, b)` with `gcd(q, n) = 1`, q a prime power and `2 <= δ <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct BchSpec {
    pub q: u64,
    pub n: u64,
    pub delta: u64,
    pub b: u64,
}

impl BchSpec {
    pub fn new(q: u64, n: u64, delta: u64, b: u64) -> Result<BchSpec, CodeError> {
        if crate::arith::prime_power(q).is_none() {
            return Err(CodeError::InvalidSpec(format!("q={q} is not a prime power")));
        }
        if n < 2 || crate::arith::gcd(q, n) != 1 {
            return Err(CodeError::InvalidSpec(format!("need n >= 2 and gcd(q, n) = 1, got q={q}, n={n}")));
        }
        if delta < 2 || delta > n {
            return Err(CodeError::InvalidSpec(format!("δ={delta} must lie in [2, {n}]")));
        }
        Ok(BchSpec { q, n, delta, b })
    }

    /// Narrow-sense `C(q, n, δ, 1)`.
    pub fn narrow(q: u64, n: u64, delta: u64) -> Result<BchSpec, CodeError> {
        BchSpec::new(q, n, delta, 1)
    }

    /// The even-like subcode `C(q, n, δ+1, 0)` of `C(q, n, δ, 1)`.
    pub fn even_like(q: u64, n: u64, delta: u64) -> Result<BchSpec, CodeError> {
        if delta + 1 > n {
            return Err(CodeError::InvalidSpec(format!("δ+1={} exceeds n={n}", delta + 1)));
        }
        BchSpec::new(q, n, delta + 1, 0)
    }

    pub fn params(&self) -> Result<CosetParams, CodeError> {
        Ok(CosetParams::new(self.q, self.n)?)
    }
}

/// A union of q-cosets modulo n, stored by leader.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DefiningSet {
    pub q: u64,
    pub n: u64,
    /// `(leader, size)` sorted by leader.
    pub leaders: Vec<(u64, u64)>,
    pub total_size: u64,
    /// The sorted elements, present when `n <= MATERIALIZE_CAP`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<u64>>,
}

impl DefiningSet {
    /// Builds the set from `(leader, size)` pairs (duplicates ignored).
    pub fn from_leaders(params: &CosetParams, leaders: impl IntoIterator<Item = (u64, u64)>) -> DefiningSet {
        let map: BTreeMap<u64, u64> = leaders.into_iter().collect();
        let leaders: Vec<(u64, u64)> = map.into_iter().collect();
        let total_size = leaders.iter().map(|&(_, s)| s).sum();
        let elements = (params.n() <= MATERIALIZE_CAP).then(|| {
            let mut v: Vec<u64> = leaders
                .iter()
                .flat_map(|&(l, _)| cosets::coset_of(l, params).expect("leader below n"))
                .collect();
            v.sort_unstable();
            v
        });
        DefiningSet {
            q: params.q(),
            n: params.n(),
            leaders,
            total_size,
            elements,
        }
    }

    pub fn params(&self) -> CosetParams {
        CosetParams::new(self.q, self.n).expect("validated on construction")
    }

    pub fn contains(&self, i: u64) -> bool {
        let i = i % self.n;
        match &self.elements {
            Some(e) => e.binary_search(&i).is_ok(),
            None => {
                let l = cosets::leader_of(i, &self.params());
                self.leaders.binary_search_by_key(&l, |&(x, _)| x).is_ok()
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.leaders.is_empty()
    }

    /// Whether `-T = T`.
    pub fn is_negation_closed(&self) -> bool {
        let p = self.params();
        self.leaders.iter().all(|&(l, _)| {
            let neg = (self.n - l) % self.n;
            let nl = cosets::leader_of(neg, &p);
            self.leaders.binary_search_by_key(&nl, |&(x, _)| x).is_ok()
        })
    }

    fn membership(&self) -> Result<Vec<bool>, CodeError> {
        let elements = self.elements.as_ref().ok_or(CodeError::TooLargeToMaterialize(self.n))?;
        let mut mask = vec![false; self.n as usize];
        for &e in elements {
            mask[e as usize] = true;
        }
        Ok(mask)
    }
}

/// `T = C_b ∪ ... ∪ C_(b+δ-2)`, one orbit walk per residue.
pub fn defining_set(spec: &BchSpec) -> Result<DefiningSet, CodeError> {
    let params = spec.params()?;
    let mut leaders = BTreeMap::new();
    for i in 0..spec.delta - 1 {
        let x = (spec.b + i) % spec.n;
        let v = is_coset_leader(x, &params)?;
        leaders.insert(v.leader, v.size);
    }
    Ok(DefiningSet::from_leaders(&params, leaders))
}

/// `n - |T|`.
pub fn bch_dimension(spec: &BchSpec) -> Result<u64, CodeError> {
    Ok(spec.n - defining_set(spec)?.total_size)
}

/// One more than the longest cyclic run of consecutive residues in T.
pub fn bch_bound(ds: &DefiningSet) -> Result<u64, CodeError> {
    let mask = ds.membership()?;
    let n = mask.len();
    if mask.iter().all(|&x| x) {
        return Ok(n as u64 + 1);
    }
    let start = mask.iter().position(|&x| !x).expect("some residue is absent");
    let (mut best, mut run) = (0usize, 0usize);
    for i in 1..=n {
        if mask[(start + i) % n] {
            run += 1;
            best = best.max(run);
        } else {
            run = 0;
        }
    }
    Ok(best as u64 + 1)
}

/// `Z_n \ (-T)`, the defining set of the dual code, for any T.
pub fn dual_of(ds: &DefiningSet) -> Result<DefiningSet, CodeError> {
    let params = ds.params();
    let partition = cosets::coset_partition(&params)?;
    let leaders = partition.leaders.iter().copied().filter(|&(l, _)| {
        let neg = (ds.n - l) % ds.n;
        !ds.contains(neg)
    });
    Ok(DefiningSet::from_leaders(&params, leaders.collect::<Vec<_>>()))
}

/// `Z_n \ T`, valid when `-T = T`.
pub fn dual_defining_set(ds: &DefiningSet) -> Result<DefiningSet, CodeError> {
    if !ds.is_negation_closed() {
        return Err(CodeError::NotNegationClosed);
    }
    dual_of(ds)
}

/// Dimension and distance claim of `C(q, n, δ+1, 0)` for n dividing `q^m + 1`.
pub fn even_like_params(q: u64, n: u64, delta: u64) -> Result<(u64, DistanceClaim), CodeError> {
    let spec = BchSpec::even_like(q, n, delta)?;
    if !cosets::minus_one_is_power(&spec.params()?) {
        return Err(CodeError::WrongLengthFamily { q, n });
    }
    let dim = bch_dimension(&spec)?;
    let claim = if n % delta == 0 {
        DistanceClaim::Exact(2 * delta)
    } else {
        DistanceClaim::AtLeast(2 * delta)
    };
    Ok((dim, claim))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(q: u64, n: u64, d: u64, b: u64) -> BchSpec {
        BchSpec::new(q, n, d, b).unwrap()
    }

    #[test]
    fn defining_set_examples() {
        let ds = defining_set(&spec(3, 28, 2, 1)).unwrap();
        assert_eq!(ds.leaders, vec![(1, 6)]);
        assert_eq!(ds.elements.as_deref(), Some(&[1, 3, 9, 19, 25, 27][..]));
        let ds = defining_set(&spec(3, 28, 28, 1)).unwrap();
        assert_eq!(ds.total_size, 27);
        let ds = defining_set(&spec(2, 171, 57, 1)).unwrap();
        assert_eq!(ds.total_size, 168);
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(bch_dimension(&spec(5, 21, 7, 1)).unwrap(), 3);
        assert_eq!(bch_dimension(&spec(5, 21, 8, 0)).unwrap(), 2);
        assert_eq!(bch_dimension(&spec(3, 28, 2, 1)).unwrap(), 22);
    }

    #[test]
    fn spec_validation() {
        assert!(BchSpec::new(6, 7, 2, 1).is_err());
        assert!(BchSpec::new(3, 27, 2, 1).is_err());
        assert!(BchSpec::new(3, 28, 29, 1).is_err());
        assert!(BchSpec::new(3, 28, 1, 1).is_err());
    }

    #[test]
    fn bch_bound_examples() {
        let p = CosetParams::new(2, 7).unwrap();
        let ds = DefiningSet::from_leaders(&p, [(1, 3)]);
        // {1, 2, 4}: longest run is {1, 2}
        assert_eq!(bch_bound(&ds).unwrap(), 3);
        let ds = defining_set(&spec(3, 28, 5, 1)).unwrap();
        assert!(bch_bound(&ds).unwrap() >= 5);
        let ds = defining_set(&spec(3, 28, 6, 0)).unwrap();
        assert!(bch_bound(&ds).unwrap() >= 10);
        let ds = defining_set(&spec(3, 28, 28, 1)).unwrap();
        assert_eq!(bch_bound(&ds).unwrap(), 28);
    }

    #[test]
    fn dual_examples() {
        let full = defining_set(&spec(3, 28, 28, 1)).unwrap();
        let dual = dual_defining_set(&full).unwrap();
        assert_eq!(dual.leaders, vec![(0, 1)]);
        let ds = defining_set(&spec(3, 28, 2, 1)).unwrap();
        assert_eq!(dual_defining_set(&ds).unwrap().total_size, 22);
        let ds = defining_set(&spec(3, 28, 5, 1)).unwrap();
        let dual = dual_defining_set(&ds).unwrap();
        assert_eq!(dual.total_size, 28 - 18);
        let hamming = defining_set(&spec(2, 7, 3, 1)).unwrap();
        assert_eq!(dual_defining_set(&hamming), Err(CodeError::NotNegationClosed));
        assert_eq!(dual_of(&hamming).unwrap().leaders, vec![(0, 1), (1, 3)]);
    }

    #[test]
    fn even_like_examples() {
        assert_eq!(even_like_params(5, 21, 7).unwrap(), (2, DistanceClaim::Exact(14)));
        assert_eq!(even_like_params(2, 171, 57).unwrap(), (2, DistanceClaim::Exact(114)));
        assert_eq!(even_like_params(3, 28, 5).unwrap().1, DistanceClaim::AtLeast(10));
        assert!(matches!(even_like_params(2, 7, 2), Err(CodeError::WrongLengthFamily { .. })));
    }
}
