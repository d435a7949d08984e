//! q-cyclotomic cosets modulo n.
//!
//! Everything in this module is direct computation on orbits `{a q^t mod n}`
//! and serves as the oracle the closed forms in [`crate::formulas`] are
//! checked against. Modular products use 128-bit intermediates, so any
//! `n < 2^63` is accepted by the per-element routines; only
//! [`coset_partition`] materializes all of `Z_n`.

use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{self, mul_mod};

/// Largest modulus [`coset_partition`] will materialize.
pub const PARTITION_CAP: u64 = 10_000_000;

const MODULUS_LIMIT: u64 = 1 << 63;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CosetError {
    #[error("q={q} and n={n} are not coprime")]
    NotCoprime { q: u64, n: u64 },
    #[error("modulus {0} must satisfy 1 <= n < 2^63")]
    ModulusTooLarge(u64),
    #[error("{a} is outside [0, {bound})")]
    OutOfRange { a: u64, bound: u64 },
    #[error("n={n} exceeds the materialization cap {cap}")]
    TooLargeToMaterialize { n: u64, cap: u64 },
    #[error("N={divisor} does not divide q+1={q_plus_one}")]
    BadDivisor { divisor: u64, q_plus_one: u64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// `(q, n)` together with `ord_n(q)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CosetParams {
    q: u64,
    n: u64,
    ord: u64,
}

impl CosetParams {
    pub fn new(q: u64, n: u64) -> Result<CosetParams, CosetError> {
        let ord = multiplicative_order(q, n)?;
        Ok(CosetParams { q, n, ord })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn ord(&self) -> u64 {
        self.ord
    }

    fn check(&self, a: u64) -> Result<(), CosetError> {
        if a >= self.n {
            Err(CosetError::OutOfRange { a, bound: self.n })
        } else {
            Ok(())
        }
    }

    #[inline]
    fn step(&self, x: u64) -> u64 {
        mul_mod(x, self.q, self.n)
    }
}

/// Orbit-walk classification of a single residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LeaderVerdict {
    pub a: u64,
    pub is_leader: bool,
    pub leader: u64,
    pub size: u64,
}

/// The partition of `Z_n` into q-cosets, as `(leader, size)` sorted by leader.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetPartition {
    pub params: CosetParams,
    pub leaders: Vec<(u64, u64)>,
}

impl CosetPartition {
    pub fn is_leader(&self, a: u64) -> bool {
        self.leaders.binary_search_by_key(&a, |&(l, _)| l).is_ok()
    }

    pub fn size_of_leader(&self, a: u64) -> Option<u64> {
        self.leaders
            .binary_search_by_key(&a, |&(l, _)| l)
            .ok()
            .map(|i| self.leaders[i].1)
    }

    /// `|C_1 ∪ ... ∪ C_bound|`: every coset meeting `[1, bound]` has its
    /// leader in that interval.
    pub fn union_size_up_to(&self, bound: u64) -> u64 {
        self.leaders
            .iter()
            .filter(|&&(l, _)| l >= 1 && l <= bound)
            .map(|&(_, s)| s)
            .sum()
    }

    /// The `count` largest leaders, largest first.
    pub fn largest(&self, count: usize) -> Vec<(u64, u64)> {
        self.leaders.iter().rev().take(count).copied().collect()
    }
}

/// Least `t >= 1` with `q^t ≡ 1 (mod n)`.
pub fn multiplicative_order(q: u64, n: u64) -> Result<u64, CosetError> {
    if n == 0 || n >= MODULUS_LIMIT {
        return Err(CosetError::ModulusTooLarge(n));
    }
    if arith::gcd(q, n) != 1 {
        return Err(CosetError::NotCoprime { q, n });
    }
    if n == 1 {
        return Ok(1);
    }
    let q = q % n;
    let mut x = q;
    let mut t = 1u64;
    while x != 1 {
        x = mul_mod(x, q, n);
        t += 1;
    }
    Ok(t)
}

/// The full coset `C_a`, sorted.
pub fn coset_of(a: u64, p: &CosetParams) -> Result<Vec<u64>, CosetError> {
    p.check(a)?;
    let mut out = vec![a];
    let mut x = p.step(a);
    while x != a {
        out.push(x);
        x = p.step(x);
    }
    out.sort_unstable();
    Ok(out)
}

/// Walks the orbit of `a` once, tracking its minimum. O(ord) time, O(1) space.
pub fn is_coset_leader(a: u64, p: &CosetParams) -> Result<LeaderVerdict, CosetError> {
    p.check(a)?;
    Ok(walk(a, p))
}

#[inline]
fn walk(a: u64, p: &CosetParams) -> LeaderVerdict {
    let mut leader = a;
    let mut size = 1u64;
    let mut x = p.step(a);
    while x != a {
        leader = leader.min(x);
        size += 1;
        x = p.step(x);
    }
    LeaderVerdict {
        a,
        is_leader: leader == a,
        leader,
        size,
    }
}

/// Leader of `C_a` for any residue `a` (reduced mod n first).
pub fn leader_of(a: u64, p: &CosetParams) -> u64 {
    walk(a % p.n, p).leader
}

/// Sieve over `Z_n`: each unmarked residue is the minimum of its orbit.
pub fn coset_partition(p: &CosetParams) -> Result<CosetPartition, CosetError> {
    if p.n > PARTITION_CAP {
        return Err(CosetError::TooLargeToMaterialize {
            n: p.n,
            cap: PARTITION_CAP,
        });
    }
    let n = p.n as usize;
    let mut seen = vec![false; n];
    let mut leaders = Vec::new();
    for a in 0..n {
        if seen[a] {
            continue;
        }
        let mut size = 0u64;
        let mut x = a as u64;
        loop {
            seen[x as usize] = true;
            size += 1;
            x = p.step(x);
            if x == a as u64 {
                break;
            }
        }
        leaders.push((a as u64, size));
    }
    Ok(CosetPartition { params: *p, leaders })
}

/// Scans downward from `n-1`, returning the `count` largest leaders with
/// their coset sizes (fewer only if `Z_n` has fewer cosets).
pub fn largest_coset_leaders(p: &CosetParams, count: usize) -> Vec<(u64, u64)> {
    let mut out = Vec::with_capacity(count);
    let mut a = p.n;
    while out.len() < count && a > 0 {
        a -= 1;
        let v = walk(a, p);
        if v.is_leader {
            out.push((a, v.size));
        }
    }
    out
}

/// `gcd(l^u + 1, l^v - 1)` in closed form: 1 or 2 when `v/gcd(u,v)` is odd
/// (by the parity of `l`), and `l^gcd(u,v) + 1` when it is even.
pub fn gcd_power_plus_minus(l: u64, u: u64, v: u64) -> BigUint {
    let g = num_integer::gcd(u, v);
    if (v / g) % 2 == 1 {
        if l % 2 == 0 {
            BigUint::from(1u32)
        } else {
            BigUint::from(2u32)
        }
    } else {
        BigUint::from(l).pow(g as u32) + 1u32
    }
}

/// Both sides of the correspondence between leaders modulo `(q^m+1)/N` and
/// multiples of `N` modulo `q^m+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ScaledCorrespondence {
    pub small_is_leader: bool,
    pub big_is_leader: bool,
    pub small_size: u64,
    pub big_size: u64,
}

impl ScaledCorrespondence {
    pub fn agrees(&self) -> bool {
        self.small_is_leader == self.big_is_leader && self.small_size == self.big_size
    }
}

/// Measures whether `s` is a leader modulo `(q^m+1)/N` and `Ns` is a leader
/// modulo `q^m+1`, with both coset sizes.
pub fn scaled_leader_correspondence(
    s: u64,
    divisor: u64,
    q: u64,
    m: u32,
) -> Result<ScaledCorrespondence, CosetError> {
    if divisor == 0 || (q + 1) % divisor != 0 {
        return Err(CosetError::BadDivisor {
            divisor,
            q_plus_one: q + 1,
        });
    }
    let big_n = arith::checked_pow(q, m)
        .and_then(|x| x.checked_add(1))
        .filter(|&x| x < MODULUS_LIMIT)
        .ok_or(CosetError::ModulusTooLarge(u64::MAX))?;
    let small_n = big_n / divisor;
    if s == 0 || s >= small_n {
        return Err(CosetError::OutOfRange { a: s, bound: small_n });
    }
    let small = CosetParams::new(q, small_n)?;
    let big = CosetParams::new(q, big_n)?;
    let vs = walk(s, &small);
    let vb = walk(divisor * s, &big);
    Ok(ScaledCorrespondence {
        small_is_leader: vs.is_leader,
        big_is_leader: vb.is_leader,
        small_size: vs.size,
        big_size: vb.size,
    })
}

/// Canonical base-q digits of `a`, little-endian, exactly `width` of them.
pub fn q_adic_expansion(a: u64, q: u64, width: u32) -> Result<Vec<u64>, CosetError> {
    let bound = arith::checked_pow(q, width).unwrap_or(u64::MAX);
    if a >= bound {
        return Err(CosetError::OutOfRange { a, bound });
    }
    let mut out = Vec::with_capacity(width as usize);
    let mut x = a;
    for _ in 0..width {
        out.push(x % q);
        x /= q;
    }
    Ok(out)
}

/// Inverse of [`q_adic_expansion`].
pub fn q_adic_value(digits: &[u64], q: u64) -> u64 {
    digits.iter().rev().fold(0, |acc, &d| acc * q + d)
}

/// Number of maximal runs of length exactly two in the width-`m` binary
/// expansion of `s`. Requires `m` odd, `s` odd, `0 < s <= 2^(m-1) - 1` and no
/// run of three equal bits.
pub fn adjacent_pair_count(s: u64, m: u32) -> Result<u32, CosetError> {
    if m % 2 == 0 || m >= 63 {
        return Err(CosetError::PreconditionViolated(format!("m={m} must be odd and < 63")));
    }
    if s == 0 || s > (1u64 << (m - 1)) - 1 {
        return Err(CosetError::OutOfRange {
            a: s,
            bound: 1u64 << (m - 1),
        });
    }
    if s % 2 == 0 {
        return Err(CosetError::PreconditionViolated(format!("s={s} is even")));
    }
    let mut pairs = 0u32;
    let mut run = 1u32;
    for i in (0..m - 1).rev() {
        let cur = (s >> i) & 1;
        let prev = (s >> (i + 1)) & 1;
        if cur == prev {
            run += 1;
            if run >= 3 {
                return Err(CosetError::PreconditionViolated(format!(
                    "s={s} has a run of three equal bits"
                )));
            }
        } else {
            if run == 2 {
                pairs += 1;
            }
            run = 1;
        }
    }
    if run == 2 {
        pairs += 1;
    }
    Ok(pairs)
}

/// Whether `-1` is a power of `q` modulo `n`, i.e. `q^t ≡ -1` for some `t`.
pub fn minus_one_is_power(p: &CosetParams) -> bool {
    if p.n <= 2 {
        return true;
    }
    let target = p.n - 1;
    let mut x = 1 % p.n;
    for _ in 0..p.ord {
        if x == target {
            return true;
        }
        x = p.step(x);
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: u64, n: u64) -> CosetParams {
        CosetParams::new(q, n).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(multiplicative_order(7, 1).unwrap(), 1);
        assert_eq!(multiplicative_order(2, 3).unwrap(), 2);
        assert_eq!(multiplicative_order(5, 21).unwrap(), 6);
        assert_eq!(multiplicative_order(2, 43).unwrap(), 14);
        assert!(matches!(
            multiplicative_order(3, 21),
            Err(CosetError::NotCoprime { .. })
        ));
        assert!(matches!(
            multiplicative_order(3, 1 << 63),
            Err(CosetError::ModulusTooLarge(_))
        ));
    }

    #[test]
    fn cosets() {
        let p = params(3, 28);
        assert_eq!(coset_of(0, &p).unwrap(), vec![0]);
        assert_eq!(coset_of(1, &p).unwrap(), vec![1, 3, 9, 19, 25, 27]);
        assert_eq!(coset_of(19, &params(2, 171)).unwrap().len(), 6);
        assert!(coset_of(28, &p).is_err());
    }

    #[test]
    fn leader_verdicts() {
        let v = is_coset_leader(0, &params(3, 28)).unwrap();
        assert!(v.is_leader);
        assert_eq!(v.size, 1);
        assert!(is_coset_leader(7, &params(5, 21)).unwrap().is_leader);
        let v = is_coset_leader(58, &params(2, 171)).unwrap();
        assert!(!v.is_leader);
        assert!(v.leader < 58);
    }

    #[test]
    fn partition_mod_28() {
        let part = coset_partition(&params(3, 28)).unwrap();
        let leaders: Vec<u64> = part.leaders.iter().map(|&(l, _)| l).collect();
        assert_eq!(leaders, vec![0, 1, 2, 4, 5, 7, 14]);
        assert_eq!(part.leaders.iter().map(|&(_, s)| s).sum::<u64>(), 28);
        assert_eq!(coset_partition(&params(5, 1)).unwrap().leaders, vec![(0, 1)]);
        let big = CosetParams::new(2, PARTITION_CAP + 1).unwrap();
        assert!(coset_partition(&big).is_err());
    }

    #[test]
    fn partition_mod_43() {
        let part = coset_partition(&params(2, 43)).unwrap();
        assert_eq!(part.leaders, vec![(0, 1), (1, 14), (3, 14), (7, 14)]);
    }

    #[test]
    fn largest_leaders() {
        assert_eq!(largest_coset_leaders(&params(2, 171), 2), vec![(57, 2), (25, 18)]);
        assert_eq!(largest_coset_leaders(&params(2, 683), 2), vec![(113, 22), (111, 22)]);
        assert_eq!(largest_coset_leaders(&params(3, 28), 1)[0].0, 14);
        assert_eq!(largest_coset_leaders(&params(2, 3), 5), vec![(1, 2), (0, 1)]);
    }

    #[test]
    fn gcd_closed_form() {
        assert_eq!(gcd_power_plus_minus(2, 3, 3), BigUint::from(1u32));
        assert_eq!(gcd_power_plus_minus(3, 2, 4), BigUint::from(10u32));
        assert_eq!(gcd_power_plus_minus(3, 5, 5), BigUint::from(2u32));
    }

    #[test]
    fn scaled_correspondence() {
        let c = scaled_leader_correspondence(1, 3, 2, 5).unwrap();
        assert!(c.small_is_leader && c.big_is_leader && c.agrees());
        let c = scaled_leader_correspondence(7, 6, 5, 3).unwrap();
        assert!(c.small_is_leader && c.big_is_leader && c.agrees());
        let c = scaled_leader_correspondence(19, 3, 2, 9).unwrap();
        assert_eq!(c, ScaledCorrespondence {
            small_is_leader: true,
            big_is_leader: true,
            small_size: 6,
            big_size: 6,
        });
        assert!(matches!(
            scaled_leader_correspondence(1, 4, 5, 3),
            Err(CosetError::BadDivisor { .. })
        ));
    }

    #[test]
    fn q_adic() {
        assert_eq!(q_adic_expansion(11, 2, 5).unwrap(), vec![1, 1, 0, 1, 0]);
        assert_eq!(q_adic_expansion(0, 7, 3).unwrap(), vec![0, 0, 0]);
        assert_eq!(q_adic_expansion(124, 5, 3).unwrap(), vec![4, 4, 4]);
        assert!(q_adic_expansion(125, 5, 3).is_err());
    }

    #[test]
    fn adjacent_pairs() {
        assert_eq!(adjacent_pair_count(11, 5).unwrap(), 1);
        assert_eq!(adjacent_pair_count(9, 5).unwrap(), 1);
        assert_eq!(adjacent_pair_count(3, 3).unwrap(), 1);
        // 0b00111 has a run of three ones
        assert!(adjacent_pair_count(7, 5).is_err());
        assert!(adjacent_pair_count(10, 5).is_err());
        assert!(adjacent_pair_count(17, 5).is_err());
    }

    #[test]
    fn minus_one_power() {
        assert!(minus_one_is_power(&params(5, 21)));
        assert!(minus_one_is_power(&params(3, 28)));
        assert!(!minus_one_is_power(&params(2, 7)));
    }
}
