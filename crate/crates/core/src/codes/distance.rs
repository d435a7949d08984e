//! Minimum distance of cyclic codes at desk scale.
//!
//! Methods, cheapest first:
//! * full enumeration of all `q^k` codewords along a Gray code, so each
//!   step adds one scaled generator row;
//! * divisor certificates: `Σ_(j<e) x^(jn/e)` and `(x-1)` times it are
//!   tested for membership, giving upper bounds that often meet the BCH bound;
//! * low-weight message search (messages of weight at most 3) for an upper bound;
//! * column search: the least w for which some w columns of the parity-check
//!   matrix, one of them column 0, are linearly dependent. Cyclicity lets
//!   every codeword be shifted to cover position 0.
//!
//! Work is parallel, but every result is a minimum over a fixed set, so it
//! does not depend on scheduling.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use super::small::{shifted, symbols, SmallField};
use super::{BchCode, BchSpec, CodeError, CyclicCode};
use crate::arith;
use crate::gf::Poly;

/// Default cap on codewords enumerated or column subsets examined.
pub const DEFAULT_BUDGET: u64 = 1 << 28;

/// Full enumeration runs first when `q^k` is at most this.
const CHEAP_ENUMERATION: u64 = 1 << 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceSource {
    /// Every nonzero codeword was examined.
    Enumerated,
    /// Exhaustive search over parity-check column subsets.
    ColumnSearch,
    /// A divisor-pattern codeword meets the BCH bound.
    ForcedByDivisibility,
    /// A low-weight message codeword meets the BCH bound.
    BoundsMeet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Distance {
    Exact { d: u64, source: DistanceSource },
    Bounds { lower: u64, upper: u64 },
    /// The code is `{0}`.
    ZeroCode,
}

impl Distance {
    pub fn exact(&self) -> Option<u64> {
        match *self {
            Distance::Exact { d, .. } => Some(d),
            _ => None,
        }
    }

    pub fn lower(&self) -> Option<u64> {
        match *self {
            Distance::Exact { d, .. } => Some(d),
            Distance::Bounds { lower, .. } => Some(lower),
            Distance::ZeroCode => None,
        }
    }

    pub fn upper(&self) -> Option<u64> {
        match *self {
            Distance::Exact { d, .. } => Some(d),
            Distance::Bounds { upper, .. } => Some(upper),
            Distance::ZeroCode => None,
        }
    }
}

impl std::fmt::Display for Distance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Distance::Exact { d, .. } => write!(f, "{d}"),
            Distance::Bounds { lower, upper } => write!(f, "{lower}..{upper}"),
            Distance::ZeroCode => write!(f, "-"),
        }
    }
}

impl std::fmt::Display for DistanceSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            DistanceSource::Enumerated => "enumerated",
            DistanceSource::ColumnSearch => "column-search",
            DistanceSource::ForcedByDivisibility => "forced-by-divisibility",
            DistanceSource::BoundsMeet => "bounds-meet",
        })
    }
}

/// Minimum distance within `budget` codewords or column subsets; falls back
/// to bounds (BCH bound below, best codeword found above).
pub fn min_distance(code: &CyclicCode, budget: u64) -> Result<Distance, CodeError> {
    let (n, k) = (code.n(), code.dim());
    if k == 0 {
        return Ok(Distance::ZeroCode);
    }
    let singleton = n - k + 1;
    let lower = code.bch_bound().min(singleton);
    let (Some(g), Some(sf)) = (code.gen_poly.as_ref(), code.small_field().and_then(SmallField::new)) else {
        return Ok(bounds(lower, singleton));
    };
    let gs = symbols(g, n as usize);
    let words = arith::checked_pow(code.q(), k as u32);
    let fits = |cap: u64| words.is_some_and(|w| w <= cap);

    if fits(budget.min(CHEAP_ENUMERATION)) {
        let d = enumerate(&sf, &gs, n as usize, k as usize, lower);
        return Ok(Distance::Exact { d, source: DistanceSource::Enumerated });
    }
    let mut upper = singleton;
    if let Some(w) = divisor_certificate(code, g)? {
        upper = upper.min(w);
        if upper == lower {
            return Ok(Distance::Exact { d: upper, source: DistanceSource::ForcedByDivisibility });
        }
    }
    if let Some(w) = low_weight_messages(&sf, &gs, n as usize, k as usize, budget) {
        upper = upper.min(w);
    }
    if upper == lower {
        return Ok(Distance::Exact { d: upper, source: DistanceSource::BoundsMeet });
    }
    let h_star = code.check_polynomial()?.reciprocal().monic();
    match column_search(&sf, &symbols(&h_star, k as usize + 1), n as usize, k as usize, lower, upper, budget) {
        ColumnOutcome::Found(w) => return Ok(Distance::Exact { d: w, source: DistanceSource::ColumnSearch }),
        ColumnOutcome::NoneBelowUpper => {
            return Ok(Distance::Exact { d: upper, source: DistanceSource::ColumnSearch })
        }
        ColumnOutcome::OverBudget(better_lower) => {
            if fits(budget) {
                let d = enumerate(&sf, &gs, n as usize, k as usize, lower);
                return Ok(Distance::Exact { d, source: DistanceSource::Enumerated });
            }
            Ok(bounds(better_lower, upper))
        }
    }
}

fn bounds(lower: u64, upper: u64) -> Distance {
    if lower == upper {
        Distance::Exact { d: lower, source: DistanceSource::BoundsMeet }
    } else {
        Distance::Bounds { lower, upper }
    }
}

/// Minimum nonzero weight by full enumeration, or `None` when `q^k > budget`.
pub fn enumerate_min_weight(code: &CyclicCode, budget: u64) -> Result<Option<u64>, CodeError> {
    let (n, k) = (code.n(), code.dim());
    if k == 0 {
        return Ok(None);
    }
    let g = code.gen_poly.as_ref().ok_or(CodeError::NoGenerator)?;
    let sf = code
        .small_field()
        .and_then(SmallField::new)
        .ok_or_else(|| CodeError::InvalidSpec("alphabet too large for enumeration".into()))?;
    if !arith::checked_pow(code.q(), k as u32).is_some_and(|w| w <= budget) {
        return Ok(None);
    }
    Ok(Some(enumerate(&sf, &symbols(g, n as usize), n as usize, k as usize, 0)))
}

/// Minimum distance of the dual of `C(spec)`.
pub fn dual_min_distance(spec: &BchSpec, budget: u64) -> Result<Distance, CodeError> {
    let code = BchCode::new(*spec)?;
    min_distance(&code.code.dual()?, budget)
}

fn enumerate(sf: &SmallField, g: &[u8], n: usize, k: usize, stop: u64) -> u64 {
    if sf.q == 2 {
        match n.div_ceil(64) {
            1 => enumerate_binary::<1>(g, n, k, stop),
            2 => enumerate_binary::<2>(g, n, k, stop),
            3..=4 => enumerate_binary::<4>(g, n, k, stop),
            5..=8 => enumerate_binary::<8>(g, n, k, stop),
            9..=16 => enumerate_binary::<16>(g, n, k, stop),
            _ => enumerate_qary(sf, g, n, k, stop),
        }
    } else {
        enumerate_qary(sf, g, n, k, stop)
    }
}

fn enumerate_binary<const W: usize>(g: &[u8], n: usize, k: usize, stop: u64) -> u64 {
    let rows: Vec<[u64; W]> = (0..k)
        .map(|j| {
            let mut row = [0u64; W];
            for (i, &c) in shifted(&g[..n - k + 1], j, n).iter().enumerate() {
                if c != 0 {
                    row[i / 64] |= 1 << (i % 64);
                }
            }
            row
        })
        .collect();
    let weight = |cw: &[u64; W]| cw.iter().map(|x| x.count_ones() as u64).sum::<u64>();
    let top = k.min(10);
    let low = k - top;
    let best = AtomicU64::new(u64::MAX);
    (0u64..1 << top).into_par_iter().for_each(|c| {
        let mut cw = [0u64; W];
        for j in 0..top {
            if c >> j & 1 == 1 {
                xor(&mut cw, &rows[low + j]);
            }
        }
        let mut local = if c == 0 { u64::MAX } else { weight(&cw) };
        for i in 1u64..1 << low {
            xor(&mut cw, &rows[i.trailing_zeros() as usize]);
            local = local.min(weight(&cw));
            if i & 0xFFFF == 0 {
                best.fetch_min(local, Ordering::Relaxed);
                if best.load(Ordering::Relaxed) <= stop {
                    return;
                }
            }
        }
        best.fetch_min(local, Ordering::Relaxed);
    });
    best.into_inner()
}

#[inline]
fn xor<const W: usize>(a: &mut [u64; W], b: &[u64; W]) {
    for (x, y) in a.iter_mut().zip(b) {
        *x ^= y;
    }
}

/// Modular Gray code over `Z_q` digits: from counter i to i+1 exactly one
/// Gray digit (the one at the count of trailing `q-1` digits) moves by +1.
fn enumerate_qary(sf: &SmallField, g: &[u8], n: usize, k: usize, stop: u64) -> u64 {
    let q = sf.q;
    let support: Vec<(usize, u8)> = g.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect();
    let step: Vec<u8> = (0..q).map(|d| sf.sub(((d + 1) % q) as u8, d as u8)).collect();
    let mut top = 0usize;
    while top < k && q.pow(top as u32 + 1) <= 4096 {
        top += 1;
    }
    let low = k - top;
    let chunks = q.pow(top as u32) as u64;
    let best = AtomicU64::new(u64::MAX);
    (0..chunks).into_par_iter().for_each(|c| {
        let mut cw = vec![0u8; n];
        let mut rest = c as usize;
        for j in 0..top {
            let d = (rest % q) as u8;
            rest /= q;
            if d != 0 {
                for &(s, gc) in &support {
                    let pos = s + low + j;
                    cw[pos] = sf.add(cw[pos], sf.mul(d, gc));
                }
            }
        }
        let mut w = cw.iter().filter(|&&x| x != 0).count() as u64;
        let mut local = if c == 0 { u64::MAX } else { w };
        let mut counter = vec![0usize; low];
        let mut gray = vec![0usize; low];
        let total = (q as u64).pow(low as u32);
        for i in 1..total {
            let mut t = 0;
            while counter[t] == q - 1 {
                counter[t] = 0;
                t += 1;
            }
            counter[t] += 1;
            let delta = step[gray[t]];
            gray[t] = (gray[t] + 1) % q;
            for &(s, gc) in &support {
                let pos = s + t;
                let old = cw[pos];
                let new = sf.add(old, sf.mul(delta, gc));
                cw[pos] = new;
                w = w + (new != 0) as u64 - (old != 0) as u64;
            }
            local = local.min(w);
            if i & 0xFFFF == 0 {
                best.fetch_min(local, Ordering::Relaxed);
                if best.load(Ordering::Relaxed) <= stop {
                    return;
                }
            }
        }
        best.fetch_min(local, Ordering::Relaxed);
    });
    best.into_inner()
}

/// Least weight among `s_e = Σ_(j<e) x^(jn/e)` and `(x-1) s_e`, over divisors
/// `e >= 2` of n, that lie in the code.
fn divisor_certificate(code: &CyclicCode, g: &Poly) -> Result<Option<u64>, CodeError> {
    let n = code.n();
    let f = g.field();
    let mut best: Option<u64> = None;
    for e in (2..=n).filter(|e| n % e == 0) {
        let mut coeffs = vec![f.zero(); (n - n / e + 1) as usize];
        for j in 0..e {
            coeffs[(j * (n / e)) as usize] = f.one();
        }
        let s = Poly::new(f, coeffs);
        let t = s.mul(&Poly::linear(f, f.one()))?;
        for c in [s, t] {
            let w = c.weight() as u64;
            if best.is_some_and(|b| b <= w) {
                continue;
            }
            if code.contains(&c)? {
                best = Some(w);
            }
        }
    }
    Ok(best)
}

/// Weight of the lightest codeword `g(x) m(x)` with `m = 1 + c1 x^i + c2 x^j`,
/// `0 < i < j < k`; scaling and shifting cover all messages of weight <= 3.
fn low_weight_messages(sf: &SmallField, g: &[u8], n: usize, k: usize, budget: u64) -> Option<u64> {
    let q = sf.q as u64;
    let count = 1 + (k as u64 - 1) * (q - 1) + arith::binomial(k as u64 - 1, 2) as u64 * (q - 1) * (q - 1);
    if count.saturating_mul(n as u64) > budget.saturating_mul(64) {
        return None;
    }
    let rows: Vec<Vec<u8>> = (0..k).map(|j| shifted(&g[..n - k + 1], j, n)).collect();
    let weight = |v: &[u8]| v.iter().filter(|&&x| x != 0).count() as u64;
    let mut best = weight(&rows[0]);
    let best_two = (1..k)
        .into_par_iter()
        .map(|i| {
            let mut local = u64::MAX;
            let mut buf = vec![0u8; n];
            for c1 in 1..q as u8 {
                for p in 0..n {
                    buf[p] = sf.add(rows[0][p], sf.mul(c1, rows[i][p]));
                }
                local = local.min(weight(&buf));
                let mut buf2 = vec![0u8; n];
                for j in i + 1..k {
                    for c2 in 1..q as u8 {
                        for p in 0..n {
                            buf2[p] = sf.add(buf[p], sf.mul(c2, rows[j][p]));
                        }
                        local = local.min(weight(&buf2));
                    }
                }
            }
            local
        })
        .min()
        .unwrap_or(u64::MAX);
    best = best.min(best_two);
    Some(best)
}

enum ColumnOutcome {
    Found(u64),
    /// No codeword of weight in `[lower, upper)`, so the upper bound is exact.
    NoneBelowUpper,
    /// Budget ran out; carries the best proven lower bound.
    OverBudget(u64),
}

/// Searches `w = lower, lower+1, ..., upper-1` for a dependent set of w
/// parity-check columns containing column 0.
fn column_search(
    sf: &SmallField,
    h_star: &[u8],
    n: usize,
    k: usize,
    lower: u64,
    upper: u64,
    budget: u64,
) -> ColumnOutcome {
    let r = n - k;
    // H[i][j] = h*_(j-i) for the rows x^i h*(x), i < r.
    let columns: Vec<Vec<u8>> = (0..n)
        .map(|j| (0..r).map(|i| if j >= i && j - i <= k { h_star[j - i] } else { 0 }).collect())
        .collect();
    let mut spent = 0u64;
    for w in lower.max(2)..upper {
        let leaves = arith::binomial(n as u64 - 1, w - 1);
        if leaves > (budget - spent) as u128 {
            return ColumnOutcome::OverBudget(w);
        }
        spent += leaves as u64;
        if dependent_set_exists(sf, &columns, w as usize) {
            return ColumnOutcome::Found(w);
        }
    }
    ColumnOutcome::NoneBelowUpper
}

fn dependent_set_exists(sf: &SmallField, columns: &[Vec<u8>], w: usize) -> bool {
    let n = columns.len();
    let found = AtomicBool::new(false);
    let mut root = Basis::default();
    if root.insert(sf, &columns[0]).is_none() {
        return true;
    }
    (1..n).into_par_iter().for_each(|c1| {
        if found.load(Ordering::Relaxed) {
            return;
        }
        let mut basis = root.clone();
        if dfs(sf, columns, &mut basis, c1, 2, w, &found) {
            found.store(true, Ordering::Relaxed);
        }
    });
    found.into_inner()
}

/// Adds column `j` as the `depth`-th chosen column; true if a dependent
/// w-set is reached below.
fn dfs(sf: &SmallField, columns: &[Vec<u8>], basis: &mut Basis, j: usize, depth: usize, w: usize, found: &AtomicBool) -> bool {
    let reduced = basis.reduce(sf, &columns[j]);
    if reduced.iter().all(|&x| x == 0) {
        return true;
    }
    if depth == w || found.load(Ordering::Relaxed) {
        return false;
    }
    let n = columns.len();
    basis.push(sf, reduced);
    let remaining = w - depth;
    let mut hit = false;
    for next in j + 1..=n - remaining {
        if dfs(sf, columns, basis, next, depth + 1, w, found) {
            hit = true;
            break;
        }
    }
    basis.pop();
    hit
}

/// Echelon basis of column vectors, each normalized to 1 at its pivot.
#[derive(Clone, Default)]
struct Basis {
    rows: Vec<(usize, Vec<u8>)>,
}

impl Basis {
    fn reduce(&self, sf: &SmallField, v: &[u8]) -> Vec<u8> {
        let mut v = v.to_vec();
        for (p, b) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (x, &y) in v.iter_mut().zip(b) {
                    if y != 0 {
                        *x = sf.sub(*x, sf.mul(c, y));
                    }
                }
            }
        }
        v
    }

    fn push(&mut self, sf: &SmallField, reduced: Vec<u8>) {
        let p = reduced.iter().position(|&x| x != 0).expect("nonzero vector");
        let inv = sf.inv(reduced[p]);
        let v = reduced.iter().map(|&x| sf.mul(x, inv)).collect();
        self.rows.push((p, v));
    }

    fn pop(&mut self) {
        self.rows.pop();
    }

    fn insert(&mut self, sf: &SmallField, v: &[u8]) -> Option<()> {
        let r = self.reduce(sf, v);
        if r.iter().all(|&x| x == 0) {
            return None;
        }
        self.push(sf, r);
        Some(())
    }
}
