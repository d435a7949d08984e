//! The verification sweep: every closed form against the orbit-walk oracle
//! over a grid of parameters.
//!
//! Grid points run in parallel; results are collected in grid order, so the
//! report is deterministic.

use num_bigint::BigUint;
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::codes::{bch_bound, defining_set, min_distance, BchCode, BchSpec, Distance, Extension};
use crate::cosets::{
    adjacent_pair_count, coset_partition, gcd_power_plus_minus, is_coset_leader, largest_coset_leaders,
    scaled_leader_correspondence, CosetParams,
};
use crate::formulas::{
    binary_top_two, coset_size_rule, delta1_m3, dim_for, family_length, small_range_leader, ternary_dual_bound,
    ternary_dual_cuts, theorem_code_params, ClaimFamily, DesignChoice, LeaderCatalog,
};
use crate::report::{measure, Verdict};

/// A group of closed forms checked together.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    SmallRange,
    CosetSizes,
    LeadersM3,
    LeadersM5,
    LeadersGeneral,
    Delta1M3,
    DimM3,
    DimM5,
    DimGeneral,
    BinaryTopTwo,
    TernaryCuts,
    TernaryDualBound,
    Claims,
    GcdClosedForm,
    ScaledCorrespondence,
    PairParity,
    Sampled,
}

impl Family {
    pub const ALL: [Family; 17] = [
        Family::SmallRange,
        Family::CosetSizes,
        Family::LeadersM3,
        Family::LeadersM5,
        Family::LeadersGeneral,
        Family::Delta1M3,
        Family::DimM3,
        Family::DimM5,
        Family::DimGeneral,
        Family::BinaryTopTwo,
        Family::TernaryCuts,
        Family::TernaryDualBound,
        Family::Claims,
        Family::GcdClosedForm,
        Family::ScaledCorrespondence,
        Family::PairParity,
        Family::Sampled,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::SmallRange => "small-range",
            Family::CosetSizes => "coset-sizes",
            Family::LeadersM3 => "leaders-m3",
            Family::LeadersM5 => "leaders-m5",
            Family::LeadersGeneral => "leaders-general",
            Family::Delta1M3 => "delta1-m3",
            Family::DimM3 => "dim-m3",
            Family::DimM5 => "dim-m5",
            Family::DimGeneral => "dim-general",
            Family::BinaryTopTwo => "binary-top-two",
            Family::TernaryCuts => "ternary-cuts",
            Family::TernaryDualBound => "ternary-dual-bound",
            Family::Claims => "claims",
            Family::GcdClosedForm => "gcd-closed-form",
            Family::ScaledCorrespondence => "scaled-correspondence",
            Family::PairParity => "pair-parity",
            Family::Sampled => "sampled",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == s)
    }

    pub fn description(self) -> &'static str {
        match self {
            Family::SmallRange => "the single non-leader below q^((m-1)/2)",
            Family::CosetSizes => "coset sizes 2m and their three exceptions",
            Family::LeadersM3 => "leader catalog for m = 3",
            Family::LeadersM5 => "leader catalog for m = 5",
            Family::LeadersGeneral => "leader catalogs for odd m > 5",
            Family::Delta1M3 => "largest leader for m = 3",
            Family::DimM3 => "dimensions for m = 3",
            Family::DimM5 => "dimensions for m = 5",
            Family::DimGeneral => "dimensions for odd m > 5",
            Family::BinaryTopTwo => "two largest binary leaders mod (2^m+1)/3",
            Family::TernaryCuts => "cut points I1, I2 for length 3^m+1",
            Family::TernaryDualBound => "dual-distance bound vs measured dual distance",
            Family::Claims => "stated [n,k,d] vs constructed codes",
            Family::GcdClosedForm => "gcd(l^u+1, l^v-1) closed form vs Euclid",
            Family::ScaledCorrespondence => "leaders mod (q^m+1)/N vs multiples of N mod q^m+1",
            Family::PairParity => "odd number of adjacent pairs",
            Family::Sampled => "sampled spot checks at large m",
        }
    }

    fn default_points(self) -> Vec<(u64, u32)> {
        let m3: Vec<(u64, u32)> = (3..=13).map(|q| (q, 3)).collect();
        let m5: Vec<(u64, u32)> = [3, 4, 5, 7, 8].iter().map(|&q| (q, 5)).collect();
        let general = vec![(3, 7), (3, 9), (4, 7), (5, 7)];
        match self {
            Family::LeadersM3 | Family::Delta1M3 | Family::DimM3 => m3,
            Family::LeadersM5 | Family::DimM5 => m5,
            Family::LeadersGeneral | Family::DimGeneral => general,
            Family::SmallRange => [m3, m5, general].concat(),
            Family::CosetSizes => [m3, m5, general, vec![(2, 5), (2, 7), (2, 9), (2, 11)]].concat(),
            Family::BinaryTopTwo => (3..=17).step_by(2).map(|m| (2, m)).collect(),
            Family::TernaryCuts => (2..=5).map(|m| (3, m)).collect(),
            Family::TernaryDualBound => (2..=4).map(|m| (3, m)).collect(),
            Family::Claims => {
                let mut pts: Vec<(u64, u32)> = claim_cases().iter().map(|c| (c.1, c.2)).collect();
                pts.sort_unstable();
                pts.dedup();
                pts
            }
            Family::GcdClosedForm => vec![(10, 12)],
            Family::ScaledCorrespondence => [2, 3, 4, 5]
                .iter()
                .flat_map(|&q| [3, 5, 7].map(|m| (q, m)))
                .collect(),
            Family::PairParity => (3..=13).step_by(2).map(|m| (2, m)).collect(),
            Family::Sampled => vec![
                (3, 11),
                (3, 13),
                (3, 15),
                (4, 11),
                (4, 13),
                (5, 11),
                (7, 11),
                (2, 19),
                (2, 21),
                (2, 23),
                (2, 25),
                (2, 27),
                (2, 29),
                (2, 31),
            ],
        }
    }

    fn accepts(self, q: u64, m: u32) -> bool {
        let odd = m % 2 == 1 && m >= 3;
        match self {
            Family::LeadersM3 | Family::Delta1M3 | Family::DimM3 => m == 3 && q >= 3,
            Family::LeadersM5 | Family::DimM5 => m == 5 && q >= 3,
            Family::LeadersGeneral | Family::DimGeneral => odd && m > 5 && q >= 3,
            Family::SmallRange => odd && q >= 2,
            Family::CosetSizes => odd && q >= 2 && (q, m) != (2, 3),
            Family::BinaryTopTwo | Family::PairParity => q == 2 && odd,
            Family::TernaryCuts | Family::TernaryDualBound => q == 3 && m >= 2,
            Family::ScaledCorrespondence => q >= 2 && odd,
            Family::Claims | Family::GcdClosedForm | Family::Sampled => true,
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepConfig {
    pub families: Vec<Family>,
    /// Replaces the q values of each family's grid.
    pub q: Option<Vec<u64>>,
    /// Replaces the m values of each family's grid.
    pub m: Option<Vec<u32>>,
    /// Codeword / column-subset budget per code.
    pub budget: u64,
    /// Samples per point in the sampled family.
    pub samples: usize,
    pub seed: u64,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            families: Family::ALL.to_vec(),
            q: None,
            m: None,
            budget: 1 << 24,
            samples: 10_000,
            seed: 0x5eed,
        }
    }
}

impl SweepConfig {
    /// The grid points a family will visit under this configuration.
    pub fn points(&self, family: Family) -> Vec<(u64, u32)> {
        let defaults = family.default_points();
        if matches!(family, Family::Claims | Family::GcdClosedForm) || (self.q.is_none() && self.m.is_none()) {
            return defaults;
        }
        let mut qs: Vec<u64> = self.q.clone().unwrap_or_else(|| defaults.iter().map(|p| p.0).collect());
        let mut ms: Vec<u32> = self.m.clone().unwrap_or_else(|| defaults.iter().map(|p| p.1).collect());
        qs.sort_unstable();
        qs.dedup();
        ms.sort_unstable();
        ms.dedup();
        ms.iter()
            .flat_map(|&m| qs.iter().map(move |&q| (q, m)))
            .filter(|&(q, m)| family.accepts(q, m))
            .collect()
    }
}

/// One disagreement between a closed form and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub family: Family,
    pub q: u64,
    pub m: u32,
    /// The argument under test (a, l, δ, s, ...).
    pub input: u64,
    pub expected: String,
    pub observed: String,
    /// Clause or branch ids involved, if any.
    pub rules: Vec<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
struct PointOutcome {
    checks: u64,
    mismatches: Vec<Mismatch>,
    notes: Vec<String>,
}

impl PointOutcome {
    fn check(&mut self, family: Family, q: u64, m: u32, input: u64, expected: impl ToString, observed: impl ToString, rules: Vec<String>) {
        self.checks += 1;
        let (e, o) = (expected.to_string(), observed.to_string());
        if e != o {
            self.mismatches.push(Mismatch {
                family,
                q,
                m,
                input,
                expected: e,
                observed: o,
                rules,
            });
        }
    }

    fn fail(&mut self, family: Family, q: u64, m: u32, input: u64, what: String) {
        self.check(family, q, m, input, "ok", what, Vec::new());
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub family: Family,
    pub points: usize,
    pub checks: u64,
    pub mismatches: Vec<Mismatch>,
    pub notes: Vec<String>,
}

impl FamilyReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub families: Vec<FamilyReport>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(FamilyReport::passed)
    }

    pub fn mismatch_count(&self) -> usize {
        self.families.iter().map(|f| f.mismatches.len()).sum()
    }
}

/// Runs the configured families in order, reporting progress through `progress`.
pub fn run(cfg: &SweepConfig, progress: &(dyn Fn(&str) + Sync)) -> SweepReport {
    let families = cfg
        .families
        .iter()
        .map(|&f| {
            progress(&format!("{f}: {} point(s)", cfg.points(f).len()));
            run_family(f, cfg)
        })
        .collect();
    SweepReport { families }
}

pub fn run_family(family: Family, cfg: &SweepConfig) -> FamilyReport {
    let points = cfg.points(family);
    let outcomes: Vec<PointOutcome> = points.par_iter().map(|&(q, m)| run_point(family, q, m, cfg)).collect();
    let mut report = FamilyReport {
        family,
        points: points.len(),
        checks: 0,
        mismatches: Vec::new(),
        notes: Vec::new(),
    };
    for o in outcomes {
        report.checks += o.checks;
        report.mismatches.extend(o.mismatches);
        report.notes.extend(o.notes);
    }
    report
}

fn run_point(family: Family, q: u64, m: u32, cfg: &SweepConfig) -> PointOutcome {
    let mut out = PointOutcome::default();
    let result = match family {
        Family::SmallRange => small_range(q, m, &mut out),
        Family::CosetSizes => coset_sizes(q, m, &mut out),
        Family::LeadersM3 | Family::LeadersM5 | Family::LeadersGeneral => catalog(family, q, m, &mut out),
        Family::Delta1M3 => delta1(q, &mut out),
        Family::DimM3 | Family::DimM5 | Family::DimGeneral => dimensions(family, q, m, &mut out),
        Family::BinaryTopTwo => top_two(m, &mut out),
        Family::TernaryCuts => cuts(m, &mut out),
        Family::TernaryDualBound => dual_bound(m, cfg.budget, &mut out),
        Family::Claims => claims(q, m, cfg.budget, &mut out),
        Family::GcdClosedForm => gcd_form(q, m as u64, &mut out),
        Family::ScaledCorrespondence => scaled(q, m, &mut out),
        Family::PairParity => parity(m, &mut out),
        Family::Sampled => sampled(q, m, cfg, &mut out),
    };
    if let Err(e) = result {
        out.fail(family, q, m, 0, format!("error: {e}"));
    }
    out
}

type Step = Result<(), String>;

fn params(q: u64, m: u32) -> Result<(u64, CosetParams), String> {
    let n = family_length(q, m).map_err(|e| e.to_string())?;
    Ok((n, CosetParams::new(q, n).map_err(|e| e.to_string())?))
}

fn small_range(q: u64, m: u32, out: &mut PointOutcome) -> Step {
    let (_, p) = params(q, m)?;
    let bound = arith::pow(q, (m - 1) / 2);
    for a in (1..=bound).filter(|a| a % q != 0) {
        let formula = small_range_leader(q, m, a).map_err(|e| e.to_string())?;
        let oracle = is_coset_leader(a, &p).map_err(|e| e.to_string())?;
        let size_ok = !oracle.is_leader || oracle.size == 2 * m as u64 || (q, m) == (2, 3);
        out.check(Family::SmallRange, q, m, a, formula, oracle.is_leader, Vec::new());
        if !size_ok {
            out.fail(Family::SmallRange, q, m, a, format!("leader with size {}", oracle.size));
        }
    }
    Ok(())
}

fn coset_sizes(q: u64, m: u32, out: &mut PointOutcome) -> Step {
    let (_, p) = params(q, m)?;
    let bound = if m == 3 { q * q - q } else { arith::pow(q, (m + 1) / 2) };
    for a in 1..=bound {
        let oracle = is_coset_leader(a, &p).map_err(|e| e.to_string())?;
        if !oracle.is_leader {
            continue;
        }
        let formula = coset_size_rule(q, m, a).map_err(|e| e.to_string())?;
        out.check(Family::CosetSizes, q, m, a, formula, oracle.size, Vec::new());
    }
    Ok(())
}

fn catalog(family: Family, q: u64, m: u32, out: &mut PointOutcome) -> Step {
    let cat = LeaderCatalog::new(q, m).map_err(|e| e.to_string())?;
    let (_, p) = params(q, m)?;
    for &(id, v) in cat.stray() {
        out.notes.push(format!("{family} q={q} m={m}: clause {id} generates {v} outside the range"));
    }
    let (lo, hi) = cat.range();
    for a in (lo..=hi).filter(|a| a % q != 0) {
        let v = cat.classify(a).map_err(|e| e.to_string())?;
        let oracle = is_coset_leader(a, &p).map_err(|e| e.to_string())?.is_leader;
        let rules = if v.fired.is_empty() {
            vec!["no clause".to_string()]
        } else {
            v.fired.iter().map(|s| s.to_string()).collect()
        };
        out.check(family, q, m, a, v.is_leader, oracle, rules);
    }
    Ok(())
}

fn delta1(q: u64, out: &mut PointOutcome) -> Step {
    let (_, p) = params(q, 3)?;
    let formula = delta1_m3(q).map_err(|e| e.to_string())?;
    let oracle = largest_coset_leaders(&p, 1)[0].0;
    out.check(Family::Delta1M3, q, 3, q, formula, oracle, Vec::new());
    Ok(())
}

fn dimensions(family: Family, q: u64, m: u32, out: &mut PointOutcome) -> Step {
    let (n, p) = params(q, m)?;
    let partition = coset_partition(&p).map_err(|e| e.to_string())?;
    for ell in 2..q {
        let r = dim_for(q, m, ell).map_err(|e| e.to_string())?;
        let oracle = n - partition.union_size_up_to(r.delta - 1);
        out.check(family, q, m, ell, r.dim, oracle, vec![r.branch.to_string()]);
    }
    Ok(())
}

fn top_two(m: u32, out: &mut PointOutcome) -> Step {
    let n = ((1u64 << m) + 1) / 3;
    let p = CosetParams::new(2, n).map_err(|e| e.to_string())?;
    let formula = binary_top_two(m).map_err(|e| e.to_string())?;
    let oracle = largest_coset_leaders(&p, 2);
    out.check(Family::BinaryTopTwo, 2, m, 1, format!("{:?}", formula.delta1), format!("{:?}", oracle[0]), Vec::new());
    match (formula.delta2, oracle.get(1)) {
        (Some(d2), Some(&o)) => out.check(Family::BinaryTopTwo, 2, m, 2, format!("{d2:?}"), format!("{o:?}"), Vec::new()),
        (None, o) => out.notes.push(format!("m={m}: no second leader stated; oracle gives {o:?}")),
        (Some(d2), None) => out.fail(Family::BinaryTopTwo, 2, m, 2, format!("formula gives {d2:?}, oracle has one leader")),
    }
    Ok(())
}

fn cuts(m: u32, out: &mut PointOutcome) -> Step {
    let p3 = arith::pow(3, m);
    let n = p3 + 1;
    let half = (p3 + 1) / 2;
    for delta in 2..=half {
        let r = ternary_dual_cuts(m, delta).map_err(|e| e.to_string())?;
        let ds = defining_set(&BchSpec::narrow(3, n, delta).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let elements = ds.elements.as_ref().ok_or("defining set not materialized")?;
        let i1 = elements.iter().copied().filter(|&t| t <= half).max();
        let i2 = elements.iter().copied().find(|&t| t > half);
        let rules = vec![format!("level {:?}", r.level)];
        out.check(Family::TernaryCuts, 3, m, delta, format!("I1={:?}", Some(r.i1)), format!("I1={i1:?}"), rules.clone());
        out.check(Family::TernaryCuts, 3, m, delta, format!("I2={:?}", Some(r.i2)), format!("I2={i2:?}"), rules);
    }
    Ok(())
}

fn dual_bound(m: u32, budget: u64, out: &mut PointOutcome) -> Step {
    let n = arith::pow(3, m) + 1;
    let ext = Extension::new(3, n).map_err(|e| e.to_string())?;
    let mut cache: std::collections::HashMap<u64, Distance> = std::collections::HashMap::new();
    let (mut exact, mut ranged) = (0u64, 0u64);
    for delta in 2..=n {
        let spec = BchSpec::narrow(3, n, delta).map_err(|e| e.to_string())?;
        let code = BchCode::with_extension(spec, Some(&ext)).map_err(|e| e.to_string())?;
        let key = code.defining_set().total_size;
        let d = match cache.get(&key) {
            Some(d) => *d,
            None => {
                let dual = code.code.dual().map_err(|e| e.to_string())?;
                let d = min_distance(&dual, budget).map_err(|e| e.to_string())?;
                cache.insert(key, d);
                d
            }
        };
        let bound = ternary_dual_bound(m, delta).map_err(|e| e.to_string())?;
        let upper = d.upper().ok_or("dual is the zero code")?;
        if d.exact().is_some() {
            exact += 1;
        } else {
            ranged += 1;
        }
        let observed = if bound <= upper { "bound <= distance".to_string() } else { format!("bound {bound} > distance {d}") };
        out.check(Family::TernaryDualBound, 3, m, delta, "bound <= distance", observed, Vec::new());
    }
    out.notes.push(format!("m={m}: {exact} exact dual distances, {ranged} bracketed"));
    Ok(())
}

/// `(family, q, m, choice)` for the stated-parameter checks.
pub fn claim_cases() -> Vec<(ClaimFamily, u64, u32, DesignChoice)> {
    let mut v = Vec::new();
    for q in [4, 5, 7, 8, 9] {
        v.push((ClaimFamily::LargestLeaderM3, q, 3, DesignChoice::Delta1));
    }
    for q in [4u64, 5, 7, 8, 9] {
        for ell in 2..q {
            v.push((ClaimFamily::Dimension, q, 3, DesignChoice::Ell(ell)));
        }
    }
    for q in [3u64, 4] {
        for ell in 2..q {
            v.push((ClaimFamily::Dimension, q, 5, DesignChoice::Ell(ell)));
        }
    }
    for m in [7, 9, 11] {
        let f = crate::formulas::binary_family_class(m);
        v.push((f, 2, m, DesignChoice::Delta1));
        v.push((f, 2, m, DesignChoice::Delta2));
    }
    v
}

fn claims(q: u64, m: u32, budget: u64, out: &mut PointOutcome) -> Step {
    for (family, cq, cm, choice) in claim_cases() {
        if (cq, cm) != (q, m) {
            continue;
        }
        let claim = theorem_code_params(family, q, m, choice).map_err(|e| e.to_string())?;
        let n = claim.narrow.n;
        let tag = format!("{family:?} {choice:?}");
        let narrow = BchSpec::narrow(q, n, claim.delta).map_err(|e| e.to_string())?;
        let mut cases = vec![(narrow, claim.narrow)];
        if let Some(e) = claim.even_like {
            cases.push((BchSpec::even_like(q, n, claim.delta).map_err(|e| e.to_string())?, e));
        }
        for (spec, c) in cases {
            let row = measure(&spec, Some(m), Some(c), budget).map_err(|e| e.to_string())?;
            let verdict = row.verdict.expect("claim given");
            if verdict == Verdict::BoundConsistent {
                out.notes.push(format!("{tag}: claimed {c}, measured {} (bounds only)", row.params()));
            }
            let observed = if verdict == Verdict::Mismatch { format!("{} vs claimed {c}", row.params()) } else { "consistent".into() };
            out.check(Family::Claims, q, m, spec.delta, "consistent", observed, vec![tag.clone()]);
            if let Some(d) = row.distance.exact() {
                let ds = defining_set(&spec).map_err(|e| e.to_string())?;
                let bch = bch_bound(&ds).map_err(|e| e.to_string())?;
                if bch > d {
                    out.fail(Family::Claims, q, m, spec.delta, format!("BCH bound {bch} exceeds distance {d}"));
                }
            }
        }
    }
    Ok(())
}

fn gcd_form(max_l: u64, max_uv: u64, out: &mut PointOutcome) -> Step {
    for l in 1..=max_l {
        for u in 1..=max_uv {
            for v in 1..=max_uv {
                let a = BigUint::from(l).pow(u as u32) + 1u32;
                let b = BigUint::from(l).pow(v as u32) - 1u32;
                let euclid = a.gcd(&b);
                out.check(Family::GcdClosedForm, l, u as u32, v, gcd_power_plus_minus(l, u, v), euclid, Vec::new());
            }
        }
    }
    Ok(())
}

fn scaled(q: u64, m: u32, out: &mut PointOutcome) -> Step {
    let big = arith::pow(q, m) + 1;
    for divisor in (1..=q + 1).filter(|d| (q + 1) % d == 0) {
        for s in 1..big / divisor {
            let c = scaled_leader_correspondence(s, divisor, q, m).map_err(|e| e.to_string())?;
            out.check(Family::ScaledCorrespondence, q, m, s, "agree", if c.agrees() { "agree".into() } else { format!("{c:?}") }, vec![format!("N={divisor}")]);
        }
    }
    Ok(())
}

fn parity(m: u32, out: &mut PointOutcome) -> Step {
    for s in (1..1u64 << (m - 1)).step_by(2) {
        if let Ok(l) = adjacent_pair_count(s, m) {
            out.check(Family::PairParity, 2, m, s, "odd", if l % 2 == 1 { "odd" } else { "even" }, Vec::new());
        }
    }
    Ok(())
}

fn sampled(q: u64, m: u32, cfg: &SweepConfig, out: &mut PointOutcome) -> Step {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ (q << 32) ^ m as u64);
    let (n, p) = params(q, m)?;
    let f = Family::Sampled;
    if q == 2 {
        let top = binary_top_two(m).map_err(|e| e.to_string())?;
        let (d1, s1) = top.delta1;
        let v = is_coset_leader(d1, &p).map_err(|e| e.to_string())?;
        out.check(f, q, m, d1, format!("leader of size {s1}"), format!("{} of size {}", if v.is_leader { "leader" } else { "non-leader" }, v.size), vec!["delta1".into()]);
        let floor = match top.delta2 {
            Some((d2, s2)) => {
                let v = is_coset_leader(d2, &p).map_err(|e| e.to_string())?;
                out.check(f, q, m, d2, format!("leader of size {s2}"), format!("{} of size {}", if v.is_leader { "leader" } else { "non-leader" }, v.size), vec!["delta2".into()]);
                for a in d2 + 1..d1 {
                    let v = is_coset_leader(a, &p).map_err(|e| e.to_string())?;
                    out.check(f, q, m, a, false, v.is_leader, vec!["between delta2 and delta1".into()]);
                }
                d2
            }
            None => d1,
        };
        for _ in 0..cfg.samples {
            let a = rng.gen_range(floor + 1..n);
            let v = is_coset_leader(a, &p).map_err(|e| e.to_string())?;
            out.check(f, q, m, a, a == d1, v.is_leader, vec!["above delta2".into()]);
        }
        return Ok(());
    }
    let cat = LeaderCatalog::new(q, m).map_err(|e| e.to_string())?;
    let (lo, hi) = cat.range();
    let h = (m - 1) / 2;
    for _ in 0..cfg.samples {
        let a = loop {
            let a = rng.gen_range(lo..=hi);
            if a % q != 0 {
                break a;
            }
        };
        let v = cat.classify(a).map_err(|e| e.to_string())?;
        let oracle = is_coset_leader(a, &p).map_err(|e| e.to_string())?;
        let rules = v.fired.iter().map(|s| s.to_string()).collect();
        out.check(f, q, m, a, v.is_leader, oracle.is_leader, rules);

        let b = loop {
            let b = rng.gen_range(1..=arith::pow(q, h));
            if b % q != 0 {
                break b;
            }
        };
        let formula = small_range_leader(q, m, b).map_err(|e| e.to_string())?;
        let oracle = is_coset_leader(b, &p).map_err(|e| e.to_string())?;
        out.check(f, q, m, b, formula, oracle.is_leader, vec!["small-range".into()]);

        let c = rng.gen_range(1..=arith::pow(q, h + 1));
        let oracle = is_coset_leader(c, &p).map_err(|e| e.to_string())?;
        if oracle.is_leader {
            let size = coset_size_rule(q, m, c).map_err(|e| e.to_string())?;
            out.check(f, q, m, c, size, oracle.size, vec!["coset-sizes".into()]);
        }
    }
    Ok(())
}
