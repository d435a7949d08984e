use std::time::Instant;

use lcdbch::codes::{is_lcd, min_distance, BchCode, BchSpec, LcdReport};
use lcdbch::cosets::{coset_partition, is_coset_leader, largest_coset_leaders, CosetParams};
use lcdbch::formulas::{
    binary_top_two, claim_for, delta1_m3, family_length, ternary_dual_bound, ternary_dual_cuts, LeaderCatalog,
};
use lcdbch::report::{table1, ReportRow, Table1Row, Verdict};
use lcdbch::verify::{self, SweepConfig, SweepReport};
use serde::Serialize;

use crate::output::{render, Format, Table};

#[derive(Debug)]
pub enum CliError {
    /// Bad invocation: exit status 2.
    Usage(String),
    /// Invalid parameters for the mathematics: exit status 1.
    Domain(String),
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> CliError {
        CliError::Domain(e.to_string())
    }
}

/// Rendered standard output, and whether every check in it passed.
pub struct Outcome {
    pub stdout: String,
    pub ok: bool,
}

fn length(q: u64, n: Option<u64>, m: Option<u32>) -> Result<u64, CliError> {
    match (n, m) {
        (Some(n), _) => Ok(n),
        (None, Some(m)) => Ok(family_length(q, m)?),
        (None, None) => Err(CliError::Usage("give the length with -n, or -m for n = (q^m+1)/(q+1)".into())),
    }
}

#[derive(Serialize)]
struct LeaderRow {
    leader: u64,
    size: u64,
}

#[derive(Serialize)]
struct CosetsData {
    q: u64,
    n: u64,
    ord: u64,
    /// Every coset, or only the largest leaders under `--top`.
    complete: bool,
    leaders: Vec<LeaderRow>,
}

pub fn cosets(format: Format, q: u64, n: Option<u64>, m: Option<u32>, top: Option<usize>) -> Result<Outcome, CliError> {
    let n = length(q, n, m)?;
    let p = CosetParams::new(q, n)?;
    let rows = match top {
        Some(k) => largest_coset_leaders(&p, k),
        None => coset_partition(&p)?.leaders,
    };
    let mut table = Table::new(["leader", "size"]);
    for &(l, s) in &rows {
        table.push([l, s]);
    }
    let data = CosetsData {
        q,
        n,
        ord: p.ord(),
        complete: top.is_none(),
        leaders: rows.iter().map(|&(leader, size)| LeaderRow { leader, size }).collect(),
    };
    let preamble = format!("q={q} n={n} ord={} cosets shown={}", p.ord(), rows.len());
    Ok(Outcome {
        stdout: render(format, "cosets", Some(&preamble), &table, &data),
        ok: true,
    })
}

#[derive(Serialize)]
struct NonLeader {
    a: u64,
    clauses: Vec<&'static str>,
}

#[derive(Serialize)]
struct CatalogData {
    q: u64,
    m: u32,
    n: u64,
    range: (u64, u64),
    non_leaders: Vec<NonLeader>,
}

#[derive(Serialize)]
struct TopRow {
    rank: usize,
    leader: u64,
    size: u64,
}

#[derive(Serialize)]
struct TopData {
    q: u64,
    m: u32,
    n: u64,
    leaders: Vec<TopRow>,
}

pub fn leaders(format: Format, q: u64, m: u32, top: Option<usize>) -> Result<Outcome, CliError> {
    let n = family_length(q, m)?;
    if let Some(k) = top {
        let found: Vec<(u64, u64)> = if q == 2 {
            let t = binary_top_two(m)?;
            std::iter::once(t.delta1).chain(t.delta2).collect()
        } else if m == 3 {
            let d1 = delta1_m3(q)?;
            let size = is_coset_leader(d1, &CosetParams::new(q, n)?)?.size;
            vec![(d1, size)]
        } else {
            return Err(CliError::Domain("closed-form largest leaders are known for m = 3 or q = 2".into()));
        };
        let rows: Vec<TopRow> = found
            .into_iter()
            .take(k)
            .enumerate()
            .map(|(i, (leader, size))| TopRow { rank: i + 1, leader, size })
            .collect();
        let mut table = Table::new(["rank", "leader", "size"]);
        for r in &rows {
            table.push([r.rank as u64, r.leader, r.size]);
        }
        let data = TopData { q, m, n, leaders: rows };
        let preamble = format!("q={q} m={m} n={n} largest leaders from closed forms");
        return Ok(Outcome {
            stdout: render(format, "leaders", Some(&preamble), &table, &data),
            ok: true,
        });
    }
    let cat = LeaderCatalog::new(q, m)?;
    let (lo, hi) = cat.range();
    let non_leaders: Vec<NonLeader> = cat
        .exceptions()
        .map(|(a, ids)| NonLeader { a, clauses: ids.to_vec() })
        .collect();
    let mut table = Table::new(["a", "clauses"]);
    for r in &non_leaders {
        table.push([r.a.to_string(), r.clauses.join(",")]);
    }
    let preamble = format!(
        "q={q} m={m} n={n}: non-leaders in [{lo}, {hi}] not divisible by q; every other such a is a leader"
    );
    let data = CatalogData {
        q,
        m,
        n,
        range: (lo, hi),
        non_leaders,
    };
    Ok(Outcome {
        stdout: render(format, "leaders", Some(&preamble), &table, &data),
        ok: true,
    })
}

pub struct CodeArgs {
    pub q: u64,
    pub n: Option<u64>,
    pub m: Option<u32>,
    pub delta: u64,
    pub b: u64,
    pub gen: bool,
    pub lcd: bool,
    pub budget: u64,
}

#[derive(Serialize)]
struct CodeData {
    row: ReportRow,
    generator: Option<Vec<u64>>,
    lcd: Option<LcdReport>,
}

pub fn code(format: Format, a: &CodeArgs) -> Result<Outcome, CliError> {
    let n = length(a.q, a.n, a.m)?;
    let spec = BchSpec::new(a.q, n, a.delta, a.b)?;
    let code = BchCode::new(spec)?;
    let distance = min_distance(&code.code, a.budget)?;
    let claim = claim_for(a.q, n, a.delta, a.b).map(|(_, c)| c);
    let row = ReportRow::new(&spec, a.m, code.dim(), distance, claim);
    let missing = || CliError::Domain(format!("no generator polynomial: the splitting field for q={} n={n} is too large", a.q));
    let generator = if a.gen {
        Some(code.gen_poly().ok_or_else(missing)?.values())
    } else {
        None
    };
    let lcd = if a.lcd {
        code.gen_poly().ok_or_else(missing)?;
        Some(is_lcd(&code.code)?)
    } else {
        None
    };

    let mut table = Table::new(["field", "value"]);
    table.push(["code".to_string(), format!("C({}, {n}, {}, {})", a.q, a.delta, a.b)]);
    table.push(["parameters".to_string(), row.params()]);
    let source = match row.distance {
        lcdbch::Distance::Exact { source, .. } => source.to_string(),
        lcdbch::Distance::Bounds { .. } => "bounds".to_string(),
        lcdbch::Distance::ZeroCode => "zero code".to_string(),
    };
    table.push(["distance".to_string(), source]);
    if let (Some(c), Some(v)) = (row.claimed, row.verdict) {
        table.push(["claimed".to_string(), c.to_string()]);
        table.push(["verdict".to_string(), v.to_string()]);
    }
    if let Some(g) = &generator {
        let coeffs: Vec<String> = g.iter().map(u64::to_string).collect();
        table.push(["generator".to_string(), coeffs.join(" ")]);
    }
    if let Some(l) = &lcd {
        table.push(["lcd (gcd criterion)".to_string(), format!("{} (gcd degree {})", l.gcd_criterion, l.gcd_degree)]);
        let shortcut = match l.shortcut {
            Some(v) => v.to_string(),
            None => "not applicable (-1 is not a power of q mod n)".to_string(),
        };
        table.push(["lcd (shortcut)".to_string(), shortcut]);
    }
    let ok = row.verdict != Some(Verdict::Mismatch);
    let data = CodeData { row, generator, lcd };
    Ok(Outcome {
        stdout: render(format, "code", None, &table, &data),
        ok,
    })
}

#[derive(Serialize)]
struct BoundRow {
    delta: u64,
    level: Option<u32>,
    i1: Option<u64>,
    i2: Option<u64>,
    bound: u64,
}

pub fn dual_bound(format: Format, m: u32, delta: Option<u64>) -> Result<Outcome, CliError> {
    let n = 3u64
        .checked_pow(m)
        .filter(|_| (2..=39).contains(&m))
        .ok_or_else(|| CliError::Domain(format!("m={m} must lie in [2, 39]")))?
        + 1;
    let deltas: Vec<u64> = match delta {
        Some(d) => vec![d],
        None if n <= 100_000 => (2..=n).collect(),
        None => return Err(CliError::Domain(format!("n={n}: give a single δ with -d"))),
    };
    let mut rows = Vec::new();
    for d in deltas {
        let bound = ternary_dual_bound(m, d)?;
        let row = if d <= n / 2 {
            let r = ternary_dual_cuts(m, d)?;
            BoundRow { delta: d, level: r.level, i1: Some(r.i1), i2: Some(r.i2), bound }
        } else {
            BoundRow { delta: d, level: None, i1: None, i2: None, bound }
        };
        rows.push(row);
    }
    let dash = |v: Option<u64>| v.map_or("-".to_string(), |x| x.to_string());
    let mut table = Table::new(["δ", "level", "I1", "I2", "bound"]);
    for r in &rows {
        table.push([r.delta.to_string(), dash(r.level.map(u64::from)), dash(r.i1), dash(r.i2), r.bound.to_string()]);
    }
    let preamble = format!("C(3, {n}, δ, 1): lower bound on the dual distance");
    Ok(Outcome {
        stdout: render(format, "dual-bound", Some(&preamble), &table, &rows),
        ok: true,
    })
}

pub fn table1_cmd(format: Format, m: u32, budget: u64) -> Result<Outcome, CliError> {
    let rows: Vec<Table1Row> = table1(m, budget)?;
    let mut table = Table::new(["δ", "bound", "actual"]);
    for r in &rows {
        table.push([r.delta_label(), r.bound.to_string(), r.actual.to_string()]);
    }
    let n = 3u64.pow(m) + 1;
    let preamble = format!("dual distance of C(3, {n}, δ, 1): lower bound vs actual");
    Ok(Outcome {
        stdout: render(format, "table1", Some(&preamble), &table, &rows),
        ok: rows.iter().all(Table1Row::consistent),
    })
}

pub fn verify_cmd(format: Format, cfg: &SweepConfig) -> Result<Outcome, CliError> {
    let start = Instant::now();
    let mut families = Vec::new();
    for &f in &cfg.families {
        eprintln!("[verify] {f}: {} point(s)", cfg.points(f).len());
        let t = Instant::now();
        let r = verify::run_family(f, cfg);
        eprintln!(
            "[verify] {f}: {} checks, {} mismatch(es) in {:.1}s",
            r.checks,
            r.mismatches.len(),
            t.elapsed().as_secs_f64()
        );
        families.push(r);
    }
    eprintln!("[verify] done in {:.1}s", start.elapsed().as_secs_f64());
    let report = SweepReport { families };

    let mut table = Table::new(["family", "points", "checks", "mismatches", "status"]);
    for f in &report.families {
        let status = if f.passed() { "pass" } else { "FAIL" };
        table.push([f.family.to_string(), f.points.to_string(), f.checks.to_string(), f.mismatches.len().to_string(), status.into()]);
    }
    let mut stdout = render(format, "verify", None, &table, &report);
    if format == Format::Text {
        let mismatches: Vec<_> = report.families.iter().flat_map(|f| &f.mismatches).collect();
        if !mismatches.is_empty() {
            stdout.push_str("\nmismatches:\n");
            for x in mismatches {
                stdout.push_str(&format!(
                    "  {} q={} m={} input={}: expected {}, observed {} [{}]\n",
                    x.family,
                    x.q,
                    x.m,
                    x.input,
                    x.expected,
                    x.observed,
                    x.rules.join(",")
                ));
            }
        }
        let notes: Vec<_> = report.families.iter().flat_map(|f| &f.notes).collect();
        if !notes.is_empty() {
            stdout.push_str("\nnotes:\n");
            for n in notes {
                stdout.push_str(&format!("  {n}\n"));
            }
        }
    }
    Ok(Outcome {
        stdout,
        ok: report.passed(),
    })
}
