//! Acceptance run: one PASS/FAIL line per criterion with its elapsed time and
//! time limit. Runs without the libtest harness so that every line is shown;
//! the process exits nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use ginlab::annihilator::verify_homology_formula;
use ginlab::battery::{oracle_checks, run_corpus, Depth};
use ginlab::corpus::{generate, CorpusSpec};
use ginlab::groebner::{gin, GinOptions};
use ginlab::parse::{format_ideal, parse_ideal};
use ginlab::resolution::{betti_table, Convention};
use ginlab::rigidity::{check, CancellationTable, Params, Profile, Statement, Verdict};

const GIN_EXAMPLE: &str = "ring poly 3 QQ\nx1^2\nx2^2\nx1*x2*x3^2\nx3^5\n";
const CANCEL_EXAMPLE: &str = "ring poly 4 QQ\nx1^3\nx1^2*x2\nx1*x2^2\nx2^3\nx1^2*x3\nx1*x3*x4\n";
const FIRST_COLUMN_EXAMPLE: &str = "ring poly 4 QQ\nx1*x4^2\nx2^3\nx2^2*x3\n";

const LIMIT_GIN: Duration = Duration::from_secs(10);
const LIMIT_CANCEL: Duration = Duration::from_secs(30);
const LIMIT_FIRST_COLUMN: Duration = Duration::from_secs(60);
const LIMIT_ORACLES: Duration = Duration::from_secs(600);
const LIMIT_BATTERY: Duration = Duration::from_secs(600);
const LIMIT_FORMULA: Duration = Duration::from_secs(600);
const LIMIT_DETERMINISM: Duration = Duration::from_secs(600);

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cells(table: &ginlab::resolution::BettiTable) -> Vec<(usize, u32, u64)> {
    table.entries().collect()
}

fn gin_example() -> Outcome {
    let ideal = parse_ideal(GIN_EXAMPLE).map_err(|e| e.to_string())?;
    let g = gin(&ideal, &GinOptions::default()).map_err(|e| e.to_string())?;
    let text = format_ideal(&g.ideal.to_ideal());
    let expected = "ring poly 3 QQ degrevlex\nx1^2\nx1*x2\nx2^3\nx2^2*x3^2\nx1*x3^4\nx2*x3^5\nx3^6\n";
    ensure(text == expected, || format!("got\n{text}"))?;
    ensure(g.certificate.agreed && g.certificate.strongly_stable, || "certificate incomplete".into())?;
    Ok("gin(I) = (x1^2, x1x2, x2^3, x2^2x3^2, x1x3^4, x2x3^5, x3^6)".into())
}

fn cancellation_example() -> Outcome {
    let ideal = parse_ideal(CANCEL_EXAMPLE).map_err(|e| e.to_string())?;
    let pr = Profile::new(&ideal, &GinOptions::default()).map_err(|e| e.to_string())?;
    let b = pr.betti().to_convention(Convention::Ideal);
    let g = pr.gin_betti().to_convention(Convention::Ideal);
    let want_b = vec![(0, 3, 6), (1, 4, 6), (1, 5, 1), (2, 5, 1), (2, 6, 1)];
    let want_g = vec![(0, 3, 6), (0, 4, 1), (1, 4, 7), (1, 5, 2), (2, 5, 2), (2, 6, 1)];
    ensure(cells(&b) == want_b, || format!("β(I):\n{}", b.render()))?;
    ensure(cells(&g) == want_g, || format!("β(gin I):\n{}", g.render()))?;
    let c = pr.cancellation().map_err(|e| e.to_string())?;
    let got: Vec<_> = c.entries().collect();
    ensure(got == vec![(1, 4, 1), (2, 5, 1)], || format!("cancellation numbers {got:?}"))?;
    let again = CancellationTable::from_tables(pr.betti(), pr.gin_betti()).map_err(|e| e.to_string())?;
    ensure(again == c, || "cancellation table not reproducible".into())?;
    Ok("both resolutions cell-for-cell; c_{1,4} = c_{2,5} = 1, all others 0".into())
}

fn first_column_example() -> Outcome {
    let ideal = parse_ideal(FIRST_COLUMN_EXAMPLE).map_err(|e| e.to_string())?;
    let pr = Profile::new(&ideal, &GinOptions::default()).map_err(|e| e.to_string())?;
    let (b, g) = (pr.betti(), pr.gin_betti());
    for (i, j, vb, vg) in [(2, 6, 2, 2), (3, 7, 1, 1), (1, 5, 0, 1)] {
        ensure(b.get(i, j) == vb && g.get(i, j) == vg, || {
            format!("β_{{{i},{j}}}: {} vs {} (expected {vb} vs {vg})", b.get(i, j), g.get(i, j))
        })?;
    }
    let r = check(
        &pr,
        Statement::Rigidgin,
        Params {
            i: Some(2),
            k: Some(4),
            ..Params::default()
        },
    )
    .map_err(|e| e.to_string())?;
    ensure(r.verdict == Verdict::Holds, || r.render())?;
    Ok("β_{2,6} = 2, β_{3,7} = 1 on both, β_{1,5}: 0 vs 1; rigidgin (2,4) holds".into())
}

fn oracles() -> Outcome {
    let entries = generate(&CorpusSpec::default());
    let opts = GinOptions::default();
    let mut counts = std::collections::BTreeMap::<&str, usize>::new();
    let mut failures = Vec::new();
    for e in &entries {
        let pr = Profile::new(&e.ideal, &opts).map_err(|err| format!("entry {}: {err}", e.index))?;
        for c in oracle_checks(&pr).map_err(|err| format!("entry {}: {err}", e.index))? {
            *counts.entry(c.name).or_default() += 1;
            if !c.passed {
                failures.push(format!("entry {} {}: {}", e.index, c.name, c.detail));
            }
        }
    }
    ensure(failures.is_empty(), || failures.join("\n"))?;
    for name in ["ek=bigatti=koszul", "alpha-direct=gin", "ahh=cartan"] {
        ensure(counts.get(name).copied().unwrap_or(0) > 0, || format!("no {name} comparisons"))?;
    }
    ensure(counts["alpha-direct=gin"] == entries.len(), || "alpha not compared on every entry".into())?;
    let detail: Vec<String> = counts.iter().map(|(k, v)| format!("{k} ×{v}")).collect();
    Ok(format!("{} ideals, {}", entries.len(), detail.join(", ")))
}

fn battery() -> Outcome {
    let spec = CorpusSpec::default();
    let out = run_corpus(&spec, &GinOptions::default(), Depth::Auto, 1);
    let s = &out.summary;
    let mut problems = Vec::new();
    for e in out.entries.iter().filter(|e| !e.passed()) {
        problems.push(format!("entry {}: {:?}", e.index, e.error));
        for r in &e.failures {
            problems.push(format!("  {}", r.summary_line()));
        }
    }
    ensure(problems.is_empty(), || problems.join("\n"))?;
    let deep = out.entries.iter().filter(|e| e.outcome.as_ref().is_some_and(|o| o.deep)).count();
    Ok(format!(
        "{} ideals, {} holds, {} vacuous, 0 violated; deep statements on {deep} ideals (exterior or n ≤ {})",
        s.entries,
        s.reports.holds,
        s.reports.vacuous,
        Depth::AUTO_MAX_VARS
    ))
}

fn formulas() -> Outcome {
    let spec = CorpusSpec {
        count: 20,
        seed: 77,
        min_vars: 2,
        max_vars: 4,
        exterior_share: 1.0,
        ..CorpusSpec::default()
    };
    let mut ideals = vec![parse_ideal(GIN_EXAMPLE).map_err(|e| e.to_string())?];
    ideals.extend(generate(&spec).into_iter().map(|e| e.ideal));
    let mut relations = BTreeSet::new();
    let mut total = 0;
    for (k, ideal) in ideals.iter().enumerate() {
        let report = verify_homology_formula(ideal, 0).map_err(|e| format!("ideal {k}: {e}"))?;
        if let Some(c) = report.failures().next() {
            return Err(format!(
                "ideal {k} cell {} i={} p={} k={}: {} ≠ {}\n{}",
                c.relation,
                c.i,
                c.p,
                c.k,
                c.lhs,
                c.rhs,
                format_ideal(ideal)
            ));
        }
        total += report.cells.len();
        relations.extend(report.cells.iter().map(|c| c.relation));
    }
    for r in ["closed", "total", "recurrence-first", "recurrence", "base", "betti", "cancellation"] {
        ensure(relations.contains(r), || format!("no {r} cells"))?;
    }
    Ok(format!("{} ideals, {total} cells over {} relations", ideals.len(), relations.len()))
}

fn determinism() -> Outcome {
    let opts = GinOptions {
        seed: 11,
        ..GinOptions::default()
    };
    for text in [GIN_EXAMPLE, CANCEL_EXAMPLE, FIRST_COLUMN_EXAMPLE] {
        let ideal = parse_ideal(text).map_err(|e| e.to_string())?;
        let a = gin(&ideal, &opts).map_err(|e| e.to_string())?;
        let b = gin(&ideal, &opts).map_err(|e| e.to_string())?;
        ensure(a.ideal == b.ideal && a.certificate.matrices == b.certificate.matrices, || {
            "gin differs between runs".into()
        })?;
        let ta = betti_table(&ideal, Convention::Quotient, 0).map_err(|e| e.to_string())?;
        let tb = betti_table(&ideal, Convention::Quotient, 0).map_err(|e| e.to_string())?;
        ensure(ta.render() == tb.render(), || "Betti table differs between runs".into())?;
    }
    let spec = CorpusSpec {
        count: 12,
        max_vars: 3,
        ..CorpusSpec::default()
    };
    let digest = |jobs| {
        run_corpus(&spec, &opts, Depth::Auto, jobs)
            .entries
            .iter()
            .map(|e| {
                let lines: Vec<String> = e
                    .outcome
                    .iter()
                    .flat_map(|o| o.reports.iter().map(|r| r.render()))
                    .collect();
                format!("{}\n{}{}", e.index, e.ideal, lines.concat())
            })
            .collect::<String>()
    };
    let (one, three) = (digest(1), digest(3));
    ensure(one == three, || "corpus reports depend on the number of workers".into())?;
    ensure(one == digest(1), || "corpus reports differ between runs".into())?;
    Ok("gin, Betti tables and a 12-ideal battery identical across runs and worker counts".into())
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 gin of the three-variable example", LIMIT_GIN, gin_example),
        ("2 cancellation example", LIMIT_CANCEL, cancellation_example),
        ("3 first-column example", LIMIT_FIRST_COLUMN, first_column_example),
        ("4 oracle equivalences on the corpus", LIMIT_ORACLES, oracles),
        ("5 statement battery on the corpus", LIMIT_BATTERY, battery),
        ("6 homology formulas", LIMIT_FORMULA, formulas),
        ("7 determinism", LIMIT_DETERMINISM, determinism),
    ];
    let mut failed = 0;
    for (name, limit, f) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let result = result.and_then(|d| {
            if elapsed <= limit {
                Ok(d)
            } else {
                Err(format!("too slow: {d}"))
            }
        });
        let (tag, detail) = match &result {
            Ok(d) => ("PASS", d.clone()),
            Err(e) => {
                failed += 1;
                ("FAIL", e.clone())
            }
        };
        println!(
            "{tag} criterion {name}: {:.2} s (limit {} s): {detail}",
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
