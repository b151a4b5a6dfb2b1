//! Oracle cross-checks and the statement battery, for one ideal or a whole
//! random corpus.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use serde::Serialize;

use crate::annihilator::annihilators_of_stable;
use crate::corpus::{generate, CorpusEntry, CorpusSpec, Family};
use crate::groebner::GinOptions;
use crate::ideal::{GradedIdeal, MonomialIdeal};
use crate::parse::format_ideal;
use crate::resolution::{ahh_betti, bigatti_betti, cartan_betti, default_imax, ek_betti, koszul_betti, Convention};
use crate::rigidity::{check_all, Profile, RigidityReport, Tally};
use crate::ring::{RingKind, TermOrder};
use crate::Result;

/// Agreement of two independent computations of the same quantity.
#[derive(Clone, Debug, Serialize)]
pub struct OracleCheck {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

impl OracleCheck {
    fn new(name: &'static str, passed: bool, detail: impl FnOnce() -> String) -> OracleCheck {
        OracleCheck {
            name,
            passed,
            detail: if passed { String::new() } else { detail() },
        }
    }
}

/// Which statements run: the table-based ones only, all of them, or all of
/// them where homology of partial sequences is cheap (exterior algebras and
/// polynomial rings in at most [`Depth::AUTO_MAX_VARS`] variables).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Depth {
    Tables,
    Auto,
    Full,
}

impl Depth {
    pub const AUTO_MAX_VARS: usize = 3;

    pub fn deep_for(self, ideal: &GradedIdeal) -> bool {
        match self {
            Depth::Tables => false,
            Depth::Full => true,
            Depth::Auto => ideal.ring().is_exterior() || ideal.ring().n() <= Depth::AUTO_MAX_VARS,
        }
    }
}

fn stable_inputs(pr: &Profile) -> Vec<(&'static str, MonomialIdeal)> {
    let mut out = vec![("gin", pr.gin().ideal.clone())];
    if let Some(m) = pr.ideal().as_monomial_ideal() {
        if m.is_strongly_stable() {
            out.push(("input", m));
        }
    }
    out
}

/// Closed formulas against homology for the strongly stable ideals at hand
/// (gin(I), and I itself when it is strongly stable), annihilator numbers
/// from their definition against the gin statistics, and gin(I) = I for
/// strongly stable I.
pub fn oracle_checks(pr: &Profile) -> Result<Vec<OracleCheck>> {
    let mut out = Vec::new();
    let n = pr.n();
    for (which, m) in stable_inputs(pr) {
        match pr.kind() {
            RingKind::Polynomial => {
                let ek = ek_betti(&m, Convention::Quotient)?;
                let big = bigatti_betti(&m)?;
                let kos = koszul_betti(&m.to_ideal(), Convention::Quotient)?;
                out.push(OracleCheck::new("ek=bigatti=koszul", ek == big && big == kos, || {
                    format!("{which}: ek\n{}bigatti\n{}koszul\n{}", ek.render(), big.render(), kos.render())
                }));
            }
            RingKind::Exterior => {
                let imax = default_imax(n);
                let ahh = ahh_betti(&m, Convention::Quotient, imax)?;
                let cartan = cartan_betti(&m.to_ideal(), Convention::Quotient, imax)?;
                out.push(OracleCheck::new("ahh=cartan", ahh == cartan, || {
                    format!("{which}: ahh\n{}cartan\n{}", ahh.render(), cartan.render())
                }));
            }
        }
        if which == "input" {
            let fixed = m.with_ring(m.ring().with_order(TermOrder::DegRevLex)) == pr.gin().ideal;
            out.push(OracleCheck::new("gin-fixes-stable", fixed, || {
                format!("gin of a strongly stable ideal differs: {}", format_ideal(&pr.gin().ideal.to_ideal()))
            }));
        }
    }
    let direct = pr.alpha()?;
    let from_gin = annihilators_of_stable(&pr.gin().ideal)?;
    out.push(OracleCheck::new("alpha-direct=gin", direct.same_values(&from_gin), || {
        format!("direct\n{}from gin\n{}", direct.render(), from_gin.render())
    }));
    Ok(out)
}

/// Oracles and statement reports for one ideal.
#[derive(Clone, Debug, Serialize)]
pub struct IdealOutcome {
    pub oracles: Vec<OracleCheck>,
    pub tally: Tally,
    pub deep: bool,
    #[serde(skip)]
    pub reports: Vec<RigidityReport>,
}

impl IdealOutcome {
    pub fn passed(&self) -> bool {
        self.tally.passed() && self.oracles.iter().all(|o| o.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RigidityReport> {
        self.reports.iter().filter(|r| !r.verdict.passed())
    }
}

pub fn check_ideal(ideal: &GradedIdeal, opts: &GinOptions, depth: Depth) -> Result<IdealOutcome> {
    let pr = Profile::new(ideal, opts)?;
    let deep = depth.deep_for(ideal);
    let oracles = oracle_checks(&pr)?;
    let reports = check_all(&pr, deep)?;
    Ok(IdealOutcome {
        oracles,
        tally: Tally::of(&reports),
        deep,
        reports,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryOutcome {
    pub index: usize,
    pub family: Family,
    pub kind: RingKind,
    pub n: usize,
    pub ideal: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub outcome: Option<IdealOutcome>,
    /// Reports that did not pass, with their witnesses.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<RigidityReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl EntryOutcome {
    pub fn passed(&self) -> bool {
        self.error.is_none() && self.outcome.as_ref().is_some_and(IdealOutcome::passed)
    }
}

pub fn check_entry(entry: &CorpusEntry, opts: &GinOptions, depth: Depth) -> EntryOutcome {
    let result = check_ideal(&entry.ideal, opts, depth);
    let (outcome, error) = match result {
        Ok(o) => (Some(o), None),
        Err(e) => (None, Some(e.to_string())),
    };
    EntryOutcome {
        index: entry.index,
        family: entry.family,
        kind: entry.ideal.ring().kind(),
        n: entry.ideal.ring().n(),
        ideal: format_ideal(&entry.ideal),
        failures: outcome.as_ref().map(|o| o.failures().cloned().collect()).unwrap_or_default(),
        outcome,
        error,
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CorpusSummary {
    pub entries: usize,
    pub passed: usize,
    pub errors: usize,
    pub oracle_failures: usize,
    pub reports: Tally,
}

#[derive(Clone, Debug, Serialize)]
pub struct CorpusOutcome {
    pub spec: CorpusSpec,
    pub seed: u64,
    pub depth: Depth,
    pub entries: Vec<EntryOutcome>,
    pub summary: CorpusSummary,
}

impl CorpusOutcome {
    pub fn passed(&self) -> bool {
        self.summary.passed == self.summary.entries
    }
}

/// Checks every corpus entry on `jobs` worker threads. The result is in
/// entry order and does not depend on scheduling.
pub fn run_corpus(spec: &CorpusSpec, opts: &GinOptions, depth: Depth, jobs: usize) -> CorpusOutcome {
    let entries = generate(spec);
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<EntryOutcome>>> = Mutex::new(vec![None; entries.len()]);
    std::thread::scope(|s| {
        for _ in 0..jobs.clamp(1, entries.len().max(1)) {
            s.spawn(|| loop {
                let k = next.fetch_add(1, Ordering::SeqCst);
                let Some(e) = entries.get(k) else { break };
                let out = check_entry(e, opts, depth);
                slots.lock().expect("no worker panicked")[k] = Some(out);
            });
        }
    });
    let entries: Vec<EntryOutcome> = slots
        .into_inner()
        .expect("no worker panicked")
        .into_iter()
        .map(|o| o.expect("every entry checked"))
        .collect();
    let mut summary = CorpusSummary {
        entries: entries.len(),
        ..CorpusSummary::default()
    };
    for e in &entries {
        summary.passed += e.passed() as usize;
        summary.errors += e.error.is_some() as usize;
        if let Some(o) = &e.outcome {
            summary.oracle_failures += o.oracles.iter().filter(|c| !c.passed).count();
            let t = &o.tally;
            summary.reports.holds += t.holds;
            summary.reports.vacuous += t.vacuous;
            summary.reports.violated += t.violated;
            summary.reports.premise_violated += t.premise_violated;
        }
    }
    CorpusOutcome {
        spec: spec.clone(),
        seed: opts.seed,
        depth,
        entries,
        summary,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_corpus_is_clean_and_deterministic() {
        let spec = CorpusSpec {
            count: 8,
            max_vars: 3,
            max_degree: 3,
            ..CorpusSpec::default()
        };
        let opts = GinOptions::default();
        let a = run_corpus(&spec, &opts, Depth::Auto, 3);
        assert!(a.passed(), "{:?}", a.summary);
        let b = run_corpus(&spec, &opts, Depth::Auto, 1);
        let ja: Vec<_> = a.entries.iter().map(|e| (e.index, e.outcome.as_ref().map(|o| o.tally))).collect();
        let jb: Vec<_> = b.entries.iter().map(|e| (e.index, e.outcome.as_ref().map(|o| o.tally))).collect();
        assert_eq!(ja, jb);
    }
}
