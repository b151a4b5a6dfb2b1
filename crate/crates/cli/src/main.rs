//! `ginlab`: generic initial ideals, Betti tables, annihilator and
//! cancellation numbers, and rigidity checks for ideal files.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 computation failure,
//! 3 a checked statement or formula failed.

use std::fmt::Write as _;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ginlab::annihilator::{annihilators_from_gin, generic_annihilators_direct, verify_homology_formula};
use ginlab::battery::{run_corpus, CorpusOutcome, Depth};
use ginlab::corpus::{generate, CorpusSpec};
use ginlab::groebner::{gin, GinOptions, GinResult};
use ginlab::ideal::{lex_ideal, GradedIdeal};
use ginlab::parse::{format_ideal, parse_ideal};
use ginlab::resolution::{betti_table, default_imax, Convention};
use ginlab::rigidity::{check, check_all, statement_reports, Params, Profile, RigidityReport, Statement, Tally, Target};
use ginlab::ring::{RingKind, TermOrder};
use ginlab::Error;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "ginlab", version, about = "Generic initial ideals and the rigidity of graded Betti numbers")]
struct Cli {
    /// Seed for the random coordinate changes.
    #[arg(long, global = true, env = "GINLAB_SEED", default_value_t = 0)]
    seed: u64,
    /// Entries of the random matrices are drawn from [-B, B].
    #[arg(long, global = true, default_value_t = 1000, value_name = "B")]
    coeff_bound: i64,
    /// Independent coordinate changes that must agree.
    #[arg(long, global = true, default_value_t = 2)]
    trials: usize,
    /// Times the coefficient bound may double when the trials disagree.
    #[arg(long, global = true, default_value_t = 4)]
    max_doublings: u32,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graded Betti table of R/I or I.
    Betti {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = ConventionArg::Quotient)]
        convention: ConventionArg,
        /// Largest homological degree over an exterior algebra [default: n + 3].
        #[arg(long)]
        imax: Option<usize>,
    },
    /// Generic initial ideal with its certificate.
    Gin {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = OrderArg::Degrevlex)]
        order: OrderArg,
    },
    /// Generic annihilator numbers α_{p,k}.
    Alpha {
        file: PathBuf,
        /// From a generic sequence directly, from the generic initial ideal,
        /// or both with a comparison.
        #[arg(long, value_enum, default_value_t = SourceArg::Direct)]
        source: SourceArg,
    },
    /// Betti tables of I and gin(I) and the cancellation numbers between them.
    Cancel { file: PathBuf },
    /// The lexsegment ideal with the Hilbert function of I.
    Lex { file: PathBuf },
    /// Checks rigidity statements.
    Check(CheckArgs),
    /// Checks the homology formulas for a generic sequence.
    Formula {
        file: PathBuf,
        /// Print every cell, not only the failing ones.
        #[arg(long)]
        verbose: bool,
    },
    /// Generates a random corpus of ideals, optionally checking all statements on it.
    Corpus(CorpusArgs),
    /// Lists the statement ids accepted by `check --statement`.
    Statements,
}

#[derive(Args)]
struct CheckArgs {
    file: PathBuf,
    /// Statement id; see `ginlab statements`.
    #[arg(long, required_unless_present = "all", conflicts_with = "all")]
    statement: Option<String>,
    /// Every applicable statement over the whole window.
    #[arg(long)]
    all: bool,
    #[arg(long)]
    i: Option<usize>,
    /// Strand index k; for `rigid` the internal degree j.
    #[arg(long)]
    k: Option<u32>,
    #[arg(long)]
    q: Option<usize>,
    /// Comparison ideal for `trans`: lex, gin-lex or gin-degrevlex.
    #[arg(long)]
    target: Option<String>,
    /// Which statements `--all` runs.
    #[arg(long, value_enum, default_value_t = DepthArg::Auto)]
    depth: DepthArg,
    /// Print every cell of every report.
    #[arg(long)]
    verbose: bool,
}

#[derive(Args)]
struct CorpusArgs {
    /// Corpus description as JSON; flags override its fields.
    #[arg(long)]
    spec: Option<PathBuf>,
    #[arg(long)]
    count: Option<usize>,
    /// Seed of the corpus itself (the global --seed drives the coordinate changes).
    #[arg(long)]
    corpus_seed: Option<u64>,
    /// Fixes the number of variables.
    #[arg(long, conflicts_with_all = ["min_vars", "max_vars"])]
    n: Option<usize>,
    #[arg(long)]
    min_vars: Option<usize>,
    #[arg(long)]
    max_vars: Option<usize>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    max_generators: Option<usize>,
    #[arg(long, value_enum)]
    kind: Option<KindArg>,
    /// Restricts the corpus to these families (repeatable).
    #[arg(long, value_enum)]
    family: Vec<FamilyArg>,
    /// Run oracles and all statements on every ideal.
    #[arg(long)]
    check_all: bool,
    #[arg(long, value_enum, default_value_t = DepthArg::Auto)]
    depth: DepthArg,
    /// Worker threads [default: available parallelism].
    #[arg(long)]
    jobs: Option<usize>,
    /// Writes entry-NNN.ideal files (and report.json with --check-all) here.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    Quotient,
    Ideal,
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    Degrevlex,
    Deglex,
    Lex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SourceArg {
    Direct,
    Gin,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum DepthArg {
    Tables,
    Auto,
    Full,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Poly,
    Ext,
    Mixed,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Monomial,
    Binomial,
    Dense,
    Stable,
}

impl From<ConventionArg> for Convention {
    fn from(c: ConventionArg) -> Convention {
        match c {
            ConventionArg::Quotient => Convention::Quotient,
            ConventionArg::Ideal => Convention::Ideal,
        }
    }
}

impl From<OrderArg> for TermOrder {
    fn from(o: OrderArg) -> TermOrder {
        match o {
            OrderArg::Degrevlex => TermOrder::DegRevLex,
            OrderArg::Deglex => TermOrder::DegLex,
            OrderArg::Lex => TermOrder::Lex,
        }
    }
}

impl From<DepthArg> for Depth {
    fn from(d: DepthArg) -> Depth {
        match d {
            DepthArg::Tables => Depth::Tables,
            DepthArg::Auto => Depth::Auto,
            DepthArg::Full => Depth::Full,
        }
    }
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::GenericityFailure(_) | Error::Internal(_) | Error::SingularMatrix | Error::NotMonomial => {
                Failure::Compute(e.to_string())
            }
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// What a command printed and its exit code.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, code: 0 }
    }

    fn checked(text: String, passed: bool) -> Output {
        Output {
            text,
            code: if passed { 0 } else { 3 },
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn read_ideal(path: &Path) -> Result<GradedIdeal, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| usage(format!("reading standard input: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?
    };
    parse_ideal(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

impl Cli {
    fn gin_options(&self) -> GinOptions {
        GinOptions {
            seed: self.seed,
            coeff_bound: self.coeff_bound,
            trials: self.trials,
            max_doublings: self.max_doublings,
            ..GinOptions::default()
        }
    }

    fn run(&self) -> Result<Output, Failure> {
        match &self.command {
            Command::Betti { file, convention, imax } => {
                let ideal = read_ideal(file)?;
                let imax = imax.unwrap_or_else(|| default_imax(ideal.ring().n()));
                let table = betti_table(&ideal, (*convention).into(), imax)?;
                Ok(Output::ok(if self.json { to_json(&table) } else { table.render() }))
            }
            Command::Gin { file, order } => {
                let ideal = read_ideal(file)?;
                let opts = GinOptions {
                    order: (*order).into(),
                    ..self.gin_options()
                };
                let g = gin(&ideal, &opts)?;
                Ok(Output::ok(if self.json { to_json(&GinJson::new(&g)) } else { render_gin(&g) }))
            }
            Command::Alpha { file, source } => self.alpha(&read_ideal(file)?, *source),
            Command::Cancel { file } => self.cancel(&read_ideal(file)?),
            Command::Lex { file } => {
                let ideal = read_ideal(file)?;
                let lex = lex_ideal(&ideal)?.to_ideal();
                Ok(Output::ok(if self.json {
                    to_json(&IdealJson::new(&lex))
                } else {
                    format_ideal(&lex)
                }))
            }
            Command::Check(args) => self.check(args),
            Command::Formula { file, verbose } => self.formula(&read_ideal(file)?, *verbose),
            Command::Corpus(args) => self.corpus(args),
            Command::Statements => {
                let mut s = String::new();
                for st in Statement::ALL {
                    let kinds = match (st.applies_to(RingKind::Polynomial), st.applies_to(RingKind::Exterior)) {
                        (true, true) => "poly, ext",
                        (true, false) => "poly",
                        _ => "ext",
                    };
                    let _ = writeln!(s, "{:<14} {:<10} {}", st.id(), kinds, st.summary());
                }
                Ok(Output::ok(s))
            }
        }
    }

    fn alpha(&self, ideal: &GradedIdeal, source: SourceArg) -> Result<Output, Failure> {
        let opts = self.gin_options();
        let direct = match source {
            SourceArg::Direct | SourceArg::Both => Some(generic_annihilators_direct(ideal, &opts)?),
            SourceArg::Gin => None,
        };
        let from_gin = match source {
            SourceArg::Gin | SourceArg::Both => Some(annihilators_from_gin(ideal, &opts)?),
            SourceArg::Direct => None,
        };
        let agree = match (&direct, &from_gin) {
            (Some(a), Some(b)) => Some(a.same_values(b)),
            _ => None,
        };
        let text = if self.json {
            #[derive(Serialize)]
            struct AlphaJson<'a, T> {
                #[serde(skip_serializing_if = "Option::is_none")]
                direct: Option<&'a T>,
                #[serde(skip_serializing_if = "Option::is_none")]
                gin: Option<&'a T>,
                #[serde(skip_serializing_if = "Option::is_none")]
                agree: Option<bool>,
            }
            to_json(&AlphaJson {
                direct: direct.as_ref(),
                gin: from_gin.as_ref(),
                agree,
            })
        } else {
            let mut s = String::new();
            if let Some(t) = &direct {
                if source == SourceArg::Both {
                    s.push_str("direct\n");
                }
                s.push_str(&t.render());
            }
            if let Some(t) = &from_gin {
                if source == SourceArg::Both {
                    s.push_str("from gin\n");
                }
                s.push_str(&t.render());
            }
            if let Some(a) = agree {
                let _ = writeln!(s, "{}", if a { "agree" } else { "differ" });
            }
            s
        };
        Ok(Output::checked(text, agree != Some(false)))
    }

    fn cancel(&self, ideal: &GradedIdeal) -> Result<Output, Failure> {
        if ideal.ring().is_exterior() {
            return Err(usage("cancellation numbers are defined over a polynomial ring"));
        }
        let pr = Profile::new(ideal, &self.gin_options())?;
        let b = pr.betti().to_convention(Convention::Ideal);
        let g = pr.gin_betti().to_convention(Convention::Ideal);
        let c = pr.cancellation()?;
        let text = if self.json {
            #[derive(Serialize)]
            struct CancelJson<'a, B, C> {
                ideal_betti: &'a B,
                gin_betti: &'a B,
                cancellation: &'a C,
            }
            to_json(&CancelJson {
                ideal_betti: &b,
                gin_betti: &g,
                cancellation: &c,
            })
        } else {
            format!("I\n{}gin(I)\n{}{}", b.render(), g.render(), c.render())
        };
        Ok(Output::ok(text))
    }

    fn check(&self, args: &CheckArgs) -> Result<Output, Failure> {
        let ideal = read_ideal(&args.file)?;
        let target = match &args.target {
            Some(t) => Some(Target::from_id(t).ok_or_else(|| usage(format!("unknown target '{t}'")))?),
            None => None,
        };
        let pr = Profile::new(&ideal, &self.gin_options())?;
        let reports: Vec<RigidityReport> = match &args.statement {
            None => check_all(&pr, Depth::from(args.depth).deep_for(&ideal))?,
            Some(id) => {
                let st = Statement::from_id(id)
                    .ok_or_else(|| usage(format!("unknown statement '{id}'; see `ginlab statements`")))?;
                if args.i.is_none() && args.k.is_none() && args.q.is_none() {
                    let all = statement_reports(&pr, st)?;
                    match target {
                        Some(t) => all.into_iter().filter(|r| r.params.target == Some(t)).collect(),
                        None => all,
                    }
                } else {
                    let params = Params {
                        i: args.i,
                        k: args.k,
                        q: args.q,
                        target,
                    };
                    vec![check(&pr, st, params)?]
                }
            }
        };
        let tally = Tally::of(&reports);
        let text = if self.json {
            #[derive(Serialize)]
            struct CheckJson<'a> {
                ideal: String,
                seed: u64,
                reports: &'a [RigidityReport],
                tally: Tally,
            }
            to_json(&CheckJson {
                ideal: format_ideal(&ideal),
                seed: self.seed,
                reports: &reports,
                tally,
            })
        } else {
            let mut s = String::new();
            for r in &reports {
                if args.verbose {
                    s.push_str(&r.render());
                } else {
                    let _ = writeln!(s, "{}", r.summary_line());
                }
            }
            let _ = writeln!(s, "{}", render_tally(&tally));
            s
        };
        Ok(Output::checked(text, tally.passed()))
    }

    fn formula(&self, ideal: &GradedIdeal, verbose: bool) -> Result<Output, Failure> {
        let report = verify_homology_formula(ideal, self.seed)?;
        let text = if self.json {
            to_json(&report)
        } else {
            let mut s = String::new();
            for c in report.cells.iter().filter(|c| verbose || !c.holds()) {
                let _ = writeln!(
                    s,
                    "{} i={} p={} k={}: {} {} {}",
                    c.relation,
                    c.i,
                    c.p,
                    c.k,
                    c.lhs,
                    if c.holds() { "=" } else { "≠" },
                    c.rhs
                );
            }
            let failures = report.failures().count();
            let _ = writeln!(
                s,
                "{} cells in window i ≤ {}, k ≤ {}: {}",
                report.cells.len(),
                report.window.imax,
                report.window.kmax,
                if failures == 0 { "all hold".to_string() } else { format!("{failures} fail") }
            );
            s
        };
        Ok(Output::checked(text, report.holds()))
    }

    fn corpus(&self, args: &CorpusArgs) -> Result<Output, Failure> {
        let spec = corpus_spec(args)?;
        if let Some(dir) = &args.out {
            std::fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
        }
        if !args.check_all {
            let entries = generate(&spec);
            let mut text = String::new();
            for e in &entries {
                let body = format_ideal(&e.ideal);
                let _ = write!(text, "# entry {} {}\n{}\n", e.index, e.family.name(), body);
                if let Some(dir) = &args.out {
                    write_file(&dir.join(format!("entry-{:03}.ideal", e.index)), &body)?;
                }
            }
            if self.json {
                let ideals: Vec<String> = entries.iter().map(|e| format_ideal(&e.ideal)).collect();
                text = to_json(&ideals);
            }
            return Ok(Output::ok(text));
        }
        let jobs = args
            .jobs
            .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
        let outcome = run_corpus(&spec, &self.gin_options(), args.depth.into(), jobs);
        if let Some(dir) = &args.out {
            for e in &outcome.entries {
                write_file(&dir.join(format!("entry-{:03}.ideal", e.index)), &e.ideal)?;
            }
            write_file(&dir.join("report.json"), &to_json(&outcome))?;
        }
        let text = if self.json { to_json(&outcome) } else { render_corpus(&outcome) };
        let sum = &outcome.summary;
        let violated = sum.oracle_failures > 0 || !sum.reports.passed();
        Ok(Output {
            text,
            code: match (violated, sum.errors > 0) {
                (true, _) => 3,
                (false, true) => 2,
                (false, false) => 0,
            },
        })
    }
}

fn write_file(path: &Path, body: &str) -> Result<(), Failure> {
    std::fs::write(path, body).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn corpus_spec(args: &CorpusArgs) -> Result<CorpusSpec, Failure> {
    let mut spec = match &args.spec {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| usage(format!("{}: {e}", path.display())))?
        }
        None => CorpusSpec::default(),
    };
    if let Some(v) = args.count {
        spec.count = v;
    }
    if let Some(v) = args.corpus_seed {
        spec.seed = v;
    }
    if let Some(n) = args.n {
        spec.min_vars = n;
        spec.max_vars = n;
    }
    if let Some(v) = args.min_vars {
        spec.min_vars = v;
    }
    if let Some(v) = args.max_vars {
        spec.max_vars = v;
    }
    if let Some(v) = args.max_degree {
        spec.max_degree = v;
    }
    if let Some(v) = args.max_generators {
        spec.max_generators = v;
    }
    match args.kind {
        Some(KindArg::Poly) => spec.exterior_share = 0.0,
        Some(KindArg::Ext) => spec.exterior_share = 1.0,
        Some(KindArg::Mixed) | None => {}
    }
    if !args.family.is_empty() {
        spec.weights = [0; 4];
        for f in &args.family {
            spec.weights[*f as usize] = 1;
        }
    }
    if spec.min_vars == 0 || spec.min_vars > spec.max_vars {
        return Err(usage("need 1 ≤ min-vars ≤ max-vars"));
    }
    if spec.max_degree == 0 || spec.max_generators == 0 {
        return Err(usage("max-degree and max-generators must be positive"));
    }
    if !(0.0..=1.0).contains(&spec.exterior_share) || spec.weights.iter().all(|&w| w == 0) {
        return Err(usage("exterior share must lie in [0, 1] and some family weight must be positive"));
    }
    Ok(spec)
}

fn render_tally(t: &Tally) -> String {
    format!(
        "holds {}, vacuous {}, violated {}, premise-violated {}",
        t.holds, t.vacuous, t.violated, t.premise_violated
    )
}

fn render_corpus(out: &CorpusOutcome) -> String {
    let mut s = String::new();
    for e in &out.entries {
        let status = match (&e.error, &e.outcome) {
            (Some(err), _) => format!("error: {err}"),
            (None, Some(o)) => format!(
                "{}{}, {}",
                if e.passed() { "ok" } else { "FAILED" },
                if o.deep { " (deep)" } else { "" },
                render_tally(&o.tally)
            ),
            (None, None) => "not run".into(),
        };
        let _ = writeln!(s, "entry {:03} {} n={} {}: {}", e.index, e.kind.tag(), e.n, e.family.name(), status);
        if let Some(o) = &e.outcome {
            for c in o.oracles.iter().filter(|c| !c.passed) {
                let _ = writeln!(s, "  oracle {} failed\n{}", c.name, c.detail);
            }
        }
        for r in &e.failures {
            let _ = writeln!(s, "  {}", r.summary_line());
        }
        if !e.passed() {
            for line in e.ideal.lines() {
                let _ = writeln!(s, "  | {line}");
            }
        }
    }
    let sum = &out.summary;
    let _ = writeln!(
        s,
        "{} of {} entries passed; {} errors, {} oracle failures; {}",
        sum.passed,
        sum.entries,
        sum.errors,
        sum.oracle_failures,
        render_tally(&sum.reports)
    );
    s
}

#[derive(Serialize)]
struct RingJson {
    kind: RingKind,
    n: usize,
    order: TermOrder,
}

#[derive(Serialize)]
struct IdealJson {
    ring: RingJson,
    generators: Vec<String>,
}

impl IdealJson {
    fn new(ideal: &GradedIdeal) -> IdealJson {
        let ring = ideal.ring();
        IdealJson {
            ring: RingJson {
                kind: ring.kind(),
                n: ring.n(),
                order: ring.order(),
            },
            generators: ideal.generators().iter().map(|g| ring.format_polynomial(g)).collect(),
        }
    }
}

#[derive(Serialize)]
struct GinJson<'a> {
    #[serde(flatten)]
    ideal: IdealJson,
    certificate: &'a ginlab::groebner::GinCertificate,
}

impl<'a> GinJson<'a> {
    fn new(g: &'a GinResult) -> GinJson<'a> {
        GinJson {
            ideal: IdealJson::new(&g.ideal.to_ideal()),
            certificate: &g.certificate,
        }
    }
}

fn render_gin(g: &GinResult) -> String {
    let c = &g.certificate;
    let mut s = format_ideal(&g.ideal.to_ideal());
    let _ = writeln!(
        s,
        "# certificate: seed {}, order {}, coefficient bound {}, {} trials {}, strongly stable: {}, attempts {}",
        c.seed,
        c.order.name(),
        c.coeff_bound,
        c.trials,
        if c.agreed { "agree" } else { "disagree" },
        c.strongly_stable,
        c.attempts
    );
    for (k, m) in c.matrices.iter().enumerate() {
        let _ = writeln!(s, "# matrix {}: {}", k + 1, serde_json::to_string(m).expect("serializable"));
    }
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match cli.run() {
        Ok(out) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.text.as_bytes()).and_then(|_| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(out.code)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(f: Failure) -> u8 {
        match f {
            Failure::Usage(_) => 1,
            Failure::Compute(_) => 2,
        }
    }

    #[test]
    fn errors_map_to_exit_codes() {
        assert_eq!(code(Error::GenericityFailure("x".into()).into()), 2);
        assert_eq!(code(Error::Internal("x".into()).into()), 2);
        assert_eq!(code(Error::SingularMatrix.into()), 2);
        assert_eq!(code(Error::NotHomogeneous { index: 0 }.into()), 1);
        assert_eq!(code(Error::Invalid("x".into()).into()), 1);
        assert_eq!(Output::checked(String::new(), false).code, 3);
        assert_eq!(Output::checked(String::new(), true).code, 0);
    }

    #[test]
    fn family_flags_set_weights_in_corpus_order() {
        let cli = Cli::try_parse_from(["ginlab", "corpus", "--family", "dense", "--family", "monomial", "--n", "3"]).unwrap();
        let Command::Corpus(args) = &cli.command else { panic!() };
        let spec = corpus_spec(args).unwrap_or_else(|_| panic!());
        assert_eq!(spec.weights, [1, 0, 1, 0]);
        assert_eq!((spec.min_vars, spec.max_vars), (3, 3));
    }

    #[test]
    fn command_line_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
