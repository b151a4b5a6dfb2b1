//! Verdicts for the rigidity statements that compare the Betti numbers of an
//! ideal with those of its generic initial ideal, and cancellation numbers.
//!
//! Every check is a function of a [`Profile`]: the Betti tables of R/I and
//! R/gin(I) over a finite window plus whatever else a statement needs
//! (component ideals, lexsegment ideals, annihilator numbers, homology of
//! partial generic sequences). "For all q" conclusions are checked inside
//! the window recorded in each report. For polynomial rings the window is
//! exhaustive: β_i vanishes for i > n and strands beyond reg(gin I) are zero.
//!
//! Betti cells use the quotient convention β_{i,j}(R/I) unless a statement
//! is phrased for ideals, in which case the cell quantity says so.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write;
use std::rc::Rc;

use serde::{Serialize, Serializer};

use crate::annihilator::{
    default_window, generic_annihilators_direct, index_set, maximal_ideal_images, partial_homology, AnnihilatorTable,
    GenericSequence, PartialHomology, Window,
};
use crate::error::{Error, Result};
use crate::groebner::{gin, GinOptions, GinResult};
use crate::ideal::{lex_ideal, GradedIdeal, MonomialIdeal};
use crate::linalg::binomial;
use crate::parse::format_ideal;
use crate::resolution::{
    betti_table, default_imax, has_linear_resolution, monomial_ideal_betti, BettiTable,
    Convention,
};
use crate::ring::{RingKind, TermOrder};

/// The statements that can be checked. Ids are stable and used by the CLI.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statement {
    Dominance,
    Rigidgin,
    Degthm,
    Generator,
    Dlinear,
    Linear,
    Componentwise,
    Cw,
    Why,
    Cancellation,
    Crigid,
    Clinear,
    PostClinear,
    Trans,
    Gcor,
    Rigid,
}

impl Statement {
    pub const ALL: [Statement; 16] = [
        Statement::Dominance,
        Statement::Rigidgin,
        Statement::Degthm,
        Statement::Generator,
        Statement::Dlinear,
        Statement::Linear,
        Statement::Componentwise,
        Statement::Cw,
        Statement::Why,
        Statement::Cancellation,
        Statement::Crigid,
        Statement::Clinear,
        Statement::PostClinear,
        Statement::Trans,
        Statement::Gcor,
        Statement::Rigid,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Statement::Dominance => "dominance",
            Statement::Rigidgin => "rigidgin",
            Statement::Degthm => "degthm",
            Statement::Generator => "generator",
            Statement::Dlinear => "dlinear",
            Statement::Linear => "linear",
            Statement::Componentwise => "componentwise",
            Statement::Cw => "cw",
            Statement::Why => "why",
            Statement::Cancellation => "cancellation",
            Statement::Crigid => "crigid",
            Statement::Clinear => "clinear",
            Statement::PostClinear => "post-clinear",
            Statement::Trans => "trans",
            Statement::Gcor => "gcor",
            Statement::Rigid => "rigid",
        }
    }

    pub fn from_id(s: &str) -> Option<Statement> {
        Statement::ALL.into_iter().find(|st| st.id() == s)
    }

    pub fn summary(self) -> &'static str {
        match self {
            Statement::Dominance => "β_{i,j}(R/I) ≤ β_{i,j}(R/gin I) everywhere",
            Statement::Rigidgin => "S: equality at (i, i+k) for some i > 1 gives equality at (q, q+k) for all q ≥ i",
            Statement::Degthm => "E: equality at (i, i+k) for some i > 1 gives equality at (q, q+k) for all q ≥ 1",
            Statement::Generator => "equality on the whole strand k iff equality at (1, k+1) and (1, k+2)",
            Statement::Dlinear => "strand k equal iff I<k> and I<k+1> linear iff equality at (1, k+1) and (1, k+2)",
            Statement::Linear => "I<k> linear iff I and gin I have equally many generators of degree k+1",
            Statement::Componentwise => "S: componentwise linear iff equality on strands up to the top generator degree",
            Statement::Cw => "E: componentwise linear iff the total Betti numbers agree at some i ≥ 1",
            Statement::Why => "S: β_{1,d0}(R/I) = β_{1,d0}(R/gin I) = Σ_j α_{j,d0-1} in the initial degree d0",
            Statement::Cancellation => "cancellation numbers exist, are nonnegative and match the δ-expression",
            Statement::Crigid => "c_{i,i+k} = 0 for some i ≥ 1 gives c_{q,q+k} = 0 for all q ≥ i",
            Statement::Clinear => "c_{i,i+k} = 0 for all i ≥ 1 iff I<k> linear",
            Statement::PostClinear => "I<k> linear transfers equalities to the adjacent cells",
            Statement::Trans => "rigidity transfers to Lex(I) and generic initial ideals in other orders",
            Statement::Gcor => "S: (m H_i(p))_{i+k} = 0 for all p < n gives (m H_{i+1}(p))_{i+k+1} = 0",
            Statement::Rigid => "E: δ_{i,p,j} = 0 for all p < n gives δ_{i+1,p,j+1} = 0",
        }
    }

    /// Whether the statement is defined for the ring kind.
    pub fn applies_to(self, kind: RingKind) -> bool {
        match self {
            Statement::Rigidgin
            | Statement::Componentwise
            | Statement::Why
            | Statement::Cancellation
            | Statement::Crigid
            | Statement::Clinear
            | Statement::PostClinear
            | Statement::Gcor => kind == RingKind::Polynomial,
            Statement::Degthm | Statement::Cw | Statement::Rigid => kind == RingKind::Exterior,
            _ => true,
        }
    }

    /// Statements that need homology of partial generic sequences.
    pub fn is_deep(self) -> bool {
        matches!(self, Statement::Gcor | Statement::Rigid | Statement::Cancellation)
    }
}

/// The comparison ideal of a transfer check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    Lex,
    GinLex,
    GinDegrevlex,
}

impl Target {
    pub const ALL: [Target; 3] = [Target::Lex, Target::GinLex, Target::GinDegrevlex];

    pub fn id(self) -> &'static str {
        match self {
            Target::Lex => "lex",
            Target::GinLex => "gin-lex",
            Target::GinDegrevlex => "gin-degrevlex",
        }
    }

    pub fn from_id(s: &str) -> Option<Target> {
        Target::ALL.into_iter().find(|t| t.id() == s || t.id().replace('-', "_") == s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    Eq,
    Le,
}

/// One compared quantity: `left` against `right`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cell {
    pub quantity: String,
    pub i: i64,
    pub j: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    pub left: i64,
    pub right: i64,
    pub relation: Relation,
}

impl Cell {
    fn new(quantity: &str, i: i64, j: i64, left: i64, right: i64, relation: Relation) -> Cell {
        Cell {
            quantity: quantity.to_string(),
            i,
            j,
            p: None,
            left,
            right,
            relation,
        }
    }

    /// A predicate recorded as a cell: left is 1 when it is true.
    fn flag(quantity: &str, i: i64, j: i64, value: bool) -> Cell {
        Cell::new(quantity, i, j, value as i64, 1, Relation::Eq)
    }

    fn vanishes(quantity: &str, i: i64, j: i64, p: Option<usize>, value: i64) -> Cell {
        Cell {
            p,
            ..Cell::new(quantity, i, j, value, 0, Relation::Eq)
        }
    }

    pub fn holds(&self) -> bool {
        match self.relation {
            Relation::Eq => self.left == self.right,
            Relation::Le => self.left <= self.right,
        }
    }

    fn describe(&self) -> String {
        let op = match (self.relation, self.holds()) {
            (Relation::Eq, true) => "=",
            (Relation::Eq, false) => "≠",
            (Relation::Le, true) => "≤",
            (Relation::Le, false) => ">",
        };
        let p = self.p.map(|p| format!(" p={p}")).unwrap_or_default();
        format!("{}[{},{}{}]: {} {} {}", self.quantity, self.i, self.j, p, self.left, op, self.right)
    }
}

/// One side of an equivalence. It is true when all of its cells hold.
#[derive(Clone, Debug, Serialize)]
pub struct Condition {
    pub name: String,
    pub value: bool,
    pub cells: Vec<Cell>,
}

impl Condition {
    fn new(name: &str, cells: Vec<Cell>) -> Condition {
        Condition {
            name: name.to_string(),
            value: cells.iter().all(Cell::holds),
            cells,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    /// The hypothesis is false or the parameters lie outside the statement.
    Vacuous,
    Violated,
    /// A structural premise that is known to hold (e.g. m_{≤q} domination)
    /// failed; this is reported apart from the statement itself.
    PremiseViolated,
}

impl Verdict {
    pub fn passed(self) -> bool {
        matches!(self, Verdict::Holds | Verdict::Vacuous)
    }

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Vacuous => "vacuous",
            Verdict::Violated => "violated",
            Verdict::PremiseViolated => "premise-violated",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub i: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub target: Option<Target>,
}

impl Params {
    fn ik(i: usize, k: u32) -> Params {
        Params {
            i: Some(i),
            k: Some(k),
            ..Params::default()
        }
    }

    fn k(k: u32) -> Params {
        Params {
            k: Some(k),
            ..Params::default()
        }
    }

    fn describe(&self) -> String {
        let mut parts = Vec::new();
        if let Some(t) = self.target {
            parts.push(format!("target={}", t.id()));
        }
        if let Some(i) = self.i {
            parts.push(format!("i={i}"));
        }
        if let Some(k) = self.k {
            parts.push(format!("k={k}"));
        }
        if let Some(q) = self.q {
            parts.push(format!("q={q}"));
        }
        parts.join(" ")
    }
}

/// Everything needed to reproduce a verdict.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub ideal: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cell: Option<Cell>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ReportWindow {
    pub imax: usize,
    pub kmax: u32,
}

#[derive(Clone, Debug, Serialize)]
pub struct RigidityReport {
    pub statement: Statement,
    pub params: Params,
    pub seed: u64,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub premise: Vec<Cell>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub hypothesis: Vec<Cell>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub conclusion: Vec<Cell>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<Condition>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub window: ReportWindow,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl RigidityReport {
    /// One line: statement, parameters, verdict and the deciding cell.
    pub fn summary_line(&self) -> String {
        let mut s = format!("{} {}", self.statement.id(), self.params.describe());
        let s_trim = s.trim_end().len();
        s.truncate(s_trim);
        let _ = write!(s, ": {}", self.verdict.name());
        if let Some(c) = self.witness.as_ref().and_then(|w| w.cell.as_ref()) {
            let _ = write!(s, " at {}", c.describe());
        }
        if let Some(n) = &self.note {
            let _ = write!(s, " ({n})");
        }
        s
    }

    /// A multi-line rendering with all cells.
    pub fn render(&self) -> String {
        let mut s = self.summary_line();
        s.push('\n');
        for (title, cells) in [
            ("premise", &self.premise),
            ("hypothesis", &self.hypothesis),
            ("conclusion", &self.conclusion),
        ] {
            if !cells.is_empty() {
                let _ = writeln!(s, "  {title}:");
                for c in cells {
                    let _ = writeln!(s, "    {}", c.describe());
                }
            }
        }
        for c in &self.conditions {
            let _ = writeln!(s, "  condition {}: {}", c.name, c.value);
            for cell in &c.cells {
                let _ = writeln!(s, "    {}", cell.describe());
            }
        }
        let _ = writeln!(s, "  window: i ≤ {}, k ≤ {}", self.window.imax, self.window.kmax);
        s
    }
}

/// Cancellation numbers c_{i,j}, ideal convention: β_{i,j}(gin I) =
/// β_{i,j}(I) + c_{i,j} + c_{i+1,j} with c_{0,j} = 0. Only nonzero entries
/// are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CancellationTable {
    n: usize,
    entries: BTreeMap<(usize, u32), u64>,
}

#[derive(Serialize)]
struct CancellationEntry {
    i: usize,
    j: u32,
    c: u64,
}

impl Serialize for CancellationTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            convention: &'a str,
            entries: Vec<CancellationEntry>,
        }
        Repr {
            n: self.n,
            convention: "ideal",
            entries: self.entries().map(|(i, j, c)| CancellationEntry { i, j, c }).collect(),
        }
        .serialize(s)
    }
}

impl CancellationTable {
    /// Solves the recursion column by column. A negative entry or a nonzero
    /// c_{n,j} means the two tables cannot come from an ideal and its gin.
    pub fn from_tables(betti: &BettiTable, gin_betti: &BettiTable) -> Result<CancellationTable> {
        if betti.kind() != RingKind::Polynomial {
            return Err(Error::Invalid("cancellation numbers are defined over a polynomial ring".into()));
        }
        let n = betti.n();
        let b = betti.to_convention(Convention::Ideal);
        let g = gin_betti.to_convention(Convention::Ideal);
        let columns: BTreeSet<u32> = b.entries().chain(g.entries()).map(|e| e.1).collect();
        let mut entries = BTreeMap::new();
        for j in columns {
            let mut c: i64 = 0;
            for i in 0..n {
                let v = g.get(i, j) as i64 - b.get(i, j) as i64 - c;
                if v < 0 {
                    return Err(Error::Internal(format!(
                        "negative cancellation number c_{{{},{j}}} = {v}",
                        i + 1
                    )));
                }
                if v > 0 {
                    entries.insert((i + 1, j), v as u64);
                }
                c = v;
            }
            if c != 0 {
                return Err(Error::Internal(format!("cancellation recursion leaves c_{{{n},{j}}} = {c}")));
            }
        }
        Ok(CancellationTable { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "all cancellation numbers vanish\n".into();
        }
        self.entries().map(|(i, j, c)| format!("c_{{{i},{j}}} = {c}\n")).collect()
    }
}

/// Cancellation numbers of a polynomial ideal against its revlex gin.
pub fn cancellation_numbers(ideal: &GradedIdeal, opts: &GinOptions) -> Result<CancellationTable> {
    Profile::new(ideal, opts)?.cancellation()
}

/// Σ_{(a,b) ∈ A_{i+1,n}} C(n-b-1, i-a)·δ_{a,b,a+k}: the cancellation number
/// c_{i,i+k} in terms of the maps on partial Koszul homology.
pub fn cancellation_from_homology(ph: &PartialHomology, i: usize, k: u32) -> i64 {
    let n = ph.n() as i64;
    index_set(i + 1, ph.n())
        .into_iter()
        .map(|(a, b)| binomial(n - b as i64 - 1, i as i64 - a as i64) as i64 * ph.delta(a, b, a as u32 + k) as i64)
        .sum()
}

struct Comparison {
    ideal: MonomialIdeal,
    betti: BettiTable,
}

/// δ-images of the maximal ideal keyed by (i, p, j).
type MaxIdealImages = BTreeMap<(usize, usize, u32), u64>;

/// The tables behind every check for one ideal and one seed.
pub struct Profile {
    ideal: GradedIdeal,
    opts: GinOptions,
    gin: GinResult,
    betti: BettiTable,
    gin_betti: BettiTable,
    imax: usize,
    kmax: u32,
    linear: RefCell<BTreeMap<u32, bool>>,
    targets: RefCell<BTreeMap<Target, Rc<Comparison>>>,
    cancellation: RefCell<Option<CancellationTable>>,
    alpha: RefCell<Option<AnnihilatorTable>>,
    homology: RefCell<Option<Rc<PartialHomology>>>,
    images: RefCell<Option<Rc<MaxIdealImages>>>,
}

impl Profile {
    /// Computes gin(I) in revlex (the order in `opts` is ignored) and both
    /// Betti tables.
    pub fn new(ideal: &GradedIdeal, opts: &GinOptions) -> Result<Profile> {
        let opts = GinOptions {
            order: TermOrder::DegRevLex,
            ..opts.clone()
        };
        let ring = ideal.ring();
        let n = ring.n();
        let gin = gin(ideal, &opts)?;
        let imax = match ring.kind() {
            RingKind::Polynomial => n,
            RingKind::Exterior => default_imax(n),
        };
        let betti = betti_table(ideal, Convention::Quotient, imax)?;
        let gin_betti = monomial_ideal_betti(&gin.ideal, Convention::Quotient, imax)?;
        // strands of R/gin(I) stop below reg(gin I); one more is kept as a margin
        let kmax = match ring.kind() {
            RingKind::Polynomial => gin_betti.regularity().unwrap_or(0),
            RingKind::Exterior => n as u32,
        };
        Ok(Profile {
            ideal: ideal.clone(),
            opts,
            gin,
            betti,
            gin_betti,
            imax,
            kmax,
            linear: RefCell::default(),
            targets: RefCell::default(),
            cancellation: RefCell::default(),
            alpha: RefCell::default(),
            homology: RefCell::default(),
            images: RefCell::default(),
        })
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    pub fn kind(&self) -> RingKind {
        self.ideal.ring().kind()
    }

    pub fn n(&self) -> usize {
        self.ideal.ring().n()
    }

    pub fn seed(&self) -> u64 {
        self.opts.seed
    }

    pub fn gin(&self) -> &GinResult {
        &self.gin
    }

    /// β(R/I), quotient convention.
    pub fn betti(&self) -> &BettiTable {
        &self.betti
    }

    /// β(R/gin I), quotient convention.
    pub fn gin_betti(&self) -> &BettiTable {
        &self.gin_betti
    }

    pub fn window(&self) -> ReportWindow {
        ReportWindow {
            imax: self.imax,
            kmax: self.kmax,
        }
    }

    fn require(&self, kind: RingKind, what: &str) -> Result<()> {
        if self.kind() != kind {
            return Err(Error::Invalid(format!("{what} needs {}", match kind {
                RingKind::Polynomial => "a polynomial ring",
                RingKind::Exterior => "an exterior algebra",
            })));
        }
        Ok(())
    }

    /// β_{i,i+k}(R/I) against β_{i,i+k}(R/gin I).
    fn beta(&self, i: usize, k: i64) -> Cell {
        let j = i as i64 + k;
        let (l, r) = if j < 0 {
            (0, 0)
        } else {
            (self.betti.get(i, j as u32), self.gin_betti.get(i, j as u32))
        };
        Cell::new("beta", i as i64, j, l as i64, r as i64, Relation::Eq)
    }

    /// β_{i,j}(I) against β_{i,j}(gin I), ideal convention.
    fn beta_ideal(&self, i: usize, j: i64) -> Cell {
        let (l, r) = if j < 0 {
            (0, 0)
        } else {
            (self.betti.get(i + 1, j as u32), self.gin_betti.get(i + 1, j as u32))
        };
        Cell::new("beta(ideal)", i as i64, j, l as i64, r as i64, Relation::Eq)
    }

    /// Whether I_{<k>} has a linear resolution (inside the window for E).
    pub fn component_linear(&self, k: u32) -> Result<bool> {
        if let Some(&v) = self.linear.borrow().get(&k) {
            return Ok(v);
        }
        let v = has_linear_resolution(&self.ideal.component_ideal(k), self.imax)?;
        self.linear.borrow_mut().insert(k, v);
        Ok(v)
    }

    fn linear_cell(&self, k: u32) -> Result<Cell> {
        Ok(Cell::flag("linear(I<k>)", 0, k as i64, self.component_linear(k)?))
    }

    pub fn cancellation(&self) -> Result<CancellationTable> {
        if let Some(c) = self.cancellation.borrow().as_ref() {
            return Ok(c.clone());
        }
        let c = CancellationTable::from_tables(&self.betti, &self.gin_betti)?;
        *self.cancellation.borrow_mut() = Some(c.clone());
        Ok(c)
    }

    /// Generic annihilator numbers computed from their definition.
    pub fn alpha(&self) -> Result<AnnihilatorTable> {
        if let Some(a) = self.alpha.borrow().as_ref() {
            return Ok(a.clone());
        }
        let a = generic_annihilators_direct(&self.ideal, &self.opts)?;
        *self.alpha.borrow_mut() = Some(a.clone());
        Ok(a)
    }

    fn sequence(&self) -> GenericSequence {
        GenericSequence::new(
            &self.ideal.ring().with_order(TermOrder::DegRevLex),
            self.opts.seed,
            self.opts.coeff_bound,
        )
    }

    fn homology_window(&self) -> Result<Window> {
        default_window(&self.ideal, &self.sequence())
    }

    /// Homology and δ-numbers of the partial generic sequences.
    pub fn partial_homology(&self) -> Result<Rc<PartialHomology>> {
        if let Some(h) = self.homology.borrow().as_ref() {
            return Ok(h.clone());
        }
        let h = Rc::new(partial_homology(&self.ideal, &self.sequence(), self.homology_window()?));
        *self.homology.borrow_mut() = Some(h.clone());
        Ok(h)
    }

    fn maximal_ideal_images(&self) -> Result<Rc<MaxIdealImages>> {
        if let Some(m) = self.images.borrow().as_ref() {
            return Ok(m.clone());
        }
        let m = Rc::new(maximal_ideal_images(&self.ideal, &self.sequence(), self.homology_window()?));
        *self.images.borrow_mut() = Some(m.clone());
        Ok(m)
    }

    fn comparison(&self, target: Target) -> Result<Rc<Comparison>> {
        if let Some(c) = self.targets.borrow().get(&target) {
            return Ok(c.clone());
        }
        let ideal = match target {
            Target::Lex => lex_ideal(&self.ideal)?,
            Target::GinLex => {
                gin(
                    &self.ideal,
                    &GinOptions {
                        order: TermOrder::Lex,
                        ..self.opts.clone()
                    },
                )?
                .ideal
            }
            Target::GinDegrevlex => self.gin.ideal.clone(),
        };
        let betti = monomial_ideal_betti(&ideal, Convention::Quotient, self.imax)?;
        let c = Rc::new(Comparison { ideal, betti });
        self.targets.borrow_mut().insert(target, c.clone());
        Ok(c)
    }

    fn report(&self, statement: Statement, params: Params) -> RigidityReport {
        RigidityReport {
            statement,
            params,
            seed: self.opts.seed,
            premise: Vec::new(),
            hypothesis: Vec::new(),
            conclusion: Vec::new(),
            conditions: Vec::new(),
            verdict: Verdict::Holds,
            note: None,
            window: self.window(),
            witness: None,
        }
    }

    fn witness(&self, cell: Option<Cell>) -> Witness {
        Witness {
            ideal: format_ideal(&self.ideal),
            seed: self.opts.seed,
            cell,
        }
    }

    /// Premise, then hypothesis, then conclusion.
    fn implication(&self, mut r: RigidityReport) -> RigidityReport {
        if let Some(c) = r.premise.iter().find(|c| !c.holds()) {
            r.verdict = Verdict::PremiseViolated;
            r.witness = Some(self.witness(Some(c.clone())));
        } else if !r.hypothesis.iter().all(Cell::holds) {
            r.verdict = Verdict::Vacuous;
        } else if let Some(c) = r.conclusion.iter().find(|c| !c.holds()) {
            r.verdict = Verdict::Violated;
            r.witness = Some(self.witness(Some(c.clone())));
        } else {
            r.verdict = Verdict::Holds;
        }
        r
    }

    /// All conditions must have the same truth value.
    fn equivalence(&self, mut r: RigidityReport) -> RigidityReport {
        let agree = r.conditions.windows(2).all(|w| w[0].value == w[1].value);
        if agree {
            r.verdict = Verdict::Holds;
        } else {
            r.verdict = Verdict::Violated;
            let cell = r.conditions.iter().flat_map(|c| c.cells.iter()).find(|c| !c.holds()).cloned();
            r.witness = Some(self.witness(cell));
        }
        r
    }

    fn out_of_scope(&self, mut r: RigidityReport, why: &str) -> RigidityReport {
        r.verdict = Verdict::Vacuous;
        r.note = Some(why.to_string());
        r
    }
}

/// β(R/I) ≤ β(R/gin I) entrywise.
pub fn dominance(pr: &Profile) -> RigidityReport {
    let mut r = pr.report(Statement::Dominance, Params::default());
    let cells: BTreeSet<(usize, u32)> = pr.betti.entries().chain(pr.gin_betti.entries()).map(|e| (e.0, e.1)).collect();
    r.conclusion = cells
        .into_iter()
        .map(|(i, j)| Cell {
            relation: Relation::Le,
            ..pr.beta(i, j as i64 - i as i64)
        })
        .collect();
    pr.implication(r)
}

/// Over S: if β_{i,i+k}(S/I) = β_{i,i+k}(S/gin I) for some i > 1, then the
/// same holds at every q ≥ i.
pub fn rigidity_poly(pr: &Profile, i: usize, k: u32) -> Result<RigidityReport> {
    pr.require(RingKind::Polynomial, "rigidity_poly")?;
    let mut r = pr.report(Statement::Rigidgin, Params::ik(i, k));
    r.hypothesis = vec![pr.beta(i, k as i64)];
    r.conclusion = (i + 1..=pr.imax).map(|q| pr.beta(q, k as i64)).collect();
    if i <= 1 {
        let why = if i == 1 && !r.hypothesis[0].holds() {
            "needs i > 1; at i = 1 the first Betti numbers may differ while later ones agree"
        } else {
            "needs i > 1"
        };
        return Ok(pr.out_of_scope(r, why));
    }
    Ok(pr.implication(r))
}

/// Over E: if β_{i,i+k}(E/J) = β_{i,i+k}(E/gin J) for some i > 1, then the
/// same holds at every q ≥ 1.
pub fn rigidity_ext(pr: &Profile, i: usize, k: u32) -> Result<RigidityReport> {
    pr.require(RingKind::Exterior, "rigidity_ext")?;
    let mut r = pr.report(Statement::Degthm, Params::ik(i, k));
    r.hypothesis = vec![pr.beta(i, k as i64)];
    r.conclusion = (1..=pr.imax).filter(|&q| q != i).map(|q| pr.beta(q, k as i64)).collect();
    if i <= 1 {
        return Ok(pr.out_of_scope(r, "needs i > 1"));
    }
    Ok(pr.implication(r))
}

fn strand(pr: &Profile, k: u32) -> Condition {
    Condition::new("strand", (1..=pr.imax).map(|i| pr.beta(i, k as i64)).collect())
}

fn first_betti(pr: &Profile, k: u32) -> Condition {
    Condition::new("first-betti", vec![pr.beta(1, k as i64), pr.beta(1, k as i64 + 1)])
}

/// β_{i,i+k} agree for all i ≥ 1 iff they agree at (1, k+1) and (1, k+2).
pub fn first_strand_criterion(pr: &Profile, k: u32) -> RigidityReport {
    let mut r = pr.report(Statement::Generator, Params::k(k));
    r.conditions = vec![strand(pr, k), first_betti(pr, k)];
    pr.equivalence(r)
}

/// Three-way agreement: the strand k agrees; I_{<k>} and I_{<k+1>} have
/// linear resolutions; the first Betti numbers agree in degrees k+1, k+2.
pub fn dlinear_equivalence(pr: &Profile, k: u32) -> Result<RigidityReport> {
    let mut r = pr.report(Statement::Dlinear, Params::k(k));
    let components = Condition::new("components", vec![pr.linear_cell(k)?, pr.linear_cell(k + 1)?]);
    r.conditions = vec![strand(pr, k), components, first_betti(pr, k)];
    Ok(pr.equivalence(r))
}

/// β_{1,k+1}(R/I) = β_{1,k+1}(R/gin I): I and gin(I) have the same number of
/// minimal generators of degree k+1.
pub fn linear_component_criterion(pr: &Profile, k: u32) -> bool {
    pr.beta(1, k as i64).holds()
}

/// [`linear_component_criterion`] against a direct computation of the
/// resolution of I_{<k>}.
pub fn linear_component_report(pr: &Profile, k: u32) -> Result<RigidityReport> {
    let mut r = pr.report(Statement::Linear, Params::k(k));
    r.conditions = vec![
        Condition::new("generators", vec![pr.beta(1, k as i64)]),
        Condition::new("component", vec![pr.linear_cell(k)?]),
    ];
    Ok(pr.equivalence(r))
}

/// Over S, with d the top degree of a minimal generator, four conditions
/// agree: (i) I is componentwise linear; (ii) β_{i,i+k}(I) = β_{i,i+k}(gin I)
/// for all i ≥ 0 and k ≤ d; (iii) the same for i = 1; (iv) β_{0,k}(I) =
/// β_{0,k}(gin I) for k ≤ d+1 (ideal convention throughout).
pub fn degree_d_componentwise(pr: &Profile) -> Result<RigidityReport> {
    pr.require(RingKind::Polynomial, "degree_d_componentwise")?;
    let mut r = pr.report(Statement::Componentwise, Params::default());
    let d = pr.betti.entries().filter(|e| e.0 == 1).map(|e| e.1).max().unwrap_or(0);
    // I_{<k>} is linear for every k ≥ reg(I), so the definition is checked up to reg(I)
    let reg = pr.betti.regularity().unwrap_or(0);
    let mut components = Vec::new();
    for k in 0..=reg {
        components.push(pr.linear_cell(k)?);
    }
    let n = pr.n();
    let all_strands = (0..n)
        .flat_map(|i| (0..=d).map(move |k| (i, k)))
        .map(|(i, k)| pr.beta_ideal(i, (i as u32 + k) as i64))
        .collect();
    let second = (0..=d).map(|k| pr.beta_ideal(1, 1 + k as i64)).collect();
    let generators = (0..=d + 1).map(|k| pr.beta_ideal(0, k as i64)).collect();
    r.conditions = vec![
        Condition::new("componentwise-linear", components),
        Condition::new("strands", all_strands),
        Condition::new("first-syzygies", second),
        Condition::new("generators", generators),
    ];
    r.note = Some(format!("d = {d}"));
    Ok(pr.equivalence(r))
}

/// Over E: β_i(E/J) = β_i(E/gin J) (summed over strands) iff J is
/// componentwise linear, checked from the definition.
pub fn betti_total_ext_check(pr: &Profile, i: usize) -> Result<RigidityReport> {
    pr.require(RingKind::Exterior, "betti_total_ext_check")?;
    let mut r = pr.report(
        Statement::Cw,
        Params {
            i: Some(i),
            ..Params::default()
        },
    );
    let total = Cell::new(
        "total-beta",
        i as i64,
        -1,
        pr.betti.total(i) as i64,
        pr.gin_betti.total(i) as i64,
        Relation::Eq,
    );
    let mut components = Vec::new();
    for k in 0..=pr.n() as u32 {
        components.push(pr.linear_cell(k)?);
    }
    r.conditions = vec![
        Condition::new("total", vec![total]),
        Condition::new("componentwise-linear", components),
    ];
    if i == 0 {
        return Ok(pr.out_of_scope(r, "needs i ≥ 1"));
    }
    Ok(pr.equivalence(r))
}

/// In the initial degree d0 of I ⊂ S the first Betti numbers of R/I and
/// R/gin I agree and equal Σ_{j=1}^{n} α_{j,d0-1}.
pub fn initial_degree_check(pr: &Profile) -> Result<RigidityReport> {
    pr.require(RingKind::Polynomial, "initial_degree_check")?;
    let mut r = pr.report(Statement::Why, Params::default());
    let Some(d0) = pr.betti.entries().filter(|e| e.0 == 1).map(|e| e.1).min() else {
        return Ok(pr.out_of_scope(r, "zero ideal"));
    };
    let alpha = pr.alpha()?;
    let sum: u64 = (1..=pr.n()).map(|p| alpha.get(p, d0 - 1)).sum();
    r.conclusion = vec![
        pr.beta(1, d0 as i64 - 1),
        Cell::new("alpha-sum", 1, d0 as i64, pr.betti.get(1, d0) as i64, sum as i64, Relation::Eq),
    ];
    r.note = Some(format!("d0 = {d0}"));
    Ok(pr.implication(r))
}

fn cancellation_cell(c: &CancellationTable, i: usize, k: u32) -> Cell {
    Cell::vanishes("c", i as i64, (i as u32 + k) as i64, None, c.get(i, i as u32 + k) as i64)
}

/// The cancellation table solves its recursion, and each c_{i,i+k} agrees
/// with the expression through δ-numbers of partial generic sequences.
pub fn cancellation_report(pr: &Profile) -> Result<RigidityReport> {
    pr.require(RingKind::Polynomial, "cancellation numbers")?;
    let mut r = pr.report(Statement::Cancellation, Params::default());
    let c = pr.cancellation()?;
    let ph = pr.partial_homology()?;
    for i in 0..pr.n() {
        for k in 0..=ph.window().kmax {
            r.conclusion.push(Cell::new(
                "c-homology",
                i as i64,
                (i as u32 + k) as i64,
                c.get(i, i as u32 + k) as i64,
                cancellation_from_homology(&ph, i, k),
                Relation::Eq,
            ));
        }
    }
    Ok(pr.implication(r))
}

/// c_{i,i+k} = 0 for some i ≥ 1 gives c_{q,q+k} = 0 for every q ≥ i.
pub fn crigid_check(pr: &Profile, i: usize, k: u32) -> Result<RigidityReport> {
    pr.require(RingKind::Polynomial, "crigid_check")?;
    let c = pr.cancellation()?;
    let mut r = pr.report(Statement::Crigid, Params::ik(i, k));
    r.hypothesis = vec![cancellation_cell(&c, i, k)];
    r.conclusion = (i + 1..=pr.n()).map(|q| cancellation_cell(&c, q, k)).collect();
    if i == 0 {
        return Ok(pr.out_of_scope(r, "needs i ≥ 1"));
    }
    Ok(pr.implication(r))
}

/// c_{i,i+k} = 0 for all i ≥ 1 iff I_{<k>} has a linear resolution.
pub fn clinear_check(pr: &Profile, k: u32) -> Result<RigidityReport> {
    pr.require(RingKind::Polynomial, "clinear_check")?;
    let c = pr.cancellation()?;
    let mut r = pr.report(Statement::Clinear, Params::k(k));
    r.conditions = vec![
        Condition::new("cancellation", (1..=pr.n()).map(|i| cancellation_cell(&c, i, k)).collect()),
        Condition::new("component", vec![pr.linear_cell(k)?]),
    ];
    Ok(pr.equivalence(r))
}

/// With I_{<k>} linear (ideal convention): equality at (q, q+k+2) gives
/// equality at (q+1, q+k+2), and equality at (q, q+k-1) gives equality at
/// (q-1, q+k-1).
pub fn post_clinear_corollary(pr: &Profile, k: u32, q: usize) -> Result<RigidityReport> {
    pr.require(RingKind::Polynomial, "post_clinear_corollary")?;
    let mut r = pr.report(
        Statement::PostClinear,
        Params {
            k: Some(k),
            q: Some(q),
            ..Params::default()
        },
    );
    r.hypothesis = vec![pr.linear_cell(k)?];
    let mut parts = Vec::new();
    let up = pr.beta_ideal(q, (q as u32 + k + 2) as i64);
    if up.holds() {
        r.conclusion.push(pr.beta_ideal(q + 1, (q as u32 + k + 2) as i64));
        parts.push("(i)");
    }
    if q >= 1 && q as i64 + k as i64 >= 1 {
        let down = pr.beta_ideal(q, q as i64 + k as i64 - 1);
        if down.holds() {
            r.conclusion.push(pr.beta_ideal(q - 1, q as i64 + k as i64 - 1));
            parts.push("(ii)");
        }
    }
    if parts.is_empty() {
        return Ok(pr.out_of_scope(r, "neither part has its equality"));
    }
    r.note = Some(format!("parts {}", parts.join(" ")));
    Ok(pr.implication(r))
}

/// Rigidity transferred to a strongly stable ideal J' with the Hilbert
/// function of I whose counts m_{≤q}(J', d) are bounded by those of gin(I):
/// over S, equality at (i, i+k) for some i > 1 gives equality at every
/// q ≥ i; over E at every q ≥ 1. The premise (stability, Hilbert function,
/// domination) is reported separately.
pub fn trans_check(pr: &Profile, target: Target, i: usize, k: u32) -> Result<RigidityReport> {
    let cmp = pr.comparison(target)?;
    let mut r = pr.report(
        Statement::Trans,
        Params {
            i: Some(i),
            k: Some(k),
            target: Some(target),
            ..Params::default()
        },
    );
    let n = pr.n();
    let g = &pr.gin.ideal;
    r.premise.push(Cell::flag("strongly-stable", 0, 0, cmp.ideal.is_strongly_stable()));
    let top = cmp.ideal.max_degree().max(g.max_degree()) + 1;
    for d in 0..=top {
        for q in 1..=n {
            let relation = if q == n { Relation::Eq } else { Relation::Le };
            r.premise.push(Cell::new(
                "m<=q",
                q as i64,
                d as i64,
                cmp.ideal.count_leq(q, d) as i64,
                g.count_leq(q, d) as i64,
                relation,
            ));
        }
    }
    let cell = |q: usize| {
        let j = q as u32 + k;
        Cell::new(
            "beta-target",
            q as i64,
            j as i64,
            pr.betti.get(q, j) as i64,
            cmp.betti.get(q, j) as i64,
            Relation::Eq,
        )
    };
    r.hypothesis = vec![cell(i)];
    r.conclusion = match pr.kind() {
        RingKind::Polynomial => (i + 1..=pr.imax).map(cell).collect(),
        RingKind::Exterior => (1..=pr.imax).filter(|&q| q != i).map(cell).collect(),
    };
    if i <= 1 {
        return Ok(pr.out_of_scope(r, "needs i > 1"));
    }
    Ok(pr.implication(r))
}

/// Over S: (𝔪H_i(p))_{i+k} = 0 for all p ≤ n-1 gives (𝔪H_{i+1}(p))_{i+k+1} = 0
/// for all p ≤ n-1, along one generic sequence.
pub fn gcor_check(pr: &Profile, i: usize, k: u32) -> Result<RigidityReport> {
    pr.require(RingKind::Polynomial, "gcor_check")?;
    let m = pr.maximal_ideal_images()?;
    let get = |i: usize, p: usize, j: u32| m.get(&(i, p, j)).copied().unwrap_or(0) as i64;
    let mut r = pr.report(Statement::Gcor, Params::ik(i, k));
    let n = pr.n();
    r.hypothesis = (1..n)
        .map(|p| Cell::vanishes("mH", i as i64, (i as u32 + k) as i64, Some(p), get(i, p, i as u32 + k)))
        .collect();
    r.conclusion = (1..n)
        .map(|p| {
            let j = i as u32 + k + 1;
            Cell::vanishes("mH", i as i64 + 1, j as i64, Some(p), get(i + 1, p, j))
        })
        .collect();
    if i == 0 {
        return Ok(pr.out_of_scope(r, "needs i ≥ 1"));
    }
    Ok(pr.implication(r))
}

/// Over E: δ_{i,p,j} = 0 for all 1 ≤ p ≤ n-1 gives δ_{i+1,p,j+1} = 0 for all p.
pub fn rigid_delta_check(pr: &Profile, i: usize, j: u32) -> Result<RigidityReport> {
    pr.require(RingKind::Exterior, "rigid_delta_check")?;
    let ph = pr.partial_homology()?;
    let mut r = pr.report(
        Statement::Rigid,
        Params {
            i: Some(i),
            k: Some(j),
            ..Params::default()
        },
    );
    let n = pr.n();
    r.hypothesis = (1..n)
        .map(|p| Cell::vanishes("delta", i as i64, j as i64, Some(p), ph.delta(i, p, j) as i64))
        .collect();
    r.conclusion = (1..n)
        .map(|p| Cell::vanishes("delta", i as i64 + 1, j as i64 + 1, Some(p), ph.delta(i + 1, p, j + 1) as i64))
        .collect();
    r.note = Some("k is the internal degree".into());
    if i == 0 {
        return Ok(pr.out_of_scope(r, "needs i ≥ 1"));
    }
    Ok(pr.implication(r))
}

/// All reports of one statement over the profile's window. Statements that
/// do not apply to the ring kind give no reports.
pub fn statement_reports(pr: &Profile, statement: Statement) -> Result<Vec<RigidityReport>> {
    if !statement.applies_to(pr.kind()) {
        return Ok(Vec::new());
    }
    let (imax, kmax, n) = (pr.imax, pr.kmax, pr.n());
    let ks = 0..=kmax;
    let mut out = Vec::new();
    match statement {
        Statement::Dominance => out.push(dominance(pr)),
        Statement::Rigidgin => {
            for i in 2..=imax {
                for k in ks.clone() {
                    out.push(rigidity_poly(pr, i, k)?);
                }
            }
        }
        Statement::Degthm => {
            for i in 2..=imax {
                for k in ks.clone() {
                    out.push(rigidity_ext(pr, i, k)?);
                }
            }
        }
        Statement::Generator => out.extend(ks.map(|k| first_strand_criterion(pr, k))),
        Statement::Dlinear => {
            for k in ks {
                out.push(dlinear_equivalence(pr, k)?);
            }
        }
        Statement::Linear => {
            for k in ks {
                out.push(linear_component_report(pr, k)?);
            }
        }
        Statement::Componentwise => out.push(degree_d_componentwise(pr)?),
        Statement::Cw => {
            for i in 1..=imax {
                out.push(betti_total_ext_check(pr, i)?);
            }
        }
        Statement::Why => out.push(initial_degree_check(pr)?),
        Statement::Cancellation => out.push(cancellation_report(pr)?),
        Statement::Crigid => {
            for i in 1..=n {
                for k in ks.clone() {
                    out.push(crigid_check(pr, i, k)?);
                }
            }
        }
        Statement::Clinear => {
            for k in ks {
                out.push(clinear_check(pr, k)?);
            }
        }
        Statement::PostClinear => {
            for k in ks {
                for q in 0..n {
                    out.push(post_clinear_corollary(pr, k, q)?);
                }
            }
        }
        Statement::Trans => {
            for target in Target::ALL {
                for i in 2..=imax {
                    for k in ks.clone() {
                        out.push(trans_check(pr, target, i, k)?);
                    }
                }
            }
        }
        Statement::Gcor => {
            for i in 1..n.saturating_sub(1) {
                for k in ks.clone() {
                    out.push(gcor_check(pr, i, k)?);
                }
            }
        }
        Statement::Rigid => {
            let w = pr.homology_window()?;
            for i in 1..w.imax {
                for j in i as u32 + 1..=i as u32 + w.kmax + 1 {
                    out.push(rigid_delta_check(pr, i, j)?);
                }
            }
        }
    }
    Ok(out)
}

/// The single report for explicit parameters. Missing parameters that the
/// statement needs are an error.
pub fn check(pr: &Profile, statement: Statement, params: Params) -> Result<RigidityReport> {
    let need_i = || params.i.ok_or_else(|| Error::Invalid(format!("{} needs --i", statement.id())));
    let need_k = || params.k.ok_or_else(|| Error::Invalid(format!("{} needs --k", statement.id())));
    match statement {
        Statement::Dominance => Ok(dominance(pr)),
        Statement::Rigidgin => rigidity_poly(pr, need_i()?, need_k()?),
        Statement::Degthm => rigidity_ext(pr, need_i()?, need_k()?),
        Statement::Generator => Ok(first_strand_criterion(pr, need_k()?)),
        Statement::Dlinear => dlinear_equivalence(pr, need_k()?),
        Statement::Linear => linear_component_report(pr, need_k()?),
        Statement::Componentwise => degree_d_componentwise(pr),
        Statement::Cw => betti_total_ext_check(pr, need_i()?),
        Statement::Why => initial_degree_check(pr),
        Statement::Cancellation => cancellation_report(pr),
        Statement::Crigid => crigid_check(pr, need_i()?, need_k()?),
        Statement::Clinear => clinear_check(pr, need_k()?),
        Statement::PostClinear => post_clinear_corollary(
            pr,
            need_k()?,
            params.q.ok_or_else(|| Error::Invalid("post-clinear needs --q".into()))?,
        ),
        Statement::Trans => trans_check(pr, params.target.unwrap_or(Target::Lex), need_i()?, need_k()?),
        Statement::Gcor => gcor_check(pr, need_i()?, need_k()?),
        Statement::Rigid => rigid_delta_check(pr, need_i()?, need_k()?),
    }
}

/// Every applicable statement over the window. `deep` adds the statements
/// that need homology of partial generic sequences.
pub fn check_all(pr: &Profile, deep: bool) -> Result<Vec<RigidityReport>> {
    let mut out = Vec::new();
    for s in Statement::ALL {
        if deep || !s.is_deep() {
            out.extend(statement_reports(pr, s)?);
        }
    }
    Ok(out)
}

/// Verdict counts of a battery.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub holds: usize,
    pub vacuous: usize,
    pub violated: usize,
    pub premise_violated: usize,
}

impl Tally {
    pub fn of<'a>(reports: impl IntoIterator<Item = &'a RigidityReport>) -> Tally {
        let mut t = Tally::default();
        for r in reports {
            match r.verdict {
                Verdict::Holds => t.holds += 1,
                Verdict::Vacuous => t.vacuous += 1,
                Verdict::Violated => t.violated += 1,
                Verdict::PremiseViolated => t.premise_violated += 1,
            }
        }
        t
    }

    pub fn passed(&self) -> bool {
        self.violated == 0 && self.premise_violated == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn profile(text: &str) -> Profile {
        Profile::new(&parse_ideal(text).unwrap(), &GinOptions::default()).unwrap()
    }

    const CANCEL: &str = "ring poly 4 QQ\nx1^3\nx1^2*x2\nx1*x2^2\nx2^3\nx1^2*x3\nx1*x3*x4\n";
    const REMARK: &str = "ring poly 4 QQ\nx1*x4^2\nx2^3\nx2^2*x3\n";

    #[test]
    fn cancellation_of_worked_example() {
        let pr = profile(CANCEL);
        let c = pr.cancellation().unwrap();
        let got: Vec<_> = c.entries().collect();
        assert_eq!(got, vec![(1, 4, 1), (2, 5, 1)]);
    }

    #[test]
    fn cancellation_rejects_inconsistent_tables() {
        let a = profile("ring poly 2 QQ\nx1\nx2^2\n");
        let b = profile("ring poly 2 QQ\nx1^2\nx2^2\n");
        // a and b do not form an (ideal, gin) pair
        assert!(CancellationTable::from_tables(a.betti(), b.gin_betti()).is_err());
    }

    #[test]
    fn remark_ideal_rigidity() {
        let pr = profile(REMARK);
        let r = rigidity_poly(&pr, 2, 4).unwrap();
        assert_eq!(r.verdict, Verdict::Holds);
        assert_eq!(r.hypothesis[0].left, 2);
        let r = rigidity_poly(&pr, 1, 4).unwrap();
        assert_eq!(r.verdict, Verdict::Vacuous);
        assert!(r.note.unwrap().contains("i = 1"));
        let d = degree_d_componentwise(&pr).unwrap();
        assert_eq!(d.verdict, Verdict::Holds);
        assert!(d.conditions.iter().all(|c| !c.value));
    }

    #[test]
    fn maximal_ideal_components_are_linear() {
        let pr = profile("ring poly 3 QQ\nx1\nx2\nx3\n");
        for k in 0..=pr.window().kmax {
            let r = dlinear_equivalence(&pr, k).unwrap();
            assert_eq!(r.verdict, Verdict::Holds);
            assert!(r.conditions.iter().all(|c| c.value), "k = {k}");
        }
    }

    #[test]
    fn battery_passes_on_small_ideals() {
        for text in [
            CANCEL,
            REMARK,
            "ring poly 3 QQ\nx1^2 - x2*x3\nx1*x2\n",
            "ring ext 4 QQ\ne1*e2 + e3*e4\n",
            "ring ext 3 QQ\ne1*e2\ne1*e3\n",
        ] {
            let pr = profile(text);
            let reports = check_all(&pr, true).unwrap();
            let bad: Vec<String> = reports.iter().filter(|r| !r.verdict.passed()).map(|r| r.render()).collect();
            assert!(bad.is_empty(), "{text}\n{}", bad.join("\n"));
        }
    }

    #[test]
    fn zero_ideal_is_vacuous_or_holds() {
        for text in ["ring poly 2 QQ\n", "ring ext 3 QQ\n"] {
            let pr = profile(text);
            assert!(Tally::of(&check_all(&pr, true).unwrap()).passed());
        }
    }
}
