//! Graded Betti numbers.
//!
//! Over S the numbers come from the Koszul complex on the variables, over E
//! from the Cartan complex on the coordinate forms; both are built on explicit
//! bases of the graded pieces of R/I. Monomial polynomial ideals take a
//! multigraded shortcut. The closed formulas for strongly stable ideals are
//! implemented separately so that they can serve as independent checks.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::initial_ideal;
use crate::ideal::{GradedIdeal, MonomialIdeal, QuotientBasis};
use crate::linalg::{binomial, integer_row, rank, SparseVec};
use crate::ring::{Monomial, Rational, Ring, RingKind, TermOrder};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// β_{i,j}(R/I)
    Quotient,
    /// β_{i,j}(I) = β_{i+1,j}(R/I)
    Ideal,
}

impl Convention {
    pub fn name(self) -> &'static str {
        match self {
            Convention::Quotient => "quotient",
            Convention::Ideal => "ideal",
        }
    }
}

/// Default homological window for exterior Betti tables.
pub fn default_imax(n: usize) -> usize {
    n + 3
}

/// A graded Betti table. Only nonzero entries are stored. Exterior tables are
/// infinite in the homological direction and carry the computed window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    kind: RingKind,
    n: usize,
    convention: Convention,
    entries: BTreeMap<(usize, u32), u64>,
    // largest homological index computed, in quotient indexing
    imax: Option<usize>,
}

/// `{"ring":{"kind","n"},"convention","entries":[{"i","j","beta"}]}` with
/// entries sorted by (i, j).
impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct RingRepr {
            kind: RingKind,
            n: usize,
        }
        #[derive(Serialize)]
        struct Entry {
            i: usize,
            j: u32,
            beta: u64,
        }
        #[derive(Serialize)]
        struct Repr {
            ring: RingRepr,
            convention: Convention,
            entries: Vec<Entry>,
        }
        Repr {
            ring: RingRepr {
                kind: self.kind,
                n: self.n,
            },
            convention: self.convention,
            entries: self.entries().map(|(i, j, beta)| Entry { i, j, beta }).collect(),
        }
        .serialize(s)
    }
}

impl BettiTable {
    fn from_quotient(ring: &Ring, entries: BTreeMap<(usize, u32), u64>, imax: Option<usize>) -> Self {
        BettiTable {
            kind: ring.kind(),
            n: ring.n(),
            convention: Convention::Quotient,
            entries: entries.into_iter().filter(|e| e.1 > 0).collect(),
            imax,
        }
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries sorted by (i, j).
    pub fn entries(&self) -> impl Iterator<Item = (usize, u32, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &b)| (i, j, b))
    }

    /// Largest homological index covered, in this table's convention.
    pub fn max_homological(&self) -> Option<usize> {
        match self.convention {
            Convention::Quotient => self.imax,
            Convention::Ideal => self.imax.map(|i| i.saturating_sub(1)),
        }
    }

    /// Whether entry (i, ·) lies inside the computed window.
    pub fn covers(&self, i: usize) -> bool {
        self.max_homological().is_none_or(|m| i <= m)
    }

    pub fn to_convention(&self, convention: Convention) -> BettiTable {
        if convention == self.convention {
            return self.clone();
        }
        let entries = match convention {
            Convention::Ideal => self
                .entries
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), &b)| ((i - 1, j), b))
                .collect(),
            Convention::Quotient => {
                let mut m: BTreeMap<(usize, u32), u64> =
                    self.entries.iter().map(|(&(i, j), &b)| ((i + 1, j), b)).collect();
                m.insert((0, 0), 1);
                m
            }
        };
        BettiTable {
            convention,
            entries,
            ..self.clone()
        }
    }

    /// Σ_j β_{i,j}.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.range((i, 0)..=(i, u32::MAX)).map(|e| *e.1).sum()
    }

    /// β_{i,i+k}.
    pub fn strand(&self, i: usize, k: u32) -> u64 {
        self.get(i, i as u32 + k)
    }

    /// max{ j - i : β_{i,j}(I) ≠ 0 } in ideal convention; `None` for the zero ideal.
    pub fn regularity(&self) -> Option<u32> {
        self.to_convention(Convention::Ideal)
            .entries
            .keys()
            .map(|&(i, j)| j - i as u32)
            .max()
    }

    /// All ideal-convention entries on one strand j = i + d (true for the zero ideal).
    pub fn is_linear(&self) -> bool {
        let t = self.to_convention(Convention::Ideal);
        let mut strands = t.entries.keys().map(|&(i, j)| j - i as u32);
        match strands.next() {
            None => true,
            Some(d) => strands.all(|e| e == d),
        }
    }

    /// Macaulay2-style layout: columns are homological degrees, rows are
    /// strands j - i.
    pub fn render(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "ring {} {}, convention {}{}",
            self.kind.tag(),
            self.n,
            self.convention.name(),
            match self.max_homological() {
                Some(m) => format!(", homological window 0..{m}"),
                None => String::new(),
            }
        );
        if self.entries.is_empty() {
            s.push_str("(zero)\n");
            return s;
        }
        let imax = self.entries.keys().map(|e| e.0).max().unwrap();
        let rows: Vec<u32> = {
            let lo = self.entries.keys().map(|&(i, j)| j - i as u32).min().unwrap();
            let hi = self.entries.keys().map(|&(i, j)| j - i as u32).max().unwrap();
            (lo..=hi).collect()
        };
        let cell = |v: u64| if v == 0 { ".".to_string() } else { v.to_string() };
        let mut columns: Vec<Vec<String>> = Vec::new();
        for i in 0..=imax {
            let mut col = vec![i.to_string(), self.total(i).to_string()];
            col.extend(rows.iter().map(|&k| cell(self.get(i, i as u32 + k))));
            columns.push(col);
        }
        let width: Vec<usize> = columns.iter().map(|c| c.iter().map(String::len).max().unwrap()).collect();
        let labels: Vec<String> = std::iter::once(String::new())
            .chain(std::iter::once("total:".to_string()))
            .chain(rows.iter().map(|k| format!("{k}:")))
            .collect();
        let lw = labels.iter().map(String::len).max().unwrap();
        for (r, label) in labels.iter().enumerate() {
            let mut line = format!("{label:>lw$}");
            for (c, col) in columns.iter().enumerate() {
                let _ = write!(line, " {:>w$}", col[r], w = width[c]);
            }
            s.push_str(line.trim_end());
            s.push('\n');
        }
        s
    }
}

/// Graded pieces of R/I in degrees 0..=max_degree.
pub(crate) struct QuotientModule {
    ring: Ring,
    pieces: Vec<QuotientBasis>,
}

impl QuotientModule {
    pub(crate) fn new(ideal: &GradedIdeal, max_degree: u32) -> Self {
        let top = ideal.ring().top_degree().map_or(max_degree, |t| t.min(max_degree));
        let pieces = (0..=top).map(|d| ideal.piece(d).quotient()).collect();
        QuotientModule {
            ring: ideal.ring().clone(),
            pieces,
        }
    }

    pub(crate) fn ring(&self) -> &Ring {
        &self.ring
    }

    pub(crate) fn dim(&self, d: i64) -> usize {
        if d < 0 {
            return 0;
        }
        match self.pieces.get(d as usize) {
            Some(p) => p.dim(),
            None => {
                assert!(
                    self.ring.top_degree().is_some_and(|t| d as u32 > t),
                    "quotient degree {d} was not computed"
                );
                0
            }
        }
    }

    /// x_var · b_s (left multiplication) as coordinates in degree d + 1.
    pub(crate) fn multiply(&self, var: usize, d: u32, s: usize) -> Vec<(usize, Rational)> {
        if self.dim(d as i64 + 1) == 0 {
            return vec![];
        }
        let b = &self.pieces[d as usize].standard()[s];
        let v = Monomial::var(self.ring.n(), var);
        match self.ring.mul_monomials(&v, b) {
            None => vec![],
            Some((sign, m)) => {
                let nf = self.pieces[d as usize + 1].normal_form(&m);
                if sign > 0 {
                    nf
                } else {
                    nf.into_iter().map(|(c, x)| (c, -x)).collect()
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum ComplexKind {
    /// exterior powers, over S
    Koszul,
    /// divided powers, over E
    Cartan,
}

/// Koszul or Cartan complex of R/I on a sequence of coordinate variables.
/// Chains in bidegree (i, j) are labels of weight i tensored with (R/I)_{j-i}.
pub(crate) struct LinearComplex<'a> {
    module: &'a QuotientModule,
    vars: Vec<usize>,
    kind: ComplexKind,
}

impl<'a> LinearComplex<'a> {
    pub(crate) fn new(module: &'a QuotientModule, vars: Vec<usize>) -> Self {
        let kind = match module.ring().kind() {
            RingKind::Polynomial => ComplexKind::Koszul,
            RingKind::Exterior => ComplexKind::Cartan,
        };
        LinearComplex { module, vars, kind }
    }

    pub(crate) fn module(&self) -> &QuotientModule {
        self.module
    }

    /// Labels of weight i: 0/1 vectors (Koszul) or multi-indices (Cartan)
    /// over the positions of `vars`, in a fixed order.
    pub(crate) fn labels(&self, i: usize) -> Vec<Vec<u16>> {
        let p = self.vars.len();
        if p == 0 {
            return if i == 0 { vec![vec![]] } else { vec![] };
        }
        let cap = match self.kind {
            ComplexKind::Koszul => 1,
            ComplexKind::Cartan => u16::MAX,
        };
        let mut out = Vec::new();
        let mut cur = vec![0u16; p];
        fill(&mut out, &mut cur, 0, i as u32, cap);
        out
    }

    pub(crate) fn chain_dim(&self, i: usize, j: u32) -> usize {
        let d = j as i64 - i as i64;
        if d < 0 {
            return 0;
        }
        self.labels(i).len() * self.module.dim(d)
    }

    /// Boundary of a label: (sign, position, smaller label).
    fn boundary(&self, label: &[u16]) -> Vec<(i8, usize, Vec<u16>)> {
        let mut out = Vec::new();
        let mut before = 0u32;
        for t in 0..label.len() {
            if label[t] == 0 {
                continue;
            }
            let mut l = label.to_vec();
            l[t] -= 1;
            let sign = match self.kind {
                ComplexKind::Koszul => {
                    if before.is_multiple_of(2) {
                        1
                    } else {
                        -1
                    }
                }
                ComplexKind::Cartan => 1,
            };
            out.push((sign, t, l));
            before += label[t] as u32;
        }
        out
    }

    /// Matrix of ∂: C_{i,j} → C_{i-1,j}, one row per source basis element
    /// (label-major), columns indexed the same way in the target.
    pub(crate) fn differential(&self, i: usize, j: u32) -> (Vec<Vec<(usize, Rational)>>, usize) {
        let d = j as i64 - i as i64;
        if i == 0 || d < 0 {
            return (vec![], self.chain_dim(i.saturating_sub(1), j));
        }
        let d = d as u32;
        let src_labels = self.labels(i);
        let tgt_labels = self.labels(i - 1);
        let tgt_index: HashMap<&Vec<u16>, usize> = tgt_labels.iter().enumerate().map(|(k, l)| (l, k)).collect();
        let dim_src = self.module.dim(d as i64);
        let dim_tgt = self.module.dim(d as i64 + 1);
        let mut rows = Vec::with_capacity(src_labels.len() * dim_src);
        for label in &src_labels {
            let bd = self.boundary(label);
            for s in 0..dim_src {
                let mut row: BTreeMap<usize, Rational> = BTreeMap::new();
                for (sign, t, l) in &bd {
                    let base = tgt_index[l] * dim_tgt;
                    for (c, x) in self.module.multiply(self.vars[*t], d, s) {
                        let v = if *sign > 0 { x } else { -x };
                        *row.entry(base + c).or_insert_with(|| Rational::from_integer(0.into())) += v;
                    }
                }
                rows.push(row.into_iter().filter(|(_, x)| *x != Rational::from_integer(0.into())).collect());
            }
        }
        (rows, tgt_labels.len() * dim_tgt)
    }

    pub(crate) fn rank(&self, i: usize, j: u32) -> usize {
        let (rows, cols) = self.differential(i, j);
        rank(rows.iter().map(|r| integer_row(r)), cols)
    }

    /// dim H_i in internal degree j.
    pub(crate) fn homology_dim(&self, i: usize, j: u32) -> usize {
        self.chain_dim(i, j) - self.rank(i, j) - self.rank(i + 1, j)
    }
}

fn fill(out: &mut Vec<Vec<u16>>, cur: &mut [u16], pos: usize, left: u32, cap: u16) {
    if pos + 1 == cur.len() {
        if left <= cap as u32 {
            cur[pos] = left as u16;
            out.push(cur.to_vec());
            cur[pos] = 0;
        }
        return;
    }
    for e in (0..=left.min(cap as u32)).rev() {
        cur[pos] = e as u16;
        fill(out, cur, pos + 1, left - e, cap);
    }
    cur[pos] = 0;
}

/// Betti numbers of S/M for a monomial ideal M, computed multidegree by
/// multidegree (only multidegrees dividing the lcm of the generators can
/// carry Betti numbers).
pub fn monomial_betti(m: &MonomialIdeal, convention: Convention) -> Result<BettiTable> {
    let ring = m.ring();
    if ring.is_exterior() {
        return Err(Error::Invalid("multigraded Koszul Betti numbers need a polynomial ring".into()));
    }
    let n = ring.n();
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);
    if !m.generators().is_empty() {
        let lcm = m.generators().iter().skip(1).fold(m.generators()[0].clone(), |a, b| a.lcm(b));
        let mut a = vec![0u16; n];
        loop {
            let ma = Monomial::new(a.clone());
            if m.contains(&ma) {
                for (i, b) in multidegree_betti(m, &ma).into_iter().enumerate() {
                    if b > 0 {
                        *entries.entry((i, ma.degree())).or_default() += b;
                    }
                }
            }
            // next multidegree in the box below lcm
            let mut k = 0;
            while k < n && a[k] == lcm.exponent(k) {
                a[k] = 0;
                k += 1;
            }
            if k == n {
                break;
            }
            a[k] += 1;
        }
    }
    Ok(BettiTable::from_quotient(ring, entries, None).to_convention(convention))
}

fn multidegree_betti(m: &MonomialIdeal, a: &Monomial) -> Vec<u64> {
    let n = a.nvars();
    let support: Vec<usize> = (0..n).filter(|&t| a.exponent(t) > 0).collect();
    let s = support.len();
    // chains: subsets F of the support with x^{a - F} outside M
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); s + 1];
    for mask in 0u32..(1 << s) {
        let mut exps = a.exps().to_vec();
        for (k, &t) in support.iter().enumerate() {
            if mask & (1 << k) != 0 {
                exps[t] -= 1;
            }
        }
        if !m.contains(&Monomial::new(exps)) {
            by_size[mask.count_ones() as usize].push(mask);
        }
    }
    let ranks: Vec<usize> = (0..=s + 1)
        .map(|i| {
            if i == 0 || i > s {
                return 0;
            }
            let tgt: HashMap<u32, usize> = by_size[i - 1].iter().enumerate().map(|(k, &f)| (f, k)).collect();
            let rows = by_size[i].iter().map(|&f| {
                let mut row: SparseVec = Vec::new();
                let mut before = 0;
                for k in 0..s {
                    if f & (1 << k) != 0 {
                        if let Some(&c) = tgt.get(&(f & !(1 << k))) {
                            let sign = if before % 2 == 0 { 1 } else { -1 };
                            row.push((c, sign.into()));
                        }
                        before += 1;
                    }
                }
                row.sort_by_key(|e| e.0);
                row
            });
            rank(rows, by_size[i - 1].len())
        })
        .collect();
    (0..=n)
        .map(|i| {
            if i > s {
                return 0;
            }
            (by_size[i].len() - ranks[i] - ranks[i + 1]) as u64
        })
        .collect()
}

/// An upper bound for reg(I) (ideal convention) of a polynomial ideal: the
/// regularity of its revlex initial ideal in the given coordinates. Zero for
/// the zero ideal.
pub fn regularity_bound(ideal: &GradedIdeal) -> Result<u32> {
    let lead = initial_ideal(&ideal.with_order(TermOrder::DegRevLex));
    Ok(monomial_betti(&lead, Convention::Ideal)?.regularity().unwrap_or(0))
}

/// Graded Betti numbers over S by Koszul homology of S/I.
pub fn koszul_betti(ideal: &GradedIdeal, convention: Convention) -> Result<BettiTable> {
    let ring = ideal.ring();
    if ring.is_exterior() {
        return Err(Error::Invalid("Koszul Betti numbers need a polynomial ring".into()));
    }
    let n = ring.n();
    // one strand beyond the bound is computed and must vanish
    let bound = regularity_bound(ideal)?.saturating_sub(1);
    let top = bound + 1;
    let module = QuotientModule::new(ideal, top + 1);
    let cx = LinearComplex::new(&module, (0..n).collect());
    let mut entries = BTreeMap::new();
    for i in 0..=n {
        for k in 0..=top {
            let j = i as u32 + k;
            let b = cx.homology_dim(i, j) as u64;
            if b > 0 {
                if k == top {
                    return Err(Error::Internal(format!(
                        "Betti number β_{{{i},{j}}} beyond the regularity bound {bound}"
                    )));
                }
                entries.insert((i, j), b);
            }
        }
    }
    Ok(BettiTable::from_quotient(ring, entries, None).to_convention(convention))
}

/// Graded Betti numbers over E by Cartan homology of E/J, for homological
/// degrees 0..=imax (quotient indexing).
pub fn cartan_betti(ideal: &GradedIdeal, convention: Convention, imax: usize) -> Result<BettiTable> {
    let ring = ideal.ring();
    if !ring.is_exterior() {
        return Err(Error::Invalid("Cartan Betti numbers need an exterior algebra".into()));
    }
    let n = ring.n();
    let module = QuotientModule::new(ideal, n as u32);
    let cx = LinearComplex::new(&module, (0..n).collect());
    let mut entries = BTreeMap::new();
    for i in 0..=imax {
        for k in 0..=n as u32 {
            let b = cx.homology_dim(i, i as u32 + k) as u64;
            if b > 0 {
                entries.insert((i, i as u32 + k), b);
            }
        }
    }
    Ok(BettiTable::from_quotient(ring, entries, Some(imax)).to_convention(convention))
}

/// Betti table of R/I (or I) for either ring kind.
pub fn betti_table(ideal: &GradedIdeal, convention: Convention, imax: usize) -> Result<BettiTable> {
    match ideal.ring().kind() {
        RingKind::Polynomial => match ideal.as_monomial_ideal() {
            Some(m) => monomial_betti(&m, convention),
            None => koszul_betti(ideal, convention),
        },
        RingKind::Exterior => cartan_betti(ideal, convention, imax),
    }
}

/// Betti table of a monomial ideal for either ring kind.
pub fn monomial_ideal_betti(m: &MonomialIdeal, convention: Convention, imax: usize) -> Result<BettiTable> {
    match m.ring().kind() {
        RingKind::Polynomial => monomial_betti(m, convention),
        RingKind::Exterior => cartan_betti(&m.to_ideal(), convention, imax),
    }
}

fn require_strongly_stable(m: &MonomialIdeal, kind: RingKind) -> Result<()> {
    if m.ring().kind() != kind {
        return Err(Error::Invalid(format!("expected a {} ideal", kind.tag())));
    }
    if !m.is_strongly_stable() {
        return Err(Error::Invalid("ideal is not strongly stable".into()));
    }
    Ok(())
}

/// β_{i,i+j}(I) = Σ_{u ∈ G(I), deg u = j} C(m(u)-1, i) for strongly stable I ⊂ S.
pub fn ek_betti(m: &MonomialIdeal, convention: Convention) -> Result<BettiTable> {
    require_strongly_stable(m, RingKind::Polynomial)?;
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);
    for u in m.generators() {
        let mu = u.max_var() as i64;
        for i in 0..mu as usize {
            let b = binomial(mu - 1, i as i64) as u64;
            *entries.entry((i + 1, i as u32 + u.degree())).or_default() += b;
        }
    }
    Ok(BettiTable::from_quotient(m.ring(), entries, None).to_convention(convention))
}

/// Bigatti's formula through the counts m_{≤q}(I, d), for strongly stable I ⊂ S:
/// β_{i+1,i+1+j}(S/I) = dim I_{j+1}·C(n-1,i) − Σ_{q=i}^{n-1} m_{≤q}(I,j+1)·C(q-1,i-1)
///                      − Σ_{q=i+1}^{n} m_{≤q}(I,j)·C(q-1,i).
pub fn bigatti_betti(m: &MonomialIdeal) -> Result<BettiTable> {
    require_strongly_stable(m, RingKind::Polynomial)?;
    let n = m.ring().n() as i64;
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);
    let top = m.max_degree();
    for j in 0..top {
        let mut leq: Vec<Vec<i64>> = vec![vec![0; n as usize + 1]; 2];
        for (slot, d) in [(0usize, j), (1, j + 1)] {
            for q in 1..=n {
                leq[slot][q as usize] = m.count_leq(q as usize, d) as i64;
            }
        }
        for i in 0..n {
            let mut v = leq[1][n as usize] * binomial(n - 1, i) as i64;
            for q in i.max(1)..n {
                v -= leq[1][q as usize] * binomial(q - 1, i - 1) as i64;
            }
            for q in (i + 1)..=n {
                v -= leq[0][q as usize] * binomial(q - 1, i) as i64;
            }
            if v < 0 {
                return Err(Error::Internal(format!("negative value {v} from the m_<=q formula")));
            }
            if v > 0 {
                entries.insert((i as usize + 1, (i + 1) as u32 + j), v as u64);
            }
        }
    }
    Ok(BettiTable::from_quotient(m.ring(), entries, None))
}

/// β^E_{i,i+k}(E/J) = Σ_{e_S ∈ G(J)_{k+1}} C(m(e_S)+i-2, i-1) for strongly
/// stable J ⊂ E, i = 1..=imax.
pub fn ahh_betti(m: &MonomialIdeal, convention: Convention, imax: usize) -> Result<BettiTable> {
    require_strongly_stable(m, RingKind::Exterior)?;
    let mut entries: BTreeMap<(usize, u32), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);
    for u in m.generators() {
        let mu = u.max_var() as i64;
        let k = u.degree() - 1;
        for i in 1..=imax {
            let b = binomial(mu + i as i64 - 2, i as i64 - 1) as u64;
            *entries.entry((i, i as u32 + k)).or_default() += b;
        }
    }
    Ok(BettiTable::from_quotient(m.ring(), entries, Some(imax)).to_convention(convention))
}

/// reg(I) from the ideal-convention table.
pub fn regularity(ideal: &GradedIdeal, imax: usize) -> Result<u32> {
    if ideal.is_zero() {
        return Err(Error::Invalid("the zero ideal has no regularity".into()));
    }
    betti_table(ideal, Convention::Ideal, imax)?
        .regularity()
        .ok_or_else(|| Error::Invalid("the zero ideal has no regularity".into()))
}

/// Generated in one degree d with all syzygies on the strand j = i + d. The
/// zero ideal counts as linear. Exterior answers refer to the window.
pub fn has_linear_resolution(ideal: &GradedIdeal, imax: usize) -> Result<bool> {
    if ideal.is_zero() {
        return Ok(true);
    }
    Ok(betti_table(ideal, Convention::Ideal, imax)?.is_linear())
}

/// Componentwise linearity through the characterization β(I) = β(gin I),
/// given the Betti table of the revlex gin.
pub fn is_componentwise_linear(table: &BettiTable, gin_table: &BettiTable) -> bool {
    table.to_convention(Convention::Ideal) == gin_table.to_convention(Convention::Ideal)
}

/// Componentwise linearity from the definition: I_{<k>} linear for every
/// k from the initial degree up to `kmax`.
pub fn components_linear(ideal: &GradedIdeal, kmax: u32, imax: usize) -> Result<bool> {
    for k in 0..=kmax {
        if !has_linear_resolution(&ideal.component_ideal(k), imax)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Euler characteristic check: Σ_i (-1)^i β_{i,j}(S/I) is the coefficient of
/// t^j in the numerator of the Hilbert series of S/I.
pub fn euler_characteristic(table: &BettiTable, j: u32) -> i64 {
    let t = table.to_convention(Convention::Quotient);
    t.entries()
        .filter(|e| e.1 == j)
        .map(|(i, _, b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    fn table(src: &str) -> BettiTable {
        betti_table(&parse_ideal(src).unwrap(), Convention::Quotient, 5).unwrap()
    }

    #[test]
    fn koszul_on_the_maximal_ideal() {
        let t = table("ring poly 3 QQ\nx1\nx2\nx3\n");
        for i in 0..=3 {
            assert_eq!(t.get(i, i as u32), binomial(3, i as i64) as u64);
        }
        assert_eq!(t.entries().count(), 4);
    }

    #[test]
    fn koszul_general_path_matches_monomial_path() {
        let i = parse_ideal("ring poly 3 QQ\nx1^2\nx1*x2\nx2^3\nx1*x3^2\n").unwrap();
        let a = koszul_betti(&i, Convention::Quotient).unwrap();
        let b = monomial_betti(&i.as_monomial_ideal().unwrap(), Convention::Quotient).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cartan_examples() {
        let t = table("ring ext 3 QQ\ne1\n");
        for i in 0..=5 {
            assert_eq!(t.get(i, i as u32), 1);
        }
        let t = table("ring ext 2 QQ\ne1\ne2\n");
        for i in 0..=5 {
            assert_eq!(t.get(i, i as u32), binomial(i as i64 + 1, i as i64) as u64);
        }
        let t = table("ring ext 3 QQ\ne1*e2\n");
        for i in 1..=5 {
            assert_eq!(t.get(i, i as u32 + 1), i as u64);
        }
    }

    #[test]
    fn conventions_round_trip() {
        let t = table("ring poly 2 QQ\nx1\nx2^2\n");
        let i = t.to_convention(Convention::Ideal);
        assert_eq!(i.get(0, 1), 1);
        assert_eq!(i.get(0, 2), 1);
        assert_eq!(i.get(1, 3), 1);
        assert_eq!(i.to_convention(Convention::Quotient), t);
        assert_eq!(t.regularity(), Some(2));
        assert!(!t.is_linear());
    }

    #[test]
    fn render_layout() {
        let t = table("ring poly 2 QQ\nx1\nx2\n");
        assert_eq!(
            t.render(),
            "ring poly 2, convention quotient\n       0 1 2\ntotal: 1 2 1\n    0: 1 2 1\n"
        );
    }
}
