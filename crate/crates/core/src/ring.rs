//! Monomials, term orders, exact polynomials and exterior elements.
//!
//! Both ring kinds share one [`Monomial`] type (an exponent vector). In an
//! exterior algebra every stored monomial is squarefree and multiplication
//! carries the alternating sign; [`ExteriorMonomial`] is the index-set view of
//! such a monomial.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermOrder {
    #[default]
    DegRevLex,
    DegLex,
    Lex,
}

impl TermOrder {
    pub fn name(self) -> &'static str {
        match self {
            TermOrder::DegRevLex => "degrevlex",
            TermOrder::DegLex => "deglex",
            TermOrder::Lex => "lex",
        }
    }

    pub fn from_name(s: &str) -> Option<TermOrder> {
        match s {
            "degrevlex" | "revlex" | "grevlex" => Some(TermOrder::DegRevLex),
            "deglex" | "grlex" => Some(TermOrder::DegLex),
            "lex" => Some(TermOrder::Lex),
            _ => None,
        }
    }

    /// Compares two monomials of the same length. `Greater` means `a` is the
    /// larger monomial (x1 > x2 > ... > xn).
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        match self {
            TermOrder::Lex => lex_cmp(a, b),
            TermOrder::DegLex => a.degree().cmp(&b.degree()).then_with(|| lex_cmp(a, b)),
            TermOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        // smaller exponent on the last differing variable wins
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

fn lex_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    for (x, y) in a.exps.iter().zip(&b.exps) {
        if x != y {
            return x.cmp(y);
        }
    }
    Ordering::Equal
}

impl fmt::Display for TermOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checked comparison of two monomials under `order`.
pub fn compare_monomials(order: TermOrder, a: &Monomial, b: &Monomial) -> Result<Ordering> {
    if a.nvars() != b.nvars() {
        return Err(Error::DimensionMismatch {
            expected: a.nvars(),
            found: b.nvars(),
        });
    }
    Ok(order.cmp(a, b))
}

/// Exponent vector. The derived `Ord` is plain lexicographic comparison of
/// the exponent vectors and is only used for canonical storage.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn new(exps: Vec<u16>) -> Self {
        Monomial { exps }
    }

    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    /// The variable with 0-based index `i`.
    pub fn var(n: usize, i: usize) -> Self {
        let mut m = Monomial::one(n);
        m.exps[i] = 1;
        m
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u16 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    /// m(u): the largest 1-based index of a variable dividing `u`, 0 for the unit.
    pub fn max_var(&self) -> usize {
        self.exps.iter().rposition(|&e| e > 0).map_or(0, |i| i + 1)
    }

    /// Smallest 1-based index of a variable dividing `u`, 0 for the unit.
    pub fn min_var(&self) -> usize {
        self.exps.iter().position(|&e| e > 0).map_or(0, |i| i + 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[i] += 1;
        m
    }

    /// `self / other`, if `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        Some(Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.min(b)).collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Replaces one factor `x_from` by `x_to` (0-based), if `x_from` divides.
    pub fn exchange(&self, from: usize, to: usize) -> Option<Monomial> {
        if self.exps[from] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[from] -= 1;
        m.exps[to] += 1;
        Some(m)
    }

    /// Restricts to the first `q` variables, or `None` if a later variable divides.
    pub fn restrict(&self, q: usize) -> Option<Monomial> {
        if self.exps[q..].iter().any(|&e| e > 0) {
            return None;
        }
        Some(Monomial {
            exps: self.exps[..q].to_vec(),
        })
    }

    pub fn extend(&self, n: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps.resize(n, 0);
        Monomial { exps }
    }
}

/// A squarefree monomial `e_S` of an exterior algebra, stored as its sorted
/// support with 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExteriorMonomial {
    n: usize,
    support: Vec<usize>,
}

impl ExteriorMonomial {
    pub fn new(n: usize, support: &[usize]) -> Result<Self> {
        let mut s = support.to_vec();
        s.sort_unstable();
        let distinct = s.windows(2).all(|w| w[0] < w[1]);
        if !distinct {
            return Err(Error::Invalid(format!("repeated index in exterior monomial {support:?}")));
        }
        if let Some(&bad) = s.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::VariableOutOfRange { index: bad, n });
        }
        Ok(ExteriorMonomial { n, support: s })
    }

    pub fn from_monomial(m: &Monomial) -> Option<Self> {
        if !m.is_squarefree() {
            return None;
        }
        let support = (0..m.nvars()).filter(|&i| m.exponent(i) > 0).map(|i| i + 1).collect();
        Some(ExteriorMonomial {
            n: m.nvars(),
            support,
        })
    }

    pub fn to_monomial(&self) -> Monomial {
        let mut exps = vec![0; self.n];
        for &i in &self.support {
            exps[i - 1] = 1;
        }
        Monomial::new(exps)
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn degree(&self) -> usize {
        self.support.len()
    }

    /// m(e_S) = max(S), 0 for the unit.
    pub fn max_var(&self) -> usize {
        self.support.last().copied().unwrap_or(0)
    }

    /// `self ∧ other`: `None` when the supports meet, otherwise the sign and
    /// the merged monomial.
    pub fn multiply(&self, other: &ExteriorMonomial) -> Option<(i8, ExteriorMonomial)> {
        let (sign, m) = exterior_product(&self.to_monomial(), &other.to_monomial())?;
        Some((sign, ExteriorMonomial::from_monomial(&m).expect("squarefree")))
    }
}

pub fn exterior_multiply(a: &ExteriorMonomial, b: &ExteriorMonomial) -> Option<(i8, ExteriorMonomial)> {
    a.multiply(b)
}

/// Sign and support of the wedge product of two squarefree monomials. The
/// sign is the parity of the number of transpositions needed to sort the
/// concatenated supports.
pub fn exterior_product(a: &Monomial, b: &Monomial) -> Option<(i8, Monomial)> {
    let mut inversions = 0usize;
    let mut greater_in_a = 0usize;
    // walk from the top index down; for each index of b count the indices of a above it
    for i in (0..a.nvars()).rev() {
        let (x, y) = (a.exps[i], b.exps[i]);
        if x > 0 && y > 0 {
            return None;
        }
        if y > 0 {
            inversions += greater_in_a;
        }
        if x > 0 {
            greater_in_a += 1;
        }
    }
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    Some((sign, a.mul(b)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    #[serde(rename = "poly")]
    Polynomial,
    #[serde(rename = "ext")]
    Exterior,
}

impl RingKind {
    pub fn tag(self) -> &'static str {
        match self {
            RingKind::Polynomial => "poly",
            RingKind::Exterior => "ext",
        }
    }
}

/// Ring descriptor: K[x1..xn] or the exterior algebra on e1..en, K = QQ.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    kind: RingKind,
    n: usize,
    names: Vec<String>,
    order: TermOrder,
}

impl Ring {
    pub fn new(kind: RingKind, n: usize, order: TermOrder) -> Result<Ring> {
        if n == 0 {
            return Err(Error::Invalid("a ring needs at least one variable".into()));
        }
        if kind == RingKind::Exterior && n > 63 {
            return Err(Error::Invalid("exterior algebras are limited to 63 generators".into()));
        }
        let prefix = match kind {
            RingKind::Polynomial => "x",
            RingKind::Exterior => "e",
        };
        let names = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Ok(Ring { kind, n, names, order })
    }

    pub fn polynomial(n: usize) -> Ring {
        Ring::new(RingKind::Polynomial, n, TermOrder::DegRevLex).expect("n >= 1")
    }

    pub fn exterior(n: usize) -> Ring {
        Ring::new(RingKind::Exterior, n, TermOrder::DegRevLex).expect("n >= 1")
    }

    pub fn with_order(&self, order: TermOrder) -> Ring {
        Ring { order, ..self.clone() }
    }

    /// Same kind and order, first `q` variables only.
    pub fn truncated(&self, q: usize) -> Ring {
        Ring {
            kind: self.kind,
            n: q,
            names: self.names[..q].to_vec(),
            order: self.order,
        }
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> TermOrder {
        self.order
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_exterior(&self) -> bool {
        self.kind == RingKind::Exterior
    }

    /// Highest degree with a nonzero graded piece, if bounded.
    pub fn top_degree(&self) -> Option<u32> {
        match self.kind {
            RingKind::Polynomial => None,
            RingKind::Exterior => Some(self.n as u32),
        }
    }

    /// dim_K R_d.
    pub fn graded_dim(&self, d: u32) -> u64 {
        let (n, d) = (self.n as u64, d as u64);
        match self.kind {
            RingKind::Polynomial => crate::linalg::binomial((n + d - 1) as i64, d as i64) as u64,
            RingKind::Exterior => crate::linalg::binomial(n as i64, d as i64) as u64,
        }
    }

    /// All monomials of degree `d`, sorted from largest to smallest under the
    /// ring's term order.
    pub fn monomials_of_degree(&self, d: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u16; self.n];
        let cap = if self.is_exterior() { 1 } else { u16::MAX };
        fill_monomials(&mut out, &mut cur, 0, d, cap);
        let order = self.order;
        out.sort_by(|a, b| order.cmp(b, a));
        out
    }

    /// Monomials of degree `d` in the first `q` variables (padded to n).
    pub fn monomials_of_degree_in(&self, d: u32, q: usize) -> Vec<Monomial> {
        self.truncated(q)
            .monomials_of_degree(d)
            .into_iter()
            .map(|m| m.extend(self.n))
            .collect()
    }

    pub fn is_valid_monomial(&self, m: &Monomial) -> bool {
        m.nvars() == self.n && (!self.is_exterior() || m.is_squarefree())
    }

    /// Product of two monomials with its sign; `None` if it vanishes.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(i8, Monomial)> {
        match self.kind {
            RingKind::Polynomial => Some((1, a.mul(b))),
            RingKind::Exterior => exterior_product(a, b),
        }
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(self.n, i), Rational::one())
    }

    pub fn mul(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let mut out = BTreeMap::new();
        for (a, c) in f.terms() {
            for (b, d) in g.terms() {
                if let Some((s, m)) = self.mul_monomials(a, b) {
                    let v = if s > 0 { c * d } else { -(c * d) };
                    add_into(&mut out, m, v);
                }
            }
        }
        Polynomial::from_map(self.n, out)
    }

    /// `u * f` for a monomial `u` (left multiplication in the exterior case).
    pub fn mul_monomial(&self, u: &Monomial, f: &Polynomial) -> Polynomial {
        let mut out = BTreeMap::new();
        for (b, d) in f.terms() {
            if let Some((s, m)) = self.mul_monomials(u, b) {
                let v = if s > 0 { d.clone() } else { -d.clone() };
                add_into(&mut out, m, v);
            }
        }
        Polynomial::from_map(self.n, out)
    }

    pub fn pow(&self, f: &Polynomial, e: u16) -> Polynomial {
        let mut acc = Polynomial::constant(self.n, Rational::one());
        for _ in 0..e {
            acc = self.mul(&acc, f);
        }
        acc
    }

    pub fn leading_term<'a>(&self, f: &'a Polynomial) -> Option<(&'a Monomial, &'a Rational)> {
        f.terms().max_by(|a, b| self.order.cmp(a.0, b.0))
    }

    pub fn leading_monomial<'a>(&self, f: &'a Polynomial) -> Option<&'a Monomial> {
        self.leading_term(f).map(|t| t.0)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for i in 0..self.n {
            match m.exponent(i) {
                0 => {}
                1 => parts.push(self.names[i].clone()),
                e => parts.push(format!("{}^{}", self.names[i], e)),
            }
        }
        parts.join("*")
    }

    /// Renders `f` with terms in decreasing term order, e.g. `x1^2 - 3/2*x1*x2`.
    pub fn format_polynomial(&self, f: &Polynomial) -> String {
        if f.is_zero() {
            return "0".into();
        }
        let mut terms: Vec<_> = f.terms().collect();
        terms.sort_by(|a, b| self.order.cmp(b.0, a.0));
        let mut s = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&self.format_monomial(m));
            } else {
                s.push_str(&format!("{}*{}", abs, self.format_monomial(m)));
            }
        }
        s
    }
}

fn fill_monomials(out: &mut Vec<Monomial>, cur: &mut [u16], pos: usize, left: u32, cap: u16) {
    if pos + 1 == cur.len() {
        if left <= cap as u32 {
            cur[pos] = left as u16;
            out.push(Monomial::new(cur.to_vec()));
            cur[pos] = 0;
        }
        return;
    }
    let top = left.min(cap as u32);
    for e in 0..=top {
        cur[pos] = e as u16;
        fill_monomials(out, cur, pos + 1, left - e, cap);
    }
    cur[pos] = 0;
}

fn add_into(map: &mut BTreeMap<Monomial, Rational>, m: Monomial, c: Rational) {
    use std::collections::btree_map::Entry;
    match map.entry(m) {
        Entry::Vacant(v) => {
            if !c.is_zero() {
                v.insert(c);
            }
        }
        Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
    }
}

/// A finite map monomial → nonzero rational. In an exterior algebra the same
/// type holds exterior elements (squarefree monomials only).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

pub type ExteriorElement = Polynomial;

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            nvars: n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Polynomial::monomial(Monomial::one(n), c)
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        let n = m.nvars();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { nvars: n, terms }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), n);
            add_into(&mut map, m, c);
        }
        Polynomial { nvars: n, terms: map }
    }

    fn from_map(n: usize, terms: BTreeMap<Monomial, Rational>) -> Self {
        Polynomial { nvars: n, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// The common degree of all terms, `None` for zero or inhomogeneous input.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut map = self.terms.clone();
        for (m, c) in &other.terms {
            add_into(&mut map, m.clone(), c.clone());
        }
        Polynomial::from_map(self.nvars, map)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial::from_map(
            self.nvars,
            self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        )
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: TermOrder) -> Polynomial {
        match self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }
}

/// Square matrix over QQ used for linear changes of coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareMatrix {
    n: usize,
    entries: Vec<Rational>,
}

impl SquareMatrix {
    pub fn identity(n: usize) -> Self {
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = Rational::one();
        }
        SquareMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::Invalid("matrix is not square".into()));
        }
        Ok(SquareMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Result<Self> {
        SquareMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.n + c]
    }

    pub fn rows(&self) -> Vec<Vec<Rational>> {
        self.entries.chunks(self.n).map(|c| c.to_vec()).collect()
    }

    pub fn mul(&self, other: &SquareMatrix) -> SquareMatrix {
        let n = self.n;
        let mut entries = vec![Rational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    entries[i * n + j] += a * other.get(k, j);
                }
            }
        }
        SquareMatrix { n, entries }
    }

    pub fn determinant(&self) -> Rational {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                for j in 0..n {
                    a.swap(p * n + j, col * n + j);
                }
                det = -det;
            }
            let piv = a[col * n + col].clone();
            det *= &piv;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let f = &a[r * n + col] / &piv;
                for j in col..n {
                    let v = &f * &a[col * n + j];
                    a[r * n + j] -= v;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }
}

impl Serialize for SquareMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = self
            .rows()
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.to_string()).collect())
            .collect();
        rows.serialize(s)
    }
}

/// Replaces each variable x_i by Σ_j g[j][i]·x_j. Fails for singular `g`.
pub fn apply_linear_change(ring: &Ring, f: &Polynomial, g: &SquareMatrix) -> Result<Polynomial> {
    if g.n() != ring.n() || f.nvars() != ring.n() {
        return Err(Error::DimensionMismatch {
            expected: ring.n(),
            found: g.n(),
        });
    }
    if !g.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    Ok(LinearChange::new(ring, g).apply(f))
}

/// Substitution x_i ↦ Σ_j g[j][i]·x_j with cached variable powers. Callers
/// are responsible for invertibility.
pub(crate) struct LinearChange<'a> {
    ring: &'a Ring,
    images: Vec<Polynomial>,
    powers: Vec<Vec<Polynomial>>,
}

impl<'a> LinearChange<'a> {
    pub(crate) fn new(ring: &'a Ring, g: &SquareMatrix) -> Self {
        let n = ring.n();
        let images: Vec<Polynomial> = (0..n)
            .map(|i| {
                Polynomial::from_terms(n, (0..n).map(|j| (Monomial::var(n, j), g.get(j, i).clone())))
            })
            .collect();
        let powers = images
            .iter()
            .map(|l| vec![Polynomial::constant(n, Rational::one()), l.clone()])
            .collect();
        LinearChange { ring, images, powers }
    }

    fn power(&mut self, i: usize, e: u16) -> Polynomial {
        while self.powers[i].len() <= e as usize {
            let next = self.ring.mul(self.powers[i].last().unwrap(), &self.images[i]);
            self.powers[i].push(next);
        }
        self.powers[i][e as usize].clone()
    }

    pub(crate) fn apply(&mut self, f: &Polynomial) -> Polynomial {
        let n = self.ring.n();
        let mut acc = Polynomial::zero(n);
        for (m, c) in f.terms() {
            let mut t = Polynomial::constant(n, c.clone());
            for i in 0..n {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                // increasing index order keeps exterior products in canonical order
                let p = self.power(i, e);
                t = self.ring.mul(&t, &p);
                if t.is_zero() {
                    break;
                }
            }
            acc = acc.add(&t);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn degrevlex_examples() {
        let o = TermOrder::DegRevLex;
        assert_eq!(o.cmp(&mono(&[1, 0, 0]), &mono(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[0, 2, 0]), &mono(&[1, 0, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[2, 1]), &mono(&[1, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&mono(&[1, 1]), &mono(&[3, 0])), Ordering::Less);
        assert_eq!(o.cmp(&mono(&[1, 1, 0]), &mono(&[1, 1, 0])), Ordering::Equal);
    }

    #[test]
    fn lex_and_deglex_differ_from_revlex() {
        // x1*x3 vs x2^2: revlex prefers x2^2, lex prefers x1*x3
        let (a, b) = (mono(&[1, 0, 1]), mono(&[0, 2, 0]));
        assert_eq!(TermOrder::Lex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(TermOrder::DegLex.cmp(&a, &b), Ordering::Greater);
        assert_eq!(TermOrder::DegRevLex.cmp(&a, &b), Ordering::Less);
        // lex ignores degree
        assert_eq!(TermOrder::Lex.cmp(&mono(&[1, 0]), &mono(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn compare_rejects_mismatched_lengths() {
        assert!(compare_monomials(TermOrder::Lex, &mono(&[1]), &mono(&[1, 0])).is_err());
    }

    #[test]
    fn exterior_signs() {
        let e = |s: &[usize]| ExteriorMonomial::new(4, s).unwrap();
        assert_eq!(e(&[1, 2]).multiply(&e(&[3])), Some((1, e(&[1, 2, 3]))));
        assert_eq!(e(&[2]).multiply(&e(&[1])), Some((-1, e(&[1, 2]))));
        assert_eq!(e(&[1]).multiply(&e(&[1])), None);
        assert_eq!(e(&[2, 4]).multiply(&e(&[1, 3])), Some((-1, e(&[1, 2, 3, 4]))));
        assert!(ExteriorMonomial::new(3, &[1, 1]).is_err());
        assert!(ExteriorMonomial::new(3, &[4]).is_err());
    }

    #[test]
    fn max_variable() {
        assert_eq!(mono(&[1, 0, 2]).max_var(), 3);
        assert_eq!(ExteriorMonomial::new(4, &[1, 4]).unwrap().max_var(), 4);
        assert_eq!(Monomial::one(3).max_var(), 0);
    }

    #[test]
    fn monomial_enumeration_is_sorted_and_complete() {
        let r = Ring::polynomial(3);
        let ms = r.monomials_of_degree(2);
        assert_eq!(ms.len(), 6);
        assert_eq!(ms[0], mono(&[2, 0, 0]));
        assert_eq!(ms[5], mono(&[0, 0, 2]));
        let e = Ring::exterior(4);
        assert_eq!(e.monomials_of_degree(2).len(), 6);
        assert_eq!(e.monomials_of_degree(5).len(), 0);
        assert_eq!(e.graded_dim(2), 6);
        assert_eq!(r.graded_dim(4), 15);
    }

    #[test]
    fn binomial_substitution() {
        let r = Ring::polynomial(2);
        let f = Polynomial::monomial(mono(&[2, 0]), rat(1));
        let g = SquareMatrix::from_integers(&[vec![1, 0], vec![1, 1]]).unwrap();
        let h = apply_linear_change(&r, &f, &g).unwrap();
        assert_eq!(r.format_polynomial(&h), "x1^2 + 2*x1*x2 + x2^2");
    }

    #[test]
    fn exterior_substitution() {
        let r = Ring::exterior(2);
        let e12 = Polynomial::monomial(mono(&[1, 1]), rat(1));
        let id = SquareMatrix::identity(2);
        assert_eq!(apply_linear_change(&r, &e12, &id).unwrap(), e12);
        let swap = SquareMatrix::from_integers(&[vec![0, 1], vec![1, 0]]).unwrap();
        let e1 = Polynomial::monomial(mono(&[1, 0]), rat(1));
        let e2 = Polynomial::monomial(mono(&[0, 1]), rat(1));
        assert_eq!(apply_linear_change(&r, &e1, &swap).unwrap(), e2);
        // e1∧e2 ↦ e2∧e1 = -e1∧e2
        assert_eq!(apply_linear_change(&r, &e12, &swap).unwrap(), e12.scale(&rat(-1)));
    }

    #[test]
    fn singular_change_is_rejected() {
        let r = Ring::polynomial(2);
        let g = SquareMatrix::from_integers(&[vec![1, 2], vec![2, 4]]).unwrap();
        let f = r.var(0);
        assert!(matches!(apply_linear_change(&r, &f, &g), Err(Error::SingularMatrix)));
    }

    #[test]
    fn formatting() {
        let r = Ring::polynomial(3);
        let f = Polynomial::from_terms(
            3,
            vec![(mono(&[0, 0, 2]), rat(-3)), (mono(&[1, 1, 0]), Rational::new(1.into(), 2.into()))],
        );
        assert_eq!(r.format_polynomial(&f), "1/2*x1*x2 - 3*x3^2");
    }
}
