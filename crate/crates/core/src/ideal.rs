//! Homogeneous ideals, their graded pieces, monomial ideals and Hilbert series.

use std::collections::{HashMap, HashSet};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::{binomial, integer_row, Echelon, SparseVec};
use crate::ring::{LinearChange, Monomial, Polynomial, Rational, Ring, RingKind, SquareMatrix, TermOrder};

/// A homogeneous ideal given by generators. In the exterior case the ideal
/// is two-sided, which for homogeneous generators agrees with the left ideal.
#[derive(Clone, Debug)]
pub struct GradedIdeal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl GradedIdeal {
    pub fn new(ring: Ring, gens: Vec<Polynomial>) -> Result<Self> {
        for (index, g) in gens.iter().enumerate() {
            if g.nvars() != ring.n() {
                return Err(Error::DimensionMismatch {
                    expected: ring.n(),
                    found: g.nvars(),
                });
            }
            if g.is_zero() {
                return Err(Error::ZeroGenerator { index });
            }
            if g.homogeneous_degree().is_none() {
                return Err(Error::NotHomogeneous { index });
            }
            if ring.is_exterior() && g.terms().any(|(m, _)| !m.is_squarefree()) {
                return Err(Error::Invalid(format!("generator {index} is not an exterior element")));
            }
        }
        Ok(GradedIdeal { ring, gens })
    }

    pub fn from_monomials(ring: Ring, gens: &[Monomial]) -> Result<Self> {
        let gens = gens.iter().map(|m| Polynomial::monomial(m.clone(), Rational::one())).collect();
        GradedIdeal::new(ring, gens)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn with_order(&self, order: TermOrder) -> GradedIdeal {
        GradedIdeal {
            ring: self.ring.with_order(order),
            gens: self.gens.clone(),
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(Polynomial::is_monomial)
    }

    /// The monomial ideal generated by the (monomial) generators.
    pub fn as_monomial_ideal(&self) -> Option<MonomialIdeal> {
        if !self.is_monomial() {
            return None;
        }
        let ms = self.gens.iter().map(|g| g.terms().next().unwrap().0.clone()).collect();
        Some(MonomialIdeal::new(self.ring.clone(), ms).expect("validated generators"))
    }

    pub fn generator_degrees(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.homogeneous_degree().unwrap()).collect()
    }

    pub fn max_generator_degree(&self) -> u32 {
        self.generator_degrees().into_iter().max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn add_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<GradedIdeal> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        GradedIdeal::new(self.ring.clone(), gens)
    }

    /// The image under x_i ↦ Σ_j g[j][i]·x_j.
    pub fn transform(&self, g: &SquareMatrix) -> Result<GradedIdeal> {
        if g.n() != self.ring.n() {
            return Err(Error::DimensionMismatch {
                expected: self.ring.n(),
                found: g.n(),
            });
        }
        if !g.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.transform_unchecked(g))
    }

    pub(crate) fn transform_unchecked(&self, g: &SquareMatrix) -> GradedIdeal {
        let mut lc = LinearChange::new(&self.ring, g);
        let gens = self.gens.iter().map(|f| lc.apply(f)).collect();
        GradedIdeal {
            ring: self.ring.clone(),
            gens,
        }
    }

    /// The graded piece I_d as a subspace of R_d.
    pub fn piece(&self, d: u32) -> GradedPiece {
        self.piece_with_target(d, None)
    }

    /// As [`piece`](Self::piece), stopping once the dimension reaches `target`.
    pub fn piece_with_target(&self, d: u32, target: Option<usize>) -> GradedPiece {
        let monomials = self.ring.monomials_of_degree(d);
        let index: HashMap<Monomial, usize> =
            monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let mut echelon = Echelon::new(monomials.len());
        let mut rows: Vec<SparseVec> = Vec::new();
        for g in &self.gens {
            let e = g.homogeneous_degree().unwrap();
            if e > d {
                continue;
            }
            let gi = integer_row_of(g);
            for u in self.ring.monomials_of_degree(d - e) {
                let mut row: Vec<(usize, BigInt)> = Vec::with_capacity(gi.len());
                for (m, c) in &gi {
                    if let Some((s, p)) = self.ring.mul_monomials(&u, m) {
                        let c = if s > 0 { c.clone() } else { -c.clone() };
                        row.push((index[&p], c));
                    }
                }
                if !row.is_empty() {
                    row.sort_by_key(|e| e.0);
                    rows.push(row);
                }
            }
        }
        // sparse rows first keeps fill-in down
        rows.sort_by_key(|r| r.len());
        for r in rows {
            if target.is_some_and(|t| echelon.rank() >= t) {
                break;
            }
            echelon.insert(r);
        }
        GradedPiece {
            ring: self.ring.clone(),
            degree: d,
            monomials,
            index,
            echelon,
        }
    }

    /// dim_K I_d.
    pub fn dim(&self, d: u32) -> usize {
        self.piece(d).dim()
    }

    /// The ideal I_{<k>} generated by the degree-k component.
    pub fn component_ideal(&self, k: u32) -> GradedIdeal {
        GradedIdeal {
            ring: self.ring.clone(),
            gens: self.piece(k).basis(),
        }
    }
}

fn integer_row_of(g: &Polynomial) -> Vec<(Monomial, BigInt)> {
    let ms: Vec<&Monomial> = g.terms().map(|t| t.0).collect();
    let v: Vec<(usize, Rational)> = g.terms().enumerate().map(|(i, (_, c))| (i, c.clone())).collect();
    integer_row(&v).into_iter().map(|(i, c)| (ms[i].clone(), c)).collect()
}

/// I_d inside R_d, with columns indexed by the degree-d monomials in
/// decreasing term order.
#[derive(Clone, Debug)]
pub struct GradedPiece {
    ring: Ring,
    degree: u32,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    echelon: Echelon,
}

impl GradedPiece {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    /// Leading monomials of I_d, i.e. in(I)_d for the ring's term order.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.echelon.pivots().into_iter().map(|c| self.monomials[c].clone()).collect()
    }

    pub fn vector(&self, f: &Polynomial) -> Vec<(usize, Rational)> {
        let mut v: Vec<(usize, Rational)> = f.terms().map(|(m, c)| (self.index[m], c.clone())).collect();
        v.sort_by_key(|e| e.0);
        v
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        f.is_zero() || self.echelon.contains(integer_row(&self.vector(f)))
    }

    /// Reduced echelon basis of I_d as polynomials.
    pub fn basis(&self) -> Vec<Polynomial> {
        let n = self.ring.n();
        self.echelon
            .reduced_rows()
            .into_iter()
            .map(|(_, row)| Polynomial::from_terms(n, row.into_iter().map(|(c, x)| (self.monomials[c].clone(), x))))
            .collect()
    }

    pub fn quotient(&self) -> QuotientBasis {
        let mut standard = Vec::new();
        let mut std_index = HashMap::new();
        for (c, m) in self.monomials.iter().enumerate() {
            if !self.echelon.is_pivot(c) {
                std_index.insert(m.clone(), standard.len());
                standard.push(m.clone());
            }
        }
        let mut rewrite = HashMap::new();
        for (p, row) in self.echelon.reduced_rows() {
            let tail: Vec<(usize, Rational)> = row
                .into_iter()
                .skip(1)
                .map(|(c, x)| (std_index[&self.monomials[c]], -x))
                .collect();
            rewrite.insert(self.monomials[p].clone(), tail);
        }
        QuotientBasis {
            degree: self.degree,
            standard,
            std_index,
            rewrite,
        }
    }
}

/// Basis of (R/I)_d by standard monomials, with normal forms of the others.
#[derive(Clone, Debug)]
pub struct QuotientBasis {
    degree: u32,
    standard: Vec<Monomial>,
    std_index: HashMap<Monomial, usize>,
    rewrite: HashMap<Monomial, Vec<(usize, Rational)>>,
}

impl QuotientBasis {
    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn standard(&self) -> &[Monomial] {
        &self.standard
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.std_index.get(m).copied()
    }

    /// Normal form of a degree-d monomial as coordinates on the standard basis.
    pub fn normal_form(&self, m: &Monomial) -> Vec<(usize, Rational)> {
        if let Some(&i) = self.std_index.get(m) {
            return vec![(i, Rational::one())];
        }
        self.rewrite.get(m).cloned().expect("monomial of the right degree")
    }
}

/// A monomial ideal stored by its minimal generators, sorted by degree and
/// then decreasing term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialIdeal {
    ring: Ring,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn new(ring: Ring, gens: Vec<Monomial>) -> Result<Self> {
        for m in &gens {
            if m.nvars() != ring.n() {
                return Err(Error::DimensionMismatch {
                    expected: ring.n(),
                    found: m.nvars(),
                });
            }
        }
        let gens: Vec<Monomial> = if ring.is_exterior() {
            gens.into_iter().filter(Monomial::is_squarefree).collect()
        } else {
            gens
        };
        let mut gens = minimalize(gens);
        let order = ring.order();
        gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| order.cmp(b, a)));
        Ok(MonomialIdeal { ring, gens })
    }

    pub fn zero(ring: Ring) -> Self {
        MonomialIdeal { ring, gens: vec![] }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn generators_of_degree(&self, d: u32) -> impl Iterator<Item = &Monomial> {
        self.gens.iter().filter(move |m| m.degree() == d)
    }

    pub fn max_degree(&self) -> u32 {
        self.gens.iter().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Number of monomials of degree d in the ideal.
    pub fn dim(&self, d: u32) -> usize {
        self.ring.monomials_of_degree(d).iter().filter(|m| self.contains(m)).count()
    }

    /// m_{≤q}(I, d): monomials of degree d in I involving only x1..xq.
    pub fn count_leq(&self, q: usize, d: u32) -> usize {
        self.ring
            .monomials_of_degree_in(d, q)
            .iter()
            .filter(|m| self.contains(m))
            .count()
    }

    pub fn to_ideal(&self) -> GradedIdeal {
        GradedIdeal::from_monomials(self.ring.clone(), &self.gens).expect("valid monomials")
    }

    pub fn with_ring(&self, ring: Ring) -> MonomialIdeal {
        MonomialIdeal::new(ring, self.gens.clone()).expect("same number of variables")
    }

    /// Strong stability: x_i·u/x_j ∈ I whenever x_j | u and i < j. It is
    /// enough to test minimal generators.
    pub fn is_strongly_stable(&self) -> bool {
        let n = self.ring.n();
        for u in &self.gens {
            for j in 0..n {
                if u.exponent(j) == 0 {
                    continue;
                }
                for i in 0..j {
                    if self.ring.is_exterior() && u.exponent(i) > 0 {
                        continue;
                    }
                    let v = u.exchange(j, i).unwrap();
                    if !self.contains(&v) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn hilbert_series(&self) -> HilbertSeries {
        match self.ring.kind() {
            RingKind::Polynomial => HilbertSeries {
                kind: RingKind::Polynomial,
                n: self.ring.n(),
                numerator: hilbert_numerator(self.gens.clone()),
            },
            RingKind::Exterior => {
                let n = self.ring.n();
                let numerator = (0..=n as u32)
                    .map(|d| (self.ring.graded_dim(d) as usize - self.dim(d)) as i64)
                    .collect();
                HilbertSeries {
                    kind: RingKind::Exterior,
                    n,
                    numerator: trim(numerator),
                }
            }
        }
    }
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(Monomial::degree);
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    v
}

/// Hilbert series of R/I. For a polynomial ring it is stored as the
/// numerator N(t) of N(t)/(1-t)^n; for an exterior algebra the "numerator"
/// is the Hilbert function itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    kind: RingKind,
    n: usize,
    numerator: Vec<i64>,
}

impl HilbertSeries {
    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    /// dim (R/I)_d.
    pub fn quotient_dim(&self, d: u32) -> i64 {
        match self.kind {
            RingKind::Exterior => self.numerator.get(d as usize).copied().unwrap_or(0),
            RingKind::Polynomial => {
                let p = self.n as i64;
                self.numerator
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k as u32 <= d)
                    .map(|(k, &c)| c * binomial(d as i64 - k as i64 + p - 1, p - 1) as i64)
                    .sum()
            }
        }
    }

    /// dim I_d.
    pub fn ideal_dim(&self, d: u32) -> i64 {
        let total = match self.kind {
            RingKind::Polynomial => binomial(self.n as i64 + d as i64 - 1, d as i64),
            RingKind::Exterior => binomial(self.n as i64, d as i64),
        } as i64;
        total - self.quotient_dim(d)
    }
}

/// Numerator of the Hilbert series of S/(gens) over (1-t)^n, by pivoting on
/// a power of the most frequent variable.
pub fn hilbert_numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimalize(gens);
    trim(numerator_rec(gens))
}

fn numerator_rec(gens: Vec<Monomial>) -> Vec<i64> {
    if gens.is_empty() {
        return vec![1];
    }
    let n = gens[0].nvars();
    let coprime = (0..n).all(|i| gens.iter().filter(|g| g.exponent(i) > 0).count() <= 1);
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            acc = poly_mul_one_minus(&acc, g.degree() as usize);
        }
        return acc;
    }
    let var = (0..n)
        .max_by_key(|&i| (gens.iter().filter(|g| g.exponent(i) > 0).count(), std::cmp::Reverse(i)))
        .unwrap();
    // the smallest positive exponent makes the pivot absorb at least two generators
    let e = gens.iter().map(|g| g.exponent(var)).filter(|&e| e > 0).min().unwrap();
    let mut pivot = Monomial::one(n);
    for _ in 0..e {
        pivot = pivot.mul_var(var);
    }
    let mut sum = gens.clone();
    sum.push(pivot.clone());
    let colon: Vec<Monomial> = gens
        .iter()
        .map(|g| g.div(&g.gcd(&pivot)).unwrap())
        .collect();
    let a = numerator_rec(minimalize(sum));
    let b = numerator_rec(minimalize(colon));
    let shift = e as usize;
    let mut out = vec![0i64; a.len().max(b.len() + shift)];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i + shift] += x;
    }
    out
}

fn poly_mul_one_minus(p: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; p.len() + d];
    for (i, &x) in p.iter().enumerate() {
        out[i] += x;
        out[i + d] -= x;
    }
    out
}

/// Lex(I): the lexsegment ideal with the Hilbert function of I (squarefree
/// lexsegments in the exterior case).
pub fn lex_ideal(ideal: &GradedIdeal) -> Result<MonomialIdeal> {
    lex_segment_ideal(ideal.ring(), &crate::groebner::hilbert_series(ideal))
}

/// The lexsegment ideal with a prescribed Hilbert series. Each degree is the
/// span of the lex-largest monomials; the ideal property is verified rather
/// than assumed.
pub fn lex_segment_ideal(ring: &Ring, hs: &HilbertSeries) -> Result<MonomialIdeal> {
    const MAX_DEGREE: u32 = 400;
    let lex = ring.with_order(TermOrder::Lex);
    let n = ring.n();
    let mut gens: Vec<Monomial> = Vec::new();
    let mut prev: Vec<Monomial> = Vec::new();
    for d in 0..=MAX_DEGREE {
        let all = lex.monomials_of_degree(d);
        let h = hs.ideal_dim(d);
        if h < 0 || h as usize > all.len() {
            return Err(Error::Internal(format!("impossible ideal dimension {h} in degree {d}")));
        }
        let seg: HashSet<Monomial> = all.into_iter().take(h as usize).collect();
        let mut shadow: HashSet<Monomial> = HashSet::new();
        for u in &prev {
            for t in 0..n {
                if let Some((_, m)) = ring.mul_monomials(&Monomial::var(n, t), u) {
                    if !seg.contains(&m) {
                        return Err(Error::Internal(format!(
                            "lex segments in degrees {} and {d} do not form an ideal",
                            d - 1
                        )));
                    }
                    shadow.insert(m);
                }
            }
        }
        let mut fresh: Vec<Monomial> = seg.iter().filter(|m| !shadow.contains(*m)).cloned().collect();
        fresh.sort();
        gens.extend(fresh);
        prev = seg.into_iter().collect();
        prev.sort();
        let done = match ring.top_degree() {
            Some(top) => d >= top,
            None => MonomialIdeal::new(ring.clone(), gens.clone())?.hilbert_series() == *hs,
        };
        if done {
            return MonomialIdeal::new(ring.clone(), gens);
        }
    }
    Err(Error::Internal(format!("lexsegment ideal needs generators beyond degree {MAX_DEGREE}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;
    use proptest::prelude::*;

    fn mono(e: &[u16]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    fn brute_quotient_dim(gens: &[Monomial], n: usize, d: u32) -> i64 {
        let r = Ring::polynomial(n);
        r.monomials_of_degree(d)
            .iter()
            .filter(|m| !gens.iter().any(|g| g.divides(m)))
            .count() as i64
    }

    #[test]
    fn numerator_of_simple_ideals() {
        // S/(x1) in two variables: 1 - t
        assert_eq!(hilbert_numerator(vec![mono(&[1, 0])]), vec![1, -1]);
        // S/(x1^2, x1x2): 1 - 2t^2 + t^3
        assert_eq!(hilbert_numerator(vec![mono(&[2, 0]), mono(&[1, 1])]), vec![1, 0, -2, 1]);
    }

    #[test]
    fn graded_piece_of_binomial_ideal() {
        let r = Ring::polynomial(2);
        let f = Polynomial::from_terms(2, vec![(mono(&[1, 0]), rat(1)), (mono(&[0, 1]), rat(-1))]);
        let i = GradedIdeal::new(r, vec![f]).unwrap();
        let p = i.piece(2);
        assert_eq!(p.dim(), 2);
        assert_eq!(p.leading_monomials(), vec![mono(&[2, 0]), mono(&[1, 1])]);
        let q = p.quotient();
        assert_eq!(q.standard(), &[mono(&[0, 2])]);
        assert_eq!(q.normal_form(&mono(&[2, 0])), vec![(0, rat(1))]);
    }

    #[test]
    fn strongly_stable_detection() {
        let r = Ring::polynomial(3);
        let yes = MonomialIdeal::new(r.clone(), vec![mono(&[2, 0, 0]), mono(&[1, 1, 0]), mono(&[0, 2, 0])]).unwrap();
        assert!(yes.is_strongly_stable());
        let no = MonomialIdeal::new(r, vec![mono(&[0, 1, 0])]).unwrap();
        assert!(!no.is_strongly_stable());
        let e = Ring::exterior(3);
        let ext = MonomialIdeal::new(e.clone(), vec![mono(&[1, 1, 0]), mono(&[1, 0, 1])]).unwrap();
        assert!(ext.is_strongly_stable());
        let bad = MonomialIdeal::new(e, vec![mono(&[0, 1, 1])]).unwrap();
        assert!(!bad.is_strongly_stable());
    }

    #[test]
    fn rejects_bad_generators() {
        let r = Ring::polynomial(2);
        let f = Polynomial::from_terms(2, vec![(mono(&[1, 0]), rat(1)), (mono(&[0, 2]), rat(1))]);
        assert!(matches!(GradedIdeal::new(r.clone(), vec![f]), Err(Error::NotHomogeneous { index: 0 })));
        assert!(matches!(
            GradedIdeal::new(r, vec![Polynomial::zero(2)]),
            Err(Error::ZeroGenerator { index: 0 })
        ));
    }

    #[test]
    fn lex_examples() {
        let r = Ring::polynomial(2);
        let i = GradedIdeal::from_monomials(r.clone(), &[mono(&[1, 1])]).unwrap();
        assert_eq!(lex_ideal(&i).unwrap().generators(), &[mono(&[2, 0])]);
        let e = Ring::exterior(3);
        let j = GradedIdeal::from_monomials(e, &[mono(&[0, 1, 1])]).unwrap();
        assert_eq!(lex_ideal(&j).unwrap().generators(), &[mono(&[1, 1, 0])]);
        let x1 = GradedIdeal::from_monomials(Ring::polynomial(3), &[mono(&[1, 0, 0])]).unwrap();
        assert_eq!(lex_ideal(&x1).unwrap().generators(), &[mono(&[1, 0, 0])]);
    }

    fn arb_monomials() -> impl Strategy<Value = Vec<Monomial>> {
        prop::collection::vec(prop::collection::vec(0u16..4, 3), 1..6)
            .prop_map(|v| v.into_iter().filter(|e| e.iter().any(|&x| x > 0)).map(Monomial::new).collect())
    }

    proptest! {
        #[test]
        fn hilbert_series_matches_counting(gens in arb_monomials()) {
            let hs = HilbertSeries { kind: RingKind::Polynomial, n: 3, numerator: hilbert_numerator(gens.clone()) };
            for d in 0..9 {
                prop_assert_eq!(hs.quotient_dim(d), brute_quotient_dim(&gens, 3, d));
            }
        }

        #[test]
        fn monomial_piece_dims_match(gens in arb_monomials()) {
            prop_assume!(!gens.is_empty());
            let r = Ring::polynomial(3);
            let i = GradedIdeal::from_monomials(r.clone(), &gens).unwrap();
            let m = MonomialIdeal::new(r, gens).unwrap();
            for d in 0..6 {
                prop_assert_eq!(i.dim(d), m.dim(d));
            }
        }

        #[test]
        fn lex_ideal_is_stable_idempotent_and_keeps_hilbert_function(gens in arb_monomials()) {
            prop_assume!(!gens.is_empty());
            let r = Ring::polynomial(3);
            let i = GradedIdeal::from_monomials(r, &gens).unwrap();
            let l = lex_ideal(&i).unwrap();
            prop_assert!(l.is_strongly_stable());
            prop_assert_eq!(l.hilbert_series(), i.as_monomial_ideal().unwrap().hilbert_series());
            prop_assert_eq!(lex_ideal(&l.to_ideal()).unwrap(), l);
        }
    }
}
