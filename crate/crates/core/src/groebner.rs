//! Initial ideals and generic initial ideals.
//!
//! Polynomial ideals go through a homogeneous Buchberger algorithm with
//! fraction-free integer coefficients and the Gebauer–Möller pair criteria.
//! When the Hilbert series of the ideal is known in advance (as it is for a
//! coordinate change of an ideal whose Hilbert series was already computed),
//! each degree stops as soon as the leading monomials fill the expected
//! dimension. Exterior ideals are handled degree by degree with linear algebra.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{GradedIdeal, HilbertSeries, MonomialIdeal};
use crate::linalg::integer_row;
use crate::ring::{rat, Monomial, Polynomial, Rational, Ring, SquareMatrix, TermOrder};

#[derive(Clone, Debug)]
struct GbPoly {
    // sorted by decreasing term order, primitive, positive leading coefficient
    terms: Vec<(Monomial, BigInt)>,
}

impl GbPoly {
    fn from_polynomial(f: &Polynomial, order: TermOrder) -> GbPoly {
        let ms: Vec<&Monomial> = f.terms().map(|t| t.0).collect();
        let v: Vec<(usize, Rational)> = f.terms().enumerate().map(|(i, (_, c))| (i, c.clone())).collect();
        let mut terms: Vec<(Monomial, BigInt)> =
            integer_row(&v).into_iter().map(|(i, c)| (ms[i].clone(), c)).collect();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut p = GbPoly { terms };
        p.normalize();
        p
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn normalize(&mut self) {
        let Some(first) = self.terms.first() else { return };
        let negative = first.1.is_negative();
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if negative {
            g = -g;
        }
        if !g.is_one() {
            for (_, c) in self.terms.iter_mut() {
                *c = &*c / &g;
            }
        }
    }

    fn to_polynomial(&self, n: usize) -> Polynomial {
        Polynomial::from_terms(n, self.terms.iter().map(|(m, c)| (m.clone(), Rational::from_integer(c.clone()))))
    }
}

/// `a*f - b*(m*g)`, keeping terms sorted.
fn sub_mul(f: &GbPoly, a: &BigInt, g: &GbPoly, m: &Monomial, b: &BigInt, order: TermOrder) -> GbPoly {
    let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
    let shifted: Vec<(Monomial, &BigInt)> = g.terms.iter().map(|(u, c)| (u.mul(m), c)).collect();
    let (mut i, mut j) = (0, 0);
    while i < f.terms.len() || j < shifted.len() {
        let ord = if i == f.terms.len() {
            Ordering::Less
        } else if j == shifted.len() {
            Ordering::Greater
        } else {
            order.cmp(&f.terms[i].0, &shifted[j].0)
        };
        match ord {
            Ordering::Greater => {
                out.push((f.terms[i].0.clone(), a * &f.terms[i].1));
                i += 1;
            }
            Ordering::Less => {
                out.push((shifted[j].0.clone(), -(b * shifted[j].1)));
                j += 1;
            }
            Ordering::Equal => {
                let c = a * &f.terms[i].1 - b * shifted[j].1;
                if !c.is_zero() {
                    out.push((f.terms[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    let mut p = GbPoly { terms: out };
    p.normalize();
    p
}

/// Reduction of `f` by `basis`: of every term when `full`, otherwise only
/// until the leading monomial is standard.
fn reduce(mut p: GbPoly, basis: &[GbPoly], order: TermOrder, full: bool) -> GbPoly {
    let mut k = 0;
    while k < p.terms.len() && (full || k == 0) {
        let m = &p.terms[k].0;
        match basis.iter().find(|g| g.lm().divides(m)) {
            Some(g) => {
                let q = m.div(g.lm()).unwrap();
                let (a, b) = (g.lc().clone(), p.terms[k].1.clone());
                p = sub_mul(&p, &a, g, &q, &b, order);
            }
            None => k += 1,
        }
    }
    p
}

fn spoly(f: &GbPoly, g: &GbPoly, order: TermOrder) -> GbPoly {
    let l = f.lm().lcm(g.lm());
    let mf = l.div(f.lm()).unwrap();
    let mg = l.div(g.lm()).unwrap();
    // lc(g)*mf*f - lc(f)*mg*g
    let f_shift = GbPoly {
        terms: f.terms.iter().map(|(u, c)| (u.mul(&mf), c.clone())).collect(),
    };
    sub_mul(&f_shift, g.lc(), g, &mg, f.lc(), order)
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

fn update_pairs(basis: &[GbPoly], pairs: &mut Vec<Pair>, h: usize) {
    let lh = basis[h].lm().clone();
    let mut cand: Vec<Pair> = (0..h)
        .map(|g| Pair {
            i: g,
            j: h,
            lcm: basis[g].lm().lcm(&lh),
        })
        .collect();
    let mut kept: Vec<Pair> = Vec::new();
    while let Some(p) = cand.pop() {
        let coprime = basis[p.i].lm().is_coprime(&lh);
        let dominated = cand.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(p);
        }
    }
    kept.retain(|p| !basis[p.i].lm().is_coprime(&lh));
    pairs.retain(|p| {
        !lh.divides(&p.lcm)
            || basis[p.i].lm().lcm(&lh) == p.lcm
            || basis[p.j].lm().lcm(&lh) == p.lcm
    });
    pairs.extend(kept);
}

/// Homogeneous Buchberger. With `target`, degree `d` is abandoned as soon as
/// the leading monomials span the expected dim I_d, and the run stops once
/// the Hilbert series of the leading monomial ideal matches.
fn buchberger(ideal: &GradedIdeal, target: Option<&HilbertSeries>) -> Vec<GbPoly> {
    let ring = ideal.ring();
    let order = ring.order();
    let mut inputs: Vec<GbPoly> = ideal
        .generators()
        .iter()
        .map(|f| GbPoly::from_polynomial(f, order))
        .collect();
    inputs.sort_by_key(|p| p.lm().degree());
    let max_input = inputs.last().map_or(0, |p| p.lm().degree());
    let mut basis: Vec<GbPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let mut next_input = 0;
    loop {
        let d_pair = pairs.iter().map(|p| p.lcm.degree()).min();
        let d_input = inputs.get(next_input).map(|p| p.lm().degree());
        let d = match (d_pair, d_input) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => a.min(b),
        };
        let goal = target.map(|hs| hs.ideal_dim(d) as usize);
        let lms: Vec<Monomial> = basis.iter().map(|g| g.lm().clone()).collect();
        let mut have = if goal.is_some() {
            ring.monomials_of_degree(d).iter().filter(|m| lms.iter().any(|g| g.divides(m))).count()
        } else {
            0
        };
        let mut todo: Vec<GbPoly> = Vec::new();
        while next_input < inputs.len() && inputs[next_input].lm().degree() == d {
            todo.push(inputs[next_input].clone());
            next_input += 1;
        }
        let (mut now, rest): (Vec<Pair>, Vec<Pair>) = pairs.drain(..).partition(|p| p.lcm.degree() == d);
        pairs = rest;
        now.sort_by(|a, b| order.cmp(&a.lcm, &b.lcm));
        let mut queue = todo.into_iter().map(Ok).chain(now.into_iter().map(Err)).collect::<Vec<_>>();
        queue.reverse();
        while let Some(item) = queue.pop() {
            if goal.is_some_and(|g| have >= g) {
                break;
            }
            let p = match item {
                Ok(f) => f,
                Err(pair) => spoly(&basis[pair.i], &basis[pair.j], order),
            };
            // only leading monomials are needed when the Hilbert series is known
            let h = reduce(p, &basis, order, target.is_none());
            if h.is_zero() {
                continue;
            }
            basis.push(h);
            have += 1;
            update_pairs(&basis, &mut pairs, basis.len() - 1);
        }
        if let Some(hs) = target {
            if d >= max_input {
                let lm_ideal = MonomialIdeal::new(ring.clone(), basis.iter().map(|g| g.lm().clone()).collect())
                    .expect("valid monomials");
                if lm_ideal.hilbert_series() == *hs {
                    break;
                }
            }
        }
    }
    basis
}

/// Reduced Gröbner basis for the ring's term order, monic over QQ.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|f| self.ring.leading_monomial(f).unwrap().clone())
            .collect()
    }
}

/// Reduced Gröbner basis of a polynomial ideal.
pub fn groebner_basis(ideal: &GradedIdeal) -> Result<GroebnerBasis> {
    let ring = ideal.ring().clone();
    if ring.is_exterior() {
        return Err(Error::Invalid("Gröbner bases are computed for polynomial rings only".into()));
    }
    let order = ring.order();
    let basis = buchberger(ideal, None);
    let mut elements = Vec::with_capacity(basis.len());
    for (k, g) in basis.iter().enumerate() {
        let others: Vec<GbPoly> = basis
            .iter()
            .enumerate()
            .filter(|(l, _)| *l != k)
            .map(|(_, h)| h.clone())
            .collect();
        // the leading term is irreducible, so this only touches the tail
        let r = reduce(g.clone(), &others, order, true);
        elements.push(r.to_polynomial(ring.n()).monic(order));
    }
    elements.sort_by(|a, b| {
        let (la, lb) = (ring.leading_monomial(a).unwrap(), ring.leading_monomial(b).unwrap());
        la.degree().cmp(&lb.degree()).then_with(|| order.cmp(lb, la))
    });
    Ok(GroebnerBasis { ring, elements })
}

/// in_<(I) for the ring's term order.
pub fn initial_ideal(ideal: &GradedIdeal) -> MonomialIdeal {
    initial_ideal_with_target(ideal, None)
}

fn initial_ideal_with_target(ideal: &GradedIdeal, target: Option<&HilbertSeries>) -> MonomialIdeal {
    let ring = ideal.ring().clone();
    if let Some(m) = ideal.as_monomial_ideal() {
        return m;
    }
    if ring.is_exterior() {
        let mut lms = Vec::new();
        for d in 1..=ring.n() as u32 {
            let goal = target.map(|hs| hs.ideal_dim(d) as usize);
            lms.extend(ideal.piece_with_target(d, goal).leading_monomials());
        }
        return MonomialIdeal::new(ring, lms).expect("valid monomials");
    }
    let basis = buchberger(ideal, target);
    MonomialIdeal::new(ring, basis.iter().map(|g| g.lm().clone()).collect()).expect("valid monomials")
}

/// Hilbert series of R/I, computed from an initial ideal.
pub fn hilbert_series(ideal: &GradedIdeal) -> HilbertSeries {
    if ideal.ring().is_exterior() {
        let ring = ideal.ring();
        let mut lms = Vec::new();
        for d in 1..=ring.n() as u32 {
            lms.extend(ideal.piece(d).leading_monomials());
        }
        return MonomialIdeal::new(ring.clone(), lms).expect("valid").hilbert_series();
    }
    initial_ideal(&ideal.with_order(TermOrder::DegRevLex)).hilbert_series()
}

#[derive(Clone, Debug)]
pub struct GinOptions {
    pub seed: u64,
    pub coeff_bound: i64,
    pub trials: usize,
    pub order: TermOrder,
    pub max_doublings: u32,
}

impl Default for GinOptions {
    fn default() -> Self {
        GinOptions {
            seed: 0,
            coeff_bound: 1000,
            trials: 2,
            order: TermOrder::DegRevLex,
            max_doublings: 4,
        }
    }
}

/// How a generic initial ideal was certified: every trial produced the same
/// initial ideal and that ideal is strongly stable.
#[derive(Clone, Debug, Serialize)]
pub struct GinCertificate {
    pub seed: u64,
    pub order: TermOrder,
    pub coeff_bound: i64,
    pub trials: usize,
    pub attempts: u32,
    pub agreed: bool,
    pub strongly_stable: bool,
    pub matrices: Vec<SquareMatrix>,
}

#[derive(Clone, Debug)]
pub struct GinResult {
    pub ideal: MonomialIdeal,
    pub certificate: GinCertificate,
}

/// Random integer matrix with entries in [-bound, bound], redrawn until invertible.
pub fn random_matrix(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> SquareMatrix {
    loop {
        let rows: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..n).map(|_| rat(rng.gen_range(-bound..=bound))).collect())
            .collect();
        let m = SquareMatrix::from_rows(rows).expect("square");
        if m.is_invertible() {
            return m;
        }
    }
}

/// Generic initial ideal in the chosen order, over QQ.
pub fn gin(ideal: &GradedIdeal, opts: &GinOptions) -> Result<GinResult> {
    if opts.trials < 2 || opts.coeff_bound <= 0 {
        return Err(Error::Invalid("gin needs at least two trials and a positive coefficient bound".into()));
    }
    let ring = ideal.ring().with_order(opts.order);
    let ideal = ideal.with_order(opts.order);
    let target = hilbert_series(&ideal);
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let n = ring.n();
    let mut last_reason = String::new();
    for attempt in 0..=opts.max_doublings {
        let bound = opts.coeff_bound.saturating_mul(1 << attempt);
        let mut matrices = Vec::new();
        let mut results: Vec<MonomialIdeal> = Vec::new();
        for _ in 0..opts.trials {
            let g = random_matrix(&mut rng, n, bound);
            let transformed = ideal.transform_unchecked(&g);
            let forced = GradedIdeal::new(ring.clone(), transformed.generators().to_vec())?;
            results.push(initial_ideal_with_target(&forced, Some(&target)));
            matrices.push(g);
        }
        let agreed = results.windows(2).all(|w| w[0] == w[1]);
        let strongly_stable = results[0].is_strongly_stable();
        if agreed && strongly_stable {
            return Ok(GinResult {
                ideal: results.swap_remove(0),
                certificate: GinCertificate {
                    seed: opts.seed,
                    order: opts.order,
                    coeff_bound: bound,
                    trials: opts.trials,
                    attempts: attempt + 1,
                    agreed,
                    strongly_stable,
                    matrices,
                },
            });
        }
        last_reason = format!(
            "coefficient bound {bound}: trials {}, strongly stable: {}",
            if agreed { "agree" } else { "disagree" },
            strongly_stable
        );
    }
    Err(Error::GenericityFailure(last_reason))
}

/// Generic initial ideal of an exterior ideal.
pub fn gin_exterior(ideal: &GradedIdeal, opts: &GinOptions) -> Result<GinResult> {
    if !ideal.ring().is_exterior() {
        return Err(Error::Invalid("expected an exterior ideal".into()));
    }
    gin(ideal, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ideal;

    #[test]
    fn groebner_of_twisted_cubic() {
        let i = parse_ideal("ring poly 4 QQ\nx1*x3 - x2^2\nx2*x4 - x3^2\nx1*x4 - x2*x3\n").unwrap();
        let gb = groebner_basis(&i).unwrap();
        let lms = gb.leading_monomials();
        assert_eq!(lms.len(), 3);
        let m = initial_ideal(&i);
        // degrevlex initial ideal of the twisted cubic: (x2^2, x2x3, x3^2)
        let expected = parse_ideal("ring poly 4 QQ\nx2^2\nx2*x3\nx3^2\n").unwrap().as_monomial_ideal().unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn gin_of_principal_ideal() {
        let i = parse_ideal("ring poly 3 QQ\nx2*x3\n").unwrap();
        let g = gin(&i, &GinOptions::default()).unwrap();
        assert_eq!(g.ideal.generators(), &[Monomial::new(vec![2, 0, 0])]);
        assert!(g.certificate.agreed && g.certificate.strongly_stable);
    }

    #[test]
    fn gin_of_exterior_ideal() {
        let i = parse_ideal("ring ext 4 QQ\ne3*e4\n").unwrap();
        let g = gin(&i, &GinOptions::default()).unwrap();
        assert_eq!(g.ideal.generators(), &[Monomial::new(vec![1, 1, 0, 0])]);
    }

    #[test]
    fn hilbert_series_is_coordinate_free() {
        let i = parse_ideal("ring poly 3 QQ\nx1^2 - x2*x3\nx1*x2\n").unwrap();
        let hs = hilbert_series(&i);
        let j = hilbert_series(&i.with_order(TermOrder::Lex));
        assert_eq!(hs, j);
    }
}
