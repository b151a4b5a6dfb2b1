//! Deterministic random ideals for cross-checking.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ideal::{lex_ideal, GradedIdeal, MonomialIdeal};
use crate::ring::{rat, Monomial, Polynomial, Ring, RingKind};

/// Missing fields take their default values when deserializing.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct CorpusSpec {
    pub count: usize,
    pub seed: u64,
    pub min_vars: usize,
    pub max_vars: usize,
    pub max_degree: u32,
    pub max_generators: usize,
    /// Fraction of exterior instances.
    pub exterior_share: f64,
    /// Relative weights of the families monomial, binomial, dense, stable.
    pub weights: [u32; 4],
    /// Largest number of terms of a dense generator.
    pub dense_terms: usize,
    /// Polynomial ideals whose lex-segment ideal needs a generator above this
    /// degree are redrawn. This also bounds the generators of every generic
    /// initial ideal, and keeps generic lex Gröbner bases small.
    pub max_lex_degree: u32,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            count: 100,
            seed: 2024,
            min_vars: 2,
            max_vars: 4,
            max_degree: 5,
            max_generators: 6,
            exterior_share: 0.3,
            weights: [3, 3, 2, 2],
            dense_terms: 4,
            max_lex_degree: 24,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Monomial,
    Binomial,
    Dense,
    Stable,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Monomial => "monomial",
            Family::Binomial => "binomial",
            Family::Dense => "dense",
            Family::Stable => "stable",
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub index: usize,
    pub family: Family,
    pub ideal: GradedIdeal,
    /// Draws rejected by the lex-degree cap before this one.
    pub redraws: u32,
}

fn random_monomial(rng: &mut ChaCha8Rng, ring: &Ring, d: u32) -> Monomial {
    let n = ring.n();
    if ring.is_exterior() {
        let mut idx: Vec<usize> = (0..n).collect();
        idx.shuffle(rng);
        let mut e = vec![0u16; n];
        for &i in &idx[..d as usize] {
            e[i] = 1;
        }
        Monomial::new(e)
    } else {
        let mut e = vec![0u16; n];
        for _ in 0..d {
            e[rng.gen_range(0..n)] += 1;
        }
        Monomial::new(e)
    }
}

fn coefficient(rng: &mut ChaCha8Rng) -> i64 {
    let c = rng.gen_range(1..=5);
    if rng.gen_bool(0.5) {
        -c
    } else {
        c
    }
}

fn random_generator(rng: &mut ChaCha8Rng, ring: &Ring, family: Family, d: u32, dense_terms: usize) -> Polynomial {
    let n = ring.n();
    let terms = match family {
        Family::Monomial | Family::Stable => 1,
        Family::Binomial => 2,
        Family::Dense => rng.gen_range(3..=dense_terms.max(3)),
    };
    Polynomial::from_terms(
        n,
        (0..terms).map(|k| {
            let c = if k == 0 { 1 } else { coefficient(rng) };
            (random_monomial(rng, ring, d), rat(c))
        }),
    )
}

/// The smallest strongly stable ideal containing `seeds`.
pub fn borel_closure(ring: &Ring, seeds: &[Monomial]) -> MonomialIdeal {
    let mut seen: std::collections::BTreeSet<Monomial> = seeds.iter().cloned().collect();
    let mut stack: Vec<Monomial> = seeds.to_vec();
    let exterior = ring.is_exterior();
    while let Some(u) = stack.pop() {
        for j in 0..ring.n() {
            if u.exponent(j) == 0 {
                continue;
            }
            for i in 0..j {
                if exterior && u.exponent(i) > 0 {
                    continue;
                }
                if let Some(v) = u.exchange(j, i) {
                    if seen.insert(v.clone()) {
                        stack.push(v);
                    }
                }
            }
        }
    }
    MonomialIdeal::new(ring.clone(), seen.into_iter().collect()).expect("valid monomials")
}

fn pick_family(rng: &mut ChaCha8Rng, weights: &[u32; 4]) -> Family {
    let total: u32 = weights.iter().sum();
    let mut r = rng.gen_range(0..total.max(1));
    for (k, &w) in weights.iter().enumerate() {
        if r < w {
            return [Family::Monomial, Family::Binomial, Family::Dense, Family::Stable][k];
        }
        r -= w;
    }
    Family::Monomial
}

/// The corpus described by `spec`. Entry k depends only on (seed, k).
pub fn generate(spec: &CorpusSpec) -> Vec<CorpusEntry> {
    (0..spec.count).map(|k| entry(spec, k)).collect()
}

pub fn entry(spec: &CorpusSpec, index: usize) -> CorpusEntry {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed ^ (index as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut redraws = 0;
    loop {
        let (family, ideal) = draw(spec, &mut rng);
        let admitted = ideal.ring().is_exterior()
            || lex_ideal(&ideal).is_ok_and(|l| l.max_degree() <= spec.max_lex_degree);
        if admitted {
            return CorpusEntry {
                index,
                family,
                ideal,
                redraws,
            };
        }
        redraws += 1;
    }
}

fn draw(spec: &CorpusSpec, rng: &mut ChaCha8Rng) -> (Family, GradedIdeal) {
    let exterior = rng.gen_bool(spec.exterior_share.clamp(0.0, 1.0));
    let lo = spec.min_vars.max(1);
    let n = rng.gen_range(lo..=spec.max_vars.max(lo));
    let ring = if exterior { Ring::exterior(n) } else { Ring::polynomial(n) };
    let top = if exterior { spec.max_degree.min(n as u32) } else { spec.max_degree };
    let family = pick_family(rng, &spec.weights);
    let count = rng.gen_range(1..=spec.max_generators.max(1));
    let degree = |rng: &mut ChaCha8Rng| rng.gen_range(1..=top.max(1));
    let ideal = match family {
        Family::Stable => {
            let seeds: Vec<Monomial> = (0..count.min(2))
                .map(|_| {
                    let d = degree(rng);
                    random_monomial(rng, &ring, d)
                })
                .collect();
            borel_closure(&ring, &seeds).to_ideal()
        }
        _ => {
            let mut gens = Vec::new();
            while gens.len() < count {
                let d = if family == Family::Dense { rng.gen_range(2.min(top)..=top) } else { degree(rng) };
                let f = random_generator(rng, &ring, family, d, spec.dense_terms);
                if !f.is_zero() {
                    gens.push(f);
                }
            }
            GradedIdeal::new(ring.clone(), gens).expect("homogeneous generators")
        }
    };
    debug_assert_eq!(ideal.ring().kind(), if exterior { RingKind::Exterior } else { RingKind::Polynomial });
    (family, ideal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::format_ideal;

    #[test]
    fn corpus_is_deterministic() {
        let spec = CorpusSpec {
            count: 20,
            ..CorpusSpec::default()
        };
        let a: Vec<String> = generate(&spec).iter().map(|e| format_ideal(&e.ideal)).collect();
        let b: Vec<String> = generate(&spec).iter().map(|e| format_ideal(&e.ideal)).collect();
        assert_eq!(a, b);
    }

    #[test]
    fn stable_family_is_strongly_stable() {
        let spec = CorpusSpec {
            count: 60,
            weights: [0, 0, 0, 1],
            ..CorpusSpec::default()
        };
        for e in generate(&spec) {
            assert!(e.ideal.as_monomial_ideal().unwrap().is_strongly_stable(), "{}", format_ideal(&e.ideal));
        }
    }

    #[test]
    fn borel_closure_of_a_monomial() {
        let r = Ring::polynomial(3);
        let m = borel_closure(&r, &[Monomial::new(vec![0, 1, 1])]);
        // x2x3 generates x1^2, x1x2, x1x3, x2^2, x2x3
        assert_eq!(m.generators().len(), 5);
        let e = Ring::exterior(3);
        let m = borel_closure(&e, &[Monomial::new(vec![0, 1, 1])]);
        assert_eq!(m.generators().len(), 3);
    }
}
