//! Invariants of the public API against oracles written here from first
//! principles: counting monomials, the Eliahou–Kervaire and
//! Aramova–Herzog–Hibi formulas, Euler characteristics and lex segments.

use ginlab::corpus::borel_closure;
use ginlab::groebner::{gin, GinOptions};
use ginlab::ideal::{lex_ideal, GradedIdeal, MonomialIdeal};
use ginlab::parse::{format_ideal, parse_ideal};
use ginlab::resolution::{betti_table, cartan_betti, koszul_betti, BettiTable, Convention};
use ginlab::rigidity::CancellationTable;
use ginlab::ring::{Monomial, Ring, TermOrder};
use proptest::prelude::*;

fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || n < k || n < 0 {
        return 0;
    }
    (0..k).fold(1u64, |acc, t| acc * (n - t) as u64 / (t + 1) as u64)
}

/// All exponent vectors of degree d in n variables.
fn monomials(n: usize, d: u32, squarefree: bool) -> Vec<Vec<u16>> {
    fn go(n: usize, d: u32, squarefree: bool, prefix: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if prefix.len() == n - 1 {
            if !squarefree || d <= 1 {
                let mut v = prefix.clone();
                v.push(d as u16);
                out.push(v);
            }
            return;
        }
        let top = if squarefree { d.min(1) } else { d };
        for e in 0..=top {
            prefix.push(e as u16);
            go(n, d - e, squarefree, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    go(n, d, squarefree, &mut Vec::new(), &mut out);
    out
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// dim_K (R/I)_d by counting standard monomials.
fn quotient_dim(gens: &[Monomial], n: usize, d: u32, squarefree: bool) -> usize {
    monomials(n, d, squarefree)
        .iter()
        .filter(|m| !gens.iter().any(|g| divides(g.exps(), m)))
        .count()
}

/// m(u): the largest index of a variable dividing u, 1-based.
fn max_var(u: &Monomial) -> i64 {
    u.exps().iter().rposition(|&e| e > 0).map_or(0, |p| p as i64 + 1)
}

/// Eliahou–Kervaire: β_{i,i+d}(J) = Σ_{u ∈ G(J)_d} C(m(u)-1, i).
fn eliahou_kervaire(m: &MonomialIdeal, i: usize, j: u32) -> u64 {
    m.generators()
        .iter()
        .filter(|u| u.degree() + i as u32 == j)
        .map(|u| binom(max_var(u) - 1, i as i64))
        .sum()
}

/// Aramova–Herzog–Hibi over E: β_{i,i+d}(J) = Σ_{u ∈ G(J)_d} C(m(u)-1+i, i).
fn aramova_herzog_hibi(m: &MonomialIdeal, i: usize, j: u32) -> u64 {
    m.generators()
        .iter()
        .filter(|u| u.degree() + i as u32 == j)
        .map(|u| binom(max_var(u) - 1 + i as i64, i as i64))
        .sum()
}

fn arb_seeds(n: usize, max_deg: u32, squarefree: bool) -> impl Strategy<Value = Vec<Vec<u16>>> {
    let top = if squarefree { 1u16 } else { max_deg as u16 };
    prop::collection::vec(prop::collection::vec(0..=top, n), 1..3).prop_map(move |mut v| {
        v.retain(|e| {
            let d: u32 = e.iter().map(|&x| x as u32).sum();
            d >= 1 && d <= max_deg
        });
        v
    })
}

fn stable_ideal(ring: &Ring, seeds: Vec<Vec<u16>>) -> MonomialIdeal {
    let seeds: Vec<Monomial> = seeds.into_iter().map(Monomial::new).collect();
    borel_closure(ring, &seeds)
}

fn ideal_of(ring: &Ring, gens: Vec<Vec<u16>>) -> GradedIdeal {
    let gens: Vec<Monomial> = gens.into_iter().map(Monomial::new).filter(|m| m.degree() > 0).collect();
    GradedIdeal::from_monomials(ring.clone(), &gens).unwrap()
}

/// Σ_i (-1)^i β_{i,j}(R/I) is the coefficient of t^j in HS(R/I)·(1-t)^n.
fn euler_from_hilbert(gens: &[Monomial], n: usize, j: u32) -> i64 {
    (0..=j.min(n as u32))
        .map(|s| {
            let sign = if s % 2 == 0 { 1 } else { -1 };
            sign * binom(n as i64, s as i64) as i64 * quotient_dim(gens, n, j - s, false) as i64
        })
        .sum()
}

fn euler(table: &BettiTable, j: u32) -> i64 {
    table
        .entries()
        .filter(|e| e.1 == j)
        .map(|(i, _, b)| if i % 2 == 0 { b as i64 } else { -(b as i64) })
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn koszul_matches_eliahou_kervaire(n in 2usize..=4, seeds in arb_seeds(4, 4, false)) {
        let ring = Ring::polynomial(n);
        let seeds: Vec<Vec<u16>> = seeds.into_iter().map(|s| s[..n].to_vec()).filter(|s| s.iter().any(|&e| e > 0)).collect();
        let m = stable_ideal(&ring, seeds);
        let table = koszul_betti(&m.to_ideal(), Convention::Ideal).unwrap();
        for i in 0..n {
            for j in 0..=m.max_degree() + i as u32 + 1 {
                prop_assert_eq!(table.get(i, j), eliahou_kervaire(&m, i, j), "i={} j={}", i, j);
            }
        }
    }

    #[test]
    fn cartan_matches_aramova_herzog_hibi(n in 2usize..=4, seeds in arb_seeds(4, 4, true)) {
        let ring = Ring::exterior(n);
        let seeds: Vec<Vec<u16>> = seeds.into_iter().map(|s| s[..n].to_vec()).filter(|s| s.iter().any(|&e| e > 0)).collect();
        let m = stable_ideal(&ring, seeds);
        let imax = n + 3;
        let table = cartan_betti(&m.to_ideal(), Convention::Quotient, imax).unwrap();
        for i in 0..imax {
            for j in 0..=m.max_degree() + i as u32 + 1 {
                prop_assert_eq!(table.get(i + 1, j), aramova_herzog_hibi(&m, i, j), "i={} j={}", i, j);
            }
        }
    }

    #[test]
    fn betti_tables_have_the_hilbert_euler_characteristic(gens in prop::collection::vec(prop::collection::vec(0u16..=3, 3), 1..5)) {
        let ring = Ring::polynomial(3);
        let ideal = ideal_of(&ring, gens);
        let m = ideal.as_monomial_ideal().unwrap();
        let table = betti_table(&ideal, Convention::Quotient, 0).unwrap();
        for j in 0..=m.max_degree() + 4 {
            prop_assert_eq!(euler(&table, j), euler_from_hilbert(m.generators(), 3, j), "j={}", j);
        }
    }

    #[test]
    fn gin_is_stable_with_the_same_hilbert_function(gens in prop::collection::vec(prop::collection::vec(0u16..=2, 3), 1..4), c in 1i64..5) {
        // a binomial perturbation keeps the ideal non-monomial
        let ring = Ring::polynomial(3);
        let mono = ideal_of(&ring, gens);
        let mut text = String::from("ring poly 3 QQ\n");
        for (k, g) in mono.generators().iter().enumerate() {
            let f = ring.format_polynomial(g);
            let d = g.homogeneous_degree().unwrap();
            if k == 0 && f != format!("x3^{d}") {
                text.push_str(&format!("{f} + {c}*x3^{d}\n"));
            } else {
                text.push_str(&format!("{f}\n"));
            }
        }
        let ideal = parse_ideal(&text).unwrap();
        let g = gin(&ideal, &GinOptions::default()).unwrap();
        prop_assert!(g.ideal.is_strongly_stable());
        for d in 0..=g.ideal.max_degree() + 2 {
            let dim_i = ring.graded_dim(d) as usize - ideal.dim(d);
            prop_assert_eq!(quotient_dim(g.ideal.generators(), 3, d, false), dim_i, "d={}", d);
        }
    }

    #[test]
    fn gin_fixes_strongly_stable_ideals(seeds in arb_seeds(3, 4, false), seed in 0u64..50) {
        let ring = Ring::polynomial(3);
        let m = stable_ideal(&ring, seeds);
        let opts = GinOptions { seed, ..GinOptions::default() };
        prop_assert_eq!(gin(&m.to_ideal(), &opts).unwrap().ideal, m);
    }

    #[test]
    fn cancellation_reconstructs_gin_table(gens in prop::collection::vec(prop::collection::vec(0u16..=3, 3), 1..5)) {
        let ring = Ring::polynomial(3);
        let ideal = ideal_of(&ring, gens);
        let g = gin(&ideal, &GinOptions::default()).unwrap();
        let b = betti_table(&ideal, Convention::Quotient, 0).unwrap();
        let gb = betti_table(&g.ideal.to_ideal(), Convention::Quotient, 0).unwrap();
        let c = CancellationTable::from_tables(&b, &gb).unwrap();
        let (bi, gi) = (b.to_convention(Convention::Ideal), gb.to_convention(Convention::Ideal));
        for i in 0..3 {
            for j in 0..=g.ideal.max_degree() + 3 {
                let prev = if i == 0 { 0 } else { c.get(i, j) };
                prop_assert!(bi.get(i, j) <= gi.get(i, j));
                prop_assert_eq!(gi.get(i, j), bi.get(i, j) + prev + c.get(i + 1, j), "i={} j={}", i, j);
            }
        }
    }

    #[test]
    fn lex_ideal_is_a_lex_segment_with_the_same_hilbert_function(gens in prop::collection::vec(prop::collection::vec(0u16..=3, 3), 1..4)) {
        let ring = Ring::polynomial(3);
        let ideal = ideal_of(&ring, gens);
        let m = ideal.as_monomial_ideal().unwrap();
        let lex = lex_ideal(&ideal).unwrap();
        for d in 0..=lex.max_degree() + 2 {
            let mut all: Vec<Monomial> = monomials(3, d, false).into_iter().map(Monomial::new).collect();
            all.sort_by(|a, b| TermOrder::Lex.cmp(b, a));
            let inside: Vec<bool> = all.iter().map(|u| lex.contains(u)).collect();
            // an initial segment: no monomial in the ideal after one outside it
            prop_assert!(inside.windows(2).all(|w| w[0] || !w[1]), "degree {} is not a segment", d);
            prop_assert_eq!(
                quotient_dim(lex.generators(), 3, d, false),
                quotient_dim(m.generators(), 3, d, false)
            );
        }
    }

    #[test]
    fn ideal_files_round_trip(gens in prop::collection::vec(prop::collection::vec(0u16..=3, 4), 1..5), exterior in any::<bool>()) {
        let ring = if exterior { Ring::exterior(4) } else { Ring::polynomial(4) };
        let gens: Vec<Vec<u16>> = if exterior {
            gens.into_iter().map(|g| g.into_iter().map(|e| e.min(1)).collect()).collect()
        } else {
            gens
        };
        let ideal = ideal_of(&ring, gens);
        let text = format_ideal(&ideal);
        let back = parse_ideal(&text).unwrap();
        prop_assert_eq!(back.generators(), ideal.generators());
        prop_assert_eq!(format_ideal(&back), text);
    }
}

#[test]
fn exterior_quotient_dims_count_squarefree_monomials() {
    let ring = Ring::exterior(4);
    let m = borel_closure(&ring, &[Monomial::new(vec![0, 1, 1, 0])]);
    let hs = m.hilbert_series();
    for d in 0..=4 {
        assert_eq!(hs.quotient_dim(d) as usize, quotient_dim(m.generators(), 4, d, true));
    }
}
