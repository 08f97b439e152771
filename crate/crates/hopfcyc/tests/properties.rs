mod support;

use std::sync::{Arc, OnceLock};

use hopfcyc::complexes::cyclic::{HChain, HopfCyclic};
use hopfcyc::complexes::lie::{chain, LieChain, LieComplex};
use hopfcyc::complexes::weight::WeightOperator;
use hopfcyc::exact::{axpy, parse_rational, Q};
use hopfcyc::hopf::{h1s_cop, hdeg, Bicrossed, HMono, HopfElement};
use hopfcyc::lie::{format_combination, gl, sl2_xyz, LieVec};
use hopfcyc::pbw::Uea;
use hopfcyc::sayd::{schwarzian_4dim, v_n_proj, InducedSayd};
use hopfcyc::text::parse_combination;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn schwarzian() -> &'static InducedSayd {
    static S: OnceLock<InducedSayd> = OnceLock::new();
    S.get_or_init(|| schwarzian_4dim(Arc::new(h1s_cop(6))).unwrap())
}

fn monos_up_to(h: &Bicrossed, d: u32) -> Vec<HMono> {
    h.monomials(d).into_iter().filter(|m| hdeg(m) >= 1).collect()
}

fn rational() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}

fn lie_vec(n: usize) -> impl Strategy<Value = LieVec> {
    prop::collection::vec(rational(), n).prop_map(|cs| cs.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect())
}

/// m ∘ (S ⊗ id) ∘ Δ
fn antipode_convolution(h: &Bicrossed, x: &HopfElement) -> HopfElement {
    let mut out = HopfElement::new();
    for (pair, c) in h.coproduct(x) {
        let p = h.mul(&h.antipode(&h.mono_elem(&pair[0])), &h.mono_elem(&pair[1]));
        axpy(&mut out, &c, &p);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_agrees_with_bareiss(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 6), 1..7)) {
        let rows: Vec<Vec<Q>> = rows.into_iter().map(|r| r.into_iter().map(|x| Q::from_integer(x.into())).collect()).collect();
        prop_assert_eq!(support::check_against_oracle(&rows), Ok(()));
    }

    #[test]
    fn rationals_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let q = Q::new(n.into(), d.into());
        prop_assert_eq!(parse_rational(&q.to_string()).unwrap(), q);
    }

    #[test]
    fn combinations_round_trip(v in lie_vec(3)) {
        let names = ["X", "Y", "Z"];
        let s = format_combination(v.iter().map(|(i, c)| (names[*i].to_string(), c.clone())));
        let parsed: LieVec = if s == "0" {
            LieVec::new()
        } else {
            parse_combination(&s).unwrap().into_iter().map(|t| (names.iter().position(|n| *n == t.factors[0].0).unwrap(), t.coeff)).collect()
        };
        prop_assert_eq!(parsed, v);
    }

    #[test]
    fn brackets_are_lie(a in lie_vec(4), b in lie_vec(4), c in lie_vec(4)) {
        let g = gl(2);
        let mut ab = g.bracket(&a, &b);
        axpy(&mut ab, &Q::one(), &g.bracket(&b, &a));
        prop_assert!(ab.is_empty());
        let mut jac = g.bracket(&a, &g.bracket(&b, &c));
        axpy(&mut jac, &Q::one(), &g.bracket(&b, &g.bracket(&c, &a)));
        axpy(&mut jac, &Q::one(), &g.bracket(&c, &g.bracket(&a, &b)));
        prop_assert!(jac.is_empty());
    }

    #[test]
    fn enveloping_product_is_associative(
        w1 in prop::collection::vec(0usize..3, 0..3),
        w2 in prop::collection::vec(0usize..3, 0..3),
        w3 in prop::collection::vec(0usize..3, 0..3),
    ) {
        let u = Uea::new(sl2_xyz(), 12);
        let (a, b, c) = (u.word(&w1).unwrap(), u.word(&w2).unwrap(), u.word(&w3).unwrap());
        let left = u.multiply(&u.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = u.multiply(&a, &u.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn hopf_axioms_on_monomials(i in 0usize..1000) {
        let h = &schwarzian().module.hopf;
        let monos = monos_up_to(h, 3);
        let x = h.mono_elem(&monos[i % monos.len()]);
        let mut unit = HopfElement::new();
        let e = h.counit(&x);
        if !e.is_zero() {
            unit = h.one().into_iter().map(|(k, c)| (k, c * &e)).collect();
        }
        prop_assert_eq!(antipode_convolution(h, &x), unit);
        // (ε ⊗ id)Δ = id
        let mut back = HopfElement::new();
        for (pair, c) in h.coproduct(&x) {
            let e1 = h.counit(&h.mono_elem(&pair[0]));
            axpy(&mut back, &(c * e1), &h.mono_elem(&pair[1]));
        }
        prop_assert_eq!(back, x.clone());
        let d3 = h.coproduct_n(&x, 3);
        let mut via = hopfcyc::hopf::HTensor::new();
        for (pair, c) in h.coproduct(&x) {
            for (rest, d) in h.coproduct(&h.mono_elem(&pair[1])) {
                axpy(&mut via, &(&c * &d), &std::iter::once((vec![pair[0].clone(), rest[0].clone(), rest[1].clone()], Q::one())).collect());
            }
        }
        prop_assert_eq!(d3, via);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cocyclic_relations(v in 0usize..4, picks in prop::collection::vec(0usize..1000, 1..=3)) {
        let s = schwarzian();
        let monos = monos_up_to(&s.module.hopf, 1);
        let key: Vec<HMono> = picks.iter().map(|p| monos[p % monos.len()].clone()).collect();
        let x: HChain = std::iter::once(((v, key), Q::one())).collect();
        let c = HopfCyclic::new(&s.module);
        prop_assert!(c.verify_cocyclic_identities(&[x]).is_ok());
    }

    #[test]
    fn differentials_preserve_weight(v in 0usize..4, picks in prop::collection::vec(0usize..1000, 1..=2)) {
        let s = schwarzian();
        let monos = monos_up_to(&s.module.hopf, 2);
        let key: Vec<HMono> = picks.iter().map(|p| monos[p % monos.len()].clone()).collect();
        let x: HChain = std::iter::once(((v, key), Q::one())).collect();
        let c = HopfCyclic::new(&s.module);
        let w = WeightOperator::new(&s.module, 1);
        let wt = w.weight_of(x.keys().next().unwrap()).unwrap();
        for y in [c.b(&x), c.connes_b(&x), c.tau(&x)] {
            prop_assert!(w.is_homogeneous(&y, &wt));
        }
    }

    #[test]
    fn koszul_square_vanishes_for_vn_proj(coeffs in prop::collection::vec(rational(), 8)) {
        let g = gl(2);
        let v = v_n_proj(2);
        let c = LieComplex::new(&g, &v);
        let mut x = LieChain::new();
        let words: [Vec<usize>; 4] = [vec![], vec![0], vec![1, 2], vec![0, 1, 3]];
        for (i, k) in coeffs.iter().enumerate() {
            axpy(&mut x, k, &chain(words[i % 4].clone(), i % v.dim()));
        }
        prop_assert!(c.d_total(&c.d_total(&x)).is_empty());
    }
}

#[test]
fn parallel_map_keeps_order() {
    let xs: Vec<u64> = (0..500).collect();
    let f = |x: &u64| x.wrapping_mul(2654435761) % 97;
    assert_eq!(hopfcyc::par::map(&xs, f), hopfcyc::par::map_seq(&xs, f));
}
