use gln_casimir::casimir::{
    casimir_eigenvalue, casimir_eigenvalue_patterned, closed_form, closed_form_samples,
    verify_tuples, CasimirRequest, Selection,
};
use gln_casimir::cli::{emit_polynomial_json, parse_mpoly_json};
use gln_casimir::jetoracle::{jet_inv, jet_pow, oracle_eigenvalue, path_coefficient_check, Jet};
use gln_casimir::ratpoly::{
    interpolate_in_n, rat, reduce_mod_p1, to_power_sum, MPoly, Partition, PowerSumPoly, Rat, UPoly,
};
use gln_casimir::tuplegraph::{
    cycle_product, elementary_eigenvalue, enumerate_cycles, enumerate_paths,
    enumerate_proper_cycles, relative_order, IndexTuple, SecondMin, SignConvention,
};
use proptest::prelude::*;

fn small_rat() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn mpoly(nvars: usize) -> impl Strategy<Value = MPoly> {
    prop::collection::vec((small_rat(), prop::collection::vec(0u32..=2, nvars)), 0..5)
        .prop_map(move |terms| MPoly::from_terms(nvars, terms).unwrap())
}

fn jet(m: usize, nvars: usize) -> impl Strategy<Value = Jet> {
    prop::collection::vec((0u32..(1 << m), mpoly(nvars)), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(Jet::zero(m, nvars), |acc, (s, c)| {
            &acc + &Jet::monomial(m, s, c).unwrap()
        })
    })
}

/// `1 + nilpotent` with rational coefficients.
fn unit_jet(m: usize) -> impl Strategy<Value = Jet> {
    prop::collection::vec((1u32..(1 << m), small_rat()), 0..5).prop_map(move |terms| {
        terms.into_iter().fold(Jet::one(m, 1), |acc, (s, c)| {
            &acc + &Jet::monomial(m, s, MPoly::constant(1, c)).unwrap()
        })
    })
}

fn tuple(max_m: usize, n: usize) -> impl Strategy<Value = IndexTuple> {
    prop::collection::vec(1..=n, 1..=max_m).prop_map(move |e| IndexTuple::new(e, n).unwrap())
}

/// Brute-force chain condition: sorted edges must chain from `v` to `w`.
fn is_path(t: &IndexTuple, set: u32, v: usize, w: usize) -> bool {
    let mut at = v;
    for j in 0..t.m() {
        if set & (1 << j) != 0 {
            if t.at(j) != at {
                return false;
            }
            at = t.at(j + 1);
        }
    }
    at == w
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mpoly_ring_laws(a in mpoly(3), b in mpoly(3), c in mpoly(3)) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &MPoly::one(3), a.clone());
    }

    #[test]
    fn mpoly_eval_is_a_homomorphism(a in mpoly(2), b in mpoly(2), x in small_rat(), y in small_rat()) {
        let pt = [x, y];
        let prod = (&a * &b).eval(&pt).unwrap();
        prop_assert_eq!(prod, a.eval(&pt).unwrap() * b.eval(&pt).unwrap());
    }

    #[test]
    fn json_round_trip(a in mpoly(3)) {
        let text = emit_polynomial_json(&a);
        let back = parse_mpoly_json(&text).unwrap();
        prop_assert_eq!(&back, &a);
        prop_assert_eq!(emit_polynomial_json(&back), text);
    }

    #[test]
    fn power_sum_round_trip(
        coeffs in prop::collection::vec(small_rat(), 5),
        extra in mpoly(4),
    ) {
        let n = 4;
        let parts = [vec![], vec![2], vec![3], vec![4], vec![2, 2]];
        let ps = PowerSumPoly::from_coeffs(
            parts.iter().cloned().zip(coeffs).map(|(p, c)| (Partition::new(p).unwrap(), c)),
        );
        let p1 = gln_casimir::ratpoly::power_sum(n, 1);
        let p = &ps.to_mpoly(n) + &(&extra * &p1);
        let got = to_power_sum(&p, n).unwrap();
        prop_assert_eq!(&got, &ps);
        prop_assert!(reduce_mod_p1(&(&got.to_mpoly(n) - &p)).is_zero());
    }

    #[test]
    fn interpolation_reproduces_samples(
        a in prop::collection::vec(small_rat(), 0..4),
        b in prop::collection::vec(small_rat(), 0..4),
    ) {
        let cf = gln_casimir::ratpoly::ClosedForm::from_coeffs([
            (Partition::empty(), UPoly::new(a)),
            (Partition::new(vec![2]).unwrap(), UPoly::new(b)),
        ]);
        let samples: Vec<(u64, PowerSumPoly)> = (2..8).map(|n| (n, cf.eval(n))).collect();
        let back = interpolate_in_n(&samples, 3).unwrap();
        for (n, p) in &samples {
            prop_assert_eq!(&back.eval(*n), p);
        }
        prop_assert_eq!(back, cf);
    }

    #[test]
    fn proper_cycle_shape(t in tuple(7, 6)) {
        let closed = t.closed();
        for c in enumerate_proper_cycles(&t) {
            prop_assert_eq!(c.base, c.v1);
            let span = &closed[c.start_pos..=c.end_pos];
            prop_assert!(span[1..span.len() - 1].iter().all(|&v| v > c.base));
            let singleton = span.iter().all(|&v| v == c.base);
            prop_assert_eq!(c.v2 == SecondMin::Infinite, singleton);
        }
        prop_assert!(enumerate_cycles(&t).len() >= enumerate_proper_cycles(&t).len());
    }

    #[test]
    fn zero_law_and_degree(t in tuple(7, 5), shifted in any::<bool>()) {
        let first = t.entries()[0];
        let vanishes = t.entries().iter().any(|&v| v < first);
        let cycles = enumerate_proper_cycles(&t).len() as u32;
        for sign in SignConvention::ALL {
            let e = elementary_eigenvalue(&t, sign, shifted);
            prop_assert_eq!(e.is_zero(), vanishes);
            prop_assert!(e.total_degree() <= cycles);
        }
        prop_assert!(cycles as usize <= t.m());
        prop_assert_eq!(cycle_product(&t, SignConvention::Literal).is_none(), vanishes);
    }

    #[test]
    fn relative_order_covariance(t in tuple(6, 4), gaps in prop::collection::vec(1usize..3, 4)) {
        // strictly increasing map 1..=4 -> 1..=big
        let mut image = [0; 5];
        let mut acc = 0;
        for v in 1..=4 {
            acc += gaps[v - 1];
            image[v] = acc;
        }
        let big = acc;
        let u = IndexTuple::new(t.entries().iter().map(|&v| image[v]).collect(), big).unwrap();
        prop_assert_eq!(relative_order(&t).pattern(), relative_order(&u).pattern());
        let map: Vec<usize> = (1..=4).map(|v| image[v] - 1).collect();
        for sign in SignConvention::ALL {
            let a = elementary_eigenvalue(&t, sign, false).rename(&map, big).unwrap();
            prop_assert_eq!(a, elementary_eigenvalue(&u, sign, false));
        }
    }

    #[test]
    fn paths_match_brute_force(t in tuple(7, 4)) {
        let values: Vec<usize> = relative_order(&t).values;
        for &v in &values {
            for &w in &values {
                let brute: Vec<u32> = (0..(1u32 << t.m())).filter(|&s| is_path(&t, s, v, w)).collect();
                prop_assert_eq!(enumerate_paths(&t, v, w), brute);
            }
        }
    }

    #[test]
    fn jet_ring_laws(a in jet(3, 2), b in jet(3, 2), c in jet(3, 2)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn jet_inverse(a in unit_jet(4), k in 1i64..5) {
        let scaled = a.scale(&MPoly::constant(1, rat(k, 3)));
        prop_assert_eq!(&scaled * &jet_inv(&scaled).unwrap(), Jet::one(4, 1));
    }

    #[test]
    fn jet_pow_additive(a in unit_jet(3), b1 in mpoly(1), b2 in mpoly(1)) {
        let whole = jet_pow(&a, &(&b1 + &b2)).unwrap();
        let split = &jet_pow(&a, &b1).unwrap() * &jet_pow(&a, &b2).unwrap();
        prop_assert_eq!(whole, split);
    }

    #[test]
    fn coefficient_of_union(a in jet(4, 1), b in jet(4, 1), c in jet(4, 1)) {
        let prod = &(&a * &b) * &c;
        for s in 0u32..16 {
            // ordered partitions of s into three (possibly empty) blocks
            let mut expect = MPoly::zero(1);
            let mut x = s;
            loop {
                let rest = s & !x;
                let mut y = rest;
                loop {
                    let z = rest & !y;
                    expect += &(&(&a.coeff(x) * &b.coeff(y)) * &c.coeff(z));
                    if y == 0 { break; }
                    y = (y - 1) & rest;
                }
                if x == 0 { break; }
                x = (x - 1) & s;
            }
            prop_assert_eq!(prod.coeff(s), expect);
        }
    }

    #[test]
    fn oracle_ignores_padding(t in tuple(4, 3), extra in 1usize..3) {
        let n = t.n();
        let padded = t.with_rank(n + extra).unwrap();
        let small = oracle_eigenvalue(&t, false).unwrap().with_nvars(n + extra).unwrap();
        prop_assert_eq!(oracle_eigenvalue(&padded, false).unwrap(), small);
    }

    #[test]
    fn path_identity(t in tuple(5, 4)) {
        let r = path_coefficient_check(&t);
        prop_assert!(r.passed(), "{:?}", r.violations);
    }
}

#[test]
fn patterned_equals_naive_small() {
    for m in 1..=3 {
        for n in 1..=5 {
            for shifted in [true, false] {
                let req = CasimirRequest {
                    shifted,
                    ..CasimirRequest::new(m, n)
                };
                assert_eq!(
                    casimir_eigenvalue(&req).unwrap(),
                    casimir_eigenvalue_patterned(&req).unwrap(),
                    "m={m} n={n}"
                );
            }
        }
    }
}

#[test]
fn order_one_vanishes_up_to_eight() {
    for n in 1..=8 {
        let p = casimir_eigenvalue_patterned(&CasimirRequest::new(1, n)).unwrap();
        assert!(to_power_sum(&p, n).unwrap().is_zero(), "n={n}");
    }
}

#[test]
fn closed_forms_reproduce_samples() {
    for m in 1..=4 {
        let cf = closed_form(m).unwrap();
        for (n, p) in closed_form_samples(m).unwrap() {
            assert_eq!(cf.eval(n), p, "m={m} n={n}");
        }
    }
}

#[test]
fn single_consistent_convention() {
    for m in 1..=3 {
        for n in 1..=4 {
            let r = verify_tuples(m, n, Selection::Exhaustive, true).unwrap();
            let ok = r.consistent_conventions();
            assert!(ok.contains(&SignConvention::Alternating), "m={m} n={n}");
            if r.discriminating() {
                assert_eq!(ok, vec![SignConvention::Alternating]);
            }
            let raw = verify_tuples(m, n, Selection::Exhaustive, false).unwrap();
            assert!(raw
                .consistent_conventions()
                .contains(&SignConvention::Alternating));
        }
    }
}
