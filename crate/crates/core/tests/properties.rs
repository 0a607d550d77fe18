mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;
use slimbasis::adft;
use slimbasis::fadft;
use slimbasis::leopoldt::{self, coords_of_conjugate, root_chi_coords, trace_pairing};
use slimbasis::slim;
use slimbasis::{BigRational, CycloElem, CycloRing, GaloisIndex};

fn ring(n: u64) -> std::sync::Arc<CycloRing> {
    CycloRing::new(n).unwrap()
}

#[test]
fn pairing_matches_direct_trace() {
    let mut rng = common::rng(15);
    for n in [3u64, 4, 5, 7, 8, 9, 12, 16] {
        let r = ring(n);
        let alpha = common::element(&mut rng, &r);
        let beta = common::element(&mut rng, &r);
        let ca = leopoldt::chi_coords(&alpha, n).unwrap();
        let cb = leopoldt::chi_coords(&beta, n).unwrap();
        for &s in r.galois_group() {
            for &t in r.galois_group() {
                let sigma = GaloisIndex::new(s as i64, n).unwrap();
                let rho = GaloisIndex::new(t as i64, n).unwrap();
                let direct = (&alpha.galois(sigma).unwrap() * &beta.galois(rho).unwrap()).trace();
                assert_eq!(
                    trace_pairing(&ca, &cb, sigma, rho).unwrap(),
                    direct,
                    "n = {n}, sigma = {s}, rho = {t}"
                );
            }
        }
    }
}

#[test]
fn dual_coords_agree_with_gram_solve() {
    let mut rng = common::rng(16);
    for n in [3u64, 4, 5, 8, 9, 12, 15, 16, 20] {
        let r = ring(n);
        let mut candidates = vec![slim::slim_nbg(n).unwrap().theta().clone()];
        candidates.extend((0..3).map(|_| common::element(&mut rng, &r)));
        for theta in candidates {
            let coords = leopoldt::chi_coords(&theta, n).unwrap();
            if !leopoldt::is_nbg(&coords) {
                assert!(theta.dual_nbg().is_err());
                continue;
            }
            let via_coords =
                leopoldt::synthesize(&leopoldt::dual_coords(&coords).unwrap()).unwrap();
            assert_eq!(
                via_coords,
                theta.dual_nbg().unwrap(),
                "n = {n}, theta = {theta}"
            );
        }
    }
}

#[test]
fn root_coords_match_analysis() {
    for n in [4u64, 8, 9, 12, 15] {
        let r = ring(n);
        for s in 0..n as i64 {
            let direct = leopoldt::chi_coords(&CycloElem::zeta_power(&r, s), n).unwrap();
            assert_eq!(root_chi_coords(n, s).unwrap(), direct, "n = {n}, s = {s}");
        }
    }
}

#[test]
fn conjugate_coords_match_galois_action() {
    let mut rng = common::rng(17);
    for n in [5u64, 8, 12, 15] {
        let r = ring(n);
        let theta = common::element(&mut rng, &r);
        let coords = leopoldt::chi_coords(&theta, n).unwrap();
        for &a in r.galois_group() {
            let g = GaloisIndex::new(a as i64, n).unwrap();
            let moved = coords_of_conjugate(&coords, g).unwrap();
            let expect = leopoldt::chi_coords(&theta.galois(g).unwrap(), n).unwrap();
            assert_eq!(moved, expect, "n = {n}, a = {a}");
        }
    }
}

#[test]
fn slim_matrices_for_all_listed_moduli() {
    for n in [
        2u64, 4, 8, 16, 32, 3, 9, 27, 5, 25, 7, 49, 12, 15, 20, 24, 36, 45,
    ] {
        let closed = adft::adft_matrix_slim(n).unwrap();
        assert!(closed.is_slim(), "n = {n}");
        let oracle = adft::adft_matrix_oracle(slim::slim_nbg(n).unwrap().theta(), n).unwrap();
        assert!(closed.same_entries(&oracle), "n = {n}");
    }
}

#[test]
fn adft_computes_spectrum_in_normal_basis() {
    let mut rng = common::rng(18);
    for n in [4u64, 5, 8, 9, 12] {
        let theta = slim::slim_nbg(n).unwrap().theta().clone();
        let a = adft::adft_matrix_slim(n).unwrap();
        for _ in 0..5 {
            let c = common::vector(&mut rng, n as usize);
            let expect = adft::transform_by_traces(&theta, &c).unwrap();
            assert_eq!(a.mul_vec(&c).unwrap(), expect, "n = {n}");
        }
    }
}

#[test]
fn squarefree_and_product_generators_both_slim() {
    for n in [6u64, 10, 15, 30] {
        let sq = slim::slim_nbg_squarefree(n).unwrap();
        let prod = slim::slim_nbg(n).unwrap();
        assert!(slim::is_slim(&sq, n).unwrap());
        assert!(slim::is_slim(prod.theta(), n).unwrap());
    }
}

#[test]
fn constructed_generators_have_trace_one() {
    for n in [
        2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 6, 10, 12, 15, 20, 21, 24, 30, 36, 45,
    ] {
        assert!(
            slim::slim_nbg(n).unwrap().theta().trace().is_one(),
            "n = {n}"
        );
    }
}

#[test]
fn zero_coordinates_reject_synthesis_of_dual() {
    let coords = leopoldt::chi_coords(&CycloElem::zero(&ring(8)), 8).unwrap();
    assert!(!leopoldt::is_nbg(&coords));
    assert!(leopoldt::dual_coords(&coords).is_err());
    assert!(leopoldt::synthesize(&coords).unwrap().is_zero());
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=9).prop_map(|(a, b)| BigRational::new(a.into(), b.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn fadft_equals_dense(t in 1u32..=6, seed in any::<u64>()) {
        let n = 1usize << t;
        let mut rng = common::rng(seed);
        let v = common::vector(&mut rng, n);
        let plan = fadft::plan(t).unwrap();
        let dense = adft::adft_matrix_slim(n as u64).unwrap().mul_vec(&v).unwrap();
        let (fast, ops) = fadft::execute_counted(&plan, &v).unwrap();
        prop_assert_eq!(fast, dense);
        prop_assert_eq!(ops, plan.addition_count());
    }

    #[test]
    fn fadft_is_linear(a in proptest::collection::vec(rational(), 16),
                       b in proptest::collection::vec(rational(), 16)) {
        let plan = fadft::plan(4).unwrap();
        let sum: Vec<BigRational> = a.iter().zip(&b).map(|(x, y)| x + y).collect();
        let fa = fadft::execute(&plan, &a).unwrap();
        let fb = fadft::execute(&plan, &b).unwrap();
        let fs = fadft::execute(&plan, &sum).unwrap();
        let added: Vec<BigRational> = fa.iter().zip(&fb).map(|(x, y)| x + y).collect();
        prop_assert_eq!(fs, added);
    }

    #[test]
    fn entry_rule_is_periodic(n in 1u64..200, s in -1000i64..1000) {
        let v = slim::entry_rule(n, s);
        prop_assert_eq!(v, slim::entry_rule(n, s + n as i64));
        prop_assert!((-1..=1).contains(&v));
    }

    #[test]
    fn sign_rule_for_powers_of_two(t in 1u32..=12, s in 0i64..4096) {
        let n = 1i64 << t;
        prop_assert_eq!(
            slim::entry_rule(n as u64, s + n / 2),
            -slim::entry_rule(n as u64, s)
        );
    }
}

#[test]
fn dense_zero_vector() {
    let plan = fadft::plan(5).unwrap();
    let zeros = vec![BigRational::zero(); 32];
    assert!(fadft::execute(&plan, &zeros)
        .unwrap()
        .iter()
        .all(Zero::is_zero));
}
