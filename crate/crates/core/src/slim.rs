//! Slim normal basis generators and the closed-form trace values
//! `c(s) = Tr(theta* zeta_n^s)`.
//!
//! For a prime power `q = p^s` the generator is fixed by its character
//! coordinates, one constant per conductor class. For composite `n` the
//! generator is the product of the prime-power generators.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;

use crate::chars;
use crate::cyclo::{CycloElem, CycloRing};
use crate::error::{Error, Result};
use crate::leopoldt::{self, ChiCoords, CoordFrame, CoordValue};
use crate::numt::{self, Factorization};

/// Tagged coordinates of the slim generator of `Q(zeta_{p^s})`.
pub fn slim_coords_prime_power(p: u64, s: u32) -> Result<ChiCoords> {
    if !numt::is_prime(p) || s == 0 {
        return Err(Error::OutOfRange {
            value: p.saturating_pow(s),
            bound: numt::FACTOR_BOUND,
        });
    }
    let q = p
        .checked_pow(s)
        .filter(|&q| q <= numt::FACTOR_BOUND)
        .ok_or(Error::OutOfRange {
            value: u64::MAX,
            bound: numt::FACTOR_BOUND,
        })?;
    let frame = CoordFrame::new(q)?;
    let values = frame
        .characters()
        .iter()
        .map(|chi| {
            let f = chi.conductor();
            let k = conductor_exponent(f, p);
            match (p, k) {
                (_, 0) => CoordValue::One,
                (2, _) => CoordValue::Half,
                (_, 1) => CoordValue::MinusOne,
                (_, k) => CoordValue::QuadSum { p, s: k },
            }
        })
        .collect();
    ChiCoords::new(&frame, values)
}

fn conductor_exponent(mut f: u64, p: u64) -> u32 {
    let mut k = 0;
    while f > 1 {
        debug_assert_eq!(f % p, 0);
        f /= p;
        k += 1;
    }
    k
}

/// One prime-power factor of a slim generator.
#[derive(Debug, Clone)]
pub struct PrimePowerPart {
    pub p: u64,
    pub s: u32,
    pub coords: ChiCoords,
    /// The generator of `Q(zeta_{p^s})`.
    pub theta: CycloElem,
}

impl PrimePowerPart {
    pub fn modulus(&self) -> u64 {
        self.p.pow(self.s)
    }
}

/// A slim normal basis generator of `Q(zeta_n)` with its construction data.
#[derive(Debug, Clone)]
pub struct SlimBasisSpec {
    n: u64,
    factorization: Factorization,
    parts: Vec<PrimePowerPart>,
    theta: CycloElem,
}

impl SlimBasisSpec {
    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn factorization(&self) -> &Factorization {
        &self.factorization
    }

    pub fn parts(&self) -> &[PrimePowerPart] {
        &self.parts
    }

    /// The generator, in `Q(zeta_n)`.
    pub fn theta(&self) -> &CycloElem {
        &self.theta
    }

    /// Character coordinates modulo `n`: the tagged assignment for a prime
    /// power, computed from `theta` otherwise.
    pub fn coords(&self) -> Result<ChiCoords> {
        match self.parts.as_slice() {
            [single] => Ok(single.coords.clone()),
            _ => leopoldt::chi_coords(&self.theta, self.n),
        }
    }
}

/// The slim generator `theta_n = prod_j theta_{p_j^{s_j}}`.
///
/// `n = 1` gives the trivial generator `1`.
pub fn slim_nbg(n: u64) -> Result<SlimBasisSpec> {
    let factorization = numt::factorize(n)?;
    let field = CycloRing::new(n)?;
    let mut theta = CycloElem::one(&field);
    let mut parts = Vec::new();
    for &(p, s) in factorization.factors() {
        let coords = slim_coords_prime_power(p, s)?;
        let part_theta = leopoldt::synthesize(&coords)?;
        theta = &theta * &part_theta.lift(n)?;
        parts.push(PrimePowerPart {
            p,
            s,
            coords,
            theta: part_theta,
        });
    }
    Ok(SlimBasisSpec {
        n,
        factorization,
        parts,
        theta,
    })
}

/// `mu(n) zeta_n` for squarefree `n`.
pub fn slim_nbg_squarefree(n: u64) -> Result<CycloElem> {
    if !numt::factorize(n)?.is_squarefree() {
        return Err(Error::NotSquarefree(n));
    }
    let ring = CycloRing::new(n)?;
    Ok(CycloElem::zeta_power(&ring, 1).scale(&BigRational::from_integer(numt::moebius(n).into())))
}

/// `Tr(theta* zeta_n^s)` for the slim generator of `Q(zeta_n)`.
pub fn entry_rule(n: u64, s: i64) -> i64 {
    let f = numt::factorize(n).unwrap_or_else(|e| panic!("{e}"));
    match f.as_prime_power() {
        None if n == 1 => 1,
        Some((p, e)) => entry_prime_power(p, e, s),
        None => crt_twists(n, &f)
            .into_iter()
            .map(|(p, e, q, t)| entry_prime_power(p, e, numt::rem(s, q) as i64 * t as i64))
            .product(),
    }
}

/// `(p, e, p^e, inverse of n/p^e mod p^e)` for each prime power of `n`.
fn crt_twists(n: u64, f: &Factorization) -> Vec<(u64, u32, u64, u64)> {
    f.factors()
        .iter()
        .map(|&(p, e)| {
            let q = p.pow(e);
            let t = numt::inv_mod((n / q) as i64, q).expect("coprime cofactor");
            (p, e, q, t)
        })
        .collect()
}

fn entry_prime_power(p: u64, e: u32, s: i64) -> i64 {
    let (n0, a0) = chars::reduce_root(p.pow(e), s);
    if n0 == 1 {
        return 1;
    }
    if n0 == 2 {
        return -1;
    }
    if n0 == p {
        // odd p
        return if a0 % p == 1 { -1 } else { 0 };
    }
    let step = n0 / p;
    if p == 2 {
        return match a0 {
            1 => 1,
            a if a == 1 + step => -1,
            _ => 0,
        };
    }
    if (a0 - 1) % step != 0 {
        return 0;
    }
    let j = ((a0 - 1) / step) as i64;
    numt::legendre(j, p as i64).expect("odd prime")
}

/// All `n` values of [`entry_rule`], indexed by `s`.
pub fn entry_table(n: u64) -> Vec<i64> {
    let f = numt::factorize(n).unwrap_or_else(|e| panic!("{e}"));
    if f.as_prime_power().is_some() || n == 1 {
        return (0..n as i64).map(|s| entry_rule(n, s)).collect();
    }
    let twists = crt_twists(n, &f);
    let tables: Vec<Vec<i64>> = twists
        .iter()
        .map(|&(p, e, q, _)| (0..q as i64).map(|s| entry_prime_power(p, e, s)).collect())
        .collect();
    (0..n)
        .map(|s| {
            twists
                .iter()
                .zip(&tables)
                .map(|(&(_, _, q, t), table)| table[((s % q) * t % q) as usize])
                .product()
        })
        .collect()
}

/// `Tr(theta* zeta_n^s)` for `s` in `[0, n)`, computed from the dual
/// generator.
pub fn dual_trace_values(theta: &CycloElem, n: u64) -> Result<Vec<BigRational>> {
    let theta = into_field(theta, n)?;
    let dual = theta.dual_nbg()?;
    Ok((0..n as i64)
        .map(|s| dual.mul_zeta_power(s).trace())
        .collect())
}

fn into_field(theta: &CycloElem, n: u64) -> Result<CycloElem> {
    let c = theta.conductor();
    if c == n {
        Ok(theta.clone())
    } else if n.is_multiple_of(c) {
        theta.lift(n)
    } else {
        theta.restrict(n)
    }
}

/// Whether every `Tr(theta* zeta_n^s)` lies in `{-1, 0, 1}`.
pub fn is_slim(theta: &CycloElem, n: u64) -> Result<bool> {
    Ok(dual_trace_values(theta, n)?
        .iter()
        .all(|v| v.is_integer() && v.numer().magnitude() <= &One::one()))
}

/// Result of [`decompose_check`].
#[derive(Debug, Clone)]
pub struct Decomposition {
    pub decomposable: bool,
    /// `(Tr_1(theta), Tr_2(theta))`, the relative traces down to
    /// `Q(zeta_{n1})` and `Q(zeta_{n2})`, present when decomposable.
    pub factors: Option<(CycloElem, CycloElem)>,
    /// `Tr(theta)`.
    pub trace: BigRational,
}

/// Test `Tr(theta) theta = Tr_1(theta) Tr_2(theta)` for `theta` in
/// `Q(zeta_{n1 n2})`, where `Tr_i` is the trace down to `Q(zeta_{n_i})`.
pub fn decompose_check(theta: &CycloElem, n1: u64, n2: u64) -> Result<Decomposition> {
    if n1.gcd(&n2) != 1 {
        return Err(Error::NotCoprime {
            a: n1 as i64,
            m: n2 as i64,
        });
    }
    let n = n1 * n2;
    let theta = into_field(theta, n)?;
    let t1 = theta.relative_trace(n1)?;
    let t2 = theta.relative_trace(n2)?;
    let trace = theta.trace();
    let lhs = theta.scale(&trace);
    let rhs = &t1.lift(n)? * &t2.lift(n)?;
    let decomposable = lhs == rhs;
    Ok(Decomposition {
        decomposable,
        factors: decomposable.then_some((t1, t2)),
        trace,
    })
}

/// `y * conj(y)` for coordinate `i` of `coords`, as a rational if it is one.
pub fn coord_norm(coords: &ChiCoords, i: usize) -> Option<BigRational> {
    let y = coords.value_elem(i);
    (&y * &y.conj()).as_rational()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn ring(n: u64) -> Arc<CycloRing> {
        CycloRing::new(n).unwrap()
    }

    fn tags(c: &ChiCoords) -> Vec<(u64, CoordValue)> {
        c.frame()
            .characters()
            .iter()
            .map(|chi| chi.conductor())
            .zip(c.values().iter().cloned())
            .collect()
    }

    #[test]
    fn prime_power_tags() {
        assert_eq!(
            tags(&slim_coords_prime_power(2, 2).unwrap()),
            vec![(1, CoordValue::One), (4, CoordValue::Half)]
        );
        assert_eq!(
            tags(&slim_coords_prime_power(3, 1).unwrap()),
            vec![(1, CoordValue::One), (3, CoordValue::MinusOne)]
        );
        let t9 = tags(&slim_coords_prime_power(3, 2).unwrap());
        assert_eq!(t9.len(), 6);
        for (f, v) in t9 {
            let expect = match f {
                1 => CoordValue::One,
                3 => CoordValue::MinusOne,
                9 => CoordValue::QuadSum { p: 3, s: 2 },
                _ => unreachable!(),
            };
            assert_eq!(v, expect);
        }
    }

    #[test]
    fn generator_examples() {
        let t4 = slim_nbg(4).unwrap();
        assert_eq!(
            t4.theta(),
            &CycloElem::from_int_coeffs(&ring(4), &[1, 1], 2).unwrap()
        );
        assert_eq!(slim_nbg(2).unwrap().theta(), &CycloElem::one(&ring(2)));
        assert_eq!(slim_nbg(1).unwrap().theta(), &CycloElem::one(&ring(1)));
        assert_eq!(
            slim_nbg(3).unwrap().theta(),
            &-&CycloElem::zeta_power(&ring(3), 1)
        );

        let t12 = slim_nbg(12).unwrap();
        let t3 = leopoldt::synthesize(&slim_coords_prime_power(3, 1).unwrap()).unwrap();
        let expect = &t4.theta().lift(12).unwrap() * &t3.lift(12).unwrap();
        assert_eq!(t12.theta(), &expect);
        assert_eq!(t12.parts().len(), 2);
    }

    #[test]
    fn squarefree_examples() {
        let z = |n| CycloElem::zeta_power(&ring(n), 1);
        assert_eq!(slim_nbg_squarefree(3).unwrap(), -&z(3));
        assert_eq!(slim_nbg_squarefree(6).unwrap(), z(6));
        assert_eq!(slim_nbg_squarefree(15).unwrap(), z(15));
        assert!(matches!(
            slim_nbg_squarefree(12),
            Err(Error::NotSquarefree(12))
        ));
    }

    #[test]
    fn entry_rule_examples() {
        assert_eq!(
            (0..4).map(|s| entry_rule(4, s)).collect::<Vec<_>>(),
            [1, 1, -1, -1]
        );
        assert_eq!(entry_rule(9, 4), 1);
        assert_eq!(entry_rule(8, 5), -1);
        assert_eq!(entry_rule(4, -1), entry_rule(4, 3));
        assert_eq!(entry_rule(1, 7), 1);
    }

    #[test]
    fn table_matches_rule() {
        for n in [1u64, 2, 12, 15, 36, 45, 60] {
            let table = entry_table(n);
            for s in 0..n as i64 {
                assert_eq!(table[s as usize], entry_rule(n, s), "n = {n}, s = {s}");
            }
        }
    }

    #[test]
    fn slim_examples() {
        let t4 = CycloElem::from_int_coeffs(&ring(4), &[1, 1], 2).unwrap();
        assert!(is_slim(&t4, 4).unwrap());
        assert!(is_slim(&CycloElem::zeta_power(&ring(5), 1), 5).unwrap());
        let shifted = &CycloElem::zeta_power(&ring(3), 1) + &CycloElem::from_integer(&ring(3), 2);
        assert!(!is_slim(&shifted, 3).unwrap());
        assert!(is_slim(&CycloElem::zeta_power(&ring(4), 1), 4).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let r = ring(15);
        // zeta_3 zeta_5 = zeta_15^(5 + 3)
        let z3z5 = CycloElem::zeta_power(&r, 8);
        let theta = &z3z5 + &CycloElem::one(&r);
        let d = decompose_check(&theta, 3, 5).unwrap();
        assert!(!d.decomposable);
        assert_eq!(d.trace, BigRational::from_integer(9.into()));

        assert!(decompose_check(&z3z5, 3, 5).unwrap().decomposable);

        let t12 = slim_nbg(12).unwrap();
        let d = decompose_check(t12.theta(), 3, 4).unwrap();
        assert!(d.decomposable);
        let (a, b) = d.factors.unwrap();
        assert_eq!(
            &a.lift(12).unwrap() * &b.lift(12).unwrap(),
            t12.theta().scale(&d.trace)
        );

        assert!(decompose_check(&theta, 3, 6).is_err());
    }

    #[test]
    fn quadsum_norm() {
        for (p, s) in [(3u64, 2u32), (3, 3), (5, 2), (7, 2)] {
            let c = slim_coords_prime_power(p, s).unwrap();
            for (i, v) in c.values().iter().enumerate() {
                if let CoordValue::QuadSum { .. } = v {
                    assert_eq!(
                        coord_norm(&c, i),
                        Some(BigRational::new(1.into(), (p as i64).into()))
                    );
                }
            }
        }
    }

    #[test]
    fn trace_of_generator_is_one() {
        for n in [2u64, 3, 4, 8, 9, 12, 15, 20] {
            assert!(slim_nbg(n).unwrap().theta().trace().is_one(), "n = {n}");
        }
    }

    #[test]
    fn zero_coordinate_count() {
        // the all-tag assignment never vanishes
        let c = slim_coords_prime_power(5, 2).unwrap();
        assert!(leopoldt::is_nbg(&c));
        assert!(c.materialized().iter().all(|y| !y.is_zero()));
    }

    fn oracle_matches_rule(n: u64) {
        let spec = slim_nbg(n).unwrap();
        let oracle = dual_trace_values(spec.theta(), n).unwrap();
        let table = entry_table(n);
        for (s, v) in oracle.iter().enumerate() {
            assert_eq!(
                v,
                &BigRational::from_integer(table[s].into()),
                "n = {n}, s = {s}"
            );
        }
    }

    #[test]
    fn closed_form_matches_oracle_prime_powers() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let mut q = p;
            while q <= 64 {
                oracle_matches_rule(q);
                q *= p;
            }
        }
    }

    #[test]
    fn closed_form_matches_oracle_composite() {
        for n in [12u64, 15, 20, 24, 36, 45] {
            oracle_matches_rule(n);
        }
    }

    #[test]
    fn squarefree_generators_are_slim() {
        for n in [2u64, 3, 5, 6, 7, 10, 14, 15, 21, 30] {
            assert!(
                is_slim(&slim_nbg_squarefree(n).unwrap(), n).unwrap(),
                "n = {n}"
            );
        }
    }
}
