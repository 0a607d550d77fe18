//! Elementary number theory on machine integers: factorization by trial
//! division, Euler's phi, Moebius, Legendre symbols, modular inverses,
//! primitive roots and Bezout coefficients.

use num_integer::Integer;

use crate::error::{Error, Result};

/// Largest input accepted by [`factorize`] and everything built on it.
pub const FACTOR_BOUND: u64 = 1 << 20;

/// Prime factorization `n = prod p^e`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Factorization {
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// The prime powers `p^e`, in prime order.
    pub fn prime_powers(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, e)| p.pow(e))
    }

    pub fn value(&self) -> u64 {
        self.prime_powers().product()
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    /// `Some((p, e))` when the factored number is a prime power.
    pub fn as_prime_power(&self) -> Option<(u64, u32)> {
        match self.factors.as_slice() {
            [single] => Some(*single),
            _ => None,
        }
    }
}

pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 || n > FACTOR_BOUND {
        return Err(Error::OutOfRange {
            value: n,
            bound: FACTOR_BOUND,
        });
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            let mut e = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { factors })
}

fn factor_or_panic(n: u64) -> Factorization {
    assert!(n >= 1, "argument must be positive");
    factorize(n).unwrap_or_else(|e| panic!("{e}"))
}

/// Order of `(Z/nZ)^x`.
pub fn euler_phi(n: u64) -> u64 {
    factor_or_panic(n)
        .factors()
        .iter()
        .map(|&(p, e)| (p - 1) * p.pow(e - 1))
        .product()
}

pub fn moebius(n: u64) -> i64 {
    let f = factor_or_panic(n);
    if !f.is_squarefree() {
        0
    } else if f.factors().len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Carmichael's function: the exponent of `(Z/nZ)^x`.
pub fn carmichael_lambda(n: u64) -> u64 {
    factor_or_panic(n)
        .factors()
        .iter()
        .map(|&(p, e)| match (p, e) {
            (2, 1) => 1,
            (2, 2) => 2,
            (2, e) => 1 << (e - 2),
            (p, e) => (p - 1) * p.pow(e - 1),
        })
        .fold(1, |acc, x| acc.lcm(&x))
}

/// Positive divisors in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for &(p, e) in factor_or_panic(n).factors() {
        let current = out.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            out.extend(current.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && factorize(n)
            .map(|f| f.factors() == [(n, 1)])
            .unwrap_or(false)
}

pub fn gcd(a: i64, b: i64) -> i64 {
    a.gcd(&b)
}

pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc = 1u128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Reduce `a` into `[0, m)`.
pub fn rem(a: i64, m: u64) -> u64 {
    a.rem_euclid(m as i64) as u64
}

/// Legendre symbol `(a/p)`; `(0/p) = 0`.
pub fn legendre(a: i64, p: i64) -> Result<i64> {
    if p < 3 || p % 2 == 0 || !is_prime(p as u64) {
        return Err(Error::NotOddPrime(p));
    }
    let a = rem(a, p as u64);
    if a == 0 {
        return Ok(0);
    }
    match pow_mod(a, (p as u64 - 1) / 2, p as u64) {
        1 => Ok(1),
        _ => Ok(-1),
    }
}

/// Inverse of `a` modulo `m`, in `[1, m)` (0 when `m == 1`).
pub fn inv_mod(a: i64, m: u64) -> Result<u64> {
    let mi = m as i64;
    let e = a.rem_euclid(mi).extended_gcd(&mi);
    if e.gcd != 1 {
        return Err(Error::NotCoprime { a, m: mi });
    }
    Ok(rem(e.x, m))
}

/// Bezout pair `(s1, s2)` with `s1*n1 + s2*n2 = 1`, `0 <= s1 < n2`.
pub fn crt_coefficients(n1: u64, n2: u64) -> Result<(i64, i64)> {
    if (n1 as i64).gcd(&(n2 as i64)) != 1 {
        return Err(Error::NotCoprime {
            a: n1 as i64,
            m: n2 as i64,
        });
    }
    let s1 = inv_mod(n1 as i64, n2)? as i64;
    let s2 = (1 - s1 * n1 as i64) / n2 as i64;
    Ok((s1, s2))
}

/// Multiplicative order of a unit `a` modulo `m`.
pub fn multiplicative_order(a: u64, m: u64) -> Option<u64> {
    if (a as i64).gcd(&(m as i64)) != 1 {
        return None;
    }
    if m == 1 {
        return Some(1);
    }
    let phi = euler_phi(m);
    divisors(phi).into_iter().find(|&d| pow_mod(a, d, m) == 1)
}

/// Smallest generator of `(Z/qZ)^x` for `q` in {2, 4, p^s} with `p` odd.
pub fn primitive_root(q: u64) -> Result<u64> {
    let f = factorize(q)?;
    match f.as_prime_power() {
        _ if q == 2 => return Ok(1),
        _ if q == 4 => return Ok(3),
        Some((p, _)) if p != 2 => {}
        _ => return Err(Error::NoPrimitiveRoot(q)),
    }
    let phi = euler_phi(q);
    let phi_primes: Vec<u64> = factorize(phi)?.primes().collect();
    (2..q)
        .find(|&g| g.gcd(&q) == 1 && phi_primes.iter().all(|&r| pow_mod(g, phi / r, q) != 1))
        .ok_or(Error::NoPrimitiveRoot(q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(8), 4);
        assert_eq!(euler_phi(15), 8);
    }

    #[test]
    fn moebius_examples() {
        assert_eq!(moebius(1), 1);
        assert_eq!(moebius(4), 0);
        assert_eq!(moebius(30), -1);
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(1, 3), Ok(1));
        assert_eq!(legendre(2, 7), Ok(1));
        // squares mod 7 are {1, 2, 4}
        assert_eq!(legendre(3, 7), Ok(-1));
        assert_eq!(legendre(0, 5), Ok(0));
        assert!(legendre(1, 2).is_err());
        assert!(legendre(1, 9).is_err());
    }

    #[test]
    fn toolkit_examples() {
        assert_eq!(inv_mod(3, 8), Ok(3));
        assert_eq!(crt_coefficients(3, 5), Ok((2, -1)));
        assert_eq!(primitive_root(9), Ok(2));
        assert!(inv_mod(2, 8).is_err());
        assert!(crt_coefficients(4, 6).is_err());
        assert_eq!(primitive_root(8), Err(Error::NoPrimitiveRoot(8)));
        assert_eq!(primitive_root(12), Err(Error::NoPrimitiveRoot(12)));
    }

    #[test]
    fn factorization_bound() {
        assert!(factorize(FACTOR_BOUND + 1).is_err());
        assert!(factorize(0).is_err());
        let f = factorize(360).unwrap();
        assert_eq!(f.factors(), &[(2, 3), (3, 2), (5, 1)]);
        assert_eq!(f.value(), 360);
    }

    #[test]
    fn lambda_small() {
        assert_eq!(carmichael_lambda(8), 2);
        assert_eq!(carmichael_lambda(15), 4);
        assert_eq!(carmichael_lambda(49), 42);
        assert_eq!(carmichael_lambda(1), 1);
    }

    #[test]
    fn phi_matches_brute_force() {
        for n in 1..=10_000u64 {
            let brute = (1..=n).filter(|a| a.gcd(&n) == 1).count() as u64;
            assert_eq!(euler_phi(n), brute, "n = {n}");
        }
    }

    #[test]
    fn moebius_sum_over_divisors() {
        for n in 1..=10_000u64 {
            let s: i64 = divisors(n).into_iter().map(moebius).sum();
            assert_eq!(s, (n == 1) as i64, "n = {n}");
        }
    }

    #[test]
    fn legendre_is_euler_criterion() {
        for p in (3..=100).filter(|&p| is_prime(p)) {
            for a in 0..p {
                let e = pow_mod(a, (p - 1) / 2, p);
                let expect = match e {
                    0 => 0,
                    1 => 1,
                    _ => -1,
                };
                assert_eq!(legendre(a as i64, p as i64).unwrap(), expect);
            }
        }
    }

    #[test]
    fn primitive_roots_have_full_order() {
        for q in 2..2000u64 {
            if let Ok(g) = primitive_root(q) {
                assert_eq!(multiplicative_order(g, q), Some(euler_phi(q)), "q = {q}");
            }
        }
    }

    proptest! {
        #[test]
        fn factorization_reconstructs(n in 1u64..FACTOR_BOUND) {
            let f = factorize(n).unwrap();
            prop_assert_eq!(f.value(), n);
            prop_assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            prop_assert!(f.factors().iter().all(|&(p, e)| e >= 1 && is_prime(p)));
        }

        #[test]
        fn bezout_holds(n1 in 1u64..5000, n2 in 1u64..5000) {
            if let Ok((s1, s2)) = crt_coefficients(n1, n2) {
                prop_assert_eq!(s1 * n1 as i64 + s2 * n2 as i64, 1);
            } else {
                prop_assert!(n1.gcd(&n2) != 1);
            }
        }
    }
}
