//! Exact arithmetic in the cyclotomic field `Q(zeta_N)`.
//!
//! Elements are dense rational coefficient vectors in the power basis
//! `1, z, ..., z^(phi(N)-1)` modulo the cyclotomic polynomial `Phi_N`.
//! Internally each element keeps integer numerators over one common positive
//! denominator, reduced so that the whole vector is in lowest terms; equality
//! of elements is therefore equality of representations.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{self, SolveError};
use crate::numt;

/// Largest conductor [`CycloRing::new`] accepts.
pub const RING_BOUND: u64 = 4096;

/// The ring `Q[x]/(Phi_N)`, with lookup tables for powers of `zeta_N`.
pub struct CycloRing {
    conductor: u64,
    degree: usize,
    modulus: Vec<i64>,
    /// `powers[j]` is `zeta^j` reduced, as sparse `(index, coeff)` pairs.
    powers: Vec<Vec<(usize, i64)>>,
    /// `Tr(zeta^i)` for the basis monomials.
    monomial_traces: Vec<i64>,
    units: Vec<u64>,
}

impl fmt::Debug for CycloRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CycloRing")
            .field("conductor", &self.conductor)
            .field("degree", &self.degree)
            .finish()
    }
}

fn ring_cache() -> &'static Mutex<HashMap<u64, Arc<CycloRing>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CycloRing>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact division of integer polynomials (coefficients low to high) by a
/// monic divisor. Panics if the division leaves a remainder.
fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let dd = den.len() - 1;
    debug_assert_eq!(den[dd], 1);
    let mut rest = num.to_vec();
    let mut quot = vec![0i64; num.len() - dd];
    for k in (0..quot.len()).rev() {
        let c = rest[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in den.iter().enumerate() {
                rest[k + i] -= c * d;
            }
        }
    }
    assert!(rest.iter().all(|&c| c == 0), "inexact polynomial division");
    quot
}

/// Coefficients of `Phi_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    let mut memo: HashMap<u64, Vec<i64>> = HashMap::new();
    for d in numt::divisors(n) {
        let mut p = vec![0i64; d as usize + 1];
        p[0] = -1;
        p[d as usize] = 1;
        for e in numt::divisors(d) {
            if e < d {
                p = div_exact(&p, &memo[&e]);
            }
        }
        memo.insert(d, p);
    }
    memo.remove(&n).expect("n divides itself")
}

impl CycloRing {
    /// The ring of conductor `n`, shared through a process-wide cache.
    pub fn new(n: u64) -> Result<Arc<CycloRing>> {
        if n == 0 || n > RING_BOUND {
            return Err(Error::OutOfRange {
                value: n,
                bound: RING_BOUND,
            });
        }
        if let Some(r) = ring_cache().lock().unwrap().get(&n) {
            return Ok(Arc::clone(r));
        }
        let ring = Arc::new(Self::build(n));
        Ok(Arc::clone(
            ring_cache().lock().unwrap().entry(n).or_insert(ring),
        ))
    }

    fn build(n: u64) -> CycloRing {
        let modulus = cyclotomic_polynomial(n);
        let degree = modulus.len() - 1;
        assert_eq!(degree as u64, numt::euler_phi(n));

        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; degree];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(
                cur.iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(i, &c)| (i, c))
                    .collect::<Vec<_>>(),
            );
            let top = cur[degree - 1];
            cur.rotate_right(1);
            cur[0] = 0;
            if top != 0 {
                for (c, &m) in cur.iter_mut().zip(&modulus) {
                    *c = c
                        .checked_sub(top.checked_mul(m).expect("overflow"))
                        .expect("overflow");
                }
            }
        }
        // z^n must come back to 1
        debug_assert!(cur.iter().enumerate().all(|(i, &c)| c == (i == 0) as i64));

        let phi = degree as i64;
        let monomial_traces = (0..degree as u64)
            .map(|i| {
                let g = i.gcd(&n);
                let m = n / g;
                numt::moebius(m) * phi / numt::euler_phi(m) as i64
            })
            .collect();

        let units = if n <= 2 {
            vec![1]
        } else {
            (1..n).filter(|a| a.gcd(&n) == 1).collect()
        };

        CycloRing {
            conductor: n,
            degree,
            modulus,
            powers,
            monomial_traces,
            units,
        }
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Coefficients of `Phi_N`, lowest degree first (monic).
    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }

    /// Representatives of the Galois group `(Z/NZ)^x`, ascending.
    pub fn galois_group(&self) -> &[u64] {
        &self.units
    }

    fn power_row(&self, s: u64) -> &[(usize, i64)] {
        &self.powers[(s % self.conductor) as usize]
    }
}

/// Writes `exp(2 pi i k / d)` as `(-1)^neg * zeta_n^e` when `Q(zeta_n)` holds it.
fn root_exponent(n: u64, d: u64, k: i64) -> Option<(bool, u64)> {
    let k = numt::rem(k, d);
    let g = k.gcd(&d);
    let (d, k) = (d / g, k / g);
    if n.is_multiple_of(d) {
        return Some((false, k * (n / d)));
    }
    // Q(zeta_n) also holds the 2n-th roots of unity when n is odd.
    let half = d / 2;
    if d % 2 == 0 && half % 2 == 1 && n.is_multiple_of(half) {
        return Some((true, (k + half) / 2 * (n / half)));
    }
    None
}

/// A unit `a` modulo `n`, acting as `zeta_n -> zeta_n^a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaloisIndex {
    a: u64,
    modulus: u64,
}

impl GaloisIndex {
    pub fn new(a: i64, modulus: u64) -> Result<Self> {
        let r = numt::rem(a, modulus);
        if modulus > 1 && (r as i64).gcd(&(modulus as i64)) != 1 {
            return Err(Error::NotCoprime {
                a,
                m: modulus as i64,
            });
        }
        let a = if modulus <= 2 { 1 } else { r };
        Ok(GaloisIndex { a, modulus })
    }

    pub fn value(self) -> u64 {
        self.a
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn inverse(self) -> Self {
        let a = if self.modulus <= 2 {
            1
        } else {
            numt::inv_mod(self.a as i64, self.modulus).expect("unit")
        };
        GaloisIndex { a, ..self }
    }

    /// Smallest representative of this class that is a unit modulo `big`.
    pub fn lift(self, big: u64) -> Result<u64> {
        if !big.is_multiple_of(self.modulus) {
            return Err(Error::NotADivisor {
                target: self.modulus,
                conductor: big,
            });
        }
        let mut a = self.a % self.modulus;
        while a.gcd(&big) != 1 {
            a += self.modulus;
        }
        Ok(a.max(1))
    }
}

/// An element of `Q(zeta_N)`.
#[derive(Clone)]
pub struct CycloElem {
    ring: Arc<CycloRing>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.ring.conductor == other.ring.conductor
            && self.den == other.den
            && self.num == other.num
    }
}

impl Eq for CycloElem {}

impl CycloElem {
    fn from_parts(ring: &Arc<CycloRing>, mut num: Vec<BigInt>, mut den: BigInt) -> Self {
        debug_assert_eq!(num.len(), ring.degree);
        assert!(!den.is_zero(), "zero denominator");
        if den.is_negative() {
            den = -den;
            num.iter_mut().for_each(|c| *c = -std::mem::take(c));
        }
        if num.iter().all(Zero::is_zero) {
            den = BigInt::one();
        } else if !den.is_one() {
            let mut g = den.clone();
            for c in &num {
                if g.is_one() {
                    break;
                }
                if !c.is_zero() {
                    g = g.gcd(c);
                }
            }
            if !g.is_one() {
                num.iter_mut().for_each(|c| *c /= &g);
                den /= &g;
            }
        }
        CycloElem {
            ring: Arc::clone(ring),
            num,
            den,
        }
    }

    pub fn zero(ring: &Arc<CycloRing>) -> Self {
        Self::from_parts(ring, vec![BigInt::zero(); ring.degree], BigInt::one())
    }

    pub fn one(ring: &Arc<CycloRing>) -> Self {
        Self::from_rational(ring, BigRational::one())
    }

    pub fn from_rational(ring: &Arc<CycloRing>, q: BigRational) -> Self {
        let mut num = vec![BigInt::zero(); ring.degree];
        let (n, d) = q.into_raw();
        num[0] = n;
        Self::from_parts(ring, num, d)
    }

    pub fn from_integer(ring: &Arc<CycloRing>, k: i64) -> Self {
        Self::from_rational(ring, BigRational::from_integer(k.into()))
    }

    /// Build from power-basis coefficients; the slice must have length `phi(N)`.
    pub fn from_coeffs(ring: &Arc<CycloRing>, coeffs: &[BigRational]) -> Result<Self> {
        if coeffs.len() != ring.degree {
            return Err(Error::LengthMismatch {
                expected: ring.degree,
                got: coeffs.len(),
            });
        }
        let den = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let num = coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect();
        Ok(Self::from_parts(ring, num, den))
    }

    /// Integer coefficients over a common denominator.
    pub fn from_int_coeffs(ring: &Arc<CycloRing>, coeffs: &[i64], den: i64) -> Result<Self> {
        if coeffs.len() != ring.degree {
            return Err(Error::LengthMismatch {
                expected: ring.degree,
                got: coeffs.len(),
            });
        }
        if den == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_parts(
            ring,
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            den.into(),
        ))
    }

    /// `zeta_N^s`; the exponent is reduced modulo `N`.
    pub fn zeta_power(ring: &Arc<CycloRing>, s: i64) -> Self {
        let mut num = vec![BigInt::zero(); ring.degree];
        for &(i, c) in ring.power_row(numt::rem(s, ring.conductor)) {
            num[i] = c.into();
        }
        Self::from_parts(ring, num, BigInt::one())
    }

    /// The root of unity `exp(2 pi i k / d)`, if the ring contains it.
    pub fn root_of_unity(ring: &Arc<CycloRing>, d: u64, k: i64) -> Option<Self> {
        let (negate, e) = root_exponent(ring.conductor, d, k)?;
        let z = Self::zeta_power(ring, e as i64);
        Some(if negate { -z } else { z })
    }

    /// Multiply by `exp(2 pi i k / d)`, if the ring contains that root.
    pub fn mul_root_of_unity(&self, d: u64, k: i64) -> Option<Self> {
        let (negate, e) = root_exponent(self.ring.conductor, d, k)?;
        let z = self.mul_zeta_power(e as i64);
        Some(if negate { -z } else { z })
    }

    pub fn ring(&self) -> &Arc<CycloRing> {
        &self.ring
    }

    pub fn conductor(&self) -> u64 {
        self.ring.conductor
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        BigRational::new(self.num[i].clone(), self.den.clone())
    }

    pub fn coeffs(&self) -> Vec<BigRational> {
        (0..self.ring.degree).map(|i| self.coeff(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Zero::is_zero)
    }

    /// The value as a rational, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.num[1..].iter().all(Zero::is_zero) {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring.conductor != other.ring.conductor {
            return Err(Error::RingMismatch(
                self.ring.conductor,
                other.ring.conductor,
            ));
        }
        Ok(())
    }

    fn combine(&self, other: &Self, sign: i32) -> Self {
        let den = self.den.lcm(&other.den);
        let fa = &den / &self.den;
        let fb = &den / &other.den;
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| {
                let l = a * &fa;
                let r = b * &fb;
                if sign > 0 {
                    l + r
                } else {
                    l - r
                }
            })
            .collect();
        Self::from_parts(&self.ring, num, den)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, 1))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        Ok(self.combine(other, -1))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other)?;
        let d = self.ring.degree;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.ring));
        }
        let mut acc = vec![BigInt::zero(); 2 * d - 1];
        for (i, a) in self.num.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in other.num.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                acc[i + j] += a * b;
            }
        }
        let mut num: Vec<BigInt> = acc.drain(..d).collect();
        for (k, c) in acc.into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(idx, m) in self.ring.power_row((k + d) as u64) {
                num[idx] += &c * m;
            }
        }
        Ok(Self::from_parts(&self.ring, num, &self.den * &other.den))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        let num = self.num.iter().map(|c| c * q.numer()).collect();
        Self::from_parts(&self.ring, num, &self.den * q.denom())
    }

    /// Multiply by `zeta_N^s` (a permutation-with-reduction of coefficients).
    pub fn mul_zeta_power(&self, s: i64) -> Self {
        let s = numt::rem(s, self.ring.conductor);
        let mut num = vec![BigInt::zero(); self.ring.degree];
        for (i, c) in self.num.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for &(idx, m) in self.ring.power_row(i as u64 + s) {
                num[idx] += c * m;
            }
        }
        Self::from_parts(&self.ring, num, self.den.clone())
    }

    /// Image under `zeta -> zeta^a`.
    pub fn galois(&self, a: GaloisIndex) -> Result<Self> {
        if a.modulus() != self.ring.conductor {
            return Err(Error::ModulusMismatch(a.modulus(), self.ring.conductor));
        }
        Ok(self.galois_unchecked(a.value()))
    }

    /// Image under `zeta -> zeta^a`; `a` must be a unit modulo the conductor.
    pub fn galois_apply(&self, a: i64) -> Result<Self> {
        let idx = GaloisIndex::new(a, self.ring.conductor)?;
        Ok(self.galois_unchecked(idx.value()))
    }

    pub(crate) fn galois_unchecked(&self, a: u64) -> Self {
        if a % self.ring.conductor == 1 % self.ring.conductor {
            return self.clone();
        }
        let mut num = vec![BigInt::zero(); self.ring.degree];
        for (i, c) in self.num.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for &(idx, m) in self.ring.power_row(a * i as u64) {
                num[idx] += c * m;
            }
        }
        Self::from_parts(&self.ring, num, self.den.clone())
    }

    /// Complex conjugation, i.e. the automorphism `zeta -> zeta^-1`.
    pub fn conj(&self) -> Self {
        self.galois_unchecked(self.ring.conductor.saturating_sub(1).max(1))
    }

    /// Absolute trace to `Q`.
    pub fn trace(&self) -> BigRational {
        let s: BigInt = self
            .num
            .iter()
            .zip(&self.ring.monomial_traces)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, &t)| c * t)
            .sum();
        BigRational::new(s, self.den.clone())
    }

    /// Absolute trace computed literally as the sum of all conjugates.
    ///
    /// Panics if that sum is not rational, which can only mean broken
    /// arithmetic.
    pub fn trace_by_conjugates(&self) -> BigRational {
        let total = self
            .ring
            .units
            .iter()
            .fold(Self::zero(&self.ring), |acc, &a| {
                acc.combine(&self.galois_unchecked(a), 1)
            });
        total
            .as_rational()
            .expect("sum of all conjugates must be rational")
    }

    /// Trace of `Q(zeta_N) / Q(zeta_t)`, returned as an element of the ring of
    /// conductor `t`.
    pub fn relative_trace(&self, t: u64) -> Result<Self> {
        let n = self.ring.conductor;
        if t == 0 || !n.is_multiple_of(t) {
            return Err(Error::NotADivisor {
                target: t,
                conductor: n,
            });
        }
        let total = self
            .ring
            .units
            .iter()
            .filter(|&&a| a % t == 1 % t)
            .fold(Self::zero(&self.ring), |acc, &a| {
                acc.combine(&self.galois_unchecked(a), 1)
            });
        total.restrict(t)
    }

    /// Re-express an element of `Q(zeta_t)`, `t | N`, in the ring of conductor `t`.
    ///
    /// Fails with [`Error::NotInSubfield`] when the element is not fixed by
    /// the subgroup.
    #[allow(clippy::needless_range_loop)] // column i of a dense system
    pub fn restrict(&self, t: u64) -> Result<Self> {
        let n = self.ring.conductor;
        if t == 0 || !n.is_multiple_of(t) {
            return Err(Error::NotADivisor {
                target: t,
                conductor: n,
            });
        }
        if t == n {
            return Ok(self.clone());
        }
        let target = CycloRing::new(t)?;
        let step = n / t;
        let (rows, cols) = (self.ring.degree, target.degree);
        let mut a = vec![vec![BigRational::zero(); cols]; rows];
        for i in 0..cols {
            for &(idx, c) in self.ring.power_row(i as u64 * step) {
                a[idx][i] = BigRational::from_integer(c.into());
            }
        }
        let b = self.coeffs();
        match linalg::solve_unique(a, b) {
            Ok(x) => Self::from_coeffs(&target, &x),
            Err(SolveError::Inconsistent) => Err(Error::NotInSubfield(t)),
            Err(SolveError::Singular) => panic!("power basis of Q(zeta_{t}) is dependent"),
        }
    }

    /// Embed into `Q(zeta_m)` for a multiple `m` of the conductor.
    pub fn lift(&self, m: u64) -> Result<Self> {
        let n = self.ring.conductor;
        if !m.is_multiple_of(n) {
            return Err(Error::NotADivisor {
                target: n,
                conductor: m,
            });
        }
        if m == n {
            return Ok(self.clone());
        }
        let target = CycloRing::new(m)?;
        let step = m / n;
        let mut num = vec![BigInt::zero(); target.degree];
        for (i, c) in self.num.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for &(idx, k) in target.power_row(i as u64 * step) {
                num[idx] += c * k;
            }
        }
        Ok(Self::from_parts(&target, num, self.den.clone()))
    }

    /// Multiplicative inverse, by solving `self * y = 1`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let d = self.ring.degree;
        // column j of the multiplication matrix is self * z^j
        let mut a = vec![vec![BigRational::zero(); d]; d];
        let mut col = self.clone();
        for j in 0..d {
            for (i, row) in a.iter_mut().enumerate() {
                row[j] = col.coeff(i);
            }
            col = col.mul_zeta_power(1);
        }
        let mut b = vec![BigRational::zero(); d];
        b[0] = BigRational::one();
        let x = linalg::solve_unique(a, b).map_err(|_| Error::DivisionByZero)?;
        Self::from_coeffs(&self.ring, &x)
    }

    /// The generator of the dual normal basis: the unique `theta*` with
    /// `Tr(theta*^a theta^b) = [a = b]` for all units `a`, `b`.
    ///
    /// Solves the Gram system `(Tr(theta^a theta^b))_{a,b}` exactly.
    pub fn dual_nbg(&self) -> Result<Self> {
        let ring = &self.ring;
        let n = ring.conductor;
        let units = &ring.units;
        let index_of: HashMap<u64, usize> =
            units.iter().enumerate().map(|(i, &a)| (a % n, i)).collect();

        // Tr(theta^a theta^b) = Tr(theta * theta^(b/a)), one value per unit.
        let conjugates: Vec<CycloElem> = units.iter().map(|&a| self.galois_unchecked(a)).collect();
        let pair_trace: Vec<BigRational> = conjugates
            .iter()
            .map(|c| self.try_mul(c).expect("same ring").trace())
            .collect();

        let size = units.len();
        let mut gram = vec![vec![BigRational::zero(); size]; size];
        for (i, &a) in units.iter().enumerate() {
            let a_inv = if n <= 2 {
                1
            } else {
                numt::inv_mod(a as i64, n)?
            };
            for (j, &b) in units.iter().enumerate() {
                gram[i][j] = pair_trace[index_of[&((b * a_inv) % n)]].clone();
            }
        }
        let mut rhs = vec![BigRational::zero(); size];
        rhs[index_of[&(1 % n)]] = BigRational::one();
        let x = linalg::solve_unique(gram, rhs)
            .map_err(|_| Error::NotNormalBasis("singular Gram matrix".into()))?;

        let mut dual = Self::zero(ring);
        for (coeff, conj) in x.iter().zip(&conjugates) {
            if !coeff.is_zero() {
                dual = dual.combine(&conj.scale(coeff), 1);
            }
        }
        Ok(dual)
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{mag}")?,
                _ if mag.is_one() => write!(f, "z^{i}")?,
                _ => write!(f, "{mag}*z^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[Q(zeta_{})] {}", self.ring.conductor, self)
    }
}

impl Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, rhs: &CycloElem) -> CycloElem {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, rhs: &CycloElem) -> CycloElem {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, rhs: &CycloElem) -> CycloElem {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        let num = self.num.iter().map(|c| -c).collect();
        CycloElem::from_parts(&self.ring, num, self.den.clone())
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ring(n: u64) -> Arc<CycloRing> {
        CycloRing::new(n).unwrap()
    }

    #[test]
    fn moduli() {
        assert_eq!(ring(4).modulus(), &[1, 0, 1]);
        assert_eq!(ring(8).modulus(), &[1, 0, 0, 0, 1]);
        assert_eq!(ring(9).modulus(), &[1, 0, 0, 1, 0, 0, 1]);
        assert_eq!(ring(1).modulus(), &[-1, 1]);
        assert!(CycloRing::new(RING_BOUND + 1).is_err());
    }

    #[test]
    fn phi_divides_x_n_minus_one() {
        for n in 1..=120u64 {
            let mut p = vec![0i64; n as usize + 1];
            p[0] = -1;
            p[n as usize] = 1;
            div_exact(&p, &cyclotomic_polynomial(n));
        }
    }

    #[test]
    fn arithmetic_examples() {
        let r4 = ring(4);
        let i = CycloElem::zeta_power(&r4, 1);
        assert_eq!(&i * &i, CycloElem::from_integer(&r4, -1));
        assert!((&i + &-&i).is_zero());
        let a = CycloElem::from_int_coeffs(&r4, &[1, 1], 2).unwrap();
        let b = CycloElem::from_int_coeffs(&r4, &[1, -1], 2).unwrap();
        assert_eq!(&a * &b, CycloElem::from_rational(&r4, q(1, 2)));
        let r3 = ring(3);
        assert_eq!(
            a.try_add(&CycloElem::one(&r3)),
            Err(Error::RingMismatch(4, 3))
        );
    }

    #[test]
    fn zeta_powers() {
        let r4 = ring(4);
        assert_eq!(
            CycloElem::zeta_power(&r4, 2),
            CycloElem::from_integer(&r4, -1)
        );
        assert_eq!(CycloElem::zeta_power(&r4, 5), CycloElem::zeta_power(&r4, 1));
        assert_eq!(
            CycloElem::zeta_power(&r4, -3),
            CycloElem::zeta_power(&r4, 1)
        );
        let r8 = ring(8);
        assert_eq!(
            CycloElem::zeta_power(&r8, 4),
            CycloElem::from_integer(&r8, -1)
        );
    }

    #[test]
    fn roots_of_unity_in_odd_rings() {
        let r3 = ring(3);
        assert_eq!(
            CycloElem::root_of_unity(&r3, 2, 1),
            Some(CycloElem::from_integer(&r3, -1))
        );
        // zeta_6 = -zeta_3^2
        let z6 = CycloElem::root_of_unity(&r3, 6, 1).unwrap();
        assert_eq!(z6, -CycloElem::zeta_power(&r3, 2));
        assert_eq!(&(&z6 * &z6) * &z6, CycloElem::from_integer(&r3, -1));
        assert!(CycloElem::root_of_unity(&r3, 4, 1).is_none());
    }

    #[test]
    fn galois_examples() {
        let r4 = ring(4);
        let i = CycloElem::zeta_power(&r4, 1);
        assert_eq!(i.galois_apply(3).unwrap(), -&i);
        assert_eq!(i.conj(), -&i);
        for a in [1, 3] {
            assert_eq!(
                CycloElem::one(&r4).galois_apply(a).unwrap(),
                CycloElem::one(&r4)
            );
        }
        let theta = CycloElem::from_int_coeffs(&r4, &[1, 1], 2).unwrap();
        let conj = CycloElem::from_int_coeffs(&r4, &[1, -1], 2).unwrap();
        assert_eq!(theta.galois_apply(3).unwrap(), conj);
        assert!(theta.galois_apply(2).is_err());
    }

    #[test]
    fn trace_examples() {
        assert_eq!(CycloElem::one(&ring(15)).trace(), q(8, 1));
        assert_eq!(CycloElem::zeta_power(&ring(4), 1).trace(), q(0, 1));
        for p in [2u64, 3, 5, 7, 11, 13] {
            let z = CycloElem::zeta_power(&ring(p), 1);
            assert_eq!(z.trace(), q(-1, 1));
            assert_eq!(z.trace_by_conjugates(), q(-1, 1));
        }
    }

    #[test]
    fn monomial_traces_match_conjugate_sums() {
        for n in 1..=64u64 {
            let r = ring(n);
            for s in 0..n as i64 {
                let z = CycloElem::zeta_power(&r, s);
                assert_eq!(z.trace(), z.trace_by_conjugates(), "n = {n}, s = {s}");
            }
        }
    }

    #[test]
    fn relative_trace_examples() {
        let r15 = ring(15);
        // zeta_3 zeta_5 = zeta_15^(5+3)
        let theta = &CycloElem::zeta_power(&r15, 8) + &CycloElem::one(&r15);
        let r3 = ring(3);
        let r5 = ring(5);
        let sp1 = theta.relative_trace(3).unwrap();
        let sp2 = theta.relative_trace(5).unwrap();
        assert_eq!(
            sp1,
            &CycloElem::from_integer(&r3, 4) - &CycloElem::zeta_power(&r3, 1)
        );
        assert_eq!(
            sp2,
            &CycloElem::from_integer(&r5, 2) - &CycloElem::zeta_power(&r5, 1)
        );
        assert_eq!(theta.relative_trace(15).unwrap(), theta);
        assert!(theta.relative_trace(4).is_err());
    }

    #[test]
    fn restriction_detects_non_members() {
        let r12 = ring(12);
        let z = CycloElem::zeta_power(&r12, 1);
        assert_eq!(z.restrict(4), Err(Error::NotInSubfield(4)));
        let i = CycloElem::zeta_power(&r12, 3);
        assert_eq!(i.restrict(4).unwrap(), CycloElem::zeta_power(&ring(4), 1));
        assert_eq!(i.restrict(4).unwrap().lift(12).unwrap(), i);
    }

    #[test]
    fn inverse_small() {
        let r5 = ring(5);
        let x = &CycloElem::zeta_power(&r5, 1) + &CycloElem::from_integer(&r5, 2);
        let y = x.inverse().unwrap();
        assert_eq!(&x * &y, CycloElem::one(&r5));
        assert_eq!(CycloElem::zero(&r5).inverse(), Err(Error::DivisionByZero));
    }

    #[test]
    fn dual_examples() {
        let r4 = ring(4);
        let theta = CycloElem::from_int_coeffs(&r4, &[1, 1], 2).unwrap();
        let dual = theta.dual_nbg().unwrap();
        assert_eq!(dual, CycloElem::from_int_coeffs(&r4, &[1, -1], 2).unwrap());
        assert_eq!(dual.dual_nbg().unwrap(), theta);
        assert!(matches!(
            CycloElem::zeta_power(&r4, 1).dual_nbg(),
            Err(Error::NotNormalBasis(_))
        ));
    }

    #[test]
    fn display() {
        let r4 = ring(4);
        let theta = CycloElem::from_int_coeffs(&r4, &[1, -1], 2).unwrap();
        assert_eq!(theta.to_string(), "1/2 - 1/2*z^1");
        assert_eq!(CycloElem::zero(&r4).to_string(), "0");
        assert_eq!(CycloElem::zeta_power(&r4, 3).to_string(), "-z^1");
    }
}
