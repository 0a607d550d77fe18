//! Dirichlet characters modulo `m`, their conductors, and Gauss sums.
//!
//! Character values are kept as exponents: `chi(a) = zeta_d^k` with `d` the
//! order of `chi`. They are only turned into field elements when a caller
//! supplies a [`CycloRing`].

use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Zero;

use crate::cyclo::{CycloElem, CycloRing};
use crate::error::{Error, Result};
use crate::numt::{self, FACTOR_BOUND};

/// `(Z/mZ)^x` as a product of cyclic groups with fixed generators.
pub struct UnitGroup {
    modulus: u64,
    generators: Vec<(u64, u64)>,
    exponent: u64,
    /// Discrete logs against `generators`, `rank` entries per residue;
    /// `NO_LOG` marks non-units.
    logs: Vec<u32>,
}

const NO_LOG: u32 = u32::MAX;

impl fmt::Debug for UnitGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("UnitGroup")
            .field("modulus", &self.modulus)
            .field("generators", &self.generators)
            .finish()
    }
}

/// Lift `g mod q` to the unit `x mod m` with `x = g (mod q)`, `x = 1 (mod m/q)`.
fn crt_lift(g: u64, q: u64, m: u64) -> u64 {
    let rest = m / q;
    if rest == 1 {
        return g % m;
    }
    let (s1, s2) = numt::crt_coefficients(q, rest).expect("coprime parts");
    // x = g * s2*rest + 1 * s1*q  (mod m)
    let x = g as i128 * s2 as i128 * rest as i128 + s1 as i128 * q as i128;
    x.rem_euclid(m as i128) as u64
}

impl UnitGroup {
    pub fn new(m: u64) -> Result<Arc<UnitGroup>> {
        let fact = numt::factorize(m).map_err(|_| Error::OutOfRange {
            value: m,
            bound: FACTOR_BOUND,
        })?;
        let mut generators = Vec::new();
        for (&(p, e), q) in fact.factors().iter().zip(fact.prime_powers()) {
            let local: Vec<(u64, u64)> = match (p, e) {
                (2, 1) => vec![],
                (2, 2) => vec![(3, 2)],
                (2, e) => vec![(q - 1, 2), (5, 1 << (e - 2))],
                _ => vec![(numt::primitive_root(q)?, numt::euler_phi(q))],
            };
            generators.extend(local.into_iter().map(|(g, o)| (crt_lift(g, q, m), o)));
        }
        let exponent = generators.iter().fold(1u64, |acc, &(_, o)| acc.lcm(&o));

        let rank = generators.len();
        let mut logs = vec![NO_LOG; m as usize * rank.max(1)];
        let mut exps = vec![0u32; rank];
        let mut seen = 0u64;
        loop {
            let value = generators
                .iter()
                .zip(&exps)
                .fold(1 % m, |acc, (&(g, _), &e)| {
                    acc * numt::pow_mod(g, e as u64, m) % m
                });
            let slot = &mut logs[value as usize * rank..(value as usize + 1) * rank];
            assert!(
                rank == 0 || slot[0] == NO_LOG,
                "generators are not independent"
            );
            slot.copy_from_slice(&exps);
            seen += 1;
            if !advance(&mut exps, generators.iter().map(|&(_, o)| o)) {
                break;
            }
        }
        assert_eq!(seen, numt::euler_phi(m));
        Ok(Arc::new(UnitGroup {
            modulus: m,
            generators,
            exponent,
            logs,
        }))
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// `(generator, order)` pairs.
    pub fn generators(&self) -> &[(u64, u64)] {
        &self.generators
    }

    /// Exponent `lambda` of the group.
    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn order(&self) -> u64 {
        self.generators.iter().map(|&(_, o)| o).product()
    }

    /// Exponent vector of `a` against the generators, or `None` for non-units.
    pub fn log(&self, a: i64) -> Option<&[u32]> {
        let r = numt::rem(a, self.modulus) as usize;
        let rank = self.generators.len();
        if rank == 0 {
            return ((r as u64).gcd(&self.modulus) == 1 || self.modulus == 1).then_some(&[]);
        }
        let slot = &self.logs[r * rank..(r + 1) * rank];
        (slot[0] != NO_LOG).then_some(slot)
    }
}

/// Mixed-radix increment; false once the counter wraps to zero.
fn advance(exps: &mut [u32], orders: impl Iterator<Item = u64>) -> bool {
    for (e, o) in exps.iter_mut().zip(orders) {
        *e += 1;
        if (*e as u64) < o {
            return true;
        }
        *e = 0;
    }
    false
}

/// A Dirichlet character, `chi(g_i) = zeta_{o_i}^{e_i}` on the generators.
#[derive(Clone)]
pub struct DirichletChar {
    group: Arc<UnitGroup>,
    exponents: Vec<u32>,
    order: u64,
    conductor: u64,
}

impl PartialEq for DirichletChar {
    fn eq(&self, other: &Self) -> bool {
        self.group.modulus == other.group.modulus && self.exponents == other.exponents
    }
}

impl Eq for DirichletChar {}

impl fmt::Debug for DirichletChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "chi mod {} {:?} (order {}, conductor {})",
            self.group.modulus, self.exponents, self.order, self.conductor
        )
    }
}

impl DirichletChar {
    pub fn new(group: &Arc<UnitGroup>, exponents: Vec<u32>) -> Self {
        assert_eq!(exponents.len(), group.generators.len());
        let exponents: Vec<u32> = exponents
            .into_iter()
            .zip(&group.generators)
            .map(|(e, &(_, o))| (e as u64 % o) as u32)
            .collect();
        let order = exponents
            .iter()
            .zip(&group.generators)
            .fold(1u64, |acc, (&e, &(_, o))| {
                acc.lcm(&(o / o.gcd(&(e as u64))))
            });
        let mut chi = DirichletChar {
            group: Arc::clone(group),
            exponents,
            order,
            conductor: group.modulus,
        };
        chi.conductor = chi.compute_conductor();
        chi
    }

    pub fn principal(group: &Arc<UnitGroup>) -> Self {
        Self::new(group, vec![0; group.generators.len()])
    }

    fn compute_conductor(&self) -> u64 {
        let m = self.group.modulus;
        numt::divisors(m)
            .into_iter()
            .find(|&f| {
                (0..m / f)
                    .map(|j| 1 + f * j)
                    .filter(|a| a.gcd(&m) == 1)
                    .all(|a| self.eval(a as i64) == Some(0))
            })
            .unwrap_or(m)
    }

    pub fn group(&self) -> &Arc<UnitGroup> {
        &self.group
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    pub fn is_principal(&self) -> bool {
        self.order == 1
    }

    /// `chi(a) = zeta_d^k`, `d = self.order()`; `None` when `gcd(a, m) > 1`.
    pub fn eval(&self, a: i64) -> Option<u64> {
        let log = self.group.log(a)?;
        let lambda = self.group.exponent;
        let v = log
            .iter()
            .zip(&self.exponents)
            .zip(&self.group.generators)
            .fold(0u64, |acc, ((&x, &e), &(_, o))| {
                (acc + x as u64 * e as u64 % o * (lambda / o)) % lambda
            });
        let step = lambda / self.order;
        debug_assert_eq!(v % step, 0);
        Some(v / step)
    }

    /// Value of the primitive character inducing `chi`; defined whenever
    /// `gcd(a, f_chi) = 1`.
    pub fn eval_primitive(&self, a: i64) -> Option<u64> {
        let f = self.conductor;
        let m = self.group.modulus;
        let r = numt::rem(a, f);
        if f > 1 && r.gcd(&f) != 1 {
            return None;
        }
        let lift = (0..m / f.max(1) + 1)
            .map(|k| r + k * f)
            .find(|x| x.gcd(&m) == 1 || m == 1)
            .expect("a unit lift exists");
        self.eval(lift as i64)
    }

    /// `chi(-1)` as `+1` or `-1`.
    pub fn parity(&self) -> i64 {
        match self.eval(-1) {
            Some(0) => 1,
            _ => -1,
        }
    }

    /// The inverse character.
    pub fn conj(&self) -> Self {
        self.pow(-1)
    }

    pub fn pow(&self, r: i64) -> Self {
        let exponents = self
            .exponents
            .iter()
            .zip(&self.group.generators)
            .map(|(&e, &(_, o))| (e as i64 * r).rem_euclid(o as i64) as u32)
            .collect();
        Self::new(&self.group, exponents)
    }

    /// `chi(a)` as an element of `ring`; zero off the units.
    pub fn value_in(&self, a: i64, ring: &Arc<CycloRing>) -> Result<CycloElem> {
        match self.eval(a) {
            None => Ok(CycloElem::zero(ring)),
            Some(k) => CycloElem::root_of_unity(ring, self.order, k as i64).ok_or_else(|| {
                Error::RingTooSmall {
                    conductor: ring.conductor(),
                    what: format!("{}-th roots of unity", self.order),
                }
            }),
        }
    }
}

pub fn unit_group(m: u64) -> Result<Arc<UnitGroup>> {
    UnitGroup::new(m)
}

/// All `phi(m)` characters modulo `m`, principal character first.
pub fn characters(m: u64) -> Result<Vec<DirichletChar>> {
    let group = UnitGroup::new(m)?;
    let orders: Vec<u64> = group.generators.iter().map(|&(_, o)| o).collect();
    let mut exps = vec![0u32; orders.len()];
    let mut out = Vec::with_capacity(group.order() as usize);
    loop {
        out.push(DirichletChar::new(&group, exps.clone()));
        if !advance(&mut exps, orders.iter().copied()) {
            break;
        }
    }
    Ok(out)
}

/// `tau(chi | zeta_m^a) = sum_{s in (Z/mZ)^x} chi(s) zeta_m^(a s)`, by literal
/// summation. `chi` is evaluated through its primitive character, so any `m`
/// divisible by the conductor is accepted.
pub fn gauss_sum_direct(
    chi: &DirichletChar,
    m: u64,
    a: i64,
    ring: &Arc<CycloRing>,
) -> Result<CycloElem> {
    let f = chi.conductor();
    if m == 0 || !m.is_multiple_of(f) {
        return Err(Error::NotADivisor {
            target: f,
            conductor: m,
        });
    }
    let d = chi.order();
    let big = m.lcm(&d);
    let too_small = || Error::RingTooSmall {
        conductor: ring.conductor(),
        what: format!("zeta_{m} and {d}-th roots of unity"),
    };
    if CycloElem::root_of_unity(ring, big, 1).is_none() {
        return Err(too_small());
    }
    let mut acc = CycloElem::zero(ring);
    for s in (0..m).filter(|s| s.gcd(&m) == 1) {
        let k = chi.eval_primitive(s as i64).expect("s is a unit");
        let e = k as i128 * (big / d) as i128 + a as i128 * s as i128 * (big / m) as i128;
        let e = e.rem_euclid(big as i128) as i64;
        let term = CycloElem::root_of_unity(ring, big, e).ok_or_else(too_small)?;
        acc = &acc + &term;
    }
    Ok(acc)
}

/// `tau(chi) = tau(chi | zeta_f)` at the conductor; `tau(chi_0) = 1`.
pub fn gauss_sum(chi: &DirichletChar, ring: &Arc<CycloRing>) -> Result<CycloElem> {
    gauss_sum_direct(chi, chi.conductor(), 1, ring)
}

/// `tau(chi | zeta_m^a)` expressed as a multiple of `tau(chi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaussReduction {
    Zero,
    /// `coeff * zeta_d^twist * tau(chi)`, `d` the order of the character.
    Multiple {
        coeff: BigRational,
        twist: u64,
    },
}

impl GaussReduction {
    /// Evaluate against `tau(chi)` computed in `ring`.
    pub fn materialize(&self, chi: &DirichletChar, ring: &Arc<CycloRing>) -> Result<CycloElem> {
        match self {
            GaussReduction::Zero => Ok(CycloElem::zero(ring)),
            GaussReduction::Multiple { coeff, twist } => {
                let tau = gauss_sum(chi, ring)?;
                let twisted = tau
                    .mul_root_of_unity(chi.order(), *twist as i64)
                    .ok_or_else(|| Error::RingTooSmall {
                        conductor: ring.conductor(),
                        what: format!("{}-th roots of unity", chi.order()),
                    })?;
                Ok(twisted.scale(coeff))
            }
        }
    }
}

/// Write `zeta_m^a = zeta_{m0}^{a0}` with `gcd(a0, m0) = 1`.
pub fn reduce_root(m: u64, a: i64) -> (u64, u64) {
    let a = numt::rem(a, m);
    let g = a.gcd(&m);
    (m / g, a / g)
}

/// Closed-form reduction of `tau(chi | zeta_m^a)` to `tau(chi)`:
/// zero unless `f | m0`, otherwise
/// `phi(m)/phi(m0) * mu(m0/f) * chi(m0/f) * conj(chi)(a0) * tau(chi)`.
pub fn gauss_sum_reduced(chi: &DirichletChar, m: u64, a: i64) -> GaussReduction {
    let (m0, a0) = reduce_root(m, a);
    let f = chi.conductor();
    if m0 % f != 0 {
        return GaussReduction::Zero;
    }
    let q = m0 / f;
    let mu = numt::moebius(q);
    let Some(chi_q) = chi.eval_primitive(q as i64) else {
        return GaussReduction::Zero;
    };
    if mu == 0 {
        return GaussReduction::Zero;
    }
    let chi_a0 = chi.eval_primitive(a0 as i64).expect("a0 is coprime to f");
    let d = chi.order();
    let coeff = BigRational::new(
        (numt::euler_phi(m) as i64 * mu).into(),
        (numt::euler_phi(m0) as i64).into(),
    );
    debug_assert!(!coeff.is_zero());
    GaussReduction::Multiple {
        coeff,
        twist: (chi_q + d - chi_a0) % d,
    }
}
