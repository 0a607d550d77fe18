//! Character coordinates of elements of `Q(zeta_n)`.
//!
//! Every `theta` in `Q(zeta_n)` has a unique expansion
//! `theta = 1/phi(n) * sum_chi y(chi|theta) tau(chi)` over the Dirichlet
//! characters modulo `n`, with `y(chi|theta)` in `Q(chi)` and
//! `y(chi^r|theta) = y(chi|theta)^r`. This module converts between elements
//! and coordinates, and expresses duality, traces and roots of unity in
//! coordinates.
//!
//! All coordinate arithmetic happens in one working ring `Q(zeta_W)` with
//! `W = lcm(n, lambda(n))`, which holds every character value and every Gauss
//! sum `tau(chi)` at once.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_rational::BigRational;

use crate::chars::{self, DirichletChar, GaussReduction};
use crate::cyclo::{CycloElem, CycloRing, GaloisIndex};
use crate::error::{Error, Result};
use crate::numt;

/// Characters modulo `n` together with their Gauss sums in the working ring.
pub struct CoordFrame {
    n: u64,
    chars: Vec<DirichletChar>,
    conj_index: Vec<usize>,
    index: HashMap<Vec<u32>, usize>,
    field: Arc<CycloRing>,
    work: Arc<CycloRing>,
    gauss: Vec<CycloElem>,
}

impl std::fmt::Debug for CoordFrame {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CoordFrame")
            .field("n", &self.n)
            .field("working_conductor", &self.work.conductor())
            .finish()
    }
}

fn frame_cache() -> &'static Mutex<HashMap<u64, Arc<CoordFrame>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<CoordFrame>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `lcm(n, lambda(n))`.
pub fn working_conductor(n: u64) -> u64 {
    n.lcm(&numt::carmichael_lambda(n))
}

impl CoordFrame {
    pub fn new(n: u64) -> Result<Arc<CoordFrame>> {
        if let Some(f) = frame_cache().lock().unwrap().get(&n) {
            return Ok(Arc::clone(f));
        }
        let field = CycloRing::new(n)?;
        let work = CycloRing::new(working_conductor(n))?;
        let chars = chars::characters(n)?;
        let index: HashMap<Vec<u32>, usize> = chars
            .iter()
            .enumerate()
            .map(|(i, c)| (c.exponents().to_vec(), i))
            .collect();
        let conj_index = chars.iter().map(|c| index[c.conj().exponents()]).collect();
        let gauss = chars
            .iter()
            .map(|c| chars::gauss_sum(c, &work))
            .collect::<Result<Vec<_>>>()?;
        let frame = Arc::new(CoordFrame {
            n,
            chars,
            conj_index,
            index,
            field,
            work,
            gauss,
        });
        Ok(Arc::clone(
            frame_cache().lock().unwrap().entry(n).or_insert(frame),
        ))
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn characters(&self) -> &[DirichletChar] {
        &self.chars
    }

    /// Position of `conj(chi_i)` in [`Self::characters`].
    pub fn conj_index(&self, i: usize) -> usize {
        self.conj_index[i]
    }

    pub fn index_of(&self, chi: &DirichletChar) -> Option<usize> {
        if chi.modulus() != self.n {
            return None;
        }
        self.index.get(chi.exponents()).copied()
    }

    /// `Q(zeta_n)`.
    pub fn field(&self) -> &Arc<CycloRing> {
        &self.field
    }

    /// The working ring `Q(zeta_W)`.
    pub fn work(&self) -> &Arc<CycloRing> {
        &self.work
    }

    /// `tau(chi_i)` in the working ring.
    pub fn gauss_sum(&self, i: usize) -> &CycloElem {
        &self.gauss[i]
    }

    fn group_order(&self) -> BigRational {
        BigRational::from_integer((self.chars.len() as i64).into())
    }

    /// `chi_i(a)` in the working ring (zero off the units).
    pub fn char_value(&self, i: usize, a: i64) -> CycloElem {
        self.chars[i]
            .value_in(a, &self.work)
            .expect("working ring holds all character values")
    }

    fn times_char_value(&self, x: &CycloElem, i: usize, a: i64) -> CycloElem {
        let chi = &self.chars[i];
        match chi.eval(a) {
            None => CycloElem::zero(&self.work),
            Some(k) => x
                .mul_root_of_unity(chi.order(), k as i64)
                .expect("working ring holds all character values"),
        }
    }

    /// Bring an element of `Q(zeta_n)` (given in any compatible ring) into
    /// the ring of conductor `n`.
    fn to_field(&self, theta: &CycloElem) -> Result<CycloElem> {
        let c = theta.conductor();
        if c == self.n {
            Ok(theta.clone())
        } else if self.n.is_multiple_of(c) {
            theta.lift(self.n)
        } else if c.is_multiple_of(self.n) {
            theta.restrict(self.n)
        } else {
            Err(Error::RingTooSmall {
                conductor: c,
                what: format!("a common field with Q(zeta_{})", self.n),
            })
        }
    }
}

/// One coordinate value. The first four variants are the closed-form
/// constants used by slim generators; anything else is an explicit element
/// of the working ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoordValue {
    One,
    MinusOne,
    Half,
    /// `1/p * sum_{i=1}^{p-1} (i/p) conj(chi)(1 + i p^(s-1))`.
    QuadSum {
        p: u64,
        s: u32,
    },
    Explicit(CycloElem),
}

/// The coordinate map `chi -> y(chi|theta)` for all characters modulo `n`.
#[derive(Clone)]
pub struct ChiCoords {
    frame: Arc<CoordFrame>,
    values: Vec<CoordValue>,
}

impl std::fmt::Debug for ChiCoords {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut m = f.debug_map();
        for (chi, v) in self.frame.chars.iter().zip(&self.values) {
            m.entry(chi, v);
        }
        m.finish()
    }
}

impl PartialEq for ChiCoords {
    fn eq(&self, other: &Self) -> bool {
        self.frame.n == other.frame.n && self.materialized() == other.materialized()
    }
}

impl ChiCoords {
    pub fn new(frame: &Arc<CoordFrame>, values: Vec<CoordValue>) -> Result<Self> {
        if values.len() != frame.chars.len() {
            return Err(Error::LengthMismatch {
                expected: frame.chars.len(),
                got: values.len(),
            });
        }
        for v in &values {
            if let CoordValue::Explicit(e) = v {
                if e.conductor() != frame.work.conductor() {
                    return Err(Error::RingMismatch(e.conductor(), frame.work.conductor()));
                }
            }
        }
        Ok(ChiCoords {
            frame: Arc::clone(frame),
            values,
        })
    }

    pub fn frame(&self) -> &Arc<CoordFrame> {
        &self.frame
    }

    pub fn modulus(&self) -> u64 {
        self.frame.n
    }

    pub fn values(&self) -> &[CoordValue] {
        &self.values
    }

    /// The value attached to `chi`.
    pub fn get(&self, chi: &DirichletChar) -> Option<&CoordValue> {
        self.frame.index_of(chi).map(|i| &self.values[i])
    }

    /// Coordinate `i` as an element of the working ring.
    pub fn value_elem(&self, i: usize) -> CycloElem {
        materialize(&self.frame, i, &self.values[i])
    }

    pub fn materialized(&self) -> Vec<CycloElem> {
        (0..self.values.len()).map(|i| self.value_elem(i)).collect()
    }
}

fn rational(ring: &Arc<CycloRing>, n: i64, d: i64) -> CycloElem {
    CycloElem::from_rational(ring, BigRational::new(n.into(), d.into()))
}

fn materialize(frame: &CoordFrame, i: usize, v: &CoordValue) -> CycloElem {
    let work = &frame.work;
    match v {
        CoordValue::One => CycloElem::one(work),
        CoordValue::MinusOne => rational(work, -1, 1),
        CoordValue::Half => rational(work, 1, 2),
        CoordValue::Explicit(e) => e.clone(),
        CoordValue::QuadSum { p, s } => {
            let chi = &frame.chars[i];
            let pk = p.pow(s - 1) as i64;
            let mut acc = CycloElem::zero(work);
            for j in 1..*p as i64 {
                let sym = numt::legendre(j, *p as i64).expect("odd prime");
                let k = chi.eval(1 + j * pk).expect("1 + j p^(s-1) is a unit");
                let term = CycloElem::root_of_unity(work, chi.order(), -(k as i64))
                    .expect("working ring holds all character values");
                acc = if sym > 0 { &acc + &term } else { &acc - &term };
            }
            acc.scale(&BigRational::new(1.into(), (*p as i64).into()))
        }
    }
}

/// `y(chi|theta) = 1/f_chi * sum_sigma chi(sigma) theta^sigma * conj(tau(chi))`.
pub fn chi_coords(theta: &CycloElem, n: u64) -> Result<ChiCoords> {
    let frame = CoordFrame::new(n)?;
    chi_coords_in(&frame, theta)
}

pub fn chi_coords_in(frame: &Arc<CoordFrame>, theta: &CycloElem) -> Result<ChiCoords> {
    let theta = frame.to_field(theta)?;
    let w = frame.work.conductor();
    let conjugates: Vec<(u64, CycloElem)> = frame
        .field
        .galois_group()
        .iter()
        .map(|&a| Ok((a, theta.galois_unchecked(a).lift(w)?)))
        .collect::<Result<_>>()?;

    let values = (0..frame.chars.len())
        .map(|i| {
            let mut acc = CycloElem::zero(&frame.work);
            for (a, conj) in &conjugates {
                acc = &acc + &frame.times_char_value(conj, i, *a as i64);
            }
            let f = frame.chars[i].conductor() as i64;
            let y = (&acc * &frame.gauss[i].conj()).scale(&BigRational::new(1.into(), f.into()));
            CoordValue::Explicit(y)
        })
        .collect();
    ChiCoords::new(frame, values)
}

/// Check `y(chi) in Q(chi)` and `y(chi^r) = y(chi)^r` for every coordinate
/// that is not a closed-form constant.
pub fn check_conjugation_consistency(coords: &ChiCoords) -> Result<()> {
    let frame = &coords.frame;
    let w = frame.work.conductor();
    for (i, chi) in frame.chars.iter().enumerate() {
        let d = chi.order();
        let explicit_here = matches!(coords.values[i], CoordValue::Explicit(_));
        let y = coords.value_elem(i);
        if explicit_here && y.restrict(d).is_err() {
            return Err(Error::InconsistentCoords(format!(
                "y({chi:?}) is not in Q(zeta_{d})"
            )));
        }
        for r in (2..d).filter(|r| r.gcd(&d) == 1) {
            let j = frame.index[chi.pow(r as i64).exponents()];
            let explicit_there = matches!(coords.values[j], CoordValue::Explicit(_));
            let consistent = if explicit_here || explicit_there {
                let a = GaloisIndex::new(r as i64, d)?.lift(w)?;
                y.galois_unchecked(a) == coords.value_elem(j)
            } else {
                coords.values[i] == coords.values[j]
            };
            if !consistent {
                return Err(Error::InconsistentCoords(format!(
                    "y(chi^{r}) != y(chi)^{r} for {chi:?}"
                )));
            }
        }
    }
    Ok(())
}

/// `theta = 1/phi(n) * sum_chi y(chi) tau(chi)`, returned in `Q(zeta_n)`.
pub fn synthesize(coords: &ChiCoords) -> Result<CycloElem> {
    check_conjugation_consistency(coords)?;
    synthesize_unchecked(coords)
}

/// [`synthesize`], embedded into `ring`. The ring must contain `Q(zeta_n)`
/// and every character value.
pub fn synthesize_into(coords: &ChiCoords, ring: &Arc<CycloRing>) -> Result<CycloElem> {
    let n = coords.frame.n;
    let need = n.lcm(&numt::carmichael_lambda(n));
    if !ring.conductor().is_multiple_of(need) {
        return Err(Error::RingTooSmall {
            conductor: ring.conductor(),
            what: format!("Q(zeta_{n}) and its character values"),
        });
    }
    synthesize(coords)?.lift(ring.conductor())
}

/// [`synthesize`] without the conjugation check; still fails if the sum
/// leaves `Q(zeta_n)`.
pub fn synthesize_unchecked(coords: &ChiCoords) -> Result<CycloElem> {
    let frame = &coords.frame;
    let mut acc = CycloElem::zero(&frame.work);
    for (i, v) in coords.values.iter().enumerate() {
        let tau = &frame.gauss[i];
        let term = match v {
            CoordValue::One => tau.clone(),
            CoordValue::MinusOne => -tau,
            CoordValue::Half => tau.scale(&BigRational::new(1.into(), 2.into())),
            _ => &coords.value_elem(i) * tau,
        };
        acc = &acc + &term;
    }
    let acc = acc.scale(&frame.group_order().recip());
    acc.restrict(frame.n).map_err(|e| match e {
        Error::NotInSubfield(_) => {
            Error::InconsistentCoords(format!("sum does not lie in Q(zeta_{})", frame.n))
        }
        e => e,
    })
}

/// Coordinates of `theta^sigma`: `y(chi|theta^a) = conj(chi)(a) y(chi|theta)`.
pub fn coords_of_conjugate(coords: &ChiCoords, a: GaloisIndex) -> Result<ChiCoords> {
    let frame = &coords.frame;
    if a.modulus() != frame.n {
        return Err(Error::ModulusMismatch(a.modulus(), frame.n));
    }
    let a = a.value() as i64;
    let values = coords
        .values
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let chi = &frame.chars[i];
            match chi.eval(a) {
                Some(0) => v.clone(),
                Some(k) if 2 * k == chi.order() => match v {
                    CoordValue::One => CoordValue::MinusOne,
                    CoordValue::MinusOne => CoordValue::One,
                    _ => CoordValue::Explicit(-coords.value_elem(i)),
                },
                Some(k) => CoordValue::Explicit(
                    coords
                        .value_elem(i)
                        .mul_root_of_unity(chi.order(), -(k as i64))
                        .expect("working ring holds all character values"),
                ),
                None => unreachable!("a is a unit"),
            }
        })
        .collect();
    ChiCoords::new(frame, values)
}

/// Every coordinate is nonzero, i.e. the element generates a normal basis.
pub fn is_nbg(coords: &ChiCoords) -> bool {
    coords.values.iter().all(|v| match v {
        CoordValue::Explicit(e) => !e.is_zero(),
        _ => true,
    })
}

/// Coordinates of the dual generator:
/// `y(chi|theta*) = chi(-1) / (f_chi * y(conj chi|theta))`.
pub fn dual_coords(coords: &ChiCoords) -> Result<ChiCoords> {
    let frame = &coords.frame;
    let work = &frame.work;
    let values = frame
        .chars
        .iter()
        .enumerate()
        .map(|(i, chi)| {
            let j = frame.conj_index[i];
            let scale = chi.parity() * chi.conductor() as i64;
            let inv = match &coords.values[j] {
                CoordValue::One => rational(work, 1, scale),
                CoordValue::MinusOne => rational(work, -1, scale),
                CoordValue::Half => rational(work, 2, scale),
                other => {
                    let y = materialize(frame, j, other);
                    if y.is_zero() {
                        return Err(Error::NotNormalBasis(format!(
                            "coordinate at {:?} vanishes",
                            frame.chars[j]
                        )));
                    }
                    invert_in_value_field(&y, chi.order())?
                        .scale(&BigRational::new(1.into(), scale.into()))
                }
            };
            Ok(CoordValue::Explicit(inv))
        })
        .collect::<Result<Vec<_>>>()?;
    ChiCoords::new(frame, values)
}

/// Invert `y`, using the small field `Q(zeta_d)` when `y` lies in it.
fn invert_in_value_field(y: &CycloElem, d: u64) -> Result<CycloElem> {
    match y.restrict(d) {
        Ok(small) => small.inverse()?.lift(y.conductor()),
        Err(Error::NotInSubfield(_)) => y.inverse(),
        Err(e) => Err(e),
    }
}

/// `Tr(alpha^sigma beta^rho) =
///  1/|G| sum_chi y(chi|alpha) y(conj chi|beta) conj(chi)(sigma) chi(rho) chi(-1) f_chi`.
pub fn trace_pairing(
    ca: &ChiCoords,
    cb: &ChiCoords,
    sigma: GaloisIndex,
    rho: GaloisIndex,
) -> Result<BigRational> {
    let frame = &ca.frame;
    if cb.frame.n != frame.n {
        return Err(Error::ModulusMismatch(frame.n, cb.frame.n));
    }
    for g in [sigma, rho] {
        if g.modulus() != frame.n {
            return Err(Error::ModulusMismatch(g.modulus(), frame.n));
        }
    }
    let mut acc = CycloElem::zero(&frame.work);
    for (i, chi) in frame.chars.iter().enumerate() {
        let j = frame.conj_index[i];
        let prod = &ca.value_elem(i) * &cb.value_elem(j);
        if prod.is_zero() {
            continue;
        }
        let k_sigma = chi.eval(sigma.value() as i64).expect("unit");
        let k_rho = chi.eval(rho.value() as i64).expect("unit");
        let term = prod
            .mul_root_of_unity(chi.order(), k_rho as i64 - k_sigma as i64)
            .expect("working ring holds all character values")
            .scale(&BigRational::from_integer(
                (chi.parity() * chi.conductor() as i64).into(),
            ));
        acc = &acc + &term;
    }
    acc.as_rational()
        .map(|q| q / frame.group_order())
        .ok_or_else(|| Error::InconsistentCoords("trace pairing is not rational".into()))
}

/// Closed-form coordinates of `zeta_n^s`: writing `zeta_n^s = zeta_{n0}^{a0}`,
/// `y(chi) = phi(n)/phi(n0) mu(n0/f) chi(n0/f) conj(chi)(a0)` when `f | n0`,
/// else zero. Entries are aligned with [`CoordFrame::characters`].
pub fn root_coords(n: u64, s: i64) -> Result<Vec<GaussReduction>> {
    let frame = CoordFrame::new(n)?;
    Ok(frame
        .chars
        .iter()
        .map(|chi| chars::gauss_sum_reduced(chi, n, s))
        .collect())
}

/// [`root_coords`] as explicit [`ChiCoords`].
pub fn root_chi_coords(n: u64, s: i64) -> Result<ChiCoords> {
    let frame = CoordFrame::new(n)?;
    let values = root_coords(n, s)?
        .into_iter()
        .zip(&frame.chars)
        .map(|(r, chi)| match r {
            GaussReduction::Zero => CoordValue::Explicit(CycloElem::zero(&frame.work)),
            GaussReduction::Multiple { coeff, twist } => CoordValue::Explicit(
                CycloElem::root_of_unity(&frame.work, chi.order(), twist as i64)
                    .expect("working ring holds all character values")
                    .scale(&coeff),
            ),
        })
        .collect();
    ChiCoords::new(&frame, values)
}

/// Explicit coordinates from rationals, one per character.
pub fn rational_coords(frame: &Arc<CoordFrame>, values: &[BigRational]) -> Result<ChiCoords> {
    ChiCoords::new(
        frame,
        values
            .iter()
            .map(|q| CoordValue::Explicit(CycloElem::from_rational(&frame.work, q.clone())))
            .collect(),
    )
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

    fn theta4() -> CycloElem {
        CycloElem::from_int_coeffs(&ring(4), &[1, 1], 2).unwrap()
    }

    fn rationals(c: &ChiCoords) -> Vec<BigRational> {
        c.materialized()
            .iter()
            .map(|e| e.as_rational().expect("rational coordinate"))
            .collect()
    }

    #[test]
    fn coordinates_of_one() {
        let c = chi_coords(&CycloElem::one(&ring(4)), 4).unwrap();
        assert_eq!(rationals(&c), vec![q(2, 1), q(0, 1)]);
        assert_eq!(synthesize(&c).unwrap(), CycloElem::one(&ring(4)));
    }

    #[test]
    fn coordinates_of_theta4() {
        let c = chi_coords(&theta4(), 4).unwrap();
        assert_eq!(rationals(&c), vec![q(1, 1), q(1, 2)]);
        assert!(is_nbg(&c));
        assert_eq!(synthesize(&c).unwrap(), theta4());
    }

    #[test]
    fn coordinates_of_zeta4() {
        let c = chi_coords(&CycloElem::zeta_power(&ring(4), 1), 4).unwrap();
        assert!(c.value_elem(0).is_zero());
        assert!(!is_nbg(&c));
    }

    #[test]
    fn synthesize_examples() {
        let frame = CoordFrame::new(4).unwrap();
        let zero = rational_coords(&frame, &[q(0, 1), q(0, 1)]).unwrap();
        assert!(synthesize(&zero).unwrap().is_zero());
        let principal = rational_coords(&frame, &[q(1, 1), q(0, 1)]).unwrap();
        assert_eq!(
            synthesize(&principal).unwrap(),
            CycloElem::from_rational(&ring(4), q(1, 2))
        );
        let tagged = ChiCoords::new(&frame, vec![CoordValue::One, CoordValue::Half]).unwrap();
        assert_eq!(synthesize(&tagged).unwrap(), theta4());
    }

    #[test]
    fn synthesize_rejects_inconsistent() {
        // a coordinate outside Q(chi): y(chi_0) must be rational
        let frame = CoordFrame::new(5).unwrap();
        let mut values = vec![CoordValue::One; 4];
        values[0] = CoordValue::Explicit(CycloElem::zeta_power(frame.work(), 1));
        let c = ChiCoords::new(&frame, values).unwrap();
        assert!(matches!(synthesize(&c), Err(Error::InconsistentCoords(_))));
    }

    #[test]
    fn conjugate_coords() {
        let c = chi_coords(&theta4(), 4).unwrap();
        let id = coords_of_conjugate(&c, GaloisIndex::new(1, 4).unwrap()).unwrap();
        assert_eq!(id, c);
        let three = GaloisIndex::new(3, 4).unwrap();
        let cc = coords_of_conjugate(&c, three).unwrap();
        let expect = CycloElem::from_int_coeffs(&ring(4), &[1, -1], 2).unwrap();
        assert_eq!(synthesize(&cc).unwrap(), expect);
        let back = coords_of_conjugate(&cc, three.inverse()).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn dual_examples() {
        let c = chi_coords(&theta4(), 4).unwrap();
        let d = dual_coords(&c).unwrap();
        assert_eq!(rationals(&d), vec![q(1, 1), q(-1, 2)]);
        assert_eq!(
            synthesize(&d).unwrap(),
            CycloElem::from_int_coeffs(&ring(4), &[1, -1], 2).unwrap()
        );
        assert_eq!(dual_coords(&d).unwrap(), c);
        let zeta = chi_coords(&CycloElem::zeta_power(&ring(4), 1), 4).unwrap();
        assert!(matches!(dual_coords(&zeta), Err(Error::NotNormalBasis(_))));
    }

    #[test]
    fn pairing_examples() {
        let g = |a| GaloisIndex::new(a, 4).unwrap();
        let one = chi_coords(&CycloElem::one(&ring(4)), 4).unwrap();
        for (s, r) in [(1, 1), (1, 3), (3, 3)] {
            assert_eq!(trace_pairing(&one, &one, g(s), g(r)).unwrap(), q(2, 1));
        }
        let c = chi_coords(&theta4(), 4).unwrap();
        let d = dual_coords(&c).unwrap();
        assert_eq!(trace_pairing(&c, &d, g(1), g(1)).unwrap(), q(1, 1));
        assert_eq!(trace_pairing(&c, &d, g(3), g(3)).unwrap(), q(1, 1));
        assert_eq!(trace_pairing(&c, &d, g(1), g(3)).unwrap(), q(0, 1));
        let other = chi_coords(&CycloElem::one(&ring(8)), 8).unwrap();
        assert!(trace_pairing(&c, &other, g(1), g(1)).is_err());
    }

    #[test]
    fn root_coords_examples() {
        let rc = |n, s| -> Vec<BigRational> {
            let c = root_chi_coords(n, s).unwrap();
            rationals(&c)
        };
        assert_eq!(rc(4, 0), vec![q(2, 1), q(0, 1)]);
        assert_eq!(rc(4, 1), vec![q(0, 1), q(1, 1)]);
        assert_eq!(rc(4, 2), vec![q(-2, 1), q(0, 1)]);
        for s in 0..4 {
            let direct = chi_coords(&CycloElem::zeta_power(&ring(4), s), 4).unwrap();
            assert_eq!(root_chi_coords(4, s).unwrap(), direct);
        }
    }
}
