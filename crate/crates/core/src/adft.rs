//! ADFT matrices `A(k, l) = Tr(theta* zeta_n^(kl))`, the basis change and
//! residual matrices for `n = 2^t`, and Kronecker composition.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::cyclo::CycloElem;
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Perm};
use crate::numt;
use crate::slim;

/// How a matrix was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// From traces of the dual generator.
    Oracle,
    /// From the closed-form entry rule.
    ClosedForm,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Oracle => "oracle",
            Provenance::ClosedForm => "closed_form",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Entries {
    /// All entries in `{-1, 0, 1}`.
    Small(Matrix<i64>),
    Rational(Matrix<BigRational>),
}

#[derive(Debug, Clone)]
pub struct AdftMatrix {
    n: u64,
    entries: Entries,
    provenance: Provenance,
}

impl AdftMatrix {
    /// Build from the trace table `c(s) = Tr(theta* zeta_n^s)`.
    fn from_traces(n: u64, traces: &[BigRational], provenance: Provenance) -> Self {
        let size = n as usize;
        let small = traces
            .iter()
            .all(|v| v.is_integer() && v.numer().magnitude() <= &One::one());
        let entries = if small {
            let ints: Vec<i64> = traces
                .iter()
                .map(|v| i64::try_from(v.to_integer()).expect("small"))
                .collect();
            Entries::Small(Matrix::from_fn(size, size, |k, l| ints[k * l % size]))
        } else {
            Entries::Rational(Matrix::from_fn(size, size, |k, l| {
                traces[k * l % size].clone()
            }))
        };
        AdftMatrix {
            n,
            entries,
            provenance,
        }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn entries(&self) -> &Entries {
        &self.entries
    }

    pub fn get(&self, k: usize, l: usize) -> BigRational {
        match &self.entries {
            Entries::Small(m) => BigRational::from_integer((*m.get(k, l)).into()),
            Entries::Rational(m) => m.get(k, l).clone(),
        }
    }

    /// Integer entries, when the matrix is slim.
    pub fn as_small(&self) -> Option<&Matrix<i64>> {
        match &self.entries {
            Entries::Small(m) => Some(m),
            Entries::Rational(_) => None,
        }
    }

    pub fn is_slim(&self) -> bool {
        matches!(self.entries, Entries::Small(_))
    }

    pub fn to_rational(&self) -> Matrix<BigRational> {
        match &self.entries {
            Entries::Small(m) => m.map(|&v| BigRational::from_integer(v.into())),
            Entries::Rational(m) => m.clone(),
        }
    }

    /// Entrywise equality, ignoring provenance.
    pub fn same_entries(&self, other: &AdftMatrix) -> bool {
        match (&self.entries, &other.entries) {
            (Entries::Small(a), Entries::Small(b)) => a == b,
            _ => self.to_rational() == other.to_rational(),
        }
    }

    /// Dense product `A v`.
    pub fn mul_vec(&self, v: &[BigRational]) -> Result<Vec<BigRational>> {
        let m = match &self.entries {
            Entries::Small(m) => m,
            Entries::Rational(m) => return m.mul_vec(v),
        };
        if v.len() != m.cols() {
            return Err(Error::LengthMismatch {
                expected: m.cols(),
                got: v.len(),
            });
        }
        Ok((0..m.rows())
            .map(|r| {
                let mut acc = BigRational::zero();
                for (&a, x) in m.row(r).iter().zip(v) {
                    match a {
                        1 => acc += x,
                        -1 => acc -= x,
                        _ => {}
                    }
                }
                acc
            })
            .collect())
    }
}

/// `A(k, l) = Tr(theta* zeta_n^(kl))`, computed from the dual generator.
pub fn adft_matrix_oracle(theta: &CycloElem, n: u64) -> Result<AdftMatrix> {
    let traces = slim::dual_trace_values(theta, n)?;
    Ok(AdftMatrix::from_traces(n, &traces, Provenance::Oracle))
}

/// The ADFT matrix of the slim generator, from the closed-form entry rule.
pub fn adft_matrix_slim(n: u64) -> Result<AdftMatrix> {
    numt::factorize(n)?;
    let traces: Vec<BigRational> = slim::entry_table(n)
        .into_iter()
        .map(|v| BigRational::from_integer(v.into()))
        .collect();
    Ok(AdftMatrix::from_traces(n, &traces, Provenance::ClosedForm))
}

/// `t` with `n = 2^t`, requiring `n >= min`.
pub(crate) fn log2_exact(n: u64, min: u64) -> Result<u32> {
    if n < min || !n.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(n, min));
    }
    Ok(n.trailing_zeros())
}

/// The Galois representatives indexing the columns of the basis change
/// matrix: odd `a` in ascending order.
pub fn galois_columns(n: u64) -> Vec<u64> {
    (1..n).step_by(2).collect()
}

/// `N(l, a) = Tr(theta*^a zeta_n^l)` for `l` in `[0, n/2)` and odd `a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChangeMatrix {
    pub n: u64,
    pub galois: Vec<u64>,
    pub matrix: Matrix<i64>,
}

pub fn basis_change_matrix(n: u64) -> Result<BasisChangeMatrix> {
    log2_exact(n, 4)?;
    let table = slim::entry_table(n);
    let galois = galois_columns(n);
    let inverses: Vec<u64> = galois
        .iter()
        .map(|&a| numt::inv_mod(a as i64, n))
        .collect::<Result<_>>()?;
    let half = (n / 2) as usize;
    let matrix = Matrix::from_fn(half, half, |l, j| {
        table[(l as u64 * inverses[j] % n) as usize]
    });
    Ok(BasisChangeMatrix { n, galois, matrix })
}

/// Odd `l, s` in `[1, n/2)`, entry `Tr(theta* zeta_n^(l s^-1))`, built from a
/// trace table `c(s)` of length `n`.
pub fn residual_from_traces<T: Clone + num_traits::Num>(n: u64, traces: &[T]) -> Result<Matrix<T>> {
    log2_exact(n, 4)?;
    let odds: Vec<u64> = (1..n / 2).step_by(2).collect();
    let inverses: Vec<u64> = odds
        .iter()
        .map(|&s| numt::inv_mod(s as i64, n))
        .collect::<Result<_>>()?;
    Ok(Matrix::from_fn(odds.len(), odds.len(), |i, j| {
        traces[(odds[i] * inverses[j] % n) as usize].clone()
    }))
}

/// The residual matrix of the slim generator.
pub fn residual_matrix(n: u64) -> Result<Matrix<i64>> {
    log2_exact(n, 4)?;
    residual_from_traces(n, &slim::entry_table(n))
}

/// `A ⊗ B = (a_kl B)`.
pub fn kronecker<T: Clone + num_traits::Num>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    a.kronecker(b)
}

/// Row and column permutations `(P, Q)` with
/// `P.permute_rows(Q.permute_cols(A_{n1} ⊗ A_{n2})) = A_{n1 n2}`
/// for the slim generators.
///
/// Row `k` comes from `(k mod n1, k mod n2)`; column `l` from
/// `(l t1 mod n1, l t2 mod n2)` with `t1 = n2^-1 mod n1`, `t2 = n1^-1 mod n2`.
pub fn kronecker_equivalence(n1: u64, n2: u64) -> Result<(Perm, Perm)> {
    if n1.gcd(&n2) != 1 {
        return Err(Error::NotCoprime {
            a: n1 as i64,
            m: n2 as i64,
        });
    }
    let (s1, s2) = numt::crt_coefficients(n1, n2)?;
    let t1 = numt::rem(s2, n1);
    let t2 = numt::rem(s1, n2);
    let n = n1 * n2;
    let rows = (0..n).map(|k| ((k % n1) * n2 + k % n2) as usize).collect();
    let cols = (0..n)
        .map(|l| ((l * t1 % n1) * n2 + l * t2 % n2) as usize)
        .collect();
    Ok((Perm::new(rows)?, Perm::new(cols)?))
}

/// Apply an equivalence pair as returned by [`kronecker_equivalence`].
pub fn apply_equivalence<T: Clone + num_traits::Num>(
    p: &Perm,
    q: &Perm,
    m: &Matrix<T>,
) -> Matrix<T> {
    p.permute_rows(&q.permute_cols(m))
}

/// Rational vector product with the ADFT matrix via traces: entry `k` is
/// `Tr(theta* sum_l c_l zeta_n^(kl))`.
pub fn transform_by_traces(theta: &CycloElem, c: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = theta.conductor();
    if c.len() as u64 != n {
        return Err(Error::LengthMismatch {
            expected: n as usize,
            got: c.len(),
        });
    }
    let dual = theta.dual_nbg()?;
    let ring = theta.ring();
    Ok((0..n as i64)
        .map(|k| {
            let mut hat = CycloElem::zero(ring);
            for (l, cl) in c.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                hat = &hat + &CycloElem::zeta_power(ring, k * l as i64).scale(cl);
            }
            (&dual * &hat).trace()
        })
        .collect())
}
