//! Addition-only evaluation of the slim ADFT for `n = 2^t`.
//!
//! With the columns of `A_n` reordered (evens, then inverses of odds),
//! `A_n` splits as `(A_2 ⊗ E_{n/2}) diag(A_{n/2}, N_n)`. With the rows of the
//! basis change matrix `N_n` reordered (evens, then odds),
//! `N_n = diag(N_{n/2}, E_{n/4}) (A_2 ⊗ E_{n/4})`. Unrolling both gives a
//! schedule of butterflies `(a, b) -> (a + b, a - b)`.

use std::ops::{Add, Sub};

use num_traits::Num;

use crate::adft::{self, log2_exact};
use crate::error::{Error, Result};
use crate::matrix::{Matrix, Perm};
use crate::numt;

/// Largest supported `t`.
pub const MAX_LOG2: u32 = 20;

/// Slot order of the columns of `A_n`: slot `j < n/2` holds column `2j`,
/// slot `n/2 + j` holds column `(2j + 1)^-1 mod n`.
pub fn column_permutation(n: u64) -> Result<Perm> {
    log2_exact(n, 4)?;
    Ok(column_order(n))
}

fn column_order(n: u64) -> Perm {
    let half = n / 2;
    let image = (0..n)
        .map(|slot| {
            if slot < half {
                (2 * slot) as usize
            } else {
                let odd = 2 * (slot - half) + 1;
                numt::inv_mod(odd as i64, n).expect("odd is a unit") as usize
            }
        })
        .collect();
    Perm::new(image).expect("bijection")
}

/// Row order of `N_n`: even rows first, then odd rows.
pub fn row_permutation_n(n: u64) -> Result<Perm> {
    log2_exact(n, 4)?;
    let half = (n / 2) as usize;
    Perm::new((0..half).step_by(2).chain((1..half).step_by(2)).collect())
}

/// `dst_hi <- a + b`, then `dst_lo <- a - b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Butterfly {
    pub dst_hi: usize,
    pub dst_lo: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StageKind {
    /// `(A_2 ⊗ E_{n/2})` joining the even-column and odd-column halves.
    Combine { n: u64 },
    /// `(A_2 ⊗ E_{n/4})` inside the basis change `N_n`.
    BasisSplit { n: u64 },
}

/// Butterflies with pairwise disjoint inputs.
#[derive(Debug, Clone)]
pub struct Stage {
    pub kind: StageKind,
    pub butterflies: Vec<Butterfly>,
}

/// Permutations used at one recursion level.
#[derive(Debug, Clone)]
pub struct Level {
    pub n: u64,
    pub column_perm: Perm,
    pub row_perm_n: Perm,
}

/// What a plan computes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlanKind {
    /// `A_n x`, vectors of length `n`.
    Adft,
    /// `N_n x`, vectors of length `n/2`.
    BasisChange,
}

/// A straight-line schedule over a buffer of twice the vector length.
///
/// The input occupies slots `[0, len)`; output `i` is read from
/// `output_slots[i]`.
#[derive(Debug, Clone)]
pub struct TransformPlan {
    t: u32,
    kind: PlanKind,
    n: usize,
    column_perm: Perm,
    levels: Vec<Level>,
    stages: Vec<Stage>,
    output_slots: Vec<usize>,
    basis_change_count: u64,
}

impl TransformPlan {
    /// `log2` of the transform size.
    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn kind(&self) -> PlanKind {
        self.kind
    }

    /// Input and output length.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slots(&self) -> usize {
        2 * self.n
    }

    /// The top-level column order (identity for a basis change plan).
    pub fn column_perm(&self) -> &Perm {
        &self.column_perm
    }

    pub fn levels(&self) -> &[Level] {
        &self.levels
    }

    pub fn stages(&self) -> &[Stage] {
        &self.stages
    }

    pub fn butterflies(&self) -> impl Iterator<Item = &Butterfly> {
        self.stages.iter().flat_map(|s| s.butterflies.iter())
    }

    pub fn output_slots(&self) -> &[usize] {
        &self.output_slots
    }

    /// Additions and subtractions in the schedule.
    pub fn addition_count(&self) -> u64 {
        2 * self.butterflies().count() as u64
    }

    /// The part of [`Self::addition_count`] spent on the top-level `N_n`
    /// (all of it for a basis change plan).
    pub fn basis_change_count(&self) -> u64 {
        self.basis_change_count
    }
}

struct Builder {
    free: Vec<usize>,
    stages: Vec<Stage>,
}

impl Builder {
    fn fly(&mut self, stage: &mut Vec<Butterfly>, a: usize, b: usize) -> (usize, usize) {
        let hi = self.free.pop().expect("buffer of 2n slots suffices");
        stage.push(Butterfly {
            dst_hi: hi,
            dst_lo: b,
            a,
            b,
        });
        self.free.push(a);
        (hi, b)
    }

    /// Slots holding `A_n x`, where `xs[l]` holds `x_l`.
    fn transform(&mut self, xs: &[usize]) -> Vec<usize> {
        let n = xs.len();
        if n == 1 {
            return xs.to_vec();
        }
        let half = n / 2;
        let order = column_order(n as u64);
        let slots = order.gather(xs);
        let p = self.transform(&slots[..half]);
        let q = self.basis_change(&slots[half..]);
        let mut stage = Vec::with_capacity(half);
        let mut out = vec![0; n];
        for k in 0..half {
            let (hi, lo) = self.fly(&mut stage, p[k], q[k]);
            out[k] = hi;
            out[k + half] = lo;
        }
        self.stages.push(Stage {
            kind: StageKind::Combine { n: n as u64 },
            butterflies: stage,
        });
        out
    }

    /// Slots holding `N_n x`, where `xs[j]` is the input for the Galois
    /// column `2j + 1`; `xs.len() = n/2`.
    fn basis_change(&mut self, xs: &[usize]) -> Vec<usize> {
        let m = xs.len();
        if m == 1 {
            return xs.to_vec();
        }
        let quarter = m / 2;
        let mut stage = Vec::with_capacity(quarter);
        let mut sums = Vec::with_capacity(quarter);
        let mut diffs = Vec::with_capacity(quarter);
        for i in 0..quarter {
            let (hi, lo) = self.fly(&mut stage, xs[i], xs[i + quarter]);
            sums.push(hi);
            diffs.push(lo);
        }
        self.stages.push(Stage {
            kind: StageKind::BasisSplit { n: 2 * m as u64 },
            butterflies: stage,
        });
        let even = self.basis_change(&sums);
        let mut out = vec![0; m];
        for i in 0..quarter {
            out[2 * i] = even[i];
            out[2 * i + 1] = diffs[i];
        }
        out
    }

    fn count(&self) -> u64 {
        self.stages
            .iter()
            .map(|s| 2 * s.butterflies.len() as u64)
            .sum()
    }
}

pub fn plan(t: u32) -> Result<TransformPlan> {
    if t == 0 || t > MAX_LOG2 {
        return Err(Error::OutOfRange {
            value: t as u64,
            bound: MAX_LOG2 as u64,
        });
    }
    let n = 1usize << t;
    let mut b = Builder {
        free: (n..2 * n).rev().collect(),
        stages: Vec::new(),
    };
    let inputs: Vec<usize> = (0..n).collect();

    // top level split by hand so the basis change share can be measured
    let order = column_order(n as u64);
    let slots = order.gather(&inputs);
    let p = b.transform(&slots[..n / 2]);
    let before = b.count();
    let q = b.basis_change(&slots[n / 2..]);
    let basis_change_count = b.count() - before;
    let mut stage = Vec::with_capacity(n / 2);
    let mut output_slots = vec![0; n];
    for k in 0..n / 2 {
        let (hi, lo) = b.fly(&mut stage, p[k], q[k]);
        output_slots[k] = hi;
        output_slots[k + n / 2] = lo;
    }
    b.stages.push(Stage {
        kind: StageKind::Combine { n: n as u64 },
        butterflies: stage,
    });

    let levels = (2..=t)
        .rev()
        .map(|s| {
            let m = 1u64 << s;
            Level {
                n: m,
                column_perm: column_order(m),
                row_perm_n: row_permutation_n(m).expect("m >= 4"),
            }
        })
        .collect();
    Ok(TransformPlan {
        t,
        kind: PlanKind::Adft,
        n,
        column_perm: order,
        levels,
        stages: b.stages,
        output_slots,
        basis_change_count,
    })
}

/// Schedule for `N_n x` alone, `n = 2^t`, `t >= 2`.
pub fn basis_change_plan(t: u32) -> Result<TransformPlan> {
    if !(2..=MAX_LOG2).contains(&t) {
        return Err(Error::OutOfRange {
            value: t as u64,
            bound: MAX_LOG2 as u64,
        });
    }
    let len = 1usize << (t - 1);
    let mut b = Builder {
        free: (len..2 * len).rev().collect(),
        stages: Vec::new(),
    };
    let inputs: Vec<usize> = (0..len).collect();
    let output_slots = b.basis_change(&inputs);
    let count = b.count();
    Ok(TransformPlan {
        t,
        kind: PlanKind::BasisChange,
        n: len,
        column_perm: Perm::identity(len),
        levels: Vec::new(),
        stages: b.stages,
        output_slots,
        basis_change_count: count,
    })
}

/// Run the plan on `input`. Only `+` and `-` touch the values.
pub fn execute<T>(plan: &TransformPlan, input: &[T]) -> Result<Vec<T>>
where
    T: Clone,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    execute_counted(plan, input).map(|(out, _)| out)
}

/// [`execute`], also returning the number of `+`/`-` operations performed.
pub fn execute_counted<T>(plan: &TransformPlan, input: &[T]) -> Result<(Vec<T>, u64)>
where
    T: Clone,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    if input.len() != plan.n {
        return Err(Error::LengthMismatch {
            expected: plan.n,
            got: input.len(),
        });
    }
    let mut buf: Vec<T> = Vec::with_capacity(plan.slots());
    buf.extend_from_slice(input);
    buf.resize(plan.slots(), input[0].clone());
    let mut ops = 0u64;
    for f in plan.butterflies() {
        let hi = &buf[f.a] + &buf[f.b];
        let lo = &buf[f.a] - &buf[f.b];
        buf[f.dst_hi] = hi;
        buf[f.dst_lo] = lo;
        ops += 2;
    }
    Ok((
        plan.output_slots.iter().map(|&s| buf[s].clone()).collect(),
        ops,
    ))
}

/// `Upsilon_A(n) = 4n - 2t - 4` for `t >= 1`.
pub fn expected_addition_count(t: u32) -> u64 {
    let n = 1u64 << t;
    4 * n - 2 * t as u64 - 4
}

/// `Upsilon_N(n) = n - 2`.
pub fn expected_basis_change_count(t: u32) -> u64 {
    (1u64 << t) - 2
}

/// One checked identity of a factorization report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    /// First differing `(row, col)` when the identity fails.
    pub mismatch: Option<(usize, usize)>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct FactorizationReport {
    pub t: u32,
    pub checks: Vec<Check>,
}

impl FactorizationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

/// Matrices entering the dense factorization checks. Exposed so callers can
/// verify perturbed inputs.
#[derive(Debug, Clone)]
pub struct FactorizationInputs {
    pub a_n: Matrix<i64>,
    pub a_half: Matrix<i64>,
    pub n_n: Matrix<i64>,
    pub n_half: Matrix<i64>,
    pub residual: Matrix<i64>,
}

impl FactorizationInputs {
    pub fn slim(t: u32) -> Result<Self> {
        let n = 1u64 << t;
        let small = |m: u64| -> Result<Matrix<i64>> {
            Ok(adft::adft_matrix_slim(m)?
                .as_small()
                .expect("slim matrix")
                .clone())
        };
        let n_half = if n == 4 {
            Matrix::identity(1)
        } else {
            adft::basis_change_matrix(n / 2)?.matrix
        };
        Ok(FactorizationInputs {
            a_n: small(n)?,
            a_half: small(n / 2)?,
            n_n: adft::basis_change_matrix(n)?.matrix,
            n_half,
            residual: adft::residual_matrix(n)?,
        })
    }
}

/// Dense check of both block factorizations at `n = 2^t`, `2 <= t <= 8`.
pub fn verify_factorizations(t: u32) -> Result<FactorizationReport> {
    if !(2..=8).contains(&t) {
        return Err(Error::OutOfRange {
            value: t as u64,
            bound: 8,
        });
    }
    verify_factorizations_with(t, &FactorizationInputs::slim(t)?)
}

pub fn verify_factorizations_with(t: u32, m: &FactorizationInputs) -> Result<FactorizationReport> {
    let n = 1usize << t;
    let a2 = Matrix::from_rows(vec![vec![1i64, 1], vec![1, -1]])?;
    let mut checks = Vec::new();
    let mut check = |name: String, lhs: Matrix<i64>, rhs: Matrix<i64>| {
        checks.push(Check {
            name,
            mismatch: lhs.first_difference(&rhs),
        });
    };

    let permuted = column_permutation(n as u64)?.permute_cols(&m.a_n);
    let rhs = a2
        .kronecker(&Matrix::identity(n / 2))
        .mul(&m.a_half.block_diag(&m.n_n))?;
    check(
        format!(
            "A_{n} (columns reordered) = (A_2 ⊗ E_{h}) diag(A_{h}, N_{n})",
            h = n / 2
        ),
        permuted,
        rhs,
    );

    let permuted = row_permutation_n(n as u64)?.permute_rows(&m.n_n);
    let rhs = m
        .n_half
        .block_diag(&Matrix::identity(n / 4))
        .mul(&a2.kronecker(&Matrix::identity(n / 4)))?;
    check(
        format!(
            "N_{n} (rows reordered) = diag(N_{h}, E_{q}) (A_2 ⊗ E_{q})",
            h = n / 2,
            q = n / 4
        ),
        permuted,
        rhs,
    );

    check(
        format!("R_{n} = E_{}", n / 4),
        m.residual.clone(),
        Matrix::identity(n / 4),
    );
    if n == 4 {
        check("N_4 = A_2".into(), m.n_n.clone(), a2.clone());
    }
    Ok(FactorizationReport { t, checks })
}

/// Check that `plan` reproduces `matrix` column by column.
pub fn plan_reproduces<T: Clone + Num>(plan: &TransformPlan, matrix: &Matrix<T>) -> bool
where
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    let n = plan.n();
    (0..n).all(|l| {
        let e: Vec<T> = (0..n)
            .map(|i| if i == l { T::one() } else { T::zero() })
            .collect();
        let col = execute(plan, &e).expect("length n");
        (0..n).all(|k| &col[k] == matrix.get(k, l))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn column_permutation_examples() {
        assert_eq!(column_permutation(4).unwrap().image(), &[0, 2, 1, 3]);
        assert_eq!(
            column_permutation(8).unwrap().image(),
            &[0, 2, 4, 6, 1, 3, 5, 7]
        );
        assert_eq!(column_permutation(16).unwrap().image()[8 + 2], 13);
        assert!(column_permutation(2).is_err());
        assert!(column_permutation(12).is_err());
    }

    #[test]
    fn row_permutation_examples() {
        assert_eq!(row_permutation_n(8).unwrap().image(), &[0, 2, 1, 3]);
        assert_eq!(row_permutation_n(4).unwrap().image(), &[0, 1]);
        assert_eq!(
            row_permutation_n(16).unwrap().image(),
            &[0, 2, 4, 6, 1, 3, 5, 7]
        );
    }

    #[test]
    fn plan_counts() {
        let p1 = plan(1).unwrap();
        assert_eq!(p1.butterflies().count(), 1);
        assert_eq!(p1.addition_count(), 2);
        assert_eq!(plan(3).unwrap().addition_count(), 22);
        assert_eq!(plan(8).unwrap().addition_count(), 1004);
        for t in 2..=12 {
            let p = plan(t).unwrap();
            assert_eq!(p.addition_count(), expected_addition_count(t), "t = {t}");
            assert_eq!(
                p.basis_change_count(),
                expected_basis_change_count(t),
                "t = {t}"
            );
        }
        assert!(plan(0).is_err());
        assert!(plan(MAX_LOG2 + 1).is_err());
    }

    #[test]
    fn basis_change_plans() {
        for t in 2..=7 {
            let p = basis_change_plan(t).unwrap();
            assert_eq!(p.kind(), PlanKind::BasisChange);
            assert_eq!(p.addition_count(), expected_basis_change_count(t));
            let n = adft::basis_change_matrix(1 << t).unwrap();
            assert!(plan_reproduces(&p, &n.matrix), "t = {t}");
        }
        assert!(basis_change_plan(1).is_err());
    }

    #[test]
    fn execute_examples() {
        let p = plan(3).unwrap();
        let mut e0 = vec![0i64; 8];
        e0[0] = 1;
        assert_eq!(execute(&p, &e0).unwrap(), vec![1; 8]);
        assert!(execute(&p, &[1i64, 2]).is_err());
        let (_, ops) = execute_counted(&p, &e0).unwrap();
        assert_eq!(ops, 22);
    }

    #[test]
    fn plans_reproduce_matrices() {
        for t in 1..=6 {
            let p = plan(t).unwrap();
            let a = adft::adft_matrix_slim(1 << t).unwrap();
            assert!(plan_reproduces(&p, a.as_small().unwrap()), "t = {t}");
        }
    }

    #[test]
    fn buffer_stays_in_bounds() {
        for t in 1..=10 {
            let p = plan(t).unwrap();
            let slots = p.slots();
            assert!(p.butterflies().all(|f| f.dst_hi < slots
                && f.dst_hi != f.a
                && f.dst_hi != f.b
                && f.dst_lo == f.b));
        }
    }

    #[test]
    fn stages_have_disjoint_inputs() {
        let p = plan(6).unwrap();
        for s in p.stages() {
            let mut seen = std::collections::HashSet::new();
            for f in &s.butterflies {
                assert!(seen.insert(f.a) && seen.insert(f.b));
            }
        }
    }

    #[test]
    fn eight_point_stage_structure() {
        let p = plan(3).unwrap();
        let kinds: Vec<(StageKind, usize)> = p
            .stages()
            .iter()
            .map(|s| (s.kind, s.butterflies.len()))
            .collect();
        assert_eq!(
            kinds,
            vec![
                (StageKind::Combine { n: 2 }, 1),
                (StageKind::BasisSplit { n: 4 }, 1),
                (StageKind::Combine { n: 4 }, 2),
                (StageKind::BasisSplit { n: 8 }, 2),
                (StageKind::BasisSplit { n: 4 }, 1),
                (StageKind::Combine { n: 8 }, 4),
            ]
        );
    }

    #[test]
    fn factorizations_hold() {
        for t in 2..=6 {
            let r = verify_factorizations(t).unwrap();
            assert!(r.all_passed(), "{r:?}");
        }
        let r = verify_factorizations(2).unwrap();
        assert!(r.checks.iter().any(|c| c.name == "N_4 = A_2" && c.passed()));
        assert!(verify_factorizations(9).is_err());
    }

    #[test]
    fn broken_input_is_reported() {
        let mut m = FactorizationInputs::slim(3).unwrap();
        let v = *m.n_n.get(1, 2);
        m.n_n.set(1, 2, -v);
        let r = verify_factorizations_with(3, &m).unwrap();
        assert!(!r.all_passed());
        assert!(r.checks[0].mismatch.is_some());
    }
}
