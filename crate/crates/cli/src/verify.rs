//! Invariant suites behind `slimbasis verify`.

use std::fmt::Write as _;

use clap::ValueEnum;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use slimbasis::adft::{self, apply_equivalence};
use slimbasis::chars;
use slimbasis::fadft::{self, FactorizationInputs};
use slimbasis::leopoldt::{self, working_conductor};
use slimbasis::slim::{self, dual_trace_values};
use slimbasis::{BigRational, CycloElem, CycloRing, Perm, Program};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Slim,
    Gauss,
    Leopoldt,
    Kron,
    Fadft,
    All,
}

/// A deliberate fault injected into one suite, for checking that the suites
/// can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sabotage {
    SlimEntry,
    GaussSum,
    LeopoldtCoord,
    KronPerm,
    FadftBlock,
}

impl Sabotage {
    pub const ALL: [Sabotage; 5] = [
        Sabotage::SlimEntry,
        Sabotage::GaussSum,
        Sabotage::LeopoldtCoord,
        Sabotage::KronPerm,
        Sabotage::FadftBlock,
    ];
}

impl Suite {
    pub fn default_bound(self) -> u64 {
        match self {
            Suite::Slim => 64,
            Suite::Gauss => 36,
            Suite::Leopoldt => 16,
            Suite::Kron => 45,
            Suite::Fadft => 6,
            Suite::All => 0,
        }
    }

    fn max_bound(self) -> u64 {
        match self {
            Suite::Slim => 256,
            Suite::Gauss => 64,
            Suite::Leopoldt => 32,
            Suite::Kron => 256,
            Suite::Fadft => 8,
            Suite::All => 0,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::Slim => "slim",
            Suite::Gauss => "gauss",
            Suite::Leopoldt => "leopoldt",
            Suite::Kron => "kron",
            Suite::Fadft => "fadft",
            Suite::All => "all",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckLine {
    pub suite: &'static str,
    pub identity: String,
    pub failure: Option<String>,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub lines: Vec<CheckLine>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.lines.iter().filter(|l| l.failure.is_some()).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for l in &self.lines {
            match &l.failure {
                None => writeln!(s, "PASS [{}] {}", l.suite, l.identity),
                Some(why) => writeln!(s, "FAIL [{}] {}: {why}", l.suite, l.identity),
            }
            .unwrap();
        }
        writeln!(s, "{} checks, {} failed", self.lines.len(), self.failures()).unwrap();
        s
    }
}

struct Recorder<'a> {
    suite: &'static str,
    report: &'a mut Report,
}

impl Recorder<'_> {
    fn check(&mut self, identity: String, outcome: Result<(), String>) {
        self.report.lines.push(CheckLine {
            suite: self.suite,
            identity,
            failure: outcome.err(),
        });
    }
}

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn err_str(e: slimbasis::Error) -> String {
    e.to_string()
}

/// Run `suite`; `bound` defaults per suite. `All` uses the defaults.
pub fn run(
    suite: Suite,
    bound: Option<u64>,
    sabotage: Option<Sabotage>,
) -> Result<Report, CliError> {
    let mut report = Report::default();
    let suites: Vec<Suite> = match suite {
        Suite::All => {
            if bound.is_some() {
                return Err(CliError::Usage(
                    "--bound is not accepted with --suite all".into(),
                ));
            }
            vec![
                Suite::Slim,
                Suite::Gauss,
                Suite::Leopoldt,
                Suite::Kron,
                Suite::Fadft,
            ]
        }
        s => vec![s],
    };
    for s in suites {
        let b = bound.unwrap_or(s.default_bound());
        if b > s.max_bound() {
            return Err(CliError::Usage(format!(
                "bound {b} exceeds {} for suite {}",
                s.max_bound(),
                s.name()
            )));
        }
        let mut rec = Recorder {
            suite: s.name(),
            report: &mut report,
        };
        match s {
            Suite::Slim => slim_suite(&mut rec, b, sabotage == Some(Sabotage::SlimEntry)),
            Suite::Gauss => gauss_suite(&mut rec, b, sabotage == Some(Sabotage::GaussSum)),
            Suite::Leopoldt => {
                leopoldt_suite(&mut rec, b, sabotage == Some(Sabotage::LeopoldtCoord))
            }
            Suite::Kron => kron_suite(&mut rec, b, sabotage == Some(Sabotage::KronPerm)),
            Suite::Fadft => {
                fadft_suite(&mut rec, b as u32, sabotage == Some(Sabotage::FadftBlock))?
            }
            Suite::All => unreachable!(),
        }
    }
    Ok(report)
}

fn small_or_unit(v: &BigRational) -> bool {
    v.is_integer() && v.numer().magnitude() <= &One::one()
}

fn slim_suite(rec: &mut Recorder, bound: u64, sabotage: bool) {
    for n in 2..=bound {
        let spec = match slim::slim_nbg(n) {
            Ok(s) => s,
            Err(e) => {
                rec.check(format!("theta_{n} constructed"), Err(e.to_string()));
                continue;
            }
        };
        let traces = dual_trace_values(spec.theta(), n);
        rec.check(
            format!("Tr(theta_{n}* zeta_{n}^s) in {{-1, 0, 1}} for all s"),
            traces.as_ref().map_err(|e| e.to_string()).and_then(|t| {
                match t.iter().position(|v| !small_or_unit(v)) {
                    None => Ok(()),
                    Some(s) => Err(format!("s = {s} gives {}", t[s])),
                }
            }),
        );
        let mut table = slim::entry_table(n);
        if sabotage && n == 2 {
            table[1] = -table[1];
        }
        rec.check(
            format!("closed-form c(s) = Tr(theta_{n}* zeta_{n}^s) for all s"),
            traces.map_err(err_str).and_then(|t| {
                match (0..n as usize).find(|&s| t[s] != BigRational::from_integer(table[s].into()))
                {
                    None => Ok(()),
                    Some(s) => Err(format!("s = {s}: {} vs {}", table[s], t[s])),
                }
            }),
        );
        rec.check(
            format!("Tr(theta_{n}) = 1"),
            ensure(spec.theta().trace().is_one(), || {
                format!("trace is {}", spec.theta().trace())
            }),
        );
        if let Ok(sq) = slim::slim_nbg_squarefree(n) {
            rec.check(
                format!("mu({n}) zeta_{n} is slim"),
                slim::is_slim(&sq, n)
                    .map_err(err_str)
                    .and_then(|ok| ensure(ok, || "a trace leaves {-1, 0, 1}".into())),
            );
        }
    }
}

fn gauss_suite(rec: &mut Recorder, bound: u64, sabotage: bool) {
    for m in 1..=bound {
        let w = CycloRing::new(working_conductor(m)).expect("ring within bound");
        let chars = chars::characters(m).expect("modulus within bound");
        let product = chars.iter().try_for_each(|chi| {
            let tau = chars::gauss_sum(chi, &w).map_err(err_str)?;
            let tau_bar = chars::gauss_sum(&chi.conj(), &w).map_err(err_str)?;
            let expect = CycloElem::from_integer(&w, chi.parity() * chi.conductor() as i64);
            ensure(&tau * &tau_bar == expect, || format!("fails for {chi:?}"))
        });
        rec.check(
            format!("tau(chi) tau(conj chi) = chi(-1) f_chi for all chi mod {m}"),
            product,
        );
        let reduction = chars.iter().enumerate().try_for_each(|(i, chi)| {
            (0..m as i64).try_for_each(|a| {
                let mut direct = chars::gauss_sum_direct(chi, m, a, &w).map_err(err_str)?;
                if sabotage && m == 5 && i == 1 && a == 2 {
                    direct = &direct + &CycloElem::one(&w);
                }
                let reduced = chars::gauss_sum_reduced(chi, m, a)
                    .materialize(chi, &w)
                    .map_err(err_str)?;
                ensure(direct == reduced, || format!("fails for {chi:?}, a = {a}"))
            })
        });
        rec.check(
            format!("tau(chi | zeta_{m}^a) closed form = direct sum for all chi, a"),
            reduction,
        );
    }
}

fn leopoldt_suite(rec: &mut Recorder, bound: u64, sabotage: bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(bound);
    for n in 2..=bound {
        let r = CycloRing::new(n).expect("ring within bound");
        let round_trip = (0..10).try_for_each(|i| {
            let coeffs: Vec<BigRational> = (0..r.degree())
                .map(|_| {
                    BigRational::new(
                        rng.gen_range(-9i64..=9).into(),
                        rng.gen_range(1i64..=5).into(),
                    )
                })
                .collect();
            let theta = CycloElem::from_coeffs(&r, &coeffs).map_err(err_str)?;
            let coords = leopoldt::chi_coords(&theta, n).map_err(err_str)?;
            leopoldt::check_conjugation_consistency(&coords).map_err(err_str)?;
            let mut back = leopoldt::synthesize(&coords).map_err(err_str)?;
            if sabotage && n == 3 && i == 0 {
                back = &back + &CycloElem::one(&r);
            }
            ensure(back == theta, || {
                format!("element {i}: {theta} came back as {back}")
            })
        });
        rec.check(
            format!("synthesize(chi_coords(theta)) = theta and y(chi^r) = y(chi)^r in Q(zeta_{n})"),
            round_trip,
        );

        let dual = slim::slim_nbg(n).map_err(err_str).and_then(|spec| {
            let coords = spec.coords().map_err(err_str)?;
            let via = leopoldt::synthesize(&leopoldt::dual_coords(&coords).map_err(err_str)?)
                .map_err(err_str)?;
            let gram = spec.theta().dual_nbg().map_err(err_str)?;
            ensure(via == gram, || format!("{via} vs {gram}"))
        });
        rec.check(
            format!("dual coordinates of theta_{n} synthesize to the Gram-matrix dual"),
            dual,
        );

        let roots = (0..n as i64).try_for_each(|s| {
            let closed = leopoldt::root_chi_coords(n, s).map_err(err_str)?;
            let direct = leopoldt::chi_coords(&CycloElem::zeta_power(&r, s), n).map_err(err_str)?;
            ensure(closed == direct, || format!("s = {s}"))
        });
        rec.check(
            format!("closed-form coordinates of zeta_{n}^s match analysis for all s"),
            roots,
        );
    }
}

fn kron_suite(rec: &mut Recorder, bound: u64, sabotage: bool) {
    let small = |n: u64| {
        adft::adft_matrix_slim(n)
            .expect("n within bound")
            .as_small()
            .expect("slim")
            .clone()
    };
    for n1 in 2..=bound {
        for n2 in n1 + 1..=bound / n1 {
            if n1.gcd(&n2) != 1 {
                continue;
            }
            let outcome = adft::kronecker_equivalence(n1, n2)
                .map_err(err_str)
                .and_then(|(p, q)| {
                    let p = if sabotage && (n1, n2) == (3, 4) {
                        let mut img = p.image().to_vec();
                        img.swap(1, 2);
                        Perm::new(img).map_err(err_str)?
                    } else {
                        p
                    };
                    let lhs = apply_equivalence(&p, &q, &small(n1).kronecker(&small(n2)));
                    let rhs = small(n1 * n2);
                    ensure(lhs == rhs, || {
                        format!("first difference at {:?}", lhs.first_difference(&rhs))
                    })
                });
            rec.check(format!("P (A_{n1} ⊗ A_{n2}) Q = A_{}", n1 * n2), outcome);
        }
    }
}

fn fadft_suite(rec: &mut Recorder, bound: u32, sabotage: bool) -> Result<(), CliError> {
    for t in 1..=bound {
        let n = 1u64 << t;
        if t >= 2 {
            let mut inputs = FactorizationInputs::slim(t)?;
            if sabotage && t == 3 {
                let v = *inputs.a_half.get(1, 1);
                inputs.a_half.set(1, 1, v + 1);
            }
            let report = fadft::verify_factorizations_with(t, &inputs)?;
            for c in report.checks {
                rec.check(
                    c.name,
                    c.mismatch.map_or(Ok(()), |(r, col)| {
                        Err(format!("first difference at ({r}, {col})"))
                    }),
                );
            }
        }
        let plan = fadft::plan(t)?;
        let a = adft::adft_matrix_slim(n)?;
        rec.check(
            format!("plan({t}) reproduces A_{n} column by column"),
            ensure(
                fadft::plan_reproduces(&plan, a.as_small().expect("slim")),
                || "a column differs".into(),
            ),
        );
        let input: Vec<BigRational> = (0..n as i64)
            .map(|i| BigRational::new((i * i - 5).into(), (i % 3 + 1).into()))
            .collect();
        let (out, ops) = fadft::execute_counted(&plan, &input)?;
        let expect = fadft::expected_addition_count(t);
        rec.check(
            format!("executed additions for n = {n} equal 4n - 2t - 4 = {expect}"),
            ensure(ops == expect, || format!("counted {ops}")),
        );
        if t >= 2 {
            let bc = fadft::basis_change_plan(t)?;
            let (_, bops) =
                fadft::execute_counted(&bc, &vec![BigRational::zero(); (n / 2) as usize])?;
            rec.check(
                format!("basis change additions for n = {n} equal n - 2 = {}", n - 2),
                ensure(bops == n - 2, || format!("counted {bops}")),
            );
        }
        let program = Program::parse(&Program::from_plan(&plan).to_text())?;
        let (interp, _) = program.interpret(&input)?;
        rec.check(
            format!("exported program for n = {n} computes the same output"),
            ensure(interp == out, || "outputs differ".into()),
        );
    }
    Ok(())
}
