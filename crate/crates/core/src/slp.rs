//! Straight-line addition programs.
//!
//! Text form, one op per line:
//!
//! ```text
//! # n=2 slots=4
//! ADD 2 0 1
//! SUB 1 0 1
//! PERM 2 1
//! ```
//!
//! `ADD d a b` sets slot `d` to `a + b`, `SUB d a b` to `a - b`. The input
//! starts in slots `[0, n)`. `PERM s_0 .. s_{k-1}` moves slot `s_i` into slot
//! `i` for every `i < k`, simultaneously. The output is slots `[0, n)` after
//! the last op.

use std::fmt::Write as _;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::fadft::TransformPlan;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Op {
    Add { dst: usize, a: usize, b: usize },
    Sub { dst: usize, a: usize, b: usize },
    Perm(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Program {
    pub n: usize,
    pub slots: usize,
    pub ops: Vec<Op>,
}

impl Program {
    pub fn from_plan(plan: &TransformPlan) -> Self {
        let mut ops = Vec::with_capacity(2 * plan.butterflies().count() + 1);
        for f in plan.butterflies() {
            ops.push(Op::Add {
                dst: f.dst_hi,
                a: f.a,
                b: f.b,
            });
            ops.push(Op::Sub {
                dst: f.dst_lo,
                a: f.a,
                b: f.b,
            });
        }
        let out = plan.output_slots();
        if out.iter().enumerate().any(|(i, &s)| i != s) {
            ops.push(Op::Perm(out.to_vec()));
        }
        Program {
            n: plan.n(),
            slots: plan.slots(),
            ops,
        }
    }

    /// Number of `ADD` and `SUB` ops.
    pub fn addition_count(&self) -> u64 {
        self.ops
            .iter()
            .filter(|op| !matches!(op, Op::Perm(_)))
            .count() as u64
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("# n={} slots={}\n", self.n, self.slots);
        for op in &self.ops {
            match op {
                Op::Add { dst, a, b } => writeln!(s, "ADD {dst} {a} {b}"),
                Op::Sub { dst, a, b } => writeln!(s, "SUB {dst} {a} {b}"),
                Op::Perm(p) => {
                    s.push_str("PERM");
                    for i in p {
                        write!(s, " {i}").unwrap();
                    }
                    writeln!(s)
                }
            }
            .unwrap();
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut header: Option<(usize, usize)> = None;
        let mut ops = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let bad = |msg: &str| Error::Program(format!("line {}: {msg}", lineno + 1));
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix('#') {
                if header.is_none() {
                    header = parse_header(rest);
                }
                continue;
            }
            let mut words = line.split_whitespace();
            let opname = words.next().expect("non-empty line");
            let args: Vec<usize> = words
                .map(|w| w.parse().map_err(|_| bad(&format!("bad slot {w:?}"))))
                .collect::<Result<_>>()?;
            let op = match (opname, args.as_slice()) {
                ("ADD", &[dst, a, b]) => Op::Add { dst, a, b },
                ("SUB", &[dst, a, b]) => Op::Sub { dst, a, b },
                ("ADD" | "SUB", _) => return Err(bad("expected three slots")),
                ("PERM", _) => Op::Perm(args),
                _ => return Err(bad(&format!("unknown op {opname:?}"))),
            };
            ops.push(op);
        }
        let (n, slots) =
            header.ok_or_else(|| Error::Program("missing '# n=.. slots=..' header".into()))?;
        let program = Program { n, slots, ops };
        program.validate()?;
        Ok(program)
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 || self.slots < self.n {
            return Err(Error::Program(format!(
                "need 0 < n <= slots, got n={} slots={}",
                self.n, self.slots
            )));
        }
        for op in &self.ops {
            let used: &[usize] = match op {
                Op::Add { dst, a, b } | Op::Sub { dst, a, b } => &[*dst, *a, *b],
                Op::Perm(p) => p,
            };
            if let Some(s) = used.iter().find(|&&s| s >= self.slots) {
                return Err(Error::Program(format!("slot {s} out of range")));
            }
        }
        Ok(())
    }

    /// Reference interpreter. Returns the output and the number of `+`/`-`
    /// operations performed.
    pub fn interpret<T>(&self, input: &[T]) -> Result<(Vec<T>, u64)>
    where
        T: Clone,
        for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T>,
    {
        if input.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                got: input.len(),
            });
        }
        let mut buf: Vec<T> = input.to_vec();
        buf.resize(self.slots, input[0].clone());
        let mut count = 0;
        for op in &self.ops {
            match op {
                Op::Add { dst, a, b } => {
                    buf[*dst] = &buf[*a] + &buf[*b];
                    count += 1;
                }
                Op::Sub { dst, a, b } => {
                    buf[*dst] = &buf[*a] - &buf[*b];
                    count += 1;
                }
                Op::Perm(p) => {
                    let moved: Vec<T> = p.iter().map(|&s| buf[s].clone()).collect();
                    for (i, v) in moved.into_iter().enumerate() {
                        buf[i] = v;
                    }
                }
            }
        }
        buf.truncate(self.n);
        Ok((buf, count))
    }
}

fn parse_header(rest: &str) -> Option<(usize, usize)> {
    let mut n = None;
    let mut slots = None;
    for kv in rest.split_whitespace() {
        match kv.split_once('=') {
            Some(("n", v)) => n = v.parse().ok(),
            Some(("slots", v)) => slots = v.parse().ok(),
            _ => {}
        }
    }
    Some((n?, slots?))
}
