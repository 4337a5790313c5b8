//! Fixed lists of checks run as a batch.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::checks::*;
use super::report::{Verdict, VerificationReport};
use crate::algebra::{FieldSpec, Rational, Zp};
use crate::error::{Error, Result};
use crate::scrolls::{minors_full, minors_reduced, BlockSpec, ScrollMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Smoke,
    Paper,
    Stretch,
}

impl FromStr for Level {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "smoke" => Ok(Level::Smoke),
            "paper" | "full" => Ok(Level::Paper),
            "stretch" => Ok(Level::Stretch),
            other => Err(Error::InvalidSpec(format!("unknown suite level `{other}`"))),
        }
    }
}

/// One check with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Job {
    Identities { c: usize, d: usize, field: FieldSpec },
    Theorem { blocks: BlockSpec, field: FieldSpec },
    Lemma1 { c: usize, d: usize, field: FieldSpec },
    Lemma2 { c: usize, d: usize, field: FieldSpec },
    Lemma3 { d: usize, field: FieldSpec },
    Corollary4 { p: u64, h: u32, field: FieldSpec },
    Corollary4a { p: u64, h: u32, field: FieldSpec },
    Prop5a { c: usize, field: FieldSpec },
    Corollary6 { c: usize, d: usize, field: FieldSpec },
    Counts { blocks: BlockSpec, field: FieldSpec },
    /// Theorem check over `F_p` compared with the points oracle.
    TheoremPoints { blocks: BlockSpec, p: u32 },
    /// Characteristic-`p` check over `F_q` compared with the points oracle.
    Corollary4Points { p: u64, h: u32, q: u32 },
}

impl fmt::Display for Job {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Job::Identities { c, d, field } => write!(f, "identities c={c} d={d} {field}"),
            Job::Theorem { blocks, field } => write!(f, "theorem blocks={blocks} {field}"),
            Job::Lemma1 { c, d, field } => write!(f, "lemma1 c={c} d={d} {field}"),
            Job::Lemma2 { c, d, field } => write!(f, "lemma2 c={c} d={d} {field}"),
            Job::Lemma3 { d, field } => write!(f, "lemma3 d={d} {field}"),
            Job::Corollary4 { p, h, field } => write!(f, "corollary4 p={p} h={h} {field}"),
            Job::Corollary4a { p, h, field } => write!(f, "corollary4a p={p} h={h} {field}"),
            Job::Prop5a { c, field } => write!(f, "prop5a c={c} {field}"),
            Job::Corollary6 { c, d, field } => write!(f, "corollary6 c={c} d={d} {field}"),
            Job::Counts { blocks, field } => write!(f, "counts blocks={blocks} {field}"),
            Job::TheoremPoints { blocks, p } => write!(f, "concordance theorem blocks={blocks} Fp:{p}"),
            Job::Corollary4Points { p, h, q } => write!(f, "concordance corollary4 p={p} h={h} Fp:{q}"),
        }
    }
}

macro_rules! by_field {
    ($field:expr, $f:ident ( $($arg:expr),* )) => {
        match $field {
            FieldSpec::Rationals => $f::<Rational>($($arg),*),
            FieldSpec::PrimeField(_) => $f::<Zp>($($arg),*),
        }
    };
}

impl Job {
    pub fn try_run(&self, cfg: &CheckConfig) -> Result<VerificationReport> {
        match self {
            Job::Identities { c, d, field } => by_field!(field, check_identity_suite(*c, *d, field)),
            Job::Theorem { blocks, field } => by_field!(field, verify_theorem_main(blocks, field, cfg)),
            Job::Lemma1 { c, d, field } => by_field!(field, check_lemma1(*c, *d, field, cfg)),
            Job::Lemma2 { c, d, field } => by_field!(field, check_lemma2(*c, *d, field, cfg)),
            Job::Lemma3 { d, field } => by_field!(field, check_lemma3(*d, field, cfg)),
            Job::Corollary4 { p, h, field } => by_field!(field, verify_corollary4(*p, *h, field, cfg)),
            Job::Corollary4a { p, h, field } => by_field!(field, verify_corollary4a(*p, *h, field, cfg)),
            Job::Prop5a { c, field } => by_field!(field, verify_prop5a(*c, field, cfg)),
            Job::Corollary6 { c, d, field } => by_field!(field, verify_corollary6(*c, *d, field, cfg)),
            Job::Counts { blocks, field } => by_field!(field, check_counts_and_height(blocks, field, cfg)),
            Job::TheoremPoints { blocks, p } => {
                let field = FieldSpec::prime(*p as u64)?;
                let verdict = verify_theorem_main::<Zp>(blocks, &field, cfg)?;
                let m: ScrollMatrix<Zp> = ScrollMatrix::new(blocks, &field)?;
                let mut r = points_concordance(&minors_full(&m), &minors_reduced(&m), &verdict, &cfg.budget)?;
                r.param("blocks", blocks.to_string());
                Ok(r)
            }
            Job::Corollary4Points { p, h, q } => {
                let field = FieldSpec::prime(*q as u64)?;
                let verdict = verify_corollary4::<Zp>(*p, *h, &field, cfg)?;
                let d = (*p as usize).pow(*h);
                let m: ScrollMatrix<Zp> = ScrollMatrix::two_block(d, d, &field)?;
                let mut r = points_concordance(&minors_full(&m), &m.char_p_set()?, &verdict, &cfg.budget)?;
                r.param("p", *p).param("h", *h);
                Ok(r)
            }
        }
    }

    /// Runs the job; running out of budget yields a budget report.
    pub fn run(&self, cfg: &CheckConfig) -> VerificationReport {
        match self.try_run(cfg) {
            Ok(r) => r,
            Err(e @ Error::BudgetExceeded(_)) => VerificationReport::budget(self.to_string(), &e),
            Err(e) => {
                let mut r = VerificationReport::budget(self.to_string(), &e);
                r.verdict = Verdict::Fail;
                r
            }
        }
    }
}

const Q: FieldSpec = FieldSpec::Rationals;

fn fp(p: u32) -> FieldSpec {
    FieldSpec::PrimeField(p)
}

fn two(c: usize, d: usize) -> BlockSpec {
    BlockSpec::two(c, d).expect("valid block sizes")
}

/// Pairs `(c, d)` for the two-block theorem runs.
pub const THEOREM_PAIRS: [(usize, usize); 7] = [(1, 1), (2, 1), (2, 2), (3, 2), (2, 3), (3, 3), (4, 2)];

/// The checks of a suite level, in report order.
pub fn suite_jobs(level: Level) -> Vec<Job> {
    let mut jobs = vec![];
    if level == Level::Smoke {
        for c in 1..=3 {
            for d in 1..=3 {
                jobs.push(Job::Identities { c, d, field: Q });
            }
        }
        jobs.push(Job::Theorem { blocks: two(2, 2), field: Q });
        return jobs;
    }
    for field in [Q, fp(2), fp(3), fp(5)] {
        for c in 1..=6 {
            for d in 1..=6 {
                jobs.push(Job::Identities { c, d, field });
            }
        }
    }
    for field in [Q, fp(2), fp(3)] {
        for (c, d) in THEOREM_PAIRS {
            jobs.push(Job::Theorem { blocks: two(c, d), field });
        }
    }
    for blocks in [[2, 2, 2], [2, 1, 2]] {
        jobs.push(Job::Theorem {
            blocks: BlockSpec::new(blocks.to_vec()).unwrap(),
            field: fp(3),
        });
    }
    jobs.push(Job::Corollary4 { p: 2, h: 1, field: fp(2) });
    jobs.push(Job::Corollary4 { p: 3, h: 1, field: fp(3) });
    jobs.push(Job::Corollary4a { p: 2, h: 1, field: fp(2) });
    for c in 2..=5 {
        jobs.push(Job::Prop5a { c, field: Q });
    }
    for (c, d) in [(2, 1), (3, 1), (2, 2), (2, 3), (3, 2)] {
        jobs.push(Job::Corollary6 { c, d, field: Q });
    }
    for c in 2..=5 {
        for d in 1..=3 {
            jobs.push(Job::Lemma1 { c, d, field: Q });
        }
    }
    for c in 1..=4 {
        for d in 2..=4 {
            jobs.push(Job::Lemma2 { c, d, field: Q });
        }
    }
    for d in 1..=4 {
        jobs.push(Job::Lemma3 { d, field: Q });
    }
    for c in 1..=5 {
        for d in 1..=6 - c {
            jobs.push(Job::Counts { blocks: two(c, d), field: Q });
        }
    }
    jobs.push(Job::Counts {
        blocks: BlockSpec::new(vec![2, 2, 2]).unwrap(),
        field: Q,
    });
    for p in [2, 3] {
        for (c, d) in THEOREM_PAIRS {
            jobs.push(Job::TheoremPoints { blocks: two(c, d), p });
        }
    }
    for blocks in [[2, 2, 2], [2, 1, 2]] {
        jobs.push(Job::TheoremPoints {
            blocks: BlockSpec::new(blocks.to_vec()).unwrap(),
            p: 3,
        });
    }
    jobs.push(Job::Corollary4Points { p: 2, h: 1, q: 2 });
    jobs.push(Job::Corollary4Points { p: 3, h: 1, q: 3 });
    jobs.push(Job::Corollary4Points { p: 2, h: 1, q: 3 });
    if level == Level::Stretch {
        jobs.push(Job::Corollary4 { p: 2, h: 2, field: fp(2) });
        jobs.push(Job::Corollary6 { c: 4, d: 3, field: Q });
    }
    jobs
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub level: Level,
    pub pass: usize,
    pub fail: usize,
    pub budget: usize,
    pub reports: Vec<VerificationReport>,
}

impl SuiteSummary {
    pub fn verdict(&self) -> Verdict {
        if self.fail > 0 {
            Verdict::Fail
        } else if self.budget > 0 {
            Verdict::Budget
        } else {
            Verdict::Pass
        }
    }
}

/// Runs the level's jobs concurrently; reports keep the job order.
pub fn run_suite(level: Level, cfg: &CheckConfig) -> SuiteSummary {
    let reports: Vec<VerificationReport> = suite_jobs(level).par_iter().map(|j| j.run(cfg)).collect();
    let tally = |v| reports.iter().filter(|r| r.verdict == v).count();
    SuiteSummary {
        level,
        pass: tally(Verdict::Pass),
        fail: tally(Verdict::Fail),
        budget: tally(Verdict::Budget),
        reports,
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.reports {
            let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
            let ms = r.millis.map(|m| format!("{m} ms")).unwrap_or_default();
            writeln!(f, "{:<7} {:<12} {:<50} {}", r.verdict.to_string(), r.check, params.join(" "), ms)?;
        }
        writeln!(f, "pass {}  fail {}  budget {}", self.pass, self.fail, self.budget)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smoke_suite_passes() {
        let s = run_suite(Level::Smoke, &CheckConfig::default());
        assert_eq!(s.fail + s.budget, 0, "{s}");
        assert_eq!(s.reports.len(), 10);
    }

    #[test]
    fn levels_nest() {
        let base = suite_jobs(Level::Paper);
        let stretch = suite_jobs(Level::Stretch);
        assert_eq!(&stretch[..base.len()], &base[..]);
        assert_eq!(stretch.len(), base.len() + 2);
    }
}
