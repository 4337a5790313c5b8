//! `scrolls` command line: generator sets, Gröbner bases, verification
//! checks, point enumeration and the bundled suites.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or parse error,
//! 3 budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use scrolls_core::groebner::{buchberger, Budget};
use scrolls_core::scrolls::{
    minors_full, minors_reduced, BlockSpec, Family, GeneratorSet, Naming, ScrollMatrix,
};
use scrolls_core::verify::{
    check_counts_and_height, check_identity_suite, check_lemma1, check_lemma2, check_lemma3,
    points_vanishing, run_suite, verify_corollary4, verify_corollary4a, verify_corollary6,
    verify_prop5a, verify_theorem_main, CheckConfig, Level, Verdict, VerificationReport,
};
use scrolls_core::{Error, Field, FieldSpec, MonomialOrder, OrderKind, Rational, Zp};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Environment variable capping wall time per check, in milliseconds.
pub const BUDGET_ENV: &str = "SCROLLS_BUDGET_MS";

#[derive(Parser, Debug)]
#[command(name = "scrolls", version, about = "Generators of rational normal scroll ideals up to radical")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a generator set.
    Gens {
        #[command(flatten)]
        set: SetArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Print the reduced Gröbner basis of a generator set.
    Gb {
        #[command(flatten)]
        set: SetArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Run one verification check.
    Verify {
        check: CheckKind,
        #[command(flatten)]
        set: SetArgs,
        #[command(flatten)]
        common: Common,
    },
    /// List the common zeros of a generator set over F_p.
    Points {
        #[command(flatten)]
        set: SetArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Run a fixed list of checks.
    Suite {
        #[arg(value_enum)]
        level: LevelArg,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Theorem,
    Lemma1,
    Lemma2,
    Lemma3,
    Prop5a,
    Corollary4,
    Corollary6,
    Identities,
    Counts,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum LevelArg {
    Smoke,
    #[value(alias = "full")]
    Paper,
    Stretch,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum SetKind {
    Full,
    Reduced,
    Stci,
    Charp,
    Family,
    Prop5,
    StciCharp,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Debug)]
struct SetArgs {
    /// Block sizes, e.g. 2,2 or 2,1,2.
    #[arg(long)]
    blocks: Option<String>,
    #[arg(long)]
    c: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    i: Option<usize>,
    #[arg(long)]
    j: Option<usize>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    h: Option<u32>,
    #[arg(long, value_enum, default_value = "full")]
    set: SetKind,
    /// Family for `--set family`: S, T, J or Jcd.
    #[arg(long)]
    kind: Option<String>,
    /// Print variables as x{block}_{index} even for two blocks.
    #[arg(long)]
    canonical_names: bool,
}

#[derive(Args, Debug)]
struct Common {
    /// Q or Fp:<prime>.
    #[arg(long, default_value = "Q")]
    field: String,
    #[arg(long, default_value = "degrevlex")]
    order: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    max_pairs: Option<usize>,
    #[arg(long)]
    max_degree: Option<u32>,
    #[arg(long)]
    max_points: Option<u64>,
    /// Leave timings out of reports.
    #[arg(long)]
    no_timing: bool,
    /// Write output to a file instead of standard output.
    #[arg(long, short)]
    output: Option<PathBuf>,
}

/// Outcome of a command: text to print and the exit code.
struct Output {
    body: String,
    code: i32,
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Lib(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

/// Runs the command line `argv` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let common = match &cli.command {
        Command::Gens { common, .. }
        | Command::Gb { common, .. }
        | Command::Verify { common, .. }
        | Command::Points { common, .. }
        | Command::Suite { common, .. } => common,
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(common.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let result = pool.install(|| dispatch(&cli.command));
    match result {
        Ok(out) => {
            if let Err(e) = emit(&out.body, common.output.as_ref()) {
                eprintln!("error: {e}");
                return EXIT_USAGE;
            }
            out.code
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Lib(e @ Error::BudgetExceeded(_))) => {
            eprintln!("error: {e}");
            EXIT_BUDGET
        }
        Err(CliError::Lib(e)) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

fn emit(body: &str, path: Option<&PathBuf>) -> std::io::Result<()> {
    match path {
        Some(p) => std::fs::write(p, body),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(body.as_bytes())?;
            out.flush()
        }
    }
}

impl Common {
    fn field(&self) -> CliResult<FieldSpec> {
        self.field.parse().map_err(CliError::Lib)
    }

    fn config(&self) -> CliResult<CheckConfig> {
        let kind: OrderKind = self.order.parse()?;
        let order = match kind {
            OrderKind::DegRevLex => MonomialOrder::degrevlex(),
            OrderKind::Lex => MonomialOrder::lex(),
        };
        let mut budget = Budget::default();
        if let Some(n) = self.max_pairs {
            budget = budget.with_max_pairs(positive(n as u64, "--max-pairs")? as usize);
        }
        if let Some(n) = self.max_degree {
            budget = budget.with_max_degree(positive(n as u64, "--max-degree")? as u32);
        }
        if let Some(n) = self.max_points {
            budget = budget.with_max_points(positive(n, "--max-points")?);
        }
        if let Ok(ms) = std::env::var(BUDGET_ENV) {
            let ms: u64 = ms
                .trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("{BUDGET_ENV} must be a number of milliseconds")))?;
            budget = budget.with_time_limit(Some(Duration::from_millis(ms)));
        }
        Ok(CheckConfig {
            order,
            budget,
            ..CheckConfig::default()
        })
    }
}

fn positive(n: u64, flag: &str) -> CliResult<u64> {
    if n == 0 {
        Err(CliError::Usage(format!("{flag} must be positive")))
    } else {
        Ok(n)
    }
}

impl SetArgs {
    fn naming(&self) -> Naming {
        if self.canonical_names {
            Naming::Canonical
        } else {
            Naming::Aliases
        }
    }

    fn prime_power(&self) -> Option<usize> {
        match (self.p, self.h) {
            (Some(p), h) => Some((p as usize).pow(h.unwrap_or(1))),
            _ => None,
        }
    }

    /// Block sizes from `--blocks`, else `--c`/`--d`, else `d = p^h`.
    fn blocks(&self) -> CliResult<BlockSpec> {
        if let Some(b) = &self.blocks {
            return Ok(b.parse()?);
        }
        match (self.c, self.d) {
            (Some(c), Some(d)) => Ok(BlockSpec::two(c, d)?),
            (None, Some(d)) if self.set == SetKind::Charp || self.set == SetKind::StciCharp => {
                Ok(BlockSpec::two(d, d)?)
            }
            (Some(c), None) if self.set == SetKind::Prop5 => Ok(BlockSpec::two(c, 1)?),
            _ => match self.prime_power() {
                Some(d) => Ok(BlockSpec::two(d, d)?),
                None => Err(CliError::Usage("give --blocks, or --c and --d".into())),
            },
        }
    }

    fn two(&self) -> CliResult<(usize, usize)> {
        if self.blocks.is_some() {
            match *self.blocks()?.columns() {
                [c, d] => return Ok((c, d)),
                _ => return Err(CliError::Usage("this check needs exactly two blocks".into())),
            }
        }
        match (self.c, self.d) {
            (Some(c), Some(d)) => Ok((c, d)),
            _ => Err(CliError::Usage("give --c and --d (or --blocks c,d)".into())),
        }
    }

    fn need<T: Copy>(v: Option<T>, flag: &str) -> CliResult<T> {
        v.ok_or_else(|| CliError::Usage(format!("missing {flag}")))
    }

    fn build<K: Field>(&self, field: &FieldSpec) -> CliResult<GeneratorSet<K>> {
        let spec = self.blocks()?;
        let m: ScrollMatrix<K> = ScrollMatrix::with_options(&spec, field, self.naming(), MonomialOrder::default())?;
        let set = match self.set {
            SetKind::Full => minors_full(&m),
            SetKind::Reduced => minors_reduced(&m),
            SetKind::Stci => m.stci_set()?,
            SetKind::Charp => m.char_p_set()?,
            SetKind::Prop5 => m.prop5_set()?,
            SetKind::StciCharp => m.stci_char_p_set()?,
            SetKind::Family => {
                let kind: Family = Self::need(self.kind.as_deref(), "--kind")?.parse()?;
                let (c, d) = match *spec.columns() {
                    [c, d] => (c, d),
                    _ => return Err(CliError::Usage("families need two blocks".into())),
                };
                m.family(kind, self.i.unwrap_or(c), self.j.unwrap_or(d))?
            }
        };
        Ok(set)
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

fn dispatch(cmd: &Command) -> CliResult<Output> {
    match cmd {
        Command::Gens { set, common } => {
            let field = common.field()?;
            by_field!(field, cmd_gens(set, common, &field))
        }
        Command::Gb { set, common } => {
            let field = common.field()?;
            by_field!(field, cmd_gb(set, common, &field))
        }
        Command::Points { set, common } => cmd_points(set, common),
        Command::Verify { check, set, common } => {
            let field = common.field()?;
            let cfg = common.config()?;
            let report = by_field!(field, cmd_verify(*check, set, &field, &cfg))?;
            Ok(report_output(report, common))
        }
        Command::Suite { level, common } => {
            let cfg = common.config()?;
            let level = match level {
                LevelArg::Smoke => Level::Smoke,
                LevelArg::Paper => Level::Paper,
                LevelArg::Stretch => Level::Stretch,
            };
            let mut summary = run_suite(level, &cfg);
            if common.no_timing {
                summary.reports.iter_mut().for_each(|r| r.millis = None);
            }
            let body = match common.format {
                Format::Json => json(&serde_json::to_value(&summary).expect("summary serializes")),
                Format::Text => summary.to_string(),
            };
            Ok(Output {
                body,
                code: verdict_code(summary.verdict()),
            })
        }
    }
}

fn json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json");
    s.push('\n');
    s
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => EXIT_OK,
        Verdict::Fail => EXIT_FAIL,
        Verdict::Budget => EXIT_BUDGET,
    }
}

fn report_output(mut report: VerificationReport, common: &Common) -> Output {
    if common.no_timing {
        report.millis = None;
    }
    let body = match common.format {
        Format::Json => json(&report.to_json()),
        Format::Text => report.to_string(),
    };
    Output {
        body,
        code: verdict_code(report.verdict),
    }
}

fn cmd_gens<K: Field>(set: &SetArgs, common: &Common, field: &FieldSpec) -> CliResult<Output> {
    let gens: GeneratorSet<K> = set.build(field)?;
    for w in &gens.warnings {
        eprintln!("warning: {w}");
    }
    let body = match common.format {
        Format::Json => json(&serde_json::to_value(gens.to_json()).expect("json")),
        Format::Text => gens.polys().iter().map(|p| format!("{p}\n")).collect(),
    };
    Ok(Output { body, code: EXIT_OK })
}

fn cmd_gb<K: Field>(set: &SetArgs, common: &Common, field: &FieldSpec) -> CliResult<Output> {
    let gens: GeneratorSet<K> = set.build(field)?;
    let cfg = common.config()?;
    let gb = buchberger(&gens, &cfg.order, &cfg.budget)?;
    let body = match common.format {
        Format::Json => json(&serde_json::to_value(gb.to_json()).expect("json")),
        Format::Text => {
            let mut s: String = gb.elements().iter().map(|p| format!("{p}\n")).collect();
            s.push_str(&format!(
                "# {} elements, order {}, pairs {}, reductions {}, maxdeg {}\n",
                gb.len(),
                gb.order().kind,
                gb.stats.pairs,
                gb.stats.reductions,
                gb.stats.maxdeg
            ));
            s
        }
    };
    Ok(Output { body, code: EXIT_OK })
}

fn cmd_points(set: &SetArgs, common: &Common) -> CliResult<Output> {
    let field = common.field()?;
    if field == FieldSpec::Rationals {
        return Err(CliError::Usage("points needs --field Fp:<p>".into()));
    }
    let gens: GeneratorSet<Zp> = set.build(&field)?;
    let cfg = common.config()?;
    let pts = points_vanishing(&gens, &cfg.budget)?;
    let body = match common.format {
        Format::Json => json(&serde_json::to_value(&pts).expect("json")),
        Format::Text => {
            let mut s = format!("# {} points in F_{}^{}\n", pts.len(), pts.q, pts.nvars);
            for p in &pts.points {
                let coords: Vec<String> = p.iter().map(|v| v.to_string()).collect();
                s.push_str(&format!("({})\n", coords.join(",")));
            }
            s
        }
    };
    Ok(Output { body, code: EXIT_OK })
}

fn cmd_verify<K: Field>(
    check: CheckKind,
    set: &SetArgs,
    field: &FieldSpec,
    cfg: &CheckConfig,
) -> CliResult<VerificationReport> {
    let need = SetArgs::need;
    let report = match check {
        CheckKind::Theorem => verify_theorem_main::<K>(&set.blocks()?, field, cfg)?,
        CheckKind::Counts => check_counts_and_height::<K>(&set.blocks()?, field, cfg)?,
        CheckKind::Identities => {
            let (c, d) = set.two()?;
            check_identity_suite::<K>(c, d, field)?
        }
        CheckKind::Lemma1 => {
            let (c, d) = set.two()?;
            check_lemma1::<K>(c, d, field, cfg)?
        }
        CheckKind::Lemma2 => {
            let (c, d) = set.two()?;
            check_lemma2::<K>(c, d, field, cfg)?
        }
        CheckKind::Lemma3 => check_lemma3::<K>(need(set.d, "--d")?, field, cfg)?,
        CheckKind::Prop5a => verify_prop5a::<K>(need(set.c, "--c")?, field, cfg)?,
        CheckKind::Corollary4 => verify_corollary4::<K>(SetArgs::need(set.p, "--p")?, set.h.unwrap_or(1), field, cfg)?,
        CheckKind::Corollary6 => match set.p {
            Some(p) => verify_corollary4a::<K>(p, set.h.unwrap_or(1), field, cfg)?,
            None => {
                let (c, d) = set.two()?;
                verify_corollary6::<K>(c, d, field, cfg)?
            }
        },
    };
    Ok(report)
}
