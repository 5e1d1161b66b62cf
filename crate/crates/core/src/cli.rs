//! Command-line front end. Each subcommand renders a plain-text report or
//! data file; [`run`] maps errors to exit codes.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::arith::is_prime;
use crate::bounds::check_degree_bound;
use crate::conditions::{check_gcd_condition, check_condition, Condition, SupportSet};
use crate::enumerate::{
    chain_weight_system, chain_charpoly, classify_prime_mu, enumerate, find_gaps, sum3_eq_half_d,
    sum_weights_eq_d, EnumerateOptions, EnumerationRecord,
};
use crate::error::{Error, Result};
use crate::graphs::{enumerate_types, kappa_choices, type_of};
use crate::output::{emit, Format, OutputRow};
use crate::weights::WeightSystem;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

/// Default search-node budget for enumeration commands.
pub const DEFAULT_BUDGET: u64 = 5_000_000_000;

#[derive(Parser, Debug)]
#[command(name = "quasihom", version, about = "Weight systems of quasihomogeneous isolated singularities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Jsonl,
    Csv,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Jsonl => Format::Jsonl,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(clap::Args, Debug, Clone)]
pub struct SearchArgs {
    /// Number of variables.
    #[arg(short = 'n')]
    pub n: usize,
    /// Largest Milnor number.
    #[arg(long = "mu-max")]
    pub mu_max: u64,
    /// Worker threads.
    #[arg(long)]
    pub jobs: Option<usize>,
    /// Maximal number of search nodes.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    /// Directory for resumable per-type shards.
    #[arg(long = "cache-dir")]
    pub cache_dir: Option<PathBuf>,
}

impl SearchArgs {
    fn options(&self) -> EnumerateOptions {
        EnumerateOptions { budget: Some(self.budget), jobs: self.jobs, cache_dir: self.cache_dir.clone() }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Verdicts and invariants for one weight system: v_1 ... v_n d.
    Check {
        #[arg(required = true, num_args = 2..)]
        values: Vec<u64>,
    },
    /// All weight systems up to a Milnor number bound.
    Enumerate {
        #[command(flatten)]
        search: SearchArgs,
        #[arg(long, value_enum, default_value = "jsonl")]
        format: FormatArg,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also list A_1 = (1, 2), which has v_1 = d/2 (n = 1 only).
        #[arg(long = "include-a1")]
        include_a1: bool,
        /// Keep only systems with v_1 + ... + v_n = d.
        #[arg(long = "sum-weights-eq-d")]
        sum_weights_eq_d: bool,
        /// Keep only systems with 2(v_1 + v_2 + v_3) = d (n = 3).
        #[arg(long = "sum3-eq-half-d")]
        sum3_eq_half_d: bool,
    },
    /// Milnor numbers above 2^n that are not attained.
    Gaps {
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Types of maps on n vertices.
    Types {
        #[arg(short = 'n')]
        n: usize,
    },
    /// Chain type system for exponents a_1 ... a_n.
    Chain {
        #[arg(required = true)]
        exponents: Vec<u64>,
    },
    /// Verify the chain structure of every system with prime Milnor number.
    PrimeAudit {
        #[command(flatten)]
        search: SearchArgs,
    },
}

/// Outcome of a command: text for standard output, and a status line for
/// standard error.
#[derive(Debug, Default)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn check_report(values: &[u64]) -> Result<String> {
    let ws = WeightSystem::from_slice(values)?;
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("system: {ws}"));
    line(format!("reduced: {}", ws.is_reduced()));
    line(format!("all weights below d/2: {}", ws.all_below_half()));
    let is3 = check_condition(&ws, &SupportSet::Full, Condition::C1Prime);
    match &is3.witness {
        Some(w) => line(format!("IS3: false ({w})")),
        None => line("IS3: true".into()),
    }
    let gcd = check_gcd_condition(&ws);
    match &gcd.witness {
        Some(w) => line(format!("GCD: false ({w})")),
        None => line("GCD: true".into()),
    }
    let series = ws.poincare_series();
    line(format!("Poincare series in Z[t]: {}", series.is_ok()));
    line(format!(
        "Poincare series in N0[t]: {}",
        series.as_ref().is_ok_and(|p| p.has_nonnegative_coeffs())
    ));
    line(format!("mu: {}", ws.milnor_number()));
    if let Ok(exps) = ws.exponents() {
        line(format!("exponents: {}", exps.len()));
    }
    line(format!("degree bound: {}", check_degree_bound(&ws)));
    if is3.verdict {
        line(format!("charpoly: {}", ws.charpoly_milnor_orlik()?));
        let mut labels: Vec<(usize, String)> = kappa_choices(&ws)
            .iter()
            .map(|g| type_of(g.kappa()).map(|t| (t.index, t.label.clone())))
            .collect::<Result<_>>()?;
        labels.sort();
        labels.dedup();
        let labels: Vec<String> = labels.into_iter().map(|(_, l)| l).collect();
        line(format!("types: {}", labels.join(",")));
    }
    Ok(out)
}

/// Record for `A_1`, which the enumeration leaves out because `v_1 = d/2`.
fn a1_record() -> Result<EnumerationRecord> {
    let ws = WeightSystem::new(vec![1], 2)?;
    Ok(EnumerationRecord {
        charpoly: ws.charpoly_milnor_orlik()?,
        kappa_types: vec![type_of(&[0])?.label.clone()],
        system: ws,
        mu: 1,
    })
}

pub fn enumerate_rows(
    search: &SearchArgs,
    include_a1: bool,
    sum_eq_d: bool,
    sum3_half: bool,
) -> Result<Vec<OutputRow>> {
    if include_a1 && search.n != 1 {
        return Err(Error::PreconditionViolated("--include-a1 applies to n = 1 only".into()));
    }
    let mut records = enumerate(search.n, search.mu_max, &search.options())?;
    if include_a1 && search.mu_max >= 1 {
        records.insert(0, a1_record()?);
    }
    Ok(records
        .iter()
        .filter(|r| !sum_eq_d || sum_weights_eq_d(&r.system))
        .filter(|r| !sum3_half || sum3_eq_half_d(&r.system))
        .map(OutputRow::from)
        .collect())
}

pub fn gaps_report(search: &SearchArgs) -> Result<String> {
    let report = find_gaps(search.n, search.mu_max, &search.options())?;
    let mut out = String::new();
    for g in &report.gaps {
        let kind = if g.sophie_germain { "prime-pair" } else { "other" };
        out.push_str(&format!("{} {kind}\n", g.mu));
    }
    Ok(out)
}

pub fn types_report(n: usize) -> Result<String> {
    let mut out = String::new();
    for t in enumerate_types(n)? {
        let rep: Vec<String> = t.representative.iter().map(|k| (k + 1).to_string()).collect();
        let fcc = if t.is_fcc() { "fcc" } else { "-" };
        out.push_str(&format!("{} [{}] {fcc} {}\n", t.label, rep.join(","), t.code));
    }
    Ok(out)
}

pub fn chain_report(a: &[u64]) -> Result<String> {
    let c = chain_weight_system(a)?;
    Ok(format!(
        "system: {}\nchain order: {}\nmu: {}\ncharpoly: {}\nmu prime: {}\n",
        c.system,
        c.chain_order,
        c.mu,
        chain_charpoly(a)?,
        is_prime(c.mu)
    ))
}

fn prime_audit(search: &SearchArgs) -> Result<Output> {
    let audit = classify_prime_mu(search.n, search.mu_max, &search.options())?;
    let mut stdout = String::new();
    for e in &audit.entries {
        let chain = e
            .chain
            .as_ref()
            .map(|a| format!("({})", a.iter().map(u64::to_string).collect::<Vec<_>>().join(",")))
            .unwrap_or_else(|| "-".into());
        stdout.push_str(&format!("{} {} {chain}\n", e.mu, e.system));
    }
    for v in &audit.violations {
        stdout.push_str(&format!("violation: {v}\n"));
    }
    let code = if audit.is_clean() { EXIT_OK } else { EXIT_INVARIANT };
    let stderr = format!("prime systems: {}, violations: {}\n", audit.entries.len(), audit.violations.len());
    Ok(Output { stdout, stderr, code })
}

fn execute(cli: Cli) -> Result<Output> {
    let text = |stdout: String| Output { stdout, ..Default::default() };
    match cli.command {
        Command::Check { values } => check_report(&values).map(text),
        Command::Enumerate { search, format, out, include_a1, sum_weights_eq_d, sum3_eq_half_d } => {
            let rows = enumerate_rows(&search, include_a1, sum_weights_eq_d, sum3_eq_half_d)?;
            let body = emit(&rows, format.into())?;
            let stderr = format!("count: {}\n", rows.len());
            match out {
                Some(path) => {
                    std::fs::write(&path, body)
                        .map_err(|e| Error::PreconditionViolated(format!("{}: {e}", path.display())))?;
                    Ok(Output { stderr, ..Default::default() })
                }
                None => Ok(Output { stdout: body, stderr, code: EXIT_OK }),
            }
        }
        Command::Gaps { search } => gaps_report(&search).map(text),
        Command::Types { n } => {
            let body = types_report(n)?;
            let count = body.lines().count();
            Ok(Output { stdout: body, stderr: format!("count: {count}\n"), code: EXIT_OK })
        }
        Command::Chain { exponents } => chain_report(&exponents).map(text),
        Command::PrimeAudit { search } => prime_audit(&search),
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::InvariantViolation(_) => EXIT_INVARIANT,
        _ => EXIT_USAGE,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_to_output<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli).unwrap_or_else(|e| Output {
            stderr: format!("error: {e}\n"),
            code: exit_code(&e),
            ..Default::default()
        }),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                Output { stdout: rendered, ..Default::default() }
            } else {
                Output { stderr: rendered, code, ..Default::default() }
            }
        }
    }
}

/// Runs with the process arguments and writes to the standard streams.
pub fn run() -> i32 {
    let out = run_to_output(std::env::args_os());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    out.code
}
