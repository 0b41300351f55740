//! Command-line front end. The binary is a thin wrapper around [`run`].
//!
//! Every command prints one record per row: aligned text by default, JSON
//! lines with `--json`. Monomials are printed in the input grammar, so any
//! output ideal can be pasted back into an ideal file.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::budget::Budget;
use crate::closure::closure_power_within;
use crate::decompose::{
    associated_primes, height, irreducible_decomposition, is_complete_intersection, minimal_primes,
};
use crate::error::{Error, Result};
use crate::formulas::{closure_formula, v_ci_power, Applicability, CIIdealSpec};
use crate::io::IdealDocument;
use crate::ring::{Exp, MonomialIdeal};
use crate::verify::{run_all, run_suite, VerifyOptions, SUITES};
use crate::vnum::{v_number_min, v_number_within};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "monideal", version, about = "Monomial ideals: decompositions, integral closures and v-numbers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit JSON lines instead of aligned text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seconds allowed per oracle call; rows that run out are marked skipped.
    #[arg(long, global = true, env = "MONIDEAL_BUDGET")]
    pub budget: Option<f64>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Degrees, height and shape flags.
    Info(IdealArgs),
    /// Irredundant irreducible decomposition.
    Decompose(IdealArgs),
    /// Associated primes.
    Ass(IdealArgs),
    /// Minimal generators of the closure of the n-th power.
    Closure {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long)]
        power: Option<u32>,
    },
    /// v-number with local values and witnesses.
    Vnum {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long)]
        power: Option<u32>,
        /// Work with the integral closure of the power.
        #[arg(long)]
        closure: bool,
    },
    /// v of powers and of their closures, with formula predictions.
    Table {
        #[command(flatten)]
        input: IdealArgs,
        #[arg(long, default_value_t = 3)]
        nmax: u32,
    },
    /// Run a named verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 20)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 3)]
        max_exp: Exp,
    },
}

#[derive(Args, Debug)]
pub struct IdealArgs {
    /// Ideal file (text or JSON); `-` reads stdin.
    pub file: PathBuf,
    /// Which ideal of the file; defaults to the first.
    #[arg(long)]
    pub ideal: Option<String>,
}

/// Ordered columns and rows. Values are JSON so both renderers share them.
#[derive(Clone, Debug, PartialEq)]
pub struct Output {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Value>>,
}

impl Output {
    fn new(columns: &[&'static str]) -> Self {
        Output { columns: columns.to_vec(), rows: Vec::new() }
    }

    fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_json_lines(&self) -> String {
        let mut s = String::new();
        for row in &self.rows {
            let obj: Map<String, Value> = self.columns.iter().map(|c| c.to_string()).zip(row.iter().cloned()).collect();
            s.push_str(&Value::Object(obj).to_string());
            s.push('\n');
        }
        s
    }

    pub fn to_text(&self) -> String {
        let cells: Vec<Vec<String>> = self.rows.iter().map(|r| r.iter().map(cell).collect()).collect();
        let mut width: Vec<usize> = self.columns.iter().map(|c| c.len()).collect();
        for r in &cells {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |items: Vec<&str>| {
            let padded: Vec<String> = items.iter().zip(&width).map(|(s, w)| format!("{s:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        let mut s = line(self.columns.clone());
        for r in &cells {
            s.push_str(&line(r.iter().map(String::as_str).collect()));
        }
        s
    }
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => "-".to_string(),
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// The command echo, its results, and the exit code they imply.
#[derive(Clone, Debug, PartialEq)]
pub struct RunReport {
    pub command: String,
    pub seed: Option<u64>,
    pub output: Output,
    pub exit_code: i32,
}

/// Parses `args` (including the program name), runs the command and writes
/// its output. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let start = Instant::now();
    match execute(&cli) {
        Ok(report) => {
            let body = if cli.json { report.output.to_json_lines() } else { report.output.to_text() };
            let _ = out.write_all(body.as_bytes());
            let _ = writeln!(err, "# {} in {:.3}s", report.command, start.elapsed().as_secs_f64());
            report.exit_code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            match e {
                Error::Violation(_) => EXIT_FAILED,
                _ => EXIT_USAGE,
            }
        }
    }
}

fn load(args: &IdealArgs) -> Result<(IdealDocument, String, MonomialIdeal)> {
    let text = if args.file.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Error::domain(format!("stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(&args.file).map_err(|e| Error::domain(format!("{}: {e}", args.file.display())))?
    };
    let doc = IdealDocument::parse(&text)?;
    let (name, ideal) = match &args.ideal {
        Some(n) => doc
            .ideals
            .iter()
            .find(|(k, _)| k == n)
            .cloned()
            .ok_or_else(|| Error::domain(format!("no ideal named {n:?}")))?,
        None => doc.ideals.first().cloned().ok_or_else(|| Error::domain("the file declares no ideal"))?,
    };
    Ok((doc, name, ideal))
}

fn gens_text(ideal: &MonomialIdeal) -> String {
    let r = ideal.ring();
    ideal.gens().iter().map(|g| r.format_monomial(g)).collect::<Vec<_>>().join(", ")
}

/// Runs an already parsed command line.
pub fn execute(cli: &Cli) -> Result<RunReport> {
    let budget_secs = cli.budget;
    let budget = || Budget::from_secs(budget_secs);
    let mut seed = None;
    let mut exit_code = EXIT_OK;
    let (command, output) = match &cli.command {
        Command::Info(a) => {
            let (_, name, i) = load(a)?;
            i.require_proper("info")?;
            let mut o =
                Output::new(&["ideal", "generators", "gens", "alpha", "delta", "height", "ci", "equigenerated"]);
            o.push(vec![
                json!(name),
                json!(gens_text(&i)),
                json!(i.num_gens()),
                json!(i.alpha()?),
                json!(i.delta()?),
                json!(height(&i)?),
                json!(is_complete_intersection(&i)?),
                json!(i.is_equigenerated()),
            ]);
            ("info", o)
        }
        Command::Decompose(a) => {
            let (_, _, i) = load(a)?;
            let mut o = Output::new(&["component", "radical"]);
            for c in irreducible_decomposition(&i)?.components() {
                o.push(vec![json!(gens_text(&c.to_ideal())), json!(gens_text(&c.radical().to_ideal()))]);
            }
            ("decompose", o)
        }
        Command::Ass(a) => {
            let (_, _, i) = load(a)?;
            let min = minimal_primes(&i)?;
            let mut o = Output::new(&["prime", "height", "minimal"]);
            for p in associated_primes(&i)? {
                o.push(vec![json!(gens_text(&p.to_ideal())), json!(p.height()), json!(min.contains(&p))]);
            }
            ("ass", o)
        }
        Command::Closure { input, power } => {
            let (doc, _, i) = load(input)?;
            let n = power.or(doc.power).unwrap_or(1);
            let bar = closure_power_within(&i, n, &budget())?;
            let mut o = Output::new(&["generator", "degree"]);
            for g in bar.gens() {
                o.push(vec![json!(bar.ring().format_monomial(g)), json!(g.degree())]);
            }
            ("closure", o)
        }
        Command::Vnum { input, power, closure } => {
            let (doc, _, i) = load(input)?;
            let n = power.or(doc.power).unwrap_or(1);
            let b = budget();
            let target = if *closure || doc.closure { closure_power_within(&i, n, &b)? } else { i.power(n)? };
            let report = v_number_within(&target, &b)?;
            let mut o = Output::new(&["prime", "local_v", "witness", "global"]);
            for (p, (d, w)) in &report.locals {
                o.push(vec![
                    json!(gens_text(&p.to_ideal())),
                    json!(d),
                    json!(target.ring().format_monomial(w.monomial())),
                    json!(*d == report.v),
                ]);
            }
            ("vnum", o)
        }
        Command::Table { input, nmax } => {
            let (_, _, i) = load(input)?;
            let (o, ok) = table(&i, *nmax, budget_secs)?;
            if !ok {
                exit_code = EXIT_FAILED;
            }
            ("table", o)
        }
        Command::Verify { suite, trials, seed: s, max_exp } => {
            seed = Some(*s);
            let opts = VerifyOptions {
                trials: *trials,
                seed: *s,
                max_exp: *max_exp,
                budget: budget_secs.map(std::time::Duration::from_secs_f64),
            };
            let reports = if suite == "all" { run_all(&opts)? } else { vec![run_suite(suite, &opts)?] };
            let mut o = Output::new(&["suite", "checks", "skipped", "failures", "status"]);
            for r in &reports {
                o.push(vec![
                    json!(r.suite),
                    json!(r.checks),
                    json!(r.skipped),
                    json!(r.failures.len()),
                    json!(if r.passed() { "PASS" } else { "FAIL" }),
                ]);
            }
            if reports.iter().any(|r| !r.passed()) {
                exit_code = EXIT_FAILED;
            }
            ("verify", o)
        }
    };
    Ok(RunReport { command: command.to_string(), seed, output, exit_code })
}

fn skip_on_budget<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(t) => Ok(Some(t)),
        Err(Error::BudgetExceeded(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn applicability_name(a: Applicability) -> &'static str {
    match a {
        Applicability::Exact => "exact",
        Applicability::UpperBound => "upper-bound",
        Applicability::LowerBound => "lower-bound",
        Applicability::NotApplicable => "not-applicable",
    }
}

/// Rows `n = 1..=nmax`; the flag is false if an applicable formula
/// disagrees with the oracle.
fn table(i: &MonomialIdeal, nmax: u32, secs: Option<f64>) -> Result<(Output, bool)> {
    i.require_proper("table")?;
    let ci = is_complete_intersection(i)?.then(|| CIIdealSpec::for_ideal(i)).transpose()?;
    let mut o =
        Output::new(&["n", "v_power", "v_closure", "gap", "formula_power", "formula_closure", "closure_kind", "match"]);
    let mut all_ok = true;
    for n in 1..=nmax {
        let b = Budget::from_secs(secs);
        let vp = skip_on_budget(i.power(n).and_then(|p| v_number_min(&p, &b)))?.map(|(v, _)| v);
        let b = Budget::from_secs(secs);
        let vc = skip_on_budget(closure_power_within(i, n, &b).and_then(|c| v_number_min(&c, &b)))?.map(|(v, _)| v);
        let fp = match &ci {
            Some(spec) => v_ci_power(spec, n)?.value,
            None => None,
        };
        let fc = closure_formula(i, n)?;
        let mut ok = None;
        let mut agree = |good: bool| ok = Some(ok.unwrap_or(true) && good);
        if let (Some(f), Some(v)) = (fp, vp) {
            agree(f == v);
        }
        if let (Some(f), Some(v)) = (fc.value, vc) {
            agree(match fc.applicability {
                Applicability::Exact => f == v,
                Applicability::UpperBound => v <= f,
                Applicability::LowerBound => v >= f,
                Applicability::NotApplicable => true,
            });
        }
        all_ok &= ok.unwrap_or(true);
        let gap = match (vp, vc) {
            (Some(p), Some(c)) => json!(p as i64 - c as i64),
            _ => Value::Null,
        };
        o.push(vec![
            json!(n),
            vp.map_or(Value::Null, |v| json!(v)),
            vc.map_or(Value::Null, |v| json!(v)),
            gap,
            fp.map_or(Value::Null, |v| json!(v)),
            fc.value.map_or(Value::Null, |v| json!(v)),
            json!(applicability_name(fc.applicability)),
            ok.map_or(Value::Null, |b| json!(b)),
        ]);
    }
    Ok((o, all_ok))
}

/// Names accepted by `verify`.
pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().copied().chain(["all"]).collect()
}
