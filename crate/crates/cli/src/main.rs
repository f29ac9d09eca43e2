//! `qb`: load, construct and verify crossed group-cograded Hopf quasigroups
//! and their Yetter-Drinfeld modules.
//!
//! Exit codes: 0 success, 1 failed axiom or construction error,
//! 2 unreadable or malformed input, 3 braiding requested on a quasimodule.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use qbraid::{
    antipode_inverse_laws, check_braiding_laws, check_conjugation_coherence, fixtures, io, loop_algebra_from_table,
    mirror, power_construction, validate_all, validate_hopf_quasigroup, validate_yd, yd_conjugate, yd_direct_sum,
    yd_tensor, CrossedGchq, Error, Field, HopfQuasigroup, Report, YDModule,
};

#[derive(Parser)]
#[command(name = "qb", version, about = "Exact verification of Hopf quasigroup structures")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Hq,
    Gchq,
    Yd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    LoopAlgebra,
    Power,
    Mirror,
    YdTensor,
    YdConjugate,
    DirectSum,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a structure file; exit 0 iff every required check passes.
    Validate {
        path: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
        /// Write the report as JSON to this path instead of text to stdout.
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record elapsed wall-clock time in the report.
        #[arg(long)]
        timing: bool,
    },
    /// Build a structure from inputs, re-validate it and write it out.
    Construct {
        #[arg(long, value_enum)]
        op: Op,
        /// loop-algebra: table; power: hq and action; mirror: gchq;
        /// yd-tensor and direct-sum: two modules; yd-conjugate: one module.
        inputs: Vec<PathBuf>,
        /// Conjugating grade for yd-conjugate.
        #[arg(long)]
        grade: Option<usize>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the braiding law suite on two or three Yetter-Drinfeld modules.
    BraidReport {
        a: PathBuf,
        b: PathBuf,
        c: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        timing: bool,
    },
    /// Write a bundled example; without a name, list them.
    Fixture {
        name: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// An error together with the exit code it maps to.
struct Failure {
    code: u8,
    error: anyhow::Error,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_)
            | Error::MalformedStructure(_)
            | Error::InvalidTable(_)
            | Error::InvalidField(_)
            | Error::IndexError { .. } => 2,
            Error::NotStrict(_) => 3,
            _ => 1,
        };
        Failure { code, error: e.into() }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(error: anyhow::Error) -> Self {
        Failure { code: 2, error }
    }
}

fn default_field() -> Result<Field, Failure> {
    match std::env::var("QB_FIELD") {
        Ok(s) => Ok(s.parse::<Field>().context("QB_FIELD")?),
        Err(_) => Ok(Field::Rational),
    }
}

fn load_hq(path: &Path, field: Field) -> Result<HopfQuasigroup, Failure> {
    Ok(io::hq_from_json(&io::read_json(path)?, field)?)
}

fn load_gchq(path: &Path, field: Field) -> Result<CrossedGchq, Failure> {
    Ok(io::gchq_from_json(&io::read_json(path)?, field)?)
}

fn load_yd(path: &Path, field: Field) -> Result<YDModule, Failure> {
    Ok(io::yd_from_json(&io::read_json(path)?, field, path.parent())?)
}

fn emit(report: &Report, json: Option<&Path>) -> Result<(), Failure> {
    match json {
        Some(path) => {
            std::fs::write(path, report.to_json() + "\n").with_context(|| format!("writing {}", path.display()))?;
            println!("{}", report.render_text().lines().last().unwrap_or_default());
        }
        None => print!("{}", report.render_text()),
    }
    Ok(())
}

fn validate(path: &Path, kind: Kind, json: Option<&Path>, timing: bool) -> Result<u8, Failure> {
    let field = default_field()?;
    let start = Instant::now();
    let mut report = match kind {
        Kind::Hq => {
            let h = load_hq(path, field)?;
            let mut r = validate_hopf_quasigroup(&h);
            r.extend(antipode_inverse_laws(&h));
            r
        }
        Kind::Gchq => validate_all(&load_gchq(path, field)?),
        Kind::Yd => validate_yd(&load_yd(path, field)?),
    };
    report.subject = format!("{} ({})", report.subject, path.display());
    if timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    emit(&report, json)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn arity(inputs: &[PathBuf], n: usize, op: &str) -> Result<(), Failure> {
    if inputs.len() != n {
        return Err(anyhow::anyhow!("{op} takes {n} input file(s), got {}", inputs.len()).into());
    }
    Ok(())
}

fn construct(op: Op, inputs: &[PathBuf], grade: Option<usize>, out: &Path) -> Result<u8, Failure> {
    let field = default_field()?;
    let value: Value = match op {
        Op::LoopAlgebra => {
            arity(inputs, 1, "loop-algebra")?;
            let table = io::table_from_json(&io::read_json(&inputs[0])?)?;
            let h = loop_algebra_from_table(&table, field)?;
            check(&validate_hopf_quasigroup(&h), "loop algebra")?;
            io::hq_to_json(&h)
        }
        Op::Power => {
            arity(inputs, 2, "power")?;
            let h = load_hq(&inputs[0], field)?;
            let action = io::action_from_json(&io::read_json(&inputs[1])?, &h)?;
            io::gchq_to_json(&power_construction(&h, &action)?)
        }
        Op::Mirror => {
            arity(inputs, 1, "mirror")?;
            io::gchq_to_json(&mirror(&load_gchq(&inputs[0], field)?)?)
        }
        Op::YdTensor => {
            arity(inputs, 2, "yd-tensor")?;
            io::yd_to_json(&yd_tensor(&load_yd(&inputs[0], field)?, &load_yd(&inputs[1], field)?)?)
        }
        Op::YdConjugate => {
            arity(inputs, 1, "yd-conjugate")?;
            let q = grade.ok_or_else(|| anyhow::anyhow!("yd-conjugate needs --grade"))?;
            io::yd_to_json(&yd_conjugate(&load_yd(&inputs[0], field)?, q)?)
        }
        Op::DirectSum => {
            arity(inputs, 2, "direct-sum")?;
            let sum = yd_direct_sum(&load_yd(&inputs[0], field)?, &load_yd(&inputs[1], field)?)?;
            check(&validate_yd(&sum.sum), "direct sum")?;
            io::yd_to_json(&sum.sum)
        }
    };
    io::write_json(out, &value)?;
    println!("wrote {}", out.display());
    Ok(0)
}

fn check(report: &Report, what: &str) -> Result<(), Failure> {
    match report.required_failures().next() {
        None => Ok(()),
        Some(c) => Err(Failure { code: 1, error: anyhow::anyhow!("{what} fails {} [{}]", c.id, c.instance) }),
    }
}

/// Composition conditions only make sense with a third module.
const TRIPLE_ONLY: &[&str] = &["BRAID-2.2-tensor-left", "BRAID-2.3-tensor-right", "BRAID-YBE"];

fn braid_report(a: &Path, b: &Path, c: Option<&Path>, json: Option<&Path>, timing: bool) -> Result<u8, Failure> {
    let field = default_field()?;
    let start = Instant::now();
    let v = load_yd(a, field)?;
    let mut w = load_yd(b, field)?;
    let mut x = match c {
        Some(path) => load_yd(path, field)?,
        None => w.clone(),
    };
    // share one base so module comparisons are cheap
    if *w.base() == *v.base() {
        w = rebase(&w, v.base());
    }
    if *x.base() == *v.base() {
        x = rebase(&x, v.base());
    }
    let fsum = yd_direct_sum(&v, &v)?;
    let gsum = yd_direct_sum(&w, &w)?;
    let mut report = check_braiding_laws(&v, &w, &x, &fsum.inclusions[0], &gsum.inclusions[1])?;
    if c.is_none() {
        report.checks.retain(|ch| !TRIPLE_ONLY.contains(&ch.id.as_str()));
    }
    let g = v.base().group();
    for s in g.elements() {
        for t in g.elements() {
            report.extend(check_conjugation_coherence(&v, &w, s, t)?);
        }
    }
    report.subject = format!("braiding laws ({}, {})", a.display(), b.display());
    if let Some(c) = c {
        report.subject = format!("braiding laws ({}, {}, {})", a.display(), b.display(), c.display());
    }
    if timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    emit(&report, json)?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn rebase(m: &YDModule, base: &Arc<CrossedGchq>) -> YDModule {
    YDModule::new(
        base.clone(),
        m.grade(),
        m.space().clone(),
        m.action().clone(),
        m.coactions().to_vec(),
        m.is_strict(),
    )
    .expect("same base, same shapes")
}

fn fixture(name: Option<&str>, out: Option<&Path>) -> Result<u8, Failure> {
    let Some(name) = name else {
        for n in fixtures::NAMES {
            println!("{n}");
        }
        return Ok(0);
    };
    let (kind, value) = fixtures::by_name(name, default_field()?)?;
    match out {
        Some(path) => {
            io::write_json(path, &value)?;
            println!("wrote {kind} fixture {name} to {}", path.display());
        }
        None => print!("{}", io::to_canonical_string(&value)),
    }
    Ok(0)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Validate { path, kind, json, timing } => validate(&path, kind, json.as_deref(), timing),
        Command::Construct { op, inputs, grade, out } => construct(op, &inputs, grade, &out),
        Command::BraidReport { a, b, c, json, timing } => braid_report(&a, &b, c.as_deref(), json.as_deref(), timing),
        Command::Fixture { name, out } => fixture(name.as_deref(), out.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure { code, error }) => {
            eprintln!("error: {error:#}");
            ExitCode::from(code)
        }
    }
}
