//! `rough` — tables, formula evaluation, and verification suites for the
//! rough-set semiring over a finite approximation space.
//!
//! Exit codes: 0 success / all checks passed; 1 suite failure; 2 input error;
//! 3 enumeration cap exceeded.

mod fixtures;
mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rough_core::{
    check_algebraic_axioms, check_boundary_remarks, check_dual_stone, check_lattice_laws,
    check_oracle_equivalence, check_remark4, check_stone, class_truth, classify,
    dual_pseudocomplement, dual_rel_pseudocomplement, eval_formula, parse_formula, random_space,
    rel_pseudocomplement, pseudocomplement, state_join, state_meet, truth_pair, validate_shard,
    world_valuation, ApproximationSpace, AtomSet, Error as CoreError, PropertyReport,
    RoughElement, Shard,
};

/// Wording of the cell-notation note emitted on every table.
pub(crate) const MAPPING_NOTE: &str = "cells are canonical representative sets: \
every member of each Full class plus the least atom of each Partial class";

const DEFAULT_CAP_U64: u64 = rough_core::DEFAULT_CAP as u64;

#[derive(Parser)]
#[command(
    name = "rough",
    version,
    about = "Rough-set semiring tables, bi-Heyting operators, and logic checks"
)]
struct Cli {
    /// Path to a JSON approximation-space description.
    #[arg(long, global = true)]
    space: Option<PathBuf>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Md)]
    format: Format,

    /// Upper bound on |T| for exhaustive commands.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP_U64)]
    cap: u64,

    /// Base seed for generated spaces.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// List every element of T with its approximations and representative.
    Enumerate,
    /// Emit an operation table over all of T.
    Table {
        /// Operation to tabulate.
        #[arg(long, value_enum)]
        op: OpArg,
    },
    /// Evaluate formulas at a world and report truth pairs.
    Eval {
        /// Comma-separated atoms of the world ("" for the empty set).
        #[arg(long)]
        world: String,
        /// Formula text; repeat the flag to evaluate several.
        #[arg(long = "formula", required = true)]
        formulas: Vec<String>,
    },
    /// Run a verification suite.
    Check {
        /// Suite to run.
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// World for the formal/kripke conformance suites.
        #[arg(long)]
        world: Option<String>,
        /// The two formulas for the formal/kripke conformance suites.
        #[arg(long = "formula")]
        formulas: Vec<String>,
        /// Run only shard k of n ("k/n") of a triple suite.
        #[arg(long)]
        shard: Option<String>,
        /// Also run the suite on this many seeded generated spaces.
        #[arg(long = "random-spaces")]
        random_spaces: Option<u64>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub(crate) enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OpArg {
    Join,
    Meet,
    Impl,
    Coimpl,
    Pseudo,
    Dualpseudo,
}

impl OpArg {
    fn name(self) -> &'static str {
        match self {
            OpArg::Join => "join",
            OpArg::Meet => "meet",
            OpArg::Impl => "impl",
            OpArg::Coimpl => "coimpl",
            OpArg::Pseudo => "pseudo",
            OpArg::Dualpseudo => "dualpseudo",
        }
    }

    fn is_binary(self) -> bool {
        !matches!(self, OpArg::Pseudo | OpArg::Dualpseudo)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Lattice,
    Stone,
    Dualstone,
    Boundary,
    Remark4,
    Algebraic,
    Oracle,
    Formal,
    Kripke,
    Fixtures,
}

impl SuiteArg {
    fn name(self) -> &'static str {
        match self {
            SuiteArg::Lattice => "lattice",
            SuiteArg::Stone => "stone",
            SuiteArg::Dualstone => "dualstone",
            SuiteArg::Boundary => "boundary",
            SuiteArg::Remark4 => "remark4",
            SuiteArg::Algebraic => "algebraic",
            SuiteArg::Oracle => "oracle",
            SuiteArg::Formal => "formal",
            SuiteArg::Kripke => "kripke",
            SuiteArg::Fixtures => "fixtures",
        }
    }

    fn is_law_suite(self) -> bool {
        !matches!(self, SuiteArg::Formal | SuiteArg::Kripke | SuiteArg::Fixtures)
    }

    fn takes_shard(self) -> bool {
        matches!(self, SuiteArg::Lattice | SuiteArg::Algebraic)
    }
}

/// A failed run, carrying the process exit code it maps to.
pub(crate) enum Failure {
    /// Exit 1: a verification suite found real failures.
    Suite(String),
    /// Exit 2: bad input (files, flags, formulas, worlds).
    Input(String),
    /// Exit 3: the enumeration cap was exceeded.
    Cap(String),
}

impl From<CoreError> for Failure {
    fn from(e: CoreError) -> Self {
        match &e {
            CoreError::SizeLimitExceeded { .. } => Failure::Cap(e.to_string()),
            CoreError::NoExtremum(_) => Failure::Suite(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (text, outcome) = match run(&cli) {
        Ok(pair) => pair,
        Err(f) => return fail(f),
    };
    if let Err(f) = write_output(&cli.out, &text) {
        return fail(f);
    }
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    let (code, msg) = match f {
        Failure::Suite(m) => (1u8, m),
        Failure::Input(m) => (2, m),
        Failure::Cap(m) => (3, m),
    };
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn write_output(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Dispatches a parsed invocation to (report text, pass/fail outcome).
///
/// The text is produced even when the outcome is a failure so that reports
/// land on stdout before the nonzero exit.
fn run(cli: &Cli) -> Result<(String, Result<(), Failure>), Failure> {
    match &cli.command {
        Cmd::Enumerate => Ok((cmd_enumerate(cli)?, Ok(()))),
        Cmd::Table { op } => Ok((cmd_table(cli, *op)?, Ok(()))),
        Cmd::Eval { world, formulas } => Ok((cmd_eval(cli, world, formulas)?, Ok(()))),
        Cmd::Check {
            suite,
            world,
            formulas,
            shard,
            random_spaces,
        } => cmd_check(cli, *suite, world.as_deref(), formulas, shard.as_deref(), *random_spaces),
    }
}

fn load_space(cli: &Cli) -> Result<ApproximationSpace, Failure> {
    let path = cli
        .space
        .as_ref()
        .ok_or_else(|| Failure::Input("--space is required for this command".into()))?;
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(ApproximationSpace::from_json(&text)?)
}

fn parse_world(space: &ApproximationSpace, text: &str) -> Result<AtomSet, Failure> {
    Ok(space.parse_atom_set(
        text.split(',')
            .map(str::trim)
            .filter(|piece| !piece.is_empty()),
    )?)
}

/// Renders an element as its canonical representative set.
fn rep_str(space: &ApproximationSpace, e: &RoughElement) -> Result<String, Failure> {
    Ok(space.render_set(&space.representative(e)?))
}

fn cmd_enumerate(cli: &Cli) -> Result<String, Failure> {
    let space = load_space(cli)?;
    let elems = space.enumerate_t(cli.cap as u128)?;
    let mut rows = Vec::with_capacity(elems.len());
    for (i, e) in elems.iter().enumerate() {
        let pair = space.approx_pair(e)?;
        rows.push(vec![
            i.to_string(),
            space.render_states(e),
            space.render_set(&pair.lower),
            space.render_set(&pair.upper),
            rep_str(&space, e)?,
        ]);
    }
    let sheet = render::Sheet {
        note: MAPPING_NOTE.to_string(),
        meta: vec![
            ("space".into(), space.describe()),
            ("size".into(), rows.len().to_string()),
        ],
        headers: ["index", "states", "lower", "upper", "representative"]
            .map(String::from)
            .to_vec(),
        rows,
    };
    Ok(sheet.render(cli.format))
}

fn cmd_table(cli: &Cli, op: OpArg) -> Result<String, Failure> {
    let space = load_space(cli)?;
    let elems = space.enumerate_t(cli.cap as u128)?;
    let labels = elems
        .iter()
        .map(|e| rep_str(&space, e))
        .collect::<Result<Vec<_>, _>>()?;

    let meta = vec![
        ("space".into(), space.describe()),
        ("op".into(), op.name().to_string()),
    ];
    let sheet = if op.is_binary() {
        let mut rows = Vec::with_capacity(elems.len());
        for (a, label) in elems.iter().zip(&labels) {
            let mut row = Vec::with_capacity(labels.len() + 1);
            row.push(label.clone());
            for b in &elems {
                let cell = match op {
                    OpArg::Join => state_join(&space, a, b)?,
                    OpArg::Meet => state_meet(&space, a, b)?,
                    OpArg::Impl => rel_pseudocomplement(&space, a, b)?,
                    OpArg::Coimpl => dual_rel_pseudocomplement(&space, a, b)?,
                    OpArg::Pseudo | OpArg::Dualpseudo => unreachable!("unary op in binary arm"),
                };
                row.push(rep_str(&space, &cell)?);
            }
            rows.push(row);
        }
        let mut headers = Vec::with_capacity(labels.len() + 1);
        headers.push(op.name().to_string());
        headers.extend(labels);
        render::Sheet {
            note: MAPPING_NOTE.to_string(),
            meta,
            headers,
            rows,
        }
    } else {
        let mut rows = Vec::with_capacity(elems.len());
        for (a, label) in elems.iter().zip(&labels) {
            let cell = match op {
                OpArg::Pseudo => pseudocomplement(&space, a)?,
                OpArg::Dualpseudo => dual_pseudocomplement(&space, a)?,
                _ => unreachable!("binary op in unary arm"),
            };
            rows.push(vec![label.clone(), rep_str(&space, &cell)?]);
        }
        render::Sheet {
            note: MAPPING_NOTE.to_string(),
            meta,
            headers: vec!["element".into(), op.name().to_string()],
            rows,
        }
    };
    Ok(sheet.render(cli.format))
}

fn cmd_eval(cli: &Cli, world: &str, formulas: &[String]) -> Result<String, Failure> {
    let space = load_space(cli)?;
    let world_set = parse_world(&space, world)?;
    let world_elem = space.canonicalize(&world_set)?;
    let v = world_valuation(&space, &world_elem)?;

    let bits = (0..space.atom_count())
        .map(|i| if v.bit(i) { "1" } else { "0" })
        .collect::<Vec<_>>()
        .join(",");
    let mut truths = Vec::with_capacity(space.class_count());
    for c in 0..space.class_count() {
        truths.push(if class_truth(&space, &v, c)? { "1" } else { "0" });
    }

    let mut rows = Vec::with_capacity(formulas.len());
    for text in formulas {
        let formula = parse_formula(text)?;
        let value = eval_formula(&space, &formula)?;
        let pair = truth_pair(&space, &v, &value)?;
        rows.push(vec![
            text.clone(),
            rep_str(&space, &value)?,
            space.render_states(&value),
            pair.to_string(),
            classify(pair).to_string(),
        ]);
    }

    let sheet = render::Sheet {
        note: MAPPING_NOTE.to_string(),
        meta: vec![
            ("space".into(), space.describe()),
            ("world".into(), rep_str(&space, &world_elem)?),
            ("valuation".into(), format!("{{{bits}}}")),
            ("class truths".into(), format!("({})", truths.join(","))),
        ],
        headers: ["formula", "value", "states", "pair", "verdict"]
            .map(String::from)
            .to_vec(),
        rows,
    };
    Ok(sheet.render(cli.format))
}

fn parse_shard(text: Option<&str>) -> Result<Shard, Failure> {
    let Some(text) = text else { return Ok(None) };
    let (k, n) = text
        .split_once('/')
        .ok_or_else(|| Failure::Input(format!("invalid shard `{text}`: expected k/n")))?;
    let parse = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|e| Failure::Input(format!("invalid shard `{text}`: {e}")))
    };
    let shard = Some((parse(k)?, parse(n)?));
    validate_shard(shard)?;
    Ok(shard)
}

#[allow(clippy::too_many_arguments)]
fn cmd_check(
    cli: &Cli,
    suite: SuiteArg,
    world: Option<&str>,
    formulas: &[String],
    shard: Option<&str>,
    random_spaces: Option<u64>,
) -> Result<(String, Result<(), Failure>), Failure> {
    let shard = parse_shard(shard)?;
    if shard.is_some() && !suite.takes_shard() {
        return Err(Failure::Input(format!(
            "--shard applies only to the lattice and algebraic suites, not `{}`",
            suite.name()
        )));
    }
    if suite.is_law_suite() {
        if world.is_some() || !formulas.is_empty() {
            return Err(Failure::Input(format!(
                "--world/--formula apply only to the formal and kripke suites, not `{}`",
                suite.name()
            )));
        }
        return check_laws(cli, suite, shard, random_spaces);
    }
    if random_spaces.is_some() {
        return Err(Failure::Input(format!(
            "--random-spaces does not apply to the `{}` suite",
            suite.name()
        )));
    }
    match suite {
        SuiteArg::Fixtures => {
            if world.is_some() || !formulas.is_empty() {
                return Err(Failure::Input(
                    "--world/--formula do not apply to the fixtures suite".into(),
                ));
            }
            let space = load_space(cli)?;
            let outcome = fixtures::run(&space, cli.cap as u128)?;
            let text = render::fixture_report(cli.format, &outcome);
            let implementation_side = outcome
                .mismatches
                .iter()
                .filter(|m| m.verdict != fixtures::VERDICT_FIXTURE)
                .count();
            let status = if implementation_side == 0 {
                Ok(())
            } else {
                Err(Failure::Suite(format!(
                    "{implementation_side} implementation-side fixture mismatches"
                )))
            };
            Ok((text, status))
        }
        SuiteArg::Formal | SuiteArg::Kripke => {
            let space = load_space(cli)?;
            let world = world.ok_or_else(|| {
                Failure::Input(format!("--world is required for the {} suite", suite.name()))
            })?;
            if formulas.len() != 2 {
                return Err(Failure::Input(format!(
                    "the {} suite takes exactly two --formula arguments (got {})",
                    suite.name(),
                    formulas.len()
                )));
            }
            let world_elem = space.canonicalize(&parse_world(&space, world)?)?;
            let phi = parse_formula(&formulas[0])?;
            let psi = parse_formula(&formulas[1])?;
            let report = match suite {
                SuiteArg::Formal => rough_core::formal_check(&space, &world_elem, &phi, &psi)?,
                _ => rough_core::kripke_check(&space, &world_elem, &phi, &psi, cli.cap as u128)?,
            };
            // Conformance clauses are diagnostics: violations are listed in
            // the report but never fail the run.
            let text = render::suite_reports(cli.format, suite.name(), &[report], true);
            Ok((text, Ok(())))
        }
        _ => unreachable!("law suites handled above"),
    }
}

fn check_laws(
    cli: &Cli,
    suite: SuiteArg,
    shard: Shard,
    random_spaces: Option<u64>,
) -> Result<(String, Result<(), Failure>), Failure> {
    let cap = cli.cap as u128;
    let mut reports: Vec<PropertyReport> = Vec::new();
    if cli.space.is_some() {
        let space = load_space(cli)?;
        reports.push(run_law_suite(suite, &space, cap, shard)?);
    }
    if let Some(n) = random_spaces {
        for i in 0..n {
            let space = random_space(cli.seed.wrapping_add(i));
            reports.push(run_law_suite(suite, &space, cap, shard)?);
        }
    }
    if reports.is_empty() {
        return Err(Failure::Input(
            "--space or --random-spaces is required for this suite".into(),
        ));
    }
    let text = render::suite_reports(cli.format, suite.name(), &reports, false);
    let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    let status = if failures == 0 {
        Ok(())
    } else {
        Err(Failure::Suite(format!("{failures} failed checks")))
    };
    Ok((text, status))
}

fn run_law_suite(
    suite: SuiteArg,
    space: &ApproximationSpace,
    cap: u128,
    shard: Shard,
) -> Result<PropertyReport, Failure> {
    Ok(match suite {
        SuiteArg::Lattice => check_lattice_laws(space, cap, shard)?,
        SuiteArg::Stone => check_stone(space, cap)?,
        SuiteArg::Dualstone => check_dual_stone(space, cap)?,
        SuiteArg::Boundary => check_boundary_remarks(space, cap)?,
        SuiteArg::Remark4 => check_remark4(space, cap)?,
        SuiteArg::Algebraic => check_algebraic_axioms(space, cap, shard)?,
        SuiteArg::Oracle => check_oracle_equivalence(space, cap)?,
        _ => unreachable!("not a law suite"),
    })
}
