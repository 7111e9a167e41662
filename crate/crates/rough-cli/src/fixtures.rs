//! Comparison of the implemented operators against the digitized reference
//! tables shipped in `fixtures/`.
//!
//! Every cell of every table whose space matches the loaded one is recomputed
//! with the closed-form operators. On a disagreement the brute-force oracle
//! adjudicates: if it sides with the implementation the reference cell is
//! reported as wrong (the digitized source contains known misprints); if it
//! sides with the reference, the implementation is wrong and the run fails.

use std::collections::{BTreeMap, BTreeSet};

use rough_core::{apply, brute_force_oracle, ApproximationSpace, OpKind, RoughElement};
use serde::{Deserialize, Serialize};

use crate::Failure;

/// The reference cell disagrees with both the closed form and the oracle.
pub(crate) const VERDICT_FIXTURE: &str = "fixture wrong";
/// The oracle sides with the reference cell against the closed form.
pub(crate) const VERDICT_IMPL: &str = "implementation wrong";
/// The oracle agrees with neither side.
pub(crate) const VERDICT_UNRESOLVED: &str = "unresolved";

const SPACES: &[(&str, &str)] = &[
    ("s4", include_str!("../../../spaces/s4.json")),
    ("s6", include_str!("../../../spaces/s6.json")),
];

const TABLES: &[(&str, &str)] = &[
    ("s4_pseudo", include_str!("../../../fixtures/s4_pseudo.json")),
    ("s4_dualpseudo", include_str!("../../../fixtures/s4_dualpseudo.json")),
    ("s4_impl", include_str!("../../../fixtures/s4_impl.json")),
    ("s4_coimpl", include_str!("../../../fixtures/s4_coimpl.json")),
    ("s6_pseudo", include_str!("../../../fixtures/s6_pseudo.json")),
    ("s6_dualpseudo", include_str!("../../../fixtures/s6_dualpseudo.json")),
    ("s6_impl", include_str!("../../../fixtures/s6_impl.json")),
    ("s6_coimpl", include_str!("../../../fixtures/s6_coimpl.json")),
];

/// One digitized table: row/column labels name atom sets via `labels`.
#[derive(Deserialize)]
struct FixtureFile {
    space: String,
    op: String,
    labels: BTreeMap<String, Vec<String>>,
    rows: Vec<String>,
    #[serde(default)]
    cols: Option<Vec<String>>,
    cells: Cells,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Cells {
    Unary(Vec<String>),
    Binary(Vec<Vec<String>>),
}

/// One cell where the reference table and the implementation disagree.
#[derive(Debug, Clone, Serialize)]
pub(crate) struct Mismatch {
    pub table: String,
    pub row: String,
    pub col: Option<String>,
    pub fixture: String,
    pub computed: String,
    pub oracle: String,
    pub verdict: &'static str,
}

/// Result of checking every applicable reference table.
#[derive(Debug, Serialize)]
pub(crate) struct FixtureOutcome {
    pub space: String,
    pub tables: Vec<String>,
    pub cells: u64,
    pub mismatches: Vec<Mismatch>,
}

/// Checks the loaded space against every embedded table for its family.
pub(crate) fn run(space: &ApproximationSpace, cap: u128) -> Result<FixtureOutcome, Failure> {
    let family = find_family(space)?;
    let mut outcome = FixtureOutcome {
        space: space.describe(),
        tables: Vec::new(),
        cells: 0,
        mismatches: Vec::new(),
    };
    for (name, text) in TABLES {
        let fx: FixtureFile = serde_json::from_str(text)
            .map_err(|e| Failure::Input(format!("embedded fixture {name} is corrupt: {e}")))?;
        if fx.space != family {
            continue;
        }
        outcome.tables.push((*name).to_string());
        check_table(space, cap, name, &fx, &mut outcome)?;
    }
    Ok(outcome)
}

/// Matches the loaded space against the built-in worked spaces structurally
/// (same atom names, same partition).
fn find_family(space: &ApproximationSpace) -> Result<&'static str, Failure> {
    for (name, text) in SPACES {
        let candidate = ApproximationSpace::from_json(text)
            .map_err(|e| Failure::Input(format!("embedded space {name} is corrupt: {e}")))?;
        if same_space(space, &candidate) {
            return Ok(name);
        }
    }
    Err(Failure::Input(
        "no digitized reference tables exist for this space; use one of the built-in worked spaces"
            .into(),
    ))
}

fn same_space(a: &ApproximationSpace, b: &ApproximationSpace) -> bool {
    fn atoms(s: &ApproximationSpace) -> BTreeSet<&str> {
        (0..s.atom_count()).map(|i| s.atom_name(i)).collect()
    }
    fn classes(s: &ApproximationSpace) -> BTreeSet<BTreeSet<&str>> {
        (0..s.class_count())
            .map(|c| s.class_members(c).iter().map(|&i| s.atom_name(i)).collect())
            .collect()
    }
    atoms(a) == atoms(b) && classes(a) == classes(b)
}

fn op_kind(name: &str, op: &str) -> Result<OpKind, Failure> {
    match op {
        "pseudo" => Ok(OpKind::Pseudo),
        "dualpseudo" => Ok(OpKind::DualPseudo),
        "impl" => Ok(OpKind::RelPseudo),
        "coimpl" => Ok(OpKind::DualRelPseudo),
        other => Err(Failure::Input(format!(
            "embedded fixture {name} names unknown op `{other}`"
        ))),
    }
}

fn element(
    space: &ApproximationSpace,
    fx: &FixtureFile,
    name: &str,
    label: &str,
) -> Result<RoughElement, Failure> {
    let atoms = fx.labels.get(label).ok_or_else(|| {
        Failure::Input(format!("embedded fixture {name} uses undefined label `{label}`"))
    })?;
    let set = space.parse_atom_set(atoms.iter().map(String::as_str))?;
    Ok(space.canonicalize(&set)?)
}

fn check_table(
    space: &ApproximationSpace,
    cap: u128,
    name: &str,
    fx: &FixtureFile,
    outcome: &mut FixtureOutcome,
) -> Result<(), Failure> {
    let kind = op_kind(name, &fx.op)?;
    match (&fx.cells, &fx.cols) {
        (Cells::Unary(cells), None) => {
            if cells.len() != fx.rows.len() {
                return Err(shape_error(name));
            }
            for (row_label, cell_label) in fx.rows.iter().zip(cells) {
                let a = element(space, fx, name, row_label)?;
                let want = element(space, fx, name, cell_label)?;
                let got = apply(space, kind, &a, None)?;
                outcome.cells += 1;
                if got != want {
                    outcome.mismatches.push(judge(
                        space, cap, kind, name, row_label, None, &a, None, &got, &want,
                    )?);
                }
            }
        }
        (Cells::Binary(grid), Some(cols)) => {
            if grid.len() != fx.rows.len() || grid.iter().any(|r| r.len() != cols.len()) {
                return Err(shape_error(name));
            }
            for (row_label, cell_row) in fx.rows.iter().zip(grid) {
                let a = element(space, fx, name, row_label)?;
                for (col_label, cell_label) in cols.iter().zip(cell_row) {
                    let b = element(space, fx, name, col_label)?;
                    let want = element(space, fx, name, cell_label)?;
                    let got = apply(space, kind, &a, Some(&b))?;
                    outcome.cells += 1;
                    if got != want {
                        outcome.mismatches.push(judge(
                            space,
                            cap,
                            kind,
                            name,
                            row_label,
                            Some(col_label),
                            &a,
                            Some(&b),
                            &got,
                            &want,
                        )?);
                    }
                }
            }
        }
        _ => return Err(shape_error(name)),
    }
    Ok(())
}

fn shape_error(name: &str) -> Failure {
    Failure::Input(format!(
        "embedded fixture {name} has inconsistent rows/cols/cells shape"
    ))
}

/// Adjudicates one disagreeing cell with the brute-force oracle.
#[allow(clippy::too_many_arguments)]
fn judge(
    space: &ApproximationSpace,
    cap: u128,
    kind: OpKind,
    table: &str,
    row: &str,
    col: Option<&str>,
    a: &RoughElement,
    b: Option<&RoughElement>,
    got: &RoughElement,
    want: &RoughElement,
) -> Result<Mismatch, Failure> {
    let oracle = brute_force_oracle(space, kind, a, b, cap)?;
    let verdict = if oracle == *got {
        VERDICT_FIXTURE
    } else if oracle == *want {
        VERDICT_IMPL
    } else {
        VERDICT_UNRESOLVED
    };
    let rep = |e: &RoughElement| -> Result<String, Failure> {
        Ok(space.render_set(&space.representative(e)?))
    };
    Ok(Mismatch {
        table: table.to_string(),
        row: row.to_string(),
        col: col.map(str::to_string),
        fixture: rep(want)?,
        computed: rep(got)?,
        oracle: rep(&oracle)?,
        verdict,
    })
}
