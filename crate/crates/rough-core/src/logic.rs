//! Formulas over a rough-set algebra: syntax, evaluation, truth pairs, and
//! the formal and order-theoretic (Kripke-style) satisfaction checks.
//!
//! Formula constants denote rough sets (atoms stand for singleton subsets,
//! bracket literals for arbitrary subsets), and connectives evaluate to the
//! algebra operations: `\/` and `/\` are join and meet, `->` and `<-` the
//! relative and dual relative pseudocomplement, postfix `*` and `+` the
//! pseudocomplement and its dual.
//!
//! A world is itself a rough set. It induces a valuation (an atom is true
//! iff it lies in the world's canonical representative), each class gets the
//! product of its atoms' bits, and a formula value gets the truth pair
//! (definite bit over `Full` classes, possible bit over `Full`/`Partial`
//! classes). Satisfaction means truth pair `(1,1)`.
//!
//! [`formal_check`] and [`kripke_check`] test, clause by clause, whether the
//! two published satisfaction definitions agree with that reading at a given
//! world. Violations are reported, not fatal: several clauses genuinely
//! disagree with the `(1,1)` convention at specific worlds, and the reports
//! make that visible.

use std::fmt;

use crate::biheyting::{
    dual_pseudocomplement, dual_rel_pseudocomplement, pseudocomplement, rel_pseudocomplement,
    Failure, PropertyReport,
};
use crate::error::{Error, Result};
use crate::praba::{state_join, state_meet};
use crate::space::{ApproximationSpace, AtomSet, ClassState, RoughElement};

/// Abstract syntax of formulas.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    /// `EMPTY`, the bottom constant.
    Empty,
    /// `UNIV`, the top constant.
    Univ,
    /// A named atom, denoting the singleton subset containing it.
    Atom(String),
    /// A bracket literal `[x1,x3]`, denoting the listed subset.
    Subset(Vec<String>),
    /// `f \/ g`: join.
    Join(Box<Formula>, Box<Formula>),
    /// `f /\ g`: meet.
    Meet(Box<Formula>, Box<Formula>),
    /// `f -> g`: relative pseudocomplement.
    Impl(Box<Formula>, Box<Formula>),
    /// `f <- g`: dual relative pseudocomplement.
    CoImpl(Box<Formula>, Box<Formula>),
    /// `f*`: pseudocomplement.
    Pseudo(Box<Formula>),
    /// `f+`: dual pseudocomplement.
    DualPseudo(Box<Formula>),
}

impl Formula {
    /// Checks that every atom mentioned by the formula exists in `space`.
    pub fn bind(&self, space: &ApproximationSpace) -> Result<()> {
        match self {
            Formula::Empty | Formula::Univ => Ok(()),
            Formula::Atom(a) => space.atom_index(a).map(|_| ()),
            Formula::Subset(list) => {
                for a in list {
                    space.atom_index(a)?;
                }
                Ok(())
            }
            Formula::Join(l, r)
            | Formula::Meet(l, r)
            | Formula::Impl(l, r)
            | Formula::CoImpl(l, r) => {
                l.bind(space)?;
                r.bind(space)
            }
            Formula::Pseudo(f) | Formula::DualPseudo(f) => f.bind(space),
        }
    }
}

// Precedence levels used by both the parser shape and the printer:
// coimpl 0 < impl 1 < join 2 < meet 3 < postfix 4 < primary 5.
fn level(f: &Formula) -> u8 {
    match f {
        Formula::CoImpl(..) => 0,
        Formula::Impl(..) => 1,
        Formula::Join(..) => 2,
        Formula::Meet(..) => 3,
        Formula::Pseudo(..) | Formula::DualPseudo(..) => 4,
        _ => 5,
    }
}

fn fmt_prec(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if level(f) < min {
        out.write_str("(")?;
        fmt_prec(f, 0, out)?;
        out.write_str(")")?;
        return Ok(());
    }
    match f {
        Formula::Empty => out.write_str("EMPTY"),
        Formula::Univ => out.write_str("UNIV"),
        Formula::Atom(a) => out.write_str(a),
        Formula::Subset(list) => write!(out, "[{}]", list.join(",")),
        Formula::CoImpl(l, r) => {
            fmt_prec(l, 0, out)?;
            out.write_str(" <- ")?;
            fmt_prec(r, 1, out)
        }
        Formula::Impl(l, r) => {
            fmt_prec(l, 2, out)?;
            out.write_str(" -> ")?;
            fmt_prec(r, 1, out)
        }
        Formula::Join(l, r) => {
            fmt_prec(l, 2, out)?;
            out.write_str(r" \/ ")?;
            fmt_prec(r, 3, out)
        }
        Formula::Meet(l, r) => {
            fmt_prec(l, 3, out)?;
            out.write_str(r" /\ ")?;
            fmt_prec(r, 4, out)
        }
        Formula::Pseudo(g) => {
            fmt_prec(g, 4, out)?;
            out.write_str("*")
        }
        Formula::DualPseudo(g) => {
            fmt_prec(g, 4, out)?;
            out.write_str("+")
        }
    }
}

impl fmt::Display for Formula {
    /// Prints with minimal parentheses; `parse_formula` inverts it exactly.
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_prec(self, 0, out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Arrow,
    BackArrow,
    Or,
    And,
    Star,
    Plus,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Comma,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        if b.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let two = if i + 1 < bytes.len() {
            &bytes[i..i + 2]
        } else {
            &bytes[i..i + 1]
        };
        let (tok, len) = match two {
            b"->" => (Tok::Arrow, 2),
            b"<-" => (Tok::BackArrow, 2),
            br"\/" => (Tok::Or, 2),
            br"/\" => (Tok::And, 2),
            _ => match b {
                b'*' => (Tok::Star, 1),
                b'+' => (Tok::Plus, 1),
                b'(' => (Tok::LParen, 1),
                b')' => (Tok::RParen, 1),
                b'[' => (Tok::LBracket, 1),
                b']' => (Tok::RBracket, 1),
                b',' => (Tok::Comma, 1),
                c if c.is_ascii_alphabetic() || c == b'_' => {
                    let start = i;
                    let mut j = i + 1;
                    while j < bytes.len()
                        && (bytes[j].is_ascii_alphanumeric() || bytes[j] == b'_')
                    {
                        j += 1;
                    }
                    (Tok::Ident(text[start..j].to_string()), j - i)
                }
                c => {
                    return Err(Error::SyntaxError {
                        pos: i,
                        msg: format!("unexpected character `{}`", c as char),
                    })
                }
            },
        };
        out.push((i, tok));
        i += len;
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.tokens
            .get(self.pos)
            .map(|(p, _)| *p)
            .unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::SyntaxError {
            pos: self.here(),
            msg: msg.into(),
        }
    }

    fn coimpl(&mut self) -> Result<Formula> {
        let mut lhs = self.impl_()?;
        while self.peek() == Some(&Tok::BackArrow) {
            self.bump();
            let rhs = self.impl_()?;
            lhs = Formula::CoImpl(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn impl_(&mut self) -> Result<Formula> {
        let lhs = self.join()?;
        if self.peek() == Some(&Tok::Arrow) {
            self.bump();
            let rhs = self.impl_()?;
            return Ok(Formula::Impl(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn join(&mut self) -> Result<Formula> {
        let mut lhs = self.meet()?;
        while self.peek() == Some(&Tok::Or) {
            self.bump();
            let rhs = self.meet()?;
            lhs = Formula::Join(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn meet(&mut self) -> Result<Formula> {
        let mut lhs = self.postfix()?;
        while self.peek() == Some(&Tok::And) {
            self.bump();
            let rhs = self.postfix()?;
            lhs = Formula::Meet(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn postfix(&mut self) -> Result<Formula> {
        let mut f = self.primary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    f = Formula::Pseudo(Box::new(f));
                }
                Some(Tok::Plus) => {
                    self.bump();
                    f = Formula::DualPseudo(Box::new(f));
                }
                _ => return Ok(f),
            }
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek() {
            Some(Tok::Ident(_)) => match self.bump() {
                Some(Tok::Ident(name)) => Ok(name),
                _ => unreachable!(),
            },
            _ => Err(self.err("expected an atom name")),
        }
    }

    fn primary(&mut self) -> Result<Formula> {
        match self.peek() {
            Some(Tok::Ident(name)) => {
                let f = match name.as_str() {
                    "EMPTY" => Formula::Empty,
                    "UNIV" => Formula::Univ,
                    other => Formula::Atom(other.to_string()),
                };
                self.bump();
                Ok(f)
            }
            Some(Tok::LBracket) => {
                self.bump();
                let mut atoms = vec![self.ident()?];
                while self.peek() == Some(&Tok::Comma) {
                    self.bump();
                    atoms.push(self.ident()?);
                }
                if self.peek() != Some(&Tok::RBracket) {
                    return Err(self.err("expected `]` or `,`"));
                }
                self.bump();
                Ok(Formula::Subset(atoms))
            }
            Some(Tok::LParen) => {
                self.bump();
                let f = self.coimpl()?;
                if self.peek() != Some(&Tok::RParen) {
                    return Err(self.err("expected `)`"));
                }
                self.bump();
                Ok(f)
            }
            _ => Err(self.err("expected a formula")),
        }
    }
}

/// Parses formula text. The grammar, loosest to tightest binding:
/// `<-` (left-associative), `->` (right-associative), `\/`, `/\`, postfix
/// `*`/`+`, and primaries (atoms, `EMPTY`, `UNIV`, `[x1,x2]` subset
/// literals, parentheses). Whitespace is insignificant. `EMPTY` and `UNIV`
/// are reserved words and cannot name atoms in formulas.
pub fn parse_formula(text: &str) -> Result<Formula> {
    let tokens = lex(text)?;
    let mut p = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let f = p.coimpl()?;
    if p.peek().is_some() {
        return Err(p.err("expected end of input"));
    }
    Ok(f)
}

/// Evaluates a formula to its algebraic value over `space`.
pub fn eval_formula(space: &ApproximationSpace, f: &Formula) -> Result<RoughElement> {
    match f {
        Formula::Empty => Ok(space.bottom()),
        Formula::Univ => Ok(space.top()),
        Formula::Atom(a) => {
            let set: AtomSet = [space.atom_index(a)?].into_iter().collect();
            space.canonicalize(&set)
        }
        Formula::Subset(list) => {
            let mut set = AtomSet::new();
            for a in list {
                set.insert(space.atom_index(a)?);
            }
            space.canonicalize(&set)
        }
        Formula::Join(l, r) => state_join(
            space,
            &eval_formula(space, l)?,
            &eval_formula(space, r)?,
        ),
        Formula::Meet(l, r) => state_meet(
            space,
            &eval_formula(space, l)?,
            &eval_formula(space, r)?,
        ),
        Formula::Impl(l, r) => rel_pseudocomplement(
            space,
            &eval_formula(space, l)?,
            &eval_formula(space, r)?,
        ),
        Formula::CoImpl(l, r) => dual_rel_pseudocomplement(
            space,
            &eval_formula(space, l)?,
            &eval_formula(space, r)?,
        ),
        Formula::Pseudo(g) => pseudocomplement(space, &eval_formula(space, g)?),
        Formula::DualPseudo(g) => dual_pseudocomplement(space, &eval_formula(space, g)?),
    }
}

/// One truth bit per atom of the universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthValuation {
    bits: Vec<bool>,
}

impl TruthValuation {
    /// Wraps explicit bits, one per atom in universe order.
    pub fn from_bits(space: &ApproximationSpace, bits: Vec<bool>) -> Result<Self> {
        if bits.len() != space.atom_count() {
            return Err(Error::SpaceMismatch);
        }
        Ok(TruthValuation { bits })
    }

    /// The bit of atom `i`.
    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }
}

/// The valuation induced by a world: an atom is true iff it belongs to the
/// world's canonical representative.
pub fn world_valuation(
    space: &ApproximationSpace,
    world: &RoughElement,
) -> Result<TruthValuation> {
    let rep = space.representative(world)?;
    Ok(TruthValuation {
        bits: (0..space.atom_count()).map(|i| rep.contains(&i)).collect(),
    })
}

/// The truth of class `c` under `v`: the product of its members' bits.
pub fn class_truth(space: &ApproximationSpace, v: &TruthValuation, c: usize) -> Result<bool> {
    if v.bits.len() != space.atom_count() || c >= space.class_count() {
        return Err(Error::SpaceMismatch);
    }
    Ok(space.class_members(c).iter().all(|&i| v.bit(i)))
}

/// A definite/possible truth bit pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruthPair {
    /// Max class truth over the `Full` classes (0 when there are none).
    pub lower: bool,
    /// Max class truth over the `Full` and `Partial` classes together.
    pub upper: bool,
}

impl fmt::Display for TruthPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lower as u8, self.upper as u8)
    }
}

/// The three satisfaction classes a truth pair can fall into.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatClass {
    /// Pair `(1,1)`.
    Satisfiable,
    /// Pair `(0,1)`.
    PossiblySatisfiable,
    /// Pair `(0,0)`.
    NotSatisfiable,
}

impl fmt::Display for SatClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SatClass::Satisfiable => f.write_str("satisfiable"),
            SatClass::PossiblySatisfiable => f.write_str("possibly satisfiable"),
            SatClass::NotSatisfiable => f.write_str("not satisfiable"),
        }
    }
}

/// The truth pair of element `e` under valuation `v`.
pub fn truth_pair(
    space: &ApproximationSpace,
    v: &TruthValuation,
    e: &RoughElement,
) -> Result<TruthPair> {
    space.check_element(e)?;
    if v.bits.len() != space.atom_count() {
        return Err(Error::SpaceMismatch);
    }
    let mut lower = false;
    let mut upper = false;
    for c in 0..space.class_count() {
        let truth = class_truth(space, v, c)?;
        match e.state(c) {
            ClassState::Full => {
                lower |= truth;
                upper |= truth;
            }
            ClassState::Partial => upper |= truth,
            ClassState::Empty => {}
        }
    }
    Ok(TruthPair { lower, upper })
}

/// Maps a truth pair to its satisfaction class. A definite bit always counts
/// as satisfiable (the pair `(1,0)` cannot arise from [`truth_pair`]).
pub fn classify(p: TruthPair) -> SatClass {
    match (p.lower, p.upper) {
        (true, _) => SatClass::Satisfiable,
        (false, true) => SatClass::PossiblySatisfiable,
        (false, false) => SatClass::NotSatisfiable,
    }
}

/// Satisfaction: the truth pair is `(1,1)`.
pub fn satisfies(
    space: &ApproximationSpace,
    v: &TruthValuation,
    e: &RoughElement,
) -> Result<bool> {
    let p = truth_pair(space, v, e)?;
    Ok(p.lower && p.upper)
}

/// All elements `y` with `e ≤ y`, in enumeration order (includes `e`).
pub fn rough_upset(
    space: &ApproximationSpace,
    e: &RoughElement,
    cap: u128,
) -> Result<Vec<RoughElement>> {
    space.check_element(e)?;
    Ok(space
        .enumerate_t(cap)?
        .into_iter()
        .filter(|y| space.leq_unchecked(e, y))
        .collect())
}

/// All elements `y` with `y ≤ e`, in enumeration order (includes `e`).
pub fn rough_downset(
    space: &ApproximationSpace,
    e: &RoughElement,
    cap: u128,
) -> Result<Vec<RoughElement>> {
    space.check_element(e)?;
    Ok(space
        .enumerate_t(cap)?
        .into_iter()
        .filter(|y| space.leq_unchecked(y, e))
        .collect())
}

struct ClauseLog<'a> {
    report: PropertyReport,
    space: &'a ApproximationSpace,
    world: String,
}

impl<'a> ClauseLog<'a> {
    fn new(suite: &str, space: &'a ApproximationSpace, world: &RoughElement) -> Result<Self> {
        Ok(ClauseLog {
            report: PropertyReport {
                suite: suite.to_string(),
                space: space.describe(),
                checked: 0,
                failures: Vec::new(),
            },
            space,
            world: space.render_set(&space.representative(world)?),
        })
    }

    fn record(&mut self, clause: &str, subject: String, lhs: bool, rhs: bool) {
        self.report.checked += 1;
        if lhs != rhs {
            self.report.failures.push(Failure {
                inputs: vec![
                    format!("clause {clause}"),
                    subject,
                    format!("world={}", self.world),
                ],
                expected: format!("right-hand side = {rhs}"),
                actual: format!("satisfaction = {lhs}"),
            });
        }
    }

    fn rep(&self, e: &RoughElement) -> String {
        self.space
            .render_set(&self.space.representative(e).expect("valid element"))
    }
}

/// Checks the eight clauses of the formal satisfaction definition at one
/// world, reading satisfaction as truth pair `(1,1)`. Each clause becomes a
/// biconditional check; disagreements land in `failures` (they are
/// diagnostics, not suite errors — some clauses provably disagree with the
/// `(1,1)` reading at some worlds, e.g. the atomic clause requires the pair
/// `(0,1)` and the top clause fails at the bottom world).
///
/// Clause order: 1 top/bottom, 2 atoms, 3 join, 4 meet, 5 pseudocomplement,
/// 6 dual pseudocomplement, 7 implication, 8 co-implication.
pub fn formal_check(
    space: &ApproximationSpace,
    world: &RoughElement,
    phi: &Formula,
    psi: &Formula,
) -> Result<PropertyReport> {
    space.check_element(world)?;
    let v = world_valuation(space, world)?;
    let val_phi = eval_formula(space, phi)?;
    let val_psi = eval_formula(space, psi)?;
    let sat = |e: &RoughElement| satisfies(space, &v, e);
    let mut log = ClauseLog::new("formal", space, world)?;

    // Clause 1: the top constant is satisfied, the bottom is not.
    log.record("1", "UNIV".into(), sat(&space.top())?, true);
    log.record("1", "EMPTY".into(), sat(&space.bottom())?, false);

    // Clause 2: an atom is satisfied iff its truth pair is (0,1).
    for i in 0..space.atom_count() {
        let set: AtomSet = [i].into_iter().collect();
        let elem = space.canonicalize(&set)?;
        let pair = truth_pair(space, &v, &elem)?;
        log.record(
            "2",
            format!("atom {}", space.atom_name(i)),
            sat(&elem)?,
            pair == TruthPair { lower: false, upper: true },
        );
    }

    // Clause 3: phi \/ psi is satisfied iff either side is.
    let join = state_join(space, &val_phi, &val_psi)?;
    log.record(
        "3",
        format!("{phi} \\/ {psi}"),
        sat(&join)?,
        sat(&val_phi)? || sat(&val_psi)?,
    );

    // Clause 4: phi /\ psi is satisfied iff both sides are.
    let meet = state_meet(space, &val_phi, &val_psi)?;
    log.record(
        "4",
        format!("{phi} /\\ {psi}"),
        sat(&meet)?,
        sat(&val_phi)? && sat(&val_psi)?,
    );

    // Clause 5: f* is satisfied iff f is not.
    for (f, val) in [(phi, &val_phi), (psi, &val_psi)] {
        let star = pseudocomplement(space, val)?;
        log.record("5", format!("({f})*"), sat(&star)?, !sat(val)?);
    }

    // Clause 6: f+ is satisfied iff f is not.
    for (f, val) in [(phi, &val_phi), (psi, &val_psi)] {
        let plus = dual_pseudocomplement(space, val)?;
        log.record("6", format!("({f})+"), sat(&plus)?, !sat(val)?);
    }

    // Clause 7: phi -> psi is satisfied iff phi is not or psi is.
    let imp = rel_pseudocomplement(space, &val_phi, &val_psi)?;
    log.record(
        "7",
        format!("({phi}) -> ({psi})"),
        sat(&imp)?,
        !sat(&val_phi)? || sat(&val_psi)?,
    );

    // Clause 8: phi <- psi is satisfied iff phi is and psi is not.
    let coimp = dual_rel_pseudocomplement(space, &val_phi, &val_psi)?;
    log.record(
        "8",
        format!("({phi}) <- ({psi})"),
        sat(&coimp)?,
        sat(&val_phi)? && !sat(&val_psi)?,
    );

    Ok(log.report)
}

/// Checks the eight clauses of the order-theoretic satisfaction definition
/// at one world: the local clauses quantify nothing, while `->` and `*` look
/// up through every world above this one and `<-` and `+` look down through
/// every world below, each world inducing its own valuation. As with
/// [`formal_check`], disagreements are reported, not fatal.
///
/// Clause order: 1 top/bottom, 2 atoms, 3 join, 4 meet, 5 implication
/// (upset), 6 co-implication (downset), 7 pseudocomplement (upset), 8 dual
/// pseudocomplement (downset).
pub fn kripke_check(
    space: &ApproximationSpace,
    world: &RoughElement,
    phi: &Formula,
    psi: &Formula,
    cap: u128,
) -> Result<PropertyReport> {
    space.check_element(world)?;
    let v = world_valuation(space, world)?;
    let val_phi = eval_formula(space, phi)?;
    let val_psi = eval_formula(space, psi)?;
    let sat_here = |e: &RoughElement| satisfies(space, &v, e);

    let upset = rough_upset(space, world, cap)?;
    let downset = rough_downset(space, world, cap)?;
    // Satisfaction of the two formula values at every world above/below,
    // under that world's own valuation.
    let sat_at = |w: &RoughElement, e: &RoughElement| -> Result<bool> {
        let vw = world_valuation(space, w)?;
        satisfies(space, &vw, e)
    };

    let mut log = ClauseLog::new("kripke", space, world)?;

    // Clause 1: top and bottom, locally.
    log.record("1", "UNIV".into(), sat_here(&space.top())?, true);
    log.record("1", "EMPTY".into(), sat_here(&space.bottom())?, false);

    // Clause 2: atoms, locally, against the (0,1) pair.
    for i in 0..space.atom_count() {
        let set: AtomSet = [i].into_iter().collect();
        let elem = space.canonicalize(&set)?;
        let pair = truth_pair(space, &v, &elem)?;
        log.record(
            "2",
            format!("atom {}", space.atom_name(i)),
            sat_here(&elem)?,
            pair == TruthPair { lower: false, upper: true },
        );
    }

    // Clause 3 and 4: join and meet, locally.
    let join = state_join(space, &val_phi, &val_psi)?;
    log.record(
        "3",
        format!("{phi} \\/ {psi}"),
        sat_here(&join)?,
        sat_here(&val_phi)? || sat_here(&val_psi)?,
    );
    let meet = state_meet(space, &val_phi, &val_psi)?;
    log.record(
        "4",
        format!("{phi} /\\ {psi}"),
        sat_here(&meet)?,
        sat_here(&val_phi)? && sat_here(&val_psi)?,
    );

    // Clause 5: phi -> psi holds iff every world above refutes phi or
    // satisfies psi.
    let imp = rel_pseudocomplement(space, &val_phi, &val_psi)?;
    let mut all_above = true;
    let mut witness = None;
    for y in &upset {
        if sat_at(y, &val_phi)? && !sat_at(y, &val_psi)? {
            all_above = false;
            witness = Some(log.rep(y));
            break;
        }
    }
    let subject = match witness {
        Some(w) => format!("({phi}) -> ({psi}), counterexample world {w}"),
        None => format!("({phi}) -> ({psi})"),
    };
    log.record("5", subject, sat_here(&imp)?, all_above);

    // Clause 6: phi <- psi holds iff some world below satisfies phi and
    // refutes psi.
    let coimp = dual_rel_pseudocomplement(space, &val_phi, &val_psi)?;
    let mut any_below = false;
    let mut witness = None;
    for y in &downset {
        if sat_at(y, &val_phi)? && !sat_at(y, &val_psi)? {
            any_below = true;
            witness = Some(log.rep(y));
            break;
        }
    }
    let subject = match witness {
        Some(w) => format!("({phi}) <- ({psi}), witness world {w}"),
        None => format!("({phi}) <- ({psi})"),
    };
    log.record("6", subject, sat_here(&coimp)?, any_below);

    // Clause 7: f* holds iff every world above refutes f.
    for (f, val) in [(phi, &val_phi), (psi, &val_psi)] {
        let star = pseudocomplement(space, val)?;
        let mut all_refute = true;
        let mut witness = None;
        for y in &upset {
            if sat_at(y, val)? {
                all_refute = false;
                witness = Some(log.rep(y));
                break;
            }
        }
        let subject = match witness {
            Some(w) => format!("({f})*, counterexample world {w}"),
            None => format!("({f})*"),
        };
        log.record("7", subject, sat_here(&star)?, all_refute);
    }

    // Clause 8: f+ holds iff some world below refutes f.
    for (f, val) in [(phi, &val_phi), (psi, &val_psi)] {
        let plus = dual_pseudocomplement(space, val)?;
        let mut any_refute = false;
        let mut witness = None;
        for y in &downset {
            if !sat_at(y, val)? {
                any_refute = true;
                witness = Some(log.rep(y));
                break;
            }
        }
        let subject = match witness {
            Some(w) => format!("({f})+, witness world {w}"),
            None => format!("({f})+"),
        };
        log.record("8", subject, sat_here(&plus)?, any_refute);
    }

    Ok(log.report)
}
