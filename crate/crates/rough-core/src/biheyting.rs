//! The four bi-Heyting operators on `T`, a brute-force oracle for all of
//! them, and the exhaustive property suites.
//!
//! `T` under componentwise join/meet is a bounded distributive lattice, and
//! all four operators act classwise:
//!
//! * pseudocomplement `a*`: the largest `b` with `a ⊓ b = ⊥`;
//! * dual pseudocomplement `a⁺`: the least `b` with `a ⊔ b = ⊤`;
//! * relative pseudocomplement `a → b`: the largest `w` with `a ⊓ w ≤ b`;
//! * dual relative pseudocomplement `a ← b`: the least `v` with `a ≤ b ⊔ v`.
//!
//! [`brute_force_oracle`] recomputes each operator directly from its
//! defining extremum by scanning `T`, using only the order and the lattice
//! operations — an independent check on the closed forms.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::praba::{state_join_unchecked, state_meet_unchecked};
use crate::space::{ApproximationSpace, ClassState, RoughElement};

/// Default enumeration cap for `|T|`: `3^12`.
pub const DEFAULT_CAP: u128 = 531_441;

/// Ceiling on `|T|^3` for the triple-loop suites (lattice laws, algebraic
/// conditions).
pub const TRIPLE_WORK_LIMIT: u128 = 10_000_000;

/// Ceiling on the total scan work of the oracle-equivalence suite.
pub const ORACLE_WORK_LIMIT: u128 = 250_000_000;

/// Which of the four operators is meant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OpKind {
    /// `a*`
    Pseudo,
    /// `a⁺`
    DualPseudo,
    /// `a → b`
    RelPseudo,
    /// `a ← b`
    DualRelPseudo,
}

impl OpKind {
    /// True for the two operators that take a second argument.
    pub fn is_binary(self) -> bool {
        matches!(self, OpKind::RelPseudo | OpKind::DualRelPseudo)
    }

    /// Stable lowercase name used in reports and fixtures.
    pub fn name(self) -> &'static str {
        match self {
            OpKind::Pseudo => "pseudo",
            OpKind::DualPseudo => "dualpseudo",
            OpKind::RelPseudo => "impl",
            OpKind::DualRelPseudo => "coimpl",
        }
    }
}

fn star_state(s: ClassState) -> ClassState {
    match s {
        ClassState::Empty => ClassState::Full,
        ClassState::Partial | ClassState::Full => ClassState::Empty,
    }
}

fn plus_state(s: ClassState) -> ClassState {
    match s {
        ClassState::Empty | ClassState::Partial => ClassState::Full,
        ClassState::Full => ClassState::Empty,
    }
}

fn impl_state(a: ClassState, b: ClassState) -> ClassState {
    if a <= b {
        ClassState::Full
    } else {
        b
    }
}

fn coimpl_state(a: ClassState, b: ClassState) -> ClassState {
    if a <= b {
        ClassState::Empty
    } else {
        a
    }
}

/// `a*`: the pseudocomplement. Classwise: `Empty ↦ Full`, everything else
/// `↦ Empty`.
pub fn pseudocomplement(space: &ApproximationSpace, a: &RoughElement) -> Result<RoughElement> {
    space.check_element(a)?;
    Ok(map_unary(a, star_state))
}

/// `a⁺`: the dual pseudocomplement. Classwise: `Full ↦ Empty`, everything
/// else `↦ Full`.
pub fn dual_pseudocomplement(
    space: &ApproximationSpace,
    a: &RoughElement,
) -> Result<RoughElement> {
    space.check_element(a)?;
    Ok(map_unary(a, plus_state))
}

/// `a → b`: the relative pseudocomplement. Classwise: `Full` where
/// `a ≤ b`, otherwise the state of `b`.
pub fn rel_pseudocomplement(
    space: &ApproximationSpace,
    a: &RoughElement,
    b: &RoughElement,
) -> Result<RoughElement> {
    space.check_element(a)?;
    space.check_element(b)?;
    Ok(map_binary(a, b, impl_state))
}

/// `a ← b`: the dual relative pseudocomplement. Classwise: `Empty` where
/// `a ≤ b`, otherwise the state of `a`.
pub fn dual_rel_pseudocomplement(
    space: &ApproximationSpace,
    a: &RoughElement,
    b: &RoughElement,
) -> Result<RoughElement> {
    space.check_element(a)?;
    space.check_element(b)?;
    Ok(map_binary(a, b, coimpl_state))
}

/// Applies `kind` to the given operands; binary kinds require `b`.
pub fn apply(
    space: &ApproximationSpace,
    kind: OpKind,
    a: &RoughElement,
    b: Option<&RoughElement>,
) -> Result<RoughElement> {
    match kind {
        OpKind::Pseudo => pseudocomplement(space, a),
        OpKind::DualPseudo => dual_pseudocomplement(space, a),
        OpKind::RelPseudo => rel_pseudocomplement(space, a, b.ok_or(Error::SpaceMismatch)?),
        OpKind::DualRelPseudo => {
            dual_rel_pseudocomplement(space, a, b.ok_or(Error::SpaceMismatch)?)
        }
    }
}

fn map_unary(a: &RoughElement, f: fn(ClassState) -> ClassState) -> RoughElement {
    RoughElement::from_states(a.states().iter().map(|&s| f(s)).collect())
}

fn map_binary(
    a: &RoughElement,
    b: &RoughElement,
    f: fn(ClassState, ClassState) -> ClassState,
) -> RoughElement {
    RoughElement::from_states(
        a.states()
            .iter()
            .zip(b.states())
            .map(|(&x, &y)| f(x, y))
            .collect(),
    )
}

/// Recomputes `kind` from its defining extremum by scanning all of `T`:
/// collect every candidate satisfying the defining predicate, fold them with
/// join (for a maximum) or meet (for a minimum), and verify the fold is
/// itself a candidate. Fails with [`Error::NoExtremum`] if it is not — which
/// would contradict the uniqueness results and cannot happen on a valid
/// space.
pub fn brute_force_oracle(
    space: &ApproximationSpace,
    kind: OpKind,
    a: &RoughElement,
    b: Option<&RoughElement>,
    cap: u128,
) -> Result<RoughElement> {
    space.check_element(a)?;
    if let Some(b) = b {
        space.check_element(b)?;
    }
    if kind.is_binary() && b.is_none() {
        return Err(Error::SpaceMismatch);
    }
    let bottom = space.bottom();
    let top = space.top();
    let predicate = |w: &RoughElement| -> bool {
        match kind {
            OpKind::Pseudo => state_meet_unchecked(a, w) == bottom,
            OpKind::DualPseudo => state_join_unchecked(a, w) == top,
            OpKind::RelPseudo => {
                space.leq_unchecked(&state_meet_unchecked(a, w), b.unwrap())
            }
            OpKind::DualRelPseudo => {
                space.leq_unchecked(a, &state_join_unchecked(b.unwrap(), w))
            }
        }
    };
    let wants_max = matches!(kind, OpKind::Pseudo | OpKind::RelPseudo);

    let mut fold: Option<RoughElement> = None;
    for w in space.enumerate_t(cap)? {
        if predicate(&w) {
            fold = Some(match fold {
                None => w,
                Some(f) => {
                    if wants_max {
                        state_join_unchecked(&f, &w)
                    } else {
                        state_meet_unchecked(&f, &w)
                    }
                }
            });
        }
    }
    let kind_name = if wants_max { "maximum" } else { "minimum" };
    let folded = fold.ok_or(Error::NoExtremum(kind_name))?;
    // The fold bounds every candidate; it is the extremum iff it is itself a
    // candidate.
    if predicate(&folded) {
        Ok(folded)
    } else {
        Err(Error::NoExtremum(kind_name))
    }
}

/// One failed check inside a suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// The operands involved, rendered as canonical representative sets.
    pub inputs: Vec<String>,
    /// What the law required.
    pub expected: String,
    /// What was actually computed.
    pub actual: String,
}

/// Outcome of one property suite over one space.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    /// Name of the suite that ran.
    pub suite: String,
    /// Structural description of the space it ran over.
    pub space: String,
    /// Number of individual checks performed.
    pub checked: u64,
    /// Every check that failed; empty iff the suite passed.
    pub failures: Vec<Failure>,
}

impl PropertyReport {
    fn new(suite: &str, space: &ApproximationSpace) -> Self {
        PropertyReport {
            suite: suite.to_string(),
            space: space.describe(),
            checked: 0,
            failures: Vec::new(),
        }
    }

    /// True when no check failed.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn check(
        &mut self,
        ok: bool,
        inputs: impl FnOnce() -> Vec<String>,
        expected: impl FnOnce() -> String,
        actual: impl FnOnce() -> String,
    ) {
        self.checked += 1;
        if !ok {
            self.failures.push(Failure {
                inputs: inputs(),
                expected: expected(),
                actual: actual(),
            });
        }
    }
}

fn rep(space: &ApproximationSpace, e: &RoughElement) -> String {
    space.render_set(&space.representative(e).expect("element belongs to space"))
}

/// Which slice of a suite's outer loop to run: shard `k` of `n` (1-based)
/// keeps outer indices `i` with `i % n == k-1`. `None` runs everything.
pub type Shard = Option<(u64, u64)>;

fn shard_keeps(shard: Shard, index: usize) -> bool {
    match shard {
        None => true,
        Some((k, n)) => (index as u64) % n == k - 1,
    }
}

/// Validates a shard selector: `k/n` with `1 ≤ k ≤ n`.
pub fn validate_shard(shard: Shard) -> Result<()> {
    if let Some((k, n)) = shard {
        if n == 0 || k == 0 || k > n {
            return Err(Error::InvalidShard { k, n });
        }
    }
    Ok(())
}

/// Bounded-distributive-lattice laws for `(T, ⊔, ⊓, ⊥, ⊤)`: idempotence,
/// commutativity, associativity, absorption, distributivity, bounds, and
/// consistency of the order with the operations. Triples are sharded by the
/// outer element.
pub fn check_lattice_laws(
    space: &ApproximationSpace,
    cap: u128,
    shard: Shard,
) -> Result<PropertyReport> {
    validate_shard(shard)?;
    let size = space.t_size();
    let work = size * size * size;
    if work > TRIPLE_WORK_LIMIT {
        return Err(Error::SizeLimitExceeded {
            required: work,
            cap: TRIPLE_WORK_LIMIT,
        });
    }
    let all = space.enumerate_t(cap)?;
    let mut report = PropertyReport::new("lattice", space);
    let bottom = space.bottom();
    let top = space.top();

    for (i, a) in all.iter().enumerate() {
        if !shard_keeps(shard, i) {
            continue;
        }
        let ra = || vec![format!("a={}", rep(space, a))];
        let join_aa = state_join_unchecked(a, a);
        report.check(join_aa == *a, ra, || "a v a = a".into(), || rep(space, &join_aa));
        let meet_aa = state_meet_unchecked(a, a);
        report.check(meet_aa == *a, ra, || "a ^ a = a".into(), || rep(space, &meet_aa));
        let jb = state_join_unchecked(a, &bottom);
        report.check(jb == *a, ra, || "a v 0 = a".into(), || rep(space, &jb));
        let mt = state_meet_unchecked(a, &top);
        report.check(mt == *a, ra, || "a ^ 1 = a".into(), || rep(space, &mt));
        let jt = state_join_unchecked(a, &top);
        report.check(jt == top, ra, || "a v 1 = 1".into(), || rep(space, &jt));
        let mb = state_meet_unchecked(a, &bottom);
        report.check(mb == bottom, ra, || "a ^ 0 = 0".into(), || rep(space, &mb));

        for b in &all {
            let rab = || vec![format!("a={}", rep(space, a)), format!("b={}", rep(space, b))];
            let j1 = state_join_unchecked(a, b);
            let j2 = state_join_unchecked(b, a);
            report.check(j1 == j2, rab, || "a v b = b v a".into(), || rep(space, &j2));
            let m1 = state_meet_unchecked(a, b);
            let m2 = state_meet_unchecked(b, a);
            report.check(m1 == m2, rab, || "a ^ b = b ^ a".into(), || rep(space, &m2));
            let abs1 = state_join_unchecked(a, &m1);
            report.check(abs1 == *a, rab, || "a v (a ^ b) = a".into(), || rep(space, &abs1));
            let abs2 = state_meet_unchecked(a, &j1);
            report.check(abs2 == *a, rab, || "a ^ (a v b) = a".into(), || rep(space, &abs2));
            let le = space.leq_unchecked(a, b);
            report.check(
                le == (j1 == *b),
                rab,
                || "a <= b iff a v b = b".into(),
                || format!("leq={le}, join={}", rep(space, &j1)),
            );
            report.check(
                le == (m1 == *a),
                rab,
                || "a <= b iff a ^ b = a".into(),
                || format!("leq={le}, meet={}", rep(space, &m1)),
            );

            for c in &all {
                let rabc = || {
                    vec![
                        format!("a={}", rep(space, a)),
                        format!("b={}", rep(space, b)),
                        format!("c={}", rep(space, c)),
                    ]
                };
                let assoc_j1 = state_join_unchecked(&state_join_unchecked(a, b), c);
                let assoc_j2 = state_join_unchecked(a, &state_join_unchecked(b, c));
                report.check(
                    assoc_j1 == assoc_j2,
                    rabc,
                    || "(a v b) v c = a v (b v c)".into(),
                    || format!("{} vs {}", rep(space, &assoc_j1), rep(space, &assoc_j2)),
                );
                let assoc_m1 = state_meet_unchecked(&state_meet_unchecked(a, b), c);
                let assoc_m2 = state_meet_unchecked(a, &state_meet_unchecked(b, c));
                report.check(
                    assoc_m1 == assoc_m2,
                    rabc,
                    || "(a ^ b) ^ c = a ^ (b ^ c)".into(),
                    || format!("{} vs {}", rep(space, &assoc_m1), rep(space, &assoc_m2)),
                );
                let dist1l = state_meet_unchecked(a, &state_join_unchecked(b, c));
                let dist1r = state_join_unchecked(
                    &state_meet_unchecked(a, b),
                    &state_meet_unchecked(a, c),
                );
                report.check(
                    dist1l == dist1r,
                    rabc,
                    || "a ^ (b v c) = (a ^ b) v (a ^ c)".into(),
                    || format!("{} vs {}", rep(space, &dist1l), rep(space, &dist1r)),
                );
                let dist2l = state_join_unchecked(a, &state_meet_unchecked(b, c));
                let dist2r = state_meet_unchecked(
                    &state_join_unchecked(a, b),
                    &state_join_unchecked(a, c),
                );
                report.check(
                    dist2l == dist2r,
                    rabc,
                    || "a v (b ^ c) = (a v b) ^ (a v c)".into(),
                    || format!("{} vs {}", rep(space, &dist2l), rep(space, &dist2r)),
                );
            }
        }
    }
    Ok(report)
}

/// Stone identities for the pseudocomplement: `a* ⊔ a** = ⊤` and
/// `a* ⊓ a** = ⊥` for every element.
pub fn check_stone(space: &ApproximationSpace, cap: u128) -> Result<PropertyReport> {
    let mut report = PropertyReport::new("stone", space);
    let top = space.top();
    let bottom = space.bottom();
    for a in space.enumerate_t(cap)? {
        let star = map_unary(&a, star_state);
        let star2 = map_unary(&star, star_state);
        let join = state_join_unchecked(&star, &star2);
        let meet = state_meet_unchecked(&star, &star2);
        let ra = || vec![format!("a={}", rep(space, &a))];
        report.check(join == top, ra, || "a* v a** = 1".into(), || rep(space, &join));
        report.check(meet == bottom, ra, || "a* ^ a** = 0".into(), || rep(space, &meet));
    }
    Ok(report)
}

/// Dual Stone identities for the dual pseudocomplement: `a⁺ ⊓ a⁺⁺ = ⊥` and
/// `a⁺ ⊔ a⁺⁺ = ⊤` for every element.
pub fn check_dual_stone(space: &ApproximationSpace, cap: u128) -> Result<PropertyReport> {
    let mut report = PropertyReport::new("dualstone", space);
    let top = space.top();
    let bottom = space.bottom();
    for a in space.enumerate_t(cap)? {
        let plus = map_unary(&a, plus_state);
        let plus2 = map_unary(&plus, plus_state);
        let meet = state_meet_unchecked(&plus, &plus2);
        let join = state_join_unchecked(&plus, &plus2);
        let ra = || vec![format!("a={}", rep(space, &a))];
        report.check(meet == bottom, ra, || "a+ ^ a++ = 0".into(), || rep(space, &meet));
        report.check(join == top, ra, || "a+ v a++ = 1".into(), || rep(space, &join));
    }
    Ok(report)
}

/// Boundary characterizations: `a ⊔ a* = ⊤` exactly when `a` has no
/// `Partial` class, and likewise `a ⊓ a⁺ = ⊥`.
pub fn check_boundary_remarks(space: &ApproximationSpace, cap: u128) -> Result<PropertyReport> {
    let mut report = PropertyReport::new("boundary", space);
    let top = space.top();
    let bottom = space.bottom();
    for a in space.enumerate_t(cap)? {
        let exact = a.is_exact();
        let star = map_unary(&a, star_state);
        let plus = map_unary(&a, plus_state);
        let join = state_join_unchecked(&a, &star);
        let meet = state_meet_unchecked(&a, &plus);
        let ra = || vec![format!("a={}", rep(space, &a))];
        report.check(
            (join == top) == exact,
            ra,
            || "a v a* = 1 iff a is exact".into(),
            || format!("join={}, exact={exact}", rep(space, &join)),
        );
        report.check(
            (meet == bottom) == exact,
            ra,
            || "a ^ a+ = 0 iff a is exact".into(),
            || format!("meet={}, exact={exact}", rep(space, &meet)),
        );
    }
    Ok(report)
}

/// The eight remark identities tying the relative operators to the bounds:
/// `a→b = ⊤ iff a ≤ b`, `a→⊤ = ⊤`, `⊥→a = ⊤`, `⊤→a = a`, `a←b = ⊥ iff
/// a ≤ b`, `a←⊤ = ⊥`, `a←⊥ = a`, `⊥←a = ⊥`.
pub fn check_remark4(space: &ApproximationSpace, cap: u128) -> Result<PropertyReport> {
    let size = space.t_size();
    let work = size * size;
    if work > TRIPLE_WORK_LIMIT {
        return Err(Error::SizeLimitExceeded {
            required: work,
            cap: TRIPLE_WORK_LIMIT,
        });
    }
    let all = space.enumerate_t(cap)?;
    let mut report = PropertyReport::new("remark4", space);
    let top = space.top();
    let bottom = space.bottom();
    for a in &all {
        let ra = || vec![format!("a={}", rep(space, a))];
        let to_top = map_binary(a, &top, impl_state);
        report.check(to_top == top, ra, || "a -> 1 = 1".into(), || rep(space, &to_top));
        let from_bottom = map_binary(&bottom, a, impl_state);
        report.check(
            from_bottom == top,
            ra,
            || "0 -> a = 1".into(),
            || rep(space, &from_bottom),
        );
        let from_top = map_binary(&top, a, impl_state);
        report.check(from_top == *a, ra, || "1 -> a = a".into(), || rep(space, &from_top));
        let co_top = map_binary(a, &top, coimpl_state);
        report.check(co_top == bottom, ra, || "a <- 1 = 0".into(), || rep(space, &co_top));
        let co_bottom = map_binary(a, &bottom, coimpl_state);
        report.check(co_bottom == *a, ra, || "a <- 0 = a".into(), || rep(space, &co_bottom));
        let bottom_co = map_binary(&bottom, a, coimpl_state);
        report.check(
            bottom_co == bottom,
            ra,
            || "0 <- a = 0".into(),
            || rep(space, &bottom_co),
        );
        for b in &all {
            let rab = || vec![format!("a={}", rep(space, a)), format!("b={}", rep(space, b))];
            let le = space.leq_unchecked(a, b);
            let imp = map_binary(a, b, impl_state);
            report.check(
                (imp == top) == le,
                rab,
                || "a -> b = 1 iff a <= b".into(),
                || format!("impl={}, leq={le}", rep(space, &imp)),
            );
            let coimp = map_binary(a, b, coimpl_state);
            report.check(
                (coimp == bottom) == le,
                rab,
                || "a <- b = 0 iff a <= b".into(),
                || format!("coimpl={}, leq={le}", rep(space, &coimp)),
            );
        }
    }
    Ok(report)
}

/// The four algebraic condition pairs characterizing `→` and `←`:
/// `a→a = ⊤` and `a←a = ⊥`; `a ⊓ (a→b) = a ⊓ b` and `a ⊔ (a←b) = a`;
/// `(a→b) ⊓ b = b` and `(a←b) ⊔ b = a ⊔ b`; `a→(b⊓c) = (a→b) ⊓ (a→c)` and
/// `(a⊔b)←c = (a←c) ⊔ (b←c)`. The triple tier is sharded by `a`.
pub fn check_algebraic_axioms(
    space: &ApproximationSpace,
    cap: u128,
    shard: Shard,
) -> Result<PropertyReport> {
    validate_shard(shard)?;
    let size = space.t_size();
    let work = size * size * size;
    if work > TRIPLE_WORK_LIMIT {
        return Err(Error::SizeLimitExceeded {
            required: work,
            cap: TRIPLE_WORK_LIMIT,
        });
    }
    let all = space.enumerate_t(cap)?;
    let mut report = PropertyReport::new("algebraic", space);
    let top = space.top();
    let bottom = space.bottom();
    for (i, a) in all.iter().enumerate() {
        if !shard_keeps(shard, i) {
            continue;
        }
        let ra = || vec![format!("a={}", rep(space, a))];
        let self_impl = map_binary(a, a, impl_state);
        report.check(self_impl == top, ra, || "a -> a = 1".into(), || rep(space, &self_impl));
        let self_co = map_binary(a, a, coimpl_state);
        report.check(self_co == bottom, ra, || "a <- a = 0".into(), || rep(space, &self_co));

        for b in &all {
            let rab = || vec![format!("a={}", rep(space, a)), format!("b={}", rep(space, b))];
            let imp = map_binary(a, b, impl_state);
            let lhs2 = state_meet_unchecked(a, &imp);
            let rhs2 = state_meet_unchecked(a, b);
            report.check(
                lhs2 == rhs2,
                rab,
                || "a ^ (a -> b) = a ^ b".into(),
                || format!("{} vs {}", rep(space, &lhs2), rep(space, &rhs2)),
            );
            let co = map_binary(a, b, coimpl_state);
            let lhs2d = state_join_unchecked(a, &co);
            report.check(
                lhs2d == *a,
                rab,
                || "a v (a <- b) = a".into(),
                || rep(space, &lhs2d),
            );
            let lhs3 = state_meet_unchecked(&imp, b);
            report.check(
                lhs3 == *b,
                rab,
                || "(a -> b) ^ b = b".into(),
                || rep(space, &lhs3),
            );
            let lhs3d = state_join_unchecked(&co, b);
            let rhs3d = state_join_unchecked(a, b);
            report.check(
                lhs3d == rhs3d,
                rab,
                || "(a <- b) v b = a v b".into(),
                || format!("{} vs {}", rep(space, &lhs3d), rep(space, &rhs3d)),
            );

            for c in &all {
                let rabc = || {
                    vec![
                        format!("a={}", rep(space, a)),
                        format!("b={}", rep(space, b)),
                        format!("c={}", rep(space, c)),
                    ]
                };
                let lhs4 = map_binary(a, &state_meet_unchecked(b, c), impl_state);
                let rhs4 = state_meet_unchecked(
                    &map_binary(a, b, impl_state),
                    &map_binary(a, c, impl_state),
                );
                report.check(
                    lhs4 == rhs4,
                    rabc,
                    || "a -> (b ^ c) = (a -> b) ^ (a -> c)".into(),
                    || format!("{} vs {}", rep(space, &lhs4), rep(space, &rhs4)),
                );
                let lhs4d = map_binary(&state_join_unchecked(a, b), c, coimpl_state);
                let rhs4d = state_join_unchecked(
                    &map_binary(a, c, coimpl_state),
                    &map_binary(b, c, coimpl_state),
                );
                report.check(
                    lhs4d == rhs4d,
                    rabc,
                    || "(a v b) <- c = (a <- c) v (b <- c)".into(),
                    || format!("{} vs {}", rep(space, &lhs4d), rep(space, &rhs4d)),
                );
            }
        }
    }
    Ok(report)
}

/// Compares all four closed-form operators against [`brute_force_oracle`] on
/// every element (unary kinds) and every ordered pair (binary kinds).
pub fn check_oracle_equivalence(space: &ApproximationSpace, cap: u128) -> Result<PropertyReport> {
    let size = space.t_size();
    let work = 2 * (size * size + size * size * size);
    if work > ORACLE_WORK_LIMIT {
        return Err(Error::SizeLimitExceeded {
            required: work,
            cap: ORACLE_WORK_LIMIT,
        });
    }
    let all = space.enumerate_t(cap)?;
    let mut report = PropertyReport::new("oracle", space);
    for a in &all {
        for kind in [OpKind::Pseudo, OpKind::DualPseudo] {
            let closed = apply(space, kind, a, None)?;
            match brute_force_oracle(space, kind, a, None, cap) {
                Ok(oracle) => report.check(
                    closed == oracle,
                    || vec![format!("op={}", kind.name()), format!("a={}", rep(space, a))],
                    || format!("oracle {}", rep(space, &oracle)),
                    || format!("closed form {}", rep(space, &closed)),
                ),
                Err(e) => report.check(
                    false,
                    || vec![format!("op={}", kind.name()), format!("a={}", rep(space, a))],
                    || "a unique extremum".into(),
                    || e.to_string(),
                ),
            }
        }
        for b in &all {
            for kind in [OpKind::RelPseudo, OpKind::DualRelPseudo] {
                let closed = apply(space, kind, a, Some(b))?;
                let inputs = || {
                    vec![
                        format!("op={}", kind.name()),
                        format!("a={}", rep(space, a)),
                        format!("b={}", rep(space, b)),
                    ]
                };
                match brute_force_oracle(space, kind, a, Some(b), cap) {
                    Ok(oracle) => report.check(
                        closed == oracle,
                        inputs,
                        || format!("oracle {}", rep(space, &oracle)),
                        || format!("closed form {}", rep(space, &closed)),
                    ),
                    Err(e) => {
                        report.check(false, inputs, || "a unique extremum".into(), || e.to_string())
                    }
                }
            }
        }
    }
    Ok(report)
}

/// Generates a small random approximation space, deterministically from the
/// seed: up to 9 atoms named `x1..xn`, classes of size 1–4, resampled until
/// `|T| ≤ 486`.
pub fn random_space(seed: u64) -> ApproximationSpace {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let n: usize = rng.random_range(1..=9);
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(&mut rng);
        let mut classes: Vec<Vec<String>> = Vec::new();
        let mut rest = &order[..];
        while !rest.is_empty() {
            let take = rng.random_range(1..=rest.len().min(4));
            let (chunk, tail) = rest.split_at(take);
            classes.push(chunk.iter().map(|i| format!("x{}", i + 1)).collect());
            rest = tail;
        }
        let universe: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let space = ApproximationSpace::build(&universe, &classes)
            .expect("generated classes always partition the universe");
        if space.t_size() <= 486 {
            return space;
        }
    }
}
