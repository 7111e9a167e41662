//! Join and meet of rough sets, both on raw subsets of `U` and on canonical
//! state vectors.
//!
//! The set-level operations work on concrete subsets and return a concrete
//! subset whose canonical encoding is the lattice join/meet:
//!
//! * the join starts from `X ∪ Y` and repairs double counting detected by
//!   the induced weight — whenever a class becomes complete in the union
//!   without being complete in either argument, the members contributed by
//!   `Y` are deleted so the class stays partial;
//! * the meet keeps the classes contained in `X ∩ Y` whole and touches every
//!   other class that meets both arguments through a single pivot atom.
//!
//! The state-level operations [`state_join`]/[`state_meet`] are the
//! componentwise max/min on state vectors; the set-level results always
//! canonicalize to them.

use crate::error::Result;
use crate::space::{ApproximationSpace, AtomSet, ClassState, RoughElement};

/// The induced weight of `X`: `|X|` plus the number of classes contained in
/// `X`. Two subsets with the same union have the same weight exactly when no
/// class finished completing "by accident", which is what the join repair
/// loop tests for.
pub fn induced_weight(space: &ApproximationSpace, x: &AtomSet) -> Result<u64> {
    space.check_atom_set(x)?;
    let mut weight = x.len() as u64;
    for c in 0..space.class_count() {
        if space.class_members(c).iter().all(|i| x.contains(i)) {
            weight += 1;
        }
    }
    Ok(weight)
}

/// Outcome of [`praba_join_stats`]: the join set plus how much repairing the
/// dedup loop had to do.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinStats {
    /// The resulting subset of `U`.
    pub result: AtomSet,
    /// Number of deletion rounds the loop performed (0 when the weights
    /// already agreed).
    pub dedup_passes: u64,
    /// Total number of jointly-completed classes that were repaired.
    pub deleted_classes: u64,
}

/// Set-level join: `X ∪ Y`, repaired so that classes completed jointly by
/// the two arguments are not double counted.
pub fn praba_join_sets(
    space: &ApproximationSpace,
    x: &AtomSet,
    y: &AtomSet,
) -> Result<AtomSet> {
    Ok(praba_join_stats(space, x, y)?.result)
}

/// Like [`praba_join_sets`], but also reports the work done by the dedup
/// loop. The loop always terminates within `class_count` deletion rounds.
pub fn praba_join_stats(
    space: &ApproximationSpace,
    x: &AtomSet,
    y: &AtomSet,
) -> Result<JoinStats> {
    let mut y = y.clone();
    let mut stats = JoinStats {
        result: AtomSet::new(),
        dedup_passes: 0,
        deleted_classes: 0,
    };
    // Each deletion round removes at least one class's worth of overlap and
    // no class is repaired twice, so class_count + 1 rounds always suffice.
    for _ in 0..=space.class_count() {
        let union: AtomSet = x.union(&y).copied().collect();
        let inter: AtomSet = x.intersection(&y).copied().collect();
        let expected =
            induced_weight(space, x)? + induced_weight(space, &y)? - induced_weight(space, &inter)?;
        if induced_weight(space, &union)? == expected {
            stats.result = union;
            return Ok(stats);
        }
        // Classes completed jointly: contained in the union but in neither
        // argument alone. Delete Y's members so the class stays partial.
        let mut deleted = 0u64;
        for c in 0..space.class_count() {
            let members = space.class_members(c);
            let in_union = members.iter().all(|i| union.contains(i));
            let in_x = members.iter().all(|i| x.contains(i));
            let in_y = members.iter().all(|i| y.contains(i));
            if in_union && !in_x && !in_y {
                for i in members {
                    y.remove(i);
                }
                deleted += 1;
            }
        }
        debug_assert!(deleted > 0, "weight mismatch without a repairable class");
        stats.dedup_passes += 1;
        stats.deleted_classes += deleted;
    }
    unreachable!("join dedup loop exceeded class_count rounds")
}

/// The pivot atoms chosen by the set-level meet: one atom per class that
/// meets both arguments without being contained in their intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotSet {
    /// The chosen pivot atoms, one per affected class.
    pub pivots: AtomSet,
    /// Indices of the classes that contributed a pivot, ascending.
    pub classes: Vec<usize>,
}

/// Computes the pivot set for `X ∇ Y`: for every class `C` with
/// `C ⊄ X ∩ Y` that meets both `X` and `Y`, one deterministic pivot atom —
/// the least atom of `X ∩ Y ∩ C` when that is non-empty, otherwise the least
/// atom of `X ∩ C`.
pub fn pivot_set(space: &ApproximationSpace, x: &AtomSet, y: &AtomSet) -> Result<PivotSet> {
    space.check_atom_set(x)?;
    space.check_atom_set(y)?;
    let mut out = PivotSet {
        pivots: AtomSet::new(),
        classes: Vec::new(),
    };
    for c in 0..space.class_count() {
        let members = space.class_members(c);
        let meets_x = members.iter().any(|i| x.contains(i));
        let meets_y = members.iter().any(|i| y.contains(i));
        let inside_both = members.iter().all(|i| x.contains(i) && y.contains(i));
        if meets_x && meets_y && !inside_both {
            // Members are stored ascending, so the first hit is the least.
            let pivot = members
                .iter()
                .find(|i| x.contains(i) && y.contains(i))
                .or_else(|| members.iter().find(|i| x.contains(i)))
                .copied()
                .expect("class meets X");
            out.pivots.insert(pivot);
            out.classes.push(c);
        }
    }
    Ok(out)
}

/// Set-level meet: the classes contained in `X ∩ Y`, plus one pivot atom for
/// every class that meets both arguments without being contained in the
/// intersection.
pub fn praba_meet_sets(
    space: &ApproximationSpace,
    x: &AtomSet,
    y: &AtomSet,
) -> Result<AtomSet> {
    space.check_atom_set(x)?;
    space.check_atom_set(y)?;
    let inter: AtomSet = x.intersection(y).copied().collect();
    let mut out = space.lower_approx(&inter)?;
    out.extend(pivot_set(space, x, y)?.pivots.iter().copied());
    Ok(out)
}

/// Lattice join on canonical encodings: componentwise max of states.
pub fn state_join(
    space: &ApproximationSpace,
    a: &RoughElement,
    b: &RoughElement,
) -> Result<RoughElement> {
    space.check_element(a)?;
    space.check_element(b)?;
    Ok(state_join_unchecked(a, b))
}

/// Lattice meet on canonical encodings: componentwise min of states.
pub fn state_meet(
    space: &ApproximationSpace,
    a: &RoughElement,
    b: &RoughElement,
) -> Result<RoughElement> {
    space.check_element(a)?;
    space.check_element(b)?;
    Ok(state_meet_unchecked(a, b))
}

pub(crate) fn state_join_unchecked(a: &RoughElement, b: &RoughElement) -> RoughElement {
    RoughElement::from_states(
        a.states()
            .iter()
            .zip(b.states())
            .map(|(x, y)| *x.max(y))
            .collect(),
    )
}

pub(crate) fn state_meet_unchecked(a: &RoughElement, b: &RoughElement) -> RoughElement {
    RoughElement::from_states(
        a.states()
            .iter()
            .zip(b.states())
            .map(|(x, y)| *x.min(y))
            .collect(),
    )
}

/// Guard against meets producing a `Partial` singleton: the min of two
/// states on a singleton class is one of the inputs, so validity is
/// preserved. Exposed for tests as a cheap structural check.
pub fn preserves_validity(space: &ApproximationSpace, e: &RoughElement) -> bool {
    (0..space.class_count())
        .all(|c| !(space.is_singleton(c) && e.state(c) == ClassState::Partial))
}
