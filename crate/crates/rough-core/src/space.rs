//! Finite approximation spaces and the canonical encoding of rough sets.
//!
//! An approximation space is a finite universe `U` together with a partition
//! of `U` into equivalence classes. A subset `X ⊆ U` is seen through its
//! lower approximation (the union of classes entirely inside `X`) and its
//! upper approximation (the union of classes that touch `X`). Two subsets
//! with the same pair of approximations are indistinguishable, so a rough
//! set is fully described by the per-class membership state it induces:
//! each class is either disjoint from `X`, partially inside `X`, or wholly
//! inside `X`. A class with a single atom can never be partial.
//!
//! [`RoughElement`] stores exactly that state vector, one [`ClassState`] per
//! class, and the set `T` of all rough sets over a space is the set of all
//! such vectors. With `s` singleton classes and `m` larger classes, `T` has
//! `2^s * 3^m` elements.

use std::collections::BTreeSet;
use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};

/// A subset of the universe, stored as atom indices into
/// [`ApproximationSpace::atom_name`] order.
pub type AtomSet = BTreeSet<usize>;

/// Membership state of one equivalence class relative to a subset of `U`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassState {
    /// The class is disjoint from the subset.
    Empty,
    /// The class meets the subset but is not contained in it.
    Partial,
    /// The class is contained in the subset.
    Full,
}

impl fmt::Display for ClassState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassState::Empty => f.write_str("Empty"),
            ClassState::Partial => f.write_str("Partial"),
            ClassState::Full => f.write_str("Full"),
        }
    }
}

/// A rough set in canonical encoding: one [`ClassState`] per class, in class
/// order. Equality of rough sets is equality of these vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RoughElement {
    states: Vec<ClassState>,
}

impl RoughElement {
    /// The state of class `c`.
    pub fn state(&self, c: usize) -> ClassState {
        self.states[c]
    }

    /// All per-class states, in class order.
    pub fn states(&self) -> &[ClassState] {
        &self.states
    }

    /// Number of classes this element was built over.
    pub fn class_count(&self) -> usize {
        self.states.len()
    }

    /// True if no class is `Partial`, i.e. the element is an exact set
    /// (its lower and upper approximations coincide).
    pub fn is_exact(&self) -> bool {
        self.states.iter().all(|s| *s != ClassState::Partial)
    }

    pub(crate) fn from_states(states: Vec<ClassState>) -> Self {
        RoughElement { states }
    }
}

/// The pair of approximations described by a rough element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RoughSetPair {
    /// Union of the `Full` classes.
    pub lower: AtomSet,
    /// Union of the `Full` and `Partial` classes.
    pub upper: AtomSet,
}

/// On-disk shape of a space file: a universe and a partition, both in
/// authoritative file order.
#[derive(Debug, Clone, Deserialize)]
pub struct SpaceFile {
    /// All atoms of the universe.
    pub universe: Vec<String>,
    /// The equivalence classes, as lists of atom names.
    pub classes: Vec<Vec<String>>,
}

/// A finite approximation space: a named universe plus a partition of it
/// into equivalence classes. Atom order and class order follow the input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ApproximationSpace {
    atoms: Vec<String>,
    /// Class members as atom indices, ascending within each class.
    classes: Vec<Vec<usize>>,
    /// For every atom, the index of its class.
    class_of: Vec<usize>,
}

fn valid_atom_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl ApproximationSpace {
    /// Builds a space from a universe and a partition of it.
    ///
    /// Fails if the universe is empty or repeats an atom, if a name is not a
    /// valid identifier, if a class is empty, or if the classes do not cover
    /// every atom exactly once.
    pub fn build(universe: &[String], classes: &[Vec<String>]) -> Result<Self> {
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        let mut atoms = Vec::with_capacity(universe.len());
        for name in universe {
            if !valid_atom_name(name) {
                return Err(Error::InvalidAtomName(name.clone()));
            }
            if atoms.contains(name) {
                return Err(Error::DuplicateAtom(name.clone()));
            }
            atoms.push(name.clone());
        }

        let index_of = |name: &str| atoms.iter().position(|a| a == name);
        let mut class_of = vec![usize::MAX; atoms.len()];
        let mut class_members: Vec<Vec<usize>> = Vec::with_capacity(classes.len());
        for (c, members) in classes.iter().enumerate() {
            if members.is_empty() {
                return Err(Error::EmptyClass(c));
            }
            let mut idxs = Vec::with_capacity(members.len());
            for name in members {
                let i = index_of(name).ok_or_else(|| {
                    Error::NotAPartition(format!(
                        "class #{c} mentions `{name}`, which is not in the universe"
                    ))
                })?;
                if class_of[i] != usize::MAX {
                    return Err(Error::NotAPartition(format!(
                        "atom `{name}` appears in more than one class"
                    )));
                }
                class_of[i] = c;
                idxs.push(i);
            }
            idxs.sort_unstable();
            class_members.push(idxs);
        }
        if let Some(i) = class_of.iter().position(|&c| c == usize::MAX) {
            return Err(Error::NotAPartition(format!(
                "atom `{}` is not covered by any class",
                atoms[i]
            )));
        }

        Ok(ApproximationSpace {
            atoms,
            classes: class_members,
            class_of,
        })
    }

    /// Builds a space from the JSON space-file format:
    /// `{"universe": ["x1", ...], "classes": [["x1","x3"], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: SpaceFile =
            serde_json::from_str(text).map_err(|e| Error::InvalidSpaceFile(e.to_string()))?;
        Self::from_file(&file)
    }

    /// Builds a space from an already-parsed [`SpaceFile`].
    pub fn from_file(file: &SpaceFile) -> Result<Self> {
        Self::build(&file.universe, &file.classes)
    }

    /// Number of atoms in the universe.
    pub fn atom_count(&self) -> usize {
        self.atoms.len()
    }

    /// Number of equivalence classes.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Name of atom `i`.
    pub fn atom_name(&self, i: usize) -> &str {
        &self.atoms[i]
    }

    /// Index of the named atom.
    pub fn atom_index(&self, name: &str) -> Result<usize> {
        self.atoms
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| Error::UnknownAtom(format!("`{name}`")))
    }

    /// Members of class `c`, as ascending atom indices.
    pub fn class_members(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    /// Index of the class containing atom `i`.
    pub fn class_of(&self, i: usize) -> usize {
        self.class_of[i]
    }

    /// True if class `c` has exactly one member (and therefore can never be
    /// `Partial`).
    pub fn is_singleton(&self, c: usize) -> bool {
        self.classes[c].len() == 1
    }

    /// Resolves a list of atom names to an [`AtomSet`]. Duplicates collapse.
    pub fn parse_atom_set<'a, I>(&self, names: I) -> Result<AtomSet>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut set = AtomSet::new();
        for name in names {
            set.insert(self.atom_index(name)?);
        }
        Ok(set)
    }

    pub(crate) fn check_atom_set(&self, x: &AtomSet) -> Result<()> {
        if let Some(&i) = x.iter().next_back() {
            if i >= self.atoms.len() {
                return Err(Error::UnknownAtom(format!("index {i} out of range")));
            }
        }
        Ok(())
    }

    /// Checks that `e` is a structurally valid element of this space.
    pub fn check_element(&self, e: &RoughElement) -> Result<()> {
        if e.states.len() != self.classes.len() {
            return Err(Error::SpaceMismatch);
        }
        for (c, s) in e.states.iter().enumerate() {
            if *s == ClassState::Partial && self.is_singleton(c) {
                return Err(Error::SpaceMismatch);
            }
        }
        Ok(())
    }

    /// Wraps a raw state vector as an element of this space, validating the
    /// class count and the singleton rule.
    pub fn element_from_states(&self, states: Vec<ClassState>) -> Result<RoughElement> {
        let e = RoughElement::from_states(states);
        self.check_element(&e)?;
        Ok(e)
    }

    /// The lower approximation of `x`: the union of classes contained in `x`.
    pub fn lower_approx(&self, x: &AtomSet) -> Result<AtomSet> {
        self.check_atom_set(x)?;
        let mut out = AtomSet::new();
        for members in &self.classes {
            if members.iter().all(|i| x.contains(i)) {
                out.extend(members.iter().copied());
            }
        }
        Ok(out)
    }

    /// The upper approximation of `x`: the union of classes meeting `x`.
    pub fn upper_approx(&self, x: &AtomSet) -> Result<AtomSet> {
        self.check_atom_set(x)?;
        let mut out = AtomSet::new();
        for members in &self.classes {
            if members.iter().any(|i| x.contains(i)) {
                out.extend(members.iter().copied());
            }
        }
        Ok(out)
    }

    /// The canonical encoding of `x`: its per-class membership states.
    pub fn canonicalize(&self, x: &AtomSet) -> Result<RoughElement> {
        self.check_atom_set(x)?;
        let states = self
            .classes
            .iter()
            .map(|members| {
                let inside = members.iter().filter(|i| x.contains(i)).count();
                if inside == 0 {
                    ClassState::Empty
                } else if inside == members.len() {
                    ClassState::Full
                } else {
                    ClassState::Partial
                }
            })
            .collect();
        Ok(RoughElement::from_states(states))
    }

    /// The canonical member of the equivalence class of subsets described by
    /// `e`: every atom of each `Full` class plus the least-indexed atom of
    /// each `Partial` class.
    pub fn representative(&self, e: &RoughElement) -> Result<AtomSet> {
        self.check_element(e)?;
        let mut out = AtomSet::new();
        for (c, members) in self.classes.iter().enumerate() {
            match e.state(c) {
                ClassState::Full => out.extend(members.iter().copied()),
                ClassState::Partial => {
                    out.insert(members[0]);
                }
                ClassState::Empty => {}
            }
        }
        Ok(out)
    }

    /// The approximation pair `(lower, upper)` described by `e`.
    pub fn approx_pair(&self, e: &RoughElement) -> Result<RoughSetPair> {
        self.check_element(e)?;
        let mut lower = AtomSet::new();
        let mut upper = AtomSet::new();
        for (c, members) in self.classes.iter().enumerate() {
            match e.state(c) {
                ClassState::Full => {
                    lower.extend(members.iter().copied());
                    upper.extend(members.iter().copied());
                }
                ClassState::Partial => upper.extend(members.iter().copied()),
                ClassState::Empty => {}
            }
        }
        Ok(RoughSetPair { lower, upper })
    }

    /// The bottom element `RS(∅)` (all classes `Empty`).
    pub fn bottom(&self) -> RoughElement {
        RoughElement::from_states(vec![ClassState::Empty; self.classes.len()])
    }

    /// The top element `RS(U)` (all classes `Full`).
    pub fn top(&self) -> RoughElement {
        RoughElement::from_states(vec![ClassState::Full; self.classes.len()])
    }

    /// `|T|` for this space: `2^s * 3^m` over `s` singleton and `m` larger
    /// classes.
    pub fn t_size(&self) -> u128 {
        self.classes
            .iter()
            .map(|m| if m.len() == 1 { 2u128 } else { 3u128 })
            .product()
    }

    /// Enumerates all of `T` in lexicographic order over state vectors: the
    /// leftmost class is most significant and states order as
    /// `Empty < Partial < Full` (singletons skip `Partial`).
    ///
    /// Fails with [`Error::SizeLimitExceeded`] when `|T| > cap`.
    pub fn enumerate_t(&self, cap: u128) -> Result<Vec<RoughElement>> {
        let size = self.t_size();
        if size > cap {
            return Err(Error::SizeLimitExceeded {
                required: size,
                cap,
            });
        }
        let choices: Vec<&[ClassState]> = self
            .classes
            .iter()
            .map(|m| {
                if m.len() == 1 {
                    &[ClassState::Empty, ClassState::Full][..]
                } else {
                    &[ClassState::Empty, ClassState::Partial, ClassState::Full][..]
                }
            })
            .collect();
        let mut out = Vec::with_capacity(size as usize);
        let mut odometer = vec![0usize; self.classes.len()];
        loop {
            out.push(RoughElement::from_states(
                odometer
                    .iter()
                    .enumerate()
                    .map(|(c, &k)| choices[c][k])
                    .collect(),
            ));
            // Advance the least-significant (rightmost) position first.
            let mut c = self.classes.len();
            loop {
                if c == 0 {
                    return Ok(out);
                }
                c -= 1;
                if odometer[c] + 1 < choices[c].len() {
                    odometer[c] += 1;
                    break;
                }
                odometer[c] = 0;
            }
        }
    }

    /// The componentwise order on `T`: `a ≤ b` iff every class state of `a`
    /// is at most the corresponding state of `b`.
    pub fn leq(&self, a: &RoughElement, b: &RoughElement) -> Result<bool> {
        self.check_element(a)?;
        self.check_element(b)?;
        Ok(self.leq_unchecked(a, b))
    }

    pub(crate) fn leq_unchecked(&self, a: &RoughElement, b: &RoughElement) -> bool {
        a.states.iter().zip(&b.states).all(|(x, y)| x <= y)
    }

    /// Renders an atom set as `{x1,x2}` in universe order.
    pub fn render_set(&self, x: &AtomSet) -> String {
        let names: Vec<&str> = x.iter().map(|&i| self.atom_name(i)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Renders the state vector of `e` as `<Full,Partial,Empty>`.
    pub fn render_states(&self, e: &RoughElement) -> String {
        let parts: Vec<String> = e.states.iter().map(|s| s.to_string()).collect();
        format!("<{}>", parts.join(","))
    }

    /// A deterministic structural description: the partition in class order.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|members| {
                let names: Vec<&str> = members.iter().map(|&i| self.atom_name(i)).collect();
                format!("{{{}}}", names.join(","))
            })
            .collect();
        parts.join("")
    }
}
