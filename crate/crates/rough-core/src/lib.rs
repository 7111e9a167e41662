//! Rough sets over a finite approximation space, the bounded distributive
//! lattice they form, its four bi-Heyting operators, and a small
//! bi-intuitionistic logic evaluated over that algebra.
//!
//! The crate is organized in four layers:
//!
//! * [`space`] — approximation spaces, lower/upper approximations, the
//!   canonical per-class encoding of rough sets, and enumeration of the
//!   whole algebra `T`;
//! * [`praba`] — join and meet, both on raw subsets of the universe (with
//!   the weight-guided dedup loop and pivot construction) and on canonical
//!   encodings;
//! * [`biheyting`] — the pseudocomplement, dual pseudocomplement, relative
//!   pseudocomplement and its dual, each in closed form plus a brute-force
//!   oracle, along with exhaustive law suites and a seeded random-space
//!   generator;
//! * [`logic`] — formula parsing and printing, algebraic evaluation, truth
//!   pairs and satisfaction classes at a world, and clause-by-clause checks
//!   of the two satisfaction definitions.

#![deny(missing_docs)]

pub mod biheyting;
pub mod error;
pub mod logic;
pub mod praba;
pub mod space;

pub use biheyting::{
    apply, brute_force_oracle, check_algebraic_axioms, check_boundary_remarks, check_dual_stone,
    check_lattice_laws, check_oracle_equivalence, check_remark4, check_stone,
    dual_pseudocomplement, dual_rel_pseudocomplement, pseudocomplement, random_space,
    rel_pseudocomplement, validate_shard, Failure, OpKind, PropertyReport, Shard, DEFAULT_CAP,
};
pub use error::{Error, Result};
pub use logic::{
    class_truth, classify, eval_formula, formal_check, kripke_check, parse_formula,
    rough_downset, rough_upset, satisfies, truth_pair, world_valuation, Formula, SatClass,
    TruthPair, TruthValuation,
};
pub use praba::{
    induced_weight, pivot_set, praba_join_sets, praba_join_stats, praba_meet_sets, state_join,
    state_meet, JoinStats, PivotSet,
};
pub use space::{
    ApproximationSpace, AtomSet, ClassState, RoughElement, RoughSetPair, SpaceFile,
};
