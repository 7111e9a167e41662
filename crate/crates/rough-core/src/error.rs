//! Error taxonomy shared by every module of the crate.

/// Everything that can go wrong while building spaces, combining rough
/// elements, enumerating `T`, or parsing and evaluating formulas.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The universe lists the same atom twice.
    #[error("duplicate atom `{0}` in universe")]
    DuplicateAtom(String),

    /// The classes miss an atom, repeat an atom, or mention an atom that is
    /// not in the universe.
    #[error("classes do not partition the universe: {0}")]
    NotAPartition(String),

    /// A space must contain at least one atom.
    #[error("universe is empty")]
    EmptyUniverse,

    /// Equivalence classes are non-empty by definition.
    #[error("class #{0} is empty")]
    EmptyClass(usize),

    /// Atom names double as formula tokens, so they must lex as identifiers.
    #[error("invalid atom name `{0}` (expected [A-Za-z_][A-Za-z0-9_]*)")]
    InvalidAtomName(String),

    /// A name (or index) that does not belong to the space's universe.
    #[error("unknown atom {0}")]
    UnknownAtom(String),

    /// A rough element was paired with a space it does not belong to.
    #[error("element does not belong to this approximation space")]
    SpaceMismatch,

    /// Enumerating `T` (or a derived search) would exceed the configured cap.
    #[error("size limit exceeded: |T| = {required} exceeds cap {cap}")]
    SizeLimitExceeded {
        /// Number of elements the operation would have to visit.
        required: u128,
        /// The configured ceiling.
        cap: u128,
    },

    /// The brute-force search found no unique extremum. This cannot happen on
    /// a valid space (the four operators are total); seeing it means either
    /// the space is corrupt or the search itself is wrong.
    #[error("no unique {0} exists in T")]
    NoExtremum(&'static str),

    /// A space file that is not valid JSON in the expected shape.
    #[error("invalid space file: {0}")]
    InvalidSpaceFile(String),

    /// A work-splitting shard `k/n` outside `1 <= k <= n`.
    #[error("invalid shard {k}/{n}: need 1 <= k <= n")]
    InvalidShard {
        /// One-based shard index.
        k: u64,
        /// Total number of shards.
        n: u64,
    },

    /// Formula text that does not match the grammar.
    #[error("syntax error at byte {pos}: {msg}")]
    SyntaxError {
        /// Byte offset into the formula source where the error was detected.
        pos: usize,
        /// Human-readable description of what was expected.
        msg: String,
    },
}

/// Convenient alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
