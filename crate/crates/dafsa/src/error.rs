use crate::automaton::StateId;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors surfaced by automaton primitives, builders and the text format.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A handle referred to a deleted or never-allocated state.
    #[error("invalid state handle {0:?}")]
    InvalidHandle(StateId),

    /// A transition edit would make a state reachable from itself.
    #[error("transition edit would create a cycle")]
    AcyclicityViolation,

    /// Attempt to delete a state that still has incoming transitions.
    #[error("state still has {in_degree} incoming transition(s)")]
    DanglingReference { in_degree: u32 },

    #[error("the start state cannot be deleted")]
    DeleteStart,

    /// `last_child` was asked for on a state without transitions.
    #[error("state has no outgoing transitions")]
    NoChildren,

    /// Register insert would break pairwise inequivalence.
    #[error("a state with an identical signature is already registered")]
    DuplicateSignature,

    /// Register remove of a state not registered under its current
    /// signature; usually means a caller mutated the state first.
    #[error("state is not registered under its current signature")]
    NotRegistered,

    /// Sorted input violated the non-decreasing order requirement.
    /// `position` is the 1-based index of the offending word.
    #[error("input word at position {position} is lexicographically smaller than its predecessor")]
    OutOfOrder { position: u64 },

    /// The automaton handed to a register rebuild is not minimal
    /// (duplicate state classes or unreachable states).
    #[error("automaton is not minimal: {reason}")]
    NotMinimal { reason: String },

    /// A cyclic automaton was passed where an acyclic one is required.
    #[error("automaton contains a cycle")]
    CyclicInput,

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unsupported format version {version:?}")]
    UnsupportedVersion { version: String },

    #[error("I/O error")]
    Io(#[from] std::io::Error),

    /// I/O failure while streaming words, with the byte offset reached.
    #[error("I/O error at byte offset {offset}")]
    IoAt {
        offset: u64,
        #[source]
        source: std::io::Error,
    },

    /// A construction invariant that should be unreachable was violated.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
