use thiserror::Error;

/// Errors raised by graph, word and automaton operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),

    #[error("self-loop on vertex `{0}` is not allowed in a simple graph")]
    SelfLoop(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid word token `{token}`: {reason}")]
    InvalidWord { token: String, reason: String },

    #[error("generator `{0}` is outside the restricting vertex set")]
    OutsideSubset(String),

    #[error(
        "pattern is not in the explicit catalog; for a general graph, an embedding of \
         PC-groups cannot be read off from full subgraphs"
    )]
    NotExplicit,

    #[error("automata are over different alphabets ({left:?} vs {right:?})")]
    AlphabetMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("certificate construction failed for m = {m}: {reason}")]
    Certificate { m: u32, reason: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
