use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// A malformed line in an instance file.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown edge `{0}`")]
    UnknownEdge(String),

    /// Structurally invalid input (bad correspondence, wrong sizes, broken precondition).
    #[error("invalid input: {0}")]
    Invalid(String),

    /// An exponential routine declined to run because the instance exceeds its size guard.
    #[error("refused: {0}")]
    Refused(String),

    /// The source instance is trivially a yes-instance, so no gadget is built.
    #[error("trivial yes-instance: {0}")]
    TrivialYes(String),

    /// No solution of the requested kind exists at all.
    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// True for size-guard refusals (including the trivial-yes notice).
    pub fn is_refusal(&self) -> bool {
        matches!(self, Error::Refused(_) | Error::TrivialYes(_))
    }
}

pub(crate) fn guard(ok: bool, what: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Refused(what()))
    }
}
