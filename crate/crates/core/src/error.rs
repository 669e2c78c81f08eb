use std::fmt;

use thiserror::Error;

/// Witness tuple attached to an axiom failure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness(pub Vec<usize>);

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("malformed table: {0}")]
    Shape(String),

    #[error("addition is not an abelian group: {law} fails at {witness}")]
    NotAbelianGroup { law: &'static str, witness: Witness },

    #[error("multiplication is not associative at {0}")]
    NotAssociative(Witness),

    #[error("element {0} is not a two-sided identity (witness element {1})")]
    NoIdentity(usize, usize),

    #[error("{side} distributivity fails at {witness}")]
    NotDistributive { side: &'static str, witness: Witness },

    #[error("element {0} has no two-sided inverse")]
    NoInverse(usize),

    #[error("unknown built-in name `{0}`")]
    UnknownName(String),

    #[error("operands belong to different group rings")]
    ContextMismatch,

    #[error("left-normed product of an empty sequence")]
    EmptySequence,

    #[error("invalid exponent {0}")]
    InvalidExponent(usize),

    #[error("context has {elements} elements, exhaustive cap is {cap}")]
    TooLarge { elements: u128, cap: u128 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short stable name of the error kind, used by the CLI and the C ABI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Shape(_) => "Shape",
            Error::NotAbelianGroup { .. } => "NotAbelianGroup",
            Error::NotAssociative(_) => "NotAssociative",
            Error::NoIdentity(..) => "NoIdentity",
            Error::NotDistributive { .. } => "NotDistributive",
            Error::NoInverse(_) => "NoInverse",
            Error::UnknownName(_) => "UnknownName",
            Error::ContextMismatch => "ContextMismatch",
            Error::EmptySequence => "EmptySequence",
            Error::InvalidExponent(_) => "InvalidExponent",
            Error::TooLarge { .. } => "TooLarge",
            Error::Parse { .. } => "ParseError",
            Error::Io(_) => "Io",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
