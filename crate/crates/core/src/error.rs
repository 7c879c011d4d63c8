use thiserror::Error;

/// Errors raised by the exact-algebra machinery.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("characteristic zero input: {0}")]
    CharacteristicZero(String),

    #[error("unsupported field: {0}")]
    UnsupportedField(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not a group: {0}")]
    NotAGroup(String),

    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("invalid letter: {0}")]
    InvalidLetter(String),

    #[error("normal forms need injective structure maps: {0}")]
    NonInjective(String),

    #[error("size cap exceeded: {0}")]
    SizeCap(String),

    #[error("not a representation: {0}")]
    NotARepresentation(String),

    #[error("not invertible: {0}")]
    NotInvertible(String),

    #[error("not an intertwiner: {0}")]
    NotAnIntertwiner(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("element is not coherent: {0}")]
    NotCoherent(String),

    #[error("missing component: {0}")]
    MissingComponent(String),

    #[error("sequence is not exact: {0}")]
    NotExact(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("not an open set: {0}")]
    NotOpen(String),

    #[error("disconnected: {0}")]
    Disconnected(String),

    #[error("invalid local system: {0}")]
    InvalidLocalSystem(String),

    #[error("fundamental group rank mismatch: {0}")]
    RankMismatch(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
